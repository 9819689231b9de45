//! Extremal intersection instances, built by closing the two chains of an
//! envelope instance into polygons that overlap in a single region.
//!
//! Convexity flips when a chain becomes the upper boundary of a polygon:
//! a chain built for convex count `c'` and concave count `r'` closes into
//! a polygon with `r' + 3` convex and `c'` concave vertices. The chain
//! parameters are chosen so the closed polygons carry the requested
//! censuses, with the second closure taking one of four shapes depending
//! on how the concave budgets differ. The first polygon closes through a
//! deep apex `q`; the second threads its return path near `q` through up
//! to three auxiliary points placed by certified search: the apex depth
//! doubles and the path offsets halve until the traced intersection
//! reproduces the bound.

use crate::bounds::intersection_bound;
use crate::plf::VertexCensus;
use crate::polygon::{polygon_intersection, BooleanStatus, PointLocation, SimplePolygon};
use crate::rational::{Point2, Rational};

use super::envelope::extremal_chains;
use super::{line_intersection, ConstructionTrace, InfeasibleParams};

struct Closure {
    p2: SimplePolygon,
    auxiliary: Vec<(&'static str, Point2)>,
}

/// Tries to close the second chain into a polygon of census `want` whose
/// intersection with `p1` is one simple region meeting `n_bound` and
/// `r_bound` exactly.
#[allow(clippy::too_many_arguments)]
fn close_second(
    chain2: &[Point2],
    p1: &SimplePolygon,
    q: &Point2,
    p: &Point2,
    diff: usize,
    want: VertexCensus,
    n_bound: usize,
    r_bound: usize,
) -> Option<Closure> {
    let a2 = &chain2[0];
    let z2 = &chain2[chain2.len() - 1];
    let p0 = Point2::new(&q.x + &(&q.x - &p.x), &q.y + &(&q.y - &p.y));
    let mut u = Rational::ratio(1, 16);
    let half = Rational::ratio(1, 2);
    let steps = if diff >= 2 { 32 } else { 1 };
    for _ in 0..steps {
        let mut verts = chain2.to_vec();
        let mut auxiliary = vec![("q", q.clone()), ("p", p.clone())];
        match diff {
            0 => {
                let p3 = line_intersection(a2, p, z2, &p0)?;
                verts.push(p3.clone());
                auxiliary.push(("p0", p0.clone()));
                auxiliary.push(("p3", p3));
            }
            1 => {
                verts.push(p.clone());
            }
            2 => {
                let p2s = p.lerp(z2, &u);
                let p3 = line_intersection(a2, p, z2, &p0)?;
                if p1.contains(&p2s) != PointLocation::Interior {
                    u = &u * &half;
                    continue;
                }
                verts.push(p2s.clone());
                verts.push(p3.clone());
                auxiliary.push(("p0", p0.clone()));
                auxiliary.push(("p2", p2s));
                auxiliary.push(("p3", p3));
            }
            _ => {
                let p1s = p.lerp(a2, &u);
                let p2s = p.lerp(z2, &u);
                if p1.contains(&p1s) != PointLocation::Interior
                    || p1.contains(&p2s) != PointLocation::Interior
                {
                    u = &u * &half;
                    continue;
                }
                verts.push(p2s.clone());
                verts.push(p0.clone());
                verts.push(p1s.clone());
                auxiliary.push(("p0", p0.clone()));
                auxiliary.push(("p1", p1s));
                auxiliary.push(("p2", p2s));
            }
        }
        let cand = match SimplePolygon::new(verts) {
            Ok(cand) => cand,
            Err(_) => {
                u = &u * &half;
                continue;
            }
        };
        if cand.census() != want {
            u = &u * &half;
            continue;
        }
        let res = match polygon_intersection(p1, &cand) {
            Ok(res) => res,
            Err(_) => {
                u = &u * &half;
                continue;
            }
        };
        if res.status != BooleanStatus::Simple {
            u = &u * &half;
            continue;
        }
        let cen = res.components[0].polygon.census();
        if cen.n == n_bound && cen.r == r_bound {
            return Some(Closure {
                p2: cand,
                auxiliary,
            });
        }
        u = &u * &half;
    }
    None
}

/// Builds two polygons whose intersection meets the intersection vertex
/// bound exactly, with the trace of how they were assembled.
///
/// The pair is relabeled on entry so the first polygon carries the smaller
/// concave count. Simple polygons need at least three convex vertices, so
/// `c1 < 3` or `c2 < 3` is infeasible.
pub fn build_intersection_extremal(
    r1: usize,
    r2: usize,
    c1: usize,
    c2: usize,
) -> Result<(SimplePolygon, SimplePolygon, ConstructionTrace), InfeasibleParams> {
    let ((r1, c1), (r2, c2)) = if r1 <= r2 {
        ((r1, c1), (r2, c2))
    } else {
        ((r2, c2), (r1, c1))
    };
    if c1 < 3 || c2 < 3 {
        return Err(InfeasibleParams(format!(
            "a simple polygon has at least 3 convex vertices, got ({c1}, {c2})"
        )));
    }
    let mut trace = ConstructionTrace::new(&[("c1", c1), ("c2", c2), ("r1", r1), ("r2", r2)]);

    let diff = r2 - r1;
    let cp2 = match diff {
        0 | 1 => r2,
        2 => r2 - 1,
        _ => r2 - 2,
    };
    let built = extremal_chains(r1, cp2, c1 - 3, c2 - 3);
    let chain1 = built.chain1;
    let chain2 = built.chain2;
    let bound = intersection_bound(c1 + r1, r1, c2 + r2, r2).expect("censuses are consistent");
    let r_total = r1 + r2;

    let mut ymin = chain1[0].y.clone();
    let mut ymax = ymin.clone();
    for v in chain1.iter().chain(&chain2) {
        if v.y < ymin {
            ymin = v.y.clone();
        }
        if v.y > ymax {
            ymax = v.y.clone();
        }
    }
    let height = &ymax - &ymin;
    let mut qx = Rational::mid(&chain1[0].x, &chain1[chain1.len() - 1].x);
    // The apex must stay off the vertical through the second chain's last
    // point, or the return line through p0 degenerates onto p itself.
    if qx == chain2[chain2.len() - 1].x {
        qx = Rational::mid(&chain1[0].x, &qx);
    }
    let two = Rational::from_int(2);
    let half = Rational::ratio(1, 2);

    let mut drop = Rational::from_int(8) * &height;
    for _ in 0..32 {
        let q = Point2::new(qx.clone(), &ymin - &drop);
        let mut v1 = chain1.clone();
        v1.push(q.clone());
        let p1 = match SimplePolygon::new(v1) {
            Ok(p1) if p1.census() == VertexCensus::new(c1, r1) => p1,
            _ => {
                drop = drop * &two;
                continue;
            }
        };
        let mut p_off = &height / &Rational::from_int(16);
        for _ in 0..32 {
            let p = Point2::new(q.x.clone(), &q.y + &p_off);
            if p1.contains(&p) == PointLocation::Interior {
                if let Some(closure) = close_second(
                    &chain2,
                    &p1,
                    &q,
                    &p,
                    diff,
                    VertexCensus::new(c2, r2),
                    bound.n_bound,
                    r_total,
                ) {
                    let mut chain_points = chain1.clone();
                    chain_points.extend_from_slice(&chain2);
                    trace.stage("carrier chains", chain_points);
                    trace.stage("first polygon closure", vec![q.clone()]);
                    trace.stage(
                        "second polygon closure",
                        closure
                            .auxiliary
                            .iter()
                            .filter(|(name, _)| *name != "q")
                            .map(|(_, pt)| pt.clone())
                            .collect(),
                    );
                    for (name, pt) in closure.auxiliary {
                        trace.aux(name.to_string(), pt);
                    }
                    trace.expected_n0 = bound.n_bound;
                    trace.expected_secondary = r_total;
                    assert_eq!(closure.p2.census(), VertexCensus::new(c2, r2));
                    return Ok((p1, closure.p2, trace));
                }
            }
            p_off = p_off * &half;
        }
        drop = drop * &two;
    }
    panic!("closure placement failed to certify after 32 apex depths");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn achieved(p1: &SimplePolygon, p2: &SimplePolygon) -> VertexCensus {
        let res = polygon_intersection(p1, p2).unwrap();
        assert_eq!(res.status, BooleanStatus::Simple);
        res.components[0].polygon.census()
    }

    #[test]
    fn two_triangles_meet_in_a_hexagon() {
        let (p1, p2, trace) = build_intersection_extremal(0, 0, 3, 3).unwrap();
        assert_eq!(p1.census(), VertexCensus::new(3, 0));
        assert_eq!(p2.census(), VertexCensus::new(3, 0));
        assert_eq!(achieved(&p1, &p2), VertexCensus::new(6, 0));
        assert_eq!(trace.expected_n0, 6);
    }

    #[test]
    fn adjacent_concave_budgets_use_the_single_point_return() {
        let (p1, p2, _) = build_intersection_extremal(1, 2, 3, 3).unwrap();
        assert_eq!(p1.census(), VertexCensus::new(3, 1));
        assert_eq!(p2.census(), VertexCensus::new(3, 2));
        let cen = achieved(&p1, &p2);
        assert_eq!(cen.n, 12);
        assert_eq!(cen.r, 3);
    }

    #[test]
    fn wide_concave_spread_uses_the_three_point_return() {
        let (p1, p2, _) = build_intersection_extremal(0, 3, 3, 3).unwrap();
        let cen = achieved(&p1, &p2);
        assert_eq!(cen.n, 12);
        assert_eq!(cen.r, 3);
    }

    #[test]
    fn two_apart_concave_budgets_use_the_two_point_return() {
        let (p1, p2, _) = build_intersection_extremal(1, 3, 4, 3).unwrap();
        assert_eq!(p1.census(), VertexCensus::new(4, 1));
        assert_eq!(p2.census(), VertexCensus::new(3, 3));
        let cen = achieved(&p1, &p2);
        let bound = intersection_bound(5, 1, 6, 3).unwrap();
        assert_eq!(cen.n, bound.n_bound);
        assert_eq!(cen.r, 4);
    }

    #[test]
    fn tiny_convex_counts_are_rejected() {
        assert!(build_intersection_extremal(0, 0, 2, 4).is_err());
        assert!(build_intersection_extremal(0, 0, 4, 2).is_err());
    }

    #[test]
    fn relabeling_swaps_the_returned_pair() {
        let (p1, p2, _) = build_intersection_extremal(3, 1, 5, 4).unwrap();
        let (q1, q2, _) = build_intersection_extremal(1, 3, 4, 5).unwrap();
        assert_eq!(p1, q1);
        assert_eq!(p2, q2);
    }

    #[test]
    fn concave_vertex_sets_stay_disjoint() {
        let (p1, p2, _) = build_intersection_extremal(2, 3, 4, 4).unwrap();
        let r1 = p1.concave_vertices();
        for v in p2.concave_vertices() {
            assert!(!r1.contains(&v));
        }
    }
}
