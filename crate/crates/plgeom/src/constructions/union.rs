//! Extremal union instances: two convex polygons inscribed in one circle
//! with interleaved vertices, then reshaped to spend concave budgets.
//!
//! Stage 1 places vertices at rational circle points in counterclockwise
//! order, alternating ownership along the first 2*c1 positions so the
//! boundaries cross 2*c1 times. Stage 2 dents edges of the bigger polygon
//! toward an interior point of the overlap; each dent vertex is buried in
//! the other polygon and buys two more crossings. Stage 3 pushes midpoints
//! of exposed boundary pieces slightly inward, one new union vertex per
//! push. Dent depths and push distances are found by certified halving.

use crate::bounds::union_bound;
use crate::plf::VertexCensus;
use crate::polygon::{
    polygon_intersection, polygon_union, BooleanStatus, PolygonBooleanResult, SimplePolygon,
    SplitBoundary,
};
use crate::predicates::{point_on_segment, segment_intersection, SegmentIntersection};
use crate::rational::{Point2, Rational};

use super::{segment_param, ConstructionTrace, InfeasibleParams};

/// Rational point on the circle of radius 10 at parameter `t`, angle
/// increasing with `t`.
fn circle_point(t: i64) -> Point2 {
    let t = Rational::from_int(t);
    let t2 = &t * &t;
    let denom = Rational::one() + &t2;
    let x = Rational::from_int(10) * &(&(Rational::one() - &t2) / &denom);
    let y = Rational::from_int(20) * &(&t / &denom);
    Point2::new(x, y)
}

fn union_of(p1: &SimplePolygon, p2: &SimplePolygon) -> PolygonBooleanResult {
    let res = polygon_union(p1, p2).expect("construction keeps contacts transversal");
    assert_eq!(res.status, BooleanStatus::Simple);
    res
}

/// Parameter along `[a, q]` of the single boundary crossing of a convex
/// polygon containing `q` but not `a`.
fn crossing_param(a: &Point2, q: &Point2, convex: &SimplePolygon) -> Rational {
    let mut best: Option<Rational> = None;
    for i in 0..convex.len() {
        let (u, v) = convex.edge(i);
        let params = match segment_intersection((a, q), (u, v)) {
            SegmentIntersection::Empty => vec![],
            SegmentIntersection::Point(p) => vec![segment_param(a, q, &p)],
            SegmentIntersection::Overlap(p, r) => {
                vec![segment_param(a, q, &p), segment_param(a, q, &r)]
            }
        };
        for s in params {
            if best.as_ref().is_none_or(|b| s > *b) {
                best = Some(s);
            }
        }
    }
    best.expect("segment into the interior crosses the boundary")
}

/// Replaces the edge leaving `a` by two edges through a dent vertex on
/// the open segment from `a` to `q`, placed deep enough to poke into the
/// other polygon. Certifies two extra union vertices and returns the dent.
fn dent(
    p2: &mut SimplePolygon,
    p1: &SimplePolygon,
    a: &Point2,
    q: &Point2,
    c_total: usize,
) -> Point2 {
    let before = p2.census();
    let want = VertexCensus::new(before.c, before.r + 1);
    let prev_n0 = union_of(p1, p2).components[0].polygon.census().n;
    let sz = crossing_param(a, q, p1);
    let one = Rational::one();
    let mut s = Rational::mid(&sz, &one);
    for _ in 0..64 {
        let d = a.lerp(q, &s);
        let mut verts = p2.vertices().to_vec();
        let at = verts
            .iter()
            .position(|v| v == a)
            .expect("dent anchor is a vertex")
            + 1;
        verts.insert(at, d.clone());
        if let Ok(cand) = SimplePolygon::new(verts) {
            if cand.census() == want {
                if let Ok(res) = polygon_union(p1, &cand) {
                    if res.status == BooleanStatus::Simple {
                        let cen = res.components[0].polygon.census();
                        if cen.n == prev_n0 + 2 && cen.c == c_total {
                            *p2 = cand;
                            return d;
                        }
                    }
                }
            }
        }
        s = Rational::mid(&sz, &s);
    }
    panic!("dent depth failed to certify after 64 halvings");
}

/// Midpoint of the longest boundary piece the target polygon contributes
/// to the union, and the edge index it lies on.
fn push_site(target: &SimplePolygon, split: &SplitBoundary) -> (Point2, usize) {
    let mut best: Option<(Rational, Point2)> = None;
    for i in 0..split.points.len() {
        if !split.on_result[i] {
            continue;
        }
        let (u, v) = split.piece(i);
        let dx = &v.x - &u.x;
        let dy = &v.y - &u.y;
        let len2 = &dx * &dx + &dy * &dy;
        if best.as_ref().is_none_or(|(l, _)| len2 > *l) {
            best = Some((len2, u.midpoint(v)));
        }
    }
    let e = best.expect("the polygon contributes at least one piece").1;
    let edge = (0..target.len())
        .find(|&j| {
            let (u, v) = target.edge(j);
            point_on_segment(&e, u, v)
        })
        .expect("piece midpoint lies on an input edge");
    (e, edge)
}

/// Pushes the midpoint of the target's longest exposed piece slightly into
/// the polygon, certifying one extra concave vertex on the union.
fn push_inward(
    target: &mut SimplePolygon,
    fixed: &SimplePolygon,
    target_is_first: bool,
    c_total: usize,
) -> Point2 {
    let (first, second): (&SimplePolygon, &SimplePolygon) = if target_is_first {
        (target, fixed)
    } else {
        (fixed, target)
    };
    let res = union_of(first, second);
    let split = if target_is_first {
        &res.split1
    } else {
        &res.split2
    };
    let (e, edge) = push_site(target, split);
    let prev_n0 = res.components[0].polygon.census().n;
    let before = target.census();
    let want = VertexCensus::new(before.c, before.r + 1);
    let (u, v) = target.edge(edge);
    let normal = (&u.y - &v.y, &v.x - &u.x);
    let half = Rational::ratio(1, 2);
    let mut delta = Rational::ratio(1, 8);
    for _ in 0..64 {
        let moved = Point2::new(&e.x + &(&normal.0 * &delta), &e.y + &(&normal.1 * &delta));
        let mut verts = target.vertices().to_vec();
        verts.insert(edge + 1, moved.clone());
        if let Ok(cand) = SimplePolygon::new(verts) {
            if cand.census() == want {
                let pair = if target_is_first {
                    polygon_union(&cand, fixed)
                } else {
                    polygon_union(fixed, &cand)
                };
                if let Ok(res) = pair {
                    if res.status == BooleanStatus::Simple {
                        let cen = res.components[0].polygon.census();
                        if cen.n == prev_n0 + 1 && cen.c == c_total {
                            *target = cand;
                            return moved;
                        }
                    }
                }
            }
        }
        delta = delta * &half;
    }
    panic!("inward push failed to certify after 64 halvings");
}

/// Builds two polygons whose union meets the union vertex bound exactly,
/// with the trace of how they were assembled.
///
/// The pair is relabeled on entry so the first polygon carries the smaller
/// convex count. Simple polygons need at least three convex vertices, so
/// `c1 < 3` or `c2 < 3` is infeasible.
pub fn build_union_extremal(
    c1: usize,
    c2: usize,
    r1: usize,
    r2: usize,
) -> Result<(SimplePolygon, SimplePolygon, ConstructionTrace), InfeasibleParams> {
    let ((c1, r1), (c2, r2)) = if c1 <= c2 {
        ((c1, r1), (c2, r2))
    } else {
        ((c2, r2), (c1, r1))
    };
    if c1 < 3 {
        return Err(InfeasibleParams(format!(
            "a simple polygon has at least 3 convex vertices, got ({c1}, {c2})"
        )));
    }
    let mut trace = ConstructionTrace::new(&[("c1", c1), ("c2", c2), ("r1", r1), ("r2", r2)]);

    // Counterclockwise circle order: a1^2, a1^1, ..., a_c1^2, a_c1^1,
    // then the remaining second-polygon vertices a_{c1+1}^2 ... a_c2^2.
    let verts1: Vec<Point2> = (1..=c1 as i64).map(|j| circle_point(2 * j)).collect();
    let mut verts2: Vec<Point2> = (1..=c1 as i64).map(|j| circle_point(2 * j - 1)).collect();
    verts2.extend((c1 as i64 + 1..=c2 as i64).map(|j| circle_point(c1 as i64 + j)));
    let mut base_points = verts2.clone();
    base_points.extend(verts1.iter().cloned());
    let mut p1 = SimplePolygon::new(verts1).expect("distinct circle points in convex position");
    let mut p2 = SimplePolygon::new(verts2).expect("distinct circle points in convex position");
    let c_total = c1 + c2;

    let base = union_of(&p1, &p2);
    let base_census = base.components[0].polygon.census();
    assert_eq!(
        base_census.n,
        3 * c1 + c2,
        "the interleaved base crosses 2*c1 times"
    );
    assert_eq!(base_census.c, c_total);
    trace.stage("circle points", base_points);

    let overlap = polygon_intersection(&p1, &p2).expect("interleaved bases cross cleanly");
    assert_eq!(overlap.status, BooleanStatus::Simple);
    let inner = &overlap.components[0].polygon;
    let mut qx = Rational::zero();
    let mut qy = Rational::zero();
    for v in inner.vertices() {
        qx = qx + &v.x;
        qy = qy + &v.y;
    }
    let count = Rational::from_int(inner.len() as i64);
    let q = Point2::new(qx / &count, qy / &count);
    trace.aux("q".to_string(), q.clone());

    let z = r2.min(c2 - c1);
    let mut dents = Vec::new();
    for i in 1..=z {
        let anchor = circle_point(c1 as i64 + (c1 + i) as i64);
        let d = dent(&mut p2, &p1, &anchor, &q, c_total);
        trace.aux(format!("d{i}"), d.clone());
        dents.push(d);
    }
    trace.stage("dents", dents);

    let pushes1: Vec<Point2> = (0..r1)
        .map(|_| push_inward(&mut p1, &p2, true, c_total))
        .collect();
    let pushes2: Vec<Point2> = (0..r2 - z)
        .map(|_| push_inward(&mut p2, &p1, false, c_total))
        .collect();
    for (i, e) in pushes1.iter().chain(&pushes2).enumerate() {
        trace.aux(format!("e{}", i + 1), e.clone());
    }
    trace.stage("first polygon pushes", pushes1);
    trace.stage("second polygon pushes", pushes2);

    assert_eq!(p1.census(), VertexCensus::new(c1, r1));
    assert_eq!(p2.census(), VertexCensus::new(c2, r2));
    let res = union_of(&p1, &p2);
    let achieved = res.components[0].polygon.census();
    let bound = union_bound(c1 + r1, c1, c2 + r2, c2).expect("censuses are consistent");
    assert_eq!(
        achieved.n, bound.n_bound,
        "construction must meet the bound"
    );
    assert_eq!(achieved.c, c_total);
    trace.expected_n0 = achieved.n;
    trace.expected_secondary = achieved.c;
    Ok((p1, p2, trace))
}
