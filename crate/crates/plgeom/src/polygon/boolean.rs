//! Union and intersection of simple polygons by exact boundary tracing.
//!
//! Both operations share one pipeline: split each boundary at every point
//! where it meets the other, classify the resulting directed pieces, keep
//! the ones that lie on the result, and stitch them back into cycles.
//! Each counterclockwise cycle becomes a boundary component together with
//! its minimal cyclic breakpoint decomposition; a clockwise cycle is a
//! hole and flips the status instead.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{drop_collinear, twice_signed_area, PointLocation, PolygonError, SimplePolygon};
use crate::plf::Owner;
use crate::predicates::{point_on_segment, segment_intersection, SegmentIntersection};
use crate::rational::Point2;

/// Shape of a traced boolean result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BooleanStatus {
    /// Exactly one counterclockwise boundary cycle and no holes.
    Simple,
    /// Two or more disjoint components, none with a hole.
    MultipleComponents,
    /// At least one clockwise cycle: the region encloses a hole.
    HasHole,
    /// No boundary at all (only possible for intersections).
    Empty,
}

/// Cyclic analogue of the envelope decomposition. Breakpoints are listed
/// in boundary order starting from the lexicographically least; arc `t`
/// runs from breakpoint `t` to breakpoint `t + 1` (wrapping) and is owned
/// by `arc_owners[t]`. An empty breakpoint list means the whole cycle lies
/// on a single input boundary, named by the one entry of `arc_owners`.
///
/// `k1c` counts arcs of the first input containing one of its convex
/// vertices in their interior, `k1r` the remaining first-input arcs, and
/// `k2c`/`k2r` the same for the second input. For intersections the roles
/// flip: an arc is in the `r` class when its interior contains a concave
/// vertex of its owner, otherwise in the `c` class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicDecomposition {
    pub breakpoints: Vec<Point2>,
    pub arc_owners: Vec<Owner>,
    pub k1c: usize,
    pub k1r: usize,
    pub k2c: usize,
    pub k2r: usize,
}

impl CyclicDecomposition {
    pub fn k(&self) -> usize {
        self.breakpoints.len()
    }

    /// (arcs owned by the first input, arcs owned by the second input).
    pub fn owner_counts(&self) -> (usize, usize) {
        (self.k1c + self.k1r, self.k2c + self.k2r)
    }
}

/// One simple component of a boolean result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryComponent {
    pub polygon: SimplePolygon,
    pub decomposition: CyclicDecomposition,
}

/// An input boundary subdivided at every meeting point with the other
/// polygon. Piece `i` runs from `points[i]` to the cyclically next point;
/// `on_result[i]` says whether that piece survived onto the result.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SplitBoundary {
    pub points: Vec<Point2>,
    pub on_result: Vec<bool>,
}

impl SplitBoundary {
    /// Endpoints of piece `i`.
    pub fn piece(&self, i: usize) -> (&Point2, &Point2) {
        (&self.points[i], &self.points[(i + 1) % self.points.len()])
    }
}

/// Result of a polygon union or intersection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonBooleanResult {
    pub components: Vec<BoundaryComponent>,
    pub status: BooleanStatus,
    /// First input boundary split at all meeting points; not serialized.
    #[serde(skip)]
    pub split1: SplitBoundary,
    /// Second input boundary split at all meeting points; not serialized.
    #[serde(skip)]
    pub split2: SplitBoundary,
}

impl PolygonBooleanResult {
    /// Total vertex count over all components.
    pub fn vertex_count(&self) -> usize {
        self.components.iter().map(|c| c.polygon.len()).sum()
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum BoolOp {
    Union,
    Intersection,
}

/// Traces the boundary of the union of two simple polygons.
///
/// Fails with `BoundaryDegenerate` when the boundaries touch without
/// crossing transversally or sharing a full segment around the contact,
/// since the result is not a clean region there.
pub fn polygon_union(
    p1: &SimplePolygon,
    p2: &SimplePolygon,
) -> Result<PolygonBooleanResult, PolygonError> {
    trace_boolean(p1, p2, BoolOp::Union)
}

/// Traces the boundary of the intersection of two simple polygons.
/// Degenerate contacts are rejected exactly as for [`polygon_union`].
pub fn polygon_intersection(
    p1: &SimplePolygon,
    p2: &SimplePolygon,
) -> Result<PolygonBooleanResult, PolygonError> {
    trace_boolean(p1, p2, BoolOp::Intersection)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum PieceClass {
    Inside,
    Outside,
    SharedSame,
    SharedOpposite,
}

struct DirPiece {
    a: Point2,
    b: Point2,
    // 1 = first boundary, 2 = second, 3 = shared segment on both.
    mask: u8,
}

fn trace_boolean(
    p1: &SimplePolygon,
    p2: &SimplePolygon,
    op: BoolOp,
) -> Result<PolygonBooleanResult, PolygonError> {
    check_contacts(p1, p2)?;

    let split1 = split_points(p1, p2);
    let split2 = split_points(p2, p1);
    let n1 = split1.len();
    let n2 = split2.len();

    let norm_key = |a: &Point2, b: &Point2| -> (Point2, Point2) {
        if a <= b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        }
    };
    let mut by_key: BTreeMap<(Point2, Point2), usize> = BTreeMap::new();
    for j in 0..n2 {
        by_key.insert(norm_key(&split2[j], &split2[(j + 1) % n2]), j);
    }

    // Shared segments show up as the same undirected piece on both split
    // boundaries, so an exact key lookup finds them all. Everything else
    // is strictly on one side of the other polygon and its midpoint says
    // which.
    let mut class1: Vec<PieceClass> = Vec::with_capacity(n1);
    let mut class2: Vec<Option<PieceClass>> = vec![None; n2];
    for i in 0..n1 {
        let a = &split1[i];
        let b = &split1[(i + 1) % n1];
        if let Some(&j) = by_key.get(&norm_key(a, b)) {
            let same = &split2[j] == a;
            class1.push(if same {
                PieceClass::SharedSame
            } else {
                PieceClass::SharedOpposite
            });
            class2[j] = Some(if same {
                PieceClass::SharedSame
            } else {
                PieceClass::SharedOpposite
            });
        } else {
            class1.push(side_class(p2, a, b));
        }
    }
    let class2: Vec<PieceClass> = (0..n2)
        .map(|j| class2[j].unwrap_or_else(|| side_class(p1, &split2[j], &split2[(j + 1) % n2])))
        .collect();

    let kept1: Vec<bool> = class1.iter().map(|&c| keep_piece(op, c, true)).collect();
    let kept2: Vec<bool> = class2.iter().map(|&c| keep_piece(op, c, false)).collect();

    let mut pieces: Vec<DirPiece> = Vec::new();
    for i in 0..n1 {
        if kept1[i] {
            pieces.push(DirPiece {
                a: split1[i].clone(),
                b: split1[(i + 1) % n1].clone(),
                mask: if class1[i] == PieceClass::SharedSame {
                    3
                } else {
                    1
                },
            });
        }
    }
    for j in 0..n2 {
        if kept2[j] {
            pieces.push(DirPiece {
                a: split2[j].clone(),
                b: split2[(j + 1) % n2].clone(),
                mask: 2,
            });
        }
    }

    // Every node must be crossed by exactly one incoming and one outgoing
    // kept piece, otherwise the result pinches at that point.
    let mut nodes: BTreeMap<Point2, (Vec<usize>, usize)> = BTreeMap::new();
    for (id, pc) in pieces.iter().enumerate() {
        nodes.entry(pc.a.clone()).or_default().0.push(id);
        nodes.entry(pc.b.clone()).or_default().1 += 1;
    }
    for (pt, (outs, ins)) in &nodes {
        if outs.len() != 1 || *ins != 1 {
            return Err(PolygonError::BoundaryDegenerate { at: pt.clone() });
        }
    }

    let mut order: Vec<usize> = (0..pieces.len()).collect();
    order.sort_by(|&x, &y| (&pieces[x].a, &pieces[x].b).cmp(&(&pieces[y].a, &pieces[y].b)));

    let mut used = vec![false; pieces.len()];
    let mut components = Vec::new();
    let mut holes = 0usize;
    for &start in &order {
        if used[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut cur = start;
        loop {
            used[cur] = true;
            cycle.push(cur);
            let next = nodes[&pieces[cur].b].0[0];
            if next == start {
                break;
            }
            cur = next;
        }
        let chain: Vec<Point2> = cycle.iter().map(|&id| pieces[id].a.clone()).collect();
        let masks: Vec<u8> = cycle.iter().map(|&id| pieces[id].mask).collect();
        if twice_signed_area(&chain).is_negative() {
            holes += 1;
            continue;
        }
        let polygon = SimplePolygon::new(drop_collinear(&chain))
            .expect("a traced counterclockwise cycle is a simple polygon");
        let decomposition = cyclic_decomposition(&chain, &masks, op, p1, p2);
        components.push(BoundaryComponent {
            polygon,
            decomposition,
        });
    }

    let status = if holes > 0 {
        BooleanStatus::HasHole
    } else if components.is_empty() {
        BooleanStatus::Empty
    } else if components.len() > 1 {
        BooleanStatus::MultipleComponents
    } else {
        BooleanStatus::Simple
    };

    let on1: Vec<bool> = (0..n1)
        .map(|i| kept1[i] || class1[i] == PieceClass::SharedSame)
        .collect();
    let on2: Vec<bool> = (0..n2)
        .map(|j| kept2[j] || class2[j] == PieceClass::SharedSame)
        .collect();
    Ok(PolygonBooleanResult {
        components,
        status,
        split1: SplitBoundary {
            points: split1,
            on_result: on1,
        },
        split2: SplitBoundary {
            points: split2,
            on_result: on2,
        },
    })
}

// A piece off the shared set never touches the other boundary except at
// its endpoints, so its midpoint decides the side for the whole piece.
fn side_class(other: &SimplePolygon, a: &Point2, b: &Point2) -> PieceClass {
    match other.contains(&a.midpoint(b)) {
        PointLocation::Interior => PieceClass::Inside,
        PointLocation::Exterior => PieceClass::Outside,
        PointLocation::Boundary => {
            unreachable!("midpoint of a non-shared piece lies on the other boundary")
        }
    }
}

fn keep_piece(op: BoolOp, class: PieceClass, from_first: bool) -> bool {
    match class {
        PieceClass::Outside => op == BoolOp::Union,
        PieceClass::Inside => op == BoolOp::Intersection,
        // Shared same-direction segments bound both regions and the result;
        // keep the first boundary's copy only, so nodes stay degree one.
        PieceClass::SharedSame => from_first,
        // Opposite-direction shared segments have interior on both sides
        // for the union and exterior for the intersection; never boundary.
        PieceClass::SharedOpposite => false,
    }
}

// Rejects boundary contacts that are not locally two transversal arcs or
// a shared segment. A vertex of one polygon sitting on the other boundary
// is fine only when some incident edge overlaps collinearly across it.
fn check_contacts(p1: &SimplePolygon, p2: &SimplePolygon) -> Result<(), PolygonError> {
    for (poly, other) in [(p1, p2), (p2, p1)] {
        let n = poly.len();
        for i in 0..n {
            let v = &poly.vertices()[i];
            if other.contains(v) != PointLocation::Boundary {
                continue;
            }
            let prev = &poly.vertices()[(i + n - 1) % n];
            let next = &poly.vertices()[(i + 1) % n];
            let mut excused = false;
            'search: for e in [(prev, v), (v, next)] {
                for j in 0..other.len() {
                    if let SegmentIntersection::Overlap(p, q) =
                        segment_intersection(e, other.edge(j))
                    {
                        if point_on_segment(v, &p, &q) {
                            excused = true;
                            break 'search;
                        }
                    }
                }
            }
            if !excused {
                return Err(PolygonError::BoundaryDegenerate { at: v.clone() });
            }
        }
    }
    Ok(())
}

// Cuts every edge of `poly` at the points where it meets `other`, keeping
// the original orientation. Returns the full cyclic vertex list of the
// split boundary.
fn split_points(poly: &SimplePolygon, other: &SimplePolygon) -> Vec<Point2> {
    let mut out = Vec::new();
    for i in 0..poly.len() {
        let (a, b) = poly.edge(i);
        let mut cuts: Vec<Point2> = Vec::new();
        for j in 0..other.len() {
            match segment_intersection((a, b), other.edge(j)) {
                SegmentIntersection::Empty => {}
                SegmentIntersection::Point(p) => push_cut(&mut cuts, p, a, b),
                SegmentIntersection::Overlap(p, q) => {
                    push_cut(&mut cuts, p, a, b);
                    push_cut(&mut cuts, q, a, b);
                }
            }
        }
        // Lexicographic order restricted to one segment is travel order up
        // to a flip, so a plain sort plus an optional reverse walks a -> b.
        cuts.sort();
        cuts.dedup();
        if a > b {
            cuts.reverse();
        }
        out.push(a.clone());
        out.extend(cuts);
    }
    out
}

fn push_cut(cuts: &mut Vec<Point2>, p: Point2, a: &Point2, b: &Point2) {
    if &p != a && &p != b {
        cuts.push(p);
    }
}

// Minimal cyclic decomposition of one traced cycle into single-boundary
// arcs, plus the per-arc censuses. Greedy maximal runs starting from any
// unshared piece give the minimum breakpoint count; shared pieces extend
// whichever run they touch.
fn cyclic_decomposition(
    chain: &[Point2],
    masks: &[u8],
    op: BoolOp,
    p1: &SimplePolygon,
    p2: &SimplePolygon,
) -> CyclicDecomposition {
    let n = chain.len();
    let common = masks.iter().fold(3u8, |acc, &m| acc & m);
    if common != 0 {
        let owner = if common & 1 != 0 {
            Owner::Graph1
        } else {
            Owner::Graph2
        };
        return CyclicDecomposition {
            breakpoints: Vec::new(),
            arc_owners: vec![owner],
            k1c: 0,
            k1r: 0,
            k2c: 0,
            k2r: 0,
        };
    }

    // No owner covers the whole cycle, so some piece has a single-owner
    // mask; starting there makes the run structure independent of where
    // the traced cycle happened to begin.
    let s = masks
        .iter()
        .position(|&m| m != 3)
        .expect("mixed-mask cycle has a single-owner piece");
    // Runs as (start offset from s, piece count, owner mask).
    let mut runs: Vec<(usize, usize, u8)> = Vec::new();
    let mut run_start = 0usize;
    let mut cand = masks[s];
    for off in 1..n {
        let m = masks[(s + off) % n];
        if cand & m != 0 {
            cand &= m;
        } else {
            debug_assert!(cand == 1 || cand == 2, "run owner resolved before a break");
            runs.push((run_start, off - run_start, cand));
            run_start = off;
            cand = m;
        }
    }
    debug_assert!(cand == 1 || cand == 2);
    if cand & runs[0].2 != 0 {
        // The final run continues across the seam into the first one.
        let (_, first_len, owner) = runs[0];
        runs[0] = (run_start, n - run_start + first_len, owner & cand);
    } else {
        runs.push((run_start, n - run_start, cand));
    }

    let kinds1 = p1.convexity_by_point();
    let kinds2 = p2.convexity_by_point();
    let mut pairs: Vec<(Point2, Owner)> = Vec::new();
    let (mut k1c, mut k1r, mut k2c, mut k2r) = (0, 0, 0, 0);
    for &(off, len, mask) in &runs {
        let owner = if mask == 1 {
            Owner::Graph1
        } else {
            Owner::Graph2
        };
        let kinds = if mask == 1 { &kinds1 } else { &kinds2 };
        // Interior joints of the run; owner vertices there decide the class.
        let mut primary = false;
        for j in 1..len {
            if let Some(&convex) = kinds.get(&chain[(s + off + j) % n]) {
                let hit = match op {
                    BoolOp::Union => convex,
                    BoolOp::Intersection => !convex,
                };
                if hit {
                    primary = true;
                    break;
                }
            }
        }
        match (owner, primary) {
            (Owner::Graph1, true) => {
                if op == BoolOp::Union {
                    k1c += 1
                } else {
                    k1r += 1
                }
            }
            (Owner::Graph1, false) => {
                if op == BoolOp::Union {
                    k1r += 1
                } else {
                    k1c += 1
                }
            }
            (Owner::Graph2, true) => {
                if op == BoolOp::Union {
                    k2c += 1
                } else {
                    k2r += 1
                }
            }
            (Owner::Graph2, false) => {
                if op == BoolOp::Union {
                    k2r += 1
                } else {
                    k2c += 1
                }
            }
        }
        pairs.push((chain[(s + off) % n].clone(), owner));
    }

    // Anchor the cyclic order at the lexicographically least breakpoint.
    let least = pairs
        .iter()
        .enumerate()
        .min_by(|(_, x), (_, y)| x.0.cmp(&y.0))
        .map(|(i, _)| i)
        .expect("mixed-mask cycle has at least two runs");
    pairs.rotate_left(least);

    CyclicDecomposition {
        breakpoints: pairs.iter().map(|(p, _)| p.clone()).collect(),
        arc_owners: pairs.iter().map(|(_, o)| *o).collect(),
        k1c,
        k1r,
        k2c,
        k2r,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn poly(pts: &[(i64, i64)]) -> SimplePolygon {
        SimplePolygon::new(pts.iter().map(|&(x, y)| Point2::from_ints(x, y)).collect()).unwrap()
    }

    fn pt(x: (i64, i64), y: (i64, i64)) -> Point2 {
        Point2::new(Rational::ratio(x.0, x.1), Rational::ratio(y.0, y.1))
    }

    fn upward_triangle() -> SimplePolygon {
        poly(&[(0, 0), (4, 0), (2, 3)])
    }

    fn downward_triangle() -> SimplePolygon {
        poly(&[(0, 2), (4, 2), (2, -1)])
    }

    #[test]
    fn star_union_has_twelve_vertices_and_six_breakpoints() {
        let t1 = upward_triangle();
        let t2 = downward_triangle();
        let res = polygon_union(&t1, &t2).unwrap();

        assert_eq!(res.status, BooleanStatus::Simple);
        assert_eq!(res.components.len(), 1);
        let comp = &res.components[0];
        let census = comp.polygon.census();
        assert_eq!((census.n, census.c, census.r), (12, 6, 6));

        let d = &comp.decomposition;
        assert_eq!(d.k(), 6);
        assert_eq!(
            d.breakpoints,
            vec![
                pt((2, 3), (1, 1)),
                pt((4, 3), (0, 1)),
                pt((8, 3), (0, 1)),
                pt((10, 3), (1, 1)),
                pt((8, 3), (2, 1)),
                pt((4, 3), (2, 1)),
            ]
        );
        assert_eq!(
            d.arc_owners,
            vec![
                Owner::Graph1,
                Owner::Graph2,
                Owner::Graph1,
                Owner::Graph2,
                Owner::Graph1,
                Owner::Graph2,
            ]
        );
        assert_eq!((d.k1c, d.k1r, d.k2c, d.k2r), (3, 0, 3, 0));

        // Six of each triangle's nine pieces lie on the star boundary; the
        // three between crossing pairs are chords inside the other triangle.
        assert_eq!(res.split1.points.len(), 9);
        assert_eq!(res.split1.on_result.iter().filter(|&&b| b).count(), 6);
        assert_eq!(res.split2.on_result.iter().filter(|&&b| b).count(), 6);
    }

    #[test]
    fn star_intersection_is_a_hexagon() {
        let t1 = upward_triangle();
        let t2 = downward_triangle();
        let res = polygon_intersection(&t1, &t2).unwrap();

        assert_eq!(res.status, BooleanStatus::Simple);
        let comp = &res.components[0];
        let census = comp.polygon.census();
        assert_eq!((census.n, census.c, census.r), (6, 6, 0));

        let d = &comp.decomposition;
        assert_eq!(d.k(), 6);
        assert_eq!(
            d.arc_owners,
            vec![
                Owner::Graph2,
                Owner::Graph1,
                Owner::Graph2,
                Owner::Graph1,
                Owner::Graph2,
                Owner::Graph1,
            ]
        );
        assert_eq!((d.k1c, d.k1r, d.k2c, d.k2r), (3, 0, 3, 0));
        assert_eq!(d.breakpoints[0], pt((2, 3), (1, 1)));
    }

    #[test]
    fn rerunning_an_operation_is_deterministic() {
        let t1 = upward_triangle();
        let t2 = downward_triangle();
        let a = polygon_union(&t1, &t2).unwrap();
        let b = polygon_union(&t1, &t2).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn disjoint_squares_union_has_two_components() {
        let p1 = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let p2 = poly(&[(10, 0), (11, 0), (11, 1), (10, 1)]);
        let res = polygon_union(&p1, &p2).unwrap();
        assert_eq!(res.status, BooleanStatus::MultipleComponents);
        assert_eq!(res.components.len(), 2);
        for comp in &res.components {
            assert_eq!(comp.decomposition.k(), 0);
        }
        assert_eq!(
            res.components[0].decomposition.arc_owners,
            vec![Owner::Graph1]
        );
        assert_eq!(
            res.components[1].decomposition.arc_owners,
            vec![Owner::Graph2]
        );
    }

    #[test]
    fn disjoint_squares_intersection_is_empty() {
        let p1 = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let p2 = poly(&[(10, 0), (11, 0), (11, 1), (10, 1)]);
        let res = polygon_intersection(&p1, &p2).unwrap();
        assert_eq!(res.status, BooleanStatus::Empty);
        assert!(res.components.is_empty());
        assert!(res.split1.on_result.iter().all(|&b| !b));
    }

    #[test]
    fn nested_squares_collapse_to_one_input() {
        let inner = poly(&[(2, 2), (4, 2), (4, 4), (2, 4)]);
        let outer = poly(&[(0, 0), (10, 0), (10, 10), (0, 10)]);

        let u = polygon_union(&inner, &outer).unwrap();
        assert_eq!(u.status, BooleanStatus::Simple);
        assert_eq!(u.components[0].polygon, outer);
        assert_eq!(u.components[0].decomposition.k(), 0);
        assert_eq!(
            u.components[0].decomposition.arc_owners,
            vec![Owner::Graph2]
        );

        let i = polygon_intersection(&inner, &outer).unwrap();
        assert_eq!(i.status, BooleanStatus::Simple);
        assert_eq!(i.components[0].polygon, inner);
        assert_eq!(
            i.components[0].decomposition.arc_owners,
            vec![Owner::Graph1]
        );
    }

    #[test]
    fn squares_sharing_a_full_edge_fuse_into_a_rectangle() {
        let p1 = poly(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
        let p2 = poly(&[(2, 0), (4, 0), (4, 2), (2, 2)]);
        let res = polygon_union(&p1, &p2).unwrap();

        assert_eq!(res.status, BooleanStatus::Simple);
        let comp = &res.components[0];
        assert_eq!(comp.polygon, poly(&[(0, 0), (4, 0), (4, 2), (0, 2)]));

        let d = &comp.decomposition;
        assert_eq!(
            d.breakpoints,
            vec![Point2::from_ints(2, 0), Point2::from_ints(2, 2)]
        );
        assert_eq!(d.arc_owners, vec![Owner::Graph2, Owner::Graph1]);
        assert_eq!((d.k1c, d.k1r, d.k2c, d.k2r), (1, 0, 1, 0));
    }

    #[test]
    fn squares_sharing_a_full_edge_have_empty_intersection() {
        let p1 = poly(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
        let p2 = poly(&[(2, 0), (4, 0), (4, 2), (2, 2)]);
        let res = polygon_intersection(&p1, &p2).unwrap();
        assert_eq!(res.status, BooleanStatus::Empty);
    }

    #[test]
    fn squares_sharing_half_an_edge_form_a_staircase() {
        let p1 = poly(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
        let p2 = poly(&[(2, 1), (4, 1), (4, 3), (2, 3)]);
        let res = polygon_union(&p1, &p2).unwrap();

        assert_eq!(res.status, BooleanStatus::Simple);
        let comp = &res.components[0];
        let census = comp.polygon.census();
        assert_eq!((census.n, census.c, census.r), (8, 6, 2));

        let d = &comp.decomposition;
        assert_eq!(
            d.breakpoints,
            vec![Point2::from_ints(2, 1), Point2::from_ints(2, 2)]
        );
        assert_eq!(d.arc_owners, vec![Owner::Graph2, Owner::Graph1]);
        assert_eq!((d.k1c, d.k1r, d.k2c, d.k2r), (1, 0, 1, 0));
    }

    #[test]
    fn crossing_bars_union_and_intersection() {
        let horizontal = poly(&[(0, 1), (3, 1), (3, 2), (0, 2)]);
        let vertical = poly(&[(1, 0), (2, 0), (2, 3), (1, 3)]);

        let u = polygon_union(&horizontal, &vertical).unwrap();
        assert_eq!(u.status, BooleanStatus::Simple);
        let census = u.components[0].polygon.census();
        assert_eq!((census.n, census.c, census.r), (12, 8, 4));
        let d = &u.components[0].decomposition;
        assert_eq!(d.k(), 4);
        assert_eq!((d.k1c, d.k1r, d.k2c, d.k2r), (2, 0, 2, 0));

        let i = polygon_intersection(&horizontal, &vertical).unwrap();
        assert_eq!(i.status, BooleanStatus::Simple);
        assert_eq!(
            i.components[0].polygon,
            poly(&[(1, 1), (2, 1), (2, 2), (1, 2)])
        );
        let d = &i.components[0].decomposition;
        assert_eq!(d.k(), 4);
        assert_eq!(d.breakpoints[0], Point2::from_ints(1, 1));
        assert_eq!(d.arc_owners[0], Owner::Graph1);
        assert_eq!((d.k1c, d.k1r, d.k2c, d.k2r), (2, 0, 2, 0));
    }

    #[test]
    fn capping_a_u_shape_encloses_a_hole() {
        let u_shape = poly(&[
            (0, 0),
            (5, 0),
            (5, 3),
            (4, 3),
            (4, 1),
            (1, 1),
            (1, 3),
            (0, 3),
        ]);
        let cap = poly(&[(-1, 2), (6, 2), (6, 4), (-1, 4)]);
        let res = polygon_union(&u_shape, &cap).unwrap();
        assert_eq!(res.status, BooleanStatus::HasHole);
        assert_eq!(res.components.len(), 1);
    }

    #[test]
    fn transversal_vertex_contact_is_rejected() {
        let t1 = upward_triangle();
        let poke = poly(&[(2, 0), (4, -2), (0, -2)]);
        let err = polygon_union(&t1, &poke).unwrap_err();
        assert_eq!(
            err,
            PolygonError::BoundaryDegenerate {
                at: Point2::from_ints(2, 0)
            }
        );
        let err = polygon_intersection(&t1, &poke).unwrap_err();
        assert_eq!(
            err,
            PolygonError::BoundaryDegenerate {
                at: Point2::from_ints(2, 0)
            }
        );
    }

    #[test]
    fn corner_to_corner_contact_is_rejected() {
        let t1 = upward_triangle();
        let t2 = poly(&[(0, 0), (-4, 0), (-2, -3)]);
        let err = polygon_union(&t1, &t2).unwrap_err();
        assert_eq!(
            err,
            PolygonError::BoundaryDegenerate {
                at: Point2::from_ints(0, 0)
            }
        );
    }

    #[test]
    fn vertex_contact_with_collinear_overlap_is_allowed() {
        // The second square's corners (2, 0) and (2, 2) sit on the first
        // square's right edge, excused by the shared segment through them.
        let p1 = poly(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
        let p2 = poly(&[(2, 0), (4, 0), (4, 2), (2, 2)]);
        assert!(polygon_union(&p1, &p2).is_ok());
    }

    #[test]
    fn membership_of_traced_result_matches_pointwise_logic() {
        let horizontal = poly(&[(0, 1), (3, 1), (3, 2), (0, 2)]);
        let vertical = poly(&[(1, 0), (2, 0), (2, 3), (1, 3)]);
        let union = polygon_union(&horizontal, &vertical).unwrap();
        let inter = polygon_intersection(&horizontal, &vertical).unwrap();

        let in_result = |res: &PolygonBooleanResult, q: &Point2| {
            res.components
                .iter()
                .any(|c| c.polygon.contains(q) == PointLocation::Interior)
        };
        for ix in -1..=4 {
            for iy in -1..=4 {
                // Offsets keep the sample off every input boundary line.
                let q = pt((3 * ix + 1, 3), (5 * iy + 1, 5));
                let in1 = horizontal.contains(&q) == PointLocation::Interior;
                let in2 = vertical.contains(&q) == PointLocation::Interior;
                assert_eq!(in_result(&union, &q), in1 || in2, "union at {q:?}");
                assert_eq!(in_result(&inter, &q), in1 && in2, "intersection at {q:?}");
            }
        }
    }

    #[test]
    fn identical_polygons_union_to_themselves() {
        let t1 = upward_triangle();
        let res = polygon_union(&t1, &t1.clone()).unwrap();
        assert_eq!(res.status, BooleanStatus::Simple);
        assert_eq!(res.components[0].polygon, t1);
        assert_eq!(res.components[0].decomposition.k(), 0);
        assert_eq!(
            res.components[0].decomposition.arc_owners,
            vec![Owner::Graph1]
        );
    }

    #[test]
    fn shared_piece_owner_prefers_the_first_input() {
        // Three of the tall box's edges run along the unit square's, same
        // direction, so the union is the tall box but owned via mask 2.
        let small = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let tall = poly(&[(0, 0), (1, 0), (1, 2), (0, 2)]);
        let u = polygon_union(&small, &tall).unwrap();
        assert_eq!(u.components[0].polygon, tall);
        assert_eq!(
            u.components[0].decomposition.arc_owners,
            vec![Owner::Graph2]
        );

        let i = polygon_intersection(&small, &tall).unwrap();
        assert_eq!(i.components[0].polygon, small);
        assert_eq!(
            i.components[0].decomposition.arc_owners,
            vec![Owner::Graph1]
        );
    }
}
