//! Closed-form complexity bounds for envelopes of two piecewise linear
//! functions and for unions and intersections of two simple polygons, plus
//! exhaustive maximization over census profiles for the census-free forms.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundKind {
    Envelope,
    Union,
    Intersection,
}

/// Which argument of the bound's `min{...}` produced the value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ActiveBranch {
    FirstMin,
    SecondMin,
    Tie,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    /// Bound on the vertex count of the result.
    pub n_bound: usize,
    /// Bound on convex vertices of the result for envelope and union, on
    /// concave vertices for intersection.
    pub secondary_bound: usize,
    pub which_branch: ActiveBranch,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0}")]
pub struct InvalidCensus(pub String);

fn pick(first: usize, second: usize) -> (usize, ActiveBranch) {
    match first.cmp(&second) {
        Ordering::Less => (first, ActiveBranch::FirstMin),
        Ordering::Greater => (second, ActiveBranch::SecondMin),
        Ordering::Equal => (first, ActiveBranch::Tie),
    }
}

/// Vertex bound for the lower or upper envelope of two functions with the
/// given censuses: `n1 + n2 + 1 + min{2c1 + n2 - c2 + 1, c1 + c2}` after
/// relabeling so that `c1 <= c2`.
pub fn envelope_bound(
    n1: usize,
    c1: usize,
    n2: usize,
    c2: usize,
) -> Result<BoundReport, InvalidCensus> {
    if c1 > n1 || c2 > n2 {
        return Err(InvalidCensus(format!(
            "convex counts ({c1}, {c2}) must not exceed vertex counts ({n1}, {n2})"
        )));
    }
    let ((n1, c1), (n2, c2)) = ordered((n1, c1), (n2, c2));
    let (min_val, which_branch) = pick(2 * c1 + n2 - c2 + 1, c1 + c2);
    Ok(BoundReport {
        n_bound: n1 + n2 + 1 + min_val,
        secondary_bound: c1 + c2,
        which_branch,
    })
}

/// Envelope bound maximized over all census splits:
/// `2*n1 + 2*n2 + 1 - floor(|n2 - n1| / 2)`.
pub fn envelope_bound_free(n1: usize, n2: usize) -> usize {
    2 * n1 + 2 * n2 + 1 - n1.abs_diff(n2) / 2
}

/// Vertex bound for the union of two simple polygons:
/// `n1 + n2 + min{2c1 + n2 - c2, c1 + c2}` after relabeling so `c1 <= c2`.
pub fn union_bound(
    n1: usize,
    c1: usize,
    n2: usize,
    c2: usize,
) -> Result<BoundReport, InvalidCensus> {
    if c1 < 3 || c2 < 3 {
        return Err(InvalidCensus(format!(
            "simple polygons have at least 3 convex vertices, got ({c1}, {c2})"
        )));
    }
    if c1 > n1 || c2 > n2 {
        return Err(InvalidCensus(format!(
            "convex counts ({c1}, {c2}) must not exceed vertex counts ({n1}, {n2})"
        )));
    }
    let ((n1, c1), (n2, c2)) = ordered((n1, c1), (n2, c2));
    let (min_val, which_branch) = pick(2 * c1 + n2 - c2, c1 + c2);
    Ok(BoundReport {
        n_bound: n1 + n2 + min_val,
        secondary_bound: c1 + c2,
        which_branch,
    })
}

/// Union bound maximized over all admissible census splits, computed as the
/// exhaustive grid maximum. The two closed-form candidates disagree for odd
/// `|n1 - n2|`; see [`union_bound_free_report`] for both readings.
pub fn union_bound_free(n1: usize, n2: usize) -> usize {
    grid_maximize(BoundKind::Union, n1, n2).0
}

/// The grid truth for the free union bound next to both closed forms
/// `2n1 + 2n2 - floor(m/2)` and `2n1 + 2n2 - ceil(m/2)` where `m = |n1 - n2|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnionFreeReport {
    pub grid_max: usize,
    pub floor_form: usize,
    pub ceil_form: usize,
    pub matches_floor: bool,
    pub matches_ceil: bool,
}

pub fn union_bound_free_report(n1: usize, n2: usize) -> UnionFreeReport {
    let m = n1.abs_diff(n2);
    let grid_max = union_bound_free(n1, n2);
    let floor_form = 2 * n1 + 2 * n2 - m / 2;
    let ceil_form = 2 * n1 + 2 * n2 - m.div_ceil(2);
    UnionFreeReport {
        grid_max,
        floor_form,
        ceil_form,
        matches_floor: grid_max == floor_form,
        matches_ceil: grid_max == ceil_form,
    }
}

/// Vertex bound for a simple-polygon component of an intersection:
/// `n1 + n2 + min{2r1 + n2 - r2, r1 + r2}` after relabeling so `r1 <= r2`.
pub fn intersection_bound(
    n1: usize,
    r1: usize,
    n2: usize,
    r2: usize,
) -> Result<BoundReport, InvalidCensus> {
    if n1 < r1 + 3 || n2 < r2 + 3 {
        return Err(InvalidCensus(format!(
            "concave counts ({r1}, {r2}) must leave at least 3 convex vertices in ({n1}, {n2})"
        )));
    }
    let ((n1, r1), (n2, r2)) = ordered((n1, r1), (n2, r2));
    let (min_val, which_branch) = pick(2 * r1 + n2 - r2, r1 + r2);
    Ok(BoundReport {
        n_bound: n1 + n2 + min_val,
        secondary_bound: r1 + r2,
        which_branch,
    })
}

/// Intersection bound maximized over all admissible census splits:
/// `2n1 + 2n2 - 6 - max{floor(|n1 - n2| / 2) - 1, 0}`.
pub fn intersection_bound_free(n1: usize, n2: usize) -> usize {
    assert!(n1 >= 3 && n2 >= 3, "polygons have at least 3 vertices");
    let penalty = (n1.abs_diff(n2) / 2).saturating_sub(1);
    2 * n1 + 2 * n2 - 6 - penalty
}

// Relabel so the secondary census of the first pair is the smaller one.
// Ties break on the vertex count so the report is symmetric in its inputs.
fn ordered(a: (usize, usize), b: (usize, usize)) -> ((usize, usize), (usize, usize)) {
    if (a.1, a.0) <= (b.1, b.0) {
        (a, b)
    } else {
        (b, a)
    }
}

/// Exhaustive maximum of one of the closed-form bounds over the admissible
/// census grid for fixed vertex counts, with every maximizing census pair.
pub fn grid_maximize(kind: BoundKind, n1: usize, n2: usize) -> (usize, Vec<(usize, usize)>) {
    let (lo1, hi1, lo2, hi2) = match kind {
        BoundKind::Envelope => (0, n1, 0, n2),
        BoundKind::Union => {
            assert!(n1 >= 3 && n2 >= 3, "polygons have at least 3 vertices");
            (3, n1, 3, n2)
        }
        BoundKind::Intersection => {
            assert!(n1 >= 3 && n2 >= 3, "polygons have at least 3 vertices");
            (0, n1 - 3, 0, n2 - 3)
        }
    };
    let eval = |s1: usize, s2: usize| -> usize {
        let report = match kind {
            BoundKind::Envelope => envelope_bound(n1, s1, n2, s2),
            BoundKind::Union => union_bound(n1, s1, n2, s2),
            BoundKind::Intersection => intersection_bound(n1, s1, n2, s2),
        };
        report.expect("grid ranges stay admissible").n_bound
    };
    let mut best = 0;
    let mut argmax = Vec::new();
    for s1 in lo1..=hi1 {
        for s2 in lo2..=hi2 {
            let v = eval(s1, s2);
            match v.cmp(&best) {
                Ordering::Greater => {
                    best = v;
                    argmax.clear();
                    argmax.push((s1, s2));
                }
                Ordering::Equal => argmax.push((s1, s2)),
                Ordering::Less => {}
            }
        }
    }
    (best, argmax)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn env(n1: usize, c1: usize, n2: usize, c2: usize) -> BoundReport {
        envelope_bound(n1, c1, n2, c2).unwrap()
    }

    fn uni(n1: usize, c1: usize, n2: usize, c2: usize) -> BoundReport {
        union_bound(n1, c1, n2, c2).unwrap()
    }

    fn int(n1: usize, r1: usize, n2: usize, r2: usize) -> BoundReport {
        intersection_bound(n1, r1, n2, r2).unwrap()
    }

    #[test]
    fn envelope_bound_values() {
        let r = env(0, 0, 0, 0);
        assert_eq!((r.n_bound, r.secondary_bound), (1, 0));
        assert_eq!(r.which_branch, ActiveBranch::SecondMin);

        let r = env(1, 1, 1, 1);
        assert_eq!((r.n_bound, r.secondary_bound), (5, 2));

        let r = env(2, 1, 3, 2);
        assert_eq!((r.n_bound, r.secondary_bound), (9, 3));
        assert_eq!(r.which_branch, ActiveBranch::SecondMin);
    }

    #[test]
    fn envelope_bound_free_values() {
        assert_eq!(envelope_bound_free(3, 3), 13);
        assert_eq!(envelope_bound_free(0, 0), 1);
        assert_eq!(envelope_bound_free(2, 5), 14);
    }

    #[test]
    fn union_bound_values() {
        assert_eq!(uni(3, 3, 3, 3).n_bound, 12);
        assert_eq!(uni(4, 3, 5, 4).n_bound, 16);
        let r = uni(3, 3, 100, 3);
        assert_eq!(r.n_bound, 109);
        assert_eq!(r.which_branch, ActiveBranch::SecondMin);
    }

    #[test]
    fn union_bound_free_values() {
        assert_eq!(union_bound_free(3, 3), 12);
        assert_eq!(union_bound_free(3, 4), 13);
        assert_eq!(union_bound_free(6, 6), 24);
    }

    #[test]
    fn union_free_report_flags_the_odd_gap_disagreement() {
        let r = union_bound_free_report(3, 4);
        assert_eq!(r.grid_max, 13);
        assert_eq!(r.floor_form, 14);
        assert_eq!(r.ceil_form, 13);
        assert!(r.matches_ceil && !r.matches_floor);

        let r = union_bound_free_report(5, 5);
        assert!(r.matches_ceil && r.matches_floor);
    }

    #[test]
    fn intersection_bound_values() {
        let r = int(3, 0, 3, 0);
        assert_eq!((r.n_bound, r.secondary_bound), (6, 0));
        let r = int(6, 2, 7, 3);
        assert_eq!((r.n_bound, r.secondary_bound), (18, 5));
        assert_eq!(int(4, 1, 4, 1).n_bound, 10);
    }

    #[test]
    fn intersection_bound_free_values() {
        assert_eq!(intersection_bound_free(3, 3), 6);
        assert_eq!(intersection_bound_free(6, 6), 18);
        assert_eq!(intersection_bound_free(4, 9), 19);
    }

    #[test]
    fn grid_maximize_agrees_with_examples() {
        let (max, argmax) = grid_maximize(BoundKind::Envelope, 3, 3);
        assert_eq!(max, 13);
        assert!(argmax.contains(&(3, 3)));

        let (max, _) = grid_maximize(BoundKind::Union, 3, 4);
        assert_eq!(max, 13);

        let (max, argmax) = grid_maximize(BoundKind::Intersection, 3, 3);
        assert_eq!(max, 6);
        assert_eq!(argmax, vec![(0, 0)]);
    }

    #[test]
    fn free_forms_equal_grid_maxima_on_small_range() {
        for n1 in 0..=12 {
            for n2 in 0..=12 {
                assert_eq!(
                    envelope_bound_free(n1, n2),
                    grid_maximize(BoundKind::Envelope, n1, n2).0,
                    "envelope ({n1}, {n2})"
                );
                if n1 >= 3 && n2 >= 3 {
                    assert_eq!(
                        intersection_bound_free(n1, n2),
                        grid_maximize(BoundKind::Intersection, n1, n2).0,
                        "intersection ({n1}, {n2})"
                    );
                    let m = n1.abs_diff(n2);
                    assert_eq!(
                        union_bound_free(n1, n2),
                        2 * n1 + 2 * n2 - m.div_ceil(2),
                        "union ({n1}, {n2})"
                    );
                }
            }
        }
    }

    #[test]
    fn bounds_are_symmetric_in_the_input_pairs() {
        for n1 in 0..=7 {
            for c1 in 0..=n1 {
                for n2 in 0..=7 {
                    for c2 in 0..=n2 {
                        assert_eq!(env(n1, c1, n2, c2), env(n2, c2, n1, c1));
                        if c1 >= 3 && c2 >= 3 {
                            assert_eq!(uni(n1, c1, n2, c2), uni(n2, c2, n1, c1));
                        }
                        if n1 >= c1 + 3 && n2 >= c2 + 3 {
                            assert_eq!(int(n1, c1, n2, c2), int(n2, c2, n1, c1));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bound_grows_with_vertex_count() {
        for n1 in 0..=6 {
            for c1 in 0..=n1 {
                for c2 in 0..=3 {
                    for n2 in c2..=6 {
                        let lo = env(n1, c1, n2, c2).n_bound;
                        let hi = env(n1, c1, n2 + 1, c2).n_bound;
                        assert!(lo <= hi);
                    }
                }
            }
        }
    }

    #[test]
    fn invalid_censuses_are_rejected() {
        assert!(envelope_bound(3, 4, 3, 0).is_err());
        assert!(union_bound(5, 2, 5, 3).is_err());
        assert!(union_bound(2, 3, 5, 3).is_err());
        assert!(intersection_bound(5, 3, 5, 0).is_err());
    }

    #[test]
    fn n_bound_dominates_input_sizes() {
        for n1 in 0..=8 {
            for c1 in 0..=n1 {
                for n2 in 0..=8 {
                    for c2 in 0..=n2 {
                        assert!(env(n1, c1, n2, c2).n_bound >= n1 + n2);
                    }
                }
            }
        }
    }
}
