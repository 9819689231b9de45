//! Deterministic generators for input pairs whose envelope, union, or
//! intersection meets the corresponding vertex bound exactly.
//!
//! Each builder certifies its own output: after every placement step it
//! recomputes the relevant censuses and the result complexity, and it
//! panics if the finished instance misses the bound. Callers can treat a
//! returned instance as a proof that the bound is attained for those
//! parameters.

mod envelope;
mod intersection;
mod union;

pub use envelope::build_envelope_extremal;
pub use intersection::build_intersection_extremal;
pub use union::build_union_extremal;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{Point2, Rational};

/// The requested parameters admit no instance of the family.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("infeasible parameters: {0}")]
pub struct InfeasibleParams(pub String);

/// One batch of points placed by a named stage of a construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStage {
    pub name: String,
    pub points: Vec<Point2>,
}

/// Record of how an extremal instance was assembled: the parameters after
/// any relabeling, the points each stage placed, named auxiliary points,
/// and the complexity the instance is certified to reach.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionTrace {
    pub params: Vec<(String, usize)>,
    pub stage_log: Vec<TraceStage>,
    pub auxiliary: Vec<(String, Point2)>,
    /// Certified vertex count of the result.
    pub expected_n0: usize,
    /// Certified convex count for envelopes and unions, concave count for
    /// intersections.
    pub expected_secondary: usize,
}

impl ConstructionTrace {
    fn new(params: &[(&str, usize)]) -> Self {
        ConstructionTrace {
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            stage_log: Vec::new(),
            auxiliary: Vec::new(),
            expected_n0: 0,
            expected_secondary: 0,
        }
    }

    fn stage(&mut self, name: &str, points: Vec<Point2>) {
        self.stage_log.push(TraceStage {
            name: name.to_string(),
            points,
        });
    }

    fn aux(&mut self, name: String, p: Point2) {
        self.auxiliary.push((name, p));
    }
}

/// Parameter of `p` along the segment from `a` to `b`; `p` must lie on the
/// line through them and the segment must not be a point.
fn segment_param(a: &Point2, b: &Point2, p: &Point2) -> Rational {
    if a.x != b.x {
        (&p.x - &a.x) / (&b.x - &a.x)
    } else {
        (&p.y - &a.y) / (&b.y - &a.y)
    }
}

/// Intersection of the line through `a`, `b` with the line through `c`,
/// `d`, or `None` when they are parallel.
fn line_intersection(a: &Point2, b: &Point2, c: &Point2, d: &Point2) -> Option<Point2> {
    let r = (&b.x - &a.x, &b.y - &a.y);
    let s = (&d.x - &c.x, &d.y - &c.y);
    let denom = &r.0 * &s.1 - &r.1 * &s.0;
    if denom.is_zero() {
        return None;
    }
    let t = (&(&c.x - &a.x) * &s.1 - &(&c.y - &a.y) * &s.0) / denom;
    Some(Point2::new(&a.x + &(&r.0 * &t), &a.y + &(&r.1 * &t)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_intersection_crosses_and_detects_parallels() {
        let o = Point2::from_ints(0, 0);
        let e1 = Point2::from_ints(2, 2);
        let a = Point2::from_ints(0, 2);
        let b = Point2::from_ints(2, 0);
        assert_eq!(
            line_intersection(&o, &e1, &a, &b),
            Some(Point2::from_ints(1, 1))
        );
        let shifted = Point2::from_ints(1, 3);
        assert_eq!(line_intersection(&o, &e1, &a, &shifted), None);
    }

    #[test]
    fn segment_param_recovers_interpolation() {
        let a = Point2::from_ints(1, 5);
        let b = Point2::from_ints(5, -3);
        let t = Rational::ratio(3, 8);
        let p = a.lerp(&b, &t);
        assert_eq!(segment_param(&a, &b, &p), t);
        let va = Point2::from_ints(2, 0);
        let vb = Point2::from_ints(2, 4);
        let q = Point2::from_ints(2, 3);
        assert_eq!(segment_param(&va, &vb, &q), Rational::ratio(3, 4));
    }
}
