//! Exact orientation and segment-intersection predicates.
//!
//! All decisions reduce to signs of rational determinants, so there is no
//! epsilon anywhere and collinear/overlap cases are classified exactly.

use crate::rational::{Point2, Rational};

/// Turn direction of the ordered triple `(a, b, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

/// Cross product `(b - a) x (c - a)`.
pub fn cross(a: &Point2, b: &Point2, c: &Point2) -> Rational {
    let abx = &b.x - &a.x;
    let aby = &b.y - &a.y;
    let acx = &c.x - &a.x;
    let acy = &c.y - &a.y;
    &abx * &acy - &aby * &acx
}

pub fn orientation(a: &Point2, b: &Point2, c: &Point2) -> Orientation {
    match cross(a, b, c).signum() {
        1 => Orientation::CounterClockwise,
        -1 => Orientation::Clockwise,
        _ => Orientation::Collinear,
    }
}

/// How two closed segments meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegmentIntersection {
    Empty,
    Point(Point2),
    /// Shared closed subsegment of two collinear segments, endpoints in
    /// lexicographic order.
    Overlap(Point2, Point2),
}

/// True when `p` lies on the closed segment `[a, b]`.
pub fn point_on_segment(p: &Point2, a: &Point2, b: &Point2) -> bool {
    if orientation(a, b, p) != Orientation::Collinear {
        return false;
    }
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    lo <= p && p <= hi
}

/// Exact intersection of the closed segments `s1 = [s1.0, s1.1]` and
/// `s2 = [s2.0, s2.1]`.
pub fn segment_intersection(s1: (&Point2, &Point2), s2: (&Point2, &Point2)) -> SegmentIntersection {
    let (a1, b1) = s1;
    let (a2, b2) = s2;

    // Degenerate (zero-length) segments reduce to point membership.
    if a1 == b1 {
        return if a2 == b2 {
            if a1 == a2 {
                SegmentIntersection::Point(a1.clone())
            } else {
                SegmentIntersection::Empty
            }
        } else if point_on_segment(a1, a2, b2) {
            SegmentIntersection::Point(a1.clone())
        } else {
            SegmentIntersection::Empty
        };
    }
    if a2 == b2 {
        return if point_on_segment(a2, a1, b1) {
            SegmentIntersection::Point(a2.clone())
        } else {
            SegmentIntersection::Empty
        };
    }

    let d1x = &b1.x - &a1.x;
    let d1y = &b1.y - &a1.y;
    let d2x = &b2.x - &a2.x;
    let d2y = &b2.y - &a2.y;
    let denom = &d1x * &d2y - &d1y * &d2x;

    if !denom.is_zero() {
        // Solve a1 + t*d1 = a2 + s*d2 for the parameters of both segments.
        let ex = &a2.x - &a1.x;
        let ey = &a2.y - &a1.y;
        let t = (&ex * &d2y - &ey * &d2x) / &denom;
        let s = (&ex * &d1y - &ey * &d1x) / &denom;
        let zero = Rational::zero();
        let one = Rational::one();
        if zero <= t && t <= one && zero <= s && s <= one {
            let p = Point2::new(&a1.x + &t * &d1x, &a1.y + &t * &d1y);
            return SegmentIntersection::Point(p);
        }
        return SegmentIntersection::Empty;
    }

    // Parallel. Distinct carrier lines cannot meet.
    if orientation(a1, b1, a2) != Orientation::Collinear {
        return SegmentIntersection::Empty;
    }

    // Collinear: the lexicographic point order agrees with the order along
    // the common line, so the overlap is an interval in that order.
    let (lo1, hi1) = if a1 <= b1 { (a1, b1) } else { (b1, a1) };
    let (lo2, hi2) = if a2 <= b2 { (a2, b2) } else { (b2, a2) };
    let lo = if lo1 >= lo2 { lo1 } else { lo2 };
    let hi = if hi1 <= hi2 { hi1 } else { hi2 };
    if lo > hi {
        SegmentIntersection::Empty
    } else if lo == hi {
        SegmentIntersection::Point(lo.clone())
    } else {
        SegmentIntersection::Overlap(lo.clone(), hi.clone())
    }
}
