//! Simple polygons with exact rational vertices: validation, convex and
//! concave vertex census, point location, and boundary-traced union and
//! intersection with a cyclic breakpoint decomposition.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::plf::VertexCensus;
use crate::predicates::{orientation, point_on_segment, Orientation};
use crate::rational::{Point2, Rational};

mod boolean;

pub use boolean::{
    polygon_intersection, polygon_union, BooleanStatus, BoundaryComponent, CyclicDecomposition,
    PolygonBooleanResult, SplitBoundary,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygonError {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertices {first} and {second} coincide")]
    DuplicatePoint { first: usize, second: usize },
    #[error("vertex {index} is collinear with its neighbors")]
    CollinearVertex { index: usize },
    #[error("edges {first} and {second} intersect")]
    SelfIntersecting { first: usize, second: usize },
    #[error("boundaries meet at {at} outside a transversal crossing or clean edge overlap")]
    BoundaryDegenerate { at: Point2 },
}

/// Where a point sits relative to a polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PointLocation {
    Interior,
    Boundary,
    Exterior,
}

/// A simple polygon: a closed boundary without self-contact, stored
/// counterclockwise with every listed point a genuine corner.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPolygon", into = "RawPolygon")]
pub struct SimplePolygon {
    vertices: Vec<Point2>,
}

#[derive(Serialize, Deserialize)]
struct RawPolygon {
    vertices: Vec<Point2>,
}

impl TryFrom<RawPolygon> for SimplePolygon {
    type Error = PolygonError;

    fn try_from(raw: RawPolygon) -> Result<Self, Self::Error> {
        SimplePolygon::new(raw.vertices)
    }
}

impl From<SimplePolygon> for RawPolygon {
    fn from(p: SimplePolygon) -> RawPolygon {
        RawPolygon {
            vertices: p.vertices,
        }
    }
}

impl SimplePolygon {
    /// Validates and normalizes a vertex cycle. Clockwise input is reversed;
    /// the starting vertex is kept as given.
    pub fn new(mut vertices: Vec<Point2>) -> Result<Self, PolygonError> {
        let n = vertices.len();
        if n < 3 {
            return Err(PolygonError::TooFewVertices(n));
        }
        for i in 0..n {
            for j in i + 1..n {
                if vertices[i] == vertices[j] {
                    return Err(PolygonError::DuplicatePoint {
                        first: i,
                        second: j,
                    });
                }
            }
        }
        for i in 0..n {
            let prev = &vertices[(i + n - 1) % n];
            let next = &vertices[(i + 1) % n];
            if orientation(prev, &vertices[i], next) == Orientation::Collinear {
                return Err(PolygonError::CollinearVertex { index: i });
            }
        }
        // Non-adjacent edges must be disjoint. Adjacent ones share exactly
        // their common vertex once duplicates and collinear corners are gone.
        for i in 0..n {
            for j in i + 1..n {
                if j == i + 1 || (i == 0 && j == n - 1) {
                    continue;
                }
                let e1 = (&vertices[i], &vertices[(i + 1) % n]);
                let e2 = (&vertices[j], &vertices[(j + 1) % n]);
                if crate::predicates::segment_intersection(e1, e2)
                    != crate::predicates::SegmentIntersection::Empty
                {
                    return Err(PolygonError::SelfIntersecting {
                        first: i,
                        second: j,
                    });
                }
            }
        }
        if twice_signed_area(&vertices).is_negative() {
            vertices.reverse();
        }
        Ok(SimplePolygon { vertices })
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    #[allow(clippy::len_without_is_empty)] // a valid polygon is never empty
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// Edge `i` runs from vertex `i` to vertex `i + 1`, cyclically.
    pub fn edge(&self, i: usize) -> (&Point2, &Point2) {
        (
            &self.vertices[i],
            &self.vertices[(i + 1) % self.vertices.len()],
        )
    }

    /// True when vertex `i` turns left, which under counterclockwise
    /// orientation means the interior angle is convex.
    pub fn is_convex_vertex(&self, i: usize) -> bool {
        let n = self.vertices.len();
        let prev = &self.vertices[(i + n - 1) % n];
        let next = &self.vertices[(i + 1) % n];
        orientation(prev, &self.vertices[i], next) == Orientation::CounterClockwise
    }

    pub fn census(&self) -> VertexCensus {
        let c = (0..self.vertices.len())
            .filter(|&i| self.is_convex_vertex(i))
            .count();
        VertexCensus::new(c, self.vertices.len() - c)
    }

    pub fn convex_vertices(&self) -> Vec<Point2> {
        (0..self.vertices.len())
            .filter(|&i| self.is_convex_vertex(i))
            .map(|i| self.vertices[i].clone())
            .collect()
    }

    pub fn concave_vertices(&self) -> Vec<Point2> {
        (0..self.vertices.len())
            .filter(|&i| !self.is_convex_vertex(i))
            .map(|i| self.vertices[i].clone())
            .collect()
    }

    // Vertex point to convexity flag; vertex points are unique in a valid
    // polygon, so the map is faithful.
    pub(crate) fn convexity_by_point(&self) -> BTreeMap<Point2, bool> {
        (0..self.vertices.len())
            .map(|i| (self.vertices[i].clone(), self.is_convex_vertex(i)))
            .collect()
    }

    /// Exact point location by boundary test plus ray crossing parity.
    pub fn contains(&self, q: &Point2) -> PointLocation {
        let n = self.vertices.len();
        for i in 0..n {
            let (a, b) = self.edge(i);
            if point_on_segment(q, a, b) {
                return PointLocation::Boundary;
            }
        }
        // Horizontal ray to the right of q; the half-open rule on y makes
        // vertex hits count once.
        let mut crossings = 0usize;
        for i in 0..n {
            let (a, b) = self.edge(i);
            if (a.y > q.y) != (b.y > q.y) {
                let t = (&q.y - &a.y) / (&b.y - &a.y);
                let x = &a.x + t * (&b.x - &a.x);
                if x > q.x {
                    crossings += 1;
                }
            }
        }
        if crossings % 2 == 1 {
            PointLocation::Interior
        } else {
            PointLocation::Exterior
        }
    }

    pub fn twice_area(&self) -> Rational {
        twice_signed_area(&self.vertices)
    }
}

pub(crate) fn twice_signed_area(vertices: &[Point2]) -> Rational {
    let mut acc = Rational::zero();
    for i in 0..vertices.len() {
        let a = &vertices[i];
        let b = &vertices[(i + 1) % vertices.len()];
        acc = acc + &a.x * &b.y - &b.x * &a.y;
    }
    acc
}

// Drops every point collinear with its cyclic neighbors, repeating until
// stable so runs of collinear points fully collapse.
pub(crate) fn drop_collinear(points: &[Point2]) -> Vec<Point2> {
    let mut pts: Vec<Point2> = points.to_vec();
    loop {
        let n = pts.len();
        if n < 3 {
            return pts;
        }
        let keep: Vec<bool> = (0..n)
            .map(|i| {
                let prev = &pts[(i + n - 1) % n];
                let next = &pts[(i + 1) % n];
                orientation(prev, &pts[i], next) != Orientation::Collinear
            })
            .collect();
        if keep.iter().all(|&k| k) {
            return pts;
        }
        pts = pts
            .iter()
            .zip(&keep)
            .filter(|(_, &k)| k)
            .map(|(p, _)| p.clone())
            .collect();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> Point2 {
        Point2::from_ints(x, y)
    }

    fn poly(pts: &[(i64, i64)]) -> SimplePolygon {
        SimplePolygon::new(pts.iter().map(|&(x, y)| pt(x, y)).collect()).unwrap()
    }

    #[test]
    fn triangle_is_valid_and_all_convex() {
        let t = poly(&[(0, 0), (4, 0), (2, 3)]);
        assert_eq!(t.census(), VertexCensus { n: 3, c: 3, r: 0 });
    }

    #[test]
    fn collinear_vertex_rejected() {
        let err = SimplePolygon::new(vec![pt(0, 0), pt(2, 0), pt(4, 0), pt(2, 3)]).unwrap_err();
        assert_eq!(err, PolygonError::CollinearVertex { index: 1 });
    }

    #[test]
    fn bowtie_rejected() {
        let err = SimplePolygon::new(vec![pt(0, 0), pt(2, 2), pt(2, 0), pt(0, 2)]).unwrap_err();
        assert!(matches!(err, PolygonError::SelfIntersecting { .. }));
    }

    #[test]
    fn too_few_and_duplicate_vertices_rejected() {
        let err = SimplePolygon::new(vec![pt(0, 0), pt(1, 0)]).unwrap_err();
        assert_eq!(err, PolygonError::TooFewVertices(2));
        let err = SimplePolygon::new(vec![pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 0), pt(-1, 1)])
            .unwrap_err();
        assert_eq!(
            err,
            PolygonError::DuplicatePoint {
                first: 0,
                second: 3
            }
        );
    }

    #[test]
    fn clockwise_input_is_reversed() {
        let t = SimplePolygon::new(vec![pt(0, 0), pt(2, 3), pt(4, 0)]).unwrap();
        assert!(t.twice_area().is_positive());
        assert_eq!(t.vertices(), &[pt(4, 0), pt(2, 3), pt(0, 0)]);
    }

    #[test]
    fn l_shape_census() {
        let l = poly(&[(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]);
        assert_eq!(l.census(), VertexCensus { n: 6, c: 5, r: 1 });
        assert_eq!(l.concave_vertices(), vec![pt(1, 1)]);
    }

    #[test]
    fn point_location_in_triangle() {
        let t = poly(&[(0, 0), (4, 0), (2, 3)]);
        assert_eq!(t.contains(&pt(2, 1)), PointLocation::Interior);
        assert_eq!(t.contains(&pt(2, 0)), PointLocation::Boundary);
        assert_eq!(t.contains(&pt(5, 5)), PointLocation::Exterior);
        assert_eq!(t.contains(&pt(0, 0)), PointLocation::Boundary);
        assert_eq!(t.contains(&pt(-1, 0)), PointLocation::Exterior);
    }

    #[test]
    fn point_location_in_concave_polygon() {
        // U shape opening upward; the notch is exterior though surrounded
        // on three sides
        let u = poly(&[
            (0, 0),
            (5, 0),
            (5, 3),
            (4, 3),
            (4, 1),
            (1, 1),
            (1, 3),
            (0, 3),
        ]);
        assert_eq!(
            u.contains(&Point2::from_ints(2, 2)),
            PointLocation::Exterior
        );
        assert_eq!(
            u.contains(&Point2::new(Rational::ratio(1, 2), Rational::ratio(1, 2))),
            PointLocation::Interior
        );
        assert_eq!(u.contains(&pt(3, 1)), PointLocation::Boundary);
    }

    #[test]
    fn json_round_trip_and_validation() {
        let t = poly(&[(0, 0), (4, 0), (2, 3)]);
        let text = serde_json::to_string(&t).unwrap();
        assert_eq!(text, r#"{"vertices":[["0","0"],["4","0"],["2","3"]]}"#);
        let back: SimplePolygon = serde_json::from_str(&text).unwrap();
        assert_eq!(back, t);

        let bad = r#"{"vertices":[["0","0"],["2","2"],["2","0"],["0","2"]]}"#;
        assert!(serde_json::from_str::<SimplePolygon>(bad).is_err());
    }

    #[test]
    fn collinear_runs_collapse() {
        let pts = vec![pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 0), pt(3, 3)];
        assert_eq!(drop_collinear(&pts), vec![pt(0, 0), pt(3, 0), pt(3, 3)]);
    }
}
