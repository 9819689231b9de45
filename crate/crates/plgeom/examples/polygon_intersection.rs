//! Intersection of simple polygons: the hexagram core, an empty overlap,
//! and the split-boundary view of which input pieces survive.

use plgeom::{polygon_intersection, BooleanStatus, Point2, PointLocation, SimplePolygon};

fn poly(coords: &[(i64, i64)]) -> SimplePolygon {
    SimplePolygon::new(
        coords
            .iter()
            .map(|&(x, y)| Point2::from_ints(x, y))
            .collect(),
    )
    .unwrap()
}

fn main() {
    let up = poly(&[(0, 0), (4, 0), (2, 3)]);
    let down = poly(&[(0, 2), (4, 2), (2, -1)]);

    let result = polygon_intersection(&up, &down).unwrap();
    assert_eq!(result.status, BooleanStatus::Simple);
    let core = &result.components[0];
    // The core of the hexagram is a convex hexagon.
    println!("intersection census (n, c, r): {}", core.polygon.census());
    assert_eq!(core.polygon.census().r, 0);

    // Interior points of the core lie in both inputs.
    let inside = Point2::from_ints(2, 1);
    assert_eq!(up.contains(&inside), PointLocation::Interior);
    assert_eq!(down.contains(&inside), PointLocation::Interior);
    assert_eq!(core.polygon.contains(&inside), PointLocation::Interior);

    // The split boundary records how each input was cut at the crossings
    // and which pieces made it onto the result.
    let kept = result.split1.on_result.iter().filter(|&&keep| keep).count();
    println!(
        "first boundary: {} pieces, {} on the result",
        result.split1.points.len(),
        kept
    );

    let far = poly(&[(10, 10), (12, 10), (11, 12)]);
    let empty = polygon_intersection(&up, &far).unwrap();
    assert_eq!(empty.status, BooleanStatus::Empty);
    println!("disjoint triangles intersect in nothing");
}
