//! Union of two triangles that overlap in a hexagram. The twelve-vertex
//! star is the worst case for two triangles.

use plgeom::{polygon_union, BooleanStatus, Point2, SimplePolygon};

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

    let result = polygon_union(&up, &down).unwrap();
    assert_eq!(result.status, BooleanStatus::Simple);
    let star = &result.components[0];
    println!("union census (n, c, r): {}", star.polygon.census());
    println!("star outline:");
    for v in star.polygon.vertices() {
        println!("  ({}, {})", v.x, v.y);
    }

    // The boundary alternates between the two inputs, six arcs each.
    let d = &star.decomposition;
    println!(
        "boundary crossings: {}, arcs per input: {:?}",
        d.k(),
        d.owner_counts()
    );
    println!(
        "arc classes: k1c={} k1r={} k2c={} k2r={}",
        d.k1c, d.k1r, d.k2c, d.k2r
    );

    // Disjoint inputs still union fine, they just stay two components.
    let far = poly(&[(10, 10), (11, 10), (11, 11), (10, 11)]);
    let apart = polygon_union(&up, &far).unwrap();
    assert_eq!(apart.status, BooleanStatus::MultipleComponents);
    println!(
        "disjoint inputs: {} components, {} vertices total",
        apart.components.len(),
        apart.vertex_count()
    );
}
