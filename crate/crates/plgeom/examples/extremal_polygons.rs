//! Polygon pairs whose union or intersection meets the vertex bound
//! exactly.

use plgeom::{
    build_intersection_extremal, build_union_extremal, intersection_bound, polygon_intersection,
    polygon_union, union_bound, BooleanStatus,
};

fn main() {
    // Two interleaved triangles: the union is a twelve-vertex star.
    let (p1, p2, _) = build_union_extremal(3, 3, 0, 0).unwrap();
    let star = polygon_union(&p1, &p2).unwrap();
    assert_eq!(star.status, BooleanStatus::Simple);
    let achieved = star.components[0].polygon.census();
    let bound = union_bound(3, 3, 3, 3).unwrap();
    println!(
        "union of triangles: census {achieved}, bound {}",
        bound.n_bound
    );
    assert_eq!(achieved.n, bound.n_bound);

    // Concave budgets raise the bound; the builder spends them too.
    let (q1, q2, trace) = build_union_extremal(3, 4, 1, 2).unwrap();
    println!(
        "union inputs ({}, {}) reach {}",
        q1.census(),
        q2.census(),
        trace.expected_n0
    );
    let res = polygon_union(&q1, &q2).unwrap();
    assert_eq!(res.components[0].polygon.census().n, trace.expected_n0);

    // Intersections are parametrized by concave budgets first. Here the
    // second polygon brings three concave vertices against one.
    let (t1, t2, _) = build_intersection_extremal(1, 3, 3, 3).unwrap();
    let bound = intersection_bound(3 + 1, 1, 3 + 3, 3).unwrap();
    let core = polygon_intersection(&t1, &t2).unwrap();
    assert_eq!(core.status, BooleanStatus::Simple);
    let census = core.components[0].polygon.census();
    println!(
        "intersection inputs ({}, {}) reach {} of bound {}",
        t1.census(),
        t2.census(),
        census.n,
        bound.n_bound
    );
    assert_eq!(census.n, bound.n_bound);
    assert_eq!(census.r, 1 + 3);
}
