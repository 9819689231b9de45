//! The closed-form vertex bounds and their census-free maximizations.
//!
//! Censuses are written (n, c) for functions and polygons counted by convex
//! vertices, (n, r) for intersections counted by concave vertices.

use plgeom::{
    envelope_bound, grid_maximize, intersection_bound, union_bound, union_bound_free_report,
    BoundKind,
};

fn main() {
    // Envelope of two one-vertex functions, both vertices convex.
    let e = envelope_bound(1, 1, 1, 1).unwrap();
    println!(
        "envelope (1,1) vs (1,1): n0 <= {}, convex <= {}, branch {:?}",
        e.n_bound, e.secondary_bound, e.which_branch
    );

    // Two triangles. Their union can reach twelve vertices, never more.
    let u = union_bound(3, 3, 3, 3).unwrap();
    println!("union of triangles: n0 <= {}", u.n_bound);

    // Intersection is counted by concave vertices; two convex polygons
    // always intersect in a convex region.
    let i = intersection_bound(3, 0, 3, 0).unwrap();
    println!(
        "intersection of triangles: n0 <= {}, concave <= {}",
        i.n_bound, i.secondary_bound
    );

    // Census-free forms maximize over every admissible census split.
    for (name, kind, n1, n2) in [
        ("envelope", BoundKind::Envelope, 6, 9),
        ("union", BoundKind::Union, 6, 9),
        ("intersection", BoundKind::Intersection, 6, 9),
    ] {
        let (max, argmax) = grid_maximize(kind, n1, n2);
        println!("{name} free bound at n = ({n1}, {n2}): {max}, argmax {argmax:?}");
    }

    // For unions the two closed-form readings disagree on odd differences;
    // the grid maximum settles which one is right.
    let report = union_bound_free_report(3, 4);
    println!(
        "union free at (3, 4): grid {}, floor form {}, ceiling form {}",
        report.grid_max, report.floor_form, report.ceil_form
    );
    assert!(report.matches_ceil && !report.matches_floor);
}
