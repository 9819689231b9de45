//! A pair of functions whose lower envelope meets the vertex bound
//! exactly, for any requested census profile.

use plgeom::{build_envelope_extremal, envelope_bound, lower_envelope};

fn main() {
    // Censuses (c, r): first graph 2 convex + 1 concave, second 3 + 2.
    let (c1, r1, c2, r2) = (2usize, 1usize, 3usize, 2usize);
    let (f1, f2, trace) = build_envelope_extremal(c1, c2, r1, r2).unwrap();
    assert_eq!(f1.census().c, c1);
    assert_eq!(f2.census().r, r2);

    let bound = envelope_bound(c1 + r1, c1, c2 + r2, c2).unwrap();
    let (env, decomp) = lower_envelope(&f1, &f2);
    println!("bound {}, achieved {}", bound.n_bound, env.census().n);
    assert_eq!(env.census().n, bound.n_bound);
    // Every convex vertex of both inputs survives onto the envelope.
    assert_eq!(env.census().c, c1 + c2);
    println!(
        "envelope census {}, breakpoints {}",
        env.census(),
        decomp.k()
    );

    // The trace records how the instance was grown, stage by stage.
    println!("construction stages:");
    for stage in &trace.stage_log {
        println!("  {}: {} points", stage.name, stage.points.len());
    }
    for (name, p) in trace.auxiliary.iter().take(3) {
        println!("  auxiliary {name} at ({}, {})", p.x, p.y);
    }
    assert_eq!(trace.expected_n0, bound.n_bound);
}
