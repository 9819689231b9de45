//! Lower and upper envelopes of two piecewise linear functions, with the
//! breakpoint decomposition that every envelope carries.

use plgeom::{classify_pieces, lower_envelope, upper_envelope, PLFunction, Point2, Rational};

fn main() {
    // f1 = |x|, a V, against the tent f2 = 2 - |x|. The graphs cross at
    // x = -1 and x = 1, so the envelope switches owner twice.
    let f1 = PLFunction::new(
        vec![Point2::from_ints(0, 0)],
        Rational::from_int(-1),
        Rational::from_int(1),
        None,
    )
    .unwrap();
    let f2 = PLFunction::new(
        vec![Point2::from_ints(0, 2)],
        Rational::from_int(1),
        Rational::from_int(-1),
        None,
    )
    .unwrap();

    let (env, decomp) = lower_envelope(&f1, &f2);
    println!("lower envelope census (n, c, r): {}", env.census());
    println!("breakpoints (k = {}):", decomp.k());
    for b in &decomp.breakpoints {
        println!("  ({}, {})", b.x, b.y);
    }
    println!("piece owners: {:?}", decomp.piece_owners);

    // Each interior piece either contains a convex vertex of its owner or
    // is witnessed by a concave vertex of the other graph.
    let classified = classify_pieces(&f1, &f2, &decomp).unwrap();
    println!(
        "piece classes: k1c={} k1r={} k2c={} k2r={}",
        classified.k1c, classified.k1r, classified.k2c, classified.k2r
    );

    // Everything is exact: the envelope value at any rational abscissa is
    // the exact pointwise minimum.
    let x = Rational::ratio(7, 5);
    let min = std::cmp::min(f1.eval(&x), f2.eval(&x));
    assert_eq!(env.eval(&x), min);
    println!("value at 7/5: {}", env.eval(&x));

    let (upper, upper_decomp) = upper_envelope(&f1, &f2);
    println!(
        "upper envelope census: {}, k = {}",
        upper.census(),
        upper_decomp.k()
    );
}
