//! Extremal envelope instances: two chains on a strictly convex carrier
//! whose lower envelope has as many vertices as the bound allows.
//!
//! Stage 1 interleaves carrier points so every convex vertex lands on the
//! envelope and the graphs cross as often as the convex counts permit.
//! Stage 2 inserts spike points of the second chain into carrier gaps the
//! first chain skips over; each spike pokes above the first graph and buys
//! two crossings while staying off the envelope itself. Stage 3 spends the
//! remaining concave budget by lifting chain points slightly above owned
//! envelope pieces, one new envelope vertex per lift. Spike positions are
//! closed-form; lift heights start at half the vertical gap to the other
//! graph and halve until the recomputed envelope certifies the step.

use crate::bounds::envelope_bound;
use crate::plf::{lower_envelope, Owner, PLFunction, VertexCensus};
use crate::rational::{Point2, Rational};

use super::{ConstructionTrace, InfeasibleParams};

fn carrier(x: Rational) -> Point2 {
    let y = &x * &x;
    Point2::new(x, y)
}

fn chain_slope(a: &Point2, b: &Point2) -> Rational {
    (&b.y - &a.y) / (&b.x - &a.x)
}

/// Function whose graph is the polyline through `chain`: interior points
/// become vertices and the end segments extend to rays.
pub(super) fn plf_from_chain(chain: &[Point2]) -> PLFunction {
    assert!(chain.len() >= 2, "chain needs at least two points");
    if chain.len() == 2 {
        return PLFunction::affine(chain_slope(&chain[0], &chain[1]), chain[0].clone());
    }
    let left = chain_slope(&chain[0], &chain[1]);
    let right = chain_slope(&chain[chain.len() - 2], &chain[chain.len() - 1]);
    PLFunction::new(chain[1..chain.len() - 1].to_vec(), left, right, None)
        .expect("chain turns at every interior point")
}

fn insert_sorted(chain: &mut Vec<Point2>, p: Point2) {
    let at = chain.partition_point(|q| q.x < p.x);
    chain.insert(at, p);
}

struct EnvelopeState {
    f1: PLFunction,
    f2: PLFunction,
    f0: PLFunction,
    breakpoints: Vec<Point2>,
    piece_owners: Vec<Owner>,
}

fn state_of(chain1: &[Point2], chain2: &[Point2]) -> EnvelopeState {
    let f1 = plf_from_chain(chain1);
    let f2 = plf_from_chain(chain2);
    let (f0, decomp) = lower_envelope(&f1, &f2);
    EnvelopeState {
        f1,
        f2,
        f0,
        breakpoints: decomp.breakpoints,
        piece_owners: decomp.piece_owners,
    }
}

/// Midpoint of the widest open overlap between a finite segment of the
/// lifted chain and an envelope piece owned by it. Widest keeps the lift
/// as far from the surrounding breakpoints as the current shape allows.
fn lift_site(chain: &[Point2], st: &EnvelopeState, owner: Owner) -> Rational {
    let bp = &st.breakpoints;
    let mut best: Option<(Rational, Rational)> = None;
    for (i, &piece_owner) in st.piece_owners.iter().enumerate() {
        if piece_owner != owner {
            continue;
        }
        let lo = (i > 0).then(|| &bp[i - 1].x);
        let hi = (i < bp.len()).then(|| &bp[i].x);
        for j in 0..chain.len() - 1 {
            let mut a = chain[j].x.clone();
            let mut b = chain[j + 1].x.clone();
            if let Some(lo) = lo {
                if *lo > a {
                    a = lo.clone();
                }
            }
            if let Some(hi) = hi {
                if *hi < b {
                    b = hi.clone();
                }
            }
            if a >= b {
                continue;
            }
            let width = &b - &a;
            if best.as_ref().is_none_or(|(w, _)| width > *w) {
                best = Some((width, Rational::mid(&a, &b)));
            }
        }
    }
    best.expect("the lifted graph owns an envelope piece overlapping one of its segments")
        .1
}

/// Adds one concave vertex to the owner's chain without disturbing any
/// other census: envelope gains exactly one vertex, concave, and the
/// breakpoint count stays put. Returns the inserted point.
fn lift(chain1: &mut Vec<Point2>, chain2: &mut Vec<Point2>, owner: Owner) -> Point2 {
    let st = state_of(chain1, chain2);
    let (f_target, f_other) = match owner {
        Owner::Graph1 => (&st.f1, &st.f2),
        Owner::Graph2 => (&st.f2, &st.f1),
    };
    let site_chain: &[Point2] = match owner {
        Owner::Graph1 => chain1.as_slice(),
        Owner::Graph2 => chain2.as_slice(),
    };
    let x = lift_site(site_chain, &st, owner);
    let y = f_target.eval(&x);
    let gap = f_other.eval(&x) - &y;
    assert!(
        gap.is_positive(),
        "lift site lies strictly below the other graph"
    );
    let target_before = f_target.census();
    let want_target = VertexCensus::new(target_before.c, target_before.r + 1);
    let env_before = st.f0.census();
    let want_env = VertexCensus::new(env_before.c, env_before.r + 1);
    let k = st.breakpoints.len();
    let half = Rational::ratio(1, 2);
    let mut delta = gap * &half;
    for _ in 0..64 {
        let lifted = Point2::new(x.clone(), &y + &delta);
        let (mut cand1, mut cand2) = (chain1.clone(), chain2.clone());
        insert_sorted(
            match owner {
                Owner::Graph1 => &mut cand1,
                Owner::Graph2 => &mut cand2,
            },
            lifted.clone(),
        );
        let cand = state_of(&cand1, &cand2);
        let target_new = match owner {
            Owner::Graph1 => &cand.f1,
            Owner::Graph2 => &cand.f2,
        };
        if target_new.census() == want_target
            && cand.f0.census() == want_env
            && cand.breakpoints.len() == k
        {
            *chain1 = cand1;
            *chain2 = cand2;
            return lifted;
        }
        delta = delta * &half;
    }
    panic!("lift height failed to certify after 64 halvings");
}

pub(super) struct ChainPair {
    pub chain1: Vec<Point2>,
    pub chain2: Vec<Point2>,
    pub spikes: Vec<Point2>,
    pub lifts1: Vec<Point2>,
    pub lifts2: Vec<Point2>,
}

/// Chains of the extremal envelope family, certified stage by stage.
/// Requires `c1 <= c2`; every parameter combination is feasible.
pub(super) fn extremal_chains(c1: usize, c2: usize, r1: usize, r2: usize) -> ChainPair {
    assert!(
        c1 <= c2,
        "caller relabels so the first chain is the sparser one"
    );
    let half = Rational::ratio(1, 2);
    let mut chain1: Vec<Point2> = (0..=c1 as i64)
        .map(|j| carrier(Rational::from_int(j) + &half))
        .collect();
    let last1 = if c2 > c1 { c2 as i64 } else { c1 as i64 + 1 };
    chain1.push(carrier(Rational::from_int(last1) + &half));
    let mut chain2: Vec<Point2> = (0..=c2 as i64 + 1)
        .map(|j| carrier(Rational::from_int(j)))
        .collect();

    let base = state_of(&chain1, &chain2);
    let base_env = base.f0.census();
    assert_eq!(
        base_env.c,
        c1 + c2,
        "every convex vertex sits on the base envelope"
    );

    // Spikes fit between consecutive second-chain points the first chain
    // bridges with a single long segment, so only c2 - c1 - 1 gaps exist.
    let z = r2.min((c2 - c1).saturating_sub(1));
    let f1_base = base.f1;
    let mut spikes = Vec::new();
    for i in 1..=z {
        let x = Rational::from_int((c1 + i) as i64) + &half;
        let y = f1_base.eval(&x) + Rational::one();
        let d = Point2::new(x, y);
        insert_sorted(&mut chain2, d.clone());
        spikes.push(d);
    }
    let spiked = state_of(&chain1, &chain2);
    assert_eq!(spiked.f2.census(), VertexCensus::new(c2, z));
    let spiked_env = spiked.f0.census();
    assert_eq!(
        spiked_env.n,
        base_env.n + 2 * z,
        "each spike buys two crossings"
    );
    assert_eq!(spiked_env.c, c1 + c2);

    let lifts1: Vec<Point2> = (0..r1)
        .map(|_| lift(&mut chain1, &mut chain2, Owner::Graph1))
        .collect();
    let lifts2: Vec<Point2> = (0..r2 - z)
        .map(|_| lift(&mut chain1, &mut chain2, Owner::Graph2))
        .collect();
    ChainPair {
        chain1,
        chain2,
        spikes,
        lifts1,
        lifts2,
    }
}

/// Builds two functions whose lower envelope meets the envelope vertex
/// bound exactly, with the trace of how they were assembled.
///
/// The pair is relabeled on entry so the first function carries the
/// smaller convex count; the trace records the labels actually built.
/// Every parameter combination is feasible, so the error is reserved.
pub fn build_envelope_extremal(
    c1: usize,
    c2: usize,
    r1: usize,
    r2: usize,
) -> Result<(PLFunction, PLFunction, ConstructionTrace), InfeasibleParams> {
    let ((c1, r1), (c2, r2)) = if c1 <= c2 {
        ((c1, r1), (c2, r2))
    } else {
        ((c2, r2), (c1, r1))
    };
    let mut trace = ConstructionTrace::new(&[("c1", c1), ("c2", c2), ("r1", r1), ("r2", r2)]);

    let built = extremal_chains(c1, c2, r1, r2);
    let f1 = plf_from_chain(&built.chain1);
    let f2 = plf_from_chain(&built.chain2);
    assert_eq!(f1.census(), VertexCensus::new(c1, r1));
    assert_eq!(f2.census(), VertexCensus::new(c2, r2));
    let (f0, _) = lower_envelope(&f1, &f2);
    let achieved = f0.census();
    let bound =
        envelope_bound(c1 + r1, c1, c2 + r2, c2).expect("censuses are consistent by construction");
    assert_eq!(
        achieved.n, bound.n_bound,
        "construction must meet the bound"
    );
    assert_eq!(achieved.c, c1 + c2);

    let mut base_points = built.chain1.clone();
    base_points.extend_from_slice(&built.chain2[..]);
    trace.stage("carrier chains", base_points);
    trace.stage("spikes", built.spikes.clone());
    trace.stage("first graph lifts", built.lifts1.clone());
    trace.stage("second graph lifts", built.lifts2.clone());
    for (i, d) in built.spikes.iter().enumerate() {
        trace.aux(format!("d{}", i + 1), d.clone());
    }
    for (i, e) in built.lifts1.iter().chain(&built.lifts2).enumerate() {
        trace.aux(format!("e{}", i + 1), e.clone());
    }
    trace.expected_n0 = achieved.n;
    trace.expected_secondary = achieved.c;
    Ok((f1, f2, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plf::classify_pieces;

    fn build(c1: usize, c2: usize, r1: usize, r2: usize) -> (PLFunction, PLFunction) {
        let (f1, f2, _) = build_envelope_extremal(c1, c2, r1, r2).unwrap();
        (f1, f2)
    }

    #[test]
    fn smallest_interleaved_pair_has_five_envelope_vertices() {
        let (f1, f2, trace) = build_envelope_extremal(1, 1, 0, 0).unwrap();
        let (f0, decomp) = lower_envelope(&f1, &f2);
        assert_eq!(f0.census().n, 5);
        assert_eq!(decomp.k(), 3);
        assert_eq!(trace.expected_n0, 5);
        let censused = classify_pieces(&f1, &f2, &decomp).unwrap();
        assert_eq!(censused.k1c + censused.k2c, 2);
        assert_eq!(censused.k1r, 0);
        assert_eq!(censused.k2r, 0);
    }

    #[test]
    fn vertex_free_pair_degenerates_to_crossing_lines() {
        let (f1, f2) = build(0, 0, 0, 0);
        assert_eq!(f1.census().n, 0);
        assert_eq!(f2.census().n, 0);
        let (f0, decomp) = lower_envelope(&f1, &f2);
        assert_eq!(f0.census().n, 1);
        assert_eq!(decomp.k(), 1);
    }

    #[test]
    fn mixed_censuses_reach_the_bound() {
        let (f1, f2) = build(2, 3, 1, 2);
        assert_eq!(f1.census(), VertexCensus::new(2, 1));
        assert_eq!(f2.census(), VertexCensus::new(3, 2));
        let (f0, _) = lower_envelope(&f1, &f2);
        assert_eq!(f0.census().n, 14);
    }

    #[test]
    fn relabeling_swaps_the_returned_pair() {
        let (f1, f2, _) = build_envelope_extremal(3, 1, 2, 1).unwrap();
        let (g1, g2, _) = build_envelope_extremal(1, 3, 1, 2).unwrap();
        assert_eq!(f1, g1);
        assert_eq!(f2, g2);
    }

    #[test]
    fn convex_vertex_sets_stay_disjoint() {
        let (f1, f2) = build(3, 4, 2, 3);
        let c1 = f1.convex_vertices();
        for v in f2.convex_vertices() {
            assert!(!c1.contains(&v));
        }
    }

    #[test]
    fn identical_parameters_rebuild_identically() {
        let (f1, f2, t) = build_envelope_extremal(2, 4, 1, 3).unwrap();
        let (g1, g2, u) = build_envelope_extremal(2, 4, 1, 3).unwrap();
        assert_eq!(f1, g1);
        assert_eq!(f2, g2);
        assert_eq!(t, u);
    }
}
