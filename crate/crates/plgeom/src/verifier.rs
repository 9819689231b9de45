//! Randomized instance generators and structural checkers.
//!
//! A check takes a raw instance, recomputes the operation from scratch and
//! audits everything the complexity bounds rest on: the bound itself, the
//! breakpoint census systems, the buried-arc walk facts, and an independent
//! pointwise oracle. Campaigns drive the checks over deterministic seed
//! streams and aggregate slack statistics.

use std::collections::BTreeSet;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{envelope_bound, intersection_bound, union_bound};
use crate::plf::{classify_pieces, lower_envelope, Owner, PLFunction, VertexCensus};
use crate::polygon::{
    polygon_intersection, polygon_union, BooleanStatus, BoundaryComponent, PointLocation,
    PolygonBooleanResult, SimplePolygon, SplitBoundary,
};
use crate::rational::{Point2, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("requested {c} convex vertices on a function with {n} vertices")]
pub struct ImpossibleCensus {
    pub n: usize,
    pub c: usize,
}

/// Outcome of checking one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CheckStatus {
    Ok,
    Skipped(String),
    Violation(Vec<String>),
}

/// Everything measured while checking one instance. `slack` is
/// `bound - n0`; a negative value is always a violation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceReport {
    pub seed: u64,
    pub input1: VertexCensus,
    pub input2: VertexCensus,
    pub output: VertexCensus,
    pub bound: usize,
    pub slack: i64,
    /// Names of the sub-checks that actually ran.
    pub checks: Vec<String>,
    pub status: CheckStatus,
}

impl InstanceReport {
    fn new(input1: VertexCensus, input2: VertexCensus, bound: usize) -> Self {
        InstanceReport {
            seed: 0,
            input1,
            input2,
            output: VertexCensus::new(0, 0),
            bound,
            slack: bound as i64,
            checks: Vec::new(),
            status: CheckStatus::Ok,
        }
    }

    fn set_output(&mut self, output: VertexCensus) {
        self.slack = self.bound as i64 - output.n as i64;
        self.output = output;
    }

    fn finish(mut self, violations: Vec<String>) -> Self {
        if !violations.is_empty() {
            self.status = CheckStatus::Violation(violations);
        }
        self
    }

    fn skipped(mut self, reason: String) -> Self {
        self.status = CheckStatus::Skipped(reason);
        self
    }
}

// Distinct per-trial seeds from one campaign seed (splitmix64 step).
fn trial_seed(base: u64, t: u64) -> u64 {
    let mut z = base ^ t.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A random piecewise linear function with exactly `c` convex and `n - c`
/// concave vertices. Abscissas, values and slopes are small rationals with
/// denominator 4 so downstream arithmetic stays cheap.
pub fn random_plf(seed: u64, n: usize, c: usize) -> Result<PLFunction, ImpossibleCensus> {
    if c > n {
        return Err(ImpossibleCensus { n, c });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_plf_with(&mut rng, n, c))
}

fn random_plf_with(rng: &mut ChaCha8Rng, n: usize, c: usize) -> PLFunction {
    let anchor_x = Rational::ratio(rng.gen_range(-32..=32), 4);
    let anchor_y = Rational::ratio(rng.gen_range(-32..=32), 4);
    let first_slope = Rational::ratio(rng.gen_range(-8..=8), 4);
    if n == 0 {
        return PLFunction::affine(first_slope, Point2::new(anchor_x, anchor_y));
    }

    let mut ascent = vec![false; n];
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for &i in order.iter().take(c) {
        ascent[i] = true;
    }

    // Piece slopes s_0 .. s_n; vertex i turns upward exactly when ascent[i].
    let mut slopes = vec![first_slope];
    for (i, &up) in ascent.iter().enumerate() {
        let step = rng.gen_range(1..=8) * if up { 1 } else { -1 };
        slopes.push(&slopes[i] + Rational::ratio(step, 4));
    }

    // Integrate: vertex 0 at the anchor, then step right along each piece.
    let mut vertices = vec![Point2::new(anchor_x, anchor_y)];
    for i in 1..n {
        let dx = Rational::ratio(rng.gen_range(1..=8), 4);
        let prev = vertices.last().unwrap();
        vertices.push(Point2::new(&prev.x + &dx, &prev.y + &slopes[i] * &dx));
    }
    PLFunction::new(vertices, slopes[0].clone(), slopes[n].clone(), None)
        .expect("strictly increasing abscissas and nonzero turns form a valid function")
}

/// A random simple polygon with exactly `n` vertices, star-shaped around a
/// random center. Vertices sit on rational directions sorted by angle; a
/// candidate is rejected unless every consecutive angular gap, including
/// the wrap-around one, stays below a half turn, which forces simplicity.
///
/// The vertex census is whatever the sampled shape has; only `n` is exact.
/// Panics if `n < 3`.
pub fn random_polygon(seed: u64, n: usize) -> SimplePolygon {
    assert!(n >= 3, "a polygon needs at least 3 vertices, got {n}");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_polygon_with(&mut rng, n)
}

fn random_polygon_with(rng: &mut ChaCha8Rng, n: usize) -> SimplePolygon {
    // Directions come from the rational parametrization
    // t -> ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)) of the unit circle, with
    // t drawn from a grid stratified so the parameters already arrive
    // sorted. The angle between directions t_a < t_b is below a half turn
    // exactly when 1 + t_a * t_b > 0, and the wrap-around gap is below a
    // half turn exactly when 1 + t_first * t_last < 0; both tests are
    // exact, so accepted samples are guaranteed simple.
    'attempt: for _ in 0..256 {
        let cx = Rational::ratio(rng.gen_range(-4..=4), 2);
        let cy = Rational::ratio(rng.gen_range(-4..=4), 2);
        let mut ts: Vec<Rational> = Vec::with_capacity(n);
        for i in 0..n {
            let lo = -128 + (257 * i as i64) / n as i64;
            let hi = -128 + (257 * (i as i64 + 1)) / n as i64 - 1;
            ts.push(Rational::ratio(rng.gen_range(lo..=hi), 16));
        }
        let one = Rational::one();
        for w in ts.windows(2) {
            if (&one + &w[0] * &w[1]).signum() <= 0 {
                continue 'attempt;
            }
        }
        if (&one + &ts[0] * &ts[n - 1]).signum() >= 0 {
            continue 'attempt;
        }

        let mut pts = Vec::with_capacity(n);
        for t in &ts {
            let denom = &one + t * t;
            let dir_x = (&one - t * t) / &denom;
            let dir_y = (t + t) / &denom;
            let rho = Rational::ratio(rng.gen_range(16..=48), 4);
            pts.push(Point2::new(&cx + &rho * dir_x, &cy + &rho * dir_y));
        }
        // Collinear triples on the grid are rare but possible; resample.
        if let Ok(p) = SimplePolygon::new(pts) {
            return p;
        }
    }
    panic!("failed to sample a simple polygon with {n} vertices after 256 attempts");
}

// ---------------------------------------------------------------------------
// Envelope checking

/// Recomputes the lower envelope of `f1` and `f2` and audits the result:
/// the vertex bound and the convex-vertex bound, breakpoint validity and
/// minimality, the piece census system, the concave-witness fact for every
/// piece without a convex vertex of its owner, and agreement with the
/// pointwise minimum on a 1024-point grid.
pub fn check_envelope_instance(f1: &PLFunction, f2: &PLFunction) -> InstanceReport {
    let in1 = f1.census();
    let in2 = f2.census();
    let bound = envelope_bound(in1.n, in1.c, in2.n, in2.c)
        .expect("any function census is a valid envelope operand");
    let mut rep = InstanceReport::new(in1, in2, bound.n_bound);
    let mut bad = Vec::new();

    let (f0, decomp) = lower_envelope(f1, f2);
    let out = f0.census();
    rep.set_output(out);

    rep.checks.push("vertex bound".into());
    if out.n > bound.n_bound {
        bad.push(format!(
            "envelope has {} vertices, above the bound {}",
            out.n, bound.n_bound
        ));
    }
    rep.checks.push("convex vertex bound".into());
    if out.c > in1.c + in2.c {
        bad.push(format!(
            "envelope has {} convex vertices, above c1 + c2 = {}",
            out.c,
            in1.c + in2.c
        ));
    }

    rep.checks.push("breakpoint structure".into());
    let k = decomp.k();
    if decomp.piece_owners.len() != k + 1 {
        bad.push(format!(
            "{} breakpoints but {} piece owners",
            k,
            decomp.piece_owners.len()
        ));
    }
    for b in &decomp.breakpoints {
        if f1.eval(&b.x) != b.y || f2.eval(&b.x) != b.y {
            bad.push(format!("breakpoint {b} is not on both input graphs"));
        }
    }
    for w in decomp.breakpoints.windows(2) {
        if w[0].x >= w[1].x {
            bad.push(format!("breakpoints {} and {} out of order", w[0], w[1]));
        }
    }
    for w in decomp.piece_owners.windows(2) {
        if w[0] == w[1] {
            bad.push("adjacent pieces share an owner".into());
        }
    }

    rep.checks.push("owner balance".into());
    let on1 = decomp
        .piece_owners
        .iter()
        .filter(|&&o| o == Owner::Graph1)
        .count();
    let on2 = decomp.piece_owners.len() - on1;
    if on1.abs_diff(on2) > 1 {
        bad.push(format!("{on1} pieces on one graph vs {on2} on the other"));
    }

    rep.checks.push("piece coverage".into());
    for i in 0..decomp.piece_owners.len() {
        let owner_fn = match decomp.piece_owners[i] {
            Owner::Graph1 => f1,
            Owner::Graph2 => f2,
        };
        let lo = i.checked_sub(1).map(|j| &decomp.breakpoints[j].x);
        let hi = decomp.breakpoints.get(i).map(|b| &b.x);
        if !piece_agrees(&f0, owner_fn, f1, f2, lo, hi) {
            bad.push(format!("piece {i} leaves its owner's graph"));
        }
    }

    rep.checks.push("breakpoint minimality".into());
    for i in 0..k {
        // The piece left of breakpoint i is piece i, the right one i + 1;
        // the cut is redundant if either owner covers the other side too.
        let lo_left = i.checked_sub(1).map(|j| &decomp.breakpoints[j].x);
        let hi_right = decomp.breakpoints.get(i + 1).map(|b| &b.x);
        let left_fn = match decomp.piece_owners[i] {
            Owner::Graph1 => f1,
            Owner::Graph2 => f2,
        };
        let right_fn = match decomp.piece_owners[i + 1] {
            Owner::Graph1 => f1,
            Owner::Graph2 => f2,
        };
        let b = &decomp.breakpoints[i].x;
        if piece_agrees(&f0, left_fn, f1, f2, Some(b), hi_right)
            || piece_agrees(&f0, right_fn, f1, f2, lo_left, Some(b))
        {
            bad.push(format!("breakpoint at x = {b} could be dropped"));
        }
    }

    rep.checks.push("piece census system".into());
    match classify_pieces(f1, f2, &decomp) {
        Ok(d) => {
            let caps = [
                (
                    d.k1c,
                    in1.c,
                    "pieces with a convex vertex of the first graph",
                    "c1",
                ),
                (
                    d.k2c,
                    in2.c,
                    "pieces with a convex vertex of the second graph",
                    "c2",
                ),
                (d.k1r, in2.r, "bare pieces on the first graph", "r2"),
                (d.k2r, in1.r, "bare pieces on the second graph", "r1"),
            ];
            for (got, cap, what, name) in caps {
                if got > cap {
                    bad.push(format!("{got} {what}, above {name} = {cap}"));
                }
            }
            let (p1, p2) = d.owner_counts();
            if p1 + p2 + 2 != decomp.piece_owners.len() && k > 0 {
                bad.push("interior piece census does not add up".into());
            }
        }
        Err(e) => bad.push(e.to_string()),
    }

    rep.checks.push("pointwise minimum oracle".into());
    let mut xs: Vec<&Rational> = f1
        .vertices()
        .iter()
        .chain(f2.vertices())
        .map(|v| &v.x)
        .collect();
    xs.sort();
    let two = Rational::from_int(2);
    let (lo, hi) = match (xs.first(), xs.last()) {
        (Some(a), Some(b)) => ((*a) - &two, (*b) + &two),
        _ => (-&two, two.clone()),
    };
    let span = &hi - &lo;
    for i in 0..1024u32 {
        let x = &lo + &span * Rational::ratio(i as i64, 1023);
        let want = f1.eval(&x).min(f2.eval(&x));
        if f0.eval(&x) != want {
            bad.push(format!(
                "envelope disagrees with the pointwise minimum at x = {x}"
            ));
            break;
        }
    }

    rep.finish(bad)
}

// Exact agreement of `f0` with `g` on `[lo, hi]` (None marks an unbounded
// side). Both functions are piecewise linear, so agreement at every vertex
// abscissa in range, at midpoints between them, and at two probes beyond
// the extremes settles the whole interval.
fn piece_agrees(
    f0: &PLFunction,
    g: &PLFunction,
    f1: &PLFunction,
    f2: &PLFunction,
    lo: Option<&Rational>,
    hi: Option<&Rational>,
) -> bool {
    let mut marks: Vec<Rational> = Vec::new();
    for f in [f0, f1, f2] {
        for v in f.vertices() {
            if lo.is_none_or(|l| &v.x >= l) && hi.is_none_or(|h| &v.x <= h) {
                marks.push(v.x.clone());
            }
        }
    }
    if let Some(l) = lo {
        marks.push(l.clone());
    }
    if let Some(h) = hi {
        marks.push(h.clone());
    }
    if marks.is_empty() {
        marks.push(Rational::zero());
    }
    marks.sort();
    marks.dedup();
    let one = Rational::one();
    if lo.is_none() {
        let m = marks[0].clone();
        marks.insert(0, &m - &one);
        marks.insert(0, &m - &one - &one);
    }
    if hi.is_none() {
        let m = marks.last().unwrap().clone();
        marks.push(&m + &one);
        marks.push(&m + &one + &one);
    }
    let mut probes: Vec<Rational> = marks.clone();
    for w in marks.windows(2) {
        probes.push(Rational::mid(&w[0], &w[1]));
    }
    probes.iter().all(|x| f0.eval(x) == g.eval(x))
}

// ---------------------------------------------------------------------------
// Polygon checking

struct Arc {
    owner: Owner,
    from: Point2,
    to: Point2,
    /// Whether the arc interior holds a vertex of the class the census
    /// counts first: convex for unions, concave for intersections.
    primary: bool,
}

// Rebuilds the arcs of a component from its polygon and breakpoint list,
// classifying each by the owner vertices found strictly inside.
fn derive_arcs(
    comp: &BoundaryComponent,
    p1: &SimplePolygon,
    p2: &SimplePolygon,
    primary_is_convex: bool,
) -> Result<Vec<Arc>, String> {
    let verts = comp.polygon.vertices();
    let k = comp.decomposition.k();
    let bset: BTreeSet<&Point2> = comp.decomposition.breakpoints.iter().collect();
    let conv1 = p1.convexity_by_point();
    let conv2 = p2.convexity_by_point();
    let mut idxs = Vec::with_capacity(k);
    for b in &comp.decomposition.breakpoints {
        match verts.iter().position(|v| v == b) {
            Some(i) => idxs.push(i),
            None => return Err(format!("breakpoint {b} is not a result vertex")),
        }
    }
    let mut arcs = Vec::with_capacity(k);
    for t in 0..k {
        let owner = comp.decomposition.arc_owners[t];
        let conv = match owner {
            Owner::Graph1 => &conv1,
            Owner::Graph2 => &conv2,
        };
        let to_i = idxs[(t + 1) % k];
        let mut primary = false;
        let mut i = (idxs[t] + 1) % verts.len();
        while i != to_i {
            let v = &verts[i];
            if bset.contains(v) {
                return Err(format!("arc {t} runs past another breakpoint at {v}"));
            }
            match conv.get(v) {
                Some(&cv) => {
                    if cv == primary_is_convex {
                        primary = true;
                    }
                }
                None => return Err(format!("arc vertex {v} is not a vertex of its owner")),
            }
            i = (i + 1) % verts.len();
        }
        arcs.push(Arc {
            owner,
            from: comp.decomposition.breakpoints[t].clone(),
            to: comp.decomposition.breakpoints[(t + 1) % k].clone(),
            primary,
        });
    }
    Ok(arcs)
}

// Follows the buried side of a split boundary from one crossing to the
// next. The walk must stay off the result, may not reuse pieces consumed
// by another walk, must come back at `expected_to`, and when `want` is set
// its interior must contain an input vertex of that convexity.
fn walk_buried(
    split: &SplitBoundary,
    used: &mut BTreeSet<usize>,
    from: &Point2,
    expected_to: &Point2,
    breakpoints: &BTreeSet<&Point2>,
    opposite: &SimplePolygon,
    want: Option<bool>,
) -> Result<(), String> {
    let m = split.points.len();
    let j = split
        .points
        .iter()
        .position(|p| p == from)
        .ok_or_else(|| format!("crossing {from} is missing from the split boundary"))?;
    let forward = match (split.on_result[j], split.on_result[(j + m - 1) % m]) {
        (false, true) => true,
        (true, false) => false,
        _ => return Err(format!("crossing {from} lacks exactly one buried side")),
    };
    let conv = opposite.convexity_by_point();
    let mut found = want.is_none();
    let mut idx = j;
    for _ in 0..m {
        let piece = if forward { idx } else { (idx + m - 1) % m };
        if split.on_result[piece] {
            return Err(format!("walk from {from} strayed onto the result"));
        }
        if !used.insert(piece) {
            return Err(format!("buried arcs overlap near {from}"));
        }
        idx = if forward {
            (idx + 1) % m
        } else {
            (idx + m - 1) % m
        };
        let node = &split.points[idx];
        if breakpoints.contains(node) {
            if node != expected_to {
                return Err(format!(
                    "buried walk from {from} surfaced at {node}, expected {expected_to}"
                ));
            }
            return if found {
                Ok(())
            } else {
                Err(format!(
                    "buried arc from {from} to {expected_to} has no {} vertex of the other polygon",
                    if want == Some(true) {
                        "convex"
                    } else {
                        "concave"
                    }
                ))
            };
        }
        match conv.get(node) {
            Some(&cv) => {
                if want == Some(cv) {
                    found = true;
                }
            }
            None => return Err(format!("buried walk passes {node}, not an input vertex")),
        }
    }
    Err(format!(
        "buried walk from {from} never returned to the result"
    ))
}

fn piece_keys(split: &SplitBoundary) -> BTreeSet<(Point2, Point2)> {
    let m = split.points.len();
    (0..m)
        .map(|i| {
            let (a, b) = split.piece(i);
            if a <= b {
                (a.clone(), b.clone())
            } else {
                (b.clone(), a.clone())
            }
        })
        .collect()
}

fn boundaries_share_segments(res: &PolygonBooleanResult) -> bool {
    let k1 = piece_keys(&res.split1);
    let k2 = piece_keys(&res.split2);
    k1.intersection(&k2).next().is_some()
}

// Census, alternation and arc-walk checks shared by both operations, run
// against one result component. `union` selects which census system and
// which walk obligations apply.
#[allow(clippy::too_many_arguments)]
fn check_component(
    comp: &BoundaryComponent,
    res: &PolygonBooleanResult,
    p1: &SimplePolygon,
    p2: &SimplePolygon,
    in1: VertexCensus,
    in2: VertexCensus,
    union: bool,
    walks: bool,
    checks: &mut Vec<String>,
    bad: &mut Vec<String>,
) {
    let d = &comp.decomposition;
    let k = d.k();

    checks.push("arc owner alternation".into());
    if k > 0 {
        if d.arc_owners.len() != k {
            bad.push(format!(
                "{k} breakpoints but {} arc owners",
                d.arc_owners.len()
            ));
        }
        if k % 2 != 0 {
            bad.push(format!("odd breakpoint count {k}"));
        }
        for t in 0..k {
            if d.arc_owners[t] == d.arc_owners[(t + 1) % k] {
                bad.push("adjacent arcs share an owner".into());
                break;
            }
        }
    }

    checks.push("breakpoints on both boundaries".into());
    for b in &d.breakpoints {
        if p1.contains(b) != PointLocation::Boundary || p2.contains(b) != PointLocation::Boundary {
            bad.push(format!("breakpoint {b} is not on both input boundaries"));
        }
    }

    checks.push("arc balance".into());
    let (on1, on2) = d.owner_counts();
    if k > 0 && on1 != on2 {
        bad.push(format!("{on1} arcs on one boundary vs {on2} on the other"));
    }

    checks.push("arc census system".into());
    let caps = if union {
        [
            (
                d.k1c,
                in1.c,
                "convex-carrying arcs of the first polygon",
                "c1",
            ),
            (
                d.k2c,
                in2.c,
                "convex-carrying arcs of the second polygon",
                "c2",
            ),
            (d.k1r, in2.r, "bare arcs of the first polygon", "r2"),
            (d.k2r, in1.r, "bare arcs of the second polygon", "r1"),
        ]
    } else {
        [
            (
                d.k1r,
                in1.r,
                "concave-carrying arcs of the first polygon",
                "r1",
            ),
            (
                d.k2r,
                in2.r,
                "concave-carrying arcs of the second polygon",
                "r2",
            ),
            (d.k1c, in2.c, "bare arcs of the first polygon", "c2"),
            (d.k2c, in1.c, "bare arcs of the second polygon", "c1"),
        ]
    };
    for (got, cap, what, name) in caps {
        if got > cap {
            bad.push(format!("{got} {what}, above {name} = {cap}"));
        }
    }

    checks.push("vertex provenance".into());
    let conv1 = p1.convexity_by_point();
    let conv2 = p2.convexity_by_point();
    for (i, v) in comp.polygon.vertices().iter().enumerate() {
        let convex = comp.polygon.is_convex_vertex(i);
        // Crossings are concave for unions and convex for intersections,
        // so the vertices of the remaining kind must come from an input.
        if convex == union {
            let inherited =
                conv1.get(v).copied() == Some(union) || conv2.get(v).copied() == Some(union);
            if !inherited {
                bad.push(format!(
                    "result vertex {v} is {} but no input has it that way",
                    if convex { "convex" } else { "concave" }
                ));
            }
        }
    }

    if !walks || k == 0 {
        return;
    }
    checks.push("buried arc walks".into());
    match derive_arcs(comp, p1, p2, union) {
        Err(e) => bad.push(e),
        Ok(arcs) => {
            let mut count = (0, 0, 0, 0);
            for a in &arcs {
                match (a.owner, a.primary) {
                    (Owner::Graph1, true) => count.0 += 1,
                    (Owner::Graph1, false) => count.1 += 1,
                    (Owner::Graph2, true) => count.2 += 1,
                    (Owner::Graph2, false) => count.3 += 1,
                }
            }
            let stored = if union {
                (d.k1c, d.k1r, d.k2c, d.k2r)
            } else {
                (d.k1r, d.k1c, d.k2r, d.k2c)
            };
            if count != stored {
                bad.push(format!(
                    "arc classes rederive to {count:?} but the decomposition stores {stored:?}"
                ));
            }

            let bset: BTreeSet<&Point2> = d.breakpoints.iter().collect();
            let mut used1 = BTreeSet::new();
            let mut used2 = BTreeSet::new();
            for a in &arcs {
                let (split, used, opposite) = match a.owner {
                    Owner::Graph1 => (&res.split2, &mut used2, p2),
                    Owner::Graph2 => (&res.split1, &mut used1, p1),
                };
                // A bare union arc forces a concave vertex on the buried
                // side; a bare intersection arc forces a convex one.
                let want = if a.primary { None } else { Some(!union) };
                if let Err(e) = walk_buried(split, used, &a.from, &a.to, &bset, opposite, want) {
                    bad.push(e);
                }
            }
        }
    }
}

// 16 x 16 interior sample grid over the padded joint bounding box.
fn sample_grid(p1: &SimplePolygon, p2: &SimplePolygon) -> Vec<Point2> {
    let mut xs: Vec<&Rational> = Vec::new();
    let mut ys: Vec<&Rational> = Vec::new();
    for p in [p1, p2] {
        for v in p.vertices() {
            xs.push(&v.x);
            ys.push(&v.y);
        }
    }
    let one = Rational::one();
    let lo_x = (*xs.iter().min().unwrap()) - &one;
    let hi_x = (*xs.iter().max().unwrap()) + &one;
    let lo_y = (*ys.iter().min().unwrap()) - &one;
    let hi_y = (*ys.iter().max().unwrap()) + &one;
    let w = &hi_x - &lo_x;
    let h = &hi_y - &lo_y;
    let mut out = Vec::with_capacity(256);
    for i in 0..16i64 {
        for j in 0..16i64 {
            out.push(Point2::new(
                &lo_x + &w * Rational::ratio(2 * i + 1, 32),
                &lo_y + &h * Rational::ratio(2 * j + 1, 32),
            ));
        }
    }
    out
}

// Membership oracle: off-boundary grid points must land inside the result
// exactly when the pointwise formula says so. Any result component's
// boundary lies on an input boundary, so skipping points on the inputs'
// boundaries leaves only clean interior/exterior comparisons.
fn membership_oracle(
    res: &PolygonBooleanResult,
    p1: &SimplePolygon,
    p2: &SimplePolygon,
    union: bool,
    bad: &mut Vec<String>,
) {
    for q in sample_grid(p1, p2) {
        let l1 = p1.contains(&q);
        let l2 = p2.contains(&q);
        if l1 == PointLocation::Boundary || l2 == PointLocation::Boundary {
            continue;
        }
        let in1 = l1 == PointLocation::Interior;
        let in2 = l2 == PointLocation::Interior;
        let want = if union { in1 || in2 } else { in1 && in2 };
        let got = res
            .components
            .iter()
            .any(|c| c.polygon.contains(&q) == PointLocation::Interior);
        if got != want {
            bad.push(format!(
                "membership oracle disagrees at {q}: result says {got}, inputs say {want}"
            ));
            return;
        }
    }
}

fn summed_census(res: &PolygonBooleanResult) -> VertexCensus {
    let mut c = 0;
    let mut r = 0;
    for comp in &res.components {
        let cc = comp.polygon.census();
        c += cc.c;
        r += cc.r;
    }
    VertexCensus::new(c, r)
}

/// Recomputes the union of `p1` and `p2` and audits it: the vertex bound
/// and convex-vertex bound, the arc census system, vertex provenance,
/// buried-arc walks with their concave witnesses and disjointness, and a
/// 256-point membership oracle. Degenerate boundary contact and results
/// that are not a single simple polygon are reported as skipped.
pub fn check_union_instance(p1: &SimplePolygon, p2: &SimplePolygon) -> InstanceReport {
    let in1 = p1.census();
    let in2 = p2.census();
    let bound = union_bound(in1.n, in1.c, in2.n, in2.c)
        .expect("any simple polygon census is a valid union operand");
    let mut rep = InstanceReport::new(in1, in2, bound.n_bound);

    let res = match polygon_union(p1, p2) {
        Err(e) => return rep.skipped(e.to_string()),
        Ok(res) => res,
    };
    rep.set_output(summed_census(&res));
    if res.status != BooleanStatus::Simple {
        return rep.skipped(format!("union is {:?}, not a simple polygon", res.status));
    }

    let mut bad = Vec::new();
    let out = rep.output;
    rep.checks.push("vertex bound".into());
    if out.n > bound.n_bound {
        bad.push(format!(
            "union has {} vertices, above the bound {}",
            out.n, bound.n_bound
        ));
    }
    rep.checks.push("convex vertex bound".into());
    if out.c > in1.c + in2.c {
        bad.push(format!(
            "union has {} convex vertices, above c1 + c2 = {}",
            out.c,
            in1.c + in2.c
        ));
    }

    let walks = !boundaries_share_segments(&res);
    if !walks {
        rep.checks
            .push("arc walks skipped: boundaries share segments".into());
    }
    check_component(
        &res.components[0],
        &res,
        p1,
        p2,
        in1,
        in2,
        true,
        walks,
        &mut rep.checks,
        &mut bad,
    );

    rep.checks.push("membership oracle".into());
    membership_oracle(&res, p1, p2, true, &mut bad);

    rep.finish(bad)
}

/// Recomputes the intersection of `p1` and `p2` and audits every resulting
/// component: the vertex bound and concave-vertex bound, the arc census
/// system, vertex provenance, buried-arc walks with their convex witnesses
/// (single-component results only), and a 256-point membership oracle. An
/// empty intersection yields an empty list; degenerate boundary contact
/// yields one skipped report.
pub fn check_intersection_instance(p1: &SimplePolygon, p2: &SimplePolygon) -> Vec<InstanceReport> {
    let in1 = p1.census();
    let in2 = p2.census();
    let bound = intersection_bound(in1.n, in1.r, in2.n, in2.r)
        .expect("any simple polygon census is a valid intersection operand");

    let res = match polygon_intersection(p1, p2) {
        Err(e) => return vec![InstanceReport::new(in1, in2, bound.n_bound).skipped(e.to_string())],
        Ok(res) => res,
    };
    match res.status {
        BooleanStatus::Empty => return Vec::new(),
        BooleanStatus::HasHole => {
            // A component of the intersection of two simple polygons can
            // never enclose a hole; seeing one means the tracing is wrong.
            let mut rep = InstanceReport::new(in1, in2, bound.n_bound);
            rep.set_output(summed_census(&res));
            return vec![rep.finish(vec!["intersection component has a hole".into()])];
        }
        BooleanStatus::Simple | BooleanStatus::MultipleComponents => {}
    }

    let walks = res.status == BooleanStatus::Simple && !boundaries_share_segments(&res);
    let mut out = Vec::with_capacity(res.components.len());
    for (ci, comp) in res.components.iter().enumerate() {
        let mut rep = InstanceReport::new(in1, in2, bound.n_bound);
        let cc = comp.polygon.census();
        rep.set_output(cc);
        let mut bad = Vec::new();

        rep.checks.push("vertex bound".into());
        if cc.n > bound.n_bound {
            bad.push(format!(
                "component {ci} has {} vertices, above the bound {}",
                cc.n, bound.n_bound
            ));
        }
        rep.checks.push("concave vertex bound".into());
        if cc.r > in1.r + in2.r {
            bad.push(format!(
                "component {ci} has {} concave vertices, above r1 + r2 = {}",
                cc.r,
                in1.r + in2.r
            ));
        }

        if !walks {
            rep.checks.push("arc walks skipped".into());
        }
        check_component(
            comp,
            &res,
            p1,
            p2,
            in1,
            in2,
            false,
            walks,
            &mut rep.checks,
            &mut bad,
        );

        if ci == 0 {
            rep.checks.push("membership oracle".into());
            membership_oracle(&res, p1, p2, false, &mut bad);
        }
        out.push(rep.finish(bad));
    }
    out
}

// ---------------------------------------------------------------------------
// Campaigns

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CampaignKind {
    Envelope,
    Union,
    Intersection,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub kind: CampaignKind,
    pub trials: usize,
    /// Largest per-input vertex count drawn.
    pub max_n: usize,
    pub seed: u64,
}

/// Aggregate of a campaign run. `reports` holds one entry per trial, in
/// order; for intersections the entry is the component with the least
/// slack. The histogram and the witnesses cover passing trials with a
/// nonempty result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignSummary {
    pub config: CampaignConfig,
    pub trials: usize,
    pub ok: usize,
    pub skipped: usize,
    pub violations: usize,
    pub slack_histogram: Vec<(i64, usize)>,
    pub min_slack: Option<i64>,
    pub witnesses: Vec<InstanceReport>,
    #[serde(skip)]
    pub reports: Vec<InstanceReport>,
}

/// Runs `config.trials` randomized trials. Input size profiles cycle
/// through every admissible combination up to `max_n`, so any trial count
/// at least the profile count exercises them all; geometry varies with the
/// per-trial seed derived from `config.seed`. Deterministic end to end.
pub fn run_campaign(config: &CampaignConfig) -> CampaignSummary {
    let profiles: Vec<(usize, usize, usize, usize)> = match config.kind {
        CampaignKind::Envelope => {
            let mut v = Vec::new();
            for n1 in 0..=config.max_n {
                for c1 in 0..=n1 {
                    for n2 in 0..=config.max_n {
                        for c2 in 0..=n2 {
                            v.push((n1, c1, n2, c2));
                        }
                    }
                }
            }
            v
        }
        _ => {
            let mut v = Vec::new();
            for n1 in 3..=config.max_n.max(3) {
                for n2 in 3..=config.max_n.max(3) {
                    v.push((n1, 0, n2, 0));
                }
            }
            v
        }
    };

    let mut summary = CampaignSummary {
        config: *config,
        trials: config.trials,
        ok: 0,
        skipped: 0,
        violations: 0,
        slack_histogram: Vec::new(),
        min_slack: None,
        witnesses: Vec::new(),
        reports: Vec::with_capacity(config.trials),
    };
    let mut histogram = std::collections::BTreeMap::new();

    for t in 0..config.trials {
        let (n1, c1, n2, c2) = profiles[t % profiles.len()];
        let seed = trial_seed(config.seed, t as u64);
        let s1 = trial_seed(seed, 1);
        let s2 = trial_seed(seed, 2);
        let mut rep = match config.kind {
            CampaignKind::Envelope => {
                let f1 = random_plf(s1, n1, c1).expect("profile censuses are valid");
                let f2 = random_plf(s2, n2, c2).expect("profile censuses are valid");
                check_envelope_instance(&f1, &f2)
            }
            CampaignKind::Union => {
                let p1 = random_polygon(s1, n1);
                let p2 = random_polygon(s2, n2);
                check_union_instance(&p1, &p2)
            }
            CampaignKind::Intersection => {
                let p1 = random_polygon(s1, n1);
                let p2 = random_polygon(s2, n2);
                let mut reports = check_intersection_instance(&p1, &p2);
                // A violation on any component must surface even when
                // another component has less slack.
                let picked = reports
                    .iter()
                    .position(|r| matches!(r.status, CheckStatus::Violation(_)))
                    .or_else(|| {
                        reports
                            .iter()
                            .enumerate()
                            .min_by_key(|(_, r)| r.slack)
                            .map(|(i, _)| i)
                    });
                match picked {
                    Some(i) => reports.swap_remove(i),
                    None => {
                        // Empty intersection: an uneventful pass.
                        let bound = intersection_bound(
                            p1.census().n,
                            p1.census().r,
                            p2.census().n,
                            p2.census().r,
                        )
                        .expect("polygon censuses are valid")
                        .n_bound;
                        let mut r = InstanceReport::new(p1.census(), p2.census(), bound);
                        r.checks.push("empty intersection".into());
                        r
                    }
                }
            }
        };
        rep.seed = seed;
        match &rep.status {
            CheckStatus::Ok => {
                summary.ok += 1;
                if rep.output.n > 0 {
                    *histogram.entry(rep.slack).or_insert(0) += 1;
                    let better = summary.min_slack.is_none_or(|m| rep.slack < m);
                    if better {
                        summary.min_slack = Some(rep.slack);
                        summary.witnesses.clear();
                    }
                    if summary.min_slack == Some(rep.slack) && summary.witnesses.len() < 3 {
                        summary.witnesses.push(rep.clone());
                    }
                }
            }
            CheckStatus::Skipped(_) => summary.skipped += 1,
            CheckStatus::Violation(_) => summary.violations += 1,
        }
        summary.reports.push(rep);
    }
    summary.slack_histogram = histogram.into_iter().collect();
    summary
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pt(x: i64, y: i64) -> Point2 {
        Point2::from_ints(x, y)
    }

    fn poly(pts: &[(i64, i64)]) -> SimplePolygon {
        SimplePolygon::new(pts.iter().map(|&(x, y)| pt(x, y)).collect()).unwrap()
    }

    #[test]
    fn random_functions_hit_their_census_exactly() {
        for n in 0..=6 {
            for c in 0..=n {
                for seed in 0..5u64 {
                    let f = random_plf(seed * 977 + 13, n, c).unwrap();
                    assert_eq!(
                        f.census(),
                        VertexCensus::new(c, n - c),
                        "n={n} c={c} seed={seed}"
                    );
                }
            }
        }
    }

    #[test]
    fn random_function_rejects_impossible_census() {
        assert_eq!(random_plf(1, 2, 3), Err(ImpossibleCensus { n: 2, c: 3 }));
    }

    #[test]
    fn random_functions_are_deterministic() {
        assert_eq!(random_plf(42, 5, 2).unwrap(), random_plf(42, 5, 2).unwrap());
    }

    #[test]
    fn random_polygons_have_the_requested_size() {
        for n in 3..=12 {
            for seed in 0..5u64 {
                let p = random_polygon(seed * 31 + 7, n);
                assert_eq!(p.len(), n, "n={n} seed={seed}");
            }
        }
    }

    #[test]
    fn random_polygons_are_deterministic() {
        assert_eq!(random_polygon(7, 8), random_polygon(7, 8));
    }

    #[test]
    fn envelope_check_passes_on_a_plain_crossing_pair() {
        // min(|x|, 2 - |x - 1|): three vertices, two breakpoints.
        let f1 = PLFunction::new(
            vec![pt(0, 0)],
            Rational::from_int(-1),
            Rational::one(),
            None,
        )
        .unwrap();
        let f2 = PLFunction::new(
            vec![pt(1, 2)],
            Rational::one(),
            Rational::from_int(-1),
            None,
        )
        .unwrap();
        let rep = check_envelope_instance(&f1, &f2);
        assert_eq!(rep.status, CheckStatus::Ok);
        assert_eq!(rep.output, VertexCensus { n: 3, c: 1, r: 2 });
        assert_eq!(rep.bound, 4);
        assert_eq!(rep.slack, 1);
        assert!(rep.checks.iter().any(|c| c == "breakpoint minimality"));
    }

    #[test]
    fn envelope_check_handles_identical_inputs() {
        let f = PLFunction::new(
            vec![pt(0, 0), pt(2, 2)],
            Rational::from_int(-2),
            Rational::zero(),
            None,
        )
        .unwrap();
        let rep = check_envelope_instance(&f, &f);
        assert_eq!(rep.status, CheckStatus::Ok);
        assert_eq!(rep.output.n, 2);
    }

    #[test]
    fn union_check_passes_on_the_hexagram() {
        let up = poly(&[(0, 0), (4, 0), (2, 3)]);
        let down = poly(&[(0, 2), (4, 2), (2, -1)]);
        let rep = check_union_instance(&up, &down);
        assert_eq!(rep.status, CheckStatus::Ok);
        assert_eq!(rep.output, VertexCensus { n: 12, c: 6, r: 6 });
        assert!(rep.checks.iter().any(|c| c == "buried arc walks"));
        assert!(rep.checks.iter().any(|c| c == "membership oracle"));
    }

    #[test]
    fn intersection_check_passes_on_the_hexagram() {
        let up = poly(&[(0, 0), (4, 0), (2, 3)]);
        let down = poly(&[(0, 2), (4, 2), (2, -1)]);
        let reports = check_intersection_instance(&up, &down);
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].status, CheckStatus::Ok);
        assert_eq!(reports[0].output, VertexCensus { n: 6, c: 6, r: 0 });
    }

    #[test]
    fn union_check_skips_disconnected_results() {
        let a = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let b = poly(&[(5, 5), (6, 5), (6, 6), (5, 6)]);
        let rep = check_union_instance(&a, &b);
        assert!(matches!(rep.status, CheckStatus::Skipped(_)));
        assert_eq!(rep.output.n, 8);
    }

    #[test]
    fn intersection_check_returns_nothing_when_empty() {
        let a = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let b = poly(&[(5, 5), (6, 5), (6, 6), (5, 6)]);
        assert!(check_intersection_instance(&a, &b).is_empty());
    }

    #[test]
    fn union_check_skips_degenerate_contact() {
        let a = poly(&[(0, 0), (2, 0), (1, 2)]);
        let b = poly(&[(1, 2), (3, 2), (3, 4)]);
        let rep = check_union_instance(&a, &b);
        assert!(matches!(rep.status, CheckStatus::Skipped(_)));
    }

    #[test]
    fn shared_edge_union_skips_walks_but_still_passes() {
        let a = poly(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
        let b = poly(&[(2, 0), (4, 0), (4, 2), (2, 2)]);
        let rep = check_union_instance(&a, &b);
        assert_eq!(rep.status, CheckStatus::Ok);
        assert!(rep.checks.iter().any(|c| c.contains("arc walks skipped")));
    }

    #[test]
    fn small_campaigns_are_deterministic_and_clean() {
        for kind in [
            CampaignKind::Envelope,
            CampaignKind::Union,
            CampaignKind::Intersection,
        ] {
            let config = CampaignConfig {
                kind,
                trials: 60,
                max_n: 7,
                seed: 0xBEEF,
            };
            let a = run_campaign(&config);
            let b = run_campaign(&config);
            assert_eq!(a, b);
            assert_eq!(a.trials, a.ok + a.skipped + a.violations);
            assert_eq!(
                a.violations,
                0,
                "witnesses: {:?}",
                a.reports
                    .iter()
                    .filter(|r| matches!(r.status, CheckStatus::Violation(_)))
                    .collect::<Vec<_>>()
            );
            assert_eq!(a.reports.len(), 60);
        }
    }

    #[test]
    fn campaign_histogram_counts_passing_trials() {
        let config = CampaignConfig {
            kind: CampaignKind::Envelope,
            trials: 40,
            max_n: 5,
            seed: 3,
        };
        let s = run_campaign(&config);
        let counted: usize = s.slack_histogram.iter().map(|(_, c)| c).sum();
        assert!(counted <= s.ok);
        assert!(counted > 0);
        assert!(s.min_slack.is_some());
        assert!(!s.witnesses.is_empty());
        assert!(s.witnesses.iter().all(|w| Some(w.slack) == s.min_slack));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn random_envelope_instances_never_violate(
            seed in any::<u64>(),
            n1 in 0usize..=7,
            n2 in 0usize..=7,
        ) {
            let c1 = (seed as usize) % (n1 + 1);
            let c2 = (seed as usize >> 8) % (n2 + 1);
            let f1 = random_plf(trial_seed(seed, 1), n1, c1).unwrap();
            let f2 = random_plf(trial_seed(seed, 2), n2, c2).unwrap();
            let rep = check_envelope_instance(&f1, &f2);
            prop_assert_eq!(rep.status, CheckStatus::Ok);
            prop_assert!(rep.slack >= 0);
        }

        #[test]
        fn random_polygon_instances_never_violate(
            seed in any::<u64>(),
            n1 in 3usize..=9,
            n2 in 3usize..=9,
        ) {
            let p1 = random_polygon(trial_seed(seed, 1), n1);
            let p2 = random_polygon(trial_seed(seed, 2), n2);
            let union = check_union_instance(&p1, &p2);
            prop_assert!(!matches!(union.status, CheckStatus::Violation(_)), "{:?}", union);
            for rep in check_intersection_instance(&p1, &p2) {
                prop_assert!(!matches!(rep.status, CheckStatus::Violation(_)), "{:?}", rep);
            }
        }
    }
}
