//! Continuous piecewise linear functions: construction and validation,
//! exact evaluation, vertex census, lower and upper envelopes, and the
//! minimal breakpoint decomposition of an envelope.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{Point2, Rational};

/// Vertex counts of a function graph or polygon: `n` total, `c` convex,
/// `r` concave, with `n = c + r` always.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexCensus {
    pub n: usize,
    pub c: usize,
    pub r: usize,
}

impl VertexCensus {
    pub fn new(c: usize, r: usize) -> Self {
        VertexCensus { n: c + r, c, r }
    }
}

impl fmt::Display for VertexCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n, self.c, self.r)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PLFunctionError {
    #[error("vertex {index} does not strictly increase in x")]
    NonMonotoneX { index: usize },
    #[error("vertex {index} has equal incoming and outgoing slopes")]
    FlatVertex { index: usize },
    #[error("a function without vertices needs an anchor point")]
    MissingAnchor,
    #[error("a function without vertices must have equal left and right slopes")]
    InconsistentSlopes,
}

/// A continuous piecewise linear function on the whole real line.
///
/// Stored as its vertex list in strictly increasing x, where every listed
/// point is a genuine slope change, plus the slopes of the two unbounded
/// rays. A function with no vertices is an affine line pinned by `anchor`;
/// anchors are dropped as soon as a vertex fixes the graph.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawPLF", into = "RawPLF")]
pub struct PLFunction {
    vertices: Vec<Point2>,
    left_slope: Rational,
    right_slope: Rational,
    anchor: Option<Point2>,
}

#[derive(Serialize, Deserialize)]
struct RawPLF {
    vertices: Vec<Point2>,
    left_slope: Rational,
    right_slope: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    anchor: Option<Point2>,
}

impl TryFrom<RawPLF> for PLFunction {
    type Error = PLFunctionError;

    fn try_from(raw: RawPLF) -> Result<Self, Self::Error> {
        PLFunction::new(raw.vertices, raw.left_slope, raw.right_slope, raw.anchor)
    }
}

impl From<PLFunction> for RawPLF {
    fn from(f: PLFunction) -> RawPLF {
        RawPLF {
            vertices: f.vertices,
            left_slope: f.left_slope,
            right_slope: f.right_slope,
            anchor: f.anchor,
        }
    }
}

impl PartialEq for PLFunction {
    fn eq(&self, other: &Self) -> bool {
        if self.vertices != other.vertices
            || self.left_slope != other.left_slope
            || self.right_slope != other.right_slope
        {
            return false;
        }
        // Two affine lines are the same function when either anchor lies on
        // the other line; the anchor point itself is not canonical.
        match (&self.anchor, &other.anchor) {
            (Some(a), Some(_)) => other.eval(&a.x) == a.y,
            (None, None) => true,
            _ => false,
        }
    }
}

impl Eq for PLFunction {}

impl PLFunction {
    pub fn new(
        vertices: Vec<Point2>,
        left_slope: Rational,
        right_slope: Rational,
        anchor: Option<Point2>,
    ) -> Result<Self, PLFunctionError> {
        if vertices.is_empty() {
            if left_slope != right_slope {
                return Err(PLFunctionError::InconsistentSlopes);
            }
            let anchor = anchor.ok_or(PLFunctionError::MissingAnchor)?;
            return Ok(PLFunction {
                vertices,
                left_slope,
                right_slope,
                anchor: Some(anchor),
            });
        }
        for i in 1..vertices.len() {
            if vertices[i].x <= vertices[i - 1].x {
                return Err(PLFunctionError::NonMonotoneX { index: i });
            }
        }
        let f = PLFunction {
            vertices,
            left_slope,
            right_slope,
            anchor: None,
        };
        let slopes = f.slope_sequence();
        for i in 0..f.vertices.len() {
            if slopes[i] == slopes[i + 1] {
                return Err(PLFunctionError::FlatVertex { index: i });
            }
        }
        Ok(f)
    }

    /// The line through `anchor` with the given slope.
    pub fn affine(slope: Rational, anchor: Point2) -> Self {
        PLFunction {
            vertices: Vec::new(),
            left_slope: slope.clone(),
            right_slope: slope,
            anchor: Some(anchor),
        }
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn left_slope(&self) -> &Rational {
        &self.left_slope
    }

    pub fn right_slope(&self) -> &Rational {
        &self.right_slope
    }

    pub fn anchor(&self) -> Option<&Point2> {
        self.anchor.as_ref()
    }

    // Slopes of the n+1 maximal affine pieces, left ray first.
    fn slope_sequence(&self) -> Vec<Rational> {
        let mut slopes = Vec::with_capacity(self.vertices.len() + 1);
        slopes.push(self.left_slope.clone());
        for w in self.vertices.windows(2) {
            slopes.push((&w[1].y - &w[0].y) / (&w[1].x - &w[0].x));
        }
        slopes.push(self.right_slope.clone());
        slopes
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        if self.vertices.is_empty() {
            let a = self
                .anchor
                .as_ref()
                .expect("affine functions carry an anchor");
            return &a.y + &self.left_slope * (x - &a.x);
        }
        match self.vertices.binary_search_by(|v| v.x.cmp(x)) {
            Ok(i) => self.vertices[i].y.clone(),
            Err(0) => {
                let v = &self.vertices[0];
                &v.y + &self.left_slope * (x - &v.x)
            }
            Err(i) if i == self.vertices.len() => {
                let v = &self.vertices[i - 1];
                &v.y + &self.right_slope * (x - &v.x)
            }
            Err(i) => {
                let a = &self.vertices[i - 1];
                let b = &self.vertices[i];
                let t = (x - &a.x) / (&b.x - &a.x);
                &a.y + t * (&b.y - &a.y)
            }
        }
    }

    /// Counts of convex vertices (slope increases left to right) and concave
    /// vertices (slope decreases).
    pub fn census(&self) -> VertexCensus {
        let slopes = self.slope_sequence();
        let c = (0..self.vertices.len())
            .filter(|&i| slopes[i + 1] > slopes[i])
            .count();
        VertexCensus::new(c, self.vertices.len() - c)
    }

    pub fn convex_vertices(&self) -> Vec<Point2> {
        let slopes = self.slope_sequence();
        self.vertices
            .iter()
            .enumerate()
            .filter(|&(i, _)| slopes[i + 1] > slopes[i])
            .map(|(_, v)| v.clone())
            .collect()
    }

    pub fn concave_vertices(&self) -> Vec<Point2> {
        let slopes = self.slope_sequence();
        self.vertices
            .iter()
            .enumerate()
            .filter(|&(i, _)| slopes[i + 1] < slopes[i])
            .map(|(_, v)| v.clone())
            .collect()
    }

    /// Mirror through the x-axis. Swaps convex and concave vertices and
    /// exchanges the roles of lower and upper envelope.
    pub fn reflect_y(&self) -> PLFunction {
        PLFunction {
            vertices: self
                .vertices
                .iter()
                .map(|v| Point2::new(v.x.clone(), -&v.y))
                .collect(),
            left_slope: -&self.left_slope,
            right_slope: -&self.right_slope,
            anchor: self
                .anchor
                .as_ref()
                .map(|a| Point2::new(a.x.clone(), -&a.y)),
        }
    }
}

/// Which input graph a piece of an envelope lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Owner {
    Graph1,
    Graph2,
}

impl Owner {
    pub fn other(self) -> Owner {
        match self {
            Owner::Graph1 => Owner::Graph2,
            Owner::Graph2 => Owner::Graph1,
        }
    }
}

/// Minimal breakpoint set of an envelope: `k` points of the graphs'
/// intersection splitting the envelope into pieces that each lie wholly on
/// one input graph, with no removable breakpoint.
///
/// `piece_owners` has length `k + 1`: the piece before the first breakpoint,
/// the `k - 1` interior pieces, and the piece after the last. The four
/// counts partition the interior pieces by owner and by whether the piece
/// contains a convex vertex of its owner; they are zero until
/// [`classify_pieces`] fills them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BreakpointDecomposition {
    pub breakpoints: Vec<Point2>,
    pub piece_owners: Vec<Owner>,
    pub k1c: usize,
    pub k1r: usize,
    pub k2c: usize,
    pub k2r: usize,
}

impl BreakpointDecomposition {
    pub fn k(&self) -> usize {
        self.breakpoints.len()
    }

    /// Interior pieces owned by each graph. Only meaningful once classified.
    pub fn owner_counts(&self) -> (usize, usize) {
        (self.k1c + self.k1r, self.k2c + self.k2r)
    }
}

/// A decomposition contradicting a structural fact every envelope must
/// satisfy. Signals an implementation bug, not bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0}")]
pub struct LemmaViolation(pub String);

const IN1: u8 = 1;
const IN2: u8 = 2;

/// Pointwise minimum of two functions, with the minimal breakpoint
/// decomposition of the result.
///
/// Every piece between consecutive breakpoints lies wholly on one input
/// graph and no breakpoint can be dropped. When the envelope never has to
/// switch graphs the decomposition has `k = 0` and a single owner; ties go
/// to `Graph1`. Where the envelope runs along both graphs at once, the
/// owner switch is deferred to the last point of the shared stretch.
pub fn lower_envelope(f1: &PLFunction, f2: &PLFunction) -> (PLFunction, BreakpointDecomposition) {
    let env_at = |x: &Rational| f1.eval(x).min(f2.eval(x));
    let d_at = |x: &Rational| f1.eval(x) - f2.eval(x);

    // Event abscissas: all input vertices; a probe point when there are none.
    let mut xs: Vec<Rational> = f1
        .vertices
        .iter()
        .chain(f2.vertices.iter())
        .map(|v| v.x.clone())
        .collect();
    xs.sort();
    xs.dedup();
    if xs.is_empty() {
        xs.push(Rational::zero());
    }

    // Sign-change roots of f1 - f2, one affine piece of the difference at a
    // time. Roots at event points need no new cut.
    let dvals: Vec<Rational> = xs.iter().map(d_at).collect();
    let mut cuts: Vec<Rational> = Vec::new();
    let d0 = &dvals[0];
    let left_dslope = d0 - d_at(&(&xs[0] - Rational::one()));
    if !d0.is_zero() && d0.signum() == left_dslope.signum() {
        cuts.push(&xs[0] - d0 / &left_dslope);
    }
    for i in 1..xs.len() {
        let (da, db) = (&dvals[i - 1], &dvals[i]);
        if da.signum() * db.signum() < 0 {
            let t = da / (da - db);
            cuts.push(&xs[i - 1] + t * (&xs[i] - &xs[i - 1]));
        }
    }
    let dl = dvals.last().unwrap();
    let right_dslope = d_at(&(xs.last().unwrap() + Rational::one())) - dl;
    if !dl.is_zero() && !right_dslope.is_zero() && dl.signum() != right_dslope.signum() {
        cuts.push(xs.last().unwrap() - dl / &right_dslope);
    }
    xs.extend(cuts);
    xs.sort();
    xs.dedup();

    // Between consecutive cut abscissas the envelope is affine and lies on a
    // fixed set of graphs, so slopes and owners follow from point probes.
    let m = xs.len();
    let ys: Vec<Rational> = xs.iter().map(|x| env_at(x)).collect();
    let mut gap_slopes = Vec::with_capacity(m + 1);
    gap_slopes.push(&ys[0] - env_at(&(&xs[0] - Rational::one())));
    for i in 1..m {
        gap_slopes.push((&ys[i] - &ys[i - 1]) / (&xs[i] - &xs[i - 1]));
    }
    gap_slopes.push(env_at(&(&xs[m - 1] + Rational::one())) - &ys[m - 1]);

    let mut vertices = Vec::new();
    for i in 0..m {
        if gap_slopes[i] != gap_slopes[i + 1] {
            vertices.push(Point2::new(xs[i].clone(), ys[i].clone()));
        }
    }
    let anchor = if vertices.is_empty() {
        Some(Point2::new(xs[0].clone(), ys[0].clone()))
    } else {
        None
    };
    let f0 = PLFunction::new(
        vertices,
        gap_slopes[0].clone(),
        gap_slopes[m].clone(),
        anchor,
    )
    .expect("envelope vertices increase in x and are genuine slope changes");

    let class_of = |x: &Rational| -> u8 {
        match d_at(x).signum() {
            s if s < 0 => IN1,
            0 => IN1 | IN2,
            _ => IN2,
        }
    };
    let mut classes = Vec::with_capacity(m + 1);
    classes.push(class_of(&(&xs[0] - Rational::one())));
    for i in 1..m {
        classes.push(class_of(&Rational::mid(&xs[i - 1], &xs[i])));
    }
    classes.push(class_of(&(&xs[m - 1] + Rational::one())));

    // Greedy maximal extension of the running owner set. Extending as far
    // as possible before switching gives a minimum-cardinality breakpoint
    // set and lands each switch at the last point of any shared stretch.
    let mut breakpoints = Vec::new();
    let mut piece_owners = Vec::new();
    let mut cand = classes[0];
    for (i, &cls) in classes.iter().enumerate().skip(1) {
        let inter = cand & cls;
        if inter != 0 {
            cand = inter;
            continue;
        }
        // A forced switch only happens between the two pure classes, so the
        // finished piece has a unique owner.
        debug_assert!(cand == IN1 || cand == IN2);
        piece_owners.push(if cand == IN1 {
            Owner::Graph1
        } else {
            Owner::Graph2
        });
        breakpoints.push(Point2::new(xs[i - 1].clone(), ys[i - 1].clone()));
        cand = cls;
    }
    piece_owners.push(if cand & IN1 != 0 {
        Owner::Graph1
    } else {
        Owner::Graph2
    });

    (
        f0,
        BreakpointDecomposition {
            breakpoints,
            piece_owners,
            k1c: 0,
            k1r: 0,
            k2c: 0,
            k2r: 0,
        },
    )
}

/// Pointwise maximum, implemented by mirroring both inputs through the
/// x-axis, taking the lower envelope, and mirroring back.
pub fn upper_envelope(f1: &PLFunction, f2: &PLFunction) -> (PLFunction, BreakpointDecomposition) {
    let (g0, mut decomp) = lower_envelope(&f1.reflect_y(), &f2.reflect_y());
    for b in &mut decomp.breakpoints {
        b.y = -&b.y;
    }
    (g0.reflect_y(), decomp)
}

/// Fills the interior-piece censuses of an envelope decomposition.
///
/// A piece counts as convex for its owner when it contains a convex vertex
/// of the owner strictly inside its x-span; otherwise it counts as concave,
/// and the opposite graph must then have a concave vertex strictly inside
/// the same span. That witness existing for every concave piece is a fact
/// the complexity bounds rest on, so its absence is reported as a
/// [`LemmaViolation`].
pub fn classify_pieces(
    f1: &PLFunction,
    f2: &PLFunction,
    decomp: &BreakpointDecomposition,
) -> Result<BreakpointDecomposition, LemmaViolation> {
    let mut out = decomp.clone();
    out.k1c = 0;
    out.k1r = 0;
    out.k2c = 0;
    out.k2r = 0;
    for t in 1..decomp.breakpoints.len() {
        let lo = &decomp.breakpoints[t - 1].x;
        let hi = &decomp.breakpoints[t].x;
        let owner = decomp.piece_owners[t];
        let (own, other) = match owner {
            Owner::Graph1 => (f1, f2),
            Owner::Graph2 => (f2, f1),
        };
        let inside = |v: &Point2| &v.x > lo && &v.x < hi;
        if own.convex_vertices().iter().any(inside) {
            match owner {
                Owner::Graph1 => out.k1c += 1,
                Owner::Graph2 => out.k2c += 1,
            }
        } else {
            match owner {
                Owner::Graph1 => out.k1r += 1,
                Owner::Graph2 => out.k2r += 1,
            }
            if !other.concave_vertices().iter().any(inside) {
                return Err(LemmaViolation(format!(
                    "piece {t} on {owner:?} spans ({lo}, {hi}) without a convex vertex of its \
                     owner, yet the other graph has no concave vertex there"
                )));
            }
        }
    }
    Ok(out)
}
