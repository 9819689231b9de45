//! Exact geometry of piecewise linear envelopes and polygon overlays.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere in a predicate, so every count, census and
//! breakpoint reported by this crate is exact. The crate provides:
//!
//! - lower/upper envelopes of piecewise linear functions together with a
//!   minimal breakpoint decomposition of the result ([`plf`]),
//! - unions and intersections of simple polygons by boundary tracing, again
//!   with a cyclic breakpoint decomposition ([`polygon`]),
//! - closed-form worst-case vertex-count bounds for all three operations and
//!   brute-force grid maximization over census profiles ([`bounds`]),
//! - deterministic generators that achieve every bound exactly
//!   ([`constructions`]),
//! - randomized verification campaigns that re-check the bounds, the census
//!   accounting systems and the structural invariants on every instance
//!   ([`verifier`]),
//! - SVG rendering and a JSON instance format ([`svg`], [`instance`]).
//!
//! The `examples/` directory is the guided tour; each file is runnable:
//!
//! ```text
//! cargo run --example lower_envelope         # envelopes and breakpoints
//! cargo run --example polygon_union          # hexagram union walkthrough
//! cargo run --example polygon_intersection   # intersection components
//! cargo run --example tight_bounds           # bound formulas and grid search
//! cargo run --example extremal_envelope      # bound-achieving functions
//! cargo run --example extremal_polygons      # bound-achieving polygons
//! cargo run --example random_campaign        # randomized verification
//! cargo run --example render_svg             # SVG output
//! ```
//!
//! A thin `plgeom` binary exposes the same functionality as subcommands
//! (`bound`, `gen`, `verify`, `table`); see the crate README.

pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod instance;
pub mod plf;
pub mod polygon;
pub mod predicates;
pub mod rational;
pub mod svg;
pub mod verifier;

pub use bounds::{
    envelope_bound, envelope_bound_free, grid_maximize, intersection_bound,
    intersection_bound_free, union_bound, union_bound_free, union_bound_free_report, ActiveBranch,
    BoundKind, BoundReport, InvalidCensus, UnionFreeReport,
};
pub use constructions::{
    build_envelope_extremal, build_intersection_extremal, build_union_extremal, ConstructionTrace,
    InfeasibleParams, TraceStage,
};
pub use instance::{Instance, InstanceError};
pub use plf::{
    classify_pieces, lower_envelope, upper_envelope, BreakpointDecomposition, LemmaViolation,
    Owner, PLFunction, PLFunctionError, VertexCensus,
};
pub use polygon::{
    polygon_intersection, polygon_union, BooleanStatus, BoundaryComponent, CyclicDecomposition,
    PointLocation, PolygonBooleanResult, PolygonError, SimplePolygon, SplitBoundary,
};
pub use predicates::{
    orientation, point_on_segment, segment_intersection, Orientation, SegmentIntersection,
};
pub use rational::{Point2, Rational};
pub use svg::{render_envelope_svg, render_polygons_svg};
pub use verifier::{
    check_envelope_instance, check_intersection_instance, check_union_instance, random_plf,
    random_polygon, run_campaign, CampaignConfig, CampaignKind, CampaignSummary, CheckStatus,
    InstanceReport,
};
