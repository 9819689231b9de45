//! Command-line interface: closed-form bounds, extremal instance
//! generation, randomized verification, and tightness tables.
//!
//! Exit codes: 0 success, 1 bound violations or tightness mismatches,
//! 2 usage errors or infeasible parameters, 3 I/O failures.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bounds::{
    envelope_bound, envelope_bound_free, grid_maximize, intersection_bound,
    intersection_bound_free, union_bound, union_bound_free_report, ActiveBranch, BoundKind,
    BoundReport,
};
use crate::constructions::{
    build_envelope_extremal, build_intersection_extremal, build_union_extremal,
};
use crate::instance::Instance;
use crate::polygon::{polygon_intersection, polygon_union};
use crate::svg::{render_envelope_svg, render_polygons_svg};
use crate::verifier::{
    check_envelope_instance, check_intersection_instance, check_union_instance, run_campaign,
    CampaignConfig, CampaignKind, CampaignSummary, CheckStatus, InstanceReport,
};

#[derive(Parser)]
#[command(
    name = "plgeom",
    version,
    about = "Exact envelope and polygon-overlay complexity toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Base seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Write the primary output to a file instead of stdout.
    #[arg(short, long = "out", global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Render an SVG figure of the instance and its result.
    #[arg(long, global = true, value_name = "PATH")]
    svg: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form vertex bounds for envelopes, unions, and intersections.
    Bound {
        #[command(subcommand)]
        which: BoundCmd,
    },
    /// Generate an input pair that meets its vertex bound exactly.
    Gen {
        #[command(subcommand)]
        which: GenCmd,
    },
    /// Check random or stored instances against the bounds.
    Verify {
        #[command(subcommand)]
        which: VerifyCmd,
    },
    /// Sweep a parameter grid and compare achieved counts to the bounds.
    Table {
        #[command(subcommand)]
        which: TableCmd,
    },
}

#[derive(Subcommand)]
enum BoundCmd {
    /// Envelope bound from full censuses (n = total, c = convex).
    Envelope {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        c1: usize,
        #[arg(long)]
        n2: usize,
        #[arg(long)]
        c2: usize,
    },
    /// Envelope bound maximized over censuses for fixed vertex counts.
    EnvelopeFree {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
    },
    /// Union bound from full censuses (c = convex, at least 3 each).
    Union {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        c1: usize,
        #[arg(long)]
        n2: usize,
        #[arg(long)]
        c2: usize,
    },
    /// Union bound maximized over censuses, with both closed forms.
    UnionFree {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
    },
    /// Intersection bound from full censuses (r = concave).
    Intersection {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        r1: usize,
        #[arg(long)]
        n2: usize,
        #[arg(long)]
        r2: usize,
    },
    /// Intersection bound maximized over censuses.
    IntersectionFree {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
    },
}

#[derive(Args)]
struct GenParams {
    #[arg(long)]
    c1: usize,
    #[arg(long)]
    c2: usize,
    #[arg(long)]
    r1: usize,
    #[arg(long)]
    r2: usize,
}

#[derive(Subcommand)]
enum GenCmd {
    /// Two functions whose lower envelope meets the envelope bound.
    Envelope {
        #[command(flatten)]
        params: GenParams,
    },
    /// Two polygons whose union meets the union bound.
    Union {
        #[command(flatten)]
        params: GenParams,
    },
    /// Two polygons whose intersection meets the intersection bound.
    Intersection {
        #[command(flatten)]
        params: GenParams,
    },
}

#[derive(Args)]
struct VerifyParams {
    /// Number of random instances to check.
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    /// Largest vertex count drawn per input (default 8 for envelopes,
    /// 10 for polygons).
    #[arg(long)]
    max_n: Option<usize>,
    /// Write one CSV row per trial to this file.
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
    /// Check one stored instance file instead of running a campaign.
    #[arg(long, value_name = "PATH")]
    from: Option<PathBuf>,
}

#[derive(Subcommand)]
enum VerifyCmd {
    Envelope {
        #[command(flatten)]
        params: VerifyParams,
    },
    Union {
        #[command(flatten)]
        params: VerifyParams,
    },
    Intersection {
        #[command(flatten)]
        params: VerifyParams,
    },
}

#[derive(Args)]
struct TableParams {
    /// Largest primary budget in the sweep: convex counts for envelope and
    /// union, concave counts for intersection. The other budget sweeps a
    /// small fixed range.
    #[arg(long)]
    max: usize,
}

#[derive(Subcommand)]
enum TableCmd {
    Envelope {
        #[command(flatten)]
        params: TableParams,
    },
    Union {
        #[command(flatten)]
        params: TableParams,
    },
    Intersection {
        #[command(flatten)]
        params: TableParams,
    },
}

enum CliError {
    /// Invalid ranges or infeasible construction parameters.
    Usage(String),
    Io(String),
}

impl CliError {
    fn report(self) -> ExitCode {
        match self {
            CliError::Usage(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            CliError::Io(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(3)
            }
        }
    }
}

pub fn run() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        seed: cli.seed,
        format: cli.format,
        out: cli.out,
        svg: cli.svg,
    };
    let result = match cli.command {
        Command::Bound { which } => cmd_bound(&ctx, which),
        Command::Gen { which } => cmd_gen(&ctx, which),
        Command::Verify { which } => cmd_verify(&ctx, which),
        Command::Table { which } => cmd_table(&ctx, which),
    };
    match result {
        Ok(code) => code,
        Err(err) => err.report(),
    }
}

struct Ctx {
    seed: u64,
    format: Format,
    out: Option<PathBuf>,
    svg: Option<PathBuf>,
}

impl Ctx {
    /// Primary output: the file given with `--out`, stdout otherwise.
    fn emit(&self, text: &str) -> Result<(), CliError> {
        match &self.out {
            Some(path) => {
                fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
            }
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    fn emit_svg(&self, render: impl FnOnce() -> String) -> Result<(), CliError> {
        if let Some(path) = &self.svg {
            fs::write(path, render())
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------- bound --

fn branch_name(kind: BoundKind, branch: ActiveBranch) -> String {
    let (first, second) = match kind {
        BoundKind::Envelope => ("2*c1 + n2 - c2 + 1", "c1 + c2"),
        BoundKind::Union => ("2*c1 + n2 - c2", "c1 + c2"),
        BoundKind::Intersection => ("2*r1 + n2 - r2", "r1 + r2"),
    };
    match branch {
        ActiveBranch::FirstMin => format!("first ({first})"),
        ActiveBranch::SecondMin => format!("second ({second})"),
        ActiveBranch::Tie => format!("tie ({first} = {second})"),
    }
}

fn secondary_name(kind: BoundKind) -> &'static str {
    match kind {
        BoundKind::Intersection => "concave",
        _ => "convex",
    }
}

fn render_bound(ctx: &Ctx, kind: BoundKind, report: BoundReport) -> Result<ExitCode, CliError> {
    let text = match ctx.format {
        Format::Json => {
            let mut v = serde_json::to_value(report).expect("report serializes");
            v["active_branch"] = json!(branch_name(kind, report.which_branch));
            format!("{:#}\n", v)
        }
        _ => format!(
            "bound: {}\n{} bound: {}\nactive min branch: {}\n",
            report.n_bound,
            secondary_name(kind),
            report.secondary_bound,
            branch_name(kind, report.which_branch)
        ),
    };
    ctx.emit(&text)?;
    Ok(ExitCode::SUCCESS)
}

fn argmax_list(kind: BoundKind, profiles: &[(usize, usize)]) -> String {
    let (a, b) = match kind {
        BoundKind::Intersection => ("r1", "r2"),
        _ => ("c1", "c2"),
    };
    profiles
        .iter()
        .map(|(s1, s2)| format!("({a}={s1}, {b}={s2})"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_bound_free(
    ctx: &Ctx,
    kind: BoundKind,
    n1: usize,
    n2: usize,
) -> Result<ExitCode, CliError> {
    if kind != BoundKind::Envelope && (n1 < 3 || n2 < 3) {
        return Err(CliError::Usage(format!(
            "polygons need at least 3 vertices, got ({n1}, {n2})"
        )));
    }
    let (grid_max, profiles) = grid_maximize(kind, n1, n2);
    let closed = match kind {
        BoundKind::Envelope => envelope_bound_free(n1, n2),
        BoundKind::Union => union_bound_free_report(n1, n2).grid_max,
        BoundKind::Intersection => intersection_bound_free(n1, n2),
    };
    debug_assert_eq!(grid_max, closed);
    let text = match ctx.format {
        Format::Json => {
            let mut v = json!({
                "bound": grid_max,
                "argmax": profiles,
            });
            if kind == BoundKind::Union {
                let rep = union_bound_free_report(n1, n2);
                v["closed_forms"] = serde_json::to_value(rep).expect("report serializes");
            }
            format!("{:#}\n", v)
        }
        _ => {
            let mut t = format!(
                "bound: {grid_max}\nargmax censuses: {}\n",
                argmax_list(kind, &profiles)
            );
            if kind == BoundKind::Union {
                let rep = union_bound_free_report(n1, n2);
                let which = match (rep.matches_floor, rep.matches_ceil) {
                    (true, true) => "both forms match the grid maximum",
                    (false, true) => "the ceiling form matches the grid maximum",
                    (true, false) => "the floor form matches the grid maximum",
                    (false, false) => "neither form matches the grid maximum",
                };
                let _ = writeln!(
                    t,
                    "closed forms: 2*n1 + 2*n2 - floor(|n1-n2|/2) = {}, \
                     2*n1 + 2*n2 - ceil(|n1-n2|/2) = {}; {which}",
                    rep.floor_form, rep.ceil_form
                );
            }
            t
        }
    };
    ctx.emit(&text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_bound(ctx: &Ctx, which: BoundCmd) -> Result<ExitCode, CliError> {
    match which {
        BoundCmd::Envelope { n1, c1, n2, c2 } => {
            let report =
                envelope_bound(n1, c1, n2, c2).map_err(|e| CliError::Usage(e.to_string()))?;
            render_bound(ctx, BoundKind::Envelope, report)
        }
        BoundCmd::Union { n1, c1, n2, c2 } => {
            let report = union_bound(n1, c1, n2, c2).map_err(|e| CliError::Usage(e.to_string()))?;
            render_bound(ctx, BoundKind::Union, report)
        }
        BoundCmd::Intersection { n1, r1, n2, r2 } => {
            let report =
                intersection_bound(n1, r1, n2, r2).map_err(|e| CliError::Usage(e.to_string()))?;
            render_bound(ctx, BoundKind::Intersection, report)
        }
        BoundCmd::EnvelopeFree { n1, n2 } => render_bound_free(ctx, BoundKind::Envelope, n1, n2),
        BoundCmd::UnionFree { n1, n2 } => render_bound_free(ctx, BoundKind::Union, n1, n2),
        BoundCmd::IntersectionFree { n1, n2 } => {
            render_bound_free(ctx, BoundKind::Intersection, n1, n2)
        }
    }
}

// ------------------------------------------------------------------ gen --

fn cmd_gen(ctx: &Ctx, which: GenCmd) -> Result<ExitCode, CliError> {
    let instance = match which {
        GenCmd::Envelope { params: p } => {
            let (f1, f2, trace) = build_envelope_extremal(p.c1, p.c2, p.r1, p.r2)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            ctx.emit_svg(|| render_envelope_svg(&f1, &f2))?;
            Instance::Envelope {
                f1,
                f2,
                trace: Some(trace),
            }
        }
        GenCmd::Union { params: p } => {
            let (p1, p2, trace) = build_union_extremal(p.c1, p.c2, p.r1, p.r2)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            ctx.emit_svg(|| {
                let res = polygon_union(&p1, &p2).expect("extremal union is clean");
                render_polygons_svg(&p1, &p2, &res)
            })?;
            Instance::Union {
                p1,
                p2,
                trace: Some(trace),
            }
        }
        GenCmd::Intersection { params: p } => {
            let (p1, p2, trace) = build_intersection_extremal(p.r1, p.r2, p.c1, p.c2)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            ctx.emit_svg(|| {
                let res = polygon_intersection(&p1, &p2).expect("extremal intersection is clean");
                render_polygons_svg(&p1, &p2, &res)
            })?;
            Instance::Intersection {
                p1,
                p2,
                trace: Some(trace),
            }
        }
    };
    let json = instance.to_json();
    match &ctx.out {
        Some(path) => {
            fs::write(path, &json).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            let trace = instance.trace().expect("gen always records a trace");
            println!(
                "wrote {} ({} instance, expected n0 = {})",
                path.display(),
                instance.kind_name(),
                trace.expected_n0
            );
        }
        None => print!("{json}"),
    }
    Ok(ExitCode::SUCCESS)
}

// --------------------------------------------------------------- verify --

fn status_word(status: &CheckStatus) -> &'static str {
    match status {
        CheckStatus::Ok => "ok",
        CheckStatus::Skipped(_) => "skipped",
        CheckStatus::Violation(_) => "violation",
    }
}

fn csv_report(kind: CampaignKind, reports: &[InstanceReport]) -> String {
    let (a, b) = match kind {
        CampaignKind::Intersection => ("r1", "r2"),
        _ => ("c1", "c2"),
    };
    let mut out = format!("trial,seed,n1,{a},n2,{b},n0,bound,slack,status\n");
    for (trial, r) in reports.iter().enumerate() {
        let (s1, s2) = match kind {
            CampaignKind::Intersection => (r.input1.r, r.input2.r),
            _ => (r.input1.c, r.input2.c),
        };
        let _ = writeln!(
            out,
            "{trial},{},{},{s1},{},{s2},{},{},{},{}",
            r.seed,
            r.input1.n,
            r.input2.n,
            r.output.n,
            r.bound,
            r.slack,
            status_word(&r.status)
        );
    }
    out
}

fn report_lines(report: &InstanceReport) -> String {
    let mut out = format!(
        "status: {}\ninputs: {} and {}\noutput: {}\nbound: {}  slack: {}\nchecks: {}\n",
        status_word(&report.status),
        report.input1,
        report.input2,
        report.output,
        report.bound,
        report.slack,
        report.checks.join(", ")
    );
    match &report.status {
        CheckStatus::Skipped(reason) => {
            let _ = writeln!(out, "skip reason: {reason}");
        }
        CheckStatus::Violation(details) => {
            for d in details {
                let _ = writeln!(out, "violation: {d}");
            }
        }
        CheckStatus::Ok => {}
    }
    out
}

fn summary_lines(summary: &CampaignSummary) -> String {
    let mut out = format!(
        "trials: {}  ok: {}  skipped: {}  violations: {}\n",
        summary.trials, summary.ok, summary.skipped, summary.violations
    );
    if let Some(min) = summary.min_slack {
        let _ = writeln!(out, "min slack: {min}");
    }
    let hist = summary
        .slack_histogram
        .iter()
        .take(12)
        .map(|(slack, count)| format!("{slack}:{count}"))
        .collect::<Vec<_>>()
        .join(" ");
    let more = if summary.slack_histogram.len() > 12 {
        " ..."
    } else {
        ""
    };
    let _ = writeln!(out, "slack histogram: {hist}{more}");
    for witness in &summary.witnesses {
        if let CheckStatus::Violation(details) = &witness.status {
            let _ = writeln!(
                out,
                "violation (seed {}): {}",
                witness.seed,
                details.join("; ")
            );
        }
    }
    out
}

fn verify_campaign(
    ctx: &Ctx,
    kind: CampaignKind,
    params: &VerifyParams,
) -> Result<ExitCode, CliError> {
    let default_max = match kind {
        CampaignKind::Envelope => 8,
        _ => 10,
    };
    let config = CampaignConfig {
        kind,
        trials: params.trials,
        max_n: params.max_n.unwrap_or(default_max),
        seed: ctx.seed,
    };
    if config.trials == 0 {
        return Err(CliError::Usage("at least one trial is required".into()));
    }
    if config.max_n < 3 && kind != CampaignKind::Envelope {
        return Err(CliError::Usage(
            "polygon trials need --max-n of at least 3".into(),
        ));
    }
    let summary = run_campaign(&config);
    let csv = csv_report(kind, &summary.reports);
    if let Some(path) = &params.csv {
        fs::write(path, &csv).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    let text = match ctx.format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&summary).expect("summary serializes")
        ),
        Format::Csv => csv,
        Format::Table => summary_lines(&summary),
    };
    ctx.emit(&text)?;
    if summary.violations == 0 {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::FAILURE)
    }
}

fn verify_from(ctx: &Ctx, kind: CampaignKind, path: &PathBuf) -> Result<ExitCode, CliError> {
    let instance = Instance::read_file(path).map_err(|e| CliError::Io(e.to_string()))?;
    let reports = match (&instance, kind) {
        (Instance::Envelope { f1, f2, .. }, CampaignKind::Envelope) => {
            ctx.emit_svg(|| render_envelope_svg(f1, f2))?;
            vec![check_envelope_instance(f1, f2)]
        }
        (Instance::Union { p1, p2, .. }, CampaignKind::Union) => {
            if let Ok(res) = polygon_union(p1, p2) {
                ctx.emit_svg(|| render_polygons_svg(p1, p2, &res))?;
            }
            vec![check_union_instance(p1, p2)]
        }
        (Instance::Intersection { p1, p2, .. }, CampaignKind::Intersection) => {
            if let Ok(res) = polygon_intersection(p1, p2) {
                ctx.emit_svg(|| render_polygons_svg(p1, p2, &res))?;
            }
            check_intersection_instance(p1, p2)
        }
        _ => {
            return Err(CliError::Usage(format!(
                "{} holds a {} instance, which does not match the subcommand",
                path.display(),
                instance.kind_name()
            )))
        }
    };
    let text = match ctx.format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&reports).expect("reports serialize")
        ),
        Format::Csv => csv_report(kind, &reports),
        Format::Table => {
            if reports.is_empty() {
                "empty result, nothing to check\n".to_owned()
            } else {
                reports.iter().map(report_lines).collect()
            }
        }
    };
    ctx.emit(&text)?;
    let violated = reports
        .iter()
        .any(|r| matches!(r.status, CheckStatus::Violation(_)));
    if violated {
        Ok(ExitCode::FAILURE)
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn cmd_verify(ctx: &Ctx, which: VerifyCmd) -> Result<ExitCode, CliError> {
    let (kind, params) = match which {
        VerifyCmd::Envelope { params } => (CampaignKind::Envelope, params),
        VerifyCmd::Union { params } => (CampaignKind::Union, params),
        VerifyCmd::Intersection { params } => (CampaignKind::Intersection, params),
    };
    match &params.from {
        Some(path) => verify_from(ctx, kind, path),
        None => verify_campaign(ctx, kind, &params),
    }
}

// ---------------------------------------------------------------- table --

struct TableRow {
    profile: [usize; 4],
    bound: usize,
    achieved: usize,
    clean: bool,
}

fn envelope_rows(max: usize) -> Vec<TableRow> {
    let mut rows = Vec::new();
    for c1 in 0..=max {
        for c2 in c1..=max {
            for r1 in 0..=max.min(3) {
                for r2 in 0..=max.min(3) {
                    let (f1, f2, _) = build_envelope_extremal(c1, c2, r1, r2)
                        .expect("envelope parameters are unrestricted");
                    let report = check_envelope_instance(&f1, &f2);
                    let bound = envelope_bound(c1 + r1, c1, c2 + r2, c2)
                        .expect("census is consistent")
                        .n_bound;
                    rows.push(TableRow {
                        profile: [c1, c2, r1, r2],
                        bound,
                        achieved: report.output.n,
                        clean: report.status == CheckStatus::Ok,
                    });
                }
            }
        }
    }
    rows
}

fn union_rows(max: usize) -> Vec<TableRow> {
    let mut rows = Vec::new();
    for c1 in 3..=max.max(3) {
        for c2 in c1..=max.max(3) {
            for r1 in 0..=max.min(3) {
                for r2 in 0..=max.min(3) {
                    let (p1, p2, _) =
                        build_union_extremal(c1, c2, r1, r2).expect("c1, c2 >= 3 here");
                    let report = check_union_instance(&p1, &p2);
                    let bound = union_bound(c1 + r1, c1, c2 + r2, c2)
                        .expect("census is consistent")
                        .n_bound;
                    rows.push(TableRow {
                        profile: [c1, c2, r1, r2],
                        bound,
                        achieved: report.output.n,
                        clean: report.status == CheckStatus::Ok,
                    });
                }
            }
        }
    }
    rows
}

fn intersection_rows(max: usize) -> Vec<TableRow> {
    let mut rows = Vec::new();
    for r1 in 0..=max {
        for r2 in r1..=max {
            for c1 in 3..=max.max(4) {
                for c2 in 3..=max.max(4) {
                    let (p1, p2, _) =
                        build_intersection_extremal(r1, r2, c1, c2).expect("c1, c2 >= 3 here");
                    let reports = check_intersection_instance(&p1, &p2);
                    let bound = intersection_bound(c1 + r1, r1, c2 + r2, r2)
                        .expect("census is consistent")
                        .n_bound;
                    // The extremal instance has a single component.
                    let (achieved, clean) = match reports.as_slice() {
                        [only] => (only.output.n, only.status == CheckStatus::Ok),
                        _ => (0, false),
                    };
                    rows.push(TableRow {
                        profile: [r1, r2, c1, c2],
                        bound,
                        achieved,
                        clean,
                    });
                }
            }
        }
    }
    rows
}

fn render_table(ctx: &Ctx, headers: [&str; 4], rows: &[TableRow]) -> Result<ExitCode, CliError> {
    let all_tight = rows.iter().all(|r| r.clean && r.achieved == r.bound);
    let text = match ctx.format {
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|r| {
                    let mut v = json!({
                        "bound": r.bound,
                        "achieved": r.achieved,
                        "tight": r.clean && r.achieved == r.bound,
                    });
                    for (name, value) in headers.iter().zip(r.profile) {
                        v[*name] = json!(value);
                    }
                    v
                })
                .collect();
            format!("{:#}\n", json!({ "rows": items, "all_tight": all_tight }))
        }
        Format::Csv => {
            let mut out = format!(
                "{},{},{},{},bound,achieved,status\n",
                headers[0], headers[1], headers[2], headers[3]
            );
            for r in rows {
                let ok = r.clean && r.achieved == r.bound;
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.profile[0],
                    r.profile[1],
                    r.profile[2],
                    r.profile[3],
                    r.bound,
                    r.achieved,
                    if ok { "tight" } else { "MISMATCH" }
                );
            }
            out
        }
        Format::Table => {
            let mut out = format!(
                "{:>4} {:>4} {:>4} {:>4} {:>6} {:>9}  status\n",
                headers[0], headers[1], headers[2], headers[3], "bound", "achieved"
            );
            for r in rows {
                let ok = r.clean && r.achieved == r.bound;
                let _ = writeln!(
                    out,
                    "{:>4} {:>4} {:>4} {:>4} {:>6} {:>9}  {}",
                    r.profile[0],
                    r.profile[1],
                    r.profile[2],
                    r.profile[3],
                    r.bound,
                    r.achieved,
                    if ok { "tight" } else { "MISMATCH" }
                );
            }
            let _ = writeln!(
                out,
                "{} rows, {}",
                rows.len(),
                if all_tight {
                    "all tight".to_owned()
                } else {
                    let bad = rows
                        .iter()
                        .filter(|r| !(r.clean && r.achieved == r.bound))
                        .count();
                    format!("{bad} MISMATCHED")
                }
            );
            out
        }
    };
    ctx.emit(&text)?;
    if all_tight {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::FAILURE)
    }
}

fn cmd_table(ctx: &Ctx, which: TableCmd) -> Result<ExitCode, CliError> {
    match which {
        TableCmd::Envelope { params } => {
            render_table(ctx, ["c1", "c2", "r1", "r2"], &envelope_rows(params.max))
        }
        TableCmd::Union { params } => {
            if params.max < 3 {
                return Err(CliError::Usage(
                    "union sweeps need --max of at least 3".into(),
                ));
            }
            render_table(ctx, ["c1", "c2", "r1", "r2"], &union_rows(params.max))
        }
        TableCmd::Intersection { params } => render_table(
            ctx,
            ["r1", "r2", "c1", "c2"],
            &intersection_rows(params.max),
        ),
    }
}
