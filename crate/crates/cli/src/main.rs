//! Command-line front end: build and export group graphs, run witness and
//! isomorphism checks, execute claim verifications and parameter surveys.
//!
//! Exit codes: 0 when everything holds (or a witness is found), 1 for
//! usage and parse errors, 2 for a refuted claim or confirmed
//! non-isomorphism, 3 when a search exhausts its node budget and the
//! instance is undecided. Output is byte-identical for identical
//! invocations.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use group_graphs::{
    commuting_graph, enhanced_power_graph, find_isomorphism_with_budget, power_graph,
    ClaimReport, ClaimStatus, FiniteGroup, IsoError, IsoOutcome, LabeledGraph, SurveyRow,
    VerifyError, DEFAULT_NODE_BUDGET,
};

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_REFUTED: u8 = 2;
const EXIT_UNDECIDED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "groupgraphs",
    about = "Build, export, and verify power, enhanced power, and commuting graphs \
             of cyclic (C<n>), dihedral (D<order>), and dicyclic (Q<order>) groups",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build one graph of a group, e.g. `build Q32 pow --format dot`
    Build {
        /// Group descriptor: `C<n>`, `D<order>`, or `Q<order>`
        descriptor: String,
        /// Graph kind: pow, epow, or com
        kind: GraphKind,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Decide isomorphism of two graphs given as `<descriptor>:<kind>`
    Iso {
        /// Left graph, e.g. Q32:pow
        left: String,
        /// Right graph, e.g. D32:com
        right: String,
        /// Search budget in backtracking nodes
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run claim batteries and report their statuses
    Verify {
        #[command(subcommand)]
        battery: Battery,
    },
    /// Run the full verification battery over parameter ranges
    Survey {
        /// Largest n for the order-2^{n+1} pipeline
        #[arg(long)]
        n_max: u32,
        /// Largest m for the order-4m pipeline
        #[arg(long)]
        m_max: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Subcommand)]
enum Battery {
    /// The order-2^{n+1} isomorphism pipeline
    Theorem1 {
        /// n or inclusive range n1..n2
        #[arg(long)]
        n: RangeArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The order-4m isomorphism pipeline
    Theorem2 {
        /// m or inclusive range m1..m2
        #[arg(long)]
        m: RangeArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Per-family structural lemmas for one group
    Lemmas {
        descriptor: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Graph-equality chains and subgroup criteria for one group
    Remarks {
        descriptor: String,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphKind {
    Pow,
    #[value(name = "epow")]
    EPow,
    Com,
}

impl GraphKind {
    fn build(self, group: &FiniteGroup) -> LabeledGraph {
        match self {
            GraphKind::Pow => power_graph(group),
            GraphKind::EPow => enhanced_power_graph(group),
            GraphKind::Com => commuting_graph(group),
        }
    }

    fn name(self) -> &'static str {
        match self {
            GraphKind::Pow => "pow",
            GraphKind::EPow => "epow",
            GraphKind::Com => "com",
        }
    }
}

/// Inclusive integer range: `a..b` or a single value.
#[derive(Clone, Copy)]
struct RangeArg {
    start: u32,
    end: u32,
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.parse::<u32>()
                .map_err(|_| format!("`{t}` is not a non-negative integer"))
        };
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if start > end {
            return Err(format!("empty range {start}..{end}"));
        }
        Ok(RangeArg { start, end })
    }
}

/// A failure that carries the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests are not usage errors.
            if err.use_stderr() {
                eprint!("{err}");
                return ExitCode::from(EXIT_USAGE);
            }
            print!("{err}");
            return ExitCode::from(EXIT_OK);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Build { descriptor, kind, output } => {
            let group = parse_descriptor(&descriptor)?;
            let graph = kind.build(&group);
            let rendered = match output.format {
                Format::Json => pretty_json(&graph.to_document(Some(&group.descriptor()))),
                Format::Dot => graph.to_dot(),
                Format::Text => render_graph_text(&group, kind, &graph),
            };
            emit(&output, &rendered)?;
            Ok(EXIT_OK)
        }
        Command::Iso { left, right, node_budget, output } => {
            let (lgroup, lkind) = parse_graph_arg(&left)?;
            let (rgroup, rkind) = parse_graph_arg(&right)?;
            reject_dot(&output)?;
            let lgraph = lkind.build(&lgroup);
            let rgraph = rkind.build(&rgroup);
            match find_isomorphism_with_budget(&lgraph, &rgraph, node_budget) {
                Ok(IsoOutcome::Witness(witness)) => {
                    let rendered = match output.format {
                        Format::Json => pretty_json(&witness),
                        _ => {
                            let mut text =
                                format!("isomorphic: witness with {} pairs\n", witness.len());
                            for (u, v) in witness.iter() {
                                let _ = writeln!(text, "{u} -> {v}");
                            }
                            text
                        }
                    };
                    emit(&output, &rendered)?;
                    Ok(EXIT_OK)
                }
                Ok(IsoOutcome::NonIso(cert)) => {
                    let rendered = match output.format {
                        Format::Json => pretty_json(&cert),
                        _ => format!(
                            "non-isomorphic: {:?} {}\n",
                            cert.certificate,
                            compact_json(&cert.detail)
                        ),
                    };
                    emit(&output, &rendered)?;
                    Ok(EXIT_REFUTED)
                }
                Err(IsoError::BudgetExhausted { budget, explored }) => {
                    let rendered = match output.format {
                        Format::Json => pretty_json(&serde_json::json!({
                            "undecided": { "budget": budget, "nodes_explored": explored }
                        })),
                        _ => format!("undecided: budget of {budget} nodes exhausted\n"),
                    };
                    emit(&output, &rendered)?;
                    Ok(EXIT_UNDECIDED)
                }
                Err(err) => Err(Failure::usage(err.to_string())),
            }
        }
        Command::Verify { battery } => {
            let (reports, output) = run_battery(battery)?;
            let rendered = match output.format {
                Format::Json => pretty_json(&reports),
                _ => render_reports_text(&reports),
            };
            emit(&output, &rendered)?;
            Ok(if reports.iter().any(|r| r.status == ClaimStatus::Refuted) {
                EXIT_REFUTED
            } else {
                EXIT_OK
            })
        }
        Command::Survey { n_max, m_max, output } => {
            reject_dot(&output)?;
            let rows = group_graphs::survey(n_max, m_max).map_err(verify_failure)?;
            let rendered = match output.format {
                Format::Json => pretty_json(&rows),
                _ => render_survey_text(&rows),
            };
            emit(&output, &rendered)?;
            Ok(if rows.iter().any(|r| r.refuted > 0) {
                EXIT_REFUTED
            } else {
                EXIT_OK
            })
        }
    }
}

fn run_battery(battery: Battery) -> Result<(Vec<ClaimReport>, OutputArgs), Failure> {
    match battery {
        Battery::Theorem1 { n, output } => {
            reject_dot(&output)?;
            let mut reports = Vec::new();
            for value in n.start..=n.end {
                reports.extend(group_graphs::verify_theorem1(value).map_err(verify_failure)?);
            }
            Ok((reports, output))
        }
        Battery::Theorem2 { m, output } => {
            reject_dot(&output)?;
            let mut reports = Vec::new();
            for value in m.start..=m.end {
                reports.extend(group_graphs::verify_theorem2(value).map_err(verify_failure)?);
            }
            Ok((reports, output))
        }
        Battery::Lemmas { descriptor, output } => {
            reject_dot(&output)?;
            let group = parse_descriptor(&descriptor)?;
            Ok((group_graphs::verify_lemmas(&group), output))
        }
        Battery::Remarks { descriptor, output } => {
            reject_dot(&output)?;
            let group = parse_descriptor(&descriptor)?;
            Ok((group_graphs::verify_remarks(&group), output))
        }
    }
}

fn parse_descriptor(text: &str) -> Result<FiniteGroup, Failure> {
    FiniteGroup::from_descriptor(text).map_err(|e| Failure::usage(e.to_string()))
}

/// Parses a graph argument of the form `<descriptor>:<kind>`.
fn parse_graph_arg(text: &str) -> Result<(FiniteGroup, GraphKind), Failure> {
    let (descriptor, kind) = text.split_once(':').ok_or_else(|| {
        Failure::usage(format!(
            "graph argument `{text}` must look like Q32:pow (descriptor, colon, pow|epow|com)"
        ))
    })?;
    let group = parse_descriptor(descriptor)?;
    let kind = GraphKind::from_str(kind, true)
        .map_err(|_| Failure::usage(format!("unknown graph kind `{kind}`")))?;
    Ok((group, kind))
}

fn reject_dot(output: &OutputArgs) -> Result<(), Failure> {
    if output.format == Format::Dot {
        Err(Failure::usage("dot output is only available for `build`"))
    } else {
        Ok(())
    }
}

fn verify_failure(err: VerifyError) -> Failure {
    match err {
        VerifyError::InvalidParameter(_) => Failure::usage(err.to_string()),
        VerifyError::Undecided { .. } => Failure {
            code: EXIT_UNDECIDED,
            message: err.to_string(),
        },
    }
}

fn pretty_json<T: serde::Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable value");
    text.push('\n');
    text
}

fn compact_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable value")
}

fn render_graph_text(group: &FiniteGroup, kind: GraphKind, graph: &LabeledGraph) -> String {
    let mut text = format!(
        "graph {}:{} vertices={} edges={}\n",
        group.descriptor(),
        kind.name(),
        graph.vertex_count(),
        graph.edge_count()
    );
    for label in graph.sorted_vertices() {
        let _ = writeln!(text, "v {label}");
    }
    for (u, v) in graph.edges() {
        let _ = writeln!(text, "e {u} -- {v}");
    }
    text
}

fn render_reports_text(reports: &[ClaimReport]) -> String {
    let mut text = String::new();
    for report in reports {
        let status = match report.status {
            ClaimStatus::Verified => "verified",
            ClaimStatus::Refuted => "REFUTED",
            ClaimStatus::NotApplicable => "not_applicable",
        };
        let _ = writeln!(text, "{:<40} {}", report.claim, status);
        if report.status == ClaimStatus::Refuted {
            let _ = writeln!(text, "    evidence: {}", compact_json(&report.evidence));
        }
    }
    let count = |s: ClaimStatus| reports.iter().filter(|r| r.status == s).count();
    let _ = writeln!(
        text,
        "summary: verified={} refuted={} not_applicable={}",
        count(ClaimStatus::Verified),
        count(ClaimStatus::Refuted),
        count(ClaimStatus::NotApplicable)
    );
    text
}

fn render_survey_text(rows: &[SurveyRow]) -> String {
    let mut text = String::new();
    for row in rows {
        let _ = writeln!(
            text,
            "{:<16} verified={:<3} refuted={:<3} not_applicable={:<3} elapsed_ms={}",
            row.row,
            row.verified,
            row.refuted,
            row.not_applicable,
            row.elapsed.as_millis()
        );
    }
    let _ = writeln!(
        text,
        "summary: rows={} refuted_rows={}",
        rows.len(),
        rows.iter().filter(|r| r.refuted > 0).count()
    );
    text
}

fn emit(output: &OutputArgs, rendered: &str) -> Result<(), Failure> {
    match &output.out {
        Some(path) => std::fs::write(path, rendered).map_err(|e| {
            Failure::usage(format!("cannot write {}: {e}", path.display()))
        }),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}
