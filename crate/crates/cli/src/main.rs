//! `riordan`: build, measure and check binary Riordan graphs.
//!
//! Exit status: 0 when everything checked holds, 1 when a mathematical
//! discrepancy is found, 2 on usage or resource errors.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use riordan_graph::analysis::{self, VerificationReport, Verdict};
use riordan_graph::riordan::a_sequence;
use riordan_graph::search::{self, ScanOptions};
use riordan_graph::{golden, ASequence, BinarySeries, Error, Exec, Graph, RiordanGraph, RiordanPair};

#[derive(Parser, Debug)]
#[command(name = "riordan", version, about = "Binary Riordan graphs: build, measure, verify, scan")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Worker threads for scans (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Refuse scans whose estimated BFS vertex visits exceed this.
    #[arg(long, global = true, default_value_t = search::DEFAULT_BUDGET)]
    budget: u128,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Dot,
    Matrix,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the graph of a pair or A-sequence.
    Graph {
        #[command(flatten)]
        desc: Descriptor,
        /// Number of vertices.
        #[arg(short = 'n', long)]
        n: usize,
        /// Relabel vertex i as n+1-i.
        #[arg(long)]
        reverse: bool,
    },
    /// Compute one metric of a graph.
    Metric {
        #[command(flatten)]
        desc: Descriptor,
        #[arg(short = 'n', long)]
        n: usize,
        #[arg(long)]
        reverse: bool,
        #[command(subcommand)]
        metric: Metric,
    },
    /// Check a structural or diameter statement; prints one report line.
    Verify(VerifyArgs),
    /// Scan a conjecture; CSV of violations (or of every record with --all).
    Scan(ScanArgs),
    /// Recompute a printed artifact and diff it against the embedded copy.
    Reproduce {
        #[arg(value_enum)]
        target: Target,
    },
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Metric {
    Diameter,
    /// Shortest-path distance between two vertices.
    Distance { u: usize, v: usize },
    /// Exact clique number.
    Clique,
    /// io coloring and its number of colors.
    Colors,
    /// Vertices adjacent to all others.
    Universal,
    Eccentricities,
    /// All-pairs distance matrix.
    Distances,
}

#[derive(Args, Debug, Clone, Default)]
#[group(multiple = false)]
struct Descriptor {
    /// Named Bell family.
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Bell pair (g, zg) from the coefficients of g, degree 0 first.
    #[arg(long)]
    g: Option<String>,
    /// Binary A-sequence a_0 a_1 ..., zero-extended as needed.
    #[arg(long)]
    aseq: Option<String>,
    /// A-sequence of N ones followed by zeros.
    #[arg(long, value_name = "N")]
    aseq_ones: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Catalan,
    Pascal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Claim {
    Structural,
    Fractal,
    CatalanDiameters,
    MixedSize,
    Monotonicity,
    Section3,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    claim: Claim,
    #[command(flatten)]
    desc: Descriptor,
    /// Largest order for `structural`.
    #[arg(long, default_value_t = 64)]
    nmax: usize,
    /// Largest k for `catalan-diameters`.
    #[arg(long, default_value_t = 7)]
    kmax: u32,
    /// Level s for `fractal` and `mixed-size`.
    #[arg(long)]
    s: Option<u32>,
    /// Largest window index for `fractal` (default: all that fit).
    #[arg(long)]
    alpha_max: Option<usize>,
    /// Order for `fractal`.
    #[arg(short = 'n', long)]
    n: Option<usize>,
    #[arg(short = 'k', long)]
    k: Option<u32>,
    #[arg(short = 'm', long)]
    m: Option<u32>,
    /// Largest m for `monotonicity`.
    #[arg(long, default_value_t = 2)]
    mmax: u32,
}

#[derive(Args, Debug)]
struct ScanArgs {
    /// Conjecture number: 1, 2 or 3.
    #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
    conjecture: u8,
    #[command(flatten)]
    desc: Descriptor,
    /// Largest order (conjectures 1 and 3).
    #[arg(long)]
    nmax: Option<usize>,
    /// A-sequence length when scanning every pattern (conjecture 1).
    #[arg(long)]
    alen: Option<usize>,
    /// Order 2^k (conjecture 2).
    #[arg(short = 'k', long)]
    k: Option<u32>,
    /// Leading entries forced to 1 (conjecture 2).
    #[arg(long, default_value_t = 2)]
    leading_ones: usize,
    /// Random sequences drawn when the space is too large to enumerate.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Emit every record, not only violations.
    #[arg(long)]
    all: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    Counterexamples,
    Table1,
    Table2,
    Figure1,
    ExampleCg4r,
    ExampleCg8r,
}

/// Output text plus exit status.
struct Outcome {
    stdout: String,
    stderr: String,
    discrepancy: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            discrepancy: false,
        }
    }
}

enum Failure {
    Usage(String),
    Discrepancy(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Disconnected { .. } | Error::IoViolation { .. } => Failure::Discrepancy(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CmdResult = Result<Outcome, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

enum Source {
    Pair(RiordanPair),
    Bell(ASequence),
}

impl Descriptor {
    fn is_empty(&self) -> bool {
        self.family.is_none() && self.g.is_none() && self.aseq.is_none() && self.aseq_ones.is_none()
    }

    /// Source able to produce graphs of order up to `n`.
    fn source(&self, n: usize) -> Result<Source, Failure> {
        let len = n.saturating_sub(1).max(2);
        if let Some(family) = self.family {
            return Ok(Source::Bell(match family {
                Family::Catalan => ASequence::catalan(len),
                Family::Pascal => ASequence::pascal(len),
            }));
        }
        if let Some(g) = &self.g {
            let g = BinarySeries::named(&g.parse()?, n.max(1))?;
            return Ok(Source::Pair(RiordanPair::bell(g)));
        }
        if let Some(a) = &self.aseq {
            let a = ASequence::parse(a)?;
            return Ok(Source::Bell(a.resized(len.max(a.len()))));
        }
        if let Some(ones) = self.aseq_ones {
            if ones == 0 {
                return Err(usage("--aseq-ones needs at least one leading 1"));
            }
            return Ok(Source::Bell(ASequence::ones_then_zeros(ones, len.max(ones))));
        }
        Err(usage("give one of --family, --g, --aseq, --aseq-ones"))
    }

    /// Binary A-sequence with at least `len` entries.
    fn aseq(&self, len: usize) -> Result<ASequence, Failure> {
        match self.source(len + 1)? {
            Source::Bell(a) => Ok(a),
            Source::Pair(p) => Ok(a_sequence(&p, len)?),
        }
    }

    fn graph(&self, n: usize, reverse: bool) -> Result<Graph, Failure> {
        if n == 0 {
            return Err(usage("-n must be at least 1"));
        }
        let g = match self.source(n)? {
            Source::Bell(a) => RiordanGraph::build_bell_aseq(&a, n)?,
            Source::Pair(p) => RiordanGraph::build(&p, n)?,
        };
        Ok(if reverse { g.reverse() } else { g.into_graph() })
    }
}

fn render_graph(g: &Graph, format: Format, name: &str) -> String {
    match format {
        Format::Table | Format::Matrix => g.to_matrix_string(),
        Format::Dot => g.to_dot(name),
        Format::Csv => g.to_edge_csv(),
    }
}

/// Left-aligned columns from a CSV header and rows.
fn csv_to_table(csv: &str) -> String {
    let rows: Vec<Vec<&str>> = csv.lines().map(|l| l.split(',').collect()).collect();
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in &rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn render_csv(csv: String, format: Format) -> Result<String, Failure> {
    match format {
        Format::Csv => Ok(csv),
        Format::Table => Ok(csv_to_table(&csv)),
        other => Err(usage(format!("--format {other:?} does not apply here").to_lowercase())),
    }
}

fn cmd_graph(desc: &Descriptor, n: usize, reverse: bool, format: Format) -> CmdResult {
    let g = desc.graph(n, reverse)?;
    let name = format!("G{n}{}", if reverse { "r" } else { "" });
    Ok(Outcome::ok(render_graph(&g, format, &name)))
}

fn cmd_metric(desc: &Descriptor, n: usize, reverse: bool, metric: Metric, format: Format) -> CmdResult {
    let g = desc.graph(n, reverse)?;
    let kv = |key: &str, value: String| -> Result<String, Failure> {
        match format {
            Format::Csv => Ok(format!("metric,value\n{key},{value}\n")),
            Format::Table => Ok(format!("{value}\n")),
            other => Err(usage(format!("--format {other:?} does not apply to metrics").to_lowercase())),
        }
    };
    let out = match metric {
        Metric::Diameter => kv("diameter", g.diameter()?.to_string())?,
        Metric::Distance { u, v } => {
            let d = g.distance(u, v)?;
            kv("distance", d.map_or_else(|| "inf".into(), |d| d.to_string()))?
        }
        Metric::Clique => kv("clique", g.max_clique_size()?.to_string())?,
        Metric::Colors => {
            let c = g.io_coloring()?;
            match format {
                Format::Csv => {
                    let mut out = String::from("vertex,color\n");
                    for (v, col) in c.colors.iter().enumerate() {
                        let _ = writeln!(out, "{},{col}", v + 1);
                    }
                    out
                }
                _ => {
                    let mut out = format!("{}\n", c.count);
                    for (col, class) in c.classes().iter().enumerate() {
                        let members: Vec<String> = class.iter().map(usize::to_string).collect();
                        let _ = writeln!(out, "color {col}: {}", members.join(" "));
                    }
                    out
                }
            }
        }
        Metric::Universal => {
            let list: Vec<String> = g.universal_vertices().iter().map(usize::to_string).collect();
            kv("universal", list.join(" "))?
        }
        Metric::Eccentricities => {
            let ecc = g.eccentricities()?;
            let mut csv = String::from("vertex,eccentricity\n");
            for (v, e) in ecc.iter().enumerate() {
                let _ = writeln!(csv, "{},{e}", v + 1);
            }
            render_csv(csv, format)?
        }
        Metric::Distances => render_csv(g.to_distance_csv(), format)?,
    };
    Ok(Outcome::ok(out))
}

fn require<T>(value: Option<T>, flag: &str, claim: &str) -> Result<T, Failure> {
    value.ok_or_else(|| usage(format!("{claim} needs {flag}")))
}

fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    let desc = if args.desc.is_empty() {
        Descriptor {
            family: Some(Family::Catalan),
            ..Default::default()
        }
    } else {
        args.desc.clone()
    };
    let report: VerificationReport = match args.claim {
        Claim::Structural => analysis::verify_structural(&desc.aseq(args.nmax)?, args.nmax)?,
        Claim::Fractal => {
            let s = require(args.s, "--s", "fractal")?;
            let n = require(args.n, "-n", "fractal")?;
            let step = 1usize.checked_shl(s).ok_or_else(|| usage("--s too large"))?;
            let fitting = (n.saturating_sub(1) / step).saturating_sub(1);
            let alpha_max = args.alpha_max.unwrap_or(fitting);
            if alpha_max == 0 {
                return Err(usage(format!("no window fits in order {n} at s={s}")));
            }
            analysis::verify_fractal(&desc.aseq(n)?, s, alpha_max, n)?
        }
        Claim::CatalanDiameters => analysis::verify_catalan_diameters(args.kmax)?,
        Claim::MixedSize => {
            let k = require(args.k, "-k", "mixed-size")?;
            let m = require(args.m, "-m", "mixed-size")?;
            let s = args.s.unwrap_or(0);
            let n = analysis::mixed_order(k, m, s).ok_or_else(|| usage("order overflows"))?;
            analysis::verify_mixed_size(k, m, s, &desc.aseq(n)?)?
        }
        Claim::Monotonicity => {
            let k = require(args.k, "-k", "monotonicity")?;
            let top = 1usize
                .checked_shl(k + args.mmax)
                .ok_or_else(|| usage("order overflows"))?;
            analysis::verify_monotonicity(&desc.aseq(top)?, k, args.mmax)?
        }
        Claim::Section3 => {
            let k = require(args.k, "-k", "section3")?;
            let n = 1usize.checked_shl(k).ok_or_else(|| usage("order overflows"))?;
            analysis::verify_section3(&desc.aseq(n.max(16))?, k)?
        }
    };
    Ok(Outcome {
        stdout: format!("{report}\n"),
        stderr: String::new(),
        discrepancy: report.verdict == Verdict::Fail,
    })
}

fn scan_options(jobs: usize, budget: u128) -> ScanOptions {
    ScanOptions {
        exec: Exec::with_jobs(jobs),
        budget,
    }
}

fn cmd_scan(args: &ScanArgs, format: Format, opts: &ScanOptions) -> CmdResult {
    let (csv, summary, notes, violated) = match args.conjecture {
        1 => {
            let n_max = args.nmax.unwrap_or(100);
            let report = if args.desc.is_empty() {
                search::scan_conjecture1(n_max, args.alen.unwrap_or(n_max.saturating_sub(1)), opts)?
            } else {
                let a = args.desc.aseq(n_max.saturating_sub(1).max(1))?;
                search::scan_conjecture1_for(&[a], n_max, opts)?
            };
            let notes: Vec<String> = search::diameter_two_candidates(&report)
                .iter()
                .map(|a| format!("diameter 2 at every order, not Pascal: {a}"))
                .collect();
            (report.to_csv(args.all), report.summary(), notes, !report.holds())
        }
        2 => {
            let k = args.k.ok_or_else(|| usage("scan 2 needs -k"))?;
            let prefix = vec![true; args.leading_ones.max(2)];
            let report = search::scan_conjecture2_with_prefix(k, &prefix, args.samples, args.seed, opts)?;
            let attaining: Vec<String> = search::attaining(&report).iter().map(ASequence::to_bit_string).collect();
            let notes = vec![format!("attaining diameter {k}: {}", attaining.join(" "))];
            (report.to_csv(args.all), report.summary(), notes, !report.holds())
        }
        _ => {
            let report = search::scan_conjecture3(args.nmax.unwrap_or(256), opts)?;
            (report.to_csv(args.all), report.summary(), Vec::new(), !report.holds())
        }
    };
    let mut stderr = format!("{summary}\n");
    for note in notes {
        stderr.push_str(&note);
        stderr.push('\n');
    }
    Ok(Outcome {
        stdout: render_csv(csv, format)?,
        stderr,
        discrepancy: violated,
    })
}

fn compare_matrix(built: &Graph, printed: &Graph, format: Format, name: &str) -> CmdResult {
    let same = built == printed;
    let note = match built.first_difference(printed) {
        None => "matches the printed matrix".to_string(),
        Some((u, v)) => format!("differs from the printed matrix at ({u},{v})"),
    };
    let mut stdout = render_graph(built, format, name);
    let mut stderr = String::new();
    if format == Format::Table {
        let _ = writeln!(stdout, "# {note}");
    } else {
        let _ = writeln!(stderr, "{note}");
    }
    Ok(Outcome {
        stdout,
        stderr,
        discrepancy: !same,
    })
}

fn catalan_graph(n: usize) -> Result<Graph, Failure> {
    Ok(RiordanGraph::build_bell_aseq(&ASequence::catalan(n.max(2)), n)?.into_graph())
}

fn cmd_reproduce(target: Target, format: Format, opts: &ScanOptions) -> CmdResult {
    match target {
        Target::Figure1 => compare_matrix(&catalan_graph(6)?, &golden::matrix(golden::FIGURE1_CG6), format, "CG6"),
        Target::ExampleCg4r => compare_matrix(
            &catalan_graph(4)?.reverse(),
            &golden::matrix(golden::CG4_REVERSE),
            format,
            "CG4r",
        ),
        Target::ExampleCg8r => compare_matrix(
            &catalan_graph(8)?.reverse(),
            &golden::matrix(golden::CG8_REVERSE),
            format,
            "CG8r",
        ),
        Target::Counterexamples => {
            let rows = search::reproduce_counterexamples(opts)?;
            let printed = golden::counterexample_rows();
            let mut csv = String::from("n,diam_catalan,diam,printed\n");
            for r in &rows {
                let status = if printed.contains(&(r.n, r.diam_catalan, r.diam)) { "match" } else { "extra" };
                let _ = writeln!(csv, "{},{},{},{status}", r.n, r.diam_catalan, r.diam);
            }
            let got: Vec<_> = rows.iter().map(|r| (r.n, r.diam_catalan, r.diam)).collect();
            let missing: Vec<_> = printed.iter().filter(|p| !got.contains(p)).collect();
            for (n, dc, d) in &missing {
                let _ = writeln!(csv, "{n},{dc},{d},missing");
            }
            let same = got == printed;
            let stderr = format!(
                "{} rows; {}\n",
                rows.len(),
                if same { "all match the printed list" } else { "differs from the printed list" }
            );
            Ok(Outcome {
                stdout: render_csv(csv, format)?,
                stderr,
                discrepancy: !same,
            })
        }
        Target::Table1 | Target::Table2 => {
            let (t1, t2) = search::reproduce_tables(opts)?;
            let t = if target == Target::Table1 { t1 } else { t2 };
            let mut stdout = render_csv(t.to_csv(), format)?;
            let mut stderr = String::new();
            for note in t.diff_notes() {
                if format == Format::Table {
                    let _ = writeln!(stdout, "# {note}");
                } else {
                    let _ = writeln!(stderr, "{note}");
                }
            }
            Ok(Outcome {
                stdout,
                stderr,
                discrepancy: !t.unambiguous_rows_match(),
            })
        }
    }
}

fn run(cli: &Cli) -> CmdResult {
    let opts = scan_options(cli.jobs, cli.budget);
    match &cli.command {
        Command::Graph { desc, n, reverse } => cmd_graph(desc, *n, *reverse, cli.format),
        Command::Metric {
            desc,
            n,
            reverse,
            metric,
        } => cmd_metric(desc, *n, *reverse, *metric, cli.format),
        Command::Verify(args) => cmd_verify(args),
        Command::Scan(args) => cmd_scan(args, cli.format, &opts),
        Command::Reproduce { target } => cmd_reproduce(*target, cli.format, &opts),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            eprint!("{}", out.stderr);
            ExitCode::from(u8::from(out.discrepancy))
        }
        Err(Failure::Discrepancy(msg)) => {
            eprintln!("riordan: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("riordan: {msg}");
            ExitCode::from(2)
        }
    }
}
