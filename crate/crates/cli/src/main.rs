//! `vcensus`: exact order-k Voronoi combinatorics from the command line.
//!
//! Subcommands: `gen` (random general-position instances), `analyze`
//! (censuses, identity checks, optional poset, JSON report), `table`
//! (closed-form reduced vectors), `check` (randomized identity campaigns).
//!
//! Exit codes: 0 on success with all checks passing, 1 when an identity
//! check or campaign trial fails, 2 on input or validation errors.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use voronoi_census::census::{check_all_with_guard, closed_form_table, CensusError, CensusReport};
use voronoi_census::instances::{generate, GeneratorError};
use voronoi_census::io::{format_points, parse_points};
use voronoi_census::poset::{build_poset_with_guard, LatticeSide, VoronoiPoset};
use voronoi_census::report::ReportDocument;
use voronoi_census::RatSiteSet;

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(
    name = "vcensus",
    version,
    about = "Exact order-k Voronoi combinatorics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random integer-grid instance in general position.
    Gen {
        /// Number of sites (>= 3).
        #[arg(long)]
        n: usize,
        /// RNG seed; identical parameters reproduce the identical file.
        #[arg(long)]
        seed: u64,
        /// Coordinates are uniform in [0, box]^2.
        #[arg(long = "box")]
        box_size: i64,
        /// Output file (stdout if absent).
        #[arg(short, long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Compute all censuses and identity checks of a points file.
    Analyze {
        /// Points file: one `x y` per line, `#` comments allowed.
        file: PathBuf,
        /// Also build the region poset (members, Hasse diagram, gradedness,
        /// lattice verdict).
        #[arg(long)]
        poset: bool,
        /// Write the full JSON report to this file.
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
        /// Enumeration guard: refuse instances larger than this.
        #[arg(long, default_value_t = 14)]
        max_n: usize,
        /// Corrupt one primary census before the checks run (testing aid:
        /// exercises the failure path on otherwise clean input).
        #[arg(long, hide = true, value_enum)]
        inject_fault: Option<FaultTarget>,
    },
    /// Print the closed-form reduced f- and c-vectors per n.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..=50))]
        from: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..=50))]
        to: u64,
    },
    /// Generate many instances and verify every identity on each.
    Check {
        /// Number of sites per instance.
        #[arg(long)]
        n: usize,
        /// Number of instances; trial t uses seed `seed + t`.
        #[arg(long)]
        trials: u64,
        /// Base seed.
        #[arg(long)]
        seed: u64,
        /// Coordinate box for the generated instances.
        #[arg(long = "box", default_value_t = 1_000_000)]
        box_size: i64,
        /// Enumeration guard: refuse instances larger than this.
        #[arg(long, default_value_t = 14)]
        max_n: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FaultTarget {
    F,
    C,
    E,
    FInf,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Gen {
            n,
            seed,
            box_size,
            out,
        } => cmd_gen(n, seed, box_size, out),
        Command::Analyze {
            file,
            poset,
            json,
            max_n,
            inject_fault,
        } => cmd_analyze(&file, poset, json.as_deref(), max_n, inject_fault),
        Command::Table { from, to } => cmd_table(from as usize, to as usize),
        Command::Check {
            n,
            trials,
            seed,
            box_size,
            max_n,
        } => cmd_check(n, trials, seed, box_size, max_n),
    }
}

fn fail_input(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_INPUT)
}

fn write_out(path: Option<&std::path::Path>, content: &str) -> Result<(), String> {
    match path {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn cmd_gen(n: usize, seed: u64, box_size: i64, out: Option<PathBuf>) -> ExitCode {
    let sites = match generate(n, seed, box_size) {
        Ok(sites) => sites,
        Err(err @ GeneratorError::BudgetExhausted { .. }) => {
            eprintln!("error: {err}");
            return ExitCode::from(EXIT_CHECK_FAILED);
        }
        Err(err) => return fail_input(err),
    };
    let mut content = format!("# generated: n={n} seed={seed} box={box_size}\n");
    content.push_str(&format_points(&sites));
    match write_out(out.as_deref(), &content) {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => fail_input(message),
    }
}

fn load_instance(path: &std::path::Path) -> Result<RatSiteSet, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let sites = parse_points(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(sites)
}

fn guard_message(err: impl std::fmt::Display) -> String {
    format!("{err} (see --max-n)")
}

fn cmd_analyze(
    path: &std::path::Path,
    with_poset: bool,
    json: Option<&std::path::Path>,
    max_n: usize,
    inject_fault: Option<FaultTarget>,
) -> ExitCode {
    let sites = match load_instance(path) {
        Ok(sites) => sites,
        Err(message) => return fail_input(message),
    };
    let report = match check_all_with_guard(&sites, max_n) {
        Ok(report) => report,
        Err(CensusError::GeneralPosition(violation)) => return fail_input(violation),
        Err(CensusError::SizeGuard(err)) => return fail_input(guard_message(err)),
    };
    let report = match inject_fault {
        None => report,
        Some(target) => inject(report, target),
    };
    let poset = if with_poset {
        match build_poset_with_guard(&sites, max_n) {
            Ok(poset) => Some(poset),
            Err(err) => return fail_input(guard_message(err)),
        }
    } else {
        None
    };

    print!("{}", render_report(&sites, &report, poset.as_ref()));
    if let Some(json_path) = json {
        let doc = ReportDocument::new(&sites, &report, poset.as_ref());
        if let Err(message) = write_out(Some(json_path), &doc.to_json()) {
            return fail_input(message);
        }
    }
    if report.is_clean() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    }
}

/// Adds one to the leading entry of a primary census, so exactly the
/// identities that consume it go red.
fn inject(report: CensusReport, target: FaultTarget) -> CensusReport {
    let mut f = report.f_enumerated.clone();
    let mut c = report.c.clone();
    let mut e = report.e_direct.clone();
    let mut f_inf = report.f_inf_separability.clone();
    match target {
        FaultTarget::F => f[1] += 1,
        FaultTarget::C => c[0] += 1,
        FaultTarget::E => e[1] += 1,
        FaultTarget::FInf => f_inf[1] += 1,
    }
    CensusReport::from_counts(report.n, f, c, e, f_inf)
}

fn render_report(
    sites: &RatSiteSet,
    report: &CensusReport,
    poset: Option<&VoronoiPoset>,
) -> String {
    let mut out = String::new();
    let vec_str = |v: &[i64]| {
        let inner: Vec<String> = v.iter().map(i64::to_string).collect();
        format!("[{}]", inner.join(", "))
    };

    let _ = writeln!(out, "n = {}", report.n);
    let _ = writeln!(out, "points:");
    for (i, p) in sites.sites().iter().enumerate() {
        let _ = writeln!(out, "  {}: {} {}", i + 1, p.x, p.y);
    }
    let _ = writeln!(out, "c         = {}", vec_str(&report.c));
    let _ = writeln!(out, "f         = {}", vec_str(&report.f_enumerated[1..]));
    let _ = writeln!(out, "e         = {}", vec_str(&report.e_direct[1..]));
    let _ = writeln!(out, "v         = {}", vec_str(&report.v_from_circles[1..]));
    let _ = writeln!(out, "f_inf     = {}", vec_str(&report.f_inf_separability));
    let _ = writeln!(out, "reduced_f = {}", vec_str(&report.reduced_f));
    let _ = writeln!(out, "reduced_c = {}", vec_str(&report.reduced_c));
    let _ = writeln!(out, "chi       = {}", report.chi);

    let _ = writeln!(out, "checks ({}):", report.checks.len());
    for check in &report.checks {
        if check.pass {
            let _ = writeln!(out, "  {:<16} pass", check.name);
        } else {
            let idx = check.mismatch_index.expect("failed check has an index");
            let pos = (idx - first_index(check.name)) as usize;
            let _ = writeln!(
                out,
                "  {:<16} FAIL at index {}: observed {}, expected {}",
                check.name, idx, check.observed[pos], check.expected[pos]
            );
        }
    }

    if let Some(poset) = poset {
        let _ = writeln!(out, "poset:");
        for k in 0..=poset.n() {
            let members: Vec<String> = poset.rank(k).iter().map(|m| m.to_string()).collect();
            let _ = writeln!(out, "  rank {k}: {}", members.join(" "));
        }
        let missing = poset.missing();
        let _ = writeln!(out, "  missing sets: {}", missing.len());
        if !missing.is_empty() && missing.len() <= 32 {
            let listed: Vec<String> = missing.iter().map(|m| m.to_string()).collect();
            let _ = writeln!(out, "  missing: {}", listed.join(" "));
        }
        let (graded, witness) = poset.is_graded();
        match witness {
            None => {
                let _ = writeln!(out, "  graded: {graded}");
            }
            Some(w) => {
                let _ = writeln!(out, "  graded: {graded} (witness {w})");
            }
        }
        let lattice = poset.is_lattice();
        match lattice.witness {
            None => {
                let _ = writeln!(out, "  lattice: {}", lattice.is_lattice);
            }
            Some(w) => {
                let side = match w.side {
                    LatticeSide::Join => "join",
                    LatticeSide::Meet => "meet",
                };
                let bounds: Vec<String> = w.bounds.iter().map(|b| b.to_string()).collect();
                let _ = writeln!(
                    out,
                    "  lattice: {} (witness {} {} has {} {} bounds: {})",
                    lattice.is_lattice,
                    w.pair.0,
                    w.pair.1,
                    w.bounds.len(),
                    side,
                    bounds.join(" ")
                );
            }
        }
        let edges = poset.hasse_edges();
        let _ = writeln!(out, "  hasse edges: {}", edges.len());
        for (lower, upper) in &edges {
            let _ = writeln!(out, "  {lower} < {upper}");
        }
    }

    let failed = report.failed_checks().count();
    if failed == 0 {
        let _ = writeln!(out, "result: clean");
    } else {
        let _ = writeln!(out, "result: {failed} check(s) failed");
    }
    out
}

/// The mathematical index of the first entry of each check's vectors.
fn first_index(name: &str) -> i64 {
    match name {
        "TOTALS" | "TOTAL_UNBOUNDED" | "CHI" | "ALT_V" | "C_SYM" | "CROSS_PATH" => 0,
        _ => 1,
    }
}

fn cmd_table(from: usize, to: usize) -> ExitCode {
    if from > to {
        return fail_input(format!("--from {from} must not exceed --to {to}"));
    }
    let mut out = String::new();
    for row in closed_form_table(from, to) {
        let join = |v: &[i64]| {
            let inner: Vec<String> = v.iter().map(i64::to_string).collect();
            inner.join(", ")
        };
        let _ = writeln!(
            out,
            "{} | ({}) | ({})",
            row.n,
            join(&row.reduced_f),
            join(&row.reduced_c)
        );
    }
    print!("{out}");
    ExitCode::SUCCESS
}

fn cmd_check(n: usize, trials: u64, seed: u64, box_size: i64, max_n: usize) -> ExitCode {
    if trials == 0 {
        return fail_input("--trials must be at least 1");
    }
    let mut clean = 0u64;
    let mut f_tally: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    let mut first_failure: Option<(u64, CensusReport)> = None;
    for trial in 0..trials {
        let trial_seed = seed + trial;
        let sites = match generate(n, trial_seed, box_size) {
            Ok(sites) => sites,
            Err(err @ GeneratorError::BudgetExhausted { .. }) => {
                eprintln!("trial {trial} seed {trial_seed}: generation failed: {err}");
                return ExitCode::from(EXIT_CHECK_FAILED);
            }
            Err(err) => return fail_input(err),
        };
        let report = match check_all_with_guard(&sites, max_n) {
            Ok(report) => report,
            Err(CensusError::SizeGuard(err)) => return fail_input(guard_message(err)),
            Err(CensusError::GeneralPosition(violation)) => {
                // The generator validates, so this indicates a bug.
                eprintln!("trial {trial} seed {trial_seed}: {violation}");
                return ExitCode::from(EXIT_CHECK_FAILED);
            }
        };
        *f_tally
            .entry(report.f_enumerated[1..].to_vec())
            .or_insert(0) += 1;
        if report.is_clean() {
            clean += 1;
        } else {
            println!("trial {trial} seed {trial_seed}: FAILED");
            first_failure.get_or_insert((trial_seed, report));
        }
    }

    println!("f-vector tally:");
    for (f, count) in &f_tally {
        let inner: Vec<String> = f.iter().map(i64::to_string).collect();
        println!("  [{}]: {count}", inner.join(", "));
    }
    println!("{clean}/{trials} clean");

    match first_failure {
        None => ExitCode::SUCCESS,
        Some((failed_seed, report)) => {
            println!("first failing seed: {failed_seed}");
            for check in report.failed_checks() {
                println!(
                    "  {} FAIL: observed {:?}, expected {:?}",
                    check.name, check.observed, check.expected
                );
            }
            ExitCode::from(EXIT_CHECK_FAILED)
        }
    }
}
