//! Command-line front end for the `cqca` library.
//!
//! One subcommand per experiment; every run writes deterministic files
//! (CSV grids, plain PGM images, JSON summaries) into `--out-dir`.
//! Exit codes: 0 success, 1 validation failure, 2 runtime or consistency
//! failure.

use std::fs::File;
use std::io::BufWriter;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cqca::algebra::RuleFamily;
use cqca::analysis::{box_count, cone_fill_fraction, primal_scar_check};
use cqca::combinatorics::WhitneySequence;
use cqca::dynamics::{
    fit_butterfly_velocity, scan_scrambling_times, scrambling_time, HeatMap, Insertion,
};
use cqca::error::Error;
use cqca::output;

#[derive(Parser)]
#[command(
    name = "cqca",
    about = "Clifford quantum cellular automaton simulator: exact squared-commutator maps, scrambling times, Whitney cross-checks, fractal dimensions, and primal scars",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Simulate a squared-commutator space-time map and write
    /// heatmap.csv, heatmap.pgm, and summary.json.
    Heatmap(HeatmapArgs),
    /// Scan scrambling times over a range of local dimensions N and write
    /// scan.csv and jumps.json.
    Scan(ScanArgs),
    /// Compute Whitney numbers with the enumeration cross-check and write
    /// whitney.csv.
    Whitney(WhitneyArgs),
    /// Box-count the fractal dimension of a map over several horizons and
    /// write boxcount.csv and fit.json.
    Fractal(FractalArgs),
    /// Compare a composite-modulus run against its prime-power shadow and
    /// write both maps plus scar.json.
    Scar(ScarArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Rule source: `paper` for the built-in rule, or a JSON rule file path.
    #[arg(long, default_value = "paper")]
    rule: String,

    /// Output directory (created if missing).
    #[arg(long, default_value = "out")]
    out_dir: PathBuf,
}

#[derive(Args)]
struct HeatmapArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Local Hilbert-space dimension.
    #[arg(long = "N")]
    modulus: Option<u64>,

    /// Evolved insertion: Q, P, QP, or an exponent pair i,j.
    #[arg(long = "W", default_value = "Q")]
    w: Insertion,

    /// Static insertion: Q, P, QP, or an exponent pair i,j.
    #[arg(long = "V", default_value = "Q")]
    v: Insertion,

    /// Window half-width: columns run over alpha in [-L, L].
    #[arg(long = "L")]
    half_width: u32,

    /// Horizon: rows run over t in [0, T].
    #[arg(long = "T")]
    horizon: u32,

    /// Squared-commutator threshold used for the summary statistics.
    #[arg(long, default_value_t = 1.0)]
    threshold: f64,
}

#[derive(Args)]
struct ScanArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Inclusive range of N values, e.g. 2..378 (or a single N).
    #[arg(long = "N")]
    range: String,

    #[arg(long = "W", default_value = "Q")]
    w: Insertion,

    #[arg(long = "V", default_value = "Q")]
    v: Insertion,

    /// Largest time searched before a row is reported NA.
    #[arg(long, default_value_t = 64)]
    t_max: u32,
}

#[derive(Args)]
struct WhitneyArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Compute W_2t for t = 1..=t_max.
    #[arg(long)]
    t_max: u32,

    /// Largest t cross-checked against the brute-force ideal count.
    #[arg(long, default_value_t = cqca::combinatorics::DEFAULT_ORACLE_LIMIT)]
    oracle_limit: u32,
}

#[derive(Args)]
struct FractalArgs {
    #[command(flatten)]
    common: CommonArgs,

    #[arg(long = "N")]
    modulus: Option<u64>,

    #[arg(long = "W", default_value = "Q")]
    w: Insertion,

    #[arg(long = "V", default_value = "Q")]
    v: Insertion,

    /// Comma-separated strictly increasing horizons, e.g. 64,128,256,512,1024.
    #[arg(long = "T", value_delimiter = ',')]
    horizons: Vec<u32>,

    #[arg(long, default_value_t = 1.0)]
    threshold: f64,
}

#[derive(Args)]
struct ScarArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Composite modulus N = kappa * prime^ell.
    #[arg(long = "N")]
    modulus: u64,

    #[arg(long)]
    kappa: u64,

    #[arg(long)]
    prime: u64,

    #[arg(long)]
    ell: u32,

    /// Base insertion, scaled by kappa in the composite run.
    #[arg(long = "W", default_value = "Q")]
    w: Insertion,

    #[arg(long = "L")]
    half_width: u32,

    #[arg(long = "T")]
    horizon: u32,
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("CQCA_THREADS") {
        match threads.parse::<usize>() {
            Ok(k) if k > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
            }
            _ => {
                eprintln!("error: CQCA_THREADS must be a positive integer, got `{threads}`");
                return ExitCode::from(1);
            }
        }
    }
    // Argument problems are validation failures (exit 1); --help and
    // --version are successes.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Heatmap(args) => cmd_heatmap(args),
        Command::Scan(args) => cmd_scan(args),
        Command::Whitney(args) => cmd_whitney(args),
        Command::Fractal(args) => cmd_fractal(args),
        Command::Scar(args) => cmd_scar(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

/// 1 for validation problems the caller can fix in the invocation,
/// 2 for runtime and consistency failures.
fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::ModulusMismatch { .. }
        | Error::BadModulus(_)
        | Error::NotReversible { .. }
        | Error::NotPalindromic(_)
        | Error::IdentityInsertion
        | Error::InsertionOutOfRange { .. }
        | Error::IdealOrderOutOfRange { .. }
        | Error::BadHorizons(_)
        | Error::BadFactorization { .. }
        | Error::NotCoprime { .. }
        | Error::NotPrime(_)
        | Error::RuleFile(_)
        | Error::Config(_) => 1,
        Error::NonIntegerWhitney { .. }
        | Error::WhitneyMismatch { .. }
        | Error::TooFewConeRows(_)
        | Error::EmptyPattern(_)
        | Error::SubalgebraNotClosed(_)
        | Error::Io(_) => 2,
    }
}

fn validate_threshold(threshold: f64) -> Result<(), Error> {
    if threshold.is_finite() && threshold > 0.0 && threshold <= 4.0 {
        Ok(())
    } else {
        Err(Error::Config(format!("threshold must lie in (0, 4], got {threshold}")))
    }
}

/// Picks the run modulus: an explicit --N wins, otherwise the rule file's own
/// N; the built-in rule has no default and demands --N.
fn resolve_modulus(family: &RuleFamily, explicit: Option<u64>) -> Result<u64, Error> {
    explicit.or_else(|| family.default_modulus()).ok_or_else(|| {
        Error::Config("the built-in rule needs an explicit --N".into())
    })
}

/// Creates the file, runs the writer, and flushes explicitly so that late
/// write errors (disk full, for one) surface instead of dying in drop.
fn write_file<F>(path: &Path, write: F) -> Result<(), Error>
where
    F: FnOnce(&mut BufWriter<File>) -> Result<(), Error>,
{
    use std::io::Write;
    let mut out = BufWriter::new(File::create(path)?);
    write(&mut out)?;
    out.flush()?;
    Ok(())
}

fn validate_half_width(l: u32) -> Result<(), Error> {
    if l >= 1 {
        Ok(())
    } else {
        Err(Error::Config("window half-width --L must be at least 1".into()))
    }
}

fn cmd_heatmap(args: HeatmapArgs) -> Result<ExitCode, Error> {
    validate_threshold(args.threshold)?;
    validate_half_width(args.half_width)?;
    let family = RuleFamily::from_source(&args.common.rule)?;
    let n = resolve_modulus(&family, args.modulus)?;
    let rule = family.instantiate(n)?;
    let map = HeatMap::compute(&rule, args.w, args.v, args.half_width, args.horizon)?;
    if map.window_warning() {
        eprintln!(
            "warning: window L = {} is smaller than the light cone (radius {} * T = {}); \
             cells outside the window are absent",
            args.half_width,
            rule.radius(),
            args.horizon
        );
    }

    let scramble = if args.horizon >= 1 {
        scrambling_time(&rule, args.w, args.v, args.horizon)?
    } else {
        cqca::dynamics::ScrambleOutcome::NotFound { t_max: 0 }
    };
    let cone = fit_butterfly_velocity(&map, args.threshold).ok();
    let summary = output::HeatMapSummary {
        n,
        rule: rule.name().to_string(),
        w: args.w.to_string(),
        v: args.v.to_string(),
        half_width: args.half_width,
        horizon: args.horizon,
        threshold: args.threshold,
        t_star: scramble.t_star(),
        xi_witness: scramble.xi_witness(),
        v_b: cone.as_ref().map(|c| c.v_b),
        fill_fraction: cone_fill_fraction(&map, args.threshold),
        window_warning: map.window_warning(),
    };

    let dir = &args.common.out_dir;
    std::fs::create_dir_all(dir)?;
    write_file(&dir.join("heatmap.csv"), |w| output::write_heatmap_csv(&map, w))?;
    write_file(&dir.join("heatmap.pgm"), |w| output::write_heatmap_pgm(&map, w))?;
    write_file(&dir.join("summary.json"), |w| output::write_json(&summary, w))?;
    println!(
        "heatmap: N={n} rule={} W={} V={} L={} T={} -> {}",
        rule.name(),
        args.w,
        args.v,
        args.half_width,
        args.horizon,
        dir.display()
    );
    Ok(ExitCode::SUCCESS)
}

/// Parses `a..b` (inclusive) or a single value into an N list.
fn parse_range(text: &str) -> Result<Vec<u64>, Error> {
    const MAX_ROWS: u64 = 1_000_000;
    let bad = |msg: &str| Error::Config(format!("range `{text}`: {msg}"));
    if let Some((a, b)) = text.split_once("..") {
        let lo: u64 = a.trim().parse().map_err(|_| bad("bad lower bound"))?;
        let hi: u64 = b.trim().parse().map_err(|_| bad("bad upper bound"))?;
        if lo > hi {
            return Err(bad("reversed"));
        }
        if hi - lo >= MAX_ROWS {
            return Err(bad("more than 1,000,000 values"));
        }
        Ok((lo..=hi).collect())
    } else {
        let n: u64 = text.trim().parse().map_err(|_| bad("not an integer"))?;
        Ok(vec![n])
    }
}

fn cmd_scan(args: ScanArgs) -> Result<ExitCode, Error> {
    if args.t_max < 1 {
        return Err(Error::Config("--t-max must be at least 1".into()));
    }
    let family = RuleFamily::from_source(&args.common.rule)?;
    let ns = parse_range(&args.range)?;
    let scan = scan_scrambling_times(&family, &ns, args.w, args.v, args.t_max)?;
    let jumps = output::JumpsFile {
        rule: scan.rule_name.clone(),
        w: args.w.to_string(),
        v: args.v.to_string(),
        t_max: args.t_max,
        jumps: scan.jump_boundaries(),
    };

    let dir = &args.common.out_dir;
    std::fs::create_dir_all(dir)?;
    write_file(&dir.join("scan.csv"), |w| output::write_scan_csv(&scan, w))?;
    write_file(&dir.join("jumps.json"), |w| output::write_json(&jumps, w))?;
    println!(
        "scan: {} rows, jumps at {:?} -> {}",
        scan.rows.len(),
        jumps.jumps,
        dir.display()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_whitney(args: WhitneyArgs) -> Result<ExitCode, Error> {
    let seq = WhitneySequence::compute(args.t_max, args.oracle_limit)?;
    let dir = &args.common.out_dir;
    std::fs::create_dir_all(dir)?;
    write_file(&dir.join("whitney.csv"), |w| output::write_whitney_csv(&seq, w))?;
    println!("whitney: {} rows -> {}", seq.values.len(), dir.display());
    Ok(ExitCode::SUCCESS)
}

fn cmd_fractal(args: FractalArgs) -> Result<ExitCode, Error> {
    validate_threshold(args.threshold)?;
    let family = RuleFamily::from_source(&args.common.rule)?;
    let n = resolve_modulus(&family, args.modulus)?;
    let generator = |t: u32| {
        let rule = family.instantiate(n)?;
        HeatMap::compute(&rule, args.w, args.v, t, t)
    };
    let series = box_count(generator, &args.horizons, args.threshold)?;

    let dir = &args.common.out_dir;
    std::fs::create_dir_all(dir)?;
    write_file(&dir.join("boxcount.csv"), |w| output::write_boxcount_csv(&series, w))?;
    let fit = output::FractalFit::from_series(&series);
    write_file(&dir.join("fit.json"), |w| output::write_json(&fit, w))?;
    println!("fractal: D = {:.4} -> {}", series.dimension, dir.display());
    Ok(ExitCode::SUCCESS)
}

fn cmd_scar(args: ScarArgs) -> Result<ExitCode, Error> {
    validate_half_width(args.half_width)?;
    let family = RuleFamily::from_source(&args.common.rule)?;
    let cmp = primal_scar_check(
        &family,
        args.modulus,
        args.kappa,
        args.prime,
        args.ell,
        args.w,
        args.half_width,
        args.horizon,
    )?;

    // Rebuild both maps for the file outputs.
    let composite_rule = family.instantiate(args.modulus)?;
    let scaled = args.w.scaled(args.kappa, args.modulus)?;
    let composite_map =
        HeatMap::compute(&composite_rule, scaled, scaled, args.half_width, args.horizon)?;
    let base_rule = family.instantiate(cmp.prime_power)?;
    let base_map = HeatMap::compute(&base_rule, args.w, args.w, args.half_width, args.horizon)?;

    let dir = &args.common.out_dir;
    std::fs::create_dir_all(dir)?;
    write_file(&dir.join("heatmap_composite.csv"), |w| output::write_heatmap_csv(&composite_map, w))?;
    write_file(&dir.join("heatmap_composite.pgm"), |w| output::write_heatmap_pgm(&composite_map, w))?;
    write_file(&dir.join("heatmap_base.csv"), |w| output::write_heatmap_csv(&base_map, w))?;
    write_file(&dir.join("heatmap_base.pgm"), |w| output::write_heatmap_pgm(&base_map, w))?;
    let scar = output::ScarFile::from(&cmp);
    write_file(&dir.join("scar.json"), |w| output::write_json(&scar, w))?;

    println!(
        "scar: N={} = {}*{}^{} exact_match={} max_dev={:.6} -> {}",
        cmp.n_composite,
        cmp.kappa,
        cmp.p,
        cmp.ell,
        cmp.exact_match,
        cmp.max_cell_deviation,
        dir.display()
    );
    if cmp.exact_match {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("error: composite and prime-power C grids differ");
        Ok(ExitCode::from(2))
    }
}
