//! Command-line front end: compute cohomology tables, generic and quantum
//! dimensions, support-variety classes, run verification sweeps, and render
//! the weight-lattice figure.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use sl3coh::characters::Character;
use sl3coh::cohomology::{Bundle, CharEngine};
use sl3coh::figure::render_figure;
use sl3coh::gendim::{psi_order, quantum_eval, specialize_generic, CycloElement, LaurentPoly};
use sl3coh::identities::{law_description, verify, verify_all, VerificationReport, LAW_IDS};
use sl3coh::supportvar::{support_variety, SupportReport};
use sl3coh::weights::{parse_weight, Weight};
use sl3coh::{Error, Int};

#[derive(Parser)]
#[command(
    name = "sl3coh",
    version,
    about = "Exact SL3 flag-variety cohomology: characters, dimensions, support classes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cohomology table H^0..H^3 (characters and dimensions) for one weight
    Char(CharArgs),
    /// Generic (Laurent) and quantum dimensions for one weight
    Dims(DimsArgs),
    /// Support-variety class of H^i with evidence
    Support(SupportArgs),
    /// Verify recursive identities over sweep boxes
    Verify(VerifyArgs),
    /// Render the weight lattice as a deterministic SVG
    Figure(FigureArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Json,
    Table,
    Svg,
}

/// Flags shared by every subcommand; unset values fall back to `--config`
/// file entries, then to built-in defaults.
#[derive(Args)]
struct Common {
    /// Output format
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write output to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads for sweeps (default: all cores)
    #[arg(long)]
    jobs: Option<usize>,
    /// JSON config file supplying defaults; explicit flags override it
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct CharArgs {
    #[command(flatten)]
    common: Common,
    /// Prime characteristic
    #[arg(short = 'p', long = "prime")]
    prime: Option<Int>,
    /// Weight as "r,s"
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<String>,
    /// Line bundle twist: plain, alpha or beta
    #[arg(long)]
    bundle: Option<String>,
}

#[derive(Args)]
struct DimsArgs {
    #[command(flatten)]
    common: Common,
    /// Prime characteristic
    #[arg(short = 'p', long = "prime")]
    prime: Option<Int>,
    /// Weight as "r,s"
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<String>,
    /// Line bundle twist: plain, alpha or beta
    #[arg(long)]
    bundle: Option<String>,
    /// Restrict to one cohomology degree
    #[arg(short = 'i', long = "degree")]
    degree: Option<usize>,
}

#[derive(Args)]
struct SupportArgs {
    #[command(flatten)]
    common: Common,
    /// Prime characteristic
    #[arg(short = 'p', long = "prime")]
    prime: Option<Int>,
    /// Weight as "r,s"
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<String>,
    /// Cohomology degree (omit to classify all four degrees)
    #[arg(short = 'i', long = "degree")]
    degree: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    /// Law id (e.g. 5.3) or "all"
    #[arg(long)]
    prop: Option<String>,
    /// Primes to sweep, comma separated
    #[arg(short = 'p', long = "prime", value_delimiter = ',')]
    primes: Vec<Int>,
    /// Sweep box bound |r|,|s| <= B, or "default"
    #[arg(long = "box")]
    box_bound: Option<String>,
    /// List available law ids and exit
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct FigureArgs {
    #[command(flatten)]
    common: Common,
    /// Prime characteristic
    #[arg(short = 'p', long = "prime")]
    prime: Option<Int>,
    /// Bound on the annotated S/T arguments |r|,|s| <= B
    #[arg(long = "box")]
    box_bound: Option<Int>,
    /// Cohomology degree for the S/T annotations
    #[arg(short = 'i', long = "degree")]
    degree: Option<usize>,
}

/// Optional defaults loaded from `--config`; every field may be overridden
/// by an explicit flag.
#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    prime: Option<Int>,
    primes: Option<Vec<Int>>,
    #[serde(rename = "box")]
    box_bound: Option<Int>,
    weight: Option<Weight>,
    bundle: Option<String>,
    degree: Option<usize>,
    format: Option<String>,
    out: Option<PathBuf>,
    jobs: Option<usize>,
    prop: Option<String>,
}

fn load_config(path: Option<&Path>) -> Result<FileConfig, Error> {
    let Some(path) = path else {
        return Ok(FileConfig::default());
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read config {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::InvalidArgument(format!("invalid config {}: {e}", path.display())))
}

fn parse_format(text: &str) -> Result<Format, Error> {
    match text {
        "json" => Ok(Format::Json),
        "table" => Ok(Format::Table),
        "svg" => Ok(Format::Svg),
        _ => Err(Error::InvalidArgument(format!(
            "format must be json, table or svg — got {text:?}"
        ))),
    }
}

/// Flag-over-config resolution for the fields every command needs.
struct Resolved {
    format: Format,
    out: Option<PathBuf>,
}

fn resolve_prime(flag: Option<Int>, config: &FileConfig) -> Int {
    flag.or(config.prime).unwrap_or(5)
}

fn resolve(common: &Common, config: &FileConfig, default_format: Format) -> Result<Resolved, Error> {
    let format = match (&common.format, &config.format) {
        (Some(f), _) => *f,
        (None, Some(text)) => parse_format(text)?,
        (None, None) => default_format,
    };
    let out = common.out.clone().or_else(|| config.out.clone());
    let jobs = common.jobs.or(config.jobs);
    if let Some(width) = jobs {
        // Ignore the error when a global pool already exists (e.g. repeated
        // resolution in tests); output is deterministic regardless of width.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(width).build_global();
    }
    Ok(Resolved { format, out })
}

fn resolve_weight(flag: &Option<String>, config: &FileConfig) -> Result<Weight, Error> {
    match (flag, config.weight) {
        (Some(text), _) => parse_weight(text),
        (None, Some(w)) => Ok(w),
        (None, None) => Err(Error::InvalidArgument(
            "a weight is required: pass --weight r,s or set \"weight\" in the config".to_string(),
        )),
    }
}

fn resolve_bundle(flag: &Option<String>, config: &FileConfig) -> Result<Bundle, Error> {
    match (flag, &config.bundle) {
        (Some(text), _) => text.parse(),
        (None, Some(text)) => text.parse(),
        (None, None) => Ok(Bundle::Plain),
    }
}

fn emit(resolved: &Resolved, text: &str) -> Result<(), Error> {
    match &resolved.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("output types serialize");
    text.push('\n');
    text
}

#[derive(Serialize)]
struct CharOutput {
    p: Int,
    weight: Weight,
    bundle: Bundle,
    dimensions: [Int; 4],
    nonzero_degrees: Vec<usize>,
    h: [Character; 4],
}

fn cmd_char(args: &CharArgs) -> Result<i32, Error> {
    let config = load_config(args.common.config.as_deref())?;
    let resolved = resolve(&args.common, &config, Format::Json)?;
    let p = resolve_prime(args.prime, &config);
    let weight = resolve_weight(&args.weight, &config)?;
    let bundle = resolve_bundle(&args.bundle, &config)?;
    let engine = CharEngine::new(p)?;
    let table = engine.table(weight, bundle);
    let output = CharOutput {
        p,
        weight,
        bundle,
        dimensions: table.dims(),
        nonzero_degrees: table.nonzero_degrees(),
        h: table.h.clone(),
    };
    let text = match resolved.format {
        Format::Json => to_json(&output),
        Format::Table => {
            let mut t = format!(
                "H^i({},{}) twisted by {} at p = {}\n",
                weight.r, weight.s, bundle, p
            );
            for i in 0..4 {
                let dim = output.dimensions[i];
                let terms = output.h[i].iter().count();
                let _ = writeln!(t, "  H^{i}: dim {dim:>8}  ({terms} weight(s))");
            }
            t
        }
        Format::Svg => {
            return Err(Error::InvalidArgument(
                "svg output is only available for the figure command".to_string(),
            ))
        }
    };
    emit(&resolved, &text)?;
    Ok(0)
}

#[derive(Serialize)]
struct DegreeDims {
    i: usize,
    dimension: Int,
    generic: LaurentPoly,
    /// Multiplicity of ψ_p in the generic dimension; absent for the zero module.
    #[serde(skip_serializing_if = "Option::is_none")]
    psi_p_order: Option<u32>,
    quantum: CycloElement,
    /// The quantum dimension as a plain integer when it lies in Z.
    #[serde(skip_serializing_if = "Option::is_none")]
    quantum_integer: Option<String>,
}

#[derive(Serialize)]
struct DimsOutput {
    p: Int,
    weight: Weight,
    bundle: Bundle,
    degrees: Vec<DegreeDims>,
}

fn cmd_dims(args: &DimsArgs) -> Result<i32, Error> {
    let config = load_config(args.common.config.as_deref())?;
    let resolved = resolve(&args.common, &config, Format::Json)?;
    let p = resolve_prime(args.prime, &config);
    let weight = resolve_weight(&args.weight, &config)?;
    let bundle = resolve_bundle(&args.bundle, &config)?;
    let degree_filter = args.degree.or(config.degree);
    if let Some(i) = degree_filter {
        if i > 3 {
            return Err(Error::DegreeOutOfRange(i as Int));
        }
    }
    let engine = CharEngine::new(p)?;
    let table = engine.table(weight, bundle);
    let mut degrees = Vec::new();
    for i in 0..4 {
        if degree_filter.is_some_and(|want| want != i) {
            continue;
        }
        let generic = specialize_generic(&table.h[i]);
        let order = if generic.is_zero() {
            None
        } else {
            Some(psi_order(&generic, p)?)
        };
        let quantum = quantum_eval(&generic, p)?;
        let quantum_integer = quantum.as_integer().map(|n| n.to_string());
        degrees.push(DegreeDims {
            i,
            dimension: table.h[i].dimension(),
            generic,
            psi_p_order: order,
            quantum,
            quantum_integer,
        });
    }
    let output = DimsOutput { p, weight, bundle, degrees };
    let text = match resolved.format {
        Format::Json => to_json(&output),
        Format::Table => {
            let mut t = format!(
                "dim_t H^i({},{}) twisted by {} at p = {}\n",
                weight.r, weight.s, bundle, p
            );
            for d in &output.degrees {
                let order = d
                    .psi_p_order
                    .map_or_else(|| "-".to_string(), |k| k.to_string());
                let _ = writeln!(
                    t,
                    "  H^{}: dim {:>8}  psi-order {:>2}  at zeta: {}",
                    d.i, d.dimension, order, d.quantum
                );
            }
            t
        }
        Format::Svg => {
            return Err(Error::InvalidArgument(
                "svg output is only available for the figure command".to_string(),
            ))
        }
    };
    emit(&resolved, &text)?;
    Ok(0)
}

#[derive(Serialize)]
#[serde(untagged)]
enum SupportOutput {
    Present(SupportReport),
    Zero { p: Int, weight: Weight, i: usize, zero: bool },
}

fn support_line(entry: &SupportOutput) -> String {
    match entry {
        SupportOutput::Zero { i, weight, .. } => {
            format!("H^{}({},{}) = 0\n", i, weight.r, weight.s)
        }
        SupportOutput::Present(r) => format!(
            "H^{}({},{}): {:?}, dim {}, psi-order {}\n",
            r.degree,
            r.weight.r,
            r.weight.s,
            r.class,
            r.class.dimension(),
            r.evidence.psi_order
        ),
    }
}

fn cmd_support(args: &SupportArgs) -> Result<i32, Error> {
    let config = load_config(args.common.config.as_deref())?;
    let resolved = resolve(&args.common, &config, Format::Json)?;
    let p = resolve_prime(args.prime, &config);
    let weight = resolve_weight(&args.weight, &config)?;
    let degree_filter = args.degree.or(config.degree);
    let engine = CharEngine::new(p)?;
    let degrees: Vec<usize> = match degree_filter {
        Some(i) => vec![i],
        None => (0..4).collect(),
    };
    let mut entries = Vec::new();
    for i in degrees {
        entries.push(match support_variety(&engine, weight, i)? {
            Some(report) => SupportOutput::Present(report),
            None => SupportOutput::Zero { p, weight, i, zero: true },
        });
    }
    let text = match resolved.format {
        Format::Json => {
            if entries.len() == 1 {
                to_json(&entries[0])
            } else {
                to_json(&entries)
            }
        }
        Format::Table => entries.iter().map(support_line).collect(),
        Format::Svg => {
            return Err(Error::InvalidArgument(
                "svg output is only available for the figure command".to_string(),
            ))
        }
    };
    emit(&resolved, &text)?;
    Ok(0)
}

fn verify_table(reports: &[VerificationReport]) -> String {
    let mut t = String::new();
    for r in reports {
        let verdict = if r.passed { "PASS" } else { "FAIL" };
        let tested: u64 = r.cases.iter().map(|c| c.tested).sum();
        let _ = writeln!(
            t,
            "prop {:<5} p={:<2} box={:<4} {}  cases: {:>2}  checked: {}",
            r.prop,
            r.p,
            r.box_bound,
            verdict,
            r.cases.len(),
            tested
        );
        for note in &r.notes {
            let _ = writeln!(t, "    note: {note}");
        }
        for c in &r.counterexamples {
            let _ = writeln!(
                t,
                "    counterexample [{}] at ({},{}): {}",
                c.case, c.weight.r, c.weight.s, c.detail
            );
        }
    }
    t
}

fn cmd_verify(args: &VerifyArgs) -> Result<i32, Error> {
    if args.list {
        let mut t = String::new();
        for id in LAW_IDS {
            let _ = writeln!(t, "{id:<6} {}", law_description(id).unwrap_or(""));
        }
        print!("{t}");
        return Ok(0);
    }
    let config = load_config(args.common.config.as_deref())?;
    let resolved = resolve(&args.common, &config, Format::Json)?;
    let primes: Vec<Int> = if !args.primes.is_empty() {
        args.primes.clone()
    } else if let Some(ps) = &config.primes {
        ps.clone()
    } else {
        vec![resolve_prime(None, &config)]
    };
    let prop = args.prop.clone().or_else(|| config.prop.clone()).unwrap_or_else(|| "all".into());
    let box_bound: Option<Int> = match args.box_bound.as_deref() {
        None => config.box_bound,
        Some("default") => None,
        Some(text) => Some(text.parse().map_err(|_| {
            Error::InvalidArgument(format!("box must be an integer or \"default\" — got {text:?}"))
        })?),
    };
    let mut reports = Vec::new();
    for &p in &primes {
        if prop == "all" {
            reports.extend(verify_all(p, box_bound)?);
        } else {
            reports.push(verify(&prop, p, box_bound)?);
        }
    }
    let all_passed = reports.iter().all(|r| r.passed);
    let text = match resolved.format {
        Format::Json => to_json(&reports),
        Format::Table => verify_table(&reports),
        Format::Svg => {
            return Err(Error::InvalidArgument(
                "svg output is only available for the figure command".to_string(),
            ))
        }
    };
    emit(&resolved, &text)?;
    Ok(if all_passed { 0 } else { 1 })
}

fn cmd_figure(args: &FigureArgs) -> Result<i32, Error> {
    let config = load_config(args.common.config.as_deref())?;
    let resolved = resolve(&args.common, &config, Format::Svg)?;
    if resolved.format != Format::Svg {
        return Err(Error::InvalidArgument(
            "the figure command only renders svg output".to_string(),
        ));
    }
    let p = resolve_prime(args.prime, &config);
    let box_bound = args.box_bound.or(config.box_bound);
    let degree = args.degree.or(config.degree).unwrap_or(1);
    let svg = render_figure(p, box_bound, degree)?;
    emit(&resolved, &svg)?;
    Ok(0)
}

fn run(cli: &Cli) -> Result<i32, Error> {
    match &cli.command {
        Command::Char(args) => cmd_char(args),
        Command::Dims(args) => cmd_dims(args),
        Command::Support(args) => cmd_support(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Figure(args) => cmd_figure(args),
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
