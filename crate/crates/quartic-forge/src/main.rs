use clap::{ArgAction, Args, Parser, Subcommand};
use quartic_forge::chartab::load_table;
use quartic_forge::forms::{branch_sextic, cubic_basis, OrbitB};
use quartic_forge::pipeline::{
    replay_certificate, report_json, run_pipeline, CertificateReport, PipelineConfig,
    VERDICT_CERTIFIED,
};
use quartic_forge::poly::UniPoly;
use quartic_forge::Error;
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "quartic-forge",
    version,
    about = "Certifies hypotheses about a degree-7 polynomial's root orbit \
             and emits a machine-checkable certificate"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print stage progress to stderr.
    #[arg(short, long, global = true, action = ArgAction::Count)]
    verbose: u8,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full certification chain and emit a report.
    Certify(CertifyArgs),
    /// Re-verify every witness recorded in an emitted report.
    Replay(ReplayArgs),
    /// Print the cubic basis u, v, w and the branch sextic for an input.
    Forms(FormsArgs),
    /// Validate a bundled character table and print its indicators.
    Chartab(ChartabArgs),
}

#[derive(Args)]
struct CertifyArgs {
    /// Input polynomial, e.g. "t^7 - t - 1".
    #[arg(
        long,
        required_unless_present = "poly_file",
        conflicts_with = "poly_file"
    )]
    poly: Option<String>,
    /// File with one polynomial per line; blank lines and # comments skipped.
    #[arg(long, value_name = "FILE")]
    poly_file: Option<PathBuf>,
    /// Largest prime examined during the scan.
    #[arg(long, default_value_t = 10_000)]
    prime_bound: u64,
    /// Usable primes spent searching for a five-part cycle type.
    #[arg(long, default_value_t = 200)]
    budget: usize,
    /// Seed for the factorization's internal randomness.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Directory holding character table files (else QUARTIC_FORGE_DATA_DIR,
    /// else the bundled tables).
    #[arg(long, value_name = "PATH")]
    data_dir: Option<PathBuf>,
    /// Directory for the prime-scan cache; omitted means no caching.
    #[arg(long, value_name = "PATH")]
    cache_dir: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Reserved for certifying a directly specified point orbit; not
    /// implemented.
    #[arg(long, value_name = "POINTS")]
    orbit_points: Option<String>,
}

#[derive(Args)]
struct ReplayArgs {
    /// Report file produced by `certify`.
    report: PathBuf,
    /// Directory holding character table files (else QUARTIC_FORGE_DATA_DIR,
    /// else the bundled tables).
    #[arg(long, value_name = "PATH")]
    data_dir: Option<PathBuf>,
}

#[derive(Args)]
struct FormsArgs {
    /// Input polynomial, e.g. "t^7 - t - 1".
    #[arg(long)]
    poly: String,
}

#[derive(Args)]
struct ChartabArgs {
    /// Table to validate: a7 or 2a7.
    #[arg(long)]
    group: String,
    /// Directory holding character table files (else QUARTIC_FORGE_DATA_DIR,
    /// else the bundled tables).
    #[arg(long, value_name = "PATH")]
    data_dir: Option<PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            emit_error(&e);
            exit_code_for(&e)
        }
    };
    std::process::exit(code);
}

/// Writes to stdout without panicking when the consumer closes the pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().write_all(text.as_bytes());
}

fn run(cli: &Cli) -> quartic_forge::Result<i32> {
    match &cli.command {
        Command::Certify(args) => certify(args, cli.verbose),
        Command::Replay(args) => replay(args),
        Command::Forms(args) => forms(args),
        Command::Chartab(args) => chartab(args),
    }
}

fn certify(args: &CertifyArgs, verbose: u8) -> quartic_forge::Result<i32> {
    if args.orbit_points.is_some() {
        return Err(Error::Input(
            "--orbit-points is reserved for a future input mode and is not implemented".into(),
        ));
    }
    let config = PipelineConfig {
        prime_bound: args.prime_bound,
        five_part_budget: args.budget,
        seed: args.seed,
        data_dir: args.data_dir.clone(),
        cache_dir: args.cache_dir.clone(),
        out: args.out.clone(),
        verbosity: verbose,
    };
    let inputs = gather_inputs(args)?;
    let mut reports = Vec::new();
    for text in &inputs {
        let f = UniPoly::parse(text)?;
        let report = run_pipeline(&f, &config)?;
        for warning in &report.warnings {
            eprintln!("warning: {warning}");
        }
        if verbose > 0 {
            for stage in &report.stages {
                eprintln!(
                    "stage {}: {} ({})",
                    stage.name,
                    if stage.ok { "ok" } else { "failed" },
                    stage.detail
                );
            }
            eprintln!("verdict: {}", report.verdict);
        }
        reports.push(report);
    }
    let rendered = render_reports(&reports);
    match &config.out {
        Some(path) => {
            let mut file = std::fs::File::create(path)?;
            file.write_all(rendered.as_bytes())?;
        }
        None => emit(&rendered),
    }
    let all_certified = reports.iter().all(|r| r.verdict == VERDICT_CERTIFIED);
    Ok(if all_certified { 0 } else { 1 })
}

fn gather_inputs(args: &CertifyArgs) -> quartic_forge::Result<Vec<String>> {
    if let Some(poly) = &args.poly {
        return Ok(vec![poly.clone()]);
    }
    let path = args.poly_file.as_ref().expect("clap enforces one input");
    let body = std::fs::read_to_string(path)?;
    let inputs: Vec<String> = body
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_string)
        .collect();
    if inputs.is_empty() {
        return Err(Error::Input(format!(
            "{} contains no polynomials",
            path.display()
        )));
    }
    Ok(inputs)
}

fn render_reports(reports: &[CertificateReport]) -> String {
    if reports.len() == 1 {
        report_json(&reports[0])
    } else {
        let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
        s.push('\n');
        s
    }
}

fn replay(args: &ReplayArgs) -> quartic_forge::Result<i32> {
    let body = std::fs::read_to_string(&args.report)?;
    let reports: Vec<CertificateReport> = if body.trim_start().starts_with('[') {
        serde_json::from_str(&body)?
    } else {
        vec![serde_json::from_str(&body)?]
    };
    for report in &reports {
        replay_certificate(report, args.data_dir.as_deref())?;
        emit(&format!(
            "replay ok: {} -> {}\n",
            report.input.poly, report.verdict
        ));
    }
    Ok(0)
}

fn forms(args: &FormsArgs) -> quartic_forge::Result<i32> {
    let f = UniPoly::parse(&args.poly)?;
    let orbit = OrbitB::new(&f)?;
    let basis = cubic_basis(&orbit)?;
    let sextic = branch_sextic(&basis)?;
    emit(&format!(
        "u = {}\nv = {}\nw = {}\nbranch_sextic = {sextic}\n",
        basis.u, basis.v, basis.w
    ));
    Ok(0)
}

fn chartab(args: &ChartabArgs) -> quartic_forge::Result<i32> {
    let table = load_table(&args.group, args.data_dir.as_deref())?;
    table.validate().map_err(|e| match e {
        Error::Validation(detail) => Error::Validation(format!("table {}: {detail}", args.group)),
        other => other,
    })?;
    let mut out = String::new();
    out.push_str(&format!("group: {}\n", table.group));
    out.push_str(&format!("order: {}\n", table.order));
    out.push_str(&format!("conductor: {}\n", table.conductor));
    out.push_str(&format!("classes: {}\n", table.classes.len()));
    out.push_str(&format!("irreps: {}\n", table.irreps.len()));
    out.push_str("validation: ok\n");
    out.push_str("frobenius-schur indicators:\n");
    for (label, nu) in table.indicators()? {
        out.push_str(&format!("  {label} {nu}\n"));
    }
    let symplectic = table.symplectic_irreps_of_degree(6)?;
    if symplectic.is_empty() {
        out.push_str("symplectic irreps of degree 6: none\n");
    } else {
        out.push_str(&format!(
            "symplectic irreps of degree 6: {}\n",
            symplectic.join(", ")
        ));
    }
    emit(&out);
    Ok(0)
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse(_) => "parse",
        Error::Input(_) => "input",
        Error::ZeroDivisor => "zero-divisor",
        Error::NotMonic => "not-monic",
        Error::Inseparable => "inseparable",
        Error::Reducible(_) => "reducible",
        Error::NotUsablePrime { .. } => "unusable-prime",
        Error::ModulusMismatch => "modulus-mismatch",
        Error::ConductorMismatch(_, _) => "conductor-mismatch",
        Error::Data(_) => "data",
        Error::Validation(_) => "validation",
        Error::Replay { .. } => "replay",
        Error::Internal(_) => "internal",
        Error::Io(_) => "io",
        Error::Json(_) => "json",
    }
}

fn emit_error(e: &Error) {
    let mut body = serde_json::json!({
        "kind": error_kind(e),
        "message": e.to_string(),
    });
    if let Error::Replay { stage, detail } = e {
        body["stage"] = serde_json::json!(stage);
        body["detail"] = serde_json::json!(detail);
    }
    let obj = serde_json::json!({ "error": body });
    let rendered = serde_json::to_string_pretty(&obj).expect("error serializes");
    emit(&format!("{rendered}\n"));
    eprintln!("error: {e}");
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::Input(_)
        | Error::NotMonic
        | Error::Inseparable
        | Error::Reducible(_)
        | Error::Io(_)
        | Error::Json(_) => 2,
        _ => 3,
    }
}
