use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use qclcd::descriptor::{field, DescriptorFile};
use qclcd::parallel;
use qclcd::report::{self, DistanceMethod, Settings};
use qclcd::search_io::{RecordLine, SearchFile};
use qclcd::{read_file, CliError, EXIT_MISMATCH};
use qclcd_core::metrics::{DEFAULT_EXHAUSTIVE_BUDGET, DEFAULT_LOW_WEIGHT_BUDGET};
use qclcd_core::polyring::{is_self_reciprocal, Reciprocity, Ring};
use qclcd_core::search::SearchPlan;
use qclcd_core::{presets, Error};

/// Quasi-cyclic LCD codes: verification, factorization and search.
///
/// Exit status: 0 ok, 2 bad descriptor or configuration, 3 budget
/// exceeded, 4 polynomial test and hull oracle disagree.
#[derive(Parser)]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a descriptor and report [length, dim, distance] as JSON.
    Verify(VerifyArgs),
    /// Factor x^n - 1 over GF(q).
    Factor(FactorArgs),
    /// Random or exhaustive search for LCD codes, one JSON line per record.
    Search(SearchArgs),
}

#[derive(Args)]
struct Budgets {
    /// Largest q^k enumerated exhaustively.
    #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_BUDGET)]
    exhaustive_budget: u64,
    /// Node limit for Brouwer-Zimmermann and low-weight counting.
    #[arg(long, default_value_t = DEFAULT_LOW_WEIGHT_BUDGET)]
    low_weight_budget: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Descriptor JSON file.
    #[arg(required_unless_present = "preset", conflicts_with = "preset")]
    file: Option<String>,
    /// Built-in descriptor: example1, example2 or example3.
    #[arg(long)]
    preset: Option<String>,
    /// auto runs the hull oracle when the length is at most 128.
    #[arg(long, default_value = "auto", value_parser = ["auto", "always", "never"])]
    oracle: String,
    #[arg(long, value_enum, default_value_t = DistanceMethod::Auto)]
    distance: DistanceMethod,
    /// Report exact weight counts up to this weight.
    #[arg(long)]
    prefix_weight: Option<usize>,
    /// Also report dimension and distance of the dual code.
    #[arg(long)]
    dual: bool,
    /// Recorded in the report; verification itself is deterministic.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, short = 'j', default_value_t = default_threads())]
    threads: usize,
    /// Write the report here instead of stdout.
    #[arg(long, short = 'o')]
    output: Option<String>,
    #[command(flatten)]
    budgets: Budgets,
}

#[derive(Args)]
struct FactorArgs {
    #[arg(long)]
    q: u32,
    /// Field modulus coefficients, constant term first.
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u32>>,
    #[arg(long)]
    n: usize,
    /// Also list the self-reciprocal divisors.
    #[arg(long)]
    divisors: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SearchArgs {
    /// Search configuration JSON; flags override its fields.
    #[arg(long)]
    config: Option<String>,
    #[arg(long)]
    q: Option<u32>,
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u32>>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    ell: Option<usize>,
    /// euclidean, hermitian or symplectic (default euclidean).
    #[arg(long)]
    kind: Option<String>,
    /// Generators per candidate (default 1).
    #[arg(long)]
    h: Option<usize>,
    /// Fixed generator polynomial, constant term first; default tries
    /// every self-reciprocal divisor.
    #[arg(long, value_delimiter = ',')]
    g: Option<Vec<u64>>,
    /// Number of random trials (default 1000).
    #[arg(long)]
    trials: Option<u64>,
    /// RNG seed (default 0). Output is a function of the seed alone.
    #[arg(long)]
    seed: Option<u64>,
    /// Enumerate every f tuple of degree at most this instead of sampling.
    #[arg(long)]
    exhaustive_degree: Option<usize>,
    /// Fix the first f of every generator to 1.
    #[arg(long)]
    fix_f0: bool,
    #[arg(long, value_parser = ["auto", "always", "never"])]
    oracle: Option<String>,
    #[arg(long)]
    exhaustive_budget: Option<u64>,
    #[arg(long)]
    low_weight_budget: Option<u64>,
    /// Stop after this many seconds and report partial results.
    #[arg(long)]
    time_budget: Option<f64>,
    #[arg(long, short = 'j', default_value_t = default_threads())]
    threads: usize,
}

fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn verify(a: VerifyArgs) -> Result<i32, CliError> {
    let desc = match (&a.preset, &a.file) {
        (Some(name), _) => presets::by_name(name).ok_or_else(|| {
            CliError::Config(format!("unknown preset {name:?}; known: {}", presets::NAMES.join(", ")))
        })?,
        (None, Some(path)) => DescriptorFile::from_json(&read_file(path)?)?.to_descriptor()?,
        (None, None) => unreachable!("clap requires one"),
    };
    let settings = Settings {
        oracle: a.oracle,
        distance: a.distance,
        prefix_weight: a.prefix_weight,
        dual: a.dual,
        exhaustive_budget: a.budgets.exhaustive_budget,
        low_weight_budget: a.budgets.low_weight_budget,
        seed: a.seed,
    };
    let rep = report::verify(&parallel::pool(a.threads), &desc, &settings)?;
    let json = serde_json::to_string_pretty(&rep).expect("serializable");
    match &a.output {
        Some(path) => std::fs::write(path, json + "\n")
            .map_err(|e| CliError::Io { path: path.clone(), msg: e.to_string() })?,
        None => println!("{json}"),
    }
    if rep.lcd.agrees == Some(false) {
        eprintln!(
            "error: polynomial test says {} but the hull has dimension {}",
            rep.lcd.theorem,
            rep.lcd.hull_dim.unwrap_or(0)
        );
        return Ok(EXIT_MISMATCH);
    }
    Ok(0)
}

fn factor(a: FactorArgs) -> Result<i32, CliError> {
    let f = field(a.q, a.modulus.as_deref())?;
    let ring = Ring::new(f.clone(), a.n)?;
    let factors = ring.factor_modulus()?;
    let hermitian = f.hermitian_base().is_some();
    let mut rows = Vec::new();
    for fac in &factors {
        let e = is_self_reciprocal(&fac.poly, Reciprocity::Euclidean, &f)?;
        let h = if hermitian { Some(is_self_reciprocal(&fac.poly, Reciprocity::Hermitian, &f)?) } else { None };
        rows.push((fac, e, h));
    }
    let divisors = |kind| -> Result<Vec<_>, CliError> {
        Ok(ring.self_reciprocal_divisors(kind)?.iter().map(|d| d.format(&f)).collect())
    };
    let (div_e, div_h) = if a.divisors {
        (Some(divisors(Reciprocity::Euclidean)?), if hermitian { Some(divisors(Reciprocity::Hermitian)?) } else { None })
    } else {
        (None, None)
    };
    if a.json {
        let json = serde_json::json!({
            "q": f.order(),
            "modulus": f.modulus(),
            "n": a.n,
            "semisimple": ring.is_semisimple(),
            "factors": rows.iter().map(|(fac, e, h)| serde_json::json!({
                "poly": fac.poly.format(&f),
                "coeffs": fac.poly.reps(),
                "degree": fac.poly.degree(),
                "multiplicity": fac.multiplicity,
                "self_reciprocal": e,
                "conjugate_self_reciprocal": h,
            })).collect::<Vec<_>>(),
            "self_reciprocal_divisors": div_e,
            "conjugate_self_reciprocal_divisors": div_h,
        });
        println!("{}", serde_json::to_string_pretty(&json).expect("serializable"));
        return Ok(0);
    }
    println!("x^{}-1 over GF({}): {} irreducible factors", a.n, f.order(), factors.len());
    for (fac, e, h) in &rows {
        let mark = |b: bool| if b { "yes" } else { "no" };
        let mut line = format!(
            "  {}  deg {}  mult {}  self-reciprocal {}",
            fac.poly.format(&f),
            fac.poly.degree().unwrap_or(0),
            fac.multiplicity,
            mark(*e)
        );
        if let Some(h) = h {
            line.push_str(&format!("  conjugate-self-reciprocal {}", mark(*h)));
        }
        println!("{line}");
    }
    for (label, list) in [("self-reciprocal", &div_e), ("conjugate-self-reciprocal", &div_h)] {
        if let Some(list) = list {
            println!("{} {label} divisors:", list.len());
            for d in list {
                println!("  {d}");
            }
        }
    }
    Ok(0)
}

fn search(a: SearchArgs) -> Result<i32, CliError> {
    let base = match &a.config {
        Some(path) => SearchFile::from_json(&read_file(path)?)?,
        None => SearchFile::default(),
    };
    let flags = SearchFile {
        q: a.q,
        modulus: a.modulus,
        n: a.n,
        ell: a.ell,
        kind: a.kind,
        h: a.h,
        g: a.g,
        trials: a.trials,
        seed: a.seed,
        exhaustive_degree: a.exhaustive_degree,
        fix_f0: a.fix_f0.then_some(true),
        oracle: a.oracle,
        exhaustive_budget: a.exhaustive_budget,
        low_weight_budget: a.low_weight_budget,
    };
    let plan = SearchPlan::new(base.overlay(flags).to_config()?)?;
    let deadline = a.time_budget.map(|s| Instant::now() + Duration::from_secs_f64(s));
    let state = parallel::search(&parallel::pool(a.threads), &plan, deadline, |rec| {
        println!("{}", serde_json::to_string(&RecordLine::from(rec)).expect("serializable"));
    })?;

    eprintln!("{:>4} {:>4} {:>6} {:>8}  g", "k", "d", "exact", "trial");
    let f = plan.config().field.clone();
    let mut rows: Vec<_> = state.table.records().collect();
    rows.sort_by_key(|r| (r.dim, r.distance.value));
    for r in rows {
        eprintln!(
            "{:>4} {:>4} {:>6} {:>8}  {}",
            r.dim,
            r.distance.value,
            r.distance.exact,
            r.trial,
            r.descriptor.generators()[0].g.format(&f)
        );
    }
    eprintln!(
        "{} of {} trials run, {} passed, {} over budget, {} mismatches{}",
        state.trials_run,
        plan.trials(),
        state.passed,
        state.over_budget,
        state.mismatches.len(),
        if state.partial { " (partial)" } else { "" }
    );
    if !state.mismatches.is_empty() {
        for (t, hull) in &state.mismatches {
            eprintln!("error: trial {t} passes the polynomial test but has hull dimension {hull}");
        }
        return Ok(EXIT_MISMATCH);
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Verify(a) => verify(a),
        Cmd::Factor(a) => factor(a),
        Cmd::Search(a) => search(a),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            if let CliError::Core(Error::BudgetExceeded { .. }) = e {
                eprintln!("hint: raise --exhaustive-budget / --low-weight-budget or use --distance bz");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
