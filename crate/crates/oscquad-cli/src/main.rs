//! `oscquad` — compute oscillatory integrals `∫₀¹ f(x) e^{-2πikx} dx` with
//! worst-case-optimal rules and certify their errors.
//!
//! Subcommands: `integrate`, `error`, `curve`, `complexity`, `verify`.
//! Exit codes: 0 ok, 1 verification failure, 2 argument/spec parse error,
//! 3 precondition violation, 4 quadrature failure.

use oscquad_cli::output::{
    to_json, ComplexityRecord, CurveRow, ErrorRecord, IntegrateRecord, RecordCsv, CURVE_HEADER,
};
use oscquad_cli::spec::parse_function;
use oscquad_cli::verify;
use oscquad_core::algorithms::{
    algo_per, algo_tay_per, auto_dispatch, damped_qmc, modified_qmc, qmc, AlgorithmRun,
};
use oscquad_core::error_analysis::{
    complexity, complexity_infty, damped_error, initial_error, minimal_error_bounds,
    modified_qmc_error, modified_qmc_error_upper, optimal_damping, per_bound_with_budget,
    per_error_bound, qmc_worst_case_error, tay_per_bound_with_budget, tay_per_error_bound,
    Criterion, ErrorKind, ErrorReport, Setting,
};
use oscquad_core::oracle::Oracle;
use oscquad_core::quadrature::reference_integral;
use oscquad_core::{Error as CoreError, Smoothness};
use std::collections::HashMap;
use std::process::ExitCode;
use std::time::Instant;

const EXIT_VERIFY: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_QUADRATURE: u8 = 4;

struct Args {
    positional: Vec<String>,
    flags: HashMap<String, String>,
}

enum Failure {
    Parse(String),
    Core(CoreError),
    Verify,
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit(self) -> ExitCode {
        match self {
            Failure::Parse(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(EXIT_PARSE)
            }
            Failure::Core(e) => {
                eprintln!("error: {e}");
                match e {
                    CoreError::ToleranceNotMet { .. } | CoreError::DivergentSum => {
                        ExitCode::from(EXIT_QUADRATURE)
                    }
                    _ => ExitCode::from(EXIT_PRECONDITION),
                }
            }
            Failure::Verify => ExitCode::from(EXIT_VERIFY),
        }
    }
}

fn parse_args(argv: &[String]) -> Result<Args, Failure> {
    let mut positional = Vec::new();
    let mut flags = HashMap::new();
    let mut it = argv.iter().peekable();
    while let Some(arg) = it.next() {
        if let Some(name) = arg.strip_prefix("--") {
            if let Some((k, v)) = name.split_once('=') {
                flags.insert(k.to_string(), v.to_string());
            } else {
                let v = it
                    .next()
                    .ok_or_else(|| Failure::Parse(format!("flag --{name} needs a value")))?;
                flags.insert(name.to_string(), v.clone());
            }
        } else {
            positional.push(arg.clone());
        }
    }
    Ok(Args { positional, flags })
}

impl Args {
    fn get(&self, key: &str) -> Option<&str> {
        self.flags.get(key).map(|s| s.as_str())
    }

    fn required(&self, key: &str) -> Result<&str, Failure> {
        self.get(key)
            .ok_or_else(|| Failure::Parse(format!("missing required flag --{key}")))
    }

    fn parse<T: std::str::FromStr>(&self, key: &str) -> Result<T, Failure> {
        let raw = self.required(key)?;
        raw.parse()
            .map_err(|_| Failure::Parse(format!("bad value for --{key}: '{raw}'")))
    }

    fn parse_or<T: std::str::FromStr>(&self, key: &str, default: T) -> Result<T, Failure> {
        match self.get(key) {
            None => Ok(default),
            Some(raw) => raw
                .parse()
                .map_err(|_| Failure::Parse(format!("bad value for --{key}: '{raw}'"))),
        }
    }

    fn smoothness(&self, key: &str) -> Result<Smoothness, Failure> {
        match self.get(key) {
            None => Ok(Smoothness::Finite(1)),
            Some("inf") | Some("infinity") => Ok(Smoothness::Infinite),
            Some(raw) => {
                let s: u32 = raw
                    .parse()
                    .ok()
                    .filter(|s| *s >= 1)
                    .ok_or_else(|| {
                        Failure::Parse(format!("--{key} must be an integer >= 1 or 'inf'"))
                    })?;
                Ok(Smoothness::Finite(s))
            }
        }
    }

    fn setting(&self) -> Result<Setting, Failure> {
        match self.get("setting") {
            None | Some("periodic") => Ok(Setting::Periodic),
            Some("nonperiodic") => Ok(Setting::NonPeriodic),
            Some(other) => Err(Failure::Parse(format!(
                "--setting must be periodic or nonperiodic, got '{other}'"
            ))),
        }
    }

    fn criterion(&self) -> Result<Criterion, Failure> {
        match self.get("criterion") {
            None | Some("abs") => Ok(Criterion::Absolute),
            Some("nor") => Ok(Criterion::Normalized),
            Some(other) => Err(Failure::Parse(format!(
                "--criterion must be abs or nor, got '{other}'"
            ))),
        }
    }
}

/// Writes to `--out` when given, else stdout.
fn emit(args: &Args, text: &str) -> Result<(), Failure> {
    match args.get("out") {
        Some(path) => std::fs::write(path, format!("{text}\n"))
            .map_err(|e| Failure::Parse(format!("cannot write {path}: {e}"))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    if argv.is_empty() {
        eprintln!("{USAGE}");
        return ExitCode::from(EXIT_PARSE);
    }
    let cmd = argv[0].clone();
    let args = match parse_args(&argv[1..]) {
        Ok(a) => a,
        Err(f) => return f.exit(),
    };
    let result = match cmd.as_str() {
        "integrate" => cmd_integrate(&args),
        "error" => cmd_error(&args),
        "curve" => cmd_curve(&args),
        "complexity" => cmd_complexity(&args),
        "verify" => cmd_verify(&args),
        "--help" | "help" => {
            println!("{USAGE}");
            Ok(())
        }
        other => Err(Failure::Parse(format!("unknown subcommand '{other}'"))),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => f.exit(),
    }
}

const USAGE: &str = "oscquad — oscillatory integrals with certified worst-case errors

USAGE:
  oscquad integrate  --algo <qmc|damped|star|per|tayper|auto> --f <spec> --k <int> --n <int> [--s <int|inf>] [--a <damping>]
  oscquad error      --kind <initial|qmc|star|star-upper|damped|per|tayper|lower|upper> --k <int> --s <int|inf> [--n <int>] [--a <damping>] [--setting periodic|nonperiodic]
  oscquad curve      --k <int> --s <int> --n-max <int> [--setting periodic|nonperiodic]
  oscquad complexity --eps <float> --k <int> --s <int|inf> [--criterion abs|nor] [--setting periodic|nonperiodic]
  oscquad verify     <bernoulli|qmc-exact|damping|periodize|taylor|sandwich|fooling|appendix|asymptotic|norms|all> [--seed <int>]

COMMON FLAGS: --out <path>   --format <csv|json>   --seed <int>
Function specs: exp:h=3  bernoulli:m=4  mono:l=2  poly:c0,c1,...  trig:h=re+imi;...
                bump:y,w,s,sign,scale  sum:(spec|spec|...)
Environment:   OSCQUAD_TOL overrides the 1e-12 reference tolerance.";

fn run_algorithm(
    algo: &str,
    f: &Oracle,
    n: usize,
    k: i64,
    s: Smoothness,
    a_flag: Option<f64>,
) -> Result<(AlgorithmRun, f64), Failure> {
    let sf = s.finite();
    let need_finite = || -> Result<u32, Failure> {
        sf.ok_or(Failure::Core(CoreError::Domain(
            "this algorithm needs finite smoothness",
        )))
    };
    match algo {
        "qmc" => {
            let s = need_finite()?;
            let run = qmc(f, n, k)?;
            Ok((run, qmc_worst_case_error(n as u64, k, s).value))
        }
        "damped" => {
            let s = need_finite()?;
            let a = a_flag.unwrap_or_else(|| optimal_damping(n as u64, k, s).0);
            let run = damped_qmc(f, n, k, a)?;
            Ok((run, damped_error(n as u64, k, s, a)))
        }
        "star" => {
            let s = need_finite()?;
            let run = modified_qmc(f, n, k)?;
            Ok((run, modified_qmc_error(n as u64, k, s).value))
        }
        "per" => {
            let s = need_finite()?;
            let run = algo_per(f, n, k, s)?;
            Ok((run, per_error_bound(n as u64, k, s)?))
        }
        "tayper" => {
            let run = algo_tay_per(f, n, k, s)?;
            Ok((run, tay_per_error_bound(n as u64, k, s)?))
        }
        "auto" => {
            let run = auto_dispatch(f, n, k, s)?;
            let bound = run.certified_bound.expect("dispatcher sets its bound");
            Ok((run, bound))
        }
        other => Err(Failure::Parse(format!("unknown --algo '{other}'"))),
    }
}

fn cmd_integrate(args: &Args) -> Result<(), Failure> {
    let algo = args.required("algo")?.to_string();
    let spec = args.required("f")?;
    let f = parse_function(spec).map_err(|e| Failure::Parse(e.to_string()))?;
    let k: i64 = args.parse("k")?;
    let n: usize = args.parse("n")?;
    let s = args.smoothness("s")?;
    let a_flag: Option<f64> = match args.get("a") {
        Some(raw) => Some(
            raw.parse()
                .map_err(|_| Failure::Parse(format!("bad value for --a: '{raw}'")))?,
        ),
        None => None,
    };

    let (run, bound) = run_algorithm(&algo, &f, n, k, s, a_flag)?;
    let tol = oscquad_cli::oracle_tolerance();
    let reference = reference_integral(&f, k, tol)?;

    let record = IntegrateRecord {
        value_re: run.value.re,
        value_im: run.value.im,
        algorithm: run.algorithm.clone(),
        n_used: run.n,
        evaluations: run.log.len(),
        certified_bound: bound,
        reference_re: reference.value.re,
        reference_im: reference.value.im,
        reference_gap: (run.value - reference.value).norm(),
    };
    let text = match args.get("format") {
        Some("csv") => record.to_csv(),
        _ => to_json(&record),
    };
    emit(args, &text)
}

fn report_to_record(kind: &str, r: &ErrorReport) -> ErrorRecord {
    ErrorRecord {
        kind: kind.to_string(),
        value: r.value,
        report_kind: match r.kind {
            ErrorKind::Exact => "exact".into(),
            ErrorKind::UpperBound => "upper".into(),
            ErrorKind::LowerBound => "lower".into(),
        },
        truncation_terms: r.truncation_terms,
        tail_bound: r.tail_bound,
        provenance: r.provenance.to_string(),
    }
}

fn cmd_error(args: &Args) -> Result<(), Failure> {
    let kind = args.required("kind")?.to_string();
    let k: i64 = args.parse("k")?;
    let s = args.smoothness("s")?;
    let periodic = args.setting()? == Setting::Periodic;
    let n: u64 = args.parse_or("n", 0u64)?;
    let need_finite = || -> Result<u32, Failure> {
        s.finite().ok_or(Failure::Core(CoreError::Domain(
            "this error kind needs finite smoothness",
        )))
    };

    let record = match kind.as_str() {
        "initial" => {
            let e = initial_error(k, s, periodic);
            report_to_record(
                "initial",
                &ErrorReport {
                    value: e.value,
                    kind: ErrorKind::Exact,
                    truncation_terms: 0,
                    tail_bound: 0.0,
                    provenance: "zero-algorithm initial error",
                },
            )
        }
        "qmc" => report_to_record("qmc", &qmc_worst_case_error(n.max(1), k, need_finite()?)),
        "star" => report_to_record("star", &modified_qmc_error(n, k, need_finite()?)),
        "star-upper" => {
            report_to_record("star-upper", &modified_qmc_error_upper(n, k, need_finite()?))
        }
        "damped" => {
            let sf = need_finite()?;
            let a = match args.get("a") {
                Some(raw) => raw
                    .parse()
                    .map_err(|_| Failure::Parse(format!("bad value for --a: '{raw}'")))?,
                None => optimal_damping(n.max(1), k, sf).0,
            };
            report_to_record(
                "damped",
                &ErrorReport {
                    value: damped_error(n.max(1), k, sf, a),
                    kind: ErrorKind::Exact,
                    truncation_terms: 0,
                    tail_bound: 0.0,
                    provenance: "damped-rule closed form",
                },
            )
        }
        "per" => {
            let b = per_error_bound(n, k, need_finite()?)?;
            report_to_record(
                "per",
                &ErrorReport {
                    value: b,
                    kind: ErrorKind::UpperBound,
                    truncation_terms: 0,
                    tail_bound: 0.0,
                    provenance: "periodization-rule bound",
                },
            )
        }
        "tayper" => {
            let b = tay_per_error_bound(n, k, s)?;
            report_to_record(
                "tayper",
                &ErrorReport {
                    value: b,
                    kind: ErrorKind::UpperBound,
                    truncation_terms: 0,
                    tail_bound: 0.0,
                    provenance: "Taylor/periodization bound",
                },
            )
        }
        "lower" => {
            report_to_record("lower", &minimal_error_bounds(n, k, need_finite()?, periodic).0)
        }
        "upper" => {
            report_to_record("upper", &minimal_error_bounds(n, k, need_finite()?, periodic).1)
        }
        other => return Err(Failure::Parse(format!("unknown --kind '{other}'"))),
    };
    let text = match args.get("format") {
        Some("csv") => record.to_csv(),
        _ => to_json(&record),
    };
    emit(args, &text)
}

fn cmd_curve(args: &Args) -> Result<(), Failure> {
    let k: i64 = args.parse("k")?;
    let s = args
        .smoothness("s")?
        .finite()
        .ok_or(Failure::Core(CoreError::Domain("curve needs finite smoothness")))?;
    let n_max: u64 = args.parse("n-max")?;
    if n_max == 0 {
        return Err(Failure::Parse("--n-max must be at least 1".into()));
    }
    let periodic = args.setting()? == Setting::Periodic;
    let mut lines = Vec::with_capacity(n_max as usize + 1);
    lines.push(CURVE_HEADER.to_string());
    for n in 1..=n_max {
        let (lo, up) = minimal_error_bounds(n, k, s, periodic);
        let row = CurveRow {
            n,
            k,
            s,
            exact_qmc: qmc_worst_case_error(n, k, s).value,
            star_exact: modified_qmc_error(n, k, s).value,
            per_bound: per_bound_with_budget(n, k, s),
            tayper_bound: tay_per_bound_with_budget(n, k, s),
            lower_bound: lo.value,
            upper_bound: up.value,
        };
        lines.push(row.to_csv());
    }
    emit(args, &lines.join("\n"))
}

fn cmd_complexity(args: &Args) -> Result<(), Failure> {
    let eps: f64 = args.parse("eps")?;
    let k: i64 = args.parse("k")?;
    let s = args.smoothness("s")?;
    let criterion = args.criterion()?;
    let setting = args.setting()?;
    let bounds = match s {
        Smoothness::Finite(s) => complexity(eps, k, s, criterion, setting)?,
        Smoothness::Infinite => complexity_infty(eps, k, criterion)?,
    };
    let record = ComplexityRecord {
        lower: bounds.lower,
        upper: bounds.upper,
        achieved: bounds.achieved,
        zero_case: bounds.zero_case,
    };
    let text = match args.get("format") {
        Some("csv") => record.to_csv(),
        _ => to_json(&record),
    };
    emit(args, &text)
}

fn cmd_verify(args: &Args) -> Result<(), Failure> {
    let suite = args
        .positional
        .first()
        .map(|s| s.as_str())
        .unwrap_or("all");
    let seed: u64 = args.parse_or("seed", 0u64)?;
    let tol = oscquad_cli::oracle_tolerance();
    let start = Instant::now();
    let checks = verify::run_suite(suite, seed, tol).ok_or_else(|| {
        Failure::Parse(format!(
            "unknown suite '{suite}'; choose one of {:?} or all",
            verify::SUITE_NAMES
        ))
    })?;
    let elapsed = start.elapsed();
    let failed = checks.iter().filter(|c| !c.passed).count();

    let report = if args.get("format") == Some("json") {
        // the fooling suite's certificates are part of the JSON report
        let certificates = if suite == "fooling" || suite == "all" {
            verify::fooling_certificates(seed, tol)
                .into_iter()
                .map(|c| oscquad_cli::output::CertificateRecord {
                    k: c.k,
                    s: c.s,
                    n_samples: c.n_samples,
                    norm_hs: c.norm_hs,
                    integral_abs: c.integral_abs,
                    sample_residuals: c.sample_residuals,
                    bound_value: c.bound_value,
                    rescale: c.rescale,
                    valid: c.is_valid(),
                    f_label: c.f.label(),
                })
                .collect()
        } else {
            Vec::new()
        };
        to_json(&oscquad_cli::output::VerifyReport {
            checks: checks
                .iter()
                .map(|c| oscquad_cli::output::CheckRecord {
                    suite: c.suite.to_string(),
                    name: c.name.clone(),
                    passed: c.passed,
                    detail: c.detail.clone(),
                })
                .collect(),
            certificates,
            passed: checks.len() - failed,
            failed,
            elapsed_seconds: elapsed.as_secs_f64(),
        })
    } else {
        let mut report = String::new();
        for c in &checks {
            let line = format!(
                "{} [{}] {}{}",
                if c.passed { "PASS" } else { "FAIL" },
                c.suite,
                c.name,
                if c.detail.is_empty() {
                    String::new()
                } else {
                    format!(" — {}", c.detail)
                }
            );
            report.push_str(&line);
            report.push('\n');
        }
        report.push_str(&format!(
            "{}/{} checks passed in {:.2} s",
            checks.len() - failed,
            checks.len(),
            elapsed.as_secs_f64()
        ));
        report
    };
    emit(args, &report)?;
    if failed > 0 {
        return Err(Failure::Verify);
    }
    Ok(())
}
