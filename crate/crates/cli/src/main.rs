//! `ybwb`: construct, verify and sweep Yang–Baxter solutions for `sl(n)`.
//!
//! Exit codes: 0 verified / ok, 1 not verified, 2 usage or parse error,
//! 3 mathematical precondition failure.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use ybwb_core::bd::{assemble_r, beta_cg, cg_triple, enumerate_one_omitted, gamma_term, solve_beta, Triple};
use ybwb_core::boundary::{
    b_cg_closed, carrier, conj61_check_with, ggs_family, ggs_single, matrix_text, parabolic, sl5_i2_boundary,
    strings, StringData,
};
use ybwb_core::exact::{parse_scalar, Scalar};
use ybwb_core::exec::{check_guard, Exec};
use ybwb_core::qybe::{exp_quantize, qybe_failing_degrees, quantize_report, BigMatrix, SWEEP_GUARD};
use ybwb_core::report::Report;
use ybwb_core::tensor::{is_cybe, is_mcybe, to_pretty, AnyTensor};
use ybwb_core::{Error, Tensor2};

#[derive(Parser)]
#[command(name = "ybwb", version, about = "Exact Yang–Baxter workbench for sl(n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a tensor and print it as canonical JSON (or wedge text).
    Construct {
        kind: ConstructKind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        i: Option<usize>,
        /// Comma-separated rationals for `ggs-family`, one per `p ≤ n/2`.
        #[arg(long, allow_hyphen_values = true)]
        lambdas: Option<String>,
        /// Triple JSON file for `triple-assemble`.
        #[arg(long)]
        triple: Option<PathBuf>,
        /// Coordinates in the free part of the β family (default: all zero).
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        #[arg(long)]
        pretty: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a tensor (or Kronecker matrix) from a JSON file; `-` reads stdin.
    Verify { kind: VerifyKind, input: PathBuf },
    /// Run a family of checks; one JSON record per line, never fails on a negative verdict.
    Sweep {
        #[command(subcommand)]
        kind: SweepKind,
    },
    /// String decomposition for coprime `(n, i)`.
    Strings {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        json: bool,
    },
    /// `exp(t b)` for a cube-zero CYBE solution, as a Kronecker matrix.
    Quantize {
        input: PathBuf,
        /// Aligned text grid instead of JSON.
        #[arg(long)]
        grid: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructKind {
    Gamma,
    Cg,
    Bcg,
    TripleAssemble,
    Sl5i2,
    Ggs,
    GgsFamily,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyKind {
    Cybe,
    Mcybe,
    Qybe,
    Carrier,
}

#[derive(Subcommand)]
enum SweepKind {
    /// Cube-zero and QYBE verdicts for `b_CG(n)`, `3 ≤ n ≤ max-n`.
    CubeZero {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// String-conjecture report for one coprime `(n, i)`.
    Conj61 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        samples: usize,
    },
    /// Brute-force triples with one omitted root on each side.
    EnumerateTriples {
        #[arg(long)]
        n: usize,
    },
}

enum Failure {
    Usage(String),
    Precondition(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Precondition(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct { kind, n, i, lambdas, triple, beta, pretty, out } => {
            construct(kind, n, i, lambdas, triple, beta, pretty, out)
        }
        Command::Verify { kind, input } => verify(kind, &input),
        Command::Sweep { kind } => sweep(kind),
        Command::Strings { n, i, json } => strings_cmd(n, i, json),
        Command::Quantize { input, grid, out } => quantize(&input, grid, out),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Precondition(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
    }
}

fn emit(text: &str, out: Option<PathBuf>) -> Result<(), Failure> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(p) => fs::write(&p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => Ok(io::stdout().write_all(text.as_bytes())?),
    }
}

fn need(flag: &str, v: Option<usize>) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--{flag} is required for this construction")))
}

fn scalars(flag: &str, text: &str) -> Result<Vec<Scalar>, Failure> {
    text.split(',')
        .map(|s| parse_scalar(s.trim()).map_err(|_| Failure::Usage(format!("--{flag}: bad rational {s:?}"))))
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn construct(
    kind: ConstructKind,
    n: Option<usize>,
    i: Option<usize>,
    lambdas: Option<String>,
    triple: Option<PathBuf>,
    beta: Option<String>,
    pretty: bool,
    out: Option<PathBuf>,
) -> Outcome {
    let r: Tensor2 = match kind {
        ConstructKind::Gamma => gamma_term(need("n", n)?),
        ConstructKind::Cg => {
            let (n, i) = (need("n", n)?, need("i", i)?);
            assemble_r(&cg_triple(n, i)?, &beta_cg(n, i)?)?
        }
        ConstructKind::Bcg => b_cg_closed(need("n", n)?)?,
        ConstructKind::TripleAssemble => {
            let path = triple.ok_or_else(|| Failure::Usage("--triple is required for triple-assemble".into()))?;
            let t = Triple::from_json_str(&read_input(&path)?)?;
            let family = solve_beta(&t)?;
            let coeffs = match beta {
                Some(text) => scalars("beta", &text)?,
                None => vec![Scalar::from_integer(0.into()); family.dim()],
            };
            assemble_r(&t, &family.member(&coeffs)?)?
        }
        ConstructKind::Sl5i2 => sl5_i2_boundary()?,
        ConstructKind::Ggs => ggs_single(need("n", n)?)?,
        ConstructKind::GgsFamily => {
            let text = lambdas.ok_or_else(|| Failure::Usage("--lambdas is required for ggs-family".into()))?;
            ggs_family(need("n", n)?, &scalars("lambdas", &text)?)?
        }
    };
    let text = if pretty { to_pretty(&r) } else { r.to_json_string() };
    emit(&text, out)?;
    Ok(true)
}

fn read_q2(path: &PathBuf) -> Result<Tensor2, Failure> {
    match AnyTensor::from_json_str(&read_input(path)?)? {
        AnyTensor::Q2(t) => Ok(t),
        _ => Err(Failure::Usage("expected a 2-tensor over Q".into())),
    }
}

fn print_report(r: &Report) -> Outcome {
    emit(&r.to_json_string(), None)?;
    Ok(r.passed())
}

fn verify(kind: VerifyKind, input: &PathBuf) -> Outcome {
    match kind {
        VerifyKind::Cybe | VerifyKind::Mcybe => {
            let r = read_q2(input)?;
            let (name, check): (&str, fn(&Tensor2) -> ybwb_core::Result<bool>) = match kind {
                VerifyKind::Cybe => ("cybe", is_cybe),
                _ => ("mcybe", is_mcybe),
            };
            let mut report = Report::new(&format!("verify-{name}"), r.n(), None, None);
            if report.check("r is skew", r.is_skew()) {
                report.check(&format!("r solves the {}", name.to_uppercase()), check(&r)?);
            }
            print_report(&report)
        }
        VerifyKind::Qybe => {
            let text = read_input(input)?;
            let value: Value = serde_json::from_str(&text).map_err(|e| Failure::Usage(e.to_string()))?;
            if value.get("n2").is_some() {
                let big = BigMatrix::from_json_str_any(&text)?;
                let mut report = Report::new("verify-qybe", big.n(), None, None);
                let failing = qybe_failing_degrees(&big)?;
                report.check("R solves the QYBE", failing.is_empty());
                report.detail("qybe_failing_degrees", failing);
                print_report(&report)
            } else {
                let b = read_q2(input)?;
                print_report(&quantize_report("verify-qybe", &b)?)
            }
        }
        VerifyKind::Carrier => verify_carrier(&read_q2(input)?),
    }
}

fn verify_carrier(r: &Tensor2) -> Outcome {
    let n = r.n();
    let mut report = Report::new("verify-carrier", n, None, None);
    if !report.check("r is skew", r.is_skew()) || !report.check("r is nonzero", !r.is_zero()) {
        return print_report(&report);
    }
    let c = match carrier(r) {
        Ok(c) => c,
        Err(e @ (Error::DegenerateRestriction | Error::CheckFailed(_) | Error::NotSubalgebra)) => {
            report.check("carrier analysis", false);
            report.detail("error", e.to_string());
            return print_report(&report);
        }
        Err(e) => return Err(e.into()),
    };
    report.check("carrier is a subalgebra", true);
    report.check("inverse form is a 2-cocycle", true);
    report.check("Frobenius functional found", c.frobenius_functional.is_some());
    let maximal: Vec<usize> =
        (1..n).filter(|&i| parabolic(n, &[i]).is_ok_and(|p| p == c.carrier)).collect();
    let p = maximal.first().map(|&i| parabolic(n, &[i])).transpose()?;
    report.carrier = Some(c.summary(p.as_ref()));
    report.detail("dim", c.dim());
    report.detail("basis", c.carrier.basis().iter().map(matrix_text).collect::<Vec<_>>());
    report.detail("maximal_parabolic", maximal);
    if let Some(f) = &c.frobenius_functional {
        report.detail("frobenius_functional", matrix_text(f));
    }
    print_report(&report)
}

fn json_line(v: &impl serde::Serialize) -> Result<(), Failure> {
    let line = serde_json::to_string(v).map_err(|e| Failure::Usage(e.to_string()))?;
    emit(&line, None)
}

fn sweep(kind: SweepKind) -> Outcome {
    let exec = Exec::default();
    match kind {
        SweepKind::CubeZero { max_n } => {
            check_guard("n", max_n, SWEEP_GUARD)?;
            let ns: Vec<usize> = (3..=max_n).collect();
            let reports = exec.map(&ns, |&n| b_cg_closed(n).and_then(|b| quantize_report("cube-zero", &b)));
            for r in reports {
                json_line(&r?)?;
            }
        }
        SweepKind::Conj61 { n, i, seed, samples } => json_line(&conj61_check_with(n, i, seed, samples)?)?,
        SweepKind::EnumerateTriples { n } => {
            for t in enumerate_one_omitted(n)? {
                let i = (1..n).find(|&i| cg_triple(n, i).is_ok_and(|c| c == t));
                json_line(&json!({ "n": n, "i": i, "triple": t }))?;
            }
        }
    }
    Ok(true)
}

fn strings_text(s: &StringData) -> String {
    let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    let mut out = format!("n = {}, i = {}\norder: {}\nstrings:", s.n, s.i, list(&s.order));
    for run in &s.strings {
        out.push_str(&format!(" {{{}}}", list(run)));
    }
    out.push('\n');
    // e(s) skips the last string and e'(s) the first
    for (k, e) in s.e_of_s.iter().enumerate() {
        out.push_str(&format!("e(s{}) = {}\n", k + 1, matrix_text(e)));
    }
    for (k, e) in s.eprime_of_s.iter().enumerate() {
        out.push_str(&format!("e'(s{}) = {}\n", k + 2, matrix_text(e)));
    }
    out.push_str(&format!(
        "dim L+ = {}, L- = {}, L = {}, L0 = {}\ndim radical = {} (+ {}, - {}), semisimple = {}",
        s.l_plus.dim(),
        s.l_minus.dim(),
        s.l.dim(),
        s.l0.dim(),
        s.radical.dim(),
        s.radical_plus.dim(),
        s.radical_minus.dim(),
        s.semisimple_dim()
    ));
    out
}

fn strings_cmd(n: usize, i: usize, as_json: bool) -> Outcome {
    let s = strings(n, i)?;
    let text = if as_json {
        serde_json::to_string_pretty(&s.to_json()).map_err(|e| Failure::Usage(e.to_string()))?
    } else {
        strings_text(&s)
    };
    emit(&text, None)?;
    Ok(true)
}

fn quantize(input: &PathBuf, grid: bool, out: Option<PathBuf>) -> Outcome {
    let b = read_q2(input)?;
    let big = exp_quantize(&b)?;
    let text = if grid { big.to_grid() } else { big.to_json_string() };
    emit(&text, out)?;
    Ok(true)
}
