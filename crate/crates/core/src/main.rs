//! Command-line front end: regenerate the numerical tables, evaluate single
//! sums, run the verification suites, and fit the secondary constants.
//!
//! The sieve capacity for naive shifted sums defaults to 10^7 and can be
//! overridden with the `PHISUM_SIEVE_CAPACITY` environment variable; the
//! blocked a = 0 path only sieves to √x and accepts x up to 10^9.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use phisum::asymptotics;
use phisum::floor_sums::{self, Algorithm, SumQuery};
use phisum::identities;
use phisum::prime_count::build_prime_counter;
use phisum::sieves::{self, SieveTables};
use phisum::special_values::AsymptoticConstants;

const DEFAULT_GRID: [u64; 6] = [10, 100, 1000, 10_000, 100_000, 1_000_000];
const DEFAULT_NAIVE_CAPACITY: u64 = 10_000_000;
const BLOCKED_CAPACITY: u64 = 1_000_000_000;

#[derive(Parser)]
#[command(
    name = "phisum",
    about = "Exact totient sums over floor quotients at shifted primes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Naive,
    Blocked,
}

#[derive(Subcommand)]
enum Command {
    /// Print the S(x,a) table (exact sum, main term, error) over a grid of x
    Table {
        /// Shift a applied to each prime
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        a: i64,
        /// Comma-separated list of x values
        #[arg(long, value_delimiter = ',')]
        grid: Option<Vec<u64>>,
        /// Also write the table as CSV to this path
        #[arg(long)]
        csv: Option<String>,
    },
    /// Evaluate a single sum S(x,a)
    Sum {
        #[arg(long)]
        x: u64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, value_enum, default_value_t = AlgorithmArg::Naive)]
        algorithm: AlgorithmArg,
    },
    /// Run a verification suite
    Verify {
        /// One of: lemmas, oracle, constants, all
        #[arg(long)]
        suite: String,
    },
    /// Fit the secondary constants c1, c2 from normalized errors
    Fit {
        #[arg(long, value_delimiter = ',')]
        grid: Option<Vec<u64>>,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        a: i64,
    },
}

fn sieve_capacity() -> u64 {
    std::env::var("PHISUM_SIEVE_CAPACITY")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_NAIVE_CAPACITY)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> Result<(), String> {
    match command {
        Command::Table { a, grid, csv } => cmd_table(a, grid, csv),
        Command::Sum { x, a, algorithm } => cmd_sum(x, a, algorithm),
        Command::Verify { suite } => cmd_verify(&suite),
        Command::Fit { grid, a } => cmd_fit(grid, a),
    }
}

fn validate_grid(grid: &[u64]) -> Result<(), String> {
    if grid.is_empty() {
        return Err("grid must be non-empty".into());
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err("grid must be strictly increasing (no duplicates)".into());
    }
    if grid.iter().any(|&x| x < 3) {
        return Err("every grid point must be >= 3 (main term needs log log x > 0)".into());
    }
    Ok(())
}

fn build_tables_for(x_max: u64) -> Result<SieveTables, String> {
    let cap = sieve_capacity();
    if x_max > cap {
        return Err(format!(
            "x = {x_max} exceeds the sieve capacity {cap} (module sieves); \
             raise PHISUM_SIEVE_CAPACITY or use the blocked a=0 path"
        ));
    }
    sieves::build_sieves(x_max).map_err(|e| e.to_string())
}

fn cmd_table(a: i64, grid: Option<Vec<u64>>, csv: Option<String>) -> Result<(), String> {
    let grid = grid.unwrap_or_else(|| DEFAULT_GRID.to_vec());
    validate_grid(&grid)?;
    let x_max = *grid.last().unwrap();
    let tables = build_tables_for(x_max)?;
    let constants = AsymptoticConstants::default();

    let mut rows = Vec::new();
    for &x in &grid {
        let b = asymptotics::error_term(x, a, &tables, &constants).map_err(|e| e.to_string())?;
        rows.push(b);
    }

    println!("x,a,exact,main,error");
    for b in &rows {
        println!("{},{},{},{:.2},{:.2}", b.x, b.a, b.exact, b.main, b.error);
    }

    if let Some(path) = csv {
        let file = File::create(&path).map_err(|e| format!("cannot write {path}: {e}"))?;
        let mut w = BufWriter::new(file);
        writeln!(w, "x,a,exact,main,error,normalized_error").map_err(|e| e.to_string())?;
        for b in &rows {
            writeln!(
                w,
                "{},{},{},{:.6},{:.6},{:.6}",
                b.x, b.a, b.exact, b.main, b.error, b.normalized_error
            )
            .map_err(|e| e.to_string())?;
        }
    }
    Ok(())
}

fn cmd_sum(x: u64, a: i64, algorithm: AlgorithmArg) -> Result<(), String> {
    let result = match algorithm {
        AlgorithmArg::Naive => {
            let tables = build_tables_for(x.max(1))?;
            floor_sums::sum_phi_floor_primes_naive(
                &SumQuery {
                    x,
                    shift: a,
                    algorithm: Algorithm::Naive,
                },
                &tables,
            )
            .map_err(|e| e.to_string())?
        }
        AlgorithmArg::Blocked => {
            if x > BLOCKED_CAPACITY {
                return Err(format!(
                    "x = {x} exceeds the blocked capacity {BLOCKED_CAPACITY} (module prime_count)"
                ));
            }
            let rt = phisum_isqrt(x).max(1);
            let tables = sieves::build_sieves(rt.max(2)).map_err(|e| e.to_string())?;
            let counter = build_prime_counter(x.max(1)).map_err(|e| e.to_string())?;
            floor_sums::sum_phi_floor_primes_blocked(
                &SumQuery {
                    x,
                    shift: a,
                    algorithm: Algorithm::Blocked,
                },
                &tables,
                &counter,
            )
            .map_err(|e| e.to_string())?
        }
    };
    println!(
        "S({x},{a}) = {} (terms = {}, skipped = {})",
        result.value, result.terms, result.skipped
    );
    Ok(())
}

fn phisum_isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).map_or(true, |s| s > n) {
        r = r.saturating_sub(1);
        if r == 0 {
            break;
        }
    }
    while (r + 1).checked_mul(r + 1).map_or(false, |s| s <= n) {
        r += 1;
    }
    r
}

struct SuiteReport {
    checks: Vec<(String, bool)>,
}

impl SuiteReport {
    fn new() -> Self {
        SuiteReport { checks: Vec::new() }
    }
    fn check(&mut self, name: &str, ok: bool) {
        println!("check {}: {}", name, if ok { "PASS" } else { "FAIL" });
        self.checks.push((name.to_string(), ok));
    }
    fn all_passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

fn cmd_verify(suite: &str) -> Result<(), String> {
    let mut report = SuiteReport::new();
    match suite {
        "lemmas" => verify_lemmas(&mut report)?,
        "oracle" => verify_oracle(&mut report)?,
        "constants" => verify_constants(&mut report)?,
        "all" => {
            verify_lemmas(&mut report)?;
            verify_oracle(&mut report)?;
            verify_constants(&mut report)?;
        }
        other => return Err(format!("unknown suite '{other}'; use lemmas|oracle|constants|all")),
    }
    if report.all_passed() {
        println!("suite {suite}: all checks passed");
        Ok(())
    } else {
        Err(format!("suite {suite}: at least one check failed"))
    }
}

fn verify_lemmas(report: &mut SuiteReport) -> Result<(), String> {
    let tables = sieves::build_sieves(1_000_000).map_err(|e| e.to_string())?;

    let mut indicator_ok = true;
    for d in 1..=200u64 {
        for m in 0..=500u64 {
            let r = identities::divisor_indicator(d, m).map_err(|e| e.to_string())?;
            let expect = if r.is_divisor { 1.0 } else { 0.0 };
            if (r.value - expect).abs() >= 1e-9 {
                indicator_ok = false;
            }
        }
    }
    report.check("divisor_indicator d<=200 m<=500 within 1e-9", indicator_ok);

    let mut mobius_ok = true;
    for m in 1..=10_000u64 {
        let (s1, s2) = identities::mobius_divisor_sums(m, &tables).map_err(|e| e.to_string())?;
        let phi = tables.phi(m).map_err(|e| e.to_string())? as i128;
        if s1 != num_rational::Ratio::new(phi, m as i128) {
            mobius_ok = false;
        }
        let s2f = *s2.numer() as f64 / *s2.denom() as f64;
        if s2f.abs() >= 2.0 {
            mobius_ok = false;
        }
    }
    report.check("mobius_divisor_sums s1 = phi(m)/m, |s2| < 2, m<=1e4", mobius_ok);

    let c0 = AsymptoticConstants::default().c0;
    let mut basel_ok = true;
    let mut x = 10u64;
    while x <= 1_000_000 {
        let v = identities::basel_partial(x, &tables).map_err(|e| e.to_string())?;
        if (v - c0).abs() > 2.0 / x as f64 {
            basel_ok = false;
        }
        x *= 10;
    }
    report.check("basel_partial tail within 2/x on decade grid", basel_ok);
    Ok(())
}

fn verify_oracle(report: &mut SuiteReport) -> Result<(), String> {
    let tables = sieves::build_sieves(100_000).map_err(|e| e.to_string())?;
    let mut ok = true;
    for &x in &[10u64, 100, 1000, 10_000, 100_000] {
        let naive = floor_sums::sum_phi_floor_primes_naive(
            &SumQuery {
                x,
                shift: 0,
                algorithm: Algorithm::Naive,
            },
            &tables,
        )
        .map_err(|e| e.to_string())?;
        let counter = build_prime_counter(x).map_err(|e| e.to_string())?;
        let blocked = floor_sums::sum_phi_floor_primes_blocked(
            &SumQuery {
                x,
                shift: 0,
                algorithm: Algorithm::Blocked,
            },
            &tables,
            &counter,
        )
        .map_err(|e| e.to_string())?;
        if naive.value != blocked.value {
            ok = false;
        }
    }
    report.check("blocked = naive on the decade grid to 1e5", ok);
    Ok(())
}

fn verify_constants(report: &mut SuiteReport) -> Result<(), String> {
    let constants = AsymptoticConstants::default();
    let expect = [5.07, 92.84, 1174.91, 13497.97, 148545.18, 1596290.10];
    let mut ok = true;
    for (&x, &m) in DEFAULT_GRID.iter().zip(expect.iter()) {
        let got = asymptotics::main_term(x, &constants).map_err(|e| e.to_string())?;
        // the reference column carries up to 0.032 of rounding drift in its
        // last rows, hence 0.05 rather than half-a-cent tolerance
        if (got - m).abs() >= 0.05 {
            ok = false;
        }
    }
    report.check("main_term matches reference column at all six x", ok);
    Ok(())
}

fn cmd_fit(grid: Option<Vec<u64>>, a: i64) -> Result<(), String> {
    let grid = grid.unwrap_or_else(|| DEFAULT_GRID.to_vec());
    if grid.len() < 3 {
        return Err("fit needs at least 3 grid points".into());
    }
    validate_grid(&grid)?;
    let x_max = *grid.last().unwrap();
    let tables = build_tables_for(x_max)?;
    let constants = AsymptoticConstants::default();
    let fit = asymptotics::fit_c1(&grid, a, &tables, &constants).map_err(|e| e.to_string())?;
    println!("c1_hat = {:.6}", fit.c1_hat);
    println!("c2_hat = {:.6}", fit.c2_hat);
    println!("residual_norm = {:.6}", fit.residual_norm);
    for (x, ne) in &fit.sample_points {
        println!("sample {x}: normalized_error = {ne:.6}");
    }
    Ok(())
}
