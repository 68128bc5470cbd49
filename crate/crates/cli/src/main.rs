//! `montri` — classify and verify abelian monogenic trinomials
//! `x^(2n) + a x^n + b` from the command line.
//!
//! Exit codes: 0 on success (and agreement for `verify`/`search`), 1 when a
//! classifier/oracle disagreement is found, 2 on usage or runtime errors.

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use montri_core::classify::{base_case_predicate, classify, Classification};
use montri_core::galois::{
    abelian_oracle, cyclotomic_recognition, unit_group_invariant_factors, AbelianStatus,
    Certificate, OracleConfig,
};
use montri_core::harness::{
    run_search, verify_case, Agreement, MonogenicOutcome, OracleOutcome, OutputFormat,
    SearchConfig,
};
use montri_core::monogenic::{is_monogenic, trinomial_discriminant, Trinomial};
use montri_core::poly::cyclotomic;
use montri_core::zfactor::factor_over_z;
use montri_core::IntPoly;
use num_bigint::BigInt;
use std::io::Write;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "montri",
    about = "Exact classification and verification of abelian monogenic trinomials x^(2n) + a x^n + b",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    JsonLines,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Classify (n, a, b) against the seven-set characterization
    Classify {
        n: u64,
        a: i64,
        b: i64,
        /// Emit the verdict as JSON
        #[arg(long)]
        json: bool,
    },
    /// Compare the classifier against the exact oracles on one triple
    Verify {
        n: u64,
        a: i64,
        b: i64,
        #[arg(long, default_value_t = 12)]
        oracle_cap: usize,
        #[arg(long, default_value_t = 100)]
        witness_budget: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Include wall-clock milliseconds in the report (breaks replay
        /// determinism of the output)
        #[arg(long)]
        timings: bool,
    },
    /// Exhaustive scan over (n, a, b) ranges
    Search {
        /// Explicit n values, comma separated (e.g. --n 1,2,3)
        #[arg(long, value_delimiter = ',')]
        n: Vec<u64>,
        /// Scan all n from 1 to this bound instead of an explicit list
        #[arg(long, conflicts_with = "n")]
        n_max: Option<u64>,
        /// Scan 0 < |a|, |b| <= bound
        #[arg(long, default_value_t = 5)]
        coeff_bound: u64,
        #[arg(long, default_value_t = 12)]
        oracle_cap: usize,
        #[arg(long, default_value_t = 100)]
        witness_budget: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Worker count (output is identical for any value)
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Output path (stdout when omitted)
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value = "json-lines")]
        format: Format,
        /// Include wall-clock milliseconds per case (breaks replay
        /// determinism of the output)
        #[arg(long)]
        timings: bool,
    },
    /// Discriminant of x^(2n) + a x^n + b, with factored magnitude
    Discriminant { n: u64, a: i64, b: i64 },
    /// Monogenicity of a monic polynomial (ascending coefficients)
    Monogenic {
        #[arg(required = true)]
        coeffs: Vec<String>,
    },
    /// Galois abelianity oracle for a monic polynomial (ascending coefficients)
    Galois {
        #[arg(required = true)]
        coeffs: Vec<String>,
        #[arg(long, default_value_t = 12)]
        oracle_cap: usize,
        #[arg(long, default_value_t = 100)]
        witness_budget: usize,
    },
    /// Print the N-th cyclotomic polynomial
    Cyclotomic { n: u64 },
    /// Factor an integer polynomial (ascending coefficients)
    Factor {
        #[arg(required = true)]
        coeffs: Vec<String>,
    },
    /// The degree-wise base-case predicate for d in {1, 2, 3, 6}
    BaseCase { d: u64, a: i64, b: i64 },
}

fn parse_poly(coeffs: &[String]) -> anyhow::Result<IntPoly> {
    let parsed: Vec<BigInt> = coeffs
        .iter()
        .map(|c| BigInt::from_str(c).with_context(|| format!("bad coefficient {c:?}")))
        .collect::<anyhow::Result<_>>()?;
    Ok(IntPoly::new(parsed))
}

fn describe_classification(c: &Classification) -> String {
    match c {
        Classification::Member { item, group, .. } => {
            format!("member of item {item}: Galois group {group}, abelian monogenic")
        }
        Classification::Rejected { reason } => format!("not abelian monogenic: {reason}"),
    }
}

fn classification_json(c: &Classification) -> serde_json::Value {
    match c {
        Classification::Member { item, group, r, s } => serde_json::json!({
            "verdict": "member",
            "item": item,
            "group": group.invariant_factors(),
            "r": r,
            "s": s,
        }),
        Classification::Rejected { reason } => serde_json::json!({
            "verdict": "rejected",
            "reason": reason.to_string(),
        }),
    }
}

fn run() -> anyhow::Result<i32> {
    let cli = Cli::parse();
    match cli.command {
        Command::Classify { n, a, b, json } => {
            let c = classify(n, &BigInt::from(a), &BigInt::from(b))?;
            if json {
                println!("{}", classification_json(&c));
            } else {
                println!(
                    "F_({n},{a},{b}) = {}",
                    IntPoly::power_trinomial(n, &BigInt::from(a), &BigInt::from(b))
                );
                println!("{}", describe_classification(&c));
            }
            Ok(0)
        }
        Command::Verify { n, a, b, oracle_cap, witness_budget, seed, timings } => {
            let config = SearchConfig {
                n_values: vec![n],
                coeff_bound: a.unsigned_abs().max(b.unsigned_abs()).max(1),
                oracle_degree_cap: oracle_cap,
                witness_prime_budget: witness_budget,
                seed,
                jobs: 1,
                include_timings: timings,
            };
            let report = verify_case(n, a, b, &config)?;
            println!("{}", report.to_json_line());
            eprintln!("classifier: {}", describe_classification(&report.classification));
            match &report.oracle_abelian {
                OracleOutcome::Skipped => eprintln!("oracle: skipped"),
                OracleOutcome::Ran(v) => {
                    let s = match v.status {
                        AbelianStatus::Abelian => "abelian",
                        AbelianStatus::NonAbelian => "nonabelian",
                        AbelianStatus::UnknownAtBudget => "unknown-at-budget",
                    };
                    match &v.structure {
                        Some(g) => eprintln!("oracle: {s}, group {g}"),
                        None => eprintln!("oracle: {s}"),
                    }
                }
            }
            if let MonogenicOutcome::Decided { monogenic, .. } = &report.oracle_monogenic {
                eprintln!("monogenic: {monogenic}");
            }
            eprintln!("agreement: {}", report.agreement.as_str());
            Ok(match report.agreement {
                Agreement::Disagree => 1,
                _ => 0,
            })
        }
        Command::Search {
            n,
            n_max,
            coeff_bound,
            oracle_cap,
            witness_budget,
            seed,
            jobs,
            out,
            format,
            timings,
        } => {
            let n_values = match (n.is_empty(), n_max) {
                (false, _) => n,
                (true, Some(m)) => (1..=m).collect(),
                (true, None) => return Err(anyhow!("provide --n or --n-max")),
            };
            let config = SearchConfig {
                n_values,
                coeff_bound,
                oracle_degree_cap: oracle_cap,
                witness_prime_budget: witness_budget,
                seed,
                jobs,
                include_timings: timings,
            };
            let format = match format {
                Format::JsonLines => OutputFormat::JsonLines,
                Format::Csv => OutputFormat::Csv,
            };
            let summary = match &out {
                Some(path) => {
                    let file = std::fs::File::create(path)
                        .with_context(|| format!("cannot create {}", path.display()))?;
                    let mut writer = std::io::BufWriter::new(file);
                    let s = run_search(&config, format, &mut writer)?;
                    writer.flush()?;
                    s
                }
                None => {
                    let stdout = std::io::stdout();
                    let mut lock = stdout.lock();
                    run_search(&config, format, &mut lock)?
                }
            };
            eprintln!(
                "cases: {}  members: {}  agree: {}  disagree: {}  unconfirmed: {}",
                summary.cases,
                summary.members,
                summary.agree,
                summary.disagree,
                summary.unconfirmed
            );
            Ok(if summary.disagree > 0 { 1 } else { 0 })
        }
        Command::Discriminant { n, a, b } => {
            let t = Trinomial::from_i64(n, a, b)?;
            let report = trinomial_discriminant(&t)?;
            println!("disc = {}", report.value);
            match &report.magnitude_factored {
                Some(f) => {
                    let parts: Vec<String> = f
                        .factors()
                        .iter()
                        .map(|(p, e)| if *e == 1 { format!("{p}") } else { format!("{p}^{e}") })
                        .collect();
                    println!("|disc| = {}", parts.join(" * "));
                }
                None => println!("|disc| = 0"),
            }
            Ok(0)
        }
        Command::Monogenic { coeffs } => {
            let f = parse_poly(&coeffs)?;
            let (monogenic, certificate) = is_monogenic(&f)?;
            println!("f = {f}");
            println!("monogenic: {monogenic}");
            for v in &certificate {
                println!(
                    "  p = {}: {}",
                    v.prime,
                    if v.divides_index {
                        "divides the index"
                    } else {
                        "does not divide the index"
                    }
                );
            }
            Ok(0)
        }
        Command::Galois { coeffs, oracle_cap, witness_budget } => {
            let f = parse_poly(&coeffs)?;
            let config = OracleConfig {
                degree_cap: oracle_cap,
                witness_prime_budget: witness_budget,
                ..OracleConfig::default()
            };
            let verdict = abelian_oracle(&f, &config)?;
            println!("f = {f}");
            match verdict.status {
                AbelianStatus::Abelian => {
                    let g = verdict.structure.as_ref().expect("abelian verdict has structure");
                    println!("abelian: Galois group {g}");
                }
                AbelianStatus::NonAbelian => println!("nonabelian"),
                AbelianStatus::UnknownAtBudget => println!("unknown at budget"),
            }
            match &verdict.certificate {
                Some(Certificate::NonnormalityWitness { prime }) => {
                    println!("certificate: factor degrees are unequal mod {prime}")
                }
                Some(Certificate::IncompleteRootSet { roots_found, degree }) => {
                    println!(
                        "certificate: only {roots_found} of {degree} roots lie in the stem field"
                    )
                }
                Some(Certificate::NoncommutingPair { first, second }) => {
                    println!("certificate: automorphisms {first} and {second} do not commute")
                }
                Some(Certificate::AutomorphismTable { element_orders }) => {
                    println!(
                        "certificate: automorphism table with element orders {element_orders:?}"
                    )
                }
                None => {}
            }
            if let Some(n) = cyclotomic_recognition(&f) {
                if n >= 3 {
                    let units = unit_group_invariant_factors(n)?;
                    println!(
                        "note: f is the cyclotomic polynomial of index {n} (unit group {units})"
                    );
                } else {
                    println!("note: f is the cyclotomic polynomial of index {n}");
                }
            }
            Ok(0)
        }
        Command::Cyclotomic { n } => {
            let phi = cyclotomic(n)?;
            println!("{phi}");
            Ok(0)
        }
        Command::Factor { coeffs } => {
            let f = parse_poly(&coeffs)?;
            let z = factor_over_z(&f)?;
            println!("f = {f}");
            let mut parts = Vec::new();
            if z.content != BigInt::from(1) || z.factors.is_empty() {
                parts.push(format!("{}", z.content));
            }
            for (g, e) in &z.factors {
                if *e == 1 {
                    parts.push(format!("({g})"));
                } else {
                    parts.push(format!("({g})^{e}"));
                }
            }
            println!("f = {}", parts.join(" * "));
            Ok(0)
        }
        Command::BaseCase { d, a, b } => {
            let (ok, group) = base_case_predicate(d, &BigInt::from(a), &BigInt::from(b))?;
            match group {
                Some(g) => println!("abelian monogenic: {ok} (group {g})"),
                None => println!("abelian monogenic: {ok}"),
            }
            Ok(0)
        }
    }
}

fn main() {
    match run() {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}
