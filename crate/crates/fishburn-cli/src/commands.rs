//! Subcommand wiring, report emission, and the full verification suite.

use std::io::Write;
use std::path::PathBuf;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use fishburn::ascent::count_ascent_sequences;
use fishburn::cache;
use fishburn::congruence::{
    scan_prime_power, verify_a_conjecture, verify_classification, verify_lemma5,
    verify_strengthened_lemma5, verify_theorem1,
};
use fishburn::cyclo_verify::{
    verify_bernoulli_crosscheck, verify_eq_2_14, verify_lemma2, verify_lemma4,
};
use fishburn::gen::TableName;
use fishburn::residues::residue_sets;
use fishburn::{partial_sum_f, IntegerRing, ModularRing, Status, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Machine,
}

#[derive(Parser, Debug)]
#[command(
    name = "fishburn",
    version,
    about = "Fishburn numbers, their congruences, and mechanical verification of the claims about them"
)]
pub struct Cli {
    /// Report output format
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: OutputFormat,

    /// Coefficient cache directory (default: $FISHBURN_CACHE_DIR; unset disables caching)
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Number of worker threads for independent reports
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the Fishburn coefficients xi(0..limit)
    Xi {
        #[arg(long)]
        limit: usize,
        /// Compute mod m instead of over exact integers
        #[arg(long)]
        modulus: Option<u64>,
    },
    /// Print the alternating a(0..limit) series
    ASeries {
        #[arg(long)]
        limit: usize,
        #[arg(long)]
        modulus: Option<u64>,
    },
    /// Print the partial sum F(q, N) = sum_{n<=N} (q;q)_n
    PartialSum {
        #[arg(short = 'n', long)]
        n: usize,
        #[arg(long)]
        modulus: Option<u64>,
    },
    /// Dissect F(q, N) by exponent residue class mod p
    Dissect {
        #[arg(short = 'n', long)]
        n: usize,
        #[arg(short = 'p', long)]
        p: u64,
        #[arg(long)]
        modulus: Option<u64>,
    },
    /// Print the pentagonal residue sets S(p) and T(p)
    Sets {
        #[arg(short = 'p', long)]
        p: u64,
    },
    /// Classify primes up to p-max by whether T(p) is nonempty
    Classify {
        #[arg(long, default_value_t = 1000)]
        p_max: u64,
    },
    /// Verify a proven claim about the sequence
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Scan an open conjecture (refutations are findings, not failures)
    #[command(subcommand)]
    Scan(ScanCommand),
    /// Run the full verification battery at acceptance scale
    Suite,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// xi(pn+i) = 0 (mod p) for all i in T(p), n <= n-max
    Theorem1 {
        #[arg(short = 'p', long)]
        p: u64,
        #[arg(long, default_value_t = 100)]
        n_max: u64,
    },
    /// (1-Q)^n divides A_p(pn-1, i, Q) for i outside S(p)
    Lemma5 {
        #[arg(short = 'p', long)]
        p: u64,
        #[arg(short = 'n', long)]
        n: u64,
    },
    /// The theta-operator / C-array polynomial identity
    Lemma4 {
        #[arg(short = 'p', long)]
        p: u64,
        #[arg(short = 'n', long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        max_order: usize,
    },
    /// The theta-operator Stirling expansion on random polynomials
    Lemma2 {
        #[arg(long, default_value_t = 50)]
        trials: u64,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
    /// Vanishing of non-pentagonal dissection values at 1
    Eq214 {
        #[arg(short = 'p', long)]
        p: u64,
        #[arg(long, default_value_t = 3)]
        max_j: usize,
    },
    /// Two-route Bernoulli computation of b_M(zeta)
    Bernoulli {
        #[arg(short = 'p', long)]
        p: u64,
        #[arg(long, default_value_t = 2)]
        max_order: usize,
    },
    /// a(5n+4) = 0 (mod 5) scan
    AConjecture {
        #[arg(long, default_value_t = 40)]
        n_max: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum ScanCommand {
    /// Full-residue scan for xi(p^j n + b) = 0 (mod p^j)
    PrimePower {
        #[arg(short = 'p', long)]
        p: u64,
        #[arg(short = 'j', long)]
        j: u32,
        #[arg(long, default_value_t = 20)]
        n_max: u64,
    },
    /// (Q;Q)_n divisibility strengthening of the dissection lemma
    StrengthenedLemma5 {
        #[arg(short = 'p', long)]
        p: u64,
        #[arg(short = 'n', long)]
        n: u64,
    },
}

fn cache_dir(cli: &Cli) -> Option<PathBuf> {
    cli.cache_dir
        .clone()
        .or_else(|| std::env::var_os("FISHBURN_CACHE_DIR").map(PathBuf::from))
}

fn emit_reports(format: OutputFormat, reports: &[VerificationReport]) {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for r in reports {
        match format {
            OutputFormat::Text => write!(out, "{}", r.to_text()).unwrap(),
            OutputFormat::Machine => writeln!(out, "{}", r.to_machine()).unwrap(),
        }
    }
}

/// 1 when a proven claim is refuted; conjecture refutations stay 0.
fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports
        .iter()
        .any(|r| r.status == Status::Refuted && !r.conjecture)
    {
        1
    } else {
        0
    }
}

fn print_table(
    format: OutputFormat,
    name: TableName,
    modulus: Option<u64>,
    limit: usize,
    dir: Option<&std::path::Path>,
) -> Result<()> {
    let table = cache::load_or_compute(dir, name, modulus, limit).context("cache access")?;
    match format {
        OutputFormat::Text => {
            for (k, v) in table.values.iter().enumerate() {
                println!("{}({k}) = {v}", name.as_str());
            }
            for warning in table.anomalies() {
                println!("warning: {warning}");
            }
        }
        OutputFormat::Machine => {
            let values: Vec<String> = table.values.iter().map(|v| format!("\"{v}\"")).collect();
            let modulus_str = modulus.map_or("null".to_string(), |m| m.to_string());
            println!(
                "{{\"table\":\"{}\",\"modulus\":{},\"limit\":{},\"values\":[{}]}}",
                name.as_str(),
                modulus_str,
                limit,
                values.join(",")
            );
        }
    }
    Ok(())
}

pub fn run(cli: Cli) -> Result<i32> {
    if cli.jobs == 0 {
        return Err(anyhow!("--jobs must be at least 1"));
    }
    let dir = cache_dir(&cli);
    match &cli.command {
        Command::Xi { limit, modulus } => {
            print_table(cli.format, TableName::Xi, *modulus, *limit, dir.as_deref())?;
            Ok(0)
        }
        Command::ASeries { limit, modulus } => {
            print_table(cli.format, TableName::A, *modulus, *limit, dir.as_deref())?;
            Ok(0)
        }
        Command::PartialSum { n, modulus } => {
            let rendered = match modulus {
                None => partial_sum_f(*n, &IntegerRing).to_string(),
                Some(m) => partial_sum_f(*n, &ModularRing::new(*m)).to_string(),
            };
            println!("F(q,{n}) = {rendered}");
            Ok(0)
        }
        Command::Dissect { n, p, modulus } => {
            if *p < 2 {
                return Err(anyhow!("p must be at least 2"));
            }
            match modulus {
                None => {
                    let table = partial_sum_f(*n, &IntegerRing).dissect(*p)?;
                    for (i, c) in table.components().iter().enumerate() {
                        println!("A_{p}({n},{i},Q) = {}", c.format_with("Q"));
                    }
                }
                Some(m) => {
                    let table = partial_sum_f(*n, &ModularRing::new(*m)).dissect(*p)?;
                    for (i, c) in table.components().iter().enumerate() {
                        println!("A_{p}({n},{i},Q) = {}", c.format_with("Q"));
                    }
                }
            }
            Ok(0)
        }
        Command::Sets { p } => {
            let sets = residue_sets(*p)?;
            let fmt = |v: &[u64]| {
                let inner = v
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                format!("{{{inner}}}")
            };
            println!("S({p}) = {}", fmt(&sets.s));
            println!("T({p}) = {}", fmt(&sets.t));
            Ok(0)
        }
        Command::Classify { p_max } => {
            if *p_max < 5 {
                return Err(anyhow!("--p-max must be at least 5"));
            }
            let reports = vec![verify_classification(*p_max)];
            emit_reports(cli.format, &reports);
            Ok(exit_code(&reports))
        }
        Command::Verify(v) => {
            let report = match v {
                VerifyCommand::Theorem1 { p, n_max } => verify_theorem1(*p, *n_max)?,
                VerifyCommand::Lemma5 { p, n } => {
                    if *n < 1 {
                        return Err(anyhow!("-n must be at least 1"));
                    }
                    verify_lemma5(*p, *n)?
                }
                VerifyCommand::Lemma4 { p, n, max_order } => verify_lemma4(*p, *n, *max_order)?,
                VerifyCommand::Lemma2 { trials, max_n } => {
                    if *max_n < 1 {
                        return Err(anyhow!("--max-n must be at least 1"));
                    }
                    verify_lemma2(*trials, *max_n)
                }
                VerifyCommand::Eq214 { p, max_j } => verify_eq_2_14(*p, *max_j)?,
                VerifyCommand::Bernoulli { p, max_order } => {
                    verify_bernoulli_crosscheck(*p, *max_order)?
                }
                VerifyCommand::AConjecture { n_max } => verify_a_conjecture(*n_max),
            };
            let reports = vec![report];
            emit_reports(cli.format, &reports);
            Ok(exit_code(&reports))
        }
        Command::Scan(s) => {
            let report = match s {
                ScanCommand::PrimePower { p, j, n_max } => {
                    if *j < 2 {
                        return Err(anyhow!("-j must be at least 2"));
                    }
                    scan_prime_power(*p, *j, *n_max)?
                }
                ScanCommand::StrengthenedLemma5 { p, n } => {
                    if *n < 1 {
                        return Err(anyhow!("-n must be at least 1"));
                    }
                    verify_strengthened_lemma5(*p, *n)?
                }
            };
            let reports = vec![report];
            emit_reports(cli.format, &reports);
            Ok(exit_code(&reports))
        }
        Command::Suite => {
            let reports = run_suite(cli.jobs)?;
            emit_reports(cli.format, &reports);
            Ok(exit_code(&reports))
        }
    }
}

/// Regression: xi(0..9) against the independent ascent-sequence oracle.
fn xi_oracle_report() -> VerificationReport {
    let mut report = VerificationReport::new("xi-oracle").with_param("n_max", 9);
    let table = fishburn::xi_table(9);
    for (n, v) in table.values.iter().enumerate() {
        let oracle = count_ascent_sequences(n).expect("n <= guard");
        report.checked_count += 1;
        if *v != oracle {
            report.push_counterexample(
                &[("n", n as i64)],
                format!("series xi({n}) = {v}, oracle count = {oracle}"),
            );
        }
    }
    report.finalize()
}

/// The printed residue sets for p = 5, 7, 11.
fn residue_sets_report() -> VerificationReport {
    let mut report = VerificationReport::new("residue-sets").with_param("p_max", 11);
    let expect: [(u64, &[u64], &[u64]); 3] = [
        (5, &[0, 1, 2], &[3, 4]),
        (7, &[0, 1, 2, 5], &[6]),
        (11, &[0, 1, 2, 4, 5, 7], &[8, 9, 10]),
    ];
    for (p, s, t) in expect {
        let sets = residue_sets(p).expect("prime");
        report.checked_count += 1;
        if sets.s != s || sets.t != t {
            report.push_counterexample(
                &[("p", p as i64)],
                format!("S = {:?}, T = {:?}", sets.s, sets.t),
            );
        }
    }
    report.finalize()
}

enum Job {
    Theorem1 { p: u64, n_max: u64 },
    Lemma5 { p: u64, n: u64 },
    StrengthenedLemma5 { p: u64, n: u64 },
    Eq214 { p: u64, max_j: usize },
    Lemma4 { p: u64, n: usize, max_order: usize },
    Lemma2 { trials: u64, max_n: usize },
    Bernoulli { p: u64, max_order: usize },
    Classification { p_max: u64 },
    PrimePower { p: u64, j: u32, n_max: u64 },
    AConjecture { n_max: u64 },
    XiOracle,
    ResidueSets,
}

fn run_job(job: &Job) -> Result<VerificationReport> {
    Ok(match job {
        Job::Theorem1 { p, n_max } => verify_theorem1(*p, *n_max)?,
        Job::Lemma5 { p, n } => verify_lemma5(*p, *n)?,
        Job::StrengthenedLemma5 { p, n } => verify_strengthened_lemma5(*p, *n)?,
        Job::Eq214 { p, max_j } => verify_eq_2_14(*p, *max_j)?,
        Job::Lemma4 { p, n, max_order } => verify_lemma4(*p, *n, *max_order)?,
        Job::Lemma2 { trials, max_n } => verify_lemma2(*trials, *max_n),
        Job::Bernoulli { p, max_order } => verify_bernoulli_crosscheck(*p, *max_order)?,
        Job::Classification { p_max } => verify_classification(*p_max),
        Job::PrimePower { p, j, n_max } => scan_prime_power(*p, *j, *n_max)?,
        Job::AConjecture { n_max } => verify_a_conjecture(*n_max),
        Job::XiOracle => xi_oracle_report(),
        Job::ResidueSets => residue_sets_report(),
    })
}

/// The acceptance-scale battery. Jobs are listed in their fixed emission
/// order; workers may finish in any order but the report sequence (and so the
/// machine output) is identical for any parallelism degree.
pub fn run_suite(jobs: usize) -> Result<Vec<VerificationReport>> {
    let mut battery: Vec<Job> = Vec::new();
    battery.push(Job::XiOracle);
    battery.push(Job::ResidueSets);
    // the five known congruence-class primes at depth 200, then the full sweep
    for p in [5u64, 7, 11, 17, 19] {
        battery.push(Job::Theorem1 { p, n_max: 200 });
    }
    for p in [13u64, 23, 29, 31, 37, 41, 43, 47] {
        battery.push(Job::Theorem1 { p, n_max: 100 });
    }
    for p in [5u64, 7, 11] {
        for n in 1..=5 {
            battery.push(Job::Lemma5 { p, n });
        }
        for n in 1..=4 {
            battery.push(Job::StrengthenedLemma5 { p, n });
        }
        battery.push(Job::Eq214 { p, max_j: 3 });
    }
    battery.push(Job::Lemma4 { p: 3, n: 4, max_order: 3 });
    battery.push(Job::Lemma4 { p: 5, n: 9, max_order: 3 });
    battery.push(Job::Lemma2 { trials: 50, max_n: 5 });
    battery.push(Job::Bernoulli { p: 5, max_order: 2 });
    battery.push(Job::Bernoulli { p: 7, max_order: 2 });
    battery.push(Job::Classification { p_max: 1000 });
    battery.push(Job::Classification { p_max: 10000 });
    battery.push(Job::PrimePower { p: 5, j: 2, n_max: 20 });
    battery.push(Job::AConjecture { n_max: 40 });

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .context("thread pool")?;
    let results: Vec<Result<VerificationReport>> = pool.install(|| {
        use rayon::prelude::*;
        battery.par_iter().map(run_job).collect()
    });
    results.into_iter().collect()
}
