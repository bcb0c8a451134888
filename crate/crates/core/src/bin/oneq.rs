//! File-driven command-line front end.
//!
//! Exit codes: 0 for success or a positive decision, 3 for a negative
//! decision (not-one-query, failed simulation), 2 for input errors, 1 for
//! environment errors. Outputs are byte-identical across runs unless
//! `--stamp` is given.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};

use oneq_core::boolfn::PartialBooleanFunction;
use oneq_core::catalog::{self, CatalogEntry};
use oneq_core::classify::{self, Decision, DegreeBound};
use oneq_core::error::{Error, Result};
use oneq_core::feasibility::{
    build_constraints, positive_support, solve_feasibility, FeasibilityOutcome, WeightCertificate,
};
use oneq_core::simulator::simulate_with_certificate;
use oneq_core::witness::{build_gram_witness, witness_dump};

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "oneq",
    version,
    about = "Decide, certify, and simulate exact one-query quantum algorithms for partial Boolean functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the function in FILE is one-query (exit 0) or not
    /// (exit 3)
    Check {
        /// Function file
        path: PathBuf,
    },
    /// Solve for a weight certificate; emit the certificate and the witness
    /// dump, or the contradiction trace on failure
    Certificate {
        /// Function file
        path: PathBuf,
        /// Directory for <stem>.cert and <stem>.witness (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also report which indices can carry positive weight in some
        /// certificate
        #[arg(long)]
        all_support: bool,
    },
    /// Run the one-query algorithm over the function's domain with a given
    /// certificate
    Simulate {
        /// Function file
        path: PathBuf,
        /// Certificate file
        cert: PathBuf,
        /// Acceptance tolerance per input
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Print the minimal multilinear degree agreeing with the function
    Degree {
        /// Function file
        path: PathBuf,
    },
    /// Generate a catalog family: function file, certificate file, and
    /// verification report
    Catalog {
        /// Which family to generate
        family: Family,
        /// Arity parameter (f1, f2, f5)
        #[arg(long)]
        n: Option<usize>,
        /// Zero-level weight for f2
        #[arg(long)]
        c: Option<usize>,
        /// Certificate-format weight file for f3
        #[arg(long)]
        weights: Option<PathBuf>,
        /// Output directory
        #[arg(long)]
        out: PathBuf,
        /// Append a timestamp line to the report
        #[arg(long)]
        stamp: bool,
    },
    /// Exhaustively classify all small total or partial functions
    Search {
        /// Number of variables (partial scans: n <= 3, total scans: n <= 4)
        #[arg(long)]
        n: usize,
        /// Scan total functions only
        #[arg(long)]
        total_only: bool,
        /// Deduplicate partial scans by canonical form (total scans always
        /// deduplicate)
        #[arg(long)]
        canonical: bool,
        /// Directory for summary.txt plus one function and certificate file
        /// per one-query representative
        #[arg(long)]
        out: Option<PathBuf>,
        /// Append a timestamp line to the summary
        #[arg(long)]
        stamp: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    F1,
    F2,
    F3,
    F4,
    F5,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Io(_) | Error::Internal(_) => 1,
                _ => 2,
            })
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Check { path } => cmd_check(&path),
        Command::Certificate {
            path,
            out,
            all_support,
        } => cmd_certificate(&path, out.as_deref(), all_support),
        Command::Simulate { path, cert, tol } => cmd_simulate(&path, &cert, tol),
        Command::Degree { path } => cmd_degree(&path),
        Command::Catalog {
            family,
            n,
            c,
            weights,
            out,
            stamp,
        } => cmd_catalog(family, n, c, weights.as_deref(), &out, stamp),
        Command::Search {
            n,
            total_only,
            canonical,
            out,
            stamp,
        } => cmd_search(n, total_only, canonical, out.as_deref(), stamp),
    }
}

fn load_function(path: &Path) -> Result<PartialBooleanFunction> {
    PartialBooleanFunction::parse(&fs::read_to_string(path)?)
}

fn cmd_check(path: &Path) -> Result<u8> {
    let f = load_function(path)?;
    match classify::is_one_query(&f)?.decision {
        Decision::OneQuery => {
            println!("one-query");
            Ok(EXIT_OK)
        }
        Decision::NotOneQuery => {
            println!("not-one-query");
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn cmd_certificate(path: &Path, out: Option<&Path>, all_support: bool) -> Result<u8> {
    let f = load_function(path)?;
    let cs = build_constraints(&f);
    match solve_feasibility(&cs) {
        FeasibilityOutcome::Infeasible(trace) => {
            println!("not-one-query");
            print!("{trace}");
            Ok(EXIT_NEGATIVE)
        }
        FeasibilityOutcome::Feasible(certificate) => {
            let witness = build_gram_witness(&f, &certificate)?;
            let dump = witness_dump(&witness)?;
            let cert_text = certificate.serialize();
            println!("one-query");
            match out {
                Some(dir) => {
                    fs::create_dir_all(dir)?;
                    let stem = file_stem(path);
                    fs::write(dir.join(format!("{stem}.cert")), &cert_text)?;
                    fs::write(dir.join(format!("{stem}.witness")), &dump)?;
                    println!(
                        "wrote {stem}.cert and {stem}.witness to {}",
                        dir.display()
                    );
                }
                None => {
                    print!("{cert_text}");
                    print!("{dump}");
                }
            }
            if all_support {
                let support =
                    positive_support(&cs).expect("support query on a feasible system");
                let carriers: Vec<String> = support
                    .iter()
                    .enumerate()
                    .filter(|(_, &s)| s)
                    .map(|(i, _)| format!("c{i}"))
                    .collect();
                println!("positive-support: {}", carriers.join(" "));
            }
            Ok(EXIT_OK)
        }
    }
}

fn cmd_simulate(path: &Path, cert_path: &Path, tol: f64) -> Result<u8> {
    let f = load_function(path)?;
    let certificate = WeightCertificate::parse(&fs::read_to_string(cert_path)?)?;
    if certificate.n() != f.n() {
        return Err(Error::DimensionMismatch {
            expected: f.n(),
            got: certificate.n(),
        });
    }
    let report = simulate_with_certificate(&f, &certificate, tol)?;
    print!("{}", report.to_table());
    println!();
    print!("{}", report.to_machine_lines());
    Ok(if report.all_pass() { EXIT_OK } else { EXIT_NEGATIVE })
}

fn cmd_degree(path: &Path) -> Result<u8> {
    let f = load_function(path)?;
    match classify::min_degree(&f, f.n())? {
        DegreeBound::Exact(d) => println!("{d}"),
        DegreeBound::ExceedsCap(_) => unreachable!("every function fits at degree n"),
    }
    Ok(EXIT_OK)
}

fn cmd_catalog(
    family: Family,
    n: Option<usize>,
    c: Option<usize>,
    weights: Option<&Path>,
    out: &Path,
    stamp: bool,
) -> Result<u8> {
    let require_n = || {
        n.ok_or_else(|| Error::InvalidParameter("--n is required for this family".into()))
    };
    let (entry, stem): (CatalogEntry, String) = match family {
        Family::F1 => {
            let n = require_n()?;
            (catalog::make_f1(n)?, format!("f1_n{n}"))
        }
        Family::F2 => {
            let n = require_n()?;
            let c = c.ok_or_else(|| {
                Error::InvalidParameter("--c is required for f2".into())
            })?;
            (catalog::make_f2(n, c)?, format!("f2_n{n}_c{c}"))
        }
        Family::F3 => {
            let path = weights.ok_or_else(|| {
                Error::InvalidParameter("--weights is required for f3".into())
            })?;
            let w = WeightCertificate::parse(&fs::read_to_string(path)?)?;
            let stem = format!("f3_n{}", w.n());
            (catalog::make_f3(&w)?, stem)
        }
        Family::F4 => (catalog::make_f4(), "f4".to_string()),
        Family::F5 => {
            let n = require_n()?;
            (catalog::make_f5(n)?, format!("f5_n{n}"))
        }
    };
    fs::create_dir_all(out)?;
    fs::write(out.join(format!("{stem}.fn")), entry.function.serialize())?;
    fs::write(
        out.join(format!("{stem}.cert")),
        entry.certificate.serialize(),
    )?;
    let mut report = catalog::verification_report(&entry, 1e-9)?;
    if stamp {
        report.push_str(&format!("stamp: {}\n", unix_now()));
    }
    fs::write(out.join(format!("{stem}.report")), &report)?;
    print!("{report}");
    Ok(EXIT_OK)
}

fn cmd_search(
    n: usize,
    total_only: bool,
    canonical: bool,
    out: Option<&Path>,
    stamp: bool,
) -> Result<u8> {
    let summary = if total_only {
        classify::scan_total(n)?
    } else {
        classify::scan_partial(n, canonical)?
    };
    let mut text = summary.to_text();
    if stamp {
        text.push_str(&format!("stamp: {}\n", unix_now()));
    }
    print!("{text}");
    if let Some(dir) = out {
        fs::create_dir_all(dir)?;
        fs::write(dir.join("summary.txt"), &text)?;
        for rep in summary.one_query_representatives() {
            fs::write(
                dir.join(format!("rep_{}.fn", rep.key)),
                rep.function.serialize(),
            )?;
            let certificate = rep
                .certificate
                .as_ref()
                .expect("one-query representatives carry certificates");
            fs::write(
                dir.join(format!("rep_{}.cert", rep.key)),
                certificate.serialize(),
            )?;
        }
    }
    Ok(EXIT_OK)
}

fn file_stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "function".to_string())
}

fn unix_now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}
