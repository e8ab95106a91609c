//! Batch CLI: parse a system file, decompose, verify.
//!
//! Exit codes: 0 success, 2 parse error, 3 non-generic input,
//! 4 verification failure.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use triadec::chains::{rank_set, specializes_well};
use triadec::decompose::{nonredundant_wu, rdu_for_zd};
use triadec::error::Error;
use triadec::oracle;
use triadec::parse::parse_poly;
use triadec::sysfile::parse_system_file;
use triadec::wrsd::{require_zero_dim_regular, wrsd};
use triadec::wu::wu_decompose;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "triadec",
    about = "Triangular decomposition of parametric zero-dimensional polynomial systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a generic regular decomposition and its RDU factors.
    Decompose {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        height: i64,
    },
    /// Print the characteristic-set (Wu) decomposition.
    Wu {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the non-redundant characteristic-set decomposition.
    Nonredundant {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Split the chain in FILE by one polynomial: prints [H, G, F].
    Wrsd {
        file: PathBuf,
        poly: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the numeric verification campaign at sampled stable points.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        height: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Parse { .. } => 2,
                Error::NotGenericZeroDimensional { .. } => 3,
                _ => 4,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> triadec::Result<ExitCode> {
    match cli.command {
        Command::Decompose {
            file,
            format,
            samples,
            seed,
            height,
        } => {
            let sf = parse_system_file(&file)?;
            let d = rdu_for_zd(&sf.polys)?;
            let checks = report::stable_sample_checks(&sf, &d, samples, seed, height)?;
            match format {
                Format::Text => {
                    print!("{}", report::decomposition_text(&d, &checks));
                }
                Format::Json => {
                    println!("{}", report::decomposition_json(&d, &checks));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Wu { file, format } => {
            let sf = parse_system_file(&file)?;
            let w = wu_decompose(&sf.polys);
            match format {
                Format::Text => print!("{}", report::wu_text(&w)),
                Format::Json => println!("{}", report::wu_json(&w)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Nonredundant { file, format } => {
            let sf = parse_system_file(&file)?;
            let (kept, factors) = nonredundant_wu(&sf.polys)?;
            match format {
                Format::Text => print!("{}", report::nonredundant_text(&kept, &factors)),
                Format::Json => println!("{}", report::nonredundant_json(&kept, &factors)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Wrsd { file, poly, format } => {
            let sf = parse_system_file(&file)?;
            let chain = require_zero_dim_regular(sf.polys.clone())?;
            let p = parse_poly(&poly, &sf.ctx)?;
            let w = wrsd(&chain, &p);
            match format {
                Format::Text => print!("{}", report::wrsd_text(&w)),
                Format::Json => println!("{}", report::wrsd_json(&w)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            file,
            samples,
            seed,
            height,
        } => {
            let sf = parse_system_file(&file)?;
            let d = rdu_for_zd(&sf.polys)?;
            let points =
                oracle::sample_stable_points(&d.rdu_factors, &sf.ctx, samples, seed, height)?;
            let target = sf.ctx.parameter_free();
            let mut all_ok = true;

            let mut union_ok = true;
            let mut well_ok = true;
            let mut rank_ok = true;
            for a in &points {
                let spec: Vec<_> = sf
                    .polys
                    .iter()
                    .filter(|p| !p.is_zero())
                    .map(|p| p.specialize_into(a, &target))
                    .collect();
                let direct = oracle::solve_system(&spec)?;
                let via = oracle::union_of_chain_solutions(&d.chains, a)?;
                if !oracle::sets_equal_tol(&direct, &via, oracle::MEMBERSHIP_TOL) {
                    union_ok = false;
                }
                for t in &d.chains {
                    if !specializes_well(t, a) {
                        well_ok = false;
                    }
                    if rank_set(&t.specialize(a)) != rank_set(t.polys()) {
                        rank_ok = false;
                    }
                }
            }
            for (name, ok) in [
                ("solution sets match at every sampled stable point", union_ok),
                ("every chain specializes well at every sampled point", well_ok),
                ("chain ranks are preserved under specialization", rank_ok),
            ] {
                println!("{} ... {}", name, if ok { "PASS" } else { "FAIL" });
                all_ok &= ok;
            }
            if all_ok {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(4))
            }
        }
    }
}
