use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use phin_classifier::FamilyId;
use phin_core::HodgeType;
use phin_workbench::{commands, CertifyConfig, Fault};

/// Filtered (phi, N)-modules of rank 3: validation, admissibility,
/// classification and isomorphism.
#[derive(Parser)]
#[command(name = "phin", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a module file and check its structure.
    Validate { file: PathBuf },
    /// Decide weak admissibility.
    Admissible {
        file: PathBuf,
        /// Name a destabilizing subspace when inadmissible.
        #[arg(long)]
        witness: bool,
    },
    /// Find the family, parameters and reducibility of an admissible module.
    Classify { file: PathBuf },
    /// Decide whether two modules are isomorphic.
    Iso {
        a: PathBuf,
        b: PathBuf,
        /// Print an isomorphism when one exists.
        #[arg(long)]
        witness: bool,
    },
    /// List the families realizable at a Hodge type.
    Enumerate {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        s: i64,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=2))]
        rank_n: Option<u8>,
    },
    /// Build a family's representative module from JSON parameters.
    Instantiate {
        #[arg(long)]
        family: String,
        /// `{"eigen_params": [...], "fil_params": [...], "hodge": {"r": .., "s": ..}}`
        #[arg(long)]
        params: String,
    },
    /// Run the seeded certification campaign.
    Certify {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        s: i64,
        #[arg(long)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Invariant subspaces sampled per module by the admissibility oracle.
        #[arg(long, default_value_t = 200)]
        oracle_samples: usize,
        /// Treat this family's valuation conditions as empty, to check that
        /// the campaign catches a corrupted catalog.
        #[arg(long, value_name = "FAMILY")]
        inject_fault: Option<FamilyId>,
    },
}

fn main() -> ExitCode {
    let report = match Cli::parse().command {
        Command::Validate { file } => commands::validate(&file),
        Command::Admissible { file, witness } => commands::admissible(&file, witness),
        Command::Classify { file } => commands::classify(&file),
        Command::Iso { a, b, witness } => commands::iso(&a, &b, witness),
        Command::Enumerate { r, s, rank_n } => commands::enumerate(r, s, rank_n.map(usize::from)),
        Command::Instantiate { family, params } => commands::instantiate(&family, &params),
        Command::Certify { r, s, samples, seed, workers, oracle_samples, inject_fault } => {
            let mut cfg = CertifyConfig::new(HodgeType::new(r, s), samples, seed);
            cfg.oracle_samples = oracle_samples;
            cfg.fault = inject_fault.map(Fault::DropConditions);
            commands::certify(&cfg, workers)
        }
    };
    println!("{}", report.to_json());
    eprintln!("{}", report.summary);
    ExitCode::from(report.exit_code())
}
