use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use liespec_core::so7::Case;
use liespec_core::Error;

mod commands;
mod output;

use output::Outcome;

/// Exact verification of the first Laplace eigenvalue on Gr(2,7) and Gr(3,8).
#[derive(Parser, Debug)]
#[command(name = "liespec", version, about)]
struct Cli {
    /// Emit a JSON envelope instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone)]
struct CaseArg {
    /// gr27 or gr38
    #[arg(long)]
    case: Case,
}

#[derive(clap::Args, Debug, Clone)]
struct MetricArg {
    /// Squared radii s1,s2,s3 as exact rationals, e.g. 12,4,3 or 10/3,10/9,5/6.
    #[arg(long, value_name = "S1,S2,S3", conflicts_with = "radii")]
    s: Option<String>,
    /// Radii r1,r2,r3 as decimals; they are squared exactly as written.
    #[arg(long, value_name = "R1,R2,R3")]
    radii: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Chevalley basis of so(7,C).
    VerifyChevalley,
    /// Check the homomorphism identity and invariant form of every built module.
    VerifyReps,
    /// Vectors fixed by a subalgebra in a module.
    Invariants {
        #[command(flatten)]
        case: CaseArg,
        #[arg(long)]
        rep: String,
        /// g, k, h, p1, p2 or p3
        #[arg(long, default_value = "h")]
        sub: String,
    },
    /// Eigenvalues of the Casimir of g or k on a module.
    Casimir {
        #[command(flatten)]
        case: CaseArg,
        #[arg(long)]
        rep: String,
        /// g or k
        #[arg(long, default_value = "g")]
        sub: String,
    },
    /// The partial Casimir over p2 on the fixed vectors of h.
    TrickyTerm {
        #[command(flatten)]
        case: CaseArg,
        #[arg(long)]
        rep: String,
    },
    /// Eigenvalue contributions at a metric (default: the symmetric one).
    Eigenvalues {
        #[command(flatten)]
        case: CaseArg,
        #[command(flatten)]
        metric: MetricArg,
    },
    /// Branching tables with Weyl-dimension audits.
    Branching {
        #[command(flatten)]
        case: CaseArg,
    },
    /// Certify spectral uniqueness of the symmetric metric.
    Certify {
        #[command(flatten)]
        case: CaseArg,
        /// Replace the volume of the symmetric metric by this value.
        #[arg(long)]
        volume: Option<String>,
    },
    /// ν-stability verdicts for the tabulated Einstein metrics.
    Einstein {
        #[command(flatten)]
        case: CaseArg,
    },
    /// Matrices of a basis: so(7) by default, or a piece of a case.
    DumpBasis {
        #[arg(long)]
        case: Option<Case>,
        /// g, k, h, p1, p2 or p3 (requires --case)
        #[arg(long, requires = "case")]
        piece: Option<String>,
    },
    /// Labels, weights, images and invariant form of a module.
    DumpRep {
        #[arg(long)]
        rep: String,
    },
    /// Run the acceptance suite.
    Selftest {
        /// Run a single criterion.
        #[arg(long)]
        criterion: Option<u32>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::VerifyChevalley => "verify-chevalley",
            Command::VerifyReps => "verify-reps",
            Command::Invariants { .. } => "invariants",
            Command::Casimir { .. } => "casimir",
            Command::TrickyTerm { .. } => "tricky-term",
            Command::Eigenvalues { .. } => "eigenvalues",
            Command::Branching { .. } => "branching",
            Command::Certify { .. } => "certify",
            Command::Einstein { .. } => "einstein",
            Command::DumpBasis { .. } => "dump-basis",
            Command::DumpRep { .. } => "dump-rep",
            Command::Selftest { .. } => "selftest",
        }
    }
}

fn run(cmd: &Command) -> Result<Outcome, Error> {
    let model = liespec_core::model()?;
    match cmd {
        Command::VerifyChevalley => commands::verify_chevalley(model),
        Command::VerifyReps => commands::verify_reps(model),
        Command::Invariants { case, rep, sub } => commands::invariants(model, case.case, rep, sub),
        Command::Casimir { case, rep, sub } => commands::casimir(model, case.case, rep, sub),
        Command::TrickyTerm { case, rep } => commands::tricky_term(model, case.case, rep),
        Command::Eigenvalues { case, metric } => commands::eigenvalues(
            model,
            case.case,
            metric.s.as_deref(),
            metric.radii.as_deref(),
        ),
        Command::Branching { case } => commands::branching(case.case),
        Command::Certify { case, volume } => commands::certify(model, case.case, volume.as_deref()),
        Command::Einstein { case } => commands::einstein(model, case.case),
        Command::DumpBasis { case, piece } => commands::dump_basis(model, *case, piece.as_deref()),
        Command::DumpRep { rep } => commands::dump_rep(model, rep),
        Command::Selftest { criterion } => commands::selftest(model, *criterion),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let name = cli.command.name();
    match run(&cli.command) {
        Ok(outcome) => {
            let elapsed = start.elapsed();
            if cli.json {
                let envelope = json!({
                    "schema": 1,
                    "command": name,
                    "case": outcome.case.map(|c| c.name()),
                    "status": if outcome.passed { "pass" } else { "fail" },
                    "payload": outcome.payload,
                    "timing": { "elapsed_ms": elapsed.as_millis() as u64 },
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&envelope).expect("serializable")
                );
            } else {
                print!("{}", outcome.text);
                if !outcome.text.ends_with('\n') {
                    println!();
                }
            }
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let usage = matches!(e, Error::Parse(_) | Error::Invalid(_));
            if cli.json {
                let envelope = json!({
                    "schema": 1,
                    "command": name,
                    "case": null,
                    "status": "fail",
                    "payload": { "error": e.to_string() },
                    "timing": { "elapsed_ms": start.elapsed().as_millis() as u64 },
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&envelope).expect("serializable")
                );
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(if usage { 2 } else { 1 })
        }
    }
}
