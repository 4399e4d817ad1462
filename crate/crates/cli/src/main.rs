//! `modlie`: run the verification pipeline from the command line.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage
//! or configuration errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use modlie::pipeline::{
    dump_structure_constants, ermolaev_summary, grade_table, verify_ermolaev_standalone,
    verify_theorem, CertificateReport, PipelineError, VerificationConfig,
};
use modlie::rootdata::SIGN_CONVENTION;

#[derive(Parser)]
#[command(
    name = "modlie",
    version,
    about = "Exact verification of modular Lie algebra computations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Produce a certificate report.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Summarize an Ermolaev algebra.
    Ermolaev {
        #[arg(long, value_parser = parse_pair)]
        n: (u32, u32),
        #[arg(long, default_value_t = 3)]
        p: u32,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        alpha: i64,
        #[command(flatten)]
        out: Output,
    },
    /// Print graded dimensions under a cocharacter.
    Grade {
        #[arg(long = "type", default_value = "F4")]
        type_label: String,
        #[arg(long, default_value_t = 3)]
        p: u32,
        /// Weights on the simple roots, e.g. 2,2,0,2.
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        cocharacter: Vec<i64>,
        /// Comma-separated generators, e.g. e1000+e0100+e0001+e0120,f1232.
        #[arg(long)]
        subalgebra: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Print the structure constants as `i j k c` lines.
    DumpStructureConstants {
        #[arg(long = "type", default_value = "F4")]
        type_label: String,
        #[arg(long, default_value_t = 3)]
        p: u32,
    },
}

#[derive(Subcommand)]
enum VerifyTarget {
    /// The F4 subalgebra certificate.
    Theorem {
        #[arg(long, default_value_t = 3)]
        p: u32,
        #[arg(long = "type", default_value = "F4")]
        type_label: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = SIGN_CONVENTION)]
        sign_convention: String,
        /// Partner of e generating L.
        #[arg(long, default_value = "f1232")]
        f: String,
        #[command(flatten)]
        out: Output,
    },
    /// A certificate for Er(n1,n2) on its own.
    Ermolaev {
        #[arg(long, value_parser = parse_pair)]
        n: (u32, u32),
        #[arg(long, default_value_t = 3)]
        p: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_pair(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected N1,N2, got {s}"))?;
    let parse = |x: &str| x.trim().parse::<u32>().map_err(|e| format!("{x}: {e}"));
    Ok((parse(a)?, parse(b)?))
}

fn emit_report(report: &CertificateReport, format: Format) -> ExitCode {
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    if report.verdict {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn run(cli: Cli) -> Result<ExitCode, PipelineError> {
    match cli.command {
        Command::Verify { target } => match target {
            VerifyTarget::Theorem {
                p,
                type_label,
                seed,
                sign_convention,
                f,
                out,
            } => {
                let config = VerificationConfig {
                    p,
                    type_label,
                    sign_convention,
                    seed,
                    f_label: f,
                    ..VerificationConfig::default()
                };
                Ok(emit_report(&verify_theorem(&config)?, out.format))
            }
            VerifyTarget::Ermolaev { n, p, seed, out } => Ok(emit_report(
                &verify_ermolaev_standalone(n.0, n.1, p, seed)?,
                out.format,
            )),
        },
        Command::Ermolaev { n, p, alpha, out } => {
            let s = ermolaev_summary(n.0, n.1, p, alpha, 1)?;
            match out.format {
                Format::Text => print!("{}", s.to_text()),
                Format::Json => println!("{}", json(&s)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Grade {
            type_label,
            p,
            cocharacter,
            subalgebra,
            out,
        } => {
            let t = grade_table(&type_label, p, &cocharacter, subalgebra.as_deref())?;
            match out.format {
                Format::Text => print!("{}", t.to_text()),
                Format::Json => println!("{}", json(&t)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::DumpStructureConstants { type_label, p } => {
            print!("{}", dump_structure_constants(&type_label, p)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
