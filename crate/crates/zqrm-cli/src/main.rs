//! Command-line front end: construct, inspect, convert, and verify
//! Z2Z4-additive Reed-Muller codes.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 enumeration cap exceeded.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use zqrm::analysis::{min_lee_distance, verify_arm};
use zqrm::arm::{predicted_params, ArmBuilder};
use zqrm::code::AdditiveCode;
use zqrm::textio;
use zqrm::{gray_vector, BinaryCodeSet, Error, DEFAULT_CAP_LOG2};

#[derive(Parser)]
#[command(name = "zqrm", version, about = "Z2Z4-additive Reed-Muller code tool")]
struct Cli {
    /// log2 bound on enumeration sizes
    #[arg(long, global = true, env = "ZQRM_CAP_LOG2")]
    cap: Option<u32>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct IndexArgs {
    /// family index, 0 <= s <= floor(m/2)
    #[arg(short)]
    s: usize,
    /// order, -1 <= r <= m
    #[arg(short, allow_hyphen_values = true)]
    r: i32,
    /// length exponent, n = 2^m
    #[arg(short)]
    m: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write the generator matrix of ARM_s(r, m) and print its parameters
    Construct {
        #[command(flatten)]
        index: IndexArgs,
        /// use the BA-Plotkin route to family 1 at m = 3
        #[arg(long)]
        via_ba: bool,
        /// output file (stdout when omitted)
        #[arg(short)]
        out: Option<PathBuf>,
    },
    /// Print the predicted parameters without constructing the code
    Params {
        #[command(flatten)]
        index: IndexArgs,
    },
    /// Minimum Lee distance of the code spanned by a matrix file
    Mindist { file: PathBuf },
    /// List every codeword of the code spanned by a matrix file
    Enumerate {
        file: PathBuf,
        /// output file (stdout when omitted)
        #[arg(short)]
        out: Option<PathBuf>,
    },
    /// Apply the Gray map to every codeword in a codeword file
    Gray {
        file: PathBuf,
        /// output file (stdout when omitted)
        #[arg(short)]
        out: Option<PathBuf>,
    },
    /// Check every claim about ARM_s(r, m); exits 1 on any failed claim
    Verify {
        #[command(flatten)]
        index: IndexArgs,
    },
    /// Predicted and measured parameters of every family at one m
    Table {
        #[arg(short)]
        m: usize,
    },
}

enum CliError {
    Lib(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(Error::TooLarge { .. }) => 3,
            _ => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Lib(e) => e.to_string(),
            CliError::Io(m) => m.clone(),
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {}", path.display(), e)))
}

fn write_output(out: Option<&PathBuf>, text: &str, note: Option<String>) -> Result<(), CliError> {
    match out {
        Some(path) => {
            fs::write(path, text)
                .map_err(|e| CliError::Io(format!("{}: {}", path.display(), e)))?;
            if let Some(note) = note {
                println!("{}", note);
            }
        }
        None => {
            print!("{}", text);
            if let Some(note) = note {
                eprintln!("{}", note);
            }
        }
    }
    Ok(())
}

fn run(cmd: Cmd, cap: u32) -> Result<u8, CliError> {
    let builder = ArmBuilder::new();
    match cmd {
        Cmd::Construct { index, via_ba, out } => {
            let IndexArgs { s, r, m } = index;
            let code = if via_ba {
                builder.code_via_ba(s, r, m)?
            } else {
                builder.code(s, r, m)?
            };
            let p = predicted_params(s, r, m)?;
            let note = format!(
                "type={} n={} k={} d_claimed={}",
                p.ctype,
                p.ctype.n(),
                p.k,
                p.d
            );
            write_output(out.as_ref(), &textio::write_matrix(code.generator()), Some(note))?;
            Ok(0)
        }
        Cmd::Params { index } => {
            let IndexArgs { s, r, m } = index;
            let p = predicted_params(s, r, m)?;
            println!("type={} n={} k={} d={}", p.ctype, p.ctype.n(), p.k, p.d);
            Ok(0)
        }
        Cmd::Mindist { file } => {
            let gen = textio::parse_matrix(&read_file(&file)?)?;
            let code = AdditiveCode::new(gen);
            println!("{}", min_lee_distance(&code, cap)?);
            Ok(0)
        }
        Cmd::Enumerate { file, out } => {
            let gen = textio::parse_matrix(&read_file(&file)?)?;
            let code = AdditiveCode::new(gen);
            let words = code.codewords(cap)?;
            let text = textio::write_codewords(code.alpha(), code.beta(), &words);
            write_output(out.as_ref(), &text, None)?;
            Ok(0)
        }
        Cmd::Gray { file, out } => {
            let (alpha, beta, words) = textio::parse_codewords(&read_file(&file)?)?;
            let images: Vec<_> = words.iter().map(gray_vector).collect();
            let set = BinaryCodeSet::from_vectors(alpha + 2 * beta, images)?;
            write_output(out.as_ref(), &textio::write_binary_set(&set), None)?;
            Ok(0)
        }
        Cmd::Verify { index } => {
            let IndexArgs { s, r, m } = index;
            let report = verify_arm(&builder, s, r, m, cap)?;
            print!("{}", report.render());
            Ok(if report.passed() { 0 } else { 1 })
        }
        Cmd::Table { m } => {
            if m < 1 {
                return Err(CliError::Lib(Error::NoSuchFamily { s: 0, m }));
            }
            println!("s\tr\ttype\tn\tk\td_claimed\td_measured");
            for s in 0..=m / 2 {
                for r in -1..=(m as i32) {
                    let p = predicted_params(s, r, m)?;
                    let code = builder.code(s, r, m)?;
                    let measured = if code.size_log2() <= cap {
                        min_lee_distance(&code, cap)?.to_string()
                    } else {
                        String::new()
                    };
                    println!(
                        "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                        s,
                        r,
                        p.ctype,
                        p.ctype.n(),
                        p.k,
                        p.d,
                        measured
                    );
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let cap = cli.cap.unwrap_or(DEFAULT_CAP_LOG2);
    match run(cli.cmd, cap) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
