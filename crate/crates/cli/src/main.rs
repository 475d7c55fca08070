//! `gsdecode`: encode, decode and run trial campaigns from the command line.
//!
//! Exit status is 0 on success, 1 when decoding fails and 2 on invalid input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gsdecode::algebra::Fe;
use gsdecode::code::{CodeSpec, LinearCode};
use gsdecode::pipeline::{amd_assisted_decode, amd_assisted_encode, amd_assisted_encode_with_seed, PipelineOutcome};
use gsdecode::specfile::{format_symbols, parse_spec, parse_symbols, Loaded};
use gsdecode::testkit::{self, TrialConfig, TrialConfigFile};
use gsdecode::twisted::UniqueOutcome;

/// Overrides the exhaustive-enumeration cap of the `oracle` commands.
const ENUM_CAP_VAR: &str = "GSDECODE_ENUM_CAP";

#[derive(Parser)]
#[command(
    name = "gsdecode",
    version,
    about = "List, unique and AMD-assisted decoding of TGRS and Roth-Lempel codes"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encode a message; with an AMD spec the message is tagged first.
    Encode {
        #[arg(long)]
        spec: PathBuf,
        /// Comma-separated decimal symbols, or @FILE.
        #[arg(long)]
        message: String,
        /// AMD seed as an element index of GF(q^b); random when omitted.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Decode a received word.
    Decode {
        #[arg(long)]
        spec: PathBuf,
        /// Comma-separated decimal symbols, or @FILE.
        #[arg(long)]
        received: String,
        /// Decoding radius; defaults to the largest feasible one for list
        /// and AMD decoding, and to unique decoding for bare codes.
        #[arg(long)]
        tau: Option<usize>,
        /// Print every candidate with its distance instead of a single message.
        #[arg(long)]
        list: bool,
    },
    /// Run a Monte-Carlo campaign and write CSV.
    Trials {
        #[arg(long)]
        config: PathBuf,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay one of the built-in worked examples.
    PaperExample {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
    },
    /// Exhaustive code properties.
    Oracle {
        #[command(subcommand)]
        what: OracleCmd,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    MinDistance {
        #[arg(long)]
        spec: PathBuf,
    },
    Classify {
        #[arg(long)]
        spec: PathBuf,
    },
}

enum Fail {
    Decode,
    Invalid(String),
}

impl From<gsdecode::Error> for Fail {
    fn from(e: gsdecode::Error) -> Self {
        Fail::Invalid(e.to_string())
    }
}

type CliResult = Result<(), Fail>;

fn read(path: &Path) -> Result<String, Fail> {
    std::fs::read_to_string(path).map_err(|e| Fail::Invalid(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Loaded, Fail> {
    Ok(parse_spec(&read(path)?)?)
}

fn symbols(arg: &str, loaded: &Loaded) -> Result<Vec<Fe>, Fail> {
    let text = match arg.strip_prefix('@') {
        Some(path) => read(Path::new(path))?,
        None => arg.to_string(),
    };
    Ok(parse_symbols(&text, loaded.field())?)
}

fn encode(spec: &Path, message: &str, seed: Option<u64>) -> CliResult {
    let loaded = load(spec)?;
    let m = symbols(message, &loaded)?;
    let cw = match &loaded {
        Loaded::Codec(codec) => match seed {
            Some(x) => amd_assisted_encode_with_seed(codec, &m, codec.amd().ext().element(x)?)?,
            None => amd_assisted_encode(codec, &m, &mut rand::thread_rng())?,
        },
        Loaded::Code(code) => {
            if seed.is_some() {
                return Err(Fail::Invalid(
                    "--seed only applies to specs with an \"amd\" section".into(),
                ));
            }
            code.encode(&m)?
        }
    };
    println!("{}", format_symbols(&cw));
    Ok(())
}

fn default_tau(code: &CodeSpec) -> Result<usize, Fail> {
    code.max_tau()
        .ok_or_else(|| Fail::Invalid("no radius is feasible for this code".into()))
}

fn decode(spec: &Path, received: &str, tau: Option<usize>, list: bool) -> CliResult {
    let loaded = load(spec)?;
    let r = symbols(received, &loaded)?;
    match &loaded {
        Loaded::Codec(codec) => {
            let tau = match tau {
                Some(t) => t,
                None => default_tau(codec.outer())?,
            };
            let report = amd_assisted_decode(codec, &r, tau)?;
            if list {
                for v in &report.verdicts {
                    let amd = if v.accepted { "accept" } else { "reject" };
                    println!("{} distance={} amd={amd}", format_symbols(&v.augmented), v.distance);
                }
                return if report.verdicts.is_empty() {
                    Err(Fail::Decode)
                } else {
                    Ok(())
                };
            }
            match report.outcome {
                PipelineOutcome::Decoded { message } => println!("{}", format_symbols(&message)),
                PipelineOutcome::NoValidCandidate => {
                    println!("FAIL");
                    eprintln!(
                        "no candidate passed AMD verification ({} in the list)",
                        report.list.len()
                    );
                    return Err(Fail::Decode);
                }
                PipelineOutcome::Ambiguous { messages } => {
                    println!("FAIL");
                    eprintln!("{} candidates passed AMD verification", messages.len());
                    return Err(Fail::Decode);
                }
            }
        }
        Loaded::Code(code) => {
            if list {
                let tau = match tau {
                    Some(t) => t,
                    None => default_tau(code)?,
                };
                let out = code.list_decode(&r, tau)?;
                for c in &out.candidates {
                    println!("{} distance={}", format_symbols(&c.message), c.distance);
                }
                return if out.is_empty() { Err(Fail::Decode) } else { Ok(()) };
            }
            let outcome = match tau {
                Some(t) => {
                    let out = code.list_decode(&r, t)?;
                    match out.candidates.len() {
                        0 => UniqueOutcome::Failure,
                        1 => UniqueOutcome::Decoded(out.candidates[0].message.clone()),
                        _ => UniqueOutcome::NotMdsEvidence(out.candidates),
                    }
                }
                None => code.unique_decode(&r)?,
            };
            match outcome {
                UniqueOutcome::Decoded(m) => println!("{}", format_symbols(&m)),
                UniqueOutcome::Failure => {
                    println!("FAIL");
                    eprintln!("no codeword within the decoding radius");
                    return Err(Fail::Decode);
                }
                UniqueOutcome::NotMdsEvidence(c) => {
                    println!("FAIL");
                    eprintln!("{} codewords within the decoding radius", c.len());
                    return Err(Fail::Decode);
                }
            }
        }
    }
    Ok(())
}

fn trials(config: &Path, out: Option<&Path>) -> CliResult {
    let file: TrialConfigFile =
        serde_json::from_str(&read(config)?).map_err(|e| Fail::Invalid(format!("{}: {e}", config.display())))?;
    let loaded = match &file.spec {
        serde_json::Value::String(rel) => {
            let dir = config.parent().unwrap_or(Path::new("."));
            load(&dir.join(rel))?
        }
        inline => parse_spec(&inline.to_string())?,
    };
    let cfg = TrialConfig {
        target: loaded.into(),
        weights: file.weights,
        trials: file.trials,
        seed: file.seed,
        tau: file.tau,
        timing: file.timing,
    };
    let stats = testkit::run_trials(&cfg)?;
    match out {
        Some(path) => {
            let f = std::fs::File::create(path)
                .map_err(|e| Fail::Invalid(format!("cannot write {}: {e}", path.display())))?;
            stats.write_csv(f)?;
        }
        None => print!("{}", stats.to_csv()),
    }
    Ok(())
}

fn enum_cap() -> Result<u64, Fail> {
    match std::env::var(ENUM_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Fail::Invalid(format!("{ENUM_CAP_VAR} must be an integer, got {v:?}"))),
        Err(_) => Ok(testkit::DEFAULT_ENUM_CAP),
    }
}

fn oracle(what: &OracleCmd) -> CliResult {
    let cap = enum_cap()?;
    match what {
        OracleCmd::MinDistance { spec } => {
            let loaded = load(spec)?;
            println!("{}", testkit::min_distance(loaded.code(), cap)?);
        }
        OracleCmd::Classify { spec } => {
            let loaded = load(spec)?;
            let code = loaded.code();
            let class = testkit::classify(code, cap)?;
            println!("n = {}, k = {}: {class}", code.length(), code.dimension());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Command::Encode { spec, message, seed } => encode(spec, message, *seed),
        Command::Decode {
            spec,
            received,
            tau,
            list,
        } => decode(spec, received, *tau, *list),
        Command::Trials { config, out } => trials(config, out.as_deref()),
        Command::PaperExample { which } => match gsdecode::fixtures::transcript(*which) {
            Ok(t) => {
                print!("{t}");
                Ok(())
            }
            Err(e) => Err(e.into()),
        },
        Command::Oracle { what } => oracle(what),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Decode) => ExitCode::from(1),
        Err(Fail::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
