mod error;
mod report;
mod selftest;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use tensorideal_core::EngineConfig;

use error::CliError;
use report::Params;

/// Ideal structure of tensor products of nearly simple algebras, computed
/// exactly on finitely representable models.
#[derive(Debug, Parser)]
#[command(name = "tensorideal", version)]
struct Cli {
    /// Seed for every randomized search; echoed into the report.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Matrix size of the truncated models used by `--oracle`.
    #[arg(long, global = true, default_value_t = 4)]
    truncation: usize,
    /// Largest polynomial degree factored over a number field.
    #[arg(long = "degree-bound", global = true, default_value_t = 8)]
    degree_bound: usize,
    /// Where to write the JSON report.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decompose K ⊗ L for two number fields given by minimal polynomials.
    Fields {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
    },
    /// The four field products deciding whether every ideal of A ⊗ B is admissible.
    Check {
        #[arg(long = "desc-a", alias = "descA")]
        desc_a: PathBuf,
        #[arg(long = "desc-b", alias = "descB")]
        desc_b: PathBuf,
    },
    /// The admissible ideal generated by a tensor.
    Classify {
        #[arg(long)]
        tensor: PathBuf,
        #[arg(long = "desc-a", alias = "descA")]
        desc_a: PathBuf,
        #[arg(long = "desc-b", alias = "descB")]
        desc_b: PathBuf,
        /// Also compute the closure of ⟨t⟩ in a truncated model.
        #[arg(long)]
        oracle: bool,
    },
    /// Zero-product witnesses for every product that is not a field.
    Witness {
        #[arg(long = "desc-a", alias = "descA")]
        desc_a: PathBuf,
        #[arg(long = "desc-b", alias = "descB")]
        desc_b: PathBuf,
    },
    /// A replayable certificate that ⟨t⟩ contains an elementary tensor 1 ⊗ b.
    Reduce {
        #[arg(long)]
        tensor: PathBuf,
        #[arg(long = "desc-a", alias = "descA")]
        desc_a: PathBuf,
        #[arg(long = "desc-b", alias = "descB")]
        desc_b: PathBuf,
        /// Also check the claim in a truncated model.
        #[arg(long)]
        oracle: bool,
    },
    /// Replay a certificate (bare, or a `reduce` report) against its inputs.
    Replay {
        #[arg(long)]
        cert: PathBuf,
        #[arg(long)]
        tensor: PathBuf,
        #[arg(long = "desc-a", alias = "descA")]
        desc_a: PathBuf,
        #[arg(long = "desc-b", alias = "descB")]
        desc_b: PathBuf,
    },
    /// Run the corpus of worked examples.
    Selftest {
        /// Directory of corpus files to run instead of the built-in corpus.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

struct Input {
    role: &'static str,
    path: String,
    sha256: String,
    json: Value,
}

fn io_err(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

fn load(role: &'static str, path: &Path) -> Result<Input, CliError> {
    let bytes = fs::read(path).map_err(|e| io_err(path, e))?;
    let json = serde_json::from_slice(&bytes)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    Ok(Input {
        role,
        path: path.display().to_string(),
        sha256: hex::encode(Sha256::digest(&bytes)),
        json,
    })
}

fn inputs_json(inputs: &[Input]) -> Value {
    inputs
        .iter()
        .map(|i| json!({ "role": i.role, "path": i.path, "sha256": i.sha256 }))
        .collect()
}

fn run(cli: &Cli) -> Result<(String, Value, bool), CliError> {
    let params = Params {
        seed: cli.seed,
        config: EngineConfig {
            degree_bound: cli.degree_bound,
            truncation: cli.truncation,
            ..EngineConfig::default()
        },
    };
    let p = &params;
    let (name, inputs, (summary, result), ok) = match &cli.command {
        Command::Fields { left, right } => {
            let ins = [load("left", left)?, load("right", right)?];
            let out = report::fields(&ins[0].json, &ins[1].json, p)?;
            ("fields", inputs_json(&ins), out, true)
        }
        Command::Check { desc_a, desc_b } => {
            let ins = [load("desc_a", desc_a)?, load("desc_b", desc_b)?];
            let out = report::check(&ins[0].json, &ins[1].json, p)?;
            ("check", inputs_json(&ins), out, true)
        }
        Command::Classify {
            tensor,
            desc_a,
            desc_b,
            oracle,
        } => {
            let ins = [load("desc_a", desc_a)?, load("desc_b", desc_b)?, load("tensor", tensor)?];
            let out = report::classify(&ins[0].json, &ins[1].json, &ins[2].json, *oracle, p)?;
            ("classify", inputs_json(&ins), out, true)
        }
        Command::Witness { desc_a, desc_b } => {
            let ins = [load("desc_a", desc_a)?, load("desc_b", desc_b)?];
            let out = report::witness(&ins[0].json, &ins[1].json, p)?;
            ("witness", inputs_json(&ins), out, true)
        }
        Command::Reduce {
            tensor,
            desc_a,
            desc_b,
            oracle,
        } => {
            let ins = [load("desc_a", desc_a)?, load("desc_b", desc_b)?, load("tensor", tensor)?];
            let out = report::reduce(&ins[0].json, &ins[1].json, &ins[2].json, *oracle, p)?;
            ("reduce", inputs_json(&ins), out, true)
        }
        Command::Replay {
            cert,
            tensor,
            desc_a,
            desc_b,
        } => {
            let ins = [
                load("desc_a", desc_a)?,
                load("desc_b", desc_b)?,
                load("tensor", tensor)?,
                load("cert", cert)?,
            ];
            let out = report::replay(&ins[0].json, &ins[1].json, &ins[2].json, &ins[2].sha256, &ins[3].json)?;
            ("replay", inputs_json(&ins), out, true)
        }
        Command::Selftest { corpus } => {
            let files: Vec<(String, String)> = match corpus {
                None => selftest::BUILTIN
                    .iter()
                    .map(|(n, t)| (n.to_string(), t.to_string()))
                    .collect(),
                Some(dir) => {
                    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
                        .map_err(|e| io_err(dir, e))?
                        .filter_map(|e| e.ok().map(|e| e.path()))
                        .filter(|p| p.extension().is_some_and(|x| x == "json"))
                        .collect();
                    paths.sort();
                    paths
                        .iter()
                        .map(|p| {
                            let name = p.file_stem().unwrap_or_default().to_string_lossy().into_owned();
                            fs::read_to_string(p).map(|t| (name, t)).map_err(|e| io_err(p, e))
                        })
                        .collect::<Result<_, _>>()?
                }
            };
            let mut lines = Vec::new();
            let mut items = Vec::new();
            let mut hashes = Vec::new();
            for (name, text) in &files {
                hashes.push(json!({ "role": "corpus", "path": name, "sha256": hex::encode(Sha256::digest(text)) }));
                for r in selftest::run_file(name, text, p)? {
                    let mark = if r.pass { "PASS" } else { "FAIL" };
                    lines.push(format!("[{mark}] {}/{}: {}", r.file, r.id, r.summary));
                    items.push((r.pass, r.json));
                }
            }
            let passed = items.iter().filter(|(ok, _)| *ok).count();
            let failed = items.len() - passed;
            lines.push(format!("{passed} passed, {failed} failed"));
            let result = json!({
                "passed": passed,
                "failed": failed,
                "items": items.into_iter().map(|(_, j)| j).collect::<Vec<_>>(),
            });
            let report = envelope("selftest", Value::Array(hashes), p, result);
            return Ok((lines.join("\n"), report, failed == 0));
        }
    };
    Ok((summary, envelope(name, inputs, p, result), ok))
}

fn envelope(command: &str, inputs: Value, p: &Params, result: Value) -> Value {
    json!({
        "command": command,
        "seed": p.seed,
        "truncation": p.config.truncation,
        "degree_bound": p.config.degree_bound,
        "inputs": inputs,
        "result": result,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((summary, report, ok)) => {
            println!("{summary}");
            if let Some(path) = &cli.out {
                let text = serde_json::to_string_pretty(&report).expect("reports serialize") + "\n";
                if let Err(e) = fs::write(path, text) {
                    let e = io_err(path, e);
                    eprintln!("error: {e}");
                    return ExitCode::from(e.exit_code());
                }
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
