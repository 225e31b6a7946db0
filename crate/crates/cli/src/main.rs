mod config;
mod run;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::Parser;
use serde_json::json;

use config::{Command, ExperimentConfig};

/// Fixed-size spherical caps: freak heights, cap-transform eigenvalues,
/// counterexample sequences and their discrepancies.
#[derive(Debug, Parser)]
#[command(name = "capfreak", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output path: the CSV for `gen`.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Also write {config, timestamp, result} JSON to this path.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Leave the timestamp out of the --json envelope.
    #[arg(long = "no-timestamp", global = true)]
    no_timestamp: bool,
}

const EXIT_FAILED_CHECK: u8 = 1;
const EXIT_CONFIG: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = ExperimentConfig {
        command: cli.command,
        out: cli.out,
    };

    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(EXIT_CONFIG);
        }
        builder = builder.num_threads(t);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_CONFIG);
        }
    };

    let mut buffer: Vec<u8> = Vec::new();
    let output = match pool.install(|| run::run(&cfg, &mut buffer)) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_CONFIG);
        }
    };

    // `gen` without --out produced the CSV itself as output.
    let csv_on_stdout = matches!(cfg.command, Command::Gen(_)) && cfg.out.is_none();
    if !csv_on_stdout {
        let text = serde_json::to_string_pretty(&output.result).expect("serializable");
        buffer.extend_from_slice(text.as_bytes());
        buffer.push(b'\n');
    }
    if std::io::stdout().lock().write_all(&buffer).is_err() {
        return ExitCode::from(EXIT_CONFIG);
    }

    if let Some(path) = &cli.json {
        let mut envelope = json!({ "config": cfg, "result": output.result });
        if !cli.no_timestamp {
            let secs = SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0);
            envelope["timestamp"] = json!(secs);
        }
        let text = serde_json::to_string_pretty(&envelope).expect("serializable") + "\n";
        if let Err(e) = std::fs::write(path, text) {
            eprintln!("error: writing {}: {e}", path.display());
            return ExitCode::from(EXIT_CONFIG);
        }
    }

    match output.verified {
        Some(false) => ExitCode::from(EXIT_FAILED_CHECK),
        _ => ExitCode::SUCCESS,
    }
}
