use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Duration;

use anyhow::Context as _;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use frobreg::cli::{parse_taskfile, run_task, DiskCache, Format, RunOptions, CACHE_DIR_ENV};
use frobreg::groebner::cache::install_store;
use frobreg::{Error, ErrorKind};

#[derive(Parser)]
#[command(name = "frobreg", version, about = "Hilbert-Kunz multiplicities and Frobenius Tor lengths over F_p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a task file.
    Run {
        file: PathBuf,
        /// Override n_max.
        #[arg(long)]
        max_n: Option<u32>,
        /// Override the tolerance for limit criteria.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        /// Gröbner basis cache directory (default: $FROBREG_CACHE_DIR).
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long, conflicts_with = "cache")]
        no_cache: bool,
        /// Abort after this many seconds.
        #[arg(long)]
        timeout: Option<f64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Table,
}

fn exit_code(kind: ErrorKind) -> u8 {
    match kind {
        ErrorKind::Input => 2,
        ErrorKind::Timeout => 3,
        ErrorKind::Math => 4,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match cli.command {
        Command::Run { file, max_n, tol, format, cache, no_cache, timeout } => {
            let format = match format {
                OutputFormat::Json => Format::Json,
                OutputFormat::Table => Format::Table,
            };
            let cache_dir = if no_cache { None } else { cache.or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from)) };
            match run(&file, max_n, tol, format, cache_dir, timeout) {
                Ok(text) => {
                    print!("{text}");
                    ExitCode::SUCCESS
                }
                Err(err) => {
                    let (code, kind, message) = match err.downcast_ref::<Error>() {
                        Some(e) => (exit_code(e.kind()), format!("{:?}", e.kind()).to_lowercase(), format!("{err:#}")),
                        None => (2, "input".to_string(), format!("{err:#}")),
                    };
                    eprintln!("error: {message}");
                    if matches!(format, Format::Json) {
                        let doc = json!({ "error": { "kind": kind, "message": message } });
                        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                    }
                    ExitCode::from(code)
                }
            }
        }
    }
}

fn run(
    file: &PathBuf,
    max_n: Option<u32>,
    tol: Option<f64>,
    format: Format,
    cache_dir: Option<PathBuf>,
    timeout: Option<f64>,
) -> anyhow::Result<String> {
    let text = std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let spec = parse_taskfile(&text)?;
    if let Some(dir) = cache_dir {
        let cache = DiskCache::open(&dir).with_context(|| format!("opening cache {}", dir.display()))?;
        install_store(Some(Arc::new(cache)));
    }
    let timeout = match timeout {
        Some(t) if t.is_finite() && t > 0.0 => Some(Duration::from_secs_f64(t)),
        Some(t) => anyhow::bail!("--timeout must be a positive number of seconds, got {t}"),
        None => None,
    };
    let doc = run_task(&spec, &RunOptions { max_n, tol, timeout })?;
    Ok(doc.emit(format))
}
