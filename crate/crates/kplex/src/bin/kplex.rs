use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use kplex::ingest::{self, IngestError};
use kplex::scheduler::{run, ConfigError, RunConfig};
use kplex::sink::{LineWriterSink, NullSink};

/// Lists all maximal k-plexes of an undirected graph, one per output line
/// as space-separated vertex labels.
#[derive(Parser)]
#[command(name = "kplex", version)]
struct Cli {
    /// Edge list file: one `u v` pair per line; `#` and `%` start comments.
    input: PathBuf,

    /// Non-adjacency budget: each member may miss up to k members of the
    /// plex, itself included. 1 lists maximal cliques.
    #[arg(short)]
    k: u32,

    /// Report only plexes with at least this many vertices. 0 reports every
    /// maximal k-plex; any other value must be at least 2k - 1.
    #[arg(short = 'l', long = "min-size", default_value_t = 0)]
    min_size: u32,

    /// Worker threads; 0 uses every available core.
    #[arg(short, long, default_value_t = 0)]
    threads: usize,

    /// Candidate count above which a branch may move to an idle thread.
    #[arg(long, default_value_t = 10)]
    split_threshold: usize,

    /// Keep seed subgraphs unpruned (diagnostic).
    #[arg(long)]
    no_prune_seeds: bool,

    /// Keep all seed pairs (diagnostic).
    #[arg(long)]
    no_prune_pairs: bool,

    /// Count plexes without writing them.
    #[arg(long)]
    count_only: bool,

    /// Sort output lines bytewise before writing; buffers all output.
    #[arg(long)]
    sorted: bool,

    /// Write plexes here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

enum CliError {
    Ingest(IngestError),
    Config(ConfigError),
    Output(io::Error),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run_cli(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Config(e)) => {
            eprintln!("kplex: {e}");
            ExitCode::from(3)
        }
        Err(CliError::Ingest(e)) => {
            eprintln!("kplex: {e}");
            ExitCode::from(2)
        }
        Err(CliError::Output(e)) => {
            eprintln!("kplex: {e}");
            ExitCode::from(2)
        }
    }
}

fn run_cli(cli: Cli) -> Result<(), CliError> {
    let mut config = RunConfig::new(cli.k);
    config.min_size = cli.min_size;
    config.threads = cli.threads;
    config.split_threshold = cli.split_threshold;
    config.prune_seeds = !cli.no_prune_seeds;
    config.prune_pairs = !cli.no_prune_pairs;
    config.count_only = cli.count_only;
    config.validate().map_err(CliError::Config)?;

    let start = Instant::now();
    let g = ingest::load(&cli.input).map_err(CliError::Ingest)?;

    let summary = if cli.count_only {
        run(&g, &config, &NullSink).map_err(CliError::Config)?
    } else {
        let shards = if config.threads == 0 {
            std::thread::available_parallelism().map_or(1, |n| n.get())
        } else {
            config.threads
        };
        let out: Box<dyn Write + Send> = match &cli.output {
            Some(path) => Box::new(BufWriter::new(
                File::create(path).map_err(CliError::Output)?,
            )),
            None => Box::new(BufWriter::new(io::stdout())),
        };
        let sink = LineWriterSink::new(&g, out, shards, cli.sorted);
        let summary = run(&g, &config, &sink).map_err(CliError::Config)?;
        sink.finish().map_err(CliError::Output)?;
        summary
    };

    eprintln!(
        "plexes={} max_size={} elapsed_ms={}",
        summary.plexes,
        summary.max_size,
        start.elapsed().as_millis()
    );
    Ok(())
}
