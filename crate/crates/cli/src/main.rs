use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use neumaier_cli::commands::{self, CountMethodArg, GoldenSource, RingArg};
use neumaier_cli::{CliError, CliResult, Format, EXIT_INPUT};

#[derive(Parser)]
#[command(name = "neumaier", version, about = "Strictly Neumaier graphs: feasibility, construction and prime searches")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, env = "NEUMAIER_THREADS", default_value_t = 0)]
    threads: usize,
    /// Seed for sampling modes.
    #[arg(long, global = true, default_value_t = 20240601)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate feasible strictly Neumaier parameter sets.
    Feasible {
        #[arg(long)]
        max_v: u64,
        /// Golden table to diff against: a path, or `builtin`.
        #[arg(long)]
        golden: Option<GoldenSource>,
    },
    /// Count |S ∩ (S+1)| for one spec, or for a random sample with --sample.
    Count {
        #[arg(long, required_unless_present = "sample")]
        p: Option<u64>,
        #[arg(long, required_unless_present = "sample")]
        q: Option<u64>,
        #[arg(long, required_unless_present = "sample")]
        a: Option<u64>,
        #[arg(long, value_enum, default_value_t = CountMethodArg::All)]
        method: CountMethodArg,
        /// Number of random (p, q, a) to draw instead of a single spec.
        #[arg(long)]
        sample: Option<usize>,
        /// Values of q to sample from.
        #[arg(long, value_delimiter = ',', default_value = "5,7,13,17,19,25,37")]
        qs: Vec<u64>,
        /// Largest p to sample.
        #[arg(long, default_value_t = 2000)]
        max_p: u64,
    },
    /// Build the fused graph for (q, p, a) and check it.
    Construct {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        a: u64,
        /// Gluing permutation of the spread blocks, one per extra copy.
        #[arg(long = "perm")]
        perms: Vec<String>,
        /// Write the graph to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Skip verification.
        #[arg(long)]
        no_verify: bool,
    },
    /// Check a graph file against claimed parameters and a witness clique.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        /// v,k,lambda,e,s
        #[arg(long)]
        params: String,
        /// Comma separated vertices of the regular clique.
        #[arg(long)]
        witness: String,
    },
    /// Find all (p, a) with p ≤ max-p giving |S ∩ (S+1)| ≡ −2 (mod q).
    Search {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        max_p: u64,
        /// Also build and verify each graph with at most this many vertices.
        #[arg(long)]
        verify_graphs: Option<u64>,
        /// Golden table to diff against: a path, or `builtin`.
        #[arg(long)]
        golden: Option<GoldenSource>,
    },
    /// Scan a residue class of Gaussian or Eisenstein integers for primes.
    Scan {
        #[arg(long, value_enum)]
        ring: RingArg,
        /// Residue class "c+d".
        #[arg(long, allow_hyphen_values = true)]
        class: String,
        #[arg(long = "mod")]
        modulus: u64,
        #[arg(long)]
        max_norm: u64,
        /// Assemble (p, a) for this q from every hit.
        #[arg(long)]
        assemble: Option<u64>,
    },
    /// Solve the Eisenstein conic modulo 12q.
    Conic {
        #[arg(long)]
        q: u64,
        /// Also check a given point "z1,z2".
        #[arg(long, allow_hyphen_values = true)]
        check: Option<String>,
    },
}

fn run(cli: Cli, out: &mut dyn Write) -> CliResult<i32> {
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    }
    let f = cli.format;
    match cli.command {
        Command::Feasible { max_v, golden } => commands::feasible(out, f, max_v, golden.as_ref()),
        Command::Count { p, q, a, method, sample, qs, max_p } => {
            let specs = match sample {
                Some(n) => commands::sampled_specs(cli.seed, n, &qs, max_p)?,
                None => vec![(p.unwrap(), q.unwrap(), a.unwrap())],
            };
            commands::count(out, f, &specs, method)
        }
        Command::Construct { q, p, a, perms, out: path, no_verify } => {
            commands::construct(out, f, (q, p, a), &perms, path.as_deref(), !no_verify)
        }
        Command::Verify { graph, params, witness } => commands::verify(out, f, &graph, &params, &witness),
        Command::Search { q, max_p, verify_graphs, golden } => {
            commands::search(out, f, q, max_p, verify_graphs, golden.as_ref())
        }
        Command::Scan { ring, class, modulus, max_norm, assemble } => {
            commands::scan(out, f, ring, &class, modulus, max_norm, assemble)
        }
        Command::Conic { q, check } => {
            let point = check.as_deref().map(commands::parse_point).transpose()?;
            commands::conic(out, f, q, point)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT as u8 } else { 0 });
        }
    };
    let start = Instant::now();
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let code = match run(cli, &mut out).and_then(|c| out.flush().map(|_| c).map_err(CliError::from)) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    ExitCode::from(code as u8)
}
