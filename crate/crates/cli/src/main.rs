use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

/// Exact Clar numbers and extremal-fullerene constructions.
#[derive(Parser, Debug)]
#[command(name = "clarion", version, about)]
struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true, env = "CLARION_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Dot,
}

#[derive(clap::Args, Debug, Clone)]
pub struct Inputs {
    /// Spiral text or adjacency JSON files.
    #[arg(long = "input", short = 'i')]
    pub paths: Vec<PathBuf>,
    /// Bundled isomers by label, e.g. C70:1.
    #[arg(long = "named")]
    pub named: Vec<String>,
}

#[derive(clap::Args, Debug, Clone)]
pub struct Budget {
    /// Give up after exploring this many search nodes per instance.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_nodes: Option<u64>,
    /// Give up after this many seconds per instance.
    #[arg(long, value_parser = parse_seconds)]
    pub budget_seconds: Option<Duration>,
}

fn parse_seconds(s: &str) -> Result<Duration, String> {
    let secs: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if secs > 0.0 && secs.is_finite() {
        Ok(Duration::from_secs_f64(secs))
    } else {
        Err("budget must be positive".into())
    }
}

/// An inclusive vertex-count range such as `20..40` or `26`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Range {
    pub lo: usize,
    pub hi: usize,
}

fn parse_range(s: &str) -> Result<Range, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("`{t}` is not a vertex count"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(s)?, num(s)?),
    };
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(Range { lo, hi })
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve Clar numbers of the given fullerenes.
    Clar {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        budget: Budget,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Leave wall-clock times out so output is reproducible byte for byte.
        #[arg(long)]
        no_timing: bool,
    },
    /// Check the refined bound on every isomer in a range of orders.
    VerifyBound {
        #[arg(long, value_parser = parse_range)]
        range: Range,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Expansion, parent graph, diagonalizations and contractions for one
    /// fullerene.
    Pipeline {
        #[command(flatten)]
        inputs: Inputs,
        /// Directory for JSON and DOT artifacts.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Component-count solutions for a matching of 7, 8 or 10 edges.
    Solutions {
        #[arg(long, short = 'm')]
        edges: usize,
        /// Use the independently derived shape list instead of the
        /// published one (10 edges only).
        #[arg(long)]
        derived: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(commands::EXIT_PARSE);
        }
        // only fails when a pool already exists, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let result = match cli.command {
        Command::Clar { inputs, budget, format, no_timing } => commands::clar(&inputs, &budget, format, !no_timing),
        Command::VerifyBound { range, format } => commands::verify_bound(range, format),
        Command::Pipeline { inputs, out_dir, format } => commands::pipeline(&inputs, out_dir.as_deref(), format),
        Command::Solutions { edges, derived, format } => commands::solutions(edges, derived, format),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("20..40"), Ok(Range { lo: 20, hi: 40 }));
        assert_eq!(parse_range("20..=40"), Ok(Range { lo: 20, hi: 40 }));
        assert_eq!(parse_range("26"), Ok(Range { lo: 26, hi: 26 }));
        assert!(parse_range("40..20").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
