use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod grid;

#[derive(Parser)]
#[command(
    name = "tc-arr",
    version,
    about = "Topological complexity of generic hyperplane arrangement complements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Signature {
    /// Number of hyperplanes
    n: usize,
    /// Dimension of the ambient complex space
    r: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Print lower, upper and exact TC for one signature or a grid
    Tc {
        n: Option<usize>,
        r: Option<usize>,
        /// e.g. n=1..6,r=1..n
        #[arg(long, conflicts_with_all = ["n", "r"])]
        grid: Option<String>,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Build and check the nonzero zero-divisor product
    VerifyLowerBound {
        #[command(flatten)]
        sig: Signature,
        /// Comma-separated index set J in 1..=n-1
        #[arg(long = "set", value_delimiter = ',')]
        set: Option<Vec<usize>>,
        #[arg(long)]
        json: bool,
    },
    /// Plan one query and print sampled path points as JSON
    Plan {
        #[command(flatten)]
        sig: Signature,
        /// Start point as rational turns, e.g. 0,1/4
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        /// End point as rational turns
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        #[arg(long, default_value_t = tc_core::simulate::DEFAULT_STEPS)]
        steps: usize,
        /// Plan on S^1 x skeleton; the first listed turn is the circle coordinate
        #[arg(long)]
        product: bool,
    },
    /// Check planner invariants on random queries
    Simulate {
        #[command(flatten)]
        sig: Signature,
        #[arg(long, default_value_t = 1000)]
        queries: usize,
        #[arg(long, default_value_t = tc_core::simulate::DEFAULT_STEPS)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        product: bool,
        /// Largest denominator of sampled turns
        #[arg(long, default_value_t = tc_core::simulate::DEFAULT_DENOMINATOR_BOUND)]
        denominator: i64,
    },
    /// Search for the longest nonzero product of zero-divisors
    SearchZdcl {
        #[command(flatten)]
        sig: Signature,
        /// Also search products of all basis zero-divisors (small n only)
        #[arg(long)]
        brute: bool,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Tc {
            n,
            r,
            grid,
            json,
            csv,
        } => commands::tc(n, r, grid.as_deref(), json, csv),
        Command::VerifyLowerBound { sig, set, json } => {
            commands::verify_lower_bound(sig.n, sig.r, set.as_deref(), json)
        }
        Command::Plan {
            sig,
            from,
            to,
            steps,
            product,
        } => commands::plan(sig.n, sig.r, &from, &to, steps, product),
        Command::Simulate {
            sig,
            queries,
            steps,
            seed,
            product,
            denominator,
        } => commands::simulate(sig.n, sig.r, queries, steps, seed, product, denominator),
        Command::SearchZdcl { sig, brute, json } => {
            commands::search_zdcl(sig.n, sig.r, brute, json)
        }
    };
    match outcome {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    }
}
