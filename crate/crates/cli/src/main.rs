use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sortsubst::enumerate::EnumConfig;
use sortsubst_cli::commands::{cmd_bench, cmd_check, cmd_eq, cmd_laws, cmd_norm, LawsOptions, Outcome};

/// Sort-factored substitution for the simply typed λ-calculus.
///
/// Any term argument given as `-` is read from standard input.
#[derive(Parser)]
#[command(name = "sortsubst", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Infer the type of a term.
    Check {
        #[arg(long)]
        ctx: String,
        #[arg(long)]
        term: String,
        /// Read the term in the explicit-substitution syntax.
        #[arg(long)]
        explicit: bool,
    },
    /// Normalize an explicit-substitution term.
    Norm {
        #[arg(long)]
        ctx: String,
        #[arg(long)]
        term: String,
    },
    /// Decide equality of two explicit terms (exit 0 equal, 2 distinct).
    Eq {
        #[arg(long)]
        ctx: String,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Check every registered law exhaustively.
    Laws(LawsArgs),
    /// Time the factored engine against the naive one.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "10,100,1000")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct LawsArgs {
    #[arg(long)]
    max_type_depth: Option<usize>,
    #[arg(long)]
    max_ctx_len: Option<usize>,
    #[arg(long)]
    max_expr_size: Option<usize>,
    #[arg(long)]
    max_sub_entry_size: Option<usize>,
    #[arg(long)]
    max_itm_size: Option<usize>,
    /// Context length bound for laws over two or more substitutions.
    #[arg(long)]
    max_chain_ctx_len: Option<usize>,
    /// Run only the named law (repeatable).
    #[arg(long = "law")]
    only: Vec<String>,
    #[arg(long)]
    json: bool,
    /// Include per-law wall times (makes output nondeterministic).
    #[arg(long)]
    timings: bool,
    /// Also check this many seeded random instances of larger size.
    #[arg(long, default_value_t = 0)]
    random: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn stdin_if_dash(arg: String) -> Result<String, String> {
    if arg != "-" {
        return Ok(arg);
    }
    let mut buf = String::new();
    std::io::stdin().read_to_string(&mut buf).map_err(|e| format!("reading standard input: {e}"))?;
    Ok(buf.trim_end().to_string())
}

fn run(cli: Cli) -> Result<Outcome, String> {
    Ok(match cli.command {
        Command::Check { ctx, term, explicit } => cmd_check(&ctx, &stdin_if_dash(term)?, explicit),
        Command::Norm { ctx, term } => cmd_norm(&ctx, &stdin_if_dash(term)?),
        Command::Eq { ctx, lhs, rhs } => {
            if lhs == "-" && rhs == "-" {
                return Err("only one of --lhs and --rhs can be read from standard input".into());
            }
            cmd_eq(&ctx, &stdin_if_dash(lhs)?, &stdin_if_dash(rhs)?)
        }
        Command::Laws(a) => {
            let mut bounds = EnumConfig::default();
            let set = |slot: &mut usize, v: Option<usize>| {
                if let Some(v) = v {
                    *slot = v;
                }
            };
            set(&mut bounds.max_type_depth, a.max_type_depth);
            set(&mut bounds.max_ctx_len, a.max_ctx_len);
            set(&mut bounds.max_expr_size, a.max_expr_size);
            set(&mut bounds.max_sub_entry_size, a.max_sub_entry_size);
            set(&mut bounds.max_itm_size, a.max_itm_size);
            set(&mut bounds.max_chain_ctx_len, a.max_chain_ctx_len);
            cmd_laws(&LawsOptions {
                bounds,
                only: a.only,
                json: a.json,
                timings: a.timings,
                random: a.random,
                seed: a.seed,
            })
        }
        Command::Bench { sizes, seed, json } => cmd_bench(&sizes, seed, json),
    })
}

fn main() -> ExitCode {
    let outcome = run(Cli::parse()).unwrap_or_else(|e| Outcome {
        code: 1,
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    });
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.code as u8)
}
