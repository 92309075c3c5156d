use clap::{Parser, Subcommand, ValueEnum};
use cozero::terms::Class;
use cozero_cli::{cmd_check, cmd_element, cmd_verify_examples, Format, Options, DEFAULT_BUDGET};

/// Decide membership of lattice-ordered groups of continuous functions in
/// the classes Y, CR, M, HA and Proj.
#[derive(Parser, Debug)]
#[command(name = "cozero", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Number of enumerated elements per presentation.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: usize,

    /// Shuffle seed for enumeration; 0 keeps the canonical order.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Include wall-clock times (reports are then not reproducible).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check every example group against its expected verdicts.
    VerifyPaper,
    /// Class verdicts for a builtin presentation or a JSON presentation file.
    Check {
        presentation: String,
        /// Restrict to a class (repeatable): Y, CR, M, HA, Proj.
        #[arg(long = "class", value_parser = parse_class)]
        classes: Vec<Class>,
    },
    /// Evaluate a predicate on terms, e.g. `element ex_5_2_1 in-principal 1 v`.
    #[command(allow_negative_numbers = true)]
    Element {
        presentation: String,
        predicate: String,
        /// Terms; put them after `--` when one starts with `-`, e.g. `-- -v`.
        terms: Vec<String>,
    },
}

fn parse_class(s: &str) -> Result<Class, String> {
    s.parse().map_err(|e: cozero::terms::classes::UnknownClass| e.to_string())
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let mut opts = Options {
        budget: cli.budget,
        seed: cli.seed,
        format: match cli.format {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        },
        classes: Vec::new(),
        timings: cli.timings,
    };
    let outcome = match &cli.command {
        Command::VerifyPaper => cmd_verify_examples(&opts),
        Command::Check { presentation, classes } => {
            opts.classes = classes.clone();
            cmd_check(presentation, &opts)
        }
        Command::Element {
            presentation,
            predicate,
            terms,
        } => cmd_element(presentation, predicate, terms, &opts),
    };
    if outcome.code == 2 {
        eprint!("{}", outcome.output);
    } else {
        print!("{}", outcome.output);
    }
    std::process::exit(outcome.code);
}
