//! JSON pipeline between 2×2 spin matrices and 4×4 Lorentz matrices.
//!
//! Exit codes: 0 on success, 1 on domain or validation failure, 2 on parse
//! or usage failure. Errors print one machine-parsable line to stderr and
//! nothing to stdout.

use std::io::Read;

use clap::{Parser, Subcommand};

use spincover_cli::commands::{
    self, parse_axis, parse_index, parse_tolerance, CliError, Generator, IndexChoice, Level,
    SignChoice,
};

#[derive(Parser)]
#[command(
    name = "spincover",
    version,
    about = "Convert, compose, apply, validate, and generate spin and Lorentz matrices as JSON documents"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Map a spin document to its Lorentz image.
    ToLorentz {
        /// Input document path, or - for stdin.
        #[arg(default_value = "-")]
        input: String,
        /// Determinant tolerance for accepting the input.
        #[arg(long, default_value_t = 1e-9, value_parser = parse_tolerance)]
        tol: f64,
        /// Indent the JSON output.
        #[arg(long)]
        pretty: bool,
    },
    /// Recover the spin preimage(s) of a Lorentz document.
    ToSpin {
        /// Input document path, or - for stdin.
        #[arg(default_value = "-")]
        input: String,
        /// Metric-orthogonality tolerance for accepting the input.
        #[arg(long, default_value_t = 1e-9, value_parser = parse_tolerance)]
        tol: f64,
        /// Recovery index: auto picks the largest weight.
        #[arg(long, default_value = "auto", value_parser = parse_index)]
        index: IndexChoice,
        /// Emit the canonical representative or both fiber points.
        #[arg(long, value_enum, default_value_t = SignChoice::Canonical)]
        sign: SignChoice,
        /// Indent the JSON output.
        #[arg(long)]
        pretty: bool,
    },
    /// Left-to-right product of two or more documents of one kind.
    Compose {
        /// Which side of the cover the inputs live on.
        #[arg(long, value_enum)]
        level: Level,
        /// Input document paths (at least two; - reads stdin).
        #[arg(num_args = 2.., required = true)]
        inputs: Vec<String>,
        /// Validation tolerance for accepting each input.
        #[arg(long, default_value_t = 1e-9, value_parser = parse_tolerance)]
        tol: f64,
        /// Indent the JSON output.
        #[arg(long)]
        pretty: bool,
    },
    /// Act on a four-vector with a spin or Lorentz document.
    Apply {
        /// Operator document path (spin or lorentz), or - for stdin.
        operator: String,
        /// Four-vector document path, or - for stdin.
        vector: String,
        /// Validation tolerance for accepting the operator.
        #[arg(long, default_value_t = 1e-9, value_parser = parse_tolerance)]
        tol: f64,
        /// Indent the JSON output.
        #[arg(long)]
        pretty: bool,
    },
    /// Validate and classify a Lorentz document.
    Check {
        /// Input document path, or - for stdin.
        #[arg(default_value = "-")]
        input: String,
        /// Metric-orthogonality tolerance.
        #[arg(long, default_value_t = 1e-9, value_parser = parse_tolerance)]
        tol: f64,
        /// Indent the JSON report.
        #[arg(long)]
        pretty: bool,
    },
    /// Emit a boost or rotation document.
    Generate {
        #[command(subcommand)]
        generator: GeneratorCommand,
    },
}

#[derive(Subcommand)]
enum GeneratorCommand {
    /// Boost of rapidity --alpha along a unit --axis.
    Boost {
        /// Rapidity.
        #[arg(long)]
        alpha: f64,
        /// Unit axis as x,y,z.
        #[arg(long, value_parser = parse_axis)]
        axis: [f64; 3],
        /// Which side of the cover to emit.
        #[arg(long, value_enum, default_value_t = Level::Spin)]
        level: Level,
        /// Indent the JSON output.
        #[arg(long)]
        pretty: bool,
    },
    /// Rotation by --theta about a unit --axis.
    Rotation {
        /// Rotation angle in radians.
        #[arg(long)]
        theta: f64,
        /// Unit axis as x,y,z.
        #[arg(long, value_parser = parse_axis)]
        axis: [f64; 3],
        /// Which side of the cover to emit.
        #[arg(long, value_enum, default_value_t = Level::Spin)]
        level: Level,
        /// Indent the JSON output.
        #[arg(long)]
        pretty: bool,
    },
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::parse(format!("ParseError cannot read stdin: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::parse(format!("ParseError cannot read {path}: {e}")))
    }
}

fn run(command: Command) -> Result<String, CliError> {
    match command {
        Command::ToLorentz { input, tol, pretty } => {
            commands::cmd_to_lorentz(&read_input(&input)?, tol, pretty)
        }
        Command::ToSpin {
            input,
            tol,
            index,
            sign,
            pretty,
        } => commands::cmd_to_spin(&read_input(&input)?, tol, index, sign, pretty),
        Command::Compose {
            level,
            inputs,
            tol,
            pretty,
        } => {
            let texts = inputs
                .iter()
                .map(|p| read_input(p))
                .collect::<Result<Vec<_>, _>>()?;
            commands::cmd_compose(&texts, level, tol, pretty)
        }
        Command::Apply {
            operator,
            vector,
            tol,
            pretty,
        } => commands::cmd_apply(&read_input(&operator)?, &read_input(&vector)?, tol, pretty),
        Command::Check { input, tol, pretty } => {
            commands::cmd_check(&read_input(&input)?, tol, pretty)
        }
        Command::Generate { generator } => match generator {
            GeneratorCommand::Boost {
                alpha,
                axis,
                level,
                pretty,
            } => commands::cmd_generate(Generator::Boost { alpha, axis }, level, pretty),
            GeneratorCommand::Rotation {
                theta,
                axis,
                level,
                pretty,
            } => commands::cmd_generate(Generator::Rotation { theta, axis }, level, pretty),
        },
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(output) => println!("{output}"),
        Err(e) => {
            eprintln!("{}", e.message);
            std::process::exit(e.code);
        }
    }
}
