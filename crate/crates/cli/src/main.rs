//! `tangent`: exact tangents, derivatives and difference-quotient tables for
//! polynomials, from the command line.

mod commands;
mod envelope;
mod plot;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{Map, Value};

use envelope::{CliError, Envelope, Report, Status};

#[derive(Debug, Parser)]
#[command(name = "tangent", version, about = "Tangent lines and derivatives of polynomials by the double-root criterion")]
struct Cli {
    /// Print a single JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Write output to this file (for `plot`, the SVG).
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tangent line and cofactor Q with f - (kx + b) = (x - p)^2 Q.
    Tangent {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    /// Derivative of a polynomial or rational function.
    Derive {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Is y = kx + b tangent to f at p?
    Check {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(allow_hyphen_values = true)]
        k: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    /// Multiplicity of p as a root of f(x) - (kx + b).
    Mult {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(allow_hyphen_values = true)]
        k: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    /// Coefficients of f(p + t).
    Expand {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    /// f(x0 + t) = f(x0) + f'(x0) t + R(t).
    Decompose {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(allow_hyphen_values = true)]
        x0: String,
    },
    /// Difference quotients for h = 10^-1 .. 10^-steps.
    Table {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(allow_hyphen_values = true)]
        x0: String,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..=64))]
        steps: u32,
    },
    /// Check the sum, product, quotient and chain rules for f and g.
    Rules {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// SVG of the curve, the tangent at p and optionally the secant to p + dx.
    Plot {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(allow_hyphen_values = true)]
        p: String,
        /// `lo,hi`; defaults to p - 3, p + 3.
        #[arg(long, allow_hyphen_values = true)]
        range: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        dx: Option<String>,
        #[arg(long, default_value = "800x600")]
        size: String,
    },
    /// Evaluate at a + bε: exp, log, sin, cos, tan, pow:<c>, or a polynomial.
    Dual {
        #[arg(allow_hyphen_values = true)]
        function: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true, default_value = "1")]
        b: String,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Tangent { .. } => "tangent",
            Command::Derive { .. } => "derive",
            Command::Check { .. } => "check",
            Command::Mult { .. } => "mult",
            Command::Expand { .. } => "expand",
            Command::Decompose { .. } => "decompose",
            Command::Table { .. } => "table",
            Command::Rules { .. } => "rules",
            Command::Plot { .. } => "plot",
            Command::Dual { .. } => "dual",
        }
    }

    /// Inputs as typed, for error envelopes where parsing may have failed.
    fn raw_inputs(&self) -> Map<String, Value> {
        let pairs: Vec<(&str, Value)> = match self {
            Command::Tangent { expr, p } | Command::Expand { expr, p } => {
                vec![("expr", expr.as_str().into()), ("p", p.as_str().into())]
            }
            Command::Derive { expr } => vec![("expr", expr.as_str().into())],
            Command::Check { expr, k, b, p } | Command::Mult { expr, k, b, p } => vec![
                ("expr", expr.as_str().into()),
                ("k", k.as_str().into()),
                ("b", b.as_str().into()),
                ("p", p.as_str().into()),
            ],
            Command::Decompose { expr, x0 } => {
                vec![("expr", expr.as_str().into()), ("x0", x0.as_str().into())]
            }
            Command::Table { expr, x0, steps } => vec![
                ("expr", expr.as_str().into()),
                ("x0", x0.as_str().into()),
                ("steps", (*steps).into()),
            ],
            Command::Rules { f, g } => vec![("f", f.as_str().into()), ("g", g.as_str().into())],
            Command::Plot { expr, p, range, dx, size } => vec![
                ("expr", expr.as_str().into()),
                ("p", p.as_str().into()),
                ("range", range.clone().into()),
                ("dx", dx.clone().into()),
                ("size", size.as_str().into()),
            ],
            Command::Dual { function, a, b } => vec![
                ("function", function.as_str().into()),
                ("a", a.as_str().into()),
                ("b", b.as_str().into()),
            ],
        };
        envelope::fields(pairs)
    }
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Tangent { expr, p } => commands::tangent(expr, p),
        Command::Derive { expr } => commands::derive(expr),
        Command::Check { expr, k, b, p } => commands::check(expr, k, b, p),
        Command::Mult { expr, k, b, p } => commands::mult(expr, k, b, p),
        Command::Expand { expr, p } => commands::expand(expr, p),
        Command::Decompose { expr, x0 } => commands::decompose_cmd(expr, x0),
        Command::Table { expr, x0, steps } => commands::table(expr, x0, *steps),
        Command::Rules { f, g } => commands::rules_cmd(f, g),
        Command::Plot {
            expr,
            p,
            range,
            dx,
            size,
        } => commands::plot_cmd(&commands::PlotArgs {
            expr,
            p,
            range: range.as_deref(),
            dx: dx.as_deref(),
            size,
            output: cli.output.as_deref(),
        }),
        Command::Dual { function, a, b } => commands::dual_cmd(function, a, b),
    }
}

fn emit(cli: &Cli, body: &str) -> std::io::Result<()> {
    // plot owns --output for the SVG itself
    match (&cli.output, &cli.command) {
        (Some(path), cmd) if !matches!(cmd, Command::Plot { .. }) => std::fs::write(path, body),
        _ => std::io::stdout().write_all(body.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli);

    let (body, code) = match (&outcome, cli.json) {
        (Ok(report), true) => {
            let env = Envelope {
                command: cli.command.name().into(),
                inputs: report.inputs.clone(),
                result: report.result.clone(),
                status: Status::Ok,
                error: None,
            };
            (to_json(&env), 0)
        }
        (Ok(report), false) => (report.text.clone(), 0),
        (Err(err), true) => {
            let env = Envelope {
                command: cli.command.name().into(),
                inputs: cli.command.raw_inputs(),
                result: Value::Null,
                status: Status::Error,
                error: Some(err.message().to_string()),
            };
            (to_json(&env), err.exit_code())
        }
        (Err(err), false) => {
            eprintln!("error: {}", err.message());
            return ExitCode::from(err.exit_code());
        }
    };

    if let Err(err) = emit(&cli, &body) {
        eprintln!("error: {err}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}

fn to_json(env: &Envelope) -> String {
    let mut s = serde_json::to_string_pretty(env).expect("envelope serializes");
    s.push('\n');
    s
}
