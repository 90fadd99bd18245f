use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quasi_pascal::exact::ExactInt;
use quasi_pascal::quasi::DelannoyParams;
use quasi_pascal::rays::Direction;
use quasi_pascal::report::{
    coefficient_document, delannoy_document, qtriangle_document, sequence_document,
    triangle_document, verify_document, Format, Method, OutputDocument, Payload, Suite,
};

#[derive(Parser)]
#[command(
    name = "quasi",
    version,
    about = "Quasi s-Pascal triangles, s-bonacci sums and their q-analogues"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct Output {
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Plain)]
    format: FormatArg,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Rows of the quasi s-triangle.
    Triangle {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        rows: u32,
    },
    /// One quasi coefficient by a chosen route.
    Coef {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, value_enum, default_value_t = MethodArg::Recurrence)]
        method: MethodArg,
    },
    /// The s-bonacci sequence or a ray sequence.
    Sequence {
        #[arg(long)]
        s: u32,
        #[arg(long, value_enum, default_value_t = SequenceKind::Sbonacci)]
        kind: SequenceKind,
        #[arg(long)]
        alpha: Option<u32>,
        #[arg(long)]
        beta: Option<u32>,
        #[arg(long, allow_negative_numbers = true)]
        r: Option<i64>,
        #[arg(long)]
        count: u32,
    },
    /// Rows of the q-quasi s-triangle.
    Qtriangle {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        rows: u32,
    },
    /// A generalized Delannoy array; unit weights with m = s unless given.
    Delannoy {
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        rows: u32,
        /// Defaults to the number of rows.
        #[arg(long)]
        cols: Option<u32>,
        #[arg(long, allow_negative_numbers = true)]
        a: Option<i64>,
        /// Comma-separated a_1,...,a_m.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        weights: Option<Vec<i64>>,
    },
    /// Run an identity suite; exits 1 on the first counterexample.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Plain,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Lattice,
    Recurrence,
    Explicit,
    Multinomial,
    Spascal,
    Demoivre,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SequenceKind {
    Sbonacci,
    Ray,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Bisnomial,
    Quasi,
    Rays,
    Q,
    Gf,
    Tables,
}

fn format(f: FormatArg) -> Format {
    match f {
        FormatArg::Plain => Format::Plain,
        FormatArg::Csv => Format::Csv,
        FormatArg::Json => Format::Json,
    }
}

fn usage(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn build(command: Command) -> Result<OutputDocument, String> {
    let doc = match command {
        Command::Triangle { s, rows } => triangle_document(s, rows),
        Command::Coef { s, n, k, method } => {
            let method: Method = method
                .to_possible_value()
                .expect("no skipped variants")
                .get_name()
                .parse()?;
            coefficient_document(s, n, k, method)
        }
        Command::Sequence {
            s,
            kind,
            alpha,
            beta,
            r,
            count,
        } => {
            let direction = match (kind, alpha, beta, r) {
                (SequenceKind::Sbonacci, None, None, None) => None,
                (SequenceKind::Sbonacci, ..) => {
                    return Err("--alpha/--beta/--r only apply to --kind ray".into())
                }
                (SequenceKind::Ray, Some(a), Some(b), Some(r)) => {
                    Some(Direction::new(a, b, r).map_err(|e| e.to_string())?)
                }
                (SequenceKind::Ray, ..) => {
                    return Err("--kind ray needs --alpha, --beta and --r".into())
                }
            };
            sequence_document(s, direction, count)
        }
        Command::Qtriangle { s, rows } => qtriangle_document(s, rows),
        Command::Delannoy {
            s,
            rows,
            cols,
            a,
            weights,
        } => {
            let params = match (s, weights) {
                (_, Some(w)) => DelannoyParams::new(
                    ExactInt::from(a.unwrap_or(1)),
                    w.into_iter().map(ExactInt::from).collect(),
                ),
                (Some(s), None) if a.is_none() => DelannoyParams::unit(s),
                (Some(s), None) => {
                    DelannoyParams::new(ExactInt::from(a.unwrap_or(1)), vec![ExactInt::from(1); s])
                }
                (None, None) => return Err("delannoy needs --s or --weights".into()),
            }
            .map_err(|e| e.to_string())?;
            delannoy_document(&params, rows, cols.unwrap_or(rows))
        }
        Command::Verify { suite } => {
            let suite: Suite = suite
                .to_possible_value()
                .expect("no skipped variants")
                .get_name()
                .parse()?;
            Ok(verify_document(suite))
        }
    };
    doc.map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let doc = match build(cli.command) {
        Ok(doc) => doc,
        Err(e) => return usage(e),
    };
    let text = doc.render(format(cli.output.format));
    match &cli.output.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if let Payload::Report(report) = &doc.payload {
        if let Some(failed) = report.first_failure() {
            eprintln!("verification failed: {}", failed.name);
            return ExitCode::from(1);
        }
    }
    ExitCode::SUCCESS
}
