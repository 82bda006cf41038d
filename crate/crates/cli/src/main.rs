//! `ydlong`: verify Hopf algebras, Yetter-Drinfeld-Long bimodules, their
//! braiding, duals and the involution functors from text files.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 the input could not be
//! read or parsed (including bad arguments), 3 the input was read but is
//! inconsistent (dimension or field mismatch, not an automorphism, modules
//! over different algebras, ...).

mod commands;
mod demo;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use ydlong_core::exactlin::FieldCtx;
use ydlong_core::format;
use ydlong_core::report::ValidationReport;
use ydlong_core::tcat::Side;
use ydlong_core::{Error, Result};

use commands::BraidRequest;
use output::{render_error, CheckReport, Exit};

#[derive(Parser)]
#[command(name = "ydlong", version, about = "Exact checks for Yetter-Drinfeld-Long bimodules")]
struct Cli {
    /// Machine-readable JSON report on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a file: Hopf axioms, module axioms, or graded module plus
    /// agreement with the generic construction.
    Check { kind: Kind, path: PathBuf },
    /// Build the braiding c: M ⊗ N → ᴹN ⊗ M and check it.
    Braid {
        m: PathBuf,
        n: PathBuf,
        /// Also check both hexagon identities with this third module.
        #[arg(long, value_name = "P")]
        hexagons: Option<PathBuf>,
        /// Also check invariance of the braiding under conjugation by P.
        #[arg(long, value_name = "P")]
        phi: Option<PathBuf>,
        /// Compare the explicit inverse with the matrix inverse.
        #[arg(long)]
        inverse: bool,
    },
    /// Build a dual with its evaluation and coevaluation and check them.
    Dual {
        m: PathBuf,
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
    },
    /// Check that the functors F and G of a quadruple in involution are
    /// mutually inverse on a module.
    Iso {
        m: PathBuf,
        #[arg(long, value_name = "Q")]
        quadruple: PathBuf,
    },
    /// Write a catalog object in the text format.
    Demo {
        /// One of: sweedler, group:S3, dual-group:S3, trivial-module,
        /// sign-module, h4-block, counit-quadruple, sign-quadruple,
        /// graded-demo[:seed]. `list` prints the catalog.
        name: String,
        /// Output file (stdout when omitted).
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// Work over F_p instead of the rationals.
        #[arg(long, value_name = "P")]
        prime: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Hopf,
    Module,
    Graded,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { Exit::ParseError as u8 } else { 0 });
        }
    };
    let json = cli.json;
    let (name, outcome) = run(cli.command);
    match outcome {
        Ok(Outcome::Report(r)) => {
            if json {
                println!("{}", r.render_json());
            } else {
                print!("{}", r.render_text());
            }
            ExitCode::from(r.exit() as u8)
        }
        Ok(Outcome::Written(msg)) => {
            if !msg.is_empty() {
                if json {
                    println!("{}", serde_json_message(&name, &msg));
                } else {
                    print!("{msg}");
                }
            }
            ExitCode::from(Exit::Pass as u8)
        }
        Err(e) => {
            let text = render_error(&name, &e, json);
            if json {
                println!("{text}");
            } else {
                eprintln!("{text}");
            }
            ExitCode::from(Exit::of_error(&e) as u8)
        }
    }
}

fn serde_json_message(command: &str, msg: &str) -> String {
    format!(
        "{{\"command\": {}, \"message\": {}}}",
        serde_json::Value::from(command),
        serde_json::Value::from(msg.trim_end())
    )
}

enum Outcome {
    Report(CheckReport),
    /// A demo was written; the message is printed unless empty.
    Written(String),
}

fn timed(
    command: &str,
    artifacts: Vec<String>,
    f: impl FnOnce() -> Result<(String, Vec<ValidationReport>)>,
) -> Result<Outcome> {
    let start = Instant::now();
    let (field, sections) = f()?;
    let ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(Outcome::Report(CheckReport::new(
        command, artifacts, field, sections, ms,
    )))
}

fn show(p: &std::path::Path) -> String {
    p.display().to_string()
}

fn run(command: Command) -> (String, Result<Outcome>) {
    match command {
        Command::Check { kind, path } => {
            let (name, f): (&str, fn(&std::path::Path) -> _) = match kind {
                Kind::Hopf => ("check hopf", commands::check_hopf),
                Kind::Module => ("check module", commands::check_module),
                Kind::Graded => ("check graded", commands::check_graded_file),
            };
            (name.into(), timed(name, vec![show(&path)], || f(&path)))
        }
        Command::Braid {
            m,
            n,
            hexagons,
            phi,
            inverse,
        } => {
            let mut artifacts = vec![show(&m), show(&n)];
            artifacts.extend(hexagons.iter().map(|p| format!("--hexagons {}", show(p))));
            artifacts.extend(phi.iter().map(|p| format!("--phi {}", show(p))));
            if inverse {
                artifacts.push("--inverse".into());
            }
            let req = BraidRequest {
                m: &m,
                n: &n,
                hexagons: hexagons.as_deref(),
                phi: phi.as_deref(),
                inverse,
            };
            ("braid".into(), timed("braid", artifacts, || commands::braid(&req)))
        }
        Command::Dual { m, side } => {
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            let artifacts = vec![
                show(&m),
                format!("--side {}", if side == Side::Left { "left" } else { "right" }),
            ];
            ("dual".into(), timed("dual", artifacts, || commands::dual(&m, side)))
        }
        Command::Iso { m, quadruple } => {
            let artifacts = vec![show(&m), format!("--quadruple {}", show(&quadruple))];
            ("iso".into(), timed("iso", artifacts, || commands::iso(&m, &quadruple)))
        }
        Command::Demo { name, out, prime } => ("demo".into(), write_demo(&name, out, prime)),
    }
}

fn write_demo(name: &str, out: Option<PathBuf>, prime: Option<u64>) -> Result<Outcome> {
    if name == "list" {
        return Ok(Outcome::Written(demo::NAMES.iter().map(|n| format!("{n}\n")).collect()));
    }
    let field = match prime {
        None => FieldCtx::Rational,
        Some(p) => FieldCtx::prime(p)?,
    };
    let doc = demo::build(name, field).ok_or_else(|| Error::Parse {
        line: 0,
        message: format!("unknown demo `{name}`; try `ydlong demo list`"),
    })??;
    let text = format::write(&doc);
    match out {
        Some(path) => {
            std::fs::write(&path, text)?;
            Ok(Outcome::Written(format!(
                "wrote {} `{name}` to {}\n",
                doc.kind(),
                path.display()
            )))
        }
        None => {
            print!("{text}");
            Ok(Outcome::Written(String::new()))
        }
    }
}
