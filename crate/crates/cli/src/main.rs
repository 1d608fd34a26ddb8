//! `completion-kit`: verify the identity catalog, complete integer rows, and
//! query membership in `(ad - bc)`.
//!
//! Exit codes: 0 success, 1 a check failed (or a polynomial is not a
//! member), 2 usage or input error, 3 the row has no integer roots.

use std::io::{IsTerminal, Read};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use completion_kit::catalog::{self, VerificationReport};
use completion_kit::completion::{complete_row, CompletionOutcome, IntMatrix, RowInstance};
use completion_kit::{PolyMatrix, RingSpec, SegreContext};
use num_bigint::BigInt;
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(name = "completion-kit", version, about)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one catalog claim, or `all`.
    Verify {
        #[arg(default_value = "all")]
        claim: String,
    },
    /// Complete the unimodular row (a, b, c) to a 3x3 matrix of determinant 1.
    #[command(allow_negative_numbers = true)]
    Complete { a: BigInt, b: BigInt, c: BigInt },
    /// Decide whether an expression over Z[a,b,c,d,aux..] lies in (ad - bc).
    Member {
        /// Polynomial expression; multiplication must be written as `*`.
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Extra variables, comma separated.
        #[arg(long, value_delimiter = ',')]
        aux: Vec<String>,
    },
    /// Determinant of a JSON array of rows of expressions (`-` reads stdin).
    Det {
        matrix: String,
        /// Ring variables, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        ring: Vec<String>,
    },
}

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NO_ROOTS: u8 = 3;

struct Style {
    color: bool,
}

impl Style {
    fn detect() -> Self {
        let color = match std::env::var("COMPLETION_KIT_COLOR").as_deref() {
            Ok("0") => false,
            Ok("1") => true,
            _ => std::io::stdout().is_terminal(),
        };
        Style { color }
    }

    fn paint(&self, text: &str, code: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_string()
        }
    }

    fn status(&self, passed: bool) -> String {
        if passed {
            self.paint("PASS", "32")
        } else {
            self.paint("FAIL", "31")
        }
    }
}

fn usage_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_USAGE)
}

fn number(x: &BigInt) -> Value {
    Value::Number(x.to_string().parse().expect("decimal integer"))
}

fn report_json(r: &VerificationReport) -> Value {
    json!({
        "claim_id": r.claim_id,
        "passed": r.passed,
        "residual_terms": r.residual.num_terms(),
        "elapsed_ms": r.elapsed.as_millis() as u64,
    })
}

fn cmd_verify(claim: &str, json: bool, style: &Style) -> ExitCode {
    let Some(reports) = catalog::run(claim) else {
        let known: Vec<_> = catalog::claims().iter().map(|c| c.id).collect();
        return usage_error(format!(
            "unknown claim `{claim}`; expected `all` or one of: {}",
            known.join(", ")
        ));
    };
    let all_passed = reports.iter().all(|r| r.passed);
    if json {
        let value = match (claim, reports.as_slice()) {
            ("all", _) => Value::Array(reports.iter().map(report_json).collect()),
            (_, [single]) => report_json(single),
            _ => unreachable!("a single claim yields one report"),
        };
        println!("{}", serde_json::to_string(&value).unwrap());
    } else {
        for r in &reports {
            println!(
                "{} {} residual_terms={}",
                style.status(r.passed),
                r.claim_id,
                r.residual.num_terms()
            );
        }
        let passed = reports.iter().filter(|r| r.passed).count();
        println!("{passed}/{} claims passed", reports.len());
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILED)
    }
}

fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array(
        m.iter()
            .map(|row| Value::Array(row.iter().map(number).collect()))
            .collect(),
    )
}

fn cmd_complete(row: RowInstance, json: bool) -> ExitCode {
    let started = Instant::now();
    let outcome = match complete_row(&row) {
        Ok(outcome) => outcome,
        Err(completion_kit::Error::NotUnimodular(_)) => {
            return usage_error(format!("row ({row}) is not unimodular (gcd {})", row.gcd()));
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_FAILED);
        }
    };
    let row_json = Value::Array(vec![number(&row.a), number(&row.b), number(&row.c)]);
    match outcome {
        CompletionOutcome::Completed(done) => {
            let cert = &done.certificate;
            if json {
                let value = json!({
                    "row": row_json,
                    "matrix": matrix_json(&done.matrix),
                    "certificate": {
                        "alpha": number(&cert.alpha),
                        "beta": number(&cert.beta),
                        "stuv": cert.first.iter().map(number).collect::<Vec<_>>(),
                        "wxyz": cert.second.iter().map(number).collect::<Vec<_>>(),
                    },
                    "elapsed_ms": started.elapsed().as_millis() as u64,
                });
                println!("{}", serde_json::to_string(&value).unwrap());
            } else {
                for r in &done.matrix {
                    let line: Vec<String> = r.iter().map(ToString::to_string).collect();
                    println!("{}", line.join(" "));
                }
                println!("det = 1");
                println!("alpha beta = {} {}", cert.alpha, cert.beta);
                let join = |q: &[BigInt; 4]| {
                    q.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
                };
                println!("s t u v = {}", join(&cert.first));
                println!("w x y z = {}", join(&cert.second));
            }
            ExitCode::SUCCESS
        }
        CompletionOutcome::NoIntegerRoots { discriminant } => {
            if json {
                let value = json!({
                    "row": row_json,
                    "error": "no-integer-roots",
                    "discriminant": number(&discriminant),
                });
                println!("{}", serde_json::to_string(&value).unwrap());
            } else {
                println!(
                    "no integer roots: discriminant b^2 - 4ac = {discriminant} is not a perfect \
                     square, so z^2 + bz + ac has irrational or non-real roots"
                );
            }
            ExitCode::from(EXIT_NO_ROOTS)
        }
    }
}

fn cmd_member(expr: &str, aux: &[String], json: bool) -> ExitCode {
    let aux: Vec<&str> = aux.iter().map(String::as_str).collect();
    let ctx = match SegreContext::new(&aux) {
        Ok(ctx) => ctx,
        Err(e) => return usage_error(e),
    };
    let p = match ctx.source().parse(expr) {
        Ok(p) => p,
        Err(e) => return usage_error(e),
    };
    let member = ctx.in_determinantal_ideal(&p).expect("parsed over the source ring");
    if json {
        let value = json!({ "polynomial": p.to_string(), "member": member });
        println!("{}", serde_json::to_string(&value).unwrap());
    } else if member {
        println!("IN (ad-bc)");
    } else {
        println!("NOT IN (ad-bc)");
    }
    if member {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILED)
    }
}

fn cmd_det(matrix: &str, ring: &[String], json: bool) -> ExitCode {
    let text = if matrix == "-" {
        let mut buf = String::new();
        if let Err(e) = std::io::stdin().read_to_string(&mut buf) {
            return usage_error(e);
        }
        buf
    } else {
        matrix.to_string()
    };
    let ring = match RingSpec::new(ring.iter().cloned()) {
        Ok(r) => r,
        Err(e) => return usage_error(e),
    };
    let rows: Vec<Vec<String>> = match serde_json::from_str(&text) {
        Ok(rows) => rows,
        Err(e) => return usage_error(format!("matrix must be a JSON array of rows of strings: {e}")),
    };
    let rows: Vec<Vec<&str>> = rows
        .iter()
        .map(|r| r.iter().map(String::as_str).collect())
        .collect();
    let rows: Vec<&[&str]> = rows.iter().map(Vec::as_slice).collect();
    let det = PolyMatrix::parse(&ring, &rows).and_then(|m| m.determinant());
    let det = match det {
        Ok(d) => d,
        Err(e) => return usage_error(e),
    };
    if json {
        let value = json!({ "ring": ring.variables(), "determinant": det.to_string() });
        println!("{}", serde_json::to_string(&value).unwrap());
    } else {
        println!("{det}");
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let style = Style::detect();
    match cli.command {
        Command::Verify { claim } => cmd_verify(&claim, cli.json, &style),
        Command::Complete { a, b, c } => cmd_complete(RowInstance { a, b, c }, cli.json),
        Command::Member { expr, aux } => cmd_member(&expr, &aux, cli.json),
        Command::Det { matrix, ring } => cmd_det(&matrix, &ring, cli.json),
    }
}
