use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use asm_lattice::count::{count_table, CSV_HEADER};
use asm_lattice::hasse::hasse_dot;
use asm_lattice::verify::{self, Suite, VerifyConfig};
use asm_lattice::{enumerate_asm_i, Asm, Error, MonotoneTriangle, ParabolicMask, Permutation, SixVertexState};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(name = "asmlat", version, about = "Alternating sign matrices and parabolic Bruhat lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List ASM^I(n) in canonical order.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Comma-separated 1-based indices, e.g. `2,3`.
        #[arg(long, default_value = "")]
        mask: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run exhaustive verification suites and print JSON lines.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write the Hasse diagram of ASM^I(n) as a DOT digraph.
    Hasse {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        mask: String,
        /// Output path; stdout when omitted.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Convert a JSON document from stdin between representations.
    Convert {
        #[arg(long, value_enum)]
        from: Repr,
        #[arg(long, value_enum)]
        to: Repr,
    },
    /// CSV table of |ASM^{t,...,n-1}(n)| with the known closed forms.
    Counts {
        #[arg(long, default_value_t = 4)]
        max_t: usize,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Count,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Repr {
    Asm,
    Mt,
    Sixvertex,
    Perm,
}

enum Failure {
    Core(Error),
    Io(io::Error),
    Json(serde_json::Error),
    /// Already reported on stdout; carries the exit code.
    Reported(u8),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Json(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enumerate { n, mask, format } => enumerate(n, &mask, format),
        Command::Verify { suite, max_n, seed } => run_verify(&suite, max_n, seed),
        Command::Hasse { n, mask, dot } => hasse(n, &mask, dot),
        Command::Convert { from, to } => convert(from, to),
        Command::Counts { max_t, max_n } => counts(max_t, max_n),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Reported(code)) => ExitCode::from(code),
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if matches!(e, Error::ResourceLimit { .. }) { EXIT_RESOURCE } else { EXIT_USAGE })
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Json(e)) => {
            eprintln!("error: invalid JSON: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn parse_mask(n: usize, s: &str) -> Result<ParabolicMask, Failure> {
    if n == 0 {
        return Err(Error::EmptyMatrix.into());
    }
    Ok(ParabolicMask::parse(n, s)?)
}

fn enumerate(n: usize, mask: &str, format: Format) -> Result<(), Failure> {
    let mask = parse_mask(n, mask)?;
    let iter = enumerate_asm_i(n, &mask)?;
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    match format {
        Format::Count => writeln!(out, "{}", iter.count())?,
        Format::Json => {
            for a in iter {
                writeln!(out, "{}", serde_json::to_string(&a)?)?;
            }
        }
        Format::Csv => {
            let header: Vec<String> =
                (1..=n).flat_map(|i| (1..=n).map(move |j| format!("a{i}_{j}"))).collect();
            writeln!(out, "index,{}", header.join(","))?;
            for (k, a) in iter.enumerate() {
                let cells: Vec<String> = a.rows().into_iter().flatten().map(|x| x.to_string()).collect();
                writeln!(out, "{k},{}", cells.join(","))?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn run_verify(suite: &str, max_n: usize, seed: u64) -> Result<(), Failure> {
    let suite: Suite = suite.parse()?;
    let records = verify::run(suite, VerifyConfig { max_n, seed })?;
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut failed = 0;
    for r in &records {
        if !r.pass {
            failed += 1;
        }
        writeln!(out, "{}", serde_json::to_string(r)?)?;
    }
    out.flush()?;
    eprintln!("{} checks, {} failed", records.len(), failed);
    if failed > 0 {
        return Err(Failure::Reported(EXIT_VERIFY_FAILED));
    }
    Ok(())
}

fn hasse(n: usize, mask: &str, dot: Option<PathBuf>) -> Result<(), Failure> {
    let mask = parse_mask(n, mask)?;
    let set: Vec<Asm> = enumerate_asm_i(n, &mask)?.collect();
    let text = hasse_dot(&set, &format!("ASM^{mask}({n})"))?;
    match dot {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn convert(from: Repr, to: Repr) -> Result<(), Failure> {
    let mut input = String::new();
    io::stdin().read_to_string(&mut input)?;
    let outcome = (|| -> Result<serde_json::Value, Failure> {
        let asm = match from {
            Repr::Asm => serde_json::from_str::<Asm>(&input)?,
            Repr::Mt => serde_json::from_str::<MonotoneTriangle>(&input)?.to_asm()?,
            Repr::Sixvertex => serde_json::from_str::<SixVertexState>(&input)?.to_asm()?,
            Repr::Perm => serde_json::from_str::<Permutation>(&input)?.to_asm(),
        };
        Ok(match to {
            Repr::Asm => serde_json::to_value(&asm)?,
            Repr::Mt => serde_json::to_value(MonotoneTriangle::from_asm(&asm))?,
            Repr::Sixvertex => serde_json::to_value(SixVertexState::from_asm(&asm))?,
            Repr::Perm => match asm.as_permutation() {
                Some(w) => serde_json::to_value(w)?,
                None => {
                    return Ok(json!({
                        "error": "NotAPermutation",
                        "message": "the matrix has a -1 entry",
                        "input": asm,
                    }))
                }
            },
        })
    })();
    let value = match outcome {
        Ok(v) => v,
        Err(Failure::Core(e)) => json!({ "error": e.kind(), "message": e.to_string() }),
        Err(Failure::Json(e)) => json!({ "error": "InvalidInput", "message": e.to_string() }),
        Err(other) => return Err(other),
    };
    println!("{}", serde_json::to_string(&value)?);
    if value.get("error").is_some() {
        return Err(Failure::Reported(EXIT_USAGE));
    }
    Ok(())
}

fn counts(max_t: usize, max_n: usize) -> Result<(), Failure> {
    let rows = count_table(max_t, max_n)?;
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    writeln!(out, "{CSV_HEADER}")?;
    for r in &rows {
        writeln!(out, "{}", r.csv_line())?;
    }
    out.flush()?;
    if rows.iter().any(|r| !r.matches()) {
        return Err(Failure::Reported(EXIT_VERIFY_FAILED));
    }
    Ok(())
}
