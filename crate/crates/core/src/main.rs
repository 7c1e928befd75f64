use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use pk_presentation::verify::{verify_box, Record, Verdict, DEFAULT_GUARD};
use pk_presentation::{
    normalize, p2_relation, relation_for, Atom, Error, NormalForm, P2Letter, Tuple, Word,
};

const EXIT_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_GUARD: u8 = 3;

/// Normal forms, relations and verification sweeps for P^K.
///
/// Exit status: 0 success, 1 a check failed, 2 bad input, 3 resource guard hit.
#[derive(Parser, Debug)]
#[command(name = "pk", version)]
struct Cli {
    /// Emit one JSON object per line instead of text.
    #[arg(long, global = true)]
    machine: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduce a word such as `(2,1).(1,3)` to `1^m . (atom)`.
    Normalize { word: String },
    /// Write a tuple as m*(1,...,1) + atom.
    Decompose { tuple: String },
    /// Show the relation whose left side is `x_a x_b`.
    Relation { a: String, b: String },
    /// Print the P2 relation table, checked against the general relations.
    P2Table {
        /// Largest subscript for y_a and z_a.
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(2..))]
        max_subscript: u64,
    },
    /// Check atoms and fiber connectivity over a box of targets.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Dimension K.
    #[arg(long = "k", default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    k: u64,
    /// Atom check covers [1, max-entry]^K.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
    max_entry: u64,
    /// Fiber check covers every target in [1, max-target]^K.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
    max_target: u64,
    /// Maximum number of words enumerated per fiber.
    #[arg(long, default_value_t = DEFAULT_GUARD, value_parser = guard_value)]
    guard: usize,
    /// Write records here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn guard_value(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("guard must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::GuardExceeded { .. } => EXIT_GUARD,
                _ => EXIT_INPUT,
            })
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match &cli.command {
        Command::Normalize { word } => cmd_normalize(&mut out, cli.machine, word),
        Command::Decompose { tuple } => cmd_decompose(&mut out, cli.machine, tuple),
        Command::Relation { a, b } => cmd_relation(&mut out, cli.machine, a, b),
        Command::P2Table { max_subscript } => cmd_p2_table(&mut out, cli.machine, *max_subscript),
        Command::Verify(args) => match &args.out {
            Some(path) => {
                let file = File::create(path).unwrap_or_else(|e| {
                    eprintln!("error: cannot create {}: {e}", path.display());
                    std::process::exit(EXIT_INPUT.into());
                });
                cmd_verify(&mut BufWriter::new(file), cli.machine, args)
            }
            None => cmd_verify(&mut out, cli.machine, args),
        },
    }
}

// Output is best effort: a closed pipe should not turn into a failure code.
macro_rules! emit {
    ($out:expr, $($arg:tt)*) => {
        let _ = writeln!($out, $($arg)*);
    };
}

fn cmd_normalize(out: &mut impl Write, machine: bool, text: &str) -> Result<u8, Error> {
    let word: Word = text.parse()?;
    let nf = normalize(&word)?;
    let value = word.evaluate()?;
    if machine {
        let record = json!({
            "word": word.to_string(),
            "m": nf.m,
            "head": nf.head.to_string(),
            "value": value.to_string(),
        });
        emit!(out, "{record}");
    } else {
        emit!(out, "{nf}");
        emit!(out, "value {value}");
    }
    Ok(0)
}

fn cmd_decompose(out: &mut impl Write, machine: bool, text: &str) -> Result<u8, Error> {
    let t: Tuple = text.parse()?;
    let NormalForm { m, head } = NormalForm::of_tuple(&t);
    if machine {
        let record = json!({ "tuple": t.to_string(), "m": m, "atom": head.to_string() });
        emit!(out, "{record}");
    } else {
        emit!(out, "{t} = {m}*{} + {head}", Tuple::<u64>::ones(t.dim()));
    }
    Ok(0)
}

fn cmd_relation(out: &mut impl Write, machine: bool, a: &str, b: &str) -> Result<u8, Error> {
    let a = Atom::new(a.parse::<Tuple>()?)?;
    let b = Atom::new(b.parse::<Tuple>()?)?;
    let rel = relation_for(&a, &b)?;
    if machine {
        let record = json!({
            "a": rel.lhs.0.to_string(),
            "b": rel.lhs.1.to_string(),
            "m": rel.m,
            "c": rel.c.to_string(),
        });
        emit!(out, "{record}");
    } else {
        emit!(out, "{rel}");
    }
    Ok(0)
}

fn cmd_p2_table(out: &mut impl Write, machine: bool, max_subscript: u64) -> Result<u8, Error> {
    let letters = P2Letter::<u64>::up_to(max_subscript);
    let mut mismatches = 0usize;
    for &p in &letters {
        for &q in &letters {
            let rhs = p2_relation(p, q)?;
            let rel = relation_for(&p.to_atom(), &q.to_atom())?;
            let agrees = normalize(&rhs.to_word()?)?
                == NormalForm {
                    m: rel.m,
                    head: rel.c,
                };
            if !agrees {
                mismatches += 1;
            }
            if machine {
                let record = json!({
                    "lhs": format!("{p} {q}"),
                    "rhs": rhs.to_string(),
                    "agrees": agrees,
                });
                emit!(out, "{record}");
            } else {
                let mark = if agrees { "" } else { "   MISMATCH" };
                emit!(out, "{p} {q} = {rhs}{mark}");
            }
        }
    }
    Ok(if mismatches == 0 { 0 } else { EXIT_FAILED })
}

fn cmd_verify(out: &mut impl Write, machine: bool, args: &VerifyArgs) -> Result<u8, Error> {
    let dim = usize::try_from(args.k).map_err(|_| Error::Overflow("the dimension"))?;
    let records = verify_box::<u64>(dim, args.max_entry, args.max_target, args.guard)?;
    for record in &records {
        if machine {
            emit!(
                out,
                "{}",
                serde_json::to_string(record).expect("records serialize")
            );
        } else {
            emit!(out, "{}", human(record));
        }
    }
    let verdict = Verdict::of(&records);
    if !machine {
        let fibers = records.len() - 1;
        let guarded = records.iter().filter(|r| r.is_guard_error()).count();
        let failed = records.iter().filter(|r| !r.pass()).count() - guarded;
        emit!(
            out,
            "summary: {fibers} fibers, {failed} failed, {guarded} over guard: {verdict:?}"
        );
    }
    let _ = out.flush();
    Ok(match verdict {
        Verdict::Pass => 0,
        Verdict::Failed => EXIT_FAILED,
        Verdict::GuardExceeded => EXIT_GUARD,
    })
}

fn human(record: &Record) -> String {
    let verdict = |pass: bool| if pass { "pass" } else { "FAIL" };
    match record {
        Record::Atoms {
            k,
            bound,
            tuples,
            atoms,
            pass,
        } => format!(
            "atoms  [1,{bound}]^{k}: {tuples} tuples, {atoms} atoms  {}",
            verdict(*pass)
        ),
        Record::Fiber {
            target,
            error: Some(e),
            ..
        } => format!("fiber  {target}: {e}"),
        Record::Fiber {
            target,
            fiber_size,
            component_count,
            pass,
            ..
        } => format!(
            "fiber  {target}: {} words, {} components  {}",
            fiber_size.unwrap_or(0),
            component_count.unwrap_or(0),
            verdict(*pass)
        ),
    }
}
