//! `pytree`: enumeration, navigation, difference queries, Pell solving,
//! export, and oracle verification for the ternary tree of primitive
//! Pythagorean triples.
//!
//! Exit codes: 2 for bad flags, 3 for invalid triples or even difference
//! inputs, 4 for non-representable differences, 5 for a verification
//! mismatch.

mod records;
mod verify;

use std::io::{BufWriter, Write};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use pytree_core::{
    child, difference_path, form_value, locate, parent, root_triple_for_difference, solve_norm,
    DiffForm, Error, LevelWalk, PrimTriple, TreePath,
};

use records::Record;

#[derive(Parser)]
#[command(
    name = "pytree",
    version,
    about = "The ternary tree of primitive Pythagorean triples"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Jsonl,
    Csv,
    Dot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormArg {
    P,
    Q,
    R,
}

impl From<FormArg> for DiffForm {
    fn from(f: FormArg) -> DiffForm {
        match f {
            FormArg::P => DiffForm::P,
            FormArg::Q => DiffForm::Q,
            FormArg::R => DiffForm::R,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Emit all nodes to the given depth, level by level, left to right
    Enumerate {
        #[arg(long)]
        depth: usize,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: Format,
    },
    /// The three children of a triple, in U-, L+, U+ order
    Children { s: String, c: String, n: String },
    /// The parent of a triple, or "root"
    Parent { s: String, c: String, n: String },
    /// Follow the direction that keeps the chosen difference invariant
    DiffPath {
        s: String,
        c: String,
        n: String,
        #[arg(long, value_enum, ignore_case = true)]
        form: FormArg,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        steps: u32,
    },
    /// The root triple whose difference S - C equals D
    DiffRoot {
        #[arg(allow_negative_numbers = true)]
        d: i64,
    },
    /// Canonical element of Z[sqrt(2)] with norm D
    SolvePell {
        #[arg(allow_negative_numbers = true)]
        d: i64,
    },
    /// Check the tree enumeration against a brute-force parameter scan
    Verify {
        #[arg(long = "max-n", value_parser = clap::value_parser!(u64).range(5..))]
        max_n: u64,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::InvalidTriple(_) | Error::InvalidParams(_) | Error::EvenDifference => 3,
            Error::NotRepresentable(_) | Error::NotPrime(_) | Error::BadResidue(_, _) => 4,
            _ => 1,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::new(1, format!("io error: {e}"))
    }
}

fn main() {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match run(cli.command, &mut out) {
        Ok(()) => {
            out.flush().expect("stdout flush");
        }
        Err(f) => {
            let _ = out.flush();
            eprintln!("pytree: {}", f.message);
            std::process::exit(f.code);
        }
    }
}

fn parse_triple(s: &str, c: &str, n: &str) -> Result<PrimTriple, Failure> {
    let parse = |txt: &str| {
        txt.parse::<BigInt>()
            .map_err(|_| Failure::new(3, format!("invalid triple: '{txt}' is not an integer")))
    };
    PrimTriple::new(parse(s)?, parse(c)?, parse(n)?).map_err(Failure::from)
}

fn run(command: Command, out: &mut impl Write) -> Result<(), Failure> {
    match command {
        Command::Enumerate { depth, format } => match format {
            Format::Jsonl => enumerate_jsonl(depth, out),
            Format::Csv => enumerate_csv(depth, out),
            Format::Dot => enumerate_dot(depth, out),
        },
        Command::Children { s, c, n } => {
            let t = parse_triple(&s, &c, &n)?;
            let base = locate(&t);
            for kind in pytree_core::ChildKind::ALL {
                let mut path = base.clone();
                path.push(kind);
                let rec = Record::for_node(&path, &child(&t, kind)).with_kind(kind);
                writeln!(out, "{}", rec.to_json())?;
            }
            Ok(())
        }
        Command::Parent { s, c, n } => {
            let t = parse_triple(&s, &c, &n)?;
            match parent(&t) {
                None => writeln!(out, "root")?,
                Some((p, kind)) => {
                    let rec = Record::for_node(&locate(&p), &p).with_kind(kind);
                    writeln!(out, "{}", rec.to_json())?;
                }
            }
            Ok(())
        }
        Command::DiffPath {
            s,
            c,
            n,
            form,
            steps,
        } => {
            let t = parse_triple(&s, &c, &n)?;
            let form = DiffForm::from(form);
            for node in difference_path(&t, form, steps as usize) {
                let rec = Record::for_node(&locate(&node), &node)
                    .with_diff(form_value(&node, form).to_string());
                writeln!(out, "{}", rec.to_json())?;
            }
            Ok(())
        }
        Command::DiffRoot { d } => {
            let root = root_triple_for_difference(d)?;
            let rec = Record::for_node(&locate(&root), &root);
            writeln!(out, "{}", rec.to_json())?;
            Ok(())
        }
        Command::SolvePell { d } => {
            let u = solve_norm(d)?;
            writeln!(out, "{u}")?;
            Ok(())
        }
        Command::Verify { max_n } => verify::run(max_n, out),
    }
}

fn enumerate_jsonl(depth: usize, out: &mut impl Write) -> Result<(), Failure> {
    for level in 0..=depth {
        for (path, triple) in LevelWalk::new(level) {
            writeln!(out, "{}", Record::for_node(&path, &triple).to_json())?;
        }
    }
    Ok(())
}

fn enumerate_csv(depth: usize, out: &mut impl Write) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(Record::CSV_HEADER)
        .map_err(|e| Failure::new(1, e.to_string()))?;
    for level in 0..=depth {
        for (path, triple) in LevelWalk::new(level) {
            let rec = Record::for_node(&path, &triple);
            w.write_record(rec.csv_fields())
                .map_err(|e| Failure::new(1, e.to_string()))?;
        }
    }
    w.flush()?;
    Ok(())
}

fn node_id(path: &TreePath) -> String {
    let mut id = String::from("t");
    for step in path.steps() {
        id.push(match step {
            pytree_core::ChildKind::UMinus => '0',
            pytree_core::ChildKind::LPlus => '1',
            pytree_core::ChildKind::UPlus => '2',
        });
    }
    id
}

/// Graphviz export: node labels are "S,C,N" and each node's out-edges are
/// written in U-, L+, U+ order, so a rendering reads left to right like the
/// tree itself.
fn enumerate_dot(depth: usize, out: &mut impl Write) -> Result<(), Failure> {
    writeln!(out, "digraph pytree {{")?;
    writeln!(out, "  node [shape=box];")?;
    for level in 0..=depth {
        for (path, triple) in LevelWalk::new(level) {
            writeln!(
                out,
                "  {} [label=\"{},{},{}\"];",
                node_id(&path),
                triple.s(),
                triple.c(),
                triple.n()
            )?;
        }
    }
    for level in 0..depth {
        for (path, _) in LevelWalk::new(level) {
            let parent_id = node_id(&path);
            for kind in pytree_core::ChildKind::ALL {
                let mut kid = path.clone();
                kid.push(kind);
                writeln!(out, "  {} -> {};", parent_id, node_id(&kid))?;
            }
        }
    }
    writeln!(out, "}}")?;
    Ok(())
}
