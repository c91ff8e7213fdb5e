//! `cp1moduli`: batch reduction, action and classification of gluing
//! cocycles. Reads one JSON job document from `--file` or stdin and writes
//! one result document to stdout.
//!
//! Exit codes: 0 ok, 1 I/O, 2 malformed input, 3 term outside `T_2`,
//! 4 exponent window overflow, 5 unsupported case, 6 degree bound or bad
//! determinant.

mod report;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cp1moduli::aut::{int_action, int_action_formula};
use cp1moduli::cech::{basis, is_coboundary, reduce, CoboundaryDecision, CoboundarySolver};
use cp1moduli::io::{automorphism_to_doc, field_to_terms};
use cp1moduli::moduli::{classify, orbit_witness, to_matrix};
use cp1moduli::{CohomologyClass, Error, JobDocument, KTuple};

use report::{ActOut, BasisOut, ClassOut, CoboundaryOut, CompareOut, ReduceOut, Report, WitnessOut};

#[derive(Parser)]
#[command(name = "cp1moduli", version, about = "Classify supermanifolds over CP^1 from gluing cocycles")]
struct Cli {
    /// Retract degrees, e.g. 2,2,2 (basis only)
    #[arg(long, global = true, allow_hyphen_values = true)]
    k: Option<String>,

    /// Job document; stdin when absent
    #[arg(long, global = true)]
    file: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// List the basis of H^1(T_2) for a retract
    Basis,
    /// Reduce a cocycle to class coordinates
    Reduce,
    /// Moduli point of a cocycle or class
    Classify,
    /// Apply a bundle automorphism
    Act,
    /// Decide whether a cocycle is a coboundary
    IsCoboundary,
    /// Compare the classes of `cocycle` and `other`
    Compare,
}

enum Failure {
    Io(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Io(_) => 1,
            Failure::Core(e) => match e {
                Error::NotInT2 { .. } => 3,
                Error::WindowOverflow { .. } => 4,
                Error::Unsupported(_) => 5,
                Error::DegreeBound { .. } | Error::BadDeterminant(_) => 6,
                _ => 2,
            },
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Io(msg) => write!(f, "i/o error: {msg}"),
            Failure::Core(e) => write!(f, "{e}"),
        }
    }
}

fn read_document(file: Option<&PathBuf>) -> Result<JobDocument, Failure> {
    let text = match file {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Io(e.to_string()))?;
            s
        }
    };
    Ok(JobDocument::parse(&text)?)
}

/// The class carried by the document: `class` if present, else the reduced
/// cocycle.
fn document_class(doc: &JobDocument) -> Result<CohomologyClass, Error> {
    match doc.class()? {
        Some(c) => Ok(c),
        None => Ok(reduce(&doc.cocycle()?)),
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    if let Command::Basis = cli.command {
        let k: KTuple = match &cli.k {
            Some(k) => k.parse()?,
            None => read_document(cli.file.as_ref())?.ktuple()?,
        };
        return Ok(Report::Basis(BasisOut::new(&basis(&k))));
    }
    let doc = read_document(cli.file.as_ref())?;
    if let Some(k) = &cli.k {
        let k: KTuple = k.parse()?;
        if k.as_slice() != doc.k.as_slice() {
            return Err(Error::KTupleMismatch { left: k.to_string(), right: doc.ktuple()?.to_string() }.into());
        }
    }
    let k = doc.k.clone();
    Ok(match cli.command {
        Command::Basis => unreachable!("handled above"),
        Command::Reduce => {
            let v = doc.cocycle()?;
            let class = reduce(&v);
            let witness = if class.is_zero() {
                let w = CoboundarySolver::for_cocycle(&v)?.solve(&v)?;
                Some(WitnessOut::new(&w.ok_or_else(|| Error::Dimension("zero class without a witness".into()))?))
            } else {
                None
            };
            Report::Reduce(ReduceOut { k, class: ClassOut::new(&class), zero: class.is_zero(), witness })
        }
        Command::Classify => Report::Classify(classify(&document_class(&doc)?)?),
        Command::Act => {
            let a = doc
                .automorphism()?
                .ok_or_else(|| Error::Parse("act needs an \"automorphism\" matrix".into()))?;
            let v = doc.cocycle()?;
            let formula = int_action_formula(&a, &v)?;
            let oracle = int_action(&a, &v)?;
            Report::Act(ActOut {
                k,
                automorphism: automorphism_to_doc(&a),
                determinant: a.determinant().clone(),
                formula: field_to_terms(formula.section()),
                oracle: field_to_terms(oracle.section()),
                agree: formula == oracle,
                class_before: ClassOut::new(&reduce(&v)),
                class_after: ClassOut::new(&reduce(&oracle)),
            })
        }
        Command::IsCoboundary => {
            let out = match is_coboundary(&doc.cocycle()?)? {
                CoboundaryDecision::Coboundary(w) => {
                    CoboundaryOut { k, coboundary: true, witness: Some(WitnessOut::new(&w)), certificate: None }
                }
                CoboundaryDecision::NotCoboundary(c) => {
                    CoboundaryOut { k, coboundary: false, witness: None, certificate: Some(ClassOut::new(&c)) }
                }
            };
            Report::Coboundary(out)
        }
        Command::Compare => {
            let other = doc.other()?.ok_or_else(|| Error::Parse("compare needs an \"other\" cocycle".into()))?;
            let (left, right) = (document_class(&doc)?, reduce(&other));
            let isomorphic = cp1moduli::moduli::isomorphic(&left, &right)?;
            let witness = if isomorphic && doc.k.len() == 3 {
                orbit_witness(&to_matrix(&left)?, &to_matrix(&right)?)?.map(|d| d.to_rows())
            } else {
                None
            };
            Report::Compare(CompareOut { k, isomorphic, left: classify(&left)?, right: classify(&right)?, witness })
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let out = match cli.format {
                Format::Json => report.json(),
                Format::Text => report.text(),
            };
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("cp1moduli: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
