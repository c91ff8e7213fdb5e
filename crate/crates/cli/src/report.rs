//! Result documents and their text rendering.

use std::fmt::Write as _;

use cp1moduli::cech::{BasisLabel, LabelKind, Witness};
use cp1moduli::io::{field_to_terms, TermDoc};
use cp1moduli::{BasisLayout, CohomologyClass, Deriv, ModuliPoint, Scalar};
use serde::Serialize;

#[derive(Serialize)]
pub struct LabelOut {
    pub index: usize,
    pub pair: [u8; 2],
    pub kind: &'static str,
    pub n: i64,
    pub section: String,
}

impl LabelOut {
    fn new(index: usize, label: &BasisLabel) -> Self {
        let kind = match label.kind {
            LabelKind::Dx => "dx",
            LabelKind::Dxi => "dxi",
        };
        Self { index, pair: [label.pair.0, label.pair.1], kind, n: label.n, section: label.to_string() }
    }
}

#[derive(Serialize)]
pub struct BasisOut {
    pub k: Vec<i64>,
    pub dimension: usize,
    pub labels: Vec<LabelOut>,
}

impl BasisOut {
    pub fn new(layout: &BasisLayout) -> Self {
        Self {
            k: layout.k().as_slice().to_vec(),
            dimension: layout.dimension(),
            labels: layout.labels().iter().enumerate().map(|(i, l)| LabelOut::new(i, l)).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct SupportOut {
    pub label: String,
    pub coeff: Scalar,
}

#[derive(Serialize)]
pub struct ClassOut {
    pub dimension: usize,
    pub coords: Vec<Scalar>,
    pub support: Vec<SupportOut>,
}

impl ClassOut {
    pub fn new(c: &CohomologyClass) -> Self {
        Self {
            dimension: c.layout().dimension(),
            coords: c.coords().to_vec(),
            support: c.support().map(|(l, v)| SupportOut { label: l.to_string(), coeff: v.clone() }).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct WitnessOut {
    pub w0: Vec<TermDoc>,
    pub w1: Vec<TermDoc>,
}

impl WitnessOut {
    pub fn new(w: &Witness) -> Self {
        Self { w0: field_to_terms(&w.w0), w1: field_to_terms(&w.w1) }
    }
}

#[derive(Serialize)]
pub struct ReduceOut {
    pub k: Vec<i64>,
    pub class: ClassOut,
    pub zero: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessOut>,
}

#[derive(Serialize)]
pub struct ActOut {
    pub k: Vec<i64>,
    pub automorphism: Vec<Vec<String>>,
    pub determinant: Scalar,
    pub formula: Vec<TermDoc>,
    pub oracle: Vec<TermDoc>,
    pub agree: bool,
    pub class_before: ClassOut,
    pub class_after: ClassOut,
}

#[derive(Serialize)]
pub struct CoboundaryOut {
    pub k: Vec<i64>,
    pub coboundary: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<ClassOut>,
}

#[derive(Serialize)]
pub struct CompareOut {
    pub k: Vec<i64>,
    pub isomorphic: bool,
    pub left: ModuliPoint,
    pub right: ModuliPoint,
    /// `D` with `D W_left = W_right`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Vec<Scalar>>>,
}

pub enum Report {
    Basis(BasisOut),
    Reduce(ReduceOut),
    Classify(ModuliPoint),
    Act(ActOut),
    Coboundary(CoboundaryOut),
    Compare(CompareOut),
}

impl Report {
    pub fn json(&self) -> String {
        let text = match self {
            Report::Basis(r) => serde_json::to_string(r),
            Report::Reduce(r) => serde_json::to_string(r),
            Report::Classify(r) => serde_json::to_string(r),
            Report::Act(r) => serde_json::to_string(r),
            Report::Coboundary(r) => serde_json::to_string(r),
            Report::Compare(r) => serde_json::to_string(r),
        };
        text.expect("reports serialize") + "\n"
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let o = &mut out;
        match self {
            Report::Basis(r) => {
                line(o, "k", &ktuple(&r.k));
                line(o, "dimension", &r.dimension.to_string());
                for l in &r.labels {
                    let _ = writeln!(o, "  [{}] ({},{}) {} n={}: {}", l.index, l.pair[0], l.pair[1], l.kind, l.n, l.section);
                }
            }
            Report::Reduce(r) => {
                line(o, "k", &ktuple(&r.k));
                class(o, "class", &r.class);
                line(o, "zero", &r.zero.to_string());
                if let Some(w) = &r.witness {
                    witness(o, w);
                }
            }
            Report::Classify(p) => point(o, "point", p),
            Report::Act(r) => {
                line(o, "k", &ktuple(&r.k));
                let rows: Vec<String> = r.automorphism.iter().map(|row| format!("[{}]", row.join(", "))).collect();
                line(o, "automorphism", &rows.join(" "));
                line(o, "determinant", &r.determinant.to_string());
                terms(o, "formula", &r.formula);
                terms(o, "oracle", &r.oracle);
                line(o, "agree", &r.agree.to_string());
                class(o, "class before", &r.class_before);
                class(o, "class after", &r.class_after);
            }
            Report::Coboundary(r) => {
                line(o, "k", &ktuple(&r.k));
                line(o, "coboundary", &r.coboundary.to_string());
                if let Some(w) = &r.witness {
                    witness(o, w);
                }
                if let Some(c) = &r.certificate {
                    class(o, "certificate", c);
                }
            }
            Report::Compare(r) => {
                line(o, "k", &ktuple(&r.k));
                line(o, "isomorphic", &r.isomorphic.to_string());
                point(o, "left", &r.left);
                point(o, "right", &r.right);
                if let Some(d) = &r.witness {
                    let rows: Vec<String> = d.iter().map(|row| format!("[{}]", join(row))).collect();
                    line(o, "witness", &rows.join(" "));
                }
            }
        }
        out
    }
}

fn line(o: &mut String, key: &str, value: &str) {
    let _ = writeln!(o, "{key}: {value}");
}

fn ktuple(k: &[i64]) -> String {
    let parts: Vec<String> = k.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

fn join(v: &[Scalar]) -> String {
    v.iter().map(Scalar::to_string).collect::<Vec<_>>().join(", ")
}

fn class(o: &mut String, key: &str, c: &ClassOut) {
    line(o, key, &format!("dimension {}, {} nonzero", c.dimension, c.support.len()));
    for s in &c.support {
        let _ = writeln!(o, "  ({}) {}", s.coeff, s.label);
    }
}

fn term_text(t: &TermDoc) -> String {
    let word: String = t.word.iter().map(|i| format!("xi{i}")).collect();
    let d = match t.deriv.0 {
        Deriv::X => "d/dx".to_string(),
        Deriv::Xi(i) => format!("d/dxi{i}"),
    };
    format!("({}) x^{} {} {}", t.coeff, t.xpow, word, d)
}

fn terms(o: &mut String, key: &str, ts: &[TermDoc]) {
    line(o, key, &format!("{} terms", ts.len()));
    for t in ts {
        let _ = writeln!(o, "  {}", term_text(t));
    }
}

fn witness(o: &mut String, w: &WitnessOut) {
    terms(o, "w0", &w.w0);
    terms(o, "w1", &w.w1);
}

fn point(o: &mut String, key: &str, p: &ModuliPoint) {
    match p {
        ModuliPoint::M3 { k, rank, echelon, .. } => {
            line(o, key, &format!("m3 k={k} rank={rank}"));
            for row in echelon {
                let _ = writeln!(o, "  [{}]", join(row));
            }
        }
        ModuliPoint::M2Split => line(o, key, "m2 split"),
        ModuliPoint::M2Point(c) => line(o, key, &format!("m2 [{}]", join(c))),
    }
}
