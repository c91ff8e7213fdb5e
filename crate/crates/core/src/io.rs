//! JSON job documents.
//!
//! ```json
//! {"version":1,"k":[2,2,2],
//!  "cocycle":[{"coeff":"1","xpow":-2,"word":[1,2],"deriv":"x"}],
//!  "automorphism":[["1","0","0"],["0","1","0"],["0","0","1"]]}
//! ```
//!
//! A term is `coeff * x^xpow * xi_word * d`, `deriv` being `"x"` or the index
//! of an odd derivation. Words may be listed in any order; the coefficient
//! absorbs the reordering sign.

use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::aut::BundleAut;
use crate::cech::{basis, Cocycle, CohomologyClass};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::scalar::Scalar;
use crate::sections::{Chart, Deriv, KTuple, VectorField, Word};

/// The only document version understood.
pub const VERSION: u32 = 1;

/// `"x"` or an odd index on the wire.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DerivDoc(pub Deriv);

impl Serialize for DerivDoc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0 {
            Deriv::X => s.serialize_str("x"),
            Deriv::Xi(i) => s.serialize_u8(i),
        }
    }
}

impl<'de> Deserialize<'de> for DerivDoc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = DerivDoc;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("\"x\" or a positive odd-coordinate index")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<DerivDoc, E> {
                match v {
                    "x" => Ok(DerivDoc(Deriv::X)),
                    _ => Err(E::invalid_value(de::Unexpected::Str(v), &self)),
                }
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<DerivDoc, E> {
                match u8::try_from(v) {
                    Ok(i) if i >= 1 => Ok(DerivDoc(Deriv::Xi(i))),
                    _ => Err(E::invalid_value(de::Unexpected::Unsigned(v), &self)),
                }
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<DerivDoc, E> {
                u64::try_from(v)
                    .map_err(|_| E::invalid_value(de::Unexpected::Signed(v), &self))
                    .and_then(|v| self.visit_u64(v))
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub coeff: Scalar,
    pub xpow: i64,
    pub word: Vec<u8>,
    pub deriv: DerivDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobDocument {
    pub version: u32,
    pub k: Vec<i64>,
    #[serde(default)]
    pub cocycle: Vec<TermDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub automorphism: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub other: Option<Vec<TermDoc>>,
    /// Class coordinates in the basis of `k`, in place of a cocycle.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<Vec<Scalar>>,
}

/// Sum the terms into a field on `chart`.
pub fn terms_to_field(m: usize, chart: Chart, terms: &[TermDoc]) -> Result<VectorField> {
    let mut v = VectorField::zero(m, chart);
    for t in terms {
        if t.word.iter().any(|&i| i == 0 || usize::from(i) > m) {
            return Err(Error::Parse(format!("word {:?} uses an index outside 1..={m}", t.word)));
        }
        let (sign, w) = Word::from_indices(&t.word)
            .ok_or_else(|| Error::Parse(format!("word {:?} repeats a generator", t.word)))?;
        if let Deriv::Xi(i) = t.deriv.0 {
            if usize::from(i) > m {
                return Err(Error::Parse(format!("derivation index {i} outside 1..={m}")));
            }
        }
        let c = if sign < 0 { -t.coeff.clone() } else { t.coeff.clone() };
        v.add_term(t.deriv.0, w, t.xpow, &c);
    }
    Ok(v)
}

/// Canonical term list: derivations in order, words sorted.
pub fn field_to_terms(v: &VectorField) -> Vec<TermDoc> {
    v.terms()
        .into_iter()
        .map(|(d, w, e, c)| TermDoc { coeff: c, xpow: e, word: w.indices().collect(), deriv: DerivDoc(d) })
        .collect()
}

impl JobDocument {
    /// A document with just `k` and a cocycle.
    pub fn new(v: &Cocycle) -> Self {
        Self {
            version: VERSION,
            k: v.k().as_slice().to_vec(),
            cocycle: field_to_terms(v.section()),
            automorphism: None,
            other: None,
            class: None,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let doc: JobDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.version != VERSION {
            return Err(Error::Parse(format!("unsupported document version {}", doc.version)));
        }
        KTuple::new(doc.k.clone())?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("documents serialize")
    }

    pub fn ktuple(&self) -> Result<KTuple> {
        KTuple::new(self.k.clone())
    }

    pub fn cocycle(&self) -> Result<Cocycle> {
        let k = self.ktuple()?;
        Cocycle::new(k.clone(), terms_to_field(k.m(), Chart::U0, &self.cocycle)?)
    }

    pub fn other(&self) -> Result<Option<Cocycle>> {
        let k = self.ktuple()?;
        self.other
            .as_ref()
            .map(|terms| Cocycle::new(k.clone(), terms_to_field(k.m(), Chart::U0, terms)?))
            .transpose()
    }

    pub fn automorphism(&self) -> Result<Option<BundleAut>> {
        let Some(rows) = &self.automorphism else { return Ok(None) };
        let entries = rows
            .iter()
            .map(|row| row.iter().map(|s| s.parse::<LaurentPoly>()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        BundleAut::new(self.ktuple()?, entries).map(Some)
    }

    pub fn class(&self) -> Result<Option<CohomologyClass>> {
        let Some(coords) = &self.class else { return Ok(None) };
        CohomologyClass::from_coords(basis(&self.ktuple()?), coords.clone()).map(Some)
    }
}

/// Automorphism entries as polynomial strings.
pub fn automorphism_to_doc(a: &BundleAut) -> Vec<Vec<String>> {
    a.entries().iter().map(|row| row.iter().map(LaurentPoly::to_string).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"{"version":1,"k":[2,2,2],
        "cocycle":[{"coeff":"1","xpow":-2,"word":[1,2],"deriv":"x"},
                   {"coeff":"1/2+i","xpow":-1,"word":[3,2,1],"deriv":3}],
        "automorphism":[["2","0","0"],["0","1","0"],["0","0","1"]]}"#;

    #[test]
    fn parse_and_normalize() {
        let doc = JobDocument::parse(SAMPLE).unwrap();
        let v = doc.cocycle().unwrap();
        let terms = field_to_terms(v.section());
        assert_eq!(terms[1].word, vec![1, 2, 3]);
        assert_eq!(terms[1].coeff, -"1/2+i".parse::<Scalar>().unwrap());
        assert_eq!(doc.automorphism().unwrap().unwrap().determinant(), &Scalar::from_int(2));
        assert_eq!(doc.other().unwrap(), None);
    }

    #[test]
    fn round_trip() {
        let doc = JobDocument::parse(SAMPLE).unwrap();
        assert_eq!(JobDocument::parse(&doc.to_json()).unwrap(), doc);
        let canonical = JobDocument::new(&doc.cocycle().unwrap());
        let again = JobDocument::parse(&canonical.to_json()).unwrap();
        assert_eq!(again.cocycle().unwrap(), doc.cocycle().unwrap());
        assert_eq!(again, canonical);
    }

    #[test]
    fn rejections() {
        let parse = |s: &str| JobDocument::parse(s);
        assert!(matches!(parse(r#"{"version":2,"k":[1,1,1]}"#), Err(Error::Parse(_))));
        assert!(matches!(parse(r#"{"version":1,"k":[1,1,1],"extra":0}"#), Err(Error::Parse(_))));
        assert!(matches!(parse(r#"{"version":1,"k":[1]}"#), Err(Error::InvalidKTuple(_))));
        let bad_word = parse(r#"{"version":1,"k":[1,1,1],"cocycle":[{"coeff":"1","xpow":0,"word":[1,1],"deriv":"x"}]}"#);
        assert!(matches!(bad_word.unwrap().cocycle(), Err(Error::Parse(_))));
        let bad_deriv = r#"{"version":1,"k":[1,1,1],"cocycle":[{"coeff":"1","xpow":0,"word":[1,2],"deriv":"y"}]}"#;
        assert!(matches!(parse(bad_deriv), Err(Error::Parse(_))));
        let not_t2 = parse(r#"{"version":1,"k":[1,1,1],"cocycle":[{"coeff":"1","xpow":0,"word":[1],"deriv":"x"}]}"#);
        assert!(matches!(not_t2.unwrap().cocycle(), Err(Error::NotInT2 { .. })));
        let degree = parse(r#"{"version":1,"k":[2,1,1],"automorphism":[["1","x","0"],["0","1","0"],["0","0","1"]]}"#);
        assert!(matches!(degree.unwrap().automorphism(), Err(Error::DegreeBound { .. })));
        let class = parse(r#"{"version":1,"k":[3,2],"class":["1"]}"#);
        assert!(class.unwrap().class().is_err());
    }
}
