//! JSON documents. Every document carries `"kind"` and `"version"`; meet and
//! join tables are never serialized.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bitop::BiTopSpace;
use crate::bits;
use crate::dlattice::{DBooleanAlgebra, DLattice};
use crate::ideals::{BMap, BVal};
use crate::lattice::{FiniteLattice, FinitePoset};
use crate::{Error, Result};

pub const VERSION: u64 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderDoc {
    pub elements: Vec<String>,
    pub leq: Vec<Vec<bool>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DLatticeDoc {
    pub plus: OrderDoc,
    pub minus: OrderDoc,
    pub con: Vec<[usize; 2]>,
    pub tot: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dagger: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiTopDoc {
    pub points: Vec<String>,
    pub tau_plus: Vec<Vec<usize>>,
    pub tau_minus: Vec<Vec<usize>>,
}

/// A parsed input document, before any structural validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Poset(OrderDoc),
    Lattice(OrderDoc),
    DLattice(DLatticeDoc),
    DBool(DLatticeDoc),
    BiTop(BiTopDoc),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Poset(_) => "poset",
            Document::Lattice(_) => "lattice",
            Document::DLattice(_) => "dlattice",
            Document::DBool(_) => "dbool",
            Document::BiTop(_) => "bitop",
        }
    }
}

/// Parses an enveloped document. Malformed JSON, missing fields, unknown
/// kinds and unknown versions are all errors.
pub fn parse_document(text: &str) -> Result<Document> {
    let v: Value = serde_json::from_str(text)?;
    let kind = v.get("kind").and_then(Value::as_str).ok_or_else(|| Error::Schema("missing \"kind\"".into()))?;
    let version = v.get("version").and_then(Value::as_u64).ok_or_else(|| Error::Schema("missing \"version\"".into()))?;
    if version != VERSION {
        return Err(Error::Schema(format!("unsupported version {version}")));
    }
    Ok(match kind {
        "poset" => Document::Poset(serde_json::from_value(v)?),
        "lattice" => Document::Lattice(serde_json::from_value(v)?),
        "dlattice" => Document::DLattice(serde_json::from_value(v)?),
        "dbool" => {
            let d: DLatticeDoc = serde_json::from_value(v)?;
            if d.dagger.is_none() {
                return Err(Error::Schema("dbool documents need \"dagger\"".into()));
            }
            Document::DBool(d)
        }
        "bitop" => Document::BiTop(serde_json::from_value(v)?),
        other => return Err(Error::UnknownKind(other.to_string())),
    })
}

fn envelope(kind: &str, body: Value) -> Value {
    let mut v = json!({ "kind": kind, "version": VERSION });
    if let (Some(m), Value::Object(b)) = (v.as_object_mut(), body) {
        m.extend(b);
    }
    v
}

pub fn order_doc(p: &FinitePoset) -> OrderDoc {
    OrderDoc { elements: p.labels().to_vec(), leq: p.leq_matrix() }
}

pub fn poset_from_doc(d: &OrderDoc) -> Result<FinitePoset> {
    FinitePoset::new(d.elements.clone(), &d.leq)
}

pub fn lattice_from_doc(d: &OrderDoc) -> Result<FiniteLattice> {
    FiniteLattice::from_poset(poset_from_doc(d)?)
}

pub fn dlattice_doc(dl: &DLattice) -> DLatticeDoc {
    DLatticeDoc {
        plus: order_doc(dl.plus().poset()),
        minus: order_doc(dl.minus().poset()),
        con: dl.con_pairs().into_iter().map(|(a, b)| [a, b]).collect(),
        tot: dl.tot_pairs().into_iter().map(|(a, b)| [a, b]).collect(),
        dagger: None,
    }
}

/// Builds the candidate without validating the d-lattice axioms.
pub fn dlattice_candidate(d: &DLatticeDoc) -> Result<DLattice> {
    let (p, m) = (lattice_from_doc(&d.plus)?, lattice_from_doc(&d.minus)?);
    for &[a, b] in d.con.iter().chain(&d.tot) {
        if a >= p.len() || b >= m.len() {
            return Err(Error::Schema(format!("pair [{a},{b}] out of range")));
        }
    }
    let pairs = |v: &[[usize; 2]]| v.iter().map(|&[a, b]| (a, b)).collect::<Vec<_>>();
    Ok(DLattice::from_parts(p, m, pairs(&d.con), pairs(&d.tot)))
}

/// Validates the candidate and, when present, checks the dagger against the d-complements.
pub fn dbool_from_doc(d: &DLatticeDoc) -> Result<DBooleanAlgebra> {
    let a = DBooleanAlgebra::from_dlattice(dlattice_candidate(d)?.validated()?)?;
    if let Some(dag) = &d.dagger {
        if dag.as_slice() != a.dagger_map() {
            return Err(Error::DaggerNotOrderReversing("dagger differs from the d-complement map".into()));
        }
    }
    Ok(a)
}

pub fn bitop_doc(x: &BiTopSpace) -> BiTopDoc {
    let fam = |f: &[bits::Mask]| f.iter().map(|&m| bits::members(m).collect()).collect();
    BiTopDoc { points: x.labels().to_vec(), tau_plus: fam(x.tau_plus()), tau_minus: fam(x.tau_minus()) }
}

pub fn bitop_from_doc(d: &BiTopDoc) -> Result<BiTopSpace> {
    let n = d.points.len();
    let fam = |f: &[Vec<usize>]| -> Result<Vec<bits::Mask>> {
        f.iter()
            .map(|s| {
                if let Some(&p) = s.iter().find(|&&p| p >= n) {
                    return Err(Error::Schema(format!("point {p} out of range")));
                }
                Ok(bits::from_indices(s.iter().copied()))
            })
            .collect()
    };
    BiTopSpace::new(d.points.clone(), fam(&d.tau_plus)?, fam(&d.tau_minus)?)
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("documents serialize")
}

pub fn poset_json(p: &FinitePoset) -> Value {
    envelope("poset", to_value(&order_doc(p)))
}

pub fn lattice_json(l: &FiniteLattice) -> Value {
    envelope("lattice", to_value(&order_doc(l.poset())))
}

pub fn dlattice_json(dl: &DLattice) -> Value {
    envelope("dlattice", to_value(&dlattice_doc(dl)))
}

pub fn dbool_json(a: &DBooleanAlgebra) -> Value {
    let mut d = dlattice_doc(a);
    d.dagger = Some(a.dagger_map().to_vec());
    envelope("dbool", to_value(&d))
}

pub fn bitop_json(x: &BiTopSpace) -> Value {
    envelope("bitop", to_value(&bitop_doc(x)))
}

/// `[0, "tt", "ff", 1]`-style value vector.
pub fn bmap_json(m: &BMap) -> Value {
    Value::Array(
        m.values
            .iter()
            .map(|v| match v {
                BVal::Zero => json!(0),
                BVal::One => json!(1),
                other => json!(other.as_str()),
            })
            .collect(),
    )
}

pub fn bmap_from_json(v: &Value) -> Result<BMap> {
    let arr = v.as_array().ok_or_else(|| Error::Schema("expected an array of 𝔹 values".into()))?;
    let values = arr
        .iter()
        .map(|x| match x {
            Value::Number(n) if n.as_u64() == Some(0) => Ok(BVal::Zero),
            Value::Number(n) if n.as_u64() == Some(1) => Ok(BVal::One),
            Value::String(s) if s == "tt" => Ok(BVal::Tt),
            Value::String(s) if s == "ff" => Ok(BVal::Ff),
            other => Err(Error::Schema(format!("not a 𝔹 value: {other}"))),
        })
        .collect::<Result<_>>()?;
    Ok(BMap { values })
}

/// Writes a value as pretty JSON with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitop::stone_space_from_poset;
    use crate::dlattice::{bool4, lambda};

    #[test]
    fn roundtrips() {
        let b = bool4();
        let v = dlattice_json(&b);
        let Document::DLattice(d) = parse_document(&v.to_string()).unwrap() else { panic!() };
        assert_eq!(dlattice_candidate(&d).unwrap(), b);
        let a = lambda(&FiniteLattice::chain(3)).unwrap();
        let Document::DBool(d) = parse_document(&dbool_json(&a).to_string()).unwrap() else { panic!() };
        assert_eq!(dbool_from_doc(&d).unwrap(), a);
        let x = stone_space_from_poset(&FinitePoset::chain(2));
        let Document::BiTop(d) = parse_document(&bitop_json(&x).to_string()).unwrap() else { panic!() };
        assert_eq!(bitop_from_doc(&d).unwrap(), x);
    }

    #[test]
    fn envelope_errors() {
        assert!(matches!(parse_document("{"), Err(Error::Json(_))));
        assert!(matches!(parse_document(r#"{"kind":"frob","version":1}"#), Err(Error::UnknownKind(_))));
        assert!(matches!(parse_document(r#"{"kind":"poset","version":2}"#), Err(Error::Schema(_))));
        assert!(matches!(parse_document(r#"{"kind":"poset","version":1}"#), Err(Error::Json(_))));
    }

    #[test]
    fn bmap_values() {
        let m = BMap { values: BVal::ALL.to_vec() };
        let v = bmap_json(&m);
        assert_eq!(v.to_string(), r#"[0,"tt","ff",1]"#);
        assert_eq!(bmap_from_json(&v).unwrap(), m);
    }
}
