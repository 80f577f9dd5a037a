//! Deterministic corpora of small structures: unlabeled posets and what is
//! built from them.

use std::collections::BTreeMap;

use serde_json::Value;

use crate::bitop::{stone_space_from_poset, BiTopSpace};
use crate::dlattice::{lambda, DBooleanAlgebra};
use crate::io;
use crate::lattice::{birkhoff, numbered, FiniteLattice, FinitePoset};
use crate::{Error, Result};

/// Largest poset size the generators accept.
pub const POSET_LIMIT: usize = 6;

/// One representative per isomorphism class of posets on exactly `n` points.
///
/// Every poset has a natural labelling (a linear extension), so it is enough
/// to range over strict relations contained in `i < j`.
pub fn unlabeled_posets(n: usize) -> Vec<FinitePoset> {
    assert!(n <= POSET_LIMIT, "unlabeled_posets supports at most {POSET_LIMIT} points");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut classes: BTreeMap<u64, FinitePoset> = BTreeMap::new();
    for code in 0u64..(1 << pairs.len()) {
        let mut rel = vec![vec![false; n]; n];
        for (i, row) in rel.iter_mut().enumerate() {
            row[i] = true;
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            rel[i][j] = code >> k & 1 == 1;
        }
        let transitive =
            (0..n).all(|i| (0..n).all(|j| !rel[i][j] || (0..n).all(|k| !rel[j][k] || rel[i][k])));
        if !transitive {
            continue;
        }
        let p = FinitePoset::new(numbered(n), &rel).expect("transitive natural relation is a partial order");
        classes.entry(p.canonical_code()).or_insert(p);
    }
    classes.into_values().collect()
}

/// Posets with `min..=max` points, grouped by size.
pub fn posets_between(min: usize, max: usize) -> Result<Vec<FinitePoset>> {
    if max > POSET_LIMIT {
        return Err(Error::BoundsTooLarge(format!("posets are generated up to {POSET_LIMIT} points")));
    }
    Ok((min..=max).flat_map(unlabeled_posets).collect())
}

/// The standard corpus: for each poset `P`, its Birkhoff lattice, the
/// d-Boolean algebra `λ(birkhoff P)` and the Stone space on `P`.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub posets: Vec<FinitePoset>,
    pub lattices: Vec<FiniteLattice>,
    pub algebras: Vec<DBooleanAlgebra>,
    pub spaces: Vec<BiTopSpace>,
}

impl Corpus {
    /// Nonempty posets up to `max` points.
    pub fn build(max: usize) -> Result<Self> {
        let posets = posets_between(1, max)?;
        let lattices: Vec<FiniteLattice> = posets.iter().map(birkhoff).collect();
        let algebras = lattices.iter().map(lambda).collect::<Result<_>>()?;
        let spaces = posets.iter().map(stone_space_from_poset).collect();
        Ok(Corpus { posets, lattices, algebras, spaces })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusKind {
    Posets,
    Lattices,
    DBool,
    StoneSpaces,
}

impl CorpusKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CorpusKind::Posets => "posets",
            CorpusKind::Lattices => "lattices",
            CorpusKind::DBool => "dbool",
            CorpusKind::StoneSpaces => "stone-spaces",
        }
    }
}

impl std::str::FromStr for CorpusKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "posets" => Ok(CorpusKind::Posets),
            "lattices" => Ok(CorpusKind::Lattices),
            "dbool" => Ok(CorpusKind::DBool),
            "stone-spaces" => Ok(CorpusKind::StoneSpaces),
            other => Err(Error::Precondition(format!("unknown corpus kind {other:?}"))),
        }
    }
}

/// Posets a corpus of `kind` is built from. The empty poset has no d-Boolean
/// algebra, since its Birkhoff lattice is trivial.
pub fn source_posets(kind: CorpusKind, min: usize, max: usize) -> Result<Vec<FinitePoset>> {
    let min = if kind == CorpusKind::DBool { min.max(1) } else { min };
    posets_between(min, max)
}

/// JSON documents for every source poset, in generation order.
pub fn generate(kind: CorpusKind, min: usize, max: usize) -> Result<Vec<Value>> {
    let posets = source_posets(kind, min, max)?;
    posets
        .iter()
        .map(|p| {
            Ok(match kind {
                CorpusKind::Posets => io::poset_json(p),
                CorpusKind::Lattices => io::lattice_json(&birkhoff(p)),
                CorpusKind::DBool => io::dbool_json(&lambda(&birkhoff(p))?),
                CorpusKind::StoneSpaces => io::bitop_json(&stone_space_from_poset(p)),
            })
        })
        .collect()
}
