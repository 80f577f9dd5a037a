//! d-lattices in product coordinates `L = L₊ × L₋`.
//!
//! A carrier element `(a, b)` has id `a + b * |L₊|`. The information order
//! is componentwise; `tt = (1, 0)` and `ff = (0, 1)`. In the finite case a
//! directed set has a maximum, so the Scott-closed requirement on `con`
//! reduces to `con` being a down-set.

use std::ops::Deref;

use fixedbitset::FixedBitSet;

use crate::bits::{self, Mask};
use crate::lattice::{complement, lattice_homs, lattice_isos, Elem, FiniteLattice, LatticeHom};
use crate::report::{fail, StructReport};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Plus => Side::Minus,
            Side::Minus => Side::Plus,
        }
    }
}

/// A d-lattice candidate or validated d-lattice.
///
/// [`DLattice::new`] validates; [`DLattice::from_parts`] does not, so that
/// malformed candidates can be fed to [`DLattice::validate`].
#[derive(Clone, Debug)]
pub struct DLattice {
    plus: FiniteLattice,
    minus: FiniteLattice,
    con: FixedBitSet,
    tot: FixedBitSet,
    names: Option<Vec<String>>,
}

impl PartialEq for DLattice {
    fn eq(&self, other: &Self) -> bool {
        self.plus == other.plus && self.minus == other.minus && self.con == other.con && self.tot == other.tot
    }
}

impl Eq for DLattice {}

impl DLattice {
    pub fn from_parts(
        plus: FiniteLattice,
        minus: FiniteLattice,
        con: impl IntoIterator<Item = (Elem, Elem)>,
        tot: impl IntoIterator<Item = (Elem, Elem)>,
    ) -> Self {
        let size = plus.len() * minus.len();
        let np = plus.len();
        let mut c = FixedBitSet::with_capacity(size);
        let mut t = FixedBitSet::with_capacity(size);
        for (a, b) in con {
            c.insert(a + b * np);
        }
        for (a, b) in tot {
            t.insert(a + b * np);
        }
        DLattice { plus, minus, con: c, tot: t, names: None }
    }

    /// Builds the candidate and validates it.
    pub fn new(
        plus: FiniteLattice,
        minus: FiniteLattice,
        con: impl IntoIterator<Item = (Elem, Elem)>,
        tot: impl IntoIterator<Item = (Elem, Elem)>,
    ) -> Result<Self> {
        Self::from_parts(plus, minus, con, tot).validated()
    }

    pub fn validated(self) -> Result<Self> {
        match self.validate() {
            StructReport::Pass => Ok(self),
            StructReport::Fail(v) if v.rule == DEGENERATE => Err(Error::DegeneratePair),
            StructReport::Fail(v) => Err(Error::InvalidDLattice(v)),
        }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.size());
        self.names = Some(names);
        self
    }

    pub fn plus(&self) -> &FiniteLattice {
        &self.plus
    }

    pub fn minus(&self) -> &FiniteLattice {
        &self.minus
    }

    pub fn side(&self, side: Side) -> &FiniteLattice {
        match side {
            Side::Plus => &self.plus,
            Side::Minus => &self.minus,
        }
    }

    /// Number of carrier elements `|L₊|·|L₋|`.
    pub fn size(&self) -> usize {
        self.plus.len() * self.minus.len()
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size()
    }

    #[inline]
    pub fn elem(&self, a: Elem, b: Elem) -> Elem {
        a + b * self.plus.len()
    }

    #[inline]
    pub fn coords(&self, x: Elem) -> (Elem, Elem) {
        (x % self.plus.len(), x / self.plus.len())
    }

    /// The carrier element of a one-sided element: `(a, 0)` or `(0, b)`.
    pub fn embed(&self, side: Side, a: Elem) -> Elem {
        match side {
            Side::Plus => self.elem(a, self.minus.bottom()),
            Side::Minus => self.elem(self.plus.bottom(), a),
        }
    }

    pub fn label(&self, x: Elem) -> String {
        if let Some(n) = &self.names {
            return n[x].clone();
        }
        let (a, b) = self.coords(x);
        format!("({},{})", self.plus.label(a), self.minus.label(b))
    }

    pub fn side_label(&self, side: Side, a: Elem) -> String {
        self.side(side).label(a).to_string()
    }

    pub fn bottom(&self) -> Elem {
        self.elem(self.plus.bottom(), self.minus.bottom())
    }

    pub fn top(&self) -> Elem {
        self.elem(self.plus.top(), self.minus.top())
    }

    pub fn tt(&self) -> Elem {
        self.elem(self.plus.top(), self.minus.bottom())
    }

    pub fn ff(&self) -> Elem {
        self.elem(self.plus.bottom(), self.minus.top())
    }

    pub fn in_con(&self, x: Elem) -> bool {
        self.con.contains(x)
    }

    pub fn in_tot(&self, x: Elem) -> bool {
        self.tot.contains(x)
    }

    pub fn con_pair(&self, a: Elem, b: Elem) -> bool {
        self.in_con(self.elem(a, b))
    }

    pub fn tot_pair(&self, a: Elem, b: Elem) -> bool {
        self.in_tot(self.elem(a, b))
    }

    pub fn con(&self) -> impl Iterator<Item = Elem> + '_ {
        self.con.ones()
    }

    pub fn tot(&self) -> impl Iterator<Item = Elem> + '_ {
        self.tot.ones()
    }

    pub fn con_len(&self) -> usize {
        self.con.count_ones(..)
    }

    pub fn tot_len(&self) -> usize {
        self.tot.count_ones(..)
    }

    pub fn con_pairs(&self) -> Vec<(Elem, Elem)> {
        self.con().map(|x| self.coords(x)).collect()
    }

    pub fn tot_pairs(&self) -> Vec<(Elem, Elem)> {
        self.tot().map(|x| self.coords(x)).collect()
    }

    /// Information order.
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        let ((a1, b1), (a2, b2)) = (self.coords(x), self.coords(y));
        self.plus.leq(a1, a2) && self.minus.leq(b1, b2)
    }

    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        let ((a1, b1), (a2, b2)) = (self.coords(x), self.coords(y));
        self.elem(self.plus.meet(a1, a2), self.minus.meet(b1, b2))
    }

    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        let ((a1, b1), (a2, b2)) = (self.coords(x), self.coords(y));
        self.elem(self.plus.join(a1, a2), self.minus.join(b1, b2))
    }

    /// Logic order `⊑`: larger plus coordinate, smaller minus coordinate.
    pub fn logic_leq(&self, x: Elem, y: Elem) -> bool {
        let ((a1, b1), (a2, b2)) = (self.coords(x), self.coords(y));
        self.plus.leq(a1, a2) && self.minus.leq(b2, b1)
    }

    /// `x ⊓ y = (x ∧ ff) ∨ (y ∧ ff) ∨ (x ∧ y)`, evaluated in the information order.
    pub fn logic_meet(&self, x: Elem, y: Elem) -> Elem {
        let ff = self.ff();
        self.join(self.join(self.meet(x, ff), self.meet(y, ff)), self.meet(x, y))
    }

    /// `x ⊔ y = (x ∧ tt) ∨ (y ∧ tt) ∨ (x ∧ y)`.
    pub fn logic_join(&self, x: Elem, y: Elem) -> Elem {
        let tt = self.tt();
        self.join(self.join(self.meet(x, tt), self.meet(y, tt)), self.meet(x, y))
    }

    /// Coordinatewise form `(a₁ ∧ a₂, b₁ ∨ b₂)` of the logic meet.
    pub fn logic_meet_coords(&self, x: Elem, y: Elem) -> Elem {
        let ((a1, b1), (a2, b2)) = (self.coords(x), self.coords(y));
        self.elem(self.plus.meet(a1, a2), self.minus.join(b1, b2))
    }

    pub fn logic_join_coords(&self, x: Elem, y: Elem) -> Elem {
        let ((a1, b1), (a2, b2)) = (self.coords(x), self.coords(y));
        self.elem(self.plus.join(a1, a2), self.minus.meet(b1, b2))
    }

    /// Checks the d-lattice axioms and reports the first one that fails.
    pub fn validate(&self) -> StructReport {
        let n = self.size();
        if self.con.len() < n || self.tot.len() < n || self.con.ones().chain(self.tot.ones()).any(|x| x >= n) {
            fail!("pairs in range");
        }
        if self.plus.is_trivial() || self.minus.is_trivial() {
            fail!(DEGENERATE);
        }
        let (tt, ff) = (self.tt(), self.ff());
        for x in [tt, ff] {
            if !self.in_con(x) {
                fail!("con–tt,ff", self.label(x));
            }
        }
        for x in [tt, ff] {
            if !self.in_tot(x) {
                fail!("tot–tt,ff", self.label(x));
            }
        }
        for x in self.con() {
            let (a, b) = self.coords(x);
            for a2 in bits::members(self.plus.down_set(a)) {
                for b2 in bits::members(self.minus.down_set(b)) {
                    if !self.con_pair(a2, b2) {
                        fail!("con down-set", self.label(x), self.label(self.elem(a2, b2)));
                    }
                }
            }
        }
        for x in self.tot() {
            let (a, b) = self.coords(x);
            for a2 in bits::members(self.plus.up_set(a)) {
                for b2 in bits::members(self.minus.up_set(b)) {
                    if !self.tot_pair(a2, b2) {
                        fail!("tot up-set", self.label(x), self.label(self.elem(a2, b2)));
                    }
                }
            }
        }
        for (name, set) in [("con", &self.con), ("tot", &self.tot)] {
            for x in set.ones() {
                for y in set.ones() {
                    if !set.contains(self.logic_meet(x, y)) {
                        let rule = if name == "con" { "con ⊓-closed" } else { "tot ⊓-closed" };
                        fail!(rule, self.label(x), self.label(y));
                    }
                    if !set.contains(self.logic_join(x, y)) {
                        let rule = if name == "con" { "con ⊔-closed" } else { "tot ⊔-closed" };
                        fail!(rule, self.label(x), self.label(y));
                    }
                }
            }
        }
        for alpha in self.con() {
            let (a1, b1) = self.coords(alpha);
            for beta in self.tot() {
                let (a2, b2) = self.coords(beta);
                if (a1 == a2 || b1 == b2) && !self.leq(alpha, beta) {
                    fail!(CON_TOT, self.label(alpha), self.label(beta));
                }
            }
        }
        StructReport::Pass
    }

    /// The d-complement of a one-sided element, as an element of the other side.
    ///
    /// For `a ∈ L₊` this is the unique `b ∈ L₋` with `(a, b) ∈ con ∩ tot`.
    pub fn d_complement(&self, side: Side, a: Elem) -> Option<Elem> {
        match side {
            Side::Plus => self.minus.elements().find(|&b| self.con_pair(a, b) && self.tot_pair(a, b)),
            Side::Minus => self.plus.elements().find(|&p| self.con_pair(p, a) && self.tot_pair(p, a)),
        }
    }

    /// [`Self::d_complement`] on carrier elements; `x` must lie on the given side.
    pub fn d_complement_of(&self, x: Elem, side: Side) -> Option<Elem> {
        let (a, b) = self.coords(x);
        match side {
            Side::Plus => {
                assert_eq!(b, self.minus.bottom(), "element is not on the plus side");
                self.d_complement(side, a).map(|c| self.embed(Side::Minus, c))
            }
            Side::Minus => {
                assert_eq!(a, self.plus.bottom(), "element is not on the minus side");
                self.d_complement(side, b).map(|c| self.embed(Side::Plus, c))
            }
        }
    }

    /// Bitmask of d-complemented elements of one side.
    pub fn d_complemented(&self, side: Side) -> Mask {
        bits::from_indices(self.side(side).elements().filter(|&a| self.d_complement(side, a).is_some()))
    }

    pub fn is_d_boolean(&self) -> bool {
        self.d_complemented(Side::Plus) == self.plus.all() && self.d_complemented(Side::Minus) == self.minus.all()
    }

    /// The logic-order lattice `(L, ⊑)`.
    pub fn logic_lattice(&self) -> Result<FiniteLattice> {
        let labels = self.elements().map(|x| self.label(x)).collect();
        FiniteLattice::from_poset(crate::lattice::FinitePoset::from_fn(labels, |x, y| self.logic_leq(x, y))?)
    }

    /// The information-order lattice `(L, ≤)` as a single lattice.
    pub fn info_lattice(&self) -> Result<FiniteLattice> {
        let labels = self.elements().map(|x| self.label(x)).collect();
        FiniteLattice::from_poset(crate::lattice::FinitePoset::from_fn(labels, |x, y| self.leq(x, y))?)
    }
}

pub const DEGENERATE: &str = "degenerate pair";
pub const CON_TOT: &str = "con–tot";

/// The four-element d-lattice `𝔹` with carrier order `0, tt, ff, 1`.
pub fn bool4() -> DLattice {
    let c = FiniteLattice::chain(2);
    DLattice::new(c.clone(), c, [(0, 0), (1, 0), (0, 1)], [(1, 1), (1, 0), (0, 1)])
        .expect("𝔹 is a d-lattice")
        .with_names(["0", "tt", "ff", "1"].iter().map(|s| s.to_string()).collect())
}

/// Element ids of `𝔹` in carrier order.
pub mod b4 {
    pub const ZERO: usize = 0;
    pub const TT: usize = 1;
    pub const FF: usize = 2;
    pub const ONE: usize = 3;
}

/// `ω(H)`: both sides `H`, `con = {a ∧ b = 0}`, `tot = {a ∨ b = 1}`.
pub fn omega(h: &FiniteLattice) -> Result<DLattice> {
    let con: Vec<_> = pairs(h, h).filter(|&(a, b)| h.meet(a, b) == h.bottom()).collect();
    let tot: Vec<_> = pairs(h, h).filter(|&(a, b)| h.join(a, b) == h.top()).collect();
    DLattice::new(h.clone(), h.clone(), con, tot)
}

fn pairs<'a>(p: &'a FiniteLattice, m: &'a FiniteLattice) -> impl Iterator<Item = (Elem, Elem)> + 'a {
    m.elements().flat_map(move |b| p.elements().map(move |a| (a, b)))
}

/// A lattice `L` split along a complementary pair into `[0, tt] × [0, ff]`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub plus: FiniteLattice,
    pub minus: FiniteLattice,
    /// Ids in `L` of the elements of `plus` and of `minus`.
    pub plus_embed: Vec<Elem>,
    pub minus_embed: Vec<Elem>,
    /// `a ↦ (a ∧ tt, a ∧ ff)` in component ids.
    pub coords: Vec<(Elem, Elem)>,
}

impl Decomposition {
    /// Inverse coordinate map `(a, b) ↦ a ∨ b`.
    pub fn join_back(&self, l: &FiniteLattice, a: Elem, b: Elem) -> Elem {
        l.join(self.plus_embed[a], self.minus_embed[b])
    }
}

pub fn decompose(l: &FiniteLattice, tt: Elem, ff: Elem) -> Result<Decomposition> {
    if complement(l, tt) != Some(ff) {
        return Err(Error::NotComplementaryPair { tt: l.label(tt).into(), ff: l.label(ff).into() });
    }
    let (tt_top, ff_top) = (tt == l.top(), ff == l.top());
    if tt_top || ff_top {
        return Err(Error::DegeneratePair);
    }
    let (plus, plus_embed) = l.interval(l.bottom(), tt)?;
    let (minus, minus_embed) = l.interval(l.bottom(), ff)?;
    let pos = |embed: &[Elem], x: Elem| embed.iter().position(|&e| e == x).expect("meet lies in the interval");
    let coords = l.elements().map(|x| (pos(&plus_embed, l.meet(x, tt)), pos(&minus_embed, l.meet(x, ff)))).collect();
    Ok(Decomposition { plus, minus, plus_embed, minus_embed, coords })
}

/// A d-Boolean algebra: a d-lattice whose one-sided elements are all
/// d-complemented, together with the d-complement map `† : L₊ → L₋`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DBooleanAlgebra {
    dl: DLattice,
    dagger: Vec<Elem>,
    dagger_inv: Vec<Elem>,
}

impl Deref for DBooleanAlgebra {
    type Target = DLattice;

    fn deref(&self) -> &DLattice {
        &self.dl
    }
}

fn check_antitone(plus: &FiniteLattice, minus: &FiniteLattice, dagger: &[Elem]) -> Result<Vec<Elem>> {
    if dagger.len() != plus.len() || plus.len() != minus.len() {
        return Err(Error::DaggerNotOrderReversing("sizes differ".into()));
    }
    let mut inv = vec![usize::MAX; minus.len()];
    for (a, &b) in dagger.iter().enumerate() {
        if b >= minus.len() || inv[b] != usize::MAX {
            return Err(Error::DaggerNotOrderReversing(format!("not a bijection at {}", plus.label(a))));
        }
        inv[b] = a;
    }
    for a in plus.elements() {
        for a2 in plus.elements() {
            if plus.leq(a, a2) != minus.leq(dagger[a2], dagger[a]) {
                return Err(Error::DaggerNotOrderReversing(format!(
                    "{} and {}",
                    plus.label(a),
                    plus.label(a2)
                )));
            }
        }
    }
    Ok(inv)
}

impl DBooleanAlgebra {
    /// Wraps a validated d-lattice, reading the dagger off its d-complements.
    pub fn from_dlattice(dl: DLattice) -> Result<Self> {
        let mut dagger = Vec::with_capacity(dl.plus().len());
        for a in dl.plus().elements() {
            let b = dl.d_complement(Side::Plus, a).ok_or_else(|| Error::NotDBoolean {
                side: "plus",
                element: dl.plus().label(a).into(),
            })?;
            dagger.push(b);
        }
        for b in dl.minus().elements() {
            if dl.d_complement(Side::Minus, b).is_none() {
                return Err(Error::NotDBoolean { side: "minus", element: dl.minus().label(b).into() });
            }
        }
        let dagger_inv = check_antitone(dl.plus(), dl.minus(), &dagger)?;
        let a = DBooleanAlgebra { dl, dagger, dagger_inv };
        debug_assert!(a.matches_dagger_form());
        Ok(a)
    }

    pub fn dlattice(&self) -> &DLattice {
        &self.dl
    }

    pub fn into_dlattice(self) -> DLattice {
        self.dl
    }

    pub fn dagger(&self, a: Elem) -> Elem {
        self.dagger[a]
    }

    pub fn dagger_inv(&self, b: Elem) -> Elem {
        self.dagger_inv[b]
    }

    pub fn dagger_map(&self) -> &[Elem] {
        &self.dagger
    }

    /// `con = {(a,b) : a ≤ b†}` and `tot = {(a,b) : a† ≤ b}` exactly.
    pub fn matches_dagger_form(&self) -> bool {
        let (p, m) = (self.plus(), self.minus());
        pairs(p, m).all(|(a, b)| {
            self.con_pair(a, b) == p.leq(a, self.dagger_inv[b]) && self.tot_pair(a, b) == m.leq(self.dagger[a], b)
        })
    }

    pub fn with_names(self, names: Vec<String>) -> Self {
        DBooleanAlgebra { dl: self.dl.with_names(names), ..self }
    }
}

/// A pair of lattices with an order-reversing bijection between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DblObject {
    pub plus: FiniteLattice,
    pub minus: FiniteLattice,
    pub dagger: Vec<Elem>,
}

pub fn to_dbl(a: &DBooleanAlgebra) -> DblObject {
    DblObject { plus: a.plus().clone(), minus: a.minus().clone(), dagger: a.dagger.clone() }
}

pub fn from_dbl(o: &DblObject) -> Result<DBooleanAlgebra> {
    let inv = check_antitone(&o.plus, &o.minus, &o.dagger)?;
    let con: Vec<_> = pairs(&o.plus, &o.minus).filter(|&(a, b)| o.plus.leq(a, inv[b])).collect();
    let tot: Vec<_> = pairs(&o.plus, &o.minus).filter(|&(a, b)| o.minus.leq(o.dagger[a], b)).collect();
    DBooleanAlgebra::from_dlattice(DLattice::new(o.plus.clone(), o.minus.clone(), con, tot)?)
}

/// `λ(M)`: plus `M`, minus `M` reversed, `con = {a ≤ b}`, `tot = {a ≥ b}`.
pub fn lambda(m: &FiniteLattice) -> Result<DBooleanAlgebra> {
    from_dbl(&DblObject { plus: m.clone(), minus: m.dual(), dagger: m.elements().collect() })
}

/// A carrier map between d-lattices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DLatticeHom {
    pub map: Vec<Elem>,
}

impl DLatticeHom {
    pub fn identity(dl: &DLattice) -> Self {
        DLatticeHom { map: dl.elements().collect() }
    }

    /// The product map `(a, b) ↦ (f₊ a, f₋ b)`.
    pub fn from_components(src: &DLattice, tgt: &DLattice, fp: &[Elem], fm: &[Elem]) -> Self {
        DLatticeHom { map: src.elements().map(|x| {
            let (a, b) = src.coords(x);
            tgt.elem(fp[a], fm[b])
        }).collect() }
    }

    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x]
    }

    pub fn plus_component(&self, src: &DLattice, tgt: &DLattice) -> LatticeHom {
        LatticeHom { map: src.plus().elements().map(|a| tgt.coords(self.map[src.embed(Side::Plus, a)]).0).collect() }
    }

    pub fn minus_component(&self, src: &DLattice, tgt: &DLattice) -> LatticeHom {
        LatticeHom { map: src.minus().elements().map(|b| tgt.coords(self.map[src.embed(Side::Minus, b)]).1).collect() }
    }

    /// Checks `tt`, `ff`, the lattice operations, `con` and `tot`, in that order.
    pub fn validate(&self, src: &DLattice, tgt: &DLattice) -> StructReport {
        if self.map.len() != src.size() || self.map.iter().any(|&y| y >= tgt.size()) {
            fail!("total map");
        }
        if self.map[src.tt()] != tgt.tt() {
            fail!("tt", src.label(src.tt()));
        }
        if self.map[src.ff()] != tgt.ff() {
            fail!("ff", src.label(src.ff()));
        }
        // A map preserving tt, ff and binary meets fixes each side, and a
        // join-preserving one is then determined by its two sides.
        for (side, corner) in [(Side::Plus, src.tt()), (Side::Minus, src.ff())] {
            for a in src.side(side).elements() {
                let x = src.embed(side, a);
                if tgt.meet(self.map[x], self.map[corner]) != self.map[x] {
                    fail!("meet", src.label(x), src.label(corner));
                }
            }
        }
        for x in src.elements() {
            let (a, b) = src.coords(x);
            let (xp, xm) = (src.embed(Side::Plus, a), src.embed(Side::Minus, b));
            if self.map[x] != tgt.join(self.map[xp], self.map[xm]) {
                fail!("join", src.label(xp), src.label(xm));
            }
        }
        for (side, comp) in [
            (Side::Plus, self.plus_component(src, tgt)),
            (Side::Minus, self.minus_component(src, tgt)),
        ] {
            if let StructReport::Fail(v) = comp.validate(src.side(side), tgt.side(side)) {
                let lift = |w: &String| {
                    let a = src.side(side).index_of(w).expect("witness is a label");
                    src.label(src.embed(side, a))
                };
                let witness: Vec<String> = v.witness.iter().map(lift).collect();
                return StructReport::Fail(crate::report::Violation::new(v.rule, witness));
            }
        }
        for x in src.con() {
            if !tgt.in_con(self.map[x]) {
                fail!("con", src.label(x));
            }
        }
        for x in src.tot() {
            if !tgt.in_tot(self.map[x]) {
                fail!("tot", src.label(x));
            }
        }
        StructReport::Pass
    }

    pub fn compose(&self, then: &DLatticeHom) -> DLatticeHom {
        DLatticeHom { map: self.map.iter().map(|&x| then.map[x]).collect() }
    }

    pub fn inverse(&self) -> Option<DLatticeHom> {
        LatticeHom { map: self.map.clone() }.inverse().map(|h| DLatticeHom { map: h.map })
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i == x)
    }
}

/// All d-lattice homomorphisms, as products of component lattice homs
/// that preserve `con` and `tot`.
pub fn enumerate_dlattice_homs(src: &DLattice, tgt: &DLattice) -> Vec<DLatticeHom> {
    let hp = lattice_homs(src.plus(), tgt.plus());
    let hm = lattice_homs(src.minus(), tgt.minus());
    let mut out = Vec::new();
    for fp in &hp {
        for fm in &hm {
            if preserves_con_tot(src, tgt, &fp.map, &fm.map) {
                out.push(DLatticeHom::from_components(src, tgt, &fp.map, &fm.map));
            }
        }
    }
    out
}

fn preserves_con_tot(src: &DLattice, tgt: &DLattice, fp: &[Elem], fm: &[Elem]) -> bool {
    src.con().all(|x| {
        let (a, b) = src.coords(x);
        tgt.con_pair(fp[a], fm[b])
    }) && src.tot().all(|x| {
        let (a, b) = src.coords(x);
        tgt.tot_pair(fp[a], fm[b])
    })
}

/// A d-lattice isomorphism `src → tgt`, if one exists.
pub fn find_dlattice_iso(src: &DLattice, tgt: &DLattice) -> Option<DLatticeHom> {
    if src.plus().len() != tgt.plus().len()
        || src.minus().len() != tgt.minus().len()
        || src.con_len() != tgt.con_len()
        || src.tot_len() != tgt.tot_len()
    {
        return None;
    }
    let ip = lattice_isos(src.plus(), tgt.plus());
    if ip.is_empty() {
        return None;
    }
    let im = lattice_isos(src.minus(), tgt.minus());
    // injective and con/tot preserving with equal sizes means con/tot are reflected too
    for fp in &ip {
        for fm in &im {
            if preserves_con_tot(src, tgt, &fp.map, &fm.map) {
                return Some(DLatticeHom::from_components(src, tgt, &fp.map, &fm.map));
            }
        }
    }
    None
}

/// `dB(L)` with its inclusion into `L`.
#[derive(Clone, Debug)]
pub struct DbCoreflection {
    pub algebra: DBooleanAlgebra,
    pub plus_embed: Vec<Elem>,
    pub minus_embed: Vec<Elem>,
    pub inclusion: DLatticeHom,
}

/// The d-Boolean algebra of d-complemented elements.
pub fn db(dl: &DLattice) -> Result<DbCoreflection> {
    let (p, pe) = dl.plus().sublattice(dl.d_complemented(Side::Plus))?;
    let (m, me) = dl.minus().sublattice(dl.d_complemented(Side::Minus))?;
    let con: Vec<_> = pairs(&p, &m).filter(|&(a, b)| dl.con_pair(pe[a], me[b])).collect();
    let tot: Vec<_> = pairs(&p, &m).filter(|&(a, b)| dl.tot_pair(pe[a], me[b])).collect();
    let algebra = DBooleanAlgebra::from_dlattice(DLattice::new(p, m, con, tot)?)?;
    let inclusion = DLatticeHom::from_components(&algebra, dl, &pe, &me);
    Ok(DbCoreflection { algebra, plus_embed: pe, minus_embed: me, inclusion })
}

/// Factors `f : M → L` through `dB(L) ↪ L`.
pub fn factor_through_db(dl: &DLattice, m: &DBooleanAlgebra, f: &DLatticeHom) -> Result<(DbCoreflection, DLatticeHom)> {
    if let StructReport::Fail(v) = f.validate(m, dl) {
        return Err(Error::InvalidHom(v));
    }
    let core = db(dl)?;
    let mut map = Vec::with_capacity(m.size());
    for x in m.elements() {
        let (a, b) = dl.coords(f.apply(x));
        let pa = core.plus_embed.iter().position(|&e| e == a);
        let mb = core.minus_embed.iter().position(|&e| e == b);
        match (pa, mb) {
            (Some(pa), Some(mb)) => map.push(core.algebra.elem(pa, mb)),
            _ => {
                return Err(Error::FactorizationFailure(format!(
                    "{} maps outside the d-complemented elements",
                    m.label(x)
                )))
            }
        }
    }
    let g = DLatticeHom { map };
    if let StructReport::Fail(v) = g.validate(m, &core.algebra) {
        return Err(Error::FactorizationFailure(v.to_string()));
    }
    if g.compose(&core.inclusion) != *f {
        return Err(Error::FactorizationFailure("composite differs from the original map".into()));
    }
    Ok((core, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build_lattice, birkhoff, FinitePoset};

    fn chain3() -> FiniteLattice {
        FiniteLattice::chain(3).relabeled(vec!["0".into(), "m".into(), "1".into()])
    }

    fn bool4_with(con: &[Elem], tot: &[Elem]) -> DLattice {
        let c = FiniteLattice::chain(2);
        let split = |x: &Elem| (x % 2, x / 2);
        DLattice::from_parts(c.clone(), c, con.iter().map(split), tot.iter().map(split))
            .with_names(["0", "tt", "ff", "1"].iter().map(|s| s.to_string()).collect())
    }

    #[test]
    fn bool4_layout() {
        let b = bool4();
        assert_eq!((b.tt(), b.ff(), b.bottom(), b.top()), (b4::TT, b4::FF, b4::ZERO, b4::ONE));
        assert!(b.validate().is_pass());
    }

    #[test]
    fn bool4_mutants() {
        let with_one = bool4_with(&[0, 1, 2, 3], &[1, 2, 3]);
        let r = with_one.validate();
        assert_eq!(r.rule(), Some(CON_TOT));
        assert_eq!(r.violation().unwrap().witness, vec!["1", "tt"]);
        // witness recheck: same plus coordinate, not below
        assert_eq!(with_one.coords(3).0, with_one.coords(1).0);
        assert!(!with_one.leq(3, 1));
        let no_ff = bool4_with(&[0, 1, 2], &[1, 3]);
        assert_eq!(no_ff.validate().rule(), Some("tot–tt,ff"));
    }

    #[test]
    fn logic_ops_on_bool4() {
        let b = bool4();
        assert_eq!(b.logic_meet(b4::TT, b4::FF), b4::FF);
        assert_eq!(b.logic_join(b4::TT, b4::FF), b4::TT);
        assert_eq!(b.logic_meet(b4::ONE, b4::ZERO), b4::FF);
        assert_eq!(b.logic_join(b4::ONE, b4::ZERO), b4::TT);
        for x in b.elements() {
            assert_eq!(b.logic_meet(x, x), x);
            for y in b.elements() {
                assert_eq!(b.logic_meet(x, y), b.logic_meet_coords(x, y));
                assert_eq!(b.logic_join(x, y), b.logic_join_coords(x, y));
            }
        }
        let ll = b.logic_lattice().unwrap();
        assert_eq!(ll.top(), b4::TT);
        assert_eq!(ll.bottom(), b4::FF);
    }

    #[test]
    fn omega_examples() {
        let w2 = omega(&FiniteLattice::chain(2)).unwrap();
        assert!(find_dlattice_iso(&w2, &bool4()).is_some());
        let w3 = omega(&chain3()).unwrap();
        assert_eq!(w3.con_len(), 5);
        assert_eq!(w3.tot_len(), 5);
        let both: Vec<_> = w3.con().filter(|&x| w3.in_tot(x)).map(|x| w3.coords(x)).collect();
        assert_eq!(both, vec![(2, 0), (0, 2)]);
        assert!(matches!(omega(&FiniteLattice::chain(1)), Err(Error::DegeneratePair)));
    }

    #[test]
    fn d_complement_examples() {
        let b = bool4();
        assert_eq!(b.d_complement_of(b4::TT, Side::Plus), Some(b4::ZERO));
        assert_eq!(b.d_complement_of(b4::ZERO, Side::Plus), Some(b4::FF));
        assert_eq!(b.d_complement_of(b4::ZERO, Side::Minus), Some(b4::TT));
        let w3 = omega(&chain3()).unwrap();
        assert_eq!(w3.d_complement(Side::Plus, 1), None);
        assert_eq!(w3.d_complement(Side::Plus, 0), Some(2));
    }

    #[test]
    fn decompose_examples() {
        let b = FiniteLattice::boolean(2);
        let atoms: Vec<Elem> = b.elements().filter(|&a| b.ranks()[a] == 1).collect();
        let d = decompose(&b, atoms[0], atoms[1]).unwrap();
        assert_eq!((d.plus.len(), d.minus.len()), (2, 2));
        for x in b.elements() {
            let (p, m) = d.coords[x];
            assert_eq!(d.join_back(&b, p, m), x);
        }
        assert!(matches!(decompose(&chain3(), 1, 1), Err(Error::NotComplementaryPair { .. })));
        assert!(matches!(decompose(&chain3(), 2, 0), Err(Error::DegeneratePair)));
        let prod = chain3().product(&FiniteLattice::chain(2)).unwrap();
        let (tt, ff) = (prod.index_of("(1,0)").unwrap(), prod.index_of("(0,1)").unwrap());
        let d = decompose(&prod, tt, ff).unwrap();
        assert!(crate::lattice::find_lattice_iso(&d.plus, &chain3()).is_some());
        assert_eq!(d.minus.len(), 2);
    }

    #[test]
    fn db_examples() {
        let b = bool4();
        let core = db(&b).unwrap();
        assert_eq!(*core.algebra.dlattice(), b);
        let w3 = omega(&chain3()).unwrap();
        let core = db(&w3).unwrap();
        assert!(find_dlattice_iso(&core.algebra, &bool4()).is_some());
        assert!(core.inclusion.validate(&core.algebra, &w3).is_pass());
        let l = lambda(&chain3()).unwrap();
        assert_eq!(db(&l).unwrap().algebra, l);
        // idempotence
        let again = db(&core.algebra).unwrap();
        assert_eq!(again.algebra, core.algebra);
    }

    #[test]
    fn coreflection_factorization() {
        let w3 = omega(&chain3()).unwrap();
        let b = DBooleanAlgebra::from_dlattice(bool4()).unwrap();
        let homs = enumerate_dlattice_homs(&b, &w3);
        assert_eq!(homs.len(), 1);
        assert_eq!(homs[0].apply(b4::TT), w3.elem(2, 0));
        let (core, g) = factor_through_db(&w3, &b, &homs[0]).unwrap();
        assert!(g.validate(&b, &core.algebra).is_pass());
        let (_, id) = factor_through_db(&b, &b, &DLatticeHom::identity(&b)).unwrap();
        assert!(id.is_identity());
    }

    #[test]
    fn lambda_examples() {
        let l2 = lambda(&FiniteLattice::chain(2)).unwrap();
        assert!(find_dlattice_iso(&l2, &bool4()).is_some());
        let m = FiniteLattice::boolean(2);
        let l = lambda(&m).unwrap();
        assert_eq!(l.size(), 16);
        let order_pairs = m.elements().flat_map(|a| m.elements().map(move |b| (a, b))).filter(|&(a, b)| m.leq(a, b)).count();
        assert_eq!(l.con_len(), order_pairs);
        assert_eq!(l.con_len(), 9);
        assert!(matches!(lambda(&FiniteLattice::chain(1)), Err(Error::DegeneratePair)));
    }

    #[test]
    fn dbl_roundtrip() {
        let b = DBooleanAlgebra::from_dlattice(bool4()).unwrap();
        let o = to_dbl(&b);
        assert_eq!(o.dagger, vec![1, 0]);
        let l = lambda(&chain3()).unwrap();
        assert_eq!(from_dbl(&to_dbl(&l)).unwrap(), l);
        let bad = DblObject { plus: chain3(), minus: chain3(), dagger: vec![0, 1, 2] };
        assert!(matches!(from_dbl(&bad), Err(Error::DaggerNotOrderReversing(_))));
    }

    #[test]
    fn hom_validation() {
        let b = bool4();
        assert!(DLatticeHom::identity(&b).validate(&b, &b).is_pass());
        let swap = DLatticeHom { map: vec![0, 2, 1, 3] };
        assert_eq!(swap.validate(&b, &b).rule(), Some("tt"));
        // λ(3-chain) → ω(3-chain): identity on plus, reversal on minus keeps
        // tt, ff and the lattice operations but sends (m,m) ∈ con outside con
        let l = lambda(&chain3()).unwrap();
        let w = omega(&chain3()).unwrap();
        let f = DLatticeHom::from_components(&l, &w, &[0, 1, 2], &[2, 1, 0]);
        let r = f.validate(&l, &w);
        assert_eq!(r.rule(), Some("con"));
        let x = l.elem(1, 1);
        assert_eq!(r.violation().unwrap().witness, vec![l.label(x)]);
        assert!(l.in_con(x) && !w.in_con(f.apply(x)));
    }

    #[test]
    fn dagger_form_and_antichain() {
        for p in [FinitePoset::chain(2), FinitePoset::antichain(2), FinitePoset::chain(3)] {
            let a = lambda(&birkhoff(&p)).unwrap();
            assert!(a.matches_dagger_form());
            for x in a.con().filter(|&x| a.in_tot(x)) {
                for y in a.con().filter(|&y| a.in_tot(y)) {
                    assert!(x == y || !a.leq(x, y));
                }
            }
        }
    }

    #[test]
    fn lambda_is_full_and_faithful_on_small_chains() {
        for (i, j) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
            let (m, n) = (FiniteLattice::chain(i), FiniteLattice::chain(j));
            let (lm, ln) = (lambda(&m).unwrap(), lambda(&n).unwrap());
            assert_eq!(enumerate_dlattice_homs(&lm, &ln).len(), lattice_homs(&m, &n).len());
        }
    }

    #[test]
    fn monolithic_import() {
        let l = build_lattice(
            vec!["0".into(), "t".into(), "f".into(), "1".into()],
            &[
                vec![true, true, true, true],
                vec![false, true, false, true],
                vec![false, false, true, true],
                vec![false, false, false, true],
            ],
        )
        .unwrap();
        let d = decompose(&l, 1, 2).unwrap();
        assert_eq!(d.coords[3], (1, 1));
    }
}
