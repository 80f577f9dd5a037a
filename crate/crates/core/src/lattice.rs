//! Finite posets and finite bounded distributive lattices.
//!
//! Elements are dense ids `0..n`; labels are carried only for display and
//! serialization. Order relations are stored as per-element up-set and
//! down-set masks, and meet/join tables are computed once at construction.

use std::collections::HashMap;

use crate::bits::{self, Mask, MAX_ELEMENTS};
use crate::report::{fail, StructReport};
use crate::{Error, Result};

pub type Elem = usize;

fn check_size(what: &'static str, n: usize) -> Result<()> {
    if n > MAX_ELEMENTS {
        return Err(Error::TooLarge { what, size: n, limit: MAX_ELEMENTS });
    }
    Ok(())
}

/// A finite partially ordered set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    up: Vec<Mask>,
    down: Vec<Mask>,
}

impl FinitePoset {
    /// Builds a poset from a boolean `leq` matrix, checking the partial order axioms.
    pub fn new(labels: Vec<String>, leq: &[Vec<bool>]) -> Result<Self> {
        let n = labels.len();
        check_size("poset", n)?;
        if leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return Err(Error::Schema(format!("leq must be a {n}x{n} matrix")));
        }
        Self::from_fn(labels, |a, b| leq[a][b])
    }

    pub fn from_fn(labels: Vec<String>, leq: impl Fn(Elem, Elem) -> bool) -> Result<Self> {
        let n = labels.len();
        check_size("poset", n)?;
        let mut up = vec![0; n];
        let mut down = vec![0; n];
        for a in 0..n {
            for b in 0..n {
                if leq(a, b) {
                    up[a] |= bits::bit(b);
                    down[b] |= bits::bit(a);
                }
            }
        }
        for a in 0..n {
            if !bits::contains(up[a], a) {
                return Err(Error::NotAPoset(format!("reflexivity fails at {}", labels[a])));
            }
        }
        for a in 0..n {
            for b in bits::members(up[a]) {
                if a != b && bits::contains(up[b], a) {
                    return Err(Error::NotAPoset(format!(
                        "antisymmetry fails: {} ≤ {} and {} ≤ {}",
                        labels[a], labels[b], labels[b], labels[a]
                    )));
                }
                if let Some(c) = bits::members(up[b] & !up[a]).next() {
                    return Err(Error::NotAPoset(format!(
                        "transitivity fails: {} ≤ {} ≤ {} but not {} ≤ {}",
                        labels[a], labels[b], labels[c], labels[a], labels[c]
                    )));
                }
            }
        }
        Ok(FinitePoset { labels, up, down })
    }

    pub fn chain(n: usize) -> Self {
        Self::from_fn(numbered(n), |a, b| a <= b).expect("chain is a poset")
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_fn(numbered(n), |a, b| a == b).expect("antichain is a poset")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a]
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        bits::contains(self.up[a], b)
    }

    /// `{b : a ≤ b}`
    #[inline]
    pub fn up_set(&self, a: Elem) -> Mask {
        self.up[a]
    }

    /// `{b : b ≤ a}`
    #[inline]
    pub fn down_set(&self, a: Elem) -> Mask {
        self.down[a]
    }

    pub fn all(&self) -> Mask {
        bits::full(self.len())
    }

    pub fn is_down_set(&self, m: Mask) -> bool {
        bits::members(m).all(|a| bits::is_subset(self.down[a], m))
    }

    pub fn is_up_set(&self, m: Mask) -> bool {
        bits::members(m).all(|a| bits::is_subset(self.up[a], m))
    }

    /// Smallest down-set containing `m`.
    pub fn down_closure(&self, m: Mask) -> Mask {
        bits::members(m).fold(0, |acc, a| acc | self.down[a])
    }

    pub fn up_closure(&self, m: Mask) -> Mask {
        bits::members(m).fold(0, |acc, a| acc | self.up[a])
    }

    pub fn leq_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.len()).map(|a| (0..self.len()).map(|b| self.leq(a, b)).collect()).collect()
    }

    /// Pairs `(a, b)` with `a < b` and nothing strictly between.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            let above = self.up[a] & !bits::bit(a);
            for b in bits::members(above) {
                let between = above & self.down[b] & !bits::bit(b);
                if between == 0 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn dual(&self) -> Self {
        FinitePoset { labels: self.labels.clone(), up: self.down.clone(), down: self.up.clone() }
    }

    /// Elements sorted so that every element comes after everything below it.
    pub fn linear_extension(&self) -> Vec<Elem> {
        let mut order: Vec<Elem> = (0..self.len()).collect();
        order.sort_by_key(|&a| (self.down[a].count_ones(), a));
        order
    }

    /// Every down-set, in the order produced by a depth-first walk over a
    /// linear extension (the empty set first).
    pub fn down_sets(&self) -> Vec<Mask> {
        let order = self.linear_extension();
        let mut out = Vec::new();
        self.down_sets_rec(&order, 0, 0, &mut out);
        out.sort_by_key(|m| (m.count_ones(), *m));
        out
    }

    fn down_sets_rec(&self, order: &[Elem], i: usize, cur: Mask, out: &mut Vec<Mask>) {
        if i == order.len() {
            out.push(cur);
            return;
        }
        let x = order[i];
        self.down_sets_rec(order, i + 1, cur, out);
        let below = self.down[x] & !bits::bit(x);
        if bits::is_subset(below, cur) {
            self.down_sets_rec(order, i + 1, cur | bits::bit(x), out);
        }
    }

    pub fn up_sets(&self) -> Vec<Mask> {
        self.dual().down_sets()
    }

    /// Canonical code of the isomorphism class (minimum over all relabelings).
    /// Only meant for the small posets used in corpus generation.
    pub fn canonical_code(&self) -> u64 {
        let n = self.len();
        assert!(n <= 8, "canonical_code supports at most 8 elements");
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = u64::MAX;
        permute(&mut perm, 0, &mut |p| {
            let mut code = 0u64;
            let mut k = 0;
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        if self.leq(p[i], p[j]) {
                            code |= 1 << k;
                        }
                        k += 1;
                    }
                }
            }
            best = best.min(code);
        });
        best
    }
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

pub(crate) fn numbered(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// A finite bounded distributive lattice with precomputed operation tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLattice {
    poset: FinitePoset,
    bottom: Elem,
    top: Elem,
    meet: Vec<u8>,
    join: Vec<u8>,
}

/// Validates `leq` and returns the lattice with its meet and join tables.
pub fn build_lattice(labels: Vec<String>, leq: &[Vec<bool>]) -> Result<FiniteLattice> {
    FiniteLattice::from_poset(FinitePoset::new(labels, leq)?)
}

impl FiniteLattice {
    pub fn from_poset(poset: FinitePoset) -> Result<Self> {
        let n = poset.len();
        let all = poset.all();
        let bottom = (0..n).find(|&a| poset.up_set(a) == all).ok_or(Error::NotBounded("bottom"))?;
        let top = (0..n).find(|&a| poset.down_set(a) == all).ok_or(Error::NotBounded("top"))?;
        let mut meet = vec![0u8; n * n];
        let mut join = vec![0u8; n * n];
        for a in 0..n {
            for b in 0..n {
                let lower = poset.down_set(a) & poset.down_set(b);
                let m = bits::members(lower).find(|&m| poset.down_set(m) == lower).ok_or_else(|| {
                    Error::NotALattice { a: poset.label(a).into(), b: poset.label(b).into(), which: "meet" }
                })?;
                let upper = poset.up_set(a) & poset.up_set(b);
                let j = bits::members(upper).find(|&j| poset.up_set(j) == upper).ok_or_else(|| {
                    Error::NotALattice { a: poset.label(a).into(), b: poset.label(b).into(), which: "join" }
                })?;
                meet[a * n + b] = m as u8;
                join[a * n + b] = j as u8;
            }
        }
        let lat = FiniteLattice { poset, bottom, top, meet, join };
        if let Some((a, b, c)) = lat.distributivity_witness() {
            return Err(Error::NotDistributive {
                a: lat.label(a).into(),
                b: lat.label(b).into(),
                c: lat.label(c).into(),
            });
        }
        Ok(lat)
    }

    /// The lattice of a family of sets ordered by inclusion.
    pub fn from_set_family(labels: Vec<String>, sets: &[Mask]) -> Result<Self> {
        if labels.len() != sets.len() {
            return Err(Error::Schema("one label per set".into()));
        }
        Self::from_poset(FinitePoset::from_fn(labels, |a, b| bits::is_subset(sets[a], sets[b]))?)
    }

    pub fn chain(n: usize) -> Self {
        Self::from_poset(FinitePoset::chain(n)).expect("chains are distributive lattices")
    }

    /// The Boolean lattice of all subsets of a `k`-element set.
    pub fn boolean(k: usize) -> Self {
        birkhoff(&FinitePoset::antichain(k))
    }

    /// Exhaustive triple scan for a failure of `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)`.
    pub fn distributivity_witness(&self) -> Option<(Elem, Elem, Elem)> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.meet(a, self.join(b, c)) != self.join(self.meet(a, b), self.meet(a, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.len() == 1
    }

    pub fn labels(&self) -> &[String] {
        self.poset.labels()
    }

    pub fn label(&self, a: Elem) -> &str {
        self.poset.label(a)
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.len()
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.poset.leq(a, b)
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a * self.len() + b] as Elem
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a * self.len() + b] as Elem
    }

    pub fn join_all(&self, m: Mask) -> Elem {
        bits::members(m).fold(self.bottom, |acc, a| self.join(acc, a))
    }

    pub fn meet_all(&self, m: Mask) -> Elem {
        bits::members(m).fold(self.top, |acc, a| self.meet(acc, a))
    }

    pub fn down_set(&self, a: Elem) -> Mask {
        self.poset.down_set(a)
    }

    pub fn up_set(&self, a: Elem) -> Mask {
        self.poset.up_set(a)
    }

    pub fn all(&self) -> Mask {
        self.poset.all()
    }

    pub fn index_of(&self, label: &str) -> Option<Elem> {
        self.labels().iter().position(|l| l == label)
    }

    /// Non-empty, downward closed, closed under binary joins.
    pub fn is_ideal(&self, m: Mask) -> bool {
        m != 0
            && self.poset.is_down_set(m)
            && bits::members(m).all(|a| bits::members(m).all(|b| bits::contains(m, self.join(a, b))))
    }

    pub fn is_filter(&self, m: Mask) -> bool {
        m != 0
            && self.poset.is_up_set(m)
            && bits::members(m).all(|a| bits::members(m).all(|b| bits::contains(m, self.meet(a, b))))
    }

    /// Elements `j ≠ 0` with `j = a ∨ b ⟹ j = a or j = b`.
    pub fn join_irreducibles(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&j| j != self.bottom)
            .filter(|&j| {
                self.elements().all(|a| self.elements().all(|b| self.join(a, b) != j || a == j || b == j))
            })
            .collect()
    }

    /// Length of the longest chain from the bottom to each element.
    pub fn ranks(&self) -> Vec<usize> {
        let mut rank = vec![0; self.len()];
        for a in self.poset.linear_extension() {
            let below = self.down_set(a) & !bits::bit(a);
            rank[a] = bits::members(below).map(|b| rank[b] + 1).max().unwrap_or(0);
        }
        rank
    }

    /// The opposite lattice on the same ids and labels.
    pub fn dual(&self) -> Self {
        FiniteLattice {
            poset: self.poset.dual(),
            bottom: self.top,
            top: self.bottom,
            meet: self.join.clone(),
            join: self.meet.clone(),
        }
    }

    /// Cartesian product; element `(a, b)` has id `a + b * self.len()`.
    pub fn product(&self, other: &FiniteLattice) -> Result<Self> {
        let (n, m) = (self.len(), other.len());
        check_size("product lattice", n * m)?;
        let labels =
            (0..n * m).map(|x| format!("({},{})", self.label(x % n), other.label(x / n))).collect();
        let poset = FinitePoset::from_fn(labels, |x, y| self.leq(x % n, y % n) && other.leq(x / n, y / n))?;
        Self::from_poset(poset)
    }

    /// The sublattice on `members`, which must be closed under meet and join.
    /// Returns the lattice and the embedding of its ids into `self`.
    pub fn sublattice(&self, members: Mask) -> Result<(Self, Vec<Elem>)> {
        for a in bits::members(members) {
            for b in bits::members(members) {
                if !bits::contains(members, self.meet(a, b)) || !bits::contains(members, self.join(a, b)) {
                    return Err(Error::Precondition(format!(
                        "subset is not a sublattice at {} and {}",
                        self.label(a),
                        self.label(b)
                    )));
                }
            }
        }
        let embed: Vec<Elem> = bits::members(members).collect();
        let labels = embed.iter().map(|&a| self.label(a).to_string()).collect();
        let poset = FinitePoset::from_fn(labels, |i, j| self.leq(embed[i], embed[j]))?;
        Ok((Self::from_poset(poset)?, embed))
    }

    /// The interval `[lo, hi]` as a lattice, with its embedding.
    pub fn interval(&self, lo: Elem, hi: Elem) -> Result<(Self, Vec<Elem>)> {
        let (sub, embed) = self.sublattice(self.up_set(lo) & self.down_set(hi))?;
        Ok((sub, embed))
    }

    /// Upper and lower cover counts per element.
    pub fn cover_counts(&self) -> Vec<(usize, usize)> {
        let mut counts = vec![(0, 0); self.len()];
        for (a, b) in self.poset.covers() {
            counts[a].0 += 1;
            counts[b].1 += 1;
        }
        counts
    }

    pub fn relabeled(&self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.len());
        let mut out = self.clone();
        out.poset.labels = labels;
        out
    }
}

/// The lattice of down-sets of `p` ordered by inclusion.
pub fn birkhoff(p: &FinitePoset) -> FiniteLattice {
    let sets = p.down_sets();
    let labels = sets.iter().map(|&m| bits::render(m, p.labels())).collect();
    FiniteLattice::from_set_family(labels, &sets).expect("down-set lattices are distributive")
}

/// An ideal of a finite lattice, stored as its element set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeIdeal {
    carrier: Mask,
}

impl LatticeIdeal {
    pub fn new(lat: &FiniteLattice, carrier: Mask) -> Result<Self> {
        if !lat.is_ideal(carrier) {
            return Err(Error::NotAnIdeal(bits::render(carrier, lat.labels())));
        }
        Ok(LatticeIdeal { carrier })
    }

    pub fn principal(lat: &FiniteLattice, a: Elem) -> Self {
        LatticeIdeal { carrier: lat.down_set(a) }
    }

    pub fn carrier(&self) -> Mask {
        self.carrier
    }

    pub fn contains(&self, a: Elem) -> bool {
        bits::contains(self.carrier, a)
    }

    /// The largest element; finite ideals are principal.
    pub fn generator(&self, lat: &FiniteLattice) -> Elem {
        lat.join_all(self.carrier)
    }

    pub fn is_proper(&self, lat: &FiniteLattice) -> bool {
        !self.contains(lat.top())
    }

    pub fn is_prime(&self, lat: &FiniteLattice) -> bool {
        self.is_proper(lat)
            && lat.elements().all(|a| {
                lat.elements().all(|b| !self.contains(lat.meet(a, b)) || self.contains(a) || self.contains(b))
            })
    }
}

/// All prime ideals, ordered by generator id.
///
/// Finite ideals are principal, so the scan runs over `↓a` for `a ≠ 1` and
/// keeps those satisfying `x ∧ y ∈ I ⟹ x ∈ I or y ∈ I`.
pub fn prime_ideals(lat: &FiniteLattice) -> Vec<LatticeIdeal> {
    lat.elements()
        .filter(|&a| a != lat.top())
        .map(|a| LatticeIdeal::principal(lat, a))
        .filter(|i| i.is_prime(lat))
        .collect()
}

pub fn is_prime_filter(lat: &FiniteLattice, m: Mask) -> bool {
    lat.is_filter(m)
        && !bits::contains(m, lat.bottom())
        && lat.elements().all(|a| {
            lat.elements().all(|b| !bits::contains(m, lat.join(a, b)) || bits::contains(m, a) || bits::contains(m, b))
        })
}

/// The complement of `a`, when it exists.
pub fn complement(lat: &FiniteLattice, a: Elem) -> Option<Elem> {
    lat.elements().find(|&b| lat.join(a, b) == lat.top() && lat.meet(a, b) == lat.bottom())
}

/// Greatest `b` with `a ∧ b = 0`.
pub fn pseudo_complement(lat: &FiniteLattice, a: Elem) -> Option<Elem> {
    let disjoint = bits::from_indices(lat.elements().filter(|&b| lat.meet(a, b) == lat.bottom()));
    let cand = lat.join_all(disjoint);
    (lat.meet(a, cand) == lat.bottom()).then_some(cand)
}

pub fn is_boolean(lat: &FiniteLattice) -> bool {
    lat.elements().all(|a| complement(lat, a).is_some())
}

/// A map between element ids of two lattices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeHom {
    pub map: Vec<Elem>,
}

impl LatticeHom {
    pub fn identity(n: usize) -> Self {
        LatticeHom { map: (0..n).collect() }
    }

    pub fn apply(&self, a: Elem) -> Elem {
        self.map[a]
    }

    pub fn validate(&self, src: &FiniteLattice, tgt: &FiniteLattice) -> StructReport {
        if self.map.len() != src.len() || self.map.iter().any(|&b| b >= tgt.len()) {
            fail!("total map");
        }
        if self.map[src.bottom()] != tgt.bottom() {
            fail!("bottom", src.label(src.bottom()));
        }
        if self.map[src.top()] != tgt.top() {
            fail!("top", src.label(src.top()));
        }
        for a in src.elements() {
            for b in src.elements() {
                if self.map[src.meet(a, b)] != tgt.meet(self.map[a], self.map[b]) {
                    fail!("meet", src.label(a), src.label(b));
                }
                if self.map[src.join(a, b)] != tgt.join(self.map[a], self.map[b]) {
                    fail!("join", src.label(a), src.label(b));
                }
            }
        }
        StructReport::Pass
    }

    pub fn is_bijective(&self, tgt_len: usize) -> bool {
        self.map.len() == tgt_len && bits::from_indices(self.map.iter().copied()) == bits::full(tgt_len)
    }

    pub fn inverse(&self) -> Option<Self> {
        let mut inv = vec![usize::MAX; self.map.len()];
        for (a, &b) in self.map.iter().enumerate() {
            if b >= inv.len() || inv[b] != usize::MAX {
                return None;
            }
            inv[b] = a;
        }
        Some(LatticeHom { map: inv })
    }

    pub fn compose(&self, then: &LatticeHom) -> LatticeHom {
        LatticeHom { map: self.map.iter().map(|&a| then.map[a]).collect() }
    }
}

/// Backtracking enumerator of lattice homomorphisms `src → tgt`.
///
/// Source elements are assigned along a linear extension; every meet/join
/// equation is checked as soon as all three of its elements are assigned.
struct HomSearch<'a> {
    src: &'a FiniteLattice,
    tgt: &'a FiniteLattice,
    order: Vec<Elem>,
    checks: Vec<Vec<(Elem, Elem, Elem, bool)>>,
    injective: bool,
    invariants: Option<(Vec<(usize, usize, usize)>, Vec<(usize, usize, usize)>)>,
}

impl<'a> HomSearch<'a> {
    fn new(src: &'a FiniteLattice, tgt: &'a FiniteLattice, injective: bool) -> Self {
        let order = src.poset().linear_extension();
        let mut pos = vec![0; src.len()];
        for (i, &a) in order.iter().enumerate() {
            pos[a] = i;
        }
        let mut checks = vec![Vec::new(); src.len()];
        for a in src.elements() {
            for b in src.elements() {
                if a >= b {
                    continue;
                }
                let m = src.meet(a, b);
                let j = src.join(a, b);
                let last_m = [a, b, m].into_iter().max_by_key(|&x| pos[x]).unwrap();
                checks[pos[last_m]].push((a, b, m, true));
                let last_j = [a, b, j].into_iter().max_by_key(|&x| pos[x]).unwrap();
                checks[pos[last_j]].push((a, b, j, false));
            }
        }
        let invariants = injective.then(|| (invariant_vector(src), invariant_vector(tgt)));
        HomSearch { src, tgt, order, checks, injective, invariants }
    }

    fn run(&self, limit: Option<usize>) -> Vec<LatticeHom> {
        let mut out = Vec::new();
        let mut map = vec![usize::MAX; self.src.len()];
        self.rec(0, &mut map, 0, &mut out, limit);
        out
    }

    fn rec(&self, i: usize, map: &mut Vec<Elem>, used: Mask, out: &mut Vec<LatticeHom>, limit: Option<usize>) {
        if limit.is_some_and(|l| out.len() >= l) {
            return;
        }
        if i == self.order.len() {
            out.push(LatticeHom { map: map.clone() });
            return;
        }
        let a = self.order[i];
        let candidates: Vec<Elem> = if a == self.src.bottom() {
            vec![self.tgt.bottom()]
        } else if a == self.src.top() {
            vec![self.tgt.top()]
        } else {
            self.tgt.elements().collect()
        };
        for c in candidates {
            if self.injective && bits::contains(used, c) {
                continue;
            }
            if let Some((si, ti)) = &self.invariants {
                if si[a] != ti[c] {
                    continue;
                }
            }
            map[a] = c;
            let ok = self.checks[i].iter().all(|&(x, y, z, is_meet)| {
                let want = if is_meet { self.tgt.meet(map[x], map[y]) } else { self.tgt.join(map[x], map[y]) };
                map[z] == want
            });
            if ok {
                self.rec(i + 1, map, used | bits::bit(c), out, limit);
            }
            map[a] = usize::MAX;
            if limit.is_some_and(|l| out.len() >= l) {
                return;
            }
        }
    }
}

fn invariant_vector(lat: &FiniteLattice) -> Vec<(usize, usize, usize)> {
    let ranks = lat.ranks();
    let covers = lat.cover_counts();
    lat.elements().map(|a| (ranks[a], covers[a].0, covers[a].1)).collect()
}

/// All lattice homomorphisms `src → tgt`, in lexicographic order of images.
pub fn lattice_homs(src: &FiniteLattice, tgt: &FiniteLattice) -> Vec<LatticeHom> {
    HomSearch::new(src, tgt, false).run(None)
}

/// An isomorphism `l → m`, if one exists.
pub fn find_lattice_iso(l: &FiniteLattice, m: &FiniteLattice) -> Option<LatticeHom> {
    if l.len() != m.len() {
        return None;
    }
    let mut a = invariant_vector(l);
    let mut b = invariant_vector(m);
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return None;
    }
    HomSearch::new(l, m, true).run(Some(1)).pop()
}

/// All isomorphisms `l → m`.
pub fn lattice_isos(l: &FiniteLattice, m: &FiniteLattice) -> Vec<LatticeHom> {
    if l.len() != m.len() {
        return Vec::new();
    }
    HomSearch::new(l, m, true).run(None)
}

/// Maps labels to ids for quick lookup.
pub fn label_index(lat: &FiniteLattice) -> HashMap<&str, Elem> {
    lat.labels().iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect()
}
