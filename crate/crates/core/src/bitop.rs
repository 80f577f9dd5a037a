//! Finite topological and bitopological spaces.
//!
//! Open-set families are stored extensionally as sorted bitmask lists
//! (ordered by size, then by mask), so every predicate below is a direct
//! scan of the defining condition.

use std::collections::BTreeSet;

use crate::bits::{self, Mask};
use crate::dlattice::{from_dbl, DBooleanAlgebra, DLattice, DblObject};
use crate::ideals::{enumerate_prime_d_ideals, BMap, BVal, DFrame, PrimeDIdeal};
use crate::lattice::{numbered, Elem, FiniteLattice, FinitePoset};
use crate::{Error, Result};

fn sort_family(fam: impl IntoIterator<Item = Mask>) -> Vec<Mask> {
    let set: BTreeSet<(u32, Mask)> = fam.into_iter().map(|m| (m.count_ones(), m)).collect();
    set.into_iter().map(|(_, m)| m).collect()
}

/// The smallest topology on `n` points containing `subbase`: finite
/// intersections (the empty one being `X`), then unions (the empty one being `∅`).
pub fn generate_topology(n: usize, subbase: &[Mask]) -> Vec<Mask> {
    let x = bits::full(n);
    let mut base: BTreeSet<Mask> = subbase.iter().map(|&m| m & x).collect();
    base.insert(x);
    loop {
        let items: Vec<Mask> = base.iter().copied().collect();
        let before = base.len();
        for (i, &a) in items.iter().enumerate() {
            for &b in &items[i + 1..] {
                base.insert(a & b);
            }
        }
        if base.len() == before {
            break;
        }
    }
    let mut opens: BTreeSet<Mask> = base.clone();
    opens.insert(0);
    loop {
        let items: Vec<Mask> = opens.iter().copied().collect();
        let before = opens.len();
        for (i, &a) in items.iter().enumerate() {
            for &b in &items[i + 1..] {
                opens.insert(a | b);
            }
        }
        if opens.len() == before {
            break;
        }
    }
    sort_family(opens)
}

fn check_topology(n: usize, fam: &[Mask], name: &str) -> Result<()> {
    let x = bits::full(n);
    let has = |m: Mask| fam.binary_search_by_key(&(m.count_ones(), m), |&o| (o.count_ones(), o)).is_ok();
    if !has(0) || !has(x) {
        return Err(Error::InvalidTopology(format!("{name} must contain ∅ and X")));
    }
    for &a in fam {
        if a & !x != 0 {
            return Err(Error::InvalidTopology(format!("{name} has a set outside X")));
        }
        for &b in fam {
            if !has(a | b) || !has(a & b) {
                return Err(Error::InvalidTopology(format!("{name} is not closed under union and intersection")));
            }
        }
    }
    Ok(())
}

fn contains_set(fam: &[Mask], m: Mask) -> bool {
    fam.binary_search_by_key(&(m.count_ones(), m), |&o| (o.count_ones(), o)).is_ok()
}

/// Specialization preorder as up-set rows: `y ∈ row[x]` iff every open containing `x` contains `y`.
fn specialization(n: usize, fam: &[Mask]) -> Vec<Mask> {
    (0..n).map(|x| fam.iter().filter(|&&u| bits::contains(u, x)).fold(bits::full(n), |acc, &u| acc & u)).collect()
}

/// Is `m` a union of members of `base`?
fn is_union_of(m: Mask, base: &[Mask]) -> bool {
    base.iter().filter(|&&b| bits::is_subset(b, m)).fold(0, |acc, &b| acc | b) == m
}

/// A finite topological space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Topology {
    labels: Vec<String>,
    opens: Vec<Mask>,
}

impl Topology {
    pub fn new(labels: Vec<String>, opens: impl IntoIterator<Item = Mask>) -> Result<Self> {
        let opens = sort_family(opens);
        check_topology(labels.len(), &opens, "topology")?;
        Ok(Topology { labels, opens })
    }

    pub fn generated(labels: Vec<String>, subbase: &[Mask]) -> Self {
        let opens = generate_topology(labels.len(), subbase);
        Topology { labels, opens }
    }

    pub fn discrete(n: usize) -> Self {
        Self::generated(numbered(n), &(0..n).map(bits::bit).collect::<Vec<_>>())
    }

    pub fn indiscrete(n: usize) -> Self {
        Self::generated(numbered(n), &[])
    }

    /// Two points `0, 1` with `{1}` open.
    pub fn sierpinski() -> Self {
        Self::generated(numbered(2), &[bits::bit(1)])
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

    pub fn opens(&self) -> &[Mask] {
        &self.opens
    }

    pub fn is_open(&self, m: Mask) -> bool {
        contains_set(&self.opens, m)
    }

    pub fn clopens(&self) -> Vec<Mask> {
        let x = bits::full(self.len());
        self.opens.iter().copied().filter(|&u| self.is_open(x & !u)).collect()
    }

    pub fn is_t0(&self) -> bool {
        (0..self.len()).all(|x| (0..x).all(|y| self.opens.iter().any(|&u| bits::contains(u, x) != bits::contains(u, y))))
    }

    /// Clopen sets form a base.
    pub fn is_zero_dimensional(&self) -> bool {
        let c = self.clopens();
        self.opens.iter().all(|&u| is_union_of(u, &c))
    }

    /// Finite spaces are compact; `T0` plus clopen base is the remaining content.
    pub fn is_stone(&self) -> bool {
        self.is_t0() && self.is_zero_dimensional()
    }
}

/// A finite bitopological space `(X, τ₊, τ₋)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiTopSpace {
    labels: Vec<String>,
    tau_plus: Vec<Mask>,
    tau_minus: Vec<Mask>,
}

/// Specialization preorders, stored as up-set rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializationData {
    pub leq_plus: Vec<Mask>,
    pub leq_minus: Vec<Mask>,
    /// `≤ = ≤₊ ∩ ≥₋`
    pub leq: Vec<Mask>,
}

impl SpecializationData {
    pub fn is_partial_order(&self) -> bool {
        (0..self.leq.len()).all(|x| bits::members(self.leq[x]).all(|y| y == x || !bits::contains(self.leq[y], x)))
    }
}

impl BiTopSpace {
    pub fn new(
        labels: Vec<String>,
        tau_plus: impl IntoIterator<Item = Mask>,
        tau_minus: impl IntoIterator<Item = Mask>,
    ) -> Result<Self> {
        let n = labels.len();
        if n > bits::MAX_ELEMENTS {
            return Err(Error::TooLarge { what: "point set", size: n, limit: bits::MAX_ELEMENTS });
        }
        let (p, m) = (sort_family(tau_plus), sort_family(tau_minus));
        check_topology(n, &p, "tau_plus")?;
        check_topology(n, &m, "tau_minus")?;
        Ok(BiTopSpace { labels, tau_plus: p, tau_minus: m })
    }

    pub fn from_subbases(labels: Vec<String>, plus: &[Mask], minus: &[Mask]) -> Self {
        let n = labels.len();
        BiTopSpace { tau_plus: generate_topology(n, plus), tau_minus: generate_topology(n, minus), labels }
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

    pub fn all(&self) -> Mask {
        bits::full(self.len())
    }

    pub fn tau_plus(&self) -> &[Mask] {
        &self.tau_plus
    }

    pub fn tau_minus(&self) -> &[Mask] {
        &self.tau_minus
    }

    pub fn is_plus_open(&self, m: Mask) -> bool {
        contains_set(&self.tau_plus, m)
    }

    pub fn is_minus_open(&self, m: Mask) -> bool {
        contains_set(&self.tau_minus, m)
    }

    pub fn is_plus_closed(&self, m: Mask) -> bool {
        self.is_plus_open(self.all() & !m)
    }

    pub fn is_minus_closed(&self, m: Mask) -> bool {
        self.is_minus_open(self.all() & !m)
    }

    /// τ₊-open and τ₋-closed sets.
    pub fn plus_clopens(&self) -> Vec<Mask> {
        self.tau_plus.iter().copied().filter(|&u| self.is_minus_closed(u)).collect()
    }

    /// τ₋-open and τ₊-closed sets.
    pub fn minus_clopens(&self) -> Vec<Mask> {
        self.tau_minus.iter().copied().filter(|&v| self.is_plus_closed(v)).collect()
    }

    /// Smallest τ₊-closed superset.
    pub fn plus_closure(&self, m: Mask) -> Mask {
        self.all() & !self.tau_plus.iter().filter(|&&u| u & m == 0).fold(0, |acc, &u| acc | u)
    }

    pub fn minus_closure(&self, m: Mask) -> Mask {
        self.all() & !self.tau_minus.iter().filter(|&&v| v & m == 0).fold(0, |acc, &v| acc | v)
    }

    pub fn specialization(&self) -> SpecializationData {
        let n = self.len();
        let lp = specialization(n, &self.tau_plus);
        let lm = specialization(n, &self.tau_minus);
        let leq = (0..n).map(|x| lp[x] & bits::from_indices((0..n).filter(|&y| bits::contains(lm[y], x)))).collect();
        SpecializationData { leq_plus: lp, leq_minus: lm, leq }
    }

    /// Distinct points are told apart by some τ₊- or τ₋-open set.
    pub fn is_t0(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            (0..x).all(|y| {
                self.tau_plus.iter().chain(&self.tau_minus).any(|&u| bits::contains(u, x) != bits::contains(u, y))
            })
        })
    }

    /// Every subfamily of `τ₊ ∪ τ₋` covering `X` has a finite subfamily covering `X`.
    ///
    /// Always true for finite spaces; kept literal. When the union family is
    /// small every covering subfamily is tried, otherwise only the whole family.
    pub fn is_compact(&self) -> bool {
        let fam: Vec<Mask> = sort_family(self.tau_plus.iter().chain(&self.tau_minus).copied());
        let x = self.all();
        let has_finite_subcover = |members: &[Mask]| {
            // one chosen member per point
            let chosen = (0..self.len()).filter_map(|p| members.iter().copied().find(|&u| bits::contains(u, p)));
            chosen.fold(0, |acc, u| acc | u) == x
        };
        if fam.len() <= 12 {
            (0..1u32 << fam.len()).all(|sel| {
                let sub: Vec<Mask> = bits::members(sel as Mask).map(|i| fam[i]).collect();
                sub.iter().fold(0, |acc, &u| acc | u) != x || has_finite_subcover(&sub)
            })
        } else {
            has_finite_subcover(&fam)
        }
    }

    /// τ₊ has a base of τ₋-closed sets and τ₋ a base of τ₊-closed sets.
    pub fn is_zero_dimensional(&self) -> bool {
        let bp = self.plus_clopens();
        let bm = self.minus_clopens();
        self.tau_plus.iter().all(|&u| is_union_of(u, &bp)) && self.tau_minus.iter().all(|&v| is_union_of(v, &bm))
    }

    /// `≤` is a partial order and `x ≰ y` is witnessed by disjoint opens
    /// `U ∈ τ₊` around `x` and `V ∈ τ₋` around `y`.
    pub fn is_order_separated(&self) -> bool {
        let s = self.specialization();
        s.is_partial_order()
            && self.unrelated_pairs(&s).all(|(x, y)| {
                self.tau_plus.iter().filter(|&&u| bits::contains(u, x)).any(|&u| {
                    self.tau_minus.iter().any(|&v| bits::contains(v, y) && u & v == 0)
                })
            })
    }

    /// `≤` is a partial order and `x ≰ y` is witnessed by a τ₊-open τ₋-closed
    /// set containing `x` but not `y`.
    pub fn is_totally_order_separated(&self) -> bool {
        let s = self.specialization();
        let c = self.plus_clopens();
        s.is_partial_order()
            && self.unrelated_pairs(&s).all(|(x, y)| c.iter().any(|&u| bits::contains(u, x) && !bits::contains(u, y)))
    }

    fn unrelated_pairs<'a>(&'a self, s: &'a SpecializationData) -> impl Iterator<Item = (usize, usize)> + 'a {
        let n = self.len();
        (0..n).flat_map(move |x| (0..n).map(move |y| (x, y))).filter(move |&(x, y)| !bits::contains(s.leq[x], y))
    }

    pub fn is_stone_via_zero_dim(&self) -> bool {
        self.is_t0() && self.is_compact() && self.is_zero_dimensional()
    }

    pub fn is_stone_via_order(&self) -> bool {
        self.is_compact() && self.is_totally_order_separated()
    }

    /// Evaluates both Stone characterizations and insists that they agree.
    pub fn is_stone(&self) -> Result<bool> {
        let (first, second) = (self.is_stone_via_zero_dim(), self.is_stone_via_order());
        if first != second {
            return Err(Error::CharacterizationMismatch { first, second });
        }
        Ok(first)
    }

    /// Both `(X, τ₊)` and `(X, τ₋)` are `T0`.
    pub fn is_bi_t0(&self) -> bool {
        let t0 = |fam: &[Mask]| {
            (0..self.len()).all(|x| (0..x).all(|y| fam.iter().any(|&u| bits::contains(u, x) != bits::contains(u, y))))
        };
        t0(&self.tau_plus) && t0(&self.tau_minus)
    }

    pub fn is_pairwise_regular(&self) -> bool {
        let clause = |own: &[Mask], closure: &dyn Fn(Mask) -> Mask| {
            own.iter().all(|&u| {
                bits::members(u).all(|x| own.iter().any(|&v| bits::contains(v, x) && bits::is_subset(closure(v), u)))
            })
        };
        clause(&self.tau_plus, &|v| self.minus_closure(v)) && clause(&self.tau_minus, &|v| self.plus_closure(v))
    }

    /// The τ₋-closure of each τ₊-open set is τ₊-open, and symmetrically.
    pub fn is_extremally_disconnected(&self) -> bool {
        self.tau_plus.iter().all(|&u| self.is_plus_open(self.minus_closure(u)))
            && self.tau_minus.iter().all(|&v| self.is_minus_open(self.plus_closure(v)))
    }

    /// `S` is disconnected when some `U ∈ τ₊`, `V ∈ τ₋` cover it, each meets
    /// it, and they are disjoint on it.
    pub fn is_pervin_connected(&self, s: Mask) -> bool {
        !self.tau_plus.iter().any(|&u| {
            self.tau_minus.iter().any(|&v| {
                bits::is_subset(s, u | v) && s & u != 0 && s & v != 0 && s & u & v == 0
            })
        })
    }

    /// Every connected set has at most one point.
    pub fn connected_sets_are_points(&self) -> bool {
        (1..=self.all()).filter(|s| s.count_ones() >= 2).all(|s| !self.is_pervin_connected(s))
    }

    pub fn swap(&self) -> BiTopSpace {
        BiTopSpace { labels: self.labels.clone(), tau_plus: self.tau_minus.clone(), tau_minus: self.tau_plus.clone() }
    }

    pub fn relabeled(&self, labels: Vec<String>) -> BiTopSpace {
        assert_eq!(labels.len(), self.len());
        BiTopSpace { labels, ..self.clone() }
    }
}

/// `ω(T) = (X, T, T)`.
pub fn omega_space(t: &Topology) -> BiTopSpace {
    BiTopSpace { labels: t.labels.clone(), tau_plus: t.opens.clone(), tau_minus: t.opens.clone() }
}

/// `τ₊` = up-sets and `τ₋` = down-sets of `p`.
pub fn stone_space_from_poset(p: &FinitePoset) -> BiTopSpace {
    BiTopSpace {
        labels: p.labels().to_vec(),
        tau_plus: sort_family(p.up_sets()),
        tau_minus: sort_family(p.down_sets()),
    }
}

/// `𝔹` as a space on points `0, tt, ff, 1`.
pub fn bool4_space() -> BiTopSpace {
    use crate::dlattice::b4::*;
    let s = |xs: &[usize]| bits::from_indices(xs.iter().copied());
    BiTopSpace::from_subbases(
        ["0", "tt", "ff", "1"].iter().map(|s| s.to_string()).collect(),
        &[s(&[TT, ONE]), s(&[ZERO, TT])],
        &[s(&[FF, ONE]), s(&[ZERO, FF])],
    )
}

/// Preimages of τ₊-opens are τ₊-open and preimages of τ₋-opens are τ₋-open.
pub fn is_continuous(f: &[usize], x: &BiTopSpace, y: &BiTopSpace) -> bool {
    let pre = |v: Mask| bits::from_indices((0..x.len()).filter(|&p| bits::contains(v, f[p])));
    f.len() == x.len()
        && f.iter().all(|&q| q < y.len())
        && y.tau_plus.iter().all(|&v| x.is_plus_open(pre(v)))
        && y.tau_minus.iter().all(|&v| x.is_minus_open(pre(v)))
}

/// A point bijection `x → y` carrying each topology onto the corresponding one.
pub fn find_homeomorphism(x: &BiTopSpace, y: &BiTopSpace) -> Option<Vec<usize>> {
    if x.len() != y.len() || x.tau_plus.len() != y.tau_plus.len() || x.tau_minus.len() != y.tau_minus.len() {
        return None;
    }
    let inv = |s: &BiTopSpace, p: usize| {
        let cp = s.tau_plus.iter().filter(|&&u| bits::contains(u, p)).count();
        let cm = s.tau_minus.iter().filter(|&&u| bits::contains(u, p)).count();
        (cp, cm)
    };
    let ix: Vec<_> = (0..x.len()).map(|p| inv(x, p)).collect();
    let iy: Vec<_> = (0..y.len()).map(|p| inv(y, p)).collect();
    let mut map = vec![usize::MAX; x.len()];
    fn rec(
        i: usize,
        used: Mask,
        map: &mut Vec<usize>,
        x: &BiTopSpace,
        y: &BiTopSpace,
        ix: &[(usize, usize)],
        iy: &[(usize, usize)],
    ) -> bool {
        if i == x.len() {
            let image = |m: Mask| bits::from_indices(bits::members(m).map(|p| map[p]));
            return x.tau_plus.iter().all(|&u| y.is_plus_open(image(u)))
                && x.tau_minus.iter().all(|&u| y.is_minus_open(image(u)));
        }
        for q in 0..y.len() {
            if bits::contains(used, q) || ix[i] != iy[q] {
                continue;
            }
            map[i] = q;
            if rec(i + 1, used | bits::bit(q), map, x, y, ix, iy) {
                return true;
            }
        }
        false
    }
    rec(0, 0, &mut map, x, y, &ix, &iy).then_some(map)
}

/// `dO(X)`: the opens of each topology ordered by inclusion,
/// `con = {U ∩ V = ∅}`, `tot = {U ∪ V = X}`.
pub fn d_open(x: &BiTopSpace) -> Result<DFrame> {
    let lat = |fam: &[Mask]| -> Result<FiniteLattice> {
        let labels = fam.iter().map(|&m| bits::render(m, &x.labels)).collect();
        FiniteLattice::from_set_family(labels, fam)
    };
    let (p, m) = (lat(&x.tau_plus)?, lat(&x.tau_minus)?);
    let mut con = Vec::new();
    let mut tot = Vec::new();
    for (j, &v) in x.tau_minus.iter().enumerate() {
        for (i, &u) in x.tau_plus.iter().enumerate() {
            if u & v == 0 {
                con.push((i, j));
            }
            if u | v == x.all() {
                tot.push((i, j));
            }
        }
    }
    DFrame::new(DLattice::new(p, m, con, tot)?)
}

/// `dClop(X)`: τ₊-open τ₋-closed sets, τ₋-open τ₊-closed sets, and set complement as dagger.
pub fn d_clop(x: &BiTopSpace) -> Result<DBooleanAlgebra> {
    let (cp, cm) = (x.plus_clopens(), x.minus_clopens());
    let lat = |fam: &[Mask]| -> Result<FiniteLattice> {
        let labels = fam.iter().map(|&m| bits::render(m, &x.labels)).collect();
        FiniteLattice::from_set_family(labels, fam)
    };
    let dagger = cp
        .iter()
        .map(|&u| cm.iter().position(|&v| v == x.all() & !u).expect("complements of d-clopens are d-clopen"))
        .collect();
    from_dbl(&DblObject { plus: lat(&cp)?, minus: lat(&cm)?, dagger })
}

/// The points `[x]` of `dO(X)`: `[x](U, V) = [x ∈ U]tt ∨ [x ∈ V]ff`.
pub fn point_map(x: &BiTopSpace, d_o: &DLattice, p: usize) -> BMap {
    BMap {
        values: d_o
            .elements()
            .map(|e| {
                let (i, j) = d_o.coords(e);
                BVal::from_flags(bits::contains(x.tau_plus[i], p), bits::contains(x.tau_minus[j], p))
            })
            .collect(),
    }
}

/// A space of d-points together with the d-point behind each point.
#[derive(Clone, Debug)]
pub struct PointSpace {
    pub space: BiTopSpace,
    pub points: Vec<PrimeDIdeal>,
}

/// `Φ₊(a) = {p : p(a) = tt}` and `Φ₋(b) = {p : p(b) = ff}` over all d-points.
pub fn phi_sets(dl: &DLattice, points: &[PrimeDIdeal]) -> (Vec<Mask>, Vec<Mask>) {
    use crate::dlattice::Side;
    let phi = |side: Side, want: BVal| -> Vec<Mask> {
        dl.side(side)
            .elements()
            .map(|a| {
                let x = dl.embed(side, a);
                bits::from_indices(points.iter().enumerate().filter(|(_, p)| p.map.get(x) == want).map(|(i, _)| i))
            })
            .collect()
    };
    (phi(Side::Plus, BVal::Tt), phi(Side::Minus, BVal::Ff))
}

pub fn point_label(dl: &DLattice, p: &PrimeDIdeal) -> String {
    format!("⟨{}|{}⟩", dl.plus().label(p.ideal.plus_gen), dl.minus().label(p.ideal.minus_gen))
}

fn space_of_points(dl: &DLattice, points: Vec<PrimeDIdeal>, require_topology: bool) -> Result<PointSpace> {
    if points.len() > bits::MAX_ELEMENTS {
        return Err(Error::TooLarge { what: "point set", size: points.len(), limit: bits::MAX_ELEMENTS });
    }
    let (pp, pm) = phi_sets(dl, &points);
    let labels: Vec<String> = points.iter().map(|p| point_label(dl, p)).collect();
    let space = if require_topology {
        BiTopSpace::new(labels, pp, pm)?
    } else {
        BiTopSpace::from_subbases(labels, &pp, &pm)
    };
    Ok(PointSpace { space, points })
}

/// d-points of a finite d-frame with `τ₊ = {Φ₊(a)}` and `τ₋ = {Φ₋(b)}`;
/// the families are checked to be topologies as they stand.
pub fn d_points(df: &DLattice) -> Result<PointSpace> {
    space_of_points(df, enumerate_prime_d_ideals(df), true)
}

/// The spectrum: prime d-ideals with topologies generated by `φ₊(a)`, `φ₋(b)`.
pub fn dspec(dl: &DLattice) -> Result<PointSpace> {
    space_of_points(dl, enumerate_prime_d_ideals(dl), false)
}

/// Each d-point of `dO(X)` is `[x]` for exactly one `x`.
pub fn is_d_sober(x: &BiTopSpace) -> Result<bool> {
    let d_o = d_open(x)?;
    let gen: Vec<BMap> = (0..x.len()).map(|p| point_map(x, &d_o, p)).collect();
    Ok(enumerate_prime_d_ideals(&d_o).iter().all(|p| gen.iter().filter(|g| **g == p.map).count() == 1))
}

/// Continuous maps `X → 𝔹` and pairs `(U, V)` of d-clopens, counted independently.
pub fn stone_type_counts(x: &BiTopSpace) -> (usize, usize) {
    let b = bool4_space();
    let n = x.len();
    assert!(n <= 10, "exhaustive map enumeration is limited to 10 points");
    let mut maps = 0;
    let mut f = vec![0usize; n];
    for code in 0..(1u64 << (2 * n)) {
        for (p, v) in f.iter_mut().enumerate() {
            *v = (code >> (2 * p) & 3) as usize;
        }
        if is_continuous(&f, x, &b) {
            maps += 1;
        }
    }
    (maps, x.plus_clopens().len() * x.minus_clopens().len())
}

/// `f_{U,V}(x) = [x ∈ U]tt ∨ [x ∈ V]ff` as a point map into [`bool4_space`].
pub fn clopen_pair_map(x: &BiTopSpace, u: Mask, v: Mask) -> Vec<usize> {
    (0..x.len()).map(|p| BVal::from_flags(bits::contains(u, p), bits::contains(v, p)).bits() as usize).collect()
}

/// Labels of the elements of each component of `dO(X)` in id order.
pub fn open_labels(x: &BiTopSpace) -> (Vec<String>, Vec<String>) {
    let r = |fam: &[Mask]| fam.iter().map(|&m| bits::render(m, &x.labels)).collect();
    (r(&x.tau_plus), r(&x.tau_minus))
}

pub fn elem_of_open(fam: &[Mask], m: Mask) -> Option<Elem> {
    fam.iter().position(|&o| o == m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dlattice::{bool4, db, find_dlattice_iso, lambda, omega};

    fn x2() -> BiTopSpace {
        stone_space_from_poset(&FinitePoset::chain(2))
    }

    fn indiscrete2() -> BiTopSpace {
        omega_space(&Topology::indiscrete(2))
    }

    fn one_point() -> BiTopSpace {
        stone_space_from_poset(&FinitePoset::chain(1))
    }

    #[test]
    fn generation() {
        assert_eq!(generate_topology(2, &[]), vec![0, 0b11]);
        assert_eq!(generate_topology(2, &[0b10]), vec![0, 0b10, 0b11]);
        assert_eq!(generate_topology(3, &[1, 2, 4]).len(), 8);
    }

    #[test]
    fn basic_predicates() {
        let i2 = indiscrete2();
        assert!(!i2.is_t0() && i2.is_compact() && i2.is_zero_dimensional());
        let x = x2();
        assert!(x.is_t0() && x.is_compact() && x.is_zero_dimensional());
        assert_eq!(x.tau_plus(), &[0, 0b10, 0b11]);
        let p = one_point();
        assert!(p.is_t0() && p.is_compact() && p.is_zero_dimensional());
    }

    #[test]
    fn separation() {
        assert!(x2().is_order_separated() && x2().is_totally_order_separated());
        assert!(!indiscrete2().is_order_separated() && !indiscrete2().is_totally_order_separated());
        let d = omega_space(&Topology::discrete(2));
        assert!(d.is_order_separated() && d.is_totally_order_separated());
        // specialization order of X2 is the poset order
        let s = x2().specialization();
        assert_eq!(s.leq, vec![0b11, 0b10]);
    }

    #[test]
    fn stone_examples() {
        assert!(x2().is_stone().unwrap());
        assert!(!indiscrete2().is_stone().unwrap());
        let sier = omega_space(&Topology::sierpinski());
        assert!(!sier.is_stone().unwrap());
        assert!(!sier.is_zero_dimensional() && !sier.is_order_separated());
        for t in [Topology::discrete(2), Topology::sierpinski(), Topology::indiscrete(2), Topology::discrete(1)] {
            assert_eq!(omega_space(&t).is_stone().unwrap(), t.is_stone());
        }
    }

    #[test]
    fn regular_and_extremal() {
        for x in [x2(), one_point(), stone_space_from_poset(&FinitePoset::antichain(2))] {
            assert!(x.is_pairwise_regular());
            assert!(x.is_extremally_disconnected());
        }
    }

    #[test]
    fn dopen_examples() {
        let d = d_open(&one_point()).unwrap();
        assert_eq!((d.plus().len(), d.minus().len()), (2, 2));
        let d = d_open(&x2()).unwrap();
        assert_eq!((d.plus().len(), d.minus().len()), (3, 3));
        assert!(crate::ideals::is_zero_dimensional_dframe(&d));
        for x in [x2(), indiscrete2(), one_point(), omega_space(&Topology::sierpinski())] {
            let d = d_open(&x).unwrap();
            let kz = crate::ideals::is_compact_dframe(&d) && crate::ideals::is_zero_dimensional_dframe(&d);
            assert_eq!(kz, x.is_compact() && x.is_zero_dimensional());
        }
    }

    #[test]
    fn dclop_examples() {
        let c = d_clop(&x2()).unwrap();
        assert_eq!(c.plus().labels(), &["∅", "{1}", "{0,1}"]);
        let c = d_clop(&indiscrete2()).unwrap();
        assert_eq!(c.plus().len(), 2);
        let c = d_clop(&omega_space(&Topology::discrete(2))).unwrap();
        assert!(find_dlattice_iso(&c, &omega(&FiniteLattice::boolean(2)).unwrap()).is_some());
        for x in [x2(), indiscrete2(), one_point(), omega_space(&Topology::sierpinski())] {
            assert_eq!(d_clop(&x).unwrap(), db(&d_open(&x).unwrap()).unwrap().algebra);
        }
    }

    #[test]
    fn d_point_examples() {
        assert_eq!(d_points(&bool4()).unwrap().space.len(), 1);
        let pts = d_points(&d_open(&x2()).unwrap()).unwrap();
        assert!(find_homeomorphism(&pts.space, &x2()).is_some());
        let l = lambda(&FiniteLattice::chain(3)).unwrap();
        let pts = d_points(&l).unwrap();
        assert_eq!(pts.space.len(), 2);
        assert!(pts.space.is_stone().unwrap());
    }

    #[test]
    fn sobriety() {
        assert!(is_d_sober(&x2()).unwrap());
        assert!(!is_d_sober(&indiscrete2()).unwrap());
        assert!(is_d_sober(&one_point()).unwrap());
    }

    #[test]
    fn poset_spaces() {
        assert_eq!(stone_space_from_poset(&FinitePoset::chain(2)), x2());
        let a = stone_space_from_poset(&FinitePoset::antichain(2));
        assert_eq!(a.tau_plus().len(), 4);
        assert_eq!(a.tau_plus(), a.tau_minus());
        for p in [FinitePoset::chain(3), FinitePoset::antichain(3)] {
            let x = stone_space_from_poset(&p);
            assert!(x.is_stone().unwrap());
            assert!(x.is_bi_t0());
        }
    }

    #[test]
    fn continuity() {
        let x = x2();
        assert!(is_continuous(&[0, 1], &x, &x));
        assert!(is_continuous(&[1, 1], &x, &x));
        assert!(!is_continuous(&[1, 0], &x, &x));
    }

    #[test]
    fn stone_type_correspondence() {
        for x in [x2(), one_point(), indiscrete2(), stone_space_from_poset(&FinitePoset::antichain(2))] {
            let (maps, pairs) = stone_type_counts(&x);
            assert_eq!(maps, pairs);
            for &u in &x.plus_clopens() {
                for &v in &x.minus_clopens() {
                    assert!(is_continuous(&clopen_pair_map(&x, u, v), &x, &bool4_space()));
                }
            }
        }
    }

    #[test]
    fn pervin() {
        assert!(x2().connected_sets_are_points());
        assert!(!indiscrete2().connected_sets_are_points());
        assert!(indiscrete2().is_pervin_connected(0b11));
    }

    #[test]
    fn compact_literal_scan() {
        let x = stone_space_from_poset(&FinitePoset::antichain(3));
        assert!(x.is_compact());
    }
}
