//! d-ideals, d-filters and prime d-ideals as maps into `𝔹`, and the
//! d-frame of ideals.
//!
//! Ideals and filters of finite lattices are principal, so ideal pairs are
//! stored by their generators.

use std::fmt;
use std::ops::Deref;

use crate::bits;
use crate::dlattice::{db, DBooleanAlgebra, DLattice, DLatticeHom, DbCoreflection, Side};
use crate::lattice::{prime_ideals, Elem, FiniteLattice, FinitePoset};
use crate::report::{fail, StructReport};
use crate::{Error, Result};

/// An element of `𝔹`. The discriminant bits are `tt = 01`, `ff = 10`, so the
/// information order is bit inclusion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum BVal {
    Zero = 0,
    Tt = 1,
    Ff = 2,
    One = 3,
}

impl BVal {
    pub const ALL: [BVal; 4] = [BVal::Zero, BVal::Tt, BVal::Ff, BVal::One];

    pub fn from_bits(b: u8) -> BVal {
        BVal::ALL[(b & 3) as usize]
    }

    pub fn bits(self) -> u8 {
        self as u8
    }

    pub fn info_leq(self, other: BVal) -> bool {
        self.bits() & !other.bits() == 0
    }

    pub fn join(self, other: BVal) -> BVal {
        BVal::from_bits(self.bits() | other.bits())
    }

    pub fn meet(self, other: BVal) -> BVal {
        BVal::from_bits(self.bits() & other.bits())
    }

    /// Logic order: `ff ⊏ 0 ⊏ tt` and `ff ⊏ 1 ⊏ tt`.
    pub fn logic_leq(self, other: BVal) -> bool {
        const T: [[bool; 4]; 4] = [
            // 0      tt     ff     1
            [true, true, false, false],  // 0
            [false, true, false, false], // tt
            [true, true, true, true],    // ff
            [false, true, false, true],  // 1
        ];
        T[self as usize][other as usize]
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BVal::Zero => "0",
            BVal::Tt => "tt",
            BVal::Ff => "ff",
            BVal::One => "1",
        }
    }

    /// `[t]tt ∨ [f]ff`
    pub fn from_flags(t: bool, f: bool) -> BVal {
        BVal::from_bits(t as u8 | (f as u8) << 1)
    }
}

impl fmt::Display for BVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A total map from a d-lattice carrier into `𝔹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BMap {
    pub values: Vec<BVal>,
}

impl BMap {
    pub fn constant(n: usize, v: BVal) -> Self {
        BMap { values: vec![v; n] }
    }

    pub fn get(&self, x: Elem) -> BVal {
        self.values[x]
    }

    /// Pointwise information order.
    pub fn info_leq(&self, other: &BMap) -> bool {
        self.values.len() == other.values.len() && self.values.iter().zip(&other.values).all(|(a, b)| a.info_leq(*b))
    }

    /// As a carrier map into `bool4()`.
    pub fn to_hom(&self) -> DLatticeHom {
        DLatticeHom { map: self.values.iter().map(|v| v.bits() as Elem).collect() }
    }

    pub fn from_hom(h: &DLatticeHom) -> Self {
        BMap { values: h.map.iter().map(|&x| BVal::from_bits(x as u8)).collect() }
    }
}

fn check_len(dl: &DLattice, m: &BMap) -> bool {
    m.values.len() == dl.size()
}

/// The d-ideal clauses: `g(tt) ≤ tt`, `g(ff) ≤ ff`, `g(con) ∌ 1`, `g(0) = 0`
/// and preservation of binary joins.
pub fn validate_d_ideal_map(dl: &DLattice, g: &BMap) -> StructReport {
    if !check_len(dl, g) {
        fail!("total map");
    }
    if !g.get(dl.tt()).info_leq(BVal::Tt) {
        fail!("g(tt) ≤ tt", dl.label(dl.tt()));
    }
    if !g.get(dl.ff()).info_leq(BVal::Ff) {
        fail!("g(ff) ≤ ff", dl.label(dl.ff()));
    }
    for x in dl.con() {
        if g.get(x) == BVal::One {
            fail!("con", dl.label(x));
        }
    }
    if g.get(dl.bottom()) != BVal::Zero {
        fail!("g(0) = 0", dl.label(dl.bottom()));
    }
    for x in dl.elements() {
        for y in dl.elements().skip(x + 1) {
            if g.get(dl.join(x, y)) != g.get(x).join(g.get(y)) {
                fail!("joins", dl.label(x), dl.label(y));
            }
        }
    }
    StructReport::Pass
}

/// The d-filter clauses: `f(tt) ≥ tt`, `f(ff) ≥ ff`, `f(tot) ∌ 0`, `f(1) = 1`
/// and preservation of binary meets.
pub fn validate_d_filter_map(dl: &DLattice, f: &BMap) -> StructReport {
    if !check_len(dl, f) {
        fail!("total map");
    }
    if !BVal::Tt.info_leq(f.get(dl.tt())) {
        fail!("f(tt) ≥ tt", dl.label(dl.tt()));
    }
    if !BVal::Ff.info_leq(f.get(dl.ff())) {
        fail!("f(ff) ≥ ff", dl.label(dl.ff()));
    }
    for x in dl.tot() {
        if f.get(x) == BVal::Zero {
            fail!("tot", dl.label(x));
        }
    }
    if f.get(dl.top()) != BVal::One {
        fail!("f(1) = 1", dl.label(dl.top()));
    }
    for x in dl.elements() {
        for y in dl.elements().skip(x + 1) {
            if f.get(dl.meet(x, y)) != f.get(x).meet(f.get(y)) {
                fail!("meets", dl.label(x), dl.label(y));
            }
        }
    }
    StructReport::Pass
}

pub fn is_prime_map(dl: &DLattice, h: &BMap) -> bool {
    validate_d_ideal_map(dl, h).is_pass() && validate_d_filter_map(dl, h).is_pass()
}

/// A pair of principal ideals `(↓plus_gen, ↓minus_gen)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct DIdeal {
    pub plus_gen: Elem,
    pub minus_gen: Elem,
}

/// A pair of principal filters `(↑plus_gen, ↑minus_gen)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct DFilter {
    pub plus_gen: Elem,
    pub minus_gen: Elem,
}

fn ideal_map_unchecked(dl: &DLattice, p: Elem, q: Elem) -> BMap {
    BMap {
        values: dl
            .elements()
            .map(|x| {
                let (a, b) = dl.coords(x);
                BVal::from_flags(!dl.plus().leq(a, p), !dl.minus().leq(b, q))
            })
            .collect(),
    }
}

fn filter_map_unchecked(dl: &DLattice, p: Elem, q: Elem) -> BMap {
    BMap {
        values: dl
            .elements()
            .map(|x| {
                let (a, b) = dl.coords(x);
                BVal::from_flags(dl.plus().leq(p, a), dl.minus().leq(q, b))
            })
            .collect(),
    }
}

/// The d-ideal determined by an ideal pair covering `con`:
/// `g(a ∨ b) = [a ∉ I₊]tt ∨ [b ∉ I₋]ff`.
pub fn d_ideal_to_map(dl: &DLattice, i: DIdeal) -> Result<BMap> {
    for x in dl.con() {
        let (a, b) = dl.coords(x);
        if !dl.plus().leq(a, i.plus_gen) && !dl.minus().leq(b, i.minus_gen) {
            return Err(Error::CoveringViolation { a: dl.plus().label(a).into(), b: dl.minus().label(b).into() });
        }
    }
    Ok(ideal_map_unchecked(dl, i.plus_gen, i.minus_gen))
}

/// The d-filter determined by a filter pair covering `tot`:
/// `f(a ∨ b) = [a ∈ J₊]tt ∨ [b ∈ J₋]ff`.
pub fn d_filter_to_map(dl: &DLattice, j: DFilter) -> Result<BMap> {
    for x in dl.tot() {
        let (a, b) = dl.coords(x);
        if !dl.plus().leq(j.plus_gen, a) && !dl.minus().leq(j.minus_gen, b) {
            return Err(Error::CoveringViolation { a: dl.plus().label(a).into(), b: dl.minus().label(b).into() });
        }
    }
    Ok(filter_map_unchecked(dl, j.plus_gen, j.minus_gen))
}

fn principal_generator(lat: &FiniteLattice, m: bits::Mask, filter: bool) -> Result<Elem> {
    let ok = if filter { lat.is_filter(m) } else { lat.is_ideal(m) };
    if !ok {
        return Err(Error::NotAnIdeal(bits::render(m, lat.labels())));
    }
    Ok(if filter { lat.meet_all(m) } else { lat.join_all(m) })
}

/// Recovers `G₊ = {a : g(a) = 0}` and `G₋ = {b : g(b) = 0}`.
pub fn map_to_d_ideal(dl: &DLattice, g: &BMap) -> Result<DIdeal> {
    let gp = bits::from_indices(dl.plus().elements().filter(|&a| g.get(dl.embed(Side::Plus, a)) == BVal::Zero));
    let gm = bits::from_indices(dl.minus().elements().filter(|&b| g.get(dl.embed(Side::Minus, b)) == BVal::Zero));
    Ok(DIdeal { plus_gen: principal_generator(dl.plus(), gp, false)?, minus_gen: principal_generator(dl.minus(), gm, false)? })
}

/// Recovers `F₊ = {a : f(a ∨ ff) = 1}` and `F₋ = {b : f(tt ∨ b) = 1}`.
pub fn map_to_d_filter(dl: &DLattice, f: &BMap) -> Result<DFilter> {
    let top_m = dl.minus().top();
    let top_p = dl.plus().top();
    let fp = bits::from_indices(dl.plus().elements().filter(|&a| f.get(dl.elem(a, top_m)) == BVal::One));
    let fm = bits::from_indices(dl.minus().elements().filter(|&b| f.get(dl.elem(top_p, b)) == BVal::One));
    Ok(DFilter { plus_gen: principal_generator(dl.plus(), fp, true)?, minus_gen: principal_generator(dl.minus(), fm, true)? })
}

/// Every d-ideal map, one per generator pair covering `con`.
pub fn all_d_ideal_maps(dl: &DLattice) -> Vec<(DIdeal, BMap)> {
    generator_pairs(dl)
        .filter_map(|(p, q)| {
            let i = DIdeal { plus_gen: p, minus_gen: q };
            d_ideal_to_map(dl, i).ok().map(|g| (i, g))
        })
        .collect()
}

/// Every d-filter map, one per generator pair covering `tot`.
pub fn all_d_filter_maps(dl: &DLattice) -> Vec<(DFilter, BMap)> {
    generator_pairs(dl)
        .filter_map(|(p, q)| {
            let j = DFilter { plus_gen: p, minus_gen: q };
            d_filter_to_map(dl, j).ok().map(|f| (j, f))
        })
        .collect()
}

fn generator_pairs(dl: &DLattice) -> impl Iterator<Item = (Elem, Elem)> + '_ {
    dl.plus().elements().flat_map(move |p| dl.minus().elements().map(move |q| (p, q)))
}

/// A prime d-ideal, i.e. a d-lattice homomorphism into `𝔹`, together with
/// the generators of its zero set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeDIdeal {
    pub ideal: DIdeal,
    pub map: BMap,
}

/// Prime d-ideals of a d-Boolean algebra, one per prime ideal `K₊` of `L₊`,
/// paired with `K₋ = {x† : x ∉ K₊}`. Sorted by `K₊` generator.
pub fn prime_d_ideals_structural(a: &DBooleanAlgebra) -> Vec<PrimeDIdeal> {
    let minus = a.minus();
    prime_ideals(a.plus())
        .into_iter()
        .map(|k| {
            let km = bits::from_indices(a.plus().elements().filter(|&x| !k.contains(x)).map(|x| a.dagger(x)));
            let q = principal_generator(minus, km, false).expect("the dagger image of a prime filter is an ideal");
            let ideal = DIdeal { plus_gen: k.generator(a.plus()), minus_gen: q };
            let map = d_ideal_to_map(a, ideal).expect("structural prime pairs cover con");
            PrimeDIdeal { ideal, map }
        })
        .collect()
}

/// Prime d-ideals of any d-lattice by direct filtering.
///
/// Every d-ideal map is the map of a principal ideal pair, so the candidates
/// `g(a, b) = [a ≰ p]tt ∨ [b ≰ q]ff` over all `(p, q)` include every prime
/// d-ideal; each candidate is kept iff it passes both literal validators.
pub fn prime_d_ideals_brute(dl: &DLattice) -> Vec<PrimeDIdeal> {
    generator_pairs(dl)
        .filter_map(|(p, q)| {
            let map = ideal_map_unchecked(dl, p, q);
            is_prime_map(dl, &map).then_some(PrimeDIdeal { ideal: DIdeal { plus_gen: p, minus_gen: q }, map })
        })
        .collect()
}

/// Prime d-ideals, structurally for d-Boolean inputs and by filtering otherwise.
pub fn enumerate_prime_d_ideals(dl: &DLattice) -> Vec<PrimeDIdeal> {
    match DBooleanAlgebra::from_dlattice(dl.clone()) {
        Ok(a) => prime_d_ideals_structural(&a),
        Err(_) => prime_d_ideals_brute(dl),
    }
}

/// `g(a) = 0 ⟺ g(a†) = ff` for `a ∈ L₊` and `g(b) = 0 ⟺ g(b†) = tt` for `b ∈ L₋`.
pub fn prime_d_ideal_characterization(a: &DBooleanAlgebra, g: &BMap) -> bool {
    let cond_a = a.plus().elements().all(|x| {
        (g.get(a.embed(Side::Plus, x)) == BVal::Zero) == (g.get(a.embed(Side::Minus, a.dagger(x))) == BVal::Ff)
    });
    let cond_b = a.minus().elements().all(|y| {
        (g.get(a.embed(Side::Minus, y)) == BVal::Zero) == (g.get(a.embed(Side::Plus, a.dagger_inv(y))) == BVal::Tt)
    });
    cond_a && cond_b
}

/// A prime d-ideal `h` with `f ≤ h ≤ g`, searched lowest generators first.
pub fn prime_sandwich(dl: &DLattice, f: &BMap, g: &BMap) -> Result<PrimeDIdeal> {
    if let StructReport::Fail(v) = validate_d_filter_map(dl, f) {
        return Err(Error::InvalidMap(v));
    }
    if let StructReport::Fail(v) = validate_d_ideal_map(dl, g) {
        return Err(Error::InvalidMap(v));
    }
    if !f.info_leq(g) {
        return Err(Error::Precondition("f ≤ g fails".into()));
    }
    // G₊ ⊆ I₊ and F₊ ∩ I₊ = ∅ are read off the zero sets; the final check is pointwise.
    let gi = map_to_d_ideal(dl, g)?;
    let fi = map_to_d_filter(dl, f)?;
    prime_d_ideals_brute(dl)
        .into_iter()
        .filter(|h| {
            dl.plus().leq(gi.plus_gen, h.ideal.plus_gen)
                && dl.minus().leq(gi.minus_gen, h.ideal.minus_gen)
                && !dl.plus().leq(fi.plus_gen, h.ideal.plus_gen)
                && !dl.minus().leq(fi.minus_gen, h.ideal.minus_gen)
        })
        .find(|h| f.info_leq(&h.map) && h.map.info_leq(g))
        .ok_or(Error::NoSandwich)
}

/// A d-lattice viewed as a d-frame; finite distributive lattices are frames.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DFrame(DLattice);

impl Deref for DFrame {
    type Target = DLattice;

    fn deref(&self) -> &DLattice {
        &self.0
    }
}

impl DFrame {
    pub fn new(dl: DLattice) -> Result<Self> {
        Ok(DFrame(dl.validated()?))
    }

    pub fn dlattice(&self) -> &DLattice {
        &self.0
    }

    pub fn into_dlattice(self) -> DLattice {
        self.0
    }
}

/// `tot` is Scott-open, which for finite carriers means an up-set.
pub fn is_compact_dframe(df: &DLattice) -> bool {
    df.tot().all(|x| df.elements().filter(|&y| df.leq(x, y)).all(|y| df.in_tot(y)))
}

/// Every element of each side is the join of the d-complemented elements below it.
pub fn is_zero_dimensional_dframe(df: &DLattice) -> bool {
    zero_dim_witness(df).is_none()
}

fn zero_dim_witness(df: &DLattice) -> Option<(Side, Elem)> {
    for side in [Side::Plus, Side::Minus] {
        let lat = df.side(side);
        let dc = df.d_complemented(side);
        for a in lat.elements() {
            if lat.join_all(dc & lat.down_set(a)) != a {
                return Some((side, a));
            }
        }
    }
    None
}

/// The principal-ideal lattice `{↓a}` of `lat`, on the same ids.
pub fn ideal_lattice(lat: &FiniteLattice) -> FiniteLattice {
    let sets: Vec<bits::Mask> = lat.elements().map(|a| lat.down_set(a)).collect();
    let labels = lat.elements().map(|a| format!("↓{}", lat.label(a))).collect();
    let poset = FinitePoset::from_fn(labels, |i, j| bits::is_subset(sets[i], sets[j])).expect("inclusion order");
    FiniteLattice::from_poset(poset).expect("isomorphic to the original lattice")
}

/// The d-frame of ideals: `con = {I : I₊ × I₋ ⊆ con}`, `tot = {I : I ∩ tot ≠ ∅}`.
pub fn idl_dframe(dl: &DLattice) -> Result<DFrame> {
    let (p, m) = (dl.plus(), dl.minus());
    let mut con = Vec::new();
    let mut tot = Vec::new();
    for b in m.elements() {
        for a in p.elements() {
            let (ip, im) = (p.down_set(a), m.down_set(b));
            let inside = bits::members(ip).all(|x| bits::members(im).all(|y| dl.con_pair(x, y)));
            let meets = bits::members(ip).any(|x| bits::members(im).any(|y| dl.tot_pair(x, y)));
            if inside {
                con.push((a, b));
            }
            if meets {
                tot.push((a, b));
            }
        }
    }
    DFrame::new(DLattice::new(ideal_lattice(p), ideal_lattice(m), con, tot)?)
}

/// `η : a ↦ ↓a` into [`idl_dframe`]; ids coincide, so this is the identity carrier map.
pub fn eta_unit(dl: &DLattice) -> Result<(DFrame, DLatticeHom)> {
    let idl = idl_dframe(dl)?;
    let eta = DLatticeHom::identity(dl);
    if let StructReport::Fail(v) = eta.validate(dl, &idl) {
        return Err(Error::InvalidHom(v));
    }
    Ok((idl, eta))
}

/// The extension `h̄(I) = ⋁ h(I)` of `h : L → M` along `η`.
pub fn extend_along_eta(dl: &DLattice, m: &DLattice, h: &DLatticeHom) -> DLatticeHom {
    let (p, q) = (dl.plus(), dl.minus());
    DLatticeHom {
        map: dl
            .elements()
            .map(|x| {
                let (a, b) = dl.coords(x);
                let ideal = bits::members(p.down_set(a))
                    .flat_map(|a2| bits::members(q.down_set(b)).map(move |b2| (a2, b2)))
                    .map(|(a2, b2)| h.apply(dl.elem(a2, b2)));
                ideal.fold(m.bottom(), |acc, y| m.join(acc, y))
            })
            .collect(),
    }
}

/// The unit and counit between a compact zero-dimensional d-frame and the
/// ideals of its d-Boolean part.
#[derive(Clone, Debug)]
pub struct IdlDbWitness {
    pub core: DbCoreflection,
    pub idl_db: DFrame,
    /// `ε : idl(dB L) → L`, `ε(I) = ⋁I`.
    pub epsilon: DLatticeHom,
    /// `κ : L → idl(dB L)`, `κ(x) = ↓x ∩ dB L`.
    pub kappa: DLatticeHom,
}

impl IdlDbWitness {
    pub fn is_iso(&self, df: &DLattice) -> bool {
        self.epsilon.validate(&self.idl_db, df).is_pass()
            && self.kappa.validate(df, &self.idl_db).is_pass()
            && self.kappa.compose(&self.epsilon).is_identity()
            && self.epsilon.compose(&self.kappa).is_identity()
    }
}

pub fn epsilon_kappa(df: &DLattice) -> Result<IdlDbWitness> {
    if !is_compact_dframe(df) {
        return Err(Error::Precondition("d-frame is not compact".into()));
    }
    if let Some((side, a)) = zero_dim_witness(df) {
        return Err(Error::NotZeroDimensional(format!(
            "{} is not a join of d-complemented elements",
            df.side_label(side, a)
        )));
    }
    let core = db(df)?;
    let idl_db = idl_dframe(&core.algebra)?;
    let alg = &core.algebra;
    let epsilon = DLatticeHom::from_components(&idl_db, df, &core.plus_embed, &core.minus_embed);
    let kap = |lat: &FiniteLattice, embed: &[Elem], sub: &FiniteLattice, a: Elem| {
        let below: Vec<Elem> = (0..embed.len()).filter(|&i| lat.leq(embed[i], a)).collect();
        below.into_iter().fold(sub.bottom(), |acc, i| sub.join(acc, i))
    };
    let kp: Vec<Elem> = df.plus().elements().map(|a| kap(df.plus(), &core.plus_embed, alg.plus(), a)).collect();
    let km: Vec<Elem> = df.minus().elements().map(|b| kap(df.minus(), &core.minus_embed, alg.minus(), b)).collect();
    let kappa = DLatticeHom::from_components(df, &idl_db, &kp, &km);
    Ok(IdlDbWitness { core, idl_db, epsilon, kappa })
}

/// The isomorphism `A → dB(idl A)`, `a ↦ ↓a`, with its inverse.
pub fn db_idl_witness(a: &DBooleanAlgebra) -> Result<(DbCoreflection, DLatticeHom, DLatticeHom)> {
    let idl = idl_dframe(a)?;
    let core = db(&idl)?;
    let inv = |embed: &[Elem], n: usize| -> Option<Vec<Elem>> {
        let mut out = vec![usize::MAX; n];
        for (i, &e) in embed.iter().enumerate() {
            out[e] = i;
        }
        out.iter().all(|&x| x != usize::MAX).then_some(out)
    };
    let fp = inv(&core.plus_embed, a.plus().len());
    let fm = inv(&core.minus_embed, a.minus().len());
    let (Some(fp), Some(fm)) = (fp, fm) else {
        return Err(Error::Precondition("some principal ideal is not d-complemented".into()));
    };
    let forward = DLatticeHom::from_components(a, &core.algebra, &fp, &fm);
    let backward = DLatticeHom::from_components(&core.algebra, a, &core.plus_embed, &core.minus_embed);
    Ok((core, forward, backward))
}

/// Principal ideals on d-complemented elements, as `(side, generator)`.
pub fn d_complemented_ideals(dl: &DLattice) -> Vec<(Side, Elem)> {
    [Side::Plus, Side::Minus]
        .into_iter()
        .flat_map(|side| bits::members(dl.d_complemented(side)).map(move |a| (side, a)))
        .collect()
}
