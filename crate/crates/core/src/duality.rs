//! Round trips between d-Boolean algebras and Stone bitopological spaces,
//! their classical and λ counterparts, and bounded searches on the two
//! open questions.
//!
//! Every isomorphism claim comes with the explicit maps both ways.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bitop::{
    d_clop, d_open, d_points, dspec, find_homeomorphism, generate_topology, omega_space, phi_sets, BiTopSpace,
    PointSpace, Topology,
};
use crate::bits::{self, Mask};
use crate::dlattice::{
    enumerate_dlattice_homs, find_dlattice_iso, lambda, omega, DBooleanAlgebra, DLattice, DLatticeHom, Side,
};
use crate::ideals::{idl_dframe, BMap, BVal};
use crate::io;
use crate::lattice::{
    find_lattice_iso, lattice_homs, numbered, prime_ideals, Elem, FiniteLattice, FinitePoset, LatticeHom,
};
use crate::report::Violation;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Iso,
    NotIso { reason: String },
}

/// An explicit pair of maps between two structures and whether they are
/// mutually inverse isomorphisms.
#[derive(Clone, Debug, Serialize)]
pub struct DualityWitness {
    pub kind: &'static str,
    /// Carrier map for algebras, point map for spaces.
    pub forward: Vec<usize>,
    pub backward: Vec<usize>,
    #[serde(flatten)]
    pub verdict: Verdict,
    pub source: Value,
    pub target: Value,
}

impl DualityWitness {
    pub fn is_iso(&self) -> bool {
        self.verdict == Verdict::Iso
    }

    pub fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("witness serializes");
        v.as_object_mut().expect("object").insert("version".into(), json!(io::VERSION));
        v
    }
}

fn not_iso(reason: impl Into<String>) -> Verdict {
    Verdict::NotIso { reason: reason.into() }
}

/// Checks that `forward` and `backward` are mutually inverse d-lattice homs.
fn algebra_verdict(src: &DLattice, tgt: &DLattice, forward: &DLatticeHom, backward: &DLatticeHom) -> Verdict {
    if let Some(v) = forward.validate(src, tgt).violation() {
        return not_iso(format!("forward map: {v}"));
    }
    if let Some(v) = backward.validate(tgt, src).violation() {
        return not_iso(format!("backward map: {v}"));
    }
    if !forward.compose(backward).is_identity() || !backward.compose(forward).is_identity() {
        return not_iso("composites are not identities");
    }
    Verdict::Iso
}

/// Checks that a point bijection carries each topology exactly onto the other.
fn space_verdict(x: &BiTopSpace, y: &BiTopSpace, forward: &[usize], backward: &[usize]) -> Verdict {
    if forward.len() != x.len() || backward.len() != y.len() {
        return not_iso("point counts differ");
    }
    if (0..x.len()).any(|p| forward[p] >= y.len() || backward[forward[p]] != p)
        || (0..y.len()).any(|q| backward[q] >= x.len() || forward[backward[q]] != q)
    {
        return not_iso("maps are not mutually inverse");
    }
    let image = |f: &[usize], m: Mask| bits::from_indices(bits::members(m).map(|p| f[p]));
    let carries = |a: &BiTopSpace, b: &BiTopSpace, f: &[usize]| {
        a.tau_plus().iter().all(|&u| b.is_plus_open(image(f, u)))
            && a.tau_minus().iter().all(|&u| b.is_minus_open(image(f, u)))
    };
    if !carries(x, y, forward) || !carries(y, x, backward) {
        return not_iso("open sets are not carried onto open sets");
    }
    Verdict::Iso
}

fn invert(map: &[usize], n: usize) -> Option<Vec<usize>> {
    LatticeHom { map: map.to_vec() }.inverse().filter(|h| h.map.len() == n).map(|h| h.map)
}

/// `A ≅ dClop(dSpec A)` via `a ↦ φ₊(a)`, `b ↦ φ₋(b)`.
pub fn unit_roundtrip(a: &DBooleanAlgebra) -> Result<DualityWitness> {
    let spec = dspec(a)?;
    let clop = d_clop(&spec.space)?;
    let (pp, pm) = phi_sets(a, &spec.points);
    let (cp, cm) = (spec.space.plus_clopens(), spec.space.minus_clopens());
    let locate = |fam: &[Mask], phi: &[Mask]| -> Option<Vec<Elem>> {
        phi.iter().map(|m| fam.iter().position(|u| u == m)).collect()
    };
    let source = io::dbool_json(a);
    let target = io::dbool_json(&clop);
    let (Some(fp), Some(fm)) = (locate(&cp, &pp), locate(&cm, &pm)) else {
        return Ok(DualityWitness {
            kind: "unit",
            forward: vec![],
            backward: vec![],
            verdict: not_iso("some φ set is not d-clopen"),
            source,
            target,
        });
    };
    let forward = DLatticeHom::from_components(a, &clop, &fp, &fm);
    let backward = match forward.inverse() {
        Some(b) if b.map.len() == clop.size() => b,
        _ => {
            return Ok(DualityWitness {
                kind: "unit",
                forward: forward.map,
                backward: vec![],
                verdict: not_iso("φ is not a bijection onto the d-clopens"),
                source,
                target,
            })
        }
    };
    let verdict = algebra_verdict(a, &clop, &forward, &backward);
    Ok(DualityWitness { kind: "unit", forward: forward.map, backward: backward.map, verdict, source, target })
}

/// The d-point `[x]` of a d-lattice of sets: `[x](U, V) = [x ∈ U]tt ∨ [x ∈ V]ff`.
fn clopen_point(x: &BiTopSpace, a: &DBooleanAlgebra, p: usize) -> BMap {
    let (cp, cm) = (x.plus_clopens(), x.minus_clopens());
    BMap {
        values: a
            .elements()
            .map(|e| {
                let (i, j) = a.coords(e);
                BVal::from_flags(bits::contains(cp[i], p), bits::contains(cm[j], p))
            })
            .collect(),
    }
}

/// `X ≅ dSpec(dClop X)` via `x ↦ [x]`. `X` must be Stone.
pub fn counit_roundtrip(x: &BiTopSpace) -> Result<DualityWitness> {
    if !x.is_stone()? {
        return Err(Error::NotStone);
    }
    let clop = d_clop(x)?;
    let spec = dspec(&clop)?;
    let source = io::bitop_json(x);
    let target = io::bitop_json(&spec.space);
    let forward: Option<Vec<usize>> =
        (0..x.len()).map(|p| spec.points.iter().position(|g| g.map == clopen_point(x, &clop, p))).collect();
    let Some(forward) = forward else {
        return Ok(DualityWitness {
            kind: "counit",
            forward: vec![],
            backward: vec![],
            verdict: not_iso("some [x] is not a prime d-ideal"),
            source,
            target,
        });
    };
    let Some(backward) = invert(&forward, spec.space.len()) else {
        return Ok(DualityWitness {
            kind: "counit",
            forward,
            backward: vec![],
            verdict: not_iso("x ↦ [x] is not a bijection"),
            source,
            target,
        });
    };
    let verdict = space_verdict(x, &spec.space, &forward, &backward);
    Ok(DualityWitness { kind: "counit", forward, backward, verdict, source, target })
}

/// `dSpec L` and the d-points of `idl L`, matched through `η`, are homeomorphic.
pub fn dspec_vs_dpt_idl(dl: &DLattice) -> Result<DualityWitness> {
    let spec = dspec(dl)?;
    let idl = idl_dframe(dl)?;
    let pts = d_points(&idl)?;
    // η is the identity on carrier ids, so p ∘ η has the same value vector as p
    let forward: Option<Vec<usize>> =
        spec.points.iter().map(|g| pts.points.iter().position(|p| p.map == g.map)).collect();
    let source = io::bitop_json(&spec.space);
    let target = io::bitop_json(&pts.space);
    let fail = |forward: Vec<usize>, reason: &str| DualityWitness {
        kind: "dspec-dpt-idl",
        forward,
        backward: vec![],
        verdict: not_iso(reason),
        source: source.clone(),
        target: target.clone(),
    };
    let Some(forward) = forward else { return Ok(fail(vec![], "unmatched prime d-ideal")) };
    let Some(backward) = invert(&forward, pts.space.len()) else { return Ok(fail(forward, "not a bijection")) };
    let verdict = space_verdict(&spec.space, &pts.space, &forward, &backward);
    Ok(DualityWitness { kind: "dspec-dpt-idl", forward, backward, verdict, source, target })
}

pub fn dspec_equals_dpt_idl(dl: &DLattice) -> Result<bool> {
    Ok(dspec_vs_dpt_idl(dl)?.is_iso())
}

/// Outcome of the three spatiality clauses for `idl L` against `dSpec L`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpatialityReport {
    /// Distinct ideal pairs are told apart by some prime d-ideal.
    pub separation: Option<Violation>,
    /// `(I₊, I₋) ∈ con ⟺ φ₊(I₊) ∩ φ₋(I₋) = ∅`.
    pub con: Option<Violation>,
    /// `(I₊, I₋) ∈ tot ⟺ φ₊(I₊) ∪ φ₋(I₋) = dSpec L`.
    pub tot: Option<Violation>,
}

impl SpatialityReport {
    pub fn holds(&self) -> bool {
        self.separation.is_none() && self.con.is_none() && self.tot.is_none()
    }
}

pub fn spatiality_check(dl: &DLattice) -> Result<SpatialityReport> {
    let spec = dspec(dl)?;
    let idl = idl_dframe(dl)?;
    let (pp, pm) = phi_sets(dl, &spec.points);
    let all = spec.space.all();
    // φ of the ideal ↓a is the union of φ over its members
    let phi_ideal = |lat: &FiniteLattice, phi: &[Mask], a: Elem| bits::members(lat.down_set(a)).fold(0, |acc, x| acc | phi[x]);
    let ip: Vec<Mask> = dl.plus().elements().map(|a| phi_ideal(dl.plus(), &pp, a)).collect();
    let im: Vec<Mask> = dl.minus().elements().map(|b| phi_ideal(dl.minus(), &pm, b)).collect();
    let label = |x: Elem| idl.label(x);
    let mut separation = None;
    'outer: for x in idl.elements() {
        for y in idl.elements().skip(x + 1) {
            let ((a1, b1), (a2, b2)) = (idl.coords(x), idl.coords(y));
            if ip[a1] == ip[a2] && im[b1] == im[b2] {
                separation = Some(Violation::new("separation", [label(x), label(y)]));
                break 'outer;
            }
        }
    }
    let con = idl.elements().find(|&x| {
        let (a, b) = idl.coords(x);
        idl.in_con(x) != (ip[a] & im[b] == 0)
    });
    let tot = idl.elements().find(|&x| {
        let (a, b) = idl.coords(x);
        idl.in_tot(x) != (ip[a] | im[b] == all)
    });
    Ok(SpatialityReport {
        separation,
        con: con.map(|x| Violation::new("con", [label(x)])),
        tot: tot.map(|x| Violation::new("tot", [label(x)])),
    })
}

/// `A ≅ λ(A₊)` with `f₊ = id` and `f₋ = †⁻¹`.
pub fn lambda_iso_witness(a: &DBooleanAlgebra) -> Result<DualityWitness> {
    let l = lambda(a.plus())?;
    let fm: Vec<Elem> = a.minus().elements().map(|b| a.dagger_inv(b)).collect();
    let ids: Vec<Elem> = a.plus().elements().collect();
    let forward = DLatticeHom::from_components(a, &l, &ids, &fm);
    let backward = DLatticeHom::from_components(&l, a, &ids, a.dagger_map());
    let verdict = algebra_verdict(a, &l, &forward, &backward);
    Ok(DualityWitness {
        kind: "lambda",
        forward: forward.map,
        backward: backward.map,
        verdict,
        source: io::dbool_json(a),
        target: io::dbool_json(&l),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaReport {
    /// Algebras not isomorphic to λ of their plus lattice, by index.
    pub not_lambda: Vec<usize>,
    /// `(i, j, #dlattice homs, #lattice homs)` for each ordered pair of lattices.
    pub hom_counts: Vec<(usize, usize, usize, usize)>,
    /// Pairs where some lattice hom `h` does not give the d-lattice hom `λ(h)`.
    pub functor_failures: Vec<(usize, usize)>,
}

impl LambdaReport {
    pub fn holds(&self) -> bool {
        self.not_lambda.is_empty()
            && self.functor_failures.is_empty()
            && self.hom_counts.iter().all(|&(_, _, d, l)| d == l)
    }
}

/// Essential surjectivity on `algebras` and hom-set bijections on `lattices`.
pub fn lambda_equivalence_check(lattices: &[FiniteLattice], algebras: &[DBooleanAlgebra]) -> Result<LambdaReport> {
    let mut not_lambda = Vec::new();
    for (i, a) in algebras.iter().enumerate() {
        if !lambda_iso_witness(a)?.is_iso() {
            not_lambda.push(i);
        }
    }
    let lams: Vec<DBooleanAlgebra> = lattices.iter().map(lambda).collect::<Result<_>>()?;
    let pairs: Vec<(usize, usize)> =
        (0..lattices.len()).flat_map(|i| (0..lattices.len()).map(move |j| (i, j))).collect();
    let rows: Vec<((usize, usize, usize, usize), bool)> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let homs = lattice_homs(&lattices[i], &lattices[j]);
            let dhoms = enumerate_dlattice_homs(&lams[i], &lams[j]);
            let images: BTreeSet<Vec<Elem>> = homs
                .iter()
                .map(|h| DLatticeHom::from_components(&lams[i], &lams[j], &h.map, &h.map).map)
                .collect();
            let dset: BTreeSet<Vec<Elem>> = dhoms.iter().map(|h| h.map.clone()).collect();
            ((i, j, dhoms.len(), homs.len()), images == dset)
        })
        .collect();
    let functor_failures = rows.iter().filter(|(_, ok)| !ok).map(|((i, j, _, _), _)| (*i, *j)).collect();
    Ok(LambdaReport { not_lambda, hom_counts: rows.into_iter().map(|(r, _)| r).collect(), functor_failures })
}

/// `Spec B` with the topology generated by `Φ(↓a) = {J : a ∉ J}`.
pub fn classical_spec(b: &FiniteLattice) -> Topology {
    let primes = prime_ideals(b);
    let labels = primes.iter().map(|j| format!("↓{}", b.label(j.generator(b)))).collect();
    let subbase: Vec<Mask> = b
        .elements()
        .map(|a| bits::from_indices(primes.iter().enumerate().filter(|(_, j)| !j.contains(a)).map(|(i, _)| i)))
        .collect();
    Topology::generated(labels, &subbase)
}

/// The Boolean lattice of clopen sets of a classical space.
pub fn clopen_lattice(t: &Topology) -> Result<FiniteLattice> {
    let c = t.clopens();
    FiniteLattice::from_set_family(c.iter().map(|&m| bits::render(m, t.labels())).collect(), &c)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassicalSquare {
    /// Point map `ω(Spec B) → dSpec(ω B)`.
    pub spaces: Option<Vec<usize>>,
    /// Carrier map `ω(Clop(Spec B)) → dClop(dSpec(ω B))`.
    pub algebras: Option<Vec<usize>>,
}

impl ClassicalSquare {
    pub fn commutes(&self) -> bool {
        self.spaces.is_some() && self.algebras.is_some()
    }
}

pub fn classical_square_check(b: &FiniteLattice) -> Result<ClassicalSquare> {
    if !crate::lattice::is_boolean(b) {
        return Err(Error::Precondition("lattice is not Boolean".into()));
    }
    let spec = classical_spec(b);
    let w = omega(b)?;
    let ds = dspec(&w)?;
    let spaces = find_homeomorphism(&omega_space(&spec), &ds.space);
    let left = omega(&clopen_lattice(&spec)?)?;
    let right = d_clop(&ds.space)?;
    let algebras = find_dlattice_iso(&left, &right).map(|h| h.map);
    Ok(ClassicalSquare { spaces, algebras })
}

/// Every set of upper bounds has a least element, for both sides.
///
/// Sets of upper bounds are exactly the intersections of principal up-sets,
/// so the scan runs over that intersection closure.
pub fn is_complete(lat: &FiniteLattice) -> bool {
    let mut family: BTreeSet<Mask> = lat.elements().map(|a| lat.up_set(a)).collect();
    family.insert(lat.all());
    loop {
        let items: Vec<Mask> = family.iter().copied().collect();
        let before = family.len();
        for (i, &a) in items.iter().enumerate() {
            for &b in &items[i + 1..] {
                family.insert(a & b);
            }
        }
        if family.len() == before {
            break;
        }
    }
    family.iter().all(|&ub| bits::members(ub).any(|m| bits::is_subset(ub, lat.up_set(m))))
}

/// `(X extremally disconnected, dClop X complete)` for zero-dimensional `X`.
pub fn complete_extremally_disconnected_check(x: &BiTopSpace) -> Result<(bool, bool)> {
    if !x.is_zero_dimensional() {
        return Err(Error::NotZeroDimensional("bitopological space".into()));
    }
    let c = d_clop(x)?;
    Ok((x.is_extremally_disconnected(), is_complete(c.plus()) && is_complete(c.minus())))
}

/// `dSpec(f) : dSpec B → dSpec A`, `g ↦ g ∘ f`, for `f : A → B`.
pub fn dspec_map(a_spec: &PointSpace, b_spec: &PointSpace, f: &DLatticeHom) -> Option<Vec<usize>> {
    b_spec
        .points
        .iter()
        .map(|g| {
            let pulled = BMap { values: f.map.iter().map(|&y| g.map.get(y)).collect() };
            a_spec.points.iter().position(|p| p.map == pulled)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Conjecture {
    /// A T0 compact space whose Pervin-connected sets are points, but not Stone.
    Q1,
    /// A d-lattice whose d-frame of ideals is not spatial.
    Q2,
}

impl std::str::FromStr for Conjecture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "q1" => Ok(Conjecture::Q1),
            "q2" => Ok(Conjecture::Q2),
            _ => Err(Error::Precondition(format!("unknown conjecture {s:?}"))),
        }
    }
}

/// Search bounds: point count for Q1, coordinate lattice size for Q2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub max_points: usize,
    pub max_lattice: usize,
}

impl Bounds {
    pub const Q1_LIMIT: usize = 4;
    pub const Q2_LIMIT: usize = 5;

    pub fn uniform(n: usize) -> Self {
        Bounds { max_points: n, max_lattice: n }
    }
}

impl std::str::FromStr for Bounds {
    type Err = Error;

    /// `"n"` or `"points,lattice"`.
    fn from_str(s: &str) -> Result<Self> {
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| Error::Precondition(format!("bad bound {t:?}")));
        match s.split_once(',') {
            Some((a, b)) => Ok(Bounds { max_points: parse(a)?, max_lattice: parse(b)? }),
            None => Ok(Bounds::uniform(parse(s)?)),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "outcome", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    ExhaustedNoCounterexample,
    /// `count` re-verified counterexamples; `structure` is the first in enumeration order.
    Counterexample { count: usize, structure: Value },
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub conjecture: Conjecture,
    pub bounds: Bounds,
    /// Number of candidate structures examined.
    pub examined: usize,
    #[serde(flatten)]
    pub outcome: Outcome,
    pub notes: Vec<String>,
}

impl SearchReport {
    pub fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        let m = v.as_object_mut().expect("object");
        m.insert("kind".into(), json!("search-report"));
        m.insert("version".into(), json!(io::VERSION));
        v
    }

    pub fn found(&self) -> bool {
        matches!(self.outcome, Outcome::Counterexample { .. })
    }
}

/// All topologies on `n` points, as up-set families of the preorders on `n` points.
pub fn all_topologies(n: usize) -> Vec<Vec<Mask>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|(i, j)| i != j).collect();
    let mut out = Vec::new();
    for code in 0u64..(1 << pairs.len()) {
        let mut up: Vec<Mask> = (0..n).map(bits::bit).collect();
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if code >> k & 1 == 1 {
                up[i] |= bits::bit(j);
            }
        }
        let transitive = (0..n).all(|i| bits::members(up[i]).all(|j| bits::is_subset(up[j], up[i])));
        if transitive {
            let opens: Vec<Mask> = (0..=bits::full(n))
                .filter(|&m| bits::members(m).all(|i| bits::is_subset(up[i], m)))
                .collect();
            out.push(generate_topology(n, &opens));
        }
    }
    out
}

pub const PERVIN_NOTE: &str = "Pervin connectedness: S is disconnected iff S ⊆ U ∪ V for some U ∈ τ₊, V ∈ τ₋ \
with S ∩ U and S ∩ V nonempty and S ∩ U ∩ V empty";

fn q1_candidate(x: &BiTopSpace) -> Result<bool> {
    Ok(x.is_t0() && x.is_compact() && x.connected_sets_are_points() && !x.is_stone()?)
}

fn search_q1(bounds: Bounds) -> Result<SearchReport> {
    if bounds.max_points > Bounds::Q1_LIMIT {
        return Err(Error::BoundsTooLarge(format!("Q1 supports at most {} points", Bounds::Q1_LIMIT)));
    }
    let mut examined = 0;
    let mut count = 0;
    let mut first = None;
    let mut notes = vec![
        PERVIN_NOTE.to_string(),
        "finite topologies are Alexandrov; each is enumerated as the up-sets of a preorder".to_string(),
    ];
    for n in 1..=bounds.max_points {
        let tops = all_topologies(n);
        let pairs: Vec<(usize, usize)> =
            (0..tops.len()).flat_map(|i| (0..tops.len()).map(move |j| (i, j))).collect();
        examined += pairs.len();
        let hits: Vec<(usize, usize)> = pairs
            .par_iter()
            .copied()
            .filter(|&(i, j)| q1_candidate(&BiTopSpace::from_subbases(numbered(n), &tops[i], &tops[j])).unwrap_or(false))
            .collect();
        // re-verification with the validated constructor and every literal predicate
        let mut verified = 0;
        for &(i, j) in &hits {
            let x = BiTopSpace::new(numbered(n), tops[i].clone(), tops[j].clone())?;
            if q1_candidate(&x)? {
                verified += 1;
                first.get_or_insert_with(|| io::bitop_json(&x));
            }
        }
        if verified > 0 {
            notes.push(format!("{verified} labelled counterexamples on {n} points"));
        }
        count += verified;
    }
    let outcome = match first {
        Some(structure) => Outcome::Counterexample { count, structure },
        None => Outcome::ExhaustedNoCounterexample,
    };
    Ok(SearchReport { conjecture: Conjecture::Q1, bounds, examined, outcome, notes })
}

/// Distributive lattices with `1..=max` elements, one per isomorphism class.
pub fn distributive_lattices_up_to(max: usize) -> Vec<FiniteLattice> {
    let mut out: Vec<FiniteLattice> = Vec::new();
    // every finite distributive lattice is the down-set lattice of its join-irreducibles
    for n in 0..=max {
        for p in crate::corpus::unlabeled_posets(n) {
            let l = crate::lattice::birkhoff(&p);
            if l.len() <= max && !out.iter().any(|m| find_lattice_iso(m, &l).is_some()) {
                out.push(l);
            }
        }
    }
    out.sort_by_key(|l| l.len());
    out
}

/// Every valid `(con, tot)` on `plus × minus`.
pub fn all_dlattices_on(plus: &FiniteLattice, minus: &FiniteLattice) -> Vec<DLattice> {
    if plus.is_trivial() || minus.is_trivial() {
        return Vec::new();
    }
    let prod = plus.product(minus).expect("small product");
    let base = DLattice::from_parts(plus.clone(), minus.clone(), [], []);
    let (tt, ff) = (base.tt(), base.ff());
    let closed = |m: Mask| {
        bits::members(m).all(|x| {
            bits::members(m).all(|y| {
                bits::contains(m, base.logic_meet(x, y)) && bits::contains(m, base.logic_join(x, y))
            })
        })
    };
    let has_pair = |m: Mask| bits::contains(m, tt) && bits::contains(m, ff);
    let cons: Vec<Mask> = prod.poset().down_sets().into_iter().filter(|&m| has_pair(m) && closed(m)).collect();
    let tots: Vec<Mask> = prod.poset().up_sets().into_iter().filter(|&m| has_pair(m) && closed(m)).collect();
    // bad[α]: elements sharing a coordinate with α but not above it
    let bad: Vec<Mask> = base
        .elements()
        .map(|a| {
            let (a1, b1) = base.coords(a);
            bits::from_indices(base.elements().filter(|&b| {
                let (a2, b2) = base.coords(b);
                (a1 == a2 || b1 == b2) && !base.leq(a, b)
            }))
        })
        .collect();
    let mut out = Vec::new();
    for &c in &cons {
        for &t in &tots {
            if bits::members(c).all(|a| t & bad[a] == 0) {
                let pairs = |m: Mask| bits::members(m).map(|x| base.coords(x)).collect::<Vec<_>>();
                out.push(DLattice::from_parts(plus.clone(), minus.clone(), pairs(c), pairs(t)));
            }
        }
    }
    out
}

/// `idl L` has no isomorphism onto `dO(dpt idl L)`.
fn is_non_spatial(dl: &DLattice) -> Result<bool> {
    let idl = idl_dframe(dl)?;
    let pts = d_points(&idl)?;
    Ok(d_open(&pts.space).ok().and_then(|o| find_dlattice_iso(&idl, &o)).is_none())
}

fn search_q2(bounds: Bounds) -> Result<SearchReport> {
    if bounds.max_lattice > Bounds::Q2_LIMIT {
        return Err(Error::BoundsTooLarge(format!(
            "Q2 supports coordinate lattices of at most {} elements",
            Bounds::Q2_LIMIT
        )));
    }
    let lats = distributive_lattices_up_to(bounds.max_lattice);
    let mut notes = vec![
        "coordinate lattices enumerated up to isomorphism; all valid con/tot on each pair".to_string(),
        "for finite inputs spatial ⟺ the three clauses hold; every clause failure is re-verified by \
         searching for an isomorphism idl L ≅ dO(dpt idl L)"
            .to_string(),
    ];
    let mut examined = 0;
    let mut count = 0;
    let mut first = None;
    for p in &lats {
        for m in &lats {
            let cands = all_dlattices_on(p, m);
            examined += cands.len();
            let hits: Vec<&DLattice> = cands
                .par_iter()
                .filter(|dl| spatiality_check(dl).map(|r| !r.holds()).unwrap_or(true))
                .collect();
            let verified: Vec<bool> = hits
                .par_iter()
                .map(|dl| dl.validate().is_pass() && is_non_spatial(dl).unwrap_or(false))
                .collect();
            for (dl, ok) in hits.iter().zip(&verified) {
                if *ok {
                    count += 1;
                    first.get_or_insert_with(|| io::dlattice_json(dl));
                } else {
                    notes.push(format!("clause failure not confirmed on {}", io::dlattice_json(dl)));
                }
            }
        }
    }
    let outcome = match first {
        Some(structure) => Outcome::Counterexample { count, structure },
        None => Outcome::ExhaustedNoCounterexample,
    };
    if count > 0 {
        notes.push(format!("{count} non-spatial d-lattices (labelled con/tot, coordinate lattices up to isomorphism)"));
    }
    Ok(SearchReport { conjecture: Conjecture::Q2, bounds, examined, outcome, notes })
}

/// Exhaustive bounded search; the report records the bounds it ran under.
pub fn conjecture_search(c: Conjecture, bounds: Bounds) -> Result<SearchReport> {
    match c {
        Conjecture::Q1 => search_q1(bounds),
        Conjecture::Q2 => search_q2(bounds),
    }
}

/// Is `p` order-isomorphic to the specialization order of `x`?
pub fn specialization_matches(x: &BiTopSpace, p: &FinitePoset) -> bool {
    let s = x.specialization();
    x.len() == p.len() && (0..p.len()).all(|a| (0..p.len()).all(|b| p.leq(a, b) == bits::contains(s.leq[a], b)))
}

/// Side helper used by reports: the φ set of a one-sided element.
pub fn phi(dl: &DLattice, spec: &PointSpace, side: Side, a: Elem) -> Mask {
    let (pp, pm) = phi_sets(dl, &spec.points);
    match side {
        Side::Plus => pp[a],
        Side::Minus => pm[a],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitop::stone_space_from_poset;
    use crate::dlattice::bool4;
    use crate::lattice::birkhoff;

    fn chain3() -> FiniteLattice {
        FiniteLattice::chain(3).relabeled(vec!["0".into(), "m".into(), "1".into()])
    }

    fn x2() -> BiTopSpace {
        stone_space_from_poset(&FinitePoset::chain(2))
    }

    fn b4() -> DBooleanAlgebra {
        DBooleanAlgebra::from_dlattice(bool4()).unwrap()
    }

    #[test]
    fn dspec_examples() {
        assert_eq!(dspec(&bool4()).unwrap().space.len(), 1);
        let s = dspec(&lambda(&chain3()).unwrap()).unwrap();
        assert!(find_homeomorphism(&s.space, &x2()).is_some());
        let s = dspec(&lambda(&FiniteLattice::boolean(2)).unwrap()).unwrap();
        assert_eq!(s.space.len(), 2);
        assert_eq!(s.space.tau_plus().len(), 4);
        assert_eq!(s.space.tau_minus().len(), 4);
    }

    #[test]
    fn dpt_idl() {
        for dl in [bool4(), lambda(&chain3()).unwrap().dlattice().clone(), omega(&chain3()).unwrap()] {
            assert!(dspec_equals_dpt_idl(&dl).unwrap());
        }
    }

    #[test]
    fn unit_examples() {
        assert!(unit_roundtrip(&b4()).unwrap().is_iso());
        let a = lambda(&birkhoff(&FinitePoset::antichain(2))).unwrap();
        assert!(unit_roundtrip(&a).unwrap().is_iso());
        assert!(unit_roundtrip(&d_clop(&x2()).unwrap()).unwrap().is_iso());
    }

    #[test]
    fn counit_examples() {
        assert!(counit_roundtrip(&stone_space_from_poset(&FinitePoset::chain(1))).unwrap().is_iso());
        let w = counit_roundtrip(&x2()).unwrap();
        assert!(w.is_iso());
        assert_eq!(w.forward.len(), 2);
        let indiscrete = omega_space(&Topology::indiscrete(2));
        assert!(matches!(counit_roundtrip(&indiscrete), Err(Error::NotStone)));
    }

    #[test]
    fn spatiality_examples() {
        assert!(spatiality_check(&lambda(&chain3()).unwrap()).unwrap().holds());
        assert!(spatiality_check(&bool4()).unwrap().holds());
    }

    #[test]
    fn lambda_checks() {
        let lats = vec![FiniteLattice::chain(2), chain3()];
        let algs = vec![d_clop(&x2()).unwrap(), b4()];
        let r = lambda_equivalence_check(&lats, &algs).unwrap();
        assert!(r.holds());
        assert!(r.hom_counts.contains(&(1, 1, 3, 3)));
        assert!(r.hom_counts.contains(&(0, 0, 1, 1)));
        let w = lambda_iso_witness(&d_clop(&x2()).unwrap()).unwrap();
        assert!(w.is_iso());
    }

    #[test]
    fn classical_squares() {
        for (k, pts) in [(1, 1), (2, 2), (3, 3)] {
            let b = FiniteLattice::boolean(k);
            let sq = classical_square_check(&b).unwrap();
            assert!(sq.commutes());
            assert_eq!(classical_spec(&b).len(), pts);
            // discrete
            assert_eq!(classical_spec(&b).opens().len(), 1 << pts);
        }
        assert!(classical_square_check(&chain3()).is_err());
    }

    #[test]
    fn completeness() {
        for x in [x2(), stone_space_from_poset(&FinitePoset::antichain(2)), stone_space_from_poset(&FinitePoset::chain(1))] {
            assert_eq!(complete_extremally_disconnected_check(&x).unwrap(), (true, true));
        }
        let sier = omega_space(&Topology::sierpinski());
        assert!(complete_extremally_disconnected_check(&sier).is_err());
    }

    #[test]
    fn topology_counts() {
        // preorders on n points: 1, 1, 4, 29, 355
        let counts: Vec<usize> = (0..=4).map(|n| all_topologies(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 4, 29, 355]);
    }

    #[test]
    fn distributive_counts() {
        // distributive lattices by size: 1, 1, 1, 2, 3
        let mut by_size = [0usize; 6];
        for l in distributive_lattices_up_to(5) {
            by_size[l.len()] += 1;
        }
        assert_eq!(&by_size[1..], &[1, 1, 1, 2, 3]);
    }

    #[test]
    fn dlattices_on_small_pairs_validate() {
        let c2 = FiniteLattice::chain(2);
        let all = all_dlattices_on(&c2, &c2);
        assert!(all.iter().all(|d| d.validate().is_pass()));
        assert!(all.contains(&bool4()));
        // oracle: all con/tot subset pairs of the 4-element carrier, filtered by the validator
        let mut oracle = 0;
        for c in 0u64..16 {
            for t in 0u64..16 {
                let base = DLattice::from_parts(c2.clone(), c2.clone(), [], []);
                let pairs = |m: Mask| bits::members(m).map(|x| base.coords(x)).collect::<Vec<_>>();
                if DLattice::from_parts(c2.clone(), c2.clone(), pairs(c), pairs(t)).validate().is_pass() {
                    oracle += 1;
                }
            }
        }
        assert_eq!(all.len(), oracle);
    }

    #[test]
    fn empty_bounds() {
        for c in [Conjecture::Q1, Conjecture::Q2] {
            let r = conjecture_search(c, Bounds::uniform(0)).unwrap();
            assert!(!r.found());
            assert_eq!(r.examined, 0);
        }
        assert!(matches!(conjecture_search(Conjecture::Q1, Bounds::uniform(9)), Err(Error::BoundsTooLarge(_))));
        assert_eq!("2,3".parse::<Bounds>().unwrap(), Bounds { max_points: 2, max_lattice: 3 });
    }

    #[test]
    fn naturality_spot_check() {
        let (a, b) = (lambda(&FiniteLattice::chain(2)).unwrap(), lambda(&chain3()).unwrap());
        let (sa, sb) = (dspec(&a).unwrap(), dspec(&b).unwrap());
        for f in enumerate_dlattice_homs(&a, &b) {
            let g = dspec_map(&sa, &sb, &f).unwrap();
            assert!(crate::bitop::is_continuous(&g, &sb.space, &sa.space));
        }
    }
}
