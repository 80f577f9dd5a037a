//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are printed under a plain `cargo test`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use bistone::bitop::{d_clop, d_open, d_points, dspec, is_continuous, BiTopSpace};
use bistone::bits::{self, Mask};
use bistone::corpus::{unlabeled_posets, Corpus};
use bistone::duality::{
    all_topologies, classical_square_check, complete_extremally_disconnected_check, conjecture_search,
    counit_roundtrip, dspec_equals_dpt_idl, is_complete, spatiality_check, unit_roundtrip, Bounds, Conjecture, Outcome,
};
use bistone::ideals::{
    db_idl_witness, epsilon_kappa, idl_dframe, is_compact_dframe, is_zero_dimensional_dframe, prime_d_ideals_brute,
    prime_d_ideals_structural, BMap, BVal,
};
use bistone::io::{self, Document};
use bistone::{bool4, find_dlattice_iso, omega, prime_ideals, DLattice, FiniteLattice};

/// Criterion outcome: `Err` carries the first thing that went wrong.
type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn corpus() -> Corpus {
    Corpus::build(5).expect("corpus builds")
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn ac01_axioms() -> Check {
    let b = bool4();
    ensure(b.validate().is_pass(), || "𝔹 does not validate".into())?;
    let (plus, minus) = (b.plus().clone(), b.minus().clone());
    let mut con = b.con_pairs();
    con.push(b.coords(b.top()));
    let r = DLattice::from_parts(plus.clone(), minus.clone(), con, b.tot_pairs()).validate();
    ensure(r.rule() == Some("con–tot"), || format!("1 in con gave {r}"))?;
    let tot: Vec<_> = b.tot_pairs().into_iter().filter(|&p| p != b.coords(b.ff())).collect();
    let r = DLattice::from_parts(plus.clone(), minus.clone(), b.con_pairs(), tot).validate();
    ensure(r.rule() == Some("tot–tt,ff"), || format!("ff removed from tot gave {r}"))?;
    // 𝔹 carries exactly one d-lattice structure: scan all 2^4 × 2^4 choices
    let mut valid = 0;
    for c in 0u64..16 {
        for t in 0u64..16 {
            let pairs = |m: Mask| bits::members(m).map(|x| b.coords(x)).collect::<Vec<_>>();
            if DLattice::from_parts(plus.clone(), minus.clone(), pairs(c), pairs(t)).validate().is_pass() {
                valid += 1;
                ensure(c == bits::from_indices(b.con()) && t == bits::from_indices(b.tot()), || "unexpected structure".into())?;
            }
        }
    }
    ensure(valid == 1, || format!("{valid} structures on 𝔹"))?;
    Ok("𝔹 valid and unique; mutants name (con–tot) and (tot–tt,ff)".into())
}

fn ac02_unit(c: &Corpus) -> Check {
    ensure(unlabeled_posets(5).len() == 63, || "expected 63 posets on 5 points".into())?;
    let start = Instant::now();
    for (p, a) in c.posets.iter().zip(&c.algebras) {
        let w = unit_roundtrip(a).map_err(|e| e.to_string())?;
        ensure(w.is_iso(), || format!("{} points: {:?}", p.len(), w.verdict))?;
        // independent recheck: the forward map sends a to the d-clopen of primes with value tt
        let spec = dspec(a).map_err(|e| e.to_string())?;
        let clop = d_clop(&spec.space).map_err(|e| e.to_string())?;
        let cp = spec.space.plus_clopens();
        for x in a.plus().elements() {
            let want = bits::from_indices(
                spec.points.iter().enumerate().filter(|(_, g)| g.map.get(a.embed(bistone::Side::Plus, x)) == BVal::Tt).map(|(i, _)| i),
            );
            let got = cp[clop.coords(w.forward[a.embed(bistone::Side::Plus, x)]).0];
            ensure(want == got, || format!("φ₊ mismatch on a {}-point poset", p.len()))?;
        }
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(60), || format!("took {}", secs(t)))?;
    Ok(format!("{} algebras (63 from 5-point posets) in {}", c.algebras.len(), secs(t)))
}

fn ac03_counit(c: &Corpus) -> Check {
    let start = Instant::now();
    for (p, x) in c.posets.iter().zip(&c.spaces) {
        let w = counit_roundtrip(x).map_err(|e| e.to_string())?;
        ensure(w.is_iso(), || format!("{} points: {:?}", p.len(), w.verdict))?;
        let y = io::bitop_from_doc(&match io::parse_document(&w.target.to_string()) {
            Ok(Document::BiTop(d)) => d,
            other => return Err(format!("target payload: {other:?}")),
        })
        .map_err(|e| e.to_string())?;
        ensure(
            is_continuous(&w.forward, x, &y) && is_continuous(&w.backward, &y, x),
            || "witness is not a homeomorphism".into(),
        )?;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(60), || format!("took {}", secs(t)))?;
    Ok(format!("{} Stone spaces in {}", c.spaces.len(), secs(t)))
}

/// Elements with exactly one lower cover.
fn join_irreducible_count(l: &FiniteLattice) -> usize {
    l.elements()
        .filter(|&j| {
            let below: Vec<usize> = l.elements().filter(|&a| a != j && l.leq(a, j)).collect();
            below.iter().filter(|&&a| !below.iter().any(|&b| b != a && l.leq(a, b))).count() == 1
        })
        .count()
}

/// Homomorphisms into 𝔹 by scanning all 4^N maps.
fn hom_count_exhaustive(d: &DLattice) -> usize {
    let n = d.size();
    (0u64..1 << (2 * n))
        .filter(|code| {
            let g = BMap { values: (0..n).map(|i| BVal::from_bits((code >> (2 * i) & 3) as u8)).collect() };
            g.to_hom().validate(d, &bool4()).is_pass()
        })
        .count()
}

fn ac04_primes(c: &Corpus) -> Check {
    let mut exhaustive = 0;
    for (p, a) in c.posets.iter().zip(&c.algebras) {
        let mut s: Vec<BMap> = prime_d_ideals_structural(a).into_iter().map(|g| g.map).collect();
        let mut b: Vec<BMap> = prime_d_ideals_brute(a).into_iter().map(|g| g.map).collect();
        s.sort();
        b.sort();
        ensure(s == b, || format!("structural and brute paths differ on a {}-point poset", p.len()))?;
        let counts = [s.len(), prime_ideals(a.plus()).len(), join_irreducible_count(a.plus()), p.len()];
        ensure(counts.iter().all(|&k| k == p.len()), || format!("counts {counts:?}"))?;
        if a.size() <= 9 {
            exhaustive += 1;
            let k = hom_count_exhaustive(a);
            ensure(k == p.len(), || format!("exhaustive scan found {k} homs"))?;
        }
    }
    Ok(format!("{} algebras, {exhaustive} also by exhaustive scan", c.algebras.len()))
}

/// Every family of subsets of `n` points that contains ∅ and X and is closed
/// under binary unions and intersections.
fn all_topologies_raw(n: usize) -> Vec<Vec<Mask>> {
    let full = bits::full(n);
    let middle: Vec<Mask> = (1..full).collect();
    let mut out = Vec::new();
    for code in 0u64..1 << middle.len() {
        let mut fam: Vec<Mask> = bits::members(code).map(|i| middle[i]).collect();
        fam.push(0);
        fam.push(full);
        let closed = fam.iter().all(|&a| fam.iter().all(|&b| fam.contains(&(a | b)) && fam.contains(&(a & b))));
        if closed {
            fam.sort_by_key(|m| (m.count_ones(), *m));
            fam.dedup();
            out.push(fam);
        }
    }
    out
}

fn ac05_stone_characterizations(c: &Corpus) -> Check {
    let mut checked = 0;
    let mut stone = 0;
    for n in 0..=3 {
        // all topologies, both from preorders and from a raw scan of set families
        let tops = all_topologies(n);
        let raw = all_topologies_raw(n);
        let a: BTreeSet<Vec<Mask>> = tops.iter().cloned().collect();
        let b: BTreeSet<Vec<Mask>> = raw.iter().cloned().collect();
        ensure(a == b, || format!("{} vs {} topologies on {n} points", a.len(), b.len()))?;
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        for tp in &tops {
            for tm in &tops {
                let x = BiTopSpace::new(labels.clone(), tp.clone(), tm.clone()).map_err(|e| e.to_string())?;
                let (first, second) = (x.is_stone_via_zero_dim(), x.is_stone_via_order());
                ensure(first == second, || format!("disagree on {}", io::bitop_json(&x)))?;
                checked += 1;
                stone += first as usize;
            }
        }
    }
    for x in &c.spaces {
        ensure(x.is_stone_via_zero_dim() && x.is_stone_via_order(), || "corpus space not Stone".into())?;
    }
    Ok(format!("{checked} spaces on ≤ 3 points ({stone} Stone) plus {} corpus spaces", c.spaces.len()))
}

fn ac06_equivalence(c: &Corpus) -> Check {
    for a in &c.algebras {
        let (core, fwd, bwd) = db_idl_witness(a).map_err(|e| e.to_string())?;
        ensure(
            fwd.validate(a, &core.algebra).is_pass()
                && bwd.validate(&core.algebra, a).is_pass()
                && fwd.compose(&bwd).is_identity()
                && bwd.compose(&fwd).is_identity(),
            || "dB ∘ idl witness fails".into(),
        )?;
    }
    let mut frames: Vec<DLattice> =
        c.spaces.iter().map(|x| d_open(x).map(|f| f.into_dlattice()).map_err(|e| e.to_string())).collect::<Result<_, _>>()?;
    for a in &c.algebras {
        frames.push(idl_dframe(a).map_err(|e| e.to_string())?.into_dlattice());
    }
    for f in &frames {
        ensure(is_compact_dframe(f) && is_zero_dimensional_dframe(f), || "frame is not compact zero-dimensional".into())?;
        let w = epsilon_kappa(f).map_err(|e| e.to_string())?;
        ensure(w.epsilon.validate(&w.idl_db, f).is_pass() && w.kappa.validate(f, &w.idl_db).is_pass(), || "ε or κ invalid".into())?;
        ensure(w.kappa.compose(&w.epsilon).is_identity(), || "ε ∘ κ ≠ id".into())?;
        ensure(w.epsilon.compose(&w.kappa).is_identity(), || "κ ∘ ε ≠ id".into())?;
    }
    Ok(format!("{} algebras, {} compact zero-dimensional d-frames", c.algebras.len(), frames.len()))
}

fn ac07_dspec_composite(c: &Corpus) -> Check {
    let chain3 = FiniteLattice::chain(3);
    let mut dls: Vec<DLattice> = vec![omega(&chain3).map_err(|e| e.to_string())?];
    dls.extend(c.algebras.iter().map(|a| a.dlattice().clone()));
    dls.extend(c.lattices.iter().filter(|l| !l.is_trivial()).map(|l| omega(l).expect("ω of a distributive lattice")));
    let mut non_boolean = 0;
    for d in &dls {
        ensure(dspec_equals_dpt_idl(d).map_err(|e| e.to_string())?, || format!("fails on {}", io::dlattice_json(d)))?;
        non_boolean += !d.is_d_boolean() as usize;
    }
    ensure(!dls[0].is_d_boolean(), || "ω(3-chain) should not be d-Boolean".into())?;
    Ok(format!("{} d-lattices, {non_boolean} not d-Boolean, ω(3-chain) included", dls.len()))
}

fn ac08_spatiality(c: &Corpus) -> Check {
    for a in &c.algebras {
        let r = spatiality_check(a).map_err(|e| e.to_string())?;
        ensure(r.holds(), || format!("{r:?}"))?;
    }
    Ok(format!("clauses (i)–(iii) on {} algebras", c.algebras.len()))
}

fn ac09_extremal(c: &Corpus) -> Check {
    let mut spaces: Vec<BiTopSpace> = c.spaces.clone();
    for n in 1..=3 {
        let tops = all_topologies(n);
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        for tp in &tops {
            for tm in &tops {
                spaces.push(BiTopSpace::new(labels.clone(), tp.clone(), tm.clone()).map_err(|e| e.to_string())?);
            }
        }
    }
    let mut zd = 0;
    for x in spaces.iter().filter(|x| x.is_zero_dimensional()) {
        zd += 1;
        let (ed, complete) = complete_extremally_disconnected_check(x).map_err(|e| e.to_string())?;
        ensure(ed && complete, || format!("({ed}, {complete}) on {}", io::bitop_json(x)))?;
        // completeness scanned directly: every subset has a least upper bound
        let a = d_clop(x).map_err(|e| e.to_string())?;
        for l in [a.plus(), a.minus()] {
            ensure(l.len() > 16 || has_all_joins(l), || "missing supremum".into())?;
            ensure(is_complete(l), || "is_complete disagrees".into())?;
        }
    }
    Ok(format!("{zd} zero-dimensional spaces"))
}

fn has_all_joins(l: &FiniteLattice) -> bool {
    (0..=l.all()).all(|s| {
        let ub: Vec<usize> = l.elements().filter(|&u| bits::members(s).all(|x| l.leq(x, u))).collect();
        ub.iter().filter(|&&u| ub.iter().all(|&v| l.leq(u, v))).count() == 1
    })
}

fn ac10_classical() -> Check {
    for k in 1..=3 {
        let b = FiniteLattice::boolean(k);
        let sq = classical_square_check(&b).map_err(|e| e.to_string())?;
        ensure(sq.commutes(), || format!("square fails for 2^{k}: {sq:?}"))?;
        let om = omega(&b).map_err(|e| e.to_string())?;
        let idl = idl_dframe(&om).map_err(|e| e.to_string())?;
        let pts = d_points(&idl).map_err(|e| e.to_string())?;
        ensure(pts.space.len() == k, || format!("{} points for 2^{k}", pts.space.len()))?;
    }
    Ok("2, 2², 2³".into())
}

fn q1_literal(x: &BiTopSpace) -> bool {
    x.is_t0() && x.is_compact() && x.connected_sets_are_points() && !x.is_stone_via_zero_dim() && !x.is_stone_via_order()
}

fn ac11_searches() -> Check {
    let start = Instant::now();
    let mut lines = Vec::new();
    for c in [Conjecture::Q1, Conjecture::Q2] {
        let empty = conjecture_search(c, Bounds::uniform(0)).map_err(|e| e.to_string())?;
        ensure(!empty.found() && empty.examined == 0, || "(0,0) bounds should be empty".into())?;
        let bounds = match c {
            Conjecture::Q1 => Bounds { max_points: Bounds::Q1_LIMIT, max_lattice: 0 },
            Conjecture::Q2 => Bounds { max_points: 0, max_lattice: Bounds::Q2_LIMIT },
        };
        let r = conjecture_search(c, bounds).map_err(|e| e.to_string())?;
        ensure(r.bounds == bounds, || "report lost its bounds".into())?;
        let summary = match &r.outcome {
            Outcome::ExhaustedNoCounterexample => "exhausted, no counterexample".to_string(),
            Outcome::Counterexample { count, structure } => {
                // re-verify the payload from its JSON form
                let doc = io::parse_document(&structure.to_string()).map_err(|e| e.to_string())?;
                match (c, doc) {
                    (Conjecture::Q1, Document::BiTop(d)) => {
                        let x = io::bitop_from_doc(&d).map_err(|e| e.to_string())?;
                        ensure(q1_literal(&x), || "Q1 payload fails re-verification".into())?;
                    }
                    (Conjecture::Q2, Document::DLattice(d)) => {
                        let dl = io::dlattice_candidate(&d).map_err(|e| e.to_string())?;
                        ensure(dl.validate().is_pass(), || "Q2 payload is not a d-lattice".into())?;
                        let idl = idl_dframe(&dl).map_err(|e| e.to_string())?;
                        let o = d_points(&idl).and_then(|p| d_open(&p.space)).map_err(|e| e.to_string())?;
                        ensure(find_dlattice_iso(&idl, &o).is_none(), || "Q2 payload is spatial".into())?;
                    }
                    _ => return Err("payload has the wrong kind".into()),
                }
                format!("{count} counterexamples, reported one re-verified")
            }
        };
        lines.push(format!("{c:?} at ({},{}): {} examined, {summary}", bounds.max_points, bounds.max_lattice, r.examined));
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(600), || format!("took {}", secs(t)))?;
    Ok(format!("{} in {}", lines.join("; "), secs(t)))
}

fn main() -> ExitCode {
    let c = corpus();
    let criteria: Vec<(&str, Box<dyn Fn() -> Check + '_>)> = vec![
        ("axiom fidelity", Box::new(ac01_axioms)),
        ("unit round trip", Box::new(|| ac02_unit(&c))),
        ("counit round trip", Box::new(|| ac03_counit(&c))),
        ("prime d-ideal bijection", Box::new(|| ac04_primes(&c))),
        ("Stone characterizations agree", Box::new(|| ac05_stone_characterizations(&c))),
        ("dB ∘ idl and idl ∘ dB", Box::new(|| ac06_equivalence(&c))),
        ("dSpec = dpt ∘ idl", Box::new(|| ac07_dspec_composite(&c))),
        ("spatiality clauses", Box::new(|| ac08_spatiality(&c))),
        ("extremal disconnectedness", Box::new(|| ac09_extremal(&c))),
        ("classical ω squares", Box::new(ac10_classical)),
        ("bounded conjecture searches", Box::new(ac11_searches)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("AC{:02} {name}: PASS ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("AC{:02} {name}: FAIL ({why})", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
