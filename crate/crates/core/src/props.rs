//! Named invariant suites run over a corpus. Each property reports how many
//! instances it checked and the first failure it met.

use rayon::prelude::*;
use serde::Serialize;

use crate::bitop::{d_clop, d_open, d_points, dspec, is_continuous, is_d_sober, stone_type_counts, BiTopSpace};
use crate::bits::{self, Mask};
use crate::corpus::Corpus;
use crate::dlattice::{db, enumerate_dlattice_homs, find_dlattice_iso, omega, DBooleanAlgebra, DLattice, Side};
use crate::duality::{
    classical_square_check, complete_extremally_disconnected_check, counit_roundtrip, dspec_map, dspec_vs_dpt_idl,
    lambda_equivalence_check, lambda_iso_witness, spatiality_check, unit_roundtrip,
};
use crate::ideals::{
    all_d_filter_maps, all_d_ideal_maps, d_filter_to_map, d_ideal_to_map, db_idl_witness, epsilon_kappa,
    idl_dframe, is_compact_dframe, is_prime_map, is_zero_dimensional_dframe, map_to_d_filter, map_to_d_ideal,
    prime_d_ideals_brute, prime_d_ideals_structural, validate_d_filter_map, validate_d_ideal_map, BMap, BVal,
};
use crate::lattice::{birkhoff, is_prime_filter, prime_ideals, FiniteLattice, LatticeIdeal};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Lattice,
    DLattice,
    Ideals,
    Bitop,
    Duality,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Lattice, Suite::DLattice, Suite::Ideals, Suite::Bitop, Suite::Duality];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Lattice => "lattice",
            Suite::DLattice => "dlattice",
            Suite::Ideals => "ideals",
            Suite::Bitop => "bitop",
            Suite::Duality => "duality",
        }
    }

    /// Parses a suite name; `"all"` gives every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .map(|x| vec![x])
            .ok_or_else(|| Error::Precondition(format!("unknown suite {s:?}")))
    }
}

/// A corpus plus structures supplied from outside, which may be invalid.
#[derive(Clone, Debug)]
pub struct PropInput {
    pub corpus: Corpus,
    pub lattices: Vec<FiniteLattice>,
    /// Candidates, not yet validated.
    pub dlattices: Vec<DLattice>,
    pub spaces: Vec<BiTopSpace>,
}

impl PropInput {
    pub fn new(corpus: Corpus) -> Self {
        PropInput { corpus, lattices: Vec::new(), dlattices: Vec::new(), spaces: Vec::new() }
    }

    fn all_lattices(&self) -> Vec<&FiniteLattice> {
        self.corpus.lattices.iter().chain(&self.lattices).collect()
    }

    /// Corpus d-Boolean algebras, ω of corpus lattices, then the extra candidates.
    fn dlattice_candidates(&self) -> Vec<DLattice> {
        let mut out: Vec<DLattice> = self.corpus.algebras.iter().map(|a| a.dlattice().clone()).collect();
        out.extend(self.corpus.lattices.iter().filter(|l| !l.is_trivial()).filter_map(|l| omega(l).ok()));
        out.extend(self.dlattices.iter().cloned());
        out
    }

    fn dlattices_valid(&self) -> Vec<DLattice> {
        self.dlattice_candidates().into_iter().filter(|d| d.validate().is_pass()).collect()
    }

    fn algebras(&self) -> Vec<DBooleanAlgebra> {
        self.dlattices_valid().into_iter().filter_map(|d| DBooleanAlgebra::from_dlattice(d).ok()).collect()
    }

    fn spaces(&self) -> Vec<&BiTopSpace> {
        self.corpus.spaces.iter().chain(&self.spaces).collect()
    }

    /// Compact zero-dimensional d-frames: `dO(X)` for zero-dimensional spaces and `idl A`.
    fn zk_frames(&self) -> Vec<DLattice> {
        let mut out: Vec<DLattice> = self
            .spaces()
            .into_iter()
            .filter(|x| x.is_zero_dimensional())
            .filter_map(|x| d_open(x).ok().map(|f| f.into_dlattice()))
            .collect();
        out.extend(self.algebras().iter().filter_map(|a| idl_dframe(a).ok().map(|f| f.into_dlattice())));
        out.retain(|f| is_compact_dframe(f) && is_zero_dimensional_dframe(f));
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropResult {
    pub suite: Suite,
    pub property: &'static str,
    pub checked: usize,
    pub failure: Option<String>,
}

impl PropResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Runs `f` on every item in parallel and keeps the first failure in item order.
fn scan<T: Sync>(items: &[T], f: impl Fn(&T) -> Option<String> + Sync) -> (usize, Option<String>) {
    (items.len(), items.par_iter().enumerate().find_map_first(|(i, x)| f(x).map(|m| format!("#{i}: {m}"))))
}

fn fail_if(cond: bool, msg: impl FnOnce() -> String) -> Option<String> {
    cond.then(msg)
}

fn err(e: Error) -> Option<String> {
    Some(e.to_string())
}

type Prop = (&'static str, fn(&PropInput) -> (usize, Option<String>));

fn lattice_laws(l: &FiniteLattice) -> Option<String> {
    let els: Vec<usize> = l.elements().collect();
    for &a in &els {
        if l.meet(a, a) != a || l.join(a, a) != a {
            return Some(format!("idempotence at {}", l.label(a)));
        }
        for &b in &els {
            if l.meet(a, b) != l.meet(b, a) || l.join(a, b) != l.join(b, a) {
                return Some(format!("commutativity at {}, {}", l.label(a), l.label(b)));
            }
            if l.meet(a, l.join(a, b)) != a || l.join(a, l.meet(a, b)) != a {
                return Some(format!("absorption at {}, {}", l.label(a), l.label(b)));
            }
            for &c in &els {
                if l.meet(a, l.meet(b, c)) != l.meet(l.meet(a, b), c) || l.join(a, l.join(b, c)) != l.join(l.join(a, b), c)
                {
                    return Some(format!("associativity at {}, {}, {}", l.label(a), l.label(b), l.label(c)));
                }
            }
        }
    }
    None
}

/// Prime ideals by scanning every down-set.
fn brute_primes(l: &FiniteLattice) -> Vec<Mask> {
    l.poset()
        .down_sets()
        .into_iter()
        .filter(|&m| {
            l.is_ideal(m)
                && m != l.all()
                && l.elements().all(|a| l.elements().all(|b| !bits::contains(m, l.meet(a, b)) || bits::contains(m, a) || bits::contains(m, b)))
        })
        .collect()
}

const LATTICE: &[Prop] = &[
    ("meet and join laws", |inp| scan(&inp.all_lattices(), |l| lattice_laws(l))),
    ("prime ideals match down-set scan", |inp| {
        let small: Vec<&FiniteLattice> = inp.all_lattices().into_iter().filter(|l| l.len() <= 20).collect();
        scan(&small, |l| {
            let mut fast: Vec<Mask> = prime_ideals(l).iter().map(LatticeIdeal::carrier).collect();
            let mut slow = brute_primes(l);
            fast.sort_unstable();
            slow.sort_unstable();
            fail_if(fast != slow, || format!("{} vs {} prime ideals", fast.len(), slow.len()))
        })
    }),
    ("complement of a prime ideal is a prime filter", |inp| {
        scan(&inp.all_lattices(), |l| {
            let primes: Vec<Mask> = prime_ideals(l).iter().map(LatticeIdeal::carrier).collect();
            let filters: Vec<Mask> = l.poset().up_sets().into_iter().filter(|&m| is_prime_filter(l, m)).collect();
            let bad_ideal = primes.iter().find(|&&p| !is_prime_filter(l, l.all() & !p));
            let bad_filter = filters.iter().find(|&&f| !primes.contains(&(l.all() & !f)));
            fail_if(bad_ideal.is_some() || bad_filter.is_some(), || "complement is not prime".into())
        })
    }),
    ("every ideal is principal", |inp| {
        scan(&inp.all_lattices(), |l| {
            let bad = l.poset().down_sets().into_iter().filter(|&m| l.is_ideal(m)).find(|&m| l.down_set(l.join_all(m)) != m);
            fail_if(bad.is_some(), || format!("ideal {} is not principal", bits::render(bad.unwrap_or(0), l.labels())))
        })
    }),
    ("birkhoff(P) has |P| prime ideals", |inp| {
        scan(&inp.corpus.posets, |p| {
            let n = prime_ideals(&birkhoff(p)).len();
            fail_if(n != p.len(), || format!("{n} prime ideals for {} points", p.len()))
        })
    }),
];

const DLATTICE: &[Prop] = &[
    ("axioms", |inp| scan(&inp.dlattice_candidates(), |d| d.validate().violation().map(ToString::to_string))),
    ("logic order is a lattice from ff to tt", |inp| {
        // the logic order is built as a poset, so the carrier must fit a mask
        let small: Vec<DLattice> = inp.dlattices_valid().into_iter().filter(|d| d.size() <= bits::MAX_ELEMENTS).collect();
        scan(&small, |d| {
            let l = match d.logic_lattice() {
                Ok(l) => l,
                Err(e) => return err(e),
            };
            if l.bottom() != d.ff() || l.top() != d.tt() {
                return Some("bounds are not ff and tt".into());
            }
            if let Some(s) = lattice_laws(&l) {
                return Some(s);
            }
            let bad = d.elements().flat_map(|x| d.elements().map(move |y| (x, y))).find(|&(x, y)| {
                d.logic_meet(x, y) != d.logic_meet_coords(x, y) || d.logic_join(x, y) != d.logic_join_coords(x, y)
            });
            bad.map(|(x, y)| format!("formula and coordinate forms differ at {}, {}", d.label(x), d.label(y)))
        })
    }),
    ("con ∩ tot has at most one partner per element", |inp| {
        scan(&inp.dlattices_valid(), |d| {
            let bad = d.plus().elements().find(|&a| d.minus().elements().filter(|&b| d.con_pair(a, b) && d.tot_pair(a, b)).count() > 1);
            bad.map(|a| format!("{} has two partners", d.side_label(Side::Plus, a)))
        })
    }),
    ("con ∩ tot is an antichain", |inp| {
        scan(&inp.dlattices_valid(), |d| {
            let both: Vec<usize> = d.con().filter(|&x| d.in_tot(x)).collect();
            let bad = both.iter().flat_map(|&x| both.iter().map(move |&y| (x, y))).find(|&(x, y)| x != y && d.leq(x, y));
            bad.map(|(x, y)| format!("{} ≤ {}", d.label(x), d.label(y)))
        })
    }),
    ("d-Boolean con and tot are given by the dagger", |inp| {
        scan(&inp.algebras(), |a| fail_if(!a.matches_dagger_form(), || "dagger form differs".into()))
    }),
    ("dB is idempotent", |inp| {
        scan(&inp.dlattices_valid(), |d| {
            let once = match db(d) {
                Ok(c) => c.algebra,
                Err(e) => return err(e),
            };
            match db(&once) {
                Ok(twice) => fail_if(twice.algebra != once, || "dB(dB L) ≠ dB L".into()),
                Err(e) => err(e),
            }
        })
    }),
    ("λ is full and faithful", |inp| {
        let small: Vec<FiniteLattice> = inp.all_lattices().into_iter().filter(|l| l.len() <= 8).cloned().collect();
        match lambda_equivalence_check(&small, &[]) {
            Ok(r) => (
                small.len() * small.len(),
                fail_if(!r.holds(), || format!("hom sets differ on pairs {:?}", r.functor_failures)),
            ),
            Err(e) => (0, err(e)),
        }
    }),
    ("every d-Boolean algebra is λ of its plus lattice", |inp| {
        scan(&inp.algebras(), |a| match lambda_iso_witness(a) {
            Ok(w) => fail_if(!w.is_iso(), || format!("{:?}", w.verdict)),
            Err(e) => err(e),
        })
    }),
    ("ω(H) validates", |inp| {
        let hs: Vec<&FiniteLattice> = inp.all_lattices().into_iter().filter(|l| (2..=16).contains(&l.len())).collect();
        scan(&hs, |h| match omega(h) {
            Ok(w) => w.validate().violation().map(ToString::to_string),
            Err(e) => err(e),
        })
    }),
];

/// Carriers small enough for the `4^N` scan over all maps into `𝔹`.
const EXHAUSTIVE_LIMIT: usize = 9;

fn all_bmaps(n: usize) -> impl Iterator<Item = BMap> {
    (0u64..1 << (2 * n)).map(move |code| BMap {
        values: (0..n).map(|i| BVal::from_bits((code >> (2 * i) & 3) as u8)).collect(),
    })
}

const IDEALS: &[Prop] = &[
    ("pair to map to pair is the identity", |inp| {
        scan(&inp.dlattices_valid(), |d| {
            for (i, g) in all_d_ideal_maps(d) {
                if map_to_d_ideal(d, &g).ok() != Some(i) || d_ideal_to_map(d, i).ok() != Some(g) {
                    return Some(format!("d-ideal {i:?}"));
                }
            }
            for (j, f) in all_d_filter_maps(d) {
                if map_to_d_filter(d, &f).ok() != Some(j) || d_filter_to_map(d, j).ok() != Some(f) {
                    return Some(format!("d-filter {j:?}"));
                }
            }
            None
        })
    }),
    ("prime ⟺ both validators ⟺ homomorphism to 𝔹", |inp| {
        let small: Vec<DLattice> = inp.dlattices_valid().into_iter().filter(|d| d.size() <= EXHAUSTIVE_LIMIT).collect();
        scan(&small, |d| {
            for g in all_bmaps(d.size()) {
                let both = validate_d_ideal_map(d, &g).is_pass() && validate_d_filter_map(d, &g).is_pass();
                let hom = g.to_hom().validate(d, &crate::dlattice::bool4()).is_pass();
                if both != hom || is_prime_map(d, &g) != both {
                    return Some(format!("disagreement at {:?}", g.values));
                }
            }
            let brute: Vec<BMap> = prime_d_ideals_brute(d).into_iter().map(|p| p.map).collect();
            let scanned = all_bmaps(d.size()).filter(|g| is_prime_map(d, g)).count();
            fail_if(brute.len() != scanned, || format!("{} brute vs {scanned} scanned", brute.len()))
        })
    }),
    ("proper d-filters and d-ideals split over coordinates", |inp| {
        scan(&inp.dlattices_valid(), |d| {
            let (tt, ff) = (d.tt(), d.ff());
            let (top_p, top_m) = (d.plus().top(), d.minus().top());
            for (_, f) in all_d_filter_maps(d) {
                if f.get(tt) != BVal::Tt || f.get(ff) != BVal::Ff {
                    continue;
                }
                for x in d.elements() {
                    let (a, b) = d.coords(x);
                    if f.get(x) != f.get(d.embed(Side::Plus, a)).join(f.get(d.embed(Side::Minus, b))) {
                        return Some(format!("d-filter splitting fails at {}", d.label(x)));
                    }
                }
            }
            for (_, g) in all_d_ideal_maps(d) {
                if g.get(tt) != BVal::Tt || g.get(ff) != BVal::Ff {
                    continue;
                }
                for x in d.elements() {
                    let (a, b) = d.coords(x);
                    if g.get(x) != g.get(d.elem(a, top_m)).meet(g.get(d.elem(top_p, b))) {
                        return Some(format!("d-ideal splitting fails at {}", d.label(x)));
                    }
                }
            }
            None
        })
    }),
    ("on d-Boolean algebras f ≤ g forces f = g", |inp| {
        let small: Vec<DBooleanAlgebra> = inp
            .algebras()
            .into_iter()
            .filter(|a| a.plus().len() <= 9 && a.minus().len() <= 9)
            .collect();
        scan(&small, |a| {
            let fs = all_d_filter_maps(a);
            let gs = all_d_ideal_maps(a);
            let bad = fs.iter().flat_map(|(_, f)| gs.iter().map(move |(_, g)| (f, g))).find(|(f, g)| f.info_leq(g) && f != g);
            bad.map(|(f, _)| format!("strict f ≤ g at f = {:?}", f.values))
        })
    }),
    ("structural and brute-force primes agree in number with prime ideals of L₊", |inp| {
        scan(&inp.algebras(), |a| {
            let mut s: Vec<BMap> = prime_d_ideals_structural(a).into_iter().map(|p| p.map).collect();
            let mut b: Vec<BMap> = prime_d_ideals_brute(a).into_iter().map(|p| p.map).collect();
            s.sort();
            b.sort();
            let n = prime_ideals(a.plus()).len();
            fail_if(s != b || s.len() != n, || format!("{} structural, {} brute, {n} prime ideals", s.len(), b.len()))
        })
    }),
    ("dB ∘ idl ≅ id", |inp| {
        scan(&inp.algebras(), |a| match db_idl_witness(a) {
            Ok((core, fwd, bwd)) => fail_if(
                !fwd.validate(a, &core.algebra).is_pass()
                    || !bwd.validate(&core.algebra, a).is_pass()
                    || !fwd.compose(&bwd).is_identity()
                    || !bwd.compose(&fwd).is_identity(),
                || "witness maps are not inverse isomorphisms".into(),
            ),
            Err(e) => err(e),
        })
    }),
    ("idl ∘ dB ≅ id on compact zero-dimensional d-frames", |inp| {
        scan(&inp.zk_frames(), |f| match epsilon_kappa(f) {
            Ok(w) => fail_if(!w.is_iso(f), || "ε and κ are not inverse isomorphisms".into()),
            Err(e) => err(e),
        })
    }),
    ("d-complemented elements are finite", |inp| {
        let small: Vec<DLattice> = inp.zk_frames().into_iter().filter(|f| f.plus().len() <= 8).collect();
        scan(&small, |f| {
            let l = f.plus();
            for a in bits::members(f.d_complemented(Side::Plus)) {
                for s in 0..=l.all() {
                    if !l.leq(a, l.join_all(s)) {
                        continue;
                    }
                    // finite joins of S, the empty one included, form a directed set
                    let mut closed = s | bits::bit(l.bottom());
                    loop {
                        let next = bits::members(closed)
                            .flat_map(|x| bits::members(closed).map(move |y| (x, y)))
                            .fold(closed, |m, (x, y)| m | bits::bit(l.join(x, y)));
                        if next == closed {
                            break;
                        }
                        closed = next;
                    }
                    if !bits::members(closed).any(|d| l.leq(a, d)) {
                        return Some(format!("{} is not finite", l.label(a)));
                    }
                }
            }
            None
        })
    }),
];

const BITOP: &[Prop] = &[
    ("finite spaces are compact", |inp| scan(&inp.spaces(), |x| fail_if(!x.is_compact(), || "not compact".into()))),
    ("dClop X = dB(dO X)", |inp| {
        scan(&inp.spaces(), |x| {
            let (Ok(c), Ok(o)) = (d_clop(x), d_open(x)) else { return Some("construction failed".into()) };
            match db(o.dlattice()) {
                Ok(core) => fail_if(core.algebra != c, || "algebras differ".into()),
                Err(e) => err(e),
            }
        })
    }),
    ("continuous maps to 𝔹 match d-clopen pairs", |inp| {
        let small: Vec<&BiTopSpace> = inp.spaces().into_iter().filter(|x| x.len() <= 8).collect();
        scan(&small, |x| {
            let (maps, pairs) = stone_type_counts(x);
            fail_if(maps != pairs, || format!("{maps} maps, {pairs} pairs"))
        })
    }),
    ("Stone characterizations agree", |inp| scan(&inp.spaces(), |x| x.is_stone().err().map(|e| e.to_string()))),
    ("Stone spaces are bi-T0", |inp| {
        scan(&inp.spaces(), |x| fail_if(x.is_stone().unwrap_or(false) && !x.is_bi_t0(), || "not bi-T0".into()))
    }),
    ("order-separated spaces have ≤₊ = ≥₋", |inp| {
        scan(&inp.spaces(), |x| {
            if !x.is_order_separated() {
                return None;
            }
            let s = x.specialization();
            let n = x.len();
            let bad = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).find(|&(a, b)| {
                bits::contains(s.leq_plus[a], b) != bits::contains(s.leq_minus[b], a)
            });
            bad.map(|(a, b)| format!("points {a}, {b}"))
        })
    }),
    ("Stone spaces are d-sober", |inp| {
        scan(&inp.spaces(), |x| match (x.is_stone(), is_d_sober(x)) {
            (Ok(true), Ok(false)) => Some("not d-sober".into()),
            (_, Err(e)) => err(e),
            _ => None,
        })
    }),
];

const DUALITY: &[Prop] = &[
    ("unit round trip", |inp| {
        scan(&inp.algebras(), |a| match unit_roundtrip(a) {
            Ok(w) => fail_if(!w.is_iso(), || format!("{:?}", w.verdict)),
            Err(e) => err(e),
        })
    }),
    ("counit round trip", |inp| {
        let stone: Vec<&BiTopSpace> = inp.spaces().into_iter().filter(|x| x.is_stone().unwrap_or(false)).collect();
        scan(&stone, |x| match counit_roundtrip(x) {
            Ok(w) => fail_if(!w.is_iso(), || format!("{:?}", w.verdict)),
            Err(e) => err(e),
        })
    }),
    ("spectra of d-Boolean algebras are Stone", |inp| {
        scan(&inp.algebras(), |a| match dspec(a).and_then(|s| s.space.is_stone()) {
            Ok(true) => None,
            Ok(false) => Some("not Stone".into()),
            Err(e) => err(e),
        })
    }),
    ("φ₊ is an order embedding", |inp| {
        scan(&inp.algebras(), |a| {
            let s = match dspec(a) {
                Ok(s) => s,
                Err(e) => return err(e),
            };
            let (pp, _) = crate::bitop::phi_sets(a, &s.points);
            let l = a.plus();
            let bad = l
                .elements()
                .flat_map(|x| l.elements().map(move |y| (x, y)))
                .find(|&(x, y)| l.leq(x, y) != bits::is_subset(pp[x], pp[y]));
            bad.map(|(x, y)| format!("{} and {}", l.label(x), l.label(y)))
        })
    }),
    ("dO(dpt F) ≅ F on compact zero-dimensional d-frames", |inp| {
        scan(&inp.zk_frames(), |f| {
            let o = match d_points(f).and_then(|p| d_open(&p.space)) {
                Ok(o) => o,
                Err(e) => return err(e),
            };
            fail_if(find_dlattice_iso(f, o.dlattice()).is_none(), || "no isomorphism".into())
        })
    }),
    ("dSpec is natural", |inp| {
        let small: Vec<DBooleanAlgebra> = inp.algebras().into_iter().filter(|a| a.size() <= 25).collect();
        let pairs: Vec<(usize, usize)> =
            (0..small.len()).flat_map(|i| (0..small.len()).map(move |j| (i, j))).collect();
        let (n, failure) = scan(&pairs, |&(i, j)| {
            let (a, b) = (&small[i], &small[j]);
            let (Ok(sa), Ok(sb)) = (dspec(a), dspec(b)) else { return Some("dspec failed".into()) };
            let (pa, ma) = crate::bitop::phi_sets(a, &sa.points);
            let (pb, mb) = crate::bitop::phi_sets(b, &sb.points);
            for f in enumerate_dlattice_homs(a, b) {
                let Some(g) = dspec_map(&sa, &sb, &f) else { return Some("pullback is not a point".into()) };
                if !is_continuous(&g, &sb.space, &sa.space) {
                    return Some("dspec(f) is not continuous".into());
                }
                let pre = |m: Mask| bits::from_indices((0..g.len()).filter(|&q| bits::contains(m, g[q])));
                for x in a.elements() {
                    let (u, v) = a.coords(x);
                    let (fu, fv) = b.coords(f.apply(x));
                    if pre(pa[u]) != pb[fu] || pre(ma[v]) != mb[fv] {
                        return Some(format!("square fails at {}", a.label(x)));
                    }
                }
            }
            None
        });
        (n, failure)
    }),
    ("dSpec = dpt ∘ idl", |inp| {
        scan(&inp.dlattices_valid(), |d| match dspec_vs_dpt_idl(d) {
            Ok(w) => fail_if(!w.is_iso(), || format!("{:?}", w.verdict)),
            Err(e) => err(e),
        })
    }),
    ("spatiality clauses", |inp| {
        scan(&inp.algebras(), |a| match spatiality_check(a) {
            Ok(r) => fail_if(!r.holds(), || format!("{r:?}")),
            Err(e) => err(e),
        })
    }),
    ("ω squares commute", |_| {
        let bs: Vec<FiniteLattice> = (1..=3).map(FiniteLattice::boolean).collect();
        scan(&bs, |b| match classical_square_check(b) {
            Ok(sq) => fail_if(!sq.commutes(), || format!("{sq:?}")),
            Err(e) => err(e),
        })
    }),
    ("zero-dimensional spaces are extremally disconnected and dClop is complete", |inp| {
        let zd: Vec<&BiTopSpace> = inp.spaces().into_iter().filter(|x| x.is_zero_dimensional()).collect();
        scan(&zd, |x| match complete_extremally_disconnected_check(x) {
            Ok((true, true)) => None,
            Ok(pair) => Some(format!("{pair:?}")),
            Err(e) => err(e),
        })
    }),
];

pub fn properties(suite: Suite) -> &'static [Prop] {
    match suite {
        Suite::Lattice => LATTICE,
        Suite::DLattice => DLATTICE,
        Suite::Ideals => IDEALS,
        Suite::Bitop => BITOP,
        Suite::Duality => DUALITY,
    }
}

pub fn run_suite(suite: Suite, input: &PropInput) -> Vec<PropResult> {
    properties(suite)
        .iter()
        .map(|(name, f)| {
            let (checked, failure) = f(input);
            PropResult { suite, property: name, checked, failure }
        })
        .collect()
}
