use bistone::bitop::{stone_space_from_poset, BiTopSpace};
use bistone::bits::Mask;
use bistone::duality::{counit_roundtrip, unit_roundtrip};
use bistone::ideals::{prime_d_ideals_brute, prime_d_ideals_structural, BMap, BVal};
use bistone::io::{self, Document};
use bistone::{birkhoff, find_dlattice_iso, lambda, prime_ideals, FinitePoset};
use proptest::prelude::*;

/// A random poset on `n` points: a relation above the diagonal, closed
/// transitively.
fn poset(max: usize) -> impl Strategy<Value = FinitePoset> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut rel = vec![vec![false; n]; n];
            let mut k = 0;
            for i in 0..n {
                rel[i][i] = true;
                for j in i + 1..n {
                    rel[i][j] = bits[k];
                    k += 1;
                }
            }
            for m in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        if rel[i][m] && rel[m][j] {
                            rel[i][j] = true;
                        }
                    }
                }
            }
            let labels = (0..n).map(|i| format!("p{i}")).collect();
            FinitePoset::new(labels, &rel).unwrap()
        })
    })
}

fn space(max: usize) -> impl Strategy<Value = BiTopSpace> {
    (0..=max).prop_flat_map(|n| {
        let full: Mask = (1 << n) - 1;
        let sub = proptest::collection::vec(0..=full, 0..4);
        (sub.clone(), sub).prop_map(move |(p, m)| {
            let labels = (0..n).map(|i| format!("x{i}")).collect();
            BiTopSpace::from_subbases(labels, &p, &m)
        })
    })
}

fn bval() -> impl Strategy<Value = BVal> {
    (0u8..4).prop_map(BVal::from_bits)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn birkhoff_is_distributive_with_one_prime_per_point(p in poset(5)) {
        let l = birkhoff(&p);
        prop_assert!(l.distributivity_witness().is_none());
        prop_assert_eq!(l.len(), p.down_sets().len());
        prop_assert_eq!(prime_ideals(&l).len(), p.len());
        prop_assert_eq!(l.join_irreducibles().len(), p.len());
    }

    #[test]
    fn lattice_laws_hold(p in poset(5), a in 0usize..64, b in 0usize..64, c in 0usize..64) {
        let l = birkhoff(&p);
        let (a, b, c) = (a % l.len(), b % l.len(), c % l.len());
        prop_assert_eq!(l.meet(a, b), l.meet(b, a));
        prop_assert_eq!(l.join(a, l.meet(a, b)), a);
        prop_assert_eq!(l.meet(a, l.join(a, b)), a);
        prop_assert_eq!(l.meet(a, l.meet(b, c)), l.meet(l.meet(a, b), c));
        prop_assert!(l.leq(l.meet(a, b), l.join(a, b)));
    }

    #[test]
    fn prime_d_ideal_paths_agree(p in poset(5)) {
        let a = lambda(&birkhoff(&p)).unwrap();
        let mut s: Vec<BMap> = prime_d_ideals_structural(&a).into_iter().map(|g| g.map).collect();
        let mut b: Vec<BMap> = prime_d_ideals_brute(&a).into_iter().map(|g| g.map).collect();
        s.sort();
        b.sort();
        prop_assert_eq!(s.len(), p.len());
        prop_assert_eq!(s, b);
    }

    #[test]
    fn unit_is_an_isomorphism(p in poset(5)) {
        let a = lambda(&birkhoff(&p)).unwrap();
        let w = unit_roundtrip(&a).unwrap();
        prop_assert!(w.is_iso(), "{:?}", w.verdict);
    }

    #[test]
    fn counit_is_a_homeomorphism(p in poset(5)) {
        let w = counit_roundtrip(&stone_space_from_poset(&p)).unwrap();
        prop_assert!(w.is_iso(), "{:?}", w.verdict);
    }

    #[test]
    fn stone_characterizations_agree(x in space(4)) {
        prop_assert!(x.is_compact());
        prop_assert_eq!(x.is_stone_via_zero_dim(), x.is_stone_via_order());
        // the empty space has a trivial dual, which is not a d-Boolean algebra
        if x.is_stone_via_order() && !x.is_empty() {
            prop_assert!(counit_roundtrip(&x).unwrap().is_iso());
        }
    }

    #[test]
    fn bitop_json_roundtrip(x in space(4)) {
        let Document::BiTop(d) = io::parse_document(&io::bitop_json(&x).to_string()).unwrap() else {
            panic!("wrong kind");
        };
        let y = io::bitop_from_doc(&d).unwrap();
        prop_assert_eq!(io::bitop_json(&y), io::bitop_json(&x));
    }

    #[test]
    fn dbool_json_roundtrip(p in poset(4)) {
        let a = lambda(&birkhoff(&p)).unwrap();
        let text = io::dbool_json(&a).to_string();
        let Document::DBool(d) = io::parse_document(&text).unwrap() else {
            panic!("wrong kind");
        };
        let b = io::dbool_from_doc(&d).unwrap();
        prop_assert_eq!(io::dbool_json(&b).to_string(), text);
        prop_assert!(find_dlattice_iso(a.dlattice(), b.dlattice()).is_some());
    }

    #[test]
    fn bmap_json_roundtrip(values in proptest::collection::vec(bval(), 0..12)) {
        let m = BMap { values };
        prop_assert_eq!(io::bmap_from_json(&io::bmap_json(&m)).unwrap(), m);
    }

    #[test]
    fn info_order_is_bitwise(a in bval(), b in bval()) {
        prop_assert_eq!(a.join(b).bits(), a.bits() | b.bits());
        prop_assert_eq!(a.meet(b).bits(), a.bits() & b.bits());
        prop_assert_eq!(a.info_leq(b), a.join(b) == b);
    }
}
