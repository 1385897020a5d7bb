//! Properties over random lattices. A random family of subsets of a
//! five-element set, closed under intersection and with the full set added,
//! is a lattice under inclusion; every finite lattice arises this way.

use finlogic::cli::render_dot;
use finlogic::logic::{check_metaproperties, random_negation, LogicStructure, RandomNegation};
use finlogic::order::{dual, find_forbidden_sublattice, horizontal_sum, property_scan, FiniteLattice, LatticeDoc, Pattern, DEFAULT_SEARCH_BUDGET};
use finlogic::residuation::implicative_report;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

fn closure_lattice(family: &[u8]) -> FiniteLattice {
    let mut sets: BTreeSet<u8> = family.iter().map(|m| m & 31).collect();
    sets.insert(31);
    loop {
        let list: Vec<u8> = sets.iter().copied().collect();
        let before = sets.len();
        for &a in &list {
            for &b in &list {
                sets.insert(a & b);
            }
        }
        if sets.len() == before {
            break;
        }
    }
    let sets: Vec<u8> = sets.into_iter().collect();
    let names = sets.iter().map(|m| format!("{m:05b}")).collect();
    FiniteLattice::from_fn(names, |i, j| sets[i] & !sets[j] == 0).expect("intersection-closed family is a lattice")
}

fn lattices() -> impl Strategy<Value = FiniteLattice> {
    prop::collection::vec(any::<u8>(), 1..7).prop_map(|f| closure_lattice(&f))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lattice_laws_hold(l in lattices()) {
        let r = property_scan(&l);
        for law in ["idempotent", "commutative", "associative", "absorption", "consistency", "distributive-inequality", "modular-inequality"] {
            prop_assert!(r.holds(law), "{law}");
        }
    }

    #[test]
    fn distributive_iff_no_m5_or_n5(l in lattices()) {
        let m5 = find_forbidden_sublattice(&l, Pattern::M5, DEFAULT_SEARCH_BUDGET).unwrap();
        let n5 = find_forbidden_sublattice(&l, Pattern::N5, DEFAULT_SEARCH_BUDGET).unwrap();
        prop_assert_eq!(property_scan(&l).holds("distributive"), m5.is_none() && n5.is_none());
        // modular iff no N5
        prop_assert_eq!(property_scan(&l).holds("modular"), n5.is_none());
    }

    #[test]
    fn implicative_iff_distributive(l in lattices()) {
        let (r, _) = implicative_report(&l);
        prop_assert_eq!(r.holds("implicative"), property_scan(&l).holds("distributive"));
        if r.holds("implicative") {
            prop_assert!(r.all_hold());
        }
    }

    #[test]
    fn duality_swaps_meet_and_join(l in lattices()) {
        let d = dual(&l);
        for x in 0..l.len() {
            for y in 0..l.len() {
                prop_assert_eq!(d.meet(x, y), l.join(x, y));
                prop_assert_eq!(d.leq(x, y), l.leq(y, x));
            }
        }
        prop_assert_eq!(dual(&d), l);
    }

    #[test]
    fn metaproperties_never_fail(l in lattices(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for kind in RandomNegation::ALL {
            let s = LogicStructure::new(l.clone(), random_negation(&l, kind, &mut rng)).unwrap();
            prop_assert_eq!(check_metaproperties(&s).violated, [false; 4]);
        }
    }

    #[test]
    fn dot_edges_are_the_covers(l in lattices()) {
        let dot = render_dot(&l, None);
        let edges: BTreeSet<(String, String)> = dot
            .lines()
            .filter_map(|line| line.trim().strip_suffix(';')?.split_once(" -> "))
            .map(|(a, b)| (a.trim_matches('"').to_string(), b.trim_matches('"').to_string()))
            .collect();
        // covers recomputed from the order: x < y with nothing strictly between
        let n = l.len();
        let mut want = BTreeSet::new();
        for x in 0..n {
            for y in 0..n {
                if l.lt(x, y) && !(0..n).any(|z| l.lt(x, z) && l.lt(z, y)) {
                    want.insert((l.name(x).to_string(), l.name(y).to_string()));
                }
            }
        }
        prop_assert_eq!(edges, want);
    }

    #[test]
    fn file_format_preserves_the_order(l in lattices()) {
        let (back, neg) = LatticeDoc::parse(&LatticeDoc::from_lattice(&l, None).to_json()).unwrap().build().unwrap();
        prop_assert!(neg.is_none());
        prop_assert_eq!(back, l);
    }

    #[test]
    fn horizontal_sums_of_chains_are_modular_only_when_small(k in 1usize..5, len in 3usize..5) {
        let chain = FiniteLattice::from_fn((0..len).map(|i| i.to_string()).collect(), |i, j| i <= j).unwrap();
        let blocks = vec![chain; k];
        let sum = horizontal_sum(&blocks).unwrap();
        prop_assert_eq!(sum.len(), 2 + k * (len - 2));
        // two chains of length ≥ 4 pasted together contain N5
        let modular = property_scan(&sum).holds("modular");
        prop_assert_eq!(modular, k == 1 || len == 3);
    }
}
