use std::collections::HashSet;

use num_bigint::BigUint;
use proptest::prelude::*;

use properpath::counting::{factorial, word_count_closed, WordConstraint};
use properpath::enumeration::check_proper_path;
use properpath::oracle::{build_colored_hypercube, oracle_distances_from};
use properpath::report::{CountRecord, CountTable, DistanceRecord};
use properpath::verify::{CheckKind, Mismatch, VerificationReport};
use properpath::{
    class_difference, count_shortest_proper_paths, enumerate_shortest_proper_paths, is_proper_path,
    j1_reference_count, pair_profile, proper_distance, Coloring, PathCount, Vertex,
};

fn vertex(n: usize, index: u64) -> Vertex {
    Vertex::from_index(n, index).unwrap()
}

fn all_prefix(n: usize) -> impl Iterator<Item = Coloring> {
    (1..n).map(move |j| Coloring::prefix(n, j).unwrap())
}

#[test]
fn symmetry_and_parity_exhaustive() {
    for n in 2..=8 {
        for c in all_prefix(n) {
            for a in 0..1u64 << n {
                let u = vertex(n, a);
                for b in a..1u64 << n {
                    let v = vertex(n, b);
                    let (o, t) = class_difference(&u, &v, &c).unwrap();
                    assert_eq!(class_difference(&v, &u, &c).unwrap(), (o, t));
                    let pd = proper_distance(&u, &v, &c).unwrap();
                    assert_eq!(proper_distance(&v, &u, &c).unwrap(), pd);
                    assert!(pd >= o + t);
                    assert_eq!(pd % 2, (o + t) % 2);
                    let p = pair_profile(&u, &v, &c).unwrap();
                    if o + t > 0 {
                        assert_eq!(p.m, o.max(t) - p.gamma);
                        assert!(p.m >= p.deficit_d);
                        assert_eq!(p.m % 2, p.deficit_d % 2);
                    }
                }
            }
        }
    }
}

#[test]
fn table_rows_match_representative_pairs() {
    // pp depends only on the profile, so one pair per (o, t) suffices.
    for n in 2..=7 {
        for c in all_prefix(n) {
            let table = CountTable::compute(&c);
            for row in &table.rows {
                let mut bits = vec![false; n];
                for &d in c.class1().iter().take(row.o) {
                    bits[d - 1] = true;
                }
                for &d in c.class2().iter().take(row.t) {
                    bits[d - 1] = true;
                }
                let u = Vertex::from_bits(&bits).unwrap();
                let z = Vertex::zeros(n).unwrap();
                assert_eq!(count_shortest_proper_paths(&u, &z, &c).unwrap(), row.pp);
                assert_eq!(proper_distance(&u, &z, &c).unwrap(), row.pd);
            }
        }
    }
}

#[test]
fn enumeration_is_valid_unique_and_complete_up_to_six() {
    for n in 2..=6 {
        for c in all_prefix(n) {
            for a in 0..1u64 << n {
                for b in 0..1u64 << n {
                    let (u, v) = (vertex(n, a), vertex(n, b));
                    let pd = proper_distance(&u, &v, &c).unwrap();
                    let mut seen = HashSet::new();
                    for p in enumerate_shortest_proper_paths(&u, &v, &c).unwrap() {
                        assert_eq!(p.len(), pd);
                        assert_eq!(p.start(), &u);
                        assert_eq!(p.end(), &v);
                        check_proper_path(p.vertices(), &c).unwrap();
                        assert!(seen.insert(p.flips().to_vec()), "duplicate path {p}");
                    }
                    let expected = count_shortest_proper_paths(&u, &v, &c).unwrap();
                    assert_eq!(PathCount::from(seen.len() as u64), expected);
                }
            }
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    let c = Coloring::from_class1(7, [2, 5, 6]).unwrap();
    let u: Vertex = "1101101".parse().unwrap();
    let v: Vertex = "0010000".parse().unwrap();
    let first: Vec<_> = enumerate_shortest_proper_paths(&u, &v, &c)
        .unwrap()
        .collect();
    let second: Vec<_> = enumerate_shortest_proper_paths(&u, &v, &c)
        .unwrap()
        .collect();
    assert!(!first.is_empty());
    assert_eq!(first, second);
}

#[test]
fn enumeration_sampled_at_seven() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let limit = PathCount::from(100_000);
    let mut done = 0;
    while done < 60 {
        let c = Coloring::prefix(7, rng.gen_range(1..7)).unwrap();
        let (u, v) = (
            vertex(7, rng.gen_range(0..128)),
            vertex(7, rng.gen_range(0..128)),
        );
        let expected = count_shortest_proper_paths(&u, &v, &c).unwrap();
        if expected > limit {
            continue;
        }
        let mut seen = HashSet::new();
        for p in enumerate_shortest_proper_paths(&u, &v, &c).unwrap() {
            assert!(is_proper_path(&p, &c));
            assert!(seen.insert(p.flips().to_vec()));
        }
        assert_eq!(PathCount::from(seen.len() as u64), expected);
        done += 1;
    }
}

#[test]
fn bfs_never_beats_enumerated_paths() {
    for n in 2..=5 {
        for c in all_prefix(n) {
            let g = build_colored_hypercube(n, &c).unwrap();
            for a in 0..1u64 << n {
                let bfs = oracle_distances_from(&g, a as usize);
                for b in 0..1u64 << n {
                    let (u, v) = (vertex(n, a), vertex(n, b));
                    for p in enumerate_shortest_proper_paths(&u, &v, &c).unwrap().take(3) {
                        assert!(bfs[b as usize].unwrap() <= p.len());
                    }
                }
            }
        }
    }
}

#[test]
fn j1_regression_on_wide_vertices() {
    // Formulas are exact beyond the packed representation.
    let n = 70;
    let c = Coloring::prefix(n, 1).unwrap();
    let z = Vertex::zeros(n).unwrap();
    let mut bits = vec![false; n];
    for (i, b) in bits.iter_mut().enumerate().take(40) {
        *b = i % 2 == 0 || i > 30;
    }
    let u = Vertex::from_bits(&bits).unwrap();
    let got = count_shortest_proper_paths(&u, &z, &c).unwrap();
    assert_eq!(got, j1_reference_count(&u, &z, &c).unwrap());
    assert!(got.to_u64().is_none());
}

#[test]
fn word_count_boundary_and_vanishing() {
    for l in 0..=8 {
        for d in 0..=l {
            let w = WordConstraint::new(l, d, d).unwrap();
            assert_eq!(word_count_closed(&w).into_inner(), factorial(d));
            for m in 0..=10 {
                let w = WordConstraint::new(l, d, m).unwrap();
                assert_eq!(word_count_closed(&w).is_zero(), !w.is_satisfiable());
            }
        }
    }
}

fn arb_coloring(max_n: usize) -> impl Strategy<Value = Coloring> {
    (2..=max_n)
        .prop_flat_map(|n| proptest::collection::vec(any::<bool>(), n))
        .prop_filter_map("both classes nonempty", |mask| {
            let n = mask.len();
            let class1: Vec<usize> = (1..=n).filter(|&d| mask[d - 1]).collect();
            Coloring::from_class1(n, class1).ok()
        })
}

fn arb_case(max_n: usize) -> impl Strategy<Value = (Coloring, Vertex, Vertex, Vertex)> {
    arb_coloring(max_n).prop_flat_map(|c| {
        let n = c.dims();
        let v = || {
            proptest::collection::vec(any::<bool>(), n).prop_map(|b| Vertex::from_bits(&b).unwrap())
        };
        (Just(c), v(), v(), v())
    })
}

proptest! {
    #[test]
    fn translation_invariance((c, u, v, w) in arb_case(12)) {
        let (uw, vw) = (u.xor(&w).unwrap(), v.xor(&w).unwrap());
        prop_assert_eq!(proper_distance(&uw, &vw, &c).unwrap(), proper_distance(&u, &v, &c).unwrap());
        prop_assert_eq!(
            count_shortest_proper_paths(&uw, &vw, &c).unwrap(),
            count_shortest_proper_paths(&u, &v, &c).unwrap()
        );
    }

    #[test]
    fn pair_symmetry_of_counts((c, u, v, _w) in arb_case(12)) {
        prop_assert_eq!(
            count_shortest_proper_paths(&u, &v, &c).unwrap(),
            count_shortest_proper_paths(&v, &u, &c).unwrap()
        );
    }

    #[test]
    fn class_permutation_invariance((c, u, v, _w) in arb_case(10), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = c.dims();
        // Permutation mapping each class onto itself.
        let mut perm: Vec<usize> = (1..=n).collect();
        for class in [c.class1().to_vec(), c.class2().to_vec()] {
            let mut shuffled = class.clone();
            shuffled.shuffle(&mut rng);
            for (dst, src) in class.iter().zip(shuffled) {
                perm[dst - 1] = src;
            }
        }
        let (pu, pv) = (u.permuted(&perm).unwrap(), v.permuted(&perm).unwrap());
        let before = pair_profile(&u, &v, &c).unwrap();
        let after = pair_profile(&pu, &pv, &c).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn case_one_closed_form(c in arb_coloring(16)) {
        let k = c.class1().len().min(c.class2().len());
        for o in 1..=k {
            let mut bits = vec![false; c.dims()];
            for &d in c.class1().iter().take(o).chain(c.class2().iter().take(o)) {
                bits[d - 1] = true;
            }
            let u = Vertex::from_bits(&bits).unwrap();
            let z = Vertex::zeros(c.dims()).unwrap();
            let expected = BigUint::from(2u8) * factorial(o) * factorial(o);
            prop_assert_eq!(count_shortest_proper_paths(&u, &z, &c).unwrap().into_inner(), expected);
        }
    }

    #[test]
    fn report_json_roundtrip(
        n in 2usize..64,
        o in 0usize..1000,
        big in any::<u128>(),
        elapsed in 0.0f64..1e6,
        agree in proptest::option::of(any::<bool>()),
    ) {
        let d = DistanceRecord { n, coloring: "j=1".into(), u: "01".into(), v: "10".into(), o, t: o + 1, gamma: 1, pd: 2 * o + 1 };
        let back: DistanceRecord = serde_json::from_str(&serde_json::to_string(&d).unwrap()).unwrap();
        prop_assert_eq!(back, d);

        let count = PathCount::from(BigUint::from(big) * BigUint::from(big));
        let rec = CountRecord {
            n, coloring: "1,3".into(), u: "011".into(), v: "000".into(), pd: o,
            pp: count.clone(), oracle: agree.map(|_| count.clone()), agree,
        };
        let back: CountRecord = serde_json::from_str(&serde_json::to_string(&rec).unwrap()).unwrap();
        prop_assert_eq!(back, rec);

        let report = VerificationReport {
            scope: "n=2..=3".into(),
            checked: o as u64,
            skipped: n as u64,
            mismatches: vec![Mismatch {
                coloring: "j=1".into(), n, u: "00".into(), v: "11".into(),
                check: CheckKind::Enumeration, formula: count.to_string(), oracle: "0".into(),
            }],
            elapsed,
        };
        let back: VerificationReport = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
        prop_assert_eq!(back, report);
    }
}

#[test]
fn table_json_roundtrip() {
    let t = CountTable::compute(&Coloring::from_class1(9, [1, 4, 8]).unwrap());
    let back: CountTable = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
    assert_eq!(back, t);
}
