//! Small-order census of friendship digraphs, checked against counting
//! formulas computed independently of the search.

use std::collections::BTreeSet;

use friendship_core::design::{design_from_digraph, validate_sbibd, Design};
use friendship_core::search::{canonical_form, enumerate_friendship_digraphs, is_isomorphic, SearchConfig};
use friendship_core::verify::{classify, is_friendship, Classification};

fn labeled(n: usize) -> Vec<friendship_core::Digraph> {
    enumerate_friendship_digraphs(&SearchConfig::new(n)).unwrap()
}

fn classes(n: usize) -> Vec<friendship_core::Digraph> {
    enumerate_friendship_digraphs(&SearchConfig {
        modulo_iso: true,
        ..SearchConfig::new(n)
    })
    .unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    permutations(n - 1)
        .into_iter()
        .flat_map(|p| {
            (0..n).map(move |i| {
                let mut q = p.clone();
                q.insert(i, n - 1);
                q
            })
        })
        .collect()
}

fn derangements(m: usize) -> usize {
    permutations(m)
        .iter()
        .filter(|p| p.iter().enumerate().all(|(i, &x)| i != x))
        .count()
}

/// Partitions of `m` into parts of size at least 2.
fn partitions_min_two(m: usize, max_part: usize) -> usize {
    if m == 0 {
        return 1;
    }
    (2..=max_part.min(m)).map(|p| partitions_min_two(m - p, p)).sum()
}

fn fano() -> Design {
    Design::new(
        7,
        vec![
            vec![0, 1, 2],
            vec![0, 3, 4],
            vec![0, 5, 6],
            vec![1, 3, 5],
            vec![1, 4, 6],
            vec![2, 3, 6],
            vec![2, 4, 5],
        ],
    )
    .unwrap()
}

#[test]
fn labeled_wheel_counts_match_derangements() {
    // A labeled fancy wheel is a hub choice plus a fixed-point-free
    // permutation of the remaining vertices (2-cycles are allowed).
    for n in 4..=7 {
        let wheels = labeled(n)
            .iter()
            .filter(|d| matches!(classify(d).unwrap(), Classification::FancyWheel { .. }))
            .count();
        assert_eq!(wheels, n * derangements(n - 1), "n = {n}");
    }
}

#[test]
fn labeled_regular_count_at_seven() {
    // labeled Fano planes = 7! / |Aut|, each carrying per(J - A) SDRs
    let blocks: BTreeSet<Vec<usize>> = fano().blocks().iter().cloned().collect();
    let perms = permutations(7);
    let automorphisms = perms
        .iter()
        .filter(|p| {
            blocks.iter().all(|b| {
                let mut img: Vec<_> = b.iter().map(|&x| p[x]).collect();
                img.sort_unstable();
                blocks.contains(&img)
            })
        })
        .count();
    assert_eq!(automorphisms, 168);
    let fano_blocks = fano().blocks().to_vec();
    let permanent = perms
        .iter()
        .filter(|p| (0..7).all(|t| !fano_blocks[t].contains(&p[t])))
        .count();
    let regular = labeled(7)
        .iter()
        .filter(|d| classify(d).unwrap() == Classification::Regular { k: 3 })
        .count();
    assert_eq!(regular, 5040 / automorphisms * permanent);
    assert_eq!(regular, 4320);
}

#[test]
fn golden_counts() {
    let labeled_counts: Vec<_> = (2..=7).map(|n| labeled(n).len()).collect();
    assert_eq!(labeled_counts, vec![0, 1, 8, 45, 264, 6175]);
    let class_counts: Vec<_> = (2..=7).map(|n| classes(n).len()).collect();
    assert_eq!(class_counts, vec![0, 1, 1, 2, 2, 8]);
}

#[test]
fn wheel_classes_match_partitions_and_regular_classes_at_seven() {
    for n in 4..=7 {
        let mut wheels = 0;
        let mut regular = 0;
        for d in classes(n) {
            match classify(&d).unwrap() {
                Classification::FancyWheel { .. } => wheels += 1,
                Classification::Regular { k } => {
                    assert_eq!(k * k - k + 1, n);
                    regular += 1
                }
                other => panic!("{other:?}"),
            }
        }
        assert_eq!(wheels, partitions_min_two(n - 1, n - 1), "n = {n}");
        assert_eq!(regular, if n == 7 { 4 } else { 0 }, "n = {n}");
    }
}

#[test]
fn every_result_is_friendship_and_classifies() {
    for n in 2..=7 {
        for d in labeled(n) {
            assert!(is_friendship(&d).holds);
            match classify(&d).unwrap() {
                Classification::FancyWheel { .. } => {}
                Classification::Regular { k } => assert_eq!(k * k - k + 1, n),
                other => panic!("{other:?}"),
            }
        }
    }
}

#[test]
fn regular_results_at_seven_yield_fano_designs() {
    for d in labeled(7) {
        if matches!(classify(&d).unwrap(), Classification::Regular { k: 3 }) {
            assert!(validate_sbibd(&design_from_digraph(&d), 3, 1).is_valid());
        }
    }
}

#[test]
fn enumeration_is_closed_under_reversal() {
    for n in 3..=7 {
        let all = labeled(n);
        let forms: BTreeSet<_> = all.iter().map(|d| canonical_form(d).unwrap()).collect();
        for d in &all {
            assert!(forms.contains(&canonical_form(&d.reverse()).unwrap()));
        }
        let reps = classes(n);
        for r in &reps {
            assert!(reps.iter().any(|s| is_isomorphic(&r.reverse(), s).unwrap()));
        }
    }
}
