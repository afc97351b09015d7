//! Library results against exhaustive searches written from the definitions.

mod common;

use common::{all_maps, mask, preserves, Naive};
use itertools::Itertools;
use wbk_core::compose::{are_isomorphic, enumerate_skew_brace_homs};
use wbk_core::ideal::{annihilator, fix, is_ideal, quotient, socle};
use wbk_core::nilpotency::{gamma_series, right_series};
use wbk_core::{catalog, DualWeakBrace, ElementSet};

fn is_isomorphism(s: &DualWeakBrace, t: &DualWeakBrace, f: &[usize]) -> bool {
    f.iter().all_unique()
        && preserves(&common::add_rows(s), &common::add_rows(t), f)
        && preserves(&common::mul_rows(s), &common::mul_rows(t), f)
}

#[test]
fn c3_sym3_is_not_isomorphic_to_its_opposite() {
    let s = catalog::dual_weak_brace("c3_sym3").unwrap();
    let t = s.opposite().unwrap();
    assert_ne!(s, t);
    assert!(are_isomorphic(&s, &t).is_none());
    let n = s.order();
    assert!(!(0..n).permutations(n).any(|f| is_isomorphism(&s, &t, &f)));
}

#[test]
fn relabelled_copies_are_isomorphic_with_a_valid_witness() {
    for name in ["c3_sym3", "z6_over_c2", "vee_sym3", "c2_c4_braces"] {
        let s = catalog::dual_weak_brace(name).unwrap();
        let n = s.order();
        let perm: Vec<usize> = (0..n).rev().collect();
        let t = s.relabel(&perm).unwrap();
        let w = are_isomorphic(&s, &t).expect(name);
        assert!(is_isomorphism(&s, &t, &w.element_map), "{name}");
    }
}

#[test]
fn skew_brace_homs_into_dual_weak_braces_match_brute_force() {
    let s = catalog::skew_brace("z6_exotic").unwrap();
    let t = catalog::skew_brace("trivial_c2").unwrap();
    let (ds, dt) = (s.to_dual_weak_brace(), t.to_dual_weak_brace());
    let brute: Vec<Vec<usize>> = all_maps(6, 2)
        .filter(|f| {
            preserves(&common::add_rows(&ds), &common::add_rows(&dt), f)
                && preserves(&common::mul_rows(&ds), &common::mul_rows(&dt), f)
        })
        .collect();
    let mut lib = enumerate_skew_brace_homs(&s, &t);
    lib.sort();
    assert_eq!(lib, brute);
    assert_eq!(lib.len(), 2);
}

#[test]
fn special_subsets_match_definitions() {
    for name in catalog::brace_like_names() {
        let s = catalog::dual_weak_brace(name).unwrap();
        let naive = Naive::new(&s);
        let n = s.order();
        assert_eq!(socle(&s).to_vec(), naive.socle(), "{name}");
        assert_eq!(annihilator(&s).to_vec(), naive.annihilator(), "{name}");
        let fixed: Vec<usize> = (0..n)
            .filter(|&b| (0..n).all(|a| naive.lambda(a, b) == naive.add[s.zero_part(a)][b]))
            .collect();
        assert_eq!(fix(&s).to_vec(), fixed, "{name}");
    }
}

#[test]
fn quotient_classes_match_the_congruence() {
    for name in ["z6_exotic", "c3_sym3", "vee_sym3", "z6_over_c2"] {
        let s = catalog::dual_weak_brace(name).unwrap();
        let naive = Naive::new(&s);
        let n = s.order();
        for members in naive.all_ideals() {
            let i = ElementSet::from_indices(n, members.iter().copied());
            let q = quotient(&s, &i).unwrap();
            for (a, b) in (0..n).cartesian_product(0..n) {
                let related =
                    s.zero_part(a) == s.zero_part(b) && i.contains(naive.add[naive.neg[a]][b]);
                assert_eq!(
                    q.projection[a] == q.projection[b],
                    related,
                    "{name} {i} ({a}, {b})"
                );
            }
        }
    }
}

#[test]
fn z6_series_by_hand() {
    let s = catalog::dual_weak_brace("z6_exotic").unwrap();
    let naive = Naive::new(&s);
    // S · S, closed under +, computed without the library.
    let dots: Vec<usize> = (0..6)
        .cartesian_product(0..6)
        .map(|(a, b)| naive.dot(a, b))
        .unique()
        .sorted()
        .collect();
    assert_eq!(dots, vec![0, 2, 4]);
    assert_eq!(right_series(&s).chain[1].to_vec(), dots);
    // Γ({0, 2, 4}) keeps 2 = 1 · 2, so the lower series never reaches {0}.
    assert_eq!(naive.dot(1, 2), 2);
    let g = gamma_series(&s, &s.full_set()).unwrap();
    assert_eq!(g.chain.last().unwrap().to_vec(), vec![0, 2, 4]);
    assert!(is_ideal(&s, &ElementSet::from_indices(6, [0, 2, 4])).is_ok());
    assert!(!naive.is_ideal(&mask(6, &ElementSet::from_indices(6, [0, 3]))));
}
