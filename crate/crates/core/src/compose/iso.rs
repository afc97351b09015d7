use std::collections::HashMap;

use super::{decompose, enumerate_skew_brace_homs, Decomposition};
use crate::brace::{DualWeakBrace, SkewBrace};

/// A bijection between two dual weak braces, given componentwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsomorphismWitness {
    /// Semilattice isomorphism `Y → Z`.
    pub eta: Vec<usize>,
    /// `thetas[α]` maps local indices of `B_α` to those of `C_{η(α)}`.
    pub thetas: Vec<Vec<usize>>,
    /// The induced map on elements.
    pub element_map: Vec<usize>,
}

type Invariant = (usize, usize, usize, bool, bool);

fn invariant(b: &SkewBrace) -> Invariant {
    (
        b.order(),
        b.mul_group().exponent(),
        b.add_group().exponent(),
        b.add_group().is_abelian(),
        b.mul_group().is_abelian(),
    )
}

/// First isomorphism `s → t` in canonical search order: semilattice maps in
/// lexicographic order, then component isomorphisms in lexicographic order
/// by component.
pub fn are_isomorphic(s: &DualWeakBrace, t: &DualWeakBrace) -> Option<IsomorphismWitness> {
    if s.order() != t.order() || s.component_count() != t.component_count() {
        return None;
    }
    let ds = decompose(s).ok()?;
    let dt = decompose(t).ok()?;
    let inv_s: Vec<Invariant> = ds.spec.braces().iter().map(invariant).collect();
    let inv_t: Vec<Invariant> = dt.spec.braces().iter().map(invariant).collect();
    let (mut sorted_s, mut sorted_t) = (inv_s.clone(), inv_t.clone());
    sorted_s.sort();
    sorted_t.sort();
    if sorted_s != sorted_t {
        return None;
    }
    let mut iso_cache: HashMap<(usize, usize), Vec<Vec<usize>>> = HashMap::new();
    for eta in ds.spec.semilattice().isomorphisms_to(dt.spec.semilattice()) {
        if (0..eta.len()).any(|a| inv_s[a] != inv_t[eta[a]]) {
            continue;
        }
        let candidates: Vec<Vec<Vec<usize>>> = (0..eta.len())
            .map(|a| {
                iso_cache
                    .entry((a, eta[a]))
                    .or_insert_with(|| {
                        enumerate_skew_brace_homs(ds.spec.brace(a), dt.spec.brace(eta[a]))
                            .into_iter()
                            .filter(|m| is_bijective(m))
                            .collect()
                    })
                    .clone()
            })
            .collect();
        if candidates.iter().any(Vec::is_empty) {
            continue;
        }
        let mut thetas = Vec::with_capacity(eta.len());
        if choose_thetas(&ds, &dt, &eta, &candidates, &mut thetas) {
            let element_map = (0..s.order())
                .map(|g| {
                    let (a, i) = ds.locate(g);
                    dt.global(eta[a], thetas[a][i])
                })
                .collect();
            return Some(IsomorphismWitness {
                eta,
                thetas,
                element_map,
            });
        }
    }
    None
}

fn is_bijective(map: &[usize]) -> bool {
    let mut seen = vec![false; map.len()];
    map.iter()
        .all(|&v| v < seen.len() && !std::mem::replace(&mut seen[v], true))
}

fn choose_thetas(
    ds: &Decomposition,
    dt: &Decomposition,
    eta: &[usize],
    candidates: &[Vec<Vec<usize>>],
    thetas: &mut Vec<Vec<usize>>,
) -> bool {
    let alpha = thetas.len();
    if alpha == eta.len() {
        return true;
    }
    let y = ds.spec.semilattice();
    for theta in &candidates[alpha] {
        thetas.push(theta.clone());
        let ok = (0..alpha).all(|beta| {
            let (hi, lo) = if y.geq(alpha, beta) {
                (alpha, beta)
            } else if y.geq(beta, alpha) {
                (beta, alpha)
            } else {
                return true;
            };
            (0..ds.spec.brace(hi).order()).all(|x| {
                thetas[lo][ds.spec.phi(hi, lo, x)] == dt.spec.phi(eta[hi], eta[lo], thetas[hi][x])
            })
        });
        if ok && choose_thetas(ds, dt, eta, candidates, thetas) {
            return true;
        }
        thetas.pop();
    }
    false
}
