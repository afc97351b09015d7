use std::collections::{BTreeMap, BTreeSet};

use super::subset::{ideal_closure, is_ideal};
use super::IdealError;
use crate::brace::DualWeakBrace;
use crate::compose::decompose;
use crate::set::ElementSet;

pub const DEFAULT_MAX_ORDER: usize = 24;
pub const DEFAULT_EXHAUSTIVE_BOUND: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_order: usize,
    pub exhaustive_bound: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_order: DEFAULT_MAX_ORDER,
            exhaustive_bound: DEFAULT_EXHAUSTIVE_BOUND,
        }
    }
}

impl EnumerationLimits {
    /// Defaults, with `max_order` overridden by `WBK_MAX_ORDER` when set.
    pub fn from_env() -> Self {
        let mut limits = Self::default();
        if let Some(v) = std::env::var("WBK_MAX_ORDER")
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            limits.max_order = v;
        }
        limits
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationMode {
    /// Every subset containing `E(S)` is tested.
    Exhaustive,
    /// Principal ideals `⟨E(S) ∪ {x}⟩` closed under sums.
    ClosureSeeded,
}

impl EnumerationMode {
    pub fn name(self) -> &'static str {
        match self {
            EnumerationMode::Exhaustive => "exhaustive",
            EnumerationMode::ClosureSeeded => "closure-seeded",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealEnumeration {
    /// Sorted by size, then by members.
    pub ideals: Vec<ElementSet>,
    pub mode: EnumerationMode,
}

/// All ideals, exhaustively up to the exhaustive bound and closure-seeded
/// above it. Limits come from the environment.
pub fn enumerate_ideals(s: &DualWeakBrace) -> Result<IdealEnumeration, IdealError> {
    enumerate_ideals_with(s, EnumerationLimits::from_env(), None)
}

/// `mode = None` picks exhaustive search when the order allows it.
pub fn enumerate_ideals_with(
    s: &DualWeakBrace,
    limits: EnumerationLimits,
    mode: Option<EnumerationMode>,
) -> Result<IdealEnumeration, IdealError> {
    let n = s.order();
    if n > limits.max_order {
        return Err(IdealError::OrderTooLarge {
            order: n,
            limit: limits.max_order,
        });
    }
    let mode = mode.unwrap_or(if n <= limits.exhaustive_bound {
        EnumerationMode::Exhaustive
    } else {
        EnumerationMode::ClosureSeeded
    });
    if mode == EnumerationMode::Exhaustive && n > limits.exhaustive_bound {
        return Err(IdealError::OrderTooLarge {
            order: n,
            limit: limits.exhaustive_bound,
        });
    }
    let found = match mode {
        EnumerationMode::Exhaustive => exhaustive(s),
        EnumerationMode::ClosureSeeded => closure_seeded(s),
    };
    let mut ideals: Vec<ElementSet> = found.into_iter().collect();
    ideals.sort_by_key(|x| (x.len(), x.to_vec()));
    Ok(IdealEnumeration { ideals, mode })
}

fn exhaustive(s: &DualWeakBrace) -> BTreeSet<ElementSet> {
    let free: Vec<usize> = (0..s.order()).filter(|&a| !s.is_idempotent(a)).collect();
    let mut out = BTreeSet::new();
    for mask in 0u64..1 << free.len() {
        let mut x = s.idempotents().clone();
        for (bit, &a) in free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                x.insert(a);
            }
        }
        if is_ideal(s, &x).is_ok() {
            out.insert(x);
        }
    }
    out
}

/// Every ideal is the sum of the principal ideals of its elements, so
/// closing the principal ideals under pairwise sums reaches all of them.
fn closure_seeded(s: &DualWeakBrace) -> BTreeSet<ElementSet> {
    let n = s.order();
    let mut out: BTreeSet<ElementSet> = BTreeSet::new();
    out.insert(s.idempotents().clone());
    for x in 0..n {
        out.insert(ideal_closure(s, &ElementSet::from_indices(n, [x])));
    }
    loop {
        let current: Vec<ElementSet> = out.iter().cloned().collect();
        let mut grew = false;
        for (i, a) in current.iter().enumerate() {
            for b in &current[i + 1..] {
                if a.is_subset(b) || b.is_subset(a) {
                    continue;
                }
                if out.insert(ideal_closure(s, &a.union(b))) {
                    grew = true;
                }
            }
        }
        if !grew {
            return out;
        }
    }
}

/// An ideal split along the semilattice components of its ambient brace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealDecomposition {
    /// `I_α = B_α ∩ I` in local indices of `B_α`.
    pub parts: Vec<ElementSet>,
    /// `I_α` in ambient indices.
    pub global_parts: Vec<ElementSet>,
    /// `φ_{α,β}` restricted to `I_α`, as `(x, φ(x))` pairs in local indices.
    pub restricted_homs: BTreeMap<(usize, usize), Vec<(usize, usize)>>,
}

pub fn ideal_decomposition(
    s: &DualWeakBrace,
    i: &ElementSet,
) -> Result<IdealDecomposition, IdealError> {
    is_ideal(s, i).map_err(IdealError::NotAnIdeal)?;
    let d = decompose(s).map_err(|e| IdealError::InternalInvariantBroken(e.to_string()))?;
    let k = d.spec.semilattice().size();
    let mut parts = Vec::with_capacity(k);
    let mut global_parts = Vec::with_capacity(k);
    for alpha in 0..k {
        let members = d.members(alpha);
        let local = ElementSet::from_indices(
            members.len(),
            (0..members.len()).filter(|&j| i.contains(members[j])),
        );
        let component = d.spec.brace(alpha).to_dual_weak_brace();
        is_ideal(&component, &local).map_err(|v| {
            IdealError::InternalInvariantBroken(format!(
                "component {alpha} of an ideal is not an ideal: {v}"
            ))
        })?;
        global_parts.push(ElementSet::from_indices(
            s.order(),
            local.iter().map(|j| members[j]),
        ));
        parts.push(local);
    }
    let mut restricted_homs = BTreeMap::new();
    for (alpha, beta) in d.spec.semilattice().strict_pairs() {
        let pairs: Vec<(usize, usize)> = parts[alpha]
            .iter()
            .map(|x| (x, d.spec.phi(alpha, beta, x)))
            .collect();
        if let Some(&(x, _)) = pairs.iter().find(|&&(_, y)| !parts[beta].contains(y)) {
            return Err(IdealError::InternalInvariantBroken(format!(
                "phi_{alpha},{beta} maps {x} outside the ideal component"
            )));
        }
        restricted_homs.insert((alpha, beta), pairs);
    }
    Ok(IdealDecomposition {
        parts,
        global_parts,
        restricted_homs,
    })
}

/// `⋃_α f(B_α)` in ambient indices, for a subset-valued function `f` on
/// dual weak braces.
pub fn component_union(s: &DualWeakBrace, f: impl Fn(&DualWeakBrace) -> ElementSet) -> ElementSet {
    let d = decompose(s).expect("every dual weak brace decomposes");
    let mut out = ElementSet::empty(s.order());
    for alpha in 0..d.spec.semilattice().size() {
        for j in f(&d.spec.brace(alpha).to_dual_weak_brace()).iter() {
            out.insert(d.global(alpha, j));
        }
    }
    out
}
