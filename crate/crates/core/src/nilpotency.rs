//! The series `S^(n)`, `Soc_n`, `Ann_k` and `Γ_k`, and the nilpotency
//! notions they define.
//!
//! Each series is iterated until the first repeated term. A series that
//! reaches its target (`E(S)` going down, `S` going up) is `terminated`;
//! otherwise it stalled at a proper fixed point.

use std::fmt;

use thiserror::Error;

use crate::brace::DualWeakBrace;
use crate::compose::decompose;
use crate::ideal::{self, quotient, IdealError, SubsetViolation};
use crate::set::ElementSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    Right,
    Socle,
    Annihilator,
    Gamma,
}

impl SeriesKind {
    pub fn name(self) -> &'static str {
        match self {
            SeriesKind::Right => "right",
            SeriesKind::Socle => "socle",
            SeriesKind::Annihilator => "ann",
            SeriesKind::Gamma => "gamma",
        }
    }

    fn descending(self) -> bool {
        matches!(self, SeriesKind::Right | SeriesKind::Gamma)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// Terms from the first (`S^(1)`, `Soc_0`, `Ann_0`, `Γ_0`) up to the
    /// first repetition.
    pub chain: Vec<ElementSet>,
    pub terminated: bool,
    pub index: Option<usize>,
    /// For `Soc_n` and `Ann_k`: whether the elementwise terms agree with
    /// the pullback of the socle/annihilator of `S / previous term`.
    pub quotient_agrees: Option<bool>,
}

impl fmt::Display for SeriesReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (label, first) = match self.kind {
            SeriesKind::Right => ("S", 1),
            SeriesKind::Socle => ("Soc", 0),
            SeriesKind::Annihilator => ("Ann", 0),
            SeriesKind::Gamma => ("Γ", 0),
        };
        write!(f, "{}: ", self.kind.name())?;
        for (i, term) in self.chain.iter().enumerate() {
            if i > 0 {
                f.write_str(" → ")?;
            }
            let k = superscript(first + i);
            match self.kind {
                SeriesKind::Right => write!(f, "|{label}⁽{k}⁾|={}", term.len())?,
                _ => write!(f, "|{label}{}|={}", subscript(first + i), term.len())?,
            }
        }
        match (self.terminated, self.index) {
            (true, Some(i)) => write!(f, " (terminated, index {i})"),
            _ => f.write_str(" (stalled)"),
        }
    }
}

fn superscript(n: usize) -> String {
    n.to_string()
        .chars()
        .map(|c| "⁰¹²³⁴⁵⁶⁷⁸⁹".chars().nth(c as usize - '0' as usize).unwrap())
        .collect()
}

fn subscript(n: usize) -> String {
    n.to_string()
        .chars()
        .map(|c| "₀₁₂₃₄₅₆₇₈₉".chars().nth(c as usize - '0' as usize).unwrap())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NilpotencyError {
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("term {j} of the chain is not an ideal: {violation}")]
    ChainTermNotIdeal {
        j: usize,
        violation: SubsetViolation,
    },
    #[error("chain must start at E(S), end at S and increase: {0}")]
    InvalidChain(String),
    #[error("I_{next}/I_{j} is not inside Ann(S/I_{j}): element {witness}", next = j + 1)]
    NotAnnihilatorSeries { j: usize, witness: usize },
}

fn iterate(
    s: &DualWeakBrace,
    kind: SeriesKind,
    first: ElementSet,
    step: impl Fn(&ElementSet) -> ElementSet,
) -> (Vec<ElementSet>, bool) {
    let mut chain = vec![first];
    loop {
        let next = step(chain.last().expect("non-empty"));
        if chain.contains(&next) {
            break;
        }
        chain.push(next);
    }
    let last = chain.last().expect("non-empty");
    let target = if kind.descending() {
        s.idempotents().clone()
    } else {
        s.full_set()
    };
    let terminated = *last == target;
    (chain, terminated)
}

/// `S^(1) = S`, `S^(n+1) = S^(n) · S`. Index: least `m ≥ 1` with
/// `S^(m+1) = E(S)`.
pub fn right_series(s: &DualWeakBrace) -> SeriesReport {
    let full = s.full_set();
    let (chain, terminated) = iterate(s, SeriesKind::Right, full.clone(), |x| {
        ideal::product_set(s, x, &full)
    });
    let index = terminated.then(|| (chain.len() - 1).max(1));
    SeriesReport {
        kind: SeriesKind::Right,
        chain,
        terminated,
        index,
        quotient_agrees: None,
    }
}

/// `Soc_n = {a : a · b, [a, b]₊ ∈ Soc_{n−1} for all b}`, `Soc_0 = E(S)`.
pub fn socle_series(s: &DualWeakBrace) -> SeriesReport {
    let n = s.order();
    let step = |prev: &ElementSet| {
        ElementSet::from_indices(
            n,
            (0..n).filter(|&a| {
                (0..n).all(|b| prev.contains(s.dot(a, b)) && prev.contains(s.add_commutator(a, b)))
            }),
        )
    };
    let (chain, terminated) = iterate(s, SeriesKind::Socle, s.idempotents().clone(), step);
    let agrees = pullbacks_agree(s, &chain, ideal::socle);
    let index = terminated.then(|| chain.len() - 1);
    SeriesReport {
        kind: SeriesKind::Socle,
        chain,
        terminated,
        index,
        quotient_agrees: Some(agrees),
    }
}

/// `Ann_k = {a : a · b, b · a, [a, b]₊ ∈ Ann_{k−1} for all b}`,
/// `Ann_0 = E(S)`.
pub fn annihilator_series(s: &DualWeakBrace) -> SeriesReport {
    let n = s.order();
    let step = |prev: &ElementSet| {
        ElementSet::from_indices(
            n,
            (0..n).filter(|&a| {
                (0..n).all(|b| {
                    prev.contains(s.dot(a, b))
                        && prev.contains(s.dot(b, a))
                        && prev.contains(s.add_commutator(a, b))
                })
            }),
        )
    };
    let (chain, terminated) = iterate(s, SeriesKind::Annihilator, s.idempotents().clone(), step);
    let agrees = pullbacks_agree(s, &chain, ideal::annihilator);
    let index = terminated.then(|| chain.len() - 1);
    SeriesReport {
        kind: SeriesKind::Annihilator,
        chain,
        terminated,
        index,
        quotient_agrees: Some(agrees),
    }
}

/// Compares each term with the pullback of `f(S / previous)`, including
/// the repeated term that ended the chain.
fn pullbacks_agree(
    s: &DualWeakBrace,
    chain: &[ElementSet],
    f: fn(&DualWeakBrace) -> ElementSet,
) -> bool {
    let pullback = |prev: &ElementSet| -> Option<ElementSet> {
        let q = quotient(s, prev).ok()?;
        Some(q.pullback(&f(&q.quotient)))
    };
    chain
        .windows(2)
        .all(|w| pullback(&w[0]).as_ref() == Some(&w[1]))
        && pullback(chain.last().expect("non-empty")).is_some_and(|p| chain.contains(&p))
}

/// `Γ(I) = ⟨I · S, S · I, [I, S]₊⟩₊`.
pub fn gamma(s: &DualWeakBrace, i: &ElementSet) -> ElementSet {
    let n = s.order();
    let gens: Vec<usize> = i
        .iter()
        .flat_map(|x| (0..n).flat_map(move |b| [s.dot(x, b), s.dot(b, x), s.add_commutator(x, b)]))
        .collect();
    ideal::generated_full_inverse_subsemigroup(s, &ElementSet::from_indices(n, gens))
}

/// `Γ_0 = I`, `Γ_k = Γ(Γ_{k−1})`. Index: least `k` with `Γ_k = E(S)`.
pub fn gamma_series(s: &DualWeakBrace, i: &ElementSet) -> Result<SeriesReport, NilpotencyError> {
    ideal::is_ideal(s, i).map_err(|v| NilpotencyError::Ideal(IdealError::NotAnIdeal(v)))?;
    let (chain, terminated) = iterate(s, SeriesKind::Gamma, i.clone(), |x| gamma(s, x));
    let index = terminated.then(|| chain.len() - 1);
    Ok(SeriesReport {
        kind: SeriesKind::Gamma,
        chain,
        terminated,
        index,
        quotient_agrees: None,
    })
}

/// `N/M ⊆ Ann(S/M)`, for ideals `M ⊆ N`; returns the first element of `N`
/// whose class is outside.
pub fn first_outside_annihilator_quotient(
    s: &DualWeakBrace,
    m: &ElementSet,
    n: &ElementSet,
) -> Result<Option<usize>, IdealError> {
    let q = quotient(s, m)?;
    let ann = ideal::annihilator(&q.quotient);
    Ok(n.iter().find(|&a| !ann.contains(q.projection[a])))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandwichReport {
    /// `Γ_{k−j}(S) ⊆ I_j` for `j = 0..=k`.
    pub gamma_inclusions: Vec<bool>,
    /// `I_j ⊆ Ann_j(S)` for `j = 0..=k`.
    pub ann_inclusions: Vec<bool>,
    /// `N/M ⊆ Ann(S/M) ⟺ Γ(N) ⊆ M` for all chain pairs `M ⊆ N`.
    pub quotient_criterion: bool,
    /// `Γ(M + N) = Γ(M) + Γ(N)` for all chain pairs.
    pub gamma_sum: bool,
}

impl SandwichReport {
    pub fn passed(&self) -> bool {
        self.gamma_inclusions.iter().all(|&b| b)
            && self.ann_inclusions.iter().all(|&b| b)
            && self.quotient_criterion
            && self.gamma_sum
    }
}

/// `N/M ⊆ Ann(S/M) ⟺ Γ(N) ⊆ M`.
pub fn quotient_criterion_holds(
    s: &DualWeakBrace,
    m: &ElementSet,
    n: &ElementSet,
) -> Result<bool, IdealError> {
    let lhs = first_outside_annihilator_quotient(s, m, n)?.is_none();
    Ok(lhs == gamma(s, n).is_subset(m))
}

/// `Γ(M + N) = Γ(M) + Γ(N)`.
pub fn gamma_sum_holds(
    s: &DualWeakBrace,
    m: &ElementSet,
    n: &ElementSet,
) -> Result<bool, IdealError> {
    let sum = ideal::sum_of_ideals(s, m, n)?;
    let (gm, gn) = (gamma(s, m), gamma(s, n));
    let gsum = ElementSet::from_indices(
        s.order(),
        gm.iter().flat_map(|a| gn.iter().map(move |b| s.add(a, b))),
    );
    Ok(gamma(s, &sum) == gsum)
}

/// Checks `chain` is an annihilator series, then `Γ_{k−j}(S) ⊆ I_j ⊆ Ann_j(S)`.
pub fn verify_sandwich(
    s: &DualWeakBrace,
    chain: &[ElementSet],
) -> Result<SandwichReport, NilpotencyError> {
    let (Some(first), Some(last)) = (chain.first(), chain.last()) else {
        return Err(NilpotencyError::InvalidChain("empty chain".into()));
    };
    if first != s.idempotents() || !last.is_full() {
        return Err(NilpotencyError::InvalidChain(
            "endpoints must be E(S) and S".into(),
        ));
    }
    for (j, term) in chain.iter().enumerate() {
        ideal::is_ideal(s, term)
            .map_err(|violation| NilpotencyError::ChainTermNotIdeal { j, violation })?;
    }
    if let Some(j) = chain.windows(2).position(|w| !w[0].is_subset(&w[1])) {
        return Err(NilpotencyError::InvalidChain(format!(
            "term {j} is not inside term {}",
            j + 1
        )));
    }
    for j in 0..chain.len() - 1 {
        if let Some(witness) = first_outside_annihilator_quotient(s, &chain[j], &chain[j + 1])? {
            return Err(NilpotencyError::NotAnnihilatorSeries { j, witness });
        }
    }
    let k = chain.len() - 1;
    let mut gammas = vec![s.full_set()];
    for _ in 0..k {
        let next = gamma(s, gammas.last().expect("non-empty"));
        gammas.push(next);
    }
    let mut anns = vec![s.idempotents().clone()];
    let ann = annihilator_series(s);
    for j in 1..=k {
        anns.push(
            ann.chain
                .get(j)
                .unwrap_or_else(|| ann.chain.last().expect("non-empty"))
                .clone(),
        );
    }
    let gamma_inclusions = (0..=k)
        .map(|j| gammas[k - j].is_subset(&chain[j]))
        .collect();
    let ann_inclusions = (0..=k).map(|j| chain[j].is_subset(&anns[j])).collect();
    let mut quotient_criterion = true;
    let mut gamma_sum = true;
    for i in 0..=k {
        for j in i..=k {
            quotient_criterion &= quotient_criterion_holds(s, &chain[i], &chain[j])?;
            gamma_sum &= gamma_sum_holds(s, &chain[i], &chain[j])?;
        }
    }
    Ok(SandwichReport {
        gamma_inclusions,
        ann_inclusions,
        quotient_criterion,
        gamma_sum,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentIndices {
    pub right: Option<usize>,
    pub socle: Option<usize>,
    pub annihilator: Option<usize>,
}

impl ComponentIndices {
    fn of(s: &DualWeakBrace) -> Self {
        ComponentIndices {
            right: right_series(s).index,
            socle: socle_series(s).index,
            annihilator: annihilator_series(s).index,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub right: SeriesReport,
    pub socle: SeriesReport,
    pub annihilator: SeriesReport,
    pub gamma: SeriesReport,
    pub components: Vec<ComponentIndices>,
    /// Named consequences checked on this structure, with their outcome.
    pub checks: Vec<(&'static str, bool)>,
}

impl Classification {
    pub fn indices(&self) -> ComponentIndices {
        ComponentIndices {
            right: self.right.index,
            socle: self.socle.index,
            annihilator: self.annihilator.index,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|&(_, ok)| ok)
    }
}

fn max_if_all(xs: impl Iterator<Item = Option<usize>>) -> Option<usize> {
    xs.collect::<Option<Vec<usize>>>()
        .map(|v| v.into_iter().max().unwrap_or(0))
}

/// Runs every series on `s` and on each component and checks the
/// consequences that apply.
pub fn classify(s: &DualWeakBrace) -> Classification {
    let right = right_series(s);
    let socle = socle_series(s);
    let annihilator = annihilator_series(s);
    let gamma = gamma_series(s, &s.full_set()).expect("S is an ideal of itself");
    let d = decompose(s).expect("every dual weak brace decomposes");
    let components: Vec<ComponentIndices> = d
        .spec
        .braces()
        .iter()
        .map(|b| ComponentIndices::of(&b.to_dual_weak_brace()))
        .collect();

    let mut checks = Vec::new();
    if let Some(m) = socle.index {
        checks.push((
            "left annihilator nilpotent implies right nilpotent",
            right.index.is_some_and(|r| r <= m.max(1)),
        ));
    }
    if let Some(sidx) = socle.index {
        checks.push((
            "component socle indices bounded",
            components
                .iter()
                .all(|c| c.socle.is_some_and(|k| k <= sidx)),
        ));
    }
    if let Some(m) = max_if_all(components.iter().map(|c| c.socle)) {
        checks.push((
            "socle index is the component maximum",
            socle.index == Some(m),
        ));
    }
    if let Some(aidx) = annihilator.index {
        checks.push((
            "component annihilator indices bounded",
            components
                .iter()
                .all(|c| c.annihilator.is_some_and(|k| k <= aidx)),
        ));
        checks.push((
            "lower series reaches E(S) within c+1 steps",
            gamma.index.is_some_and(|g| g <= aidx + 1),
        ));
    }
    if let Some(m) = max_if_all(components.iter().map(|c| c.annihilator)) {
        checks.push((
            "annihilator index is the component maximum",
            annihilator.index == Some(m),
        ));
    }
    checks.push((
        "socle series agrees with quotient pullbacks",
        socle.quotient_agrees == Some(true),
    ));
    checks.push((
        "annihilator series agrees with quotient pullbacks",
        annihilator.quotient_agrees == Some(true),
    ));
    Classification {
        right,
        socle,
        annihilator,
        gamma,
        components,
        checks,
    }
}
