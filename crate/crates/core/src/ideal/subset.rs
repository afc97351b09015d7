use std::fmt;

use thiserror::Error;

use super::IdealError;
use crate::brace::{DualWeakBrace, Side};
use crate::set::ElementSet;

/// Why a subset fails a predicate. Witnesses are lexicographically first.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubsetViolation {
    #[error("subset is empty")]
    Empty,
    #[error("idempotent {e} is missing")]
    MissingIdempotent { e: usize },
    #[error("zero part of {a} is missing")]
    MissingZeroPart { a: usize },
    #[error("{a} {side} {b} leaves the subset")]
    NotClosed { side: Side, a: usize, b: usize },
    #[error("the {side} inverse of {a} leaves the subset")]
    NotInverseClosed { side: Side, a: usize },
    #[error("conjugating {x} by {a} in ({side}) leaves the subset")]
    NotNormal { side: Side, a: usize, x: usize },
    #[error("lambda_{a}({x}) leaves the subset")]
    NotLambdaInvariant { a: usize, x: usize },
}

/// Predicate tiers, weakest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdealTier {
    Left,
    StrongLeft,
    Ideal,
}

impl IdealTier {
    pub fn tag(self) -> &'static str {
        match self {
            IdealTier::Left => "L",
            IdealTier::StrongLeft => "SL",
            IdealTier::Ideal => "I",
        }
    }
}

impl fmt::Display for IdealTier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Full (contains `E(S)`), closed under the operation and its inverse.
pub fn is_full_inverse_subsemigroup(
    s: &DualWeakBrace,
    x: &ElementSet,
    side: Side,
) -> Result<(), SubsetViolation> {
    if let Some(e) = s.idempotents().iter().find(|&e| !x.contains(e)) {
        return Err(SubsetViolation::MissingIdempotent { e });
    }
    let t = s.table(side);
    for a in x.iter() {
        if let Some(b) = x.iter().find(|&b| !x.contains(t.op(a, b))) {
            return Err(SubsetViolation::NotClosed { side, a, b });
        }
    }
    match x.iter().find(|&a| !x.contains(t.inv(a))) {
        Some(a) => Err(SubsetViolation::NotInverseClosed { side, a }),
        None => Ok(()),
    }
}

pub fn is_full_inverse_subsemigroup_add(
    s: &DualWeakBrace,
    x: &ElementSet,
) -> Result<(), SubsetViolation> {
    is_full_inverse_subsemigroup(s, x, Side::Add)
}

/// `a⁻¹ x a` in the chosen operation.
pub fn conjugate(s: &DualWeakBrace, side: Side, a: usize, x: usize) -> usize {
    match side {
        Side::Add => s.add(s.add(s.neg(a), x), a),
        Side::Mul => s.mul(s.mul(s.minv(a), x), a),
    }
}

/// Full inverse subsemigroup stable under conjugation by every element.
pub fn is_normal_subsemigroup(
    s: &DualWeakBrace,
    x: &ElementSet,
    side: Side,
) -> Result<(), SubsetViolation> {
    is_full_inverse_subsemigroup(s, x, side)?;
    for a in 0..s.order() {
        if let Some(y) = x.iter().find(|&y| !x.contains(conjugate(s, side, a, y))) {
            return Err(SubsetViolation::NotNormal { side, a, x: y });
        }
    }
    Ok(())
}

pub fn is_lambda_invariant(s: &DualWeakBrace, x: &ElementSet) -> Result<(), SubsetViolation> {
    for a in 0..s.order() {
        if let Some(y) = x.iter().find(|&y| !x.contains(s.lambda(a, y))) {
            return Err(SubsetViolation::NotLambdaInvariant { a, x: y });
        }
    }
    Ok(())
}

pub fn is_left_ideal(s: &DualWeakBrace, x: &ElementSet) -> Result<(), SubsetViolation> {
    is_full_inverse_subsemigroup(s, x, Side::Add)?;
    is_lambda_invariant(s, x)
}

pub fn is_strong_left_ideal(s: &DualWeakBrace, x: &ElementSet) -> Result<(), SubsetViolation> {
    is_left_ideal(s, x)?;
    is_normal_subsemigroup(s, x, Side::Add)
}

pub fn is_ideal(s: &DualWeakBrace, x: &ElementSet) -> Result<(), SubsetViolation> {
    is_normal_subsemigroup(s, x, Side::Add)?;
    is_lambda_invariant(s, x)?;
    is_normal_subsemigroup(s, x, Side::Mul)
}

/// The strongest tier `x` satisfies.
pub fn ideal_tier(s: &DualWeakBrace, x: &ElementSet) -> Option<IdealTier> {
    if is_ideal(s, x).is_ok() {
        Some(IdealTier::Ideal)
    } else if is_strong_left_ideal(s, x).is_ok() {
        Some(IdealTier::StrongLeft)
    } else if is_left_ideal(s, x).is_ok() {
        Some(IdealTier::Left)
    } else {
        None
    }
}

fn filter(s: &DualWeakBrace, pred: impl Fn(usize) -> bool) -> ElementSet {
    ElementSet::from_indices(s.order(), (0..s.order()).filter(|&a| pred(a)))
}

/// `{a : a + b = a ∘ b and a + b = b + a for all b}`.
pub fn socle(s: &DualWeakBrace) -> ElementSet {
    let n = s.order();
    filter(s, |a| {
        (0..n).all(|b| s.add(a, b) == s.mul(a, b) && s.add(a, b) == s.add(b, a))
    })
}

/// `{b : a + b = a ∘ b for all a}`.
pub fn fix(s: &DualWeakBrace) -> ElementSet {
    let n = s.order();
    filter(s, |b| (0..n).all(|a| s.add(a, b) == s.mul(a, b)))
}

pub fn additive_center(s: &DualWeakBrace) -> ElementSet {
    s.add_table().center()
}

pub fn multiplicative_center(s: &DualWeakBrace) -> ElementSet {
    s.mul_table().center()
}

/// `Zl(S) = Fix(S) ∩ ζ(S, +)`.
pub fn left_center(s: &DualWeakBrace) -> ElementSet {
    fix(s).intersection(&additive_center(s))
}

/// `Ann(S) = Soc(S) ∩ ζ(S, ∘)`.
pub fn annihilator(s: &DualWeakBrace) -> ElementSet {
    socle(s).intersection(&multiplicative_center(s))
}

/// Least subset containing `seed ∪ E(S)` closed under `+` and `−`.
pub fn generated_full_inverse_subsemigroup(s: &DualWeakBrace, seed: &ElementSet) -> ElementSet {
    generated(s, Side::Add, seed.iter().chain(s.idempotents().iter()))
}

fn generated(s: &DualWeakBrace, side: Side, seed: impl IntoIterator<Item = usize>) -> ElementSet {
    let t = s.table(side);
    let mut set = ElementSet::empty(s.order());
    let mut members = Vec::new();
    let mut work: Vec<usize> = seed.into_iter().collect();
    while let Some(x) = work.pop() {
        if !set.insert(x) {
            continue;
        }
        members.push(x);
        work.push(t.inv(x));
        for &y in &members {
            work.push(t.op(x, y));
            work.push(t.op(y, x));
        }
    }
    set
}

/// `X · Y`: the full additive inverse subsemigroup generated by all `x · y`.
pub fn product_set(s: &DualWeakBrace, x: &ElementSet, y: &ElementSet) -> ElementSet {
    let dots: Vec<usize> = x
        .iter()
        .flat_map(|a| y.iter().map(move |b| s.dot(a, b)))
        .collect();
    generated(s, Side::Add, dots.into_iter().chain(s.idempotents().iter()))
}

/// `[X, Y]₊`: the full additive inverse subsemigroup generated by all
/// `[x, y]₊`.
pub fn commutator_set(s: &DualWeakBrace, x: &ElementSet, y: &ElementSet) -> ElementSet {
    let comms: Vec<usize> = x
        .iter()
        .flat_map(|a| y.iter().map(move |b| s.add_commutator(a, b)))
        .collect();
    generated(
        s,
        Side::Add,
        comms.into_iter().chain(s.idempotents().iter()),
    )
}

/// Least ideal containing `seed`.
pub fn ideal_closure(s: &DualWeakBrace, seed: &ElementSet) -> ElementSet {
    let n = s.order();
    let mut current = seed.union(s.idempotents());
    loop {
        let mut next = generated(s, Side::Add, current.iter());
        next = generated(s, Side::Mul, next.iter());
        let mut extra = Vec::new();
        for x in next.iter() {
            for a in 0..n {
                extra.push(s.lambda(a, x));
                extra.push(conjugate(s, Side::Add, a, x));
                extra.push(conjugate(s, Side::Mul, a, x));
            }
        }
        for e in extra {
            next.insert(e);
        }
        if next == current {
            return current;
        }
        current = next;
    }
}

/// `I + J`, checked against `I ∘ J` and revalidated as an ideal.
pub fn sum_of_ideals(
    s: &DualWeakBrace,
    i: &ElementSet,
    j: &ElementSet,
) -> Result<ElementSet, IdealError> {
    is_ideal(s, i).map_err(IdealError::NotAnIdeal)?;
    is_ideal(s, j).map_err(IdealError::NotAnIdeal)?;
    let n = s.order();
    let sum =
        ElementSet::from_indices(n, i.iter().flat_map(|a| j.iter().map(move |b| s.add(a, b))));
    let circ =
        ElementSet::from_indices(n, i.iter().flat_map(|a| j.iter().map(move |b| s.mul(a, b))));
    if sum != circ {
        return Err(IdealError::SumCircMismatch { sum, circ });
    }
    is_ideal(s, &sum)
        .map_err(|v| IdealError::InternalInvariantBroken(format!("I + J is not an ideal: {v}")))?;
    Ok(sum)
}
