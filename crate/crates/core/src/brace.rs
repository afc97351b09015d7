//! Skew braces and dual weak braces as twin tables on one element set.
//!
//! A dual weak brace carries two Clifford semigroup tables `+` and `∘` with
//! the same idempotents, tied together by
//!
//! ```text
//! a ∘ (b + c) = a ∘ b − a + a ∘ c        a ∘ a⁻ = −a + a
//! ```
//!
//! A skew brace is the special case where both tables are groups.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{CliffordError, CliffordTable, FiniteGroupTable, GroupError, OpTable};
use crate::set::ElementSet;

/// Which of the two operations a statement refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Add,
    Mul,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Add => "add",
            Side::Mul => "mul",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraceError {
    #[error("tables have different orders ({add} vs {mul})")]
    OrderMismatch { add: usize, mul: usize },
    #[error("{side} table is not a group: {source}")]
    GroupViolation { side: Side, source: GroupError },
    #[error("additive identity {add} differs from multiplicative identity {mul}")]
    IdentityMismatch { add: usize, mul: usize },
    #[error("{side} table is not a Clifford semigroup: {source}")]
    CliffordViolation { side: Side, source: CliffordError },
    #[error("idempotents differ: add {add}, mul {mul}")]
    IdempotentSetMismatch { add: ElementSet, mul: ElementSet },
    #[error("a∘(b+c) != a∘b − a + a∘c at ({a}, {b}, {c})")]
    CompatibilityViolation { a: usize, b: usize, c: usize },
    #[error("a∘a⁻ != −a + a at {a}")]
    SecondAxiomViolation { a: usize },
    #[error("opposite structure failed validation: {0}")]
    OppositeNotWeakBrace(Box<BraceError>),
}

/// Lexicographically smallest triple violating `a∘(b+c) = a∘b − a + a∘c`.
fn first_compatibility_violation(
    n: usize,
    add: impl Fn(usize, usize) -> usize,
    mul: impl Fn(usize, usize) -> usize,
    neg: impl Fn(usize) -> usize,
) -> Option<(usize, usize, usize)> {
    for a in 0..n {
        let minus_a = neg(a);
        for b in 0..n {
            let ab = mul(a, b);
            let left_part = add(ab, minus_a);
            for c in 0..n {
                if mul(a, add(b, c)) != add(left_part, mul(a, c)) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// A skew brace: two groups on one set sharing their identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewBrace {
    add: FiniteGroupTable,
    mul: FiniteGroupTable,
}

pub fn validate_skew_brace(
    add: &[Vec<usize>],
    mul: &[Vec<usize>],
) -> Result<SkewBrace, BraceError> {
    if add.len() != mul.len() {
        return Err(BraceError::OrderMismatch {
            add: add.len(),
            mul: mul.len(),
        });
    }
    let add = crate::algebra::validate_group(add).map_err(|source| BraceError::GroupViolation {
        side: Side::Add,
        source,
    })?;
    let mul = crate::algebra::validate_group(mul).map_err(|source| BraceError::GroupViolation {
        side: Side::Mul,
        source,
    })?;
    SkewBrace::from_groups(add, mul)
}

impl SkewBrace {
    pub fn from_groups(add: FiniteGroupTable, mul: FiniteGroupTable) -> Result<Self, BraceError> {
        if add.order() != mul.order() {
            return Err(BraceError::OrderMismatch {
                add: add.order(),
                mul: mul.order(),
            });
        }
        if add.identity() != mul.identity() {
            return Err(BraceError::IdentityMismatch {
                add: add.identity(),
                mul: mul.identity(),
            });
        }
        if let Some((a, b, c)) = first_compatibility_violation(
            add.order(),
            |x, y| add.op(x, y),
            |x, y| mul.op(x, y),
            |x| add.inv(x),
        ) {
            return Err(BraceError::CompatibilityViolation { a, b, c });
        }
        Ok(SkewBrace { add, mul })
    }

    /// The trivial skew brace `(G, ·, ·)`.
    pub fn trivial(group: &FiniteGroupTable) -> Self {
        SkewBrace {
            add: group.clone(),
            mul: group.clone(),
        }
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn identity(&self) -> usize {
        self.add.identity()
    }

    pub fn add_group(&self) -> &FiniteGroupTable {
        &self.add
    }

    pub fn mul_group(&self) -> &FiniteGroupTable {
        &self.mul
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.op(a, b)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul.op(a, b)
    }

    /// A brace is a skew brace with abelian additive group.
    pub fn is_brace(&self) -> bool {
        self.add.is_abelian()
    }

    pub fn to_dual_weak_brace(&self) -> DualWeakBrace {
        DualWeakBrace::from_cliffords(self.add.to_clifford(), self.mul.to_clifford())
            .expect("a skew brace is a dual weak brace")
    }
}

/// A finite dual weak brace.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualWeakBrace {
    add: CliffordTable,
    mul: CliffordTable,
    idempotent_list: Vec<usize>,
    component_of: Vec<usize>,
}

pub fn validate_dual_weak_brace(
    add: &[Vec<usize>],
    mul: &[Vec<usize>],
) -> Result<DualWeakBrace, BraceError> {
    if add.len() != mul.len() {
        return Err(BraceError::OrderMismatch {
            add: add.len(),
            mul: mul.len(),
        });
    }
    let add =
        crate::algebra::validate_clifford(add).map_err(|source| BraceError::CliffordViolation {
            side: Side::Add,
            source,
        })?;
    let mul =
        crate::algebra::validate_clifford(mul).map_err(|source| BraceError::CliffordViolation {
            side: Side::Mul,
            source,
        })?;
    DualWeakBrace::from_cliffords(add, mul)
}

impl DualWeakBrace {
    pub fn from_cliffords(add: CliffordTable, mul: CliffordTable) -> Result<Self, BraceError> {
        let n = add.order();
        if mul.order() != n {
            return Err(BraceError::OrderMismatch {
                add: n,
                mul: mul.order(),
            });
        }
        if add.idempotents() != mul.idempotents() {
            return Err(BraceError::IdempotentSetMismatch {
                add: add.idempotents().clone(),
                mul: mul.idempotents().clone(),
            });
        }
        if let Some((a, b, c)) = first_compatibility_violation(
            n,
            |x, y| add.op(x, y),
            |x, y| mul.op(x, y),
            |x| add.inv(x),
        ) {
            return Err(BraceError::CompatibilityViolation { a, b, c });
        }
        // a∘a⁻ = −a + a; in a Clifford semigroup −a + a = a − a, so this
        // also cross-checks the two readings of the zero part.
        if let Some(a) = (0..n).find(|&a| mul.op(a, mul.inv(a)) != add.op(add.inv(a), a)) {
            return Err(BraceError::SecondAxiomViolation { a });
        }
        let idempotent_list = add.idempotents().to_vec();
        let component_of = (0..n)
            .map(|a| {
                let z = add.zero(a);
                idempotent_list
                    .binary_search(&z)
                    .expect("zero part is idempotent")
            })
            .collect();
        Ok(DualWeakBrace {
            add,
            mul,
            idempotent_list,
            component_of,
        })
    }

    /// The trivial weak brace `a + b := a ∘ b` on a Clifford semigroup.
    pub fn trivial(clifford: &CliffordTable) -> Self {
        Self::from_cliffords(clifford.clone(), clifford.clone())
            .expect("a Clifford semigroup gives a trivial dual weak brace")
    }

    pub fn from_tables(add: OpTable, mul: OpTable) -> Result<Self, BraceError> {
        let add =
            CliffordTable::from_table(add).map_err(|source| BraceError::CliffordViolation {
                side: Side::Add,
                source,
            })?;
        let mul =
            CliffordTable::from_table(mul).map_err(|source| BraceError::CliffordViolation {
                side: Side::Mul,
                source,
            })?;
        Self::from_cliffords(add, mul)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn add_table(&self) -> &CliffordTable {
        &self.add
    }

    pub fn mul_table(&self) -> &CliffordTable {
        &self.mul
    }

    pub fn table(&self, side: Side) -> &CliffordTable {
        match side {
            Side::Add => &self.add,
            Side::Mul => &self.mul,
        }
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.op(a, b)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul.op(a, b)
    }

    /// Additive inverse `−a`.
    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.add.inv(a)
    }

    /// Multiplicative inverse `a⁻`.
    #[inline]
    pub fn minv(&self, a: usize) -> usize {
        self.mul.inv(a)
    }

    /// `a − b`, i.e. `a + (−b)`.
    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// The idempotent `a⁰ = a − a`.
    #[inline]
    pub fn zero_part(&self, a: usize) -> usize {
        self.add.zero(a)
    }

    /// `λ_a(b) = −a + a∘b`.
    #[inline]
    pub fn lambda(&self, a: usize, b: usize) -> usize {
        self.add(self.neg(a), self.mul(a, b))
    }

    /// `ρ_b(a) = (λ_a(b))⁻ ∘ a ∘ b`.
    #[inline]
    pub fn rho(&self, b: usize, a: usize) -> usize {
        let l = self.lambda(a, b);
        self.mul(self.mul(self.minv(l), a), b)
    }

    /// `a · b = −a + a∘b − b`.
    #[inline]
    pub fn dot(&self, a: usize, b: usize) -> usize {
        self.sub(self.lambda(a, b), b)
    }

    /// `[a, b]₊ = −a − b + a + b`.
    #[inline]
    pub fn add_commutator(&self, a: usize, b: usize) -> usize {
        let nab = self.add(self.neg(a), self.neg(b));
        self.add(self.add(nab, a), b)
    }

    pub fn idempotents(&self) -> &ElementSet {
        self.add.idempotents()
    }

    /// Idempotents in increasing index order; position `α` is the
    /// idempotent of semilattice component `α`.
    pub fn idempotent_list(&self) -> &[usize] {
        &self.idempotent_list
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.add.is_idempotent(a)
    }

    /// Semilattice component of `a`.
    pub fn component_of(&self, a: usize) -> usize {
        self.component_of[a]
    }

    pub fn component_count(&self) -> usize {
        self.idempotent_list.len()
    }

    pub fn is_skew_brace(&self) -> bool {
        self.idempotent_list.len() == 1
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.order())
    }

    /// `S^op = (S, +^op, ∘)`, revalidated.
    pub fn opposite(&self) -> Result<DualWeakBrace, BraceError> {
        Self::from_tables(self.add.table().transpose(), self.mul.table().clone())
            .map_err(|e| BraceError::OppositeNotWeakBrace(Box::new(e)))
    }

    /// Applies `perm` to every element label.
    pub fn relabel(&self, perm: &[usize]) -> Result<DualWeakBrace, BraceError> {
        Self::from_tables(
            self.add.table().relabel(perm),
            self.mul.table().relabel(perm),
        )
    }
}
