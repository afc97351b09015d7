use thiserror::Error;

use super::table::{OpTable, TableError};
use crate::set::ElementSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("not associative on ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element {a} has {candidates} inverse candidates, expected exactly one")]
    NotInverse { a: usize, candidates: usize },
    #[error("element {a}: a*inv(a) != inv(a)*a")]
    NotClifford { a: usize },
}

/// A finite Clifford semigroup: an inverse semigroup whose idempotents are
/// central.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CliffordTable {
    table: OpTable,
    inv: Vec<usize>,
    idempotents: ElementSet,
}

pub fn validate_clifford(rows: &[Vec<usize>]) -> Result<CliffordTable, CliffordError> {
    CliffordTable::from_table(OpTable::from_rows(rows)?)
}

impl CliffordTable {
    pub fn from_table(table: OpTable) -> Result<Self, CliffordError> {
        if let Some((a, b, c)) = table.first_non_associative() {
            return Err(CliffordError::NotAssociative { a, b, c });
        }
        let n = table.order();
        let mut inv = Vec::with_capacity(n);
        for a in 0..n {
            let candidates: Vec<usize> = (0..n)
                .filter(|&x| {
                    table.get(table.get(a, x), a) == a && table.get(table.get(x, a), x) == x
                })
                .collect();
            match candidates[..] {
                [x] => inv.push(x),
                _ => {
                    return Err(CliffordError::NotInverse {
                        a,
                        candidates: candidates.len(),
                    })
                }
            }
        }
        if let Some(a) = (0..n).find(|&a| table.get(a, inv[a]) != table.get(inv[a], a)) {
            return Err(CliffordError::NotClifford { a });
        }
        let idempotents = ElementSet::from_indices(n, (0..n).filter(|&e| table.get(e, e) == e));
        Ok(CliffordTable {
            table,
            inv,
            idempotents,
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.table.order()
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table.get(a, b)
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// The idempotent `a * inv(a)`, identity of the group component of `a`.
    #[inline]
    pub fn zero(&self, a: usize) -> usize {
        self.op(a, self.inv[a])
    }

    pub fn idempotents(&self) -> &ElementSet {
        &self.idempotents
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.idempotents.contains(a)
    }

    pub fn table(&self) -> &OpTable {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.rows()
    }

    pub fn center(&self) -> ElementSet {
        let n = self.order();
        ElementSet::from_indices(
            n,
            (0..n).filter(|&a| (0..n).all(|b| self.op(a, b) == self.op(b, a))),
        )
    }

    pub fn is_commutative(&self) -> bool {
        self.center().is_full()
    }
}
