use thiserror::Error;

use super::clifford::CliffordTable;
use super::table::{OpTable, TableError};
use crate::set::ElementSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {a} has no inverse")]
    NoInverse { a: usize },
}

/// A finite group given by its Cayley table over `0..order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroupTable {
    table: OpTable,
    identity: usize,
    inv: Vec<usize>,
}

/// Validates a raw Cayley table as a group.
///
/// Checks run in the order closure, associativity, identity, inverses and
/// report the lexicographically smallest witness of the first failure.
pub fn validate_group(rows: &[Vec<usize>]) -> Result<FiniteGroupTable, GroupError> {
    FiniteGroupTable::from_table(OpTable::from_rows(rows)?)
}

impl FiniteGroupTable {
    pub fn from_table(table: OpTable) -> Result<Self, GroupError> {
        if let Some((a, b, c)) = table.first_non_associative() {
            return Err(GroupError::NotAssociative { a, b, c });
        }
        let n = table.order();
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table.get(e, x) == x && table.get(x, e) == x))
            .ok_or(GroupError::NoIdentity)?;
        let mut inv = Vec::with_capacity(n);
        for a in 0..n {
            let x = (0..n)
                .find(|&x| table.get(a, x) == identity && table.get(x, a) == identity)
                .ok_or(GroupError::NoInverse { a })?;
            inv.push(x);
        }
        Ok(FiniteGroupTable {
            table,
            identity,
            inv,
        })
    }

    /// Cyclic group of the given order under addition mod `order`.
    pub fn cyclic(order: usize) -> Self {
        Self::from_table(OpTable::from_fn(order, |a, b| (a + b) % order))
            .expect("addition mod n is a group")
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
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn table(&self) -> &OpTable {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.rows()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order())
            .map(|a| self.element_order(a))
            .fold(1, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn center(&self) -> ElementSet {
        let n = self.order();
        ElementSet::from_indices(
            n,
            (0..n).filter(|&a| (0..n).all(|b| self.op(a, b) == self.op(b, a))),
        )
    }

    /// Subgroup generated by `gens` (the identity alone when `gens` is empty).
    pub fn closure(&self, gens: &[usize]) -> ElementSet {
        let mut set = ElementSet::empty(self.order());
        set.insert(self.identity);
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.op(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    /// Greedy generating set: repeatedly adjoin the smallest element not yet
    /// in the generated subgroup.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.closure(&gens);
        for x in 0..self.order() {
            if !span.contains(x) {
                gens.push(x);
                span = self.closure(&gens);
            }
        }
        gens
    }

    pub fn to_clifford(&self) -> CliffordTable {
        CliffordTable::from_table(self.table.clone()).expect("every group is a Clifford semigroup")
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}
