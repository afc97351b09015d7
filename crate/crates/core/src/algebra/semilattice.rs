use thiserror::Error;

use super::table::{OpTable, TableError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemilatticeError {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("meet({a}, {a}) != {a}")]
    NotIdempotent { a: usize },
    #[error("meet({a}, {b}) != meet({b}, {a})")]
    NotCommutative { a: usize, b: usize },
    #[error("meet not associative on ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
}

/// A finite meet-semilattice. `a >= b` iff `meet(a, b) == b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SemilatticeTable {
    table: OpTable,
}

pub fn validate_semilattice(rows: &[Vec<usize>]) -> Result<SemilatticeTable, SemilatticeError> {
    SemilatticeTable::from_table(OpTable::from_rows(rows)?)
}

impl SemilatticeTable {
    pub fn from_table(table: OpTable) -> Result<Self, SemilatticeError> {
        let n = table.order();
        if let Some(a) = (0..n).find(|&a| table.get(a, a) != a) {
            return Err(SemilatticeError::NotIdempotent { a });
        }
        for a in 0..n {
            for b in a + 1..n {
                if table.get(a, b) != table.get(b, a) {
                    return Err(SemilatticeError::NotCommutative { a, b });
                }
            }
        }
        if let Some((a, b, c)) = table.first_non_associative() {
            return Err(SemilatticeError::NotAssociative { a, b, c });
        }
        Ok(SemilatticeTable { table })
    }

    /// Chain `0 > 1 > ... > size-1`.
    pub fn chain(size: usize) -> Self {
        Self::from_table(OpTable::from_fn(size, usize::max)).expect("a chain is a semilattice")
    }

    pub fn size(&self) -> usize {
        self.table.order()
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.table.get(a, b)
    }

    #[inline]
    pub fn geq(&self, a: usize, b: usize) -> bool {
        self.meet(a, b) == b
    }

    pub fn table(&self) -> &OpTable {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.rows()
    }

    /// All pairs `(a, b)` with `a > b`, in lexicographic order.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && self.geq(a, b))
            .collect()
    }

    /// Bijections `eta` with `eta(meet(a, b)) = meet(eta(a), eta(b))` onto
    /// `other`, in lexicographic order.
    pub fn isomorphisms_to(&self, other: &SemilatticeTable) -> Vec<Vec<usize>> {
        let n = self.size();
        if other.size() != n {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut eta = Vec::with_capacity(n);
        let mut used = vec![false; n];
        self.extend_iso(other, &mut eta, &mut used, &mut out);
        out
    }

    fn extend_iso(
        &self,
        other: &Self,
        eta: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let a = eta.len();
        if a == self.size() {
            out.push(eta.clone());
            return;
        }
        for image in 0..self.size() {
            if used[image] {
                continue;
            }
            eta.push(image);
            // Every pair involving `a` whose meet is already placed must agree;
            // pairs whose meet is placed later are checked when it is.
            let consistent = (0..=a).all(|b| {
                (0..=a).all(|c| {
                    let m = self.meet(b, c);
                    (b != a && c != a && m != a) || m > a || other.meet(eta[b], eta[c]) == eta[m]
                })
            });
            if consistent {
                used[image] = true;
                self.extend_iso(other, eta, used, out);
                used[image] = false;
            }
            eta.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_chain() {
        let one = validate_semilattice(&[vec![0]]).unwrap();
        assert_eq!(one.size(), 1);
        let chain = validate_semilattice(&[vec![0, 1], vec![1, 1]]).unwrap();
        assert!(chain.geq(0, 1));
        assert!(!chain.geq(1, 0));
        assert_eq!(chain.strict_pairs(), vec![(0, 1)]);
        assert_eq!(chain, SemilatticeTable::chain(2));
    }

    #[test]
    fn left_projection_is_not_commutative() {
        assert_eq!(
            validate_semilattice(&[vec![0, 0], vec![1, 1]]),
            Err(SemilatticeError::NotCommutative { a: 0, b: 1 })
        );
    }

    #[test]
    fn rejects_non_idempotent() {
        assert_eq!(
            validate_semilattice(&[vec![1, 1], vec![1, 1]]),
            Err(SemilatticeError::NotIdempotent { a: 0 })
        );
    }

    #[test]
    fn induced_order_is_partial_order() {
        // V shape: 0 and 1 incomparable, both above 2.
        let v = validate_semilattice(&[vec![0, 2, 2], vec![2, 1, 2], vec![2, 2, 2]]).unwrap();
        let n = v.size();
        for a in 0..n {
            assert!(v.geq(a, a));
            for b in 0..n {
                if a != b && v.geq(a, b) {
                    assert!(!v.geq(b, a));
                }
                for c in 0..n {
                    if v.geq(a, b) && v.geq(b, c) {
                        assert!(v.geq(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn semilattice_isomorphisms() {
        let v = validate_semilattice(&[vec![0, 2, 2], vec![2, 1, 2], vec![2, 2, 2]]).unwrap();
        assert_eq!(v.isomorphisms_to(&v), vec![vec![0, 1, 2], vec![1, 0, 2]]);
        assert!(v.isomorphisms_to(&SemilatticeTable::chain(3)).is_empty());
        let c = SemilatticeTable::chain(3);
        assert_eq!(c.isomorphisms_to(&c), vec![vec![0, 1, 2]]);
    }
}
