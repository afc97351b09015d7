use thiserror::Error;

/// Shape errors shared by every table validator.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("table is empty")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry ({a}, {b}) = {value} is outside 0..{order}")]
    NotClosed {
        a: usize,
        b: usize,
        value: usize,
        order: usize,
    },
}

/// A square binary operation table on `0..order`, stored row-major.
///
/// Construction only checks shape and closure; the algebraic validators in
/// this module layer their axioms on top.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OpTable {
    order: usize,
    cells: Vec<usize>,
}

impl OpTable {
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, TableError> {
        let order = rows.len();
        if order == 0 {
            return Err(TableError::Empty);
        }
        let mut cells = Vec::with_capacity(order * order);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(TableError::NotSquare {
                    row: a,
                    len: row.len(),
                    expected: order,
                });
            }
            for (b, &value) in row.iter().enumerate() {
                if value >= order {
                    return Err(TableError::NotClosed { a, b, value, order });
                }
                cells.push(value);
            }
        }
        Ok(OpTable { order, cells })
    }

    /// Tabulates `f` over all ordered pairs. Panics if `f` leaves the range.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        assert!(order > 0, "table order must be positive");
        let mut cells = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let v = f(a, b);
                assert!(v < order, "tabulated value {v} outside 0..{order}");
                cells.push(v);
            }
        }
        OpTable { order, cells }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.order + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells
            .chunks(self.order)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn transpose(&self) -> OpTable {
        OpTable::from_fn(self.order, |a, b| self.get(b, a))
    }

    /// Lexicographically smallest triple violating associativity.
    pub fn first_non_associative(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.get(a, b);
                for c in 0..n {
                    if self.get(ab, c) != self.get(a, self.get(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Lexicographically smallest pair on which `map` fails to be a
    /// homomorphism from `self` to `codomain`.
    pub fn first_hom_violation(&self, codomain: &OpTable, map: &[usize]) -> Option<(usize, usize)> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                if map[self.get(a, b)] != codomain.get(map[a], map[b]) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Relabels the table: element `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> OpTable {
        let mut inverse = vec![0; self.order];
        for (x, &y) in perm.iter().enumerate() {
            inverse[y] = x;
        }
        OpTable::from_fn(self.order, |a, b| perm[self.get(inverse[a], inverse[b])])
    }
}
