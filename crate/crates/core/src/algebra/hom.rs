//! Backtracking enumeration of group homomorphisms.
//!
//! Images are chosen for a generating set of the domain, one generator at a
//! time. After each choice the partial map is pushed through the Cayley graph
//! of the generators found so far; a clash prunes the branch. Additional
//! operations that the map must also preserve (the additive table of a skew
//! brace, say) are checked on every pair the partial map already covers.

use super::group::FiniteGroupTable;
use super::table::OpTable;

const UNSET: usize = usize::MAX;

/// A homomorphism search from `domain` to `codomain`, optionally constrained
/// to preserve further binary operations on the same element sets.
pub struct HomSearch<'a> {
    domain: &'a FiniteGroupTable,
    codomain: &'a FiniteGroupTable,
    also_preserve: Vec<(&'a OpTable, &'a OpTable)>,
    gens: Vec<usize>,
}

impl<'a> HomSearch<'a> {
    pub fn new(domain: &'a FiniteGroupTable, codomain: &'a FiniteGroupTable) -> Self {
        HomSearch {
            domain,
            codomain,
            also_preserve: Vec::new(),
            gens: domain.generating_set(),
        }
    }

    /// Requires the map to be a homomorphism `dom_op -> cod_op` as well.
    pub fn also_preserving(mut self, dom_op: &'a OpTable, cod_op: &'a OpTable) -> Self {
        assert_eq!(dom_op.order(), self.domain.order());
        assert_eq!(cod_op.order(), self.codomain.order());
        self.also_preserve.push((dom_op, cod_op));
        self
    }

    /// All maps satisfying every constraint, sorted lexicographically.
    pub fn run(&self) -> Vec<Vec<usize>> {
        let mut map = vec![UNSET; self.domain.order()];
        map[self.domain.identity()] = self.codomain.identity();
        let mut out = Vec::new();
        self.search(0, map, &mut out);
        out.sort();
        out
    }

    fn search(&self, depth: usize, map: Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if depth == self.gens.len() {
            debug_assert!(map.iter().all(|&v| v != UNSET));
            if self.verify(&map) {
                out.push(map);
            }
            return;
        }
        let g = self.gens[depth];
        let g_order = self.domain.element_order(g);
        for image in 0..self.codomain.order() {
            if !g_order.is_multiple_of(self.codomain.element_order(image)) {
                continue;
            }
            let mut next = map.clone();
            next[g] = image;
            if self.extend(&mut next, depth + 1) && self.partial_ok(&next) {
                self.search(depth + 1, next, out);
            }
        }
    }

    /// Closes the partial map under right multiplication by the first
    /// `assigned` generators. Returns `false` on a clash.
    fn extend(&self, map: &mut [usize], assigned: usize) -> bool {
        let gens = &self.gens[..assigned];
        let mut frontier: Vec<usize> = (0..map.len()).filter(|&x| map[x] != UNSET).collect();
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.domain.op(x, g);
                let fy = self.codomain.op(map[x], map[g]);
                if map[y] == UNSET {
                    map[y] = fy;
                    frontier.push(y);
                } else if map[y] != fy {
                    return false;
                }
            }
        }
        true
    }

    fn partial_ok(&self, map: &[usize]) -> bool {
        self.also_preserve.iter().all(|(dom, cod)| {
            let n = dom.order();
            (0..n).filter(|&a| map[a] != UNSET).all(|a| {
                (0..n).filter(|&b| map[b] != UNSET).all(|b| {
                    let ab = dom.get(a, b);
                    map[ab] == UNSET || map[ab] == cod.get(map[a], map[b])
                })
            })
        })
    }

    fn verify(&self, map: &[usize]) -> bool {
        self.domain
            .table()
            .first_hom_violation(self.codomain.table(), map)
            .is_none()
            && self
                .also_preserve
                .iter()
                .all(|(dom, cod)| dom.first_hom_violation(cod, map).is_none())
    }
}

/// All group homomorphisms `a -> b`, each verified on every pair.
pub fn enumerate_group_homs(a: &FiniteGroupTable, b: &FiniteGroupTable) -> Vec<Vec<usize>> {
    HomSearch::new(a, b).run()
}
