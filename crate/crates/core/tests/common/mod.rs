//! Brute-force oracles written directly from the definitions, sharing no
//! search code with the library.

#![allow(dead_code)]

use wbk_core::{DualWeakBrace, ElementSet};

/// Every map `0..dom → 0..cod`, in lexicographic order.
pub fn all_maps(dom: usize, cod: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = (cod as u64).pow(dom as u32);
    (0..total).map(move |mut code| {
        let mut f = vec![0; dom];
        for slot in f.iter_mut().rev() {
            *slot = (code % cod as u64) as usize;
            code /= cod as u64;
        }
        f
    })
}

/// `f(x ∗ y) = f(x) ∗' f(y)` for all `x, y`.
pub fn preserves(dom: &[Vec<usize>], cod: &[Vec<usize>], f: &[usize]) -> bool {
    (0..dom.len()).all(|x| (0..dom.len()).all(|y| f[dom[x][y]] == cod[f[x]][f[y]]))
}

pub fn add_rows(s: &DualWeakBrace) -> Vec<Vec<usize>> {
    let n = s.order();
    (0..n)
        .map(|a| (0..n).map(|b| s.add(a, b)).collect())
        .collect()
}

pub fn mul_rows(s: &DualWeakBrace) -> Vec<Vec<usize>> {
    let n = s.order();
    (0..n)
        .map(|a| (0..n).map(|b| s.mul(a, b)).collect())
        .collect()
}

/// The unique `y` with `x y x = x`, `y x y = y` and `x y = y x`.
pub fn clifford_inverse(t: &[Vec<usize>], x: usize) -> usize {
    (0..t.len())
        .find(|&y| t[t[x][y]][x] == x && t[t[y][x]][y] == y && t[x][y] == t[y][x])
        .expect("Clifford inverse exists")
}

pub fn idempotents(t: &[Vec<usize>]) -> Vec<usize> {
    (0..t.len()).filter(|&e| t[e][e] == e).collect()
}

pub struct Naive {
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub neg: Vec<usize>,
    pub minv: Vec<usize>,
    pub e: Vec<usize>,
}

impl Naive {
    pub fn new(s: &DualWeakBrace) -> Self {
        let add = add_rows(s);
        let mul = mul_rows(s);
        let n = add.len();
        let neg = (0..n).map(|x| clifford_inverse(&add, x)).collect();
        let minv = (0..n).map(|x| clifford_inverse(&mul, x)).collect();
        let e = idempotents(&add);
        Naive {
            add,
            mul,
            neg,
            minv,
            e,
        }
    }

    pub fn n(&self) -> usize {
        self.add.len()
    }

    pub fn lambda(&self, a: usize, b: usize) -> usize {
        self.add[self.neg[a]][self.mul[a][b]]
    }

    pub fn dot(&self, a: usize, b: usize) -> usize {
        self.add[self.add[self.neg[a]][self.mul[a][b]]][self.neg[b]]
    }

    /// Full, closed under `+` and `−`, and normal in `(S, +)`.
    pub fn normal_additive(&self, x: &[bool]) -> bool {
        let n = self.n();
        let members: Vec<usize> = (0..n).filter(|&a| x[a]).collect();
        self.e.iter().all(|&e| x[e])
            && members
                .iter()
                .all(|&a| x[self.neg[a]] && members.iter().all(|&b| x[self.add[a][b]]))
            && (0..n).all(|s| {
                members
                    .iter()
                    .all(|&a| x[self.add[self.add[self.neg[s]][a]][s]])
            })
    }

    /// The definition: normal in `(S, +)`, `λ`-invariant, normal in `(S, ∘)`.
    pub fn is_ideal(&self, x: &[bool]) -> bool {
        let n = self.n();
        let members: Vec<usize> = (0..n).filter(|&a| x[a]).collect();
        self.normal_additive(x)
            && (0..n).all(|s| members.iter().all(|&a| x[self.lambda(s, a)]))
            && members
                .iter()
                .all(|&a| x[self.minv[a]] && members.iter().all(|&b| x[self.mul[a][b]]))
            && (0..n).all(|s| {
                members
                    .iter()
                    .all(|&a| x[self.mul[self.mul[self.minv[s]][a]][s]])
            })
    }

    /// Normal in `(S, +)` with `S · I ⊆ I` and `I · S ⊆ I`.
    pub fn is_ideal_by_products(&self, x: &[bool]) -> bool {
        let n = self.n();
        self.normal_additive(x)
            && (0..n).all(|s| {
                (0..n)
                    .filter(|&a| x[a])
                    .all(|a| x[self.dot(s, a)] && x[self.dot(a, s)])
            })
    }

    pub fn socle(&self) -> Vec<usize> {
        let n = self.n();
        (0..n)
            .filter(|&a| {
                (0..n).all(|b| self.add[a][b] == self.mul[a][b] && self.add[a][b] == self.add[b][a])
            })
            .collect()
    }

    pub fn annihilator(&self) -> Vec<usize> {
        let n = self.n();
        self.socle()
            .into_iter()
            .filter(|&a| (0..n).all(|b| self.mul[a][b] == self.mul[b][a]))
            .collect()
    }

    /// All ideals, by testing every subset.
    pub fn all_ideals(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut out = Vec::new();
        for mask in 0u64..1 << n {
            let x: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
            if self.is_ideal(&x) {
                out.push((0..n).filter(|&i| x[i]).collect());
            }
        }
        out.sort_by_key(|v: &Vec<usize>| (v.len(), v.clone()));
        out
    }
}

pub fn mask(n: usize, set: &ElementSet) -> Vec<bool> {
    (0..n).map(|i| set.contains(i)).collect()
}
