//! Set-theoretic solutions of the Yang–Baxter equation as finite tables.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::algebra::SemilatticeTable;
use crate::brace::DualWeakBrace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolutionError {
    #[error("solution table is empty")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("r({a}, {b}) leaves 0..{order}")]
    OutOfRange { a: usize, b: usize, order: usize },
    #[error("semilattice has {expected} elements but {found} solutions were given")]
    ComponentCountMismatch { expected: usize, found: usize },
    #[error("missing map {alpha}>{beta}")]
    MissingMap { alpha: usize, beta: usize },
    #[error("map {alpha}>{beta} has the wrong shape")]
    MapShape { alpha: usize, beta: usize },
    #[error("(phi x phi) r != r (phi x phi) for {alpha}>{beta} at ({x}, {y})")]
    EquivarianceViolation {
        alpha: usize,
        beta: usize,
        x: usize,
        y: usize,
    },
    #[error("phi_{beta},{gamma} phi_{alpha},{beta} != phi_{alpha},{gamma} at element {element}")]
    CompositionViolation {
        alpha: usize,
        beta: usize,
        gamma: usize,
        element: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PeriodError {
    #[error(
        "r does not recur: powers enter a cycle of length {cycle_len} at exponent {tail_start}"
    )]
    NoPeriod { tail_start: usize, cycle_len: usize },
}

/// A total map `r: X × X → X × X` on `X = {0, .., order-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SolutionTable {
    order: usize,
    map: Vec<(usize, usize)>,
}

impl SolutionTable {
    pub fn from_rows(rows: &[Vec<(usize, usize)>]) -> Result<Self, SolutionError> {
        let n = rows.len();
        if n == 0 {
            return Err(SolutionError::Empty);
        }
        let mut map = Vec::with_capacity(n * n);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(SolutionError::NotSquare {
                    row: a,
                    len: row.len(),
                    expected: n,
                });
            }
            for (b, &(u, v)) in row.iter().enumerate() {
                if u >= n || v >= n {
                    return Err(SolutionError::OutOfRange { a, b, order: n });
                }
                map.push((u, v));
            }
        }
        Ok(SolutionTable { order: n, map })
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> (usize, usize)) -> Self {
        let map: Vec<(usize, usize)> = (0..order * order)
            .map(|i| f(i / order, i % order))
            .collect();
        assert!(
            map.iter().all(|&(u, v)| u < order && v < order),
            "solution value out of range"
        );
        SolutionTable { order, map }
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |a, b| (a, b))
    }

    pub fn flip(order: usize) -> Self {
        Self::from_fn(order, |a, b| (b, a))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> (usize, usize) {
        self.map[a * self.order + b]
    }

    pub fn rows(&self) -> Vec<Vec<(usize, usize)>> {
        self.map.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SolutionTable) -> SolutionTable {
        assert_eq!(self.order, other.order);
        SolutionTable {
            order: self.order,
            map: other.map.iter().map(|&(u, v)| self.get(u, v)).collect(),
        }
    }

    /// `r^k` for `k ≥ 1`.
    pub fn pow(&self, k: usize) -> SolutionTable {
        assert!(k >= 1);
        (1..k).fold(self.clone(), |acc, _| self.compose(&acc))
    }

    pub fn image_size(&self) -> usize {
        let mut seen = vec![false; self.map.len()];
        for &(u, v) in &self.map {
            seen[u * self.order + v] = true;
        }
        seen.iter().filter(|&&s| s).count()
    }

    pub fn is_bijective(&self) -> bool {
        self.image_size() == self.map.len()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.order)
    }
}

/// `r(a, b) = (λ_a(b), ρ_b(a))`.
pub fn solution_of(s: &DualWeakBrace) -> SolutionTable {
    SolutionTable::from_fn(s.order(), |a, b| (s.lambda(a, b), s.rho(b, a)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidReport {
    pub checked: usize,
    pub witness: Option<(usize, usize, usize)>,
}

impl BraidReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// Checks `(r×id)(id×r)(r×id) = (id×r)(r×id)(id×r)` on every triple.
pub fn check_braid(r: &SolutionTable) -> BraidReport {
    let n = r.order();
    let r12 = |(x, y, z): (usize, usize, usize)| {
        let (u, v) = r.get(x, y);
        (u, v, z)
    };
    let r23 = |(x, y, z): (usize, usize, usize)| {
        let (u, v) = r.get(y, z);
        (x, u, v)
    };
    let mut checked = 0;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                checked += 1;
                let t = (a, b, c);
                if r12(r23(r12(t))) != r23(r12(r23(t))) {
                    return BraidReport {
                        checked,
                        witness: Some(t),
                    };
                }
            }
        }
    }
    BraidReport {
        checked,
        witness: None,
    }
}

/// Smallest `p ≥ 1` with `r^{p+1} = r`.
pub fn period(r: &SolutionTable) -> Result<usize, PeriodError> {
    let mut seen: HashMap<SolutionTable, usize> = HashMap::new();
    let mut power = r.clone();
    let mut k = 1;
    loop {
        if let Some(&j) = seen.get(&power) {
            return if j == 1 {
                Ok(k - 1)
            } else {
                Err(PeriodError::NoPeriod {
                    tail_start: j,
                    cycle_len: k - j,
                })
            };
        }
        seen.insert(power.clone(), k);
        power = r.compose(&power);
        k += 1;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakInverseReport {
    pub r_rop_r: bool,
    pub rop_r_rop: bool,
    pub commute: bool,
    /// `r r^op = id`, checked only for skew braces.
    pub inverse: Option<bool>,
    pub bijective: bool,
    pub image_size: usize,
}

impl WeakInverseReport {
    pub fn holds(&self) -> bool {
        self.r_rop_r && self.rop_r_rop && self.commute && self.inverse.unwrap_or(true)
    }
}

pub fn check_weak_inverses(s: &DualWeakBrace) -> WeakInverseReport {
    let r = solution_of(s);
    let rop = solution_of(
        &s.opposite()
            .expect("the opposite of a dual weak brace is a weak brace"),
    );
    let r_rop = r.compose(&rop);
    WeakInverseReport {
        r_rop_r: r_rop.compose(&r) == r,
        rop_r_rop: rop.compose(&r).compose(&rop) == rop,
        commute: r_rop == rop.compose(&r),
        inverse: s.is_skew_brace().then(|| r_rop.is_identity()),
        bijective: r.is_bijective(),
        image_size: r.image_size(),
    }
}

/// The six identities relating `λ_a, λ_{a⁻}` and `ρ_a, ρ_{a⁻}`, by name.
pub const REGULARITY_IDENTITIES: [&str; 6] = [
    "λa λa⁻ λa = λa",
    "λa⁻ λa λa⁻ = λa⁻",
    "λa λa⁻ = λa⁻ λa",
    "ρa ρa⁻ ρa = ρa",
    "ρa⁻ ρa ρa⁻ = ρa⁻",
    "ρa ρa⁻ = ρa⁻ ρa",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    /// `(a, identity index)` for every failure, in order.
    pub failures: Vec<(usize, usize)>,
    /// Elements `a` with `λ_a` bijective.
    pub lambda_bijective: Vec<usize>,
    /// Elements `b` with `ρ_b` bijective.
    pub rho_bijective: Vec<usize>,
}

impl RegularityReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn check_regularity(s: &DualWeakBrace) -> RegularityReport {
    let n = s.order();
    let lam: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| s.lambda(a, b)).collect())
        .collect();
    let rho: Vec<Vec<usize>> = (0..n)
        .map(|b| (0..n).map(|a| s.rho(b, a)).collect())
        .collect();
    let comp = |f: &[usize], g: &[usize]| -> Vec<usize> { g.iter().map(|&x| f[x]).collect() };
    let mut failures = Vec::new();
    for a in 0..n {
        let ai = s.minv(a);
        for (offset, maps) in [(0, &lam), (3, &rho)] {
            let (f, g) = (&maps[a], &maps[ai]);
            let fg = comp(f, g);
            let gf = comp(g, f);
            let checks = [comp(&fg, f) == *f, comp(&gf, g) == *g, fg == gf];
            for (i, ok) in checks.into_iter().enumerate() {
                if !ok {
                    failures.push((a, offset + i));
                }
            }
        }
    }
    let bijective = |m: &Vec<usize>| {
        let mut seen = vec![false; n];
        m.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
    };
    RegularityReport {
        failures,
        lambda_bijective: (0..n).filter(|&a| bijective(&lam[a])).collect(),
        rho_bijective: (0..n).filter(|&b| bijective(&rho[b])).collect(),
    }
}

/// Glues per-component solutions along a semilattice:
/// `r(x, y) = r_{αβ}(φ_{α,αβ}(x), φ_{β,αβ}(y))`. Components are laid out
/// consecutively in semilattice order.
pub fn strong_semilattice_of_solutions(
    y: &SemilatticeTable,
    solutions: &[SolutionTable],
    maps: &BTreeMap<(usize, usize), Vec<usize>>,
) -> Result<SolutionTable, SolutionError> {
    if solutions.len() != y.size() {
        return Err(SolutionError::ComponentCountMismatch {
            expected: y.size(),
            found: solutions.len(),
        });
    }
    let pairs = y.strict_pairs();
    for &(alpha, beta) in &pairs {
        let m = maps
            .get(&(alpha, beta))
            .ok_or(SolutionError::MissingMap { alpha, beta })?;
        if m.len() != solutions[alpha].order() || m.iter().any(|&v| v >= solutions[beta].order()) {
            return Err(SolutionError::MapShape { alpha, beta });
        }
    }
    if let Some(&(alpha, beta)) = maps.keys().find(|k| !pairs.contains(k)) {
        return Err(SolutionError::MapShape { alpha, beta });
    }
    let phi = |a: usize, b: usize, x: usize| if a == b { x } else { maps[&(a, b)][x] };
    for &(alpha, beta) in &pairs {
        for &(mid, gamma) in &pairs {
            if mid == beta {
                if let Some(element) = (0..solutions[alpha].order())
                    .find(|&x| phi(beta, gamma, phi(alpha, beta, x)) != phi(alpha, gamma, x))
                {
                    return Err(SolutionError::CompositionViolation {
                        alpha,
                        beta,
                        gamma,
                        element,
                    });
                }
            }
        }
        let (ra, rb) = (&solutions[alpha], &solutions[beta]);
        for x in 0..ra.order() {
            for z in 0..ra.order() {
                let (u, v) = ra.get(x, z);
                if (phi(alpha, beta, u), phi(alpha, beta, v))
                    != rb.get(phi(alpha, beta, x), phi(alpha, beta, z))
                {
                    return Err(SolutionError::EquivarianceViolation {
                        alpha,
                        beta,
                        x,
                        y: z,
                    });
                }
            }
        }
    }
    let offsets: Vec<usize> = solutions
        .iter()
        .scan(0, |acc, r| Some(std::mem::replace(acc, *acc + r.order())))
        .collect();
    let located: Vec<(usize, usize)> = solutions
        .iter()
        .enumerate()
        .flat_map(|(alpha, r)| (0..r.order()).map(move |i| (alpha, i)))
        .collect();
    Ok(SolutionTable::from_fn(located.len(), |a, b| {
        let ((alpha, i), (beta, j)) = (located[a], located[b]);
        let gamma = y.meet(alpha, beta);
        let (u, v) = solutions[gamma].get(phi(alpha, gamma, i), phi(beta, gamma, j));
        (offsets[gamma] + u, offsets[gamma] + v)
    }))
}
