//! Strong semilattices of skew braces.
//!
//! A spec gives a meet-semilattice `Y`, one skew brace `B_α` per `α ∈ Y` and
//! a homomorphism `φ_{α,β}: B_α → B_β` for every `α > β`. Composing pushes
//! both operands into `B_{αβ}`:
//!
//! ```text
//! a + b = φ_{α,αβ}(a) + φ_{β,αβ}(b)        a ∘ b = φ_{α,αβ}(a) ∘ φ_{β,αβ}(b)
//! ```
//!
//! Elements of the composed structure are ordered by component, then by
//! local index, so `compose(decompose(s)) == s` holds literally whenever `s`
//! is already in that order.

mod iso;

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{HomSearch, OpTable, SemilatticeTable};
use crate::brace::{validate_skew_brace, DualWeakBrace, Side, SkewBrace};

pub use iso::{are_isomorphic, IsomorphismWitness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("semilattice has {expected} elements but {found} braces were given")]
    BraceCountMismatch { expected: usize, found: usize },
    #[error("missing hom {alpha}>{beta}")]
    MissingHom { alpha: usize, beta: usize },
    #[error("hom {alpha}>{beta} given but {alpha} > {beta} does not hold")]
    UnexpectedHom { alpha: usize, beta: usize },
    #[error("hom {alpha}>{beta} must map {domain} elements into 0..{codomain}")]
    HomShape {
        alpha: usize,
        beta: usize,
        domain: usize,
        codomain: usize,
    },
    #[error("hom {alpha}>{beta} does not preserve {side} on ({x}, {y})")]
    NotAHom {
        alpha: usize,
        beta: usize,
        side: Side,
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
pub enum ComposeError {
    #[error("internal invariant broken: {0}")]
    InternalInvariantBroken(String),
}

/// A validated strong semilattice of skew braces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongSemilatticeSpec {
    y: SemilatticeTable,
    braces: Vec<SkewBrace>,
    homs: BTreeMap<(usize, usize), Vec<usize>>,
}

pub fn validate_spec(
    y: SemilatticeTable,
    braces: Vec<SkewBrace>,
    homs: BTreeMap<(usize, usize), Vec<usize>>,
) -> Result<StrongSemilatticeSpec, SpecError> {
    StrongSemilatticeSpec::new(y, braces, homs)
}

impl StrongSemilatticeSpec {
    pub fn new(
        y: SemilatticeTable,
        braces: Vec<SkewBrace>,
        homs: BTreeMap<(usize, usize), Vec<usize>>,
    ) -> Result<Self, SpecError> {
        if braces.len() != y.size() {
            return Err(SpecError::BraceCountMismatch {
                expected: y.size(),
                found: braces.len(),
            });
        }
        let pairs = y.strict_pairs();
        if let Some(&(alpha, beta)) = homs.keys().find(|k| !pairs.contains(k)) {
            return Err(SpecError::UnexpectedHom { alpha, beta });
        }
        for &(alpha, beta) in &pairs {
            let Some(map) = homs.get(&(alpha, beta)) else {
                return Err(SpecError::MissingHom { alpha, beta });
            };
            let (domain, codomain) = (braces[alpha].order(), braces[beta].order());
            if map.len() != domain || map.iter().any(|&v| v >= codomain) {
                return Err(SpecError::HomShape {
                    alpha,
                    beta,
                    domain,
                    codomain,
                });
            }
            let (src, dst) = (&braces[alpha], &braces[beta]);
            for (side, dom, cod) in [
                (Side::Add, src.add_group().table(), dst.add_group().table()),
                (Side::Mul, src.mul_group().table(), dst.mul_group().table()),
            ] {
                if let Some((x, y)) = dom.first_hom_violation(cod, map) {
                    return Err(SpecError::NotAHom {
                        alpha,
                        beta,
                        side,
                        x,
                        y,
                    });
                }
            }
        }
        let spec = StrongSemilatticeSpec { y, braces, homs };
        for &(alpha, beta) in &pairs {
            for &(b2, gamma) in &pairs {
                if b2 != beta {
                    continue;
                }
                if let Some(element) = (0..spec.braces[alpha].order()).find(|&x| {
                    spec.phi(beta, gamma, spec.phi(alpha, beta, x)) != spec.phi(alpha, gamma, x)
                }) {
                    return Err(SpecError::CompositionViolation {
                        alpha,
                        beta,
                        gamma,
                        element,
                    });
                }
            }
        }
        Ok(spec)
    }

    /// A single skew brace over the one-point semilattice.
    pub fn singleton(brace: SkewBrace) -> Self {
        Self::new(SemilatticeTable::chain(1), vec![brace], BTreeMap::new()).expect("singleton spec")
    }

    pub fn semilattice(&self) -> &SemilatticeTable {
        &self.y
    }

    pub fn braces(&self) -> &[SkewBrace] {
        &self.braces
    }

    pub fn brace(&self, alpha: usize) -> &SkewBrace {
        &self.braces[alpha]
    }

    pub fn homs(&self) -> &BTreeMap<(usize, usize), Vec<usize>> {
        &self.homs
    }

    /// `φ_{α,β}(x)` for `α ≥ β`; identity when `α == β`.
    pub fn phi(&self, alpha: usize, beta: usize, x: usize) -> usize {
        if alpha == beta {
            x
        } else {
            self.homs[&(alpha, beta)][x]
        }
    }

    /// Offset of component `α` in the composed element order.
    pub fn offset(&self, alpha: usize) -> usize {
        self.braces[..alpha].iter().map(SkewBrace::order).sum()
    }

    pub fn order(&self) -> usize {
        self.braces.iter().map(SkewBrace::order).sum()
    }

    /// `(α, local)` for a global index of the composed structure.
    pub fn locate(&self, mut global: usize) -> (usize, usize) {
        for (alpha, b) in self.braces.iter().enumerate() {
            if global < b.order() {
                return (alpha, global);
            }
            global -= b.order();
        }
        panic!("index out of range");
    }
}

/// Glues the components of `spec` into one dual weak brace.
pub fn compose(spec: &StrongSemilatticeSpec) -> Result<DualWeakBrace, ComposeError> {
    let n = spec.order();
    let offsets: Vec<usize> = (0..spec.y.size()).map(|a| spec.offset(a)).collect();
    let located: Vec<(usize, usize)> = (0..n).map(|g| spec.locate(g)).collect();
    let glue = |op: fn(&SkewBrace, usize, usize) -> usize| {
        OpTable::from_fn(n, |a, b| {
            let ((alpha, i), (beta, j)) = (located[a], located[b]);
            let gamma = spec.y.meet(alpha, beta);
            let local = op(
                &spec.braces[gamma],
                spec.phi(alpha, gamma, i),
                spec.phi(beta, gamma, j),
            );
            offsets[gamma] + local
        })
    };
    let s = DualWeakBrace::from_tables(glue(SkewBrace::add), glue(SkewBrace::mul))
        .map_err(|e| ComposeError::InternalInvariantBroken(format!("composed tables: {e}")))?;
    let expected: Vec<usize> = spec
        .braces
        .iter()
        .zip(&offsets)
        .map(|(b, o)| o + b.identity())
        .collect();
    if s.idempotent_list() != expected {
        return Err(ComposeError::InternalInvariantBroken(
            "idempotents are not the component identities".into(),
        ));
    }
    for alpha in 0..expected.len() {
        for beta in 0..expected.len() {
            if s.add(expected[alpha], expected[beta]) != expected[spec.y.meet(alpha, beta)] {
                return Err(ComposeError::InternalInvariantBroken(format!(
                    "idempotent meet differs from Y at ({alpha}, {beta})"
                )));
            }
        }
    }
    Ok(s)
}

/// A dual weak brace split into its strong-semilattice parts, together with
/// the correspondence between its elements and `(α, local)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub spec: StrongSemilatticeSpec,
    members: Vec<Vec<usize>>,
    local: Vec<usize>,
    component: Vec<usize>,
}

impl Decomposition {
    /// Elements of `B_α` in increasing order; position = local index.
    pub fn members(&self, alpha: usize) -> &[usize] {
        &self.members[alpha]
    }

    pub fn locate(&self, element: usize) -> (usize, usize) {
        (self.component[element], self.local[element])
    }

    pub fn global(&self, alpha: usize, local: usize) -> usize {
        self.members[alpha][local]
    }

    /// True when elements are already grouped by component, so composing
    /// the spec reproduces the original labels.
    pub fn is_canonical(&self) -> bool {
        self.members
            .iter()
            .flatten()
            .enumerate()
            .all(|(i, &g)| i == g)
    }
}

pub fn decompose(s: &DualWeakBrace) -> Result<Decomposition, ComposeError> {
    let broken = ComposeError::InternalInvariantBroken;
    let n = s.order();
    let es = s.idempotent_list();
    let k = es.len();
    let meet: Vec<Vec<usize>> = (0..k)
        .map(|a| {
            (0..k)
                .map(|b| s.component_of(s.add(es[a], es[b])))
                .collect()
        })
        .collect();
    let y = crate::algebra::validate_semilattice(&meet)
        .map_err(|e| broken(format!("idempotents: {e}")))?;
    let mut members = vec![Vec::new(); k];
    let mut local = vec![0; n];
    let component: Vec<usize> = (0..n).map(|a| s.component_of(a)).collect();
    for a in 0..n {
        local[a] = members[component[a]].len();
        members[component[a]].push(a);
    }
    let mut braces = Vec::with_capacity(k);
    for (alpha, m) in members.iter().enumerate() {
        let restrict =
            |op: &dyn Fn(usize, usize) -> usize| -> Result<Vec<Vec<usize>>, ComposeError> {
                m.iter()
                    .map(|&a| {
                        m.iter()
                            .map(|&b| {
                                let c = op(a, b);
                                if component[c] == alpha {
                                    Ok(local[c])
                                } else {
                                    Err(broken(format!(
                                        "component {alpha} not closed at ({a}, {b})"
                                    )))
                                }
                            })
                            .collect()
                    })
                    .collect()
            };
        let add = restrict(&|a, b| s.add(a, b))?;
        let mul = restrict(&|a, b| s.mul(a, b))?;
        braces.push(
            validate_skew_brace(&add, &mul)
                .map_err(|e| broken(format!("component {alpha}: {e}")))?,
        );
    }
    let mut homs = BTreeMap::new();
    for (alpha, beta) in y.strict_pairs() {
        let e = es[beta];
        let mut map = Vec::with_capacity(members[alpha].len());
        for &a in &members[alpha] {
            let img = s.add(a, e);
            if img != s.mul(a, e) || component[img] != beta {
                return Err(broken(format!("a + e != a ∘ e for a = {a}, e = {e}")));
            }
            map.push(local[img]);
        }
        homs.insert((alpha, beta), map);
    }
    let spec = StrongSemilatticeSpec::new(y, braces, homs)
        .map_err(|e| broken(format!("decomposed spec: {e}")))?;
    Ok(Decomposition {
        spec,
        members,
        local,
        component,
    })
}

/// All maps `a → b` preserving both operations, sorted.
pub fn enumerate_skew_brace_homs(a: &SkewBrace, b: &SkewBrace) -> Vec<Vec<usize>> {
    HomSearch::new(a.mul_group(), b.mul_group())
        .also_preserving(a.add_group().table(), b.add_group().table())
        .run()
}

/// A random spec over a chain of length 1 to 3 or the three-element
/// semilattice with two maximal elements, drawing components from `pool`.
/// Homomorphisms are sampled from the full hom sets, so composition holds
/// by construction along chains.
pub fn random_spec(pool: &[SkewBrace], seed: u64) -> StrongSemilatticeSpec {
    assert!(!pool.is_empty());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shape = rng.gen_range(0..4);
    let y = if shape < 3 {
        SemilatticeTable::chain(shape + 1)
    } else {
        crate::algebra::validate_semilattice(&[vec![0, 2, 2], vec![2, 1, 2], vec![2, 2, 2]])
            .expect("vee")
    };
    let braces: Vec<SkewBrace> = (0..y.size())
        .map(|_| pool.choose(&mut rng).expect("pool").clone())
        .collect();
    let mut pick = |a: usize, b: usize| {
        let all = enumerate_skew_brace_homs(&braces[a], &braces[b]);
        all.choose(&mut rng)
            .expect("trivial hom always exists")
            .clone()
    };
    let mut homs = BTreeMap::new();
    if shape < 3 {
        for a in 0..shape {
            homs.insert((a, a + 1), pick(a, a + 1));
        }
        for gap in 2..=shape {
            for a in 0..=shape - gap {
                let first = &homs[&(a, a + gap - 1)];
                let last = &homs[&(a + gap - 1, a + gap)];
                let composed: Vec<usize> = first.iter().map(|&x| last[x]).collect();
                homs.insert((a, a + gap), composed);
            }
        }
    } else {
        homs.insert((0, 2), pick(0, 2));
        homs.insert((1, 2), pick(1, 2));
    }
    StrongSemilatticeSpec::new(y, braces, homs).expect("random spec is valid by construction")
}
