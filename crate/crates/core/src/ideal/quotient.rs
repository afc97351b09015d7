use super::subset::{is_ideal, SubsetViolation};
use super::IdealError;
use crate::algebra::OpTable;
use crate::brace::{DualWeakBrace, Side};
use crate::set::ElementSet;

/// `S / I` under `a ~ b ⟺ a⁰ = b⁰ and −a + b ∈ I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientStructure {
    pub quotient: DualWeakBrace,
    /// Class of each ambient element.
    pub projection: Vec<usize>,
    /// Least ambient element of each class.
    pub class_rep: Vec<usize>,
}

impl QuotientStructure {
    /// Ambient elements whose class lies in `classes`.
    pub fn pullback(&self, classes: &ElementSet) -> ElementSet {
        ElementSet::from_indices(
            self.projection.len(),
            (0..self.projection.len()).filter(|&a| classes.contains(self.projection[a])),
        )
    }

    /// Image of an ambient subset.
    pub fn image(&self, x: &ElementSet) -> ElementSet {
        ElementSet::from_indices(self.class_rep.len(), x.iter().map(|a| self.projection[a]))
    }
}

pub fn quotient(s: &DualWeakBrace, i: &ElementSet) -> Result<QuotientStructure, IdealError> {
    is_ideal(s, i).map_err(IdealError::NotAnIdeal)?;
    let n = s.order();
    let mut projection = vec![usize::MAX; n];
    let mut class_rep = Vec::new();
    for a in 0..n {
        if projection[a] != usize::MAX {
            continue;
        }
        let class = class_rep.len();
        class_rep.push(a);
        for (b, slot) in projection.iter_mut().enumerate().skip(a) {
            if s.zero_part(a) == s.zero_part(b) && i.contains(s.add(s.neg(a), b)) {
                *slot = class;
            }
        }
    }
    let k = class_rep.len();
    for side in [Side::Add, Side::Mul] {
        let t = s.table(side);
        for a in 0..n {
            for b in 0..n {
                if projection[t.op(a, b)]
                    != projection[t.op(class_rep[projection[a]], class_rep[projection[b]])]
                {
                    return Err(IdealError::InternalInvariantBroken(format!(
                        "~ is not compatible with {side} at ({a}, {b})"
                    )));
                }
            }
        }
    }
    let induced = |side: Side| {
        let t = s.table(side);
        OpTable::from_fn(k, |c, d| projection[t.op(class_rep[c], class_rep[d])])
    };
    let quotient = DualWeakBrace::from_tables(induced(Side::Add), induced(Side::Mul))
        .map_err(|e| IdealError::InternalInvariantBroken(format!("quotient tables: {e}")))?;
    if quotient.component_count() != s.component_count() {
        return Err(IdealError::InternalInvariantBroken(
            "quotient merged idempotents".into(),
        ));
    }
    Ok(QuotientStructure {
        quotient,
        projection,
        class_rep,
    })
}

/// Checks that `f: s → t` preserves both operations.
pub fn check_hom(s: &DualWeakBrace, t: &DualWeakBrace, f: &[usize]) -> Result<(), IdealError> {
    if f.len() != s.order() || f.iter().any(|&v| v >= t.order()) {
        return Err(IdealError::MapShape {
            len: f.len(),
            order: s.order(),
        });
    }
    for side in [Side::Add, Side::Mul] {
        if let Some((a, b)) = s
            .table(side)
            .table()
            .first_hom_violation(t.table(side).table(), f)
        {
            return Err(IdealError::NotAHom { side, a, b });
        }
    }
    Ok(())
}

/// `ker f = {a : f(a) = f(e) for some e ∈ E(S)}`.
pub fn kernel(s: &DualWeakBrace, t: &DualWeakBrace, f: &[usize]) -> Result<ElementSet, IdealError> {
    check_hom(s, t, f)?;
    let idempotent_images =
        ElementSet::from_indices(t.order(), s.idempotents().iter().map(|e| f[e]));
    Ok(ElementSet::from_indices(
        s.order(),
        (0..s.order()).filter(|&a| idempotent_images.contains(f[a])),
    ))
}

pub fn image(s: &DualWeakBrace, t: &DualWeakBrace, f: &[usize]) -> Result<ElementSet, IdealError> {
    check_hom(s, t, f)?;
    Ok(ElementSet::from_indices(t.order(), f.iter().copied()))
}

/// Closed under both operations and both inverses, and containing the zero
/// part of each member. With `strict`, all of `E(S)` is required as well.
pub fn is_sub_brace(
    s: &DualWeakBrace,
    h: &ElementSet,
    strict: bool,
) -> Result<(), SubsetViolation> {
    if h.is_empty() {
        return Err(SubsetViolation::Empty);
    }
    if strict {
        if let Some(e) = s.idempotents().iter().find(|&e| !h.contains(e)) {
            return Err(SubsetViolation::MissingIdempotent { e });
        }
    }
    if let Some(a) = h.iter().find(|&a| !h.contains(s.zero_part(a))) {
        return Err(SubsetViolation::MissingZeroPart { a });
    }
    for side in [Side::Add, Side::Mul] {
        let t = s.table(side);
        for a in h.iter() {
            if let Some(b) = h.iter().find(|&b| !h.contains(t.op(a, b))) {
                return Err(SubsetViolation::NotClosed { side, a, b });
            }
            if !h.contains(t.inv(a)) {
                return Err(SubsetViolation::NotInverseClosed { side, a });
            }
        }
    }
    Ok(())
}

/// The sub-brace on `h`, relabelled `0..|h|` in increasing order, with the
/// ambient index of each new label.
pub fn substructure(
    s: &DualWeakBrace,
    h: &ElementSet,
) -> Result<(DualWeakBrace, Vec<usize>), IdealError> {
    is_sub_brace(s, h, false).map_err(IdealError::NotASubBrace)?;
    let members = h.to_vec();
    let mut local = vec![usize::MAX; s.order()];
    for (i, &a) in members.iter().enumerate() {
        local[a] = i;
    }
    let restrict = |side: Side| {
        let t = s.table(side);
        OpTable::from_fn(members.len(), |i, j| local[t.op(members[i], members[j])])
    };
    let sub = DualWeakBrace::from_tables(restrict(Side::Add), restrict(Side::Mul))
        .map_err(|e| IdealError::InternalInvariantBroken(format!("sub-brace tables: {e}")))?;
    Ok((sub, members))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstIsomorphismReport {
    pub kernel: ElementSet,
    pub image: ElementSet,
    pub quotient_order: usize,
    /// `f` is constant on the classes of `S / ker f`.
    pub well_defined: bool,
    pub injective: bool,
    pub image_matches: bool,
    pub induced_is_hom: bool,
}

impl FirstIsomorphismReport {
    pub fn passed(&self) -> bool {
        self.well_defined && self.injective && self.image_matches && self.induced_is_hom
    }
}

/// Builds `S / ker f` and the induced map into `t`, and checks it is a
/// monomorphism with the same image as `f`.
pub fn first_isomorphism_check(
    s: &DualWeakBrace,
    t: &DualWeakBrace,
    f: &[usize],
) -> Result<FirstIsomorphismReport, IdealError> {
    let ker = kernel(s, t, f)?;
    let img = image(s, t, f)?;
    let q = quotient(s, &ker)?;
    let induced: Vec<usize> = q.class_rep.iter().map(|&r| f[r]).collect();
    let well_defined = (0..s.order()).all(|a| f[a] == induced[q.projection[a]]);
    let mut seen = ElementSet::empty(t.order());
    let injective = induced.iter().all(|&v| seen.insert(v));
    let induced_image = ElementSet::from_indices(t.order(), induced.iter().copied());
    Ok(FirstIsomorphismReport {
        quotient_order: q.quotient.order(),
        image_matches: induced_image == img,
        induced_is_hom: check_hom(&q.quotient, t, &induced).is_ok(),
        kernel: ker,
        image: img,
        well_defined,
        injective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::compose::enumerate_skew_brace_homs;

    #[test]
    fn z6_mod_evens_is_trivial_c2() {
        let z6 = catalog::dual_weak_brace("z6_exotic").unwrap();
        let q = quotient(&z6, &ElementSet::from_indices(6, [0, 2, 4])).unwrap();
        assert_eq!(q.quotient, catalog::dual_weak_brace("trivial_c2").unwrap());
        assert_eq!(q.projection, vec![0, 1, 0, 1, 0, 1]);
        assert_eq!(q.class_rep, vec![0, 1]);
    }

    #[test]
    fn quotient_by_idempotents_and_everything() {
        let z6 = catalog::dual_weak_brace("z6_exotic").unwrap();
        let q = quotient(&z6, z6.idempotents()).unwrap();
        assert_eq!(q.quotient, z6);
        let s = catalog::dual_weak_brace("vee_sym3").unwrap();
        let q = quotient(&s, &s.full_set()).unwrap();
        assert_eq!(q.quotient.order(), s.component_count());
        assert!(q.quotient.idempotents().is_full());
    }

    #[test]
    fn quotient_rejects_non_ideal() {
        let z6 = catalog::dual_weak_brace("z6_exotic").unwrap();
        assert!(matches!(
            quotient(&z6, &ElementSet::from_indices(6, [0, 3])),
            Err(IdealError::NotAnIdeal(_))
        ));
    }

    #[test]
    fn identity_and_projection_kernels() {
        let s = catalog::dual_weak_brace("c3_sym3").unwrap();
        let id: Vec<usize> = (0..s.order()).collect();
        assert_eq!(&kernel(&s, &s, &id).unwrap(), s.idempotents());
        assert!(image(&s, &s, &id).unwrap().is_full());
        let z6 = catalog::dual_weak_brace("z6_exotic").unwrap();
        let evens = ElementSet::from_indices(6, [0, 2, 4]);
        let q = quotient(&z6, &evens).unwrap();
        assert_eq!(kernel(&z6, &q.quotient, &q.projection).unwrap(), evens);
        let rep = first_isomorphism_check(&z6, &q.quotient, &q.projection).unwrap();
        assert!(rep.passed());
    }

    #[test]
    fn c3_into_sym3_first_isomorphism() {
        let c3 = catalog::skew_brace("trivial_c3").unwrap();
        let sym3 = catalog::skew_brace("trivial_sym3").unwrap();
        let (s, t) = (c3.to_dual_weak_brace(), sym3.to_dual_weak_brace());
        let f = vec![0, 4, 5];
        let rep = first_isomorphism_check(&s, &t, &f).unwrap();
        assert_eq!(rep.kernel.to_vec(), vec![0]);
        assert_eq!(rep.image.to_vec(), vec![0, 4, 5]);
        assert_eq!(rep.quotient_order, 3);
        assert!(rep.passed());
        assert!(is_sub_brace(&t, &rep.image, true).is_ok());
        let homs = enumerate_skew_brace_homs(&c3, &sym3);
        assert!(homs.contains(&f));
    }

    #[test]
    fn constant_hom_kills_everything() {
        let s = catalog::dual_weak_brace("z6_exotic").unwrap();
        let t = catalog::dual_weak_brace("trivial_c2").unwrap();
        let rep = first_isomorphism_check(&s, &t, &[0; 6]).unwrap();
        assert!(rep.kernel.is_full());
        assert_eq!(rep.quotient_order, 1);
    }

    #[test]
    fn non_hom_rejected() {
        let s = catalog::dual_weak_brace("trivial_c3").unwrap();
        assert_eq!(
            check_hom(&s, &s, &[0, 2, 2]),
            Err(IdealError::NotAHom {
                side: Side::Add,
                a: 1,
                b: 1
            })
        );
    }

    #[test]
    fn image_local_vs_strict_fullness() {
        // Embedding the trivial C2 brace into the top of vee_sym3 hits one idempotent of three.
        let s = catalog::dual_weak_brace("vee_sym3").unwrap();
        let h = ElementSet::from_indices(s.order(), [0, 1]);
        assert!(is_sub_brace(&s, &h, false).is_ok());
        assert!(matches!(
            is_sub_brace(&s, &h, true),
            Err(SubsetViolation::MissingIdempotent { .. })
        ));
        let (sub, members) = substructure(&s, &h).unwrap();
        assert_eq!(members, vec![0, 1]);
        assert_eq!(sub, catalog::dual_weak_brace("trivial_c2").unwrap());
    }
}
