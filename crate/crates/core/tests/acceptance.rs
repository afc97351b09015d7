//! Acceptance suite. Prints one `ACn PASS|FAIL` line per criterion and
//! exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{all_maps, mask, preserves, Naive};
use wbk_core::algebra::{enumerate_group_homs, lcm, SemilatticeTable};
use wbk_core::brace::validate_dual_weak_brace;
use wbk_core::compose::{compose, enumerate_skew_brace_homs, StrongSemilatticeSpec};
use wbk_core::ideal::{
    annihilator, component_union, enumerate_ideals, enumerate_ideals_with, first_isomorphism_check,
    image, is_ideal, is_sub_brace, kernel, quotient, socle, substructure, EnumerationLimits,
    EnumerationMode,
};
use wbk_core::nilpotency::{annihilator_series, classify, verify_sandwich};
use wbk_core::solution::{
    check_braid, period, solution_of, strong_semilattice_of_solutions, SolutionTable,
};
use wbk_core::{catalog, DualWeakBrace, ElementSet, SkewBrace};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rows(s: &DualWeakBrace) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    (common::add_rows(s), common::mul_rows(s))
}

fn c3_sym3_by_hand() -> DualWeakBrace {
    let c3 = SkewBrace::trivial(&catalog::group("c3").unwrap());
    let sym3 = SkewBrace::trivial(&catalog::group("sym3").unwrap());
    // (123) is index 4 of sym3.
    let homs = BTreeMap::from([((0, 1), vec![0, 4, 5])]);
    let spec =
        StrongSemilatticeSpec::new(SemilatticeTable::chain(2), vec![c3, sym3], homs).unwrap();
    compose(&spec).unwrap()
}

fn ac1() -> Outcome {
    let start = Instant::now();
    let s = c3_sym3_by_hand();
    let (add, mul) = rows(&s);
    validate_dual_weak_brace(&add, &mul).map_err(|e| format!("validation failed: {e}"))?;
    let braid = check_braid(&solution_of(&s));
    let elapsed = start.elapsed();
    ensure(braid.passed(), || {
        format!("braid fails at {:?}", braid.witness)
    })?;
    ensure(braid.checked == 729, || {
        format!("checked {} triples", braid.checked)
    })?;
    ensure(s == catalog::dual_weak_brace("c3_sym3").unwrap(), || {
        "differs from the catalog entry".into()
    })?;
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "order 9, 729 axiom triples, braid on {} triples, {elapsed:?}",
        braid.checked
    ))
}

fn spec_names() -> Vec<&'static str> {
    catalog::entries()
        .iter()
        .filter(|e| e.kind() == "strong_semilattice")
        .map(|e| e.name.as_str())
        .collect()
}

fn ac2() -> Outcome {
    let mut pairs = 0;
    for name in spec_names() {
        let spec = catalog::spec(name).unwrap();
        let r = solution_of(&compose(&spec).unwrap());
        let parts: Vec<SolutionTable> = spec
            .braces()
            .iter()
            .map(|b| solution_of(&b.to_dual_weak_brace()))
            .collect();
        let glued = strong_semilattice_of_solutions(spec.semilattice(), &parts, spec.homs())
            .map_err(|e| format!("{name}: gluing failed: {e}"))?;
        let n = r.order();
        for a in 0..n {
            for b in 0..n {
                ensure(r.get(a, b) == glued.get(a, b), || {
                    format!("{name}: differs at ({a}, {b})")
                })?;
            }
        }
        pairs += n * n;
    }
    Ok(format!("{} specs, {pairs} pairs", spec_names().len()))
}

/// `r(a, b) = (b, b⁻¹ a b)` on Sym3, iterated pointwise until `r^{p+1} = r`.
fn sym3_conjugation_period_oracle() -> usize {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 0, 2],
        [2, 1, 0],
        [0, 2, 1],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
    let mul = |p: usize, q: usize| index([0, 1, 2].map(|i| perms[p][perms[q][i]]));
    let inv = |p: usize| (0..6).find(|&q| mul(p, q) == 0).unwrap();
    let r = |(a, b): (usize, usize)| (b, mul(mul(inv(b), a), b));
    let pairs: Vec<(usize, usize)> = (0..6).flat_map(|a| (0..6).map(move |b| (a, b))).collect();
    let first: Vec<(usize, usize)> = pairs.iter().map(|&t| r(t)).collect();
    let mut current = first.clone();
    for p in 1.. {
        current = current.into_iter().map(r).collect();
        if current == first {
            return p;
        }
    }
    unreachable!()
}

fn ac3() -> Outcome {
    let spec = catalog::spec("c3_sym3").unwrap();
    let r = solution_of(&compose(&spec).unwrap());
    let comps: Vec<SolutionTable> = spec
        .braces()
        .iter()
        .map(|b| solution_of(&b.to_dual_weak_brace()))
        .collect();
    let pa = period(&comps[0]).map_err(|e| e.to_string())?;
    let pb = period(&comps[1]).map_err(|e| e.to_string())?;
    ensure(pa == 2, || format!("C3 flip period {pa}"))?;
    let oracle = sym3_conjugation_period_oracle();
    ensure(pb == oracle, || {
        format!("Sym3 period {pb}, oracle {oracle}")
    })?;
    for (c, p) in comps.iter().zip([pa, pb]) {
        ensure(p % 2 == 0 || c.is_identity(), || format!("odd period {p}"))?;
    }
    let l = lcm(pa, pb);
    ensure(r.pow(l + 1) == r, || format!("r^{} != r", l + 1))?;
    let pr = period(&r).map_err(|e| e.to_string())?;
    Ok(format!(
        "p_alpha = {pa}, p_beta = {pb}, r^{} = r, period of r = {pr}",
        l + 1
    ))
}

fn ac4() -> Outcome {
    let spec = catalog::spec("c2_c4_braces").unwrap();
    let r = solution_of(&compose(&spec).unwrap());
    ensure(r.pow(3) == r, || "r^3 != r".into())?;
    ensure(r.pow(2) != r, || "r is idempotent".into())?;
    for (alpha, b) in spec.braces().iter().enumerate() {
        let ra = solution_of(&b.to_dual_weak_brace());
        ensure(ra.pow(2).is_identity(), || {
            format!("component {alpha} is not involutive")
        })?;
    }
    Ok(format!(
        "order {}, r^3 = r, {} involutive components",
        r.order(),
        spec.braces().len()
    ))
}

fn ac5() -> Outcome {
    let s = catalog::dual_weak_brace("c3_sym3").unwrap();
    let soc = socle(&s);
    let union = component_union(&s, socle);
    ensure(soc == *s.idempotents() && soc.len() == 2, || {
        format!("Soc(S) = {soc}")
    })?;
    ensure(union.len() == 4 && soc.is_subset(&union), || {
        format!("union = {union}")
    })?;
    ensure(Naive::new(&s).socle() == soc.to_vec(), || {
        "socle disagrees with the oracle".into()
    })?;
    let names = catalog::brace_like_names();
    for name in &names {
        let t = catalog::dual_weak_brace(name).unwrap();
        let soc = socle(&t);
        ensure(soc.to_vec() == Naive::new(&t).socle(), || {
            format!("{name}: socle disagrees with the oracle")
        })?;
        ensure(soc.is_subset(&component_union(&t, socle)), || {
            format!("{name}: Soc(S) not in the union")
        })?;
    }
    Ok(format!(
        "|Soc(S)| = 2 < |union| = 4; inclusion on {} structures",
        names.len()
    ))
}

fn ac6() -> Outcome {
    let b = catalog::dual_weak_brace("z6_exotic").unwrap();
    let (add, mul) = rows(&b);
    validate_dual_weak_brace(&add, &mul).map_err(|e| e.to_string())?;
    let ann = annihilator(&b);
    ensure(ann.to_vec() == vec![0], || format!("Ann(B) = {ann}"))?;
    ensure(Naive::new(&b).annihilator() == vec![0], || {
        "oracle disagrees on Ann(B)".into()
    })?;
    let ideals = enumerate_ideals_with(
        &b,
        EnumerationLimits::default(),
        Some(EnumerationMode::Exhaustive),
    )
    .map_err(|e| e.to_string())?;
    let mut witnesses = Vec::new();
    for i in &ideals.ideals {
        let (sub, _) = substructure(&b, i).map_err(|e| e.to_string())?;
        let q = quotient(&b, i).map_err(|e| e.to_string())?;
        if annihilator(&sub).is_full()
            && annihilator(&q.quotient).is_full()
            && !i.is_full()
            && i.len() > 1
        {
            witnesses.push(i.clone());
        }
    }
    ensure(
        witnesses == vec![ElementSet::from_indices(6, [0, 2, 4])],
        || format!("witnesses {witnesses:?}"),
    )?;
    let series = annihilator_series(&b);
    ensure(!series.terminated, || {
        "annihilator series terminates".into()
    })?;
    Ok(format!(
        "Ann(B) = {{0}}, I = {}, annihilator series stalls at {}",
        witnesses[0], series.chain[0]
    ))
}

fn ac7() -> Outcome {
    let (mut subsets, mut enumerated) = (0, 0);
    for name in catalog::brace_like_names() {
        let s = catalog::dual_weak_brace(name).unwrap();
        let naive = Naive::new(&s);
        let n = s.order();
        if n <= 9 {
            for m in 0u64..1 << n {
                let x = ElementSet::from_mask(n, m);
                let lib = is_ideal(&s, &x).is_ok();
                let by_products = naive.is_ideal_by_products(&mask(n, &x));
                ensure(lib == by_products, || {
                    format!("{name}: {x} is_ideal = {lib}, characterization = {by_products}")
                })?;
                subsets += 1;
            }
        }
        for i in enumerate_ideals(&s).map_err(|e| e.to_string())?.ideals {
            ensure(naive.is_ideal_by_products(&mask(n, &i)), || {
                format!("{name}: {i} fails the characterization")
            })?;
            enumerated += 1;
        }
    }
    Ok(format!(
        "{subsets} subsets at order <= 9, {enumerated} enumerated ideals"
    ))
}

fn skew_brace_names() -> Vec<&'static str> {
    catalog::entries()
        .iter()
        .filter(|e| e.kind() == "skew_brace")
        .map(|e| e.name.as_str())
        .collect()
}

fn ac8() -> Outcome {
    let mut count = 0;
    for a in skew_brace_names() {
        for b in skew_brace_names() {
            let (sa, sb) = (
                catalog::skew_brace(a).unwrap(),
                catalog::skew_brace(b).unwrap(),
            );
            if sa.order() > 6 || sb.order() > 6 {
                continue;
            }
            let (da, db) = (sa.to_dual_weak_brace(), sb.to_dual_weak_brace());
            for f in enumerate_skew_brace_homs(&sa, &sb) {
                let ker = kernel(&da, &db, &f).map_err(|e| format!("{a}->{b} {f:?}: {e}"))?;
                ensure(is_ideal(&da, &ker).is_ok(), || {
                    format!("{a}->{b} {f:?}: kernel {ker} not an ideal")
                })?;
                let img = image(&da, &db, &f).map_err(|e| e.to_string())?;
                ensure(is_sub_brace(&db, &img, true).is_ok(), || {
                    format!("{a}->{b} {f:?}: image {img}")
                })?;
                let rep = first_isomorphism_check(&da, &db, &f).map_err(|e| e.to_string())?;
                ensure(rep.passed(), || format!("{a}->{b} {f:?}: {rep:?}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} homomorphisms"))
}

fn ac9() -> Outcome {
    let (mut terms, mut sandwiches) = (0, 0);
    for name in catalog::brace_like_names() {
        let s = catalog::dual_weak_brace(name).unwrap();
        let c = classify(&s);
        for rep in [&c.right, &c.socle, &c.annihilator, &c.gamma] {
            for t in &rep.chain {
                ensure(is_ideal(&s, t).is_ok(), || {
                    format!("{name}: {} term {t} is not an ideal", rep.kind.name())
                })?;
                terms += 1;
            }
        }
        ensure(c.socle.quotient_agrees == Some(true), || {
            format!("{name}: socle quotient mismatch")
        })?;
        ensure(c.annihilator.quotient_agrees == Some(true), || {
            format!("{name}: ann quotient mismatch")
        })?;
        ensure(c.passed(), || format!("{name}: {:?}", c.checks))?;
        if let Some(k) = c.annihilator.index {
            ensure(c.gamma.index.is_some_and(|g| g <= k + 1), || {
                format!("{name}: gamma index {:?}", c.gamma.index)
            })?;
            let rep =
                verify_sandwich(&s, &c.annihilator.chain).map_err(|e| format!("{name}: {e}"))?;
            ensure(rep.passed(), || format!("{name}: {rep:?}"))?;
            sandwiches += 1;
        }
    }
    Ok(format!(
        "{terms} series terms are ideals, {sandwiches} sandwich checks"
    ))
}

fn ac10() -> Outcome {
    let groups: Vec<&str> = catalog::entries()
        .iter()
        .filter(|e| e.kind() == "group")
        .map(|e| e.name.as_str())
        .collect();
    let mut pairs = 0;
    for a in &groups {
        for b in &groups {
            let (ga, gb) = (catalog::group(a).unwrap(), catalog::group(b).unwrap());
            if (gb.order() as f64).powi(ga.order() as i32) > 1e6 {
                continue;
            }
            let mut lib = enumerate_group_homs(&ga, &gb);
            lib.sort();
            let brute: Vec<Vec<usize>> = all_maps(ga.order(), gb.order())
                .filter(|f| preserves(&ga.rows(), &gb.rows(), f))
                .collect();
            ensure(lib == brute, || {
                format!("group homs {a}->{b}: {} vs {}", lib.len(), brute.len())
            })?;
            pairs += 1;
        }
    }
    for a in skew_brace_names() {
        for b in skew_brace_names() {
            let (sa, sb) = (
                catalog::skew_brace(a).unwrap(),
                catalog::skew_brace(b).unwrap(),
            );
            if (sb.order() as f64).powi(sa.order() as i32) > 1e6 {
                continue;
            }
            let (da, db) = (sa.to_dual_weak_brace(), sb.to_dual_weak_brace());
            let (add_a, mul_a) = rows(&da);
            let (add_b, mul_b) = rows(&db);
            let mut lib = enumerate_skew_brace_homs(&sa, &sb);
            lib.sort();
            let brute: Vec<Vec<usize>> = all_maps(sa.order(), sb.order())
                .filter(|f| preserves(&add_a, &add_b, f) && preserves(&mul_a, &mul_b, f))
                .collect();
            ensure(lib == brute, || {
                format!("brace homs {a}->{b}: {} vs {}", lib.len(), brute.len())
            })?;
            pairs += 1;
        }
    }
    let mut structures = 0;
    for name in catalog::brace_like_names() {
        let s = catalog::dual_weak_brace(name).unwrap();
        if s.order() > 16 {
            continue;
        }
        let brute = Naive::new(&s).all_ideals();
        for mode in [EnumerationMode::Exhaustive, EnumerationMode::ClosureSeeded] {
            let lib = enumerate_ideals_with(&s, EnumerationLimits::default(), Some(mode))
                .map_err(|e| e.to_string())?;
            let lib: Vec<Vec<usize>> = lib.ideals.iter().map(ElementSet::to_vec).collect();
            ensure(lib == brute, || {
                format!("{name} ({}): ideals differ", mode.name())
            })?;
        }
        structures += 1;
    }
    Ok(format!(
        "{pairs} hom pairs, ideals of {structures} structures"
    ))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let criteria: [Criterion; 10] = [
        ("AC1", ac1),
        ("AC2", ac2),
        ("AC3", ac3),
        ("AC4", ac4),
        ("AC5", ac5),
        ("AC6", ac6),
        ("AC7", ac7),
        ("AC8", ac8),
        ("AC9", ac9),
        ("AC10", ac10),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let t = Instant::now();
        match run() {
            Ok(detail) => println!("{name} PASS {detail} [{:?}]", t.elapsed()),
            Err(detail) => {
                failed += 1;
                println!("{name} FAIL {detail}");
            }
        }
    }
    let total = start.elapsed();
    if total < Duration::from_secs(60) {
        println!("AC11 PASS acceptance wall-clock {total:?}");
    } else {
        failed += 1;
        println!("AC11 FAIL acceptance wall-clock {total:?}");
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
