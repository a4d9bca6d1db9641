//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use schurlab::abelian::{smith_normal_form, FinAbGroup, IntMatrix};
use schurlab::catalog;
use schurlab::cohomology::{multiplier_group, nu, psi, schur_multiplier, transgress, Characters, Cocycle2};
use schurlab::homology::h2_integral;
use schurlab::lab::{self, CentralProductInstance, VerificationReport};
use schurlab::subgroup::{coset_representatives, quotient};
use schurlab::Result;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn criterion(number: u32, title: &str, budget: Duration, run: impl FnOnce() -> Result<Outcome>) -> bool {
    let start = Instant::now();
    let result = run();
    let elapsed = start.elapsed();
    let (ok, detail) = match result {
        Ok(o) => (o.ok && elapsed <= budget, o.detail),
        Err(e) => (false, format!("error: {e}")),
    };
    let over = if elapsed > budget { " [over budget]" } else { "" };
    println!(
        "criterion {number:>2} {}: {title} ({:.2} s){over} {detail}",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    ok
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn elementary(p: u64, rank: usize) -> FinAbGroup {
    FinAbGroup::elementary(p, rank)
}

fn instance(p: Result<catalog::NamedProduct>) -> Result<CentralProductInstance> {
    CentralProductInstance::from_named(&p?)
}

fn failing(reports: &[VerificationReport]) -> Vec<String> {
    reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{} on {}: {:?}", r.claim, r.instance, r.failures()))
        .collect()
}

fn oracle_equivalence() -> Result<Outcome> {
    let required = ["Z2^2", "Z2xZ4", "Z2^3", "Z3^2", "D8", "Q8", "D8xZ2", "Z4∘Z4"];
    let catalog = catalog::oracle_catalog()?;
    let missing: Vec<&str> = required.iter().copied().filter(|n| !catalog.iter().any(|(c, _)| c == n)).collect();
    let cyclic = (1..=16).all(|n| catalog.iter().any(|(c, _)| *c == format!("Z{n}")));
    let mut mismatches = Vec::new();
    let mut count = 0;
    for (name, g) in catalog.iter().filter(|(_, g)| g.order() <= 16) {
        count += 1;
        let (a, b) = (schur_multiplier(g)?.invariants(), h2_integral(g, false)?.invariants());
        if a != b {
            mismatches.push(format!("{name}: {a:?} vs {b:?}"));
        }
    }
    Ok(outcome(
        missing.is_empty() && cyclic && mismatches.is_empty(),
        format!("{count} groups; missing {missing:?}; mismatches {mismatches:?}"),
    ))
}

fn extraspecial_32() -> Result<Outcome> {
    let mut detail = Vec::new();
    let mut ok = true;
    for plus in [true, false] {
        let m = schur_multiplier(&catalog::extraspecial(2, 2, plus)?)?;
        ok &= m.invariants() == vec![2; 5] && m.order() == 1 << (2 * 2 * 2 - 2 - 1);
        detail.push(format!("{}: {:?}", if plus { "+" } else { "-" }, m.invariants()));
    }
    let r = lab::check_corollary_extraspecial(2, 2)?;
    Ok(outcome(ok && r.passed(), detail.join(", ")))
}

fn example_sides(inst: &CentralProductInstance) -> Result<lab::TheoremB> {
    lab::theorem_b(inst)
}

fn strict(f: &schurlab::abelian::AbelianMap) -> bool {
    f.is_injective() && !f.is_surjective()
}

fn example1() -> Result<Outcome> {
    let b = example_sides(&instance(catalog::example1(3, 1))?)?;
    let ok = b.multiplier.is_isomorphic(&elementary(3, 4))
        && b.lhs.is_isomorphic(&elementary(3, 2))
        && b.rhs.is_isomorphic(&elementary(3, 7))
        && strict(&b.first)
        && strict(&b.second);
    Ok(outcome(
        ok,
        format!(
            "M={:?} lhs={:?} rhs={:?} first strict={} second strict={}",
            b.multiplier.invariants(),
            b.lhs.invariants(),
            b.rhs.invariants(),
            strict(&b.first),
            strict(&b.second)
        ),
    ))
}

fn example4() -> Result<Outcome> {
    let b = example_sides(&instance(catalog::example4(3, 1))?)?;
    let ok = b.multiplier.is_isomorphic(&elementary(3, 2)) && b.first_is_iso() && b.second_is_iso();
    Ok(outcome(
        ok,
        format!("M={:?} first iso={} second iso={}", b.multiplier.invariants(), b.first_is_iso(), b.second_is_iso()),
    ))
}

fn example2() -> Result<Outcome> {
    let b = example_sides(&instance(catalog::example2(3))?)?;
    let ok = b.multiplier.is_isomorphic(&elementary(3, 2))
        && b.first_is_iso()
        && strict(&b.second)
        && b.rhs.is_isomorphic(&elementary(3, 4));
    Ok(outcome(
        ok,
        format!(
            "M={:?} first iso={} second strict={} rhs={:?}",
            b.multiplier.invariants(),
            b.first_is_iso(),
            strict(&b.second),
            b.rhs.invariants()
        ),
    ))
}

fn example3() -> Result<Outcome> {
    let inst = instance(catalog::example3(3))?;
    let b = example_sides(&inst)?;
    let jones = lab::check_jones(&inst.g, &inst.a, &inst.name)?;
    let ok = b.multiplier.order() == 27 && jones.passed() && b.first_is_iso();
    Ok(outcome(ok, format!("|M|={} first iso={}", b.multiplier.order(), b.first_is_iso())))
}

fn kernel_theta_prime() -> Result<Outcome> {
    let e = catalog::extraspecial_p3(3, catalog::Exponent::P)?;
    let instances = vec![
        instance(catalog::center_instance("E(3^3)∘E(3^3)", e.clone(), e))?,
        instance(catalog::example1(3, 1))?,
        instance(catalog::example4(3, 1))?,
        instance(catalog::extraspecial_with_cyclic(3))?,
        instance(catalog::center_instance("D8∘D8", catalog::dihedral(8)?, catalog::dihedral(8)?))?,
        instance(catalog::z4_z4())?,
    ];
    let mut bad = Vec::new();
    for inst in &instances {
        let r = lab::check_kernel_theta_prime(inst)?;
        if !(r.checks["|ker θ′| = |Z|"] && r.checks["ker θ′ ⊆ inf(M(G/A))"]) {
            bad.push(inst.name.clone());
        }
    }
    Ok(outcome(instances.len() >= 5 && bad.is_empty(), format!("{} instances; failing {bad:?}", instances.len())))
}

fn inflation_surjective() -> Result<Outcome> {
    let instances = lab::standard_instances(true)?;
    let mut reports = Vec::new();
    let mut subgroups = 0;
    for inst in &instances {
        let r = lab::check_inflation_surjective(inst)?;
        subgroups += r.checks.len();
        reports.push(r);
    }
    let bad = failing(&reports);
    Ok(outcome(bad.is_empty(), format!("{} instances, {subgroups} pairs (G, B); failing {bad:?}", instances.len())))
}

fn jones() -> Result<Outcome> {
    let mut reports = Vec::new();
    let mut pairs = 0;
    for (name, g) in catalog::jones_catalog()?.iter().filter(|(_, g)| g.order() <= 32) {
        let r = lab::check_jones_all(g, name)?;
        pairs += r.checks.len();
        reports.push(r);
    }
    let bad = failing(&reports);
    Ok(outcome(bad.is_empty(), format!("{} groups, {pairs} pairs (X, N); failing {bad:?}", reports.len())))
}

fn comparison_diagram() -> Result<Outcome> {
    let instances = [
        instance(catalog::center_instance("D8∘D8", catalog::dihedral(8)?, catalog::dihedral(8)?))?,
        instance(catalog::example1(3, 1))?,
        instance(catalog::example4(3, 1))?,
        instance(catalog::z4_z4())?,
    ];
    let reports = instances.iter().map(lab::check_comparison_diagram).collect::<Result<Vec<_>>>()?;
    let bad = failing(&reports);
    Ok(outcome(bad.is_empty(), format!("{} instances; failing {bad:?}", reports.len())))
}

fn random_class(rng: &mut ChaCha8Rng, cg: &schurlab::cohomology::CohomologyGroup) -> Cocycle2 {
    let coords: Vec<i64> = cg.structure().orders().iter().map(|&d| rng.gen_range(0..d as i64)).collect();
    cg.cocycle_of(&coords)
}

fn perturb(rng: &mut ChaCha8Rng, f: &Cocycle2) -> Result<Cocycle2> {
    let m = f.modulus() as i64;
    let mut phi: Vec<i64> = (0..f.group().order()).map(|_| rng.gen_range(0..m)).collect();
    phi[0] = 0;
    f.add(&Cocycle2::coboundary(f.group().clone(), f.modulus(), &phi)?)
}

fn properties() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut notes = Vec::new();

    let mut groups: Vec<Arc<schurlab::group::CayleyTable>> =
        catalog::oracle_catalog()?.into_iter().map(|(_, g)| g).collect();
    let instances = lab::standard_instances(false)?;
    groups.extend(instances.iter().map(|i| i.g.clone()));
    let mut reps = 0;
    let mut cocycle_ok = true;
    for g in &groups {
        let cg = multiplier_group(g, (g.order() as u64).max(2))?;
        for f in cg.reps() {
            reps += 1;
            cocycle_ok &= f.is_cocycle();
        }
    }
    notes.push(format!("cocycle identity on {reps} representatives: {cocycle_ok}"));

    let mut invariance_ok = true;
    for inst in &instances {
        let cg = multiplier_group(&inst.g, inst.modulus)?;
        for _ in 0..100 {
            let f = random_class(&mut rng, &cg);
            let f2 = perturb(&mut rng, &f)?;
            invariance_ok &= psi(&f, &inst.a)?.same_as(&psi(&f2, &inst.a)?);
            invariance_ok &= nu(&f, &inst.h_emb, &inst.k_emb)?.same_as(&nu(&f2, &inst.h_emb, &inst.k_emb)?);
            invariance_ok &= cg.classify(&f)? == cg.classify(&f2)?;
        }
    }
    notes.push(format!("ψ/ν invariance on {} instances: {invariance_ok}", instances.len()));

    let mut sections_ok = true;
    let mut transgressions = 0;
    for inst in &instances {
        let m = inst.modulus;
        let (q, proj) = quotient(&inst.g, &inst.a)?;
        let target = multiplier_group(&q, m)?;
        let first = coset_representatives(&proj);
        let second: Vec<usize> = first
            .iter()
            .enumerate()
            .map(|(c, &r)| {
                if c == 0 {
                    0
                } else {
                    let shift = inst.a.elements()[rng.gen_range(0..inst.a.order())];
                    inst.g.mul(r, shift)
                }
            })
            .collect();
        if inst.a.order() > 1 && first == second {
            sections_ok = false;
        }
        let ch = Characters::of_subgroup(&inst.a, m)?;
        for j in 0..ch.group.ngens() {
            let beta = ch.values(&ch.group.basis_vector(j));
            let c1 = target.classify(&transgress(&beta, &inst.a, &proj, &first, m)?)?;
            let c2 = target.classify(&transgress(&beta, &inst.a, &proj, &second, m)?)?;
            transgressions += 1;
            sections_ok &= c1 == c2;
        }
    }
    notes.push(format!("section independence on {transgressions} transgressions: {sections_ok}"));

    let mut snf_ok = true;
    for _ in 0..1000 {
        let (r, c) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
        let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-9..=9)).collect()).collect();
        let mat = IntMatrix::from_rows(&rows);
        let snf = smith_normal_form(&mat);
        snf_ok &= snf.u.mul(&mat).mul(&snf.v) == snf.s;
        snf_ok &= snf.u.mul(&snf.u_inv) == IntMatrix::identity(r) && snf.v.mul(&snf.v_inv) == IntMatrix::identity(c);
        let d = snf.diagonal();
        for i in 0..r {
            for j in 0..c {
                if i != j {
                    snf_ok &= snf.s[(i, j)] == BigInt::from(0);
                }
            }
        }
        snf_ok &= d.windows(2).all(|w| {
            w[0] == BigInt::from(0) && w[1] == BigInt::from(0)
                || (w[0] != BigInt::from(0) && (&w[1] % &w[0]) == BigInt::from(0))
        });
    }
    notes.push(format!("S = U·M·V on 1000 matrices: {snf_ok}"));

    Ok(outcome(cocycle_ok && invariance_ok && sections_ok && snf_ok, notes.join("; ")))
}

fn main() -> ExitCode {
    let results = [
        criterion(1, "oracle equivalence for order ≤ 16", secs(60), oracle_equivalence),
        criterion(2, "M(2^(1+4)) ≅ Z2^(5), both types", secs(60), extraspecial_32),
        criterion(3, "Example 1, p=3, n=1", secs(300), example1),
        criterion(4, "Example 4, p=3, n=1", secs(300), example4),
        criterion(5, "Example 2, p=3", secs(1800), example2),
        criterion(6, "Example 3, p=3", secs(1800), example3),
        criterion(7, "ker θ′ has order |Z| and consists of inflations", secs(600), kernel_theta_prime),
        criterion(8, "inf: H²(G/B) → H²(G) surjective for every B ≤ Z", secs(600), inflation_surjective),
        criterion(9, "Jones divisibility on the catalog of order ≤ 32", secs(600), jones),
        criterion(10, "comparison diagram commutes with exact columns", secs(600), comparison_diagram),
        criterion(11, "property suite", secs(300), properties),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
