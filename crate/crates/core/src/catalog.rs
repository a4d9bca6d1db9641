//! Named groups and the central-product instances used by the verification suites.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{
    build_cyclic, central_product, direct_product, from_pc_presentation, CayleyTable, CentralProductSpec, GroupMap,
    PcPresentation,
};
use crate::subgroup::center;

/// Exponent type of an extraspecial group of order `p³`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exponent {
    P,
    PSquared,
}

/// `ℤ_p^(rank)` as a pc group.
pub fn elementary_abelian(p: u32, rank: usize) -> Result<CayleyTable> {
    abelian(&vec![p as usize; rank])
}

/// `ℤ_{d_1} × ⋯ × ℤ_{d_k}` as a pc group with one generator per nontrivial factor.
pub fn abelian(factors: &[usize]) -> Result<CayleyTable> {
    let factors: Vec<usize> = factors.iter().copied().filter(|&d| d != 1).collect();
    if factors.is_empty() {
        return build_cyclic(1);
    }
    let pres =
        PcPresentation { rel_orders: factors.iter().map(|&d| d as u32).collect(), powers: vec![], commutators: vec![] };
    from_pc_presentation(&pres)
}

/// Dihedral group of order `order` (`order` even, at least 4): `r^i s^j` at
/// index `i + (order/2)·j`.
pub fn dihedral(order: usize) -> Result<CayleyTable> {
    if order < 4 || !order.is_multiple_of(2) {
        return Err(Error::InvalidSpec(format!("dihedral order {order}")));
    }
    let n = order / 2;
    let mut mul = Vec::with_capacity(order * order);
    for x in 0..order {
        let (i, a) = (x % n, x / n);
        for y in 0..order {
            let (k, b) = (y % n, y / n);
            let rot = if a == 0 { (i + k) % n } else { (i + n - k) % n };
            mul.push((rot + n * ((a + b) % 2)) as u32);
        }
    }
    Ok(CayleyTable::from_mul(order, mul)?.with_gen_hint(vec![1, n]))
}

/// Quaternion group of order 8.
pub fn quaternion8() -> Result<CayleyTable> {
    from_pc_presentation(&PcPresentation {
        rel_orders: vec![2, 2, 2],
        powers: vec![(0, vec![0, 0, 1]), (1, vec![0, 0, 1])],
        commutators: vec![(1, 0, vec![0, 0, 1])],
    })
}

/// Presentation of the extraspecial group of order `p³` with the given
/// exponent type. The derived subgroup is generated by the last generator.
/// For `p = 2` both types give the dihedral group of order 8.
pub fn extraspecial_p3_presentation(p: u32, exp: Exponent) -> PcPresentation {
    match exp {
        // [α₁, α] = α₂, all generators of order p
        Exponent::P => {
            PcPresentation { rel_orders: vec![p, p, p], powers: vec![], commutators: vec![(1, 0, vec![0, 0, 1])] }
        }
        // generators b, a, c with a^p = c, [a, b] = c
        Exponent::PSquared => PcPresentation {
            rel_orders: vec![p, p, p],
            powers: vec![(1, vec![0, 0, 1])],
            commutators: vec![(1, 0, vec![0, 0, 1])],
        },
    }
}

pub fn extraspecial_p3(p: u32, exp: Exponent) -> Result<CayleyTable> {
    from_pc_presentation(&extraspecial_p3_presentation(p, exp))
}

fn central_generator(g: &Arc<CayleyTable>) -> Result<usize> {
    let z = center(g);
    z.elements()
        .iter()
        .copied()
        .find(|&x| g.element_order(x) == z.order() && x != 0)
        .ok_or_else(|| Error::Precondition("center is not cyclic and non-trivial".into()))
}

/// Central product of two groups with cyclic centers, amalgamating the
/// subgroups of order `min(|Z(H)|, |Z(K)|)`.
pub fn amalgamate_centers(
    h: &Arc<CayleyTable>,
    k: &Arc<CayleyTable>,
) -> Result<(Arc<CayleyTable>, GroupMap, GroupMap)> {
    central_product(&center_amalgam(h.clone(), k.clone())?)
}

fn center_amalgam(h: Arc<CayleyTable>, k: Arc<CayleyTable>) -> Result<CentralProductSpec> {
    let (a, b) = (central_generator(&h)?, central_generator(&k)?);
    let (oa, ob) = (h.element_order(a), k.element_order(b));
    let common = oa.min(ob);
    let (a, b) = (h.pow(a, (oa / common) as u64), k.pow(b, (ob / common) as u64));
    Ok(CentralProductSpec { left: h, right: k, amalgam: vec![(a, b)] })
}

/// Extraspecial group of order `p^{2n+1}` built as an iterated central product.
///
/// `plus = true` uses only exponent-`p` factors (for `p = 2`, only `D₈`);
/// otherwise one factor is replaced by the exponent-`p²` group (for `p = 2`, by `Q₈`).
pub fn extraspecial(p: u32, n: usize, plus: bool) -> Result<Arc<CayleyTable>> {
    if n == 0 {
        return Err(Error::InvalidSpec("extraspecial groups need n ≥ 1".into()));
    }
    let first = if plus {
        if p == 2 {
            dihedral(8)?
        } else {
            extraspecial_p3(p, Exponent::P)?
        }
    } else if p == 2 {
        quaternion8()?
    } else {
        extraspecial_p3(p, Exponent::PSquared)?
    };
    let factor = Arc::new(if p == 2 { dihedral(8)? } else { extraspecial_p3(p, Exponent::P)? });
    let mut g = Arc::new(first);
    for _ in 1..n {
        g = amalgamate_centers(&g, &factor)?.0;
    }
    Ok(g)
}

/// A named central-product instance `G = H ∘ K`.
#[derive(Clone, Debug)]
pub struct NamedProduct {
    pub name: String,
    pub spec: CentralProductSpec,
}

fn cyclic_arc(n: usize) -> Result<Arc<CayleyTable>> {
    Ok(Arc::new(build_cyclic(n)?))
}

/// `H` extraspecial of order `p³` and exponent `p`, `K = ℤ_p^(n+1)`, amalgamating `H'`.
pub fn example1(p: u32, n: usize) -> Result<NamedProduct> {
    let h = Arc::new(extraspecial_p3(p, Exponent::P)?);
    let k = Arc::new(elementary_abelian(p, n + 1)?);
    // H' = ⟨α₂⟩ at index 1; the last generator of K at index 1
    Ok(NamedProduct {
        name: format!("example1(p={p},n={n})"),
        spec: CentralProductSpec { left: h, right: k, amalgam: vec![(1, 1)] },
    })
}

/// `H` extraspecial of order `p³` and exponent `p`, `K = ℤ_{p³}`, `α₂ ↦ γ^{p²}`.
pub fn example2(p: u32) -> Result<NamedProduct> {
    let h = Arc::new(extraspecial_p3(p, Exponent::P)?);
    let pp = p as usize;
    let k = cyclic_arc(pp * pp * pp)?;
    Ok(NamedProduct {
        name: format!("example2(p={p})"),
        spec: CentralProductSpec { left: h, right: k, amalgam: vec![(1, pp * pp)] },
    })
}

/// Presentation of the order-`p⁴` group `⟨α, α₁, α₂, α₃ | [α₁,α]=α₂, [α₂,α]=α₃⟩`.
pub fn example3_h_presentation(p: u32) -> PcPresentation {
    PcPresentation {
        rel_orders: vec![p, p, p, p],
        powers: vec![],
        commutators: vec![(1, 0, vec![0, 0, 1, 0]), (2, 0, vec![0, 0, 0, 1])],
    }
}

/// `H` of order `p⁴` above, `K = ℤ_{p²}`, `α₃ ↦ γ^p`.
pub fn example3(p: u32) -> Result<NamedProduct> {
    let h = Arc::new(from_pc_presentation(&example3_h_presentation(p))?);
    let pp = p as usize;
    let k = cyclic_arc(pp * pp)?;
    Ok(NamedProduct {
        name: format!("example3(p={p})"),
        spec: CentralProductSpec { left: h, right: k, amalgam: vec![(1, pp)] },
    })
}

/// `H` extraspecial of order `p³` and exponent `p²`, `K = ℤ_{p^{n+1}}`, amalgamating `H'`.
pub fn example4(p: u32, n: usize) -> Result<NamedProduct> {
    let h = Arc::new(extraspecial_p3(p, Exponent::PSquared)?);
    let pn = (p as usize).pow(n as u32);
    let k = cyclic_arc(pn * p as usize)?;
    Ok(NamedProduct {
        name: format!("example4(p={p},n={n})"),
        spec: CentralProductSpec { left: h, right: k, amalgam: vec![(1, pn)] },
    })
}

/// Direct product `H × K` as a central product with trivial amalgam.
pub fn direct_instance(name: &str, h: CayleyTable, k: CayleyTable) -> NamedProduct {
    NamedProduct {
        name: name.to_string(),
        spec: CentralProductSpec { left: Arc::new(h), right: Arc::new(k), amalgam: vec![] },
    }
}

/// `H ∘ K` amalgamating the subgroups of order `min(|Z(H)|, |Z(K)|)` of the cyclic centers.
pub fn center_instance(name: &str, h: CayleyTable, k: CayleyTable) -> Result<NamedProduct> {
    Ok(NamedProduct { name: name.to_string(), spec: center_amalgam(Arc::new(h), Arc::new(k))? })
}

/// `ℤ₄ ∘ ℤ₄` amalgamating the subgroups of order 2.
pub fn z4_z4() -> Result<NamedProduct> {
    Ok(NamedProduct {
        name: "Z4∘Z4".into(),
        spec: CentralProductSpec { left: cyclic_arc(4)?, right: cyclic_arc(4)?, amalgam: vec![(2, 2)] },
    })
}

/// `E(p³, exp p) ∘ ℤ_{p²}` amalgamating the center with `⟨p⟩`.
pub fn extraspecial_with_cyclic(p: u32) -> Result<NamedProduct> {
    let h = Arc::new(extraspecial_p3(p, Exponent::P)?);
    let pp = p as usize;
    Ok(NamedProduct {
        name: format!("E({p}^3)∘Z{}", pp * pp),
        spec: CentralProductSpec { left: h, right: cyclic_arc(pp * pp)?, amalgam: vec![(1, pp)] },
    })
}

/// Groups of order at most 16 compared against the bar-resolution oracle.
pub fn oracle_catalog() -> Result<Vec<(String, Arc<CayleyTable>)>> {
    let mut out = Vec::new();
    for n in 1..=16 {
        out.push((format!("Z{n}"), cyclic_arc(n)?));
    }
    out.push(("Z2^2".into(), Arc::new(abelian(&[2, 2])?)));
    out.push(("Z2xZ4".into(), Arc::new(abelian(&[2, 4])?)));
    out.push(("Z2^3".into(), Arc::new(abelian(&[2, 2, 2])?)));
    out.push(("Z3^2".into(), Arc::new(abelian(&[3, 3])?)));
    out.push(("Z2xZ6".into(), Arc::new(abelian(&[2, 6])?)));
    out.push(("Z2xZ8".into(), Arc::new(abelian(&[2, 8])?)));
    out.push(("Z4xZ4".into(), Arc::new(abelian(&[4, 4])?)));
    out.push(("Z2^2xZ4".into(), Arc::new(abelian(&[2, 2, 4])?)));
    out.push(("Z2^4".into(), Arc::new(abelian(&[2, 2, 2, 2])?)));
    for n in [6, 8, 10, 12, 14, 16] {
        out.push((format!("D{n}"), Arc::new(dihedral(n)?)));
    }
    let q8 = Arc::new(quaternion8()?);
    out.push(("Q8".into(), q8.clone()));
    let d8 = Arc::new(dihedral(8)?);
    out.push(("D8xZ2".into(), direct_product(&d8, &cyclic_arc(2)?)?.0));
    out.push(("Q8xZ2".into(), direct_product(&q8, &cyclic_arc(2)?)?.0));
    out.push(("S3xZ2".into(), direct_product(&Arc::new(dihedral(6)?), &cyclic_arc(2)?)?.0));
    out.push(("Z4∘Z4".into(), central_product(&z4_z4()?.spec)?.0));
    out.push(("D8∘Z4".into(), amalgamate_centers(&d8, &cyclic_arc(4)?)?.0));
    Ok(out)
}

/// Groups of order at most 32 used for the Jones divisibility sweep.
pub fn jones_catalog() -> Result<Vec<(String, Arc<CayleyTable>)>> {
    let mut out = oracle_catalog()?;
    let d8 = Arc::new(dihedral(8)?);
    out.push(("D24".into(), Arc::new(dihedral(24)?)));
    out.push(("D32".into(), Arc::new(dihedral(32)?)));
    out.push(("E(27,exp3)".into(), Arc::new(extraspecial_p3(3, Exponent::P)?)));
    out.push(("E(27,exp9)".into(), Arc::new(extraspecial_p3(3, Exponent::PSquared)?)));
    out.push(("Z3xZ9".into(), Arc::new(abelian(&[3, 9])?)));
    out.push(("D8xZ4".into(), direct_product(&d8, &cyclic_arc(4)?)?.0));
    out.push(("Z2^2xZ8".into(), Arc::new(abelian(&[2, 2, 8])?)));
    out.push(("2^(1+4)+".into(), extraspecial(2, 2, true)?));
    out.push(("2^(1+4)-".into(), extraspecial(2, 2, false)?));
    Ok(out)
}
