use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use proptest::prelude::*;

use schurlab::abelian::{smith_normal_form, AbelianMap, FinAbGroup, IntMatrix};
use schurlab::catalog;
use schurlab::cohomology::{multiplier_group, nu, psi, Cocycle2, CohomologyGroup};
use schurlab::lab::CentralProductInstance;
use schurlab::spec::GroupSpec;

fn d8_d8() -> &'static (CentralProductInstance, CohomologyGroup) {
    static CELL: OnceLock<(CentralProductInstance, CohomologyGroup)> = OnceLock::new();
    CELL.get_or_init(|| {
        let p =
            catalog::center_instance("D8∘D8", catalog::dihedral(8).unwrap(), catalog::dihedral(8).unwrap()).unwrap();
        let inst = CentralProductInstance::from_named(&p).unwrap();
        let cg = multiplier_group(&inst.g, inst.modulus).unwrap();
        (inst, cg)
    })
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=8, 1usize..=8).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r))
}

fn abelian_group() -> impl Strategy<Value = FinAbGroup> {
    prop::collection::vec(1u64..=12, 0..4).prop_map(FinAbGroup::from_orders)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn smith_form_reconstructs(rows in matrix()) {
        let m = IntMatrix::from_rows(&rows);
        let snf = smith_normal_form(&m);
        prop_assert!(snf.u.mul(&m).mul(&snf.v) == snf.s);
        prop_assert!(snf.u.mul(&snf.u_inv) == IntMatrix::identity(m.rows()));
        prop_assert!(snf.v.mul(&snf.v_inv) == IntMatrix::identity(m.cols()));
        let d = snf.diagonal();
        let zero = BigInt::from(0);
        for w in d.windows(2) {
            prop_assert!(w[1] == zero || (w[0] != zero && &w[1] % &w[0] == zero));
        }
    }

    #[test]
    fn kernel_and_image_orders_multiply(g in abelian_group(), h in abelian_group(), seed in prop::collection::vec(-20i64..20, 16)) {
        let cols: Vec<Vec<i64>> = g
            .orders()
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                // a column is admissible when d·column = 0 in h
                (0..h.ngens())
                    .map(|j| {
                        let e = h.orders()[j];
                        let step = (e / num_integer::gcd(d, e)) as i64;
                        seed[(i * 4 + j) % seed.len()] * step
                    })
                    .collect()
            })
            .collect();
        let f = AbelianMap::from_columns(g.clone(), h.clone(), cols).unwrap();
        let kic = f.kernel_image_cokernel();
        prop_assert_eq!(kic.kernel.order() * kic.image.order(), g.order());
        prop_assert_eq!(kic.image.order() * kic.cokernel.order(), h.order());
        prop_assert!(f.then(&AbelianMap::identity(&h)).unwrap().same_as(&f));
    }

    #[test]
    fn psi_and_nu_are_class_invariants(class in prop::collection::vec(0i64..8, 5), phi in prop::collection::vec(0i64..32, 32)) {
        let (inst, cg) = d8_d8();
        let f = cg.cocycle_of(&cg.structure().reduce(&class[..cg.structure().ngens()]));
        let mut phi = phi;
        phi[0] = 0;
        let g = f.add(&Cocycle2::coboundary(inst.g.clone(), inst.modulus, &phi).unwrap()).unwrap();
        prop_assert!(g.is_cocycle());
        prop_assert_eq!(cg.classify(&f).unwrap(), cg.classify(&g).unwrap());
        prop_assert!(psi(&f, &inst.a).unwrap().same_as(&psi(&g, &inst.a).unwrap()));
        prop_assert!(nu(&f, &inst.h_emb, &inst.k_emb).unwrap().same_as(&nu(&g, &inst.h_emb, &inst.k_emb).unwrap()));
    }

    #[test]
    fn classification_is_additive(a in prop::collection::vec(0i64..8, 5), b in prop::collection::vec(0i64..8, 5)) {
        let (_, cg) = d8_d8();
        let n = cg.structure().ngens();
        let (fa, fb) = (cg.cocycle_of(&a[..n]), cg.cocycle_of(&b[..n]));
        let sum: Vec<i64> = a[..n].iter().zip(&b[..n]).map(|(x, y)| x + y).collect();
        prop_assert_eq!(cg.classify(&fa.add(&fb).unwrap()).unwrap(), cg.structure().reduce(&sum));
    }

    #[test]
    fn cyclic_and_abelian_specs_round_trip(factors in prop::collection::vec(1usize..=6, 1..4)) {
        let spec = GroupSpec::Abelian { factors: factors.clone() };
        let parsed = GroupSpec::parse(&spec.to_json()).unwrap();
        prop_assert_eq!(&parsed, &spec);
        let g = parsed.build().unwrap();
        prop_assert_eq!(g.order(), factors.iter().product::<usize>());
        let mut sorted = multiplier_group(&g, (g.order() as u64).max(2)).unwrap().structure().invariants();
        sorted.sort();
        // M(ℤ_{n₁} × ⋯) = ⊕_{i<j} ℤ_{gcd(nᵢ, nⱼ)}
        let mut expected = FinAbGroup::from_orders(
            (0..factors.len())
                .flat_map(|i| (i + 1..factors.len()).map(move |j| (i, j)))
                .map(|(i, j)| num_integer::gcd(factors[i], factors[j]) as u64)
                .collect(),
        )
        .invariants();
        expected.sort();
        prop_assert_eq!(sorted, expected);
    }
}

#[test]
fn direct_product_matches_trivial_central_product() {
    let h = Arc::new(catalog::dihedral(8).unwrap());
    let k = Arc::new(catalog::quaternion8().unwrap());
    let (g, _, _) = schurlab::group::direct_product(&h, &k).unwrap();
    let p = catalog::direct_instance("D8×Q8", (*h).clone(), (*k).clone());
    let inst = CentralProductInstance::from_named(&p).unwrap();
    assert_eq!(g.order(), inst.order());
    assert_eq!(g.order_profile(), inst.g.order_profile());
}
