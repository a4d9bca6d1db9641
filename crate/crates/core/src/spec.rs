//! JSON group specifications.
//!
//! ```json
//! {"kind": "central",
//!  "left": {"kind": "dihedral", "order": 8},
//!  "right": {"kind": "quaternion"}}
//! ```
//!
//! A `central` spec without `amalgam` identifies the subgroups of order
//! `min(|Z(H)|, |Z(K)|)` of two cyclic centers.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::catalog::{self, NamedProduct};
use crate::error::{Error, Result};
use crate::group::{
    build_cyclic, central_product, direct_product, from_pc_presentation, CayleyTable, CentralProductSpec,
    PcPresentation,
};
use crate::lab::CentralProductInstance;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GroupSpec {
    Cyclic {
        n: usize,
    },
    /// `ℤ_{n₁} × ⋯ × ℤ_{n_k}`
    Abelian {
        factors: Vec<usize>,
    },
    Dihedral {
        order: usize,
    },
    Quaternion,
    /// Extraspecial group of order `p^{2n+1}`.
    Extraspecial {
        p: u32,
        n: usize,
        #[serde(default = "default_true")]
        plus: bool,
    },
    Pc {
        rel_orders: Vec<u32>,
        #[serde(default)]
        powers: Vec<(usize, Vec<u32>)>,
        #[serde(default)]
        commutators: Vec<(usize, usize, Vec<u32>)>,
    },
    Direct {
        factors: Vec<GroupSpec>,
    },
    Central {
        left: Box<GroupSpec>,
        right: Box<GroupSpec>,
        /// Pairs `(a, b)` of central elements identified with each other.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        amalgam: Option<Vec<(usize, usize)>>,
    },
    /// One of the four worked examples; `n` is used by Examples 1 and 4.
    Example {
        number: u8,
        p: u32,
        #[serde(default = "default_one")]
        n: usize,
    },
}

fn default_true() -> bool {
    true
}

fn default_one() -> usize {
    1
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec> {
        serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("specs serialize")
    }

    pub fn build(&self) -> Result<Arc<CayleyTable>> {
        match self {
            GroupSpec::Cyclic { n } => {
                if *n == 0 {
                    return Err(Error::InvalidSpec("cyclic order must be positive".into()));
                }
                Ok(Arc::new(build_cyclic(*n)?))
            }
            GroupSpec::Abelian { factors } => {
                if factors.contains(&0) {
                    return Err(Error::InvalidSpec("abelian factors must be positive".into()));
                }
                Ok(Arc::new(catalog::abelian(factors)?))
            }
            GroupSpec::Dihedral { order } => {
                if *order < 2 || order % 2 != 0 {
                    return Err(Error::InvalidSpec("dihedral order must be even".into()));
                }
                Ok(Arc::new(catalog::dihedral(*order)?))
            }
            GroupSpec::Quaternion => Ok(Arc::new(catalog::quaternion8()?)),
            GroupSpec::Extraspecial { p, n, plus } => {
                check_prime(*p)?;
                catalog::extraspecial(*p, *n, *plus)
            }
            GroupSpec::Pc { rel_orders, powers, commutators } => {
                let pres = PcPresentation {
                    rel_orders: rel_orders.clone(),
                    powers: powers.clone(),
                    commutators: commutators.clone(),
                };
                Ok(Arc::new(from_pc_presentation(&pres)?))
            }
            GroupSpec::Direct { factors } => {
                let mut g = Arc::new(build_cyclic(1)?);
                for f in factors {
                    g = direct_product(&g, &f.build()?)?.0;
                }
                Ok(g)
            }
            GroupSpec::Central { .. } | GroupSpec::Example { .. } => {
                let product = self.product()?.expect("product kinds have product data");
                Ok(central_product(&product.spec)?.0)
            }
        }
    }

    /// The central-product data behind `central`, `example` and two-factor
    /// `direct` specs.
    pub fn product(&self) -> Result<Option<NamedProduct>> {
        match self {
            GroupSpec::Central { left, right, amalgam } => {
                let (h, k) = (left.build()?, right.build()?);
                let name = format!("({})∘({})", left.label(), right.label());
                let spec = match amalgam {
                    Some(pairs) => CentralProductSpec { left: h, right: k, amalgam: pairs.clone() },
                    None => catalog::center_instance(&name, (*h).clone(), (*k).clone())?.spec,
                };
                Ok(Some(NamedProduct { name, spec }))
            }
            GroupSpec::Direct { factors } if factors.len() == 2 => {
                let (h, k) = (factors[0].build()?, factors[1].build()?);
                let name = format!("({})×({})", factors[0].label(), factors[1].label());
                Ok(Some(catalog::direct_instance(&name, (*h).clone(), (*k).clone())))
            }
            GroupSpec::Example { number, p, n } => {
                check_prime(*p)?;
                let product = match number {
                    1 => catalog::example1(*p, *n)?,
                    2 => catalog::example2(*p)?,
                    3 => catalog::example3(*p)?,
                    4 => catalog::example4(*p, *n)?,
                    _ => return Err(Error::InvalidSpec(format!("no example {number}"))),
                };
                Ok(Some(product))
            }
            _ => Ok(None),
        }
    }

    pub fn instance(&self) -> Result<CentralProductInstance> {
        let p = self.product()?.ok_or_else(|| Error::InvalidSpec("spec does not describe a central product".into()))?;
        CentralProductInstance::from_named(&p)
    }

    /// Short human-readable name.
    pub fn label(&self) -> String {
        match self {
            GroupSpec::Cyclic { n } => format!("Z{n}"),
            GroupSpec::Abelian { factors } => factors.iter().map(|f| format!("Z{f}")).collect::<Vec<_>>().join("×"),
            GroupSpec::Dihedral { order } => format!("D{order}"),
            GroupSpec::Quaternion => "Q8".into(),
            GroupSpec::Extraspecial { p, n, plus } => {
                format!("{p}^(1+{}){}", 2 * n, if *plus { "+" } else { "-" })
            }
            GroupSpec::Pc { rel_orders, .. } => {
                format!("pc({})", rel_orders.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(","))
            }
            GroupSpec::Direct { factors } => factors.iter().map(|f| f.label()).collect::<Vec<_>>().join("×"),
            GroupSpec::Central { left, right, .. } => format!("{}∘{}", left.label(), right.label()),
            GroupSpec::Example { number, p, n } => format!("example{number}(p={p},n={n})"),
        }
    }
}

fn check_prime(p: u32) -> Result<()> {
    if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
        return Err(Error::InvalidSpec(format!("{p} is not prime")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_nested_specs() {
        let s = GroupSpec::parse(
            r#"{"kind":"central","left":{"kind":"dihedral","order":8},"right":{"kind":"quaternion"}}"#,
        )
        .unwrap();
        assert_eq!(s.build().unwrap().order(), 32);
        let d = GroupSpec::parse(r#"{"kind":"direct","factors":[{"kind":"cyclic","n":2},{"kind":"cyclic","n":3}]}"#)
            .unwrap();
        assert_eq!(d.build().unwrap().order(), 6);
        assert!(d.instance().unwrap().a.is_trivial());
    }

    #[test]
    fn pc_spec_builds_extraspecial() {
        let s = GroupSpec::parse(r#"{"kind":"pc","rel_orders":[3,3,3],"commutators":[[1,0,[0,0,1]]]}"#).unwrap();
        let g = s.build().unwrap();
        assert_eq!(g.order(), 27);
        assert_eq!(g.exponent(), 3);
    }

    #[test]
    fn example_spec_matches_catalog() {
        let s = GroupSpec::parse(r#"{"kind":"example","number":1,"p":3}"#).unwrap();
        let inst = s.instance().unwrap();
        assert_eq!(inst.order(), 81);
    }

    #[test]
    fn roundtrip() {
        let s = GroupSpec::Central {
            left: Box::new(GroupSpec::Cyclic { n: 4 }),
            right: Box::new(GroupSpec::Cyclic { n: 4 }),
            amalgam: Some(vec![(2, 2)]),
        };
        assert_eq!(GroupSpec::parse(&s.to_json()).unwrap(), s);
    }

    #[test]
    fn malformed_specs_are_rejected() {
        for text in [
            "{",
            r#"{"kind":"cyclic"}"#,
            r#"{"kind":"torus","n":3}"#,
            r#"{"kind":"cyclic","n":0}"#,
            r#"{"kind":"dihedral","order":7}"#,
            r#"{"kind":"extraspecial","p":4,"n":1}"#,
            r#"{"kind":"example","number":9,"p":3}"#,
        ] {
            let r = GroupSpec::parse(text).and_then(|s| s.build());
            assert!(matches!(r, Err(Error::InvalidSpec(_))), "{text}: {r:?}");
        }
    }

    #[test]
    fn size_guard_is_reported() {
        let s = GroupSpec::parse(r#"{"kind":"cyclic","n":1000}"#).unwrap();
        assert!(matches!(s.build(), Err(Error::SizeGuard { .. })));
    }
}
