//! Subgroups, quotients and images under homomorphisms.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{CayleyTable, GroupMap};

/// A subgroup stored as a sorted list of element indices of its parent.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: Arc<CayleyTable>,
    elements: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && same_parent(&self.parent, &other.parent)
    }
}

fn same_parent(a: &Arc<CayleyTable>, b: &Arc<CayleyTable>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Subgroup {
    /// Wraps a set of elements after checking it is a subgroup.
    pub fn from_elements(parent: &Arc<CayleyTable>, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.first() != Some(&0) {
            return Err(Error::NotSubgroup("missing identity".into()));
        }
        if elements.iter().any(|&x| x >= parent.order()) {
            return Err(Error::NotSubgroup("element out of range".into()));
        }
        let mut member = vec![false; parent.order()];
        for &x in &elements {
            member[x] = true;
        }
        for &x in &elements {
            for &y in &elements {
                if !member[parent.mul(x, y)] {
                    return Err(Error::NotSubgroup("not closed under multiplication".into()));
                }
            }
        }
        Ok(Subgroup { parent: parent.clone(), elements })
    }

    pub fn trivial(parent: &Arc<CayleyTable>) -> Self {
        Subgroup { parent: parent.clone(), elements: vec![0] }
    }

    pub fn whole(parent: &Arc<CayleyTable>) -> Self {
        Subgroup { parent: parent.clone(), elements: (0..parent.order()).collect() }
    }

    pub fn parent(&self) -> &Arc<CayleyTable> {
        &self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn is_normal(&self) -> bool {
        let g = &self.parent;
        (0..g.order()).all(|x| {
            let xi = g.inv(x);
            self.elements.iter().all(|&n| self.contains(g.mul(g.mul(xi, n), x)))
        })
    }

    pub fn is_central(&self) -> bool {
        let g = &self.parent;
        self.elements.iter().all(|&z| (0..g.order()).all(|x| g.mul(z, x) == g.mul(x, z)))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.parent;
        self.elements.iter().all(|&x| self.elements.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
    }

    /// The subgroup as a table group of its own (elements renumbered in sorted
    /// order) together with the inclusion map.
    pub fn to_table(&self) -> Result<(Arc<CayleyTable>, GroupMap)> {
        let n = self.order();
        let mut pos = vec![usize::MAX; self.parent.order()];
        for (i, &x) in self.elements.iter().enumerate() {
            pos[x] = i;
        }
        let mut mul = Vec::with_capacity(n * n);
        for &x in &self.elements {
            for &y in &self.elements {
                mul.push(pos[self.parent.mul(x, y)] as u32);
            }
        }
        let table = Arc::new(CayleyTable::from_mul(n, mul)?);
        let incl = GroupMap::new(table.clone(), self.parent.clone(), self.elements.clone())?;
        Ok((table, incl))
    }
}

impl std::fmt::Display for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.elements)
    }
}

/// Smallest subgroup containing `gens`.
pub fn subgroup_generated(g: &Arc<CayleyTable>, gens: &[usize]) -> Subgroup {
    let mut member = vec![false; g.order()];
    member[0] = true;
    let mut elements = vec![0usize];
    let mut i = 0;
    while i < elements.len() {
        let x = elements[i];
        for &s in gens {
            let y = g.mul(x, s);
            if !member[y] {
                member[y] = true;
                elements.push(y);
            }
        }
        i += 1;
    }
    elements.sort_unstable();
    Subgroup { parent: g.clone(), elements }
}

pub fn join(a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
    if !same_parent(&a.parent, &b.parent) {
        return Err(Error::ParentMismatch);
    }
    let gens: Vec<usize> = a.elements.iter().chain(&b.elements).copied().collect();
    Ok(subgroup_generated(&a.parent, &gens))
}

/// Subgroup generated by all commutators.
pub fn derived_subgroup(g: &Arc<CayleyTable>) -> Subgroup {
    let n = g.order();
    let mut comms = vec![false; n];
    for x in 0..n {
        for y in 0..x {
            comms[g.commutator(x, y)] = true;
        }
    }
    let gens: Vec<usize> = (0..n).filter(|&c| comms[c]).collect();
    subgroup_generated(g, &gens)
}

/// Derived subgroup of a subgroup, as a subgroup of the same parent.
pub fn derived_of(s: &Subgroup) -> Subgroup {
    let g = &s.parent;
    let mut gens = Vec::new();
    for &x in &s.elements {
        for &y in &s.elements {
            gens.push(g.commutator(x, y));
        }
    }
    gens.sort_unstable();
    gens.dedup();
    subgroup_generated(g, &gens)
}

pub fn center(g: &Arc<CayleyTable>) -> Subgroup {
    let n = g.order();
    let elements = (0..n).filter(|&z| (0..n).all(|x| g.mul(z, x) == g.mul(x, z))).collect();
    Subgroup { parent: g.clone(), elements }
}

pub fn intersect(a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
    if !same_parent(&a.parent, &b.parent) {
        return Err(Error::ParentMismatch);
    }
    let elements = a.elements.iter().copied().filter(|&x| b.contains(x)).collect();
    Ok(Subgroup { parent: a.parent.clone(), elements })
}

/// Quotient by a normal subgroup; cosets are numbered by increasing minimal element.
pub fn quotient(g: &Arc<CayleyTable>, n: &Subgroup) -> Result<(Arc<CayleyTable>, GroupMap)> {
    if !same_parent(g, &n.parent) {
        return Err(Error::ParentMismatch);
    }
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let order = g.order();
    let mut rep_of = vec![usize::MAX; order];
    for x in 0..order {
        if rep_of[x] != usize::MAX {
            continue;
        }
        // x is the minimum of its coset since smaller indices were already labeled
        for &m in &n.elements {
            rep_of[g.mul(x, m)] = x;
        }
    }
    let mut reps: Vec<usize> = (0..order).filter(|&x| rep_of[x] == x).collect();
    reps.sort_unstable();
    let mut label = vec![0usize; order];
    for (i, &r) in reps.iter().enumerate() {
        label[r] = i;
    }
    let image: Vec<usize> = (0..order).map(|x| label[rep_of[x]]).collect();
    let q = reps.len();
    let mut mul = Vec::with_capacity(q * q);
    for &a in &reps {
        for &b in &reps {
            mul.push(image[g.mul(a, b)] as u32);
        }
    }
    let table = Arc::new(CayleyTable::from_mul(q, mul)?);
    let proj = GroupMap::new(g.clone(), table.clone(), image)?;
    Ok((table, proj))
}

/// Minimal-index coset representatives of a quotient map, indexed by quotient element.
pub fn coset_representatives(proj: &GroupMap) -> Vec<usize> {
    let mut reps = vec![usize::MAX; proj.target().order()];
    for x in 0..proj.source().order() {
        let c = proj.apply(x);
        if reps[c] == usize::MAX {
            reps[c] = x;
        }
    }
    reps
}

pub fn image_subgroup(f: &GroupMap, s: &Subgroup) -> Result<Subgroup> {
    if !same_parent(f.source(), &s.parent) {
        return Err(Error::ParentMismatch);
    }
    let mut elements: Vec<usize> = s.elements.iter().map(|&x| f.apply(x)).collect();
    elements.sort_unstable();
    elements.dedup();
    Ok(Subgroup { parent: f.target().clone(), elements })
}

pub fn preimage_subgroup(f: &GroupMap, t: &Subgroup) -> Result<Subgroup> {
    if !same_parent(f.target(), &t.parent) {
        return Err(Error::ParentMismatch);
    }
    let elements = (0..f.source().order()).filter(|&x| t.contains(f.apply(x))).collect();
    Ok(Subgroup { parent: f.source().clone(), elements })
}

pub fn kernel(f: &GroupMap) -> Subgroup {
    let elements = (0..f.source().order()).filter(|&x| f.apply(x) == 0).collect();
    Subgroup { parent: f.source().clone(), elements }
}

/// Every subgroup of `s`, by closing joins of cyclic subgroups. Intended for
/// the small central subgroups the checks iterate over.
pub fn all_subgroups(s: &Subgroup) -> Vec<Subgroup> {
    let g = &s.parent;
    let mut cyclic: Vec<Subgroup> = Vec::new();
    for &x in &s.elements {
        let c = subgroup_generated(g, &[x]);
        if !cyclic.contains(&c) {
            cyclic.push(c);
        }
    }
    let mut all: Vec<Subgroup> = cyclic.clone();
    let mut i = 0;
    while i < all.len() {
        for c in &cyclic {
            let j = join(&all[i], c).expect("same parent");
            if !all.contains(&j) {
                all.push(j);
            }
        }
        i += 1;
    }
    all.sort_by(|a, b| a.order().cmp(&b.order()).then(a.elements.cmp(&b.elements)));
    all
}
