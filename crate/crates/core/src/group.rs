//! Finite groups as explicit Cayley tables.
//!
//! Elements are canonical indices `0..order` and the identity is always `0`.
//! Every constructor validates the group axioms exhaustively, so a
//! [`CayleyTable`] value is always a group.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest group order the toolkit accepts.
pub const MAX_ORDER: usize = 512;

/// Hard cap on collection steps for a single multiplication in a pc presentation.
pub const COLLECTION_STEP_CAP: usize = 1_000_000;

/// A finite group given by its full multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct CayleyTable {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    gen_hint: Option<Vec<usize>>,
}

impl std::fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CayleyTable")
            .field("order", &self.order)
            .field("gen_hint", &self.gen_hint)
            .finish_non_exhaustive()
    }
}

impl CayleyTable {
    /// Builds a table from a row-major multiplication table, checking identity,
    /// Latin-square, inverse and associativity laws.
    pub fn from_mul(order: usize, mul: Vec<u32>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::SizeGuard { order, limit: MAX_ORDER });
        }
        if mul.len() != order * order {
            return Err(Error::InvalidTable(format!("expected {} entries, got {}", order * order, mul.len())));
        }
        if mul.iter().any(|&v| v as usize >= order) {
            return Err(Error::InvalidTable("entry out of range".into()));
        }
        for x in 0..order {
            if mul[x] as usize != x || mul[x * order] as usize != x {
                return Err(Error::InvalidTable("index 0 is not the identity".into()));
            }
        }
        let mut seen = vec![0u32; order];
        for x in 0..order {
            let stamp = x as u32 + 1;
            for y in 0..order {
                let v = mul[x * order + y] as usize;
                if seen[v] == stamp {
                    return Err(Error::InvalidTable(format!("row {x} is not a permutation")));
                }
                seen[v] = stamp;
            }
        }
        seen.iter_mut().for_each(|s| *s = 0);
        for y in 0..order {
            let stamp = y as u32 + 1;
            for x in 0..order {
                let v = mul[x * order + y] as usize;
                if seen[v] == stamp {
                    return Err(Error::InvalidTable(format!("column {y} is not a permutation")));
                }
                seen[v] = stamp;
            }
        }
        let mut inv = vec![0u32; order];
        for x in 0..order {
            let row = &mul[x * order..(x + 1) * order];
            let y = row.iter().position(|&v| v == 0).expect("Latin row contains the identity");
            inv[x] = y as u32;
        }
        for x in 0..order {
            for y in 0..order {
                let xy = mul[x * order + y] as usize;
                let row_xy = &mul[xy * order..(xy + 1) * order];
                let row_y = &mul[y * order..(y + 1) * order];
                let row_x = &mul[x * order..(x + 1) * order];
                for z in 0..order {
                    if row_xy[z] != row_x[row_y[z] as usize] {
                        return Err(Error::InvalidTable(format!("associativity fails at ({x}, {y}, {z})")));
                    }
                }
            }
        }
        Ok(CayleyTable { order, mul, inv, gen_hint: None })
    }

    /// Same as [`CayleyTable::from_mul`] but records a generating set.
    pub fn with_gen_hint(mut self, gens: Vec<usize>) -> Self {
        self.gen_hint = Some(gens);
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x] as usize
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn gen_hint(&self) -> Option<&[usize]> {
        self.gen_hint.as_deref()
    }

    /// `x⁻¹ y⁻¹ x y`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let xi = self.inv(x);
        let yi = self.inv(y);
        self.mul(self.mul(xi, yi), self.mul(x, y))
    }

    pub fn pow(&self, x: usize, k: u64) -> usize {
        let mut acc = 0;
        let mut base = x;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Least `k ≥ 1` with `x^k = 1`.
    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Sorted multiset of element orders.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order).map(|x| self.element_order(x)).collect();
        v.sort_unstable();
        v
    }

    /// Maximum element order.
    pub fn exponent(&self) -> usize {
        (0..self.order).map(|x| self.element_order(x)).fold(1, num_integer::lcm)
    }

    /// Canonical serialization: the order followed by the row-major table.
    pub fn canonical_serialization(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(1 + self.mul.len());
        out.push(self.order as u32);
        out.extend_from_slice(&self.mul);
        out
    }

    /// Row-major multiplication table.
    pub fn table(&self) -> &[u32] {
        &self.mul
    }
}

/// A homomorphism between table groups, stored as the image of every element.
#[derive(Clone, Debug)]
pub struct GroupMap {
    source: Arc<CayleyTable>,
    target: Arc<CayleyTable>,
    image: Vec<usize>,
}

impl GroupMap {
    /// Checks the homomorphism law exhaustively.
    pub fn new(source: Arc<CayleyTable>, target: Arc<CayleyTable>, image: Vec<usize>) -> Result<Self> {
        if image.len() != source.order() {
            return Err(Error::NotHomomorphism("image list has wrong length".into()));
        }
        if image.iter().any(|&v| v >= target.order()) {
            return Err(Error::NotHomomorphism("image out of range".into()));
        }
        if image[0] != 0 {
            return Err(Error::NotHomomorphism("identity not preserved".into()));
        }
        for x in 0..source.order() {
            for y in 0..source.order() {
                if image[source.mul(x, y)] != target.mul(image[x], image[y]) {
                    return Err(Error::NotHomomorphism(format!("fails at ({x}, {y})")));
                }
            }
        }
        Ok(GroupMap { source, target, image })
    }

    pub fn identity(group: Arc<CayleyTable>) -> Self {
        let image = (0..group.order()).collect();
        GroupMap { source: group.clone(), target: group, image }
    }

    pub fn source(&self) -> &Arc<CayleyTable> {
        &self.source
    }

    pub fn target(&self) -> &Arc<CayleyTable> {
        &self.target
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupMap) -> Result<GroupMap> {
        if !Arc::ptr_eq(&self.target, &other.source) && *self.target != *other.source {
            return Err(Error::NotHomomorphism("composition of mismatched maps".into()));
        }
        let image = self.image.iter().map(|&x| other.image[x]).collect();
        Ok(GroupMap { source: self.source.clone(), target: other.target.clone(), image })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        self.image.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        for &y in &self.image {
            seen[y] = true;
        }
        seen.into_iter().all(|s| s)
    }
}

/// `ℤ/n` with `i · j = (i + j) mod n`.
pub fn build_cyclic(n: usize) -> Result<CayleyTable> {
    if n == 0 {
        return Err(Error::InvalidTable("cyclic group of order 0".into()));
    }
    if n > MAX_ORDER {
        return Err(Error::SizeGuard { order: n, limit: MAX_ORDER });
    }
    let mut mul = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            mul.push(((i + j) % n) as u32);
        }
    }
    let gens = if n > 1 { vec![1] } else { vec![] };
    Ok(CayleyTable::from_mul(n, mul)?.with_gen_hint(gens))
}

/// `G1 × G2` with element `(a, b)` at index `a·|G2| + b`, plus both embeddings.
pub fn direct_product(g1: &Arc<CayleyTable>, g2: &Arc<CayleyTable>) -> Result<(Arc<CayleyTable>, GroupMap, GroupMap)> {
    let (n1, n2) = (g1.order(), g2.order());
    let n = n1 * n2;
    if n > MAX_ORDER {
        return Err(Error::SizeGuard { order: n, limit: MAX_ORDER });
    }
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        let (a, b) = (x / n2, x % n2);
        for y in 0..n {
            let (c, d) = (y / n2, y % n2);
            mul.push((g1.mul(a, c) * n2 + g2.mul(b, d)) as u32);
        }
    }
    let mut gens: Vec<usize> = Vec::new();
    if let Some(h) = g1.gen_hint() {
        gens.extend(h.iter().map(|&a| a * n2));
    }
    if let Some(h) = g2.gen_hint() {
        gens.extend(h.iter().copied());
    }
    let table = Arc::new(CayleyTable::from_mul(n, mul)?.with_gen_hint(gens));
    let left = GroupMap::new(g1.clone(), table.clone(), (0..n1).map(|a| a * n2).collect())?;
    let right = GroupMap::new(g2.clone(), table.clone(), (0..n2).collect())?;
    Ok((table, left, right))
}

/// Data for an external central product `(H × K)/U`.
#[derive(Clone, Debug)]
pub struct CentralProductSpec {
    pub left: Arc<CayleyTable>,
    pub right: Arc<CayleyTable>,
    /// Pairs `(a, φ(a))` generating `A ≤ Z(H)` and its image in `Z(K)`.
    pub amalgam: Vec<(usize, usize)>,
}

/// `(H × K)/U` with `U = {(a, φ(a)⁻¹)}`, plus the maps `H → G` and `K → G`.
pub fn central_product(spec: &CentralProductSpec) -> Result<(Arc<CayleyTable>, GroupMap, GroupMap)> {
    let (h, k) = (&spec.left, &spec.right);
    for &(a, b) in &spec.amalgam {
        if a >= h.order() || b >= k.order() {
            return Err(Error::InvalidAmalgam("element index out of range".into()));
        }
        if !is_central(h, a) {
            return Err(Error::InvalidAmalgam(format!("{a} is not central in the left factor")));
        }
        if !is_central(k, b) {
            return Err(Error::InvalidAmalgam(format!("{b} is not central in the right factor")));
        }
    }
    // Extend a ↦ φ(a) over ⟨a⟩ by closure, checking it stays a well-defined bijection.
    let mut phi: BTreeMap<usize, usize> = BTreeMap::new();
    phi.insert(0, 0);
    let mut frontier = vec![0usize];
    while let Some(x) = frontier.pop() {
        let fx = phi[&x];
        for &(a, b) in &spec.amalgam {
            let y = h.mul(x, a);
            let fy = k.mul(fx, b);
            match phi.get(&y) {
                Some(&old) if old != fy => {
                    return Err(Error::InvalidAmalgam("amalgam does not define a map".into()));
                }
                Some(_) => {}
                None => {
                    phi.insert(y, fy);
                    frontier.push(y);
                }
            }
        }
    }
    let mut targets: Vec<usize> = phi.values().copied().collect();
    targets.sort_unstable();
    targets.dedup();
    if targets.len() != phi.len() {
        return Err(Error::InvalidAmalgam("amalgam map is not injective".into()));
    }
    for (&x, &fx) in &phi {
        for (&y, &fy) in &phi {
            if phi.get(&h.mul(x, y)) != Some(&k.mul(fx, fy)) {
                return Err(Error::InvalidAmalgam("amalgam map is not a homomorphism".into()));
            }
        }
    }
    // Enumerate cosets of U directly on pairs (x, y) ↦ x·|K| + y; labels are minimal pair indices.
    let n2 = k.order();
    let npairs = h.order() * n2;
    let order = npairs / phi.len();
    if order > MAX_ORDER {
        return Err(Error::SizeGuard { order, limit: MAX_ORDER });
    }
    let u: Vec<(usize, usize)> = phi.iter().map(|(&a, &b)| (a, k.inv(b))).collect();
    let mut label = vec![usize::MAX; npairs];
    let mut reps = Vec::with_capacity(order);
    for idx in 0..npairs {
        if label[idx] != usize::MAX {
            continue;
        }
        let (x, y) = (idx / n2, idx % n2);
        for &(a, b) in &u {
            label[h.mul(x, a) * n2 + k.mul(y, b)] = reps.len();
        }
        reps.push(idx);
    }
    let mut mul = Vec::with_capacity(order * order);
    for &r in &reps {
        for &t in &reps {
            let prod = h.mul(r / n2, t / n2) * n2 + k.mul(r % n2, t % n2);
            mul.push(label[prod] as u32);
        }
    }
    let mut gens: Vec<usize> = Vec::new();
    if let Some(hint) = h.gen_hint() {
        gens.extend(hint.iter().map(|&a| label[a * n2]));
    }
    if let Some(hint) = k.gen_hint() {
        gens.extend(hint.iter().map(|&b| label[b]));
    }
    let g = Arc::new(CayleyTable::from_mul(order, mul)?.with_gen_hint(gens));
    let hmap = GroupMap::new(h.clone(), g.clone(), (0..h.order()).map(|x| label[x * n2]).collect())?;
    let kmap = GroupMap::new(k.clone(), g.clone(), (0..n2).map(|y| label[y]).collect())?;
    Ok((g, hmap, kmap))
}

fn is_central(g: &CayleyTable, a: usize) -> bool {
    (0..g.order()).all(|x| g.mul(a, x) == g.mul(x, a))
}

/// A polycyclic presentation with generators `g_0, …, g_{n-1}`.
///
/// Words are exponent vectors in normal form `g_0^{e_0} ⋯ g_{n-1}^{e_{n-1}}`.
/// Omitted power and commutator rules are trivial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PcPresentation {
    pub rel_orders: Vec<u32>,
    /// `(i, w)`: `g_i^{rel_orders[i]} = w`.
    #[serde(default)]
    pub powers: Vec<(usize, Vec<u32>)>,
    /// `(j, i, w)` with `j > i`: `[g_j, g_i] = w`.
    #[serde(default)]
    pub commutators: Vec<(usize, usize, Vec<u32>)>,
}

impl PcPresentation {
    pub fn ngens(&self) -> usize {
        self.rel_orders.len()
    }

    pub fn order(&self) -> usize {
        self.rel_orders.iter().map(|&r| r as usize).product()
    }

    /// Index of a normal-form word: mixed radix with the last generator least significant.
    pub fn index_of(&self, word: &[u32]) -> usize {
        word.iter().zip(&self.rel_orders).fold(0, |acc, (&e, &r)| acc * r as usize + e as usize)
    }

    pub fn word_of(&self, mut index: usize) -> Vec<u32> {
        let mut w = vec![0u32; self.ngens()];
        for i in (0..self.ngens()).rev() {
            let r = self.rel_orders[i] as usize;
            w[i] = (index % r) as u32;
            index /= r;
        }
        w
    }

    fn validate(&self) -> Result<()> {
        let n = self.ngens();
        if self.rel_orders.iter().any(|&r| r < 2) {
            return Err(Error::InvalidPresentation("relative orders must be at least 2".into()));
        }
        let check_word = |w: &Vec<u32>, min_gen: usize| -> Result<()> {
            if w.len() != n {
                return Err(Error::InvalidPresentation("word has wrong length".into()));
            }
            for (g, &e) in w.iter().enumerate() {
                if e >= self.rel_orders[g] {
                    return Err(Error::InvalidPresentation("word is not in normal form".into()));
                }
                if e != 0 && g < min_gen {
                    return Err(Error::InvalidPresentation("rule involves a generator that is too early".into()));
                }
            }
            Ok(())
        };
        for (i, w) in &self.powers {
            if *i >= n {
                return Err(Error::InvalidPresentation("power rule index out of range".into()));
            }
            check_word(w, i + 1)?;
        }
        for (j, i, w) in &self.commutators {
            if *j >= n || i >= j {
                return Err(Error::InvalidPresentation("commutator rule needs j > i".into()));
            }
            check_word(w, i + 1)?;
        }
        Ok(())
    }
}

struct Collector<'a> {
    pres: &'a PcPresentation,
    powers: Vec<Vec<u32>>,
    // comms[j][i] for j > i
    comms: Vec<Vec<Vec<u32>>>,
}

impl<'a> Collector<'a> {
    fn new(pres: &'a PcPresentation) -> Self {
        let n = pres.ngens();
        let mut powers = vec![vec![0u32; n]; n];
        for (i, w) in &pres.powers {
            powers[*i] = w.clone();
        }
        let mut comms = vec![vec![vec![0u32; n]; n]; n];
        for (j, i, w) in &pres.commutators {
            comms[*j][*i] = w.clone();
        }
        Collector { pres, powers, comms }
    }

    fn push_word_reversed(stack: &mut Vec<usize>, word: &[u32]) {
        for (g, &e) in word.iter().enumerate().rev() {
            for _ in 0..e {
                stack.push(g);
            }
        }
    }

    /// Collection from the left: multiplies the normal form `e` by `g_gen`.
    fn times_generator(&self, e: &mut [u32], gen: usize) -> Result<()> {
        let n = self.pres.ngens();
        let mut stack = vec![gen];
        let mut steps = 0usize;
        while let Some(g) = stack.pop() {
            steps += 1;
            if steps > COLLECTION_STEP_CAP {
                return Err(Error::InvalidPresentation("collection step cap exceeded".into()));
            }
            if e[g + 1..].iter().all(|&x| x == 0) {
                e[g] += 1;
                if e[g] == self.pres.rel_orders[g] {
                    e[g] = 0;
                    Self::push_word_reversed(&mut stack, &self.powers[g]);
                }
            } else {
                // t · g = g · t^g and g_j^g = g_j [g_j, g].
                let tail: Vec<u32> = e[g + 1..].to_vec();
                e[g + 1..].iter_mut().for_each(|x| *x = 0);
                let mut seq: Vec<usize> = vec![g];
                for (off, &ej) in tail.iter().enumerate() {
                    let j = g + 1 + off;
                    for _ in 0..ej {
                        seq.push(j);
                        for (h, &c) in self.comms[j][g].iter().enumerate() {
                            for _ in 0..c {
                                seq.push(h);
                            }
                        }
                    }
                }
                debug_assert!(seq.iter().all(|&x| x < n));
                stack.extend(seq.into_iter().rev());
            }
        }
        Ok(())
    }
}

/// Builds the Cayley table of a consistent pc presentation. Element indices
/// follow [`PcPresentation::index_of`].
pub fn from_pc_presentation(pres: &PcPresentation) -> Result<CayleyTable> {
    pres.validate()?;
    let n = pres.ngens();
    let order = pres.order();
    if order > MAX_ORDER {
        return Err(Error::SizeGuard { order, limit: MAX_ORDER });
    }
    let collector = Collector::new(pres);
    // right[x * n + g] = x · g_g
    let mut right = vec![0usize; order * n];
    for x in 0..order {
        for g in 0..n {
            let mut w = pres.word_of(x);
            collector.times_generator(&mut w, g)?;
            right[x * n + g] = pres.index_of(&w);
        }
    }
    let mut mul = vec![0u32; order * order];
    for y in 0..order {
        let word = pres.word_of(y);
        for x in 0..order {
            let mut z = x;
            for (g, &e) in word.iter().enumerate() {
                for _ in 0..e {
                    z = right[z * n + g];
                }
            }
            mul[x * order + y] = z as u32;
        }
    }
    let gens = (0..n).map(|g| pres.index_of(&unit_word(n, g))).collect();
    CayleyTable::from_mul(order, mul)
        .map(|t| t.with_gen_hint(gens))
        .map_err(|e| Error::InvalidPresentation(format!("inconsistent presentation: {e}")))
}

fn unit_word(n: usize, g: usize) -> Vec<u32> {
    let mut w = vec![0u32; n];
    w[g] = 1;
    w
}

pub fn element_order(g: &CayleyTable, x: usize) -> usize {
    g.element_order(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_basics() {
        let z1 = build_cyclic(1).unwrap();
        assert_eq!(z1.order(), 1);
        let z4 = build_cyclic(4).unwrap();
        assert_eq!(z4.element_order(1), 4);
        assert_eq!(z4.element_order(2), 2);
        let z6 = build_cyclic(6).unwrap();
        let orders: Vec<usize> = (0..6).map(|x| z6.element_order(x)).collect();
        assert_eq!(orders, vec![1, 6, 3, 2, 3, 6]);
        assert_eq!(element_order(&z6, 2), 3);
        assert_eq!(element_order(&z6, 0), 1);
    }

    #[test]
    fn rejects_non_group() {
        // x·y = 0 for all y breaks the Latin property
        let bad = vec![0, 1, 1, 0, 0, 0, 0, 0, 0];
        assert!(CayleyTable::from_mul(3, bad).is_err());
        assert!(matches!(build_cyclic(600), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn direct_product_of_coprime_cyclics() {
        let z2 = Arc::new(build_cyclic(2).unwrap());
        let z3 = Arc::new(build_cyclic(3).unwrap());
        let (g, l, r) = direct_product(&z2, &z3).unwrap();
        assert_eq!(g.order(), 6);
        assert!((0..6).any(|x| g.element_order(x) == 6));
        assert!(l.is_injective() && r.is_injective());
    }

    #[test]
    fn direct_product_with_trivial() {
        let z4 = Arc::new(build_cyclic(4).unwrap());
        let one = Arc::new(build_cyclic(1).unwrap());
        let (g, _, _) = direct_product(&z4, &one).unwrap();
        assert_eq!(g.order_profile(), z4.order_profile());
    }

    #[test]
    fn pc_cyclic_and_heisenberg() {
        let p5 = PcPresentation { rel_orders: vec![5], powers: vec![], commutators: vec![] };
        let z5 = from_pc_presentation(&p5).unwrap();
        assert_eq!(z5.order(), 5);
        assert!(z5.is_abelian());

        let heis =
            PcPresentation { rel_orders: vec![3, 3, 3], powers: vec![], commutators: vec![(1, 0, vec![0, 0, 1])] };
        let h = from_pc_presentation(&heis).unwrap();
        assert_eq!(h.order(), 27);
        assert_eq!(h.exponent(), 3);
        assert!((1..27).all(|x| h.element_order(x) == 3));
        // [g1, g0] = g2 holds in the table
        let (g0, g1, g2) = (heis.index_of(&[1, 0, 0]), heis.index_of(&[0, 1, 0]), heis.index_of(&[0, 0, 1]));
        assert_eq!(h.commutator(g1, g0), g2);
    }

    #[test]
    fn pc_inconsistent_is_rejected() {
        // g0^2 = g1 with g1 of relative order 2, and g1 not commuting with g0 via
        // [g1, g0] = g1 would force g1 = 1.
        let bad = PcPresentation {
            rel_orders: vec![2, 2],
            powers: vec![(0, vec![0, 1])],
            commutators: vec![(1, 0, vec![0, 1])],
        };
        assert!(from_pc_presentation(&bad).is_err());
    }

    #[test]
    fn central_product_z4_z4() {
        let z4 = Arc::new(build_cyclic(4).unwrap());
        let spec = CentralProductSpec { left: z4.clone(), right: z4.clone(), amalgam: vec![(2, 2)] };
        let (g, h, k) = central_product(&spec).unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.is_abelian());
        // invariants (4, 2): four elements of order 4, three of order 2
        assert_eq!(g.order_profile(), vec![1, 2, 2, 2, 4, 4, 4, 4]);
        assert!(h.is_injective() && k.is_injective());
    }

    #[test]
    fn central_product_rejects_non_central() {
        let d8 = Arc::new(crate::catalog::dihedral(8).unwrap());
        let z2 = Arc::new(build_cyclic(2).unwrap());
        // a reflection is not central in D8
        let refl = (1..8).find(|&x| !is_central(&d8, x) && d8.element_order(x) == 2).unwrap();
        let spec = CentralProductSpec { left: d8, right: z2, amalgam: vec![(refl, 1)] };
        assert!(matches!(central_product(&spec), Err(Error::InvalidAmalgam(_))));
    }

    #[test]
    fn central_product_rejects_bad_isomorphism() {
        let z4 = Arc::new(build_cyclic(4).unwrap());
        let z2 = Arc::new(build_cyclic(2).unwrap());
        let spec = CentralProductSpec { left: z4, right: z2, amalgam: vec![(1, 1)] };
        assert!(matches!(central_product(&spec), Err(Error::InvalidAmalgam(_))));
    }
}
