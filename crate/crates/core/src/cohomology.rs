//! Second cohomology `H²(G, ℤ/m)` with trivial action, its `ℚ/ℤ` level
//! (the Schur multiplier), and the cocycle-level maps between such groups.
//!
//! Classes are handled through a polycyclic generating sequence of `G`.
//! A central extension of `ℤ/m` by `G` is determined by the values ("tails")
//! its chosen generator lifts take on the pc relators, so a class is a tail
//! vector modulo the changes of lift. Cocycles convert to tails by evaluating
//! relator words in the extension they define, and tails convert back to
//! cocycles by collection with rule counting.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::abelian::{abelianization, AbelianMap, FinAbGroup, Subquotient, TensorPresentation};
use crate::error::{Error, Result};
use crate::group::{CayleyTable, GroupMap, COLLECTION_STEP_CAP, MAX_ORDER};
use crate::modular::{kernel_mod, ModLattice};
use crate::subgroup::{derived_of, Subgroup};

pub(crate) fn same_group(a: &Arc<CayleyTable>, b: &Arc<CayleyTable>) -> bool {
    Arc::ptr_eq(a, b) || (a.order() == b.order() && a.table() == b.table())
}

fn md(x: i64, m: u64) -> u64 {
    x.rem_euclid(m as i64) as u64
}

/// A normalized 2-cocycle `G × G → ℤ/m`.
#[derive(Clone, PartialEq, Eq)]
pub struct Cocycle2 {
    group: Arc<CayleyTable>,
    modulus: u64,
    values: Vec<u64>,
}

impl fmt::Debug for Cocycle2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cocycle2 {{ order: {}, modulus: {} }}", self.group.order(), self.modulus)
    }
}

/// Serialized form: row-major value table with an `(order, modulus)` header.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleData {
    pub order: usize,
    pub modulus: u64,
    pub values: Vec<u64>,
}

impl Cocycle2 {
    /// Validates normalization and the cocycle identity exhaustively.
    pub fn new(group: Arc<CayleyTable>, modulus: u64, values: Vec<u64>) -> Result<Self> {
        let n = group.order();
        if modulus < 2 {
            return Err(Error::Precondition("modulus must be at least 2".into()));
        }
        if values.len() != n * n {
            return Err(Error::NotCocycle(format!("expected {} values, got {}", n * n, values.len())));
        }
        let values = values.into_iter().map(|v| v % modulus).collect();
        let f = Cocycle2 { group, modulus, values };
        if !f.is_normalized() {
            return Err(Error::NotCocycle("not normalized".into()));
        }
        if let Some((x, y, z)) = f.first_violation() {
            return Err(Error::NotCocycle(format!("identity fails at ({x}, {y}, {z})")));
        }
        Ok(f)
    }

    pub(crate) fn from_fn(group: Arc<CayleyTable>, modulus: u64, f: impl Fn(usize, usize) -> i64) -> Self {
        let n = group.order();
        let mut values = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                values.push(md(f(x, y), modulus));
            }
        }
        Cocycle2 { group, modulus, values }
    }

    pub fn zero(group: Arc<CayleyTable>, modulus: u64) -> Self {
        let n = group.order();
        Cocycle2 { group, modulus, values: vec![0; n * n] }
    }

    /// `d¹φ(x, y) = φ(y) − φ(xy) + φ(x)` for `φ` with `φ(1) = 0`.
    pub fn coboundary(group: Arc<CayleyTable>, modulus: u64, phi: &[i64]) -> Result<Self> {
        if phi.len() != group.order() || md(phi[0], modulus) != 0 {
            return Err(Error::Precondition("cochain must have one value per element and vanish at 1".into()));
        }
        let g = group.clone();
        Ok(Cocycle2::from_fn(group, modulus, |x, y| phi[y] - phi[g.mul(x, y)] + phi[x]))
    }

    pub fn group(&self) -> &Arc<CayleyTable> {
        &self.group
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn value(&self, x: usize, y: usize) -> u64 {
        self.values[x * self.group.order() + y]
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn is_normalized(&self) -> bool {
        (0..self.group.order()).all(|x| self.value(0, x) == 0 && self.value(x, 0) == 0)
    }

    fn first_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.group.order();
        let m = self.modulus;
        for x in 0..n {
            for y in 0..n {
                let xy = self.group.mul(x, y);
                let fxy = self.value(x, y);
                for z in 0..n {
                    let lhs = self.value(y, z) + self.value(x, self.group.mul(y, z));
                    let rhs = self.value(xy, z) + fxy;
                    if !(lhs + m - rhs % m).is_multiple_of(m) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_cocycle(&self) -> bool {
        self.is_normalized() && self.first_violation().is_none()
    }

    fn check_compatible(&self, other: &Cocycle2) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        if !same_group(&self.group, &other.group) {
            return Err(Error::Precondition("cocycles live on different groups".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Cocycle2) -> Result<Cocycle2> {
        self.check_compatible(other)?;
        let m = self.modulus;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| (a + b) % m).collect();
        Ok(Cocycle2 { group: self.group.clone(), modulus: m, values })
    }

    pub fn sub(&self, other: &Cocycle2) -> Result<Cocycle2> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Cocycle2 {
        let m = self.modulus;
        let k = md(k, m);
        let values = self.values.iter().map(|&a| ((a as u128 * k as u128) % m as u128) as u64).collect();
        Cocycle2 { group: self.group.clone(), modulus: m, values }
    }

    pub fn to_data(&self) -> CocycleData {
        CocycleData { order: self.group.order(), modulus: self.modulus, values: self.values.clone() }
    }

    pub fn from_data(group: Arc<CayleyTable>, data: &CocycleData) -> Result<Self> {
        if data.order != group.order() {
            return Err(Error::NotCocycle("order header does not match the group".into()));
        }
        Cocycle2::new(group, data.modulus, data.values.clone())
    }
}

/// `(h*f)(x, y) = f(h(x), h(y))`; inflation along a projection, restriction along an inclusion.
pub fn pullback_cocycle(f: &Cocycle2, h: &GroupMap) -> Result<Cocycle2> {
    if !same_group(h.target(), f.group()) {
        return Err(Error::Precondition("map does not land in the cocycle's group".into()));
    }
    Ok(Cocycle2::from_fn(h.source().clone(), f.modulus(), |x, y| f.value(h.apply(x), h.apply(y)) as i64))
}

/// A polycyclic generating sequence with prime relative orders, refining the
/// derived series.
#[derive(Clone, Debug)]
pub struct Pcgs {
    gens: Vec<usize>,
    rel_orders: Vec<u32>,
    exps: Vec<Vec<u32>>,
    power_words: Vec<Vec<u32>>,
    // conj_words[j][i] = normal form of g_i⁻¹ g_j g_i for j > i
    conj_words: Vec<Vec<Vec<u32>>>,
}

fn smallest_prime_factor(n: usize) -> usize {
    (2..=n).find(|d| n.is_multiple_of(*d)).expect("n ≥ 2")
}

impl Pcgs {
    pub fn new(g: &Arc<CayleyTable>) -> Result<Self> {
        let n = g.order();
        let mut series = vec![Subgroup::whole(g)];
        while !series.last().expect("nonempty").is_trivial() {
            let next = derived_of(series.last().expect("nonempty"));
            if next.order() == series.last().expect("nonempty").order() {
                return Err(Error::NotSolvable);
            }
            series.push(next);
        }
        let mut gens = Vec::new();
        let mut rel_orders = Vec::new();
        for w in series.windows(2) {
            let (top, bottom) = (&w[0], &w[1]);
            let mut inside = vec![false; n];
            for &x in bottom.elements() {
                inside[x] = true;
            }
            let mut size = bottom.order();
            let mut layer: Vec<(usize, u32)> = Vec::new();
            while size < top.order() {
                let x = *top.elements().iter().find(|&&x| !inside[x]).expect("proper subgroup");
                let mut k = 1;
                let mut y = x;
                while !inside[y] {
                    y = g.mul(y, x);
                    k += 1;
                }
                let p = smallest_prime_factor(k);
                let gen = g.pow(x, (k / p) as u64);
                // S' = ⋃ gen^e S; S is normal in the layer's top.
                let members: Vec<usize> = (0..n).filter(|&z| inside[z]).collect();
                let mut power = gen;
                for _ in 1..p {
                    for &s in &members {
                        inside[g.mul(power, s)] = true;
                    }
                    power = g.mul(power, gen);
                }
                size *= p;
                layer.push((gen, p as u32));
            }
            layer.reverse();
            for (gen, p) in layer {
                gens.push(gen);
                rel_orders.push(p);
            }
        }
        let k = gens.len();
        // membership of N_i = ⟨g_i, …, g_{k−1}⟩, built bottom-up
        let mut chain = vec![vec![false; n]; k + 1];
        chain[k][0] = true;
        for i in (0..k).rev() {
            let below: Vec<usize> = (0..n).filter(|&z| chain[i + 1][z]).collect();
            let mut power = 0;
            for _ in 0..rel_orders[i] {
                for &s in &below {
                    chain[i][g.mul(power, s)] = true;
                }
                power = g.mul(power, gens[i]);
            }
        }
        debug_assert!(chain[0].iter().all(|&b| b));
        let inv_gens: Vec<usize> = gens.iter().map(|&x| g.inv(x)).collect();
        let mut exps = vec![vec![0u32; k]; n];
        for (x, e) in exps.iter_mut().enumerate() {
            let mut cur = x;
            for i in 0..k {
                let mut c = cur;
                let mut ei = 0;
                while !chain[i + 1][c] {
                    c = g.mul(inv_gens[i], c);
                    ei += 1;
                }
                e[i] = ei;
                cur = c;
            }
        }
        let power_words = (0..k).map(|i| exps[g.pow(gens[i], rel_orders[i] as u64)].clone()).collect();
        let mut conj_words = vec![vec![vec![0u32; k]; k]; k];
        for j in 0..k {
            for i in 0..j {
                let c = g.mul(g.mul(inv_gens[i], gens[j]), gens[i]);
                conj_words[j][i] = exps[c].clone();
            }
        }
        Ok(Pcgs { gens, rel_orders, exps, power_words, conj_words })
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn rel_orders(&self) -> &[u32] {
        &self.rel_orders
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Normal-form exponents of an element.
    pub fn exponents(&self, x: usize) -> &[u32] {
        &self.exps[x]
    }

    fn letters(word: &[u32]) -> impl Iterator<Item = usize> + '_ {
        word.iter().enumerate().flat_map(|(g, &e)| std::iter::repeat_n(g, e as usize))
    }

    fn rule_count(&self) -> usize {
        let k = self.len();
        k + k * (k.saturating_sub(1)) / 2
    }

    fn conj_rule(&self, j: usize, i: usize) -> usize {
        // rules ordered: powers, then (j, i) for j > i in lexicographic order
        self.len() + j * (j - 1) / 2 + i
    }

    /// Relators as (lhs letters, rhs letters), indexed by rule number.
    fn rules(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let k = self.len();
        let mut rules = vec![(vec![], vec![]); self.rule_count()];
        for i in 0..k {
            rules[i] = (vec![i; self.rel_orders[i] as usize], Self::letters(&self.power_words[i]).collect());
        }
        for j in 0..k {
            for i in 0..j {
                let mut rhs = vec![i];
                rhs.extend(Self::letters(&self.conj_words[j][i]));
                rules[self.conj_rule(j, i)] = (vec![j, i], rhs);
            }
        }
        rules
    }

    /// Collection from the left of `e · letters`, counting relator applications.
    fn collect(&self, e: &mut [u32], letters: &[usize], counts: &mut [i64]) -> Result<()> {
        let k = self.len();
        let mut stack: Vec<usize> = letters.iter().rev().copied().collect();
        let mut steps = 0usize;
        while let Some(g) = stack.pop() {
            steps += 1;
            if steps > COLLECTION_STEP_CAP {
                return Err(Error::InvalidPresentation("collection step cap exceeded".into()));
            }
            if e[g + 1..].iter().all(|&x| x == 0) {
                e[g] += 1;
                if e[g] == self.rel_orders[g] {
                    e[g] = 0;
                    counts[g] += 1;
                    stack.extend(Self::letters(&self.power_words[g]).collect::<Vec<_>>().into_iter().rev());
                }
            } else {
                // l_1 ⋯ l_r · g = g · w(l_1) ⋯ w(l_r), one rule application per letter
                let mut seq = vec![g];
                for j in g + 1..k {
                    for _ in 0..e[j] {
                        counts[self.conj_rule(j, g)] += 1;
                        seq.extend(Self::letters(&self.conj_words[j][g]));
                    }
                    e[j] = 0;
                }
                stack.extend(seq.into_iter().rev());
            }
        }
        Ok(())
    }
}

/// Everything about `H²(G, ℤ/m)` that does not depend on the coefficient level.
pub struct CohomologyContext {
    group: Arc<CayleyTable>,
    modulus: u64,
    pcgs: Pcgs,
    rules: Vec<(Vec<usize>, Vec<usize>)>,
    // edge_counts[z·k + g]: rule counts of collecting nf(z)·g_g
    edge_counts: Vec<Vec<i64>>,
    // elements by increasing word length, with (parent, last letter)
    walk_order: Vec<usize>,
    parent: Vec<(usize, usize)>,
    cocycle_tails: Vec<Vec<BigInt>>,
    consistency: ModLattice,
    coboundary_tails: Vec<Vec<BigInt>>,
}

impl fmt::Debug for CohomologyContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CohomologyContext {{ order: {}, modulus: {} }}", self.group.order(), self.modulus)
    }
}

impl CohomologyContext {
    pub fn new(g: &Arc<CayleyTable>, modulus: u64) -> Result<Arc<Self>> {
        if modulus < 2 {
            return Err(Error::Precondition("modulus must be at least 2".into()));
        }
        if g.order() > MAX_ORDER {
            return Err(Error::SizeGuard { order: g.order(), limit: MAX_ORDER });
        }
        let n = g.order();
        let pcgs = Pcgs::new(g)?;
        let k = pcgs.len();
        let r = pcgs.rule_count();
        let rules = pcgs.rules();

        let mut edge_counts = Vec::with_capacity(n * k);
        for z in 0..n {
            for gi in 0..k {
                let mut e = pcgs.exps[z].clone();
                let mut counts = vec![0i64; r];
                pcgs.collect(&mut e, &[gi], &mut counts)?;
                if e != pcgs.exps[g.mul(z, pcgs.gens[gi])] {
                    return Err(Error::InvalidPresentation("collection disagrees with the group table".into()));
                }
                edge_counts.push(counts);
            }
        }

        let mut walk_order: Vec<usize> = (0..n).collect();
        walk_order.sort_by_key(|&x| (pcgs.exps[x].iter().sum::<u32>(), x));
        let mut parent = vec![(0usize, 0usize); n];
        for &y in walk_order.iter().skip(1) {
            let e = &pcgs.exps[y];
            let last = (0..k).rev().find(|&i| e[i] > 0).expect("nonidentity");
            let mut pe = e.clone();
            pe[last] -= 1;
            let py = (0..n).find(|&z| pcgs.exps[z] == pe).expect("prefix is an element");
            parent[y] = (py, last);
        }

        let mut ctx = CohomologyContext {
            group: g.clone(),
            modulus,
            pcgs,
            rules,
            edge_counts,
            walk_order,
            parent,
            cocycle_tails: vec![],
            consistency: ModLattice::new(modulus, r),
            coboundary_tails: vec![],
        };
        ctx.add_test_word_equations()?;
        ctx.solve_cocycles()?;
        ctx.coboundary_tails = ctx.lift_change_tails();
        Ok(Arc::new(ctx))
    }

    pub fn group(&self) -> &Arc<CayleyTable> {
        &self.group
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn pcgs(&self) -> &Pcgs {
        &self.pcgs
    }

    fn rank(&self) -> usize {
        self.rules.len()
    }

    fn collect_from(&self, x: usize, letters: &[usize]) -> Result<(Vec<u32>, Vec<i64>)> {
        let mut e = self.pcgs.exps[x].clone();
        let mut counts = vec![0i64; self.rank()];
        self.pcgs.collect(&mut e, letters, &mut counts)?;
        Ok((e, counts))
    }

    fn element_of(&self, e: &[u32]) -> usize {
        (0..self.group.order()).find(|&z| self.pcgs.exps[z] == e).expect("normal form of an element")
    }

    fn add_test_word_equations(&mut self) -> Result<()> {
        let k = self.pcgs.len();
        let p = |i: usize| self.pcgs.rel_orders[i] as usize;
        let mut tests: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        for a in 0..k {
            for b in 0..a {
                for c in 0..b {
                    tests.push((vec![a], vec![b, c]));
                }
                tests.push((vec![a; p(a) - 1], vec![a, b]));
                tests.push((vec![a], vec![b; p(b)]));
            }
            tests.push((vec![a], vec![a; p(a)]));
        }
        for (u, v) in tests {
            let (nf_u, _) = self.collect_from(0, &u)?;
            let xu = self.element_of(&nf_u);
            let (_, c_a) = self.collect_from(xu, &v)?;
            let (nf_v, c_v) = self.collect_from(0, &v)?;
            let letters: Vec<usize> = Pcgs::letters(&nf_v).collect();
            let (_, c_b) = self.collect_from(xu, &letters)?;
            let row: Vec<i64> = (0..self.rank()).map(|r| c_a[r] - c_v[r] - c_b[r]).collect();
            self.consistency.insert(&row);
        }
        Ok(())
    }

    /// Rule counts of the cocycle value at `(x, y)`.
    fn pair_counts(&self, x: usize, y: usize) -> Vec<i64> {
        let k = self.pcgs.len();
        let mut out = vec![0i64; self.rank()];
        let mut z = x;
        for l in Pcgs::letters(&self.pcgs.exps[y]) {
            for (o, c) in out.iter_mut().zip(&self.edge_counts[z * k + l]) {
                *o += c;
            }
            z = self.group.mul(z, self.pcgs.gens[l]);
        }
        out
    }

    /// Computes the cocycle tail lattice, adding any violated identity until every generator passes.
    fn solve_cocycles(&mut self) -> Result<()> {
        loop {
            let gens = kernel_mod(&self.consistency);
            let mut violated = None;
            for t in &gens {
                let t: Vec<i64> = t
                    .iter()
                    .map(|v| md(v.mod_floor(&BigInt::from(self.modulus)).to_i64().expect("small"), self.modulus) as i64)
                    .collect();
                if let Some(triple) = self.find_violation(&t) {
                    violated = Some(triple);
                    break;
                }
            }
            match violated {
                None => {
                    self.cocycle_tails = gens;
                    return Ok(());
                }
                Some((x, y, s)) => {
                    let xy = self.group.mul(x, y);
                    let ys = self.group.mul(y, s);
                    let (a, b, c, d) = (
                        self.pair_counts(y, s),
                        self.pair_counts(xy, s),
                        self.pair_counts(x, ys),
                        self.pair_counts(x, y),
                    );
                    let row: Vec<i64> = (0..self.rank()).map(|r| a[r] - b[r] + c[r] - d[r]).collect();
                    if self.consistency.contains(&row) {
                        return Err(Error::NotCocycle("tail equations failed to converge".into()));
                    }
                    self.consistency.insert(&row);
                }
            }
        }
    }

    fn edge_values(&self, t: &[i64]) -> Vec<u64> {
        let m = self.modulus as i64;
        self.edge_counts
            .iter()
            .map(|c| c.iter().zip(t).fold(0i64, |acc, (a, b)| (acc + (a % m) * (b % m)) % m).rem_euclid(m) as u64)
            .collect()
    }

    fn table_from_tails(&self, t: &[i64]) -> Vec<u64> {
        let n = self.group.order();
        let k = self.pcgs.len();
        let m = self.modulus;
        let c = self.edge_values(t);
        let mut f = vec![0u64; n * n];
        for &y in self.walk_order.iter().skip(1) {
            let (py, l) = self.parent[y];
            for x in 0..n {
                let z = self.group.mul(x, py);
                f[x * n + y] = (f[x * n + py] + c[z * k + l]) % m;
            }
        }
        f
    }

    /// Checks the cocycle identity on all triples `(x, y, s)` with `s` a pc generator.
    fn find_violation(&self, t: &[i64]) -> Option<(usize, usize, usize)> {
        let n = self.group.order();
        let m = self.modulus;
        let f = self.table_from_tails(t);
        for &s in &self.pcgs.gens {
            for x in 0..n {
                for y in 0..n {
                    let xy = self.group.mul(x, y);
                    let lhs = f[y * n + s] + f[x * n + self.group.mul(y, s)];
                    let rhs = f[xy * n + s] + f[x * n + y];
                    if !(lhs + 2 * m - rhs).is_multiple_of(m) {
                        return Some((x, y, s));
                    }
                }
            }
        }
        None
    }

    fn lift_change_tails(&self) -> Vec<Vec<BigInt>> {
        let k = self.pcgs.len();
        let r = self.rank();
        let mut out: Vec<Vec<BigInt>> = (0..k)
            .map(|i| {
                self.rules
                    .iter()
                    .map(|(lhs, rhs)| {
                        let c = lhs.iter().filter(|&&l| l == i).count() as i64
                            - rhs.iter().filter(|&&l| l == i).count() as i64;
                        BigInt::from(c)
                    })
                    .collect()
            })
            .collect();
        for j in 0..r {
            let mut v = vec![BigInt::from(0); r];
            v[j] = BigInt::from(self.modulus);
            out.push(v);
        }
        out
    }

    /// Tails of a cocycle: relator values in the extension it defines.
    pub(crate) fn tails_of(&self, f: impl Fn(usize, usize) -> u64) -> Vec<i64> {
        let m = self.modulus;
        let val = |word: &[usize]| -> u64 {
            let mut z = 0;
            let mut a = 0u64;
            for &l in word {
                let s = self.pcgs.gens[l];
                a = (a + f(z, s)) % m;
                z = self.group.mul(z, s);
            }
            a
        };
        self.rules.iter().map(|(lhs, rhs)| ((val(lhs) + m - val(rhs)) % m) as i64).collect()
    }

    fn cocycle_from_tails(&self, t: &[i64]) -> Cocycle2 {
        Cocycle2 { group: self.group.clone(), modulus: self.modulus, values: self.table_from_tails(t) }
    }

    fn check_cocycle(&self, f: &Cocycle2) -> Result<Vec<i64>> {
        if f.modulus() != self.modulus {
            return Err(Error::ModulusMismatch(f.modulus(), self.modulus));
        }
        if !same_group(f.group(), &self.group) {
            return Err(Error::Precondition("cocycle lives on a different group".into()));
        }
        let t = self.tails_of(|x, y| f.value(x, y));
        if !self.consistency_holds(&t) {
            return Err(Error::NotCocycle("tails violate the consistency equations".into()));
        }
        Ok(t)
    }

    fn consistency_holds(&self, t: &[i64]) -> bool {
        let m = self.modulus as i128;
        self.consistency
            .basis()
            .iter()
            .all(|row| row.iter().zip(t).map(|(&a, &b)| a as i128 * b as i128).sum::<i128>().rem_euclid(m) == 0)
    }

    /// Cocycle `β(φ)(x, y) = (φ̃(x) + φ̃(y) − φ̃(xy))/m` for `φ: G → ℤ/m` given by its values.
    pub fn bockstein_cocycle(&self, phi: &[u64]) -> Result<Cocycle2> {
        let g = &self.group;
        let m = self.modulus;
        if phi.len() != g.order() {
            return Err(Error::Precondition("homomorphism must have one value per element".into()));
        }
        let lift: Vec<i64> = phi.iter().map(|&v| (v % m) as i64).collect();
        for x in 0..g.order() {
            for y in 0..g.order() {
                if (lift[x] + lift[y] - lift[g.mul(x, y)]).rem_euclid(m as i64) != 0 {
                    return Err(Error::Precondition("values do not define a homomorphism".into()));
                }
            }
        }
        let gg = g.clone();
        Ok(Cocycle2::from_fn(g.clone(), m, move |x, y| (lift[x] + lift[y] - lift[gg.mul(x, y)]) / m as i64))
    }

    /// Basis of `Hom(G, ℤ/m)` as value tables, one per canonical generator of `G/G′`.
    pub fn hom_basis(&self) -> Result<Vec<Vec<u64>>> {
        let ab = abelianization(&self.group);
        let e = ab.group.exponent();
        if !self.modulus.is_multiple_of(e) {
            return Err(Error::ExponentMismatch { exponent: e, modulus: self.modulus });
        }
        Ok((0..ab.group.ngens())
            .map(|k| {
                let scale = self.modulus / ab.group.orders()[k];
                ab.coords.iter().map(|c| c[k] as u64 * scale).collect()
            })
            .collect())
    }

    fn bockstein_tails(&self) -> Result<Vec<Vec<i64>>> {
        self.hom_basis()?
            .iter()
            .map(|phi| {
                let b = self.bockstein_cocycle(phi)?;
                Ok(self.tails_of(|x, y| b.value(x, y)))
            })
            .collect()
    }
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// `H²(G, ℤ/m)` or, when `rational`, its quotient by the Bockstein image,
/// which is `H²(G, ℚ/ℤ) ≅ M(G)` once `|G|` divides `m`.
#[derive(Clone, Debug)]
pub struct CohomologyGroup {
    ctx: Arc<CohomologyContext>,
    rational: bool,
    sq: Subquotient,
    rep_tails: Vec<Vec<i64>>,
    reps: Vec<Cocycle2>,
}

impl CohomologyGroup {
    fn build(ctx: Arc<CohomologyContext>, rational: bool) -> Result<Self> {
        let r = ctx.rank();
        let m = ctx.modulus;
        let mut rels = ctx.coboundary_tails.clone();
        if rational {
            rels.extend(ctx.bockstein_tails()?.iter().map(|t| big(t)));
        }
        let sq = Subquotient::new(r, &ctx.cocycle_tails, &rels)?;
        let rep_tails: Vec<Vec<i64>> = (0..sq.group().ngens())
            .map(|i| {
                sq.rep(i).iter().map(|v| md(v.mod_floor(&BigInt::from(m)).to_i64().expect("small"), m) as i64).collect()
            })
            .collect();
        let reps = rep_tails.iter().map(|t| ctx.cocycle_from_tails(t)).collect();
        Ok(CohomologyGroup { ctx, rational, sq, rep_tails, reps })
    }

    pub fn context(&self) -> &Arc<CohomologyContext> {
        &self.ctx
    }

    pub fn group(&self) -> &Arc<CayleyTable> {
        &self.ctx.group
    }

    pub fn modulus(&self) -> u64 {
        self.ctx.modulus
    }

    pub fn is_rational(&self) -> bool {
        self.rational
    }

    pub fn structure(&self) -> &FinAbGroup {
        self.sq.group()
    }

    pub fn reps(&self) -> &[Cocycle2] {
        &self.reps
    }

    /// Coordinates of the class of `f` in the canonical basis.
    pub fn classify(&self, f: &Cocycle2) -> Result<Vec<i64>> {
        let t = self.ctx.check_cocycle(f)?;
        self.sq.coords(&big(&t))
    }

    pub fn is_zero_class(&self, f: &Cocycle2) -> Result<bool> {
        Ok(self.classify(f)?.iter().all(|&c| c == 0))
    }

    /// A representative cocycle of the class with the given coordinates.
    pub fn cocycle_of(&self, coords: &[i64]) -> Cocycle2 {
        let m = self.ctx.modulus as i64;
        let r = self.ctx.rank();
        let mut t = vec![0i64; r];
        for (c, rep) in coords.iter().zip(&self.rep_tails) {
            for j in 0..r {
                t[j] = (t[j] + c.rem_euclid(m) * rep[j]).rem_euclid(m);
            }
        }
        self.ctx.cocycle_from_tails(&t)
    }

    /// Serialized form: invariants and one representative table per basis class.
    pub fn to_data(&self) -> CohomologyData {
        CohomologyData {
            invariants: self.structure().invariants(),
            modulus: self.modulus(),
            reps: self.reps.iter().map(Cocycle2::to_data).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyData {
    pub invariants: Vec<u64>,
    pub modulus: u64,
    pub reps: Vec<CocycleData>,
}

/// `H²(G, ℤ/m)` with trivial action.
pub fn h2(g: &Arc<CayleyTable>, m: u64) -> Result<CohomologyGroup> {
    CohomologyGroup::build(CohomologyContext::new(g, m)?, false)
}

/// `H²(G, ℚ/ℤ)` realized as `H²(G, ℤ/m)/im β`; requires `|G|` to divide `m`.
pub fn multiplier_group(g: &Arc<CayleyTable>, m: u64) -> Result<CohomologyGroup> {
    if !m.is_multiple_of(g.order() as u64) {
        return Err(Error::ExponentMismatch { exponent: g.order() as u64, modulus: m });
    }
    CohomologyGroup::build(CohomologyContext::new(g, m)?, true)
}

/// Default modulus for a group: its order (at least 2).
pub fn default_modulus(g: &CayleyTable) -> u64 {
    (g.order() as u64).max(2)
}

/// Schur multiplier `M(G)` as invariant factors.
pub fn schur_multiplier(g: &Arc<CayleyTable>) -> Result<FinAbGroup> {
    Ok(FinAbGroup::from_orders(multiplier_group(g, default_modulus(g))?.structure().invariants()))
}

/// Subgroup of `H²(G, ℤ/m)` generated by the Bockstein classes of a basis of `Hom(G, ℤ/m)`.
#[derive(Clone, Debug)]
pub struct BocksteinImage {
    pub h2: CohomologyGroup,
    /// coordinates of each `β(φ_k)` in `h2`
    pub generators: Vec<Vec<i64>>,
    pub subgroup: FinAbGroup,
}

pub fn bockstein_image(g: &Arc<CayleyTable>, m: u64) -> Result<BocksteinImage> {
    let h = h2(g, m)?;
    let generators: Vec<Vec<i64>> =
        h.ctx.hom_basis()?.iter().map(|phi| h.classify(&h.ctx.bockstein_cocycle(phi)?)).collect::<Result<_>>()?;
    let src = FinAbGroup::from_orders(vec![m; generators.len()]);
    let inc = AbelianMap::from_columns(src, h.structure().clone(), generators.clone())?;
    let subgroup = FinAbGroup::from_orders(inc.kernel_image_cokernel().image.invariants());
    Ok(BocksteinImage { h2: h, generators, subgroup })
}

/// Matrix of a cocycle-level map on the bases of two cohomology groups.
pub fn induced_map_on_h2(
    map: impl Fn(&Cocycle2) -> Result<Cocycle2>,
    source: &CohomologyGroup,
    target: &CohomologyGroup,
) -> Result<AbelianMap> {
    let cols = source.reps().iter().map(|f| target.classify(&map(f)?)).collect::<Result<Vec<_>>>()?;
    AbelianMap::from_columns(source.structure().clone(), target.structure().clone(), cols)
}

/// Homomorphisms from a finite abelian group (given by a basis of elements of a
/// Cayley table and their orders) into `ℤ/m ⊂ ℚ/ℤ`.
#[derive(Clone, Debug)]
pub struct Characters {
    pub group: FinAbGroup,
    pub modulus: u64,
    // coordinates of every element of the subgroup (None outside it)
    coords: Vec<Option<Vec<i64>>>,
    orders: Vec<u64>,
}

impl Characters {
    /// `Hom(N, ℤ/m)` for an abelian subgroup `N`.
    pub fn of_subgroup(n: &Subgroup, m: u64) -> Result<Self> {
        if !n.is_abelian() {
            return Err(Error::Precondition("character group of a nonabelian subgroup".into()));
        }
        let (t, inc) = n.to_table()?;
        let ab = abelianization(&t);
        let e = ab.group.exponent();
        if !m.is_multiple_of(e) {
            return Err(Error::ExponentMismatch { exponent: e, modulus: m });
        }
        let mut coords = vec![None; n.parent().order()];
        for x in 0..t.order() {
            coords[inc.apply(x)] = Some(ab.coords[x].clone());
        }
        Ok(Characters { orders: ab.group.orders().to_vec(), group: ab.group, modulus: m, coords })
    }

    /// Value table (indexed by parent elements; 0 outside the subgroup) of the character with the given coordinates.
    pub fn values(&self, c: &[i64]) -> Vec<u64> {
        let m = self.modulus;
        self.coords
            .iter()
            .map(|x| match x {
                None => 0,
                Some(xc) => xc.iter().zip(c).zip(&self.orders).fold(0i64, |acc, ((&a, &b), &o)| {
                    (acc + a * b.rem_euclid(o as i64) * (m / o) as i64).rem_euclid(m as i64)
                }) as u64,
            })
            .collect()
    }

    /// Coordinates of a character given on the subgroup's canonical generators.
    pub fn coords_of(&self, values: &[u64]) -> Result<Vec<i64>> {
        let m = self.modulus;
        let mut out = Vec::with_capacity(self.orders.len());
        for (k, &o) in self.orders.iter().enumerate() {
            let gen = self
                .coords
                .iter()
                .position(|c| c.as_ref().is_some_and(|c| c.iter().enumerate().all(|(i, &v)| v == i64::from(i == k))))
                .expect("basis element present");
            let v = values[gen] % m;
            let unit = m / o;
            if !v.is_multiple_of(unit) {
                return Err(Error::IllDefinedMap("value has the wrong order".into()));
            }
            out.push((v / unit) as i64);
        }
        Ok(out)
    }
}

/// `Hom(X ⊗ Y, ℤ/m)` for abelian groups given by element bases in a common group.
#[derive(Clone, Debug)]
pub struct PairingSpace {
    pub left: Vec<(usize, u64)>,
    pub right: Vec<(usize, u64)>,
    pub tensor: TensorPresentation,
    pub modulus: u64,
}

impl PairingSpace {
    pub fn new(left: Vec<(usize, u64)>, right: Vec<(usize, u64)>, modulus: u64) -> Result<Self> {
        let a = FinAbGroup::from_orders(left.iter().map(|p| p.1).collect());
        let b = FinAbGroup::from_orders(right.iter().map(|p| p.1).collect());
        let tensor = crate::abelian::tensor_presentation(&a, &b);
        for &d in tensor.group.orders() {
            if !modulus.is_multiple_of(d) {
                return Err(Error::ExponentMismatch { exponent: d, modulus });
            }
        }
        Ok(PairingSpace { left, right, tensor, modulus })
    }

    /// The dual group; it has the same cyclic orders as the tensor product.
    pub fn group(&self) -> &FinAbGroup {
        &self.tensor.group
    }

    /// Coordinates of the pairing given by its values on basis pairs.
    pub fn coords(&self, pairing: impl Fn(usize, usize) -> u64) -> Result<Vec<i64>> {
        let m = self.modulus;
        self.tensor
            .pairs
            .iter()
            .zip(self.tensor.group.orders())
            .map(|(&(i, j), &d)| {
                let v = pairing(self.left[i].0, self.right[j].0) % m;
                let unit = m / d;
                if !v.is_multiple_of(unit) {
                    return Err(Error::IllDefinedMap("pairing value has the wrong order".into()));
                }
                Ok((v / unit) as i64)
            })
            .collect()
    }

    /// Value of the pairing with the given coordinates on basis pair `(i, j)`.
    pub fn value(&self, coords: &[i64], i: usize, j: usize) -> u64 {
        let m = self.modulus;
        self.tensor.pairs.iter().position(|&p| p == (i, j)).map_or(0, |k| {
            (coords[k].rem_euclid(self.tensor.group.orders()[k] as i64) as u64) * (m / self.tensor.group.orders()[k])
        })
    }
}

/// Element basis (lifted canonical generators) and orders of `S/S′` for a subgroup `S`.
pub fn abelian_basis(s: &Subgroup) -> Result<Vec<(usize, u64)>> {
    let (t, inc) = s.to_table()?;
    let ab = abelianization(&t);
    Ok(ab.basis_elements.iter().zip(ab.group.orders()).map(|(&b, &o)| (inc.apply(b), o)).collect())
}

/// Element basis of `G/G′` for a whole group.
pub fn abelian_basis_of(g: &Arc<CayleyTable>) -> Vec<(usize, u64)> {
    let ab = abelianization(g);
    ab.basis_elements.iter().zip(ab.group.orders()).map(|(&b, &o)| (b, o)).collect()
}

fn pairing_map(space: &PairingSpace, pairing: impl Fn(usize, usize) -> u64) -> Result<AbelianMap> {
    let m = space.modulus;
    let cols =
        space.tensor.pairs.iter().map(|&(i, j)| vec![pairing(space.left[i].0, space.right[j].0) as i64]).collect();
    AbelianMap::from_columns(space.tensor.group.clone(), FinAbGroup::from_orders(vec![m]), cols)
}

/// `ψ(f)(x̄ ⊗ n) = f(x, n) − f(n, x)` as a map `X/X′ ⊗ N → ℤ/m`.
pub fn psi(f: &Cocycle2, n: &Subgroup) -> Result<AbelianMap> {
    if !same_group(f.group(), n.parent()) {
        return Err(Error::ParentMismatch);
    }
    if !n.is_central() {
        return Err(Error::NotCentral);
    }
    let space = PairingSpace::new(abelian_basis_of(f.group()), abelian_basis(n)?, f.modulus())?;
    let m = f.modulus();
    pairing_map(&space, |x, y| (f.value(x, y) + m - f.value(y, x)) % m)
}

/// `ν(f)(h̄ ⊗ k̄) = f(h, k) − f(k, h)` as a map `H/H′ ⊗ K/K′ → ℤ/m`.
pub fn nu(f: &Cocycle2, h_emb: &GroupMap, k_emb: &GroupMap) -> Result<AbelianMap> {
    let space = nu_space(h_emb, k_emb, f.modulus())?;
    let m = f.modulus();
    pairing_map(&space, |x, y| (f.value(x, y) + m - f.value(y, x)) % m)
}

/// Pairing space `Hom(H/H′ ⊗ K/K′, ℤ/m)` with bases pushed into `G`.
pub fn nu_space(h_emb: &GroupMap, k_emb: &GroupMap, m: u64) -> Result<PairingSpace> {
    let hb = abelian_basis_of(h_emb.source()).into_iter().map(|(b, o)| (h_emb.apply(b), o)).collect();
    let kb = abelian_basis_of(k_emb.source()).into_iter().map(|(b, o)| (k_emb.apply(b), o)).collect();
    PairingSpace::new(hb, kb, m)
}

/// Cocycle `β(μ(x̄) μ(ȳ) μ(x̄ȳ)⁻¹)` on `G/N` for a homomorphism `β: N → ℤ/m`
/// given by values on the elements of `G` (ignored outside `N`).
pub fn transgress(beta: &[u64], n: &Subgroup, proj: &GroupMap, section: &[usize], m: u64) -> Result<Cocycle2> {
    let g = n.parent();
    if !same_group(proj.source(), g) {
        return Err(Error::ParentMismatch);
    }
    if !n.is_central() {
        return Err(Error::NotCentral);
    }
    if (0..g.order()).any(|x| (proj.apply(x) == 0) != n.contains(x)) {
        return Err(Error::Precondition("projection kernel differs from N".into()));
    }
    let q = proj.target().clone();
    if section.len() != q.order() || section[0] != 0 || section.iter().enumerate().any(|(c, &r)| proj.apply(r) != c) {
        return Err(Error::Precondition("invalid section".into()));
    }
    for &a in n.elements() {
        for &b in n.elements() {
            if (beta[a] + beta[b]) % m != beta[g.mul(a, b)] % m {
                return Err(Error::IllDefinedMap("β is not a homomorphism on N".into()));
            }
        }
    }
    Ok(Cocycle2::from_fn(q.clone(), m, |x, y| {
        let xy = q.mul(x, y);
        let w = g.mul(g.mul(section[x], section[y]), g.inv(section[xy]));
        beta[w] as i64
    }))
}

/// `H²(G, ℤ/m)` from the normalized cochain complex directly; an independent
/// reference for small groups.
pub fn h2_cochain_model(g: &Arc<CayleyTable>, m: u64) -> Result<FinAbGroup> {
    const LIMIT: usize = 16;
    let n = g.order();
    if n > LIMIT {
        return Err(Error::SizeGuard { order: n, limit: LIMIT });
    }
    if m < 2 {
        return Err(Error::Precondition("modulus must be at least 2".into()));
    }
    if n == 1 {
        return Ok(FinAbGroup::trivial());
    }
    let dim = (n - 1) * (n - 1);
    let idx = |x: usize, y: usize| (x - 1) * (n - 1) + (y - 1);
    let mut d2 = ModLattice::new(m, dim);
    for x in 1..n {
        for y in 1..n {
            for z in 1..n {
                let mut row = vec![0i64; dim];
                let mut put = |a: usize, b: usize, s: i64| {
                    if a != 0 && b != 0 {
                        row[idx(a, b)] += s;
                    }
                };
                put(y, z, 1);
                put(g.mul(x, y), z, -1);
                put(x, g.mul(y, z), 1);
                put(x, y, -1);
                d2.insert(&row);
            }
        }
    }
    let z = kernel_mod(&d2);
    let mut rels: Vec<Vec<BigInt>> = (1..n)
        .map(|w| {
            let mut v = vec![0i64; dim];
            for x in 1..n {
                for y in 1..n {
                    let s = i64::from(y == w) - i64::from(g.mul(x, y) == w) + i64::from(x == w);
                    v[idx(x, y)] += s;
                }
            }
            big(&v)
        })
        .collect();
    for j in 0..dim {
        let mut v = vec![BigInt::from(0); dim];
        v[j] = BigInt::from(m);
        rels.push(v);
    }
    Ok(Subquotient::new(dim, &z, &rels)?.group().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::group::build_cyclic;
    use crate::subgroup::{center, coset_representatives, quotient, subgroup_generated};

    fn arc(t: CayleyTable) -> Arc<CayleyTable> {
        Arc::new(t)
    }

    fn inv(g: &FinAbGroup) -> Vec<u64> {
        g.invariants()
    }

    #[test]
    fn pcgs_normal_forms_are_faithful() {
        for g in [
            arc(catalog::dihedral(8).unwrap()),
            arc(catalog::quaternion8().unwrap()),
            arc(catalog::extraspecial_p3(3, catalog::Exponent::PSquared).unwrap()),
            arc(catalog::dihedral(12).unwrap()),
            arc(build_cyclic(12).unwrap()),
        ] {
            let pc = Pcgs::new(&g).unwrap();
            assert_eq!(pc.rel_orders().iter().map(|&p| p as usize).product::<usize>(), g.order());
            let mut seen: Vec<Vec<u32>> = (0..g.order()).map(|x| pc.exponents(x).to_vec()).collect();
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len(), g.order());
            for x in 0..g.order() {
                let mut z = 0;
                for (i, &e) in pc.exponents(x).iter().enumerate() {
                    z = g.mul(z, g.pow(pc.gens()[i], e as u64));
                }
                assert_eq!(z, x);
            }
        }
    }

    #[test]
    fn h2_small_examples() {
        let t = arc(build_cyclic(1).unwrap());
        assert!(h2(&t, 5).unwrap().structure().is_trivial());
        let z2 = arc(build_cyclic(2).unwrap());
        assert_eq!(inv(h2(&z2, 2).unwrap().structure()), vec![2]);
        let v4 = arc(catalog::elementary_abelian(2, 2).unwrap());
        assert_eq!(inv(h2(&v4, 2).unwrap().structure()), vec![2, 2, 2]);
        let z6 = arc(build_cyclic(6).unwrap());
        assert_eq!(inv(h2(&z6, 4).unwrap().structure()), vec![2]);
    }

    #[test]
    fn brute_force_h2_of_z2() {
        // every normalized cochain on ℤ_2 is a single value f(1,1); all are cocycles,
        // and coboundaries of normalized 1-cochains vanish there.
        let z2 = arc(build_cyclic(2).unwrap());
        let mut cocycles = 0;
        for v in 0..2u64 {
            if Cocycle2::new(z2.clone(), 2, vec![0, 0, 0, v]).is_ok() {
                cocycles += 1;
            }
        }
        let b = Cocycle2::coboundary(z2.clone(), 2, &[0, 1]).unwrap();
        assert_eq!(b.value(1, 1), 0);
        assert_eq!(cocycles, h2(&z2, 2).unwrap().structure().order());
    }

    #[test]
    fn reps_are_cocycles_and_classify_to_unit_vectors() {
        for g in [
            arc(catalog::dihedral(8).unwrap()),
            arc(catalog::quaternion8().unwrap()),
            arc(catalog::elementary_abelian(2, 3).unwrap()),
            arc(catalog::abelian(&[3, 3]).unwrap()),
        ] {
            let h = h2(&g, 4.max(g.order() as u64)).unwrap();
            for (i, f) in h.reps().iter().enumerate() {
                assert!(f.is_cocycle());
                assert_eq!(h.classify(f).unwrap(), h.structure().basis_vector(i));
            }
        }
    }

    #[test]
    fn tails_roundtrip() {
        let g = arc(catalog::extraspecial_p3(3, catalog::Exponent::P).unwrap());
        let h = h2(&g, 9).unwrap();
        for (i, t) in h.rep_tails.iter().enumerate() {
            let f = h.ctx.cocycle_from_tails(t);
            assert_eq!(h.ctx.tails_of(|x, y| f.value(x, y)), *t);
            assert_eq!(h.classify(&f).unwrap(), h.structure().basis_vector(i));
        }
    }

    #[test]
    fn cochain_model_agrees() {
        for (g, m) in [
            (arc(build_cyclic(2).unwrap()), 2),
            (arc(build_cyclic(4).unwrap()), 4),
            (arc(catalog::elementary_abelian(2, 2).unwrap()), 2),
            (arc(catalog::elementary_abelian(2, 2).unwrap()), 4),
            (arc(catalog::dihedral(6).unwrap()), 6),
            (arc(catalog::quaternion8().unwrap()), 8),
            (arc(catalog::dihedral(8).unwrap()), 8),
        ] {
            assert_eq!(
                inv(&h2_cochain_model(&g, m).unwrap()),
                inv(h2(&g, m).unwrap().structure()),
                "order {}",
                g.order()
            );
        }
    }

    #[test]
    fn bockstein_examples() {
        let z3 = arc(build_cyclic(3).unwrap());
        let b = bockstein_image(&z3, 3).unwrap();
        assert_eq!(b.subgroup.order(), 3);
        assert_eq!(b.h2.structure().order(), 3);
        let v4 = arc(catalog::elementary_abelian(2, 2).unwrap());
        let b = bockstein_image(&v4, 2).unwrap();
        assert_eq!(b.subgroup.order(), 4);
        assert_eq!(inv(b.h2.structure()), vec![2, 2, 2]);
        let z6 = arc(build_cyclic(6).unwrap());
        assert!(bockstein_image(&z6, 4).is_err());
    }

    #[test]
    fn multiplier_examples() {
        for n in 1..=8 {
            assert!(schur_multiplier(&arc(build_cyclic(n).unwrap())).unwrap().is_trivial());
        }
        assert_eq!(inv(&schur_multiplier(&arc(catalog::abelian(&[2, 2]).unwrap())).unwrap()), vec![2]);
        assert_eq!(inv(&schur_multiplier(&arc(catalog::abelian(&[3, 3]).unwrap())).unwrap()), vec![3]);
        assert_eq!(inv(&schur_multiplier(&arc(catalog::dihedral(8).unwrap())).unwrap()), vec![2]);
        assert!(schur_multiplier(&arc(catalog::quaternion8().unwrap())).unwrap().is_trivial());
        let e27 = arc(catalog::extraspecial_p3(3, catalog::Exponent::P).unwrap());
        assert_eq!(inv(&schur_multiplier(&e27).unwrap()), vec![3, 3]);
        let e27b = arc(catalog::extraspecial_p3(3, catalog::Exponent::PSquared).unwrap());
        assert!(schur_multiplier(&e27b).unwrap().is_trivial());
    }

    #[test]
    fn multiplier_is_stable_under_larger_modulus() {
        let g = arc(catalog::dihedral(8).unwrap());
        let a = multiplier_group(&g, 8).unwrap();
        let b = multiplier_group(&g, 16).unwrap();
        assert_eq!(inv(a.structure()), inv(b.structure()));
        assert!(multiplier_group(&g, 12).is_err());
    }

    #[test]
    fn pullback_and_restriction() {
        let g = arc(build_cyclic(4).unwrap());
        let f = Cocycle2::zero(g.clone(), 4);
        let id = GroupMap::identity(g.clone());
        assert_eq!(pullback_cocycle(&f, &id).unwrap(), f);
        let t = Subgroup::trivial(&g);
        let (tt, inc) = t.to_table().unwrap();
        let r = pullback_cocycle(&h2(&g, 4).unwrap().reps()[0], &inc).unwrap();
        assert_eq!(r, Cocycle2::zero(tt, 4));
    }

    #[test]
    fn inflation_from_z2_to_z4() {
        let g = arc(build_cyclic(4).unwrap());
        let n = subgroup_generated(&g, &[2]);
        let (q, proj) = quotient(&g, &n).unwrap();
        // with ℤ/2 coefficients the transgression image is the kernel
        let inf2 = induced_map_on_h2(|f| pullback_cocycle(f, &proj), &h2(&q, 2).unwrap(), &h2(&g, 2).unwrap()).unwrap();
        assert_eq!(inf2.kernel_image_cokernel().kernel.order(), 2);
        // with ℤ/4 coefficients every character of ℤ_2 extends to ℤ_4, so inflation is injective
        let inf4 = induced_map_on_h2(|f| pullback_cocycle(f, &proj), &h2(&q, 4).unwrap(), &h2(&g, 4).unwrap()).unwrap();
        assert!(inf4.is_injective());
    }

    #[test]
    fn restriction_z4_to_z2_is_surjective_mod_2() {
        let g = arc(build_cyclic(4).unwrap());
        let n = subgroup_generated(&g, &[2]);
        let (nt, inc) = n.to_table().unwrap();
        let src = h2(&g, 2).unwrap();
        let tgt = h2(&nt, 2).unwrap();
        let res = induced_map_on_h2(|f| pullback_cocycle(f, &inc), &src, &tgt).unwrap();
        assert!(res.is_surjective());
    }

    #[test]
    fn transgression_examples() {
        // ℤ_4 over its ℤ_2: the extension is nonsplit
        let g = arc(build_cyclic(4).unwrap());
        let n = subgroup_generated(&g, &[2]);
        let (q, proj) = quotient(&g, &n).unwrap();
        let sec = coset_representatives(&proj);
        let beta = vec![0, 0, 1, 0];
        let f = transgress(&beta, &n, &proj, &sec, 2).unwrap();
        assert!(f.is_cocycle());
        assert!(!h2(&q, 2).unwrap().is_zero_class(&f).unwrap());
        let zero = transgress(&[0, 0, 0, 0], &n, &proj, &sec, 2).unwrap();
        assert_eq!(zero, Cocycle2::zero(q.clone(), 2));

        let e = arc(catalog::extraspecial_p3(3, catalog::Exponent::P).unwrap());
        let z = center(&e);
        let (q, proj) = quotient(&e, &z).unwrap();
        let chars = Characters::of_subgroup(&z, 3).unwrap();
        let beta = chars.values(&[1]);
        let f = transgress(&beta, &z, &proj, &coset_representatives(&proj), 3).unwrap();
        assert!(!h2(&q, 3).unwrap().is_zero_class(&f).unwrap());
    }

    #[test]
    fn psi_examples() {
        let e = arc(catalog::extraspecial_p3(3, catalog::Exponent::P).unwrap());
        let z = center(&e);
        let h = h2(&e, 27).unwrap();
        let zero = psi(&Cocycle2::zero(e.clone(), 27), &z).unwrap();
        assert!(zero.is_zero());
        for f in h.reps() {
            let phi: Vec<i64> = (0..27).map(|x| (x * x % 27) as i64).collect();
            let b = Cocycle2::coboundary(e.clone(), 27, &phi).unwrap();
            let f2 = f.add(&b).unwrap();
            assert!(psi(f, &z).unwrap().same_as(&psi(&f2, &z).unwrap()));
        }
    }

    #[test]
    fn nu_recovers_a_twist() {
        let z2 = arc(build_cyclic(2).unwrap());
        let (g, hm, km) = crate::group::direct_product(&z2, &z2).unwrap();
        // f((h,k),(h',k')) = t(h ⊗ k') with t the nonzero pairing
        let f = Cocycle2::new(
            g.clone(),
            2,
            (0..16)
                .map(|i| {
                    let (x, y) = (i / 4, i % 4);
                    ((x / 2) * (y % 2)) as u64
                })
                .collect(),
        )
        .unwrap();
        let v = nu(&f, &hm, &km).unwrap();
        assert_eq!(v.column(0), vec![1]);
    }
}
