//! Finite abelian groups: integer Smith normal form, invariant factors,
//! subquotients of lattices, homomorphisms with kernels/images/cokernels,
//! tensor products and duals.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::CayleyTable;
use crate::subgroup::{derived_subgroup, quotient};

/// Dense integer matrix with arbitrary-precision entries.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigInt {
        &mut self.data[r * self.cols + c]
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m[(i, j)] = v.into();
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, cols: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Determinant by fraction-free elimination (Bareiss). Square matrices only.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row_dst += q · row_src
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * q;
            self.data[dst * self.cols + j] += v;
        }
    }

    /// col_dst += q · col_src
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * q;
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(&mut self.data[r * self.cols + j]);
            self.data[r * self.cols + j] = v;
        }
    }

    fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let v = -std::mem::take(&mut self.data[i * self.cols + c]);
            self.data[i * self.cols + c] = v;
        }
    }
}

/// `S = U·M·V` with `S` diagonal, `s_i | s_{i+1}`, `U`, `V` unimodular.
#[derive(Clone, Debug)]
pub struct Snf {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
    pub rank: usize,
}

impl Snf {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.s[(i, i)].clone()).collect()
    }
}

/// Smith normal form with minimal-absolute-value pivoting.
pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let (r, c) = (m.rows, m.cols);
    let mut s = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut u_inv = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);
    let mut v_inv = IntMatrix::identity(c);

    // Each helper keeps (U, U⁻¹) and (V, V⁻¹) in sync with the operation on S.
    let row_swap = |s: &mut IntMatrix, u: &mut IntMatrix, ui: &mut IntMatrix, a: usize, b: usize| {
        s.swap_rows(a, b);
        u.swap_rows(a, b);
        ui.swap_cols(a, b);
    };
    let col_swap = |s: &mut IntMatrix, v: &mut IntMatrix, vi: &mut IntMatrix, a: usize, b: usize| {
        s.swap_cols(a, b);
        v.swap_cols(a, b);
        vi.swap_rows(a, b);
    };
    // row_dst += q row_src
    let row_add = |s: &mut IntMatrix, u: &mut IntMatrix, ui: &mut IntMatrix, dst: usize, src: usize, q: &BigInt| {
        s.add_row(dst, src, q);
        u.add_row(dst, src, q);
        ui.add_col(src, dst, &-q);
    };
    // col_dst += q col_src
    let col_add = |s: &mut IntMatrix, v: &mut IntMatrix, vi: &mut IntMatrix, dst: usize, src: usize, q: &BigInt| {
        s.add_col(dst, src, q);
        v.add_col(dst, src, q);
        vi.add_row(src, dst, &-q);
    };

    let mut t = 0;
    while t < r.min(c) {
        // global minimal nonzero pivot in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..c {
                let x = &s[(i, j)];
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < s[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        row_swap(&mut s, &mut u, &mut u_inv, t, pi);
        col_swap(&mut s, &mut v, &mut v_inv, t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..r {
                if !s[(i, t)].is_zero() {
                    let q = -s[(i, t)].div_floor(&s[(t, t)]);
                    row_add(&mut s, &mut u, &mut u_inv, i, t, &q);
                    if !s[(i, t)].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..c {
                if !s[(t, j)].is_zero() {
                    let q = -s[(t, j)].div_floor(&s[(t, t)]);
                    col_add(&mut s, &mut v, &mut v_inv, j, t, &q);
                    if !s[(t, j)].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                // move the smallest remainder in row/column t to the pivot
                let mut best = (t, t);
                for i in t + 1..r {
                    if !s[(i, t)].is_zero() && s[(i, t)].abs() < s[best].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..c {
                    if !s[(t, j)].is_zero() && s[(t, j)].abs() < s[best].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    row_swap(&mut s, &mut u, &mut u_inv, t, best.0);
                } else if best.1 != t {
                    col_swap(&mut s, &mut v, &mut v_inv, t, best.1);
                }
                continue;
            }
            // divisibility of the trailing block by the pivot
            let mut bad = None;
            'scan: for i in t + 1..r {
                for j in t + 1..c {
                    if !s[(i, j)].is_multiple_of(&s[(t, t)]) {
                        bad = Some(i);
                        break 'scan;
                    }
                }
            }
            match bad {
                Some(i) => row_add(&mut s, &mut u, &mut u_inv, t, i, &BigInt::one()),
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
        t += 1;
    }
    let rank = (0..r.min(c)).take_while(|&i| !s[(i, i)].is_zero()).count();
    Snf { s, u, v, u_inv, v_inv, rank }
}

/// Integer-like scalar for elimination with overflow detection.
trait Scalar: Clone + PartialEq + fmt::Debug {
    fn s_is_zero(&self) -> bool;
    fn abs_lt(&self, other: &Self) -> bool;
    fn is_unit(&self) -> bool;
    /// `self - q·b`, `None` on overflow.
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self>;
    fn s_div_floor(&self, b: &Self) -> Self;
    fn to_big(&self) -> BigInt;
}

impl Scalar for i64 {
    fn s_is_zero(&self) -> bool {
        *self == 0
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        q.checked_mul(*b).and_then(|p| self.checked_sub(p))
    }
    fn s_div_floor(&self, b: &Self) -> Self {
        Integer::div_floor(self, b)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn s_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.abs() < other.abs()
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        Some(self - q * b)
    }
    fn s_div_floor(&self, b: &Self) -> Self {
        Integer::div_floor(self, b)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Diagonal entries of a diagonalization (not necessarily a divisibility chain),
/// or `None` if an intermediate value overflowed.
fn diagonalize<T: Scalar>(rows: usize, cols: usize, mut a: Vec<Vec<T>>) -> Option<Vec<T>> {
    let mut diag = Vec::new();
    let mut live_rows: Vec<usize> = (0..rows).collect();
    let mut live_cols: Vec<bool> = vec![true; cols];
    loop {
        // pick a pivot of minimal absolute value; stop early on a unit
        let mut best: Option<(usize, usize)> = None;
        'search: for (ri, &i) in live_rows.iter().enumerate() {
            for j in 0..cols {
                if !live_cols[j] || a[i][j].s_is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| a[i][j].abs_lt(&a[live_rows[bi]][bj])) {
                    best = Some((ri, j));
                    if a[i][j].is_unit() {
                        break 'search;
                    }
                }
            }
        }
        let Some((ri, pj)) = best else { break };
        let mut pi = live_rows[ri];
        let mut pj = pj;
        loop {
            let mut clean = true;
            for &i in &live_rows {
                if i == pi || a[i][pj].s_is_zero() {
                    continue;
                }
                let q = a[i][pj].s_div_floor(&a[pi][pj]);
                let (src, dst) = if i < pi {
                    let (lo, hi) = a.split_at_mut(pi);
                    (&hi[0], &mut lo[i])
                } else {
                    let (lo, hi) = a.split_at_mut(i);
                    (&lo[pi], &mut hi[0])
                };
                for j in 0..cols {
                    if !src[j].s_is_zero() {
                        dst[j] = dst[j].sub_mul(&q, &src[j])?;
                    }
                }
                if !a[i][pj].s_is_zero() {
                    clean = false;
                }
            }
            for j in 0..cols {
                if j == pj || !live_cols[j] || a[pi][j].s_is_zero() {
                    continue;
                }
                let q = a[pi][j].s_div_floor(&a[pi][pj]);
                for &i in &live_rows {
                    if !a[i][pj].s_is_zero() {
                        let v = a[i][j].sub_mul(&q, &a[i][pj])?;
                        a[i][j] = v;
                    }
                }
                if !a[pi][j].s_is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // move to the smallest nonzero in the pivot row/column
            let mut best = (pi, pj);
            for &i in &live_rows {
                if !a[i][pj].s_is_zero() && a[i][pj].abs_lt(&a[best.0][best.1]) {
                    best = (i, pj);
                }
            }
            for j in 0..cols {
                if live_cols[j] && !a[pi][j].s_is_zero() && a[pi][j].abs_lt(&a[best.0][best.1]) {
                    best = (pi, j);
                }
            }
            pi = best.0;
            pj = best.1;
        }
        diag.push(a[pi][pj].clone());
        live_rows.retain(|&i| i != pi);
        live_cols[pj] = false;
    }
    Some(diag)
}

/// Nonzero diagonal entries of the Smith form (as positive integers, in any
/// order) of a matrix given by rows of machine integers. Runs in `i64` and
/// falls back to arbitrary precision on overflow.
pub fn smith_diagonal(rows: usize, cols: usize, entries: Vec<Vec<i64>>) -> Vec<BigInt> {
    smith_diagonal_with(rows, cols, || entries.clone())
}

/// Like [`smith_diagonal`], with the matrix produced by `build`; it is called
/// a second time only if the machine-integer pass overflows.
pub fn smith_diagonal_with(rows: usize, cols: usize, build: impl Fn() -> Vec<Vec<i64>>) -> Vec<BigInt> {
    if let Some(d) = diagonalize::<i64>(rows, cols, build()) {
        return d.iter().map(|x| x.to_big().abs()).collect();
    }
    let big: Vec<Vec<BigInt>> = build().into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
    diagonalize::<BigInt>(rows, cols, big)
        .expect("bigint elimination cannot overflow")
        .into_iter()
        .map(|x| x.abs())
        .collect()
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Canonical invariant factors (`d₁ | d₂ | ⋯`, all ≥ 2) of `⊕ ℤ/o_i`.
pub fn canonical_invariants(orders: &[u64]) -> Vec<u64> {
    let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for &o in orders {
        assert!(o >= 1, "cyclic factor of order 0");
        for (p, e) in factorize(o) {
            by_prime.entry(p).or_default().push(e);
        }
    }
    let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
    let mut inv = vec![1u64; len];
    for (p, mut exps) in by_prime {
        exps.sort_unstable_by(|a, b| b.cmp(a));
        for (k, e) in exps.into_iter().enumerate() {
            inv[len - 1 - k] *= p.pow(e);
        }
    }
    inv
}

/// A finite abelian group `⊕ ℤ/o_i` on a distinguished generating tuple.
///
/// Groups produced by structure computations carry canonical invariant
/// factors as their orders; direct sums concatenate orders and are compared
/// through [`FinAbGroup::invariants`].
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FinAbGroup {
    orders: Vec<u64>,
}

impl fmt::Debug for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.invariants())
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.invariants())
    }
}

impl FinAbGroup {
    pub fn trivial() -> Self {
        FinAbGroup { orders: vec![] }
    }

    /// Group with the given generator orders (any order ≥ 1; order-1 generators are kept).
    pub fn from_orders(orders: Vec<u64>) -> Self {
        assert!(orders.iter().all(|&o| o >= 1));
        FinAbGroup { orders }
    }

    /// Canonical group from a list of invariant factors; checks the divisibility chain.
    pub fn from_invariants(invariants: Vec<u64>) -> Result<Self> {
        if invariants.iter().any(|&d| d < 2) || invariants.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(Error::Precondition(format!("{invariants:?} is not an invariant-factor chain")));
        }
        Ok(FinAbGroup { orders: invariants })
    }

    /// `ℤ_p^(rank)`.
    pub fn elementary(p: u64, rank: usize) -> Self {
        FinAbGroup { orders: vec![p; rank] }
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn ngens(&self) -> usize {
        self.orders.len()
    }

    pub fn invariants(&self) -> Vec<u64> {
        canonical_invariants(&self.orders)
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |a, &b| a.lcm(&b))
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_isomorphic(&self, other: &FinAbGroup) -> bool {
        self.invariants() == other.invariants()
    }

    pub fn is_elementary_abelian(&self) -> bool {
        let inv = self.invariants();
        inv.iter().all(|&d| factorize(d).len() == 1 && factorize(d)[0].1 == 1) && inv.windows(2).all(|w| w[0] == w[1])
    }

    pub fn direct_sum(&self, other: &FinAbGroup) -> FinAbGroup {
        let mut orders = self.orders.clone();
        orders.extend_from_slice(&other.orders);
        FinAbGroup { orders }
    }

    pub fn direct_sum_all(parts: &[&FinAbGroup]) -> FinAbGroup {
        FinAbGroup { orders: parts.iter().flat_map(|g| g.orders.iter().copied()).collect() }
    }

    /// Reduces a coordinate vector into canonical range.
    pub fn reduce(&self, x: &[i64]) -> Vec<i64> {
        x.iter().zip(&self.orders).map(|(&v, &o)| v.rem_euclid(o as i64)).collect()
    }

    pub fn zero(&self) -> Vec<i64> {
        vec![0; self.orders.len()]
    }

    pub fn is_zero_element(&self, x: &[i64]) -> bool {
        self.reduce(x).iter().all(|&v| v == 0)
    }

    /// All elements, in lexicographic coordinate order. Intended for small groups.
    pub fn elements(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for &o in &self.orders {
            let mut next = Vec::with_capacity(out.len() * o as usize);
            for e in &out {
                for v in 0..o as i64 {
                    let mut e2 = e.clone();
                    e2.push(v);
                    next.push(e2);
                }
            }
            out = next;
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<i64> {
        let mut v = self.zero();
        v[i] = 1;
        v
    }
}

/// A finite abelian group realized as `L / R` for lattices `R ⊆ L ⊆ ℤ^n`,
/// with a canonical basis and a coordinate map.
#[derive(Clone, Debug)]
pub struct Subquotient {
    group: FinAbGroup,
    ambient_dim: usize,
    // basis of L: l_i = d_i · (column i of U⁻¹)
    u: IntMatrix,
    d: Vec<BigInt>,
    // quotient coordinates: P · (L-coordinates), reduced mod invariants
    p: IntMatrix,
    keep: Vec<usize>,
    reps: Vec<Vec<BigInt>>,
}

impl Subquotient {
    /// `span(gens) / span(rels)`; every relation must lie in the span of `gens`
    /// and the quotient must be finite.
    pub fn new(ambient_dim: usize, gens: &[Vec<BigInt>], rels: &[Vec<BigInt>]) -> Result<Self> {
        let lmat = IntMatrix::from_columns(ambient_dim, gens);
        let snf = smith_normal_form(&lmat);
        let rank = snf.rank;
        let d: Vec<BigInt> = snf.diagonal();
        let mut coords_cols = Vec::with_capacity(rels.len());
        for r in rels {
            let ur = snf.u.mul_vec(r);
            let mut c = Vec::with_capacity(rank);
            for (i, x) in ur.iter().enumerate() {
                if i < rank {
                    let (q, rem) = x.div_rem(&d[i]);
                    if !rem.is_zero() {
                        return Err(Error::Precondition("relation outside the generated lattice".into()));
                    }
                    c.push(q);
                } else if !x.is_zero() {
                    return Err(Error::Precondition("relation outside the generated lattice".into()));
                }
            }
            coords_cols.push(c);
        }
        let cmat = IntMatrix::from_columns(rank, &coords_cols);
        let qsnf = smith_normal_form(&cmat);
        if qsnf.rank < rank {
            return Err(Error::InfiniteGroup);
        }
        let e = qsnf.diagonal();
        let keep: Vec<usize> = (0..rank).filter(|&k| !e[k].is_one()).collect();
        let orders: Vec<u64> = keep.iter().map(|&k| e[k].to_u64().expect("invariant fits u64")).collect();
        // L-basis vectors in ambient coordinates
        let lbasis: Vec<Vec<BigInt>> =
            (0..rank).map(|i| (0..ambient_dim).map(|a| &snf.u_inv[(a, i)] * &d[i]).collect()).collect();
        let reps = keep
            .iter()
            .map(|&k| {
                let c: Vec<BigInt> = (0..rank).map(|i| qsnf.u_inv[(i, k)].clone()).collect();
                let mut x = vec![BigInt::zero(); ambient_dim];
                for (i, ci) in c.iter().enumerate() {
                    if ci.is_zero() {
                        continue;
                    }
                    for a in 0..ambient_dim {
                        x[a] += ci * &lbasis[i][a];
                    }
                }
                x
            })
            .collect();
        Ok(Subquotient {
            group: FinAbGroup { orders },
            ambient_dim,
            u: snf.u,
            d: d[..rank].to_vec(),
            p: qsnf.u,
            keep,
            reps,
        })
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    /// Ambient representative of the `i`-th canonical generator.
    pub fn rep(&self, i: usize) -> &[BigInt] {
        &self.reps[i]
    }

    /// Coordinates of `x ∈ L` with respect to the canonical generators.
    pub fn coords(&self, x: &[BigInt]) -> Result<Vec<i64>> {
        assert_eq!(x.len(), self.ambient_dim);
        let ux = self.u.mul_vec(x);
        let rank = self.d.len();
        let mut c = Vec::with_capacity(rank);
        for (i, v) in ux.iter().enumerate() {
            if i < rank {
                let (q, rem) = v.div_rem(&self.d[i]);
                if !rem.is_zero() {
                    return Err(Error::Precondition("element outside the generated lattice".into()));
                }
                c.push(q);
            } else if !v.is_zero() {
                return Err(Error::Precondition("element outside the generated lattice".into()));
            }
        }
        let pc = self.p.mul_vec(&c);
        Ok(self
            .keep
            .iter()
            .zip(&self.group.orders)
            .map(|(&k, &o)| pc[k].mod_floor(&BigInt::from(o)).to_i64().expect("small"))
            .collect())
    }
}

fn big_vec(x: &[i64]) -> Vec<BigInt> {
    x.iter().map(|&v| BigInt::from(v)).collect()
}

fn unit_vec(n: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::one();
    v
}

/// Invariant factors of `ℤ^ngens / rowspace(rel)`, 1's dropped.
pub fn invariants_of_presentation(rel: &IntMatrix, ngens: usize) -> Result<FinAbGroup> {
    if rel.cols() != ngens {
        return Err(Error::Precondition("relation matrix has wrong width".into()));
    }
    let snf = smith_normal_form(rel);
    if snf.rank < ngens {
        return Err(Error::InfiniteGroup);
    }
    let orders: Vec<u64> =
        snf.diagonal().into_iter().filter(|d| !d.is_one()).map(|d| d.to_u64().expect("fits")).collect();
    Ok(FinAbGroup { orders })
}

/// `G/G'` with its canonical basis and the coordinate vector of every element.
#[derive(Clone, Debug)]
pub struct Abelianization {
    pub group: FinAbGroup,
    /// coordinates of each element of `G`
    pub coords: Vec<Vec<i64>>,
    /// an element of `G` mapping to each canonical generator
    pub basis_elements: Vec<usize>,
}

pub fn abelianization(g: &std::sync::Arc<CayleyTable>) -> Abelianization {
    let d = derived_subgroup(g);
    let (q, proj) = quotient(g, &d).expect("derived subgroup is normal");
    let qn = q.order();
    // greedy generating set of Q by decreasing element order
    let mut gens: Vec<usize> = Vec::new();
    let mut reached = vec![false; qn];
    reached[0] = true;
    let mut by_order: Vec<usize> = (1..qn).collect();
    by_order.sort_by_key(|&x| std::cmp::Reverse(q.element_order(x)));
    for &x in &by_order {
        if reached[x] {
            continue;
        }
        gens.push(x);
        let sub = crate::subgroup::subgroup_generated(&q, &gens);
        for &y in sub.elements() {
            reached[y] = true;
        }
    }
    let r = gens.len();
    // BFS tree: exponent vector for each element of Q
    let mut vecs: Vec<Option<Vec<i64>>> = vec![None; qn];
    vecs[0] = Some(vec![0; r]);
    let mut queue = std::collections::VecDeque::from([0usize]);
    let mut rels: Vec<Vec<BigInt>> = Vec::new();
    while let Some(x) = queue.pop_front() {
        let vx = vecs[x].clone().expect("visited");
        for (i, &s) in gens.iter().enumerate() {
            let y = q.mul(x, s);
            let mut w = vx.clone();
            w[i] += 1;
            match &vecs[y] {
                None => {
                    vecs[y] = Some(w);
                    queue.push_back(y);
                }
                Some(vy) => {
                    let rel: Vec<i64> = w.iter().zip(vy).map(|(a, b)| a - b).collect();
                    if rel.iter().any(|&v| v != 0) {
                        rels.push(big_vec(&rel));
                    }
                }
            }
        }
    }
    let gens_l: Vec<Vec<BigInt>> = (0..r).map(|i| unit_vec(r, i)).collect();
    let sq = Subquotient::new(r, &gens_l, &rels).expect("finite abelian quotient");
    let qcoords: Vec<Vec<i64>> =
        (0..qn).map(|x| sq.coords(&big_vec(vecs[x].as_ref().expect("reached"))).expect("in lattice")).collect();
    let coords = (0..g.order()).map(|x| qcoords[proj.apply(x)].clone()).collect();
    let basis_elements = (0..sq.group().ngens())
        .map(|k| {
            let rep: Vec<i64> = sq.rep(k).iter().map(|v| v.to_i64().expect("small")).collect();
            // element of Q with these exponents, lifted to G
            let mut y = 0;
            for (i, &e) in rep.iter().enumerate() {
                let e = e.rem_euclid(q.element_order(gens[i]) as i64) as u64;
                y = q.mul(y, q.pow(gens[i], e));
            }
            (0..g.order()).find(|&x| proj.apply(x) == y).expect("surjective")
        })
        .collect();
    Abelianization { group: sq.group().clone(), coords, basis_elements }
}

/// A homomorphism between finite abelian groups; column `j` holds the image of
/// source generator `j` in target coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianMap {
    source: FinAbGroup,
    target: FinAbGroup,
    matrix: Vec<Vec<i64>>,
}

/// Kernel, image and cokernel of an [`AbelianMap`].
#[derive(Clone, Debug)]
pub struct KerImCoker {
    pub kernel: FinAbGroup,
    pub image: FinAbGroup,
    pub cokernel: FinAbGroup,
    /// kernel generators in source coordinates
    pub kernel_gens: Vec<Vec<i64>>,
}

impl AbelianMap {
    /// `columns[j]` is the image of source generator `j`.
    pub fn from_columns(source: FinAbGroup, target: FinAbGroup, columns: Vec<Vec<i64>>) -> Result<Self> {
        if columns.len() != source.ngens() || columns.iter().any(|c| c.len() != target.ngens()) {
            return Err(Error::IllDefinedMap("matrix shape does not match groups".into()));
        }
        let t = target.ngens();
        let mut matrix = vec![vec![0i64; source.ngens()]; t];
        for (j, col) in columns.iter().enumerate() {
            for i in 0..t {
                matrix[i][j] = col[i].rem_euclid(target.orders[i] as i64);
            }
        }
        let f = AbelianMap { source, target, matrix };
        f.check_well_defined()?;
        Ok(f)
    }

    pub fn zero(source: FinAbGroup, target: FinAbGroup) -> Self {
        let matrix = vec![vec![0; source.ngens()]; target.ngens()];
        AbelianMap { source, target, matrix }
    }

    pub fn identity(g: &FinAbGroup) -> Self {
        let n = g.ngens();
        let matrix = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        AbelianMap { source: g.clone(), target: g.clone(), matrix }
    }

    fn check_well_defined(&self) -> Result<()> {
        for (j, &a) in self.source.orders.iter().enumerate() {
            for (i, &b) in self.target.orders.iter().enumerate() {
                if (self.matrix[i][j] as i128 * a as i128).rem_euclid(b as i128) != 0 {
                    return Err(Error::IllDefinedMap(format!(
                        "generator {j} of order {a} maps to an element whose order does not divide it"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &FinAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FinAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        self.matrix.iter().map(|row| row[j]).collect()
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        let v: Vec<i64> = self
            .matrix
            .iter()
            .map(|row| row.iter().zip(x).map(|(&a, &b)| (a as i128 * b as i128) as i64).sum())
            .collect();
        self.target.reduce(&v)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &AbelianMap) -> Result<AbelianMap> {
        if self.target.orders != other.source.orders {
            return Err(Error::IllDefinedMap("composition of mismatched maps".into()));
        }
        let cols = (0..self.source.ngens()).map(|j| other.apply(&self.column(j))).collect();
        AbelianMap::from_columns(self.source.clone(), other.target.clone(), cols)
    }

    pub fn add(&self, other: &AbelianMap) -> Result<AbelianMap> {
        if self.source.orders != other.source.orders || self.target.orders != other.target.orders {
            return Err(Error::IllDefinedMap("sum of mismatched maps".into()));
        }
        let cols = (0..self.source.ngens())
            .map(|j| self.column(j).iter().zip(other.column(j)).map(|(a, b)| a + b).collect())
            .collect();
        AbelianMap::from_columns(self.source.clone(), self.target.clone(), cols)
    }

    pub fn negate(&self) -> AbelianMap {
        let cols = (0..self.source.ngens()).map(|j| self.column(j).iter().map(|a| -a).collect()).collect();
        AbelianMap::from_columns(self.source.clone(), self.target.clone(), cols).expect("negation is well defined")
    }

    pub fn is_zero(&self) -> bool {
        (0..self.source.ngens()).all(|j| self.target.is_zero_element(&self.column(j)))
    }

    /// Equality as homomorphisms (entries compared modulo target orders).
    pub fn same_as(&self, other: &AbelianMap) -> bool {
        self.source.orders == other.source.orders
            && self.target.orders == other.target.orders
            && (0..self.source.ngens())
                .all(|j| self.target.reduce(&self.column(j)) == other.target.reduce(&other.column(j)))
    }

    /// `f ⊕ g : A ⊕ C → B ⊕ D`.
    pub fn direct_sum(&self, other: &AbelianMap) -> AbelianMap {
        let source = self.source.direct_sum(&other.source);
        let target = self.target.direct_sum(&other.target);
        let (t1, t2) = (self.target.ngens(), other.target.ngens());
        let mut cols = Vec::new();
        for j in 0..self.source.ngens() {
            let mut c = self.column(j);
            c.extend(std::iter::repeat_n(0, t2));
            cols.push(c);
        }
        for j in 0..other.source.ngens() {
            let mut c = vec![0; t1];
            c.extend(other.column(j));
            cols.push(c);
        }
        AbelianMap::from_columns(source, target, cols).expect("block diagonal is well defined")
    }

    /// `(f, g) : A → B ⊕ C`.
    pub fn pair(&self, other: &AbelianMap) -> Result<AbelianMap> {
        if self.source.orders != other.source.orders {
            return Err(Error::IllDefinedMap("pairing maps with different sources".into()));
        }
        let target = self.target.direct_sum(&other.target);
        let cols = (0..self.source.ngens())
            .map(|j| {
                let mut c = self.column(j);
                c.extend(other.column(j));
                c
            })
            .collect();
        AbelianMap::from_columns(self.source.clone(), target, cols)
    }

    /// `[f g] : A ⊕ C → B`, `(a, c) ↦ f(a) + g(c)`.
    pub fn copair(&self, other: &AbelianMap) -> Result<AbelianMap> {
        if self.target.orders != other.target.orders {
            return Err(Error::IllDefinedMap("copairing maps with different targets".into()));
        }
        let source = self.source.direct_sum(&other.source);
        let cols = (0..self.source.ngens())
            .map(|j| self.column(j))
            .chain((0..other.source.ngens()).map(|j| other.column(j)))
            .collect();
        AbelianMap::from_columns(source, self.target.clone(), cols)
    }

    /// `L = {x ∈ ℤ^s : Mx ∈ ⊕ o_i ℤ}` as generators.
    fn preimage_lattice(&self) -> Vec<Vec<BigInt>> {
        let (s, t) = (self.source.ngens(), self.target.ngens());
        let mut k = IntMatrix::zeros(t, s + t);
        for i in 0..t {
            for j in 0..s {
                k[(i, j)] = BigInt::from(self.matrix[i][j]);
            }
            k[(i, s + i)] = BigInt::from(self.target.orders[i]);
        }
        let snf = smith_normal_form(&k);
        (snf.rank..s + t).map(|j| (0..s).map(|i| snf.v[(i, j)].clone()).collect()).collect()
    }

    pub fn kernel_image_cokernel(&self) -> KerImCoker {
        let (s, t) = (self.source.ngens(), self.target.ngens());
        let lat = self.preimage_lattice();
        let src_rels: Vec<Vec<BigInt>> = (0..s)
            .map(|j| {
                let mut v = unit_vec(s, j);
                v[j] = BigInt::from(self.source.orders[j]);
                v
            })
            .collect();
        let ker = Subquotient::new(s, &lat, &src_rels).expect("kernel is finite");
        let std_s: Vec<Vec<BigInt>> = (0..s).map(|j| unit_vec(s, j)).collect();
        let im = Subquotient::new(s, &std_s, &lat).expect("image is finite");
        let std_t: Vec<Vec<BigInt>> = (0..t).map(|i| unit_vec(t, i)).collect();
        let mut crels: Vec<Vec<BigInt>> = (0..s).map(|j| big_vec(&self.column(j))).collect();
        crels.extend((0..t).map(|i| {
            let mut v = unit_vec(t, i);
            v[i] = BigInt::from(self.target.orders[i]);
            v
        }));
        let coker = Subquotient::new(t, &std_t, &crels).expect("cokernel is finite");
        let kernel_gens = (0..ker.group().ngens())
            .map(|k| self.source.reduce(&ker.rep(k).iter().map(|v| v.to_i64().expect("small")).collect::<Vec<_>>()))
            .collect();
        KerImCoker {
            kernel: ker.group().clone(),
            image: im.group().clone(),
            cokernel: coker.group().clone(),
            kernel_gens,
        }
    }

    pub fn is_injective(&self) -> bool {
        self.kernel_image_cokernel().kernel.is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.kernel_image_cokernel().cokernel.is_trivial()
    }

    pub fn is_isomorphism(&self) -> bool {
        let kic = self.kernel_image_cokernel();
        kic.kernel.is_trivial() && kic.cokernel.is_trivial()
    }

    /// Cokernel with its canonical basis and the projection from the target.
    pub fn cokernel_map(&self) -> (FinAbGroup, AbelianMap) {
        let (s, t) = (self.source.ngens(), self.target.ngens());
        let std_t: Vec<Vec<BigInt>> = (0..t).map(|i| unit_vec(t, i)).collect();
        let mut crels: Vec<Vec<BigInt>> = (0..s).map(|j| big_vec(&self.column(j))).collect();
        crels.extend((0..t).map(|i| {
            let mut v = unit_vec(t, i);
            v[i] = BigInt::from(self.target.orders[i]);
            v
        }));
        let coker = Subquotient::new(t, &std_t, &crels).expect("cokernel is finite");
        let group = coker.group().clone();
        let cols = (0..t).map(|i| coker.coords(&unit_vec(t, i)).expect("in lattice")).collect();
        let proj = AbelianMap::from_columns(self.target.clone(), group.clone(), cols).expect("projection");
        (group, proj)
    }

    /// Some `x` with `f(x) = y`, if `y` is in the image.
    pub fn preimage(&self, y: &[i64]) -> Option<Vec<i64>> {
        let (s, t) = (self.source.ngens(), self.target.ngens());
        let mut k = IntMatrix::zeros(t, s + t);
        for i in 0..t {
            for j in 0..s {
                k[(i, j)] = BigInt::from(self.matrix[i][j]);
            }
            k[(i, s + i)] = BigInt::from(self.target.orders[i]);
        }
        let snf = smith_normal_form(&k);
        let uy = snf.u.mul_vec(&big_vec(y));
        let mut w = vec![BigInt::zero(); s + t];
        for (i, v) in uy.iter().enumerate() {
            if i < snf.rank {
                let (q, rem) = v.div_rem(&snf.s[(i, i)]);
                if !rem.is_zero() {
                    return None;
                }
                w[i] = q;
            } else if !v.is_zero() {
                return None;
            }
        }
        let x = snf.v.mul_vec(&w);
        Some(
            x[..s]
                .iter()
                .zip(self.source.orders())
                .map(|(v, &o)| v.mod_floor(&BigInt::from(o)).to_i64().expect("small"))
                .collect(),
        )
    }

    /// Whether every given target element lies in the image.
    pub fn image_contains(&self, elements: &[Vec<i64>]) -> bool {
        elements.iter().all(|y| self.preimage(y).is_some())
    }

    /// Restriction of `self` to the subgroup generated by `gens` (source coordinates),
    /// as a map out of `⊕ ℤ/ord(gen)`.
    pub fn restrict_to(&self, gens: &[Vec<i64>]) -> Result<AbelianMap> {
        let orders: Vec<u64> = gens.iter().map(|g| element_order(&self.source, g)).collect();
        let sub = FinAbGroup::from_orders(orders);
        let cols = gens.iter().map(|g| self.apply(g)).collect();
        AbelianMap::from_columns(sub, self.target.clone(), cols)
    }
}

/// Order of an element given in coordinates.
pub fn element_order(g: &FinAbGroup, x: &[i64]) -> u64 {
    x.iter()
        .zip(g.orders())
        .map(|(&v, &o)| {
            let v = v.rem_euclid(o as i64) as u64;
            o / v.gcd(&o)
        })
        .fold(1, |a, b| a.lcm(&b))
}

/// Canonical-form presentation of `A ⊗ B` on the generators `a_i ⊗ b_j`.
#[derive(Clone, Debug)]
pub struct TensorPresentation {
    /// `⊕ ℤ/gcd(a_i, b_j)` over the surviving pairs
    pub group: FinAbGroup,
    pub pairs: Vec<(usize, usize)>,
}

pub fn tensor_presentation(a: &FinAbGroup, b: &FinAbGroup) -> TensorPresentation {
    let mut orders = Vec::new();
    let mut pairs = Vec::new();
    for (i, &x) in a.orders().iter().enumerate() {
        for (j, &y) in b.orders().iter().enumerate() {
            let g = x.gcd(&y);
            if g > 1 {
                orders.push(g);
                pairs.push((i, j));
            }
        }
    }
    TensorPresentation { group: FinAbGroup::from_orders(orders), pairs }
}

/// `A ⊗ B` in invariant-factor form.
pub fn tensor(a: &FinAbGroup, b: &FinAbGroup) -> FinAbGroup {
    FinAbGroup { orders: tensor_presentation(a, b).group.invariants() }
}

/// `Hom(A, ℤ/m)` for `exp(A) | m`, realized inside `Hom(A, ℚ/ℤ)`.
#[derive(Clone, Debug)]
pub struct HomGroup {
    pub group: FinAbGroup,
    pub modulus: u64,
    /// `basis_values[k][i]`: value in `ℤ/m` of the `k`-th basis homomorphism on generator `i` of `A`
    pub basis_values: Vec<Vec<u64>>,
}

pub fn hom_group(a: &FinAbGroup, m: u64) -> Result<HomGroup> {
    let e = a.exponent();
    if !m.is_multiple_of(e) {
        return Err(Error::ExponentMismatch { exponent: e, modulus: m });
    }
    let keep: Vec<usize> = (0..a.ngens()).filter(|&i| a.orders[i] > 1).collect();
    let group = FinAbGroup { orders: keep.iter().map(|&i| a.orders[i]).collect() };
    let basis_values =
        keep.iter().map(|&k| (0..a.ngens()).map(|i| if i == k { m / a.orders[i] } else { 0 }).collect()).collect();
    Ok(HomGroup { group, modulus: m, basis_values })
}

/// Whether `A` is isomorphic to a subgroup of `B`.
pub fn embeds(a: &FinAbGroup, b: &FinAbGroup) -> bool {
    let mut primes: Vec<u64> =
        a.orders().iter().chain(b.orders()).flat_map(|&o| factorize(o).into_iter().map(|(p, _)| p)).collect();
    primes.sort_unstable();
    primes.dedup();
    let count = |g: &FinAbGroup, p: u64, k: u32| g.orders().iter().filter(|&&o| o % p.pow(k) == 0).count();
    primes.into_iter().all(|p| {
        let max_k =
            a.orders().iter().map(|&o| factorize(o).iter().find(|f| f.0 == p).map_or(0, |f| f.1)).max().unwrap_or(0);
        (1..=max_k).all(|k| count(a, p, k) <= count(b, p, k))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn inv(g: &FinAbGroup) -> Vec<u64> {
        g.invariants()
    }

    #[test]
    fn snf_examples() {
        let z = IntMatrix::zeros(2, 3);
        let s = smith_normal_form(&z);
        assert!(s.s.is_zero());
        assert_eq!(s.u, IntMatrix::identity(2));
        assert_eq!(s.v, IntMatrix::identity(3));

        let m = IntMatrix::from_rows(&[vec![2i64, 0], vec![0, 3]]);
        let s = smith_normal_form(&m);
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
        assert_eq!(s.u.mul(&m).mul(&s.v), s.s);

        let m = IntMatrix::from_rows(&[vec![2i64, 4], vec![6, 8]]);
        let s = smith_normal_form(&m);
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
        assert_eq!(s.u.mul(&m).mul(&s.v), s.s);
        assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(2));
        assert_eq!(s.v.mul(&s.v_inv), IntMatrix::identity(2));
    }

    #[test]
    fn presentation_invariants() {
        let d = IntMatrix::from_rows(&[vec![2i64, 0], vec![0, 4]]);
        assert_eq!(inv(&invariants_of_presentation(&d, 2).unwrap()), vec![2, 4]);
        let one = IntMatrix::from_rows(&[vec![1i64]]);
        assert!(invariants_of_presentation(&one, 1).unwrap().is_trivial());
        let t = IntMatrix::from_rows(&[vec![3i64, 0], vec![0, 3]]);
        assert_eq!(inv(&invariants_of_presentation(&t, 2).unwrap()), vec![3, 3]);
        let free = IntMatrix::from_rows(&[vec![2i64, 0]]);
        assert!(matches!(invariants_of_presentation(&free, 2), Err(Error::InfiniteGroup)));
    }

    #[test]
    fn canonical_form() {
        assert_eq!(canonical_invariants(&[2, 3]), vec![6]);
        assert_eq!(canonical_invariants(&[4, 6]), vec![2, 12]);
        assert_eq!(canonical_invariants(&[1, 1]), Vec::<u64>::new());
        assert!(FinAbGroup::from_invariants(vec![4, 2]).is_err());
    }

    #[test]
    fn tensor_examples() {
        let z4 = FinAbGroup::from_orders(vec![4]);
        let z6 = FinAbGroup::from_orders(vec![6]);
        assert_eq!(inv(&tensor(&z4, &z6)), vec![2]);
        assert!(tensor(&z4, &FinAbGroup::trivial()).is_trivial());
        let e = FinAbGroup::elementary(3, 2);
        assert_eq!(inv(&tensor(&e, &e)), vec![3, 3, 3, 3]);
    }

    #[test]
    fn hom_examples() {
        assert!(hom_group(&FinAbGroup::trivial(), 5).unwrap().group.is_trivial());
        let z6 = FinAbGroup::from_orders(vec![6]);
        assert_eq!(inv(&hom_group(&z6, 6).unwrap().group), vec![6]);
        let e = FinAbGroup::elementary(5, 2);
        assert_eq!(inv(&hom_group(&e, 25).unwrap().group), vec![5, 5]);
        assert!(hom_group(&z6, 4).is_err());
    }

    #[test]
    fn kernel_image_cokernel_examples() {
        let z4 = FinAbGroup::from_orders(vec![4]);
        let id = AbelianMap::identity(&z4);
        let k = id.kernel_image_cokernel();
        assert!(k.kernel.is_trivial() && k.cokernel.is_trivial());

        let times2 = AbelianMap::from_columns(z4.clone(), z4.clone(), vec![vec![2]]).unwrap();
        let k = times2.kernel_image_cokernel();
        assert_eq!(inv(&k.kernel), vec![2]);
        assert_eq!(inv(&k.image), vec![2]);
        assert_eq!(inv(&k.cokernel), vec![2]);

        let z3 = FinAbGroup::from_orders(vec![3]);
        let diag = AbelianMap::identity(&z3).pair(&AbelianMap::identity(&z3)).unwrap();
        let k = diag.kernel_image_cokernel();
        assert!(k.kernel.is_trivial());
        assert_eq!(inv(&k.cokernel), vec![3]);
    }

    #[test]
    fn ill_defined_map_rejected() {
        let z2 = FinAbGroup::from_orders(vec![2]);
        let z4 = FinAbGroup::from_orders(vec![4]);
        assert!(AbelianMap::from_columns(z2, z4, vec![vec![1]]).is_err());
    }

    #[test]
    fn embedding_criterion() {
        let e3 = FinAbGroup::elementary(3, 2);
        let e4 = FinAbGroup::elementary(3, 4);
        assert!(embeds(&FinAbGroup::trivial(), &e3));
        assert!(!embeds(&FinAbGroup::from_orders(vec![4]), &FinAbGroup::elementary(2, 3)));
        assert!(embeds(&e3, &e4));
        assert!(!embeds(&e4, &e3));
    }

    #[test]
    fn abelianization_examples() {
        let g = Arc::new(crate::catalog::abelian(&[4, 2]).unwrap());
        assert_eq!(inv(&abelianization(&g).group), vec![2, 4]);
        let e = Arc::new(crate::catalog::extraspecial_p3(3, crate::catalog::Exponent::P).unwrap());
        let ab = abelianization(&e);
        assert_eq!(inv(&ab.group), vec![3, 3]);
        // coordinate map is a homomorphism
        for x in 0..27 {
            for y in 0..27 {
                let s: Vec<i64> = ab.coords[x].iter().zip(&ab.coords[y]).map(|(a, b)| a + b).collect();
                assert_eq!(ab.group.reduce(&s), ab.coords[e.mul(x, y)]);
            }
        }
        for (k, &b) in ab.basis_elements.iter().enumerate() {
            assert_eq!(ab.coords[b], ab.group.basis_vector(k));
        }
        let h = Arc::new(crate::group::from_pc_presentation(&crate::catalog::example3_h_presentation(3)).unwrap());
        assert_eq!(inv(&abelianization(&h).group), vec![3, 3]);
    }

    #[test]
    fn preimage_and_cokernel_map() {
        let z4 = FinAbGroup::from_orders(vec![4]);
        let times2 = AbelianMap::from_columns(z4.clone(), z4.clone(), vec![vec![2]]).unwrap();
        let x = times2.preimage(&[2]).unwrap();
        assert_eq!(times2.apply(&x), vec![2]);
        assert!(times2.preimage(&[1]).is_none());
        let (c, proj) = times2.cokernel_map();
        assert_eq!(c.order(), 2);
        assert!(times2.then(&proj).unwrap().is_zero());
    }

    #[test]
    fn smith_diagonal_matches_bigint() {
        let rows = vec![vec![2i64, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        let mut d = smith_diagonal(3, 3, rows.clone());
        d.sort();
        let s = smith_normal_form(&IntMatrix::from_rows(&rows));
        let mut e = s.diagonal();
        e.sort();
        assert_eq!(
            canonical_invariants(&d.iter().map(|x| x.to_u64().unwrap()).collect::<Vec<_>>()),
            canonical_invariants(&e.iter().map(|x| x.to_u64().unwrap()).collect::<Vec<_>>())
        );
    }
}
