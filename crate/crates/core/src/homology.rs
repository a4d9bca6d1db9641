//! Integral `H₂(G, ℤ)` from the normalized bar complex, used as an
//! independent check on the Schur multiplier of small groups.

use std::sync::Arc;

use num_traits::{One, ToPrimitive, Zero};

use crate::abelian::{smith_diagonal_with, FinAbGroup};
use crate::error::{Error, Result};
use crate::group::CayleyTable;

/// Largest order accepted by default.
pub const ORACLE_LIMIT: usize = 16;
/// Largest order accepted when slow runs are enabled.
pub const ORACLE_SLOW_LIMIT: usize = 32;

/// The boundaries `∂₂: C₂ → C₁` and `∂₃: C₃ → C₂` on normalized bar chains,
/// stored as sparse columns `(row, coefficient)`.
#[derive(Clone, Debug)]
pub struct BarComplexSlice {
    group: Arc<CayleyTable>,
    pub boundary2: Vec<Vec<(usize, i64)>>,
    pub boundary3: Vec<Vec<(usize, i64)>>,
}

fn push(col: &mut Vec<(usize, i64)>, row: Option<usize>, c: i64) {
    if let Some(r) = row {
        match col.iter_mut().find(|(i, _)| *i == r) {
            Some(e) => e.1 += c,
            None => col.push((r, c)),
        }
    }
}

impl BarComplexSlice {
    pub fn new(g: &Arc<CayleyTable>) -> Self {
        let n = g.order();
        let c1 = |x: usize| (x != 0).then(|| x - 1);
        let c2 = |x: usize, y: usize| (x != 0 && y != 0).then(|| (x - 1) * (n - 1) + (y - 1));
        let mut boundary2 = Vec::new();
        for x in 1..n {
            for y in 1..n {
                // ∂[x|y] = [y] − [xy] + [x]
                let mut col = Vec::new();
                push(&mut col, c1(y), 1);
                push(&mut col, c1(g.mul(x, y)), -1);
                push(&mut col, c1(x), 1);
                col.retain(|e| e.1 != 0);
                boundary2.push(col);
            }
        }
        let mut boundary3 = Vec::new();
        for x in 1..n {
            for y in 1..n {
                for z in 1..n {
                    // ∂[x|y|z] = [y|z] − [xy|z] + [x|yz] − [x|y]
                    let mut col = Vec::new();
                    push(&mut col, c2(y, z), 1);
                    push(&mut col, c2(g.mul(x, y), z), -1);
                    push(&mut col, c2(x, g.mul(y, z)), 1);
                    push(&mut col, c2(x, y), -1);
                    col.retain(|e| e.1 != 0);
                    boundary3.push(col);
                }
            }
        }
        BarComplexSlice { group: g.clone(), boundary2, boundary3 }
    }

    pub fn group(&self) -> &Arc<CayleyTable> {
        &self.group
    }

    /// `∂₂ ∘ ∂₃ = 0`.
    pub fn is_complex(&self) -> bool {
        let d1 = self.group.order().saturating_sub(1);
        self.boundary3.iter().all(|col| {
            let mut acc = vec![0i64; d1];
            for &(r, c) in col {
                for &(s, d) in &self.boundary2[r] {
                    acc[s] += c * d;
                }
            }
            acc.iter().all(|&v| v == 0)
        })
    }

    fn dense_rows(cols: &[Vec<(usize, i64)>], nrows: usize) -> Vec<Vec<i64>> {
        let mut rows = vec![vec![0i64; cols.len()]; nrows];
        for (j, col) in cols.iter().enumerate() {
            for &(i, c) in col {
                rows[i][j] += c;
            }
        }
        rows
    }
}

/// Torsion of `H₂(G, ℤ) = ker ∂₂ / im ∂₃`, which equals `M(G)` for finite `G`.
pub fn h2_integral(g: &Arc<CayleyTable>, slow: bool) -> Result<FinAbGroup> {
    let limit = if slow { ORACLE_SLOW_LIMIT } else { ORACLE_LIMIT };
    let n = g.order();
    if n > limit {
        return Err(Error::SizeGuard { order: n, limit });
    }
    if n == 1 {
        return Ok(FinAbGroup::trivial());
    }
    let bar = BarComplexSlice::new(g);
    let (d1, d2) = (n - 1, (n - 1) * (n - 1));
    let rank2 = smith_diagonal_with(d1, d2, || BarComplexSlice::dense_rows(&bar.boundary2, d1)).len();
    let diag3 = smith_diagonal_with(d2, bar.boundary3.len(), || BarComplexSlice::dense_rows(&bar.boundary3, d2));
    // C₂/im ∂₃ ≅ H₂ ⊕ im ∂₂ with im ∂₂ free, so the torsion of H₂ is read off ∂₃
    if d2 - rank2 != diag3.len() {
        return Err(Error::InfiniteGroup);
    }
    let orders: Vec<u64> =
        diag3.iter().filter(|d| !d.is_one() && !d.is_zero()).map(|d| d.to_u64().expect("torsion fits u64")).collect();
    Ok(FinAbGroup::from_orders(FinAbGroup::from_orders(orders).invariants()))
}
