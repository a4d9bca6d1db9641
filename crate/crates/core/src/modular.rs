//! Linear algebra over `ℤ/m`: an echelon basis with the Howell property for
//! submodules of `(ℤ/m)^n`, and kernels of systems modulo `m`.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::abelian::{smith_normal_form, IntMatrix};

fn modp(x: i128, m: u64) -> u64 {
    x.rem_euclid(m as i128) as u64
}

/// A unit `c` modulo `m` with `c·a ≡ gcd(a, m) (mod m)`.
fn normalizing_unit(a: u64, m: u64) -> u64 {
    let g = a.gcd(&m);
    let (ag, mg) = (a / g, m / g);
    if mg == 1 {
        return 1;
    }
    let e = (ag as i64).extended_gcd(&(mg as i64));
    let mut c = e.x.rem_euclid(mg as i64) as u64;
    while c.gcd(&m) != 1 {
        c += mg;
    }
    c % m
}

/// Submodule of `(ℤ/m)^n` kept in echelon form with the Howell property,
/// so membership is decided by forward reduction.
#[derive(Clone, Debug)]
pub struct ModLattice {
    m: u64,
    dim: usize,
    // rows[i]: leading entry at column i, a divisor of m
    rows: Vec<Option<Vec<u64>>>,
}

impl ModLattice {
    pub fn new(m: u64, dim: usize) -> Self {
        assert!(m >= 2, "modulus must be at least 2");
        ModLattice { m, dim, rows: vec![None; dim] }
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn insert(&mut self, v: &[i64]) {
        assert_eq!(v.len(), self.dim);
        let m = self.m;
        let mut stack = vec![v.iter().map(|&x| modp(x as i128, m)).collect::<Vec<u64>>()];
        while let Some(mut w) = stack.pop() {
            for i in 0..self.dim {
                if w[i] == 0 {
                    continue;
                }
                match self.rows[i].take() {
                    None => {
                        let c = normalizing_unit(w[i], m);
                        let h: Vec<u64> = w.iter().map(|&x| modp(x as i128 * c as i128, m)).collect();
                        let g = h[i];
                        if g != 1 {
                            stack.push(scaled(&h, m / g, m));
                        }
                        self.rows[i] = Some(h);
                        break;
                    }
                    Some(h) => {
                        let (a, b) = (w[i] as i64, h[i] as i64);
                        let e = a.extended_gcd(&b);
                        let g = e.gcd;
                        let (s, t) = (e.x as i128, e.y as i128);
                        let new_h: Vec<u64> =
                            (0..self.dim).map(|j| modp(s * w[j] as i128 + t * h[j] as i128, m)).collect();
                        let (bg, ag) = ((b / g) as i128, (a / g) as i128);
                        w = (0..self.dim).map(|j| modp(bg * w[j] as i128 - ag * h[j] as i128, m)).collect();
                        let c = normalizing_unit(new_h[i], m);
                        let new_h: Vec<u64> = new_h.iter().map(|&x| modp(x as i128 * c as i128, m)).collect();
                        let ng = new_h[i];
                        if ng != 1 {
                            stack.push(scaled(&new_h, m / ng, m));
                        }
                        self.rows[i] = Some(new_h);
                    }
                }
            }
        }
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        let m = self.m;
        let mut w: Vec<u64> = v.iter().map(|&x| modp(x as i128, m)).collect();
        for i in 0..self.dim {
            if w[i] == 0 {
                continue;
            }
            match &self.rows[i] {
                None => return false,
                Some(h) => {
                    if !w[i].is_multiple_of(h[i]) {
                        return false;
                    }
                    let q = (w[i] / h[i]) as i128;
                    for j in i..self.dim {
                        w[j] = modp(w[j] as i128 - q * h[j] as i128, m);
                    }
                }
            }
        }
        true
    }

    /// Echelon rows (leading entries divide `m`).
    pub fn basis(&self) -> Vec<Vec<u64>> {
        self.rows.iter().flatten().cloned().collect()
    }

    /// Order of the submodule.
    pub fn order(&self) -> u64 {
        self.rows.iter().enumerate().map(|(i, r)| r.as_ref().map_or(1, |h| self.m / h[i])).product()
    }
}

fn scaled(v: &[u64], c: u64, m: u64) -> Vec<u64> {
    v.iter().map(|&x| modp(x as i128 * c as i128, m)).collect()
}

/// Generators of `{t ∈ ℤ^dim : r·t ≡ 0 (mod m)}` for every row `r` of the
/// span (the lattice contains `m ℤ^dim`).
pub fn kernel_mod(span: &ModLattice) -> Vec<Vec<BigInt>> {
    let m = span.modulus();
    let dim = span.dim();
    let rows = span.basis();
    let h = rows.len();
    let mut k = IntMatrix::zeros(h, dim + h);
    for (i, r) in rows.iter().enumerate() {
        for (j, &x) in r.iter().enumerate() {
            k[(i, j)] = BigInt::from(x);
        }
        k[(i, dim + i)] = BigInt::from(m);
    }
    let snf = smith_normal_form(&k);
    (snf.rank..dim + h).map(|j| (0..dim).map(|i| snf.v[(i, j)].clone()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn howell_membership() {
        let mut l = ModLattice::new(4, 2);
        l.insert(&[2, 1]);
        // 2·(2,1) = (0,2) must be found
        assert!(l.contains(&[0, 2]));
        assert!(l.contains(&[2, 1]));
        assert!(!l.contains(&[0, 1]));
        assert!(!l.contains(&[1, 0]));
        assert_eq!(l.order(), 4);
    }

    #[test]
    fn composite_modulus() {
        let mut l = ModLattice::new(12, 2);
        l.insert(&[3, 0]);
        l.insert(&[4, 6]);
        for a in 0..12i64 {
            for b in 0..12i64 {
                // brute-force span
                let mut inside = false;
                for x in 0..12i64 {
                    for y in 0..12i64 {
                        if (3 * x + 4 * y - a).rem_euclid(12) == 0 && (6 * y - b).rem_euclid(12) == 0 {
                            inside = true;
                        }
                    }
                }
                assert_eq!(l.contains(&[a, b]), inside, "({a},{b})");
            }
        }
    }

    #[test]
    fn kernel_of_single_equation() {
        let mut l = ModLattice::new(6, 2);
        l.insert(&[1, 2]);
        let ker = kernel_mod(&l);
        for g in &ker {
            let v: BigInt = &g[0] + BigInt::from(2) * &g[1];
            assert_eq!(v.mod_floor(&BigInt::from(6)).to_i64(), Some(0));
        }
        // (4, 1) is in the kernel and must be generated
        let cols: Vec<Vec<BigInt>> = ker.clone();
        let mat = IntMatrix::from_columns(2, &cols);
        let s = smith_normal_form(&mat);
        assert_eq!(s.rank, 2);
        // index of the kernel lattice in ℤ² is 6
        let d: BigInt = s.diagonal().iter().product();
        assert_eq!(d, BigInt::from(6));
    }
}
