//! Linear algebra over a prime field `F_p` and enumeration of subspaces.
//!
//! Vectors are `Vec<u64>` with entries in `0..p`; matrices are lists of rows.

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::linalg::{Matrix, Q};

pub type FpMatrix = Vec<Vec<u64>>;

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

/// `x mod p`, or `None` if `p` divides the denominator.
pub fn reduce(x: &Q, p: u64) -> Option<u64> {
    let pb = num_bigint::BigInt::from(p);
    let d = x.denom().mod_floor(&pb);
    if d.is_zero() {
        return None;
    }
    let n = x.numer().mod_floor(&pb).to_u64()?;
    let d = d.to_u64()?;
    debug_assert!(!x.denom().is_negative());
    Some(n * inv_mod(d, p) % p)
}

pub fn reduce_matrix(m: &Matrix, p: u64) -> Option<FpMatrix> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|x| reduce(x, p)).collect())
        .collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(m: &mut FpMatrix, cols: usize, p: u64) -> Vec<usize> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(piv, r);
        let inv = inv_mod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &FpMatrix, cols: usize, p: u64) -> usize {
    let mut m = m.clone();
    rref(&mut m, cols, p).len()
}

/// A basis of `{x in F_p^cols : m x = 0}`.
pub fn nullspace(m: &FpMatrix, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut red = m.clone();
    let pivots = rref(&mut red, cols, p);
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - red[row][f]) % p;
            }
            v
        })
        .collect()
}

pub fn mat_mul(a: &FpMatrix, b: &FpMatrix, inner: usize, cols: usize, p: u64) -> FpMatrix {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|c| (0..inner).fold(0u64, |acc, k| (acc + row[k] * b[k][c]) % p))
                .collect()
        })
        .collect()
}

/// Number of `k`-dimensional subspaces of `F_p^n`.
pub fn gaussian_binomial(n: usize, k: usize, p: u64) -> u128 {
    if k > n {
        return 0;
    }
    // [m, j] = [m-1, j-1] + p^j [m-1, j]
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for m in 1..=n {
        for j in (1..=k.min(m)).rev() {
            row[j] = row[j - 1] + (p as u128).pow(j as u32) * row[j];
        }
    }
    row[k]
}

/// Calls `f` with a basis (rows) of every `k`-dimensional subspace of the span of
/// `basis` (which must be linearly independent), each subspace exactly once.
pub fn for_each_subspace(basis: &[Vec<u64>], k: usize, p: u64, mut f: impl FnMut(&[Vec<u64>])) {
    let w = basis.len();
    if k > w {
        return;
    }
    let dim = basis.first().map_or(0, Vec::len);
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        // free positions of the echelon form with these pivots
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| {
                let pv = &pivots;
                (pv[r] + 1..w).filter(move |c| !pv.contains(c)).map(move |c| (r, c))
            })
            .collect();
        let mut vals = vec![0u64; free.len()];
        loop {
            let mut coeff = vec![vec![0u64; w]; k];
            for (r, &pc) in pivots.iter().enumerate() {
                coeff[r][pc] = 1;
            }
            for (&(r, c), &x) in free.iter().zip(&vals) {
                coeff[r][c] = x;
            }
            let sub: Vec<Vec<u64>> = coeff
                .iter()
                .map(|row| {
                    (0..dim)
                        .map(|j| (0..w).fold(0u64, |acc, c| (acc + row[c] * basis[c][j]) % p))
                        .collect()
                })
                .collect();
            f(&sub);
            let mut t = 0;
            while t < vals.len() {
                vals[t] += 1;
                if vals[t] < p {
                    break;
                }
                vals[t] = 0;
                t += 1;
            }
            if t == vals.len() {
                break;
            }
        }
        // next pivot set in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if pivots[i] < w - k + i {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    #[test]
    fn reduction() {
        assert_eq!(reduce(&(q(1) / q(2)), 5), Some(3));
        assert_eq!(reduce(&q(-1), 7), Some(6));
        assert_eq!(reduce(&(q(1) / q(3)), 3), None);
    }

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        for p in [2u64, 3, 5] {
            for n in 0..4usize {
                let basis: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as u64).collect()).collect();
                for k in 0..=n {
                    let mut seen = std::collections::HashSet::new();
                    let mut count = 0u128;
                    for_each_subspace(&basis, k, p, |s| {
                        let mut s = s.to_vec();
                        rref(&mut s, n, p);
                        seen.insert(s);
                        count += 1;
                    });
                    assert_eq!(count, gaussian_binomial(n, k, p), "p={p} n={n} k={k}");
                    assert_eq!(seen.len() as u128, count);
                }
            }
        }
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m: FpMatrix = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = nullspace(&m, 3, 7);
        assert_eq!(ns.len(), 2);
        for v in ns {
            for row in &m {
                assert_eq!(row.iter().zip(&v).map(|(a, b)| a * b).sum::<u64>() % 7, 0);
            }
        }
        assert!(is_prime(13) && !is_prime(15));
    }
}
