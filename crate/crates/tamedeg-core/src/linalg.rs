//! Exact rational linear algebra on small dense matrices.

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub type Q = Ratio<i128>;
pub type IMat = Vec<Vec<i64>>;

pub fn identity(n: usize) -> IMat {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn transpose(m: &IMat) -> IMat {
    let n = m.len();
    let k = if n == 0 { 0 } else { m[0].len() };
    (0..k).map(|j| (0..n).map(|i| m[i][j]).collect()).collect()
}

pub fn mul(a: &IMat, b: &IMat) -> IMat {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    (0..n)
        .map(|i| (0..m).map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum()).collect())
        .collect()
}

pub fn neg(a: &IMat) -> IMat {
    a.iter().map(|r| r.iter().map(|x| -x).collect()).collect()
}

pub fn apply(m: &IMat, x: &[i64]) -> crate::dim::Dim {
    m.iter().map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
}

fn to_q(m: &IMat) -> Vec<Vec<Q>> {
    m.iter().map(|r| r.iter().map(|&x| Q::from_integer(x as i128)).collect()).collect()
}

/// Inverse over the rationals; `None` when singular.
pub fn inverse(m: &IMat) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a = to_q(m);
    let mut inv: Vec<Vec<Q>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (x, y) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * x;
                    inv[r][j] -= f * y;
                }
            }
        }
    }
    Some(inv)
}

/// Converts a rational matrix with integral entries.
pub fn integral(m: &[Vec<Q>]) -> Option<IMat> {
    m.iter()
        .map(|r| {
            r.iter()
                .map(|x| x.is_integer().then(|| i64::try_from(x.to_integer()).ok()).flatten())
                .collect()
        })
        .collect()
}

/// Basis of the rational kernel, each vector scaled to a primitive integer vector.
pub fn kernel(m: &IMat) -> Vec<Vec<i64>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a = to_q(m);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let pv = a[r][c];
        for j in 0..cols {
            a[r][j] /= pv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c];
                for j in 0..cols {
                    let x = a[r][j];
                    a[i][j] -= f * x;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[i][f];
            }
            primitive(&v)
        })
        .collect()
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

fn primitive(v: &[Q]) -> Vec<i64> {
    let l = v.iter().fold(1i128, |acc, x| {
        let d = *x.denom();
        acc / gcd(acc, d) * d
    });
    let ints: Vec<i128> = v.iter().map(|x| (x * Q::from_integer(l)).to_integer()).collect();
    let g = ints.iter().fold(0i128, |acc, &x| gcd(acc, x)).max(1);
    let sign = if ints.iter().find(|x| **x != 0).is_some_and(|x| x.is_negative()) { -1 } else { 1 };
    ints.iter().map(|x| (sign * x / g) as i64).collect()
}

/// Sylvester's criterion on a symmetric integer matrix.
pub fn positive_definite(m: &IMat) -> bool {
    let n = m.len();
    (1..=n).all(|k| {
        let sub: IMat = (0..k).map(|i| m[i][..k].to_vec()).collect();
        det(&sub) > Q::zero()
    })
}

pub fn det(m: &IMat) -> Q {
    let n = m.len();
    let mut a = to_q(m);
    let mut d = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else { return Q::zero() };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        let pv = a[c][c];
        d *= pv;
        for r in c + 1..n {
            let f = a[r][c] / pv;
            if !f.is_zero() {
                for j in c..n {
                    let x = a[c][j];
                    a[r][j] -= f * x;
                }
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_unitriangular_is_integral() {
        let m = vec![vec![1, -2, 0], vec![0, 1, -1], vec![0, 0, 1]];
        let inv = integral(&inverse(&m).unwrap()).unwrap();
        assert_eq!(mul(&m, &inv), identity(3));
    }

    #[test]
    fn kernel_of_kronecker_form() {
        let m = vec![vec![2, -2], vec![-2, 2]];
        assert_eq!(kernel(&m), vec![vec![1, 1]]);
    }

    #[test]
    fn definiteness() {
        assert!(positive_definite(&vec![vec![2, -1], vec![-1, 2]]));
        assert!(!positive_definite(&vec![vec![2, -2], vec![-2, 2]]));
    }
}
