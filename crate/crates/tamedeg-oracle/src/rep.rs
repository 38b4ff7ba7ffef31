//! Explicit quiver representations over the rationals.

use crate::rational::{rank, Row};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// `maps[a]` is a `dims[t] x dims[s]` matrix (row-major) for arrow `a = (s, t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep {
    pub arrows: Vec<(usize, usize)>,
    pub dims: Vec<usize>,
    pub maps: Vec<Vec<Vec<i64>>>,
}

impl Rep {
    pub fn zero(n: usize, arrows: &[(usize, usize)]) -> Rep {
        Rep { arrows: arrows.to_vec(), dims: vec![0; n], maps: arrows.iter().map(|_| Vec::new()).collect() }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Checks matrix shapes against `dims`.
    pub fn is_well_formed(&self) -> bool {
        self.arrows.iter().zip(&self.maps).all(|(&(s, t), m)| m.len() == self.dims[t] && m.iter().all(|r| r.len() == self.dims[s]))
    }
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// `dim Hom(x, y)`: unknowns `f_v` (a `dy_v x dx_v` matrix per vertex) with
/// `Y_a f_s = f_t X_a` for every arrow `a = (s, t)`.
pub fn hom_dim(x: &Rep, y: &Rep) -> usize {
    let n = x.dims.len();
    let mut offset = vec![0; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + y.dims[v] * x.dims[v];
    }
    // f_v[i][j] lives at offset[v] + i * dx_v + j
    let var = |v: usize, i: usize, j: usize| offset[v] + i * x.dims[v] + j;
    let mut rows = Vec::new();
    for (a, &(s, t)) in x.arrows.iter().enumerate() {
        let (xa, ya) = (&x.maps[a], &y.maps[a]);
        for i in 0..y.dims[t] {
            for j in 0..x.dims[s] {
                let mut r = Row::new();
                // (Y_a f_s)[i][j] = sum_k Y_a[i][k] f_s[k][j]
                for (k, &c) in ya[i].iter().enumerate() {
                    if c != 0 {
                        *r.entry(var(s, k, j)).or_insert_with(BigRational::zero) += q(c);
                    }
                }
                // (f_t X_a)[i][j] = sum_k f_t[i][k] X_a[k][j]
                for (k, xr) in xa.iter().enumerate() {
                    if xr[j] != 0 {
                        *r.entry(var(t, i, k)).or_insert_with(BigRational::zero) -= q(xr[j]);
                    }
                }
                r.retain(|_, v| !v.is_zero());
                if !r.is_empty() {
                    rows.push(r);
                }
            }
        }
    }
    offset[n] - rank(rows)
}

/// `<dim x, dim y>` for the path algebra without relations.
pub fn euler(x: &Rep, y: &Rep) -> i64 {
    let d: i64 = x.dims.iter().zip(&y.dims).map(|(a, b)| (a * b) as i64).sum();
    d - x.arrows.iter().map(|&(s, t)| (x.dims[s] * y.dims[t]) as i64).sum::<i64>()
}

/// `dim Ext(x, y)` from the Euler form; valid for hereditary categories.
pub fn ext_dim(x: &Rep, y: &Rep) -> i64 {
    hom_dim(x, y) as i64 - euler(x, y)
}
