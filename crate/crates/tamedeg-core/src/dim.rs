//! Dimension vectors as small integer vectors.

use smallvec::SmallVec;

pub type Dim = SmallVec<[i64; 10]>;

pub fn zero(n: usize) -> Dim {
    smallvec::smallvec![0; n]
}

pub fn unit(n: usize, i: usize) -> Dim {
    let mut d = zero(n);
    d[i] = 1;
    d
}

pub fn add(a: &[i64], b: &[i64]) -> Dim {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[i64], b: &[i64]) -> Dim {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[i64], k: i64) -> Dim {
    a.iter().map(|x| x * k).collect()
}

pub fn add_assign(a: &mut [i64], b: &[i64], k: i64) {
    for (x, y) in a.iter_mut().zip(b) {
        *x += k * y;
    }
}

/// Componentwise `a <= b`.
pub fn le(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn is_nonneg(a: &[i64]) -> bool {
    a.iter().all(|&x| x >= 0)
}

pub fn is_positive(a: &[i64]) -> bool {
    is_nonneg(a) && a.iter().any(|&x| x > 0)
}

pub fn is_zero(a: &[i64]) -> bool {
    a.iter().all(|&x| x == 0)
}

pub fn total(a: &[i64]) -> i64 {
    a.iter().sum()
}

/// If `a = m * b` for an integer `m >= 0`, returns `m`.
pub fn multiple_of(a: &[i64], b: &[i64]) -> Option<i64> {
    let (i, &bi) = b.iter().enumerate().find(|(_, &x)| x != 0)?;
    if a[i] % bi != 0 {
        return None;
    }
    let m = a[i] / bi;
    (m >= 0 && a.iter().zip(b).all(|(x, y)| *x == m * y)).then_some(m)
}

pub fn fmt(a: &[i64]) -> String {
    let parts: Vec<String> = a.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}
