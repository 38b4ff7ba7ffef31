//! Linear algebra over GF(2) with bit-packed rows.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitRow(Vec<u64>);

impl BitRow {
    pub fn zero(len: usize) -> Self {
        BitRow(vec![0; len.div_ceil(64)])
    }

    pub fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn flip(&mut self, i: usize) {
        self.0[i / 64] ^= 1 << (i % 64);
    }

    pub fn set(&mut self, i: usize, b: bool) {
        if self.get(i) != b {
            self.flip(i);
        }
    }

    pub fn xor(&mut self, o: &BitRow) {
        for (a, b) in self.0.iter_mut().zip(&o.0) {
            *a ^= b;
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.0.iter().enumerate().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
}

/// Reduced echelon basis of a row space, keyed by pivot column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<(usize, BitRow)>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `r` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut r: BitRow) -> bool {
        for (c, p) in &self.rows {
            if r.get(*c) {
                r.xor(p);
            }
        }
        let Some(c) = r.first() else { return false };
        for (_, p) in self.rows.iter_mut() {
            if p.get(c) {
                p.xor(&r);
            }
        }
        self.rows.push((c, r));
        true
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.rows.iter().any(|(p, _)| *p == c)
    }
}

pub fn rank(rows: impl IntoIterator<Item = BitRow>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// A dense GF(2) matrix, `rows x cols`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<BitRow>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![BitRow::zero(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i].flip(i);
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        self.data[i].set(j, b);
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows);
        let mut out = Mat::zero(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    out.data[i].xor(&o.data[k]);
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        rank(self.data.iter().cloned())
    }
}
