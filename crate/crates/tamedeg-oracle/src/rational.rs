//! Rank of sparse rational matrices.

use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;

/// A row as column -> nonzero entry.
pub type Row = BTreeMap<usize, BigRational>;

/// Rank by Gaussian elimination; rows are consumed.
pub fn rank(rows: Vec<Row>) -> usize {
    // pivot column -> reduced row with that leading column
    let mut pivots: BTreeMap<usize, Row> = BTreeMap::new();
    for mut r in rows {
        while let Some((&c, _)) = r.iter().next() {
            let Some(p) = pivots.get(&c) else {
                let lead = r[&c].clone();
                for v in r.values_mut() {
                    *v /= &lead;
                }
                pivots.insert(c, r);
                break;
            };
            let f = r[&c].clone();
            for (&j, pv) in p {
                let e = r.entry(j).or_insert_with(BigRational::zero);
                *e -= &f * pv;
                if e.is_zero() {
                    r.remove(&j);
                }
            }
        }
    }
    pivots.len()
}
