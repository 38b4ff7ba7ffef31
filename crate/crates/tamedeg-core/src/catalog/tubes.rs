use crate::dim::{self, Dim};
use crate::error::{Error, Result};
use crate::quiver::Numerics;
use serde::{Deserialize, Serialize};

/// A non-homogeneous tube: `simples[i]` is `dim E_{i+1}`, `tau E_i = E_{i-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tube {
    pub period: u32,
    pub simples: Vec<Dim>,
}

/// Regular simples are the c-orbits of vectors `0 < d < delta` with
/// `q(d) = 1`, `defect(d) = 0` whose members sum to `delta`.
///
/// Tubes are ordered by descending period, then by their lexicographically
/// smallest simple, which is `E_1`; `E_{i+1} = c^{-1} E_i`.
pub fn discover(num: &Numerics) -> Result<Vec<Tube>> {
    let delta = num.null_root()?.clone();
    let mut candidates: Vec<Dim> = Vec::new();
    let mut cur = dim::zero(num.n);
    loop {
        // odometer over 0 <= cur <= delta
        let mut i = 0;
        while i < num.n && cur[i] == delta[i] {
            cur[i] = 0;
            i += 1;
        }
        if i == num.n {
            break;
        }
        cur[i] += 1;
        if cur != delta && num.tits_form(&cur) == 1 && num.defect(&cur) == 0 {
            candidates.push(cur.clone());
        }
    }
    candidates.sort();
    let mut seen = std::collections::BTreeSet::new();
    let mut tubes = Vec::new();
    for d in &candidates {
        if seen.contains(d) {
            continue;
        }
        let mut orbit = vec![d.clone()];
        let mut next = num.c_inv(d);
        while &next != d {
            if orbit.len() > num.n + 1 {
                return Err(Error::Internal("regular orbit longer than n".into()));
            }
            orbit.push(next.clone());
            next = num.c_inv(&next);
        }
        for o in &orbit {
            seen.insert(o.clone());
        }
        let mut sum = dim::zero(num.n);
        for o in &orbit {
            dim::add_assign(&mut sum, o, 1);
        }
        if sum == delta {
            // d is the smallest orbit member since candidates are sorted
            tubes.push(Tube { period: orbit.len() as u32, simples: orbit });
        }
    }
    tubes.sort_by(|a, b| b.period.cmp(&a.period).then_with(|| a.simples[0].cmp(&b.simples[0])));
    if tubes.len() > 3 {
        return Err(Error::Internal("more than three non-homogeneous tubes".into()));
    }
    Ok(tubes)
}
