//! String and band modules of quivers whose underlying graph is a line or a
//! single cycle. Every indecomposable of such a quiver is one of these.

use crate::rep::Rep;
use std::collections::BTreeSet;

/// A step along arrow `a`, with (`true`) or against (`false`) its direction.
type Step = (usize, bool);

fn endpoint(arrows: &[(usize, usize)], v: usize, (a, fwd): Step) -> Option<usize> {
    let (s, t) = arrows[a];
    match fwd {
        true if s == v => Some(t),
        false if t == v => Some(s),
        _ => None,
    }
}

fn inverse(w: &[Step]) -> Vec<Step> {
    w.iter().rev().map(|&(a, f)| (a, !f)).collect()
}

/// The module of a walk from `start`; consecutive basis vectors are joined
/// by the arrow of the step between them.
fn walk_module(n: usize, arrows: &[(usize, usize)], start: usize, w: &[Step]) -> Rep {
    let mut verts = vec![start];
    for &st in w {
        verts.push(endpoint(arrows, *verts.last().expect("nonempty"), st).expect("valid walk"));
    }
    let mut dims = vec![0; n];
    let pos: Vec<usize> = verts
        .iter()
        .map(|&v| {
            dims[v] += 1;
            dims[v] - 1
        })
        .collect();
    let mut maps: Vec<Vec<Vec<i64>>> = arrows.iter().map(|&(s, t)| vec![vec![0; dims[s]]; dims[t]]).collect();
    for (i, &(a, fwd)) in w.iter().enumerate() {
        let (from, to) = if fwd { (i, i + 1) } else { (i + 1, i) };
        maps[a][pos[to]][pos[from]] = 1;
    }
    Rep { arrows: arrows.to_vec(), dims, maps }
}

/// All string modules of total dimension at most `max_dim`, one per
/// isomorphism class.
pub fn string_modules(n: usize, arrows: &[(usize, usize)], max_dim: usize) -> Vec<Rep> {
    let mut seen: BTreeSet<(usize, Vec<Step>)> = BTreeSet::new();
    let mut out = Vec::new();
    let mut layer: Vec<(usize, usize, Vec<Step>)> = (0..n).map(|v| (v, v, Vec::new())).collect();
    for _ in 0..max_dim {
        let mut next = Vec::new();
        for (start, end, w) in layer {
            let key = std::cmp::min((start, w.clone()), (end, inverse(&w)));
            if seen.insert(key) {
                out.push(walk_module(n, arrows, start, &w));
            }
            for a in 0..arrows.len() {
                for fwd in [true, false] {
                    if w.last() == Some(&(a, !fwd)) {
                        continue;
                    }
                    if let Some(v) = endpoint(arrows, end, (a, fwd)) {
                        let mut w2 = w.clone();
                        w2.push((a, fwd));
                        next.push((start, v, w2));
                    }
                }
            }
        }
        layer = next;
    }
    out
}

/// The closed walk once around the cycle starting at vertex 0.
fn cycle_walk(arrows: &[(usize, usize)]) -> Vec<Step> {
    let mut w: Vec<Step> = Vec::new();
    let mut v = 0;
    loop {
        let step = (0..arrows.len())
            .flat_map(|a| [(a, true), (a, false)])
            .find(|&(a, f)| endpoint(arrows, v, (a, f)).is_some() && !w.iter().any(|s| s.0 == a))
            .expect("underlying graph is a cycle");
        v = endpoint(arrows, v, step).expect("valid step");
        w.push(step);
        if v == 0 {
            return w;
        }
    }
}

/// Band modules `B(l, lambda)` for `1 <= l <= max_len` on the cycle: each
/// step acts by the identity on `k^l` except the last, which acts by the
/// Jordan block `J_l(lambda)`.
pub fn band_modules(n: usize, arrows: &[(usize, usize)], max_len: usize, lambda: i64) -> Vec<Rep> {
    let w = cycle_walk(arrows);
    let mut verts = vec![0];
    for &st in &w[..w.len() - 1] {
        verts.push(endpoint(arrows, *verts.last().expect("nonempty"), st).expect("valid walk"));
    }
    (1..=max_len)
        .map(|l| {
            let mut dims = vec![0; n];
            for &v in &verts {
                dims[v] += l;
            }
            let mut maps: Vec<Vec<Vec<i64>>> = arrows.iter().map(|&(s, t)| vec![vec![0; dims[s]]; dims[t]]).collect();
            // Each vertex of the cycle occurs once, so block i of vertex v
            // is the whole space at v.
            // J and its transpose are similar, so the direction of a step
            // does not matter.
            for (i, &(a, _)) in w.iter().enumerate() {
                let last = i + 1 == w.len();
                for r in 0..l {
                    for c in 0..l {
                        let e = match (r == c, last && c == r + 1) {
                            (true, _) if last => lambda,
                            (true, _) | (_, true) => 1,
                            _ => 0,
                        };
                        maps[a][r][c] = e;
                    }
                }
            }
            Rep { arrows: arrows.to_vec(), dims, maps }
        })
        .collect()
}
