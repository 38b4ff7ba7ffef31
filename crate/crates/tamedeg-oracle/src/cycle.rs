//! Nilpotent representations of the oriented cycle on `p` vertices with
//! arrows `v -> v-1`. `E_s(l)` has basis `b_0..b_{l-1}` with `b_i` at vertex
//! `s+i mod p`; every arrow sends `b_i` to `b_{i-1}` and `b_0` to zero, so
//! `b_0` spans the socle.

use crate::gf2::{BitRow, Echelon, Mat};
use crate::rep::Rep;
use std::collections::{BTreeMap, BTreeSet};

/// `(socle, length)` of a uniserial module.
pub type Uni = (u32, u32);
/// A direct sum as a sorted list of uniserials with repetitions.
pub type TubeSum = Vec<Uni>;

pub fn arrows(p: u32) -> Vec<(usize, usize)> {
    (0..p as usize).map(|v| (v, (v + p as usize - 1) % p as usize)).collect()
}

fn vertex(p: u32, s: u32, i: u32) -> usize {
    ((s + i) % p) as usize
}

/// `E_s(l)` as a rational representation.
pub fn uniserial_rep(p: u32, (s, l): Uni) -> Rep {
    let g = CycleRep::uniserial(p, (s, l));
    let maps = g.maps.iter().map(|m| (0..m.rows).map(|i| (0..m.cols).map(|j| i64::from(m.get(i, j))).collect()).collect()).collect();
    Rep { arrows: arrows(p), dims: g.dims, maps }
}

/// A representation over GF(2); `maps[v]` is `dims[v-1] x dims[v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleRep {
    pub p: u32,
    pub dims: Vec<usize>,
    pub maps: Vec<Mat>,
}

impl CycleRep {
    fn target(&self, v: usize) -> usize {
        (v + self.p as usize - 1) % self.p as usize
    }

    pub fn uniserial(p: u32, (s, l): Uni) -> CycleRep {
        let mut dims = vec![0; p as usize];
        for i in 0..l {
            dims[vertex(p, s, i)] += 1;
        }
        let mut maps: Vec<Mat> = (0..p as usize).map(|v| Mat::zero(dims[(v + p as usize - 1) % p as usize], dims[v])).collect();
        for i in 1..l {
            maps[vertex(p, s, i)].set(((i - 1) / p) as usize, (i / p) as usize, true);
        }
        CycleRep { p, dims, maps }
    }

    pub fn sum(parts: &[Uni], p: u32) -> CycleRep {
        let mut x = CycleRep { p, dims: vec![0; p as usize], maps: (0..p).map(|_| Mat::zero(0, 0)).collect() };
        for &u in parts {
            x = x.direct_sum(&CycleRep::uniserial(p, u));
        }
        x
    }

    /// `self + o` with the basis of `self` first at every vertex.
    pub fn direct_sum(&self, o: &CycleRep) -> CycleRep {
        let dims: Vec<usize> = self.dims.iter().zip(&o.dims).map(|(a, b)| a + b).collect();
        let mut maps = Vec::new();
        for v in 0..self.p as usize {
            let w = self.target(v);
            let mut m = Mat::zero(dims[w], dims[v]);
            for i in 0..self.dims[w] {
                for j in 0..self.dims[v] {
                    m.set(i, j, self.maps[v].get(i, j));
                }
            }
            for i in 0..o.dims[w] {
                for j in 0..o.dims[v] {
                    m.set(self.dims[w] + i, self.dims[v] + j, o.maps[v].get(i, j));
                }
            }
            maps.push(m);
        }
        CycleRep { p: self.p, dims, maps }
    }

    /// Ranks of the paths of length `0..=maxl` starting at vertex `w`.
    fn path_ranks(&self, w: usize, maxl: u32) -> Vec<i64> {
        let mut acc = Mat::identity(self.dims[w]);
        let mut v = w;
        let mut out = vec![acc.rank() as i64];
        for _ in 0..maxl {
            acc = self.maps[v].mul(&acc);
            v = self.target(v);
            out.push(acc.rank() as i64);
        }
        out
    }

    /// Isomorphism type. `g(w, i)`, the number of basis vectors at `w` in
    /// position `i` of their string, is a difference of path ranks; a
    /// summand `E_s(l)` is a string reaching position `l-1` but not `l`.
    pub fn decompose(&self) -> TubeSum {
        let p = self.p;
        let total: usize = self.dims.iter().sum();
        let maxl = total as u32 + 1;
        let h: Vec<Vec<i64>> = (0..p as usize).map(|w| self.path_ranks(w, maxl + 1)).collect();
        let g = |w: usize, i: u32| h[w][i as usize] - h[w][i as usize + 1];
        let mut out = Vec::new();
        for s in 0..p {
            for l in 1..=maxl {
                let c = g(vertex(p, s, l - 1), l - 1) - g(vertex(p, s, l), l);
                assert!(c >= 0, "negative multiplicity");
                out.extend(std::iter::repeat_n((s, l), c as usize));
            }
        }
        out.sort_unstable();
        out
    }
}

/// `dim Hom(x, y)` over GF(2) from the intertwiner system.
pub fn hom_gf2(x: &CycleRep, y: &CycleRep) -> usize {
    let p = x.p as usize;
    let mut offset = vec![0; p + 1];
    for v in 0..p {
        offset[v + 1] = offset[v] + y.dims[v] * x.dims[v];
    }
    let var = |v: usize, i: usize, j: usize| offset[v] + i * x.dims[v] + j;
    let mut e = Echelon::new();
    for v in 0..p {
        let w = x.target(v);
        for i in 0..y.dims[w] {
            for j in 0..x.dims[v] {
                let mut r = BitRow::zero(offset[p]);
                for k in 0..y.dims[v] {
                    if y.maps[v].get(i, k) {
                        r.flip(var(v, k, j));
                    }
                }
                for k in 0..x.dims[w] {
                    if x.maps[v].get(k, j) {
                        r.flip(var(w, i, k));
                    }
                }
                e.insert(r);
            }
        }
    }
    offset[p] - e.rank()
}

/// Isomorphism types of nonsplit middle terms `X` of `0 -> U -> X -> V -> 0`,
/// found by enumerating every nonzero extension class over GF(2).
pub fn middle_terms(p: u32, u: Uni, v: Uni) -> BTreeSet<TubeSum> {
    let (ru, rv) = (CycleRep::uniserial(p, u), CycleRep::uniserial(p, v));
    let pu = p as usize;
    let tgt = |a: usize| (a + pu - 1) % pu;
    // Z_a: V_a -> U_{a-1}, a du[a-1] x dv[a] block per arrow.
    let mut zoff = vec![0; pu + 1];
    for a in 0..pu {
        zoff[a + 1] = zoff[a] + ru.dims[tgt(a)] * rv.dims[a];
    }
    let zvar = |a: usize, i: usize, j: usize| zoff[a] + i * rv.dims[a] + j;
    // Coboundaries of g = (g_v : V_v -> U_v): (dg)_a = U_a g_a + g_{a-1} V_a.
    let mut image = Echelon::new();
    for v in 0..pu {
        for i in 0..ru.dims[v] {
            for j in 0..rv.dims[v] {
                let mut r = BitRow::zero(zoff[pu]);
                // arrow a = v: U_v g_v, entry (k, j) for U_v[k][i]
                for k in 0..ru.dims[tgt(v)] {
                    if ru.maps[v].get(k, i) {
                        r.flip(zvar(v, k, j));
                    }
                }
                // arrow a with a - 1 = v: g_v V_a, entry (i, m) for V_a[j][m]
                let a = (v + 1) % pu;
                for m in 0..rv.dims[a] {
                    if rv.maps[a].get(j, m) {
                        r.flip(zvar(a, i, m));
                    }
                }
                image.insert(r);
            }
        }
    }
    let complement: Vec<usize> = (0..zoff[pu]).filter(|&c| !image.is_pivot(c)).collect();
    let split = ru.direct_sum(&rv);
    let mut out = BTreeSet::new();
    for mask in 1u64..(1u64 << complement.len()) {
        let mut x = split.clone();
        for (bit, &c) in complement.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                let a = (0..pu).find(|&a| zoff[a + 1] > c).expect("column in range");
                let (i, j) = ((c - zoff[a]) / rv.dims[a], (c - zoff[a]) % rv.dims[a]);
                x.maps[a].set(i, ru.dims[a] + j, true);
            }
        }
        out.insert(x.decompose());
    }
    out
}

/// Every multiset of uniserials with the composition factors of `n`.
pub fn same_factors(p: u32, n: &[Uni]) -> Vec<TubeSum> {
    let mut cnt = vec![0u32; p as usize];
    for &(s, l) in n {
        for i in 0..l {
            cnt[vertex(p, s, i)] += 1;
        }
    }
    let total: u32 = cnt.iter().sum();
    let mods: Vec<Uni> = (1..=total).flat_map(|l| (0..p).map(move |s| (s, l))).collect();
    let mut out = Vec::new();
    fn go(p: u32, mods: &[Uni], from: usize, cnt: &mut Vec<u32>, cur: &mut TubeSum, out: &mut Vec<TubeSum>) {
        if cnt.iter().all(|&c| c == 0) {
            let mut m = cur.clone();
            m.sort_unstable();
            out.push(m);
            return;
        }
        for (k, &(s, l)) in mods.iter().enumerate().skip(from) {
            if (0..l).all(|i| cnt[vertex(p, s, i)] > 0) && fits(p, s, l, cnt) {
                for i in 0..l {
                    cnt[vertex(p, s, i)] -= 1;
                }
                cur.push((s, l));
                go(p, mods, k, cnt, cur, out);
                cur.pop();
                for i in 0..l {
                    cnt[vertex(p, s, i)] += 1;
                }
            }
        }
    }
    fn fits(p: u32, s: u32, l: u32, cnt: &[u32]) -> bool {
        let mut need = vec![0u32; p as usize];
        for i in 0..l {
            need[vertex(p, s, i)] += 1;
        }
        need.iter().zip(cnt).all(|(a, b)| a <= b)
    }
    go(p, &mods, 0, &mut cnt, &mut Vec::new(), &mut out);
    out
}

/// The degeneration poset below `n`: all `M` with the factors of `n` and
/// `[X, M] <= [X, n]` for every uniserial `X` of length up to twice the
/// total length of `n`.
#[derive(Clone, Debug)]
pub struct TubePoset {
    pub elements: Vec<TubeSum>,
    /// `(i, j)`: `elements[i]` is covered by `elements[j]`.
    pub covers: Vec<(usize, usize)>,
}

pub fn deformations(p: u32, n: &[Uni]) -> TubePoset {
    let mut n: TubeSum = n.to_vec();
    n.sort_unstable();
    let total: u32 = n.iter().map(|u| u.1).sum();
    let tests: Vec<CycleRep> = (1..=2 * total).flat_map(|l| (0..p).map(move |s| (s, l))).map(|u| CycleRep::uniserial(p, u)).collect();
    let mut cache: BTreeMap<Uni, Vec<usize>> = BTreeMap::new();
    let mut homs = |m: &TubeSum| -> Vec<usize> {
        let mut acc = vec![0; tests.len()];
        for &u in m {
            let hv = cache.entry(u).or_insert_with(|| {
                let y = CycleRep::uniserial(p, u);
                tests.iter().map(|x| hom_gf2(x, &y)).collect()
            });
            for (a, b) in acc.iter_mut().zip(hv.iter()) {
                *a += b;
            }
        }
        acc
    };
    let hn = homs(&n);
    let mut elements = Vec::new();
    let mut vecs = Vec::new();
    for m in same_factors(p, &n) {
        let hm = homs(&m);
        if hm.iter().zip(&hn).all(|(a, b)| a <= b) {
            elements.push(m);
            vecs.push(hm);
        }
    }
    let le = |i: usize, j: usize| vecs[i].iter().zip(&vecs[j]).all(|(a, b)| a <= b);
    let k = elements.len();
    let mut covers = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if i != j && le(i, j) && !(0..k).any(|c| c != i && c != j && le(i, c) && le(c, j)) {
                covers.push((i, j));
            }
        }
    }
    TubePoset { elements, covers }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniserials_decompose_to_themselves() {
        for p in 1..=3 {
            for s in 0..p {
                for l in 1..=7 {
                    assert_eq!(CycleRep::uniserial(p, (s, l)).decompose(), vec![(s, l)]);
                }
            }
        }
        let x = CycleRep::sum(&[(0, 3), (1, 2), (0, 3)], 2);
        assert_eq!(x.decompose(), vec![(0, 3), (0, 3), (1, 2)]);
    }

    #[test]
    fn loop_homs_are_min_lengths() {
        for a in 1..6 {
            for b in 1..6 {
                let h = hom_gf2(&CycleRep::uniserial(1, (0, a)), &CycleRep::uniserial(1, (0, b)));
                assert_eq!(h, a.min(b) as usize);
            }
        }
    }

    #[test]
    fn simple_extensions() {
        // 0 -> S_0 -> X -> S_1 -> 0 along the arrow 1 -> 0.
        assert_eq!(middle_terms(3, (0, 1), (1, 1)), BTreeSet::from([vec![(0, 2)]]));
        assert!(middle_terms(3, (1, 1), (0, 1)).is_empty());
        // Loop: extensions of k by k are k[x]/x^2.
        assert_eq!(middle_terms(1, (0, 1), (0, 1)), BTreeSet::from([vec![(0, 2)]]));
    }

    #[test]
    fn two_simples_poset() {
        let t = deformations(1, &[(0, 1), (0, 1)]);
        assert_eq!(t.elements.len(), 2);
        assert_eq!(t.covers.len(), 1);
    }
}
