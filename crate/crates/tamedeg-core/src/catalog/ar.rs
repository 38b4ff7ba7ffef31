//! Shortest paths inside the preprojective and preinjective components.

use super::{Catalog, Indec};
use crate::error::{Error, Result};
use std::collections::{HashMap, VecDeque};

impl Catalog {
    fn exists(&self, x: &Indec) -> bool {
        self.validate(x).is_ok()
    }

    /// Arrow targets of `x` in its AR component.
    pub fn ar_successors(&self, x: &Indec) -> Vec<Indec> {
        let q = self.quiver();
        let mut out = Vec::new();
        match *x {
            Indec::Preproj { v, k } => {
                out.extend(q.in_arrows(v as usize).map(|u| Indec::preproj(u, k)));
                out.extend(q.out_arrows(v as usize).map(|u| Indec::preproj(u, k + 1)));
            }
            Indec::Preinj { v, k } => {
                out.extend(q.in_arrows(v as usize).map(|u| Indec::preinj(u, k)));
                if k > 0 {
                    out.extend(q.out_arrows(v as usize).map(|u| Indec::preinj(u, k - 1)));
                }
            }
            Indec::Reg { .. } => {}
        }
        out.retain(|y| self.exists(y));
        out
    }

    /// Arrow sources ending at `x` in its AR component.
    pub fn ar_predecessors(&self, x: &Indec) -> Vec<Indec> {
        let q = self.quiver();
        let mut out = Vec::new();
        match *x {
            Indec::Preproj { v, k } => {
                out.extend(q.out_arrows(v as usize).map(|u| Indec::preproj(u, k)));
                if k > 0 {
                    out.extend(q.in_arrows(v as usize).map(|u| Indec::preproj(u, k - 1)));
                }
            }
            Indec::Preinj { v, k } => {
                out.extend(q.out_arrows(v as usize).map(|u| Indec::preinj(u, k)));
                out.extend(q.in_arrows(v as usize).map(|u| Indec::preinj(u, k + 1)));
            }
            Indec::Reg { .. } => {}
        }
        out.retain(|y| self.exists(y));
        out
    }

    /// All `y` with `d(x, y) <= w`, with their distances.
    pub fn successors_within(&self, x: &Indec, w: u32) -> Vec<(Indec, u32)> {
        self.bfs(x, w, true)
    }

    /// All `y` with `d(y, x) <= w`, with their distances.
    pub fn predecessors_within(&self, x: &Indec, w: u32) -> Vec<(Indec, u32)> {
        self.bfs(x, w, false)
    }

    fn bfs(&self, x: &Indec, w: u32, forward: bool) -> Vec<(Indec, u32)> {
        let mut dist: HashMap<Indec, u32> = HashMap::from([(*x, 0)]);
        let mut order = vec![(*x, 0)];
        let mut queue = VecDeque::from([*x]);
        while let Some(y) = queue.pop_front() {
            let d = dist[&y];
            if d == w {
                continue;
            }
            let next = if forward { self.ar_successors(&y) } else { self.ar_predecessors(&y) };
            for z in next {
                if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(z) {
                    e.insert(d + 1);
                    order.push((z, d + 1));
                    queue.push_back(z);
                }
            }
        }
        order
    }

    /// Length of a shortest path from `x` to `y`; `None` stands for minus
    /// infinity (no path).
    pub fn path_distance(&self, x: &Indec, y: &Indec) -> Result<Option<u32>> {
        let bound = match (*x, *y) {
            (Indec::Preproj { k: a, .. }, Indec::Preproj { k: b, .. }) => {
                if b < a {
                    return Ok(None);
                }
                (b - a + 1) * (self.n() as u32 + 1) * 2
            }
            (Indec::Preinj { k: a, .. }, Indec::Preinj { k: b, .. }) => {
                if a < b {
                    return Ok(None);
                }
                (a - b + 1) * (self.n() as u32 + 1) * 2
            }
            _ => return Err(Error::Incomparable),
        };
        self.validate(x)?;
        self.validate(y)?;
        Ok(self.bfs(x, bound, true).into_iter().find(|p| p.0 == *y).map(|p| p.1))
    }
}

#[cfg(test)]
mod tests {
    use crate::catalog::{Catalog, Indec};
    use crate::quiver::Quiver;

    #[test]
    fn distances() {
        let c = Catalog::new(Quiver::extended_e6(3).unwrap()).unwrap();
        for v in 0..7 {
            let p = Indec::preproj(v, 0);
            assert_eq!(c.path_distance(&p, &p).unwrap(), Some(0));
            assert_eq!(c.path_distance(&p, &Indec::preproj(v, 1)).unwrap(), Some(2));
            assert_eq!(c.path_distance(&Indec::preproj(v, 1), &p).unwrap(), None);
            let i = Indec::preinj(v, 1);
            assert_eq!(c.path_distance(&i, &Indec::preinj(v, 0)).unwrap(), Some(2));
        }
        assert!(c.path_distance(&Indec::preproj(0, 0), &Indec::preinj(0, 0)).is_err());
    }
}
