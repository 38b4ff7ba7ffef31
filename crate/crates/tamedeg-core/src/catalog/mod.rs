//! All indecomposables of a tame quiver: tubes, translates, dimension
//! vectors, root lookup and distances in the AR quiver.

mod ar;
mod indec;
mod modsum;
mod tubes;

pub use indec::{Indec, TubeId};
pub use modsum::{parse_indec, ModuleSum};
pub use tubes::Tube;

use crate::dim::{self, Dim};
use crate::error::{Error, Result};
use crate::quiver::{Numerics, Quiver};
use parking_lot::RwLock;
use std::collections::HashMap;
use std::sync::Arc;

/// Safety bound on translate iterations during root lookup.
const LOOKUP_CAP: usize = 100_000;

/// `(centre, radius, forward)`.
type WindowKey = (Indec, u32, bool);

pub struct Catalog {
    quiver: Quiver,
    num: Numerics,
    tubes: Vec<Tube>,
    preproj: RwLock<Vec<Vec<Dim>>>,
    preinj: RwLock<Vec<Vec<Dim>>>,
    /// Dynkin only: number of valid shifts per vertex.
    dynkin_shifts: Vec<u32>,
    lookup: RwLock<HashMap<Dim, Option<Indec>>>,
    windows: RwLock<HashMap<WindowKey, Arc<[Indec]>>>,
}

impl Catalog {
    pub fn new(quiver: Quiver) -> Result<Self> {
        let num = Numerics::new(&quiver)?;
        let n = quiver.vertex_count();
        let tubes = if quiver.is_extended() { tubes::discover(&num)? } else { Vec::new() };
        let mut dynkin_shifts = Vec::new();
        let mut pp: Vec<Vec<Dim>> = num.proj.iter().map(|p| vec![p.clone()]).collect();
        if !quiver.is_extended() {
            for (i, col) in pp.iter_mut().enumerate() {
                loop {
                    let next = num.c_inv(col.last().expect("nonempty"));
                    if !dim::is_positive(&next) {
                        break;
                    }
                    if col.len() > LOOKUP_CAP {
                        return Err(Error::Internal(format!("runaway component at vertex {}", i + 1)));
                    }
                    col.push(next);
                }
                dynkin_shifts.push(col.len() as u32 - 1);
            }
        }
        let pi = num.inj.iter().map(|q| vec![q.clone()]).collect();
        let cat = Catalog {
            quiver,
            num,
            tubes,
            preproj: RwLock::new(pp),
            preinj: RwLock::new(pi),
            dynkin_shifts,
            lookup: RwLock::new(HashMap::new()),
            windows: RwLock::new(HashMap::new()),
        };
        if cat.is_extended() {
            let total: u32 = cat.tubes.iter().map(|t| t.period - 1).sum();
            if total as usize != n - 2 {
                return Err(Error::Internal(format!("tube periods sum to {total}, expected {}", n - 2)));
            }
        }
        Ok(cat)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn num(&self) -> &Numerics {
        &self.num
    }

    pub fn n(&self) -> usize {
        self.num.n
    }

    pub fn is_extended(&self) -> bool {
        self.quiver.is_extended()
    }

    /// Non-homogeneous tubes in canonical order.
    pub fn tubes(&self) -> &[Tube] {
        &self.tubes
    }

    pub fn period(&self, t: TubeId) -> u32 {
        match t {
            TubeId::NonHom(i) => self.tubes[i as usize].period,
            TubeId::Hom(_) => 1,
        }
    }

    pub fn delta(&self) -> &Dim {
        self.num.delta.as_ref().expect("extended Dynkin quiver")
    }

    pub fn coxeter_period(&self) -> u32 {
        self.num.period
    }

    /// `2 (p(Q) + d(Q))`, the distance window of the degeneration test.
    pub fn base_window(&self) -> u32 {
        2 * (self.num.period + self.num.diameter)
    }

    fn pp_dim(&self, v: usize, k: usize) -> Dim {
        {
            let g = self.preproj.read();
            if let Some(d) = g[v].get(k) {
                return d.clone();
            }
        }
        let mut g = self.preproj.write();
        while g[v].len() <= k {
            let next = self.num.c_inv(g[v].last().expect("nonempty"));
            g[v].push(next);
        }
        g[v][k].clone()
    }

    fn pi_dim(&self, v: usize, k: usize) -> Dim {
        {
            let g = self.preinj.read();
            if let Some(d) = g[v].get(k) {
                return d.clone();
            }
        }
        let mut g = self.preinj.write();
        while g[v].len() <= k {
            let next = self.num.c(g[v].last().expect("nonempty"));
            g[v].push(next);
        }
        g[v][k].clone()
    }

    /// Dimension vector of `tau^{-k} P(v)`.
    pub fn preproj_dim(&self, v: usize, k: u32) -> Dim {
        self.pp_dim(v, k as usize)
    }

    /// Dimension vector of `tau^k I(v)`.
    pub fn preinj_dim(&self, v: usize, k: u32) -> Dim {
        self.pi_dim(v, k as usize)
    }

    /// Regular composition factor indices of `E_s(l)` from the socle up.
    pub fn factors(&self, t: TubeId, s: u16, l: u32) -> impl Iterator<Item = u32> {
        let p = self.period(t);
        (0..l).map(move |j| (s as u32 + j) % p)
    }

    pub fn dim(&self, x: &Indec) -> Dim {
        match *x {
            Indec::Preproj { v, k } => self.pp_dim(v as usize, k as usize),
            Indec::Preinj { v, k } => self.pi_dim(v as usize, k as usize),
            Indec::Reg { tube: TubeId::Hom(_), l, .. } => dim::scale(self.delta(), l as i64),
            Indec::Reg { tube: t @ TubeId::NonHom(i), s, l } => {
                let tube = &self.tubes[i as usize];
                let mut d = dim::zero(self.n());
                for f in self.factors(t, s, l) {
                    dim::add_assign(&mut d, &tube.simples[f as usize], 1);
                }
                d
            }
        }
    }

    pub fn sum_dim(&self, m: &ModuleSum) -> Dim {
        let mut d = dim::zero(self.n());
        for (x, c) in m.iter() {
            dim::add_assign(&mut d, &self.dim(x), c as i64);
        }
        d
    }

    pub fn defect(&self, x: &Indec) -> i64 {
        match x {
            Indec::Reg { .. } => 0,
            _ => self.num.defect(&self.dim(x)),
        }
    }

    pub fn sum_defect(&self, m: &ModuleSum) -> i64 {
        m.iter().map(|(x, c)| c as i64 * self.defect(x)).sum()
    }

    /// Checks that `x` names an existing indecomposable of this quiver.
    pub fn validate(&self, x: &Indec) -> Result<()> {
        let n = self.n();
        let bad = |why: &str| Err(Error::Precondition(format!("{x}: {why}")));
        match *x {
            Indec::Preproj { v, k } => {
                if v as usize >= n {
                    return bad("vertex out of range");
                }
                if !self.is_extended() && k > self.dynkin_shifts[v as usize] {
                    return bad("no such module");
                }
            }
            Indec::Preinj { v, .. } => {
                if v as usize >= n {
                    return bad("vertex out of range");
                }
                if !self.is_extended() {
                    return bad("Dynkin modules use the preprojective encoding");
                }
            }
            Indec::Reg { tube, s, l } => {
                if !self.is_extended() {
                    return bad("Dynkin quivers have no tubes");
                }
                if l == 0 {
                    return bad("zero length");
                }
                match tube {
                    TubeId::NonHom(i) if i as usize >= self.tubes.len() => return bad("no such tube"),
                    TubeId::NonHom(i) if s as u32 >= self.tubes[i as usize].period => return bad("socle out of range"),
                    TubeId::Hom(0) => return bad("homogeneous slots start at 1"),
                    TubeId::Hom(_) if s != 0 => return bad("homogeneous socle index is 1"),
                    _ => {}
                }
            }
        }
        Ok(())
    }

    pub fn validate_sum(&self, m: &ModuleSum) -> Result<()> {
        m.iter().try_for_each(|(x, _)| self.validate(x))
    }

    /// Canonical encoding of an injective `I(v)`; on Dynkin quivers this is
    /// the preprojective encoding.
    pub fn injective(&self, v: usize) -> Indec {
        if self.is_extended() {
            Indec::preinj(v, 0)
        } else {
            self.find_real(&self.num.inj[v].clone()).expect("injectives are indecomposable")
        }
    }

    pub fn is_projective(&self, x: &Indec) -> bool {
        matches!(x, Indec::Preproj { k: 0, .. })
    }

    pub fn is_injective(&self, x: &Indec) -> bool {
        match *x {
            Indec::Preinj { k, .. } => k == 0,
            Indec::Preproj { v, k } if !self.is_extended() => k == self.dynkin_shifts[v as usize],
            _ => false,
        }
    }

    pub fn tau(&self, x: &Indec) -> Result<Indec> {
        Ok(match *x {
            Indec::Preproj { k: 0, .. } => return Err(Error::Projective(x.to_text())),
            Indec::Preproj { v, k } => Indec::Preproj { v, k: k - 1 },
            Indec::Preinj { v, k } => Indec::Preinj { v, k: k + 1 },
            Indec::Reg { tube, s, l } => {
                let p = self.period(tube) as u16;
                Indec::Reg { tube, s: (s + p - 1) % p, l }
            }
        })
    }

    pub fn tau_inv(&self, x: &Indec) -> Result<Indec> {
        if self.is_injective(x) {
            return Err(Error::Injective(x.to_text()));
        }
        Ok(match *x {
            Indec::Preproj { v, k } => Indec::Preproj { v, k: k + 1 },
            Indec::Preinj { v, k } => Indec::Preinj { v, k: k - 1 },
            Indec::Reg { tube, s, l } => {
                let p = self.period(tube) as u16;
                Indec::Reg { tube, s: (s + 1) % p, l }
            }
        })
    }

    pub fn tau_pow(&self, x: &Indec, k: i64) -> Result<Indec> {
        let mut y = *x;
        for _ in 0..k.unsigned_abs() {
            y = if k > 0 { self.tau(&y)? } else { self.tau_inv(&y)? };
        }
        Ok(y)
    }

    /// Regular top index of a tube module: `s + l - 1 mod p`.
    pub fn top(&self, x: &Indec) -> Option<u32> {
        match *x {
            Indec::Reg { tube, s, l } => Some((s as u32 + l - 1) % self.period(tube)),
            _ => None,
        }
    }

    pub fn socle(&self, x: &Indec) -> Option<u32> {
        match *x {
            Indec::Reg { s, .. } => Some(s as u32),
            _ => None,
        }
    }

    /// Number of regular composition factors of `x` isomorphic to `E_e`.
    pub fn factor_count(&self, x: &Indec, e: u32) -> u32 {
        match *x {
            Indec::Reg { tube, s, l } => self.factors(tube, s, l).filter(|&f| f == e).count() as u32,
            _ => 0,
        }
    }

    /// The unique indecomposable with real-root dimension vector `d`
    /// (non-homogeneous; `q(d) = 1`), if any.
    pub fn find_real(&self, d: &[i64]) -> Option<Indec> {
        if d.len() != self.n() || !dim::is_positive(d) || self.num.tits_form(d) != 1 {
            return None;
        }
        let key: Dim = d.iter().copied().collect();
        if let Some(hit) = self.lookup.read().get(&key) {
            return *hit;
        }
        let found = self.find_real_uncached(d);
        self.lookup.write().insert(key, found);
        found
    }

    fn find_real_uncached(&self, d: &[i64]) -> Option<Indec> {
        let n = self.n();
        let df = self.num.defect(d);
        if !self.is_extended() || df < 0 {
            let mut v: Dim = d.iter().copied().collect();
            for k in 0..LOOKUP_CAP {
                if let Some(i) = (0..n).find(|&i| self.num.proj[i] == v) {
                    return Some(Indec::preproj(i, k as u32));
                }
                v = self.num.c(&v);
                if !dim::is_positive(&v) {
                    return None;
                }
            }
            return None;
        }
        if df > 0 {
            let mut v: Dim = d.iter().copied().collect();
            for k in 0..LOOKUP_CAP {
                if let Some(i) = (0..n).find(|&i| self.num.inj[i] == v) {
                    return Some(Indec::preinj(i, k as u32));
                }
                v = self.num.c_inv(&v);
                if !dim::is_positive(&v) {
                    return None;
                }
            }
            return None;
        }
        self.find_regular(d).into_iter().next()
    }

    /// Non-homogeneous tube modules with dimension vector `d`.
    pub fn find_regular(&self, d: &[i64]) -> Vec<Indec> {
        let size = dim::total(d);
        let mut out = Vec::new();
        for (ti, tube) in self.tubes.iter().enumerate() {
            for s in 0..tube.period {
                let mut acc = dim::zero(self.n());
                let mut l = 0;
                while dim::total(&acc) < size {
                    dim::add_assign(&mut acc, &tube.simples[((s + l) % tube.period) as usize], 1);
                    l += 1;
                }
                if acc.as_slice() == d {
                    out.push(Indec::reg(ti, s as usize, l));
                }
            }
        }
        out
    }

    /// All indecomposables with dimension vector `d`: the real root module,
    /// or for `d = m delta` the tube modules of that dimension together with
    /// the homogeneous module `H_slot(m)` for each requested slot.
    pub fn find_all(&self, d: &[i64], slots: &[u32]) -> Vec<Indec> {
        if self.is_extended() {
            if let Some(m) = dim::multiple_of(d, self.delta()).filter(|&m| m > 0) {
                let mut out = self.find_regular(d);
                out.extend(slots.iter().map(|&h| Indec::hom(h, m as u32)));
                return out;
            }
        }
        self.find_real(d).into_iter().collect()
    }

    /// All indecomposables with `dim <= bound`, each once; homogeneous
    /// modules are represented in slot 1.
    pub fn roots_up_to(&self, bound: &[i64]) -> Vec<Indec> {
        let n = self.n();
        let mut out = Vec::new();
        if !self.is_extended() {
            for v in 0..n {
                for k in 0..=self.dynkin_shifts[v] {
                    if dim::le(&self.preproj_dim(v, k), bound) {
                        out.push(Indec::preproj(v, k));
                    }
                }
            }
            out.sort();
            return out;
        }
        let p = self.coxeter_period();
        for v in 0..n {
            self.scan_component(p, |k| self.preproj_dim(v, k), bound, |k| out.push(Indec::preproj(v, k)));
            self.scan_component(p, |k| self.preinj_dim(v, k), bound, |k| out.push(Indec::preinj(v, k)));
        }
        for (ti, tube) in self.tubes.iter().enumerate() {
            for s in 0..tube.period {
                let mut l = 1;
                while dim::le(&self.dim(&Indec::reg(ti, s as usize, l)), bound) {
                    out.push(Indec::reg(ti, s as usize, l));
                    l += 1;
                }
            }
        }
        let mut l = 1;
        while dim::le(&dim::scale(self.delta(), l as i64), bound) {
            out.push(Indec::hom(1, l));
            l += 1;
        }
        out.sort();
        out
    }

    /// Shifts `k` of one component member within `bound`. Since
    /// `dim(k + p) >= dim(k)`, a full period of misses ends the scan.
    fn scan_component(&self, p: u32, dim_of: impl Fn(u32) -> Dim, bound: &[i64], mut hit: impl FnMut(u32)) {
        let mut misses = 0;
        let mut k = 0;
        while misses < p {
            if dim::le(&dim_of(k), bound) {
                hit(k);
                misses = 0;
            } else {
                misses += 1;
            }
            k += 1;
        }
    }

    /// Dynkin: every indecomposable.
    pub fn all_dynkin(&self) -> Vec<Indec> {
        (0..self.n())
            .flat_map(|v| (0..=self.dynkin_shifts[v]).map(move |k| Indec::preproj(v, k)))
            .collect()
    }

    /// Cached window: successors (`forward`) or predecessors of `x` within
    /// path distance `w`, including `x`.
    pub fn window(&self, x: &Indec, w: u32, forward: bool) -> Arc<[Indec]> {
        if let Some(hit) = self.windows.read().get(&(*x, w, forward)) {
            return hit.clone();
        }
        let found: Vec<Indec> = if forward { self.successors_within(x, w) } else { self.predecessors_within(x, w) }
            .into_iter()
            .map(|p| p.0)
            .collect();
        let found: Arc<[Indec]> = found.into();
        self.windows.write().insert((*x, w, forward), found.clone());
        found
    }

    pub fn dynkin_shifts(&self, v: usize) -> u32 {
        self.dynkin_shifts[v]
    }
}
