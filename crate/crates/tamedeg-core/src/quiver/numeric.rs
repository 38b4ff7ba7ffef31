use super::{Quiver, QuiverKind};
use crate::dim::{self, Dim};
use crate::error::{Error, Result};
use crate::linalg::{self, IMat};
use serde::{Deserialize, Serialize};

const PERIOD_CAP: u32 = 100;

/// Euler form, null root, Coxeter transformation and derived constants.
///
/// Convention: `<x,y> = x^T E y` with `E = I - A`, `A[s][t]` = number of
/// arrows `s -> t`; `c = -E^{-1} E^T`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Numerics {
    pub n: usize,
    arrows: Vec<(usize, usize)>,
    pub euler: IMat,
    pub cox: IMat,
    pub cox_inv: IMat,
    pub delta: Option<Dim>,
    pub period: u32,
    pub epsilon: Option<i64>,
    pub diameter: u32,
    pub proj: Vec<Dim>,
    pub inj: Vec<Dim>,
}

impl Numerics {
    pub fn new(q: &Quiver) -> Result<Self> {
        let n = q.vertex_count();
        let mut euler = linalg::identity(n);
        for &(s, t) in q.arrows() {
            euler[s][t] -= 1;
        }
        let inv_q = linalg::inverse(&euler).ok_or_else(|| Error::Internal("singular Euler matrix".into()))?;
        let inv = linalg::integral(&inv_q).ok_or_else(|| Error::Internal("non-integral E^-1".into()))?;
        let et = linalg::transpose(&euler);
        let cox = linalg::neg(&linalg::mul(&inv, &et));
        let cox_inv = linalg::neg(&linalg::mul(&linalg::transpose(&inv), &euler));
        if linalg::mul(&cox, &cox_inv) != linalg::identity(n) {
            return Err(Error::Internal("Coxeter inverse mismatch".into()));
        }
        let proj: Vec<Dim> = (0..n).map(|i| inv[i].iter().copied().collect()).collect();
        let inj: Vec<Dim> = (0..n).map(|i| (0..n).map(|j| inv[j][i]).collect()).collect();
        let delta = match q.kind() {
            QuiverKind::Dynkin => None,
            QuiverKind::ExtendedDynkin => {
                let sym: IMat = (0..n).map(|i| (0..n).map(|j| euler[i][j] + euler[j][i]).collect()).collect();
                let ker = linalg::kernel(&sym);
                match ker.as_slice() {
                    [v] if v.iter().all(|&x| x > 0) => Some(v.iter().copied().collect::<Dim>()),
                    _ => return Err(Error::BadQuiver("no positive null root".into())),
                }
            }
        };
        let mut num = Numerics {
            n,
            arrows: q.arrows().to_vec(),
            euler,
            cox,
            cox_inv,
            delta,
            period: 0,
            epsilon: None,
            diameter: diameter(n, q.arrows()),
            proj,
            inj,
        };
        num.find_period()?;
        Ok(num)
    }

    pub fn check_len(&self, x: &[i64]) -> Result<()> {
        if x.len() == self.n {
            Ok(())
        } else {
            Err(Error::DimMismatch { expected: self.n, got: x.len() })
        }
    }

    /// `sum x_i y_i - sum_{s->t} x_s y_t`; callers guarantee matching lengths.
    pub fn euler_form(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut v: i64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
        for &(s, t) in &self.arrows {
            v -= x[s] * y[t];
        }
        v
    }

    pub fn euler_checked(&self, x: &[i64], y: &[i64]) -> Result<i64> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.euler_form(x, y))
    }

    pub fn tits_form(&self, x: &[i64]) -> i64 {
        self.euler_form(x, x)
    }

    pub fn null_root(&self) -> Result<&Dim> {
        self.delta.as_ref().ok_or(Error::NotExtended)
    }

    /// `<delta, x>`; zero-extended to 0 on Dynkin quivers is not meaningful,
    /// so callers must be on an extended Dynkin quiver.
    pub fn defect(&self, x: &[i64]) -> i64 {
        match &self.delta {
            Some(d) => self.euler_form(d, x),
            None => 0,
        }
    }

    pub fn defect_checked(&self, x: &[i64]) -> Result<i64> {
        self.check_len(x)?;
        Ok(self.euler_form(self.null_root()?, x))
    }

    pub fn c(&self, x: &[i64]) -> Dim {
        linalg::apply(&self.cox, x)
    }

    pub fn c_inv(&self, x: &[i64]) -> Dim {
        linalg::apply(&self.cox_inv, x)
    }

    pub fn c_pow(&self, x: &[i64], k: i64) -> Dim {
        let mut v: Dim = x.iter().copied().collect();
        for _ in 0..k.unsigned_abs() {
            v = if k > 0 { self.c(&v) } else { self.c_inv(&v) };
        }
        v
    }

    fn find_period(&mut self) -> Result<()> {
        let n = self.n;
        let mut powers: Vec<Dim> = (0..n).map(|i| dim::unit(n, i)).collect();
        for p in 1..=PERIOD_CAP {
            for v in powers.iter_mut() {
                *v = self.c(v);
            }
            match self.delta.clone() {
                None => {
                    if (0..n).all(|i| powers[i] == dim::unit(n, i)) {
                        self.period = p;
                        return Ok(());
                    }
                }
                Some(delta) => {
                    let j = delta.iter().position(|&x| x == 1).expect("null root has an entry 1");
                    let drifts: Option<Vec<i64>> = (0..n)
                        .map(|i| {
                            let diff = dim::sub(&powers[i], &dim::unit(n, i));
                            let t = diff[j];
                            (diff == dim::scale(&delta, t)).then_some(t)
                        })
                        .collect();
                    if let Some(drifts) = drifts {
                        let mut eps = None;
                        for i in 0..n {
                            let d = self.defect(&dim::unit(n, i));
                            if d == 0 {
                                if drifts[i] != 0 {
                                    return Err(Error::Internal("drift without defect".into()));
                                }
                                continue;
                            }
                            if drifts[i] % d != 0 {
                                return Err(Error::Internal("non-integral epsilon".into()));
                            }
                            let e = drifts[i] / d;
                            if eps.is_some_and(|x| x != e) {
                                return Err(Error::Internal("inconsistent epsilon".into()));
                            }
                            eps = Some(e);
                        }
                        self.period = p;
                        self.epsilon = eps;
                        return Ok(());
                    }
                }
            }
        }
        Err(Error::Internal(format!("Coxeter period exceeds {PERIOD_CAP}")))
    }
}

/// Number of edges in a longest simple path of the underlying graph.
fn diameter(n: usize, arrows: &[(usize, usize)]) -> u32 {
    fn go(v: usize, seen: &mut Vec<bool>, arrows: &[(usize, usize)]) -> u32 {
        seen[v] = true;
        let mut best = 0;
        for &(s, t) in arrows {
            let w = if s == v { t } else if t == v { s } else { continue };
            if !seen[w] {
                best = best.max(1 + go(w, seen, arrows));
            }
        }
        seen[v] = false;
        best
    }
    (0..n).map(|v| go(v, &mut vec![false; n], arrows)).max().unwrap_or(0)
}
