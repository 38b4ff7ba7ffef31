use serde::{Deserialize, Serialize};
use std::fmt;

/// A regular tube: one of the non-homogeneous tubes, or a homogeneous tube
/// identified by a parameter label (slot). Slot labels only matter up to a
/// bijection; modules compare by whether their slots coincide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TubeId {
    NonHom(u8),
    Hom(u32),
}

/// Symbolic indecomposable. Vertices and socle indices are 0-based.
///
/// Ordering (preprojective < regular < preinjective, then fields) is the
/// canonical summand order of every `ModuleSum`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Indec {
    /// `tau^{-k} P(v)`
    Preproj { v: u16, k: u32 },
    /// `E_s(l)`: regular socle `E_s`, regular length `l`.
    Reg { tube: TubeId, s: u16, l: u32 },
    /// `tau^k I(v)`
    Preinj { v: u16, k: u32 },
}

impl Indec {
    pub fn preproj(v: usize, k: u32) -> Self {
        Indec::Preproj { v: v as u16, k }
    }

    pub fn preinj(v: usize, k: u32) -> Self {
        Indec::Preinj { v: v as u16, k }
    }

    pub fn reg(tube: usize, s: usize, l: u32) -> Self {
        Indec::Reg { tube: TubeId::NonHom(tube as u8), s: s as u16, l }
    }

    pub fn hom(slot: u32, l: u32) -> Self {
        Indec::Reg { tube: TubeId::Hom(slot), s: 0, l }
    }

    pub fn is_preproj(&self) -> bool {
        matches!(self, Indec::Preproj { .. })
    }

    pub fn is_regular(&self) -> bool {
        matches!(self, Indec::Reg { .. })
    }

    pub fn is_preinj(&self) -> bool {
        matches!(self, Indec::Preinj { .. })
    }

    pub fn is_homogeneous(&self) -> bool {
        matches!(self, Indec::Reg { tube: TubeId::Hom(_), .. })
    }

    pub fn tube(&self) -> Option<TubeId> {
        match self {
            Indec::Reg { tube, .. } => Some(*tube),
            _ => None,
        }
    }

    pub fn reg_len(&self) -> Option<u32> {
        match self {
            Indec::Reg { l, .. } => Some(*l),
            _ => None,
        }
    }

    /// Canonical text form, e.g. `P(3)^-2`, `E1_3(10)`, `H2(1)`, `I(4)^+1`.
    pub fn to_text(&self) -> String {
        match *self {
            Indec::Preproj { v, k: 0 } => format!("P({})", v + 1),
            Indec::Preproj { v, k } => format!("P({})^-{k}", v + 1),
            Indec::Preinj { v, k: 0 } => format!("I({})", v + 1),
            Indec::Preinj { v, k } => format!("I({})^+{k}", v + 1),
            Indec::Reg { tube: TubeId::NonHom(t), s, l } => format!("E{}_{}({l})", t + 1, s + 1),
            Indec::Reg { tube: TubeId::Hom(h), l, .. } => format!("H{h}({l})"),
        }
    }

    /// Display form with explicit translates: `tau^-2 P(3)`, `tau^1 I(4)`.
    pub fn display(&self) -> String {
        match *self {
            Indec::Preproj { v, k: 0 } => format!("P({})", v + 1),
            Indec::Preproj { v, k } => format!("tau^-{k} P({})", v + 1),
            Indec::Preinj { v, k: 0 } => format!("I({})", v + 1),
            Indec::Preinj { v, k } => format!("tau^{k} I({})", v + 1),
            _ => self.to_text(),
        }
    }
}

impl fmt::Display for Indec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
