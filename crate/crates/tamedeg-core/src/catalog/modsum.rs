use super::indec::{Indec, TubeId};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Canonical finite multiset of indecomposables.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ModuleSum {
    items: Vec<(Indec, u32)>,
}

impl ModuleSum {
    pub fn zero() -> Self {
        ModuleSum::default()
    }

    pub fn single(x: Indec) -> Self {
        ModuleSum { items: vec![(x, 1)] }
    }

    pub fn from_counts(items: impl IntoIterator<Item = (Indec, u32)>) -> Self {
        let mut m = ModuleSum::zero();
        for (x, c) in items {
            m.add(x, c);
        }
        m
    }

    pub fn add(&mut self, x: Indec, count: u32) {
        if count == 0 {
            return;
        }
        match self.items.binary_search_by(|p| p.0.cmp(&x)) {
            Ok(i) => self.items[i].1 += count,
            Err(i) => self.items.insert(i, (x, count)),
        }
    }

    /// Removes `count` copies; false (and unchanged) if not present often enough.
    pub fn remove(&mut self, x: &Indec, count: u32) -> bool {
        match self.items.binary_search_by(|p| p.0.cmp(x)) {
            Ok(i) if self.items[i].1 >= count => {
                self.items[i].1 -= count;
                if self.items[i].1 == 0 {
                    self.items.remove(i);
                }
                true
            }
            _ => count == 0,
        }
    }

    pub fn plus(&self, other: &ModuleSum) -> ModuleSum {
        let mut m = self.clone();
        for &(x, c) in &other.items {
            m.add(x, c);
        }
        m
    }

    /// `self - other` as multisets, if `other` is contained in `self`.
    pub fn minus(&self, other: &ModuleSum) -> Option<ModuleSum> {
        let mut m = self.clone();
        for (x, c) in &other.items {
            if !m.remove(x, *c) {
                return None;
            }
        }
        Some(m)
    }

    pub fn is_zero(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[(Indec, u32)] {
        &self.items
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Indec, u32)> {
        self.items.iter().map(|(x, c)| (x, *c))
    }

    /// Summands with repetition, in canonical order.
    pub fn summands(&self) -> Vec<Indec> {
        self.items.iter().flat_map(|&(x, c)| std::iter::repeat_n(x, c as usize)).collect()
    }

    pub fn count(&self) -> u32 {
        self.items.iter().map(|p| p.1).sum()
    }

    pub fn multiplicity(&self, x: &Indec) -> u32 {
        self.items.binary_search_by(|p| p.0.cmp(x)).map(|i| self.items[i].1).unwrap_or(0)
    }

    pub fn contains(&self, x: &Indec) -> bool {
        self.multiplicity(x) > 0
    }

    pub fn filter(&self, pred: impl Fn(&Indec) -> bool) -> ModuleSum {
        ModuleSum { items: self.items.iter().copied().filter(|p| pred(&p.0)).collect() }
    }

    pub fn preproj_part(&self) -> ModuleSum {
        self.filter(Indec::is_preproj)
    }

    pub fn regular_part(&self) -> ModuleSum {
        self.filter(Indec::is_regular)
    }

    pub fn preinj_part(&self) -> ModuleSum {
        self.filter(Indec::is_preinj)
    }

    /// Distinct tubes used, in canonical order.
    pub fn tubes(&self) -> Vec<TubeId> {
        let mut t: Vec<TubeId> = self.items.iter().filter_map(|p| p.0.tube()).collect();
        t.dedup();
        t
    }

    pub fn map(&self, f: impl Fn(&Indec) -> Indec) -> ModuleSum {
        ModuleSum::from_counts(self.items.iter().map(|(x, c)| (f(x), *c)))
    }

    /// True if no indecomposable occurs in both sums.
    pub fn disjoint(&self, other: &ModuleSum) -> bool {
        self.items.iter().all(|(x, _)| !other.contains(x))
    }

    pub fn to_text(&self) -> String {
        if self.items.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .items
            .iter()
            .map(|(x, c)| if *c == 1 { x.to_text() } else { format!("{}*{c}", x.to_text()) })
            .collect();
        parts.join("+")
    }

    pub fn display(&self) -> String {
        if self.items.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .items
            .iter()
            .map(|(x, c)| if *c == 1 { x.display() } else { format!("{}*{c}", x.display()) })
            .collect();
        parts.join(" + ")
    }

    /// Parses the canonical text form; also accepts the `tau^k` display forms.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "0" || text.is_empty() {
            return Ok(ModuleSum::zero());
        }
        let mut m = ModuleSum::zero();
        for tok in split_top_level(text) {
            let tok = tok.trim();
            let (body, count) = match tok.rsplit_once('*') {
                Some((b, c)) => {
                    (b.trim(), c.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad multiplicity in {tok:?}")))?)
                }
                None => (tok, 1),
            };
            m.add(parse_indec(body)?, count);
        }
        Ok(m)
    }
}

fn split_top_level(s: &str) -> Vec<&str> {
    // `+` also occurs inside `^+k`
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut start = 0;
    for i in 0..bytes.len() {
        if bytes[i] == b'+' && (i == 0 || bytes[i - 1] != b'^') {
            out.push(&s[start..i]);
            start = i + 1;
        }
    }
    out.push(&s[start..]);
    out
}

fn num(s: &str, what: &str) -> Result<u32> {
    s.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad {what} {s:?}")))
}

fn paren_vertex(s: &str) -> Result<(usize, &str)> {
    let open = s.find('(').ok_or_else(|| Error::Parse(format!("missing '(' in {s:?}")))?;
    let close = s.find(')').ok_or_else(|| Error::Parse(format!("missing ')' in {s:?}")))?;
    let v = num(&s[open + 1..close], "vertex")?;
    if v == 0 {
        return Err(Error::Parse("vertices are 1-based".into()));
    }
    Ok((v as usize - 1, &s[close + 1..]))
}

pub fn parse_indec(s: &str) -> Result<Indec> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix("tau^") {
        let (shift, body) = rest.split_once(' ').ok_or_else(|| Error::Parse(format!("bad translate {s:?}")))?;
        let shift: i64 = shift.parse().map_err(|_| Error::Parse(format!("bad shift in {s:?}")))?;
        let body = body.trim();
        let (v, tail) = paren_vertex(&body[1..])?;
        if !tail.is_empty() {
            return Err(Error::Parse(format!("trailing text in {s:?}")));
        }
        return match (body.chars().next(), shift <= 0) {
            (Some('P'), true) => Ok(Indec::preproj(v, (-shift) as u32)),
            (Some('I'), _) if shift >= 0 => Ok(Indec::preinj(v, shift as u32)),
            _ => Err(Error::Parse(format!("unsupported translate {s:?}"))),
        };
    }
    let first = s.chars().next().ok_or_else(|| Error::Parse("empty summand".into()))?;
    match first {
        'P' | 'I' => {
            let (v, tail) = paren_vertex(&s[1..])?;
            let k = match (first, tail) {
                (_, "") => 0,
                ('P', t) if t.starts_with("^-") => num(&t[2..], "shift")?,
                ('I', t) if t.starts_with("^+") => num(&t[2..], "shift")?,
                _ => return Err(Error::Parse(format!("bad shift in {s:?}"))),
            };
            Ok(if first == 'P' { Indec::preproj(v, k) } else { Indec::preinj(v, k) })
        }
        'E' => {
            let (tube, rest) = s[1..].split_once('_').ok_or_else(|| Error::Parse(format!("bad tube module {s:?}")))?;
            let t = num(tube, "tube")?;
            let (sv, l) = split_len(rest)?;
            let sv = num(sv, "socle")?;
            if t == 0 || sv == 0 || l == 0 {
                return Err(Error::Parse(format!("tube, socle and length are positive in {s:?}")));
            }
            Ok(Indec::reg(t as usize - 1, sv as usize - 1, l))
        }
        'H' => {
            let (slot, l) = split_len(&s[1..])?;
            let slot = num(slot, "slot")?;
            if slot == 0 || l == 0 {
                return Err(Error::Parse(format!("slot and length are positive in {s:?}")));
            }
            Ok(Indec::hom(slot, l))
        }
        _ => Err(Error::Parse(format!("unknown summand {s:?}"))),
    }
}

fn split_len(s: &str) -> Result<(&str, u32)> {
    let open = s.find('(').ok_or_else(|| Error::Parse(format!("missing length in {s:?}")))?;
    let close = s.strip_suffix(')').ok_or_else(|| Error::Parse(format!("missing ')' in {s:?}")))?;
    Ok((&s[..open], num(&close[open + 1..], "length")?))
}

impl fmt::Display for ModuleSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
