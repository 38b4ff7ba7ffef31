//! Quivers of Dynkin and extended Dynkin type and their numerical invariants.
//!
//! Vertices are 0-based internally and 1-based in every text form.

mod numeric;

pub use numeric::Numerics;

use crate::error::{Error, Result};
use crate::linalg;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuiverKind {
    Dynkin,
    ExtendedDynkin,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    n: usize,
    arrows: Vec<(usize, usize)>,
    kind: QuiverKind,
    label: String,
}

impl Quiver {
    /// Builds a quiver from 0-based arrows, rejecting everything that is not
    /// a connected acyclic quiver of (extended) Dynkin type.
    pub fn new(n: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadQuiver("no vertices".into()));
        }
        for &(s, t) in &arrows {
            if s >= n || t >= n {
                return Err(Error::BadQuiver(format!("arrow {}->{} out of range", s + 1, t + 1)));
            }
            if s == t {
                return Err(Error::BadQuiver("loops are not allowed".into()));
            }
        }
        if !connected(n, &arrows) {
            return Err(Error::BadQuiver("underlying graph is not connected".into()));
        }
        if topological_order(n, &arrows).is_none() {
            return Err(Error::BadQuiver("oriented cycle".into()));
        }
        let sym = symmetric_form(n, &arrows);
        let kind = if linalg::positive_definite(&sym) {
            QuiverKind::Dynkin
        } else if is_extended(&sym) {
            QuiverKind::ExtendedDynkin
        } else {
            return Err(Error::BadQuiver("Tits form is indefinite (wild quiver)".into()));
        };
        let label = shape_label(n, &arrows, kind);
        let arrows = {
            let mut a = arrows;
            a.sort_unstable();
            a
        };
        Ok(Quiver { n, arrows, kind, label })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn kind(&self) -> QuiverKind {
        self.kind
    }

    pub fn is_extended(&self) -> bool {
        self.kind == QuiverKind::ExtendedDynkin
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// The unique sink, if there is exactly one.
    pub fn sink(&self) -> Option<usize> {
        let sinks: Vec<usize> =
            (0..self.n).filter(|&v| self.arrows.iter().all(|&(s, _)| s != v)).collect();
        (sinks.len() == 1).then(|| sinks[0])
    }

    pub fn in_arrows(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().filter(move |a| a.1 == v).map(|a| a.0)
    }

    pub fn out_arrows(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().filter(move |a| a.0 == v).map(|a| a.1)
    }

    /// Parses `vertices N` followed by `arrow s t` lines (1-based, `#` comments).
    pub fn from_text(text: &str) -> Result<Self> {
        let mut n = None;
        let mut arrows = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::Parse(format!("line {}: {line:?}", lineno + 1));
            match toks.as_slice() {
                ["vertices", k] => n = Some(k.parse::<usize>().map_err(|_| bad())?),
                ["arrow", s, t] => {
                    let s: usize = s.parse().map_err(|_| bad())?;
                    let t: usize = t.parse().map_err(|_| bad())?;
                    if s == 0 || t == 0 {
                        return Err(bad());
                    }
                    arrows.push((s - 1, t - 1));
                }
                _ => return Err(bad()),
            }
        }
        let n = n.ok_or_else(|| Error::Parse("missing `vertices` line".into()))?;
        Quiver::new(n, arrows)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("vertices {}\n", self.n);
        for &(a, b) in &self.arrows {
            s.push_str(&format!("arrow {} {}\n", a + 1, b + 1));
        }
        s
    }

    /// Orients a tree (or any graph) so that every edge points along a
    /// shortest path toward `sink` (0-based).
    fn toward_sink(n: usize, edges: &[(usize, usize)], sink: usize) -> Result<Self> {
        if sink >= n {
            return Err(Error::BadQuiver(format!("sink {} out of range", sink + 1)));
        }
        let dist = bfs_dist(n, edges, sink);
        let arrows = edges
            .iter()
            .map(|&(a, b)| if dist[a] > dist[b] { (a, b) } else { (b, a) })
            .collect();
        Quiver::new(n, arrows)
    }

    /// Extended Dynkin quiver of type D~n (n >= 4): vertices 1,2 attach to 3,
    /// a chain 3..n-1, and n, n+1 attach to n-1. `sink` is 1-based.
    pub fn extended_d(n: usize, sink: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::BadQuiver("D~n needs n >= 4".into()));
        }
        Self::toward_sink(n + 1, &d_edges(n + 1), sink.wrapping_sub(1))
    }

    /// E~6: chain 1-2-3-4-5 and branch 3-6-7.
    pub fn extended_e6(sink: usize) -> Result<Self> {
        let e = [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)];
        Self::toward_sink(7, &e, sink.wrapping_sub(1))
    }

    /// E~7: chain 1..7 with 8 attached to 4.
    pub fn extended_e7(sink: usize) -> Result<Self> {
        let mut e: Vec<(usize, usize)> = (0..6).map(|i| (i, i + 1)).collect();
        e.push((3, 7));
        Self::toward_sink(8, &e, sink.wrapping_sub(1))
    }

    /// E~8: chain 1..8 with 9 attached to 3.
    pub fn extended_e8(sink: usize) -> Result<Self> {
        let mut e: Vec<(usize, usize)> = (0..7).map(|i| (i, i + 1)).collect();
        e.push((2, 8));
        Self::toward_sink(9, &e, sink.wrapping_sub(1))
    }

    /// A~m on the cycle 1,2,..,m+1. `forward[i]` orients edge i as
    /// (i+1)->(i+2) when true; the last edge joins m+1 and 1.
    pub fn extended_a(forward: &[bool]) -> Result<Self> {
        let k = forward.len();
        if k < 2 {
            return Err(Error::BadQuiver("A~m needs at least two edges".into()));
        }
        let arrows = (0..k)
            .map(|i| {
                let (a, b) = (i, (i + 1) % k);
                if forward[i] { (a, b) } else { (b, a) }
            })
            .collect();
        Quiver::new(k, arrows)
    }

    /// A~m with a single sink and a single source (both 1-based).
    pub fn extended_a_one_sink(m: usize, sink: usize, source: usize) -> Result<Self> {
        let k = m + 1;
        if sink == 0 || source == 0 || sink > k || source > k || sink == source {
            return Err(Error::BadQuiver("sink and source must be distinct vertices".into()));
        }
        let (x, y) = (sink - 1, source - 1);
        // walking forward from the source reaches the sink: those edges point forward
        let forward = (0..k)
            .map(|i| {
                let along = (i + k - y) % k;
                along < (x + k - y) % k
            })
            .collect::<Vec<_>>();
        Self::extended_a(&forward)
    }

    /// Dynkin A_n with one sink, D_n (1,2 attach to 3, chain 3..n),
    /// E_n (chain 1..n-1, n attached to 3).
    pub fn dynkin(family: char, n: usize, sink: usize) -> Result<Self> {
        let edges: Vec<(usize, usize)> = match family {
            'A' if n >= 1 => (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect(),
            'D' if n >= 4 => {
                let mut e = vec![(0, 2), (1, 2)];
                e.extend((2..n - 1).map(|i| (i, i + 1)));
                e
            }
            'E' if (6..=8).contains(&n) => {
                let mut e: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, i + 1)).collect();
                e.push((2, n - 1));
                e
            }
            _ => return Err(Error::BadQuiver(format!("unknown Dynkin type {family}{n}"))),
        };
        Self::toward_sink(n, &edges, sink.wrapping_sub(1))
    }

    /// Linear A_n with arbitrary orientation: `forward[i]` means (i+1)->(i+2).
    pub fn dynkin_a(forward: &[bool]) -> Result<Self> {
        let arrows =
            forward.iter().enumerate().map(|(i, &f)| if f { (i, i + 1) } else { (i + 1, i) }).collect();
        Quiver::new(forward.len() + 1, arrows)
    }

    pub fn kronecker() -> Self {
        Quiver::new(2, vec![(0, 1), (0, 1)]).expect("Kronecker quiver is tame")
    }

    /// Resolves names such as `E6`, `E~6`, `D~8`, `A3`, `A~3` in one-sink
    /// orientation. `source` is only used for A~m (default: the vertex
    /// farthest from the sink).
    pub fn by_name(name: &str, sink: usize, source: Option<usize>) -> Result<Self> {
        let name = name.trim();
        let (affine, rest) = match name.find('~') {
            Some(_) => (true, name.replace('~', "")),
            None => (false, name.to_string()),
        };
        let mut chars = rest.chars();
        let family = chars.next().ok_or_else(|| Error::Parse("empty type".into()))?.to_ascii_uppercase();
        let n: usize = chars.as_str().parse().map_err(|_| Error::Parse(format!("bad type {name:?}")))?;
        match (affine, family) {
            (true, 'A') => {
                let k = n + 1;
                let src = source.unwrap_or(((sink + k / 2 - 1) % k) + 1);
                Self::extended_a_one_sink(n, sink, src)
            }
            (true, 'D') => Self::extended_d(n, sink),
            (true, 'E') => match n {
                6 => Self::extended_e6(sink),
                7 => Self::extended_e7(sink),
                8 => Self::extended_e8(sink),
                _ => Err(Error::BadQuiver(format!("no type E~{n}"))),
            },
            (false, f) => Self::dynkin(f, n, sink),
            _ => Err(Error::BadQuiver(format!("unknown type {name:?}"))),
        }
    }
}

fn d_edges(n: usize) -> Vec<(usize, usize)> {
    // 1-based: 1-3, 2-3, chain 3..n-2, n-1 and n attach to n-2
    let mut e = vec![(0, 2), (1, 2)];
    for i in 2..n - 3 {
        e.push((i, i + 1));
    }
    e.push((n - 2, n - 3));
    e.push((n - 1, n - 3));
    e
}

fn bfs_dist(n: usize, edges: &[(usize, usize)], from: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; n];
    dist[from] = 0;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for &(a, b) in edges {
            let w = if a == v { b } else if b == v { a } else { continue };
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

fn connected(n: usize, arrows: &[(usize, usize)]) -> bool {
    bfs_dist(n, arrows, 0).iter().all(|&d| d != usize::MAX)
}

pub(crate) fn topological_order(n: usize, arrows: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; n];
    for &(_, t) in arrows {
        indeg[t] += 1;
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop() {
        order.push(v);
        for &(s, t) in arrows {
            if s == v {
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    ready.push(t);
                }
            }
        }
    }
    (order.len() == n).then_some(order)
}

fn symmetric_form(n: usize, arrows: &[(usize, usize)]) -> linalg::IMat {
    let mut m = linalg::identity(n);
    for row in m.iter_mut() {
        for x in row.iter_mut() {
            *x *= 2;
        }
    }
    for &(s, t) in arrows {
        m[s][t] -= 1;
        m[t][s] -= 1;
    }
    m
}

/// Semi-definite with a one-dimensional radical spanned by a positive
/// vector, and positive definite after deleting a vertex where it is 1.
fn is_extended(sym: &linalg::IMat) -> bool {
    let ker = linalg::kernel(sym);
    if ker.len() != 1 || !ker[0].iter().all(|&x| x > 0) {
        return false;
    }
    let Some(i) = ker[0].iter().position(|&x| x == 1) else { return false };
    let keep: Vec<usize> = (0..sym.len()).filter(|&j| j != i).collect();
    let minor: linalg::IMat = keep.iter().map(|&a| keep.iter().map(|&b| sym[a][b]).collect()).collect();
    minor.is_empty() || linalg::positive_definite(&minor)
}

fn shape_label(n: usize, arrows: &[(usize, usize)], kind: QuiverKind) -> String {
    let tilde = if kind == QuiverKind::ExtendedDynkin { "~" } else { "" };
    if arrows.len() >= n {
        // the only tame graphs with a cycle are the A~m cycles
        return format!("A~{}", n - 1);
    }
    let mut deg = vec![0usize; n];
    for &(s, t) in arrows {
        deg[s] += 1;
        deg[t] += 1;
    }
    let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    match branch.as_slice() {
        [] => format!("A{tilde}{}", if tilde.is_empty() { n } else { n - 1 }),
        [c] if deg[*c] == 4 => "D~4".to_string(),
        [_, _] => format!("D~{}", n - 1),
        [c] => {
            let mut arms: Vec<usize> = arm_lengths(n, arrows, *c);
            arms.sort_unstable();
            match (arms[0], arms[1], arms[2], kind) {
                (1, 1, _, QuiverKind::Dynkin) => format!("D{n}"),
                (1, 2, _, QuiverKind::Dynkin) => format!("E{n}"),
                (2, 2, 2, _) => "E~6".to_string(),
                (1, 3, 3, _) => "E~7".to_string(),
                (1, 2, 5, _) => "E~8".to_string(),
                _ => format!("?{tilde}{n}"),
            }
        }
        _ => format!("?{tilde}{n}"),
    }
}

fn arm_lengths(n: usize, arrows: &[(usize, usize)], center: usize) -> Vec<usize> {
    let rest: Vec<(usize, usize)> =
        arrows.iter().copied().filter(|&(s, t)| s != center && t != center).collect();
    arrows
        .iter()
        .filter_map(|&(s, t)| if s == center { Some(t) } else if t == center { Some(s) } else { None })
        .map(|nb| bfs_dist(n, &rest, nb).iter().filter(|&&d| d != usize::MAX).count())
        .collect()
}
