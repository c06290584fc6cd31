//! Finite acyclic quivers, their path bases, and the standard projective,
//! injective and simple representations of the path algebra.
//!
//! Vertices are numbered `1..=n` in every public signature and in the text
//! format. Dimension vectors and per-vertex storage are indexed from zero.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};
use crate::rep::Representation;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    /// 1-based source vertex.
    pub source: usize,
    /// 1-based target vertex.
    pub target: usize,
}

impl Arrow {
    /// 0-based source index.
    pub fn s(&self) -> usize {
        self.source - 1
    }

    /// 0-based target index.
    pub fn t(&self) -> usize {
        self.target - 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawQuiver", into = "RawQuiver")]
pub struct Quiver {
    n: usize,
    arrows: Vec<Arrow>,
}

#[derive(Serialize, Deserialize)]
struct RawQuiver {
    vertices: usize,
    arrows: Vec<Arrow>,
}

impl TryFrom<RawQuiver> for Quiver {
    type Error = Error;

    fn try_from(raw: RawQuiver) -> Result<Self> {
        Quiver::new(raw.vertices, raw.arrows)
    }
}

impl From<Quiver> for RawQuiver {
    fn from(q: Quiver) -> Self {
        RawQuiver {
            vertices: q.n,
            arrows: q.arrows,
        }
    }
}

pub type DimVector = Vec<usize>;

impl Quiver {
    /// Validates loops, vertex ranges, name clashes and oriented cycles.
    pub fn new(n: usize, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for a in &arrows {
            for v in [a.source, a.target] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if !seen.insert(a.name.as_str()) {
                return Err(Error::DuplicateArrow(a.name.clone()));
            }
            if a.source == a.target {
                return Err(Error::Cycle(a.source));
            }
        }
        let q = Quiver { n, arrows };
        q.topological_order()?;
        Ok(q)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn check_vertex(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n {
            Err(Error::VertexOutOfRange {
                vertex: i,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Kahn's algorithm; fails with the smallest vertex left on a cycle.
    pub fn topological_order(&self) -> Result<Vec<usize>> {
        let mut indeg = vec![0usize; self.n];
        for a in &self.arrows {
            indeg[a.t()] += 1;
        }
        let mut ready: Vec<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        ready.reverse();
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = ready.pop() {
            order.push(v);
            for a in self.arrows.iter().filter(|a| a.s() == v) {
                indeg[a.t()] -= 1;
                if indeg[a.t()] == 0 {
                    ready.push(a.t());
                }
            }
        }
        if order.len() < self.n {
            let v = (0..self.n).find(|&v| indeg[v] > 0).unwrap_or(0);
            return Err(Error::Cycle(v + 1));
        }
        Ok(order)
    }

    /// Same vertices, every arrow reversed, names kept.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            n: self.n,
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }

    /// `Σᵢ dᵢeᵢ − Σ_{a: i→j} dᵢeⱼ`.
    pub fn euler_form(&self, d: &[usize], e: &[usize]) -> Result<i64> {
        if d.len() != self.n || e.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "euler form on {} vertices got vectors of length {} and {}",
                self.n,
                d.len(),
                e.len()
            )));
        }
        let diag: i64 = d.iter().zip(e).map(|(x, y)| (x * y) as i64).sum();
        let off: i64 = self
            .arrows
            .iter()
            .map(|a| (d[a.s()] * e[a.t()]) as i64)
            .sum();
        Ok(diag - off)
    }

    pub fn is_representation_finite(&self) -> bool {
        self.dynkin_components().is_some()
    }

    /// The Dynkin type of every connected component, or `None` if some
    /// component is not simply-laced Dynkin (including any multiple edge).
    pub fn dynkin_components(&self) -> Option<Vec<DynkinType>> {
        let mut adj = vec![Vec::new(); self.n];
        for a in &self.arrows {
            if adj[a.s()].contains(&a.t()) {
                return None;
            }
            adj[a.s()].push(a.t());
            adj[a.t()].push(a.s());
        }
        let mut comp = vec![usize::MAX; self.n];
        let mut types = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut members = vec![start];
            comp[start] = start;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                for &w in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = start;
                        members.push(w);
                    }
                }
                i += 1;
            }
            let edges: usize = members.iter().map(|&v| adj[v].len()).sum::<usize>() / 2;
            if edges + 1 != members.len() {
                return None;
            }
            types.push(classify_tree(&members, &adj)?);
        }
        Some(types)
    }

    /// Every path of the quiver, grouped by endpoints and sorted
    /// lexicographically by arrow-name sequence (the trivial path first).
    pub fn paths(&self) -> PathTable {
        PathTable::new(self)
    }

    /// Serializes to the line-oriented text format read by [`parse_quiver`].
    pub fn to_text(&self) -> String {
        let mut s = format!("vertices {}\n", self.n);
        for a in &self.arrows {
            s.push_str(&format!("arrow {} {} {}\n", a.name, a.source, a.target));
        }
        s
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "quiver on {} vertices:", self.n)?;
        for a in &self.arrows {
            write!(f, " {}:{}->{}", a.name, a.source, a.target)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

impl DynkinType {
    pub fn positive_roots(self) -> usize {
        match self {
            DynkinType::A(n) => n * (n + 1) / 2,
            DynkinType::D(n) => n * (n - 1),
            DynkinType::E(6) => 36,
            DynkinType::E(7) => 63,
            DynkinType::E(8) => 120,
            DynkinType::E(n) => unreachable!("E{n} is not Dynkin"),
        }
    }
}

fn classify_tree(members: &[usize], adj: &[Vec<usize>]) -> Option<DynkinType> {
    let n = members.len();
    let branch: Vec<usize> = members
        .iter()
        .copied()
        .filter(|&v| adj[v].len() > 2)
        .collect();
    match branch.as_slice() {
        [] => Some(DynkinType::A(n)),
        [c] if adj[*c].len() == 3 => {
            let mut arms: Vec<usize> = adj[*c]
                .iter()
                .map(|&first| {
                    let (mut prev, mut cur, mut len) = (*c, first, 1);
                    while adj[cur].len() == 2 {
                        let next = if adj[cur][0] == prev {
                            adj[cur][1]
                        } else {
                            adj[cur][0]
                        };
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match (arms[0], arms[1], arms[2]) {
                (1, 1, _) => Some(DynkinType::D(n)),
                (1, 2, 2..=4) => Some(DynkinType::E(n)),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Reads the quiver text format: `#` comment lines, one `vertices N` line,
/// and `arrow NAME SRC DST` lines with whitespace-separated tokens.
pub fn parse_quiver(text: &str) -> Result<Quiver> {
    let mut n: Option<usize> = None;
    let mut arrows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let syntax = |message: &str| Error::Syntax {
            line,
            message: message.to_string(),
        };
        let number = |tok: &str| {
            tok.parse::<usize>()
                .map_err(|_| syntax(&format!("expected a number, found `{tok}`")))
        };
        match tokens.as_slice() {
            ["vertices", count] => {
                if n.is_some() {
                    return Err(syntax("duplicate `vertices` line"));
                }
                n = Some(number(count)?);
            }
            ["vertices", ..] => return Err(syntax("usage: vertices N")),
            ["arrow", name, src, dst] => arrows.push(Arrow {
                name: name.to_string(),
                source: number(src)?,
                target: number(dst)?,
            }),
            ["arrow", ..] => return Err(syntax("usage: arrow NAME SRC DST")),
            [other, ..] => return Err(syntax(&format!("unknown directive `{other}`"))),
            [] => unreachable!(),
        }
    }
    let n = n.ok_or(Error::Syntax {
        line: text.lines().count().max(1),
        message: "missing `vertices N` line".into(),
    })?;
    Quiver::new(n, arrows)
}

/// A path: its start vertex (0-based) and arrow indices in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub start: usize,
    pub end: usize,
    pub arrows: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct PathTable {
    n: usize,
    lists: Vec<Vec<Path>>,
    index: HashMap<(usize, Vec<usize>), usize>,
}

impl PathTable {
    fn new(q: &Quiver) -> Self {
        let n = q.n;
        let mut lists: Vec<Vec<Path>> = vec![Vec::new(); n * n];
        for start in 0..n {
            let mut stack = vec![Path {
                start,
                end: start,
                arrows: Vec::new(),
            }];
            while let Some(p) = stack.pop() {
                for (ai, a) in q.arrows.iter().enumerate() {
                    if a.s() == p.end {
                        let mut arrows = p.arrows.clone();
                        arrows.push(ai);
                        stack.push(Path {
                            start,
                            end: a.t(),
                            arrows,
                        });
                    }
                }
                lists[start * n + p.end].push(p);
            }
        }
        for list in &mut lists {
            list.sort_by(|x, y| {
                let nx: Vec<&str> = x
                    .arrows
                    .iter()
                    .map(|&i| q.arrows[i].name.as_str())
                    .collect();
                let ny: Vec<&str> = y
                    .arrows
                    .iter()
                    .map(|&i| q.arrows[i].name.as_str())
                    .collect();
                nx.cmp(&ny)
            });
        }
        let mut index = HashMap::new();
        for list in &lists {
            for (i, p) in list.iter().enumerate() {
                index.insert((p.start, p.arrows.clone()), i);
            }
        }
        PathTable { n, lists, index }
    }

    /// Paths from `from` to `to` (0-based).
    pub fn between(&self, from: usize, to: usize) -> &[Path] {
        &self.lists[from * self.n + to]
    }

    pub fn count(&self, from: usize, to: usize) -> usize {
        self.between(from, to).len()
    }

    /// Position of a path inside its endpoint group.
    pub fn position(&self, start: usize, arrows: &[usize]) -> Option<usize> {
        self.index.get(&(start, arrows.to_vec())).copied()
    }
}

fn unit(rows: usize, cols: usize, ones: impl IntoIterator<Item = (usize, usize)>) -> Matrix {
    let mut m = Matrix::zeros(rows, cols);
    for (r, c) in ones {
        m.set(r, c, Scalar::one());
    }
    m
}

/// `P(i)`: basis at `j` is the set of paths `i ⇝ j`; an arrow appends itself.
pub fn projective_rep(q: &Arc<Quiver>, i: usize) -> Result<Representation> {
    q.check_vertex(i)?;
    let i = i - 1;
    let paths = q.paths();
    let dims: Vec<usize> = (0..q.n).map(|j| paths.count(i, j)).collect();
    let mats = q
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let ones = paths.between(i, a.s()).iter().enumerate().map(|(c, p)| {
                let mut ext = p.arrows.clone();
                ext.push(ai);
                let r = paths.position(i, &ext).expect("extended path exists");
                (r, c)
            });
            unit(dims[a.t()], dims[a.s()], ones)
        })
        .collect();
    Representation::new(q.clone(), dims, mats)
}

/// `I(i)`: basis at `j` is the set of paths `j ⇝ i`; an arrow `a: j → k`
/// strips itself off the front of paths that begin with it.
pub fn injective_rep(q: &Arc<Quiver>, i: usize) -> Result<Representation> {
    q.check_vertex(i)?;
    let i = i - 1;
    let paths = q.paths();
    let dims: Vec<usize> = (0..q.n).map(|j| paths.count(j, i)).collect();
    let mats = q
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let ones = paths
                .between(a.s(), i)
                .iter()
                .enumerate()
                .filter(|(_, p)| p.arrows.first() == Some(&ai))
                .map(|(c, p)| {
                    let r = paths
                        .position(a.t(), &p.arrows[1..])
                        .expect("tail of a path is a path");
                    (r, c)
                });
            unit(dims[a.t()], dims[a.s()], ones)
        })
        .collect();
    Representation::new(q.clone(), dims, mats)
}

pub fn simple_rep(q: &Arc<Quiver>, i: usize) -> Result<Representation> {
    q.check_vertex(i)?;
    let mut dims = vec![0; q.n];
    dims[i - 1] = 1;
    Ok(Representation::with_zero_maps(q.clone(), dims))
}
