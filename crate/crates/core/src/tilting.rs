//! Basic tilting modules over a Dynkin path algebra, their partial order, and
//! the tilting quiver.
//!
//! Everything here works on ids into an [`IndTable`], the registry of all
//! indecomposables with their Hom and Ext¹ dimensions. Over a hereditary
//! algebra a set of `n` pairwise Ext-orthogonal indecomposables is a basic
//! tilting module, so enumeration is a clique search.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::ar;
use crate::error::{Error, Result};
use crate::quiver::{injective_rep, projective_rep, simple_rep, DimVector, Quiver};
use crate::rep::{decompose, ext1_dim, hom_dim, Representation};

/// All indecomposables of a Dynkin quiver in canonical order, with
/// `hom[i][j] = dim Hom(M_i, M_j)` and `ext[i][j] = dim Ext¹(M_i, M_j)`.
#[derive(Clone, Debug)]
pub struct IndTable {
    quiver: Arc<Quiver>,
    inds: Vec<Representation>,
    hom: Vec<Vec<usize>>,
    ext: Vec<Vec<usize>>,
    by_dims: HashMap<DimVector, usize>,
}

pub fn build_ind_table(q: &Arc<Quiver>) -> Result<IndTable> {
    let inds = ar::knit_indecomposables(q)?;
    let rows: Vec<(Vec<usize>, Vec<usize>)> = inds
        .par_iter()
        .map(|m| {
            let hom = inds.iter().map(|n| hom_dim(m, n)).collect::<Result<_>>()?;
            let ext = inds.iter().map(|n| ext1_dim(m, n)).collect::<Result<_>>()?;
            Ok((hom, ext))
        })
        .collect::<Result<_>>()?;
    let (hom, ext) = rows.into_iter().unzip();
    let by_dims = inds
        .iter()
        .enumerate()
        .map(|(i, m)| (m.dims().to_vec(), i))
        .collect();
    Ok(IndTable {
        quiver: q.clone(),
        inds,
        hom,
        ext,
        by_dims,
    })
}

impl IndTable {
    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn n(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn len(&self) -> usize {
        self.inds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inds.is_empty()
    }

    pub fn rep(&self, id: usize) -> &Representation {
        &self.inds[id]
    }

    pub fn reps(&self) -> &[Representation] {
        &self.inds
    }

    pub fn dims(&self, id: usize) -> &[usize] {
        self.inds[id].dims()
    }

    pub fn hom(&self, i: usize, j: usize) -> usize {
        self.hom[i][j]
    }

    pub fn ext(&self, i: usize, j: usize) -> usize {
        self.ext[i][j]
    }

    pub fn id_of_dims(&self, dims: &[usize]) -> Result<usize> {
        self.by_dims
            .get(dims)
            .copied()
            .ok_or_else(|| Error::UnknownIndecomposable(dims.to_vec()))
    }

    /// Ids of the indecomposable summands of `m`, repeated by multiplicity
    /// and sorted.
    pub fn identify(&self, m: &Representation) -> Result<Vec<usize>> {
        let mut ids = Vec::new();
        for (part, k) in decompose(m) {
            let id = self.id_of_dims(part.dims())?;
            ids.extend(std::iter::repeat_n(id, k));
        }
        ids.sort_unstable();
        Ok(ids)
    }

    pub fn projective_id(&self, i: usize) -> Result<usize> {
        self.id_of_dims(projective_rep(&self.quiver, i)?.dims())
    }

    pub fn injective_id(&self, i: usize) -> Result<usize> {
        self.id_of_dims(injective_rep(&self.quiver, i)?.dims())
    }

    pub fn simple_id(&self, i: usize) -> Result<usize> {
        self.id_of_dims(simple_rep(&self.quiver, i)?.dims())
    }

    /// The direct sum of the listed indecomposables.
    pub fn sum(&self, ids: &[usize]) -> Representation {
        let parts: Vec<&Representation> = ids.iter().map(|&i| &self.inds[i]).collect();
        crate::rep::direct_sum(&self.quiver, &parts).expect("table modules share the quiver")
    }

    /// Human-readable `[d1,..,dn] ⊕ ...` label for a list of ids.
    pub fn label(&self, ids: &[usize]) -> String {
        if ids.is_empty() {
            return "0".into();
        }
        ids.iter()
            .map(|&i| format!("{:?}", self.dims(i)).replace(' ', ""))
            .collect::<Vec<_>>()
            .join("⊕")
    }
}

/// A basic tilting module as a sorted set of indecomposable ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TiltingModule {
    ids: Vec<usize>,
}

impl TiltingModule {
    /// Checks size, basicness and self-orthogonality.
    pub fn new(tbl: &IndTable, mut ids: Vec<usize>) -> Result<Self> {
        ids.sort_unstable();
        if ids.iter().any(|&i| i >= tbl.len()) {
            return Err(Error::NotTilting(format!("unknown id in {ids:?}")));
        }
        if ids.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotTilting(format!(
                "{} is not basic",
                tbl.label(&ids)
            )));
        }
        if ids.len() != tbl.n() {
            return Err(Error::NotTilting(format!(
                "{} has {} summands, expected {}",
                tbl.label(&ids),
                ids.len(),
                tbl.n()
            )));
        }
        for &i in &ids {
            for &j in &ids {
                if tbl.ext(i, j) != 0 {
                    return Err(Error::NotTilting(format!(
                        "Ext¹({}, {}) ≠ 0",
                        tbl.label(&[i]),
                        tbl.label(&[j])
                    )));
                }
            }
        }
        Ok(TiltingModule { ids })
    }

    pub fn ids(&self) -> &[usize] {
        &self.ids
    }

    pub fn contains(&self, id: usize) -> bool {
        self.ids.binary_search(&id).is_ok()
    }

    /// Number of summands not shared with `other`.
    pub fn distance(&self, other: &TiltingModule) -> usize {
        self.ids.iter().filter(|&&i| !other.contains(i)).count()
    }
}

impl fmt::Display for TiltingModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.ids)
    }
}

/// All `size`-cliques of `compatible` among `candidates`, in lexicographic
/// order of the (increasing) candidate positions.
pub(crate) fn cliques(
    candidates: &[usize],
    size: usize,
    compatible: impl Fn(usize, usize) -> bool,
) -> Vec<Vec<usize>> {
    fn extend(
        chosen: &mut Vec<usize>,
        pool: &[usize],
        size: usize,
        compatible: &dyn Fn(usize, usize) -> bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        if chosen.len() == size {
            out.push(chosen.clone());
            return;
        }
        if chosen.len() + pool.len() < size {
            return;
        }
        for (k, &c) in pool.iter().enumerate() {
            let rest: Vec<usize> = pool[k + 1..]
                .iter()
                .copied()
                .filter(|&d| compatible(c, d))
                .collect();
            chosen.push(c);
            extend(chosen, &rest, size, compatible, out);
            chosen.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), candidates, size, &compatible, &mut out);
    out
}

/// Every basic tilting module, sorted lexicographically by id set.
pub fn enumerate_tilting(tbl: &IndTable) -> Vec<TiltingModule> {
    let rigid: Vec<usize> = (0..tbl.len()).filter(|&i| tbl.ext(i, i) == 0).collect();
    let mut out: Vec<TiltingModule> = cliques(&rigid, tbl.n(), |i, j| {
        tbl.ext(i, j) == 0 && tbl.ext(j, i) == 0
    })
    .into_iter()
    .map(|ids| TiltingModule { ids })
    .collect();
    out.sort();
    out
}

/// `T^⊥` restricted to indecomposables: `{Z : Ext¹(t, Z) = 0 for t ∈ T}`.
pub fn perp(tbl: &IndTable, t: &TiltingModule) -> Vec<bool> {
    (0..tbl.len())
        .map(|z| t.ids.iter().all(|&i| tbl.ext(i, z) == 0))
        .collect()
}

fn subset(a: &[bool], b: &[bool]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| !x || y)
}

/// `T1 ≤ T2` iff `T1^⊥ ⊆ T2^⊥`.
pub fn leq(tbl: &IndTable, t1: &TiltingModule, t2: &TiltingModule) -> bool {
    subset(&perp(tbl, t1), &perp(tbl, t2))
}

/// A quiver whose vertices are tilting modules of some algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TiltingQuiver {
    pub vertices: Vec<TiltingModule>,
    /// Sorted `(from, to)` pairs of vertex positions.
    pub arrows: Vec<(usize, usize)>,
    /// `leq[u][v]` iff `vertices[u] ≤ vertices[v]`.
    pub leq: Vec<Vec<bool>>,
}

impl TiltingQuiver {
    pub fn position(&self, t: &TiltingModule) -> Option<usize> {
        self.vertices.binary_search(t).ok()
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&v| self.arrows.iter().all(|&(_, to)| to != v))
            .collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&v| self.arrows.iter().all(|&(from, _)| from != v))
            .collect()
    }
}

/// Order matrix from perp sets: `leq[u][v]` iff `perps[u] ⊆ perps[v]`.
pub(crate) fn order_from_perps(perps: &[Vec<bool>]) -> Vec<Vec<bool>> {
    perps
        .iter()
        .map(|p| perps.iter().map(|q| subset(p, q)).collect())
        .collect()
}

/// Covers of a partial order, oriented from the larger element:
/// `u → v` iff `v < u` and nothing lies strictly between.
pub fn hasse_arrows(leq: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = leq.len();
    let lt = |a: usize, b: usize| a != b && leq[a][b];
    let mut arrows = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if lt(v, u) && !(0..n).any(|w| lt(v, w) && lt(w, u)) {
                arrows.push((u, v));
            }
        }
    }
    arrows
}

pub fn hasse(tbl: &IndTable, tilts: &[TiltingModule]) -> TiltingQuiver {
    let perps: Vec<Vec<bool>> = tilts.iter().map(|t| perp(tbl, t)).collect();
    let leq = order_from_perps(&perps);
    TiltingQuiver {
        vertices: tilts.to_vec(),
        arrows: hasse_arrows(&leq),
        leq,
    }
}

/// Arrows by mutation: for `T1`, `T2` differing in one summand, with `X` only
/// in `T1` and `Y` only in `T2`, there is an arrow `T1 → T2` iff
/// `Ext¹(Y, X) ≠ 0`.
pub fn exchange_quiver(tbl: &IndTable, tilts: &[TiltingModule]) -> TiltingQuiver {
    let mut arrows = Vec::new();
    for (u, t1) in tilts.iter().enumerate() {
        for (v, t2) in tilts.iter().enumerate() {
            if u == v || t1.distance(t2) != 1 {
                continue;
            }
            let x = *t1
                .ids
                .iter()
                .find(|&&i| !t2.contains(i))
                .expect("one summand differs");
            let y = *t2
                .ids
                .iter()
                .find(|&&i| !t1.contains(i))
                .expect("one summand differs");
            if tbl.ext(y, x) != 0 {
                arrows.push((u, v));
            }
        }
    }
    let perps: Vec<Vec<bool>> = tilts.iter().map(|t| perp(tbl, t)).collect();
    TiltingQuiver {
        vertices: tilts.to_vec(),
        arrows,
        leq: order_from_perps(&perps),
    }
}

/// For each `(n−1)`-subset of some tilting module, the number of tilting
/// modules containing it.
pub fn complement_counts(tilts: &[TiltingModule]) -> HashMap<Vec<usize>, usize> {
    let mut counts: HashMap<Vec<usize>, usize> = HashMap::new();
    for t in tilts {
        for skip in 0..t.ids.len() {
            let mut almost = t.ids.clone();
            almost.remove(skip);
            *counts.entry(almost).or_default() += 1;
        }
    }
    counts
}
