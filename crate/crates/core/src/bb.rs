//! Tilting over the endomorphism algebra `B₀ = End(T₀)` of a tilting module
//! `T₀`, transported from the hereditary side.
//!
//! `T₀` splits every indecomposable into the torsion class `𝒯 = {Ext¹(T₀,−) = 0}`
//! or the torsion-free class `ℱ = {Hom(T₀,−) = 0}`. A `B₀`-module is never
//! built as a representation. It is carried symbolically as a pair of
//! multisets: `H(M) = Hom(T₀, M)` for `M ∈ 𝒯` and `E(X) = Ext¹(T₀, X)` for
//! `X ∈ ℱ`, and `Ext^j_{B₀}` between symbols is read off Λ-side data by
//! [`b_ext_dim`].
//!
//! A BB tilt at vertex `i` is `T₀ = P[i] ⊕ τ⁻¹S(i)`, where `P[i]` is the sum of
//! the projectives other than `P(i)` and `S(i)` is not injective. Then
//! `ℱ = {S(i)}`, and the modules with `S(i)` in their top lie in neither class
//! unless the tilt is APR.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ar;
use crate::error::{Error, Result};
use crate::rep::{quotient, reject, trace, universal_extension, Representation};
use crate::tilting::{
    cliques, hasse_arrows, order_from_perps, IndTable, TiltingModule, TiltingQuiver,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TorsionClass {
    T,
    F,
    Neither,
}

/// Position of a tilting module relative to the torsion pair of `T₀`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Tag {
    /// Every summand torsion.
    TT,
    /// Every summand torsion-free.
    TF,
    /// Summands on both sides, none outside.
    TTF,
    /// Some summand in neither class.
    Other,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tag::TT => "TT",
            Tag::TF => "TF",
            Tag::TTF => "TTF",
            Tag::Other => "other",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BbVertex {
    /// 1-based vertex of the tilt.
    pub vertex: usize,
    /// Id of the simple `S(vertex)`.
    pub s_id: usize,
}

/// A tilting module `T₀` together with the torsion class of every
/// indecomposable. `bb` is set for BB tilts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TiltData {
    pub t0: TiltingModule,
    pub classes: Vec<TorsionClass>,
    pub bb: Option<BbVertex>,
}

impl TiltData {
    fn require_bb(&self) -> Result<BbVertex> {
        self.bb.ok_or(Error::NotBB)
    }

    pub fn class(&self, id: usize) -> TorsionClass {
        self.classes[id]
    }
}

pub fn classify_torsion(tbl: &IndTable, t0: &TiltingModule) -> Vec<TorsionClass> {
    (0..tbl.len())
        .map(|j| {
            if t0.ids().iter().all(|&t| tbl.ext(t, j) == 0) {
                TorsionClass::T
            } else if t0.ids().iter().all(|&t| tbl.hom(t, j) == 0) {
                TorsionClass::F
            } else {
                TorsionClass::Neither
            }
        })
        .collect()
}

pub fn make_general_tilt(tbl: &IndTable, t0: TiltingModule) -> TiltData {
    TiltData {
        classes: classify_torsion(tbl, &t0),
        t0,
        bb: None,
    }
}

/// `T₀ = P[i] ⊕ τ⁻¹S(i)`.
pub fn make_bb_tilt(tbl: &IndTable, i: usize) -> Result<TiltData> {
    tbl.quiver().check_vertex(i)?;
    let s_id = tbl.simple_id(i)?;
    let s = tbl.rep(s_id);
    if ar::is_injective(s)? {
        return Err(Error::SimpleIsInjective(i));
    }
    if tbl.ext(s_id, s_id) != 0 {
        return Err(Error::Invariant(format!("Ext¹(S({i}), S({i})) ≠ 0")));
    }
    let mut ids: Vec<usize> = (1..=tbl.n())
        .filter(|&j| j != i)
        .map(|j| tbl.projective_id(j))
        .collect::<Result<_>>()?;
    ids.push(tbl.id_of_dims(ar::tau_inv(s)?.dims())?);
    let t0 = TiltingModule::new(tbl, ids)?;
    let d = TiltData {
        classes: classify_torsion(tbl, &t0),
        t0,
        bb: Some(BbVertex { vertex: i, s_id }),
    };
    let f: Vec<usize> = (0..tbl.len())
        .filter(|&j| d.classes[j] == TorsionClass::F)
        .collect();
    if f != [s_id] {
        return Err(Error::Invariant(format!(
            "ℱ is not {{S({i})}} for the tilt at {i}"
        )));
    }
    Ok(d)
}

/// A BB tilt is APR when `S(i)` is projective.
pub fn is_apr(tbl: &IndTable, d: &TiltData) -> bool {
    d.bb.is_some_and(|b| tbl.projective_id(b.vertex).ok() == Some(b.s_id))
}

pub fn tag_of(t: &TiltingModule, classes: &[TorsionClass]) -> Tag {
    let count = |c| t.ids().iter().filter(|&&i| classes[i] == c).count();
    let (tors, free) = (count(TorsionClass::T), count(TorsionClass::F));
    match (tors, free) {
        _ if tors + free < t.ids().len() => Tag::Other,
        (_, 0) => Tag::TT,
        (0, _) => Tag::TF,
        _ => Tag::TTF,
    }
}

pub fn partition_tilting(tilts: &[TiltingModule], classes: &[TorsionClass]) -> Vec<Tag> {
    tilts.iter().map(|t| tag_of(t, classes)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Admissibility {
    Admissible,
    /// `tilts[tilt]` has the torsion summand `summand` generated by its
    /// torsion-free part.
    Violated {
        tilt: usize,
        summand: usize,
    },
}

fn split_parts(t: &TiltingModule, classes: &[TorsionClass]) -> (Vec<usize>, Vec<usize>) {
    let y = t
        .ids()
        .iter()
        .copied()
        .filter(|&i| classes[i] == TorsionClass::T)
        .collect();
    let x = t
        .ids()
        .iter()
        .copied()
        .filter(|&i| classes[i] == TorsionClass::F)
        .collect();
    (y, x)
}

/// No torsion summand of any TT or TTF tilting module is generated by the
/// torsion-free part of the same module.
pub fn is_admissible(
    tbl: &IndTable,
    tilts: &[TiltingModule],
    classes: &[TorsionClass],
) -> Admissibility {
    for (k, t) in tilts.iter().enumerate() {
        if tag_of(t, classes) != Tag::TTF {
            continue;
        }
        let (y, x) = split_parts(t, classes);
        let x0 = tbl.sum(&x);
        for &yi in &y {
            if trace(&x0, tbl.rep(yi)).expect("same quiver").is_full() {
                return Admissibility::Violated {
                    tilt: k,
                    summand: yi,
                };
            }
        }
    }
    Admissibility::Admissible
}

/// A summand of a symbolic `B₀`-module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BSummand {
    /// `Hom(T₀, M)` for a torsion indecomposable `M`.
    H(usize),
    /// `Ext¹(T₀, X)` for a torsion-free indecomposable `X`.
    E(usize),
}

/// `Hom(T₀, ⊕ y_part) ⊕ Ext¹(T₀, ⊕ x_part)`, both parts sorted multisets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BModule {
    pub y_part: Vec<usize>,
    pub x_part: Vec<usize>,
}

impl BModule {
    pub fn new(mut y_part: Vec<usize>, mut x_part: Vec<usize>) -> Self {
        y_part.sort_unstable();
        x_part.sort_unstable();
        BModule { y_part, x_part }
    }

    pub fn summands(&self) -> Vec<BSummand> {
        self.y_part
            .iter()
            .map(|&i| BSummand::H(i))
            .chain(self.x_part.iter().map(|&i| BSummand::E(i)))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.y_part.len() + self.x_part.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_basic(&self) -> bool {
        let mut seen = HashSet::new();
        self.summands().into_iter().all(|s| seen.insert(s))
    }

    fn from_summands(summands: &[BSummand]) -> Self {
        let y = summands.iter().filter_map(|s| match s {
            BSummand::H(i) => Some(*i),
            BSummand::E(_) => None,
        });
        let x = summands.iter().filter_map(|s| match s {
            BSummand::E(i) => Some(*i),
            BSummand::H(_) => None,
        });
        BModule::new(y.collect(), x.collect())
    }

    pub fn label(&self, tbl: &IndTable) -> String {
        let mut parts: Vec<String> = self
            .y_part
            .iter()
            .map(|&i| format!("H{}", tbl.label(&[i])))
            .collect();
        parts.extend(self.x_part.iter().map(|&i| format!("E{}", tbl.label(&[i]))));
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("⊕")
        }
    }
}

fn check_in_scope(t: &TiltingModule, tbl: &IndTable, classes: &[TorsionClass]) -> Result<()> {
    if tag_of(t, classes) == Tag::Other {
        Err(Error::NotInScope(tbl.label(t.ids())))
    } else {
        Ok(())
    }
}

/// `Y_i / Tr_{Y_i}(X₀)` for each torsion summand, decomposed. A vanishing
/// quotient means the summand is generated by `X₀`.
fn trace_quotient_part(
    tbl: &IndTable,
    t: &TiltingModule,
    y: &[usize],
    x0: &Representation,
) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for &yi in y {
        let m = tbl.rep(yi);
        let (q, _) = quotient(m, &trace(x0, m)?)?;
        if q.is_zero() {
            return Err(Error::AdmissibilityViolation {
                module: tbl.label(t.ids()),
                summand: yi,
            });
        }
        out.extend(tbl.identify(&q)?);
    }
    Ok(out)
}

/// `Rej_{X_j}(Y₀)` for each torsion-free summand, decomposed. A vanishing
/// reject means the summand is cogenerated by `Y₀`.
fn reject_part(
    tbl: &IndTable,
    t: &TiltingModule,
    x: &[usize],
    y0: &Representation,
) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for &xj in x {
        let sub = reject(y0, tbl.rep(xj))?;
        if sub.is_zero() {
            return Err(Error::CogenerationViolation {
                module: tbl.label(t.ids()),
                summand: xj,
            });
        }
        out.extend(tbl.identify(&sub.to_representation())?);
    }
    Ok(out)
}

fn check_classes(ids: &[usize], class: TorsionClass, d: &TiltData, tbl: &IndTable) -> Result<()> {
    match ids.iter().find(|&&i| d.classes[i] != class) {
        Some(&i) => Err(Error::Invariant(format!(
            "{} was expected in class {class:?}",
            tbl.label(&[i])
        ))),
        None => Ok(()),
    }
}

/// `Φ(T) = Hom(T₀, Y₀/Tr_{Y₀}X₀) ⊕ Ext¹(T₀, X₀)`, where `Y₀` and `X₀` are the
/// torsion and torsion-free parts of `T`.
pub fn phi(tbl: &IndTable, d: &TiltData, t: &TiltingModule) -> Result<BModule> {
    check_in_scope(t, tbl, &d.classes)?;
    let (y, x) = split_parts(t, &d.classes);
    if x.is_empty() {
        return Ok(BModule::new(y, x));
    }
    let y_part = trace_quotient_part(tbl, t, &y, &tbl.sum(&x))?;
    check_classes(&y_part, TorsionClass::T, d, tbl)?;
    Ok(BModule::new(y_part, x))
}

/// `Hom(T₀, Y₀) ⊕ Ext¹(T₀, Rej_{X₀}Y₀)`.
pub fn phi_reject(tbl: &IndTable, d: &TiltData, t: &TiltingModule) -> Result<BModule> {
    check_in_scope(t, tbl, &d.classes)?;
    let (y, x) = split_parts(t, &d.classes);
    let x_part = reject_part(tbl, t, &x, &tbl.sum(&y))?;
    check_classes(&x_part, TorsionClass::F, d, tbl)?;
    Ok(BModule::new(y, x_part))
}

/// `Hom(T₀, Y₀/Tr_{Y₀}X₀) ⊕ Ext¹(T₀, Rej_{X₀}Y₀)`.
pub fn phi_both(tbl: &IndTable, d: &TiltData, t: &TiltingModule) -> Result<BModule> {
    check_in_scope(t, tbl, &d.classes)?;
    let (y, x) = split_parts(t, &d.classes);
    let x_part = reject_part(tbl, t, &x, &tbl.sum(&y))?;
    let y_part = if x.is_empty() {
        y
    } else {
        trace_quotient_part(tbl, t, &y, &tbl.sum(&x))?
    };
    check_classes(&y_part, TorsionClass::T, d, tbl)?;
    check_classes(&x_part, TorsionClass::F, d, tbl)?;
    Ok(BModule::new(y_part, x_part))
}

/// Inverse of [`phi`] for a BB tilt. Each torsion summand `N` is replaced by
/// the universal extension `0 → S^r → M → N → 0` with `r = dim Ext¹(N, S)`.
pub fn phi_inverse(tbl: &IndTable, d: &TiltData, b: &BModule) -> Result<TiltingModule> {
    let bb = d.require_bb()?;
    if !b_is_tilting(tbl, d, b) {
        return Err(Error::NotTilting(b.label(tbl)));
    }
    if b.x_part.is_empty() {
        return TiltingModule::new(tbl, b.y_part.clone());
    }
    if b.x_part != [bb.s_id] {
        return Err(Error::NotTilting(b.label(tbl)));
    }
    let s = tbl.rep(bb.s_id);
    let mut ids = vec![bb.s_id];
    for &n in &b.y_part {
        let (m, _) = universal_extension(tbl.rep(n), s)?;
        ids.extend(tbl.identify(&m)?);
    }
    let t = TiltingModule::new(tbl, ids)?;
    if phi(tbl, d, &t)? != *b {
        return Err(Error::Invariant(format!(
            "Φ does not send {} back to {}",
            tbl.label(t.ids()),
            b.label(tbl)
        )));
    }
    Ok(t)
}

/// `dim Ext^j_{B₀}(A, B)` for symbolic summands, with `j = 0` meaning Hom.
///
/// | A, B        | j = 0       | j = 1       | j = 2       |
/// |-------------|-------------|-------------|-------------|
/// | H(M), H(N)  | Hom(M, N)   | Ext¹(M, N)  | 0           |
/// | E(X), E(X′) | Hom(X, X′)  | Ext¹(X, X′) | 0           |
/// | H(M), E(X)  | Ext¹(M, X)  | 0           | 0           |
/// | E(X), H(M)  | 0           | Hom(X, M)   | Ext¹(X, M)  |
///
/// Every entry vanishes for `j > 2`.
pub fn b_ext_dim(
    tbl: &IndTable,
    d: &TiltData,
    j: usize,
    a: BSummand,
    b: BSummand,
) -> Result<usize> {
    for s in [a, b] {
        let (id, want) = match s {
            BSummand::H(i) => (i, TorsionClass::T),
            BSummand::E(i) => (i, TorsionClass::F),
        };
        if id >= tbl.len() || d.classes[id] != want {
            return Err(Error::SummandNotInScope(id));
        }
    }
    Ok(match (a, b, j) {
        (BSummand::H(m), BSummand::H(n), 0) | (BSummand::E(m), BSummand::E(n), 0) => tbl.hom(m, n),
        (BSummand::H(m), BSummand::H(n), 1) | (BSummand::E(m), BSummand::E(n), 1) => tbl.ext(m, n),
        (BSummand::H(m), BSummand::E(x), 0) => tbl.ext(m, x),
        (BSummand::E(x), BSummand::H(m), 1) => tbl.hom(x, m),
        (BSummand::E(x), BSummand::H(m), 2) => tbl.ext(x, m),
        _ => 0,
    })
}

fn b_orthogonal(tbl: &IndTable, d: &TiltData, a: BSummand, b: BSummand) -> bool {
    (1..=2).all(|j| b_ext_dim(tbl, d, j, a, b) == Ok(0))
}

/// `n` pairwise distinct summands with `Ext^1` and `Ext^2` vanishing in both
/// directions, self-pairs included.
pub fn b_is_tilting(tbl: &IndTable, d: &TiltData, b: &BModule) -> bool {
    let summands = b.summands();
    summands.len() == tbl.n()
        && b.is_basic()
        && summands
            .iter()
            .all(|&p| summands.iter().all(|&q| b_orthogonal(tbl, d, p, q)))
}

/// Every indecomposable `B₀`-module: `H(M)` for `M ∈ 𝒯` and `E(X)` for `X ∈ ℱ`.
pub fn b_symbols(tbl: &IndTable, d: &TiltData) -> Vec<BSummand> {
    let h = (0..tbl.len())
        .filter(|&i| d.classes[i] == TorsionClass::T)
        .map(BSummand::H);
    let e = (0..tbl.len())
        .filter(|&i| d.classes[i] == TorsionClass::F)
        .map(BSummand::E);
    h.chain(e).collect()
}

pub fn b_enumerate_tilting(tbl: &IndTable, d: &TiltData) -> Vec<BModule> {
    let symbols = b_symbols(tbl, d);
    let rigid: Vec<usize> = (0..symbols.len())
        .filter(|&k| b_orthogonal(tbl, d, symbols[k], symbols[k]))
        .collect();
    let mut out: Vec<BModule> = cliques(&rigid, tbl.n(), |p, q| {
        b_orthogonal(tbl, d, symbols[p], symbols[q]) && b_orthogonal(tbl, d, symbols[q], symbols[p])
    })
    .into_iter()
    .map(|c| BModule::from_summands(&c.iter().map(|&k| symbols[k]).collect::<Vec<_>>()))
    .collect();
    out.sort();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BTag {
    /// No `E` summand.
    Y,
    /// At least one `E` summand.
    XY,
}

impl fmt::Display for BTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BTag::Y => "Y",
            BTag::XY => "XY",
        })
    }
}

pub fn b_tag(b: &BModule) -> BTag {
    if b.x_part.is_empty() {
        BTag::Y
    } else {
        BTag::XY
    }
}

/// Tilting quiver of `B₀`, vertices sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BTiltingQuiver {
    pub vertices: Vec<BModule>,
    pub tags: Vec<BTag>,
    /// Sorted `(from, to)` pairs of vertex positions.
    pub arrows: Vec<(usize, usize)>,
}

impl BTiltingQuiver {
    fn from_parts(vertices: Vec<BModule>, mut arrows: Vec<(usize, usize)>) -> Self {
        arrows.sort_unstable();
        arrows.dedup();
        BTiltingQuiver {
            tags: vertices.iter().map(b_tag).collect(),
            vertices,
            arrows,
        }
    }

    pub fn position(&self, b: &BModule) -> Option<usize> {
        self.vertices.binary_search(b).ok()
    }
}

/// `leq[u][v]` iff `tilts[u]^⊥ ⊆ tilts[v]^⊥`, perps taken over all symbols
/// with `Ext^1` and `Ext^2`.
pub fn b_order(tbl: &IndTable, d: &TiltData, tilts: &[BModule]) -> Vec<Vec<bool>> {
    let symbols = b_symbols(tbl, d);
    let perps: Vec<Vec<bool>> = tilts
        .iter()
        .map(|t| {
            let summands = t.summands();
            symbols
                .iter()
                .map(|&z| summands.iter().all(|&s| b_orthogonal(tbl, d, s, z)))
                .collect()
        })
        .collect();
    order_from_perps(&perps)
}

/// The Hasse diagram of the `B₀` tilting order, computed directly.
pub fn b_hasse(tbl: &IndTable, d: &TiltData) -> BTiltingQuiver {
    let tilts = b_enumerate_tilting(tbl, d);
    let leq = b_order(tbl, d, &tilts);
    BTiltingQuiver::from_parts(tilts, hasse_arrows(&leq))
}

/// Φ-images of every TT, TF and TTF vertex of `k`, in vertex order.
pub fn phi_images(tbl: &IndTable, d: &TiltData, k: &TiltingQuiver) -> Result<Vec<Option<BModule>>> {
    k.vertices
        .iter()
        .map(|t| match tag_of(t, &d.classes) {
            Tag::Other => Ok(None),
            _ => phi(tbl, d, t).map(Some),
        })
        .collect()
}

/// The `B₀` tilting quiver assembled from the Λ tilting quiver `k`.
///
/// Vertices are the Φ-images. Arrows inside the `Y` block and inside the `XY`
/// block are copied from `k`. For each TTF module `T₂`, let `E₁` be the torsion
/// part of `Φ(T₂)` and collect the TT tilting modules containing `E₁`. One
/// such module `Z` gives the arrow `Φ(Z) → Φ(T₂)`. Two, joined in `k` by
/// `Z → W`, give only `Φ(W) → Φ(T₂)`.
///
/// Every Λ-arrow `M⊕S → M⊕Y` from TTF to TT is checked against the Ext
/// criterion: the cross arrow `Φ(M⊕Y) → Φ(M⊕S)` exists iff
/// `Ext¹(M/Tr_M S, M) = 0`. Disagreement is an error.
pub fn transport_construct(
    tbl: &IndTable,
    d: &TiltData,
    k: &TiltingQuiver,
) -> Result<BTiltingQuiver> {
    let bb = d.require_bb()?;
    let tags = partition_tilting(&k.vertices, &d.classes);
    let images = phi_images(tbl, d, k)?;

    let mut vertices: Vec<BModule> = images.iter().flatten().cloned().collect();
    vertices.sort();
    vertices.dedup();
    let pos = |b: &BModule| vertices.binary_search(b).expect("image is a vertex");
    let image_pos = |u: usize| images[u].as_ref().map(&pos);

    let block = |tag: Tag| match tag {
        Tag::TT => Some(BTag::Y),
        Tag::TF | Tag::TTF => Some(BTag::XY),
        Tag::Other => None,
    };
    let mut arrows = Vec::new();
    for &(u, v) in &k.arrows {
        if block(tags[u]).is_some() && block(tags[u]) == block(tags[v]) {
            arrows.push((
                image_pos(u).expect("in scope"),
                image_pos(v).expect("in scope"),
            ));
        }
    }

    let mut cross = HashSet::new();
    for (t2, tag) in tags.iter().enumerate() {
        if *tag != Tag::TTF {
            continue;
        }
        let e1 = &images[t2].as_ref().expect("in scope").y_part;
        let hosts: Vec<usize> = (0..k.vertices.len())
            .filter(|&z| tags[z] == Tag::TT && e1.iter().all(|&i| k.vertices[z].contains(i)))
            .collect();
        let from = match hosts.as_slice() {
            [] => None,
            [z] => Some(*z),
            [z, w] => {
                if k.arrows.contains(&(*z, *w)) {
                    Some(*w)
                } else if k.arrows.contains(&(*w, *z)) {
                    Some(*z)
                } else {
                    return Err(Error::Invariant(format!(
                        "complements of {} are not adjacent",
                        tbl.label(e1)
                    )));
                }
            }
            _ => {
                return Err(Error::Invariant(format!(
                    "{} has more than two complements",
                    tbl.label(e1)
                )))
            }
        };
        if let Some(z) = from {
            let arrow = (
                image_pos(z).expect("in scope"),
                image_pos(t2).expect("in scope"),
            );
            cross.insert(arrow);
            arrows.push(arrow);
        }
    }

    for &(t2, t1) in &k.arrows {
        if tags[t2] != Tag::TTF || tags[t1] != Tag::TT {
            continue;
        }
        let shared: Vec<usize> = k.vertices[t2]
            .ids()
            .iter()
            .copied()
            .filter(|&i| i != bb.s_id)
            .collect();
        let m = tbl.sum(&shared);
        let (n, _) = quotient(&m, &trace(tbl.rep(bb.s_id), &m)?)?;
        let n_ids = tbl.identify(&n)?;
        let ext: usize = n_ids
            .iter()
            .flat_map(|&a| shared.iter().map(move |&b| (a, b)))
            .map(|(a, b)| tbl.ext(a, b))
            .sum();
        let arrow = (
            image_pos(t1).expect("in scope"),
            image_pos(t2).expect("in scope"),
        );
        if (ext == 0) != cross.contains(&arrow) {
            return Err(Error::CrossArrowMismatch(format!(
                "{} → {}: Ext¹ dimension {ext}, rule {}",
                vertices[arrow.0].label(tbl),
                vertices[arrow.1].label(tbl),
                if cross.contains(&arrow) {
                    "adds the arrow"
                } else {
                    "adds no arrow"
                }
            )));
        }
    }

    Ok(BTiltingQuiver::from_parts(vertices, arrows))
}

/// One named pass/fail line of a property report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    fn push(&mut self, name: &str, failure: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed: failure.is_none(),
            detail: failure.unwrap_or_default(),
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "{status}  {}", c.name)?;
            } else {
                writeln!(f, "{status}  {}: {}", c.name, c.detail)?;
            }
        }
        Ok(())
    }
}

fn reachability(n: usize, arrows: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut reach = vec![vec![false; n]; n];
    for (v, row) in reach.iter_mut().enumerate() {
        row[v] = true;
    }
    for &(u, v) in arrows {
        reach[u][v] = true;
    }
    for w in 0..n {
        let via = reach[w].clone();
        for row in reach.iter_mut() {
            if row[w] {
                for (x, &y) in row.iter_mut().zip(&via) {
                    *x |= y;
                }
            }
        }
    }
    reach
}

/// A vertex outside `members` on a path between two members, if any.
fn convexity_witness(
    n: usize,
    arrows: &[(usize, usize)],
    members: &[bool],
) -> Option<(usize, usize, usize)> {
    let reach = reachability(n, arrows);
    for u in (0..n).filter(|&u| members[u]) {
        for v in (0..n).filter(|&v| members[v]) {
            for w in (0..n).filter(|&w| !members[w]) {
                if reach[u][w] && reach[w][v] {
                    return Some((u, w, v));
                }
            }
        }
    }
    None
}

/// Arrows of `g` between vertices of one block, as labelled pairs.
fn block_arrows<L: Clone + Eq + std::hash::Hash>(
    arrows: &[(usize, usize)],
    label: impl Fn(usize) -> Option<L>,
) -> HashSet<(L, L)> {
    arrows
        .iter()
        .filter_map(|&(u, v)| Some((label(u)?, label(v)?)))
        .collect()
}

/// Checks the structural facts relating `k` (Λ side) and `bk` (the `B₀`
/// oracle) for a BB tilt, one line per property.
pub fn verify_properties(
    tbl: &IndTable,
    d: &TiltData,
    k: &TiltingQuiver,
    bk: &BTiltingQuiver,
) -> Result<Report> {
    let bb = d.require_bb()?;
    let mut report = Report::default();
    let tags = partition_tilting(&k.vertices, &d.classes);
    let kn = k.vertices.len();
    let bn = bk.vertices.len();

    let ttf: Vec<bool> = tags.iter().map(|&t| t == Tag::TTF).collect();
    report.push(
        "TTF is convex in the Λ tilting quiver",
        convexity_witness(kn, &k.arrows, &ttf)
            .map(|(u, w, v)| format!("{} → {} → {}", k.vertices[u], k.vertices[w], k.vertices[v])),
    );
    let xy: Vec<bool> = bk.tags.iter().map(|&t| t == BTag::XY).collect();
    report.push(
        "XY is convex in the B₀ tilting quiver",
        convexity_witness(bn, &bk.arrows, &xy).map(|(u, w, v)| {
            format!(
                "{} → {} → {}",
                bk.vertices[u].label(tbl),
                bk.vertices[w].label(tbl),
                bk.vertices[v].label(tbl)
            )
        }),
    );
    report.push(
        "no arrow from XY to Y in the B₀ tilting quiver",
        bk.arrows
            .iter()
            .find(|&&(u, v)| bk.tags[u] == BTag::XY && bk.tags[v] == BTag::Y)
            .map(|&(u, v)| {
                format!(
                    "{} → {}",
                    bk.vertices[u].label(tbl),
                    bk.vertices[v].label(tbl)
                )
            }),
    );
    report.push(
        "no arrow from TT to TTF in the Λ tilting quiver",
        k.arrows
            .iter()
            .find(|&&(u, v)| tags[u] == Tag::TT && tags[v] == Tag::TTF)
            .map(|&(u, v)| format!("{} → {}", k.vertices[u], k.vertices[v])),
    );

    let mut counts: HashMap<Vec<BSummand>, usize> = HashMap::new();
    for b in &bk.vertices {
        let summands = b.summands();
        for skip in 0..summands.len() {
            let mut almost = summands.clone();
            almost.remove(skip);
            if almost.iter().all(|s| matches!(s, BSummand::H(_))) {
                *counts.entry(almost).or_default() += 1;
            }
        }
    }
    report.push(
        "Y-side almost complete B₀-tilting modules have at most 3 complements",
        counts
            .iter()
            .find(|(_, &c)| c > 3)
            .map(|(m, c)| format!("{m:?} has {c}")),
    );

    let s = BSummand::E(bb.s_id);
    let ext2: Vec<usize> = (0..tbl.len())
        .filter(|&m| d.classes[m] == TorsionClass::T)
        .filter(|&m| b_ext_dim(tbl, d, 2, s, BSummand::H(m)) != Ok(0))
        .collect();
    let apr = is_apr(tbl, d);
    report.push(
        "APR exactly when Ext²(E(S), H(M)) = 0 for all M",
        (apr != ext2.is_empty())
            .then(|| format!("APR = {apr}, nonzero Ext² against {}", tbl.label(&ext2))),
    );

    let images = phi_images(tbl, d, k)?;
    let in_scope: Vec<usize> = (0..kn).filter(|&u| images[u].is_some()).collect();
    let distinct: HashSet<&BModule> = images.iter().flatten().collect();
    report.push(
        "Φ is injective",
        (distinct.len() != in_scope.len())
            .then(|| format!("{} modules, {} images", in_scope.len(), distinct.len())),
    );
    let oracle: HashSet<&BModule> = bk.vertices.iter().collect();
    report.push(
        "Φ is onto the B₀ tilting modules",
        (distinct != oracle).then(|| {
            format!(
                "{} images, {} B₀-tilting modules",
                distinct.len(),
                oracle.len()
            )
        }),
    );
    report.push(
        "every Φ-image is B₀-tilting",
        images
            .iter()
            .flatten()
            .find(|b| !b_is_tilting(tbl, d, b))
            .map(|b| b.label(tbl)),
    );

    let mut round_trip = None;
    for &u in &in_scope {
        let b = images[u].as_ref().expect("in scope");
        match phi_inverse(tbl, d, b) {
            Ok(t) if t == k.vertices[u] => {}
            Ok(t) => {
                round_trip = Some(format!("{} ↦ {}", k.vertices[u], t));
                break;
            }
            Err(e) => {
                round_trip = Some(format!("{}: {e}", k.vertices[u]));
                break;
            }
        }
    }
    report.push("Φ⁻¹ ∘ Φ is the identity", round_trip);

    for (tag, btag, name) in [
        (Tag::TT, BTag::Y, "Φ is a quiver isomorphism TT → Y"),
        (Tag::TTF, BTag::XY, "Φ is a quiver isomorphism TTF → XY"),
    ] {
        let lambda_side = block_arrows(&k.arrows, |u| {
            (tags[u] == tag).then(|| images[u].clone().expect("in scope"))
        });
        let b_side = block_arrows(&bk.arrows, |u| {
            (bk.tags[u] == btag).then(|| bk.vertices[u].clone())
        });
        report.push(
            name,
            (lambda_side != b_side)
                .then(|| format!("{} arrows against {}", lambda_side.len(), b_side.len())),
        );
    }

    let transport = match transport_construct(tbl, d, k) {
        Ok(t) if t == *bk => None,
        Ok(t) => Some(format!(
            "constructed {} vertices / {} arrows, oracle {} / {}",
            t.vertices.len(),
            t.arrows.len(),
            bk.vertices.len(),
            bk.arrows.len()
        )),
        Err(e) => Some(e.to_string()),
    };
    report.push("transported quiver equals the B₀ Hasse diagram", transport);
    Ok(report)
}

/// Every vertex with a BB tilt: those whose simple is not injective.
pub fn bb_vertices(tbl: &IndTable) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for i in 1..=tbl.n() {
        if !ar::is_injective(tbl.rep(tbl.simple_id(i)?))? {
            out.push(i);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::parse_quiver;
    use crate::tilting::{build_ind_table, enumerate_tilting, hasse};
    use std::sync::Arc;

    fn linear(n: usize) -> IndTable {
        let mut s = format!("vertices {n}\n");
        for i in 1..n {
            s.push_str(&format!("arrow a{i} {i} {}\n", i + 1));
        }
        build_ind_table(&Arc::new(parse_quiver(&s).unwrap())).unwrap()
    }

    fn by_dims(tbl: &IndTable, dims: &[usize]) -> usize {
        tbl.id_of_dims(dims).unwrap()
    }

    #[test]
    fn bb_tilt_examples() {
        let t = linear(4);
        let d = make_bb_tilt(&t, 2).unwrap();
        let mut want = vec![
            t.projective_id(1).unwrap(),
            t.projective_id(3).unwrap(),
            t.projective_id(4).unwrap(),
            by_dims(&t, &[1, 0, 0, 0]),
        ];
        want.sort();
        assert_eq!(d.t0.ids(), want.as_slice());
        assert!(!is_apr(&t, &d));
        assert!(is_apr(&t, &make_bb_tilt(&t, 4).unwrap()));

        let t2 = linear(2);
        assert_eq!(make_bb_tilt(&t2, 1), Err(Error::SimpleIsInjective(1)));
        let d = make_bb_tilt(&t2, 2).unwrap();
        let mut apr = vec![t2.projective_id(1).unwrap(), t2.simple_id(1).unwrap()];
        apr.sort();
        assert_eq!(d.t0.ids(), apr.as_slice());
        assert!(is_apr(&t2, &d));
        assert!(matches!(
            make_bb_tilt(&t2, 3),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn torsion_classes() {
        let t = linear(4);
        let d = make_bb_tilt(&t, 2).unwrap();
        for &i in d.t0.ids() {
            assert_eq!(d.classes[i], TorsionClass::T);
        }
        let s = t.simple_id(2).unwrap();
        let free: Vec<usize> = (0..t.len())
            .filter(|&i| d.classes[i] == TorsionClass::F)
            .collect();
        assert_eq!(free, vec![s]);
        assert_eq!(tag_of(&d.t0, &d.classes), Tag::TT);
    }

    #[test]
    fn admissibility_of_bb_tilts() {
        for n in 2..=5 {
            let t = linear(n);
            let tilts = enumerate_tilting(&t);
            for i in bb_vertices(&t).unwrap() {
                let d = make_bb_tilt(&t, i).unwrap();
                assert_eq!(
                    is_admissible(&t, &tilts, &d.classes),
                    Admissibility::Admissible
                );
            }
        }
    }

    #[test]
    fn phi_examples() {
        let t = linear(4);
        let d = make_bb_tilt(&t, 2).unwrap();
        let b = phi(&t, &d, &d.t0).unwrap();
        assert_eq!(b, BModule::new(d.t0.ids().to_vec(), vec![]));
        assert!(b_is_tilting(&t, &d, &b));

        let tilts = enumerate_tilting(&t);
        let s = t.simple_id(2).unwrap();
        for m in tilts.iter().filter(|m| tag_of(m, &d.classes) == Tag::TTF) {
            let b = phi(&t, &d, m).unwrap();
            assert_eq!(b.x_part, vec![s]);
            assert_eq!(b.y_part.len(), 3);
            assert!(b_is_tilting(&t, &d, &b));
        }
        let other = tilts
            .iter()
            .find(|m| tag_of(m, &d.classes) == Tag::Other)
            .unwrap();
        assert!(matches!(phi(&t, &d, other), Err(Error::NotInScope(_))));
    }

    #[test]
    fn admissibility_violation_is_reported() {
        let t = linear(3);
        let ids = [[0, 1, 0], [1, 1, 0], [1, 1, 1]]
            .iter()
            .map(|d| by_dims(&t, d))
            .collect();
        let d = make_general_tilt(&t, TiltingModule::new(&t, ids).unwrap());
        let tilts = enumerate_tilting(&t);
        let Admissibility::Violated { tilt, summand } = is_admissible(&t, &tilts, &d.classes)
        else {
            panic!("expected a violation");
        };
        assert_eq!(
            phi(&t, &d, &tilts[tilt]),
            Err(Error::AdmissibilityViolation {
                module: t.label(tilts[tilt].ids()),
                summand
            })
        );
    }

    #[test]
    fn phi_variants_on_bb() {
        let t = linear(4);
        let d = make_bb_tilt(&t, 2).unwrap();
        for m in enumerate_tilting(&t) {
            if tag_of(&m, &d.classes) == Tag::Other {
                continue;
            }
            let (y, x) = split_parts(&m, &d.classes);
            if x.is_empty() {
                assert_eq!(phi_reject(&t, &d, &m).unwrap(), phi(&t, &d, &m).unwrap());
                continue;
            }
            let y0 = t.sum(&y);
            let s = t.rep(d.bb.unwrap().s_id);
            if crate::rep::hom_dim(s, &y0).unwrap() == 0 {
                let r = phi_reject(&t, &d, &m).unwrap();
                assert_eq!(r.x_part, x);
            }
        }
    }

    #[test]
    fn dispatch_table() {
        let t = linear(4);
        let d = make_bb_tilt(&t, 2).unwrap();
        let s = t.simple_id(2).unwrap();
        for m in (0..t.len()).filter(|&m| d.classes[m] == TorsionClass::T) {
            assert!(b_ext_dim(&t, &d, 0, BSummand::H(m), BSummand::H(m)).unwrap() >= 1);
            assert_eq!(
                b_ext_dim(&t, &d, 1, BSummand::H(m), BSummand::E(s)).unwrap(),
                0
            );
            assert_eq!(
                b_ext_dim(&t, &d, 3, BSummand::E(s), BSummand::H(m)).unwrap(),
                0
            );
        }
        let nonzero = (0..t.len())
            .filter(|&m| d.classes[m] == TorsionClass::T)
            .any(|m| b_ext_dim(&t, &d, 2, BSummand::E(s), BSummand::H(m)).unwrap() != 0);
        assert!(nonzero);
        assert_eq!(
            b_ext_dim(&t, &d, 0, BSummand::H(s), BSummand::E(s)),
            Err(Error::SummandNotInScope(s))
        );
    }

    #[test]
    fn b_tilting_examples() {
        let t = linear(2);
        let d = make_bb_tilt(&t, 2).unwrap();
        let all = b_enumerate_tilting(&t, &d);
        assert_eq!(all.len(), 2);
        let bk = b_hasse(&t, &d);
        assert_eq!((bk.vertices.len(), bk.arrows.len()), (2, 1));
        let mut short = phi(&t, &d, &d.t0).unwrap();
        short.y_part.pop();
        assert!(!b_is_tilting(&t, &d, &short));
    }

    #[test]
    fn round_trip_on_a2() {
        let t = linear(2);
        let d = make_bb_tilt(&t, 2).unwrap();
        for m in enumerate_tilting(&t) {
            let b = phi(&t, &d, &m).unwrap();
            assert_eq!(phi_inverse(&t, &d, &b).unwrap(), m);
        }
        let general = make_general_tilt(&t, d.t0.clone());
        assert_eq!(
            phi_inverse(&t, &general, &phi(&t, &d, &d.t0).unwrap()),
            Err(Error::NotBB)
        );
    }

    #[test]
    fn a4_bb_at_two() {
        let t = linear(4);
        let d = make_bb_tilt(&t, 2).unwrap();
        let k = hasse(&t, &enumerate_tilting(&t));
        let bk = b_hasse(&t, &d);
        assert_eq!((bk.vertices.len(), bk.arrows.len()), (7, 8));
        assert_eq!(transport_construct(&t, &d, &k).unwrap(), bk);
        let report = verify_properties(&t, &d, &k, &bk).unwrap();
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn transport_needs_bb() {
        let t = linear(3);
        let k = hasse(&t, &enumerate_tilting(&t));
        let t0 = k.vertices[0].clone();
        let d = make_general_tilt(&t, t0);
        assert_eq!(transport_construct(&t, &d, &k), Err(Error::NotBB));
    }
}
