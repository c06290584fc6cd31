//! Duality, transpose and the Auslander–Reiten translates, plus enumeration
//! of all indecomposables by knitting from the projectives.
//!
//! `Tr M` is read off a minimal projective presentation
//! `P₁ --f--> P₀ → M → 0`. Applying `Hom(−, Λ)` turns each `P(v) = e_vΛ` into
//! `Λe_v`, the representation of the opposite quiver spanned by paths ending
//! at `v`, and `Tr M = coker Hom(f, Λ)`. Minimality matters: it is what makes
//! the cokernel free of projective summands.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{image_complement_change_of_basis, kernel_basis, Matrix, Scalar};
use crate::quiver::{projective_rep, DimVector, Quiver};
use crate::rep::{Representation, Subrep};

use num_traits::{One, Zero};

pub const KNIT_CAP: usize = 10_000;

/// Transposed matrices over the opposite quiver; dimension vector unchanged.
pub fn dual(m: &Representation) -> Representation {
    let op = Arc::new(m.quiver().opposite());
    let mats = m.mats().iter().map(Matrix::transpose).collect();
    Representation::new(op, m.dims().to_vec(), mats).expect("transposed shapes fit")
}

/// Reattaches a representation to an equal quiver held elsewhere.
fn rehome(m: Representation, q: &Arc<Quiver>) -> Representation {
    debug_assert_eq!(**m.quiver(), **q);
    Representation::new(q.clone(), m.dims().to_vec(), m.mats().to_vec()).expect("same shapes")
}

/// Generators of `M` modulo its radical: at each vertex, a complement of the
/// span of the images of the incoming arrows. One column per generator.
fn top_generators(m: &Representation) -> Vec<Matrix> {
    let q = m.quiver();
    (0..q.vertex_count())
        .map(|v| {
            let incoming: Vec<&Matrix> = q
                .arrows()
                .iter()
                .zip(m.mats())
                .filter(|(a, _)| a.t() == v)
                .map(|(_, mat)| mat)
                .collect();
            let radical = Matrix::hstack(m.dims()[v], &incoming);
            image_complement_change_of_basis(&radical, m.dims()[v]).1
        })
        .collect()
}

pub fn top_dims(m: &Representation) -> DimVector {
    top_generators(m).iter().map(Matrix::cols).collect()
}

/// A generator of a free module: the vertex it sits at and its index there.
type Generator = (usize, usize);

fn generators(top: &[Matrix]) -> Vec<Generator> {
    top.iter()
        .enumerate()
        .flat_map(|(v, g)| (0..g.cols()).map(move |k| (v, k)))
        .collect()
}

/// The projective cover `π: P₀ → M`, as the matrices `π_w` whose columns are
/// indexed by pairs (generator, path from the generator's vertex to `w`).
fn cover_map(m: &Representation, top: &[Matrix], gens: &[Generator]) -> Vec<Matrix> {
    let q = m.quiver();
    let paths = q.paths();
    (0..q.vertex_count())
        .map(|w| {
            let mut columns = Vec::new();
            for &(v, k) in gens {
                for p in paths.between(v, w) {
                    let mut x = top[v].column(k);
                    for &ai in &p.arrows {
                        x = &m.mats()[ai] * &x;
                    }
                    columns.push(x);
                }
            }
            let refs: Vec<&Matrix> = columns.iter().collect();
            Matrix::hstack(m.dims()[w], &refs)
        })
        .collect()
}

/// The direct sum of the projectives at `gens`, built from the canonical
/// projectives so that its basis matches the column order of [`cover_map`].
fn free_module(q: &Arc<Quiver>, gens: &[Generator]) -> Result<Representation> {
    let parts: Vec<Representation> = gens
        .iter()
        .map(|&(v, _)| projective_rep(q, v + 1))
        .collect::<Result<_>>()?;
    let refs: Vec<&Representation> = parts.iter().collect();
    crate::rep::direct_sum(q, &refs)
}

/// Generators of `P₀`, generators of `P₁`, and the image of each `P₁`
/// generator in `P₀`. The block-diagonal basis of `free_module` is
/// generator-major at every vertex, matching the columns of `cover_map`.
fn minimal_presentation(
    m: &Representation,
) -> Result<(Vec<Generator>, Vec<Generator>, Vec<Matrix>)> {
    let q = m.quiver().clone();
    let top = top_generators(m);
    let gens0 = generators(&top);
    let pi = cover_map(m, &top, &gens0);
    let p0 = free_module(&q, &gens0)?;
    let kernel = Subrep::new(p0, pi.iter().map(kernel_basis).collect())?;
    let k = kernel.to_representation();
    let ktop = top_generators(&k);
    let gens1 = generators(&ktop);
    // Each generator of P₁ as a vector in P₀ at its own vertex.
    let images: Vec<Matrix> = gens1
        .iter()
        .map(|&(w, l)| &kernel.bases()[w] * &ktop[w].column(l))
        .collect();
    Ok((gens0, gens1, images))
}

/// `Tr M` over the opposite quiver. Projectives go to zero.
pub fn transpose(m: &Representation) -> Result<Representation> {
    let q = m.quiver().clone();
    let op = Arc::new(q.opposite());
    let n = q.vertex_count();
    let (gens0, gens1, images) = minimal_presentation(m)?;
    let paths = q.paths();

    // For each P₀ generator, offset of its block in P₀ at vertex w.
    let block_offset =
        |w: usize, g: usize| -> usize { gens0[..g].iter().map(|&(v, _)| paths.count(v, w)).sum() };

    // Source and target of Hom(f, Λ) at vertex u: paths u ⇝ (generator vertex).
    let src_dim = |u: usize| gens0.iter().map(|&(v, _)| paths.count(u, v)).sum::<usize>();
    let tgt_dim = |u: usize| gens1.iter().map(|&(w, _)| paths.count(u, w)).sum::<usize>();
    let tgt_offset =
        |u: usize, l: usize| -> usize { gens1[..l].iter().map(|&(w, _)| paths.count(u, w)).sum() };

    let mut projections = Vec::with_capacity(n);
    let mut inclusions = Vec::with_capacity(n);
    let mut dims = Vec::with_capacity(n);
    for u in 0..n {
        // x ↦ (x·c_l)_l, where c_l is the image of the l-th P₁ generator.
        let mut map = Matrix::zeros(tgt_dim(u), src_dim(u));
        let mut col = 0;
        for (g, &(v, _)) in gens0.iter().enumerate() {
            for x in paths.between(u, v) {
                for (l, &(w, _)) in gens1.iter().enumerate() {
                    let base = block_offset(w, g);
                    for (pi, p) in paths.between(v, w).iter().enumerate() {
                        let c = images[l].get(base + pi, 0);
                        if c.is_zero() {
                            continue;
                        }
                        let mut joined = x.arrows.clone();
                        joined.extend_from_slice(&p.arrows);
                        let pos = paths.position(u, &joined).expect("concatenated path");
                        let row = tgt_offset(u, l) + pos;
                        let value = map.get(row, col) + c;
                        map.set(row, col, value);
                    }
                }
                col += 1;
            }
        }
        let (proj, incl) = image_complement_change_of_basis(&map, tgt_dim(u));
        dims.push(proj.rows());
        projections.push(proj);
        inclusions.push(incl);
    }

    // The opposite arrow t → s prepends a to paths t ⇝ w.
    let mats = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let (s, t) = (a.s(), a.t());
            let mut act = Matrix::zeros(tgt_dim(s), tgt_dim(t));
            for (l, &(w, _)) in gens1.iter().enumerate() {
                for (xi, x) in paths.between(t, w).iter().enumerate() {
                    let mut joined = vec![ai];
                    joined.extend_from_slice(&x.arrows);
                    let pos = paths.position(s, &joined).expect("extended path");
                    act.set(tgt_offset(s, l) + pos, tgt_offset(t, l) + xi, Scalar::one());
                }
            }
            &(&projections[s] * &act) * &inclusions[t]
        })
        .collect();
    Representation::new(op, dims, mats)
}

/// `τM = D Tr M`, over the quiver of `M`.
pub fn tau(m: &Representation) -> Result<Representation> {
    Ok(rehome(dual(&transpose(m)?), m.quiver()))
}

/// `τ⁻¹M = Tr D M`, over the quiver of `M`.
pub fn tau_inv(m: &Representation) -> Result<Representation> {
    Ok(rehome(transpose(&dual(m))?, m.quiver()))
}

pub fn is_projective(m: &Representation) -> Result<bool> {
    let (gens0, _, _) = minimal_presentation(m)?;
    let paths = m.quiver().paths();
    let cover: usize = gens0
        .iter()
        .map(|&(v, _)| {
            (0..m.dims().len())
                .map(|w| paths.count(v, w))
                .sum::<usize>()
        })
        .sum();
    Ok(cover == m.total_dim())
}

pub fn is_injective(m: &Representation) -> Result<bool> {
    is_projective(&dual(m))
}

/// Sort key for indecomposables: total dimension, then dimension vector.
pub fn canonical_key(dims: &[usize]) -> (usize, Vec<usize>) {
    (dims.iter().sum(), dims.to_vec())
}

/// Every indecomposable up to isomorphism, as `τ^{-k}P(i)` found breadth
/// first and deduplicated by dimension vector, in canonical order.
pub fn knit_indecomposables(q: &Arc<Quiver>) -> Result<Vec<Representation>> {
    knit_with_cap(q, KNIT_CAP)
}

pub fn knit_with_cap(q: &Arc<Quiver>, cap: usize) -> Result<Vec<Representation>> {
    if !q.is_representation_finite() {
        return Err(Error::NotRepresentationFinite);
    }
    let mut seen: HashSet<DimVector> = HashSet::new();
    let mut found = Vec::new();
    let mut level: Vec<Representation> = (1..=q.vertex_count())
        .map(|i| projective_rep(q, i))
        .collect::<Result<_>>()?;
    while !level.is_empty() {
        let mut next = Vec::new();
        for m in level {
            if m.is_zero() || !seen.insert(m.dims().to_vec()) {
                continue;
            }
            if found.len() == cap {
                return Err(Error::IterationCapExceeded(cap));
            }
            next.push(tau_inv(&m)?);
            found.push(m);
        }
        level = next;
    }
    found.sort_by_key(|m| canonical_key(m.dims()));
    Ok(found)
}
