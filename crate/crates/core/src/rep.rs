//! Representations of a quiver, the morphisms between them, Ext¹, Krull–Schmidt
//! decomposition, and the trace/reject/quotient constructions.
//!
//! Hom and Ext¹ come out of one linear map. For representations `M`, `N` let
//!
//! ```text
//! δ : ⊕_v Hom(M_v, N_v) → ⊕_{a: s→t} Hom(M_s, N_t),   (f_v) ↦ (N_a f_s − f_t M_a)_a
//! ```
//!
//! Then `Hom(M, N) = ker δ`, and because the path algebra of an acyclic quiver
//! is hereditary, `Ext¹(M, N) = coker δ`. A cokernel element `η` is realized
//! as the extension `0 → N → E → M → 0` with `E_a = [[N_a, η_a], [0, M_a]]`.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{
    column_space_basis, image_complement_change_of_basis, kernel_basis, rank, scalar, solve,
    Matrix, Scalar,
};
use crate::quiver::{DimVector, Quiver};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    quiver: Arc<Quiver>,
    dims: DimVector,
    mats: Vec<Matrix>,
}

impl Representation {
    /// Checks that there is one `dims[t] × dims[s]` matrix per arrow `s → t`.
    pub fn new(quiver: Arc<Quiver>, dims: DimVector, mats: Vec<Matrix>) -> Result<Self> {
        if dims.len() != quiver.vertex_count() {
            return Err(Error::InvalidRepresentation(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                quiver.vertex_count()
            )));
        }
        if mats.len() != quiver.arrows().len() {
            return Err(Error::InvalidRepresentation(format!(
                "{} matrices for {} arrows",
                mats.len(),
                quiver.arrows().len()
            )));
        }
        for (a, m) in quiver.arrows().iter().zip(&mats) {
            if m.rows() != dims[a.t()] || m.cols() != dims[a.s()] {
                return Err(Error::InvalidRepresentation(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    a.name,
                    dims[a.t()],
                    dims[a.s()],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Representation { quiver, dims, mats })
    }

    pub fn with_zero_maps(quiver: Arc<Quiver>, dims: DimVector) -> Self {
        let mats = quiver
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims[a.t()], dims[a.s()]))
            .collect();
        Representation { quiver, dims, mats }
    }

    pub fn zero(quiver: Arc<Quiver>) -> Self {
        let n = quiver.vertex_count();
        Self::with_zero_maps(quiver, vec![0; n])
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn mats(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    fn same_quiver(&self, other: &Representation) -> Result<()> {
        if Arc::ptr_eq(&self.quiver, &other.quiver) || self.quiver == other.quiver {
            Ok(())
        } else {
            Err(Error::QuiverMismatch)
        }
    }

    /// The representation carried by an invariant family of subspaces, in the
    /// coordinates given by the columns of `bases`.
    fn restrict(&self, bases: &[Matrix]) -> Representation {
        let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
        let mats = self
            .quiver
            .arrows()
            .iter()
            .zip(&self.mats)
            .map(|(a, m)| {
                let image = m * &bases[a.s()];
                solve(&bases[a.t()], &image)
                    .expect("shapes agree")
                    .expect("subspaces are invariant")
            })
            .collect();
        Representation {
            quiver: self.quiver.clone(),
            dims,
            mats,
        }
    }
}

/// A family of linear maps commuting with every arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    source: Representation,
    target: Representation,
    comps: Vec<Matrix>,
}

impl Morphism {
    pub fn new(source: Representation, target: Representation, comps: Vec<Matrix>) -> Result<Self> {
        source.same_quiver(&target)?;
        if comps.len() != source.dims.len() {
            return Err(Error::InvalidRepresentation(format!(
                "{} components for {} vertices",
                comps.len(),
                source.dims.len()
            )));
        }
        for (v, f) in comps.iter().enumerate() {
            if f.rows() != target.dims[v] || f.cols() != source.dims[v] {
                return Err(Error::InvalidRepresentation(format!(
                    "component at vertex {} has the wrong shape",
                    v + 1
                )));
            }
        }
        for (ai, a) in source.quiver.arrows().iter().enumerate() {
            let lhs = &target.mats[ai] * &comps[a.s()];
            let rhs = &comps[a.t()] * &source.mats[ai];
            if lhs != rhs {
                return Err(Error::InvalidRepresentation(format!(
                    "square at arrow {} does not commute",
                    a.name
                )));
            }
        }
        Ok(Morphism {
            source,
            target,
            comps,
        })
    }

    pub fn identity(m: &Representation) -> Self {
        Morphism {
            source: m.clone(),
            target: m.clone(),
            comps: m.dims.iter().map(|&d| Matrix::identity(d)).collect(),
        }
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn comps(&self) -> &[Matrix] {
        &self.comps
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Morphism) -> Result<Morphism> {
        if self.target != other.source {
            return Err(Error::DimensionMismatch(
                "composable morphisms expected".into(),
            ));
        }
        Ok(Morphism {
            source: self.source.clone(),
            target: other.target.clone(),
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(f, g)| g * f)
                .collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Matrix::is_zero)
    }

    pub fn is_iso(&self) -> bool {
        self.comps
            .iter()
            .all(|f| f.is_square() && rank(f) == f.rows())
    }
}

/// The linear system whose kernel is `Hom(M, N)` and whose cokernel is
/// `Ext¹(M, N)`. `f_v` is stored row-major from `offsets[v]`; the
/// component for arrow `a` is stored row-major from `row_offsets[a]`.
struct HomSystem {
    offsets: Vec<usize>,
    row_offsets: Vec<usize>,
    delta: Matrix,
}

fn hom_system(m: &Representation, n: &Representation) -> HomSystem {
    let q = &m.quiver;
    let mut offsets = Vec::with_capacity(m.dims.len());
    let mut cols = 0;
    for v in 0..m.dims.len() {
        offsets.push(cols);
        cols += n.dims[v] * m.dims[v];
    }
    let mut row_offsets = Vec::with_capacity(q.arrows().len());
    let mut rows = 0;
    for a in q.arrows() {
        row_offsets.push(rows);
        rows += n.dims[a.t()] * m.dims[a.s()];
    }
    let mut delta = Matrix::zeros(rows, cols);
    for (ai, a) in q.arrows().iter().enumerate() {
        let (s, t) = (a.s(), a.t());
        let (ms, mt, nt) = (m.dims[s], m.dims[t], n.dims[t]);
        let (na, ma) = (&n.mats[ai], &m.mats[ai]);
        for r in 0..nt {
            for c in 0..ms {
                let row = row_offsets[ai] + r * ms + c;
                for k in 0..n.dims[s] {
                    let x = na.get(r, k);
                    if !x.is_zero() {
                        let col = offsets[s] + k * ms + c;
                        let v = delta.get(row, col) + x;
                        delta.set(row, col, v);
                    }
                }
                for k in 0..mt {
                    let x = ma.get(k, c);
                    if !x.is_zero() {
                        let col = offsets[t] + r * mt + k;
                        let v = delta.get(row, col) - x;
                        delta.set(row, col, v);
                    }
                }
            }
        }
    }
    HomSystem {
        offsets,
        row_offsets,
        delta,
    }
}

fn unflatten(v: &Matrix, col: usize, offset: usize, rows: usize, cols: usize) -> Matrix {
    let mut f = Matrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            f.set(r, c, v.get(offset + r * cols + c, col).clone());
        }
    }
    f
}

/// A basis of `Hom(M, N)`: one morphism per column of the kernel basis of δ.
pub fn hom_basis(m: &Representation, n: &Representation) -> Result<Vec<Morphism>> {
    m.same_quiver(n)?;
    let sys = hom_system(m, n);
    let k = kernel_basis(&sys.delta);
    Ok((0..k.cols())
        .map(|j| Morphism {
            source: m.clone(),
            target: n.clone(),
            comps: (0..m.dims.len())
                .map(|v| unflatten(&k, j, sys.offsets[v], n.dims[v], m.dims[v]))
                .collect(),
        })
        .collect())
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    m.same_quiver(n)?;
    let sys = hom_system(m, n);
    Ok(sys.delta.cols() - rank(&sys.delta))
}

pub fn ext1_dim(m: &Representation, n: &Representation) -> Result<usize> {
    m.same_quiver(n)?;
    let sys = hom_system(m, n);
    Ok(sys.delta.rows() - rank(&sys.delta))
}

/// `Ext¹(M, N)` with representative cocycles. `cocycles[k][a]` is the
/// `dim N_t × dim M_s` component of the k-th basis class at arrow `a`.
#[derive(Clone, Debug)]
pub struct Ext1 {
    pub dim: usize,
    pub cocycles: Vec<Vec<Matrix>>,
}

pub fn ext1(m: &Representation, n: &Representation) -> Result<Ext1> {
    m.same_quiver(n)?;
    let sys = hom_system(m, n);
    let (_, inclusion) = image_complement_change_of_basis(&sys.delta, sys.delta.rows());
    let arrows = m.quiver.arrows();
    let cocycles: Vec<Vec<Matrix>> = (0..inclusion.cols())
        .map(|k| {
            arrows
                .iter()
                .enumerate()
                .map(|(ai, a)| {
                    unflatten(
                        &inclusion,
                        k,
                        sys.row_offsets[ai],
                        n.dims[a.t()],
                        m.dims[a.s()],
                    )
                })
                .collect()
        })
        .collect();
    Ok(Ext1 {
        dim: cocycles.len(),
        cocycles,
    })
}

/// The middle term of `0 → N → E → M → 0` with class `eta`.
pub fn extension(m: &Representation, n: &Representation, eta: &[Matrix]) -> Result<Representation> {
    m.same_quiver(n)?;
    let dims: Vec<usize> = n.dims.iter().zip(&m.dims).map(|(a, b)| a + b).collect();
    let mats = m
        .quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let mut e = Matrix::zeros(dims[a.t()], dims[a.s()]);
            e.paste(0, 0, &n.mats[ai]);
            e.paste(0, n.dims[a.s()], &eta[ai]);
            e.paste(n.dims[a.t()], n.dims[a.s()], &m.mats[ai]);
            e
        })
        .collect();
    Representation::new(m.quiver.clone(), dims, mats)
}

/// The extension `0 → U^r → M → N → 0` whose class has the basis cocycles of
/// `Ext¹(N, U)` as components, so that the connecting map
/// `Hom(U^r, U) → Ext¹(N, U)` is onto. Returns `(M, r)`.
pub fn universal_extension(
    n: &Representation,
    u: &Representation,
) -> Result<(Representation, usize)> {
    let e = ext1(n, u)?;
    let r = e.dim;
    if r == 0 {
        return Ok((n.clone(), 0));
    }
    let q = &n.quiver;
    let ur_dims: Vec<usize> = u.dims.iter().map(|d| d * r).collect();
    let ur_mats: Vec<Matrix> = u
        .mats
        .iter()
        .map(|ua| Matrix::block_diag(&vec![ua; r]))
        .collect();
    let ur = Representation::new(q.clone(), ur_dims, ur_mats)?;
    let eta: Vec<Matrix> = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let parts: Vec<&Matrix> = e.cocycles.iter().map(|c| &c[ai]).collect();
            Matrix::vstack(n.dims[a.s()], &parts)
        })
        .collect();
    Ok((extension(n, &ur, &eta)?, r))
}

/// Block-diagonal assembly. The empty sum is the zero representation of `q`.
pub fn direct_sum(q: &Arc<Quiver>, parts: &[&Representation]) -> Result<Representation> {
    for p in parts {
        if p.quiver != *q {
            return Err(Error::QuiverMismatch);
        }
    }
    let n = q.vertex_count();
    let dims: Vec<usize> = (0..n)
        .map(|v| parts.iter().map(|p| p.dims[v]).sum())
        .collect();
    let mats = (0..q.arrows().len())
        .map(|ai| {
            let blocks: Vec<&Matrix> = parts.iter().map(|p| &p.mats[ai]).collect();
            Matrix::block_diag(&blocks)
        })
        .collect();
    Representation::new(q.clone(), dims, mats)
}

/// A subrepresentation given by one basis matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subrep {
    ambient: Representation,
    bases: Vec<Matrix>,
}

impl Subrep {
    /// Reduces each generating set to a basis and checks invariance.
    pub fn new(ambient: Representation, generators: Vec<Matrix>) -> Result<Self> {
        if generators.len() != ambient.dims.len() {
            return Err(Error::InvalidSubrep(format!(
                "{} generator blocks for {} vertices",
                generators.len(),
                ambient.dims.len()
            )));
        }
        for (v, g) in generators.iter().enumerate() {
            if g.rows() != ambient.dims[v] {
                return Err(Error::InvalidSubrep(format!(
                    "generators at vertex {} live in dimension {}, expected {}",
                    v + 1,
                    g.rows(),
                    ambient.dims[v]
                )));
            }
        }
        let bases: Vec<Matrix> = generators.iter().map(column_space_basis).collect();
        for (ai, a) in ambient.quiver.arrows().iter().enumerate() {
            let image = &ambient.mats[ai] * &bases[a.s()];
            if solve(&bases[a.t()], &image)?.is_none() {
                return Err(Error::InvalidSubrep(format!(
                    "arrow {} leaves the subspace",
                    a.name
                )));
            }
        }
        Ok(Subrep { ambient, bases })
    }

    pub fn zero(ambient: &Representation) -> Self {
        Subrep {
            bases: ambient.dims.iter().map(|&d| Matrix::zeros(d, 0)).collect(),
            ambient: ambient.clone(),
        }
    }

    pub fn full(ambient: &Representation) -> Self {
        Subrep {
            bases: ambient.dims.iter().map(|&d| Matrix::identity(d)).collect(),
            ambient: ambient.clone(),
        }
    }

    pub fn ambient(&self) -> &Representation {
        &self.ambient
    }

    pub fn bases(&self) -> &[Matrix] {
        &self.bases
    }

    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(Matrix::cols).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.bases.iter().all(|b| b.cols() == 0)
    }

    pub fn is_full(&self) -> bool {
        self.dims() == self.ambient.dims
    }

    pub fn to_representation(&self) -> Representation {
        self.ambient.restrict(&self.bases)
    }
}

/// `Tr_M(U)`: the sum of the images of all morphisms `U → M`.
pub fn trace(u: &Representation, m: &Representation) -> Result<Subrep> {
    let homs = hom_basis(u, m)?;
    let generators = (0..m.dims.len())
        .map(|v| {
            let parts: Vec<&Matrix> = homs.iter().map(|h| &h.comps[v]).collect();
            Matrix::hstack(m.dims[v], &parts)
        })
        .collect();
    Subrep::new(m.clone(), generators)
}

/// `Rej_M(U)`: the intersection of the kernels of all morphisms `M → U`.
pub fn reject(u: &Representation, m: &Representation) -> Result<Subrep> {
    let homs = hom_basis(m, u)?;
    let generators = (0..m.dims.len())
        .map(|v| {
            let parts: Vec<&Matrix> = homs.iter().map(|h| &h.comps[v]).collect();
            kernel_basis(&Matrix::vstack(m.dims[v], &parts))
        })
        .collect();
    Subrep::new(m.clone(), generators)
}

/// `M/W` together with the canonical projection `M → M/W`.
pub fn quotient(m: &Representation, w: &Subrep) -> Result<(Representation, Morphism)> {
    if w.ambient != *m {
        return Err(Error::InvalidSubrep(
            "subrepresentation of a different module".into(),
        ));
    }
    let split: Vec<(Matrix, Matrix)> = (0..m.dims.len())
        .map(|v| image_complement_change_of_basis(&w.bases[v], m.dims[v]))
        .collect();
    let dims: Vec<usize> = split.iter().map(|(p, _)| p.rows()).collect();
    let mats = m
        .quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| &(&split[a.t()].0 * &m.mats[ai]) * &split[a.s()].1)
        .collect();
    let q = Representation::new(m.quiver.clone(), dims, mats)?;
    let projection = Morphism {
        source: m.clone(),
        target: q.clone(),
        comps: split.into_iter().map(|(p, _)| p).collect(),
    };
    Ok((q, projection))
}

/// A short exact sequence `0 → sub → M → quotient → 0`.
#[derive(Clone, Debug)]
pub struct ShortExact {
    pub sub: Subrep,
    pub quotient: Representation,
    pub projection: Morphism,
}

/// `0 → Tr_M(X) → M → M/Tr_M(X) → 0`.
pub fn trace_sequence(x: &Representation, m: &Representation) -> Result<ShortExact> {
    let sub = trace(x, m)?;
    let (quotient, projection) = self::quotient(m, &sub)?;
    Ok(ShortExact {
        sub,
        quotient,
        projection,
    })
}

/// `0 → Rej_M(U) → M → M/Rej_M(U) → 0`.
pub fn reject_sequence(u: &Representation, m: &Representation) -> Result<ShortExact> {
    let sub = reject(u, m)?;
    let (quotient, projection) = self::quotient(m, &sub)?;
    Ok(ShortExact {
        sub,
        quotient,
        projection,
    })
}

/// `true` iff `M` is a quotient of a direct sum of copies of `X`.
pub fn is_generated_by(m: &Representation, x: &Representation) -> Result<bool> {
    Ok(trace(x, m)?.is_full())
}

/// Splits `M` along the Fitting decomposition of `φ^d`, if `φ` is neither
/// nilpotent nor invertible.
fn fitting_split(m: &Representation, phi: &[Matrix]) -> Option<(Representation, Representation)> {
    let d = m.dims.iter().copied().max().unwrap_or(0) as u32;
    let powers: Vec<Matrix> = phi.iter().map(|f| f.pow(d)).collect();
    let r: usize = powers.iter().map(rank).sum();
    if r == 0 || r == m.total_dim() {
        return None;
    }
    let images: Vec<Matrix> = powers.iter().map(column_space_basis).collect();
    let kernels: Vec<Matrix> = powers.iter().map(kernel_basis).collect();
    Some((m.restrict(&images), m.restrict(&kernels)))
}

fn combine(terms: &[(&Scalar, &[Matrix])]) -> Vec<Matrix> {
    let mut out: Vec<Matrix> = terms[0]
        .1
        .iter()
        .map(|f| Matrix::zeros(f.rows(), f.cols()))
        .collect();
    for (c, phi) in terms {
        for (o, f) in out.iter_mut().zip(phi.iter()) {
            *o = &*o + &f.scale(c);
        }
    }
    out
}

/// Finds an endomorphism that splits `M`, scanning basis elements first,
/// then `φ − c·1`, then `φᵢ + c·φⱼ`, with `1 ≤ |c| ≤ dim M + 1`.
fn find_split(m: &Representation) -> Option<(Representation, Representation)> {
    let ends = hom_basis(m, m).expect("same quiver");
    if ends.len() <= 1 {
        return None;
    }
    let basis: Vec<&[Matrix]> = ends.iter().map(|e| e.comps.as_slice()).collect();
    for phi in &basis {
        if let Some(s) = fitting_split(m, phi) {
            return Some(s);
        }
    }
    let bound = m.total_dim() as i64 + 1;
    let coefficients: Vec<Scalar> = (1..=bound).flat_map(|c| [scalar(c), scalar(-c)]).collect();
    let id: Vec<Matrix> = m.dims.iter().map(|&d| Matrix::identity(d)).collect();
    let one = Scalar::one();
    for phi in &basis {
        for c in &coefficients {
            let minus_c = -c;
            let candidate = combine(&[(&one, phi), (&minus_c, &id)]);
            if let Some(s) = fitting_split(m, &candidate) {
                return Some(s);
            }
        }
    }
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i == j {
                continue;
            }
            for c in &coefficients {
                let candidate = combine(&[(&one, basis[i]), (c, basis[j])]);
                if let Some(s) = fitting_split(m, &candidate) {
                    return Some(s);
                }
            }
        }
    }
    None
}

fn split_fully(m: Representation, out: &mut Vec<Representation>) {
    if m.is_zero() {
        return;
    }
    match find_split(&m) {
        Some((a, b)) => {
            split_fully(a, out);
            split_fully(b, out);
        }
        None => out.push(m),
    }
}

/// Indecomposable summands with multiplicities, in order of first appearance.
pub fn decompose(m: &Representation) -> Vec<(Representation, usize)> {
    let mut parts = Vec::new();
    split_fully(m.clone(), &mut parts);
    let mut grouped: Vec<(Representation, usize)> = Vec::new();
    for p in parts {
        match grouped
            .iter_mut()
            .find(|(g, _)| indecomposables_isomorphic(g, &p))
        {
            Some((_, k)) => *k += 1,
            None => grouped.push((p, 1)),
        }
    }
    grouped
}

/// Over a Dynkin quiver an indecomposable is determined by its dimension
/// vector. Elsewhere a bounded search for an invertible morphism is made.
fn indecomposables_isomorphic(x: &Representation, y: &Representation) -> bool {
    if x.dims != y.dims {
        return false;
    }
    if x.quiver.is_representation_finite() {
        return true;
    }
    let Ok(homs) = hom_basis(x, y) else {
        return false;
    };
    if homs.iter().any(Morphism::is_iso) {
        return true;
    }
    let one = Scalar::one();
    let bound = x.total_dim() as i64 + 1;
    for i in 0..homs.len() {
        for j in 0..homs.len() {
            if i == j {
                continue;
            }
            for c in (1..=bound).flat_map(|c| [scalar(c), scalar(-c)]) {
                let comps = combine(&[(&one, &homs[i].comps), (&c, &homs[j].comps)]);
                if comps.iter().all(|f| rank(f) == f.rows()) {
                    return true;
                }
            }
        }
    }
    false
}

/// Isomorphism test by comparing Krull–Schmidt decompositions.
pub fn is_iso(m: &Representation, n: &Representation) -> bool {
    if m.same_quiver(n).is_err() || m.dims != n.dims {
        return false;
    }
    if m == n {
        return true;
    }
    let mut left = decompose(m);
    let right = decompose(n);
    if left.len() != right.len() {
        return false;
    }
    for (r, k) in &right {
        match left
            .iter()
            .position(|(l, j)| j == k && indecomposables_isomorphic(l, r))
        {
            Some(pos) => {
                left.swap_remove(pos);
            }
            None => return false,
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use crate::quiver::{injective_rep, parse_quiver, projective_rep, simple_rep};
    use proptest::prelude::*;

    fn quiver(text: &str) -> Arc<Quiver> {
        Arc::new(parse_quiver(text).unwrap())
    }

    fn a2() -> Arc<Quiver> {
        quiver("vertices 2\narrow a 1 2")
    }

    fn a3() -> Arc<Quiver> {
        quiver("vertices 3\narrow a 1 2\narrow b 2 3")
    }

    fn rep(q: &Arc<Quiver>, dims: &[usize], mats: &[&[&[i64]]]) -> Representation {
        let mats = q
            .arrows()
            .iter()
            .zip(mats)
            .map(|(a, m)| {
                if m.is_empty() {
                    Matrix::zeros(dims[a.t()], dims[a.s()])
                } else {
                    Matrix::from_i64(m)
                }
            })
            .collect();
        Representation::new(q.clone(), dims.to_vec(), mats).unwrap()
    }

    #[test]
    fn validation() {
        let q = a2();
        assert!(Representation::new(q.clone(), vec![1], vec![]).is_err());
        assert!(Representation::new(q.clone(), vec![1, 1], vec![Matrix::zeros(2, 1)]).is_err());
        let zero = Representation::zero(q.clone());
        assert!(zero.is_zero());
        let other = quiver("vertices 2\narrow b 1 2");
        assert_eq!(
            hom_basis(&zero, &Representation::zero(other)),
            Err(Error::QuiverMismatch)
        );
    }

    #[test]
    fn hom_examples() {
        let q = a2();
        let (s1, s2) = (simple_rep(&q, 1).unwrap(), simple_rep(&q, 2).unwrap());
        let (p1, p2) = (
            projective_rep(&q, 1).unwrap(),
            projective_rep(&q, 2).unwrap(),
        );
        assert_eq!(hom_basis(&s1, &s1).unwrap().len(), 1);
        assert_eq!(hom_basis(&p1, &s2).unwrap().len(), 0);
        assert_eq!(hom_basis(&p2, &p1).unwrap().len(), 1);
        for h in hom_basis(&p1, &p1).unwrap() {
            Morphism::new(h.source.clone(), h.target.clone(), h.comps.clone()).unwrap();
        }
    }

    #[test]
    fn ext_examples() {
        let q = a2();
        let (s1, s2) = (simple_rep(&q, 1).unwrap(), simple_rep(&q, 2).unwrap());
        assert_eq!(ext1(&s1, &s2).unwrap().dim, 1);
        assert_eq!(ext1(&s2, &s1).unwrap().dim, 0);
        let p1 = projective_rep(&q, 1).unwrap();
        for n in [&s1, &s2, &p1] {
            assert_eq!(ext1_dim(&p1, n).unwrap(), 0);
        }
        let e = ext1(&s1, &s2).unwrap();
        let mid = extension(&s1, &s2, &e.cocycles[0]).unwrap();
        assert!(is_iso(&mid, &p1));
    }

    #[test]
    fn iso_examples() {
        let q = a2();
        let p1 = projective_rep(&q, 1).unwrap();
        assert!(is_iso(&p1, &p1));
        assert!(!is_iso(
            &simple_rep(&q, 1).unwrap(),
            &simple_rep(&q, 2).unwrap()
        ));
        assert!(is_iso(&p1, &rep(&q, &[1, 1], &[&[&[5]]])));
        let s = direct_sum(
            &q,
            &[&simple_rep(&q, 1).unwrap(), &simple_rep(&q, 2).unwrap()],
        )
        .unwrap();
        assert_eq!(s.dims(), &[1, 1]);
        assert!(s.mats()[0].is_zero());
        assert!(!is_iso(&s, &p1));
    }

    #[test]
    fn decompose_examples() {
        let q = a2();
        let p1 = projective_rep(&q, 1).unwrap();
        assert_eq!(decompose(&p1), vec![(p1.clone(), 1)]);

        let s1 = simple_rep(&q, 1).unwrap();
        let parts = decompose(&direct_sum(&q, &[&s1, &s1]).unwrap());
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].0.dims(), &[1, 0]);
        assert_eq!(parts[0].1, 2);

        // P(1) ⊕ S(2), written in a basis that hides the splitting.
        let m = rep(&q, &[1, 2], &[&[&[1], &[1]]]);
        let mut dims: Vec<Vec<usize>> = decompose(&m)
            .iter()
            .map(|(p, _)| p.dims().to_vec())
            .collect();
        dims.sort();
        assert_eq!(dims, vec![vec![0, 1], vec![1, 1]]);
        assert!(decompose(&Representation::zero(q)).is_empty());
    }

    #[test]
    fn trace_and_reject_examples() {
        let q = a2();
        let (s1, s2) = (simple_rep(&q, 1).unwrap(), simple_rep(&q, 2).unwrap());
        let p1 = projective_rep(&q, 1).unwrap();
        assert!(trace(&p1, &p1).unwrap().is_full());
        assert_eq!(trace(&s2, &p1).unwrap().dims(), vec![0, 1]);
        assert!(trace(&s1, &p1).unwrap().is_zero());

        assert!(reject(&p1, &p1).unwrap().is_zero());
        assert_eq!(reject(&s1, &p1).unwrap().dims(), vec![0, 1]);
        assert!(reject(&s2, &s1).unwrap().is_full());
    }

    #[test]
    fn quotient_examples() {
        let q = a2();
        let p1 = projective_rep(&q, 1).unwrap();
        let (same, proj) = quotient(&p1, &Subrep::zero(&p1)).unwrap();
        assert!(is_iso(&same, &p1));
        assert!(proj.is_iso());
        assert!(quotient(&p1, &Subrep::full(&p1)).unwrap().0.is_zero());

        let seq = trace_sequence(&simple_rep(&q, 2).unwrap(), &p1).unwrap();
        assert_eq!(seq.quotient.dims(), &[1, 0]);
        let other = simple_rep(&q, 1).unwrap();
        assert!(quotient(&p1, &Subrep::zero(&other)).is_err());
    }

    #[test]
    fn generation_examples() {
        let q = a2();
        let (s1, s2) = (simple_rep(&q, 1).unwrap(), simple_rep(&q, 2).unwrap());
        let p1 = projective_rep(&q, 1).unwrap();
        assert!(is_generated_by(&p1, &p1).unwrap());
        assert!(!is_generated_by(&s1, &s2).unwrap());
        assert!(!is_generated_by(&s2, &p1).unwrap());
        assert!(is_generated_by(&s1, &p1).unwrap());
    }

    #[test]
    fn subrep_validation() {
        let q = a2();
        let p1 = projective_rep(&q, 1).unwrap();
        // The top of P(1) is not a subrepresentation.
        let top = vec![Matrix::identity(1), Matrix::zeros(1, 0)];
        assert!(matches!(Subrep::new(p1, top), Err(Error::InvalidSubrep(_))));
    }

    #[test]
    fn universal_extension_examples() {
        let q = a2();
        let (s1, s2) = (simple_rep(&q, 1).unwrap(), simple_rep(&q, 2).unwrap());
        let p1 = projective_rep(&q, 1).unwrap();

        let (m, r) = universal_extension(&s2, &s1).unwrap();
        assert_eq!((r, m), (0, s2.clone()));

        let (m, r) = universal_extension(&s1, &s2).unwrap();
        assert_eq!(r, 1);
        assert!(is_iso(&m, &p1));

        let (m, r) = universal_extension(&direct_sum(&q, &[&s1, &s1]).unwrap(), &s2).unwrap();
        assert_eq!(r, 2);
        assert_eq!(ext1_dim(&m, &s2).unwrap(), 0);
        assert!(is_iso(&m, &direct_sum(&q, &[&p1, &p1]).unwrap()));
        assert_eq!(hom_dim(&m, &s2).unwrap(), 0);
    }

    #[test]
    fn universal_extension_kills_ext() {
        let q = a3();
        let s2 = simple_rep(&q, 2).unwrap();
        for i in 1..=3 {
            for n in [simple_rep(&q, i).unwrap(), injective_rep(&q, i).unwrap()] {
                let (m, r) = universal_extension(&n, &s2).unwrap();
                assert_eq!(r, ext1_dim(&n, &s2).unwrap());
                assert_eq!(ext1_dim(&m, &s2).unwrap(), 0);
            }
        }
    }

    fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-2i64..=2, rows * cols).prop_map(move |v| {
            Matrix::new(rows, cols, v.into_iter().map(scalar).collect()).unwrap()
        })
    }

    fn a3_rep() -> impl Strategy<Value = Representation> {
        proptest::collection::vec(0usize..=2, 3).prop_flat_map(|dims| {
            let q = a3();
            (
                small_matrix(dims[1], dims[0]),
                small_matrix(dims[2], dims[1]),
            )
                .prop_map(move |(a, b)| {
                    Representation::new(q.clone(), dims.clone(), vec![a, b]).unwrap()
                })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn euler_identity(m in a3_rep(), n in a3_rep()) {
            let q = m.quiver().clone();
            let chi = q.euler_form(m.dims(), n.dims()).unwrap();
            let lhs = hom_dim(&m, &n).unwrap() as i64 - ext1_dim(&m, &n).unwrap() as i64;
            prop_assert_eq!(lhs, chi);
        }

        #[test]
        fn hom_basis_commutes(m in a3_rep(), n in a3_rep()) {
            for h in hom_basis(&m, &n).unwrap() {
                prop_assert!(Morphism::new(m.clone(), n.clone(), h.comps.clone()).is_ok());
            }
        }

        #[test]
        fn decomposition_reassembles(m in a3_rep()) {
            let parts = decompose(&m);
            let mut flat = Vec::new();
            for (p, k) in &parts {
                prop_assert_eq!(hom_dim(p, p).unwrap(), 1);
                for _ in 0..*k {
                    flat.push(p);
                }
            }
            let sum = direct_sum(m.quiver(), &flat).unwrap();
            prop_assert_eq!(sum.dims(), m.dims());
            prop_assert!(is_iso(&sum, &m));
        }

        #[test]
        fn trace_quotient_has_no_maps_from_generator(m in a3_rep(), x in a3_rep()) {
            // Maps X → M/Tr lift to M once Ext¹(X, X) = 0, since Tr is a quotient of some X^k.
            prop_assume!(ext1_dim(&x, &x).unwrap() == 0);
            let seq = trace_sequence(&x, &m).unwrap();
            prop_assert_eq!(hom_dim(&x, &seq.quotient).unwrap(), 0);
        }

        #[test]
        fn reject_quotient_is_cogenerated(m in a3_rep(), u in a3_rep()) {
            let seq = reject_sequence(&u, &m).unwrap();
            prop_assert!(reject(&u, &seq.quotient).unwrap().is_zero());
        }
    }
}
