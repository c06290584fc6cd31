//! Dense linear algebra over the rationals.
//!
//! Entries are arbitrary-precision rationals kept in lowest terms, so every
//! rank, kernel and solution below is exact. Elimination is done on an
//! integer copy of the matrix with Bareiss' fraction-free scheme and only the
//! final reduction to reduced row echelon form divides.
//!
//! All Hom and Ext¹ dimensions in this crate are computed over ℚ. For the
//! Dynkin quivers the library accepts, every indecomposable representation is
//! defined over the prime field, so these dimensions agree with the ones over
//! an algebraically closed field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A field element. `BigRational` keeps numerator and denominator coprime
/// with a positive denominator, and stores zero as `0/1`.
pub type Scalar = BigRational;

pub fn scalar(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Row-major dense matrix. Matrices with zero rows or zero columns are legal
/// and behave as zero maps between the corresponding spaces.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Scalar::one();
        }
        m
    }

    /// Builds a matrix from integer rows. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            entries.extend(r.iter().map(|&x| scalar(x)));
        }
        Matrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    /// A column vector.
    pub fn column_vector(values: Vec<Scalar>) -> Self {
        Matrix {
            rows: values.len(),
            cols: 1,
            entries: values,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn column(&self, c: usize) -> Matrix {
        Matrix::column_vector((0..self.rows).map(|r| self.get(r, c).clone()).collect())
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                m.entries[r * cols.len() + j] = self.get(r, c).clone();
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut entries = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            entries.extend_from_slice(&self.entries[r * self.cols..(r + 1) * self.cols]);
        }
        Matrix {
            rows: rows.len(),
            cols: self.cols,
            entries,
        }
    }

    /// Horizontal concatenation. All parts must have `rows` rows.
    pub fn hstack(rows: usize, parts: &[&Matrix]) -> Matrix {
        let cols: usize = parts.iter().map(|p| p.cols).sum();
        let mut m = Matrix::zeros(rows, cols);
        let mut offset = 0;
        for p in parts {
            assert_eq!(p.rows, rows, "hstack row mismatch");
            for r in 0..rows {
                for c in 0..p.cols {
                    m.entries[r * cols + offset + c] = p.get(r, c).clone();
                }
            }
            offset += p.cols;
        }
        m
    }

    /// Vertical concatenation. All parts must have `cols` columns.
    pub fn vstack(cols: usize, parts: &[&Matrix]) -> Matrix {
        let mut entries = Vec::new();
        let mut rows = 0;
        for p in parts {
            assert_eq!(p.cols, cols, "vstack column mismatch");
            entries.extend_from_slice(&p.entries);
            rows += p.rows;
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn block_diag(parts: &[&Matrix]) -> Matrix {
        let rows: usize = parts.iter().map(|p| p.rows).sum();
        let cols: usize = parts.iter().map(|p| p.cols).sum();
        let mut m = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for p in parts {
            m.paste(r0, c0, p);
            r0 += p.rows;
            c0 += p.cols;
        }
        m
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.entries[(r0 + r) * self.cols + c0 + c] = block.get(r, c).clone();
            }
        }
    }

    pub fn submatrix(&self, r0: usize, rows: usize, c0: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.entries[r * cols + c] = self.get(r0 + r, c0 + c).clone();
            }
        }
        m
    }

    pub fn scale(&self, k: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * k).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Matrix {
        assert!(self.is_square(), "pow of a non-square matrix");
        let mut result = Matrix::identity(self.rows);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]({}x{})", self.rows, self.cols)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "cannot multiply {}x{} by {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * rhs.cols + c] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    /// The nonzero rows of the reduced row echelon form (`pivots.len()` rows).
    pub rref: Matrix,
    pub pivots: Vec<usize>,
}

/// Clears denominators row by row. Row scaling leaves the row space alone.
fn integer_rows(m: &Matrix) -> Vec<Vec<BigInt>> {
    (0..m.rows)
        .map(|r| {
            let row = &m.entries[r * m.cols..(r + 1) * m.cols];
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect()
}

/// Fraction-free forward elimination followed by back substitution.
///
/// The pivot in each column is the first nonzero entry at or below the
/// current pivot row, so the result depends on nothing but the input.
pub fn echelon(m: &Matrix) -> Echelon {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = integer_rows(m);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                // Still has to be rescaled to keep later divisions exact.
                for j in c + 1..cols {
                    let v = &a[r][c] * &a[i][j];
                    a[i][j] = exact_div(v, &prev);
                }
                continue;
            }
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = exact_div(v, &prev);
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }

    // Back substitution on the rational copy of the echelon rows.
    let rank = pivots.len();
    let mut rref = Matrix::zeros(rank, cols);
    for (k, row) in a.iter().take(rank).enumerate() {
        let pivot = &row[pivots[k]];
        for (c, x) in row.iter().enumerate() {
            if !x.is_zero() {
                rref.entries[k * cols + c] = Scalar::new(x.clone(), pivot.clone());
            }
        }
    }
    for k in (0..rank).rev() {
        let pc = pivots[k];
        for i in 0..k {
            let f = rref.get(i, pc).clone();
            if f.is_zero() {
                continue;
            }
            for c in pc..cols {
                let v = rref.get(k, c) * &f;
                if !v.is_zero() {
                    rref.entries[i * cols + c] -= v;
                }
            }
        }
    }
    Echelon { rref, pivots }
}

fn exact_div(v: BigInt, d: &BigInt) -> BigInt {
    let (q, rem) = v.div_rem(d);
    debug_assert!(rem.is_zero(), "inexact Bareiss division");
    q
}

pub fn rank(m: &Matrix) -> usize {
    echelon(m).pivots.len()
}

/// Columns form a basis of the null space `{v : m·v = 0}`, one column per
/// free variable of the reduced row echelon form, in increasing order.
pub fn kernel_basis(m: &Matrix) -> Matrix {
    let e = echelon(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !e.pivots.contains(c)).collect();
    let mut k = Matrix::zeros(m.cols, free.len());
    for (j, &f) in free.iter().enumerate() {
        k.set(f, j, Scalar::one());
        for (i, &p) in e.pivots.iter().enumerate() {
            let v = e.rref.get(i, f);
            if !v.is_zero() {
                k.set(p, j, -v);
            }
        }
    }
    k
}

/// The columns of `m` at the pivot positions: a basis of the column space
/// drawn from the columns themselves.
pub fn column_space_basis(m: &Matrix) -> Matrix {
    let e = echelon(m);
    m.select_columns(&e.pivots)
}

/// Some `x` with `m·x = b`, or `None` when the system is inconsistent.
/// Free variables are set to zero.
pub fn solve(m: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    if m.rows != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "solve: matrix has {} rows, right-hand side has {}",
            m.rows, b.rows
        )));
    }
    let aug = Matrix::hstack(m.rows, &[m, b]);
    let e = echelon(&aug);
    if e.pivots.iter().any(|&p| p >= m.cols) {
        return Ok(None);
    }
    let mut x = Matrix::zeros(m.cols, b.cols);
    for (k, &p) in e.pivots.iter().enumerate() {
        for j in 0..b.cols {
            x.set(p, j, e.rref.get(k, m.cols + j).clone());
        }
    }
    Ok(Some(x))
}

/// Coordinates on a complement of the column span of `sub` inside
/// `ambient_dim`-space.
///
/// Returns `(projection, inclusion)` where `projection` is `q × ambient_dim`,
/// `inclusion` is `ambient_dim × q`, `projection · sub = 0` and
/// `projection · inclusion = 1`. The complement is spanned by the standard
/// basis vectors at the non-pivot positions of the row-reduced span, so the
/// choice is deterministic.
pub fn image_complement_change_of_basis(sub: &Matrix, ambient_dim: usize) -> (Matrix, Matrix) {
    assert_eq!(
        sub.rows, ambient_dim,
        "subspace generators live in the wrong space"
    );
    let e = echelon(&sub.transpose());
    let complement: Vec<usize> = (0..ambient_dim).filter(|c| !e.pivots.contains(c)).collect();
    let q = complement.len();
    let mut projection = Matrix::zeros(q, ambient_dim);
    let mut inclusion = Matrix::zeros(ambient_dim, q);
    for (i, &j) in complement.iter().enumerate() {
        projection.set(i, j, Scalar::one());
        inclusion.set(j, i, Scalar::one());
        for (k, &p) in e.pivots.iter().enumerate() {
            let v = e.rref.get(k, j);
            if !v.is_zero() {
                projection.set(i, p, -v);
            }
        }
    }
    (projection, inclusion)
}

/// `true` iff the column span of `a` is contained in the column span of `b`.
pub fn span_contains(b: &Matrix, a: &Matrix) -> bool {
    if a.cols == 0 {
        return true;
    }
    rank(&Matrix::hstack(b.rows, &[b, a])) == rank(b)
}

/// Scales a rational vector to a primitive integer vector with positive
/// leading entry. Used for stable printing and comparisons in tests.
pub fn primitive(v: &[Scalar]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = ints
        .iter()
        .find(|x| !x.is_zero())
        .map_or(BigInt::one(), |x| x.signum());
    ints.into_iter().map(|x| x / &g * &sign).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Plain Gaussian elimination over the rationals, used as an oracle for
    /// the fraction-free path.
    fn naive_rank(m: &Matrix) -> usize {
        let mut a: Vec<Vec<Scalar>> = (0..m.rows())
            .map(|r| (0..m.cols()).map(|c| m.get(r, c).clone()).collect())
            .collect();
        let mut rank = 0;
        for c in 0..m.cols() {
            let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for i in 0..a.len() {
                if i != rank && !a[i][c].is_zero() {
                    let f = &a[i][c] / &a[rank][c];
                    let pivot = a[rank].clone();
                    for (x, y) in a[i].iter_mut().zip(&pivot) {
                        *x -= y * &f;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::identity(2)), 2);
        assert_eq!(rank(&Matrix::zeros(0, 5)), 0);
        assert_eq!(rank(&Matrix::from_i64(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn kernel_examples() {
        let k = kernel_basis(&Matrix::identity(3));
        assert_eq!((k.rows(), k.cols()), (3, 0));

        let k = kernel_basis(&Matrix::from_i64(&[&[1, -1]]));
        assert_eq!(k.cols(), 1);
        assert_eq!(
            primitive(k.entries()),
            vec![BigInt::from(1), BigInt::from(1)]
        );

        let m = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        let k = kernel_basis(&m);
        assert_eq!(k.cols(), 1);
        assert!((&m * &k).is_zero());
        assert_eq!(
            primitive(k.entries()),
            vec![BigInt::from(2), BigInt::from(-1)]
        );
    }

    #[test]
    fn solve_examples() {
        let b = Matrix::from_i64(&[&[3], &[-4]]);
        assert_eq!(solve(&Matrix::identity(2), &b).unwrap(), Some(b.clone()));
        assert_eq!(solve(&Matrix::zeros(2, 2), &b).unwrap(), None);

        let m = Matrix::from_i64(&[&[1, 1]]);
        let rhs = Matrix::from_i64(&[&[2]]);
        let x = solve(&m, &rhs).unwrap().unwrap();
        assert_eq!(&m * &x, rhs);

        assert!(matches!(
            solve(&m, &Matrix::zeros(2, 1)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn complement_examples() {
        let (p, _) = image_complement_change_of_basis(&Matrix::identity(2), 2);
        assert_eq!((p.rows(), p.cols()), (0, 2));

        let (p, i) = image_complement_change_of_basis(&Matrix::zeros(3, 0), 3);
        assert_eq!(p, Matrix::identity(3));
        assert_eq!(i, Matrix::identity(3));

        let sub = Matrix::from_i64(&[&[1], &[0]]);
        let (p, i) = image_complement_change_of_basis(&sub, 2);
        assert_eq!(p.rows(), 1);
        assert!((&p * &sub).is_zero());
        assert_eq!(&p * &i, Matrix::identity(1));
    }

    #[test]
    fn degenerate_shapes() {
        let k = kernel_basis(&Matrix::zeros(0, 3));
        assert_eq!(k, Matrix::identity(3));
        let k = kernel_basis(&Matrix::zeros(4, 0));
        assert_eq!((k.rows(), k.cols()), (0, 0));
        let x = solve(&Matrix::zeros(0, 2), &Matrix::zeros(0, 1))
            .unwrap()
            .unwrap();
        assert_eq!(x, Matrix::zeros(2, 1));
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        (0usize..5, 0usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec((-4i64..5, 1i64..4), r * c).prop_map(move |v| {
                let entries = v
                    .into_iter()
                    .map(|(n, d)| Scalar::new(BigInt::from(n), BigInt::from(d)))
                    .collect();
                Matrix::new(r, c, entries).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix()) {
            let k = kernel_basis(&m);
            prop_assert_eq!(rank(&m) + k.cols(), m.cols());
            prop_assert!((&m * &k).is_zero());
            prop_assert_eq!(rank(&k), k.cols());
        }

        #[test]
        fn fraction_free_rank_matches_naive(m in small_matrix()) {
            prop_assert_eq!(rank(&m), naive_rank(&m));
        }

        #[test]
        fn solve_is_exact(m in small_matrix(), seed in proptest::collection::vec(-3i64..4, 5)) {
            let x0 = Matrix::column_vector(
                (0..m.cols()).map(|i| scalar(seed[i % seed.len()])).collect());
            let b = &m * &x0;
            let x = solve(&m, &b).unwrap().expect("consistent by construction");
            prop_assert_eq!(&m * &x, b);
        }

        #[test]
        fn complement_projection(m in small_matrix()) {
            let (p, i) = image_complement_change_of_basis(&m, m.rows());
            prop_assert_eq!(p.rows(), m.rows() - rank(&m));
            prop_assert!((&p * &m).is_zero());
            prop_assert_eq!(&p * &i, Matrix::identity(p.rows()));
        }

        #[test]
        fn deterministic(m in small_matrix()) {
            prop_assert_eq!(kernel_basis(&m), kernel_basis(&m.clone()));
        }
    }
}
