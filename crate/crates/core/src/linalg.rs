//! Dense square matrices over arbitrary-precision integers, tensor
//! embeddings and the linearization of set-theoretic solutions.
//!
//! Basis vectors of `V^{⊗N}` (with `dim V = n`) are indexed by base-`n`
//! digit strings, site 0 being the most significant digit. For two sites the
//! pair `(a, b)` has index `a·n + b`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::settheoretic::STSolution;
use crate::verdict::Verdict;

/// Products with at least this many rows are split across threads.
const PAR_ROWS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl ExactMatrix {
    pub fn zeros(dim: usize) -> Self {
        ExactMatrix {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = BigInt::one();
        }
        m
    }

    pub fn from_fn<T: Into<BigInt>>(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j).into());
            }
        }
        ExactMatrix { dim, entries }
    }

    pub fn from_rows<T: Clone + Into<BigInt>>(rows: &[Vec<T>]) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::Shape {
                    n: dim,
                    rows: dim,
                    cols: row.len(),
                });
            }
            entries.extend(row.iter().cloned().map(Into::into));
        }
        Ok(ExactMatrix { dim, entries })
    }

    /// The 0/1 matrix with a single 1 at `(i, image[i])` in every row `i`.
    /// `image` need not be a permutation.
    pub fn from_row_map(image: &[usize]) -> Self {
        let dim = image.len();
        let mut m = Self::zeros(dim);
        for (i, &j) in image.iter().enumerate() {
            assert!(j < dim, "row map leaves the index range");
            m.entries[i * dim + j] = BigInt::one();
        }
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: impl Into<BigInt>) {
        self.entries[i * self.dim + j] = v.into();
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|v| !v.is_zero()).count()
    }

    /// Nonzero entries as `(row, col, value)`, row-major.
    pub fn triplets(&self) -> Vec<(usize, usize, BigInt)> {
        let d = self.dim;
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (k / d, k % d, v.clone()))
            .collect()
    }

    /// If this is a permutation matrix, the column of the 1 in each row.
    pub fn as_row_permutation(&self) -> Option<Vec<usize>> {
        let d = self.dim;
        let mut image = vec![usize::MAX; d];
        let mut hit = vec![false; d];
        for (k, v) in self.entries.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let (i, j) = (k / d, k % d);
            if !v.is_one() || image[i] != usize::MAX || hit[j] {
                return None;
            }
            image[i] = j;
            hit[j] = true;
        }
        image.iter().all(|&j| j != usize::MAX).then_some(image)
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim;
        let mut m = Self::zeros(d);
        for i in 0..d {
            for j in 0..d {
                m.entries[j * d + i] = self.entries[i * d + j].clone();
            }
        }
        m
    }

    /// Inverse of a permutation matrix (its transpose).
    pub fn permutation_inverse(&self) -> Result<Self> {
        self.as_row_permutation()
            .map(|_| self.transpose())
            .ok_or_else(|| Error::precondition("matrix is not a permutation matrix"))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        ExactMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|v| v * c).collect(),
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::Dimension {
                expected: self.dim,
                found: other.dim,
            })
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let d = self.dim;
        let sparse_rows: Vec<Vec<(usize, &BigInt)>> = (0..d)
            .map(|k| {
                other
                    .row(k)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        let mut entries = vec![BigInt::zero(); d * d];
        let fill = |(i, out): (usize, &mut [BigInt])| {
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for &(j, b) in &sparse_rows[k] {
                    out[j] += a * b;
                }
            }
        };
        if d == 0 {
            return ExactMatrix { dim: 0, entries };
        }
        if d >= PAR_ROWS {
            entries.par_chunks_mut(d).enumerate().for_each(fill);
        } else {
            entries.chunks_mut(d).enumerate().for_each(fill);
        }
        ExactMatrix { dim: d, entries }
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let (p, q) = (self.dim, other.dim);
        let d = p * q;
        let mut m = Self::zeros(d);
        for (k1, a) in self.entries.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (i1, j1) = (k1 / p, k1 % p);
            for (k2, b) in other.entries.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (i2, j2) = (k2 / q, k2 % q);
                m.entries[(i1 * q + i2) * d + j1 * q + j2] = a * b;
            }
        }
        m
    }

    /// First entry where two matrices differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.dim != other.dim {
            return Some((self.dim, other.dim));
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|k| (k / self.dim, k % self.dim))
    }

    /// Pass if equal, otherwise a witness naming the first differing entry.
    pub fn compare(&self, other: &Self, what: &str) -> Verdict {
        if self.dim != other.dim {
            return Verdict::fail(format!(
                "{what}: dimensions {} and {} differ",
                self.dim, other.dim
            ));
        }
        Verdict::from_witness(self.first_difference(other).map(|(i, j)| {
            format!(
                "{what}: entry ({i}, {j}) is {} on the left, {} on the right",
                self.get(i, j),
                other.get(i, j)
            )
        }))
    }

    pub fn max_abs(&self) -> BigInt {
        self.entries.iter().map(|v| v.abs()).max().unwrap_or_default()
    }

    /// Dense CSV, one row per line.
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        for i in 0..self.dim {
            let line: Vec<String> = self.row(i).iter().map(BigInt::to_string).collect();
            s.push_str(&line.join(","));
            s.push('\n');
        }
        s
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix({})", self.dim)?;
        for i in 0..self.dim {
            let line: Vec<String> = self.row(i).iter().map(BigInt::to_string).collect();
            writeln!(f, "  [{}]", line.join(" "))?;
        }
        Ok(())
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        self.mul_unchecked(rhs)
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        ExactMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        ExactMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        ExactMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }
}

/// Matrix `e_{i,j}` of size `n`.
pub fn unit(n: usize, i: usize, j: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(n);
    m.set(i, j, 1);
    m
}

/// `n^sites`, or an error if it overflows.
pub fn tensor_dim(n: usize, sites: usize) -> Result<usize> {
    let mut d: usize = 1;
    for _ in 0..sites {
        d = d.checked_mul(n).ok_or(Error::BoundExceeded {
            what: "tensor dimension",
            value: usize::MAX,
            bound: usize::MAX,
        })?;
    }
    Ok(d)
}

fn digits(mut x: usize, n: usize, sites: usize) -> Vec<usize> {
    let mut d = vec![0; sites];
    for k in (0..sites).rev() {
        d[k] = x % n;
        x /= n;
    }
    d
}

fn undigits(d: &[usize], n: usize) -> usize {
    d.iter().fold(0, |acc, &x| acc * n + x)
}

/// Embeds an operator on `V ⊗ V` into `V^{⊗sites}`, its first leg acting on
/// site `i` and its second on site `j` (0-based, distinct, either order).
pub fn embed(m: &ExactMatrix, i: usize, j: usize, sites: usize, n: usize) -> Result<ExactMatrix> {
    if m.dim() != n * n {
        return Err(Error::Dimension {
            expected: n * n,
            found: m.dim(),
        });
    }
    if i == j || i >= sites || j >= sites {
        return Err(Error::precondition(format!(
            "sites ({i}, {j}) must be distinct and below {sites}"
        )));
    }
    let d = tensor_dim(n, sites)?;
    let local: Vec<Vec<(usize, &BigInt)>> = (0..n * n)
        .map(|r| {
            m.row(r)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .collect()
        })
        .collect();
    let mut out = ExactMatrix::zeros(d);
    for row in 0..d {
        let mut x = digits(row, n, sites);
        for &(c, v) in &local[x[i] * n + x[j]] {
            x[i] = c / n;
            x[j] = c % n;
            out.entries[row * d + undigits(&x, n)] = v.clone();
        }
    }
    Ok(out)
}

/// Embeds an operator on `V` at `site` of `V^{⊗sites}`.
pub fn embed_one(m: &ExactMatrix, site: usize, sites: usize) -> Result<ExactMatrix> {
    if site >= sites {
        return Err(Error::precondition(format!("site {site} out of range")));
    }
    let n = m.dim();
    let left = ExactMatrix::identity(tensor_dim(n, site)?);
    let right = ExactMatrix::identity(tensor_dim(n, sites - site - 1)?);
    Ok(left.kron(m).kron(&right))
}

/// The operator moving tensor leg `k` to site `perm[k]`. Conjugating an
/// operator `M` as `Π M Π⁻¹` relabels its legs the same way.
pub fn site_permutation(perm: &[usize], n: usize) -> Result<ExactMatrix> {
    let sites = perm.len();
    if !crate::table::is_permutation(perm) {
        return Err(Error::precondition("site map is not a permutation"));
    }
    let d = tensor_dim(n, sites)?;
    let mut image = vec![0; d];
    for (x, slot) in image.iter_mut().enumerate() {
        let xs = digits(x, n, sites);
        let mut ys = vec![0; sites];
        for k in 0..sites {
            ys[perm[k]] = xs[k];
        }
        *slot = undigits(&ys, n);
    }
    // Π e_x = e_{π·x}: the 1 of column x sits in row π·x
    let mut m = ExactMatrix::zeros(d);
    for (x, &y) in image.iter().enumerate() {
        m.set(y, x, 1);
    }
    Ok(m)
}

/// `Π M Π⁻¹` for the site map `perm`.
pub fn permute_sites(m: &ExactMatrix, perm: &[usize], n: usize) -> Result<ExactMatrix> {
    let p = site_permutation(perm, n)?;
    if p.dim() != m.dim() {
        return Err(Error::Dimension {
            expected: p.dim(),
            found: m.dim(),
        });
    }
    Ok(&(&p * m) * &p.transpose())
}

/// The flip `𝒫 = Σ e_{x,y} ⊗ e_{y,x}`.
pub fn permutation_operator(n: usize) -> ExactMatrix {
    let image: Vec<usize> = (0..n * n).map(|k| (k % n) * n + k / n).collect();
    ExactMatrix::from_row_map(&image)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    /// `ř = Σ e_{a,σ_a(b)} ⊗ e_{b,τ_b(a)}`
    Braid,
    /// `r = 𝒫 ř`
    Ybe,
}

pub fn linearize(s: &STSolution, form: Form) -> ExactMatrix {
    let n = s.size();
    let braid: Vec<usize> = (0..n * n)
        .map(|k| {
            let (x, y) = s.apply(k / n, k % n);
            x * n + y
        })
        .collect();
    match form {
        Form::Braid => ExactMatrix::from_row_map(&braid),
        Form::Ybe => {
            // row (a, b) of 𝒫ř is row (b, a) of ř
            let image: Vec<usize> = (0..n * n).map(|k| braid[(k % n) * n + k / n]).collect();
            ExactMatrix::from_row_map(&image)
        }
    }
}

fn check_local(m: &ExactMatrix, n: usize) -> Result<()> {
    if m.dim() != n * n {
        return Err(Error::Dimension {
            expected: n * n,
            found: m.dim(),
        });
    }
    Ok(())
}

/// `ř₁₂ ř₂₃ ř₁₂ = ř₂₃ ř₁₂ ř₂₃` on `V^{⊗3}`.
pub fn check_matrix_braid(m: &ExactMatrix, n: usize) -> Result<Verdict> {
    check_local(m, n)?;
    let id = ExactMatrix::identity(n);
    let r12 = m.kron(&id);
    let r23 = id.kron(m);
    let lhs = &(&r12 * &r23) * &r12;
    let rhs = &(&r23 * &r12) * &r23;
    Ok(lhs.compare(&rhs, "braid relation"))
}

/// `r₁₂ r₁₃ r₂₃ = r₂₃ r₁₃ r₁₂` on `V^{⊗3}`.
pub fn check_matrix_ybe(m: &ExactMatrix, n: usize) -> Result<Verdict> {
    check_local(m, n)?;
    let r12 = embed(m, 0, 1, 3, n)?;
    let r13 = embed(m, 0, 2, 3, n)?;
    let r23 = embed(m, 1, 2, 3, n)?;
    let lhs = &(&r12 * &r13) * &r23;
    let rhs = &(&r23 * &r13) * &r12;
    Ok(lhs.compare(&rhs, "Yang-Baxter equation"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Leg {
    First,
    Second,
}

/// Partial transpose on one leg of `V ⊗ V`: for the first leg
/// `M'[(i,k),(j,l)] = M[(j,k),(i,l)]`, for the second
/// `M'[(i,k),(j,l)] = M[(i,l),(j,k)]`.
pub fn partial_transpose(m: &ExactMatrix, leg: Leg, n: usize) -> Result<ExactMatrix> {
    check_local(m, n)?;
    let d = n * n;
    let mut out = ExactMatrix::zeros(d);
    for (idx, v) in m.entries.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let (row, col) = (idx / d, idx % d);
        let (i, k) = (row / n, row % n);
        let (j, l) = (col / n, col % n);
        let (r, c) = match leg {
            Leg::First => (j * n + k, i * n + l),
            Leg::Second => (i * n + l, j * n + k),
        };
        out.entries[r * d + c] = v.clone();
    }
    Ok(out)
}

/// Traces out one leg of `V ⊗ V`.
pub fn partial_trace(m: &ExactMatrix, leg: Leg, n: usize) -> Result<ExactMatrix> {
    check_local(m, n)?;
    let site = match leg {
        Leg::First => 0,
        Leg::Second => 1,
    };
    partial_trace_site(m, site, 2, n)
}

/// Traces out `site` of `V^{⊗sites}`.
pub fn partial_trace_site(m: &ExactMatrix, site: usize, sites: usize, n: usize) -> Result<ExactMatrix> {
    let d = tensor_dim(n, sites)?;
    if m.dim() != d {
        return Err(Error::Dimension {
            expected: d,
            found: m.dim(),
        });
    }
    if site >= sites {
        return Err(Error::precondition(format!("site {site} out of range")));
    }
    let reduced = d / n;
    let mut out = ExactMatrix::zeros(reduced);
    let stride = tensor_dim(n, sites - site - 1)?;
    // index with digit s inserted at `site`
    let lift = |x: usize, s: usize| (x / stride) * stride * n + s * stride + x % stride;
    for x in 0..reduced {
        for y in 0..reduced {
            let mut acc = BigInt::zero();
            for s in 0..n {
                acc += m.get(lift(x, s), lift(y, s));
            }
            out.entries[x * reduced + y] = acc;
        }
    }
    Ok(out)
}
