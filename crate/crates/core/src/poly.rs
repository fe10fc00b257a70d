//! Matrices whose entries are integer polynomials in two formal variables
//! `λ` and `μ`, stored as one exact coefficient matrix per monomial.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::verdict::Verdict;

/// Exponents `(i, j)` of `λ^i μ^j`.
pub type Monomial = (u32, u32);

pub fn monomial_name((i, j): Monomial) -> String {
    let part = |v: &str, e: u32| match e {
        0 => String::new(),
        1 => v.to_string(),
        e => format!("{v}^{e}"),
    };
    let s = [part("λ", i), part("μ", j)]
        .into_iter()
        .filter(|p| !p.is_empty())
        .collect::<Vec<_>>()
        .join(" ");
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    coeffs: BTreeMap<Monomial, ExactMatrix>,
}

impl PolyMatrix {
    pub fn zero(dim: usize) -> Self {
        PolyMatrix {
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(m: ExactMatrix) -> Self {
        Self::monomial(m, (0, 0))
    }

    pub fn monomial(m: ExactMatrix, exp: Monomial) -> Self {
        let mut p = Self::zero(m.dim());
        p.add_term(exp, m);
        p
    }

    pub fn identity(dim: usize) -> Self {
        Self::constant(ExactMatrix::identity(dim))
    }

    /// `c0·A + B + c1·A λ + c2·A μ`, i.e. `ℓ·A + B` at the linear form
    /// `ℓ = c0 + c1 λ + c2 μ`.
    pub fn linear(a: &ExactMatrix, b: &ExactMatrix, form: [i64; 3]) -> Self {
        assert_eq!(a.dim(), b.dim(), "matrix dimension mismatch");
        let mut p = Self::constant(b.clone());
        for (c, exp) in form.into_iter().zip([(0, 0), (1, 0), (0, 1)]) {
            if c != 0 {
                p.add_term(exp, a.scale(&BigInt::from(c)));
            }
        }
        p
    }

    fn add_term(&mut self, exp: Monomial, m: ExactMatrix) {
        assert_eq!(m.dim(), self.dim, "matrix dimension mismatch");
        let merged = match self.coeffs.remove(&exp) {
            Some(old) => &old + &m,
            None => m,
        };
        if !merged.is_zero() {
            self.coeffs.insert(exp, merged);
        }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coefficient(&self, exp: Monomial) -> ExactMatrix {
        self.coeffs
            .get(&exp)
            .cloned()
            .unwrap_or_else(|| ExactMatrix::zeros(self.dim))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactMatrix)> {
        self.coeffs.iter()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|(i, j)| i + j).max()
    }

    /// Degree in `λ` alone.
    pub fn degree_lambda(&self) -> Option<u32> {
        self.coeffs.keys().map(|&(i, _)| i).max()
    }

    /// Applies a linear map to every coefficient.
    pub fn map(&self, f: impl Fn(&ExactMatrix) -> Result<ExactMatrix> + Sync) -> Result<Self> {
        let mapped: Vec<(Monomial, ExactMatrix)> = self
            .coeffs
            .par_iter()
            .map(|(e, m)| f(m).map(|m| (*e, m)))
            .collect::<Result<_>>()?;
        let dim = mapped.first().map_or(self.dim, |(_, m)| m.dim());
        let mut out = Self::zero(dim);
        for (e, m) in mapped {
            out.add_term(e, m);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.dim);
        for (e, m) in &self.coeffs {
            out.add_term(*e, m.scale(c));
        }
        out
    }

    /// Multiplies by the scalar polynomial `Σ c_e · monomial_e`.
    pub fn scale_poly(&self, scalar: &[(Monomial, i64)]) -> Self {
        let mut out = Self::zero(self.dim);
        for (&(i, j), m) in &self.coeffs {
            for &((k, l), c) in scalar {
                out.add_term((i + k, j + l), m.scale(&BigInt::from(c)));
            }
        }
        out
    }

    /// Scalar polynomial times the identity.
    pub fn scalar(dim: usize, scalar: &[(Monomial, i64)]) -> Self {
        Self::identity(dim).scale_poly(scalar)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                found: other.dim,
            });
        }
        type Term<'a> = (Monomial, &'a ExactMatrix);
        let pairs: Vec<(Term, Term)> = self
            .coeffs
            .iter()
            .flat_map(|(e1, a)| other.coeffs.iter().map(move |(e2, b)| ((*e1, a), (*e2, b))))
            .collect();
        let products: Vec<(Monomial, ExactMatrix)> = pairs
            .into_par_iter()
            .map(|((e1, a), (e2, b))| ((e1.0 + e2.0, e1.1 + e2.1), a * b))
            .collect();
        let mut out = Self::zero(self.dim);
        for (e, m) in products {
            out.add_term(e, m);
        }
        Ok(out)
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Evaluates at integer values of `λ` and `μ`.
    pub fn eval(&self, lambda: i64, mu: i64) -> ExactMatrix {
        let mut acc = ExactMatrix::zeros(self.dim);
        for (&(i, j), m) in &self.coeffs {
            let c = BigInt::from(lambda).pow(i) * BigInt::from(mu).pow(j);
            acc = &acc + &m.scale(&c);
        }
        acc
    }

    /// First monomial and entry at which two polynomial matrices differ.
    pub fn first_difference(&self, other: &Self) -> Option<(Monomial, usize, usize)> {
        let keys: std::collections::BTreeSet<&Monomial> =
            self.coeffs.keys().chain(other.coeffs.keys()).collect();
        keys.into_iter().find_map(|e| {
            self.coefficient(*e)
                .first_difference(&other.coefficient(*e))
                .map(|(i, j)| (*e, i, j))
        })
    }

    /// Pass if equal coefficient by coefficient, else the first differing
    /// monomial and entry.
    pub fn compare(&self, other: &Self, what: &str) -> Verdict {
        if self.dim != other.dim {
            return Verdict::fail(format!(
                "{what}: dimensions {} and {} differ",
                self.dim, other.dim
            ));
        }
        Verdict::from_witness(self.first_difference(other).map(|(e, i, j)| {
            format!(
                "{what}: coefficient of {} differs at entry ({i}, {j}): {} vs {}",
                monomial_name(e),
                self.coefficient(e).get(i, j),
                other.coefficient(e).get(i, j)
            )
        }))
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix({})", self.dim)?;
        for (e, m) in &self.coeffs {
            write!(f, "[{}] {:?}", monomial_name(*e), m)?;
        }
        Ok(())
    }
}

impl Mul for &PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.try_mul(rhs).expect("matrix dimension mismatch")
    }
}

impl Add for &PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        let mut out = self.clone();
        for (e, m) in &rhs.coeffs {
            out.add_term(*e, m.clone());
        }
        out
    }
}

impl Neg for &PolyMatrix {
    type Output = PolyMatrix;
    fn neg(self) -> PolyMatrix {
        PolyMatrix {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|(e, m)| (*e, -m)).collect(),
        }
    }
}

impl Sub for &PolyMatrix {
    type Output = PolyMatrix;
    fn sub(self, rhs: &PolyMatrix) -> PolyMatrix {
        self + &(-rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[[i64; 2]; 2]) -> ExactMatrix {
        ExactMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn zero_terms_are_dropped() {
        let a = m(&[[1, 2], [3, 4]]);
        let p = PolyMatrix::monomial(a.clone(), (1, 0));
        let q = &p - &p;
        assert!(q.is_zero());
        assert_eq!(q.degree(), None);
        assert_eq!(p.degree(), Some(1));
    }

    #[test]
    fn linear_forms_and_products() {
        let a = m(&[[0, 1], [1, 0]]);
        let i = ExactMatrix::identity(2);
        // (λ a + 1)(−λ a + 1) = 1 − λ² (since a² = 1)
        let p = PolyMatrix::linear(&a, &i, [0, 1, 0]);
        let q = PolyMatrix::linear(&a, &i, [0, -1, 0]);
        let prod = &p * &q;
        let expected = PolyMatrix::scalar(2, &[((0, 0), 1), ((2, 0), -1)]);
        assert_eq!(prod, expected);
        assert!(prod.compare(&expected, "unitarity").is_pass());
    }

    #[test]
    fn evaluation_matches_expansion() {
        let a = m(&[[1, 2], [0, 1]]);
        let b = m(&[[3, 0], [1, 1]]);
        let p = PolyMatrix::linear(&a, &b, [2, 1, -1]);
        let sq = &p * &p;
        let at = p.eval(3, 5);
        assert_eq!(sq.eval(3, 5), &at * &at);
        assert_eq!(sq.degree(), Some(2));
    }

    #[test]
    fn difference_reports_monomial() {
        let a = m(&[[1, 0], [0, 1]]);
        let p = PolyMatrix::monomial(a.clone(), (1, 2));
        let v = p.compare(&PolyMatrix::zero(2), "test");
        assert!(v.witness().unwrap().contains("λ μ^2"));
    }
}
