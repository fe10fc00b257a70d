//! Baxterization `Ř(λ) = λ ř + 1` of involutive solutions and the exact
//! polynomial identities it satisfies.
//!
//! Every check takes the braid-form pencil `Ř(λ) = λA + B` and derives the
//! Yang-Baxter form `R(λ) = 𝒫 Ř(λ)` itself. Spectral parameters are the two
//! formal variables `λ` (`λ₁`) and `μ` (`λ₂`); differences are substituted
//! before expanding, so every comparison is coefficient by coefficient.

use crate::error::{Error, Result};
use crate::linalg::{embed, linearize, partial_transpose, permutation_operator, ExactMatrix, Form, Leg};
use crate::poly::PolyMatrix;
use crate::settheoretic::STSolution;
use crate::verdict::{Check, Verdict};

/// Linear form `c0 + c1 λ + c2 μ`.
pub type LinearForm = [i64; 3];

pub const LAMBDA: LinearForm = [0, 1, 0];
pub const MU: LinearForm = [0, 0, 1];
pub const DIFF: LinearForm = [0, 1, -1];

/// `Ř(λ) = λ·slope + constant` acting on `V ⊗ V`, `dim V = n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pencil {
    n: usize,
    slope: ExactMatrix,
    constant: ExactMatrix,
}

impl Pencil {
    pub fn new(slope: ExactMatrix, constant: ExactMatrix, n: usize) -> Result<Self> {
        for m in [&slope, &constant] {
            if m.dim() != n * n {
                return Err(Error::Dimension {
                    expected: n * n,
                    found: m.dim(),
                });
            }
        }
        Ok(Pencil { n, slope, constant })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn slope(&self) -> &ExactMatrix {
        &self.slope
    }

    pub fn constant(&self) -> &ExactMatrix {
        &self.constant
    }

    /// `Ř(ℓ)` as a polynomial matrix.
    pub fn braid_at(&self, form: LinearForm) -> PolyMatrix {
        PolyMatrix::linear(&self.slope, &self.constant, form)
    }

    /// `R(ℓ) = 𝒫 Ř(ℓ)`.
    pub fn ybe_at(&self, form: LinearForm) -> PolyMatrix {
        let p = permutation_operator(self.n);
        PolyMatrix::linear(&(&p * &self.slope), &(&p * &self.constant), form)
    }

    /// The same pencil with its legs placed on sites `(i, j)` of `sites`.
    fn embedded(&self, poly: &PolyMatrix, i: usize, j: usize, sites: usize) -> Result<PolyMatrix> {
        poly.map(|m| embed(m, i, j, sites, self.n))
    }
}

/// The braid-form pencil `λ ř + 1`; refuses non-involutive input.
pub fn baxter_pencil(s: &STSolution) -> Result<Pencil> {
    if !s.is_involutive() {
        return Err(Error::precondition(
            "Baxterization λř + 1 is only defined here for involutive solutions",
        ));
    }
    let n = s.size();
    Pencil::new(linearize(s, Form::Braid), ExactMatrix::identity(n * n), n)
}

/// `Ř(λ) = λř + I` (braid form) or `R(λ) = λr + 𝒫` (Yang-Baxter form).
pub fn baxterize(s: &STSolution, form: Form) -> Result<PolyMatrix> {
    let p = baxter_pencil(s)?;
    Ok(match form {
        Form::Braid => p.braid_at(LAMBDA),
        Form::Ybe => p.ybe_at(LAMBDA),
    })
}

/// `Ř₁₂(λ₁−λ₂) Ř₂₃(λ₁) Ř₁₂(λ₂) = Ř₂₃(λ₂) Ř₁₂(λ₁) Ř₂₃(λ₁−λ₂)`.
pub fn check_parametric_braid(p: &Pencil) -> Result<Verdict> {
    let r12 = |f| p.embedded(&p.braid_at(f), 0, 1, 3);
    let r23 = |f| p.embedded(&p.braid_at(f), 1, 2, 3);
    let lhs = &(&r12(DIFF)? * &r23(LAMBDA)?) * &r12(MU)?;
    let rhs = &(&r23(MU)? * &r12(LAMBDA)?) * &r23(DIFF)?;
    for side in [&lhs, &rhs] {
        assert!(side.degree().unwrap_or(0) <= 3, "expansion degree exceeds 3");
    }
    Ok(lhs.compare(&rhs, "parametric braid relation"))
}

/// `R₁₂(λ) R₂₁(−λ) = (1 − λ²) I`.
pub fn check_unitarity(p: &Pencil) -> Result<Verdict> {
    let r12 = p.ybe_at(LAMBDA);
    let r21 = p.embedded(&p.ybe_at([0, -1, 0]), 1, 0, 2)?;
    let expected = PolyMatrix::scalar(r12.dim(), &[((0, 0), 1), ((2, 0), -1)]);
    Ok((&r12 * &r21).compare(&expected, "unitarity"))
}

/// `R₁₂^{t₁}(λ) R₁₂^{t₂}(−λ − n) = λ(−λ − n) I`.
pub fn check_crossing_unitarity(p: &Pencil) -> Result<Verdict> {
    let n = p.size();
    let shift = -(n as i64);
    let t1 = p.ybe_at(LAMBDA).map(|m| partial_transpose(m, Leg::First, n))?;
    let t2 = p.ybe_at([shift, -1, 0]).map(|m| partial_transpose(m, Leg::Second, n))?;
    let expected = PolyMatrix::scalar(n * n, &[((1, 0), shift), ((2, 0), -1)]);
    Ok((&t1 * &t2).compare(&expected, "crossing-unitarity"))
}

/// `R₁₂^{t₁t₂}(λ) = R₂₁(λ)`.
pub fn check_transpose_property(p: &Pencil) -> Result<Verdict> {
    let r = p.ybe_at(LAMBDA);
    let full = r.map(|m| Ok(m.transpose()))?;
    let r21 = p.embedded(&r, 1, 0, 2)?;
    Ok(full.compare(&r21, "transpose property"))
}

/// `Ř₁₂(λ₁−λ₂) L₁(λ₁) L₂(λ₂) = L₁(λ₂) L₂(λ₁) Ř₁₂(λ₁−λ₂)` with the
/// evaluation `L_i(λ) = R_{i3}(λ)` on a third, quantum, site.
pub fn check_rtt_fundamental(p: &Pencil) -> Result<Verdict> {
    let rb = p.embedded(&p.braid_at(DIFF), 0, 1, 3)?;
    let l1 = |f| p.embedded(&p.ybe_at(f), 0, 2, 3);
    let l2 = |f| p.embedded(&p.ybe_at(f), 1, 2, 3);
    let lhs = &(&rb * &l1(LAMBDA)?) * &l2(MU)?;
    let rhs = &(&l1(MU)? * &l2(LAMBDA)?) * &rb;
    Ok(lhs.compare(&rhs, "RTT relation"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    Braid,
    Unitarity,
    Crossing,
    Transpose,
    Rtt,
}

impl Identity {
    pub const ALL: [Identity; 5] = [
        Identity::Braid,
        Identity::Unitarity,
        Identity::Crossing,
        Identity::Transpose,
        Identity::Rtt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Braid => "parametric braid relation",
            Identity::Unitarity => "unitarity",
            Identity::Crossing => "crossing-unitarity",
            Identity::Transpose => "transpose property",
            Identity::Rtt => "RTT relation",
        }
    }

    pub fn check(self, p: &Pencil) -> Result<Verdict> {
        match self {
            Identity::Braid => check_parametric_braid(p),
            Identity::Unitarity => check_unitarity(p),
            Identity::Crossing => check_crossing_unitarity(p),
            Identity::Transpose => check_transpose_property(p),
            Identity::Rtt => check_rtt_fundamental(p),
        }
    }
}

pub fn verify(p: &Pencil, which: &[Identity]) -> Result<Vec<Check>> {
    which
        .iter()
        .map(|id| id.check(p).map(|v| Check::new(id.name(), v)))
        .collect()
}

/// `R(0)`, which equals `𝒫` for every Baxterized solution.
pub fn at_zero(p: &Pencil) -> ExactMatrix {
    p.ybe_at(LAMBDA).eval(0, 0)
}
