//! Drinfel'd twists in the fundamental representation.
//!
//! The decorated generators act on `V = span{e_0, .., e_{n-1}}` by
//! `h_a ↦ e_{a,a}`, `w_a ↦ W_a = Σ_b e_{σ_a(b),b}` and `q_a ↦ Q_a = Σ_x e_{x,a▷x}`.
//! The twist `Σ_a h_a ⊗ w_a⁻¹` is then the permutation matrix
//! `F = Σ_{a,b} e_{a,a} ⊗ e_{b,σ_a(b)}`. All identities below are checked on
//! these matrices only; a pass is evidence, not a proof, for the abstract
//! algebra.

use crate::error::{Error, Result};
use crate::linalg::{
    embed, linearize, permutation_operator, permute_sites, unit, check_matrix_braid,
    ExactMatrix, Form,
};
use crate::magma::Magma;
use crate::settheoretic::{self, STSolution};
use crate::table::Table;
use crate::verdict::{Check, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalTwist {
    sigma: Table,
    matrix: ExactMatrix,
}

impl FundamentalTwist {
    /// Needs every `σ_a` to be a bijection.
    pub fn new(sigma: Table) -> Result<Self> {
        if !sigma.rows_bijective() {
            return Err(Error::precondition("twist needs every σ_a to be bijective"));
        }
        let n = sigma.size();
        let image: Vec<usize> = (0..n * n)
            .map(|k| {
                let (a, b) = (k / n, k % n);
                a * n + sigma.get(a, b)
            })
            .collect();
        Ok(FundamentalTwist {
            matrix: ExactMatrix::from_row_map(&image),
            sigma,
        })
    }

    pub fn from_solution(s: &STSolution) -> Result<Self> {
        Self::new(s.sigma_table().clone())
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(Table::from_fn(n, |_, b| b)?)
    }

    pub fn size(&self) -> usize {
        self.sigma.size()
    }

    pub fn sigma(&self) -> &Table {
        &self.sigma
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn inverse(&self) -> ExactMatrix {
        self.matrix.transpose()
    }

    /// `F^{op} = 𝒫 F 𝒫`.
    pub fn opposite(&self) -> ExactMatrix {
        let p = permutation_operator(self.size());
        &(&p * &self.matrix) * &p
    }

    /// `W_a = Σ_b e_{σ_a(b),b}`.
    pub fn w(&self, a: usize) -> ExactMatrix {
        let n = self.size();
        let mut m = ExactMatrix::zeros(n);
        for b in 0..n {
            m.set(self.sigma.get(a, b), b, 1);
        }
        m
    }

    /// `W_a⁻¹ = Σ_b e_{b,σ_a(b)}`.
    pub fn w_inv(&self, a: usize) -> ExactMatrix {
        self.w(a).transpose()
    }
}

/// Conditions making `σ` an admissible twist for the rack with the given
/// `τ` (stored as `tau[b][a] = τ_b(a)`):
/// (a) `σ_a(σ_b(c)) = σ_{σ_a(b)}(σ_{τ_b(a)}(c))`,
/// (b) `σ_{σ_a(b)}(τ_b(a)) = σ_a(b) ▷ a`.
pub fn check_admissible(f: &FundamentalTwist, rack: &Magma, tau: &Table) -> Result<Verdict> {
    let n = f.size();
    if rack.size() != n || tau.size() != n {
        return Err(Error::Dimension {
            expected: n,
            found: if rack.size() != n { rack.size() } else { tau.size() },
        });
    }
    if !rack.is_rack() {
        return Err(Error::precondition("the supplied table is not a rack"));
    }
    let s = |a, b| f.sigma.get(a, b);
    let t = |b, a| tau.get(b, a);
    for a in 0..n {
        for b in 0..n {
            let (sab, tba) = (s(a, b), t(b, a));
            if s(sab, tba) != rack.op(sab, a) {
                return Ok(Verdict::fail(format!(
                    "condition (b) fails at (a, b) = ({a}, {b})"
                )));
            }
            for c in 0..n {
                if s(a, s(b, c)) != s(sab, s(tba, c)) {
                    return Ok(Verdict::fail(format!(
                        "condition (a) fails at (a, b, c) = ({a}, {b}, {c})"
                    )));
                }
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Twists a braid solution: `𝒫 · F^{op} · (𝒫 · base) · F⁻¹`, i.e. the
/// Yang-Baxter form `r^F = F^{op} r F⁻¹` brought back to braid form. For
/// `base = 𝒫` this is `F 𝒫 F⁻¹`. Both input and output are verified.
pub fn twist_solution(f: &FundamentalTwist, base: &ExactMatrix, n: usize) -> Result<ExactMatrix> {
    if f.size() != n {
        return Err(Error::Dimension {
            expected: n,
            found: f.size(),
        });
    }
    if let Verdict::Fail { witness } = check_matrix_braid(base, n)? {
        return Err(Error::precondition(format!("base is not a braid solution: {witness}")));
    }
    let p = permutation_operator(n);
    let r = &p * base;
    let twisted = &p * &(&(&f.opposite() * &r) * &f.inverse());
    match check_matrix_braid(&twisted, n)? {
        Verdict::Pass => Ok(twisted),
        Verdict::Fail { witness } => Err(Error::Verification(format!(
            "twisted matrix is not a braid solution ({witness}); the twist is not admissible for this base"
        ))),
    }
}

/// `u = Σ_x e_{x,x−c}`, the twist `F = 1 ⊗ u⁻¹`, and the twisted flip
/// `(u ⊗ 1) 𝒫 (u⁻¹ ⊗ 1)`, which is verified against the Lyubashenko
/// solution and against the other one-sided form `(1 ⊗ u⁻¹) 𝒫 (1 ⊗ u)`.
pub fn lyubashenko_from_permutation(n: usize, c: usize) -> Result<(FundamentalTwist, ExactMatrix)> {
    let s = settheoretic::lyubashenko(n, c)?;
    let u = ExactMatrix::from_row_map(&(0..n).map(|x| (x + n - c) % n).collect::<Vec<_>>());
    let u_inv = u.transpose();
    let id = ExactMatrix::identity(n);
    let p = permutation_operator(n);
    let left = &(&u.kron(&id) * &p) * &u_inv.kron(&id);
    let right = &(&id.kron(&u_inv) * &p) * &id.kron(&u);
    let expected = linearize(&s, Form::Braid);
    if let Verdict::Fail { witness } = left.compare(&expected, "(u⊗1)𝒫(u⁻¹⊗1) vs ř") {
        return Err(Error::Verification(witness));
    }
    if let Verdict::Fail { witness } = left.compare(&right, "one-sided twists") {
        return Err(Error::Verification(witness));
    }
    let f = FundamentalTwist::from_solution(&s)?;
    debug_assert_eq!(*f.matrix(), id.kron(&u_inv));
    Ok((f, left))
}

/// Images of the twist elements on `V^{⊗2}` and `V^{⊗3}`.
#[derive(Clone, Debug)]
pub struct UniversalTwists {
    pub n: usize,
    /// `Σ e_{a,a} ⊗ W_a⁻¹`
    pub f: ExactMatrix,
    /// `Σ e_{a,a} ⊗ W_a⁻¹ ⊗ W_a⁻¹`
    pub f_1_23: ExactMatrix,
    /// `Σ_{a,b} e_{a,a} ⊗ e_{σ_a(b),σ_a(b)} ⊗ W_b⁻¹ W_a⁻¹`
    pub f_12_3: ExactMatrix,
    /// `F₁₂ F*₁₂,₃`
    pub f_123: ExactMatrix,
    /// `Σ e_{a,a} ⊗ Q_a` for the derived rack
    pub r: ExactMatrix,
    pub rack: Magma,
}

pub fn build_universal_rep_twists(s: &STSolution) -> Result<UniversalTwists> {
    let twist = FundamentalTwist::from_solution(s)?;
    let rack = s.derived_rack()?;
    if !rack.is_rack() {
        return Err(Error::precondition("derived table is not a rack"));
    }
    let n = s.size();
    let d3 = n * n * n;
    let w_inv: Vec<ExactMatrix> = (0..n).map(|a| twist.w_inv(a)).collect();
    let mut f_1_23 = ExactMatrix::zeros(d3);
    let mut f_12_3 = ExactMatrix::zeros(d3);
    for a in 0..n {
        let h = unit(n, a, a);
        f_1_23 = &f_1_23 + &h.kron(&w_inv[a]).kron(&w_inv[a]);
        for b in 0..n {
            let sab = s.sigma(a, b);
            let term = h.kron(&unit(n, sab, sab)).kron(&(&w_inv[b] * &w_inv[a]));
            f_12_3 = &f_12_3 + &term;
        }
    }
    let f = twist.matrix().clone();
    let f12 = f.kron(&ExactMatrix::identity(n));
    let f_123 = &f12 * &f_12_3;
    let r = linearize(&settheoretic::from_shelf(&rack, settheoretic::ShelfVariant::Left)?, Form::Ybe);
    Ok(UniversalTwists {
        n,
        f,
        f_1_23,
        f_12_3,
        f_123,
        r,
        rack,
    })
}

impl UniversalTwists {
    /// `R^F = F₂₁ R F⁻¹` on `V ⊗ V`.
    pub fn twisted_r(&self) -> ExactMatrix {
        let p = permutation_operator(self.n);
        let f21 = &(&p * &self.f) * &p;
        &(&f21 * &self.r) * &self.f.transpose()
    }

    /// Every identity, each as a named check. `s` is the solution the
    /// twists were built from.
    pub fn checks(&self, s: &STSolution) -> Result<Vec<Check>> {
        let n = self.n;
        let id = ExactMatrix::identity(n);
        let f12 = self.f.kron(&id);
        let f23 = id.kron(&self.f);
        let mut out = Vec::new();

        let left = &f12 * &self.f_12_3;
        let right = &f23 * &self.f_1_23;
        out.push(Check::new(
            "cocycle F12 F*12,3 = F23 F1,23",
            left.compare(&right, "cocycle"),
        ));

        let rf = self.twisted_r();
        let rf_on = |i, j| embed(&rf, i, j, 3, n);
        let r_on = |i, j| embed(&self.r, i, j, 3, n);

        // F₁₃₂ R₂₃ = R^F₂₃ F₁₂₃
        let f132 = permute_sites(&self.f_123, &[0, 2, 1], n)?;
        let lhs = &f132 * &r_on(1, 2)?;
        let rhs = &rf_on(1, 2)? * &self.f_123;
        out.push(Check::new(
            "intertwining F132 R23 = R^F23 F123",
            lhs.compare(&rhs, "intertwining on sites 2,3"),
        ));

        // F₂₁₃ R₁₂ = R^F₁₂ F₁₂₃
        let f213 = permute_sites(&self.f_123, &[1, 0, 2], n)?;
        let lhs = &f213 * &r_on(0, 1)?;
        let rhs = &rf_on(0, 1)? * &self.f_123;
        out.push(Check::new(
            "intertwining F213 R12 = R^F12 F123",
            lhs.compare(&rhs, "intertwining on sites 1,2"),
        ));

        out.push(Check::new(
            "R^F equals the linearized solution",
            rf.compare(&linearize(s, Form::Ybe), "R^F vs r"),
        ));

        if s.is_involutive() {
            let p = permutation_operator(n);
            let rf21 = &(&p * &rf) * &p;
            out.push(Check::new(
                "reversibility R^F12 R^F21 = I",
                (&rf * &rf21).compare(&ExactMatrix::identity(n * n), "reversibility"),
            ));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braces::{brace_u2m, FiniteGroup, SkewBrace, validate_skew_brace};
    use crate::magma::{dihedral_quandle, trivial};
    use crate::settheoretic::{
        affine_twist_solution, core_twist_solution, from_shelf, gv_solution, lyubashenko, ShelfVariant,
    };

    fn rack_matrix(s: &STSolution) -> ExactMatrix {
        let rack = s.derived_rack().unwrap();
        linearize(&from_shelf(&rack, ShelfVariant::Left).unwrap(), Form::Braid)
    }

    /// `a∘b = a + b + 3ab` on Z/9, whose σ_a have order 3.
    fn z9() -> SkewBrace {
        let add = FiniteGroup::cyclic(9).unwrap();
        let mul = FiniteGroup::from_table(
            Table::from_fn(9, |a, b| (a + b + 3 * a * b) % 9).unwrap(),
        )
        .unwrap();
        validate_skew_brace(add, mul).unwrap()
    }

    #[test]
    fn identity_twist_is_admissible_and_neutral() {
        let f = FundamentalTwist::identity(3).unwrap();
        let tau = Table::from_fn(3, |_, a| a).unwrap();
        assert!(check_admissible(&f, &trivial(3).unwrap(), &tau).unwrap().is_pass());
        let base = linearize(&from_shelf(&dihedral_quandle(3).unwrap(), ShelfVariant::Left).unwrap(), Form::Braid);
        assert_eq!(twist_solution(&f, &base, 3).unwrap(), base);
    }

    #[test]
    fn admissibility_of_brace_solutions() {
        let u3 = brace_u2m(3).unwrap();
        for s in [gv_solution(&u3), core_twist_solution(&u3).unwrap(), affine_twist_solution(&u3, 1).unwrap()] {
            let f = FundamentalTwist::from_solution(&s).unwrap();
            let rack = s.derived_rack().unwrap();
            assert!(check_admissible(&f, &rack, s.tau_table()).unwrap().is_pass());
        }
    }

    #[test]
    fn twisting_the_flip_reconstructs_involutive_solutions() {
        for s in [gv_solution(&brace_u2m(3).unwrap()), gv_solution(&z9())] {
            let f = FundamentalTwist::from_solution(&s).unwrap();
            let n = s.size();
            let got = twist_solution(&f, &permutation_operator(n), n).unwrap();
            assert_eq!(got, linearize(&s, Form::Braid));
        }
    }

    #[test]
    fn twisting_the_rack_solution_reconstructs_general_solutions() {
        let u3 = brace_u2m(3).unwrap();
        for s in [core_twist_solution(&u3).unwrap(), affine_twist_solution(&u3, 3).unwrap(), gv_solution(&z9())] {
            let f = FundamentalTwist::from_solution(&s).unwrap();
            let got = twist_solution(&f, &rack_matrix(&s), s.size()).unwrap();
            assert_eq!(got, linearize(&s, Form::Braid));
        }
    }

    #[test]
    fn inadmissible_twist_is_rejected() {
        // σ_0 = id, σ_1 = swap: condition (a) fails for the flip
        let sigma = Table::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        let f = FundamentalTwist::new(sigma).unwrap();
        let tau = Table::from_fn(2, |_, a| a).unwrap();
        assert!(!check_admissible(&f, &trivial(2).unwrap(), &tau).unwrap().is_pass());
        assert!(matches!(
            twist_solution(&f, &permutation_operator(2), 2),
            Err(Error::Verification(_))
        ));
    }

    #[test]
    fn non_bijective_sigma_is_refused() {
        let sigma = Table::from_rows(&[vec![0, 0], vec![0, 1]]).unwrap();
        assert!(FundamentalTwist::new(sigma).is_err());
    }

    #[test]
    fn lyubashenko_reconstruction() {
        for n in 2..=5 {
            for c in 1..n {
                let (f, m) = lyubashenko_from_permutation(n, c).unwrap();
                assert_eq!(m, linearize(&lyubashenko(n, c).unwrap(), Form::Braid));
                assert_eq!(twist_solution(&f, &permutation_operator(n), n).unwrap(), m);
            }
        }
        assert!(lyubashenko_from_permutation(3, 3).is_err());
    }

    #[test]
    fn universal_identities() {
        let u3 = brace_u2m(3).unwrap();
        let cases = [
            gv_solution(&u3),
            affine_twist_solution(&u3, 1).unwrap(),
            core_twist_solution(&u3).unwrap(),
            from_shelf(&dihedral_quandle(3).unwrap(), ShelfVariant::Left).unwrap(),
            lyubashenko(3, 1).unwrap(),
        ];
        for s in cases {
            let u = build_universal_rep_twists(&s).unwrap();
            let checks = u.checks(&s).unwrap();
            assert_eq!(checks.len(), if s.is_involutive() { 5 } else { 4 });
            for c in checks {
                assert!(c.verdict.is_pass(), "{}: {}", c.name, c.verdict);
            }
        }
    }

    #[test]
    fn identity_twist_leaves_rack_matrix() {
        let s = from_shelf(&dihedral_quandle(3).unwrap(), ShelfVariant::Left).unwrap();
        let u = build_universal_rep_twists(&s).unwrap();
        assert!(u.f.is_identity());
        assert_eq!(u.twisted_r(), u.r);
    }
}
