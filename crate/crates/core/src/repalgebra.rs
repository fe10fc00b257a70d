//! Rack, quandle and decorated rack algebras in their fundamental
//! representation: `q_a ↦ Q_a = Σ_x e_{x,a▷x}`, `h_a ↦ e_{a,a}`,
//! `w_a ↦ W_a = Σ_b e_{σ_a(b),b}`.
//!
//! Every check is a finite matrix identity. A failure is a genuine
//! counterexample; a pass only shows the identity in this representation.

use crate::braces::FiniteGroup;
use crate::error::{Error, Result};
use crate::linalg::{embed, embed_one, linearize, unit, ExactMatrix, Form};
use crate::magma::Magma;
use crate::settheoretic::{from_shelf, STSolution, ShelfVariant};
use crate::table::Table;
use crate::twist::FundamentalTwist;
use crate::verdict::{Check, Verdict};

#[derive(Clone, Debug)]
pub struct AlgebraRep {
    rack: Magma,
    q: Vec<ExactMatrix>,
    h: Vec<ExactMatrix>,
    w: Option<Vec<ExactMatrix>>,
    group_dot: Option<FiniteGroup>,
}

impl AlgebraRep {
    pub fn new(rack: Magma) -> Result<Self> {
        if !rack.is_rack() {
            return Err(Error::precondition("the table is not a rack"));
        }
        let n = rack.size();
        let q = (0..n)
            .map(|a| ExactMatrix::from_row_map(rack.table().row(a)))
            .collect();
        let h = (0..n).map(|a| unit(n, a, a)).collect();
        Ok(AlgebraRep {
            rack,
            q,
            h,
            w: None,
            group_dot: None,
        })
    }

    /// Adds the `w_a` images built from the σ table of `s`.
    pub fn decorated(mut self, s: &STSolution) -> Result<Self> {
        if s.size() != self.size() {
            return Err(Error::Dimension {
                expected: self.size(),
                found: s.size(),
            });
        }
        let f = FundamentalTwist::from_solution(s)?;
        self.w = Some((0..self.size()).map(|a| f.w(a)).collect());
        Ok(self)
    }

    /// Supplies the group `(X, •)` used by the coproduct of `h_a`.
    pub fn with_group_dot(mut self, g: FiniteGroup) -> Result<Self> {
        if g.order() != self.size() {
            return Err(Error::Dimension {
                expected: self.size(),
                found: g.order(),
            });
        }
        self.group_dot = Some(g);
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.rack.size()
    }

    pub fn rack(&self) -> &Magma {
        &self.rack
    }

    pub fn q(&self, a: usize) -> &ExactMatrix {
        &self.q[a]
    }

    pub fn h(&self, a: usize) -> &ExactMatrix {
        &self.h[a]
    }

    pub fn w(&self, a: usize) -> Option<&ExactMatrix> {
        self.w.as_ref().map(|w| &w[a])
    }

    fn q_inv(&self, a: usize) -> ExactMatrix {
        self.q[a].transpose()
    }

    /// `q_a q_b = q_b q_{b▷a}`, `h_a h_b = δ_{ab} h_a`, `q_b h_{b▷a} = h_a q_b`,
    /// `q_a` invertible and `Σ h_a = 1`.
    pub fn check_rack_algebra_relations(&self) -> Verdict {
        let n = self.size();
        let zero = ExactMatrix::zeros(n);
        let sum_h = self.h.iter().fold(zero.clone(), |acc, h| &acc + h);
        if !sum_h.is_identity() {
            return Verdict::fail("Σ h_a differs from the identity");
        }
        for a in 0..n {
            if self.q[a].as_row_permutation().is_none() {
                return Verdict::fail(format!("q_{a} is not invertible"));
            }
            for b in 0..n {
                let ba = self.rack.op(b, a);
                if &self.q[a] * &self.q[b] != &self.q[b] * &self.q[ba] {
                    return Verdict::fail(format!("q_a q_b = q_b q_(b▷a) fails at (a, b) = ({a}, {b})"));
                }
                let hh = &self.h[a] * &self.h[b];
                let expected = if a == b { &self.h[a] } else { &zero };
                if hh != *expected {
                    return Verdict::fail(format!("h_a h_b = δ h_a fails at (a, b) = ({a}, {b})"));
                }
                if &self.q[b] * &self.h[ba] != &self.h[a] * &self.q[b] {
                    return Verdict::fail(format!("q_b h_(b▷a) = h_a q_b fails at (a, b) = ({a}, {b})"));
                }
            }
        }
        Verdict::Pass
    }

    /// `w_a w_b = w_{σ_a(b)} w_{τ_b(a)}`, `w_a h_b = h_{σ_a(b)} w_a`,
    /// `w_a q_b = q_{σ_a(b)} w_a`.
    pub fn check_decorated_relations(&self, s: &STSolution) -> Result<Verdict> {
        let w = self
            .w
            .as_ref()
            .ok_or_else(|| Error::precondition("representation has no w_a images"))?;
        let n = self.size();
        if s.size() != n {
            return Err(Error::Dimension {
                expected: n,
                found: s.size(),
            });
        }
        for a in 0..n {
            for b in 0..n {
                let (sab, tba) = s.apply(a, b);
                if &w[a] * &w[b] != &w[sab] * &w[tba] {
                    return Ok(Verdict::fail(format!(
                        "w_a w_b = w_σa(b) w_τb(a) fails at (a, b) = ({a}, {b})"
                    )));
                }
                if &w[a] * &self.h[b] != &self.h[sab] * &w[a] {
                    return Ok(Verdict::fail(format!(
                        "w_a h_b = h_σa(b) w_a fails at (a, b) = ({a}, {b})"
                    )));
                }
                if &w[a] * &self.q[b] != &self.q[sab] * &w[a] {
                    return Ok(Verdict::fail(format!(
                        "w_a q_b = q_σa(b) w_a fails at (a, b) = ({a}, {b})"
                    )));
                }
            }
        }
        Ok(Verdict::Pass)
    }

    /// `R = Σ h_a ⊗ q_a` and `R⁻¹ = Σ h_a ⊗ q_a⁻¹`, with `R` checked against
    /// the linearized left shelf solution.
    pub fn universal_r_image(&self) -> Result<(ExactMatrix, ExactMatrix)> {
        let n = self.size();
        let mut r = ExactMatrix::zeros(n * n);
        let mut r_inv = ExactMatrix::zeros(n * n);
        for a in 0..n {
            r = &r + &self.h[a].kron(&self.q[a]);
            r_inv = &r_inv + &self.h[a].kron(&self.q_inv(a));
        }
        let expected = linearize(&from_shelf(&self.rack, ShelfVariant::Left)?, Form::Ybe);
        if let Verdict::Fail { witness } = r.compare(&expected, "Σ h_a ⊗ q_a vs linearized rack solution") {
            return Err(Error::Verification(witness));
        }
        Ok((r, r_inv))
    }

    fn dot(&self) -> Result<&FiniteGroup> {
        let g = self
            .group_dot
            .as_ref()
            .ok_or_else(|| Error::precondition("no group (X, •) supplied"))?;
        let n = self.size();
        for a in 0..n {
            for b in 0..n {
                if g.op(a, b) != g.op(b, self.rack.op(b, a)) {
                    return Err(Error::precondition(format!(
                        "a•b = b•(b▷a) fails at (a, b) = ({a}, {b})"
                    )));
                }
            }
        }
        Ok(g)
    }

    /// `Δ(h_a) = Σ_{b•c=a} h_b ⊗ h_c`.
    fn delta_h(&self, g: &FiniteGroup, a: usize) -> ExactMatrix {
        let n = self.size();
        let mut m = ExactMatrix::zeros(n * n);
        for b in 0..n {
            let c = g.op(g.inv(b), a);
            m = &m + &self.h[b].kron(&self.h[c]);
        }
        m
    }

    fn delta_q(&self, a: usize) -> ExactMatrix {
        self.q[a].kron(&self.q[a])
    }

    /// Quasi-triangularity and Hopf identities. Requires a group `•` with
    /// `a•b = b•(b▷a)`; `Δ(q_a) = q_a ⊗ q_a`, `ε(h_a) = δ_{a,e}`, `ε(q_a) = 1`,
    /// `S(q_a) = q_a⁻¹`, `S(h_a) = h_{a*}` with `a*` the `•`-inverse.
    pub fn check_quasitriangular(&self) -> Result<Vec<Check>> {
        let g = self.dot()?;
        let n = self.size();
        let (r, _) = self.universal_r_image()?;
        let r12 = embed(&r, 0, 1, 3, n)?;
        let r13 = embed(&r, 0, 2, 3, n)?;
        let r23 = embed(&r, 1, 2, 3, n)?;
        let id = ExactMatrix::identity(n);
        let p = crate::linalg::permutation_operator(n);
        let delta_h: Vec<ExactMatrix> = (0..n).map(|a| self.delta_h(g, a)).collect();
        let mut checks = Vec::new();

        // (id ⊗ Δ)R = R13 R12
        let mut lhs = ExactMatrix::zeros(n * n * n);
        for a in 0..n {
            lhs = &lhs + &self.h[a].kron(&self.delta_q(a));
        }
        checks.push(Check::new("(id⊗Δ)R = R13 R12", lhs.compare(&(&r13 * &r12), "(id⊗Δ)R")));

        // (Δ ⊗ id)R = R13 R23
        let mut lhs = ExactMatrix::zeros(n * n * n);
        for (dh, q) in delta_h.iter().zip(&self.q) {
            lhs = &lhs + &dh.kron(q);
        }
        checks.push(Check::new("(Δ⊗id)R = R13 R23", lhs.compare(&(&r13 * &r23), "(Δ⊗id)R")));

        // Δ^op(x) R = R Δ(x)
        let mut v = Verdict::Pass;
        for (a, dh) in delta_h.iter().enumerate() {
            for (name, d) in [("q", self.delta_q(a)), ("h", dh.clone())] {
                let op = &(&p * &d) * &p;
                if v.is_pass() {
                    v = (&op * &r).compare(&(&r * &d), &format!("Δ^op({name}_{a}) R = R Δ({name}_{a})"));
                }
            }
        }
        checks.push(Check::new("Δ^op(x) R = R Δ(x)", v));

        // counit: (ε ⊗ id)Δ(x) = x = (id ⊗ ε)Δ(x)
        let e = g.identity();
        let mut v = Verdict::Pass;
        for a in 0..n {
            // (ε ⊗ id)Δ(h_a) keeps the terms with b = e, (id ⊗ ε) those with c = e
            let mut left = ExactMatrix::zeros(n);
            let mut right = ExactMatrix::zeros(n);
            for b in 0..n {
                let c = g.op(g.inv(b), a);
                if b == e {
                    left = &left + &self.h[c];
                }
                if c == e {
                    right = &right + &self.h[b];
                }
            }
            if left != self.h[a] || right != self.h[a] {
                v = Verdict::fail(format!("counit fails on h_{a}"));
                break;
            }
        }
        checks.push(Check::new("counit", v));

        // antipode: m(S⊗id)Δ(x) = ε(x)1 = m(id⊗S)Δ(x)
        let mut v = Verdict::Pass;
        'outer: for a in 0..n {
            let mut left = ExactMatrix::zeros(n);
            let mut right = ExactMatrix::zeros(n);
            for b in 0..n {
                let c = g.op(g.inv(b), a);
                left = &left + &(&self.h[g.inv(b)] * &self.h[c]);
                right = &right + &(&self.h[b] * &self.h[g.inv(c)]);
            }
            let eps = if a == e { id.clone() } else { ExactMatrix::zeros(n) };
            if left != eps || right != eps {
                v = Verdict::fail(format!("antipode fails on h_{a}"));
                break 'outer;
            }
            let qq = &self.q_inv(a) * &self.q[a];
            let qq2 = &self.q[a] * &self.q_inv(a);
            if !qq.is_identity() || !qq2.is_identity() {
                v = Verdict::fail(format!("antipode fails on q_{a}"));
                break 'outer;
            }
        }
        checks.push(Check::new("antipode", v));

        // coassociativity of Δ(h_a)
        let mut v = Verdict::Pass;
        for a in 0..n {
            let mut lhs = ExactMatrix::zeros(n * n * n);
            let mut rhs = ExactMatrix::zeros(n * n * n);
            for b in 0..n {
                let c = g.op(g.inv(b), a);
                lhs = &lhs + &delta_h[b].kron(&self.h[c]);
                rhs = &rhs + &self.h[b].kron(&delta_h[c]);
            }
            if lhs != rhs {
                v = Verdict::fail(format!("coassociativity fails on h_{a}"));
                break;
            }
        }
        checks.push(Check::new("coassociativity", v));

        // Δ respects q_b h_{b▷a} = h_a q_b
        let mut v = Verdict::Pass;
        'rel: for a in 0..n {
            for b in 0..n {
                let ba = self.rack.op(b, a);
                let lhs = &self.delta_q(b) * &delta_h[ba];
                let rhs = &delta_h[a] * &self.delta_q(b);
                if lhs != rhs {
                    v = Verdict::fail(format!("Δ(q_b)Δ(h_(b▷a)) = Δ(h_a)Δ(q_b) fails at (a, b) = ({a}, {b})"));
                    break 'rel;
                }
            }
        }
        checks.push(Check::new("coproduct is multiplicative", v));
        Ok(checks)
    }
}

/// The `σ`, `τ` maps of a solution whose component maps do not depend on
/// the subscript, with `σ ∘ τ = id`.
pub(crate) fn lyubashenko_shape(s: &STSolution) -> Result<(Vec<usize>, Vec<usize>)> {
    let n = s.size();
    let sigma = s.sigma_table().row(0).to_vec();
    let tau = s.tau_table().row(0).to_vec();
    let uniform = |t: &Table, r: &[usize]| (0..n).all(|a| t.row(a) == r);
    if !uniform(s.sigma_table(), &sigma) || !uniform(s.tau_table(), &tau) {
        return Err(Error::precondition("σ_a and τ_b must not depend on a, b"));
    }
    if (0..n).any(|x| sigma[tau[x]] != x) {
        return Err(Error::precondition("σ ∘ τ must be the identity"));
    }
    Ok((sigma, tau))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Twisting {
    /// `Δ₁^{(N)}(e_{x,y}) = Σ_k e^{(k)}_{σ^{N−k}x, σ^{N−k}y}`
    First,
    /// `Δ₂^{(N)}(e_{x,y}) = Σ_k e^{(k)}_{τ^{k−1}x, τ^{k−1}y}`
    Second,
}

pub(crate) fn power(map: &[usize], k: usize, x: usize) -> usize {
    (0..k).fold(x, |y, _| map[y])
}

/// Twisted `N`-fold coproduct of `e_{x,y}` for a Lyubashenko-shaped
/// solution, on `V^{⊗N}` (sites counted from 1 in the formulas above).
pub fn twisted_coproduct(s: &STSolution, which: Twisting, sites: usize, x: usize, y: usize) -> Result<ExactMatrix> {
    let (sigma, tau) = lyubashenko_shape(s)?;
    let n = s.size();
    let d = crate::linalg::tensor_dim(n, sites)?;
    let mut out = ExactMatrix::zeros(d);
    for k in 1..=sites {
        let (u, v) = match which {
            Twisting::First => (power(&sigma, sites - k, x), power(&sigma, sites - k, y)),
            Twisting::Second => (power(&tau, k - 1, x), power(&tau, k - 1, y)),
        };
        out = &out + &embed_one(&unit(n, u, v), k - 1, sites)?;
    }
    Ok(out)
}

/// `[ř, Δ_i(e_{x,y})] = 0` for both twisted coproducts and all `x, y`.
pub fn gln_symmetry_check(s: &STSolution) -> Result<Verdict> {
    lyubashenko_shape(s)?;
    let n = s.size();
    let r = linearize(s, Form::Braid);
    for which in [Twisting::First, Twisting::Second] {
        for x in 0..n {
            for y in 0..n {
                let d = twisted_coproduct(s, which, 2, x, y)?;
                if !r.commutator(&d).is_zero() {
                    return Ok(Verdict::fail(format!(
                        "[ř, Δ(e_({x},{y}))] ≠ 0 for the {which:?} twisted coproduct"
                    )));
                }
            }
        }
    }
    Ok(Verdict::Pass)
}

/// `[Δ(e_{xy}), Δ(e_{zw})] = δ_{yz} Δ(e_{xw}) − δ_{xw} Δ(e_{zy})` for the
/// twisted `N`-fold coproduct.
pub fn check_gln_relations(s: &STSolution, which: Twisting, sites: usize) -> Result<Verdict> {
    let n = s.size();
    let images: Vec<ExactMatrix> = (0..n * n)
        .map(|k| twisted_coproduct(s, which, sites, k / n, k % n))
        .collect::<Result<_>>()?;
    let d = images[0].dim();
    for (k1, a) in images.iter().enumerate() {
        for (k2, b) in images.iter().enumerate() {
            let (x, y, z, w) = (k1 / n, k1 % n, k2 / n, k2 % n);
            let mut expected = ExactMatrix::zeros(d);
            if y == z {
                expected = &expected + &images[x * n + w];
            }
            if x == w {
                expected = &expected - &images[z * n + y];
            }
            if a.commutator(b) != expected {
                return Ok(Verdict::fail(format!(
                    "gl_n relation fails for e_({x},{y}), e_({z},{w})"
                )));
            }
        }
    }
    Ok(Verdict::Pass)
}
