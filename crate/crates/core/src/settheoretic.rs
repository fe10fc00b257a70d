//! Set-theoretic solutions `ř(a, b) = (σ_a(b), τ_b(a))` stored as two tables.

use std::fmt;
use std::sync::OnceLock;

use crate::braces::{self, SkewBrace, Validation};
use crate::error::{Error, Result};
use crate::magma::Magma;
use crate::table::{invert, Table};
use crate::verdict::Verdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Flags {
    left_nondegenerate: bool,
    right_nondegenerate: bool,
    involutive: bool,
}

/// `sigma[a][b] = σ_a(b)` and `tau[b][a] = τ_b(a)`.
#[derive(Clone)]
pub struct STSolution {
    sigma: Table,
    tau: Table,
    flags: OnceLock<Flags>,
}

impl PartialEq for STSolution {
    fn eq(&self, other: &Self) -> bool {
        self.sigma == other.sigma && self.tau == other.tau
    }
}

impl Eq for STSolution {}

impl fmt::Debug for STSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("STSolution")
            .field("sigma", &self.sigma)
            .field("tau", &self.tau)
            .finish()
    }
}

/// Which component condition of the braid relation failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BraidCondition {
    /// `σ_a(σ_b(c)) = σ_{σ_a(b)}(σ_{τ_b(a)}(c))`
    FirstComponent,
    /// `τ_c(τ_b(a)) = τ_{τ_c(b)}(τ_{σ_b(c)}(a))`
    ThirdComponent,
    /// `σ_{τ_{σ_b(c)}(a)}(τ_c(b)) = τ_{σ_{τ_b(a)}(c)}(σ_a(b))`
    MiddleComponent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BraidViolation {
    pub condition: BraidCondition,
    pub triple: (usize, usize, usize),
}

impl fmt::Display for BraidViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c) = self.triple;
        write!(f, "{:?} fails at (a, b, c) = ({a}, {b}, {c})", self.condition)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShelfVariant {
    /// `ř(a, b) = (b, b ▷ a)`
    Left,
    /// `ř(a, b) = (a ▷ b, a)`
    Right,
}

impl STSolution {
    pub fn from_tables(sigma: Table, tau: Table) -> Result<Self> {
        if sigma.size() != tau.size() {
            return Err(Error::Dimension {
                expected: sigma.size(),
                found: tau.size(),
            });
        }
        Ok(STSolution {
            sigma,
            tau,
            flags: OnceLock::new(),
        })
    }

    pub fn from_fns(
        n: usize,
        sigma: impl FnMut(usize, usize) -> usize,
        tau: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self> {
        Self::from_tables(Table::from_fn(n, sigma)?, Table::from_fn(n, tau)?)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.sigma.size()
    }

    /// `σ_a(b)`.
    #[inline]
    pub fn sigma(&self, a: usize, b: usize) -> usize {
        self.sigma.get(a, b)
    }

    /// `τ_b(a)`.
    #[inline]
    pub fn tau(&self, b: usize, a: usize) -> usize {
        self.tau.get(b, a)
    }

    /// `ř(a, b)`.
    #[inline]
    pub fn apply(&self, a: usize, b: usize) -> (usize, usize) {
        (self.sigma(a, b), self.tau(b, a))
    }

    pub fn sigma_table(&self) -> &Table {
        &self.sigma
    }

    pub fn tau_table(&self) -> &Table {
        &self.tau
    }

    fn flags(&self) -> Flags {
        *self.flags.get_or_init(|| {
            let n = self.size();
            let involutive = (0..n).all(|a| {
                (0..n).all(|b| {
                    let (x, y) = self.apply(a, b);
                    self.apply(x, y) == (a, b)
                })
            });
            Flags {
                left_nondegenerate: self.sigma.rows_bijective(),
                right_nondegenerate: self.tau.rows_bijective(),
                involutive,
            }
        })
    }

    pub fn is_left_nondegenerate(&self) -> bool {
        self.flags().left_nondegenerate
    }

    pub fn is_right_nondegenerate(&self) -> bool {
        self.flags().right_nondegenerate
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.is_left_nondegenerate() && self.is_right_nondegenerate()
    }

    pub fn is_involutive(&self) -> bool {
        self.flags().involutive
    }

    /// First triple violating one of the three component conditions.
    pub fn braid_violation(&self) -> Option<BraidViolation> {
        let n = self.size();
        let s = |a, b| self.sigma(a, b);
        let t = |b, a| self.tau(b, a);
        for a in 0..n {
            for b in 0..n {
                let sab = s(a, b);
                let tba = t(b, a);
                for c in 0..n {
                    let condition = if s(a, s(b, c)) != s(sab, s(tba, c)) {
                        BraidCondition::FirstComponent
                    } else if t(c, tba) != t(t(c, b), t(s(b, c), a)) {
                        BraidCondition::ThirdComponent
                    } else if s(t(s(b, c), a), t(c, b)) != t(s(tba, c), sab) {
                        BraidCondition::MiddleComponent
                    } else {
                        continue;
                    };
                    return Some(BraidViolation {
                        condition,
                        triple: (a, b, c),
                    });
                }
            }
        }
        None
    }

    pub fn check_braid(&self) -> Verdict {
        Verdict::from_witness(self.braid_violation())
    }

    /// `ř` as a permutation of pair indices `a·n + b`, if it is bijective.
    pub fn pair_permutation(&self) -> Option<Vec<usize>> {
        let n = self.size();
        let p: Vec<usize> = (0..n * n)
            .map(|k| {
                let (x, y) = self.apply(k / n, k % n);
                x * n + y
            })
            .collect();
        invert(&p).map(|_| p)
    }

    /// The solution `ř⁻¹`.
    pub fn inverse_solution(&self) -> Result<STSolution> {
        let n = self.size();
        let p = self
            .pair_permutation()
            .ok_or_else(|| Error::precondition("solution is not bijective on pairs"))?;
        let q = invert(&p).expect("checked bijective");
        let mut sigma = vec![0; n * n];
        let mut tau = vec![0; n * n];
        for (k, &image) in q.iter().enumerate() {
            let (x, y) = (k / n, k % n);
            sigma[x * n + y] = image / n;
            tau[y * n + x] = image % n;
        }
        STSolution::from_tables(Table::from_cells(n, sigma), Table::from_cells(n, tau))
    }

    /// The rack `b ▷ a = σ_b(τ_{σ_a⁻¹(b)}(a))`.
    pub fn derived_rack(&self) -> Result<Magma> {
        let inv = self
            .sigma
            .row_inverses()
            .ok_or_else(|| Error::precondition("σ is not bijective"))?;
        let n = self.size();
        Ok(Magma::new(Table::from_cells(
            n,
            (0..n * n)
                .map(|k| {
                    let (b, a) = (k / n, k % n);
                    self.sigma(b, self.tau(inv.get(a, b), a))
                })
                .collect(),
        )))
    }
}

/// `ř(a, b) = (b, a)`.
pub fn flip(n: usize) -> Result<STSolution> {
    STSolution::from_fns(n, |_, b| b, |_, a| a)
}

/// Shelf solution; the braid relation holds exactly when `m` is a shelf.
pub fn from_shelf(m: &Magma, variant: ShelfVariant) -> Result<STSolution> {
    if let Some((a, b, c)) = m.shelf_violation() {
        return Err(Error::precondition(format!(
            "not a shelf: a▷(b▷c) != (a▷b)▷(a▷c) at ({a}, {b}, {c})"
        )));
    }
    let n = m.size();
    match variant {
        ShelfVariant::Left => STSolution::from_fns(n, |_, b| b, |b, a| m.op(b, a)),
        ShelfVariant::Right => STSolution::from_fns(n, |a, b| m.op(a, b), |_, a| a),
    }
}

/// `σ(b) = b + c`, `τ(a) = a − c` modulo `n`.
pub fn lyubashenko(n: usize, c: usize) -> Result<STSolution> {
    if c == 0 || c >= n {
        return Err(Error::precondition(format!(
            "shift must satisfy 1 <= c <= n - 1, got c = {c}, n = {n}"
        )));
    }
    STSolution::from_fns(n, |_, b| (b + c) % n, |_, a| (a + n - c) % n)
}

/// The solution attached to a skew brace; see [`braces::sigma_tau_from_brace`].
pub fn gv_solution(b: &SkewBrace) -> STSolution {
    braces::sigma_tau_from_brace(b)
}

/// `σ_a(b) = −f(a) + a∘b` with `f(a) = a∘z − z`, τ from the structure group.
/// The additive condition on `f`, the compatibility condition linking `f` with
/// `σ, τ`, and the braid relation are all verified.
pub fn affine_twist_solution(b: &SkewBrace, z: usize) -> Result<STSolution> {
    b.contains(z)?;
    let n = b.size();
    let f: Vec<usize> = (0..n).map(|a| b.sub(b.circ(a, z), z)).collect();
    // f(−a + b + c) = −f(a) + f(b) + f(c)
    let additive = Validation::Auto.find_triple(n, |x, y, w| {
        f[b.add(b.add(b.neg(x), y), w)] == b.add(b.add(b.neg(f[x]), f[y]), f[w])
    });
    if let Some((x, y, w)) = additive {
        return Err(Error::Verification(format!(
            "f(-a+b+c) != -f(a)+f(b)+f(c) at ({x}, {y}, {w})"
        )));
    }
    let sigma = Table::from_cells(
        n,
        (0..n * n)
            .map(|k| b.add(b.neg(f[k / n]), b.circ(k / n, k % n)))
            .collect(),
    );
    let s = braces::solution_from_sigma(b, sigma);
    // a∘f(b) − a + f(a) = σ_a(b)∘f(τ_b(a)) − σ_a(b) + f(σ_a(b))
    for x in 0..n {
        for y in 0..n {
            let (u, v) = s.apply(x, y);
            let lhs = b.add(b.sub(b.circ(x, f[y]), x), f[x]);
            let rhs = b.add(b.sub(b.circ(u, f[v]), u), f[u]);
            if lhs != rhs {
                return Err(Error::Verification(format!(
                    "compatibility of f with the solution fails at (a, b) = ({x}, {y})"
                )));
            }
        }
    }
    verified(s)
}

/// `σ_a(b) = a + a∘b`, τ from the structure group. Needs an abelian `+`.
pub fn core_twist_solution(b: &SkewBrace) -> Result<STSolution> {
    if !b.is_brace() {
        return Err(Error::precondition("additive group is not abelian"));
    }
    let n = b.size();
    let sigma = Table::from_cells(
        n,
        (0..n * n)
            .map(|k| b.add(k / n, b.circ(k / n, k % n)))
            .collect(),
    );
    verified(braces::solution_from_sigma(b, sigma))
}

fn verified(s: STSolution) -> Result<STSolution> {
    match s.braid_violation() {
        None => Ok(s),
        Some(v) => Err(Error::Verification(v.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braces::{brace_u2m, FiniteGroup};
    use crate::magma::{dihedral_quandle, tetrahedron, trivial};

    #[test]
    fn flip_and_lyubashenko_are_solutions() {
        assert!(flip(3).unwrap().check_braid().is_pass());
        let l = lyubashenko(3, 1).unwrap();
        assert!(l.check_braid().is_pass());
        assert!(l.is_involutive());
        assert!(lyubashenko(3, 3).is_err());
        assert!(lyubashenko(3, 0).is_err());
        let l2 = lyubashenko(2, 1).unwrap();
        assert_eq!(l2.sigma_table().to_rows(), vec![vec![1, 0], vec![1, 0]]);
        assert_eq!(l2.tau_table().to_rows(), vec![vec![1, 0], vec![1, 0]]);
        assert!(l2.is_involutive());
    }

    #[test]
    fn c2_failure_is_reported() {
        let s = STSolution::from_fns(2, |_, b| b, |b, a| (a + b) % 2).unwrap();
        let v = s.braid_violation().unwrap();
        assert_eq!(v.condition, BraidCondition::ThirdComponent);
        assert_eq!(v.triple, (0, 0, 1));
        assert!(s.check_braid().witness().unwrap().contains("ThirdComponent"));
    }

    #[test]
    fn constant_shift_of_tau_is_still_a_solution() {
        let s = STSolution::from_fns(2, |_, b| b, |_, a| (a + 1) % 2).unwrap();
        assert!(s.check_braid().is_pass());
    }

    #[test]
    fn shelf_solutions() {
        let d = dihedral_quandle(3).unwrap();
        let left = from_shelf(&d, ShelfVariant::Left).unwrap();
        assert!(left.check_braid().is_pass());
        assert!(!left.is_involutive());
        let right = from_shelf(&d, ShelfVariant::Right).unwrap();
        assert!(right.check_braid().is_pass());
        assert!(from_shelf(&tetrahedron(), ShelfVariant::Left)
            .unwrap()
            .check_braid()
            .is_pass());
        assert_eq!(from_shelf(&trivial(3).unwrap(), ShelfVariant::Left).unwrap(), flip(3).unwrap());
        let bad = Magma::from_rows(&[[1, 0], [0, 0]]).unwrap();
        assert!(from_shelf(&bad, ShelfVariant::Left).is_err());
    }

    #[test]
    fn inverse_of_shelf_solution() {
        let d = dihedral_quandle(3).unwrap();
        let s = from_shelf(&d, ShelfVariant::Left).unwrap();
        let inv = s.inverse_solution().unwrap();
        // ř⁻¹(a, b) = (a ▷⁻¹ b, a) where ř(a, b) = (b, b ▷ a)
        for a in 0..3 {
            for b in 0..3 {
                let pre = d.table().row_inverse(a).unwrap()[b];
                assert_eq!(inv.apply(a, b), (pre, a));
                let (x, y) = s.apply(a, b);
                assert_eq!(inv.apply(x, y), (a, b));
            }
        }
        assert_eq!(inv.inverse_solution().unwrap(), s);
        let l = lyubashenko(4, 1).unwrap();
        assert_eq!(l.inverse_solution().unwrap(), l);
        let constant = Magma::from_rows(&[[0, 0], [0, 0]]).unwrap();
        let degenerate = from_shelf(&constant, ShelfVariant::Left).unwrap();
        assert!(degenerate.inverse_solution().is_err());
    }

    #[test]
    fn brace_families_u3() {
        let u3 = brace_u2m(3).unwrap();
        let gv = gv_solution(&u3);
        assert!(gv.check_braid().is_pass());
        assert!(gv.is_involutive() && gv.is_nondegenerate());

        let aff = affine_twist_solution(&u3, 1).unwrap();
        assert!(!aff.is_involutive());
        assert_eq!(affine_twist_solution(&u3, u3.identity()).unwrap(), gv);
        assert!(affine_twist_solution(&brace_u2m(2).unwrap(), 1).is_ok());

        let core = core_twist_solution(&u3).unwrap();
        assert!(!core.is_involutive());
    }

    #[test]
    fn core_twist_needs_abelian_addition() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let b = SkewBrace::trivial(s3);
        assert!(core_twist_solution(&b).is_err());
        let z2 = SkewBrace::trivial(FiniteGroup::cyclic(2).unwrap());
        assert_eq!(core_twist_solution(&z2).unwrap(), flip(2).unwrap());
    }

    #[test]
    fn derived_racks() {
        let u3 = brace_u2m(3).unwrap();
        assert!(gv_solution(&u3).derived_rack().unwrap().is_trivial());
        assert!(lyubashenko(5, 2).unwrap().derived_rack().unwrap().is_trivial());
        let d = dihedral_quandle(3).unwrap();
        let s = from_shelf(&d, ShelfVariant::Left).unwrap();
        assert_eq!(s.derived_rack().unwrap(), d);
        assert!(core_twist_solution(&u3).unwrap().derived_rack().unwrap().is_rack());
    }
}
