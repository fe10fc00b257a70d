//! Periodic and open spin chains built from a Baxterized involutive
//! solution: monodromy, transfer matrix, commuting charges and the local
//! nearest-neighbour Hamiltonian.
//!
//! Sites are 0-based. In the monodromy, site 0 is the auxiliary space and
//! sites `1..=N` are the quantum sites; on the quantum space alone they are
//! renumbered `0..N`.

use crate::baxter::{baxter_pencil, Pencil, LAMBDA};
use crate::error::{Error, Result};
use crate::linalg::{embed, linearize, partial_trace_site, tensor_dim, ExactMatrix, Form};
use crate::poly::PolyMatrix;
use crate::repalgebra::{lyubashenko_shape, power, twisted_coproduct, Twisting};
use crate::settheoretic::STSolution;
use crate::verdict::{Check, Verdict};

/// Default cap on `n^(N+1)` for polynomial work.
pub const DEFAULT_STATE_BOUND: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Boundary {
    Periodic,
    Open,
}

#[derive(Clone, Debug)]
pub struct ChainSpec {
    solution: STSolution,
    pencil: Pencil,
    sites: usize,
    boundary: Boundary,
    bound: usize,
}

impl ChainSpec {
    /// A chain of `sites ≥ 1` quantum sites. Refuses non-involutive input.
    pub fn new(solution: &STSolution, sites: usize, boundary: Boundary) -> Result<Self> {
        if sites == 0 {
            return Err(Error::precondition("a chain needs at least one site"));
        }
        Ok(ChainSpec {
            pencil: baxter_pencil(solution)?,
            solution: solution.clone(),
            sites,
            boundary,
            bound: DEFAULT_STATE_BOUND,
        })
    }

    pub fn with_bound(mut self, bound: usize) -> Self {
        self.bound = bound;
        self
    }

    pub fn with_boundary(mut self, boundary: Boundary) -> Self {
        self.boundary = boundary;
        self
    }

    pub fn solution(&self) -> &STSolution {
        &self.solution
    }

    pub fn size(&self) -> usize {
        self.solution.size()
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn checked_dim(&self, sites: usize) -> Result<usize> {
        let d = tensor_dim(self.size(), sites)?;
        if d > self.bound {
            return Err(Error::BoundExceeded {
                what: "chain state-space dimension",
                value: d,
                bound: self.bound,
            });
        }
        Ok(d)
    }
}

/// `T₀(λ) = R₀N(λ)···R₀₂(λ)R₀₁(λ)` with `R(λ) = λr + 𝒫`.
pub fn monodromy(spec: &ChainSpec) -> Result<PolyMatrix> {
    let total = spec.sites + 1;
    spec.checked_dim(total)?;
    let n = spec.size();
    let local = spec.pencil.ybe_at(LAMBDA);
    let mut t = local.map(|m| embed(m, 0, 1, total, n))?;
    for j in 2..=spec.sites {
        let r0j = local.map(|m| embed(m, 0, j, total, n))?;
        t = r0j.try_mul(&t)?;
    }
    Ok(t)
}

/// `t(λ) = tr₀ T₀(λ)`, acting on the `N` quantum sites.
pub fn transfer_matrix(spec: &ChainSpec) -> Result<PolyMatrix> {
    let total = spec.sites + 1;
    let n = spec.size();
    monodromy(spec)?.map(|m| partial_trace_site(m, 0, total, n))
}

/// Coefficients of `t(λ)` by ascending power of `λ`.
fn coefficients(t: &PolyMatrix, sites: usize) -> Vec<ExactMatrix> {
    (0..=sites as u32).map(|k| t.coefficient((k, 0))).collect()
}

/// The charges `t⁽ᵏ⁾` of `t(λ) = λ^N Σ_k t⁽ᵏ⁾ λ^{−k}`, i.e. `t⁽ᵏ⁾` is the
/// coefficient of `λ^{N−k}`; `t⁽ᴺ⁾ = t(0)` is the cyclic shift.
pub fn charges(spec: &ChainSpec) -> Result<Vec<ExactMatrix>> {
    let mut c = coefficients(&transfer_matrix(spec)?, spec.sites);
    c.reverse();
    Ok(c)
}

/// `[t(λ), t(μ)] = 0`, i.e. `[t⁽ᵏ⁾, t⁽ˡ⁾] = 0` for every pair of charges.
pub fn check_commuting_charges(spec: &ChainSpec) -> Result<Verdict> {
    let c = charges(spec)?;
    for k in 0..c.len() {
        for l in k + 1..c.len() {
            let comm = c[k].commutator(&c[l]);
            if let Some((i, j)) = comm.first_difference(&ExactMatrix::zeros(comm.dim())) {
                return Ok(Verdict::fail(format!(
                    "[t^({k}), t^({l})] has entry {} at ({i}, {j})",
                    comm.get(i, j)
                )));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// `H^{(k)} = t⁽ᵏ⁾ (t⁽ᴺ⁾)⁻¹` for `k < N` and `H^{(N)} = t⁽ᴺ⁾`. `None` when
/// `t⁽ᴺ⁾` is not a permutation, which cannot happen since `R(0) = 𝒫`.
pub fn higher_charges(spec: &ChainSpec) -> Result<Option<Vec<ExactMatrix>>> {
    let c = charges(spec)?;
    let last = &c[spec.sites];
    if last.as_row_permutation().is_none() {
        return Ok(None);
    }
    let inv = last.transpose();
    let mut out: Vec<ExactMatrix> = c[..spec.sites].iter().map(|t| t * &inv).collect();
    out.push(last.clone());
    Ok(Some(out))
}

/// The pairs `(j, j+1)` of the nearest-neighbour sum, with the wrap
/// `(N−1, 0)` on a periodic chain of at least two sites.
fn bonds(sites: usize, boundary: Boundary) -> Vec<(usize, usize)> {
    let mut b: Vec<(usize, usize)> = (0..sites.saturating_sub(1)).map(|j| (j, j + 1)).collect();
    if boundary == Boundary::Periodic && sites >= 2 {
        b.push((sites - 1, 0));
    }
    b
}

/// `Σ_j ř_{j,j+1}`; periodic chains include the wrap term `ř_{N,1}`.
pub fn hamiltonian(spec: &ChainSpec) -> Result<ExactMatrix> {
    let d = spec.checked_dim(spec.sites)?;
    let n = spec.size();
    let r = linearize(&spec.solution, Form::Braid);
    let mut h = ExactMatrix::zeros(d);
    for (i, j) in bonds(spec.sites, spec.boundary) {
        h = &h + &embed(&r, i, j, spec.sites, n)?;
    }
    Ok(h)
}

/// `[H_periodic, t⁽ᵏ⁾] = 0` for every charge.
pub fn check_hamiltonian_charges(spec: &ChainSpec) -> Result<Verdict> {
    let h = hamiltonian(&spec.clone().with_boundary(Boundary::Periodic))?;
    for (k, t) in charges(spec)?.iter().enumerate() {
        let comm = h.commutator(t);
        if let Some((i, j)) = comm.first_difference(&ExactMatrix::zeros(comm.dim())) {
            return Ok(Verdict::fail(format!(
                "[H, t^({k})] has entry {} at ({i}, {j})",
                comm.get(i, j)
            )));
        }
    }
    Ok(Verdict::Pass)
}

/// First `(coproduct, x, y)` whose image does not commute with `h`.
fn first_asymmetry(spec: &ChainSpec, h: &ExactMatrix) -> Result<Option<(Twisting, usize, usize)>> {
    let n = spec.size();
    for which in [Twisting::First, Twisting::Second] {
        for x in 0..n {
            for y in 0..n {
                let d = twisted_coproduct(&spec.solution, which, spec.sites, x, y)?;
                if !h.commutator(&d).is_zero() {
                    return Ok(Some((which, x, y)));
                }
            }
        }
    }
    Ok(None)
}

/// `gl_n` symmetry of the open Hamiltonian of a Lyubashenko-type solution:
/// `[H, Δᵢ^{(N)}(e_{x,y})] = 0` for both twisted coproducts. When `σ` is not
/// the identity, also checks that the periodic Hamiltonian breaks the
/// symmetry. The wrap term `ř_{N,1}` commutes with the coproducts exactly
/// when `σ^N = id`, so that second check fails on such chains.
pub fn check_hamiltonian_symmetry(spec: &ChainSpec) -> Result<Vec<Check>> {
    if spec.boundary != Boundary::Open {
        return Err(Error::precondition("the symmetry check needs an open chain"));
    }
    let (sigma, _) = lyubashenko_shape(&spec.solution)?;
    let mut checks = Vec::new();
    let open = hamiltonian(spec)?;
    let v = match first_asymmetry(spec, &open)? {
        None => Verdict::Pass,
        Some((which, x, y)) => Verdict::fail(format!(
            "[H_open, Δ(e_({x},{y}))] ≠ 0 for the {which:?} twisted coproduct"
        )),
    };
    checks.push(Check::new("open Hamiltonian is gl_n symmetric", v));

    let shifted = sigma.iter().enumerate().any(|(x, &s)| s != x);
    if shifted && spec.size() >= 2 && spec.sites >= 2 {
        let periodic = hamiltonian(&spec.clone().with_boundary(Boundary::Periodic))?;
        let v = match first_asymmetry(spec, &periodic)? {
            Some(_) => Verdict::Pass,
            None => Verdict::fail(format!(
                "periodic Hamiltonian commutes with every twisted coproduct (σ^N is {})",
                if (0..spec.size()).all(|x| power(&sigma, spec.sites, x) == x) {
                    "the identity"
                } else {
                    "not the identity"
                }
            )),
        };
        checks.push(Check::new("periodic Hamiltonian is not gl_n symmetric", v));
    }
    Ok(checks)
}

/// The full battery for one chain: commuting charges, Hamiltonian versus
/// charges and, for open Lyubashenko-type chains, the symmetry check.
pub fn verify(spec: &ChainSpec) -> Result<Vec<Check>> {
    let mut checks = vec![
        Check::new("[t(λ), t(μ)] = 0", check_commuting_charges(spec)?),
        Check::new("[H_periodic, t^(k)] = 0", check_hamiltonian_charges(spec)?),
    ];
    if spec.boundary == Boundary::Open && lyubashenko_shape(&spec.solution).is_ok() {
        checks.extend(check_hamiltonian_symmetry(spec)?);
    }
    Ok(checks)
}
