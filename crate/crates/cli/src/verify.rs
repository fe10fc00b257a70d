//! Subcommands that verify identities: Baxterization, twists, algebra
//! representations and spin chains.

use std::time::Instant;

use clap::Subcommand;
use ybx_core::baxter::{baxter_pencil, Identity};
use ybx_core::chain::{self, hamiltonian, Boundary, ChainSpec};
use ybx_core::io::{parse_magma, parse_solution, parse_table};
use ybx_core::linalg::{check_matrix_ybe, linearize, permutation_operator, Form};
use ybx_core::repalgebra::{check_gln_relations, gln_symmetry_check, AlgebraRep, Twisting};
use ybx_core::twist::{build_universal_rep_twists, lyubashenko_from_permutation, twist_solution, FundamentalTwist};
use ybx_core::{FiniteGroup, Verdict};

use crate::context::{power, CliError, CliResult, Ctx, Outcome};
use crate::structures::{matrix_artifact, MatrixFormat};

#[derive(Subcommand)]
pub enum BaxterCmd {
    /// Check the spectral-parameter identities of λř + 1
    Verify {
        file: String,
        /// Every identity (the default when no other flag is given)
        #[arg(long)]
        all: bool,
        #[arg(long)]
        braid: bool,
        #[arg(long)]
        unitarity: bool,
        #[arg(long)]
        crossing: bool,
        #[arg(long)]
        transpose: bool,
        #[arg(long)]
        rtt: bool,
    },
}

#[derive(Subcommand)]
pub enum TwistCmd {
    /// Rebuild a solution from the flip and from its derived rack by twisting
    Reconstruct { file: String },
    /// Check the one-sided twist of the flip into the shift solution
    Lyu {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: usize,
    },
}

#[derive(Subcommand)]
pub enum RepCmd {
    /// Check algebra relations in the fundamental representation
    Verify {
        /// A rack table or a solution file
        file: String,
        /// Quasi-triangular and Hopf identities; needs --dot
        #[arg(long)]
        hopf: bool,
        /// Group table of the product • with a•b = b•(b▷a)
        #[arg(long)]
        dot: Option<String>,
        /// Twisted gl_n coproducts (shift-type solutions only)
        #[arg(long)]
        gln: bool,
    },
}

#[derive(Subcommand)]
pub enum ChainCmd {
    /// Commuting charges, Hamiltonian and symmetry checks
    Verify {
        file: String,
        #[arg(long = "N")]
        sites: usize,
        #[arg(long)]
        open: bool,
    },
    /// Export the nearest-neighbour Hamiltonian
    Hamiltonian {
        file: String,
        #[arg(long = "N")]
        sites: usize,
        #[arg(long)]
        open: bool,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Csv)]
        out: MatrixFormat,
    },
}

pub fn baxter(ctx: &mut Ctx, cmd: BaxterCmd) -> CliResult<Outcome> {
    let BaxterCmd::Verify { file, all, braid, unitarity, crossing, transpose, rtt } = cmd;
    let s = parse_solution(&ctx.read(&file)?)?;
    ctx.check_dim("three-site", power(s.size(), 3))?;
    let pencil = baxter_pencil(&s)?;
    let picked: Vec<Identity> = [
        (braid, Identity::Braid),
        (unitarity, Identity::Unitarity),
        (crossing, Identity::Crossing),
        (transpose, Identity::Transpose),
        (rtt, Identity::Rtt),
    ]
    .into_iter()
    .filter_map(|(on, id)| on.then_some(id))
    .collect();
    let which = if all || picked.is_empty() { Identity::ALL.to_vec() } else { picked };
    let mut r = ctx.report();
    for id in which {
        r.run::<CliError>(id.name(), false, || Ok(id.check(&pencil)?))?;
    }
    Ok(Outcome::Report(r))
}

pub fn twist(ctx: &mut Ctx, cmd: TwistCmd) -> CliResult<Outcome> {
    match cmd {
        TwistCmd::Reconstruct { file } => {
            let s = parse_solution(&ctx.read(&file)?)?;
            let n = s.size();
            ctx.check_dim("three-site", power(n, 3))?;
            let mut r = ctx.report();
            if s.is_involutive() {
                r.run::<CliError>("F 𝒫 F⁻¹ = ř", true, || {
                    let f = FundamentalTwist::from_solution(&s)?;
                    Ok(match twist_solution(&f, &permutation_operator(n), n) {
                        Ok(m) => m.compare(&linearize(&s, Form::Braid), "F 𝒫 F⁻¹ vs ř"),
                        Err(ybx_core::Error::Verification(w)) => Verdict::fail(w),
                        Err(e) => return Err(e.into()),
                    })
                })?;
            } else {
                r.skip("F 𝒫 F⁻¹ = ř", "solution is not involutive");
            }
            let start = Instant::now();
            let u = build_universal_rep_twists(&s)?;
            let checks = u.checks(&s)?;
            r.push_checks(checks, start.elapsed(), true);
            if !s.is_involutive() {
                r.skip("reversibility R^F12 R^F21 = 1", "solution is not involutive");
            }
            r.info("n", n);
            r.info("involutive", s.is_involutive());
            Ok(Outcome::Report(r))
        }
        TwistCmd::Lyu { n, c } => {
            ctx.check_dim("two-site", power(n, 2))?;
            let mut r = ctx.report();
            r.run::<CliError>("(u⊗1) 𝒫 (u⁻¹⊗1) = (1⊗u⁻¹) 𝒫 (1⊗u) = ř", false, || {
                Ok(match lyubashenko_from_permutation(n, c) {
                    Ok(_) => Verdict::Pass,
                    Err(ybx_core::Error::Verification(w)) => Verdict::fail(w),
                    Err(e) => return Err(e.into()),
                })
            })?;
            Ok(Outcome::Report(r))
        }
    }
}

pub fn rep(ctx: &mut Ctx, cmd: RepCmd) -> CliResult<Outcome> {
    let RepCmd::Verify { file, hopf, dot, gln } = cmd;
    let text = ctx.read(&file)?;
    let solution = if text.lines().any(|l| l.split('#').next().unwrap_or("").trim() == "sigma:") {
        Some(parse_solution(&text)?)
    } else {
        None
    };
    let rack = match &solution {
        Some(s) => s.derived_rack()?,
        None => parse_magma(&text)?,
    };
    let n = rack.size();
    ctx.check_dim("three-site", power(n, 3))?;
    let group = match (hopf, dot) {
        (true, None) => return Err(CliError::usage("--hopf needs the group table given with --dot")),
        (_, Some(path)) => Some(FiniteGroup::from_table(parse_table(&ctx.read(&path)?)?)?),
        (false, None) => None,
    };
    let mut rep = AlgebraRep::new(rack)?;
    let mut r = ctx.report();
    r.run::<CliError>("rack algebra relations", true, || Ok(rep.check_rack_algebra_relations()))?;
    if let Some(s) = &solution {
        rep = rep.decorated(s)?;
        r.run::<CliError>("decorated relations", true, || Ok(rep.check_decorated_relations(s)?))?;
    }
    r.run::<CliError>("universal R image satisfies the YBE", true, || {
        let (m, _) = rep.universal_r_image()?;
        Ok(check_matrix_ybe(&m, n)?)
    })?;
    if hopf {
        let rep = rep.clone().with_group_dot(group.expect("checked above"))?;
        let start = Instant::now();
        let checks = rep.check_quasitriangular()?;
        r.push_checks(checks, start.elapsed(), true);
    }
    if gln {
        match &solution {
            Some(s) => match gln_symmetry_check(s) {
                Ok(v) => {
                    r.push_verdict("[ř, Δᵢ(e_xy)] = 0", v, std::time::Duration::ZERO, true);
                    for (which, name) in [(Twisting::First, "first"), (Twisting::Second, "second")] {
                        r.run::<CliError>(&format!("gl_n relations, {name} twisted coproduct on 3 sites"), true, || {
                            Ok(check_gln_relations(s, which, 3)?)
                        })?;
                    }
                }
                Err(ybx_core::Error::Precondition(why)) => r.skip("[ř, Δᵢ(e_xy)] = 0", &why),
                Err(e) => return Err(e.into()),
            },
            None => r.skip("[ř, Δᵢ(e_xy)] = 0", "needs a solution file"),
        }
    }
    r.info("n", n);
    r.info("derived_rack_class", rep.rack().class_name());
    Ok(Outcome::Report(r))
}

fn chain_spec(ctx: &mut Ctx, file: &str, sites: usize, open: bool, extra: u32) -> CliResult<ChainSpec> {
    let s = parse_solution(&ctx.read(file)?)?;
    let exp = u32::try_from(sites).ok().and_then(|k| k.checked_add(extra));
    ctx.check_dim("chain state space", exp.and_then(|k| power(s.size(), k)))?;
    let boundary = if open { Boundary::Open } else { Boundary::Periodic };
    Ok(ChainSpec::new(&s, sites, boundary)?.with_bound(ctx.max_dim))
}

pub fn chain_cmd(ctx: &mut Ctx, cmd: ChainCmd) -> CliResult<Outcome> {
    match cmd {
        ChainCmd::Verify { file, sites, open } => {
            let spec = chain_spec(ctx, &file, sites, open, 1)?;
            let mut r = ctx.report();
            let start = Instant::now();
            let checks = chain::verify(&spec)?;
            r.push_checks(checks, start.elapsed(), false);
            r.info("n", spec.size());
            r.info("N", sites);
            r.info("boundary", if open { "open" } else { "periodic" });
            Ok(Outcome::Report(r))
        }
        ChainCmd::Hamiltonian { file, sites, open, out } => {
            let spec = chain_spec(ctx, &file, sites, open, 0)?;
            Ok(Outcome::Artifact(matrix_artifact(&hamiltonian(&spec)?, out)))
        }
    }
}
