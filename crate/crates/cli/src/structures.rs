//! Subcommands that build, check and export magmas, braces and solutions.

use std::time::Instant;

use clap::{Subcommand, ValueEnum};
use ybx_core::braces::{brace_om, EXHAUSTIVE_LIMIT, brace_u2m, u2m_index, validate_skew_brace_with, Validation};
use ybx_core::io::{parse_brace, parse_brace_tables, parse_magma, parse_solution, write_brace, write_magma, write_solution};
use ybx_core::linalg::{check_matrix_braid, linearize, Form};
use ybx_core::magma::{self, enumerate, EnumOptions, HARD_ENUM_BOUND};
use ybx_core::settheoretic::{
    affine_twist_solution, core_twist_solution, flip, from_shelf, gv_solution, lyubashenko, ShelfVariant,
};
use ybx_core::{ExactMatrix, FiniteGroup, Verdict};

use crate::context::{power, CliError, CliResult, Ctx, Outcome};

#[derive(Subcommand)]
pub enum MagmaCmd {
    /// Check self-distributivity and classify a table
    Check { file: String },
    /// Enumerate racks (or quandles) on n points
    Enum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        quandles: bool,
        /// One canonical representative per isomorphism class
        #[arg(long)]
        iso: bool,
    },
    /// Print a built-in table
    Make {
        #[command(subcommand)]
        kind: MagmaKind,
    },
}

#[derive(Subcommand)]
pub enum MagmaKind {
    Trivial {
        #[arg(long)]
        n: usize,
    },
    /// a ▷ b = 2a − b mod n
    Dihedral {
        #[arg(long)]
        n: usize,
    },
    /// a ▷ b = a⁻¹ b a
    Conj {
        #[arg(long)]
        group: String,
    },
    /// a ▷ b = a b⁻¹ a
    Core {
        #[arg(long)]
        group: String,
    },
    /// a ▷ b = b a⁻¹ x a, a rack that is not a quandle for generic x
    TwistedConj {
        #[arg(long)]
        group: String,
        #[arg(long)]
        x: usize,
    },
    /// Affine quandle on U(Z/2^m) for the unit z (given as a residue)
    Affine {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        z: u64,
    },
    Tetrahedron,
}

#[derive(Subcommand)]
pub enum BraceCmd {
    /// Print a built-in brace
    Make {
        #[command(subcommand)]
        kind: BraceKind,
    },
    /// Validate the group and skew brace axioms
    Check {
        file: String,
        /// Check every triple even on large carriers
        #[arg(long)]
        exhaustive: bool,
    },
    /// Print the solution attached to a brace
    Solution {
        file: String,
        #[arg(long, value_enum, default_value_t = BraceFamily::Gv)]
        kind: BraceFamily,
        /// Element index used by the affine family
        #[arg(long)]
        z: Option<usize>,
    },
}

#[derive(Subcommand)]
pub enum BraceKind {
    /// U(Z/2^m) with + shifted by 1 and ∘ the multiplication
    U2m {
        #[arg(long)]
        m: u32,
    },
    /// The 256-element matrix brace over Z/8
    Om,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum BraceFamily {
    Gv,
    Affine,
    Core,
}

#[derive(Subcommand)]
pub enum SolCmd {
    /// Verify the braid relation at table and matrix level
    Check { file: String },
    /// Print a built-in solution
    Make {
        #[command(subcommand)]
        kind: SolKind,
    },
    /// Print the inverse of an invertible solution
    Invert { file: String },
}

#[derive(Subcommand)]
pub enum SolKind {
    Flip {
        #[arg(long)]
        n: usize,
    },
    /// σ(b) = b + c, τ(a) = a − c mod n
    Lyu {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: usize,
    },
    /// Shelf solution from a table file
    Shelf {
        file: String,
        /// σ_a(b) = a ▷ b, τ = id instead of σ = id, τ_b(a) = b ▷ a
        #[arg(long)]
        right: bool,
    },
    Gv { file: String },
    Affine {
        file: String,
        /// Element index
        #[arg(long)]
        z: usize,
    },
    Core { file: String },
}

#[derive(Subcommand)]
pub enum MatCmd {
    /// Linearize a solution into an n²×n² 0/1 matrix
    Linearize {
        file: String,
        #[arg(long, value_enum, default_value_t = FormArg::Braid)]
        form: FormArg,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Csv)]
        out: MatrixFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum FormArg {
    Braid,
    Ybe,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum MatrixFormat {
    Csv,
    Json,
}

/// Parses `C4`, `S3`, `D5` (order 10) and products such as `C2xC2`.
pub fn parse_group(name: &str) -> CliResult<FiniteGroup> {
    let factor = |f: &str| -> CliResult<FiniteGroup> {
        let bad = || CliError::usage(format!("unknown group `{f}`; use C<k>, S<k>, D<m> or products like C2xC3"));
        let (kind, k) = f.split_at(1.min(f.len()));
        let k: usize = k.parse().map_err(|_| bad())?;
        let g = match kind {
            "C" => FiniteGroup::cyclic(k),
            "S" => FiniteGroup::symmetric(k),
            "D" => FiniteGroup::dihedral(k),
            _ => return Err(bad()),
        };
        Ok(g?)
    };
    let mut parts = name.split('x');
    let mut g = factor(parts.next().unwrap_or(""))?;
    for p in parts {
        g = g.direct_product(&factor(p)?);
    }
    Ok(g)
}

pub fn matrix_artifact(m: &ExactMatrix, format: MatrixFormat) -> String {
    match format {
        MatrixFormat::Csv => m.to_csv(),
        MatrixFormat::Json => {
            let triplets: Vec<serde_json::Value> = m
                .triplets()
                .into_iter()
                .map(|(i, j, v)| {
                    let v = i64::try_from(&v).map_or_else(|_| serde_json::json!(v.to_string()), |x| serde_json::json!(x));
                    serde_json::json!([i, j, v])
                })
                .collect();
            let mut s = serde_json::json!({ "dim": m.dim(), "triplets": triplets }).to_string();
            s.push('\n');
            s
        }
    }
}

pub fn magma(ctx: &mut Ctx, cmd: MagmaCmd) -> CliResult<Outcome> {
    match cmd {
        MagmaCmd::Check { file } => {
            let m = parse_magma(&ctx.read(&file)?)?;
            let mut r = ctx.report();
            r.run::<CliError>("left self-distributivity", false, || {
                Ok(Verdict::from_witness(m.shelf_violation().map(|(a, b, c)| {
                    format!("a▷(b▷c) != (a▷b)▷(a▷c) at (a, b, c) = ({a}, {b}, {c})")
                })))
            })?;
            r.info("n", m.size());
            r.info("class", m.class_name());
            r.info("rack", m.is_rack());
            r.info("quandle", m.is_quandle());
            Ok(Outcome::Report(r))
        }
        MagmaCmd::Enum { n, quandles, iso } => {
            let opts = EnumOptions { quandles_only: quandles, up_to_iso: iso, bound: HARD_ENUM_BOUND };
            let found = enumerate(n, opts)?;
            if ctx.json {
                let mut r = ctx.report();
                r.info("count", found.len());
                let tables: Vec<_> = found.iter().map(|m| m.table().to_rows()).collect();
                r.info("structures", serde_json::json!(tables));
                return Ok(Outcome::Report(r));
            }
            let mut out = format!("# {} structure(s)\n", found.len());
            for m in &found {
                out.push('\n');
                out.push_str(&write_magma(m));
            }
            Ok(Outcome::Artifact(out))
        }
        MagmaCmd::Make { kind } => {
            let m = match kind {
                MagmaKind::Trivial { n } => magma::trivial(n)?,
                MagmaKind::Dihedral { n } => magma::dihedral_quandle(n)?,
                MagmaKind::Conj { group } => magma::conjugation_quandle(&parse_group(&group)?),
                MagmaKind::Core { group } => magma::core_quandle(&parse_group(&group)?),
                MagmaKind::TwistedConj { group, x } => magma::rack_not_quandle(&parse_group(&group)?, x)?,
                MagmaKind::Affine { m, z } => {
                    let b = brace_u2m(m)?;
                    let idx = u2m_index(z, m)
                        .ok_or_else(|| CliError::usage(format!("{z} is not a unit modulo 2^{m}")))?;
                    magma::affine_quandle_table(&b, idx)?
                }
                MagmaKind::Tetrahedron => magma::tetrahedron(),
            };
            Ok(Outcome::Artifact(write_magma(&m)))
        }
    }
}

pub fn brace(ctx: &mut Ctx, cmd: BraceCmd) -> CliResult<Outcome> {
    match cmd {
        BraceCmd::Make { kind } => {
            let b = match kind {
                BraceKind::U2m { m } => brace_u2m(m)?,
                BraceKind::Om => brace_om(),
            };
            Ok(Outcome::Artifact(write_brace(&b)))
        }
        BraceCmd::Check { file, exhaustive } => {
            let (add, mul) = parse_brace_tables(&ctx.read(&file)?)?;
            let n = add.size();
            let mut r = ctx.report();
            r.info("n", n);
            let start = Instant::now();
            let groups = (FiniteGroup::from_table(add), FiniteGroup::from_table(mul));
            let (add, mul) = match groups {
                (Ok(a), Ok(m)) => {
                    r.push_verdict("additive group", Verdict::Pass, start.elapsed(), false);
                    r.push_verdict("multiplicative group", Verdict::Pass, start.elapsed(), false);
                    (a, m)
                }
                (a, m) => {
                    for (name, g) in [("additive group", a.err()), ("multiplicative group", m.err())] {
                        r.push_verdict(name, Verdict::from_witness(g), start.elapsed(), false);
                    }
                    r.skip("skew brace compatibility", "group axioms failed");
                    return Ok(Outcome::Report(r));
                }
            };
            let mode = if exhaustive { Validation::Exhaustive } else { Validation::Auto };
            let start = Instant::now();
            match validate_skew_brace_with(add, mul, mode) {
                Ok(b) => {
                    r.push_verdict("skew brace compatibility", Verdict::Pass, start.elapsed(), false);
                    r.info("brace", b.is_brace());
                    r.info("two_sided", b.is_two_sided());
                }
                Err(ybx_core::Error::BraceAxiom(w)) => {
                    r.push_verdict("skew brace compatibility", Verdict::fail(w), start.elapsed(), false);
                }
                Err(e) => return Err(e.into()),
            }
            r.info("exhaustive", exhaustive || n <= EXHAUSTIVE_LIMIT);
            Ok(Outcome::Report(r))
        }
        BraceCmd::Solution { file, kind, z } => {
            let b = parse_brace(&ctx.read(&file)?)?;
            let s = match kind {
                BraceFamily::Gv => gv_solution(&b),
                BraceFamily::Core => core_twist_solution(&b)?,
                BraceFamily::Affine => {
                    let z = z.ok_or_else(|| CliError::usage("--z is required for the affine family"))?;
                    affine_twist_solution(&b, z)?
                }
            };
            Ok(Outcome::Artifact(write_solution(&s)))
        }
    }
}

pub fn sol(ctx: &mut Ctx, cmd: SolCmd) -> CliResult<Outcome> {
    match cmd {
        SolCmd::Check { file } => {
            let s = parse_solution(&ctx.read(&file)?)?;
            let n = s.size();
            ctx.check_dim("matrix braid check", power(n, 3))?;
            let mut r = ctx.report();
            r.run::<CliError>("braid relation (componentwise)", false, || Ok(s.check_braid()))?;
            r.run::<CliError>("braid relation (matrix)", false, || {
                Ok(check_matrix_braid(&linearize(&s, Form::Braid), n)?)
            })?;
            r.info("n", n);
            r.info("involutive", s.is_involutive());
            r.info("left_nondegenerate", s.is_left_nondegenerate());
            r.info("right_nondegenerate", s.is_right_nondegenerate());
            Ok(Outcome::Report(r))
        }
        SolCmd::Make { kind } => {
            let s = match kind {
                SolKind::Flip { n } => flip(n)?,
                SolKind::Lyu { n, c } => lyubashenko(n, c)?,
                SolKind::Shelf { file, right } => {
                    let m = parse_magma(&ctx.read(&file)?)?;
                    from_shelf(&m, if right { ShelfVariant::Right } else { ShelfVariant::Left })?
                }
                SolKind::Gv { file } => gv_solution(&parse_brace(&ctx.read(&file)?)?),
                SolKind::Affine { file, z } => affine_twist_solution(&parse_brace(&ctx.read(&file)?)?, z)?,
                SolKind::Core { file } => core_twist_solution(&parse_brace(&ctx.read(&file)?)?)?,
            };
            Ok(Outcome::Artifact(write_solution(&s)))
        }
        SolCmd::Invert { file } => {
            let s = parse_solution(&ctx.read(&file)?)?;
            Ok(Outcome::Artifact(write_solution(&s.inverse_solution()?)))
        }
    }
}

pub fn mat(ctx: &mut Ctx, cmd: MatCmd) -> CliResult<Outcome> {
    let MatCmd::Linearize { file, form, out } = cmd;
    let s = parse_solution(&ctx.read(&file)?)?;
    ctx.check_dim("linearized matrix", power(s.size(), 2))?;
    let form = match form {
        FormArg::Braid => Form::Braid,
        FormArg::Ybe => Form::Ybe,
    };
    Ok(Outcome::Artifact(matrix_artifact(&linearize(&s, form), out)))
}
