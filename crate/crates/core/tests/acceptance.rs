//! Acceptance suite. Each criterion runs under its own time limit and
//! prints one PASS/FAIL line; the process exits non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ybx_core::baxter::{baxter_pencil, verify, Identity};
use ybx_core::braces::{brace_u2m, u2m_index};
use ybx_core::chain::{
    check_commuting_charges, check_hamiltonian_charges, check_hamiltonian_symmetry, Boundary, ChainSpec,
};
use ybx_core::linalg::{check_matrix_braid, check_matrix_ybe, linearize, permutation_operator, Form};
use ybx_core::magma::{
    affine_quandle_table, canonical_table, conjugation_quandle, dihedral_quandle, enumerate, tetrahedron,
    EnumOptions,
};
use ybx_core::repalgebra::AlgebraRep;
use ybx_core::settheoretic::{flip, from_shelf, lyubashenko, ShelfVariant};
use ybx_core::twist::{build_universal_rep_twists, lyubashenko_from_permutation, twist_solution, FundamentalTwist};
use ybx_core::{ExactMatrix, FiniteGroup, SkewBrace, STSolution, Table};

use common::oracle;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pass_all(label: &str, checks: &[ybx_core::Check]) -> Outcome {
    for c in checks {
        if !c.verdict.is_pass() {
            return Err(format!("{label}: {}: {}", c.name, c.verdict));
        }
    }
    Ok(())
}

fn matrix(rows: [[u8; 9]; 9]) -> ExactMatrix {
    ExactMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
}

fn golden_matrices() -> Outcome {
    let lyu1 = matrix([
        [0, 0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 1],
        [0, 0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 0, 0],
        [1, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 1, 0],
        [0, 1, 0, 0, 0, 0, 0, 0, 0],
    ]);
    let lyu2 = matrix([
        [0, 0, 0, 0, 0, 0, 0, 1, 0],
        [0, 1, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 1],
        [0, 0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 0, 0],
        [1, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, 0, 0],
    ]);
    let dihedral = matrix([
        [1, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 1, 0],
        [0, 0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 0, 0],
        [0, 1, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 1],
    ]);
    let cases = [
        ("lyubashenko(3, 1)", lyubashenko(3, 1).unwrap(), lyu1),
        ("lyubashenko(3, 2)", lyubashenko(3, 2).unwrap(), lyu2),
        (
            "dihedral shelf",
            from_shelf(&dihedral_quandle(3).unwrap(), ShelfVariant::Left).unwrap(),
            dihedral,
        ),
    ];
    for (name, s, expected) in cases {
        let got = linearize(&s, Form::Braid);
        if let Some((i, j)) = got.first_difference(&expected) {
            return Err(format!("{name} differs at ({i}, {j})"));
        }
    }
    Ok(())
}

fn table_goldens() -> Outcome {
    let check = |name: &str, got: &Table, rows: &[[usize; 4]]| {
        let expected: Vec<Vec<usize>> = rows.iter().map(|r| r.to_vec()).collect();
        ensure(got.to_rows() == expected, || format!("{name}: got {:?}", got.to_rows()))
    };
    let d3 = dihedral_quandle(3).unwrap();
    ensure(
        d3.table().to_rows() == vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]],
        || format!("dihedral(3): got {:?}", d3.table().to_rows()),
    )?;
    check(
        "tetrahedron",
        tetrahedron().table(),
        &[[0, 2, 3, 1], [3, 1, 0, 2], [1, 3, 2, 0], [2, 0, 1, 3]],
    )?;
    // U(Z/8) = {1, 3, 5, 7} in index order, z = 3
    let z = u2m_index(3, 3).ok_or("residue 3 not in U(Z/8)")?;
    let affine = affine_quandle_table(&brace_u2m(3).unwrap(), z).map_err(|e| e.to_string())?;
    check(
        "affine(U3, z=3)",
        affine.table(),
        &[[0, 3, 2, 1], [2, 1, 0, 3], [0, 3, 2, 1], [2, 1, 0, 3]],
    )
}

fn conjugation_identity() -> Outcome {
    for n in 2..=6 {
        let p = permutation_operator(n);
        for c in 1..n {
            let lhs = linearize(&lyubashenko(n, n - c).unwrap(), Form::Braid);
            let rhs = &(&p * &linearize(&lyubashenko(n, c).unwrap(), Form::Braid)) * &p;
            ensure(lhs == rhs, || format!("n = {n}, c = {c}"))?;
        }
    }
    Ok(())
}

fn random_candidate(rng: &mut ChaCha8Rng) -> STSolution {
    let n = rng.gen_range(2..=4);
    let mut table = || {
        let cells: Vec<Vec<usize>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..n)).collect()).collect();
        Table::from_rows(&cells).unwrap()
    };
    let sigma = table();
    let tau = table();
    STSolution::from_tables(sigma, tau).unwrap()
}

fn braid_verification() -> Outcome {
    let all = common::builtin_solutions(5);
    ensure(all.len() > 100, || format!("only {} built-ins", all.len()))?;
    for (name, s) in &all {
        ensure(s.check_braid().is_pass(), || format!("{name}: table check {}", s.check_braid()))?;
        let m = linearize(s, Form::Braid);
        let v = check_matrix_braid(&m, s.size()).map_err(|e| e.to_string())?;
        ensure(v.is_pass(), || format!("{name}: matrix check {v}"))?;
        let y = check_matrix_ybe(&linearize(s, Form::Ybe), s.size()).map_err(|e| e.to_string())?;
        ensure(y.is_pass(), || format!("{name}: YBE check {y}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e37_79b9);
    let mut rejected = 0;
    let mut drawn = 0;
    while rejected < 200 {
        drawn += 1;
        let s = random_candidate(&mut rng);
        let truth = composes_braid(&s);
        let table = s.check_braid().is_pass();
        let mat = check_matrix_braid(&linearize(&s, Form::Braid), s.size())
            .map_err(|e| e.to_string())?
            .is_pass();
        ensure(table == truth && mat == truth, || {
            format!("random candidate {drawn}: direct {truth}, table {table}, matrix {mat}")
        })?;
        if !truth {
            rejected += 1;
        }
    }
    Ok(())
}

/// `(ř×1)(1×ř)(ř×1) = (1×ř)(ř×1)(1×ř)` by composing maps on every triple.
fn composes_braid(s: &STSolution) -> bool {
    let n = s.size();
    let first = |(a, b, c): (usize, usize, usize)| {
        let (x, y) = s.apply(a, b);
        (x, y, c)
    };
    let second = |(a, b, c): (usize, usize, usize)| {
        let (y, z) = s.apply(b, c);
        (a, y, z)
    };
    (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| first(second(first((a, b, c)))) == second(first(second((a, b, c)))))
        })
    })
}

fn baxter_identities() -> Outcome {
    let all = common::involutive_solutions(4);
    for (name, s) in &all {
        let p = baxter_pencil(s).map_err(|e| format!("{name}: {e}"))?;
        let checks = verify(&p, &Identity::ALL).map_err(|e| format!("{name}: {e}"))?;
        pass_all(name, &checks)?;
    }
    Ok(())
}

fn brace_solutions_up_to(max_n: usize) -> Vec<(String, STSolution)> {
    let mut braces: Vec<(String, SkewBrace)> = common::u2m_braces(4);
    for (name, g) in FiniteGroup::small_groups(7) {
        braces.push((format!("trivial({name})"), SkewBrace::trivial(g)));
    }
    braces.push(("trivial(C8)".into(), SkewBrace::trivial(FiniteGroup::cyclic(8).unwrap())));
    braces
        .iter()
        .filter(|(_, b)| b.size() <= max_n)
        .flat_map(|(name, b)| common::brace_solutions(name, b))
        .filter(|(_, s)| s.is_involutive())
        .collect()
}

fn twist_reconstruction() -> Outcome {
    let sols = brace_solutions_up_to(8);
    ensure(sols.iter().any(|(_, s)| s.size() == 8), || "no brace solution of size 8".into())?;
    for (name, s) in &sols {
        let n = s.size();
        let f = FundamentalTwist::from_solution(s).map_err(|e| format!("{name}: {e}"))?;
        let twisted = twist_solution(&f, &permutation_operator(n), n).map_err(|e| format!("{name}: {e}"))?;
        ensure(twisted == linearize(s, Form::Braid), || format!("{name}: F𝒫F⁻¹ ≠ ř"))?;
    }
    for n in 2..=6 {
        for c in 1..n {
            let (_, m) = lyubashenko_from_permutation(n, c).map_err(|e| format!("({n}, {c}): {e}"))?;
            ensure(m == linearize(&lyubashenko(n, c).unwrap(), Form::Braid), || {
                format!("one-sided twist ({n}, {c})")
            })?;
        }
    }
    Ok(())
}

fn universal_twists() -> Outcome {
    let sols: Vec<_> = common::builtin_solutions(4)
        .into_iter()
        .filter(|(_, s)| s.is_nondegenerate())
        .collect();
    let mut involutive = 0;
    for (name, s) in &sols {
        let u = build_universal_rep_twists(s).map_err(|e| format!("{name}: {e}"))?;
        let checks = u.checks(s).map_err(|e| format!("{name}: {e}"))?;
        pass_all(name, &checks)?;
        if s.is_involutive() {
            involutive += 1;
            ensure(checks.iter().any(|c| c.name.contains("revers")), || {
                format!("{name}: no reversibility check")
            })?;
        }
    }
    ensure(involutive > 0, || "no involutive family".into())
}

fn algebra_representations() -> Outcome {
    for (name, g) in FiniteGroup::small_groups(6) {
        let q = conjugation_quandle(&g);
        let rep = AlgebraRep::new(q.clone()).map_err(|e| e.to_string())?;
        ensure(rep.check_rack_algebra_relations().is_pass(), || {
            format!("{name}: {}", rep.check_rack_algebra_relations())
        })?;
        for variant in [ShelfVariant::Left, ShelfVariant::Right] {
            let s = from_shelf(&q, variant).map_err(|e| e.to_string())?;
            let dec = rep.clone().decorated(&s).map_err(|e| e.to_string())?;
            let v = dec.check_decorated_relations(&s).map_err(|e| e.to_string())?;
            ensure(v.is_pass(), || format!("{name} {variant:?}: {v}"))?;
        }
        let (r, _) = rep.universal_r_image().map_err(|e| e.to_string())?;
        let v = check_matrix_ybe(&r, g.order()).map_err(|e| e.to_string())?;
        ensure(v.is_pass(), || format!("{name}: universal R image {v}"))?;
        let checks = rep
            .with_group_dot(g)
            .and_then(|r| r.check_quasitriangular())
            .map_err(|e| format!("{name}: {e}"))?;
        pass_all(&name, &checks)?;
    }
    Ok(())
}

fn chain_checks() -> Outcome {
    let sols = common::involutive_solutions(3);
    for (name, s) in &sols {
        let spec = ChainSpec::new(s, 3, Boundary::Periodic).map_err(|e| format!("{name}: {e}"))?;
        let v = check_commuting_charges(&spec).map_err(|e| format!("{name}: {e}"))?;
        ensure(v.is_pass(), || format!("{name}: {v}"))?;
        let v = check_hamiltonian_charges(&spec).map_err(|e| format!("{name}: {e}"))?;
        ensure(v.is_pass(), || format!("{name}: {v}"))?;
    }
    let mut failures = Vec::new();
    for c in 1..3 {
        let s = lyubashenko(3, c).unwrap();
        let spec = ChainSpec::new(&s, 3, Boundary::Open).map_err(|e| e.to_string())?;
        let checks = check_hamiltonian_symmetry(&spec).map_err(|e| e.to_string())?;
        ensure(checks.len() == 2, || format!("c = {c}: periodic clause not evaluated"))?;
        if let Err(e) = pass_all(&format!("lyubashenko(3, {c})"), &checks) {
            failures.push(e);
        }
    }
    // flip: both coproducts are untwisted
    let spec = ChainSpec::new(&flip(3).unwrap(), 3, Boundary::Open).map_err(|e| e.to_string())?;
    if let Err(e) = pass_all("flip(3)", &check_hamiltonian_symmetry(&spec).map_err(|e| e.to_string())?) {
        failures.push(e);
    }
    ensure(failures.is_empty(), || failures.join("; "))
}

fn enumeration_oracle() -> Outcome {
    for n in 1..=3 {
        for quandles_only in [false, true] {
            let kind = if quandles_only { "quandles" } else { "racks" };
            let naive = oracle::all_racks(n, quandles_only);
            let labeled = enumerate(n, EnumOptions { quandles_only, up_to_iso: false, ..EnumOptions::default() })
                .map_err(|e| e.to_string())?;
            let found: BTreeSet<Vec<usize>> = labeled.iter().map(|m| m.table().cells().to_vec()).collect();
            ensure(found.len() == labeled.len(), || format!("n = {n}: duplicate {kind}"))?;
            ensure(found == naive, || {
                format!("n = {n}: {} labeled {kind}, oracle has {}", found.len(), naive.len())
            })?;
            let classes = enumerate(n, EnumOptions { quandles_only, up_to_iso: true, ..EnumOptions::default() })
                .map_err(|e| e.to_string())?;
            let found: BTreeSet<Vec<usize>> = classes.iter().map(|m| m.table().cells().to_vec()).collect();
            let expected = oracle::canonical_classes(n, &naive);
            ensure(found == expected, || {
                format!("n = {n}: {} {kind} classes, oracle has {}", found.len(), expected.len())
            })?;
        }
    }
    for n in 1..=4 {
        for m in enumerate(n, EnumOptions::default()).map_err(|e| e.to_string())? {
            let once = canonical_table(m.table());
            ensure(canonical_table(&once) == once, || format!("n = {n}: canonicalization not idempotent"))?;
            ensure(m.is_isomorphic(&m.canonical_form()), || format!("n = {n}: canonical form not isomorphic"))?;
        }
    }
    Ok(())
}

struct Criterion {
    id: u8,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { id: 1, name: "golden linearized matrices", limit: secs(1), run: golden_matrices },
        Criterion { id: 2, name: "golden operation tables", limit: secs(1), run: table_goldens },
        Criterion { id: 3, name: "shift conjugation by the flip", limit: secs(1), run: conjugation_identity },
        Criterion { id: 4, name: "braid/YBE verifiers on built-ins and random tables", limit: secs(10), run: braid_verification },
        Criterion { id: 5, name: "Baxterization identities", limit: secs(30), run: baxter_identities },
        Criterion { id: 6, name: "twist reconstruction", limit: secs(5), run: twist_reconstruction },
        Criterion { id: 7, name: "universal representation twists", limit: secs(30), run: universal_twists },
        Criterion { id: 8, name: "rack algebra representations", limit: secs(30), run: algebra_representations },
        Criterion { id: 9, name: "spin chain charges and symmetries", limit: secs(60), run: chain_checks },
        Criterion { id: 10, name: "enumeration against brute force", limit: secs(60), run: enumeration_oracle },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= c.limit, || format!("took {elapsed:.2?}, limit {:?}", c.limit))
        });
        match outcome {
            Ok(()) => println!("AC{:<2} PASS  {:<52} {:>9.3?}", c.id, c.name, elapsed),
            Err(why) => {
                failed += 1;
                println!("AC{:<2} FAIL  {:<52} {:>9.3?}  {why}", c.id, c.name, elapsed);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
