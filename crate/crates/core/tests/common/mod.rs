//! Helpers shared by the integration suites: the catalogue of built-in
//! solutions and a brute-force rack oracle that does not touch the
//! enumeration code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use ybx_core::braces::brace_u2m;
use ybx_core::magma::{
    affine_quandle_table, conjugation_quandle, core_quandle, dihedral_quandle, rack_not_quandle,
    tetrahedron, trivial,
};
use ybx_core::settheoretic::{
    affine_twist_solution, core_twist_solution, flip, from_shelf, gv_solution, lyubashenko, ShelfVariant,
};
use ybx_core::{FiniteGroup, Magma, SkewBrace, STSolution};

/// Every magma constructor instantiated on carriers of size at most `max_n`.
pub fn builtin_magmas(max_n: usize) -> Vec<(String, Magma)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push((format!("trivial({n})"), trivial(n).unwrap()));
        out.push((format!("dihedral({n})"), dihedral_quandle(n).unwrap()));
    }
    for (name, g) in FiniteGroup::small_groups(max_n) {
        out.push((format!("conj({name})"), conjugation_quandle(&g)));
        out.push((format!("core({name})"), core_quandle(&g)));
        for x in 0..g.order() {
            if let Ok(m) = rack_not_quandle(&g, x) {
                out.push((format!("twisted_conj({name}, {x})"), m));
            }
        }
    }
    for m in 1..=3u32 {
        let b = brace_u2m(m).unwrap();
        if b.size() > max_n {
            continue;
        }
        for z in 0..b.size() {
            if let Ok(q) = affine_quandle_table(&b, z) {
                out.push((format!("affine(U{m}, {z})"), q));
            }
        }
    }
    if max_n >= 4 {
        out.push(("tetrahedron".into(), tetrahedron()));
    }
    out
}

pub fn u2m_braces(max_m: u32) -> Vec<(String, SkewBrace)> {
    (1..=max_m).map(|m| (format!("U{m}"), brace_u2m(m).unwrap())).collect()
}

/// gv, affine (every admissible z) and core solutions of a brace.
pub fn brace_solutions(name: &str, b: &SkewBrace) -> Vec<(String, STSolution)> {
    let mut out = vec![(format!("gv({name})"), gv_solution(b))];
    for z in 0..b.size() {
        if let Ok(s) = affine_twist_solution(b, z) {
            out.push((format!("affine({name}, {z})"), s));
        }
    }
    if let Ok(s) = core_twist_solution(b) {
        out.push((format!("core({name})"), s));
    }
    out
}

/// Shelf solutions of every magma constructor, flips, Lyubashenko
/// solutions and brace solutions from U(Z/2^m), all of size at most `max_n`.
pub fn builtin_solutions(max_n: usize) -> Vec<(String, STSolution)> {
    let mut out = Vec::new();
    for (name, m) in builtin_magmas(max_n) {
        out.push((format!("left_shelf({name})"), from_shelf(&m, ShelfVariant::Left).unwrap()));
        out.push((format!("right_shelf({name})"), from_shelf(&m, ShelfVariant::Right).unwrap()));
    }
    for n in 1..=max_n {
        out.push((format!("flip({n})"), flip(n).unwrap()));
        for c in 1..n {
            out.push((format!("lyubashenko({n}, {c})"), lyubashenko(n, c).unwrap()));
        }
    }
    for (name, b) in u2m_braces(3) {
        if b.size() <= max_n {
            out.extend(brace_solutions(&name, &b));
        }
    }
    out
}

pub fn involutive_solutions(max_n: usize) -> Vec<(String, STSolution)> {
    builtin_solutions(max_n)
        .into_iter()
        .filter(|(_, s)| s.is_involutive())
        .collect()
}

/// Brute-force rack oracle over raw cell vectors, `op[a][b] = cells[a*n+b]`.
pub mod oracle {
    use super::*;

    fn bijective(row: &[usize]) -> bool {
        let mut seen = vec![false; row.len()];
        row.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
    }

    pub fn is_rack(n: usize, cells: &[usize]) -> bool {
        let op = |a: usize, b: usize| cells[a * n + b];
        (0..n).all(|a| bijective(&cells[a * n..(a + 1) * n]))
            && (0..n).all(|a| {
                (0..n).all(|b| (0..n).all(|c| op(a, op(b, c)) == op(op(a, b), op(a, c))))
            })
    }

    pub fn is_quandle(n: usize, cells: &[usize]) -> bool {
        (0..n).all(|a| cells[a * n + a] == a)
    }

    /// Lexicographically least relabeling `p(op(a, b)) = op'(p a, p b)`.
    pub fn canonical(n: usize, cells: &[usize]) -> Vec<usize> {
        (0..n)
            .permutations(n)
            .map(|p| {
                let mut out = vec![0; n * n];
                for a in 0..n {
                    for b in 0..n {
                        out[p[a] * n + p[b]] = p[cells[a * n + b]];
                    }
                }
                out
            })
            .min()
            .unwrap()
    }

    /// Every table on `n` points, filtered.
    pub fn all_racks(n: usize, quandles_only: bool) -> BTreeSet<Vec<usize>> {
        (0..n * n)
            .map(|_| 0..n)
            .multi_cartesian_product()
            .filter(|cells| is_rack(n, cells) && (!quandles_only || is_quandle(n, cells)))
            .collect()
    }

    pub fn canonical_classes(n: usize, racks: &BTreeSet<Vec<usize>>) -> BTreeSet<Vec<usize>> {
        racks.iter().map(|c| canonical(n, c)).collect()
    }
}
