//! Finite shelves, racks and quandles.
//!
//! `op[a][b]` is `a ▷ b`: the row element acts on the column element.

use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use itertools::Itertools;
use rayon::prelude::*;

use crate::braces::{FiniteGroup, SkewBrace};
use crate::error::{Error, Result};
use crate::table::Table;

/// Default largest carrier for enumeration.
pub const DEFAULT_ENUM_BOUND: usize = 4;
/// Largest carrier enumeration ever accepts.
pub const HARD_ENUM_BOUND: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Class {
    shelf: bool,
    rack: bool,
    quandle: bool,
}

#[derive(Clone)]
pub struct Magma {
    table: Table,
    class: OnceLock<Class>,
}

impl PartialEq for Magma {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl Eq for Magma {}

impl Hash for Magma {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.table.hash(state);
    }
}

impl PartialOrd for Magma {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Magma {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.table.cmp(&other.table)
    }
}

impl fmt::Debug for Magma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Magma").field(&self.table).finish()
    }
}

impl From<Table> for Magma {
    fn from(table: Table) -> Self {
        Magma::new(table)
    }
}

/// First triple `(a, b, c)` with `a▷(b▷c) ≠ (a▷b)▷(a▷c)`.
pub fn self_distributivity_violation(t: &Table) -> Option<(usize, usize, usize)> {
    let n = t.size();
    (0..n)
        .cartesian_product(0..n)
        .cartesian_product(0..n)
        .map(|((a, b), c)| (a, b, c))
        .find(|&(a, b, c)| t.get(a, t.get(b, c)) != t.get(t.get(a, b), t.get(a, c)))
}

impl Magma {
    pub fn new(table: Table) -> Self {
        Magma {
            table,
            class: OnceLock::new(),
        }
    }

    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        Table::from_rows(rows).map(Magma::new)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.table.size()
    }

    /// `a ▷ b`.
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table.get(a, b)
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    fn class(&self) -> Class {
        *self.class.get_or_init(|| {
            let shelf = self_distributivity_violation(&self.table).is_none();
            let rack = shelf && self.table.rows_bijective();
            let quandle = rack && (0..self.size()).all(|a| self.op(a, a) == a);
            Class {
                shelf,
                rack,
                quandle,
            }
        })
    }

    pub fn is_shelf(&self) -> bool {
        self.class().shelf
    }

    pub fn is_rack(&self) -> bool {
        self.class().rack
    }

    pub fn is_quandle(&self) -> bool {
        self.class().quandle
    }

    pub fn shelf_violation(&self) -> Option<(usize, usize, usize)> {
        self_distributivity_violation(&self.table)
    }

    /// True when `a ▷ b = b` everywhere.
    pub fn is_trivial(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| (0..n).all(|b| self.op(a, b) == b))
    }

    /// Human-readable class: "quandle", "rack", "shelf" or "magma".
    pub fn class_name(&self) -> &'static str {
        match self.class() {
            Class { quandle: true, .. } => "quandle",
            Class { rack: true, .. } => "rack",
            Class { shelf: true, .. } => "shelf",
            _ => "magma",
        }
    }

    /// Lexicographically least table among all relabelings.
    pub fn canonical_form(&self) -> Magma {
        canonical_table(&self.table).into()
    }

    pub fn is_isomorphic(&self, other: &Magma) -> bool {
        self.size() == other.size() && canonical_table(&self.table) == canonical_table(&other.table)
    }
}

pub fn canonical_table(t: &Table) -> Table {
    let n = t.size();
    (0..n)
        .permutations(n)
        .map(|phi| t.relabel(&phi))
        .min()
        .expect("at least one permutation")
}

/// The trivial quandle `a ▷ b = b`.
pub fn trivial(n: usize) -> Result<Magma> {
    Table::from_fn(n, |_, b| b).map(Magma::new)
}

/// `i ▷ j = 2i − j mod n`.
pub fn dihedral_quandle(n: usize) -> Result<Magma> {
    Table::from_fn(n, |i, j| (2 * i + n - j) % n).map(Magma::new)
}

/// `a ▷ b = a⁻¹ b a`.
pub fn conjugation_quandle(g: &FiniteGroup) -> Magma {
    Table::from_fn(g.order(), |a, b| g.op(g.op(g.inv(a), b), a))
        .map(Magma::new)
        .expect("group tables are non-empty")
}

/// `a ▷ b = a b⁻¹ a`.
pub fn core_quandle(g: &FiniteGroup) -> Magma {
    Table::from_fn(g.order(), |a, b| g.op(g.op(a, g.inv(b)), a))
        .map(Magma::new)
        .expect("group tables are non-empty")
}

/// `a ▷ b = b a⁻¹ x a`, a rack that is a quandle only in degenerate cases.
pub fn rack_not_quandle(g: &FiniteGroup, x: usize) -> Result<Magma> {
    g.contains(x)?;
    Table::from_fn(g.order(), |a, b| g.op(g.op(g.op(b, g.inv(a)), x), a)).map(Magma::new)
}

/// `a ▷ b = −f(a) + f(b) + a` with `f(a) = a∘z − z`, validated as a quandle.
pub fn affine_quandle_table(b: &SkewBrace, z: usize) -> Result<Magma> {
    b.contains(z)?;
    let n = b.size();
    let f: Vec<usize> = (0..n).map(|a| b.sub(b.circ(a, z), z)).collect();
    let m = Magma::new(Table::from_fn(n, |x, y| {
        b.add(b.add(b.neg(f[x]), f[y]), x)
    })?);
    if let Some((x, y, w)) = m.shelf_violation() {
        return Err(Error::Verification(format!(
            "affine table is not self-distributive at ({x}, {y}, {w})"
        )));
    }
    if !m.is_quandle() {
        return Err(Error::Verification(
            "affine table is not a quandle".into(),
        ));
    }
    Ok(m)
}

/// The four-element tetrahedron quandle.
pub fn tetrahedron() -> Magma {
    Magma::from_rows(&[[0, 2, 3, 1], [3, 1, 0, 2], [1, 3, 2, 0], [2, 0, 1, 3]]).unwrap()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumOptions {
    pub quandles_only: bool,
    pub up_to_iso: bool,
    /// Largest accepted carrier; values above [`HARD_ENUM_BOUND`] are clamped.
    pub bound: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            quandles_only: false,
            up_to_iso: false,
            bound: DEFAULT_ENUM_BOUND,
        }
    }
}

/// All racks on `{0, .., n-1}`, optionally one canonical representative per
/// isomorphism class.
pub fn enumerate_racks(n: usize, up_to_iso: bool) -> Result<Vec<Magma>> {
    enumerate(
        n,
        EnumOptions {
            up_to_iso,
            ..EnumOptions::default()
        },
    )
}

/// Racks (or quandles) on `n` elements, sorted by table. The search fills the
/// table row by row, keeps each row injective and rejects a partial table as
/// soon as a fully assigned instance of self-distributivity fails.
pub fn enumerate(n: usize, opts: EnumOptions) -> Result<Vec<Magma>> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    let bound = opts.bound.min(HARD_ENUM_BOUND);
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "enumeration carrier size",
            value: n,
            bound,
        });
    }
    let first_rows: Vec<Vec<usize>> = (0..n)
        .permutations(n)
        .filter(|p| !opts.quandles_only || p[0] == 0)
        .collect();
    let found: Vec<Vec<usize>> = first_rows
        .into_par_iter()
        .flat_map_iter(|row| {
            let mut search = Search::new(n, opts.quandles_only);
            let mut out = Vec::new();
            if search.seed_row(&row) {
                search.run(n, &mut out);
            }
            out
        })
        .collect();
    let tables: BTreeSet<Table> = found
        .into_iter()
        .map(|cells| Table::from_cells(n, cells))
        .map(|t| if opts.up_to_iso { canonical_table(&t) } else { t })
        .collect();
    Ok(tables.into_iter().map(Magma::new).collect())
}

const UNSET: usize = usize::MAX;

struct Search {
    n: usize,
    quandle: bool,
    cells: Vec<usize>,
    used: Vec<bool>,
}

impl Search {
    fn new(n: usize, quandle: bool) -> Self {
        Search {
            n,
            quandle,
            cells: vec![UNSET; n * n],
            used: vec![false; n * n],
        }
    }

    fn seed_row(&mut self, row: &[usize]) -> bool {
        for (j, &v) in row.iter().enumerate() {
            self.cells[j] = v;
            self.used[v] = true;
        }
        self.consistent()
    }

    fn get(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.n + b]
    }

    /// False if some fully assigned instance of self-distributivity fails.
    fn consistent(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let ab = self.get(a, b);
                if ab == UNSET {
                    continue;
                }
                for c in 0..n {
                    let bc = self.get(b, c);
                    let ac = self.get(a, c);
                    if bc == UNSET || ac == UNSET {
                        continue;
                    }
                    let lhs = self.get(a, bc);
                    let rhs = self.get(ab, ac);
                    if lhs != UNSET && rhs != UNSET && lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, pos: usize, out: &mut Vec<Vec<usize>>) {
        let n = self.n;
        if pos == n * n {
            out.push(self.cells.clone());
            return;
        }
        let (r, c) = (pos / n, pos % n);
        if self.quandle && r == c {
            if self.used[r * n + r] {
                return;
            }
            self.assign(r, r, pos, out);
            return;
        }
        for v in 0..n {
            if self.quandle && v == r {
                continue;
            }
            if !self.used[r * n + v] {
                self.assign(r, v, pos, out);
            }
        }
    }

    fn assign(&mut self, r: usize, v: usize, pos: usize, out: &mut Vec<Vec<usize>>) {
        let n = self.n;
        self.cells[pos] = v;
        self.used[r * n + v] = true;
        if self.consistent() {
            self.run(pos + 1, out);
        }
        self.used[r * n + v] = false;
        self.cells[pos] = UNSET;
    }
}
