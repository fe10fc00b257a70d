//! Finite groups and skew braces.
//!
//! Groups are always stored as full Cayley tables on `{0, .., n-1}`, even
//! when they come from residues or matrices, so that every axiom can be
//! checked by brute force.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::settheoretic::STSolution;
use crate::table::Table;

/// Carriers up to this size are checked exhaustively; larger ones are sampled.
pub const EXHAUSTIVE_LIMIT: usize = 32;
/// Default cap on brace carrier size for the built-in families.
pub const DEFAULT_BRACE_BOUND: usize = 256;
pub const DEFAULT_SAMPLES: usize = 20_000;
pub const DEFAULT_SEED: u64 = 0x5eed_b8ac_e000_0001;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Table,
    identity: usize,
    inv: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a Cayley table: identity, inverses and associativity.
    pub fn from_table(table: Table) -> Result<Self> {
        let n = table.size();
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table.get(e, x) == x && table.get(x, e) == x))
            .ok_or_else(|| Error::InvalidGroup("no two-sided identity".into()))?;
        let mut inv = Vec::with_capacity(n);
        for a in 0..n {
            let b = (0..n)
                .find(|&b| table.get(a, b) == identity && table.get(b, a) == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))?;
            inv.push(b);
        }
        for (a, b, c) in (0..n).cartesian_product(0..n).cartesian_product(0..n).map(|((a, b), c)| (a, b, c)) {
            if table.get(table.get(a, b), c) != table.get(a, table.get(b, c)) {
                return Err(Error::InvalidGroup(format!(
                    "associativity fails at ({a}, {b}, {c})"
                )));
            }
        }
        Ok(FiniteGroup { table, identity, inv })
    }

    /// For tables that are groups by construction (residues, matrix products).
    pub(crate) fn from_trusted(table: Table) -> Self {
        let n = table.size();
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table.get(e, x) == x))
            .expect("trusted group table without identity");
        let inv = (0..n)
            .map(|a| (0..n).find(|&b| table.get(a, b) == identity).expect("trusted group"))
            .collect();
        FiniteGroup { table, identity, inv }
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        let t = Table::from_fn(n, |a, b| (a + b) % n)?;
        Ok(Self::from_trusted(t))
    }

    /// Symmetric group on `k` letters; elements are the permutations in
    /// lexicographic order and `p * q` is `p` after `q`.
    pub fn symmetric(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::EmptyCarrier);
        }
        if k > 5 {
            return Err(Error::BoundExceeded {
                what: "symmetric group degree",
                value: k,
                bound: 5,
            });
        }
        let perms: Vec<Vec<usize>> = (0..k).permutations(k).collect();
        let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let t = Table::from_fn(perms.len(), |a, b| {
            let comp: Vec<usize> = (0..k).map(|i| perms[a][perms[b][i]]).collect();
            index(&comp)
        })?;
        Ok(Self::from_trusted(t))
    }

    /// Dihedral group of order `2m`; element `j*m + i` is `r^i s^j`.
    pub fn dihedral(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::EmptyCarrier);
        }
        let t = Table::from_fn(2 * m, |x, y| {
            let (i, j) = (x % m, x / m);
            let (k, l) = (y % m, y / m);
            let rot = if j == 0 { (i + k) % m } else { (i + m - k) % m };
            ((j + l) % 2) * m + rot
        })?;
        Ok(Self::from_trusted(t))
    }

    /// Direct product; the pair `(a, b)` is element `a * other.order() + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let m = other.order();
        let t = Table::from_fn(self.order() * m, |x, y| {
            self.op(x / m, y / m) * m + other.op(x % m, y % m)
        })
        .expect("product of non-empty groups");
        Self::from_trusted(t)
    }

    /// One representative of every isomorphism class of groups of order at
    /// most `max_order` (supported up to 7).
    pub fn small_groups(max_order: usize) -> Vec<(String, FiniteGroup)> {
        assert!(max_order <= 7, "small group catalogue stops at order 7");
        let mut out = Vec::new();
        for k in 1..=max_order {
            out.push((format!("C{k}"), Self::cyclic(k).unwrap()));
            if k == 4 {
                let c2 = Self::cyclic(2).unwrap();
                out.push(("C2xC2".into(), c2.direct_product(&c2)));
            }
            if k == 6 {
                out.push(("S3".into(), Self::symmetric(3).unwrap()));
            }
        }
        out
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table.get(a, b)
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.table.size()
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn contains(&self, x: usize) -> Result<()> {
        if x < self.order() {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: x,
                n: self.order(),
            })
        }
    }
}

/// How much of a triple-quantified law to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Validation {
    /// Exhaustive up to [`EXHAUSTIVE_LIMIT`], sampled above.
    Auto,
    Exhaustive,
    Sampled { samples: usize, seed: u64 },
}

impl Validation {
    fn resolve(self, n: usize) -> Validation {
        match self {
            Validation::Auto if n <= EXHAUSTIVE_LIMIT => Validation::Exhaustive,
            Validation::Auto => Validation::Sampled {
                samples: DEFAULT_SAMPLES,
                seed: DEFAULT_SEED,
            },
            v => v,
        }
    }

    /// Runs `law` over triples (all of them or a seeded sample) and returns
    /// the first triple on which it fails.
    pub(crate) fn find_triple(
        self,
        n: usize,
        mut law: impl FnMut(usize, usize, usize) -> bool,
    ) -> Option<(usize, usize, usize)> {
        match self.resolve(n) {
            Validation::Sampled { samples, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..samples)
                    .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
                    .find(|&(a, b, c)| !law(a, b, c))
            }
            _ => {
                for a in 0..n {
                    for b in 0..n {
                        for c in 0..n {
                            if !law(a, b, c) {
                                return Some((a, b, c));
                            }
                        }
                    }
                }
                None
            }
        }
    }
}

/// A left skew brace `(X, +, ∘)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewBrace {
    add: FiniteGroup,
    mul: FiniteGroup,
    abelian: bool,
    two_sided: bool,
}

pub fn validate_skew_brace(add: FiniteGroup, mul: FiniteGroup) -> Result<SkewBrace> {
    validate_skew_brace_with(add, mul, Validation::Auto)
}

pub fn validate_skew_brace_with(
    add: FiniteGroup,
    mul: FiniteGroup,
    mode: Validation,
) -> Result<SkewBrace> {
    if add.order() != mul.order() {
        return Err(Error::Dimension {
            expected: add.order(),
            found: mul.order(),
        });
    }
    if add.identity() != mul.identity() {
        return Err(Error::BraceAxiom(format!(
            "additive identity {} differs from multiplicative identity {}",
            add.identity(),
            mul.identity()
        )));
    }
    let n = add.order();
    let left = mode.find_triple(n, |a, b, c| {
        // a∘(b+c) = a∘b − a + a∘c
        mul.op(a, add.op(b, c)) == add.op(add.op(mul.op(a, b), add.inv(a)), mul.op(a, c))
    });
    if let Some((a, b, c)) = left {
        return Err(Error::BraceAxiom(format!(
            "a∘(b+c) != a∘b - a + a∘c at (a, b, c) = ({a}, {b}, {c})"
        )));
    }
    let two_sided = mode
        .find_triple(n, |a, b, c| {
            // (b+c)∘a = b∘a − a + c∘a
            mul.op(add.op(b, c), a) == add.op(add.op(mul.op(b, a), add.inv(a)), mul.op(c, a))
        })
        .is_none();
    let abelian = add.is_abelian();
    Ok(SkewBrace {
        add,
        mul,
        abelian,
        two_sided,
    })
}

impl SkewBrace {
    /// The trivial skew brace with `+ = ∘`.
    pub fn trivial(g: FiniteGroup) -> SkewBrace {
        let abelian = g.is_abelian();
        SkewBrace {
            add: g.clone(),
            mul: g,
            abelian,
            two_sided: true,
        }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.add.order()
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.op(a, b)
    }

    /// Additive inverse `−a`.
    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.add.inv(a)
    }

    /// `a − b`, i.e. `a + (−b)`.
    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add.op(a, self.add.inv(b))
    }

    #[inline]
    pub fn circ(&self, a: usize, b: usize) -> usize {
        self.mul.op(a, b)
    }

    #[inline]
    pub fn circ_inv(&self, a: usize) -> usize {
        self.mul.inv(a)
    }

    /// The shared identity `0 = 1`.
    pub fn identity(&self) -> usize {
        self.add.identity()
    }

    /// True when `+` is abelian, i.e. this is a brace.
    pub fn is_brace(&self) -> bool {
        self.abelian
    }

    pub fn is_two_sided(&self) -> bool {
        self.two_sided
    }

    pub fn additive_group(&self) -> &FiniteGroup {
        &self.add
    }

    pub fn multiplicative_group(&self) -> &FiniteGroup {
        &self.mul
    }

    pub fn contains(&self, x: usize) -> Result<()> {
        self.add.contains(x)
    }

    /// Checks `a∘(b − c + d) = a∘b − a∘c + a∘d`, returning a failing
    /// quadruple. Quadruples are enumerated exhaustively for small carriers
    /// and sampled otherwise.
    pub fn extended_distributivity_violation(
        &self,
        mode: Validation,
    ) -> Option<(usize, usize, usize, usize)> {
        let n = self.size();
        let law = |a: usize, b: usize, c: usize, d: usize| {
            let lhs = self.circ(a, self.add(self.sub(b, c), d));
            let rhs = self.add(self.sub(self.circ(a, b), self.circ(a, c)), self.circ(a, d));
            lhs == rhs
        };
        match mode.resolve(n) {
            Validation::Sampled { samples, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..samples)
                    .map(|_| {
                        (
                            rng.gen_range(0..n),
                            rng.gen_range(0..n),
                            rng.gen_range(0..n),
                            rng.gen_range(0..n),
                        )
                    })
                    .find(|&(a, b, c, d)| !law(a, b, c, d))
            }
            _ => (0..n)
                .cartesian_product(0..n)
                .cartesian_product(0..n)
                .cartesian_product(0..n)
                .map(|(((a, b), c), d)| (a, b, c, d))
                .find(|&(a, b, c, d)| !law(a, b, c, d)),
        }
    }
}

/// Residue represented by element `index` of [`brace_u2m`].
pub fn u2m_residue(index: usize) -> u64 {
    2 * index as u64 + 1
}

/// Carrier index of an odd residue in [`brace_u2m`].
pub fn u2m_index(residue: u64, m: u32) -> Option<usize> {
    let modulus = 1u64 << m;
    let r = residue % modulus;
    (r % 2 == 1).then_some((r / 2) as usize)
}

/// The brace `U(Z/2^m)` with `a +₁ b = a − 1 + b` and `a ∘ b = ab mod 2^m`.
/// Element `i` is the odd residue `2i + 1`.
pub fn brace_u2m(m: u32) -> Result<SkewBrace> {
    brace_u2m_bounded(m, DEFAULT_BRACE_BOUND)
}

pub fn brace_u2m_bounded(m: u32, bound: usize) -> Result<SkewBrace> {
    if m == 0 {
        return Err(Error::precondition("U(Z/2^m) needs m >= 1"));
    }
    if m > 40 || (1usize << (m - 1)) > bound {
        return Err(Error::BoundExceeded {
            what: "brace carrier size",
            value: if m > 40 { usize::MAX } else { 1usize << (m - 1) },
            bound,
        });
    }
    let modulus = 1u64 << m;
    let n = 1usize << (m - 1);
    let idx = |r: u64| ((r % modulus) / 2) as usize;
    let add = Table::from_fn(n, |a, b| {
        idx(u2m_residue(a) + u2m_residue(b) + modulus - 1)
    })?;
    let mul = Table::from_fn(n, |a, b| idx(u2m_residue(a) * u2m_residue(b)))?;
    let add = FiniteGroup::from_trusted(add);
    let mul = FiniteGroup::from_trusted(mul);
    validate_skew_brace(add, mul)
}

const ODD8: [u8; 4] = [1, 3, 5, 7];
const EVEN8: [u8; 4] = [0, 2, 4, 6];

/// Matrix `[[a, b], [c, d]]` over `Z/8` for element `index` of [`brace_om`].
pub fn om_matrix(index: usize) -> [u8; 4] {
    assert!(index < 256);
    [
        ODD8[(index >> 6) & 3],
        EVEN8[(index >> 4) & 3],
        EVEN8[(index >> 2) & 3],
        ODD8[index & 3],
    ]
}

pub fn om_index(m: [u8; 4]) -> Option<usize> {
    let pos = |set: &[u8; 4], v: u8| set.iter().position(|&x| x == v % 8);
    Some(
        (pos(&ODD8, m[0])? << 6)
            | (pos(&EVEN8, m[1])? << 4)
            | (pos(&EVEN8, m[2])? << 2)
            | pos(&ODD8, m[3])?,
    )
}

/// The brace of 2x2 matrices over `Z/8` with odd diagonal and even
/// off-diagonal, `A + B = A − 𝕀 + B`, `A ∘ B = AB`. Elements are ordered
/// lexicographically by `(a, b, c, d)`.
pub fn brace_om() -> SkewBrace {
    brace_om_with(Validation::Auto).expect("OM is a brace")
}

pub fn brace_om_with(mode: Validation) -> Result<SkewBrace> {
    let add = Table::from_fn(256, |x, y| {
        let (p, q) = (om_matrix(x), om_matrix(y));
        om_index([
            (p[0] + q[0] + 7) % 8,
            (p[1] + q[1]) % 8,
            (p[2] + q[2]) % 8,
            (p[3] + q[3] + 7) % 8,
        ])
        .unwrap()
    })?;
    let mul = Table::from_fn(256, |x, y| {
        let (p, q) = (om_matrix(x).map(u32::from), om_matrix(y).map(u32::from));
        let m = [
            (p[0] * q[0] + p[1] * q[2]) % 8,
            (p[0] * q[1] + p[1] * q[3]) % 8,
            (p[2] * q[0] + p[3] * q[2]) % 8,
            (p[2] * q[1] + p[3] * q[3]) % 8,
        ];
        om_index(m.map(|v| v as u8)).unwrap()
    })?;
    validate_skew_brace_with(
        FiniteGroup::from_trusted(add),
        FiniteGroup::from_trusted(mul),
        mode,
    )
}

/// The solution attached to a skew brace: `σ_a(b) = −a + a∘b` and `τ_b(a)`
/// fixed by `a∘b = σ_a(b) ∘ τ_b(a)`.
pub fn sigma_tau_from_brace(b: &SkewBrace) -> STSolution {
    let n = b.size();
    let sigma = Table::from_cells(
        n,
        (0..n * n)
            .map(|k| {
                let (x, y) = (k / n, k % n);
                b.add(b.neg(x), b.circ(x, y))
            })
            .collect(),
    );
    solution_from_sigma(b, sigma)
}

/// Completes a σ table to a solution through the structure-group identity
/// `a∘b = σ_a(b) ∘ τ_b(a)`, i.e. `τ_b(a) = σ_a(b)^{-1} ∘ a ∘ b`.
pub(crate) fn solution_from_sigma(b: &SkewBrace, sigma: Table) -> STSolution {
    let n = b.size();
    let mut tau = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            let s = sigma.get(x, y);
            tau[y * n + x] = b.circ(b.circ(b.circ_inv(s), x), y);
        }
    }
    STSolution::from_tables(sigma, Table::from_cells(n, tau)).expect("same carrier")
}
