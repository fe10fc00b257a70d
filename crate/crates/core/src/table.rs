//! Square lookup tables over the carrier `{0, .., n-1}`.
//!
//! Every finite structure in the crate (magma operations, group tables, the
//! component maps of a set-theoretic solution) is one of these. Row `i`,
//! column `j` is stored at `i * n + j`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Table {
    n: usize,
    cells: Vec<usize>,
}

impl Table {
    /// Builds a table from rows, checking shape and that every entry is a
    /// carrier element.
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        let mut cells = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::Shape {
                    n,
                    rows: n,
                    cols: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::EntryOutOfRange {
                        row: i,
                        col: j,
                        value: v,
                        n,
                    });
                }
            }
            cells.extend_from_slice(row);
        }
        Ok(Table { n, cells })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        let mut cells = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let v = f(i, j);
                if v >= n {
                    return Err(Error::EntryOutOfRange {
                        row: i,
                        col: j,
                        value: v,
                        n,
                    });
                }
                cells.push(v);
            }
        }
        Ok(Table { n, cells })
    }

    /// Crate-internal constructor for tables whose entries are in range by
    /// construction.
    pub(crate) fn from_cells(n: usize, cells: Vec<usize>) -> Self {
        debug_assert_eq!(cells.len(), n * n);
        debug_assert!(cells.iter().all(|&v| v < n));
        Table { n, cells }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> usize {
        self.cells[row * self.n + col]
    }

    #[inline]
    pub fn row(&self, row: usize) -> &[usize] {
        &self.cells[row * self.n..(row + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.cells.chunks(self.n)
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.rows().map(<[usize]>::to_vec).collect()
    }

    pub fn row_is_bijective(&self, row: usize) -> bool {
        is_permutation(self.row(row))
    }

    pub fn rows_bijective(&self) -> bool {
        (0..self.n).all(|r| self.row_is_bijective(r))
    }

    /// Inverse of row `row` viewed as a map `col -> entry`, if it is a bijection.
    pub fn row_inverse(&self, row: usize) -> Option<Vec<usize>> {
        invert(self.row(row))
    }

    /// Table whose row `r` is the inverse map of row `r`.
    pub fn row_inverses(&self) -> Option<Table> {
        let mut cells = Vec::with_capacity(self.n * self.n);
        for r in 0..self.n {
            cells.extend(self.row_inverse(r)?);
        }
        Some(Table::from_cells(self.n, cells))
    }

    pub fn transpose(&self) -> Table {
        let n = self.n;
        Table::from_cells(n, (0..n * n).map(|k| self.get(k % n, k / n)).collect())
    }

    /// Relabels the carrier through the bijection `phi`: the result `T'`
    /// satisfies `T'[phi(a)][phi(b)] = phi(T[a][b])`.
    pub fn relabel(&self, phi: &[usize]) -> Table {
        let n = self.n;
        let mut cells = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                cells[phi[a] * n + phi[b]] = phi[self.get(a, b)];
            }
        }
        Table::from_cells(n, cells)
    }
}

impl fmt::Debug for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(usize::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

pub fn is_permutation(xs: &[usize]) -> bool {
    let mut seen = vec![false; xs.len()];
    for &x in xs {
        if x >= xs.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

pub fn invert(xs: &[usize]) -> Option<Vec<usize>> {
    if !is_permutation(xs) {
        return None;
    }
    let mut inv = vec![0; xs.len()];
    for (i, &x) in xs.iter().enumerate() {
        inv[x] = i;
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_ragged_and_out_of_range() {
        assert_eq!(Table::from_rows::<Vec<usize>>(&[]), Err(Error::EmptyCarrier));
        assert!(matches!(
            Table::from_rows(&[vec![0, 1], vec![0]]),
            Err(Error::Shape { .. })
        ));
        assert!(matches!(
            Table::from_rows(&[vec![0, 2], vec![0, 1]]),
            Err(Error::EntryOutOfRange { row: 0, col: 1, value: 2, n: 2 })
        ));
    }

    #[test]
    fn relabel_by_identity_is_noop() {
        let t = Table::from_rows(&[vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]).unwrap();
        assert_eq!(t.relabel(&[0, 1, 2]), t);
        let swapped = t.relabel(&[1, 0, 2]);
        assert_eq!(swapped.relabel(&[1, 0, 2]), t);
    }

    #[test]
    fn row_inverses() {
        let t = Table::from_rows(&[vec![1, 2, 0], vec![0, 1, 2], vec![2, 0, 1]]).unwrap();
        let inv = t.row_inverses().unwrap();
        for r in 0..3 {
            for c in 0..3 {
                assert_eq!(inv.get(r, t.get(r, c)), c);
            }
        }
        let bad = Table::from_rows(&[vec![0, 0], vec![0, 1]]).unwrap();
        assert!(bad.row_inverses().is_none());
    }
}
