//! Plain-text formats for tables, skew braces and solutions.
//!
//! A table is `n=<size>` followed by `n` rows of `n` whitespace-separated
//! 0-based integers. A brace is two tables under the labels `add:` and
//! `mul:`. A solution is `n=<size>` followed by `sigma:` and `tau:` blocks of
//! `n` rows each, with `tau[b][a] = τ_b(a)`. `#` starts a comment; blank
//! lines are ignored.

use std::fmt::Write as _;

use crate::braces::{validate_skew_brace_with, FiniteGroup, SkewBrace, Validation};
use crate::error::{Error, Result};
use crate::magma::Magma;
use crate::settheoretic::STSolution;
use crate::table::Table;

struct Lines<'a> {
    items: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let items = text
            .lines()
            .enumerate()
            .filter_map(|(i, l)| {
                let l = l.split('#').next().unwrap_or("").trim();
                (!l.is_empty()).then_some((i + 1, l))
            })
            .collect();
        Lines { items, pos: 0 }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let item = self.items.get(self.pos).copied().ok_or_else(|| Error::Parse {
            line: self.items.last().map_or(0, |l| l.0),
            msg: format!("unexpected end of input, expected {what}"),
        })?;
        self.pos += 1;
        Ok(item)
    }

    fn expect_label(&mut self, label: &str) -> Result<()> {
        let (line, text) = self.next(label)?;
        if text != label {
            return Err(Error::Parse {
                line,
                msg: format!("expected `{label}`, found `{text}`"),
            });
        }
        Ok(())
    }

    fn size(&mut self) -> Result<usize> {
        let (line, text) = self.next("`n=<size>`")?;
        let value = text
            .strip_prefix('n')
            .map(str::trim_start)
            .and_then(|t| t.strip_prefix('='))
            .ok_or_else(|| Error::Parse {
                line,
                msg: format!("expected `n=<size>`, found `{text}`"),
            })?;
        let n: usize = value.trim().parse().map_err(|_| Error::Parse {
            line,
            msg: format!("invalid size `{}`", value.trim()),
        })?;
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        Ok(n)
    }

    fn rows(&mut self, n: usize) -> Result<Table> {
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let (line, text) = self.next("a table row")?;
            let row = text
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::Parse {
                        line,
                        msg: format!("invalid entry `{t}`"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            if row.len() != n {
                return Err(Error::Parse {
                    line,
                    msg: format!("row has {} entries, expected {n}", row.len()),
                });
            }
            rows.push(row);
        }
        Table::from_rows(&rows)
    }

    fn table(&mut self) -> Result<Table> {
        let n = self.size()?;
        self.rows(n)
    }

    fn finish(&self) -> Result<()> {
        match self.items.get(self.pos) {
            None => Ok(()),
            Some(&(line, text)) => Err(Error::Parse {
                line,
                msg: format!("trailing input `{text}`"),
            }),
        }
    }
}

fn push_rows(out: &mut String, t: &Table) {
    for row in t.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
}

pub fn parse_table(text: &str) -> Result<Table> {
    let mut lines = Lines::new(text);
    let t = lines.table()?;
    lines.finish()?;
    Ok(t)
}

pub fn write_table(t: &Table) -> String {
    let mut out = format!("n={}\n", t.size());
    push_rows(&mut out, t);
    out
}

pub fn parse_magma(text: &str) -> Result<Magma> {
    parse_table(text).map(Magma::new)
}

pub fn write_magma(m: &Magma) -> String {
    write_table(m.table())
}

/// The raw `(add, mul)` tables of a brace file, without validation.
pub fn parse_brace_tables(text: &str) -> Result<(Table, Table)> {
    let mut lines = Lines::new(text);
    lines.expect_label("add:")?;
    let add = lines.table()?;
    lines.expect_label("mul:")?;
    let mul = lines.table()?;
    lines.finish()?;
    if add.size() != mul.size() {
        return Err(Error::Dimension {
            expected: add.size(),
            found: mul.size(),
        });
    }
    Ok((add, mul))
}

pub fn parse_brace_with(text: &str, mode: Validation) -> Result<SkewBrace> {
    let (add, mul) = parse_brace_tables(text)?;
    validate_skew_brace_with(FiniteGroup::from_table(add)?, FiniteGroup::from_table(mul)?, mode)
}

pub fn parse_brace(text: &str) -> Result<SkewBrace> {
    parse_brace_with(text, Validation::Auto)
}

pub fn write_brace(b: &SkewBrace) -> String {
    let mut out = String::from("add:\n");
    out.push_str(&write_table(b.additive_group().table()));
    out.push_str("mul:\n");
    out.push_str(&write_table(b.multiplicative_group().table()));
    out
}

pub fn parse_solution(text: &str) -> Result<STSolution> {
    let mut lines = Lines::new(text);
    let n = lines.size()?;
    lines.expect_label("sigma:")?;
    let sigma = lines.rows(n)?;
    lines.expect_label("tau:")?;
    let tau = lines.rows(n)?;
    lines.finish()?;
    STSolution::from_tables(sigma, tau)
}

pub fn write_solution(s: &STSolution) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n={}", s.size());
    out.push_str("sigma:\n");
    push_rows(&mut out, s.sigma_table());
    out.push_str("tau:\n");
    push_rows(&mut out, s.tau_table());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braces::brace_u2m;
    use crate::magma::dihedral_quandle;
    use crate::settheoretic::lyubashenko;

    #[test]
    fn table_with_comments() {
        let text = "# dihedral\n n = 3 \n0 2 1\n\n2 1 0 # row 1\n1 0 2\n";
        let m = parse_magma(text).unwrap();
        assert_eq!(m, dihedral_quandle(3).unwrap());
        assert_eq!(write_magma(&m), "n=3\n0 2 1\n2 1 0\n1 0 2\n");
    }

    #[test]
    fn parse_errors_carry_lines() {
        let err = parse_table("n=2\n0 1\n1 x\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 3, msg: "invalid entry `x`".into() });
        assert!(matches!(parse_table("n=2\n0 1 0\n1 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_table("n=2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_table("m=2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_table("n=2\n0 1\n1 2\n"), Err(Error::EntryOutOfRange { .. })));
        assert!(matches!(parse_table("n=0\n"), Err(Error::EmptyCarrier)));
        assert!(matches!(parse_table("n=1\n0\n0\n"), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn brace_round_trip() {
        let b = brace_u2m(3).unwrap();
        let text = write_brace(&b);
        assert!(text.starts_with("add:\nn=4\n"));
        let back = parse_brace(&text).unwrap();
        assert_eq!(back.additive_group().table(), b.additive_group().table());
        assert_eq!(back.multiplicative_group().table(), b.multiplicative_group().table());
        assert!(parse_brace("mul:\nn=1\n0\nadd:\nn=1\n0\n").is_err());
    }

    #[test]
    fn non_brace_is_rejected() {
        // Z/4 against itself relabeled by the transposition (2 3)
        let text = "add:\nn=4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n\
                    mul:\nn=4\n0 1 2 3\n1 3 0 2\n2 0 3 1\n3 2 1 0\n";
        assert!(matches!(parse_brace(text), Err(Error::BraceAxiom(_))));
    }

    #[test]
    fn solution_round_trip() {
        let s = lyubashenko(3, 1).unwrap();
        let text = write_solution(&s);
        assert_eq!(text, "n=3\nsigma:\n1 2 0\n1 2 0\n1 2 0\ntau:\n2 0 1\n2 0 1\n2 0 1\n");
        let back = parse_solution(&text).unwrap();
        assert_eq!(back.sigma_table(), s.sigma_table());
        assert_eq!(back.tau_table(), s.tau_table());
        assert!(parse_solution("n=2\ntau:\n0 1\n0 1\nsigma:\n0 1\n0 1\n").is_err());
    }
}
