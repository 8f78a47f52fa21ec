use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// An `n × n` table over `{0..n}`; `get(i, j)` is `i ∘ j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OperationTable {
    n: usize,
    cells: Vec<usize>,
}

impl OperationTable {
    /// Rows of 0-based entries.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        let mut cells = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::format(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::format(format!(
                        "cell ({},{}) = {} out of range 1..{n}",
                        i + 1,
                        j + 1,
                        v + 1
                    )));
                }
                cells.push(v);
            }
        }
        Ok(OperationTable { n, cells })
    }

    /// Rows of 1-based entries, as written in tables on paper.
    pub fn from_one_based(rows: &[Vec<usize>]) -> Result<Self> {
        let mut shifted = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let mut r = Vec::with_capacity(row.len());
            for (j, &v) in row.iter().enumerate() {
                if v == 0 {
                    return Err(Error::format(format!(
                        "cell ({},{}) = 0; labels are 1-based",
                        i + 1,
                        j + 1
                    )));
                }
                r.push(v - 1);
            }
            shifted.push(r);
        }
        OperationTable::from_rows(&shifted)
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut cells = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let v = f(i, j);
                assert!(v < n, "table entry {v} out of range for order {n}");
                cells.push(v);
            }
        }
        OperationTable { n, cells }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.cells[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells.chunks(self.n.max(1)).take(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn rows_one_based(&self) -> Vec<Vec<usize>> {
        self.rows()
            .into_iter()
            .map(|r| r.into_iter().map(|v| v + 1).collect())
            .collect()
    }

    /// The map `x ↦ x ∘ y`, i.e. column `y`.
    pub fn column(&self, y: usize) -> Vec<usize> {
        (0..self.n).map(|x| self.get(x, y)).collect()
    }

    /// Column `y` as a permutation, if it is one.
    pub fn column_perm(&self, y: usize) -> Option<Permutation> {
        Permutation::new(self.column(y)).ok()
    }

    /// The table of `φ(x) ∘' φ(y) = φ(x ∘ y)`, i.e. `self` relabelled by `φ`.
    pub fn relabel(&self, phi: &Permutation) -> OperationTable {
        assert_eq!(phi.degree(), self.n);
        let inv = phi.inverse();
        OperationTable::from_fn(self.n, |a, b| phi.apply(self.get(inv.apply(a), inv.apply(b))))
    }

    /// Plain text: first line `n`, then `n` rows of 1-based entries.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}", self.n);
        for row in self.rows_one_based() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(s, "{}", cells.join(" "));
        }
        s
    }
}

/// Splits text into blocks separated by blank lines, dropping `#` comment
/// lines. Each block is a list of `(line number, line)`.
pub(crate) fn blocks(text: &str) -> Vec<Vec<(usize, &str)>> {
    let mut out: Vec<Vec<(usize, &str)>> = Vec::new();
    let mut cur: Vec<(usize, &str)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.starts_with('#') {
            continue;
        }
        if t.is_empty() {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
            continue;
        }
        cur.push((i + 1, t));
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| Error::format(format!("line {line}: expected an integer, got `{tok}`")))
}

/// Parses one table block; the block may be followed by more lines, which are
/// returned unconsumed.
pub(crate) fn parse_table_lines<'a>(
    lines: &'a [(usize, &'a str)],
) -> Result<(OperationTable, &'a [(usize, &'a str)])> {
    let Some(&(ln, header)) = lines.first() else {
        return Err(Error::format("missing table"));
    };
    let n = parse_usize(header, ln)?;
    if lines.len() < n + 1 {
        return Err(Error::format(format!(
            "line {ln}: table of order {n} needs {n} rows, found {}",
            lines.len() - 1
        )));
    }
    let mut rows = Vec::with_capacity(n);
    for &(ln, line) in &lines[1..=n] {
        let row: Vec<usize> = line
            .split_whitespace()
            .map(|t| parse_usize(t, ln))
            .collect::<Result<_>>()?;
        if row.len() != n {
            return Err(Error::format(format!(
                "line {ln}: expected {n} entries, found {}",
                row.len()
            )));
        }
        if let Some(&bad) = row.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::format(format!(
                "line {ln}: entry {bad} out of range 1..{n}"
            )));
        }
        rows.push(row);
    }
    Ok((OperationTable::from_one_based(&rows)?, &lines[n + 1..]))
}

/// Parses a file holding exactly one table.
pub fn parse_table(text: &str) -> Result<OperationTable> {
    let bl = blocks(text);
    match bl.as_slice() {
        [one] => {
            let (t, rest) = parse_table_lines(one)?;
            if let Some(&(ln, _)) = rest.first() {
                return Err(Error::format(format!("line {ln}: trailing data after table")));
            }
            Ok(t)
        }
        [] => Err(Error::format("empty input")),
        _ => Err(Error::format(format!("expected one table block, found {}", bl.len()))),
    }
}

/// Parses a file holding tables separated by blank lines.
pub fn parse_tables(text: &str) -> Result<Vec<OperationTable>> {
    let mut out = Vec::new();
    for block in blocks(text) {
        let (t, rest) = parse_table_lines(&block)?;
        if let Some(&(ln, _)) = rest.first() {
            return Err(Error::format(format!("line {ln}: trailing data after table")));
        }
        out.push(t);
    }
    if out.is_empty() {
        return Err(Error::format("empty input"));
    }
    Ok(out)
}
