//! Binary matrices with stable row labels.
//!
//! Rows are stored bit-packed (one [`FixedBitSet`] of width `n` per row).
//! Column labels are always `1..=n`: columns are never deleted anywhere in
//! the pipeline. Row labels are arbitrary distinct positive integers that
//! survive deletion, so a solution computed deep inside a recursion still
//! names rows of the original input.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::sets::RowSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    cols: usize,
    rows: Vec<FixedBitSet>,
    row_ids: Vec<usize>,
    /// `identity_rows[k]` is the label of the row whose single 1 sits in
    /// column `k + 1`. Present only on augmented matrices.
    identity_rows: Option<Vec<usize>>,
}

impl BinaryMatrix {
    /// An `m x n` all-zero matrix with rows labelled `1..=m`.
    pub fn zeros(m: usize, n: usize) -> Self {
        BinaryMatrix {
            cols: n,
            rows: vec![FixedBitSet::with_capacity(n); m],
            row_ids: (1..=m).collect(),
            identity_rows: None,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for (i, row) in m.rows.iter_mut().enumerate() {
            row.insert(i);
        }
        m
    }

    /// Builds a matrix from dense 0/1 rows. Every row must have length `n`.
    pub fn from_dense(n: usize, rows: &[Vec<u8>]) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Domain(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, &cell) in row.iter().enumerate() {
                match cell {
                    0 => {}
                    1 => m.rows[i].insert(j),
                    other => return Err(Error::Domain(format!("entry {other} is not 0 or 1"))),
                }
            }
        }
        Ok(m)
    }

    /// Builds a matrix from the 1-based column sets of each row.
    pub fn from_row_sets(n: usize, rows: &[&[usize]]) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), n);
        for (i, set) in rows.iter().enumerate() {
            for &c in set.iter() {
                if c == 0 || c > n {
                    return Err(Error::UnknownColumn(c));
                }
                m.rows[i].insert(c - 1);
            }
        }
        Ok(m)
    }

    /// Builds a matrix from labelled bit rows. Labels must be distinct.
    pub fn from_labeled_rows(n: usize, rows: Vec<(usize, FixedBitSet)>) -> Result<Self> {
        let mut row_ids = Vec::with_capacity(rows.len());
        let mut bits = Vec::with_capacity(rows.len());
        for (label, mut row) in rows {
            if row_ids.contains(&label) {
                return Err(Error::Domain(format!("duplicate row label {label}")));
            }
            if row.ones().any(|j| j >= n) {
                return Err(Error::Domain(format!(
                    "row {label} is wider than {n} columns"
                )));
            }
            row.grow(n);
            row_ids.push(label);
            bits.push(row);
        }
        Ok(BinaryMatrix {
            cols: n,
            rows: bits,
            row_ids,
            identity_rows: None,
        })
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    /// Row labels in storage order.
    pub fn row_labels(&self) -> &[usize] {
        &self.row_ids
    }

    pub fn column_labels(&self) -> impl Iterator<Item = usize> {
        1..=self.cols
    }

    pub fn identity_rows(&self) -> Option<&[usize]> {
        self.identity_rows.as_deref()
    }

    pub fn is_identity_row(&self, label: usize) -> bool {
        self.identity_rows
            .as_ref()
            .is_some_and(|ids| ids.contains(&label))
    }

    /// Storage index of a row label.
    pub fn index_of(&self, label: usize) -> Option<usize> {
        self.row_ids.iter().position(|&r| r == label)
    }

    /// The bits of the row at storage index `i` (bit `j` is column `j + 1`).
    pub fn row_bits(&self, i: usize) -> &FixedBitSet {
        &self.rows[i]
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &FixedBitSet)> {
        self.row_ids.iter().copied().zip(self.rows.iter())
    }

    pub fn get(&self, row: usize, col: usize) -> Result<bool> {
        let i = self.index_of(row).ok_or(Error::UnknownRow(row))?;
        self.check_column(col)?;
        Ok(self.rows[i].contains(col - 1))
    }

    pub(crate) fn check_column(&self, col: usize) -> Result<()> {
        if col == 0 || col > self.cols {
            Err(Error::UnknownColumn(col))
        } else {
            Ok(())
        }
    }

    /// Storage indices of the rows with a 1 in column `col` (1-based).
    pub(crate) fn column_support_indices(&self, col: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows
            .iter()
            .enumerate()
            .filter(move |(_, r)| r.contains(col - 1))
            .map(|(i, _)| i)
    }

    fn max_label(&self) -> usize {
        self.row_ids.iter().copied().max().unwrap_or(0)
    }

    /// Canonical text form: header then space-separated cells.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.row_count(), self.cols)?;
        if self.cols == 0 {
            return Ok(());
        }
        for row in &self.rows {
            let cells: Vec<&str> = (0..self.cols)
                .map(|j| if row.contains(j) { "1" } else { "0" })
                .collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Parses the matrix file format: `#` comment lines, a header `m n`, then
/// `m` rows of `n` cells. Cells are whitespace-separated or written as one
/// contiguous digit string.
pub fn parse_matrix(text: &str) -> Result<BinaryMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header \"m n\""))?;
    let (m, n) = parse_header(header_line, header)?;

    let mut matrix = BinaryMatrix::zeros(m, n);
    if n > 0 {
        for i in 0..m {
            let (line_no, line) = lines.next().ok_or_else(|| {
                Error::parse(
                    text.lines().count() + 1,
                    format!("expected {m} rows, found {i}"),
                )
            })?;
            parse_row(line_no, line, n, &mut matrix.rows[i])?;
        }
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::parse(
            line_no,
            format!("unexpected content after {m} rows"),
        ));
    }
    Ok(matrix)
}

pub(crate) fn parse_header(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::parse(line_no, "header must be two integers"));
    }
    let a = fields[0]
        .parse()
        .map_err(|_| Error::parse(line_no, format!("invalid count '{}'", fields[0])))?;
    let b = fields[1]
        .parse()
        .map_err(|_| Error::parse(line_no, format!("invalid count '{}'", fields[1])))?;
    Ok((a, b))
}

fn parse_row(line_no: usize, line: &str, n: usize, row: &mut FixedBitSet) -> Result<()> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let cells: Vec<char> = if tokens.len() == 1 && tokens[0].len() == n {
        tokens[0].chars().collect()
    } else {
        let mut cells = Vec::with_capacity(tokens.len());
        for t in &tokens {
            let mut chars = t.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => cells.push(c),
                _ => return Err(Error::parse(line_no, format!("invalid cell '{t}'"))),
            }
        }
        cells
    };
    if let Some(bad) = cells.iter().find(|c| !matches!(c, '0' | '1')) {
        return Err(Error::parse(line_no, format!("invalid cell '{bad}'")));
    }
    if cells.len() != n {
        return Err(Error::parse(
            line_no,
            format!("row has {} cells, expected {n}", cells.len()),
        ));
    }
    for (j, c) in cells.into_iter().enumerate() {
        if c == '1' {
            row.insert(j);
        }
    }
    Ok(())
}

/// `M \ D`: removes the rows in `deleted`; survivors keep their labels and
/// relative order, all columns are retained.
pub fn delete_rows(m: &BinaryMatrix, deleted: &RowSet) -> Result<BinaryMatrix> {
    if let Some(unknown) = deleted.iter().find(|&r| m.index_of(r).is_none()) {
        return Err(Error::UnknownRow(unknown));
    }
    let (row_ids, rows) = m
        .row_ids
        .iter()
        .zip(&m.rows)
        .filter(|(r, _)| !deleted.contains(**r))
        .map(|(&r, bits)| (r, bits.clone()))
        .unzip();
    let identity_rows = m
        .identity_rows
        .as_ref()
        .filter(|ids| ids.iter().all(|&r| !deleted.contains(r)))
        .cloned();
    Ok(BinaryMatrix {
        cols: m.cols,
        rows,
        row_ids,
        identity_rows,
    })
}

/// Stacks an `n x n` identity block above `m`. The identity rows get fresh
/// labels above every existing label, in column order.
pub fn augment(m: &BinaryMatrix) -> BinaryMatrix {
    let base = m.max_label();
    let n = m.cols;
    let identity_ids: Vec<usize> = (base + 1..=base + n).collect();
    let mut rows = BinaryMatrix::identity(n).rows;
    rows.extend(m.rows.iter().cloned());
    let mut row_ids = identity_ids.clone();
    row_ids.extend_from_slice(&m.row_ids);
    BinaryMatrix {
        cols: n,
        rows,
        row_ids,
        identity_rows: Some(identity_ids),
    }
}

/// The row sets `S_i = { j | M_ij = 1 }` over the universe `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    universe: usize,
    sets: Vec<(usize, FixedBitSet)>,
}

impl SetSystem {
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// `(row label, bits)` pairs in row order; bit `j` is element `j + 1`.
    pub fn sets(&self) -> &[(usize, FixedBitSet)] {
        &self.sets
    }

    pub fn get(&self, label: usize) -> Option<&FixedBitSet> {
        self.sets.iter().find(|(l, _)| *l == label).map(|(_, s)| s)
    }

    /// The 1-based elements of the set for row `label`.
    pub fn elements(&self, label: usize) -> Option<Vec<usize>> {
        self.get(label).map(|s| s.ones().map(|j| j + 1).collect())
    }
}

pub fn set_system(m: &BinaryMatrix) -> SetSystem {
    SetSystem {
        universe: m.cols,
        sets: m.rows().map(|(l, bits)| (l, bits.clone())).collect(),
    }
}

/// `supp(c)`: the rows with a 1 in column `c`.
pub fn support(m: &BinaryMatrix, col: usize) -> Result<RowSet> {
    m.check_column(col)?;
    Ok(m.column_support_indices(col)
        .map(|i| m.row_ids[i])
        .collect())
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub const M1_TEXT: &str = "3 8\n1 1 1 1 1 0 0 0\n0 1 0 0 1 1 1 0\n1 0 1 1 0 1 0 1\n";
    pub const M2_TEXT: &str = "3 8\n1 0 1 0 1 1 0 0\n0 1 0 1 0 1 1 0\n1 0 0 0 0 1 0 1\n";

    pub fn m1() -> BinaryMatrix {
        parse_matrix(M1_TEXT).unwrap()
    }

    pub fn m2() -> BinaryMatrix {
        parse_matrix(M2_TEXT).unwrap()
    }

    /// Columns are the four 3-subsets of four rows.
    pub fn m_h4() -> BinaryMatrix {
        let cols: [[usize; 3]; 4] = [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]];
        let mut m = BinaryMatrix::zeros(4, 4);
        for (c, rows) in cols.iter().enumerate() {
            for &r in rows {
                m.rows[r - 1].insert(c);
            }
        }
        m
    }
}
