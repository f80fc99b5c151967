//! Dense matrices over GF(q).

use std::fmt;
use std::fs;
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use crate::field::{Elem, FieldError, FieldSpec};

#[derive(Debug, Error)]
pub enum MatrixError {
    #[error("matrices are over different fields ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("entry {value} at ({row}, {col}) is not an element of GF({q})")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: u32,
        q: u32,
    },
    #[error("deleting every row or every column leaves an empty matrix")]
    EmptyResult,
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Strictly increasing positions of nonzero entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Support(Vec<usize>);

impl Support {
    pub fn from_sorted(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        Support(indices)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn intersection_len(&self, other: &Support) -> usize {
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }
}

/// Row-major dense matrix over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct GfMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for GfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "GfMatrix over {} ({}x{})",
            self.field, self.rows, self.cols
        )?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.0.to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for GfMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

/// A submatrix together with the original indices of what was kept.
#[derive(Debug, Clone)]
pub struct Submatrix {
    pub matrix: GfMatrix,
    pub kept_rows: Vec<usize>,
    pub kept_cols: Vec<usize>,
}

impl GfMatrix {
    pub fn zeros(field: &FieldSpec, rows: usize, cols: usize) -> Self {
        GfMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    /// All-ones matrix.
    pub fn ones(field: &FieldSpec, rows: usize, cols: usize) -> Self {
        GfMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Elem::ONE; rows * cols],
        }
    }

    pub fn from_fn(
        field: &FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Elem,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        GfMatrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows<R: AsRef<[u32]>>(field: &FieldSpec, rows: &[R]) -> Result<Self, MatrixError> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let q = field.order();
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(MatrixError::Dimension(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            for (j, &v) in r.iter().enumerate() {
                if v >= q {
                    return Err(MatrixError::EntryOutOfRange {
                        row: i,
                        col: j,
                        value: v,
                        q,
                    });
                }
                data.push(Elem(v as u16));
            }
        }
        Ok(GfMatrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        })
    }

    #[inline]
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn entries(&self) -> &[Elem] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<u16>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|e| e.0).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    /// Applies `f` to every entry.
    pub fn map(&self, mut f: impl FnMut(usize, usize, Elem) -> Elem) -> Self {
        Self::from_fn(&self.field, self.rows, self.cols, |i, j| {
            f(i, j, self.get(i, j))
        })
    }

    pub fn scale(&self, c: Elem) -> Self {
        self.map(|_, _, x| self.field.mul(c, x))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    fn check_field(&self, other: &GfMatrix) -> Result<(), MatrixError> {
        if self.field != other.field {
            return Err(MatrixError::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        Ok(())
    }

    pub fn matmul(&self, other: &GfMatrix) -> Result<Self, MatrixError> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(MatrixError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for (l, &a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        let v = f.add(out.get(i, j), f.mul(a, b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &GfMatrix) -> Result<Self, MatrixError> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(MatrixError::Dimension(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        Ok(Self::from_fn(
            &self.field,
            self.rows,
            self.cols + other.cols,
            |i, j| {
                if j < self.cols {
                    self.get(i, j)
                } else {
                    other.get(i, j - self.cols)
                }
            },
        ))
    }

    /// `self` stacked above `other`.
    pub fn vstack(&self, other: &GfMatrix) -> Result<Self, MatrixError> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(MatrixError::Dimension(format!(
                "vstack of {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(GfMatrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Kronecker product with the standard block layout.
    pub fn kronecker(&self, other: &GfMatrix) -> Result<Self, MatrixError> {
        self.check_field(other)?;
        let (br, bc) = (other.rows, other.cols);
        Ok(Self::from_fn(
            &self.field,
            self.rows * br,
            self.cols * bc,
            |i, j| {
                self.field
                    .mul(self.get(i / br, j / bc), other.get(i % br, j % bc))
            },
        ))
    }

    fn check_row(&self, i: usize) -> Result<(), MatrixError> {
        if i >= self.rows {
            return Err(MatrixError::IndexOutOfRange {
                index: i,
                limit: self.rows,
            });
        }
        Ok(())
    }

    fn check_col(&self, j: usize) -> Result<(), MatrixError> {
        if j >= self.cols {
            return Err(MatrixError::IndexOutOfRange {
                index: j,
                limit: self.cols,
            });
        }
        Ok(())
    }

    pub fn row_support(&self, i: usize) -> Result<Support, MatrixError> {
        self.check_row(i)?;
        Ok(Support(
            self.row(i)
                .iter()
                .enumerate()
                .filter(|(_, e)| !e.is_zero())
                .map(|(j, _)| j)
                .collect(),
        ))
    }

    pub fn col_support(&self, j: usize) -> Result<Support, MatrixError> {
        self.check_col(j)?;
        Ok(Support(
            (0..self.rows)
                .filter(|&i| !self.get(i, j).is_zero())
                .collect(),
        ))
    }

    pub fn row_weight(&self, i: usize) -> Result<usize, MatrixError> {
        self.check_row(i)?;
        Ok(self.row(i).iter().filter(|e| !e.is_zero()).count())
    }

    pub fn col_weight(&self, j: usize) -> Result<usize, MatrixError> {
        self.check_col(j)?;
        Ok((0..self.rows)
            .filter(|&i| !self.get(i, j).is_zero())
            .count())
    }

    /// Submatrix of the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(&self.field, rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j])
        })
    }

    pub fn select_cols(&self, cols: &[usize]) -> Self {
        let rows: Vec<usize> = (0..self.rows).collect();
        self.select(&rows, cols)
    }

    /// Removes the listed rows and columns, keeping index maps back to `self`.
    pub fn delete_rows_cols(
        &self,
        rows: &[usize],
        cols: &[usize],
    ) -> Result<Submatrix, MatrixError> {
        for &i in rows {
            self.check_row(i)?;
        }
        for &j in cols {
            self.check_col(j)?;
        }
        let mut drop_row = vec![false; self.rows];
        rows.iter().for_each(|&i| drop_row[i] = true);
        let mut drop_col = vec![false; self.cols];
        cols.iter().for_each(|&j| drop_col[j] = true);
        let kept_rows: Vec<usize> = (0..self.rows).filter(|&i| !drop_row[i]).collect();
        let kept_cols: Vec<usize> = (0..self.cols).filter(|&j| !drop_col[j]).collect();
        if (kept_rows.is_empty() && self.rows > 0) || (kept_cols.is_empty() && self.cols > 0) {
            return Err(MatrixError::EmptyResult);
        }
        Ok(Submatrix {
            matrix: self.select(&kept_rows, &kept_cols),
            kept_rows,
            kept_cols,
        })
    }

    /// Reduced row echelon form: pivots equal one, zeros above and below.
    pub fn rref(&self) -> Self {
        let mut m = self.clone();
        m.rref_in_place();
        m
    }

    /// Returns the pivot columns.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in c..self.cols {
                let v = f.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.sub(self.get(i, j), f.mul(factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Rank, using packed XOR elimination over GF(2).
    pub fn rank(&self) -> usize {
        if self.field.is_binary() {
            BitMatrix::from_gf(self).rank()
        } else {
            self.rank_generic()
        }
    }

    /// Rank by generic elimination regardless of field.
    pub fn rank_generic(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// A basis of the right null space, one vector per row of the result.
    pub fn null_space(&self) -> Self {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let f = &self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Self::zeros(f, free.len(), self.cols);
        for (b, &fc) in free.iter().enumerate() {
            basis.set(b, fc, Elem::ONE);
            for (r, &pc) in pivots.iter().enumerate() {
                basis.set(b, pc, f.neg(m.get(r, fc)));
            }
        }
        basis
    }

    /// `self · v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Elem::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    /// Serializes to the plain text format: a `q rows cols` line, then one
    /// line of space-separated element indices per row.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.field.order(), self.rows, self.cols);
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.0.to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses the text format. Lines starting with `#` are comments. The
    /// field is GF(q) with its default reduction polynomial.
    pub fn parse_text(text: &str) -> Result<Self, MatrixError> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.starts_with('#'))
            .map(|(i, l)| (i + 1, l));

        let (hline, header) = lines.next().ok_or(MatrixError::Parse {
            line: 1,
            column: 1,
            message: "missing `q rows cols` header".into(),
        })?;
        let nums = parse_numbers(hline, header)?;
        if nums.len() != 3 {
            return Err(MatrixError::Parse {
                line: hline,
                column: 1,
                message: format!("header needs 3 integers, found {}", nums.len()),
            });
        }
        let (q, rows, cols) = (nums[0].1, nums[1].1 as usize, nums[2].1 as usize);
        let field = FieldSpec::with_order(q).map_err(|e| MatrixError::Parse {
            line: hline,
            column: nums[0].0,
            message: e.to_string(),
        })?;

        let mut data = Vec::with_capacity(rows * cols);
        let mut last_line = hline;
        for r in 0..rows {
            let (ln, line) = lines.next().ok_or(MatrixError::Parse {
                line: last_line + 1,
                column: 1,
                message: format!("expected {rows} matrix rows, found {r}"),
            })?;
            last_line = ln;
            let entries = parse_numbers(ln, line)?;
            if entries.len() != cols {
                return Err(MatrixError::Parse {
                    line: ln,
                    column: entries.get(cols).map_or(line.len() + 1, |e| e.0),
                    message: format!("expected {cols} entries, found {}", entries.len()),
                });
            }
            for (column, v) in entries {
                if v >= q {
                    return Err(MatrixError::Parse {
                        line: ln,
                        column,
                        message: format!("entry {v} is not in [0, {q})"),
                    });
                }
                data.push(Elem(v as u16));
            }
        }
        if let Some((ln, l)) = lines.find(|(_, l)| !l.trim().is_empty()) {
            return Err(MatrixError::Parse {
                line: ln,
                column: 1,
                message: format!("unexpected trailing content `{}`", l.trim()),
            });
        }
        Ok(GfMatrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Self, MatrixError> {
        Self::parse_text(&fs::read_to_string(path)?)
    }
}

/// Whitespace-separated unsigned integers with their 1-based columns.
fn parse_numbers(line_no: usize, line: &str) -> Result<Vec<(usize, u32)>, MatrixError> {
    let mut out = Vec::new();
    let mut start = None;
    let bytes = line.as_bytes();
    for pos in 0..=bytes.len() {
        let ws = pos == bytes.len() || bytes[pos].is_ascii_whitespace();
        match (start, ws) {
            (None, false) => start = Some(pos),
            (Some(s), true) => {
                let tok = &line[s..pos];
                let v = tok.parse::<u32>().map_err(|_| MatrixError::Parse {
                    line: line_no,
                    column: s + 1,
                    message: format!("`{tok}` is not a non-negative integer"),
                })?;
                out.push((s + 1, v));
                start = None;
            }
            _ => {}
        }
    }
    Ok(out)
}

/// GF(2) matrix with rows packed into 64-bit words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn from_gf(m: &GfMatrix) -> Self {
        assert!(m.field().is_binary(), "packed rows need GF(2)");
        let words = m.cols.div_ceil(64).max(1);
        let mut bits = vec![0u64; m.rows * words];
        for i in 0..m.rows {
            for (j, e) in m.row(i).iter().enumerate() {
                if !e.is_zero() {
                    bits[i * words + j / 64] |= 1 << (j % 64);
                }
            }
        }
        BitMatrix {
            rows: m.rows,
            cols: m.cols,
            words,
            bits,
        }
    }

    pub fn to_gf(&self) -> GfMatrix {
        let f = FieldSpec::binary();
        GfMatrix::from_fn(&f, self.rows, self.cols, |i, j| {
            Elem(((self.bits[i * self.words + j / 64] >> (j % 64)) & 1) as u16)
        })
    }

    pub fn rref(&self) -> Self {
        let mut m = self.clone();
        m.rref_in_place();
        m
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place()
    }

    fn rref_in_place(&mut self) -> usize {
        let w = self.words;
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let (word, bit) = (c / 64, 1u64 << (c % 64));
            let Some(pr) = (r..self.rows).find(|&i| self.bits[i * w + word] & bit != 0) else {
                continue;
            };
            if pr != r {
                for k in 0..w {
                    self.bits.swap(r * w + k, pr * w + k);
                }
            }
            for i in 0..self.rows {
                if i != r && self.bits[i * w + word] & bit != 0 {
                    for k in 0..w {
                        let v = self.bits[r * w + k];
                        self.bits[i * w + k] ^= v;
                    }
                }
            }
            r += 1;
        }
        r
    }
}

/// Scratch space for ranks of many small column subsets of one matrix.
///
/// Results are identical to eliminating `select_cols(cols)` afresh.
pub struct ColumnRank<'a> {
    matrix: &'a GfMatrix,
    scratch: Vec<Elem>,
}

impl<'a> ColumnRank<'a> {
    pub fn new(matrix: &'a GfMatrix) -> Self {
        ColumnRank {
            matrix,
            scratch: Vec::new(),
        }
    }

    pub fn rank_of(&mut self, cols: &[usize]) -> usize {
        let m = self.matrix;
        let f = m.field();
        let (rows, w) = (m.rows(), cols.len());
        self.scratch.clear();
        for i in 0..rows {
            self.scratch.extend(cols.iter().map(|&c| m.get(i, c)));
        }
        let a = &mut self.scratch;
        let mut r = 0;
        for c in 0..w {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| !a[i * w + c].is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..w {
                    a.swap(r * w + j, pr * w + j);
                }
            }
            let inv = f.inv(a[r * w + c]).expect("pivot is nonzero");
            for i in r + 1..rows {
                let factor = f.mul(a[i * w + c], inv);
                if factor.is_zero() {
                    continue;
                }
                for j in c..w {
                    a[i * w + j] = f.sub(a[i * w + j], f.mul(factor, a[r * w + j]));
                }
            }
            r += 1;
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> FieldSpec {
        FieldSpec::with_order(q).unwrap()
    }

    #[test]
    fn rank_basics() {
        assert_eq!(GfMatrix::identity(&gf(5), 5).rank(), 5);
        assert_eq!(GfMatrix::zeros(&gf(5), 3, 4).rank(), 0);
        assert_eq!(GfMatrix::zeros(&gf(2), 3, 4).rank(), 0);
    }

    #[test]
    fn rref_is_canonical() {
        let f = gf(5);
        let m = GfMatrix::from_rows(&f, &[[2, 4, 1], [1, 2, 3], [3, 1, 4]]).unwrap();
        let r = m.rref();
        // first two rows proportional (2·row1 = row0 mod 5 on first two entries only)
        assert_eq!(r.rank_generic(), m.rank());
        for i in 0..r.rows() {
            if let Some(p) = r.row(i).iter().position(|e| !e.is_zero()) {
                assert_eq!(r.get(i, p), Elem::ONE);
                for k in 0..r.rows() {
                    if k != i {
                        assert!(r.get(k, p).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn kronecker_examples() {
        let f = gf(2);
        let k = GfMatrix::identity(&f, 2)
            .kronecker(&GfMatrix::ones(&f, 1, 2))
            .unwrap();
        assert_eq!(k.to_rows(), vec![vec![1, 1, 0, 0], vec![0, 0, 1, 1]]);

        let k = GfMatrix::identity(&f, 3)
            .kronecker(&GfMatrix::ones(&f, 2, 1))
            .unwrap();
        assert_eq!((k.rows(), k.cols()), (6, 3));
        for i in 0..6 {
            for j in 0..3 {
                let expect = u16::from(i == 2 * j || i == 2 * j + 1);
                assert_eq!(k.get(i, j).0, expect);
            }
        }

        let f5 = gf(5);
        let b = GfMatrix::from_rows(&f5, &[[1, 2], [3, 4]]).unwrap();
        let c = GfMatrix::from_rows(&f5, &[[3]]).unwrap();
        assert_eq!(c.kronecker(&b).unwrap(), b.scale(Elem(3)));
        assert!(c.kronecker(&GfMatrix::identity(&f, 1)).is_err());
    }

    #[test]
    fn supports_and_weights() {
        let f = gf(3);
        let m = GfMatrix::from_rows(&f, &[[0, 2, 0, 1], [1, 0, 0, 0]]).unwrap();
        assert_eq!(m.row_support(0).unwrap().as_slice(), &[1, 3]);
        assert_eq!(m.row_weight(1).unwrap(), 1);
        assert_eq!(m.col_weight(2).unwrap(), 0);
        assert!(m.row_weight(2).is_err());
        assert!(m.col_weight(4).is_err());
    }

    #[test]
    fn delete_examples() {
        let f = gf(2);
        let m = GfMatrix::from_rows(&f, &[[1, 0, 1], [0, 1, 1]]).unwrap();
        let same = m.delete_rows_cols(&[], &[]).unwrap();
        assert_eq!(same.matrix, m);
        assert!(matches!(
            m.delete_rows_cols(&[0, 1], &[]),
            Err(MatrixError::EmptyResult)
        ));
        let sub = m.delete_rows_cols(&[0], &[1]).unwrap();
        assert_eq!(sub.matrix.to_rows(), vec![vec![0, 1]]);
        assert_eq!(sub.kept_rows, vec![1]);
        assert_eq!(sub.kept_cols, vec![0, 2]);
    }

    #[test]
    fn text_round_trip_and_errors() {
        let f = gf(5);
        let m = GfMatrix::from_rows(&f, &[[0, 1, 4], [3, 2, 0]]).unwrap();
        let text = m.to_text();
        assert_eq!(text, "5 2 3\n0 1 4\n3 2 0\n");
        assert_eq!(GfMatrix::parse_text(&text).unwrap(), m);
        let with_comment = format!("# a comment\n{text}");
        assert_eq!(GfMatrix::parse_text(&with_comment).unwrap(), m);

        let err = GfMatrix::parse_text("5 2 3\n0 1 4\n3 7 0\n").unwrap_err();
        assert!(
            matches!(
                err,
                MatrixError::Parse {
                    line: 3,
                    column: 3,
                    ..
                }
            ),
            "{err}"
        );
        let err = GfMatrix::parse_text("5 2 3\n0 1\n").unwrap_err();
        assert!(matches!(err, MatrixError::Parse { line: 2, .. }), "{err}");
        let err = GfMatrix::parse_text("6 1 1\n0\n").unwrap_err();
        assert!(
            matches!(
                err,
                MatrixError::Parse {
                    line: 1,
                    column: 1,
                    ..
                }
            ),
            "{err}"
        );
        let err = GfMatrix::parse_text("2 1 2\n0 x\n").unwrap_err();
        assert!(
            matches!(
                err,
                MatrixError::Parse {
                    line: 2,
                    column: 3,
                    ..
                }
            ),
            "{err}"
        );
        let err = GfMatrix::parse_text("2 1 1\n0\n1\n").unwrap_err();
        assert!(matches!(err, MatrixError::Parse { line: 3, .. }), "{err}");
    }

    #[test]
    fn null_space_annihilates() {
        let f = gf(3);
        let m = GfMatrix::from_rows(&f, &[[1, 2, 0, 1], [0, 1, 1, 2]]).unwrap();
        let ns = m.null_space();
        assert_eq!(ns.rows(), 2);
        for b in 0..ns.rows() {
            assert!(m.mul_vec(ns.row(b)).iter().all(|e| e.is_zero()));
        }
    }

    #[test]
    fn column_rank_workspace() {
        let f = gf(4);
        let m =
            GfMatrix::from_rows(&f, &[[1, 2, 3, 0, 1], [0, 1, 1, 2, 3], [1, 3, 2, 2, 2]]).unwrap();
        let mut ws = ColumnRank::new(&m);
        for cols in [
            &[0usize, 1][..],
            &[0, 1, 2],
            &[2, 3, 4],
            &[4],
            &[0, 1, 2, 3, 4],
        ] {
            assert_eq!(ws.rank_of(cols), m.select_cols(cols).rank_generic());
        }
    }
}
