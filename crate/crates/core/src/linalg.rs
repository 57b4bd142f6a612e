//! Dense matrices over GF(2), GF(4) and small GF(p^k).
//!
//! GF(2) rows are packed one bit per entry. GF(4) rows are packed as two bit
//! planes: an entry `lo + hi·ω` has its `lo` bit in plane 0 and its `hi` bit
//! in plane 1, so addition is two XORs and scaling by ω is a plane swap plus
//! an XOR. Other fields fall back to one `u16` per entry.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::field::{FieldElement, FieldSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrices are over different fields")]
    FieldMismatch,
    #[error("conjugation is not defined for {0}")]
    ConjugationUnsupported(String),
}

#[derive(Clone, PartialEq, Eq)]
enum Repr {
    Packed {
        planes: usize,
        words: usize,
        data: Vec<u64>,
    },
    Dense(Vec<u16>),
}

/// A `rows × cols` matrix over a finite field.
#[derive(Clone)]
pub struct FieldMatrix {
    field: Arc<FieldSpec>,
    rows: usize,
    cols: usize,
    repr: Repr,
}

impl PartialEq for FieldMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.rows == other.rows
            && self.cols == other.cols
            && self.repr == other.repr
    }
}

impl Eq for FieldMatrix {}

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub matrix: FieldMatrix,
    pub pivots: Vec<usize>,
}

#[inline]
fn words_for(cols: usize) -> usize {
    cols.div_ceil(64)
}

impl FieldMatrix {
    pub fn zeros(field: Arc<FieldSpec>, rows: usize, cols: usize) -> Self {
        let repr = match field.order() {
            2 | 4 => {
                let planes = if field.order() == 2 { 1 } else { 2 };
                let words = words_for(cols);
                Repr::Packed {
                    planes,
                    words,
                    data: vec![0; rows * planes * words],
                }
            }
            _ => Repr::Dense(vec![0; rows * cols]),
        };
        FieldMatrix {
            field,
            rows,
            cols,
            repr,
        }
    }

    pub fn identity(field: Arc<FieldSpec>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    pub fn from_rows(field: Arc<FieldSpec>, rows: &[Vec<FieldElement>]) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch(format!(
                    "row {i} has length {} but row 0 has {cols}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// `(planes, words per plane)` for packed matrices.
    pub fn packing(&self) -> Option<(usize, usize)> {
        match &self.repr {
            Repr::Packed { planes, words, .. } => Some((*planes, *words)),
            Repr::Dense(_) => None,
        }
    }

    /// All packed words of row `r`: plane 0 followed by plane 1 (GF(4)).
    pub fn packed_row(&self, r: usize) -> Option<&[u64]> {
        match &self.repr {
            Repr::Packed {
                planes,
                words,
                data,
            } => {
                let w = planes * words;
                Some(&data[r * w..(r + 1) * w])
            }
            Repr::Dense(_) => None,
        }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        debug_assert!(r < self.rows && c < self.cols);
        match &self.repr {
            Repr::Packed {
                planes,
                words,
                data,
            } => {
                let base = r * planes * words + c / 64;
                let bit = c % 64;
                let mut v = ((data[base] >> bit) & 1) as u16;
                if *planes == 2 {
                    v |= (((data[base + words] >> bit) & 1) as u16) << 1;
                }
                FieldElement(v)
            }
            Repr::Dense(d) => FieldElement(d[r * self.cols + c]),
        }
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        debug_assert!(r < self.rows && c < self.cols);
        let cols = self.cols;
        match &mut self.repr {
            Repr::Packed {
                planes,
                words,
                data,
            } => {
                let base = r * *planes * *words + c / 64;
                let mask = 1u64 << (c % 64);
                for p in 0..*planes {
                    let w = &mut data[base + p * *words];
                    if (v.0 >> p) & 1 == 1 {
                        *w |= mask;
                    } else {
                        *w &= !mask;
                    }
                }
            }
            Repr::Dense(d) => d[r * cols + c] = v.0,
        }
    }

    pub fn row(&self, r: usize) -> Vec<FieldElement> {
        (0..self.cols).map(|c| self.get(r, c)).collect()
    }

    /// Column indices of the nonzero entries of row `r`.
    pub fn row_support(&self, r: usize) -> Vec<usize> {
        (0..self.cols).filter(|&c| !self.get(r, c).is_zero()).collect()
    }

    pub fn row_weight(&self, r: usize) -> usize {
        match self.packed_row(r) {
            Some(words) => {
                let (planes, w) = self.packing().unwrap();
                if planes == 1 {
                    words.iter().map(|x| x.count_ones() as usize).sum()
                } else {
                    (0..w).map(|i| (words[i] | words[w + i]).count_ones() as usize).sum()
                }
            }
            None => (0..self.cols).filter(|&c| !self.get(r, c).is_zero()).count(),
        }
    }

    pub fn column_weight(&self, c: usize) -> usize {
        (0..self.rows).filter(|&r| !self.get(r, c).is_zero()).count()
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Packed { data, .. } => data.iter().all(|&w| w == 0),
            Repr::Dense(d) => d.iter().all(|&v| v == 0),
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        match &mut self.repr {
            Repr::Packed {
                planes,
                words,
                data,
            } => {
                let w = *planes * *words;
                let (lo, hi) = (a.min(b), a.max(b));
                let (first, second) = data.split_at_mut(hi * w);
                first[lo * w..(lo + 1) * w].swap_with_slice(&mut second[..w]);
            }
            Repr::Dense(d) => {
                for c in 0..self.cols {
                    d.swap(a * self.cols + c, b * self.cols + c);
                }
            }
        }
    }

    /// `row[r] *= s`.
    pub fn scale_row(&mut self, r: usize, s: FieldElement) {
        if s == FieldElement::ONE {
            return;
        }
        let field = self.field.clone();
        let cols = self.cols;
        match &mut self.repr {
            Repr::Packed {
                planes,
                words,
                data,
            } => {
                let base = r * *planes * *words;
                let row = &mut data[base..base + *planes * *words];
                if s.is_zero() {
                    row.fill(0);
                } else if *planes == 2 {
                    let (lo, hi) = row.split_at_mut(*words);
                    scale_gf4_planes(lo, hi, s);
                }
            }
            Repr::Dense(d) => {
                for v in &mut d[r * cols..(r + 1) * cols] {
                    *v = field.mul(FieldElement(*v), s).0;
                }
            }
        }
    }

    /// `row[dst] += s · row[src]`.
    pub fn add_scaled_row(&mut self, dst: usize, src: usize, s: FieldElement) {
        if s.is_zero() || dst == src {
            debug_assert!(dst != src || s.is_zero());
            return;
        }
        let field = self.field.clone();
        let cols = self.cols;
        match &mut self.repr {
            Repr::Packed {
                planes,
                words,
                data,
            } => {
                let w = *planes * *words;
                let (d, sr) = if dst < src {
                    let (a, b) = data.split_at_mut(src * w);
                    (&mut a[dst * w..(dst + 1) * w], &b[..w])
                } else {
                    let (a, b) = data.split_at_mut(dst * w);
                    (&mut b[..w], &a[src * w..(src + 1) * w])
                };
                if *planes == 1 {
                    xor_into(d, sr);
                } else {
                    add_scaled_gf4(d, sr, *words, s);
                }
            }
            Repr::Dense(dd) => {
                for c in 0..cols {
                    let x = FieldElement(dd[src * cols + c]);
                    let y = FieldElement(dd[dst * cols + c]);
                    dd[dst * cols + c] = field.add(y, field.mul(s, x)).0;
                }
            }
        }
    }

    /// Reduced row echelon form; pivots are taken as the first nonzero entry
    /// in column order.
    pub fn echelon(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let lead = m.get(r, c);
            let inv = m.field.inv(lead).expect("pivot is nonzero");
            m.scale_row(r, inv);
            for i in 0..m.rows {
                if i != r {
                    let e = m.get(i, c);
                    if !e.is_zero() {
                        let f = m.field.neg(e);
                        m.add_scaled_row(i, r, f);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        // forward elimination only
        let mut m = self.clone();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.field.inv(m.get(r, c)).expect("pivot is nonzero");
            for i in r + 1..m.rows {
                let e = m.get(i, c);
                if !e.is_zero() {
                    let f = m.field.neg(m.field.mul(e, inv));
                    m.add_scaled_row(i, r, f);
                }
            }
            r += 1;
        }
        r
    }

    /// Basis of `{x : M xᵀ = 0}` as the rows of a `(cols - rank) × cols`
    /// matrix.
    pub fn nullspace(&self) -> FieldMatrix {
        let Echelon { matrix: e, pivots } = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = FieldMatrix::zeros(self.field.clone(), free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, FieldElement::ONE);
            for (i, &p) in pivots.iter().enumerate() {
                let v = e.get(i, f);
                if !v.is_zero() {
                    out.set(k, p, self.field.neg(v));
                }
            }
        }
        out
    }

    /// Row-reduced form `[I_r | A]` after moving the pivot columns to the
    /// front. Returns the `rank × cols` reduced matrix and the permutation,
    /// where column `j` of the result is column `perm[j]` of `self`.
    pub fn standard_form(&self) -> (FieldMatrix, Vec<usize>) {
        let Echelon { matrix: e, pivots } = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut perm = pivots.clone();
        perm.extend((0..self.cols).filter(|&c| !is_pivot[c]));
        let mut out = FieldMatrix::zeros(self.field.clone(), pivots.len(), self.cols);
        for i in 0..pivots.len() {
            for (j, &src) in perm.iter().enumerate() {
                out.set(i, j, e.get(i, src));
            }
        }
        (out, perm)
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut t = FieldMatrix::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if !v.is_zero() {
                    t.set(c, r, v);
                }
            }
        }
        t
    }

    /// Entrywise Frobenius conjugate (identity over GF(2)).
    pub fn conjugate(&self) -> Result<FieldMatrix, LinalgError> {
        if self.field.is_gf2() {
            return Ok(self.clone());
        }
        if !self.field.is_gf4() {
            return Err(LinalgError::ConjugationUnsupported(self.field.to_string()));
        }
        let mut out = self.clone();
        if let Repr::Packed { words, data, .. } = &mut out.repr {
            // conj(lo + hi ω) = (lo + hi) + hi ω
            for row in data.chunks_mut(2 * *words) {
                let (lo, hi) = row.split_at_mut(*words);
                for (l, h) in lo.iter_mut().zip(hi.iter()) {
                    *l ^= *h;
                }
            }
        }
        Ok(out)
    }

    pub fn conj_transpose(&self) -> Result<FieldMatrix, LinalgError> {
        Ok(self.conjugate()?.transpose())
    }

    pub fn mul(&self, other: &FieldMatrix) -> Result<FieldMatrix, LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        // row i of the product = Σ_j A[i][j] · row_j(B), built in a matrix
        // holding B's rows under a scratch row.
        let mut out = FieldMatrix::zeros(self.field.clone(), self.rows, other.cols);
        let mut work = FieldMatrix::zeros(self.field.clone(), other.rows + 1, other.cols);
        for j in 0..other.rows {
            work.copy_row_from(j + 1, other, j);
        }
        for i in 0..self.rows {
            work.clear_row(0);
            for j in 0..self.cols {
                let a = self.get(i, j);
                if !a.is_zero() {
                    work.add_scaled_row(0, j + 1, a);
                }
            }
            out.copy_row_from(i, &work, 0);
        }
        Ok(out)
    }

    fn clear_row(&mut self, r: usize) {
        let cols = self.cols;
        match &mut self.repr {
            Repr::Packed {
                planes,
                words,
                data,
            } => {
                let w = *planes * *words;
                data[r * w..(r + 1) * w].fill(0);
            }
            Repr::Dense(d) => d[r * cols..(r + 1) * cols].fill(0),
        }
    }

    fn copy_row_from(&mut self, dst: usize, src: &FieldMatrix, r: usize) {
        debug_assert_eq!(self.cols, src.cols);
        let cols = self.cols;
        match (&mut self.repr, &src.repr) {
            (
                Repr::Packed {
                    planes, words, data, ..
                },
                Repr::Packed { data: sd, .. },
            ) => {
                let w = *planes * *words;
                data[dst * w..(dst + 1) * w].copy_from_slice(&sd[r * w..(r + 1) * w]);
            }
            (Repr::Dense(d), Repr::Dense(sd)) => {
                d[dst * cols..(dst + 1) * cols].copy_from_slice(&sd[r * cols..(r + 1) * cols]);
            }
            _ => unreachable!("same field implies same representation"),
        }
    }

    /// Rows `indices` of `self`, in that order.
    pub fn select_rows(&self, indices: &[usize]) -> FieldMatrix {
        let mut out = FieldMatrix::zeros(self.field.clone(), indices.len(), self.cols);
        for (k, &r) in indices.iter().enumerate() {
            out.copy_row_from(k, self, r);
        }
        out
    }

    /// Columns `indices` of `self`, in that order.
    pub fn select_columns(&self, indices: &[usize]) -> FieldMatrix {
        let mut out = FieldMatrix::zeros(self.field.clone(), self.rows, indices.len());
        for r in 0..self.rows {
            for (k, &c) in indices.iter().enumerate() {
                let v = self.get(r, c);
                if !v.is_zero() {
                    out.set(r, k, v);
                }
            }
        }
        out
    }

    /// `self` on top of `other`.
    pub fn vstack(&self, other: &FieldMatrix) -> Result<FieldMatrix, LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "cannot stack {} columns on {} columns",
                self.cols, other.cols
            )));
        }
        let mut out = FieldMatrix::zeros(self.field.clone(), self.rows + other.rows, self.cols);
        for r in 0..self.rows {
            out.copy_row_from(r, self, r);
        }
        for r in 0..other.rows {
            out.copy_row_from(self.rows + r, other, r);
        }
        Ok(out)
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &FieldMatrix) -> Result<FieldMatrix, LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch);
        }
        if self.rows != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "cannot join {} rows with {} rows",
                self.rows, other.rows
            )));
        }
        let mut out = FieldMatrix::zeros(self.field.clone(), self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c));
            }
        }
        Ok(out)
    }

    /// True iff every row of `other` lies in the row space of `self`.
    pub fn rowspace_contains(&self, other: &FieldMatrix) -> Result<bool, LinalgError> {
        let stacked = self.vstack(other)?;
        Ok(stacked.rank() == self.rank())
    }

    /// Indices of `k` linearly independent rows: the first `k` rows when they
    /// are independent, otherwise a greedy scan in row order. `None` when the
    /// rank is below `k`.
    pub fn independent_rows(&self, k: usize) -> Option<Vec<usize>> {
        if k > self.rows {
            return None;
        }
        let first: Vec<usize> = (0..k).collect();
        if self.select_rows(&first).rank() == k {
            return Some(first);
        }
        let mut chosen: Vec<usize> = Vec::with_capacity(k);
        let mut basis = FieldMatrix::zeros(self.field.clone(), 0, self.cols);
        for r in 0..self.rows {
            let candidate = basis.vstack(&self.select_rows(&[r])).expect("same shape");
            if candidate.rank() > chosen.len() {
                chosen.push(r);
                basis = candidate.echelon().matrix;
                if chosen.len() == k {
                    return Some(chosen);
                }
            }
        }
        None
    }

    /// Space-separated rows using the field's symbols (`0 1 w W` for GF(4)).
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.field.symbol(self.get(r, c))).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }
}

impl fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FieldMatrix {}x{} over {}", self.rows, self.cols, self.field)?;
        write!(f, "{}", self.to_text())
    }
}

#[inline]
fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= *s;
    }
}

/// Multiplies a GF(4) vector stored as `lo + hi·ω` planes by `s` in place.
#[inline]
pub(crate) fn scale_gf4_planes(lo: &mut [u64], hi: &mut [u64], s: FieldElement) {
    match s.0 {
        1 => {}
        // (lo + hi ω) ω = hi + (lo + hi) ω
        2 => {
            for (l, h) in lo.iter_mut().zip(hi.iter_mut()) {
                let (a, b) = (*l, *h);
                *l = b;
                *h = a ^ b;
            }
        }
        // (lo + hi ω) ω² = (lo + hi) + lo ω
        3 => {
            for (l, h) in lo.iter_mut().zip(hi.iter_mut()) {
                let (a, b) = (*l, *h);
                *l = a ^ b;
                *h = a;
            }
        }
        _ => {
            lo.fill(0);
            hi.fill(0);
        }
    }
}

#[inline]
fn add_scaled_gf4(dst: &mut [u64], src: &[u64], words: usize, s: FieldElement) {
    let (dl, dh) = dst.split_at_mut(words);
    let (sl, sh) = src.split_at(words);
    for i in 0..words {
        let (a, b) = (sl[i], sh[i]);
        let (x, y) = match s.0 {
            1 => (a, b),
            2 => (b, a ^ b),
            3 => (a ^ b, a),
            _ => (0, 0),
        };
        dl[i] ^= x;
        dh[i] ^= y;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{OMEGA, OMEGA2};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf2() -> Arc<FieldSpec> {
        Arc::new(FieldSpec::gf2())
    }

    fn gf4() -> Arc<FieldSpec> {
        Arc::new(FieldSpec::gf4())
    }

    fn random(field: &Arc<FieldSpec>, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> FieldMatrix {
        let mut m = FieldMatrix::zeros(field.clone(), rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, FieldElement(rng.gen_range(0..field.order()) as u16));
            }
        }
        m
    }

    fn from_bits(rows: &[&str]) -> FieldMatrix {
        let f = gf2();
        let rows: Vec<Vec<FieldElement>> = rows
            .iter()
            .map(|r| r.bytes().map(|b| FieldElement((b - b'0') as u16)).collect())
            .collect();
        FieldMatrix::from_rows(f, &rows).unwrap()
    }

    #[test]
    fn identity_rank_and_nullspace() {
        for f in [gf2(), gf4(), Arc::new(FieldSpec::new(3, 1).unwrap())] {
            let i = FieldMatrix::identity(f.clone(), 70);
            assert_eq!(i.rank(), 70);
            assert_eq!(i.nullspace().rows(), 0);
            let z = FieldMatrix::zeros(f.clone(), 5, 5);
            assert_eq!(z.rank(), 0);
            assert_eq!(z.nullspace(), FieldMatrix::identity(f, 5));
        }
    }

    #[test]
    fn hamming_block_rank() {
        // [[I, B], [B, I]] with B the circulant of (0,1,1,1): B² = I
        let m = from_bits(&[
            "10000111", "01001011", "00101101", "00011110", "01111000", "10110100", "11010010",
            "11100001",
        ]);
        assert_eq!(m.rank(), 4);
        let g = m.select_rows(&[0, 1, 2, 3]);
        let n = g.nullspace();
        assert_eq!(n.rows(), 4);
        // self-dual: null space spans the same space as (I, B)
        assert!(g.rowspace_contains(&n).unwrap());
        assert!(n.rowspace_contains(&g).unwrap());
        let (s, perm) = g.standard_form();
        assert_eq!(s, g);
        assert_eq!(perm, (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn standard_form_moves_pivots_first() {
        let m = from_bits(&["0110", "0011", "0101"]);
        let (s, perm) = m.standard_form();
        assert_eq!(s.rows(), 2);
        assert_eq!(perm, vec![1, 2, 0, 3]);
        assert_eq!(s.select_columns(&[0, 1]), FieldMatrix::identity(gf2(), 2));
        assert!(m.rowspace_contains(&s.select_columns(&[2, 0, 1, 3])).unwrap());
    }

    #[test]
    fn nullspace_rows_annihilate() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for f in [gf2(), gf4(), Arc::new(FieldSpec::new(5, 1).unwrap())] {
            for _ in 0..20 {
                let rows = rng.gen_range(1..20);
                let cols = rng.gen_range(1..90);
                let m = random(&f, rows, cols, &mut rng);
                let n = m.nullspace();
                assert_eq!(n.rows(), cols - m.rank());
                assert!(m.mul(&n.transpose()).unwrap().is_zero());
                assert_eq!(n.rank(), n.rows());
            }
        }
    }

    #[test]
    fn multiplication_matches_entrywise_definition() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for f in [gf2(), gf4(), Arc::new(FieldSpec::new(3, 2).unwrap())] {
            let a = random(&f, 7, 70, &mut rng);
            let b = random(&f, 70, 9, &mut rng);
            let p = a.mul(&b).unwrap();
            for i in 0..7 {
                for j in 0..9 {
                    let mut acc = FieldElement::ZERO;
                    for k in 0..70 {
                        acc = f.add(acc, f.mul(a.get(i, k), b.get(k, j)));
                    }
                    assert_eq!(p.get(i, j), acc);
                }
            }
        }
        assert!(FieldMatrix::zeros(gf2(), 2, 3)
            .mul(&FieldMatrix::zeros(gf2(), 2, 3))
            .is_err());
    }

    #[test]
    fn gf4_scaling_planes() {
        let f = gf4();
        for s in f.elements() {
            for x in f.elements() {
                let mut m = FieldMatrix::zeros(f.clone(), 1, 3);
                m.set(0, 1, x);
                m.scale_row(0, s);
                assert_eq!(m.get(0, 1), f.mul(x, s));
            }
        }
    }

    #[test]
    fn conj_transpose_is_an_involution() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let m = random(&gf4(), 6, 10, &mut rng);
        let back = m.conj_transpose().unwrap().conj_transpose().unwrap();
        assert_eq!(back, m);
        let mut w = FieldMatrix::zeros(gf4(), 1, 2);
        w.set(0, 0, OMEGA);
        let c = w.conj_transpose().unwrap();
        assert_eq!(c.get(0, 0), OMEGA2);
        assert!(FieldMatrix::zeros(Arc::new(FieldSpec::new(3, 1).unwrap()), 1, 1)
            .conjugate()
            .is_err());
    }

    #[test]
    fn rank_inequalities() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..50 {
            let n = rng.gen_range(1..=32);
            let a = random(&gf2(), n, n, &mut rng);
            let mut b = random(&gf2(), n, n, &mut rng);
            // lower the rank of b now and then
            for r in 0..rng.gen_range(0..n) {
                b.clear_row(r);
            }
            let (ra, rb, rab) = (a.rank(), b.rank(), a.mul(&b).unwrap().rank());
            assert!(rab <= ra.min(rb));
            assert!(rab + n >= ra + rb);
        }
    }

    #[test]
    fn independent_rows_falls_back_to_greedy() {
        let m = from_bits(&["1100", "1100", "0011", "1111"]);
        assert_eq!(m.independent_rows(2), Some(vec![0, 2]));
        assert_eq!(m.independent_rows(3), None);
        assert_eq!(m.independent_rows(1), Some(vec![0]));
    }

    #[test]
    fn rowspace_containment() {
        let g = from_bits(&["1100", "0011"]);
        assert!(g.rowspace_contains(&g).unwrap());
        assert!(g.rowspace_contains(&from_bits(&["1111"])).unwrap());
        assert!(!g.rowspace_contains(&from_bits(&["1000"])).unwrap());
        assert!(g.rowspace_contains(&from_bits(&["10"])).is_err());
    }
}
