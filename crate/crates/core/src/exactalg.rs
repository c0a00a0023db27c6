//! Dense exact linear algebra over a prime field `F_p`.
//!
//! Every rank, kernel and cokernel in the crate is computed here. Entries are
//! stored as reduced residues in `u32`; products are formed in `u64` and
//! brought back with a Barrett reduction, so the modulus can be any prime
//! below `2^31`.

use std::fmt::Write as _;
use std::io::BufRead;

use rand::Rng;

use crate::error::{Error, Result};

/// Residue class modulo the active prime, always kept in `0..p`.
pub type FieldElem = u32;

pub const DEFAULT_PRIME: u32 = 32003;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
    barrett: u64,
}

impl Default for PrimeField {
    fn default() -> Self {
        Self::new(DEFAULT_PRIME as u64).expect("default prime is valid")
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// Characteristics 2 and 3 are refused.
    pub fn new(p: u64) -> Result<Self> {
        if p <= 3 || p >= (1 << 31) || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(Self {
            p: p as u32,
            barrett: u64::MAX / p,
        })
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline(always)]
    pub fn reduce(&self, x: u64) -> FieldElem {
        let q = ((x as u128 * self.barrett as u128) >> 64) as u64;
        let mut r = x.wrapping_sub(q.wrapping_mul(self.p as u64));
        if r >= self.p as u64 {
            r -= self.p as u64;
        }
        r as FieldElem
    }

    pub fn from_i64(&self, x: i64) -> FieldElem {
        x.rem_euclid(self.p as i64) as FieldElem
    }

    /// Symmetric lift to `(-p/2, p/2]`.
    pub fn to_i64(&self, x: FieldElem) -> i64 {
        let x = x as i64;
        if x > self.p as i64 / 2 {
            x - self.p as i64
        } else {
            x
        }
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let s = a as u64 + b as u64;
        if s >= self.p as u64 {
            (s - self.p as u64) as FieldElem
        } else {
            s as FieldElem
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.reduce(a as u64 * b as u64)
    }

    pub fn pow(&self, mut base: FieldElem, mut exp: u64) -> FieldElem {
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Panics on zero.
    pub fn inv(&self, a: FieldElem) -> FieldElem {
        assert!(a != 0, "inverse of zero");
        self.pow(a, self.p as u64 - 2)
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElem {
        rng.gen_range(0..self.p)
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElem {
        rng.gen_range(1..self.p)
    }

    /// `dst += factor * src`, entrywise.
    #[inline]
    fn axpy(&self, dst: &mut [FieldElem], src: &[FieldElem], factor: FieldElem) {
        let f = factor as u64;
        for (d, &s) in dst.iter_mut().zip(src) {
            *d = self.reduce(*d as u64 + f * s as u64);
        }
    }
}

/// Row-major dense matrix with entries in `F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    field: PrimeField,
    data: Vec<FieldElem>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize, field: PrimeField) -> Self {
        Self {
            rows,
            cols,
            field,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, field: PrimeField) -> Self {
        let mut m = Self::zeros(n, n, field);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_vec(
        rows: usize,
        cols: usize,
        field: PrimeField,
        data: Vec<FieldElem>,
    ) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        let p = field.modulus();
        let data = data.into_iter().map(|x| x % p).collect();
        Ok(Self {
            rows,
            cols,
            field,
            data,
        })
    }

    /// Integer entries, reduced modulo `p`. All rows must share a length.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R], field: PrimeField) -> Self {
        let ncols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), ncols, field);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            assert_eq!(r.len(), ncols, "ragged row {i}");
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, field.from_i64(x));
            }
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        field: PrimeField,
        mut f: impl FnMut(usize, usize) -> FieldElem,
    ) -> Self {
        let mut m = Self::zeros(rows, cols, field);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j) % field.modulus();
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(height: usize, columns: &[Vec<FieldElem>], field: PrimeField) -> Self {
        Self::from_fn(height, columns.len(), field, |i, j| columns[j][i])
    }

    pub fn random<R: Rng + ?Sized>(
        rows: usize,
        cols: usize,
        field: PrimeField,
        rng: &mut R,
    ) -> Self {
        let data = (0..rows * cols).map(|_| field.random(rng)).collect();
        Self {
            rows,
            cols,
            field,
            data,
        }
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
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: FieldElem) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = x;
    }

    /// Adds `x` to entry `(i, j)`.
    #[inline]
    pub fn add_at(&mut self, i: usize, j: usize, x: FieldElem) {
        let k = i * self.cols + j;
        self.data[k] = self.field.add(self.data[k], x);
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<FieldElem> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn mul(&self, rhs: &DenseMatrix) -> Result<DenseMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols, self.field);
        for i in 0..self.rows {
            let dst = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a != 0 {
                    self.field.axpy(dst, rhs.row(k), a);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| self.field.add(acc, self.field.mul(a, b)))
            })
            .collect()
    }

    pub fn scale(&self, c: FieldElem) -> DenseMatrix {
        let mut out = self.clone();
        for x in &mut out.data {
            *x = self.field.mul(*x, c);
        }
        out
    }

    pub fn add(&self, rhs: &DenseMatrix) -> Result<DenseMatrix> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::Shape("matrix sum of different shapes".into()));
        }
        let mut out = self.clone();
        for (x, &y) in out.data.iter_mut().zip(&rhs.data) {
            *x = self.field.add(*x, y);
        }
        Ok(out)
    }

    /// Stacks matrices vertically. Every block must have `cols` columns.
    pub fn vstack(blocks: &[&DenseMatrix], cols: usize, field: PrimeField) -> Result<DenseMatrix> {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(Error::Shape(format!(
                    "vstack: block has {} columns, expected {cols}",
                    b.cols
                )));
            }
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        Ok(Self {
            rows,
            cols,
            field,
            data,
        })
    }

    pub fn select_rows(&self, idx: &[usize]) -> DenseMatrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Self {
            rows: idx.len(),
            cols: self.cols,
            field: self.field,
            data,
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> DenseMatrix {
        Self::from_fn(self.rows, idx.len(), self.field, |i, j| self.get(i, idx[j]))
    }

    /// Forward elimination in place with first-nonzero pivoting. Returns the
    /// pivot columns; pivot rows are normalized to a leading 1.
    fn forward_eliminate(&mut self) -> Vec<usize> {
        let (nr, nc) = (self.rows, self.cols);
        let field = self.field;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..nc {
            if r == nr {
                break;
            }
            let Some(pr) = (r..nr).find(|&i| self.data[i * nc + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in c..nc {
                    self.data.swap(pr * nc + j, r * nc + j);
                }
            }
            let inv = field.inv(self.data[r * nc + c]);
            for x in &mut self.data[r * nc + c..(r + 1) * nc] {
                *x = field.mul(*x, inv);
            }
            let (head, tail) = self.data.split_at_mut((r + 1) * nc);
            let pivot = &head[r * nc + c + 1..(r + 1) * nc];
            for row in tail.chunks_exact_mut(nc) {
                let e = row[c];
                if e != 0 {
                    row[c] = 0;
                    field.axpy(&mut row[c + 1..], pivot, field.neg(e));
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Reduced row echelon form; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let pivots = self.forward_eliminate();
        let nc = self.cols;
        let field = self.field;
        for (r, &c) in pivots.iter().enumerate().rev() {
            let (head, tail) = self.data.split_at_mut(r * nc);
            let pivot = &tail[c..nc];
            for row in head.chunks_exact_mut(nc) {
                let e = row[c];
                if e != 0 {
                    field.axpy(&mut row[c..], pivot, field.neg(e));
                }
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let mut work = if self.rows > self.cols {
            self.transpose()
        } else {
            self.clone()
        };
        work.forward_eliminate().len()
    }

    /// Basis of `{v : M v = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElem>> {
        let mut work = self.clone();
        let pivots = work.rref();
        let nc = self.cols;
        let mut is_pivot = vec![None; nc];
        for (r, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(r);
        }
        (0..nc)
            .filter(|&c| is_pivot[c].is_none())
            .map(|free| {
                let mut v = vec![0; nc];
                v[free] = 1;
                for (r, &c) in pivots.iter().enumerate() {
                    v[c] = self.field.neg(work.get(r, free));
                }
                v
            })
            .collect()
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn cokernel_dim(&self) -> usize {
        self.rows - self.rank()
    }

    /// Basis of the row space (rows of the reduced echelon form).
    pub fn row_space_basis(&self) -> DenseMatrix {
        let mut work = self.clone();
        let r = work.rref().len();
        work.select_rows(&(0..r).collect::<Vec<_>>())
    }

    pub fn inverse(&self) -> Option<DenseMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::from_fn(n, 2 * n, self.field, |i, j| {
            if j < n {
                self.get(i, j)
            } else if j - n == i {
                1
            } else {
                0
            }
        });
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(aug.select_cols(&(n..2 * n).collect::<Vec<_>>()))
    }

    /// Plain-text interchange form: a `rows cols p` line, then one line of
    /// space-separated residues per row.
    pub fn to_interchange(&self) -> String {
        let mut s = String::new();
        self.write_interchange(&mut s);
        s
    }

    pub fn write_interchange(&self, out: &mut String) {
        let _ = writeln!(out, "{} {} {}", self.rows, self.cols, self.field.modulus());
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
    }

    pub fn parse_interchange(text: &str) -> Result<DenseMatrix> {
        let mut lines = Lines::new(text.as_bytes());
        Self::read_interchange(&mut lines)
    }

    pub fn read_interchange<R: BufRead>(lines: &mut Lines<R>) -> Result<DenseMatrix> {
        let header = lines.next_nonempty()?;
        let nums = lines.parse_numbers(&header)?;
        let [rows, cols, p] = nums[..] else {
            return Err(lines.error("expected header `rows cols p`"));
        };
        let field = PrimeField::new(p)?;
        let (rows, cols) = (rows as usize, cols as usize);
        let mut data = Vec::with_capacity(rows * cols);
        for _ in 0..rows {
            let line = lines.next_nonempty()?;
            let row = lines.parse_numbers(&line)?;
            if row.len() != cols {
                return Err(lines.error(&format!("expected {cols} entries, got {}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= p) {
                return Err(lines.error(&format!("entry {bad} is not reduced modulo {p}")));
            }
            data.extend(row.into_iter().map(|x| x as FieldElem));
        }
        Ok(Self {
            rows,
            cols,
            field,
            data,
        })
    }
}

/// Line cursor used by the text formats; tracks line numbers for errors.
pub struct Lines<R> {
    reader: R,
    line: usize,
}

impl<R: BufRead> Lines<R> {
    pub fn new(reader: R) -> Self {
        Self { reader, line: 0 }
    }

    pub fn error(&self, msg: &str) -> Error {
        Error::Parse {
            line: self.line,
            msg: msg.to_string(),
        }
    }

    pub fn next_nonempty(&mut self) -> Result<String> {
        loop {
            let mut buf = String::new();
            if self.reader.read_line(&mut buf)? == 0 {
                return Err(self.error("unexpected end of input"));
            }
            self.line += 1;
            let trimmed = buf.trim();
            if !trimmed.is_empty() {
                return Ok(trimmed.to_string());
            }
        }
    }

    pub fn parse_numbers(&self, line: &str) -> Result<Vec<u64>> {
        line.split_whitespace()
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|e| self.error(&format!("{t:?}: {e}")))
            })
            .collect()
    }

    /// Reads a `<tag> n1 n2 ... p` header line and returns the numbers.
    pub fn expect_header(&mut self, tag: &str, count: usize) -> Result<Vec<u64>> {
        let line = self.next_nonempty()?;
        let mut parts = line.splitn(2, char::is_whitespace);
        if parts.next() != Some(tag) {
            return Err(self.error(&format!("expected `{tag}` header")));
        }
        let nums = self.parse_numbers(parts.next().unwrap_or(""))?;
        if nums.len() != count {
            return Err(self.error(&format!("`{tag}` header takes {count} numbers")));
        }
        Ok(nums)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn fp() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn field_rejects_small_and_composite_moduli() {
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(3).is_err());
        assert!(PrimeField::new(32001).is_err());
        assert!(PrimeField::new(5).is_ok());
        assert!(PrimeField::new(2_147_483_647).is_ok());
        assert!(PrimeField::new(2_147_483_659).is_err());
        assert!(PrimeField::new(2_147_483_629).is_ok());
    }

    #[test]
    fn barrett_matches_remainder() {
        let f = PrimeField::new(2_147_483_629).unwrap();
        let p = f.modulus() as u64;
        for x in [
            0,
            1,
            p - 1,
            p,
            p + 1,
            (p - 1) * (p - 1),
            (p - 1) * (p - 1) + p - 1,
            u64::MAX / 3,
        ] {
            assert_eq!(f.reduce(x) as u64, x % p, "x = {x}");
        }
        let f = fp();
        assert_eq!(f.mul(f.inv(12345), 12345), 1);
    }

    #[test]
    fn rank_examples() {
        let f = fp();
        assert_eq!(DenseMatrix::identity(4, f).rank(), 4);
        assert_eq!(DenseMatrix::zeros(3, 5, f).rank(), 0);
        assert_eq!(DenseMatrix::from_rows(&[[1, 2, 3], [2, 4, 6]], f).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        let f = fp();
        assert!(DenseMatrix::identity(3, f).kernel_basis().is_empty());

        let z = DenseMatrix::zeros(2, 3, f).kernel_basis();
        assert_eq!(z.len(), 3);
        assert_eq!(DenseMatrix::from_columns(3, &z, f).rank(), 3);

        let k = DenseMatrix::from_rows(&[[1, 1]], f).kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(f.add(k[0][0], k[0][1]), 0);
        assert_ne!(k[0][0], 0);
    }

    #[test]
    fn cokernel_examples() {
        let f = fp();
        assert_eq!(DenseMatrix::identity(4, f).cokernel_dim(), 0);
        assert_eq!(DenseMatrix::zeros(3, 1, f).cokernel_dim(), 3);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let m = DenseMatrix::random(5, 2, f, &mut rng);
        assert_eq!(m.cokernel_dim(), 5 - m.rank());
        assert_eq!(m.cokernel_dim(), 3);
    }

    #[test]
    fn inverse_round_trip() {
        let f = fp();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let m = DenseMatrix::random(6, 6, f, &mut rng);
        let inv = m.inverse().expect("random 6x6 is invertible");
        assert_eq!(m.mul(&inv).unwrap(), DenseMatrix::identity(6, f));
        assert!(DenseMatrix::from_rows(&[[1, 2], [2, 4]], f)
            .inverse()
            .is_none());
    }

    #[test]
    fn interchange_round_trip_and_errors() {
        let f = fp();
        let m = DenseMatrix::from_rows(&[[1, -1, 0], [5, 6, 32002]], f);
        let text = m.to_interchange();
        assert!(text.starts_with("2 3 32003\n1 32002 0\n"));
        assert_eq!(DenseMatrix::parse_interchange(&text).unwrap(), m);
        assert!(DenseMatrix::parse_interchange("2 2 32003\n1 2\n").is_err());
        assert!(DenseMatrix::parse_interchange("1 2 32003\n1 32003\n").is_err());
        assert!(DenseMatrix::parse_interchange("1 2 32001\n1 2\n").is_err());
    }
}
