//! Fraction-free exact linear algebra over the integers.
//!
//! Ranks are computed by integer row reduction with per-row content
//! normalization. The fast path runs in `i128` with checked multiplication;
//! if a product would overflow, the computation restarts with
//! arbitrary-precision integers. No floating point anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Scalars usable in the sparse eliminator.
pub trait Int: Clone + PartialEq {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    /// Checked product; `None` signals overflow.
    fn mul(&self, other: &Self) -> Option<Self>;
    fn sub(&self, other: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Int for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other)
    }
    fn gcd(&self, other: &Self) -> Self {
        let mut a = self.unsigned_abs();
        let mut b = other.unsigned_abs();
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a as i128
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Int for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Overflow marker raised by the `i128` path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overflow;

/// Sparse row: strictly increasing column indices with nonzero coefficients.
pub type SparseRow<T> = Vec<(u32, T)>;

pub fn row_from_i64(entries: &[(u32, i64)]) -> SparseRow<i128> {
    entries.iter().map(|&(c, v)| (c, v as i128)).collect()
}

/// `a*x - b*y` for sorted sparse rows, dropping zeros.
fn combine<T: Int>(a: &T, x: &SparseRow<T>, b: &T, y: &SparseRow<T>) -> Result<SparseRow<T>, Overflow> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let nxt = match (x.get(i), y.get(j)) {
            (Some(&(cx, _)), Some(&(cy, _))) if cx == cy => {
                let v = a.mul(&x[i].1).ok_or(Overflow)?.sub(&b.mul(&y[j].1).ok_or(Overflow)?).ok_or(Overflow)?;
                i += 1;
                j += 1;
                (cx, v)
            }
            (Some(&(cx, _)), Some(&(cy, _))) if cx < cy => {
                let v = a.mul(&x[i].1).ok_or(Overflow)?;
                i += 1;
                (cx, v)
            }
            (Some(_), Some(&(cy, _))) => {
                let v = b.mul(&y[j].1).ok_or(Overflow)?.neg();
                j += 1;
                (cy, v)
            }
            (Some(&(cx, _)), None) => {
                let v = a.mul(&x[i].1).ok_or(Overflow)?;
                i += 1;
                (cx, v)
            }
            (None, Some(&(cy, _))) => {
                let v = b.mul(&y[j].1).ok_or(Overflow)?.neg();
                j += 1;
                (cy, v)
            }
            (None, None) => unreachable!(),
        };
        if !nxt.1.is_zero() {
            out.push(nxt);
        }
    }
    Ok(out)
}

/// Divide a row by the gcd of its entries and make the leading entry positive.
fn normalize<T: Int>(mut row: SparseRow<T>) -> SparseRow<T> {
    if row.is_empty() {
        return row;
    }
    let mut g = row[0].1.clone();
    for (_, v) in row.iter().skip(1) {
        g = g.gcd(v);
    }
    if row[0].1.is_negative() {
        g = g.neg();
    }
    let one = T::from_i64(1);
    if g != one {
        for (_, v) in row.iter_mut() {
            *v = v.div_exact(&g);
        }
    }
    row
}

/// Incremental row echelon basis over exact integers.
pub struct Echelon<T> {
    /// Pivot rows keyed by leading column.
    rows: std::collections::BTreeMap<u32, SparseRow<T>>,
}

impl<T: Int> Echelon<T> {
    pub fn new() -> Self {
        Echelon { rows: std::collections::BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &SparseRow<T>> {
        self.rows.values()
    }

    /// Reduce `row` against the pivots; install the remainder as a new pivot.
    /// Returns whether the row enlarged the span.
    pub fn insert(&mut self, mut row: SparseRow<T>) -> Result<bool, Overflow> {
        loop {
            let lead = match row.first() {
                None => return Ok(false),
                Some(&(c, _)) => c,
            };
            match self.rows.get(&lead) {
                Some(pivot) => {
                    let a = pivot[0].1.clone();
                    let b = row[0].1.clone();
                    let g = a.gcd(&b);
                    let a = a.div_exact(&g);
                    let b = b.div_exact(&g);
                    row = normalize(combine(&a, &row, &b, pivot)?);
                }
                None => {
                    self.rows.insert(lead, normalize(row));
                    return Ok(true);
                }
            }
        }
    }

    /// Does `row` lie in the span of the installed pivots?
    pub fn contains(&self, mut row: SparseRow<T>) -> Result<bool, Overflow> {
        loop {
            let lead = match row.first() {
                None => return Ok(true),
                Some(&(c, _)) => c,
            };
            match self.rows.get(&lead) {
                Some(pivot) => {
                    let a = pivot[0].1.clone();
                    let b = row[0].1.clone();
                    let g = a.gcd(&b);
                    let a = a.div_exact(&g);
                    let b = b.div_exact(&g);
                    row = normalize(combine(&a, &row, &b, pivot)?);
                }
                None => return Ok(false),
            }
        }
    }
}

impl<T: Int> Default for Echelon<T> {
    fn default() -> Self {
        Self::new()
    }
}

/// Rank of a set of sparse integer rows, with automatic big-integer fallback.
pub fn sparse_rank(rows: &[Vec<(u32, i64)>]) -> usize {
    let mut ech: Echelon<i128> = Echelon::new();
    let mut ok = true;
    'fast: {
        for r in rows {
            match ech.insert(row_from_i64(r)) {
                Ok(_) => {}
                Err(Overflow) => {
                    ok = false;
                    break 'fast;
                }
            }
        }
    }
    if ok {
        return ech.rank();
    }
    let mut big: Echelon<BigInt> = Echelon::new();
    for r in rows {
        let row: SparseRow<BigInt> = r.iter().map(|&(c, v)| (c, BigInt::from(v))).collect();
        big.insert(row).expect("big integer path cannot overflow");
    }
    big.rank()
}

/// Exact rank of a small dense integer matrix (rows of equal length).
pub fn dense_rank(rows: &[Vec<i64>]) -> usize {
    let sparse: Vec<Vec<(u32, i64)>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(c, &v)| (c as u32, v))
                .collect()
        })
        .collect();
    sparse_rank(&sparse)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        assert_eq!(dense_rank(&[vec![1, 0], vec![0, 1]]), 2);
        assert_eq!(dense_rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(dense_rank(&[vec![0, 0]]), 0);
        assert_eq!(dense_rank(&[]), 0);
        // 3 vectors on a projective line.
        assert_eq!(dense_rank(&[vec![1, -1], vec![1, -2], vec![1, -3]]), 2);
    }

    #[test]
    fn span_membership() {
        let mut e: Echelon<i128> = Echelon::new();
        e.insert(row_from_i64(&[(0, 1), (1, 1)])).unwrap();
        e.insert(row_from_i64(&[(1, 1), (2, 1)])).unwrap();
        assert!(e.contains(row_from_i64(&[(0, 1), (2, 1)])).unwrap() == false);
        assert!(e.contains(row_from_i64(&[(0, 2), (1, 4), (2, 2)])).unwrap());
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn content_normalization_keeps_entries_small() {
        // A dense-ish matrix whose naive fraction-free elimination would grow
        // entries; content stripping keeps them modest.
        let n = 12;
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| ((i * j + i + 1) % 5) as i64 - 2).collect())
            .collect();
        let r = dense_rank(&rows);
        assert!(r <= n);
        // Cross-check against a plain rational elimination done by hand is
        // overkill; instead verify rank is stable under row duplication.
        let mut doubled = rows.clone();
        doubled.extend(rows.iter().cloned());
        assert_eq!(dense_rank(&doubled), r);
    }

    #[test]
    fn bigint_fallback_matches() {
        // Hilbert-like integer rows with large entries to push products hard.
        let rows: Vec<Vec<(u32, i64)>> = (0..6)
            .map(|i| (0..6).map(|j| (j as u32, (1i64 << 52) + (i * j) as i64)).collect())
            .collect();
        let r = sparse_rank(&rows);
        assert_eq!(r, 2);
    }
}
