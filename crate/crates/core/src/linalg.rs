//! Exact linear algebra over the rationals.
//!
//! Everything here is exact. Rank of integer matrices is computed either by
//! fraction-free (Bareiss) elimination or, for large inputs, by elimination
//! modulo 61-bit primes certified with a Hadamard bound: the rank mod p never
//! exceeds the rank over `Q`, and once the product of the primes used exceeds
//! the Hadamard bound for `(r+1)`-minors, every such minor is zero over `Z`.

use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{AtlasError, Result};

pub type Rational = BigRational;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Dense matrix with exact rational entries.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from row vectors. All rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(AtlasError::Dimension("rows of unequal length".to_string()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| q(x)).collect())
                .collect(),
        )
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Rational>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    /// Scales every row by the lcm of its denominators, which preserves rank.
    pub fn to_integer_rows(&self) -> IntegerMatrix {
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for i in 0..self.rows {
            data.extend(integer_scaled(self.row(i)));
        }
        IntegerMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn rank(&self) -> usize {
        rank_rational(self)
    }

    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        kernel_basis(self)
    }
}

/// Multiplies a rational vector by the lcm of its denominators.
pub fn integer_scaled(v: &[Rational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    v.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

/// Dense integer matrix; the input to the rank engines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

/// Inputs with at most this many entries go through Bareiss elimination.
const BAREISS_MAX_ENTRIES: usize = 48 * 48;

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(AtlasError::Dimension("rows of unequal length".to_string()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Exact rank over `Q`.
    pub fn rank(&self) -> usize {
        if self.rows * self.cols <= BAREISS_MAX_ENTRIES {
            rank_bareiss(self)
        } else {
            rank_multimodular(self)
        }
    }
}

/// Exact rank of a rational matrix.
pub fn rank_rational(m: &RationalMatrix) -> usize {
    m.to_integer_rows().rank()
}

/// Fraction-free Gaussian elimination. Every intermediate entry is a minor of
/// the input, so all divisions are exact.
pub fn rank_bareiss(m: &IntegerMatrix) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<BigInt>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        let (top, rest) = a.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[col]);
            for j in col + 1..cols {
                let v = &pivot * &row[j] - &lead * &prow[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

fn primes_cache() -> &'static Mutex<Vec<u64>> {
    static CACHE: OnceLock<Mutex<Vec<u64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(Vec::new()))
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Bit count every prime handed out by [`nth_prime`] is guaranteed to exceed.
const PRIME_BITS: u64 = 61;

/// The `k`-th prime below `2^62` counting downward; all exceed `2^61`.
fn nth_prime(k: usize) -> u64 {
    let mut cache = primes_cache().lock().expect("prime cache poisoned");
    let mut next = cache.last().map_or(1u64 << 62, |&p| p - 1);
    while cache.len() <= k {
        while !is_prime_u64(next) {
            next -= 1;
        }
        cache.push(next);
        next -= 1;
    }
    cache[k]
}

fn reduce_mod(x: &BigInt, p: u64) -> u64 {
    let r = (x.magnitude() % p).to_u64().expect("residue fits in u64");
    if x.sign() == Sign::Minus && r != 0 {
        p - r
    } else {
        r
    }
}

/// Rank of `m` reduced modulo the prime `p`.
pub fn rank_mod_p(m: &IntegerMatrix, p: u64) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    // Eliminate along the shorter dimension.
    let (r, c, mut a): (usize, usize, Vec<u64>) = if rows <= cols {
        (
            rows,
            cols,
            m.data.iter().map(|x| reduce_mod(x, p)).collect(),
        )
    } else {
        let mut t = vec![0u64; rows * cols];
        for i in 0..rows {
            for j in 0..cols {
                t[j * rows + i] = reduce_mod(m.get(i, j), p);
            }
        }
        (cols, rows, t)
    };
    let mut rank = 0;
    for col in 0..c {
        if rank == r {
            break;
        }
        let Some(piv) = (rank..r).find(|&i| a[i * c + col] != 0) else {
            continue;
        };
        if piv != rank {
            for j in 0..c {
                a.swap(piv * c + j, rank * c + j);
            }
        }
        let inv = pow_mod(a[rank * c + col], p - 2, p);
        for i in rank + 1..r {
            let f = a[i * c + col];
            if f == 0 {
                continue;
            }
            let f = mul_mod(f, inv, p);
            for j in col..c {
                let s = a[rank * c + j];
                if s != 0 {
                    let sub = mul_mod(f, s, p);
                    let v = a[i * c + j];
                    a[i * c + j] = if v >= sub { v - sub } else { v + p - sub };
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Upper bounds (in bits) on the Euclidean norms of the non-zero vectors,
/// sorted in decreasing order.
fn norm_bits<'a>(vectors: impl Iterator<Item = Vec<&'a BigInt>>) -> Vec<u64> {
    let mut bits: Vec<u64> = vectors
        .filter_map(|v| {
            let sq: BigInt = v.iter().map(|x| *x * *x).sum();
            if sq.is_zero() {
                None
            } else {
                Some(sq.bits().div_ceil(2))
            }
        })
        .collect();
    bits.sort_unstable_by(|a, b| b.cmp(a));
    bits
}

/// Exact rank via elimination modulo primes, certified by a Hadamard bound.
pub fn rank_multimodular(m: &IntegerMatrix) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let row_bits = norm_bits((0..rows).map(|i| m.row(i).iter().collect()));
    let col_bits = norm_bits((0..cols).map(|j| (0..rows).map(|i| m.get(i, j)).collect()));
    let nonzero = row_bits.len().min(col_bits.len());
    if nonzero == 0 {
        return 0;
    }
    // Bits needed to certify that every (r+1)-minor vanishes.
    let bound = |r: usize| -> Option<u64> {
        if r >= nonzero {
            return None;
        }
        let a: u64 = row_bits[..=r].iter().sum();
        let b: u64 = col_bits[..=r].iter().sum();
        Some(a.min(b))
    };
    let mut best = 0usize;
    let mut used = 0usize;
    loop {
        match bound(best) {
            None => return best,
            Some(bits) if (used as u64) * PRIME_BITS > bits => return best,
            _ => {}
        }
        let r = rank_mod_p(m, nth_prime(used));
        used += 1;
        best = best.max(r);
    }
}

/// Reduced row echelon form; returns the pivot columns.
fn rref(a: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][col].recip();
        for x in a[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, s) in row.iter_mut().zip(&pivot_row) {
                if !s.is_zero() {
                    *x -= &f * s;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Basis of the right null space.
pub fn kernel_basis(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    let cols = m.cols;
    let mut a: Vec<Vec<Rational>> = (0..m.rows).map(|i| m.row(i).to_vec()).collect();
    let pivots = rref(&mut a, cols);
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; cols];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    (0..cols)
        .filter(|&j| !is_pivot[j])
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[r][free].clone();
            }
            v
        })
        .collect()
}

/// Some solution of `m x = b`, or `None` when the system is inconsistent.
pub fn solve_linear(m: &RationalMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if b.len() != m.rows {
        return Err(AtlasError::Dimension(format!(
            "right-hand side has length {} but matrix has {} rows",
            b.len(),
            m.rows
        )));
    }
    let cols = m.cols;
    let mut a: Vec<Vec<Rational>> = (0..m.rows)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut a, cols + 1);
    if pivots.last() == Some(&cols) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = a[r][cols].clone();
    }
    Ok(Some(x))
}

/// Whether a symmetric matrix is positive definite, by exact symmetric
/// elimination without pivoting (all pivots must be positive).
pub fn is_positive_definite(m: &RationalMatrix) -> bool {
    let n = m.rows;
    if n != m.cols {
        return false;
    }
    let mut a: Vec<Vec<Rational>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    for k in 0..n {
        if !a[k][k].is_positive() {
            return false;
        }
        let inv = a[k][k].recip();
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] * &inv;
            for j in k..n {
                if !a[k][j].is_zero() {
                    let v = &f * &a[k][j];
                    a[i][j] -= v;
                }
            }
        }
    }
    true
}

/// Serde adapter writing rational vectors as strings such as `"-3/2"`.
pub mod rational_vec {
    use super::Rational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|x| x.parse().map_err(|e| D::Error::custom(format!("{x}: {e}"))))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qm(rows: &[Vec<i64>]) -> RationalMatrix {
        RationalMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(RationalMatrix::identity(3).rank(), 3);
        assert_eq!(RationalMatrix::zeros(2, 2).rank(), 0);
        assert_eq!(qm(&[vec![1, 2], vec![2, 4], vec![3, 6]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(RationalMatrix::identity(2).kernel_basis().is_empty());
        let k = qm(&[vec![1, -1]]).kernel_basis();
        assert_eq!(k, vec![vec![q(1), q(1)]]);
        assert_eq!(RationalMatrix::zeros(3, 3).kernel_basis().len(), 3);
    }

    #[test]
    fn solve_examples() {
        let b = vec![q(3), q_frac(-1, 2)];
        assert_eq!(
            solve_linear(&RationalMatrix::identity(2), &b).unwrap(),
            Some(b.clone())
        );
        let m = qm(&[vec![1, 1]]);
        let x = solve_linear(&m, &[q(2)]).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x), vec![q(2)]);
        let m = qm(&[vec![1], vec![1]]);
        assert_eq!(solve_linear(&m, &[q(0), q(1)]).unwrap(), None);
    }

    #[test]
    fn solve_rejects_wrong_length() {
        let m = RationalMatrix::identity(2);
        assert!(matches!(
            solve_linear(&m, &[q(1)]),
            Err(AtlasError::Dimension(_))
        ));
    }

    #[test]
    fn primes_are_large_and_distinct() {
        let a = nth_prime(0);
        let b = nth_prime(1);
        assert!(a > b && b > (1u64 << PRIME_BITS));
        assert!(is_prime_u64(a) && is_prime_u64(b));
        assert!(!is_prime_u64(a - 1));
    }

    #[test]
    fn multimodular_sees_through_unlucky_prime() {
        // det = p0, so the matrix is singular mod the first prime only.
        let p = nth_prime(0) as i64;
        let m = IntegerMatrix::from_i64_rows(&[vec![p, 0], vec![0, 1]]).unwrap();
        assert_eq!(rank_mod_p(&m, p as u64), 1);
        assert_eq!(rank_multimodular(&m), 2);
        assert_eq!(rank_bareiss(&m), 2);
    }

    #[test]
    fn positive_definite() {
        assert!(is_positive_definite(&qm(&[vec![2, -1], vec![-1, 2]])));
        assert!(!is_positive_definite(&qm(&[vec![1, 2], vec![2, 1]])));
        assert!(!is_positive_definite(&qm(&[vec![0, 0], vec![0, 1]])));
    }
}
