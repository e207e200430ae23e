//! Matrices over prime fields and the oracles built on them: simultaneous
//! similarity of matrix tuples, non-commutative polynomial templates and
//! congruence of skew-symmetric forms.
//!
//! Everything here decides by exhaustive search over `GL(n, p)`, so every
//! entry point is bounded by [`SCALE_LIMIT`].

mod nc;
mod search;

pub use nc::{
    containment_check_instance, nc_eval, ContainmentReport, EquivalenceOracle, NCPolynomial,
    NCTemplate, SimultaneousSimilarity,
};
pub use search::{
    conjugation_orbit, gl_enumerate, gl_order, sim_similar, sim_similar_tuple,
    similarity_stabilizer, skew_congruent, trace_word_invariants, words,
};

use std::fmt;

use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::groups::is_prime;

/// Upper bound on `p^(n*n)`, the number of matrices scanned by a search.
pub const SCALE_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is too large")]
    ModulusTooLarge(u64),
    #[error("rows have unequal lengths")]
    Ragged,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("moduli differ: {0} and {1}")]
    Modulus(u64, u64),
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,
    #[error("search over p^(n^2) = {p}^{n_sq} matrices exceeds the scale guard")]
    ScaleGuard { p: u64, n_sq: usize },
    #[error("template expects {expected} arguments, got {found}")]
    Arity { expected: usize, found: usize },
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// A dense `rows x cols` matrix with entries in `0..p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PrimeFieldMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

pub(crate) fn check_prime(p: u64) -> Result<(), MatrixError> {
    if !is_prime(p) {
        return Err(MatrixError::NotPrime(p));
    }
    if p >= 1 << 31 {
        return Err(MatrixError::ModulusTooLarge(p));
    }
    Ok(())
}

impl PrimeFieldMatrix {
    /// Entries are reduced mod `p`; negative values are allowed.
    pub fn new(p: u64, rows: &[Vec<i64>]) -> Result<Self, MatrixError> {
        check_prime(p)?;
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(MatrixError::Ragged);
        }
        let entries = rows
            .iter()
            .flatten()
            .map(|&v| v.rem_euclid(p as i64) as u64)
            .collect();
        Ok(PrimeFieldMatrix {
            p,
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub(crate) fn from_flat(p: u64, rows: usize, cols: usize, entries: Vec<u64>) -> Self {
        debug_assert_eq!(entries.len(), rows * cols);
        debug_assert!(entries.iter().all(|&v| v < p));
        PrimeFieldMatrix {
            p,
            rows,
            cols,
            entries,
        }
    }

    pub fn zero(p: u64, rows: usize, cols: usize) -> Self {
        Self::from_flat(p, rows, cols, vec![0; rows * cols])
    }

    pub fn identity(p: u64, n: usize) -> Self {
        Self::scalar(p, n, 1)
    }

    pub fn scalar(p: u64, n: usize, c: u64) -> Self {
        let mut m = Self::zero(p, n, n);
        for i in 0..n {
            m.entries[i * n + i] = c % p;
        }
        m
    }

    /// Uniformly random entries.
    pub fn random<R: Rng + ?Sized>(p: u64, n: usize, rng: &mut R) -> Self {
        let entries = (0..n * n).map(|_| rng.gen_range(0..p)).collect();
        Self::from_flat(p, n, n, entries)
    }

    /// Uniformly random element of `GL(n, p)` by rejection sampling.
    pub fn random_invertible<R: Rng + ?Sized>(p: u64, n: usize, rng: &mut R) -> Self {
        loop {
            let m = Self::random(p, n, rng);
            if m.rank() == n {
                return m;
            }
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        self.entries
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(<[u64]>::to_vec)
            .collect()
    }

    fn same_field(&self, other: &Self) -> Result<(), MatrixError> {
        if self.p != other.p {
            return Err(MatrixError::Modulus(self.p, other.p));
        }
        Ok(())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, MatrixError> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(MatrixError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.p;
        let mut out = vec![0u64; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let o = &mut out[i * other.cols + j];
                    *o = (*o + a * other.get(k, j)) % p;
                }
            }
        }
        Ok(Self::from_flat(p, self.rows, other.cols, out))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.same_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(MatrixError::Dimension(
                "sum of differently shaped matrices".into(),
            ));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a + b) % self.p)
            .collect();
        Ok(Self::from_flat(self.p, self.rows, self.cols, entries))
    }

    /// Panicking product for operands already known to be compatible.
    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("compatible operands")
    }

    pub fn add(&self, other: &Self) -> Self {
        self.checked_add(other).expect("compatible operands")
    }

    pub fn scale(&self, c: u64) -> Self {
        let c = c % self.p;
        let entries = self.entries.iter().map(|a| a * c % self.p).collect();
        Self::from_flat(self.p, self.rows, self.cols, entries)
    }

    pub fn neg(&self) -> Self {
        self.scale(self.p - 1)
    }

    pub fn transpose(&self) -> Self {
        let mut out = vec![0; self.entries.len()];
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[j * self.rows + i] = self.get(i, j);
            }
        }
        Self::from_flat(self.p, self.cols, self.rows, out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square() && self.transpose() == self.neg()
    }

    pub fn trace(&self) -> u64 {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).map(|i| self.get(i, i)).sum::<u64>() % self.p
    }

    /// Row-reduced echelon form and the pivot count.
    fn echelon(&self) -> (Vec<u64>, usize) {
        let (p, cols) = (self.p, self.cols);
        let mut m = self.entries.clone();
        let mut rank = 0;
        for c in 0..cols {
            let Some(r) = (rank..self.rows).find(|&r| m[r * cols + c] != 0) else {
                continue;
            };
            for j in 0..cols {
                m.swap(rank * cols + j, r * cols + j);
            }
            let inv = inv_mod(m[rank * cols + c], p);
            for j in 0..cols {
                m[rank * cols + j] = m[rank * cols + j] * inv % p;
            }
            for r in 0..self.rows {
                let f = m[r * cols + c];
                if r != rank && f != 0 {
                    for j in 0..cols {
                        m[r * cols + j] = (m[r * cols + j] + (p - f) * m[rank * cols + j]) % p;
                    }
                }
            }
            rank += 1;
        }
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Self, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare);
        }
        let n = self.rows;
        let mut aug = vec![0; n * 2 * n];
        for i in 0..n {
            for j in 0..n {
                aug[i * 2 * n + j] = self.get(i, j);
            }
            aug[i * 2 * n + n + i] = 1;
        }
        let (red, _) = Self::from_flat(self.p, n, 2 * n, aug).echelon();
        let left_is_identity =
            (0..n).all(|i| (0..n).all(|j| red[i * 2 * n + j] == u64::from(i == j)));
        if !left_is_identity {
            return Err(MatrixError::Singular);
        }
        let entries = (0..n)
            .flat_map(|i| red[i * 2 * n + n..(i + 1) * 2 * n].to_vec())
            .collect();
        Ok(Self::from_flat(self.p, n, n, entries))
    }
}

impl fmt::Display for PrimeFieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.to_rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(u64::to_string).collect();
            write!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2)
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// An instance `(A, B)` of the pair-of-matrices problem.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MatrixPair {
    pub a: PrimeFieldMatrix,
    pub b: PrimeFieldMatrix,
}

impl MatrixPair {
    pub fn new(a: PrimeFieldMatrix, b: PrimeFieldMatrix) -> Result<Self, MatrixError> {
        a.same_field(&b)?;
        if !a.is_square() || !b.is_square() {
            return Err(MatrixError::NotSquare);
        }
        if a.rows != b.rows {
            return Err(MatrixError::Dimension(format!("{} and {}", a.rows, b.rows)));
        }
        Ok(MatrixPair { a, b })
    }

    pub fn random<R: Rng + ?Sized>(p: u64, n: usize, rng: &mut R) -> Self {
        MatrixPair {
            a: PrimeFieldMatrix::random(p, n, rng),
            b: PrimeFieldMatrix::random(p, n, rng),
        }
    }

    pub fn dim(&self) -> usize {
        self.a.rows
    }

    pub fn modulus(&self) -> u64 {
        self.a.p
    }

    pub fn as_tuple(&self) -> [PrimeFieldMatrix; 2] {
        [self.a.clone(), self.b.clone()]
    }

    /// `(S A S^-1, S B S^-1)`.
    pub fn conjugate(&self, s: &PrimeFieldMatrix) -> Result<Self, MatrixError> {
        let si = s.inverse()?;
        MatrixPair::new(
            s.checked_mul(&self.a)?.mul(&si),
            s.checked_mul(&self.b)?.mul(&si),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_inverse() {
        let m = PrimeFieldMatrix::new(3, &[vec![2, -1], vec![4, 0]]).unwrap();
        assert_eq!(m.to_rows(), vec![vec![2, 2], vec![1, 0]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), PrimeFieldMatrix::identity(3, 2));
        let singular = PrimeFieldMatrix::new(2, &[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(singular.inverse(), Err(MatrixError::Singular));
        assert_eq!(singular.rank(), 1);
    }

    #[test]
    fn rejects_composite_modulus() {
        assert_eq!(
            PrimeFieldMatrix::new(4, &[vec![1]]),
            Err(MatrixError::NotPrime(4))
        );
    }

    #[test]
    fn skew_symmetry() {
        let m = PrimeFieldMatrix::new(3, &[vec![0, 1], vec![-1, 0]]).unwrap();
        assert!(m.is_skew_symmetric());
        assert!(!PrimeFieldMatrix::identity(3, 2).is_skew_symmetric());
    }
}
