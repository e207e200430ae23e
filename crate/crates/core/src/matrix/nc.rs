use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::search::sim_similar_tuple;
use super::{check_prime, MatrixError, PrimeFieldMatrix};

/// A polynomial over `F_p` in non-commuting variables `x1, x2, ...`.
///
/// Terms map words (variable indices, 0-based internally) to nonzero
/// coefficients; the empty word is the constant term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NCPolynomial {
    p: u64,
    terms: BTreeMap<Vec<usize>, u64>,
}

impl NCPolynomial {
    pub fn zero(p: u64) -> Self {
        NCPolynomial {
            p,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(p: u64, c: i64) -> Self {
        Self::monomial(p, c, Vec::new())
    }

    /// The variable `x_{i+1}`.
    pub fn variable(p: u64, i: usize) -> Self {
        Self::monomial(p, 1, vec![i])
    }

    pub fn monomial(p: u64, c: i64, word: Vec<usize>) -> Self {
        let mut out = Self::zero(p);
        out.add_term(word, c.rem_euclid(p as i64) as u64);
        out
    }

    fn add_term(&mut self, word: Vec<usize>, c: u64) {
        let p = self.p;
        let entry = self.terms.entry(word).or_insert(0);
        *entry = (*entry + c) % p;
        self.terms.retain(|_, c| *c != 0);
    }

    /// Parses sums of products such as `x1·x2 + 1`, `2*x1*x1 - x2` or `0`.
    /// Factors are separated by `*` or `·`; integer factors multiply the
    /// coefficient and `xk` is the `k`-th variable.
    pub fn parse(text: &str, p: u64) -> Result<Self, MatrixError> {
        check_prime(p)?;
        let err = || MatrixError::Parse(text.to_string());
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut out = Self::zero(p);
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let negative = rest.starts_with('-');
            if negative || rest.starts_with('+') {
                rest = &rest[1..];
            }
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            rest = tail;
            let mut coef: u64 = if negative { p - 1 } else { 1 };
            let mut word = Vec::new();
            for factor in term.split(['*', '·']) {
                if let Some(index) = factor.strip_prefix('x') {
                    let k: usize = index.parse().map_err(|_| err())?;
                    if k == 0 {
                        return Err(err());
                    }
                    word.push(k - 1);
                } else {
                    let c: u64 = factor.parse().map_err(|_| err())?;
                    coef = coef * (c % p) % p;
                }
            }
            out.add_term(word, coef);
        }
        Ok(out)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, u64> {
        &self.terms
    }

    /// One more than the largest variable index used.
    pub fn arity(&self) -> usize {
        self.terms
            .keys()
            .flat_map(|w| w.iter().map(|&i| i + 1))
            .max()
            .unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p, "moduli differ");
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p, "moduli differ");
        let mut out = Self::zero(self.p);
        for (w1, &c1) in &self.terms {
            for (w2, &c2) in &other.terms {
                out.add_term([w1.as_slice(), w2].concat(), c1 * c2 % self.p);
            }
        }
        out
    }

    pub fn scale(&self, c: u64) -> Self {
        let mut out = Self::zero(self.p);
        for (w, &v) in &self.terms {
            out.add_term(w.clone(), v * (c % self.p) % self.p);
        }
        out
    }

    /// Substitutes square matrices for the variables; the empty word becomes
    /// the identity.
    pub fn eval(&self, args: &[PrimeFieldMatrix]) -> Result<PrimeFieldMatrix, MatrixError> {
        if args.len() < self.arity() {
            return Err(MatrixError::Arity {
                expected: self.arity(),
                found: args.len(),
            });
        }
        let first = args
            .first()
            .ok_or_else(|| MatrixError::Dimension("no argument fixes the dimension".into()))?;
        let n = first.rows();
        for a in args {
            if a.modulus() != self.p {
                return Err(MatrixError::Modulus(self.p, a.modulus()));
            }
            if !a.is_square() || a.rows() != n {
                return Err(MatrixError::Dimension(
                    "arguments must be square of one size".into(),
                ));
            }
        }
        let mut acc = PrimeFieldMatrix::zero(self.p, n, n);
        for (word, &c) in &self.terms {
            let product = word
                .iter()
                .fold(PrimeFieldMatrix::identity(self.p, n), |m, &i| {
                    m.mul(&args[i])
                });
            acc = acc.add(&product.scale(c));
        }
        Ok(acc)
    }
}

impl fmt::Display for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, &c)| {
                let vars: Vec<String> = w.iter().map(|i| format!("x{}", i + 1)).collect();
                match (c, vars.is_empty()) {
                    (_, true) => c.to_string(),
                    (1, false) => vars.join("·"),
                    _ => format!("{c}·{}", vars.join("·")),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A `b`-tuple of block matrices with polynomial entries in `a` variables.
/// Evaluating at `n x n` matrices turns an `r x c` template matrix into an
/// `rn x cn` matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NCTemplate {
    arity: usize,
    p: u64,
    matrices: Vec<Vec<Vec<NCPolynomial>>>,
}

impl NCTemplate {
    pub fn new(
        arity: usize,
        p: u64,
        matrices: Vec<Vec<Vec<NCPolynomial>>>,
    ) -> Result<Self, MatrixError> {
        check_prime(p)?;
        for m in &matrices {
            let cols = m.first().map_or(0, Vec::len);
            if m.is_empty() || cols == 0 || m.iter().any(|r| r.len() != cols) {
                return Err(MatrixError::Ragged);
            }
            for poly in m.iter().flatten() {
                if poly.p != p {
                    return Err(MatrixError::Modulus(p, poly.p));
                }
                if poly.arity() > arity {
                    return Err(MatrixError::Arity {
                        expected: arity,
                        found: poly.arity(),
                    });
                }
            }
        }
        Ok(NCTemplate { arity, p, matrices })
    }

    /// Parses every entry with [`NCPolynomial::parse`].
    pub fn parse(arity: usize, p: u64, matrices: &[Vec<Vec<&str>>]) -> Result<Self, MatrixError> {
        let parsed = matrices
            .iter()
            .map(|m| {
                m.iter()
                    .map(|row| row.iter().map(|s| NCPolynomial::parse(s, p)).collect())
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        Self::new(arity, p, parsed)
    }

    /// The template `(x1, ..., xa)`.
    pub fn identity(arity: usize, p: u64) -> Self {
        let matrices = (0..arity)
            .map(|i| vec![vec![NCPolynomial::variable(p, i)]])
            .collect();
        NCTemplate { arity, p, matrices }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

/// Evaluates every template matrix at `args`.
pub fn nc_eval(
    t: &NCTemplate,
    args: &[PrimeFieldMatrix],
) -> Result<Vec<PrimeFieldMatrix>, MatrixError> {
    if args.len() != t.arity {
        return Err(MatrixError::Arity {
            expected: t.arity,
            found: args.len(),
        });
    }
    let n = args
        .first()
        .ok_or_else(|| MatrixError::Dimension("no argument fixes the dimension".into()))?
        .rows();
    t.matrices
        .iter()
        .map(|m| {
            let (r, c) = (m.len(), m[0].len());
            let mut entries = vec![0; r * n * c * n];
            for (bi, row) in m.iter().enumerate() {
                for (bj, poly) in row.iter().enumerate() {
                    let block = poly.eval(args)?;
                    for i in 0..n {
                        for j in 0..n {
                            entries[(bi * n + i) * c * n + bj * n + j] = block.get(i, j);
                        }
                    }
                }
            }
            Ok(PrimeFieldMatrix::from_flat(t.p, r * n, c * n, entries))
        })
        .collect()
}

/// Decides equivalence of two instances of one matrix problem.
pub trait EquivalenceOracle {
    fn equivalent(
        &self,
        x: &[PrimeFieldMatrix],
        y: &[PrimeFieldMatrix],
    ) -> Result<bool, MatrixError>;
}

impl<F> EquivalenceOracle for F
where
    F: Fn(&[PrimeFieldMatrix], &[PrimeFieldMatrix]) -> Result<bool, MatrixError>,
{
    fn equivalent(
        &self,
        x: &[PrimeFieldMatrix],
        y: &[PrimeFieldMatrix],
    ) -> Result<bool, MatrixError> {
        self(x, y)
    }
}

/// Simultaneous similarity of equally long tuples of square matrices.
#[derive(Debug, Clone, Copy, Default)]
pub struct SimultaneousSimilarity;

impl EquivalenceOracle for SimultaneousSimilarity {
    fn equivalent(
        &self,
        x: &[PrimeFieldMatrix],
        y: &[PrimeFieldMatrix],
    ) -> Result<bool, MatrixError> {
        Ok(sim_similar_tuple(x, y)?.is_some())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContainmentReport {
    pub source_equivalent: bool,
    pub target_equivalent: bool,
    /// Whether the template respects equivalence on this one instance pair.
    pub agrees: bool,
    pub image: Vec<PrimeFieldMatrix>,
    pub image_prime: Vec<PrimeFieldMatrix>,
}

/// Compares source equivalence of `a`, `a_prime` with target equivalence of
/// their images under `t`. A disagreement refutes the template as a
/// reduction; agreement on one pair proves nothing in general.
pub fn containment_check_instance(
    t: &NCTemplate,
    a: &[PrimeFieldMatrix],
    a_prime: &[PrimeFieldMatrix],
    equiv_src: &dyn EquivalenceOracle,
    equiv_dst: &dyn EquivalenceOracle,
) -> Result<ContainmentReport, MatrixError> {
    let source_equivalent = equiv_src.equivalent(a, a_prime)?;
    let image = nc_eval(t, a)?;
    let image_prime = nc_eval(t, a_prime)?;
    let target_equivalent = equiv_dst.equivalent(&image, &image_prime)?;
    Ok(ContainmentReport {
        source_equivalent,
        target_equivalent,
        agrees: source_equivalent == target_equivalent,
        image,
        image_prime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let q = NCPolynomial::parse("x1·x2 + 1", 5).unwrap();
        assert_eq!(q.terms().len(), 2);
        assert_eq!(q.to_string(), "1 + x1·x2");
        let r = NCPolynomial::parse("2*x1 - 2*x1", 5).unwrap();
        assert_eq!(r, NCPolynomial::zero(5));
        assert!(NCPolynomial::parse("x0", 5).is_err());
        assert!(NCPolynomial::parse("x1 +", 5).is_err());
    }

    #[test]
    fn eval_unfolds_definition() {
        let a = PrimeFieldMatrix::new(3, &[vec![1, 2], vec![0, 1]]).unwrap();
        let b = PrimeFieldMatrix::new(3, &[vec![0, 1], vec![1, 1]]).unwrap();
        let t = NCTemplate::parse(2, 3, &[vec![vec!["x1·x2 + 1"]]]).unwrap();
        let out = nc_eval(&t, &[a.clone(), b.clone()]).unwrap();
        assert_eq!(out, vec![a.mul(&b).add(&PrimeFieldMatrix::identity(3, 2))]);
    }

    #[test]
    fn block_template_shape() {
        let a = PrimeFieldMatrix::identity(2, 2);
        let t = NCTemplate::parse(1, 2, &[vec![vec!["x1", "0"], vec!["1", "x1"]]]).unwrap();
        let out = nc_eval(&t, &[a]).unwrap();
        assert_eq!((out[0].rows(), out[0].cols()), (4, 4));
        assert_eq!(out[0].get(2, 0), 1);
        assert_eq!(out[0].get(0, 2), 0);
    }
}
