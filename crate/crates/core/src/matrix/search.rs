use std::collections::BTreeSet;

use super::{check_prime, MatrixError, MatrixPair, PrimeFieldMatrix, SCALE_LIMIT};

fn guard(n: usize, p: u64) -> Result<(), MatrixError> {
    check_prime(p)?;
    let n_sq = n * n;
    match u32::try_from(n_sq).ok().and_then(|e| p.checked_pow(e)) {
        Some(count) if count <= SCALE_LIMIT => Ok(()),
        _ => Err(MatrixError::ScaleGuard { p, n_sq }),
    }
}

/// All `n x n` matrices over `F_p` in lexicographic order of their row-major
/// entry vectors.
struct AllMatrices {
    p: u64,
    n: usize,
    next: Option<Vec<u64>>,
}

impl Iterator for AllMatrices {
    type Item = PrimeFieldMatrix;

    fn next(&mut self) -> Option<PrimeFieldMatrix> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for i in (0..succ.len()).rev() {
            succ[i] += 1;
            if succ[i] < self.p {
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(PrimeFieldMatrix::from_flat(self.p, self.n, self.n, current))
    }
}

fn invertible(n: usize, p: u64) -> Result<impl Iterator<Item = PrimeFieldMatrix>, MatrixError> {
    guard(n, p)?;
    let all = AllMatrices {
        p,
        n,
        next: Some(vec![0; n * n]),
    };
    Ok(all.filter(move |m| m.rank() == n))
}

/// `|GL(n, p)| = prod_{k<n} (p^n - p^k)`, or `None` on overflow.
pub fn gl_order(n: usize, p: u64) -> Option<u64> {
    let pn = p.checked_pow(u32::try_from(n).ok()?)?;
    (0..n).try_fold(1u64, |acc, k| acc.checked_mul(pn - p.pow(k as u32)))
}

/// Every invertible `n x n` matrix over `F_p`, in lexicographic order.
pub fn gl_enumerate(n: usize, p: u64) -> Result<Vec<PrimeFieldMatrix>, MatrixError> {
    Ok(invertible(n, p)?.collect())
}

fn common_shape(ms: &[&PrimeFieldMatrix]) -> Result<(usize, u64), MatrixError> {
    let first = ms
        .first()
        .ok_or_else(|| MatrixError::Dimension("empty tuple".into()))?;
    let (n, p) = (first.rows(), first.modulus());
    for m in ms {
        if m.modulus() != p {
            return Err(MatrixError::Modulus(p, m.modulus()));
        }
        if !m.is_square() {
            return Err(MatrixError::NotSquare);
        }
        if m.rows() != n {
            return Err(MatrixError::Dimension(format!("{} and {}", n, m.rows())));
        }
    }
    Ok((n, p))
}

/// The first `S` in lexicographic order with `S X_i S^-1 = Y_i` for every
/// `i`. The returned conjugator is re-verified.
pub fn sim_similar_tuple(
    xs: &[PrimeFieldMatrix],
    ys: &[PrimeFieldMatrix],
) -> Result<Option<PrimeFieldMatrix>, MatrixError> {
    if xs.len() != ys.len() {
        return Err(MatrixError::Arity {
            expected: xs.len(),
            found: ys.len(),
        });
    }
    let all: Vec<&PrimeFieldMatrix> = xs.iter().chain(ys).collect();
    let (n, p) = common_shape(&all)?;
    for s in invertible(n, p)? {
        // S X = Y S avoids computing an inverse per candidate
        if xs.iter().zip(ys).all(|(x, y)| s.mul(x) == y.mul(&s)) {
            let si = s.inverse()?;
            let verified = xs.iter().zip(ys).all(|(x, y)| &s.mul(x).mul(&si) == y);
            assert!(verified, "conjugator failed re-verification");
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// Simultaneous similarity of two pairs.
pub fn sim_similar(
    p1: &MatrixPair,
    p2: &MatrixPair,
) -> Result<Option<PrimeFieldMatrix>, MatrixError> {
    sim_similar_tuple(&p1.as_tuple(), &p2.as_tuple())
}

/// The set of pairs `(S A S^-1, S B S^-1)` over all of `GL(n, p)`.
pub fn conjugation_orbit(pair: &MatrixPair) -> Result<BTreeSet<MatrixPair>, MatrixError> {
    invertible(pair.dim(), pair.modulus())?
        .map(|s| pair.conjugate(&s))
        .collect()
}

/// The invertible `S` commuting with both matrices of the pair.
pub fn similarity_stabilizer(pair: &MatrixPair) -> Result<Vec<PrimeFieldMatrix>, MatrixError> {
    Ok(invertible(pair.dim(), pair.modulus())?
        .filter(|s| s.mul(&pair.a) == pair.a.mul(s) && s.mul(&pair.b) == pair.b.mul(s))
        .collect())
}

/// Words over `{A, B}` (encoded `0`, `1`) of length `1..=maxlen`, ordered by
/// length and then lexicographically with `A < B`.
pub fn words(maxlen: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..maxlen {
        layer = layer
            .iter()
            .flat_map(|w| {
                [0u8, 1].map(|c| {
                    let mut w = w.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Traces of every word in `A`, `B` of length at most `maxlen`, in the order
/// of [`words`]. Conjugate pairs have equal lists.
pub fn trace_word_invariants(pair: &MatrixPair, maxlen: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let n = pair.dim();
    let mut layer = vec![PrimeFieldMatrix::identity(pair.modulus(), n)];
    for _ in 0..maxlen {
        layer = layer
            .iter()
            .flat_map(|m| [m.mul(&pair.a), m.mul(&pair.b)])
            .collect();
        out.extend(layer.iter().map(PrimeFieldMatrix::trace));
    }
    out
}

/// The first invertible `S` in lexicographic order with `S M1 S^T = M2`.
///
/// Both inputs must satisfy `M^T = -M`. Over `F_2` this admits symmetric
/// matrices with nonzero diagonal as well as alternating ones.
pub fn skew_congruent(
    m1: &PrimeFieldMatrix,
    m2: &PrimeFieldMatrix,
) -> Result<Option<PrimeFieldMatrix>, MatrixError> {
    let (n, p) = common_shape(&[m1, m2])?;
    if !m1.is_skew_symmetric() || !m2.is_skew_symmetric() {
        return Err(MatrixError::NotSkewSymmetric);
    }
    for s in invertible(n, p)? {
        if &s.mul(m1).mul(&s.transpose()) == m2 {
            assert_eq!(m1.rank(), m2.rank(), "congruence changed the rank");
            return Ok(Some(s));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_counts() {
        assert_eq!(gl_enumerate(1, 2).unwrap().len(), 1);
        assert_eq!(gl_enumerate(2, 2).unwrap().len(), 6);
        assert_eq!(gl_enumerate(2, 3).unwrap().len(), 48);
        assert_eq!(gl_order(2, 3), Some(48));
        assert!(matches!(
            gl_enumerate(3, 7),
            Err(MatrixError::ScaleGuard { .. })
        ));
    }

    #[test]
    fn word_order() {
        assert_eq!(
            words(2),
            vec![
                vec![0],
                vec![1],
                vec![0, 0],
                vec![0, 1],
                vec![1, 0],
                vec![1, 1]
            ]
        );
    }

    #[test]
    fn identity_pair_traces() {
        let i = PrimeFieldMatrix::identity(3, 2);
        let pair = MatrixPair::new(i.clone(), i).unwrap();
        assert_eq!(trace_word_invariants(&pair, 1), vec![2, 2]);
    }

    #[test]
    fn zero_pair_is_isolated() {
        let z = PrimeFieldMatrix::zero(2, 2, 2);
        let b = PrimeFieldMatrix::new(2, &[vec![0, 1], vec![0, 0]]).unwrap();
        let p1 = MatrixPair::new(z.clone(), z.clone()).unwrap();
        let p2 = MatrixPair::new(z, b).unwrap();
        assert_eq!(sim_similar(&p1, &p2).unwrap(), None);
    }

    #[test]
    fn skew_forms_over_f3() {
        let m = PrimeFieldMatrix::new(3, &[vec![0, 1], vec![-1, 0]]).unwrap();
        let m2 = m.scale(2);
        assert!(skew_congruent(&m, &m2).unwrap().is_some());
        let z = PrimeFieldMatrix::zero(3, 2, 2);
        assert_eq!(skew_congruent(&z, &m).unwrap(), None);
        let not_skew = PrimeFieldMatrix::identity(3, 2);
        assert_eq!(
            skew_congruent(&not_skew, &m),
            Err(MatrixError::NotSkewSymmetric)
        );
    }
}
