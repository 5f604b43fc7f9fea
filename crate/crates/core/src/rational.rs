//! Exact rational scalars, vectors and small dense matrices.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = Ratio<i64>;
pub type QVec = Vec<Q>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

pub fn qvec(v: &[i64]) -> QVec {
    v.iter().map(|&x| q(x)).collect()
}

pub fn zero_vec(n: usize) -> QVec {
    vec![Q::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> QVec {
    let mut v = zero_vec(n);
    v[i] = Q::one();
    v
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

pub fn add(a: &[Q], b: &[Q]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Q], b: &[Q]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Q], s: Q) -> QVec {
    a.iter().map(|x| x * s).collect()
}

pub fn neg(a: &[Q]) -> QVec {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero_vec(a: &[Q]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Positive in the lexicographic order: first nonzero coordinate is positive.
pub fn lex_positive(a: &[Q]) -> bool {
    a.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive())
}

/// Reflection of `v` in the hyperplane orthogonal to `alpha`.
pub fn reflect(v: &[Q], alpha: &[Q]) -> QVec {
    let c = q(2) * dot(v, alpha) / dot(alpha, alpha);
    sub(v, &scale(alpha, c))
}

pub fn to_big(x: &Q) -> BigRational {
    BigRational::new(BigInt::from(*x.numer()), BigInt::from(*x.denom()))
}

pub fn is_integer_vec(a: &[Q]) -> bool {
    a.iter().all(|x| x.is_integer())
}

pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn fmt_vec(v: &[Q]) -> String {
    v.iter().map(fmt_q).collect::<Vec<_>>().join(",")
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => s.parse::<i64>().map(q).map_err(|_| bad()),
    }
}

pub fn parse_vec(s: &str) -> Result<QVec> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_q).collect()
}

/// Dense row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMat { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_columns(cols: &[QVec], rows: usize) -> Self {
        let mut m = QMat::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..rows {
                m[(i, j)] = c[i];
            }
        }
        m
    }

    /// Matrix of the reflection in the hyperplane orthogonal to `alpha`.
    pub fn reflection(alpha: &[Q]) -> Self {
        let n = alpha.len();
        let nn = dot(alpha, alpha);
        let mut m = QMat::identity(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] -= q(2) * alpha[i] * alpha[j] / nn;
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

    pub fn column(&self, j: usize) -> QVec {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = QMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows);
        let mut out = QMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Q]) -> QVec {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).fold(Q::zero(), |acc, j| acc + self[(i, j)] * v[j]))
            .collect()
    }

    pub fn add(&self, other: &QMat) -> QMat {
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        QMat { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &QMat) -> QMat {
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        QMat { rows: self.rows, cols: self.cols, data }
    }

    /// Inverse by Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<QMat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = QMat::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                    inv.data.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a[(col, col)];
            for j in 0..n {
                a[(col, j)] /= p;
                inv[(col, j)] /= p;
            }
            for r in 0..n {
                if r != col {
                    let f = a[(r, col)];
                    if f.is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        let (ac, ic) = (a[(col, j)], inv[(col, j)]);
                        a[(r, j)] -= f * ac;
                        inv[(r, j)] -= f * ic;
                    }
                }
            }
        }
        Some(inv)
    }

    /// Determinant by fraction-exact elimination.
    pub fn determinant(&self) -> Q {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Q::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Q::zero();
            };
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                }
                det = -det;
            }
            let p = a[(col, col)];
            det *= p;
            for r in col + 1..n {
                let f = a[(r, col)] / p;
                if f.is_zero() {
                    continue;
                }
                for j in col..n {
                    let c = a[(col, j)];
                    a[(r, j)] -= f * c;
                }
            }
        }
        det
    }
}

impl std::ops::Index<(usize, usize)> for QMat {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }
}

/// Gram matrix `G[i][j] = v_i . v_j`.
pub fn gram(vectors: &[QVec]) -> QMat {
    let n = vectors.len();
    let mut g = QMat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            g[(i, j)] = dot(&vectors[i], &vectors[j]);
        }
    }
    g
}

/// Rank of a list of vectors.
pub fn rank(vectors: &[QVec]) -> usize {
    let mut rows: Vec<QVec> = vectors.to_vec();
    let mut r = 0;
    let cols = rows.first().map_or(0, Vec::len);
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c] / rows[r][c];
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x -= f * y;
                }
            }
        }
        r += 1;
    }
    r
}

/// Orthogonal (not normalized) basis from a spanning list, Gram-Schmidt over Q.
pub fn gram_schmidt(vectors: &[QVec]) -> Vec<QVec> {
    let mut out: Vec<QVec> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for b in &out {
            let c = dot(&w, b) / dot(b, b);
            w = sub(&w, &scale(b, c));
        }
        if !is_zero_vec(&w) {
            out.push(w);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_q("3/6").unwrap(), qf(1, 2));
        assert_eq!(parse_q(" -4 ").unwrap(), q(-4));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
        let v = parse_vec("1,0,1/2").unwrap();
        assert_eq!(fmt_vec(&v), "1,0,1/2");
    }

    #[test]
    fn inverse_and_determinant() {
        let mut m = QMat::zeros(2, 2);
        m[(0, 0)] = q(2);
        m[(0, 1)] = q(1);
        m[(1, 0)] = q(1);
        m[(1, 1)] = q(1);
        assert_eq!(m.determinant(), q(1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), QMat::identity(2));
        assert!(QMat::zeros(2, 2).inverse().is_none());
    }

    #[test]
    fn reflection_is_involutive() {
        let a = qvec(&[1, -1, 0]);
        let r = QMat::reflection(&a);
        assert_eq!(r.mul(&r), QMat::identity(3));
        assert_eq!(r.determinant(), q(-1));
        assert_eq!(r.apply(&a), neg(&a));
    }

    #[test]
    fn rank_and_orthogonalization() {
        let vs = vec![qvec(&[1, 1, 0]), qvec(&[2, 2, 0]), qvec(&[0, 1, 1])];
        assert_eq!(rank(&vs), 2);
        let ob = gram_schmidt(&vs);
        assert_eq!(ob.len(), 2);
        assert_eq!(dot(&ob[0], &ob[1]), Q::zero());
    }
}
