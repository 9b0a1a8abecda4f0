//! Generic dense linear algebra over exact fields (`Q` and `Q(zeta_d)`).
//!
//! Everything here is plain Gaussian elimination with exact pivots; no
//! floating point, no tolerances.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Minimal field interface for exact elimination.
pub trait ExactField: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn from_rat(r: &BigRational) -> Self;
}

impl ExactField for BigRational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if <BigRational as Zero>::is_zero(self) {
            None
        } else {
            Some(<BigRational as One>::one() / self)
        }
    }
    fn is_zero(&self) -> bool {
        <BigRational as Zero>::is_zero(self)
    }
    fn from_rat(r: &BigRational) -> Self {
        r.clone()
    }
}

/// Row-reduce `mat` in place to reduced row echelon form; returns the
/// pivot column of each pivot row.
pub fn rref<K: ExactField>(mat: &mut [Vec<K>]) -> Vec<usize> {
    let rows = mat.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = mat[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = mat[r][c].inv().expect("pivot must be invertible");
        for j in c..cols {
            mat[r][j] = mat[r][j].mul(&inv);
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for j in c..cols {
                    let t = f.mul(&mat[r][j]);
                    mat[i][j] = mat[i][j].sub(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank<K: ExactField>(mat: &[Vec<K>]) -> usize {
    let mut m = mat.to_vec();
    rref(&mut m).len()
}

/// Solve `A x = b`; returns one solution if the system is consistent.
pub fn solve<K: ExactField>(a: &[Vec<K>], b: &[K]) -> Option<Vec<K>> {
    let rows = a.len();
    assert_eq!(rows, b.len());
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut aug: Vec<Vec<K>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut v = row.clone();
            v.push(rhs.clone());
            v
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&cols) {
        return None; // inconsistent
    }
    let mut x = vec![K::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

/// Basis of the kernel of `A`.
pub fn kernel<K: ExactField>(a: &[Vec<K>]) -> Vec<Vec<K>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m = a.to_vec();
    let pivots = rref(&mut m);
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![K::zero(); cols];
        v[free] = K::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = m[r][free].neg();
        }
        basis.push(v);
    }
    basis
}

/// Determinant by elimination.
pub fn det<K: ExactField>(mat: &[Vec<K>]) -> K {
    let n = mat.len();
    if n == 0 {
        return K::one();
    }
    assert!(mat.iter().all(|r| r.len() == n), "determinant needs a square matrix");
    let mut m = mat.to_vec();
    let mut result = K::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return K::zero();
        };
        if p != c {
            m.swap(p, c);
            result = result.neg();
        }
        result = result.mul(&m[c][c]);
        let inv = m[c][c].inv().unwrap();
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].mul(&inv);
            for j in c..n {
                let t = f.mul(&m[c][j]);
                m[i][j] = m[i][j].sub(&t);
            }
        }
    }
    result
}

/// Inverse of a square matrix, if it exists.
pub fn invert<K: ExactField>(mat: &[Vec<K>]) -> Option<Vec<Vec<K>>> {
    let n = mat.len();
    let mut aug: Vec<Vec<K>> = mat
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n);
            let mut v = row.clone();
            for j in 0..n {
                v.push(if i == j { K::one() } else { K::zero() });
            }
            v
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Matrix product.
pub fn mat_mul<K: ExactField>(a: &[Vec<K>], b: &[Vec<K>]) -> Vec<Vec<K>> {
    let n = a.len();
    let k = if n == 0 { 0 } else { a[0].len() };
    let m = if b.is_empty() { 0 } else { b[0].len() };
    assert_eq!(k, b.len());
    let mut out = vec![vec![K::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                let t = a[i][l].mul(&b[l][j]);
                out[i][j] = out[i][j].add(&t);
            }
        }
    }
    out
}

/// Matrix-vector product.
pub fn mat_vec<K: ExactField>(a: &[Vec<K>], x: &[K]) -> Vec<K> {
    a.iter()
        .map(|row| {
            let mut acc = K::zero();
            for (c, v) in row.iter().zip(x) {
                acc = acc.add(&c.mul(v));
            }
            acc
        })
        .collect()
}

pub fn identity<K: ExactField>(n: usize) -> Vec<Vec<K>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { K::one() } else { K::zero() })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| rat_int(x)).collect())
            .collect()
    }

    #[test]
    fn solve_and_kernel() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = vec![rat_int(5), rat_int(11)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(x, vec![rat_int(1), rat_int(2)]);
        let singular = m(&[&[1, 2], &[2, 4]]);
        assert!(solve(&singular, &vec![rat_int(1), rat_int(0)]).is_none());
        let k = kernel(&singular);
        assert_eq!(k.len(), 1);
        assert_eq!(mat_vec(&singular, &k[0]), vec![rat_int(0), rat_int(0)]);
    }

    #[test]
    fn det_and_invert() {
        let a = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(det(&a), rat_int(1));
        let inv = invert(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(2));
        assert_eq!(det(&m(&[&[1, 2], &[2, 4]])), rat_int(0));
    }
}
