//! Sparse multivariate polynomials and polynomial matrices over an exact
//! coefficient field.
//!
//! Exponent vectors always have length `nvars`; zero coefficients are
//! never stored. The degree of the zero polynomial is `None` (a minus
//! infinity sentinel), never a number.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{Cyclotomic, Rat};
use crate::linalg::ExactField;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable index {index} out of range for {nvars} variables")]
    VarOutOfRange { index: usize, nvars: usize },
    #[error("polynomial arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("polynomial is not homogeneous: found degrees {0} and {1}")]
    NotHomogeneous(usize, usize),
    #[error("invalid polynomial data: {0}")]
    Invalid(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<K: ExactField = Rat> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, K>,
}

impl<K: ExactField> Poly<K> {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: K) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, K::one())
    }

    pub fn var(nvars: usize, i: usize) -> Result<Self, PolyError> {
        if i >= nvars {
            return Err(PolyError::VarOutOfRange { index: i, nvars });
        }
        let mut e = vec![0u32; nvars];
        e[i] = 1;
        Ok(Self::monomial(nvars, e, K::one()))
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, c: K) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &K)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> K {
        self.terms.get(exps).cloned().unwrap_or_else(K::zero)
    }

    pub fn constant_part(&self) -> K {
        self.coeff(&vec![0; self.nvars])
    }

    fn check_arity(&self, other: &Self) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            Err(PolyError::ArityMismatch(self.nvars, other.nvars))
        } else {
            Ok(())
        }
    }

    fn insert_add(&mut self, exps: Vec<u32>, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(existing) => {
                *existing = existing.add(&c);
                if existing.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_arity(other).expect("arity mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_arity(other).expect("arity mismatch");
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.insert_add(e, ca.mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, k: &K) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.insert_add(e.clone(), c.mul(k));
        }
        out
    }

    pub fn partial_derivative(&self, i: usize) -> Result<Self, PolyError> {
        if i >= self.nvars {
            return Err(PolyError::VarOutOfRange { index: i, nvars: self.nvars });
        }
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            // multiply coefficient by the exponent
            let mut factor = K::zero();
            for _ in 0..e[i] {
                factor = factor.add(&K::one());
            }
            out.insert_add(e2, c.mul(&factor));
        }
        Ok(out)
    }

    /// Substitute `subs[i]` for variable `i`. All substituted polynomials
    /// must share an arity, which becomes the arity of the result.
    pub fn substitute(&self, subs: &[Poly<K>]) -> Result<Self, PolyError> {
        if subs.len() != self.nvars {
            return Err(PolyError::ArityMismatch(subs.len(), self.nvars));
        }
        let target = subs.first().map_or(0, |p| p.nvars);
        for s in subs {
            if s.nvars != target {
                return Err(PolyError::ArityMismatch(s.nvars, target));
            }
        }
        let mut out = Poly::zero(target);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for (i, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    term = term.mul(&subs[i]);
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
    }

    /// The common total degree of all terms; `Ok(None)` for the zero
    /// polynomial, an error when degrees are mixed.
    pub fn homogeneous_degree(&self) -> Result<Option<usize>, PolyError> {
        let mut deg = None;
        for e in self.terms.keys() {
            let d: usize = e.iter().map(|&x| x as usize).sum();
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => return Err(PolyError::NotHomogeneous(prev, d)),
                _ => {}
            }
        }
        Ok(deg)
    }

    pub fn is_homogeneous_of_degree(&self, d: usize) -> bool {
        match self.homogeneous_degree() {
            Ok(None) => true, // zero polynomial is homogeneous of every degree
            Ok(Some(k)) => k == d,
            Err(_) => false,
        }
    }

    pub fn map_coeffs<L: ExactField>(&self, f: impl Fn(&K) -> L) -> Poly<L> {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.insert_add(e.clone(), f(c));
        }
        out
    }
}

impl Poly<Rat> {
    /// Lift a rational-coefficient polynomial into cyclotomic scalars.
    pub fn to_cyclotomic(&self) -> Poly<Cyclotomic> {
        self.map_coeffs(|c| Cyclotomic::from_rat(c.clone()))
    }
}

impl<K: ExactField + fmt::Display> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "({})", c)?;
            for (i, &exp) in e.iter().enumerate() {
                match exp {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{}", i + 1, exp)?,
                }
            }
        }
        Ok(())
    }
}

/// Euler vector field `sum_i x_i d/dx_i` applied to `p`; equals
/// `deg(p) * p` on homogeneous input.
pub fn euler_operator<K: ExactField>(p: &Poly<K>) -> Poly<K> {
    let mut out = Poly::zero(p.nvars());
    for i in 0..p.nvars() {
        let xi = Poly::var(p.nvars(), i).unwrap();
        out = out.add(&xi.mul(&p.partial_derivative(i).unwrap()));
    }
    out
}

/// Fermat potential `x_1^d + ... + x_n^d`.
pub fn fermat(nvars: usize, d: u32) -> Poly<Rat> {
    let mut w = Poly::zero(nvars);
    for i in 0..nvars {
        let mut e = vec![0u32; nvars];
        e[i] = d;
        w = w.add(&Poly::monomial(nvars, e, Rat::from_integer(1.into())));
    }
    w
}

/// The standard six-variable cubic `x1^3+x2^3+x3^3 + x1 x4^2 + x2 x5^2 + x3 x6^2`,
/// a cubic containing the plane `x1 = x2 = x3 = 0`.
pub fn fermat_plane_cubic() -> Poly<Rat> {
    let mono = |e: [u32; 6]| Poly::monomial(6, e.to_vec(), Rat::from_integer(1.into()));
    mono([3, 0, 0, 0, 0, 0])
        .add(&mono([0, 3, 0, 0, 0, 0]))
        .add(&mono([0, 0, 3, 0, 0, 0]))
        .add(&mono([1, 0, 0, 2, 0, 0]))
        .add(&mono([0, 1, 0, 0, 2, 0]))
        .add(&mono([0, 0, 1, 0, 0, 2]))
}

// ---------------------------------------------------------------------
// Polynomial matrices.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix<K: ExactField = Rat> {
    rows: usize,
    cols: usize,
    nvars: usize,
    data: Vec<Poly<K>>,
}

impl<K: ExactField> PolyMatrix<K> {
    pub fn zero(rows: usize, cols: usize, nvars: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            nvars,
            data: vec![Poly::zero(nvars); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Poly<K>>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let nvars = rows
            .first()
            .and_then(|row| row.first())
            .map_or(0, |p| p.nvars());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            for p in row {
                assert_eq!(p.nvars(), nvars, "mixed arities");
                data.push(p);
            }
        }
        PolyMatrix { rows: r, cols: c, nvars, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly<K> {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly<K>) {
        assert_eq!(p.nvars(), self.nvars);
        self.data[i * self.cols + j] = p;
    }

    pub fn identity_times(n: usize, nvars: usize, p: &Poly<K>) -> Self {
        let mut m = Self::zero(n, n, nvars);
        for i in 0..n {
            m.set(i, i, p.clone());
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zero(self.rows, other.cols, self.nvars);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.mul(b);
                    let cur = out.get(i, j).add(&prod);
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.add(b);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.sub(b);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.neg();
        }
        out
    }

    pub fn scale_poly(&self, p: &Poly<K>) -> Self {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.mul(p);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|p| p.is_zero())
    }

    /// Entry-wise partial derivative.
    pub fn entrywise_derivative(&self, var: usize) -> Result<Self, PolyError> {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.partial_derivative(var)?;
        }
        Ok(out)
    }

    /// Block matrix [[a, b], [c, d]]; pass zero blocks as needed.
    pub fn block2(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        assert_eq!(a.rows, b.rows);
        assert_eq!(c.rows, d.rows);
        assert_eq!(a.cols, c.cols);
        assert_eq!(b.cols, d.cols);
        let mut out = Self::zero(a.rows + c.rows, a.cols + b.cols, a.nvars.max(c.nvars));
        for i in 0..a.rows {
            for j in 0..a.cols {
                out.set(i, j, a.get(i, j).clone());
            }
            for j in 0..b.cols {
                out.set(i, a.cols + j, b.get(i, j).clone());
            }
        }
        for i in 0..c.rows {
            for j in 0..c.cols {
                out.set(a.rows + i, j, c.get(i, j).clone());
            }
            for j in 0..d.cols {
                out.set(a.rows + i, a.cols + j, d.get(i, j).clone());
            }
        }
        out
    }

    /// Trace of the square matrix.
    pub fn trace(&self) -> Poly<K> {
        assert_eq!(self.rows, self.cols);
        let mut t = Poly::zero(self.nvars);
        for i in 0..self.rows {
            t = t.add(self.get(i, i));
        }
        t
    }

    /// Determinant by Laplace expansion; fine for the small matrices here.
    pub fn det(&self) -> Poly<K> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return Poly::one(self.nvars);
        }
        if n == 1 {
            return self.get(0, 0).clone();
        }
        let mut out = Poly::zero(self.nvars);
        for j in 0..n {
            let entry = self.get(0, j);
            if entry.is_zero() {
                continue;
            }
            let mut minor = PolyMatrix::zero(n - 1, n - 1, self.nvars);
            for i in 1..n {
                let mut cc = 0;
                for c in 0..n {
                    if c == j {
                        continue;
                    }
                    minor.set(i - 1, cc, self.get(i, c).clone());
                    cc += 1;
                }
            }
            let term = entry.mul(&minor.det());
            out = if j % 2 == 0 { out.add(&term) } else { out.sub(&term) };
        }
        out
    }
}

// ---------------------------------------------------------------------
// JSON schema: {"nvars": n, "terms": [{"c": "coeff", "e": [e1..en]}]}.
// Coefficients are rational strings; cyclotomic strings are accepted when
// they describe a rational value.

#[derive(Serialize, Deserialize)]
pub struct PolyRepr {
    pub nvars: usize,
    pub terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize)]
pub struct TermRepr {
    pub c: String,
    pub e: Vec<u32>,
}

impl Poly<Rat> {
    pub fn to_repr(&self) -> PolyRepr {
        PolyRepr {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermRepr {
                    c: c.to_string(),
                    e: e.clone(),
                })
                .collect(),
        }
    }

    pub fn from_repr(repr: &PolyRepr) -> Result<Self, PolyError> {
        let mut p = Poly::zero(repr.nvars);
        for t in &repr.terms {
            if t.e.len() != repr.nvars {
                return Err(PolyError::Invalid(format!(
                    "exponent vector {:?} has wrong length, expected {}",
                    t.e, repr.nvars
                )));
            }
            let z = Cyclotomic::parse(&t.c)
                .map_err(|e| PolyError::Invalid(e.to_string()))?;
            let c = z.simplify().to_rat().ok_or_else(|| {
                PolyError::Invalid(format!("coefficient '{}' is not rational", t.c))
            })?;
            p.insert_add(t.e.clone(), c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat_frac, rat_int};
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn x(n: usize, i: usize) -> Poly<Rat> {
        Poly::var(n, i).unwrap()
    }

    #[test]
    fn derivatives() {
        let p = x(1, 0).mul(&x(1, 0)).mul(&x(1, 0)); // x^3
        let dp = p.partial_derivative(0).unwrap();
        assert_eq!(dp, x(1, 0).mul(&x(1, 0)).scale(&rat_int(3)));
        let w = fermat_plane_cubic();
        let d4 = w.partial_derivative(3).unwrap();
        let expected = Poly::monomial(6, vec![1, 0, 0, 1, 0, 0], rat_int(2));
        assert_eq!(d4, expected);
        assert!(w.partial_derivative(6).is_err());
    }

    #[test]
    fn euler_identity_on_cubics() {
        for w in [fermat(3, 3), fermat_plane_cubic(), fermat(6, 3)] {
            assert_eq!(euler_operator(&w), w.scale(&rat_int(3)));
        }
    }

    #[test]
    fn homogeneity() {
        let p = x(3, 0).mul(&x(3, 1)).add(&x(3, 2).mul(&x(3, 2)));
        assert_eq!(p.homogeneous_degree().unwrap(), Some(2));
        assert_eq!(Poly::<Rat>::zero(3).homogeneous_degree().unwrap(), None);
        let q = x(2, 0).add(&x(2, 1).mul(&x(2, 1)));
        assert!(q.homogeneous_degree().is_err());
    }

    fn random_poly(rng: &mut ChaCha8Rng, nvars: usize, max_deg: u32) -> Poly<Rat> {
        let mut p = Poly::zero(nvars);
        for _ in 0..rng.gen_range(1..6) {
            let mut e = vec![0u32; nvars];
            let mut left = max_deg;
            for v in e.iter_mut() {
                *v = rng.gen_range(0..=left);
                left -= *v;
            }
            p = p.add(&Poly::monomial(
                nvars,
                e,
                rat_frac(rng.gen_range(-5..=5), rng.gen_range(1..=3)),
            ));
        }
        p
    }

    #[test]
    fn leibniz_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..25 {
            let a = random_poly(&mut rng, 3, 3);
            let b = random_poly(&mut rng, 3, 3);
            for i in 0..3 {
                let lhs = a.mul(&b).partial_derivative(i).unwrap();
                let rhs = a
                    .partial_derivative(i)
                    .unwrap()
                    .mul(&b)
                    .add(&a.mul(&b.partial_derivative(i).unwrap()));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn derivative_commutes_with_constant_substitution() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..10 {
            let p = random_poly(&mut rng, 3, 3);
            // substitute a constant for x3 only
            let c = rat_int(rng.gen_range(-3..=3));
            let subs = vec![
                x(3, 0),
                x(3, 1),
                Poly::constant(3, c.clone()),
            ];
            for i in 0..2 {
                let lhs = p.partial_derivative(i).unwrap().substitute(&subs).unwrap();
                let rhs = p.substitute(&subs).unwrap().partial_derivative(i).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn matrix_product() {
        let w = x(2, 0).mul(&x(2, 1)); // xy
        let p0 = PolyMatrix::from_rows(vec![vec![x(2, 0)]]);
        let p1 = PolyMatrix::from_rows(vec![vec![x(2, 1)]]);
        let prod = p1.mul(&p0);
        assert_eq!(prod.get(0, 0), &w);
        let id_w = PolyMatrix::identity_times(1, 2, &w);
        assert_eq!(prod, id_w);
    }

    #[test]
    fn small_determinant() {
        let m = PolyMatrix::from_rows(vec![
            vec![x(2, 0), Poly::one(2)],
            vec![Poly::one(2), x(2, 1)],
        ]);
        let d = m.det();
        assert_eq!(d, x(2, 0).mul(&x(2, 1)).sub(&Poly::one(2)));
    }

    #[test]
    fn json_roundtrip() {
        let w = fermat_plane_cubic();
        let repr = w.to_repr();
        let json = serde_json::to_string(&repr).unwrap();
        let back: PolyRepr = serde_json::from_str(&json).unwrap();
        assert_eq!(Poly::from_repr(&back).unwrap(), w);
        // cyclotomic coefficient strings are accepted when rational
        let repr = PolyRepr {
            nvars: 1,
            terms: vec![TermRepr {
                c: "z + z^2 + z^3 + z^4 @ 5".into(), // = -1
                e: vec![2],
            }],
        };
        let p = Poly::from_repr(&repr).unwrap();
        assert_eq!(p, Poly::monomial(1, vec![2], rat_int(-1)));
        let bad = PolyRepr {
            nvars: 1,
            terms: vec![TermRepr { c: "z @ 5".into(), e: vec![1] }],
        };
        assert!(Poly::from_repr(&bad).is_err());
    }
}
