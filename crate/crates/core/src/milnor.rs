//! Degree-bounded linear algebra in the Jacobian (Milnor) ring
//! `A/(dW/dx_1, ..., dW/dx_n)` of a homogeneous potential.
//!
//! No Groebner machinery: for a homogeneous isolated singularity the ring
//! is concentrated in degrees `<= n(d-2)`, so every question reduces to
//! row reduction of Macaulay multiplication matrices, one degree at a
//! time. Monomial columns are ordered by graded reverse lexicographic
//! order for pivot selection; the quotient basis in each degree is the
//! set of non-pivot monomials.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_traits::Zero;
use thiserror::Error;

use crate::exact::Rat;
use crate::poly::{Poly, PolyError, PolyMatrix};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MilnorError {
    #[error("potential must be homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("potential must have degree >= 2, got {0}")]
    DegreeTooSmall(usize),
    #[error("degree {degree} outside the stored range 0..={top}")]
    DegreeOutOfRange { degree: usize, top: usize },
    #[error("input must be homogeneous of a single degree")]
    MixedInput,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Graded reverse lexicographic comparison (grevlex). Higher total degree
/// wins; ties are broken so that the monomial with the smaller trailing
/// exponent difference is larger.
pub fn cmp_grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&x| u64::from(x)).sum();
    let db: u64 = b.iter().map(|&x| u64::from(x)).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// All monomials of total degree `d` in `nvars` variables, sorted
/// grevlex-descending.
pub fn monomials_of_degree(nvars: usize, d: usize) -> Vec<Vec<u32>> {
    fn rec(nvars: usize, d: usize, out: &mut Vec<Vec<u32>>, prefix: &mut Vec<u32>) {
        if nvars == 1 {
            prefix.push(d as u32);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=d).rev() {
            prefix.push(k as u32);
            rec(nvars - 1, d - k, out, prefix);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(nvars, d, &mut out, &mut Vec::new());
    out.sort_by(|a, b| cmp_grevlex(b, a));
    out
}

type SparseRow = Vec<(usize, Rat)>;

/// Echelonized Macaulay data for one degree.
struct DegreeData {
    monos: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
    /// pivot column -> normalized row (leading coefficient 1, support to
    /// the right of the pivot)
    pivot_rows: HashMap<usize, SparseRow>,
    basis_cols: Vec<usize>,
}

impl DegreeData {
    fn reduce(&self, mut v: Vec<Rat>) -> Vec<Rat> {
        for c in 0..v.len() {
            if v[c].is_zero() {
                continue;
            }
            if let Some(row) = self.pivot_rows.get(&c) {
                let f = std::mem::replace(&mut v[c], Rat::zero());
                for (j, coeff) in row {
                    if *j == c {
                        continue;
                    }
                    let t = coeff * &f;
                    v[*j] -= t;
                }
            }
        }
        v
    }
}

/// Graded data of the Milnor ring of a homogeneous potential, stored for
/// degrees `0..=n(d-2)+1`.
pub struct MilnorData {
    w: Poly<Rat>,
    nvars: usize,
    degree: usize,
    dims: Vec<usize>,
    isolated: bool,
    milnor_number: usize,
    per_degree: Vec<DegreeData>,
}

impl MilnorData {
    pub fn new(w: &Poly<Rat>) -> Result<Self, MilnorError> {
        let degree = match w.homogeneous_degree() {
            Ok(Some(d)) => d,
            Ok(None) => return Err(MilnorError::DegreeTooSmall(0)),
            Err(e) => return Err(MilnorError::NotHomogeneous(e.to_string())),
        };
        if degree < 2 {
            return Err(MilnorError::DegreeTooSmall(degree));
        }
        let nvars = w.nvars();
        let top = nvars * (degree - 2);
        let partials: Vec<Poly<Rat>> = (0..nvars)
            .map(|i| w.partial_derivative(i).unwrap())
            .collect();
        let mut per_degree = Vec::with_capacity(top + 2);
        let mut dims = Vec::with_capacity(top + 2);
        for k in 0..=top + 1 {
            let data = echelonize_degree(nvars, k, degree, &partials);
            dims.push(data.basis_cols.len());
            per_degree.push(data);
        }
        let isolated = dims[top + 1] == 0;
        let milnor_number = dims.iter().take(top + 1).sum();
        Ok(MilnorData {
            w: w.clone(),
            nvars,
            degree,
            dims,
            isolated,
            milnor_number,
            per_degree,
        })
    }

    pub fn potential(&self) -> &Poly<Rat> {
        &self.w
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn potential_degree(&self) -> usize {
        self.degree
    }

    /// Top degree `n(d-2)` of the Milnor ring for isolated potentials.
    pub fn top_degree(&self) -> usize {
        self.nvars * (self.degree - 2)
    }

    /// Graded dimensions for degrees `0..=n(d-2)+1`.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn is_isolated(&self) -> bool {
        self.isolated
    }

    /// Total dimension over degrees `0..=n(d-2)`; the Milnor number when
    /// the singularity is isolated.
    pub fn milnor_number(&self) -> usize {
        self.milnor_number
    }

    /// Monomial basis of the degree-`k` piece of the quotient.
    pub fn basis(&self, k: usize) -> Result<Vec<Vec<u32>>, MilnorError> {
        let data = self.degree_data(k)?;
        Ok(data.basis_cols.iter().map(|&c| data.monos[c].clone()).collect())
    }

    fn degree_data(&self, k: usize) -> Result<&DegreeData, MilnorError> {
        self.per_degree.get(k).ok_or(MilnorError::DegreeOutOfRange {
            degree: k,
            top: self.top_degree() + 1,
        })
    }

    /// Coefficients of the class of `p` in the stored monomial basis of
    /// its degree.
    pub fn normal_form(&self, p: &Poly<Rat>) -> Result<Vec<Rat>, MilnorError> {
        let k = match p.homogeneous_degree() {
            Ok(None) => 0,
            Ok(Some(k)) => k,
            Err(_) => return Err(MilnorError::MixedInput),
        };
        let data = self.degree_data(k)?;
        let mut v = vec![Rat::zero(); data.monos.len()];
        for (e, c) in p.terms() {
            let idx = data.index[e];
            v[idx] += c;
        }
        let reduced = data.reduce(v);
        Ok(data.basis_cols.iter().map(|&c| reduced[c].clone()).collect())
    }

    /// The class of `p` as a polynomial supported on basis monomials.
    pub fn normal_form_poly(&self, p: &Poly<Rat>) -> Result<Poly<Rat>, MilnorError> {
        let k = match p.homogeneous_degree() {
            Ok(None) => 0,
            Ok(Some(k)) => k,
            Err(_) => return Err(MilnorError::MixedInput),
        };
        let coeffs = self.normal_form(p)?;
        let basis = self.basis(k)?;
        let mut out = Poly::zero(self.nvars);
        for (mono, c) in basis.into_iter().zip(coeffs) {
            out = out.add(&Poly::monomial(self.nvars, mono, c));
        }
        Ok(out)
    }

    /// The socle monomial: the unique top-degree basis monomial of an
    /// isolated potential.
    pub fn socle_monomial(&self) -> Option<Vec<u32>> {
        if !self.isolated {
            return None;
        }
        let basis = self.basis(self.top_degree()).ok()?;
        if basis.len() == 1 {
            Some(basis[0].clone())
        } else {
            None
        }
    }

    /// Determinant of the Hessian matrix of the potential.
    pub fn hessian_det(&self) -> Poly<Rat> {
        let n = self.nvars;
        let mut h = PolyMatrix::zero(n, n, n);
        for i in 0..n {
            let di = self.w.partial_derivative(i).unwrap();
            for j in 0..n {
                h.set(i, j, di.partial_derivative(j).unwrap());
            }
        }
        h.det()
    }
}

fn echelonize_degree(
    nvars: usize,
    k: usize,
    w_degree: usize,
    partials: &[Poly<Rat>],
) -> DegreeData {
    let monos = monomials_of_degree(nvars, k);
    let index: HashMap<Vec<u32>, usize> = monos
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    let mut data = DegreeData {
        monos,
        index,
        pivot_rows: HashMap::new(),
        basis_cols: Vec::new(),
    };
    if k + 1 >= w_degree {
        let shift = k + 1 - w_degree; // degree of the multiplier monomials
        let mut rows: Vec<SparseRow> = Vec::new();
        for m in monomials_of_degree(nvars, shift) {
            for dp in partials {
                if dp.is_zero() {
                    continue;
                }
                let mut row: SparseRow = dp
                    .terms()
                    .map(|(e, c)| {
                        let prod: Vec<u32> = e.iter().zip(&m).map(|(a, b)| a + b).collect();
                        (data.index[&prod], c.clone())
                    })
                    .collect();
                row.sort_by_key(|(i, _)| *i);
                rows.push(row);
            }
        }
        rows.sort_by_key(|r| r.len());
        for row in rows {
            insert_row(&mut data.pivot_rows, row);
        }
    }
    for c in 0..data.monos.len() {
        if !data.pivot_rows.contains_key(&c) {
            data.basis_cols.push(c);
        }
    }
    data
}

/// Reduce `row` against the current pivots and register it as a new pivot
/// if nonzero. Rows keep support sorted by column.
fn insert_row(pivot_rows: &mut HashMap<usize, SparseRow>, mut row: SparseRow) {
    loop {
        row.retain(|(_, c)| !c.is_zero());
        let Some(&(lead, _)) = row.first() else {
            return;
        };
        match pivot_rows.get(&lead) {
            None => {
                let lead_coeff = row[0].1.clone();
                for (_, c) in row.iter_mut() {
                    *c /= &lead_coeff;
                }
                pivot_rows.insert(lead, row);
                return;
            }
            Some(pivot) => {
                let f = row[0].1.clone();
                row = sparse_axpy(&row, pivot, &f);
            }
        }
    }
}

/// `row - f * pivot`, sparse, support sorted.
fn sparse_axpy(row: &SparseRow, pivot: &SparseRow, f: &Rat) -> SparseRow {
    let mut out = SparseRow::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        if j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0) {
            out.push(row[i].clone());
            i += 1;
        } else if i == row.len() || pivot[j].0 < row[i].0 {
            out.push((pivot[j].0, -(f * &pivot[j].1)));
            j += 1;
        } else {
            let c = &row[i].1 - f * &pivot[j].1;
            if !c.is_zero() {
                out.push((row[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat_frac, rat_int};
    use crate::poly::{fermat, fermat_plane_cubic};

    #[test]
    fn fermat_plane_curve_dimensions() {
        // x^3 + y^3: dims (1, 2, 1), total 4 = (d-1)^n
        let m = MilnorData::new(&fermat(2, 3)).unwrap();
        assert_eq!(m.dims(), &[1, 2, 1, 0]);
        assert!(m.is_isolated());
        assert_eq!(m.milnor_number(), 4);
    }

    #[test]
    fn fermat_cubic_sixfold_dimensions() {
        let m = MilnorData::new(&fermat(6, 3)).unwrap();
        assert!(m.is_isolated());
        assert_eq!(m.milnor_number(), 64);
        assert_eq!(m.top_degree(), 6);
        assert_eq!(m.dims()[6], 1);
        assert_eq!(m.dims()[7], 0);
    }

    #[test]
    fn non_isolated_potential_detected() {
        // x^2 y: the Jacobian ideal (2xy, x^2) misses every power of y.
        let w = Poly::monomial(2, vec![2, 1], rat_int(1));
        let m = MilnorData::new(&w).unwrap();
        assert!(!m.is_isolated());
        assert!(m.dims()[3] > 0);
    }

    #[test]
    fn normal_form_of_ideal_generators_vanishes() {
        let w = fermat_plane_cubic();
        let m = MilnorData::new(&w).unwrap();
        assert!(m.is_isolated());
        for i in 0..6 {
            let dw = w.partial_derivative(i).unwrap();
            let nf = m.normal_form(&dw).unwrap();
            assert!(nf.iter().all(|c| c.is_zero()));
        }
        let one = Poly::one(6);
        assert_eq!(m.normal_form(&one).unwrap(), vec![rat_int(1)]);
    }

    #[test]
    fn hessian_reduces_to_socle_multiple() {
        // det Hess(x^3 + y^3) = 36xy; the socle monomial is xy.
        let m = MilnorData::new(&fermat(2, 3)).unwrap();
        let hess = m.hessian_det();
        assert_eq!(hess, Poly::monomial(2, vec![1, 1], rat_int(36)));
        assert_eq!(m.socle_monomial().unwrap(), vec![1, 1]);
        let nf = m.normal_form(&hess).unwrap();
        assert_eq!(nf, vec![rat_int(36)]);
        // direct division oracle: reducing by (3x^2, 3y^2) cannot touch xy
        let direct = m.normal_form_poly(&hess).unwrap();
        assert_eq!(direct, Poly::monomial(2, vec![1, 1], rat_int(36)));
    }

    #[test]
    fn normal_form_idempotent_and_linear() {
        let m = MilnorData::new(&fermat(3, 3)).unwrap();
        let p = Poly::monomial(3, vec![2, 1, 0], rat_int(5))
            .add(&Poly::monomial(3, vec![1, 1, 1], rat_frac(1, 2)))
            .add(&Poly::monomial(3, vec![0, 0, 3], rat_int(-2)));
        let nf1 = m.normal_form_poly(&p).unwrap();
        let nf2 = m.normal_form_poly(&nf1).unwrap();
        assert_eq!(nf1, nf2);
        let q = Poly::monomial(3, vec![3, 0, 0], rat_int(1));
        let sum_nf = m.normal_form_poly(&p.add(&q)).unwrap();
        assert_eq!(sum_nf, nf1.add(&m.normal_form_poly(&q).unwrap()));
    }

    #[test]
    fn palindromic_dimensions_for_isolated() {
        for w in [fermat(2, 3), fermat(3, 3), fermat(2, 5), fermat_plane_cubic()] {
            let m = MilnorData::new(&w).unwrap();
            assert!(m.is_isolated());
            let top = m.top_degree();
            for k in 0..=top {
                assert_eq!(m.dims()[k], m.dims()[top - k], "degree {}", k);
            }
        }
    }

    #[test]
    fn degree_bounds_enforced() {
        let m = MilnorData::new(&fermat(2, 3)).unwrap();
        let p = Poly::monomial(2, vec![4, 0], rat_int(1));
        assert!(matches!(
            m.normal_form(&p),
            Err(MilnorError::DegreeOutOfRange { .. })
        ));
        let mixed = Poly::monomial(2, vec![1, 0], rat_int(1))
            .add(&Poly::monomial(2, vec![1, 1], rat_int(1)));
        assert_eq!(m.normal_form(&mixed), Err(MilnorError::MixedInput));
    }
}
