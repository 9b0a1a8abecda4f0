//! Graded matrix factorizations at object level: construction and
//! verification, the grade shift `tau`, the shift functor `[1]`, sums and
//! cones, and Koszul-type factorizations (including stabilized point
//! objects).
//!
//! Conventions, pinned by testable identities:
//! - `P = (P0 -> P1 -> P0(d))` with `p1 p0 = W id` and `p0 p1 = W id`;
//!   entry `(i,j)` of `p0` is homogeneous of degree
//!   `grades1[i] - grades0[j]`, entry `(i,j)` of `p1` of degree
//!   `grades0[i] + d - grades1[j]`.
//! - `tau` adds 1 to every grade and fixes the matrices.
//! - `[1]` sends `P` to `(P1, P0(d), -p1, -p0)`, so that `tau^d = [2]`
//!   holds on the nose.
//! - cones are lower triangular with the shifted source in the first
//!   block.
//! - object equality is representation equality after sorting each grade
//!   vector descending (stable) and permuting matrix entries accordingly.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::Rat;
use crate::poly::{Poly, PolyError, PolyMatrix, PolyRepr};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MfError {
    #[error("potential is not homogeneous: {0}")]
    BadPotential(String),
    #[error("arity mismatch: factorization in {0} variables, potential in {1}")]
    ArityMismatch(usize, usize),
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error(
        "{matrix}[{row}][{col}] should be homogeneous of degree {expected}, found {found}"
    )]
    Homogeneity {
        matrix: &'static str,
        row: usize,
        col: usize,
        expected: i64,
        found: String,
    },
    #[error("{product}[{row}][{col}] has residual {residual} (expected W*id)")]
    ProductResidual {
        product: &'static str,
        row: usize,
        col: usize,
        residual: String,
    },
    #[error("koszul pair {index}: deg a + deg b = {found}, expected {expected}")]
    KoszulDegree {
        index: usize,
        found: String,
        expected: usize,
    },
    #[error("koszul pairs do not factor the potential; residual sum(a_i b_i) - W = {0}")]
    KoszulResidual(String),
    #[error("morphism does not strictly commute: {0}")]
    MorphismCommutation(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A graded matrix factorization of a degree-`d` potential in `nvars`
/// variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMF {
    pub d: u32,
    pub nvars: usize,
    pub grades0: Vec<i64>,
    pub grades1: Vec<i64>,
    pub p0: PolyMatrix<Rat>,
    pub p1: PolyMatrix<Rat>,
}

impl GradedMF {
    pub fn new(
        d: u32,
        nvars: usize,
        grades0: Vec<i64>,
        grades1: Vec<i64>,
        p0: PolyMatrix<Rat>,
        p1: PolyMatrix<Rat>,
    ) -> Result<Self, MfError> {
        if p0.rows() != grades1.len() || p0.cols() != grades0.len() {
            return Err(MfError::Shape(format!(
                "p0 is {}x{}, expected {}x{}",
                p0.rows(),
                p0.cols(),
                grades1.len(),
                grades0.len()
            )));
        }
        if p1.rows() != grades0.len() || p1.cols() != grades1.len() {
            return Err(MfError::Shape(format!(
                "p1 is {}x{}, expected {}x{}",
                p1.rows(),
                p1.cols(),
                grades0.len(),
                grades1.len()
            )));
        }
        Ok(GradedMF {
            d,
            nvars,
            grades0,
            grades1,
            p0,
            p1,
        })
    }

    pub fn rank(&self) -> usize {
        self.grades0.len()
    }

    /// Check both product identities and all homogeneity constraints
    /// entry-wise against the potential.
    pub fn verify(&self, w: &Poly<Rat>) -> Result<(), MfError> {
        let wd = w
            .homogeneous_degree()
            .map_err(|e| MfError::BadPotential(e.to_string()))?
            .unwrap_or(0);
        if wd != self.d as usize {
            return Err(MfError::BadPotential(format!(
                "degree {} potential against degree-{} factorization",
                wd, self.d
            )));
        }
        if w.nvars() != self.nvars {
            return Err(MfError::ArityMismatch(self.nvars, w.nvars()));
        }
        // homogeneity of p0 and p1
        for i in 0..self.p0.rows() {
            for j in 0..self.p0.cols() {
                let entry = self.p0.get(i, j);
                let expected = self.grades1[i] - self.grades0[j];
                if !entry.is_zero() && !is_homog_of(entry, expected) {
                    return Err(MfError::Homogeneity {
                        matrix: "p0",
                        row: i,
                        col: j,
                        expected,
                        found: degree_string(entry),
                    });
                }
            }
        }
        for i in 0..self.p1.rows() {
            for j in 0..self.p1.cols() {
                let entry = self.p1.get(i, j);
                let expected = self.grades0[i] + i64::from(self.d) - self.grades1[j];
                if !entry.is_zero() && !is_homog_of(entry, expected) {
                    return Err(MfError::Homogeneity {
                        matrix: "p1",
                        row: i,
                        col: j,
                        expected,
                        found: degree_string(entry),
                    });
                }
            }
        }
        // product identities
        check_product("p1*p0", &self.p1.mul(&self.p0), w)?;
        check_product("p0*p1", &self.p0.mul(&self.p1), w)?;
        Ok(())
    }

    /// Grade shift `tau^k`: all grades incremented by `k`, matrices
    /// unchanged.
    pub fn tau(&self, k: i64) -> Self {
        let mut out = self.clone();
        for g in out.grades0.iter_mut().chain(out.grades1.iter_mut()) {
            *g += k;
        }
        out
    }

    /// The shift functor `[1]`: `(P1, P0(d), -p1, -p0)`.
    pub fn shift(&self) -> Self {
        GradedMF {
            d: self.d,
            nvars: self.nvars,
            grades0: self.grades1.clone(),
            grades1: self.grades0.iter().map(|g| g + i64::from(self.d)).collect(),
            p0: self.p1.neg(),
            p1: self.p0.neg(),
        }
    }

    pub fn shift_by(&self, n: u32) -> Self {
        let mut out = self.clone();
        for _ in 0..n {
            out = out.shift();
        }
        out
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        assert_eq!(self.d, other.d);
        assert_eq!(self.nvars, other.nvars);
        let z01 = PolyMatrix::zero(self.p0.rows(), other.p0.cols(), self.nvars);
        let z10 = PolyMatrix::zero(other.p0.rows(), self.p0.cols(), self.nvars);
        let p0 = PolyMatrix::block2(&self.p0, &z01, &z10, &other.p0);
        let z01 = PolyMatrix::zero(self.p1.rows(), other.p1.cols(), self.nvars);
        let z10 = PolyMatrix::zero(other.p1.rows(), self.p1.cols(), self.nvars);
        let p1 = PolyMatrix::block2(&self.p1, &z01, &z10, &other.p1);
        GradedMF {
            d: self.d,
            nvars: self.nvars,
            grades0: [self.grades0.clone(), other.grades0.clone()].concat(),
            grades1: [self.grades1.clone(), other.grades1.clone()].concat(),
            p0,
            p1,
        }
    }

    /// Canonical form for object comparison: each grade vector sorted
    /// descending (stable) with the induced permutation applied to the
    /// matrices.
    pub fn normalize(&self) -> Self {
        let perm0 = sort_perm(&self.grades0);
        let perm1 = sort_perm(&self.grades1);
        let mut out = self.clone();
        out.grades0 = perm0.iter().map(|&i| self.grades0[i]).collect();
        out.grades1 = perm1.iter().map(|&i| self.grades1[i]).collect();
        let mut p0 = PolyMatrix::zero(self.p0.rows(), self.p0.cols(), self.nvars);
        for (i, &oi) in perm1.iter().enumerate() {
            for (j, &oj) in perm0.iter().enumerate() {
                p0.set(i, j, self.p0.get(oi, oj).clone());
            }
        }
        let mut p1 = PolyMatrix::zero(self.p1.rows(), self.p1.cols(), self.nvars);
        for (i, &oi) in perm0.iter().enumerate() {
            for (j, &oj) in perm1.iter().enumerate() {
                p1.set(i, j, self.p1.get(oi, oj).clone());
            }
        }
        out.p0 = p0;
        out.p1 = p1;
        out
    }

    pub fn equals_normalized(&self, other: &Self) -> bool {
        self.normalize() == other.normalize()
    }
}

fn is_homog_of(p: &Poly<Rat>, expected: i64) -> bool {
    if expected < 0 {
        return p.is_zero();
    }
    p.is_homogeneous_of_degree(expected as usize)
}

fn degree_string(p: &Poly<Rat>) -> String {
    match p.homogeneous_degree() {
        Ok(None) => "zero".into(),
        Ok(Some(k)) => format!("degree {}", k),
        Err(_) => "mixed degrees".into(),
    }
}

fn check_product(name: &'static str, prod: &PolyMatrix<Rat>, w: &Poly<Rat>) -> Result<(), MfError> {
    for i in 0..prod.rows() {
        for j in 0..prod.cols() {
            let expected = if i == j { w.clone() } else { Poly::zero(w.nvars()) };
            let residual = prod.get(i, j).sub(&expected);
            if !residual.is_zero() {
                return Err(MfError::ProductResidual {
                    product: name,
                    row: i,
                    col: j,
                    residual: residual.to_string(),
                });
            }
        }
    }
    Ok(())
}

fn sort_perm(grades: &[i64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..grades.len()).collect();
    idx.sort_by(|&a, &b| grades[b].cmp(&grades[a]).then(a.cmp(&b)));
    idx
}

/// A strict morphism of graded matrix factorizations (grade-zero
/// homogeneous blocks commuting with the differentials on the nose).
#[derive(Clone, Debug)]
pub struct MfMorphism {
    pub source: GradedMF,
    pub target: GradedMF,
    pub f0: PolyMatrix<Rat>,
    pub f1: PolyMatrix<Rat>,
}

impl MfMorphism {
    pub fn new(
        source: GradedMF,
        target: GradedMF,
        f0: PolyMatrix<Rat>,
        f1: PolyMatrix<Rat>,
    ) -> Result<Self, MfError> {
        if f0.rows() != target.grades0.len() || f0.cols() != source.grades0.len() {
            return Err(MfError::Shape("f0 shape".into()));
        }
        if f1.rows() != target.grades1.len() || f1.cols() != source.grades1.len() {
            return Err(MfError::Shape("f1 shape".into()));
        }
        let lhs = f1.mul(&source.p0);
        let rhs = target.p0.mul(&f0);
        if lhs != rhs {
            return Err(MfError::MorphismCommutation(
                "f1 p0_src != p0_tgt f0".into(),
            ));
        }
        let lhs = f0.mul(&source.p1);
        let rhs = target.p1.mul(&f1);
        if lhs != rhs {
            return Err(MfError::MorphismCommutation(
                "f0(d) p1_src != p1_tgt f1".into(),
            ));
        }
        Ok(MfMorphism { source, target, f0, f1 })
    }

    pub fn identity(p: &GradedMF) -> Self {
        let one = Poly::one(p.nvars);
        let f0 = PolyMatrix::identity_times(p.grades0.len(), p.nvars, &one);
        let f1 = PolyMatrix::identity_times(p.grades1.len(), p.nvars, &one);
        MfMorphism {
            source: p.clone(),
            target: p.clone(),
            f0,
            f1,
        }
    }

    pub fn zero(source: &GradedMF, target: &GradedMF) -> Self {
        MfMorphism {
            source: source.clone(),
            target: target.clone(),
            f0: PolyMatrix::zero(target.grades0.len(), source.grades0.len(), source.nvars),
            f1: PolyMatrix::zero(target.grades1.len(), source.grades1.len(), source.nvars),
        }
    }
}

/// Cone of a strict morphism, `source[1] (+) target` with the connecting
/// blocks in the lower-left.
pub fn cone(f: &MfMorphism) -> GradedMF {
    let p = &f.source;
    let q = &f.target;
    let d = p.d;
    let nvars = p.nvars;
    let grades0 = [p.grades1.clone(), q.grades0.clone()].concat();
    let grades1 = [
        p.grades0.iter().map(|g| g + i64::from(d)).collect::<Vec<_>>(),
        q.grades1.clone(),
    ]
    .concat();
    let z = PolyMatrix::zero(p.p1.rows(), q.p0.cols(), nvars);
    let c0 = PolyMatrix::block2(&p.p1.neg(), &z, &f.f1, &q.p0);
    let z = PolyMatrix::zero(p.p0.rows(), q.p1.cols(), nvars);
    let c1 = PolyMatrix::block2(&p.p0.neg(), &z, &f.f0, &q.p1);
    GradedMF {
        d,
        nvars,
        grades0,
        grades1,
        p0: c0,
        p1: c1,
    }
}

/// Koszul-type factorization attached to pairs `(a_i, b_i)` with
/// `sum a_i b_i = W`. The underlying module is the exterior algebra on
/// one generator per pair (subsets enumerated in binary order, filtered
/// by parity, even subsets in `P0`); the generator attached to subset `S`
/// carries grade `offset + sum_{i in S} deg a_i`, and the differential is
/// the sum of right wedge by `sum a_i e_i` and right contraction by
/// `sum b_i e_i*`.
pub fn koszul_mf(
    pairs: &[(Poly<Rat>, Poly<Rat>)],
    offset: i64,
    w: &Poly<Rat>,
) -> Result<GradedMF, MfError> {
    let d = w
        .homogeneous_degree()
        .map_err(|e| MfError::BadPotential(e.to_string()))?
        .unwrap_or(0);
    let nvars = w.nvars();
    let mut sum = Poly::zero(nvars);
    let mut a_deg = Vec::with_capacity(pairs.len());
    for (idx, (a, b)) in pairs.iter().enumerate() {
        let da = a
            .homogeneous_degree()
            .map_err(|e| MfError::BadPotential(e.to_string()))?;
        let db = b
            .homogeneous_degree()
            .map_err(|e| MfError::BadPotential(e.to_string()))?;
        match (da, db) {
            (Some(da), Some(db)) if da + db == d => a_deg.push(da as i64),
            _ => {
                return Err(MfError::KoszulDegree {
                    index: idx,
                    found: format!("{:?}+{:?}", da, db),
                    expected: d,
                })
            }
        }
        sum = sum.add(&a.mul(b));
    }
    let residual = sum.sub(w);
    if !residual.is_zero() {
        return Err(MfError::KoszulResidual(residual.to_string()));
    }

    let m = pairs.len();
    let even: Vec<u32> = (0..(1u32 << m)).filter(|s| s.count_ones() % 2 == 0).collect();
    let odd: Vec<u32> = (0..(1u32 << m)).filter(|s| s.count_ones() % 2 == 1).collect();
    // Wedging raises the grade by deg a_i and contracting by deg b_i, so a
    // twist by (d) accumulates every two exterior degrees.
    let grade = |s: u32| -> i64 {
        offset
            + (0..m)
                .filter(|i| s >> i & 1 == 1)
                .map(|i| a_deg[i])
                .sum::<i64>()
            - (d as i64) * i64::from(s.count_ones() / 2)
    };
    let grades0: Vec<i64> = even.iter().map(|&s| grade(s)).collect();
    let grades1: Vec<i64> = odd.iter().map(|&s| grade(s)).collect();
    let pos = |list: &[u32], s: u32| list.iter().position(|&t| t == s).unwrap();

    let build = |from: &[u32], to: &[u32]| -> PolyMatrix<Rat> {
        let mut mat = PolyMatrix::zero(to.len(), from.len(), nvars);
        for (col, &s) in from.iter().enumerate() {
            for i in 0..m {
                let above = (s >> (i + 1)).count_ones();
                let sign = if above % 2 == 0 { 1i64 } else { -1i64 };
                let (t, coeff) = if s >> i & 1 == 0 {
                    (s | 1 << i, &pairs[i].0)
                } else {
                    (s & !(1 << i), &pairs[i].1)
                };
                let row = pos(to, t);
                let signed = if sign == 1 { coeff.clone() } else { coeff.neg() };
                let cur = mat.get(row, col).add(&signed);
                mat.set(row, col, cur);
            }
        }
        mat
    };

    let p0 = build(&even, &odd);
    let p1 = build(&odd, &even);
    GradedMF::new(d as u32, nvars, grades0, grades1, p0, p1)
}

/// Stabilized point object: the Koszul factorization on the pairs
/// `(x_i, dW/dx_i / d)` with parity and offset pinned so that its higher
/// Chern characters take the closed form
/// `ch_j = -zeta^{kj} (1 - zeta^{-j})^n` exactly.
pub fn point_object(k: i64, w: &Poly<Rat>) -> Result<GradedMF, MfError> {
    let d = w
        .homogeneous_degree()
        .map_err(|e| MfError::BadPotential(e.to_string()))?
        .unwrap_or(0);
    if d < 2 {
        return Err(MfError::BadPotential(format!("degree {} potential", d)));
    }
    let n = w.nvars();
    let scale = Rat::new(1.into(), (d as i64).into());
    let pairs: Vec<(Poly<Rat>, Poly<Rat>)> = (0..n)
        .map(|i| {
            let a = Poly::var(n, i).unwrap();
            let b = w.partial_derivative(i).unwrap().scale(&scale);
            (a, b)
        })
        .collect();
    let base = koszul_mf(&pairs, k - n as i64, w)?;
    Ok(if n % 2 == 0 { base.shift() } else { base })
}

// ---------------------------------------------------------------------
// JSON representation.

#[derive(Serialize, Deserialize)]
pub struct MfRepr {
    pub d: u32,
    pub nvars: usize,
    pub grades0: Vec<i64>,
    pub grades1: Vec<i64>,
    pub p0: Vec<Vec<PolyRepr>>,
    pub p1: Vec<Vec<PolyRepr>>,
}

impl GradedMF {
    pub fn to_repr(&self) -> MfRepr {
        let dump = |m: &PolyMatrix<Rat>| -> Vec<Vec<PolyRepr>> {
            (0..m.rows())
                .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_repr()).collect())
                .collect()
        };
        MfRepr {
            d: self.d,
            nvars: self.nvars,
            grades0: self.grades0.clone(),
            grades1: self.grades1.clone(),
            p0: dump(&self.p0),
            p1: dump(&self.p1),
        }
    }

    pub fn from_repr(repr: &MfRepr) -> Result<Self, MfError> {
        let load = |rows: &Vec<Vec<PolyRepr>>| -> Result<PolyMatrix<Rat>, MfError> {
            let mut out = Vec::with_capacity(rows.len());
            for row in rows {
                let mut r = Vec::with_capacity(row.len());
                for p in row {
                    r.push(Poly::from_repr(p)?);
                }
                out.push(r);
            }
            if out.is_empty() {
                return Err(MfError::Shape("empty matrix".into()));
            }
            Ok(PolyMatrix::from_rows(out))
        };
        GradedMF::new(
            repr.d,
            repr.nvars,
            repr.grades0.clone(),
            repr.grades1.clone(),
            load(&repr.p0)?,
            load(&repr.p1)?,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;
    use crate::poly::{fermat, fermat_plane_cubic};

    fn x(n: usize, i: usize) -> Poly<Rat> {
        Poly::var(n, i).unwrap()
    }

    pub(crate) fn rank_one_xy() -> (GradedMF, Poly<Rat>) {
        let w = x(2, 0).mul(&x(2, 1));
        let p0 = PolyMatrix::from_rows(vec![vec![x(2, 0)]]);
        let p1 = PolyMatrix::from_rows(vec![vec![x(2, 1)]]);
        let mf = GradedMF::new(2, 2, vec![0], vec![1], p0, p1).unwrap();
        (mf, w)
    }

    #[test]
    fn rank_one_verifies() {
        let (mf, w) = rank_one_xy();
        mf.verify(&w).unwrap();
        // wrong second map: residual reported
        let bad = GradedMF::new(
            2,
            2,
            vec![0],
            vec![1],
            PolyMatrix::from_rows(vec![vec![x(2, 0)]]),
            PolyMatrix::from_rows(vec![vec![x(2, 0)]]),
        )
        .unwrap();
        match bad.verify(&w) {
            Err(MfError::Homogeneity { .. }) | Err(MfError::ProductResidual { .. }) => {}
            other => panic!("expected failure, got {:?}", other),
        }
    }

    #[test]
    fn koszul_fermat_sixfold() {
        let w = fermat(6, 3);
        let p = point_object(0, &w).unwrap();
        assert_eq!(p.rank(), 32);
        p.verify(&w).unwrap();
    }

    #[test]
    fn koszul_residual_reported() {
        let w = x(2, 0).mul(&x(2, 1));
        let pairs = vec![(x(2, 0), x(2, 0))];
        match koszul_mf(&pairs, 0, &w) {
            Err(MfError::KoszulResidual(_)) => {}
            other => panic!("expected residual error, got {:?}", other),
        }
    }

    #[test]
    fn tau_and_shift_conventions() {
        let (mf, w) = rank_one_xy();
        assert!(mf.tau(0).equals_normalized(&mf));
        assert_eq!(mf.tau(1).grades0, vec![1]);
        mf.tau(5).verify(&w).unwrap();
        let s = mf.shift();
        s.verify(&w).unwrap();
        assert_eq!(s.grades0, vec![1]);
        assert_eq!(s.grades1, vec![2]);
        assert_eq!(s.p0.get(0, 0), &x(2, 1).neg());
        assert_eq!(s.p1.get(0, 0), &x(2, 0).neg());
        // tau^d = [2] exactly
        let tau_d = mf.tau(2);
        let two_shift = mf.shift().shift();
        assert!(tau_d.equals_normalized(&two_shift));
    }

    #[test]
    fn tau_d_equals_double_shift_on_koszul() {
        let w = fermat(3, 3);
        let p = point_object(1, &w).unwrap();
        assert!(p.tau(3).equals_normalized(&p.shift().shift()));
    }

    #[test]
    fn sums_and_cones() {
        let (mf, w) = rank_one_xy();
        let q = mf.tau(1);
        let sum = mf.direct_sum(&q);
        sum.verify(&w).unwrap();
        assert_eq!(sum.grades0, vec![0, 1]);
        let id_cone = cone(&MfMorphism::identity(&mf));
        id_cone.verify(&w).unwrap();
        let zero_cone = cone(&MfMorphism::zero(&mf, &q));
        zero_cone.verify(&w).unwrap();
        assert_eq!(zero_cone.grades0, vec![1, 1]);
    }

    #[test]
    fn contractible_factorization() {
        let w = fermat(2, 2);
        let p0 = PolyMatrix::from_rows(vec![vec![Poly::one(2)]]);
        let p1 = PolyMatrix::from_rows(vec![vec![w.clone()]]);
        let c = GradedMF::new(2, 2, vec![0], vec![0], p0, p1).unwrap();
        c.verify(&w).unwrap();
    }

    #[test]
    fn point_object_low_degree() {
        // d=2, n=1, W = x^2
        let w = fermat(1, 2);
        let p = point_object(0, &w).unwrap();
        p.verify(&w).unwrap();
        assert_eq!(p.rank(), 1);
    }

    #[test]
    fn plane_cubic_point_objects_verify() {
        let w = fermat_plane_cubic();
        for k in 0..3 {
            point_object(k, &w).unwrap().verify(&w).unwrap();
        }
    }

    #[test]
    fn json_roundtrip() {
        let (mf, _) = rank_one_xy();
        let repr = mf.to_repr();
        let json = serde_json::to_string(&repr).unwrap();
        let back: MfRepr = serde_json::from_str(&json).unwrap();
        assert_eq!(GradedMF::from_repr(&back).unwrap(), mf);
    }

    #[test]
    fn normalization_sorts_grades() {
        let (mf, w) = rank_one_xy();
        let sum = mf.direct_sum(&mf.tau(3));
        let sum_rev = mf.tau(3).direct_sum(&mf);
        assert!(sum.equals_normalized(&sum_rev));
        assert_eq!(sum.normalize().grades0, vec![3, 0]);
        sum.normalize().verify(&w).unwrap();
        let _ = rat_int(0);
    }
}
