//! Explicit Clifford-module matrices for a cubic containing a plane: the
//! plane-adapted decomposition of the cubic, the Hessian matrix of the
//! associated quadratic form, the wedge-plus-contraction differential on
//! the exterior algebra of four generators, and the four polynomial
//! matrix identity groups tying them together.
//!
//! Variables are fixed as `x1..x6` with the plane `x1 = x2 = x3 = 0`.
//! The exterior basis order matches the displayed pushforward columns:
//! odd part `e1, e2, e3, f, e123, e12f, e23f, e31f`; even part
//! `1, e12, e23, e31, e1f, e2f, e3f, e123f`. The primed derivative
//! convention is `d_i' = d_i / 2`, carried exactly.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exact::{rat_frac, rat_int, Rat};
use crate::mf::GradedMF;
use crate::poly::{Poly, PolyMatrix};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CliffordError {
    #[error("potential must be a homogeneous cubic in six variables, got {0}")]
    NotACubic(String),
    #[error("plane not contained: monomial {0} uses only the last three variables")]
    PlaneNotContained(String),
    #[error("identity {name} fails; residual {residual}")]
    IdentityFailed { name: &'static str, residual: String },
}

/// A cubic in six variables written against the plane `x1 = x2 = x3 = 0`:
/// a cubic in the first three variables, a symmetric matrix of linear
/// forms, and three quadratic forms in the last three variables.
#[derive(Clone, Debug)]
pub struct CubicPlaneForm {
    w: Poly<Rat>,
    w_prime: Poly<Rat>,
    w_ij: Vec<Vec<Poly<Rat>>>,
    w_i: Vec<Poly<Rat>>,
}

fn split_degrees(e: &[u32]) -> (u32, u32) {
    let dp: u32 = e[..3].iter().sum();
    let dq: u32 = e[3..].iter().sum();
    (dp, dq)
}

/// Decompose a homogeneous cubic containing the plane.
pub fn decompose(w: &Poly<Rat>) -> Result<CubicPlaneForm, CliffordError> {
    if w.nvars() != 6 || !w.is_homogeneous_of_degree(3) || w.is_zero() {
        return Err(CliffordError::NotACubic(w.to_string()));
    }
    let mut w_prime = Poly::zero(6);
    let mut w_ij = vec![vec![Poly::zero(6); 3]; 3];
    let mut w_i = vec![Poly::zero(6); 3];
    for (e, c) in w.terms() {
        let (dp, dq) = split_degrees(e);
        match (dp, dq) {
            (3, 0) => {
                w_prime = w_prime.add(&Poly::monomial(6, e.clone(), c.clone()));
            }
            (2, 1) => {
                // split x_i x_j * (linear form), off-diagonal halved
                let mut linear = e.clone();
                let mut ij = Vec::new();
                for (i, exp) in e[..3].iter().enumerate() {
                    for _ in 0..*exp {
                        ij.push(i);
                    }
                    linear[i] = 0;
                }
                let (i, j) = (ij[0], ij[1]);
                if i == j {
                    w_ij[i][i] = w_ij[i][i].add(&Poly::monomial(6, linear, c.clone()));
                } else {
                    let half = Poly::monomial(6, linear, c * &rat_frac(1, 2));
                    w_ij[i][j] = w_ij[i][j].add(&half);
                    w_ij[j][i] = w_ij[j][i].add(&half);
                }
            }
            (1, 2) => {
                let mut quad = e.clone();
                let i = e[..3].iter().position(|&x| x > 0).unwrap();
                quad[i] = 0;
                w_i[i] = w_i[i].add(&Poly::monomial(6, quad, c.clone()));
            }
            (0, 3) => {
                let mono = Poly::monomial(6, e.clone(), c.clone());
                return Err(CliffordError::PlaneNotContained(mono.to_string()));
            }
            _ => unreachable!("cubic degrees split as 3+0, 2+1, 1+2 or 0+3"),
        }
    }
    Ok(CubicPlaneForm {
        w: w.clone(),
        w_prime,
        w_ij,
        w_i,
    })
}

impl CubicPlaneForm {
    pub fn potential(&self) -> &Poly<Rat> {
        &self.w
    }

    pub fn w_prime(&self) -> &Poly<Rat> {
        &self.w_prime
    }

    pub fn w_ij(&self) -> &[Vec<Poly<Rat>>] {
        &self.w_ij
    }

    pub fn w_i(&self) -> &[Poly<Rat>] {
        &self.w_i
    }

    /// Reassemble the cubic from the decomposition.
    pub fn reconstruct(&self) -> Poly<Rat> {
        let mut out = self.w_prime.clone();
        for i in 0..3 {
            let xi = Poly::var(6, i).unwrap();
            for j in 0..3 {
                let xj = Poly::var(6, j).unwrap();
                out = out.add(&xi.mul(&xj).mul(&self.w_ij[i][j]));
            }
            out = out.add(&xi.mul(&self.w_i[i]));
        }
        out
    }

    /// `W'' = W' + (1/2) sum_ij x_i x_j W_ij`.
    pub fn w_doubleprime(&self) -> Poly<Rat> {
        let mut out = self.w_prime.clone();
        let half = rat_frac(1, 2);
        for i in 0..3 {
            let xi = Poly::var(6, i).unwrap();
            for j in 0..3 {
                let xj = Poly::var(6, j).unwrap();
                out = out.add(&xi.mul(&xj).mul(&self.w_ij[i][j]).scale(&half));
            }
        }
        out
    }

    /// Primed derivative `d_k' W = (dW/dx_k)/2` (zero-based variable
    /// index, so `k` in 3..=5 for the last three variables).
    pub fn dprime(&self, var: usize) -> Poly<Rat> {
        self.w
            .partial_derivative(var)
            .unwrap()
            .scale(&rat_frac(1, 2))
    }

    /// The identity `W'' + x4 d4'W + x5 d5'W + x6 d6'W = W`, exactly.
    pub fn euler_plane_identity(&self) -> bool {
        let mut lhs = self.w_doubleprime();
        for k in 3..6 {
            let xk = Poly::var(6, k).unwrap();
            lhs = lhs.add(&xk.mul(&self.dprime(k)));
        }
        lhs == self.w
    }
}

/// Half the Hessian in `x4, x5, x6, x7` of the blow-up potential
/// `Wtilde = W'(y) x7^2 + sum y_i y_j x7 W_ij + sum y_i W_i`, a symmetric
/// 4x4 matrix of forms in `y1, y2, y3` (the variables of the returned
/// matrix are `y1, y2, y3, x4, x5, x6, x7`).
pub fn hessian_s(form: &CubicPlaneForm) -> PolyMatrix<Rat> {
    let subs: Vec<Poly<Rat>> = (0..6).map(|i| Poly::var(7, i).unwrap()).collect();
    let to7 = |p: &Poly<Rat>| p.substitute(&subs).unwrap();
    let x7 = Poly::var(7, 6).unwrap();
    let mut wt = to7(&form.w_prime).mul(&x7).mul(&x7);
    for i in 0..3 {
        let yi = Poly::var(7, i).unwrap();
        for j in 0..3 {
            let yj = Poly::var(7, j).unwrap();
            wt = wt.add(&yi.mul(&yj).mul(&x7).mul(&to7(&form.w_ij[i][j])));
        }
        wt = wt.add(&yi.mul(&to7(&form.w_i[i])));
    }
    let half = rat_frac(1, 2);
    let mut s = PolyMatrix::zero(4, 4, 7);
    for a in 0..4 {
        for b in 0..4 {
            let entry = wt
                .partial_derivative(3 + a)
                .unwrap()
                .partial_derivative(3 + b)
                .unwrap()
                .scale(&half);
            s.set(a, b, entry);
        }
    }
    s
}

// Exterior basis tables in the displayed column order; generators are
// 0..3 = (e1, e2, e3, f).
const ODD_BASIS: [&[usize]; 8] = [
    &[0],
    &[1],
    &[2],
    &[3],
    &[0, 1, 2],
    &[0, 1, 3],
    &[1, 2, 3],
    &[2, 0, 3],
];
const EVEN_BASIS: [&[usize]; 8] = [
    &[],
    &[0, 1],
    &[1, 2],
    &[2, 0],
    &[0, 3],
    &[1, 3],
    &[2, 3],
    &[0, 1, 2, 3],
];

/// Grades of the two columns of the pushforward display (odd side, then
/// even side).
pub const ODD_GRADES: [i64; 8] = [-2, -2, -2, -3, -3, -4, -4, -4];
pub const EVEN_GRADES: [i64; 8] = [0, -1, -1, -1, -2, -2, -2, -3];

/// Sign of the permutation carrying `from` to `to` (both orderings of
/// the same set), or None when the underlying sets differ.
fn perm_sign(from: &[usize], to: &[usize]) -> Option<i64> {
    if from.len() != to.len() {
        return None;
    }
    let mut perm = Vec::with_capacity(from.len());
    for x in from {
        perm.push(to.iter().position(|y| y == x)?);
    }
    let mut sign = 1i64;
    let mut seen = vec![false; perm.len()];
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    Some(sign)
}

fn locate(basis: &[&[usize]], tuple: &[usize]) -> Option<(usize, i64)> {
    for (idx, rep) in basis.iter().enumerate() {
        if let Some(sign) = perm_sign(tuple, rep) {
            return Some((idx, sign));
        }
    }
    None
}

/// Apply the differential (right wedge by `sum a_k e_k` plus right
/// contraction by `sum b_k e_k*`) to one basis tuple.
fn apply_delta(
    tuple: &[usize],
    to: &[&[usize]],
    wedge: &[Poly<Rat>; 4],
    contract: &[Poly<Rat>; 4],
) -> Vec<(usize, Poly<Rat>)> {
    let mut out = Vec::new();
    for k in 0..4 {
        if let Some(pos) = tuple.iter().position(|&g| g == k) {
            // right contraction: move k to the last slot, then remove
            let after = tuple.len() - 1 - pos;
            let sign = if after % 2 == 0 { 1 } else { -1 };
            let mut rest: Vec<usize> = tuple.to_vec();
            rest.remove(pos);
            let (idx, perm) = locate(to, &rest).expect("contraction target in basis");
            out.push((idx, contract[k].scale(&rat_int(sign * perm))));
        } else {
            // right wedge: append at the right end
            let mut ext: Vec<usize> = tuple.to_vec();
            ext.push(k);
            let (idx, perm) = locate(to, &ext).expect("wedge target in basis");
            out.push((idx, wedge[k].scale(&rat_int(perm))));
        }
    }
    out
}

/// The two parity blocks of the wedge-plus-contraction differential:
/// `(odd -> even, even -> odd)`, both 8x8 over `x1..x6`. Composing in
/// either order gives `W id` by the plane Euler identity.
pub fn wedge_contract_delta(form: &CubicPlaneForm) -> (PolyMatrix<Rat>, PolyMatrix<Rat>) {
    let wedge = [
        Poly::var(6, 3).unwrap(),
        Poly::var(6, 4).unwrap(),
        Poly::var(6, 5).unwrap(),
        Poly::one(6),
    ];
    let contract = [
        form.dprime(3),
        form.dprime(4),
        form.dprime(5),
        form.w_doubleprime(),
    ];
    let mut odd_to_even = PolyMatrix::zero(8, 8, 6);
    for (col, tuple) in ODD_BASIS.iter().enumerate() {
        for (row, coeff) in apply_delta(tuple, &EVEN_BASIS, &wedge, &contract) {
            let cur = odd_to_even.get(row, col).add(&coeff);
            odd_to_even.set(row, col, cur);
        }
    }
    let mut even_to_odd = PolyMatrix::zero(8, 8, 6);
    for (col, tuple) in EVEN_BASIS.iter().enumerate() {
        for (row, coeff) in apply_delta(tuple, &ODD_BASIS, &wedge, &contract) {
            let cur = even_to_odd.get(row, col).add(&coeff);
            even_to_odd.set(row, col, cur);
        }
    }
    (odd_to_even, even_to_odd)
}

/// The displayed 8x8 matrix together with the four bordering matrices.
pub struct MnQuad {
    pub m: PolyMatrix<Rat>,
    pub n1: PolyMatrix<Rat>,
    pub n2: PolyMatrix<Rat>,
    pub n3: PolyMatrix<Rat>,
    pub n4: PolyMatrix<Rat>,
}

/// Construct `M` and `N1..N4` literally from their displayed entry
/// patterns (an independent route from `wedge_contract_delta`).
pub fn build_mn(form: &CubicPlaneForm) -> MnQuad {
    let x4 = Poly::var(6, 3).unwrap();
    let x5 = Poly::var(6, 4).unwrap();
    let x6 = Poly::var(6, 5).unwrap();
    let d4 = form.dprime(3);
    let d5 = form.dprime(4);
    let d6 = form.dprime(5);
    let wpp = form.w_doubleprime();
    let one = Poly::one(6);
    let zero = Poly::zero(6);
    let m = PolyMatrix::from_rows(vec![
        vec![
            d4.clone(),
            d5.clone(),
            d6.clone(),
            wpp.clone(),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            x5.clone(),
            x4.neg(),
            zero.clone(),
            zero.clone(),
            d6.clone(),
            wpp.clone(),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            zero.clone(),
            x6.clone(),
            x5.neg(),
            zero.clone(),
            d4.clone(),
            zero.clone(),
            wpp.clone(),
            zero.clone(),
        ],
        vec![
            x6.neg(),
            zero.clone(),
            x4.clone(),
            zero.clone(),
            d5.clone(),
            zero.clone(),
            zero.clone(),
            wpp.clone(),
        ],
        vec![
            one.clone(),
            zero.clone(),
            zero.clone(),
            x4.neg(),
            zero.clone(),
            d5.neg(),
            zero.clone(),
            d6.clone(),
        ],
        vec![
            zero.clone(),
            one.clone(),
            zero.clone(),
            x5.neg(),
            zero.clone(),
            d4.clone(),
            d6.neg(),
            zero.clone(),
        ],
        vec![
            zero.clone(),
            zero.clone(),
            one.clone(),
            x6.neg(),
            zero.clone(),
            zero.clone(),
            d5.clone(),
            d4.neg(),
        ],
        vec![
            zero.clone(),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            one.clone(),
            x6.neg(),
            x4.neg(),
            x5.neg(),
        ],
    ]);
    let n1 = PolyMatrix::from_rows(vec![
        vec![
            zero.clone(),
            one.clone(),
            zero.clone(),
            zero.clone(),
            x5.neg(),
            x4.clone(),
            zero.clone(),
            d6.neg(),
        ],
        vec![
            zero.clone(),
            zero.clone(),
            one.clone(),
            zero.clone(),
            zero.clone(),
            x6.neg(),
            x5.clone(),
            d4.neg(),
        ],
        vec![
            zero.clone(),
            zero.clone(),
            zero.clone(),
            one.clone(),
            x6.clone(),
            zero.clone(),
            x4.neg(),
            d5.neg(),
        ],
    ]);
    let mut n2 = PolyMatrix::zero(3, 8, 6);
    for (row, col) in [(0usize, 5usize), (1, 6), (2, 7)] {
        n2.set(row, col, one.clone());
    }
    let mut n3 = PolyMatrix::zero(8, 1, 6);
    n3.set(0, 0, one.clone());
    let mut n4 = PolyMatrix::zero(8, 1, 6);
    n4.set(0, 0, x4);
    n4.set(1, 0, x5);
    n4.set(2, 0, x6);
    n4.set(3, 0, one);
    MnQuad { m, n1, n2, n3, n4 }
}

fn residual_string(m: &PolyMatrix<Rat>) -> String {
    let mut parts = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m.get(i, j).is_zero() {
                parts.push(format!("[{}][{}] = {}", i, j, m.get(i, j)));
                if parts.len() >= 4 {
                    parts.push("...".into());
                    return parts.join(", ");
                }
            }
        }
    }
    parts.join(", ")
}

fn check_identity(
    name: &'static str,
    lhs: &PolyMatrix<Rat>,
    rhs: &PolyMatrix<Rat>,
) -> Result<(), CliffordError> {
    let residual = lhs.sub(rhs);
    if residual.is_zero() {
        Ok(())
    } else {
        Err(CliffordError::IdentityFailed {
            name,
            residual: residual_string(&residual),
        })
    }
}

/// Verify the four identity groups for an explicitly supplied quadruple.
pub fn check_mn_matrices(form: &CubicPlaneForm, q: &MnQuad) -> Result<(), CliffordError> {
    let w = &form.w;
    check_identity("N1 M = W N2", &q.n1.mul(&q.m), &q.n2.scale_poly(w))?;
    check_identity("M N4 = W N3", &q.m.mul(&q.n4), &q.n3.scale_poly(w))?;
    check_identity("N2 N4 = 0", &q.n2.mul(&q.n4), &PolyMatrix::zero(3, 1, 6))?;
    check_identity("N1 N3 = 0", &q.n1.mul(&q.n3), &PolyMatrix::zero(3, 1, 6))?;
    Ok(())
}

/// Build the quadruple and verify all four identity groups exactly.
pub fn check_mn(form: &CubicPlaneForm) -> Result<(), CliffordError> {
    check_mn_matrices(form, &build_mn(form))
}

/// Export the rank-8 graded factorization carried by the differential
/// blocks, with grades read off the displayed pushforward columns.
pub fn export_mf(form: &CubicPlaneForm) -> GradedMF {
    let (odd_to_even, even_to_odd) = wedge_contract_delta(form);
    GradedMF::new(
        3,
        6,
        ODD_GRADES.to_vec(),
        EVEN_GRADES.to_vec(),
        odd_to_even,
        even_to_odd,
    )
    .expect("shapes fixed by the basis tables")
}

/// Seeded pseudorandom cubic containing the plane: a random homogeneous
/// cubic with every monomial supported only on the last three variables
/// removed.
pub fn random_plane_cubic(rng: &mut ChaCha8Rng) -> Poly<Rat> {
    let monos = crate::milnor::monomials_of_degree(6, 3);
    let mut w = Poly::zero(6);
    for e in monos {
        let (dp, _) = split_degrees(&e);
        if dp == 0 {
            continue;
        }
        if rng.gen_range(0..3) == 0 {
            let c = rat_int(rng.gen_range(-3..=3i64));
            w = w.add(&Poly::monomial(6, e, c));
        }
    }
    if w.is_zero() {
        w = crate::poly::fermat_plane_cubic();
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charge::z_gepner;
    use crate::poly::fermat_plane_cubic;
    use rand::SeedableRng;

    #[test]
    fn decompose_fermat_plane() {
        let w = fermat_plane_cubic();
        let f = decompose(&w).unwrap();
        let expected_wp = Poly::monomial(6, vec![3, 0, 0, 0, 0, 0], rat_int(1))
            .add(&Poly::monomial(6, vec![0, 3, 0, 0, 0, 0], rat_int(1)))
            .add(&Poly::monomial(6, vec![0, 0, 3, 0, 0, 0], rat_int(1)));
        assert_eq!(f.w_prime(), &expected_wp);
        for i in 0..3 {
            for j in 0..3 {
                assert!(f.w_ij()[i][j].is_zero());
            }
        }
        assert_eq!(
            f.w_i()[0],
            Poly::monomial(6, vec![0, 0, 0, 2, 0, 0], rat_int(1))
        );
        assert_eq!(f.reconstruct(), w);
        assert_eq!(f.w_doubleprime(), expected_wp);
        assert!(f.euler_plane_identity());
    }

    #[test]
    fn rejects_cubics_missing_the_plane() {
        let w = fermat_plane_cubic().add(&Poly::monomial(6, vec![0, 0, 0, 3, 0, 0], rat_int(1)));
        assert!(matches!(
            decompose(&w),
            Err(CliffordError::PlaneNotContained(_))
        ));
        assert!(decompose(&Poly::zero(6)).is_err());
    }

    #[test]
    fn roundtrip_and_euler_identity_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..10 {
            let w = random_plane_cubic(&mut rng);
            let f = decompose(&w).unwrap();
            assert_eq!(f.reconstruct(), w);
            assert!(f.euler_plane_identity());
        }
    }

    #[test]
    fn hessian_structure() {
        let w = fermat_plane_cubic();
        let f = decompose(&w).unwrap();
        let s = hessian_s(&f);
        // diagonal starts y1, y2, y3; bottom-right entry is W'(y)
        for i in 0..3 {
            assert_eq!(s.get(i, i), &Poly::var(7, i).unwrap());
        }
        let wp_y = Poly::monomial(7, vec![3, 0, 0, 0, 0, 0, 0], rat_int(1))
            .add(&Poly::monomial(7, vec![0, 3, 0, 0, 0, 0, 0], rat_int(1)))
            .add(&Poly::monomial(7, vec![0, 0, 3, 0, 0, 0, 0], rat_int(1)));
        assert_eq!(s.get(3, 3), &wp_y);
        // symmetry and sextic determinant, also on random forms
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let w = random_plane_cubic(&mut rng);
            let f = decompose(&w).unwrap();
            let s = hessian_s(&f);
            for a in 0..4 {
                for b in 0..4 {
                    assert_eq!(s.get(a, b), s.get(b, a));
                }
            }
            let det = s.det();
            if !det.is_zero() {
                assert_eq!(det.homogeneous_degree().unwrap(), Some(6));
            }
        }
    }

    #[test]
    fn clifford_relation() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..5 {
            let w = random_plane_cubic(&mut rng);
            let f = decompose(&w).unwrap();
            let (oe, eo) = wedge_contract_delta(&f);
            let w_id = PolyMatrix::identity_times(8, 6, &w);
            assert_eq!(eo.mul(&oe), w_id);
            assert_eq!(oe.mul(&eo), w_id);
        }
    }

    #[test]
    fn displayed_matrix_matches_wedge_contraction() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..5 {
            let w = random_plane_cubic(&mut rng);
            let f = decompose(&w).unwrap();
            let (odd_to_even, _) = wedge_contract_delta(&f);
            let q = build_mn(&f);
            assert_eq!(odd_to_even, q.m);
        }
    }

    #[test]
    fn identity_groups() {
        let w = fermat_plane_cubic();
        let f = decompose(&w).unwrap();
        check_mn(&f).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        for _ in 0..5 {
            let w = random_plane_cubic(&mut rng);
            let f = decompose(&w).unwrap();
            check_mn(&f).unwrap();
        }
    }

    #[test]
    fn perturbed_matrix_reports_residual() {
        let w = fermat_plane_cubic();
        let f = decompose(&w).unwrap();
        let mut q = build_mn(&f);
        let bump = Poly::var(6, 3).unwrap();
        let bumped = q.m.get(1, 0).add(&bump);
        q.m.set(1, 0, bumped);
        match check_mn_matrices(&f, &q) {
            Err(CliffordError::IdentityFailed { name, residual }) => {
                assert_eq!(name, "N1 M = W N2");
                assert!(!residual.is_empty());
            }
            other => panic!("expected identity failure, got {:?}", other),
        }
    }

    #[test]
    fn exported_factorization_verifies() {
        let w = fermat_plane_cubic();
        let f = decompose(&w).unwrap();
        let mf = export_mf(&f);
        mf.verify(&w).unwrap();
        // permutation symmetry sanity: cycling (x1,x2,x3) together with
        // (x4,x5,x6) preserves the exported charge
        let subs: Vec<Poly<Rat>> = [1usize, 2, 0, 4, 5, 3]
            .iter()
            .map(|&i| Poly::var(6, i).unwrap())
            .collect();
        let w_perm = w.substitute(&subs).unwrap();
        let f_perm = decompose(&w_perm).unwrap();
        let mf_perm = export_mf(&f_perm);
        mf_perm.verify(&w_perm).unwrap();
        assert_eq!(z_gepner(&mf), z_gepner(&mf_perm));
    }
}
