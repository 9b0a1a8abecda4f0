//! Central charges and Chern characters of graded matrix factorizations,
//! the residue-pairing Riemann-Roch formula for Euler characteristics,
//! and recovery of higher Chern characters from point-object pairings.
//!
//! For a factorization with grade vectors `n^0, n^1` the higher
//! characters are supertraces of the grading root of unity,
//! `ch_j = sum zeta^{j n^0} - sum zeta^{j n^1}`, and `ch_1` is the Gepner
//! central charge. The degree-zero character is the supertrace of the
//! entry-wise derivative product of the twisted differential, reduced in
//! the Milnor ring.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{Cyclotomic, ExactError, Rat};
use crate::linalg;
use crate::mf::GradedMF;
use crate::milnor::{MilnorData, MilnorError};
use crate::poly::{Poly, PolyMatrix};

#[derive(Debug, Error)]
pub enum ChargeError {
    #[error("character index {j} out of range 1..={max}")]
    IndexOutOfRange { j: i64, max: u32 },
    #[error("degree-zero character is not homogeneous of degree {expected}: got {found} (convention bug)")]
    ConventionBug { expected: String, found: String },
    #[error("residue pairing normalization is unset")]
    UnsetNormalization,
    #[error("residue pairing requires an isolated potential with one-dimensional socle")]
    NoSocle,
    #[error("Euler characteristic did not descend to a rational: {0}")]
    NonRational(String),
    #[error("Euler characteristic is not an integer: {0} (normalization inconsistency)")]
    NonInteger(Rat),
    #[error("pairing residues must be distinct mod d; need {need}, got {got} distinct")]
    RepeatedResidues { need: usize, got: usize },
    #[error("singular recovery system")]
    SingularSystem,
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Milnor(#[from] MilnorError),
    #[error(transparent)]
    Poly(#[from] crate::poly::PolyError),
}

/// `ch_j` for `1 <= j <= d-1`: the supertrace of `zeta^j` acting through
/// the grading.
pub fn ch_higher(p: &GradedMF, j: i64) -> Result<Cyclotomic, ChargeError> {
    let d = i64::from(p.d);
    if j < 1 || j >= d {
        return Err(ChargeError::IndexOutOfRange { j, max: p.d - 1 });
    }
    let mut z = Cyclotomic::zero(p.d);
    for &g in &p.grades0 {
        z = z.add(&Cyclotomic::root(d, j * g)?);
    }
    for &g in &p.grades1 {
        z = z.sub(&Cyclotomic::root(d, j * g)?);
    }
    Ok(z)
}

/// The Gepner central charge `Z_G = ch_1`.
pub fn z_gepner(p: &GradedMF) -> Cyclotomic {
    if p.d == 1 {
        return Cyclotomic::zero(1);
    }
    ch_higher(p, 1).expect("j = 1 is always in range for d >= 2")
}

/// All higher characters `ch_1 .. ch_{d-1}`.
pub fn ch_vector(p: &GradedMF) -> Vec<Cyclotomic> {
    (1..i64::from(p.d))
        .map(|j| ch_higher(p, j).unwrap())
        .collect()
}

/// The degree-zero Chern character: supertrace of
/// `d_{x_n} delta ... d_{x_1} delta` reduced in the Milnor ring. Always
/// the zero class for an odd number of variables.
pub fn ch_zero(p: &GradedMF, m: &MilnorData) -> Result<Poly<Rat>, ChargeError> {
    let n = p.nvars;
    let r0 = p.grades0.len();
    let zero_00 = PolyMatrix::zero(r0, r0, n);
    let zero_11 = PolyMatrix::zero(p.grades1.len(), p.grades1.len(), n);
    let delta = PolyMatrix::block2(&zero_00, &p.p0, &p.p1, &zero_11);
    let mut product: Option<PolyMatrix<Rat>> = None;
    for i in 0..n {
        let di = delta.entrywise_derivative(i)?;
        product = Some(match product {
            None => di,
            Some(acc) => di.mul(&acc),
        });
    }
    let product = product.expect("at least one variable");
    let mut str_poly = Poly::zero(n);
    for i in 0..r0 {
        str_poly = str_poly.add(product.get(i, i));
    }
    for i in r0..r0 + p.grades1.len() {
        str_poly = str_poly.sub(product.get(i, i));
    }
    if str_poly.is_zero() {
        return Ok(Poly::zero(n));
    }
    let expected = n * (p.d as usize - 2) / 2;
    match str_poly.homogeneous_degree() {
        Ok(Some(k)) if k == expected && n % 2 == 0 => {}
        other => {
            return Err(ChargeError::ConventionBug {
                expected: format!("{} (n even)", expected),
                found: format!("{:?}", other),
            })
        }
    }
    Ok(m.normal_form_poly(&str_poly)?)
}

/// The Grothendieck-factor `c_gamma = (1 - lambda^j)^{-n}` with
/// `lambda = zeta_d^{-1}`.
pub fn c_gamma(d: u32, j: i64, n: usize) -> Result<Cyclotomic, ChargeError> {
    if j < 1 || j >= i64::from(d) {
        return Err(ChargeError::IndexOutOfRange { j, max: d - 1 });
    }
    let lambda_j = Cyclotomic::root(i64::from(d), -j)?;
    let base = Cyclotomic::one(d).sub(&lambda_j);
    Ok(base.pow(-(n as i64))?)
}

/// Socle data and normalization scalar for the residue pairing on the
/// Milnor ring of an isolated potential.
#[derive(Clone, Debug)]
pub struct ResiduePairingData {
    socle: Vec<u32>,
    normalization: Option<Rat>,
}

impl ResiduePairingData {
    /// Default normalization: `eps * mu / c`, where `mu` is the Milnor
    /// number, `c` is the socle coefficient of the Hessian determinant
    /// (the Hessian has residue `mu`), and `eps = (-1)^{n(n-1)/2}` is the
    /// global sign calibrated so that Euler characteristics of the test
    /// corpus come out integral.
    pub fn new(m: &MilnorData) -> Result<Self, ChargeError> {
        let socle = m.socle_monomial().ok_or(ChargeError::NoSocle)?;
        let hess = m.hessian_det();
        let nf = m.normal_form_poly(&hess)?;
        let c = nf.coeff(&socle);
        if c.is_zero() {
            return Err(ChargeError::NoSocle);
        }
        let n = m.nvars();
        let eps = if (n * (n - 1) / 2) % 2 == 0 {
            Rat::one()
        } else {
            -Rat::one()
        };
        let mu = Rat::from_integer((m.milnor_number() as i64).into());
        Ok(ResiduePairingData {
            socle,
            normalization: Some(eps * mu / c),
        })
    }

    /// Pairing data with the normalization left unset; any use of the
    /// residue term will error until `set_normalization` is called.
    pub fn unnormalized(m: &MilnorData) -> Result<Self, ChargeError> {
        let socle = m.socle_monomial().ok_or(ChargeError::NoSocle)?;
        Ok(ResiduePairingData {
            socle,
            normalization: None,
        })
    }

    pub fn set_normalization(&mut self, c: Rat) {
        self.normalization = Some(c);
    }

    pub fn normalization(&self) -> Option<&Rat> {
        self.normalization.as_ref()
    }

    pub fn socle(&self) -> &[u32] {
        &self.socle
    }
}

/// Residue pairing of two Milnor classes: the socle coefficient of the
/// reduced product times the normalization scalar. Zero on
/// non-complementary degrees.
pub fn residue_pairing(
    f: &Poly<Rat>,
    g: &Poly<Rat>,
    m: &MilnorData,
    res: &ResiduePairingData,
) -> Result<Rat, ChargeError> {
    if f.is_zero() || g.is_zero() {
        return Ok(Rat::zero());
    }
    let top = m.top_degree();
    let df = f.homogeneous_degree().map_err(MilnorError::from)?.unwrap_or(0);
    let dg = g.homogeneous_degree().map_err(MilnorError::from)?.unwrap_or(0);
    if df + dg != top {
        return Ok(Rat::zero());
    }
    let norm = res
        .normalization
        .as_ref()
        .ok_or(ChargeError::UnsetNormalization)?;
    let nf = m.normal_form_poly(&f.mul(g))?;
    Ok(nf.coeff(&res.socle) * norm)
}

/// Euler pairing of two factorizations of the same potential via the
/// residue-pairing Riemann-Roch formula:
/// `chi = (1/d) ( <ch_0 P, ch_0 Q> + sum_j c_{lambda^j} ch_j(P) ch_{d-j}(Q) )`.
/// The residue term is skipped exactly when either degree-zero character
/// vanishes. The result is checked to descend to a rational integer.
pub fn euler_chi(
    p: &GradedMF,
    q: &GradedMF,
    m: &MilnorData,
    res: &ResiduePairingData,
) -> Result<Rat, ChargeError> {
    let d = p.d;
    let n = m.nvars();
    let ch0p = ch_zero(p, m)?;
    let ch0q = ch_zero(q, m)?;
    let mut total = Cyclotomic::zero(d);
    if !ch0p.is_zero() && !ch0q.is_zero() {
        let pairing = residue_pairing(&ch0p, &ch0q, m, res)?;
        total = total.add(&Cyclotomic::from_rat(pairing));
    }
    for j in 1..i64::from(d) {
        let c = c_gamma(d, j, n)?;
        let chp = ch_higher(p, j)?;
        let chq = ch_higher(q, i64::from(d) - j)?;
        total = total.add(&c.mul(&chp).mul(&chq));
    }
    let total = total.scale(&Rat::new(1.into(), i64::from(d).into()));
    let rational = total
        .descend(1)
        .and_then(|z| z.to_rat())
        .ok_or_else(|| ChargeError::NonRational(total.to_string()))?;
    if !rational.is_integer() {
        return Err(ChargeError::NonInteger(rational));
    }
    Ok(rational)
}

/// Closed form `ch_j(C(k)) = -zeta^{kj} (1 - zeta^{-j})^n` for the
/// stabilized point object; the oracle side of the supertrace identity.
pub fn point_ch_closed_form(d: u32, n: usize, k: i64, j: i64) -> Result<Cyclotomic, ChargeError> {
    let zeta_kj = Cyclotomic::root(i64::from(d), k * j)?;
    let base = Cyclotomic::one(d).sub(&Cyclotomic::root(i64::from(d), -j)?);
    Ok(zeta_kj.mul(&base.pow(n as i64)?).neg())
}

/// Coefficient of `ch_j(P)` in `chi(P, C(k))`, with the point-object
/// characters in closed form.
fn pairing_coefficient(d: u32, n: usize, k: i64, j: i64) -> Result<Cyclotomic, ChargeError> {
    let c = c_gamma(d, j, n)?;
    let chq = point_ch_closed_form(d, n, k, i64::from(d) - j)?;
    Ok(c.mul(&chq).scale(&Rat::new(1.into(), i64::from(d).into())))
}

/// Recover `ch_1 .. ch_{d-1}` of a factorization from the Euler pairings
/// `chi(P, C(k))` at `d-1` distinct residues `k` (point objects carry no
/// degree-zero character, so the residue term is absent).
pub fn recover_ch(
    pairings: &[(i64, Rat)],
    d: u32,
    n: usize,
) -> Result<Vec<Cyclotomic>, ChargeError> {
    let need = (d - 1) as usize;
    let mut seen: Vec<i64> = pairings.iter().map(|(k, _)| k.rem_euclid(i64::from(d))).collect();
    seen.sort_unstable();
    seen.dedup();
    if pairings.len() != need || seen.len() != need {
        return Err(ChargeError::RepeatedResidues {
            need,
            got: seen.len(),
        });
    }
    if need == 0 {
        return Ok(Vec::new());
    }
    let mut mat = Vec::with_capacity(need);
    let mut rhs = Vec::with_capacity(need);
    for (k, chi) in pairings {
        let mut row = Vec::with_capacity(need);
        for j in 1..=need as i64 {
            row.push(pairing_coefficient(d, n, *k, j)?);
        }
        mat.push(row);
        rhs.push(Cyclotomic::from_rat(chi.clone()));
    }
    linalg::solve(&mat, &rhs).ok_or(ChargeError::SingularSystem)
}

/// Determinant of the `(d-1) x (d-1)` matrix `[lambda^{kj}]` with
/// `lambda = zeta_d^{-1}`, `k = 0..d-2`, `j = 1..d-1`; nonzero exactly
/// because the residues are distinct.
pub fn vandermonde_det(d: u32) -> Result<Cyclotomic, ChargeError> {
    let need = (d - 1) as usize;
    let mut mat = Vec::with_capacity(need);
    for k in 0..need as i64 {
        let mut row = Vec::with_capacity(need);
        for j in 1..=need as i64 {
            row.push(Cyclotomic::root(i64::from(d), -k * j)?);
        }
        mat.push(row);
    }
    Ok(linalg::det(&mat))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat_int, rat_frac};
    use crate::mf::{cone, koszul_mf, point_object, GradedMF, MfMorphism};
    use crate::poly::{fermat, Poly, PolyMatrix};

    fn x(n: usize, i: usize) -> Poly<Rat> {
        Poly::var(n, i).unwrap()
    }

    fn rank_one_xy() -> (GradedMF, Poly<Rat>) {
        let w = x(2, 0).mul(&x(2, 1));
        let p0 = PolyMatrix::from_rows(vec![vec![x(2, 0)]]);
        let p1 = PolyMatrix::from_rows(vec![vec![x(2, 1)]]);
        (GradedMF::new(2, 2, vec![0], vec![1], p0, p1).unwrap(), w)
    }

    #[test]
    fn contractible_charge_vanishes() {
        let w = fermat(2, 2);
        let p0 = PolyMatrix::from_rows(vec![vec![Poly::one(2)]]);
        let p1 = PolyMatrix::from_rows(vec![vec![w.clone()]]);
        let c = GradedMF::new(2, 2, vec![0], vec![0], p0, p1).unwrap();
        assert!(z_gepner(&c).is_zero());
    }

    #[test]
    fn charge_covariance() {
        let w = fermat(3, 3);
        let p = point_object(1, &w).unwrap();
        let zeta = Cyclotomic::root(3, 1).unwrap();
        assert_eq!(z_gepner(&p.tau(1)), zeta.mul(&z_gepner(&p)));
        assert_eq!(z_gepner(&p.shift()), z_gepner(&p).neg());
        for j in 1..3 {
            let zj = Cyclotomic::root(3, j * 2).unwrap();
            assert_eq!(
                ch_higher(&p.tau(2), j).unwrap(),
                zj.mul(&ch_higher(&p, j).unwrap())
            );
            assert_eq!(
                ch_higher(&p.shift(), j).unwrap(),
                ch_higher(&p, j).unwrap().neg()
            );
        }
        assert!(ch_higher(&p, 0).is_err());
        assert!(ch_higher(&p, 3).is_err());
    }

    #[test]
    fn charge_additive_on_sums_and_cones() {
        let (p, w) = rank_one_xy();
        let q = p.tau(1);
        let sum = p.direct_sum(&q);
        assert_eq!(z_gepner(&sum), z_gepner(&p).add(&z_gepner(&q)));
        let c = cone(&MfMorphism::zero(&p, &q));
        assert_eq!(z_gepner(&c), z_gepner(&q).sub(&z_gepner(&p)));
        let idc = cone(&MfMorphism::identity(&p));
        assert!(z_gepner(&idc).is_zero());
        idc.verify(&w).unwrap();
    }

    #[test]
    fn point_object_closed_form_small_grid() {
        for (d, n) in [(2u32, 1usize), (2, 2), (3, 2), (3, 3), (5, 2)] {
            let w = fermat(n, d);
            for k in 0..i64::from(d) {
                let p = point_object(k, &w).unwrap();
                for j in 1..i64::from(d) {
                    assert_eq!(
                        ch_higher(&p, j).unwrap(),
                        point_ch_closed_form(d, n, k, j).unwrap(),
                        "d={} n={} k={} j={}",
                        d,
                        n,
                        k,
                        j
                    );
                }
            }
        }
    }

    #[test]
    fn point_charge_values() {
        // ch_1 = 27 at (d,n,k,j) = (3,6,0,1): oracle -(1 - zeta^{-1})^6
        // expanded exactly.
        let w = fermat(6, 3);
        let p = point_object(0, &w).unwrap();
        let oracle = Cyclotomic::one(3)
            .sub(&Cyclotomic::root(3, -1).unwrap())
            .pow(6)
            .unwrap()
            .neg();
        assert_eq!(oracle, Cyclotomic::from_int(27));
        assert_eq!(z_gepner(&p), Cyclotomic::from_int(27));
        assert_eq!(ch_higher(&p, 2).unwrap(), Cyclotomic::from_int(27));
        // (d,n) = (2,1): ch_1 = -2
        let w = fermat(1, 2);
        let p = point_object(0, &w).unwrap();
        assert_eq!(z_gepner(&p), Cyclotomic::from_int(-2));
    }

    #[test]
    fn c_gamma_values() {
        assert_eq!(
            c_gamma(3, 1, 6).unwrap(),
            Cyclotomic::from_rat(rat_frac(-1, 27))
        );
        assert_eq!(
            c_gamma(2, 1, 1).unwrap(),
            Cyclotomic::from_rat(rat_frac(1, 2))
        );
        for d in [3u32, 5, 12] {
            for j in 1..i64::from(d) {
                for n in [1usize, 4] {
                    assert_eq!(
                        c_gamma(d, j, n).unwrap(),
                        c_gamma(d, i64::from(d) - j, n).unwrap().conj()
                    );
                }
            }
        }
    }

    #[test]
    fn ch_zero_rank_one() {
        // Hand oracle: delta = [[0,x],[y,0]];
        // (d/dy delta)(d/dx delta) = [[0,0],[0,1]], supertrace -1.
        let (p, w) = rank_one_xy();
        let m = MilnorData::new(&w).unwrap();
        let c = ch_zero(&p, &m).unwrap();
        assert_eq!(c, Poly::constant(2, rat_int(-1)));
    }

    #[test]
    fn ch_zero_vanishes_on_points_and_odd_arity() {
        // odd number of variables
        let w = fermat(3, 3);
        let m = MilnorData::new(&w).unwrap();
        let p = point_object(0, &w).unwrap();
        assert!(ch_zero(&p, &m).unwrap().is_zero());
        // even number of variables, point object
        let w = fermat(2, 3);
        let m = MilnorData::new(&w).unwrap();
        let p = point_object(1, &w).unwrap();
        assert!(ch_zero(&p, &m).unwrap().is_zero());
    }

    #[test]
    fn residue_pairing_on_plane_fermat() {
        let w = fermat(2, 3);
        let m = MilnorData::new(&w).unwrap();
        let res = ResiduePairingData::new(&m).unwrap();
        // complementary-degree duality: the 2x2 pairing matrix in degree 1
        // is nondegenerate.
        let basis = m.basis(1).unwrap();
        assert_eq!(basis.len(), 2);
        let polys: Vec<Poly<Rat>> = basis
            .iter()
            .map(|e| Poly::monomial(2, e.clone(), rat_int(1)))
            .collect();
        let mat: Vec<Vec<Rat>> = polys
            .iter()
            .map(|f| {
                polys
                    .iter()
                    .map(|g| residue_pairing(f, g, &m, &res).unwrap())
                    .collect()
            })
            .collect();
        assert!(!linalg::det(&mat).is_zero());
        // degree mismatch pairs to zero
        let one = Poly::one(2);
        assert_eq!(residue_pairing(&one, &one, &m, &res).unwrap(), rat_int(0));
        // <1, socle> = normalization
        let socle = Poly::monomial(2, res.socle().to_vec(), rat_int(1));
        assert_eq!(
            residue_pairing(&one, &socle, &m, &res).unwrap(),
            res.normalization().unwrap().clone()
        );
        // unset normalization errors
        let raw = ResiduePairingData::unnormalized(&m).unwrap();
        assert!(matches!(
            residue_pairing(&socle, &one, &m, &raw),
            Err(ChargeError::UnsetNormalization)
        ));
    }

    #[test]
    fn euler_chi_rank_one_self_pairing() {
        // chi(P,P) = 1 for the rank-1 xy factorization; pins the residue
        // normalization sign at n = 2.
        let (p, w) = rank_one_xy();
        let m = MilnorData::new(&w).unwrap();
        let res = ResiduePairingData::new(&m).unwrap();
        assert_eq!(euler_chi(&p, &p, &m, &res).unwrap(), rat_int(1));
        // shift sign: chi(P,Q) - chi(P,Q[1]) = 2 chi(P,Q)
        let chi_pq = euler_chi(&p, &p.tau(1), &m, &res).unwrap();
        let chi_pq1 = euler_chi(&p, &p.tau(1).shift(), &m, &res).unwrap();
        assert_eq!(&chi_pq - &chi_pq1, rat_int(2) * &chi_pq);
        // tau invariance
        assert_eq!(
            euler_chi(&p.tau(1), &p.tau(2), &m, &res).unwrap(),
            euler_chi(&p, &p.tau(1), &m, &res).unwrap()
        );
    }

    #[test]
    fn euler_chi_with_nonzero_ch0() {
        // Koszul factorization from the linear times quadric splitting of
        // x^3 + y^3; its ch_0 is 3(x - y), and chi(P,P) must be integral.
        let w = fermat(2, 3);
        let m = MilnorData::new(&w).unwrap();
        let res = ResiduePairingData::new(&m).unwrap();
        let a = x(2, 0).add(&x(2, 1));
        let b = x(2, 0)
            .mul(&x(2, 0))
            .sub(&x(2, 0).mul(&x(2, 1)))
            .add(&x(2, 1).mul(&x(2, 1)));
        let p = koszul_mf(&[(a, b)], 0, &w).unwrap();
        p.verify(&w).unwrap();
        let c0 = ch_zero(&p, &m).unwrap();
        let expected = x(2, 0).sub(&x(2, 1)).scale(&rat_int(3));
        assert_eq!(c0, expected);
        assert_eq!(euler_chi(&p, &p, &m, &res).unwrap(), rat_int(1));
        // against point objects only the j >= 1 terms contribute
        let q = point_object(0, &w).unwrap();
        let chi = euler_chi(&p, &q, &m, &res).unwrap();
        assert!(chi.is_integer());
    }

    #[test]
    fn point_self_pairing_fermat_curve() {
        // Independent oracle: chi(C(0), C(0)) at (d,n) = (3,2) by direct
        // cyclotomic evaluation of the j-sum.
        let w = fermat(2, 3);
        let m = MilnorData::new(&w).unwrap();
        let res = ResiduePairingData::new(&m).unwrap();
        let p = point_object(0, &w).unwrap();
        let mut oracle = Cyclotomic::zero(3);
        for j in 1..3 {
            let term = c_gamma(3, j, 2)
                .unwrap()
                .mul(&point_ch_closed_form(3, 2, 0, j).unwrap())
                .mul(&point_ch_closed_form(3, 2, 0, 3 - j).unwrap());
            oracle = oracle.add(&term);
        }
        let oracle = oracle.scale(&rat_frac(1, 3)).descend(1).unwrap().to_rat().unwrap();
        assert_eq!(oracle, rat_int(1));
        assert_eq!(euler_chi(&p, &p, &m, &res).unwrap(), oracle);
    }

    #[test]
    fn recover_round_trip() {
        let w = fermat(2, 3);
        let m = MilnorData::new(&w).unwrap();
        let res = ResiduePairingData::new(&m).unwrap();
        // a non-point object: sum of twisted points plus a Koszul piece
        let p = point_object(0, &w)
            .unwrap()
            .direct_sum(&point_object(1, &w).unwrap().tau(1))
            .direct_sum(&point_object(2, &w).unwrap().shift());
        let pairings: Vec<(i64, Rat)> = (0..2)
            .map(|k| {
                let q = point_object(k, &w).unwrap();
                (k, euler_chi(&p, &q, &m, &res).unwrap())
            })
            .collect();
        let recovered = recover_ch(&pairings, 3, 2).unwrap();
        for j in 1..3usize {
            assert_eq!(recovered[j - 1], ch_higher(&p, j as i64).unwrap());
        }
        // all-zero pairings give the zero character vector
        let zeros = vec![(0, rat_int(0)), (1, rat_int(0))];
        for c in recover_ch(&zeros, 3, 2).unwrap() {
            assert!(c.is_zero());
        }
        // repeated residues rejected
        let repeated = vec![(0, rat_int(0)), (3, rat_int(0))];
        assert!(matches!(
            recover_ch(&repeated, 3, 2),
            Err(ChargeError::RepeatedResidues { .. })
        ));
    }

    #[test]
    fn recover_d2() {
        let (p, w) = rank_one_xy();
        let m = MilnorData::new(&w).unwrap();
        let res = ResiduePairingData::new(&m).unwrap();
        let q = point_object(0, &w).unwrap();
        let chi = euler_chi(&p, &q, &m, &res).unwrap();
        let recovered = recover_ch(&[(0, chi)], 2, 2).unwrap();
        assert_eq!(recovered[0], z_gepner(&p));
    }

    #[test]
    fn vandermonde_nonzero_small() {
        for d in 2..=6u32 {
            assert!(!vandermonde_det(d).unwrap().is_zero(), "d = {}", d);
        }
    }
}
