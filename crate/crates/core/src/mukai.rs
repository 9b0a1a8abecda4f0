//! Twisted Mukai-vector arithmetic over a Neron-Severi lattice model of
//! the double-cover K3 surface: B-field exponentials, the two coordinate
//! frames, the closed-form central charge, slopes, the integrality
//! lemmas, and the spherical-class exclusion search.
//!
//! Square roots of -3 live in the 12th cyclotomic field
//! (`i = z^3`, `sqrt(3) = z + z^{-1}`, `omega = z^4`), one exact
//! representation for every scalar that appears. The rational B-field
//! itself is never represented; only the half-integral class `beta` and
//! the derived frame shift `-3h/4 - beta/2` enter any computation. The
//! polarization `h` is always the first basis vector, with `h.h = 2`.

use num_bigint::BigInt;
use thiserror::Error;

use crate::exact::{rat_frac, rat_int, Cyclotomic, Rat};
use crate::linalg::{self, ExactField};
use crate::poly::{Poly, PolyMatrix};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MukaiError {
    #[error("invalid gram matrix: {0}")]
    InvalidGram(String),
    #[error("gram signature is not (1, rank-1): {0}")]
    BadSignature(String),
    #[error("vector frame mismatch: expected {expected:?}, got {got:?}")]
    FrameMismatch { expected: Frame, got: Frame },
    #[error("coordinate length {0} does not match lattice rank {1}")]
    RankMismatch(usize, usize),
    #[error("beta must satisfy 2 beta integral; offending coordinate {0}")]
    BetaNotHalfIntegral(Rat),
    #[error("rank {0} is odd; the twisted model forces even rank (a rank-one subsheaf would trivialize the Brauer class)")]
    OddRank(i64),
    #[error("the orthogonal complement of h is not negative definite (invalid K3 model)")]
    IndefiniteComplement,
}

/// Coordinate frame of a Mukai vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Frame {
    /// components of the integral twisted character
    B,
    /// components after the algebraic frame shift `-3h/4 - beta/2`
    Frak,
    /// untwisted components (plain Chern data)
    Untwisted,
}

/// An integral Neron-Severi model: symmetric gram matrix with the
/// polarization as first basis vector of square two.
#[derive(Clone, Debug)]
pub struct NSLattice {
    gram: Vec<Vec<i64>>,
}

impl NSLattice {
    pub fn new(gram: Vec<Vec<i64>>) -> Result<Self, MukaiError> {
        let rho = gram.len();
        if rho == 0 || gram.iter().any(|r| r.len() != rho) {
            return Err(MukaiError::InvalidGram("gram must be square".into()));
        }
        for i in 0..rho {
            for j in 0..rho {
                if gram[i][j] != gram[j][i] {
                    return Err(MukaiError::InvalidGram("gram not symmetric".into()));
                }
            }
        }
        if gram[0][0] != 2 {
            return Err(MukaiError::InvalidGram(format!(
                "h.h = {}, expected 2",
                gram[0][0]
            )));
        }
        let ns = NSLattice { gram };
        if ns.rank() <= 4 {
            ns.check_signature()?;
        }
        Ok(ns)
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// Signature test via sign changes of the characteristic polynomial
    /// (exact for symmetric matrices: all roots are real, so the sign
    /// variation count equals the number of positive eigenvalues).
    fn check_signature(&self) -> Result<(), MukaiError> {
        let rho = self.rank();
        let mut m = PolyMatrix::zero(rho, rho, 1);
        for i in 0..rho {
            for j in 0..rho {
                let mut p = Poly::constant(1, rat_int(-self.gram[i][j]));
                if i == j {
                    p = p.add(&Poly::monomial(1, vec![1], Rat::one()));
                }
                m.set(i, j, p);
            }
        }
        let cp = m.det();
        let coeffs: Vec<Rat> = (0..=rho).map(|k| cp.coeff(&[k as u32])).collect();
        if coeffs[0] == rat_int(0) {
            return Err(MukaiError::BadSignature("degenerate gram".into()));
        }
        let variations = |v: &[Rat]| -> usize {
            let signs: Vec<i8> = v
                .iter()
                .filter(|c| **c != rat_int(0))
                .map(|c| if c > &rat_int(0) { 1 } else { -1 })
                .collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        let pos = variations(&coeffs);
        let neg_coeffs: Vec<Rat> = coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
            .collect();
        let neg = variations(&neg_coeffs);
        if pos != 1 || neg != rho - 1 {
            return Err(MukaiError::BadSignature(format!(
                "{} positive and {} negative eigenvalues for rank {}",
                pos, neg, rho
            )));
        }
        Ok(())
    }

    fn check_len(&self, x: usize) -> Result<(), MukaiError> {
        if x != self.rank() {
            Err(MukaiError::RankMismatch(x, self.rank()))
        } else {
            Ok(())
        }
    }

    /// Intersection pairing of coordinate vectors over any exact field.
    pub fn inner<K: ExactField>(&self, x: &[K], y: &[K]) -> K {
        let mut out = K::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                let g = K::from_rat(&rat_int(self.gram[i][j]));
                out = out.add(&xi.mul(&g).mul(yj));
            }
        }
        out
    }

    /// Coordinates of the polarization.
    pub fn h_vec<K: ExactField>(&self) -> Vec<K> {
        let mut v = vec![K::zero(); self.rank()];
        v[0] = K::one();
        v
    }
}

/// A half-integral class `beta` (the lift of the Brauer class satisfies
/// `beta - 2B` integral, so `2 beta` is integral in the model).
#[derive(Clone, Debug, PartialEq)]
pub struct BetaField {
    coords: Vec<Rat>,
}

impl BetaField {
    pub fn new(coords: Vec<Rat>) -> Result<Self, MukaiError> {
        for c in &coords {
            if !(c * rat_int(2)).is_integer() {
                return Err(MukaiError::BetaNotHalfIntegral(c.clone()));
            }
        }
        Ok(BetaField { coords })
    }

    pub fn zero(rank: usize) -> Self {
        BetaField {
            coords: vec![rat_int(0); rank],
        }
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }
}

/// A Mukai vector `(v0, v1, v2)` over the Neron-Severi model, tagged
/// with its coordinate frame.
#[derive(Clone, Debug, PartialEq)]
pub struct MukaiVec<K: ExactField = Rat> {
    pub v0: K,
    pub v1: Vec<K>,
    pub v2: K,
    pub frame: Frame,
}

pub type MukaiVector = MukaiVec<Rat>;
pub type MukaiVectorC = MukaiVec<Cyclotomic>;

impl<K: ExactField> MukaiVec<K> {
    pub fn new(v0: K, v1: Vec<K>, v2: K, frame: Frame) -> Self {
        MukaiVec { v0, v1, v2, frame }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(self.frame == other.frame, "frame mismatch");
        MukaiVec {
            v0: self.v0.add(&other.v0),
            v1: self.v1.iter().zip(&other.v1).map(|(a, b)| a.add(b)).collect(),
            v2: self.v2.add(&other.v2),
            frame: self.frame,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert!(self.frame == other.frame, "frame mismatch");
        MukaiVec {
            v0: self.v0.sub(&other.v0),
            v1: self.v1.iter().zip(&other.v1).map(|(a, b)| a.sub(b)).collect(),
            v2: self.v2.sub(&other.v2),
            frame: self.frame,
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        MukaiVec {
            v0: self.v0.mul(c),
            v1: self.v1.iter().map(|a| a.mul(c)).collect(),
            v2: self.v2.mul(c),
            frame: self.frame,
        }
    }
}

impl MukaiVector {
    pub fn lift(&self) -> MukaiVectorC {
        MukaiVec {
            v0: Cyclotomic::from_rat(self.v0.clone()),
            v1: self
                .v1
                .iter()
                .map(|c| Cyclotomic::from_rat(c.clone()))
                .collect(),
            v2: Cyclotomic::from_rat(self.v2.clone()),
            frame: self.frame,
        }
    }
}

/// Mukai pairing `v1.w1 - v0 w2 - v2 w0` (frames must agree).
pub fn mukai_pairing<K: ExactField>(
    ns: &NSLattice,
    v: &MukaiVec<K>,
    w: &MukaiVec<K>,
) -> Result<K, MukaiError> {
    if v.frame != w.frame {
        return Err(MukaiError::FrameMismatch {
            expected: v.frame,
            got: w.frame,
        });
    }
    ns.check_len(v.v1.len())?;
    ns.check_len(w.v1.len())?;
    let mid = ns.inner(&v.v1, &w.v1);
    Ok(mid.sub(&v.v0.mul(&w.v2)).sub(&v.v2.mul(&w.v0)))
}

/// Exponential action of a divisor class:
/// `(v0, v1 + v0 B, v2 + B.v1 + v0 B^2/2)`; frame tag unchanged.
pub fn exp_twist<K: ExactField>(ns: &NSLattice, b: &[K], v: &MukaiVec<K>) -> MukaiVec<K> {
    let half = K::from_rat(&rat_frac(1, 2));
    let v1: Vec<K> = v
        .v1
        .iter()
        .zip(b)
        .map(|(a, bi)| a.add(&v.v0.mul(bi)))
        .collect();
    let b_dot_v1 = ns.inner(b, &v.v1);
    let b_sq = ns.inner(b, b);
    let v2 = v.v2.add(&b_dot_v1).add(&v.v0.mul(&b_sq).mul(&half));
    MukaiVec {
        v0: v.v0.clone(),
        v1,
        v2,
        frame: v.frame,
    }
}

/// The B-frame Mukai vector of the i-th rank-two twisted part:
/// `e^{h i/2} (2, beta, beta^2/4 + 1/2)`.
pub fn u_vector(ns: &NSLattice, i: i64, beta: &BetaField) -> MukaiVector {
    let beta_sq = ns.inner::<Rat>(beta.coords(), beta.coords());
    let base = MukaiVec::new(
        rat_int(2),
        beta.coords().to_vec(),
        beta_sq / rat_int(4) + rat_frac(1, 2),
        Frame::B,
    );
    let mut shift: Vec<Rat> = ns.h_vec();
    for c in shift.iter_mut() {
        *c = &*c * rat_frac(i, 2);
    }
    exp_twist(ns, &shift, &base)
}

/// The eigenvector combination `v(U0) + (omega - 2) v(U1) - omega v(U2)`
/// over the third cyclotomic field, together with the verdict of the
/// closed-form identity `= -2 exp(beta/2 + (omega/2 + 1) h)`.
pub fn u_class(ns: &NSLattice, beta: &BetaField) -> (MukaiVectorC, bool) {
    let w = Cyclotomic::root(3, 1).unwrap();
    let u0 = u_vector(ns, 0, beta).lift();
    let u1 = u_vector(ns, 1, beta).lift();
    let u2 = u_vector(ns, 2, beta).lift();
    let combo = u0
        .add(&u1.scale(&w.sub(&Cyclotomic::from_int(2))))
        .sub(&u2.scale(&w));
    // closed form: -2 exp(beta/2 + (omega/2 + 1) h) applied to (1, 0, 0)
    let mut exponent: Vec<Cyclotomic> = beta
        .coords()
        .iter()
        .map(|c| Cyclotomic::from_rat(c / rat_int(2)))
        .collect();
    let h_coeff = w.scale(&rat_frac(1, 2)).add(&Cyclotomic::one(3));
    exponent[0] = exponent[0].add(&h_coeff);
    let unit = MukaiVec::new(
        Cyclotomic::one(3),
        vec![Cyclotomic::zero(3); ns.rank()],
        Cyclotomic::zero(3),
        Frame::B,
    );
    let closed = exp_twist(ns, &exponent, &unit).scale(&Cyclotomic::from_int(-2));
    let ok = combo == closed;
    (combo, ok)
}

/// Frame shift to the algebraic-field coordinates:
/// `v -> e^{-3h/4 - beta/2} v`.
pub fn to_frak_frame<K: ExactField>(
    ns: &NSLattice,
    v: &MukaiVec<K>,
    beta: &BetaField,
) -> Result<MukaiVec<K>, MukaiError> {
    if v.frame != Frame::B {
        return Err(MukaiError::FrameMismatch {
            expected: Frame::B,
            got: v.frame,
        });
    }
    let mut shift: Vec<K> = beta
        .coords()
        .iter()
        .map(|c| K::from_rat(&(-c / rat_int(2))))
        .collect();
    shift[0] = shift[0].add(&K::from_rat(&rat_frac(-3, 4)));
    let mut out = exp_twist(ns, &shift, v);
    out.frame = Frame::Frak;
    Ok(out)
}

/// `sqrt(-3)` as an element of the 12th cyclotomic field
/// (`= 2 omega + 1`).
pub fn sqrt_minus_three() -> Cyclotomic {
    Cyclotomic::root(3, 1)
        .unwrap()
        .scale(&rat_int(2))
        .add(&Cyclotomic::one(3))
        .lift(12)
}

/// The closed-form central charge in the shifted frame:
/// `Z = -v2 + (3/16) v0 + (sqrt(-3)/4) (v1.h)`, an element of the 12th
/// cyclotomic field.
pub fn z_gepner_k3(ns: &NSLattice, v: &MukaiVec<Rat>) -> Result<Cyclotomic, MukaiError> {
    if v.frame != Frame::Frak {
        return Err(MukaiError::FrameMismatch {
            expected: Frame::Frak,
            got: v.frame,
        });
    }
    ns.check_len(v.v1.len())?;
    let v1h = ns.inner::<Rat>(&v.v1, &ns.h_vec());
    let real = -&v.v2 + rat_frac(3, 16) * &v.v0;
    Ok(Cyclotomic::from_rat(real)
        .lift(12)
        .add(&sqrt_minus_three().scale(&(v1h / rat_int(4)))))
}

/// Slope `(v1.h) / v0`; None encodes infinite slope at rank zero.
pub fn slope_mu(ns: &NSLattice, v: &MukaiVec<Rat>) -> Result<Option<Rat>, MukaiError> {
    if v.frame != Frame::Frak {
        return Err(MukaiError::FrameMismatch {
            expected: Frame::Frak,
            got: v.frame,
        });
    }
    if v.v0.is_zero() {
        return Ok(None);
    }
    let v1h = ns.inner::<Rat>(&v.v1, &ns.h_vec());
    Ok(Some(v1h / &v.v0))
}

/// Outcome of the integrality checks for one integral B-frame vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralityReport {
    pub v0_even: bool,
    pub two_v1_integral: bool,
    pub eight_v2_integral: bool,
    pub four_v2_fractional_when_odd_half: bool,
    pub im_z_in_quarter_sqrt3: bool,
    pub re_z_in_quarter: bool,
    pub re_minus_im_in_half: bool,
}

impl IntegralityReport {
    pub fn all_pass(&self) -> bool {
        self.v0_even
            && self.two_v1_integral
            && self.eight_v2_integral
            && self.four_v2_fractional_when_odd_half
            && self.im_z_in_quarter_sqrt3
            && self.re_z_in_quarter
            && self.re_minus_im_in_half
    }
}

/// Verify the integrality consequences for an integral B-frame vector
/// `(xi0, xi1, xi2)` with even rank. Odd rank is rejected outright: the
/// determinant of a rank-odd twisted sheaf would trivialize the Brauer
/// class.
pub fn integrality_report(
    ns: &NSLattice,
    xi0: i64,
    xi1: &[i64],
    xi2: i64,
    beta: &BetaField,
) -> Result<IntegralityReport, MukaiError> {
    if xi0 % 2 != 0 {
        return Err(MukaiError::OddRank(xi0));
    }
    ns.check_len(xi1.len())?;
    let v = MukaiVec::new(
        rat_int(xi0),
        xi1.iter().map(|&c| rat_int(c)).collect(),
        rat_int(xi2),
        Frame::B,
    );
    let f = to_frak_frame(ns, &v, beta)?;
    let is_int = |x: &Rat| x.is_integer();
    let v0_even = (&f.v0 / rat_int(2)).is_integer();
    let two_v1_integral = f.v1.iter().all(|c| is_int(&(c * rat_int(2))));
    let eight_v2_integral = is_int(&(&f.v2 * rat_int(8)));
    let half_v0 = &f.v0 / rat_int(2);
    let four_v2_fractional_when_odd_half =
        if half_v0.is_integer() && (half_v0.to_integer() % BigInt::from(2)) != BigInt::from(0) {
            !is_int(&(&f.v2 * rat_int(4)))
        } else {
            true
        };
    let v1h = ns.inner::<Rat>(&f.v1, &ns.h_vec());
    let re = -&f.v2 + rat_frac(3, 16) * &f.v0;
    // Im Z = (sqrt(3)/4) v1.h, so membership in (sqrt(3)/4) Z is the
    // integrality of v1.h
    let im_z_in_quarter_sqrt3 = is_int(&v1h);
    let re_z_in_quarter = is_int(&(&re * rat_int(4)));
    let re_minus_im = &re - &v1h / rat_int(4);
    let re_minus_im_in_half = is_int(&(&re_minus_im * rat_int(2)));
    Ok(IntegralityReport {
        v0_even,
        two_v1_integral,
        eight_v2_integral,
        four_v2_fractional_when_odd_half,
        im_z_in_quarter_sqrt3,
        re_z_in_quarter,
        re_minus_im_in_half,
    })
}

/// The replayed exclusion chain together with the outcome of the short
/// vector search.
#[derive(Clone, Debug, PartialEq)]
pub struct SphericalExclusion {
    /// the forced rank
    pub v0: Rat,
    /// the forced second component
    pub v2: Rat,
    /// the forced self-intersection of the middle component
    pub v1_square: Rat,
    /// an integral class gamma with gamma.h = 0 and gamma^2 = -2, when
    /// one exists
    pub witness: Option<Vec<i64>>,
}

/// Replay the arithmetic exclusion chain for spherical slope-zero
/// classes and search the orthogonal complement of h for a (-2)-class.
///
/// The chain: a spherical class satisfies `v1^2 = 2 v0 v2 - 2`; slope
/// zero plus the Hodge index bound give `v1^2 <= 0`, so `v0 v2 <= 1`;
/// with `3 v0/16 <= v2 <= 1/v0` this forces `v0^2 <= 16/3`, and evenness
/// plus positivity force `v0 = 2`; then `v2` is an eighth of an integer
/// in `[3/8, 1/2]` with `4 v2` fractional, so `v2 = 3/8` and
/// `v1^2 = -1/2`, i.e. `gamma = 2 v1` is integral with `gamma.h = 0` and
/// `gamma^2 = -2`.
pub fn spherical_exclusion(ns: &NSLattice) -> Result<SphericalExclusion, MukaiError> {
    // v0: positive even integer with v0^2 <= 16/3
    let v0_candidates: Vec<i64> = (1..=4)
        .filter(|v0| v0 % 2 == 0 && 3 * v0 * v0 <= 16)
        .collect();
    assert_eq!(v0_candidates, vec![2], "rank forced to 2 by the bounds");
    let v0 = rat_int(2);
    // v2 in [3 v0/16, 1/v0] with 8 v2 integral and 4 v2 not integral
    let mut v2_candidates = Vec::new();
    for eighth in -16..=16i64 {
        let v2 = rat_frac(eighth, 8);
        let lower = rat_frac(3, 16) * &v0;
        let upper = rat_int(1) / &v0;
        if v2 >= lower && v2 <= upper && !(&v2 * rat_int(4)).is_integer() {
            v2_candidates.push(v2);
        }
    }
    assert_eq!(v2_candidates, vec![rat_frac(3, 8)], "v2 forced to 3/8");
    let v2 = rat_frac(3, 8);
    let v1_square = rat_int(2) * &v0 * &v2 - rat_int(2);
    assert_eq!(v1_square, rat_frac(-1, 2));
    let witness = find_minus_two_class(ns)?;
    Ok(SphericalExclusion {
        v0,
        v2,
        v1_square,
        witness,
    })
}

/// Integral basis of the kernel of `x -> x.h` obtained by unimodular
/// column reduction of the coefficient row.
fn h_perp_basis(ns: &NSLattice) -> Vec<Vec<i64>> {
    let rho = ns.rank();
    let mut a: Vec<i64> = (0..rho).map(|j| ns.gram[0][j]).collect();
    let mut u: Vec<Vec<i64>> = (0..rho)
        .map(|i| (0..rho).map(|j| i64::from(i == j)).collect())
        .collect();
    loop {
        let mut nonzero: Vec<usize> = (0..rho).filter(|&j| a[j] != 0).collect();
        if nonzero.len() <= 1 {
            break;
        }
        nonzero.sort_by_key(|&j| a[j].abs());
        let (p, q) = (nonzero[0], nonzero[1]);
        let f = a[q] / a[p];
        a[q] -= f * a[p];
        for row in u.iter_mut() {
            let t = row[p] * f;
            row[q] -= t;
        }
    }
    let mut basis = Vec::new();
    for j in 0..rho {
        if a[j] == 0 {
            basis.push(u.iter().map(|row| row[j]).collect());
        }
    }
    basis
}

/// Search the negative-definite complement of h for a class of square
/// -2, by bounded enumeration over a rational diagonalization of the
/// restricted form.
fn find_minus_two_class(ns: &NSLattice) -> Result<Option<Vec<i64>>, MukaiError> {
    let basis = h_perp_basis(ns);
    let m = basis.len();
    if m == 0 {
        return Ok(None);
    }
    // restricted gram, negated so the form is positive definite
    let mut q = vec![vec![rat_int(0); m]; m];
    for i in 0..m {
        for j in 0..m {
            let bi: Vec<Rat> = basis[i].iter().map(|&c| rat_int(c)).collect();
            let bj: Vec<Rat> = basis[j].iter().map(|&c| rat_int(c)).collect();
            q[i][j] = -ns.inner::<Rat>(&bi, &bj);
        }
    }
    // Lagrange diagonalization: q(y) = sum_k d_k (y_k + sum_{j>k} l_kj y_j)^2
    let mut d = vec![rat_int(0); m];
    let mut l = linalg::identity::<Rat>(m);
    let mut work = q;
    for k in 0..m {
        d[k] = work[k][k].clone();
        if d[k] <= rat_int(0) {
            return Err(MukaiError::IndefiniteComplement);
        }
        let pivot_row = work[k].clone();
        for i in k + 1..m {
            let f = &work[i][k] / &d[k];
            l[k][i] = f.clone();
            for j in 0..m {
                let t = &f * &pivot_row[j];
                work[i][j] -= t;
            }
        }
        for i in k + 1..m {
            let f = l[k][i].clone();
            for j in k + 1..m {
                let t = &f * &work[j][k];
                let _ = t; // columns are cleared through the symmetric sweep below
            }
        }
        // clear the symmetric column entries
        for j in k + 1..m {
            work[j][k] = rat_int(0);
            work[k][j] = rat_int(0);
        }
        // restore symmetry of the trailing block
        for i in k + 1..m {
            for j in i + 1..m {
                let avg = work[i][j].clone();
                work[j][i] = avg;
            }
        }
    }
    let target = rat_int(2);
    let mut y = vec![0i64; m];
    let mut found: Option<Vec<i64>> = None;
    enumerate(&d, &l, m, &target, &mut y, &mut found);
    Ok(found.map(|y| {
        let mut out = vec![0i64; ns.rank()];
        for (k, &c) in y.iter().enumerate() {
            for (i, &b) in basis[k].iter().enumerate() {
                out[i] += c * b;
            }
        }
        out
    }))
}

fn enumerate(
    d: &[Rat],
    l: &[Vec<Rat>],
    k: usize,
    remaining: &Rat,
    y: &mut [i64],
    found: &mut Option<Vec<i64>>,
) {
    if found.is_some() {
        return;
    }
    if k == 0 {
        if *remaining == rat_int(0) && y.iter().any(|&c| c != 0) {
            *found = Some(y.to_vec());
        }
        return;
    }
    let k = k - 1;
    // offset = sum_{j>k} l[k][j] y_j; admissible t satisfy
    // d_k (t + offset)^2 <= remaining
    let mut offset = rat_int(0);
    for j in k + 1..y.len() {
        offset += &l[k][j] * rat_int(y[j]);
    }
    let bound_sq = remaining / &d[k];
    let center = (-&offset).round().to_integer();
    let center = i64::try_from(center).unwrap_or(0);
    let mut radius = 0i64;
    loop {
        let edge = rat_int(center + radius + 1) + &offset;
        let edge2 = rat_int(center - radius - 1) + &offset;
        if &edge * &edge > bound_sq && &edge2 * &edge2 > bound_sq {
            break;
        }
        radius += 1;
        if radius > 10_000 {
            break;
        }
    }
    for t in center - radius..=center + radius {
        let val = rat_int(t) + &offset;
        let used = &d[k] * &val * &val;
        if &used > remaining {
            continue;
        }
        y[k] = t;
        let rest = remaining - &used;
        enumerate(d, l, k, &rest, y, found);
        y[k] = 0;
        if found.is_some() {
            return;
        }
    }
}
