//! Exact scalar arithmetic: arbitrary-precision rationals and elements of
//! cyclotomic fields `Q(zeta_d)` in the power basis modulo the d-th
//! cyclotomic polynomial.
//!
//! All field operations are exact. Elements of different orders
//! interoperate by lifting to the lcm order; results are kept in the
//! compositum and are not descended automatically (see
//! [`Cyclotomic::simplify`]).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg;

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`.
pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Largest supported cyclotomic order. The degree of `Phi_d` and its
/// coefficient size grow quickly; everything in this crate needs only
/// small orders (2, 3, 5, 12 and lcms thereof).
pub const MAX_ORDER: u32 = 10_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("cyclotomic order must be positive, got {0}")]
    NonPositiveOrder(i64),
    #[error("cyclotomic order {0} exceeds the supported bound {MAX_ORDER}")]
    OrderTooLarge(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error in scalar '{input}': {reason}")]
    Parse { input: String, reason: String },
    #[error("embedding precision must be at least 24 bits, got {0}")]
    PrecisionTooLow(u32),
}

/// Euler totient.
pub fn euler_phi(d: u32) -> u32 {
    let mut n = d;
    let mut result = d;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(d: u32) -> Vec<u32> {
    let mut out = Vec::new();
    for e in 1..=d {
        if d % e == 0 {
            out.push(e);
        }
    }
    out
}

/// Integer-coefficient cyclotomic polynomial `Phi_d`, monic, stored as
/// coefficient vector with `v[k]` the coefficient of `x^k`.
fn cyclotomic_poly(d: u32) -> Vec<BigInt> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&d) {
        return p.clone();
    }
    // x^d - 1 divided by the product of Phi_e over proper divisors e of d.
    let mut num = vec![BigInt::zero(); d as usize + 1];
    num[0] = -BigInt::one();
    num[d as usize] = BigInt::one();
    for e in divisors(d) {
        if e == d {
            continue;
        }
        let phi_e = cyclotomic_poly(e);
        num = int_poly_div_exact(&num, &phi_e);
    }
    cache.lock().unwrap().insert(d, num.clone());
    num
}

/// Exact division of integer polynomials (the divisor is monic and the
/// remainder is known to vanish).
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let nd = rem.len() - 1;
    if nd < dd {
        assert!(rem.iter().all(|c| c.is_zero()));
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for j in 0..=dd {
            let t = &den[j] * &c;
            rem[k + j] -= t;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division not exact");
    quot
}

/// Reduce a rational polynomial modulo `Phi_d`, returning exactly
/// `phi(d)` coefficients.
fn reduce_mod_phi(mut poly: Vec<Rat>, d: u32) -> Vec<Rat> {
    let phi = cyclotomic_poly(d);
    let deg = phi.len() - 1;
    while poly.len() > deg {
        let k = poly.len() - 1;
        let c = poly[k].clone();
        if !c.is_zero() {
            for j in 0..deg {
                let t = Rat::from_integer(phi[j].clone()) * &c;
                poly[k - deg + j] -= t;
            }
        }
        poly.pop();
    }
    poly.resize(deg, Rat::zero());
    poly
}

/// An exact element of the `order`-th cyclotomic field, represented in
/// the power basis `1, z, ..., z^{phi(order)-1}` with `z = zeta_order`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rat>,
}

impl Cyclotomic {
    fn check_order(d: u32) -> Result<(), ExactError> {
        if d == 0 {
            return Err(ExactError::NonPositiveOrder(0));
        }
        if d > MAX_ORDER {
            return Err(ExactError::OrderTooLarge(d));
        }
        Ok(())
    }

    pub fn zero(order: u32) -> Self {
        Self::check_order(order).expect("invalid order");
        Cyclotomic {
            order,
            coeffs: vec![Rat::zero(); euler_phi(order) as usize],
        }
    }

    pub fn one(order: u32) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = Rat::one();
        z
    }

    pub fn from_rat(r: Rat) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat_int(n))
    }

    /// `zeta_d^k`, reduced into the power basis. `k` is taken mod `d`.
    pub fn root(d: i64, k: i64) -> Result<Self, ExactError> {
        if d <= 0 {
            return Err(ExactError::NonPositiveOrder(d));
        }
        let d = u32::try_from(d).map_err(|_| ExactError::OrderTooLarge(u32::MAX))?;
        Self::check_order(d)?;
        let k = k.rem_euclid(i64::from(d)) as usize;
        let mut poly = vec![Rat::zero(); k + 1];
        poly[k] = Rat::one();
        Ok(Cyclotomic {
            order: d,
            coeffs: reduce_mod_phi(poly, d),
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Lift into the field of order `target` (a multiple of `self.order`).
    pub fn lift(&self, target: u32) -> Self {
        assert!(
            target % self.order == 0,
            "lift target {} is not a multiple of order {}",
            target,
            self.order
        );
        Self::check_order(target).expect("invalid order");
        if target == self.order {
            return self.clone();
        }
        let step = (target / self.order) as usize;
        let mut poly = vec![Rat::zero(); (self.coeffs.len() - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[k * step] = c.clone();
        }
        Cyclotomic {
            order: target,
            coeffs: reduce_mod_phi(poly, target),
        }
    }

    fn unify(&self, other: &Self) -> (Self, Self) {
        if self.order == other.order {
            (self.clone(), other.clone())
        } else {
            let l = self.order.lcm(&other.order);
            (self.lift(l), other.lift(l))
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.unify(other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (mut a, b) = self.unify(other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a
    }

    pub fn neg(&self) -> Self {
        let mut a = self.clone();
        for c in &mut a.coeffs {
            *c = -c.clone();
        }
        a
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.unify(other);
        let mut prod = vec![Rat::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                prod[i + j] += x * y;
            }
        }
        Cyclotomic {
            order: a.order,
            coeffs: reduce_mod_phi(prod, a.order),
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        let mut a = self.clone();
        for c in &mut a.coeffs {
            *c *= r;
        }
        a
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in
    /// `Q[x]` against `Phi_d` (irreducible, so any nonzero element is a
    /// unit).
    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let phi: Vec<Rat> = cyclotomic_poly(self.order)
            .iter()
            .map(|c| Rat::from_integer(c.clone()))
            .collect();
        // Extended Euclid with the invariant s_i * self = r_i mod Phi_d;
        // the last nonzero remainder is a constant since Phi_d is
        // irreducible.
        let mut r0 = phi;
        let mut r1 = trim(self.coeffs.clone());
        let mut s0 = vec![Rat::zero()];
        let mut s1 = vec![Rat::one()];
        while poly_deg(&r1) > 0 || !r1[0].is_zero() {
            let (q, r) = rat_poly_divmod(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = trim(r);
            s0 = s1;
            s1 = s;
        }
        let c = r0[0].clone();
        assert!(
            poly_deg(&r0) == 0 && !c.is_zero(),
            "gcd with irreducible Phi_d must be a unit"
        );
        let inv_coeffs: Vec<Rat> = s0.iter().map(|x| x / &c).collect();
        Ok(Cyclotomic {
            order: self.order,
            coeffs: reduce_mod_phi(inv_coeffs, self.order),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self, ExactError> {
        let (a, b) = self.unify(other);
        Ok(a.mul(&b.inv()?))
    }

    /// Complex conjugation, i.e. the Galois automorphism `z -> z^{-1}`.
    pub fn conj(&self) -> Self {
        let d = self.order;
        let mut poly = vec![Rat::zero(); d as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = if k == 0 { 0 } else { d as usize - k };
            poly[e] += c;
        }
        Cyclotomic {
            order: d,
            coeffs: reduce_mod_phi(poly, d),
        }
    }

    pub fn pow(&self, n: i64) -> Result<Self, ExactError> {
        if n < 0 {
            return self.inv()?.pow(-n);
        }
        let mut result = Cyclotomic::one(self.order);
        let mut base = self.clone();
        let mut e = n as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        Ok(result)
    }

    /// Rational part, if the element lies in `Q`.
    pub fn to_rat(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Try to rewrite the element in the subfield `Q(zeta_t)` for a
    /// divisor `t` of the order.
    pub fn descend(&self, t: u32) -> Option<Cyclotomic> {
        assert!(t >= 1 && self.order % t == 0, "descent target must divide the order");
        if t == self.order {
            return Some(self.clone());
        }
        let dim = self.coeffs.len();
        let sub_dim = euler_phi(t) as usize;
        // Columns: lifts of the power basis of Q(zeta_t); solve for self.
        let mut cols = Vec::with_capacity(sub_dim);
        for j in 0..sub_dim {
            let mut b = Cyclotomic::zero(t);
            b.coeffs[j] = Rat::one();
            cols.push(b.lift(self.order).coeffs);
        }
        let mut mat = vec![vec![Rat::zero(); sub_dim]; dim];
        for (j, col) in cols.iter().enumerate() {
            for i in 0..dim {
                mat[i][j] = col[i].clone();
            }
        }
        let sol = linalg::solve(&mat, &self.coeffs)?;
        Some(Cyclotomic { order: t, coeffs: sol })
    }

    /// Descend to the smallest cyclotomic subfield containing the element.
    pub fn simplify(&self) -> Cyclotomic {
        for t in divisors(self.order) {
            if let Some(z) = self.descend(t) {
                return z;
            }
        }
        self.clone()
    }

    /// Floating evaluation at `zeta_d = exp(2 pi i / d)`. Display only;
    /// never authoritative.
    pub fn embed(&self, bits: u32) -> Result<ComplexApprox, ExactError> {
        if bits < 24 {
            return Err(ExactError::PrecisionTooLow(bits));
        }
        let guard = bits + 16;
        let pi = pi_approx(guard);
        let mut re = Rat::zero();
        let mut im = Rat::zero();
        let d = i64::from(self.order);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // angle 2 pi k / d reduced to [-pi, pi]
            let kk = (k as i64) % d;
            let num = if 2 * kk > d { 2 * kk - 2 * d } else { 2 * kk };
            let theta = &pi * Rat::new(BigInt::from(num), BigInt::from(d));
            let (c_cos, c_sin) = cos_sin_approx(&theta, guard);
            re += c * c_cos;
            im += c * c_sin;
        }
        Ok(ComplexApprox {
            re: dyadic_round(&re, bits),
            im: dyadic_round(&im, bits),
            bits,
        })
    }

    /// Parse a scalar string: either a plain rational (`-3/4`) or a
    /// power-basis polynomial with an order tag (`1/2 - z + 3*z^2 @ 12`).
    pub fn parse(s: &str) -> Result<Self, ExactError> {
        parse_cyclotomic(s)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.unify(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let coeff_is_one = mag.is_one();
            match (k, coeff_is_one) {
                (0, _) => write!(f, "{}", mag)?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{}*z", mag)?,
                (_, true) => write!(f, "z^{}", k)?,
                (_, false) => write!(f, "{}*z^{}", mag, k)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        if self.order > 1 {
            write!(f, " @ {}", self.order)?;
        }
        Ok(())
    }
}

mod field_impl {
    use super::Cyclotomic;
    use crate::linalg::ExactField;

    impl ExactField for Cyclotomic {
        fn zero() -> Self {
            Cyclotomic::zero(1)
        }
        fn one() -> Self {
            Cyclotomic::one(1)
        }
        fn add(&self, other: &Self) -> Self {
            Cyclotomic::add(self, other)
        }
        fn sub(&self, other: &Self) -> Self {
            Cyclotomic::sub(self, other)
        }
        fn mul(&self, other: &Self) -> Self {
            Cyclotomic::mul(self, other)
        }
        fn neg(&self) -> Self {
            Cyclotomic::neg(self)
        }
        fn inv(&self) -> Option<Self> {
            Cyclotomic::inv(self).ok()
        }
        fn is_zero(&self) -> bool {
            Cyclotomic::is_zero(self)
        }
        fn from_rat(r: &super::Rat) -> Self {
            Cyclotomic::from_rat(r.clone())
        }
    }
}

// Helper polynomial arithmetic over Q used by the extended Euclid above.

fn trim(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.len() > 1 && v.last().unwrap().is_zero() {
        v.pop();
    }
    if v.is_empty() {
        v.push(Rat::zero());
    }
    v
}

fn poly_deg(v: &[Rat]) -> usize {
    v.len() - 1
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn rat_poly_divmod(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let den = trim(den.to_vec());
    let dd = poly_deg(&den);
    let lead = den[dd].clone();
    let mut rem = trim(num.to_vec());
    if poly_deg(&rem) < dd {
        return (vec![Rat::zero()], rem);
    }
    let mut quot = vec![Rat::zero(); poly_deg(&rem) - dd + 1];
    while poly_deg(&rem) >= dd && !(poly_deg(&rem) == 0 && rem[0].is_zero()) {
        let k = poly_deg(&rem) - dd;
        let c = &rem[poly_deg(&rem)] / &lead;
        quot[k] = c.clone();
        for j in 0..=dd {
            let t = &den[j] * &c;
            rem[k + j] -= t;
        }
        rem = trim(rem);
        if poly_deg(&rem) < dd {
            break;
        }
    }
    (trim(quot), rem)
}

// ---------------------------------------------------------------------
// Display-only complex embeddings.

/// A floating approximation of a complex number at a configurable dyadic
/// precision. Never used in any decision or equality test.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexApprox {
    pub re: Rat,
    pub im: Rat,
    pub bits: u32,
}

impl fmt::Display for ComplexApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = (self.bits as usize * 30103) / 100000;
        write!(
            f,
            "({}, {})",
            decimal_string(&self.re, digits),
            decimal_string(&self.im, digits)
        )
    }
}

fn dyadic_round(x: &Rat, bits: u32) -> Rat {
    let scale = BigInt::one() << bits;
    let scaled = x * Rat::from_integer(scale.clone());
    Rat::new(scaled.round().to_integer(), scale)
}

/// Decimal string with the given number of fractional digits (truncated).
pub fn decimal_string(x: &Rat, digits: usize) -> String {
    let neg = x.is_negative();
    let ax = x.abs();
    let int = ax.trunc().to_integer();
    let mut frac = ax.fract();
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&int.to_string());
    out.push('.');
    for _ in 0..digits {
        frac *= rat_int(10);
        let d = frac.trunc().to_integer();
        out.push_str(&d.to_string());
        frac = frac.fract();
    }
    out
}

/// pi to roughly `bits` bits, via Machin's formula.
fn pi_approx(bits: u32) -> Rat {
    fn atan_inv(x: i64, bits: u32) -> Rat {
        let x2 = rat_int(x * x);
        let mut term = Rat::new(BigInt::one(), BigInt::from(x));
        let mut sum = term.clone();
        let mut k = 1i64;
        let eps = Rat::new(BigInt::one(), BigInt::one() << bits);
        loop {
            term /= &x2;
            let contrib = &term / rat_int(2 * k + 1);
            if contrib.abs() < eps {
                break;
            }
            if k % 2 == 1 {
                sum -= contrib;
            } else {
                sum += contrib;
            }
            k += 1;
        }
        sum
    }
    atan_inv(5, bits + 8) * rat_int(16) - atan_inv(239, bits + 8) * rat_int(4)
}

/// (cos theta, sin theta) by Taylor series; theta should be reduced to a
/// moderate interval first.
fn cos_sin_approx(theta: &Rat, bits: u32) -> (Rat, Rat) {
    let eps = Rat::new(BigInt::one(), BigInt::one() << bits);
    let t2 = theta * theta;
    let mut cos = Rat::one();
    let mut term = Rat::one();
    let mut k = 1i64;
    loop {
        term = &term * &t2 / rat_int((2 * k - 1) * (2 * k));
        if term.abs() < eps {
            break;
        }
        if k % 2 == 1 {
            cos -= &term;
        } else {
            cos += &term;
        }
        k += 1;
    }
    let mut sin = theta.clone();
    let mut term = theta.clone();
    let mut k = 1i64;
    loop {
        term = &term * &t2 / rat_int((2 * k) * (2 * k + 1));
        if term.abs() < eps {
            break;
        }
        if k % 2 == 1 {
            sin -= &term;
        } else {
            sin += &term;
        }
        k += 1;
    }
    (cos, sin)
}

// ---------------------------------------------------------------------
// Parsing.

fn parse_rat(s: &str) -> Result<Rat, ExactError> {
    s.parse::<Rat>().map_err(|e| ExactError::Parse {
        input: s.to_string(),
        reason: e.to_string(),
    })
}

fn parse_cyclotomic(input: &str) -> Result<Cyclotomic, ExactError> {
    let err = |reason: &str| ExactError::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    let (body, order) = match input.split_once('@') {
        Some((b, o)) => {
            let d: i64 = o.trim().parse().map_err(|_| err("invalid order tag"))?;
            if d <= 0 {
                return Err(ExactError::NonPositiveOrder(d));
            }
            (b, d as u32)
        }
        None => (input, 1),
    };
    Cyclotomic::check_order(order)?;
    let compact: String = body.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err("empty scalar"));
    }
    let mut result = Cyclotomic::zero(order);
    // Split into signed terms.
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut sign_neg = false;
    let mut started = false;
    for ch in compact.chars() {
        if (ch == '+' || ch == '-') && started {
            terms.push((sign_neg, std::mem::take(&mut current)));
            sign_neg = ch == '-';
        } else if (ch == '+' || ch == '-') && !started {
            sign_neg = ch == '-';
            started = true;
        } else {
            current.push(ch);
            started = true;
        }
    }
    terms.push((sign_neg, current));
    for (neg, term) in terms {
        if term.is_empty() {
            return Err(err("dangling sign"));
        }
        let (coeff_str, pow) = match term.find('z') {
            None => (term.as_str(), None),
            Some(zpos) => {
                let before = &term[..zpos];
                let after = &term[zpos + 1..];
                let pow = if after.is_empty() {
                    1usize
                } else if let Some(e) = after.strip_prefix('^') {
                    e.parse().map_err(|_| err("invalid exponent"))?
                } else {
                    return Err(err("unexpected characters after z"));
                };
                let before = before.strip_suffix('*').unwrap_or(before);
                (before, Some(pow))
            }
        };
        let coeff = if coeff_str.is_empty() {
            Rat::one()
        } else {
            parse_rat(coeff_str)?
        };
        let coeff = if neg { -coeff } else { coeff };
        let pow = pow.unwrap_or(0);
        if pow > 0 && order == 1 {
            return Err(err("power-basis term requires an order tag '@ d'"));
        }
        let mono = Cyclotomic::root(i64::from(order), pow as i64)?;
        result = result.add(&mono.scale(&coeff));
    }
    Ok(result)
}
