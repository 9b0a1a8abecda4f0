//! Numerical Grothendieck groups presented by an Euler pairing matrix,
//! class-level autoequivalence actions (spherical twists, tensor twists,
//! Serre operators), exact eigenvector solving over cyclotomic fields,
//! and the three bundled datasets: the Clifford-part lattice of the
//! quadric fibration over the plane, the cubic surface lattice, and the
//! cubic threefold lattice.
//!
//! Autoequivalence actions are built compositionally from twist and
//! tensor primitives; displayed matrices from the source computations
//! become assertions in the test suite rather than definitions.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{rat_int, Cyclotomic, Rat};
use crate::interring::{self, GradedRing, RingClass};
use crate::linalg;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("class length {0} does not match lattice rank {1}")]
    RankMismatch(usize, usize),
    #[error("action matrix is singular")]
    Singular,
    #[error("class does not lie in the span of the dataset basis")]
    NotInSpan,
}

/// A numerical Grothendieck group with a chosen basis and the Euler
/// pairing matrix `euler[i][j] = chi(e_i, e_j)` (generally
/// non-symmetric).
#[derive(Clone, Debug)]
pub struct NumLattice {
    labels: Vec<String>,
    euler: Vec<Vec<Rat>>,
}

impl NumLattice {
    pub fn new(labels: Vec<String>, euler: Vec<Vec<Rat>>) -> Self {
        let n = labels.len();
        assert!(euler.len() == n && euler.iter().all(|r| r.len() == n));
        NumLattice { labels, euler }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn euler_matrix(&self) -> &[Vec<Rat>] {
        &self.euler
    }

    fn check_len(&self, x: &[Rat]) -> Result<(), LatticeError> {
        if x.len() != self.rank() {
            Err(LatticeError::RankMismatch(x.len(), self.rank()))
        } else {
            Ok(())
        }
    }

    /// Euler pairing `x^T E y` of rational classes.
    pub fn chi(&self, x: &[Rat], y: &[Rat]) -> Result<Rat, LatticeError> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mut out = Rat::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                out += xi * &self.euler[i][j] * yj;
            }
        }
        Ok(out)
    }

    /// Euler pairing extended bilinearly over a cyclotomic field.
    pub fn chi_c(
        &self,
        x: &[Cyclotomic],
        y: &[Cyclotomic],
    ) -> Result<Cyclotomic, LatticeError> {
        if x.len() != self.rank() || y.len() != self.rank() {
            return Err(LatticeError::RankMismatch(x.len(), self.rank()));
        }
        let mut out = Cyclotomic::zero(1);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                out = out.add(&xi.mul(yj).scale(&self.euler[i][j]));
            }
        }
        Ok(out)
    }

    /// Class-level spherical twist along `e`: `x -> x - chi(e, x) e`.
    pub fn twist_action(&self, e: &[Rat]) -> LatAuto {
        let n = self.rank();
        let mut m = linalg::identity::<Rat>(n);
        for j in 0..n {
            let mut unit = vec![Rat::zero(); n];
            unit[j] = Rat::one();
            let c = self.chi(e, &unit).unwrap();
            for (i, ei) in e.iter().enumerate() {
                m[i][j] -= &c * ei;
            }
        }
        LatAuto::new(m, Some("twist".into()))
    }

    /// Class-level inverse twist along `e`: `x -> x - chi(x, e) e`.
    pub fn inv_twist_action(&self, e: &[Rat]) -> LatAuto {
        let n = self.rank();
        let mut m = linalg::identity::<Rat>(n);
        for j in 0..n {
            let mut unit = vec![Rat::zero(); n];
            unit[j] = Rat::one();
            let c = self.chi(&unit, e).unwrap();
            for (i, ei) in e.iter().enumerate() {
                m[i][j] -= &c * ei;
            }
        }
        LatAuto::new(m, Some("inv-twist".into()))
    }

    /// The numerical Serre operator `S = E^{-1} E^T`, characterized by
    /// `chi(y, S x) = chi(x, y)`.
    pub fn serre_operator(&self) -> Result<LatAuto, LatticeError> {
        let inv = linalg::invert(&self.euler).ok_or(LatticeError::Singular)?;
        let n = self.rank();
        let mut et = vec![vec![Rat::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                et[i][j] = self.euler[j][i].clone();
            }
        }
        Ok(LatAuto::new(linalg::mat_mul(&inv, &et), Some("serre".into())))
    }
}

/// An invertible class-level action of an autoequivalence; columns are
/// the images of the basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatAuto {
    matrix: Vec<Vec<Rat>>,
    name: Option<String>,
}

impl LatAuto {
    pub fn new(matrix: Vec<Vec<Rat>>, name: Option<String>) -> Self {
        assert!(
            !linalg::det(&matrix).is_zero(),
            "autoequivalence action must be invertible"
        );
        LatAuto { matrix, name }
    }

    pub fn identity(n: usize) -> Self {
        LatAuto {
            matrix: linalg::identity(n),
            name: Some("id".into()),
        }
    }

    pub fn matrix(&self) -> &[Vec<Rat>] {
        &self.matrix
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn apply(&self, x: &[Rat]) -> Vec<Rat> {
        linalg::mat_vec(&self.matrix, x)
    }

    pub fn apply_c(&self, x: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let lifted: Vec<Vec<Cyclotomic>> = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|c| Cyclotomic::from_rat(c.clone())).collect())
            .collect();
        linalg::mat_vec(&lifted, x)
    }

    /// `self` after `other` (matrix product).
    pub fn compose(&self, other: &LatAuto) -> LatAuto {
        LatAuto {
            matrix: linalg::mat_mul(&self.matrix, &other.matrix),
            name: None,
        }
    }

    pub fn neg(&self) -> LatAuto {
        LatAuto {
            matrix: self
                .matrix
                .iter()
                .map(|r| r.iter().map(|c| -c.clone()).collect())
                .collect(),
            name: None,
        }
    }

    pub fn inverse(&self) -> LatAuto {
        LatAuto {
            matrix: linalg::invert(&self.matrix).expect("invertible by construction"),
            name: None,
        }
    }

    pub fn pow(&self, k: i64) -> LatAuto {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = LatAuto::identity(self.rank());
        for _ in 0..k.unsigned_abs() {
            out = out.compose(&base);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == linalg::identity::<Rat>(self.rank())
    }
}

/// Exact kernel basis of `A - lambda id` over the cyclotomic field of
/// `lambda`.
pub fn gepner_eigenspace(a: &LatAuto, lambda: &Cyclotomic) -> Vec<Vec<Cyclotomic>> {
    let mut m: Vec<Vec<Cyclotomic>> = a
        .matrix
        .iter()
        .map(|row| row.iter().map(|c| Cyclotomic::from_rat(c.clone())).collect())
        .collect();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = row[i].sub(lambda);
    }
    linalg::kernel(&m)
}

/// Central charge `chi(u, x)` attached to an eigenvector `u`.
pub fn central_charge(
    l: &NumLattice,
    u: &[Cyclotomic],
    x: &[Cyclotomic],
) -> Result<Cyclotomic, LatticeError> {
    l.chi_c(u, x)
}

pub fn lift_rational(x: &[Rat]) -> Vec<Cyclotomic> {
    x.iter().map(|c| Cyclotomic::from_rat(c.clone())).collect()
}

// ---------------------------------------------------------------------
// Dataset: the rank-3 lattice spanned by consecutive Clifford parts.

pub struct VDataset {
    pub lattice: NumLattice,
    /// class action of tensoring with the next Clifford part
    pub tensor: LatAuto,
    /// class action of the inverse of the grade-shift equivalent functor
    pub fb_inverse: LatAuto,
}

/// The rank-3 lattice spanned by the classes of three consecutive
/// Clifford parts. Euler values are computed through the plane
/// intersection ring from the line-bundle decompositions; the tensor
/// action sends each part to the next, closing up via the rank-3
/// relation, and the distinguished action is `-(tensor) o (twist along
/// the middle part)`.
pub fn dataset_v_b012() -> VDataset {
    let ring = interring::p2();
    let chi_k = |k: i64| -> Rat { ring.chi_rr(&interring::ch_b(&ring, k)).unwrap() };
    let mut euler = vec![vec![Rat::zero(); 3]; 3];
    for i in 0..3i64 {
        for j in 0..3i64 {
            euler[i as usize][j as usize] = chi_k(j - i);
        }
    }
    let lattice = NumLattice::new(vec!["B0".into(), "B1".into(), "B2".into()], euler);
    // express the class of the third part in the basis of the first
    // three by solving against the plane Chern characters
    let b3 = expand_in_basis(
        &[
            interring::ch_b(&ring, 0),
            interring::ch_b(&ring, 1),
            interring::ch_b(&ring, 2),
        ],
        &interring::ch_b(&ring, 3),
    )
    .expect("third Clifford part lies in the span");
    let tensor = LatAuto::new(
        vec![
            vec![Rat::zero(), Rat::zero(), b3[0].clone()],
            vec![Rat::one(), Rat::zero(), b3[1].clone()],
            vec![Rat::zero(), Rat::one(), b3[2].clone()],
        ],
        Some("tensor".into()),
    );
    let e1 = vec![Rat::zero(), Rat::one(), Rat::zero()];
    let fb_inverse = tensor.compose(&lattice.twist_action(&e1)).neg();
    VDataset {
        lattice,
        tensor,
        fb_inverse,
    }
}

/// Solve for the coordinates of `target` in the given Chern-character
/// basis (flattened ring coordinates).
fn expand_in_basis(basis: &[RingClass], target: &RingClass) -> Result<Vec<Rat>, LatticeError> {
    let cols: Vec<Vec<Rat>> = basis.iter().map(|b| b.flatten()).collect();
    let rhs = target.flatten();
    let rows = rhs.len();
    let mut mat = vec![vec![Rat::zero(); basis.len()]; rows];
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            mat[i][j] = v.clone();
        }
    }
    linalg::solve(&mat, &rhs).ok_or(LatticeError::NotInSpan)
}

// ---------------------------------------------------------------------
// Dataset: cubic surface.

pub struct SurfaceDataset {
    pub lattice: NumLattice,
    pub serre: LatAuto,
    pub ring: GradedRing,
    pub basis_ch: Vec<RingClass>,
}

/// The rank-8 lattice of the orthogonal complement of the structure
/// sheaf on a cubic surface, with basis the two line-bundle twists and
/// the six exceptional structure sheaves. The Serre action is computed
/// through the intersection ring: `[S(E)] = [E(-H)] - chi(E(-H), O) [O]`
/// re-expanded in the basis.
pub fn dataset_cubic_surface() -> SurfaceDataset {
    let ring = interring::cubic_surface();
    let h = ring.class("h");
    let mut basis_ch: Vec<RingClass> = vec![
        ring.exp(&h).unwrap(),
        ring.exp(&h.scale(&rat_int(2))).unwrap(),
    ];
    for i in 1..=6 {
        let ci = ring.class(&format!("C{}", i));
        // character of the exceptional structure sheaf: 1 - exp(-C_i)
        let ch = ring
            .unit_class()
            .sub(&ring.exp(&ci.scale(&rat_int(-1))).unwrap());
        basis_ch.push(ch);
    }
    let mut labels = vec!["O(h)".to_string(), "O(2h)".to_string()];
    for i in 1..=6 {
        labels.push(format!("O_C{}", i));
    }
    let n = basis_ch.len();
    let mut euler = vec![vec![Rat::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            euler[i][j] = ring.chi_pair(&basis_ch[i], &basis_ch[j]).unwrap();
        }
    }
    let lattice = NumLattice::new(labels, euler);
    let hyperplane = interring::cubic_surface_hyperplane(&ring);
    let e_mh = ring.exp(&hyperplane.scale(&rat_int(-1))).unwrap();
    let unit = ring.unit_class();
    let mut cols = Vec::with_capacity(n);
    for ch in &basis_ch {
        let twisted = ring.mul(ch, &e_mh);
        let c = ring.chi_pair(&twisted, &unit).unwrap();
        let serre_class = twisted.sub(&unit.scale(&c));
        cols.push(
            expand_in_basis(&basis_ch, &serre_class)
                .expect("Serre image lies in the orthogonal complement"),
        );
    }
    let mut matrix = vec![vec![Rat::zero(); n]; n];
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            matrix[i][j] = v.clone();
        }
    }
    let serre = LatAuto::new(matrix, Some("serre".into()));
    SurfaceDataset {
        lattice,
        serre,
        ring,
        basis_ch,
    }
}

// ---------------------------------------------------------------------
// Dataset: cubic threefold.

pub struct ThreefoldDataset {
    pub lattice: NumLattice,
    pub serre: LatAuto,
    pub serre_inverse: LatAuto,
    /// (rank, degree) coordinates of the two basis classes, as columns
    pub phi: Vec<Vec<Rat>>,
}

impl ThreefoldDataset {
    /// `phi` applied to a lattice class.
    pub fn phi_apply(&self, x: &[Rat]) -> (Rat, Rat) {
        let v = linalg::mat_vec(&self.phi, x);
        (v[0].clone(), v[1].clone())
    }

    /// Inverse of `phi`: the lattice class with the given rank and
    /// degree.
    pub fn phi_inverse(&self, r: &Rat, d: &Rat) -> Vec<Rat> {
        let inv = linalg::invert(&self.phi).expect("phi invertible");
        linalg::mat_vec(&inv, &[r.clone(), d.clone()])
    }

    /// Euler pairing in (rank, degree) coordinates.
    pub fn chi_rd(&self, r1: &Rat, d1: &Rat, r2: &Rat, d2: &Rat) -> Rat {
        let x = self.phi_inverse(r1, d1);
        let y = self.phi_inverse(r2, d2);
        self.lattice.chi(&x, &y).unwrap()
    }
}

/// The rank-2 lattice of the cubic threefold semiorthogonal summand,
/// with basis the ideal sheaf class of a line and its Serre image. The
/// Serre operator is derived from the Euler matrix; the forgetful
/// (rank, degree) coordinates are those of the Clifford-module images.
pub fn dataset_cubic_threefold() -> ThreefoldDataset {
    let euler = vec![
        vec![rat_int(-1), rat_int(-1)],
        vec![rat_int(0), rat_int(-1)],
    ];
    let lattice = NumLattice::new(vec!["I_l".into(), "S(I_l)".into()], euler);
    let serre = lattice.serre_operator().unwrap();
    let serre_inverse = serre.inverse();
    // images under (rank, c1) of the forgetful functor:
    // [I_l] -> (0, 2), [S(I_l)] -> (4, -3)
    let phi = vec![vec![rat_int(0), rat_int(4)], vec![rat_int(2), rat_int(-3)]];
    ThreefoldDataset {
        lattice,
        serre,
        serre_inverse,
        phi,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_frac;

    fn omega() -> Cyclotomic {
        Cyclotomic::root(3, 1).unwrap()
    }

    fn e(n: usize, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); n];
        v[i] = Rat::one();
        v
    }

    #[test]
    fn v_dataset_euler_values() {
        let ds = dataset_v_b012();
        let l = &ds.lattice;
        assert_eq!(l.chi(&e(3, 0), &e(3, 0)).unwrap(), rat_int(2));
        assert_eq!(l.chi(&e(3, 0), &e(3, 1)).unwrap(), rat_int(3));
        assert_eq!(l.chi(&e(3, 0), &e(3, 2)).unwrap(), rat_int(6));
        assert_eq!(l.chi(&e(3, 1), &e(3, 0)).unwrap(), rat_int(3));
        // the rank-3 relation makes the tensor action close up with
        // third column (1, -3, 3)
        let col: Vec<Rat> = (0..3).map(|i| ds.tensor.matrix()[i][2].clone()).collect();
        assert_eq!(col, vec![rat_int(1), rat_int(-3), rat_int(3)]);
    }

    #[test]
    fn v_dataset_action_matrix() {
        let ds = dataset_v_b012();
        let expected = vec![
            vec![rat_int(0), rat_int(0), rat_int(-1)],
            vec![rat_int(-1), rat_int(0), rat_int(3)],
            vec![rat_int(3), rat_int(1), rat_int(0)],
        ];
        assert_eq!(ds.fb_inverse.matrix(), expected.as_slice());
        assert!(ds.fb_inverse.pow(3).is_identity());
    }

    #[test]
    fn v_dataset_relations() {
        let ds = dataset_v_b012();
        let t = &ds.tensor;
        let b = |i: i64| -> Vec<Rat> {
            let mut v = e(3, 0);
            let action = if i >= 0 { t.clone() } else { t.inverse() };
            for _ in 0..i.unsigned_abs() {
                v = action.apply(&v);
            }
            v
        };
        let add = |x: &[Rat], y: &[Rat]| -> Vec<Rat> {
            x.iter().zip(y).map(|(a, b)| a + b).collect()
        };
        let scale = |x: &[Rat], c: i64| -> Vec<Rat> {
            x.iter().map(|a| a * rat_int(c)).collect()
        };
        // B4 - 2 B2 + B0 = B5 - 2 B3 + B1
        let lhs = add(&add(&b(4), &scale(&b(2), -2)), &b(0));
        let rhs = add(&add(&b(5), &scale(&b(3), -2)), &b(1));
        assert_eq!(lhs, rhs);
        // B4 = B0 - 2 B1 + 2 B3
        let rhs = add(&add(&b(0), &scale(&b(1), -2)), &scale(&b(3), 2));
        assert_eq!(b(4), rhs);
        // B3 = B0 - 3 B1 + 3 B2
        let rhs = add(&add(&b(0), &scale(&b(1), -3)), &scale(&b(2), 3));
        assert_eq!(b(3), rhs);
        // tensoring preserves the Euler pairing
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(
                    ds.lattice
                        .chi(&t.apply(&e(3, i)), &t.apply(&e(3, j)))
                        .unwrap(),
                    ds.lattice.chi(&e(3, i), &e(3, j)).unwrap()
                );
            }
        }
    }

    #[test]
    fn twist_basics() {
        let ds = dataset_v_b012();
        let l = &ds.lattice;
        let e1 = e(3, 1);
        let twist = l.twist_action(&e1);
        let inv = l.inv_twist_action(&e1);
        assert!(twist.compose(&inv).is_identity());
        // the twist fixes the chi(e, -)-orthogonal classes
        let row: Vec<Rat> = (0..3).map(|j| l.chi(&e1, &e(3, j)).unwrap()).collect();
        let kern = linalg::kernel(&[row]);
        assert!(!kern.is_empty());
        for v in kern {
            assert_eq!(twist.apply(&v), v);
        }
    }

    #[test]
    fn v_eigenvector() {
        let ds = dataset_v_b012();
        let w = omega();
        let basis = gepner_eigenspace(&ds.fb_inverse, &w);
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        let inv = v[0].inv().unwrap();
        let normalized: Vec<Cyclotomic> = v.iter().map(|c| c.mul(&inv)).collect();
        let expected = vec![
            Cyclotomic::one(3),
            w.sub(&Cyclotomic::from_int(2)),
            w.neg(),
        ];
        assert_eq!(normalized, expected);
    }

    #[test]
    fn v_central_charge() {
        let ds = dataset_v_b012();
        let w = omega();
        let u = vec![
            Cyclotomic::one(3),
            w.sub(&Cyclotomic::from_int(2)),
            w.neg(),
        ];
        let x = lift_rational(&e(3, 0));
        let z = central_charge(&ds.lattice, &u, &x).unwrap();
        // chi(u, B0) = 2 + 3(omega - 2) - 6 omega = -4 - 3 omega
        let expected = Cyclotomic::from_int(-4).sub(&w.scale(&rat_int(3)));
        assert_eq!(z, expected);
        // linearity in x
        let x2 = lift_rational(&e(3, 2));
        let z2 = central_charge(&ds.lattice, &u, &x2).unwrap();
        let sum: Vec<Cyclotomic> = x.iter().zip(&x2).map(|(a, b)| a.add(b)).collect();
        assert_eq!(central_charge(&ds.lattice, &u, &sum).unwrap(), z.add(&z2));
        // eigen-covariance: chi(u, F x) = omega chi(u, x) because the
        // inverse action fixes u up to omega
        let forward = ds.fb_inverse.inverse();
        for i in 0..3 {
            let xi = lift_rational(&e(3, i));
            let lhs = central_charge(&ds.lattice, &u, &forward.apply_c(&xi)).unwrap();
            let rhs = w.mul(&central_charge(&ds.lattice, &u, &xi).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn surface_serre_identities() {
        let ds = dataset_cubic_surface();
        let n = 8;
        // S(O(h)) = 4 O(h) - 3 O(2h) + sum O_Ci
        let mut expected = vec![rat_int(4), rat_int(-3)];
        expected.extend(std::iter::repeat(rat_int(1)).take(6));
        assert_eq!(ds.serre.apply(&e(n, 0)), expected);
        // S(O(2h)) = 9 O(h) - 5 O(2h) + sum O_Ci
        let mut expected = vec![rat_int(9), rat_int(-5)];
        expected.extend(std::iter::repeat(rat_int(1)).take(6));
        assert_eq!(ds.serre.apply(&e(n, 1)), expected);
        // S(O_Ci) = 2 O(h) - O(2h) + O_Ci
        for i in 0..6 {
            let mut expected = vec![rat_int(2), rat_int(-1)];
            for j in 0..6 {
                expected.push(if j == i { rat_int(1) } else { rat_int(0) });
            }
            assert_eq!(ds.serre.apply(&e(n, 2 + i)), expected);
        }
        // every basis class is right-orthogonal to the structure sheaf
        let unit = ds.ring.unit_class();
        for ch in &ds.basis_ch {
            assert!(ds.ring.chi_pair(ch, &unit).unwrap().is_zero());
        }
        // and the Serre action cubes to the identity on the summand
        assert!(ds.serre.pow(3).is_identity());
    }

    #[test]
    fn surface_eigenvector() {
        let ds = dataset_cubic_surface();
        let w = omega();
        let basis = gepner_eigenspace(&ds.serre, &w);
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        let scale = w.scale(&rat_int(3)).div(&v[0]).unwrap();
        let normalized: Vec<Cyclotomic> = v.iter().map(|c| c.mul(&scale)).collect();
        let mut expected = vec![
            w.scale(&rat_int(3)),
            w.add(&Cyclotomic::one(3)).scale(&rat_int(-3)),
        ];
        for _ in 0..6 {
            expected.push(w.add(&Cyclotomic::from_int(2)));
        }
        assert_eq!(normalized, expected);
    }

    #[test]
    fn surface_charge_linear_form() {
        // chi(u0, E) = 3 ch0(E) + (omega - 1) ch1(E).H over the basis
        let ds = dataset_cubic_surface();
        let w = omega();
        let mut u0 = vec![
            w.scale(&rat_int(3)),
            w.add(&Cyclotomic::one(3)).scale(&rat_int(-3)),
        ];
        for _ in 0..6 {
            u0.push(w.add(&Cyclotomic::from_int(2)));
        }
        let hyperplane = interring::cubic_surface_hyperplane(&ds.ring);
        for (i, ch) in ds.basis_ch.iter().enumerate() {
            let x = lift_rational(&e(8, i));
            let lhs = ds.lattice.chi_c(&u0, &x).unwrap();
            let ch0 = ch.parts[0][0].clone();
            let ch1_h = ds.ring.integrate(&ds.ring.mul(ch, &hyperplane));
            let rhs = Cyclotomic::from_rat(ch0.clone())
                .scale(&rat_int(3))
                .add(&w.sub(&Cyclotomic::one(3)).scale(&ch1_h));
            assert_eq!(lhs, rhs, "basis class {}", i);
            // the orthogonality constraint pins ch2 = ch1.H/2 - ch0
            let ch2 = ch.parts[2][0].clone();
            assert_eq!(ch2, &ch1_h / rat_int(2) - &ch0);
        }
    }

    #[test]
    fn threefold_dataset() {
        let ds = dataset_cubic_threefold();
        assert_eq!(
            ds.lattice.euler_matrix(),
            &[
                vec![rat_int(-1), rat_int(-1)],
                vec![rat_int(0), rat_int(-1)]
            ]
        );
        // the Serre operator sends the first basis class to the second
        assert_eq!(ds.serre.apply(&e(2, 0)), e(2, 1));
        // and its inverse satisfies S^{-1}(I_l) = I_l - S(I_l)
        assert_eq!(
            ds.serre_inverse.apply(&e(2, 0)),
            vec![rat_int(1), rat_int(-1)]
        );
        // phi and its inverse
        assert_eq!(ds.phi_apply(&e(2, 0)), (rat_int(0), rat_int(2)));
        assert_eq!(ds.phi_apply(&e(2, 1)), (rat_int(4), rat_int(-3)));
        let back = ds.phi_inverse(&rat_int(8), &rat_int(5));
        assert_eq!(ds.phi_apply(&back), (rat_int(8), rat_int(5)));
        // the reconstructed inverse has the 3r/8 + d/2 and r/4 shape
        assert_eq!(
            ds.phi_inverse(&rat_int(1), &rat_int(0)),
            vec![rat_frac(3, 8), rat_frac(1, 4)]
        );
        assert_eq!(
            ds.phi_inverse(&rat_int(0), &rat_int(1)),
            vec![rat_frac(1, 2), rat_int(0)]
        );
        // chi in (rank, degree) coordinates
        assert_eq!(
            ds.chi_rd(&rat_int(1), &rat_int(0), &rat_int(0), &rat_int(1)),
            rat_frac(-3, 16)
        );
        assert_eq!(
            ds.chi_rd(&rat_int(0), &rat_int(1), &rat_int(1), &rat_int(0)),
            rat_frac(-5, 16)
        );
        assert_eq!(
            ds.chi_rd(&rat_int(1), &rat_int(0), &rat_int(1), &rat_int(0)),
            rat_frac(-19, 64)
        );
        assert_eq!(
            ds.chi_rd(&rat_int(0), &rat_int(1), &rat_int(0), &rat_int(1)),
            rat_frac(-1, 4)
        );
    }

    #[test]
    fn threefold_eigenvector_and_charge() {
        let ds = dataset_cubic_threefold();
        let w = omega();
        let a = ds.serre_inverse.neg();
        let basis = gepner_eigenspace(&a, &w);
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        let scale = w.div(&v[0]).unwrap();
        let normalized: Vec<Cyclotomic> = v.iter().map(|c| c.mul(&scale)).collect();
        assert_eq!(normalized, vec![w.clone(), Cyclotomic::one(3)]);
        // chi(u0, phi^{-1}(r,d)) = (r + 4d)/16 - (sqrt(-3)/4)(d + 5r/4)
        // as an exact identity in the 12th cyclotomic field
        let u0 = vec![w.clone(), Cyclotomic::one(3)];
        let sqrt_m3 = w.scale(&rat_int(2)).add(&Cyclotomic::one(3)); // 2w + 1
        for (r, d) in [(1i64, 0i64), (0, 1), (3, -2)] {
            let x = ds.phi_inverse(&rat_int(r), &rat_int(d));
            let lhs = ds.lattice.chi_c(&u0, &lift_rational(&x)).unwrap();
            let re = rat_frac(r + 4 * d, 16);
            let im_coeff = rat_frac(4 * d + 5 * r, 16); // (d + 5r/4)/4
            let rhs = Cyclotomic::from_rat(re).sub(&sqrt_m3.scale(&im_coeff));
            assert_eq!(lhs.lift(12), rhs.lift(12), "(r,d)=({},{})", r, d);
        }
    }
}
