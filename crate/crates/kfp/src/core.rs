//! Parameters, the 4x4 matrix family, and the auxiliary quantities A and c
//! that every closed form is built from.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default relative validation tolerance.
pub const DEFAULT_TOL: f64 = 1e-12;

/// The physical parameter pair: electric strength `a` and magnetic strength `b`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Params {
    a: f64,
    b: f64,
}

impl Params {
    /// Requires `a > 0`; `b` may be any finite real including zero.
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::InvalidParams(format!(
                "parameters must be finite, got a = {a}, b = {b}"
            )));
        }
        if a <= 0.0 {
            return Err(Error::InvalidParams(format!("a must be positive, got {a}")));
        }
        Ok(Params { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// Same electric strength with the magnetic field reversed.
    pub fn flipped(&self) -> Params {
        Params {
            a: self.a,
            b: -self.b,
        }
    }
}

/// Real 4x4 matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Matrix4(pub [[f64; 4]; 4]);

impl Matrix4 {
    pub fn zeros() -> Self {
        Matrix4([[0.0; 4]; 4])
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..4 {
            m.0[i][i] = 1.0;
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0[i][j]
    }

    pub fn transpose(&self) -> Matrix4 {
        let mut t = Self::zeros();
        for i in 0..4 {
            for j in 0..4 {
                t.0[i][j] = self.0[j][i];
            }
        }
        t
    }

    pub fn trace(&self) -> f64 {
        (0..4).map(|i| self.0[i][i]).sum()
    }

    pub fn mul(&self, rhs: &Matrix4) -> Matrix4 {
        let mut out = Self::zeros();
        for i in 0..4 {
            for j in 0..4 {
                let mut s = 0.0;
                for k in 0..4 {
                    s += self.0[i][k] * rhs.0[k][j];
                }
                out.0[i][j] = s;
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix4) -> Matrix4 {
        let mut out = *self;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] += rhs.0[i][j];
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Matrix4) -> Matrix4 {
        let mut out = *self;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] -= rhs.0[i][j];
            }
        }
        out
    }

    pub fn scale(&self, s: f64) -> Matrix4 {
        let mut out = *self;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] *= s;
            }
        }
        out
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .fold(0.0_f64, |acc, &x| acc.max(x.abs()))
    }

    /// Maximum absolute row sum (operator infinity norm).
    pub fn inf_norm(&self) -> f64 {
        self.0
            .iter()
            .map(|row| row.iter().map(|x| x.abs()).sum())
            .fold(0.0_f64, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|x| x * x)
            .sum::<f64>()
            .sqrt()
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> f64 {
        fn det3(m: [[f64; 3]; 3]) -> f64 {
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        }
        let mut d = 0.0;
        for j in 0..4 {
            let mut minor = [[0.0; 3]; 3];
            for (mi, i) in (1..4).enumerate() {
                let mut mj = 0;
                for jj in 0..4 {
                    if jj == j {
                        continue;
                    }
                    minor[mi][mj] = self.0[i][jj];
                    mj += 1;
                }
            }
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            d += sign * self.0[0][j] * det3(minor);
        }
        d
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|x| x.is_finite())
    }
}

/// A = A1 + i A2 and its square root c = c1 + i c2 with c1 >= 0.
#[derive(Clone, Copy, Debug)]
pub struct AuxQuantities {
    pub a1: f64,
    pub a2: f64,
    pub abs_a: f64,
    pub c1: f64,
    pub c2: f64,
}

impl AuxQuantities {
    pub fn a_complex(&self) -> Complex64 {
        Complex64::new(self.a1, self.a2)
    }

    pub fn c_complex(&self) -> Complex64 {
        Complex64::new(self.c1, self.c2)
    }

    /// <A> = (1 + |A|^2)^(1/2), the weight used by the small-time remainder bounds.
    pub fn bracket(&self) -> f64 {
        1.0_f64.hypot(self.abs_a)
    }
}

/// The matrix with rows (1, b, sqrt(a), 0), (-b, 1, 0, sqrt(a)),
/// (-sqrt(a), 0, 0, 0), (0, -sqrt(a), 0, 0).
pub fn build_matrix(p: &Params) -> Matrix4 {
    let (a, b) = (p.a(), p.b());
    let sa = a.sqrt();
    Matrix4([
        [1.0, b, sa, 0.0],
        [-b, 1.0, 0.0, sa],
        [-sa, 0.0, 0.0, 0.0],
        [0.0, -sa, 0.0, 0.0],
    ])
}

/// A1 = 1 - b^2 - 4a, A2 = -2b, and the root branch c1 >= 0, with
/// sign(c2) = -sign(b) and c2 >= 0 at b = 0.
///
/// The smaller of c1^2, c2^2 is recovered as A2^2 / (2(|A| + |A1|)) so that
/// no cancellation occurs when |A| is close to |A1|.
pub fn compute_aux(p: &Params) -> AuxQuantities {
    let (a, b) = (p.a(), p.b());
    let a1 = 1.0 - b * b - 4.0 * a;
    let a2 = -2.0 * b;
    let abs_a = a1.hypot(a2);

    let big = 0.5 * (abs_a + a1.abs());
    let small = if big > 0.0 {
        (a2 * a2) / (4.0 * big)
    } else {
        0.0
    };
    let (c1_sq, c2_sq) = if a1 >= 0.0 { (big, small) } else { (small, big) };
    let c1 = c1_sq.sqrt();
    let c2 = if b > 0.0 {
        -c2_sq.sqrt()
    } else {
        c2_sq.sqrt()
    };

    AuxQuantities {
        a1,
        a2,
        abs_a,
        c1,
        c2,
    }
}

/// z^4 - 2z^3 + (2a + b^2 + 1) z^2 - 2a z + a^2.
pub fn characteristic_poly(p: &Params, z: Complex64) -> Complex64 {
    let (a, b) = (p.a(), p.b());
    let q2 = 2.0 * a + b * b + 1.0;
    // Horner form.
    (((z - 2.0) * z + q2) * z - 2.0 * a) * z + a * a
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn rejects_nonpositive_a() {
        assert!(Params::new(0.0, 1.0).is_err());
        assert!(Params::new(-2.0, 0.0).is_err());
        assert!(Params::new(f64::NAN, 0.0).is_err());
        assert!(Params::new(1.0, f64::INFINITY).is_err());
        assert!(Params::new(1.0, -3.0).is_ok());
    }

    #[test]
    fn matrix_direct_substitution() {
        let m = build_matrix(&Params::new(1.0, 0.0).unwrap());
        let expect = Matrix4([
            [1.0, 0.0, 1.0, 0.0],
            [0.0, 1.0, 0.0, 1.0],
            [-1.0, 0.0, 0.0, 0.0],
            [0.0, -1.0, 0.0, 0.0],
        ]);
        assert_eq!(m, expect);
    }

    #[test]
    fn matrix_entries_a4_b3() {
        let m = build_matrix(&Params::new(4.0, 3.0).unwrap());
        assert_eq!(m.get(0, 2), 2.0);
        assert_eq!(m.get(1, 0), -3.0);
        assert_eq!(m.trace(), 2.0);
    }

    #[test]
    fn determinant_is_a_squared() {
        let m = build_matrix(&Params::new(14.0, 5.0).unwrap());
        assert!((m.det() - 196.0).abs() < 1e-9 * 196.0);
    }

    #[test]
    fn aux_degenerate_point() {
        let aux = compute_aux(&Params::new(0.25, 0.0).unwrap());
        assert_eq!(aux.a1, 0.0);
        assert_eq!(aux.a2, 0.0);
        assert_eq!(aux.abs_a, 0.0);
        assert_eq!(aux.c1, 0.0);
        assert_eq!(aux.c2, 0.0);
    }

    #[test]
    fn aux_pure_imaginary_root() {
        let aux = compute_aux(&Params::new(6.0, 0.0).unwrap());
        assert_eq!(aux.a1, -23.0);
        assert_eq!(aux.a2, 0.0);
        assert_eq!(aux.c1, 0.0);
        assert!((aux.c2 - 23.0_f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn aux_square_recovers_a() {
        let aux = compute_aux(&Params::new(1.0, 2.0).unwrap());
        let sq = aux.c_complex() * aux.c_complex();
        assert!((sq - c(-7.0, -4.0)).norm() < 1e-12);
    }

    #[test]
    fn charpoly_values() {
        let p = Params::new(1.0, 0.0).unwrap();
        let v = characteristic_poly(&p, c(0.5, 0.0));
        assert!((v - c(9.0 / 16.0, 0.0)).norm() < 1e-15);
        let q = Params::new(3.0, 7.0).unwrap();
        assert!((characteristic_poly(&q, c(0.0, 0.0)) - c(9.0, 0.0)).norm() < 1e-15);
    }

    proptest! {
        // log-spaced grids: a in [1e-3, 1e3], b in [0, 1e3]
        #[test]
        fn aux_branch_invariants(la in -3.0f64..3.0, lb in -3.0f64..3.0, flip in proptest::bool::ANY) {
            let a = 10f64.powf(la);
            let b = if flip { -10f64.powf(lb) } else { 10f64.powf(lb) };
            let p = Params::new(a, b).unwrap();
            let aux = compute_aux(&p);
            prop_assert!(aux.c1 >= 0.0);
            let sq = aux.c_complex() * aux.c_complex();
            let res = (sq - aux.a_complex()).norm();
            prop_assert!(res <= 1e-12 * (1.0 + aux.abs_a));
            prop_assert!((aux.c1 * aux.c1 + aux.c2 * aux.c2 - aux.abs_a).abs() <= 1e-12 * (1.0 + aux.abs_a));
            // sign symmetry in b
            let flipped = compute_aux(&p.flipped());
            prop_assert_eq!(aux.c1, flipped.c1);
            prop_assert_eq!(aux.c2, -flipped.c2);
        }

        #[test]
        fn trace_and_constant_term(la in -2.0f64..2.0, b in -100.0f64..100.0) {
            let a = 10f64.powf(la);
            let p = Params::new(a, b).unwrap();
            let m = build_matrix(&p);
            prop_assert!((m.trace() - 2.0).abs() < 1e-12);
            let const_term = characteristic_poly(&p, c(0.0, 0.0)).re;
            prop_assert!((const_term - a * a).abs() <= 1e-12 * a * a);
            prop_assert!((m.det() - a * a).abs() <= 1e-9 * a * a);
        }
    }
}
