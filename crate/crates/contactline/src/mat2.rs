//! Minimal dense 2x2 complex matrix arithmetic.
//!
//! Everything in this crate lives in C^2, so a hand-rolled row-major
//! `[Complex64; 4]` type beats pulling in a general linear-algebra stack.
//! The API is deliberately small: products, adjoints, determinants and a
//! pivoted 2x2 solve are all the heavier modules need.

use num_complex::Complex64;

/// Shorthand for a complex 2-vector.
pub type Vec2 = [Complex64; 2];

/// Dense 2x2 complex matrix, row-major storage.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2 {
    /// Entries `[m00, m01, m10, m11]`.
    pub e: [Complex64; 4],
}

/// Complex number from real/imaginary parts (local shorthand).
#[inline]
pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

impl Mat2 {
    /// Builds a matrix from its four entries in reading order.
    pub const fn new(m00: Complex64, m01: Complex64, m10: Complex64, m11: Complex64) -> Self {
        Mat2 { e: [m00, m01, m10, m11] }
    }

    /// Zero matrix.
    pub fn zero() -> Self {
        Mat2::scalar(c(0.0, 0.0))
    }

    /// Identity matrix.
    pub fn identity() -> Self {
        Mat2::scalar(c(1.0, 0.0))
    }

    /// `z * I`.
    pub fn scalar(z: Complex64) -> Self {
        Mat2::diag(z, z)
    }

    /// Diagonal matrix `diag(a, b)`.
    pub fn diag(a: Complex64, b: Complex64) -> Self {
        Mat2::new(a, c(0.0, 0.0), c(0.0, 0.0), b)
    }

    /// First Pauli matrix (off-diagonal ones).
    pub fn pauli1() -> Self {
        Mat2::new(c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0))
    }

    /// Second Pauli matrix (off-diagonal +/-i).
    pub fn pauli2() -> Self {
        Mat2::new(c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0))
    }

    /// Third Pauli matrix `diag(1, -1)`.
    pub fn pauli3() -> Self {
        Mat2::new(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0))
    }

    /// Entry accessor by row/column.
    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.e[2 * row + col]
    }

    /// Matrix sum.
    pub fn add(&self, rhs: &Mat2) -> Mat2 {
        let mut e = self.e;
        for (a, b) in e.iter_mut().zip(rhs.e.iter()) {
            *a += b;
        }
        Mat2 { e }
    }

    /// Matrix difference.
    pub fn sub(&self, rhs: &Mat2) -> Mat2 {
        let mut e = self.e;
        for (a, b) in e.iter_mut().zip(rhs.e.iter()) {
            *a -= b;
        }
        Mat2 { e }
    }

    /// Scales every entry by `z`.
    pub fn scale(&self, z: Complex64) -> Mat2 {
        let mut e = self.e;
        for a in e.iter_mut() {
            *a *= z;
        }
        Mat2 { e }
    }

    /// Negation.
    pub fn neg(&self) -> Mat2 {
        self.scale(c(-1.0, 0.0))
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        let a = &self.e;
        let b = &rhs.e;
        Mat2::new(
            a[0] * b[0] + a[1] * b[2],
            a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3],
        )
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: Vec2) -> Vec2 {
        [
            self.e[0] * v[0] + self.e[1] * v[1],
            self.e[2] * v[0] + self.e[3] * v[1],
        ]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Mat2 {
        Mat2::new(
            self.e[0].conj(),
            self.e[2].conj(),
            self.e[1].conj(),
            self.e[3].conj(),
        )
    }

    /// Determinant.
    pub fn det(&self) -> Complex64 {
        self.e[0] * self.e[3] - self.e[1] * self.e[2]
    }

    /// Trace.
    pub fn trace(&self) -> Complex64 {
        self.e[0] + self.e[3]
    }

    /// Inverse, or `None` when the determinant underflows to zero.
    pub fn inverse(&self) -> Option<Mat2> {
        let d = self.det();
        if d.norm() == 0.0 {
            return None;
        }
        let inv = c(1.0, 0.0) / d;
        Some(Mat2::new(
            self.e[3] * inv,
            -self.e[1] * inv,
            -self.e[2] * inv,
            self.e[0] * inv,
        ))
    }

    /// Solves `self * x = rhs` by Cramer's rule; `None` on zero determinant.
    pub fn solve(&self, rhs: Vec2) -> Option<Vec2> {
        let d = self.det();
        if d.norm() == 0.0 {
            return None;
        }
        let dx = rhs[0] * self.e[3] - self.e[1] * rhs[1];
        let dy = self.e[0] * rhs[1] - rhs[0] * self.e[2];
        Some([dx / d, dy / d])
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.e.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise deviation from `rhs` (the matrix norm used for all
    /// closeness checks in this crate).
    pub fn max_abs_diff(&self, rhs: &Mat2) -> f64 {
        self.sub(rhs).max_abs()
    }

    /// Largest entrywise deviation of `self^H self` from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        self.adjoint().mul(self).max_abs_diff(&Mat2::identity())
    }
}

/// Hermitian inner product `<a, b>` (conjugate-linear in `a`).
pub fn dot2(a: &Vec2, b: &Vec2) -> Complex64 {
    a[0].conj() * b[0] + a[1].conj() * b[1]
}

/// Hermitian inner product on 4-vectors.
pub fn dot4(a: &[Complex64; 4], b: &[Complex64; 4]) -> Complex64 {
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}

/// Euclidean norm of a 4-vector.
pub fn norm4(a: &[Complex64; 4]) -> f64 {
    dot4(a, a).re.sqrt()
}
