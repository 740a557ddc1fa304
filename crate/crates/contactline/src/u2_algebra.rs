//! Algebra of the U(2) parameter space of contact interactions.
//!
//! A point interaction at the origin is specified by a 2x2 unitary matrix
//! `U` through the connection condition
//!
//! ```text
//! (U - I) Phi + i L0 (U + I) Phi' = 0,
//! Phi  = (phi(0+),  phi(0-)),
//! Phi' = (phi'(0+), -phi'(0-)),
//! ```
//!
//! where `L0 > 0` is a fixed reference length (default 1). This module
//! provides the admissible-boundary-data subspace, conversions to and from
//! the transfer-matrix chart (defined only on a subfamily), the eigenphase /
//! sphere-angle chart `(theta_plus, theta_minus, mu, nu)`, parity-type
//! conjugations, and the strong/weak duality map that flips a matrix to the
//! antipode of its isospectral sphere.

use crate::mat2::{c, dot4, norm4, Mat2, Vec2};
use num_complex::Complex64;
use std::f64::consts::PI;
use thiserror::Error;

/// Reference length appearing in the connection condition; all strengths in
/// this crate are quoted in units where it equals 1.
pub const DEFAULT_L0: f64 = 1.0;

/// Construction tolerance for unitarity, unimodularity and axis norms.
pub const CONSTRUCTION_TOL: f64 = 1e-12;

/// Guaranteed accuracy of chart round trips (documented for callers; the
/// test suite enforces it).
pub const RECONSTRUCTION_TOL: f64 = 1e-10;

/// Below this determinant the boundary subspace is not a graph over the
/// right-side data and no transfer form exists.
const GRAPH_TOL: f64 = 1e-10;

/// Rank tolerance for the admissible-subspace basis.
const RANK_TOL: f64 = 1e-10;

/// Spin length under which the eigenphases are treated as coincident.
const DEGENERACY_TOL: f64 = 1e-12;

const TWO_PI: f64 = 2.0 * PI;

/// Errors produced by the parameter-space algebra.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum U2Error {
    /// The supplied matrix is not unitary at the construction tolerance.
    #[error("NotUnitary: U^H U deviates from the identity by {defect:.3e}")]
    NotUnitary { defect: f64 },
    /// The transfer parameters violate st - uv = 1.
    #[error("NotUnimodular: st - uv deviates from 1 by {defect:.3e}")]
    NotUnimodular { defect: f64 },
    /// The direction cosines of an axis are not unit length.
    #[error("NotNormalized: axis norm deviates from 1 by {defect:.3e}")]
    NotNormalized { defect: f64 },
    /// The boundary subspace is not a graph over the right-side data, so the
    /// interaction lies outside the transfer-matrix subfamily.
    #[error("NoTransferForm: boundary subspace is not a graph over the right-side data")]
    NoTransferForm,
    /// Coincident eigenphases: the isospectral sphere degenerates to a point
    /// and sphere-dependent operations are undefined.
    #[error("DegenerateSphere: coincident eigenphases leave the sphere angles undefined")]
    DegenerateSphere,
    /// A subspace computation lost rank; indicates a defective input matrix.
    #[error("NumericalRank: boundary computation lost rank at tolerance {tol:.1e}")]
    NumericalRank { tol: f64 },
}

/// Wraps an angle into `[0, 2*pi)`.
pub(crate) fn wrap_2pi(x: f64) -> f64 {
    let mut y = x.rem_euclid(TWO_PI);
    if y >= TWO_PI {
        y -= TWO_PI;
    }
    y
}

// ---------------------------------------------------------------------------
// UnitaryU2
// ---------------------------------------------------------------------------

/// A 2x2 unitary matrix labelling one contact interaction.
///
/// Unitarity is validated on construction, so every value of this type is a
/// genuine group element to within [`CONSTRUCTION_TOL`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitaryU2 {
    m: Mat2,
}

impl UnitaryU2 {
    /// Validates unitarity and wraps the matrix.
    pub fn new(m: Mat2) -> Result<Self, U2Error> {
        let defect = m.unitarity_defect();
        // NaN entries fail this comparison and fall through to the error.
        if defect <= CONSTRUCTION_TOL {
            Ok(UnitaryU2 { m })
        } else {
            Err(U2Error::NotUnitary { defect })
        }
    }

    /// Wraps a matrix that is unitary by construction (internal use).
    pub(crate) fn trusted(m: Mat2) -> Self {
        UnitaryU2 { m }
    }

    /// The identity interaction (Dirichlet-free wall pair; see `to_transfer`
    /// for which side of the family it sits on).
    pub fn identity() -> Self {
        UnitaryU2 { m: Mat2::identity() }
    }

    /// The underlying matrix.
    pub fn matrix(&self) -> Mat2 {
        self.m
    }

    /// Serializes as 8 reals, row-major with re/im interleaved.
    pub fn to_components(&self) -> [f64; 8] {
        let e = self.m.e;
        [
            e[0].re, e[0].im, e[1].re, e[1].im, e[2].re, e[2].im, e[3].re, e[3].im,
        ]
    }

    /// Rebuilds a matrix from the serialized form of [`to_components`].
    ///
    /// [`to_components`]: UnitaryU2::to_components
    pub fn from_components(x: [f64; 8]) -> Result<Self, U2Error> {
        UnitaryU2::new(Mat2::new(
            c(x[0], x[1]),
            c(x[2], x[3]),
            c(x[4], x[5]),
            c(x[6], x[7]),
        ))
    }

    /// Canonical parameters `(xi, alpha, beta)` of the overall-phase /
    /// special-unitary split `U = e^{i xi} S`, `S = [[alpha, beta],
    /// [-conj(beta), conj(alpha)]]`, with `xi` folded into `[0, pi)`.
    pub fn canonical_parameters(&self) -> (f64, Complex64, Complex64) {
        let (xi, s) = self.phase_split();
        (xi, s.e[0], s.e[1])
    }

    /// Splits off the determinant phase: returns `(xi, S)` with
    /// `U = e^{i xi} S`, `det S = 1`, `xi` in `[0, pi)`.
    fn phase_split(&self) -> (f64, Mat2) {
        let mut xi = self.m.det().arg() / 2.0;
        if xi < 0.0 {
            xi += PI;
        }
        if xi >= PI {
            xi -= PI;
        }
        let s = self.m.scale(c(0.0, -xi).exp());
        (xi, s)
    }
}

// ---------------------------------------------------------------------------
// TransferMatrix
// ---------------------------------------------------------------------------

/// Transfer-matrix chart `e^{i lambda} [[s, u], [v, t]]`, `st - uv = 1`,
/// relating boundary data across the interaction:
/// `(phi(0+), phi'(0+))^T = Lambda (phi(0-), phi'(0-))^T`.
///
/// Only a subfamily of interactions admits this form; see
/// [`to_transfer`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransferMatrix {
    lambda: f64,
    s: f64,
    t: f64,
    u: f64,
    v: f64,
}

impl TransferMatrix {
    /// Builds a transfer matrix, folding `lambda` into `[0, pi)` (a phase
    /// shift by pi is absorbed as an overall sign of the real part) and
    /// validating `st - uv = 1`.
    pub fn new(lambda: f64, s: f64, t: f64, u: f64, v: f64) -> Result<Self, U2Error> {
        let mut lam = wrap_2pi(lambda);
        let (mut s, mut t, mut u, mut v) = (s, t, u, v);
        if lam >= PI {
            lam -= PI;
            s = -s;
            t = -t;
            u = -u;
            v = -v;
        }
        let defect = (s * t - u * v - 1.0).abs();
        if defect <= CONSTRUCTION_TOL {
            Ok(TransferMatrix { lambda: lam, s, t, u, v })
        } else {
            Err(U2Error::NotUnimodular { defect })
        }
    }

    /// Overall phase in `[0, pi)`.
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Upper-left real entry.
    pub fn s(&self) -> f64 {
        self.s
    }

    /// Lower-right real entry.
    pub fn t(&self) -> f64 {
        self.t
    }

    /// Upper-right real entry (wavefunction-jump strength).
    pub fn u(&self) -> f64 {
        self.u
    }

    /// Lower-left real entry (derivative-jump strength).
    pub fn v(&self) -> f64 {
        self.v
    }

    /// The full complex matrix `e^{i lambda} [[s, u], [v, t]]`.
    pub fn matrix(&self) -> Mat2 {
        let phase = c(0.0, self.lambda).exp();
        Mat2::new(
            phase * self.s,
            phase * self.u,
            phase * self.v,
            phase * self.t,
        )
    }

    /// Serializes as `(lambda, s, t, u, v)`.
    pub fn to_components(&self) -> [f64; 5] {
        [self.lambda, self.s, self.t, self.u, self.v]
    }

    /// Rebuilds from the serialized form of [`to_components`].
    ///
    /// [`to_components`]: TransferMatrix::to_components
    pub fn from_components(x: [f64; 5]) -> Result<Self, U2Error> {
        TransferMatrix::new(x[0], x[1], x[2], x[3], x[4])
    }

    /// Deviation of `Lambda^H K Lambda` from the current form
    /// `K = [[0, 1], [-1, 0]]`; zero for every valid transfer matrix
    /// (probability-current conservation across the defect).
    pub fn current_defect(&self) -> f64 {
        let k = Mat2::new(c(0.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 0.0));
        let m = self.matrix();
        m.adjoint().mul(&k).mul(&m).max_abs_diff(&k)
    }
}

/// Transfer matrix `[[1, 0], [v, 1]]` of a derivative-jump (delta) defect of
/// strength `v`.
pub fn delta_transfer(v: f64) -> TransferMatrix {
    TransferMatrix { lambda: 0.0, s: 1.0, t: 1.0, u: 0.0, v }
}

/// Transfer matrix `[[1, u], [0, 1]]` of a value-jump (epsilon) defect of
/// strength `u`.
pub fn epsilon_transfer(u: f64) -> TransferMatrix {
    TransferMatrix { lambda: 0.0, s: 1.0, t: 1.0, u, v: 0.0 }
}

// ---------------------------------------------------------------------------
// BoundaryData
// ---------------------------------------------------------------------------

/// Boundary data of a wavefunction at the defect, in the sign convention of
/// the connection condition: `phi = (phi(0+), phi(0-))`,
/// `phi_prime = (phi'(0+), -phi'(0-))`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundaryData {
    /// Boundary values `(phi(0+), phi(0-))`.
    pub phi: Vec2,
    /// Signed boundary derivatives `(phi'(0+), -phi'(0-))`.
    pub phi_prime: Vec2,
}

impl BoundaryData {
    /// Builds from physically ordered components
    /// `(phi(0+), phi(0-), phi'(0+), phi'(0-))`.
    pub fn from_physical(v: [Complex64; 4]) -> Self {
        BoundaryData {
            phi: [v[0], v[1]],
            phi_prime: [v[2], -v[3]],
        }
    }

    /// Physically ordered components
    /// `(phi(0+), phi(0-), phi'(0+), phi'(0-))`.
    pub fn to_physical(&self) -> [Complex64; 4] {
        [self.phi[0], self.phi[1], self.phi_prime[0], -self.phi_prime[1]]
    }

    /// Magnitude of the current-continuity bilinear
    /// `Phi'^H Phi - Phi^H Phi'`; zero exactly when the probability current
    /// is continuous across the defect.
    pub fn current_defect(&self) -> f64 {
        let ip = self.phi_prime[0].conj() * self.phi[0] + self.phi_prime[1].conj() * self.phi[1];
        2.0 * ip.im.abs()
    }
}

// ---------------------------------------------------------------------------
// ParityAxis
// ---------------------------------------------------------------------------

/// A unit vector of direction cosines selecting the Hermitian involution
/// `sigma = c1 sigma_1 + c2 sigma_2 + c3 sigma_3`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParityAxis {
    c: [f64; 3],
}

impl ParityAxis {
    /// Validates `c1^2 + c2^2 + c3^2 = 1` and wraps the axis.
    pub fn new(c1: f64, c2: f64, c3: f64) -> Result<Self, U2Error> {
        let defect = (c1 * c1 + c2 * c2 + c3 * c3 - 1.0).abs();
        if defect <= CONSTRUCTION_TOL {
            Ok(ParityAxis { c: [c1, c2, c3] })
        } else {
            Err(U2Error::NotNormalized { defect })
        }
    }

    /// The direction cosines.
    pub fn components(&self) -> [f64; 3] {
        self.c
    }

    /// The Hermitian unitary `sum_j c_j sigma_j`.
    pub fn matrix(&self) -> Mat2 {
        let [c1, c2, c3] = self.c;
        Mat2::new(
            c(c3, 0.0),
            c(c1, -c2),
            c(c1, c2),
            c(-c3, 0.0),
        )
    }
}

// ---------------------------------------------------------------------------
// SpectralCoordinates
// ---------------------------------------------------------------------------

/// Eigenphase / sphere-angle chart of a unitary: eigenvalues
/// `e^{i theta_plus}, e^{i theta_minus}` plus the polar angles `(mu, nu)` of
/// the diagonalizing frame `V = exp(i mu sigma_2 / 2) exp(i nu sigma_3 / 2)`.
///
/// Matrices sharing `(theta_plus, theta_minus)` form a sphere swept by
/// `(mu, nu)`; when the eigenphases coincide the sphere collapses and
/// `(mu, nu)` are reported as `(0, 0)` with the `degenerate` flag set.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralCoordinates {
    /// Eigenphase attached to the frame's first column, in `[0, 2*pi)`.
    pub theta_plus: f64,
    /// Eigenphase attached to the frame's second column, in `[0, 2*pi)`.
    pub theta_minus: f64,
    /// Polar angle of the frame axis, in `[0, pi]`.
    pub mu: f64,
    /// Azimuthal angle of the frame axis, in `[0, 2*pi)`.
    pub nu: f64,
    /// Set when the eigenphases coincide and `(mu, nu)` carry no information.
    pub degenerate: bool,
}

impl SpectralCoordinates {
    /// The same matrix described with the two eigenphases interchanged,
    /// which flips the frame axis to its antipode:
    /// `(t+, t-, mu, nu) -> (t-, t+, pi - mu, nu + pi)`.
    pub fn swapped(&self) -> SpectralCoordinates {
        SpectralCoordinates {
            theta_plus: self.theta_minus,
            theta_minus: self.theta_plus,
            mu: PI - self.mu,
            nu: wrap_2pi(self.nu + PI),
            degenerate: self.degenerate,
        }
    }

    /// Canonical representative with `theta_plus <= theta_minus` (the chart
    /// double-covers each matrix; this picks one sheet).
    pub fn canonicalized(&self) -> SpectralCoordinates {
        if self.degenerate || self.theta_plus <= self.theta_minus {
            *self
        } else {
            self.swapped()
        }
    }

    /// Direction cosines of the frame axis
    /// `(sin mu cos nu, sin mu sin nu, cos mu)`.
    pub fn axis_cosines(&self) -> [f64; 3] {
        [
            self.mu.sin() * self.nu.cos(),
            self.mu.sin() * self.nu.sin(),
            self.mu.cos(),
        ]
    }

    /// Rebuilds the unitary `V^{-1} D V` with
    /// `D = diag(e^{i theta_plus}, e^{i theta_minus})`.
    pub fn reconstruct(&self) -> UnitaryU2 {
        let d = Mat2::diag(c(0.0, self.theta_plus).exp(), c(0.0, self.theta_minus).exp());
        let v = self.frame();
        UnitaryU2::trusted(v.adjoint().mul(&d).mul(&v))
    }

    /// The diagonalizing frame `V = exp(i mu sigma_2/2) exp(i nu sigma_3/2)`.
    pub fn frame(&self) -> Mat2 {
        let (half_mu_sin, half_mu_cos) = (self.mu / 2.0).sin_cos();
        let vy = Mat2::new(
            c(half_mu_cos, 0.0),
            c(half_mu_sin, 0.0),
            c(-half_mu_sin, 0.0),
            c(half_mu_cos, 0.0),
        );
        let vz = Mat2::diag(c(0.0, self.nu / 2.0).exp(), c(0.0, -self.nu / 2.0).exp());
        vy.mul(&vz)
    }
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Residual `(U - I) Phi + i L0 (U + I) Phi'` of the connection condition;
/// the zero vector exactly when `bd` is admissible for `U`.
pub fn connection_residual(u: &UnitaryU2, bd: &BoundaryData, l0: f64) -> Vec2 {
    let m = u.matrix();
    let um1 = m.sub(&Mat2::identity());
    let up1 = m.add(&Mat2::identity());
    let a = um1.apply(bd.phi);
    let b = up1.apply(bd.phi_prime);
    let il0 = c(0.0, l0);
    [a[0] + il0 * b[0], a[1] + il0 * b[1]]
}

/// Cayley-type basis of the admissible boundary subspace, before
/// orthonormalization: columns `Phi = (U + I) chi`,
/// `Phi' = (i / L0)(U - I) chi` for `chi = e1, e2`.
fn cayley_columns(u: &UnitaryU2, l0: f64) -> [[Complex64; 4]; 2] {
    let m = u.matrix();
    let up1 = m.add(&Mat2::identity());
    let um1 = m.sub(&Mat2::identity()).scale(c(0.0, 1.0 / l0));
    let mut cols = [[c(0.0, 0.0); 4]; 2];
    for (j, col) in cols.iter_mut().enumerate() {
        let chi = if j == 0 {
            [c(1.0, 0.0), c(0.0, 0.0)]
        } else {
            [c(0.0, 0.0), c(1.0, 0.0)]
        };
        let phi = up1.apply(chi);
        let phi_prime = um1.apply(chi);
        *col = [phi[0], phi[1], phi_prime[0], phi_prime[1]];
    }
    cols
}

/// Orthonormal basis of the 2-dimensional space of admissible boundary data,
/// returned in physical ordering `(phi(0+), phi(0-), phi'(0+), phi'(0-))`.
///
/// The subspace is built from the unitary itself (not from a generic
/// null-space search), so its dimension is exactly 2 for every group
/// element; the rank check is purely defensive.
pub fn boundary_subspace(u: &UnitaryU2, l0: f64) -> Result<[[Complex64; 4]; 2], U2Error> {
    let [b1, b2] = cayley_columns(u, l0);
    // Gram-Schmidt in the (Phi, Phi') convention; inner products are
    // unchanged by the sign flip to physical ordering applied at the end.
    let n1 = norm4(&b1);
    if n1 < RANK_TOL {
        return Err(U2Error::NumericalRank { tol: RANK_TOL });
    }
    let mut q1 = b1;
    for z in q1.iter_mut() {
        *z /= n1;
    }
    let overlap = dot4(&q1, &b2);
    let mut q2 = b2;
    for (z, base) in q2.iter_mut().zip(q1.iter()) {
        *z -= overlap * base;
    }
    let n2 = norm4(&q2);
    if n2 < RANK_TOL * norm4(&b2).max(1.0) {
        return Err(U2Error::NumericalRank { tol: RANK_TOL });
    }
    for z in q2.iter_mut() {
        *z /= n2;
    }
    // Flip the stored -phi'(0-) back to the physical phi'(0-).
    q1[3] = -q1[3];
    q2[3] = -q2[3];
    Ok([q1, q2])
}

/// Extracts the transfer form of `u`, when one exists.
///
/// The admissible subspace is projected onto right-side data
/// `(phi(0-), phi'(0-))`; when that projection is invertible the subspace is
/// the graph of `Lambda = R L^{-1}`, which is then split into a phase and a
/// real unimodular part. `NoTransferForm` signals a non-invertible
/// projection (decoupled half-lines).
pub fn to_transfer(u: &UnitaryU2, l0: f64) -> Result<TransferMatrix, U2Error> {
    let basis = boundary_subspace(u, l0)?;
    let l = Mat2::new(basis[0][1], basis[1][1], basis[0][3], basis[1][3]);
    let r = Mat2::new(basis[0][0], basis[1][0], basis[0][2], basis[1][2]);
    if l.det().norm() < GRAPH_TOL {
        return Err(U2Error::NoTransferForm);
    }
    let full = r.mul(&l.inverse().ok_or(U2Error::NoTransferForm)?);

    // Current conservation forces Lambda = e^{i alpha} M with M real and
    // det M = +1; read the phase off the largest entry.
    let (idx, _) = full
        .e
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
        .expect("nonempty");
    let alpha = full.e[idx].arg();
    let m = full.scale(c(0.0, -alpha).exp());
    let imag_resid = m.e.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    if imag_resid > 1e-7 * m.max_abs() {
        return Err(U2Error::NumericalRank { tol: RANK_TOL });
    }
    let mut real = [m.e[0].re, m.e[1].re, m.e[2].re, m.e[3].re];
    let det = real[0] * real[3] - real[1] * real[2];
    if det <= 0.5 {
        return Err(U2Error::NumericalRank { tol: RANK_TOL });
    }
    // Absorb the residual numerical scale so st - uv = 1 holds exactly.
    let scale = det.sqrt().recip();
    for x in real.iter_mut() {
        *x *= scale;
    }
    TransferMatrix::new(alpha, real[0], real[3], real[1], real[2])
}

/// The unitary whose admissible subspace is the graph of `lam`.
///
/// Writing `w = Phi + i L0 Phi'` and `z = Phi - i L0 Phi'`, the connection
/// condition reads `U w = z`; the graph of the transfer matrix supplies two
/// independent `(w, z)` pairs and `U = Z W^{-1}`. Always succeeds for valid
/// transfer parameters.
pub fn from_transfer(lam: &TransferMatrix, l0: f64) -> Result<UnitaryU2, U2Error> {
    let t = lam.matrix();
    let il0 = c(0.0, l0);
    // Columns generated by right-side data (1, 0) and (0, 1).
    let w = Mat2::new(
        t.e[0] + il0 * t.e[2],
        t.e[1] + il0 * t.e[3],
        c(1.0, 0.0),
        -il0,
    );
    let z = Mat2::new(
        t.e[0] - il0 * t.e[2],
        t.e[1] - il0 * t.e[3],
        c(1.0, 0.0),
        il0,
    );
    let w_inv = w.inverse().ok_or(U2Error::NumericalRank { tol: RANK_TOL })?;
    let u = z.mul(&w_inv);
    if u.unitarity_defect() > RECONSTRUCTION_TOL {
        return Err(U2Error::NumericalRank { tol: RANK_TOL });
    }
    Ok(UnitaryU2::trusted(u))
}

/// Eigenphases and sphere angles of `u` (total function; coincident
/// eigenphases set the `degenerate` flag instead of failing).
///
/// The phase split `U = e^{i xi} S` with `det S = 1` gives
/// `S = a0 I + i (a . sigma)` with real `(a0, a)`; the eigenphases are
/// `xi +/- rho` with `rho = atan2(|a|, a0)` and the frame axis is `a / |a|`.
pub fn eigen_decompose(u: &UnitaryU2) -> SpectralCoordinates {
    let (xi, s) = u.phase_split();
    let a0 = (s.e[0].re + s.e[3].re) / 2.0;
    let a1 = (s.e[1].im + s.e[2].im) / 2.0;
    let a2 = (s.e[1].re - s.e[2].re) / 2.0;
    let a3 = (s.e[0].im - s.e[3].im) / 2.0;
    let r = (a1 * a1 + a2 * a2 + a3 * a3).sqrt();
    if r < DEGENERACY_TOL {
        let rho = r.atan2(a0);
        let theta = wrap_2pi(xi + rho);
        return SpectralCoordinates {
            theta_plus: theta,
            theta_minus: theta,
            mu: 0.0,
            nu: 0.0,
            degenerate: true,
        };
    }
    let rho = r.atan2(a0);
    let (n1, n2, n3) = (a1 / r, a2 / r, a3 / r);
    let mu = n3.clamp(-1.0, 1.0).acos();
    let nu = if n1.abs() < DEGENERACY_TOL && n2.abs() < DEGENERACY_TOL {
        0.0
    } else {
        wrap_2pi(n2.atan2(n1))
    };
    SpectralCoordinates {
        theta_plus: wrap_2pi(xi + rho),
        theta_minus: wrap_2pi(xi - rho),
        mu,
        nu,
        degenerate: false,
    }
    .canonicalized()
}

/// Conjugates the interaction by the Hermitian involution of `axis`:
/// `U -> sigma U sigma`. Preserves the eigenphase pair exactly (isospectral
/// conjugation); moves the matrix on its sphere.
pub fn parity_conjugate(u: &UnitaryU2, axis: &ParityAxis) -> UnitaryU2 {
    let s = axis.matrix();
    UnitaryU2::trusted(s.mul(&u.matrix()).mul(&s))
}

/// The antipodal point `(mu, nu) -> (pi - mu, nu + pi)` on the isospectral
/// sphere of `u`; an involution sharing both eigenphases with `u`.
pub fn duality_partner(u: &UnitaryU2) -> Result<UnitaryU2, U2Error> {
    let sc = eigen_decompose(u);
    if sc.degenerate {
        return Err(U2Error::DegenerateSphere);
    }
    Ok(SpectralCoordinates {
        theta_plus: sc.theta_plus,
        theta_minus: sc.theta_minus,
        mu: PI - sc.mu,
        nu: wrap_2pi(sc.nu + PI),
        degenerate: false,
    }
    .reconstruct())
}

/// The Hermitian unitary `sigma_S` fixed by the diagonalizing frame of `u`
/// (`sigma_S = V^{-1} sigma_3 V`, equal to the frame axis dotted into the
/// Pauli vector). Satisfies `sigma_S U sigma_S = U` and `sigma_S^2 = I`.
pub fn invariant_spin_matrix(u: &UnitaryU2) -> Result<Mat2, U2Error> {
    let sc = eigen_decompose(u);
    if sc.degenerate {
        return Err(U2Error::DegenerateSphere);
    }
    let [c1, c2, c3] = sc.axis_cosines();
    Ok(Mat2::new(
        c(c3, 0.0),
        c(c1, -c2),
        c(c1, c2),
        c(-c3, 0.0),
    ))
}
