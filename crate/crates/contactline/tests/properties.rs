//! Property-based invariants across random interactions.

use contactline::mat2::{c, Mat2};
use contactline::scattering::{
    scatter_exchange, scatter_single, ContactInteraction, Statistics,
};
use contactline::spectral::{solve_spectrum_angles, BoxConfig};
use contactline::u2_algebra::{
    duality_partner, eigen_decompose, from_transfer, invariant_spin_matrix, parity_conjugate,
    to_transfer, ParityAxis, TransferMatrix, UnitaryU2,
};
use proptest::prelude::*;
use std::f64::consts::{PI, TAU};

/// Arbitrary member of the full interaction family: a random global phase
/// times a quaternion-sampled special-unitary matrix.
fn arb_unitary() -> impl Strategy<Value = UnitaryU2> {
    (
        (-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64)
            .prop_filter("quaternion too short", |(a, b, x, y)| {
                a * a + b * b + x * x + y * y > 1e-2
            }),
        0.0..TAU,
    )
        .prop_map(|((a, b, x, y), phi)| {
            let n = (a * a + b * b + x * x + y * y).sqrt();
            let (a, b, x, y) = (a / n, b / n, x / n, y / n);
            let ph = c(0.0, phi).exp();
            let m = Mat2::new(
                ph * c(a, b),
                ph * c(x, y),
                ph * c(-x, y),
                ph * c(a, -b),
            );
            UnitaryU2::new(m).expect("normalized quaternion is unitary")
        })
}

/// Arbitrary canonical transfer-form label with unit determinant.
fn arb_transfer() -> impl Strategy<Value = TransferMatrix> {
    (
        // Stay a hair inside [0, pi): a phase within one ulp of the fold
        // seam may legitimately round-trip to the other representative.
        0.0..PI - 1e-9,
        -3.0..3.0f64,
        -3.0..3.0f64,
        prop_oneof![0.05..3.0f64, -3.0..-0.05f64],
    )
        .prop_map(|(lambda, s, t, u)| {
            let v = (s * t - 1.0) / u;
            TransferMatrix::new(lambda, s, t, u, v).expect("st - uv = 1 by construction")
        })
}

proptest! {
    /// Unitarity, probability conservation, and agreement of the two
    /// scattering charts on transfer-representable interactions.
    #[test]
    fn both_scattering_charts_agree_and_conserve_probability(
        lam in arb_transfer(),
        x in -1.3..1.3f64,
    ) {
        let k = 10f64.powf(x);
        let transfer_side = scatter_single(&ContactInteraction::Transfer(lam), k, 1.0).unwrap();
        let u = from_transfer(&lam, 1.0).unwrap();
        let unitary_side = scatter_single(&ContactInteraction::Unitary(u), k, 1.0).unwrap();
        prop_assert!((transfer_side.t + transfer_side.r - 1.0).abs() < 1e-10);
        prop_assert!((transfer_side.t - unitary_side.t).abs() < 1e-9);
        prop_assert!((transfer_side.r - unitary_side.r).abs() < 1e-9);
    }

    /// The transfer chart round-trips through the unitary label.
    #[test]
    fn transfer_round_trip_is_the_identity(lam in arb_transfer()) {
        let u = from_transfer(&lam, 1.0).unwrap();
        let back = to_transfer(&u, 1.0).unwrap();
        let a = lam.to_components();
        let b = back.to_components();
        for i in 0..5 {
            prop_assert!((a[i] - b[i]).abs() < 1e-10, "component {i}: {} vs {}", a[i], b[i]);
        }
    }

    /// Eigen-decomposition followed by reconstruction is the identity.
    #[test]
    fn decomposition_round_trip_is_the_identity(u in arb_unitary()) {
        let sc = eigen_decompose(&u);
        let back = sc.reconstruct();
        prop_assert!(u.matrix().max_abs_diff(&back.matrix()) < 1e-10);
    }

    /// The partner map is an involution and moves only the sphere angles,
    /// never the eigenphases.
    #[test]
    fn duality_partner_is_an_eigenphase_preserving_involution(u in arb_unitary()) {
        let p = duality_partner(&u).unwrap();
        let back = duality_partner(&p).unwrap();
        prop_assert!(u.matrix().max_abs_diff(&back.matrix()) < 1e-10);
        let a = eigen_decompose(&u);
        let b = eigen_decompose(&p);
        prop_assert!((a.theta_plus - b.theta_plus).abs() < 1e-9);
        prop_assert!((a.theta_minus - b.theta_minus).abs() < 1e-9);
    }

    /// The invariant symmetry operator squares to one and fixes its matrix.
    #[test]
    fn spin_symmetry_fixes_the_interaction(u in arb_unitary()) {
        let sc = eigen_decompose(&u);
        prop_assume!(!sc.degenerate);
        let s = invariant_spin_matrix(&u).unwrap();
        let id = Mat2::identity();
        prop_assert!(s.mul(&s).max_abs_diff(&id) < 1e-10);
        let conj = s.mul(&u.matrix()).mul(&s);
        prop_assert!(conj.max_abs_diff(&u.matrix()) < 1e-10);
    }

    /// Conjugating by a parity axis preserves both eigenphases.
    #[test]
    fn axis_conjugation_preserves_eigenphases(
        u in arb_unitary(),
        cx in -1.0..1.0f64,
        cy in -1.0..1.0f64,
        cz in -1.0..1.0f64,
    ) {
        let n = (cx * cx + cy * cy + cz * cz).sqrt();
        prop_assume!(n > 1e-1);
        let axis = ParityAxis::new(cx / n, cy / n, cz / n).unwrap();
        let w = parity_conjugate(&u, &axis);
        let a = eigen_decompose(&u);
        let b = eigen_decompose(&w);
        prop_assert!((a.theta_plus - b.theta_plus).abs() < 1e-9);
        prop_assert!((a.theta_minus - b.theta_minus).abs() < 1e-9);
    }

    /// Exchange amplitudes of jump defects are unimodular for both
    /// statistics.
    #[test]
    fn exchange_amplitudes_are_unimodular(
        strength in prop_oneof![0.05..5.0f64, -5.0..-0.05f64],
        x in -1.0..1.0f64,
        which in prop::bool::ANY,
        fermions in prop::bool::ANY,
    ) {
        let k = 10f64.powf(x);
        let interaction = if which {
            ContactInteraction::delta(strength)
        } else {
            ContactInteraction::epsilon(strength)
        };
        let stat = if fermions { Statistics::Fermion } else { Statistics::Boson };
        let ex = scatter_exchange(&interaction, stat, k, 1.0).unwrap();
        prop_assert!((ex.c.norm() - 1.0).abs() < 1e-10);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The box spectrum is 2-pi periodic and swap symmetric in the
    /// eigenphase pair.
    #[test]
    fn spectrum_periodicity_and_swap(
        tp in 0.05..6.2f64,
        tm in 0.05..6.2f64,
        wind in -1i32..2,
    ) {
        let cfg = BoxConfig::new(1.0, 9.0);
        let a = solve_spectrum_angles(tp, tm, &cfg).unwrap().expanded();
        let b = solve_spectrum_angles(tp + TAU * wind as f64, tm, &cfg).unwrap().expanded();
        let d = solve_spectrum_angles(tm, tp, &cfg).unwrap().expanded();
        prop_assert_eq!(a.len(), b.len());
        prop_assert_eq!(a.len(), d.len());
        for i in 0..a.len() {
            prop_assert!((a[i] - b[i]).abs() < 1e-10);
            prop_assert!((a[i] - d[i]).abs() < 1e-10);
        }
    }
}
