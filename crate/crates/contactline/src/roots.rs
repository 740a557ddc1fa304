//! Bracketing scalar root finder (Brent's method).
//!
//! Classic inverse-quadratic/secant/bisection hybrid with the usual
//! safeguards; converges for any continuous function given a sign-changing
//! bracket. Used by the spectral module to polish eigenvalue brackets.

/// Default absolute tolerance on the root location.
pub const XTOL: f64 = 1e-13;

/// Default relative tolerance (a few ulps).
pub const RTOL: f64 = 4.0 * f64::EPSILON;

/// Default iteration cap; generous, the method is superlinear.
pub const MAX_ITER: usize = 120;

/// Finds a root of `f` in `[xa, xb]`; requires a sign change across the
/// bracket. Returns `None` when the bracket is invalid (no sign change or a
/// non-finite endpoint value) or the iteration cap is exhausted.
pub fn brentq<F: FnMut(f64) -> f64>(
    mut f: F,
    xa: f64,
    xb: f64,
    xtol: f64,
    rtol: f64,
    max_iter: usize,
) -> Option<f64> {
    let mut a = xa;
    let mut b = xb;
    let mut fa = f(a);
    let mut fb = f(b);
    if !fa.is_finite() || !fb.is_finite() {
        return None;
    }
    if fa == 0.0 {
        return Some(a);
    }
    if fb == 0.0 {
        return Some(b);
    }
    if fa.signum() == fb.signum() {
        return None;
    }

    // c is the previous iterate with f(c) of opposite sign to f(b).
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = b - a;

    for _ in 0..max_iter {
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol = 0.5 * xtol + rtol * b.abs();
        let m = 0.5 * (c - b);
        if m.abs() <= tol || fb == 0.0 {
            return Some(b);
        }
        if e.abs() < tol || fa.abs() <= fb.abs() {
            // Bisection.
            d = m;
            e = m;
        } else {
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                // Secant step.
                (2.0 * m * s, 1.0 - s)
            } else {
                // Inverse quadratic interpolation.
                let q0 = fa / fc;
                let r = fb / fc;
                (
                    s * (2.0 * m * q0 * (q0 - r) - (b - a) * (r - 1.0)),
                    (q0 - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (tol * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol { d } else { tol * m.signum() };
        fb = f(b);
        if !fb.is_finite() {
            return None;
        }
        if (fb > 0.0) == (fc > 0.0) {
            c = a;
            fc = fa;
            d = b - a;
            e = b - a;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_simple_roots() {
        let r = brentq(|x| x * x - 2.0, 0.0, 2.0, XTOL, RTOL, MAX_ITER).unwrap();
        assert!((r - 2.0_f64.sqrt()).abs() < 1e-12);
        let r = brentq(|x| x.cos(), 0.0, 3.0, XTOL, RTOL, MAX_ITER).unwrap();
        assert!((r - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn transcendental_tangent_crossings() {
        // tan(x) = x has its first positive solution near 4.493; solve via
        // the continuous form sin(x) - x cos(x) on a bracket inside (pi, 3pi/2).
        let r = brentq(
            |x| x.sin() - x * x.cos(),
            3.2,
            4.6,
            XTOL,
            RTOL,
            MAX_ITER,
        )
        .unwrap();
        assert!((r - 4.493409457909064).abs() < 1e-12);
        // tan(x) = -x similarly via sin(x) + x cos(x) on (pi/2, pi).
        let r = brentq(
            |x| x.sin() + x * x.cos(),
            1.6,
            3.1,
            XTOL,
            RTOL,
            MAX_ITER,
        )
        .unwrap();
        assert!((r - 2.028757838110434).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_brackets() {
        assert!(brentq(|x| x * x + 1.0, -1.0, 1.0, XTOL, RTOL, MAX_ITER).is_none());
        assert!(brentq(|x| 1.0 / x, 1.0, 2.0, XTOL, RTOL, MAX_ITER).is_none());
    }

    #[test]
    fn exact_endpoint_roots_are_returned() {
        assert_eq!(brentq(|x| x, 0.0, 1.0, XTOL, RTOL, MAX_ITER), Some(0.0));
        assert_eq!(brentq(|x| x - 1.0, 0.0, 1.0, XTOL, RTOL, MAX_ITER), Some(1.0));
    }
}
