//! Discrete spectra in a Dirichlet box and spectral flow along parameter
//! loops.
//!
//! The system lives on `x in [-l, l]` with Dirichlet walls at both ends and
//! a contact interaction at the origin. In the eigenbasis of the interaction
//! matrix the quantization condition splits into two decoupled channels, one
//! per eigenphase `theta`:
//!
//! ```text
//! f(theta, k) = sin(kl) sin(theta/2) - k L0 cos(kl) cos(theta/2) = 0,
//! ```
//!
//! a pole-free rewriting of `tan(kl) = k L0 cot(theta/2)`. The minus sign is
//! forced by the boundary data of the box ansatz `phi = A sin(k(l - |x|))`,
//! whose derivative pair is `Phi' = -k cos(kl) (A+, A-)`; it also reproduces
//! the textbook level condition `tan(kl) = -2k/v` for a derivative-jump
//! defect and makes every level strictly decrease as its eigenphase grows.
//!
//! Each channel root ladder moves monotonically downward as `theta`
//! increases, one rung per `2 pi` wind: levels dive out through `k = 0`
//! (into the bound-state region) past `theta = pi/2` while fresh levels
//! drop in from above, leaving the spectrum as a set unchanged around a
//! closed loop even though every individual eigenstate has shifted. The
//! [`trace_flow`] continuation makes that anholonomy quantitative.

use crate::roots::{brentq, MAX_ITER, RTOL, XTOL};
use crate::u2_algebra::{eigen_decompose, SpectralCoordinates, UnitaryU2};
use num_complex::Complex64;
use std::f64::consts::PI;
use thiserror::Error;

/// Default number of scan points per `pi / l` of wavenumber.
pub const DEFAULT_GRID_DENSITY: usize = 16;

/// Minimum accepted scan density.
pub const MIN_GRID_DENSITY: usize = 8;

/// Roots below `1e-6 / l` are treated as having left through `k = 0`.
///
/// At the bound-state threshold eigenphase the residual's slope at the
/// origin vanishes, and double precision resolves the remaining `k^3`
/// behavior only above `k l ~ sqrt(eps) ~ 1.5e-8`; eigenphases within one
/// ulp of the threshold carry meaningless sub-1e-7 roots, so the guard
/// band sits a decade above the noise zone.
const K_FLOOR_SCALE: f64 = 1e-6;

/// Relative wavenumber gap under which the two channels are merged into one
/// doubly degenerate root.
const MULTIPLICITY_RTOL: f64 = 1e-9;

/// Central finite-difference step for eigenphase derivatives.
const FD_STEP: f64 = 1e-5;

/// Initial (and maximum) continuation step in loop parameter `t`.
const INITIAL_FLOW_STEP: f64 = 1.0 / 64.0;

/// Continuation aborts when adaptive halving falls below this step.
const MIN_FLOW_STEP: f64 = 1e-6;

/// Errors produced by the spectral solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    /// A box parameter is out of range.
    #[error("InvalidConfig: {reason}")]
    InvalidConfig { reason: &'static str },
    /// No eigen-wavenumber lies in `(0, k_max]`.
    #[error("NoRoots: no eigen-wavenumber in (0, k_max]; k_max must exceed pi/(2 l)")]
    NoRoots,
    /// Adaptive continuation could not separate neighboring levels.
    #[error("TrackingLost: continuation step collapsed below 1e-6 near t = {t:.6}")]
    TrackingLost { t: f64 },
    /// Surviving trajectories of one channel disagree on the level shift.
    #[error("InconsistentShift: tracked {channel} trajectories disagree on the level shift")]
    InconsistentShift { channel: &'static str },
}

/// Which eigenphase a box level belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Channel {
    /// The `theta_plus` channel (also used to label merged double roots).
    Plus,
    /// The `theta_minus` channel.
    Minus,
}

impl Channel {
    /// Lower-case label used in CSV output.
    pub fn label(&self) -> &'static str {
        match self {
            Channel::Plus => "plus",
            Channel::Minus => "minus",
        }
    }
}

/// Geometry and search window of the boxed problem.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoxConfig {
    /// Half-length of the box (walls sit at `x = -l` and `x = +l`).
    pub l: f64,
    /// Reference length of the connection condition.
    pub l0: f64,
    /// Upper end of the wavenumber search window.
    pub k_max: f64,
    /// Scan points per `pi / l` of wavenumber (at least 8).
    pub grid_density: usize,
}

impl BoxConfig {
    /// Box of half-length `l` searched up to `k_max`, with default length
    /// scale 1 and default scan density.
    pub fn new(l: f64, k_max: f64) -> Self {
        BoxConfig { l, l0: 1.0, k_max, grid_density: DEFAULT_GRID_DENSITY }
    }

    /// Checks the field invariants.
    pub fn validate(&self) -> Result<(), SpectralError> {
        if !(self.l.is_finite() && self.l > 0.0) {
            return Err(SpectralError::InvalidConfig { reason: "box half-length l must be positive" });
        }
        if !(self.l0.is_finite() && self.l0 > 0.0) {
            return Err(SpectralError::InvalidConfig { reason: "length scale L0 must be positive" });
        }
        if self.grid_density < MIN_GRID_DENSITY {
            return Err(SpectralError::InvalidConfig { reason: "grid_density must be at least 8" });
        }
        if !self.k_max.is_finite() || self.k_max <= PI / (2.0 * self.l) {
            // Even the lowest free level pi/(2l) would be out of range.
            return Err(SpectralError::NoRoots);
        }
        Ok(())
    }

    fn k_floor(&self) -> f64 {
        K_FLOOR_SCALE / self.l
    }
}

/// One box level.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectrumRoot {
    /// Eigen-wavenumber.
    pub k: f64,
    /// Channel the level belongs to (`Plus` for merged double roots).
    pub channel: Channel,
    /// 1, or 2 when both channels produce the same wavenumber.
    pub multiplicity: u8,
}

/// Sorted box spectrum.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumResult {
    /// Levels sorted by ascending wavenumber.
    pub roots: Vec<SpectrumRoot>,
}

impl SpectrumResult {
    /// Wavenumbers with multiplicity expanded (double roots repeated).
    pub fn expanded(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.roots.len());
        for r in &self.roots {
            for _ in 0..r.multiplicity {
                out.push(r.k);
            }
        }
        out
    }
}

/// Pole-free quantization residual of one channel:
/// `sin(kl) sin(theta/2) - k L0 cos(kl) cos(theta/2)`.
///
/// Zeros in `k` are exactly the box levels of the eigenphase `theta`; the
/// expression stays smooth where `cot(kl)` or `cot(theta/2)` blow up, and no
/// spurious zeros arise because `sin(kl)` and `cos(kl)` never vanish
/// together.
pub fn channel_residual(theta: f64, k: f64, cfg: &BoxConfig) -> f64 {
    let (sh, ch) = (theta / 2.0).sin_cos();
    let x = k * cfg.l;
    let (sl, cl) = x.sin_cos();
    // Rearranged as p sin(theta/2) + k cos(kl) (l sin(theta/2) - L0 cos(theta/2))
    // with p = sin(x) - x cos(x): near the bound-state threshold the two
    // original terms cancel to O(k^3) and the direct difference drowns in
    // rounding noise below k ~ 1e-8, minting spurious sign changes.
    let p = if x < 0.1 {
        let x2 = x * x;
        x * x2 * (1.0 / 3.0 - x2 * (1.0 / 30.0 - x2 * (1.0 / 840.0 - x2 / 45360.0)))
    } else {
        sl - x * cl
    };
    p * sh + k * cl * (cfg.l * sh - cfg.l0 * ch)
}

/// Full-matrix quantization determinant
/// `det[(U - I) sin(kl) - i L0 (U + I) k cos(kl)]`.
///
/// Vanishes exactly at the eigen-wavenumbers; in the eigenbasis it
/// factorizes as the product of `2 i e^{i theta/2}` times each channel
/// residual, so its zero set is the union of the two channel zero sets.
pub fn quantization_det(u: &UnitaryU2, k: f64, cfg: &BoxConfig) -> Complex64 {
    let m = u.matrix();
    let id = crate::mat2::Mat2::identity();
    let sl = (k * cfg.l).sin();
    let cl = (k * cfg.l).cos();
    let a = m.sub(&id).scale(Complex64::new(sl, 0.0));
    let b = m.add(&id).scale(Complex64::new(0.0, cfg.l0 * k * cl));
    a.sub(&b).det()
}

/// All roots of one channel in `(k_floor, k_max]`, sorted ascending.
///
/// Scans `grid_density` points per `pi / l`, brackets every sign change and
/// polishes with a safeguarded bracketing iteration.
fn channel_roots(theta: f64, cfg: &BoxConfig) -> Vec<f64> {
    let xtol = XTOL.min(1e-12 * cfg.k_max);
    let step = PI / cfg.l / cfg.grid_density as f64;
    let mut out: Vec<f64> = Vec::new();
    let push = |root: f64, out: &mut Vec<f64>| {
        // Deduplicate grid-point hits; genuine neighbors are ~pi/(2l) apart.
        if out.last().is_none_or(|last| root - last > 1e-6 * PI / cfg.l) {
            out.push(root);
        }
    };
    let mut k_prev = cfg.k_floor();
    let mut f_prev = channel_residual(theta, k_prev, cfg);
    let mut i = 1usize;
    loop {
        let k = (cfg.k_floor() + step * i as f64).min(cfg.k_max);
        let f = channel_residual(theta, k, cfg);
        if f_prev == 0.0 {
            push(k_prev, &mut out);
        } else if f == 0.0 {
            push(k, &mut out);
        } else if f_prev.signum() != f.signum() {
            if let Some(root) = brentq(
                |x| channel_residual(theta, x, cfg),
                k_prev,
                k,
                xtol,
                RTOL,
                MAX_ITER,
            ) {
                push(root, &mut out);
            }
        }
        if k >= cfg.k_max {
            break;
        }
        k_prev = k;
        f_prev = f;
        i += 1;
    }
    out
}

/// Merges the two channel root lists, assigning multiplicity 2 where they
/// coincide within the relative tolerance.
fn merge_channels(plus: &[f64], minus: &[f64]) -> Vec<SpectrumRoot> {
    let mut out = Vec::with_capacity(plus.len() + minus.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < plus.len() || j < minus.len() {
        match (plus.get(i), minus.get(j)) {
            (Some(&kp), Some(&km)) => {
                if (kp - km).abs() <= MULTIPLICITY_RTOL * kp.abs().max(km.abs()) {
                    out.push(SpectrumRoot {
                        k: 0.5 * (kp + km),
                        channel: Channel::Plus,
                        multiplicity: 2,
                    });
                    i += 1;
                    j += 1;
                } else if kp < km {
                    out.push(SpectrumRoot { k: kp, channel: Channel::Plus, multiplicity: 1 });
                    i += 1;
                } else {
                    out.push(SpectrumRoot { k: km, channel: Channel::Minus, multiplicity: 1 });
                    j += 1;
                }
            }
            (Some(&kp), None) => {
                out.push(SpectrumRoot { k: kp, channel: Channel::Plus, multiplicity: 1 });
                i += 1;
            }
            (None, Some(&km)) => {
                out.push(SpectrumRoot { k: km, channel: Channel::Minus, multiplicity: 1 });
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Box spectrum for an explicit eigenphase pair.
pub fn solve_spectrum_angles(
    theta_plus: f64,
    theta_minus: f64,
    cfg: &BoxConfig,
) -> Result<SpectrumResult, SpectralError> {
    cfg.validate()?;
    let plus = channel_roots(theta_plus, cfg);
    let minus = channel_roots(theta_minus, cfg);
    let roots = merge_channels(&plus, &minus);
    if roots.is_empty() {
        return Err(SpectralError::NoRoots);
    }
    Ok(SpectrumResult { roots })
}

/// Box spectrum for a point of the eigenphase/sphere chart (the sphere
/// angles are isospectral directions and do not enter).
pub fn solve_spectrum_coords(
    sc: &SpectralCoordinates,
    cfg: &BoxConfig,
) -> Result<SpectrumResult, SpectralError> {
    solve_spectrum_angles(sc.theta_plus, sc.theta_minus, cfg)
}

/// Box spectrum of an interaction matrix.
pub fn solve_spectrum(u: &UnitaryU2, cfg: &BoxConfig) -> Result<SpectrumResult, SpectralError> {
    solve_spectrum_coords(&eigen_decompose(u), cfg)
}

/// Outcome of the level-slope scan.
#[derive(Clone, Debug, PartialEq)]
pub struct MonotonicityReport {
    /// Least negative slope `dk/dtheta` observed.
    pub max_slope: f64,
    /// Number of (eigenphase, level) pairs sampled.
    pub samples: usize,
    /// True when every sampled slope was strictly negative.
    pub passed: bool,
}

/// Estimates `dk/dtheta` for every channel level of every sampled
/// eigenphase by central differences and reports the least negative slope.
///
/// Every box level moves strictly downward as its eigenphase grows; this is
/// the pointwise mechanism behind the spectral-flow anholonomy.
pub fn monotonicity_check(
    theta_grid: &[f64],
    cfg: &BoxConfig,
) -> Result<MonotonicityReport, SpectralError> {
    cfg.validate()?;
    let mut max_slope = f64::NEG_INFINITY;
    let mut samples = 0usize;
    let mut bracket_lost = false;
    for &theta in theta_grid {
        let roots = channel_roots(theta, cfg);
        if roots.is_empty() {
            return Err(SpectralError::NoRoots);
        }
        for (i, &k) in roots.iter().enumerate() {
            let left = if i > 0 { 0.45 * (k - roots[i - 1]) } else { 0.45 * PI / cfg.l };
            let right = if i + 1 < roots.len() {
                0.45 * (roots[i + 1] - k)
            } else {
                0.45 * PI / cfg.l
            };
            let lo = (k - left).max(cfg.k_floor());
            let hi = k + right;
            let xtol = XTOL.min(1e-12 * cfg.k_max);
            let solve_at = |th: f64| {
                brentq(|x| channel_residual(th, x, cfg), lo, hi, xtol, RTOL, MAX_ITER)
            };
            match (solve_at(theta + FD_STEP), solve_at(theta - FD_STEP)) {
                (Some(kp), Some(km)) => {
                    let slope = (kp - km) / (2.0 * FD_STEP);
                    max_slope = max_slope.max(slope);
                    samples += 1;
                }
                // A lost bracket leaves the claim unverified for this level.
                _ => bracket_lost = true,
            }
        }
    }
    Ok(MonotonicityReport {
        max_slope,
        samples,
        passed: !bracket_lost && samples > 0 && max_slope < 0.0,
    })
}

/// Spectrum snapshot at one accepted continuation point.
#[derive(Clone, Debug, PartialEq)]
pub struct FlowSample {
    /// Loop parameter in `[0, 1]`.
    pub t: f64,
    /// Eigenphase of the plus channel at `t`.
    pub theta_plus: f64,
    /// Eigenphase of the minus channel at `t`.
    pub theta_minus: f64,
    /// Sorted union of both channels' wavenumbers.
    pub levels: Vec<f64>,
}

/// One continuation-matched level trajectory.
#[derive(Clone, Debug, PartialEq)]
pub struct TrackedLevel {
    /// Channel the trajectory lives in.
    pub channel: Channel,
    /// `(t, k)` samples from birth to exit (or loop end).
    pub points: Vec<(f64, f64)>,
    /// Ladder index at `t = 0`, or `None` for a level that entered the
    /// window during the loop.
    pub birth_index: Option<usize>,
}

/// Result of carrying a box spectrum around a closed parameter loop.
#[derive(Clone, Debug, PartialEq)]
pub struct FlowTrace {
    /// Accepted continuation samples, including `t = 0` and `t = 1`.
    pub samples: Vec<FlowSample>,
    /// All level trajectories, including exited and entered ones.
    pub tracked: Vec<TrackedLevel>,
    /// Rungs every surviving plus-channel level moved down.
    pub shift_plus: i64,
    /// Rungs every surviving minus-channel level moved down.
    pub shift_minus: i64,
    /// Total anholonomy shift, `shift_plus + shift_minus`.
    pub net_shift: i64,
    /// Largest wavenumber mismatch between the start and end level sets.
    pub closure_defect: f64,
}

/// How an accepted step's old and new root lists line up at the window
/// edges.
#[derive(Clone, Copy, Debug, PartialEq)]
struct Alignment {
    exit_bottom: bool,
    exit_top: bool,
    enter_bottom: bool,
    enter_top: bool,
}

/// Finds the unique edge alignment under which every matched root moves
/// less than half its local gap; `None` when zero or several hypotheses
/// fit (the step must shrink).
fn match_roots(old: &[f64], new: &[f64], cfg: &BoxConfig) -> Option<Alignment> {
    let bottom_zone = PI / (2.0 * cfg.l);
    let top_zone = cfg.k_max - PI / cfg.l;
    let mut winner: Option<Alignment> = None;
    for code in 0..16u8 {
        let al = Alignment {
            exit_bottom: code & 1 != 0,
            exit_top: code & 2 != 0,
            enter_bottom: code & 4 != 0,
            enter_top: code & 8 != 0,
        };
        if (al.exit_bottom && al.enter_bottom) || (al.exit_top && al.enter_top) {
            continue;
        }
        let dropped = al.exit_bottom as usize + al.exit_top as usize;
        let added = al.enter_bottom as usize + al.enter_top as usize;
        if old.len() < dropped || old.len() - dropped + added != new.len() {
            continue;
        }
        let matched = old.len() - dropped;
        if matched == 0 {
            continue;
        }
        // Edge events must happen inside the edge zones.
        if al.exit_bottom && old[0] >= bottom_zone {
            continue;
        }
        if al.exit_top && old[old.len() - 1] <= top_zone {
            continue;
        }
        if al.enter_bottom && new[0] >= bottom_zone {
            continue;
        }
        if al.enter_top && new[new.len() - 1] <= top_zone {
            continue;
        }
        let off_old = al.exit_bottom as usize;
        let off_new = al.enter_bottom as usize;
        let mut ok = true;
        for i in 0..matched {
            let oi = i + off_old;
            let gap_left = if oi > 0 { old[oi] - old[oi - 1] } else { f64::INFINITY };
            let gap_right = if oi + 1 < old.len() { old[oi + 1] - old[oi] } else { f64::INFINITY };
            let mut gap = gap_left.min(gap_right);
            if !gap.is_finite() {
                gap = PI / cfg.l;
            }
            if (old[oi] - new[i + off_new]).abs() >= 0.5 * gap {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        if winner.is_some() {
            return None; // ambiguous, refine the step
        }
        winner = Some(al);
    }
    winner
}

/// Per-channel continuation state.
struct ChannelTracker {
    channel: Channel,
    /// Indices into the shared trajectory store, ordered by current k.
    alive: Vec<usize>,
    /// Current root list (same order as `alive`).
    roots: Vec<f64>,
}

impl ChannelTracker {
    fn apply(
        &mut self,
        al: Alignment,
        new_roots: Vec<f64>,
        t: f64,
        store: &mut Vec<TrackedLevel>,
    ) {
        let mut next_alive = Vec::with_capacity(new_roots.len());
        if al.enter_bottom {
            store.push(TrackedLevel {
                channel: self.channel,
                points: vec![(t, new_roots[0])],
                birth_index: None,
            });
            next_alive.push(store.len() - 1);
        }
        let off_old = al.exit_bottom as usize;
        let off_new = al.enter_bottom as usize;
        let matched = self.alive.len() - off_old - al.exit_top as usize;
        for i in 0..matched {
            let idx = self.alive[i + off_old];
            store[idx].points.push((t, new_roots[i + off_new]));
            next_alive.push(idx);
        }
        if al.enter_top {
            store.push(TrackedLevel {
                channel: self.channel,
                points: vec![(t, *new_roots.last().expect("nonempty"))],
                birth_index: None,
            });
            next_alive.push(store.len() - 1);
        }
        self.alive = next_alive;
        self.roots = new_roots;
    }
}

/// Verdict of one channel's surviving trajectories.
fn channel_shift(
    tracker: &ChannelTracker,
    store: &[TrackedLevel],
) -> Result<i64, SpectralError> {
    let mut votes: Vec<i64> = Vec::new();
    for (end_index, &idx) in tracker.alive.iter().enumerate() {
        if let Some(birth) = store[idx].birth_index {
            votes.push(birth as i64 - end_index as i64);
        }
    }
    match votes.split_first() {
        Some((&first, rest)) if rest.iter().all(|&v| v == first) => Ok(first),
        _ => Err(SpectralError::InconsistentShift { channel: tracker.channel.label() }),
    }
}

/// Carries every box level around the closed loop
/// `t -> (theta_plus(t), theta_minus(t))`, `t in [0, 1]`, with adaptive
/// continuation, and reports the per-channel and total anholonomy shifts.
///
/// A shift of `+n` means each surviving level ended `n` rungs below where
/// it started (levels leave through `k = 0` past the bound-state threshold
/// and replacements descend from above `k_max`). Winding `theta_plus` once
/// yields `+1`; a contractible loop yields `0`; winding both angles
/// together yields `+2`.
pub fn trace_flow<P: Fn(f64) -> (f64, f64)>(
    path: P,
    cfg: &BoxConfig,
) -> Result<FlowTrace, SpectralError> {
    cfg.validate()?;
    let (tp0, tm0) = path(0.0);
    let (tp1, tm1) = path(1.0);
    for (a, b) in [(tp0, tp1), (tm0, tm1)] {
        let d = (b - a) / (2.0 * PI);
        if (d - d.round()).abs() > 1e-9 {
            return Err(SpectralError::InvalidConfig {
                reason: "flow path must close modulo 2 pi in each eigenphase",
            });
        }
    }

    let plus0 = channel_roots(tp0, cfg);
    let minus0 = channel_roots(tm0, cfg);
    if plus0.is_empty() || minus0.is_empty() {
        return Err(SpectralError::NoRoots);
    }

    let mut store: Vec<TrackedLevel> = Vec::new();
    let mut trackers = [
        ChannelTracker { channel: Channel::Plus, alive: Vec::new(), roots: plus0 },
        ChannelTracker { channel: Channel::Minus, alive: Vec::new(), roots: minus0 },
    ];
    for tracker in trackers.iter_mut() {
        for (i, &k) in tracker.roots.iter().enumerate() {
            store.push(TrackedLevel {
                channel: tracker.channel,
                points: vec![(0.0, k)],
                birth_index: Some(i),
            });
            tracker.alive.push(store.len() - 1);
        }
    }

    let merged = |a: &[f64], b: &[f64]| -> Vec<f64> {
        let mut v: Vec<f64> = a.iter().chain(b.iter()).copied().collect();
        v.sort_by(f64::total_cmp);
        v
    };
    let mut samples = vec![FlowSample {
        t: 0.0,
        theta_plus: tp0,
        theta_minus: tm0,
        levels: merged(&trackers[0].roots, &trackers[1].roots),
    }];

    let mut t = 0.0_f64;
    let mut dt = INITIAL_FLOW_STEP;
    let mut streak = 0u32;
    while t < 1.0 - 1e-15 {
        let t_next = (t + dt).min(1.0);
        let (tp, tm) = path(t_next);
        let new_plus = channel_roots(tp, cfg);
        let new_minus = channel_roots(tm, cfg);
        let al_plus = match_roots(&trackers[0].roots, &new_plus, cfg);
        let al_minus = match_roots(&trackers[1].roots, &new_minus, cfg);
        match (al_plus, al_minus) {
            (Some(ap), Some(am)) => {
                trackers[0].apply(ap, new_plus, t_next, &mut store);
                trackers[1].apply(am, new_minus, t_next, &mut store);
                samples.push(FlowSample {
                    t: t_next,
                    theta_plus: tp,
                    theta_minus: tm,
                    levels: merged(&trackers[0].roots, &trackers[1].roots),
                });
                t = t_next;
                streak += 1;
                if streak >= 2 {
                    dt = (dt * 2.0).min(INITIAL_FLOW_STEP);
                    streak = 0;
                }
            }
            _ => {
                dt /= 2.0;
                streak = 0;
                if dt < MIN_FLOW_STEP {
                    return Err(SpectralError::TrackingLost { t });
                }
            }
        }
    }

    let shift_plus = channel_shift(&trackers[0], &store)?;
    let shift_minus = channel_shift(&trackers[1], &store)?;
    let first = &samples[0].levels;
    let last = &samples[samples.len() - 1].levels;
    let closure_defect = if first.len() == last.len() {
        first
            .iter()
            .zip(last.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    } else {
        f64::INFINITY
    };
    Ok(FlowTrace {
        samples,
        tracked: store,
        shift_plus,
        shift_minus,
        net_shift: shift_plus + shift_minus,
        closure_defect,
    })
}
