//! Gait-cycle timing: phase variable, 2D clock encoding, and the four
//! smoothed phase-indicator functions that sign the periodic reward terms.
//!
//! One cycle of period `L = 2*(L_DS + L_SS)` holds two double-support (DS)
//! and two single-support (SS) phases. The cycle origin sits at the middle
//! of a DS phase, so the segment order from φ=0 is: half-DS, SS (left
//! swing), DS, SS (right swing), half-DS. With this origin the indicator
//! set is symmetric both under the half-cycle shift φ → φ+0.5 (left/right
//! exchange) and under the reflection φ → −φ, and the two reset phases
//! φ ∈ {0, 0.5} are the mid-DS points.

use std::f64::consts::PI;
use thiserror::Error;

/// Fraction of the cycle used by each cosine half-ramp that smooths an
/// indicator transition. Plateau values are exact wherever a phase segment
/// is wider than the ramp, which `GaitSchedule::new` enforces.
pub const RAMP_FRACTION: f64 = 0.05;

/// Max slope of any indicator in units of 1/φ: amplitude 2 over a cosine
/// ramp of width `RAMP_FRACTION`.
pub const MAX_INDICATOR_SLOPE: f64 = PI / RAMP_FRACTION;

#[derive(Debug, Error, PartialEq)]
pub enum GaitError {
    #[error("invalid gait schedule: {0}")]
    InvalidArgument(String),
}

/// Fixed-duration gait cycle timing.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GaitSchedule {
    /// Double-support duration, seconds.
    pub l_ds: f64,
    /// Single-support duration, seconds.
    pub l_ss: f64,
    /// Control period of the policy, seconds.
    pub control_dt: f64,
    /// Quiet standing: the whole cycle is treated as double support.
    pub standing: bool,
}

impl GaitSchedule {
    pub fn new(l_ds: f64, l_ss: f64, control_dt: f64) -> Result<Self, GaitError> {
        if !(l_ds > 0.0) || !(l_ss > 0.0) {
            return Err(GaitError::InvalidArgument(format!(
                "phase durations must be positive, got L_DS={l_ds}, L_SS={l_ss}"
            )));
        }
        if !(control_dt > 0.0) {
            return Err(GaitError::InvalidArgument(format!(
                "control_dt must be positive, got {control_dt}"
            )));
        }
        let cycle = 2.0 * (l_ds + l_ss);
        if l_ds / cycle < RAMP_FRACTION || l_ss / cycle < RAMP_FRACTION {
            return Err(GaitError::InvalidArgument(format!(
                "each phase must span at least {RAMP_FRACTION} of the cycle \
                 for the indicator ramps, got L_DS={l_ds}, L_SS={l_ss}"
            )));
        }
        Ok(GaitSchedule { l_ds, l_ss, control_dt, standing: false })
    }

    /// Degenerate schedule for quiet standing. Durations are kept so the
    /// clock still ticks; indicators ignore them.
    pub fn standing(l_ds: f64, l_ss: f64, control_dt: f64) -> Result<Self, GaitError> {
        let mut s = GaitSchedule::new(l_ds, l_ss, control_dt)?;
        s.standing = true;
        Ok(s)
    }

    /// Timing used for HRP-5P-class heavy humanoids.
    pub fn hrp5p(control_dt: f64) -> Self {
        GaitSchedule::new(0.35, 0.75, control_dt).expect("valid preset")
    }

    /// Timing used for JVRC-1-class lighter humanoids.
    pub fn jvrc1(control_dt: f64) -> Self {
        GaitSchedule::new(0.20, 0.80, control_dt).expect("valid preset")
    }

    /// Full cycle period `L = 2*(L_DS + L_SS)`, seconds.
    pub fn cycle(&self) -> f64 {
        2.0 * (self.l_ds + self.l_ss)
    }

    /// DS duration as a fraction of the cycle.
    fn ds_frac(&self) -> f64 {
        self.l_ds / self.cycle()
    }

    /// SS duration as a fraction of the cycle.
    fn ss_frac(&self) -> f64 {
        self.l_ss / self.cycle()
    }
}

/// Normalized cycle phase in `[0, 1)`; wraps modulo 1 on advance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Phase(f64);

impl Phase {
    pub fn new(phi: f64) -> Self {
        Phase(phi.rem_euclid(1.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Advance by `dt` seconds within a cycle of period `cycle`.
    pub fn advance(self, dt: f64, cycle: f64) -> Self {
        Phase::new(self.0 + dt / cycle)
    }
}

/// 2D clock encoding `(sin 2πφ, cos 2πφ)`; continuous across the wrap,
/// unlike the raw sawtooth phase.
pub fn clock_encode(phase: Phase) -> [f64; 2] {
    let a = 2.0 * PI * phase.value();
    [a.sin(), a.cos()]
}

/// The four phase indicators `(I_left_grf, I_right_grf, I_left_spd,
/// I_right_spd)`, each in `[-1, 1]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Indicators {
    pub left_grf: f64,
    pub right_grf: f64,
    pub left_spd: f64,
    pub right_spd: f64,
}

impl Indicators {
    pub const STANDING: Indicators =
        Indicators { left_grf: 1.0, right_grf: 1.0, left_spd: -1.0, right_spd: -1.0 };

    pub fn as_array(&self) -> [f64; 4] {
        [self.left_grf, self.right_grf, self.left_spd, self.right_spd]
    }
}

/// Segment plateau values in cycle order: [DS, SS-left-swing, DS, SS-right-swing],
/// with the cycle origin at the middle of the first DS.
const LEFT_GRF: [f64; 4] = [1.0, -1.0, 1.0, 1.0];
const RIGHT_GRF: [f64; 4] = [1.0, 1.0, 1.0, -1.0];
const LEFT_SPD: [f64; 4] = [-1.0, 1.0, -1.0, -1.0];
const RIGHT_SPD: [f64; 4] = [-1.0, -1.0, -1.0, 1.0];

/// Evaluate all four indicators at `phase`.
pub fn indicators(phase: Phase, schedule: &GaitSchedule) -> Indicators {
    if schedule.standing {
        return Indicators::STANDING;
    }
    let d = schedule.ds_frac();
    let s = schedule.ss_frac();
    // Segment boundaries after the half-DS origin.
    let b = [0.5 * d, 0.5 * d + s, 1.5 * d + s, 1.5 * d + 2.0 * s];
    let phi = phase.value();
    Indicators {
        left_grf: smoothed(phi, &b, &LEFT_GRF),
        right_grf: smoothed(phi, &b, &RIGHT_GRF),
        left_spd: smoothed(phi, &b, &LEFT_SPD),
        right_spd: smoothed(phi, &b, &RIGHT_SPD),
    }
}

/// Piecewise-constant plateau over the segments delimited by `b`, blended
/// with a cosine half-ramp of width `RAMP_FRACTION` at every boundary
/// (including the wrap boundary at φ=0, which lies inside segment 0's
/// plateau by construction).
fn smoothed(phi: f64, b: &[f64; 4], values: &[f64; 4]) -> f64 {
    let w = RAMP_FRACTION;
    // Boundary i separates segment i (left) from segment i+1 (right, mod 4);
    // segment 0 is the DS straddling the origin, i.e. φ < b[0] or φ >= b[3].
    for i in 0..4 {
        let delta = signed_circ_dist(phi, b[i]);
        if delta.abs() < 0.5 * w {
            let t = (delta + 0.5 * w) / w;
            let (va, vb) = (values[i], values[(i + 1) % 4]);
            return va + (vb - va) * 0.5 * (1.0 - (PI * t).cos());
        }
    }
    let seg = if phi < b[0] || phi >= b[3] {
        0
    } else if phi < b[1] {
        1
    } else if phi < b[2] {
        2
    } else {
        3
    };
    values[seg]
}

/// Signed circular distance from `b` to `phi` in `[-0.5, 0.5)`.
fn signed_circ_dist(phi: f64, b: f64) -> f64 {
    (phi - b + 0.5).rem_euclid(1.0) - 0.5
}
