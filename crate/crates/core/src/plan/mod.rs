//! Footstep plans: oriented 3D step targets with a heading, and the
//! generators that produce them (manual line plans, turn-in-place, quiet
//! standing, stairs, and a search-based curved-path planner).

mod astar;
mod io;

pub use astar::plan_curved;
pub use io::{grid_from_str, grid_to_string, plan_from_str, plan_to_string};

use crate::geom::{wrap_angle, Pose2, Vec2};
use rand::Rng;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PlanError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("planning failure: {0}")]
    PlanningFailure(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Which foot a step is meant for. The policy treats targets as
/// foot-agnostic; labels aid tests and the scripted walker.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    Either,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
            Side::Either => Side::Either,
        }
    }
}

/// A 3D step target with the desired root yaw attached.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Footstep {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    /// Desired root yaw at this step, radians in `(-pi, pi]`.
    pub heading: f64,
    pub side: Side,
}

impl Footstep {
    pub fn new(x: f64, y: f64, z: f64, heading: f64, side: Side) -> Self {
        Footstep { x, y, z, heading: wrap_angle(heading), side }
    }

    pub const ORIGIN: Footstep =
        Footstep { x: 0.0, y: 0.0, z: 0.0, heading: 0.0, side: Side::Either };

    pub fn position2(&self) -> Vec2 {
        Vec2::new(self.x, self.y)
    }

    /// 3D Euclidean distance to a point.
    pub fn distance_to(&self, x: f64, y: f64, z: f64) -> f64 {
        ((self.x - x).powi(2) + (self.y - y).powi(2) + (self.z - z).powi(2)).sqrt()
    }
}

/// Walking mode a plan was generated for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlanMode {
    Forward,
    Backward,
    Lateral,
    Turn,
    Stand,
    Stairs,
    Curved,
}

/// Ordered sequence of footsteps plus the geometry it was built with.
#[derive(Clone, Debug, PartialEq)]
pub struct FootstepPlan {
    pub steps: Vec<Footstep>,
    pub mode: PlanMode,
    pub foot_spread: f64,
    pub step_length: f64,
}

impl FootstepPlan {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Step at `index`, with the final step repeating past the end.
    pub fn step_clamped(&self, index: usize) -> Footstep {
        self.steps[index.min(self.steps.len() - 1)]
    }
}

/// Direction of a manually generated line plan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LineDirection {
    Forward,
    Backward,
    /// Sidestep toward +y (the robot's left; it keeps facing +x).
    LateralLeft,
    /// Sidestep toward -y.
    LateralRight,
}

impl LineDirection {
    fn axis(self) -> Vec2 {
        match self {
            LineDirection::Forward => Vec2::new(1.0, 0.0),
            LineDirection::Backward => Vec2::new(-1.0, 0.0),
            LineDirection::LateralLeft => Vec2::new(0.0, 1.0),
            LineDirection::LateralRight => Vec2::new(0.0, -1.0),
        }
    }

    fn mode(self) -> PlanMode {
        match self {
            LineDirection::Forward => PlanMode::Forward,
            LineDirection::Backward => PlanMode::Backward,
            LineDirection::LateralLeft | LineDirection::LateralRight => PlanMode::Lateral,
        }
    }
}

/// Generate a straight-line plan: steps placed alternately to either side of
/// the path axis, every heading equal to the initial forward yaw (0), even
/// for backward and lateral plans.
pub fn gen_line_plan(
    direction: LineDirection,
    step_length: f64,
    foot_spread: f64,
    n_steps: usize,
) -> Result<FootstepPlan, PlanError> {
    if !(step_length > 0.0) || !(foot_spread > 0.0) {
        return Err(PlanError::InvalidArgument(format!(
            "step_length and foot_spread must be positive, got {step_length}, {foot_spread}"
        )));
    }
    if n_steps < 1 {
        return Err(PlanError::InvalidArgument("n_steps must be >= 1".into()));
    }
    let axis = direction.axis();
    let left_of_path = axis.perp();
    let steps = (1..=n_steps)
        .map(|k| {
            // First step on the right of the path axis, then alternating.
            let sign = if k % 2 == 1 { -1.0 } else { 1.0 };
            let p = axis * (k as f64 * step_length) + left_of_path * (sign * foot_spread);
            let side = if sign < 0.0 { Side::Right } else { Side::Left };
            Footstep::new(p.x, p.y, 0.0, 0.0, side)
        })
        .collect();
    Ok(FootstepPlan { steps, mode: direction.mode(), foot_spread, step_length })
}

/// Quiet-standing plan: a single zero step at the origin. When windowed,
/// both observed targets are zeroed.
pub fn gen_stand() -> FootstepPlan {
    FootstepPlan {
        steps: vec![Footstep::ORIGIN],
        mode: PlanMode::Stand,
        foot_spread: 0.0,
        step_length: 0.0,
    }
}

/// Turn-in-place plan: step positions stay on the circle of radius
/// `foot_spread` about the origin while headings ramp by `yaw_per_step`
/// up to `total_yaw`. A zero `total_yaw` degenerates to standing.
pub fn gen_turn_in_place(
    total_yaw: f64,
    yaw_per_step: f64,
    foot_spread: f64,
) -> Result<FootstepPlan, PlanError> {
    if yaw_per_step == 0.0 {
        return Err(PlanError::InvalidArgument("yaw_per_step must be nonzero".into()));
    }
    if yaw_per_step.abs() > PI / 6.0 + 1e-12 {
        return Err(PlanError::InvalidArgument(format!(
            "|yaw_per_step| must be <= pi/6, got {yaw_per_step}"
        )));
    }
    if !(foot_spread > 0.0) {
        return Err(PlanError::InvalidArgument("foot_spread must be positive".into()));
    }
    if total_yaw == 0.0 {
        return Ok(gen_stand());
    }
    if total_yaw.signum() != yaw_per_step.signum() {
        return Err(PlanError::InvalidArgument(
            "total_yaw and yaw_per_step must have the same sign".into(),
        ));
    }
    let n = (total_yaw / yaw_per_step).abs().ceil() as usize;
    // The inside foot leads: left foot first for a counter-clockwise turn.
    let first = if total_yaw > 0.0 { Side::Left } else { Side::Right };
    let steps = (1..=n)
        .map(|k| {
            let heading = if k == n { total_yaw } else { k as f64 * yaw_per_step };
            let side = if k % 2 == 1 { first } else { first.opposite() };
            let lateral = match side {
                Side::Left => foot_spread,
                _ => -foot_spread,
            };
            // Lateral foot offset rotated with the heading.
            let p = Vec2::new(0.0, lateral).rotated(heading);
            Footstep::new(p.x, p.y, 0.0, heading, side)
        })
        .collect();
    Ok(FootstepPlan { steps, mode: PlanMode::Turn, foot_spread, step_length: 0.0 })
}

/// Lift a forward line plan onto stairs: step k gets `z = k*rise` while the
/// run (x spacing) stays equal to the step length, so each target lies in
/// the middle of its tread. Negative rise descends; zero rise is identity.
pub fn apply_stairs(plan: &FootstepPlan, rise: f64) -> Result<FootstepPlan, PlanError> {
    if plan.mode != PlanMode::Forward {
        return Err(PlanError::InvalidArgument(
            "stairs can only be applied to a forward line plan".into(),
        ));
    }
    if rise == 0.0 {
        return Ok(plan.clone());
    }
    let mut out = plan.clone();
    for (i, step) in out.steps.iter_mut().enumerate() {
        step.z = (i + 1) as f64 * rise;
    }
    out.mode = PlanMode::Stairs;
    Ok(out)
}

/// Goal-sampling box used for curved-path training plans:
/// uniform over (0, -1, -pi/2) .. (0, 1, pi/2).
pub fn sample_goal<R: Rng>(rng: &mut R) -> Pose2 {
    let y = rng.gen_range(-1.0..=1.0);
    let yaw = rng.gen_range(-PI / 2.0..=PI / 2.0);
    Pose2::new(0.0, y, yaw)
}

/// 2D occupancy grid with a world pose for cell (0, 0).
#[derive(Clone, Debug, PartialEq)]
pub struct OccupancyGrid {
    /// Cell size, meters.
    pub resolution: f64,
    pub width: usize,
    pub height: usize,
    /// Row-major occupancy, `true` = occupied.
    pub cells: Vec<bool>,
    /// World pose of the corner of cell (0, 0).
    pub origin: Pose2,
}

impl OccupancyGrid {
    pub fn new(
        resolution: f64,
        width: usize,
        height: usize,
        origin: Pose2,
    ) -> Result<Self, PlanError> {
        if !(resolution > 0.0) {
            return Err(PlanError::InvalidArgument("resolution must be positive".into()));
        }
        if width == 0 || height == 0 {
            return Err(PlanError::InvalidArgument("grid dimensions must be >= 1".into()));
        }
        Ok(OccupancyGrid {
            resolution,
            width,
            height,
            cells: vec![false; width * height],
            origin,
        })
    }

    /// Empty square grid centred on the origin.
    pub fn empty_centered(half_extent: f64, resolution: f64) -> Self {
        let n = (2.0 * half_extent / resolution).ceil() as usize;
        OccupancyGrid::new(
            resolution,
            n,
            n,
            Pose2::new(-half_extent, -half_extent, 0.0),
        )
        .expect("valid grid")
    }

    pub fn set(&mut self, ix: usize, iy: usize, occupied: bool) {
        assert!(ix < self.width && iy < self.height, "cell out of range");
        self.cells[iy * self.width + ix] = occupied;
    }

    /// Grid indices for a world point, or None when outside the grid.
    pub fn cell_of(&self, x: f64, y: f64) -> Option<(usize, usize)> {
        let local = (Vec2::new(x, y) - self.origin.position()).rotated(-self.origin.yaw);
        let ix = (local.x / self.resolution).floor();
        let iy = (local.y / self.resolution).floor();
        if ix < 0.0 || iy < 0.0 || ix >= self.width as f64 || iy >= self.height as f64 {
            return None;
        }
        Some((ix as usize, iy as usize))
    }

    /// True when the world point lies inside the grid on a free cell.
    pub fn is_free(&self, x: f64, y: f64) -> bool {
        match self.cell_of(x, y) {
            Some((ix, iy)) => !self.cells[iy * self.width + ix],
            None => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn forward_line_plan_geometry() {
        let p = gen_line_plan(LineDirection::Forward, 0.35, 0.15, 4).unwrap();
        let xs: Vec<f64> = p.steps.iter().map(|s| s.x).collect();
        for (a, b) in xs.iter().zip(&[0.35, 0.70, 1.05, 1.40]) {
            assert!((a - b).abs() < 1e-12);
        }
        let ys: Vec<f64> = p.steps.iter().map(|s| s.y).collect();
        for (a, b) in ys.iter().zip(&[-0.15, 0.15, -0.15, 0.15]) {
            assert!((a - b).abs() < 1e-12);
        }
        assert!(p.steps.iter().all(|s| s.heading == 0.0));
        assert_eq!(p.steps[0].side, Side::Right);
        assert_eq!(p.steps[1].side, Side::Left);
    }

    #[test]
    fn backward_plan_faces_forward() {
        let p = gen_line_plan(LineDirection::Backward, 0.25, 0.12, 2).unwrap();
        assert!((p.steps[0].x + 0.25).abs() < 1e-12);
        assert!((p.steps[1].x + 0.50).abs() < 1e-12);
        assert!(p.steps.iter().all(|s| s.heading == 0.0));
        assert!(p.steps.iter().all(|s| s.y.abs() == 0.12));
        assert_ne!(p.steps[0].side, p.steps[1].side);
    }

    #[test]
    fn single_step_line_plan() {
        let p = gen_line_plan(LineDirection::Forward, 0.35, 0.15, 1).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.steps[0].y.abs(), 0.15);
    }

    #[test]
    fn lateral_plan_geometry() {
        let p = gen_line_plan(LineDirection::LateralLeft, 0.2, 0.1, 3).unwrap();
        for (k, s) in p.steps.iter().enumerate() {
            assert!((s.y - 0.2 * (k + 1) as f64).abs() < 1e-12);
            assert_eq!(s.x.abs(), 0.1);
            assert_eq!(s.heading, 0.0);
        }
        assert_eq!(p.mode, PlanMode::Lateral);
    }

    #[test]
    fn line_plan_rejects_bad_geometry() {
        assert!(gen_line_plan(LineDirection::Forward, 0.0, 0.15, 4).is_err());
        assert!(gen_line_plan(LineDirection::Forward, 0.35, -0.1, 4).is_err());
        assert!(gen_line_plan(LineDirection::Forward, 0.35, 0.15, 0).is_err());
    }

    #[test]
    fn stand_plan_is_single_origin_step() {
        let p = gen_stand();
        assert_eq!(p.len(), 1);
        assert_eq!(p.steps[0], Footstep::ORIGIN);
        assert_eq!(p.mode, PlanMode::Stand);
    }

    #[test]
    fn turn_in_place_circle_layout() {
        let p = gen_turn_in_place(PI / 2.0, PI / 8.0, 0.15).unwrap();
        assert_eq!(p.len(), 4);
        assert!((p.steps[3].heading - PI / 2.0).abs() < 1e-12);
        for s in &p.steps {
            assert!((s.position2().norm() - 0.15).abs() < 1e-12);
        }
        // Headings ramp monotonically.
        for w in p.steps.windows(2) {
            assert!(w[1].heading > w[0].heading);
        }
    }

    #[test]
    fn turn_in_place_clockwise() {
        let p = gen_turn_in_place(-PI / 4.0, -PI / 8.0, 0.12).unwrap();
        assert_eq!(p.len(), 2);
        assert!((p.steps[0].heading + PI / 8.0).abs() < 1e-12);
        assert!((p.steps[1].heading + PI / 4.0).abs() < 1e-12);
        assert_eq!(p.steps[0].side, Side::Right);
    }

    #[test]
    fn zero_turn_degenerates_to_stand() {
        let p = gen_turn_in_place(0.0, PI / 8.0, 0.15).unwrap();
        assert_eq!(p, gen_stand());
    }

    #[test]
    fn turn_rejects_bad_arguments() {
        assert!(gen_turn_in_place(PI / 2.0, 0.0, 0.15).is_err());
        assert!(gen_turn_in_place(PI / 2.0, PI / 4.0, 0.15).is_err());
        assert!(gen_turn_in_place(PI / 2.0, -PI / 8.0, 0.15).is_err());
        assert!(gen_turn_in_place(PI / 2.0, PI / 8.0, 0.0).is_err());
    }

    #[test]
    fn stairs_lift_z_only() {
        let base = gen_line_plan(LineDirection::Forward, 0.35, 0.15, 4).unwrap();
        let up = apply_stairs(&base, 0.10).unwrap();
        for (k, s) in up.steps.iter().enumerate() {
            assert!((s.z - 0.10 * (k + 1) as f64).abs() < 1e-12);
            assert_eq!(s.x, base.steps[k].x);
            assert_eq!(s.y, base.steps[k].y);
        }
        assert_eq!(up.mode, PlanMode::Stairs);

        let same = apply_stairs(&base, 0.0).unwrap();
        assert_eq!(same, base);

        let down = apply_stairs(&base, -0.10).unwrap();
        assert!((down.steps[1].z + 0.20).abs() < 1e-12);
    }

    #[test]
    fn stairs_reject_non_line_plans() {
        assert!(apply_stairs(&gen_stand(), 0.1).is_err());
        let turn = gen_turn_in_place(PI / 4.0, PI / 8.0, 0.15).unwrap();
        assert!(apply_stairs(&turn, 0.1).is_err());
    }

    #[test]
    fn goal_sampling_bounds_and_determinism() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10_000 {
            let g = sample_goal(&mut rng);
            assert_eq!(g.x, 0.0);
            assert!(g.y >= -1.0 && g.y <= 1.0);
            assert!(g.yaw >= -PI / 2.0 && g.yaw <= PI / 2.0);
        }
        let mut a = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut b = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        assert_eq!(sample_goal(&mut a), sample_goal(&mut b));
    }

    #[test]
    fn goal_sampling_mean_matches_box_center() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        let n = 100_000;
        let (mut sy, mut syaw) = (0.0, 0.0);
        for _ in 0..n {
            let g = sample_goal(&mut rng);
            sy += g.y;
            syaw += g.yaw;
        }
        // 3 sigma/sqrt(n) for U(-1,1): sigma = 1/sqrt(3).
        let tol_y = 3.0 / (3.0f64).sqrt() / (n as f64).sqrt();
        let tol_yaw = 3.0 * (PI / 2.0) / (3.0f64).sqrt() / (n as f64).sqrt();
        assert!((sy / n as f64).abs() < tol_y);
        assert!((syaw / n as f64).abs() < tol_yaw);
    }

    #[test]
    fn grid_lookup_respects_origin() {
        let mut g = OccupancyGrid::new(0.5, 4, 4, Pose2::new(-1.0, -1.0, 0.0)).unwrap();
        assert!(g.is_free(0.0, 0.0));
        assert!(!g.is_free(5.0, 0.0));
        g.set(2, 2, true);
        assert!(!g.is_free(0.25, 0.25));
        assert!(g.is_free(-0.25, -0.25));
    }

    proptest! {
        #[test]
        fn line_plans_alternate_sides_and_wrap_headings(
            n in 1usize..30, len in 0.05f64..0.6, spread in 0.05f64..0.3,
            dir in prop::sample::select(vec![
                LineDirection::Forward, LineDirection::Backward,
                LineDirection::LateralLeft, LineDirection::LateralRight])
        ) {
            let p = gen_line_plan(dir, len, spread, n).unwrap();
            for w in p.steps.windows(2) {
                prop_assert_ne!(w[0].side, w[1].side);
            }
            for s in &p.steps {
                prop_assert!(s.heading > -PI && s.heading <= PI);
            }
        }

        #[test]
        fn turn_headings_stay_wrapped(total in 0.01f64..3.0, per in 0.01f64..0.5) {
            let per = per.min(PI / 6.0);
            let p = gen_turn_in_place(total, per, 0.15).unwrap();
            for s in &p.steps {
                prop_assert!(s.heading > -PI && s.heading <= PI);
            }
        }
    }
}
