//! Footstep-plan-driven bipedal locomotion RL toolkit.
//!
//! The crate is organized around a footstep-plan DSL ([`plan`]), gait-cycle
//! timing ([`gait`]), a composable reward function ([`reward`]), episode
//! orchestration ([`task`]), a planar biped simulator plus a scripted 3D
//! walking oracle ([`sim`]), and a PPO learner with a mirror-symmetry
//! auxiliary loss ([`learn`]). [`eval`] holds the robustness sweeps and
//! report types consumed by the CLI.

pub mod config;
pub mod eval;
pub mod gait;
pub mod geom;
pub mod learn;
pub mod logging;
pub mod plan;
pub mod reward;
pub mod rng;
pub mod sim;
pub mod task;
