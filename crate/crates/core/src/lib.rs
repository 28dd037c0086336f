//! Quasi-static simulation and analysis toolkit for an omnidirectional
//! transformable wheel-leg ("wheg") mechanism.
//!
//! The toolkit models a four-wheeled robot whose Mecanum wheels open into
//! four-lobed legs for obstacle climbing. It provides:
//!
//! - [`geometry`]: the transformable wheel's shape as a function of lobe tilt,
//!   including the servo-angle coupling and lobe tip positions.
//! - [`statics`]: quasi-static torque requirements for the drive and servo
//!   motors, plus the current-to-torque conversion used for telemetry.
//! - [`kinematics`]: forward/inverse Mecanum wheel-speed mixing, the lateral
//!   alignment maneuver that equalizes left/right wheel phases, and a slip
//!   model for lateral displacement losses.
//! - [`planner`]: the obstacle-negotiation state machine (square up, align,
//!   transform, climb, reset — front axle then rear axle).
//! - [`sim`]: a 2D sagittal-plane quasi-static climbing simulator with
//!   lobe-tip contact search, pivot-about-contact stepping and torque
//!   telemetry.
//! - [`scenario`]: the sectioned `key = value` scenario config format shared
//!   by the CLI and the simulator.
//!
//! All quantities are SI (meters, radians, seconds, newtons, amperes).

pub mod geometry;
pub mod kinematics;
pub mod planner;
pub mod scenario;
pub mod sim;
pub mod statics;

pub use geometry::{GeometryError, Point2, WheelGeometry, WheelMode, WheelState};
pub use kinematics::{
    AlignmentCommand, BodyTwist, KinematicsError, LateralDirection, WheelSpeeds,
};
pub use planner::{Action, Axle, ClimbPhase, Plan, PlannerError};
pub use scenario::{Scenario, ScenarioError};
pub use sim::{Climbability, ClimbOutcome, LimitingFactor, Obstacle, RobotState, SimError};
pub use statics::{FeasibilityReport, RobotParams, StaticsError};

/// Standard gravity, m/s^2.
pub const GRAVITY: f64 = 9.81;
