//! Shape model of the transformable wheel.
//!
//! The wheel consists of `lobe_count` identical lobes coupled to a central
//! servo through four-bar linkages. A single tilt angle describes how far the
//! lobes have opened: tilt 0 is the closed circular wheel, `tilt_max` is the
//! fully expanded legged configuration. The servo-to-tilt coupling is modeled
//! as linear between its calibrated endpoints, and the effective radius is
//! interpolated linearly between the wheeled and legged radii; both mappings
//! are isolated behind [`tilt_from_servo`] and [`effective_radius`] so a
//! measured linkage model can replace them later.

use std::f64::consts::PI;

use thiserror::Error;

/// Errors produced by wheel geometry operations.
#[derive(Debug, Error, PartialEq)]
pub enum GeometryError {
    #[error("servo angle {angle} rad outside calibrated range [0, {max}]")]
    ServoAngleOutOfRange { angle: f64, max: f64 },
    #[error("tilt {tilt} rad outside range [0, {max}]")]
    TiltOutOfRange { tilt: f64, max: f64 },
    #[error("invalid wheel geometry: {0}")]
    Invalid(String),
}

/// A point in the sagittal plane: `x` horizontal (direction of travel),
/// `z` vertical up.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub z: f64,
}

impl Point2 {
    pub fn new(x: f64, z: f64) -> Self {
        Self { x, z }
    }

    pub fn distance(&self, other: Point2) -> f64 {
        ((self.x - other.x).powi(2) + (self.z - other.z).powi(2)).sqrt()
    }

    /// Rotates `self` about `pivot` by `angle` (counterclockwise positive).
    pub fn rotate_about(&self, pivot: Point2, angle: f64) -> Point2 {
        let (s, c) = angle.sin_cos();
        let dx = self.x - pivot.x;
        let dz = self.z - pivot.z;
        Point2::new(pivot.x + c * dx - s * dz, pivot.z + s * dx + c * dz)
    }
}

/// Radii, lobe count, tilt range and lever arms of one transformable wheel.
#[derive(Debug, Clone, PartialEq)]
pub struct WheelGeometry {
    /// Wheel radius in wheeled (closed) mode, m.
    pub r_wheel: f64,
    /// Maximum effective radius in legged (fully open) mode, m.
    pub r_leg: f64,
    /// Wheel-center-to-contact-point length during climbing, m. A step edge
    /// seats in the lobe hook at this distance from the axle; it is a
    /// measured parameter independent of the lobe tip radius.
    pub r_contact: f64,
    /// Maximum servo lever arm (wheel fully closed), m.
    pub l2_max: f64,
    /// Number of identical lobes.
    pub lobe_count: u32,
    /// Maximum lobe tilt, rad.
    pub tilt_max: f64,
    /// Calibrated servo travel that maps onto [0, tilt_max], rad.
    pub servo_max: f64,
}

impl Default for WheelGeometry {
    fn default() -> Self {
        Self {
            r_wheel: 0.095,
            r_leg: 0.150,
            r_contact: 0.132,
            l2_max: 0.065,
            lobe_count: 4,
            tilt_max: PI / 3.0,
            servo_max: PI / 2.0,
        }
    }
}

impl WheelGeometry {
    /// Checks the structural invariants; call after applying config overrides.
    pub fn validate(&self) -> Result<(), GeometryError> {
        if !(self.r_wheel > 0.0 && self.r_wheel < self.r_contact && self.r_contact <= self.r_leg)
        {
            return Err(GeometryError::Invalid(format!(
                "radii must satisfy 0 < r_wheel < r_contact <= r_leg, got {} / {} / {}",
                self.r_wheel, self.r_contact, self.r_leg
            )));
        }
        if self.lobe_count < 2 {
            return Err(GeometryError::Invalid(format!(
                "lobe_count must be >= 2, got {}",
                self.lobe_count
            )));
        }
        if !(self.tilt_max > 0.0 && self.tilt_max <= PI / 2.0) {
            return Err(GeometryError::Invalid(format!(
                "tilt_max must be in (0, pi/2], got {}",
                self.tilt_max
            )));
        }
        if self.l2_max <= 0.0 {
            return Err(GeometryError::Invalid(format!(
                "l2_max must be positive, got {}",
                self.l2_max
            )));
        }
        if self.servo_max <= 0.0 {
            return Err(GeometryError::Invalid(format!(
                "servo_max must be positive, got {}",
                self.servo_max
            )));
        }
        Ok(())
    }

    /// Angular period of the lobe symmetry (2π / lobe_count), rad.
    pub fn lobe_period(&self) -> f64 {
        2.0 * PI / self.lobe_count as f64
    }
}

/// Operating mode of one wheel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WheelMode {
    Wheeled,
    Transforming,
    Legged,
}

/// Rotation phase, lobe tilt and mode of one wheel.
///
/// The mode is derived from the tilt: 0 is `Wheeled`, `tilt_max` is `Legged`,
/// anything strictly between is `Transforming`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WheelState {
    /// Rotation of the wheel about its axle, rad, wrapped to [0, 2π).
    pub phase: f64,
    /// Current lobe opening, rad, in [0, tilt_max].
    pub tilt: f64,
    pub mode: WheelMode,
}

impl WheelState {
    /// Closed wheel at the given phase.
    pub fn wheeled(phase: f64) -> Self {
        Self {
            phase: wrap_phase(phase),
            tilt: 0.0,
            mode: WheelMode::Wheeled,
        }
    }

    /// Wheel at an arbitrary tilt; the mode follows the tilt.
    pub fn with_tilt(phase: f64, tilt: f64, geometry: &WheelGeometry) -> Result<Self, GeometryError> {
        if !(0.0..=geometry.tilt_max).contains(&tilt) {
            return Err(GeometryError::TiltOutOfRange {
                tilt,
                max: geometry.tilt_max,
            });
        }
        let mode = if tilt == 0.0 {
            WheelMode::Wheeled
        } else if tilt == geometry.tilt_max {
            WheelMode::Legged
        } else {
            WheelMode::Transforming
        };
        Ok(Self {
            phase: wrap_phase(phase),
            tilt,
            mode,
        })
    }
}

/// Wraps an angle to [0, 2π).
pub fn wrap_phase(phase: f64) -> f64 {
    phase.rem_euclid(2.0 * PI)
}

/// Maps a servo angle onto a lobe tilt.
///
/// The coupling is linear over the calibrated servo travel: 0 maps to the
/// closed wheel, `servo_max` to the fully open one.
pub fn tilt_from_servo(servo_angle: f64, geometry: &WheelGeometry) -> Result<f64, GeometryError> {
    if !(0.0..=geometry.servo_max).contains(&servo_angle) {
        return Err(GeometryError::ServoAngleOutOfRange {
            angle: servo_angle,
            max: geometry.servo_max,
        });
    }
    Ok(servo_angle / geometry.servo_max * geometry.tilt_max)
}

/// Inverse of [`tilt_from_servo`].
pub fn servo_from_tilt(tilt: f64, geometry: &WheelGeometry) -> Result<f64, GeometryError> {
    if !(0.0..=geometry.tilt_max).contains(&tilt) {
        return Err(GeometryError::TiltOutOfRange {
            tilt,
            max: geometry.tilt_max,
        });
    }
    Ok(tilt / geometry.tilt_max * geometry.servo_max)
}

/// Effective wheel radius at the given lobe tilt.
///
/// Interpolates linearly between the wheeled radius at tilt 0 and the legged
/// radius at `tilt_max`; the endpoints are the only measured constraints.
pub fn effective_radius(tilt: f64, geometry: &WheelGeometry) -> Result<f64, GeometryError> {
    if !(0.0..=geometry.tilt_max).contains(&tilt) {
        return Err(GeometryError::TiltOutOfRange {
            tilt,
            max: geometry.tilt_max,
        });
    }
    let f = tilt / geometry.tilt_max;
    Ok(geometry.r_wheel + f * (geometry.r_leg - geometry.r_wheel))
}

/// Positions of the lobe tips for a wheel centered at `center`.
///
/// Tips are equally spaced by the lobe period and lie at the effective radius
/// for the state's tilt. Tip 0 points straight down at phase 0 and advances
/// toward +x as the phase grows (forward rolling).
pub fn lobe_tip_positions(
    state: &WheelState,
    geometry: &WheelGeometry,
    center: Point2,
) -> Vec<Point2> {
    let tilt = state.tilt.clamp(0.0, geometry.tilt_max);
    let radius = geometry.r_wheel + tilt / geometry.tilt_max * (geometry.r_leg - geometry.r_wheel);
    let period = geometry.lobe_period();
    (0..geometry.lobe_count)
        .map(|k| {
            // Direction angle measured from straight down, positive toward +x.
            let dir = state.phase + k as f64 * period;
            Point2::new(center.x + radius * dir.sin(), center.z - radius * dir.cos())
        })
        .collect()
}
