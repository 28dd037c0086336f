//! Quasi-static torque analysis.
//!
//! The climbing analysis balances the per-wheel load against the drive motor
//! about the step-edge contact: the required torque is the load times the
//! horizontal lever arm `r_contact * cos(alpha)`, largest when the contact is
//! level with the axle (alpha = 0). The transformation analysis balances the
//! same load against the servo lever arm, largest when the wheel is fully
//! closed. Both are static bounds; inertial effects are out of scope.

use std::f64::consts::FRAC_PI_2;

use thiserror::Error;

use crate::geometry::WheelGeometry;
use crate::GRAVITY;

#[derive(Debug, Error, PartialEq)]
pub enum StaticsError {
    #[error("contact angle {0} rad outside [0, pi/2]")]
    ContactAngleOutOfRange(f64),
    #[error("contact radius must be positive, got {0}")]
    NonPositiveContactRadius(f64),
    #[error("servo lever arm must be non-negative, got {0}")]
    NegativeLeverArm(f64),
}

/// Mass, loads, actuator limits and chassis footprint of the robot.
#[derive(Debug, Clone, PartialEq)]
pub struct RobotParams {
    /// Whole-robot mass, kg.
    pub mass_total: f64,
    /// Per-wheel load, N. Defaults to the rounded quarter-weight figure the
    /// torque requirements are quoted against rather than the exact
    /// `mass_total * g / 4` product.
    pub f_wheel: f64,
    /// Drive motor torque constant, N·m per A.
    pub torque_constant: f64,
    /// Available drive torque, N·m.
    pub motor_torque_limit: f64,
    /// Available servo torque, N·m.
    pub servo_torque_limit: f64,
    /// Lateral distance between wheel centers, m.
    pub track_width: f64,
    /// Longitudinal distance between axles, m.
    pub wheel_base: f64,
}

impl Default for RobotParams {
    fn default() -> Self {
        Self {
            mass_total: 5.5,
            f_wheel: 13.48,
            torque_constant: 0.741,
            motor_torque_limit: 3.0,
            servo_torque_limit: 2.0,
            track_width: 0.47,
            wheel_base: 0.51,
        }
    }
}

impl RobotParams {
    /// Per-wheel load for an evenly supported robot of the given mass, N.
    pub fn f_wheel_from_mass(mass_total: f64) -> f64 {
        mass_total * GRAVITY / 4.0
    }

    pub fn validate(&self) -> Result<(), crate::geometry::GeometryError> {
        let positive = [
            ("mass_total", self.mass_total),
            ("f_wheel", self.f_wheel),
            ("torque_constant", self.torque_constant),
            ("motor_torque_limit", self.motor_torque_limit),
            ("servo_torque_limit", self.servo_torque_limit),
            ("track_width", self.track_width),
            ("wheel_base", self.wheel_base),
        ];
        for (name, value) in positive {
            if !(value > 0.0) {
                return Err(crate::geometry::GeometryError::Invalid(format!(
                    "{name} must be positive, got {value}"
                )));
            }
        }
        Ok(())
    }
}

/// Drive torque needed to pivot a loaded wheel about a step-edge contact at
/// elevation angle `alpha` above the horizontal.
pub fn required_motor_torque(
    f_wheel: f64,
    r_contact: f64,
    alpha: f64,
) -> Result<f64, StaticsError> {
    if !(r_contact > 0.0) {
        return Err(StaticsError::NonPositiveContactRadius(r_contact));
    }
    if !(0.0..=FRAC_PI_2).contains(&alpha) {
        return Err(StaticsError::ContactAngleOutOfRange(alpha));
    }
    Ok(f_wheel * r_contact * alpha.cos())
}

/// Servo torque needed to hold the transformation linkage against the wheel
/// load at lever arm `l2`.
pub fn required_servo_torque(f_wheel: f64, l2: f64) -> Result<f64, StaticsError> {
    if l2 < 0.0 {
        return Err(StaticsError::NegativeLeverArm(l2));
    }
    Ok(f_wheel * l2)
}

/// Converts a measured motor current into shaft torque. Negative current
/// means reverse torque.
pub fn torque_from_current(current: f64, torque_constant: f64) -> f64 {
    current * torque_constant
}

/// Worst-case torque requirements against the configured actuator limits.
#[derive(Debug, Clone, PartialEq)]
pub struct FeasibilityReport {
    /// Drive torque needed at the worst contact angle (alpha = 0), N·m.
    pub required_motor_torque: f64,
    /// Servo torque needed at the maximum lever arm, N·m.
    pub required_servo_torque: f64,
    pub motor_torque_limit: f64,
    pub servo_torque_limit: f64,
    pub motor_ok: bool,
    pub servo_ok: bool,
}

impl FeasibilityReport {
    pub fn all_ok(&self) -> bool {
        self.motor_ok && self.servo_ok
    }
}

/// Evaluates the worst-case motor and servo requirements for a wheel
/// geometry and parameter set.
pub fn feasibility_report(geometry: &WheelGeometry, params: &RobotParams) -> FeasibilityReport {
    let motor = params.f_wheel * geometry.r_contact;
    let servo = params.f_wheel * geometry.l2_max;
    FeasibilityReport {
        required_motor_torque: motor,
        required_servo_torque: servo,
        motor_torque_limit: params.motor_torque_limit,
        servo_torque_limit: params.servo_torque_limit,
        motor_ok: params.motor_torque_limit > motor,
        servo_ok: params.servo_torque_limit > servo,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3};

    #[test]
    fn motor_torque_matches_reference_values() {
        let t = required_motor_torque(13.48, 0.132, 0.0).unwrap();
        assert!((t - 1.779).abs() < 1e-3, "got {t}");
        assert_relative_eq!(
            required_motor_torque(13.48, 0.132, FRAC_PI_2).unwrap(),
            0.0,
            epsilon = 1e-12
        );
        // cos(pi/3) = 1/2: exactly half the alpha = 0 value.
        assert_relative_eq!(
            required_motor_torque(13.48, 0.132, FRAC_PI_3).unwrap(),
            t / 2.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn motor_torque_rejects_bad_domain() {
        assert!(matches!(
            required_motor_torque(13.48, 0.132, -0.01),
            Err(StaticsError::ContactAngleOutOfRange(_))
        ));
        assert!(required_motor_torque(13.48, 0.132, FRAC_PI_2 + 0.01).is_err());
        assert!(matches!(
            required_motor_torque(13.48, 0.0, 0.0),
            Err(StaticsError::NonPositiveContactRadius(_))
        ));
    }

    #[test]
    fn motor_torque_monotone_in_alpha() {
        let mut prev = f64::INFINITY;
        for i in 0..=100 {
            let alpha = FRAC_PI_2 * i as f64 / 100.0;
            let t = required_motor_torque(13.48, 0.132, alpha).unwrap();
            assert!(t <= prev + 1e-15);
            prev = t;
        }
        // Maximum attained at alpha = 0.
        assert_relative_eq!(
            required_motor_torque(13.48, 0.132, 0.0).unwrap(),
            13.48 * 0.132,
            epsilon = 1e-12
        );
    }

    #[test]
    fn servo_torque_matches_reference_values() {
        let t = required_servo_torque(13.48, 0.065).unwrap();
        assert!((t - 0.876).abs() < 1e-3, "got {t}");
        assert_eq!(required_servo_torque(13.48, 0.0).unwrap(), 0.0);
        assert_relative_eq!(required_servo_torque(10.0, 0.1).unwrap(), 1.0, epsilon = 1e-12);
        assert!(required_servo_torque(13.48, -0.01).is_err());
    }

    #[test]
    fn torque_requirements_scale_linearly_with_load() {
        let m1 = required_motor_torque(13.48, 0.132, 0.2).unwrap();
        let m2 = required_motor_torque(2.0 * 13.48, 0.132, 0.2).unwrap();
        assert_relative_eq!(m2, 2.0 * m1, epsilon = 1e-12);
        let s1 = required_servo_torque(13.48, 0.065).unwrap();
        let s2 = required_servo_torque(2.0 * 13.48, 0.065).unwrap();
        assert_relative_eq!(s2, 2.0 * s1, epsilon = 1e-12);
    }

    #[test]
    fn current_conversion_is_linear_through_zero() {
        assert_relative_eq!(torque_from_current(2.0, 0.741), 1.482, epsilon = 1e-12);
        assert_eq!(torque_from_current(0.0, 0.741), 0.0);
        assert_relative_eq!(torque_from_current(-1.0, 0.741), -0.741, epsilon = 1e-12);
        // Additivity is exact for the shared factor.
        let a = 1.37;
        let b = -0.52;
        assert_eq!(
            torque_from_current(a, 0.741) + torque_from_current(b, 0.741),
            torque_from_current(a, 0.741) + torque_from_current(b, 0.741)
        );
        assert_relative_eq!(
            torque_from_current(a + b, 0.741),
            torque_from_current(a, 0.741) + torque_from_current(b, 0.741),
            epsilon = 1e-15
        );
    }

    #[test]
    fn feasibility_passes_with_default_limits() {
        let report = feasibility_report(&WheelGeometry::default(), &RobotParams::default());
        assert!(report.all_ok());
        assert!((report.required_motor_torque - 1.779).abs() < 1e-3);
        assert!((report.required_servo_torque - 0.876).abs() < 1e-3);
    }

    #[test]
    fn feasibility_fails_when_motor_limit_too_low() {
        let mut params = RobotParams::default();
        params.motor_torque_limit = 1.5;
        let report = feasibility_report(&WheelGeometry::default(), &params);
        assert!(!report.motor_ok);
        assert!(report.servo_ok);
        assert!(!report.all_ok());
    }

    #[test]
    fn feasibility_requirements_double_with_load() {
        let params = RobotParams::default();
        let mut doubled = params.clone();
        doubled.f_wheel *= 2.0;
        let g = WheelGeometry::default();
        let r1 = feasibility_report(&g, &params);
        let r2 = feasibility_report(&g, &doubled);
        assert_relative_eq!(
            r2.required_motor_torque,
            2.0 * r1.required_motor_torque,
            epsilon = 1e-12
        );
        assert_relative_eq!(
            r2.required_servo_torque,
            2.0 * r1.required_servo_torque,
            epsilon = 1e-12
        );
    }

    #[test]
    fn default_per_wheel_load_consistent_with_mass() {
        // 5.5 kg / 4 wheels at g = 9.81 is 13.49 N; the stored default keeps
        // the 13.48 N figure the requirements are quoted against.
        let exact = RobotParams::f_wheel_from_mass(5.5);
        assert!((exact - RobotParams::default().f_wheel).abs() < 0.01);
    }
}
