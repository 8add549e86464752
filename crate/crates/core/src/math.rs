//! Small numeric helpers shared by the state constructors and series oracles.

use std::f64::consts::{PI, TAU};

/// Odd double factorial (2n - 1)!! as a float; (2·0 - 1)!! = 1.
pub(crate) fn double_factorial_odd(n: usize) -> f64 {
    (1..=n).map(|k| (2 * k - 1) as f64).product()
}

/// Laguerre polynomial L_m(x) by the three-term recurrence.
///
/// Stable for the x <= 0 arguments used by photon-added coherent states
/// (all recurrence terms are then positive).
pub(crate) fn laguerre(m: usize, x: f64) -> f64 {
    if m == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 - x;
    for k in 1..m {
        let next = ((2 * k + 1) as f64 - x) * cur - (k as f64) * prev;
        prev = cur;
        cur = next / (k as f64 + 1.0);
    }
    cur
}

/// Wrap an angle into [0, 2π).
pub(crate) fn wrap_tau(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    if t == TAU {
        0.0
    } else {
        t
    }
}

/// Wrap an angle into [0, π).
pub(crate) fn wrap_pi(theta: f64) -> f64 {
    let t = theta.rem_euclid(PI);
    if t == PI {
        0.0
    } else {
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial_odd(0), 1.0);
        assert_eq!(double_factorial_odd(1), 1.0);
        assert_eq!(double_factorial_odd(2), 3.0);
        assert_eq!(double_factorial_odd(3), 15.0);
        assert_eq!(double_factorial_odd(4), 105.0);
    }

    #[test]
    fn laguerre_known_values() {
        // L_1(x) = 1 - x, L_2(x) = (x^2 - 4x + 2)/2
        assert!((laguerre(1, -0.25) - 1.25).abs() < 1e-15);
        assert!((laguerre(2, -0.25) - (0.0625 + 1.0 + 2.0) / 2.0).abs() < 1e-15);
        assert!((laguerre(3, 0.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn angle_wrapping() {
        assert!((wrap_tau(-0.5) - (TAU - 0.5)).abs() < 1e-15);
        assert_eq!(wrap_tau(TAU), 0.0);
        assert!((wrap_pi(PI + 0.25) - 0.25).abs() < 1e-15);
        assert_eq!(wrap_pi(-PI), 0.0);
    }
}
