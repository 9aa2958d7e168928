//! Modified Bessel functions of the second kind for integer orders.
//!
//! `K_0` and `K_1` are evaluated directly (ascending series for small
//! arguments, a continued fraction for large ones) and higher orders are
//! obtained by upward recurrence, which is stable for `K_n`.

use thiserror::Error;

mod fixtures;
pub use fixtures::BESSEL_K_FIXTURES;

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Largest supported order.
pub const MAX_ORDER: u32 = 64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BesselError {
    #[error("bessel_k requires x > 0, got {0}")]
    NonPositiveArgument(f64),
    #[error("order {0} exceeds the supported maximum {MAX_ORDER}")]
    OrderTooLarge(u32),
    #[error("K_{order}({argument}) overflows f64")]
    Overflow { order: u32, argument: f64 },
    #[error("series form requires order >= 2, got {0}")]
    OrderTooSmall(u32),
    #[error("series form is restricted to 0 < x <= 0.5, got {0}")]
    OutsideSeriesWindow(f64),
}

/// K_0 and K_1 via the ascending series, valid (and fully accurate) for
/// 0 < x <= 2.
///
/// K_0(x) = -(ln(x/2)+γ) I_0(x) + Σ_{k≥1} H_k u^k / (k!)²
/// K_1(x) = 1/x + ln(x/2) I_1(x) - (x/4) Σ_{k≥0} (H_k + H_{k+1} - 2γ) u^k / (k!(k+1)!)
///
/// with u = x²/4 and H_k the k-th harmonic number.
fn k0_k1_series(x: f64) -> (f64, f64) {
    let u = x * x / 4.0;
    let log_half_x = (x / 2.0).ln();

    let mut i0 = 1.0;
    let mut i1_sum = 1.0; // I_1(x) = (x/2) * Σ u^k/(k!(k+1)!)
    let mut k0_sum = 0.0;
    let mut k1_sum = 2.0 * -EULER_GAMMA + 1.0; // k = 0 term: H_0 + H_1 - 2γ
    let mut term0 = 1.0; // u^k/(k!)^2
    let mut term1 = 1.0; // u^k/(k!(k+1)!)
    let mut harmonic = 0.0;
    for k in 1..200u32 {
        let kf = f64::from(k);
        term0 *= u / (kf * kf);
        term1 *= u / (kf * (kf + 1.0));
        harmonic += 1.0 / kf;
        i0 += term0;
        i1_sum += term1;
        k0_sum += harmonic * term0;
        k1_sum += (2.0 * (harmonic - EULER_GAMMA) + 1.0 / (kf + 1.0)) * term1;
        if term0 < 1e-18 * i0 {
            break;
        }
    }
    let i1 = (x / 2.0) * i1_sum;
    let k0 = -(log_half_x + EULER_GAMMA) * i0 + k0_sum;
    let k1 = 1.0 / x + log_half_x * i1 - (x / 4.0) * k1_sum;
    (k0, k1)
}

/// K_0 and K_1 for x > 2 by Steed's continued fraction (CF2) at order zero.
fn k0_k1_cf(x: f64) -> (f64, f64) {
    const EPS: f64 = 1e-16;
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut h = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..10_000u32 {
        a -= 2.0 * f64::from(i - 1);
        c = -a * c / f64::from(i);
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < EPS {
            break;
        }
    }
    h = a1 * h;
    let k0 = (std::f64::consts::PI / (2.0 * x)).sqrt() * (-x).exp() / s;
    let k1 = k0 * (x + 0.5 - h) / x;
    (k0, k1)
}

fn k0_k1(x: f64) -> (f64, f64) {
    if x <= 2.0 {
        k0_k1_series(x)
    } else {
        k0_k1_cf(x)
    }
}

/// Modified Bessel function of the second kind, K_n(x), for integer n >= 0
/// and x > 0.
///
/// Relative accuracy is better than 1e-9 over the fixture grid
/// (see [`BESSEL_K_FIXTURES`]). Overflow at large order / small argument is
/// reported as an error rather than returned as infinity.
pub fn bessel_k(n: u32, x: f64) -> Result<f64, BesselError> {
    if !(x > 0.0) {
        return Err(BesselError::NonPositiveArgument(x));
    }
    if n > MAX_ORDER {
        return Err(BesselError::OrderTooLarge(n));
    }
    let (k0, k1) = k0_k1(x);
    if n == 0 {
        return Ok(k0);
    }
    let mut prev = k0;
    let mut cur = k1;
    for i in 1..n {
        let next = prev + (2.0 * f64::from(i) / x) * cur;
        if !next.is_finite() {
            return Err(BesselError::Overflow {
                order: i + 1,
                argument: x,
            });
        }
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Truncated small-argument expansion of x^n K_n(x) for n >= 2, valid on
/// 0 < x <= 0.5.
///
/// For n = 2 the expansion carries a logarithm,
/// x² K_2(x) = (4 - x²)/2 + (x⁴/8)(-ln(x/2) - c0) with c0 = γ - 3/4;
/// for n >= 3 only the finite polynomial part is kept.
pub fn bessel_k_small_x_series(n: u32, x: f64) -> Result<f64, BesselError> {
    if n < 2 {
        return Err(BesselError::OrderTooSmall(n));
    }
    if n > MAX_ORDER {
        return Err(BesselError::OrderTooLarge(n));
    }
    if !(x > 0.0 && x <= 0.5) {
        return Err(BesselError::OutsideSeriesWindow(x));
    }
    if n == 2 {
        let c0 = EULER_GAMMA - 0.75;
        return Ok(0.5 * (4.0 - x * x) + x.powi(4) / 8.0 * (-(x / 2.0).ln() - c0));
    }
    // (1/2) Σ_{l=0}^{n-1} (-1)^l (n-l-1)!/l! x^{2l} 2^{n-2l}
    let mut sum = 0.0;
    let mut sign = 1.0;
    for l in 0..n {
        let coeff = factorial(n - l - 1) / factorial(l);
        sum += sign * coeff * x.powi(2 * l as i32) * 2f64.powi(n as i32 - 2 * l as i32);
        sign = -sign;
    }
    Ok(0.5 * sum)
}

pub(crate) fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn k1_of_two_matches_oracle() {
        let v = bessel_k(1, 2.0).unwrap();
        assert!((v - 0.13986588181652).abs() <= 1e-10, "got {v}");
    }

    #[test]
    fn three_term_recurrence_at_one() {
        let k1 = bessel_k(1, 1.0).unwrap();
        let k2 = bessel_k(2, 1.0).unwrap();
        let k3 = bessel_k(3, 1.0).unwrap();
        let resid = (k3 - k1 - 4.0 * k2).abs();
        assert!(resid <= 1e-10 * k3, "residual {resid}");
    }

    #[test]
    fn decays_exponentially() {
        assert!(bessel_k(0, 50.0).unwrap() < 1e-20);
    }

    #[test]
    fn matches_precomputed_fixtures() {
        for &(n, x, expected) in BESSEL_K_FIXTURES {
            let v = bessel_k(n, x).unwrap();
            let rel = ((v - expected) / expected).abs();
            assert!(rel <= 1e-9, "K_{n}({x}): got {v}, want {expected}, rel {rel:.3e}");
        }
    }

    #[test]
    fn recurrence_residual_on_fixture_grid() {
        for &(n, x, _) in BESSEL_K_FIXTURES {
            if n == 0 || n >= MAX_ORDER {
                continue;
            }
            let lo = bessel_k(n - 1, x).unwrap();
            let mid = bessel_k(n, x).unwrap();
            let hi = bessel_k(n + 1, x).unwrap();
            let resid = (hi - lo - (2.0 * f64::from(n) / x) * mid).abs();
            assert!(resid <= 1e-10 * hi, "K_{n}({x}) residual {resid:.3e}");
        }
    }

    #[test]
    fn large_argument_asymptotics() {
        for n in [0u32, 1, 2, 5] {
            for x in [40.0, 45.0, 50.0] {
                let v = bessel_k(n, x).unwrap();
                let scaled = v * x.exp() * (2.0 * x / std::f64::consts::PI).sqrt();
                // leading asymptotic with its first correction term
                let mu = 4.0 * f64::from(n * n);
                let expected = 1.0 + (mu - 1.0) / (8.0 * x);
                let second = (mu - 1.0) * (mu - 9.0) / (2.0 * (8.0 * x).powi(2));
                assert!((scaled - expected).abs() < 1e-3 + 2.0 * second.abs(),
                    "n={n} x={x} scaled={scaled} expected={expected}");
            }
        }
    }

    #[test]
    fn small_x_series_cross_checks() {
        for n in 2..=8u32 {
            for &x in &[0.005, 0.01, 0.02, 0.05] {
                let series = bessel_k_small_x_series(n, x).unwrap();
                let full = x.powi(n as i32) * bessel_k(n, x).unwrap();
                let rel = ((series - full) / full).abs();
                assert!(rel <= 1e-6, "n={n} x={x} rel={rel:.3e}");
            }
        }
    }

    #[test]
    fn small_x_series_limit_is_power_of_two_factorial() {
        // At x -> 0 only the l = 0 term survives: 2^{n-1} (n-1)!.
        let v = bessel_k_small_x_series(3, 1e-8).unwrap();
        assert!((v - 8.0).abs() < 1e-6);
        let v = bessel_k_small_x_series(5, 1e-8).unwrap();
        assert!((v - 16.0 * 24.0).abs() < 1e-4);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(bessel_k(1, 0.0), Err(BesselError::NonPositiveArgument(_))));
        assert!(matches!(bessel_k(1, -1.0), Err(BesselError::NonPositiveArgument(_))));
        assert!(matches!(bessel_k(65, 1.0), Err(BesselError::OrderTooLarge(65))));
        assert!(matches!(bessel_k_small_x_series(1, 0.1), Err(BesselError::OrderTooSmall(1))));
        assert!(matches!(bessel_k_small_x_series(3, 0.7), Err(BesselError::OutsideSeriesWindow(_))));
    }

    #[test]
    fn overflow_is_signaled() {
        assert!(matches!(
            bessel_k(64, 1e-4),
            Err(BesselError::Overflow { .. })
        ));
    }

    proptest! {
        #[test]
        fn positive_and_decreasing_in_x(n in 0u32..12, x in 1e-3f64..40.0) {
            let v = bessel_k(n, x).unwrap();
            let v2 = bessel_k(n, x * 1.05).unwrap();
            prop_assert!(v > 0.0);
            prop_assert!(v2 < v);
        }

        #[test]
        fn recurrence_residual_everywhere(n in 1u32..20, x in 0.05f64..30.0) {
            let lo = bessel_k(n - 1, x).unwrap();
            let mid = bessel_k(n, x).unwrap();
            let hi = bessel_k(n + 1, x).unwrap();
            let resid = (hi - lo - (2.0 * f64::from(n) / x) * mid).abs();
            prop_assert!(resid <= 1e-10 * hi);
        }
    }
}
