//! Mahler measure of the voltage polynomial and the asymptotic law
//! `τ(n) ~ (2 n τ(H) / q) A^n`.

use std::f64::consts::TAU;

use num_bigint::BigUint;
use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::graph::{BigCount, VoltageGraph};
use crate::poly::roots::roots_with_multiplicity;
use crate::poly::IntPoly;
use crate::tau::{biguint_ln, TauFamily};
use crate::voltpoly::VoltagePolyBundle;

/// Closest a root of `R` may come to the unit circle.
pub const UNIT_CIRCLE_MARGIN: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq)]
pub struct MahlerMeasure {
    /// `|a0| Π |z|` over roots of `R` outside the unit circle.
    pub a: f64,
    /// `exp ∫_0^1 log |R(e^{2πit})| dt`.
    pub a_integral: f64,
    /// Roots of `R` with `|z| > 1`, repeated by multiplicity.
    pub roots_outside: Vec<Complex64>,
}

pub fn mahler_measure(bundle: &VoltagePolyBundle) -> Result<MahlerMeasure> {
    let a0 = bundle.a0.magnitude().to_f64().unwrap_or(f64::INFINITY);
    let mut log_a = a0.ln();
    let mut roots_outside = Vec::new();
    for root in roots_with_multiplicity(&bundle.r)? {
        let m = root.value.norm();
        if (m - 1.0).abs() < UNIT_CIRCLE_MARGIN {
            return Err(Error::InvariantViolation(format!(
                "root {} of R lies on the unit circle",
                root.value
            )));
        }
        if m > 1.0 {
            log_a += root.multiplicity as f64 * m.ln();
            roots_outside.extend(std::iter::repeat_n(root.value, root.multiplicity));
        }
    }
    Ok(MahlerMeasure {
        a: log_a.exp(),
        a_integral: log_mahler_integral(&bundle.r)?.exp(),
        roots_outside,
    })
}

/// `∫_0^1 log |R(e^{2πit})| dt` by the periodic trapezoid rule, doubling
/// the node count until two estimates agree to `1e-13`. Because
/// `|P(e^{iθ})| = |e^{iθ} - 1|^2 |R(e^{iθ})|` and the first factor has zero
/// log-integral, this is also the log-integral of `|P|`.
pub fn log_mahler_integral(r: &IntPoly) -> Result<f64> {
    let estimate = |m: usize| -> f64 {
        (0..m)
            .map(|k| {
                let z = Complex64::from_polar(1.0, TAU * k as f64 / m as f64);
                r.eval_complex(z).norm().ln()
            })
            .sum::<f64>()
            / m as f64
    };
    let mut m = 64;
    let mut prev = estimate(m);
    while m < 1 << 22 {
        m *= 2;
        let next = estimate(m);
        if (next - prev).abs() <= 1e-13 * next.abs().max(1.0) {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::NumericInstability(
        "log-integral of |R| on the unit circle did not converge".into(),
    ))
}

#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticProfile {
    pub a: f64,
    /// `|P''(1)|`.
    pub q: BigUint,
    pub tau_h: BigCount,
    /// Thermodynamic limit `lim log τ(n) / n`.
    pub log_a: f64,
    pub a_integral: f64,
    pub roots_outside: Vec<Complex64>,
}

impl AsymptoticProfile {
    pub fn new(fam: &TauFamily) -> Result<Self> {
        let b = fam.bundle();
        let m = mahler_measure(b)?;
        Ok(Self {
            a: m.a,
            q: b.p_dd_1.magnitude().clone(),
            tau_h: fam.tau_h().clone(),
            log_a: m.a.ln(),
            a_integral: m.a_integral,
            roots_outside: m.roots_outside,
        })
    }

    /// `log((2 n τ(H) / q) A^n)`.
    pub fn log_estimate(&self, n: u64) -> f64 {
        (2.0 * n as f64).ln() + biguint_ln(&self.tau_h) - biguint_ln(&self.q)
            + n as f64 * self.log_a
    }

    pub fn estimate(&self, n: u64) -> f64 {
        self.log_estimate(n).exp()
    }
}

pub fn asymptotic_estimate(g: &VoltageGraph, n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidN(n));
    }
    Ok(AsymptoticProfile::new(&TauFamily::new(g)?)?.estimate(n))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConvergenceRow {
    pub n: u64,
    /// `τ(n)` over the asymptotic estimate.
    pub ratio: f64,
    /// `log τ(n) / n - log A`.
    pub log_gap: f64,
}

pub fn convergence_report(fam: &TauFamily, n_max: u64) -> Result<Vec<ConvergenceRow>> {
    if n_max < 2 {
        return Err(Error::InvalidN(n_max));
    }
    let profile = AsymptoticProfile::new(fam)?;
    Ok(fam
        .exact_table(n_max)?
        .into_iter()
        .map(|t| {
            let ln_tau = biguint_ln(&t.value);
            ConvergenceRow {
                n: t.n,
                ratio: (ln_tau - profile.log_estimate(t.n)).exp(),
                log_gap: ln_tau / t.n as f64 - profile.log_a,
            }
        })
        .collect())
}
