//! Numeric roots of exact polynomials.
//!
//! The exact polynomial is split into squarefree factors first (Yun's
//! algorithm over the rationals), so every numeric solve sees simple roots.

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::{IntPoly, RatPoly};
use crate::error::{Error, Result};

/// A numeric root and its multiplicity in the exact polynomial.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Root {
    pub value: Complex64,
    pub multiplicity: usize,
}

/// `[(g_1, 1), (g_2, 2), ...]` with `f = c * prod g_i^i`, each `g_i` monic
/// and squarefree. Factors equal to 1 are omitted.
pub fn squarefree_decomposition(f: &RatPoly) -> Vec<(RatPoly, usize)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let (mut b, _) = f.div_rem(&a0).expect("gcd is nonzero");
    let (c, _) = df.div_rem(&a0).expect("gcd is nonzero");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        let (nb, _) = b.div_rem(&a).expect("gcd is nonzero");
        let (c, _) = d.div_rem(&a).expect("gcd is nonzero");
        b = nb;
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

/// Simple roots of a squarefree polynomial from companion-matrix
/// eigenvalues, each refined by Newton steps.
pub fn simple_roots(f: &RatPoly) -> Result<Vec<Complex64>> {
    let monic = f.monic();
    let Some(d) = monic.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    if d == 0 {
        return Ok(Vec::new());
    }
    let coeffs: Vec<f64> = monic
        .coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::NAN))
        .collect();
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::NumericInstability(
            "coefficients do not fit in f64".into(),
        ));
    }
    let companion = DMatrix::from_fn(d, d, |i, j| {
        if j == d - 1 {
            -coeffs[i]
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    let eig = companion.complex_eigenvalues();
    let deriv = monic.derivative();
    let scale: f64 = coeffs.iter().map(|c| c.abs()).sum();
    let mut roots = Vec::with_capacity(d);
    for z0 in eig.iter() {
        let mut z = Complex64::new(z0.re, z0.im);
        for _ in 0..3 {
            let fz = monic.eval_complex(z);
            let dz = deriv.eval_complex(z);
            if dz.norm() == 0.0 {
                break;
            }
            let step = fz / dz;
            z -= step;
            if step.norm() <= 1e-17 * z.norm().max(1.0) {
                break;
            }
        }
        let dz = deriv.eval_complex(z);
        if dz.norm() < 1e-8 * scale * z.norm().max(1.0).powi(d as i32 - 1) {
            return Err(Error::NumericInstability(format!(
                "ill-conditioned root {z} (|f'| = {:.3e})",
                dz.norm()
            )));
        }
        roots.push(z);
    }
    Ok(roots)
}

/// All roots of an exact integer polynomial, grouped by multiplicity.
pub fn roots_with_multiplicity(f: &IntPoly) -> Result<Vec<Root>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (factor, multiplicity) in squarefree_decomposition(&f.to_rat()) {
        for value in simple_roots(&factor)? {
            out.push(Root {
                value,
                multiplicity,
            });
        }
    }
    debug_assert_eq!(
        out.iter().map(|r| r.multiplicity).sum::<usize>(),
        f.degree().unwrap_or(0)
    );
    Ok(out)
}

/// Largest `|f(root)| / sum|coeffs|` over the given roots; a residual check
/// for callers that want one.
pub fn max_relative_residual(f: &IntPoly, roots: &[Root]) -> f64 {
    let scale: f64 = f
        .coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::INFINITY).abs())
        .sum();
    roots
        .iter()
        .map(|r| f.eval_complex(r.value).norm() / (scale * r.value.norm().max(1.0).powi(f.degree().unwrap_or(0) as i32)))
        .fold(0.0, f64::max)
}
