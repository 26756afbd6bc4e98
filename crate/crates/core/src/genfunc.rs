//! The generating function `F(x) = Σ τ(n) x^n` as an exact rational
//! function, its symmetry, and its form in `u = (a0 x + 1/(a0 x)) / 2`.

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::graph::VoltageGraph;
use crate::linalg::{nullspace_vector, RatMatrix};
use crate::poly::roots::roots_with_multiplicity;
use crate::poly::{rational_reconstruct, IntPoly, RatPoly, RationalFunction};
use crate::tau::TauFamily;

/// Largest denominator-degree bound attempted by default (`s <= 5`).
pub const DEFAULT_BOUND_CAP: usize = 512;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenFuncResult {
    pub f: RationalFunction,
    /// Series coefficients `τ(1..=verified_terms)` the fit reproduces.
    pub verified_terms: usize,
    pub symmetry_ok: bool,
    /// Degree bound `B = 2^{2s-1}` used for both numerator and denominator.
    pub bound: usize,
}

/// `2^{2s-1}`, the denominator-degree bound for half-degree `s`.
pub fn degree_bound(s: usize) -> Option<usize> {
    1usize.checked_shl((2 * s).checked_sub(1)? as u32)
}

pub fn generating_function(g: &VoltageGraph) -> Result<GenFuncResult> {
    generating_function_for(&TauFamily::new(g)?, DEFAULT_BOUND_CAP)
}

pub fn generating_function_for(fam: &TauFamily, cap: usize) -> Result<GenFuncResult> {
    let b = fam.bundle();
    let bound = degree_bound(b.s).unwrap_or(usize::MAX);
    if bound > cap {
        return Err(Error::DegreeCapExceeded { bound, cap });
    }
    let terms = 2 * bound + 6;
    let f = reconstruct(fam, bound, terms)?;
    let symmetry_ok = symmetry_holds(&f, &b.a0)?;
    Ok(GenFuncResult {
        f,
        verified_terms: terms,
        symmetry_ok,
        bound,
    })
}

fn reconstruct(fam: &TauFamily, bound: usize, terms: usize) -> Result<RationalFunction> {
    let table = fam.exact_table(terms as u64)?;
    let mut series = vec![BigRational::from_integer(BigInt::from(0))];
    series.extend(table.into_iter().map(|t| to_rational(t.value)));
    rational_reconstruct(&series, bound, bound).map_err(|e| match e {
        Error::NoFit => Error::InvariantViolation(format!(
            "no rational fit of degree <= {bound} for {terms} series terms"
        )),
        other => other,
    })
}

fn to_rational(v: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from_biguint(Sign::Plus, v))
}

/// Refits with four more terms and reports whether the same `F` comes back.
pub fn reconstruction_stable(fam: &TauFamily, result: &GenFuncResult) -> Result<bool> {
    let again = reconstruct(fam, result.bound, result.verified_terms + 4)?;
    Ok(again == result.f)
}

/// First `n` Taylor coefficients of `f` at 0, the coefficient of `x^0` first.
pub fn series_expand(f: &RationalFunction, n: usize) -> Result<Vec<BigRational>> {
    f.series(n)
}

/// `Φ(y) = F(y / a0)`; the symmetry statement is `Φ(y) = Φ(1/y)`.
fn normalized(f: &RationalFunction, a0: &BigInt) -> Result<RationalFunction> {
    f.scale_variable(&BigRational::new(BigInt::one(), a0.clone()))
}

/// Exact check of `F(y / a0) = F(1 / (a0 y))`.
pub fn symmetry_holds(f: &RationalFunction, a0: &BigInt) -> Result<bool> {
    let phi = normalized(f, a0)?;
    Ok(phi.invert_variable()? == phi)
}

/// `Σ_j c_j num^j den^{m-j}`, i.e. `den^m · C(num/den)` for `m >= deg C`.
fn homogenize(c: &IntPoly, m: usize, num: &IntPoly, den: &IntPoly) -> IntPoly {
    let mut out = IntPoly::zero();
    for (j, cj) in c.coeffs().iter().enumerate() {
        let mut term = IntPoly::constant(cj.clone());
        for _ in 0..j {
            term = &term * num;
        }
        for _ in j..m {
            term = &term * den;
        }
        out = &out + &term;
    }
    out
}

/// `F(x)` from its form `U(u)` with `u = (a0 x + 1/(a0 x)) / 2`.
pub fn from_u_form(u_form: &RationalFunction, a0: &BigInt) -> Result<RationalFunction> {
    let m = u_form.num().degree().unwrap_or(0).max(u_form.den().degree().unwrap_or(0));
    // u = (a0^2 x^2 + 1) / (2 a0 x)
    let un = IntPoly::new(vec![BigInt::one(), BigInt::from(0), a0 * a0]);
    let ud = IntPoly::new(vec![BigInt::from(0), BigInt::from(2) * a0]);
    RationalFunction::new(
        homogenize(u_form.num(), m, &un, &ud),
        homogenize(u_form.den(), m, &un, &ud),
    )
}

/// Rewrites `F` as a rational function of `u = (a0 x + 1/(a0 x)) / 2` by
/// solving `A(u) D(y) = C(u) N(y)` for the least degree that admits a
/// solution, with `N / D = F(y / a0)`.
pub fn to_u_form(f: &RationalFunction, a0: &BigInt) -> Result<RationalFunction> {
    let phi = normalized(f, a0)?;
    let (n, d) = (phi.num(), phi.den());
    let k = n.degree().unwrap_or(0).max(d.degree().unwrap_or(0));
    let un = IntPoly::from_i64(&[1, 0, 1]);
    let ud = IntPoly::from_i64(&[0, 2]);
    for m in 0..=k {
        let basis: Vec<IntPoly> = (0..=m)
            .map(|j| homogenize(&IntPoly::monomial(BigInt::one(), j), m, &un, &ud))
            .collect();
        let cols: Vec<IntPoly> = basis
            .iter()
            .map(|b| b * d)
            .chain(basis.iter().map(|b| -&(b * n)))
            .collect();
        let rows = 2 * m + k + 1;
        let a: RatMatrix = (0..rows)
            .map(|i| {
                cols.iter()
                    .map(|c| BigRational::from_integer(c.coeff(i)))
                    .collect()
            })
            .collect();
        let Some(v) = nullspace_vector(&a, cols.len()) else {
            continue;
        };
        let num = RatPoly::new(v[..=m].to_vec());
        let den = RatPoly::new(v[m + 1..].to_vec());
        if den.is_zero() {
            continue;
        }
        let u = RationalFunction::from_rat(&num, &den)?;
        if from_u_form(&u, a0)? == *f {
            return Ok(u);
        }
    }
    Err(Error::InvariantViolation(
        "generating function has no form in u".into(),
    ))
}

/// Worst relative distance from a pole modulus of `F` to the nearest
/// `1 / (|a0| |ξ_S|)`, `ξ_S` ranging over subset products of the roots of
/// `R` counted with multiplicity.
pub fn pole_modulus_deviation(f: &RationalFunction, fam: &TauFamily) -> Result<f64> {
    let b = fam.bundle();
    let a0 = b.a0.abs().to_f64().unwrap_or(f64::INFINITY);
    let mut xi = Vec::new();
    for root in roots_with_multiplicity(&b.r)? {
        xi.extend(std::iter::repeat_n(root.value.norm(), root.multiplicity));
    }
    let mut products = vec![1.0f64];
    for x in &xi {
        let more: Vec<f64> = products.iter().map(|p| p * x).collect();
        products.extend(more);
    }
    let targets: Vec<f64> = products.iter().map(|p| 1.0 / (a0 * p)).collect();
    let mut worst = 0.0f64;
    for pole in roots_with_multiplicity(f.den())? {
        let m = pole.value.norm();
        let best = targets
            .iter()
            .map(|t| (m - t).abs() / t)
            .fold(f64::INFINITY, f64::min);
        worst = worst.max(best);
    }
    Ok(worst)
}
