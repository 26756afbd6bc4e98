//! Resultants. Convention: `Res(f, g) = lc(f)^deg(g) * prod g(a)` over the
//! roots `a` of `f`, so a constant `f = c` gives `c^deg(g)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::IntPoly;
use crate::error::{Error, Result};
use crate::linalg::{bareiss_det, rat_det, rat_pow, RatMatrix};

/// Resultant of two integer polynomials. Uses the companion-matrix route
/// when `g = x^n - 1` and the Sylvester determinant otherwise.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    match as_x_pow_minus_one(g) {
        Some(n) if n >= 1 => resultant_x_pow_minus_one(f, n as u64),
        _ => sylvester_resultant(f, g),
    }
}

fn as_x_pow_minus_one(g: &IntPoly) -> Option<usize> {
    let n = g.degree()?;
    let c = g.coeffs();
    let shape = n >= 1
        && c[0] == -BigInt::one()
        && c[n].is_one()
        && c[1..n].iter().all(Zero::is_zero);
    shape.then_some(n)
}

/// Determinant of the Sylvester matrix of `f` and `g` (fraction-free).
pub fn sylvester_resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return Err(Error::ZeroPolynomial);
    };
    if m == 0 {
        return Ok(num_traits::pow(f.lc(), n));
    }
    if n == 0 {
        return Ok(num_traits::pow(g.lc(), m));
    }
    let size = m + n;
    let mut s = vec![vec![BigInt::zero(); size]; size];
    // rows hold coefficients from the leading term down
    for i in 0..n {
        for (j, c) in f.coeffs().iter().rev().enumerate() {
            s[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in g.coeffs().iter().rev().enumerate() {
            s[n + i][i + j] = c.clone();
        }
    }
    Ok(bareiss_det(s))
}

/// Companion matrix of `f / lc(f)`; last column holds `-a_i / lc`.
fn companion(f: &IntPoly) -> RatMatrix {
    let d = f.degree().unwrap_or(0);
    let lc = BigRational::from_integer(f.lc());
    let mut c = vec![vec![BigRational::zero(); d]; d];
    for i in 1..d {
        c[i][i - 1] = BigRational::one();
    }
    for (i, row) in c.iter_mut().enumerate() {
        row[d - 1] = -BigRational::from_integer(f.coeff(i)) / &lc;
    }
    c
}

/// `det(C^n - I)` for the companion matrix `C` of the monic associate of
/// `f`, i.e. the product of `a^n - 1` over the roots `a` of `f`.
pub fn companion_power_det(f: &IntPoly, n: u64) -> Result<BigRational> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut m = rat_pow(&companion(f), n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] -= BigRational::one();
    }
    Ok(rat_det(m))
}

/// `Res(f, x^n - 1) = lc(f)^n * det(C^n - I)`.
pub fn resultant_x_pow_minus_one(f: &IntPoly, n: u64) -> Result<BigInt> {
    let det = companion_power_det(f, n)?;
    let value = det * BigRational::from_integer(num_traits::pow(f.lc(), n as usize));
    if !value.is_integer() {
        return Err(Error::InvariantViolation(format!(
            "resultant with x^{n}-1 is not an integer: {value}"
        )));
    }
    Ok(value.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn single_root() {
        assert_eq!(resultant(&p(&[-2, 1]), &p(&[-1, 0, 1])).unwrap(), BigInt::from(3));
        assert_eq!(sylvester_resultant(&p(&[-2, 1]), &p(&[-1, 0, 1])).unwrap(), BigInt::from(3));
    }

    #[test]
    fn constant_first_argument() {
        for n in 1..6 {
            let expected = if n % 2 == 0 { 1 } else { -1 };
            let g = IntPoly::x_pow_minus_one(n);
            assert_eq!(resultant(&p(&[-1]), &g).unwrap(), BigInt::from(expected));
            assert_eq!(companion_power_det(&p(&[-1]), n as u64).unwrap(), BigRational::one());
        }
    }

    #[test]
    fn quadratic_against_numeric_roots() {
        // roots -2 ± sqrt(3); prod (a^2 - 1) computed in floating point
        let f = p(&[1, 4, 1]);
        let s3 = 3f64.sqrt();
        let numeric: f64 = [-2.0 + s3, -2.0 - s3].iter().map(|a| a * a - 1.0).product();
        assert_eq!(numeric.round() as i64, -12);
        let g = IntPoly::x_pow_minus_one(2);
        assert_eq!(resultant(&f, &g).unwrap(), BigInt::from(-12));
        assert_eq!(sylvester_resultant(&f, &g).unwrap(), BigInt::from(-12));
        assert_eq!(
            companion_power_det(&f, 2).unwrap(),
            BigRational::from_integer((-12).into())
        );
    }

    #[test]
    fn linear_companion() {
        assert_eq!(
            companion_power_det(&p(&[-2, 1]), 3).unwrap(),
            BigRational::from_integer(7.into())
        );
        assert_eq!(resultant_x_pow_minus_one(&p(&[-2, 1]), 3).unwrap(), BigInt::from(7));
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert_eq!(resultant(&IntPoly::zero(), &p(&[1, 1])), Err(Error::ZeroPolynomial));
        assert_eq!(companion_power_det(&IntPoly::zero(), 2), Err(Error::ZeroPolynomial));
    }

    fn small_poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
        proptest::collection::vec(-9i64..=9, 1..=max_deg + 1)
            .prop_map(|c| IntPoly::from_i64(&c))
            .prop_filter("nonzero", |p| !p.is_zero())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn companion_route_matches_sylvester(f in small_poly(6), n in 1u64..=20) {
            let g = IntPoly::x_pow_minus_one(n as usize);
            let fast = resultant_x_pow_minus_one(&f, n).unwrap();
            let slow = sylvester_resultant(&f, &g).unwrap();
            prop_assert_eq!(fast, slow);
        }

        #[test]
        fn swap_sign_rule(f in small_poly(6), g in small_poly(6)) {
            let df = f.degree().unwrap();
            let dg = g.degree().unwrap();
            let a = sylvester_resultant(&f, &g).unwrap();
            let b = sylvester_resultant(&g, &f).unwrap();
            let sign = if (df * dg) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            prop_assert_eq!(a * sign, b);
        }
    }
}
