use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::{IntPoly, RatPoly};
use crate::error::{Error, Result};
use crate::linalg::{solve, RatMatrix};

/// Extra series coefficients beyond the unknown count used to confirm a fit.
pub const SPARE_TERMS: usize = 4;

/// Ratio of two integer polynomials in canonical form: coprime over the
/// rationals, joint coefficient gcd 1, positive denominator leading
/// coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFunction {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        Self::from_rat(&num.to_rat(), &den.to_rat())
    }

    pub fn from_rat(num: &RatPoly, den: &RatPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if num.is_zero() {
            return Ok(Self {
                num: IntPoly::zero(),
                den: IntPoly::one(),
            });
        }
        let g = num.gcd(den);
        let (n, _) = num.div_rem(&g)?;
        let (d, _) = den.div_rem(&g)?;
        // common scale: clear every denominator, then divide out the joint content
        let l = n.denominator_lcm() * d.denominator_lcm() / num_integer::Integer::gcd(
            &n.denominator_lcm(),
            &d.denominator_lcm(),
        );
        let l = BigRational::from_integer(l);
        let to_int = |p: &RatPoly| {
            IntPoly::new(p.coeffs().iter().map(|c| (c * &l).to_integer()).collect())
        };
        let (ni, di) = (to_int(&n), to_int(&d));
        let mut content = num_integer::Integer::gcd(&ni.content(), &di.content());
        if di.lc().is_negative() {
            content = -content;
        }
        Ok(Self {
            num: IntPoly::new(ni.coeffs().iter().map(|c| c / &content).collect()),
            den: IntPoly::new(di.coeffs().iter().map(|c| c / &content).collect()),
        })
    }

    pub fn zero() -> Self {
        Self {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// First `n` Taylor coefficients at 0, by the linear recurrence the
    /// denominator defines.
    pub fn series(&self, n: usize) -> Result<Vec<BigRational>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::PoleAtZero);
        }
        let d0 = BigRational::from_integer(d0);
        let den: Vec<BigRational> = self
            .den
            .coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let mut out: Vec<BigRational> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = BigRational::from_integer(self.num.coeff(k));
            for (j, dj) in den.iter().enumerate().skip(1).take(k) {
                if !dj.is_zero() {
                    acc -= dj * &out[k - j];
                }
            }
            out.push(acc / &d0);
        }
        Ok(out)
    }

    /// `F(c * x)`.
    pub fn scale_variable(&self, c: &BigRational) -> Result<Self> {
        let scale = |p: &IntPoly| {
            let mut pow = BigRational::one();
            let mut v = Vec::new();
            for a in p.coeffs() {
                v.push(BigRational::from_integer(a.clone()) * &pow);
                pow *= c;
            }
            RatPoly::new(v)
        };
        Self::from_rat(&scale(&self.num), &scale(&self.den))
    }

    /// `F(1/x)`.
    pub fn invert_variable(&self) -> Result<Self> {
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let k = dn.max(dd);
        // x^k N(1/x) / x^k D(1/x)
        let rev = |p: &IntPoly| {
            let mut v = vec![BigInt::zero(); k + 1];
            for (i, c) in p.coeffs().iter().enumerate() {
                v[k - i] = c.clone();
            }
            IntPoly::new(v)
        };
        Self::new(rev(&self.num), rev(&self.den))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }

    pub fn display_with(&self, var: &str) -> String {
        format!("({}) / ({})", self.num.display_with(var), self.den.display_with(var))
    }

    pub fn to_json(&self) -> Value {
        json!({ "num": self.num.to_json(), "den": self.den.to_json() })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let num = IntPoly::from_json(&v["num"])?;
        let den = IntPoly::from_json(&v["den"])?;
        Self::new(num, den)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// Finds the lowest-degree rational function `N/D` with `deg D <= max_den_deg`
/// and `deg N <= max_num_deg` whose Taylor series matches every supplied term.
///
/// Requires `series.len() >= max_num_deg + max_den_deg + 1 + SPARE_TERMS`.
/// For a trial denominator degree `d` the Padé conditions for every supplied
/// coefficient past the numerator bound are solved exactly. A solution at `d`
/// pads to one at `d + 1`, so the least consistent degree is found by
/// bisection.
pub fn rational_reconstruct(
    series: &[BigRational],
    max_den_deg: usize,
    max_num_deg: usize,
) -> Result<RationalFunction> {
    let len = series.len();
    if len < max_num_deg + max_den_deg + 1 + SPARE_TERMS {
        return Err(Error::NoFit);
    }
    let Some(mut best) = fit_with_den_degree(series, max_den_deg, max_num_deg)? else {
        return Err(Error::NoFit);
    };
    let (mut lo, mut hi) = (0usize, max_den_deg);
    // invariant: degree hi fits, every degree below lo does not
    while lo < hi {
        let mid = (lo + hi) / 2;
        match fit_with_den_degree(series, mid, max_num_deg)? {
            Some(f) => {
                best = f;
                hi = mid;
            }
            None => lo = mid + 1,
        }
    }
    Ok(best)
}

fn fit_with_den_degree(
    series: &[BigRational],
    d: usize,
    m: usize,
) -> Result<Option<RationalFunction>> {
    let len = series.len();
    let c = |k: isize| {
        if k < 0 {
            BigRational::zero()
        } else {
            series[k as usize].clone()
        }
    };
    // unknowns q_1..q_d (q_0 = 1); for k > m: sum_j q_j c_{k-j} = 0
    let q = if d == 0 {
        if series[m + 1..].iter().all(Zero::is_zero) {
            Some(Vec::new())
        } else {
            None
        }
    } else {
        let rows: Vec<usize> = (m + 1..len).collect();
        let a: RatMatrix = rows
            .iter()
            .map(|&k| (1..=d).map(|j| c(k as isize - j as isize)).collect())
            .collect();
        let b: Vec<BigRational> = rows.iter().map(|&k| -c(k as isize)).collect();
        solve(&a, &b)
    };
    let Some(q) = q else { return Ok(None) };
    let mut den = vec![BigRational::one()];
    den.extend(q);
    let den = RatPoly::new(den);
    // numerator = (den * series) mod x^{m+1}
    let num = RatPoly::new(
        (0..=m)
            .map(|k| {
                (0..=d.min(k))
                    .map(|j| den.coeff(j) * c((k - j) as isize))
                    .sum()
            })
            .collect(),
    );
    let candidate = RationalFunction::from_rat(&num, &den)?;
    Ok((candidate.series(len)?.as_slice() == series).then_some(candidate))
}
