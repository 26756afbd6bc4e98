use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{Map, Value};

use super::IntPoly;
use crate::error::{Error, Result};

/// Laurent polynomial in `z` with arbitrary-precision integer coefficients.
///
/// Stored sparsely; zero coefficients are never kept, so the lowest and
/// highest stored exponents are always the true ones.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntLaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl IntLaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c.into());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Adds `c * z^exp` in place.
    pub fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn low(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn high(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Sum of absolute values of the coefficients.
    pub fn coeff_abs_sum(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).sum()
    }

    /// `P(z) -> P(1/z)`.
    pub fn invert_variable(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.invert_variable()
    }

    /// Formal derivative `d/dz`.
    pub fn derivative(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(&e, c)| (e - 1, c * BigInt::from(e))),
        )
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, c)| (e, c * k)))
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Replaces every exponent `e` by `e * k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, c)| (e * k, c.clone())))
    }

    /// Exact value at a nonzero rational point.
    pub fn eval_rational(&self, z: &BigRational) -> BigRational {
        assert!(!z.is_zero() || self.low().is_none_or(|l| l >= 0));
        self.terms
            .iter()
            .map(|(&e, c)| {
                let zc = BigRational::from_integer(c.clone());
                if e >= 0 {
                    zc * num_traits::pow(z.clone(), e as usize)
                } else {
                    zc / num_traits::pow(z.clone(), (-e) as usize)
                }
            })
            .sum()
    }

    pub fn eval_integer_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|(&e, c)| z.powi(e as i32) * c.to_f64().unwrap_or(f64::NAN))
            .sum()
    }

    /// Value at `exp(2πi · k / m)`, reducing each exponent modulo `m` before
    /// taking the angle so large exponents lose no precision.
    pub fn eval_root_of_unity(&self, k: u64, m: u64) -> Complex64 {
        let m_i = m as i128;
        self.terms
            .iter()
            .map(|(&e, c)| {
                let idx = ((e as i128 * k as i128) % m_i + m_i) % m_i;
                let angle = std::f64::consts::TAU * idx as f64 / m as f64;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), angle)
            })
            .sum()
    }

    /// The ordinary polynomial `z^{-low} P(z)` together with `low`.
    pub fn to_poly_with_shift(&self) -> (IntPoly, i64) {
        let Some(lo) = self.low() else {
            return (IntPoly::zero(), 0);
        };
        let hi = self.high().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo) as usize + 1];
        for (&e, c) in &self.terms {
            coeffs[(e - lo) as usize] = c.clone();
        }
        (IntPoly::new(coeffs), lo)
    }

    pub fn from_poly(p: &IntPoly, shift: i64) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64 + shift, c.clone())),
        )
    }

    /// JSON object mapping exponent strings to decimal coefficient strings.
    pub fn to_json(&self) -> Value {
        let map: Map<String, Value> = self
            .terms
            .iter()
            .map(|(e, c)| (e.to_string(), Value::String(c.to_string())))
            .collect();
        Value::Object(map)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Json("laurent polynomial must be an object".into()))?;
        let mut p = Self::zero();
        for (k, c) in obj {
            let e: i64 = k
                .parse()
                .map_err(|_| Error::Json(format!("bad exponent '{k}'")))?;
            let c: BigInt = c
                .as_str()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::Json(format!("bad coefficient at exponent {e}")))?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

impl fmt::Display for IntLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                write!(f, "{c}*z^{e}")?;
            } else if c.is_negative() {
                write!(f, " - {}*z^{e}", -c)?;
            } else {
                write!(f, " + {c}*z^{e}")?;
            }
        }
        Ok(())
    }
}

impl Add for &IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn add(self, rhs: &IntLaurentPoly) -> IntLaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn sub(self, rhs: &IntLaurentPoly) -> IntLaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn mul(self, rhs: &IntLaurentPoly) -> IntLaurentPoly {
        let mut out = IntLaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn neg(self) -> IntLaurentPoly {
        IntLaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntLaurentPoly {
            type Output = IntLaurentPoly;
            fn $m(self, rhs: IntLaurentPoly) -> IntLaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn neg(self) -> IntLaurentPoly {
        -&self
    }
}
