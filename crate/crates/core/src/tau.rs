//! Spanning-tree counts `τ(n)` of the `n`-fold cyclic covering by three
//! independent routes: exact resultant, numeric Chebyshev, and Kirchhoff.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{matrix_tree_count, BigCount, VoltageGraph};
use crate::linalg::bareiss_det;
use crate::poly::roots::{roots_with_multiplicity, Root};
use crate::poly::{chebyshev_t_complex, resultant_x_pow_minus_one};
use crate::voltpoly::{voltage_polynomial, VoltagePolyBundle};

/// Covering-size limit for the brute-force route.
pub const DEFAULT_VERTEX_CAP: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TauRoute {
    Resultant,
    Chebyshev,
    Bruteforce,
}

impl fmt::Display for TauRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TauRoute::Resultant => "resultant",
            TauRoute::Chebyshev => "chebyshev",
            TauRoute::Bruteforce => "bruteforce",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauResult {
    pub n: u64,
    pub value: BigCount,
    pub route: TauRoute,
    /// `(-1)^{s(n-1)}`.
    pub epsilon: i8,
}

fn epsilon(s: usize, n: u64) -> i8 {
    if (s as u64 % 2 == 1) && (n - 1) % 2 == 1 {
        -1
    } else {
        1
    }
}

/// A validated voltage graph with its bundle and `τ(H)` computed once, for
/// evaluating `τ(n)` at many `n`.
#[derive(Debug)]
pub struct TauFamily {
    graph: VoltageGraph,
    bundle: VoltagePolyBundle,
    tau_h: BigCount,
    q_roots: OnceLock<Result<Vec<Root>>>,
}

impl TauFamily {
    pub fn new(graph: &VoltageGraph) -> Result<Self> {
        let bundle = voltage_polynomial(graph)?;
        let tau_h = graph.tau_base()?;
        Ok(Self {
            graph: graph.clone(),
            bundle,
            tau_h,
            q_roots: OnceLock::new(),
        })
    }

    pub fn graph(&self) -> &VoltageGraph {
        &self.graph
    }

    pub fn bundle(&self) -> &VoltagePolyBundle {
        &self.bundle
    }

    pub fn tau_h(&self) -> &BigCount {
        &self.tau_h
    }

    /// Roots of `Q(w) / (w - 1)` with multiplicity.
    pub fn q_roots(&self) -> Result<&[Root]> {
        self.q_roots
            .get_or_init(|| roots_with_multiplicity(&self.bundle.q_reduced()))
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    /// `n τ(H) ε Res(R, z^n - 1) / R(1)` from a given resultant value.
    fn finish(&self, n: u64, res: BigInt) -> Result<TauResult> {
        let eps = epsilon(self.bundle.s, n);
        let r1 = self.bundle.r.eval(&BigInt::one());
        let mut num = BigInt::from(n) * BigInt::from_biguint(Sign::Plus, self.tau_h.clone()) * res;
        if eps < 0 {
            num = -num;
        }
        let (value, rem) = num.div_rem(&r1);
        if !rem.is_zero() {
            return Err(Error::InvariantViolation(format!(
                "τ({n}) numerator {num} is not divisible by R(1) = {r1}"
            )));
        }
        match value.to_biguint() {
            Some(v) if !v.is_zero() => Ok(TauResult {
                n,
                value: v,
                route: TauRoute::Resultant,
                epsilon: eps,
            }),
            _ => Err(Error::InvariantViolation(format!("τ({n}) = {value} is not positive"))),
        }
    }

    pub fn exact(&self, n: u64) -> Result<TauResult> {
        if n == 0 {
            return Err(Error::InvalidN(n));
        }
        let res = resultant_x_pow_minus_one(&self.bundle.r, n)?;
        self.finish(n, res)
    }

    /// `τ(1..=n_max)` by the resultant route. Powers of the scaled companion
    /// matrix are built incrementally; the determinants run in parallel.
    pub fn exact_table(&self, n_max: u64) -> Result<Vec<TauResult>> {
        if n_max == 0 {
            return Err(Error::InvalidN(0));
        }
        let r = &self.bundle.r;
        let d = r.degree().unwrap_or(0);
        let lc = r.lc();
        if d == 0 {
            return (1..=n_max)
                .into_par_iter()
                .map(|n| self.finish(n, num_traits::pow(lc.clone(), n as usize)))
                .collect();
        }
        // M = lc * companion(R) is integral and C^n = M^n / lc^n, so
        // Res(R, z^n - 1) = lc^n det(M^n - lc^n I) / lc^{nd}
        let mut m = vec![vec![BigInt::zero(); d]; d];
        for i in 1..d {
            m[i][i - 1] = lc.clone();
        }
        for (i, row) in m.iter_mut().enumerate() {
            row[d - 1] = -r.coeff(i);
        }
        let mut powers = Vec::with_capacity(n_max as usize);
        let mut cur = m.clone();
        for n in 1..=n_max {
            if n > 1 {
                cur = mul_by_companion(&cur, &m);
            }
            powers.push(cur.clone());
        }
        powers
            .into_par_iter()
            .enumerate()
            .map(|(idx, mut p)| {
                let n = idx as u64 + 1;
                let lcn = num_traits::pow(lc.clone(), n as usize);
                for (i, row) in p.iter_mut().enumerate() {
                    row[i] -= &lcn;
                }
                let det = bareiss_det(p);
                let denom = num_traits::pow(lcn.clone(), d - 1);
                let (res, rem) = det.div_rem(&denom);
                if !rem.is_zero() {
                    return Err(Error::InvariantViolation(format!(
                        "resultant with z^{n}-1 is not an integer"
                    )));
                }
                self.finish(n, res)
            })
            .collect()
    }

    /// Theorem-2 product over the roots of `Q(w)/(w-1)`.
    pub fn chebyshev(&self, n: u64) -> Result<f64> {
        if n == 0 {
            return Err(Error::InvalidN(n));
        }
        let roots = self.q_roots()?;
        let mut prod = Complex64::new(1.0, 0.0);
        for root in roots {
            let factor = Complex64::new(2.0, 0.0) - chebyshev_t_complex(n, root.value) * 2.0;
            prod *= factor.powi(root.multiplicity as i32);
        }
        let b = &self.bundle;
        let mut sign = epsilon(b.s, n) as f64;
        if b.a0.is_negative() && n % 2 == 1 {
            sign = -sign;
        }
        if b.p_dd_1.is_negative() {
            sign = -sign;
        }
        let log_pref = (2.0 * n as f64).ln() + biguint_ln(&self.tau_h)
            + n as f64 * bigint_ln_abs(&b.a0)
            - bigint_ln_abs(&b.p_dd_1);
        let value = prod * (sign * log_pref.exp());
        if value.im.abs() > 1e-6 * value.re.abs().max(f64::MIN_POSITIVE) {
            return Err(Error::NumericInstability(format!(
                "Chebyshev product has imaginary part {} against real {}",
                value.im, value.re
            )));
        }
        Ok(value.re)
    }

    pub fn bruteforce(&self, n: u64, cap: usize) -> Result<TauResult> {
        if n == 0 {
            return Err(Error::InvalidN(n));
        }
        let vertices = (self.graph.vertex_count() as u64).saturating_mul(n);
        if vertices > cap as u64 {
            return Err(Error::TooLarge {
                vertices: vertices.min(usize::MAX as u64) as usize,
                cap,
            });
        }
        let value = matrix_tree_count(&self.graph.build_covering(n)?)?;
        Ok(TauResult {
            n,
            value,
            route: TauRoute::Bruteforce,
            epsilon: epsilon(self.bundle.s, n),
        })
    }
}

/// `a * m` where `m` is a scaled companion matrix: subdiagonal `lc`, last
/// column arbitrary, zero elsewhere.
fn mul_by_companion(a: &[Vec<BigInt>], m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let d = m.len();
    a.iter()
        .map(|row| {
            let mut out = Vec::with_capacity(d);
            for j in 0..d - 1 {
                out.push(&row[j + 1] * &m[j + 1][j]);
            }
            out.push(row.iter().zip(m.iter()).map(|(x, mr)| x * &mr[d - 1]).sum());
            out
        })
        .collect()
}

/// Natural log of a big unsigned integer without overflowing `f64`.
pub fn biguint_ln(x: &BigCount) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("64-bit value");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

fn bigint_ln_abs(x: &BigInt) -> f64 {
    biguint_ln(x.magnitude())
}

pub fn tau_exact(g: &VoltageGraph, n: u64) -> Result<TauResult> {
    TauFamily::new(g)?.exact(n)
}

pub fn tau_chebyshev(g: &VoltageGraph, n: u64) -> Result<f64> {
    TauFamily::new(g)?.chebyshev(n)
}

pub fn tau_bruteforce(g: &VoltageGraph, n: u64, cap: usize) -> Result<TauResult> {
    g.validate()?;
    if n == 0 {
        return Err(Error::InvalidN(n));
    }
    let vertices = (g.vertex_count() as u64).saturating_mul(n);
    if vertices > cap as u64 {
        return Err(Error::TooLarge {
            vertices: vertices.min(usize::MAX as u64) as usize,
            cap,
        });
    }
    TauFamily::new(g)?.bruteforce(n, cap)
}

pub fn tau_table(g: &VoltageGraph, n_max: u64) -> Result<Vec<TauResult>> {
    TauFamily::new(g)?.exact_table(n_max)
}
