//! The voltage polynomial `P(z) = det L(z)` of a voltage graph and the
//! structural facts about it: symmetry, the double root at 1, the reduced
//! polynomial `R`, the Chebyshev transform `Q`, and `P''(1)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::VoltageGraph;
use crate::poly::{chebyshev_table, IntLaurentPoly, IntPoly};

pub type SymbolMatrix = Vec<Vec<IntLaurentPoly>>;

/// Symbol matrix `L(z)` of a validated voltage graph.
pub fn symbol_matrix(g: &VoltageGraph) -> Result<SymbolMatrix> {
    g.validate()?;
    Ok(symbol_matrix_unchecked(g))
}

/// Symbol matrix without the connectivity and gcd checks.
pub fn symbol_matrix_unchecked(g: &VoltageGraph) -> SymbolMatrix {
    let r = g.vertex_count();
    let mut m: SymbolMatrix = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    if i == j {
                        IntLaurentPoly::constant(g.degree(i))
                    } else {
                        IntLaurentPoly::zero()
                    }
                })
                .collect()
        })
        .collect();
    for e in g.edges() {
        let (i, j, v) = (e.from, e.to, e.voltage);
        if i == j {
            m[i][i].add_term(v, -BigInt::one());
            m[i][i].add_term(-v, -BigInt::one());
        } else {
            m[i][j].add_term(v, -BigInt::one());
            m[j][i].add_term(-v, -BigInt::one());
        }
    }
    m
}

/// Determinant over the Laurent ring by row-wise cofactor expansion,
/// memoized on the set of columns already used.
pub fn laurent_det(m: &SymbolMatrix) -> IntLaurentPoly {
    let r = m.len();
    assert!(r < usize::BITS as usize, "matrix too large for subset memo");
    fn go(
        m: &SymbolMatrix,
        used: usize,
        memo: &mut HashMap<usize, IntLaurentPoly>,
    ) -> IntLaurentPoly {
        let r = m.len();
        let row = used.count_ones() as usize;
        if row == r {
            return IntLaurentPoly::one();
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut acc = IntLaurentPoly::zero();
        let mut free_before = 0;
        for j in 0..r {
            if used & (1 << j) != 0 {
                continue;
            }
            if !m[row][j].is_zero() {
                let minor = go(m, used | (1 << j), memo);
                let term = &m[row][j] * &minor;
                acc = if free_before % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            free_before += 1;
        }
        memo.insert(used, acc.clone());
        acc
    }
    go(m, 0, &mut HashMap::new())
}

/// `P(z)` together with everything derived from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VoltagePolyBundle {
    /// The voltage polynomial.
    pub p: IntLaurentPoly,
    /// Half-degree: `P` spans exponents `-s..=s`.
    pub s: usize,
    /// Coefficient of `z^s`.
    pub a0: BigInt,
    /// `z^s P(z) / (z - 1)^2`, degree `2s - 2`.
    pub r: IntPoly,
    /// Chebyshev transform: `P(z) = Q((z + 1/z) / 2)`.
    pub q: IntPoly,
    /// `P''(1)`.
    pub p_dd_1: BigInt,
}

impl VoltagePolyBundle {
    /// Derives the bundle from `P` and checks every structural invariant.
    pub fn from_polynomial(p: IntLaurentPoly) -> Result<Self> {
        let violation = |msg: String| Err(Error::InvariantViolation(msg));
        if p.is_zero() {
            return violation("voltage polynomial is identically zero".into());
        }
        if !p.is_symmetric() {
            return violation(format!("P(z) != P(1/z): {p}"));
        }
        let hi = p.high().expect("nonzero");
        if hi < 1 {
            return violation(format!("P is constant: {p}"));
        }
        let s = hi as usize;
        let a0 = p.coeff(hi);
        if !p.eval_integer_at_one().is_zero() {
            return violation("P(1) != 0".into());
        }
        if !p.derivative().eval_integer_at_one().is_zero() {
            return violation("P'(1) != 0".into());
        }
        let p_dd_1: BigInt = p
            .terms()
            .map(|(k, c)| c * BigInt::from(k) * BigInt::from(k - 1))
            .sum();
        if !p_dd_1.is_negative() {
            return violation(format!("P''(1) = {p_dd_1} is not negative"));
        }

        let (shifted, lo) = p.to_poly_with_shift();
        debug_assert_eq!(lo, -hi);
        let Some(r) = shifted.div_exact(&IntPoly::from_i64(&[1, -2, 1])) else {
            return violation("(z - 1)^2 does not divide z^s P(z)".into());
        };
        if r.degree() != Some(2 * s - 2) {
            return violation(format!("deg R = {:?}, expected {}", r.degree(), 2 * s - 2));
        }
        let r1 = r.eval(&BigInt::one());
        if r1.is_zero() || p_dd_1 != BigInt::from(2) * &r1 {
            return violation(format!("P''(1) = {p_dd_1} but R(1) = {r1}"));
        }

        let cheb = chebyshev_table(s);
        let mut q = IntPoly::constant(p.coeff(0));
        for k in 1..=s {
            let two_a = BigInt::from(2) * p.coeff(k as i64);
            q = &q + &cheb[k].scale(&two_a);
        }
        if !q.eval(&BigInt::one()).is_zero() {
            return violation("Q(1) != 0".into());
        }
        if q.derivative().eval(&BigInt::one()) != p_dd_1 {
            return violation("Q'(1) != P''(1)".into());
        }
        if q.degree() != Some(s) || q.lc() != (BigInt::one() << s) * &a0 {
            return violation(format!("lc(Q) = {} != 2^s a0", q.lc()));
        }
        Ok(Self {
            p,
            s,
            a0,
            r,
            q,
            p_dd_1,
        })
    }

    /// `Q(w) / (w - 1)`, whose roots are the `w_p` of the Chebyshev route.
    pub fn q_reduced(&self) -> IntPoly {
        self.q
            .div_exact(&IntPoly::from_i64(&[-1, 1]))
            .expect("Q(1) = 0 is a bundle invariant")
    }

    /// `Σ|coefficients of P|` as a float, the scale for numeric tolerances.
    pub fn scale(&self) -> f64 {
        self.p.coeff_abs_sum().to_f64().unwrap_or(f64::INFINITY)
    }
}

/// Voltage polynomial bundle of a validated graph.
pub fn voltage_polynomial(g: &VoltageGraph) -> Result<VoltagePolyBundle> {
    let m = symbol_matrix(g)?;
    VoltagePolyBundle::from_polynomial(laurent_det(&m))
}

/// A loop or cycle of the base multigraph with a fixed orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    /// Vertices in traversal order, starting at the smallest.
    pub vertices: Vec<usize>,
    /// Edge indices in traversal order.
    pub edges: Vec<usize>,
    /// Net voltage along the orientation.
    pub voltage: i64,
}

/// Every loop and cycle of the underlying multigraph, each exactly once:
/// loops, unordered pairs of parallel edges, and simple cycles of length
/// three or more expanded over every choice of parallel edge.
pub fn enumerate_cycles(g: &VoltageGraph) -> Vec<Cycle> {
    let r = g.vertex_count();
    let edges = g.edges();
    let mut between: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); r]; r];
    let mut cycles = Vec::new();
    for (k, e) in edges.iter().enumerate() {
        if e.is_loop() {
            cycles.push(Cycle {
                vertices: vec![e.from],
                edges: vec![k],
                voltage: e.voltage,
            });
        } else {
            between[e.from][e.to].push(k);
            between[e.to][e.from].push(k);
        }
    }
    // voltage picked up traversing edge k from u
    let step = |k: usize, u: usize| {
        let e = edges[k];
        if e.from == u {
            e.voltage
        } else {
            -e.voltage
        }
    };
    for u in 0..r {
        for w in u + 1..r {
            let par = &between[u][w];
            for a in 0..par.len() {
                for b in a + 1..par.len() {
                    cycles.push(Cycle {
                        vertices: vec![u, w],
                        edges: vec![par[a], par[b]],
                        voltage: step(par[a], u) - step(par[b], u),
                    });
                }
            }
        }
    }

    let neighbors: Vec<Vec<usize>> = (0..r)
        .map(|u| (0..r).filter(|&w| w != u && !between[u][w].is_empty()).collect())
        .collect();
    fn extend(
        start: usize,
        path: &mut Vec<usize>,
        neighbors: &[Vec<usize>],
        found: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().expect("path starts at start");
        for &w in &neighbors[last] {
            if w == start && path.len() >= 3 && path[1] < last {
                found.push(path.clone());
            } else if w > start && !path.contains(&w) {
                path.push(w);
                extend(start, path, neighbors, found);
                path.pop();
            }
        }
    }
    let mut vertex_cycles = Vec::new();
    for start in 0..r {
        extend(start, &mut vec![start], &neighbors, &mut vertex_cycles);
    }
    for vs in vertex_cycles {
        let hops: Vec<(usize, usize)> = (0..vs.len())
            .map(|i| (vs[i], vs[(i + 1) % vs.len()]))
            .collect();
        let mut choices: Vec<(Vec<usize>, i64)> = vec![(Vec::new(), 0)];
        for &(a, b) in &hops {
            choices = choices
                .into_iter()
                .flat_map(|(es, v)| {
                    between[a][b].iter().map(move |&k| {
                        let mut es = es.clone();
                        es.push(k);
                        (es, v + step(k, a))
                    })
                })
                .collect();
        }
        for (es, voltage) in choices {
            cycles.push(Cycle {
                vertices: vs.clone(),
                edges: es,
                voltage,
            });
        }
    }
    cycles
}

/// `-2 Σ_C α(C)^2 det L_{C̄}` over all loops and cycles `C`; equals
/// `P''(1)`.
pub fn second_derivative_cycle_check(g: &VoltageGraph) -> Result<BigInt> {
    g.validate()?;
    let base = g.base_multigraph();
    let sum: BigInt = enumerate_cycles(g)
        .iter()
        .map(|c| BigInt::from(c.voltage).pow(2) * base.laplacian_minor(&c.vertices))
        .sum();
    Ok(-BigInt::from(2) * sum)
}

/// Every cycle with its complementary Laplacian minor; all minors must be
/// strictly positive.
pub fn minor_positivity_check(g: &VoltageGraph) -> Result<Vec<(Cycle, BigInt)>> {
    g.validate()?;
    let base = g.base_multigraph();
    enumerate_cycles(g)
        .into_iter()
        .map(|c| {
            let det = base.laplacian_minor(&c.vertices);
            if det.is_positive() {
                Ok((c, det))
            } else {
                Err(Error::InvariantViolation(format!(
                    "complementary minor of cycle {:?} is {det}",
                    c.vertices
                )))
            }
        })
        .collect()
}

/// Matching-sum side and polynomial side of the constant-term identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantTermCheck {
    /// `Σ_M (-1)^{|M|} Π_{v ∉ V(M)} d(v)` over all matchings, empty included.
    pub matching_sum: BigInt,
    /// Exponent-0 coefficient of `P` after giving edge `k` voltage `3^k`.
    pub perturbed_constant: BigInt,
}

impl ConstantTermCheck {
    pub fn holds(&self) -> bool {
        self.matching_sum == self.perturbed_constant
    }
}

/// Signed matching sum over the non-loop edges.
pub fn matching_sum(g: &VoltageGraph) -> BigInt {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|e| !e.is_loop())
        .map(|e| (e.from, e.to))
        .collect();
    let degrees: Vec<BigInt> = (0..g.vertex_count()).map(|v| BigInt::from(g.degree(v))).collect();
    fn go(
        idx: usize,
        edges: &[(usize, usize)],
        covered: &mut Vec<bool>,
        size: usize,
        degrees: &[BigInt],
    ) -> BigInt {
        if idx == edges.len() {
            let weight: BigInt = degrees
                .iter()
                .zip(covered.iter())
                .filter(|(_, &c)| !c)
                .map(|(d, _)| d.clone())
                .product();
            return if size.is_multiple_of(2) { weight } else { -weight };
        }
        let mut total = go(idx + 1, edges, covered, size, degrees);
        let (u, v) = edges[idx];
        if !covered[u] && !covered[v] {
            covered[u] = true;
            covered[v] = true;
            total += go(idx + 1, edges, covered, size + 1, degrees);
            covered[u] = false;
            covered[v] = false;
        }
        total
    }
    go(0, &edges, &mut vec![false; g.vertex_count()], 0, &degrees)
}

pub fn constant_term_check(g: &VoltageGraph) -> Result<ConstantTermCheck> {
    g.validate()?;
    let voltages = (0..g.edges().len() as u32)
        .map(|k| 3i64.checked_pow(k))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| {
            Error::InvariantViolation("too many edges for the perturbed constant term".into())
        })?;
    let perturbed = g.with_voltages(voltages);
    let p = laurent_det(&symbol_matrix_unchecked(&perturbed));
    Ok(ConstantTermCheck {
        matching_sum: matching_sum(g),
        perturbed_constant: p.coeff(0),
    })
}

/// Extremes of `P` sampled on the unit circle away from `z = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitCircleScan {
    pub samples: u64,
    pub min_real: f64,
    pub max_abs_imag: f64,
    /// `Σ|coefficients|`.
    pub scale: f64,
}

impl UnitCircleScan {
    pub fn passed(&self) -> bool {
        self.min_real >= -1e-9 * self.scale && self.max_abs_imag <= 1e-9 * self.scale
    }
}

/// Evaluates `P(e^{2πik/samples})` for `k = 1..samples`.
pub fn unit_circle_scan(bundle: &VoltagePolyBundle, samples: u64) -> UnitCircleScan {
    let samples = samples.max(3);
    let (mut min_real, mut max_abs_imag) = (f64::INFINITY, 0.0f64);
    for k in 1..samples {
        let v = bundle.p.eval_root_of_unity(k, samples);
        min_real = min_real.min(v.re);
        max_abs_imag = max_abs_imag.max(v.im.abs());
    }
    UnitCircleScan {
        samples,
        min_real,
        max_abs_imag,
        scale: bundle.scale(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::roots::roots_with_multiplicity;
    use num_complex::Complex64;

    fn theta() -> VoltageGraph {
        VoltageGraph::from_triples(2, &[(0, 1, 0), (0, 1, 1), (0, 1, 2)])
    }

    fn loop1() -> VoltageGraph {
        VoltageGraph::from_triples(1, &[(0, 0, 1)])
    }

    fn three_circles(a: i64, b: i64, c: i64) -> VoltageGraph {
        VoltageGraph::from_triples(2, &[(0, 0, a), (1, 1, b), (0, 1, 0), (0, 1, c)])
    }

    fn triangle_loop(a: i64, b: i64, c: i64) -> VoltageGraph {
        VoltageGraph::from_triples(3, &[(0, 1, 0), (0, 2, 0), (1, 2, b), (1, 2, -c), (0, 0, a)])
    }

    fn y111() -> VoltageGraph {
        VoltageGraph::from_triples(
            4,
            &[(0, 1, 0), (0, 2, 0), (0, 3, 0), (1, 1, 1), (2, 2, 1), (3, 3, 1)],
        )
    }

    fn lp(terms: &[(i64, i64)]) -> IntLaurentPoly {
        IntLaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn theta_symbol_matrix() {
        let m = symbol_matrix(&theta()).unwrap();
        assert_eq!(m[0][0], IntLaurentPoly::constant(3));
        assert_eq!(m[0][1], lp(&[(0, -1), (1, -1), (2, -1)]));
        assert_eq!(m[1][0], lp(&[(0, -1), (-1, -1), (-2, -1)]));
        assert_eq!(m[1][1], IntLaurentPoly::constant(3));
    }

    #[test]
    fn loop_symbol_matrix() {
        let m = symbol_matrix(&loop1()).unwrap();
        assert_eq!(m, vec![vec![lp(&[(-1, -1), (0, 2), (1, -1)])]]);
    }

    #[test]
    fn three_circles_symbol_matrix() {
        let (a, b, c) = (1, 2, 3);
        let m = symbol_matrix(&three_circles(a, b, c)).unwrap();
        assert_eq!(m[0][0], lp(&[(0, 4), (a, -1), (-a, -1)]));
        assert_eq!(m[0][1], lp(&[(0, -1), (c, -1)]));
        assert_eq!(m[1][0], lp(&[(0, -1), (-c, -1)]));
        assert_eq!(m[1][1], lp(&[(0, 4), (b, -1), (-b, -1)]));
    }

    #[test]
    fn theta_bundle() {
        let b = voltage_polynomial(&theta()).unwrap();
        assert_eq!(b.p, lp(&[(-2, -1), (-1, -2), (0, 6), (1, -2), (2, -1)]));
        assert_eq!((b.s, b.a0.clone()), (2, BigInt::from(-1)));
        assert_eq!(b.r, IntPoly::from_i64(&[-1, -4, -1]));
        assert_eq!(b.p_dd_1, BigInt::from(-12));
        // 4 (1 - w)(2 + w) = 8 - 4w - 4w^2
        assert_eq!(b.q, IntPoly::from_i64(&[8, -4, -4]));
    }

    #[test]
    fn three_circles_bundle() {
        let b = voltage_polynomial(&three_circles(1, 2, 3)).unwrap();
        // 2 (1 - w)(11 + 8w) = 22 - 6w - 16w^2
        assert_eq!(b.q, IntPoly::from_i64(&[22, -6, -16]));
        assert_eq!(b.s, 2);
        assert_eq!(b.a0, BigInt::from(-4));
        assert_eq!(b.p_dd_1, BigInt::from(-38));
        // general closed form printed for this family
        for (a, bb, c) in [(1, 2, 3), (1, 1, 1), (2, 3, 1), (1, 3, 5)] {
            let p = voltage_polynomial(&three_circles(a, bb, c)).unwrap().p;
            let sym = |k: i64, c: i64| lp(&[(k, c), (-k, c)]);
            let expected = [
                IntLaurentPoly::constant(14),
                sym(a, -4),
                sym(bb, -4),
                sym(c, -1),
                sym(a + bb, 1),
                sym(a - bb, 1),
            ]
            .iter()
            .fold(IntLaurentPoly::zero(), |acc, t| &acc + t);
            assert_eq!(p, expected, "three-circles({a},{bb},{c})");
        }
    }

    #[test]
    fn triangle_loop_bundle() {
        let b = voltage_polynomial(&triangle_loop(1, 2, -3)).unwrap();
        // 8 (1 - w)(3 + w + w^2) = 24 - 16w + 0w^2 - 8w^3
        assert_eq!(b.q, IntPoly::from_i64(&[24, -16, 0, -8]));
        assert_eq!(b.p_dd_1, BigInt::from(-40));
    }

    #[test]
    fn y_bundle() {
        let b = voltage_polynomial(&y111()).unwrap();
        // 6 (1 - w)(3 - 2w)^2
        let expected = &IntPoly::from_i64(&[6, -6]) * &(&IntPoly::from_i64(&[3, -2]) * &IntPoly::from_i64(&[3, -2]));
        assert_eq!(b.q, expected);
        assert_eq!((b.s, b.a0.clone(), b.p_dd_1.clone()), (3, BigInt::from(-3), BigInt::from(-6)));
    }

    #[test]
    fn cycle_formula_examples() {
        assert_eq!(second_derivative_cycle_check(&theta()).unwrap(), BigInt::from(-12));
        assert_eq!(second_derivative_cycle_check(&loop1()).unwrap(), BigInt::from(-2));
        for (a, b, c) in [(1i64, 2i64, -3i64), (1, 1, 1), (2, 1, 3), (1, 0, 2)] {
            let expected = -2 * (5 * a * a + b * b + c * c + 2 * (b + c) * (b + c));
            let g = triangle_loop(a, b, c);
            assert_eq!(second_derivative_cycle_check(&g).unwrap(), BigInt::from(expected));
            assert_eq!(voltage_polynomial(&g).unwrap().p_dd_1, BigInt::from(expected));
        }
        for (a, b, c) in [(1i64, 2i64, 3i64), (2, 1, 1)] {
            let expected = -2 * (2 * a * a + 2 * b * b + c * c);
            assert_eq!(
                second_derivative_cycle_check(&three_circles(a, b, c)).unwrap(),
                BigInt::from(expected)
            );
        }
    }

    #[test]
    fn theta_cycles_are_parallel_pairs() {
        let cycles = enumerate_cycles(&theta());
        let mut volts: Vec<i64> = cycles.iter().map(|c| c.voltage.abs()).collect();
        volts.sort();
        assert_eq!(volts, vec![1, 1, 2]);
    }

    #[test]
    fn cycle_count_of_k4_with_double_edge() {
        // K4: 4 triangles + 3 four-cycles = 7; doubling edge 0-1 adds the
        // 2-cycle and one extra copy of each cycle through 0-1 (2 triangles +
        // 2 four-cycles)
        let mut triples = vec![];
        for u in 0..4 {
            for w in u + 1..4 {
                triples.push((u, w, 1));
            }
        }
        assert_eq!(enumerate_cycles(&VoltageGraph::from_triples(4, &triples)).len(), 7);
        triples.push((0, 1, 0));
        assert_eq!(enumerate_cycles(&VoltageGraph::from_triples(4, &triples)).len(), 7 + 1 + 4);
    }

    #[test]
    fn constant_term_examples() {
        let c = constant_term_check(&loop1()).unwrap();
        assert_eq!(c.matching_sum, BigInt::from(2));
        assert!(c.holds());
        let c = constant_term_check(&theta()).unwrap();
        assert_eq!(c.matching_sum, BigInt::from(6));
        assert!(c.holds());
        assert_eq!(voltage_polynomial(&theta()).unwrap().p.coeff(0), BigInt::from(6));
        // edge plus a loop: matchings {} -> 3*1, {e} -> -1
        let g = VoltageGraph::from_triples(2, &[(0, 1, 0), (0, 0, 1)]);
        let c = constant_term_check(&g).unwrap();
        assert_eq!(c.matching_sum, BigInt::from(2));
        assert!(c.holds());
    }

    #[test]
    fn constant_term_needs_perturbation_for_zero_cycles() {
        // edges of voltage 0 and 0 plus a loop: the 2-cycle has voltage 0 and
        // lands on the constant term of the unperturbed P
        let g = VoltageGraph::from_triples(2, &[(0, 1, 0), (0, 1, 0), (0, 0, 1)]);
        let c = constant_term_check(&g).unwrap();
        assert!(c.holds());
        let raw = voltage_polynomial(&g).unwrap().p.coeff(0);
        assert_ne!(raw, c.matching_sum);
    }

    #[test]
    fn unit_circle_values() {
        let b = voltage_polynomial(&theta()).unwrap();
        let scan = unit_circle_scan(&b, 8);
        assert!(scan.passed());
        assert!(scan.min_real > 0.0);
        let at_minus_one = b.p.eval_root_of_unity(1, 2);
        assert!((at_minus_one.re - 8.0).abs() < 1e-12);
        let near_one = b.p.eval_root_of_unity(1, 1 << 20);
        assert!(near_one.re > 0.0 && near_one.re < 1e-9);
        let l = voltage_polynomial(&loop1()).unwrap();
        assert!((l.p.eval_root_of_unity(1, 2).re - 4.0).abs() < 1e-12);
    }

    #[test]
    fn minor_positivity_examples() {
        let theta_minors = minor_positivity_check(&theta()).unwrap();
        assert!(theta_minors.iter().all(|(_, d)| d.is_one()));
        let y = minor_positivity_check(&y111()).unwrap();
        assert_eq!(y.len(), 3);
        // center + two leaves: [[3,-1,-1],[-1,1,0],[-1,0,1]] -> 1
        assert!(y.iter().all(|(c, d)| c.vertices.len() == 1 && d.is_one()));
        let c4 = VoltageGraph::from_triples(4, &[(0, 1, 1), (1, 2, 0), (2, 3, 0), (3, 0, 0)]);
        let c4m = minor_positivity_check(&c4).unwrap();
        assert_eq!(c4m.len(), 1);
        assert!(c4m[0].1.is_one());
    }

    #[test]
    fn q_roots_pair_with_p_roots() {
        for g in [theta(), three_circles(1, 2, 3), triangle_loop(1, 2, -3), y111()] {
            let b = voltage_polynomial(&g).unwrap();
            let r_roots = roots_with_multiplicity(&b.r).unwrap();
            let q_roots = roots_with_multiplicity(&b.q_reduced()).unwrap();
            for z in &r_roots {
                let inv = z.value.inv();
                assert!(r_roots.iter().any(|o| (o.value - inv).norm() < 1e-9));
                let w: Complex64 = (z.value + inv) / 2.0;
                assert!(q_roots.iter().any(|o| (o.value - w).norm() < 1e-9 * w.norm().max(1.0)));
            }
        }
    }

    #[test]
    fn invalid_graphs_are_rejected() {
        let g = VoltageGraph::from_triples(1, &[(0, 0, 2)]);
        assert_eq!(voltage_polynomial(&g), Err(Error::GcdNotOne(2)));
        assert_eq!(second_derivative_cycle_check(&g), Err(Error::GcdNotOne(2)));
    }
}
