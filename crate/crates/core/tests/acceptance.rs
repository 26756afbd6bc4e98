//! Acceptance criteria, one line of output each. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use covtree::asympt::{convergence_report, AsymptoticProfile};
use covtree::corpus::{builtin, corpus, example, y111_lucas_fibonacci, Claim, Flag};
use covtree::genfunc::{generating_function_for, series_expand, DEFAULT_BOUND_CAP};
use covtree::poly::{IntPoly, RationalFunction};
use covtree::tau::{TauFamily, DEFAULT_VERTEX_CAP};
use covtree::voltpoly::{minor_positivity_check, second_derivative_cycle_check, unit_circle_scan};
use covtree::VoltageGraph;

type Outcome = Result<String, String>;

fn random_graphs(count: usize, seed: u64) -> Vec<VoltageGraph> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let r = rng.gen_range(1..=4usize);
        let m = rng.gen_range(r.max(1)..=6usize);
        let triples: Vec<(usize, usize, i64)> = (0..m)
            .map(|_| (rng.gen_range(0..r), rng.gen_range(0..r), rng.gen_range(-3..=3)))
            .collect();
        let g = VoltageGraph::from_triples(r, &triples);
        if g.validate().is_ok() {
            out.push(g);
        }
    }
    out
}

fn builtins() -> Vec<(&'static str, VoltageGraph)> {
    corpus().into_iter().map(|s| (s.name, s.graph)).collect()
}

fn cycle_graph() -> VoltageGraph {
    VoltageGraph::from_triples(1, &[(0, 0, 1)])
}

fn family(g: &VoltageGraph) -> Result<TauFamily, String> {
    TauFamily::new(g).map_err(|e| e.to_string())
}

fn criterion_1(random: &[VoltageGraph]) -> Outcome {
    let mut graphs: Vec<(String, VoltageGraph)> =
        builtins().into_iter().map(|(n, g)| (n.to_string(), g)).collect();
    graphs.extend(random.iter().enumerate().map(|(i, g)| (format!("random #{i}"), g.clone())));
    for (name, g) in &graphs {
        let fam = family(g)?;
        let exact = fam.exact_table(12).map_err(|e| format!("{name}: {e}"))?;
        for t in exact {
            let bf = fam
                .bruteforce(t.n, DEFAULT_VERTEX_CAP)
                .map_err(|e| format!("{name}: {e}"))?;
            if bf.value != t.value {
                return Err(format!("{name}, n = {}: exact {} vs oracle {}", t.n, t.value, bf.value));
            }
        }
    }
    Ok(format!("{} graphs ({} random), n = 1..12, exact == Matrix-Tree", graphs.len(), random.len()))
}

fn values(fam: &TauFamily, n_max: u64) -> Result<Vec<BigUint>, String> {
    Ok(fam
        .exact_table(n_max)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|t| t.value)
        .collect())
}

fn criterion_2() -> Outcome {
    let theta = values(&family(&builtin("haar-theta", &[]).unwrap())?, 4)?;
    let expected: Vec<BigUint> = [3u32, 12, 81, 384].iter().map(|&v| v.into()).collect();
    if theta != expected {
        return Err(format!("haar-theta gives {theta:?}"));
    }
    let cycle = values(&family(&cycle_graph())?, 20)?;
    for (i, v) in cycle.iter().enumerate() {
        if *v != BigUint::from(i + 1) {
            return Err(format!("loop-1 graph: τ({}) = {v}", i + 1));
        }
    }
    Ok("haar-theta [3, 12, 81, 384]; loop-1 τ(n) = n for n = 1..20".into())
}

fn criterion_3(c1_passed: bool) -> Outcome {
    if !c1_passed {
        return Err("criterion 1 failed, identity not assessed".into());
    }
    let fam = family(&builtin("y-graph", &[1, 1, 1]).unwrap())?;
    for (i, v) in values(&fam, 12)?.iter().enumerate() {
        let n = i as u64 + 1;
        if *v != y111_lucas_fibonacci(n) {
            return Err(format!("n = {n}: τ = {v}, identity gives {}", y111_lucas_fibonacci(n)));
        }
    }
    Ok("y-graph(1,1,1): 3^(n-1) n L_n^4 (odd n <= 11), 25 3^(n-1) n F_n^4 (even n <= 12)".into())
}

fn criterion_4(random: &[VoltageGraph]) -> Outcome {
    let mut graphs: Vec<VoltageGraph> = builtins().into_iter().map(|(_, g)| g).collect();
    graphs.push(cycle_graph());
    graphs.extend(random.iter().cloned());
    let mut cycles = 0;
    for (i, g) in graphs.iter().enumerate() {
        let fam = family(g).map_err(|e| format!("graph {i}: {e}"))?;
        let b = fam.bundle();
        let one = BigInt::one();
        if !b.p.is_symmetric() {
            return Err(format!("graph {i}: P not symmetric"));
        }
        if !b.p.eval_integer_at_one().is_zero() || !b.p.derivative().eval_integer_at_one().is_zero() {
            return Err(format!("graph {i}: P(1) or P'(1) nonzero"));
        }
        // independent second derivative: differentiate twice as a Laurent polynomial
        let pdd = b.p.derivative().derivative().eval_integer_at_one();
        if pdd != b.p_dd_1 || pdd >= BigInt::zero() {
            return Err(format!("graph {i}: P''(1) = {pdd}"));
        }
        let cyc = second_derivative_cycle_check(g).map_err(|e| e.to_string())?;
        if cyc != pdd {
            return Err(format!("graph {i}: cycle formula {cyc} vs P''(1) {pdd}"));
        }
        if BigInt::from(2) * b.r.eval(&one) != pdd || b.q.derivative().eval(&one) != pdd {
            return Err(format!("graph {i}: 2R(1) or Q'(1) differs from P''(1)"));
        }
        let minors = minor_positivity_check(g).map_err(|e| format!("graph {i}: {e}"))?;
        cycles += minors.len();
        let scan = unit_circle_scan(b, 1024);
        if !scan.passed() || scan.samples != 1024 {
            return Err(format!(
                "graph {i}: unit-circle scan min Re {} max |Im| {} scale {}",
                scan.min_real, scan.max_abs_imag, scan.scale
            ));
        }
    }
    Ok(format!(
        "{} graphs: symmetry, P(1) = P'(1) = 0, P''(1) < 0 = cycle formula = 2R(1) = Q'(1), \
         {cycles} cycle minors > 0, 1024-point unit-circle scan",
        graphs.len()
    ))
}

fn criterion_5() -> Outcome {
    let mut worst = 0.0f64;
    for (name, g) in builtins() {
        let fam = family(&g)?;
        for t in fam.exact_table(30).map_err(|e| e.to_string())? {
            let c = fam.chebyshev(t.n).map_err(|e| format!("{name}: {e}"))?;
            let v = t.value.to_f64().unwrap();
            let rel = ((c - v) / v).abs();
            worst = worst.max(rel);
            if rel > 1e-9 {
                return Err(format!("{name}, n = {}: relative error {rel:.3e}", t.n));
            }
        }
    }
    Ok(format!("corpus, n <= 30: max relative error {worst:.3e} (<= 1e-9)"))
}

fn lowest_terms(f: &RationalFunction) -> bool {
    let content = f.num().content().gcd(&f.den().content());
    let g = f.num().to_rat().gcd(&f.den().to_rat());
    content.is_one() && g.degree() == Some(0)
}

fn criterion_6() -> Outcome {
    let mut graphs = builtins();
    graphs.push(("loop-1", cycle_graph()));
    let mut summary = Vec::new();
    for (name, g) in &graphs {
        let fam = family(g)?;
        let gf = generating_function_for(&fam, DEFAULT_BOUND_CAP).map_err(|e| format!("{name}: {e}"))?;
        let (dn, dd) = (gf.f.num().degree().unwrap_or(0), gf.f.den().degree().unwrap_or(0));
        if !lowest_terms(&gf.f) {
            return Err(format!("{name}: F not in lowest terms"));
        }
        if gf.verified_terms < dn + dd + 4 {
            return Err(format!("{name}: only {} verified terms", gf.verified_terms));
        }
        let series = series_expand(&gf.f, gf.verified_terms + 1).map_err(|e| e.to_string())?;
        let tau = values(&fam, gf.verified_terms as u64)?;
        if !series[0].is_zero()
            || tau
                .iter()
                .enumerate()
                .any(|(i, v)| series[i + 1] != BigRational::from_integer(BigInt::from(v.clone())))
        {
            return Err(format!("{name}: series differs from τ"));
        }
        // as a function of y = a0 x, F is invariant under y -> 1/y
        let a0 = fam.bundle().a0.clone();
        let in_y = gf
            .f
            .scale_variable(&BigRational::new(BigInt::one(), a0))
            .map_err(|e| e.to_string())?;
        let (lhs, rhs) = (in_y.clone(), in_y.invert_variable().map_err(|e| e.to_string())?);
        if lhs != rhs || !gf.symmetry_ok {
            return Err(format!("{name}: symmetry fails"));
        }
        summary.push(format!("{name} {dn}/{dd} on {} terms", gf.verified_terms));
    }
    let cycle = generating_function_for(&family(&cycle_graph())?, DEFAULT_BOUND_CAP).unwrap().f;
    let expected = RationalFunction::new(IntPoly::from_i64(&[0, 1]), IntPoly::from_i64(&[1, -2, 1])).unwrap();
    if cycle != expected {
        return Err(format!("loop-1 F = {cycle}"));
    }
    Ok(format!("lowest terms, exact series, exact symmetry; degrees {}; loop-1 F = x/(1-x)^2", summary.join(", ")))
}

fn criterion_7() -> Outcome {
    let theta = family(&builtin("haar-theta", &[]).unwrap())?;
    let p = AsymptoticProfile::new(&theta).map_err(|e| e.to_string())?;
    let base = 2.0 + 3f64.sqrt();
    if (p.a - base).abs() > 1e-6 {
        return Err(format!("theta A = {}", p.a));
    }
    if p.q != BigUint::from(12u32) || p.tau_h != BigUint::from(3u32) {
        return Err(format!("theta q = {}, τ(H) = {}", p.q, p.tau_h));
    }
    let t40 = theta.exact(40).map_err(|e| e.to_string())?.value;
    let ratio = (covtree::tau::biguint_ln(&t40) - (20f64.ln() + 40.0 * base.ln())).exp();
    if (ratio - 1.0).abs() > 1e-6 {
        return Err(format!("τ(40) / ((40/2)(2+√3)^40) = {ratio}"));
    }
    let mut worst = 0.0f64;
    for (name, g) in builtins() {
        let prof = AsymptoticProfile::new(&family(&g)?).map_err(|e| e.to_string())?;
        let rel = ((prof.a - prof.a_integral) / prof.a).abs();
        worst = worst.max(rel);
        if rel > 1e-5 {
            return Err(format!("{name}: A = {} vs integral {}", prof.a, prof.a_integral));
        }
    }
    let tc = family(&builtin("three-circles", &[1, 2, 3]).unwrap())?;
    let rows = convergence_report(&tc, 60).map_err(|e| e.to_string())?;
    let r60 = rows[59].ratio;
    if (r60 - 1.0).abs() > 1e-3 {
        return Err(format!("three-circles ratio(60) = {r60}"));
    }
    Ok(format!(
        "theta A = {:.12}, q = 12, τ(H) = 3, |ratio(40) - 1| = {:.2e}; A routes max gap {worst:.2e}; \
         three-circles |ratio(60) - 1| = {:.2e}",
        p.a,
        (ratio - 1.0).abs(),
        (r60 - 1.0).abs()
    ))
}

fn printed_tau(name: &str) -> Option<fn(u64) -> BigRational> {
    example(name, &[]).ok()?.printed_values.into_iter().find_map(|v| match v.claim {
        Claim::Tau { formula, .. } if v.flag == Flag::Erratum => Some(formula),
        _ => None,
    })
}

fn criterion_8() -> Outcome {
    let haar = printed_tau("haar-theta").ok_or("haar-theta erratum not recorded")?;
    let tri = printed_tau("triangle-loop").ok_or("triangle-loop erratum not recorded")?;
    let h2 = haar(2);
    let t1 = tri(1);
    let oracle_h2 = family(&builtin("haar-theta", &[]).unwrap())?
        .bruteforce(2, DEFAULT_VERTEX_CAP)
        .map_err(|e| e.to_string())?
        .value;
    let oracle_t1 = family(&builtin("triangle-loop", &[]).unwrap())?
        .bruteforce(1, DEFAULT_VERTEX_CAP)
        .map_err(|e| e.to_string())?
        .value;
    let int = |v: u32| BigRational::from_integer(v.into());
    if h2 != int(6) || oracle_h2 != BigUint::from(12u32) {
        return Err(format!("haar: printed {h2}, oracle {oracle_h2}"));
    }
    if t1 != int(3) || oracle_t1 != BigUint::from(5u32) {
        return Err(format!("triangle-loop: printed {t1}, oracle {oracle_t1}"));
    }
    Ok("printed (-1)^n(T_n(-2)-1) gives 6 at n = 2 (oracle 12); printed 3n/5 prefactor gives 3 at n = 1 (oracle 5); both flagged as errata".into())
}

fn main() -> ExitCode {
    let random = random_graphs(120, 0x5eed_2024);
    let mut all = true;
    let mut report = |id: u32, title: &str, started: Instant, outcome: Outcome| -> bool {
        let secs = started.elapsed().as_secs_f64();
        let (tag, detail, ok) = match outcome {
            Ok(d) => ("PASS", d, true),
            Err(d) => ("FAIL", d, false),
        };
        println!("criterion {id} [{tag}] {title} ({secs:.1}s): {detail}");
        all &= ok;
        ok
    };
    let t = Instant::now();
    let c1 = report(1, "oracle equivalence", t, criterion_1(&random));
    let t = Instant::now();
    report(2, "theta and cycle closed values", t, criterion_2());
    let t = Instant::now();
    report(3, "Lucas/Fibonacci identity", t, criterion_3(c1));
    let t = Instant::now();
    report(4, "voltage-polynomial lemma suite", t, criterion_4(&random));
    let t = Instant::now();
    report(5, "Chebyshev route", t, criterion_5());
    let t = Instant::now();
    report(6, "generating function", t, criterion_6());
    let t = Instant::now();
    report(7, "asymptotics", t, criterion_7());
    let t = Instant::now();
    report(8, "erratum regressions", t, criterion_8());
    if all {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}
