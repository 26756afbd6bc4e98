use covtree::genfunc::{generating_function_for, symmetry_holds};
use covtree::tau::{TauFamily, DEFAULT_VERTEX_CAP};
use covtree::voltpoly::{constant_term_check, second_derivative_cycle_check};
use covtree::VoltageGraph;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;

fn valid_graph() -> impl Strategy<Value = VoltageGraph> {
    (1usize..=4)
        .prop_flat_map(|r| {
            let edge = (0..r, 0..r, -3i64..=3);
            (Just(r), prop::collection::vec(edge, r..=6))
        })
        .prop_map(|(r, t)| VoltageGraph::from_triples(r, &t))
        .prop_filter("valid voltage graph", |g| g.validate().is_ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn routes_agree(g in valid_graph(), n in 1u64..=9) {
        let fam = TauFamily::new(&g).unwrap();
        let exact = fam.exact(n).unwrap().value;
        prop_assert_eq!(&fam.bruteforce(n, DEFAULT_VERTEX_CAP).unwrap().value, &exact);
        let table = fam.exact_table(n).unwrap();
        prop_assert_eq!(&table[n as usize - 1].value, &exact);
        let c = fam.chebyshev(n).unwrap();
        let v = exact.to_f64().unwrap();
        prop_assert!(((c - v) / v).abs() < 1e-9, "{} vs {}", c, v);
    }

    #[test]
    fn tau_one_is_base_tree_count(g in valid_graph()) {
        let fam = TauFamily::new(&g).unwrap();
        prop_assert_eq!(&fam.exact(1).unwrap().value, fam.tau_h());
    }

    #[test]
    fn polynomial_invariants(g in valid_graph()) {
        let fam = TauFamily::new(&g).unwrap();
        let b = fam.bundle();
        prop_assert!(b.p.is_symmetric());
        prop_assert!(b.p.eval_integer_at_one().is_zero());
        prop_assert_eq!(second_derivative_cycle_check(&g).unwrap(), b.p_dd_1.clone());
        prop_assert!(constant_term_check(&g).unwrap().holds());
    }

    #[test]
    fn voltage_negation_and_relabel_preserve_tau(g in valid_graph(), n in 1u64..=8) {
        let fam = TauFamily::new(&g).unwrap();
        let negated = g.with_voltages(g.edges().iter().map(|e| -e.voltage));
        let reversed = VoltageGraph::from_triples(
            g.vertex_count(),
            &g.edges()
                .iter()
                .map(|e| (g.vertex_count() - 1 - e.to, g.vertex_count() - 1 - e.from, e.voltage))
                .collect::<Vec<_>>(),
        );
        let t = fam.exact(n).unwrap().value;
        prop_assert_eq!(&TauFamily::new(&negated).unwrap().exact(n).unwrap().value, &t);
        prop_assert_eq!(&TauFamily::new(&reversed).unwrap().exact(n).unwrap().value, &t);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn generating_function_is_symmetric(g in valid_graph()) {
        let fam = TauFamily::new(&g).unwrap();
        let gf = generating_function_for(&fam, 64);
        prop_assume!(gf.is_ok());
        let gf = gf.unwrap();
        prop_assert!(symmetry_holds(&gf.f, &fam.bundle().a0).unwrap());
    }
}
