//! Randomized structural laws. Everything here is an algebraic identity
//! that must hold for every input, so shrinking a failure gives a minimal
//! counterexample directly.

use proptest::prelude::*;
use quatmult_core::chars::BrauerTable;
use quatmult_core::groth::{induced_from_ell, tensor_irreps, GrothElem};
use quatmult_core::irrep::{list_irreps, GammaIrrep};
use quatmult_core::mult::{
    eval_mu, multiplicity_ds, multiplicity_extended, DeformationProblem, MuFunctional,
    RhoBarClass,
};
use quatmult_core::params::FieldParams;
use quatmult_core::sym::{sym_power, HodgeTateType};
use quatmult_core::types::{d_tau, InertialTypeDesc, Sign};
use quatmult_core::wire::GrothWire;

fn arb_params() -> impl Strategy<Value = FieldParams> {
    prop_oneof![Just(3u32), Just(5), Just(9)]
        .prop_map(|q| FieldParams::from_q(q).expect("prime power"))
}

fn arb_irrep_pair() -> impl Strategy<Value = (FieldParams, GammaIrrep, GammaIrrep)> {
    arb_params().prop_flat_map(|params| {
        let irreps = list_irreps(&params);
        let len = irreps.len();
        (0..len, 0..len).prop_map(move |(i, j)| (params, irreps[i], irreps[j]))
    })
}

fn arb_irrep_triple() -> impl Strategy<Value = (FieldParams, [GammaIrrep; 3])> {
    arb_params().prop_flat_map(|params| {
        let irreps = list_irreps(&params);
        let len = irreps.len();
        (0..len, 0..len, 0..len)
            .prop_map(move |(i, j, k)| (params, [irreps[i], irreps[j], irreps[k]]))
    })
}

fn elem_from_entries(params: FieldParams, entries: Vec<(usize, i64)>) -> GrothElem {
    let irreps = list_irreps(&params);
    let mut elem = GrothElem::zero(params);
    for (i, c) in entries {
        elem.add_irrep(irreps[i % irreps.len()], c).expect("canonical label");
    }
    elem
}

fn arb_elem_pair() -> impl Strategy<Value = (GrothElem, GrothElem)> {
    arb_params().prop_flat_map(|params| {
        let len = list_irreps(&params).len();
        let entries = || proptest::collection::vec((0..len, -3i64..=3), 0..5);
        (entries(), entries()).prop_map(move |(a, b)| {
            (elem_from_entries(params, a), elem_from_entries(params, b))
        })
    })
}

proptest! {
    #[test]
    fn tensor_commutes((params, a, b) in arb_irrep_pair()) {
        prop_assert_eq!(tensor_irreps(&params, &a, &b), tensor_irreps(&params, &b, &a));
    }

    #[test]
    fn tensor_associates((params, [a, b, c]) in arb_irrep_triple()) {
        let ea = GrothElem::from_irrep(params, a).unwrap();
        let ec = GrothElem::from_irrep(params, c).unwrap();
        let left = tensor_irreps(&params, &a, &b).tensor(&ec).unwrap();
        let right = ea.tensor(&tensor_irreps(&params, &b, &c)).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn tensor_dimension_is_multiplicative((x, y) in arb_elem_pair()) {
        let product = x.tensor(&y).unwrap();
        prop_assert_eq!(product.dim(), x.dim() * y.dim());
    }

    #[test]
    fn twist_slides_through_tensor((x, y) in arb_elem_pair()) {
        let twisted = x.twist_xi().tensor(&y).unwrap();
        prop_assert_eq!(twisted, x.tensor(&y).unwrap().twist_xi());
    }

    #[test]
    fn restriction_is_multiplicative((x, y) in arb_elem_pair()) {
        let product = x.tensor(&y).unwrap().restrict_to_ell();
        let separately = x.restrict_to_ell().mul(&y.restrict_to_ell()).unwrap();
        prop_assert_eq!(product, separately);
    }

    #[test]
    fn induction_is_frobenius_invariant(params in arb_params(), a in -200i64..=200) {
        let frob = a * i64::from(params.q());
        prop_assert_eq!(
            induced_from_ell(params, a),
            induced_from_ell(params, frob)
        );
    }

    #[test]
    fn induction_restricts_to_the_orbit(params in arb_params(), a in -200i64..=200) {
        let restricted = induced_from_ell(params, a).restrict_to_ell();
        if a.rem_euclid(i64::from(params.q()) + 1) == 0 {
            // Frobenius-fixed index: both characters of the split induction
            // restrict to the same χ_a
            prop_assert_eq!(restricted.coeff(a), 2);
        } else {
            prop_assert_eq!(restricted.coeff(a), 1);
            prop_assert_eq!(restricted.coeff(a * i64::from(params.q())), 1);
        }
        prop_assert_eq!(restricted.dim(), 2);
    }

    #[test]
    fn wire_round_trip((x, _) in arb_elem_pair()) {
        let json = serde_json::to_string(&GrothWire::from(&x)).unwrap();
        let parsed: GrothWire = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(parsed.to_elem(x.params()).unwrap(), x);
    }

    #[test]
    fn symmetric_power_dimension(p in prop_oneof![Just(5u32), Just(7)], n in 0u32..=40) {
        let params = FieldParams::new(p, 1).unwrap();
        prop_assert_eq!(sym_power(&params, n).unwrap().dim(), i64::from(n) + 1);
    }

    #[test]
    fn evaluation_is_additive(
        entries in proptest::collection::vec((0usize..18, 0u64..4), 0..6),
        xs in proptest::collection::vec((0usize..18, 0i64..3), 0..5),
        ys in proptest::collection::vec((0usize..18, 0i64..3), 0..5),
    ) {
        let params = FieldParams::new(5, 1).unwrap();
        let irreps = list_irreps(&params);
        let mut table = MuFunctional::empty(params);
        for (i, v) in entries {
            table.set(irreps[i % irreps.len()], v).unwrap();
        }
        let x = elem_from_entries(params, xs);
        let y = elem_from_entries(params, ys);
        let sum = x.add(&y).unwrap();
        prop_assert_eq!(
            eval_mu(&table, &sum).unwrap(),
            eval_mu(&table, &x).unwrap() + eval_mu(&table, &y).unwrap()
        );
    }
}

fn arb_builtin_rho(p: u32) -> impl Strategy<Value = RhoBarClass> {
    (0..p - 1).prop_flat_map(|n| {
        prop_oneof![
            Just(RhoBarClass::TresRamifie { n }),
            Just(RhoBarClass::PeuRamifieNonzero { n }),
            Just(RhoBarClass::Split { n }),
        ]
    })
}

fn arb_discrete_series_tau(params: FieldParams) -> impl Strategy<Value = InertialTypeDesc> {
    let q = params.q();
    let two_dims: Vec<u32> = list_irreps(&params)
        .into_iter()
        .filter_map(|i| match i {
            GammaIrrep::TwoDim { a } => Some(a),
            _ => None,
        })
        .collect();
    prop_oneof![
        (0..q - 1).prop_map(|n| InertialTypeDesc::ScalTame { n }),
        (0..two_dims.len()).prop_map(move |i| InertialTypeDesc::RedTame { a: two_dims[i] }),
        (0..q - 1, 0u8..2, 1u32..3).prop_map(|(n, alpha, level)| {
            InertialTypeDesc::IrrRamified { n, alpha, level }
        }),
    ]
}

fn arb_sum_rule_point(
) -> impl Strategy<Value = (FieldParams, RhoBarClass, InertialTypeDesc, HodgeTateType)> {
    prop_oneof![Just(5u32), Just(7)].prop_flat_map(|p| {
        let params = FieldParams::new(p, 1).expect("odd prime");
        (
            Just(params),
            arb_builtin_rho(p),
            arb_discrete_series_tau(params),
            (0u32..=8, 0i64..3).prop_map(|(n, m)| HodgeTateType::new(n, m)),
        )
    })
}

proptest! {
    #[test]
    fn sum_rule_at_random_points((params, rho, tau, w) in arb_sum_rule_point()) {
        let pb = DeformationProblem { rho, tau, w };
        let plus = multiplicity_extended(&params, &pb, Sign::Plus).unwrap();
        let minus = multiplicity_extended(&params, &pb, Sign::Minus).unwrap();
        let ds = multiplicity_ds(&params, &pb).unwrap();
        prop_assert_eq!(plus + minus, u64::from(d_tau(&tau).unwrap()) * ds);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn oracle_round_trip(
        q in prop_oneof![Just(3u32), Just(5)],
        entries in proptest::collection::vec((0usize..18, -2i64..=2), 0..5),
    ) {
        let params = FieldParams::from_q(q).unwrap();
        let elem = elem_from_entries(params, entries);
        let table = BrauerTable::new(params);
        let values = table.character_of(&elem).unwrap();
        prop_assert_eq!(table.decompose(&values).unwrap(), elem);
    }
}
