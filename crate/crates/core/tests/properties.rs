mod common;

use common::{brute_independence, brute_transversal, random_complex};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use transversal_core::generators::*;
use transversal_core::pl::{bistellar_flip, FlipSpec};
use transversal_core::*;

fn arb_complex() -> impl Strategy<Value = PureComplex> {
    (any::<u64>(), 3u32..=12, 1usize..=4, 1usize..=30).prop_map(|(seed, n, d, m)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_complex(&mut rng, n, d.min(n as usize), m)
    })
}

fn arb_sphere() -> impl Strategy<Value = PureComplex> {
    prop_oneof![
        (3usize..=5, 0u32..=5).prop_map(|(d, e)| cyclic_boundary(d as Label + 2 + e, d).unwrap()),
        (3usize..=5, 0u32..=5).prop_map(|(d, e)| sphere_d(d as Label + 2 + e, d).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_matches_oracle(c in arb_complex()) {
        let t = exact_transversal(&c, SolveBudget::default()).unwrap();
        prop_assert!(t.optimal);
        prop_assert!(verify_transversal(&c, &t.vertices));
        prop_assert_eq!(t.size, brute_transversal(&c));
        prop_assert_eq!(t.size + brute_independence(&c), c.n() as usize);
    }

    #[test]
    fn greedy_bounds_the_optimum(c in arb_complex()) {
        let g = greedy_transversal(&c).unwrap();
        let t = brute_transversal(&c);
        prop_assert!(verify_transversal(&c, &g.vertices));
        prop_assert!(g.lower_bound <= t && t <= g.size);
    }

    #[test]
    fn io_round_trips(c in arb_complex()) {
        let text = serialize_complex(&c, "random");
        let back = parse_complex(&text, Validation::AllowGaps).unwrap();
        prop_assert_eq!(back.family.as_str(), "random");
        prop_assert_eq!(back.complex.facets(), c.facets());
        prop_assert_eq!(back.complex.n(), c.n());
        prop_assert_eq!(serialize_complex(&back.complex, "random"), text);
    }

    #[test]
    fn relabelling_preserves_transversal_number(c in arb_complex(), rot in 0u32..12) {
        let n = c.n();
        let r = c.relabel(|v| (v - 1 + rot) % n + 1);
        prop_assert_eq!(brute_transversal(&r), brute_transversal(&c));
        prop_assert!(are_isomorphic(&c, &r).is_some_and(|m| is_isomorphism(&c, &r, &m)));
    }

    #[test]
    fn shift_by_zero_and_back(c in arb_complex(), k in 1i64..5) {
        let there = c.relabel_shift(k).unwrap();
        let back = there.relabel_shift(-k).unwrap();
        prop_assert_eq!(back.facets(), c.facets());
    }

    #[test]
    fn stellar_subdivision_flip_inverts(s in arb_sphere(), pick in any::<prop::sample::Index>()) {
        let facet = s.facets()[pick.index(s.num_facets())].clone();
        let v = s.n() + 1;
        let spec = FlipSpec::new(facet, fs(&[v]));
        let sub = bistellar_flip(&s, &spec).unwrap();
        prop_assert!(sub.is_closed_pseudomanifold() && sub.is_eulerian());
        prop_assert_eq!(sub.num_facets(), s.num_facets() + s.d() - 1);
        let back = bistellar_flip(&sub, &spec.inverse()).unwrap();
        prop_assert_eq!(back.facets(), s.facets());
    }

    #[test]
    fn bound_formulas_are_finite(n in 1u64..200, m in 1u64..5000, d in 1u64..8) {
        let r = bound_formulas(n, m, d, None).unwrap();
        prop_assert!(r.pure.is_finite() && r.pure <= n as f64 + 1.0);
    }
}
