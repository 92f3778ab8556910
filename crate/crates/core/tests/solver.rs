mod common;

use common::{brute_independence, brute_transversal};
use transversal_core::generators::*;
use transversal_core::*;

fn solve(c: &PureComplex, threads: usize) -> Transversal {
    let t = exact_transversal(c, SolveBudget::default().with_threads(threads)).unwrap();
    assert!(t.optimal && verify_transversal(c, &t.vertices));
    t
}

fn small_instances() -> Vec<(String, PureComplex)> {
    let mut v = Vec::new();
    for n in 6..=14 {
        for d in 2..=5 {
            if let Ok(c) = cyclic_boundary(n, d) {
                v.push((format!("∂C({n},{d})"), c));
            }
        }
        for dim in 3..=5 {
            if let Ok(c) = sphere_d(n, dim) {
                v.push((format!("D({n},{dim})"), c));
            }
        }
    }
    for n in [12u32, 16] {
        for s in 1..=3 {
            v.push((format!("F({n},4,{s})"), family_f(n, 4, s).unwrap()));
        }
        v.push((format!("H({n},3,2)"), family_h(n, 3, 2, 2).unwrap()));
    }
    v.push(("Λ8".into(), retriangulated_sphere(RetriangulationVariant::Lambda, 8).unwrap()));
    v.push(("Λ16".into(), retriangulated_sphere(RetriangulationVariant::Lambda, 16).unwrap()));
    v
}

#[test]
fn exact_agrees_with_brute_force() {
    for (name, c) in small_instances() {
        assert_eq!(solve(&c, 1).size, brute_transversal(&c), "{name}");
    }
}

#[test]
fn transversal_plus_independence_is_n() {
    for (name, c) in small_instances().into_iter().filter(|(_, c)| c.n() <= 16) {
        assert_eq!(independence_number(&c, SolveBudget::default()).unwrap(), brute_independence(&c), "{name}");
        assert_eq!(solve(&c, 1).size + brute_independence(&c), c.n() as usize, "{name}");
    }
}

#[test]
fn certificates_do_not_depend_on_threads() {
    let mut cases = small_instances();
    cases.push(("F(30,4,3)".into(), family_f(30, 4, 3).unwrap()));
    cases.push(("Λ24".into(), retriangulated_sphere(RetriangulationVariant::Lambda, 24).unwrap()));
    for (name, c) in cases {
        let one = solve(&c, 1);
        for threads in [2, 8] {
            let many = solve(&c, threads);
            assert_eq!(one.size, many.size, "{name}");
            assert_eq!(one.vertices, many.vertices, "{name} with {threads} threads");
        }
    }
}

#[test]
fn disjoint_unions_multiply() {
    for (name, c) in small_instances() {
        let t = solve(&c, 1).size;
        for b in 2..=4u32 {
            if c.n() * b > 24 {
                break;
            }
            let u = c.disjoint_union(b).unwrap();
            assert_eq!(solve(&u, 1).size, b as usize * t, "{b} copies of {name}");
        }
    }
}

#[test]
fn stated_examples() {
    let c73 = cyclic_boundary(7, 3).unwrap();
    assert!(verify_transversal(&c73, &fs(&[1, 7])));
    assert_eq!(greedy_transversal(&c73).unwrap().vertices, fs(&[1, 7]));
    assert_eq!(independence_number(&c73, SolveBudget::default()).unwrap(), 5);
    let l8 = CanonicalBall::L8.complex();
    assert!(verify_transversal(&l8, &fs(&[2, 4, 6, 7, 8])));
    assert!(!verify_transversal(&l8, &fs(&[2, 4, 6, 8])));
}

#[test]
fn greedy_is_valid_and_no_better_than_exact() {
    for (name, c) in small_instances() {
        let g = greedy_transversal(&c).unwrap();
        let e = solve(&c, 1);
        assert!(verify_transversal(&c, &g.vertices), "{name}");
        assert!(g.size >= e.size && g.lower_bound <= e.size, "{name}");
    }
}

#[test]
fn budgets_report_bounds() {
    let c = family_f(36, 4, 3).unwrap();
    let err = exact_transversal(&c, SolveBudget::default().with_node_limit(3))
        .and_then(Transversal::require_optimal)
        .unwrap_err();
    match err {
        Error::BudgetExhausted { lower, upper } => assert!(lower <= upper),
        e => panic!("unexpected {e}"),
    }
}

#[test]
fn empty_and_trivial_complexes() {
    let empty = PureComplex::empty(5, 3);
    assert_eq!(solve(&empty, 1).size, 0);
    let simplex = PureComplex::simplex(&fs(&[1, 2, 3]));
    assert_eq!(solve(&simplex, 1).size, 1);
}
