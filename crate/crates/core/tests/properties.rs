use proptest::prelude::*;

use satake_core::cohomology_modules::{standard_module, twist};
use satake_core::exact_math::{char_poly_in_c, int, kernel, rank, PolyA, PolyMatrix, SparseMatrix};
use satake_core::koszul_exterior::{regrade, unregrade, BigradedCharacter};
use satake_core::orbit_combinatorics::{closure_intersection, s_set};
use satake_core::rep_gl2::CoweightPair;

fn pair_strategy(lam_max: i64, mu_bound: i64) -> impl Strategy<Value = CoweightPair> {
    (0..=lam_max, -mu_bound..=mu_bound)
        .prop_filter("parity", |(l, m)| (l + m).rem_euclid(2) == 0)
        .prop_map(|(l, m)| CoweightPair::new(l, m).unwrap())
}

fn character_strategy() -> impl Strategy<Value = BigradedCharacter> {
    prop::collection::vec((-3i64..=3, -4i64..=4, -4i64..=4), 0..6).prop_map(|terms| {
        terms
            .into_iter()
            .fold(BigradedCharacter(Default::default()), |acc, (c, t, z)| {
                acc.add(&BigradedCharacter::monomial(c, t, z))
            })
    })
}

fn poly_strategy() -> impl Strategy<Value = PolyA> {
    prop::collection::vec(-3i64..=3, 0..3)
        .prop_map(|cs| PolyA::from_terms(cs.into_iter().enumerate().map(|(e, c)| (e as u32, int(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kernel_vectors_are_annihilated(
        rows in 1usize..5,
        cols in 1usize..6,
        entries in prop::collection::vec(-4i64..=4, 30),
    ) {
        let dense: Vec<Vec<_>> = (0..rows)
            .map(|i| (0..cols).map(|j| int(entries[i * cols + j])).collect())
            .collect();
        let m = SparseMatrix::from_dense(&dense, cols);
        let ker = kernel(&m);
        prop_assert_eq!(ker.len() + rank(&m), cols);
        for v in &ker {
            prop_assert!(m.mul_vec(v).iter().all(|x| *x == int(0)));
        }
    }

    #[test]
    fn twist_is_invertible(p in pair_strategy(5, 5), half in -4i64..=4) {
        let m = standard_module(p);
        let there = twist(&m, 2 * half).unwrap();
        prop_assert_eq!(twist(&there, -2 * half).unwrap(), m.clone());
        let shifted = CoweightPair::new(p.lam(), p.mu() + 2 * half).unwrap();
        prop_assert_eq!(there, standard_module(shifted));
    }

    #[test]
    fn closure_intersection_is_commutative_and_idempotent(
        p in pair_strategy(8, 8),
        q in pair_strategy(8, 8),
        r in pair_strategy(8, 8),
    ) {
        prop_assert_eq!(closure_intersection(p, p), Some(p));
        prop_assert_eq!(closure_intersection(p, q), closure_intersection(q, p));
        let left = closure_intersection(p, q).and_then(|x| closure_intersection(x, r));
        let right = closure_intersection(q, r).and_then(|x| closure_intersection(p, x));
        prop_assert_eq!(left, right);
        if let Some(x) = closure_intersection(p, q) {
            prop_assert!(s_set(x).iter().all(|v| s_set(p).contains(v) && s_set(q).contains(v)));
        }
    }

    #[test]
    fn regrade_is_a_multiplicative_bijection(x in character_strategy(), y in character_strategy()) {
        prop_assert_eq!(unregrade(&regrade(&x)), x.clone());
        prop_assert_eq!(regrade(&x.mul(&y)), regrade(&x).mul(&regrade(&y)));
        prop_assert_eq!(regrade(&x.add(&y)), regrade(&x).add(&regrade(&y)));
    }

    #[test]
    fn cayley_hamilton(n in 1usize..4, entries in prop::collection::vec(poly_strategy(), 9)) {
        let rows: Vec<Vec<PolyA>> = (0..n).map(|i| entries[i * n..(i + 1) * n].to_vec()).collect();
        let c = PolyMatrix::from_rows(rows);
        let chi = char_poly_in_c(&c);
        prop_assert!(chi.is_monic_in_c());
        prop_assert_eq!(chi.degree_in_c(), Some(n as u32));
        prop_assert!(c.eval_bivar(&chi).is_zero());
    }
}
