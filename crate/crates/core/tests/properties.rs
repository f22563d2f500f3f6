use proptest::prelude::*;
use skew_invariants::algebra::{Monomial, NCPoly, PartitionTwist, PbwPresentation};
use skew_invariants::autgroup::constructors::{quantum_reflection, tau, theta};
use skew_invariants::autgroup::order::{element_order, monomial_cycle_order};
use skew_invariants::autgroup::{FiniteGroup, GradedMap};
use skew_invariants::cli::schema::{parse_spec, ProblemSpec};
use skew_invariants::cyclotomic::embed_root;
use skew_invariants::invariants::{is_fixed, molien_coefficient, reynolds};
use skew_invariants::series::trace_series;
use skew_invariants::structure::{classify, minus_one_ring};
use skew_invariants::{Cyc, Rational};

const ORDERS: [u32; 6] = [3, 4, 5, 6, 8, 12];

fn field_order() -> impl Strategy<Value = u32> {
    prop::sample::select(ORDERS.to_vec())
}

fn cyc_in(m: u32) -> impl Strategy<Value = Cyc> {
    prop::collection::vec((-6i64..=6, 1i64..=4), m as usize)
        .prop_map(move |v| v.into_iter().enumerate().fold(Cyc::zero(m), |acc, (e, (p, q))| {
            &acc + &(&Cyc::zeta(m, e as i64) * &Cyc::from_rational(m, Rational::new(p, q)))
        }))
}

fn three_in() -> impl Strategy<Value = (Cyc, Cyc, Cyc)> {
    field_order().prop_flat_map(|m| (cyc_in(m), cyc_in(m), cyc_in(m)))
}

/// Skew ring on three variables with root-of-unity parameters in `Q(ζ_12)`.
fn skew3() -> impl Strategy<Value = PbwPresentation> {
    prop::collection::vec(0i64..12, 3).prop_map(|e| {
        PbwPresentation::skew(3, 12, |i, j| Cyc::zeta(12, e[i + j - 1])).unwrap()
    })
}

fn poly(n: usize, m: u32, max_deg: u16) -> impl Strategy<Value = NCPoly> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, n), -3i64..=3, 0i64..m as i64), 1..4).prop_map(
        move |terms| {
            NCPoly::from_terms(
                n,
                m,
                terms.into_iter().map(|(exps, c, e)| {
                    (Monomial::from_exponents(exps), &Cyc::from_int(m, c) * &Cyc::zeta(m, e))
                }),
            )
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((a, b, c) in three_in()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn root_order_of_embedded_roots(m in 1u32..40, e in 0u32..40) {
        prop_assume!(e < m);
        let z = embed_root(m, e).unwrap();
        let g = num_integer::gcd(m, e);
        prop_assert_eq!(z.root_order(), Some(m / g));
    }

    #[test]
    fn sqrt_squares_to_lift(m in 1u32..30, e in 0i64..30) {
        let z = Cyc::zeta(m, e);
        let s = z.sqrt_root().unwrap();
        prop_assert_eq!(&s * &s, z.lift(s.order()).unwrap());
    }

    #[test]
    fn lift_is_a_ring_homomorphism(m in field_order(), k in 2u32..4, seed in any::<u64>()) {
        let mut rng = proptest::test_runner::TestRng::from_seed(
            proptest::test_runner::RngAlgorithm::ChaCha,
            &seed.to_le_bytes().repeat(4),
        );
        let mut pick = || Cyc::from_int(m, (rng.next_u32() % 7) as i64 - 3) * Cyc::zeta(m, (rng.next_u32() % m) as i64);
        let (a, b) = (&pick() + &pick(), &pick() + &pick());
        let m2 = m * k;
        prop_assert_eq!((&a * &b).lift(m2).unwrap(), &a.lift(m2).unwrap() * &b.lift(m2).unwrap());
        prop_assert_eq!((&a + &b).lift(m2).unwrap(), &a.lift(m2).unwrap() + &b.lift(m2).unwrap());
    }

    #[test]
    fn multiplication_is_associative(a in skew3(), f in poly(3, 12, 2), g in poly(3, 12, 2), h in poly(3, 12, 1)) {
        let left = a.mul(&a.mul(&f, &g).unwrap(), &h).unwrap();
        let right = a.mul(&f, &a.mul(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn quantum_matrix_is_associative(f in poly(4, 12, 1), g in poly(4, 12, 1), h in poly(4, 12, 1)) {
        let c = PbwPresentation::quantum_matrix(Cyc::zeta(12, 4)).unwrap();
        let left = c.mul(&c.mul(&f, &g).unwrap(), &h).unwrap();
        let right = c.mul(&f, &c.mul(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn rewriting_is_confluent(word in prop::collection::vec(0usize..4, 0..6)) {
        let c = PbwPresentation::quantum_matrix(Cyc::zeta(12, 4)).unwrap();
        let one = Cyc::one(12);
        prop_assert_eq!(c.normal_order(&word, &one).unwrap(), c.normal_order_by_rewriting(&word, &one).unwrap());
    }

    #[test]
    fn pbw_basis_counts(n in 1usize..5, d in 0usize..7) {
        let a = PbwPresentation::commutative(n, 4);
        let expect = (0..n - 1).fold(1usize, |acc, i| acc * (d + n - 1 - i) / (i + 1));
        prop_assert_eq!(a.basis(d).len(), expect);
    }

    #[test]
    fn automorphisms_are_multiplicative(s in 0usize..3, t in 0usize..3, e in 0i64..4, f in poly(3, 4, 2), g in poly(3, 4, 2)) {
        prop_assume!(s != t);
        let a = minus_one_ring(3, 4).unwrap();
        let (s, t) = (s.min(t), s.max(t));
        let h = tau(&a, s, t, &Cyc::zeta(4, e)).unwrap();
        let fg = a.mul(&f, &g).unwrap();
        let lhs = h.apply(&a, &fg).unwrap();
        let rhs = a.mul(&h.apply(&a, &f).unwrap(), &h.apply(&a, &g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn trace_series_is_a_class_function(i in 0usize..24, j in 0usize..24) {
        let a = minus_one_ring(3, 4).unwrap();
        let one = Cyc::one(4);
        let g = FiniteGroup::close(&[tau(&a, 0, 1, &one).unwrap(), tau(&a, 1, 2, &one).unwrap()], 3, 4, 100).unwrap();
        let (x, y) = (g.element(i), g.element(j));
        let conj = x.conjugate_by(y);
        prop_assert_eq!(trace_series(&a, x, 8).unwrap().coeffs, trace_series(&a, &conj, 8).unwrap().coeffs);
        prop_assert_eq!(classify(&a, x).unwrap().name(), classify(&a, &conj).unwrap().name());
    }

    #[test]
    fn monomial_orders_agree(n in 2usize..6, t in 2usize..6, signs in prop::collection::vec(any::<bool>(), 6)) {
        prop_assume!(t <= n);
        let perm: Vec<usize> = (0..n).map(|j| if j < t { (j + 1) % t } else { j }).collect();
        let weights: Vec<Cyc> =
            (0..n).map(|j| Cyc::from_int(4, if j < t && signs[j] { -1 } else { 1 })).collect();
        let g = GradedMap::monomial(&perm, &weights).unwrap();
        prop_assert_eq!(monomial_cycle_order(&g).unwrap(), element_order(&g, 1000).unwrap());
    }

    #[test]
    fn reynolds_is_a_projection(f in poly(2, 4, 4)) {
        let a = minus_one_ring(2, 4).unwrap();
        let g = FiniteGroup::close(&[tau(&a, 0, 1, &Cyc::one(4)).unwrap()], 2, 4, 10).unwrap();
        let r = reynolds(&a, &g, &f).unwrap();
        prop_assert!(is_fixed(&a, &g, &r).unwrap());
        prop_assert_eq!(reynolds(&a, &g, &r).unwrap(), r);
    }

    #[test]
    fn full_twist_commutes(e in prop::collection::vec(0i64..12, 3)) {
        let a = PbwPresentation::skew(3, 24, |i, j| Cyc::zeta(24, 2 * e[i + j - 1])).unwrap();
        let t = PartitionTwist::canonical(&a, vec![vec![0], vec![1], vec![2]]).unwrap();
        for s in 0..3 {
            for u in 0..3 {
                prop_assert_eq!(
                    t.multiply(&a, &a.var(s), &a.var(u)).unwrap(),
                    t.multiply(&a, &a.var(u), &a.var(s)).unwrap()
                );
            }
        }
    }

    #[test]
    fn dihedral_groups_on_quantum_matrices(e in 0i64..12) {
        let c = PbwPresentation::quantum_matrix(Cyc::zeta(12, 4)).unwrap();
        let b = Cyc::zeta(12, e);
        let gens = [quantum_reflection(&c, &Cyc::one(12)).unwrap(), quantum_reflection(&c, &b).unwrap()];
        let g = FiniteGroup::close(&gens, 4, 12, 100).unwrap();
        prop_assert_eq!(g.order(), 2 * b.root_order().unwrap() as usize);
        for h in g.elements() {
            prop_assert!(!classify(&c, h).unwrap().is_mystic());
        }
    }

    #[test]
    fn molien_counts_are_fixed_dimensions(e in 1i64..4, d in 0usize..6) {
        let a = minus_one_ring(2, 4).unwrap();
        let g = FiniteGroup::close(&[theta(&a, 0, &Cyc::zeta(4, e)).unwrap()], 2, 4, 10).unwrap();
        let k = g.order();
        // x1^i x2^j is fixed iff k | i
        let expect = (0..=d).filter(|i| i % k == 0).count();
        prop_assert_eq!(molien_coefficient(&a, &g, d).unwrap(), expect);
    }

    #[test]
    fn spec_round_trips(n in 2usize..4, e in 0i64..6, s in 1usize..3) {
        let text = format!(
            r#"{{"schema_version": 1, "field": {{"root_of_unity_order": 6}},
                "ring": {{"kind": "skew", "n": {n}, "default": {{"zeta_exp": {e}}}}},
                "generators": [{{"type": "theta", "s": {s}, "lambda": "-1"}}],
                "options": {{"commands": ["hilbert"]}}}}"#
        );
        let spec: ProblemSpec = parse_spec(&text).unwrap();
        let again = parse_spec(&serde_json::to_string(&spec).unwrap()).unwrap();
        prop_assert_eq!(spec, again);
    }
}
