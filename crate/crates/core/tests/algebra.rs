use folres::poly::{jacobian, lie_bracket, rat, Monomial, PolyForm, Polynomial, RatMatrix, Rational, VectorField};
use proptest::prelude::*;

const N: usize = 3;

fn poly_strategy(n: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, n), -4i64..=4), 0..5)
        .prop_map(move |terms| Polynomial::from_terms(n, terms.into_iter().map(|(e, c)| (Monomial::from_exponents(e), rat(c)))))
}

fn field_strategy(n: usize) -> impl Strategy<Value = VectorField> {
    prop::collection::vec(poly_strategy(n), n).prop_map(|c| VectorField::new(c).unwrap())
}

fn form_strategy(n: usize, degree: usize) -> impl Strategy<Value = PolyForm> {
    let bases = folres::combinations(n, degree);
    prop::collection::vec(poly_strategy(n), bases.len()).prop_map(move |cs| {
        let mut w = PolyForm::zero(n, degree);
        for (idx, c) in bases.iter().zip(cs) {
            w.add_component(idx, c).unwrap();
        }
        w
    })
}

fn point_strategy(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(-3i64..=3, n).prop_map(|v| v.into_iter().map(rat).collect())
}

/// `det(I + tM)` expanded by Lagrange interpolation at `t = 0..m`; coefficient of `t^i`.
fn char_coefficients(m: &RatMatrix) -> Vec<Rational> {
    let n = m.rows();
    let values: Vec<Rational> = (0..=n)
        .map(|t| {
            let data = (0..n * n).map(|k| {
                let (i, j) = (k / n, k % n);
                let id = if i == j { rat(1) } else { rat(0) };
                id + rat(t as i64) * m.get(i, j)
            });
            RatMatrix::new(n, n, data.collect()).det()
        })
        .collect();
    // Newton forward differences give the coefficients in the falling-factorial basis.
    let mut diffs = values.clone();
    let mut newton = Vec::new();
    for level in 0..=n {
        newton.push(diffs[0].clone());
        diffs = (0..n - level).map(|i| &diffs[i + 1] - &diffs[i]).collect();
    }
    let mut coeffs = vec![rat(0); n + 1];
    let mut basis = vec![rat(1)];
    for (k, d) in newton.iter().enumerate() {
        let fact: i64 = (1..=k as i64).product();
        for (i, b) in basis.iter().enumerate() {
            coeffs[i] += d * b / rat(fact);
        }
        let mut next = vec![rat(0); basis.len() + 1];
        for (i, b) in basis.iter().enumerate() {
            next[i + 1] += b;
            next[i] -= b * rat(k as i64);
        }
        basis = next;
    }
    coeffs
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly_strategy(N), b in poly_strategy(N), c in poly_strategy(N)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(N), a.clone());
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly_strategy(N), b in poly_strategy(N), p in point_strategy(N)) {
        prop_assert_eq!((&a * &b).evaluate(&p), a.evaluate(&p) * b.evaluate(&p));
        prop_assert_eq!((&a + &b).evaluate(&p), a.evaluate(&p) + b.evaluate(&p));
    }

    #[test]
    fn leibniz_rule(a in poly_strategy(N), b in poly_strategy(N), var in 0..N) {
        let lhs = (&a * &b).d(var);
        let rhs = &(&a.d(var) * &b) + &(&a * &b.d(var));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn wedge_graded_commutativity(a in form_strategy(N, 1), b in form_strategy(N, 1), c in form_strategy(N, 2)) {
        prop_assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap().neg());
        prop_assert!(a.wedge(&a).unwrap().is_zero());
        // Degrees 1 and 2 commute.
        prop_assert_eq!(a.wedge(&c).unwrap(), c.wedge(&a).unwrap());
    }

    #[test]
    fn wedge_is_associative(a in form_strategy(N, 1), b in form_strategy(N, 1), c in form_strategy(N, 1)) {
        prop_assert_eq!(a.wedge(&b).unwrap().wedge(&c).unwrap(), a.wedge(&b.wedge(&c).unwrap()).unwrap());
    }

    #[test]
    fn contraction_is_an_antiderivation(a in form_strategy(N, 1), b in form_strategy(N, 2), v in field_strategy(N)) {
        let lhs = a.wedge(&b).unwrap().contract(&v).unwrap();
        let left = PolyForm::scalar(a.contract(&v).unwrap().coefficient(&[])).wedge(&b).unwrap();
        let right = a.wedge(&b.contract(&v).unwrap()).unwrap().neg();
        prop_assert_eq!(lhs, left.add(&right).unwrap());
    }

    #[test]
    fn contraction_squares_to_zero(w in form_strategy(N, 2), v in field_strategy(N)) {
        prop_assert!(w.contract(&v).unwrap().contract(&v).unwrap().is_zero());
    }

    #[test]
    fn bracket_jacobi_identity(u in field_strategy(N), v in field_strategy(N), w in field_strategy(N)) {
        let uv_w = lie_bracket(&lie_bracket(&u, &v).unwrap(), &w).unwrap();
        let vw_u = lie_bracket(&lie_bracket(&v, &w).unwrap(), &u).unwrap();
        let wu_v = lie_bracket(&lie_bracket(&w, &u).unwrap(), &v).unwrap();
        prop_assert!(uv_w.add(&vw_u).add(&wu_v).is_zero());
        prop_assert_eq!(lie_bracket(&u, &v).unwrap(), lie_bracket(&v, &u).unwrap().scale(&Polynomial::from_int(N, -1)));
    }

    #[test]
    fn bracket_acts_as_commutator(u in field_strategy(N), v in field_strategy(N), f in poly_strategy(N)) {
        let lhs = lie_bracket(&u, &v).unwrap().apply(&f);
        let rhs = &u.apply(&v.apply(&f)) - &v.apply(&u.apply(&f));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn principal_minor_sums_match_characteristic_oracle(entries in prop::collection::vec(-4i64..=4, 16)) {
        let m = RatMatrix::from_ints(4, 4, &entries);
        let coeffs = char_coefficients(&m);
        for i in 1..=4 {
            prop_assert_eq!(m.principal_minor_sum(i), coeffs[i].clone());
        }
    }

    #[test]
    fn jacobian_minor_sums_commute_with_evaluation(v in field_strategy(N), p in point_strategy(N)) {
        let j = jacobian(v.components()).unwrap();
        for i in 1..=N {
            prop_assert_eq!(j.principal_minor_sum(i).unwrap().evaluate(&p), j.evaluate(&p).principal_minor_sum(i));
        }
    }
}

#[test]
fn differential_of_product_is_leibniz() {
    let f = folres::poly::parse_polynomial("z1^2*z2 - 3*z3", N).unwrap();
    let g = folres::poly::parse_polynomial("z2 + z1*z3^2", N).unwrap();
    let lhs = PolyForm::differential(&(&f * &g));
    let rhs = PolyForm::differential(&f).scale_poly(&g).add(&PolyForm::differential(&g).scale_poly(&f)).unwrap();
    assert_eq!(lhs, rhs);
}
