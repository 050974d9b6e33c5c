use folres::foliation::{involutivity_check, make_slice, poisson_analysis, pullback_under_projection, singular_ideal, slice_foliation, FoliationPresentation};
use folres::harness::{
    certified_slice_residue, dimension_corpus, dimension_extra_corpus, dimension_theorem_check, non_poisson_fixture, poisson_corpus,
    poisson_theorem_check, slice_corpus, slice_invariance_test, slice_report_json, soares, RecordStatus, SliceOptions,
};
use folres::ideal::{krull_dimension, MonomialOrder};
use folres::poly::{rat, Monomial, PolyForm, Polynomial, VectorField};
use folres::residue::PhiSpec;
use proptest::prelude::*;

fn poly_strategy(n: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, n), -3i64..=3), 1..4)
        .prop_map(move |terms| Polynomial::from_terms(n, terms.into_iter().map(|(e, c)| (Monomial::from_exponents(e), rat(c)))))
}

fn field_strategy(n: usize) -> impl Strategy<Value = VectorField> {
    prop::collection::vec(poly_strategy(n), n).prop_filter("nonzero field", |c| c.iter().any(|p| !p.is_zero())).prop_map(|c| VectorField::new(c).unwrap())
}

/// Linear fields keep the Gröbner computations on the minors small.
fn linear_field_strategy(n: usize) -> impl Strategy<Value = VectorField> {
    prop::collection::vec(-3i64..=3, n * n).prop_filter("nonzero field", |c| c.iter().any(|&x| x != 0)).prop_map(move |c| {
        let comps = (0..n).map(|i| (0..n).fold(Polynomial::zero(n), |acc, j| &acc + &Polynomial::var(n, j).scale(&rat(c[i * n + j])))).collect();
        VectorField::new(comps).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn singular_ideal_ignores_constant_rescaling(u in linear_field_strategy(4), v in linear_field_strategy(4), a in 1i64..6, b in -5i64..0) {
        let f = FoliationPresentation::from_vector_fields(4, vec![u.clone(), v.clone()]);
        prop_assume!(f.is_ok());
        let f = f.unwrap();
        let g = FoliationPresentation::from_vector_fields(4, vec![u.scale(&Polynomial::from_int(4, a)), v.scale(&Polynomial::from_int(4, b))]).unwrap();
        let (i, j) = (singular_ideal(&f).unwrap(), singular_ideal(&g).unwrap());
        let (gi, gj) = (i.groebner(MonomialOrder::Grevlex), j.groebner(MonomialOrder::Grevlex));
        prop_assert_eq!(gi.basis(), gj.basis());
    }

    #[test]
    fn pullbacks_of_one_dimensional_foliations_are_involutive(v in field_strategy(3), n in 4usize..6) {
        let g = FoliationPresentation::from_vector_fields(3, vec![v]).unwrap();
        let f = pullback_under_projection(&g, n).unwrap();
        prop_assert_eq!(f.dimension(), n - 2);
        prop_assert!(involutivity_check(&f).unwrap());
    }

    #[test]
    fn slice_generator_reconstructs_the_pulled_back_form(idx in 0usize..6, seed in 0u64..1000) {
        let fx = &slice_corpus()[idx];
        let spec = make_slice(&fx.foliation, &fx.point, seed, 5).unwrap();
        let Ok(sliced) = slice_foliation(&fx.foliation, &spec) else { return Ok(()) };
        let m = spec.slice_dim();
        let eta = fx.foliation.omega().unwrap().affine_pullback(&spec.point, &spec.matrix).unwrap();
        let rebuilt = PolyForm::volume(m).contract(&sliced.generator).unwrap().scale_poly(&sliced.removed_factor);
        let (key, lead) = rebuilt.components().next().map(|(k, c)| (k.clone(), c.clone())).unwrap();
        let target = eta.coefficient(&key);
        let (mono, c) = lead.terms().next().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let ratio = target.coefficient(&mono) / c;
        prop_assert_eq!(rebuilt.scale_poly(&Polynomial::constant(m, ratio)), eta);
    }

    #[test]
    fn slice_residues_do_not_depend_on_the_seed(idx in 0usize..6, s1 in 0u64..500, s2 in 500u64..1000) {
        let fx = &slice_corpus()[idx];
        let m = fx.foliation.ambient_dim() + 1 - fx.foliation.dimension();
        let inv = slice_invariance_test(&fx.foliation, &fx.point, &PhiSpec::top(m), (s1, s2), &SliceOptions::default()).unwrap();
        prop_assert!(inv.agree);
        prop_assert_eq!(inv.first.residue.value.clone(), rat(inv.first.residue.multiplicity as i64));
    }
}

#[test]
fn soares_family_has_singular_dimension_r() {
    for (m, r, s) in [(2, 3, 3), (3, 3, 3), (4, 3, 3)] {
        let f = soares(m, r, s);
        let k = f.dimension() as i64;
        let dim = krull_dimension(&singular_ideal(&f).unwrap());
        assert_eq!(dim, r as i64, "m={}", m);
        assert_eq!(dim, k - s as i64 + 1);
        assert!(dim <= k - 2);
    }
}

#[test]
fn dimension_theorem_has_no_violations() {
    let corpus = dimension_corpus();
    assert!(corpus.len() >= 10);
    assert!(corpus.iter().all(|fx| fx.foliation.ambient_dim() <= 9 && 2 * fx.foliation.dimension() <= fx.foliation.ambient_dim()));
    let report = dimension_theorem_check(&corpus).unwrap();
    assert!(report.passed(), "{:?}", report.violations);
    assert!(report.records.iter().all(|r| matches!(r.status, RecordStatus::Pass | RecordStatus::Vacuous)));
    assert!(report.records.iter().filter(|r| r.status == RecordStatus::Pass).count() >= 10);
}

#[test]
fn soares_fixtures_are_out_of_hypothesis_and_sharp() {
    let report = dimension_theorem_check(&dimension_extra_corpus()).unwrap();
    assert!(report.passed());
    let soares_record = report.records.iter().find(|r| r.fixture.starts_with("soares")).unwrap();
    assert_eq!(soares_record.status, RecordStatus::OutOfHypothesis);
    assert_eq!(soares_record.dim, Some(soares_record.k as i64 - 2));
}

#[test]
fn poisson_theorem_has_no_violations() {
    let corpus = poisson_corpus();
    assert!(corpus.len() >= 5);
    for fx in &corpus {
        let a = poisson_analysis(&fx.foliation).unwrap();
        assert!(a.jacobi_ok, "{}", fx.id);
        assert_eq!(a.generic_rank, 2, "{}", fx.id);
        assert!((4..=6).contains(&fx.foliation.ambient_dim()));
    }
    let report = poisson_theorem_check(&corpus).unwrap();
    assert!(report.passed(), "{:?}", report.violations);
}

#[test]
fn jacobi_failure_is_rejected() {
    let fx = non_poisson_fixture();
    assert!(!poisson_analysis(&fx.foliation).unwrap().jacobi_ok);
    let report = poisson_theorem_check(&[fx]).unwrap();
    assert_eq!(report.records[0].status, RecordStatus::Rejected);
}

#[test]
fn slice_reports_are_deterministic() {
    for fx in slice_corpus() {
        let m = fx.foliation.ambient_dim() + 1 - fx.foliation.dimension();
        let opts = SliceOptions { seed: 3, ..Default::default() };
        let a = certified_slice_residue(&fx.foliation, &fx.point, &PhiSpec::top(m), &opts).unwrap();
        let b = certified_slice_residue(&fx.foliation, &fx.point, &PhiSpec::top(m), &opts).unwrap();
        let (ja, jb) = (slice_report_json(&fx.id, &a).to_string(), slice_report_json(&fx.id, &b).to_string());
        assert_eq!(ja, jb);
    }
}
