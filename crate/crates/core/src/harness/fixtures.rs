//! Shipped fixture corpora.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::foliation::{pullback_under_projection, FoliationPresentation};
use crate::poly::{parse_polynomial, rat, PolyForm, PolyMultivector, Polynomial, RatMatrix, Rational, VectorField};

/// A named foliation.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub id: String,
    pub foliation: FoliationPresentation,
}

/// A fixture together with a point on an expected-dimension component of its singular set.
#[derive(Clone, Debug)]
pub struct PointFixture {
    pub id: String,
    pub foliation: FoliationPresentation,
    pub point: Vec<Rational>,
}

fn poly(s: &str, n: usize) -> Polynomial {
    parse_polynomial(s, n).expect("fixture polynomial")
}

fn field(n: usize, comps: &[&str]) -> VectorField {
    VectorField::new(comps.iter().map(|s| poly(s, n)).collect()).expect("fixture field")
}

fn fields(n: usize, fs: Vec<VectorField>) -> FoliationPresentation {
    FoliationPresentation::from_vector_fields(n, fs).expect("fixture fields")
}

fn fixture(id: &str, foliation: FoliationPresentation) -> Fixture {
    Fixture { id: id.to_string(), foliation }
}

/// One-dimensional foliation on `C^m` generated by `v`, lifted to `C^n`.
pub fn lifted(v: VectorField, n: usize) -> FoliationPresentation {
    let m = v.nvars();
    pullback_under_projection(&fields(m, vec![v]), n).expect("lift")
}

pub fn radial_lift(m: usize, n: usize) -> FoliationPresentation {
    lifted(VectorField::radial(m), n)
}

/// The foliation `F_s` on `C^{2r+s}` defined by `df ∧ dz_1 ∧ … ∧ dz_r`, where
/// `f = z_1^m + z_1^{m−1}(z_2 + … + z_r) + Σ_{j>r} z_j^m`.
pub fn soares(m: u32, r: usize, s: usize) -> FoliationPresentation {
    let n = 2 * r + s;
    let z = |i: usize| Polynomial::var(n, i);
    let mut f = z(0).pow(m);
    let tail = (1..r).fold(Polynomial::zero(n), |acc, i| &acc + &z(i));
    f = &f + &(&z(0).pow(m - 1) * &tail);
    for j in r..n {
        f = &f + &z(j).pow(m);
    }
    let mut w = PolyForm::differential(&f);
    for i in 0..r {
        w = w.wedge(&PolyForm::dz(n, i)).expect("degree within ambient");
    }
    FoliationPresentation::from_form(w).expect("form of degree r+1")
}

fn origin(n: usize) -> Vec<Rational> {
    vec![rat(0); n]
}

/// Foliations with a singular component of the expected dimension `k − 1`
/// through the chosen point.
pub fn slice_corpus() -> Vec<PointFixture> {
    let mut shifted = origin(4);
    shifted[3] = rat(3);
    let pf = |id: &str, foliation: FoliationPresentation, point: Vec<Rational>| PointFixture { id: id.to_string(), foliation, point };
    vec![
        pf("radial-3-in-4", radial_lift(3, 4), origin(4)),
        pf("squares-3-in-4", lifted(field(3, &["z1^2", "z2^2", "z3^2"]), 4), origin(4)),
        pf("radial-3-in-5", radial_lift(3, 5), origin(5)),
        pf("radial-3-in-4-shifted", radial_lift(3, 4), shifted),
        pf("cusp-2-in-4", lifted(field(2, &["z1^2 + z2", "z2^3"]), 4), origin(4)),
        pf("radial-2-in-3", radial_lift(2, 3), origin(3)),
    ]
}

/// Involutive vector-field presentations with `k ≤ n/2` and `k ≤ n − 2`, `n ≤ 9`.
pub fn dimension_corpus() -> Vec<Fixture> {
    let n4 = |comps: &[&str]| field(4, comps);
    vec![
        fixture("radial-3-in-4", radial_lift(3, 4)),
        fixture("squares-3-in-4", lifted(field(3, &["z1^2", "z2^2", "z3^2"]), 4)),
        fixture("radial-5-in-6", radial_lift(5, 6)),
        fixture("radial-4-in-6", radial_lift(4, 6)),
        fixture("squares-partial-3-in-4", lifted(field(3, &["z1^2", "z2^2", "0"]), 4)),
        fixture("coordinate-2-in-4", fields(4, vec![VectorField::coordinate(4, 0), VectorField::coordinate(4, 1)])),
        fixture("radial-and-weights-4", fields(4, vec![VectorField::radial(4), n4(&["z1", "2*z2", "3*z3", "4*z4"])])),
        fixture("split-radial-4", fields(4, vec![n4(&["z1", "z2", "0", "0"]), n4(&["0", "0", "z3", "z4"])])),
        fixture("radial-4-in-5", radial_lift(4, 5)),
        fixture("mixed-3-in-4", lifted(field(3, &["z1^2", "z2", "z3"]), 4)),
        fixture("radial-8-in-9", radial_lift(8, 9)),
        fixture("cusp-3-in-4", lifted(field(3, &["z1^2 + z2", "z2^3", "z3"]), 4)),
    ]
}

/// Fixtures outside the hypotheses of the dimension theorem.
pub fn dimension_extra_corpus() -> Vec<Fixture> {
    vec![
        fixture("soares-3-3-3", soares(3, 3, 3)),
        fixture("contact-3", fields(3, vec![field(3, &["1", "0", "z2"]), VectorField::coordinate(3, 1)])),
        fixture("non-involutive-4", fields(4, vec![field(4, &["1", "0", "z2", "0"]), field(4, &["0", "1", "0", "0"])])),
    ]
}

fn bivector(n: usize, entries: &[(usize, usize, &str)]) -> FoliationPresentation {
    let mut s = PolyMultivector::zero(n, 2);
    for &(i, j, c) in entries {
        s.add_component(&[i - 1, j - 1], poly(c, n)).expect("fixture entry");
    }
    FoliationPresentation::from_poisson(s).expect("bivector")
}

/// Poisson structures of generic rank 2 on `C^4`, `C^5`, `C^6`.
pub fn poisson_corpus() -> Vec<Fixture> {
    vec![
        fixture("linear-degenerate-4", bivector(4, &[(1, 2, "z3")])),
        fixture("symplectic-4", bivector(4, &[(1, 2, "1")])),
        fixture("square-degenerate-6", bivector(6, &[(1, 2, "z3^2")])),
        fixture("so3-times-line-4", bivector(4, &[(1, 2, "z3"), (2, 3, "z1"), (3, 1, "z2")])),
        fixture("on-leaf-coordinate-5", bivector(5, &[(1, 2, "z1")])),
        fixture("product-5", bivector(5, &[(3, 4, "z1*z2")])),
    ]
}

/// `∂1∧∂2 + z1 ∂3∧∂4`, which violates the Jacobi identity.
pub fn non_poisson_fixture() -> Fixture {
    fixture("non-poisson-4", bivector(4, &[(1, 2, "1"), (3, 4, "z1")]))
}

/// The linear field `z ↦ A z`.
pub fn linear_field(a: &RatMatrix) -> VectorField {
    let m = a.rows();
    let comps = (0..m)
        .map(|i| (0..m).fold(Polynomial::zero(m), |acc, j| &acc + &Polynomial::var(m, j).scale(a.get(i, j))))
        .collect();
    VectorField::new(comps).expect("square matrix")
}

/// `count` invertible integer `m×m` matrices from a seeded generator,
/// alternating diagonal and dense, with entries in `[−5, 5]`.
pub fn seeded_linear_parts(m: usize, count: usize, seed: u64) -> Vec<RatMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let diagonal = out.len() % 2 == 0;
        let data: Vec<Rational> = (0..m * m)
            .map(|idx| if diagonal && idx % (m + 1) != 0 { rat(0) } else { rat(rng.gen_range(-5..=5)) })
            .collect();
        let a = RatMatrix::new(m, m, data);
        if a.rank() == m {
            out.push(a);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foliation::{involutivity_check, singular_ideal};
    use crate::ideal::MonomialOrder;

    #[test]
    fn soares_singular_ideal() {
        let f = soares(3, 3, 3);
        assert_eq!((f.ambient_dim(), f.dimension()), (9, 5));
        let gb = singular_ideal(&f).unwrap().groebner(MonomialOrder::Grevlex);
        assert_eq!(gb.basis().len(), 6);
        for j in 3..9 {
            assert!(gb.basis().contains(&Polynomial::var(9, j).pow(2)));
        }
        assert_eq!(gb.krull_dimension(), 3);
    }

    #[test]
    fn corpora_are_well_formed() {
        assert!(slice_corpus().len() >= 5);
        assert!(dimension_corpus().len() >= 10);
        for f in dimension_corpus() {
            let (n, k) = (f.foliation.ambient_dim(), f.foliation.dimension());
            assert!(n <= 9 && 2 * k <= n && k + 2 <= n, "{}", f.id);
            assert!(involutivity_check(&f.foliation).unwrap(), "{}", f.id);
        }
        assert!(poisson_corpus().len() >= 5);
        for f in poisson_corpus() {
            assert_eq!(f.foliation.dimension(), 2);
            assert!((4..=6).contains(&f.foliation.ambient_dim()));
        }
    }
}
