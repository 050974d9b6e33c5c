//! Gröbner-basis computations over the rationals: normal forms, membership,
//! dimension of vanishing loci, cofactor-tracked division, and pure powers of
//! variables in zero-dimensional ideals.

mod gcd;
mod groebner;
mod order;

use thiserror::Error;

pub use gcd::{poly_gcd, poly_gcd_many};
pub use order::MonomialOrder;

use crate::poly::{Monomial, Polynomial};
use crate::util::combinations;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("ambient mismatch: {0} vs {1} variables")]
    AmbientMismatch(usize, usize),
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("basis was computed without cofactor tracking")]
    CofactorsUnavailable,
    #[error("generators differ from those the basis was computed from")]
    GeneratorMismatch,
    #[error("z{0} is not nilpotent modulo the ideal (zeros away from the origin)")]
    NotNilpotent(usize),
    #[error("division certificate failed: {0}")]
    CertificateFailed(String),
}

/// Ideal of `Q[z1..zn]` given by generators; zero generators are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    nvars: usize,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(nvars: usize, generators: Vec<Polynomial>) -> Result<Self, IdealError> {
        if let Some(g) = generators.iter().find(|g| g.nvars() != nvars) {
            return Err(IdealError::AmbientMismatch(nvars, g.nvars()));
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { nvars, generators })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn groebner(&self, order: MonomialOrder) -> GroebnerBasis {
        groebner(self, order, false)
    }
}

/// Reduced Gröbner basis together with the order it was computed for.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    nvars: usize,
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    leading: Vec<Monomial>,
    reduced: bool,
    source: Vec<Polynomial>,
    cofactors: Option<Vec<Vec<Polynomial>>>,
}

/// Reduced Gröbner basis of `ideal`; with `track_cofactors` every basis element
/// also carries its expression in the source generators.
pub fn groebner(ideal: &Ideal, order: MonomialOrder, track_cofactors: bool) -> GroebnerBasis {
    let c = groebner::buchberger(ideal.nvars, &ideal.generators, &order, track_cofactors);
    GroebnerBasis {
        nvars: ideal.nvars,
        order,
        basis: c.basis,
        leading: c.leading,
        reduced: true,
        source: ideal.generators.clone(),
        cofactors: c.cofactors,
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.order == other.order && self.basis == other.basis
    }
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn source_generators(&self) -> &[Polynomial] {
        &self.source
    }

    /// Rows expressing each basis element in the source generators.
    pub fn cofactors(&self) -> Option<&[Vec<Polynomial>]> {
        self.cofactors.as_deref()
    }

    pub fn is_unit(&self) -> bool {
        self.leading.iter().any(|m| m.is_one())
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        groebner::remainder(p, &self.basis, &self.order)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Every variable has a pure power among the leading monomials (and the ideal is proper).
    pub fn is_zero_dimensional(&self) -> bool {
        !self.is_unit()
            && (0..self.nvars).all(|i| self.leading.iter().any(|m| m.pure_power_var() == Some(i)))
    }

    /// Dimension of `V(I) ⊂ C^n`: the largest set of variables containing the
    /// support of no leading monomial. The unit ideal has dimension −1.
    pub fn krull_dimension(&self) -> i64 {
        if self.is_unit() {
            return -1;
        }
        for size in (0..=self.nvars).rev() {
            let found = combinations(self.nvars, size).into_iter().any(|set| {
                let mut inside = vec![false; self.nvars];
                for &i in &set {
                    inside[i] = true;
                }
                !self
                    .leading
                    .iter()
                    .any(|m| m.exponents().iter().enumerate().all(|(i, &e)| e == 0 || inside[i]))
            });
            if found {
                return size as i64;
            }
        }
        -1
    }

    /// Monomials outside the leading-term ideal (a basis of the quotient ring).
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>, IdealError> {
        if !self.is_zero_dimensional() {
            return Err(IdealError::NotZeroDimensional);
        }
        let bounds: Vec<u32> = (0..self.nvars)
            .map(|i| {
                self.leading
                    .iter()
                    .filter(|m| m.pure_power_var() == Some(i))
                    .map(|m| m.exponents()[i])
                    .min()
                    .expect("zero-dimensional")
            })
            .collect();
        let mut out = Vec::new();
        let mut e = vec![0u32; self.nvars];
        loop {
            let m = Monomial::from_exponents(e.clone());
            if !self.leading.iter().any(|l| l.divides(&m)) {
                out.push(m);
            }
            let mut k = 0;
            loop {
                if k == self.nvars {
                    return Ok(out);
                }
                e[k] += 1;
                if e[k] < bounds[k] {
                    break;
                }
                e[k] = 0;
                k += 1;
            }
        }
    }

    pub fn standard_monomial_count(&self) -> Result<usize, IdealError> {
        Ok(self.standard_monomials()?.len())
    }

    /// Writes `p = Σ cofactor_i · gens_i + remainder`, checking the identity by expansion.
    pub fn divide_with_cofactors(&self, p: &Polynomial, gens: &[Polynomial]) -> Result<(Vec<Polynomial>, Polynomial), IdealError> {
        let rows = self.cofactors.as_ref().ok_or(IdealError::CofactorsUnavailable)?;
        if gens != self.source.as_slice() {
            return Err(IdealError::GeneratorMismatch);
        }
        let (quot, rem) = groebner::divide(p, &self.basis, &self.order);
        let mut cof = vec![Polynomial::zero(self.nvars); gens.len()];
        for (q, row) in quot.iter().zip(rows) {
            if q.is_zero() {
                continue;
            }
            for (c, r) in cof.iter_mut().zip(row) {
                if !r.is_zero() {
                    *c = &*c + &(q * r);
                }
            }
        }
        let recombined = cof.iter().zip(gens).fold(rem.clone(), |acc, (c, g)| &acc + &(c * g));
        if &recombined != p {
            return Err(IdealError::CertificateFailed(format!("{} != Σ c_i g_i + r", p)));
        }
        Ok((cof, rem))
    }

    /// Smallest `a` with `z_i^a` in the ideal, and its expression in the source generators.
    pub fn variable_power_in_ideal(&self, var: usize) -> Result<(u32, Vec<Polynomial>), IdealError> {
        let count = self.standard_monomial_count()?;
        if self.cofactors.is_none() {
            return Err(IdealError::CofactorsUnavailable);
        }
        let zi = Polynomial::var(self.nvars, var);
        let mut power = zi.clone();
        for a in 1..=count as u32 {
            if self.contains(&power) {
                let (cof, rem) = self.divide_with_cofactors(&power, &self.source.clone())?;
                debug_assert!(rem.is_zero());
                return Ok((a, cof));
            }
            power = &power * &zi;
        }
        Err(IdealError::NotNilpotent(var + 1))
    }
}

/// Dimension of `V(I)`, −1 for the unit ideal.
pub fn krull_dimension(ideal: &Ideal) -> i64 {
    ideal.groebner(MonomialOrder::Grevlex).krull_dimension()
}

/// True iff `V(I) = {0}` over `C`: the ideal is zero-dimensional and for each
/// variable the eliminant in that variable alone is a pure power of it.
pub fn zero_locus_is_origin_only(ideal: &Ideal) -> bool {
    let n = ideal.nvars;
    let gb = ideal.groebner(MonomialOrder::Grevlex);
    if !gb.is_zero_dimensional() {
        return false;
    }
    if n == 0 {
        return true;
    }
    (0..n).all(|i| match eliminant(ideal, i) {
        Some(e) => e.is_monomial() && e.degree() > 0,
        None => false,
    })
}

/// Generator of `I ∩ Q[z_i]`, computed with an elimination order that puts
/// every other variable in the first block.
pub fn eliminant(ideal: &Ideal, var: usize) -> Option<Polynomial> {
    let n = ideal.nvars;
    // variable `var` moves to the last slot, the others keep their relative order
    let perm: Vec<usize> = (0..n)
        .map(|j| match j.cmp(&var) {
            std::cmp::Ordering::Less => j,
            std::cmp::Ordering::Equal => n - 1,
            std::cmp::Ordering::Greater => j - 1,
        })
        .collect();
    let gens = ideal.generators.iter().map(|g| g.permute_vars(&perm)).collect();
    let permuted = Ideal { nvars: n, generators: gens };
    let gb = permuted.groebner(MonomialOrder::Block { split: n - 1 });
    let inverse: Vec<usize> = (0..n).map(|j| perm.iter().position(|&p| p == j).expect("permutation")).collect();
    gb.basis()
        .iter()
        .find(|g| g.terms().all(|(m, _)| m.exponents()[..n - 1].iter().all(|&e| e == 0)))
        .map(|g| g.permute_vars(&inverse))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn ideal(n: usize, gens: &[&str]) -> Ideal {
        Ideal::new(n, gens.iter().map(|g| parse_polynomial(g, n).unwrap()).collect()).unwrap()
    }

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, n).unwrap()
    }

    #[test]
    fn already_reduced_basis() {
        let gb = ideal(2, &["z1", "z2"]).groebner(MonomialOrder::Grevlex);
        assert_eq!(gb.basis(), &[p("z1", 2), p("z2", 2)]);
    }

    #[test]
    fn redundant_generator_eliminated() {
        let gb = ideal(1, &["z1^2 - z1", "z1"]).groebner(MonomialOrder::Grevlex);
        assert_eq!(gb.basis(), &[p("z1", 1)]);
    }

    #[test]
    fn degenerate_pair_staircase() {
        // z1^2 − z2 and z2^2 have coprime leading terms, so they already form the
        // reduced basis; the staircase is {1, z1, z2, z1 z2}.
        let gb = ideal(2, &["z1^2 - z2", "z2^2"]).groebner(MonomialOrder::Grevlex);
        assert_eq!(gb.basis(), &[p("z1^2 - z2", 2), p("z2^2", 2)]);
        assert!(gb.contains(&p("z1^2*z2", 2)));
        let sm = gb.standard_monomials().unwrap();
        let expect: Vec<Monomial> = ["1", "z1", "z2", "z1*z2"]
            .iter()
            .map(|s| p(s, 2).terms().next().unwrap().0.clone())
            .collect();
        assert_eq!(sm.len(), 4);
        for m in expect {
            assert!(sm.contains(&m));
        }
    }

    #[test]
    fn normal_forms() {
        let gb = ideal(1, &["z1"]).groebner(MonomialOrder::Grevlex);
        assert!(gb.normal_form(&p("z1^2", 1)).is_zero());
        let gb = ideal(2, &["z1^2 - z2", "z2^2"]).groebner(MonomialOrder::Grevlex);
        assert_eq!(gb.normal_form(&p("z1*z2", 2)), p("z1*z2", 2));
        assert_eq!(gb.normal_form(&p("1", 2)), p("1", 2));
    }

    #[test]
    fn cofactor_division() {
        let i = ideal(2, &["z1^2 - z2", "z2^2"]);
        let gb = groebner(&i, MonomialOrder::Grevlex, true);
        let (cof, rem) = gb.divide_with_cofactors(&p("z1^4", 2), i.generators()).unwrap();
        assert!(rem.is_zero());
        assert_eq!(cof, vec![p("z1^2 + z2", 2), p("1", 2)]);

        let i = ideal(1, &["z1"]);
        let gb = groebner(&i, MonomialOrder::Grevlex, true);
        let (cof, rem) = gb.divide_with_cofactors(&p("z1", 1), i.generators()).unwrap();
        assert_eq!((cof, rem), (vec![p("1", 1)], Polynomial::zero(1)));

        let i = ideal(2, &["z1", "z2"]);
        let gb = groebner(&i, MonomialOrder::Grevlex, true);
        let (cof, rem) = gb.divide_with_cofactors(&p("1", 2), i.generators()).unwrap();
        assert_eq!(rem, p("1", 2));
        assert!(cof.iter().all(|c| c.is_zero()));

        let untracked = i.groebner(MonomialOrder::Grevlex);
        assert_eq!(untracked.divide_with_cofactors(&p("1", 2), i.generators()), Err(IdealError::CofactorsUnavailable));
    }

    #[test]
    fn dimensions() {
        let gens: Vec<String> = (4..=9).map(|j| format!("z{}", j)).collect();
        let refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
        assert_eq!(krull_dimension(&ideal(9, &refs)), 3);
        assert_eq!(krull_dimension(&ideal(3, &["z1", "z2", "z3"])), 0);
        assert_eq!(krull_dimension(&ideal(2, &["z1^2 - z2", "z2^2"])), 0);
        assert_eq!(krull_dimension(&ideal(2, &["z1 + 1", "z1"])), -1);
        assert_eq!(krull_dimension(&Ideal::new(3, vec![]).unwrap()), 3);
    }

    #[test]
    fn variable_powers() {
        let i = ideal(2, &["z1^2", "z2"]);
        let gb = groebner(&i, MonomialOrder::Grevlex, true);
        assert_eq!(gb.variable_power_in_ideal(0).unwrap().0, 2);
        assert_eq!(gb.variable_power_in_ideal(1).unwrap().0, 1);

        let i = ideal(2, &["z1^2 - z2", "z2^2"]);
        let gb = groebner(&i, MonomialOrder::Grevlex, true);
        let (a, cof) = gb.variable_power_in_ideal(0).unwrap();
        assert_eq!(a, 4);
        assert_eq!(cof, vec![p("z1^2 + z2", 2), p("1", 2)]);
        assert_eq!(gb.variable_power_in_ideal(1).unwrap().0, 2);

        let i = ideal(2, &["z1 - z2", "z2^3"]);
        let gb = groebner(&i, MonomialOrder::Grevlex, true);
        assert_eq!(gb.variable_power_in_ideal(0).unwrap().0, 3);
        assert_eq!(gb.variable_power_in_ideal(1).unwrap().0, 3);

        let i = ideal(2, &["z1^2 - 1", "z2"]);
        let gb = groebner(&i, MonomialOrder::Grevlex, true);
        assert_eq!(gb.variable_power_in_ideal(0), Err(IdealError::NotNilpotent(1)));
        let i = ideal(2, &["z1"]);
        let gb = groebner(&i, MonomialOrder::Grevlex, true);
        assert_eq!(gb.variable_power_in_ideal(0), Err(IdealError::NotZeroDimensional));
    }

    #[test]
    fn standard_monomial_counts() {
        assert_eq!(ideal(2, &["z1", "z2"]).groebner(MonomialOrder::Grevlex).standard_monomial_count().unwrap(), 1);
        assert_eq!(ideal(2, &["z1^2", "z2"]).groebner(MonomialOrder::Grevlex).standard_monomial_count().unwrap(), 2);
        assert_eq!(ideal(2, &["z1^2 - z2", "z2^2"]).groebner(MonomialOrder::Grevlex).standard_monomial_count().unwrap(), 4);
        assert!(ideal(2, &["z1"]).groebner(MonomialOrder::Grevlex).standard_monomial_count().is_err());
    }

    #[test]
    fn origin_only() {
        assert!(zero_locus_is_origin_only(&ideal(2, &["z1^2", "z2"])));
        assert!(!zero_locus_is_origin_only(&ideal(2, &["z1^2 - 1", "z2"])));
        assert!(zero_locus_is_origin_only(&ideal(2, &["z1^2 - z2", "z2^2"])));
        assert_eq!(eliminant(&ideal(2, &["z1^2 - z2", "z2^2"]), 0).unwrap(), p("z1^4", 2));
        assert!(!zero_locus_is_origin_only(&ideal(2, &["z1"])));
        assert!(!zero_locus_is_origin_only(&ideal(2, &["1"])));
        // zeros at the origin and at (1, 1)
        assert!(!zero_locus_is_origin_only(&ideal(2, &["z1^2 - z1", "z2 - z1"])));
    }

    #[test]
    fn groebner_is_idempotent() {
        let i = ideal(3, &["z1^2 + z2*z3", "z2^2 - z1", "z3^3 + z1*z2"]);
        let gb = i.groebner(MonomialOrder::Grevlex);
        let again = Ideal::new(3, gb.basis().to_vec()).unwrap().groebner(MonomialOrder::Grevlex);
        assert_eq!(gb, again);
        for g in i.generators() {
            assert!(gb.contains(g));
        }
    }
}
