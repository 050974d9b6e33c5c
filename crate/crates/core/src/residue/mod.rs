//! Grothendieck residues through the transformation law, and Baum–Bott
//! residues of one-dimensional foliations at isolated zeros.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::ideal::{groebner, Ideal, IdealError, MonomialOrder};
use crate::poly::{jacobian, parse_with_prefix, Monomial, PolyError, PolyMatrix, Polynomial, Rational, VectorField};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ResidueError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("zero locus is not isolated at the origin")]
    NotIsolated,
    #[error("the origin is not a common zero")]
    NotAZero,
    #[error("zero locus is positive-dimensional")]
    NotZeroDimensional,
    #[error("phi has weighted degree {degree} below the slice dimension {m}")]
    DegreeTooLow { degree: u32, m: usize },
    #[error("phi references c{index} but the ambient dimension is {m}")]
    ChernIndexOutOfRange { index: usize, m: usize },
    #[error("phi is not weighted-homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("phi must have positive weighted degree")]
    ZeroDegree,
    #[error("{0} equations in {1} variables")]
    ShapeMismatch(usize, usize),
    #[error("linear part at the origin is singular")]
    DegenerateLinearPart,
}

/// A weighted-homogeneous polynomial in Chern symbols `c_1, c_2, …` (`c_i` of weight `i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiSpec {
    expr: Polynomial,
    degree: u32,
}

fn weight(m: &Monomial) -> u32 {
    m.exponents().iter().enumerate().map(|(i, e)| (i as u32 + 1) * e).sum()
}

impl PhiSpec {
    pub fn parse(text: &str) -> Result<Self, ResidueError> {
        let expr = parse_with_prefix(text, 'c', None)?;
        Self::from_polynomial(expr)
    }

    /// `expr` in variables `c_1..c_N`, variable `i` (0-based) standing for `c_{i+1}`.
    pub fn from_polynomial(expr: Polynomial) -> Result<Self, ResidueError> {
        let mut degree = None;
        for (m, _) in expr.terms() {
            let w = weight(m);
            match degree {
                None => degree = Some(w),
                Some(d) if d != w => return Err(ResidueError::NotHomogeneous(expr.fmt_with_prefix('c'))),
                _ => {}
            }
        }
        match degree {
            Some(d) if d > 0 => Ok(PhiSpec { expr, degree: d }),
            _ => Err(ResidueError::ZeroDegree),
        }
    }

    /// The monomial `c_1^{e_1} c_2^{e_2} …`.
    pub fn monomial(exps: &[u32]) -> Result<Self, ResidueError> {
        Self::from_polynomial(Polynomial::term(Monomial::from_exponents(exps.to_vec()), Rational::from_integer(1.into())))
    }

    /// `c_m`.
    pub fn top(m: usize) -> Self {
        let mut e = vec![0; m];
        e[m - 1] = 1;
        Self::monomial(&e).expect("positive weight")
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn expression(&self) -> &Polynomial {
        &self.expr
    }

    /// Highest Chern index referenced.
    pub fn max_index(&self) -> usize {
        self.expr
            .terms()
            .flat_map(|(m, _)| m.exponents().iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i + 1).collect::<Vec<_>>())
            .max()
            .unwrap_or(0)
    }

    fn check_index(&self, m: usize) -> Result<(), ResidueError> {
        match self.max_index() {
            idx if idx > m => Err(ResidueError::ChernIndexOutOfRange { index: idx, m }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for PhiSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.expr.fmt_with_prefix('c'))
    }
}

/// `φ(c_1(JV), …, c_m(JV))`, with `c_i` the `i`-th principal-minor sum of the Jacobian.
pub fn chern_numerator(phi: &PhiSpec, v: &VectorField) -> Result<Polynomial, ResidueError> {
    let m = v.nvars();
    let j = jacobian(v.components())?;
    phi.check_index(m)?;
    let sums: Vec<Polynomial> = (1..=phi.expr.nvars()).map(|i| j.principal_minor_sum(i)).collect::<Result<_, _>>()?;
    Ok(phi.expr.substitute(&sums))
}

/// Transformation-law data of an isolated zero at the origin:
/// `z_i^{a_i} = Σ_j A_ij f_j`.
struct TransformationLaw {
    exponents: Vec<u32>,
    det: Polynomial,
    multiplicity: usize,
}

fn transformation_law(f: &[Polynomial]) -> Result<TransformationLaw, ResidueError> {
    let m = f.first().map_or(0, |p| p.nvars());
    if f.len() != m || m == 0 {
        return Err(ResidueError::ShapeMismatch(f.len(), m));
    }
    if f.iter().any(|p| p.is_zero()) {
        return Err(ResidueError::NotZeroDimensional);
    }
    let ideal = Ideal::new(m, f.to_vec())?;
    let gb = groebner(&ideal, MonomialOrder::Grevlex, true);
    if gb.is_unit() || f.iter().any(|p| !p.constant_term().is_zero()) {
        return Err(ResidueError::NotAZero);
    }
    if !gb.is_zero_dimensional() {
        return Err(ResidueError::NotZeroDimensional);
    }
    let mut exponents = Vec::with_capacity(m);
    let mut rows = Vec::with_capacity(m * m);
    for var in 0..m {
        let (a, row) = gb.variable_power_in_ideal(var).map_err(|e| match e {
            IdealError::NotNilpotent(_) => ResidueError::NotIsolated,
            other => other.into(),
        })?;
        exponents.push(a);
        rows.extend(row);
    }
    let det = PolyMatrix::new(m, m, rows)?.det()?;
    let multiplicity = gb.standard_monomial_count()?;
    Ok(TransformationLaw { exponents, det, multiplicity })
}

fn residue_from_law(h: &Polynomial, law: &TransformationLaw) -> Rational {
    let target = Monomial::from_exponents(law.exponents.iter().map(|a| a - 1).collect());
    let mut acc = Rational::zero();
    for (m, c) in h.terms() {
        if let Some(q) = m.quotient_of(&target) {
            acc += c * law.det.coefficient(&q);
        }
    }
    acc
}

/// `Res_0 [h dz / (f_1, …, f_m)]`; requires the origin to be the only common zero.
pub fn grothendieck_residue(h: &Polynomial, f: &[Polynomial]) -> Result<Rational, ResidueError> {
    let law = transformation_law(f)?;
    if h.nvars() != f[0].nvars() {
        return Err(PolyError::AmbientMismatch(f[0].nvars(), h.nvars()).into());
    }
    Ok(residue_from_law(h, &law))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueResult {
    pub value: Rational,
    pub point: Vec<Rational>,
    pub phi: PhiSpec,
    /// Milnor number of the zero: the dimension of the local algebra.
    pub multiplicity: usize,
    /// Set when `deg φ` exceeds the dimension, where the residue vanishes identically.
    pub vanishes_by_degree: bool,
}

/// `Res_φ(v, p)` for a vector field with an isolated zero at `p`.
pub fn baum_bott_residue(v: &VectorField, point: &[Rational], phi: &PhiSpec) -> Result<ResidueResult, ResidueError> {
    let m = v.nvars();
    if point.len() != m {
        return Err(ResidueError::ShapeMismatch(point.len(), m));
    }
    let d = phi.degree();
    if (d as usize) < m {
        return Err(ResidueError::DegreeTooLow { degree: d, m });
    }
    phi.check_index(m)?;
    let local = v.translate(point);
    // A positive-dimensional zero set through the point makes it non-isolated.
    let law = transformation_law(local.components()).map_err(|e| match e {
        ResidueError::NotZeroDimensional => ResidueError::NotIsolated,
        e => e,
    })?;
    let (value, vanishes_by_degree) = if d as usize > m {
        (Rational::zero(), true)
    } else {
        (residue_from_law(&chern_numerator(phi, &local)?, &law), false)
    };
    Ok(ResidueResult { value, point: point.to_vec(), phi: phi.clone(), multiplicity: law.multiplicity, vanishes_by_degree })
}

/// `φ(A) / det A` for the linear part `A` at the origin; valid at simple zeros.
pub fn nondegenerate_oracle(v: &VectorField, phi: &PhiSpec) -> Result<Rational, ResidueError> {
    let m = v.nvars();
    let a = jacobian(v.components())?.evaluate(&vec![Rational::zero(); m]);
    let det = a.det();
    if det.is_zero() {
        return Err(ResidueError::DegenerateLinearPart);
    }
    phi.check_index(m)?;
    let sums: Vec<Rational> = (1..=phi.expr.nvars()).map(|i| a.principal_minor_sum(i)).collect();
    let num = phi.expr.evaluate(&sums);
    Ok(num / det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, rat, rat_frac, RatMatrix};

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, n).unwrap()
    }

    fn vf(n: usize, comps: &[&str]) -> VectorField {
        VectorField::new(comps.iter().map(|s| p(s, n)).collect()).unwrap()
    }

    fn linear(a: &RatMatrix) -> VectorField {
        let n = a.rows();
        VectorField::new(
            (0..n)
                .map(|i| (0..n).fold(Polynomial::zero(n), |acc, j| &acc + &Polynomial::var(n, j).scale(a.get(i, j))))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn phi_parsing() {
        let phi = PhiSpec::parse("c1^2*c2 - 2*c4").unwrap();
        assert_eq!(phi.degree(), 4);
        assert_eq!(phi.max_index(), 4);
        assert_eq!(phi.to_string(), "c1^2*c2 - 2*c4");
        assert!(matches!(PhiSpec::parse("c1 + c2"), Err(ResidueError::NotHomogeneous(_))));
        assert_eq!(PhiSpec::parse("3"), Err(ResidueError::ZeroDegree));
        assert!(PhiSpec::parse("c1 +").is_err());
    }

    #[test]
    fn grothendieck_examples() {
        assert_eq!(grothendieck_residue(&p("1", 2), &[p("z1", 2), p("z2", 2)]).unwrap(), rat(1));
        let f = [p("z1^2 - z2", 2), p("z2^2", 2)];
        assert_eq!(grothendieck_residue(&p("z1*z2", 2), &f).unwrap(), rat(1));
        assert_eq!(grothendieck_residue(&p("1", 2), &f).unwrap(), rat(0));
        assert_eq!(grothendieck_residue(&p("z1^3", 2), &f).unwrap(), rat(1));
    }

    #[test]
    fn grothendieck_errors() {
        assert_eq!(grothendieck_residue(&p("1", 2), &[p("z1", 2), p("z1*z2", 2)]), Err(ResidueError::NotZeroDimensional));
        assert_eq!(grothendieck_residue(&p("1", 2), &[p("z1", 2), p("z2^2 - z2", 2)]), Err(ResidueError::NotIsolated));
        assert!(matches!(grothendieck_residue(&p("1", 2), &[p("z1", 2)]), Err(ResidueError::ShapeMismatch(1, 2))));
    }

    #[test]
    fn chern_numerator_examples() {
        assert_eq!(chern_numerator(&PhiSpec::parse("c3").unwrap(), &VectorField::radial(3)).unwrap(), p("1", 3));
        assert_eq!(chern_numerator(&PhiSpec::parse("c1^2").unwrap(), &vf(2, &["z1^2", "z2"])).unwrap(), p("4*z1^2 + 4*z1 + 1", 2));
        assert!(matches!(
            chern_numerator(&PhiSpec::parse("c3").unwrap(), &VectorField::radial(2)),
            Err(ResidueError::ChernIndexOutOfRange { index: 3, m: 2 })
        ));
    }

    #[test]
    fn baum_bott_examples() {
        let r = baum_bott_residue(&VectorField::radial(3), &[rat(0), rat(0), rat(0)], &PhiSpec::parse("c3").unwrap()).unwrap();
        assert_eq!((r.value.clone(), r.multiplicity), (rat(1), 1));
        let r = baum_bott_residue(&VectorField::radial(3), &[rat(0), rat(0), rat(0)], &PhiSpec::parse("c1^3").unwrap()).unwrap();
        assert_eq!(r.value, rat(27));
        for (a, b) in [(1u32, 1u32), (2, 3), (4, 1), (3, 3)] {
            let v = VectorField::new(vec![Polynomial::var(2, 0).pow(a), Polynomial::var(2, 1).pow(b)]).unwrap();
            let r = baum_bott_residue(&v, &[rat(0), rat(0)], &PhiSpec::top(2)).unwrap();
            assert_eq!(r.value, rat(i64::from(a * b)));
            assert_eq!(r.multiplicity, (a * b) as usize);
        }
    }

    #[test]
    fn degree_rules() {
        let origin = [rat(0), rat(0)];
        assert!(matches!(
            baum_bott_residue(&VectorField::radial(2), &origin, &PhiSpec::parse("c1").unwrap()),
            Err(ResidueError::DegreeTooLow { degree: 1, m: 2 })
        ));
        let r = baum_bott_residue(&VectorField::radial(2), &origin, &PhiSpec::parse("c1^3").unwrap()).unwrap();
        assert!(r.vanishes_by_degree);
        assert_eq!(r.value, rat(0));
    }

    #[test]
    fn translated_point() {
        let v = vf(2, &["z1 - 1", "z2^3"]);
        let r = baum_bott_residue(&v, &[rat(1), rat(0)], &PhiSpec::parse("c1^2").unwrap()).unwrap();
        // c1^2 = (1 + 3 z2^2)^2; only the z2^2 coefficient 6 survives against z2^3
        assert_eq!(r.value, rat(6));
        assert_eq!(r.multiplicity, 3);
        assert_eq!(baum_bott_residue(&v, &[rat(0), rat(0)], &PhiSpec::top(2)), Err(ResidueError::NotAZero));
        // two zeros: the global residue cannot be localized
        let w = vf(2, &["z1^2 - z1", "z2"]);
        assert_eq!(baum_bott_residue(&w, &[rat(1), rat(0)], &PhiSpec::top(2)), Err(ResidueError::NotIsolated));
    }

    #[test]
    fn oracle_examples() {
        let d = linear(&RatMatrix::from_ints(2, 2, &[1, 0, 0, 2]));
        assert_eq!(nondegenerate_oracle(&d, &PhiSpec::top(2)).unwrap(), rat(1));
        assert_eq!(nondegenerate_oracle(&d, &PhiSpec::parse("c1^2").unwrap()).unwrap(), rat_frac(9, 2));
        let s = linear(&RatMatrix::from_ints(2, 2, &[0, 1, 1, 0]));
        assert_eq!(nondegenerate_oracle(&s, &PhiSpec::top(2)).unwrap(), rat(1));
        assert_eq!(nondegenerate_oracle(&vf(2, &["z1^2", "z2"]), &PhiSpec::top(2)), Err(ResidueError::DegenerateLinearPart));
    }
}
