//! Foliations presented by vector fields, twisted forms, or Poisson bivectors.
//!
//! Every presentation is reduced to its defining `(n−k)`-form `ω_F`; the
//! singular locus is the vanishing locus of its coefficients.

mod json;
mod poisson;
mod slice;

use thiserror::Error;

pub use json::{DataEntryJson, FormEntryJson, PresentationJson};
pub use poisson::{poisson_analysis, DegeneracyStratum, PoissonAnalysis};
pub use slice::{make_slice, slice_foliation, SliceFoliation, SliceSpec};

use crate::ideal::{poly_gcd_many, Ideal, IdealError};
use crate::poly::{lie_bracket, PolyError, PolyForm, PolyMatrix, PolyMultivector, Polynomial, VectorField};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FoliationError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("operation needs a {expected} presentation")]
    WrongKind { expected: &'static str },
    #[error("the defining form vanishes identically")]
    IdenticallyZeroForm,
    #[error("bivector matrix is not skew-symmetric")]
    NonSkew,
    #[error("slice is not generically transverse: the pulled-back form vanishes identically")]
    NotTransverse,
    #[error("slice generator vanishes after saturation")]
    DegenerateSlice,
    #[error("no full-rank slice matrix in {0} draws")]
    RankDrawsExhausted(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Presentation {
    /// `k` vector fields spanning the tangent sheaf generically.
    VectorFields(Vec<VectorField>),
    /// A twisted `(n−k)`-form.
    Form(PolyForm),
    /// A bivector `σ`; the foliation is the one tangent to the image of `σ#`.
    Poisson(PolyMultivector),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoliationPresentation {
    n: usize,
    presentation: Presentation,
}

impl FoliationPresentation {
    pub fn from_vector_fields(n: usize, fields: Vec<VectorField>) -> Result<Self, FoliationError> {
        if fields.is_empty() || fields.len() > n {
            return Err(FoliationError::InvalidPresentation(format!("{} vector fields on C^{}", fields.len(), n)));
        }
        if let Some(v) = fields.iter().find(|v| v.nvars() != n) {
            return Err(FoliationError::InvalidPresentation(format!("field with {} components on C^{}", v.nvars(), n)));
        }
        Ok(FoliationPresentation { n, presentation: Presentation::VectorFields(fields) })
    }

    /// A form of degree `n − k` defines a foliation of dimension `k`.
    pub fn from_form(form: PolyForm) -> Result<Self, FoliationError> {
        let n = form.nvars();
        if form.degree() >= n {
            return Err(FoliationError::InvalidPresentation(format!("form of degree {} on C^{}", form.degree(), n)));
        }
        Ok(FoliationPresentation { n, presentation: Presentation::Form(form) })
    }

    pub fn from_poisson(sigma: PolyMultivector) -> Result<Self, FoliationError> {
        if sigma.degree() != 2 {
            return Err(FoliationError::InvalidPresentation(format!("multivector of degree {} is not a bivector", sigma.degree())));
        }
        Ok(FoliationPresentation { n: sigma.nvars(), presentation: Presentation::Poisson(sigma) })
    }

    /// Bivector from its coefficient matrix, which must be skew-symmetric.
    pub fn from_poisson_matrix(m: &PolyMatrix) -> Result<Self, FoliationError> {
        let n = m.rows();
        if m.cols() != n {
            return Err(FoliationError::NonSkew);
        }
        let mut sigma = PolyMultivector::zero(m.nvars(), 2);
        for i in 0..n {
            if !m.get(i, i).is_zero() {
                return Err(FoliationError::NonSkew);
            }
            for j in i + 1..n {
                if m.get(i, j) != &-m.get(j, i) {
                    return Err(FoliationError::NonSkew);
                }
                sigma.add_component(&[i, j], m.get(i, j).clone())?;
            }
        }
        Self::from_poisson(sigma)
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn kind_name(&self) -> &'static str {
        match self.presentation {
            Presentation::VectorFields(_) => "vector_fields",
            Presentation::Form(_) => "form",
            Presentation::Poisson(_) => "poisson",
        }
    }

    /// Dimension `k` of the foliation. For a Poisson structure this is the
    /// generic rank of `σ#`, the dimension of the symplectic leaves.
    pub fn dimension(&self) -> usize {
        match &self.presentation {
            Presentation::VectorFields(v) => v.len(),
            Presentation::Form(w) => self.n - w.degree(),
            Presentation::Poisson(s) => s.bivector_matrix().expect("bivector").generic_rank(),
        }
    }

    pub fn vector_fields(&self) -> Option<&[VectorField]> {
        match &self.presentation {
            Presentation::VectorFields(v) => Some(v),
            _ => None,
        }
    }

    /// The defining form as presented, before removing common factors.
    pub fn raw_omega(&self) -> Result<PolyForm, FoliationError> {
        match &self.presentation {
            Presentation::VectorFields(v) => omega_from_vector_fields(self.n, v),
            Presentation::Form(w) => Ok(w.clone()),
            Presentation::Poisson(s) => poisson::poisson_omega(s),
        }
    }

    /// `ω_F`: the defining form divided by the gcd of its coefficients, so that
    /// its zero set has codimension at least two.
    pub fn omega(&self) -> Result<PolyForm, FoliationError> {
        let raw = self.raw_omega()?;
        if raw.is_zero() {
            return Err(FoliationError::IdenticallyZeroForm);
        }
        let coeffs = raw.coefficient_list();
        let g = poly_gcd_many(self.n, &coeffs);
        if g.is_constant() {
            return Ok(raw);
        }
        Ok(raw.div_exact(&g).expect("gcd divides every coefficient"))
    }
}

/// `i_{v_k} ∘ … ∘ i_{v_1} (dz_1 ∧ … ∧ dz_n)`; the zero form if the fields are dependent.
pub fn omega_from_vector_fields(n: usize, fields: &[VectorField]) -> Result<PolyForm, FoliationError> {
    let mut w = PolyForm::volume(n);
    for v in fields {
        if w.degree() == 0 {
            return Err(FoliationError::InvalidPresentation("more fields than dimensions".into()));
        }
        w = w.contract(v)?;
    }
    Ok(w)
}

/// Ideal cut out by `ω_F = 0`; for Poisson structures, by the top nonvanishing minors of `σ`.
pub fn singular_ideal(f: &FoliationPresentation) -> Result<Ideal, FoliationError> {
    match &f.presentation {
        Presentation::Poisson(s) => {
            let m = s.bivector_matrix()?;
            let r = m.generic_rank();
            if r == 0 {
                return Err(FoliationError::IdenticallyZeroForm);
            }
            Ok(Ideal::new(f.n, m.minors(r))?)
        }
        _ => {
            let w = f.omega()?;
            Ok(Ideal::new(f.n, w.coefficient_list())?)
        }
    }
}

/// True iff `[v_i, v_j] ∧ v_1 ∧ … ∧ v_k = 0` for all `i < j`.
pub fn involutivity_check(f: &FoliationPresentation) -> Result<bool, FoliationError> {
    let fields = f.vector_fields().ok_or(FoliationError::WrongKind { expected: "vector_fields" })?;
    let mut top = PolyMultivector::scalar(Polynomial::one(f.n));
    for v in fields {
        top = top.wedge(&PolyMultivector::from_vector_field(v))?;
    }
    if top.is_zero() || top.degree() == f.n {
        // top degree: every (k+1)-multivector vanishes
        return Ok(true);
    }
    for i in 0..fields.len() {
        for j in i + 1..fields.len() {
            let b = lie_bracket(&fields[i], &fields[j])?;
            if !PolyMultivector::from_vector_field(&b).wedge(&top)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Pulls a one-dimensional foliation on `C^{n−k+1}` back along the coordinate
/// projection `C^n → C^{n−k+1}`: the lifted field plus `∂/∂z_j` for the
/// remaining coordinates.
pub fn pullback_under_projection(g: &FoliationPresentation, n: usize) -> Result<FoliationPresentation, FoliationError> {
    let fields = g.vector_fields().ok_or(FoliationError::WrongKind { expected: "vector_fields" })?;
    if fields.len() != 1 {
        return Err(FoliationError::InvalidPresentation("projection pullback needs a one-dimensional foliation".into()));
    }
    let m = g.n;
    if n < m {
        return Err(FoliationError::InvalidPresentation(format!("cannot project C^{} onto C^{}", n, m)));
    }
    let mut comps: Vec<Polynomial> = fields[0].components().iter().map(|p| p.embed(n, 0)).collect();
    comps.resize(n, Polynomial::zero(n));
    let mut out = vec![VectorField::new(comps)?];
    out.extend((m..n).map(|j| VectorField::coordinate(n, j)));
    FoliationPresentation::from_vector_fields(n, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{krull_dimension, MonomialOrder};
    use crate::poly::parse_polynomial;

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, n).unwrap()
    }

    fn vf(n: usize, comps: &[&str]) -> VectorField {
        VectorField::new(comps.iter().map(|s| p(s, n)).collect()).unwrap()
    }

    #[test]
    fn omega_examples() {
        let w = omega_from_vector_fields(2, &[VectorField::radial(2)]).unwrap();
        let expected = PolyForm::basis(2, &[1], p("z1", 2)).unwrap().add(&PolyForm::basis(2, &[0], p("-z2", 2)).unwrap()).unwrap();
        assert_eq!(w, expected);
        let w = omega_from_vector_fields(3, &[VectorField::coordinate(3, 0), VectorField::coordinate(3, 1)]).unwrap();
        assert_eq!(w, PolyForm::dz(3, 2));
    }

    #[test]
    fn singular_ideal_of_radial_fields() {
        let f = FoliationPresentation::from_vector_fields(2, vec![VectorField::radial(2)]).unwrap();
        let i = singular_ideal(&f).unwrap();
        assert_eq!(krull_dimension(&i), 0);

        // z1 ∂1 + z2 ∂2 on C^3: contraction of the volume form has coefficients ±z1, ±z2
        let f = FoliationPresentation::from_vector_fields(3, vec![vf(3, &["z1", "z2", "0"])]).unwrap();
        let gb = singular_ideal(&f).unwrap().groebner(MonomialOrder::Grevlex);
        assert_eq!(gb.basis(), &[p("z1", 3), p("z2", 3)]);
        assert_eq!(gb.krull_dimension(), 1);
    }

    #[test]
    fn saturation_removes_common_factor() {
        // z1 ∂1 on C^2 is the coordinate foliation with a spurious factor
        let f = FoliationPresentation::from_vector_fields(2, vec![vf(2, &["z1", "0"])]).unwrap();
        assert_eq!(f.omega().unwrap(), PolyForm::dz(2, 1));
        assert!(singular_ideal(&f).unwrap().groebner(MonomialOrder::Grevlex).is_unit());
    }

    #[test]
    fn zero_form_is_rejected() {
        let f = FoliationPresentation::from_vector_fields(2, vec![VectorField::radial(2), VectorField::radial(2)]).unwrap();
        assert_eq!(singular_ideal(&f), Err(FoliationError::IdenticallyZeroForm));
    }

    #[test]
    fn involutivity_examples() {
        let coords = FoliationPresentation::from_vector_fields(3, vec![VectorField::coordinate(3, 0), VectorField::coordinate(3, 1)]).unwrap();
        assert!(involutivity_check(&coords).unwrap());
        let f = FoliationPresentation::from_vector_fields(3, vec![VectorField::coordinate(3, 0), vf(3, &["0", "z1", "0"])]).unwrap();
        assert!(involutivity_check(&f).unwrap());
        let contact = FoliationPresentation::from_vector_fields(3, vec![vf(3, &["1", "0", "z2"]), VectorField::coordinate(3, 1)]).unwrap();
        assert!(!involutivity_check(&contact).unwrap());
        let form = FoliationPresentation::from_form(PolyForm::dz(3, 0)).unwrap();
        assert!(involutivity_check(&form).is_err());
    }

    #[test]
    fn projection_pullbacks() {
        let g = FoliationPresentation::from_vector_fields(3, vec![VectorField::radial(3)]).unwrap();
        let f = pullback_under_projection(&g, 4).unwrap();
        assert_eq!(f.dimension(), 2);
        let gb = singular_ideal(&f).unwrap().groebner(MonomialOrder::Grevlex);
        assert_eq!(gb.basis(), &[p("z1", 4), p("z2", 4), p("z3", 4)]);
        assert_eq!(gb.krull_dimension(), 1);
        assert!(involutivity_check(&f).unwrap());

        let g = FoliationPresentation::from_vector_fields(3, vec![vf(3, &["z1^2", "z2^2", "0"])]).unwrap();
        let f = pullback_under_projection(&g, 4).unwrap();
        let gb = singular_ideal(&f).unwrap().groebner(MonomialOrder::Grevlex);
        assert_eq!(gb.basis(), &[p("z1^2", 4), p("z2^2", 4)]);
        assert_eq!(gb.krull_dimension(), 2);

        let same = pullback_under_projection(&g, 3).unwrap();
        assert_eq!(same, g);
    }

    #[test]
    fn poisson_matrix_must_be_skew() {
        let m = PolyMatrix::new(2, 2, vec![p("0", 2), p("z1", 2), p("z1", 2), p("0", 2)]).unwrap();
        assert_eq!(FoliationPresentation::from_poisson_matrix(&m), Err(FoliationError::NonSkew));
        let m = PolyMatrix::new(2, 2, vec![p("0", 2), p("z1", 2), p("-z1", 2), p("0", 2)]).unwrap();
        assert_eq!(FoliationPresentation::from_poisson_matrix(&m).unwrap().dimension(), 2);
    }
}
