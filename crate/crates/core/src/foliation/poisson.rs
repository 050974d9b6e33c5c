use super::{FoliationError, FoliationPresentation, Presentation};
use crate::ideal::{krull_dimension, Ideal};
use crate::poly::{PolyForm, PolyMatrix, PolyMultivector, Polynomial, VectorField};

/// Rank stratum `X_{≤s}` of a Poisson structure, cut out by the `(s+2)`-minors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyStratum {
    pub s: usize,
    pub ideal: Ideal,
    pub dim: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonAnalysis {
    pub jacobi_ok: bool,
    pub generic_rank: usize,
    /// One entry per even `s < generic_rank`, in increasing `s`.
    pub strata: Vec<DegeneracyStratum>,
}

impl PoissonAnalysis {
    /// Dimension of the degeneracy locus `X ∖ X_r`, `−1` when it is empty.
    pub fn degeneracy_dim(&self) -> i64 {
        self.strata.last().map_or(-1, |s| s.dim)
    }
}

fn jacobi_holds(m: &PolyMatrix) -> bool {
    let n = m.rows();
    let s = |i: usize, j: usize| m.get(i, j);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut acc = Polynomial::zero(m.nvars());
                for l in 0..n {
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let x = s(a, l);
                        if !x.is_zero() {
                            acc = &acc + &(x * &s(b, c).d(l));
                        }
                    }
                }
                if !acc.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

pub fn poisson_analysis(f: &FoliationPresentation) -> Result<PoissonAnalysis, FoliationError> {
    let Presentation::Poisson(sigma) = f.presentation() else {
        return Err(FoliationError::WrongKind { expected: "poisson" });
    };
    let m = sigma.bivector_matrix()?;
    let r = m.generic_rank();
    let mut strata = Vec::new();
    for s in (0..r).step_by(2) {
        let ideal = Ideal::new(f.ambient_dim(), m.minors(s + 2))?;
        let dim = krull_dimension(&ideal);
        strata.push(DegeneracyStratum { s, ideal, dim });
    }
    Ok(PoissonAnalysis { jacobi_ok: jacobi_holds(&m), generic_rank: r, strata })
}

/// Contraction of the volume form by `σ^{r/2}`, `r` the generic rank; its
/// kernel is the tangent space of the symplectic leaves.
pub(super) fn poisson_omega(sigma: &PolyMultivector) -> Result<PolyForm, FoliationError> {
    let n = sigma.nvars();
    let r = sigma.bivector_matrix()?.generic_rank();
    if r == 0 {
        return Ok(PolyForm::zero(n, n));
    }
    let mut power = PolyMultivector::scalar(Polynomial::one(n));
    for _ in 0..r / 2 {
        power = power.wedge(sigma)?;
    }
    let mut out = PolyForm::zero(n, n - r);
    for (idx, c) in power.components() {
        let mut w = PolyForm::volume(n).scale_poly(c);
        for &i in idx {
            w = w.contract(&VectorField::coordinate(n, i))?;
        }
        out = out.add(&w)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foliation::singular_ideal;
    use crate::poly::parse_polynomial;

    fn bivector(n: usize, entries: &[(usize, usize, &str)]) -> FoliationPresentation {
        let mut s = PolyMultivector::zero(n, 2);
        for &(i, j, c) in entries {
            s.add_component(&[i, j], parse_polynomial(c, n).unwrap()).unwrap();
        }
        FoliationPresentation::from_poisson(s).unwrap()
    }

    #[test]
    fn constant_symplectic() {
        let a = poisson_analysis(&bivector(4, &[(0, 1, "1")])).unwrap();
        assert!(a.jacobi_ok);
        assert_eq!(a.generic_rank, 2);
        assert_eq!(a.strata.len(), 1);
        assert_eq!(a.degeneracy_dim(), -1);
    }

    #[test]
    fn linear_degeneracy() {
        let f = bivector(4, &[(0, 1, "z3")]);
        let a = poisson_analysis(&f).unwrap();
        assert!(a.jacobi_ok);
        assert_eq!(a.generic_rank, 2);
        assert_eq!(a.degeneracy_dim(), 3);
        assert_eq!(f.dimension(), 2);
        assert_eq!(krull_dimension(&singular_ideal(&f).unwrap()), 3);
        // ω is z3 dz3∧dz4 up to sign before saturation
        let w = f.raw_omega().unwrap();
        assert_eq!(w.coefficient_list().len(), 1);
        assert_eq!(f.omega().unwrap().coefficient_list()[0].degree(), 0);
    }

    #[test]
    fn jacobi_rejects_non_poisson() {
        let f = bivector(4, &[(0, 1, "1"), (2, 3, "z1")]);
        assert!(!poisson_analysis(&f).unwrap().jacobi_ok);
        // so(3)* is Poisson
        let f = bivector(4, &[(0, 1, "z3"), (1, 2, "z1"), (2, 0, "z2")]);
        let a = poisson_analysis(&f).unwrap();
        assert!(a.jacobi_ok);
        assert_eq!(a.degeneracy_dim(), 1);
    }

    #[test]
    fn wrong_kind() {
        let f = FoliationPresentation::from_form(PolyForm::dz(2, 0)).unwrap();
        assert!(poisson_analysis(&f).is_err());
    }
}
