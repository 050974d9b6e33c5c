//! Differential forms and multivectors with polynomial coefficients.
//!
//! Both are elements of an exterior algebra over the polynomial ring, stored
//! on the basis of strictly increasing index sets (0-based internally,
//! printed 1-based). The kind parameter keeps forms and multivectors from
//! being wedged together by accident.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use num_traits::Zero;

use super::{PolyError, Polynomial, RatMatrix, Rational};
use crate::util::combinations;

pub trait ExteriorKind: Clone + fmt::Debug + PartialEq + Eq {
    const BASIS_SYMBOL: &'static str;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormKind;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorKind;

impl ExteriorKind for FormKind {
    const BASIS_SYMBOL: &'static str = "dz";
}

impl ExteriorKind for VectorKind {
    const BASIS_SYMBOL: &'static str = "d";
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graded<K: ExteriorKind> {
    nvars: usize,
    degree: usize,
    coeffs: BTreeMap<Vec<usize>, Polynomial>,
    _kind: PhantomData<K>,
}

pub type PolyForm = Graded<FormKind>;
pub type PolyMultivector = Graded<VectorKind>;

/// Sorts `idx` in place; returns the permutation sign, or `None` on a repeated index.
pub(crate) fn sort_with_sign<T: Ord>(idx: &mut [T]) -> Option<i32> {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

impl<K: ExteriorKind> Graded<K> {
    pub fn zero(nvars: usize, degree: usize) -> Self {
        Graded { nvars, degree, coeffs: BTreeMap::new(), _kind: PhantomData }
    }

    /// Coefficient `c` on the basis element indexed by `indices` (any order).
    pub fn basis(nvars: usize, indices: &[usize], c: Polynomial) -> Result<Self, PolyError> {
        let mut out = Self::zero(nvars, indices.len());
        out.add_component(indices, c)?;
        Ok(out)
    }

    /// Degree-0 element.
    pub fn scalar(c: Polynomial) -> Self {
        let mut out = Self::zero(c.nvars(), 0);
        if !c.is_zero() {
            out.coeffs.insert(Vec::new(), c);
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (&Vec<usize>, &Polynomial)> {
        self.coeffs.iter()
    }

    pub fn coefficient(&self, indices: &[usize]) -> Polynomial {
        self.coeffs.get(indices).cloned().unwrap_or_else(|| Polynomial::zero(self.nvars))
    }

    /// Adds `c · e_{indices}`; the sign of the sorting permutation is absorbed.
    pub fn add_component(&mut self, indices: &[usize], c: Polynomial) -> Result<(), PolyError> {
        if indices.len() != self.degree {
            return Err(PolyError::ShapeMismatch(format!("index set of size {} in degree {}", indices.len(), self.degree)));
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= self.nvars) {
            return Err(PolyError::VariableOutOfRange { index: bad + 1, nvars: self.nvars });
        }
        if c.nvars() != self.nvars {
            return Err(PolyError::AmbientMismatch(self.nvars, c.nvars()));
        }
        let mut idx = indices.to_vec();
        let Some(sign) = sort_with_sign(&mut idx) else {
            return Ok(());
        };
        let c = if sign < 0 { -c } else { c };
        self.add_sorted(idx, c);
        Ok(())
    }

    fn add_sorted(&mut self, idx: Vec<usize>, c: Polynomial) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.remove(&idx).unwrap_or_else(|| Polynomial::zero(self.nvars));
        let s = &entry + &c;
        if !s.is_zero() {
            self.coeffs.insert(idx, s);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::AmbientMismatch(self.nvars, other.nvars));
        }
        if self.degree != other.degree {
            return Err(PolyError::ShapeMismatch(format!("adding degrees {} and {}", self.degree, other.degree)));
        }
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_sorted(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.scale_poly(&Polynomial::from_int(self.nvars, -1))
    }

    pub fn scale_poly(&self, f: &Polynomial) -> Self {
        let mut out = Self::zero(self.nvars, self.degree);
        for (k, c) in &self.coeffs {
            out.add_sorted(k.clone(), c * f);
        }
        out
    }

    /// Graded-antisymmetric exterior product.
    pub fn wedge(&self, other: &Self) -> Result<Self, PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::AmbientMismatch(self.nvars, other.nvars));
        }
        let degree = self.degree + other.degree;
        if degree > self.nvars {
            return Err(PolyError::DegreeOverflow { degree, nvars: self.nvars });
        }
        let mut out = Self::zero(self.nvars, degree);
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                let mut idx: Vec<usize> = a.iter().chain(b).copied().collect();
                if let Some(sign) = sort_with_sign(&mut idx) {
                    let c = ca * cb;
                    out.add_sorted(idx, if sign < 0 { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Divides every coefficient by `d`, which must divide each exactly.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Self> {
        let mut out = Self::zero(self.nvars, self.degree);
        for (k, c) in &self.coeffs {
            out.coeffs.insert(k.clone(), c.div_exact(d)?);
        }
        Some(out)
    }

    pub fn coefficient_list(&self) -> Vec<Polynomial> {
        self.coeffs.values().cloned().collect()
    }
}

impl PolyForm {
    /// The 1-form `dz_{i+1}`.
    pub fn dz(nvars: usize, i: usize) -> Self {
        Self::basis(nvars, &[i], Polynomial::one(nvars)).expect("index in range")
    }

    /// `dz_1 ∧ … ∧ dz_n`.
    pub fn volume(nvars: usize) -> Self {
        Self::basis(nvars, &(0..nvars).collect::<Vec<_>>(), Polynomial::one(nvars)).expect("full index set")
    }

    /// The exterior derivative of a function, `Σ ∂f/∂z_i dz_i`.
    pub fn differential(f: &Polynomial) -> Self {
        let n = f.nvars();
        let mut out = Self::zero(n, 1);
        for i in 0..n {
            out.add_sorted(vec![i], f.d(i));
        }
        out
    }

    /// Interior product `i_v ω`.
    pub fn contract(&self, v: &VectorField) -> Result<PolyForm, PolyError> {
        if self.degree == 0 {
            return Err(PolyError::DegreeZeroContraction);
        }
        if v.nvars() != self.nvars {
            return Err(PolyError::AmbientMismatch(self.nvars, v.nvars()));
        }
        let mut out = Self::zero(self.nvars, self.degree - 1);
        for (idx, c) in &self.coeffs {
            for (r, &i) in idx.iter().enumerate() {
                let vi = &v.components()[i];
                if vi.is_zero() {
                    continue;
                }
                let mut rest = idx.clone();
                rest.remove(r);
                let t = c * vi;
                out.add_sorted(rest, if r % 2 == 1 { -t } else { t });
            }
        }
        Ok(out)
    }

    /// Pullback along the affine map `w ↦ p + L w`, `L` an `n×m` matrix of full column rank.
    pub fn affine_pullback(&self, point: &[Rational], l: &RatMatrix) -> Result<PolyForm, PolyError> {
        let n = self.nvars;
        if point.len() != n || l.rows() != n {
            return Err(PolyError::ShapeMismatch(format!(
                "slice data for C^{}: point of length {}, matrix with {} rows",
                n,
                point.len(),
                l.rows()
            )));
        }
        let m = l.cols();
        if l.rank() != m {
            return Err(PolyError::RankDeficient);
        }
        let images: Vec<Polynomial> = (0..n)
            .map(|a| {
                let mut q = Polynomial::constant(m, point[a].clone());
                for b in 0..m {
                    let lab = l.get(a, b);
                    if !lab.is_zero() {
                        q = &q + &Polynomial::var(m, b).scale(lab);
                    }
                }
                q
            })
            .collect();
        let mut out = Self::zero(m, self.degree);
        if self.degree > m {
            return Ok(out);
        }
        let targets = combinations(m, self.degree);
        for (idx, c) in &self.coeffs {
            let sub = c.substitute(&images);
            if sub.is_zero() {
                continue;
            }
            for j in &targets {
                let minor = l.submatrix(idx, j).det();
                if !minor.is_zero() {
                    out.add_sorted(j.clone(), sub.scale(&minor));
                }
            }
        }
        Ok(out)
    }
}

impl PolyMultivector {
    pub fn from_vector_field(v: &VectorField) -> Self {
        let mut out = Self::zero(v.nvars(), 1);
        for (i, c) in v.components().iter().enumerate() {
            out.add_sorted(vec![i], c.clone());
        }
        out
    }

    /// `∂_{i+1}`.
    pub fn partial(nvars: usize, i: usize) -> Self {
        Self::basis(nvars, &[i], Polynomial::one(nvars)).expect("index in range")
    }

    /// The coefficient matrix `σ_{ij}` of a bivector, skew by construction.
    pub fn bivector_matrix(&self) -> Result<super::PolyMatrix, PolyError> {
        if self.degree != 2 {
            return Err(PolyError::ShapeMismatch(format!("bivector matrix of a degree-{} multivector", self.degree)));
        }
        let n = self.nvars;
        let mut entries = vec![Polynomial::zero(n); n * n];
        for (idx, c) in &self.coeffs {
            entries[idx[0] * n + idx[1]] = c.clone();
            entries[idx[1] * n + idx[0]] = -c;
        }
        super::PolyMatrix::new(n, n, entries)
    }
}

impl<K: ExteriorKind> fmt::Display for Graded<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (idx, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})", c)?;
            for j in idx {
                write!(f, "{}{}{}", if idx.first() == Some(j) { "*" } else { "^" }, K::BASIS_SYMBOL, j + 1)?;
            }
        }
        Ok(())
    }
}

/// A polynomial vector field `Σ v_i ∂/∂z_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorField {
    comps: Vec<Polynomial>,
}

impl VectorField {
    pub fn new(comps: Vec<Polynomial>) -> Result<Self, PolyError> {
        let n = comps.len();
        if let Some(p) = comps.iter().find(|p| p.nvars() != n) {
            return Err(PolyError::ShapeMismatch(format!("{} components but a coefficient in {} variables", n, p.nvars())));
        }
        Ok(VectorField { comps })
    }

    /// `∂/∂z_{i+1}`.
    pub fn coordinate(nvars: usize, i: usize) -> Self {
        let mut comps = vec![Polynomial::zero(nvars); nvars];
        comps[i] = Polynomial::one(nvars);
        VectorField { comps }
    }

    /// `Σ z_i ∂/∂z_i`.
    pub fn radial(nvars: usize) -> Self {
        VectorField { comps: (0..nvars).map(|i| Polynomial::var(nvars, i)).collect() }
    }

    pub fn nvars(&self) -> usize {
        self.comps.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    /// `v(f) = Σ v_i ∂f/∂z_i`.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        self.comps.iter().enumerate().fold(Polynomial::zero(f.nvars()), |acc, (i, vi)| {
            if vi.is_zero() {
                acc
            } else {
                &acc + &(vi * &f.d(i))
            }
        })
    }

    pub fn scale(&self, c: &Polynomial) -> VectorField {
        VectorField { comps: self.comps.iter().map(|p| p * c).collect() }
    }

    pub fn add(&self, other: &VectorField) -> VectorField {
        VectorField { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect() }
    }

    pub fn translate(&self, point: &[Rational]) -> VectorField {
        VectorField { comps: self.comps.iter().map(|p| p.translate(point)).collect() }
    }
}

/// `[u, v]_j = Σ_i (u_i ∂v_j/∂z_i − v_i ∂u_j/∂z_i)`.
pub fn lie_bracket(u: &VectorField, v: &VectorField) -> Result<VectorField, PolyError> {
    if u.nvars() != v.nvars() {
        return Err(PolyError::AmbientMismatch(u.nvars(), v.nvars()));
    }
    let comps = (0..u.nvars()).map(|j| &u.apply(&v.comps[j]) - &v.apply(&u.comps[j])).collect();
    Ok(VectorField { comps })
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.comps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}
