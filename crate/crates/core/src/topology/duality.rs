//! Dual cells, cap-product intersections, and Poincaré and Alexander duality.

use std::collections::{BTreeMap, BTreeSet};

use super::complex::{Chain, Subcomplex};
use super::homology::{integral, invariant_factors, is_boundary, solve_rational};
use super::subdivision::SubdivisionTower;
use super::TopologyError;
use crate::poly::Rational;

/// The dual cell of a `K`-simplex, as a signed chain of `K'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualCell {
    pub source: Vec<usize>,
    pub chain: Chain,
}

/// Right cap with the cochain dual to `t`: evaluates front faces, returns back faces.
fn cap_right(t: &[usize], eps: i64, x: &Chain) -> Chain {
    let p = t.len() - 1;
    let mut out = Chain::zero(x.dim().saturating_sub(p));
    for (s, c) in x.terms_with_prefix(t) {
        out.add_term(s[p..].to_vec(), c * eps);
    }
    out
}

/// Left cap with the cochain dual to `t`: evaluates back faces, returns front faces.
fn cap_left(d: &Chain, t: &[usize], eta: i64) -> Chain {
    let q = t.len() - 1;
    let r = d.dim();
    let mut out = Chain::zero(r.saturating_sub(q));
    if q > r {
        return out;
    }
    for (s, c) in d.terms() {
        if s[r - q..] == *t {
            out.add_term(s[..=r - q].to_vec(), c * eta);
        }
    }
    out
}

fn check_simplex(tower: &SubdivisionTower, s: &[usize]) -> Result<(), TopologyError> {
    if tower.k().contains(s) {
        Ok(())
    } else {
        Err(TopologyError::NotASimplex(s.to_vec()))
    }
}

/// Valid choices of the `K'`-simplex `t ⊂ s`: the terms of `sd(s)` with their signs.
pub fn dual_cell_choices(tower: &SubdivisionTower, s: &[usize]) -> Result<Vec<(Vec<usize>, i64)>, TopologyError> {
    check_simplex(tower, s)?;
    let sd = tower.second().subdivide_chain(&Chain::simplex(s, 1));
    Ok(sd.terms().map(|(t, e)| (t.clone(), e)).collect())
}

/// `s* = ϑ(t) ⌢ X_{K'}` for the lexicographically smallest `t ⊂ s`.
pub fn dual_cell(tower: &SubdivisionTower, s: &[usize]) -> Result<DualCell, TopologyError> {
    let choices = dual_cell_choices(tower, s)?;
    let (t, eps) = &choices[0];
    dual_cell_with(tower, s, t, *eps)
}

/// `s*` computed with an explicit choice of `t` and its sign in `sd(s)`.
pub fn dual_cell_with(tower: &SubdivisionTower, s: &[usize], t: &[usize], eps: i64) -> Result<DualCell, TopologyError> {
    tower.require_manifold()?;
    check_simplex(tower, s)?;
    let x = tower.fundamental_cycle_k_prime().ok_or(TopologyError::NotOrientable)?;
    Ok(DualCell { source: s.to_vec(), chain: cap_right(t, eps, x) })
}

/// `s1* · s2 = (ϑ(t1) ⌢_r X_{K'}) ⌢_l ϑ(t2)` with canonical choices.
/// The result is a chain of dimension `dim s2 − dim s1`, zero when negative.
pub fn intersection_product(tower: &SubdivisionTower, s1: &[usize], s2: &[usize]) -> Result<Chain, TopologyError> {
    let d1 = dual_cell(tower, s1)?;
    let d2 = dual_cell(tower, s2)?;
    let (t2, eta) = d2.chain.first_term().ok_or_else(|| TopologyError::NotManifold(format!("empty dual cell of {:?}", s2)))?;
    Ok(product_from(&d1.chain, s1, s2, t2, eta))
}

/// The product with explicit choices `t1 ⊂ s1` and `t2 ⊂ s2*`.
pub fn intersection_product_with(
    tower: &SubdivisionTower,
    s1: &[usize],
    t1: (&[usize], i64),
    s2: &[usize],
    t2: (&[usize], i64),
) -> Result<Chain, TopologyError> {
    let d1 = dual_cell_with(tower, s1, t1.0, t1.1)?;
    check_simplex(tower, s2)?;
    Ok(product_from(&d1.chain, s1, s2, t2.0, t2.1))
}

fn product_from(d1: &Chain, s1: &[usize], s2: &[usize], t2: &[usize], eta: i64) -> Chain {
    if s1.len() > s2.len() || !s1.iter().all(|v| s2.contains(v)) {
        return Chain::zero(s2.len().saturating_sub(s1.len()));
    }
    cap_left(d1, t2, eta)
}

/// `∂s* = Σ c_τ τ*` over cofaces `τ ⊃ s`, verified term by term.
pub fn dual_boundary(tower: &SubdivisionTower, s: &[usize]) -> Result<Vec<(Vec<usize>, i64)>, TopologyError> {
    let boundary = dual_cell(tower, s)?.chain.boundary();
    let mut rebuilt = Chain::zero(boundary.dim());
    let mut out = Vec::new();
    for tau in tower.k().cofaces(s) {
        let cell = dual_cell(tower, tau)?.chain;
        let (first, e) = cell.first_term().expect("nonempty dual cell");
        let c = boundary.coefficient(first) * e;
        if c != 0 {
            rebuilt.add_assign(&cell.scale(c));
            out.push((tau.to_vec(), c));
        }
    }
    if rebuilt != boundary {
        return Err(TopologyError::NotManifold(format!("boundary of the dual cell of {:?} is not a sum of dual cells", s)));
    }
    Ok(out)
}

/// Both sides of `∂(s1*·s2) = (∂s1*)·s2 + (−1)^{dim s1} s1*·∂s2`.
pub fn boundary_formula_sides(tower: &SubdivisionTower, s1: &[usize], s2: &[usize]) -> Result<(Chain, Chain), TopologyError> {
    let lhs = intersection_product(tower, s1, s2)?.boundary();
    let mut rhs = Chain::zero(lhs.dim());
    for (tau, c) in dual_boundary(tower, s1)? {
        rhs.add_assign(&intersection_product(tower, &tau, s2)?.scale(c));
    }
    if s2.len() > 1 {
        let sign = if s1.len() % 2 == 1 { 1 } else { -1 };
        for i in 0..s2.len() {
            let mut face = s2.to_vec();
            face.remove(i);
            let e = if i % 2 == 0 { sign } else { -sign };
            rhs.add_assign(&intersection_product(tower, s1, &face)?.scale(e));
        }
    }
    Ok((lhs, rhs))
}

/// A cochain on the dual cells `K*` of degree `q`, keyed by the `K`-simplex `s`
/// (of dimension `m − q`) whose dual cell it evaluates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualCochain {
    degree: usize,
    values: BTreeMap<Vec<usize>, i64>,
}

impl DualCochain {
    pub fn new(degree: usize, values: impl IntoIterator<Item = (Vec<usize>, i64)>) -> Self {
        Self { degree, values: values.into_iter().filter(|(_, v)| *v != 0).collect() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn value(&self, s: &[usize]) -> i64 {
        self.values.get(s).copied().unwrap_or(0)
    }

    pub fn values(&self) -> impl Iterator<Item = (&Vec<usize>, i64)> {
        self.values.iter().map(|(s, &v)| (s, v))
    }
}

/// The unit 0-cochain: on the dual of each top simplex, its orientation sign.
pub fn unit_dual_cochain(tower: &SubdivisionTower) -> Result<DualCochain, TopologyError> {
    let m = tower.dim();
    let mut values = Vec::new();
    for s in tower.k().simplices(m) {
        let cell = dual_cell(tower, s)?.chain;
        let b = tower.second().barycenter(s).expect("top simplex of K");
        values.push((s.clone(), cell.coefficient(&[b])));
    }
    Ok(DualCochain::new(0, values))
}

/// `δu` on `K*`: `(δu)(τ*) = u(∂τ*)`.
pub fn dual_coboundary(tower: &SubdivisionTower, u: &DualCochain) -> Result<DualCochain, TopologyError> {
    let m = tower.dim();
    if u.degree >= m {
        return Ok(DualCochain::new(u.degree + 1, []));
    }
    // Only codimension-one faces of the support can see a nonzero value.
    let mut faces = BTreeSet::new();
    for (s, _) in u.values() {
        check_simplex(tower, s)?;
        for i in 0..s.len() {
            let mut f = s.clone();
            f.remove(i);
            if !f.is_empty() {
                faces.insert(f);
            }
        }
    }
    let mut values = Vec::new();
    for tau in faces {
        let v: i64 = dual_boundary(tower, &tau)?.iter().map(|(s, c)| c * u.value(s)).sum();
        values.push((tau, v));
    }
    Ok(DualCochain::new(u.degree + 1, values))
}

/// `Σ_s ⟨s*, u⟩ s`.
pub fn poincare_dual(tower: &SubdivisionTower, u: &DualCochain) -> Result<Chain, TopologyError> {
    tower.require_manifold()?;
    let m = tower.dim();
    if u.degree > m {
        return Err(TopologyError::DimensionMismatch(format!("cochain degree {} exceeds dimension {}", u.degree, m)));
    }
    let mut out = Chain::zero(m - u.degree);
    for (s, v) in u.values() {
        check_simplex(tower, s)?;
        if s.len() != m - u.degree + 1 {
            return Err(TopologyError::DimensionMismatch(format!("{:?} is not dual to a {}-cell", s, u.degree)));
        }
        out.add_term(s.clone(), v);
    }
    Ok(out)
}

/// `Σ_{s ⊂ S} ⟨s*, u⟩ s` for a cochain vanishing on dual cells that miss `S`.
pub fn alexander_dual(tower: &SubdivisionTower, sub: &Subcomplex, u: &DualCochain) -> Result<Chain, TopologyError> {
    for (s, v) in u.values() {
        check_simplex(tower, s)?;
        if v != 0 && !sub.contains(tower.k0_carrier(s)) {
            return Err(TopologyError::SupportViolation(format!("cochain is nonzero on the dual of {:?}, which is not in S", s)));
        }
    }
    poincare_dual(tower, u)
}

/// Localized intersection of a cycle on `S1` with a cycle on `S2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizedProduct {
    /// Dual-cell coefficients representing the first cycle near `S1`.
    pub representative: BTreeMap<Vec<usize>, i64>,
    /// The product chain in `K'`.
    pub chain: Chain,
    /// Its image in `K0`.
    pub class_in_k0: Chain,
    /// Augmentation, for 0-dimensional products.
    pub degree: Option<i64>,
}

fn check_support(tower: &SubdivisionTower, sub: &Subcomplex, c: &Chain, name: &str) -> Result<(), TopologyError> {
    for (s, _) in c.terms() {
        check_simplex(tower, s)?;
        if !sub.contains(tower.k0_carrier(s)) {
            return Err(TopologyError::SupportViolation(format!("{} has {:?} outside its subcomplex", name, s)));
        }
    }
    if c.dim() > 0 && !c.boundary().is_zero() {
        return Err(TopologyError::SupportViolation(format!("{} is not a cycle", name)));
    }
    Ok(())
}

/// A dual-cell cycle `Σ c_s s*` built from simplices near `S` and homologous to the `K`-cycle `a`.
pub fn dual_representative(tower: &SubdivisionTower, sub: &Subcomplex, a: &Chain) -> Result<BTreeMap<Vec<usize>, i64>, TopologyError> {
    tower.require_manifold()?;
    let m = tower.dim();
    let p = a.dim();
    let k0 = tower.k0();
    let unknowns: Vec<&Vec<usize>> = tower.k().simplices(m - p).iter().filter(|s| sub.contains(tower.first().carrier(s[0]))).collect();
    let fillers = if p < m { k0.simplices(p + 1).to_vec() } else { Vec::new() };
    let cols = unknowns.len() + fillers.len();
    let mut rows: BTreeMap<(u8, Vec<usize>), Vec<Rational>> = BTreeMap::new();
    let zero_row = || vec![Rational::from_integer(0.into()); cols];
    let mut rhs: BTreeMap<(u8, Vec<usize>), Rational> = BTreeMap::new();
    for (j, s) in unknowns.iter().enumerate() {
        if p > 0 {
            for (tau, c) in dual_boundary(tower, s)? {
                rows.entry((0, tau)).or_insert_with(zero_row)[j] += Rational::from_integer(c.into());
            }
        }
        let image = tower.to_k0(&dual_cell(tower, s)?.chain);
        for (t, e) in image.terms() {
            rows.entry((1, t.clone())).or_insert_with(zero_row)[j] += Rational::from_integer(e.into());
        }
    }
    for (j, f) in fillers.iter().enumerate() {
        for i in 0..f.len() {
            let mut face = f.clone();
            face.remove(i);
            let e: i64 = if i % 2 == 0 { -1 } else { 1 };
            rows.entry((1, face)).or_insert_with(zero_row)[unknowns.len() + j] += Rational::from_integer(e.into());
        }
    }
    for (t, e) in tower.first().push_down(a).terms() {
        rows.entry((1, t.clone())).or_insert_with(zero_row);
        rhs.insert((1, t.clone()), Rational::from_integer(e.into()));
    }
    let keys: Vec<_> = rows.keys().cloned().collect();
    let matrix: Vec<Vec<Rational>> = rows.into_values().collect();
    let b: Vec<Rational> = keys.iter().map(|k| rhs.get(k).cloned().unwrap_or_else(|| Rational::from_integer(0.into()))).collect();
    if matrix.is_empty() {
        return Err(TopologyError::NoDualRepresentative);
    }
    let x = solve_rational(&matrix, &b).ok_or(TopologyError::NoDualRepresentative)?;
    let coeffs = integral(&x[..unknowns.len()]).ok_or(TopologyError::NoDualRepresentative)?;
    Ok(unknowns.into_iter().cloned().zip(coeffs).filter(|(_, c)| *c != 0).collect())
}

/// Intersection of the cycle `a` on `S1` with the cycle `b` on `S2` (both `K`-chains).
pub fn localized_intersection(
    tower: &SubdivisionTower,
    s1: &Subcomplex,
    s2: &Subcomplex,
    a: &Chain,
    b: &Chain,
) -> Result<LocalizedProduct, TopologyError> {
    tower.require_manifold()?;
    let m = tower.dim();
    if a.dim() + b.dim() < m {
        return Err(TopologyError::DimensionMismatch(format!("dimensions {} and {} sum below {}", a.dim(), b.dim(), m)));
    }
    check_support(tower, s1, a, "first cycle")?;
    check_support(tower, s2, b, "second cycle")?;
    let dim = a.dim() + b.dim() - m;
    if s1.intersection(s2).is_empty() || a.is_zero() || b.is_zero() {
        return Ok(LocalizedProduct { representative: BTreeMap::new(), chain: Chain::zero(dim), class_in_k0: Chain::zero(dim), degree: (dim == 0).then_some(0) });
    }
    let representative = dual_representative(tower, s1, a)?;
    let mut chain = Chain::zero(dim);
    for (s, c) in &representative {
        let d = dual_cell(tower, s)?.chain;
        for (t, e) in b.terms() {
            if s.iter().all(|v| t.contains(v)) {
                let t_star = dual_cell(tower, t)?.chain;
                let (t2, eta) = t_star.first_term().expect("nonempty dual cell");
                chain.add_assign(&product_from(&d, s, t, t2, eta).scale(c * e));
            }
        }
    }
    let class_in_k0 = tower.to_k0(&chain);
    let degree = (dim == 0).then(|| chain.degree());
    Ok(LocalizedProduct { representative, chain, class_in_k0, degree })
}

/// Intersection number of complementary-dimensional `K0`-cycles.
pub fn intersection_pairing(tower: &SubdivisionTower, a: &Chain, b: &Chain) -> Result<i64, TopologyError> {
    if a.dim() + b.dim() != tower.dim() {
        return Err(TopologyError::DimensionMismatch(format!("dimensions {} and {} are not complementary", a.dim(), b.dim())));
    }
    let support = |c: &Chain| tower.k0().subcomplex(&c.terms().map(|(s, _)| s.clone()).collect::<Vec<_>>());
    let (s1, s2) = (support(a)?, support(b)?);
    let sa = tower.first().subdivide_chain(a);
    let sb = tower.first().subdivide_chain(b);
    let r = localized_intersection(tower, &s1, &s2, &sa, &sb)?;
    Ok(r.degree.expect("complementary dimensions"))
}

/// Whether two `K0`-chains of equal dimension are rationally homologous.
pub fn homologous_in_k0(tower: &SubdivisionTower, x: &Chain, y: &Chain) -> Result<bool, TopologyError> {
    is_boundary(tower.k0(), &x.add(&y.scale(-1)))
}

/// Betti numbers of the dual cell complex `K*`, indexed by cell dimension.
pub fn dual_betti_numbers(tower: &SubdivisionTower) -> Result<Vec<usize>, TopologyError> {
    let m = tower.dim();
    let k = tower.k();
    let mut ranks = vec![0usize; m + 2];
    for q in 1..=m {
        let cells = k.simplices(m - q);
        let faces = k.simplices(m - q + 1);
        let mut matrix = vec![vec![0i64; cells.len()]; faces.len()];
        for (j, s) in cells.iter().enumerate() {
            for (tau, c) in dual_boundary(tower, s)? {
                matrix[k.position(&tau).expect("coface of K")][j] = c;
            }
        }
        ranks[q] = invariant_factors(&matrix)?.len();
    }
    Ok((0..=m).map(|q| k.simplices(m - q).len() - ranks[q] - ranks[q + 1]).collect())
}
