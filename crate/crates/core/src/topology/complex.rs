//! Finite simplicial complexes, integer chains and cochains.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::TopologyError;
use crate::poly::sort_with_sign;

/// A pure finite simplicial complex. Simplices are stored as increasing
/// vertex lists; top simplices optionally carry an orientation sign relative
/// to their increasing order.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    dim: usize,
    simplices: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
    cofaces: Vec<Vec<Vec<usize>>>,
    orientation: Option<Vec<i64>>,
}

impl SimplicialComplex {
    /// Face closure of the given top simplices. With `orientable`, the first
    /// simplex of each connected component keeps its given orientation and the
    /// rest are oriented compatibly across shared facets.
    pub fn from_top_simplices(dim: usize, tops: &[Vec<usize>], orientable: bool) -> Result<Self, TopologyError> {
        if tops.is_empty() {
            return Err(TopologyError::InvalidComplex("no top simplices".into()));
        }
        let mut signed: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
        for t in tops {
            if t.len() != dim + 1 {
                return Err(TopologyError::InvalidComplex(format!("simplex {:?} does not have {} vertices", t, dim + 1)));
            }
            let mut s = t.clone();
            let sign = sort_with_sign(&mut s).ok_or_else(|| TopologyError::InvalidComplex(format!("repeated vertex in {:?}", t)))?;
            if signed.insert(s, sign as i64).is_some() {
                return Err(TopologyError::InvalidComplex(format!("duplicate simplex {:?}", t)));
            }
        }
        let given: Vec<i64> = signed.values().copied().collect();
        let mut complex = Self::build(dim, signed.into_keys().collect(), None);
        if orientable {
            let orientation = complex.orient(&given)?;
            complex.orientation = Some(orientation);
        }
        Ok(complex)
    }

    /// Builds from increasing top simplices with an optional orientation aligned to their sorted order.
    pub(crate) fn build(dim: usize, mut tops: Vec<Vec<usize>>, orientation: Option<BTreeMap<Vec<usize>, i64>>) -> Self {
        tops.sort();
        tops.dedup();
        let mut layers: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); dim + 1];
        for t in &tops {
            for p in 0..=dim {
                for face in crate::combinations(dim + 1, p + 1) {
                    layers[p].insert(face.iter().map(|&i| t[i]).collect());
                }
            }
        }
        let simplices: Vec<Vec<Vec<usize>>> = layers.into_iter().map(|l| l.into_iter().collect()).collect();
        let index = simplices.iter().map(|l| l.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect()).collect();
        let mut cofaces: Vec<Vec<Vec<usize>>> = simplices.iter().map(|l| vec![Vec::new(); l.len()]).collect();
        let index_ref: &Vec<HashMap<Vec<usize>, usize>> = &index;
        for p in 1..=dim {
            for (ci, s) in simplices[p].iter().enumerate() {
                for i in 0..s.len() {
                    let mut f = s.clone();
                    f.remove(i);
                    cofaces[p - 1][index_ref[p - 1][&f]].push(ci);
                }
            }
        }
        let orientation = orientation.map(|o| simplices[dim].iter().map(|s| o.get(s).copied().unwrap_or(1)).collect());
        Self { dim, simplices, index, cofaces, orientation }
    }

    fn orient(&self, given: &[i64]) -> Result<Vec<i64>, TopologyError> {
        let m = self.dim;
        let tops = &self.simplices[m];
        let mut orient = vec![0i64; tops.len()];
        if m == 0 {
            return Ok(given.to_vec());
        }
        for start in 0..tops.len() {
            if orient[start] != 0 {
                continue;
            }
            orient[start] = given[start];
            let mut queue = VecDeque::from([start]);
            while let Some(t) = queue.pop_front() {
                for i in 0..=m {
                    let mut f = tops[t].clone();
                    f.remove(i);
                    let induced = orient[t] * if i % 2 == 0 { 1 } else { -1 };
                    let fi = self.index[m - 1][&f];
                    for &other in &self.cofaces[m - 1][fi] {
                        if other == t {
                            continue;
                        }
                        let j = tops[other].iter().position(|v| !f.contains(v)).expect("coface has one extra vertex");
                        let needed = -induced * if j % 2 == 0 { 1 } else { -1 };
                        if orient[other] == 0 {
                            orient[other] = needed;
                            queue.push_back(other);
                        } else if orient[other] != needed {
                            return Err(TopologyError::NotOrientable);
                        }
                    }
                }
            }
        }
        Ok(orient)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The `p`-simplices in lexicographic order.
    pub fn simplices(&self, p: usize) -> &[Vec<usize>] {
        self.simplices.get(p).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(|l| l.len()).collect()
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        !s.is_empty() && s.len() <= self.dim + 1 && self.index[s.len() - 1].contains_key(s)
    }

    pub fn position(&self, s: &[usize]) -> Option<usize> {
        if s.is_empty() || s.len() > self.dim + 1 {
            return None;
        }
        self.index[s.len() - 1].get(s).copied()
    }

    /// Simplices of one dimension higher containing `s`.
    pub fn cofaces(&self, s: &[usize]) -> Vec<&[usize]> {
        match self.position(s) {
            Some(i) if s.len() <= self.dim => self.cofaces[s.len() - 1][i].iter().map(|&c| self.simplices[s.len()][c].as_slice()).collect(),
            _ => Vec::new(),
        }
    }

    pub fn is_oriented(&self) -> bool {
        self.orientation.is_some()
    }

    /// Every `(m−1)`-simplex has exactly two cofaces.
    pub fn is_closed_pseudomanifold(&self) -> bool {
        self.dim > 0 && self.cofaces[self.dim - 1].iter().all(|c| c.len() == 2)
    }

    /// Sum of oriented top simplices, when oriented.
    pub fn fundamental_cycle(&self) -> Option<Chain> {
        let o = self.orientation.as_ref()?;
        let mut c = Chain::zero(self.dim);
        for (s, &e) in self.simplices[self.dim].iter().zip(o) {
            c.add_term(s.clone(), e);
        }
        Some(c)
    }

    /// Dense boundary matrix `∂_p : C_p → C_{p−1}` in lexicographic bases.
    pub fn boundary_matrix(&self, p: usize) -> Vec<Vec<i64>> {
        if p == 0 || p > self.dim {
            return vec![vec![0; self.simplices(p).len()]; self.simplices(p.wrapping_sub(1)).len()];
        }
        let mut m = vec![vec![0i64; self.simplices[p].len()]; self.simplices[p - 1].len()];
        for (j, s) in self.simplices[p].iter().enumerate() {
            for i in 0..s.len() {
                let mut f = s.clone();
                f.remove(i);
                m[self.index[p - 1][&f]][j] = if i % 2 == 0 { 1 } else { -1 };
            }
        }
        m
    }

    /// Subcomplex spanned by the given simplices, all of which must lie in `self`.
    pub fn subcomplex(&self, generators: &[Vec<usize>]) -> Result<Subcomplex, TopologyError> {
        let mut set = BTreeSet::new();
        for g in generators {
            let mut s = g.clone();
            s.sort_unstable();
            if !self.contains(&s) {
                return Err(TopologyError::NotASimplex(g.clone()));
            }
            for p in 1..=s.len() {
                for face in crate::combinations(s.len(), p) {
                    set.insert(face.iter().map(|&i| s[i]).collect::<Vec<_>>());
                }
            }
        }
        Ok(Subcomplex { simplices: set })
    }

    pub fn to_json(&self) -> ComplexJson {
        let tops = match &self.orientation {
            Some(o) => self.simplices[self.dim]
                .iter()
                .zip(o)
                .map(|(s, &e)| {
                    let mut t = s.clone();
                    if e < 0 && t.len() >= 2 {
                        t.swap(0, 1);
                    }
                    t
                })
                .collect(),
            None => self.simplices[self.dim].clone(),
        };
        ComplexJson { dim: self.dim, top_simplices: tops, orientable: self.orientation.is_some() }
    }
}

/// A set of simplices closed under faces, referring to a fixed ambient complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subcomplex {
    simplices: BTreeSet<Vec<usize>>,
}

impl Subcomplex {
    pub fn contains(&self, s: &[usize]) -> bool {
        self.simplices.contains(s)
    }

    pub fn simplices(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.simplices.iter()
    }

    pub fn intersection(&self, other: &Subcomplex) -> Subcomplex {
        Subcomplex { simplices: self.simplices.intersection(&other.simplices).cloned().collect() }
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }
}

/// Complex JSON: top simplices as vertex tuples whose order fixes the orientation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub dim: usize,
    pub top_simplices: Vec<Vec<usize>>,
    pub orientable: bool,
}

impl ComplexJson {
    pub fn to_complex(&self) -> Result<SimplicialComplex, TopologyError> {
        SimplicialComplex::from_top_simplices(self.dim, &self.top_simplices, self.orientable)
    }
}

/// A finite integer chain of fixed dimension; keys are increasing vertex lists.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Chain {
    dim: usize,
    terms: BTreeMap<Vec<usize>, i64>,
}

impl Chain {
    pub fn zero(dim: usize) -> Self {
        Self { dim, terms: BTreeMap::new() }
    }

    /// `coef` times the oriented simplex given by an arbitrary vertex order.
    pub fn simplex(vertices: &[usize], coef: i64) -> Self {
        let mut c = Self::zero(vertices.len().saturating_sub(1));
        c.add_oriented(vertices, coef);
        c
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Vec<usize>, i64)>) -> Self {
        let mut c = Self::zero(dim);
        for (s, e) in terms {
            c.add_oriented(&s, e);
        }
        c
    }

    /// Adds `coef` times an increasing simplex.
    pub(crate) fn add_term(&mut self, s: Vec<usize>, coef: i64) {
        if coef == 0 {
            return;
        }
        match self.terms.entry(s) {
            Entry::Vacant(v) => {
                v.insert(coef);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    /// Adds `coef` times the oriented simplex; degenerate tuples contribute nothing.
    pub fn add_oriented(&mut self, vertices: &[usize], coef: i64) {
        debug_assert_eq!(vertices.len(), self.dim + 1);
        let mut s = vertices.to_vec();
        if let Some(sign) = sort_with_sign(&mut s) {
            self.add_term(s, coef * sign as i64);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, i64)> {
        self.terms.iter().map(|(s, &e)| (s, e))
    }

    pub fn coefficient(&self, s: &[usize]) -> i64 {
        self.terms.get(s).copied().unwrap_or(0)
    }

    /// Terms whose simplex starts with `prefix`.
    pub(crate) fn terms_with_prefix<'a>(&'a self, prefix: &'a [usize]) -> impl Iterator<Item = (&'a Vec<usize>, i64)> + 'a {
        self.terms.range(prefix.to_vec()..).take_while(move |(s, _)| s.starts_with(prefix)).map(|(s, &c)| (s, c))
    }

    pub fn first_term(&self) -> Option<(&Vec<usize>, i64)> {
        self.terms.iter().next().map(|(s, &e)| (s, e))
    }

    pub fn add(&self, other: &Chain) -> Chain {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Chain) {
        debug_assert!(other.is_zero() || self.is_zero() || self.dim == other.dim);
        if self.is_zero() {
            self.dim = other.dim;
        }
        for (s, e) in other.terms() {
            self.add_term(s.clone(), e);
        }
    }

    pub fn scale(&self, k: i64) -> Chain {
        if k == 0 {
            return Chain::zero(self.dim);
        }
        Chain { dim: self.dim, terms: self.terms.iter().map(|(s, &e)| (s.clone(), e * k)).collect() }
    }

    pub fn boundary(&self) -> Chain {
        let mut out = Chain::zero(self.dim.saturating_sub(1));
        if self.dim == 0 {
            return out;
        }
        for (s, e) in self.terms() {
            for i in 0..s.len() {
                let mut f = s.clone();
                f.remove(i);
                out.add_term(f, if i % 2 == 0 { e } else { -e });
            }
        }
        out
    }

    /// Sum of coefficients (the augmentation on 0-chains).
    pub fn degree(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Vertices of the support.
    pub fn support_vertices(&self) -> BTreeSet<usize> {
        self.terms.keys().flatten().copied().collect()
    }

    /// Image under a vertex map, extended linearly; collapsed simplices vanish.
    pub fn map_vertices(&self, f: impl Fn(usize) -> usize) -> Chain {
        let mut out = Chain::zero(self.dim);
        for (s, e) in self.terms() {
            let image: Vec<usize> = s.iter().map(|&v| f(v)).collect();
            out.add_oriented(&image, e);
        }
        out
    }
}

/// A finite integer cochain; `value` is the evaluation on increasing simplices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Cochain {
    dim: usize,
    values: BTreeMap<Vec<usize>, i64>,
}

impl Cochain {
    pub fn zero(dim: usize) -> Self {
        Self { dim, values: BTreeMap::new() }
    }

    /// The cochain taking `coef` on the oriented simplex and zero elsewhere.
    pub fn dual_to(vertices: &[usize], coef: i64) -> Self {
        let mut s = vertices.to_vec();
        let sign = sort_with_sign(&mut s).unwrap_or(0) as i64;
        let mut values = BTreeMap::new();
        if sign * coef != 0 {
            values.insert(s, sign * coef);
        }
        Self { dim: vertices.len().saturating_sub(1), values }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn value(&self, s: &[usize]) -> i64 {
        self.values.get(s).copied().unwrap_or(0)
    }

    pub fn evaluate(&self, c: &Chain) -> i64 {
        c.terms().map(|(s, e)| e * self.value(s)).sum()
    }
}
