//! Barycentric subdivision with ancestry, and the tower `K0 → K → K'`.

use std::collections::{BTreeMap, HashMap};

use super::complex::{Chain, SimplicialComplex};
use super::TopologyError;

/// A barycentric subdivision. Vertex `i` of the subdivision is the barycenter
/// of `carrier(i)`; ids increase with the dimension of the carrier, so the
/// increasing vertex order of a subdivision simplex is its flag order.
#[derive(Clone, Debug)]
pub struct Subdivision {
    complex: SimplicialComplex,
    carrier: Vec<Vec<usize>>,
    ids: HashMap<Vec<usize>, usize>,
}

pub fn barycentric_subdivide(k: &SimplicialComplex) -> Subdivision {
    let mut carrier = Vec::new();
    let mut ids = HashMap::new();
    for p in 0..=k.dim() {
        for s in k.simplices(p) {
            ids.insert(s.clone(), carrier.len());
            carrier.push(s.clone());
        }
    }
    let mut tops = Vec::new();
    for s in k.simplices(k.dim()) {
        for perm in permutations(s) {
            let flag: Vec<usize> = (1..=perm.len())
                .map(|i| {
                    let mut face = perm[..i].to_vec();
                    face.sort_unstable();
                    ids[&face]
                })
                .collect();
            tops.push(flag);
        }
    }
    let mut sub = Subdivision { complex: SimplicialComplex::build(k.dim(), tops, None), carrier, ids };
    if let Some(x) = k.fundamental_cycle() {
        let sx = sub.subdivide_chain(&x);
        let orientation: BTreeMap<Vec<usize>, i64> = sx.terms().map(|(s, e)| (s.clone(), e)).collect();
        sub.complex = SimplicialComplex::build(k.dim(), orientation.keys().cloned().collect(), Some(orientation));
    }
    sub
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, first);
            out.push(p);
        }
    }
    out
}

impl Subdivision {
    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// The parent simplex whose barycenter is vertex `v`.
    pub fn carrier(&self, v: usize) -> &[usize] {
        &self.carrier[v]
    }

    /// The barycenter vertex of a parent simplex.
    pub fn barycenter(&self, s: &[usize]) -> Option<usize> {
        self.ids.get(s).copied()
    }

    /// The parent simplex refined by a subdivision simplex: the last element of its flag.
    pub fn ancestor(&self, s: &[usize]) -> &[usize] {
        &self.carrier[*s.iter().max().expect("nonempty simplex")]
    }

    /// The subdivision chain map `sd(σ) = b_σ · sd(∂σ)`.
    pub fn subdivide_chain(&self, c: &Chain) -> Chain {
        let mut out = Chain::zero(c.dim());
        for (s, e) in c.terms() {
            out.add_assign(&self.subdivide_simplex(s).scale(e));
        }
        out
    }

    fn subdivide_simplex(&self, s: &[usize]) -> Chain {
        let b = self.ids[s];
        if s.len() == 1 {
            return Chain::simplex(&[b], 1);
        }
        let mut out = Chain::zero(s.len() - 1);
        for i in 0..s.len() {
            let mut face = s.to_vec();
            face.remove(i);
            let sign = if i % 2 == 0 { 1 } else { -1 };
            for (t, e) in self.subdivide_simplex(&face).terms() {
                let mut cone = Vec::with_capacity(s.len());
                cone.push(b);
                cone.extend_from_slice(t);
                out.add_oriented(&cone, sign * e);
            }
        }
        out
    }

    /// Simplicial approximation of the identity sending each barycenter to
    /// the least vertex of its carrier, applied to a chain.
    pub fn push_down(&self, c: &Chain) -> Chain {
        c.map_vertices(|v| self.carrier[v][0])
    }
}

/// `K0`, its first subdivision `K` and second subdivision `K'`, with the
/// fundamental cycles of all three when `K0` is oriented.
#[derive(Clone, Debug)]
pub struct SubdivisionTower {
    k0: SimplicialComplex,
    first: Subdivision,
    second: Subdivision,
    manifold: bool,
    x_prime: Option<Chain>,
}

impl SubdivisionTower {
    pub fn new(k0: SimplicialComplex) -> Self {
        let first = barycentric_subdivide(&k0);
        let second = barycentric_subdivide(first.complex());
        let manifold = k0.is_oriented() && k0.is_closed_pseudomanifold();
        let x_prime = second.complex().fundamental_cycle();
        Self { k0, first, second, manifold, x_prime }
    }

    pub fn k0(&self) -> &SimplicialComplex {
        &self.k0
    }

    pub fn k(&self) -> &SimplicialComplex {
        self.first.complex()
    }

    pub fn k_prime(&self) -> &SimplicialComplex {
        self.second.complex()
    }

    /// `K0 → K`.
    pub fn first(&self) -> &Subdivision {
        &self.first
    }

    /// `K → K'`.
    pub fn second(&self) -> &Subdivision {
        &self.second
    }

    pub fn dim(&self) -> usize {
        self.k0.dim()
    }

    /// The `K`-simplex and `K0`-simplex refined by a `K'`-simplex.
    pub fn ancestry(&self, s: &[usize]) -> (&[usize], &[usize]) {
        let in_k = self.second.ancestor(s);
        (in_k, self.first.ancestor(in_k))
    }

    /// `K0`-simplex carrying a `K`-simplex.
    pub fn k0_carrier(&self, s: &[usize]) -> &[usize] {
        self.first.ancestor(s)
    }

    /// Pushes a `K'`-chain down to `K0` along the simplicial approximations.
    pub fn to_k0(&self, c: &Chain) -> Chain {
        self.first.push_down(&self.second.push_down(c))
    }

    /// Errors unless `K0` is an oriented closed pseudomanifold.
    pub fn require_manifold(&self) -> Result<(), TopologyError> {
        if !self.k0.is_oriented() {
            return Err(TopologyError::NotOrientable);
        }
        if !self.manifold {
            return Err(TopologyError::NotManifold("some (m-1)-simplex does not have exactly two cofaces".into()));
        }
        Ok(())
    }

    pub fn fundamental_cycle_k(&self) -> Option<Chain> {
        self.k().fundamental_cycle()
    }

    pub fn fundamental_cycle_k_prime(&self) -> Option<&Chain> {
        self.x_prime.as_ref()
    }
}
