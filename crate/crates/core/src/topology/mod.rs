//! Combinatorial intersection theory on finite oriented simplicial complexes:
//! barycentric subdivisions, dual cells, homology, Poincaré and Alexander
//! duality, and localized intersection products.

mod complex;
mod duality;
mod fixtures;
mod homology;
mod subdivision;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

pub use complex::{Chain, Cochain, ComplexJson, SimplicialComplex, Subcomplex};
pub use duality::{
    alexander_dual, boundary_formula_sides, dual_betti_numbers, dual_boundary, dual_cell, dual_cell_choices, dual_cell_with, dual_coboundary, dual_representative,
    homologous_in_k0, intersection_pairing, intersection_product, intersection_product_with, localized_intersection, poincare_dual,
    unit_dual_cochain, DualCell, DualCochain, LocalizedProduct,
};
pub use fixtures::{grid_torus, grid_torus_cycles, octahedron, octahedron_equator, seven_vertex_torus, tetrahedron_boundary, two_circles};
pub use homology::{betti_numbers, homology, invariant_factors, is_boundary, rational_rank, solve_rational, Coefficients, HomologyGroup};
pub use subdivision::{barycentric_subdivide, Subdivision, SubdivisionTower};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TopologyError {
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("complex is not orientable")]
    NotOrientable,
    #[error("not a closed combinatorial manifold: {0}")]
    NotManifold(String),
    #[error("{0:?} is not a simplex of the complex")]
    NotASimplex(Vec<usize>),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("support violation: {0}")]
    SupportViolation(String),
    #[error("no integral dual-cell representative near the subcomplex")]
    NoDualRepresentative,
    #[error("integer overflow in normal form")]
    Overflow,
}

/// Homology of every degree, as JSON.
pub fn homology_report(k: &SimplicialComplex) -> Result<Value, TopologyError> {
    let groups = (0..=k.dim()).map(|p| homology(k, p, Coefficients::Integers)).collect::<Result<Vec<_>, _>>()?;
    Ok(json!({
        "betti": groups.iter().map(|g| g.betti).collect::<Vec<_>>(),
        "torsion": groups.iter().map(|g| g.torsion.clone()).collect::<Vec<_>>(),
        "f_vector": k.f_vector(),
    }))
}

/// Whether `s*·s = b_s` holds for every simplex of `K`.
pub fn dual_self_intersections_hold(tower: &SubdivisionTower) -> Result<bool, TopologyError> {
    for p in 0..=tower.dim() {
        for s in tower.k().simplices(p) {
            let b = tower.second().barycenter(s).expect("simplex of K");
            if intersection_product(tower, s, s)? != Chain::simplex(&[b], 1) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks the boundary formula on `count` seeded random pairs `(s1, s2)` of
/// `K`-simplices; three quarters of the draws take `s1` to be a face of `s2`.
/// Returns the failing pairs.
pub fn boundary_formula_check(tower: &SubdivisionTower, count: usize, seed: u64) -> Result<Vec<(Vec<usize>, Vec<usize>)>, TopologyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all: Vec<&Vec<usize>> = (0..=tower.dim()).flat_map(|p| tower.k().simplices(p)).collect();
    let mut failures = Vec::new();
    for _ in 0..count {
        let s2 = all[rng.gen_range(0..all.len())].clone();
        let s1 = if rng.gen_bool(0.75) {
            let mut face: Vec<usize> = s2.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
            if face.is_empty() {
                face.push(s2[rng.gen_range(0..s2.len())]);
            }
            face
        } else {
            all[rng.gen_range(0..all.len())].clone()
        };
        let (lhs, rhs) = boundary_formula_sides(tower, &s1, &s2)?;
        if lhs != rhs {
            failures.push((s1, s2));
        }
    }
    Ok(failures)
}

/// Pairing matrix of a list of 1-cycles on a surface.
pub fn pairing_matrix(tower: &SubdivisionTower, cycles: &[Chain]) -> Result<Vec<Vec<i64>>, TopologyError> {
    cycles.iter().map(|a| cycles.iter().map(|b| intersection_pairing(tower, a, b)).collect()).collect()
}

#[cfg(test)]
mod tests;
