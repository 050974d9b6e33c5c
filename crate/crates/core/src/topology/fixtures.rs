//! Small triangulated manifolds and cycles on them.

use super::complex::{Chain, SimplicialComplex};

fn oriented(dim: usize, tops: &[Vec<usize>]) -> SimplicialComplex {
    SimplicialComplex::from_top_simplices(dim, tops, true).expect("fixture is an orientable manifold")
}

/// The boundary of the tetrahedron, a 2-sphere.
pub fn tetrahedron_boundary() -> SimplicialComplex {
    oriented(2, &[vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]])
}

/// The octahedron, a 2-sphere with the equator `0–1–2–3` and poles 4 and 5.
pub fn octahedron() -> SimplicialComplex {
    let mut tops = Vec::new();
    for i in 0..4 {
        let j = (i + 1) % 4;
        tops.push(vec![i, j, 4]);
        tops.push(vec![j, i, 5]);
    }
    oriented(2, &tops)
}

/// The oriented equator `0 → 1 → 2 → 3 → 0` of [`octahedron`].
pub fn octahedron_equator() -> Chain {
    Chain::from_terms(1, (0..4).map(|i| (vec![i, (i + 1) % 4], 1)))
}

/// The seven-vertex torus with triangles `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
pub fn seven_vertex_torus() -> SimplicialComplex {
    let mut tops = Vec::new();
    for i in 0..7 {
        tops.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        tops.push(vec![i, (i + 3) % 7, (i + 2) % 7]);
    }
    oriented(2, &tops)
}

fn grid_vertex(rows: usize, cols: usize, i: usize, j: usize) -> usize {
    (i % rows) * cols + (j % cols)
}

/// The `rows × cols` product torus, each square cut along a diagonal; needs `rows, cols ≥ 3`.
pub fn grid_torus(rows: usize, cols: usize) -> SimplicialComplex {
    assert!(rows >= 3 && cols >= 3, "grid torus needs at least three rows and columns");
    let v = |i, j| grid_vertex(rows, cols, i, j);
    let mut tops = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            tops.push(vec![v(i, j), v(i + 1, j), v(i + 1, j + 1)]);
            tops.push(vec![v(i, j), v(i + 1, j + 1), v(i, j + 1)]);
        }
    }
    oriented(2, &tops)
}

/// The two coordinate circles of [`grid_torus`] through vertex 0: varying the row, then the column.
pub fn grid_torus_cycles(rows: usize, cols: usize) -> (Chain, Chain) {
    let v = |i, j| grid_vertex(rows, cols, i, j);
    let a = Chain::from_terms(1, (0..rows).map(|i| (vec![v(i, 0), v(i + 1, 0)], 1)));
    let b = Chain::from_terms(1, (0..cols).map(|j| (vec![v(0, j), v(0, j + 1)], 1)));
    (a, b)
}

/// Two disjoint triangle boundaries.
pub fn two_circles() -> SimplicialComplex {
    SimplicialComplex::from_top_simplices(1, &[vec![0, 1], vec![1, 2], vec![2, 0], vec![3, 4], vec![4, 5], vec![5, 3]], true)
        .expect("two circles")
}
