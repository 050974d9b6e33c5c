//! Integer normal forms of boundary matrices and exact rational solving.

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::complex::{Chain, SimplicialComplex};
use super::TopologyError;
use crate::poly::Rational;

/// Coefficient ring for homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Integers,
    Rationals,
}

/// Homology in one degree: Betti number and torsion coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<i64>,
}

/// Nonzero invariant factors `d_1 | d_2 | …` of an integer matrix.
pub fn invariant_factors(matrix: &[Vec<i64>]) -> Result<Vec<i64>, TopologyError> {
    let mut a: Vec<Vec<i128>> = matrix.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let pivot = (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j))).filter(|&(i, j)| a[i][j] != 0).min_by_key(|&(i, j)| a[i][j].abs());
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t];
            let mut done = true;
            for i in t + 1..rows {
                let q = Integer::div_floor(&a[i][t], &p);
                if q != 0 {
                    for j in t..cols {
                        a[i][j] = checked(a[i][j] - q * a[t][j])?;
                    }
                }
                if a[i][t] != 0 {
                    done = false;
                }
            }
            for j in t + 1..cols {
                let q = Integer::div_floor(&a[t][j], &p);
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] = checked(row[j] - q * row[t])?;
                    }
                }
                if a[t][j] != 0 {
                    done = false;
                }
            }
            if done {
                break;
            }
            let (mut bi, mut bj, mut best) = (t, t, a[t][t].abs());
            for i in t..rows {
                for j in t..cols {
                    if (i == t || j == t) && a[i][j] != 0 && a[i][j].abs() < best {
                        (bi, bj, best) = (i, j, a[i][j].abs());
                    }
                }
            }
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            let l = checked(diag[i] / g * diag[j])?;
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag.into_iter().map(|d| i64::try_from(d).map_err(|_| TopologyError::Overflow)).collect()
}

fn checked(x: i128) -> Result<i128, TopologyError> {
    if x.abs() > i128::from(i64::MAX) {
        Err(TopologyError::Overflow)
    } else {
        Ok(x)
    }
}

/// Homology of `k` in degree `p`.
pub fn homology(k: &SimplicialComplex, p: usize, coefficients: Coefficients) -> Result<HomologyGroup, TopologyError> {
    let n_p = k.simplices(p).len();
    let rank_in = if p == 0 { 0 } else { invariant_factors(&k.boundary_matrix(p))?.len() };
    let out = if p < k.dim() { invariant_factors(&k.boundary_matrix(p + 1))? } else { Vec::new() };
    let betti = n_p - rank_in - out.len();
    let torsion = match coefficients {
        Coefficients::Integers => out.into_iter().filter(|&d| d > 1).collect(),
        Coefficients::Rationals => Vec::new(),
    };
    Ok(HomologyGroup { betti, torsion })
}

/// Betti numbers `b_0, …, b_m` over the rationals.
pub fn betti_numbers(k: &SimplicialComplex) -> Result<Vec<usize>, TopologyError> {
    (0..=k.dim()).map(|p| homology(k, p, Coefficients::Rationals).map(|h| h.betti)).collect()
}

/// Rank of a rational matrix given by rows.
pub fn rational_rank(rows: &[Vec<Rational>]) -> usize {
    let mut a = rows.to_vec();
    row_reduce(&mut a).len()
}

/// Reduced row echelon form in place; returns the pivot columns.
fn row_reduce(a: &mut [Vec<Rational>]) -> Vec<usize> {
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, pr);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    let d = &f * &a[r][j];
                    a[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    pivots
}

/// One rational solution of `A x = b`, free variables set to zero.
pub fn solve_rational(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let cols = a.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<Rational>> = a.iter().zip(b).map(|(row, bi)| row.iter().cloned().chain(std::iter::once(bi.clone())).collect()).collect();
    let pivots = row_reduce(&mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

/// Whether `z` is a rational boundary in `k`.
pub fn is_boundary(k: &SimplicialComplex, z: &Chain) -> Result<bool, TopologyError> {
    if z.is_zero() {
        return Ok(true);
    }
    let p = z.dim();
    if p >= k.dim() {
        return Ok(false);
    }
    for (s, _) in z.terms() {
        if !k.contains(s) {
            return Err(TopologyError::NotASimplex(s.clone()));
        }
    }
    let rows: Vec<Vec<Rational>> = k.boundary_matrix(p + 1).iter().map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect();
    let b: Vec<Rational> = k.simplices(p).iter().map(|s| Rational::from_integer(z.coefficient(s).into())).collect();
    Ok(solve_rational(&rows, &b).is_some())
}

/// Converts a rational vector to integers when every entry is integral.
pub(crate) fn integral(v: &[Rational]) -> Option<Vec<i64>> {
    v.iter()
        .map(|x| if x.denom().is_one() { i64::try_from(x.numer()).ok() } else { None })
        .collect()
}
