use num_traits::{One, Zero};

use super::{PolyError, Polynomial, Rational};
use crate::util::combinations;

/// Row-major matrix of polynomials over a common ambient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self, PolyError> {
        if entries.len() != rows * cols {
            return Err(PolyError::ShapeMismatch(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                rows,
                cols
            )));
        }
        let nvars = entries.first().map(|p| p.nvars()).unwrap_or(0);
        if let Some(p) = entries.iter().find(|p| p.nvars() != nvars) {
            return Err(PolyError::AmbientMismatch(nvars, p.nvars()));
        }
        Ok(PolyMatrix { rows, cols, nvars, entries })
    }

    pub fn identity(size: usize, nvars: usize) -> Self {
        let mut entries = vec![Polynomial::zero(nvars); size * size];
        for i in 0..size {
            entries[i * size + i] = Polynomial::one(nvars);
        }
        PolyMatrix { rows: size, cols: size, nvars, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let entries = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        PolyMatrix { rows: rows.len(), cols: cols.len(), nvars: self.nvars, entries }
    }

    /// Determinant by fraction-free (Bareiss) elimination with row pivoting.
    pub fn det(&self) -> Result<Polynomial, PolyError> {
        if self.rows != self.cols {
            return Err(PolyError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut a: Vec<Vec<Polynomial>> = (0..n).map(|i| (0..n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut negate = false;
        let mut prev = Polynomial::one(self.nvars);
        for k in 0..n.saturating_sub(1) {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        negate = !negate;
                    }
                    None => return Ok(Polynomial::zero(self.nvars)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
            }
            prev = a[k][k].clone();
        }
        let det = if n == 0 { Polynomial::one(self.nvars) } else { a[n - 1][n - 1].clone() };
        Ok(if negate { -det } else { det })
    }

    /// Sum of all `i×i` principal minors: the coefficient of `t^i` in `det(I + tM)`.
    pub fn principal_minor_sum(&self, i: usize) -> Result<Polynomial, PolyError> {
        if self.rows != self.cols {
            return Err(PolyError::NotSquare(self.rows, self.cols));
        }
        if i > self.rows {
            return Ok(Polynomial::zero(self.nvars));
        }
        let mut acc = Polynomial::zero(self.nvars);
        for idx in combinations(self.rows, i) {
            acc = &acc + &self.submatrix(&idx, &idx).det()?;
        }
        Ok(acc)
    }

    /// All `size×size` minors, zero ones dropped.
    pub fn minors(&self, size: usize) -> Vec<Polynomial> {
        let mut out = Vec::new();
        for r in combinations(self.rows, size) {
            for c in combinations(self.cols, size) {
                let d = self.submatrix(&r, &c).det().expect("square");
                if !d.is_zero() {
                    out.push(d);
                }
            }
        }
        out
    }

    /// Rank over the fraction field: the largest size of a nonvanishing minor.
    pub fn generic_rank(&self) -> usize {
        (1..=self.rows.min(self.cols))
            .rev()
            .find(|&s| {
                combinations(self.rows, s)
                    .iter()
                    .any(|r| combinations(self.cols, s).iter().any(|c| !self.submatrix(r, c).det().expect("square").is_zero()))
            })
            .unwrap_or(0)
    }

    pub fn evaluate(&self, point: &[Rational]) -> RatMatrix {
        RatMatrix::new(self.rows, self.cols, self.entries.iter().map(|p| p.evaluate(point)).collect())
    }
}

/// Jacobian `(∂v_i/∂z_j)` of `n` polynomials in `n` variables.
pub fn jacobian(v: &[Polynomial]) -> Result<PolyMatrix, PolyError> {
    let n = v.first().map(|p| p.nvars()).unwrap_or(0);
    if v.len() != n {
        return Err(PolyError::ShapeMismatch(format!("{} components over {} variables", v.len(), n)));
    }
    let mut entries = Vec::with_capacity(n * n);
    for p in v {
        if p.nvars() != n {
            return Err(PolyError::AmbientMismatch(n, p.nvars()));
        }
        for j in 0..n {
            entries.push(p.d(j));
        }
    }
    PolyMatrix::new(n, n, entries)
}

/// Dense matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), rows * cols);
        RatMatrix { rows, cols, data }
    }

    pub fn from_ints(rows: usize, cols: usize, data: &[i64]) -> Self {
        Self::new(rows, cols, data.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![Rational::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = Rational::one();
        }
        Self::new(n, n, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> RatMatrix {
        let data = rows.iter().flat_map(|&i| cols.iter().map(move |&j| (i, j))).map(|(i, j)| self.get(i, j).clone()).collect();
        RatMatrix::new(rows.len(), cols.len(), data)
    }

    /// Row echelon form by Gaussian elimination; returns (rank, determinant if square).
    fn eliminate(&self) -> (usize, Rational) {
        let mut a: Vec<Vec<Rational>> = (0..self.rows).map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec()).collect();
        let mut rank = 0;
        let mut det = Rational::one();
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !a[r][col].is_zero()) else {
                det = Rational::zero();
                continue;
            };
            if p != rank {
                a.swap(p, rank);
                det = -det;
            }
            let piv = a[rank][col].clone();
            det *= &piv;
            for r in rank + 1..self.rows {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] / &piv;
                for c in col..self.cols {
                    let t = &f * &a[rank][c];
                    a[r][c] -= t;
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        if rank < self.rows {
            det = Rational::zero();
        }
        (rank, det)
    }

    pub fn rank(&self) -> usize {
        self.eliminate().0
    }

    pub fn det(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        if self.rows == 0 {
            return Rational::one();
        }
        self.eliminate().1
    }

    pub fn principal_minor_sum(&self, i: usize) -> Rational {
        assert_eq!(self.rows, self.cols);
        combinations(self.rows, i).iter().map(|idx| self.submatrix(idx, idx).det()).fold(Rational::zero(), |a, b| a + b)
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows);
        let mut data = vec![Rational::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        RatMatrix::new(self.rows, other.cols, data)
    }
}
