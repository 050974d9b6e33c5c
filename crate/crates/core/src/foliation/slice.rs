use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{FoliationError, FoliationPresentation};
use crate::ideal::poly_gcd_many;
use crate::poly::{rat, Polynomial, RatMatrix, Rational, VectorField};

const RANK_DRAWS: usize = 100;

/// Affine slice `w ↦ p + L·w` from `C^m` into `C^n`, `m = n − k + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceSpec {
    pub point: Vec<Rational>,
    pub matrix: RatMatrix,
    /// Seed of the draw, when the matrix was generated.
    pub seed: Option<u64>,
}

impl SliceSpec {
    /// The slice `w ↦ p + w`, available when `k = 1`.
    pub fn identity(point: Vec<Rational>) -> Self {
        let n = point.len();
        SliceSpec { point, matrix: RatMatrix::identity(n), seed: None }
    }

    pub fn slice_dim(&self) -> usize {
        self.matrix.cols()
    }
}

/// Draws `L` with integer entries uniform in `[−bound, bound]` until it has full column rank.
pub fn make_slice(f: &FoliationPresentation, point: &[Rational], seed: u64, bound: u32) -> Result<SliceSpec, FoliationError> {
    let n = f.ambient_dim();
    if point.len() != n {
        return Err(FoliationError::InvalidPresentation(format!("base point of length {} on C^{}", point.len(), n)));
    }
    let m = n + 1 - f.dimension();
    let b = i64::from(bound.max(1));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANK_DRAWS {
        let data: Vec<Rational> = (0..n * m).map(|_| rat(rng.gen_range(-b..=b))).collect();
        let matrix = RatMatrix::new(n, m, data);
        if matrix.rank() == m {
            return Ok(SliceSpec { point: point.to_vec(), matrix, seed: Some(seed) });
        }
    }
    Err(FoliationError::RankDrawsExhausted(RANK_DRAWS))
}

/// The one-dimensional foliation `i*F` on the slice, with its saturated generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceFoliation {
    pub generator: VectorField,
    pub spec: SliceSpec,
    /// Polynomial factor divided out of the generator's components.
    pub removed_factor: Polynomial,
}

impl SliceFoliation {
    pub fn ambient_dim(&self) -> usize {
        self.generator.nvars()
    }
}

/// Rational `c` making every component of `v / c` integral with coprime
/// coefficients overall, and the first nonzero component's top term positive.
fn joint_content(v: &[Polynomial]) -> Rational {
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for p in v {
        for (_, c) in p.terms() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
    }
    if num.is_zero() {
        return Rational::one();
    }
    let c = Rational::new(num, den);
    let lead_negative = v.iter().find(|p| !p.is_zero()).map_or(false, |p| p.content().is_negative());
    if lead_negative {
        -c
    } else {
        c
    }
}

pub fn slice_foliation(f: &FoliationPresentation, spec: &SliceSpec) -> Result<SliceFoliation, FoliationError> {
    let m = spec.slice_dim();
    if m + f.dimension() != f.ambient_dim() + 1 {
        return Err(FoliationError::InvalidPresentation(format!(
            "slice of dimension {} for a {}-dimensional foliation on C^{}",
            m,
            f.dimension(),
            f.ambient_dim()
        )));
    }
    let eta = f.omega()?.affine_pullback(&spec.point, &spec.matrix)?;
    if eta.is_zero() {
        return Err(FoliationError::NotTransverse);
    }
    let all: Vec<usize> = (0..m).collect();
    let comps: Vec<Polynomial> = (0..m)
        .map(|j| {
            let rest: Vec<usize> = all.iter().copied().filter(|&i| i != j).collect();
            let c = eta.coefficient(&rest);
            if j % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    let g = poly_gcd_many(m, &comps);
    if g.is_zero() {
        return Err(FoliationError::DegenerateSlice);
    }
    let comps: Vec<Polynomial> = comps.iter().map(|c| c.div_exact(&g).expect("gcd divides")).collect();
    let content = joint_content(&comps);
    let comps: Vec<Polynomial> = comps.iter().map(|c| c.scale(&content.recip())).collect();
    Ok(SliceFoliation { generator: VectorField::new(comps)?, spec: spec.clone(), removed_factor: g })
}
