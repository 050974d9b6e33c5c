//! Certified slice residues and the dimension-theorem checkers.

mod fixtures;
mod report;

use serde::Serialize;
use thiserror::Error;

pub use fixtures::{
    dimension_corpus, dimension_extra_corpus, lifted, linear_field, non_poisson_fixture, poisson_corpus, radial_lift, seeded_linear_parts,
    slice_corpus, soares, Fixture, PointFixture,
};
pub use report::{oracle_phis, residue_json, slice_json, slice_report_json, theorem_report_json, verify_report};

use crate::foliation::{
    involutivity_check, make_slice, poisson_analysis, singular_ideal, slice_foliation, FoliationError, FoliationPresentation, Presentation,
    SliceSpec,
};
use crate::ideal::{krull_dimension, zero_locus_is_origin_only, Ideal};
use num_traits::Zero;

use crate::poly::{rat, Rational, VectorField};
use crate::residue::{baum_bott_residue, PhiSpec, ResidueError, ResidueResult};
use crate::topology::TopologyError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HarnessError {
    #[error(transparent)]
    Foliation(#[from] FoliationError),
    #[error(transparent)]
    Residue(#[from] ResidueError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error("phi has weighted degree {got}, the slice dimension is {expected}")]
    PhiDegree { expected: usize, got: u32 },
    #[error("the base point is not a singular point of the foliation")]
    PointNotSingular,
    #[error("no certified slice in {} draws; {}", attempts.len(), diagnostic(attempts))]
    RetriesExhausted { attempts: Vec<SliceAttempt> },
}

fn diagnostic(attempts: &[SliceAttempt]) -> String {
    match attempts.iter().filter_map(|a| a.slice_ideal_dim).max() {
        Some(d) => format!("slice singular ideal has dimension {}", d),
        None => "no draw was transverse".to_string(),
    }
}

/// Outcome of one rejected slice draw.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SliceAttempt {
    pub seed: Option<u64>,
    pub transverse: bool,
    /// Dimension of the zero set of the slice generator, when the slice was transverse.
    pub slice_ideal_dim: Option<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Certificates {
    pub transverse: bool,
    pub origin_only_zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceResidueReport {
    pub slice: SliceSpec,
    pub generator: VectorField,
    pub certified: Certificates,
    pub residue: ResidueResult,
    pub retries_used: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SliceOptions {
    pub seed: u64,
    pub max_retries: usize,
    pub bound: u32,
}

impl Default for SliceOptions {
    fn default() -> Self {
        SliceOptions { seed: 0, max_retries: 16, bound: 5 }
    }
}

/// `Res_φ(i*F, 0)` for a slice `i` through `p`, drawn with seeds `seed, seed+1, …`
/// until the slice is transverse and the slice foliation vanishes only at `0`.
pub fn certified_slice_residue(
    f: &FoliationPresentation,
    point: &[Rational],
    phi: &PhiSpec,
    opts: &SliceOptions,
) -> Result<SliceResidueReport, HarnessError> {
    let (n, k) = (f.ambient_dim(), f.dimension());
    let m = n + 1 - k;
    if phi.degree() as usize != m {
        return Err(HarnessError::PhiDegree { expected: m, got: phi.degree() });
    }
    let sing = singular_ideal(f)?;
    if point.len() != n || sing.generators().iter().any(|g| !g.evaluate(point).is_zero()) {
        return Err(HarnessError::PointNotSingular);
    }
    let mut attempts = Vec::new();
    let draws = if k == 1 { 1 } else { opts.max_retries.max(1) };
    for t in 0..draws {
        let spec = if k == 1 {
            SliceSpec::identity(point.to_vec())
        } else {
            make_slice(f, point, opts.seed.wrapping_add(t as u64), opts.bound)?
        };
        let sliced = match slice_foliation(f, &spec) {
            Ok(s) => s,
            Err(FoliationError::NotTransverse) | Err(FoliationError::DegenerateSlice) => {
                attempts.push(SliceAttempt { seed: spec.seed, transverse: false, slice_ideal_dim: None });
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        let ideal = Ideal::new(m, sliced.generator.components().to_vec()).expect("generator lives on the slice");
        if !zero_locus_is_origin_only(&ideal) {
            attempts.push(SliceAttempt { seed: spec.seed, transverse: true, slice_ideal_dim: Some(krull_dimension(&ideal)) });
            continue;
        }
        let origin = vec![rat(0); m];
        let residue = baum_bott_residue(&sliced.generator, &origin, phi)?;
        return Ok(SliceResidueReport {
            slice: spec,
            generator: sliced.generator,
            certified: Certificates { transverse: true, origin_only_zero: true },
            residue,
            retries_used: t,
        });
    }
    Err(HarnessError::RetriesExhausted { attempts })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceInvariance {
    pub agree: bool,
    pub first: SliceResidueReport,
    pub second: SliceResidueReport,
}

/// Compares the certified residues obtained from two seeds.
pub fn slice_invariance_test(
    f: &FoliationPresentation,
    point: &[Rational],
    phi: &PhiSpec,
    seeds: (u64, u64),
    opts: &SliceOptions,
) -> Result<SliceInvariance, HarnessError> {
    let first = certified_slice_residue(f, point, phi, &SliceOptions { seed: seeds.0, ..*opts })?;
    let second = certified_slice_residue(f, point, phi, &SliceOptions { seed: seeds.1, ..*opts })?;
    Ok(SliceInvariance { agree: first.residue.value == second.residue.value, first, second })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    DimLowerBound,
    PoissonDegeneracy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordStatus {
    Pass,
    /// Empty locus: nothing to check.
    Vacuous,
    OutOfHypothesis,
    Rejected,
    Violation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremRecord {
    pub fixture: String,
    pub n: usize,
    pub k: usize,
    /// Dimension of the checked locus, `−1` when empty; absent for rejected inputs.
    pub dim: Option<i64>,
    pub status: RecordStatus,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCheckReport {
    pub theorem: TheoremId,
    pub inputs_examined: usize,
    pub violations: Vec<String>,
    pub records: Vec<TheoremRecord>,
}

impl TheoremCheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn from_records(theorem: TheoremId, records: Vec<TheoremRecord>) -> Self {
        let violations = records.iter().filter(|r| r.status == RecordStatus::Violation).map(|r| r.fixture.clone()).collect();
        TheoremCheckReport { theorem, inputs_examined: records.len(), violations, records }
    }
}

fn dimension_record(fx: &Fixture) -> Result<TheoremRecord, HarnessError> {
    let f = &fx.foliation;
    let (n, k) = (f.ambient_dim(), f.dimension());
    let record = |dim, status, note: String| TheoremRecord { fixture: fx.id.clone(), n, k, dim, status, note };
    let is_fields = match f.presentation() {
        Presentation::Poisson(_) => return Ok(record(None, RecordStatus::Rejected, "poisson presentation".into())),
        Presentation::VectorFields(_) => true,
        Presentation::Form(_) => false,
    };
    if is_fields && !involutivity_check(f)? {
        return Ok(record(None, RecordStatus::Rejected, "not involutive".into()));
    }
    if 2 * k > n || k + 2 > n {
        let dim = krull_dimension(&singular_ideal(f)?);
        let note = format!("k = {} outside k ≤ n/2, k ≤ n−2; dim Sing = {} = k − {}", k, dim, k as i64 - dim);
        return Ok(record(Some(dim), RecordStatus::OutOfHypothesis, note));
    }
    if !is_fields {
        return Ok(record(None, RecordStatus::Rejected, "involutivity needs a vector-field presentation".into()));
    }
    let dim = krull_dimension(&singular_ideal(f)?);
    let bound = k as i64 - 1;
    Ok(if dim < 0 {
        record(Some(dim), RecordStatus::Vacuous, "empty singular set".into())
    } else if dim >= bound {
        record(Some(dim), RecordStatus::Pass, format!("{} ≥ {}", dim, bound))
    } else {
        record(Some(dim), RecordStatus::Violation, format!("{} < {}", dim, bound))
    })
}

/// Checks `dim Sing(F) ≥ k − 1` over the corpus.
pub fn dimension_theorem_check(corpus: &[Fixture]) -> Result<TheoremCheckReport, HarnessError> {
    let records = corpus.iter().map(dimension_record).collect::<Result<_, _>>()?;
    Ok(TheoremCheckReport::from_records(TheoremId::DimLowerBound, records))
}

fn poisson_record(fx: &Fixture) -> Result<TheoremRecord, HarnessError> {
    let f = &fx.foliation;
    let n = f.ambient_dim();
    let a = poisson_analysis(f)?;
    let r = a.generic_rank;
    let record = |dim, status, note: String| TheoremRecord { fixture: fx.id.clone(), n, k: r, dim, status, note };
    if !a.jacobi_ok {
        return Ok(record(None, RecordStatus::Rejected, "Jacobi identity fails".into()));
    }
    if r == 0 || 2 * r > n {
        return Ok(record(None, RecordStatus::OutOfHypothesis, format!("generic rank {} on C^{}", r, n)));
    }
    let dim = a.degeneracy_dim();
    let bound = r as i64 - 2;
    Ok(if dim < 0 {
        record(Some(dim), RecordStatus::Vacuous, "empty degeneracy locus".into())
    } else if dim > bound {
        record(Some(dim), RecordStatus::Pass, format!("{} > {}", dim, bound))
    } else {
        record(Some(dim), RecordStatus::Violation, format!("{} ≤ {}", dim, bound))
    })
}

/// Checks that a nonempty degeneracy locus has a component of dimension `> r − 2`.
pub fn poisson_theorem_check(corpus: &[Fixture]) -> Result<TheoremCheckReport, HarnessError> {
    let records = corpus.iter().map(poisson_record).collect::<Result<_, _>>()?;
    Ok(TheoremCheckReport::from_records(TheoremId::PoissonDegeneracy, records))
}
