//! `folres`: runs a JSON job file and prints a deterministic JSON report.
//!
//! Exit codes: 0 on success, 2 on a certified failure (non-transverse slice,
//! exhausted retries, non-isolated zero), 1 on malformed input.

use std::fs;
use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use folres::foliation::{involutivity_check, poisson_analysis, singular_ideal, FoliationError, PresentationJson};
use folres::harness::{certified_slice_residue, residue_json, slice_report_json, verify_report, HarnessError, SliceOptions};
use folres::ideal::MonomialOrder;
use folres::poly::{parse_polynomial, parse_rational, Rational, VectorField};
use folres::residue::{baum_bott_residue, PhiSpec, ResidueError};
use folres::topology::{self, Chain, ComplexJson, SubdivisionTower, TopologyError};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Order {
    Grevlex,
    Lex,
}

#[derive(Debug, Parser)]
#[command(name = "folres", version, about = "Exact residues and singular loci of polynomial foliations")]
struct Cli {
    /// Job file, or `-` for standard input.
    job: String,
    /// Seed of the first slice draw.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Maximum number of slice draws.
    #[arg(long, default_value_t = 16)]
    retries: usize,
    /// Slice entries are drawn from `[-bound, bound]`.
    #[arg(long, default_value_t = 5)]
    bound: u32,
    /// Characteristic polynomial in c1, c2, …; defaults to the top Chern class.
    #[arg(long)]
    phi: Option<String>,
    /// Base point as comma-separated rationals; defaults to the origin.
    #[arg(long)]
    point: Option<String>,
    /// Monomial order for reported Gröbner bases.
    #[arg(long, value_enum, default_value_t = Order::Grevlex)]
    order: Order,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Job {
    schema: u32,
    task: String,
    #[serde(default)]
    payload: Value,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FoliationPayload {
    foliation: PresentationJson,
    #[serde(default)]
    point: Option<Vec<String>>,
    #[serde(default)]
    phi: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FieldPayload {
    field: Vec<String>,
    #[serde(default)]
    point: Option<Vec<String>>,
    #[serde(default)]
    phi: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct EmptyPayload {}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexPayload {
    complex: ComplexJson,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    simplex: Vec<usize>,
    coef: i64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct IntersectPayload {
    complex: ComplexJson,
    cycles: Vec<Vec<TermJson>>,
}

/// A failure, rendered as `{"error": {...}}`.
#[derive(Debug)]
struct Failure {
    certified: bool,
    kind: &'static str,
    message: String,
    detail: Option<Value>,
}

impl Failure {
    fn malformed(message: impl ToString) -> Self {
        Failure { certified: false, kind: "malformed_input", message: message.to_string(), detail: None }
    }

    fn to_json(&self) -> Value {
        let mut e = json!({ "kind": self.kind, "message": self.message, "certified": self.certified });
        if let Some(d) = &self.detail {
            e["detail"] = d.clone();
        }
        json!({ "error": e })
    }
}

impl From<FoliationError> for Failure {
    fn from(e: FoliationError) -> Self {
        let (certified, kind) = match e {
            FoliationError::NotTransverse => (true, "not_transverse"),
            _ => (false, "invalid_foliation"),
        };
        Failure { certified, kind, message: e.to_string(), detail: None }
    }
}

impl From<ResidueError> for Failure {
    fn from(e: ResidueError) -> Self {
        let (certified, kind) = match e {
            ResidueError::NotIsolated => (true, "not_isolated"),
            _ => (false, "invalid_residue_input"),
        };
        Failure { certified, kind, message: e.to_string(), detail: None }
    }
}

impl From<HarnessError> for Failure {
    fn from(e: HarnessError) -> Self {
        match e {
            HarnessError::Foliation(f) => f.into(),
            HarnessError::Residue(r) => r.into(),
            HarnessError::Topology(t) => t.into(),
            HarnessError::RetriesExhausted { ref attempts } => Failure {
                certified: true,
                kind: "retries_exhausted",
                message: e.to_string(),
                detail: Some(json!({ "attempts": attempts })),
            },
            other => Failure { certified: false, kind: "invalid_slice_input", message: other.to_string(), detail: None },
        }
    }
}

impl From<TopologyError> for Failure {
    fn from(e: TopologyError) -> Self {
        Failure { certified: false, kind: "invalid_complex", message: e.to_string(), detail: None }
    }
}

fn payload<T: for<'de> Deserialize<'de>>(v: Value) -> Result<T, Failure> {
    let v = if v.is_null() { json!({}) } else { v };
    serde_json::from_value(v).map_err(|e| Failure::malformed(format!("payload: {}", e)))
}

fn parse_point(text: &str) -> Result<Vec<Rational>, Failure> {
    text.split(',').map(|s| parse_rational(s.trim()).map_err(|e| Failure::malformed(format!("point: {}", e)))).collect()
}

/// Flag values win over payload values; the default point is the origin.
fn resolve_point(cli: &Cli, payload: Option<Vec<String>>, n: usize) -> Result<Vec<Rational>, Failure> {
    let point = match (&cli.point, payload) {
        (Some(text), _) => parse_point(text)?,
        (None, Some(list)) => parse_point(&list.join(","))?,
        (None, None) => vec![Rational::from_integer(0.into()); n],
    };
    if point.len() != n {
        return Err(Failure::malformed(format!("point has {} coordinates, expected {}", point.len(), n)));
    }
    Ok(point)
}

fn resolve_phi(cli: &Cli, payload: Option<String>, m: usize) -> Result<PhiSpec, Failure> {
    match cli.phi.clone().or(payload) {
        Some(text) => Ok(PhiSpec::parse(&text)?),
        None => Ok(PhiSpec::top(m)),
    }
}

fn order(cli: &Cli) -> MonomialOrder {
    match cli.order {
        Order::Grevlex => MonomialOrder::Grevlex,
        Order::Lex => MonomialOrder::Lex,
    }
}

fn task_sing(cli: &Cli, p: FoliationPayload) -> Result<Value, Failure> {
    let f = p.foliation.to_presentation()?;
    let gb = singular_ideal(&f)?.groebner(order(cli));
    Ok(json!({
        "generators": gb.basis().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "dim": gb.krull_dimension(),
        "n": f.ambient_dim(),
        "k": f.dimension(),
    }))
}

fn task_involutive(p: FoliationPayload) -> Result<Value, Failure> {
    let f = p.foliation.to_presentation()?;
    Ok(json!({ "involutive": involutivity_check(&f)? }))
}

fn task_residue(cli: &Cli, p: FieldPayload) -> Result<Value, Failure> {
    let n = p.field.len();
    let comps = p.field.iter().map(|s| parse_polynomial(s, n)).collect::<Result<Vec<_>, _>>().map_err(Failure::malformed)?;
    let v = VectorField::new(comps).map_err(Failure::malformed)?;
    let point = resolve_point(cli, p.point, n)?;
    let phi = resolve_phi(cli, p.phi, n)?;
    Ok(residue_json(&baum_bott_residue(&v, &point, &phi)?))
}

fn task_slice_residue(cli: &Cli, p: FoliationPayload) -> Result<Value, Failure> {
    let f = p.foliation.to_presentation()?;
    let point = resolve_point(cli, p.point, f.ambient_dim())?;
    let phi = resolve_phi(cli, p.phi, f.ambient_dim() + 1 - f.dimension())?;
    let opts = SliceOptions { seed: cli.seed, max_retries: cli.retries, bound: cli.bound };
    let report = certified_slice_residue(&f, &point, &phi, &opts)?;
    let mut out = slice_report_json("job", &report);
    out.as_object_mut().expect("object").remove("fixture");
    Ok(out)
}

fn task_poisson(cli: &Cli, p: FoliationPayload) -> Result<Value, Failure> {
    let f = p.foliation.to_presentation()?;
    let a = poisson_analysis(&f)?;
    let strata: Vec<Value> = a
        .strata
        .iter()
        .map(|s| {
            let gb = s.ideal.groebner(order(cli));
            json!({ "rank_at_most": s.s, "dim": s.dim, "generators": gb.basis().iter().map(|g| g.to_string()).collect::<Vec<_>>() })
        })
        .collect();
    Ok(json!({
        "jacobi": a.jacobi_ok,
        "generic_rank": a.generic_rank,
        "degeneracy_dim": a.degeneracy_dim(),
        "strata": strata,
    }))
}

fn task_topo_homology(p: ComplexPayload) -> Result<Value, Failure> {
    let k = p.complex.to_complex()?;
    Ok(topology::homology_report(&k)?)
}

fn task_topo_intersect(p: IntersectPayload) -> Result<Value, Failure> {
    let k = p.complex.to_complex()?;
    let m = k.dim();
    let mut cycles = Vec::new();
    for (i, terms) in p.cycles.iter().enumerate() {
        let dim = terms.first().map_or(0, |t| t.simplex.len().saturating_sub(1));
        if terms.iter().any(|t| t.simplex.len() != dim + 1) {
            return Err(Failure::malformed(format!("cycle {} mixes dimensions", i)));
        }
        let c = Chain::from_terms(dim, terms.iter().map(|t| (t.simplex.clone(), t.coef)));
        if c.terms().any(|(s, _)| !k.contains(s)) {
            return Err(Failure::malformed(format!("cycle {} uses a simplex outside the complex", i)));
        }
        cycles.push(c);
    }
    let tower = SubdivisionTower::new(k);
    let mut pairing = Vec::new();
    for a in &cycles {
        let mut row = Vec::new();
        for b in &cycles {
            row.push(if a.dim() + b.dim() == m { json!(topology::intersection_pairing(&tower, a, b)?) } else { Value::Null });
        }
        pairing.push(row);
    }
    Ok(json!({
        "pairing": pairing,
        "self_intersections_ok": topology::dual_self_intersections_hold(&tower)?,
    }))
}

fn run(cli: &Cli) -> Result<Value, Failure> {
    let text = if cli.job == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(Failure::malformed)?;
        s
    } else {
        fs::read_to_string(&cli.job).map_err(|e| Failure::malformed(format!("{}: {}", cli.job, e)))?
    };
    let job: Job = serde_json::from_str(&text).map_err(|e| Failure::malformed(format!("job file: {}", e)))?;
    if job.schema != 1 {
        return Err(Failure::malformed(format!("unsupported schema version {}", job.schema)));
    }
    match job.task.as_str() {
        "sing" => task_sing(cli, payload(job.payload)?),
        "involutive" => task_involutive(payload(job.payload)?),
        "residue" => task_residue(cli, payload(job.payload)?),
        "slice-residue" => task_slice_residue(cli, payload(job.payload)?),
        "poisson" => task_poisson(cli, payload(job.payload)?),
        "verify" => {
            let _: EmptyPayload = payload(job.payload)?;
            Ok(verify_report()?)
        }
        "topo-homology" => task_topo_homology(payload(job.payload)?),
        "topo-intersect" => task_topo_intersect(payload(job.payload)?),
        other => Err(Failure::malformed(format!("unknown task {:?}", other))),
    }
}

/// Writes the report; a closed stdout is not an error worth reporting.
fn emit(v: &Value) {
    let text = serde_json::to_string_pretty(v).expect("JSON values serialize");
    let _ = writeln!(std::io::stdout().lock(), "{}", text);
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            print!("{}", e);
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            emit(&Failure::malformed(e.to_string().trim_end()).to_json());
            return ExitCode::from(1);
        }
    };
    match run(&cli) {
        Ok(report) => {
            emit(&report);
            ExitCode::SUCCESS
        }
        Err(f) => {
            emit(&f.to_json());
            ExitCode::from(if f.certified { 2 } else { 1 })
        }
    }
}
