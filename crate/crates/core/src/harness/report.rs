//! JSON renderings. Rationals are written as canonical `p/q` strings; counts
//! and dimensions stay integers.

use serde_json::{json, Value};

use super::{
    certified_slice_residue, dimension_corpus, dimension_extra_corpus, dimension_theorem_check, linear_field, non_poisson_fixture,
    poisson_corpus, poisson_theorem_check, radial_lift, seeded_linear_parts, slice_corpus, slice_invariance_test, soares, HarnessError,
    SliceOptions, SliceResidueReport, TheoremCheckReport,
};
use crate::foliation::{singular_ideal, SliceSpec};
use crate::ideal::MonomialOrder;
use crate::poly::{parse_polynomial, rat, Polynomial, Rational, VectorField};
use crate::topology::{self, SubdivisionTower};
use crate::residue::{baum_bott_residue, grothendieck_residue, nondegenerate_oracle, PhiSpec, ResidueResult};

fn rats(v: &[Rational]) -> Value {
    Value::from(v.iter().map(|r| r.to_string()).collect::<Vec<_>>())
}

fn polys(v: &[Polynomial]) -> Value {
    Value::from(v.iter().map(|p| p.to_string()).collect::<Vec<_>>())
}

pub fn residue_json(r: &ResidueResult) -> Value {
    json!({
        "value": r.value.to_string(),
        "phi": r.phi.to_string(),
        "point": rats(&r.point),
        "multiplicity": r.multiplicity,
        "vanishes_by_degree": r.vanishes_by_degree,
    })
}

pub fn slice_json(s: &SliceSpec) -> Value {
    let rows: Vec<Value> = (0..s.matrix.rows()).map(|i| rats(&(0..s.matrix.cols()).map(|j| s.matrix.get(i, j).clone()).collect::<Vec<_>>())).collect();
    json!({ "point": rats(&s.point), "matrix": rows, "seed": s.seed })
}

pub fn slice_report_json(fixture: &str, r: &SliceResidueReport) -> Value {
    json!({
        "fixture": fixture,
        "certified": r.certified,
        "residue": residue_json(&r.residue),
        "retries": r.retries_used,
        "slice": slice_json(&r.slice),
        "generator": polys(r.generator.components()),
    })
}

pub fn theorem_report_json(r: &TheoremCheckReport) -> Value {
    serde_json::to_value(r).expect("plain data")
}

fn sing_summary(f: &crate::foliation::FoliationPresentation) -> Result<Value, HarnessError> {
    let gb = singular_ideal(f)?.groebner(MonomialOrder::Grevlex);
    Ok(json!({ "generators": polys(gb.basis()), "dim": gb.krull_dimension(), "n": f.ambient_dim(), "k": f.dimension() }))
}

fn poincare_hopf() -> Result<Value, HarnessError> {
    let mut out = Vec::new();
    for m in 2..=4 {
        let r = baum_bott_residue(&VectorField::radial(m), &vec![rat(0); m], &PhiSpec::top(m))?;
        out.push(json!({ "field": format!("radial-{}", m), "residue": residue_json(&r) }));
    }
    for (a, b) in [(1u32, 1u32), (2, 3), (3, 2), (4, 5)] {
        let v = VectorField::new(vec![Polynomial::var(2, 0).pow(a), Polynomial::var(2, 1).pow(b)]).expect("two components");
        let r = baum_bott_residue(&v, &[rat(0), rat(0)], &PhiSpec::top(2))?;
        out.push(json!({ "field": format!("z1^{},z2^{}", a, b), "residue": residue_json(&r) }));
    }
    Ok(Value::from(out))
}

/// Phi polynomials compared against the nondegenerate oracle in dimension `m`.
pub fn oracle_phis(m: usize) -> Vec<PhiSpec> {
    let mut c1m = vec![0; m];
    c1m[0] = m as u32;
    let mut mixed = vec![0; m];
    mixed[0] += (m - 2) as u32;
    mixed[1] += 1;
    vec![PhiSpec::top(m), PhiSpec::monomial(&c1m).expect("weight m"), PhiSpec::monomial(&mixed).expect("weight m")]
}

fn oracle_agreement() -> Result<Value, HarnessError> {
    let mut cases = 0usize;
    let mut failures = Vec::new();
    for m in [2usize, 3] {
        for (i, a) in seeded_linear_parts(m, 50, m as u64).iter().enumerate() {
            let v = linear_field(a);
            for phi in oracle_phis(m) {
                cases += 1;
                let got = baum_bott_residue(&v, &vec![rat(0); m], &phi)?.value;
                let want = nondegenerate_oracle(&v, &phi)?;
                if got != want {
                    failures.push(json!({ "m": m, "case": i, "phi": phi.to_string(), "got": got.to_string(), "want": want.to_string() }));
                }
            }
        }
    }
    Ok(json!({ "cases": cases, "failures": failures }))
}

fn degenerate_residues() -> Result<Value, HarnessError> {
    let f = [parse_polynomial("z1^2 - z2", 2).expect("literal"), parse_polynomial("z2^2", 2).expect("literal")];
    let mut out = Vec::new();
    for h in ["1", "z1*z2"] {
        let value = grothendieck_residue(&parse_polynomial(h, 2).expect("literal"), &f)?;
        out.push(json!({ "h": h, "f": polys(&f), "value": value.to_string() }));
    }
    Ok(Value::from(out))
}

fn slice_invariance() -> Result<Value, HarnessError> {
    let opts = SliceOptions::default();
    let mut out = Vec::new();
    for fx in slice_corpus() {
        let m = fx.foliation.ambient_dim() + 1 - fx.foliation.dimension();
        let mut c1m = vec![0; m];
        c1m[0] = m as u32;
        for phi in [PhiSpec::top(m), PhiSpec::monomial(&c1m).expect("weight m")] {
            let inv = slice_invariance_test(&fx.foliation, &fx.point, &phi, (7, 11), &opts)?;
            out.push(json!({
                "fixture": fx.id,
                "phi": phi.to_string(),
                "agree": inv.agree,
                "values": [inv.first.residue.value.to_string(), inv.second.residue.value.to_string()],
                "multiplicity": inv.first.residue.multiplicity,
                "seeds_used": [inv.first.slice.seed, inv.second.slice.seed],
            }));
        }
    }
    Ok(Value::from(out))
}

fn topology_summary() -> Result<Value, HarnessError> {
    let mut out = serde_json::Map::new();
    for (name, k) in [("sphere", topology::tetrahedron_boundary()), ("torus", topology::seven_vertex_torus())] {
        let tower = SubdivisionTower::new(k);
        let failures = topology::boundary_formula_check(&tower, 100, 5)?;
        out.insert(
            name.to_string(),
            json!({
                "homology": topology::homology_report(tower.k0())?,
                "dual_betti": topology::dual_betti_numbers(&tower)?,
                "self_intersections_ok": topology::dual_self_intersections_hold(&tower)?,
                "boundary_formula": { "pairs": 100, "failures": failures },
            }),
        );
    }
    let tower = SubdivisionTower::new(topology::grid_torus(3, 3));
    let (a, b) = topology::grid_torus_cycles(3, 3);
    out.insert(
        "grid_torus".to_string(),
        json!({
            "homology": topology::homology_report(tower.k0())?,
            "h1_pairing": topology::pairing_matrix(&tower, &[a, b])?,
        }),
    );
    Ok(Value::Object(out))
}

/// Runs the shipped corpus end to end. Deterministic: every draw is seeded.
pub fn verify_report() -> Result<Value, HarnessError> {
    let soares_f = soares(3, 3, 3);
    let mut example = sing_summary(&soares_f)?;
    example["s"] = json!(3);
    example["dim_equals_k_minus_s_plus_1"] = json!(example["dim"] == json!(5 - 3 + 1));
    let first_slice = certified_slice_residue(&radial_lift(3, 4), &[rat(0), rat(0), rat(0), rat(0)], &PhiSpec::top(3), &SliceOptions { seed: 7, ..Default::default() })?;
    Ok(json!({
        "soares_example": example,
        "pullback_example": sing_summary(&radial_lift(3, 4))?,
        "poincare_hopf": poincare_hopf()?,
        "oracle_agreement": oracle_agreement()?,
        "degenerate_residues": degenerate_residues()?,
        "slice_residue": slice_report_json("radial-3-in-4", &first_slice),
        "slice_invariance": slice_invariance()?,
        "dimension_theorem": theorem_report_json(&dimension_theorem_check(&dimension_corpus())?),
        "dimension_out_of_hypothesis": theorem_report_json(&dimension_theorem_check(&dimension_extra_corpus())?),
        "poisson_theorem": theorem_report_json(&poisson_theorem_check(&poisson_corpus())?),
        "non_poisson": theorem_report_json(&poisson_theorem_check(&[non_poisson_fixture()])?),
        "topology": topology_summary()?,
    }))
}
