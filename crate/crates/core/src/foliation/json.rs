use serde::{Deserialize, Serialize};

use super::{FoliationError, FoliationPresentation, Presentation};
use crate::poly::{parse_polynomial, ExteriorKind, Graded, VectorField};

/// One coefficient of a form or bivector; `indices` are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormEntryJson {
    pub indices: Vec<usize>,
    pub coef: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DataEntryJson {
    /// A vector field as its `n` component strings.
    Field(Vec<String>),
    Entry(FormEntryJson),
}

/// Wire format of a [`FoliationPresentation`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationJson {
    pub n: usize,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub data: Vec<DataEntryJson>,
}

fn invalid(msg: impl Into<String>) -> FoliationError {
    FoliationError::InvalidPresentation(msg.into())
}

fn graded_from_entries<K: ExteriorKind>(n: usize, degree: usize, data: &[DataEntryJson]) -> Result<Graded<K>, FoliationError> {
    let mut out = Graded::<K>::zero(n, degree);
    for d in data {
        let DataEntryJson::Entry(e) = d else {
            return Err(invalid("expected {indices, coef} entries"));
        };
        if e.indices.len() != degree {
            return Err(invalid(format!("entry with {} indices, expected {}", e.indices.len(), degree)));
        }
        if e.indices.iter().any(|&i| i == 0 || i > n) {
            return Err(invalid(format!("indices {:?} out of range 1..={}", e.indices, n)));
        }
        let idx: Vec<usize> = e.indices.iter().map(|i| i - 1).collect();
        out.add_component(&idx, parse_polynomial(&e.coef, n)?)?;
    }
    Ok(out)
}

fn entries<K: ExteriorKind>(g: &Graded<K>) -> Vec<DataEntryJson> {
    g.components()
        .map(|(idx, c)| DataEntryJson::Entry(FormEntryJson { indices: idx.iter().map(|i| i + 1).collect(), coef: c.to_string() }))
        .collect()
}

impl PresentationJson {
    pub fn to_presentation(&self) -> Result<FoliationPresentation, FoliationError> {
        let n = self.n;
        if n == 0 {
            return Err(invalid("ambient dimension must be positive"));
        }
        match self.kind.as_str() {
            "vector_fields" => {
                let mut fields = Vec::with_capacity(self.data.len());
                for d in &self.data {
                    let DataEntryJson::Field(comps) = d else {
                        return Err(invalid("expected a list of component strings per field"));
                    };
                    if comps.len() != n {
                        return Err(invalid(format!("field with {} components on C^{}", comps.len(), n)));
                    }
                    let comps = comps.iter().map(|s| parse_polynomial(s, n)).collect::<Result<Vec<_>, _>>()?;
                    fields.push(VectorField::new(comps)?);
                }
                if let Some(k) = self.k {
                    if k != fields.len() {
                        return Err(invalid(format!("declared k = {} but {} fields given", k, fields.len())));
                    }
                }
                FoliationPresentation::from_vector_fields(n, fields)
            }
            "form" => {
                let k = self.k.ok_or_else(|| invalid("form presentation needs k"))?;
                if k == 0 || k > n {
                    return Err(invalid(format!("k = {} on C^{}", k, n)));
                }
                FoliationPresentation::from_form(graded_from_entries(n, n - k, &self.data)?)
            }
            "poisson" => {
                if self.k.is_some() {
                    return Err(invalid("k is derived for poisson presentations"));
                }
                FoliationPresentation::from_poisson(graded_from_entries(n, 2, &self.data)?)
            }
            other => Err(invalid(format!("unknown kind {:?}", other))),
        }
    }

    pub fn from_presentation(f: &FoliationPresentation) -> Self {
        let n = f.ambient_dim();
        match f.presentation() {
            Presentation::VectorFields(v) => PresentationJson {
                n,
                kind: "vector_fields".into(),
                k: Some(v.len()),
                data: v.iter().map(|x| DataEntryJson::Field(x.components().iter().map(|c| c.to_string()).collect())).collect(),
            },
            Presentation::Form(w) => PresentationJson { n, kind: "form".into(), k: Some(f.dimension()), data: entries(w) },
            Presentation::Poisson(s) => PresentationJson { n, kind: "poisson".into(), k: None, data: entries(s) },
        }
    }
}
