//! JSON scheme descriptions.

use kaehler_core::scheme::{ComponentInput, SchemeInput};
use kaehler_core::{parse_polynomial, Field, Polynomial, Ring};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum FieldSpec {
    Named(String),
    Prime {
        #[serde(rename = "Fp")]
        fp: u64,
    },
}

#[derive(Clone, Debug, Default, Deserialize, Serialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ComponentDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub primary: Option<Vec<String>>,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub field: FieldSpec,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<ComponentDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<String>>,
}

/// A validated document ready for `build_scheme`.
pub struct ParsedInput {
    pub doc: InputDocument,
    pub field: Field,
    pub scheme: SchemeInput,
}

pub fn parse_input(text: &str) -> Result<ParsedInput, CliError> {
    let doc: InputDocument = serde_json::from_str(text).map_err(|e| {
        CliError::new(
            "malformed_json",
            format!("line {}, column {}: {e}", e.line(), e.column()),
        )
    })?;
    let field = match &doc.field {
        FieldSpec::Named(name) if name == "Q" => Field::Rational,
        FieldSpec::Named(name) => {
            return Err(CliError::new("invalid_input", format!("unknown field {name:?}; use \"Q\" or {{\"Fp\": p}}")))
        }
        FieldSpec::Prime { fp } => Field::prime(*fp)?,
    };
    if doc.n < 1 {
        return Err(CliError::new("invalid_input", "n must be at least 1"));
    }
    let ring = Ring::projective(field, doc.n);
    let polys = |list: &[String], at: &str| -> Result<Vec<Polynomial>, CliError> {
        list.iter()
            .enumerate()
            .map(|(i, s)| parse_polynomial(ring, s).map_err(|e| CliError::from(e).context(&format!("{at}[{i}]"))))
            .collect()
    };
    let scheme = match (&doc.components, &doc.ideal) {
        (Some(comps), None) => {
            let mut list = Vec::with_capacity(comps.len());
            for (j, c) in comps.iter().enumerate() {
                let point = match &c.point {
                    Some(p) => Some(
                        p.iter()
                            .map(|s| field.parse_scalar(s))
                            .collect::<Result<Vec<_>, _>>()
                            .map_err(|e| CliError::from(e).context(&format!("components[{j}].point")))?,
                    ),
                    None => None,
                };
                let primary = match &c.primary {
                    Some(g) => Some(polys(g, &format!("components[{j}].primary"))?),
                    None => None,
                };
                if point.is_none() && primary.is_none() {
                    return Err(CliError::new("invalid_input", format!("components[{j}] has neither point nor primary")));
                }
                list.push(ComponentInput { point, primary });
            }
            SchemeInput::Components(list)
        }
        (None, Some(gens)) => SchemeInput::Ideal(polys(gens, "ideal")?),
        _ => {
            return Err(CliError::new(
                "invalid_input",
                "exactly one of \"components\" and \"ideal\" must be given",
            ))
        }
    };
    Ok(ParsedInput { doc, field, scheme })
}
