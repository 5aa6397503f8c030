//! Problem files: the JSON input format shared by every subcommand.
//!
//! ```json
//! {
//!   "dimension": 3,
//!   "variables": ["x", "y", "z"],
//!   "poisson": {"bivector": [[1, 2, "z"], [2, 3, "x"], [1, 3, "-y"]]},
//!   "gauge": {"b": [[1, 2, "1"]]},
//!   "elements": [{"matrix": [["1", "0", "0"], ...], "translation": ["0", "0", "0"], "b": []}]
//! }
//! ```
//!
//! Indices are 1-based with `i < j`. `poisson` may instead be
//! `{"lie_algebra": "so3"}` or `{"lie_algebra": {"dim": 3, "brackets": [[1, 2, [[3, "1"]]], ...]}}`.

use std::collections::BTreeSet;

use serde::Deserialize;
use serde_json::{json, Value};

use poisson_pic::gauge::AffineMap;
use poisson_pic::liealg::{builtin, linear_poisson, StructureConstants};
use poisson_pic::polyalg::{
    format_rational, parse_poly, parse_rational, validate_var_names, AltTensor, Form, Multivector,
    PoissonStructure, Polynomial, Rational, TensorKind,
};

use crate::error::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    dimension: usize,
    #[serde(default)]
    variables: Option<Vec<String>>,
    poisson: RawPoisson,
    #[serde(default)]
    gauge: Option<RawGauge>,
    #[serde(default)]
    elements: Vec<RawElement>,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
enum RawPoisson {
    Bivector(Vec<(usize, usize, String)>),
    LieAlgebra(RawLie),
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawLie {
    Builtin(String),
    Constants {
        dim: usize,
        brackets: Vec<(usize, usize, Vec<(usize, String)>)>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGauge {
    b: Vec<(usize, usize, String)>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawElement {
    matrix: Vec<Vec<String>>,
    #[serde(default)]
    translation: Option<Vec<String>>,
    #[serde(default)]
    b: Vec<(usize, usize, String)>,
}

#[derive(Debug, Clone)]
pub enum PoissonSource {
    Bivector,
    Builtin(String),
    Constants(StructureConstants),
}

/// An affine map with a 2-form, before the closedness check.
#[derive(Debug, Clone)]
pub struct ElementSpec {
    pub phi: AffineMap,
    pub b: Form,
}

#[derive(Debug, Clone)]
pub struct Problem {
    pub variables: Vec<String>,
    pub source: PoissonSource,
    pub poisson: PoissonStructure,
    pub gauge: Option<Form>,
    pub elements: Vec<ElementSpec>,
}

fn field_err(field: impl Into<String>, source: poisson_pic::Error) -> CliError {
    CliError::Field {
        field: field.into(),
        source,
    }
}

fn parse_pairs<K: TensorKind>(
    entries: &[(usize, usize, String)],
    n: usize,
    vars: &[String],
    field: &str,
) -> Result<AltTensor<K>, CliError> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(entries.len());
    for (pos, (i, j, text)) in entries.iter().enumerate() {
        let here = format!("{field}[{pos}]");
        if !(1..=n).contains(i) || !(1..=n).contains(j) {
            return Err(CliError::Invalid(format!("{here}: indices must lie in 1..={n}")));
        }
        if i >= j {
            return Err(CliError::Invalid(format!("{here}: expected i < j, got ({i}, {j})")));
        }
        if !seen.insert((*i, *j)) {
            return Err(CliError::Invalid(format!("{here}: ({i}, {j}) given twice")));
        }
        let f = parse_poly(text, n, vars).map_err(|e| field_err(here, e))?;
        out.push((vec![i - 1, j - 1], f));
    }
    Ok(AltTensor::from_entries(n, 2, out))
}

fn parse_constants(
    dim: usize,
    brackets: &[(usize, usize, Vec<(usize, String)>)],
) -> Result<StructureConstants, CliError> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(brackets.len());
    for (pos, (i, j, terms)) in brackets.iter().enumerate() {
        let here = format!("poisson.lie_algebra.brackets[{pos}]");
        if !(1..=dim).contains(i) || !(1..=dim).contains(j) || i >= j {
            return Err(CliError::Invalid(format!("{here}: expected 1 <= i < j <= {dim}")));
        }
        if !seen.insert((*i, *j)) {
            return Err(CliError::Invalid(format!("{here}: ({i}, {j}) given twice")));
        }
        let mut parsed = Vec::with_capacity(terms.len());
        for (t, (k, q)) in terms.iter().enumerate() {
            if !(1..=dim).contains(k) {
                return Err(CliError::Invalid(format!("{here}[{t}]: index {k} outside 1..={dim}")));
            }
            let q = parse_rational(q).map_err(|e| field_err(format!("{here}[{t}]"), e))?;
            parsed.push((k - 1, q));
        }
        out.push((i - 1, j - 1, parsed));
    }
    StructureConstants::from_brackets(dim, out).map_err(|e| field_err("poisson.lie_algebra", e))
}

fn parse_rationals(items: &[String], field: &str) -> Result<Vec<Rational>, CliError> {
    items
        .iter()
        .enumerate()
        .map(|(i, s)| parse_rational(s).map_err(|e| field_err(format!("{field}[{i}]"), e)))
        .collect()
}

impl Problem {
    pub fn from_json(text: &str) -> Result<Problem, CliError> {
        let raw: RawProblem = serde_json::from_str(text).map_err(CliError::Json)?;
        let n = raw.dimension;
        if n == 0 {
            return Err(CliError::Invalid("dimension must be at least 1".into()));
        }
        let variables = match raw.variables {
            Some(v) => v,
            None => (1..=n).map(|i| format!("x{i}")).collect(),
        };
        if variables.len() != n {
            return Err(CliError::Invalid(format!(
                "{} variable names for dimension {n}",
                variables.len()
            )));
        }
        validate_var_names(&variables).map_err(|e| field_err("variables", e))?;

        let (source, poisson) = match raw.poisson {
            RawPoisson::Bivector(entries) => {
                let mv: Multivector = parse_pairs(&entries, n, &variables, "poisson.bivector")?;
                let pi = PoissonStructure::unchecked(mv).map_err(|e| field_err("poisson.bivector", e))?;
                (PoissonSource::Bivector, pi)
            }
            RawPoisson::LieAlgebra(RawLie::Builtin(name)) => {
                let c = builtin(&name).map_err(|e| field_err("poisson.lie_algebra", e))?;
                check_dim(n, c.dim(), "poisson.lie_algebra")?;
                (PoissonSource::Builtin(name.trim().to_string()), linear_poisson(&c))
            }
            RawPoisson::LieAlgebra(RawLie::Constants { dim, brackets }) => {
                check_dim(n, dim, "poisson.lie_algebra.dim")?;
                let c = parse_constants(dim, &brackets)?;
                let pi = linear_poisson(&c);
                (PoissonSource::Constants(c), pi)
            }
        };

        let gauge = raw
            .gauge
            .map(|g| parse_pairs(&g.b, n, &variables, "gauge.b"))
            .transpose()?;

        let mut elements = Vec::with_capacity(raw.elements.len());
        for (e, el) in raw.elements.iter().enumerate() {
            let here = format!("elements[{e}]");
            if el.matrix.len() != n || el.matrix.iter().any(|r| r.len() != n) {
                return Err(CliError::Invalid(format!("{here}.matrix: expected {n} rows of {n} entries")));
            }
            let matrix = el
                .matrix
                .iter()
                .enumerate()
                .map(|(r, row)| parse_rationals(row, &format!("{here}.matrix[{r}]")))
                .collect::<Result<Vec<_>, _>>()?;
            let translation = match &el.translation {
                Some(t) if t.len() != n => {
                    return Err(CliError::Invalid(format!("{here}.translation: expected {n} entries")));
                }
                Some(t) => parse_rationals(t, &format!("{here}.translation"))?,
                None => vec![Rational::from_integer(0.into()); n],
            };
            let phi = AffineMap::new(matrix, translation).map_err(|e| field_err(format!("{here}.matrix"), e))?;
            let b = parse_pairs(&el.b, n, &variables, &format!("{here}.b"))?;
            elements.push(ElementSpec { phi, b });
        }

        Ok(Problem {
            variables,
            source,
            poisson,
            gauge,
            elements,
        })
    }

    pub fn dim(&self) -> usize {
        self.variables.len()
    }

    /// Structure constants when the problem is a Lie–Poisson structure.
    pub fn constants(&self) -> Option<StructureConstants> {
        match &self.source {
            PoissonSource::Bivector => None,
            PoissonSource::Builtin(name) => builtin(name).ok(),
            PoissonSource::Constants(c) => Some(c.clone()),
        }
    }

    pub fn poly(&self, f: &Polynomial) -> String {
        f.to_string_with(&self.variables)
    }

    /// `[[i, j, ..., "coeff"], ...]` with 1-based indices.
    pub fn tensor<K: TensorKind>(&self, t: &AltTensor<K>) -> Value {
        Value::Array(
            t.components()
                .map(|(idx, f)| {
                    let mut row: Vec<Value> = idx.iter().map(|i| json!(i + 1)).collect();
                    row.push(json!(self.poly(f)));
                    Value::Array(row)
                })
                .collect(),
        )
    }

    pub fn element(&self, phi: &AffineMap, b: &Form) -> Value {
        let rats = |v: &[Rational]| Value::Array(v.iter().map(|q| json!(format_rational(q))).collect());
        json!({
            "matrix": phi.matrix().iter().map(|r| rats(r)).collect::<Vec<_>>(),
            "translation": rats(phi.translation()),
            "b": self.tensor(b),
        })
    }

    /// Canonical JSON value: sorted keys, canonical polynomials and
    /// rationals, zero entries dropped.
    pub fn to_value(&self) -> Value {
        let poisson = match &self.source {
            PoissonSource::Bivector => json!({ "bivector": self.tensor(self.poisson.bivector()) }),
            PoissonSource::Builtin(name) => json!({ "lie_algebra": name }),
            PoissonSource::Constants(c) => {
                let brackets: Vec<Value> = c
                    .brackets()
                    .into_iter()
                    .map(|(i, j, terms)| {
                        let terms: Vec<Value> = terms
                            .iter()
                            .map(|(k, q)| json!([k + 1, format_rational(q)]))
                            .collect();
                        json!([i + 1, j + 1, terms])
                    })
                    .collect();
                json!({ "lie_algebra": { "dim": c.dim(), "brackets": brackets } })
            }
        };
        let mut out = json!({
            "dimension": self.dim(),
            "variables": self.variables,
            "poisson": poisson,
        });
        if let Some(b) = &self.gauge {
            out["gauge"] = json!({ "b": self.tensor(b) });
        }
        if !self.elements.is_empty() {
            out["elements"] = Value::Array(self.elements.iter().map(|e| self.element(&e.phi, &e.b)).collect());
        }
        out
    }

    pub fn to_canonical_json(&self) -> String {
        crate::report::render_json(&self.to_value())
    }
}

fn check_dim(n: usize, found: usize, field: &str) -> Result<(), CliError> {
    if n == found {
        Ok(())
    } else {
        Err(CliError::Invalid(format!("{field}: dimension {found} does not match {n}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SO3: &str = r#"{"dimension": 3, "variables": ["x","y","z"],
        "poisson": {"bivector": [[1,2,"z"],[2,3,"x"],[1,3,"-y"]]}}"#;

    #[test]
    fn bivector_round_trip() {
        let p = Problem::from_json(SO3).unwrap();
        let text = p.to_canonical_json();
        assert_eq!(Problem::from_json(&text).unwrap().to_canonical_json(), text);
        assert!(p.poisson.check());
    }

    #[test]
    fn builtin_matches_bivector() {
        let b = Problem::from_json(r#"{"dimension": 3, "poisson": {"lie_algebra": "so3"}}"#).unwrap();
        let p = Problem::from_json(SO3).unwrap();
        assert_eq!(b.poisson.bivector(), p.poisson.bivector());
        assert_eq!(b.variables, ["x1", "x2", "x3"]);
    }

    #[test]
    fn explicit_constants() {
        let text = r#"{"dimension": 3, "poisson": {"lie_algebra":
            {"dim": 3, "brackets": [[1, 2, [[3, "1"]]]]}}}"#;
        let p = Problem::from_json(text).unwrap();
        let h = builtin("heisenberg3").unwrap();
        assert_eq!(p.constants().unwrap(), h);
        let again = Problem::from_json(&p.to_canonical_json()).unwrap();
        assert_eq!(again.constants().unwrap(), h);
    }

    #[test]
    fn bad_inputs_are_located() {
        let cases = [
            (r#"{"dimension": 2, "poisson": {"bivector": [[2,1,"1"]]}}"#, "i < j"),
            (r#"{"dimension": 2, "poisson": {"bivector": [[1,3,"1"]]}}"#, "1..=2"),
            (r#"{"dimension": 2, "variables": ["x","y"], "poisson": {"bivector": [[1,2,"x*"]]}}"#, "poisson.bivector[0]"),
            (r#"{"dimension": 2, "variables": ["x","y"], "poisson": {"bivector": [[1,2,"w"]]}}"#, "unknown variable"),
            (r#"{"dimension": 3, "poisson": {"lie_algebra": "so5"}}"#, "so5"),
            (r#"{"dimension": 2, "poisson": {"lie_algebra": "so3"}}"#, "does not match"),
            (r#"{"dimension": 2, "poisson": {"bivector": []}, "extra": 1}"#, "unknown field"),
        ];
        for (text, needle) in cases {
            let msg = Problem::from_json(text).unwrap_err().to_string();
            assert!(msg.contains(needle), "{msg:?} lacks {needle:?}");
        }
    }

    #[test]
    fn elements_parse() {
        let text = r#"{"dimension": 2, "poisson": {"bivector": [[1,2,"1"]]},
            "elements": [{"matrix": [["2","0"],["0","1"]], "b": [[1,2,"-1"]]}]}"#;
        let p = Problem::from_json(text).unwrap();
        assert_eq!(p.elements.len(), 1);
        assert_eq!(p.elements[0].phi.determinant(), Rational::from_integer(2.into()));
        let singular = r#"{"dimension": 2, "poisson": {"bivector": []},
            "elements": [{"matrix": [["1","1"],["1","1"]]}]}"#;
        assert!(Problem::from_json(singular).is_err());
    }
}
