//! Input documents. Indices are 1-based here and converted on resolution.

use serde::{Deserialize, Serialize};

use crate::algebra::{Monomial, NCPoly, PbwPresentation, RelationSpec};
use crate::autgroup::constructors::{quantum_diagonal, quantum_reflection, tau, theta};
use crate::autgroup::{GradedMap, DEFAULT_GROUP_CAP};
use crate::cyclotomic::{Cyc, ScalarSpec};
use crate::error::{Error, Result};
use crate::rational::lcm;
use crate::series::DEFAULT_MAX_DEGREE;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub schema_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub field: FieldSpec,
    pub ring: RingSpec,
    #[serde(default)]
    pub generators: Vec<GeneratorSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariants: Option<Vec<PolySpec>>,
    #[serde(default)]
    pub options: OptionsSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub root_of_unity_order: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RingSpec {
    /// `p_ij` for `i < j`; pairs not listed take `default` (1 when absent).
    Skew {
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        default: Option<ScalarSpec>,
        #[serde(default)]
        params: Vec<ParamSpec>,
    },
    QuantumMatrix {
        q: ScalarSpec,
    },
    General {
        n: usize,
        relations: Vec<RelationDoc>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamSpec {
    pub i: usize,
    pub j: usize,
    pub value: ScalarSpec,
}

/// `x_j x_i = coeff · x_i x_j + tail`, `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationDoc {
    pub i: usize,
    pub j: usize,
    pub coeff: ScalarSpec,
    #[serde(default)]
    pub tail: PolySpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub exponents: Vec<u16>,
    pub coeff: ScalarSpec,
}

pub type PolySpec = Vec<TermSpec>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum GeneratorSpec {
    /// Row-major; column `j` is the image of `x_j`.
    Matrix { rows: Vec<Vec<ScalarSpec>> },
    Tau { s: usize, t: usize, lambda: ScalarSpec },
    Theta { s: usize, lambda: ScalarSpec },
    Diag { entries: Vec<ScalarSpec> },
    /// `g_b` on `O_q(M_2)`.
    Gb { b: ScalarSpec },
    /// `d_c` on `O_q(M_2)`.
    Dc { c: ScalarSpec },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_group_order: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub commands: Vec<String>,
}

fn input_err(path: impl Into<String>, e: impl std::fmt::Display) -> Error {
    Error::Input {
        path: path.into(),
        message: e.to_string(),
    }
}

/// Parses a JSON document; schema errors carry the failing field path.
pub fn parse_spec(text: &str) -> Result<ProblemSpec> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let spec: ProblemSpec = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        input_err(if path.is_empty() { ".".into() } else { path }, e.into_inner())
    })?;
    if spec.schema_version != SCHEMA_VERSION {
        return Err(input_err(
            "schema_version",
            format!("unsupported schema version {}, expected {SCHEMA_VERSION}", spec.schema_version),
        ));
    }
    if spec.field.root_of_unity_order == 0 {
        return Err(input_err("field.root_of_unity_order", "must be positive"));
    }
    Ok(spec)
}

/// A validated problem: algebra and generators over the global field.
#[derive(Debug)]
pub struct Problem {
    pub spec: ProblemSpec,
    /// Global field order `lcm(2L, 4)`.
    pub order: u32,
    pub algebra: PbwPresentation,
    pub generators: Vec<GradedMap>,
    pub invariants: Option<Vec<NCPoly>>,
    pub max_degree: usize,
    pub max_order: usize,
}

fn scalars(spec: &ProblemSpec) -> Vec<&ScalarSpec> {
    let mut out = Vec::new();
    match &spec.ring {
        RingSpec::Skew { default, params, .. } => {
            out.extend(default.iter());
            out.extend(params.iter().map(|p| &p.value));
        }
        RingSpec::QuantumMatrix { q } => out.push(q),
        RingSpec::General { relations, .. } => {
            for r in relations {
                out.push(&r.coeff);
                out.extend(r.tail.iter().map(|t| &t.coeff));
            }
        }
    }
    for g in &spec.generators {
        match g {
            GeneratorSpec::Matrix { rows } => out.extend(rows.iter().flatten()),
            GeneratorSpec::Tau { lambda, .. } | GeneratorSpec::Theta { lambda, .. } => out.push(lambda),
            GeneratorSpec::Diag { entries } => out.extend(entries.iter()),
            GeneratorSpec::Gb { b } => out.push(b),
            GeneratorSpec::Dc { c } => out.push(c),
        }
    }
    for p in spec.invariants.iter().flatten() {
        out.extend(p.iter().map(|t| &t.coeff));
    }
    out
}

/// `lcm(2L, 4)` where `L` is the lcm of the declared and used orders.
pub fn global_order(spec: &ProblemSpec) -> u32 {
    let m = spec.field.root_of_unity_order;
    let l = scalars(spec)
        .iter()
        .fold(m as u64, |acc, s| lcm(acc, s.required_order(m) as u64));
    lcm(2 * l, 4) as u32
}

fn index(path: &str, k: usize, n: usize) -> Result<usize> {
    if k == 0 || k > n {
        return Err(input_err(path, format!("index {k} out of range 1..={n}")));
    }
    Ok(k - 1)
}

fn poly(path: &str, terms: &PolySpec, n: usize, m: u32, order: u32) -> Result<NCPoly> {
    let mut out = NCPoly::zero(n, order);
    for (k, t) in terms.iter().enumerate() {
        if t.exponents.len() != n {
            return Err(input_err(
                format!("{path}[{k}].exponents"),
                format!("expected {n} exponents, got {}", t.exponents.len()),
            ));
        }
        let c = t.coeff.resolve(m, order).map_err(|e| input_err(format!("{path}[{k}].coeff"), e))?;
        out.add_term(Monomial::from_exponents(t.exponents.clone()), &c);
    }
    Ok(out)
}

fn algebra(spec: &ProblemSpec, order: u32) -> Result<PbwPresentation> {
    let m = spec.field.root_of_unity_order;
    let res = |path: String, s: &ScalarSpec| -> Result<Cyc> {
        let c = s.resolve(m, order).map_err(|e| input_err(&path, e))?;
        if c.is_zero() {
            return Err(input_err(&path, "parameter must be nonzero"));
        }
        Ok(c)
    };
    match &spec.ring {
        RingSpec::Skew { n, default, params } => {
            if *n == 0 {
                return Err(input_err("ring.n", "must be positive"));
            }
            let base = match default {
                Some(d) => res("ring.default".into(), d)?,
                None => Cyc::one(order),
            };
            let mut p = vec![vec![base; *n]; *n];
            for (k, ps) in params.iter().enumerate() {
                let path = format!("ring.params[{k}]");
                let i = index(&format!("{path}.i"), ps.i, *n)?;
                let j = index(&format!("{path}.j"), ps.j, *n)?;
                if i >= j {
                    return Err(input_err(path, "parameters are given for i < j"));
                }
                p[i][j] = res(format!("{path}.value"), &ps.value)?;
            }
            PbwPresentation::skew(*n, order, |i, j| p[i][j].clone()).map_err(|e| input_err("ring", e))
        }
        RingSpec::QuantumMatrix { q } => {
            let q = res("ring.q".into(), q)?;
            PbwPresentation::quantum_matrix(q).map_err(|e| input_err("ring", e))
        }
        RingSpec::General { n, relations } => {
            let mut rels = Vec::new();
            for (k, r) in relations.iter().enumerate() {
                let path = format!("ring.relations[{k}]");
                rels.push(RelationSpec {
                    i: index(&format!("{path}.i"), r.i, *n)?,
                    j: index(&format!("{path}.j"), r.j, *n)?,
                    coeff: res(format!("{path}.coeff"), &r.coeff)?,
                    tail: poly(&format!("{path}.tail"), &r.tail, *n, m, order)?,
                });
            }
            PbwPresentation::general(*n, order, rels).map_err(|e| input_err("ring", e))
        }
    }
}

fn generator(a: &PbwPresentation, g: &GeneratorSpec, path: &str, m: u32) -> Result<GradedMap> {
    let order = a.order();
    let n = a.nvars();
    let res = |p: &str, s: &ScalarSpec| s.resolve(m, order).map_err(|e| input_err(format!("{path}.{p}"), e));
    let at = |e: Error| input_err(path, e);
    match g {
        GeneratorSpec::Matrix { rows } => {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(input_err(format!("{path}.rows"), format!("expected a {n}×{n} matrix")));
            }
            let mut mat = Vec::new();
            for (i, r) in rows.iter().enumerate() {
                let mut row = Vec::new();
                for (j, s) in r.iter().enumerate() {
                    row.push(res(&format!("rows[{i}][{j}]"), s)?);
                }
                mat.push(row);
            }
            GradedMap::new(mat).and_then(|g| g.validate(a)).map_err(at)
        }
        GeneratorSpec::Tau { s, t, lambda } => {
            let s = index(&format!("{path}.s"), *s, n)?;
            let t = index(&format!("{path}.t"), *t, n)?;
            tau(a, s, t, &res("lambda", lambda)?).map_err(at)
        }
        GeneratorSpec::Theta { s, lambda } => {
            let s = index(&format!("{path}.s"), *s, n)?;
            theta(a, s, &res("lambda", lambda)?).map_err(at)
        }
        GeneratorSpec::Diag { entries } => {
            if entries.len() != n {
                return Err(input_err(format!("{path}.entries"), format!("expected {n} entries")));
            }
            let d = entries
                .iter()
                .enumerate()
                .map(|(k, s)| res(&format!("entries[{k}]"), s))
                .collect::<Result<Vec<_>>>()?;
            GradedMap::diagonal(&d).and_then(|g| g.validate(a)).map_err(at)
        }
        GeneratorSpec::Gb { b } => quantum_reflection(a, &res("b", b)?).map_err(at),
        GeneratorSpec::Dc { c } => quantum_diagonal(a, &res("c", c)?).map_err(at),
    }
}

impl Problem {
    /// Resolves scalars into the global field and validates every generator.
    /// `max_degree` and `max_order` override the document's options.
    pub fn from_spec(spec: ProblemSpec, max_degree: Option<usize>, max_order: Option<usize>) -> Result<Problem> {
        let order = global_order(&spec);
        let m = spec.field.root_of_unity_order;
        let a = algebra(&spec, order)?;
        let generators = spec
            .generators
            .iter()
            .enumerate()
            .map(|(k, g)| generator(&a, g, &format!("generators[{k}]"), m))
            .collect::<Result<Vec<_>>>()?;
        let invariants = match &spec.invariants {
            None => None,
            Some(list) => Some(
                list.iter()
                    .enumerate()
                    .map(|(k, p)| poly(&format!("invariants[{k}]"), p, a.nvars(), m, order))
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        let max_degree = max_degree.or(spec.options.max_degree).unwrap_or(DEFAULT_MAX_DEGREE);
        let max_order = max_order.or(spec.options.max_group_order).unwrap_or(DEFAULT_GROUP_CAP);
        Ok(Problem {
            spec,
            order,
            algebra: a,
            generators,
            invariants,
            max_degree,
            max_order,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TAU: &str = r#"{
        "schema_version": 1,
        "field": {"root_of_unity_order": 2},
        "ring": {"kind": "skew", "n": 3, "default": "-1"},
        "generators": [{"type": "tau", "s": 1, "t": 2, "lambda": 1}]
    }"#;

    #[test]
    fn parses_and_round_trips() {
        let spec = parse_spec(TAU).unwrap();
        let again = parse_spec(&serde_json::to_string(&spec).unwrap()).unwrap();
        assert_eq!(spec, again);
        let p = Problem::from_spec(spec, None, None).unwrap();
        assert_eq!(p.order, 4);
        assert_eq!(p.generators.len(), 1);
        assert_eq!(p.max_degree, 12);
    }

    #[test]
    fn error_paths() {
        let bad = TAU.replace("\"lambda\": 1", "\"lambda\": 1, \"extra\": 0");
        let e = parse_spec(&bad).unwrap_err();
        assert!(matches!(e, Error::Input { .. }), "{e}");
        let zero = TAU.replace("\"default\": \"-1\"", "\"default\": 0");
        let e = Problem::from_spec(parse_spec(&zero).unwrap(), None, None).unwrap_err();
        assert!(e.to_string().contains("parameter must be nonzero"), "{e}");
        let wrong = TAU.replace("\"s\": 1", "\"s\": 4");
        let e = Problem::from_spec(parse_spec(&wrong).unwrap(), None, None).unwrap_err();
        assert!(e.to_string().contains("generators[0].s"), "{e}");
    }
}
