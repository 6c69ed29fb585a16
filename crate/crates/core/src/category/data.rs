//! The JSON category file format.

use std::path::Path;

use serde_json::{json, Map, Value};

use super::fusion::FusionData;
use super::hopf::{HopfAlgebra, Module};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar};

/// A morphism declared by name, with tensor words of object names as
/// domain and codomain. An empty word is the unit.
#[derive(Clone, Debug, PartialEq)]
pub struct MorphismDecl {
    pub name: String,
    pub domain: Vec<String>,
    pub codomain: Vec<String>,
    pub matrix: Matrix,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HopfData {
    pub algebra: HopfAlgebra,
    pub modules: Vec<Module>,
    pub morphisms: Vec<MorphismDecl>,
}

/// A parsed (not yet validated) category file.
#[derive(Clone, Debug, PartialEq)]
pub enum CategoryData {
    Fusion(FusionData),
    Hopf(HopfData),
}

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

fn key<'a>(obj: &'a Map<String, Value>, k: &str) -> Result<&'a Value> {
    obj.get(k).ok_or_else(|| schema(format!("missing key `{k}`")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| schema(format!("`{what}` must be an array")))
}

fn usize_of(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| schema(format!("`{what}` must be a nonnegative integer")))
}

fn string_list(v: &Value, what: &str) -> Result<Vec<String>> {
    array(v, what)?
        .iter()
        .map(|s| {
            s.as_str()
                .map(str::to_string)
                .ok_or_else(|| schema(format!("`{what}` entries must be strings")))
        })
        .collect()
}

fn scalars(field: Field, v: &Value, len: usize, what: &str) -> Result<Vec<Scalar>> {
    let items = array(v, what)?;
    if items.len() != len {
        return Err(schema(format!("`{what}` must have {len} entries, found {}", items.len())));
    }
    items.iter().map(|x| Scalar::from_json(field, x)).collect()
}

fn square(field: Field, v: &Value, n: usize, what: &str) -> Result<Matrix> {
    let m = Matrix::from_json(field, v).map_err(|e| schema(format!("`{what}`: {e}")))?;
    if n == 0 {
        return Ok(Matrix::zeros(field, 0, 0));
    }
    if m.rows() != n || m.cols() != n {
        return Err(schema(format!("`{what}` must be {n}×{n}")));
    }
    Ok(m)
}

fn cube(field: Field, v: &Value, d: usize, what: &str) -> Result<Vec<Vec<Vec<Scalar>>>> {
    let outer = array(v, what)?;
    if outer.len() != d {
        return Err(schema(format!("`{what}` must have {d} entries")));
    }
    outer
        .iter()
        .map(|plane| {
            let rows = array(plane, what)?;
            if rows.len() != d {
                return Err(schema(format!("`{what}` must be {d}×{d}×{d}")));
            }
            rows.iter().map(|row| scalars(field, row, d, what)).collect()
        })
        .collect()
}

/// An index given either as a number or as a simple's name.
fn index_of(v: &Value, names: &[String], what: &str) -> Result<usize> {
    if let Some(s) = v.as_str() {
        return names
            .iter()
            .position(|n| n == s)
            .ok_or_else(|| schema(format!("`{what}` names unknown simple `{s}`")));
    }
    let i = usize_of(v, what)?;
    if i >= names.len() {
        return Err(schema(format!("`{what}` index {i} out of range")));
    }
    Ok(i)
}

impl CategoryData {
    pub fn field(&self) -> Field {
        match self {
            CategoryData::Fusion(f) => f.field,
            CategoryData::Hopf(h) => h.algebra.field,
        }
    }

    pub fn from_json_str(text: &str) -> Result<CategoryData> {
        let value: Value = serde_json::from_str(text).map_err(|e| schema(format!("invalid JSON: {e}")))?;
        CategoryData::from_json(&value)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<CategoryData> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        CategoryData::from_json_str(&text)
    }

    pub fn from_json(value: &Value) -> Result<CategoryData> {
        let obj = value.as_object().ok_or_else(|| schema("top level must be an object"))?;
        let field: Field = match obj.get("field") {
            Some(f) => serde_json::from_value(f.clone()).map_err(|e| schema(format!("`field`: {e}")))?,
            None => Field::Rational,
        };
        if let Field::Cyclotomic { order: 0 } = field {
            return Err(schema("cyclotomic order must be positive"));
        }
        match key(obj, "kind")?.as_str() {
            Some("fusion") => Ok(CategoryData::Fusion(parse_fusion(obj, field)?)),
            Some("hopf") => Ok(CategoryData::Hopf(parse_hopf(obj, field)?)),
            _ => Err(schema("`kind` must be \"fusion\" or \"hopf\"")),
        }
    }

    pub fn to_json(&self) -> Value {
        let field = serde_json::to_value(self.field()).expect("field serializes");
        match self {
            CategoryData::Fusion(f) => json!({
                "kind": "fusion",
                "field": field,
                "simples": f.simples,
                "unit": f.unit,
                "dual": f.dual,
                "fusion": f.fusion,
                "twists": f.twists.iter().map(Scalar::to_json).collect::<Vec<_>>(),
            }),
            CategoryData::Hopf(h) => {
                let a = &h.algebra;
                let vec_json = |v: &[Scalar]| Value::Array(v.iter().map(Scalar::to_json).collect());
                let cube_json = |c: &Vec<Vec<Vec<Scalar>>>| {
                    Value::Array(c.iter().map(|p| Value::Array(p.iter().map(|r| vec_json(r)).collect())).collect())
                };
                let modules: Vec<Value> = h
                    .modules
                    .iter()
                    .map(|m| {
                        let mut flags = Vec::new();
                        if m.simple {
                            flags.push("simple");
                        }
                        if m.projective {
                            flags.push("projective");
                        }
                        json!({
                            "name": m.name.clone().unwrap_or_default(),
                            "dim": m.dim,
                            "action": m.action.iter().map(Matrix::to_json).collect::<Vec<_>>(),
                            "flags": flags,
                        })
                    })
                    .collect();
                let mut out = json!({
                    "kind": "hopf",
                    "field": field,
                    "dim": a.dim(),
                    "basis": a.basis,
                    "unit_vec": vec_json(&a.unit),
                    "mult": cube_json(&a.mult),
                    "comult": cube_json(&a.comult),
                    "counit": vec_json(&a.counit),
                    "antipode": a.antipode.to_json(),
                    "r_matrix": a.r_matrix.to_json(),
                    "ribbon": vec_json(&a.ribbon),
                    "modules": modules,
                });
                if !h.morphisms.is_empty() {
                    out["morphisms"] = morphisms_to_json(&h.morphisms);
                }
                out
            }
        }
    }
}

fn parse_fusion(obj: &Map<String, Value>, field: Field) -> Result<FusionData> {
    let simples = string_list(key(obj, "simples")?, "simples")?;
    let n = simples.len();
    if n == 0 {
        return Err(schema("`simples` must be nonempty"));
    }
    let unit = index_of(key(obj, "unit")?, &simples, "unit")?;
    let dual = array(key(obj, "dual")?, "dual")?
        .iter()
        .map(|v| index_of(v, &simples, "dual"))
        .collect::<Result<Vec<_>>>()?;
    if dual.len() != n {
        return Err(schema("`dual` must have one entry per simple"));
    }
    let fusion = array(key(obj, "fusion")?, "fusion")?
        .iter()
        .map(|plane| {
            array(plane, "fusion")?
                .iter()
                .map(|row| {
                    array(row, "fusion")?
                        .iter()
                        .map(|x| x.as_u64().ok_or_else(|| schema("fusion multiplicities must be counts")))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    if fusion.len() != n || fusion.iter().any(|p| p.len() != n || p.iter().any(|r| r.len() != n)) {
        return Err(schema(format!("`fusion` must be {n}×{n}×{n}")));
    }
    let twists = scalars(field, key(obj, "twists")?, n, "twists")?;
    Ok(FusionData {
        field,
        simples,
        unit,
        dual,
        fusion,
        twists,
    })
}

fn parse_hopf(obj: &Map<String, Value>, field: Field) -> Result<HopfData> {
    let d = usize_of(key(obj, "dim")?, "dim")?;
    if d == 0 {
        return Err(schema("`dim` must be positive"));
    }
    let basis = match obj.get("basis") {
        Some(b) => string_list(b, "basis")?,
        None => (0..d).map(|i| format!("b{i}")).collect(),
    };
    if basis.len() != d {
        return Err(schema("`basis` must have `dim` names"));
    }
    let algebra = HopfAlgebra {
        field,
        basis,
        unit: scalars(field, key(obj, "unit_vec")?, d, "unit_vec")?,
        mult: cube(field, key(obj, "mult")?, d, "mult")?,
        comult: cube(field, key(obj, "comult")?, d, "comult")?,
        counit: scalars(field, key(obj, "counit")?, d, "counit")?,
        antipode: square(field, key(obj, "antipode")?, d, "antipode")?,
        r_matrix: square(field, key(obj, "r_matrix")?, d, "r_matrix")?,
        ribbon: scalars(field, key(obj, "ribbon")?, d, "ribbon")?,
    };
    let mut modules = Vec::new();
    for m in array(key(obj, "modules")?, "modules")? {
        let mo = m.as_object().ok_or_else(|| schema("module entries must be objects"))?;
        let name = key(mo, "name")?
            .as_str()
            .ok_or_else(|| schema("module `name` must be a string"))?
            .to_string();
        let dim = usize_of(key(mo, "dim")?, "module dim")?;
        let what = format!("modules.{name}.action");
        let action = array(key(mo, "action")?, &what)?
            .iter()
            .map(|a| square(field, a, dim, &what))
            .collect::<Result<Vec<_>>>()?;
        if action.len() != d {
            return Err(schema(format!("`{what}` needs one matrix per basis element")));
        }
        let flags = match mo.get("flags") {
            Some(f) => string_list(f, "flags")?,
            None => Vec::new(),
        };
        if let Some(bad) = flags.iter().find(|f| *f != "simple" && *f != "projective") {
            return Err(schema(format!("unknown module flag `{bad}`")));
        }
        if modules.iter().any(|m: &Module| m.name.as_deref() == Some(name.as_str())) {
            return Err(schema(format!("duplicate module name `{name}`")));
        }
        modules.push(Module {
            name: Some(name),
            dim,
            action,
            simple: flags.iter().any(|f| f == "simple"),
            projective: flags.iter().any(|f| f == "projective"),
        });
    }
    let morphisms = match obj.get("morphisms") {
        Some(v) => parse_morphisms(v, field)?,
        None => Vec::new(),
    };
    Ok(HopfData {
        algebra,
        modules,
        morphisms,
    })
}

/// Parses a morphism map `name -> {domain, codomain, matrix}`.
pub fn parse_morphisms(v: &Value, field: Field) -> Result<Vec<MorphismDecl>> {
    let map = v.as_object().ok_or_else(|| schema("morphisms must be an object"))?;
    let mut out = Vec::new();
    for (name, m) in map {
        let mo = m
            .as_object()
            .ok_or_else(|| schema(format!("morphism `{name}` must be an object")))?;
        let word = |k: &str| -> Result<Vec<String>> {
            match key(mo, k)? {
                Value::String(s) => Ok(s.split_whitespace().map(str::to_string).collect()),
                other => string_list(other, k),
            }
        };
        out.push(MorphismDecl {
            name: name.clone(),
            domain: word("domain")?,
            codomain: word("codomain")?,
            matrix: Matrix::from_json(field, key(mo, "matrix")?)?,
        });
    }
    Ok(out)
}

pub fn morphisms_to_json(decls: &[MorphismDecl]) -> Value {
    let mut map = Map::new();
    for d in decls {
        map.insert(
            d.name.clone(),
            json!({"domain": d.domain, "codomain": d.codomain, "matrix": d.matrix.to_json()}),
        );
    }
    Value::Object(map)
}
