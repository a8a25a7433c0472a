//! JSON encodings of every instance type.
//!
//! Matrices are `{"rows": r, "cols": c, "entries": [[...], ...]}` with
//! integer entries (reduced mod `p`) or `"num/den"` strings over `Q`.
//! Fields are `{"prime": p}` or `{"rationals": true}`. Grid cell keys are
//! 1-based `"i,j"` strings. Parse errors name the offending field by its
//! path in the document.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::grid::{Grid, Orientation, StaircaseShape};
use crate::matrix::LinearMap;
use crate::quiverhom::{Quiver, RepMap, Representation, RightExact, ShortExact};
use crate::relation::Cross;
use crate::snake::SnakeInput;

/// Parses JSON text; syntax errors carry line and column.
pub fn parse_text(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| {
        Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
    })
}

fn err(path: &str, what: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{path}: {what}"))
}

fn get<'a>(v: &'a Value, key: &str, path: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| err(path, format!("missing field \"{key}\"")))
}

fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| err(path, "expected an object"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| err(path, "expected an array"))
}

fn as_usize(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| err(path, "expected a non-negative integer"))
}

fn usize_list(v: &Value, path: &str) -> Result<Vec<usize>> {
    as_array(v, path)?
        .iter()
        .enumerate()
        .map(|(k, x)| as_usize(x, &format!("{path}[{k}]")))
        .collect()
}

pub fn field_to_json(f: Field) -> Value {
    match f {
        Field::Prime(p) => json!({ "prime": p }),
        Field::Rationals => json!({ "rationals": true }),
    }
}

pub fn field_from_json(v: &Value, path: &str) -> Result<Field> {
    if let Some(p) = v.get("prime") {
        let p = p.as_u64().ok_or_else(|| err(&format!("{path}.prime"), "expected an integer"))?;
        return Field::prime(p).map_err(|e| err(&format!("{path}.prime"), e));
    }
    if v.get("rationals") == Some(&Value::Bool(true)) {
        return Ok(Field::Rationals);
    }
    Err(err(path, "expected {\"prime\": p} or {\"rationals\": true}"))
}

/// Parses a field given on the command line: a prime, or `Q`.
pub fn field_from_arg(s: &str) -> Result<Field> {
    match s {
        "Q" | "q" | "rationals" => Ok(Field::Rationals),
        _ => {
            let p: u64 = s.parse().map_err(|_| Error::Parse(format!("field {s:?}: expected a prime or Q")))?;
            Field::prime(p)
        }
    }
}

/// The file's own field, unless overridden.
fn document_field(doc: &Value, over: Option<Field>) -> Result<Field> {
    match (over, doc.get("field")) {
        (Some(f), _) => Ok(f),
        (None, Some(v)) => field_from_json(v, "field"),
        (None, None) => Err(err("field", "missing field \"field\" and no override given")),
    }
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s.to_i64() {
        Some(n) => json!(n),
        None => json!(s.to_string()),
    }
}

pub fn scalar_from_json(v: &Value, f: Field, path: &str) -> Result<Scalar> {
    if let Some(n) = v.as_i64() {
        return Ok(f.from_i64(n));
    }
    if let Some(n) = v.as_u64() {
        return f.from_fraction(&BigInt::from(n), &BigInt::from(1)).map_err(|e| err(path, e));
    }
    let s = v
        .as_str()
        .ok_or_else(|| err(path, "expected an integer or a \"num/den\" string"))?;
    let (num, den) = s.split_once('/').unwrap_or((s, "1"));
    let parse = |t: &str| -> Result<BigInt> {
        t.trim().parse().map_err(|_| err(path, format!("{s:?} is not a fraction")))
    };
    f.from_fraction(&parse(num)?, &parse(den)?).map_err(|e| err(path, e))
}

pub fn matrix_to_json(m: &LinearMap) -> Value {
    let entries: Vec<Value> = (0..m.rows())
        .map(|r| Value::Array(m.row(r).iter().map(scalar_to_json).collect()))
        .collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": entries })
}

pub fn matrix_from_json(v: &Value, f: Field, path: &str) -> Result<LinearMap> {
    let rows = as_usize(get(v, "rows", path)?, &format!("{path}.rows"))?;
    let cols = as_usize(get(v, "cols", path)?, &format!("{path}.cols"))?;
    let entry_path = format!("{path}.entries");
    let list = as_array(get(v, "entries", path)?, &entry_path)?;
    if list.len() != rows {
        return Err(err(&entry_path, format!("{} rows, expected {rows}", list.len())));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for (r, row) in list.iter().enumerate() {
        let row_path = format!("{entry_path}[{r}]");
        let row = as_array(row, &row_path)?;
        if row.len() != cols {
            return Err(err(&row_path, format!("{} entries, expected {cols}", row.len())));
        }
        for (c, x) in row.iter().enumerate() {
            entries.push(scalar_from_json(x, f, &format!("{row_path}[{c}]"))?);
        }
    }
    LinearMap::new(f, rows, cols, entries).map_err(|e| err(path, e))
}

fn matrix_list(v: &Value, f: Field, path: &str) -> Result<Vec<LinearMap>> {
    as_array(v, path)?
        .iter()
        .enumerate()
        .map(|(k, m)| matrix_from_json(m, f, &format!("{path}[{k}]")))
        .collect()
}

fn matrices_to_json(ms: &[LinearMap]) -> Value {
    Value::Array(ms.iter().map(matrix_to_json).collect())
}

pub fn complex_to_json(c: &ChainComplex) -> Value {
    json!({
        "field": field_to_json(c.field()),
        "dims": c.dims(),
        "maps": matrices_to_json(c.maps()),
    })
}

pub fn complex_from_json(doc: &Value, over: Option<Field>) -> Result<ChainComplex> {
    let f = document_field(doc, over)?;
    let dims = usize_list(get(doc, "dims", "")?, "dims")?;
    let maps = matrix_list(get(doc, "maps", "")?, f, "maps")?;
    ChainComplex::new(f, dims, maps).map_err(|e| err("maps", e))
}

fn cell_key(i: usize, j: usize) -> String {
    format!("{},{}", i + 1, j + 1)
}

pub fn grid_to_json(g: &Grid) -> Value {
    let shape = g.shape();
    let mut spaces = Map::new();
    let mut hmaps = Map::new();
    let mut vmaps = Map::new();
    for (i, j) in shape.cells() {
        spaces.insert(cell_key(i, j), json!(g.dim(i, j)));
        if shape.contains(i, j + 1) {
            hmaps.insert(cell_key(i, j), matrix_to_json(g.h(i, j)));
        }
        if shape.contains(i + 1, j) {
            vmaps.insert(cell_key(i, j), matrix_to_json(g.v(i, j)));
        }
    }
    json!({
        "field": field_to_json(g.field()),
        "shape": shape.row_lengths(),
        "orientation": g.orientation().name(),
        "spaces": spaces,
        "hmaps": hmaps,
        "vmaps": vmaps,
    })
}

fn parse_key(key: &str, path: &str) -> Result<(usize, usize)> {
    let bad = || err(path, format!("key {key:?} is not a 1-based \"i,j\" pair"));
    let (a, b) = key.split_once(',').ok_or_else(bad)?;
    let i: usize = a.trim().parse().map_err(|_| bad())?;
    let j: usize = b.trim().parse().map_err(|_| bad())?;
    if i == 0 || j == 0 {
        return Err(bad());
    }
    Ok((i - 1, j - 1))
}

fn keyed<T>(
    v: &Value,
    path: &str,
    mut parse: impl FnMut(&Value, &str) -> Result<T>,
) -> Result<BTreeMap<(usize, usize), T>> {
    let mut out = BTreeMap::new();
    for (key, x) in as_object(v, path)? {
        let item_path = format!("{path}[\"{key}\"]");
        out.insert(parse_key(key, path)?, parse(x, &item_path)?);
    }
    Ok(out)
}

pub fn orientation_from_str(s: &str) -> Result<Orientation> {
    match s {
        "kernel" => Ok(Orientation::Kernel),
        "cokernel" => Ok(Orientation::Cokernel),
        _ => Err(err("orientation", format!("{s:?} is neither \"kernel\" nor \"cokernel\""))),
    }
}

pub fn grid_from_json(doc: &Value, over: Option<Field>) -> Result<Grid> {
    let f = document_field(doc, over)?;
    let shape = StaircaseShape::new(usize_list(get(doc, "shape", "")?, "shape")?)
        .map_err(|e| err("shape", e))?;
    let orientation = orientation_from_str(
        get(doc, "orientation", "")?
            .as_str()
            .ok_or_else(|| err("orientation", "expected a string"))?,
    )?;
    let spaces = keyed(get(doc, "spaces", "")?, "spaces", as_usize)?;
    let hmaps = keyed(get(doc, "hmaps", "")?, "hmaps", |x, p| matrix_from_json(x, f, p))?;
    let vmaps = keyed(get(doc, "vmaps", "")?, "vmaps", |x, p| matrix_from_json(x, f, p))?;
    let outside = |map_name: &str, cells: Vec<(usize, usize)>, ok: &dyn Fn(usize, usize) -> bool| {
        match cells.into_iter().find(|&(i, j)| !ok(i, j)) {
            Some((i, j)) => Err(err(map_name, format!("entry \"{}\" is not in the shape", cell_key(i, j)))),
            None => Ok(()),
        }
    };
    outside("spaces", spaces.keys().copied().collect(), &|i, j| shape.contains(i, j))?;
    outside("hmaps", hmaps.keys().copied().collect(), &|i, j| shape.contains(i, j + 1))?;
    outside("vmaps", vmaps.keys().copied().collect(), &|i, j| shape.contains(i + 1, j))?;
    let missing = |name: &str, i: usize, j: usize| err(name, format!("missing entry \"{}\"", cell_key(i, j)));
    let mut dims = vec![Vec::new(); shape.rows()];
    let mut hs = vec![Vec::new(); shape.rows()];
    let mut vs = vec![Vec::new(); shape.rows()];
    for (i, j) in shape.cells() {
        dims[i].push(*spaces.get(&(i, j)).ok_or_else(|| missing("spaces", i, j))?);
    }
    // a map with a zero-dimensional end is unique, so it may be left out
    let edge = |maps: &BTreeMap<(usize, usize), LinearMap>, name: &str, (i, j): (usize, usize), (k, l): (usize, usize)| {
        match maps.get(&(i, j)) {
            Some(m) => Ok(m.clone()),
            None if dims[i][j] == 0 || dims[k][l] == 0 => Ok(match orientation {
                Orientation::Kernel => LinearMap::zero(f, dims[k][l], dims[i][j]),
                Orientation::Cokernel => LinearMap::zero(f, dims[i][j], dims[k][l]),
            }),
            None => Err(missing(name, i, j)),
        }
    };
    for (i, j) in shape.cells() {
        if shape.contains(i, j + 1) {
            hs[i].push(edge(&hmaps, "hmaps", (i, j), (i, j + 1))?);
        }
        if shape.contains(i + 1, j) {
            vs[i].push(edge(&vmaps, "vmaps", (i, j), (i + 1, j))?);
        }
    }
    Grid::new(f, shape, orientation, dims, hs, vs)
}

pub fn cross_to_json(c: &Cross) -> Value {
    json!({
        "field": field_to_json(c.field()),
        "beta1": matrix_to_json(&c.beta1),
        "beta2": matrix_to_json(&c.beta2),
        "f": matrix_to_json(&c.f),
        "g": matrix_to_json(&c.g),
    })
}

pub fn cross_from_json(doc: &Value, over: Option<Field>) -> Result<Cross> {
    let f = document_field(doc, over)?;
    let m = |k: &str| matrix_from_json(get(doc, k, "")?, f, k);
    Ok(Cross { beta1: m("beta1")?, beta2: m("beta2")?, f: m("f")?, g: m("g")? })
}

pub fn snake_to_json(s: &SnakeInput) -> Value {
    json!({
        "field": field_to_json(s.field()),
        "f": matrix_to_json(&s.f),
        "g": matrix_to_json(&s.g),
        "fp": matrix_to_json(&s.fp),
        "gp": matrix_to_json(&s.gp),
        "alpha": matrix_to_json(&s.alpha),
        "beta": matrix_to_json(&s.beta),
        "gamma": matrix_to_json(&s.gamma),
    })
}

pub fn snake_from_json(doc: &Value, over: Option<Field>) -> Result<SnakeInput> {
    let f = document_field(doc, over)?;
    let m = |k: &str| matrix_from_json(get(doc, k, "")?, f, k);
    Ok(SnakeInput {
        f: m("f")?,
        g: m("g")?,
        fp: m("fp")?,
        gp: m("gp")?,
        alpha: m("alpha")?,
        beta: m("beta")?,
        gamma: m("gamma")?,
    })
}

pub fn quiver_to_json(q: &Quiver) -> Value {
    let arrows: Vec<[usize; 2]> = q.arrows().iter().map(|&(s, t)| [s, t]).collect();
    json!({ "vertices": q.vertex_count(), "arrows": arrows })
}

pub fn quiver_from_json(v: &Value, path: &str) -> Result<Quiver> {
    let n = as_usize(get(v, "vertices", path)?, &format!("{path}.vertices"))?;
    let arrows_path = format!("{path}.arrows");
    let arrows = as_array(get(v, "arrows", path)?, &arrows_path)?
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let pair = usize_list(a, &format!("{arrows_path}[{k}]"))?;
            match pair.as_slice() {
                &[s, t] => Ok((s, t)),
                _ => Err(err(&format!("{arrows_path}[{k}]"), "expected [source, target]")),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Quiver::new(n, arrows).map_err(|e| err(path, e))
}

pub fn representation_to_json(r: &Representation) -> Value {
    json!({
        "quiver": quiver_to_json(r.quiver()),
        "dims": r.dims(),
        "maps": matrices_to_json(r.maps()),
    })
}

pub fn representation_from_json(v: &Value, f: Field, path: &str) -> Result<Representation> {
    let quiver = quiver_from_json(get(v, "quiver", path)?, &format!("{path}.quiver"))?;
    let dims = usize_list(get(v, "dims", path)?, &format!("{path}.dims"))?;
    let maps = matrix_list(get(v, "maps", path)?, f, &format!("{path}.maps"))?;
    Representation::new(f, quiver, dims, maps).map_err(|e| err(path, e))
}

fn rep_map_to_json(m: &RepMap) -> Value {
    matrices_to_json(m.components())
}

fn rep_map_from_json(v: &Value, f: Field, path: &str) -> Result<RepMap> {
    Ok(RepMap::new(matrix_list(v, f, path)?))
}

/// `{"field", "A", "B", "C", "f": [per-vertex matrices], "g": [...]}`
pub fn short_exact_to_json(s: &ShortExact) -> Value {
    json!({
        "field": field_to_json(s.a.field()),
        "A": representation_to_json(&s.a),
        "B": representation_to_json(&s.b),
        "C": representation_to_json(&s.c),
        "f": rep_map_to_json(&s.incl),
        "g": rep_map_to_json(&s.g),
    })
}

pub fn short_exact_from_json(doc: &Value, over: Option<Field>) -> Result<ShortExact> {
    let f = document_field(doc, over)?;
    let rep = |k: &str| representation_from_json(get(doc, k, "")?, f, k);
    let map = |k: &str| rep_map_from_json(get(doc, k, "")?, f, k);
    Ok(ShortExact { a: rep("A")?, b: rep("B")?, c: rep("C")?, incl: map("f")?, g: map("g")? })
}

/// `{"field", "X", "Y", "Z", "u": [per-vertex matrices], "v": [...]}`
pub fn right_exact_to_json(s: &RightExact) -> Value {
    json!({
        "field": field_to_json(s.x.field()),
        "X": representation_to_json(&s.x),
        "Y": representation_to_json(&s.y),
        "Z": representation_to_json(&s.z),
        "u": rep_map_to_json(&s.u),
        "v": rep_map_to_json(&s.proj),
    })
}

pub fn right_exact_from_json(doc: &Value, over: Option<Field>) -> Result<RightExact> {
    let f = document_field(doc, over)?;
    let rep = |k: &str| representation_from_json(get(doc, k, "")?, f, k);
    let map = |k: &str| rep_map_from_json(get(doc, k, "")?, f, k);
    Ok(RightExact { x: rep("X")?, y: rep("Y")?, z: rep("Z")?, u: map("u")?, proj: map("v")? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genrand::{random_exact_grid, random_hom_instance, random_snake_input, GenConfig};

    #[test]
    fn rational_entries() {
        let q = Field::rationals();
        let v = json!({"rows": 1, "cols": 3, "entries": [[1, "-2/4", "3"]]});
        let m = matrix_from_json(&v, q, "m").unwrap();
        assert_eq!(m.get(0, 1).to_string(), "-1/2");
        assert_eq!(matrix_to_json(&m), json!({"rows": 1, "cols": 3, "entries": [[1, "-1/2", 3]]}));
    }

    #[test]
    fn entries_reduce_mod_p() {
        let f5 = Field::prime(5).unwrap();
        let m = matrix_from_json(&json!({"rows": 1, "cols": 2, "entries": [[7, -1]]}), f5, "m").unwrap();
        assert_eq!(matrix_to_json(&m)["entries"], json!([[2, 4]]));
    }

    #[test]
    fn errors_name_the_field() {
        let f2 = Field::prime(2).unwrap();
        let e = matrix_from_json(&json!({"rows": 1, "cols": 2, "entries": [[1]]}), f2, "hmaps[\"1,1\"]");
        assert_eq!(e.unwrap_err().to_string(), "parse error: hmaps[\"1,1\"].entries[0]: 1 entries, expected 2");
        let e = parse_text("{\n  \"rows\": ,\n}").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
        let e = scalar_from_json(&json!("1/2"), f2, "x").unwrap_err();
        assert!(e.to_string().contains("divisible by 2"));
    }

    #[test]
    fn grid_roundtrip() {
        for orientation in [Orientation::Kernel, Orientation::Cokernel] {
            let cfg = GenConfig::new(3, Field::prime(5).unwrap(), 3)
                .with_shape(StaircaseShape::new(vec![3, 2, 2]).unwrap())
                .with_orientation(orientation);
            let g = random_exact_grid(&cfg).unwrap();
            let text = serde_json::to_string(&grid_to_json(&g)).unwrap();
            assert_eq!(grid_from_json(&parse_text(&text).unwrap(), None).unwrap(), g);
        }
    }

    #[test]
    fn grid_keys_are_checked() {
        let doc = json!({
            "field": {"prime": 2}, "shape": [1], "orientation": "kernel",
            "spaces": {"1,1": 1, "2,1": 0}, "hmaps": {}, "vmaps": {}
        });
        assert!(grid_from_json(&doc, None).unwrap_err().to_string().contains("\"2,1\" is not in the shape"));
    }

    #[test]
    fn snake_and_hom_roundtrip() {
        let cfg = GenConfig::new(9, Field::rationals(), 3);
        let s = random_snake_input(&cfg).unwrap();
        assert_eq!(snake_from_json(&snake_to_json(&s), None).unwrap(), s);
        let (a, e) = random_hom_instance(&GenConfig::new(4, Field::prime(3).unwrap(), 2)).unwrap();
        assert_eq!(short_exact_from_json(&short_exact_to_json(&a), None).unwrap(), a);
        assert_eq!(right_exact_from_json(&right_exact_to_json(&e), None).unwrap(), e);
    }

    #[test]
    fn field_override() {
        let doc = json!({"dims": [1, 1], "maps": [{"rows": 1, "cols": 1, "entries": [[3]]}]});
        assert!(complex_from_json(&doc, None).is_err());
        let c = complex_from_json(&doc, Some(Field::prime(3).unwrap())).unwrap();
        assert!(c.maps()[0].is_zero());
    }
}
