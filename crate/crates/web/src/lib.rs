//! Browser bindings for the demo page in `www/`. Every function takes and
//! returns JSON text so the page needs no generated types.

use nodal_strata::formats;
use nodal_strata::matpoly;
use nodal_strata::strata::{self, CurveShape};
use nodal_strata::zonotope::GraphicalZonotope;
use nodal_strata::{Limits, Multigraph};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

// The browser has no environment to read a cap from.
const LIMITS: Limits = Limits { max_edges: 15 };

fn err(e: nodal_strata::Error) -> String {
    json!({"error": e.kind(), "message": e.to_string()}).to_string()
}

/// Lattice points of the permutohedron on `n` vertices with multiplicity,
/// vertex and interior flags.
#[wasm_bindgen]
pub fn permutohedron_points(n: usize) -> Result<String, String> {
    let z = GraphicalZonotope::permutohedron(n, LIMITS).map_err(err)?;
    Ok(formats::lattice_points_json(&z).to_string())
}

/// Lattice points of the zonotope of a graph given as JSON.
#[wasm_bindgen]
pub fn zonotope_points(graph_json: &str) -> Result<String, String> {
    let g = formats::graph_from_json(graph_json).map_err(err)?;
    let z = GraphicalZonotope::new(g, LIMITS).map_err(err)?;
    Ok(formats::lattice_points_json(&z).to_string())
}

/// Hasse diagram of the strata for `n` generic lines, as JSON or DOT.
#[wasm_bindgen]
pub fn hasse(n: usize, dot: bool) -> Result<String, String> {
    if n > 4 {
        return Err(err(nodal_strata::Error::OutOfRange(format!("at most 4 lines here, got {n}"))));
    }
    let p = strata::hasse_diagram(&Multigraph::complete(n), LIMITS).map_err(err)?;
    Ok(if dot {
        formats::hasse_to_dot(&p)
    } else {
        formats::hasse_to_json(&p).to_string()
    })
}

/// Strata of `n` generic lines with dimension, class and multiplicity.
#[wasm_bindgen]
pub fn strata_list(n: usize) -> Result<String, String> {
    let c = CurveShape::lines(n);
    let list = strata::enumerate_strata(&c, LIMITS).map_err(err)?;
    let rows = formats::strata_rows(&c, &list, LIMITS).map_err(err)?;
    let out: Vec<Value> = rows
        .iter()
        .zip(&list)
        .map(|(r, s)| {
            json!({
                "id": r.id,
                "label": format!("{} | {}", r.edges, r.divisor),
                "stratum": formats::label_to_json(&c.dual_graph, s),
                "dimension": r.dimension,
                "class": r.class,
                "multiplicity": r.multiplicity,
            })
        })
        .collect();
    Ok(Value::Array(out).to_string())
}

/// Builds a matrix polynomial in the chosen stratum of a line arrangement,
/// then classifies it again from scratch.
#[wasm_bindgen]
pub fn sample_and_classify(arrangement_json: &str, stratum_json: &str) -> Result<String, String> {
    let c = formats::arrangement_from_json(arrangement_json).map_err(err)?;
    let v: Value = serde_json::from_str(stratum_json).map_err(|e| err(nodal_strata::Error::Parse(e.to_string())))?;
    let s = formats::label_from_json(c.dual_graph(), &v).map_err(err)?;
    let (params, p) = matpoly::sample_default(&c, &s).map_err(err)?;
    let label = matpoly::classify_polynomial(&p, &c).map_err(err)?;
    let chi = matpoly::char_poly(&p).map_err(err)?;
    let reducibility = matpoly::reducibility(&p).map(|r| r.as_str()).unwrap_or("unsupported");
    Ok(json!({
        "params": params.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "poly": formats::matpoly_to_json(&p),
        "text": p.to_string(),
        "charpoly": chi.to_string(),
        "stratum": formats::label_to_json(c.dual_graph(), &label),
        "reducibility": reducibility,
    })
    .to_string())
}
