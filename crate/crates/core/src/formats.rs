//! Text encodings: JSON for graphs, divisors, polynomials and reports; CSV
//! and aligned tables for point sets and strata; DOT for graphs and Hasse
//! diagrams.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::graph::{Divisor, EdgeSet, Limits, Multigraph, Orientation};
use crate::indegree::{self, IndegPolynomial};
use crate::matpoly::{BivariatePolynomial, MatrixPolynomial, SpectralLineArrangement, Q};
use crate::strata::{stratum_dimension, CurveShape, StrataPoset, StratumLabel};
use crate::zonotope::GraphicalZonotope;

fn parse_err(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

/// `{"vertices": ["v1", ...], "edges": [["v1", "v2"], ...]}`.
pub fn graph_from_json(text: &str) -> Result<Multigraph> {
    let g: GraphJson = serde_json::from_str(text).map_err(parse_err)?;
    Multigraph::build(&g.vertices, &g.edges)
}

pub fn graph_to_json(g: &Multigraph) -> Value {
    json!({
        "vertices": g.vertices(),
        "edges": g.edges().iter().map(|&(u, v)| json!([g.vertices()[u], g.vertices()[v]])).collect::<Vec<_>>(),
    })
}

/// `{"v1": 1, ...}`; vertices left out are zero.
pub fn divisor_from_json(g: &Multigraph, text: &str) -> Result<Divisor> {
    let map: Map<String, Value> = serde_json::from_str(text).map_err(parse_err)?;
    let mut d = Divisor::zero(g.vertex_count());
    for (k, v) in map {
        let i = g.vertex_index(&k).ok_or(Error::UnknownVertex(k.clone()))?;
        d.0[i] = v
            .as_i64()
            .ok_or_else(|| Error::Parse(format!("divisor value for `{k}` is not an integer")))?;
    }
    Ok(d)
}

pub fn divisor_to_json(g: &Multigraph, d: &Divisor) -> Value {
    Value::Object(
        g.vertices()
            .iter()
            .zip(d.values())
            .map(|(v, &x)| (v.clone(), json!(x)))
            .collect(),
    )
}

/// `[{"exponents": {"v1": 2, ...}, "coeff": "1"}, ...]`, zero exponents omitted.
/// `[["tail", "head"], ...]` in edge order.
pub fn orientation_to_json(o: &Orientation<'_>) -> Value {
    let names = o.graph().vertices();
    Value::Array(
        (0..o.graph().edge_count())
            .map(|e| json!([names[o.tail(e)], names[o.head(e)]]))
            .collect(),
    )
}

pub fn bpoly_to_json(g: &Multigraph, b: &IndegPolynomial) -> Value {
    Value::Array(
        b.terms()
            .iter()
            .rev()
            .map(|(e, c)| {
                let exps: Map<String, Value> = g
                    .vertices()
                    .iter()
                    .zip(e)
                    .filter(|(_, &x)| x > 0)
                    .map(|(v, &x)| (v.clone(), json!(x)))
                    .collect();
                json!({"exponents": exps, "coeff": c.to_string()})
            })
            .collect(),
    )
}

pub fn rational_from_str(s: &str) -> Result<Q> {
    Q::from_str(s.trim()).map_err(|_| Error::Parse(format!("`{s}` is not a rational number")))
}

fn rational_from_value(v: &Value) -> Result<Q> {
    match v {
        Value::String(s) => rational_from_str(s),
        Value::Number(n) if n.is_i64() => Ok(Q::from_integer(n.as_i64().expect("checked").into())),
        other => Err(Error::Parse(format!("expected a rational string, got {other}"))),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatPolyJson {
    m: usize,
    n: usize,
    coeffs: Vec<Vec<Vec<Value>>>,
}

/// `{"m": 1, "n": 3, "coeffs": [A_0, ..., A_m]}` with entries as `"p/q"` strings.
pub fn matpoly_from_json(text: &str) -> Result<MatrixPolynomial> {
    let raw: MatPolyJson = serde_json::from_str(text).map_err(parse_err)?;
    let coeffs = raw
        .coeffs
        .iter()
        .map(|a| {
            a.iter()
                .map(|row| row.iter().map(rational_from_value).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let p = MatrixPolynomial::new(coeffs)?;
    if p.m() != raw.m || p.n() != raw.n {
        return Err(Error::Shape(format!(
            "declared m = {}, n = {} but coefficients give m = {}, n = {}",
            raw.m,
            raw.n,
            p.m(),
            p.n()
        )));
    }
    Ok(p)
}

pub fn matpoly_to_json(p: &MatrixPolynomial) -> Value {
    json!({
        "m": p.m(),
        "n": p.n(),
        "coeffs": p.coeffs().iter().map(|a| {
            a.iter().map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>()
        }).collect::<Vec<_>>(),
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrangementJson {
    lines: Vec<(Value, Value)>,
}

/// `{"lines": [["a1", "b1"], ...]}` for the lines `mu = a + b lambda`.
pub fn arrangement_from_json(text: &str) -> Result<SpectralLineArrangement> {
    let raw: ArrangementJson = serde_json::from_str(text).map_err(parse_err)?;
    let lines = raw
        .lines
        .iter()
        .map(|(a, b)| Ok((rational_from_value(a)?, rational_from_value(b)?)))
        .collect::<Result<Vec<_>>>()?;
    SpectralLineArrangement::new(lines)
}

pub fn arrangement_to_json(c: &SpectralLineArrangement) -> Value {
    json!({
        "lines": c.lines().iter().map(|(a, b)| json!([a.to_string(), b.to_string()])).collect::<Vec<_>>(),
    })
}

/// `[{"lambda": i, "mu": j, "coeff": "p/q"}, ...]`, highest `mu` first.
pub fn bivariate_to_json(q: &BivariatePolynomial) -> Value {
    let mut keys: Vec<_> = q.terms().keys().copied().collect();
    keys.sort_by_key(|&(i, j)| std::cmp::Reverse((j, i)));
    Value::Array(
        keys.into_iter()
            .map(|(i, j)| json!({"lambda": i, "mu": j, "coeff": q.coeff(i, j).to_string()}))
            .collect(),
    )
}

/// `{"subgraph": [edge indices], "divisor": {...}}`.
pub fn label_to_json(g: &Multigraph, s: &StratumLabel) -> Value {
    json!({
        "subgraph": s.edges.iter().collect::<Vec<_>>(),
        "divisor": divisor_to_json(g, &s.divisor),
    })
}

pub fn label_from_json(g: &Multigraph, v: &Value) -> Result<StratumLabel> {
    let edges = v
        .get("subgraph")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("stratum needs a `subgraph` array".into()))?
        .iter()
        .map(|e| {
            e.as_u64()
                .map(|e| e as usize)
                .ok_or_else(|| Error::Parse(format!("edge index {e} is not a nonnegative integer")))
        })
        .collect::<Result<Vec<_>>>()?;
    if let Some(&bad) = edges.iter().find(|&&e| e >= g.edge_count()) {
        return Err(Error::EdgeOutOfRange(bad));
    }
    let divisor = v
        .get("divisor")
        .ok_or_else(|| Error::Parse("stratum needs a `divisor` object".into()))?;
    Ok(StratumLabel::new(
        EdgeSet::from_indices(edges),
        divisor_from_json(g, &divisor.to_string())?,
    ))
}

/// Edge bitmask written most significant edge first, padded to the edge count.
pub fn mask_string(g: &Multigraph, edges: EdgeSet) -> String {
    format!("{:0width$b}", edges.bits(), width = g.edge_count().max(1))
}

/// One row of a stratum table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumRow {
    pub id: usize,
    pub edges: String,
    pub divisor: String,
    pub dimension: usize,
    pub class: String,
    pub multiplicity: String,
}

const STRATUM_HEADER: [&str; 6] = ["id", "edges", "divisor", "dimension", "class", "multiplicity"];

impl StratumRow {
    fn fields(&self) -> [String; 6] {
        [
            self.id.to_string(),
            self.edges.clone(),
            self.divisor.clone(),
            self.dimension.to_string(),
            self.class.clone(),
            self.multiplicity.clone(),
        ]
    }
}

/// Rows for `strata`, numbered in the given order. `class` is the
/// classification of `D` on `G'` and `multiplicity` is `mult(G', D)`.
pub fn strata_rows(c: &CurveShape, strata: &[StratumLabel], limits: Limits) -> Result<Vec<StratumRow>> {
    strata
        .iter()
        .enumerate()
        .map(|(id, s)| {
            let sub = c.dual_graph.spanning(s.edges);
            Ok(StratumRow {
                id,
                edges: mask_string(&c.dual_graph, s.edges),
                divisor: s.divisor.to_string(),
                dimension: stratum_dimension(c, s)?,
                class: indegree::classify(&sub, &s.divisor, limits)?.tag.as_str().to_string(),
                multiplicity: indegree::multiplicity(&sub, &s.divisor)?.to_string(),
            })
        })
        .collect()
}

pub fn strata_table(rows: &[StratumRow]) -> String {
    let cells: Vec<[String; 6]> = rows.iter().map(StratumRow::fields).collect();
    let mut widths = STRATUM_HEADER.map(str::len);
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let mut out = String::new();
    let mut line = |fields: Vec<&str>| {
        let padded: Vec<String> = fields
            .iter()
            .zip(widths)
            .map(|(f, w)| format!("{f:<w$}"))
            .collect();
        out.push_str(padded.join("  ").trim_end());
        out.push('\n');
    };
    line(STRATUM_HEADER.to_vec());
    for row in &cells {
        line(row.iter().map(String::as_str).collect());
    }
    out
}

fn csv_string(write: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    write(&mut w).map_err(parse_err)?;
    let bytes = w.into_inner().map_err(parse_err)?;
    String::from_utf8(bytes).map_err(parse_err)
}

pub fn strata_csv(rows: &[StratumRow]) -> Result<String> {
    csv_string(|w| {
        w.write_record(STRATUM_HEADER)?;
        for row in rows {
            w.write_record(row.fields())?;
        }
        Ok(())
    })
}

/// Columns: one per vertex, then `multiplicity`, `is_vertex`, `is_interior`.
pub fn lattice_points_csv(z: &GraphicalZonotope) -> Result<String> {
    csv_string(|w| {
        let mut header: Vec<String> = z.graph.vertices().to_vec();
        header.extend(["multiplicity", "is_vertex", "is_interior"].map(String::from));
        w.write_record(&header)?;
        for p in &z.points {
            let mut rec: Vec<String> = p.divisor.values().iter().map(i64::to_string).collect();
            rec.push(p.multiplicity.to_string());
            rec.push(p.is_vertex.to_string());
            rec.push(p.is_interior.to_string());
            w.write_record(&rec)?;
        }
        Ok(())
    })
}

pub fn lattice_points_json(z: &GraphicalZonotope) -> Value {
    Value::Array(
        z.points
            .iter()
            .map(|p| {
                json!({
                    "divisor": divisor_to_json(&z.graph, &p.divisor),
                    "multiplicity": p.multiplicity.to_string(),
                    "is_vertex": p.is_vertex,
                    "is_interior": p.is_interior,
                })
            })
            .collect(),
    )
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected graph, or a digraph when an orientation is given.
pub fn graph_to_dot(g: &Multigraph, orientation: Option<&Orientation<'_>>) -> String {
    let mut out = String::new();
    let (kind, arrow) = if orientation.is_some() {
        ("digraph", "->")
    } else {
        ("graph", "--")
    };
    writeln!(out, "{kind} G {{").expect("string write");
    for v in g.vertices() {
        writeln!(out, "  {};", dot_id(v)).expect("string write");
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (t, h) = match orientation {
            Some(o) => (o.tail(e), o.head(e)),
            None => (u, v),
        };
        writeln!(
            out,
            "  {} {arrow} {} [label=\"e{e}\"];",
            dot_id(&g.vertices()[t]),
            dot_id(&g.vertices()[h])
        )
        .expect("string write");
    }
    out.push_str("}\n");
    out
}

pub fn hasse_label(p: &StrataPoset, s: &StratumLabel) -> String {
    format!("{} | {}", mask_string(&p.graph, s.edges), s.divisor)
}

/// Covers point upwards; nodes are labelled `bitmask | divisor`.
pub fn hasse_to_dot(p: &StrataPoset) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    for (i, s) in p.elements.iter().enumerate() {
        writeln!(out, "  s{i} [label={}];", dot_id(&hasse_label(p, s))).expect("string write");
    }
    for &(lo, hi) in &p.covers {
        writeln!(out, "  s{lo} -> s{hi};").expect("string write");
    }
    out.push_str("}\n");
    out
}

pub fn hasse_to_json(p: &StrataPoset) -> Value {
    json!({
        "elements": p.elements.iter().enumerate().map(|(i, s)| json!({
            "id": i,
            "label": hasse_label(p, s),
            "rank": s.edges.len(),
            "stratum": label_to_json(&p.graph, s),
        })).collect::<Vec<_>>(),
        "covers": p.covers.iter().map(|&(lo, hi)| json!([lo, hi])).collect::<Vec<_>>(),
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialise");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indegree::b_polynomial;
    use crate::strata::enumerate_strata;
    use crate::strata::hasse_diagram;

    const TRIANGLE: &str = r#"{"vertices":["a","b","c"],"edges":[["a","b"],["a","c"],["b","c"]]}"#;

    #[test]
    fn graph_round_trip() {
        let g = graph_from_json(TRIANGLE).unwrap();
        assert_eq!(g.edges(), Multigraph::complete(3).edges());
        assert_eq!(graph_from_json(&graph_to_json(&g).to_string()).unwrap(), g);
        let empty = graph_from_json(r#"{"vertices":[],"edges":[]}"#).unwrap();
        assert_eq!(empty.vertex_count(), 0);
    }

    #[test]
    fn graph_errors() {
        let bad = r#"{"vertices":["a"],"edges":[["a","z"]]}"#;
        assert_eq!(graph_from_json(bad), Err(Error::UnknownVertex("z".into())));
        let Err(Error::Parse(msg)) = graph_from_json("{\"vertices\": [1]}") else {
            panic!("expected a parse error");
        };
        assert!(msg.contains("line 1"), "{msg}");
    }

    #[test]
    fn divisors() {
        let g = graph_from_json(TRIANGLE).unwrap();
        let d = divisor_from_json(&g, r#"{"a":1,"c":2}"#).unwrap();
        assert_eq!(d, Divisor(vec![1, 0, 2]));
        assert_eq!(divisor_to_json(&g, &d).to_string(), r#"{"a":1,"b":0,"c":2}"#);
        assert!(divisor_from_json(&g, r#"{"q":1}"#).is_err());
    }

    #[test]
    fn bpoly_json() {
        let g = Multigraph::complete(2);
        let b = b_polynomial(&g, Limits::default()).unwrap();
        assert_eq!(
            bpoly_to_json(&g, &b).to_string(),
            r#"[{"exponents":{"v1":1},"coeff":"1"},{"exponents":{"v2":1},"coeff":"1"}]"#
        );
    }

    #[test]
    fn matpoly_round_trip() {
        let text = r#"{"m":1,"n":2,"coeffs":[[["0","5"],["0","1"]],[["1","0"],["0","2"]]]}"#;
        let p = matpoly_from_json(text).unwrap();
        assert_eq!(matpoly_to_json(&p).to_string(), text);
        let half = r#"{"m":0,"n":1,"coeffs":[[["1/2"]]]}"#;
        assert_eq!(matpoly_to_json(&matpoly_from_json(half).unwrap()).to_string(), half);
        let wrong = r#"{"m":2,"n":2,"coeffs":[[["0","5"],["0","1"]]]}"#;
        assert!(matches!(matpoly_from_json(wrong), Err(Error::Shape(_))));
    }

    #[test]
    fn arrangement_round_trip() {
        let text = r#"{"lines":[["0","1"],["1/2","2"]]}"#;
        let c = arrangement_from_json(text).unwrap();
        assert_eq!(arrangement_to_json(&c).to_string(), text);
    }

    #[test]
    fn hasse_dot() {
        let g = Multigraph::complete(2);
        let p = hasse_diagram(&g, Limits::default()).unwrap();
        let dot = hasse_to_dot(&p);
        assert!(dot.contains("s0 [label=\"0 | (0,0)\"]"), "{dot}");
        assert!(dot.contains("s0 -> s2;"));
    }

    #[test]
    fn table_layout() {
        let rows = vec![StratumRow {
            id: 0,
            edges: "000".into(),
            divisor: "(0,0,0)".into(),
            dimension: 0,
            class: "completely_reducible".into(),
            multiplicity: "1".into(),
        }];
        let t = strata_table(&rows);
        assert_eq!(t.lines().count(), 2);
        assert!(t.starts_with("id  edges  divisor  dimension  class"));
        assert_eq!(
            strata_csv(&rows).unwrap(),
            "id,edges,divisor,dimension,class,multiplicity\n0,000,\"(0,0,0)\",0,completely_reducible,1\n"
        );
    }

    #[test]
    fn three_lines_rows() {
        let c = CurveShape::lines(3);
        let strata = enumerate_strata(&c, Limits::default()).unwrap();
        let rows = strata_rows(&c, &strata, Limits::default()).unwrap();
        assert_eq!(rows.len(), 26);
        let centre = rows.iter().find(|r| r.edges == "111" && r.divisor == "(1,1,1)").unwrap();
        assert_eq!((centre.dimension, centre.class.as_str(), centre.multiplicity.as_str()), (3, "irreducible", "2"));
        assert_eq!(strata_table(&rows).lines().count(), 27);
    }
}
