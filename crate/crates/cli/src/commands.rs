use nodal_strata::formats::{self, to_pretty};
use nodal_strata::indegree::{self, Method};
use nodal_strata::matpoly::{self, MatrixPolynomial, SpectralLineArrangement};
use nodal_strata::strata::{self, CurveShape, StratumLabel};
use nodal_strata::zonotope::GraphicalZonotope;
use nodal_strata::{Error, Limits, Multigraph};
use serde_json::{json, Value};

use crate::{
    Cli, Command, Format, GraphAction, GraphArgs, HasseArgs, MatpolyAction, MatpolyArgs, MethodArg, SampleArgs,
    StrataAction, StrataArgs, ZonotopeAction, ZonotopeArgs,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("cannot read `{path}`: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error("`{command}` has no {format} output")]
    UnsupportedFormat { command: &'static str, format: &'static str },
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Lib(e) => e.kind(),
            CliError::Io { .. } => "io",
            CliError::Usage(_) => "usage",
            CliError::UnsupportedFormat { .. } => "unsupported_format",
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn unsupported(command: &'static str, format: Format) -> CliError {
    CliError::UnsupportedFormat {
        command,
        format: format.name(),
    }
}

/// Inline JSON when the argument starts like a JSON document, else a path.
fn load(arg: &str) -> Result<String> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(arg).map_err(|source| CliError::Io {
        path: arg.to_string(),
        source,
    })
}

fn load_graph(arg: &str) -> Result<Multigraph> {
    Ok(formats::graph_from_json(&load(arg)?)?)
}

fn load_label(g: &Multigraph, arg: &str) -> Result<StratumLabel> {
    let v: Value = serde_json::from_str(&load(arg)?).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(formats::label_from_json(g, &v)?)
}

fn require<'a>(value: &'a Option<String>, flag: &str, action: &str) -> Result<&'a str> {
    value
        .as_deref()
        .ok_or_else(|| CliError::Usage(format!("`{action}` needs --{flag}")))
}

pub fn run(cli: &Cli) -> Result<String> {
    let limits = Limits::new(cli.max_edges);
    match &cli.command {
        Command::Graph(a) => graph(a, cli.format, limits),
        Command::Zonotope(a) => zonotope(a, cli.format, limits),
        Command::Strata(a) => strata_cmd(a, if a.table { Format::Table } else { cli.format }, limits),
        Command::Hasse(a) => hasse(a, cli.format, limits),
        Command::Matpoly(a) => matpoly_cmd(a, cli.format),
        Command::Sample(a) => sample(a, cli.format),
    }
}

fn graph(a: &GraphArgs, format: Format, limits: Limits) -> Result<String> {
    let g = load_graph(&a.graph)?;
    let divisor = a
        .divisor
        .as_deref()
        .map(|d| Ok::<_, CliError>(formats::divisor_from_json(&g, &load(d)?)?))
        .transpose()?;
    match (a.action, divisor) {
        (GraphAction::Indeg, None) => {
            let all = indegree::enumerate_indegree(&g, limits)?;
            match format {
                Format::Json => Ok(to_pretty(&Value::Array(
                    all.iter().map(|d| formats::divisor_to_json(&g, d)).collect(),
                ))),
                Format::Table => Ok(all.iter().map(|d| format!("{d}\n")).collect()),
                f => Err(unsupported("graph indeg", f)),
            }
        }
        (GraphAction::Indeg, Some(d)) => {
            let method = match a.method {
                MethodArg::Enumerate => Method::Enumerate,
                MethodArg::Flow => Method::Flow,
                MethodArg::Inequalities => Method::Inequalities,
            };
            let witness = indegree::is_indegree(&g, &d, method, limits)?;
            match format {
                Format::Json => Ok(to_pretty(&json!({
                    "divisor": formats::divisor_to_json(&g, &d),
                    "indegree": witness.is_some(),
                    "witness": witness.as_ref().map(formats::orientation_to_json),
                }))),
                Format::Dot => witness
                    .map(|o| formats::graph_to_dot(&g, Some(&o)))
                    .ok_or_else(|| Error::NotIndegree(d.to_string()).into()),
                f => Err(unsupported("graph indeg", f)),
            }
        }
        (GraphAction::Bpoly, _) => {
            let b = indegree::b_polynomial(&g, limits)?;
            match format {
                Format::Json => Ok(to_pretty(&formats::bpoly_to_json(&g, &b))),
                Format::Table => Ok(format!("{b}\n")),
                f => Err(unsupported("graph bpoly", f)),
            }
        }
        (GraphAction::Classify, None) => Err(CliError::Usage("`graph classify` needs --divisor".into())),
        (GraphAction::Classify, Some(d)) => {
            let class = indegree::classify(&g, &d, limits)?;
            match format {
                Format::Json => Ok(to_pretty(&json!({
                    "divisor": formats::divisor_to_json(&g, &d),
                    "class": class.tag.as_str(),
                    "witness": class.witness.as_ref().map(formats::orientation_to_json),
                }))),
                Format::Table => Ok(format!("{}\n", class.tag.as_str())),
                Format::Dot => class
                    .witness
                    .map(|o| formats::graph_to_dot(&g, Some(&o)))
                    .ok_or_else(|| Error::NotIndegree(d.to_string()).into()),
                f => Err(unsupported("graph classify", f)),
            }
        }
    }
}

fn zonotope(a: &ZonotopeArgs, format: Format, limits: Limits) -> Result<String> {
    let mut z = match (a.complete, &a.graph) {
        (Some(n), _) => GraphicalZonotope::permutohedron(n, limits)?,
        (None, Some(path)) => GraphicalZonotope::new(load_graph(path)?, limits)?,
        (None, None) => unreachable!("clap requires one source"),
    };
    if let ZonotopeAction::Vertices = a.action {
        z.points.retain(|p| p.is_vertex);
    }
    if a.count {
        return Ok(format!("{}\n", z.points.len()));
    }
    match format {
        Format::Json => Ok(to_pretty(&formats::lattice_points_json(&z))),
        Format::Csv => Ok(formats::lattice_points_csv(&z)?),
        f => Err(unsupported("zonotope", f)),
    }
}

fn shape(lines: Option<usize>, graph: &Option<String>, m: usize, n: Option<usize>) -> Result<CurveShape> {
    match (lines, graph) {
        (Some(k), _) => Ok(CurveShape::lines(k)),
        (None, Some(path)) => {
            let g = load_graph(path)?;
            let n = n.unwrap_or(g.vertex_count());
            Ok(CurveShape::new(g, m, n)?)
        }
        (None, None) => unreachable!("clap requires one source"),
    }
}

fn strata_listing(c: &CurveShape, list: &[StratumLabel], format: Format, limits: Limits) -> Result<String> {
    let rows = formats::strata_rows(c, list, limits)?;
    match format {
        Format::Table => Ok(formats::strata_table(&rows)),
        Format::Csv => Ok(formats::strata_csv(&rows)?),
        Format::Json => Ok(to_pretty(&Value::Array(
            rows.iter()
                .zip(list)
                .map(|(r, s)| {
                    json!({
                        "id": r.id,
                        "stratum": formats::label_to_json(&c.dual_graph, s),
                        "dimension": r.dimension,
                        "class": r.class,
                        "multiplicity": r.multiplicity,
                    })
                })
                .collect(),
        ))),
        f => Err(unsupported("strata", f)),
    }
}

fn strata_cmd(a: &StrataArgs, format: Format, limits: Limits) -> Result<String> {
    let c = shape(a.lines, &a.graph, a.m, a.n)?;
    match a.action {
        StrataAction::Enumerate => strata_listing(&c, &strata::enumerate_strata(&c, limits)?, format, limits),
        StrataAction::Components => strata_listing(&c, &strata::irreducible_components(&c, limits)?, format, limits),
        StrataAction::Cr => {
            let cr = strata::cr_strata(&c, limits)?;
            let labels: Vec<StratumLabel> = cr.labels().into_iter().cloned().collect();
            strata_listing(&c, &labels, format, limits)
        }
        StrataAction::Adjacency => {
            let s1 = load_label(&c.dual_graph, require(&a.from, "from", "strata adjacency")?)?;
            let s2 = load_label(&c.dual_graph, require(&a.at, "at", "strata adjacency")?)?;
            let mult = strata::adjacency_multiplicity(&c, &s1, &s2)?;
            match format {
                Format::Json => Ok(to_pretty(&json!({
                    "from": formats::label_to_json(&c.dual_graph, &s1),
                    "at": formats::label_to_json(&c.dual_graph, &s2),
                    "multiplicity": mult.to_string(),
                }))),
                Format::Table => Ok(format!("{mult}\n")),
                f => Err(unsupported("strata adjacency", f)),
            }
        }
        StrataAction::Local => {
            let base = load_label(&c.dual_graph, require(&a.at, "at", "strata local")?)?;
            let local = strata::local_model(&c, &base)?;
            let census: Vec<StratumLabel> = local.census.keys().cloned().collect();
            match format {
                Format::Json => {
                    let entries = local
                        .census
                        .iter()
                        .map(|(s, m)| {
                            Ok(json!({
                                "stratum": formats::label_to_json(&c.dual_graph, s),
                                "dimension": strata::stratum_dimension(&c, s)?,
                                "multiplicity": m.to_string(),
                            }))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Ok(to_pretty(&json!({
                        "base": formats::label_to_json(&c.dual_graph, &base),
                        "p": local.p,
                        "q": local.q,
                        "total": local.total().to_string(),
                        "census": entries,
                    })))
                }
                f => strata_listing(&c, &census, f, limits),
            }
        }
    }
}

fn hasse(a: &HasseArgs, format: Format, limits: Limits) -> Result<String> {
    let g = match (a.lines, &a.graph) {
        (Some(n), _) => Multigraph::complete(n),
        (None, Some(path)) => load_graph(path)?,
        (None, None) => unreachable!("clap requires one source"),
    };
    let p = strata::hasse_diagram(&g, limits)?;
    match format {
        Format::Json => Ok(to_pretty(&formats::hasse_to_json(&p))),
        Format::Dot => Ok(formats::hasse_to_dot(&p)),
        f => Err(unsupported("hasse export", f)),
    }
}

fn arrangement(arg: &Option<String>, p: &MatrixPolynomial) -> Result<SpectralLineArrangement> {
    match arg {
        Some(a) => Ok(formats::arrangement_from_json(&load(a)?)?),
        None => Ok(matpoly::arrangement_of(p)?),
    }
}

fn matpoly_cmd(a: &MatpolyArgs, format: Format) -> Result<String> {
    let p = formats::matpoly_from_json(&load(&a.poly)?)?;
    match a.action {
        MatpolyAction::Charpoly => {
            let chi = matpoly::char_poly(&p)?;
            match format {
                Format::Json => Ok(to_pretty(&json!({
                    "terms": formats::bivariate_to_json(&chi),
                    "text": chi.to_string(),
                }))),
                Format::Table => Ok(format!("{chi}\n")),
                f => Err(unsupported("matpoly charpoly", f)),
            }
        }
        MatpolyAction::Classify => {
            let c = arrangement(&a.arrangement, &p)?;
            let label = matpoly::classify_polynomial(&p, &c)?;
            match format {
                Format::Json => Ok(to_pretty(&formats::label_to_json(c.dual_graph(), &label))),
                Format::Table => Ok(format!(
                    "{} | {}\n",
                    formats::mask_string(c.dual_graph(), label.edges),
                    label.divisor
                )),
                f => Err(unsupported("matpoly classify", f)),
            }
        }
        MatpolyAction::Reducibility => {
            let r = matpoly::reducibility(&p)?;
            match format {
                Format::Json => Ok(to_pretty(&json!({ "reducibility": r.as_str() }))),
                Format::Table => Ok(format!("{r}\n")),
                f => Err(unsupported("matpoly reducibility", f)),
            }
        }
    }
}

fn sample(a: &SampleArgs, format: Format) -> Result<String> {
    let c = formats::arrangement_from_json(&load(&a.arrangement)?)?;
    let s = load_label(c.dual_graph(), &a.stratum)?;
    let (params, p) = match &a.params {
        Some(raw) => {
            let params = raw
                .iter()
                .map(|x| formats::rational_from_str(x))
                .collect::<nodal_strata::Result<Vec<_>>>()?;
            let p = matpoly::sample_stratum(&c, &s, &params)?;
            (params, p)
        }
        None => matpoly::sample_default(&c, &s)?,
    };
    match format {
        Format::Json => Ok(to_pretty(&json!({
            "params": params.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "poly": formats::matpoly_to_json(&p),
            "stratum": formats::label_to_json(c.dual_graph(), &matpoly::classify_polynomial(&p, &c)?),
        }))),
        Format::Table => Ok(format!("{}\n", p.to_string().trim_end())),
        f => Err(unsupported("sample", f)),
    }
}
