//! Graphical zonotopes `Z(G) = sum_{[u,v] in E} [e_u, e_v]` viewed through
//! their lattice points, which are exactly the indegree divisors.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{Divisor, Limits, Multigraph, Orientation};
use crate::indegree::{self, b_polynomial};

/// Lattice points of the zonotope: integer points of the box
/// `0 <= x(v) <= deg(v)` cut out by `x(V) = |E|` and `x(S) >= e(S)`.
///
/// Computed from the half-space description, independently of any orientation.
pub fn lattice_points(g: &Multigraph, limits: Limits) -> Result<Vec<Divisor>> {
    limits.check("vertex subsets", g.vertex_count())?;
    let deg = g.degree_divisor();
    let n = g.vertex_count();
    let m = g.edge_count() as i64;
    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    fn rec(
        g: &Multigraph,
        deg: &Divisor,
        m: i64,
        i: usize,
        sum: i64,
        x: &mut Vec<i64>,
        out: &mut Vec<Divisor>,
        limits: Limits,
    ) -> Result<()> {
        if i == x.len() {
            if sum == m {
                let d = Divisor(x.clone());
                if indegree::satisfies_inequalities(g, &d, limits)? {
                    out.push(d);
                }
            }
            return Ok(());
        }
        for val in 0..=deg[i].min(m - sum) {
            x[i] = val;
            rec(g, deg, m, i + 1, sum + val, x, out, limits)?;
        }
        x[i] = 0;
        Ok(())
    }
    rec(g, &deg, m, 0, 0, &mut x, &mut out, limits)?;
    if cfg!(debug_assertions) && g.edge_count() <= 12 {
        debug_assert_eq!(out, indegree::enumerate_indegree(g, limits)?);
    }
    Ok(out)
}

/// Vertices of the zonotope: indegrees of orientations with no directed
/// cycle apart from loops. Sorted.
pub fn vertices(g: &Multigraph, limits: Limits) -> Result<Vec<Divisor>> {
    let set: BTreeSet<Divisor> = Orientation::all(g, limits)?
        .filter(|o| o.is_acyclic_except_loops())
        .map(|o| o.indeg())
        .collect();
    Ok(set.into_iter().collect())
}

/// Vertex subsets `S` with `x(S) = e(S)`.
fn tight_sets(g: &Multigraph, x: &Divisor) -> Vec<u64> {
    (1..1u64 << g.vertex_count())
        .filter(|&s| x.degree_on(s) == g.induced_edge_count(s) as i64)
        .collect()
}

fn is_relative_interior_given(g: &Multigraph, d: &Divisor, vertex_points: &[Divisor]) -> bool {
    // A point is relatively interior iff it is tight only on the implicit
    // equalities, i.e. the inequalities tight at every vertex.
    tight_sets(g, d).into_iter().all(|s| {
        vertex_points
            .iter()
            .all(|y| y.degree_on(s) == g.induced_edge_count(s) as i64)
    })
}

/// Whether `d` lies in the relative interior of the zonotope, decided
/// geometrically from the vertex set.
pub fn is_relative_interior(g: &Multigraph, d: &Divisor, limits: Limits) -> Result<bool> {
    g.check_divisor(d)?;
    limits.check("vertex subsets", g.vertex_count())?;
    if !indegree::satisfies_inequalities(g, d, limits)? {
        return Ok(false);
    }
    let verts = vertices(g, limits)?;
    Ok(is_relative_interior_given(g, d, &verts))
}

/// Whether `d` is a relative interior lattice point, read off the
/// classification: exactly the completely reducible divisors.
pub fn is_interior(g: &Multigraph, d: &Divisor, limits: Limits) -> Result<bool> {
    Ok(indegree::classify(g, d, limits)?.is_completely_reducible())
}

/// Relative interior lattice points via the combinatorial classification
/// (completely reducible divisors).
pub fn interior_by_classification(g: &Multigraph, limits: Limits) -> Result<Vec<Divisor>> {
    let mut out = Vec::new();
    for p in lattice_points(g, limits)? {
        if indegree::classify(g, &p, limits)?.is_completely_reducible() {
            out.push(p);
        }
    }
    Ok(out)
}

/// The half-spaces `x(S) >= e(S)` as `(vertex mask, e(S))`, one per nonempty `S`.
pub fn inequalities(g: &Multigraph, limits: Limits) -> Result<Vec<(u64, usize)>> {
    limits.check("vertex subsets", g.vertex_count())?;
    Ok((1..1u64 << g.vertex_count())
        .map(|s| (s, g.induced_edge_count(s)))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZonotopePoint {
    pub divisor: Divisor,
    pub multiplicity: BigUint,
    pub is_vertex: bool,
    pub is_interior: bool,
}

/// Lattice points of a graphical zonotope together with their multiplicities
/// and position (vertex, relative interior, or neither).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphicalZonotope {
    pub graph: Multigraph,
    pub points: Vec<ZonotopePoint>,
}

impl GraphicalZonotope {
    pub fn new(graph: Multigraph, limits: Limits) -> Result<Self> {
        let verts = vertices(&graph, limits)?;
        let b = b_polynomial(&graph, limits)?;
        let points = lattice_points(&graph, limits)?
            .into_iter()
            .map(|d| ZonotopePoint {
                multiplicity: b.coeff(&d),
                is_vertex: verts.binary_search(&d).is_ok(),
                is_interior: is_relative_interior_given(&graph, &d, &verts),
                divisor: d,
            })
            .collect();
        Ok(GraphicalZonotope { graph, points })
    }

    /// The permutohedron: the zonotope of the complete graph `K_n`, `n <= 6`.
    pub fn permutohedron(n: usize, limits: Limits) -> Result<Self> {
        if n == 0 || n > 6 {
            return Err(Error::OutOfRange(format!("permutohedron needs 1 <= n <= 6, got {n}")));
        }
        Self::new(Multigraph::complete(n), limits)
    }

    pub fn lattice_points(&self) -> impl Iterator<Item = &Divisor> {
        self.points.iter().map(|p| &p.divisor)
    }

    pub fn vertices(&self) -> impl Iterator<Item = &Divisor> {
        self.points.iter().filter(|p| p.is_vertex).map(|p| &p.divisor)
    }

    pub fn interior_points(&self) -> impl Iterator<Item = &Divisor> {
        self.points.iter().filter(|p| p.is_interior).map(|p| &p.divisor)
    }

    /// Affine dimension: vertices minus connected components.
    pub fn dimension(&self) -> usize {
        self.graph.vertex_count() - self.graph.component_masks().len()
    }
}
