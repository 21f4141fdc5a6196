//! Strata of an isospectral family as pure combinatorics of the dual graph.
//!
//! A stratum is labelled by a generating subgraph `G'` of the dual graph
//! (the nodes that stay nodes) and an indegree divisor `D` on `G'`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Direction, Divisor, EdgeSet, Limits, Multigraph, Subgraph};
use crate::indegree::{self, count_orientations, search_orientations};

/// Dual graph of a nodal spectral curve plus the degree `m` and size `n` of
/// the matrix polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveShape {
    pub dual_graph: Multigraph,
    pub m: usize,
    pub n: usize,
}

impl CurveShape {
    pub fn new(dual_graph: Multigraph, m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidShape(format!("m = {m} and n = {n} must be positive")));
        }
        let shape = CurveShape { dual_graph, m, n };
        if shape.top_dimension() < shape.dual_graph.edge_count() {
            // the empty subgraph would get a negative dimension
            return Err(Error::InvalidShape(format!(
                "{} nodes but mn(n-1)/2 = {}",
                shape.dual_graph.edge_count(),
                shape.top_dimension()
            )));
        }
        Ok(shape)
    }

    /// `n` generic lines through a pencil-free arrangement: `m = 1`, dual graph `K_n`.
    pub fn lines(n: usize) -> Self {
        CurveShape {
            dual_graph: Multigraph::complete(n),
            m: 1,
            n,
        }
    }

    /// `mn(n-1)/2`, the dimension of the whole isospectral family.
    pub fn top_dimension(&self) -> usize {
        self.m * self.n * (self.n.saturating_sub(1)) / 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StratumLabel {
    pub edges: EdgeSet,
    pub divisor: Divisor,
}

impl StratumLabel {
    pub fn new(edges: EdgeSet, divisor: Divisor) -> Self {
        StratumLabel { edges, divisor }
    }

    pub fn subgraph<'g>(&self, g: &'g Multigraph) -> Result<Subgraph<'g>> {
        Subgraph::new(g, self.edges)
    }
}

impl fmt::Display for StratumLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:b} | {}", self.edges.bits(), self.divisor)
    }
}

fn check_label(g: &Multigraph, s: &StratumLabel) -> Result<()> {
    s.subgraph(g)?;
    g.check_divisor(&s.divisor)?;
    if !indegree::is_indegree_divisor(&g.spanning(s.edges), &s.divisor)? {
        return Err(Error::NotIndegree(s.divisor.to_string()));
    }
    Ok(())
}

/// Every pair (generating subgraph, indegree divisor on it), ordered by edge
/// bitmask and then divisor.
pub fn strata_of_graph(g: &Multigraph, limits: Limits) -> Result<Vec<StratumLabel>> {
    let mut out = Vec::new();
    for sub in g.generating_subgraphs(limits)? {
        for d in indegree::enumerate_indegree(&sub.to_graph(), limits)? {
            out.push(StratumLabel::new(sub.edges, d));
        }
    }
    Ok(out)
}

pub fn enumerate_strata(c: &CurveShape, limits: Limits) -> Result<Vec<StratumLabel>> {
    strata_of_graph(&c.dual_graph, limits)
}

/// `mn(n-1)/2 - |E(G_C)| + |E(G')|`.
pub fn stratum_dimension(c: &CurveShape, s: &StratumLabel) -> Result<usize> {
    s.subgraph(&c.dual_graph)?;
    (c.top_dimension() + s.edges.len())
        .checked_sub(c.dual_graph.edge_count())
        .ok_or_else(|| {
            Error::InvalidShape(format!(
                "stratum {s} would have negative dimension in a family of dimension {}",
                c.top_dimension()
            ))
        })
}

/// Multiplicity of the closure of `s1` along `s2`; zero when `s2` is not in
/// that closure.
pub fn adjacency_multiplicity(c: &CurveShape, s1: &StratumLabel, s2: &StratumLabel) -> Result<BigUint> {
    adjacency_in_graph(&c.dual_graph, s1, s2)
}

fn adjacency_in_graph(g: &Multigraph, s1: &StratumLabel, s2: &StratumLabel) -> Result<BigUint> {
    check_label(g, s1)?;
    check_label(g, s2)?;
    if !s2.edges.is_subset(s1.edges) {
        return Ok(BigUint::zero());
    }
    Ok(count_orientations(
        g,
        s1.edges.difference(s2.edges),
        &(&s1.divisor - &s2.divisor),
    ))
}

/// Neighbourhood of a stratum: a product of `p` nodes and a `q`-dimensional disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalModel {
    pub p: usize,
    pub q: usize,
    /// Strata whose closure contains the base stratum, with the multiplicity
    /// of that closure along it.
    pub census: BTreeMap<StratumLabel, BigUint>,
}

impl LocalModel {
    pub fn total(&self) -> BigUint {
        self.census.values().sum()
    }
}

pub fn local_model(c: &CurveShape, s2: &StratumLabel) -> Result<LocalModel> {
    let g = &c.dual_graph;
    check_label(g, s2)?;
    let q = stratum_dimension(c, s2)?;
    let outside = g.all_edges().difference(s2.edges);
    let mut census: BTreeMap<StratumLabel, BigUint> = BTreeMap::new();
    let extra: Vec<usize> = outside.iter().collect();
    // each extra edge is absent, oriented one way, or the other: 3^p cases
    let mut choice = vec![0u8; extra.len()];
    loop {
        let mut edges = s2.edges;
        let mut d = s2.divisor.clone();
        for (&e, &ch) in extra.iter().zip(&choice) {
            let (u, v) = g.edge(e);
            match ch {
                1 => {
                    edges = edges.with(e);
                    d.0[v] += 1;
                }
                2 => {
                    edges = edges.with(e);
                    d.0[u] += 1;
                }
                _ => {}
            }
        }
        *census.entry(StratumLabel::new(edges, d)).or_default() += 1u32;
        let Some(i) = choice.iter().position(|&ch| ch < 2) else {
            break;
        };
        choice[i] += 1;
        choice[..i].iter_mut().for_each(|ch| *ch = 0);
    }
    Ok(LocalModel {
        p: extra.len(),
        q,
        census,
    })
}

/// The strata `(G_C, D)` of top dimension, one per lattice point of the
/// zonotope of the dual graph.
pub fn irreducible_components(c: &CurveShape, limits: Limits) -> Result<Vec<StratumLabel>> {
    let g = &c.dual_graph;
    Ok(indegree::enumerate_indegree(g, limits)?
        .into_iter()
        .map(|d| StratumLabel::new(g.all_edges(), d))
        .collect())
}

/// The poset of pairs `(G', D)` ordered by closure, with its cover relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrataPoset {
    pub graph: Multigraph,
    pub elements: Vec<StratumLabel>,
    /// `(lower, upper)` index pairs into `elements`.
    pub covers: Vec<(usize, usize)>,
}

impl StrataPoset {
    pub fn index_of(&self, s: &StratumLabel) -> Option<usize> {
        self.elements.binary_search(s).ok()
    }

    /// Elements covering `i`.
    pub fn upper_covers(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let lo = self.covers.partition_point(|c| c.0 < i);
        let hi = self.covers.partition_point(|c| c.0 <= i);
        self.covers[lo..hi].iter().map(|c| c.1)
    }
}

pub fn hasse_diagram(g: &Multigraph, limits: Limits) -> Result<StrataPoset> {
    if g.has_loops() {
        return Err(Error::LoopsPresent);
    }
    let elements = strata_of_graph(g, limits)?;
    let index: HashMap<&StratumLabel, usize> = elements.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut covers = Vec::new();
    for (i, s) in elements.iter().enumerate() {
        for e in g.all_edges().difference(s.edges).iter() {
            let (u, v) = g.edge(e);
            for head in [v, u] {
                let mut d = s.divisor.clone();
                d.0[head] += 1;
                let up = StratumLabel::new(s.edges.with(e), d);
                let j = index[&up];
                covers.push((i, j));
            }
        }
    }
    covers.sort_unstable();
    covers.dedup();
    Ok(StrataPoset {
        graph: g.clone(),
        elements,
        covers,
    })
}

/// Number of cover paths from `s2` up to `s1`, divided by `k!` where `k` is
/// the difference in edge counts.
pub fn path_count_multiplicity(p: &StrataPoset, s1: &StratumLabel, s2: &StratumLabel) -> Result<BigUint> {
    let i1 = p
        .index_of(s1)
        .ok_or_else(|| Error::NotIndegree(s1.divisor.to_string()))?;
    Ok(path_count_multiplicities(p, s2)?.swap_remove(i1))
}

/// [`path_count_multiplicity`] from `s2` to every element at once.
pub fn path_count_multiplicities(p: &StrataPoset, s2: &StratumLabel) -> Result<Vec<BigUint>> {
    let i2 = p
        .index_of(s2)
        .ok_or_else(|| Error::NotIndegree(s2.divisor.to_string()))?;
    let mut paths = vec![BigUint::zero(); p.elements.len()];
    paths[i2] = BigUint::one();
    // every cover adds one edge, so sweeping rank by rank is topological
    let mut frontier = vec![i2];
    let mut k = 0u64;
    let mut factorial = BigUint::one();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &i in &frontier {
            let here = paths[i].clone();
            assert!(
                (&here % &factorial).is_zero(),
                "path count {here} is not divisible by {k}!"
            );
            for j in p.upper_covers(i) {
                if paths[j].is_zero() {
                    next.push(j);
                }
                paths[j] += &here;
            }
            paths[i] = here / &factorial;
        }
        k += 1;
        factorial *= k;
        frontier = next;
    }
    Ok(paths)
}

/// The completely reducible strata, computed two ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrStrata {
    pub strata: Vec<StratumLabel>,
    /// Indices (into the full stratum list) whose divisor classifies as
    /// completely reducible on its subgraph.
    pub by_classification: Vec<usize>,
    /// Indices of strata carrying an indegree of a totally cyclic orientation.
    pub by_totally_cyclic: Vec<usize>,
}

impl CrStrata {
    pub fn labels(&self) -> Vec<&StratumLabel> {
        self.by_classification.iter().map(|&i| &self.strata[i]).collect()
    }
}

pub fn cr_strata(c: &CurveShape, limits: Limits) -> Result<CrStrata> {
    let g = &c.dual_graph;
    let strata = enumerate_strata(c, limits)?;
    let mut by_classification = Vec::new();
    for (i, s) in strata.iter().enumerate() {
        let sub = g.spanning(s.edges);
        if indegree::classify(&sub, &s.divisor, limits)?.is_completely_reducible() {
            by_classification.push(i);
        }
    }
    let mut by_totally_cyclic = Vec::new();
    for (i, s) in strata.iter().enumerate() {
        let sub = g.spanning(s.edges);
        let found = search_orientations(&sub, sub.all_edges(), &s.divisor, |dirs| {
            let dirs: Vec<Direction> = dirs.iter().map(|d| d.expect("full")).collect();
            crate::graph::Orientation::new(&sub, dirs)
                .expect("sized to graph")
                .is_totally_cyclic()
        });
        if found.is_some() {
            by_totally_cyclic.push(i);
        }
    }
    assert_eq!(
        by_classification, by_totally_cyclic,
        "completely reducible strata disagree between the two characterisations"
    );
    Ok(CrStrata {
        strata,
        by_classification,
        by_totally_cyclic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const L: Limits = Limits { max_edges: 20 };

    fn two_lines() -> CurveShape {
        CurveShape::lines(2)
    }

    fn three_lines() -> CurveShape {
        CurveShape::lines(3)
    }

    fn label(bits: u64, d: &[i64]) -> StratumLabel {
        StratumLabel::new(EdgeSet(bits), Divisor(d.to_vec()))
    }

    #[test]
    fn strata_counts() {
        assert_eq!(enumerate_strata(&two_lines(), L).unwrap().len(), 3);
        let c = three_lines();
        let strata = enumerate_strata(&c, L).unwrap();
        assert_eq!(strata.len(), 26);
        let mut by_dim = [0usize; 4];
        for s in &strata {
            by_dim[stratum_dimension(&c, s).unwrap()] += 1;
        }
        assert_eq!(by_dim, [1, 6, 12, 7]);
        let single = CurveShape::new(Multigraph::edgeless(1), 1, 1).unwrap();
        assert_eq!(enumerate_strata(&single, L).unwrap(), vec![label(0, &[0])]);
    }

    #[test]
    fn dimensions() {
        let c = three_lines();
        assert_eq!(stratum_dimension(&c, &label(0b111, &[1, 1, 1])).unwrap(), 3);
        assert_eq!(stratum_dimension(&c, &label(0, &[0, 0, 0])).unwrap(), 0);
        assert_eq!(stratum_dimension(&two_lines(), &label(1, &[0, 1])).unwrap(), 1);
        assert!(CurveShape::new(Multigraph::complete(3), 1, 2).is_err());
    }

    #[test]
    fn adjacency_examples() {
        let c = three_lines();
        let bottom = label(0, &[0, 0, 0]);
        assert_eq!(
            adjacency_multiplicity(&c, &label(0b111, &[1, 1, 1]), &bottom).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(
            adjacency_multiplicity(&c, &label(0b111, &[0, 1, 2]), &bottom).unwrap(),
            BigUint::one()
        );
        let s = label(0b011, &[1, 0, 1]);
        assert_eq!(adjacency_multiplicity(&c, &s, &s).unwrap(), BigUint::one());
        assert_eq!(adjacency_multiplicity(&c, &bottom, &s).unwrap(), BigUint::zero());
    }

    #[test]
    fn local_models() {
        let m = local_model(&two_lines(), &label(0, &[0, 0])).unwrap();
        assert_eq!((m.p, m.q), (1, 0));
        assert_eq!(m.census.len(), 3);
        assert!(m.census.values().all(|v| v.is_one()));

        let c = three_lines();
        let m = local_model(&c, &label(0, &[0, 0, 0])).unwrap();
        assert_eq!(m.p, 3);
        assert_eq!(m.total(), BigUint::from(27u32));
        let top: Vec<_> = m.census.iter().filter(|(s, _)| s.edges.len() == 3).collect();
        assert_eq!(top.len(), 7);
        let disks: BigUint = top.iter().map(|(_, v)| (*v).clone()).sum();
        assert_eq!(disks, BigUint::from(8u32));
        assert_eq!(m.census[&label(0b111, &[1, 1, 1])], BigUint::from(2u32));

        let top_stratum = label(0b111, &[1, 1, 1]);
        let m = local_model(&c, &top_stratum).unwrap();
        assert_eq!(m.p, 0);
        assert_eq!(m.census, BTreeMap::from([(top_stratum, BigUint::one())]));
    }

    #[test]
    fn census_matches_adjacency() {
        let c = three_lines();
        let all = enumerate_strata(&c, L).unwrap();
        for s2 in &all {
            let m = local_model(&c, s2).unwrap();
            for s1 in &all {
                let a = adjacency_multiplicity(&c, s1, s2).unwrap();
                assert_eq!(m.census.get(s1).cloned().unwrap_or_default(), a);
            }
        }
    }

    #[test]
    fn components() {
        assert_eq!(irreducible_components(&three_lines(), L).unwrap().len(), 7);
        assert_eq!(irreducible_components(&CurveShape::lines(4), L).unwrap().len(), 38);
        assert_eq!(irreducible_components(&two_lines(), L).unwrap().len(), 2);
    }

    #[test]
    fn hasse_examples() {
        let e2 = Multigraph::complete(2);
        let p = hasse_diagram(&e2, L).unwrap();
        assert_eq!(p.elements, vec![label(0, &[0, 0]), label(1, &[0, 1]), label(1, &[1, 0])]);
        assert_eq!(p.covers, vec![(0, 1), (0, 2)]);
        let p = hasse_diagram(&Multigraph::edgeless(2), L).unwrap();
        assert_eq!((p.elements.len(), p.covers.len()), (1, 0));
        let looped = Multigraph::from_edges(1, &[(0, 0)]).unwrap();
        assert_eq!(hasse_diagram(&looped, L), Err(Error::LoopsPresent));
    }

    #[test]
    fn path_counts() {
        let k3 = Multigraph::complete(3);
        let p = hasse_diagram(&k3, L).unwrap();
        assert_eq!(p.elements.len(), 26);
        let bottom = label(0, &[0, 0, 0]);
        let top = label(0b111, &[1, 1, 1]);
        assert_eq!(path_count_multiplicity(&p, &top, &bottom).unwrap(), BigUint::from(2u32));
        assert_eq!(path_count_multiplicity(&p, &top, &top).unwrap(), BigUint::one());
        let e2 = Multigraph::complete(2);
        let p = hasse_diagram(&e2, L).unwrap();
        assert_eq!(
            path_count_multiplicity(&p, &label(1, &[0, 1]), &label(0, &[0, 0])).unwrap(),
            BigUint::one()
        );
    }

    #[test]
    fn cr_examples() {
        let cr = cr_strata(&three_lines(), L).unwrap();
        assert_eq!(cr.labels(), vec![&label(0, &[0, 0, 0]), &label(0b111, &[1, 1, 1])]);
        let cr = cr_strata(&two_lines(), L).unwrap();
        assert_eq!(cr.labels(), vec![&label(0, &[0, 0])]);
        let c = CurveShape::new(Multigraph::edgeless(3), 1, 1).unwrap();
        assert_eq!(cr_strata(&c, L).unwrap().labels(), vec![&label(0, &[0, 0, 0])]);
    }

    #[test]
    fn pointwise_order_is_not_sufficient() {
        let c = CurveShape::lines(4);
        let s1 = label(0b111111, &[2, 2, 1, 1]);
        let s2 = label(0b001011, &[0, 2, 1, 0]);
        assert!(s2.divisor.le(&s1.divisor) && s2.edges.is_subset(s1.edges));
        assert_eq!(adjacency_multiplicity(&c, &s1, &s2).unwrap(), BigUint::zero());
    }
}
