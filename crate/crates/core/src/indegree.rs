//! Indegree divisors.
//!
//! A divisor `D` on a graph is an indegree divisor when some orientation has
//! exactly `D(v)` edges pointing at every vertex `v`. Three independent
//! deciders are provided (brute-force orientation search, a bipartite max-flow,
//! and the subset inequalities `D(S) >= e(S)`), together with the generating
//! polynomial `B = prod_edges (x_u + x_v)` whose coefficients are the
//! multiplicities, and the irreducible / completely reducible classification.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::{
    Direction, Divisor, EdgeSet, Limits, Multigraph, Orientation, PartialOrientation, Subgraph,
};
use crate::poly::IntPoly;
use crate::zonotope;

/// Decision procedure for [`is_indegree`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Walk all `2^|E|` orientations.
    Enumerate,
    /// Source -> edge -> endpoint -> sink network with vertex capacities `D(v)`.
    Flow,
    /// `|D| = |E|` and `D(S) >= e(S)` for every vertex subset `S`.
    Inequalities,
}

/// Returns an orientation with indegree `d` if there is one.
pub fn is_indegree<'g>(
    g: &'g Multigraph,
    d: &Divisor,
    method: Method,
    limits: Limits,
) -> Result<Option<Orientation<'g>>> {
    g.check_divisor(d)?;
    if d.has_negative() {
        return Ok(None);
    }
    match method {
        Method::Enumerate => by_enumeration(g, d, limits),
        Method::Flow => Ok(by_flow(g, d)),
        Method::Inequalities => by_inequalities(g, d, limits),
    }
}

/// Flow-based membership test; never hits a cap.
pub fn is_indegree_divisor(g: &Multigraph, d: &Divisor) -> Result<bool> {
    Ok(is_indegree(g, d, Method::Flow, Limits::default())?.is_some())
}

fn by_enumeration<'g>(g: &'g Multigraph, d: &Divisor, limits: Limits) -> Result<Option<Orientation<'g>>> {
    limits.check("orientations", g.edge_count())?;
    if d.degree() != g.edge_count() as i64 {
        return Ok(None);
    }
    let n = g.vertex_count();
    let edges = g.edges();
    let mut indeg = vec![0i64; n];
    for mask in 0..1u64 << edges.len() {
        indeg.iter_mut().for_each(|x| *x = 0);
        for (e, &(u, v)) in edges.iter().enumerate() {
            indeg[if mask >> e & 1 == 1 { u } else { v }] += 1;
        }
        if indeg == d.values() {
            return Ok(Some(Orientation::from_mask(g, mask)));
        }
    }
    Ok(None)
}

fn by_flow<'g>(g: &'g Multigraph, d: &Divisor) -> Option<Orientation<'g>> {
    let (m, n) = (g.edge_count(), g.vertex_count());
    if d.degree() != m as i64 {
        return None;
    }
    let source = 0;
    let sink = 1 + m + n;
    let vertex_node = |v: usize| 1 + m + v;
    let mut net = FlowNetwork::new(sink + 1);
    let mut to_head = Vec::with_capacity(m);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        net.add_arc(source, 1 + e, 1);
        let to_u = net.add_arc(1 + e, vertex_node(u), 1);
        let to_v = (u != v).then(|| net.add_arc(1 + e, vertex_node(v), 1));
        to_head.push((to_u, to_v));
    }
    for v in 0..n {
        net.add_arc(vertex_node(v), sink, d[v]);
    }
    if net.max_flow(source, sink) != m as i64 {
        return None;
    }
    let dirs = to_head
        .iter()
        .map(|&(to_u, to_v)| match to_v {
            Some(to_v) if net.flow_on(to_v) == 1 => Direction::Forward,
            Some(_) => {
                debug_assert_eq!(net.flow_on(to_u), 1);
                Direction::Backward
            }
            None => Direction::Forward,
        })
        .collect();
    Some(Orientation::new(g, dirs).expect("one direction per edge"))
}

fn by_inequalities<'g>(g: &'g Multigraph, d: &Divisor, limits: Limits) -> Result<Option<Orientation<'g>>> {
    limits.check("vertex subsets", g.vertex_count())?;
    if !satisfies_inequalities(g, d, limits)? {
        return Ok(None);
    }
    // Self-reduction: orient edges one at a time, keeping the rest feasible.
    let mut residual = d.clone();
    let mut dirs = Vec::with_capacity(g.edge_count());
    for e in 0..g.edge_count() {
        let (u, v) = g.edge(e);
        let rest = Multigraph::from_edges(g.vertex_count(), &g.edges()[e + 1..])
            .expect("endpoints already validated");
        let mut forward = residual.clone();
        forward.0[v] -= 1;
        if !forward.has_negative() && satisfies_inequalities(&rest, &forward, limits)? {
            dirs.push(Direction::Forward);
            residual = forward;
        } else {
            residual.0[u] -= 1;
            debug_assert!(satisfies_inequalities(&rest, &residual, limits)?);
            dirs.push(Direction::Backward);
        }
    }
    Ok(Some(Orientation::new(g, dirs)?))
}

/// `|D| = |E|` and `D(S) >= e(S)` for every vertex subset `S`, where `e(S)`
/// counts edges (loops included) with both ends in `S`.
///
/// Only vertex-induced subgraphs are checked: the inequality for any other
/// subgraph on the same vertices is weaker.
pub fn satisfies_inequalities(g: &Multigraph, d: &Divisor, limits: Limits) -> Result<bool> {
    g.check_divisor(d)?;
    limits.check("vertex subsets", g.vertex_count())?;
    if d.degree() != g.edge_count() as i64 {
        return Ok(false);
    }
    for s in 1..1u64 << g.vertex_count() {
        if d.degree_on(s) < g.induced_edge_count(s) as i64 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The same inequalities quantified over every subgraph `(V(F), F)` spanned
/// by an edge subset `F`, plus `D(v) >= 0`. Exposed to audit the induced-subgraph
/// reduction used by [`satisfies_inequalities`].
pub fn satisfies_all_subgraph_inequalities(g: &Multigraph, d: &Divisor, limits: Limits) -> Result<bool> {
    g.check_divisor(d)?;
    limits.check("edge subsets", g.edge_count())?;
    if d.degree() != g.edge_count() as i64 || d.has_negative() {
        return Ok(false);
    }
    for f in 1..1u64 << g.edge_count() {
        let span = EdgeSet(f)
            .iter()
            .fold(0u64, |acc, e| {
                let (u, v) = g.edge(e);
                acc | 1 << u | 1 << v
            });
        if d.degree_on(span) < EdgeSet(f).len() as i64 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The expanded product `prod_{[u,v] in E} (x_u + x_v)`; a loop contributes `2 x_u`.
///
/// Coefficients are the multiplicities, the support is the set of indegree
/// divisors, every exponent vector sums to `|E|` and the coefficients sum to
/// `2^|E|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndegPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigUint>,
}

impl IndegPolynomial {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigUint> {
        &self.terms
    }

    pub fn coeff(&self, d: &Divisor) -> BigUint {
        if d.has_negative() || d.len() != self.nvars {
            return BigUint::zero();
        }
        let key: Vec<u32> = d.values().iter().map(|&x| x as u32).collect();
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    /// Exponent vectors as divisors, lexicographically sorted.
    pub fn support(&self) -> Vec<Divisor> {
        self.terms
            .keys()
            .map(|e| Divisor(e.iter().map(|&x| x as i64).collect()))
            .collect()
    }

    pub fn coefficient_sum(&self) -> BigUint {
        self.terms.values().sum()
    }

    pub fn to_int_poly(&self) -> IntPoly {
        self.terms.iter().fold(IntPoly::zero(self.nvars), |acc, (e, c)| {
            &acc + &IntPoly::monomial(self.nvars, e.clone(), c.clone().into())
        })
    }
}

impl fmt::Display for IndegPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_int_poly().fmt(f)
    }
}

pub fn b_polynomial(g: &Multigraph, limits: Limits) -> Result<IndegPolynomial> {
    limits.check("edges", g.edge_count())?;
    let n = g.vertex_count();
    let mut terms = BTreeMap::from([(vec![0u32; n], BigUint::one())]);
    for &(u, v) in g.edges() {
        let mut next: BTreeMap<Vec<u32>, BigUint> = BTreeMap::new();
        for (e, c) in &terms {
            for head in [u, v] {
                let mut e = e.clone();
                e[head] += 1;
                *next.entry(e).or_default() += c;
            }
        }
        terms = next;
    }
    Ok(IndegPolynomial { nvars: n, terms })
}

/// All indegree divisors in lexicographic order.
pub fn enumerate_indegree(g: &Multigraph, limits: Limits) -> Result<Vec<Divisor>> {
    Ok(b_polynomial(g, limits)?.support())
}

/// Number of orientations with indegree `d`; zero when `d` is not an
/// indegree divisor.
pub fn multiplicity(g: &Multigraph, d: &Divisor) -> Result<BigUint> {
    g.check_divisor(d)?;
    Ok(count_orientations(g, g.all_edges(), d))
}

/// Number of ways to orient the edges in `edges` so that exactly `target(v)`
/// of them point at each `v`.
pub(crate) fn count_orientations(g: &Multigraph, edges: EdgeSet, target: &Divisor) -> BigUint {
    let list: Vec<(usize, usize)> = edges.iter().map(|e| g.edge(e)).collect();
    if target.has_negative() || target.degree() != list.len() as i64 {
        return BigUint::zero();
    }
    // remaining[i][v]: edges from position i on that can still point at v
    let n = g.vertex_count();
    let mut remaining = vec![vec![0i64; n]; list.len() + 1];
    for i in (0..list.len()).rev() {
        remaining[i] = remaining[i + 1].clone();
        let (u, v) = list[i];
        remaining[i][u] += 1;
        if u != v {
            remaining[i][v] += 1;
        }
    }
    let mut memo = HashMap::new();
    count_rec(&list, &remaining, 0, &mut target.0.clone(), &mut memo)
}

fn count_rec(
    list: &[(usize, usize)],
    remaining: &[Vec<i64>],
    i: usize,
    residual: &mut Vec<i64>,
    memo: &mut HashMap<(usize, Vec<i64>), BigUint>,
) -> BigUint {
    if residual
        .iter()
        .zip(&remaining[i])
        .any(|(&r, &cap)| r < 0 || r > cap)
    {
        return BigUint::zero();
    }
    if i == list.len() {
        return BigUint::one();
    }
    let key = (i, residual.clone());
    if let Some(c) = memo.get(&key) {
        return c.clone();
    }
    let (u, v) = list[i];
    let mut total = BigUint::zero();
    if u == v {
        residual[u] -= 1;
        total += count_rec(list, remaining, i + 1, residual, memo) * 2u32;
        residual[u] += 1;
    } else {
        for head in [v, u] {
            residual[head] -= 1;
            total += count_rec(list, remaining, i + 1, residual, memo);
            residual[head] += 1;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// Depth-first search over orientations of `edges` whose heads realise
/// `target`; calls `accept` on each complete one and stops at the first `true`.
pub(crate) fn search_orientations(
    g: &Multigraph,
    edges: EdgeSet,
    target: &Divisor,
    mut accept: impl FnMut(&[Option<Direction>]) -> bool,
) -> Option<Vec<Option<Direction>>> {
    let list: Vec<usize> = edges.iter().collect();
    if target.has_negative() || target.degree() != list.len() as i64 {
        return None;
    }
    let mut remaining = vec![0i64; g.vertex_count()];
    for &e in &list {
        let (u, v) = g.edge(e);
        remaining[u] += 1;
        if u != v {
            remaining[v] += 1;
        }
    }
    let mut dirs = vec![None; g.edge_count()];
    let mut residual = target.0.clone();
    fn rec(
        g: &Multigraph,
        list: &[usize],
        i: usize,
        residual: &mut [i64],
        remaining: &mut [i64],
        dirs: &mut [Option<Direction>],
        accept: &mut dyn FnMut(&[Option<Direction>]) -> bool,
    ) -> bool {
        if residual.iter().zip(remaining.iter()).any(|(&r, &c)| r < 0 || r > c) {
            return false;
        }
        if i == list.len() {
            return accept(dirs);
        }
        let e = list[i];
        let (u, v) = g.edge(e);
        remaining[u] -= 1;
        if u != v {
            remaining[v] -= 1;
        }
        let choices: &[(Direction, usize)] = if u == v {
            &[(Direction::Forward, u), (Direction::Backward, u)]
        } else {
            &[(Direction::Forward, v), (Direction::Backward, u)]
        };
        let mut found = false;
        for &(dir, head) in choices {
            residual[head] -= 1;
            dirs[e] = Some(dir);
            found = rec(g, list, i + 1, residual, remaining, dirs, accept);
            residual[head] += 1;
            if found {
                break;
            }
        }
        if !found {
            dirs[e] = None;
        }
        remaining[u] += 1;
        if u != v {
            remaining[v] += 1;
        }
        found
    }
    rec(
        g,
        &list,
        0,
        &mut residual,
        &mut remaining,
        &mut dirs,
        &mut accept,
    )
    .then_some(dirs)
}

/// Some orientation with indegree `d` satisfying `pred`, found by pruned search.
pub fn find_witness<'g>(
    g: &'g Multigraph,
    d: &Divisor,
    mut pred: impl FnMut(&Orientation<'g>) -> bool,
) -> Result<Option<Orientation<'g>>> {
    g.check_divisor(d)?;
    let found = search_orientations(g, g.all_edges(), d, |dirs| {
        let o = Orientation::new(g, dirs.iter().map(|d| d.expect("full")).collect())
            .expect("one direction per edge");
        pred(&o)
    });
    Ok(found.map(|dirs| {
        Orientation::new(g, dirs.into_iter().map(|d| d.expect("full")).collect())
            .expect("one direction per edge")
    }))
}

/// One plus the number of nonempty edge subsets that are balanced under `o`
/// (in-degree equals out-degree at every vertex within the subset).
///
/// Reversing such a subset gives another orientation with the same indegree,
/// so this equals [`multiplicity`] of `o.indeg()` by an independent route.
pub fn circuit_count_check(o: &Orientation<'_>, limits: Limits) -> Result<BigUint> {
    let g = o.graph();
    limits.check("edge subsets", g.edge_count())?;
    let n = g.vertex_count();
    let arcs: Vec<(usize, usize)> = (0..g.edge_count()).map(|e| (o.tail(e), o.head(e))).collect();
    let mut count: u64 = 1;
    let mut balance = vec![0i64; n];
    for f in 1..1u64 << arcs.len() {
        balance.iter_mut().for_each(|b| *b = 0);
        for e in EdgeSet(f).iter() {
            let (t, h) = arcs[e];
            balance[t] -= 1;
            balance[h] += 1;
        }
        if balance.iter().all(|&b| b == 0) {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}

/// `mult(G1, D1 | G2, D2)`: the number of orientations of the edges of `g1`
/// outside `g2` whose indegree is `d1 - d2`.
pub fn relative_multiplicity(
    g1: &Subgraph<'_>,
    d1: &Divisor,
    g2: &Subgraph<'_>,
    d2: &Divisor,
) -> Result<BigUint> {
    if !g2.is_subgraph_of(g1) {
        return Err(Error::NotNested);
    }
    let parent = g1.parent;
    parent.check_divisor(d1)?;
    parent.check_divisor(d2)?;
    for (sub, d) in [(g1, d1), (g2, d2)] {
        if !is_indegree_divisor(&sub.to_graph(), d)? {
            return Err(Error::NotIndegree(d.to_string()));
        }
    }
    Ok(count_orientations(parent, g1.edges.difference(g2.edges), &(d1 - d2)))
}

/// Partial orientations of `g1 \ g2` realising `d1 - d2`, in search order.
pub fn relative_witnesses<'g>(
    g1: &Subgraph<'g>,
    d1: &Divisor,
    g2: &Subgraph<'g>,
    d2: &Divisor,
) -> Result<Vec<PartialOrientation<'g>>> {
    if !g2.is_subgraph_of(g1) {
        return Err(Error::NotNested);
    }
    let parent = g1.parent;
    let mut out = Vec::new();
    search_orientations(parent, g1.edges.difference(g2.edges), &(d1 - d2), |dirs| {
        out.push(PartialOrientation::new(parent, dirs.to_vec()).expect("sized to graph"));
        false
    });
    Ok(out)
}

/// `deg(G) - D`; the central symmetry of the graphical zonotope.
pub fn tau(g: &Multigraph, d: &Divisor) -> Result<Divisor> {
    g.check_divisor(d)?;
    Ok(&g.degree_divisor() - d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassTag {
    NotIndegree,
    /// Irreducible divisors are in particular completely reducible; this tag
    /// takes precedence.
    Irreducible,
    CompletelyReducible,
    ReducibleNotCR,
}

impl ClassTag {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassTag::NotIndegree => "not_indegree",
            ClassTag::Irreducible => "irreducible",
            ClassTag::CompletelyReducible => "completely_reducible",
            ClassTag::ReducibleNotCR => "reducible_not_cr",
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of [`classify`]: the tag plus a witness orientation with indegree
/// `D` (strongly connected for `Irreducible`, totally cyclic for
/// `CompletelyReducible`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorClass<'g> {
    pub tag: ClassTag,
    pub witness: Option<Orientation<'g>>,
}

impl DivisorClass<'_> {
    pub fn is_indegree(&self) -> bool {
        self.tag != ClassTag::NotIndegree
    }

    pub fn is_irreducible(&self) -> bool {
        self.tag == ClassTag::Irreducible
    }

    pub fn is_completely_reducible(&self) -> bool {
        matches!(self.tag, ClassTag::Irreducible | ClassTag::CompletelyReducible)
    }
}

/// `D(S) > e(S)` for every proper nonempty vertex subset `S`.
pub fn strict_inequalities(g: &Multigraph, d: &Divisor, limits: Limits) -> Result<bool> {
    g.check_divisor(d)?;
    limits.check("vertex subsets", g.vertex_count())?;
    let full = (1u64 << g.vertex_count()) - 1;
    Ok((1..full).all(|s| d.degree_on(s) > g.induced_edge_count(s) as i64))
}

/// Strict inequalities inside every connected component.
fn strict_per_component(g: &Multigraph, d: &Divisor, limits: Limits) -> Result<bool> {
    for mask in g.component_masks() {
        if !strict_inequalities(&g.induced(mask), &d.restrict(mask), limits)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn classify<'g>(g: &'g Multigraph, d: &Divisor, limits: Limits) -> Result<DivisorClass<'g>> {
    g.check_divisor(d)?;
    let Some(any_witness) = is_indegree(g, d, Method::Flow, limits)? else {
        return Ok(DivisorClass {
            tag: ClassTag::NotIndegree,
            witness: None,
        });
    };
    let irreducible = g.is_connected() && strict_inequalities(g, d, limits)?;
    let cr = irreducible || strict_per_component(g, d, limits)?;
    let class = if cr {
        let witness = find_witness(g, d, |o| o.is_totally_cyclic())?
            .expect("completely reducible divisors have a totally cyclic witness");
        DivisorClass {
            tag: if irreducible {
                ClassTag::Irreducible
            } else {
                ClassTag::CompletelyReducible
            },
            witness: Some(witness),
        }
    } else {
        DivisorClass {
            tag: ClassTag::ReducibleNotCR,
            witness: Some(any_witness),
        }
    };
    if cfg!(debug_assertions) && g.edge_count() <= 8 && g.vertex_count() <= 6 {
        let small = Limits::new(16);
        let ir = irreducibility_criteria(g, d, small)?;
        debug_assert!(ir.all_agree(), "irreducibility criteria disagree: {ir:?}");
        debug_assert_eq!(ir.strict_inequalities, irreducible);
        let crc = complete_reducibility_criteria(g, d, small)?;
        debug_assert!(crc.all_agree(), "complete reducibility criteria disagree: {crc:?}");
        debug_assert_eq!(crc.totally_cyclic_witness, cr);
    }
    Ok(class)
}

/// The four equivalent characterisations of an irreducible indegree divisor,
/// each evaluated on its own.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IrreducibilityCriteria {
    /// (a) no proper nonempty subgraph carries the restriction of `D` as an
    /// indegree divisor.
    pub no_indegree_restriction: bool,
    /// (b) `D(S) > e(S)` on every proper nonempty vertex subset.
    pub strict_inequalities: bool,
    /// (c) some strongly connected orientation has indegree `D`.
    pub strongly_connected_witness: bool,
    /// (d) the graph is connected and `D` is a relative interior point of the
    /// zonotope.
    pub connected_interior: bool,
}

impl IrreducibilityCriteria {
    pub fn all_agree(&self) -> bool {
        let a = self.no_indegree_restriction;
        a == self.strict_inequalities && a == self.strongly_connected_witness && a == self.connected_interior
    }
}

/// Evaluates every irreducibility criterion by exhaustive search. `d` must be
/// an indegree divisor.
pub fn irreducibility_criteria(g: &Multigraph, d: &Divisor, limits: Limits) -> Result<IrreducibilityCriteria> {
    if !is_indegree_divisor(g, d)? {
        return Err(Error::NotIndegree(d.to_string()));
    }
    limits.check("orientations", g.edge_count())?;
    let n = g.vertex_count();
    let full = (1u64 << n) - 1;

    // (a): some proper S carries a set of its edges oriented with indegree D|S
    let mut restriction_found = false;
    for s in 1..full {
        if has_partial_realisation(&g.induced(s), &d.restrict(s)) {
            restriction_found = true;
            break;
        }
    }

    let strongly_connected = Orientation::all(g, limits)?
        .any(|o| o.indeg() == *d && o.is_strongly_connected());

    Ok(IrreducibilityCriteria {
        no_indegree_restriction: !restriction_found,
        strict_inequalities: strict_inequalities(g, d, limits)?,
        strongly_connected_witness: strongly_connected,
        connected_interior: g.is_connected() && zonotope::is_relative_interior(g, d, limits)?,
    })
}

/// Whether some subset of the edges can be oriented with indegree exactly `d`,
/// i.e. a flow saturating every vertex capacity `d(v)`.
fn has_partial_realisation(g: &Multigraph, d: &Divisor) -> bool {
    if d.has_negative() {
        return false;
    }
    let (m, n) = (g.edge_count(), g.vertex_count());
    let (source, sink) = (0, 1 + m + n);
    let mut net = FlowNetwork::new(sink + 1);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        net.add_arc(source, 1 + e, 1);
        net.add_arc(1 + e, 1 + m + u, 1);
        if u != v {
            net.add_arc(1 + e, 1 + m + v, 1);
        }
    }
    for v in 0..n {
        net.add_arc(1 + m + v, sink, d[v]);
    }
    net.max_flow(source, sink) == d.degree()
}

/// The three equivalent characterisations of a completely reducible
/// indegree divisor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompleteReducibilityCriteria {
    /// (a) the restriction to every connected component is irreducible.
    pub components_irreducible: bool,
    /// (b) some totally cyclic orientation has indegree `D`.
    pub totally_cyclic_witness: bool,
    /// (c) `D` is a relative interior point of the zonotope.
    pub interior_point: bool,
}

impl CompleteReducibilityCriteria {
    pub fn all_agree(&self) -> bool {
        self.components_irreducible == self.totally_cyclic_witness
            && self.components_irreducible == self.interior_point
    }
}

pub fn complete_reducibility_criteria(
    g: &Multigraph,
    d: &Divisor,
    limits: Limits,
) -> Result<CompleteReducibilityCriteria> {
    if !is_indegree_divisor(g, d)? {
        return Err(Error::NotIndegree(d.to_string()));
    }
    let mut components_irreducible = true;
    for mask in g.component_masks() {
        let sub = g.induced(mask);
        let crit = irreducibility_criteria(&sub, &d.restrict(mask), limits)?;
        components_irreducible &= crit.strongly_connected_witness;
    }
    let totally_cyclic = Orientation::all(g, limits)?.any(|o| o.indeg() == *d && o.is_totally_cyclic());
    Ok(CompleteReducibilityCriteria {
        components_irreducible,
        totally_cyclic_witness: totally_cyclic,
        interior_point: zonotope::is_relative_interior(g, d, limits)?,
    })
}
