//! The acceptance criteria, one test each. Expected values are either
//! known published values or produced by an independent oracle in
//! this file.

mod common;

use std::collections::{BTreeMap, HashMap};
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{d, divisor_box, family};
use nodal_strata::indegree::{self, Method};
use nodal_strata::matpoly::{
    self, char_poly, check_leading_condition, classify_polynomial, cubic_point_from_parameter, find_cubic_point,
    reducibility, sample_stratum, MatrixPolynomial, Reducibility, SpectralLineArrangement, Q,
};
use nodal_strata::strata::{self, CurveShape, StratumLabel};
use nodal_strata::zonotope::{self, GraphicalZonotope};
use nodal_strata::{ClassTag, Divisor, EdgeSet, IntPoly, Limits, Multigraph, Orientation, Subgraph};

const L: Limits = Limits { max_edges: 20 };

fn report(n: u32, what: &str, start: Instant, bound: Option<Duration>) {
    let elapsed = start.elapsed();
    println!("criterion {n}: PASS {what} ({elapsed:.2?})");
    if let Some(bound) = bound {
        assert!(elapsed < bound, "criterion {n} took {elapsed:?}, bound {bound:?}");
    }
}

fn q(x: i64) -> Q {
    Q::from_integer(x.into())
}

#[test]
fn criterion_01_triangle_suite() {
    let start = Instant::now();
    let k3 = Multigraph::complete(3);
    let mut expected = vec![d(&[1, 1, 1])];
    for p in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
        expected.push(d(&p));
    }
    expected.sort();
    assert_eq!(indegree::enumerate_indegree(&k3, L).unwrap(), expected);

    // x1^2 x2 + x1 x2^2 + x1^2 x3 + x1 x3^2 + x2^2 x3 + x2 x3^2 + 2 x1 x2 x3
    let quoted: BTreeMap<Vec<u32>, BigUint> = [
        (vec![2, 1, 0], 1u32),
        (vec![1, 2, 0], 1),
        (vec![2, 0, 1], 1),
        (vec![1, 0, 2], 1),
        (vec![0, 2, 1], 1),
        (vec![0, 1, 2], 1),
        (vec![1, 1, 1], 2),
    ]
    .into_iter()
    .map(|(e, c)| (e, BigUint::from(c)))
    .collect();
    assert_eq!(indegree::b_polynomial(&k3, L).unwrap().terms(), &quoted);
    assert_eq!(indegree::multiplicity(&k3, &d(&[1, 1, 1])).unwrap(), BigUint::from(2u32));
    report(1, "triangle: 7 indegree divisors, B term-for-term, mult(1,1,1) = 2", start, Some(Duration::from_secs(1)));
}

#[test]
fn criterion_02_permutohedron_counts() {
    let start = Instant::now();
    let counts: Vec<usize> = (1..=5)
        .map(|n| zonotope::lattice_points(&Multigraph::complete(n), L).unwrap().len())
        .collect();
    assert_eq!(counts, [1, 2, 7, 38, 291]);
    let z = GraphicalZonotope::permutohedron(5, L).unwrap();
    assert_eq!(z.points.len(), 291);
    report(2, "lattice points of K1..K5: 1, 2, 7, 38, 291", start, Some(Duration::from_secs(30)));
}

fn vandermonde(n: usize, power: u32) -> IntPoly {
    let mut v = IntPoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            let diff = &IntPoly::var_pow(n, i, power) - &IntPoly::var_pow(n, j, power);
            v = &v * &diff;
        }
    }
    v
}

#[test]
fn criterion_03_schur_identity() {
    let start = Instant::now();
    for n in 2..=5 {
        let b = indegree::b_polynomial(&Multigraph::complete(n), L).unwrap().to_int_poly();
        assert_eq!(&b * &vandermonde(n, 1), vandermonde(n, 2), "n = {n}");
    }
    report(3, "B(K_n) V(x) = V(x^2) for n = 2..5", start, Some(Duration::from_secs(30)));
}

#[test]
fn criterion_04_oracle_equivalence() {
    let start = Instant::now();
    let graphs = family(4, 6);
    assert_eq!(graphs.len(), 7 + 84 + 924 + 8008);
    let mut divisors_checked = 0u64;
    for g in &graphs {
        let m = g.edge_count() as i64;
        for dv in divisor_box(g.vertex_count(), m) {
            let by_enum = indegree::is_indegree(g, &dv, Method::Enumerate, L).unwrap();
            let by_flow = indegree::is_indegree(g, &dv, Method::Flow, L).unwrap();
            let by_ineq = indegree::is_indegree(g, &dv, Method::Inequalities, L).unwrap();
            assert_eq!(by_enum.is_some(), by_flow.is_some(), "{g:?} {dv}");
            assert_eq!(by_enum.is_some(), by_ineq.is_some(), "{g:?} {dv}");
            for w in [by_enum, by_flow, by_ineq].into_iter().flatten() {
                assert_eq!(w.indeg(), dv);
            }
            divisors_checked += 1;
        }
        assert_eq!(
            zonotope::lattice_points(g, L).unwrap(),
            indegree::enumerate_indegree(g, L).unwrap(),
            "{g:?}"
        );
    }
    println!("criterion 4: {} graphs, {divisors_checked} divisors", graphs.len());
    report(
        4,
        "Enumerate = Flow = Inequalities and lattice points = InDeg on the family",
        start,
        Some(Duration::from_secs(300)),
    );
}

#[test]
fn criterion_05_multiplicity_oracles() {
    let start = Instant::now();
    let graphs = family(4, 6);
    for g in &graphs {
        for o in Orientation::all(g, L).unwrap() {
            assert_eq!(
                indegree::circuit_count_check(&o, L).unwrap(),
                indegree::multiplicity(g, &o.indeg()).unwrap(),
                "{g:?}"
            );
        }
    }

    // K4 with v1, v2 the bottom corners, v3 the apex and v4 the centre
    let k4 = Multigraph::complete(4);
    let full = Subgraph::full(&k4);
    let bottom = Subgraph::new(&k4, EdgeSet::from_indices([0])).unwrap();
    assert_eq!(
        indegree::relative_multiplicity(&full, &d(&[1, 1, 2, 2]), &bottom, &d(&[0, 1, 0, 0])).unwrap(),
        BigUint::from(2u32)
    );
    let outer = Subgraph::new(&k4, EdgeSet::from_indices([0, 1, 3])).unwrap();
    assert_eq!(
        indegree::relative_multiplicity(&full, &d(&[2, 2, 1, 1]), &outer, &d(&[0, 2, 1, 0])).unwrap(),
        BigUint::zero()
    );

    let mut pairs = 0u64;
    for g in graphs.iter().filter(|g| !g.has_loops()) {
        let p = strata::hasse_diagram(g, L).unwrap();
        // relative multiplicity depends only on the extra edges and D1 - D2
        let mut rel: HashMap<(EdgeSet, Divisor), BigUint> = HashMap::new();
        for s2 in &p.elements {
            let counts = strata::path_count_multiplicities(&p, s2).unwrap();
            for (s1, by_paths) in p.elements.iter().zip(&counts) {
                if !s2.edges.is_subset(s1.edges) || !s2.divisor.le(&s1.divisor) {
                    assert!(by_paths.is_zero());
                    continue;
                }
                let key = (s1.edges.difference(s2.edges), &s1.divisor - &s2.divisor);
                let expected = rel.entry(key).or_insert_with(|| {
                    let g1 = Subgraph::new(g, s1.edges).unwrap();
                    let g2 = Subgraph::new(g, s2.edges).unwrap();
                    indegree::relative_multiplicity(&g1, &s1.divisor, &g2, &s2.divisor).unwrap()
                });
                assert_eq!(by_paths, expected, "{g:?} {s1} over {s2}");
                pairs += 1;
            }
        }
    }
    println!("criterion 5: {pairs} comparable pairs checked against path counts");
    report(5, "circuit counts, K4 relative multiplicities 2 and 0, Hasse path counts", start, None);
}

#[test]
fn criterion_06_classification_equivalences() {
    let start = Instant::now();
    let mut checked = 0u64;
    for g in family(4, 6).iter().filter(|g| g.is_connected()) {
        for dv in indegree::enumerate_indegree(g, L).unwrap() {
            let ir = indegree::irreducibility_criteria(g, &dv, L).unwrap();
            assert!(ir.all_agree(), "{g:?} {dv} {ir:?}");
            let cr = indegree::complete_reducibility_criteria(g, &dv, L).unwrap();
            assert!(cr.all_agree(), "{g:?} {dv} {cr:?}");
            let class = indegree::classify(g, &dv, L).unwrap();
            assert_eq!(class.is_irreducible(), ir.strongly_connected_witness);
            assert_eq!(class.is_completely_reducible(), cr.totally_cyclic_witness);
            checked += 1;
        }
    }
    println!("criterion 6: {checked} (graph, divisor) pairs");
    report(6, "irreducibility (a)-(d) and complete reducibility (a)-(c) agree", start, None);
}

#[test]
fn criterion_07_strata_censuses() {
    let start = Instant::now();
    let c = CurveShape::lines(3);
    let all = strata::enumerate_strata(&c, L).unwrap();
    assert_eq!(all.len(), 26);
    let mut profile = BTreeMap::new();
    for s in &all {
        *profile.entry(strata::stratum_dimension(&c, s).unwrap()).or_insert(0) += 1;
    }
    assert_eq!(profile, BTreeMap::from([(3, 7), (2, 12), (1, 6), (0, 1)]));
    let base = StratumLabel::new(EdgeSet::EMPTY, d(&[0, 0, 0]));
    let local = strata::local_model(&c, &base).unwrap();
    assert_eq!(local.total(), BigUint::from(27u32));
    let mut top: Vec<u32> = local
        .census
        .iter()
        .filter(|(s, _)| strata::stratum_dimension(&c, s).unwrap() == 3)
        .map(|(_, m)| u32::try_from(m).unwrap())
        .collect();
    top.sort();
    assert_eq!(top, [1, 1, 1, 1, 1, 1, 2]);
    assert_eq!(top.iter().sum::<u32>(), 8);

    let mut strata_checked = 0u64;
    for g in family(4, 6) {
        let shape = CurveShape::new(g.clone(), g.edge_count().max(1), g.vertex_count().max(2)).unwrap();
        let mut by_edges: HashMap<EdgeSet, Vec<Divisor>> = HashMap::new();
        for s in strata::enumerate_strata(&shape, L).unwrap() {
            by_edges.entry(s.edges).or_default().push(s.divisor);
        }
        // the adjacency multiplicity depends only on the extra edges and D1 - D2
        let mut memo: HashMap<(EdgeSet, Divisor), BigUint> = HashMap::new();
        let full = g.all_edges();
        for (&e2, divisors) in &by_edges {
            let outside = full.difference(e2).0;
            let p = outside.count_ones();
            for d2 in divisors {
                let s2 = StratumLabel::new(e2, d2.clone());
                let mut sum = BigUint::zero();
                let mut extra = outside;
                loop {
                    let e1 = EdgeSet(e2.0 | extra);
                    for d1 in by_edges.get(&e1).into_iter().flatten().filter(|d1| d2.le(d1)) {
                        let key = (EdgeSet(extra), d1 - d2);
                        sum += &*memo.entry(key).or_insert_with(|| {
                            let s1 = StratumLabel::new(e1, d1.clone());
                            strata::adjacency_multiplicity(&shape, &s1, &s2).unwrap()
                        });
                    }
                    if extra == 0 {
                        break;
                    }
                    extra = (extra - 1) & outside;
                }
                assert_eq!(sum, BigUint::from(3u32).pow(p), "{g:?} at {s2}");
                strata_checked += 1;
            }
        }
    }
    println!("criterion 7: 3^p census checked at {strata_checked} strata");
    report(7, "26 strata (7, 12, 6, 1), 27 local strata with 8 disks, 3^p census", start, None);
}

fn two_lines() -> SpectralLineArrangement {
    SpectralLineArrangement::from_ints(&[(0, 1), (1, 2)]).unwrap()
}

fn three_lines() -> SpectralLineArrangement {
    SpectralLineArrangement::from_ints(&[(0, 1), (1, 2), (3, -1)]).unwrap()
}

/// `diag(a) + lambda diag(b)` with the given off-diagonal constants.
fn with_offdiagonal(c: &SpectralLineArrangement, entries: &[((usize, usize), Q)]) -> MatrixPolynomial {
    let n = c.len();
    let mut a = vec![vec![q(0); n]; n];
    let mut b = vec![vec![q(0); n]; n];
    for (i, (ai, bi)) in c.lines().iter().enumerate() {
        a[i][i] = ai.clone();
        b[i][i] = bi.clone();
    }
    for ((i, j), x) in entries {
        a[*i][*j] = x.clone();
    }
    MatrixPolynomial::new(vec![a, b]).unwrap()
}

#[test]
fn criterion_08_two_lines_pipeline() {
    let start = Instant::now();
    let c = two_lines();
    let orbits = [
        (with_offdiagonal(&c, &[]), StratumLabel::new(EdgeSet::EMPTY, d(&[0, 0]))),
        (with_offdiagonal(&c, &[((0, 1), q(5))]), StratumLabel::new(EdgeSet(1), d(&[0, 1]))),
        (with_offdiagonal(&c, &[((1, 0), q(-3))]), StratumLabel::new(EdgeSet(1), d(&[1, 0]))),
    ];
    for (p, expected) in &orbits {
        let got = classify_polynomial(p, &c).unwrap();
        assert_eq!(&got, expected);
        assert_eq!(got.divisor.degree(), got.edges.len() as i64);
        let sampled = sample_stratum(&c, expected, &vec![q(7); expected.edges.len()]).unwrap();
        assert_eq!(classify_polynomial(&sampled, &c).unwrap(), *expected);
    }
    report(8, "Orb1, Orb2, Orb3 classify to (0, 0), (E2, (0,1)), (E2, (1,0))", start, None);
}

#[test]
fn criterion_09_three_lines_pipeline() {
    let start = Instant::now();
    let c = three_lines();
    let mut samples = Vec::new();
    let orders = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for order in orders {
        // Borel pattern: a star above the diagonal in the order given
        let mut stars = Vec::new();
        for x in 0..3 {
            for y in x + 1..3 {
                stars.push(((order[x], order[y]), q(2 + stars.len() as i64)));
            }
        }
        let p = with_offdiagonal(&c, &stars);
        let mut expected = vec![0i64; 3];
        for (rank, &v) in order.iter().enumerate() {
            expected[v] = rank as i64;
        }
        let got = classify_polynomial(&p, &c).unwrap();
        assert_eq!(got, StratumLabel::new(EdgeSet(0b111), Divisor(expected)));
        samples.push(p);
    }

    // the cubic: scan small z for a rational w, then confirm by substitution
    let (z, w) = find_cubic_point(&c, 20).unwrap().expect("a rational point with small z");
    let cd = matpoly::cubic_data(&c).unwrap();
    assert_eq!(&w * (&cd.k * &z - &w), cd.c_product() * &z * &z * &z);
    let interior = StratumLabel::new(EdgeSet(0b111), d(&[1, 1, 1]));
    let p = sample_stratum(&c, &interior, &[z, w]).unwrap();
    assert_eq!(classify_polynomial(&p, &c).unwrap(), interior);
    samples.push(p);

    for p in &samples {
        let chi = char_poly(p).unwrap();
        assert_eq!(chi, c.curve());
        assert!(check_leading_condition(&chi, &c.slopes(), 1, 3));
    }
    report(9, "six Borel samples, a cubic point in (K3, (1,1,1)), char polys", start, None);
}

fn random_nonzero(rng: &mut ChaCha8Rng) -> Q {
    loop {
        let num: i64 = rng.gen_range(-9..=9);
        let den: i64 = rng.gen_range(1..=4);
        if num != 0 {
            return Q::new(BigInt::from(num), BigInt::from(den));
        }
    }
}

/// One random sample per call, retrying parameters the sampler reports as
/// degenerate.
fn random_sample(c: &SpectralLineArrangement, s: &StratumLabel, rng: &mut ChaCha8Rng) -> MatrixPolynomial {
    let interior = c.len() == 3 && s.edges == EdgeSet(0b111) && s.divisor == d(&[1, 1, 1]);
    for _ in 0..100 {
        let params = if interior {
            match cubic_point_from_parameter(c, &random_nonzero(rng)).unwrap() {
                Some((z, w)) => vec![z, w],
                None => continue,
            }
        } else {
            (0..s.edges.len()).map(|_| random_nonzero(rng)).collect()
        };
        if let Ok(p) = sample_stratum(c, s, &params) {
            return p;
        }
    }
    panic!("no usable parameters for {s}");
}

fn supported_strata() -> Vec<(SpectralLineArrangement, StratumLabel)> {
    let mut out = Vec::new();
    for c in [two_lines(), three_lines()] {
        for s in strata::strata_of_graph(c.dual_graph(), L).unwrap() {
            out.push((c.clone(), s));
        }
    }
    out
}

#[test]
fn criterion_10_reducibility_matches_classification() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let cases = supported_strata();
    assert_eq!(cases.len(), 3 + 26);
    let mut trials = 0;
    for round in 0..4 {
        for (c, s) in &cases {
            let p = random_sample(c, s, &mut rng);
            let sub = c.dual_graph().spanning(s.edges);
            let class = indegree::classify(&sub, &s.divisor, L).unwrap();
            let expected = match class.tag {
                ClassTag::Irreducible => Reducibility::Irreducible,
                ClassTag::CompletelyReducible => Reducibility::CompletelyReducible,
                ClassTag::ReducibleNotCR => Reducibility::ReducibleNotCR,
                ClassTag::NotIndegree => unreachable!("strata carry indegree divisors"),
            };
            assert_eq!(reducibility(&p).unwrap(), expected, "round {round}, {s}:\n{p}");
            trials += 1;
        }
    }
    assert!(trials >= 100);
    let cr = strata::cr_strata(&CurveShape::lines(3), L).unwrap();
    assert_eq!(
        cr.labels(),
        vec![
            &StratumLabel::new(EdgeSet::EMPTY, d(&[0, 0, 0])),
            &StratumLabel::new(EdgeSet(0b111), d(&[1, 1, 1])),
        ]
    );
    report(10, &format!("{trials} random samples agree; cr strata of three lines"), start, None);
}

#[test]
fn criterion_11_tau_laws() {
    let start = Instant::now();
    for g in family(4, 6) {
        let points = indegree::enumerate_indegree(&g, L).unwrap();
        let verts = zonotope::vertices(&g, L).unwrap();
        let mut image: Vec<Divisor> = points.iter().map(|p| indegree::tau(&g, p).unwrap()).collect();
        for (p, t) in points.iter().zip(&image) {
            assert_eq!(&indegree::tau(&g, t).unwrap(), p);
        }
        image.sort();
        assert_eq!(image, points, "{g:?}");
        let mut vimage: Vec<Divisor> = verts.iter().map(|p| indegree::tau(&g, p).unwrap()).collect();
        vimage.sort();
        assert_eq!(vimage, verts, "{g:?}");
    }

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (c, s) in supported_strata() {
        let p = random_sample(&c, &s, &mut rng);
        let sub = c.dual_graph().spanning(s.edges);
        let expected = StratumLabel::new(s.edges, indegree::tau(&sub, &s.divisor).unwrap());
        assert_eq!(classify_polynomial(&p.transpose(), &c).unwrap(), expected, "{s}");
    }
    report(11, "tau is an involution on InDeg and vertices; transposes land in tau-images", start, None);
}
