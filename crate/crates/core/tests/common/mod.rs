//! Shared fixtures for the integration tests.
#![allow(dead_code)]

use nodal_strata::{Divisor, Multigraph};

/// Every edge multiset (loops included) on `1..=max_vertices` labelled
/// vertices with at most `max_edges` edges. Edges come out in lexicographic
/// order of their endpoint pair.
pub fn family(max_vertices: usize, max_edges: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        let mut chosen = Vec::new();
        multisets(&pairs, 0, max_edges, &mut chosen, &mut |edges| {
            out.push(Multigraph::from_edges(n, edges).expect("valid endpoints"));
        });
    }
    out
}

fn multisets(
    pairs: &[(usize, usize)],
    start: usize,
    left: usize,
    chosen: &mut Vec<(usize, usize)>,
    emit: &mut dyn FnMut(&[(usize, usize)]),
) {
    emit(chosen);
    if left == 0 {
        return;
    }
    for i in start..pairs.len() {
        chosen.push(pairs[i]);
        multisets(pairs, i, left - 1, chosen, emit);
        chosen.pop();
    }
}

/// All divisors with entries in `0..=max`.
pub fn divisor_box(n: usize, max: i64) -> impl Iterator<Item = Divisor> {
    let count = (max + 1).pow(n as u32);
    (0..count).map(move |mut code| {
        let mut d = vec![0i64; n];
        for x in d.iter_mut() {
            *x = code % (max + 1);
            code /= max + 1;
        }
        Divisor(d)
    })
}

pub fn d(v: &[i64]) -> Divisor {
    Divisor(v.to_vec())
}
