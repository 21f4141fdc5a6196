//! Explicit matrix polynomials in each stratum of two and three lines.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::arrangement::SpectralLineArrangement;
use super::qpoly::Q;
use super::{classify_polynomial, Matrix, MatrixPolynomial};
use crate::error::{Error, Result};
use crate::graph::Divisor;
use crate::indegree;
use crate::strata::StratumLabel;

/// Data of the plane cubic `w (k z - w) = c1 c2 c3 z^3` parametrising the
/// stratum of three lines with divisor `(1, 1, 1)` on the whole triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicData {
    /// `(1, 1, 1) x (b1, b2, b3)`.
    pub c: [Q; 3],
    /// `c . (a1, a2, a3)`.
    pub k: Q,
}

impl CubicData {
    pub fn c_product(&self) -> Q {
        &self.c[0] * &self.c[1] * &self.c[2]
    }
}

pub fn cubic_data(arr: &SpectralLineArrangement) -> Result<CubicData> {
    let [(a1, b1), (a2, b2), (a3, b3)] = arr.lines() else {
        return Err(Error::Unsupported("the cubic needs exactly three lines".into()));
    };
    let c = [b3 - b2, b1 - b3, b2 - b1];
    let k = &c[0] * a1 + &c[1] * a2 + &c[2] * a3;
    Ok(CubicData { c, k })
}

pub fn on_cubic(arr: &SpectralLineArrangement, z: &Q, w: &Q) -> Result<bool> {
    let cd = cubic_data(arr)?;
    Ok(w * (&cd.k * z - w) == cd.c_product() * z * z * z)
}

/// The point with `k^2 - 4 c1 c2 c3 z = s^2`, taking `w = z (k + s) / 2`.
/// Every affine point with `z != 0` arises this way; `None` when `z` or `w`
/// vanishes.
pub fn cubic_point_from_parameter(arr: &SpectralLineArrangement, s: &Q) -> Result<Option<(Q, Q)>> {
    let cd = cubic_data(arr)?;
    let z = (&cd.k * &cd.k - s * s) / (Q::from_integer(4.into()) * cd.c_product());
    let w = &z * (&cd.k + s) / Q::from_integer(2.into());
    Ok((!z.is_zero() && !w.is_zero()).then_some((z, w)))
}

fn rational_sqrt(r: &Q) -> Option<Q> {
    if r.is_negative() {
        return None;
    }
    let (n, d): (&BigInt, &BigInt) = (r.numer(), r.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    (&sn * &sn == *n && &sd * &sd == *d).then(|| Q::new(sn, sd))
}

/// Scans `z = p/q` with `0 < |p|, q <= bound` for a rational root `w != 0` of
/// `w^2 - k z w + c1 c2 c3 z^3 = 0`.
pub fn find_cubic_point(arr: &SpectralLineArrangement, bound: i64) -> Result<Option<(Q, Q)>> {
    let cd = cubic_data(arr)?;
    let cp = cd.c_product();
    for q in 1..=bound {
        for p in (1..=bound).flat_map(|p| [p, -p]) {
            let z = Q::new(p.into(), q.into());
            let disc = &cd.k * &cd.k * &z * &z - Q::from_integer(4.into()) * &cp * &z * &z * &z;
            if let Some(s) = rational_sqrt(&disc) {
                for root in [&cd.k * &z + &s, &cd.k * &z - &s] {
                    let w = root / Q::from_integer(2.into());
                    if !w.is_zero() {
                        return Ok(Some((z, w)));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn diagonal(arr: &SpectralLineArrangement, pick: impl Fn(&(Q, Q)) -> Q) -> Matrix {
    let n = arr.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { pick(&arr.lines()[i]) } else { Q::zero() })
                .collect()
        })
        .collect()
}

/// A matrix polynomial `A + lambda diag(b)` in the stratum `s`.
///
/// For every stratum except the triangle with divisor `(1, 1, 1)` the witness
/// is the unique acyclic orientation with indegree `D`: edge `u -> v` puts
/// the next parameter at position `(u, v)`. When two edges `i -> k -> j`
/// compose across a removed node `{i, j}`, entry `(i, j)` is forced so that
/// the kernel at that node is two-dimensional.
///
/// For the triangle with `(1, 1, 1)` the parameters are a point `(z, w)` on
/// the cubic of [`cubic_data`], normalised by `a12 = a23 = 1`.
pub fn sample_stratum(arr: &SpectralLineArrangement, s: &StratumLabel, params: &[Q]) -> Result<MatrixPolynomial> {
    let n = arr.len();
    if !(2..=3).contains(&n) {
        return Err(Error::Unsupported(format!("samplers cover 2 or 3 lines, got {n}")));
    }
    let g = arr.dual_graph();
    let sub = s.subgraph(g)?;
    g.check_divisor(&s.divisor)?;
    let sub_graph = sub.to_graph();
    if !indegree::is_indegree_divisor(&sub_graph, &s.divisor)? {
        return Err(Error::NotIndegree(s.divisor.to_string()));
    }
    if params.iter().any(Zero::is_zero) {
        return Err(Error::BadParams("parameters must be nonzero".into()));
    }
    let mut a = diagonal(arr, |l| l.0.clone());
    let b = diagonal(arr, |l| l.1.clone());
    let interior = n == 3 && s.edges == g.all_edges() && s.divisor == Divisor(vec![1, 1, 1]);
    if interior {
        let [z, w] = params else {
            return Err(Error::BadParams(format!("expected (z, w), got {} values", params.len())));
        };
        if !on_cubic(arr, z, w)? {
            return Err(Error::BadParams(format!("({z}, {w}) is not on the cubic")));
        }
        let cd = cubic_data(arr)?;
        let one = Q::from_integer(1.into());
        a[0][1] = one.clone();
        a[1][2] = one;
        a[2][0] = w.clone();
        a[1][0] = &cd.c[2] * z;
        a[2][1] = &cd.c[0] * z;
        a[0][2] = &cd.c[1] * z / w;
    } else {
        if params.len() != s.edges.len() {
            return Err(Error::BadParams(format!(
                "expected {} values, got {}",
                s.edges.len(),
                params.len()
            )));
        }
        let witness = indegree::find_witness(&sub_graph, &s.divisor, |o| o.is_acyclic_except_loops())?
            .ok_or_else(|| Error::Unsupported(format!("no acyclic witness for {s}")))?;
        for (k, value) in params.iter().enumerate() {
            a[witness.tail(k)][witness.head(k)] = value.clone();
        }
        for e in g.all_edges().difference(s.edges).iter() {
            let node = &arr.nodes()[e];
            let (u, v) = node.lines;
            for (i, j) in [(u, v), (v, u)] {
                for k in (0..n).filter(|&k| k != i && k != j) {
                    if !a[i][k].is_zero() && !a[k][j].is_zero() {
                        let d = arr.nu(k).eval(&node.lambda) - &node.mu;
                        a[i][j] = &a[i][k] * &a[k][j] / d;
                    }
                }
            }
        }
    }
    let p = MatrixPolynomial::new(vec![a, b])?;
    let got = classify_polynomial(&p, arr)?;
    if got != *s {
        return Err(Error::BadParams(format!("parameters are degenerate: sample lies in {got}")));
    }
    Ok(p)
}

/// A deterministic sample of `s`: small integer parameters, or a point on
/// the cubic for the triangle with `(1, 1, 1)`, skipping rejected choices.
pub fn sample_default(arr: &SpectralLineArrangement, s: &StratumLabel) -> Result<(Vec<Q>, MatrixPolynomial)> {
    let interior = arr.len() == 3 && s.edges == arr.dual_graph().all_edges() && s.divisor == Divisor(vec![1, 1, 1]);
    let mut last = Error::BadParams(format!("no parameters found for {s}"));
    for t in 1..=64i64 {
        let params = if interior {
            match cubic_point_from_parameter(arr, &Q::from_integer(t.into()))? {
                Some((z, w)) => vec![z, w],
                None => continue,
            }
        } else {
            (0..s.edges.len() as i64).map(|i| Q::from_integer((t + i).into())).collect()
        };
        match sample_stratum(arr, s, &params) {
            Ok(p) => return Ok((params, p)),
            Err(e @ Error::BadParams(_)) => last = e,
            Err(e) => return Err(e),
        }
    }
    Err(last)
}
