//! Exact matrix polynomials `P(lambda) = A_0 + A_1 lambda + ... + A_m lambda^m`
//! over the rationals whose spectral curve `det(P(lambda) - mu Id) = 0` is a
//! nodal arrangement of lines, and the stratum `(G_P, D_P)` they lie in.

mod arrangement;
mod bivariate;
mod linalg;
mod qpoly;
mod sample;

use std::fmt;

use num_traits::{One, Signed, Zero};

pub use arrangement::{Node, SpectralLineArrangement};
pub use bivariate::BivariatePolynomial;
pub use linalg::{determinant, kernel, rank};
pub use qpoly::{QPoly, Q};
pub use sample::{
    cubic_data, cubic_point_from_parameter, find_cubic_point, on_cubic, sample_default, sample_stratum, CubicData,
};

use crate::error::{Error, Result};
use crate::graph::{Divisor, EdgeSet, Subgraph};
use crate::indegree;
use crate::strata::StratumLabel;

/// Largest matrix size accepted by [`char_poly`].
pub const MAX_CHAR_POLY_SIZE: usize = 6;
/// Largest matrix size accepted by [`reducibility`].
pub const MAX_REDUCIBILITY_SIZE: usize = 3;

/// Commutative ring operations needed by the generic determinant.
pub trait Ring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
}

pub type Matrix = Vec<Vec<Q>>;

pub fn q_int(x: i64) -> Q {
    Q::from_integer(x.into())
}

/// Coefficients `A_0..A_m`, all `n x n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatrixPolynomial {
    coeffs: Vec<Matrix>,
    n: usize,
}

impl MatrixPolynomial {
    pub fn new(coeffs: Vec<Matrix>) -> Result<Self> {
        let n = coeffs
            .first()
            .ok_or_else(|| Error::Shape("no coefficient matrices".into()))?
            .len();
        if n == 0 {
            return Err(Error::Shape("matrices must be at least 1 x 1".into()));
        }
        for (k, a) in coeffs.iter().enumerate() {
            if a.len() != n || a.iter().any(|row| row.len() != n) {
                return Err(Error::Shape(format!("A_{k} is not {n} x {n}")));
            }
        }
        Ok(MatrixPolynomial { coeffs, n })
    }

    pub fn from_ints(coeffs: &[Vec<Vec<i64>>]) -> Result<Self> {
        Self::new(
            coeffs
                .iter()
                .map(|a| a.iter().map(|r| r.iter().map(|&x| q_int(x)).collect()).collect())
                .collect(),
        )
    }

    /// Degree `m`: the index of the last coefficient.
    pub fn m(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Matrix] {
        &self.coeffs
    }

    pub fn leading(&self) -> &Matrix {
        self.coeffs.last().expect("at least one coefficient")
    }

    /// The entry `P(lambda)_{ij}` as a polynomial.
    pub fn entry(&self, i: usize, j: usize) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|a| a[i][j].clone()).collect())
    }

    pub fn eval(&self, lambda: &Q) -> Matrix {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.entry(i, j).eval(lambda)).collect())
            .collect()
    }

    /// `P(lambda) - nu(lambda) Id` over `Q[lambda]`.
    pub fn shifted(&self, nu: &QPoly) -> Vec<Vec<QPoly>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| if i == j { &self.entry(i, j) - nu } else { self.entry(i, j) })
                    .collect()
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| (0..self.n).map(|i| (0..self.n).map(|j| a[j][i].clone()).collect()).collect())
            .collect();
        MatrixPolynomial { coeffs, n: self.n }
    }
}

impl fmt::Display for MatrixPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|j| self.entry(i, j).to_string().replace('x', "l"))
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `det(P(lambda) - mu Id)`.
pub fn char_poly(p: &MatrixPolynomial) -> Result<BivariatePolynomial> {
    if p.n() > MAX_CHAR_POLY_SIZE {
        return Err(Error::CapExceeded {
            what: "matrix size for the characteristic polynomial",
            size: p.n(),
            cap: MAX_CHAR_POLY_SIZE,
        });
    }
    let mu = BivariatePolynomial::mu();
    let m: Vec<Vec<BivariatePolynomial>> = (0..p.n())
        .map(|i| {
            (0..p.n())
                .map(|j| {
                    let e = BivariatePolynomial::from_lambda_poly(&p.entry(i, j));
                    if i == j {
                        &e - &mu
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect();
    Ok(determinant(&m))
}

/// The line arrangement of a linear polynomial whose leading coefficient is
/// diagonal with distinct entries, line `i` taking slope `A_1[i][i]`.
pub fn arrangement_of(p: &MatrixPolynomial) -> Result<SpectralLineArrangement> {
    let n = p.n();
    let b = p.leading();
    if p.m() != 1 || (0..n).any(|i| (0..n).any(|j| i != j && !b[i][j].is_zero())) {
        return Err(Error::Unsupported(
            "the arrangement is read off only for A_0 + A_1 lambda with A_1 diagonal".into(),
        ));
    }
    let chi = char_poly(p)?;
    // On mu = t + b_i lambda the lambda^(n-1) coefficient of chi is
    // K (a_i - t), so two values of t pin down the intercept a_i.
    let top = |t: &Q, slope: &Q| -> Q {
        let along = QPoly::linear(t.clone(), slope.clone());
        let mut acc = QPoly::constant(Q::zero());
        for (&(j, k), c) in chi.terms() {
            let mut term = QPoly::new(
                std::iter::repeat_n(Q::zero(), j as usize)
                    .chain(std::iter::once(c.clone()))
                    .collect(),
            );
            for _ in 0..k {
                term = &term * &along;
            }
            acc = &acc + &term;
        }
        acc.coeff(n.saturating_sub(1))
    };
    let mut lines = Vec::with_capacity(n);
    for i in 0..n {
        let slope = b[i][i].clone();
        let (l0, l1) = (top(&Q::zero(), &slope), top(&Q::one(), &slope));
        let k = &l0 - &l1;
        if k.is_zero() {
            return Err(Error::CharPolyMismatch);
        }
        lines.push((l0 / k, slope));
    }
    let c = SpectralLineArrangement::new(lines)?;
    check_spectrum(p, &c)?;
    Ok(c)
}

/// The Newton polygon of `q` lies in the triangle `(0,0), (0,n), (mn,0)` and
/// the coefficients on its hypotenuse are those of `prod_k (b_k - w)`.
pub fn check_leading_condition(q: &BivariatePolynomial, b_eigs: &[Q], m: usize, n: usize) -> bool {
    let (m32, n32) = (m as u64, n as u64);
    if q
        .terms()
        .keys()
        .any(|&(i, j)| i as u64 + m32 * j as u64 > m32 * n32)
    {
        return false;
    }
    let hyp = b_eigs.iter().fold(QPoly::constant(Q::one()), |acc, b| {
        &acc * &QPoly::linear(b.clone(), -Q::one())
    });
    (0..=n).all(|j| q.coeff((m * (n - j)) as u32, j as u32) == hyp.coeff(j))
}

fn check_spectrum(p: &MatrixPolynomial, c: &SpectralLineArrangement) -> Result<()> {
    if p.n() != c.len() {
        return Err(Error::Shape(format!(
            "{} x {} polynomial for {} lines",
            p.n(),
            p.n(),
            c.len()
        )));
    }
    if char_poly(p)? != c.curve() {
        return Err(Error::CharPolyMismatch);
    }
    Ok(())
}

/// The subgraph of the dual graph keeping the nodes where
/// `P(lambda_0) - mu_0 Id` has a one-dimensional kernel.
pub fn gamma_of<'c>(p: &MatrixPolynomial, c: &'c SpectralLineArrangement) -> Result<Subgraph<'c>> {
    check_spectrum(p, c)?;
    let mut keep = EdgeSet::EMPTY;
    for (e, node) in c.nodes().iter().enumerate() {
        let mut m = p.eval(&node.lambda);
        for (i, row) in m.iter_mut().enumerate() {
            row[i] -= &node.mu;
        }
        match p.n() - rank(&m) {
            1 => keep = keep.with(e),
            2 => {}
            dim => {
                return Err(Error::KernelDimension {
                    place: format!("node ({}, {})", node.lambda, node.mu),
                    dim,
                })
            }
        }
    }
    Subgraph::new(c.dual_graph(), keep)
}

/// A polynomial eigenvector on one line with coprime entries, and the degree
/// of the dual eigenvector bundle there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenLine {
    pub vector: Vec<QPoly>,
    pub dual_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenLineData {
    pub lines: Vec<EigenLine>,
}

impl EigenLineData {
    pub fn divisor(&self) -> Divisor {
        Divisor(self.lines.iter().map(|l| l.dual_degree as i64).collect())
    }
}

/// Rank of a polynomial matrix over `Q(lambda)`: the largest rank at a
/// handful of sample points (rank drops only at finitely many).
fn generic_rank(m: &[Vec<QPoly>]) -> usize {
    let max_deg = m
        .iter()
        .flatten()
        .filter_map(QPoly::degree)
        .max()
        .unwrap_or(0);
    let samples = m.len() * max_deg + 1;
    (0..=samples as i64)
        .map(|t| {
            let at: Matrix = m
                .iter()
                .map(|row| row.iter().map(|x| x.eval(&q_int(t))).collect())
                .collect();
            rank(&at)
        })
        .max()
        .unwrap_or(0)
}

pub fn eigen_lines(p: &MatrixPolynomial, c: &SpectralLineArrangement) -> Result<EigenLineData> {
    check_spectrum(p, c)?;
    let n = p.n();
    let mut lines = Vec::with_capacity(n);
    for i in 0..n {
        let m = p.shifted(&c.nu(i));
        // when the kernel is one-dimensional the adjugate has rank one and
        // each nonzero column spans it
        let column = (0..n)
            .map(|j| linalg::adjugate_column(&m, j))
            .find(|col| col.iter().any(|x| !x.is_zero()))
            .ok_or_else(|| Error::KernelDimension {
                place: format!("line {}", i + 1),
                dim: n - generic_rank(&m),
            })?;
        let g = column.iter().fold(QPoly::default(), |acc, x| acc.gcd(x));
        let lead = column
            .iter()
            .find(|x| !x.is_zero())
            .map(|x| x.div_rem(&g).0.leading())
            .expect("nonzero column");
        let vector: Vec<QPoly> = column
            .iter()
            .map(|x| x.div_rem(&g).0.scale(&lead.recip()))
            .collect();
        for row in &m {
            let dot = row
                .iter()
                .zip(&vector)
                .fold(QPoly::default(), |acc, (a, v)| &acc + &(a * v));
            if !dot.is_zero() {
                return Err(Error::KernelDimension {
                    place: format!("line {}", i + 1),
                    dim: 0,
                });
            }
        }
        let dual_degree = vector.iter().filter_map(QPoly::degree).max().unwrap_or(0);
        lines.push(EigenLine { vector, dual_degree });
    }
    Ok(EigenLineData { lines })
}

/// Degrees of the dual eigenvector bundle on each line.
pub fn divisor_of(p: &MatrixPolynomial, c: &SpectralLineArrangement) -> Result<Divisor> {
    Ok(eigen_lines(p, c)?.divisor())
}

/// The stratum `(G_P, D_P)` containing `p`.
pub fn classify_polynomial(p: &MatrixPolynomial, c: &SpectralLineArrangement) -> Result<StratumLabel> {
    let gamma = gamma_of(p, c)?;
    let d = divisor_of(p, c)?;
    if !indegree::is_indegree_divisor(&gamma.to_graph(), &d)? {
        return Err(Error::NotIndegree(d.to_string()));
    }
    Ok(StratumLabel::new(gamma.edges, d))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reducibility {
    Irreducible,
    ReducibleNotCR,
    CompletelyReducible,
}

impl Reducibility {
    pub fn as_str(self) -> &'static str {
        match self {
            Reducibility::Irreducible => "irreducible",
            Reducibility::ReducibleNotCR => "reducible_not_cr",
            Reducibility::CompletelyReducible => "completely_reducible",
        }
    }
}

impl fmt::Display for Reducibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn divisors(x: &num_bigint::BigInt) -> Option<Vec<num_bigint::BigInt>> {
    use num_bigint::BigInt;
    let x = x.abs();
    if x > BigInt::from(1_000_000_000_000i64) {
        return None;
    }
    let mut out = Vec::new();
    let root = x.sqrt();
    let mut d = BigInt::one();
    while d <= root {
        if (&x % &d).is_zero() {
            out.push(d.clone());
            out.push(&x / &d);
        }
        d += 1;
    }
    Some(out)
}

/// The eigenvalues of `a` when they are `n` distinct rationals.
fn distinct_rational_eigenvalues(a: &Matrix) -> Option<Vec<Q>> {
    let n = a.len();
    let diagonal = (0..n).all(|i| (0..n).all(|j| i == j || a[i][j].is_zero()));
    let mut roots: Vec<Q> = if diagonal {
        (0..n).map(|i| a[i][i].clone()).collect()
    } else {
        let m: Vec<Vec<QPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        QPoly::linear(a[i][j].clone(), if i == j { -Q::one() } else { Q::zero() })
                    })
                    .collect()
            })
            .collect();
        let mut chi = determinant(&m);
        let mut roots = Vec::new();
        while chi.coeff(0).is_zero() && !chi.is_zero() {
            roots.push(Q::zero());
            chi = chi.div_rem(&QPoly::x()).0;
        }
        let ints = chi.primitive_integer();
        let lead = ints.last()?.clone();
        for p in divisors(&ints[0])? {
            for q in divisors(&lead)? {
                for sign in [1, -1] {
                    let cand = Q::new(&p * sign, q.clone());
                    if chi.eval(&cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
        roots
    };
    roots.sort();
    roots.dedup();
    (roots.len() == n).then_some(roots)
}

/// Whether `P` preserves a proper subspace, and if so whether it splits as a
/// direct sum of irreducible pieces.
///
/// Needs a leading coefficient with distinct rational eigenvalues: every
/// invariant subspace is then spanned by some of its eigenvectors, so it is
/// enough to test each subset for invariance under all `A_k`.
pub fn reducibility(p: &MatrixPolynomial) -> Result<Reducibility> {
    let n = p.n();
    if n > MAX_REDUCIBILITY_SIZE {
        return Err(Error::Unsupported(format!(
            "reducibility is decided for n <= {MAX_REDUCIBILITY_SIZE}, got n = {n}"
        )));
    }
    let eigs = distinct_rational_eigenvalues(p.leading()).ok_or_else(|| {
        Error::Unsupported("leading coefficient needs distinct rational eigenvalues".into())
    })?;
    let vectors: Vec<Vec<Q>> = eigs
        .iter()
        .map(|b| {
            let mut m = p.leading().clone();
            for (i, row) in m.iter_mut().enumerate() {
                row[i] -= b;
            }
            kernel(&m, n).remove(0)
        })
        .collect();
    let invariant = |subset: u64| -> bool {
        let span: Vec<&Vec<Q>> = (0..n).filter(|i| subset >> i & 1 == 1).map(|i| &vectors[i]).collect();
        p.coeffs().iter().all(|a| {
            let mut rows: Vec<Vec<Q>> = span.iter().map(|v| (*v).clone()).collect();
            rows.extend(span.iter().map(|v| linalg::mat_vec(a, v)));
            rank(&rows) == span.len()
        })
    };
    let full = (1u64 << n) - 1;
    let proper: Vec<u64> = (1..full).filter(|&s| invariant(s)).collect();
    if proper.is_empty() {
        return Ok(Reducibility::Irreducible);
    }
    let split = proper.iter().all(|&s| proper.contains(&(full & !s)));
    Ok(if split {
        Reducibility::CompletelyReducible
    } else {
        Reducibility::ReducibleNotCR
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_lines() -> SpectralLineArrangement {
        SpectralLineArrangement::from_ints(&[(0, 1), (1, 2)]).unwrap()
    }

    /// `A + lambda diag(1, 2)` with diagonal `(0, 1)` and the given off-diagonal entries.
    fn orb(upper: i64, lower: i64) -> MatrixPolynomial {
        MatrixPolynomial::from_ints(&[
            vec![vec![0, upper], vec![lower, 1]],
            vec![vec![1, 0], vec![0, 2]],
        ])
        .unwrap()
    }

    #[test]
    fn char_poly_examples() {
        let c = two_lines();
        for p in [orb(0, 0), orb(5, 0), orb(0, -3)] {
            assert_eq!(char_poly(&p).unwrap(), c.curve());
            assert!(check_leading_condition(&char_poly(&p).unwrap(), &c.slopes(), 1, 2));
        }
        let zero = MatrixPolynomial::from_ints(&[vec![vec![0]]]).unwrap();
        assert_eq!(char_poly(&zero).unwrap(), -&BivariatePolynomial::mu());
        assert!(check_leading_condition(&char_poly(&zero).unwrap(), &[q_int(0)], 0, 1));
    }

    #[test]
    fn leading_condition_rejects_outside_polygon() {
        let c = two_lines();
        let q = &c.curve() + &BivariatePolynomial::from_terms([((3, 0), q_int(1))]);
        assert!(!check_leading_condition(&q, &c.slopes(), 1, 2));
        assert!(!check_leading_condition(&c.curve(), &[q_int(1), q_int(3)], 1, 2));
    }

    #[test]
    fn arrangement_recovered_from_the_polynomial() {
        let c = two_lines();
        assert_eq!(arrangement_of(&orb(4, 0)).unwrap(), c);
        let three = SpectralLineArrangement::from_ints(&[(0, 1), (1, 2), (3, -1)]).unwrap();
        let (z, w) = find_cubic_point(&three, 20).unwrap().unwrap();
        let interior = StratumLabel::new(EdgeSet(0b111), Divisor(vec![1, 1, 1]));
        let p = sample_stratum(&three, &interior, &[z, w]).unwrap();
        assert_eq!(arrangement_of(&p).unwrap(), three);
    }

    #[test]
    fn two_line_orbits() {
        let c = two_lines();
        let cases = [
            (orb(0, 0), 0b0, [0, 0], Reducibility::CompletelyReducible),
            (orb(5, 0), 0b1, [0, 1], Reducibility::ReducibleNotCR),
            (orb(0, 7), 0b1, [1, 0], Reducibility::ReducibleNotCR),
        ];
        for (p, edges, d, red) in cases {
            let s = classify_polynomial(&p, &c).unwrap();
            assert_eq!(s, StratumLabel::new(EdgeSet(edges), Divisor(d.to_vec())));
            assert_eq!(reducibility(&p).unwrap(), red);
            assert_eq!(s.divisor.degree(), s.edges.len() as i64);
        }
    }

    #[test]
    fn eigenvectors_are_exact() {
        let c = two_lines();
        let p = orb(5, 0);
        let data = eigen_lines(&p, &c).unwrap();
        for (i, line) in data.lines.iter().enumerate() {
            let m = p.shifted(&c.nu(i));
            for row in &m {
                let dot = row
                    .iter()
                    .zip(&line.vector)
                    .fold(QPoly::default(), |acc, (a, v)| &acc + &(a * v));
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn mismatch_is_reported() {
        let c = SpectralLineArrangement::from_ints(&[(0, 1), (2, 2)]).unwrap();
        assert_eq!(gamma_of(&orb(5, 0), &c).unwrap_err(), Error::CharPolyMismatch);
        let big = MatrixPolynomial::new(vec![vec![vec![q_int(0); 7]; 7]]).unwrap();
        assert!(matches!(char_poly(&big), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn eigenvalues_by_rational_roots() {
        // [[2, 1], [0, 3]] conjugated by [[1, 1], [1, 2]]
        let a = vec![vec![q_int(0), q_int(2)], vec![q_int(-3), q_int(5)]];
        assert_eq!(distinct_rational_eigenvalues(&a), Some(vec![q_int(2), q_int(3)]));
        let rot = vec![vec![q_int(0), q_int(-1)], vec![q_int(1), q_int(0)]];
        assert_eq!(distinct_rational_eigenvalues(&rot), None);
    }
}
