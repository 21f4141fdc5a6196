//! Sparse polynomials in `lambda` and `mu` with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::qpoly::{QPoly, Q};
use super::Ring;

/// `sum q_ij lambda^i mu^j`, keyed by `(i, j)`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), Q>,
}

impl BivariatePolynomial {
    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Q)>>(terms: I) -> Self {
        let mut out = BivariatePolynomial::default();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn constant(c: Q) -> Self {
        Self::from_terms([((0, 0), c)])
    }

    pub fn lambda() -> Self {
        Self::from_terms([((1, 0), Q::one())])
    }

    pub fn mu() -> Self {
        Self::from_terms([((0, 1), Q::one())])
    }

    /// Embeds a polynomial in `lambda`.
    pub fn from_lambda_poly(p: &QPoly) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| ((i as u32, 0), c.clone())),
        )
    }

    fn add_term(&mut self, k: (u32, u32), c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), Q> {
        &self.terms
    }

    /// Coefficient of `lambda^i mu^j`.
    pub fn coeff(&self, i: u32, j: u32) -> Q {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, v)| (k, v * c)))
    }
}

impl Ring for BivariatePolynomial {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::constant(Q::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, -c);
        }
        out
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::default();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), a * b);
            }
        }
        out
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        self.scale(&-Q::one())
    }
}

fn monomial(f: &mut fmt::Formatter<'_>, name: &str, e: u32) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => f.write_str(name),
        _ => write!(f, "{name}^{e}"),
    }
}

impl fmt::Display for BivariatePolynomial {
    /// Highest `mu` power first, then highest `lambda` power.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(i, j)| std::cmp::Reverse((j, i)));
        for (n, (i, j)) in keys.into_iter().enumerate() {
            let c = &self.terms[&(i, j)];
            match (n, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let bare = i == 0 && j == 0;
            if bare || !a.is_one() {
                write!(f, "{a}")?;
                if !bare {
                    f.write_str("*")?;
                }
            }
            monomial(f, "lambda", i)?;
            if i > 0 && j > 0 {
                f.write_str("*")?;
            }
            monomial(f, "mu", j)?;
        }
        Ok(())
    }
}
