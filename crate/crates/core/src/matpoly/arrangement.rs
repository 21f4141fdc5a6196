//! Nodal arrangements of lines `mu = a_i + b_i lambda`.

use num_traits::One;

use super::bivariate::BivariatePolynomial;
use super::qpoly::{QPoly, Q};
use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Intersection of lines `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub lambda: Q,
    pub mu: Q,
    pub lines: (usize, usize),
}

/// Lines with pairwise distinct slopes and no three through a point. The
/// dual graph is `K_n` on `v1..vn` and edge `e` corresponds to `nodes[e]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralLineArrangement {
    lines: Vec<(Q, Q)>,
    nodes: Vec<Node>,
    dual_graph: Multigraph,
}

impl SpectralLineArrangement {
    pub fn new(lines: Vec<(Q, Q)>) -> Result<Self> {
        let n = lines.len();
        let dual_graph = Multigraph::complete(n);
        let mut nodes = Vec::with_capacity(dual_graph.edge_count());
        for &(i, j) in dual_graph.edges() {
            let ((ai, bi), (aj, bj)) = (&lines[i], &lines[j]);
            if bi == bj {
                return Err(Error::CoincidentSlopes(i, j));
            }
            let lambda = (aj - ai) / (bi - bj);
            let mu = ai + bi * &lambda;
            nodes.push(Node {
                lambda,
                mu,
                lines: (i, j),
            });
        }
        for (k, (a, b)) in lines.iter().enumerate() {
            for node in &nodes {
                let (i, j) = node.lines;
                if k != i && k != j && a + b * &node.lambda == node.mu {
                    let mut t = [i, j, k];
                    t.sort_unstable();
                    return Err(Error::NonNodal(t[0], t[1], t[2]));
                }
            }
        }
        Ok(SpectralLineArrangement {
            lines,
            nodes,
            dual_graph,
        })
    }

    /// Integer lines, for examples and tests.
    pub fn from_ints(lines: &[(i64, i64)]) -> Result<Self> {
        Self::new(
            lines
                .iter()
                .map(|&(a, b)| (Q::from_integer(a.into()), Q::from_integer(b.into())))
                .collect(),
        )
    }

    pub fn lines(&self) -> &[(Q, Q)] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn dual_graph(&self) -> &Multigraph {
        &self.dual_graph
    }

    pub fn slopes(&self) -> Vec<Q> {
        self.lines.iter().map(|(_, b)| b.clone()).collect()
    }

    /// `nu_i(lambda) = a_i + b_i lambda`.
    pub fn nu(&self, i: usize) -> QPoly {
        QPoly::linear(self.lines[i].0.clone(), self.lines[i].1.clone())
    }

    /// `prod_i (a_i + b_i lambda - mu)`.
    pub fn curve(&self) -> BivariatePolynomial {
        self.lines.iter().fold(
            BivariatePolynomial::constant(Q::one()),
            |acc, (a, b)| {
                let line = &(&BivariatePolynomial::constant(a.clone())
                    + &BivariatePolynomial::lambda().scale(b))
                    - &BivariatePolynomial::mu();
                &acc * &line
            },
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_lines() {
        let c = SpectralLineArrangement::from_ints(&[(0, 0), (1, 1)]).unwrap();
        assert_eq!(c.nodes().len(), 1);
        assert_eq!(c.nodes()[0].lambda, Q::from_integer((-1).into()));
        assert_eq!(c.nodes()[0].mu, Q::from_integer(0.into()));
        assert_eq!(c.dual_graph().edge_count(), 1);
    }

    #[test]
    fn rejects_degenerate() {
        assert_eq!(
            SpectralLineArrangement::from_ints(&[(0, 0), (0, 1), (0, 2)]),
            Err(Error::NonNodal(0, 1, 2))
        );
        assert_eq!(
            SpectralLineArrangement::from_ints(&[(0, 1), (2, 1)]),
            Err(Error::CoincidentSlopes(0, 1))
        );
        let c = SpectralLineArrangement::from_ints(&[(0, 0), (1, 1), (3, -1)]).unwrap();
        assert_eq!(c.dual_graph(), &Multigraph::complete(3));
    }
}
