//! Combinatorics of isospectral matrix polynomials with nodal spectral curves.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: multigraphs with loops, divisors, orientations and the indegree map;
//! * [`indegree`]: indegree divisors, the `B` polynomial, multiplicities and the
//!   irreducible / completely reducible classification;
//! * [`zonotope`]: graphical zonotopes as lattice objects;
//! * [`strata`]: strata labels, dimensions, adjacency multiplicities, local
//!   models and the Hasse diagram of the stratum poset;
//! * [`matpoly`]: exact matrix polynomials over the rationals whose spectral
//!   curve is a nodal arrangement of lines, and their classification into strata;
//! * [`formats`]: the JSON / CSV / DOT / table encodings shared by the CLI and
//!   the browser demo.
//!
//! All arithmetic is exact. Every enumeration is bounded by [`Limits`].

pub mod error;
pub mod formats;
pub mod graph;
pub mod indegree;
pub mod matpoly;
pub mod strata;
pub mod zonotope;

mod flow;
mod poly;

pub use error::{Error, Result};
pub use graph::{
    Direction, Divisor, EdgeSet, Limits, Multigraph, Orientation, PartialOrientation, Subgraph,
};
pub use indegree::{ClassTag, DivisorClass, IndegPolynomial, Method};
pub use matpoly::{MatrixPolynomial, Reducibility, SpectralLineArrangement};
pub use poly::IntPoly;
pub use strata::{CurveShape, LocalModel, StrataPoset, StratumLabel};
pub use zonotope::{GraphicalZonotope, ZonotopePoint};
