//! Equation solving and irreducible decomposition of algebraic sets over
//! finite linearly ordered semilattices.
//!
//! The carrier is the chain `L_l = {a_1 < a_2 < ... < a_l}` with meet
//! `a_i * a_j = a_min(i,j)`. An equation is an ordered pair of terms
//! (commutative words in variables), and the solution set of a single
//! equation in `n <= l` variables decomposes into irreducible components
//! indexed by permutations: full weakly increasing chains, plus chains
//! whose first two variables are glued by an equality. The crate provides
//!
//! - [`semilattice`]: the ambient structure, terms, points, equation
//!   satisfaction and `(k1, k2)` classification;
//! - [`parse`]: the text grammar (`"x1x2 = x1x3"`, `"x1 <= x2"`) and
//!   canonical rendering;
//! - [`engine`]: brute-force solution sets, the closure operator,
//!   coordinate semilattices `Γ(Y)`, and definition-level irreducibility
//!   and decomposition oracles;
//! - [`chain`]: the permutation-based decomposition, witness points, and
//!   component counting;
//! - [`counting`]: exact big-integer/rational counting formulas and the
//!   average component count.
//!
//! The decomposition in [`chain`] is validated against the independent
//! oracles in [`engine`] by the test suite, exhaustively at small sizes.

pub mod chain;
pub mod counting;
pub mod engine;
mod error;
pub mod parse;
pub mod semilattice;

pub use chain::{ChainComponent, Constraint, Kind, Permutation};
pub use engine::{AlgebraicSet, Caps, CoordinateSemilattice};
pub use error::{Error, Result};
pub use semilattice::{Element, Equation, Point, SemilatticeContext, Term};
