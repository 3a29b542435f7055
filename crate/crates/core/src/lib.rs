//! Strictly Neumaier graphs: parameter feasibility, Cayley-graph and fusion
//! constructions, and exact Jacobi-sum counting of `|S ∩ (S+1)|`.
//!
//! Exact ring arithmetic ([`charsums::CyclotomicInt`],
//! [`search::QuadraticRingElt`]) is generic over the coefficient type through
//! [`Coeff`]; the aliases below fix the usual choices.

pub mod arith;
pub mod cayley;
pub mod charsums;
pub mod error;
pub mod feasibility;
pub mod graph;
pub mod search;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

pub use error::{Error, Result};
pub use feasibility::NeumaierParams;
pub use graph::{Graph, SubsetKind, VertexSubset};

/// Integer coefficient ring for exact algebraic arithmetic.
pub trait Coeff:
    Clone + std::fmt::Debug + Eq + Signed + Integer + From<i64> + ToPrimitive + Send + Sync + 'static
{
}

impl<T> Coeff for T where
    T: Clone + std::fmt::Debug + Eq + Signed + Integer + From<i64> + ToPrimitive + Send + Sync + 'static
{
}

/// Arbitrary-precision cyclotomic integers.
pub type Cyclotomic = charsums::CyclotomicInt<num_bigint::BigInt>;
/// Machine-word cyclotomic integers; adequate when all sums stay below 2^63.
pub type Cyclotomic64 = charsums::CyclotomicInt<i64>;
/// Gaussian or Eisenstein integer with `i64` coordinates.
pub type QuadElt = search::QuadraticRingElt<i64>;
