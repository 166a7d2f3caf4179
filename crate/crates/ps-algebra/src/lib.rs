//! Exact arithmetic: rationals, univariate and multivariate polynomials,
//! rational functions, pair rings, truncated power series and the
//! truncated big Witt ring, each carrying its own Adams operations.

pub mod arith;
pub mod error;
pub mod mpoly;
pub mod pair;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod ring;
pub mod series;
pub mod witt;

pub use error::AlgebraError;
pub use mpoly::{MPoly, MPolyRing};
pub use pair::PairRing;
pub use poly::{Poly, PolyRing};
pub use ratfunc::{RatFunc, RatFuncRing};
pub use rational::{parse_q, q_to_string, Q};
pub use ring::{AdamsKind, Integers, JsonRing, Rationals, Ring};
pub use series::Series;
pub use witt::{Witt, WittRing};

pub use num_bigint::BigInt;
