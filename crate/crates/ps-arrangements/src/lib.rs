//! Arrangement numbers a(τ, λ) and e(τ, λ), the incidence algebra they
//! generate on degree-d types, its inverses, the Möbius function, and the
//! closed form for the top column of a⁻¹.

pub mod cache;
mod count;
pub mod identities;
mod monoid;
mod table;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use ps_algebra::arith::{factorial, mobius};
use ps_algebra::Q;
use ps_types::{enumerate_types, SplittingType};
use thiserror::Error;

pub use count::{count_arrangements, enumerate_arrangements, Arrangement};
pub use monoid::{monoid_oracle, MonoidReport};
pub use table::{ainv_top_column, incidence_table, IncidenceTable, Tag};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArrError {
    #[error("degree mismatch between {0} and {1}")]
    DegreeMismatch(String, String),
    #[error("{0}")]
    Argument(String),
    #[error("{0}")]
    Format(String),
}

/// The refinement order on degree-d types, as a dense relation.
#[derive(Clone, Debug)]
pub struct TypePoset {
    pub degree: u32,
    pub types: Vec<SplittingType>,
    /// leq[i][j] ⇔ types[i] ≤ types[j]
    pub leq: Vec<Vec<bool>>,
}

impl TypePoset {
    pub fn le(&self, a: &SplittingType, b: &SplittingType) -> bool {
        let i = self.types.iter().position(|t| t == a);
        let j = self.types.iter().position(|t| t == b);
        matches!((i, j), (Some(i), Some(j)) if self.leq[i][j])
    }

    /// Elements below nothing but themselves, and above nothing but themselves.
    pub fn extremes(&self) -> (Vec<SplittingType>, Vec<SplittingType>) {
        let n = self.types.len();
        let minimal = (0..n).filter(|&j| (0..n).all(|i| i == j || !self.leq[i][j])).map(|j| self.types[j].clone()).collect();
        let maximal = (0..n).filter(|&i| (0..n).all(|j| i == j || !self.leq[i][j])).map(|i| self.types[i].clone()).collect();
        (minimal, maximal)
    }

    /// Up-sets under the elementary merge/forget moves.
    pub fn closure_relation(&self) -> Vec<Vec<bool>> {
        self.types
            .iter()
            .map(|t| {
                let up: BTreeSet<SplittingType> = ps_types::reachable_up(t);
                self.types.iter().map(|u| up.contains(u)).collect()
            })
            .collect()
    }
}

/// τ ≤ λ iff some arrangement of τ into λ exists.
pub fn poset(d: u32) -> TypePoset {
    let a = incidence_table(d, Tag::A);
    let types = enumerate_types(d);
    let leq = (0..types.len()).map(|i| (0..types.len()).map(|j| !a.entry(i, j).is_zero()).collect()).collect();
    TypePoset { degree: d, types, leq }
}

/// Closed form of a⁻¹_{τ,(d)}: zero for mixed τ; for m-pure τ with r parts,
/// (μ(m)/m)·((−1)^{r−1}/r)·r!/∏ τ[b^m]!.
pub fn top_stratum_inverse(tau: &SplittingType, d: u32) -> Result<Q, ArrError> {
    if tau.degree() != d {
        return Err(ArrError::DegreeMismatch(tau.to_string(), format!("({d})")));
    }
    let Some(m) = tau.pure_multiplicity() else { return Ok(Q::zero()) };
    let r = tau.length() as u64;
    let sign = if r % 2 == 1 { 1 } else { -1 };
    let num = BigInt::from(mobius(m as u64) * sign) * factorial(r);
    let den = BigInt::from(m as u64 * r) * tau.aut_order();
    Ok(Q::new(num, den))
}

/// Check every a⁻¹ entry lies in Z[1/d!].
pub fn integrality_hook(t: &IncidenceTable) -> Result<(), (SplittingType, SplittingType)> {
    let df = factorial(t.degree as u64);
    for (i, row) in t.rows().iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            let mut den = x.denom().clone();
            // strip factors shared with d!
            loop {
                let g = num_integer::Integer::gcd(&den, &df);
                if g == BigInt::from(1) {
                    break;
                }
                den /= g;
            }
            if !den.abs().is_zero() && den != BigInt::from(1) {
                return Err((t.types()[i].clone(), t.types()[j].clone()));
            }
        }
    }
    Ok(())
}
