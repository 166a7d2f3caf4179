//! Graded plethysm over an arbitrary Adams ring: Newton polynomials, zeta
//! inversion (u from x) and expansion (x from u), virtual strata, multinomial
//! strata for binomial rings, and powerfree cycle classes.

mod generic;
mod newton;
mod powerfree;
mod strata;
mod zeta;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use ps_algebra::{AlgebraError, JsonRing, Ring, Q};
use ps_arrangements::ArrError;
use serde_json::{json, Value};
use thiserror::Error;

pub use generic::generic_plethysm;
pub use newton::{newton_poly, NewtonPolynomial};
pub use powerfree::{powerfree, powerfree_series};
pub use strata::{binomial_strata, conf_class, conf_recurrence_holds, multinomial, virtual_stratum, StratumKind};
pub use zeta::{forward_zeta, invert_zeta, invert_zeta_all, invert_zeta_direct};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PlethysmError {
    #[error("integrality: {0}")]
    Integrality(String),
    #[error("{0}")]
    Argument(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Arrangement(#[from] ArrError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    Closed,
    Irreducible,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::Closed => "closed",
            Role::Irreducible => "irreducible",
        })
    }
}

/// x_1..x_N (closed) or u_1..u_N (irreducible); x_0 = 1 is implicit.
#[derive(Clone, Debug, PartialEq)]
pub struct MeasureSequence<E> {
    pub role: Role,
    pub values: Vec<E>,
}

impl<E: Clone> MeasureSequence<E> {
    pub fn closed(values: Vec<E>) -> Self {
        MeasureSequence { role: Role::Closed, values }
    }

    pub fn irreducible(values: Vec<E>) -> Self {
        MeasureSequence { role: Role::Irreducible, values }
    }

    /// Value in degree k ≥ 1.
    pub fn get(&self, k: usize) -> Option<&E> {
        k.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn to_json<R: JsonRing<Elem = E>>(&self, ring: &R) -> Value {
        json!({
            "ring": ring.name(),
            "role": self.role.to_string(),
            "values": self.values.iter().map(|v| ring.to_json(v)).collect::<Vec<_>>(),
        })
    }

    pub fn from_json<R: JsonRing<Elem = E>>(ring: &R, v: &Value) -> Result<Self, PlethysmError> {
        let bad = |w: &str| PlethysmError::Argument(format!("measure sequence JSON: {w}"));
        let role = match v.get("role").and_then(|r| r.as_str()) {
            Some("closed") => Role::Closed,
            Some("irreducible") => Role::Irreducible,
            _ => return Err(bad("role must be closed or irreducible")),
        };
        let values = v
            .get("values")
            .and_then(|x| x.as_array())
            .ok_or_else(|| bad("missing values"))?
            .iter()
            .map(|x| ring.from_json(x))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MeasureSequence { role, values })
    }
}

/// Σ q_i·e_i in a ring that may lack most inverses: scale by the common
/// denominator, sum, and divide once.
pub(crate) fn rational_combination<R: Ring>(ring: &R, terms: &[(Q, R::Elem)]) -> Result<R::Elem, PlethysmError> {
    let l = terms.iter().fold(BigInt::one(), |acc, (q, _)| acc.lcm(q.denom()));
    let parts: Vec<R::Elem> = terms
        .iter()
        .map(|(q, e)| ring.scale_int(e, &(q.numer() * (&l / q.denom()))))
        .collect();
    let total = ring.sum(parts.iter());
    if l.is_one() {
        return Ok(total);
    }
    ring.exact_div(&total, &l).ok_or_else(|| PlethysmError::Integrality(format!("division by {l} in {}", ring.name())))
}
