use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::AlgebraError;

/// Arbitrary precision rational, always reduced with positive denominator.
pub type Q = BigRational;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// "p/q", or "p" for integers.
pub fn q_to_string(q: &Q) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_q(s: &str) -> Result<Q, AlgebraError> {
    let s = s.trim();
    let bad = || AlgebraError::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        None => Ok(Q::from_integer(s.parse::<BigInt>().map_err(|_| bad())?)),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(AlgebraError::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Q::new(n, d))
        }
    }
}

/// Accepts a JSON string "p/q" or a JSON integer.
pub fn q_from_json(v: &serde_json::Value) -> Result<Q, AlgebraError> {
    match v {
        serde_json::Value::String(s) => parse_q(s),
        serde_json::Value::Number(n) if n.is_i64() => Ok(q_int(n.as_i64().unwrap())),
        _ => Err(AlgebraError::Parse(format!("expected rational, got {v}"))),
    }
}

pub fn q_is_integer(q: &Q) -> bool {
    q.denom().is_one()
}
