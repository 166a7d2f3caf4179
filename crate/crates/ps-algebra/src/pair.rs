use num_bigint::BigInt;
use serde_json::Value;

use crate::ring::{JsonRing, Ring};
use crate::AlgebraError;

/// Product ring A × B with componentwise operations.
///
/// With both factors the integers, (0, 1) is an idempotent ℓ and the ring is
/// Z[ℓ]/(ℓ² − ℓ).
#[derive(Clone, Debug)]
pub struct PairRing<A, B> {
    pub left: A,
    pub right: B,
}

impl<A: Ring, B: Ring> PairRing<A, B> {
    pub fn new(left: A, right: B) -> Self {
        PairRing { left, right }
    }
}

impl<A: Ring, B: Ring> Ring for PairRing<A, B> {
    type Elem = (A::Elem, B::Elem);
    fn name(&self) -> String {
        format!("{} x {}", self.left.name(), self.right.name())
    }
    fn zero(&self) -> Self::Elem {
        (self.left.zero(), self.right.zero())
    }
    fn one(&self) -> Self::Elem {
        (self.left.one(), self.right.one())
    }
    fn from_int(&self, n: &BigInt) -> Self::Elem {
        (self.left.from_int(n), self.right.from_int(n))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.left.add(&a.0, &b.0), self.right.add(&a.1, &b.1))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        (self.left.neg(&a.0), self.right.neg(&a.1))
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.left.mul(&a.0, &b.0), self.right.mul(&a.1, &b.1))
    }
    fn adams(&self, r: u32, a: &Self::Elem) -> Self::Elem {
        (self.left.adams(r, &a.0), self.right.adams(r, &a.1))
    }
    fn exact_div(&self, a: &Self::Elem, d: &BigInt) -> Option<Self::Elem> {
        Some((self.left.exact_div(&a.0, d)?, self.right.exact_div(&a.1, d)?))
    }
    fn unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        Some((self.left.unit_inverse(&a.0)?, self.right.unit_inverse(&a.1)?))
    }
}

impl<A: JsonRing, B: JsonRing> JsonRing for PairRing<A, B> {
    fn to_json(&self, a: &Self::Elem) -> Value {
        Value::Array(vec![self.left.to_json(&a.0), self.right.to_json(&a.1)])
    }
    fn from_json(&self, v: &Value) -> Result<Self::Elem, AlgebraError> {
        match v.as_array().map(|a| a.as_slice()) {
            Some([x, y]) => Ok((self.left.from_json(x)?, self.right.from_json(y)?)),
            _ => Err(AlgebraError::Parse(format!("expected a two-element array, got {v}"))),
        }
    }
    fn display(&self, a: &Self::Elem) -> String {
        format!("({}, {})", self.left.display(&a.0), self.right.display(&a.1))
    }
}
