use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::rational::{q_from_json, q_to_string, Q};
use crate::AlgebraError;

/// How a ring's Adams operations act.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdamsKind {
    /// ψ_r is the identity.
    Trivial,
    /// ψ_r substitutes every variable v by v^r.
    Frobenius,
}

/// A commutative ring descriptor. Elements are plain values; all context
/// (truncation orders, variable counts) lives in the descriptor.
pub trait Ring: Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn name(&self) -> String;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: &BigInt) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// ψ_r for r ≥ 1. Callers validate r; see [`adams`].
    fn adams(&self, r: u32, a: &Self::Elem) -> Self::Elem;
    /// y with d·y = a, if it exists.
    fn exact_div(&self, a: &Self::Elem, d: &BigInt) -> Option<Self::Elem>;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_int(&BigInt::from(n))
    }

    fn scale_int(&self, a: &Self::Elem, n: &BigInt) -> Self::Elem {
        self.mul(&self.from_int(n), a)
    }

    /// q·a when the denominator of q divides exactly.
    fn scale_q(&self, a: &Self::Elem, q: &Q) -> Option<Self::Elem> {
        let num = self.scale_int(a, q.numer());
        if q.denom().is_one() {
            Some(num)
        } else {
            self.exact_div(&num, q.denom())
        }
    }

    fn pow(&self, a: &Self::Elem, e: u32) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn sum<'a, I: IntoIterator<Item = &'a Self::Elem>>(&self, it: I) -> Self::Elem
    where
        Self::Elem: 'a,
    {
        it.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    /// Inverse of a unit, where the ring can find one cheaply.
    fn unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if *a == self.one() {
            Some(self.one())
        } else if *a == self.neg(&self.one()) {
            Some(a.clone())
        } else {
            None
        }
    }
}

/// Checked entry point for ψ_r.
pub fn adams<R: Ring>(ring: &R, r: u32, x: &R::Elem) -> Result<R::Elem, AlgebraError> {
    if r == 0 {
        return Err(AlgebraError::Argument("adams operation needs r >= 1".into()));
    }
    Ok(ring.adams(r, x))
}

/// Checked entry point for exact division; failure is an ordinary value.
pub fn exact_div_by_int<R: Ring>(ring: &R, x: &R::Elem, d: u64) -> Result<Option<R::Elem>, AlgebraError> {
    if d == 0 {
        return Err(AlgebraError::Argument("division by zero".into()));
    }
    Ok(ring.exact_div(x, &BigInt::from(d)))
}

/// Rings whose elements have a JSON encoding.
pub trait JsonRing: Ring {
    fn to_json(&self, a: &Self::Elem) -> Value;
    fn from_json(&self, v: &Value) -> Result<Self::Elem, AlgebraError>;
    fn display(&self, a: &Self::Elem) -> String;
}

/// Z with trivial Adams operations.
#[derive(Clone, Copy, Debug, Default)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;
    fn name(&self) -> String {
        "Z".into()
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_int(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn adams(&self, _r: u32, a: &BigInt) -> BigInt {
        a.clone()
    }
    fn exact_div(&self, a: &BigInt, d: &BigInt) -> Option<BigInt> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = a.div_rem(d);
        r.is_zero().then_some(q)
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
}

impl JsonRing for Integers {
    fn to_json(&self, a: &BigInt) -> Value {
        Value::String(a.to_string())
    }
    fn from_json(&self, v: &Value) -> Result<BigInt, AlgebraError> {
        let q = q_from_json(v)?;
        if !q.denom().is_one() {
            return Err(AlgebraError::Type(format!("{} is not an integer", q_to_string(&q))));
        }
        Ok(q.numer().clone())
    }
    fn display(&self, a: &BigInt) -> String {
        a.to_string()
    }
}

/// Q with trivial Adams operations.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = Q;
    fn name(&self) -> String {
        "Q".into()
    }
    fn zero(&self) -> Q {
        Q::zero()
    }
    fn one(&self) -> Q {
        Q::one()
    }
    fn from_int(&self, n: &BigInt) -> Q {
        Q::from_integer(n.clone())
    }
    fn add(&self, a: &Q, b: &Q) -> Q {
        a + b
    }
    fn neg(&self, a: &Q) -> Q {
        -a
    }
    fn mul(&self, a: &Q, b: &Q) -> Q {
        a * b
    }
    fn adams(&self, _r: u32, a: &Q) -> Q {
        a.clone()
    }
    fn exact_div(&self, a: &Q, d: &BigInt) -> Option<Q> {
        (!d.is_zero()).then(|| a / Q::from_integer(d.clone()))
    }
    fn is_zero(&self, a: &Q) -> bool {
        a.is_zero()
    }
    fn unit_inverse(&self, a: &Q) -> Option<Q> {
        (!a.is_zero()).then(|| a.recip())
    }
}

impl JsonRing for Rationals {
    fn to_json(&self, a: &Q) -> Value {
        Value::String(q_to_string(a))
    }
    fn from_json(&self, v: &Value) -> Result<Q, AlgebraError> {
        q_from_json(v)
    }
    fn display(&self, a: &Q) -> String {
        q_to_string(a)
    }
}

pub(crate) fn fmt_coeff_term(c: &Q, mono: &str, first: bool) -> String {
    let neg = c.is_negative();
    let abs = c.abs();
    let mut s = String::new();
    if first {
        if neg {
            s.push('-');
        }
    } else {
        s.push_str(if neg { " - " } else { " + " });
    }
    if mono.is_empty() {
        s.push_str(&q_to_string(&abs));
    } else if abs.is_one() {
        s.push_str(mono);
    } else {
        s.push_str(&format!("{}*{}", q_to_string(&abs), mono));
    }
    s
}
