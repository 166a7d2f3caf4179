use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::ring::{JsonRing, Ring};
use crate::AlgebraError;

/// c_0 + c_1 t + … + c_N t^N, truncated at order N = len − 1.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<E> {
    pub coeffs: Vec<E>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Exp,
    Log,
    Inv,
}

impl<E: Clone + PartialEq> Series<E> {
    pub fn new(coeffs: Vec<E>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn zero<R: Ring<Elem = E>>(ring: &R, order: usize) -> Self {
        Series { coeffs: vec![ring.zero(); order + 1] }
    }

    pub fn one<R: Ring<Elem = E>>(ring: &R, order: usize) -> Self {
        let mut s = Self::zero(ring, order);
        s.coeffs[0] = ring.one();
        s
    }

    pub fn truncate(&self, order: usize) -> Self {
        Series { coeffs: self.coeffs[..=order.min(self.order())].to_vec() }
    }

    pub fn add<R: Ring<Elem = E>>(&self, ring: &R, o: &Self) -> Self {
        let n = self.order().min(o.order());
        Series { coeffs: (0..=n).map(|i| ring.add(&self.coeffs[i], &o.coeffs[i])).collect() }
    }

    pub fn sub<R: Ring<Elem = E>>(&self, ring: &R, o: &Self) -> Self {
        let n = self.order().min(o.order());
        Series { coeffs: (0..=n).map(|i| ring.sub(&self.coeffs[i], &o.coeffs[i])).collect() }
    }

    pub fn mul<R: Ring<Elem = E>>(&self, ring: &R, o: &Self) -> Self {
        let n = self.order().min(o.order());
        let mut out = vec![ring.zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if ring.is_zero(a) {
                continue;
            }
            for j in 0..=(n - i) {
                let b = &o.coeffs[j];
                if !ring.is_zero(b) {
                    out[i + j] = ring.add(&out[i + j], &ring.mul(a, b));
                }
            }
        }
        Series { coeffs: out }
    }

    /// f(t^r), same truncation.
    pub fn substitute_power<R: Ring<Elem = E>>(&self, ring: &R, r: usize) -> Self {
        let mut out = vec![ring.zero(); self.order() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * r <= self.order() {
                out[i * r] = c.clone();
            }
        }
        Series { coeffs: out }
    }

    pub fn inv<R: Ring<Elem = E>>(&self, ring: &R) -> Result<Self, AlgebraError> {
        let c0inv = ring
            .unit_inverse(&self.coeffs[0])
            .ok_or_else(|| AlgebraError::Argument("inverse needs an invertible constant term".into()))?;
        let n = self.order();
        let mut out: Vec<E> = Vec::with_capacity(n + 1);
        out.push(c0inv.clone());
        for k in 1..=n {
            let mut acc = ring.zero();
            for i in 1..=k {
                acc = ring.add(&acc, &ring.mul(&self.coeffs[i], &out[k - i]));
            }
            out.push(ring.neg(&ring.mul(&c0inv, &acc)));
        }
        Ok(Series { coeffs: out })
    }

    pub fn log<R: Ring<Elem = E>>(&self, ring: &R) -> Result<Self, AlgebraError> {
        if self.coeffs[0] != ring.one() {
            return Err(AlgebraError::Argument("log needs constant term 1".into()));
        }
        // n g_n = n f_n − Σ_{k=1}^{n−1} k g_k f_{n−k}
        let n = self.order();
        let mut g = vec![ring.zero(); n + 1];
        for m in 1..=n {
            let mut acc = ring.scale_int(&self.coeffs[m], &BigInt::from(m));
            for k in 1..m {
                let t = ring.scale_int(&ring.mul(&g[k], &self.coeffs[m - k]), &BigInt::from(k));
                acc = ring.sub(&acc, &t);
            }
            g[m] = ring
                .exact_div(&acc, &BigInt::from(m))
                .ok_or_else(|| AlgebraError::Integrality(format!("log coefficient {m} not divisible")))?;
        }
        Ok(Series { coeffs: g })
    }

    pub fn exp<R: Ring<Elem = E>>(&self, ring: &R) -> Result<Self, AlgebraError> {
        if !ring.is_zero(&self.coeffs[0]) {
            return Err(AlgebraError::Argument("exp needs constant term 0".into()));
        }
        // n f_n = Σ_{k=1}^n k g_k f_{n−k}
        let n = self.order();
        let mut f = vec![ring.zero(); n + 1];
        f[0] = ring.one();
        for m in 1..=n {
            let mut acc = ring.zero();
            for k in 1..=m {
                if ring.is_zero(&self.coeffs[k]) {
                    continue;
                }
                let t = ring.scale_int(&ring.mul(&self.coeffs[k], &f[m - k]), &BigInt::from(k));
                acc = ring.add(&acc, &t);
            }
            f[m] = ring
                .exact_div(&acc, &BigInt::from(m))
                .ok_or_else(|| AlgebraError::Integrality(format!("exp coefficient {m} not divisible")))?;
        }
        Ok(Series { coeffs: f })
    }

    pub fn apply<R: Ring<Elem = E>>(&self, ring: &R, op: SeriesOp) -> Result<Self, AlgebraError> {
        match op {
            SeriesOp::Exp => self.exp(ring),
            SeriesOp::Log => self.log(ring),
            SeriesOp::Inv => self.inv(ring),
        }
    }
}

impl<E: Clone + PartialEq> Series<E> {
    pub fn to_json<R: JsonRing<Elem = E>>(&self, ring: &R) -> Value {
        json!({
            "order": self.order(),
            "coeffs": self.coeffs.iter().map(|c| ring.to_json(c)).collect::<Vec<_>>(),
        })
    }

    pub fn from_json<R: JsonRing<Elem = E>>(ring: &R, v: &Value) -> Result<Self, AlgebraError> {
        let coeffs = v
            .get("coeffs")
            .and_then(|c| c.as_array())
            .ok_or_else(|| AlgebraError::Parse("series needs a coeffs array".into()))?;
        let mut out = coeffs.iter().map(|c| ring.from_json(c)).collect::<Result<Vec<_>, _>>()?;
        if let Some(order) = v.get("order").and_then(|o| o.as_u64()) {
            out.resize(order as usize + 1, ring.zero());
        }
        if out.is_empty() {
            return Err(AlgebraError::Parse("empty series".into()));
        }
        Ok(Series { coeffs: out })
    }
}
