use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::rational::{q_from_json, q_to_string, Q};
use crate::ring::{fmt_coeff_term, AdamsKind, JsonRing, Ring};
use crate::AlgebraError;

/// Sparse univariate polynomial with rational coefficients; no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: BTreeMap<u32, Q>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Poly::monomial(c, 0)
    }

    pub fn monomial(c: Q, e: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        Poly { coeffs }
    }

    /// The variable itself.
    pub fn x() -> Self {
        Poly::monomial(Q::one(), 1)
    }

    pub fn from_coeffs<I: IntoIterator<Item = (u32, Q)>>(it: I) -> Self {
        let mut p = Poly::zero();
        for (e, c) in it {
            p.add_term(e, &c);
        }
        p
    }

    /// Σ_{i<n} x^i.
    pub fn geometric(n: u64) -> Self {
        Poly::from_coeffs((0..n as u32).map(|i| (i, Q::one())))
    }

    fn add_term(&mut self, e: u32, c: &Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: u32) -> Q {
        self.coeffs.get(&e).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&u32, &Q)> {
        self.coeffs.iter()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading(&self) -> Q {
        self.coeffs.values().next_back().cloned().unwrap_or_else(Q::zero)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (e, c) in &o.coeffs {
            r.add_term(*e, c);
        }
        r
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut r = Poly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &o.coeffs {
                r.add_term(e1 + e2, &(c1 * c2));
            }
        }
        r
    }

    pub fn scale(&self, q: &Q) -> Poly {
        if q.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * q)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        (0..n).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    /// f(x^r).
    pub fn substitute_power(&self, r: u32) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e * r, c.clone())).collect(),
        }
    }

    pub fn eval(&self, x: &Q) -> Q {
        // Horner over the sparse exponents.
        let mut acc = Q::zero();
        let mut last = match self.degree() {
            Some(d) => d,
            None => return acc,
        };
        for (e, c) in self.coeffs.iter().rev() {
            acc *= pow_q(x, last - e);
            acc += c;
            last = *e;
        }
        acc * pow_q(x, last)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.denom().is_one())
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading();
        let mut q = Poly::zero();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = r.leading() / &lc;
            let t = Poly::monomial(c, rd - dd);
            r = r.sub(&t.mul(d));
            q = q.add(&t);
        }
        (q, r)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.leading().recip())
    }

    /// Monic gcd (zero for gcd(0, 0)).
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            // keep coefficients small
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            s.push_str(&fmt_coeff_term(c, &mono, i == 0));
        }
        s
    }

    pub fn to_json_var(&self, var: &str) -> Value {
        let mut m = Map::new();
        for (e, c) in &self.coeffs {
            m.insert(e.to_string(), Value::String(q_to_string(c)));
        }
        json!({"var": var, "coeffs": m})
    }

    pub fn from_json_value(v: &Value) -> Result<(String, Poly), AlgebraError> {
        let obj = v
            .as_object()
            .ok_or_else(|| AlgebraError::Parse(format!("expected polynomial object, got {v}")))?;
        let var = obj.get("var").and_then(|x| x.as_str()).unwrap_or("w").to_string();
        let coeffs = obj
            .get("coeffs")
            .and_then(|x| x.as_object())
            .ok_or_else(|| AlgebraError::Parse("polynomial needs a coeffs object".into()))?;
        let mut p = Poly::zero();
        for (k, c) in coeffs {
            let e: u32 = k
                .parse()
                .map_err(|_| AlgebraError::Parse(format!("bad exponent {k:?}")))?;
            p.add_term(e, &q_from_json(c)?);
        }
        Ok((var, p))
    }
}

fn pow_q(x: &Q, e: u32) -> Q {
    num_traits::pow(x.clone(), e as usize)
}

/// Univariate polynomial ring over Z or Q with trivial or Frobenius Adams operations.
#[derive(Clone, Debug)]
pub struct PolyRing {
    pub var: String,
    pub integral: bool,
    pub adams: AdamsKind,
}

impl PolyRing {
    /// Z[w] with ψ_r(w) = w^r.
    pub fn motivic() -> Self {
        PolyRing { var: "w".into(), integral: true, adams: AdamsKind::Frobenius }
    }

    /// Q[w] with ψ_r(w) = w^r.
    pub fn rational(var: &str) -> Self {
        PolyRing { var: var.into(), integral: false, adams: AdamsKind::Frobenius }
    }

    /// Q[var] with trivial Adams operations.
    pub fn trivial(var: &str) -> Self {
        PolyRing { var: var.into(), integral: false, adams: AdamsKind::Trivial }
    }
}

impl Ring for PolyRing {
    type Elem = Poly;
    fn name(&self) -> String {
        format!(
            "{}[{}]{}",
            if self.integral { "Z" } else { "Q" },
            self.var,
            if self.adams == AdamsKind::Trivial { " (trivial Adams)" } else { "" }
        )
    }
    fn zero(&self) -> Poly {
        Poly::zero()
    }
    fn one(&self) -> Poly {
        Poly::one()
    }
    fn from_int(&self, n: &BigInt) -> Poly {
        Poly::constant(Q::from_integer(n.clone()))
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a.add(b)
    }
    fn neg(&self, a: &Poly) -> Poly {
        a.neg()
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a.mul(b)
    }
    fn adams(&self, r: u32, a: &Poly) -> Poly {
        match self.adams {
            AdamsKind::Trivial => a.clone(),
            AdamsKind::Frobenius => a.substitute_power(r),
        }
    }
    fn exact_div(&self, a: &Poly, d: &BigInt) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        let p = a.scale(&Q::from_integer(d.clone()).recip());
        (!self.integral || p.is_integral()).then_some(p)
    }
    fn is_zero(&self, a: &Poly) -> bool {
        a.is_zero()
    }
    fn unit_inverse(&self, a: &Poly) -> Option<Poly> {
        match a.degree() {
            Some(0) => {
                let c = a.coeff(0).recip();
                (!self.integral || c.denom().is_one()).then(|| Poly::constant(c))
            }
            _ => None,
        }
    }
}

impl JsonRing for PolyRing {
    fn to_json(&self, a: &Poly) -> Value {
        a.to_json_var(&self.var)
    }
    fn from_json(&self, v: &Value) -> Result<Poly, AlgebraError> {
        let p = match v {
            Value::Object(_) => Poly::from_json_value(v)?.1,
            _ => Poly::constant(q_from_json(v)?),
        };
        if self.integral && !p.is_integral() {
            return Err(AlgebraError::Type("non-integral coefficient in Z[w]".into()));
        }
        Ok(p)
    }
    fn display(&self, a: &Poly) -> String {
        a.to_string_var(&self.var)
    }
}
