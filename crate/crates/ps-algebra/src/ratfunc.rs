use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::poly::Poly;
use crate::rational::Q;
use crate::ring::{JsonRing, Ring};
use crate::AlgebraError;

/// Reduced quotient num/den in Q(w): gcd(num, den) = 1 and den is monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::Argument("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(RatFunc::from_poly(Poly::zero()));
        }
        let g = Poly::gcd(&num, &den);
        let num = num.div_rem(&g).0;
        let den = den.div_rem(&g).0;
        let lc = den.leading().recip();
        Ok(RatFunc { num: num.scale(&lc), den: den.scale(&lc) })
    }

    /// num/den already coprime; only the leading coefficient is fixed.
    fn normalized(num: Poly, den: Poly) -> Self {
        let lc = den.leading().recip();
        RatFunc { num: num.scale(&lc), den: den.scale(&lc) }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_poly(&self) -> bool {
        self.den.degree() == Some(0)
    }

    pub fn recip(&self) -> Result<Self, AlgebraError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    /// Value at a point where the reduced denominator does not vanish.
    pub fn eval(&self, x: &Q) -> Result<Q, AlgebraError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(AlgebraError::Argument("pole at evaluation point".into()));
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_poly() {
            self.num.to_string_var(var)
        } else {
            format!("({}) / ({})", self.num.to_string_var(var), self.den.to_string_var(var))
        }
    }
}

/// The rational-function field Q(w) with ψ_r(w) = w^r.
#[derive(Clone, Debug)]
pub struct RatFuncRing {
    pub var: String,
}

impl Default for RatFuncRing {
    fn default() -> Self {
        RatFuncRing { var: "w".into() }
    }
}

impl Ring for RatFuncRing {
    type Elem = RatFunc;
    fn name(&self) -> String {
        format!("Q({})", self.var)
    }
    fn zero(&self) -> RatFunc {
        RatFunc::from_poly(Poly::zero())
    }
    fn one(&self) -> RatFunc {
        RatFunc::from_poly(Poly::one())
    }
    fn from_int(&self, n: &BigInt) -> RatFunc {
        RatFunc::from_poly(Poly::constant(Q::from_integer(n.clone())))
    }
    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        if a.is_poly() && b.is_poly() {
            return RatFunc::from_poly(a.num.add(&b.num));
        }
        // only factors of gcd(den_a, den_b) can cancel
        let g = Poly::gcd(&a.den, &b.den);
        let (ad, bd) = (a.den.div_rem(&g).0, b.den.div_rem(&g).0);
        let num = a.num.mul(&bd).add(&b.num.mul(&ad));
        if num.is_zero() {
            return self.zero();
        }
        let h = Poly::gcd(&num, &g);
        RatFunc::normalized(num.div_rem(&h).0, ad.mul(&b.den.div_rem(&h).0))
    }
    fn neg(&self, a: &RatFunc) -> RatFunc {
        RatFunc { num: a.num.neg(), den: a.den.clone() }
    }
    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        if a.num.is_zero() || b.num.is_zero() {
            return self.zero();
        }
        if a.is_poly() && b.is_poly() {
            return RatFunc::from_poly(a.num.mul(&b.num));
        }
        let g1 = Poly::gcd(&a.num, &b.den);
        let g2 = Poly::gcd(&b.num, &a.den);
        let num = a.num.div_rem(&g1).0.mul(&b.num.div_rem(&g2).0);
        let den = a.den.div_rem(&g2).0.mul(&b.den.div_rem(&g1).0);
        RatFunc::normalized(num, den)
    }
    fn adams(&self, r: u32, a: &RatFunc) -> RatFunc {
        RatFunc::new(a.num.substitute_power(r), a.den.substitute_power(r)).unwrap()
    }
    fn exact_div(&self, a: &RatFunc, d: &BigInt) -> Option<RatFunc> {
        if d.is_zero() {
            return None;
        }
        Some(RatFunc { num: a.num.scale(&Q::from_integer(d.clone()).recip()), den: a.den.clone() })
    }
    fn is_zero(&self, a: &RatFunc) -> bool {
        a.num.is_zero()
    }
    fn unit_inverse(&self, a: &RatFunc) -> Option<RatFunc> {
        a.recip().ok()
    }
}

impl JsonRing for RatFuncRing {
    fn to_json(&self, a: &RatFunc) -> Value {
        json!({"num": a.num.to_json_var(&self.var), "den": a.den.to_json_var(&self.var)})
    }
    fn from_json(&self, v: &Value) -> Result<RatFunc, AlgebraError> {
        match (v.get("num"), v.get("den")) {
            (Some(n), Some(d)) => {
                RatFunc::new(Poly::from_json_value(n)?.1, Poly::from_json_value(d)?.1)
            }
            _ => Ok(RatFunc::from_poly(crate::PolyRing::rational(&self.var).from_json(v)?)),
        }
    }
    fn display(&self, a: &RatFunc) -> String {
        a.to_string_var(&self.var)
    }
}

impl RatFuncRing {
    pub fn w(&self) -> RatFunc {
        RatFunc::from_poly(Poly::x())
    }

    /// a^{-1} for nonzero a.
    pub fn inv(&self, a: &RatFunc) -> Result<RatFunc, AlgebraError> {
        a.recip()
    }

    pub fn pow_int(&self, a: &RatFunc, e: i64) -> Result<RatFunc, AlgebraError> {
        let p = self.pow(a, e.unsigned_abs() as u32);
        if e < 0 {
            p.recip()
        } else {
            Ok(p)
        }
    }
}

impl RatFunc {
    pub fn is_one(&self) -> bool {
        self.den.degree() == Some(0) && self.num.degree() == Some(0) && self.num.coeff(0).is_one()
    }
}
