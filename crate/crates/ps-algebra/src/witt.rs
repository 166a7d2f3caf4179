use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::Value;

use crate::rational::Q;
use crate::ring::{JsonRing, Ring};
use crate::series::Series;
use crate::{AlgebraError, Rationals};

/// 1 + a_1 t + … + a_N t^N with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witt {
    coeffs: Vec<Q>,
}

impl Witt {
    pub fn from_coeffs(coeffs: Vec<Q>) -> Result<Self, AlgebraError> {
        if coeffs.first().map(|c| c.is_one()) != Some(true) {
            return Err(AlgebraError::Argument("Witt vectors have constant term 1".into()));
        }
        Ok(Witt { coeffs })
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// (g_1, …, g_N) with log f = Σ g_i t^i / i.
    pub fn ghosts(&self) -> Vec<Q> {
        let l = Series::new(self.coeffs.clone()).log(&Rationals).expect("constant term is 1");
        l.coeffs
            .into_iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Q::from_integer(BigInt::from(i)))
            .collect()
    }

    pub fn from_ghosts(g: &[Q]) -> Self {
        let mut l = vec![Q::zero()];
        l.extend(g.iter().enumerate().map(|(i, x)| x / Q::from_integer(BigInt::from(i + 1))));
        let f = Series::new(l).exp(&Rationals).expect("rational exp");
        Witt { coeffs: f.coeffs }
    }
}

/// The big Witt ring Λ(Q) truncated at order N.
///
/// ψ_r reads ghost (g_r, g_2r, …); ghost slots beyond N/r are unknown at this
/// truncation and are set to zero, which keeps ψ_r additive, multiplicative
/// and ψ_a ψ_b = ψ_ab, but ψ_r(1) is only 1 up to order N/r.
#[derive(Clone, Copy, Debug)]
pub struct WittRing {
    pub order: usize,
}

impl WittRing {
    pub fn new(order: usize) -> Self {
        WittRing { order }
    }

    fn check(&self, a: &Witt) {
        assert_eq!(a.order(), self.order, "Witt truncation mismatch");
    }

    /// Witt-add two elements, rejecting mismatched truncation.
    pub fn try_add(&self, a: &Witt, b: &Witt) -> Result<Witt, AlgebraError> {
        if a.order() != b.order() {
            return Err(AlgebraError::Argument("mismatched Witt truncation".into()));
        }
        Ok(self.add(a, b))
    }

    pub fn try_mul(&self, a: &Witt, b: &Witt) -> Result<Witt, AlgebraError> {
        if a.order() != b.order() {
            return Err(AlgebraError::Argument("mismatched Witt truncation".into()));
        }
        Ok(self.mul(a, b))
    }

    /// (1 − a t)^{-1}.
    pub fn geometric(&self, a: &Q) -> Witt {
        Witt { coeffs: (0..=self.order).map(|i| num_traits::pow(a.clone(), i)).collect() }
    }
}

impl Ring for WittRing {
    type Elem = Witt;
    fn name(&self) -> String {
        format!("W(Q) mod t^{}", self.order + 1)
    }
    fn zero(&self) -> Witt {
        let mut c = vec![Q::zero(); self.order + 1];
        c[0] = Q::one();
        Witt { coeffs: c }
    }
    fn one(&self) -> Witt {
        Witt { coeffs: vec![Q::one(); self.order + 1] }
    }
    fn from_int(&self, n: &BigInt) -> Witt {
        Witt::from_ghosts(&vec![Q::from_integer(n.clone()); self.order])
    }
    fn add(&self, a: &Witt, b: &Witt) -> Witt {
        self.check(a);
        self.check(b);
        let p = Series::new(a.coeffs.clone()).mul(&Rationals, &Series::new(b.coeffs.clone()));
        Witt { coeffs: p.coeffs }
    }
    fn neg(&self, a: &Witt) -> Witt {
        let p = Series::new(a.coeffs.clone()).inv(&Rationals).expect("unit constant term");
        Witt { coeffs: p.coeffs }
    }
    fn mul(&self, a: &Witt, b: &Witt) -> Witt {
        self.check(a);
        self.check(b);
        let g: Vec<Q> = a.ghosts().iter().zip(b.ghosts()).map(|(x, y)| x * y).collect();
        Witt::from_ghosts(&g)
    }
    fn adams(&self, r: u32, a: &Witt) -> Witt {
        if r == 1 {
            return a.clone();
        }
        let g = a.ghosts();
        let n = self.order;
        let r = r as usize;
        let h: Vec<Q> = (1..=n).map(|i| if i * r <= n { g[i * r - 1].clone() } else { Q::zero() }).collect();
        Witt::from_ghosts(&h)
    }
    fn exact_div(&self, a: &Witt, d: &BigInt) -> Option<Witt> {
        if d.is_zero() {
            return None;
        }
        let dq = Q::from_integer(d.clone());
        let g: Vec<Q> = a.ghosts().iter().map(|x| x / &dq).collect();
        Some(Witt::from_ghosts(&g))
    }
    fn is_zero(&self, a: &Witt) -> bool {
        a.coeffs.iter().skip(1).all(|c| c.is_zero())
    }
    fn unit_inverse(&self, a: &Witt) -> Option<Witt> {
        let g = a.ghosts();
        if g.iter().any(|x| x.is_zero()) {
            return None;
        }
        Some(Witt::from_ghosts(&g.iter().map(|x| x.recip()).collect::<Vec<_>>()))
    }
}

impl JsonRing for WittRing {
    fn to_json(&self, a: &Witt) -> Value {
        Series::new(a.coeffs.clone()).to_json(&Rationals)
    }
    fn from_json(&self, v: &Value) -> Result<Witt, AlgebraError> {
        let s = Series::from_json(&Rationals, v)?;
        if s.order() != self.order {
            return Err(AlgebraError::Argument(format!(
                "Witt element of order {} in a ring of order {}",
                s.order(),
                self.order
            )));
        }
        Witt::from_coeffs(s.coeffs)
    }
    fn display(&self, a: &Witt) -> String {
        let p = crate::Poly::from_coeffs(a.coeffs.iter().cloned().enumerate().map(|(i, c)| (i as u32, c)));
        p.to_string_var("t")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_int;

    #[test]
    fn geometric_product() {
        let w = WittRing::new(6);
        let a = w.geometric(&q_int(2));
        let b = w.geometric(&q_int(3));
        assert_eq!(w.mul(&a, &b), w.geometric(&q_int(6)));
        assert_eq!(w.add(&a, &w.zero()), a);
        assert_eq!(w.mul(&a, &w.one()), a);
        assert_eq!(w.adams(2, &w.one()).coeffs()[..4], w.one().coeffs()[..4]);
        assert!(w.try_add(&a, &WittRing::new(3).one()).is_err());
    }

    #[test]
    fn ghosts_of_geometric() {
        let w = WittRing::new(5);
        let g = w.geometric(&q_int(3)).ghosts();
        assert_eq!(g, vec![q_int(3), q_int(9), q_int(27), q_int(81), q_int(243)]);
    }
}
