use num_bigint::BigInt;
use num_traits::Zero;
use ps_algebra::{Ring, Q};
use ps_types::SplittingType;

use crate::{Basis, PolysymElement};

/// PS ⊗ Q as a ring whose elements are presented in a fixed basis.
#[derive(Clone, Copy, Debug)]
pub struct PolysymRing {
    pub basis: Basis,
}

impl PolysymRing {
    pub fn new(basis: Basis) -> Self {
        PolysymRing { basis }
    }
}

impl Ring for PolysymRing {
    type Elem = PolysymElement;

    fn name(&self) -> String {
        format!("PS[{}]", self.basis)
    }
    fn zero(&self) -> PolysymElement {
        PolysymElement::zero(self.basis)
    }
    fn one(&self) -> PolysymElement {
        PolysymElement::one(self.basis)
    }
    fn from_int(&self, n: &BigInt) -> PolysymElement {
        PolysymElement::constant(self.basis, Q::from_integer(n.clone()))
    }
    fn add(&self, a: &PolysymElement, b: &PolysymElement) -> PolysymElement {
        a.convert(self.basis).add(b)
    }
    fn neg(&self, a: &PolysymElement) -> PolysymElement {
        a.convert(self.basis).neg()
    }
    fn mul(&self, a: &PolysymElement, b: &PolysymElement) -> PolysymElement {
        a.convert(self.basis).multiply(b)
    }
    fn adams(&self, r: u32, a: &PolysymElement) -> PolysymElement {
        a.convert(self.basis).adams(r)
    }
    fn exact_div(&self, a: &PolysymElement, d: &BigInt) -> Option<PolysymElement> {
        if d.is_zero() {
            return None;
        }
        Some(a.convert(self.basis).scale(&Q::new(1.into(), d.clone())))
    }
    fn unit_inverse(&self, a: &PolysymElement) -> Option<PolysymElement> {
        let empty = SplittingType::empty();
        if a.terms().len() == 1 && a.terms().contains_key(&empty) {
            let c = a.coeff(&empty);
            Some(PolysymElement::constant(self.basis, Q::from_integer(1.into()) / c))
        } else {
            None
        }
    }
}
