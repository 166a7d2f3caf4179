use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use ps_algebra::{parse_q, q_to_string, Q};
use ps_types::SplittingType;
use serde_json::{json, Value};

use crate::convert::{self, add_into, from_h, h_adams, h_mul, to_h, Coords};
use crate::{Basis, PolysymError};

/// A finite rational combination of basis elements B_τ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolysymElement {
    basis: Basis,
    terms: Coords,
}

impl PolysymElement {
    pub fn zero(basis: Basis) -> Self {
        PolysymElement { basis, terms: Coords::new() }
    }

    pub fn one(basis: Basis) -> Self {
        Self::basis_element(basis, SplittingType::empty())
    }

    pub fn constant(basis: Basis, c: Q) -> Self {
        Self::from_terms(basis, [(SplittingType::empty(), c)])
    }

    pub fn basis_element(basis: Basis, t: SplittingType) -> Self {
        Self::from_terms(basis, [(t, Q::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (SplittingType, Q)>>(basis: Basis, it: I) -> Self {
        let mut terms = Coords::new();
        for (t, x) in it {
            add_into(&mut terms, t, x);
        }
        PolysymElement { basis, terms }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<SplittingType, Q> {
        &self.terms
    }

    pub fn coeff(&self, t: &SplittingType) -> Q {
        self.terms.get(t).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|t| t.degree()).max()
    }

    /// The degree-d slice.
    pub fn homogeneous(&self, d: u32) -> Self {
        PolysymElement {
            basis: self.basis,
            terms: self.terms.iter().filter(|(t, _)| t.degree() == d).map(|(t, x)| (t.clone(), x.clone())).collect(),
        }
    }

    pub fn convert(&self, to: Basis) -> Self {
        PolysymElement { basis: to, terms: convert::convert(self.basis, to, &self.terms) }
    }

    pub fn add(&self, o: &Self) -> Self {
        let o = o.convert(self.basis);
        let mut terms = self.terms.clone();
        for (t, x) in o.terms {
            add_into(&mut terms, t, x);
        }
        PolysymElement { basis: self.basis, terms }
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::from_terms(self.basis, self.terms.iter().map(|(t, x)| (t.clone(), x * c)))
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Q::one())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// Product, returned in the basis of `self`.
    pub fn multiply(&self, o: &Self) -> Self {
        let h = h_mul(&to_h(self.basis, &self.terms), &to_h(o.basis, &o.terms));
        PolysymElement { basis: self.basis, terms: from_h(self.basis, &h) }
    }

    /// ψ_r, with ψ_r H_{d^m} = H_{d^{rm}}.
    pub fn adams(&self, r: u32) -> Self {
        assert!(r >= 1, "adams operation needs r >= 1");
        let h = h_adams(r, &to_h(self.basis, &self.terms));
        PolysymElement { basis: self.basis, terms: from_h(self.basis, &h) }
    }

    /// The ring involution H_{d^m} ↦ E_{d^m}.
    pub fn omega(&self) -> Self {
        let h = to_h(self.basis, &self.terms);
        let as_e = PolysymElement { basis: Basis::E, terms: h };
        as_e.convert(self.basis)
    }

    /// ⟨x, y⟩ with ⟨M_λ, H_τ⟩ = 1 exactly when dual(τ) = λ.
    pub fn pairing(&self, o: &Self) -> Q {
        let m = self.convert(Basis::M);
        let h = o.convert(Basis::H);
        h.terms.iter().map(|(t, y)| m.coeff(&t.dual()) * y).sum()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "basis": self.basis.to_string(),
            "terms": self.terms.iter()
                .map(|(t, x)| json!({"type": t.to_json(), "coeff": q_to_string(x)}))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, PolysymError> {
        let bad = |w: &str| PolysymError::Json(w.to_string());
        let basis: Basis = v.get("basis").and_then(|b| b.as_str()).ok_or_else(|| bad("missing basis"))?.parse()?;
        let mut terms = Vec::new();
        for item in v.get("terms").and_then(|t| t.as_array()).ok_or_else(|| bad("missing terms"))? {
            let t = SplittingType::from_json(item.get("type").ok_or_else(|| bad("term without type"))?)
                .map_err(|e| bad(&e.to_string()))?;
            let c = match item.get("coeff") {
                Some(Value::String(s)) => parse_q(s).map_err(|e| bad(&e.to_string()))?,
                Some(Value::Number(n)) => parse_q(&n.to_string()).map_err(|e| bad(&e.to_string()))?,
                _ => return Err(bad("term without coeff")),
            };
            terms.push((t, c));
        }
        Ok(Self::from_terms(basis, terms))
    }
}

impl fmt::Display for PolysymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (t, x) in &self.terms {
            let neg = *x < Q::zero();
            let a = if neg { -x.clone() } else { x.clone() };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                _ => {}
            }
            if !a.is_one() {
                write!(f, "{}*", q_to_string(&a))?;
            }
            write!(f, "{}{}", self.basis, t)?;
            first = false;
        }
        Ok(())
    }
}
