use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::rational::{q_from_json, q_to_string, Q};
use crate::ring::{fmt_coeff_term, AdamsKind, JsonRing, Ring};
use crate::AlgebraError;

/// Multivariate polynomial over Q: exponent vector → coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Vec<u32>, Q>,
}

impl MPoly {
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Q {
        self.terms.get(exps).cloned().unwrap_or_else(Q::zero)
    }

    fn add_term(&mut self, e: Vec<u32>, c: &Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, Q)>>(it: I) -> Self {
        let mut p = MPoly::default();
        for (e, c) in it {
            p.add_term(e, &c);
        }
        p
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Substitute numeric values for every variable.
    pub fn eval(&self, xs: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, k) in xs.iter().zip(e) {
                t *= num_traits::pow(x.clone(), *k as usize);
            }
            acc += t;
        }
        acc
    }
}

/// Q[x_1, …, x_n] with trivial or Frobenius (x_i ↦ x_i^r) Adams operations.
#[derive(Clone, Debug)]
pub struct MPolyRing {
    pub nvars: usize,
    pub prefix: String,
    pub adams: AdamsKind,
}

impl MPolyRing {
    pub fn new(nvars: usize, adams: AdamsKind) -> Self {
        MPolyRing { nvars, prefix: "x".into(), adams }
    }

    /// The variable x_i, 1-based.
    pub fn var(&self, i: usize) -> MPoly {
        assert!(i >= 1 && i <= self.nvars, "variable index out of range");
        let mut e = vec![0; self.nvars];
        e[i - 1] = 1;
        MPoly::from_terms([(e, Q::one())])
    }

    pub fn constant(&self, c: Q) -> MPoly {
        MPoly::from_terms([(vec![0; self.nvars], c)])
    }

    pub fn scale(&self, a: &MPoly, q: &Q) -> MPoly {
        MPoly::from_terms(a.terms.iter().map(|(e, c)| (e.clone(), c * q)))
    }

    fn mono_string(&self, e: &[u32]) -> String {
        e.iter()
            .enumerate()
            .filter(|(_, k)| **k > 0)
            .map(|(i, k)| {
                if *k == 1 {
                    format!("{}_{}", self.prefix, i + 1)
                } else {
                    format!("{}_{}^{}", self.prefix, i + 1, k)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Canonical text: terms by total degree, then exponent vector, descending.
    pub fn to_text(&self, a: &MPoly) -> String {
        if a.terms.is_empty() {
            return "0".into();
        }
        let mut ts: Vec<_> = a.terms.iter().collect();
        ts.sort_by(|(e1, _), (e2, _)| {
            let d1: u32 = e1.iter().sum();
            let d2: u32 = e2.iter().sum();
            d2.cmp(&d1).then_with(|| e2.iter().rev().cmp(e1.iter().rev()))
        });
        ts.iter()
            .enumerate()
            .map(|(i, (e, c))| fmt_coeff_term(c, &self.mono_string(e), i == 0))
            .collect()
    }
}

impl Ring for MPolyRing {
    type Elem = MPoly;
    fn name(&self) -> String {
        format!("Q[{}_1..{}_{}]", self.prefix, self.prefix, self.nvars)
    }
    fn zero(&self) -> MPoly {
        MPoly::default()
    }
    fn one(&self) -> MPoly {
        self.constant(Q::one())
    }
    fn from_int(&self, n: &BigInt) -> MPoly {
        self.constant(Q::from_integer(n.clone()))
    }
    fn add(&self, a: &MPoly, b: &MPoly) -> MPoly {
        let mut r = a.clone();
        for (e, c) in &b.terms {
            r.add_term(e.clone(), c);
        }
        r
    }
    fn neg(&self, a: &MPoly) -> MPoly {
        MPoly { terms: a.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
    fn mul(&self, a: &MPoly, b: &MPoly) -> MPoly {
        let mut r = MPoly::default();
        for (e1, c1) in &a.terms {
            for (e2, c2) in &b.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                r.add_term(e, &(c1 * c2));
            }
        }
        r
    }
    fn adams(&self, r: u32, a: &MPoly) -> MPoly {
        match self.adams {
            AdamsKind::Trivial => a.clone(),
            AdamsKind::Frobenius => MPoly {
                terms: a.terms.iter().map(|(e, c)| (e.iter().map(|k| k * r).collect(), c.clone())).collect(),
            },
        }
    }
    fn exact_div(&self, a: &MPoly, d: &BigInt) -> Option<MPoly> {
        (!d.is_zero()).then(|| self.scale(a, &Q::from_integer(d.clone()).recip()))
    }
    fn is_zero(&self, a: &MPoly) -> bool {
        a.terms.is_empty()
    }
    fn unit_inverse(&self, a: &MPoly) -> Option<MPoly> {
        if a.terms.len() == 1 {
            let (e, c) = a.terms.iter().next().unwrap();
            if e.iter().all(|k| *k == 0) {
                return Some(self.constant(c.recip()));
            }
        }
        None
    }
}

impl JsonRing for MPolyRing {
    fn to_json(&self, a: &MPoly) -> Value {
        let mut m = Map::new();
        for (e, c) in &a.terms {
            let key = e.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",");
            m.insert(key, Value::String(q_to_string(c)));
        }
        json!({"vars": self.nvars, "terms": m})
    }
    fn from_json(&self, v: &Value) -> Result<MPoly, AlgebraError> {
        let terms = match v.get("terms").and_then(|t| t.as_object()) {
            Some(t) => t,
            None => return Ok(self.constant(q_from_json(v)?)),
        };
        let mut p = MPoly::default();
        for (k, c) in terms {
            let e = k
                .split(',')
                .map(|s| s.trim().parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| AlgebraError::Parse(format!("bad exponent vector {k:?}")))?;
            if e.len() != self.nvars {
                return Err(AlgebraError::Type(format!("expected {} variables in {k:?}", self.nvars)));
            }
            p.add_term(e, &q_from_json(c)?);
        }
        Ok(p)
    }
    fn display(&self, a: &MPoly) -> String {
        self.to_text(a)
    }
}
