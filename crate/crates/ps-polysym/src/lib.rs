//! Polysymmetric functions: finite rational combinations of splitting types
//! read in the monomial (M), complete (H), elementary (E) or squarefree
//! elementary (E⁺) basis. Arithmetic happens in H, where the basis is
//! multiplicative.

mod convert;
mod element;
mod ring;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use ps_algebra::arith::divisors;
use ps_algebra::Q;
use ps_types::{hilbert_by_enumeration, hilbert_by_product, SplittingType};
use thiserror::Error;

pub use convert::{e_generator, to_h};
pub use element::PolysymElement;
pub use ring::PolysymRing;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolysymError {
    #[error("unknown basis {0:?}")]
    Basis(String),
    #[error("element JSON: {0}")]
    Json(String),
    #[error("{0}")]
    Argument(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    M,
    H,
    E,
    EPlus,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::M => "M",
            Basis::H => "H",
            Basis::E => "E",
            Basis::EPlus => "Eplus",
        })
    }
}

impl FromStr for Basis {
    type Err = PolysymError;
    fn from_str(s: &str) -> Result<Self, PolysymError> {
        match s {
            "M" | "m" => Ok(Basis::M),
            "H" | "h" => Ok(Basis::H),
            "E" | "e" => Ok(Basis::E),
            "Eplus" | "E+" | "eplus" => Ok(Basis::EPlus),
            _ => Err(PolysymError::Basis(s.to_string())),
        }
    }
}

/// P_{d^m} = ψ_m(P_d) = Σ_{k|d} k·M_{k^{(d/k)m}}.
pub fn power_basis(d: u32, m: u32) -> PolysymElement {
    assert!(d >= 1 && m >= 1);
    PolysymElement::from_terms(
        Basis::M,
        divisors(d as u64).into_iter().map(|k| {
            let k = k as u32;
            (SplittingType::from_parts([(k, (d / k) * m)]).unwrap(), Q::from_integer(BigInt::from(k)))
        }),
    )
}

/// dim PS_d for d ≤ n, counted by enumeration and checked against the
/// product formula.
pub fn hilbert_series(n: u32) -> Result<Vec<u64>, PolysymError> {
    let a = hilbert_by_enumeration(n);
    let b = hilbert_by_product(n);
    if a.iter().zip(&b).any(|(x, y)| BigInt::from(*x) != *y) {
        return Err(PolysymError::Argument(format!("Hilbert series disagree below degree {n}")));
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ps_algebra::rational::q_frac;

    fn t(s: &str) -> SplittingType {
        s.parse().unwrap()
    }

    fn el(b: Basis, items: &[(&str, i64, i64)]) -> PolysymElement {
        PolysymElement::from_terms(b, items.iter().map(|(s, n, d)| (t(s), q_frac(*n, *d))))
    }

    #[test]
    fn conversions() {
        let h2 = PolysymElement::basis_element(Basis::H, t("2"));
        assert_eq!(h2.convert(Basis::M), el(Basis::M, &[("1^2", 1, 1), ("1 1", 1, 1), ("2", 1, 1)]));
        let m2 = PolysymElement::basis_element(Basis::M, t("2"));
        assert_eq!(m2.convert(Basis::H), el(Basis::H, &[("1^2", -1, 2), ("1 1", -1, 2), ("2", 1, 1)]));
        let e2 = PolysymElement::basis_element(Basis::E, t("2"));
        assert_eq!(e2.convert(Basis::M), el(Basis::M, &[("1 1", 1, 1), ("2", -1, 1)]));
    }

    #[test]
    fn products_and_adams() {
        let m1 = PolysymElement::basis_element(Basis::M, t("1"));
        assert_eq!(m1.multiply(&m1), el(Basis::M, &[("1 1", 2, 1), ("1^2", 1, 1)]));
        let h1 = PolysymElement::basis_element(Basis::H, t("1"));
        assert_eq!(h1.multiply(&h1), el(Basis::H, &[("1 1", 1, 1)]));
        let h3 = PolysymElement::basis_element(Basis::H, t("3"));
        assert_eq!(h3.adams(2), el(Basis::H, &[("3^2", 1, 1)]));
        assert_eq!(m1.adams(2), el(Basis::M, &[("1^2", 1, 1)]));
    }

    #[test]
    fn power_sums() {
        assert_eq!(power_basis(2, 1), el(Basis::M, &[("1^2", 1, 1), ("2", 2, 1)]));
        assert_eq!(power_basis(1, 1), el(Basis::M, &[("1", 1, 1)]));
        for d in 1..=6u32 {
            let mut s = PolysymElement::zero(Basis::M);
            for k in ps_algebra::arith::divisors(d as u64) {
                let c = ps_algebra::arith::mobius(d as u64 / k);
                s = s.add(&power_basis(k as u32, d / k as u32).scale(&q_frac(c, d as i64)));
            }
            assert_eq!(s, PolysymElement::basis_element(Basis::M, SplittingType::top(d)));
        }
    }

    #[test]
    fn pairing_and_omega() {
        let m2 = PolysymElement::basis_element(Basis::M, t("2"));
        assert_eq!(m2.pairing(&PolysymElement::basis_element(Basis::H, t("1^2"))), q_frac(1, 1));
        let a = ps_arrangements::incidence_table(3, ps_arrangements::Tag::A);
        for tau in a.types() {
            for lam in a.types() {
                let x = PolysymElement::basis_element(Basis::H, lam.clone());
                let y = PolysymElement::basis_element(Basis::H, tau.dual());
                assert_eq!(x.pairing(&y), a.get(tau, lam));
            }
        }
        let h2 = PolysymElement::basis_element(Basis::H, t("2"));
        assert_eq!(h2.omega().convert(Basis::M), el(Basis::M, &[("1 1", 1, 1), ("2", -1, 1)]));
        let e1 = PolysymElement::basis_element(Basis::E, t("1"));
        assert_eq!(e1.omega().convert(Basis::M), el(Basis::M, &[("1", 1, 1)]));
        assert_eq!(e1.convert(Basis::M), el(Basis::M, &[("1", -1, 1)]));
    }

    #[test]
    fn hilbert() {
        assert_eq!(hilbert_series(5).unwrap(), vec![1, 1, 3, 5, 11, 17]);
        assert_eq!(hilbert_series(20).unwrap().len(), 21);
    }
}
