//! Sum identities satisfied by the top column of a⁻¹ and by μ.

use num_bigint::BigInt;
use num_traits::Zero;
use ps_algebra::arith::{binomial, divisors, mobius};
use ps_algebra::Q;
use ps_types::SplittingType;

use crate::{ainv_top_column, incidence_table, top_stratum_inverse, Tag};

/// Σ_{τ unramified} a⁻¹_{τd}.
pub fn unramified_sum(d: u32) -> Q {
    ainv_top_column(d).into_iter().filter(|(t, _)| t.is_unramified()).map(|(_, x)| x).sum()
}

/// Σ len(τ)·a⁻¹_{τd} over all τ and over unramified τ, and the correction
/// Σ_{σ⊨d−2 unramified} a⁻¹_{σ⊔{1^2},d}. Only the unramified sum plus the
/// correction vanishes; the sum over all τ does not (it is −1/3 at d = 3).
#[derive(Clone, Debug, PartialEq)]
pub struct LengthWeighted {
    pub all: Q,
    pub unramified: Q,
    pub correction: Q,
}

pub fn length_weighted(d: u32) -> LengthWeighted {
    let col = ainv_top_column(d);
    let weight = |t: &SplittingType, x: &Q| x * Q::from_integer(BigInt::from(t.length()));
    let all = col.iter().map(|(t, x)| weight(t, x)).sum();
    let unramified = col.iter().filter(|(t, _)| t.is_unramified()).map(|(t, x)| weight(t, x)).sum();
    let square = SplittingType::from_parts([(1, 2)]).unwrap();
    let correction = col
        .iter()
        .filter(|(t, _)| t.count(1, 2) >= 1)
        .filter(|(t, _)| {
            let rest: Vec<(u32, u32)> = {
                let mut p = t.parts();
                let i = p.iter().position(|x| *x == (1, 2)).unwrap();
                p.remove(i);
                p
            };
            rest.iter().all(|(_, m)| *m == 1) && SplittingType::from_parts(rest.clone()).unwrap().union(&square) == *t
        })
        .map(|(_, x)| x.clone())
        .sum();
    LengthWeighted { all, unramified, correction }
}

/// Σ_{len τ = k} a⁻¹_{τd}, from the table.
pub fn length_sum(d: u32, k: u32) -> Q {
    ainv_top_column(d).into_iter().filter(|(t, _)| t.length() == k).map(|(_, x)| x).sum()
}

/// (1/d)(−1)^{k+1} Σ_{e|d} μ(d/e) C(e, k).
pub fn length_sum_closed_form(d: u32, k: u32) -> Q {
    let s: BigInt = divisors(d as u64).into_iter().map(|e| BigInt::from(mobius(d as u64 / e)) * binomial(e, k as u64)).sum();
    let s = if k % 2 == 1 { s } else { -s };
    Q::new(s, BigInt::from(d))
}

/// First ramified τ with μ_{τd} ≠ 0.
pub fn ramified_mobius_violation(d: u32) -> Option<SplittingType> {
    let mu = incidence_table(d, Tag::Mobius);
    let top = SplittingType::top(d);
    mu.types().iter().find(|t| !t.is_unramified() && !mu.get(t, &top).is_zero()).cloned()
}

/// First τ where the closed form disagrees with the inverted table.
pub fn closed_form_violation(d: u32) -> Option<SplittingType> {
    ainv_top_column(d).into_iter().find(|(t, x)| top_stratum_inverse(t, d).unwrap() != *x).map(|(t, _)| t)
}

/// All of the above for one degree d ≥ 2; the error names the failing check.
pub fn check_degree(d: u32) -> Result<(), String> {
    if unramified_sum(d) != Q::new(1.into(), d.into()) {
        return Err(format!("unramified sum, degree {d}"));
    }
    if d >= 3 {
        let lw = length_weighted(d);
        if !(&lw.unramified + &lw.correction).is_zero() {
            return Err(format!("length-weighted sum, degree {d}"));
        }
    }
    for k in 1..=d {
        if length_sum(d, k) != length_sum_closed_form(d, k) {
            return Err(format!("length-{k} sum, degree {d}"));
        }
    }
    if let Some(t) = ramified_mobius_violation(d) {
        return Err(format!("mobius({t}, ({d})) is nonzero"));
    }
    if let Some(t) = closed_form_violation(d) {
        return Err(format!("closed form at {t}, degree {d}"));
    }
    Ok(())
}
