use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use ps_algebra::arith::factorial;
use ps_algebra::{Poly, RatFunc, RatFuncRing, Rationals, Q};
use ps_plethysm::{invert_zeta, virtual_stratum, StratumKind};
use ps_types::{partitions, SplittingType};
use rayon::prelude::*;

use crate::AppError;

/// Number of r-tuples of permutations of d letters generating a transitive
/// group, up to simultaneous conjugation. Uses x_k = Σ_{κ⊢k} z_κ^{r−1}.
pub fn transitive_tuples(d: u32, r: u32) -> Result<BigInt, AppError> {
    if d == 0 || r == 0 || d > 12 || r > 6 {
        return Err(AppError::Argument("transitive tuples need 1 <= d <= 12, 1 <= r <= 6".into()));
    }
    let x: Vec<Q> = (1..=d)
        .map(|k| Q::from_integer(partitions(k).iter().map(|p| num_traits::pow(p.z(), r as usize - 1)).sum()))
        .collect();
    let u = invert_zeta(&Rationals, &x, d as usize)?;
    if !u.is_integer() {
        return Err(AppError::Assertion(format!("transitive count for d={d}, r={r} is {u}")));
    }
    Ok(u.to_integer())
}

fn all_permutations(d: usize) -> Vec<Vec<u8>> {
    if d == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_permutations(d - 1) {
        for i in 0..d {
            let mut q = p.clone();
            q.insert(i, (d - 1) as u8);
            out.push(q);
        }
    }
    out
}

fn commute(a: &[u8], b: &[u8]) -> bool {
    a.iter().all(|&i| a[b[i as usize] as usize] == b[a[i as usize] as usize])
}

fn transitive(gens: &[&Vec<u8>], d: usize) -> bool {
    let mut seen = vec![false; d];
    let mut stack = vec![0u8];
    seen[0] = true;
    let mut n = 1;
    while let Some(i) = stack.pop() {
        for g in gens {
            let j = g[i as usize];
            if !seen[j as usize] {
                seen[j as usize] = true;
                n += 1;
                stack.push(j);
            }
        }
    }
    n == d
}

/// Brute force: Burnside over S_d acting by conjugation on transitive
/// r-tuples. A tuple is fixed by g exactly when every entry commutes with g.
pub fn transitive_oracle(d: u32, r: u32) -> Result<u64, AppError> {
    if d == 0 || r == 0 || d > 6 || r > 4 {
        return Err(AppError::Argument("oracle range is 1 <= d <= 6, 1 <= r <= 4".into()));
    }
    let (d, r) = (d as usize, r as usize);
    let perms = all_permutations(d);
    let total: u64 = perms
        .par_iter()
        .map(|g| {
            let cent: Vec<&Vec<u8>> = perms.iter().filter(|h| commute(g, h)).collect();
            let mut count = 0u64;
            let mut idx = vec![0usize; r];
            loop {
                let tuple: Vec<&Vec<u8>> = idx.iter().map(|i| cent[*i]).collect();
                if transitive(&tuple, d) {
                    count += 1;
                }
                let mut k = 0;
                while k < r && idx[k] + 1 == cent.len() {
                    idx[k] = 0;
                    k += 1;
                }
                if k == r {
                    break;
                }
                idx[k] += 1;
            }
            count
        })
        .sum();
    let order = factorial(d as u64).to_u64().unwrap();
    if total % order != 0 {
        return Err(AppError::Assertion(format!("Burnside sum {total} not divisible by {order}")));
    }
    Ok(total / order)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharvarMode {
    Epoly,
    Euler,
}

#[derive(Clone, Debug, PartialEq)]
pub enum CharvarValue {
    RatFunc(RatFunc),
    Rational(Q),
}

fn check(d: u32, r: u32) -> Result<(), AppError> {
    if d == 0 || r == 0 || d > 5 || r > 4 {
        return Err(AppError::Argument("SL character variety needs 1 <= d <= 5, 1 <= r <= 4".into()));
    }
    Ok(())
}

/// (w−1)^{−r} Σ_{λ⊢b} ∏_j (w^j−1)^{λ[j]r} / (λ[j]! j^{λ[j]}).
fn closed_epoly(b: u32, r: u32) -> Result<RatFunc, AppError> {
    let w_minus = |j: u32| Poly::monomial(Q::one(), j).sub(&Poly::one());
    let mut num = Poly::zero();
    for lam in partitions(b) {
        let mut term = Poly::one();
        let mut den = BigInt::one();
        for (j, n) in lam.mult().iter().enumerate() {
            let j = j as u32 + 1;
            if *n > 0 {
                term = term.mul(&w_minus(j).pow(n * r));
                den *= factorial(*n as u64) * num_traits::pow(BigInt::from(j), *n as usize);
            }
        }
        num = num.add(&term.scale(&Q::new(BigInt::one(), den)));
    }
    Ok(RatFunc::new(num, w_minus(1).pow(r))?)
}

/// E-polynomial of the indecomposable locus U_d, as a function of w = uv.
pub fn sl_epoly(d: u32, r: u32) -> Result<RatFunc, AppError> {
    check(d, r)?;
    let x = (1..=d).map(|b| closed_epoly(b, r)).collect::<Result<Vec<_>, _>>()?;
    Ok(virtual_stratum(&RatFuncRing::default(), &x, &SplittingType::top(d), StratumKind::Open)?)
}

/// Euler characteristic of U_d: the trivial-Adams inversion of x_k = k^{r−1}.
pub fn sl_euler(d: u32, r: u32) -> Result<Q, AppError> {
    check(d, r)?;
    let x: Vec<Q> = (1..=d).map(|k| Q::from_integer(num_traits::pow(BigInt::from(k), r as usize - 1))).collect();
    Ok(invert_zeta(&Rationals, &x, d as usize)?)
}

/// The E-polynomial at w = 1. The reduced denominator must not vanish there.
pub fn sl_limit_at_one(d: u32, r: u32) -> Result<Q, AppError> {
    sl_epoly(d, r)?
        .eval(&Q::one())
        .map_err(|_| AppError::Assertion(format!("pole at w = 1 does not cancel for d={d}, r={r}")))
}

pub fn sl_character_variety(d: u32, r: u32, mode: CharvarMode) -> Result<CharvarValue, AppError> {
    Ok(match mode {
        CharvarMode::Epoly => CharvarValue::RatFunc(sl_epoly(d, r)?),
        CharvarMode::Euler => CharvarValue::Rational(sl_euler(d, r)?),
    })
}
