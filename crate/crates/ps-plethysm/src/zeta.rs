use num_bigint::BigInt;
use ps_algebra::arith::{divisors, factorial, mobius};
use ps_algebra::{Ring, Q};
use ps_types::partitions;
use rayon::prelude::*;

use crate::{newton_poly, rational_combination, PlethysmError};

fn check_len<E>(x: &[E], d: usize) -> Result<(), PlethysmError> {
    if x.len() < d {
        return Err(PlethysmError::Argument(format!("need values in degrees 1..{d}, got {}", x.len())));
    }
    Ok(())
}

/// u_d from x_1..x_d: d·u_d = Σ_{m|d} μ(d/m) ψ_{d/m} p_m(x_1, …, x_m),
/// followed by one exact division by d.
pub fn invert_zeta<R: Ring>(ring: &R, x: &[R::Elem], d: usize) -> Result<R::Elem, PlethysmError> {
    if d == 0 {
        return Err(PlethysmError::Argument("degree must be positive".into()));
    }
    check_len(x, d)?;
    let parts: Vec<R::Elem> = divisors(d as u64)
        .into_par_iter()
        .filter(|m| mobius(d as u64 / m) != 0)
        .map(|m| {
            let p = newton_poly(m as u32).eval(ring, &x[..m as usize]);
            ring.scale_int(&ring.adams((d as u64 / m) as u32, &p), &BigInt::from(mobius(d as u64 / m)))
        })
        .collect();
    let total = ring.sum(parts.iter());
    ring.exact_div(&total, &BigInt::from(d))
        .ok_or_else(|| PlethysmError::Integrality(format!("u_{d} is not divisible by {d} in {}", ring.name())))
}

/// u_1..u_n.
pub fn invert_zeta_all<R: Ring>(ring: &R, x: &[R::Elem], n: usize) -> Result<Vec<R::Elem>, PlethysmError> {
    check_len(x, n)?;
    (1..=n).map(|d| invert_zeta(ring, x, d)).collect()
}

/// u_d by the closed double sum over m | d and λ ⊢ m, without Newton polynomials.
pub fn invert_zeta_direct<R: Ring>(ring: &R, x: &[R::Elem], d: usize) -> Result<R::Elem, PlethysmError> {
    check_len(x, d)?;
    let mut terms = Vec::new();
    for m in divisors(d as u64) {
        let mu = mobius(d as u64 / m);
        if mu == 0 {
            continue;
        }
        let r = (d as u64 / m) as u32;
        let px: Vec<R::Elem> = x[..m as usize].iter().map(|v| ring.adams(r, v)).collect();
        for lam in partitions(m as u32) {
            let l = lam.length() as u64;
            let sign: i64 = if l % 2 == 1 { 1 } else { -1 };
            let c = Q::new(
                BigInt::from(m as i64 * mu * sign) * factorial(l - 1),
                lam.mult_factorials() * BigInt::from(d),
            );
            let mut prod = ring.one();
            for (k, n) in lam.mult().iter().enumerate() {
                if *n > 0 {
                    prod = ring.mul(&prod, &ring.pow(&px[k], *n));
                }
            }
            terms.push((c, prod));
        }
    }
    rational_combination(ring, &terms)
}

/// x_1..x_n from u_1..u_n by d·x_d = Σ_{i=1}^d P_i x_{d−i},
/// P_i = Σ_{k|i} k ψ_{i/k} u_k.
pub fn forward_zeta<R: Ring>(ring: &R, u: &[R::Elem], n: usize) -> Result<Vec<R::Elem>, PlethysmError> {
    check_len(u, n)?;
    let p: Vec<R::Elem> = (1..=n)
        .into_par_iter()
        .map(|i| {
            let terms: Vec<R::Elem> = divisors(i as u64)
                .into_iter()
                .map(|k| ring.scale_int(&ring.adams((i as u64 / k) as u32, &u[k as usize - 1]), &BigInt::from(k)))
                .collect();
            ring.sum(terms.iter())
        })
        .collect();
    let mut x: Vec<R::Elem> = vec![ring.one()];
    for d in 1..=n {
        let mut acc = ring.zero();
        for i in 1..=d {
            acc = ring.add(&acc, &ring.mul(&p[i - 1], &x[d - i]));
        }
        let xd = ring
            .exact_div(&acc, &BigInt::from(d))
            .ok_or_else(|| PlethysmError::Integrality(format!("x_{d} is not divisible by {d} in {}", ring.name())))?;
        x.push(xd);
    }
    x.remove(0);
    Ok(x)
}
