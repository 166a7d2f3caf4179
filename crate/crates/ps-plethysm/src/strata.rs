use num_bigint::BigInt;
use ps_algebra::arith::factorial;
use ps_algebra::Ring;
use ps_arrangements::{incidence_table, Tag};
use ps_types::SplittingType;

use crate::{rational_combination, PlethysmError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StratumKind {
    /// S_τ = ∏ ψ_m(x_b)
    S,
    /// U'_λ = Σ_τ a⁻¹_{τλ} S_τ
    Open,
    /// X'_λ = Σ_τ a_{τλ} U'_τ
    Closed,
}

fn s_tau<R: Ring>(ring: &R, x: &[R::Elem], tau: &SplittingType) -> R::Elem {
    tau.parts().iter().fold(ring.one(), |acc, (b, m)| ring.mul(&acc, &ring.adams(*m, &x[*b as usize - 1])))
}

pub fn virtual_stratum<R: Ring>(
    ring: &R,
    x: &[R::Elem],
    tau: &SplittingType,
    kind: StratumKind,
) -> Result<R::Elem, PlethysmError> {
    let d = tau.degree();
    if x.len() < d as usize {
        return Err(PlethysmError::Argument(format!("type {tau} needs values up to degree {d}")));
    }
    if tau.is_empty() {
        return Ok(ring.one());
    }
    match kind {
        StratumKind::S => Ok(s_tau(ring, x, tau)),
        StratumKind::Open => {
            let col = incidence_table(d, Tag::AInv).column(tau);
            let terms: Vec<_> = col.into_iter().map(|(t, c)| (c, s_tau(ring, x, &t))).collect();
            rational_combination(ring, &terms)
        }
        StratumKind::Closed => {
            let col = incidence_table(d, Tag::A).column(tau);
            let mut terms = Vec::new();
            for (t, c) in col {
                terms.push((c, virtual_stratum(ring, x, &t, StratumKind::Open)?));
            }
            rational_combination(ring, &terms)
        }
    }
}

/// x(x−1)⋯(x−N+1)/(n_1!⋯n_k!) with N = Σ n_i. Meaningful in rings with
/// trivial Adams operations.
pub fn multinomial<R: Ring>(ring: &R, x: &R::Elem, ns: &[u32]) -> Result<R::Elem, PlethysmError> {
    let n: u32 = ns.iter().sum();
    let mut acc = ring.one();
    for i in 0..n {
        acc = ring.mul(&acc, &ring.sub(x, &ring.from_int(&BigInt::from(i))));
    }
    let den: BigInt = ns.iter().map(|k| factorial(*k as u64)).product();
    ring.exact_div(&acc, &den)
        .ok_or_else(|| PlethysmError::Integrality(format!("multinomial {ns:?} not divisible by {den}")))
}

/// Class of the generalized configuration space Conf_{n⃗}.
pub fn conf_class<R: Ring>(ring: &R, x: &R::Elem, ns: &[u32]) -> Result<R::Elem, PlethysmError> {
    multinomial(ring, x, ns)
}

/// [Conf_{(w, m)}] = [Conf_w]·[Conf_m] − Σ_{u ≤ w, 1 ≤ |u| ≤ m} [Conf_{(w−u, m−|u|, u)}].
pub fn conf_recurrence_holds<R: Ring>(ring: &R, x: &R::Elem, w: &[u32], m: u32) -> Result<bool, PlethysmError> {
    let mut v = w.to_vec();
    v.push(m);
    let lhs = conf_class(ring, x, &v)?;
    let mut rhs = ring.mul(&conf_class(ring, x, w)?, &conf_class(ring, x, &[m])?);
    let mut u = vec![0u32; w.len()];
    loop {
        // next u ≤ w in mixed radix
        let mut i = 0;
        while i < u.len() && u[i] == w[i] {
            u[i] = 0;
            i += 1;
        }
        if i == u.len() {
            break;
        }
        u[i] += 1;
        let s: u32 = u.iter().sum();
        if s >= 1 && s <= m {
            let mut idx: Vec<u32> = w.iter().zip(&u).map(|(a, b)| a - b).collect();
            idx.push(m - s);
            idx.extend(&u);
            rhs = ring.sub(&rhs, &conf_class(ring, x, &idx)?);
        }
    }
    Ok(lhs == rhs)
}

/// ∏_p multinomial(u_p; τ[p^1], τ[p^2], …).
pub fn binomial_strata<R: Ring>(ring: &R, u: &[R::Elem], tau: &SplittingType) -> Result<R::Elem, PlethysmError> {
    let mut acc = ring.one();
    for p in tau.slot_degrees() {
        let up = u.get(p as usize - 1).ok_or_else(|| PlethysmError::Argument(format!("no u value in degree {p}")))?;
        let maxm = tau.parts().iter().filter(|(b, _)| *b == p).map(|(_, m)| *m).max().unwrap_or(0);
        let ns: Vec<u32> = (1..=maxm).map(|k| tau.count(p, k)).collect();
        acc = ring.mul(&acc, &multinomial(ring, up, &ns)?);
    }
    Ok(acc)
}
