use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::Zero;
use ps_algebra::arith::number_of_divisors;

use crate::SplittingType;

pub const MAX_ENUM_DEGREE: u32 = 30;

/// Every type of degree d, once each, in canonical order.
pub fn enumerate_types(d: u32) -> Vec<SplittingType> {
    assert!(d <= MAX_ENUM_DEGREE, "type enumeration is capped at degree {MAX_ENUM_DEGREE}");
    if d == 0 {
        return vec![SplittingType::empty()];
    }
    // candidate parts in decreasing (b, m) order; choose a non-increasing sequence
    let mut cands = Vec::new();
    for b in (1..=d).rev() {
        for m in (1..=d / b).rev() {
            cands.push((b, m));
        }
    }
    fn rec(rem: u32, start: usize, cands: &[(u32, u32)], cur: &mut Vec<(u32, u32)>, out: &mut Vec<SplittingType>) {
        if rem == 0 {
            out.push(SplittingType::from_parts(cur.iter().copied()).unwrap());
            return;
        }
        for i in start..cands.len() {
            let (b, m) = cands[i];
            if b * m <= rem {
                cur.push((b, m));
                rec(rem - b * m, i, cands, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(d, 0, &cands, &mut Vec::new(), &mut out);
    out.sort();
    out
}

pub fn hilbert_by_enumeration(n: u32) -> Vec<u64> {
    (0..=n).map(|d| enumerate_types(d).len() as u64).collect()
}

/// Coefficients of ∏_k (1 − t^k)^{−σ_0(k)} through t^n.
pub fn hilbert_by_product(n: u32) -> Vec<BigInt> {
    let n = n as usize;
    let mut c = vec![BigInt::zero(); n + 1];
    c[0] = BigInt::from(1);
    for k in 1..=n {
        for _ in 0..number_of_divisors(k as u64) {
            // multiply by 1/(1 − t^k)
            for i in k..=n {
                let add = c[i - k].clone();
                c[i] += add;
            }
        }
    }
    c
}

/// Types reachable by one elementary merge or forget.
pub fn up_neighbors(t: &SplittingType) -> Vec<SplittingType> {
    let parts = t.parts();
    let mut out = BTreeSet::new();
    for i in 0..parts.len() {
        let (b, m) = parts[i];
        // merge with a later part of the same multiplicity
        for j in i + 1..parts.len() {
            if parts[j].1 == m {
                let mut v = parts.clone();
                let (b2, _) = v.remove(j);
                v[i] = (b + b2, m);
                out.insert(SplittingType::from_parts(v).unwrap());
            }
        }
        // forget: b^m → b^{m−a}, b^a
        for a in 1..m {
            let mut v = parts.clone();
            v[i] = (b, m - a);
            v.push((b, a));
            out.insert(SplittingType::from_parts(v).unwrap());
        }
    }
    out.into_iter().collect()
}

/// Closure of τ under elementary merges and forgets, τ included.
pub fn reachable_up(t: &SplittingType) -> BTreeSet<SplittingType> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([t.clone()]);
    seen.insert(t.clone());
    while let Some(x) = queue.pop_front() {
        for y in up_neighbors(&x) {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}
