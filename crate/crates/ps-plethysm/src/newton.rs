use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use ps_algebra::arith::factorial;
use ps_algebra::{Ring, Q};
use ps_types::{partitions, Partition};

/// p_m = Σ_{λ⊢m} m(−1)^{1+ℓ}/ℓ · ℓ!/(n_1!⋯n_m!) · h_1^{n_1}⋯h_m^{n_m}.
#[derive(Clone, Debug, PartialEq)]
pub struct NewtonPolynomial {
    pub degree: u32,
    pub terms: Vec<(Partition, Q)>,
}

impl NewtonPolynomial {
    /// Evaluate at h_k = h[k−1]. Coefficients are integers, so no division
    /// happens in the ring.
    pub fn eval<R: Ring>(&self, ring: &R, h: &[R::Elem]) -> R::Elem {
        assert!(h.len() >= self.degree as usize, "need h_1..h_{}", self.degree);
        let mut acc = ring.zero();
        for (lam, c) in &self.terms {
            let mut term = ring.one();
            for (k, n) in lam.mult().iter().enumerate() {
                if *n > 0 {
                    term = ring.mul(&term, &ring.pow(&h[k], *n));
                }
            }
            acc = ring.add(&acc, &ring.scale_int(&term, c.numer()));
        }
        acc
    }
}

static CACHE: OnceLock<RwLock<HashMap<u32, Arc<NewtonPolynomial>>>> = OnceLock::new();

pub fn newton_poly(m: u32) -> Arc<NewtonPolynomial> {
    assert!(m >= 1);
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = cache.read().unwrap().get(&m) {
        return p.clone();
    }
    let terms = partitions(m)
        .into_iter()
        .map(|lam| {
            let l = lam.length() as u64;
            let sign = if l % 2 == 1 { 1 } else { -1 };
            let c = Q::new(BigInt::from(sign * m as i64) * factorial(l - 1), lam.mult_factorials());
            debug_assert!(c.is_integer());
            (lam, c)
        })
        .collect();
    let p = Arc::new(NewtonPolynomial { degree: m, terms });
    cache.write().unwrap().insert(m, p.clone());
    p
}
