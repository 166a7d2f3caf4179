use num_bigint::BigInt;
use num_traits::Zero;
use ps_algebra::Q;
use ps_types::{count_partitions_at_most, enumerate_types};

use crate::AppError;

#[derive(Clone, Debug, PartialEq)]
pub struct MassReport {
    pub degree: u32,
    /// (k, partitions of k into at most d−k parts, weighted type count).
    pub rows: Vec<(u32, BigInt, Q)>,
}

impl MassReport {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(|(_, p, w)| Q::from_integer(p.clone()) == *w)
    }

    pub fn first_failure(&self) -> Option<u32> {
        self.rows.iter().find(|(_, p, w)| Q::from_integer(p.clone()) != *w).map(|(k, _, _)| *k)
    }
}

/// For 0 ≤ k < d, compares q(k, d−k) with Σ_{index τ = k} 1/(∏ b · |Aut τ|).
pub fn mass_identity(d: u32) -> Result<MassReport, AppError> {
    if d == 0 || d > 16 {
        return Err(AppError::Argument("mass identity needs 1 <= d <= 16".into()));
    }
    let mut weight = vec![Q::zero(); d as usize];
    for t in enumerate_types(d) {
        let prod: BigInt = t.parts().iter().map(|(b, _)| BigInt::from(*b)).product();
        weight[t.index() as usize] += Q::new(BigInt::from(1), prod * t.aut_order());
    }
    let rows = weight.into_iter().enumerate().map(|(k, w)| (k as u32, count_partitions_at_most(k as u32, d - k as u32), w)).collect();
    Ok(MassReport { degree: d, rows })
}
