use std::collections::HashMap;

use ps_algebra::{AdamsKind, MPoly, MPolyRing, Ring, Q};
use ps_types::{enumerate_types, SplittingType};

use crate::{incidence_table, Tag};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidReport {
    pub degree: u32,
    pub generator_degrees: Vec<u32>,
    pub types_checked: usize,
    pub mismatch: Option<String>,
}

impl MonoidReport {
    pub fn ok(&self) -> bool {
        self.mismatch.is_none()
    }
}

fn exponent_vectors(gens: &[u32], e: u32) -> Vec<Vec<u32>> {
    fn rec(i: usize, rem: u32, gens: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == gens.len() {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for k in 0..=rem / gens[i] {
            cur.push(k);
            rec(i + 1, rem - k * gens[i], gens, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, e, gens, &mut Vec::new(), &mut out);
    out
}

/// Check S_τ = Σ_λ a_{λτ} X_λ and X_τ = Σ_λ a⁻¹_{λτ} S_λ in the free
/// commutative monoid algebra on generators of the given degrees, where
/// ψ_m raises each generator to the m-th power.
pub fn monoid_oracle(d: u32, generator_degrees: &[u32]) -> MonoidReport {
    let gens = generator_degrees;
    assert!(gens.iter().all(|g| *g >= 1), "generator degrees are positive");
    let ring = MPolyRing::new(gens.len(), AdamsKind::Frobenius);
    let mono = |e: &Vec<u32>| MPoly::from_terms([(e.clone(), Q::from_integer(1.into()))]);
    // x_e: every monoid element of degree e
    let x: Vec<MPoly> = (0..=d)
        .map(|e| exponent_vectors(gens, e).iter().fold(ring.zero(), |acc, v| ring.add(&acc, &mono(v))))
        .collect();
    let mut xt: HashMap<SplittingType, MPoly> = HashMap::new();
    for v in exponent_vectors(gens, d) {
        let parts = v.iter().zip(gens).filter(|(k, _)| **k > 0).map(|(k, g)| (*g, *k));
        let t = SplittingType::from_parts(parts).unwrap();
        let cur = xt.remove(&t).unwrap_or_else(|| ring.zero());
        xt.insert(t, ring.add(&cur, &mono(&v)));
    }
    let types = enumerate_types(d);
    let s: HashMap<SplittingType, MPoly> = types
        .iter()
        .map(|t| {
            let v = t.parts().iter().fold(ring.one(), |acc, (b, m)| ring.mul(&acc, &ring.adams(*m, &x[*b as usize])));
            (t.clone(), v)
        })
        .collect();
    let get_x = |t: &SplittingType| xt.get(t).cloned().unwrap_or_else(|| ring.zero());
    let a = incidence_table(d, Tag::A);
    let ai = incidence_table(d, Tag::AInv);
    let mut report = MonoidReport { degree: d, generator_degrees: gens.to_vec(), types_checked: 0, mismatch: None };
    for tau in &types {
        let lhs = &s[tau];
        let rhs = a.column(tau).iter().fold(ring.zero(), |acc, (l, c)| ring.add(&acc, &ring.scale(&get_x(l), c)));
        if *lhs != rhs {
            report.mismatch = Some(format!("S{tau} differs from its X-expansion"));
            return report;
        }
        let lhs = get_x(tau);
        let rhs = ai.column(tau).iter().fold(ring.zero(), |acc, (l, c)| ring.add(&acc, &ring.scale(&s[l], c)));
        if lhs != rhs {
            report.mismatch = Some(format!("X{tau} differs from its S-expansion"));
            return report;
        }
        report.types_checked += 1;
    }
    report
}
