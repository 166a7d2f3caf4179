use std::collections::HashMap;

use ps_algebra::Ring;

use crate::PlethysmError;

/// Class of r-tuples of cycles of degrees d⃗ whose gcd is n-th-power free,
/// from Zpf_{d⃗} = x_{d⃗} − Σ_{b ≥ 1, nb ≤ min d_i} Zpf_{d⃗−nb·1⃗}·x_b.
pub fn powerfree<R: Ring>(ring: &R, x: &[R::Elem], n: u32, dvec: &[u32]) -> Result<R::Elem, PlethysmError> {
    if n == 0 || dvec.is_empty() {
        return Err(PlethysmError::Argument("powerfree needs n >= 1 and at least one degree".into()));
    }
    if let Some(d) = dvec.iter().find(|d| **d as usize > x.len()) {
        return Err(PlethysmError::Argument(format!("no closed value in degree {d}")));
    }
    let xs = |k: u32| if k == 0 { ring.one() } else { x[k as usize - 1].clone() };
    fn go<R: Ring>(
        ring: &R,
        xs: &dyn Fn(u32) -> R::Elem,
        n: u32,
        d: &[u32],
        memo: &mut HashMap<Vec<u32>, R::Elem>,
    ) -> R::Elem {
        if let Some(v) = memo.get(d) {
            return v.clone();
        }
        let mut acc = d.iter().fold(ring.one(), |a, k| ring.mul(&a, &xs(*k)));
        let min = *d.iter().min().unwrap();
        let mut b = 1;
        while n * b <= min {
            let smaller: Vec<u32> = d.iter().map(|k| k - n * b).collect();
            let z = go(ring, xs, n, &smaller, memo);
            acc = ring.sub(&acc, &ring.mul(&z, &xs(b)));
            b += 1;
        }
        memo.insert(d.to_vec(), acc.clone());
        acc
    }
    Ok(go(ring, &xs, n, dvec, &mut HashMap::new()))
}

/// Zpf_0..Zpf_N in one variable.
pub fn powerfree_series<R: Ring>(ring: &R, x: &[R::Elem], n: u32, order: usize) -> Result<Vec<R::Elem>, PlethysmError> {
    (0..=order as u32).map(|d| powerfree(ring, x, n, &[d])).collect()
}
