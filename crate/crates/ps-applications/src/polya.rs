use ps_algebra::{AdamsKind, MPoly, MPolyRing, Rationals, Q};
use ps_plethysm::{invert_zeta, invert_zeta_all};

use crate::AppError;

/// u_1..u_d from x_1..x_d: if x_k objects of total size k can be assembled
/// from u_d kinds of size-d pieces, recover the u_d.
pub fn inverse_polya(x: &[Q], d: usize) -> Result<Vec<Q>, AppError> {
    if d == 0 || x.len() < d {
        return Err(AppError::Argument(format!("need x_1..x_{d}, got {} values", x.len())));
    }
    Ok(invert_zeta_all(&Rationals, x, d)?)
}

/// u_d as a polynomial in the symbols x_1..x_d.
pub fn inverse_polya_symbolic(d: usize) -> Result<(MPolyRing, MPoly), AppError> {
    if d == 0 || d > 10 {
        return Err(AppError::Argument("symbolic degree must be in 1..=10".into()));
    }
    let ring = MPolyRing::new(d, AdamsKind::Trivial);
    let x: Vec<MPoly> = (1..=d).map(|i| ring.var(i)).collect();
    let u = invert_zeta(&ring, &x, d)?;
    Ok((ring, u))
}
