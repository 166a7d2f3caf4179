use ps_algebra::Ring;
use ps_polysym::{Basis, PolysymElement};

use crate::{forward_zeta, rational_combination, virtual_stratum, PlethysmError, StratumKind};

/// F ∘ (u_1, u_2, …): write F in H coordinates and send H_{d^m} to ψ_m(x_d),
/// where x is the forward zeta expansion of u.
pub fn generic_plethysm<R: Ring>(ring: &R, f: &PolysymElement, u: &[R::Elem]) -> Result<R::Elem, PlethysmError> {
    let h = f.convert(Basis::H);
    let n = h.max_degree().unwrap_or(0) as usize;
    let x = forward_zeta(ring, u, n)?;
    let mut terms = Vec::new();
    for (t, c) in h.terms() {
        terms.push((c.clone(), virtual_stratum(ring, &x, t, StratumKind::S)?));
    }
    rational_combination(ring, &terms)
}
