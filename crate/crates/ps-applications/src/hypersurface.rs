use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use ps_algebra::arith::binomial;
use ps_algebra::{PairRing, Poly, PolyRing, Rationals, Q};
use ps_plethysm::{invert_zeta, virtual_stratum, StratumKind};
use ps_types::SplittingType;

use crate::AppError;

const MAX_DIM: u32 = 6;
const MAX_DEGREE: u32 = 8;

/// Which measure of Irr_d ⊂ (degree-d hypersurfaces in P^n) to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Measure {
    /// Class in Z[L].
    Motive,
    /// Number of F_q-irreducible hypersurfaces, a polynomial in q with
    /// rational coefficients.
    Count,
    /// Number of geometrically irreducible hypersurfaces over F_q.
    Geometric,
    /// Compactly supported Euler characteristic.
    Euler,
    /// Characteristic-cycle class as its two projections (q0, q1).
    Rcc,
    /// Real compactly supported Euler characteristic.
    RealEuler,
}

impl FromStr for Measure {
    type Err = AppError;
    fn from_str(s: &str) -> Result<Self, AppError> {
        Ok(match s {
            "motive" => Measure::Motive,
            "count" => Measure::Count,
            "geometric" => Measure::Geometric,
            "euler" => Measure::Euler,
            "rcc" => Measure::Rcc,
            "realeuler" => Measure::RealEuler,
            _ => return Err(AppError::Argument(format!("unknown measure {s:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HypersurfaceSpec {
    /// Projective dimension n.
    pub dim: u32,
    pub degree: u32,
    pub measure: Measure,
}

#[derive(Clone, Debug, PartialEq)]
pub enum HyperValue {
    /// Polynomial together with the name of its variable.
    Poly(Poly, &'static str),
    Rational(Q),
    Pair(Q, Q),
}

impl fmt::Display for HyperValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HyperValue::Poly(p, v) => f.write_str(&p.to_string_var(v)),
            HyperValue::Rational(q) => f.write_str(&ps_algebra::q_to_string(q)),
            HyperValue::Pair(a, b) => write!(f, "({}, {})", ps_algebra::q_to_string(a), ps_algebra::q_to_string(b)),
        }
    }
}

/// C(n+k, k), the number of degree-k monomials in n+1 variables.
pub fn closed_class(n: u32, k: u32) -> u64 {
    binomial((n + k) as u64, k as u64).to_u64().expect("monomial count fits in u64")
}

fn check(n: u32, d: u32) -> Result<(), AppError> {
    if d == 0 {
        return Err(AppError::Argument("degree must be positive".into()));
    }
    if n > MAX_DIM || d > MAX_DEGREE {
        return Err(AppError::Argument(format!("supported range is n <= {MAX_DIM}, d <= {MAX_DEGREE}")));
    }
    Ok(())
}

fn projective_classes(n: u32, d: u32) -> Vec<Poly> {
    (1..=d).map(|k| Poly::geometric(closed_class(n, k))).collect()
}

fn integer(q: Q, what: &str) -> Result<Q, AppError> {
    if q.is_integer() {
        Ok(q)
    } else {
        Err(AppError::Assertion(format!("{what} is not an integer: {q}")))
    }
}

pub fn irr_hypersurface(spec: &HypersurfaceSpec) -> Result<HyperValue, AppError> {
    let (n, d) = (spec.dim, spec.degree);
    check(n, d)?;
    let du = d as usize;
    Ok(match spec.measure {
        Measure::Motive | Measure::Geometric => {
            let u = invert_zeta(&PolyRing::motivic(), &projective_classes(n, d), du)?;
            if !u.is_integral() {
                return Err(AppError::Assertion(format!("class of Irr_{d} has non-integral coefficients")));
            }
            HyperValue::Poly(u, if spec.measure == Measure::Motive { "L" } else { "q" })
        }
        Measure::Count => HyperValue::Poly(invert_zeta(&PolyRing::trivial("q"), &projective_classes(n, d), du)?, "q"),
        Measure::Euler => {
            let x: Vec<Q> = (1..=d).map(|k| Q::from_integer(BigInt::from(closed_class(n, k)))).collect();
            HyperValue::Rational(integer(invert_zeta(&Rationals, &x, du)?, "Euler characteristic")?)
        }
        Measure::Rcc => {
            let ring = PairRing::new(Rationals, Rationals);
            let x: Vec<(Q, Q)> = (1..=d).map(|k| (Q::one(), Q::from_integer(BigInt::from(closed_class(n, k))))).collect();
            let (q0, q1) = invert_zeta(&ring, &x, du)?;
            HyperValue::Pair(integer(q0, "q0")?, integer(q1, "q1")?)
        }
        Measure::RealEuler => {
            let x: Vec<Q> = (1..=d).map(|k| real_point_parity(n, k)).collect();
            HyperValue::Rational(integer(invert_zeta(&Rationals, &x, du)?, "real Euler characteristic")?)
        }
    })
}

/// χ_c(P^N(R)) = (1 + (−1)^N)/2 with N = C(n+k,k) − 1.
pub(crate) fn real_point_parity(n: u32, k: u32) -> Q {
    if closed_class(n, k) % 2 == 1 {
        Q::one()
    } else {
        Q::zero()
    }
}

/// Number of geometrically irreducible degree-d hypersurfaces in P^n over F_q.
pub fn geometric_count(n: u32, d: u32, q: &Q) -> Result<Q, AppError> {
    match irr_hypersurface(&HypersurfaceSpec { dim: n, degree: d, measure: Measure::Geometric })? {
        HyperValue::Poly(p, _) => Ok(p.eval(q)),
        _ => unreachable!(),
    }
}

/// Number of degree-d hypersurfaces in P^n with F_q-splitting type λ, as a
/// polynomial in q: Σ_τ a⁻¹_{τλ} ∏_{b^m∈τ} [C(n+b,b)]_q.
pub fn stratum_mass(lambda: &SplittingType, n: u32) -> Result<Poly, AppError> {
    let d = lambda.degree();
    if d == 0 || n == 0 || d > MAX_DEGREE || n > 4 {
        return Err(AppError::Argument(format!("stratum mass needs 1 <= deg <= {MAX_DEGREE}, 1 <= n <= 4")));
    }
    let ring = PolyRing::trivial("q");
    Ok(virtual_stratum(&ring, &projective_classes(n, d), lambda, StratumKind::Open)?)
}
