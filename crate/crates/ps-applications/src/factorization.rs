use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use ps_algebra::arith::{divisors, is_power_of, mobius, number_of_divisors};
use ps_algebra::{Poly, Rationals, Series, Q};
use ps_plethysm::invert_zeta_all;
use ps_types::{hilbert_by_enumeration, partitions};

use crate::hypersurface::real_point_parity;
use crate::AppError;

/// A power series 1 + Σ x_k t^k with a known factorization ∏ (1 − t^d)^{−u_d}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorizationCase {
    /// Partition numbers; u_d = 1.
    Partitions,
    /// Number of types of each degree; u_d = σ_0(d).
    Types,
    /// (−1)^{binary digit sum of k}; u_d = −1 on powers of 2.
    ThueMorse,
    /// ∏ (1 − q^n)^2 (1 − q^{11n})^2; u_d = −2, or −4 when 11 | d.
    Level11,
    /// ∏ (1 − q^n)^24, the discriminant form divided by q; u_d = −24.
    Delta,
    /// Euler's pentagonal series; u_d = −1.
    Pentagonal,
    /// exp(Σ_i t^{p^i}/p^i); u_d = μ(d)/d for p ∤ d, else 0.
    ArtinHasse(u32),
    /// The cyclotomic polynomial Φ_n normalized to constant term 1;
    /// u_d = −μ(n/d) for d | n.
    Cyclotomic(u32),
}

impl fmt::Display for FactorizationCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorizationCase::Partitions => f.write_str("partitions"),
            FactorizationCase::Types => f.write_str("types"),
            FactorizationCase::ThueMorse => f.write_str("thue-morse"),
            FactorizationCase::Level11 => f.write_str("eta-level-11"),
            FactorizationCase::Delta => f.write_str("delta"),
            FactorizationCase::Pentagonal => f.write_str("pentagonal"),
            FactorizationCase::ArtinHasse(p) => write!(f, "artin-hasse-{p}"),
            FactorizationCase::Cyclotomic(n) => write!(f, "cyclotomic-{n}"),
        }
    }
}

fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Dense coefficients 1..=n of ∏_{a≥1} ∏_{(c,e)} (1 − q^{ca})^e.
fn eta_product(factors: &[(usize, u32)], n: usize) -> Vec<Q> {
    let mut s = vec![BigInt::zero(); n + 1];
    s[0] = BigInt::one();
    for &(c, e) in factors {
        let mut k = c;
        while k <= n {
            for _ in 0..e {
                for i in (k..=n).rev() {
                    let sub = s[i - k].clone();
                    s[i] -= sub;
                }
            }
            k += c;
        }
    }
    s.into_iter().skip(1).map(Q::from_integer).collect()
}

/// Φ_n(y) = (y^n − 1) / ∏_{d|n, d<n} Φ_d(y).
pub fn cyclotomic(n: u32) -> Poly {
    assert!(n >= 1);
    let mut p = Poly::monomial(Q::one(), n).sub(&Poly::one());
    for d in divisors(n as u64) {
        if d < n as u64 {
            let (q, r) = p.div_rem(&cyclotomic(d as u32));
            debug_assert!(r.is_zero());
            p = q;
        }
    }
    p
}

impl FactorizationCase {
    /// Degrees 1..=range are checked.
    pub fn range(&self) -> usize {
        match self {
            FactorizationCase::Partitions => 15,
            FactorizationCase::Types => 12,
            FactorizationCase::ThueMorse => 16,
            FactorizationCase::Level11 => 22,
            FactorizationCase::Delta => 12,
            FactorizationCase::Pentagonal => 15,
            FactorizationCase::ArtinHasse(_) => 12,
            FactorizationCase::Cyclotomic(n) => 2 * *n as usize,
        }
    }

    /// x_1..x_n.
    pub fn x_coefficients(&self, n: usize) -> Vec<Q> {
        match *self {
            FactorizationCase::Partitions => (1..=n as u32).map(|k| qi(partitions(k).len() as i64)).collect(),
            FactorizationCase::Types => hilbert_by_enumeration(n as u32).into_iter().skip(1).map(|c| qi(c as i64)).collect(),
            FactorizationCase::ThueMorse => {
                (1..=n as u32).map(|k| qi(if k.count_ones() % 2 == 0 { 1 } else { -1 })).collect()
            }
            FactorizationCase::Level11 => eta_product(&[(1, 2), (11, 2)], n),
            FactorizationCase::Delta => eta_product(&[(1, 24)], n),
            FactorizationCase::Pentagonal => {
                // coefficient (−1)^j at the generalized pentagonal numbers j(3j ∓ 1)/2
                let mut x = vec![Q::zero(); n];
                for j in 1i64.. {
                    let (a, b) = (j * (3 * j - 1) / 2, j * (3 * j + 1) / 2);
                    if a as usize > n {
                        break;
                    }
                    let s = qi(if j % 2 == 0 { 1 } else { -1 });
                    x[a as usize - 1] = s.clone();
                    if b as usize <= n {
                        x[b as usize - 1] = s;
                    }
                }
                x
            }
            FactorizationCase::ArtinHasse(p) => {
                let mut c = vec![Q::zero(); n + 1];
                let mut pi = 1usize;
                while pi <= n {
                    c[pi] = Q::new(BigInt::one(), BigInt::from(pi));
                    pi *= p as usize;
                }
                let e = Series::new(c).exp(&Rationals).expect("constant term is zero");
                e.coeffs[1..=n].to_vec()
            }
            FactorizationCase::Cyclotomic(m) => {
                let mut phi = cyclotomic(m);
                if phi.coeff(0) != Q::one() {
                    phi = phi.neg();
                }
                (1..=n as u32).map(|k| phi.coeff(k)).collect()
            }
        }
    }

    pub fn expected_u(&self, d: usize) -> Q {
        let d64 = d as u64;
        match *self {
            FactorizationCase::Partitions => Q::one(),
            FactorizationCase::Types => qi(number_of_divisors(d64) as i64),
            FactorizationCase::ThueMorse => qi(if is_power_of(d64, 2) { -1 } else { 0 }),
            FactorizationCase::Level11 => qi(if d % 11 == 0 { -4 } else { -2 }),
            FactorizationCase::Delta => qi(-24),
            FactorizationCase::Pentagonal => qi(-1),
            FactorizationCase::ArtinHasse(p) => {
                if d64 % p as u64 == 0 {
                    Q::zero()
                } else {
                    Q::new(BigInt::from(mobius(d64)), BigInt::from(d))
                }
            }
            FactorizationCase::Cyclotomic(n) => {
                if n as u64 % d64 == 0 {
                    qi(-mobius(n as u64 / d64))
                } else {
                    Q::zero()
                }
            }
        }
    }
}

/// Every case in the standard suite.
pub fn factorization_cases() -> Vec<FactorizationCase> {
    let mut v = vec![
        FactorizationCase::Partitions,
        FactorizationCase::Types,
        FactorizationCase::ThueMorse,
        FactorizationCase::Level11,
        FactorizationCase::Delta,
        FactorizationCase::Pentagonal,
        FactorizationCase::ArtinHasse(2),
        FactorizationCase::ArtinHasse(3),
    ];
    v.extend((1..=12).map(FactorizationCase::Cyclotomic));
    v
}

#[derive(Clone, Debug, PartialEq)]
pub struct FactorizationReport {
    pub case: FactorizationCase,
    pub range: usize,
    pub u: Vec<Q>,
    /// (d, computed, expected) at the first disagreement.
    pub first_failure: Option<(usize, Q, Q)>,
}

impl FactorizationReport {
    pub fn ok(&self) -> bool {
        self.first_failure.is_none()
    }
}

pub fn verify_factorization(case: FactorizationCase) -> Result<FactorizationReport, AppError> {
    let range = case.range();
    let x = case.x_coefficients(range);
    let u = invert_zeta_all(&Rationals, &x, range)?;
    let first_failure = u
        .iter()
        .enumerate()
        .map(|(i, v)| (i + 1, v.clone(), case.expected_u(i + 1)))
        .find(|(_, got, want)| got != want);
    Ok(FactorizationReport { case, range, u, first_failure })
}

#[derive(Clone, Debug, PartialEq)]
pub struct RealEulerReport {
    pub dim: u32,
    pub u: Vec<Q>,
    /// (d, u_d) for every nonzero u_d.
    pub nonzero: Vec<(usize, Q)>,
}

/// Factorization of Σ χ_c^R(X_k) t^k for hypersurfaces in P^n. Every
/// nonzero exponent must sit in a power-of-two degree.
pub fn real_euler_factorization(n: u32, upto: usize) -> Result<RealEulerReport, AppError> {
    if n == 0 || n > 8 || upto == 0 || upto > 16 {
        return Err(AppError::Argument("real Euler factorization needs 1 <= n <= 8, 1 <= N <= 16".into()));
    }
    let x: Vec<Q> = (1..=upto as u32).map(|k| real_point_parity(n, k)).collect();
    let u = invert_zeta_all(&Rationals, &x, upto)?;
    let nonzero: Vec<(usize, Q)> = u.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i + 1, v.clone())).collect();
    for (d, v) in &nonzero {
        if !v.is_integer() {
            return Err(AppError::Assertion(format!("u_{d} = {v} is not an integer")));
        }
        if !is_power_of(*d as u64, 2) {
            return Err(AppError::Assertion(format!("u_{d} = {v} is nonzero off the powers of two")));
        }
    }
    Ok(RealEulerReport { dim: n, u, nonzero })
}
