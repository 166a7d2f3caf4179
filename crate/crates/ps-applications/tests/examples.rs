use num_bigint::BigInt;
use num_traits::{One, Zero};
use ps_algebra::arith::{divisors, mobius};
use ps_algebra::rational::{q_frac, q_int};
use ps_algebra::{Poly, Ring, Q};
use ps_applications::*;
use ps_types::{enumerate_types, SplittingType};

fn poly(terms: &[(u32, Q)]) -> Poly {
    Poly::from_coeffs(terms.iter().cloned())
}

fn value(n: u32, d: u32, m: Measure) -> HyperValue {
    irr_hypersurface(&HypersurfaceSpec { dim: n, degree: d, measure: m }).unwrap()
}

fn as_poly(v: HyperValue) -> Poly {
    match v {
        HyperValue::Poly(p, _) => p,
        other => panic!("expected a polynomial, got {other:?}"),
    }
}

#[test]
fn quartic_plane_curves() {
    let want = poly(&[
        (14, q_int(1)),
        (13, q_int(1)),
        (12, q_int(1)),
        (10, q_int(-2)),
        (9, q_int(-2)),
        (8, q_int(-1)),
        (7, q_int(1)),
        (6, q_int(1)),
    ]);
    assert_eq!(as_poly(value(2, 4, Measure::Motive)), want);
    let want = poly(&[
        (14, q_int(1)),
        (13, q_int(1)),
        (12, q_int(1)),
        (10, q_frac(-3, 2)),
        (9, q_int(-2)),
        (8, q_frac(-3, 4)),
        (7, q_int(1)),
        (6, q_int(1)),
        (5, q_frac(-1, 2)),
        (4, q_frac(-1, 2)),
        (2, q_frac(1, 4)),
    ]);
    assert_eq!(as_poly(value(2, 4, Measure::Count)), want);
    assert_eq!(value(2, 4, Measure::Motive).to_string(), "L^14 + L^13 + L^12 - 2*L^10 - 2*L^9 - L^8 + L^7 + L^6");
}

#[test]
fn binary_forms() {
    // nothing of degree ≥ 2 on P^1 is geometrically irreducible
    for d in 2..=6 {
        assert!(as_poly(value(1, d, Measure::Geometric)).is_zero(), "d = {d}");
    }
    // F_q-irreducible binary forms of degree d ≥ 2 are monic irreducibles
    for d in 2..=6u32 {
        let gauss = divisors(d as u64).into_iter().fold(Poly::zero(), |acc, m| {
            acc.add(&Poly::monomial(Q::new(BigInt::from(mobius(d as u64 / m)), BigInt::from(d)), m as u32))
        });
        assert_eq!(as_poly(value(1, d, Measure::Count)), gauss, "d = {d}");
    }
    for n in 1..=4 {
        assert_eq!(as_poly(value(n, 1, Measure::Count)), Poly::geometric(n as u64 + 1));
    }
}

#[test]
fn euler_and_characteristic_cycles() {
    // Irr_1 is the dual projective space P^n
    for n in 1..=4u32 {
        assert_eq!(value(n, 1, Measure::Euler), HyperValue::Rational(q_int(n as i64 + 1)));
        assert_eq!(value(n, 1, Measure::Rcc), HyperValue::Pair(Q::one(), q_int(n as i64 + 1)));
        for d in 2..=6 {
            assert_eq!(value(n, d, Measure::Euler), HyperValue::Rational(Q::zero()), "n={n} d={d}");
            assert_eq!(value(n, d, Measure::Rcc), HyperValue::Pair(Q::zero(), Q::zero()), "n={n} d={d}");
        }
    }
    // the Euler characteristic is the motive at L = 1
    for n in 1..=3 {
        for d in 1..=5 {
            let e = as_poly(value(n, d, Measure::Motive)).eval(&Q::one());
            assert_eq!(value(n, d, Measure::Euler), HyperValue::Rational(e));
        }
    }
}

#[test]
fn stratum_masses() {
    let two = SplittingType::top(2);
    assert_eq!(stratum_mass(&two, 1).unwrap(), poly(&[(2, q_frac(1, 2)), (1, q_frac(-1, 2))]));
    for n in 1..=4 {
        assert_eq!(stratum_mass(&SplittingType::top(1), n).unwrap(), Poly::geometric(n as u64 + 1));
    }
    for n in 1..=2u32 {
        for d in 1..=4u32 {
            let total = enumerate_types(d).iter().fold(Poly::zero(), |acc, l| acc.add(&stratum_mass(l, n).unwrap()));
            let n_closed = ps_applications::closed_class(n, d);
            assert_eq!(total, Poly::geometric(n_closed), "n={n} d={d}");
        }
    }
    // the top stratum is the F_q-irreducible count
    for d in 1..=4 {
        assert_eq!(stratum_mass(&SplittingType::top(d), 2).unwrap(), as_poly(value(2, d, Measure::Count)));
    }
}

#[test]
fn secret_menu() {
    let (ring, u2) = inverse_polya_symbolic(2).unwrap();
    let (x1, x2) = (ring.var(1), ring.var(2));
    let half = q_frac(1, 2);
    let want = ring.sub(&x2, &ring.scale(&ring.add(&ring.mul(&x1, &x1), &x1), &half));
    assert_eq!(u2, want);

    let (ring, u3) = inverse_polya_symbolic(3).unwrap();
    let (x1, x2, x3) = (ring.var(1), ring.var(2), ring.var(3));
    let cube = ring.pow(&x1, 3);
    let want = ring.add(&ring.sub(&x3, &ring.mul(&x2, &x1)), &ring.scale(&ring.sub(&cube, &x1), &q_frac(1, 3)));
    assert_eq!(u3, want);

    let u = inverse_polya(&[q_int(2), q_int(4)], 2).unwrap();
    assert_eq!(u, vec![q_int(2), q_int(1)]);
}

#[test]
fn transitive_examples() {
    for r in 1..=4 {
        assert_eq!(transitive_tuples(1, r).unwrap(), BigInt::one());
    }
    assert_eq!(transitive_tuples(3, 1).unwrap(), BigInt::one());
    assert_eq!(transitive_tuples(2, 2).unwrap(), BigInt::from(3));
    assert_eq!(transitive_oracle(2, 2).unwrap(), 3);
    assert_eq!(transitive_oracle(3, 1).unwrap(), 1);
    // a single permutation is transitive only as a d-cycle
    for d in 1..=8 {
        assert_eq!(transitive_tuples(d, 1).unwrap(), BigInt::one());
    }
}

#[test]
fn transitive_against_oracle() {
    let mut cases: Vec<(u32, u32)> = (1..=4).flat_map(|d| (1..=3).map(move |r| (d, r))).collect();
    cases.push((5, 2));
    for (d, r) in cases {
        assert_eq!(transitive_tuples(d, r).unwrap(), BigInt::from(transitive_oracle(d, r).unwrap()), "d={d} r={r}");
    }
}

#[test]
fn special_linear_character_varieties() {
    for r in 1..=4 {
        assert!(sl_epoly(1, r).unwrap() == ps_algebra::RatFunc::from_poly(Poly::one()));
    }
    assert_eq!(sl_euler(2, 1).unwrap(), Q::zero());
    for d in 1..=3 {
        for r in 1..=3 {
            assert_eq!(sl_limit_at_one(d, r).unwrap(), sl_euler(d, r).unwrap(), "d={d} r={r}");
        }
    }
    // the E-polynomial is the zeta inversion of the closed classes
    let ring = ps_algebra::RatFuncRing::default();
    for r in 1..=2 {
        let x: Vec<_> = (1..=4).map(|b| sl_epoly_closed(b, r)).collect();
        for d in 1..=4 {
            assert_eq!(ps_plethysm::invert_zeta(&ring, &x, d).unwrap(), sl_epoly(d as u32, r).unwrap());
        }
    }
}

// x_b as a plain polynomial, built independently of the library
fn sl_epoly_closed(b: u32, r: u32) -> ps_algebra::RatFunc {
    let w1 = |j: u32| Poly::monomial(Q::one(), j).sub(&Poly::one());
    let mut num = Poly::zero();
    for lam in ps_types::partitions(b) {
        let mut t = Poly::one();
        let mut den = BigInt::one();
        for part in lam.parts() {
            t = t.mul(&w1(part).pow(r));
            den *= BigInt::from(part);
        }
        num = num.add(&t.scale(&Q::new(BigInt::one(), den * lam.mult_factorials())));
    }
    let (q, rem) = num.div_rem(&w1(1).pow(r));
    assert!(rem.is_zero());
    ps_algebra::RatFunc::from_poly(q)
}

#[test]
fn mass_identity_examples() {
    let r = mass_identity(3).unwrap();
    let rows: Vec<(BigInt, Q)> = r.rows.iter().map(|(_, a, b)| (a.clone(), b.clone())).collect();
    assert_eq!(rows, vec![(BigInt::one(), Q::one()); 3]);
    let r = mass_identity(1).unwrap();
    assert_eq!(r.rows, vec![(0, BigInt::one(), Q::one())]);
    for d in 1..=10 {
        assert!(mass_identity(d).unwrap().ok(), "d = {d}");
    }
}

#[test]
fn factorization_suite() {
    for case in factorization_cases() {
        let rep = verify_factorization(case).unwrap();
        assert!(rep.ok(), "{case}: {:?}", rep.first_failure);
    }
}

#[test]
fn cyclotomic_products() {
    for n in 1..=12u32 {
        let prod = divisors(n as u64).into_iter().fold(Poly::one(), |acc, d| acc.mul(&cyclotomic(d as u32)));
        assert_eq!(prod, Poly::monomial(Q::one(), n).sub(&Poly::one()));
    }
    assert_eq!(cyclotomic(6), poly(&[(2, q_int(1)), (1, q_int(-1)), (0, q_int(1))]));
}

#[test]
fn real_euler_support() {
    for n in 1..=8 {
        let rep = real_euler_factorization(n, 16).unwrap();
        assert!(rep.nonzero.iter().all(|(d, _)| [1, 2, 4, 8, 16].contains(d)));
    }
    // n = 1: x_k = 1 exactly for even k, so the series is 1/(1 − t^2)
    let rep = real_euler_factorization(1, 16).unwrap();
    let want: Vec<(usize, Q)> = vec![(2, q_int(1))];
    assert_eq!(rep.nonzero, want);
    // the series oracle: multiply the factors back out
    for n in 1..=8u32 {
        let rep = real_euler_factorization(n, 16).unwrap();
        let mut s = vec![Q::zero(); 17];
        s[0] = Q::one();
        for (d, u) in &rep.nonzero {
            let e: i64 = u.to_integer().try_into().unwrap();
            for _ in 0..e.abs() {
                if e > 0 {
                    for i in *d..=16 {
                        let a = s[i - d].clone();
                        s[i] += a;
                    }
                } else {
                    for i in (*d..=16).rev() {
                        let a = s[i - d].clone();
                        s[i] -= a;
                    }
                }
            }
        }
        for k in 1..=16u32 {
            let c = ps_applications::closed_class(n, k);
            assert_eq!(s[k as usize], q_int((c % 2) as i64), "n={n} k={k}");
        }
    }
}
