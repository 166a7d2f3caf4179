use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use ps_algebra::arith::{binomial, divisors};
use ps_algebra::rational::{q_frac, q_int};
use ps_algebra::{
    AdamsKind, Integers, MPoly, MPolyRing, PairRing, Poly, PolyRing, RatFunc, RatFuncRing, Rationals, Ring, Series,
    Witt, WittRing, Q,
};
use ps_plethysm::*;
use ps_polysym::{power_basis, Basis, PolysymElement};
use ps_types::{enumerate_types, SplittingType};

fn t(s: &str) -> SplittingType {
    s.parse().unwrap()
}

/// [P^{C(n+k,k)−1}] = 1 + w + … for k = 1..len.
fn hypersurface_x(n: u64, len: u64) -> Vec<Poly> {
    (1..=len).map(|k| Poly::geometric(binomial(n + k, k).try_into().unwrap())).collect()
}

#[test]
fn newton_polynomials_match_logarithm() {
    // p_m = m·[t^m] log(1 + h_1 t + h_2 t² + …) with h_i free variables
    let n = 5;
    let ring = MPolyRing::new(n, AdamsKind::Trivial);
    let mut c = vec![ring.one()];
    c.extend((1..=n).map(|i| ring.var(i)));
    let log = Series::new(c).log(&ring).unwrap();
    let hs: Vec<MPoly> = (1..=n).map(|i| ring.var(i)).collect();
    for m in 1..=n {
        let want = ring.scale_int(&log.coeffs[m], &BigInt::from(m));
        assert_eq!(newton_poly(m as u32).eval(&ring, &hs), want, "m = {m}");
    }
    assert_eq!(ring.to_text(&newton_poly(2).eval(&ring, &hs)), "-x_1^2 + 2*x_2");
    assert_eq!(ring.to_text(&newton_poly(3).eval(&ring, &hs)), "x_1^3 - 3*x_1*x_2 + 3*x_3");
}

#[test]
fn newton_recursion() {
    // m·h_m = Σ_{i=1}^m p_i h_{m−i}
    let n = 7;
    let ring = MPolyRing::new(n, AdamsKind::Trivial);
    let hs: Vec<MPoly> = (1..=n).map(|i| ring.var(i)).collect();
    let p: Vec<MPoly> = (1..=n).map(|m| newton_poly(m as u32).eval(&ring, &hs)).collect();
    for m in 1..=n {
        let mut acc = ring.zero();
        for i in 1..=m {
            let h = if i == m { ring.one() } else { hs[m - i - 1].clone() };
            acc = ring.add(&acc, &ring.mul(&p[i - 1], &h));
        }
        assert_eq!(acc, ring.scale_int(&hs[m - 1], &BigInt::from(m)));
    }
}

#[test]
fn inversion_examples() {
    let x = [BigInt::from(2), BigInt::from(4)];
    assert_eq!(invert_zeta(&Integers, &x, 2).unwrap(), BigInt::one());
    assert_eq!(invert_zeta(&Integers, &x, 1).unwrap(), BigInt::from(2));
    let ring = PolyRing::motivic();
    let u4 = invert_zeta(&ring, &hypersurface_x(2, 4), 4).unwrap();
    let want = Poly::from_coeffs([(14, 1), (13, 1), (12, 1), (10, -2), (9, -2), (8, -1), (7, 1), (6, 1)].map(|(e, c)| (e, q_int(c))));
    assert_eq!(u4, want);
    assert!(invert_zeta(&Integers, &x, 3).is_err());
}

#[test]
fn forward_examples() {
    let mut u = vec![BigInt::zero(); 8];
    u[0] = BigInt::one();
    u[1] = BigInt::one();
    let x = forward_zeta(&Integers, &u, 8).unwrap();
    // oracle: 1/((1−t)(1−t²)) by series inversion
    let mut den = vec![BigInt::zero(); 9];
    den[0] = BigInt::one();
    den[1] = BigInt::from(-1);
    den[2] = BigInt::from(-1);
    den[3] = BigInt::one();
    let s = Series::new(den).inv(&Integers).unwrap();
    assert_eq!(x, s.coeffs[1..].to_vec());
    assert_eq!(&x[..4], &[1, 2, 2, 3].map(BigInt::from));

    let ring = PolyRing::motivic();
    let mut u = vec![Poly::zero(); 6];
    u[0] = Poly::x();
    let x = forward_zeta(&ring, &u, 6).unwrap();
    for (d, v) in x.iter().enumerate() {
        assert_eq!(*v, Poly::monomial(Q::one(), d as u32 + 1));
    }
}

#[test]
fn direct_double_sum_agrees() {
    let ring = PolyRing::motivic();
    let x = hypersurface_x(2, 6);
    for d in 1..=6 {
        assert_eq!(invert_zeta(&ring, &x, d).unwrap(), invert_zeta_direct(&ring, &x, d).unwrap());
    }
    let ring = MPolyRing::new(6, AdamsKind::Frobenius);
    let x: Vec<MPoly> = (1..=6).map(|i| ring.var(i)).collect();
    for d in 1..=6 {
        assert_eq!(invert_zeta(&ring, &x, d).unwrap(), invert_zeta_direct(&ring, &x, d).unwrap());
    }
}

#[test]
fn witt_point_counts() {
    for n in 1..=2u64 {
        for d in 1..=4usize {
            let motive = invert_zeta(&PolyRing::motivic(), &hypersurface_x(n, d as u64), d).unwrap();
            for q in [2i64, 3] {
                let w = WittRing::new(d);
                let x: Vec<Witt> = (1..=d as u64)
                    .map(|k| {
                        let nk: u32 = binomial(n + k, k).try_into().unwrap();
                        let g: Vec<Q> = (1..=d as u32)
                            .map(|r| {
                                let qr = q_int(q).pow(r as i32);
                                (qr.pow(nk as i32) - Q::one()) / (qr - Q::one())
                            })
                            .collect();
                        Witt::from_ghosts(&g)
                    })
                    .collect();
                let u = invert_zeta(&w, &x, d).unwrap();
                assert_eq!(u.ghosts()[0], motive.eval(&q_int(q)), "n={n} d={d} q={q}");
            }
        }
    }
}

#[test]
fn virtual_strata() {
    let ring = PolyRing::motivic();
    let x = hypersurface_x(2, 5);
    for d in 1..=5u32 {
        let top = SplittingType::top(d);
        assert_eq!(
            virtual_stratum(&ring, &x, &top, StratumKind::Open).unwrap(),
            invert_zeta(&ring, &x, d as usize).unwrap()
        );
    }
    assert_eq!(virtual_stratum(&ring, &x, &t("1 1"), StratumKind::S).unwrap(), x[0].mul(&x[0]));
    assert_eq!(virtual_stratum(&ring, &x, &t("1^2"), StratumKind::S).unwrap(), x[0].substitute_power(2));
    for d in 1..=4 {
        for tau in enumerate_types(d) {
            let s = virtual_stratum(&ring, &x, &tau, StratumKind::S).unwrap();
            assert_eq!(virtual_stratum(&ring, &x, &tau, StratumKind::Closed).unwrap(), s);
        }
    }
}

#[test]
fn multinomials() {
    assert_eq!(multinomial(&Integers, &BigInt::from(5), &[2]).unwrap(), BigInt::from(10));
    let ring = MPolyRing::new(1, AdamsKind::Trivial);
    let x = ring.var(1);
    assert_eq!(multinomial(&ring, &x, &[0, 1]).unwrap(), x);
    // m_{(2,1)} in four variables at 1: count the monomials x_i² x_j, i ≠ j
    let mut count = 0;
    for e in 0..4u32.pow(4) {
        let mut v: Vec<u32> = (0..4).map(|i| (e / 4u32.pow(i)) % 4).filter(|k| *k > 0).collect();
        v.sort();
        if v == [1, 2] {
            count += 1;
        }
    }
    assert_eq!(multinomial(&Integers, &BigInt::from(4), &[1, 1]).unwrap(), BigInt::from(count));
    assert_eq!(conf_class(&Integers, &BigInt::from(3), &[1, 1]).unwrap(), BigInt::from(6));
}

#[test]
fn macdonald() {
    // Σ χ(Conf_n) t^n = (1 + t)^χ, also for negative χ
    for chi in -4i64..=5 {
        let mut c = vec![Q::zero(); 7];
        c[0] = Q::one();
        c[1] = Q::one();
        let log = Series::new(c).log(&Rationals).unwrap();
        let scaled = Series::new(log.coeffs.iter().map(|v| v * q_int(chi)).collect());
        let e = scaled.exp(&Rationals).unwrap();
        for n in 0..=6u32 {
            assert_eq!(conf_class(&Rationals, &q_int(chi), &[n]).unwrap(), e.coeffs[n as usize]);
        }
    }
}

#[test]
fn configuration_recurrence() {
    let ring = MPolyRing::new(1, AdamsKind::Trivial);
    let x = ring.var(1);
    fn vectors(len: usize, max: u32) -> Vec<Vec<u32>> {
        if len == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for v in vectors(len - 1, max) {
            for k in 0..=max {
                let mut w = v.clone();
                w.push(k);
                out.push(w);
            }
        }
        out
    }
    let mut checked = 0;
    for len in 0..=3 {
        for w in vectors(len, 4) {
            for m in 1..=4u32 {
                if w.iter().sum::<u32>() + m <= 5 {
                    assert!(conf_recurrence_holds(&ring, &x, &w, m).unwrap(), "{w:?} {m}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 50);
}

#[test]
fn binomial_examples() {
    let c = BigInt::from(7);
    let u = vec![c.clone(), BigInt::zero()];
    assert_eq!(binomial_strata(&Integers, &u, &t("1 1")).unwrap(), BigInt::from(21));
    assert_eq!(binomial_strata(&Integers, &u, &t("1^2")).unwrap(), c);
}

#[test]
fn binomial_equals_virtual() {
    let n = 4;
    let ring = MPolyRing::new(n, AdamsKind::Trivial);
    let u: Vec<MPoly> = (1..=n).map(|i| ring.var(i)).collect();
    let x = forward_zeta(&ring, &u, n).unwrap();
    for d in 1..=n as u32 {
        for tau in enumerate_types(d) {
            assert_eq!(
                binomial_strata(&ring, &u, &tau).unwrap(),
                virtual_stratum(&ring, &x, &tau, StratumKind::Open).unwrap(),
                "{tau}"
            );
        }
    }
}

/// Multisets of size d on c points with every multiplicity below n.
fn bounded_multisets(c: usize, d: u32, n: u32) -> Vec<Vec<u32>> {
    fn go(c: usize, d: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == c {
            if d == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for k in 0..=d.min(cap) {
            cur.push(k);
            go(c, d - k, cap, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(c, d, n.saturating_sub(1), &mut Vec::new(), &mut out);
    out
}

#[test]
fn powerfree_counts() {
    for c in 1..=4usize {
        let x: Vec<BigInt> = (1..=8).map(|k| binomial(c as u64 + k - 1, k)).collect();
        for n in 1..=3u32 {
            for d in 0..=8u32 {
                let want = bounded_multisets(c, d, n).len();
                assert_eq!(powerfree(&Integers, &x, n, &[d]).unwrap(), BigInt::from(want), "c={c} n={n} d={d}");
            }
        }
        // pairs of multisets whose pointwise minimum has every multiplicity below 2
        let all = |d| bounded_multisets(c, d, 99);
        for d1 in 0..=4 {
            for d2 in 0..=4 {
                let mut want = 0;
                for a in all(d1) {
                    for b in all(d2) {
                        if a.iter().zip(&b).all(|(p, q)| (*p).min(*q) < 2) {
                            want += 1;
                        }
                    }
                }
                assert_eq!(powerfree(&Integers, &x, 2, &[d1, d2]).unwrap(), BigInt::from(want));
            }
        }
    }
    let c = BigInt::from(6);
    let x: Vec<BigInt> = (1..=8).map(|k| binomial(6 + k - 1, k)).collect();
    for d in 0..=8u32 {
        assert_eq!(powerfree(&Integers, &x, 2, &[d]).unwrap(), binomial(6, d as u64));
        let want = if d == 0 { BigInt::one() } else { BigInt::zero() };
        assert_eq!(powerfree(&Integers, &x, 1, &[d]).unwrap(), want);
    }
    assert_eq!(powerfree(&Integers, &x, 2, &[1, 1]).unwrap(), &c * &c);
}

#[test]
fn powerfree_series_identity() {
    // (Σ Zpf_d t^d)·Z(t^n) = Z(t) with x the closed classes of P²-hypersurfaces
    let ring = PolyRing::motivic();
    let x = hypersurface_x(2, 8);
    let mut z = vec![Poly::one()];
    z.extend(x.iter().cloned());
    let z = Series::new(z);
    for n in 1..=3usize {
        let zpf = Series::new(powerfree_series(&ring, &x, n as u32, 8).unwrap());
        assert_eq!(zpf.mul(&ring, &z.substitute_power(&ring, n)), z);
    }
}

#[test]
fn plethysm_of_bases() {
    let ring = PolyRing::motivic();
    let x = hypersurface_x(2, 5);
    let u = invert_zeta_all(&ring, &x, 5).unwrap();
    for d in 1..=5u32 {
        let hd = PolysymElement::basis_element(Basis::H, SplittingType::top(d));
        assert_eq!(generic_plethysm(&ring, &hd, &u).unwrap(), x[d as usize - 1]);
        let md = PolysymElement::basis_element(Basis::M, SplittingType::top(d));
        assert_eq!(generic_plethysm(&ring, &md, &u).unwrap(), u[d as usize - 1]);
        let want = divisors(d as u64).into_iter().fold(Poly::zero(), |acc, k| {
            acc.add(&u[k as usize - 1].substitute_power(d / k as u32).scale(&q_int(k as i64)))
        });
        assert_eq!(generic_plethysm(&ring, &power_basis(d, 1), &u).unwrap(), want);
    }
}

#[test]
fn measure_sequence_json() {
    let ring = PolyRing::motivic();
    let s = MeasureSequence::closed(hypersurface_x(1, 3));
    assert_eq!(MeasureSequence::from_json(&ring, &s.to_json(&ring)).unwrap(), s);
}

fn roundtrip<R: Ring>(ring: &R, u: Vec<R::Elem>) {
    let n = u.len();
    let x = forward_zeta(ring, &u, n).unwrap();
    assert_eq!(invert_zeta_all(ring, &x, n).unwrap(), u, "{}", ring.name());
    // the other direction, with x taken as the input
    let v = invert_zeta_all(ring, &u, n).unwrap();
    assert_eq!(forward_zeta(ring, &v, n).unwrap(), u, "{}", ring.name());
}

fn small_poly(c: &[i64]) -> Poly {
    Poly::from_coeffs(c.iter().enumerate().map(|(i, v)| (i as u32, q_int(*v))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn zeta_roundtrips(seed in prop::collection::vec((-3i64..=3, 1i64..=3, -2i64..=2), 8)) {
        let n = seed.len();
        roundtrip(&Integers, seed.iter().map(|s| BigInt::from(s.0)).collect());
        roundtrip(&Rationals, seed.iter().map(|s| q_frac(s.0, s.1)).collect());
        roundtrip(&PolyRing::motivic(), seed.iter().map(|s| small_poly(&[s.0, s.2])).collect());
        roundtrip(&PolyRing::rational("w"), seed.iter().map(|s| small_poly(&[s.2, 0, s.0]).scale(&q_frac(1, s.1))).collect());
        roundtrip(&PolyRing::trivial("q"), seed.iter().map(|s| small_poly(&[s.0, s.2])).collect());
        roundtrip(&PairRing::new(Integers, Integers), seed.iter().map(|s| (BigInt::from(s.0), BigInt::from(s.2))).collect());
        let mr = MPolyRing::new(2, AdamsKind::Trivial);
        roundtrip(&mr, seed.iter().map(|s| mr.add(&mr.scale(&mr.var(1), &q_int(s.0)), &mr.scale(&mr.var(2), &q_int(s.2)))).collect());
        let rf = RatFuncRing::default();
        let rfs: Vec<RatFunc> = seed.iter().take(5)
            .map(|s| RatFunc::new(small_poly(&[s.0, 1]), small_poly(&[1, s.1])).unwrap())
            .collect();
        roundtrip(&rf, rfs);
        let w = WittRing::new(4);
        let ws: Vec<Witt> = seed.iter().take(6)
            .map(|s| Witt::from_coeffs(vec![Q::one(), q_int(s.0), q_frac(s.2, s.1), Q::zero(), q_int(s.1)]).unwrap())
            .collect();
        roundtrip(&w, ws);
        prop_assert!(n == 8);
    }
}
