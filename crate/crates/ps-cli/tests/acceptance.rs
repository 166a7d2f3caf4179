//! Runs each acceptance criterion and prints one PASS/FAIL line per criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use ps_algebra::rational::{q_frac, q_int};
use ps_algebra::{
    AdamsKind, Integers, MPoly, MPolyRing, PairRing, Poly, PolyRing, RatFunc, RatFuncRing, Rationals, Ring, Series,
    Witt, WittRing, Q,
};
use ps_applications::*;
use ps_arrangements::{incidence_table, Tag};
use ps_cli::verify::{self, Check};
use ps_plethysm::{binomial_strata, forward_zeta, invert_zeta_all, powerfree_series, virtual_stratum, StratumKind};
use ps_polysym::{Basis, PolysymElement, PolysymRing};
use ps_types::{enumerate_types, SplittingType};

type Outcome = Result<String, String>;

fn checks(cs: Vec<Check>) -> Outcome {
    let n = cs.len();
    match cs.into_iter().find(|c| !c.passed) {
        None => Ok(format!("{n} checks")),
        Some(c) => Err(format!("{}: {}", c.name, c.detail)),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn poly(terms: &[(u32, Q)]) -> Poly {
    Poly::from_coeffs(terms.iter().cloned())
}

fn hyper(n: u32, d: u32, m: Measure) -> Result<HyperValue, String> {
    irr_hypersurface(&HypersurfaceSpec { dim: n, degree: d, measure: m }).map_err(|e| e.to_string())
}

fn c1() -> Outcome {
    checks(vec![verify::reference_table(Tag::A, 2..=5)])
}

fn c2() -> Outcome {
    checks(vec![verify::reference_table(Tag::AInv, 2..=5)])
}

fn c3() -> Outcome {
    checks(vec![verify::reference_top_column(6..=10), verify::top_column_closed_form(10)])
}

fn c4() -> Outcome {
    checks(vec![verify::reference_table(Tag::Mobius, 2..=5), verify::ramified_mobius_vanishes(8)])
}

fn c5() -> Outcome {
    let motive = poly(&[
        (14, q_int(1)),
        (13, q_int(1)),
        (12, q_int(1)),
        (10, q_int(-2)),
        (9, q_int(-2)),
        (8, q_int(-1)),
        (7, q_int(1)),
        (6, q_int(1)),
    ]);
    let count = poly(&[
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
    let got = hyper(2, 4, Measure::Motive)?;
    ensure(got == HyperValue::Poly(motive, "L"), || format!("motive is {got}"))?;
    let got = hyper(2, 4, Measure::Count)?;
    ensure(got == HyperValue::Poly(count, "q"), || format!("M_4,2 is {got}"))?;
    Ok("motive and count exact".into())
}

fn c6() -> Outcome {
    let half = q_frac(1, 2);
    let (ring, u2) = inverse_polya_symbolic(2).map_err(|e| e.to_string())?;
    let (x1, x2) = (ring.var(1), ring.var(2));
    let want = ring.sub(&x2, &ring.scale(&ring.add(&ring.mul(&x1, &x1), &x1), &half));
    ensure(u2 == want, || format!("u_2 = {}", ring.to_text(&u2)))?;
    let (ring, u3) = inverse_polya_symbolic(3).map_err(|e| e.to_string())?;
    let (x1, x2, x3) = (ring.var(1), ring.var(2), ring.var(3));
    let want = ring.add(&ring.sub(&x3, &ring.mul(&x2, &x1)), &ring.scale(&ring.sub(&ring.pow(&x1, 3), &x1), &q_frac(1, 3)));
    ensure(u3 == want, || format!("u_3 = {}", ring.to_text(&u3)))?;
    Ok(format!("u_3 = {}", ring.to_text(&u3)))
}

/// n counts homogeneous coordinates, so the ambient space is P^{n-1}.
fn c7() -> Outcome {
    for n in 1..=4u32 {
        let dim = n - 1;
        let e = hyper(dim, 1, Measure::Euler)?;
        ensure(e == HyperValue::Rational(q_int(n as i64)), || format!("chi(Irr_1), n={n}: {e}"))?;
        let r = hyper(dim, 1, Measure::Rcc)?;
        ensure(r == HyperValue::Pair(Q::one(), q_int(n as i64)), || format!("rcc(Irr_1), n={n}: {r}"))?;
        for d in 2..=6 {
            let e = hyper(dim, d, Measure::Euler)?;
            ensure(e == HyperValue::Rational(Q::zero()), || format!("chi(Irr_{d}), n={n}: {e}"))?;
            let r = hyper(dim, d, Measure::Rcc)?;
            ensure(r == HyperValue::Pair(Q::zero(), Q::zero()), || format!("rcc(Irr_{d}), n={n}: {r}"))?;
        }
    }
    Ok("n <= 4, d <= 6".into())
}

fn c8() -> Outcome {
    checks(verify::factorizations())
}

fn c9() -> Outcome {
    let t = transitive_tuples(2, 2).map_err(|e| e.to_string())?;
    ensure(t == BigInt::from(3), || format!("d=2, r=2 gives {t}"))?;
    checks(vec![verify::transitive_oracles(5)])
}

fn c10() -> Outcome {
    checks(vec![verify::mass_identities(10)])
}

fn transpose_symmetry() -> Result<(), String> {
    for d in 1..=6 {
        for tag in [Tag::A, Tag::E] {
            let t = incidence_table(d, tag);
            for tau in t.types() {
                for lam in t.types() {
                    ensure(t.get(tau, lam) == t.get(&lam.dual(), &tau.dual()), || format!("{tag}({tau}, {lam})"))?;
                }
            }
        }
    }
    Ok(())
}

fn roundtrip<R: Ring>(ring: &R, u: Vec<R::Elem>) -> Result<(), String> {
    let n = u.len();
    let x = forward_zeta(ring, &u, n).map_err(|e| e.to_string())?;
    let back = invert_zeta_all(ring, &x, n).map_err(|e| e.to_string())?;
    ensure(back == u, || format!("inverse of forward in {}", ring.name()))?;
    let v = invert_zeta_all(ring, &u, n).map_err(|e| e.to_string())?;
    let back = forward_zeta(ring, &v, n).map_err(|e| e.to_string())?;
    ensure(back == u, || format!("forward of inverse in {}", ring.name()))
}

fn small_poly(c: &[i64]) -> Poly {
    Poly::from_coeffs(c.iter().enumerate().map(|(i, v)| (i as u32, q_int(*v))))
}

fn zeta_roundtrips() -> Result<(), String> {
    let seeds: Vec<(i64, i64, i64)> = (0..8).map(|i| ((i * 5) % 7 - 3, i % 3 + 1, (i * 3) % 5 - 2)).collect();
    roundtrip(&Integers, seeds.iter().map(|s| BigInt::from(s.0)).collect())?;
    roundtrip(&Rationals, seeds.iter().map(|s| q_frac(s.0, s.1)).collect())?;
    roundtrip(&PolyRing::motivic(), seeds.iter().map(|s| small_poly(&[s.0, s.2])).collect())?;
    roundtrip(&PolyRing::rational("w"), seeds.iter().map(|s| small_poly(&[s.2, 0, s.0]).scale(&q_frac(1, s.1))).collect())?;
    roundtrip(&PolyRing::trivial("q"), seeds.iter().map(|s| small_poly(&[s.0, s.2])).collect())?;
    roundtrip(&PairRing::new(Rationals, Rationals), seeds.iter().map(|s| (q_int(s.0), q_frac(s.2, s.1))).collect())?;
    let mr = MPolyRing::new(2, AdamsKind::Frobenius);
    let ms: Vec<MPoly> =
        seeds.iter().map(|s| mr.add(&mr.scale(&mr.var(1), &q_int(s.0)), &mr.scale(&mr.var(2), &q_int(s.2)))).collect();
    roundtrip(&mr, ms)?;
    let rs: Vec<RatFunc> =
        seeds.iter().take(5).map(|s| RatFunc::new(small_poly(&[s.0, 1]), small_poly(&[1, s.1])).unwrap()).collect();
    roundtrip(&RatFuncRing::default(), rs)?;
    let ws: Vec<Witt> = seeds
        .iter()
        .map(|s| Witt::from_coeffs(vec![Q::one(), q_int(s.0), q_frac(s.2, s.1), Q::zero(), q_int(s.1)]).unwrap())
        .collect();
    roundtrip(&WittRing::new(4), ws)
}

fn witt_ghosts() -> Result<(), String> {
    for order in 1..=12usize {
        let w = WittRing::new(order);
        let mk = |a: i64, b: i64| {
            let mut c = vec![Q::one()];
            c.extend((1..=order as i64).map(|k| q_frac((a * k) % 5 - 2, b + k % 2)));
            Witt::from_coeffs(c).unwrap()
        };
        for (a, b) in [(1, 1), (2, 3), (3, 2)] {
            let (x, y) = (mk(a, b), mk(b, a + 1));
            let (gx, gy) = (x.ghosts(), y.ghosts());
            let sum = w.try_add(&x, &y).map_err(|e| e.to_string())?.ghosts();
            let prod = w.try_mul(&x, &y).map_err(|e| e.to_string())?.ghosts();
            for k in 0..order {
                ensure(sum[k] == &gx[k] + &gy[k], || format!("ghost {k} of a sum, order {order}"))?;
                ensure(prod[k] == &gx[k] * &gy[k], || format!("ghost {k} of a product, order {order}"))?;
            }
        }
    }
    Ok(())
}

fn binomial_vs_virtual() -> Result<(), String> {
    let n = 4;
    let ring = MPolyRing::new(n, AdamsKind::Trivial);
    let u: Vec<MPoly> = (1..=n).map(|i| ring.var(i)).collect();
    let x = forward_zeta(&ring, &u, n).map_err(|e| e.to_string())?;
    for d in 1..=n as u32 {
        for tau in enumerate_types(d) {
            let b = binomial_strata(&ring, &u, &tau).map_err(|e| e.to_string())?;
            let v = virtual_stratum(&ring, &x, &tau, StratumKind::Open).map_err(|e| e.to_string())?;
            ensure(b == v, || format!("stratum {tau}"))?;
        }
    }
    Ok(())
}

fn powerfree_identity() -> Result<(), String> {
    let ring = PolyRing::motivic();
    let x: Vec<Poly> = (1..=8u64).map(|k| Poly::geometric(closed_class(2, k as u32))).collect();
    let mut z = vec![Poly::one()];
    z.extend(x.iter().cloned());
    let z = Series::new(z);
    for n in 1..=3usize {
        let zpf = Series::new(powerfree_series(&ring, &x, n as u32, 8).map_err(|e| e.to_string())?);
        ensure(zpf.mul(&ring, &z.substitute_power(&ring, n)) == z, || format!("n = {n}"))?;
    }
    Ok(())
}

fn top(b: Basis, d: u32) -> PolysymElement {
    if d == 0 {
        PolysymElement::one(b)
    } else {
        PolysymElement::basis_element(b, SplittingType::top(d))
    }
}

fn polysym_identities() -> Result<(), String> {
    let n = 6;
    let ring = PolysymRing::new(Basis::M);
    let h = Series::new((0..=n).map(|d| top(Basis::H, d as u32).convert(Basis::M)).collect());
    let e = Series::new((0..=n).map(|d| top(Basis::E, d as u32).convert(Basis::M)).collect());
    ensure(h.mul(&ring, &e) == Series::one(&ring, n), || "H(t) E(t) = 1".into())?;
    let bases = [Basis::M, Basis::H, Basis::E, Basis::EPlus];
    for d in 0..=5 {
        for t in enumerate_types(d) {
            for b in bases {
                let x = PolysymElement::basis_element(b, t.clone());
                ensure(x.omega().omega() == x, || format!("omega twice on {b}[{t}]"))?;
            }
        }
    }
    let low: Vec<PolysymElement> = (0..=4)
        .flat_map(enumerate_types)
        .flat_map(|t| bases.map(|b| PolysymElement::basis_element(b, t.clone())))
        .collect();
    for x in &low {
        for y in &low {
            ensure(x.pairing(y) == y.pairing(x), || format!("pairing of {x} and {y}"))?;
        }
    }
    Ok(())
}

fn sl_limits() -> Result<(), String> {
    for d in 1..=3 {
        for r in 1..=3 {
            let l = sl_limit_at_one(d, r).map_err(|e| e.to_string())?;
            let e = sl_euler(d, r).map_err(|e| e.to_string())?;
            ensure(l == e, || format!("d={d} r={r}: limit {l}, euler {e}"))?;
        }
    }
    Ok(())
}

fn c11() -> Outcome {
    let suites: [(&str, fn() -> Result<(), String>); 8] = [
        ("transpose symmetry", transpose_symmetry),
        ("monoid oracle", || checks(vec![verify::monoid_oracles(5)]).map(|_| ())),
        ("zeta roundtrips", zeta_roundtrips),
        ("witt ghosts", witt_ghosts),
        ("binomial strata", binomial_vs_virtual),
        ("powerfree", powerfree_identity),
        ("polysymmetric identities", polysym_identities),
        ("SL limits", sl_limits),
    ];
    for (name, f) in suites {
        f().map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!("{} suites", suites.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, u64); 11] = [
        ("1 arrangement tables, degrees 2-5", c1, 5),
        ("2 inverse tables, degrees 2-5", c2, 10),
        ("3 top column d=6..10 and closed form", c3, 60),
        ("4 mobius tables and ramified vanishing", c4, 10),
        ("5 quartic plane curves", c5, 2),
        ("6 inverse Polya formulas", c6, 1),
        ("7 Euler and characteristic cycles", c7, 2),
        ("8 product factorizations", c8, 30),
        ("9 transitive tuples", c9, 120),
        ("10 mass identity", c10, 5),
        ("11 property suites", c11, 300),
    ];
    let mut failed = 0;
    for (name, f, budget) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let took = start.elapsed();
        let slow = if took > Duration::from_secs(budget) { format!(" (over the {budget}s target)") } else { String::new() };
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{:.2}s]{slow}", took.as_secs_f64()),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {name}: {e} [{:.2}s]", took.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
