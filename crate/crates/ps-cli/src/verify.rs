//! Verification suites: bundled reference tables, product factorizations,
//! internal identities and brute-force oracles.

use std::collections::BTreeMap;

use ps_algebra::Q;
use ps_applications::{factorization_cases, mass_identity, transitive_oracle, transitive_tuples, verify_factorization};
use ps_arrangements::identities::{check_degree, ramified_mobius_violation};
use ps_arrangements::{ainv_top_column, incidence_table, monoid_oracle, poset, top_stratum_inverse, Tag};
use ps_types::{hilbert_by_enumeration, hilbert_by_product, SplittingType};
use serde_json::{json, Value};

use crate::fixtures;

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    /// Machine-readable description of the first failure.
    pub failure: Option<Value>,
}

impl Check {
    fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed: true, detail: detail.into(), failure: None }
    }

    fn fail(name: impl Into<String>, detail: impl Into<String>, failure: Value) -> Self {
        Check { name: name.into(), passed: false, detail: detail.into(), failure: Some(failure) }
    }

    pub fn to_json(&self) -> Value {
        json!({ "check": self.name, "passed": self.passed, "detail": self.detail, "failure": self.failure })
    }
}

fn q(x: &Q) -> String {
    ps_algebra::q_to_string(x)
}

/// Full reference tables for a, a⁻¹ or μ in the given degrees.
pub fn reference_table(tag: Tag, degrees: std::ops::RangeInclusive<u32>) -> Check {
    let name = format!("{tag} table, degrees {}..{}", degrees.start(), degrees.end());
    let fixture = fixtures::table(tag);
    let mut checked = 0;
    for d in degrees {
        let table = incidence_table(d, tag);
        let entries: Vec<_> = fixture.iter().filter(|e| e.0 == d).collect();
        if entries.len() != table.len() * table.len() {
            let f = json!({ "degree": d, "expected_entries": table.len() * table.len(), "fixture_entries": entries.len() });
            return Check::fail(name, format!("degree {d}: fixture does not cover the table"), f);
        }
        for (_, row, col, want) in entries {
            let got = table.get(row, col);
            if got != *want {
                let f = json!({ "degree": d, "tau": row.to_string(), "lambda": col.to_string(), "expected": q(want), "computed": q(&got) });
                return Check::fail(name, format!("{tag}({row}, {col}) = {} but expected {}", q(&got), q(want)), f);
            }
            checked += 1;
        }
    }
    Check::pass(name, format!("{checked} entries match"))
}

/// The listed nonzero a⁻¹_{τ,(d)} and zero for every unlisted τ.
pub fn reference_top_column(degrees: std::ops::RangeInclusive<u32>) -> Check {
    let name = format!("top column of ainv, degrees {}..{}", degrees.start(), degrees.end());
    let fixture = fixtures::top_column();
    let mut checked = 0;
    for d in degrees {
        let listed: BTreeMap<&SplittingType, &Q> = fixture.iter().filter(|e| e.0 == d).map(|e| (&e.1, &e.2)).collect();
        let computed: BTreeMap<SplittingType, Q> = ainv_top_column(d).into_iter().collect();
        for t in listed.keys() {
            if !computed.contains_key(*t) {
                return Check::fail(name, format!("listed type {t} is not of degree {d}"), json!({ "degree": d, "tau": t.to_string() }));
            }
        }
        for (t, got) in &computed {
            let want = listed.get(t).map(|x| (*x).clone()).unwrap_or_default();
            if *got != want {
                let f = json!({ "degree": d, "tau": t.to_string(), "expected": q(&want), "computed": q(got) });
                return Check::fail(name, format!("ainv({t}, ({d})) = {} but expected {}", q(got), q(&want)), f);
            }
            checked += 1;
        }
    }
    Check::pass(name, format!("{checked} types checked, listed values nonzero and all others zero"))
}

/// Closed form of the top column against back-substitution.
pub fn top_column_closed_form(max: u32) -> Check {
    let name = format!("closed form of the top column, degrees 1..{max}");
    let mut checked = 0;
    for d in 1..=max {
        for (t, got) in ainv_top_column(d) {
            let want = top_stratum_inverse(&t, d).expect("same degree");
            if got != want {
                let f = json!({ "degree": d, "tau": t.to_string(), "closed_form": q(&want), "computed": q(&got) });
                return Check::fail(name, format!("closed form disagrees at {t}"), f);
            }
            checked += 1;
        }
    }
    Check::pass(name, format!("{checked} types agree"))
}

pub fn ramified_mobius_vanishes(max: u32) -> Check {
    let name = format!("mobius vanishes on ramified types, degrees 1..{max}");
    for d in 1..=max {
        if let Some(t) = ramified_mobius_violation(d) {
            return Check::fail(name, format!("mu({t}, ({d})) is nonzero"), json!({ "degree": d, "tau": t.to_string() }));
        }
    }
    Check::pass(name, "all zero")
}

pub fn reference_tables(max: u32) -> Vec<Check> {
    let low = 2..=max.clamp(2, 5);
    let mut v = vec![
        reference_table(Tag::A, low.clone()),
        reference_table(Tag::AInv, low.clone()),
        reference_table(Tag::Mobius, low),
    ];
    if max >= 6 {
        v.push(reference_top_column(6..=max.min(10)));
        v.push(top_column_closed_form(max.min(10)));
    }
    v.push(ramified_mobius_vanishes(max.clamp(2, 8)));
    v
}

pub fn factorizations() -> Vec<Check> {
    factorization_cases()
        .into_iter()
        .map(|case| match verify_factorization(case) {
            Ok(r) if r.ok() => Check::pass(case.to_string(), format!("u_d as expected for d <= {}", r.range)),
            Ok(r) => {
                let (d, got, want) = r.first_failure.unwrap();
                let f = json!({ "case": case.to_string(), "degree": d, "computed": q(&got), "expected": q(&want) });
                Check::fail(case.to_string(), format!("u_{d} = {} but expected {}", q(&got), q(&want)), f)
            }
            Err(e) => Check::fail(case.to_string(), e.to_string(), json!({ "case": case.to_string(), "error": e.to_string() })),
        })
        .collect()
}

pub fn mass_identities(max: u32) -> Check {
    let name = format!("partition/type mass identity, degrees 1..{max}");
    for d in 1..=max {
        match mass_identity(d) {
            Ok(r) if r.ok() => {}
            Ok(r) => {
                let k = r.first_failure().unwrap();
                return Check::fail(name, format!("degree {d}, index {k}"), json!({ "degree": d, "index": k }));
            }
            Err(e) => return Check::fail(name, e.to_string(), json!({ "degree": d, "error": e.to_string() })),
        }
    }
    Check::pass(name, "all indices agree")
}

pub fn identities(max: u32) -> Vec<Check> {
    let mut v = vec![mass_identities(max.min(16))];

    let name = format!("top-column sums of ainv, degrees 1..{max}");
    v.push(match (1..=max).find_map(|d| check_degree(d).err().map(|e| (d, e))) {
        None => Check::pass(name, "all sums hold"),
        Some((d, e)) => Check::fail(name, e.clone(), json!({ "degree": d, "error": e })),
    });

    let name = format!("Hilbert series of types through degree {max}");
    let by_enum = hilbert_by_enumeration(max);
    let by_prod = hilbert_by_product(max);
    v.push(match (0..=max as usize).find(|k| num_bigint::BigInt::from(by_enum[*k]) != by_prod[*k]) {
        None => Check::pass(name, format!("{by_enum:?}")),
        Some(k) => Check::fail(name, format!("coefficient {k} differs"), json!({ "degree": k })),
    });

    let pmax = max.min(6);
    let name = format!("arrangement order equals merge/forget closure, degrees 1..{pmax}");
    let mut bad = None;
    for d in 1..=pmax {
        let p = poset(d);
        let closure = p.closure_relation();
        for i in 0..p.types.len() {
            for j in 0..p.types.len() {
                if p.leq[i][j] != closure[i][j] && bad.is_none() {
                    bad = Some(json!({ "degree": d, "tau": p.types[i].to_string(), "lambda": p.types[j].to_string() }));
                }
            }
        }
    }
    v.push(match bad {
        None => Check::pass(name, "relations agree"),
        Some(f) => Check::fail(name, "relations differ", f),
    });
    v
}

pub fn monoid_oracles(max: u32) -> Check {
    let max = max.min(5);
    let name = format!("free commutative monoid oracle, degrees 1..{max}");
    let gens: [&[u32]; 6] = [&[1], &[2], &[1, 1], &[1, 2], &[1, 1, 2], &[2, 3]];
    let mut n = 0;
    for d in 1..=max {
        for g in gens {
            let r = monoid_oracle(d, g);
            if let Some(m) = &r.mismatch {
                return Check::fail(name, m.clone(), json!({ "degree": d, "generators": g, "mismatch": m }));
            }
            n += r.types_checked;
        }
    }
    Check::pass(name, format!("{n} type identities checked"))
}

pub fn transitive_oracles(max: u32) -> Check {
    let mut cases: Vec<(u32, u32)> = (1..=max.min(4)).flat_map(|d| (1..=3).map(move |r| (d, r))).collect();
    if max >= 5 {
        cases.push((5, 2));
    }
    let name = format!("transitive tuples against brute force, {} cases", cases.len());
    for (d, r) in cases {
        let formula = transitive_tuples(d, r);
        let brute = transitive_oracle(d, r);
        match (formula, brute) {
            (Ok(f), Ok(b)) if f == num_bigint::BigInt::from(b) => {}
            (f, b) => {
                let f = json!({ "letters": d, "rank": r, "formula": format!("{f:?}"), "oracle": format!("{b:?}") });
                return Check::fail(name, format!("d={d}, r={r} disagree"), f);
            }
        }
    }
    Check::pass(name, "all agree")
}

pub fn oracles(max: u32) -> Vec<Check> {
    vec![monoid_oracles(max), transitive_oracles(max)]
}

