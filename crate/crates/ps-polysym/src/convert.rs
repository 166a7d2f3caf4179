use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use ps_algebra::Q;
use ps_arrangements::{incidence_table, Tag};
use ps_types::{enumerate_types, SplittingType};

use crate::Basis;

pub(crate) type Coords = BTreeMap<SplittingType, Q>;

pub(crate) fn add_into(out: &mut Coords, t: SplittingType, x: Q) {
    if x.is_zero() {
        return;
    }
    let e = out.entry(t.clone()).or_insert_with(Q::zero);
    *e += x;
    if e.is_zero() {
        out.remove(&t);
    }
}

/// Apply x_λ ↦ Σ_τ T(τ, λ) x_λ basis-wise, where T is the degree-|λ| table.
fn through_table(c: &Coords, tag: Tag) -> Coords {
    let mut out = Coords::new();
    for (lam, x) in c {
        if lam.is_empty() {
            add_into(&mut out, lam.clone(), x.clone());
            continue;
        }
        let t = incidence_table(lam.degree(), tag);
        for (tau, v) in t.column(lam) {
            add_into(&mut out, tau, v * x);
        }
    }
    out
}

pub(crate) fn h_mul(a: &Coords, b: &Coords) -> Coords {
    let mut out = Coords::new();
    for (s, x) in a {
        for (t, y) in b {
            add_into(&mut out, s.union(t), x * y);
        }
    }
    out
}

pub(crate) fn h_adams(r: u32, a: &Coords) -> Coords {
    a.iter().map(|(t, x)| (t.scale_multiplicities(r), x.clone())).collect()
}

static E_GEN: OnceLock<Mutex<HashMap<u32, Arc<Coords>>>> = OnceLock::new();

/// E_b = Σ_{τ⊨b unramified} (−1)^{len τ} M_τ, in H coordinates.
pub fn e_generator(b: u32) -> Arc<Coords> {
    let memo = E_GEN.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = memo.lock().unwrap().get(&b) {
        return v.clone();
    }
    let m: Coords = enumerate_types(b)
        .into_iter()
        .filter(|t| t.is_unramified())
        .map(|t| {
            let s = if t.length() % 2 == 0 { 1 } else { -1 };
            (t, Q::from_integer(BigInt::from(s)))
        })
        .collect();
    let h = Arc::new(through_table(&m, Tag::AInv));
    memo.lock().unwrap().insert(b, h.clone());
    h
}

fn e_basis_in_h(tau: &SplittingType) -> Coords {
    let mut acc: Coords = [(SplittingType::empty(), Q::one())].into_iter().collect();
    for (b, m) in tau.parts() {
        acc = h_mul(&acc, &h_adams(m, &e_generator(b)));
    }
    acc
}

fn e_to_h(c: &Coords) -> Coords {
    let mut out = Coords::new();
    for (tau, x) in c {
        for (s, y) in e_basis_in_h(tau) {
            add_into(&mut out, s, y * x);
        }
    }
    out
}

/// Gauss–Jordan inverse over Q.
fn invert_dense(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let mut inv: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect();
    for col in 0..n {
        let piv = (col..n).find(|r| !a[*r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let (x, y) = (&a[col][j] * &f, &inv[col][j] * &f);
                    a[r][j] -= x;
                    inv[r][j] -= y;
                }
            }
        }
    }
    Some(inv)
}

static E_INV: OnceLock<Mutex<HashMap<u32, Arc<Vec<Vec<Q>>>>>> = OnceLock::new();

/// Inverse of the matrix whose row τ is E_τ in H coordinates.
fn e_inverse(d: u32) -> Arc<Vec<Vec<Q>>> {
    let memo = E_INV.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = memo.lock().unwrap().get(&d) {
        return v.clone();
    }
    let types = enumerate_types(d);
    let rows: Vec<Vec<Q>> = types
        .iter()
        .map(|t| {
            let e = e_basis_in_h(t);
            types.iter().map(|s| e.get(s).cloned().unwrap_or_else(Q::zero)).collect()
        })
        .collect();
    let inv = Arc::new(invert_dense(&rows).expect("E is a basis in every degree"));
    memo.lock().unwrap().insert(d, inv.clone());
    inv
}

fn h_to_e(c: &Coords) -> Coords {
    let mut by_degree: BTreeMap<u32, Vec<(&SplittingType, &Q)>> = BTreeMap::new();
    for (t, x) in c {
        by_degree.entry(t.degree()).or_default().push((t, x));
    }
    let mut out = Coords::new();
    for (d, items) in by_degree {
        let types = enumerate_types(d);
        let pos: HashMap<&SplittingType, usize> = types.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let inv = e_inverse(d);
        for (s, x) in items {
            let row = &inv[pos[s]];
            for (j, t) in types.iter().enumerate() {
                add_into(&mut out, t.clone(), &row[j] * x);
            }
        }
    }
    out
}

/// Coordinates in `basis` rewritten in H.
pub fn to_h(basis: Basis, c: &BTreeMap<SplittingType, Q>) -> BTreeMap<SplittingType, Q> {
    match basis {
        Basis::H => c.clone(),
        Basis::M => through_table(c, Tag::AInv),
        Basis::EPlus => through_table(&through_table(c, Tag::E), Tag::AInv),
        Basis::E => e_to_h(c),
    }
}

pub(crate) fn from_h(basis: Basis, c: &Coords) -> Coords {
    match basis {
        Basis::H => c.clone(),
        Basis::M => through_table(c, Tag::A),
        Basis::EPlus => through_table(&through_table(c, Tag::A), Tag::EInv),
        Basis::E => h_to_e(c),
    }
}

/// Direct conversions that avoid the detour through H where a table exists.
pub(crate) fn convert(from: Basis, to: Basis, c: &Coords) -> Coords {
    match (from, to) {
        _ if from == to => c.clone(),
        (Basis::M, Basis::EPlus) => through_table(c, Tag::EInv),
        (Basis::EPlus, Basis::M) => through_table(c, Tag::E),
        _ => from_h(to, &to_h(from, c)),
    }
}
