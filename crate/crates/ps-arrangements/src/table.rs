use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use ps_algebra::{parse_q, q_to_string, Q};
use ps_types::{enumerate_types, SplittingType};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::{cache, count_arrangements, ArrError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tag {
    A,
    E,
    AInv,
    EInv,
    Mobius,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tag::A => "a",
            Tag::E => "e",
            Tag::AInv => "ainv",
            Tag::EInv => "einv",
            Tag::Mobius => "mobius",
        })
    }
}

impl FromStr for Tag {
    type Err = ArrError;
    fn from_str(s: &str) -> Result<Self, ArrError> {
        Ok(match s {
            "a" => Tag::A,
            "e" => Tag::E,
            "ainv" | "a_inv" => Tag::AInv,
            "einv" | "e_inv" => Tag::EInv,
            "mobius" | "mu" => Tag::Mobius,
            _ => return Err(ArrError::Argument(format!("unknown table tag {s:?}"))),
        })
    }
}

/// Square table over the degree-d types, row τ and column λ.
#[derive(Clone, Debug, PartialEq)]
pub struct IncidenceTable {
    pub degree: u32,
    pub tag: Tag,
    types: Vec<SplittingType>,
    index: HashMap<SplittingType, usize>,
    entries: Vec<Vec<Q>>,
}

impl IncidenceTable {
    pub fn new(degree: u32, tag: Tag, types: Vec<SplittingType>, entries: Vec<Vec<Q>>) -> Self {
        let index = types.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        IncidenceTable { degree, tag, types, index, entries }
    }

    pub fn types(&self) -> &[SplittingType] {
        &self.types
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn index_of(&self, t: &SplittingType) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Q {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<Q>] {
        &self.entries
    }

    /// Value at (τ, λ); zero for types of another degree.
    pub fn get(&self, tau: &SplittingType, lambda: &SplittingType) -> Q {
        match (self.index_of(tau), self.index_of(lambda)) {
            (Some(i), Some(j)) => self.entries[i][j].clone(),
            _ => Q::zero(),
        }
    }

    /// Nonzero (τ, value) pairs of column λ.
    pub fn column(&self, lambda: &SplittingType) -> Vec<(SplittingType, Q)> {
        let Some(j) = self.index_of(lambda) else { return Vec::new() };
        (0..self.len())
            .filter(|i| !self.entries[*i][j].is_zero())
            .map(|i| (self.types[i].clone(), self.entries[i][j].clone()))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "degree": self.degree,
            "tag": self.tag.to_string(),
            "types": self.types.iter().map(|t| t.to_json()).collect::<Vec<_>>(),
            "entries": self.entries.iter()
                .map(|r| r.iter().map(q_to_string).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, ArrError> {
        let bad = |w: &str| ArrError::Format(format!("table JSON: {w}"));
        let degree = v.get("degree").and_then(|x| x.as_u64()).ok_or_else(|| bad("degree"))? as u32;
        let tag: Tag = v.get("tag").and_then(|x| x.as_str()).ok_or_else(|| bad("tag"))?.parse()?;
        let types = v
            .get("types")
            .and_then(|x| x.as_array())
            .ok_or_else(|| bad("types"))?
            .iter()
            .map(|t| SplittingType::from_json(t).map_err(|e| bad(&e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        let entries = v
            .get("entries")
            .and_then(|x| x.as_array())
            .ok_or_else(|| bad("entries"))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| bad("row"))?
                    .iter()
                    .map(|c| parse_q(c.as_str().ok_or_else(|| bad("entry"))?).map_err(|e| bad(&e.to_string())))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        if entries.len() != types.len() || entries.iter().any(|r| r.len() != types.len()) {
            return Err(bad("shape"));
        }
        Ok(IncidenceTable::new(degree, tag, types, entries))
    }
}

fn counts_table(d: u32, squarefree: bool) -> Vec<Vec<Q>> {
    let types = enumerate_types(d);
    let n = types.len();
    // τ ≤ λ forces τ to come no later in canonical order, so only j ≥ i is counted.
    let cols: Vec<Vec<Q>> = (0..n)
        .into_par_iter()
        .map(|j| {
            (0..n)
                .map(|i| {
                    if i > j {
                        Q::zero()
                    } else {
                        Q::from_integer(count_arrangements(&types[i], &types[j], squarefree).unwrap())
                    }
                })
                .collect()
        })
        .collect();
    (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect()
}

/// Inverse of an upper-triangular matrix with row recursion
/// x_{τλ} = −(1/t_{λλ}) Σ_{τ≤κ<λ} x_{τκ} t_{κλ}.
pub(crate) fn invert_upper(t: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = t.len();
    let nz_cols: Vec<Vec<usize>> = (0..n).map(|k| (k..n).filter(|l| !t[k][*l].is_zero()).collect()).collect();
    (0..n)
        .into_par_iter()
        .map(|i| {
            let mut row = vec![Q::zero(); n];
            row[i] = t[i][i].recip();
            // push contributions forward: once x_{iκ} is final, add x_{iκ} t_{κλ} to every λ > κ
            let mut acc = vec![Q::zero(); n];
            for k in i..n {
                if k > i {
                    row[k] = -&acc[k] / &t[k][k];
                }
                if row[k].is_zero() {
                    continue;
                }
                for &l in &nz_cols[k] {
                    if l > k {
                        acc[l] += &row[k] * &t[k][l];
                    }
                }
            }
            row
        })
        .collect()
}

fn compute(d: u32, tag: Tag) -> IncidenceTable {
    let types = enumerate_types(d);
    let entries = match tag {
        Tag::A => counts_table(d, false),
        Tag::E => counts_table(d, true),
        Tag::AInv => invert_upper(incidence_table(d, Tag::A).rows()),
        Tag::EInv => invert_upper(incidence_table(d, Tag::E).rows()),
        Tag::Mobius => {
            let a = incidence_table(d, Tag::A);
            let ind: Vec<Vec<Q>> = a
                .rows()
                .iter()
                .map(|r| r.iter().map(|x| if x.is_zero() { Q::zero() } else { Q::one() }).collect())
                .collect();
            invert_upper(&ind)
        }
    };
    IncidenceTable::new(d, tag, types, entries)
}

static MEMORY: OnceLock<Mutex<HashMap<(u32, Tag), Arc<IncidenceTable>>>> = OnceLock::new();

/// The full table for degree d, from the memory cache, then the disk cache,
/// then by computation.
pub fn incidence_table(d: u32, tag: Tag) -> Arc<IncidenceTable> {
    let mem = MEMORY.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = mem.lock().unwrap().get(&(d, tag)) {
        return t.clone();
    }
    let table = cache::load(d, tag).unwrap_or_else(|| {
        let t = compute(d, tag);
        cache::store(&t);
        t
    });
    let arc = Arc::new(table);
    mem.lock().unwrap().insert((d, tag), arc.clone());
    arc
}

/// Column (d) of a⁻¹ by back-substitution against the a table alone.
pub fn ainv_top_column(d: u32) -> Vec<(SplittingType, Q)> {
    let a = incidence_table(d, Tag::A);
    let n = a.len();
    let mut v = vec![Q::zero(); n];
    for i in (0..n).rev() {
        let mut s = if i == n - 1 { Q::one() } else { Q::zero() };
        for k in i + 1..n {
            if !v[k].is_zero() && !a.entry(i, k).is_zero() {
                s -= a.entry(i, k) * &v[k];
            }
        }
        v[i] = s / a.entry(i, i);
    }
    a.types().iter().cloned().zip(v).collect()
}
