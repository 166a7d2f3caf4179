use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use ps_algebra::arith::factorial;
use serde_json::Value;
use thiserror::Error;

use crate::Partition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TypeError {
    #[error("cannot parse type {0:?}: {1}")]
    Parse(String, String),
    #[error("bad type JSON: {0}")]
    Json(String),
}

/// A splitting type: a multiset of parts b^m (degree b, multiplicity m).
///
/// Stored run-length encoded as ((b, m), count), parts sorted in decreasing
/// (b, m) order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplittingType {
    runs: Vec<((u32, u32), u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeStats {
    pub degree: u32,
    pub length: u32,
    pub aut_order: BigInt,
    pub index: u32,
    pub pure_multiplicity: Option<u32>,
    pub is_mixed: bool,
    pub is_unramified: bool,
    /// (p, τ_p) for each degree p occurring in τ.
    pub slots: Vec<(u32, Partition)>,
}

impl SplittingType {
    /// Build from parts in any order; zero entries are rejected.
    pub fn from_parts<I: IntoIterator<Item = (u32, u32)>>(parts: I) -> Result<Self, TypeError> {
        let mut v: Vec<(u32, u32)> = parts.into_iter().collect();
        if let Some(p) = v.iter().find(|(b, m)| *b == 0 || *m == 0) {
            return Err(TypeError::Parse(format!("{}^{}", p.0, p.1), "degrees and multiplicities are positive".into()));
        }
        v.sort_unstable_by(|a, b| b.cmp(a));
        let mut runs: Vec<((u32, u32), u32)> = Vec::new();
        for p in v {
            match runs.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => runs.push((p, 1)),
            }
        }
        Ok(SplittingType { runs })
    }

    pub fn empty() -> Self {
        SplittingType { runs: Vec::new() }
    }

    /// The single part d^1.
    pub fn top(d: u32) -> Self {
        SplittingType::from_parts([(d, 1)]).unwrap()
    }

    /// The single part 1^d.
    pub fn bottom(d: u32) -> Self {
        SplittingType::from_parts([(1, d)]).unwrap()
    }

    /// (b, m) with repetition, in canonical order.
    pub fn parts(&self) -> Vec<(u32, u32)> {
        self.runs
            .iter()
            .flat_map(|(p, c)| std::iter::repeat(*p).take(*c as usize))
            .collect()
    }

    pub fn runs(&self) -> &[((u32, u32), u32)] {
        &self.runs
    }

    /// τ[b^m].
    pub fn count(&self, b: u32, m: u32) -> u32 {
        self.runs.iter().find(|(p, _)| *p == (b, m)).map(|(_, c)| *c).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.runs.iter().map(|((b, m), c)| b * m * c).sum()
    }

    pub fn length(&self) -> u32 {
        self.runs.iter().map(|(_, c)| c).sum()
    }

    pub fn multiplicity_sum(&self) -> u32 {
        self.runs.iter().map(|((_, m), c)| m * c).sum()
    }

    pub fn aut_order(&self) -> BigInt {
        self.runs.iter().map(|(_, c)| factorial(*c as u64)).product()
    }

    /// d − Σ b over parts with repetition.
    pub fn index(&self) -> u32 {
        self.degree() - self.runs.iter().map(|((b, _), c)| b * c).sum::<u32>()
    }

    pub fn dual(&self) -> Self {
        SplittingType::from_parts(self.parts().into_iter().map(|(b, m)| (m, b))).unwrap()
    }

    /// Some(m) when every multiplicity equals m.
    pub fn pure_multiplicity(&self) -> Option<u32> {
        let m = self.runs.first()?.0 .1;
        self.runs.iter().all(|((_, k), _)| *k == m).then_some(m)
    }

    pub fn is_pure(&self, m: u32) -> bool {
        self.pure_multiplicity() == Some(m)
    }

    pub fn is_mixed(&self) -> bool {
        !self.is_empty() && self.pure_multiplicity().is_none()
    }

    pub fn is_unramified(&self) -> bool {
        self.runs.iter().all(|((_, m), _)| *m == 1)
    }

    /// τ_p: the multiset of multiplicities k with p^k ∈ τ.
    pub fn slot_partition(&self, p: u32) -> Partition {
        let ks: Vec<u32> = self.parts().into_iter().filter(|(b, _)| *b == p).map(|(_, m)| m).collect();
        Partition::from_parts(&ks)
    }

    pub fn slot_degrees(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.runs.iter().map(|((b, _), _)| *b).collect();
        v.dedup();
        v
    }

    pub fn stats(&self) -> TypeStats {
        TypeStats {
            degree: self.degree(),
            length: self.length(),
            aut_order: self.aut_order(),
            index: self.index(),
            pure_multiplicity: self.pure_multiplicity(),
            is_mixed: self.is_mixed(),
            is_unramified: self.is_unramified(),
            slots: self.slot_degrees().into_iter().map(|p| (p, self.slot_partition(p))).collect(),
        }
    }

    /// Multiset union τ ⊔ σ.
    pub fn union(&self, o: &Self) -> Self {
        SplittingType::from_parts(self.parts().into_iter().chain(o.parts())).unwrap()
    }

    /// Every multiplicity multiplied by r.
    pub fn scale_multiplicities(&self, r: u32) -> Self {
        SplittingType::from_parts(self.parts().into_iter().map(|(b, m)| (b, m * r))).unwrap()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.parts().into_iter().map(|(b, m)| serde_json::json!([b, m])).collect())
    }

    pub fn from_json(v: &Value) -> Result<Self, TypeError> {
        let arr = v.as_array().ok_or_else(|| TypeError::Json(v.to_string()))?;
        let mut parts = Vec::new();
        for p in arr {
            match p.as_array().map(|a| a.as_slice()) {
                Some([b, m]) => {
                    let b = b.as_u64().ok_or_else(|| TypeError::Json(p.to_string()))?;
                    let m = m.as_u64().ok_or_else(|| TypeError::Json(p.to_string()))?;
                    parts.push((b as u32, m as u32));
                }
                _ => return Err(TypeError::Json(p.to_string())),
            }
        }
        SplittingType::from_parts(parts).map_err(|e| TypeError::Json(e.to_string()))
    }
}

impl FromStr for SplittingType {
    type Err = TypeError;

    /// Parts "b^m" or "b" separated by commas or whitespace; optional
    /// surrounding parentheses and TeX braces are ignored.
    fn from_str(s: &str) -> Result<Self, TypeError> {
        let err = |why: &str| TypeError::Parse(s.to_string(), why.to_string());
        let cleaned: String = s.chars().filter(|c| !matches!(c, '(' | ')' | '{' | '}')).collect();
        let mut parts = Vec::new();
        for tok in cleaned.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let (b, m) = match tok.split_once('^') {
                Some((b, m)) => (b, m),
                None => (tok, "1"),
            };
            let b: u32 = b.parse().map_err(|_| err("degree is not a number"))?;
            let m: u32 = m.parse().map_err(|_| err("multiplicity is not a number"))?;
            if b == 0 || m == 0 {
                return Err(err("degrees and multiplicities must be positive"));
            }
            parts.push((b, m));
        }
        if parts.is_empty() {
            return Err(err("empty type"));
        }
        SplittingType::from_parts(parts)
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .parts()
            .into_iter()
            .map(|(b, m)| if m == 1 { b.to_string() } else { format!("{b}^{m}") })
            .collect();
        write!(f, "({})", s.join(" "))
    }
}

impl Ord for SplittingType {
    /// Degree first; inside a degree, larger Σm first, then fewer parts,
    /// then the part lists compared lexicographically. Within one degree this
    /// is a linear extension of the refinement order.
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then_with(|| o.multiplicity_sum().cmp(&self.multiplicity_sum()))
            .then_with(|| self.length().cmp(&o.length()))
            .then_with(|| self.parts().cmp(&o.parts()))
    }
}

impl PartialOrd for SplittingType {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
