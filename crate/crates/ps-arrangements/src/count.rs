use std::collections::HashMap;

use num_bigint::BigInt;
use ps_types::SplittingType;

use crate::ArrError;

/// A solution A of Aᵀb = c, An = m for rows τ = b⃗^m⃗ and columns λ = c⃗^n⃗.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    pub rows: Vec<(u32, u32)>,
    pub cols: Vec<(u32, u32)>,
    pub matrix: Vec<Vec<u32>>,
}

impl Arrangement {
    pub fn is_squarefree(&self) -> bool {
        self.matrix.iter().flatten().all(|x| *x <= 1)
    }

    pub fn is_valid(&self) -> bool {
        let r = self.rows.len();
        let s = self.cols.len();
        (0..s).all(|j| (0..r).map(|i| self.matrix[i][j] * self.rows[i].0).sum::<u32>() == self.cols[j].0)
            && (0..r).all(|i| (0..s).map(|j| self.matrix[i][j] * self.cols[j].1).sum::<u32>() == self.rows[i].1)
    }

    /// Draw each block of λ as a c-wide, n-tall grid whose columns are
    /// labelled by the τ-part filling them.
    pub fn render(&self) -> String {
        let label = |i: usize| -> char {
            let abc = b"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
            abc.get(i).map(|c| *c as char).unwrap_or('?')
        };
        let mut out = String::new();
        out.push_str("blocks of tau:\n");
        for (i, (b, m)) in self.rows.iter().enumerate() {
            out.push_str(&format!("  {} = {}^{}  ({b} wide, {m} tall)\n", label(i), b, m));
        }
        for (j, (c, n)) in self.cols.iter().enumerate() {
            out.push_str(&format!("lambda block {}^{}:\n", c, n));
            let mut row = String::new();
            for (i, (b, _)) in self.rows.iter().enumerate() {
                for _ in 0..self.matrix[i][j] {
                    row.push('|');
                    for _ in 0..*b {
                        row.push(label(i));
                    }
                }
            }
            row.push('|');
            let border: String = row.chars().map(|ch| if ch == '|' { '+' } else { '-' }).collect();
            out.push_str(&format!("  {border}\n"));
            for _ in 0..*n {
                out.push_str(&format!("  {row}\n"));
            }
            out.push_str(&format!("  {border}\n"));
        }
        out
    }
}

fn check_degrees(tau: &SplittingType, lambda: &SplittingType) -> Result<(), ArrError> {
    if tau.degree() != lambda.degree() {
        return Err(ArrError::DegreeMismatch(tau.to_string(), lambda.to_string()));
    }
    Ok(())
}

/// Row vectors v ≥ 0 with Σ v_i b_i = c and v_i·n ≤ res_i (v_i ≤ 1 when squarefree).
fn column_choices(rows: &[(u32, u32)], res: &[u32], c: u32, n: u32, squarefree: bool) -> Vec<Vec<u32>> {
    fn rec(
        i: usize,
        rem: u32,
        rows: &[(u32, u32)],
        res: &[u32],
        n: u32,
        sf: bool,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if i == rows.len() {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let b = rows[i].0;
        let mut cap = (res[i] / n).min(rem / b);
        if sf {
            cap = cap.min(1);
        }
        for v in 0..=cap {
            cur.push(v);
            rec(i + 1, rem - v * b, rows, res, n, sf, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, c, rows, res, n, squarefree, &mut Vec::new(), &mut out);
    out
}

/// a(τ, λ), or e(τ, λ) when `squarefree`.
pub fn count_arrangements(tau: &SplittingType, lambda: &SplittingType, squarefree: bool) -> Result<BigInt, ArrError> {
    check_degrees(tau, lambda)?;
    let rows = tau.parts();
    let cols = lambda.parts();
    let mut memo: HashMap<(usize, Vec<u32>), u128> = HashMap::new();
    fn go(
        j: usize,
        res: Vec<u32>,
        rows: &[(u32, u32)],
        cols: &[(u32, u32)],
        sf: bool,
        memo: &mut HashMap<(usize, Vec<u32>), u128>,
    ) -> u128 {
        if j == cols.len() {
            return res.iter().all(|x| *x == 0) as u128;
        }
        if let Some(v) = memo.get(&(j, res.clone())) {
            return *v;
        }
        let (c, n) = cols[j];
        let mut total: u128 = 0;
        for v in column_choices(rows, &res, c, n, sf) {
            let next: Vec<u32> = res.iter().zip(&v).map(|(r, x)| r - x * n).collect();
            total = total.checked_add(go(j + 1, next, rows, cols, sf, memo)).expect("arrangement count overflow");
        }
        memo.insert((j, res), total);
        total
    }
    let res: Vec<u32> = rows.iter().map(|(_, m)| *m).collect();
    Ok(BigInt::from(go(0, res, &rows, &cols, squarefree, &mut memo)))
}

/// Every arrangement of τ into λ, column by column.
pub fn enumerate_arrangements(tau: &SplittingType, lambda: &SplittingType) -> Result<Vec<Arrangement>, ArrError> {
    check_degrees(tau, lambda)?;
    let rows = tau.parts();
    let cols = lambda.parts();
    let mut out = Vec::new();
    fn go(
        j: usize,
        res: &[u32],
        rows: &[(u32, u32)],
        cols: &[(u32, u32)],
        acc: &mut Vec<Vec<u32>>,
        out: &mut Vec<Arrangement>,
    ) {
        if j == cols.len() {
            if res.iter().all(|x| *x == 0) {
                let matrix = (0..rows.len()).map(|i| acc.iter().map(|col| col[i]).collect()).collect();
                out.push(Arrangement { rows: rows.to_vec(), cols: cols.to_vec(), matrix });
            }
            return;
        }
        let (c, n) = cols[j];
        for v in column_choices(rows, res, c, n, false) {
            let next: Vec<u32> = res.iter().zip(&v).map(|(r, x)| r - x * n).collect();
            acc.push(v);
            go(j + 1, &next, rows, cols, acc, out);
            acc.pop();
        }
    }
    let res: Vec<u32> = rows.iter().map(|(_, m)| *m).collect();
    go(0, &res, &rows, &cols, &mut Vec::new(), &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> SplittingType {
        s.parse().unwrap()
    }

    #[test]
    fn known_counts() {
        assert_eq!(count_arrangements(&t("1 1 1"), &t("2 1"), false).unwrap(), BigInt::from(3));
        assert_eq!(count_arrangements(&t("1^3 1"), &t("1 1 1 1"), false).unwrap(), BigInt::from(4));
        assert_eq!(count_arrangements(&t("1^2"), &t("2"), true).unwrap(), BigInt::from(0));
        assert_eq!(count_arrangements(&t("1^2"), &t("2"), false).unwrap(), BigInt::from(1));
        assert!(count_arrangements(&t("1"), &t("2"), false).is_err());
    }

    #[test]
    fn enumeration() {
        let a = enumerate_arrangements(&t("1 1"), &t("2")).unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(a[0].matrix, vec![vec![1], vec![1]]);
        assert_eq!(enumerate_arrangements(&t("2"), &t("2")).unwrap().len(), 1);
        let selfs = enumerate_arrangements(&t("1 1 2"), &t("1 1 2")).unwrap();
        assert_eq!(selfs.len(), 2);
        assert!(selfs.iter().all(|x| x.is_valid()));
        assert!(a[0].render().contains("lambda block 2^1"));
    }
}
