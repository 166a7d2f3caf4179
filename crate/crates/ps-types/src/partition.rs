use num_bigint::BigInt;
use num_traits::One;
use ps_algebra::arith::factorial;

/// Partition stored by multiplicities: `mult[k - 1]` is the number of parts equal to k.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    mult: Vec<u32>,
}

impl Partition {
    pub fn from_mult(mut mult: Vec<u32>) -> Self {
        while mult.last() == Some(&0) {
            mult.pop();
        }
        Partition { mult }
    }

    pub fn from_parts(parts: &[u32]) -> Self {
        let max = parts.iter().copied().max().unwrap_or(0) as usize;
        let mut mult = vec![0; max];
        for &p in parts {
            assert!(p > 0, "partition parts are positive");
            mult[p as usize - 1] += 1;
        }
        Partition::from_mult(mult)
    }

    /// n_k.
    pub fn count(&self, k: u32) -> u32 {
        if k == 0 {
            return 0;
        }
        self.mult.get(k as usize - 1).copied().unwrap_or(0)
    }

    pub fn mult(&self) -> &[u32] {
        &self.mult
    }

    pub fn degree(&self) -> u32 {
        self.mult.iter().enumerate().map(|(i, n)| (i as u32 + 1) * n).sum()
    }

    pub fn length(&self) -> u32 {
        self.mult.iter().sum()
    }

    /// Parts in decreasing order.
    pub fn parts(&self) -> Vec<u32> {
        let mut v = Vec::new();
        for (i, n) in self.mult.iter().enumerate().rev() {
            v.extend(std::iter::repeat(i as u32 + 1).take(*n as usize));
        }
        v
    }

    /// z_λ = ∏ k^{n_k} n_k!, the centralizer order of the cycle type λ.
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (i, n) in self.mult.iter().enumerate() {
            acc *= num_traits::pow(BigInt::from(i + 1), *n as usize) * factorial(*n as u64);
        }
        acc
    }

    /// ∏ n_k!.
    pub fn mult_factorials(&self) -> BigInt {
        self.mult.iter().map(|n| factorial(*n as u64)).product()
    }
}

/// All partitions of n, largest parts first.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::from_parts(cur));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of partitions of n into at most k parts.
pub fn count_partitions_at_most(n: u32, k: u32) -> BigInt {
    // p(n, k) = p(n, k-1) + p(n-k, k)
    let (n, k) = (n as usize, k as usize);
    let mut t = vec![vec![BigInt::from(0); k + 1]; n + 1];
    for j in 0..=k {
        t[0][j] = BigInt::one();
    }
    for i in 1..=n {
        for j in 1..=k {
            let mut v = t[i][j - 1].clone();
            if i >= j {
                v += &t[i - j][j];
            }
            t[i][j] = v;
        }
    }
    t[n][k].clone()
}
