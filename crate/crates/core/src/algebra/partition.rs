use std::fmt;

use serde::{Deserialize, Serialize};

/// Integer partition: parts sorted non-increasing. The empty partition
/// (of 0) is allowed; it is the unit for [`Partition::union`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from parts in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of all parts.
    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Multiplicity of `i` as a part.
    pub fn multiplicity(&self, i: u32) -> u32 {
        self.0.iter().filter(|&&p| p == i).count() as u32
    }

    /// Multiset union of two partitions.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::new(parts)
    }

    /// Adds one part (used when a dynamic program closes a component).
    pub fn push_part(&self, part: u32) -> Partition {
        assert!(part > 0);
        let mut parts = self.0.clone();
        parts.push(part);
        Partition::new(parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// All partitions of `n` in reverse lexicographic order:
/// `(n)` first, `(1,…,1)` last.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        let mut part = remaining.min(max_part);
        while part >= 1 {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
            part -= 1;
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// Binomial coefficient with the combinatorial convention: 0 whenever
/// `k < 0`, `n < 0`, or `k > n`. Panics on 64-bit overflow.
pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as i128).expect("overflow in binomial");
        acc /= (i + 1) as i128;
    }
    i64::try_from(acc).expect("binomial exceeds 64 bits")
}

/// Factorial as `i64`; panics past 20!.
pub fn factorial(n: u32) -> i64 {
    (1..=n as i64).try_fold(1i64, |acc, i| acc.checked_mul(i)).expect("factorial exceeds 64 bits")
}

/// Product over part values `i` of `C(m_i(lambda), m_i(mu))`.
///
/// This is the multiset analogue of a binomial coefficient: the number of
/// ways to choose a sub-multiset of shape `mu` from the parts of `lambda`.
pub fn multiset_binomial(lambda: &Partition, mu: &Partition) -> i64 {
    let mut acc: i64 = 1;
    let mut values: Vec<u32> = lambda.parts().to_vec();
    values.extend_from_slice(mu.parts());
    values.sort_unstable();
    values.dedup();
    for i in values {
        let c = binom(lambda.multiplicity(i) as i64, mu.multiplicity(i) as i64);
        acc = acc.checked_mul(c).expect("overflow in multiset binomial");
        if acc == 0 {
            return 0;
        }
    }
    acc
}
