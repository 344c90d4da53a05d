use std::fmt;

use serde::{Deserialize, Serialize};

/// Integer composition: an ordered sequence of positive parts.
///
/// Unlike [`super::Partition`], order matters; `(1,2)` and `(2,1)` are
/// distinct. The empty composition is not representable: constructors
/// reject empty part lists.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(!parts.is_empty(), "composition must have at least one part");
        assert!(parts.iter().all(|&p| p > 0), "composition parts must be positive");
        Composition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Sum of all parts.
    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Parses "1,2,3" (surrounding whitespace tolerated).
    pub fn parse(s: &str) -> Result<Self, String> {
        let parts: Result<Vec<u32>, _> = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|e| format!("bad part {t:?}: {e}")))
            .collect();
        let parts = parts?;
        if parts.is_empty() || parts.iter().any(|&p| p == 0) {
            return Err("composition needs at least one positive part".into());
        }
        Ok(Composition(parts))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// All coarsenings of `alpha`: compositions obtained by summing maximal
/// runs of adjacent parts. There are exactly `2^(len-1)` of them; `alpha`
/// itself (all cuts kept) and `(sum)` (no cuts) are always included.
pub fn coarsenings(alpha: &Composition) -> impl Iterator<Item = Composition> + '_ {
    let cuts = alpha.len() - 1;
    (0u64..(1u64 << cuts)).map(move |mask| {
        let mut parts = Vec::new();
        let mut acc = 0u32;
        for (i, &p) in alpha.parts().iter().enumerate() {
            acc += p;
            let keep_cut = i < cuts && mask >> i & 1 == 1;
            if keep_cut || i == cuts {
                parts.push(acc);
                acc = 0;
            }
        }
        Composition::new(parts)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn coarsenings_of_unit_cubed() {
        let alpha = Composition::new(vec![1, 1, 1]);
        let got: BTreeSet<Composition> = coarsenings(&alpha).collect();
        let want: BTreeSet<Composition> = [vec![1, 1, 1], vec![2, 1], vec![1, 2], vec![3]]
            .into_iter()
            .map(Composition::new)
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn coarsening_count_is_two_to_len_minus_one() {
        for len in 1..=10usize {
            let alpha = Composition::new(vec![1; len]);
            assert_eq!(coarsenings(&alpha).count(), 1 << (len - 1));
        }
        // and every coarsening preserves the total
        let alpha = Composition::new(vec![3, 1, 4, 1, 5]);
        for gamma in coarsenings(&alpha) {
            assert_eq!(gamma.sum(), alpha.sum());
        }
    }

    #[test]
    fn parse_round_trip() {
        let c = Composition::parse("1, 2,1,3,2").unwrap();
        assert_eq!(c, Composition::new(vec![1, 2, 1, 3, 2]));
        assert!(Composition::parse("1,0,2").is_err());
        assert!(Composition::parse("").is_err());
    }
}
