//! Integer partitions and the combinatorics built on them: conjugation,
//! containment, border strips, hook-set membership, standard tableau counts
//! and symmetric group characters by the Murnaghan–Nakayama rule.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{LazyLock, Mutex};

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The canonical order (used by every map keyed on partitions) sorts by
/// size first and then lexicographically decreasing, so the partitions of
/// 3 come out as `(3), (2,1), (1,1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    /// Builds a partition from arbitrary positive parts, sorting them into
    /// weakly decreasing order. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition {
                token: join(&parts),
                reason: "parts must be positive".into(),
            });
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self::from_sorted(parts))
    }

    /// Trailing zeros are dropped; the input must already be weakly decreasing.
    fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The hook shape `(a, 1^b)`; `a` must be positive.
    pub fn hook(a: usize, b: usize) -> Self {
        assert!(a >= 1, "hook arm must be positive");
        let mut parts = vec![a];
        parts.extend(std::iter::repeat_n(1, b));
        Self::from_sorted(parts)
    }

    /// The single-row partition `(n)`, empty when `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::from_sorted(vec![n])
    }

    /// The single-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self::from_sorted(vec![1; n])
    }

    /// `(m, m-1, ..., 1)`.
    pub fn staircase(m: usize) -> Self {
        Self::from_sorted((1..=m).rev().collect())
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (zero-based), reading missing parts as 0.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of rows minus one; `ht((a,1^b)) = b`. The empty partition has
    /// height 0.
    pub fn height(&self) -> usize {
        self.len().saturating_sub(1)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Self::from_sorted(parts)
    }

    /// True iff the diagram of `mu` fits inside the diagram of `self`.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.parts.iter().zip(&self.parts).all(|(m, l)| m <= l)
    }

    /// Multiset union of parts, i.e. the partition indexing `p_self * p_other`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    /// Removes one occurrence of `part`, if present.
    pub fn remove_part(&self, part: usize) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == part)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Self::from_sorted(parts))
    }

    /// Multiplicity of each part value, indexed by the value.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// The comma-separated text form, e.g. `5,4,2,2,1,1`; empty for `()`.
    pub fn text(&self) -> String {
        join(&self.parts)
    }

    /// True iff `(i, j)` (zero-based row, column) is a cell of the diagram.
    pub fn has_cell(&self, i: usize, j: usize) -> bool {
        j < self.part(i)
    }
}

fn join(parts: &[usize]) -> String {
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.text())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{}", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let p: usize = tok.parse().map_err(|_| Error::InvalidPartition {
                token: tok.to_string(),
                reason: "expected a positive integer".into(),
            })?;
            if p == 0 {
                return Err(Error::InvalidPartition {
                    token: tok.to_string(),
                    reason: "parts must be positive".into(),
                });
            }
            parts.push(p);
        }
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Convenience for literals in tests and examples: `p(&[2, 1])`.
///
/// Panics on zero parts.
pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition literal")
}

/// A skew diagram `outer / inner`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// `(λ/μ)' = λ'/μ'`.
    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    /// True iff `(i, j)` lies in the skew diagram.
    pub fn has_cell(&self, i: usize, j: usize) -> bool {
        self.outer.has_cell(i, j) && !self.inner.has_cell(i, j)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.outer.len())
            .flat_map(|i| (self.inner.part(i)..self.outer.part(i)).map(move |j| (i, j)))
            .collect()
    }
}

impl From<Partition> for SkewShape {
    fn from(p: Partition) -> Self {
        SkewShape::straight(p)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_straight() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// The result of peeling one border strip off a partition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StripRemoval {
    pub remainder: Partition,
    /// Rows spanned by the strip, minus one.
    pub height: usize,
}

/// `z_λ = ∏ i^{m_i} m_i!`.
pub fn z_aut(lambda: &Partition) -> BigUint {
    let mut z = BigUint::one();
    for (i, &m) in lambda.multiplicities().iter().enumerate().skip(1) {
        for k in 1..=m {
            z *= BigUint::from(i) * BigUint::from(k);
        }
    }
    z
}

/// All partitions of `n` in lexicographically decreasing order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    out
}

fn fill(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition::from_sorted(cur.clone()));
        return;
    }
    for part in (1..=max.min(rest)).rev() {
        cur.push(part);
        fill(rest - part, part, cur, out);
        cur.pop();
    }
}

/// Partitions of `n` satisfying `filter`, in the same order as [`partitions_of`].
pub fn partitions_where(n: usize, filter: impl Fn(&Partition) -> bool) -> Vec<Partition> {
    partitions_of(n).into_iter().filter(|p| filter(p)).collect()
}

/// Every partition of size at most `n`, in canonical order.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

pub fn is_odd(lambda: &Partition) -> bool {
    lambda.parts().iter().all(|p| p % 2 == 1)
}

pub fn is_staircase(lambda: &Partition) -> bool {
    let m = lambda.len();
    lambda.parts().iter().enumerate().all(|(i, &p)| p == m - i)
}

/// Membership in `H(k, ℓ)`: at most `k` parts exceed `ℓ`.
pub fn in_hook(lambda: &Partition, k: usize, l: usize) -> bool {
    lambda.parts().iter().filter(|&&p| p > l).count() <= k
}

/// All border strips of size `r` that can be removed from `lambda`, ordered
/// by the row in which the strip starts (top first).
pub fn strip_removals(lambda: &Partition, r: usize) -> Vec<StripRemoval> {
    assert!(r >= 1, "strip size must be positive");
    let m = lambda.len();
    // first-column hook lengths, strictly decreasing
    let beta: Vec<usize> = (0..m).map(|i| lambda.part(i) + m - 1 - i).collect();
    let occupied: BTreeSet<usize> = beta.iter().copied().collect();
    let mut out = Vec::new();
    for &b in &beta {
        if b < r || occupied.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let height = occupied.range(target + 1..b).count();
        let mut moved: Vec<usize> = beta
            .iter()
            .map(|&x| if x == b { target } else { x })
            .collect();
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (m - 1 - i))
            .collect();
        out.push(StripRemoval {
            remainder: Partition::from_sorted(parts),
            height,
        });
    }
    out
}

/// Hook lengths of every cell, row-major.
pub fn hook_lengths(lambda: &Partition) -> Vec<usize> {
    let conj = lambda.conjugate();
    let mut out = Vec::with_capacity(lambda.size());
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            out.push(row - j + conj.part(j) - i - 1);
        }
    }
    out
}

/// `f^λ`, the number of standard Young tableaux, by the hook-length formula.
pub fn num_syt(lambda: &Partition) -> BigUint {
    let mut num = BigUint::one();
    for k in 2..=lambda.size() {
        num *= BigUint::from(k);
    }
    let den = hook_lengths(lambda)
        .into_iter()
        .fold(BigUint::one(), |acc, h| acc * BigUint::from(h));
    num / den
}

static CHARACTERS: LazyLock<Mutex<HashMap<(Partition, Partition), i64>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// The irreducible character `χ^λ` evaluated on the class of cycle type `ρ`.
pub fn character(lambda: &Partition, rho: &Partition) -> Result<i64> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch {
            lambda: lambda.clone(),
            rho: rho.clone(),
        });
    }
    Ok(character_memo(lambda, rho))
}

fn character_memo(lambda: &Partition, rho: &Partition) -> i64 {
    if rho.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), rho.clone());
    if let Some(&v) = CHARACTERS.lock().unwrap().get(&key) {
        return v;
    }
    let first = rho.part(0);
    let rest = Partition::from_sorted(rho.parts()[1..].to_vec());
    let value = strip_removals(lambda, first)
        .into_iter()
        .map(|s| {
            let sign = if s.height % 2 == 0 { 1 } else { -1 };
            sign * character_memo(&s.remainder, &rest)
        })
        .sum();
    CHARACTERS.lock().unwrap().insert(key, value);
    value
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 1]).conjugate(), p(&[2, 1, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[5, 4, 2, 2, 1, 1]).conjugate(), p(&[6, 4, 2, 2, 1]));
    }

    #[test]
    fn constructor_sorts_and_rejects_zero() {
        assert_eq!(p(&[1, 3, 2]).parts(), &[3, 2, 1]);
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(p(&[3, 2]).size(), 5);
    }

    #[test]
    fn containment() {
        assert!(p(&[3, 2, 1]).contains(&p(&[2, 1])));
        assert!(!p(&[2, 2]).contains(&p(&[3])));
        assert!(p(&[2, 2]).contains(&Partition::empty()));
        assert!(!p(&[2]).contains(&p(&[1, 1])));
    }

    #[test]
    fn z_values() {
        assert_eq!(z_aut(&p(&[1, 1, 1])), BigUint::from(6u32));
        assert_eq!(z_aut(&p(&[2, 1])), BigUint::from(2u32));
        assert_eq!(z_aut(&p(&[3])), BigUint::from(3u32));
        assert_eq!(z_aut(&Partition::empty()), BigUint::one());
    }

    #[test]
    fn enumeration() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(4).len(), 5);
        let odd = partitions_where(5, is_odd);
        assert_eq!(odd, vec![p(&[5]), p(&[3, 1, 1]), p(&[1, 1, 1, 1, 1])]);
        // lexicographically decreasing, which is also the canonical order
        let all = partitions_of(6);
        assert!(all.windows(2).all(|w| w[0] < w[1] && w[0].parts() > w[1].parts()));
    }

    #[test]
    fn enumeration_matches_brute_force_counts() {
        // count multisets of parts by a coin-change recurrence
        fn count(n: usize) -> usize {
            let mut ways = vec![0usize; n + 1];
            ways[0] = 1;
            for part in 1..=n {
                for s in part..=n {
                    ways[s] += ways[s - part];
                }
            }
            ways[n]
        }
        for n in 0..=15 {
            assert_eq!(partitions_of(n).len(), count(n), "n = {n}");
        }
    }

    #[test]
    fn predicates() {
        assert!(is_odd(&p(&[3, 1, 1])));
        assert!(!is_odd(&p(&[2, 1])));
        assert!(is_odd(&Partition::empty()));
        assert!(is_staircase(&p(&[3, 2, 1])));
        assert!(is_staircase(&p(&[1])));
        assert!(is_staircase(&Partition::empty()));
        assert!(!is_staircase(&p(&[2, 2])));
        assert!(!is_staircase(&p(&[3, 1])));
        assert!(in_hook(&p(&[5, 4, 2, 2, 1, 1]), 2, 3));
        assert!(!in_hook(&p(&[2, 2]), 1, 1));
        assert!(in_hook(&p(&[9, 9, 9]), 3, 0));
    }

    #[test]
    fn strips() {
        assert_eq!(
            strip_removals(&p(&[2, 1]), 3),
            vec![StripRemoval { remainder: Partition::empty(), height: 1 }]
        );
        assert_eq!(
            strip_removals(&p(&[2, 2]), 3),
            vec![StripRemoval { remainder: p(&[1]), height: 1 }]
        );
        for n in 1..=6 {
            assert_eq!(
                strip_removals(&Partition::row(n), n),
                vec![StripRemoval { remainder: Partition::empty(), height: 0 }]
            );
            assert_eq!(
                strip_removals(&Partition::column(n), n),
                vec![StripRemoval { remainder: Partition::empty(), height: n - 1 }]
            );
        }
        assert_eq!(strip_removals(&p(&[2, 2]), 2).len(), 2);
        assert!(strip_removals(&p(&[1]), 2).is_empty());
    }

    /// Brute-force strip removal: every sub-partition whose complement is a
    /// connected skew shape without a 2x2 block.
    fn strips_brute(lambda: &Partition, r: usize) -> Vec<(Partition, usize)> {
        let mut out = Vec::new();
        if lambda.size() < r {
            return out;
        }
        for mu in partitions_of(lambda.size() - r) {
            if !lambda.contains(&mu) {
                continue;
            }
            let shape = SkewShape::new(lambda.clone(), mu.clone()).unwrap();
            let cells = shape.cells();
            let has_block = cells.iter().any(|&(i, j)| {
                shape.has_cell(i + 1, j) && shape.has_cell(i, j + 1) && shape.has_cell(i + 1, j + 1)
            });
            if has_block {
                continue;
            }
            // connectivity by flood fill
            let mut seen = vec![cells[0]];
            let mut stack = vec![cells[0]];
            while let Some((i, j)) = stack.pop() {
                let nbrs = [
                    (i.wrapping_sub(1), j),
                    (i + 1, j),
                    (i, j.wrapping_sub(1)),
                    (i, j + 1),
                ];
                for c in nbrs {
                    if cells.contains(&c) && !seen.contains(&c) {
                        seen.push(c);
                        stack.push(c);
                    }
                }
            }
            if seen.len() != cells.len() {
                continue;
            }
            let rows: BTreeSet<usize> = cells.iter().map(|c| c.0).collect();
            out.push((mu, rows.len() - 1));
        }
        out
    }

    #[test]
    fn strip_removals_match_brute_force() {
        for n in 1..=8 {
            for lambda in partitions_of(n) {
                for r in 1..=n {
                    let mut fast: Vec<_> = strip_removals(&lambda, r)
                        .into_iter()
                        .map(|s| (s.remainder, s.height))
                        .collect();
                    let mut slow = strips_brute(&lambda, r);
                    fast.sort();
                    slow.sort();
                    assert_eq!(fast, slow, "{lambda} r={r}");
                }
            }
        }
    }

    #[test]
    fn syt_counts() {
        assert_eq!(num_syt(&p(&[5])), BigUint::one());
        assert_eq!(num_syt(&p(&[2, 1])), BigUint::from(2u32));
        assert_eq!(num_syt(&p(&[2, 2])), BigUint::from(2u32));
        assert_eq!(num_syt(&Partition::empty()), BigUint::one());
    }

    /// Counts standard tableaux by removing the cell holding the largest entry.
    fn syt_brute(lambda: &Partition) -> u64 {
        if lambda.is_empty() {
            return 1;
        }
        let mut total = 0;
        for i in 0..lambda.len() {
            if lambda.part(i) > lambda.part(i + 1) {
                let mut parts = lambda.parts().to_vec();
                parts[i] -= 1;
                total += syt_brute(&Partition::from_sorted(parts));
            }
        }
        total
    }

    #[test]
    fn syt_matches_brute_force_and_sum_of_squares() {
        for n in 0..=8 {
            let mut squares = BigUint::from(0u32);
            for lambda in partitions_of(n) {
                let f = num_syt(&lambda);
                assert_eq!(f, BigUint::from(syt_brute(&lambda)));
                squares += &f * &f;
            }
            let fact = (1..=n).fold(BigUint::one(), |a, k| a * BigUint::from(k));
            assert_eq!(squares, fact);
        }
    }

    #[test]
    fn character_examples() {
        let l = p(&[2, 1]);
        let vals: Vec<i64> = [p(&[1, 1, 1]), p(&[2, 1]), p(&[3])]
            .iter()
            .map(|rho| character(&l, rho).unwrap())
            .collect();
        assert_eq!(vals, vec![2, 0, -1]);
        for rho in partitions_of(5) {
            assert_eq!(character(&p(&[5]), &rho).unwrap(), 1);
        }
        assert_eq!(character(&Partition::empty(), &Partition::empty()).unwrap(), 1);
        assert!(matches!(
            character(&p(&[2]), &p(&[1])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn character_properties() {
        for n in 0..=8 {
            let parts = partitions_of(n);
            for lambda in &parts {
                let f = character(lambda, &Partition::column(n)).unwrap();
                assert_eq!(BigUint::from(f as u64), num_syt(lambda));
                let conj = lambda.conjugate();
                for rho in &parts {
                    let sign = if (n - rho.len()) % 2 == 0 { 1 } else { -1 };
                    assert_eq!(
                        character(&conj, rho).unwrap(),
                        sign * character(lambda, rho).unwrap()
                    );
                }
            }
            // column orthogonality: sum_λ χ^λ(ρ)^2 = z_ρ
            for rho in &parts {
                let s: i64 = parts.iter().map(|l| character(l, rho).unwrap().pow(2)).sum();
                assert_eq!(BigUint::from(s as u64), z_aut(rho));
            }
        }
    }

    #[test]
    fn text_and_json() {
        assert_eq!("5,4,2,2,1,1".parse::<Partition>().unwrap(), p(&[5, 4, 2, 2, 1, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!(matches!(
            "3,x".parse::<Partition>(),
            Err(Error::InvalidPartition { token, .. }) if token == "x"
        ));
        assert!("2,0".parse::<Partition>().is_err());
        assert_eq!(serde_json::to_string(&p(&[2, 1])).unwrap(), "[2,1]");
        assert_eq!(serde_json::from_str::<Partition>("[2,1]").unwrap(), p(&[2, 1]));
        assert!(serde_json::from_str::<Partition>("[2,0]").is_err());
    }

    #[test]
    fn skew_shapes() {
        assert!(SkewShape::new(p(&[2]), p(&[1, 1])).is_err());
        let s = SkewShape::new(p(&[3, 2]), p(&[1])).unwrap();
        assert_eq!(s.size(), 4);
        assert_eq!(s.cells(), vec![(0, 1), (0, 2), (1, 0), (1, 1)]);
        assert_eq!(s.conjugate().outer(), &p(&[2, 2, 1]));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn partition() -> impl Strategy<Value = Partition> {
            (0usize..=12)
                .prop_flat_map(|n| {
                    let all = partitions_of(n);
                    (0..all.len()).prop_map(move |i| all[i].clone())
                })
        }

        proptest! {
            #[test]
            fn conjugation_is_an_involution(l in partition()) {
                prop_assert_eq!(l.conjugate().conjugate(), l.clone());
                prop_assert_eq!(l.conjugate().size(), l.size());
            }

            #[test]
            fn hook_membership_is_conjugation_symmetric(l in partition(), k in 0usize..4, m in 0usize..4) {
                prop_assert_eq!(in_hook(&l, k, m), in_hook(&l.conjugate(), m, k));
            }

            #[test]
            fn strips_shrink_by_r(l in partition(), r in 1usize..6) {
                for s in strip_removals(&l, r) {
                    prop_assert_eq!(l.size() - s.remainder.size(), r);
                    prop_assert!(l.contains(&s.remainder));
                }
            }
        }
    }
}
