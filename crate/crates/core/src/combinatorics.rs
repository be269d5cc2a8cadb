//! Compositions of `N` indexing standard parabolics of `GL_N` and `Sp_N`,
//! refinement, and consecutive-interval bookkeeping. Indices are 1-based.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use serde_with::{DeserializeFromStr, SerializeDisplay};

use crate::error::{domain, Error, Result};

/// Closed integer interval `[lo, hi]`; empty when `hi = lo - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntegerInterval {
    pub lo: i64,
    pub hi: i64,
}

impl IntegerInterval {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi + 1 {
            return domain(format!("interval [{lo},{hi}] has lo > hi + 1"));
        }
        Ok(Self { lo, hi })
    }

    /// `[start, start + len - 1]`.
    pub fn with_len(start: i64, len: usize) -> Self {
        Self { lo: start, hi: start + len as i64 - 1 }
    }

    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.hi < self.lo
    }

    pub fn contains(&self, i: i64) -> bool {
        self.lo <= i && i <= self.hi
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

impl fmt::Display for IntegerInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// Ordered tuple of positive integers. Zero entries are dropped on construction,
/// so `(1,2,0,3)` and `(1,2,3)` are the same value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, SerializeDisplay, DeserializeFromStr)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: impl IntoIterator<Item = usize>) -> Self {
        Self { parts: parts.into_iter().filter(|&p| p > 0).collect() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `(ν_0, ν_1, …, ν_k)` with `ν_0 = 0`.
    pub fn partial_sums(&self) -> Vec<usize> {
        partial_sums(&self.parts)
    }

    /// The blocks `[ν_{j-1}+1, ν_j]`.
    pub fn blocks(&self) -> Vec<IntegerInterval> {
        consecutive_blocks(1, &self.parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        Ok(Self::new(parse_parts(s)?))
    }
}

/// `(n_1,…,n_k; r)` indexing the standard parabolic of `Sp_N` with Levi
/// `GL_{n_1} × ⋯ × GL_{n_k} × Sp_r`. Zero `n_i` are dropped, `r` is kept even when 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, SerializeDisplay, DeserializeFromStr)]
pub struct SpComposition {
    parts: Vec<usize>,
    rank: usize,
}

impl SpComposition {
    pub fn new(parts: impl IntoIterator<Item = usize>, rank: usize) -> Self {
        Self { parts: parts.into_iter().filter(|&p| p > 0).collect(), rank }
    }

    /// `(;N)`, the group itself.
    pub fn full(n: usize) -> Self {
        Self::new([], n)
    }

    /// `(1^N;0)`, the Borel.
    pub fn borel(n: usize) -> Self {
        Self::new(std::iter::repeat_n(1, n), 0)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn anisotropic_rank(&self) -> usize {
        self.rank
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum::<usize>() + self.rank
    }

    pub fn is_full(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn partial_sums(&self) -> Vec<usize> {
        partial_sums(&self.parts)
    }

    pub fn gl_blocks(&self) -> Vec<IntegerInterval> {
        consecutive_blocks(1, &self.parts)
    }

    /// The last `r` coordinates `[N-r+1, N]`.
    pub fn sp_block(&self) -> IntegerInterval {
        IntegerInterval::with_len((self.total() - self.rank) as i64 + 1, self.rank)
    }

    /// `α_P = (n_1,…,n_k,r) ∈ 𝒞_N`, used by the tables.
    pub fn as_gl_composition(&self) -> Composition {
        Composition::new(self.parts.iter().copied().chain([self.rank]))
    }
}

impl fmt::Display for SpComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{})", self.parts.iter().join(","), self.rank)
    }
}

impl FromStr for SpComposition {
    type Err = Error;

    /// Accepts `"n1,…,nk;r"`, optionally parenthesised; `";N"` is the group itself.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (parts, rank) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("missing ';' in Sp composition {s:?}")))?;
        let rank = rank
            .trim()
            .parse::<usize>()
            .map_err(|e| Error::Parse(format!("anisotropic rank {rank:?}: {e}")))?;
        Ok(Self::new(parse_parts(parts)?, rank))
    }
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| Error::Parse(format!("part {p:?}: {e}"))))
        .collect()
}

fn partial_sums(parts: &[usize]) -> Vec<usize> {
    std::iter::once(0)
        .chain(parts.iter().scan(0, |acc, &p| {
            *acc += p;
            Some(*acc)
        }))
        .collect()
}

pub(crate) fn consecutive_blocks(start: i64, sizes: &[usize]) -> Vec<IntegerInterval> {
    let mut lo = start;
    sizes
        .iter()
        .map(|&s| {
            let iv = IntegerInterval::with_len(lo, s);
            lo += s as i64;
            iv
        })
        .collect()
}

/// All compositions of `n` (possibly `n = 0`, giving the empty composition).
fn compositions_unchecked(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::new([])];
    }
    // Each subset of the n-1 gaps is a set of cut points.
    let mut out: Vec<Composition> = (0u64..1 << (n - 1))
        .map(|cuts| {
            let mut parts = Vec::new();
            let mut len = 1;
            for gap in 0..n - 1 {
                if cuts >> gap & 1 == 1 {
                    parts.push(len);
                    len = 1;
                } else {
                    len += 1;
                }
            }
            parts.push(len);
            Composition::new(parts)
        })
        .collect();
    out.sort();
    out
}

/// All `2^(N-1)` compositions of `N` in lexicographic order.
pub fn compositions_of(n: usize) -> Result<Vec<Composition>> {
    if n == 0 {
        return Err(Error::EmptyDomain("compositions of 0".into()));
    }
    Ok(compositions_unchecked(n))
}

fn sp_compositions_unchecked(n: usize) -> Vec<SpComposition> {
    let mut out: Vec<SpComposition> = (0..=n)
        .flat_map(|r| {
            compositions_unchecked(n - r)
                .into_iter()
                .map(move |c| SpComposition::new(c.parts, r))
        })
        .collect();
    out.sort_by(|a, b| (a.k(), &a.parts).cmp(&(b.k(), &b.parts)));
    out
}

/// All `(n_1,…,n_k; r)` with total `N`, ordered by `k` and then by the parts
/// lexicographically; `(;N)` comes first.
pub fn sp_compositions_of(n: usize) -> Result<Vec<SpComposition>> {
    if n == 0 {
        return Err(Error::EmptyDomain("Sp compositions of 0".into()));
    }
    Ok(sp_compositions_unchecked(n))
}

/// `β` refines `α` when the cut points of `α` are among those of `β`.
pub fn refines(beta: &Composition, alpha: &Composition) -> Result<bool> {
    if beta.total() != alpha.total() {
        return domain(format!("refines: totals differ ({} vs {})", beta.total(), alpha.total()));
    }
    let cuts = beta.partial_sums();
    Ok(alpha.partial_sums().iter().all(|c| cuts.contains(c)))
}

/// `β = (β_1,…,β_k, γ)` with `β_i ∈ 𝒞_{n_i}` and `γ ∈ 𝒞_r^{Sp}`.
pub fn sp_refines(beta: &SpComposition, alpha: &SpComposition) -> Result<bool> {
    if beta.total() != alpha.total() {
        return domain(format!("refines: totals differ ({} vs {})", beta.total(), alpha.total()));
    }
    if beta.rank > alpha.rank {
        return Ok(false);
    }
    let cuts = beta.partial_sums();
    Ok(alpha.partial_sums().iter().all(|c| cuts.contains(c)))
}

/// Splits `I` into consecutive intervals of sizes `β_1, β_2, …`.
pub fn consecutive_intervals(interval: IntegerInterval, beta: &Composition) -> Result<Vec<IntegerInterval>> {
    if interval.len() != beta.total() {
        return domain(format!(
            "interval {interval} has {} elements, composition {beta} has total {}",
            interval.len(),
            beta.total()
        ));
    }
    Ok(consecutive_blocks(interval.lo, beta.parts()))
}

/// Same as [`consecutive_intervals`] but for a raw size list that may contain zeros
/// (tables have zero entries); zero sizes give empty intervals.
pub fn consecutive_intervals_raw(start: i64, sizes: &[usize]) -> Vec<IntegerInterval> {
    consecutive_blocks(start, sizes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_examples() {
        assert_eq!(compositions_of(1).unwrap(), vec![Composition::new([1])]);
        let c3: Vec<String> = compositions_of(3).unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(c3, ["(1,1,1)", "(1,2)", "(2,1)", "(3)"]);
        assert_eq!(compositions_of(5).unwrap().len(), 16);
        assert!(matches!(compositions_of(0), Err(Error::EmptyDomain(_))));
        assert_eq!(Composition::new([1, 2, 0, 3]), Composition::new([1, 2, 3]));
    }

    #[test]
    fn sp_composition_examples() {
        let s1: Vec<String> = sp_compositions_of(1).unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(s1, ["(;1)", "(1;0)"]);
        let s2: Vec<String> = sp_compositions_of(2).unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(s2, ["(;2)", "(1;1)", "(2;0)", "(1,1;0)"]);
        assert_eq!(sp_compositions_of(3).unwrap().len(), 8);
        assert_ne!(SpComposition::new([1, 2, 3], 0), SpComposition::new([1, 2], 3));
    }

    #[test]
    fn parse_round_trip() {
        let a: SpComposition = "1,2;3".parse().unwrap();
        assert_eq!(a, SpComposition::new([1, 2], 3));
        assert_eq!(";4".parse::<SpComposition>().unwrap(), SpComposition::full(4));
        assert_eq!("(2,1;0)".parse::<SpComposition>().unwrap().to_string(), "(2,1;0)");
        assert!("1,2".parse::<SpComposition>().is_err());
        assert!("1,x;0".parse::<SpComposition>().is_err());
        assert_eq!("2,1".parse::<Composition>().unwrap(), Composition::new([2, 1]));
    }

    #[test]
    fn refinement_examples() {
        let b = SpComposition::new([1, 1, 2], 0);
        let a = SpComposition::new([2, 2], 0);
        assert!(sp_refines(&b, &a).unwrap());
        assert!(sp_refines(&SpComposition::new([2, 1], 1), &SpComposition::new([2], 2)).unwrap());
        assert!(!refines(&Composition::new([2, 1]), &Composition::new([1, 2])).unwrap());
        assert!(!refines(&Composition::new([2]), &Composition::new([1, 1])).unwrap());
        assert!(refines(&Composition::new([2]), &Composition::new([1])).is_err());
    }

    #[test]
    fn interval_examples() {
        let iv = |a, b| IntegerInterval::new(a, b).unwrap();
        assert_eq!(
            consecutive_intervals(iv(1, 3), &Composition::new([1, 1, 1])).unwrap(),
            vec![iv(1, 1), iv(2, 2), iv(3, 3)]
        );
        assert_eq!(consecutive_intervals(iv(1, 3), &Composition::new([1, 2])).unwrap(), vec![iv(1, 1), iv(2, 3)]);
        assert_eq!(consecutive_intervals(iv(4, 6), &Composition::new([2, 1])).unwrap(), vec![iv(4, 5), iv(6, 6)]);
        assert!(consecutive_intervals(iv(1, 3), &Composition::new([2])).is_err());
        assert!(IntegerInterval::new(3, 1).is_err());
        assert!(IntegerInterval::new(3, 2).unwrap().is_empty());
    }
}
