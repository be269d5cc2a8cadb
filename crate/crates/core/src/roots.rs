//! `𝔞₀* ≅ ℚ^N` with the type C (and type A) root data, ρ-vectors,
//! projections onto Levi blocks, coweights and the negativity test.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use itertools::Itertools;
use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{consecutive_blocks, Composition, IntegerInterval, SpComposition};
use crate::error::{domain, Error, Result};

pub type Rat = Rational64;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(n)
}

pub(crate) fn fmt_rat(q: &Rat) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Which root inventory is in use: `Gl` has only `e_i - e_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Gl,
    Sp,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::Gl => "gl",
            GroupKind::Sp => "sp",
        })
    }
}

/// A root as an integer coordinate vector, e.g. `e_1 + e_3 = [1,0,1]`.
pub type Root = Vec<i64>;

/// Roots are positive iff their first nonzero coordinate is positive.
pub fn is_positive(root: &[i64]) -> bool {
    root.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
}

fn unit(n: usize, i: usize, c: i64) -> Root {
    let mut v = vec![0; n];
    v[i] += c;
    v
}

fn pair(n: usize, i: usize, ci: i64, j: usize, cj: i64) -> Root {
    let mut v = vec![0; n];
    v[i] += ci;
    v[j] += cj;
    v
}

/// `e_i - e_j` (and for `Sp` also `e_i + e_j`, `2e_i`), `i < j`, 0-based internally.
pub fn positive_roots(kind: GroupKind, n: usize) -> Vec<Root> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(pair(n, i, 1, j, -1));
            if kind == GroupKind::Sp {
                out.push(pair(n, i, 1, j, 1));
            }
        }
        if kind == GroupKind::Sp {
            out.push(unit(n, i, 2));
        }
    }
    out
}

pub fn all_roots(kind: GroupKind, n: usize) -> Vec<Root> {
    let pos = positive_roots(kind, n);
    let neg: Vec<Root> = pos.iter().map(|r| r.iter().map(|c| -c).collect()).collect();
    pos.into_iter().chain(neg).collect()
}

/// `e_i - e_{i+1}` and, for `Sp`, `2e_N`.
pub fn simple_roots(kind: GroupKind, n: usize) -> Vec<Root> {
    let mut out: Vec<Root> = (0..n.saturating_sub(1)).map(|i| pair(n, i, 1, i + 1, -1)).collect();
    if kind == GroupKind::Sp && n > 0 {
        out.push(unit(n, n - 1, 2));
    }
    out
}

/// Block structure of a standard Levi: GL blocks in order, then (for `Sp`) the
/// anisotropic tail `Sp_r` on the last `r` coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Levi {
    pub kind: GroupKind,
    pub parts: Vec<usize>,
    pub tail: usize,
}

impl Levi {
    pub fn sp(alpha: &SpComposition) -> Self {
        Self { kind: GroupKind::Sp, parts: alpha.parts().to_vec(), tail: alpha.anisotropic_rank() }
    }

    pub fn gl(alpha: &Composition) -> Self {
        Self { kind: GroupKind::Gl, parts: alpha.parts().to_vec(), tail: 0 }
    }

    pub fn rank(&self) -> usize {
        self.parts.iter().sum::<usize>() + self.tail
    }

    pub fn blocks(&self) -> Vec<IntegerInterval> {
        consecutive_blocks(1, &self.parts)
    }

    pub fn tail_block(&self) -> IntegerInterval {
        IntegerInterval::with_len((self.rank() - self.tail) as i64 + 1, self.tail)
    }

    /// For each 0-based coordinate: `Some(block)` for a GL block, `None` in the tail.
    pub fn block_labels(&self) -> Vec<Option<usize>> {
        let mut out = Vec::with_capacity(self.rank());
        for (b, &p) in self.parts.iter().enumerate() {
            out.extend(std::iter::repeat_n(Some(b), p));
        }
        out.extend(std::iter::repeat_n(None, self.tail));
        out
    }

    pub fn contains_root(&self, root: &[i64]) -> bool {
        let labels = self.block_labels();
        let support: Vec<usize> = (0..root.len()).filter(|&i| root[i] != 0).collect();
        match support.as_slice() {
            [i] => labels[*i].is_none(),
            [i, j] => match (labels[*i], labels[*j]) {
                (None, None) => true,
                (Some(a), Some(b)) => a == b && root[*i] == -root[*j],
                _ => false,
            },
            _ => false,
        }
    }

    /// All roots of the Levi, both signs.
    pub fn roots(&self) -> Vec<Root> {
        all_roots(self.kind, self.rank()).into_iter().filter(|r| self.contains_root(r)).collect()
    }

    /// `Δ₀^M`: the simple roots of `G` lying in the Levi.
    pub fn simple_roots(&self) -> Vec<Root> {
        simple_roots(self.kind, self.rank()).into_iter().filter(|r| self.contains_root(r)).collect()
    }

    /// Positive roots of `G` outside the Levi, i.e. the roots of `U_P`.
    pub fn unipotent_roots(&self) -> Vec<Root> {
        positive_roots(self.kind, self.rank()).into_iter().filter(|r| !self.contains_root(r)).collect()
    }

    /// All roots of the standard parabolic `P = M U`.
    pub fn parabolic_roots(&self) -> Vec<Root> {
        all_roots(self.kind, self.rank())
            .into_iter()
            .filter(|r| is_positive(r) || self.contains_root(r))
            .collect()
    }
}

/// Restricted roots in block coordinates, type C: `e_i - e_j`, `e_i + e_j`, `2e_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RestrictedRoot {
    /// `e_i - e_j` (1-based).
    Diff(usize, usize),
    /// `e_i + e_j`, `i < j`.
    Sum(usize, usize),
    /// `2e_i`.
    Long(usize),
}

impl RestrictedRoot {
    /// Positive roots of type `C_n` (or `A_{n-1}` for `Gl`) in block coordinates.
    pub fn positive(kind: GroupKind, n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                out.push(Self::Diff(i, j));
                if kind == GroupKind::Sp {
                    out.push(Self::Sum(i, j));
                }
            }
            if kind == GroupKind::Sp {
                out.push(Self::Long(i));
            }
        }
        out
    }

    pub fn to_vector(&self, n: usize) -> Root {
        match *self {
            Self::Diff(i, j) => pair(n, i - 1, 1, j - 1, -1),
            Self::Sum(i, j) => pair(n, i - 1, 1, j - 1, 1),
            Self::Long(i) => unit(n, i - 1, 2),
        }
    }

    /// Coroot as integer coefficients: `⟨λ,(2e_i)^∨⟩ = λ_i`.
    pub fn coroot(&self, n: usize) -> Root {
        match *self {
            Self::Long(i) => unit(n, i - 1, 1),
            _ => self.to_vector(n),
        }
    }

    pub fn pairing(&self, lambda: &[Rat]) -> Rat {
        self.coroot(lambda.len()).iter().zip(lambda).map(|(&c, x)| x * c).sum()
    }

    /// Recovers the root from a coordinate vector with the stated shapes, sign forgotten.
    pub fn from_vector(v: &[i64]) -> Option<(Self, bool)> {
        let support: Vec<usize> = (0..v.len()).filter(|&i| v[i] != 0).collect();
        let positive = is_positive(v);
        let s = if positive { 1 } else { -1 };
        match support.as_slice() {
            [i] if v[*i].abs() == 2 => Some((Self::Long(i + 1), positive)),
            [i, j] if v[*i] * s == 1 && v[*j] * s == -1 => Some((Self::Diff(i + 1, j + 1), positive)),
            [i, j] if v[*i] * s == 1 && v[*j] * s == 1 => Some((Self::Sum(i + 1, j + 1), positive)),
            _ => None,
        }
    }
}

impl fmt::Display for RestrictedRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Diff(i, j) => write!(f, "e{i}-e{j}"),
            Self::Sum(i, j) => write!(f, "e{i}+e{j}"),
            Self::Long(i) => write!(f, "2e{i}"),
        }
    }
}

/// Exact vector in `ℚ^N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalVector(pub Vec<Rat>);

impl RationalVector {
    pub fn zeros(n: usize) -> Self {
        Self(vec![Rat::zero(); n])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self(v.iter().map(|&x| int(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: Rat) -> Self {
        Self(self.0.iter().map(|x| x * c).collect())
    }

    pub fn dot(&self, other: &Self) -> Rat {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn dot_int(&self, other: &[i64]) -> Rat {
        self.0.iter().zip(other).map(|(a, &b)| a * b).sum()
    }

    pub fn as_strings(&self) -> Vec<String> {
        self.0.iter().map(fmt_rat).collect()
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(fmt_rat).join(", "))
    }
}

impl Serialize for RationalVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.as_strings().serialize(s)
    }
}

impl Add for &RationalVector {
    type Output = RationalVector;
    fn add(self, rhs: Self) -> RationalVector {
        RationalVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RationalVector {
    type Output = RationalVector;
    fn sub(self, rhs: Self) -> RationalVector {
        RationalVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RationalVector {
    type Output = RationalVector;
    fn neg(self) -> RationalVector {
        RationalVector(self.0.iter().map(|a| -a).collect())
    }
}

/// `ρ_P = (x_1^{(n_1)},…,x_k^{(n_k)},0^{(r)})`, `x_j = N + (1-n_j)/2 - Σ_{ℓ<j} n_ℓ`.
pub fn rho_p(alpha: &SpComposition) -> RationalVector {
    let n = alpha.total() as i64;
    let mut out = Vec::with_capacity(alpha.total());
    let mut before = 0i64;
    for &nj in alpha.parts() {
        let x = int(n - before) + rat(1 - nj as i64, 2);
        out.extend(std::iter::repeat_n(x, nj));
        before += nj as i64;
    }
    out.extend(std::iter::repeat_n(Rat::zero(), alpha.anisotropic_rank()));
    RationalVector(out)
}

/// Half the sum of the roots of `U_P`; works for both group kinds.
pub fn rho_half_sum(levi: &Levi) -> RationalVector {
    let n = levi.rank();
    let mut sum = vec![0i64; n];
    for r in levi.unipotent_roots() {
        for (s, c) in sum.iter_mut().zip(&r) {
            *s += c;
        }
    }
    RationalVector(sum.into_iter().map(|s| rat(s, 2)).collect())
}

/// `λ = λ_Q + λ^Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentDecomposition {
    pub lambda_q: RationalVector,
    pub lambda_upper_q: RationalVector,
}

/// Block averages on GL blocks, zero on the anisotropic tail.
pub fn project_levi(lambda: &RationalVector, levi: &Levi) -> Result<ExponentDecomposition> {
    if lambda.len() != levi.rank() {
        return Err(Error::RankMismatch { expected: levi.rank(), found: lambda.len() });
    }
    let mut q = vec![Rat::zero(); lambda.len()];
    for b in levi.blocks() {
        let idx: Vec<usize> = b.iter().map(|i| i as usize - 1).collect();
        let avg = idx.iter().map(|&i| lambda.0[i]).sum::<Rat>() / int(idx.len() as i64);
        for i in idx {
            q[i] = avg;
        }
    }
    let lambda_q = RationalVector(q);
    let lambda_upper_q = lambda - &lambda_q;
    Ok(ExponentDecomposition { lambda_q, lambda_upper_q })
}

pub fn project(lambda: &RationalVector, q: &SpComposition) -> Result<ExponentDecomposition> {
    project_levi(lambda, &Levi::sp(q))
}

/// The coweight `ϖ_ν`: `λ ↦ λ_1 + ⋯ + λ_ν`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Coweight {
    pub nu: usize,
}

impl Coweight {
    pub fn pairing(&self, lambda: &[Rat]) -> Rat {
        lambda[..self.nu].iter().sum()
    }
}

/// One coweight per GL block boundary `ν_1, …, ν_k`; empty for `Q = G`.
pub fn coweights(q: &SpComposition) -> Vec<Coweight> {
    q.partial_sums().into_iter().skip(1).map(|nu| Coweight { nu }).collect()
}

/// True iff every coweight pairing is strictly negative.
pub fn is_negative_exponent(lambda: &RationalVector, p: &SpComposition) -> Result<bool> {
    if lambda.len() != p.total() {
        return Err(Error::RankMismatch { expected: p.total(), found: lambda.len() });
    }
    if p.is_full() {
        return domain("negativity is undefined for the full group");
    }
    Ok(coweights(p).iter().all(|c| c.pairing(&lambda.0).is_negative()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::sp_compositions_of;
    use proptest::prelude::*;

    fn rv(v: &[(i64, i64)]) -> RationalVector {
        RationalVector(v.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho_p(&SpComposition::borel(3)), RationalVector::from_ints(&[3, 2, 1]));
        assert_eq!(rho_p(&SpComposition::new([2], 1)), rv(&[(5, 2), (5, 2), (0, 1)]));
        for n in 1..=5 {
            let siegel = rho_p(&SpComposition::new([n], 0));
            assert!(siegel.0.iter().all(|x| *x == rat(n as i64 + 1, 2)));
        }
    }

    #[test]
    fn rho_closed_form_matches_half_sum() {
        for n in 1..=5 {
            for alpha in sp_compositions_of(n).unwrap() {
                assert_eq!(rho_p(&alpha), rho_half_sum(&Levi::sp(&alpha)), "{alpha}");
            }
        }
    }

    #[test]
    fn projection_examples() {
        let q = SpComposition::new([1], 2);
        let d = project(&rv(&[(-1, 1), (-1, 2), (-1, 2)]), &q).unwrap();
        assert_eq!(d.lambda_q, RationalVector::from_ints(&[-1, 0, 0]));
        let d = project(&rv(&[(2, 1), (1, 1), (1, 2), (1, 2)]), &SpComposition::new([2], 2)).unwrap();
        assert_eq!(d.lambda_q, rv(&[(3, 2), (3, 2), (0, 1), (0, 1)]));
        let d = project(&RationalVector::from_ints(&[4, -1, 7]), &SpComposition::full(3)).unwrap();
        assert!(d.lambda_q.is_zero());
        assert!(project(&RationalVector::zeros(2), &q).is_err());
    }

    #[test]
    fn coweight_examples() {
        assert_eq!(coweights(&SpComposition::new([1], 2)), vec![Coweight { nu: 1 }]);
        let nus: Vec<usize> = coweights(&SpComposition::new([2, 1], 0)).iter().map(|c| c.nu).collect();
        assert_eq!(nus, [2, 3]);
        assert!(coweights(&SpComposition::full(3)).is_empty());
    }

    #[test]
    fn negativity_examples() {
        let p = SpComposition::new([1, 2, 1], 0);
        assert!(is_negative_exponent(&rv(&[(-2, 1), (-1, 2), (-1, 2), (-1, 1)]), &p).unwrap());
        assert!(!is_negative_exponent(&RationalVector::zeros(4), &p).unwrap());
        assert!(!is_negative_exponent(&RationalVector::from_ints(&[-1, 1, 0]), &SpComposition::new([1, 1], 1)).unwrap());
        assert!(is_negative_exponent(&RationalVector::zeros(2), &SpComposition::full(2)).is_err());
    }

    #[test]
    fn restricted_root_pairings() {
        let l = vec![int(3), int(1)];
        assert_eq!(RestrictedRoot::Diff(1, 2).pairing(&l), int(2));
        assert_eq!(RestrictedRoot::Sum(1, 2).pairing(&l), int(4));
        assert_eq!(RestrictedRoot::Long(1).pairing(&l), int(3));
        assert_eq!(RestrictedRoot::positive(GroupKind::Sp, 3).len(), 9);
        for r in RestrictedRoot::positive(GroupKind::Sp, 3) {
            assert_eq!(RestrictedRoot::from_vector(&r.to_vector(3)), Some((r, true)));
        }
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-20i64..20, 1i64..5).prop_map(|(n, d)| rat(n, d))
    }

    fn comp_and_vec() -> impl Strategy<Value = (SpComposition, RationalVector)> {
        (1usize..=5).prop_flat_map(|n| {
            let comps = sp_compositions_of(n).unwrap();
            (proptest::sample::select(comps), proptest::collection::vec(small_rat(), n))
                .prop_map(|(c, v)| (c, RationalVector(v)))
        })
    }

    proptest! {
        #[test]
        fn projection_is_idempotent_and_splits((q, l) in comp_and_vec()) {
            let d = project(&l, &q).unwrap();
            prop_assert_eq!(project(&d.lambda_q, &q).unwrap().lambda_q, d.lambda_q.clone());
            prop_assert_eq!(&d.lambda_q + &d.lambda_upper_q, l);
        }

        #[test]
        fn projection_is_linear((q, l) in comp_and_vec(), c in small_rat()) {
            let a = project(&l.scale(c), &q).unwrap().lambda_q;
            prop_assert_eq!(a, project(&l, &q).unwrap().lambda_q.scale(c));
        }

        #[test]
        fn projection_is_transitive((q, l) in comp_and_vec()) {
            // Every composition refines the full group; the Borel refines everything.
            let borel = SpComposition::borel(q.total());
            let via = project(&project(&l, &borel).unwrap().lambda_q, &q).unwrap().lambda_q;
            prop_assert_eq!(via, project(&l, &q).unwrap().lambda_q);
        }

        #[test]
        fn negativity_shortcut((q, l) in comp_and_vec()) {
            // If λ is constant on Q-blocks, the first block value is < 0 and the rest ≤ 0,
            // every coweight pairing is < 0.
            prop_assume!(!q.is_full());
            let lq = project(&l, &q).unwrap().lambda_q;
            let first_gl = lq.0[0];
            let rest_nonpositive = lq.0.iter().all(|x| !x.is_positive());
            if first_gl.is_negative() && rest_nonpositive {
                prop_assert!(is_negative_exponent(&lq, &q).unwrap());
            }
        }
    }
}
