//! The signed-permutation group `𝒲_N = S_N ⋉ (ℤ/2)^N`, its action on `ℚ^N`,
//! and the reduced (double) coset representative sets.
//!
//! `w = τ𝔠` acts by `e_i ↦ ±e_{τ(i)}` with sign `−` iff `i ∈ 𝔠`; products apply the
//! right factor first. For `τ = (1 2)`, `𝔠 = {1}` this sends `(x₁,x₂)` to `(x₂,−x₁)`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::ops::Neg;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::combinatorics::{consecutive_blocks, Composition, SpComposition};
use crate::error::{domain, Error, Result};
use crate::roots::{is_positive, GroupKind, Levi, RationalVector, Root};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignedPermutation {
    /// 0-based images of τ.
    image: Vec<u8>,
    /// Bit `i` set iff `i+1 ∈ 𝔠`.
    signs: u32,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        Self { image: (0..n as u8).collect(), signs: 0 }
    }

    /// `tau` lists `τ(1),…,τ(N)`; `c` is the sign set, both 1-based.
    pub fn new(tau: &[usize], c: &[usize]) -> Result<Self> {
        let n = tau.len();
        let mut seen = vec![false; n];
        for &t in tau {
            if t == 0 || t > n || seen[t - 1] {
                return domain(format!("{tau:?} is not a permutation of [1,{n}]"));
            }
            seen[t - 1] = true;
        }
        let mut signs = 0;
        for &i in c {
            if i == 0 || i > n {
                return domain(format!("sign index {i} outside [1,{n}]"));
            }
            signs |= 1 << (i - 1);
        }
        Ok(Self { image: tau.iter().map(|&t| (t - 1) as u8).collect(), signs })
    }

    /// Signed one-line notation: entry `i` is `±τ(i)`, negative iff `i ∈ 𝔠`.
    pub fn from_one_line(v: &[i64]) -> Result<Self> {
        let tau: Vec<usize> = v.iter().map(|x| x.unsigned_abs() as usize).collect();
        let c: Vec<usize> = (1..=v.len()).filter(|&i| v[i - 1] < 0).collect();
        Self::new(&tau, &c)
    }

    pub fn one_line(&self) -> Vec<i64> {
        (0..self.rank()).map(|i| self.sign0(i) * (self.image[i] as i64 + 1)).collect()
    }

    pub fn rank(&self) -> usize {
        self.image.len()
    }

    /// `τ(i)`, 1-based.
    pub fn tau(&self, i: usize) -> usize {
        self.image[i - 1] as usize + 1
    }

    pub fn in_c(&self, i: usize) -> bool {
        self.signs >> (i - 1) & 1 == 1
    }

    pub fn sign_set(&self) -> Vec<usize> {
        (1..=self.rank()).filter(|&i| self.in_c(i)).collect()
    }

    fn sign0(&self, i: usize) -> i64 {
        if self.signs >> i & 1 == 1 {
            -1
        } else {
            1
        }
    }

    pub fn is_permutation(&self) -> bool {
        self.signs == 0
    }

    pub fn is_identity(&self) -> bool {
        self.signs == 0 && self.image.iter().enumerate().all(|(i, &t)| i == t as usize)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.rank(), other.rank());
        let mut image = Vec::with_capacity(self.rank());
        let mut signs = 0;
        for i in 0..other.rank() {
            let j = other.image[i] as usize;
            image.push(self.image[j]);
            if other.sign0(i) * self.sign0(j) < 0 {
                signs |= 1 << i;
            }
        }
        Self { image, signs }
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0u8; self.rank()];
        let mut signs = 0;
        for i in 0..self.rank() {
            let t = self.image[i] as usize;
            image[t] = i as u8;
            if self.sign0(i) < 0 {
                signs |= 1 << t;
            }
        }
        Self { image, signs }
    }

    /// `(wv)_{τ(i)} = ±v_i`.
    pub fn act_slice<T: Clone + Neg<Output = T>>(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), found: v.len() });
        }
        let mut out = v.to_vec();
        for i in 0..v.len() {
            let x = v[i].clone();
            out[self.image[i] as usize] = if self.sign0(i) < 0 { -x } else { x };
        }
        Ok(out)
    }

    pub fn act(&self, v: &RationalVector) -> Result<RationalVector> {
        self.act_slice(&v.0).map(RationalVector)
    }

    pub fn act_root(&self, r: &[i64]) -> Root {
        self.act_slice(r).expect("root rank matches")
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, kind: GroupKind) -> usize {
        crate::roots::positive_roots(kind, self.rank())
            .iter()
            .filter(|r| !is_positive(&self.act_root(r)))
            .count()
    }

    /// Canonical ordering key: `(length, one-line notation)`.
    pub fn sort_key(&self, kind: GroupKind) -> (usize, Vec<i64>) {
        (self.length(kind), self.one_line())
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.one_line().iter().join(","))
    }
}

impl Serialize for SignedPermutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub fn sort_canonical(v: &mut [SignedPermutation], kind: GroupKind) {
    v.sort_by_cached_key(|w| w.sort_key(kind));
}

/// Every element of `𝒲_N` (`Sp`) or `S_N` (`Gl`), sorted by `(length, one-line)`.
pub fn group_elements(kind: GroupKind, n: usize) -> Vec<SignedPermutation> {
    let sign_sets: u32 = match kind {
        GroupKind::Sp => 1 << n,
        GroupKind::Gl => 1,
    };
    let mut out: Vec<SignedPermutation> = (0..n as u8)
        .permutations(n)
        .flat_map(|image| (0..sign_sets).map(move |signs| SignedPermutation { image: image.clone(), signs }))
        .collect();
    sort_canonical(&mut out, kind);
    out
}

/// `wα > 0` for every `α ∈ Δ₀^M`.
pub fn is_right_reduced(w: &SignedPermutation, m: &Levi) -> bool {
    m.simple_roots().iter().all(|a| is_positive(&w.act_root(a)))
}

pub fn is_left_reduced(w: &SignedPermutation, l: &Levi) -> bool {
    is_right_reduced(&w.inverse(), l)
}

/// Builds `τ` sending each source interval onto its target interval, preserving or
/// reversing order, and flipping signs on the reversed ones.
fn assemble(n: usize, pieces: &[(Vec<usize>, Vec<usize>, bool)]) -> SignedPermutation {
    let mut image = vec![0u8; n];
    let mut signs = 0u32;
    for (src, dst, reversed) in pieces {
        debug_assert_eq!(src.len(), dst.len());
        let dst: Vec<usize> = if *reversed { dst.iter().rev().copied().collect() } else { dst.clone() };
        for (&s, &d) in src.iter().zip(&dst) {
            image[s - 1] = (d - 1) as u8;
            if *reversed {
                signs |= 1 << (s - 1);
            }
        }
    }
    SignedPermutation { image, signs }
}

/// All ordered set partitions of `[1,n]` into parts of the given sizes, each part sorted.
fn ordered_set_partitions(n: usize, sizes: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn go(remaining: &[usize], sizes: &[usize], acc: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        let Some((&first, rest)) = sizes.split_first() else {
            out.push(acc.clone());
            return;
        };
        for chosen in remaining.iter().copied().combinations(first) {
            let left: Vec<usize> = remaining.iter().copied().filter(|x| !chosen.contains(x)).collect();
            acc.push(chosen);
            go(&left, rest, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(&(1..=n).collect::<Vec<_>>(), sizes, &mut Vec::new(), &mut out);
    out
}

/// `[W/W_M]` generated from the characterization: choose `d_i ∈ [0,n_i]`, put
/// `𝔠 = ⊔[ν_{i-1}+d_i+1, ν_i]`, let `τ` reverse order on those intervals and
/// preserve it on `[ν_{i-1}+1, ν_{i-1}+d_i]` and on the tail.
pub fn right_reduced_reps(m: &SpComposition) -> Vec<SignedPermutation> {
    let n = m.total();
    let blocks = m.gl_blocks();
    let tail = m.sp_block();
    let mut out = Vec::new();
    for ds in m.parts().iter().map(|&p| 0..=p).multi_cartesian_product() {
        // Source intervals in order: (direct_i, flipped_i) for each block, then the tail.
        let mut sources: Vec<(Vec<usize>, bool)> = Vec::new();
        for (b, &d) in blocks.iter().zip(&ds) {
            let all: Vec<usize> = b.iter().map(|x| x as usize).collect();
            sources.push((all[..d].to_vec(), false));
            sources.push((all[d..].to_vec(), true));
        }
        sources.push((tail.iter().map(|x| x as usize).collect(), false));
        let sizes: Vec<usize> = sources.iter().map(|(s, _)| s.len()).collect();
        for targets in ordered_set_partitions(n, &sizes) {
            let pieces: Vec<_> = sources
                .iter()
                .zip(targets)
                .map(|((src, rev), dst)| (src.clone(), dst, *rev))
                .collect();
            out.push(assemble(n, &pieces));
        }
    }
    sort_canonical(&mut out, GroupKind::Sp);
    out
}

/// `[S_N/S_α]`: permutations order preserving on each block of `α`.
pub fn right_reduced_reps_gl(alpha: &Composition) -> Vec<SignedPermutation> {
    let n = alpha.total();
    let blocks = alpha.blocks();
    let mut out: Vec<SignedPermutation> = ordered_set_partitions(n, alpha.parts())
        .into_iter()
        .map(|targets| {
            let pieces: Vec<_> = blocks
                .iter()
                .zip(targets)
                .map(|(b, dst)| (b.iter().map(|x| x as usize).collect(), dst, false))
                .collect();
            assemble(n, &pieces)
        })
        .collect();
    sort_canonical(&mut out, GroupKind::Gl);
    out
}

/// `ₗW_M = [W/W_M] ∩ [W_L\W]`, with `[W_L\W]` the inverses of `[W/W_L]`.
pub fn double_coset_reps(l: &SpComposition, m: &SpComposition) -> Result<Vec<SignedPermutation>> {
    if l.total() != m.total() {
        return Err(Error::RankMismatch { expected: l.total(), found: m.total() });
    }
    let left: HashSet<SignedPermutation> = right_reduced_reps(l).iter().map(|w| w.inverse()).collect();
    Ok(right_reduced_reps(m).into_iter().filter(|w| left.contains(w)).collect())
}

/// `w(R_M) ⊆ R_L`.
pub fn maps_levi_into(w: &SignedPermutation, m: &Levi, l: &Levi) -> bool {
    m.roots().iter().all(|r| l.contains_root(&w.act_root(r)))
}

/// `ₗW°_M = {w ∈ ₗW_M : w(M) ⊆ L}`.
pub fn circ_reps(l: &SpComposition, m: &SpComposition) -> Result<Vec<SignedPermutation>> {
    let (ll, ml) = (Levi::sp(l), Levi::sp(m));
    Ok(double_coset_reps(l, m)?.into_iter().filter(|w| maps_levi_into(w, &ml, &ll)).collect())
}

/// Partition `𝒟 = (D_1,E_1,…,D_k,E_k,D_0)` of the block indices `[1,t]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DPartition {
    pub d: Vec<BTreeSet<usize>>,
    pub e: Vec<BTreeSet<usize>>,
    pub d0: BTreeSet<usize>,
}

impl DPartition {
    /// `i` such that `j ∈ D_i` (`0` for `D_0`), if `j` lies in some `D`.
    pub fn d_index_of(&self, j: usize) -> Option<usize> {
        if self.d0.contains(&j) {
            return Some(0);
        }
        self.d.iter().position(|s| s.contains(&j)).map(|i| i + 1)
    }

    pub fn is_valid_for(&self, blocks: &Composition, target: &SpComposition) -> bool {
        let t = blocks.len();
        let k = target.k();
        if self.d.len() != k || self.e.len() != k {
            return false;
        }
        let all: Vec<usize> = self.d.iter().chain(&self.e).chain([&self.d0]).flatten().copied().sorted().collect();
        if all != (1..=t).collect::<Vec<_>>() {
            return false;
        }
        let size = |s: &BTreeSet<usize>| s.iter().map(|&j| blocks.parts()[j - 1]).sum::<usize>();
        (0..k).all(|i| size(&self.d[i]) + size(&self.e[i]) == target.parts()[i])
            && size(&self.d0) == target.anisotropic_rank()
    }
}

impl fmt::Display for DPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set = |s: &BTreeSet<usize>| format!("{{{}}}", s.iter().join(","));
        let mut parts = Vec::new();
        for i in 0..self.d.len() {
            parts.push(format!("D{}={}", i + 1, set(&self.d[i])));
            parts.push(format!("E{}={}", i + 1, set(&self.e[i])));
        }
        parts.push(format!("D0={}", set(&self.d0)));
        write!(f, "({})", parts.join(", "))
    }
}

/// All `𝒟` compatible with `M = (m_1,…,m_t;0)` and `L = target`.
pub fn dpartitions(blocks: &Composition, target: &SpComposition) -> Vec<DPartition> {
    let k = target.k();
    let sizes = blocks.parts();
    // Label 0 = D_0, 2i-1 = D_i, 2i = E_i.
    let mut cap: Vec<usize> = std::iter::once(target.anisotropic_rank())
        .chain(target.parts().iter().flat_map(|&p| [p, 0]))
        .collect();
    let mut labels = vec![0usize; sizes.len()];
    let mut out = Vec::new();

    fn cap_index(label: usize) -> usize {
        if label == 0 {
            0
        } else {
            2 * label.div_ceil(2) - 1
        }
    }

    fn go(j: usize, sizes: &[usize], k: usize, cap: &mut [usize], labels: &mut [usize], out: &mut Vec<DPartition>) {
        if j == sizes.len() {
            if cap.iter().all(|&c| c == 0) {
                let mut d = vec![BTreeSet::new(); k];
                let mut e = vec![BTreeSet::new(); k];
                let mut d0 = BTreeSet::new();
                for (idx, &lab) in labels.iter().enumerate() {
                    match lab {
                        0 => d0.insert(idx + 1),
                        l if l % 2 == 1 => d[l / 2].insert(idx + 1),
                        l => e[l / 2 - 1].insert(idx + 1),
                    };
                }
                out.push(DPartition { d, e, d0 });
            }
            return;
        }
        for label in 0..=2 * k {
            let ci = cap_index(label);
            if cap[ci] >= sizes[j] {
                cap[ci] -= sizes[j];
                labels[j] = label;
                go(j + 1, sizes, k, cap, labels, out);
                cap[ci] += sizes[j];
            }
        }
    }

    go(0, sizes, k, &mut cap, &mut labels, &mut out);
    out.sort();
    out
}

/// The `w_𝒟 ∈ ₗW°_M` whose action on `𝔞_M*` is
/// `μ_i = (ξ over D_i increasing, −ξ over E_i decreasing)`, `μ_0 = ξ over D_0`.
pub fn w_from_d(d: &DPartition, blocks: &Composition, target: &SpComposition) -> Result<SignedPermutation> {
    if blocks.total() != target.total() {
        return Err(Error::RankMismatch { expected: target.total(), found: blocks.total() });
    }
    if !d.is_valid_for(blocks, target) {
        return domain(format!("{d} is incompatible with blocks {blocks} and target {target}"));
    }
    let n = blocks.total();
    let src = blocks.blocks();
    let ranges: Vec<Vec<usize>> = src.iter().map(|b| b.iter().map(|x| x as usize).collect()).collect();
    let mut pieces = Vec::new();
    let mut pos = 1usize;
    let mut place = |j: usize, reversed: bool, pos: &mut usize| {
        let len = ranges[j - 1].len();
        pieces.push((ranges[j - 1].clone(), (*pos..*pos + len).collect::<Vec<_>>(), reversed));
        *pos += len;
    };
    for i in 0..target.k() {
        for &j in &d.d[i] {
            place(j, false, &mut pos);
        }
        for &j in d.e[i].iter().rev() {
            place(j, true, &mut pos);
        }
    }
    for &j in &d.d0 {
        place(j, false, &mut pos);
    }
    Ok(assemble(n, &pieces))
}

/// Longest element of `W_M`: reverse each GL block, negate the tail.
pub fn longest_element(m: &SpComposition) -> SignedPermutation {
    let n = m.total();
    let pieces: Vec<(Vec<usize>, Vec<usize>, bool)> = m
        .gl_blocks()
        .iter()
        .map(|b| {
            let v: Vec<usize> = b.iter().map(|x| x as usize).collect();
            (v.clone(), v.into_iter().rev().collect(), false)
        })
        .chain(std::iter::once({
            let t: Vec<usize> = m.sp_block().iter().map(|x| x as usize).collect();
            (t.clone(), t, false)
        }))
        .collect();
    let mut w = assemble(n, &pieces);
    for i in m.sp_block().iter() {
        w.signs |= 1 << (i - 1);
    }
    w
}

/// If `w(M)` is a standard Levi, return it.
pub fn standard_image(w: &SignedPermutation, m: &SpComposition) -> Option<SpComposition> {
    let n = m.total();
    let r = m.anisotropic_rank();
    let mut images: Vec<(usize, usize)> = Vec::new();
    for b in m.gl_blocks() {
        let idx: Vec<usize> = b.iter().map(|x| x as usize).collect();
        let sign = w.in_c(idx[0]);
        if idx.iter().any(|&i| w.in_c(i) != sign) {
            return None;
        }
        let imgs: Vec<usize> = idx.iter().map(|&i| w.tau(i)).sorted().collect();
        if imgs.windows(2).any(|p| p[1] != p[0] + 1) {
            return None;
        }
        images.push((imgs[0], imgs.len()));
    }
    let tail: BTreeSet<usize> = m.sp_block().iter().map(|i| w.tau(i as usize)).collect();
    if tail != (n - r + 1..=n).collect() {
        return None;
    }
    images.sort();
    let mut next = 1;
    for &(lo, len) in &images {
        if lo != next {
            return None;
        }
        next += len;
    }
    let image = SpComposition::new(images.into_iter().map(|(_, len)| len), r);
    let (src, dst) = (Levi::sp(m), Levi::sp(&image));
    let mapped: BTreeSet<Root> = src.roots().iter().map(|a| w.act_root(a)).collect();
    (mapped == dst.roots().into_iter().collect()).then_some(image)
}

/// `W(M)`: right `M`-reduced elements conjugating `M` to a standard Levi.
pub fn in_w_of_m(w: &SignedPermutation, m: &SpComposition) -> bool {
    is_right_reduced(w, &Levi::sp(m)) && standard_image(w, m).is_some()
}

/// An elementary symmetry `s_α = w_0^{M_α} w_0^M` attached to a simple root
/// `α₀ ∈ Δ₀ ∖ Δ₀^M`, together with the Levi it acts on and its image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementarySymmetry {
    pub simple_root: Root,
    pub source: String,
    pub target: String,
    pub element: SignedPermutation,
    #[serde(skip)]
    pub target_levi: SpComposition,
}

/// `M_α`: the standard Levi generated by `M` and the simple root `α₀`.
fn enlarge(m: &SpComposition, alpha: &[i64]) -> SpComposition {
    let n = m.total();
    let sums = m.partial_sums();
    let k = m.k();
    let r = m.anisotropic_rank();
    if alpha[n - 1] == 2 {
        // 2e_N outside M means r = 0: the last GL block joins the tail.
        return SpComposition::new(m.parts()[..k - 1].iter().copied(), m.parts()[k - 1]);
    }
    let p = alpha.iter().position(|&c| c == 1).expect("simple root") + 1;
    let b = sums.iter().position(|&s| s == p).expect("block boundary");
    // p is the end of GL block b (1-based).
    if b == k {
        SpComposition::new(m.parts()[..k - 1].iter().copied(), m.parts()[k - 1] + r)
    } else {
        let mut parts = m.parts().to_vec();
        parts[b - 1] += parts[b];
        parts.remove(b);
        SpComposition::new(parts, r)
    }
}

pub fn elementary_symmetries(m: &SpComposition) -> Vec<ElementarySymmetry> {
    let levi = Levi::sp(m);
    crate::roots::simple_roots(GroupKind::Sp, m.total())
        .into_iter()
        .filter(|a| !levi.contains_root(a))
        .map(|a| {
            let big = enlarge(m, &a);
            let element = longest_element(&big).compose(&longest_element(m));
            let target_levi = standard_image(&element, m).expect("elementary symmetry normalizes to a standard Levi");
            ElementarySymmetry {
                simple_root: a,
                source: m.to_string(),
                target: target_levi.to_string(),
                element,
                target_levi,
            }
        })
        .collect()
}

/// `w = s_ℓ ⋯ s_1` with each `s_j` elementary for `s_{j-1}⋯s_1(M)`; the list is
/// returned as `[s_1, …, s_ℓ]`.
pub fn elementary_factorization(w: &SignedPermutation, m: &SpComposition) -> Result<Vec<ElementarySymmetry>> {
    if w.rank() != m.total() {
        return Err(Error::RankMismatch { expected: m.total(), found: w.rank() });
    }
    if !in_w_of_m(w, m) {
        return domain(format!("{w} is not in W({m})"));
    }
    let mut rest = w.clone();
    let mut levi = m.clone();
    let mut out = Vec::new();
    while !rest.is_identity() {
        let s = elementary_symmetries(&levi)
            .into_iter()
            .find(|s| !is_positive(&rest.act_root(&s.simple_root)))
            .ok_or_else(|| Error::Domain(format!("no descent for {rest} on {levi}")))?;
        rest = rest.compose(&s.element.inverse());
        levi = s.target_levi.clone();
        out.push(s);
    }
    Ok(out)
}

/// `ℓ_M(w)`: reduced positive restricted roots of `M` made negative by `w`.
pub fn restricted_length(w: &SignedPermutation, m: &SpComposition) -> usize {
    let levi = Levi::sp(m);
    let mut directions: BTreeSet<Vec<(i64, i64)>> = BTreeSet::new();
    for r in levi.unipotent_roots() {
        if is_positive(&w.act_root(&r)) {
            continue;
        }
        let proj = crate::roots::project_levi(&RationalVector::from_ints(&r), &levi).expect("rank").lambda_q;
        // Normalize the direction so that proportional restricted roots coincide.
        let lead = *proj.0.iter().find(|x| **x != num_traits::Zero::zero()).expect("restriction is nonzero");
        directions.insert(proj.scale(lead.recip()).0.iter().map(|x| (*x.numer(), *x.denom())).collect());
    }
    directions.len()
}

/// The simple reflections of `G` in the order of [`crate::roots::simple_roots`].
pub fn simple_reflections(kind: GroupKind, n: usize) -> Vec<SignedPermutation> {
    let mut out: Vec<SignedPermutation> = (1..n)
        .map(|i| {
            let mut tau: Vec<usize> = (1..=n).collect();
            tau.swap(i - 1, i);
            SignedPermutation::new(&tau, &[]).expect("transposition")
        })
        .collect();
    if kind == GroupKind::Sp && n > 0 {
        out.push(SignedPermutation::new(&(1..=n).collect::<Vec<_>>(), &[n]).expect("sign flip"));
    }
    out
}

/// Blocks of `M = (m_1,…,m_t;0)` as consecutive coordinate ranges.
pub fn block_ranges(blocks: &Composition) -> Vec<Vec<usize>> {
    consecutive_blocks(1, blocks.parts()).iter().map(|b| b.iter().map(|x| x as usize).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::sp_compositions_of;
    use crate::roots::{int, Rat};
    use proptest::prelude::*;

    fn sp(s: &str) -> SpComposition {
        s.parse().unwrap()
    }

    #[test]
    fn action_examples() {
        let w = SignedPermutation::new(&[2, 1], &[1]).unwrap();
        let x: Vec<Rat> = vec![int(5), int(7)];
        assert_eq!(w.act_slice(&x).unwrap(), vec![int(7), int(-5)]);
        assert_eq!(SignedPermutation::identity(2).act_slice(&x).unwrap(), x);
        let flip = SignedPermutation::new(&[1, 2], &[1, 2]).unwrap();
        assert_eq!(flip.act_slice(&x).unwrap(), vec![int(-5), int(-7)]);
        assert!(w.act_slice(&[int(1)]).is_err());
        assert_eq!(w.to_string(), "[-2,1]");
    }

    #[test]
    fn group_axioms_exhaustive() {
        for n in 1..=4 {
            let g = group_elements(GroupKind::Sp, n);
            assert_eq!(g.len(), (1 << n) * (1..=n).product::<usize>());
            let e = SignedPermutation::identity(n);
            let sample: Vec<_> = g.iter().step_by(if n == 4 { 7 } else { 1 }).cloned().collect();
            for a in &sample {
                assert_eq!(a.compose(&a.inverse()), e);
                assert_eq!(a.compose(&e), *a);
                for b in &sample {
                    let ab = a.compose(b);
                    // The action is a left action.
                    let v: Vec<i64> = (1..=n as i64).collect();
                    assert_eq!(ab.act_slice(&v).unwrap(), a.act_slice(&b.act_slice(&v).unwrap()).unwrap());
                }
            }
        }
    }

    #[test]
    fn conjugating_signs_moves_the_set() {
        // τ𝔠τ⁻¹ = τ(𝔠)
        let tau = SignedPermutation::new(&[3, 1, 2], &[]).unwrap();
        let c = SignedPermutation::new(&[1, 2, 3], &[1]).unwrap();
        let conj = tau.compose(&c).compose(&tau.inverse());
        assert_eq!(conj, SignedPermutation::new(&[1, 2, 3], &[3]).unwrap());
    }

    #[test]
    fn right_reduced_examples() {
        let r = right_reduced_reps(&sp("1;0"));
        assert_eq!(r.len(), 2);
        assert_eq!(right_reduced_reps(&sp("1;1")).len(), 4);
        assert_eq!(right_reduced_reps(&sp("2;0")).len(), 4);
        for n in 1..=4 {
            for m in sp_compositions_of(n).unwrap() {
                let reps = right_reduced_reps(&m);
                let w_m: usize = m.parts().iter().map(|&p| (1..=p).product::<usize>()).product::<usize>()
                    * (1 << m.anisotropic_rank())
                    * (1..=m.anisotropic_rank()).product::<usize>();
                assert_eq!(reps.len() * w_m, (1 << n) * (1..=n).product::<usize>(), "{m}");
                assert!(reps.iter().all(|w| is_right_reduced(w, &Levi::sp(&m))));
            }
        }
    }

    #[test]
    fn double_coset_examples() {
        assert_eq!(double_coset_reps(&sp(";3"), &sp(";3")).unwrap(), vec![SignedPermutation::identity(3)]);
        assert_eq!(double_coset_reps(&sp("1,1;0"), &sp("1,1;0")).unwrap().len(), 8);
        assert_eq!(double_coset_reps(&sp("2;0"), &sp("1,1;0")).unwrap().len(), 4);
        assert!(double_coset_reps(&sp("2;0"), &sp("1;0")).is_err());
    }

    #[test]
    fn circ_examples() {
        assert_eq!(circ_reps(&sp("1,2;0"), &sp("1,2;0")).unwrap().len(), 4);
        for n in 1..=4 {
            let m = SpComposition::new([1], n - 1);
            assert_eq!(circ_reps(&SpComposition::full(n), &m).unwrap(), double_coset_reps(&SpComposition::full(n), &m).unwrap());
        }
    }

    #[test]
    fn w_from_d_examples() {
        let d = DPartition { d: vec![[2].into()], e: vec![[1].into()], d0: BTreeSet::new() };
        let w = w_from_d(&d, &Composition::new([1, 1]), &sp("2;0")).unwrap();
        assert_eq!(w.act_slice(&[int(3), int(5)]).unwrap(), vec![int(5), int(-3)]);

        let d = DPartition { d: vec![[1, 2, 3].into()], e: vec![BTreeSet::new()], d0: BTreeSet::new() };
        assert!(w_from_d(&d, &Composition::new([1, 2, 1]), &sp("4;0")).unwrap().is_identity());

        let d = DPartition { d: vec![[1].into()], e: vec![BTreeSet::new()], d0: [2].into() };
        assert!(w_from_d(&d, &Composition::new([1, 2]), &sp("1;2")).unwrap().is_identity());

        let bad = DPartition { d: vec![[2].into()], e: vec![BTreeSet::new()], d0: [1].into() };
        assert!(w_from_d(&bad, &Composition::new([1, 2]), &sp("1;2")).is_err());
    }

    #[test]
    fn w_from_d_is_a_bijection_onto_circ_reps() {
        for n in 1..=4 {
            for blocks in crate::combinatorics::compositions_of(n).unwrap() {
                let m = SpComposition::new(blocks.parts().iter().copied(), 0);
                for l in sp_compositions_of(n).unwrap() {
                    let mut from_d: Vec<_> = dpartitions(&blocks, &l)
                        .iter()
                        .map(|d| w_from_d(d, &blocks, &l).unwrap())
                        .collect();
                    let count = from_d.len();
                    sort_canonical(&mut from_d, GroupKind::Sp);
                    from_d.dedup();
                    assert_eq!(from_d.len(), count, "injective for {blocks} -> {l}");
                    assert_eq!(from_d, circ_reps(&l, &m).unwrap(), "{blocks} -> {l}");
                }
            }
        }
    }

    #[test]
    fn elementary_factorization_examples() {
        let m = sp("1,2;0");
        assert!(elementary_factorization(&SignedPermutation::identity(3), &m).unwrap().is_empty());
        for s in elementary_symmetries(&m) {
            let f = elementary_factorization(&s.element, &m).unwrap();
            assert_eq!(f.len(), 1);
            assert_eq!(f[0].element, s.element);
        }
        // The longest element of W(L_1) for m = n = 1 flips both block coordinates.
        let w_l = SignedPermutation::from_one_line(&[-1, -3, -2]).unwrap();
        let f = elementary_factorization(&w_l, &m).unwrap();
        assert_eq!(f.len(), restricted_length(&w_l, &m));
        assert_eq!(f.len(), 4);
        let product = f.iter().fold(SignedPermutation::identity(3), |acc, s| s.element.compose(&acc));
        assert_eq!(product, w_l);
        assert!(elementary_factorization(&SignedPermutation::from_one_line(&[1, 3, 2]).unwrap(), &m).is_err());
    }

    #[test]
    fn factorization_length_matches_restricted_length() {
        for n in 1..=4 {
            for m in sp_compositions_of(n).unwrap() {
                for w in right_reduced_reps(&m).into_iter().filter(|w| in_w_of_m(w, &m)) {
                    let f = elementary_factorization(&w, &m).unwrap();
                    assert_eq!(f.len(), restricted_length(&w, &m), "{w} on {m}");
                    let product = f.iter().fold(SignedPermutation::identity(n), |acc, s| s.element.compose(&acc));
                    assert_eq!(product, w);
                }
            }
        }
    }

    fn element(n: usize) -> impl Strategy<Value = SignedPermutation> {
        (Just((1..=n).collect::<Vec<usize>>()).prop_shuffle(), proptest::collection::vec(any::<bool>(), n))
            .prop_map(|(tau, bits)| {
                let c: Vec<usize> = (1..=bits.len()).filter(|&i| bits[i - 1]).collect();
                SignedPermutation::new(&tau, &c).unwrap()
            })
    }

    proptest! {
        #[test]
        fn associativity(a in element(5), b in element(5), c in element(5)) {
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        }

        #[test]
        fn inverse_and_length(a in element(5)) {
            prop_assert!(a.compose(&a.inverse()).is_identity());
            prop_assert_eq!(a.length(GroupKind::Sp), a.inverse().length(GroupKind::Sp));
        }

        #[test]
        fn action_is_linear(a in element(4), v in proptest::collection::vec(-9i64..9, 4), u in proptest::collection::vec(-9i64..9, 4)) {
            let sum: Vec<i64> = v.iter().zip(&u).map(|(x, y)| x + y).collect();
            let lhs = a.act_slice(&sum).unwrap();
            let rhs: Vec<i64> = a.act_slice(&v).unwrap().iter().zip(a.act_slice(&u).unwrap()).map(|(x, y)| x + y).collect();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
