//! Parabolic subgroups relative to `H = Sp_a × Sp_b` (or `GL_a × GL_b`): tables,
//! the permutations `σ_T`, intersections with `H`, and matrix-level checks that
//! tables parameterize the relevant semi-standard parabolics.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::combinatorics::{compositions_of, consecutive_intervals_raw, sp_compositions_of, Composition, SpComposition};
use crate::error::{domain, Error, Result};
use crate::matrix::{
    gl_root_unipotent, h_involution, in_conjugate_gl_parabolic, in_conjugate_sp_parabolic, j_embed,
    sp_root_unipotent, sp_torus, SquareMatrix,
};
use crate::roots::{all_roots, int, is_positive, positive_roots, rho_p, GroupKind, Levi, RationalVector, Root};
use crate::weyl::{is_right_reduced, right_reduced_reps, right_reduced_reps_gl, SignedPermutation};

/// A standard parabolic of `GL_N` or `Sp_N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StandardParabolic {
    Gl(Composition),
    Sp(SpComposition),
}

impl StandardParabolic {
    pub fn kind(&self) -> GroupKind {
        match self {
            Self::Gl(_) => GroupKind::Gl,
            Self::Sp(_) => GroupKind::Sp,
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            Self::Gl(c) => c.total(),
            Self::Sp(c) => c.total(),
        }
    }

    pub fn levi(&self) -> Levi {
        match self {
            Self::Gl(c) => Levi::gl(c),
            Self::Sp(c) => Levi::sp(c),
        }
    }

    /// Table columns: the GL parts, plus the anisotropic rank for `Sp` (kept even when 0).
    pub fn columns(&self) -> Vec<usize> {
        match self {
            Self::Gl(c) => c.parts().to_vec(),
            Self::Sp(c) => c.parts().iter().copied().chain([c.anisotropic_rank()]).collect(),
        }
    }

    /// `[W/W_M]`.
    pub fn reduced_conjugators(&self) -> Vec<SignedPermutation> {
        match self {
            Self::Gl(c) => right_reduced_reps_gl(c),
            Self::Sp(c) => right_reduced_reps(c),
        }
    }

    /// All standard parabolics of the given rank.
    pub fn all(kind: GroupKind, n: usize) -> Result<Vec<Self>> {
        Ok(match kind {
            GroupKind::Gl => compositions_of(n)?.into_iter().map(Self::Gl).collect(),
            GroupKind::Sp => sp_compositions_of(n)?.into_iter().map(Self::Sp).collect(),
        })
    }

    /// Matrix test `w⁻¹ g w ∈ P`.
    pub fn contains_conjugated(&self, g: &SquareMatrix, w: &SignedPermutation) -> bool {
        match self {
            Self::Gl(c) => in_conjugate_gl_parabolic(g, w, c.parts()),
            Self::Sp(c) => in_conjugate_sp_parabolic(g, w, c),
        }
    }
}

impl fmt::Display for StandardParabolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Gl(c) => write!(f, "{c}"),
            Self::Sp(c) => write!(f, "{c}"),
        }
    }
}

impl Serialize for StandardParabolic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `w(P)` with `w ∈ [W/W_M]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SemiStandardParabolic {
    pub base: StandardParabolic,
    pub conjugator: SignedPermutation,
}

impl SemiStandardParabolic {
    pub fn new(base: StandardParabolic, conjugator: SignedPermutation) -> Result<Self> {
        if conjugator.rank() != base.rank() {
            return Err(Error::RankMismatch { expected: base.rank(), found: conjugator.rank() });
        }
        if base.kind() == GroupKind::Gl && !conjugator.is_permutation() {
            return domain(format!("{conjugator} is not a permutation"));
        }
        if !is_right_reduced(&conjugator, &base.levi()) {
            return domain(format!("{conjugator} is not right reduced for {base}"));
        }
        Ok(Self { base, conjugator })
    }

    pub fn roots(&self) -> BTreeSet<Root> {
        self.base.levi().parabolic_roots().iter().map(|r| self.conjugator.act_root(r)).collect()
    }

    pub fn levi_roots(&self) -> BTreeSet<Root> {
        self.base.levi().roots().iter().map(|r| self.conjugator.act_root(r)).collect()
    }

    pub fn contains_matrix(&self, g: &SquareMatrix) -> bool {
        self.base.contains_conjugated(g, &self.conjugator)
    }

    pub fn contains_all(&self, panel: &[(Root, SquareMatrix)]) -> bool {
        panel.iter().all(|(_, g)| self.contains_matrix(g))
    }
}

impl fmt::Display for SemiStandardParabolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·P{}", self.conjugator, self.base)
    }
}

/// A two-row table with column sums `n_i` and row sums `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Table {
    pub base: StandardParabolic,
    pub row_a: Vec<usize>,
    pub row_b: Vec<usize>,
}

impl Table {
    pub fn new(base: StandardParabolic, row_a: Vec<usize>) -> Result<Self> {
        let cols = base.columns();
        if row_a.len() != cols.len() {
            return domain(format!("table row has {} entries, {base} has {} columns", row_a.len(), cols.len()));
        }
        if row_a.iter().zip(&cols).any(|(x, n)| x > n) {
            return domain("table entry exceeds its column");
        }
        let row_b = cols.iter().zip(&row_a).map(|(n, x)| n - x).collect();
        Ok(Self { base, row_a, row_b })
    }

    pub fn a(&self) -> usize {
        self.row_a.iter().sum()
    }

    pub fn b(&self) -> usize {
        self.row_b.iter().sum()
    }

    /// `σ_T`: order preserving from `I_j^A` to `A_j` and from `I_j^B` to `B_j`.
    pub fn sigma(&self) -> SignedPermutation {
        let interleaved: Vec<usize> = self.row_a.iter().zip(&self.row_b).flat_map(|(&x, &y)| [x, y]).collect();
        let sources = consecutive_intervals_raw(1, &interleaved);
        let sorted: Vec<usize> = self.row_a.iter().chain(&self.row_b).copied().collect();
        let targets = consecutive_intervals_raw(1, &sorted);
        let k = self.row_a.len();
        let n = self.base.rank();
        let mut tau = vec![0usize; n];
        for j in 0..k {
            for (src, dst) in [(&sources[2 * j], &targets[j]), (&sources[2 * j + 1], &targets[k + j])] {
                for (s, d) in src.iter().zip(dst.iter()) {
                    tau[s as usize - 1] = d as usize;
                }
            }
        }
        SignedPermutation::new(&tau, &[]).expect("σ_T is a permutation")
    }

    pub fn parabolic(&self) -> SemiStandardParabolic {
        SemiStandardParabolic::new(self.base.clone(), self.sigma()).expect("σ_T is right reduced")
    }

    /// Recovers the table from `w` via `a_i = |w(I_i) ∩ [1,a]|`.
    pub fn from_conjugator(base: &StandardParabolic, w: &SignedPermutation, a: usize) -> Result<Self> {
        let cols = base.columns();
        let mut row_a = Vec::with_capacity(cols.len());
        for interval in consecutive_intervals_raw(1, &cols) {
            row_a.push(interval.iter().filter(|&i| w.tau(i as usize) <= a).count());
        }
        Self::new(base.clone(), row_a)
    }

    /// `σ_T(P) ∩ H` as a pair of standard parabolics of the two factors.
    pub fn h_intersection(&self) -> HPair {
        match &self.base {
            StandardParabolic::Gl(_) => HPair {
                a_side: StandardParabolic::Gl(Composition::new(self.row_a.iter().copied())),
                b_side: StandardParabolic::Gl(Composition::new(self.row_b.iter().copied())),
            },
            StandardParabolic::Sp(_) => {
                let k = self.row_a.len() - 1;
                HPair {
                    a_side: StandardParabolic::Sp(SpComposition::new(self.row_a[..k].iter().copied(), self.row_a[k])),
                    b_side: StandardParabolic::Sp(SpComposition::new(self.row_b[..k].iter().copied(), self.row_b[k])),
                }
            }
        }
    }

    /// Roots of `M ∩ σ_T⁻¹Hσ_T` from the closed form: GL blocks of the interleaved
    /// composition `(a_1,b_1,…)`, and `H_{r_1,r_2}` on the tail.
    pub fn m_intersection_roots(&self) -> BTreeSet<Root> {
        let n = self.base.rank();
        let kind = self.base.kind();
        let sp_tail = kind == GroupKind::Sp;
        let k = if sp_tail { self.row_a.len() - 1 } else { self.row_a.len() };
        let interleaved: Vec<usize> = (0..k).flat_map(|j| [self.row_a[j], self.row_b[j]]).collect();
        let gl = Levi { kind, parts: Composition::new(interleaved).parts().to_vec(), tail: 0 };
        let mut out: BTreeSet<Root> = BTreeSet::new();
        let gl_rank = gl.rank();
        for r in all_roots(kind, n) {
            let support: Vec<usize> = (0..n).filter(|&i| r[i] != 0).collect();
            if support.iter().all(|&i| i < gl_rank) {
                if gl.contains_root(&r) {
                    out.insert(r);
                }
            } else if sp_tail && support.iter().all(|&i| i >= gl_rank) {
                let r1 = self.row_a[k];
                let side = |i: usize| i < gl_rank + r1;
                if support.iter().map(|&i| side(i)).all_equal() {
                    out.insert(r);
                }
            }
        }
        out
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} a={:?} b={:?}", self.base, self.row_a, self.row_b)
    }
}

/// A pair of standard parabolics of the two factors of `H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HPair {
    pub a_side: StandardParabolic,
    pub b_side: StandardParabolic,
}

impl fmt::Display for HPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{} × P{}", self.a_side, self.b_side)
    }
}

/// All tables over `base` with row sums `a` and `b`, in lexicographic order of the top row.
pub fn enumerate_tables(a: usize, b: usize, base: &StandardParabolic) -> Result<Vec<Table>> {
    if a + b != base.rank() {
        return domain(format!("a + b = {} but {base} has rank {}", a + b, base.rank()));
    }
    base.columns()
        .iter()
        .map(|&n| 0..=n)
        .multi_cartesian_product()
        .filter(|row| row.iter().sum::<usize>() == a)
        .map(|row| Table::new(base.clone(), row))
        .collect()
}

/// Root unipotents of `H` (all roots, or only positive ones, i.e. generators of
/// `P₀^H` together with a torus element), built through the embedding of `H`.
pub fn h_panel(kind: GroupKind, a: usize, b: usize, positive_only: bool) -> Vec<(Root, SquareMatrix)> {
    let n = a + b;
    let pick = |rank: usize| if positive_only { positive_roots(kind, rank) } else { all_roots(kind, rank) };
    let extend = |r: &Root, offset: usize| -> Root {
        let mut v = vec![0; n];
        v[offset..offset + r.len()].copy_from_slice(r);
        v
    };
    let mut out = Vec::new();
    match kind {
        GroupKind::Sp => {
            let (ia, ib) = (SquareMatrix::identity(2 * a), SquareMatrix::identity(2 * b));
            for r in pick(a) {
                out.push((extend(&r, 0), j_embed(&sp_root_unipotent(&r), &ib).expect("symplectic")));
            }
            for r in pick(b) {
                out.push((extend(&r, a), j_embed(&ia, &sp_root_unipotent(&r)).expect("symplectic")));
            }
            let t = |m: usize| (0..m).map(|i| int(2 + (i % 2) as i64)).collect::<Vec<_>>();
            out.push((vec![0; n], j_embed(&sp_torus(&t(a)), &sp_torus(&t(b))).expect("symplectic")));
        }
        GroupKind::Gl => {
            let (ia, ib) = (SquareMatrix::identity(a), SquareMatrix::identity(b));
            for r in pick(a) {
                out.push((extend(&r, 0), SquareMatrix::block_diag(&[&gl_root_unipotent(&r), &ib])));
            }
            for r in pick(b) {
                out.push((extend(&r, a), SquareMatrix::block_diag(&[&ia, &gl_root_unipotent(&r)])));
            }
            let d: Vec<_> = (0..n).map(|i| int(2 + (i % 2) as i64)).collect();
            out.push((vec![0; n], SquareMatrix::diag(&d)));
        }
    }
    out
}

/// Matrix membership in `H`: centralizer of `ι(I_a, −I_b)` for `Sp`, block diagonal for `GL`.
pub fn in_h(g: &SquareMatrix, kind: GroupKind, a: usize, b: usize) -> bool {
    match kind {
        GroupKind::Sp => {
            let s = h_involution(a, b);
            g.is_symplectic() && &s * g == g * &s
        }
        GroupKind::Gl => g.is_block_upper(&[a, b]) && g.transpose().is_block_upper(&[a, b]),
    }
}

/// `σ(P) ∩ H` computed at matrix level: the roots of `H` whose unipotent lies in `σ(P)`,
/// identified with a pair of standard parabolics of the factors.
pub fn intersect_with_h(p: &SemiStandardParabolic, a: usize, b: usize) -> Result<HPair> {
    let kind = p.base.kind();
    if a + b != p.base.rank() {
        return domain(format!("a + b = {} but the group has rank {}", a + b, p.base.rank()));
    }
    let panel = h_panel(kind, a, b, false);
    if !p.contains_all(&h_panel(kind, a, b, true)) {
        return Err(Error::NotRelevant(format!("{p} does not contain P₀^H")));
    }
    let inside: BTreeSet<Root> = panel.into_iter().filter(|(r, g)| r.iter().any(|&c| c != 0) && p.contains_matrix(g)).map(|(r, _)| r).collect();
    let side = |offset: usize, rank: usize| -> Result<StandardParabolic> {
        let restricted: BTreeSet<Root> = inside
            .iter()
            .filter(|r| r.iter().enumerate().all(|(i, &c)| c == 0 || (offset..offset + rank).contains(&i)))
            .map(|r| r[offset..offset + rank].to_vec())
            .collect();
        if rank == 0 {
            return Ok(match kind {
                GroupKind::Gl => StandardParabolic::Gl(Composition::new([])),
                GroupKind::Sp => StandardParabolic::Sp(SpComposition::new([], 0)),
            });
        }
        StandardParabolic::all(kind, rank)?
            .into_iter()
            .find(|q| q.levi().parabolic_roots().into_iter().collect::<BTreeSet<_>>() == restricted)
            .ok_or_else(|| Error::NotRelevant(format!("{p} ∩ H is not standard in H")))
    };
    Ok(HPair { a_side: side(0, a)?, b_side: side(a, b)? })
}

/// `ℱ_{a,b}` as tables: every standard `P` with each `T ∈ 𝒯_{a,b}^P`.
pub fn relevant_parabolics(a: usize, b: usize, kind: GroupKind) -> Result<Vec<(Table, SemiStandardParabolic)>> {
    let mut out = Vec::new();
    for base in StandardParabolic::all(kind, a + b)? {
        for t in enumerate_tables(a, b, &base)? {
            let p = t.parabolic();
            out.push((t, p));
        }
    }
    Ok(out)
}

/// An element of `P₀^H` outside `w(P)`, found as in the bijection proof.
pub fn obstruction(base: &StandardParabolic, w: &SignedPermutation, a: usize) -> Option<Root> {
    let n = base.rank();
    if let Some(&i) = w.sign_set().first() {
        let mut r = vec![0; n];
        r[w.tau(i) - 1] = 2;
        return Some(r);
    }
    let same_side = |x: usize, y: usize| (x <= a) == (y <= a);
    let blocks = consecutive_intervals_raw(1, &base.columns());
    for (s, t) in (0..blocks.len()).tuple_combinations() {
        for i in blocks[s].iter() {
            for j in blocks[t].iter() {
                let (wi, wj) = (w.tau(i as usize), w.tau(j as usize));
                if wi > wj && same_side(wi, wj) {
                    let mut r = vec![0; n];
                    r[wj - 1] = 1;
                    r[wi - 1] = -1;
                    return Some(r);
                }
            }
        }
    }
    None
}

#[derive(Clone, Debug, Serialize)]
pub struct BijectionReport {
    pub base: StandardParabolic,
    pub tables: usize,
    pub injective: bool,
    pub tables_contain_p0h: bool,
    pub obstructions_verified: bool,
    pub matrix_filter_matches: bool,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.injective && self.tables_contain_p0h && self.obstructions_verified && self.matrix_filter_matches
    }
}

/// Checks `T ↦ σ_T(P)` is a bijection onto `ℱ_{a,b}^P` for every standard `P`.
pub fn table_bijection_check(a: usize, b: usize, kind: GroupKind) -> Result<Vec<BijectionReport>> {
    let positive = h_panel(kind, a, b, true);
    let mut out = Vec::new();
    for base in StandardParabolic::all(kind, a + b)? {
        let tables = enumerate_tables(a, b, &base)?;
        let sigmas: Vec<SignedPermutation> = tables.iter().map(Table::sigma).collect();
        let distinct: BTreeSet<String> = sigmas.iter().map(|s| s.to_string()).collect();
        let round_trip = tables
            .iter()
            .zip(&sigmas)
            .all(|(t, s)| Table::from_conjugator(&base, s, a).is_ok_and(|u| &u == t));
        let injective = distinct.len() == tables.len() && round_trip;
        let tables_contain_p0h = tables.iter().all(|t| t.parabolic().contains_all(&positive));
        let mut obstructions_verified = true;
        let mut filtered = Vec::new();
        for w in base.reduced_conjugators() {
            let p = SemiStandardParabolic::new(base.clone(), w.clone())?;
            if p.contains_all(&positive) {
                filtered.push(w);
            } else if !sigmas.contains(&w) {
                let verified = obstruction(&base, &w, a).is_some_and(|r| {
                    let g = match kind {
                        GroupKind::Sp => sp_root_unipotent(&r),
                        GroupKind::Gl => gl_root_unipotent(&r),
                    };
                    in_h(&g, kind, a, b) && is_positive(&r) && !p.contains_matrix(&g)
                });
                obstructions_verified &= verified;
            }
        }
        let as_set = |v: &[SignedPermutation]| v.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>();
        let matrix_filter_matches = as_set(&filtered) == as_set(&sigmas);
        out.push(BijectionReport {
            base,
            tables: tables.len(),
            injective,
            tables_contain_p0h,
            obstructions_verified,
            matrix_filter_matches,
        });
    }
    Ok(out)
}

fn in_weyl_of_levi(w: &SignedPermutation, levi: &Levi) -> bool {
    let labels = levi.block_labels();
    (1..=w.rank()).all(|i| labels[i - 1] == labels[w.tau(i) - 1] && (labels[i - 1].is_none() || !w.in_c(i)))
}

fn embed_block(r: &Root, offset: usize, n: usize) -> Root {
    let mut v = vec![0; n];
    v[offset..offset + r.len()].copy_from_slice(r);
    v
}

#[derive(Clone, Debug, Serialize)]
pub struct RestrictionReport {
    pub q: SemiStandardParabolic,
    pub contained: usize,
    pub levi_parabolics: usize,
    pub parameterized: usize,
    pub bijective: bool,
}

/// For `Q = σ_T(P_α)`, checks that `P ↦ P ∩ L` is a bijection from the relevant
/// parabolics inside `Q` onto the semi-standard parabolics of `L` containing
/// `P₀^H ∩ L`, and that the refinement parameterization by sub-tables hits the same set.
pub fn restriction_bijection_check(t: &Table) -> Result<RestrictionReport> {
    let kind = t.base.kind();
    let (a, b) = (t.a(), t.b());
    let n = t.base.rank();
    let q = t.parabolic();
    let sigma = &q.conjugator;
    let q_roots = q.roots();
    let l_roots = q.levi_roots();
    let positive = h_panel(kind, a, b, true);

    // Relevant parabolics inside Q, mapped to their intersection with L.
    let mut images = BTreeSet::new();
    let mut contained = 0;
    for (_, p) in relevant_parabolics(a, b, kind)? {
        let roots = p.roots();
        if roots.is_subset(&q_roots) {
            contained += 1;
            images.insert(roots.intersection(&l_roots).cloned().collect::<Vec<_>>());
        }
    }

    // Semi-standard parabolics σ v (P_β ∩ M_α) of L containing P₀^H ∩ L, by matrices.
    let alpha_levi = t.base.levi();
    let in_l: Vec<&(Root, SquareMatrix)> = positive.iter().filter(|(r, _)| r.iter().all(|&c| c == 0) || l_roots.contains(r)).collect();
    let mut direct = BTreeSet::new();
    let refinements: Vec<StandardParabolic> = match &t.base {
        StandardParabolic::Sp(alpha) => sp_compositions_of(n)?
            .into_iter()
            .filter(|beta| crate::combinatorics::sp_refines(beta, alpha).unwrap_or(false))
            .map(StandardParabolic::Sp)
            .collect(),
        StandardParabolic::Gl(alpha) => compositions_of(n)?
            .into_iter()
            .filter(|beta| crate::combinatorics::refines(beta, alpha).unwrap_or(false))
            .map(StandardParabolic::Gl)
            .collect(),
    };
    for beta in refinements {
        let beta_roots: Vec<Root> = beta.levi().parabolic_roots().into_iter().filter(|r| alpha_levi.contains_root(r)).collect();
        for v in beta.reduced_conjugators() {
            if !in_weyl_of_levi(&v, &alpha_levi) {
                continue;
            }
            let conj = sigma.compose(&v);
            let contains = |g: &SquareMatrix| match &beta {
                StandardParabolic::Sp(c) => in_conjugate_sp_parabolic(g, &conj, c),
                StandardParabolic::Gl(c) => in_conjugate_gl_parabolic(g, &conj, c.parts()),
            };
            if in_l.iter().all(|(_, g)| contains(g)) {
                direct.insert(beta_roots.iter().map(|r| conj.act_root(r)).sorted().collect::<Vec<_>>());
            }
        }
    }

    // Sub-table parameterization (S_1, …, S_k, R) over refinements of α.
    let gl_parts: Vec<usize> = match &t.base {
        StandardParabolic::Sp(alpha) => alpha.parts().to_vec(),
        StandardParabolic::Gl(alpha) => alpha.parts().to_vec(),
    };
    let offsets: Vec<usize> = std::iter::once(0).chain(gl_parts.iter().scan(0, |acc, x| { *acc += x; Some(*acc) })).collect();
    let mut parameterized = BTreeSet::new();
    let mut count = 0;
    let mut per_block: Vec<Vec<Vec<Root>>> = Vec::new();
    for (j, &nj) in gl_parts.iter().enumerate() {
        let mut choices = Vec::new();
        for beta_j in compositions_of(nj)? {
            for s in enumerate_tables(t.row_a[j], t.row_b[j], &StandardParabolic::Gl(beta_j))? {
                let sp = s.parabolic();
                choices.push(sp.roots().iter().map(|r| embed_block(r, offsets[j], n)).collect());
            }
        }
        per_block.push(choices);
    }
    if let StandardParabolic::Sp(alpha) = &t.base {
        let tail_rank = alpha.anisotropic_rank();
        let r_col = t.row_a[alpha.k()];
        let mut tail_choices: Vec<Vec<Root>> = Vec::new();
        if tail_rank == 0 {
            tail_choices.push(Vec::new());
        } else {
            for gamma in sp_compositions_of(tail_rank)? {
                for rt in enumerate_tables(r_col, tail_rank - r_col, &StandardParabolic::Sp(gamma))? {
                    let rp = rt.parabolic();
                    tail_choices.push(rp.roots().iter().map(|r| embed_block(r, n - tail_rank, n)).collect());
                }
            }
        }
        per_block.push(tail_choices);
    }
    for combo in per_block.iter().map(|c| c.iter()).multi_cartesian_product() {
        count += 1;
        let roots: Vec<Root> = combo.into_iter().flatten().map(|r| sigma.act_root(r)).sorted().collect();
        parameterized.insert(roots);
    }

    let bijective = images.len() == contained && images == direct && parameterized == direct && parameterized.len() == count;
    Ok(RestrictionReport { q, contained, levi_parabolics: direct.len(), parameterized: count, bijective })
}

/// `2ρ_{Q∩σ⁻¹Hσ}`: sum of `σ⁻¹β` over roots `β` of `H` with `σ⁻¹β` a root of `U_Q`.
pub fn two_rho_h_intersection(q: &SpComposition, sigma: &SignedPermutation, a: usize) -> RationalVector {
    let n = q.total();
    let levi = Levi::sp(q);
    let inv = sigma.inverse();
    let mut sum = vec![0i64; n];
    for beta in all_roots(GroupKind::Sp, n) {
        let in_h = beta.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i < a).all_equal();
        if !in_h {
            continue;
        }
        let pulled = inv.act_root(&beta);
        if is_positive(&pulled) && !levi.contains_root(&pulled) {
            for (s, c) in sum.iter_mut().zip(&pulled) {
                *s += c;
            }
        }
    }
    RationalVector::from_ints(&sum)
}

/// Closed form of [`two_rho_h_intersection`] for `σ = σ_T`: `2ρ` of the two
/// factors' parabolics placed on `A` and `B` and pulled back by `σ_T`.
pub fn two_rho_from_table(t: &Table) -> Result<RationalVector> {
    let pair = t.h_intersection();
    let (StandardParabolic::Sp(pa), StandardParabolic::Sp(pb)) = (&pair.a_side, &pair.b_side) else {
        return domain("closed form is for Sp tables");
    };
    let two = |c: &SpComposition| if c.total() == 0 { Vec::new() } else { rho_p(c).scale(int(2)).0 };
    let on_h: Vec<_> = two(pa).into_iter().chain(two(pb)).collect();
    let sigma = t.sigma();
    Ok(RationalVector((1..=t.base.rank()).map(|i| on_h[sigma.tau(i) - 1]).collect()))
}

/// `2ρ_{Q∩σ⁻¹Hσ}` for `Q = P_{(2n;m)}`, `a = m+n`, `b = n`, where the table's
/// `b`-row is `(a₁, n−a₁)`: `((2m+a₁+1)^{(2n−a₁)}, (2n+1−a₁)^{(a₁)}, 0^{(m)})`.
pub fn two_rho_two_block(m: usize, n: usize, a1: usize) -> RationalVector {
    let (mi, ni, ai) = (m as i64, n as i64, a1 as i64);
    let mut v = vec![2 * mi + ai + 1; 2 * n - a1];
    v.extend(std::iter::repeat_n(2 * ni + 1 - ai, a1));
    v.extend(std::iter::repeat_n(0, m));
    RationalVector::from_ints(&v)
}

/// `ρ_{Q,σ} = ρ_Q − 2ρ_{Q∩σ⁻¹Hσ}`.
pub fn rho_q_sigma(q: &SpComposition, sigma: &SignedPermutation, a: usize) -> RationalVector {
    &rho_p(q) - &two_rho_h_intersection(q, sigma, a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> StandardParabolic {
        StandardParabolic::Sp(s.parse().unwrap())
    }

    fn gl(s: &str) -> StandardParabolic {
        StandardParabolic::Gl(s.parse().unwrap())
    }

    #[test]
    fn table_counts() {
        let t = enumerate_tables(1, 2, &gl("2,1")).unwrap();
        assert_eq!(t.iter().map(|t| t.row_a.clone()).collect::<Vec<_>>(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(enumerate_tables(2, 3, &gl("5")).unwrap().len(), 1);
        assert_eq!(enumerate_tables(2, 2, &sp("2;2")).unwrap().len(), 3);
        assert_eq!(enumerate_tables(1, 1, &sp("1;1")).unwrap().len(), 2);
        assert_eq!(enumerate_tables(1, 1, &gl("1,1")).unwrap().len(), 2);
        assert!(enumerate_tables(1, 1, &gl("3")).is_err());
    }

    #[test]
    fn sigma_examples() {
        let t = Table::new(gl("2,1"), vec![1, 1]).unwrap();
        assert_eq!(t.row_b, vec![1, 0]);
        assert_eq!(t.sigma().one_line(), vec![1, 3, 2]);
        let t = Table::new(gl("2,1"), vec![2, 1]).unwrap();
        assert!(t.sigma().is_identity());
    }

    #[test]
    fn gl_intersection_example() {
        let t = Table::new(gl("2,1"), vec![1, 1]).unwrap();
        let closed = t.h_intersection();
        assert_eq!(closed.to_string(), "P(1,1) × P(1)");
        assert_eq!(intersect_with_h(&t.parabolic(), 2, 1).unwrap(), closed);
    }

    #[test]
    fn sp_not_regular_table_example() {
        // m = n = 1: Q = (1;2), a = 2, b = 1.
        let t = Table::new(sp("1;2"), vec![0, 2]).unwrap();
        assert_eq!(t.row_b, vec![1, 0]);
        let pair = intersect_with_h(&t.parabolic(), 2, 1).unwrap();
        assert_eq!(pair, t.h_intersection());
        assert_eq!(pair.to_string(), "P(;2) × P(1;0)");
        assert_eq!(two_rho_h_intersection(&"1;2".parse().unwrap(), &t.sigma(), 2), RationalVector::from_ints(&[2, 0, 0]));
    }

    #[test]
    fn full_group_intersection_is_h() {
        for (a, b) in [(1, 2), (2, 2)] {
            let t = enumerate_tables(a, b, &sp(&format!(";{}", a + b))).unwrap();
            assert_eq!(t.len(), 1);
            let pair = intersect_with_h(&t[0].parabolic(), a, b).unwrap();
            assert_eq!(pair.to_string(), format!("P(;{a}) × P(;{b})"));
        }
    }

    #[test]
    fn intersections_match_closed_form() {
        for kind in [GroupKind::Gl, GroupKind::Sp] {
            for n in 1..=3 {
                for a in 0..=n {
                    for (t, p) in relevant_parabolics(a, n - a, kind).unwrap() {
                        assert_eq!(intersect_with_h(&p, a, n - a).unwrap(), t.h_intersection(), "{t}");
                    }
                }
            }
        }
    }

    #[test]
    fn h_panel_lies_in_h_and_matches_root_unipotents() {
        for (a, b) in [(1, 1), (2, 1), (1, 3), (0, 2)] {
            for (r, g) in h_panel(GroupKind::Sp, a, b, false) {
                assert!(in_h(&g, GroupKind::Sp, a, b));
                if r.iter().any(|&c| c != 0) {
                    assert_eq!(g, sp_root_unipotent(&r));
                }
            }
            for (_, g) in h_panel(GroupKind::Gl, a, b, false) {
                assert!(in_h(&g, GroupKind::Gl, a, b));
            }
        }
    }

    #[test]
    fn bijections_hold_exhaustively() {
        for kind in [GroupKind::Gl, GroupKind::Sp] {
            for n in 1..=3 {
                for a in 0..=n {
                    for rep in table_bijection_check(a, n - a, kind).unwrap() {
                        assert!(rep.passed(), "{kind} a={a} b={} {:?}", n - a, rep);
                    }
                }
            }
        }
    }

    #[test]
    fn m_intersection_closed_form_matches_matrices() {
        for n in 1..=3 {
            for a in 0..=n {
                let b = n - a;
                for (t, p) in relevant_parabolics(a, b, GroupKind::Sp).unwrap() {
                    let sigma = &p.conjugator;
                    let pi: Vec<usize> = {
                        let fwd = crate::matrix::doubled_permutation(sigma);
                        let mut inv = vec![0; fwd.len()];
                        for (i, &j) in fwd.iter().enumerate() {
                            inv[j] = i;
                        }
                        inv
                    };
                    let by_matrix: BTreeSet<Root> = p
                        .base
                        .levi()
                        .roots()
                        .into_iter()
                        .filter(|r| in_h(&sp_root_unipotent(r).reindexed(&pi), GroupKind::Sp, a, b))
                        .collect();
                    assert_eq!(by_matrix, t.m_intersection_roots(), "{t}");
                }
            }
        }
    }

    #[test]
    fn restriction_bijections() {
        for (a, b) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            for (t, _) in relevant_parabolics(a, b, GroupKind::Sp).unwrap() {
                let rep = restriction_bijection_check(&t).unwrap();
                assert!(rep.bijective, "{t}: {rep:?}");
            }
        }
        for (a, b) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1)] {
            for (t, _) in relevant_parabolics(a, b, GroupKind::Gl).unwrap() {
                let rep = restriction_bijection_check(&t).unwrap();
                assert!(rep.bijective, "{t}: {rep:?}");
            }
        }
    }

    #[test]
    fn two_rho_closed_forms() {
        for n in 1..=3 {
            for a in 0..=n {
                for (t, p) in relevant_parabolics(a, n - a, GroupKind::Sp).unwrap() {
                    let StandardParabolic::Sp(q) = &t.base else { unreachable!() };
                    assert_eq!(two_rho_h_intersection(q, &p.conjugator, a), two_rho_from_table(&t).unwrap(), "{t}");
                }
            }
        }
        for m in 0..=2 {
            for n in 1..=2 {
                let q: SpComposition = SpComposition::new([2 * n], m);
                for a1 in n.saturating_sub(m)..=n {
                    let t = Table::new(StandardParabolic::Sp(q.clone()), vec![2 * n - a1, m + a1 - n]).unwrap();
                    assert_eq!(two_rho_h_intersection(&q, &t.sigma(), m + n), two_rho_two_block(m, n, a1));
                }
            }
        }
    }
}
