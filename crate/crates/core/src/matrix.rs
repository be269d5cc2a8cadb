//! Exact rational matrices realizing `Sp_N ⊂ GL_{2N}` with
//! `J_N = [[0, w_N], [−w_N, 0]]`, the embeddings `ι` and `𝔧`, root unipotents,
//! and block-pattern parabolic membership.

use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

use crate::combinatorics::SpComposition;
use crate::error::{domain, Error, Result};
use crate::roots::{fmt_rat, int, Rat};
use crate::weyl::SignedPermutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareMatrix {
    n: usize,
    entries: Vec<Rat>,
}

impl SquareMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, entries: vec![Rat::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Rat>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return domain("matrix rows must all have length equal to the row count");
        }
        Ok(Self { n, entries: rows.concat() })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(&rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect::<Vec<_>>())
    }

    pub fn diag(d: &[Rat]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, x) in d.iter().enumerate() {
            m.set(i, i, *x);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// 0-based entry.
    pub fn get(&self, i: usize, j: usize) -> Rat {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rat) {
        self.entries[i * self.n + j] = x;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { n: self.n, entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, c: Rat) -> Self {
        Self { n: self.n, entries: self.entries.iter().map(|a| a * c).collect() }
    }

    /// Gauss–Jordan inverse over `ℚ`.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero()).ok_or_else(|| Error::Domain("singular matrix".into()))?;
            for j in 0..n {
                let (x, y) = (a.get(col, j), a.get(pivot, j));
                a.set(col, j, y);
                a.set(pivot, j, x);
                let (x, y) = (inv.get(col, j), inv.get(pivot, j));
                inv.set(col, j, y);
                inv.set(pivot, j, x);
            }
            let p = a.get(col, col).recip();
            for j in 0..n {
                a.set(col, j, a.get(col, j) * p);
                inv.set(col, j, inv.get(col, j) * p);
            }
            for r in 0..n {
                let f = a.get(r, col);
                if r == col || f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    a.set(r, j, a.get(r, j) - f * a.get(col, j));
                    inv.set(r, j, inv.get(r, j) - f * inv.get(col, j));
                }
            }
        }
        Ok(inv)
    }

    /// `diag(blocks…)`.
    pub fn block_diag(blocks: &[&SquareMatrix]) -> Self {
        let n = blocks.iter().map(|b| b.n).sum();
        let mut m = Self::zeros(n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    m.set(off + i, off + j, b.get(i, j));
                }
            }
            off += b.n;
        }
        m
    }

    /// `ᵗg J g = J` for `J = J_{n/2}`.
    pub fn is_symplectic(&self) -> bool {
        if !self.n.is_multiple_of(2) {
            return false;
        }
        let j = j_form(self.n / 2);
        &(&self.transpose() * &j) * self == j
    }

    /// `X ∈ 𝔰𝔭`: `ᵗX J + J X = 0`.
    pub fn is_in_sp_lie_algebra(&self) -> bool {
        if !self.n.is_multiple_of(2) {
            return false;
        }
        let j = j_form(self.n / 2);
        (&self.transpose() * &j).add(&(&j * self)).is_zero()
    }

    /// Block-upper-triangular for consecutive diagonal blocks of the given sizes.
    pub fn is_block_upper(&self, sizes: &[usize]) -> bool {
        let block: Vec<usize> = sizes.iter().enumerate().flat_map(|(b, &s)| std::iter::repeat_n(b, s)).collect();
        debug_assert_eq!(block.len(), self.n);
        (0..self.n).all(|i| (0..self.n).all(|j| block[i] <= block[j] || self.get(i, j).is_zero()))
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.is_block_upper(&vec![1; self.n])
    }

    /// `P_{π} g P_π^{-1}`-style reindexing: entry `(p,q)` of the result is `g_{π(p),π(q)}`.
    pub fn reindexed(&self, pi: &[usize]) -> Self {
        let mut m = Self::zeros(self.n);
        for p in 0..self.n {
            for q in 0..self.n {
                m.set(p, q, self.get(pi[p], pi[q]));
            }
        }
        m
    }
}

impl Mul for &SquareMatrix {
    type Output = SquareMatrix;
    fn mul(self, rhs: Self) -> SquareMatrix {
        let n = self.n;
        let mut out = SquareMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| fmt_rat(&self.get(i, j))).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// The antidiagonal matrix of ones `w_m`.
pub fn w_antidiag(m: usize) -> SquareMatrix {
    let mut w = SquareMatrix::zeros(m);
    for i in 0..m {
        w.set(i, m - 1 - i, Rat::one());
    }
    w
}

/// `J_N = [[0, w_N], [−w_N, 0]]`, a `2N × 2N` matrix.
pub fn j_form(n: usize) -> SquareMatrix {
    let mut j = SquareMatrix::zeros(2 * n);
    for i in 0..n {
        j.set(i, 2 * n - 1 - i, Rat::one());
        j.set(n + i, n - 1 - i, -Rat::one());
    }
    j
}

/// `g* = w_m ᵗg⁻¹ w_m`.
pub fn star(g: &SquareMatrix) -> Result<SquareMatrix> {
    let w = w_antidiag(g.dim());
    Ok(&(&w * &g.inverse()?.transpose()) * &w)
}

/// `ι(g_1,…,g_k; h) = diag(g_1,…,g_k, h, g_k*,…,g_1*)`.
pub fn iota(gs: &[SquareMatrix], h: &SquareMatrix) -> Result<SquareMatrix> {
    if h.dim() > 0 && !h.is_symplectic() {
        return Err(Error::NotSymplectic("the Sp_r slot of ι".into()));
    }
    let stars = gs.iter().rev().map(star).collect::<Result<Vec<_>>>()?;
    let blocks: Vec<&SquareMatrix> = gs.iter().chain(std::iter::once(h)).chain(stars.iter()).collect();
    Ok(SquareMatrix::block_diag(&blocks))
}

/// `𝔧(h_1, h_2)`: `h_1 = [[A,B],[C,D]] ∈ Sp_a` on the outer coordinates, `h_2 ∈ Sp_b` in the middle.
pub fn j_embed(h1: &SquareMatrix, h2: &SquareMatrix) -> Result<SquareMatrix> {
    for (h, name) in [(h1, "h1"), (h2, "h2")] {
        if h.dim() % 2 != 0 || (h.dim() > 0 && !h.is_symplectic()) {
            return Err(Error::NotSymplectic(name.into()));
        }
    }
    let (a, b) = (h1.dim() / 2, h2.dim() / 2);
    let n = a + b;
    let mut g = SquareMatrix::zeros(2 * n);
    let outer = |i: usize| if i < a { i } else { i + 2 * b };
    for i in 0..2 * a {
        for j in 0..2 * a {
            g.set(outer(i), outer(j), h1.get(i, j));
        }
    }
    for i in 0..2 * b {
        for j in 0..2 * b {
            g.set(a + i, a + j, h2.get(i, j));
        }
    }
    Ok(g)
}

/// `ι(I_a, −I_b) = diag(I_a, −I_{2b}, I_a)`, whose centralizer is `H_{a,b}`.
pub fn h_involution(a: usize, b: usize) -> SquareMatrix {
    let d: Vec<Rat> = (0..2 * (a + b)).map(|i| if i < a || i >= a + 2 * b { int(1) } else { int(-1) }).collect();
    SquareMatrix::diag(&d)
}

/// Row index (0-based) of the weight `±e_i` (1-based `i`) in the standard torus of `Sp_N`.
pub fn weight_row(n: usize, i: usize, positive: bool) -> usize {
    if positive {
        i - 1
    } else {
        2 * n - i
    }
}

/// `x_α(1) ∈ Sp_N` for a type C root `α` given in coordinates.
pub fn sp_root_unipotent(root: &[i64]) -> SquareMatrix {
    let n = root.len();
    let support: Vec<usize> = (0..n).filter(|&i| root[i] != 0).collect();
    // Write α = w_p − w_q with weights w_p, w_q of the defining representation.
    let (p, q) = match support.as_slice() {
        [i] => {
            let pos = root[*i] > 0;
            (weight_row(n, i + 1, pos), weight_row(n, i + 1, !pos))
        }
        [i, j] => (weight_row(n, i + 1, root[*i] > 0), weight_row(n, j + 1, root[*j] < 0)),
        _ => panic!("not a root: {root:?}"),
    };
    let mut x0 = SquareMatrix::zeros(2 * n);
    x0.set(p, q, Rat::one());
    let j = j_form(n);
    let sigma = &(&j * &x0.transpose()) * &j;
    let mut x = x0.add(&sigma);
    if x.is_zero() {
        x = x0;
    }
    let lead = x.get(p, q);
    let x = x.scale(lead.recip());
    debug_assert!(x.is_in_sp_lie_algebra());
    debug_assert!((&x * &x).is_zero());
    SquareMatrix::identity(2 * n).add(&x)
}

/// `I + E_{i,j}` in `GL_N` for the root `e_i − e_j`.
pub fn gl_root_unipotent(root: &[i64]) -> SquareMatrix {
    let n = root.len();
    let i = root.iter().position(|&c| c == 1).expect("root e_i - e_j");
    let j = root.iter().position(|&c| c == -1).expect("root e_i - e_j");
    let mut m = SquareMatrix::identity(n);
    m.set(i, j, Rat::one());
    m
}

/// `diag(t_1,…,t_N, t_N⁻¹,…,t_1⁻¹)`.
pub fn sp_torus(t: &[Rat]) -> SquareMatrix {
    let d: Vec<Rat> = t.iter().copied().chain(t.iter().rev().map(|x| x.recip())).collect();
    SquareMatrix::diag(&d)
}

/// Diagonal block sizes `(n_1,…,n_k, 2r, n_k,…,n_1)` of `P_α ⊂ Sp_N`.
pub fn sp_block_sizes(alpha: &SpComposition) -> Vec<usize> {
    let p = alpha.parts();
    p.iter()
        .copied()
        .chain(std::iter::once(2 * alpha.anisotropic_rank()))
        .chain(p.iter().rev().copied())
        .filter(|&s| s > 0)
        .collect()
}

/// The permutation of the `2N` basis vectors induced by `w`: `e_i ↦ ±e_{τ(i)}`.
pub fn doubled_permutation(w: &SignedPermutation) -> Vec<usize> {
    let n = w.rank();
    let mut pi = vec![0; 2 * n];
    for i in 1..=n {
        let pos = !w.in_c(i);
        pi[weight_row(n, i, true)] = weight_row(n, w.tau(i), pos);
        pi[weight_row(n, i, false)] = weight_row(n, w.tau(i), !pos);
    }
    pi
}

/// `g ∈ w(P_α)`, i.e. `w⁻¹ g w ∈ P_α`, by block pattern.
pub fn in_conjugate_sp_parabolic(g: &SquareMatrix, w: &SignedPermutation, alpha: &SpComposition) -> bool {
    g.reindexed(&doubled_permutation(w)).is_block_upper(&sp_block_sizes(alpha))
}

/// `g ∈ w(P_α)` in `GL_N`.
pub fn in_conjugate_gl_parabolic(g: &SquareMatrix, w: &SignedPermutation, sizes: &[usize]) -> bool {
    let pi: Vec<usize> = (1..=w.rank()).map(|i| w.tau(i) - 1).collect();
    g.reindexed(&pi).is_block_upper(sizes)
}
