//! Exponents at the residue point for `G = Sp_{m+2n}`, `M = (1^m;2n)`,
//! `L_m = (1^m,2n;0)` and `H = Sp_{m+n} × Sp_n`.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::affine::{AffineForm, AffineVector};
use crate::combinatorics::{sp_compositions_of, Composition, SpComposition};
use crate::error::{domain, Error, Result};
use crate::parabolic::{enumerate_tables, rho_q_sigma, two_rho_from_table, StandardParabolic, Table};
use crate::roots::{coweights, int, is_negative_exponent, project, rat, rho_p, Rat, RationalVector, Root};
use crate::weyl::{dpartitions, w_from_d, DPartition, SignedPermutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueContext {
    pub m: usize,
    pub n: usize,
}

impl ResidueContext {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if n == 0 {
            return domain("n must be positive");
        }
        Ok(Self { m, n })
    }

    /// `N = m + 2n`.
    pub fn rank(&self) -> usize {
        self.m + 2 * self.n
    }

    /// Number of formal variables `λ_1,…,λ_m,t`.
    pub fn vars(&self) -> usize {
        self.m + 1
    }

    pub fn a(&self) -> usize {
        self.m + self.n
    }

    pub fn b(&self) -> usize {
        self.n
    }

    /// `(m,…,1, c^{(2n)})`.
    fn staircase(&self, c: Rat) -> RationalVector {
        let mut v: Vec<Rat> = (1..=self.m).rev().map(|x| int(x as i64)).collect();
        v.extend(std::iter::repeat_n(c, 2 * self.n));
        RationalVector(v)
    }

    pub fn lambda0(&self) -> RationalVector {
        self.staircase(rat(1, 2))
    }

    pub fn mu0(&self) -> RationalVector {
        self.staircase(Rat::zero())
    }

    pub fn theta0(&self) -> RationalVector {
        let mut v = vec![Rat::zero(); self.m];
        v.extend(std::iter::repeat_n(rat(-1, 2), 2 * self.n));
        RationalVector(v)
    }

    /// Values of `(λ_1,…,λ_m,t)` at `λ₀`.
    pub fn lambda0_point(&self) -> Vec<Rat> {
        (1..=self.m).rev().map(|x| int(x as i64)).chain([rat(1, 2)]).collect()
    }

    /// Blocks `(1^m, 2n)` of `L_m`.
    pub fn l_m_blocks(&self) -> Composition {
        Composition::new(std::iter::repeat_n(1, self.m).chain([2 * self.n]))
    }

    pub fn l_m(&self) -> SpComposition {
        SpComposition::new(std::iter::repeat_n(1, self.m).chain([2 * self.n]), 0)
    }

    /// `M = (1^m; 2n)`.
    pub fn levi_m(&self) -> SpComposition {
        SpComposition::new(std::iter::repeat_n(1, self.m), 2 * self.n)
    }

    /// `Q_i = (1^i, 2n, 1^{m−i}; 0)`.
    pub fn q_i(&self, i: usize) -> SpComposition {
        SpComposition::new(
            std::iter::repeat_n(1, i).chain([2 * self.n]).chain(std::iter::repeat_n(1, self.m - i)),
            0,
        )
    }

    /// The symbolic exponent `(λ_1,…,λ_m, t^{(2n)})`.
    pub fn symbolic_lambda(&self) -> AffineVector {
        let v = self.vars();
        let mut out: Vec<AffineForm> = (0..self.m).map(|j| AffineForm::var(v, j)).collect();
        out.extend(std::iter::repeat_n(AffineForm::var(v, self.m), 2 * self.n));
        AffineVector(out)
    }

    /// `ρ_i`: identity on `[1,i]`, shifts `[i+1,m]` past the `2n` block, which moves to `[i+1,i+2n]`.
    pub fn rho_i(&self, i: usize) -> SignedPermutation {
        let (m, n2) = (self.m, 2 * self.n);
        let tau: Vec<usize> = (1..=self.rank())
            .map(|j| if j <= i { j } else if j <= m { j + n2 } else { j - (m - i) })
            .collect();
        SignedPermutation::new(&tau, &[]).expect("permutation")
    }

    /// `w_{L_m} = 𝔠₀ s_{α₀}`: negates `[1,m]` and reverses-and-negates the `2n` block.
    pub fn w_lm(&self) -> SignedPermutation {
        let (m, big) = (self.m, self.rank());
        let tau: Vec<usize> = (1..=big).map(|j| if j <= m { j } else { big + m + 1 - j }).collect();
        SignedPermutation::new(&tau, &(1..=big).collect::<Vec<_>>()).expect("signed permutation")
    }

    /// `ρ_i w_{L_m} λ₀`, the cuspidal exponent along `Q_i`.
    pub fn cuspidal_exponent(&self, i: usize) -> RationalVector {
        self.rho_i(i).compose(&self.w_lm()).act(&self.lambda0()).expect("rank")
    }
}

/// `q(λ) = (t−1/2)(λ_m−1)∏(λ_i−λ_{i+1}−1)`, as its list of factors.
pub fn q_poly(ctx: &ResidueContext) -> Vec<AffineForm> {
    let v = ctx.vars();
    let one = AffineForm::constant(v, int(1));
    let mut out = vec![&AffineForm::var(v, ctx.m) - &AffineForm::constant(v, rat(1, 2))];
    if ctx.m >= 1 {
        out.push(&AffineForm::var(v, ctx.m - 1) - &one);
    }
    for i in 0..ctx.m.saturating_sub(1) {
        out.push(&(&AffineForm::var(v, i) - &AffineForm::var(v, i + 1)) - &one);
    }
    out
}

/// An element `w_𝒟 ∈ ₗW_M′` with `i(𝒟)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WPrime {
    pub partition: DPartition,
    pub w: SignedPermutation,
    pub i: usize,
}

/// `ₗW_M′`: the `w_𝒟` over blocks `(1^m,2n)` with `m+1 ∈ D_i` for some `i`.
pub fn wprime_set(ctx: &ResidueContext, q: &SpComposition) -> Result<Vec<WPrime>> {
    if q.total() != ctx.rank() {
        return Err(Error::RankMismatch { expected: ctx.rank(), found: q.total() });
    }
    let blocks = ctx.l_m_blocks();
    dpartitions(&blocks, q)
        .into_iter()
        .filter_map(|d| d.d_index_of(ctx.m + 1).map(|i| (d, i)))
        .map(|(d, i)| Ok(WPrime { w: w_from_d(&d, &blocks, q)?, partition: d, i }))
        .collect()
}

/// The distinguished table `S_{Q,i}`.
pub fn sigma_table(ctx: &ResidueContext, q: &SpComposition, i: usize) -> Result<Table> {
    let n = ctx.n;
    let base = StandardParabolic::Sp(q.clone());
    let mut row_a = base.columns();
    let slot = if i == 0 { q.k() } else { i - 1 };
    if i > q.k() || row_a[slot] < n {
        return Err(Error::Infeasible(format!("S_(Q,{i}) needs a column of size ≥ {n} in {q}")));
    }
    row_a[slot] -= n;
    Table::new(base, row_a)
}

/// `ρ[Q,w] = ρ_Q − 2ρ_{Q∩σ⁻¹Hσ}` for `σ = σ_{Q,w}`, from the half-sum oracle.
pub fn rho_qw(ctx: &ResidueContext, q: &SpComposition, i: usize) -> Result<RationalVector> {
    let t = sigma_table(ctx, q, i)?;
    let by_roots = rho_q_sigma(q, &t.sigma(), ctx.a());
    debug_assert_eq!(by_roots, &rho_p(q) - &two_rho_from_table(&t)?);
    Ok(by_roots)
}

/// `η[Q,w;λ] = (wλ + ρ[Q,w])_Q` as affine forms in `(λ_1,…,λ_m,t)`.
pub fn eta(ctx: &ResidueContext, q: &SpComposition, wp: &WPrime, lambda: &AffineVector) -> Result<AffineVector> {
    let moved = AffineVector(wp.w.act_slice(&lambda.0)?);
    let shifted = moved.add_constant(&rho_qw(ctx, q, wp.i)?);
    let blocks: Vec<(usize, usize)> = q.gl_blocks().iter().map(|b| (b.lo as usize - 1, b.len())).collect();
    Ok(shifted.project_blocks(&blocks, ctx.vars()))
}

/// The point `μ₀ + θ_w` in `(λ_1,…,λ_m,t)`: `t = 0` if `i = 0`, else `t = −1/2`.
pub fn mu0_theta_point(ctx: &ResidueContext, i: usize) -> Vec<Rat> {
    let t = if i == 0 { Rat::zero() } else { rat(-1, 2) };
    (1..=ctx.m).rev().map(|x| int(x as i64)).chain([t]).collect()
}

/// `η[Q,w;μ₀]`, i.e. the exponent evaluated at `w(μ₀ + θ_w)`.
pub fn eta_at_mu0(ctx: &ResidueContext, q: &SpComposition, wp: &WPrime) -> Result<RationalVector> {
    Ok(eta(ctx, q, wp, &ctx.symbolic_lambda())?.eval(&mu0_theta_point(ctx, wp.i)))
}

/// Coordinate index of the `ρ_i` attached to `i = i(𝒟)`: the identity for `i = 0`,
/// otherwise the `2n` block placed at the start of block `i` of `Q` (any placement
/// inside that block has the same `Q`-projection).
pub fn rho_index(ctx: &ResidueContext, q: &SpComposition, i: usize) -> usize {
    if i == 0 {
        ctx.m
    } else {
        q.partial_sums()[i - 1]
    }
}

/// `⟨ρ[Q,w], ϖ_{ν_ℓ}⟩` from the closed form: `ν(ν−2m−1)/2` if `i = 0` or `ℓ < i`,
/// else `(ν(ν−2m−4n−1) + 4n(m+n))/2`.
pub fn rho_qw_pairing_closed(ctx: &ResidueContext, nu: usize, ell: usize, i: usize) -> Rat {
    let (m, n, nu) = (ctx.m as i64, ctx.n as i64, nu as i64);
    if i == 0 || ell < i {
        rat(nu * (nu - 2 * m - 1), 2)
    } else {
        rat(nu * (nu - 2 * m - 4 * n - 1) + 4 * n * (m + n), 2)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExpexpRecord {
    pub q: SpComposition,
    pub w: SignedPermutation,
    pub i: usize,
    pub rho_qw_q: RationalVector,
    pub minus_rho_i_lambda0_q: RationalVector,
    pub closed_form_pairings: RationalVector,
    pub holds: bool,
}

/// `ρ[Q,w]_Q = −(ρ_i λ₀)_Q`, with the left side from the half-sum oracle, the right
/// side directly, and the coweight pairings also checked against the closed form.
pub fn verify_expexp(ctx: &ResidueContext, q: &SpComposition, wp: &WPrime) -> Result<ExpexpRecord> {
    let lhs = project(&rho_qw(ctx, q, wp.i)?, q)?.lambda_q;
    let rhs = -&project(&ctx.rho_i(rho_index(ctx, q, wp.i)).act(&ctx.lambda0())?, q)?.lambda_q;
    let cws = coweights(q);
    let closed: Vec<Rat> = cws.iter().enumerate().map(|(l, c)| rho_qw_pairing_closed(ctx, c.nu, l + 1, wp.i)).collect();
    let pairings_ok = cws.iter().zip(&closed).all(|(c, v)| c.pairing(&lhs.0) == *v);
    Ok(ExpexpRecord {
        q: q.clone(),
        w: wp.w.clone(),
        i: wp.i,
        holds: lhs == rhs && pairings_ok,
        rho_qw_q: lhs,
        minus_rho_i_lambda0_q: rhs,
        closed_form_pairings: RationalVector(closed),
    })
}

/// Proper standard parabolics of `Sp_N`.
pub fn proper_parabolics(ctx: &ResidueContext) -> Result<Vec<SpComposition>> {
    Ok(sp_compositions_of(ctx.rank())?.into_iter().filter(|q| !q.is_full()).collect())
}

pub(crate) fn par_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// [`verify_expexp`] over every proper `Q` and `w ∈ ₗW_M′`.
pub fn expexp_all(ctx: &ResidueContext) -> Result<Vec<ExpexpRecord>> {
    let qs = proper_parabolics(ctx)?;
    let per_q = par_map(&qs, |q| -> Result<Vec<ExpexpRecord>> {
        wprime_set(ctx, q)?.iter().map(|wp| verify_expexp(ctx, q, wp)).collect()
    });
    Ok(per_q.into_iter().collect::<Result<Vec<_>>>()?.into_iter().flatten().collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct ZeroExponentRecord {
    pub q: SpComposition,
    pub w: SignedPermutation,
    pub partition: String,
    pub i: usize,
    /// `⟨η[Q,w;μ₀], ϖ_{ν_ℓ}⟩` for `ℓ = 1,…,k`.
    pub pairings: RationalVector,
    /// Whether the predicted-zero conditions hold for each `ℓ`.
    pub predicted_zero: Vec<bool>,
    pub is_zero: bool,
    /// All pairings `≤ 0`, zero exactly when predicted, `≤ −2n` when `ℓ ≥ i ≥ 1`,
    /// and `η = 0` exactly when `w = e` and `r ≥ 2n`.
    pub consistent: bool,
}

/// Signs of `η[Q,w;μ₀]` against each coweight, for every proper `Q` and `w ∈ ₗW_M′`.
pub fn classify_zero_exponents(ctx: &ResidueContext) -> Result<Vec<ZeroExponentRecord>> {
    let qs = proper_parabolics(ctx)?;
    let per_q = par_map(&qs, |q| -> Result<Vec<ZeroExponentRecord>> {
        let mut out = Vec::new();
        for wp in wprime_set(ctx, q)? {
            let eta = eta_at_mu0(ctx, q, &wp)?;
            let cws = coweights(q);
            let pairings: Vec<Rat> = cws.iter().map(|c| c.pairing(&eta.0)).collect();
            let mut predicted_zero = Vec::new();
            let mut consistent = true;
            for (l0, (c, p)) in cws.iter().zip(&pairings).enumerate() {
                let ell = l0 + 1;
                let first: std::collections::BTreeSet<usize> = wp.partition.d[..ell].iter().flatten().copied().collect();
                let cond = (wp.i == 0 || ell < wp.i) && first == (1..=c.nu).collect();
                predicted_zero.push(cond);
                consistent &= !p.is_positive() && (p.is_zero() == cond);
                if wp.i >= 1 && ell >= wp.i {
                    consistent &= *p <= -int(2 * ctx.n as i64);
                }
            }
            let is_zero = eta.is_zero();
            consistent &= is_zero == (wp.w.is_identity() && q.anisotropic_rank() >= 2 * ctx.n);
            out.push(ZeroExponentRecord {
                q: q.clone(),
                w: wp.w.clone(),
                partition: wp.partition.to_string(),
                i: wp.i,
                pairings: RationalVector(pairings),
                predicted_zero,
                is_zero,
                consistent,
            });
        }
        Ok(out)
    });
    Ok(per_q.into_iter().collect::<Result<Vec<_>>>()?.into_iter().flatten().collect())
}

/// `f(x) = x² + (m−2n)x + n(n−m−1)`.
pub fn regularity_quadratic(ctx: &ResidueContext, x: i64) -> i64 {
    let (m, n) = (ctx.m as i64, ctx.n as i64);
    x * x + (m - 2 * n) * x + n * (n - m - 1)
}

/// `(a₁, f(a₁))` for `a₁ ∈ [max(0,n−m), n]`.
pub fn regularity_scan(ctx: &ResidueContext) -> Vec<(usize, i64)> {
    (ctx.n.saturating_sub(ctx.m)..=ctx.n).map(|a1| (a1, regularity_quadratic(ctx, a1 as i64))).collect()
}

/// `⟨(wθ_w + ρ_{Q,σ})_Q, ϖ_{2n}⟩` for `Q = (2n;m)`, `w` with `D_1 = {m+1}`, and the table
/// whose `b`-row is `(a₁, n−a₁)`, computed from roots (expected `2f(a₁)`).
pub fn regularity_pairing(ctx: &ResidueContext, a1: usize) -> Result<Rat> {
    let (m, n) = (ctx.m, ctx.n);
    let q = SpComposition::new([2 * n], m);
    if a1 > n || a1 + m < n {
        return domain(format!("a₁ = {a1} is outside [max(0,n−m), n]"));
    }
    let t = Table::new(StandardParabolic::Sp(q.clone()), vec![2 * n - a1, m + a1 - n])?;
    let wp = wprime_set(ctx, &q)?
        .into_iter()
        .find(|wp| wp.i == 1 && wp.partition.d[0].len() == 1)
        .ok_or_else(|| Error::Infeasible("no w with D_1 = {m+1}".into()))?;
    let w_theta = wp.w.act(&ctx.theta0())?;
    let total = &w_theta + &rho_q_sigma(&q, &t.sigma(), ctx.a());
    Ok(project(&total, &q)?.lambda_q.0[..2 * n].iter().sum())
}

#[derive(Clone, Debug, Serialize)]
pub struct RegularityViolation {
    /// Index `i` of the cuspidal exponent `ρ_i w_{L_m} λ₀`.
    pub i: usize,
    pub q: SpComposition,
    pub table: Table,
    pub exponent_q: RationalVector,
}

/// Maximal `Q ⊇ Q_i`, tables `T ∈ 𝒯^Q_{m+n,n}` and exponents `e_i = ρ_i w_{L_m} λ₀` with
/// `(e_i + ρ_{Q,σ_T})_Q = 0`.
pub fn regularity_violations(ctx: &ResidueContext) -> Result<Vec<RegularityViolation>> {
    let mut out = Vec::new();
    let big = ctx.rank();
    for i in 0..=ctx.m {
        let e = ctx.cuspidal_exponent(i);
        for nu in ctx.q_i(i).partial_sums().into_iter().skip(1) {
            let q = SpComposition::new([nu], big - nu);
            for t in enumerate_tables(ctx.a(), ctx.b(), &StandardParabolic::Sp(q.clone()))? {
                let v = &e + &rho_q_sigma(&q, &t.sigma(), ctx.a());
                let proj = project(&v, &q)?.lambda_q;
                if proj.is_zero() {
                    out.push(RegularityViolation { i, q: q.clone(), table: t, exponent_q: proj });
                }
            }
        }
    }
    Ok(out)
}

/// The known violation: `Q = (1;N−1)` with `a`-row `(0, m+n)` and `b`-row `(1, n−1)`.
pub fn is_paper_witness(ctx: &ResidueContext, v: &RegularityViolation) -> bool {
    v.q == SpComposition::new([1], ctx.rank() - 1) && v.table.row_a == vec![0, ctx.m + ctx.n] && v.table.row_b == vec![1, ctx.n - 1]
}

/// Cuspidal exponents `ρ_i w_{L_m} λ₀` are negative along `Q_i`.
pub fn cuspidal_exponents_negative(ctx: &ResidueContext) -> Result<bool> {
    for i in 0..=ctx.m {
        if !is_negative_exponent(&ctx.cuspidal_exponent(i), &ctx.q_i(i))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Action of `w ∈ ₗW°_M` on block coordinates: block `j` of the source goes to `±` block
/// `w̄(j)` of the target. Both Levis must have no anisotropic part.
pub fn block_action(w: &SignedPermutation, source: &SpComposition, target: &SpComposition) -> Result<SignedPermutation> {
    let tgt = target.gl_blocks();
    let mut tau = Vec::new();
    let mut c = Vec::new();
    for (j, b) in source.gl_blocks().iter().enumerate() {
        let x = b.lo as usize;
        let y = w.tau(x) as i64;
        let k = tgt.iter().position(|t| t.contains(y)).ok_or_else(|| Error::Domain(format!("{w} does not map blocks to blocks")))?;
        tau.push(k + 1);
        if w.in_c(x) {
            c.push(j + 1);
        }
    }
    SignedPermutation::new(&tau, &c)
}

/// `Γ = {e_j − e_{j+1}, 2e_m, 2e_{m+1}}` in block coordinates of `L_m`.
pub fn gamma_roots(ctx: &ResidueContext) -> Vec<Root> {
    let k = ctx.vars();
    let mut out = Vec::new();
    for j in 0..ctx.m.saturating_sub(1) {
        let mut r = vec![0; k];
        r[j] = 1;
        r[j + 1] = -1;
        out.push(r);
    }
    for j in [ctx.m.checked_sub(1), Some(ctx.m)].into_iter().flatten() {
        let mut r = vec![0; k];
        r[j] = 2;
        out.push(r);
    }
    out
}

/// `ₗᵢW°_{L_m}` via `𝒟`-partitions over the blocks `(1^m,2n)` targeting `Q_i`.
pub fn circ_set(ctx: &ResidueContext, i: usize) -> Result<Vec<SignedPermutation>> {
    let blocks = ctx.l_m_blocks();
    let target = ctx.q_i(i);
    dpartitions(&blocks, &target).iter().map(|d| w_from_d(d, &blocks, &target)).collect()
}
