//! Formal products of `ζ`, `L(π,·)`, `L(π,∧²,·)` and affine forms, with orders at
//! points read off an explicit axiom table; divisors of intertwining operators,
//! constant-term skeletons and the residue survivors.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::affine::{AffineForm, AffineVector};
use crate::combinatorics::SpComposition;
use crate::error::{domain, Error, Result};
use crate::exponent::{block_action, circ_set, q_poly, wprime_set, ResidueContext};
use crate::roots::{fmt_rat, int, rat, GroupKind, Levi, Rat, RestrictedRoot};
use crate::weyl::{dpartitions, is_left_reduced, is_right_reduced, standard_image, w_from_d, SignedPermutation};

/// The default analytic assumptions, one record per line.
pub const DEFAULT_AXIOMS: &str = "\
# family       kind       location  order
zeta           point      1         -1
zeta           halfplane  >=1       0
L_pi           entire     -         -
L_pi           point      1/2       0
L_pi           halfplane  >1        0
L_pi_wedge2    point      1         -1
L_pi_wedge2    halfplane  >1        0
";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Zeta,
    LPi,
    LPiWedge2,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Zeta => "zeta",
            Family::LPi => "L_pi",
            Family::LPiWedge2 => "L_pi_wedge2",
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zeta" => Ok(Family::Zeta),
            "L_pi" => Ok(Family::LPi),
            "L_pi_wedge2" => Ok(Family::LPiWedge2),
            _ => Err(Error::Axioms(format!("unknown family {s:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomKind {
    /// Order at a single real point.
    Point { at: Rat, order: i64 },
    /// Holomorphic and nonvanishing on `Re(s) > bound` (or `≥`), except at points with their own record.
    HalfPlane { bound: Rat, inclusive: bool },
    /// No poles anywhere; says nothing about zeros, so never decides an order alone.
    Entire,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Axiom {
    pub family: Family,
    pub kind: AxiomKind,
}

impl Axiom {
    /// Stable id used in reports, e.g. `zeta:point:1`, `L_pi:halfplane:>1`.
    pub fn id(&self) -> String {
        match &self.kind {
            AxiomKind::Point { at, .. } => format!("{}:point:{}", self.family, fmt_rat(at)),
            AxiomKind::HalfPlane { bound, inclusive } => {
                format!("{}:halfplane:{}{}", self.family, if *inclusive { ">=" } else { ">" }, fmt_rat(bound))
            }
            AxiomKind::Entire => format!("{}:entire", self.family),
        }
    }
}

fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::Axioms(format!("bad number {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let d: i64 = b.parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(rat(a.parse().map_err(|_| bad())?, d))
        }
        None => Ok(int(s.parse().map_err(|_| bad())?)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalyticAxioms {
    pub axioms: Vec<Axiom>,
}

impl Default for AnalyticAxioms {
    fn default() -> Self {
        Self::parse(DEFAULT_AXIOMS).expect("built-in axiom table")
    }
}

impl AnalyticAxioms {
    /// Lines `family kind location order`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut axioms = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 4 {
                return Err(Error::Axioms(format!("line {}: expected 4 fields", lineno + 1)));
            }
            let family: Family = f[0].parse()?;
            let kind = match f[1] {
                "point" => AxiomKind::Point {
                    at: parse_rat(f[2])?,
                    order: f[3].parse().map_err(|_| Error::Axioms(format!("line {}: bad order", lineno + 1)))?,
                },
                "halfplane" => {
                    let (inclusive, rest) = match f[2].strip_prefix(">=") {
                        Some(r) => (true, r),
                        None => (false, f[2].strip_prefix('>').ok_or_else(|| Error::Axioms(format!("line {}: bad half-plane", lineno + 1)))?),
                    };
                    AxiomKind::HalfPlane { bound: parse_rat(rest)?, inclusive }
                }
                "entire" => AxiomKind::Entire,
                k => return Err(Error::Axioms(format!("line {}: unknown kind {k:?}", lineno + 1))),
            };
            axioms.push(Axiom { family, kind });
        }
        Ok(Self { axioms })
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Axioms(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Order of `family` at the real point `s`, with the id of the deciding axiom.
    pub fn order_of(&self, family: Family, s: Rat) -> Option<(i64, String)> {
        let own = self.axioms.iter().filter(|a| a.family == family);
        if let Some(a) = own.clone().find(|a| matches!(a.kind, AxiomKind::Point { at, .. } if at == s)) {
            let AxiomKind::Point { order, .. } = a.kind else { unreachable!() };
            return Some((order, a.id()));
        }
        own.into_iter()
            .find(|a| match a.kind {
                AxiomKind::HalfPlane { bound, inclusive } => s > bound || (inclusive && s == bound),
                _ => false,
            })
            .map(|a| (0, a.id()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactorKind {
    /// The affine form itself.
    Affine,
    Family(Family),
}

/// `F(argument)^exponent`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormalFactor {
    pub kind: FactorKind,
    pub argument: AffineForm,
    pub exponent: i64,
}

impl FormalFactor {
    pub fn affine(argument: AffineForm) -> Self {
        Self { kind: FactorKind::Affine, argument, exponent: 1 }
    }

    pub fn family(family: Family, argument: AffineForm, exponent: i64) -> Self {
        Self { kind: FactorKind::Family(family), argument, exponent }
    }
}

impl fmt::Display for FormalFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self.kind {
            FactorKind::Affine => format!("({})", self.argument),
            FactorKind::Family(Family::Zeta) => format!("ζ({})", self.argument),
            FactorKind::Family(Family::LPi) => format!("L(π,{})", self.argument),
            FactorKind::Family(Family::LPiWedge2) => format!("L(π,∧²,{})", self.argument),
        };
        if self.exponent == 1 {
            f.write_str(&base)
        } else {
            write!(f, "{base}^{}", self.exponent)
        }
    }
}

impl Serialize for FormalFactor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MeromorphicProduct {
    pub factors: Vec<FormalFactor>,
}

impl MeromorphicProduct {
    pub fn push(&mut self, f: FormalFactor) {
        self.factors.push(f);
    }

    /// `F(s)/F(s+1)`.
    pub fn push_quotient(&mut self, family: Family, s: AffineForm) {
        let shifted = &s + &AffineForm::constant(s.vars(), Rat::one());
        self.push(FormalFactor::family(family, s, 1));
        self.push(FormalFactor::family(family, shifted, -1));
    }

    pub fn times(&self, other: &Self) -> Self {
        Self { factors: self.factors.iter().chain(&other.factors).cloned().collect() }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

impl fmt::Display for MeromorphicProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        f.write_str(&self.factors.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("·"))
    }
}

/// Result of [`order_at_point`]: `order` is `None` when some factor is not covered by the axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderReport {
    pub order: Option<i64>,
    pub unknown: Vec<String>,
    pub consumed: BTreeSet<String>,
}

impl Serialize for OrderReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("OrderReport", 3)?;
        match self.order {
            Some(o) => st.serialize_field("order", &o)?,
            None => st.serialize_field("order", "unknown")?,
        }
        st.serialize_field("unknown_factors", &self.unknown)?;
        st.serialize_field("axioms_consumed", &self.consumed)?;
        st.end()
    }
}

fn slope(f: &AffineForm, direction: &[Rat]) -> Rat {
    f.coeffs.iter().zip(direction).map(|(a, d)| a * d).sum()
}

pub fn is_generic_direction(product: &MeromorphicProduct, direction: &[Rat]) -> bool {
    product.factors.iter().all(|f| !slope(&f.argument, direction).is_zero())
}

/// Order of vanishing of `z ↦ F(point + z·direction)` at `z = 0` (poles negative).
pub fn order_at_point(
    product: &MeromorphicProduct,
    point: &[Rat],
    direction: &[Rat],
    axioms: &AnalyticAxioms,
) -> Result<OrderReport> {
    if let Some(f) = product.factors.iter().find(|f| slope(&f.argument, direction).is_zero()) {
        return Err(Error::NonGenericDirection(format!("{f} is constant along the direction")));
    }
    let mut total = 0i64;
    let mut unknown = Vec::new();
    let mut consumed = BTreeSet::new();
    for f in &product.factors {
        let s = f.argument.eval(point);
        match f.kind {
            FactorKind::Affine => total += f.exponent * i64::from(s.is_zero()),
            FactorKind::Family(fam) => match axioms.order_of(fam, s) {
                Some((o, id)) => {
                    total += f.exponent * o;
                    consumed.insert(id);
                }
                None => unknown.push(format!("{fam} at {}", fmt_rat(&s))),
            },
        }
    }
    Ok(OrderReport { order: unknown.is_empty().then_some(total), unknown, consumed })
}

/// A seeded random direction with positive integer entries, generic for `product`.
pub fn generic_direction(product: &MeromorphicProduct, vars: usize, seed: u64) -> Result<Vec<Rat>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let d: Vec<Rat> = (0..vars).map(|_| int(rng.gen_range(1..=97))).collect();
        if is_generic_direction(product, &d) {
            return Ok(d);
        }
    }
    Err(Error::NonGenericDirection("no generic direction found".into()))
}

/// The variable attached to block `p` (1-based) of `L_i`: the `2n` block sits at `i+1` and carries `t`.
fn block_variable(ctx: &ResidueContext, i: usize, p: usize) -> usize {
    match p.cmp(&(i + 1)) {
        std::cmp::Ordering::Less => p - 1,
        std::cmp::Ordering::Equal => ctx.m,
        std::cmp::Ordering::Greater => p - 2,
    }
}

/// `⟨λ,α^∨⟩` for a restricted root of `L_i`, as an affine form in `(λ_1,…,λ_m,t)`.
pub fn coroot_pairing(ctx: &ResidueContext, i: usize, alpha: RestrictedRoot) -> AffineForm {
    let v = ctx.vars();
    let x = |p| AffineForm::var(v, block_variable(ctx, i, p));
    match alpha {
        RestrictedRoot::Diff(l, k) => &x(l) - &x(k),
        RestrictedRoot::Sum(l, k) => &x(l) + &x(k),
        RestrictedRoot::Long(l) => x(l),
    }
}

fn involves(alpha: RestrictedRoot, p: usize) -> bool {
    match alpha {
        RestrictedRoot::Diff(l, k) | RestrictedRoot::Sum(l, k) => l == p || k == p,
        RestrictedRoot::Long(l) => l == p,
    }
}

/// `R_{i,w}`: positive restricted roots of `L_i` sent negative, with the target index `j`.
pub fn inverted_roots(ctx: &ResidueContext, i: usize, w: &SignedPermutation) -> Result<(usize, Vec<RestrictedRoot>)> {
    if i > ctx.m {
        return domain(format!("block position {i} exceeds m = {}", ctx.m));
    }
    let source = ctx.q_i(i);
    let image = standard_image(w, &source).ok_or_else(|| Error::Domain(format!("{w} does not map L_{i} to a standard Levi")))?;
    let j = (0..=ctx.m)
        .find(|&j| ctx.q_i(j) == image)
        .ok_or_else(|| Error::Domain(format!("{w} maps L_{i} to {image}, not some L_j")))?;
    if !is_right_reduced(w, &Levi::sp(&source)) || !is_left_reduced(w, &Levi::sp(&image)) {
        return domain(format!("{w} is not reduced for L_{i}, L_{j}"));
    }
    let b = block_action(w, &source, &image)?;
    let k = ctx.vars();
    let roots = RestrictedRoot::positive(GroupKind::Sp, k)
        .into_iter()
        .filter(|a| !crate::roots::is_positive(&b.act_root(&a.to_vector(k))))
        .collect();
    Ok((j, roots))
}

/// `[(⟨λ,α^∨⟩−1) : α ∈ R_{i,w}∖R_i]`, preceded by `(t−1/2)` when `i = m` and `2e_{m+1} ∈ R_{m,w}`.
pub fn divisor_of_intertwiner(ctx: &ResidueContext, i: usize, w: &SignedPermutation) -> Result<Vec<AffineForm>> {
    let (_, roots) = inverted_roots(ctx, i, w)?;
    let v = ctx.vars();
    let block = i + 1;
    let mut out = Vec::new();
    if roots.contains(&RestrictedRoot::Long(block)) {
        if i != ctx.m {
            return domain(format!("2e_{block} is inverted by {w} but i = {i} ≠ m"));
        }
        out.push(&AffineForm::var(v, ctx.m) - &AffineForm::constant(v, rat(1, 2)));
    }
    let one = AffineForm::constant(v, Rat::one());
    out.extend(roots.into_iter().filter(|&a| !involves(a, block)).map(|a| &coroot_pairing(ctx, i, a) - &one));
    Ok(out)
}

/// Multiset divisibility of products of affine forms, up to scalars.
pub fn divides(factors: &[AffineForm], product: &[AffineForm]) -> bool {
    let mut pool: Vec<AffineForm> = product.iter().map(AffineForm::normalized).collect();
    factors.iter().all(|f| {
        let g = f.normalized();
        match pool.iter().position(|h| *h == g) {
            Some(p) => {
                pool.swap_remove(p);
                true
            }
            None => false,
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkeletonTerm {
    pub w: SignedPermutation,
    pub exponent: AffineVector,
    /// `None` for terms of the induced tower, whose eigenvalue slot carries `θ_w` instead.
    pub divisor: Option<Vec<AffineForm>>,
    pub theta: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstantTermSkeleton {
    pub source: String,
    pub target: SpComposition,
    pub terms: Vec<SkeletonTerm>,
}

fn q_projection(ctx: &ResidueContext, q: &SpComposition, v: &AffineVector) -> AffineVector {
    let blocks: Vec<(usize, usize)> = q.gl_blocks().iter().map(|b| (b.lo as usize - 1, b.len())).collect();
    v.project_blocks(&blocks, ctx.vars())
}

fn act_affine(w: &SignedPermutation, v: &AffineVector) -> Result<AffineVector> {
    Ok(AffineVector(w.act_slice(&v.0)?))
}

/// Constant term along `Q` of the cuspidal Eisenstein series induced from `Q_m`:
/// one term per `w ∈ ₗW°_{L_m}`.
pub fn cuspidal_constant_term_skeleton(ctx: &ResidueContext, q: &SpComposition) -> Result<ConstantTermSkeleton> {
    if q.total() != ctx.rank() {
        return Err(Error::RankMismatch { expected: ctx.rank(), found: q.total() });
    }
    let blocks = ctx.l_m_blocks();
    let lambda = ctx.symbolic_lambda();
    let terms = dpartitions(&blocks, q)
        .iter()
        .map(|d| {
            let w = w_from_d(d, &blocks, q)?;
            let exponent = q_projection(ctx, q, &act_affine(&w, &lambda)?);
            let divisor = divisor_of_intertwiner(ctx, ctx.m, &w)?;
            Ok(SkeletonTerm { w, exponent, divisor: Some(divisor), theta: None })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConstantTermSkeleton { source: "Q_m".into(), target: q.clone(), terms })
}

/// Constant term along `Q` of the series induced from the residual representation on `P`:
/// one term per `w ∈ ₗW_M′`, eigenvalue `λ + θ_w` with `θ_w ∈ {0, θ₀}`.
pub fn induced_constant_term_skeleton(ctx: &ResidueContext, q: &SpComposition) -> Result<ConstantTermSkeleton> {
    let lambda = AffineVector(ctx.symbolic_lambda().0.iter().map(|f| f.substitute(ctx.m, Rat::zero())).collect());
    let terms = wprime_set(ctx, q)?
        .into_iter()
        .map(|wp| {
            let (theta, name) = if wp.i == 0 { (crate::roots::RationalVector::zeros(ctx.rank()), "0") } else { (ctx.theta0(), "θ₀") };
            let exponent = q_projection(ctx, q, &act_affine(&wp.w, &lambda.add_constant(&theta))?);
            Ok(SkeletonTerm { w: wp.w, exponent, divisor: None, theta: Some(name.into()) })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConstantTermSkeleton { source: "P".into(), target: q.clone(), terms })
}

/// The `w ∈ ₗᵢW°_{L_m}` whose divisor is divisible by `q`, for `Q = Q_i`.
pub fn surviving_residue_terms(ctx: &ResidueContext, q: &SpComposition) -> Result<Vec<SignedPermutation>> {
    let i = (0..=ctx.m).find(|&i| ctx.q_i(i) == *q).ok_or_else(|| Error::Domain(format!("{q} is not one of the Q_i")))?;
    let qp = q_poly(ctx);
    let mut out = Vec::new();
    for w in circ_set(ctx, i)? {
        if divides(&qp, &divisor_of_intertwiner(ctx, ctx.m, &w)?) {
            out.push(w);
        }
    }
    Ok(out)
}

/// Which unramified product to attach to `w_{L_m}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GkRecipe {
    /// The product as displayed in the source.
    Displayed,
    /// `Displayed` times `ζ(λ_i)/ζ(λ_i+1)` for each `i`.
    LongRootAugmented,
    /// One quotient per inverted restricted root.
    PerRoot,
}

impl GkRecipe {
    pub const ALL: [GkRecipe; 3] = [GkRecipe::Displayed, GkRecipe::LongRootAugmented, GkRecipe::PerRoot];
}

impl fmt::Display for GkRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GkRecipe::Displayed => "displayed",
            GkRecipe::LongRootAugmented => "long-root-augmented",
            GkRecipe::PerRoot => "per-root",
        })
    }
}

/// Per-root quotients for `w ∈ ₗⱼW°_{L_i}`: `ζ` on roots between `GL_1` blocks, `L(π,·)` on roots
/// touching the `2n` block, and `L(π,·)L(π,∧²,2·)` on its long root.
pub fn gk_product_per_root(ctx: &ResidueContext, i: usize, w: &SignedPermutation) -> Result<MeromorphicProduct> {
    let (_, roots) = inverted_roots(ctx, i, w)?;
    let block = i + 1;
    let mut out = MeromorphicProduct::default();
    for a in roots {
        let s = coroot_pairing(ctx, i, a);
        if a == RestrictedRoot::Long(block) {
            out.push_quotient(Family::LPi, s.clone());
            out.push_quotient(Family::LPiWedge2, s.scale(int(2)));
        } else if involves(a, block) {
            out.push_quotient(Family::LPi, s);
        } else {
            out.push_quotient(Family::Zeta, s);
        }
    }
    Ok(out)
}

/// The unramified product attached to `w_{L_m}` under `recipe`.
pub fn gk_product_wlm(ctx: &ResidueContext, recipe: GkRecipe) -> MeromorphicProduct {
    if recipe == GkRecipe::PerRoot {
        return gk_product_per_root(ctx, ctx.m, &ctx.w_lm()).expect("w_{L_m} is reduced");
    }
    let v = ctx.vars();
    let t = AffineForm::var(v, ctx.m);
    let lam = |j| AffineForm::var(v, j);
    let mut out = MeromorphicProduct::default();
    out.push_quotient(Family::LPiWedge2, t.scale(int(2)));
    for j in 0..ctx.m {
        out.push_quotient(Family::Zeta, &lam(j) - &t);
        out.push_quotient(Family::Zeta, &lam(j) + &t);
        out.push_quotient(Family::LPi, &lam(j) - &t);
    }
    for j in 0..ctx.m {
        for k in j + 1..ctx.m {
            out.push_quotient(Family::Zeta, &lam(j) - &lam(k));
            out.push_quotient(Family::Zeta, &lam(j) + &lam(k));
        }
    }
    if recipe == GkRecipe::LongRootAugmented {
        for j in 0..ctx.m {
            out.push_quotient(Family::Zeta, lam(j));
        }
    }
    out
}

/// `q(λ)·f(λ)` as one product.
pub fn normalized_gk_product(ctx: &ResidueContext, recipe: GkRecipe) -> MeromorphicProduct {
    let q = MeromorphicProduct { factors: q_poly(ctx).into_iter().map(FormalFactor::affine).collect() };
    q.times(&gk_product_wlm(ctx, recipe))
}

/// Order of `q·f` at `λ₀` along a seeded generic direction.
pub fn residue_order(ctx: &ResidueContext, recipe: GkRecipe, axioms: &AnalyticAxioms, seed: u64) -> Result<OrderReport> {
    let f = normalized_gk_product(ctx, recipe);
    let d = generic_direction(&f, ctx.vars(), seed)?;
    order_at_point(&f, &ctx.lambda0_point(), &d, axioms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx(m: usize, n: usize) -> ResidueContext {
        ResidueContext::new(m, n).unwrap()
    }

    fn t_form(v: usize, c: Rat) -> AffineForm {
        &AffineForm::var(v, v - 1) + &AffineForm::constant(v, c)
    }

    #[test]
    fn axiom_table_parses_and_rejects() {
        let ax = AnalyticAxioms::default();
        assert_eq!(ax.axioms.len(), 7);
        assert_eq!(ax.order_of(Family::Zeta, int(1)), Some((-1, "zeta:point:1".into())));
        assert_eq!(ax.order_of(Family::Zeta, int(2)).unwrap().0, 0);
        assert_eq!(ax.order_of(Family::Zeta, rat(1, 2)), None);
        assert_eq!(ax.order_of(Family::LPi, int(1)), None);
        assert_eq!(ax.order_of(Family::LPi, rat(1, 2)).unwrap().1, "L_pi:point:1/2");
        assert!(AnalyticAxioms::parse("zeta point 1").is_err());
        assert!(AnalyticAxioms::parse("eta point 1 0").is_err());
        assert!(AnalyticAxioms::parse("zeta halfplane <1 0").is_err());
        let extra = AnalyticAxioms::parse(&format!("{DEFAULT_AXIOMS}zeta point 1/2 0\n")).unwrap();
        assert_eq!(extra.order_of(Family::Zeta, rat(1, 2)).unwrap().0, 0);
    }

    #[test]
    fn order_examples() {
        let ax = AnalyticAxioms::default();
        let mut f = MeromorphicProduct::default();
        f.push_quotient(Family::Zeta, t_form(1, rat(1, 2)));
        let r = order_at_point(&f, &[rat(1, 2)], &[int(1)], &ax).unwrap();
        assert_eq!(r.order, Some(-1));

        let mut g = MeromorphicProduct::default();
        g.push(FormalFactor::affine(t_form(1, rat(-1, 2))));
        g.push_quotient(Family::LPiWedge2, AffineForm::var(1, 0).scale(int(2)));
        let r = order_at_point(&g, &[rat(1, 2)], &[int(1)], &ax).unwrap();
        assert_eq!(r.order, Some(0));
        assert!(r.consumed.contains("L_pi_wedge2:point:1"));

        let mut h = MeromorphicProduct::default();
        h.push(FormalFactor::family(Family::LPi, &AffineForm::var(2, 0) - &AffineForm::var(2, 1), 1));
        let r = order_at_point(&h, &[int(1), rat(1, 2)], &[int(2), int(1)], &ax).unwrap();
        assert_eq!(r.order, Some(0));
        assert_eq!(r.consumed.into_iter().collect::<Vec<_>>(), ["L_pi:point:1/2"]);
        assert!(matches!(order_at_point(&h, &[int(1), rat(1, 2)], &[int(1), int(1)], &ax), Err(Error::NonGenericDirection(_))));
    }

    #[test]
    fn divisor_examples() {
        let c = ctx(1, 1);
        assert!(divisor_of_intertwiner(&c, 1, &SignedPermutation::identity(3)).unwrap().is_empty());
        let d = divisor_of_intertwiner(&c, 1, &c.w_lm()).unwrap();
        let shown: Vec<String> = d.iter().map(|f| f.to_string()).collect();
        assert_eq!(shown, ["t-1/2", "λ1-1"]);
        let s0 = SignedPermutation::from_one_line(&[1, -3, -2]).unwrap();
        let d = divisor_of_intertwiner(&c, 1, &s0).unwrap();
        assert_eq!(d.iter().map(|f| f.to_string()).collect::<Vec<_>>(), ["t-1/2"]);
        let not_reduced = SignedPermutation::from_one_line(&[1, 3, 2]).unwrap();
        assert!(divisor_of_intertwiner(&c, 1, &not_reduced).is_err());
    }

    #[test]
    fn q_divides_longest_divisor() {
        for (m, n) in [(0, 1), (1, 1), (2, 1), (0, 2), (1, 2), (2, 2), (0, 3), (3, 1), (4, 1)] {
            let c = ctx(m, n);
            assert!(divides(&q_poly(&c), &divisor_of_intertwiner(&c, m, &c.w_lm()).unwrap()), "m={m} n={n}");
        }
    }

    #[test]
    fn survivors_are_rho_w() {
        for (m, n) in [(0, 1), (1, 1), (2, 1), (1, 2), (3, 1)] {
            let c = ctx(m, n);
            for i in 0..=m {
                let s = surviving_residue_terms(&c, &c.q_i(i)).unwrap();
                assert_eq!(s, vec![c.rho_i(i).compose(&c.w_lm())], "m={m} n={n} i={i}");
            }
        }
        assert!(surviving_residue_terms(&ctx(1, 1), &"3;0".parse().unwrap()).is_err());
    }

    #[test]
    fn skeleton_examples() {
        let c = ctx(1, 1);
        assert_eq!(cuspidal_constant_term_skeleton(&c, &c.q_i(1)).unwrap().terms.len(), 4);
        let g = cuspidal_constant_term_skeleton(&c, &SpComposition::full(3)).unwrap();
        assert_eq!(g.terms.len(), 1);
        assert!(g.terms[0].w.is_identity());
        // GL_2 × Sp_1 contains GL_1 × GL_1 × GL_1 ⊇ L_0 up to conjugacy, so the sum is not empty.
        let t = cuspidal_constant_term_skeleton(&c, &"2;1".parse().unwrap()).unwrap();
        assert!(!t.terms.is_empty());
        let ind = induced_constant_term_skeleton(&c, &"1;2".parse().unwrap()).unwrap();
        assert_eq!(ind.terms.len(), wprime_set(&c, &"1;2".parse().unwrap()).unwrap().len());
        // The identity term has i = 0, so its eigenvalue is λ itself.
        let e = ind.terms.iter().find(|t| t.w.is_identity()).unwrap();
        assert_eq!(e.theta.as_deref(), Some("0"));
        assert_eq!(e.exponent.to_string(), "(λ1, 0, 0)");
        let ind = induced_constant_term_skeleton(&c, &"2;1".parse().unwrap()).unwrap();
        assert!(ind.terms.iter().any(|t| t.theta.as_deref() == Some("θ₀")));
    }

    #[test]
    fn gk_shapes() {
        assert_eq!(gk_product_wlm(&ctx(0, 1), GkRecipe::Displayed).len(), 2);
        assert_eq!(gk_product_wlm(&ctx(1, 1), GkRecipe::Displayed).len(), 2 + 6);
        assert_eq!(gk_product_wlm(&ctx(2, 1), GkRecipe::Displayed).len(), 2 + 12 + 4);
        assert_eq!(gk_product_wlm(&ctx(2, 1), GkRecipe::LongRootAugmented).len(), 2 + 12 + 4 + 4);
        assert_eq!(gk_product_wlm(&ctx(1, 1), GkRecipe::Displayed).to_string(),
            "L(π,∧²,2t)·L(π,∧²,2t+1)^-1·ζ(λ1-t)·ζ(λ1-t+1)^-1·ζ(λ1+t)·ζ(λ1+t+1)^-1·L(π,λ1-t)·L(π,λ1-t+1)^-1");
    }

    #[test]
    fn residue_orders() {
        let ax = AnalyticAxioms::default();
        let pole_free: BTreeSet<&str> =
            ["L_pi_wedge2:point:1", "L_pi:point:1/2", "zeta:point:1", "zeta:halfplane:>=1", "L_pi:halfplane:>1", "L_pi_wedge2:halfplane:>1"].into();
        for m in 0..=3 {
            let c = ctx(m, 1);
            let r = residue_order(&c, GkRecipe::PerRoot, &ax, 7).unwrap();
            assert_eq!(r.order, Some(0), "m={m}");
            assert!(r.consumed.iter().all(|id| pole_free.contains(id.as_str())));
            let aug = residue_order(&c, GkRecipe::LongRootAugmented, &ax, 7).unwrap();
            if m == 0 {
                assert_eq!(aug.order, Some(0));
            } else {
                assert_eq!(aug.order, None);
                assert!(aug.unknown.contains(&"zeta at 1/2".to_string()));
            }
        }
    }

    proptest! {
        #[test]
        fn order_is_additive_and_order_free(seed in 0u64..500, split in 0usize..20, rot in 0usize..20) {
            let c = ctx(2, 1);
            let f = normalized_gk_product(&c, GkRecipe::PerRoot);
            let d = generic_direction(&f, c.vars(), seed).unwrap();
            let ax = AnalyticAxioms::default();
            let p = c.lambda0_point();
            let whole = order_at_point(&f, &p, &d, &ax).unwrap().order.unwrap();
            let k = split % f.len();
            let a = MeromorphicProduct { factors: f.factors[..k].to_vec() };
            let b = MeromorphicProduct { factors: f.factors[k..].to_vec() };
            let sum = order_at_point(&a, &p, &d, &ax).unwrap().order.unwrap() + order_at_point(&b, &p, &d, &ax).unwrap().order.unwrap();
            prop_assert_eq!(whole, sum);
            let mut g = f.clone();
            g.factors.rotate_left(rot % f.len());
            g.factors.reverse();
            prop_assert_eq!(order_at_point(&g, &p, &d, &ax).unwrap().order, Some(whole));
        }
    }
}
