//! Affine forms in the residue coordinates `(λ_1,…,λ_m, t)`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::roots::{fmt_rat, int, Rat, RationalVector};

/// `c_1 x_1 + ⋯ + c_k x_k + c_0`; the last variable is printed as `t`, the others as `λ_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineForm {
    pub coeffs: Vec<Rat>,
    pub constant: Rat,
}

impl AffineForm {
    pub fn constant(vars: usize, c: Rat) -> Self {
        Self { coeffs: vec![Rat::zero(); vars], constant: c }
    }

    pub fn var(vars: usize, j: usize) -> Self {
        let mut f = Self::constant(vars, Rat::zero());
        f.coeffs[j] = Rat::one();
        f
    }

    pub fn vars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_zero(&self) -> bool {
        self.is_constant() && self.constant.is_zero()
    }

    pub fn scale(&self, c: Rat) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect(), constant: self.constant * c }
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        self.coeffs.iter().zip(point).map(|(a, x)| a * x).sum::<Rat>() + self.constant
    }

    /// Substitutes `x_j = value`.
    pub fn substitute(&self, j: usize, value: Rat) -> Self {
        let mut f = self.clone();
        f.constant += f.coeffs[j] * value;
        f.coeffs[j] = Rat::zero();
        f
    }

    /// Scaled so that the first nonzero coefficient is 1 (zero set unchanged).
    pub fn normalized(&self) -> Self {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            Some(lead) => self.scale(lead.recip()),
            None if self.constant.is_zero() => self.clone(),
            None => Self::constant(self.vars(), Rat::one()),
        }
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.vars().saturating_sub(1);
        let mut out = String::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = if j == last { "t".to_string() } else { format!("λ{}", j + 1) };
            let sign = if c.is_negative() { "-" } else if out.is_empty() { "" } else { "+" };
            let mag = c.abs();
            if mag.is_one() {
                out.push_str(&format!("{sign}{name}"));
            } else {
                out.push_str(&format!("{sign}{}{name}", fmt_rat(&mag)));
            }
        }
        if !self.constant.is_zero() || out.is_empty() {
            let sign = if self.constant.is_negative() { "-" } else if out.is_empty() { "" } else { "+" };
            out.push_str(&format!("{sign}{}", fmt_rat(&self.constant.abs())));
        }
        f.write_str(&out)
    }
}

impl Serialize for AffineForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Add for &AffineForm {
    type Output = AffineForm;
    fn add(self, rhs: Self) -> AffineForm {
        AffineForm {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
            constant: self.constant + rhs.constant,
        }
    }
}

impl Sub for &AffineForm {
    type Output = AffineForm;
    fn sub(self, rhs: Self) -> AffineForm {
        self + &(-rhs)
    }
}

impl Neg for &AffineForm {
    type Output = AffineForm;
    fn neg(self) -> AffineForm {
        self.scale(-Rat::one())
    }
}

impl Neg for AffineForm {
    type Output = AffineForm;
    fn neg(self) -> AffineForm {
        -&self
    }
}

/// A vector of affine forms, one per coordinate of `𝔞_0*`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineVector(pub Vec<AffineForm>);

impl AffineVector {
    pub fn constant(vars: usize, v: &RationalVector) -> Self {
        Self(v.0.iter().map(|c| AffineForm::constant(vars, *c)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn eval(&self, point: &[Rat]) -> RationalVector {
        RationalVector(self.0.iter().map(|f| f.eval(point)).collect())
    }

    pub fn add_constant(&self, v: &RationalVector) -> Self {
        Self(self.0.iter().zip(&v.0).map(|(f, c)| &f.clone() + &AffineForm::constant(f.vars(), *c)).collect())
    }

    /// Sum of the first `nu` coordinates.
    pub fn coweight_pairing(&self, nu: usize, vars: usize) -> AffineForm {
        self.0[..nu].iter().fold(AffineForm::constant(vars, Rat::zero()), |acc, f| &acc + f)
    }

    /// Block averages over the given consecutive blocks, zero elsewhere.
    pub fn project_blocks(&self, blocks: &[(usize, usize)], vars: usize) -> Self {
        let mut out = vec![AffineForm::constant(vars, Rat::zero()); self.len()];
        for &(start, len) in blocks {
            let sum = self.0[start..start + len].iter().fold(AffineForm::constant(vars, Rat::zero()), |acc, f| &acc + f);
            let avg = sum.scale(int(len as i64).recip());
            for slot in &mut out[start..start + len] {
                *slot = avg.clone();
            }
        }
        Self(out)
    }
}

impl fmt::Display for AffineVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
    }
}
