//! The affine weight space `ĥ* = h* ⊕ ℚΛ₀ ⊕ ℚδ`.
//!
//! An [`AffineWeight`] is stored as its finite part (fundamental-weight
//! coordinates), its level `⟨λ,K⟩` and its `δ`-coefficient `⟨λ,D⟩`. The
//! invariant form pairs `Λ₀` with `δ` and is otherwise the finite form.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::cartan::{FiniteRoot, FiniteRootSystem, FiniteWeight};
use crate::rational::{q, to_i64, Q};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineWeight {
    pub finite: FiniteWeight,
    pub level: Q,
    pub delta: Q,
}

impl AffineWeight {
    pub fn new(finite: FiniteWeight, level: Q, delta: Q) -> Self {
        AffineWeight {
            finite,
            level,
            delta,
        }
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(FiniteWeight::zero(rank), Q::zero(), Q::zero())
    }

    pub fn from_finite(finite: FiniteWeight) -> Self {
        Self::new(finite, Q::zero(), Q::zero())
    }

    /// `Λ₀`.
    pub fn lambda0(rank: usize) -> Self {
        Self::new(FiniteWeight::zero(rank), q(1), Q::zero())
    }

    /// `δ`.
    pub fn delta(rank: usize) -> Self {
        Self::new(FiniteWeight::zero(rank), Q::zero(), q(1))
    }

    pub fn rank(&self) -> usize {
        self.finite.rank()
    }

    pub fn scale(&self, s: &Q) -> Self {
        Self::new(self.finite.scale(s), &self.level * s, &self.delta * s)
    }

    /// `self + k·δ`.
    pub fn shift_delta(&self, k: &Q) -> Self {
        Self::new(self.finite.clone(), self.level.clone(), &self.delta + k)
    }
}

impl Add for &AffineWeight {
    type Output = AffineWeight;
    fn add(self, rhs: &AffineWeight) -> AffineWeight {
        AffineWeight::new(
            &self.finite + &rhs.finite,
            &self.level + &rhs.level,
            &self.delta + &rhs.delta,
        )
    }
}

impl Sub for &AffineWeight {
    type Output = AffineWeight;
    fn sub(self, rhs: &AffineWeight) -> AffineWeight {
        AffineWeight::new(
            &self.finite - &rhs.finite,
            &self.level - &rhs.level,
            &self.delta - &rhs.delta,
        )
    }
}

impl Neg for &AffineWeight {
    type Output = AffineWeight;
    fn neg(self) -> AffineWeight {
        AffineWeight::new(-&self.finite, -&self.level, -&self.delta)
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}Λ₀ + {}δ", self.finite, self.level, self.delta)
    }
}

/// A root `ᾱ + nδ` (real) or `nδ` (imaginary, `n ≠ 0`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineRoot {
    finite: Option<FiniteRoot>,
    n: i64,
}

impl AffineRoot {
    pub fn real(finite: FiniteRoot, n: i64) -> Self {
        AffineRoot {
            finite: Some(finite),
            n,
        }
    }

    pub fn imaginary(n: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("0·δ is not a root"));
        }
        Ok(AffineRoot { finite: None, n })
    }

    /// The simple root `α₀ = δ − θ`.
    pub fn alpha0(rs: &FiniteRootSystem) -> Self {
        Self::real(rs.highest_root().negate(), 1)
    }

    pub fn is_real(&self) -> bool {
        self.finite.is_some()
    }

    pub fn finite_root(&self) -> Option<&FiniteRoot> {
        self.finite.as_ref()
    }

    pub fn delta_multiple(&self) -> i64 {
        self.n
    }

    pub fn is_positive(&self) -> bool {
        match &self.finite {
            Some(r) => self.n > 0 || (self.n == 0 && r.is_positive()),
            None => self.n > 0,
        }
    }

    pub fn to_weight(&self, rs: &FiniteRootSystem) -> AffineWeight {
        let finite = match &self.finite {
            Some(r) => r.weight().clone(),
            None => FiniteWeight::zero(rs.rank()),
        };
        AffineWeight::new(finite, Q::zero(), q(self.n))
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.finite {
            Some(r) => write!(f, "{:?} + {}δ", r.simple_coords(), self.n),
            None => write!(f, "{}δ", self.n),
        }
    }
}

/// Coordinates `[c₀, c₁, …, c_ℓ]` of an element of the affine root lattice
/// over the simple roots `α₀ = δ−θ, α₁, …, α_ℓ`. `c₀` is the `δ`-depth.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightOffset(pub Vec<i64>);

impl WeightOffset {
    pub fn zero(rank: usize) -> Self {
        WeightOffset(vec![0; rank + 1])
    }

    /// Offset of `depth·δ + Σ dropᵢ αᵢ`.
    pub fn from_parts(rs: &FiniteRootSystem, depth: i64, drop: &[i64]) -> Self {
        let theta = rs.highest_root().simple_coords();
        let mut c = Vec::with_capacity(rs.rank() + 1);
        c.push(depth);
        c.extend(drop.iter().zip(theta).map(|(d, t)| d + depth * t));
        WeightOffset(c)
    }

    /// `n·δ`.
    pub fn delta_multiple(rs: &FiniteRootSystem, n: i64) -> Self {
        Self::from_parts(rs, n, &vec![0; rs.rank()])
    }

    /// Offset of a root (its simple-root coordinates).
    pub fn of_root(rs: &FiniteRootSystem, beta: &AffineRoot) -> Self {
        match beta.finite_root() {
            Some(r) => Self::from_parts(rs, beta.delta_multiple(), r.simple_coords()),
            None => Self::delta_multiple(rs, beta.delta_multiple()),
        }
    }

    pub fn delta_depth(&self) -> i64 {
        self.0[0]
    }

    /// Coefficients of `α₁, …, α_ℓ`.
    pub fn finite_coords(&self) -> &[i64] {
        &self.0[1..]
    }

    pub fn finite_height(&self) -> i64 {
        self.finite_coords().iter().sum()
    }

    /// Simple coordinates of the finite part once `δ`-depth is removed.
    pub fn finite_drop(&self, rs: &FiniteRootSystem) -> Vec<i64> {
        let theta = rs.highest_root().simple_coords();
        self.finite_coords()
            .iter()
            .zip(theta)
            .map(|(c, t)| c - self.delta_depth() * t)
            .collect()
    }

    pub fn finite_drop_height(&self, rs: &FiniteRootSystem) -> i64 {
        self.finite_drop(rs).iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// `Σ cᵢ αᵢ` as a weight (level 0).
    pub fn to_weight(&self, rs: &FiniteRootSystem) -> AffineWeight {
        let drop = self.finite_drop(rs);
        AffineWeight::new(
            rs.weight_from_simple(&drop),
            Q::zero(),
            q(self.delta_depth()),
        )
    }

    pub fn checked_sub(&self, other: &WeightOffset) -> Option<WeightOffset> {
        let v: Vec<i64> = self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect();
        v.iter().all(|&c| c >= 0).then_some(WeightOffset(v))
    }
}

impl Add for &WeightOffset {
    type Output = WeightOffset;
    fn add(self, rhs: &WeightOffset) -> WeightOffset {
        WeightOffset(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &WeightOffset {
    type Output = WeightOffset;
    fn sub(self, rhs: &WeightOffset) -> WeightOffset {
        WeightOffset(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

fn check_rank(rs: &FiniteRootSystem, w: &AffineWeight) -> Result<()> {
    if w.rank() == rs.rank() {
        Ok(())
    } else {
        Err(Error::Dimension {
            expected: rs.rank(),
            found: w.rank(),
        })
    }
}

/// `ρ = ρ̄ + h∨Λ₀`, with `δ`-coefficient fixed to 0.
pub fn rho(rs: &FiniteRootSystem) -> AffineWeight {
    AffineWeight::new(rs.rho().clone(), q(rs.dual_coxeter()), Q::zero())
}

/// `(λ, μ) = (λ̄, μ̄) + level(λ)·⟨μ,D⟩ + level(μ)·⟨λ,D⟩`.
pub fn affine_form(rs: &FiniteRootSystem, lambda: &AffineWeight, mu: &AffineWeight) -> Result<Q> {
    check_rank(rs, lambda)?;
    check_rank(rs, mu)?;
    Ok(form_unchecked(rs, lambda, mu))
}

pub(crate) fn form_unchecked(rs: &FiniteRootSystem, lambda: &AffineWeight, mu: &AffineWeight) -> Q {
    rs.form_unchecked(&lambda.finite, &mu.finite) + &lambda.level * &mu.delta + &mu.level * &lambda.delta
}

/// `⟨λ, β∨⟩` for a real root `β = ᾱ + nδ`.
pub fn pairing_coroot(rs: &FiniteRootSystem, lambda: &AffineWeight, beta: &AffineRoot) -> Result<Q> {
    check_rank(rs, lambda)?;
    let alpha = beta
        .finite_root()
        .ok_or_else(|| Error::domain("coroot undefined for imaginary roots"))?;
    Ok(pairing_unchecked(rs, lambda, alpha, beta.delta_multiple()))
}

pub(crate) fn pairing_unchecked(
    rs: &FiniteRootSystem,
    lambda: &AffineWeight,
    alpha: &FiniteRoot,
    n: i64,
) -> Q {
    let base = rs.pairing(&lambda.finite, alpha);
    if n == 0 || lambda.level.is_zero() {
        return base;
    }
    base + q(2 * n) * &lambda.level / rs.root_norm(alpha)
}

/// `s_β(λ)`, or `s_β.λ = s_β(λ+ρ)−ρ` when `dot` is set.
pub fn reflect(
    rs: &FiniteRootSystem,
    lambda: &AffineWeight,
    beta: &AffineRoot,
    dot: bool,
) -> Result<AffineWeight> {
    check_rank(rs, lambda)?;
    let alpha = beta
        .finite_root()
        .ok_or_else(|| Error::domain("cannot reflect in an imaginary root"))?;
    Ok(reflect_unchecked(rs, lambda, alpha, beta.delta_multiple(), dot))
}

pub(crate) fn reflect_unchecked(
    rs: &FiniteRootSystem,
    lambda: &AffineWeight,
    alpha: &FiniteRoot,
    n: i64,
    dot: bool,
) -> AffineWeight {
    let rho = rho(rs);
    let shifted = if dot { lambda + &rho } else { lambda.clone() };
    let c = pairing_unchecked(rs, &shifted, alpha, n);
    let beta = AffineWeight::new(alpha.weight().clone(), Q::zero(), q(n));
    let image = &shifted - &beta.scale(&c);
    if dot {
        &image - &rho
    } else {
        image
    }
}

/// Simple-root coordinates of `λ − ν`, if it lies in the affine root lattice.
pub fn offset(rs: &FiniteRootSystem, lambda: &AffineWeight, nu: &AffineWeight) -> Option<WeightOffset> {
    if lambda.rank() != rs.rank() || nu.rank() != rs.rank() {
        return None;
    }
    let diff = lambda - nu;
    if !diff.level.is_zero() {
        return None;
    }
    let depth = to_i64(&diff.delta)?;
    let drop: Option<Vec<i64>> = rs.simple_coords(&diff.finite).iter().map(to_i64).collect();
    Some(WeightOffset::from_parts(rs, depth, &drop?))
}

/// `ν ≤ λ` iff `λ − ν ∈ ℤ≥0 R̂⁺`.
pub fn leq(rs: &FiniteRootSystem, nu: &AffineWeight, lambda: &AffineWeight) -> bool {
    offset(rs, lambda, nu).is_some_and(|o| o.is_nonnegative())
}

/// `λ + c·δ` style helper: the weight `λ − o` for an offset `o`.
pub fn lower_by(rs: &FiniteRootSystem, lambda: &AffineWeight, o: &WeightOffset) -> AffineWeight {
    lambda - &o.to_weight(rs)
}
