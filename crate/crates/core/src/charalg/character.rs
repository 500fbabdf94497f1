use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::affine::{self, AffineWeight, WeightOffset};
use crate::cartan::FiniteRootSystem;
use crate::linkage::is_critical;
use crate::rational::q;
use crate::{Error, Result};

/// Largest dense coefficient box `(D+1)·(H+1)^ℓ` a product expansion may
/// allocate.
pub const DEFAULT_BOX_CAP: usize = 4_000_000;

/// Region `c₀ ≤ delta_depth, c₁+…+c_ℓ ≤ finite_height` of nonnegative
/// offsets (affine simple-root coordinates). Downward closed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Truncation {
    pub delta_depth: u32,
    pub finite_height: u32,
}

impl Truncation {
    pub fn new(delta_depth: u32, finite_height: u32) -> Self {
        Truncation {
            delta_depth,
            finite_height,
        }
    }

    pub fn contains(&self, o: &WeightOffset) -> bool {
        o.is_nonnegative()
            && o.delta_depth() <= i64::from(self.delta_depth)
            && o.finite_height() <= i64::from(self.finite_height)
    }

    pub fn intersect(&self, other: &Truncation) -> Truncation {
        Truncation::new(
            self.delta_depth.min(other.delta_depth),
            self.finite_height.min(other.finite_height),
        )
    }

    pub fn is_within(&self, other: &Truncation) -> bool {
        self.delta_depth <= other.delta_depth && self.finite_height <= other.finite_height
    }

    /// All offsets of the region, in lexicographic order.
    pub fn offsets(&self, rank: usize) -> Vec<WeightOffset> {
        fn fill(prefix: &mut Vec<i64>, left: i64, slots: usize, out: &mut Vec<WeightOffset>) {
            if slots == 0 {
                out.push(WeightOffset(prefix.clone()));
                return;
            }
            for x in 0..=left {
                prefix.push(x);
                fill(prefix, left - x, slots - 1, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        for c0 in 0..=i64::from(self.delta_depth) {
            fill(&mut vec![c0], i64::from(self.finite_height), rank, &mut out);
        }
        out
    }
}

fn overflow() -> Error {
    Error::Resource {
        what: "character coefficient bits",
        limit: 63,
        requested: 64,
    }
}

/// `e^{base} · Σ terms[o]·e^{−o}`, complete inside `truncation`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalCharacter {
    base: AffineWeight,
    terms: BTreeMap<WeightOffset, i64>,
    truncation: Truncation,
}

impl FormalCharacter {
    pub fn zero(base: AffineWeight, truncation: Truncation) -> Self {
        FormalCharacter {
            base,
            terms: BTreeMap::new(),
            truncation,
        }
    }

    /// Builds a character from explicit terms; keys must lie in the region.
    pub fn from_terms(
        base: AffineWeight,
        terms: impl IntoIterator<Item = (WeightOffset, i64)>,
        truncation: Truncation,
    ) -> Result<Self> {
        let mut ch = Self::zero(base, truncation);
        for (o, c) in terms {
            if !truncation.contains(&o) {
                return Err(Error::OutOfBounds(format!("offset {:?} outside truncation", o.0)));
            }
            ch.add_term(o, c)?;
        }
        Ok(ch)
    }

    fn add_term(&mut self, o: WeightOffset, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(o.clone()).or_insert(0);
        *slot = slot.checked_add(c).ok_or_else(overflow)?;
        if *slot == 0 {
            self.terms.remove(&o);
        }
        Ok(())
    }

    pub fn base(&self) -> &AffineWeight {
        &self.base
    }

    pub fn truncation(&self) -> Truncation {
        self.truncation
    }

    /// Nonzero terms keyed by offset from the base.
    pub fn terms(&self) -> &BTreeMap<WeightOffset, i64> {
        &self.terms
    }

    /// Coefficient of `e^{base−o}`; `None` outside the truncation.
    pub fn coefficient(&self, o: &WeightOffset) -> Option<i64> {
        self.truncation
            .contains(o)
            .then(|| self.terms.get(o).copied().unwrap_or(0))
    }

    /// Coefficient of `e^{μ}`; `None` if `μ` is not comparable with the
    /// base or lies outside the truncation.
    pub fn coefficient_at(&self, rs: &FiniteRootSystem, mu: &AffineWeight) -> Option<i64> {
        let o = affine::offset(rs, &self.base, mu)?;
        self.coefficient(&o)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }

    /// Restriction to a smaller region.
    pub fn restrict(&self, t: &Truncation) -> Self {
        let t = self.truncation.intersect(t);
        FormalCharacter {
            base: self.base.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(o, _)| t.contains(o))
                .map(|(o, c)| (o.clone(), *c))
                .collect(),
            truncation: t,
        }
    }

    fn check_base(&self, other: &FormalCharacter) -> Result<()> {
        if self.base == other.base {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "characters with bases {} and {} must be rebased first",
                self.base, other.base
            )))
        }
    }

    pub fn add(&self, other: &FormalCharacter) -> Result<Self> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &FormalCharacter) -> Result<Self> {
        self.combine(other, -1)
    }

    fn combine(&self, other: &FormalCharacter, sign: i64) -> Result<Self> {
        self.check_base(other)?;
        let t = self.truncation.intersect(&other.truncation);
        let mut out = self.restrict(&t);
        for (o, c) in &other.terms {
            if t.contains(o) {
                out.add_term(o.clone(), c.checked_mul(sign).ok_or_else(overflow)?)?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Result<Self> {
        let mut out = Self::zero(self.base.clone(), self.truncation);
        for (o, c) in &self.terms {
            out.add_term(o.clone(), c.checked_mul(k).ok_or_else(overflow)?)?;
        }
        Ok(out)
    }

    /// Product of characters: bases add, regions intersect.
    pub fn mul(&self, other: &FormalCharacter) -> Result<Self> {
        let t = self.truncation.intersect(&other.truncation);
        let mut out = Self::zero(&self.base + &other.base, t);
        for (a, x) in &self.terms {
            if !t.contains(a) {
                continue;
            }
            for (b, y) in &other.terms {
                let o = a + b;
                if t.contains(&o) {
                    out.add_term(o, x.checked_mul(*y).ok_or_else(overflow)?)?;
                }
            }
        }
        Ok(out)
    }

    /// The same character written relative to a higher base `μ ≥ base`.
    pub fn rebase(&self, rs: &FiniteRootSystem, mu: &AffineWeight) -> Result<Self> {
        let s = affine::offset(rs, mu, &self.base)
            .filter(WeightOffset::is_nonnegative)
            .ok_or_else(|| {
                Error::domain(format!("cannot rebase from {} to {mu}: not ≥", self.base))
            })?;
        let t = Truncation::new(
            self.truncation.delta_depth + s.delta_depth() as u32,
            self.truncation.finite_height + s.finite_height() as u32,
        );
        Ok(FormalCharacter {
            base: mu.clone(),
            terms: self.terms.iter().map(|(o, c)| (o + &s, *c)).collect(),
            truncation: t,
        })
    }

    /// Character of the dual module: weight spaces of a module and its dual
    /// have equal dimension, so this is the identity.
    pub fn dual(&self) -> Self {
        self.clone()
    }
}

/// Dense product `∏_β (1 − e^{−β})^{−mult(β)}` over the region.
fn expand_product(
    rs: &FiniteRootSystem,
    t: Truncation,
    imaginary: bool,
) -> Result<BTreeMap<WeightOffset, i64>> {
    let rank = rs.rank();
    let d = t.delta_depth as usize;
    let h = t.finite_height as usize;
    let side = h + 1;
    let cells = side.saturating_pow(rank as u32).saturating_mul(d + 1);
    if cells > DEFAULT_BOX_CAP {
        return Err(Error::Resource {
            what: "character expansion cells",
            limit: DEFAULT_BOX_CAP,
            requested: cells,
        });
    }

    let index = |c: &[i64]| -> usize { c.iter().fold(0usize, |acc, &x| acc * side + x as usize) };
    // advance mixed-radix coordinates: c₀ unbounded, the rest in [0, h]
    let advance = |c: &mut [i64]| {
        for i in (1..c.len()).rev() {
            c[i] += 1;
            if (c[i] as usize) < side {
                return;
            }
            c[i] = 0;
        }
        c[0] += 1;
    };

    let mut factors: Vec<(WeightOffset, usize)> = Vec::new();
    for n in 0..=d as i64 {
        for alpha in rs.roots() {
            if n == 0 && !alpha.is_positive() {
                continue;
            }
            let o = WeightOffset::from_parts(rs, n, alpha.simple_coords());
            if t.contains(&o) {
                factors.push((o, 1));
            }
        }
        if imaginary && n > 0 {
            let o = WeightOffset::delta_multiple(rs, n);
            if t.contains(&o) {
                factors.push((o, rank));
            }
        }
    }

    let mut a = vec![0i64; cells];
    a[0] = 1;
    for (beta, mult) in &factors {
        let step = index(&beta.0);
        for _ in 0..*mult {
            let mut c = vec![0i64; rank + 1];
            for k in 0..cells {
                if k >= step && c.iter().zip(&beta.0).all(|(x, b)| x >= b) {
                    a[k] = a[k].checked_add(a[k - step]).ok_or_else(overflow)?;
                }
                advance(&mut c);
            }
        }
    }

    let mut out = BTreeMap::new();
    let mut c = vec![0i64; rank + 1];
    for v in a {
        let o = WeightOffset(c.clone());
        if v != 0 && t.contains(&o) {
            out.insert(o, v);
        }
        advance(&mut c);
    }
    Ok(out)
}

/// `ch Δ(λ) = e^λ ∏_{β∈R̂⁺}(1 − e^{−β})^{−mult β}` inside `t`.
pub fn verma_character(rs: &FiniteRootSystem, lambda: &AffineWeight, t: Truncation) -> Result<FormalCharacter> {
    Ok(FormalCharacter {
        base: lambda.clone(),
        terms: expand_product(rs, t, true)?,
        truncation: t,
    })
}

/// `ch Δ̄(λ)`: the same product over real positive roots only.
pub fn restricted_verma_character(
    rs: &FiniteRootSystem,
    lambda: &AffineWeight,
    t: Truncation,
) -> Result<FormalCharacter> {
    if !is_critical(rs, lambda) {
        return Err(Error::domain(format!("{lambda} is not critical")));
    }
    Ok(FormalCharacter {
        base: lambda.clone(),
        terms: expand_product(rs, t, false)?,
        truncation: t,
    })
}

/// `Σ_n p(n) e^{−nδ}` with base `0`.
pub fn partition_character(rs: &FiniteRootSystem, t: Truncation) -> Result<FormalCharacter> {
    let theta_height = rs.highest_root().height();
    let mut n_max = i64::from(t.delta_depth);
    if theta_height > 0 {
        n_max = n_max.min(i64::from(t.finite_height) / theta_height);
    }
    let p = super::series::partition_numbers(rs.rank(), n_max as usize);
    let mut terms = Vec::new();
    for (n, c) in p.into_iter().enumerate() {
        let c = i64::try_from(c).map_err(|_| overflow())?;
        terms.push((WeightOffset::delta_multiple(rs, n as i64), c));
    }
    FormalCharacter::from_terms(AffineWeight::zero(rs.rank()), terms, t)
}

/// `T^n`: base moves by `nδ`, terms are unchanged.
pub fn shift_character(ch: &FormalCharacter, n: i64) -> FormalCharacter {
    FormalCharacter {
        base: ch.base.shift_delta(&q(n)),
        terms: ch.terms.clone(),
        truncation: ch.truncation,
    }
}
