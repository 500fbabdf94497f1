//! Power series in `q` with rational exponents.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::affine::AffineWeight;
use crate::cartan::FiniteRootSystem;
use crate::linkage::{classify, is_critical};
use crate::rational::{q, Q};
use crate::{Error, Result};

/// `Σ c_e q^e`, complete for every exponent `e ≤ truncation`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    coefficients: BTreeMap<Q, BigInt>,
    truncation: Q,
}

impl QSeries {
    pub fn zero(truncation: Q) -> Self {
        QSeries {
            coefficients: BTreeMap::new(),
            truncation,
        }
    }

    pub fn monomial(exponent: Q, truncation: Q) -> Self {
        let mut s = Self::zero(truncation);
        s.add_term(exponent, BigInt::one());
        s
    }

    /// Builds a series from `(exponent, coefficient)` pairs, dropping terms
    /// beyond the truncation.
    pub fn from_terms(terms: impl IntoIterator<Item = (Q, BigInt)>, truncation: Q) -> Self {
        let mut s = Self::zero(truncation);
        for (e, c) in terms {
            s.add_term(e, c);
        }
        s
    }

    fn add_term(&mut self, exponent: Q, c: BigInt) {
        if exponent > self.truncation || c.is_zero() {
            return;
        }
        let slot = self.coefficients.entry(exponent.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coefficients.remove(&exponent);
        }
    }

    pub fn truncation(&self) -> &Q {
        &self.truncation
    }

    pub fn coefficient(&self, exponent: &Q) -> BigInt {
        self.coefficients.get(exponent).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Q, &BigInt)> {
        self.coefficients.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Multiplication by `q^e`.
    pub fn shift(&self, e: &Q) -> Self {
        QSeries {
            coefficients: self
                .coefficients
                .iter()
                .map(|(k, v)| (k + e, v.clone()))
                .collect(),
            truncation: &self.truncation + e,
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(
            self.coefficients.iter().map(|(k, v)| (k.clone(), v * c)),
            self.truncation.clone(),
        )
    }

    /// Keep only exponents `≤ t`; `t` may not exceed the current truncation.
    pub fn truncate(&self, t: &Q) -> Self {
        let t = t.min(&self.truncation).clone();
        Self::from_terms(
            self.coefficients
                .iter()
                .map(|(k, v)| (k.clone(), v.clone())),
            t,
        )
    }

    pub fn add(&self, other: &QSeries) -> Self {
        let t = self.truncation.clone().min(other.truncation.clone());
        let mut out = self.truncate(&t);
        for (k, v) in &other.coefficients {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &QSeries) -> Self {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    /// Product of two series, complete up to the smaller of
    /// `t₁ + min e₂` and `t₂ + min e₁`.
    pub fn mul(&self, other: &QSeries) -> Self {
        let t = match (self.min_exponent(), other.min_exponent()) {
            (Some(a), Some(b)) => (&self.truncation + b).min(&other.truncation + a),
            _ => {
                // one factor is zero: the product is zero wherever that factor is complete
                let t = if self.is_zero() {
                    self.truncation.clone()
                } else {
                    other.truncation.clone()
                };
                return Self::zero(t);
            }
        };
        let mut out = Self::zero(t);
        for (a, x) in &self.coefficients {
            for (b, y) in &other.coefficients {
                out.add_term(a + b, x * y);
            }
        }
        out
    }

    fn min_exponent(&self) -> Option<&Q> {
        self.coefficients.keys().next()
    }

    /// Equality of coefficients up to the common truncation.
    pub fn agrees_with(&self, other: &QSeries) -> bool {
        let t = self.truncation.clone().min(other.truncation.clone());
        self.truncate(&t).coefficients == other.truncate(&t).coefficients
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            write!(f, "0")?;
        }
        for (i, (e, c)) in self.coefficients.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}q^{e}")?;
        }
        write!(f, " + O(q^>{})", self.truncation)
    }
}

/// Integer coefficients `p(0..=n)` of `∏_{j≥1}(1−q^j)^{−rank}`.
pub(crate) fn partition_numbers(rank: usize, n: usize) -> Vec<BigInt> {
    let mut a = vec![BigInt::zero(); n + 1];
    a[0] = BigInt::one();
    for j in 1..=n {
        for _ in 0..rank {
            for i in j..=n {
                let prev = a[i - j].clone();
                a[i] += prev;
            }
        }
    }
    a
}

/// `Σ_{n≤N} p(n) qⁿ` with `Σ p(n)qⁿ = ∏_{j≥1}(1−q^j)^{−rank}`.
pub fn p_series(rank: usize, n: u32) -> QSeries {
    let p = partition_numbers(rank, n as usize);
    QSeries::from_terms(
        p.into_iter().enumerate().map(|(i, c)| (q(i as i64), c)),
        q(i64::from(n)),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FKind {
    Verma,
    Simple,
}

/// q-character of the image of `Δ(λ)` or `L(λ)` under the functor `F`,
/// complete up to `q^{−⟨λ,D⟩+N}`.
pub fn q_character_f(rs: &FiniteRootSystem, lambda: &AffineWeight, kind: FKind, n: u32) -> Result<QSeries> {
    if !is_critical(rs, lambda) {
        return Err(Error::domain(alloc::format!("{lambda} is not critical")));
    }
    let lead = -lambda.delta.clone();
    Ok(match kind {
        FKind::Verma => p_series(rs.rank(), n).shift(&lead),
        FKind::Simple => {
            let t = &lead + q(i64::from(n));
            if classify(rs, lambda).is_antidominant {
                QSeries::monomial(lead, t)
            } else {
                QSeries::zero(t)
            }
        }
    })
}
