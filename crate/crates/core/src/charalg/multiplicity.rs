use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use super::character::{restricted_verma_character, FormalCharacter, Truncation};
use super::series::partition_numbers;
use crate::affine::{self, AffineWeight};
use crate::cartan::{FiniteRoot, FiniteRootSystem};
use crate::linkage::{arrow_down, arrow_up, classify, BlockWindow, Genericity};
use crate::rational::to_i64;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModuleKind {
    /// `[Δ(γ) : L(ν)]`
    Verma,
    /// `[Δ̄(γ) : L(ν)]`
    Restricted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Multiplicity {
    Known(u64),
    /// Not determined by the available results. Never read as 0.
    Unknown,
}

/// Which result an entry comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// `[M(γ) : L(γ)] = 1`.
    Diagonal,
    /// `ν ≰ γ`, so `L(ν)` cannot occur.
    WeightOrder,
    /// `[Δ(w.ν) : L(ν − nδ)] = p(n)` for anti-dominant `ν`.
    AntidominantVerma,
    /// `[Δ̄(γ) : L(ν)] = 1` iff `γ ∈ W(Λ).ν`, for anti-dominant `ν`.
    AntidominantRestricted,
    /// `[Δ(γ) : L(γ − nδ)] = p(n)` for dominant `γ` in a subgeneric class.
    SubgenericDominant,
    /// `[Δ(α↑γ) : L(γ − nδ)] = p(n)` for dominant `γ` in a subgeneric class.
    SubgenericArrowImage,
    /// `[Δ̄(γ) : L(ν)] = 1` iff `ν ∈ {γ, α↓γ}` in a subgeneric class.
    SubgenericRestricted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableEntry {
    pub value: u64,
    pub provenance: Provenance,
}

/// Composition multiplicities keyed by `(kind, γ, ν)`. Absent pairs are
/// [`Multiplicity::Unknown`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MultiplicityTable {
    entries: BTreeMap<(ModuleKind, AffineWeight, AffineWeight), TableEntry>,
}

impl MultiplicityTable {
    fn insert(&mut self, kind: ModuleKind, gamma: &AffineWeight, nu: &AffineWeight, value: u64, provenance: Provenance) {
        let provenance = if gamma == nu {
            Provenance::Diagonal
        } else {
            provenance
        };
        self.entries
            .insert((kind, gamma.clone(), nu.clone()), TableEntry { value, provenance });
    }

    pub fn entry(&self, kind: ModuleKind, gamma: &AffineWeight, nu: &AffineWeight) -> Option<&TableEntry> {
        self.entries.get(&(kind, gamma.clone(), nu.clone()))
    }

    pub fn get(&self, kind: ModuleKind, gamma: &AffineWeight, nu: &AffineWeight) -> Multiplicity {
        self.entry(kind, gamma, nu)
            .map_or(Multiplicity::Unknown, |e| Multiplicity::Known(e.value))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (ModuleKind, &AffineWeight, &AffineWeight, &TableEntry)> {
        self.entries.iter().map(|((k, g, n), e)| (*k, g, n, e))
    }

    /// `M[i][j] = [M(chain[i]) : L(chain[j])]`.
    pub fn matrix(&self, kind: ModuleKind, chain: &[AffineWeight]) -> Vec<Vec<Multiplicity>> {
        chain
            .iter()
            .map(|g| chain.iter().map(|n| self.get(kind, g, n)).collect())
            .collect()
    }

    /// For a chain listed from the top down: ones on the diagonal and known
    /// zeros above it.
    pub fn is_unitriangular(&self, kind: ModuleKind, chain: &[AffineWeight]) -> bool {
        let m = self.matrix(kind, chain);
        (0..chain.len()).all(|i| {
            m[i][i] == Multiplicity::Known(1) && (0..i).all(|j| m[i][j] == Multiplicity::Known(0))
        })
    }
}

fn partition_values(rank: usize, n: usize) -> Vec<u64> {
    partition_numbers(rank, n)
        .iter()
        .map(|c| c.to_u64().unwrap_or(u64::MAX))
        .collect()
}

fn delta_gap(gamma: &AffineWeight, nu: &AffineWeight) -> Option<usize> {
    to_i64(&(&gamma.delta - &nu.delta)).and_then(|n| usize::try_from(n).ok())
}

fn max_delta_gap(window: &BlockWindow) -> usize {
    let top = window.weights().map(|w| &w.delta).max();
    let bottom = window.weights().map(|w| &w.delta).min();
    match (top, bottom) {
        (Some(a), Some(b)) => crate::rational::ceil_i64(&(a - b)).map_or(0, |n| n as usize),
        _ => 0,
    }
}

/// Entries determined by an anti-dominant `ν`: for every `γ` in the window
/// and every `μ = ν + rδ` in the window, `[Δ(γ):L(μ)]` (when known) and
/// `[Δ̄(γ):L(μ)]`.
pub fn antidominant_mult_table(
    rs: &FiniteRootSystem,
    nu: &AffineWeight,
    window: &BlockWindow,
) -> Result<MultiplicityTable> {
    let class = classify(rs, nu);
    if !class.is_critical || !class.is_antidominant {
        return Err(Error::domain(format!("{nu} is not critical anti-dominant")));
    }
    if !window.contains(rs, nu) {
        return Err(Error::domain(format!("{nu} is not in the window")));
    }
    let image = class.finite_image;
    let columns: Vec<&AffineWeight> = window
        .weights()
        .filter(|m| m.finite == nu.finite)
        .collect();
    let p = partition_values(rs.rank(), max_delta_gap(window));

    let mut table = MultiplicityTable::default();
    for gamma in window.weights() {
        let in_image = image.contains(&gamma.finite);
        for &mu in &columns {
            let same_orbit = in_image && gamma.delta == mu.delta;
            table.insert(
                ModuleKind::Restricted,
                gamma,
                mu,
                u64::from(same_orbit),
                Provenance::AntidominantRestricted,
            );
            if !affine::leq(rs, mu, gamma) {
                table.insert(ModuleKind::Verma, gamma, mu, 0, Provenance::WeightOrder);
            } else if in_image {
                let n = delta_gap(gamma, mu).ok_or_else(|| {
                    Error::Integrity(format!("{mu} ≤ {gamma} with a negative δ-gap"))
                })?;
                table.insert(ModuleKind::Verma, gamma, mu, p[n], Provenance::AntidominantVerma);
            }
        }
    }
    Ok(table)
}

fn subgeneric_root(rs: &FiniteRootSystem, window: &BlockWindow) -> Result<FiniteRoot> {
    let class = classify(rs, window.base());
    match (class.genericity, class.subgeneric_root) {
        (Genericity::Subgeneric, Some(alpha)) => Ok(alpha),
        _ => Err(Error::domain(format!(
            "window around {} is not subgeneric",
            window.base()
        ))),
    }
}

/// Restricted entries for all pairs of the window, and the unrestricted
/// entries `[Δ(γ):L(γ−nδ)] = [Δ(α↑γ):L(γ−nδ)] = p(n)` for dominant `γ`.
pub fn subgeneric_mult_table(rs: &FiniteRootSystem, window: &BlockWindow) -> Result<MultiplicityTable> {
    let alpha = subgeneric_root(rs, window)?;
    let members: Vec<&AffineWeight> = window.weights().collect();
    let p = partition_values(rs.rank(), max_delta_gap(window));

    let mut table = MultiplicityTable::default();
    for &gamma in &members {
        let down = arrow_down(rs, gamma, &alpha)?;
        for &nu in &members {
            let v = u64::from(nu == gamma || *nu == down);
            table.insert(ModuleKind::Restricted, gamma, nu, v, Provenance::SubgenericRestricted);
            if nu == gamma {
                table.insert(ModuleKind::Verma, gamma, nu, 1, Provenance::Diagonal);
            } else if !affine::leq(rs, nu, gamma) {
                table.insert(ModuleKind::Verma, gamma, nu, 0, Provenance::WeightOrder);
            }
        }
    }
    for &gamma in &members {
        if !classify(rs, gamma).is_dominant {
            continue;
        }
        let up = arrow_up(rs, gamma, &alpha)?;
        let up_in_window = window.contains(rs, &up);
        for &mu in &members {
            if mu.finite != gamma.finite {
                continue;
            }
            let Some(n) = delta_gap(gamma, mu) else { continue };
            table.insert(ModuleKind::Verma, gamma, mu, p[n], Provenance::SubgenericDominant);
            if up_in_window {
                table.insert(ModuleKind::Verma, &up, mu, p[n], Provenance::SubgenericArrowImage);
            }
        }
    }
    Ok(table)
}

/// `ch L(ν)` inside `t` (possibly shrunk), by inverting the restricted
/// multiplicities.
///
/// In a subgeneric class this is `Σ_k (−1)^k ch Δ̄((α↓)^k ν)`, summed while
/// the chain stays in the window; if the chain leaves the window inside
/// `t`, the region is cut just above the first missing element. For a
/// generic class it is `ch Δ̄(ν)`. Other anti-dominant classes are not
/// covered by the multiplicity results and give a domain error.
pub fn simple_restricted_character(
    rs: &FiniteRootSystem,
    nu: &AffineWeight,
    window: &BlockWindow,
    t: Truncation,
) -> Result<FormalCharacter> {
    let class = classify(rs, nu);
    if !class.is_critical {
        return Err(Error::domain(format!("{nu} is not critical")));
    }
    if !window.contains(rs, nu) {
        return Err(Error::domain(format!("{nu} is not in the window")));
    }
    let ch = match class.genericity {
        Genericity::Generic => restricted_verma_character(rs, nu, t)?,
        Genericity::Subgeneric => {
            let alpha = subgeneric_root(rs, window)?;
            alternating_chain(rs, nu, &alpha, window, t)?
        }
        Genericity::Other => {
            return Err(Error::domain(format!(
                "simple characters of {nu} are not determined by the available multiplicities"
            )))
        }
    };
    if let Some((o, c)) = ch.terms().iter().find(|(_, &c)| c < 0) {
        return Err(Error::Integrity(format!(
            "negative coefficient {c} at offset {:?} of ch L({nu})",
            o.0
        )));
    }
    Ok(ch)
}

fn alternating_chain(
    rs: &FiniteRootSystem,
    nu: &AffineWeight,
    alpha: &FiniteRoot,
    window: &BlockWindow,
    mut t: Truncation,
) -> Result<FormalCharacter> {
    let mut terms: Vec<(AffineWeight, i64)> = Vec::new();
    let mut current = nu.clone();
    let mut sign = 1;
    loop {
        let o = affine::offset(rs, nu, &current)
            .ok_or_else(|| Error::Integrity(format!("{current} not comparable with {nu}")))?;
        if !t.contains(&o) {
            break;
        }
        if !window.contains(rs, &current) {
            if o.delta_depth() > 0 {
                t.delta_depth = o.delta_depth() as u32 - 1;
            } else {
                t.finite_height = o.finite_height() as u32 - 1;
            }
            break;
        }
        terms.push((current.clone(), sign));
        current = arrow_down(rs, &current, alpha)?;
        sign = -sign;
    }

    let mut acc = FormalCharacter::zero(nu.clone(), t);
    for (gamma, sign) in terms {
        let o = affine::offset(rs, nu, &gamma).expect("checked above");
        let inner = Truncation::new(
            t.delta_depth - o.delta_depth() as u32,
            t.finite_height - o.finite_height() as u32,
        );
        let term = restricted_verma_character(rs, &gamma, inner)?.rebase(rs, nu)?;
        acc = acc.add(&term.scale(sign)?.restrict(&t))?;
    }
    Ok(acc)
}
