//! Kac–Kazhdan linkage and the structure of critical classes.
//!
//! Blocks are infinite, so everything here works on a [`BlockWindow`]: the
//! part of a class reachable from a base weight through linkage steps that
//! stay inside [`WindowBounds`] around the base.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::affine::{self, rho, AffineRoot, AffineWeight, WeightOffset};
use crate::cartan::{FiniteRoot, FiniteRootSystem, FiniteWeight};
use crate::rational::{ceil_i64, q, to_i64, Q};
use crate::{Error, Result};

/// Default hard cap on the number of window members.
pub const DEFAULT_MEMBER_CAP: usize = 50_000;

/// Radius of the `n`-scan used by [`arrow_up`] and [`arrow_down`].
const ARROW_SEARCH_RADIUS: i64 = 8;

/// Window around a base weight `λ`: members `ν` satisfy `|c₀| ≤
/// delta_depth_max` and `|ht(finite drop)| ≤ finite_height_max`, where
/// `λ − ν = c₀δ + (finite drop)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowBounds {
    pub delta_depth_max: u32,
    pub finite_height_max: u32,
}

impl WindowBounds {
    pub fn new(delta_depth_max: u32, finite_height_max: u32) -> Self {
        WindowBounds {
            delta_depth_max,
            finite_height_max,
        }
    }

    /// Depth 6 and finite height `8·h∨`.
    pub fn default_for(rs: &FiniteRootSystem) -> Self {
        Self::new(6, 8 * rs.dual_coxeter() as u32)
    }

    fn admits(&self, rs: &FiniteRootSystem, o: &WeightOffset) -> bool {
        o.delta_depth().unsigned_abs() <= u64::from(self.delta_depth_max)
            && o.finite_drop_height(rs).unsigned_abs() <= u64::from(self.finite_height_max)
    }
}

/// `⟨λ, K⟩ = −h∨`.
pub fn is_critical(rs: &FiniteRootSystem, lambda: &AffineWeight) -> bool {
    lambda.level == q(-rs.dual_coxeter())
}

/// The five equivalent characterizations of a critical class, each computed
/// on its own route.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CriticalTests {
    /// `T` preserves the block. There is no finite test for this beyond the
    /// `δ`-linkage below, so it is reported as equal to `delta_linked`.
    pub shift_preserves_block: bool,
    /// `λ + δ ∼ λ`, found by a window search.
    pub delta_linked: bool,
    /// `(λ + ρ, δ) = 0`, so imaginary roots are integral.
    pub imaginary_integral: bool,
    /// `⟨λ, K⟩ = −h∨`.
    pub critical_level: bool,
    /// `s_{ᾱ}.λ ≡ s_{ᾱ+δ}.λ mod δ` for every finite root `ᾱ`.
    pub finite_factorization: bool,
}

impl CriticalTests {
    pub fn as_array(&self) -> [bool; 5] {
        [
            self.shift_preserves_block,
            self.delta_linked,
            self.imaginary_integral,
            self.critical_level,
            self.finite_factorization,
        ]
    }

    pub fn all_agree(&self) -> bool {
        let a = self.as_array();
        a.iter().all(|&x| x == a[0])
    }
}

pub fn critical_tests(rs: &FiniteRootSystem, lambda: &AffineWeight) -> Result<CriticalTests> {
    if lambda.rank() != rs.rank() {
        return Err(Error::Dimension {
            expected: rs.rank(),
            found: lambda.rank(),
        });
    }
    let bounds = WindowBounds::new(1, 2 * rs.dual_coxeter() as u32);
    let window = block_window(rs, lambda, bounds)?;
    let delta_linked = window.contains(rs, &lambda.shift_delta(&q(1)));

    let shifted = lambda + &rho(rs);
    let imaginary_integral =
        affine::affine_form(rs, &shifted, &AffineWeight::delta(rs.rank()))?.is_zero();

    let critical_level = lambda.level == -&rho(rs).level;

    let finite_factorization = rs.roots().iter().all(|alpha| {
        let a = affine::reflect_unchecked(rs, lambda, alpha, 0, true);
        let b = affine::reflect_unchecked(rs, lambda, alpha, 1, true);
        a.finite == b.finite && a.level == b.level
    });

    Ok(CriticalTests {
        shift_preserves_block: delta_linked,
        delta_linked,
        imaginary_integral,
        critical_level,
        finite_factorization,
    })
}

/// How one linkage step `ν = λ − nβ` was produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    /// `ν = λ − n·β` for a real positive root `β` with `n = ⟨λ+ρ, β∨⟩`.
    Real { root: AffineRoot, n: i64 },
    /// `ν = λ − k·δ`; all pairs `(m, n)` with `mn = k` collapse to this.
    Imaginary { k: i64 },
}

/// Candidate steps `λ − p·β` for real positive `β` with `p = ⟨λ+ρ,β∨⟩` a
/// nonzero integer, restricted to weights admitted by `bounds` around `base`.
/// Positive `p` gives `≼`-predecessors, negative `p` the inverse direction.
fn real_steps(
    rs: &FiniteRootSystem,
    base: &AffineWeight,
    lambda: &AffineWeight,
    bounds: WindowBounds,
    mut emit: impl FnMut(AffineWeight, Step),
) {
    let shifted = lambda + &rho(rs);
    let depth = i64::from(bounds.delta_depth_max);
    for alpha in rs.roots() {
        let a = rs.pairing(&shifted.finite, &alpha);
        let b = q(2) * &shifted.level / rs.root_norm(&alpha);
        // |p·n| must stay within the 2·depth span of the window.
        let radius = if b.is_zero() {
            if !a.is_integer() || a.is_zero() {
                continue;
            }
            2 * depth + 1
        } else {
            let ratio = (&a / &b).abs();
            let spread = q(4 * depth) / b.abs();
            ceil_i64(&(ratio * q(2))).unwrap_or(i64::MAX / 4)
                + ceil_i64(&spread).unwrap_or(i64::MAX / 4)
                + 1
        };
        let start = if alpha.is_positive() { 0 } else { 1 };
        for n in (-radius..=radius).filter(|&n| n >= start) {
            let p = &a + &b * q(n);
            let Some(p) = to_i64(&p) else { continue };
            if p == 0 {
                continue;
            }
            let beta = AffineWeight::new(alpha.weight().clone(), Q::zero(), q(n));
            let nu = lambda - &beta.scale(&q(p));
            let admitted = affine::offset(rs, base, &nu).is_some_and(|o| bounds.admits(rs, &o));
            if admitted {
                emit(nu, Step::Real {
                    root: AffineRoot::real(alpha.clone(), n),
                    n: p,
                });
            }
        }
    }
}

fn imaginary_steps(
    rs: &FiniteRootSystem,
    base: &AffineWeight,
    lambda: &AffineWeight,
    bounds: WindowBounds,
    both_directions: bool,
    mut emit: impl FnMut(AffineWeight, Step),
) {
    if !is_critical(rs, lambda) {
        return;
    }
    let depth = i64::from(bounds.delta_depth_max);
    let signs: &[i64] = if both_directions { &[1, -1] } else { &[1] };
    for k in 1..=2 * depth {
        for &s in signs {
            let nu = lambda.shift_delta(&q(-s * k));
            let admitted = affine::offset(rs, base, &nu).is_some_and(|o| bounds.admits(rs, &o));
            if admitted {
                emit(nu, Step::Imaginary { k: s * k });
            }
        }
    }
}

/// One-step `≼`-predecessors of `λ` inside `bounds` around `λ`.
pub fn kk_successors(
    rs: &FiniteRootSystem,
    lambda: &AffineWeight,
    bounds: WindowBounds,
) -> Vec<(AffineWeight, Step)> {
    let mut out = Vec::new();
    real_steps(rs, lambda, lambda, bounds, |nu, step| {
        if matches!(step, Step::Real { n, .. } if n > 0) {
            out.push((nu, step));
        }
    });
    imaginary_steps(rs, lambda, lambda, bounds, false, |nu, step| out.push((nu, step)));
    out
}

/// The finite slice of the class of `base` inside `bounds`.
#[derive(Debug, Clone)]
pub struct BlockWindow {
    base: AffineWeight,
    bounds: WindowBounds,
    members: BTreeMap<WeightOffset, AffineWeight>,
    integral_finite_roots: Vec<FiniteRoot>,
    is_critical: bool,
}

impl BlockWindow {
    pub fn base(&self) -> &AffineWeight {
        &self.base
    }

    pub fn bounds(&self) -> WindowBounds {
        self.bounds
    }

    pub fn is_critical(&self) -> bool {
        self.is_critical
    }

    /// `R(Λ)`: integral finite roots, positive and negative.
    pub fn integral_finite_roots(&self) -> &[FiniteRoot] {
        &self.integral_finite_roots
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members keyed by their offset `base − member`.
    pub fn members(&self) -> impl Iterator<Item = (&WeightOffset, &AffineWeight)> {
        self.members.iter()
    }

    pub fn weights(&self) -> impl Iterator<Item = &AffineWeight> {
        self.members.values()
    }

    pub fn contains(&self, rs: &FiniteRootSystem, w: &AffineWeight) -> bool {
        affine::offset(rs, &self.base, w).is_some_and(|o| self.members.get(&o) == Some(w))
    }
}

pub fn block_window(
    rs: &FiniteRootSystem,
    lambda: &AffineWeight,
    bounds: WindowBounds,
) -> Result<BlockWindow> {
    block_window_capped(rs, lambda, bounds, DEFAULT_MEMBER_CAP)
}

/// Breadth-first closure of `λ` under linkage steps in both directions.
pub fn block_window_capped(
    rs: &FiniteRootSystem,
    lambda: &AffineWeight,
    bounds: WindowBounds,
    cap: usize,
) -> Result<BlockWindow> {
    if lambda.rank() != rs.rank() {
        return Err(Error::Dimension {
            expected: rs.rank(),
            found: lambda.rank(),
        });
    }
    let mut members = BTreeMap::new();
    members.insert(WeightOffset::zero(rs.rank()), lambda.clone());
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(current) = queue.pop_front() {
        let mut found = Vec::new();
        real_steps(rs, lambda, &current, bounds, |nu, _| found.push(nu));
        imaginary_steps(rs, lambda, &current, bounds, true, |nu, _| found.push(nu));
        for nu in found {
            let key = affine::offset(rs, lambda, &nu).expect("steps stay in the root lattice");
            if members.contains_key(&key) {
                continue;
            }
            if members.len() >= cap {
                return Err(Error::Resource {
                    what: "block window members",
                    limit: cap,
                    requested: members.len() + 1,
                });
            }
            members.insert(key, nu.clone());
            queue.push_back(nu);
        }
    }
    Ok(BlockWindow {
        base: lambda.clone(),
        bounds,
        members,
        integral_finite_roots: integral_roots(rs, lambda),
        is_critical: is_critical(rs, lambda),
    })
}

/// `R(Λ) = {α ∈ R : ⟨λ+ρ, α∨⟩ ∈ ℤ}`.
pub fn integral_roots(rs: &FiniteRootSystem, lambda: &AffineWeight) -> Vec<FiniteRoot> {
    let shifted = &lambda.finite + rs.rho();
    rs.roots()
        .into_iter()
        .filter(|alpha| rs.pairing(&shifted, alpha).is_integer())
        .collect()
}

fn positive_integral_roots(rs: &FiniteRootSystem, lambda: &AffineWeight) -> Vec<FiniteRoot> {
    integral_roots(rs, lambda)
        .into_iter()
        .filter(FiniteRoot::is_positive)
        .collect()
}

/// `Λ̄`: the `W(Λ)` dot-orbit of `λ̄`.
pub fn finite_image(rs: &FiniteRootSystem, lambda: &AffineWeight) -> BTreeSet<FiniteWeight> {
    rs.orbit_under(&lambda.finite, true, &positive_integral_roots(rs, lambda))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Genericity {
    Generic,
    Subgeneric,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub is_critical: bool,
    /// Meaningful for critical weights only; `Other` otherwise.
    pub genericity: Genericity,
    pub subgeneric_root: Option<FiniteRoot>,
    /// `⟨λ̄+ρ̄, α∨⟩ ≠ 0` for all `α ∈ R(Λ)`.
    pub is_regular: bool,
    /// Trivial stabilizer under the dot-action of the full finite Weyl group.
    pub is_regular_full_weyl: bool,
    pub is_dominant: bool,
    pub is_antidominant: bool,
    pub finite_image: BTreeSet<FiniteWeight>,
}

pub fn classify(rs: &FiniteRootSystem, lambda: &AffineWeight) -> Classification {
    let critical = is_critical(rs, lambda);
    let shifted = &lambda.finite + rs.rho();
    let integral = positive_integral_roots(rs, lambda);
    let image = rs.orbit_under(&lambda.finite, true, &integral);

    let genericity = match (critical, image.len()) {
        (true, 1) => Genericity::Generic,
        (true, 2) => Genericity::Subgeneric,
        _ => Genericity::Other,
    };
    let subgeneric_root = if genericity == Genericity::Subgeneric {
        let other = image
            .iter()
            .find(|w| **w != lambda.finite)
            .expect("two-element image");
        integral
            .iter()
            .find(|alpha| rs.reflect(&lambda.finite, alpha, true) == *other)
            .cloned()
    } else {
        None
    };
    let pairings: Vec<Q> = integral.iter().map(|a| rs.pairing(&shifted, a)).collect();

    Classification {
        is_critical: critical,
        genericity,
        subgeneric_root,
        is_regular: pairings.iter().all(|p| !p.is_zero()),
        is_regular_full_weyl: rs
            .positive_roots()
            .iter()
            .all(|a| !rs.pairing(&shifted, a).is_zero()),
        is_dominant: pairings.iter().all(|p| !p.is_negative()),
        is_antidominant: pairings.iter().all(|p| !p.is_positive()),
        finite_image: image,
    }
}

/// `m = ⟨λ̄+ρ̄, α∨⟩` after checking the preconditions of `α↑`/`α↓`.
fn arrow_pairing(rs: &FiniteRootSystem, lambda: &AffineWeight, alpha: &FiniteRoot) -> Result<i64> {
    if !is_critical(rs, lambda) {
        return Err(Error::domain(format!("{lambda} is not critical")));
    }
    if !alpha.is_positive() {
        return Err(Error::domain("arrow maps need a positive root"));
    }
    let m = rs.pairing(&(&lambda.finite + rs.rho()), alpha);
    to_i64(&m).ok_or_else(|| Error::domain(format!("⟨λ+ρ, α∨⟩ = {m} is not an integer")))
}

/// `s_{α+nδ}.λ` for `n` in the search radius.
fn alpha_family(
    rs: &FiniteRootSystem,
    lambda: &AffineWeight,
    alpha: &FiniteRoot,
) -> Vec<AffineWeight> {
    (-ARROW_SEARCH_RADIUS..=ARROW_SEARCH_RADIUS)
        .map(|n| affine::reflect_unchecked(rs, lambda, alpha, n, true))
        .collect()
}

/// Unique `≤`-extremal element of `candidates`, if any.
fn extremal(
    rs: &FiniteRootSystem,
    candidates: Vec<AffineWeight>,
    minimal: bool,
) -> Option<AffineWeight> {
    candidates.iter().find_map(|c| {
        candidates
            .iter()
            .all(|d| {
                if minimal {
                    affine::leq(rs, c, d)
                } else {
                    affine::leq(rs, d, c)
                }
            })
            .then(|| c.clone())
    })
}

/// `α↑λ`: the minimal `s_{α,n}.λ` that is `≥ λ`.
pub fn arrow_up(rs: &FiniteRootSystem, lambda: &AffineWeight, alpha: &FiniteRoot) -> Result<AffineWeight> {
    arrow_pairing(rs, lambda, alpha)?;
    let candidates: Vec<AffineWeight> = alpha_family(rs, lambda, alpha)
        .into_iter()
        .filter(|mu| affine::leq(rs, lambda, mu))
        .collect();
    let found = extremal(rs, candidates, true)
        .ok_or_else(|| Error::Integrity("no minimal element above λ".into()))?;
    let closed = arrow_up_closed_form(rs, lambda, alpha)?;
    if found != closed {
        return Err(Error::Integrity(format!(
            "α↑ search gave {found}, closed form gave {closed}"
        )));
    }
    Ok(found)
}

/// `λ + |m|α` if `m < 0`, `λ − m(α − δ)` if `m > 0`, `λ` if `m = 0`.
pub fn arrow_up_closed_form(
    rs: &FiniteRootSystem,
    lambda: &AffineWeight,
    alpha: &FiniteRoot,
) -> Result<AffineWeight> {
    let m = arrow_pairing(rs, lambda, alpha)?;
    let a = AffineWeight::from_finite(alpha.weight().clone());
    Ok(match m.signum() {
        -1 => lambda + &a.scale(&q(-m)),
        1 => &lambda.shift_delta(&q(m)) - &a.scale(&q(m)),
        _ => lambda.clone(),
    })
}

/// `α↓λ`, the inverse of `α↑`: the maximal `s_{α,n}.λ` that is `≤ λ`.
pub fn arrow_down(rs: &FiniteRootSystem, lambda: &AffineWeight, alpha: &FiniteRoot) -> Result<AffineWeight> {
    arrow_pairing(rs, lambda, alpha)?;
    let candidates: Vec<AffineWeight> = alpha_family(rs, lambda, alpha)
        .into_iter()
        .filter(|mu| affine::leq(rs, mu, lambda))
        .collect();
    let found = extremal(rs, candidates, false)
        .ok_or_else(|| Error::Integrity("no maximal element below λ".into()))?;
    let closed = arrow_down_closed_form(rs, lambda, alpha)?;
    if found != closed {
        return Err(Error::Integrity(format!(
            "α↓ search gave {found}, closed form gave {closed}"
        )));
    }
    Ok(found)
}

/// `λ − mα` if `m > 0`, `λ + |m|(α − δ)` if `m < 0`, `λ` if `m = 0`.
pub fn arrow_down_closed_form(
    rs: &FiniteRootSystem,
    lambda: &AffineWeight,
    alpha: &FiniteRoot,
) -> Result<AffineWeight> {
    let m = arrow_pairing(rs, lambda, alpha)?;
    let a = AffineWeight::from_finite(alpha.weight().clone());
    Ok(match m.signum() {
        1 => lambda - &a.scale(&q(m)),
        -1 => &lambda.shift_delta(&q(m)) + &a.scale(&q(-m)),
        _ => lambda.clone(),
    })
}

/// `c_λ = (λ+ρ, λ+ρ) − (ρ, ρ)`.
pub fn casimir_scalar(rs: &FiniteRootSystem, lambda: &AffineWeight) -> Q {
    let r = rho(rs);
    let shifted = lambda + &r;
    affine::form_unchecked(rs, &shifted, &shifted) - affine::form_unchecked(rs, &r, &r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn a1() -> FiniteRootSystem {
        FiniteRootSystem::from_label("A1").unwrap()
    }

    /// `c·ω + level·Λ₀`.
    fn w1(c: Q, level: i64) -> AffineWeight {
        AffineWeight::new(FiniteWeight(alloc::vec![c]), q(level), Q::zero())
    }

    fn alpha(rs: &FiniteRootSystem) -> AffineWeight {
        AffineWeight::from_finite(rs.simple_root(0).weight().clone())
    }

    #[test]
    fn critical_tests_examples() {
        let rs = a1();
        let t = critical_tests(&rs, &w1(q(1), -2)).unwrap();
        assert_eq!(t.as_array(), [true; 5]);
        let t = critical_tests(&rs, &AffineWeight::zero(1)).unwrap();
        assert_eq!(t.as_array(), [false; 5]);
        for label in ["A1", "A2"] {
            let rs = FiniteRootSystem::from_label(label).unwrap();
            let t = critical_tests(&rs, &-&rho(&rs)).unwrap();
            assert_eq!(t.as_array(), [true; 5]);
        }
    }

    #[test]
    fn successors_at_critical_level() {
        let rs = a1();
        let lambda = w1(q(1), -2);
        let bounds = WindowBounds::new(3, 8);
        let succ = kk_successors(&rs, &lambda, bounds);
        let weights: Vec<&AffineWeight> = succ.iter().map(|(w, _)| w).collect();
        assert!(weights.contains(&&lambda.shift_delta(&q(-1))));
        let two_alpha = &lambda - &alpha(&rs).scale(&q(2));
        let step = succ.iter().find(|(w, _)| *w == two_alpha).map(|(_, s)| s.clone());
        match step {
            Some(Step::Real { root, n }) => {
                assert_eq!(n, 2);
                assert_eq!(root.delta_multiple(), 0);
            }
            other => panic!("missing λ−2α step: {other:?}"),
        }
        // Only predecessors: everything emitted is ≤ λ.
        for (w, _) in &succ {
            assert!(affine::leq(&rs, w, &lambda));
        }
    }

    #[test]
    fn no_delta_steps_off_critical_level() {
        let rs = a1();
        let lambda = w1(frac(1, 3), 0);
        let succ = kk_successors(&rs, &lambda, WindowBounds::new(4, 8));
        assert!(succ
            .iter()
            .all(|(w, _)| w.finite != lambda.finite || w == &lambda));
        assert!(succ.iter().all(|(_, s)| matches!(s, Step::Real { .. })));
    }

    #[test]
    fn windows() {
        let rs = a1();
        let lambda = w1(q(1), -2);
        let win = block_window(&rs, &lambda, WindowBounds::new(3, 0)).unwrap();
        for k in 0..=3 {
            assert!(win.contains(&rs, &lambda.shift_delta(&q(-k))));
        }

        let generic = w1(frac(1, 2), -2);
        let win = block_window(&rs, &generic, WindowBounds::new(3, 8)).unwrap();
        assert_eq!(win.len(), 7);
        assert!(win.weights().all(|w| w.finite == generic.finite));

        let minus_rho = -&rho(&rs);
        let win = block_window(&rs, &minus_rho, WindowBounds::new(2, 8)).unwrap();
        assert_eq!(win.len(), 5);
        assert!(win.weights().all(|w| w.finite == minus_rho.finite));
    }

    #[test]
    fn window_cap_is_enforced() {
        let rs = a1();
        let err = block_window_capped(&rs, &w1(q(1), -2), WindowBounds::new(6, 16), 5).unwrap_err();
        assert!(matches!(err, Error::Resource { limit: 5, .. }));
    }

    #[test]
    fn integral_root_examples() {
        let rs = a1();
        assert_eq!(integral_roots(&rs, &w1(q(1), -2)).len(), 2);
        assert!(integral_roots(&rs, &w1(frac(1, 2), -2)).is_empty());
        let rs = FiniteRootSystem::from_label("A2").unwrap();
        assert_eq!(integral_roots(&rs, &-&rho(&rs)).len(), 6);
    }

    #[test]
    fn classification_examples() {
        let rs = a1();
        let c = classify(&rs, &w1(q(1), -2));
        assert_eq!(c.genericity, Genericity::Subgeneric);
        assert_eq!(c.subgeneric_root.as_ref(), Some(rs.simple_root(0)));
        assert!(c.is_regular && c.is_dominant && !c.is_antidominant);

        let c = classify(&rs, &w1(frac(1, 2), -2));
        assert_eq!(c.genericity, Genericity::Generic);

        let c = classify(&rs, &w1(q(-3), -2));
        assert_eq!(c.genericity, Genericity::Subgeneric);
        assert!(c.is_antidominant && !c.is_dominant);

        let c = classify(&rs, &w1(q(1), 0));
        assert!(!c.is_critical);
        assert_eq!(c.genericity, Genericity::Other);
    }

    #[test]
    fn regularity_variants_coincide() {
        // A zero pairing is integral, so both notions detect the same walls.
        let rs = FiniteRootSystem::from_label("A2").unwrap();
        for (a, b) in [(q(1), q(-1)), (frac(1, 2), q(-1)), (frac(1, 3), frac(1, 2)), (q(0), q(0))] {
            let lambda = AffineWeight::new(FiniteWeight(alloc::vec![a, b]), q(-3), Q::zero());
            let c = classify(&rs, &lambda);
            assert_eq!(c.is_regular, c.is_regular_full_weyl);
        }
    }

    #[test]
    fn arrows() {
        let rs = a1();
        let a = rs.simple_root(0).clone();
        let lambda = w1(q(1), -2);
        let up = arrow_up(&rs, &lambda, &a).unwrap();
        assert_eq!(up, &lambda.shift_delta(&q(2)) - &alpha(&rs).scale(&q(2)));
        assert_eq!(arrow_down(&rs, &up, &a).unwrap(), lambda);

        let down = arrow_down(&rs, &lambda, &a).unwrap();
        assert_eq!(down, &lambda - &alpha(&rs).scale(&q(2)));
        assert_eq!(arrow_up(&rs, &down, &a).unwrap(), lambda);

        let anti = w1(q(-3), -2);
        assert_eq!(
            arrow_up(&rs, &anti, &a).unwrap(),
            &anti + &alpha(&rs).scale(&q(2))
        );

        let wall = w1(q(-1), -2);
        assert_eq!(arrow_up(&rs, &wall, &a).unwrap(), wall);
        assert_eq!(arrow_down(&rs, &wall, &a).unwrap(), wall);
    }

    #[test]
    fn arrow_preconditions() {
        let rs = a1();
        let a = rs.simple_root(0).clone();
        assert!(matches!(
            arrow_up(&rs, &w1(frac(1, 2), -2), &a),
            Err(Error::Domain(_))
        ));
        assert!(matches!(arrow_up(&rs, &w1(q(1), 0), &a), Err(Error::Domain(_))));
        assert!(matches!(
            arrow_up(&rs, &w1(q(1), -2), &a.negate()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn casimir_examples() {
        let rs = a1();
        // (λ+ρ) vanishes, leaving −(ρ,ρ) = −(ρ̄,ρ̄).
        assert_eq!(casimir_scalar(&rs, &-&rho(&rs)), frac(-1, 2));
        assert_eq!(casimir_scalar(&rs, &w1(q(1), -2)), frac(3, 2));
        let lambda = w1(frac(2, 3), 5);
        let beta = AffineRoot::real(rs.simple_root(0).clone(), 3);
        let image = affine::reflect(&rs, &lambda, &beta, true).unwrap();
        assert_eq!(casimir_scalar(&rs, &image), casimir_scalar(&rs, &lambda));
    }
}
