use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{ToPrimitive, Zero};

use super::algebra::AlgebraSpec;
use super::module::{build_pbw_module, Lowering, PBWModule, Raising, Vector};
use crate::affine::{self, AffineWeight, WeightOffset};
use crate::cartan::FiniteRootSystem;
use crate::charalg::{restricted_verma_character, FormalCharacter, Truncation};
use crate::linalg::{span_basis, Matrix};
use crate::linkage::{arrow_up, classify, is_critical, Genericity};
use crate::rational::{q, Q};
use crate::{Error, Result};

fn sl2_roots() -> FiniteRootSystem {
    FiniteRootSystem::from_label("A1").expect("A1 is supported")
}

fn p(n: usize) -> u64 {
    crate::charalg::p_series(1, n as u32)
        .coefficient(&q(n as i64))
        .to_u64()
        .unwrap_or(u64::MAX)
}

/// `dim Hom(Δ(μ), Δ(λ))`, the singular-vector dimension of `Δ(λ)` at
/// weight `μ`.
pub fn hom_dim_verma(
    spec: &AlgebraSpec,
    lambda: &AffineWeight,
    mu: &AffineWeight,
    bounds: Truncation,
) -> Result<usize> {
    let rs = sl2_roots();
    let o = affine::offset(&rs, lambda, mu)
        .filter(WeightOffset::is_nonnegative)
        .ok_or_else(|| Error::domain(format!("{mu} is not ≤ {lambda}")))?;
    if !bounds.contains(&o) {
        return Err(Error::OutOfBounds(format!("offset {:?} outside {bounds:?}", o.0)));
    }
    build_pbw_module(spec, lambda, bounds)?.sing_dim(&o)
}

/// One line of a singular-vector scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularRow {
    pub offset: WeightOffset,
    pub dim: usize,
    pub sing_dim: usize,
    /// `p(n)` at `nδ` for a critical module, 0 at `nδ` (`n ≥ 1`) otherwise.
    pub expected: u64,
}

impl SingularRow {
    pub fn matches(&self) -> bool {
        self.sing_dim as u64 == self.expected
    }
}

/// Singular-vector dimensions at `nδ` for `0 ≤ n ≤ depth`.
pub fn singular_scan(m: &PBWModule, depth: u32) -> Result<Vec<SingularRow>> {
    let rs = sl2_roots();
    let critical = is_critical(&rs, m.highest_weight());
    (0..=depth)
        .map(|n| {
            let o = WeightOffset::delta_multiple(&rs, i64::from(n));
            let expected = if critical || n == 0 { p(n as usize) } else { 0 };
            Ok(SingularRow {
                dim: m.dim(&o)?,
                sing_dim: m.sing_dim(&o)?,
                expected,
                offset: o,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientReport {
    /// Offsets where every singular generator of the submodule has been
    /// included: `c₀ ≤ depth` inside the module bounds.
    pub region: Truncation,
    /// Character of `Δ(λ)/⟨singular vectors at nδ, 1 ≤ n ≤ depth⟩`.
    pub character: FormalCharacter,
    pub expected: FormalCharacter,
    pub character_match: bool,
    /// `(n, dim)` of singular vectors of `Δ(λ)` at `nδ`.
    pub singular_dims: Vec<(u32, usize)>,
    /// `(n, dim)` of `n̂₊`-invariants of weight `λ − nδ` in the quotient.
    pub quotient_invariants: Vec<(u32, usize)>,
}

impl QuotientReport {
    pub fn passed(&self) -> bool {
        self.character_match && self.quotient_invariants.iter().all(|&(_, d)| d == 0)
    }
}

fn columns(vectors: &[Vec<Q>], rows: usize) -> Matrix {
    let mut m = Matrix::zeros(rows, vectors.len());
    for (j, v) in vectors.iter().enumerate() {
        for (i, c) in v.iter().enumerate() {
            m[(i, j)] = c.clone();
        }
    }
    m
}

/// Quotient of `Δ(λ)` by the submodule generated by its singular vectors
/// of weight `λ − nδ`, `1 ≤ n ≤ depth`, compared with `ch Δ̄(λ)`.
pub fn restricted_quotient_oracle(m: &PBWModule, depth: u32) -> Result<QuotientReport> {
    let rs = sl2_roots();
    let lambda = m.highest_weight().clone();
    if !is_critical(&rs, &lambda) {
        return Err(Error::domain(format!("{lambda} is not critical")));
    }
    let bounds = m.bounds();
    if depth > bounds.delta_depth || depth > bounds.finite_height {
        return Err(Error::OutOfBounds(format!(
            "depth {depth} needs bounds of at least ({depth}, {depth}), got {bounds:?}"
        )));
    }
    let region = Truncation::new(depth, bounds.finite_height);

    let mut singular_dims = Vec::new();
    let mut generators: BTreeMap<WeightOffset, Vec<Vec<Q>>> = BTreeMap::new();
    for n in 1..=depth {
        let o = WeightOffset::delta_multiple(&rs, i64::from(n));
        let sv = m.singular_vectors(&o)?;
        singular_dims.push((n, sv.len()));
        generators.insert(o, sv);
    }

    // S_c = generators_c + f₁·S_{c−α₁} + f₀·S_{c−α₀}, filled in lexicographic order
    let mut sub: BTreeMap<WeightOffset, Vec<Vec<Q>>> = BTreeMap::new();
    for o in region.offsets(1) {
        let dim = m.dim(&o)?;
        let mut span: Vec<Vec<Q>> = generators.get(&o).cloned().unwrap_or_default();
        for (lower, back) in [(Lowering::F1, [0, 1]), (Lowering::F0, [1, 0])] {
            let prev = WeightOffset(vec![o.0[0] - back[0], o.0[1] - back[1]]);
            let Some(s) = sub.get(&prev) else { continue };
            if s.is_empty() {
                continue;
            }
            let mat = m.lowering_matrix(lower, &prev)?;
            span.extend(s.iter().map(|v| mat.mul_vec(v)));
        }
        sub.insert(o, span_basis(&span, dim));
    }

    let mut terms = Vec::new();
    for o in region.offsets(1) {
        let d = m.dim(&o)? - sub[&o].len();
        terms.push((o, d as i64));
    }
    let character = FormalCharacter::from_terms(lambda.clone(), terms, region)?;
    let expected = restricted_verma_character(&rs, &lambda, region)?;

    let mut quotient_invariants = Vec::new();
    for n in 1..=depth {
        let o = WeightOffset::delta_multiple(&rs, i64::from(n));
        let e1 = m.raising_matrix(Raising::E1, &o)?;
        let e0 = m.raising_matrix(Raising::E0, &o)?;
        let t1 = WeightOffset(vec![o.0[0], o.0[1] - 1]);
        let t0 = WeightOffset(vec![o.0[0] - 1, o.0[1]]);
        let b1 = columns(&sub[&t1], e1.rows());
        let b0 = columns(&sub[&t0], e0.rows());
        // kernel of [[E1, −B1, 0], [E0, 0, −B0]] ≅ {v : e₁v ∈ S, e₀v ∈ S}
        let neg = |b: &Matrix| {
            let mut out = b.clone();
            for i in 0..b.rows() {
                for j in 0..b.cols() {
                    out[(i, j)] = -b[(i, j)].clone();
                }
            }
            out
        };
        let top = e1
            .hstack(&neg(&b1))
            .hstack(&Matrix::zeros(e1.rows(), b0.cols()));
        let bottom = e0
            .hstack(&Matrix::zeros(e0.rows(), b1.cols()))
            .hstack(&neg(&b0));
        let preimage = top.vstack(&bottom).nullspace().len();
        let inv = preimage.checked_sub(sub[&o].len()).ok_or_else(|| {
            Error::Integrity("submodule is not stable under the raising operators".into())
        })?;
        quotient_invariants.push((n, inv));
    }

    Ok(QuotientReport {
        region,
        character_match: character == expected,
        character,
        expected,
        singular_dims,
        quotient_invariants,
    })
}

/// `α↑λ`, once `λ` is known to be dominant in a subgeneric class.
fn subgeneric_setup(lambda: &AffineWeight) -> Result<AffineWeight> {
    let rs = sl2_roots();
    let class = classify(&rs, lambda);
    if class.genericity != Genericity::Subgeneric || !class.is_dominant {
        return Err(Error::domain(format!(
            "{lambda} is not a dominant weight of a critical subgeneric class"
        )));
    }
    let alpha = class.subgeneric_root.expect("subgeneric classes carry their root");
    arrow_up(&rs, lambda, &alpha)
}

/// `(dim Δ(λ)^{n̂₊}_{λ−nδ}, dim Δ(α↑λ)^{n̂₊}_{λ−nδ})` for dominant `λ` in
/// a subgeneric class.
pub fn subgeneric_invariant_check(
    spec: &AlgebraSpec,
    lambda: &AffineWeight,
    n: u32,
    bounds: Truncation,
) -> Result<(usize, usize)> {
    let up = subgeneric_setup(lambda)?;
    let target = lambda.shift_delta(&-q(i64::from(n)));
    let first = hom_dim_verma(spec, lambda, &target, bounds)?;
    let second = hom_dim_verma(spec, &up, &target, bounds)?;
    Ok((first, second))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    /// `dim Δ(α↑λ)^{n̂₊}_λ`; the embedding needs it to be 1.
    pub top_singular_dim: usize,
    /// Dimension of the image of `Δ(λ)^{n̂₊}_{λ−nδ}` in `Δ(α↑λ)`.
    pub image_dim: usize,
    /// `dim Δ(α↑λ)^{n̂₊}_{λ−nδ}`.
    pub target_dim: usize,
    /// Every image vector is singular in `Δ(α↑λ)`.
    pub image_singular: bool,
}

impl ChainReport {
    pub fn passed(&self) -> bool {
        self.top_singular_dim == 1 && self.image_singular && self.image_dim == self.target_dim
    }
}

/// Realizes `Δ(λ) ⊂ Δ(α↑λ)` by sending `v_λ` to the singular vector of
/// weight `λ` and compares the image of the singular space at `λ − nδ`
/// with the singular space of `Δ(α↑λ)` there.
pub fn chain_embedding_check(
    spec: &AlgebraSpec,
    lambda: &AffineWeight,
    n: u32,
    bounds: Truncation,
) -> Result<ChainReport> {
    let rs = sl2_roots();
    let up = subgeneric_setup(lambda)?;
    let top = affine::offset(&rs, &up, lambda).expect("α↑λ ≥ λ");
    let nd = WeightOffset::delta_multiple(&rs, i64::from(n));
    let deep = &top + &nd;
    for o in [&top, &nd, &deep] {
        if !bounds.contains(o) {
            return Err(Error::OutOfBounds(format!("offset {:?} outside {bounds:?}", o.0)));
        }
    }
    let small = build_pbw_module(spec, lambda, bounds)?;
    let big = build_pbw_module(spec, &up, bounds)?;

    let top_vectors = big.singular_vectors(&top)?;
    let top_singular_dim = top_vectors.len();
    let source = small.singular_vectors(&nd)?;
    let target = big.singular_vectors(&deep)?;
    if top_singular_dim != 1 {
        return Ok(ChainReport {
            top_singular_dim,
            image_dim: 0,
            target_dim: target.len(),
            image_singular: false,
        });
    }
    let s = big.from_coords(&top, &top_vectors[0])?;

    let basis = small.basis(&nd)?;
    let mut images = Vec::new();
    for v in &source {
        let mut acc = Vector::new();
        for (mono, c) in basis.iter().zip(v) {
            for (k, x) in big.apply_word(mono, &s) {
                *acc.entry(k).or_insert_with(Q::zero) += x * c;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        images.push(big.to_coords(&deep, &acc)?);
    }
    let dim = big.dim(&deep)?;
    let image_dim = span_basis(&images, dim).len();
    let e1 = big.raising_matrix(Raising::E1, &deep)?;
    let e0 = big.raising_matrix(Raising::E0, &deep)?;
    let image_singular = images.iter().all(|v| {
        e1.mul_vec(v)
            .iter()
            .chain(e0.mul_vec(v).iter())
            .all(Zero::is_zero)
    });
    Ok(ChainReport {
        top_singular_dim,
        image_dim,
        target_dim: target.len(),
        image_singular,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::FiniteWeight;
    use crate::rational::frac;

    fn crit(a: Q) -> AffineWeight {
        AffineWeight::new(FiniteWeight(vec![a]), q(-2), q(0))
    }

    #[test]
    fn hom_dims_follow_partitions() {
        let spec = AlgebraSpec::sl2();
        let lam = crit(frac(1, 3));
        let b = Truncation::new(3, 3);
        assert_eq!(hom_dim_verma(&spec, &lam, &lam, b).unwrap(), 1);
        for n in 1..=3 {
            let mu = lam.shift_delta(&q(-n));
            assert_eq!(hom_dim_verma(&spec, &lam, &mu, b).unwrap() as u64, p(n as usize));
        }
        assert!(hom_dim_verma(&spec, &lam, &lam.shift_delta(&q(1)), b).is_err());
    }

    #[test]
    fn quotient_depth_two() {
        let m = build_pbw_module(&AlgebraSpec::sl2(), &crit(frac(1, 2)), Truncation::new(2, 3)).unwrap();
        let r = restricted_quotient_oracle(&m, 2).unwrap();
        assert!(r.character_match, "{r:?}");
        assert_eq!(r.character.coefficient(&WeightOffset(vec![1, 1])), Some(1));
        assert_eq!(r.quotient_invariants, [(1, 0), (2, 0)]);
        assert_eq!(r.singular_dims, [(1, 1), (2, 2)]);
    }

    #[test]
    fn quotient_depth_zero_is_the_verma_module() {
        let m = build_pbw_module(&AlgebraSpec::sl2(), &crit(frac(1, 2)), Truncation::new(1, 2)).unwrap();
        let r = restricted_quotient_oracle(&m, 0).unwrap();
        assert_eq!(r.region, Truncation::new(0, 2));
        assert_eq!(r.character.coefficient(&WeightOffset::zero(1)), Some(1));
        assert!(r.passed());
    }

    #[test]
    fn quotient_needs_critical_level() {
        let lam = AffineWeight::new(FiniteWeight(vec![q(0)]), q(1), q(0));
        let m = build_pbw_module(&AlgebraSpec::sl2(), &lam, Truncation::new(1, 1)).unwrap();
        assert!(matches!(restricted_quotient_oracle(&m, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn subgeneric_invariants() {
        let spec = AlgebraSpec::sl2();
        let lam = crit(q(1));
        let b = Truncation::new(3, 2);
        assert_eq!(subgeneric_invariant_check(&spec, &lam, 1, b).unwrap(), (1, 1));
        assert!(subgeneric_invariant_check(&spec, &crit(frac(1, 2)), 1, b).is_err());
    }

    #[test]
    fn chain_embedding() {
        let r = chain_embedding_check(&AlgebraSpec::sl2(), &crit(q(1)), 1, Truncation::new(3, 2)).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.image_dim, 1);
    }

    #[test]
    fn scan_non_critical() {
        let lam = AffineWeight::new(FiniteWeight(vec![frac(1, 3)]), q(0), q(0));
        let m = build_pbw_module(&AlgebraSpec::sl2(), &lam, Truncation::new(2, 2)).unwrap();
        let rows = singular_scan(&m, 2).unwrap();
        assert!(rows.iter().all(SingularRow::matches));
        assert_eq!(rows[1].sing_dim, 0);
    }
}
