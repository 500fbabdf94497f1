use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;

use num_traits::{One, Zero};

use super::algebra::{AlgebraSpec, Gen};
use crate::affine::{AffineWeight, WeightOffset};
use crate::charalg::Truncation;
use crate::linalg::Matrix;
use crate::rational::{q, Q};
use crate::{Error, Result};

/// Default cap on the dimension of a single weight space.
pub const DEFAULT_MAX_DIM: usize = 2000;

/// `y₁y₂…y_k·v_λ` with the `yᵢ` negative and nondecreasing in PBW order.
pub type Monomial = Vec<Gen>;

/// Sparse vector of a Verma module in the PBW basis.
pub type Vector = BTreeMap<Monomial, Q>;

fn add_into(acc: &mut Vector, v: &Vector, c: &Q) {
    if c.is_zero() {
        return;
    }
    for (m, x) in v {
        let slot = acc.entry(m.clone()).or_insert_with(Q::zero);
        *slot += x * c;
        if slot.is_zero() {
            acc.remove(m);
        }
    }
}

fn offset_of(m: &Monomial) -> [i64; 2] {
    m.iter().fold([0, 0], |[a, b], g| {
        let [x, y] = g.offset();
        [a + x, b + y]
    })
}

/// Which raising generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Raising {
    /// `e₁ = e⊗1`, lowers the offset by `α₁`.
    E1,
    /// `e₀ = f⊗t`, lowers the offset by `α₀`.
    E0,
}

impl Raising {
    pub fn generator(self) -> Gen {
        match self {
            Raising::E1 => Gen::E(0),
            Raising::E0 => Gen::F(1),
        }
    }
}

/// Which lowering generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lowering {
    /// `f₁ = f⊗1`.
    F1,
    /// `f₀ = e⊗t⁻¹`.
    F0,
}

impl Lowering {
    pub fn generator(self) -> Gen {
        match self {
            Lowering::F1 => Gen::F(0),
            Lowering::F0 => Gen::E(-1),
        }
    }
}

/// The Verma module `Δ(λ)` of `ŝl₂` restricted to the offsets of a
/// truncation, with PBW bases for every weight space.
#[derive(Debug)]
pub struct PBWModule {
    spec: AlgebraSpec,
    highest_weight: AffineWeight,
    bounds: Truncation,
    bases: BTreeMap<[i64; 2], Vec<Monomial>>,
    index: BTreeMap<Monomial, usize>,
    cache: RefCell<BTreeMap<(Gen, Monomial), Vector>>,
}

/// [`build_pbw_module_capped`] with [`DEFAULT_MAX_DIM`].
pub fn build_pbw_module(spec: &AlgebraSpec, lambda: &AffineWeight, bounds: Truncation) -> Result<PBWModule> {
    build_pbw_module_capped(spec, lambda, bounds, DEFAULT_MAX_DIM)
}

pub fn build_pbw_module_capped(
    spec: &AlgebraSpec,
    lambda: &AffineWeight,
    bounds: Truncation,
    max_dim: usize,
) -> Result<PBWModule> {
    if lambda.rank() != 1 {
        return Err(Error::Dimension {
            expected: 1,
            found: lambda.rank(),
        });
    }
    let d = i64::from(bounds.delta_depth);
    let mut gens = vec![Gen::F(0)];
    for j in 1..=d {
        gens.extend([Gen::E(-j), Gen::H(-j), Gen::F(-j)]);
    }
    gens.retain(|g| {
        let [a, b] = g.offset();
        a <= d && b <= i64::from(bounds.finite_height)
    });
    gens.sort_by_key(|g| g.pbw_key());

    let mut bases: BTreeMap<[i64; 2], Vec<Monomial>> = BTreeMap::new();
    for c in bounds.offsets(1) {
        bases.insert([c.0[0], c.0[1]], Vec::new());
    }
    let mut stack: Vec<(usize, Monomial, [i64; 2])> = vec![(0, Vec::new(), [0, 0])];
    while let Some((start, m, off)) = stack.pop() {
        let space = bases.get_mut(&off).expect("offsets stay in bounds");
        space.push(m.clone());
        if space.len() > max_dim {
            return Err(Error::Resource {
                what: "weight-space dimension",
                limit: max_dim,
                requested: space.len(),
            });
        }
        for (i, g) in gens.iter().enumerate().skip(start) {
            let [x, y] = g.offset();
            let next = [off[0] + x, off[1] + y];
            if bases.contains_key(&next) {
                let mut m2 = m.clone();
                m2.push(*g);
                stack.push((i, m2, next));
            }
        }
    }
    let mut index = BTreeMap::new();
    for space in bases.values_mut() {
        space.sort();
        for (i, m) in space.iter().enumerate() {
            index.insert(m.clone(), i);
        }
    }
    Ok(PBWModule {
        spec: *spec,
        highest_weight: lambda.clone(),
        bounds,
        bases,
        index,
        cache: RefCell::new(BTreeMap::new()),
    })
}

fn key(o: &WeightOffset) -> Result<[i64; 2]> {
    match o.0.as_slice() {
        [a, b] => Ok([*a, *b]),
        _ => Err(Error::Dimension {
            expected: 2,
            found: o.0.len(),
        }),
    }
}

impl PBWModule {
    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn highest_weight(&self) -> &AffineWeight {
        &self.highest_weight
    }

    pub fn bounds(&self) -> Truncation {
        self.bounds
    }

    /// Offsets with a stored basis, in lexicographic order.
    pub fn offsets(&self) -> impl Iterator<Item = WeightOffset> + '_ {
        self.bases.keys().map(|k| WeightOffset(k.to_vec()))
    }

    pub fn basis(&self, o: &WeightOffset) -> Result<&[Monomial]> {
        let k = key(o)?;
        self.bases
            .get(&k)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::OutOfBounds(format!("offset {k:?} outside {:?}", self.bounds)))
    }

    pub fn dim(&self, o: &WeightOffset) -> Result<usize> {
        Ok(self.basis(o)?.len())
    }

    /// Eigenvalues of `h⊗1`, `K` and `D` on the weight space at `o`.
    pub fn eigenvalues(&self, o: &WeightOffset) -> Result<(Q, Q, Q)> {
        let [c0, c1] = key(o)?;
        let lam = &self.highest_weight;
        Ok((
            &lam.finite.coords()[0] - q(2 * (c1 - c0)),
            lam.level.clone(),
            &lam.delta - q(c0),
        ))
    }

    fn scalar(&self, g: Gen) -> Q {
        let lam = &self.highest_weight;
        match g {
            Gen::H(0) => lam.finite.coords()[0].clone(),
            Gen::K => lam.level.clone(),
            Gen::D => lam.delta.clone(),
            _ => Q::zero(),
        }
    }

    /// `g · m` re-expanded in the PBW basis.
    pub fn act(&self, g: Gen, m: &Monomial) -> Vector {
        if let Some(v) = self.cache.borrow().get(&(g, m.clone())) {
            return v.clone();
        }
        let out = self.act_uncached(g, m);
        self.cache.borrow_mut().insert((g, m.clone()), out.clone());
        out
    }

    fn act_uncached(&self, g: Gen, m: &Monomial) -> Vector {
        let mut out = Vector::new();
        if g == Gen::K {
            out.insert(m.clone(), self.scalar(Gen::K));
            out.retain(|_, c| !c.is_zero());
            return out;
        }
        let Some((&y, rest)) = m.split_first() else {
            if g.is_negative() {
                out.insert(vec![g], Q::one());
            } else if !g.is_positive() {
                let c = self.scalar(g);
                if !c.is_zero() {
                    out.insert(Vec::new(), c);
                }
            }
            return out;
        };
        if g.is_negative() && g.pbw_key() <= y.pbw_key() {
            let mut m2 = Vec::with_capacity(m.len() + 1);
            m2.push(g);
            m2.extend_from_slice(m);
            out.insert(m2, Q::one());
            return out;
        }
        // g·y·R = y·(g·R) + [g, y]·R
        let rest = rest.to_vec();
        for (m2, c) in self.act(g, &rest) {
            add_into(&mut out, &self.act(y, &m2), &c);
        }
        for (h, c) in self.spec.bracket(g, y) {
            add_into(&mut out, &self.act(h, &rest), &c);
        }
        out
    }

    pub fn act_on(&self, g: Gen, v: &Vector) -> Vector {
        let mut out = Vector::new();
        for (m, c) in v {
            add_into(&mut out, &self.act(g, m), c);
        }
        out
    }

    /// `x₁x₂…x_k · v`, rightmost factor first.
    pub fn apply_word(&self, word: &[Gen], v: &Vector) -> Vector {
        word.iter().rev().fold(v.clone(), |acc, g| self.act_on(*g, &acc))
    }

    pub fn to_coords(&self, o: &WeightOffset, v: &Vector) -> Result<Vec<Q>> {
        let k = key(o)?;
        let n = self.dim(o)?;
        let mut out = vec![Q::zero(); n];
        for (m, c) in v {
            if offset_of(m) != k {
                return Err(Error::Integrity(format!(
                    "vector has a term at {:?}, expected {k:?}",
                    offset_of(m)
                )));
            }
            let i = *self.index.get(m).ok_or_else(|| {
                Error::Integrity("monomial missing from the PBW basis".into())
            })?;
            out[i] = c.clone();
        }
        Ok(out)
    }

    pub fn from_coords(&self, o: &WeightOffset, coords: &[Q]) -> Result<Vector> {
        let basis = self.basis(o)?;
        Ok(basis
            .iter()
            .zip(coords)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect())
    }

    /// Matrix of `g` from the weight space at `o` to the one at `o + offset(g)`.
    /// An empty target (negative coordinates) gives a `0 × dim` matrix.
    pub fn generator_matrix(&self, g: Gen, o: &WeightOffset) -> Result<Matrix> {
        let [c0, c1] = key(o)?;
        let [x, y] = g.offset();
        let target = WeightOffset(vec![c0 + x, c1 + y]);
        let source = self.basis(o)?;
        let rows = if target.is_nonnegative() {
            self.dim(&target)?
        } else {
            0
        };
        let mut mat = Matrix::zeros(rows, source.len());
        if rows == 0 {
            return Ok(mat);
        }
        for (j, m) in source.iter().enumerate() {
            let col = self.to_coords(&target, &self.act(g, m))?;
            for (i, c) in col.into_iter().enumerate() {
                mat[(i, j)] = c;
            }
        }
        Ok(mat)
    }

    pub fn raising_matrix(&self, r: Raising, o: &WeightOffset) -> Result<Matrix> {
        self.generator_matrix(r.generator(), o)
    }

    pub fn lowering_matrix(&self, l: Lowering, o: &WeightOffset) -> Result<Matrix> {
        self.generator_matrix(l.generator(), o)
    }

    /// Basis of the joint kernel of `e₁` and `e₀` at `o`.
    pub fn singular_vectors(&self, o: &WeightOffset) -> Result<Vec<Vec<Q>>> {
        let e1 = self.raising_matrix(Raising::E1, o)?;
        let e0 = self.raising_matrix(Raising::E0, o)?;
        Ok(e1.vstack(&e0).nullspace())
    }

    pub fn sing_dim(&self, o: &WeightOffset) -> Result<usize> {
        Ok(self.singular_vectors(o)?.len())
    }
}
