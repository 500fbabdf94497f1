//! Finite simply-laced root systems.
//!
//! Weights are rational coordinate vectors in the basis of fundamental
//! weights, so `⟨μ, αᵢ∨⟩` is the `i`-th coordinate of `μ`. The invariant
//! form is normalized by `(θ, θ) = 2` for the highest root `θ`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::linalg::Matrix;
use crate::rational::{q, Q};
use crate::{Error, Result};

/// Version of the built-in Cartan data table.
pub const TABLE_VERSION: u32 = 1;

pub const SUPPORTED_TYPES: &str = "An (n >= 1), Dn (n >= 4)";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CartanType {
    A(usize),
    D(usize),
}

impl CartanType {
    pub fn parse(label: &str) -> Result<Self> {
        let unsupported = || Error::UnsupportedType {
            label: label.to_string(),
            supported: SUPPORTED_TYPES,
        };
        let label = label.trim();
        let mut chars = label.chars();
        let family = chars.next().ok_or_else(unsupported)?;
        let rank: usize = chars.as_str().parse().map_err(|_| unsupported())?;
        match family.to_ascii_uppercase() {
            'A' if rank >= 1 => Ok(CartanType::A(rank)),
            'D' if rank >= 4 => Ok(CartanType::D(rank)),
            _ => Err(unsupported()),
        }
    }

    pub fn rank(self) -> usize {
        match self {
            CartanType::A(n) | CartanType::D(n) => n,
        }
    }

    pub fn dual_coxeter(self) -> i64 {
        match self {
            CartanType::A(n) => n as i64 + 1,
            CartanType::D(n) => 2 * n as i64 - 2,
        }
    }

    /// Cartan matrix `a_ij = ⟨α_j, α_i∨⟩`.
    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            c[i][j] = -1;
            c[j][i] = -1;
        };
        match self {
            CartanType::A(_) => {
                for i in 1..n {
                    link(i - 1, i);
                }
            }
            CartanType::D(_) => {
                for i in 1..n - 1 {
                    link(i - 1, i);
                }
                link(n - 3, n - 1);
            }
        }
        c
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::D(n) => write!(f, "D{n}"),
        }
    }
}

/// Element of `h*` in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteWeight(pub Vec<Q>);

impl FiniteWeight {
    pub fn zero(rank: usize) -> Self {
        FiniteWeight(vec![Q::zero(); rank])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        FiniteWeight(coords.iter().map(|&c| q(c)).collect())
    }

    /// The `i`-th fundamental weight.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i] = q(1);
        w
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn scale(&self, s: &Q) -> Self {
        FiniteWeight(self.0.iter().map(|c| c * s).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

impl Add for &FiniteWeight {
    type Output = FiniteWeight;
    fn add(self, rhs: &FiniteWeight) -> FiniteWeight {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch");
        FiniteWeight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &FiniteWeight {
    type Output = FiniteWeight;
    fn sub(self, rhs: &FiniteWeight) -> FiniteWeight {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch");
        FiniteWeight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &FiniteWeight {
    type Output = FiniteWeight;
    fn neg(self) -> FiniteWeight {
        FiniteWeight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for FiniteWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A root of the finite system, kept in both simple-root and
/// fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteRoot {
    simple: Vec<i64>,
    weight: FiniteWeight,
}

impl FiniteRoot {
    pub fn simple_coords(&self) -> &[i64] {
        &self.simple
    }

    pub fn weight(&self) -> &FiniteWeight {
        &self.weight
    }

    pub fn height(&self) -> i64 {
        self.simple.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.simple.iter().all(|&c| c >= 0)
    }

    pub fn negate(&self) -> FiniteRoot {
        FiniteRoot {
            simple: self.simple.iter().map(|c| -c).collect(),
            weight: -&self.weight,
        }
    }
}

#[derive(Debug, Clone)]
pub struct FiniteRootSystem {
    cartan_type: CartanType,
    cartan_matrix: Vec<Vec<i64>>,
    cartan_inverse: Matrix,
    positive_roots: Vec<FiniteRoot>,
    highest_root: usize,
    form_gram: Matrix,
    dual_coxeter: i64,
    rho: FiniteWeight,
}

impl FiniteRootSystem {
    pub fn new(cartan_type: CartanType) -> Self {
        let n = cartan_type.rank();
        let cartan_matrix = cartan_type.cartan_matrix();
        let cm = Matrix::from_rows(
            cartan_matrix
                .iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect(),
            n,
        );
        let cartan_inverse = cm.inverse().expect("Cartan matrix is invertible");
        let weight_of = |simple: &[i64]| -> FiniteWeight {
            FiniteWeight(
                (0..n)
                    .map(|j| q((0..n).map(|i| simple[i] * cartan_matrix[i][j]).sum()))
                    .collect(),
            )
        };

        // Closure of the simple roots under the simple reflections.
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(root) = queue.pop_front() {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|k| root[k] * cartan_matrix[k][i]).sum();
                let mut image = root.clone();
                image[i] -= pairing;
                if seen.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
        }
        let mut positive: Vec<Vec<i64>> = seen
            .into_iter()
            .filter(|r| r.iter().all(|&c| c >= 0))
            .collect();
        positive.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let positive_roots: Vec<FiniteRoot> = positive
            .into_iter()
            .map(|s| FiniteRoot {
                weight: weight_of(&s),
                simple: s,
            })
            .collect();
        let highest_root = positive_roots.len() - 1;

        FiniteRootSystem {
            cartan_type,
            cartan_matrix,
            form_gram: cartan_inverse.clone(),
            cartan_inverse,
            positive_roots,
            highest_root,
            dual_coxeter: cartan_type.dual_coxeter(),
            rho: FiniteWeight::from_ints(&vec![1; n]),
        }
    }

    /// Root system for a label such as `"A1"` or `"D4"`.
    pub fn from_label(label: &str) -> Result<Self> {
        CartanType::parse(label).map(Self::new)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan_matrix
    }

    /// Gram matrix of the form on the fundamental-weight basis.
    pub fn form_gram(&self) -> &Matrix {
        &self.form_gram
    }

    pub fn dual_coxeter(&self) -> i64 {
        self.dual_coxeter
    }

    pub fn rho(&self) -> &FiniteWeight {
        &self.rho
    }

    /// Positive roots ordered by height; the first `rank` are the simple roots.
    pub fn positive_roots(&self) -> &[FiniteRoot] {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> &[FiniteRoot] {
        &self.positive_roots[..self.rank()]
    }

    pub fn simple_root(&self, i: usize) -> &FiniteRoot {
        &self.positive_roots[i]
    }

    pub fn highest_root(&self) -> &FiniteRoot {
        &self.positive_roots[self.highest_root]
    }

    /// All roots: positive ones followed by their negatives.
    pub fn roots(&self) -> Vec<FiniteRoot> {
        let mut all = self.positive_roots.clone();
        all.extend(self.positive_roots.iter().map(FiniteRoot::negate));
        all
    }

    /// Fundamental-weight coordinates of `Σ sᵢ αᵢ`.
    pub fn weight_from_simple(&self, simple: &[i64]) -> FiniteWeight {
        let n = self.rank();
        FiniteWeight(
            (0..n)
                .map(|j| q((0..n).map(|i| simple[i] * self.cartan_matrix[i][j]).sum()))
                .collect(),
        )
    }

    /// Coordinates of `μ` in the simple-root basis (rational in general).
    pub fn simple_coords(&self, mu: &FiniteWeight) -> Vec<Q> {
        let n = self.rank();
        (0..n)
            .map(|j| {
                (0..n).fold(Q::zero(), |acc, i| {
                    acc + &mu.0[i] * &self.cartan_inverse[(i, j)]
                })
            })
            .collect()
    }

    pub fn find_root(&self, alpha: &FiniteWeight) -> Option<FiniteRoot> {
        self.positive_roots.iter().find_map(|r| {
            if &r.weight == alpha {
                Some(r.clone())
            } else if &(-&r.weight) == alpha {
                Some(r.negate())
            } else {
                None
            }
        })
    }

    fn check_rank(&self, mu: &FiniteWeight) -> Result<()> {
        if mu.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::Dimension {
                expected: self.rank(),
                found: mu.rank(),
            })
        }
    }

    /// The normalized invariant form `(μ, ν)`.
    pub fn finite_form(&self, mu: &FiniteWeight, nu: &FiniteWeight) -> Result<Q> {
        self.check_rank(mu)?;
        self.check_rank(nu)?;
        Ok(self.form_unchecked(mu, nu))
    }

    pub(crate) fn form_unchecked(&self, mu: &FiniteWeight, nu: &FiniteWeight) -> Q {
        let n = self.rank();
        let mut acc = Q::zero();
        for i in 0..n {
            if mu.0[i].is_zero() {
                continue;
            }
            for j in 0..n {
                let g = &self.form_gram[(i, j)];
                if !g.is_zero() && !nu.0[j].is_zero() {
                    acc += &mu.0[i] * g * &nu.0[j];
                }
            }
        }
        acc
    }

    /// `⟨μ, α∨⟩ = 2(μ, α)/(α, α)`; fails unless `α` is a root.
    pub fn coroot_pairing(&self, mu: &FiniteWeight, alpha: &FiniteWeight) -> Result<Q> {
        self.check_rank(mu)?;
        self.check_rank(alpha)?;
        let root = self
            .find_root(alpha)
            .ok_or_else(|| Error::domain(format!("{alpha} is not a root of {}", self.cartan_type)))?;
        Ok(self.pairing(mu, &root))
    }

    /// `⟨μ, α∨⟩` for a known root.
    pub fn pairing(&self, mu: &FiniteWeight, alpha: &FiniteRoot) -> Q {
        let num = self.form_unchecked(mu, &alpha.weight) * q(2);
        num / self.root_norm(alpha)
    }

    /// `(α, α)`.
    pub fn root_norm(&self, alpha: &FiniteRoot) -> Q {
        self.form_unchecked(&alpha.weight, &alpha.weight)
    }

    /// `s_α(μ)`, or the dot-action `s_α(μ+ρ̄)−ρ̄` when `dot` is set.
    pub fn reflect(&self, mu: &FiniteWeight, alpha: &FiniteRoot, dot: bool) -> FiniteWeight {
        let shifted = if dot { mu + &self.rho } else { mu.clone() };
        let c = self.pairing(&shifted, alpha);
        let image = &shifted - &alpha.weight.scale(&c);
        if dot {
            &image - &self.rho
        } else {
            image
        }
    }

    /// Orbit of `μ` under the full finite Weyl group.
    pub fn weyl_orbit(&self, mu: &FiniteWeight, dot: bool) -> Result<BTreeSet<FiniteWeight>> {
        self.check_rank(mu)?;
        Ok(self.orbit_under(mu, dot, &self.positive_roots))
    }

    /// Orbit of `μ` under the group generated by the reflections in `generators`.
    pub fn orbit_under(
        &self,
        mu: &FiniteWeight,
        dot: bool,
        generators: &[FiniteRoot],
    ) -> BTreeSet<FiniteWeight> {
        let mut orbit = BTreeSet::new();
        orbit.insert(mu.clone());
        let mut queue = VecDeque::from([mu.clone()]);
        while let Some(w) = queue.pop_front() {
            for alpha in generators {
                let image = self.reflect(&w, alpha, dot);
                if orbit.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
        }
        orbit
    }
}
