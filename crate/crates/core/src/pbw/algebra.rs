use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::cartan::CartanType;
use crate::rational::{q, Q};
use crate::{Error, Result};

/// A basis element of `ŝl₂ ⊕ ℂD`: `x⊗tⁿ` for `x ∈ {e, h, f}`, the central
/// element `K` and the derivation `D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    E(i64),
    H(i64),
    F(i64),
    K,
    D,
}

impl Gen {
    /// Loop degree `n` of `x⊗tⁿ` (0 for `K`, `D`).
    pub fn mode(self) -> i64 {
        match self {
            Gen::E(n) | Gen::H(n) | Gen::F(n) => n,
            Gen::K | Gen::D => 0,
        }
    }

    /// Lies in `n̂₋`: `f⊗tⁿ (n ≤ 0)`, `e⊗tⁿ, h⊗tⁿ (n ≤ −1)`.
    pub fn is_negative(self) -> bool {
        match self {
            Gen::F(n) => n <= 0,
            Gen::E(n) | Gen::H(n) => n <= -1,
            Gen::K | Gen::D => false,
        }
    }

    /// Kills the highest-weight vector: `e⊗tⁿ (n ≥ 0)`, `f⊗tⁿ, h⊗tⁿ (n ≥ 1)`.
    pub fn is_positive(self) -> bool {
        match self {
            Gen::E(n) => n >= 0,
            Gen::F(n) | Gen::H(n) => n >= 1,
            Gen::K | Gen::D => false,
        }
    }

    /// PBW order key for negative generators: `δ`-depth, then `e < h < f`.
    pub fn pbw_key(self) -> (i64, u8) {
        let ty = match self {
            Gen::E(_) => 0,
            Gen::H(_) => 1,
            Gen::F(_) => 2,
            Gen::K => 3,
            Gen::D => 4,
        };
        (-self.mode(), ty)
    }

    /// Offset `[c₀, c₁]` by which the generator lowers a weight, i.e. minus
    /// its weight in simple-root coordinates (`α₀ = δ−α`, `α₁ = α`).
    pub fn offset(self) -> [i64; 2] {
        let d = -self.mode();
        match self {
            Gen::E(_) => [d, d - 1],
            Gen::H(_) => [d, d],
            Gen::F(_) => [d, d + 1],
            Gen::K | Gen::D => [0, 0],
        }
    }
}

impl core::fmt::Display for Gen {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Gen::E(n) => write!(f, "e⊗t^{n}"),
            Gen::H(n) => write!(f, "h⊗t^{n}"),
            Gen::F(n) => write!(f, "f⊗t^{n}"),
            Gen::K => write!(f, "K"),
            Gen::D => write!(f, "D"),
        }
    }
}

/// Sparse linear combination of generators.
pub type Element = BTreeMap<Gen, Q>;

fn single(g: Gen, c: Q) -> Element {
    let mut e = Element::new();
    if !c.is_zero() {
        e.insert(g, c);
    }
    e
}

/// Structure constants of `ŝl₂` with `[e,f] = h`, `[h,e] = 2e`,
/// `[h,f] = −2f`, `(e|f) = 1`, `(h|h) = 2`, and
/// `[x⊗tᵃ, y⊗tᵇ] = [x,y]⊗t^{a+b} + a·δ_{a+b,0}·(x|y)·K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlgebraSpec {
    cartan_type: CartanType,
}

impl AlgebraSpec {
    pub fn sl2() -> Self {
        AlgebraSpec {
            cartan_type: CartanType::A(1),
        }
    }

    pub fn new(cartan_type: CartanType) -> Result<Self> {
        if cartan_type == CartanType::A(1) {
            Ok(Self::sl2())
        } else {
            Err(Error::UnsupportedType {
                label: format!("{cartan_type}"),
                supported: "A1",
            })
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    /// Normalized invariant form on `{e, h, f}` (mode ignored).
    pub fn form(&self, x: Gen, y: Gen) -> Q {
        match (x, y) {
            (Gen::E(_), Gen::F(_)) | (Gen::F(_), Gen::E(_)) => q(1),
            (Gen::H(_), Gen::H(_)) => q(2),
            _ => Q::zero(),
        }
    }

    pub fn bracket(&self, x: Gen, y: Gen) -> Element {
        use Gen::*;
        match (x, y) {
            (K, _) | (_, K) | (D, D) => Element::new(),
            (D, g) => single(g, q(g.mode())),
            (g, D) => single(g, q(-g.mode())),
            _ => {
                let (a, b) = (x.mode(), y.mode());
                let mut out = match (x, y) {
                    (E(_), F(_)) => single(H(a + b), q(1)),
                    (F(_), E(_)) => single(H(a + b), q(-1)),
                    (H(_), E(_)) => single(E(a + b), q(2)),
                    (E(_), H(_)) => single(E(a + b), q(-2)),
                    (H(_), F(_)) => single(F(a + b), q(-2)),
                    (F(_), H(_)) => single(F(a + b), q(2)),
                    _ => Element::new(),
                };
                if a + b == 0 {
                    let c = q(a) * self.form(x, y);
                    if !c.is_zero() {
                        out.insert(K, c);
                    }
                }
                out
            }
        }
    }

    fn bracket_elements(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::new();
        for (gx, cx) in x {
            for (gy, cy) in y {
                for (g, c) in self.bracket(*gx, *gy) {
                    *out.entry(g).or_insert_with(Q::zero) += c * cx * cy;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// All generators with `|mode| ≤ radius`, plus `K` and `D`.
    pub fn generators(&self, radius: i64) -> Vec<Gen> {
        let mut g = Vec::new();
        for n in -radius..=radius {
            g.extend([Gen::E(n), Gen::H(n), Gen::F(n)]);
        }
        g.extend([Gen::K, Gen::D]);
        g
    }

    /// `[x,y] = −[y,x]` on all pairs of generators up to `radius`.
    pub fn check_antisymmetry(&self, radius: i64) -> bool {
        let gens = self.generators(radius);
        gens.iter().all(|&x| {
            gens.iter().all(|&y| {
                let mut neg = self.bracket(y, x);
                neg.values_mut().for_each(|c| *c = -c.clone());
                self.bracket(x, y) == neg
            })
        })
    }

    /// Jacobi identity on all triples of generators up to `radius`.
    pub fn check_jacobi(&self, radius: i64) -> bool {
        let gens = self.generators(radius);
        let el = |g: Gen| single(g, q(1));
        for &x in &gens {
            for &y in &gens {
                for &z in &gens {
                    let a = self.bracket_elements(&el(x), &self.bracket(y, z));
                    let b = self.bracket_elements(&el(y), &self.bracket(z, x));
                    let c = self.bracket_elements(&el(z), &self.bracket(x, y));
                    let mut sum = a;
                    for (g, v) in b.into_iter().chain(c) {
                        *sum.entry(g).or_insert_with(Q::zero) += v;
                    }
                    if sum.values().any(|v| !v.is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }
}
