use std::collections::BTreeMap;

use num_traits::Zero;

use super::{seifert_violations, Component, Sign, SurgeryPresentation, Violation};
use crate::error::{Error, Result};
use crate::ring::{Rational, RationalMatrix};

/// Parameters of a two-component link whose Seifert surfaces meet in a
/// single ribbon intersection.
///
/// After stabilizing `F₁` along an arc of `ℓ₂`, `H₁(F₁')` has basis
/// `e₁, c, e₃ … e₂g₊₂`: `e₁` is a meridian of `ℓ₂`, `c = F₁' ∩ F₂` is the
/// intersection circle (always basis slot 2), and the remaining curves span
/// `H₁(F₁)` with Seifert matrix `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonPairSpec {
    /// Sato-Levine invariant `ℓk(c, c⁺)`.
    pub s: i64,
    /// `a_m = ℓk(c, e_{m+2}⁺)`, length `2g`.
    pub a: Vec<Rational>,
    /// Seifert matrix of `ℓ₁` on the unstabilized surface, `2g × 2g`.
    pub w: RationalMatrix,
    /// `ℓk(c, e₁⁺) = ℓk(e₁, ℓ₂) = ±1`.
    pub epsilon: Sign,
    pub base_order: u64,
}

impl RibbonPairSpec {
    pub fn new(s: i64, a: Vec<Rational>, w: RationalMatrix, epsilon: Sign, base_order: u64) -> Self {
        Self { s, a, w, epsilon, base_order }
    }

    pub fn genus(&self) -> usize {
        self.w.rows() / 2
    }

    pub fn check(&self) -> Result<()> {
        if self.base_order == 0 {
            return Err(Error::InvalidSpec("base_order must be positive".into()));
        }
        if let Some(rule) = seifert_violations(&self.w).into_iter().next() {
            return Err(Error::InvalidSpec(format!("W: {}", Violation { component: None, rule })));
        }
        if self.a.len() != self.w.rows() {
            return Err(Error::InvalidSpec(format!(
                "a has length {} but W is {}x{}",
                self.a.len(),
                self.w.rows(),
                self.w.cols()
            )));
        }
        if self.base_order == 1 && !(self.w.is_integral() && self.a.iter().all(|x| x.is_integer())) {
            return Err(Error::InvalidSpec("non-integer entries require base_order > 1".into()));
        }
        Ok(())
    }

    /// The `(2g+2)`-square block Seifert matrix of `ℓ₁ ⊂ Σ`:
    ///
    /// ```text
    /// 0  0  | 0  …  0
    /// ε  s  | a₁ … a₂g
    /// ------+---------
    /// 0  a₁ |
    /// ⋮  ⋮  |    W
    /// 0  a₂g|
    /// ```
    pub fn seifert_matrix(&self) -> RationalMatrix {
        let n = self.w.rows() + 2;
        RationalMatrix::from_fn(n, n, |i, j| match (i, j) {
            (0, _) => Rational::zero(),
            (1, 0) => Rational::from_integer(self.epsilon.value().into()),
            (1, 1) => Rational::from_integer(self.s.into()),
            (1, j) => self.a[j - 2].clone(),
            (_, 0) => Rational::zero(),
            (i, 1) => self.a[i - 2].clone(),
            (i, j) => self.w.get(i - 2, j - 2).clone(),
        })
    }

    /// `E = (ε, 0, …, 0)`: only the meridian `e₁` links `ℓ₂`.
    pub fn linking_with_second(&self) -> Vec<Rational> {
        let mut e = vec![Rational::zero(); self.w.rows() + 2];
        e[0] = Rational::from_integer(self.epsilon.value().into());
        e
    }
}

/// Two-component presentation `l1 ∪ l2` realizing `spec`. The second
/// component is unknotted with trivial Seifert data; only `l1`'s data enters
/// the invariants.
pub fn build_ribbon_pair(spec: &RibbonPairSpec) -> Result<SurgeryPresentation> {
    spec.check()?;
    let mut l1 = Component::new("l1", spec.seifert_matrix());
    l1.linking.insert("l2".into(), spec.linking_with_second());
    let mut l2 = Component::unknot("l2");
    l2.linking.insert("l1".into(), Vec::new());
    Ok(SurgeryPresentation::new(spec.base_order, vec![l1, l2]))
}

/// Adds an unknotted `l3` to a ribbon pair so that the intersection circle
/// `c` links it `mu` times: `ℓk(c, ℓ₃) = c·F₃ = μ(ℓ₁, ℓ₂, ℓ₃)`.
pub fn build_triple(mu: i64, spec: &RibbonPairSpec) -> Result<SurgeryPresentation> {
    let mut p = build_ribbon_pair(spec)?;
    let mut e = vec![Rational::zero(); spec.w.rows() + 2];
    e[1] = Rational::from_integer(mu.into());
    p.add_component(Component::unknot("l3"), BTreeMap::from([("l1".to_owned(), e)]))?;
    Ok(p)
}
