//! Classical invariants computed from presentation data.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::presentation::{seifert_violations, Sign, SurgeryPresentation, Violation};
use crate::ring::{HalfLaurent, Rational, RationalMatrix, RingMatrix};

/// How the Δ″ jump of a blow-down is normalized when `|H₁(Σ)| = h > 1`.
///
/// The expansion of `Δ_after` gives a jump of `2s·Δ(1) = 2sh`. `Derived`
/// divides by `2Δ(1)` and recovers `s`; `Literal` divides by 2 only,
/// matching the torsion-free reading of the same step. They coincide at
/// `h = 1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Normalization {
    #[default]
    Derived,
    Literal,
}

impl Normalization {
    pub fn as_str(self) -> &'static str {
        match self {
            Normalization::Derived => "derived",
            Normalization::Literal => "paper-literal",
        }
    }
}

impl fmt::Display for Normalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Normalization {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "derived" => Ok(Normalization::Derived),
            "paper-literal" => Ok(Normalization::Literal),
            other => Err(format!("unknown normalization `{other}` (expected derived or paper-literal)")),
        }
    }
}

fn h_of(p: &SurgeryPresentation) -> Rational {
    Rational::from_integer(p.base_order.into())
}

/// `Δ(t) = h·det(t^(1/2)V − t^(−1/2)Vᵀ)` of the named component in `Σ`.
pub fn alexander(p: &SurgeryPresentation, comp: &str) -> Result<HalfLaurent> {
    let c = p.component(comp)?;
    p.ensure_valid()?;
    Ok(alexander_of_matrix(&c.seifert).scale(&h_of(p)))
}

/// `det(t^(1/2)V − t^(−1/2)Vᵀ)` without the `|H₁|` factor.
pub fn alexander_of_matrix(v: &RationalMatrix) -> HalfLaurent {
    RingMatrix::seifert_form(v).determinant().expect("Seifert matrices are square")
}

/// `Δ″(1)`.
pub fn delta2(p: &SurgeryPresentation, comp: &str) -> Result<Rational> {
    Ok(alexander(p, comp)?.second_derivative_at_one())
}

/// Lescop's surgery term `F_Σ(ℓ) = ½Δ″(1)`; exposed as an alias only.
pub fn surgery_term(p: &SurgeryPresentation, comp: &str) -> Result<Rational> {
    Ok(delta2(p, comp)? / Rational::from_integer(2.into()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStep {
    /// Seifert matrix of the surgery knot in the manifold reached so far.
    pub seifert: RationalMatrix,
    pub sign: Sign,
}

/// Sequence of `±1`-surgeries starting from `S³`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SurgeryChain {
    pub steps: Vec<ChainStep>,
}

impl SurgeryChain {
    pub fn new(steps: Vec<ChainStep>) -> Self {
        Self { steps }
    }

    pub fn check(&self) -> Result<()> {
        for (i, step) in self.steps.iter().enumerate() {
            if let Some(rule) = seifert_violations(&step.seifert).into_iter().next() {
                return Err(Error::InvalidSpec(format!("step {i}: {}", Violation { component: None, rule })));
            }
            if !step.seifert.is_integral() {
                return Err(Error::InvalidSpec(format!("step {i}: knots in integral homology spheres have integer Seifert matrices")));
            }
        }
        Ok(())
    }

    /// Steps in reverse order with flipped signs: the chain that undoes this
    /// one when every knot is taken as given.
    pub fn reversed(&self) -> Self {
        Self::new(
            self.steps
                .iter()
                .rev()
                .map(|s| ChainStep { seifert: s.seifert.clone(), sign: s.sign.flip() })
                .collect(),
        )
    }
}

/// Casson invariant by the surgery formula, starting from `λ(S³) = 0`; a
/// `σ`-surgery on a knot adds `σ·½Δ″(1)`.
///
/// Each step's Seifert matrix is taken at face value in the current
/// manifold. When surgery knots interact, obtain the later matrices with
/// [`SurgeryPresentation::blow_down`] first.
pub fn casson(chain: &SurgeryChain) -> Result<Rational> {
    chain.check()?;
    let half = Rational::new(1.into(), 2.into());
    Ok(chain.steps.iter().fold(Rational::zero(), |acc, step| {
        let d2 = alexander_of_matrix(&step.seifert).second_derivative_at_one();
        acc + Rational::from_integer(step.sign.value().into()) * &half * d2
    }))
}

fn expect_components(p: &SurgeryPresentation, n: usize, expected: &'static str) -> Result<()> {
    if p.len() != n {
        return Err(Error::WrongComponentCount { expected, found: p.len() });
    }
    Ok(())
}

/// Sato-Levine invariant in both normalizations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatoLevine {
    pub derived: Rational,
    pub literal: Rational,
}

impl SatoLevine {
    pub fn get(&self, mode: Normalization) -> &Rational {
        match mode {
            Normalization::Derived => &self.derived,
            Normalization::Literal => &self.literal,
        }
    }

    /// False exactly when the two normalizations disagree.
    pub fn modes_agree(&self) -> bool {
        self.derived == self.literal
    }
}

/// `s(ℓ₁ ∪ ℓ₂)` from the jump in `Δ″(1)` of the first component under a
/// `(−1)`-blow-down of the second.
pub fn sato_levine_report(p: &SurgeryPresentation) -> Result<SatoLevine> {
    expect_components(p, 2, "exactly 2")?;
    p.ensure_valid()?;
    let first = p.components[0].name.clone();
    let second = &p.components[1].name;
    let after = p.blow_down(second, Sign::Minus)?;
    let before = alexander(p, &first)?;
    let jump = delta2(&after, &first)? - before.second_derivative_at_one();
    let two = Rational::from_integer(2.into());
    let at_one = before.eval_at_one();
    Ok(SatoLevine { derived: &jump / (&two * at_one), literal: jump / two })
}

pub fn sato_levine(p: &SurgeryPresentation, mode: Normalization) -> Result<Rational> {
    Ok(sato_levine_report(p)?.get(mode).clone())
}

/// `μ(ℓ₁, ℓ₂, ℓ₃)²` as the change of the Sato-Levine invariant of `ℓ₁ ∪ ℓ₂`
/// when the third component is blown down:
/// `ℓk_{Σ−ℓ₃}(c, c⁺) − ℓk_Σ(c, c⁺) = ℓk(c, ℓ₃)²`.
///
/// The sign of `μ` is not recoverable from this data.
pub fn milnor_mu_squared(p: &SurgeryPresentation, mode: Normalization) -> Result<Rational> {
    expect_components(p, 3, "exactly 3")?;
    p.ensure_valid()?;
    let third = &p.components[2].name;
    let after = sato_levine(&p.blow_down(third, Sign::Minus)?, mode)?;
    let before = sato_levine(&p.drop_component(third)?, mode)?;
    Ok(after - before)
}

/// Lescop invariant by first Betti number `n`, with `|Tor H₁(M)| = h`:
///
/// - `n = 1`: `½Δ″(1) − h/12`
/// - `n = 2`: `−h·s`
/// - `n = 3`: `h·μ²`
/// - `n ≥ 4`: `0`
pub fn lescop(p: &SurgeryPresentation, mode: Normalization) -> Result<Rational> {
    p.ensure_valid()?;
    let h = h_of(p);
    match p.len() {
        0 => Err(Error::WrongComponentCount { expected: "at least 1", found: 0 }),
        1 => Ok(surgery_term(p, &p.components[0].name)? - h / Rational::from_integer(12.into())),
        2 => Ok(-h * sato_levine(p, mode)?),
        3 => Ok(h * milnor_mu_squared(p, mode)?),
        _ => Ok(Rational::zero()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InvariantName {
    Alexander,
    Delta2,
    Casson,
    SatoLevine,
    MuSquared,
    Lescop,
}

impl InvariantName {
    pub fn as_str(self) -> &'static str {
        match self {
            InvariantName::Alexander => "alexander",
            InvariantName::Delta2 => "delta2",
            InvariantName::Casson => "casson",
            InvariantName::SatoLevine => "sato_levine",
            InvariantName::MuSquared => "mu_squared",
            InvariantName::Lescop => "lescop",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantValue {
    Rational(Rational),
    Polynomial(HalfLaurent),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub name: InvariantName,
    pub value: InvariantValue,
    pub route: String,
}

impl InvariantReport {
    pub fn rational(name: InvariantName, value: Rational, route: impl Into<String>) -> Self {
        Self { name, value: InvariantValue::Rational(value), route: route.into() }
    }

    pub fn polynomial(name: InvariantName, value: HalfLaurent, route: impl Into<String>) -> Self {
        Self { name, value: InvariantValue::Polynomial(value), route: route.into() }
    }
}

/// Every invariant that applies to `p`.
pub fn report(p: &SurgeryPresentation, mode: Normalization) -> Result<Vec<InvariantReport>> {
    use InvariantName::*;
    p.ensure_valid()?;
    let mut out = Vec::new();
    for c in &p.components {
        out.push(InvariantReport::polynomial(
            Alexander,
            alexander(p, &c.name)?,
            format!("{}: h·det(t^(1/2)V - t^(-1/2)V^T)", c.name),
        ));
        out.push(InvariantReport::rational(Delta2, delta2(p, &c.name)?, format!("{}: second derivative at t=1", c.name)));
    }
    match p.len() {
        2 => out.push(InvariantReport::rational(
            SatoLevine,
            sato_levine(p, mode)?,
            format!("Delta'' jump under (-1)-blow-down, {mode} normalization"),
        )),
        3 => out.push(InvariantReport::rational(
            MuSquared,
            milnor_mu_squared(p, mode)?,
            "Sato-Levine jump under (-1)-blow-down of the third component",
        )),
        _ => {}
    }
    if !p.is_empty() {
        let route = match p.len() {
            1 => "Delta''(1)/2 - h/12",
            2 => "-h*s",
            3 => "h*mu^2",
            _ => "vanishes for b1 >= 4",
        };
        out.push(InvariantReport::rational(Lescop, lescop(p, mode)?, route));
    }
    Ok(out)
}
