//! Euler characteristic of instanton Floer homology, computed two ways:
//! from the closed-form case formulas, and by unwinding the Floer exact
//! triangle down to single knots. No Floer groups are computed; only the
//! Euler characteristics they force.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::invariants::{self, milnor_mu_squared, sato_levine, Normalization, SurgeryChain};
use crate::par::Exec;
use crate::presentation::{Sign, SurgeryPresentation};
use crate::ring::Rational;

/// `w₂(ad P)` evaluated on the capped-off Seifert surfaces, one bit per
/// component. Admissible when some bit is set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BundleSpec {
    pub w2: Vec<bool>,
    pub trivial_on_exterior: bool,
}

impl BundleSpec {
    pub fn new(w2: Vec<bool>) -> Self {
        Self { w2, trivial_on_exterior: true }
    }

    /// The bundle used in the proofs: `w₂ = (1, …, 1)`.
    pub fn all_ones(n: usize) -> Self {
        Self::new(vec![true; n])
    }

    /// All `2ⁿ − 1` admissible vectors, in binary counting order.
    pub fn admissible(n: usize) -> impl Iterator<Item = BundleSpec> {
        assert!(n < 63);
        (1u64..1 << n).map(move |mask| Self::new((0..n).map(|i| mask >> i & 1 == 1).collect()))
    }

    pub fn check(&self, components: usize) -> Result<()> {
        if self.w2.len() != components {
            return Err(Error::InadmissibleBundle(format!(
                "w2 has {} entries for {components} components",
                self.w2.len()
            )));
        }
        if !self.w2.iter().any(|&b| b) {
            return Err(Error::InadmissibleBundle("w2 vanishes on every surgery class".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ambiguity {
    Unique,
    /// `Ext(H₁(M), Z₂) ≠ 0`: the admissible bundle is not pinned down by
    /// `w₂` on the surgery classes alone.
    ExtAmbiguous,
}

impl Ambiguity {
    pub fn as_str(self) -> &'static str {
        match self {
            Ambiguity::Unique => "unique",
            Ambiguity::ExtAmbiguous => "ext_ambiguous",
        }
    }
}

/// Odd torsion order means no 2-torsion, so the `Ext` group vanishes.
pub fn bundle_ambiguity(h: u64) -> Ambiguity {
    if h % 2 == 1 {
        Ambiguity::Unique
    } else {
        Ambiguity::ExtAmbiguous
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    ClosedForm,
    Triangle,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::ClosedForm => "closed_form",
            Route::Triangle => "triangle",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiReport {
    pub chi: BigInt,
    pub route: Route,
    pub bundle: BundleSpec,
    pub ambiguity: Ambiguity,
    pub note: Option<String>,
}

const EVEN_TORSION_NOTE: &str =
    "H1 may have 2-torsion: chi is reported for the bundle trivial on the link exterior; \
     independence from that choice is conjectural here";

fn integral(chi: Rational) -> Result<BigInt> {
    if chi.is_integer() {
        Ok(chi.to_integer())
    } else {
        Err(Error::NonIntegralChi(chi))
    }
}

fn finish(p: &SurgeryPresentation, b: &BundleSpec, chi: Rational, route: Route) -> Result<ChiReport> {
    let ambiguity = bundle_ambiguity(p.base_order);
    Ok(ChiReport {
        chi: integral(chi)?,
        route,
        bundle: b.clone(),
        ambiguity,
        note: (ambiguity == Ambiguity::ExtAmbiguous).then(|| EVEN_TORSION_NOTE.to_owned()),
    })
}

fn prepare(p: &SurgeryPresentation, b: &BundleSpec) -> Result<()> {
    if p.is_empty() {
        return Err(Error::WrongComponentCount { expected: "at least 1 (use taubes_chi for b1 = 0)", found: 0 });
    }
    p.ensure_valid()?;
    b.check(p.len())
}

/// Case formulas, with `h = |Tor H₁|` and Alexander polynomials normalized
/// by `h`:
///
/// - `n = 1`: `−Δ″(1)`
/// - `n = 2`: `−2h·s`
/// - `n = 3`: `−2h·μ²`
/// - `n ≥ 4`: `0`
///
/// The bundle is read only for admissibility and ambiguity reporting; the
/// value does not depend on which admissible `w₂` is supplied.
pub fn chi_closed_form(p: &SurgeryPresentation, b: &BundleSpec) -> Result<ChiReport> {
    prepare(p, b)?;
    let h = Rational::from_integer(p.base_order.into());
    let two = Rational::from_integer(2.into());
    let chi = match p.len() {
        1 => -invariants::delta2(p, &p.components[0].name)?,
        2 => -two * h * sato_levine(p, Normalization::Derived)?,
        3 => -two * h * milnor_mu_squared(p, Normalization::Derived)?,
        _ => Rational::zero(),
    };
    finish(p, b, chi, Route::ClosedForm)
}

/// Exact-triangle recursion on the last component:
/// `χ(Σ + 0·ℓ₁ … + 0·ℓₙ) = χ((Σ + … + 0·ℓₙ₋₁) − ℓₙ) − χ(Σ + … + 0·ℓₙ₋₁)`,
/// bottoming out at `−Δ″(1)` for a single knot.
pub fn chi_via_triangle(p: &SurgeryPresentation, b: &BundleSpec) -> Result<ChiReport> {
    chi_via_triangle_with(p, b, Exec::default())
}

/// [`chi_via_triangle`] with an explicit execution strategy for the two
/// branches of each triangle.
pub fn chi_via_triangle_with(p: &SurgeryPresentation, b: &BundleSpec, exec: Exec) -> Result<ChiReport> {
    prepare(p, b)?;
    let chi = triangle(p, exec)?;
    finish(p, b, chi, Route::Triangle)
}

fn triangle(p: &SurgeryPresentation, exec: Exec) -> Result<Rational> {
    if p.len() == 1 {
        return Ok(-invariants::delta2(p, &p.components[0].name)?);
    }
    let last = &p.components[p.len() - 1].name;
    let surgered = p.blow_down(last, Sign::Minus)?;
    let forgotten = p.drop_component(last)?;
    // Below depth 3 the branches are too small to be worth forking.
    let exec = if p.len() < 3 { Exec::Sequential } else { exec };
    let (a, b) = exec.join(|| triangle(&surgered, exec), || triangle(&forgotten, exec));
    Ok(a? - b?)
}

/// `χ = 2λ` for an integral homology sphere given as a surgery chain.
pub fn taubes_chi(chain: &SurgeryChain) -> Result<Rational> {
    Ok(Rational::from_integer(2.into()) * invariants::casson(chain)?)
}

fn check_b1_h(b1: u32, h: u64) -> Result<()> {
    if b1 == 0 {
        return Err(Error::InvalidSpec("b1 must be at least 1".into()));
    }
    if h == 0 {
        return Err(Error::InvalidSpec("torsion order must be positive".into()));
    }
    Ok(())
}

/// Lescop invariant to Euler characteristic without the integrality check:
/// `b₁ = 1`: `χ = −2λ − h/6`; `b₁ ≥ 2`: `χ = 2(−1)^b₁·λ/h`.
pub fn lescop_to_chi_exact(lambda: &Rational, b1: u32, h: u64) -> Result<Rational> {
    check_b1_h(b1, h)?;
    let h = Rational::from_integer(h.into());
    let two = Rational::from_integer(2.into());
    Ok(if b1 == 1 {
        -(&two * lambda) - h / Rational::from_integer(6.into())
    } else {
        let sign = if b1.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
        two * sign * lambda / h
    })
}

/// As [`lescop_to_chi_exact`], rejecting non-integral results.
pub fn lescop_to_chi(lambda: &Rational, b1: u32, h: u64) -> Result<BigInt> {
    integral(lescop_to_chi_exact(lambda, b1, h)?)
}

/// Inverse of [`lescop_to_chi_exact`]:
/// `b₁ = 1`: `λ = −χ/2 − h/12`; `b₁ ≥ 2`: `λ = ½(−1)^b₁·h·χ`.
pub fn chi_to_lescop(chi: &Rational, b1: u32, h: u64) -> Result<Rational> {
    check_b1_h(b1, h)?;
    let h = Rational::from_integer(h.into());
    let two = Rational::from_integer(2.into());
    Ok(if b1 == 1 {
        -(chi / &two) - h / Rational::from_integer(12.into())
    } else {
        let sign = if b1.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
        sign * h * chi / two
    })
}

/// Euler characteristic of reduced singular instanton knot homology of a
/// knot `ℓ ⊂ S³`, from `χ` of `(0,0,0)`-surgery on `ℓ # Borromean rings`
/// (whose Floer group is two copies of it).
pub fn reduced_knot_chi(chi_borromean_sum: &BigInt) -> Rational {
    Rational::new(chi_borromean_sum.clone(), 2.into())
}
