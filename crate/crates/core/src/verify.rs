//! Cross-checks run by `lescop verify`.

use num_traits::Zero;

use crate::document::PresentationDocument;
use crate::error::Result;
use crate::floer::{chi_closed_form, chi_via_triangle, lescop_to_chi, BundleSpec};
use crate::invariants::{alexander, lescop, sato_levine_report, Normalization};
use crate::presentation::Sign;
use crate::ring::{HalfLaurent, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, ok: bool, detail: impl Into<String>) -> Self {
        Self { name, status: if ok { Status::Pass } else { Status::Fail }, detail: detail.into() }
    }

    fn skip(name: &'static str, detail: impl Into<String>) -> Self {
        Self { name, status: Status::Skip, detail: detail.into() }
    }
}

/// Largest component count for which every admissible bundle is enumerated.
const MAX_BUNDLE_ENUMERATION: usize = 10;

/// Runs every applicable check. Errors only on invalid input; failed checks
/// are reported as data.
pub fn verify(doc: &PresentationDocument, mode: Normalization) -> Result<Vec<Check>> {
    let p = &doc.presentation;
    let violations = p.validate();
    let mut out = vec![Check::new(
        "validation",
        violations.is_empty(),
        violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "),
    )];
    if !violations.is_empty() {
        return Ok(out);
    }
    let h = Rational::from_integer(p.base_order.into());
    let n = p.len();

    for c in &p.components {
        let a = alexander(p, &c.name)?;
        out.push(Check::new("alexander_symmetry", a.involution() == a, format!("{}: Delta(t) = {a}", c.name)));
        let at_one = a.eval_at_one();
        out.push(Check::new("alexander_at_one", at_one == h, format!("{}: Delta(1) = {at_one}", c.name)));
    }

    if n == 2 {
        let first = &p.components[0].name;
        let sl = sato_levine_report(p)?;
        let before = alexander(p, first)?;
        let after = alexander(&p.blow_down(&p.components[1].name, Sign::Minus)?, first)?;
        let lift = &HalfLaurent::one() + &HalfLaurent::z().pow(2).scale(&sl.derived);
        let ok = (&after - &(&lift * &before)).divides_z_power(3);
        out.push(Check::new("z_cubed_structure", ok, format!("s = {}", sl.derived)));
        if sl.modes_agree() {
            out.push(Check::new("normalization_modes", true, "derived and literal normalizations agree"));
        } else {
            out.push(Check::skip(
                "normalization_modes",
                format!("mode mismatch: derived s = {}, literal s = {}", sl.derived, sl.literal),
            ));
        }
    }

    if n == 0 {
        out.push(Check::skip("route_agreement", "no components; use the casson command for b1 = 0"));
        return Ok(out);
    }

    let bundle = doc.bundle_w2.clone().map(BundleSpec::new).unwrap_or_else(|| BundleSpec::all_ones(n));
    let closed = chi_closed_form(p, &bundle)?;
    let tri = chi_via_triangle(p, &bundle)?;
    out.push(Check::new(
        "route_agreement",
        closed.chi == tri.chi,
        format!("closed form {}, triangle {}", closed.chi, tri.chi),
    ));
    if n >= 4 {
        out.push(Check::new("vanishing", tri.chi.is_zero(), format!("chi = {}", tri.chi)));
    }

    let lambda = lescop(p, mode)?;
    if n == 1 || n >= 4 || p.base_order == 1 {
        match lescop_to_chi(&lambda, n as u32, p.base_order) {
            Ok(chi) => out.push(Check::new(
                "lescop_chi_consistency",
                chi == closed.chi,
                format!("lescop {lambda} -> chi {chi}, closed form {}", closed.chi),
            )),
            Err(e) => out.push(Check::new("lescop_chi_consistency", false, e.to_string())),
        }
    } else {
        out.push(Check::skip(
            "lescop_chi_consistency",
            format!("b1 = {n} with |Tor| = {}: the torsion normalization is not pinned down", p.base_order),
        ));
    }

    if n <= MAX_BUNDLE_ENUMERATION {
        let mut values = Vec::new();
        for b in BundleSpec::admissible(n) {
            values.push(chi_closed_form(p, &b)?.chi);
        }
        let ok = values.iter().all(|v| *v == closed.chi);
        out.push(Check::new("bundle_independence", ok, format!("{} admissible bundles", values.len())));
    } else {
        out.push(Check::skip("bundle_independence", format!("{n} components; enumeration capped at {MAX_BUNDLE_ENUMERATION}")));
    }
    Ok(out)
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.status != Status::Fail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::corpus;

    #[test]
    fn corpus_verifies() {
        for e in corpus() {
            let checks = verify(&e.document, Normalization::Derived).unwrap();
            assert!(all_passed(&checks), "{}: {checks:?}", e.name);
        }
    }

    #[test]
    fn torsion_pair_reports_mode_mismatch() {
        let e = crate::corpus::lookup("ribbon-s1-h3").unwrap();
        let checks = verify(&e.document, Normalization::Derived).unwrap();
        let modes = checks.iter().find(|c| c.name == "normalization_modes").unwrap();
        assert_eq!(modes.status, Status::Skip);
        assert!(modes.detail.contains("mismatch"));
    }
}
