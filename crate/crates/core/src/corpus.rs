//! Built-in example presentations.

use std::collections::BTreeMap;

use crate::document::PresentationDocument;
use crate::presentation::{build_ribbon_pair, build_triple, Component, RibbonPairSpec, Sign, SurgeryPresentation};
use crate::ring::{Rational, RationalMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntryKind {
    Plain,
    /// `(0,0,0)`-surgery on `K # Borromean rings`; its `χ` is twice the
    /// Euler characteristic of reduced singular instanton homology of `K`.
    KnotBorromeanSum,
    /// Zero-surgery model of a two-component link's Floer homology: a ribbon
    /// pair with `s = ±lk(ℓ₁, ℓ₂)`. The sign of `s` relative to `lk` is a
    /// convention; entries here take `s = lk`, so `χ = −2·lk`.
    LinkFloer { lk: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub kind: EntryKind,
    pub document: PresentationDocument,
}

pub fn trefoil() -> RationalMatrix {
    RationalMatrix::from_i64(&[&[-1, 1], &[0, -1]])
}

pub fn figure_eight() -> RationalMatrix {
    RationalMatrix::from_i64(&[&[1, 1], &[0, -1]])
}

fn ribbon(s: i64, h: u64) -> SurgeryPresentation {
    build_ribbon_pair(&RibbonPairSpec::new(s, vec![], RationalMatrix::empty(), Sign::Plus, h)).expect("valid spec")
}

fn triple(mu: i64, h: u64) -> SurgeryPresentation {
    build_triple(mu, &RibbonPairSpec::new(0, vec![], RationalMatrix::empty(), Sign::Plus, h)).expect("valid spec")
}

fn entry(name: &'static str, description: &'static str, kind: EntryKind, p: SurgeryPresentation) -> CorpusEntry {
    let n = p.len();
    CorpusEntry { name, description, kind, document: PresentationDocument::new(p).with_bundle(vec![true; n]) }
}

/// The example corpus, in a fixed order.
pub fn corpus() -> Vec<CorpusEntry> {
    use EntryKind::*;
    let knot = |v| SurgeryPresentation::knot(1, "k", v);
    let mut out = vec![
        entry("unknot-0", "0-surgery on the unknot", Plain, knot(RationalMatrix::empty())),
        entry("s1xs2", "S^1 x S^2 as 0-surgery on the unknot", Plain, SurgeryPresentation::knot(1, "u", RationalMatrix::empty())),
        entry("trefoil-0", "0-surgery on the trefoil", Plain, knot(trefoil())),
        entry("figure-eight-0", "0-surgery on the figure-eight knot", Plain, knot(figure_eight())),
        entry("trefoil-0-h5", "0-surgery on a trefoil in a rational homology sphere with |H1| = 5", Plain,
            SurgeryPresentation::knot(5, "k", trefoil())),
    ];
    for (name, s) in [("ribbon-s-2", -2), ("ribbon-s-1", -1), ("ribbon-s0", 0), ("ribbon-s1", 1), ("ribbon-s2", 2)] {
        out.push(entry(name, "ribbon pair with prescribed Sato-Levine invariant", Plain, ribbon(s, 1)));
    }
    out.push(entry("ribbon-s1-h3", "ribbon pair with s = 1 over |H1| = 3", Plain, ribbon(1, 3)));
    out.push(entry("ribbon-s1-h2", "ribbon pair with s = 1 over |H1| = 2 (bundle choice ambiguous)", Plain, ribbon(1, 2)));

    let mut boundary = SurgeryPresentation::new(1, vec![Component::new("a", trefoil())]);
    boundary
        .add_component(Component::new("b", figure_eight()), BTreeMap::new())
        .expect("fresh name");
    out.push(entry("boundary-link", "trefoil and figure-eight with disjoint Seifert surfaces", Plain, boundary));

    for (name, mu) in [("triple-mu0", 0), ("triple-mu1", 1), ("triple-mu2", 2)] {
        out.push(entry(name, "three-component split link with prescribed triple linking", Plain, triple(mu, 1)));
    }
    out.push(entry("triple-mu1-h3", "Borromean-type triple over |H1| = 3", Plain, triple(1, 3)));

    out.push(entry("km-unknot", "(0,0,0)-surgery on the Borromean rings", KnotBorromeanSum, triple(1, 1)));
    for (name, v) in [("km-trefoil", trefoil()), ("km-figure-eight", figure_eight())] {
        let p = triple(1, 1).connected_sum_knot("l1", &v).expect("valid knot");
        out.push(entry(name, "(0,0,0)-surgery on knot # Borromean rings", KnotBorromeanSum, p));
    }
    for (name, lk) in [("hs-lk1", 1), ("hs-lk2", 2)] {
        out.push(entry(name, "two-component link Floer model with s = lk", LinkFloer { lk }, ribbon(lk, 1)));
    }

    let mut quad = triple(1, 1);
    let mut c_slot = vec![Rational::from_integer(0.into()); 2];
    c_slot[1] = Rational::from_integer(1.into());
    quad.add_component(Component::new("l4", trefoil()), BTreeMap::from([("l1".to_owned(), c_slot)]))
        .expect("fresh name");
    out.push(entry("quad-vanishing", "four components; chi vanishes", Plain, quad));
    out
}

pub fn lookup(name: &str) -> Option<CorpusEntry> {
    corpus().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::floer::{chi_closed_form, reduced_knot_chi, BundleSpec};
    use crate::invariants::alexander;
    use crate::ring::int;

    #[test]
    fn entries_are_valid_and_unique() {
        let c = corpus();
        let mut names: Vec<_> = c.iter().map(|e| e.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), c.len());
        for e in &c {
            assert!(e.document.presentation.validate().is_empty(), "{}", e.name);
        }
    }

    #[test]
    fn named_values() {
        let u = lookup("unknot-0").unwrap().document.presentation;
        assert_eq!(alexander(&u, "k").unwrap(), crate::ring::HalfLaurent::one());

        let km = lookup("km-trefoil").unwrap().document.presentation;
        let chi = chi_closed_form(&km, &BundleSpec::all_ones(3)).unwrap().chi;
        assert_eq!(chi, (-2).into());
        assert_eq!(reduced_knot_chi(&chi), int(-1));

        let hs = lookup("hs-lk2").unwrap();
        assert_eq!(hs.kind, EntryKind::LinkFloer { lk: 2 });
        let chi = chi_closed_form(&hs.document.presentation, &BundleSpec::all_ones(2)).unwrap().chi;
        assert_eq!(chi, (-4).into());
    }
}
