//! Surgery presentations `M = Σ + 0·(ℓ₁ ∪ … ∪ ℓₙ)`: a rational homology
//! sphere `Σ`, recorded only through `|H₁(Σ)|`, together with an
//! algebraically split link of null-homologous, 0-framed components.
//!
//! Each component carries the Seifert matrix of a chosen Seifert surface and,
//! for every other component, the vector of linking numbers between the
//! surface's basis curves and that component. Pairwise linking numbers of the
//! components themselves are zero by construction and are not stored.

mod builders;

pub use builders::{build_ribbon_pair, build_triple, RibbonPairSpec};

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{Rational, RationalMatrix};

/// Framing of a `±1`-surgery.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Self> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub name: String,
    /// Seifert matrix with respect to a basis `e₁ … e₂g` of `H₁(F)`.
    pub seifert: RationalMatrix,
    /// `linking[other][m] = ℓk_Σ(e_m, other)`.
    pub linking: BTreeMap<String, Vec<Rational>>,
}

impl Component {
    pub fn new(name: impl Into<String>, seifert: RationalMatrix) -> Self {
        Self { name: name.into(), seifert, linking: BTreeMap::new() }
    }

    /// Unknotted component bounding a disk.
    pub fn unknot(name: impl Into<String>) -> Self {
        Self::new(name, RationalMatrix::empty())
    }

    pub fn genus_basis_len(&self) -> usize {
        self.seifert.rows()
    }

    pub fn linking_with(&self, other: &str) -> Option<&[Rational]> {
        self.linking.get(other).map(Vec::as_slice)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurgeryPresentation {
    /// `h = |H₁(Σ)| = |Tor H₁(M)|`.
    pub base_order: u64,
    pub components: Vec<Component>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rule {
    ZeroBaseOrder,
    DuplicateName,
    NotSquare { rows: usize, cols: usize },
    OddSize(usize),
    NonIntegralForm,
    FormNotUnimodular(Rational),
    NonIntegralEntry,
    SelfLinking,
    UnknownLinkTarget(String),
    MissingLinking(String),
    LinkingLength { other: String, expected: usize, found: usize },
}

/// One failed invariant; `component` is `None` for presentation-wide rules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub component: Option<String>,
    pub rule: Rule,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = &self.component {
            write!(f, "component `{c}`: ")?;
        }
        match &self.rule {
            Rule::ZeroBaseOrder => write!(f, "base_order must be positive"),
            Rule::DuplicateName => write!(f, "duplicate component name"),
            Rule::NotSquare { rows, cols } => write!(f, "seifert matrix is {rows}x{cols}, not square"),
            Rule::OddSize(n) => write!(f, "seifert matrix has odd size {n}"),
            Rule::NonIntegralForm => write!(f, "V - V^T is not integer-valued"),
            Rule::FormNotUnimodular(d) => write!(f, "det(V - V^T) = {d}, expected 1"),
            Rule::NonIntegralEntry => write!(f, "non-integer entry with base_order 1"),
            Rule::SelfLinking => write!(f, "linking vector against itself"),
            Rule::UnknownLinkTarget(o) => write!(f, "linking vector references unknown component `{o}`"),
            Rule::MissingLinking(o) => write!(f, "missing linking vector against `{o}`"),
            Rule::LinkingLength { other, expected, found } => {
                write!(f, "linking vector against `{other}` has length {found}, expected {expected}")
            }
        }
    }
}

/// Checks the skew-form invariant: `V` square of even size with `V − Vᵀ`
/// integral and unimodular. Shared by components, knot chains and specs.
pub fn seifert_violations(v: &RationalMatrix) -> Vec<Rule> {
    if !v.is_square() {
        return vec![Rule::NotSquare { rows: v.rows(), cols: v.cols() }];
    }
    if v.rows() % 2 == 1 {
        return vec![Rule::OddSize(v.rows())];
    }
    let form = v.sub(&v.transpose());
    if !form.is_integral() {
        return vec![Rule::NonIntegralForm];
    }
    let det = form.determinant().expect("square");
    if !det.is_one() {
        return vec![Rule::FormNotUnimodular(det)];
    }
    Vec::new()
}

impl SurgeryPresentation {
    pub fn new(base_order: u64, components: Vec<Component>) -> Self {
        Self { base_order, components }
    }

    /// `Σ + 0·k` for a single knot with Seifert matrix `v`.
    pub fn knot(base_order: u64, name: impl Into<String>, v: RationalMatrix) -> Self {
        Self::new(base_order, vec![Component::new(name, v)])
    }

    /// Number of components, which is `b₁` of the presented manifold.
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component(&self, name: &str) -> Result<&Component> {
        self.components
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| Error::UnknownComponent(name.to_owned()))
    }

    fn index_of(&self, name: &str) -> Result<usize> {
        self.components
            .iter()
            .position(|c| c.name == name)
            .ok_or_else(|| Error::UnknownComponent(name.to_owned()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.components.iter().map(|c| c.name.as_str())
    }

    /// All violated invariants; empty iff the presentation is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.base_order == 0 {
            out.push(Violation { component: None, rule: Rule::ZeroBaseOrder });
        }
        let mut seen = std::collections::BTreeSet::new();
        for c in &self.components {
            let at = |rule| Violation { component: Some(c.name.clone()), rule };
            if !seen.insert(c.name.as_str()) {
                out.push(at(Rule::DuplicateName));
            }
            out.extend(seifert_violations(&c.seifert).into_iter().map(at));
            if self.base_order == 1
                && !(c.seifert.is_integral() && c.linking.values().flatten().all(|x| x.is_integer()))
            {
                out.push(at(Rule::NonIntegralEntry));
            }
            for (other, vec) in &c.linking {
                if *other == c.name {
                    out.push(at(Rule::SelfLinking));
                } else if self.component(other).is_err() {
                    out.push(at(Rule::UnknownLinkTarget(other.clone())));
                } else if vec.len() != c.seifert.rows() {
                    out.push(at(Rule::LinkingLength {
                        other: other.clone(),
                        expected: c.seifert.rows(),
                        found: vec.len(),
                    }));
                }
            }
            for other in self.names().filter(|o| *o != c.name) {
                if !c.linking.contains_key(other) {
                    out.push(at(Rule::MissingLinking(other.to_owned())));
                }
            }
        }
        out
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let vs = self.validate();
        if vs.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidPresentation(vs))
        }
    }

    /// Performs `sign`-surgery on `target` and absorbs it into `Σ`.
    ///
    /// Every other component's Seifert matrix changes by Hoste's formula,
    /// `V ↦ V − sign·E·Eᵀ` with `E` its linking vector against `target`, so a
    /// `(−1)`-surgery adds `E·Eᵀ`. Linking vectors between the remaining
    /// components would change by `E_i·ℓk(ℓ_j, target)`, which vanishes since
    /// the link is algebraically split. `|H₁|` is unchanged because the
    /// target is null-homologous.
    ///
    /// The `+1` case is the natural extension of the formula; the proofs only
    /// blow down `−1`-framed components.
    pub fn blow_down(&self, target: &str, sign: Sign) -> Result<Self> {
        let idx = self.index_of(target)?;
        let coeff = Rational::from_integer((-sign.value()).into());
        let mut components = Vec::with_capacity(self.len() - 1);
        for (i, c) in self.components.iter().enumerate() {
            if i == idx {
                continue;
            }
            let e = c.linking_with(target).ok_or_else(|| {
                Error::InvalidPresentation(vec![Violation {
                    component: Some(c.name.clone()),
                    rule: Rule::MissingLinking(target.to_owned()),
                }])
            })?;
            if e.len() != c.seifert.rows() {
                return Err(Error::InvalidPresentation(vec![Violation {
                    component: Some(c.name.clone()),
                    rule: Rule::LinkingLength {
                        other: target.to_owned(),
                        expected: c.seifert.rows(),
                        found: e.len(),
                    },
                }]));
            }
            let seifert = if e.iter().all(Zero::is_zero) {
                c.seifert.clone()
            } else {
                c.seifert.add_outer(e, &coeff)
            };
            let mut linking = c.linking.clone();
            linking.remove(target);
            components.push(Component { name: c.name.clone(), seifert, linking });
        }
        Ok(Self::new(self.base_order, components))
    }

    /// Forgets `target` without doing surgery on it.
    pub fn drop_component(&self, target: &str) -> Result<Self> {
        let idx = self.index_of(target)?;
        let components = self
            .components
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, c)| {
                let mut c = c.clone();
                c.linking.remove(target);
                c
            })
            .collect();
        Ok(Self::new(self.base_order, components))
    }

    /// Connected sum of component `comp` with a local knot whose Seifert
    /// matrix is `v`. The new basis curves come first and link nothing.
    pub fn connected_sum_knot(&self, comp: &str, v: &RationalMatrix) -> Result<Self> {
        if let Some(rule) = seifert_violations(v).into_iter().next() {
            return Err(Error::InvalidSpec(format!("summand Seifert matrix: {}", Violation { component: None, rule })));
        }
        let idx = self.index_of(comp)?;
        let mut out = self.clone();
        let c = &mut out.components[idx];
        c.seifert = v.block_sum(&c.seifert);
        for vec in c.linking.values_mut() {
            let mut padded = vec![Rational::zero(); v.rows()];
            padded.append(vec);
            *vec = padded;
        }
        Ok(out)
    }

    /// Appends a component. `incoming[name]` is the existing component's
    /// linking vector against the new one; missing vectors in either
    /// direction are filled with zeros.
    pub fn add_component(&mut self, mut comp: Component, mut incoming: BTreeMap<String, Vec<Rational>>) -> Result<()> {
        if self.component(&comp.name).is_ok() {
            return Err(Error::InvalidSpec(format!("component `{}` already exists", comp.name)));
        }
        for name in incoming.keys() {
            self.component(name)?;
        }
        for c in &mut self.components {
            let v = incoming.remove(&c.name).unwrap_or_else(|| vec![Rational::zero(); c.seifert.rows()]);
            c.linking.insert(comp.name.clone(), v);
            comp.linking
                .entry(c.name.clone())
                .or_insert_with(|| vec![Rational::zero(); comp.seifert.rows()]);
        }
        self.components.push(comp);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{frac, int};

    pub(crate) fn trefoil() -> RationalMatrix {
        RationalMatrix::from_i64(&[&[-1, 1], &[0, -1]])
    }

    fn spec(s: i64) -> RibbonPairSpec {
        RibbonPairSpec::new(s, Vec::new(), RationalMatrix::empty(), Sign::Plus, 1)
    }

    #[test]
    fn trefoil_knot_is_valid() {
        assert!(SurgeryPresentation::knot(1, "k", trefoil()).validate().is_empty());
    }

    #[test]
    fn odd_size_reported() {
        let p = SurgeryPresentation::knot(1, "k", RationalMatrix::zeros(3, 3));
        let vs = p.validate();
        assert_eq!(vs, vec![Violation { component: Some("k".into()), rule: Rule::OddSize(3) }]);
    }

    #[test]
    fn bad_linking_length_reported() {
        let mut p = build_ribbon_pair(&spec(1)).unwrap();
        p.components[0].linking.insert("l2".into(), vec![int(1)]);
        let vs = p.validate();
        assert_eq!(vs.len(), 1);
        assert!(matches!(&vs[0].rule, Rule::LinkingLength { expected: 2, found: 1, .. }));
        assert!(vs[0].to_string().contains("l1"));
    }

    #[test]
    fn other_violations() {
        let mut p = SurgeryPresentation::knot(1, "k", RationalMatrix::from_i64(&[&[1, 0], &[0, 1]]));
        p.components.push(Component::unknot("k"));
        p.base_order = 0;
        let rules: Vec<_> = p.validate().into_iter().map(|v| v.rule).collect();
        assert!(rules.contains(&Rule::ZeroBaseOrder));
        assert!(rules.contains(&Rule::DuplicateName));
        assert!(rules.contains(&Rule::FormNotUnimodular(int(0))));

        let half = SurgeryPresentation::knot(1, "k", RationalMatrix::from_rows(vec![
            vec![frac(1, 2), int(1)],
            vec![int(0), int(0)],
        ]).unwrap());
        assert_eq!(half.validate()[0].rule, Rule::NonIntegralEntry);
        let mut torsion = half.clone();
        torsion.base_order = 2;
        assert!(torsion.validate().is_empty());

        let mut dangling = build_ribbon_pair(&spec(0)).unwrap();
        dangling.components[1].linking.clear();
        dangling.components[1].linking.insert("nope".into(), vec![]);
        let rules: Vec<_> = dangling.validate().into_iter().map(|v| v.rule).collect();
        assert!(rules.contains(&Rule::UnknownLinkTarget("nope".into())));
        assert!(rules.contains(&Rule::MissingLinking("l1".into())));
    }

    #[test]
    fn blow_down_adds_outer_product() {
        let p = build_ribbon_pair(&spec(1)).unwrap();
        assert_eq!(p.components[0].seifert, RationalMatrix::from_i64(&[&[0, 0], &[1, 1]]));
        let q = p.blow_down("l2", Sign::Minus).unwrap();
        assert_eq!(q.len(), 1);
        assert_eq!(q.components[0].seifert, RationalMatrix::from_i64(&[&[1, 0], &[1, 1]]));
        assert!(q.components[0].linking.is_empty());
        assert!(q.validate().is_empty());
        let plus = p.blow_down("l2", Sign::Plus).unwrap();
        assert_eq!(plus.components[0].seifert, RationalMatrix::from_i64(&[&[-1, 0], &[1, 1]]));
    }

    #[test]
    fn blow_down_zero_linking_is_identity_on_others() {
        let mut p = build_ribbon_pair(&spec(2)).unwrap();
        p.add_component(Component::new("k", trefoil()), BTreeMap::new()).unwrap();
        let q = p.blow_down("k", Sign::Minus).unwrap();
        assert_eq!(q, p.drop_component("k").unwrap());
        assert!(matches!(p.blow_down("zz", Sign::Minus), Err(Error::UnknownComponent(_))));
    }

    #[test]
    fn drop_components() {
        let p = build_ribbon_pair(&spec(1)).unwrap();
        let q = p.drop_component("l2").unwrap();
        assert_eq!(q.components[0].seifert, p.components[0].seifert);
        let empty = q.drop_component("l1").unwrap();
        assert!(empty.is_empty());
        assert_eq!(empty.base_order, 1);
    }

    #[test]
    fn connected_sum_with_empty_is_identity() {
        let p = build_ribbon_pair(&spec(1)).unwrap();
        assert_eq!(p.connected_sum_knot("l1", &RationalMatrix::empty()).unwrap(), p);
        let q = p.connected_sum_knot("l1", &trefoil()).unwrap();
        assert_eq!(q.components[0].seifert.rows(), 4);
        assert_eq!(q.components[0].linking["l2"], vec![int(0), int(0), int(1), int(0)]);
        assert!(q.validate().is_empty());
        assert!(matches!(
            p.connected_sum_knot("l1", &RationalMatrix::zeros(2, 2)),
            Err(Error::InvalidSpec(_))
        ));
    }
}
