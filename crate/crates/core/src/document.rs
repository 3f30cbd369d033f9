//! JSON presentation documents.
//!
//! Rationals are written as strings (`"a"` or `"a/b"`) so that no value
//! passes through a float. The schema is strict: unknown fields are errors.
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "base_order": 1,
//!   "components": [
//!     {
//!       "name": "k",
//!       "seifert": [
//!         ["-1", "1"],
//!         ["0", "-1"]
//!       ],
//!       "linking": {}
//!     }
//!   ]
//! }
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::invariants::{ChainStep, Normalization, SurgeryChain};
use crate::presentation::{Component, Sign, SurgeryPresentation};
use crate::ring::{format_rational, parse_rational, Rational, RationalMatrix};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationDocument {
    pub presentation: SurgeryPresentation,
    pub bundle_w2: Option<Vec<bool>>,
    pub normalization: Option<Normalization>,
}

impl PresentationDocument {
    pub fn new(presentation: SurgeryPresentation) -> Self {
        Self { presentation, bundle_w2: None, normalization: None }
    }

    pub fn with_bundle(mut self, w2: Vec<bool>) -> Self {
        self.bundle_w2 = Some(w2);
        self
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    format_version: u32,
    base_order: u64,
    components: Vec<RawComponent>,
    #[serde(default)]
    bundle_w2: Option<Vec<u8>>,
    #[serde(default)]
    normalization: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComponent {
    name: String,
    seifert: Vec<Vec<String>>,
    linking: BTreeMap<String, Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStep {
    seifert: Vec<Vec<String>>,
    sign: i64,
}

fn json_error(e: serde_json::Error) -> Error {
    use serde_json::error::Category;
    match e.classify() {
        Category::Data => Error::Schema(e.to_string()),
        _ => Error::Syntax { line: e.line(), column: e.column(), message: e.to_string() },
    }
}

fn rational_at(s: &str, path: &dyn Fn() -> String) -> Result<Rational> {
    parse_rational(s).map_err(|m| Error::Value(format!("{}: {m}", path())))
}

fn matrix_at(rows: &[Vec<String>], path: &str) -> Result<RationalMatrix> {
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, s)| rational_at(s, &|| format!("{path}[{i}][{j}]")))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let m = RationalMatrix::from_rows(parsed).map_err(|e| Error::Schema(format!("{path}: {e}")))?;
    if !m.is_square() {
        return Err(Error::Schema(format!("{path}: matrix is {}x{}, not square", m.rows(), m.cols())));
    }
    Ok(m)
}

/// Parses and validates a presentation document.
pub fn parse(text: &str) -> Result<PresentationDocument> {
    let raw: RawDocument = serde_json::from_str(text).map_err(json_error)?;
    if raw.format_version != FORMAT_VERSION {
        return Err(Error::Schema(format!(
            "format_version {} is not supported (expected {FORMAT_VERSION})",
            raw.format_version
        )));
    }
    if raw.base_order == 0 {
        return Err(Error::Value("base_order must be a positive integer".into()));
    }
    let mut components = Vec::with_capacity(raw.components.len());
    for (ci, rc) in raw.components.iter().enumerate() {
        let path = format!("components[{ci}] (`{}`)", rc.name);
        let seifert = matrix_at(&rc.seifert, &format!("{path}.seifert"))?;
        let mut comp = Component::new(rc.name.clone(), seifert);
        for (other, vec) in &rc.linking {
            let v = vec
                .iter()
                .enumerate()
                .map(|(m, s)| rational_at(s, &|| format!("{path}.linking.{other}[{m}]")))
                .collect::<Result<Vec<_>>>()?;
            comp.linking.insert(other.clone(), v);
        }
        components.push(comp);
    }
    let presentation = SurgeryPresentation::new(raw.base_order, components);
    let violations = presentation.validate();
    if !violations.is_empty() {
        return Err(Error::Schema(
            violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "),
        ));
    }
    let bundle_w2 = raw
        .bundle_w2
        .map(|bits| {
            if bits.len() != presentation.len() {
                return Err(Error::Schema(format!(
                    "bundle_w2 has {} entries for {} components",
                    bits.len(),
                    presentation.len()
                )));
            }
            bits.iter()
                .enumerate()
                .map(|(i, &b)| match b {
                    0 => Ok(false),
                    1 => Ok(true),
                    _ => Err(Error::Value(format!("bundle_w2[{i}] = {b} is not a bit"))),
                })
                .collect()
        })
        .transpose()?;
    let normalization = raw
        .normalization
        .map(|s| s.parse::<Normalization>().map_err(|m| Error::Value(format!("normalization: {m}"))))
        .transpose()?;
    Ok(PresentationDocument { presentation, bundle_w2, normalization })
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn rational_row(v: &[Rational]) -> String {
    let items: Vec<_> = v.iter().map(|x| quote(&format_rational(x))).collect();
    format!("[{}]", items.join(", "))
}

fn write_matrix(out: &mut String, m: &RationalMatrix, indent: &str) {
    if m.rows() == 0 {
        out.push_str("[]");
        return;
    }
    out.push_str("[\n");
    let rows = m.row_vecs();
    for (i, row) in rows.iter().enumerate() {
        let sep = if i + 1 < rows.len() { "," } else { "" };
        let _ = writeln!(out, "{indent}  {}{sep}", rational_row(row));
    }
    let _ = write!(out, "{indent}]");
}

/// Canonical text form: two-space indentation, one matrix row per line,
/// linking vectors sorted by component name, trailing newline.
pub fn serialize(doc: &PresentationDocument) -> String {
    let p = &doc.presentation;
    let mut out = String::new();
    let _ = writeln!(out, "{{\n  \"format_version\": {FORMAT_VERSION},");
    let _ = writeln!(out, "  \"base_order\": {},", p.base_order);
    out.push_str("  \"components\": [");
    for (i, c) in p.components.iter().enumerate() {
        out.push_str(if i == 0 { "\n" } else { ",\n" });
        let _ = writeln!(out, "    {{\n      \"name\": {},", quote(&c.name));
        out.push_str("      \"seifert\": ");
        write_matrix(&mut out, &c.seifert, "      ");
        out.push_str(",\n      \"linking\": {");
        for (j, (other, v)) in c.linking.iter().enumerate() {
            out.push_str(if j == 0 { "\n" } else { ",\n" });
            let _ = write!(out, "        {}: {}", quote(other), rational_row(v));
        }
        out.push_str(if c.linking.is_empty() { "}\n    }" } else { "\n      }\n    }" });
    }
    out.push_str(if p.components.is_empty() { "]" } else { "\n  ]" });
    if let Some(bits) = &doc.bundle_w2 {
        let items: Vec<_> = bits.iter().map(|&b| if b { "1" } else { "0" }).collect();
        let _ = write!(out, ",\n  \"bundle_w2\": [{}]", items.join(", "));
    }
    if let Some(mode) = doc.normalization {
        let _ = write!(out, ",\n  \"normalization\": {}", quote(mode.as_str()));
    }
    out.push_str("\n}\n");
    out
}

/// Parses a chain file: a JSON list of `{"seifert": [[...]], "sign": ±1}`.
pub fn parse_chain(text: &str) -> Result<SurgeryChain> {
    let raw: Vec<RawStep> = serde_json::from_str(text).map_err(json_error)?;
    let steps = raw
        .iter()
        .enumerate()
        .map(|(i, step)| {
            let seifert = matrix_at(&step.seifert, &format!("steps[{i}].seifert"))?;
            let sign = Sign::from_value(step.sign)
                .ok_or_else(|| Error::Value(format!("steps[{i}].sign = {} (expected 1 or -1)", step.sign)))?;
            Ok(ChainStep { seifert, sign })
        })
        .collect::<Result<Vec<_>>>()?;
    let chain = SurgeryChain::new(steps);
    chain.check().map_err(|e| Error::Schema(e.to_string()))?;
    Ok(chain)
}

pub fn serialize_chain(chain: &SurgeryChain) -> String {
    let mut out = String::from("[");
    for (i, step) in chain.steps.iter().enumerate() {
        out.push_str(if i == 0 { "\n" } else { ",\n" });
        out.push_str("  {\n    \"seifert\": ");
        write_matrix(&mut out, &step.seifert, "    ");
        let _ = write!(out, ",\n    \"sign\": {}\n  }}", step.sign.value());
    }
    out.push_str(if chain.steps.is_empty() { "]\n" } else { "\n]\n" });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{build_triple, RibbonPairSpec};
    use crate::sample::Sampler;
    use proptest::prelude::*;

    const UNKNOT: &str = r#"{"format_version": 1, "base_order": 1,
        "components": [{"name": "u", "seifert": [], "linking": {}}]}"#;

    #[test]
    fn minimal_document() {
        let d = parse(UNKNOT).unwrap();
        assert_eq!(d.presentation.base_order, 1);
        assert_eq!(d.presentation.len(), 1);
        assert!(d.bundle_w2.is_none());
    }

    #[test]
    fn trefoil_document() {
        let text = r#"{"format_version": 1, "base_order": 1, "components": [
            {"name": "k", "seifert": [["-1", "1"], ["0", "-1"]], "linking": {}}]}"#;
        let d = parse(text).unwrap();
        assert_eq!(d.presentation.components[0].seifert, RationalMatrix::from_i64(&[&[-1, 1], &[0, -1]]));
    }

    #[test]
    fn odd_matrix_is_schema_error_naming_component() {
        let text = r#"{"format_version": 1, "base_order": 1, "components": [
            {"name": "bad", "seifert": [["0","0","0"],["0","0","0"],["0","0","0"]], "linking": {}}]}"#;
        match parse(text) {
            Err(Error::Schema(m)) => assert!(m.contains("bad"), "{m}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn error_classes() {
        assert!(matches!(parse("{"), Err(Error::Syntax { .. })));
        assert!(matches!(parse(&UNKNOT.replace("\"linking\"", "\"extra\": 1, \"linking\"")), Err(Error::Schema(_))));
        let zero_den = r#"{"format_version": 1, "base_order": 2, "components": [
            {"name": "k", "seifert": [["1/0", "1"], ["0", "0"]], "linking": {}}]}"#;
        match parse(zero_den) {
            Err(Error::Value(m)) => assert!(m.contains("seifert[0][0]"), "{m}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn canonical_text() {
        let spec = RibbonPairSpec::new(1, vec![], RationalMatrix::empty(), Sign::Plus, 1);
        let doc = PresentationDocument::new(build_triple(1, &spec).unwrap()).with_bundle(vec![true; 3]);
        let text = serialize(&doc);
        assert!(text.contains("        [\"1\", \"1\"]\n"));
        assert!(text.contains("\"bundle_w2\": [1, 1, 1]"));
        assert_eq!(parse(&text).unwrap(), doc);
    }

    #[test]
    fn non_lowest_terms_normalize() {
        let text = r#"{"format_version": 1, "base_order": 2, "components": [
            {"name": "k", "seifert": [["2/4", "1"], ["0", "0"]], "linking": {}}]}"#;
        let d = parse(text).unwrap();
        assert_eq!(*d.presentation.components[0].seifert.get(0, 0), Rational::new(1.into(), 2.into()));
        let once = serialize(&d);
        assert_eq!(serialize(&parse(&once).unwrap()), once);
    }

    #[test]
    fn chains() {
        let text = r#"[{"seifert": [["-1","1"],["0","-1"]], "sign": -1}]"#;
        let c = parse_chain(text).unwrap();
        assert_eq!(c.steps[0].sign, Sign::Minus);
        assert_eq!(parse_chain(&serialize_chain(&c)).unwrap(), c);
        assert!(matches!(parse_chain(r#"[{"seifert": [], "sign": 2}]"#), Err(Error::Value(_))));
        assert!(parse_chain("[]").unwrap().steps.is_empty());
    }

    proptest! {
        #[test]
        fn serialize_is_a_fixed_point(seed in any::<u64>(), n in 0usize..4, h in 1u64..4) {
            let p = Sampler::new(seed).presentation(n, 2, 3, h);
            let doc = PresentationDocument::new(p);
            let text = serialize(&doc);
            let back = parse(&text).unwrap();
            prop_assert_eq!(&back, &doc);
            prop_assert_eq!(serialize(&back), text);
        }
    }
}
