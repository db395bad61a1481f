use std::fmt::Write;

use super::bundle::Document;
use super::syntax::Sections;
use super::ParseError;
use crate::bar::{validate_groupoid, GroupoidData, RawGroupoid};

pub(crate) fn groupoid_from(doc: &Document) -> Result<GroupoidData, ParseError> {
    let s = Sections::new(&doc.lines, doc.line, &["objects", "basepoint", "homs", "compose", "identities"])?;
    let objects = s.require("objects")?;
    let mut raw = RawGroupoid {
        objects: objects.rest.iter().chain(objects.items.iter().flatten()).map(|t| t.text.clone()).collect(),
        basepoint: s.require("basepoint")?.value()?.text.clone(),
        ..Default::default()
    };
    if let Some(h) = s.get("homs") {
        for item in &h.items {
            match item.as_slice() {
                [r, t, elements @ ..] if t.text.ends_with(':') => {
                    let t = t.text.trim_end_matches(':');
                    raw.elements.push((r.text.clone(), t.to_string(), elements.iter().map(|e| e.text.clone()).collect()));
                }
                _ => return Err(item[0].error("expected `r t: elements…`")),
            }
        }
    }
    if let Some(c) = s.get("compose") {
        for item in &c.items {
            match item.as_slice() {
                [x, star, y, eq, z] if star.text == "*" && eq.text == "=" => {
                    raw.compose.push((x.text.clone(), y.text.clone(), z.text.clone()));
                }
                _ => return Err(item[0].error("expected `x * y = z`")),
            }
        }
    }
    if let Some(ids) = s.get("identities") {
        for item in &ids.items {
            match item.as_slice() {
                [r, e] if r.text.ends_with(':') => raw.identities.push((r.text.trim_end_matches(':').to_string(), e.text.clone())),
                _ => return Err(item[0].error("expected `r: e`")),
            }
        }
    }
    validate_groupoid(&raw).map_err(|e| s.semantic(e.to_string()))
}

/// Parses a single groupoid document.
pub fn parse_groupoid(text: &str) -> Result<GroupoidData, ParseError> {
    groupoid_from(&Document::anonymous(text))
}

impl super::Resolver<'_> {
    pub fn main_groupoid(&self, name: Option<&str>) -> Result<GroupoidData, ParseError> {
        groupoid_from(self.bundle.main("groupoid", name)?)
    }
}

/// Canonical form with objects, hom-sets, composites and identities sorted.
pub fn print_groupoid(g: &GroupoidData) -> String {
    let mut raw = g.to_raw();
    raw.objects.sort();
    raw.elements.sort();
    for e in raw.elements.iter_mut() {
        e.2.sort();
    }
    raw.compose.sort();
    raw.identities.sort();
    let mut out = String::new();
    writeln!(out, "objects:{}", raw.objects.iter().map(|o| format!(" {o}")).collect::<String>()).unwrap();
    writeln!(out, "basepoint: {}", raw.basepoint).unwrap();
    out.push_str("homs:\n");
    for (r, t, xs) in &raw.elements {
        writeln!(out, "  {r} {t}:{}", xs.iter().map(|x| format!(" {x}")).collect::<String>()).unwrap();
    }
    out.push_str("compose:\n");
    for (x, y, z) in &raw.compose {
        writeln!(out, "  {x} * {y} = {z}").unwrap();
    }
    out.push_str("identities:\n");
    for (r, e) in &raw.identities {
        writeln!(out, "  {r}: {e}").unwrap();
    }
    out
}
