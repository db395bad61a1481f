use std::collections::BTreeMap;
use std::fmt::Write;
use std::sync::Arc;

use super::bundle::{BundleWriter, Document, Resolver};
use super::syntax::{Sections, Token};
use super::ParseError;
use crate::fincat::{CategorySystem, FiniteCategory, Functor, RawCategory};

pub(crate) fn category_from(doc: &Document) -> Result<FiniteCategory, ParseError> {
    let s = Sections::new(&doc.lines, doc.line, &["objects", "morphisms", "compose"])?;
    let objects = s.require("objects")?;
    let mut raw = RawCategory { implicit_identities: true, ..Default::default() };
    raw.objects = objects.rest.iter().chain(objects.items.iter().flatten()).map(|t| t.text.clone()).collect();
    if let Some(m) = s.get("morphisms") {
        for item in &m.items {
            match item.as_slice() {
                [name, src, arrow, tgt] if name.text.ends_with(':') && arrow.text == "->" => {
                    raw.morphisms.push((name.text.trim_end_matches(':').to_string(), src.text.clone(), tgt.text.clone()));
                }
                _ => return Err(item[0].error("expected `name: source -> target`")),
            }
        }
    }
    if let Some(c) = s.get("compose") {
        for item in &c.items {
            match item.as_slice() {
                [g, dot, f, eq, h] if dot.text == "." && eq.text == "=" => {
                    raw.compose.push((g.text.clone(), f.text.clone(), h.text.clone()));
                }
                _ => return Err(item[0].error("expected `g . f = h`")),
            }
        }
    }
    FiniteCategory::validate(&raw).map_err(|e| s.semantic(e.to_string()))
}

/// Parses a single category document.
pub fn parse_category(text: &str) -> Result<FiniteCategory, ParseError> {
    category_from(&Document::anonymous(text))
}

/// Canonical form: objects, morphisms and composites sorted, identities
/// and composites with identities left implicit.
pub fn print_category(c: &FiniteCategory) -> String {
    let raw = c.to_raw();
    let mut objects = raw.objects.clone();
    objects.sort();
    let mut morphisms = raw.morphisms.clone();
    morphisms.sort();
    let mut compose = raw.compose.clone();
    compose.sort();
    let mut out = String::new();
    writeln!(out, "objects:{}", objects.iter().map(|o| format!(" {o}")).collect::<String>()).unwrap();
    out.push_str("morphisms:\n");
    for (m, s, t) in &morphisms {
        writeln!(out, "  {m}: {s} -> {t}").unwrap();
    }
    out.push_str("compose:\n");
    for (g, f, h) in &compose {
        writeln!(out, "  {g} . {f} = {h}").unwrap();
    }
    out
}

fn lookup_object(c: &FiniteCategory, t: &Token) -> Result<usize, ParseError> {
    c.object_by_label(&t.text).ok_or_else(|| t.error(format!("unknown object `{}`", t.text)))
}

fn lookup_morphism(c: &FiniteCategory, t: &Token) -> Result<usize, ParseError> {
    c.morphism_by_label(&t.text).ok_or_else(|| t.error(format!("unknown morphism `{}`", t.text)))
}

/// Object and morphism assignments with implicit identities; a morphism may
/// be omitted when its hom-set in the codomain has exactly one element.
pub(crate) fn assignments(
    s: &Sections,
    dom: &FiniteCategory,
    cod: &FiniteCategory,
    at: &Token,
) -> Result<(Vec<usize>, Vec<usize>), ParseError> {
    let mut objects = vec![None; dom.object_count()];
    for (a, b) in s.arrows("objects")? {
        let o = lookup_object(dom, a)?;
        if objects[o].replace(lookup_object(cod, b)?).is_some() {
            return Err(a.error(format!("object `{}` assigned twice", a.text)));
        }
    }
    let objects: Vec<usize> = objects
        .into_iter()
        .enumerate()
        .map(|(o, v)| v.ok_or_else(|| at.error(format!("no image given for object `{}`", dom.object_label(o)))))
        .collect::<Result<_, _>>()?;
    let mut morphisms = vec![None; dom.morphism_count()];
    for (a, b) in s.arrows("morphisms")? {
        let m = lookup_morphism(dom, a)?;
        if morphisms[m].replace(lookup_morphism(cod, b)?).is_some() {
            return Err(a.error(format!("morphism `{}` assigned twice", a.text)));
        }
    }
    let morphisms = morphisms
        .into_iter()
        .enumerate()
        .map(|(m, v)| {
            let (s, t) = (objects[dom.source(m)], objects[dom.target(m)]);
            match v {
                Some(v) => Ok(v),
                None if dom.is_identity(m) => Ok(cod.identity(s)),
                None => match cod.hom(s, t) {
                    [only] => Ok(*only),
                    _ => Err(at.error(format!("no image given for morphism `{}`", dom.label(m)))),
                },
            }
        })
        .collect::<Result<_, _>>()?;
    Ok((objects, morphisms))
}

pub(crate) fn functor_from(doc: &Document, r: &Resolver) -> Result<Functor, ParseError> {
    let s = Sections::new(&doc.lines, doc.line, &["domain", "codomain", "objects", "morphisms"])?;
    let dom_t = s.require("domain")?.value()?;
    let cod_t = s.require("codomain")?.value()?;
    let (dom, cod) = (r.category(dom_t)?, r.category(cod_t)?);
    let (objects, morphisms) = assignments(&s, &dom, &cod, dom_t)?;
    Functor::new(dom, cod, objects, morphisms).map_err(|e| s.semantic(e.to_string()))
}

/// Canonical functor document; every object and non-identity morphism is
/// listed.
pub fn print_functor(f: &Functor, domain: &str, codomain: &str) -> String {
    let (d, c) = (f.domain(), f.codomain());
    let mut out = format!("domain: {domain}\ncodomain: {codomain}\nobjects:\n");
    let objects: BTreeMap<&str, &str> = (0..d.object_count()).map(|o| (d.object_label(o), c.object_label(f.object(o)))).collect();
    for (a, b) in objects {
        writeln!(out, "  {a} -> {b}").unwrap();
    }
    out.push_str("morphisms:\n");
    let morphisms: BTreeMap<&str, &str> = d.proper_morphisms().map(|m| (d.label(m), c.label(f.morphism(m)))).collect();
    for (a, b) in morphisms {
        writeln!(out, "  {a} -> {b}").unwrap();
    }
    out
}

pub(crate) fn system_from(doc: &Document, r: &Resolver) -> Result<CategorySystem, ParseError> {
    let s = Sections::new(&doc.lines, doc.line, &["index", "fibers", "transitions"])?;
    let index_t = s.require("index")?.value()?;
    let index = r.category(index_t)?;
    let mut fibers: Vec<Option<(Arc<FiniteCategory>, String)>> = vec![None; index.object_count()];
    for (c, name) in s.arrows("fibers")? {
        let o = lookup_object(&index, c)?;
        if fibers[o].replace((r.category(name)?, name.text.clone())).is_some() {
            return Err(c.error(format!("fiber of `{}` given twice", c.text)));
        }
    }
    let fibers: Vec<(Arc<FiniteCategory>, String)> = fibers
        .into_iter()
        .enumerate()
        .map(|(o, f)| f.ok_or_else(|| index_t.error(format!("no fiber given for `{}`", index.object_label(o)))))
        .collect::<Result<_, _>>()?;
    let mut transitions = vec![None; index.morphism_count()];
    for (a, name) in s.arrows("transitions")? {
        let m = lookup_morphism(&index, a)?;
        if transitions[m].replace(r.functor(name)?).is_some() {
            return Err(a.error(format!("transition of `{}` given twice", a.text)));
        }
    }
    let transitions = transitions
        .into_iter()
        .enumerate()
        .map(|(m, t)| match t {
            Some(t) => Ok(t),
            None => {
                let (src, tgt) = (&fibers[index.source(m)], &fibers[index.target(m)]);
                if index.is_identity(m) || src.1 == tgt.1 {
                    Ok(Functor::identity(&tgt.0))
                } else {
                    Err(index_t.error(format!("no transition given for `{}`", index.label(m))))
                }
            }
        })
        .collect::<Result<_, _>>()?;
    CategorySystem::new(index, fibers.into_iter().map(|f| f.0).collect(), transitions).map_err(|e| s.semantic(e.to_string()))
}

impl Resolver<'_> {
    pub fn main_system(&self, name: Option<&str>) -> Result<CategorySystem, ParseError> {
        system_from(self.bundle.main("system", name)?, self)
    }
}

/// Ranks of objects and of non-identity morphisms in label order, used to
/// name generated documents.
pub(crate) fn ranks(c: &FiniteCategory) -> (Vec<usize>, Vec<usize>) {
    let mut objects: Vec<usize> = (0..c.object_count()).collect();
    objects.sort_by(|&a, &b| c.object_label(a).cmp(c.object_label(b)));
    let mut morphisms: Vec<usize> = c.proper_morphisms().collect();
    morphisms.sort_by(|&a, &b| c.label(a).cmp(c.label(b)));
    let mut object_rank = vec![0; c.object_count()];
    objects.iter().enumerate().for_each(|(r, &o)| object_rank[o] = r);
    let mut morphism_rank = vec![usize::MAX; c.morphism_count()];
    morphisms.iter().enumerate().for_each(|(r, &m)| morphism_rank[m] = r);
    (object_rank, morphism_rank)
}

/// Objects and non-identity morphisms in label order.
pub(crate) fn sorted_cells(c: &FiniteCategory) -> (Vec<usize>, Vec<usize>) {
    let (or, mr) = ranks(c);
    let mut objects: Vec<usize> = (0..c.object_count()).collect();
    objects.sort_by_key(|&o| or[o]);
    let mut morphisms: Vec<usize> = c.proper_morphisms().collect();
    morphisms.sort_by_key(|&m| mr[m]);
    (objects, morphisms)
}

/// A complete bundle for a system: the index category `I`, fibres `F<k>`
/// and transitions `T<k>`, numbered in label order, then the system itself.
pub fn print_system(s: &CategorySystem) -> String {
    let index = s.index();
    let (or, mr) = ranks(index);
    let (objects, morphisms) = sorted_cells(index);
    let mut w = BundleWriter::new();
    w.push("category", "I", &print_category(index));
    for &c in &objects {
        w.push("category", &format!("F{}", or[c]), &print_category(s.fiber(c)));
    }
    for &m in &morphisms {
        let (src, tgt) = (or[index.source(m)], or[index.target(m)]);
        w.push("functor", &format!("T{}", mr[m]), &print_functor(s.transition(m), &format!("F{tgt}"), &format!("F{src}")));
    }
    let mut body = String::from("index: I\nfibers:\n");
    for &c in &objects {
        writeln!(body, "  {} -> F{}", index.object_label(c), or[c]).unwrap();
    }
    body.push_str("transitions:\n");
    for &m in &morphisms {
        writeln!(body, "  {} -> T{}", index.label(m), mr[m]).unwrap();
    }
    w.push("system", "S", &body);
    w.finish()
}
