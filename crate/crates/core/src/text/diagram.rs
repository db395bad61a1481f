use std::collections::BTreeMap;
use std::fmt::Write;
use std::sync::Arc;

use super::bundle::{BundleWriter, Document, Resolver};
use super::category::{print_category, ranks, sorted_cells};
use super::sset::{print_map, print_sset};
use super::syntax::{Sections, Token};
use super::ParseError;
use crate::diagram::{AugmentedDiagram, CatValuedFunctor, SpaceDiagram, Variance};
use crate::fincat::{FiniteCategory, Functor, NaturalTransformation};
use crate::sset::{standard_simplex, FiniteSimplicialSet, SimplexCategory, SimplicialMap};

fn variance_of(t: &Token) -> Result<Variance, ParseError> {
    match t.text.as_str() {
        "covariant" => Ok(Variance::Covariant),
        "contravariant" => Ok(Variance::Contravariant),
        other => Err(t.error(format!("variance must be `covariant` or `contravariant`, found `{other}`"))),
    }
}

/// Values by object and maps by morphism; identity maps may be omitted.
fn values_and_maps(
    s: &Sections,
    r: &Resolver,
    index: &FiniteCategory,
    at: &Token,
) -> Result<(Vec<Arc<FiniteSimplicialSet>>, Vec<SimplicialMap>), ParseError> {
    let mut values = vec![None; index.object_count()];
    for (c, name) in s.arrows("values")? {
        let o = index.object_by_label(&c.text).ok_or_else(|| c.error(format!("unknown object `{}`", c.text)))?;
        if values[o].replace(r.sset(name)?).is_some() {
            return Err(c.error(format!("value of `{}` given twice", c.text)));
        }
    }
    let values: Vec<Arc<FiniteSimplicialSet>> = values
        .into_iter()
        .enumerate()
        .map(|(o, v)| v.ok_or_else(|| at.error(format!("no value given for `{}`", index.object_label(o)))))
        .collect::<Result<_, _>>()?;
    let mut maps = vec![None; index.morphism_count()];
    for (a, name) in s.arrows("maps")? {
        let m = index.morphism_by_label(&a.text).ok_or_else(|| a.error(format!("unknown morphism `{}`", a.text)))?;
        if maps[m].replace(r.map(name)?).is_some() {
            return Err(a.error(format!("map of `{}` given twice", a.text)));
        }
    }
    let maps = maps
        .into_iter()
        .enumerate()
        .map(|(m, f)| match f {
            Some(f) => Ok(f),
            None if index.is_identity(m) => Ok(SimplicialMap::identity(&values[index.source(m)])),
            None => Err(at.error(format!("no map given for `{}`", index.label(m)))),
        })
        .collect::<Result<_, _>>()?;
    Ok((values, maps))
}

pub(crate) fn diagram_from(doc: &Document, r: &Resolver) -> Result<SpaceDiagram, ParseError> {
    let s = Sections::new(&doc.lines, doc.line, &["index", "variance", "window", "values", "maps"])?;
    let index_t = s.require("index")?.value()?;
    let index = r.category(index_t)?;
    let variance = match s.get("variance") {
        Some(v) => variance_of(v.value()?)?,
        None => Variance::Covariant,
    };
    let (values, maps) = values_and_maps(&s, r, &index, index_t)?;
    let window = match s.get("window") {
        Some(w) => w.value()?.number()?,
        None => values.iter().map(|v| v.window()).min().unwrap_or(0),
    };
    let values: Vec<Arc<FiniteSimplicialSet>> = values.iter().map(|v| Arc::new(v.truncate(window.min(v.window())))).collect();
    let maps = maps
        .iter()
        .map(|f| restrict_map(f, window))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| s.semantic(e.to_string()))?;
    SpaceDiagram::new(index, values, maps, variance, window).map_err(|e| s.semantic(e.to_string()))
}

fn restrict_map(f: &SimplicialMap, window: usize) -> Result<SimplicialMap, crate::sset::SimplicialError> {
    if f.domain().window() == window && f.codomain().window() == window {
        return Ok(f.clone());
    }
    let dom = Arc::new(f.domain().truncate(window));
    let cod = Arc::new(f.codomain().truncate(window));
    SimplicialMap::new(dom, cod, f.images()[..=window.min(f.domain().window())].to_vec())
}

impl Resolver<'_> {
    pub fn main_diagram(&self, name: Option<&str>) -> Result<SpaceDiagram, ParseError> {
        diagram_from(self.bundle.main("diagram", name)?, self)
    }
}

/// A complete bundle for a diagram: the index `I`, values `X<k>` and maps
/// `f<k>`, numbered in label order.
pub fn print_diagram(d: &SpaceDiagram) -> String {
    let index = d.index();
    let (or, mr) = ranks(index);
    let (objects, morphisms) = sorted_cells(index);
    let mut w = BundleWriter::new();
    w.push("category", "I", &print_category(index));
    for &o in &objects {
        w.push("sset", &format!("X{}", or[o]), &print_sset(d.value(o)));
    }
    for &m in &morphisms {
        let (from, to) = d.ends(m);
        w.push("map", &format!("f{}", mr[m]), &print_map(d.map(m), &format!("X{}", or[from]), &format!("X{}", or[to])));
    }
    let variance = match d.variance() {
        Variance::Covariant => "covariant",
        Variance::Contravariant => "contravariant",
    };
    let mut body = format!("index: I\nvariance: {variance}\nwindow: {}\nvalues:\n", d.window());
    for &o in &objects {
        writeln!(body, "  {} -> X{}", index.object_label(o), or[o]).unwrap();
    }
    body.push_str("maps:\n");
    for &m in &morphisms {
        writeln!(body, "  {} -> f{}", index.label(m), mr[m]).unwrap();
    }
    w.push("diagram", "D", &body);
    w.finish()
}

/// A functor from the simplex category of a space into a finite category.
///
/// Objects not listed go to `default`. A morphism not listed goes to the
/// identity when its ends agree and otherwise to the unique morphism
/// between them, if there is exactly one.
pub(crate) fn simplex_functor_from(doc: &Document, r: &Resolver) -> Result<CatValuedFunctor, ParseError> {
    let s = Sections::new(&doc.lines, doc.line, &["space", "window", "target", "default", "objects", "morphisms"])?;
    let space_t = s.require("space")?.value()?;
    let space = r.sset(space_t)?;
    let window = match s.get("window") {
        Some(w) => w.value()?.number()?,
        None => space.window(),
    };
    let target = r.category(s.require("target")?.value()?)?;
    let sc = Arc::new(SimplexCategory::new(&space, window).map_err(|e| space_t.error(e.to_string()))?);
    let functor = functor_on(&s, &sc.category, &target, space_t)?;
    CatValuedFunctor::new(sc, functor).map_err(|e| s.semantic(e.to_string()))
}

fn functor_on(s: &Sections, dom: &Arc<FiniteCategory>, target: &Arc<FiniteCategory>, at: &Token) -> Result<Functor, ParseError> {
    let default = match s.get("default") {
        Some(d) => {
            let t = d.value()?;
            Some(target.object_by_label(&t.text).ok_or_else(|| t.error(format!("unknown object `{}`", t.text)))?)
        }
        None => None,
    };
    let mut objects = vec![default; dom.object_count()];
    for (a, b) in s.arrows("objects")? {
        let o = dom.object_by_label(&a.text).ok_or_else(|| a.error(format!("unknown simplex `{}`", a.text)))?;
        objects[o] = Some(target.object_by_label(&b.text).ok_or_else(|| b.error(format!("unknown object `{}`", b.text)))?);
    }
    let objects: Vec<usize> = objects
        .into_iter()
        .enumerate()
        .map(|(o, v)| v.ok_or_else(|| at.error(format!("no object given for `{}` and no default", dom.object_label(o)))))
        .collect::<Result<_, _>>()?;
    let mut morphisms = vec![None; dom.morphism_count()];
    for (a, b) in s.arrows("morphisms")? {
        let m = dom.morphism_by_label(&a.text).ok_or_else(|| a.error(format!("unknown morphism `{}`", a.text)))?;
        morphisms[m] = Some(target.morphism_by_label(&b.text).ok_or_else(|| b.error(format!("unknown morphism `{}`", b.text)))?);
    }
    let morphisms = morphisms
        .into_iter()
        .enumerate()
        .map(|(m, v)| fill(v, target, objects[dom.source(m)], objects[dom.target(m)], || at.error(format!("no image given for `{}`", dom.label(m)))))
        .collect::<Result<_, _>>()?;
    Functor::new(dom.clone(), target.clone(), objects, morphisms).map_err(|e| s.semantic(e.to_string()))
}

fn fill(
    given: Option<usize>,
    target: &FiniteCategory,
    from: usize,
    to: usize,
    err: impl FnOnce() -> ParseError,
) -> Result<usize, ParseError> {
    match given {
        Some(m) => Ok(m),
        None if from == to => Ok(target.identity(from)),
        None => match target.hom(from, to) {
            [only] => Ok(*only),
            _ => Err(err()),
        },
    }
}

/// Components of a transformation between two functors on a simplex
/// category, keyed by simplex; omitted components are filled as for
/// [`simplex_functor_from`].
pub(crate) fn components_from(
    doc: &Document,
    source: &Functor,
    target: &Functor,
) -> Result<NaturalTransformation, ParseError> {
    let s = Sections::new(&doc.lines, doc.line, &["components"])?;
    let dom = source.domain();
    let cod = source.codomain();
    let mut comps = vec![None; dom.object_count()];
    for (a, b) in s.arrows("components")? {
        let o = dom.object_by_label(&a.text).ok_or_else(|| a.error(format!("unknown simplex `{}`", a.text)))?;
        comps[o] = Some(cod.morphism_by_label(&b.text).ok_or_else(|| b.error(format!("unknown morphism `{}`", b.text)))?);
    }
    let at = ParseError::new(doc.line, 1, "");
    let comps = comps
        .into_iter()
        .enumerate()
        .map(|(o, c)| {
            fill(c, cod, source.object(o), target.object(o), || ParseError {
                message: format!("no component given for `{}`", dom.object_label(o)),
                ..at.clone()
            })
        })
        .collect::<Result<_, _>>()?;
    NaturalTransformation::new(source.clone(), target.clone(), comps).map_err(|e| s.semantic(e.to_string()))
}

impl Resolver<'_> {
    pub fn simplex_functor(&self, name: &str) -> Result<CatValuedFunctor, ParseError> {
        let doc = self.bundle.find("simplex-functor", name).ok_or_else(|| ParseError::new(1, 1, format!("no simplex-functor named `{name}`")))?;
        simplex_functor_from(doc, self)
    }

    pub fn transformation(&self, name: &str, source: &Functor, target: &Functor) -> Result<NaturalTransformation, ParseError> {
        let doc = self.bundle.find("transformation", name).ok_or_else(|| ParseError::new(1, 1, format!("no transformation named `{name}`")))?;
        components_from(doc, source, target)
    }
}

/// Canonical simplex-functor document, listing every object and every
/// non-identity morphism.
pub fn print_simplex_functor(f: &CatValuedFunctor, space: &str, target: &str) -> String {
    let sc = &f.simplex_category;
    let (d, t) = (&sc.category, f.target());
    let mut out = format!("space: {space}\nwindow: {}\ntarget: {target}\nobjects:\n", sc.window);
    let objects: BTreeMap<&str, &str> = (0..d.object_count()).map(|o| (d.object_label(o), t.object_label(f.functor.object(o)))).collect();
    for (a, b) in objects {
        writeln!(out, "  {a} -> {b}").unwrap();
    }
    out.push_str("morphisms:\n");
    let morphisms: BTreeMap<&str, &str> = d.proper_morphisms().map(|m| (d.label(m), t.label(f.functor.morphism(m)))).collect();
    for (a, b) in morphisms {
        writeln!(out, "  {a} -> {b}").unwrap();
    }
    out
}

pub(crate) fn augmented_from(doc: &Document, r: &Resolver) -> Result<AugmentedDiagram, ParseError> {
    let s = Sections::new(&doc.lines, doc.line, &["base", "window", "values", "augmentation", "maps"])?;
    let base_t = s.require("base")?.value()?;
    let base = r.sset(base_t)?;
    let window = match s.get("window") {
        Some(w) => w.value()?.number()?,
        None => base.window(),
    };
    let sc = Arc::new(SimplexCategory::new(&base, window).map_err(|e| base_t.error(e.to_string()))?);
    let (values, maps) = values_and_maps(&s, r, &sc.category, base_t)?;
    let mut aug = vec![None; sc.category.object_count()];
    for (a, name) in s.arrows("augmentation")? {
        let o = sc.category.object_by_label(&a.text).ok_or_else(|| a.error(format!("unknown simplex `{}`", a.text)))?;
        aug[o] = Some(r.map(name)?);
    }
    let aug = aug
        .into_iter()
        .enumerate()
        .map(|(o, g)| g.ok_or_else(|| base_t.error(format!("no augmentation given for `{}`", sc.category.object_label(o)))))
        .collect::<Result<Vec<_>, _>>()?;
    let diagram = SpaceDiagram::new(sc.category.clone(), values, maps, Variance::Covariant, window).map_err(|e| s.semantic(e.to_string()))?;
    AugmentedDiagram::new(sc, diagram, aug).map_err(|e| s.semantic(e.to_string()))
}

impl Resolver<'_> {
    pub fn main_augmented(&self, name: Option<&str>) -> Result<AugmentedDiagram, ParseError> {
        augmented_from(self.bundle.main("augmented", name)?, self)
    }
}

/// A complete bundle for an augmented diagram over the simplex category of
/// `base`: the base `X`, standard simplices `Delta<n>`, values `P<k>`,
/// augmentations `a<k>` and maps `m<k>` along non-identity morphisms.
pub fn print_augmented(g: &AugmentedDiagram) -> Result<String, ParseError> {
    let sc = &g.simplex_category;
    let c = &sc.category;
    let w = g.diagram.window();
    let mut out = BundleWriter::new();
    out.push("sset", "X", &print_sset(&sc.space));
    let mut dims: Vec<usize> = sc.simplices().iter().map(|s| s.dim()).collect();
    dims.sort_unstable();
    dims.dedup();
    for &n in &dims {
        let delta = standard_simplex(n, w).map_err(|e| ParseError::new(1, 1, e.to_string()))?;
        out.push("sset", &format!("Delta{n}"), &print_sset(&delta));
    }
    let (or, mr) = ranks(c);
    let (objects, morphisms) = sorted_cells(c);
    for &o in &objects {
        out.push("sset", &format!("P{}", or[o]), &print_sset(g.diagram.value(o)));
        let n = sc.simplex(o).dim();
        out.push("map", &format!("a{}", or[o]), &print_map(&g.augmentation[o], &format!("P{}", or[o]), &format!("Delta{n}")));
    }
    for &m in &morphisms {
        let (from, to) = (or[c.source(m)], or[c.target(m)]);
        out.push("map", &format!("m{}", mr[m]), &print_map(g.diagram.map(m), &format!("P{from}"), &format!("P{to}")));
    }
    let mut body = format!("base: X\nwindow: {}\nvalues:\n", sc.window);
    for &o in &objects {
        writeln!(body, "  {} -> P{}", c.object_label(o), or[o]).unwrap();
    }
    body.push_str("augmentation:\n");
    for &o in &objects {
        writeln!(body, "  {} -> a{}", c.object_label(o), or[o]).unwrap();
    }
    body.push_str("maps:\n");
    for &m in &morphisms {
        writeln!(body, "  {} -> m{}", c.label(m), mr[m]).unwrap();
    }
    out.push("augmented", "G", &body);
    Ok(out.finish())
}
