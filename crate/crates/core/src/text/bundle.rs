use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

use super::syntax::{is_comment_or_blank, Sections, Token};
use super::ParseError;
use crate::fincat::{FiniteCategory, Functor};
use crate::sset::{FiniteSimplicialSet, SimplicialMap};

/// One document of a bundle, with its lines numbered as in the file.
#[derive(Clone, Debug)]
pub struct Document {
    pub kind: String,
    pub name: String,
    /// line of the `---` header, or 1 for an unheaded file
    pub line: usize,
    pub(crate) lines: Vec<(usize, String)>,
}

impl Document {
    pub(crate) fn anonymous(text: &str) -> Document {
        Document { kind: String::new(), name: String::new(), line: 1, lines: numbered(text, 1) }
    }
}

fn numbered(text: &str, first: usize) -> Vec<(usize, String)> {
    text.lines().enumerate().map(|(i, l)| (first + i, l.to_string())).collect()
}

/// A sequence of named documents.
#[derive(Clone, Debug, Default)]
pub struct Bundle {
    documents: Vec<Document>,
}

impl Bundle {
    /// Splits on `--- <kind> <name>` lines. A text without such lines is a
    /// single document with empty kind and name.
    pub fn parse(text: &str) -> Result<Bundle, ParseError> {
        let mut documents: Vec<Document> = Vec::new();
        let mut preamble = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let number = i + 1;
            if let Some(rest) = line.strip_prefix("---") {
                let fields: Vec<&str> = rest.split_whitespace().collect();
                let [kind, name] = fields.as_slice() else {
                    return Err(ParseError::new(number, 4, "a document header reads `--- <kind> <name>`"));
                };
                if let Some(prev) = documents.iter().find(|d| d.kind == *kind && d.name == *name) {
                    return Err(ParseError::new(number, 1, format!("{kind} `{name}` already defined on line {}", prev.line)));
                }
                documents.push(Document { kind: kind.to_string(), name: name.to_string(), line: number, lines: Vec::new() });
            } else if let Some(doc) = documents.last_mut() {
                doc.lines.push((number, line.to_string()));
            } else {
                preamble.push((number, line.to_string()));
            }
        }
        if documents.is_empty() {
            return Ok(Bundle { documents: vec![Document::anonymous(text)] });
        }
        if let Some((number, _)) = preamble.iter().find(|(_, l)| !is_comment_or_blank(l)) {
            return Err(ParseError::new(*number, 1, "text before the first document header"));
        }
        Ok(Bundle { documents })
    }

    pub fn documents(&self) -> &[Document] {
        &self.documents
    }

    pub fn is_single(&self) -> bool {
        self.documents.len() == 1 && self.documents[0].kind.is_empty()
    }

    /// The named document of a kind. An unheaded single document answers
    /// to every kind and name.
    pub fn find(&self, kind: &str, name: &str) -> Option<&Document> {
        if self.is_single() {
            return self.documents.first();
        }
        self.documents.iter().find(|d| d.kind == kind && d.name == name)
    }

    /// The only document of a kind, or the last one when `name` is absent
    /// and several exist.
    pub fn main(&self, kind: &str, name: Option<&str>) -> Result<&Document, ParseError> {
        if self.is_single() {
            return Ok(&self.documents[0]);
        }
        let mut of_kind = self.documents.iter().filter(|d| d.kind == kind);
        match name {
            Some(n) => of_kind.find(|d| d.name == n).ok_or_else(|| ParseError::new(1, 1, format!("no {kind} named `{n}`"))),
            None => of_kind.last().ok_or_else(|| ParseError::new(1, 1, format!("the input has no {kind} document"))),
        }
    }
}

/// Resolves references between the documents of a bundle, parsing each
/// document once.
pub struct Resolver<'b> {
    pub bundle: &'b Bundle,
    categories: RefCell<HashMap<String, Arc<FiniteCategory>>>,
    ssets: RefCell<HashMap<String, Arc<FiniteSimplicialSet>>>,
    maps: RefCell<HashMap<String, SimplicialMap>>,
    functors: RefCell<HashMap<String, Functor>>,
}

impl<'b> Resolver<'b> {
    pub fn new(bundle: &'b Bundle) -> Self {
        Resolver {
            bundle,
            categories: RefCell::default(),
            ssets: RefCell::default(),
            maps: RefCell::default(),
            functors: RefCell::default(),
        }
    }

    fn lookup(&self, kind: &str, name: &Token) -> Result<&'b Document, ParseError> {
        self.bundle.find(kind, &name.text).ok_or_else(|| name.error(format!("no {kind} document named `{}`", name.text)))
    }

    pub(crate) fn category(&self, name: &Token) -> Result<Arc<FiniteCategory>, ParseError> {
        if let Some(c) = self.categories.borrow().get(&name.text) {
            return Ok(c.clone());
        }
        let c = Arc::new(super::category::category_from(self.lookup("category", name)?)?);
        self.categories.borrow_mut().insert(name.text.clone(), c.clone());
        Ok(c)
    }

    pub(crate) fn sset(&self, name: &Token) -> Result<Arc<FiniteSimplicialSet>, ParseError> {
        if let Some(x) = self.ssets.borrow().get(&name.text) {
            return Ok(x.clone());
        }
        let x = Arc::new(super::sset::sset_from(self.lookup("sset", name)?)?);
        self.ssets.borrow_mut().insert(name.text.clone(), x.clone());
        Ok(x)
    }

    pub(crate) fn map(&self, name: &Token) -> Result<SimplicialMap, ParseError> {
        if let Some(f) = self.maps.borrow().get(&name.text) {
            return Ok(f.clone());
        }
        let f = super::sset::map_from(self.lookup("map", name)?, self)?;
        self.maps.borrow_mut().insert(name.text.clone(), f.clone());
        Ok(f)
    }

    pub(crate) fn functor(&self, name: &Token) -> Result<Functor, ParseError> {
        if let Some(f) = self.functors.borrow().get(&name.text) {
            return Ok(f.clone());
        }
        let f = super::category::functor_from(self.lookup("functor", name)?, self)?;
        self.functors.borrow_mut().insert(name.text.clone(), f.clone());
        Ok(f)
    }

    pub(crate) fn is_complete(&self, name: &Token) -> Result<bool, ParseError> {
        Ok(!super::sset::declares_window(self.lookup("sset", name)?))
    }

    /// Whether the main simplicial set lists all of its simplices, that is,
    /// declares no window.
    pub fn main_sset_is_complete(&self, name: Option<&str>) -> Result<bool, ParseError> {
        Ok(!super::sset::declares_window(self.bundle.main("sset", name)?))
    }

    /// Whether both ends of the main map list all of their simplices.
    pub fn main_map_is_complete(&self, name: Option<&str>) -> Result<bool, ParseError> {
        let doc = self.bundle.main("map", name)?;
        let s = Sections::new(&doc.lines, doc.line, &["domain", "codomain", "images"])?;
        Ok(self.is_complete(s.require("domain")?.value()?)? && self.is_complete(s.require("codomain")?.value()?)?)
    }

    /// A top-level document of the bundle by kind, resolved.
    pub fn main_sset(&self, name: Option<&str>) -> Result<Arc<FiniteSimplicialSet>, ParseError> {
        let doc = self.bundle.main("sset", name)?;
        Ok(Arc::new(super::sset::sset_from(doc)?))
    }

    pub fn main_category(&self, name: Option<&str>) -> Result<Arc<FiniteCategory>, ParseError> {
        let doc = self.bundle.main("category", name)?;
        Ok(Arc::new(super::category::category_from(doc)?))
    }

    pub fn main_map(&self, name: Option<&str>) -> Result<SimplicialMap, ParseError> {
        super::sset::map_from(self.bundle.main("map", name)?, self)
    }

    pub fn main_functor(&self, name: Option<&str>) -> Result<Functor, ParseError> {
        super::category::functor_from(self.bundle.main("functor", name)?, self)
    }

    pub fn named_functor(&self, name: &str) -> Result<Functor, ParseError> {
        self.functor(&Token { text: name.into(), line: 1, column: 1 })
    }

    pub fn named_map(&self, name: &str) -> Result<SimplicialMap, ParseError> {
        self.map(&Token { text: name.into(), line: 1, column: 1 })
    }

    pub fn named_sset(&self, name: &str) -> Result<Arc<FiniteSimplicialSet>, ParseError> {
        self.sset(&Token { text: name.into(), line: 1, column: 1 })
    }

    pub fn named_category(&self, name: &str) -> Result<Arc<FiniteCategory>, ParseError> {
        self.category(&Token { text: name.into(), line: 1, column: 1 })
    }
}

/// Accumulates documents into bundle text.
#[derive(Clone, Debug, Default)]
pub struct BundleWriter {
    out: String,
}

impl BundleWriter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, kind: &str, name: &str, body: &str) -> &mut Self {
        self.out.push_str(&format!("--- {kind} {name}\n"));
        self.out.push_str(body);
        if !body.ends_with('\n') {
            self.out.push('\n');
        }
        self
    }

    pub fn finish(self) -> String {
        self.out
    }
}
