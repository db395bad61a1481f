use std::collections::{BTreeMap, HashMap};
use std::fmt::Write;
use std::sync::Arc;

use super::bundle::{Document, Resolver};
use super::syntax::{Sections, Token};
use super::ParseError;
use crate::sset::{parse_word, word_to_surjection, FiniteSimplicialSet, Simplex, SimplicialMap};

/// Resolves `word·label` (or a bare label) against a simplicial set.
pub(crate) fn parse_simplex(
    t: &Token,
    lookup: &dyn Fn(&str) -> Option<(usize, usize)>,
) -> Result<Simplex, ParseError> {
    let (word_text, label, offset) = match t.text.split_once('·') {
        Some((w, l)) => (w, l, w.chars().count() + 1),
        None => ("", t.text.as_str(), 0),
    };
    let word = parse_word(word_text).ok_or_else(|| t.error(format!("malformed degeneracy word `{word_text}`")))?;
    let (dim, base) = lookup(label).ok_or_else(|| {
        let (line, column) = t.at(offset);
        ParseError::new(line, column, format!("unknown simplex `{label}`"))
    })?;
    let degeneracy =
        word_to_surjection(&word, dim).ok_or_else(|| t.error(format!("degeneracy word `{word_text}` is not normalized")))?;
    Ok(Simplex { base_dim: dim, base, degeneracy })
}

fn face_key(t: &Token) -> Option<(usize, &str)> {
    let rest = t.text.strip_prefix("d_")?;
    let open = rest.find('(')?;
    let i = rest[..open].parse().ok()?;
    let label = rest[open + 1..].strip_suffix(')')?;
    Some((i, label))
}

pub(crate) fn sset_from(doc: &Document) -> Result<FiniteSimplicialSet, ParseError> {
    let s = Sections::new(&doc.lines, doc.line, &["window", "dim "])?;
    let mut blocks: BTreeMap<usize, &super::syntax::Section> = BTreeMap::new();
    for sec in &s.list {
        if let Some(n) = sec.key.strip_prefix("dim ") {
            let n: usize = n.trim().parse().map_err(|_| sec.error(format!("bad dimension in `{}`", sec.key)))?;
            blocks.insert(n, sec);
        }
    }
    let window = match s.get("window") {
        Some(w) => w.value()?.number()?,
        None => blocks.keys().next_back().copied().unwrap_or(0),
    };
    if let Some((&n, sec)) = blocks.iter().find(|(&n, _)| n > window) {
        return Err(sec.error(format!("dimension {n} lies above the window {window}")));
    }
    let mut labels = vec![Vec::new(); window + 1];
    let mut index: HashMap<String, (usize, usize)> = HashMap::new();
    for (&n, sec) in &blocks {
        for t in &sec.rest {
            if index.insert(t.text.clone(), (n, labels[n].len())).is_some() {
                return Err(t.error(format!("duplicate simplex label `{}`", t.text)));
            }
            labels[n].push(t.text.clone());
        }
    }
    let lookup = |l: &str| index.get(l).copied();
    let mut faces: Vec<Vec<Vec<Option<Simplex>>>> = labels.iter().enumerate().map(|(n, l)| vec![vec![None; if n == 0 { 0 } else { n + 1 }]; l.len()]).collect();
    for (&n, sec) in &blocks {
        for item in &sec.items {
            let [key, eq, value] = item.as_slice() else {
                return Err(item[0].error("expected `d_i(x) = word·y`"));
            };
            if eq.text != "=" {
                return Err(eq.error("expected `=`"));
            }
            let (i, label) = face_key(key).ok_or_else(|| key.error(format!("malformed face `{}`", key.text)))?;
            let (dim, x) = lookup(label).ok_or_else(|| key.error(format!("unknown simplex `{label}`")))?;
            if dim != n {
                return Err(key.error(format!("`{label}` is not listed in dimension {n}")));
            }
            if n == 0 || i > n {
                return Err(key.error(format!("`{label}` has no face d_{i}")));
            }
            let f = parse_simplex(value, &lookup)?;
            if f.dim() != n - 1 {
                return Err(value.error(format!("d_{i}({label}) must have dimension {}", n - 1)));
            }
            if faces[n][x][i].replace(f).is_some() {
                return Err(key.error(format!("d_{i}({label}) given twice")));
            }
        }
    }
    let mut full = Vec::with_capacity(window + 1);
    for (n, dim) in faces.into_iter().enumerate() {
        let mut out = Vec::with_capacity(dim.len());
        for (x, fs) in dim.into_iter().enumerate() {
            let fs: Option<Vec<Simplex>> = fs.into_iter().collect();
            let at = blocks[&n].rest[x].clone();
            out.push(fs.ok_or_else(|| at.error(format!("some face of `{}` is missing", at.text)))?);
        }
        full.push(out);
    }
    FiniteSimplicialSet::new(window, labels, full).map_err(|e| s.semantic(e.to_string()))
}

/// A document without a `window:` line lists every nondegenerate simplex,
/// so it may be re-windowed upwards; a declared window marks a truncation.
pub(crate) fn declares_window(doc: &Document) -> bool {
    doc.lines.iter().any(|(_, l)| l.starts_with("window:"))
}

/// Parses a single simplicial-set document.
pub fn parse_sset(text: &str) -> Result<FiniteSimplicialSet, ParseError> {
    sset_from(&Document::anonymous(text))
}

fn sorted(x: &FiniteSimplicialSet, n: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..x.count(n)).collect();
    order.sort_by(|&a, &b| x.label(n, a).cmp(x.label(n, b)));
    order
}

/// Canonical form: simplices sorted by label within each dimension, faces
/// listed in the same order.
pub fn print_sset(x: &FiniteSimplicialSet) -> String {
    let mut out = format!("window: {}\n", x.window());
    for n in 0..=x.window() {
        let order = sorted(x, n);
        write!(out, "dim {n}:").unwrap();
        for &i in &order {
            write!(out, " {}", x.label(n, i)).unwrap();
        }
        out.push('\n');
        if n == 0 {
            continue;
        }
        for &i in &order {
            for k in 0..=n {
                writeln!(out, "  d_{k}({}) = {}", x.label(n, i), x.display(x.nondegenerate_face(n, i, k))).unwrap();
            }
        }
    }
    out
}

pub(crate) fn map_from(doc: &Document, r: &Resolver) -> Result<SimplicialMap, ParseError> {
    let s = Sections::new(&doc.lines, doc.line, &["domain", "codomain", "images"])?;
    let dom_t = s.require("domain")?.value()?;
    let cod_t = s.require("codomain")?.value()?;
    let (dom, mut cod) = (r.sset(dom_t)?, r.sset(cod_t)?);
    if dom.window() > cod.window() && r.is_complete(cod_t)? {
        cod = Arc::new(cod.with_window(dom.window()));
    }
    let mut images: Vec<Vec<Option<Simplex>>> = (0..=dom.window()).map(|n| vec![None; dom.count(n)]).collect();
    let lookup = |l: &str| cod.lookup(l);
    for (a, b) in s.arrows("images")? {
        let (n, x) = dom.lookup(&a.text).ok_or_else(|| a.error(format!("unknown simplex `{}`", a.text)))?;
        let im = parse_simplex(b, &lookup)?;
        if im.dim() != n {
            return Err(b.error(format!("the image of `{}` must have dimension {n}", a.text)));
        }
        if images[n][x].replace(im).is_some() {
            return Err(a.error(format!("image of `{}` given twice", a.text)));
        }
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(n, dim)| {
            dim.into_iter()
                .enumerate()
                .map(|(x, im)| im.ok_or_else(|| dom_t.error(format!("no image given for `{}`", dom.label(n, x)))))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    SimplicialMap::new(dom, cod, images).map_err(|e| s.semantic(e.to_string()))
}

/// Canonical map document, images sorted by dimension then label.
pub fn print_map(f: &SimplicialMap, domain: &str, codomain: &str) -> String {
    let (d, c) = (f.domain(), f.codomain());
    let mut out = format!("domain: {domain}\ncodomain: {codomain}\nimages:\n");
    for n in 0..=d.window() {
        for x in sorted(d, n) {
            writeln!(out, "  {} -> {}", d.label(n, x), c.display(f.image(n, x))).unwrap();
        }
    }
    out
}
