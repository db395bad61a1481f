use std::collections::HashMap;

use serde::Serialize;

use super::GroupoidError;

/// Groupoid data as named lists, the form read from documents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RawGroupoid {
    pub objects: Vec<String>,
    pub basepoint: String,
    /// `(r, t, elements of G(r, t))`; missing pairs are empty
    pub elements: Vec<(String, String, Vec<String>)>,
    /// `(x, y, x ∘ y)`
    pub compose: Vec<(String, String, String)>,
    /// `(r, e_r)`
    pub identities: Vec<(String, String)>,
}

/// A validated discrete homotopy groupoid indexed by `objects`.
///
/// Elements are referred to by `(r, t, x)` with `x` an index into
/// `G(r, t)`. Element names are unique across all hom-sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidData {
    objects: Vec<String>,
    basepoint: usize,
    elements: Vec<Vec<Vec<String>>>,
    // compose[r][s][t][x][y] = x ∘ y for x ∈ G(r,s), y ∈ G(s,t)
    compose: Vec<Vec<Vec<Vec<Vec<usize>>>>>,
    identities: Vec<usize>,
}

impl GroupoidData {
    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn basepoint(&self) -> usize {
        self.basepoint
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn hom(&self, r: usize, t: usize) -> &[String] {
        &self.elements[r][t]
    }

    pub fn hom_size(&self, r: usize, t: usize) -> usize {
        self.elements[r][t].len()
    }

    pub fn identity(&self, r: usize) -> usize {
        self.identities[r]
    }

    /// `x ∘ y` for `x ∈ G(r, s)`, `y ∈ G(s, t)`.
    pub fn compose(&self, r: usize, s: usize, t: usize, x: usize, y: usize) -> usize {
        self.compose[r][s][t][x][y]
    }

    /// Every hom-set is non-empty.
    pub fn is_connected(&self) -> bool {
        self.elements.iter().all(|row| row.iter().all(|h| !h.is_empty()))
    }

    /// The restriction to a subset of objects, listed by index. The
    /// basepoint is kept when it lies in the subset and is otherwise the
    /// first listed object.
    pub fn restrict(&self, subset: &[usize]) -> Result<GroupoidData, GroupoidError> {
        if subset.is_empty() {
            return Err(GroupoidError::Precondition("the object subset is empty".into()));
        }
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != subset.len() || sorted.iter().any(|&o| o >= self.object_count()) {
            return Err(GroupoidError::Precondition("the object subset has repeats or unknown objects".into()));
        }
        let basepoint = subset.iter().position(|&o| o == self.basepoint).unwrap_or(0);
        Ok(GroupoidData {
            objects: subset.iter().map(|&o| self.objects[o].clone()).collect(),
            basepoint,
            elements: subset.iter().map(|&r| subset.iter().map(|&t| self.elements[r][t].clone()).collect()).collect(),
            compose: subset
                .iter()
                .map(|&r| {
                    subset
                        .iter()
                        .map(|&s| subset.iter().map(|&t| self.compose[r][s][t].clone()).collect())
                        .collect()
                })
                .collect(),
            identities: subset.iter().map(|&r| self.identities[r]).collect(),
        })
    }

    /// The same data with another basepoint.
    pub fn with_basepoint(&self, basepoint: usize) -> GroupoidData {
        assert!(basepoint < self.object_count());
        GroupoidData { basepoint, ..self.clone() }
    }

    pub fn to_raw(&self) -> RawGroupoid {
        let n = self.object_count();
        let mut raw = RawGroupoid {
            objects: self.objects.clone(),
            basepoint: self.objects[self.basepoint].clone(),
            ..Default::default()
        };
        for r in 0..n {
            for t in 0..n {
                if !self.elements[r][t].is_empty() {
                    raw.elements.push((self.objects[r].clone(), self.objects[t].clone(), self.elements[r][t].clone()));
                }
            }
            raw.identities.push((self.objects[r].clone(), self.elements[r][r][self.identities[r]].clone()));
        }
        for r in 0..n {
            for s in 0..n {
                for t in 0..n {
                    for (x, xn) in self.elements[r][s].iter().enumerate() {
                        for (y, yn) in self.elements[s][t].iter().enumerate() {
                            let z = &self.elements[r][t][self.compose[r][s][t][x][y]];
                            raw.compose.push((xn.clone(), yn.clone(), z.clone()));
                        }
                    }
                }
            }
        }
        raw
    }
}

/// Resolves names and checks associativity, the unit laws and, for every
/// `x ∈ G(r, s)`, bijectivity of `y ↦ x ∘ y : G(s, t) → G(r, t)`.
pub fn validate_groupoid(raw: &RawGroupoid) -> Result<GroupoidData, GroupoidError> {
    let data = |m: String| GroupoidError::Data(m);
    let n = raw.objects.len();
    if n == 0 {
        return Err(data("a groupoid needs at least one object".into()));
    }
    let mut object_index = HashMap::new();
    for (i, o) in raw.objects.iter().enumerate() {
        if object_index.insert(o.as_str(), i).is_some() {
            return Err(data(format!("object `{o}` listed twice")));
        }
    }
    let object = |name: &str| object_index.get(name).copied().ok_or_else(|| data(format!("unknown object `{name}`")));
    let basepoint = object(&raw.basepoint)?;
    let mut elements = vec![vec![Vec::<String>::new(); n]; n];
    let mut element_index: HashMap<&str, (usize, usize, usize)> = HashMap::new();
    for (r, t, xs) in &raw.elements {
        let (r, t) = (object(r)?, object(t)?);
        if !elements[r][t].is_empty() {
            return Err(data(format!("hom-set G({}, {}) listed twice", raw.objects[r], raw.objects[t])));
        }
        for (i, x) in xs.iter().enumerate() {
            if element_index.insert(x.as_str(), (r, t, i)).is_some() {
                return Err(data(format!("element `{x}` listed twice")));
            }
        }
        elements[r][t] = xs.clone();
    }
    let element = |name: &str| element_index.get(name).copied().ok_or_else(|| data(format!("unknown element `{name}`")));
    let mut identities = vec![None; n];
    for (r, e) in &raw.identities {
        let r = object(r)?;
        let (a, b, i) = element(e)?;
        if (a, b) != (r, r) {
            return Err(data(format!("identity `{e}` of `{}` is not an endomorphism of it", raw.objects[r])));
        }
        if identities[r].replace(i).is_some() {
            return Err(data(format!("two identities given for `{}`", raw.objects[r])));
        }
    }
    let identities: Vec<usize> = identities
        .into_iter()
        .enumerate()
        .map(|(r, e)| e.ok_or_else(|| data(format!("no identity given for `{}`", raw.objects[r]))))
        .collect::<Result<_, _>>()?;
    let mut compose: Vec<Vec<Vec<Vec<Vec<Option<usize>>>>>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|s| (0..n).map(|t| vec![vec![None; elements[s][t].len()]; elements[r][s].len()]).collect())
                .collect()
        })
        .collect();
    for (x, y, z) in &raw.compose {
        let ((r, s, xi), (s2, t, yi), (r2, t2, zi)) = (element(x)?, element(y)?, element(z)?);
        if s != s2 {
            return Err(data(format!("`{x} * {y}` is not composable")));
        }
        if (r2, t2) != (r, t) {
            return Err(data(format!("`{x} * {y} = {z}` lands in the wrong hom-set")));
        }
        match compose[r][s][t][xi][yi] {
            Some(old) if old != zi => return Err(data(format!("`{x} * {y}` given two values"))),
            _ => compose[r][s][t][xi][yi] = Some(zi),
        }
    }
    let mut table = vec![vec![vec![Vec::new(); n]; n]; n];
    for r in 0..n {
        for s in 0..n {
            for t in 0..n {
                let mut block = Vec::with_capacity(elements[r][s].len());
                for (xi, row) in compose[r][s][t].iter().enumerate() {
                    let mut out = Vec::with_capacity(row.len());
                    for (yi, z) in row.iter().enumerate() {
                        out.push(z.ok_or_else(|| {
                            data(format!("composite `{} * {}` is missing", elements[r][s][xi], elements[s][t][yi]))
                        })?);
                    }
                    block.push(out);
                }
                table[r][s][t] = block;
            }
        }
    }
    let g = GroupoidData { objects: raw.objects.clone(), basepoint, elements, compose: table, identities };
    check_laws(&g)?;
    Ok(g)
}

fn check_laws(g: &GroupoidData) -> Result<(), GroupoidError> {
    let n = g.object_count();
    let name = |r: usize, t: usize, x: usize| g.elements[r][t][x].as_str();
    let hom_name = |r: usize, t: usize| format!("G({}, {})", g.objects[r], g.objects[t]);
    for r in 0..n {
        for s in 0..n {
            let e_r = g.identities[r];
            let e_s = g.identities[s];
            for x in 0..g.hom_size(r, s) {
                if g.compose(r, r, s, e_r, x) != x {
                    return Err(GroupoidError::Unit(format!("{} * {} != {}", name(r, r, e_r), name(r, s, x), name(r, s, x))));
                }
                if g.compose(r, s, s, x, e_s) != x {
                    return Err(GroupoidError::Unit(format!("{} * {} != {}", name(r, s, x), name(s, s, e_s), name(r, s, x))));
                }
            }
        }
    }
    for r in 0..n {
        for s in 0..n {
            for t in 0..n {
                for v in 0..n {
                    for x in 0..g.hom_size(r, s) {
                        for y in 0..g.hom_size(s, t) {
                            let xy = g.compose(r, s, t, x, y);
                            for z in 0..g.hom_size(t, v) {
                                let yz = g.compose(s, t, v, y, z);
                                if g.compose(r, t, v, xy, z) != g.compose(r, s, v, x, yz) {
                                    return Err(GroupoidError::Associativity(
                                        name(r, s, x).into(),
                                        name(s, t, y).into(),
                                        name(t, v, z).into(),
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    for r in 0..n {
        for s in 0..n {
            for t in 0..n {
                for x in 0..g.hom_size(r, s) {
                    let mut hit = vec![false; g.hom_size(r, t)];
                    for y in 0..g.hom_size(s, t) {
                        hit[g.compose(r, s, t, x, y)] = true;
                    }
                    if g.hom_size(s, t) != g.hom_size(r, t) || hit.iter().any(|h| !h) {
                        return Err(GroupoidError::Bijectivity {
                            x: name(r, s, x).into(),
                            from: hom_name(s, t),
                            to: hom_name(r, t),
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// One-object data from a multiplication table, `table[x][y] = x·y`. The
/// unit is found from the table.
pub fn from_group(elements: &[&str], table: &[Vec<usize>]) -> Result<GroupoidData, GroupoidError> {
    let k = elements.len();
    if k == 0 || table.len() != k || table.iter().any(|row| row.len() != k || row.iter().any(|&z| z >= k)) {
        return Err(GroupoidError::Data(format!("a multiplication table on {k} elements must be {k} × {k}")));
    }
    let unit = (0..k)
        .find(|&e| (0..k).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| GroupoidError::Unit("the table has no two-sided unit".into()))?;
    let names: Vec<String> = elements.iter().map(|s| s.to_string()).collect();
    let raw = RawGroupoid {
        objects: vec!["*".into()],
        basepoint: "*".into(),
        elements: vec![("*".into(), "*".into(), names.clone())],
        compose: (0..k)
            .flat_map(|x| (0..k).map(move |y| (x, y)))
            .map(|(x, y)| (names[x].clone(), names[y].clone(), names[table[x][y]].clone()))
            .collect(),
        identities: vec![("*".into(), names[unit].clone())],
    };
    validate_groupoid(&raw)
}
