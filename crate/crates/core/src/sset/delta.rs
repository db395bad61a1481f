use std::fmt;

/// A monotone map `[m] → [n]`, stored as its list of values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeltaMap {
    target: usize,
    values: Vec<usize>,
}

impl fmt::Debug for DeltaMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}->[{}]", self.values, self.target)
    }
}

impl DeltaMap {
    /// # Panics
    /// If `values` is empty, not monotone or leaves `[target]`.
    pub fn new(target: usize, values: Vec<usize>) -> Self {
        assert!(!values.is_empty(), "a map out of [m] has m+1 values");
        assert!(values.windows(2).all(|w| w[0] <= w[1]), "map is not monotone");
        assert!(*values.last().unwrap() <= target, "value outside the target");
        DeltaMap { target, values }
    }

    pub fn identity(n: usize) -> Self {
        DeltaMap { target: n, values: (0..=n).collect() }
    }

    /// The coface `d^i : [n-1] → [n]` missing `i`.
    pub fn face(n: usize, i: usize) -> Self {
        assert!(n >= 1 && i <= n);
        DeltaMap { target: n, values: (0..=n).filter(|&j| j != i).collect() }
    }

    /// The codegeneracy `s^i : [n+1] → [n]` hitting `i` twice.
    pub fn degeneracy(n: usize, i: usize) -> Self {
        assert!(i <= n);
        DeltaMap { target: n, values: (0..=n + 1).map(|j| if j <= i { j } else { j - 1 }).collect() }
    }

    pub fn source(&self) -> usize {
        self.values.len() - 1
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn at(&self, i: usize) -> usize {
        self.values[i]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &DeltaMap) -> DeltaMap {
        assert_eq!(first.target, self.source(), "maps are not composable");
        DeltaMap { target: self.target, values: first.values.iter().map(|&v| self.values[v]).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.source() == self.target && self.is_injective()
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.values[0] == 0
            && *self.values.last().unwrap() == self.target
            && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// The epi-mono factorization `self = mono ∘ epi`.
    pub fn factor(&self) -> (DeltaMap, DeltaMap) {
        let mut image = self.values.clone();
        image.dedup();
        let k = image.len() - 1;
        let mut epi = Vec::with_capacity(self.values.len());
        let mut pos = 0;
        for &v in &self.values {
            while image[pos] != v {
                pos += 1;
            }
            epi.push(pos);
        }
        (DeltaMap { target: k, values: epi }, DeltaMap { target: self.target, values: image })
    }

    /// Indices of `[n]` not hit by the map.
    pub fn missing(&self) -> Vec<usize> {
        (0..=self.target).filter(|j| self.values.binary_search(j).is_err()).collect()
    }

    /// Indices `j` with `self(j) = self(j+1)`.
    pub fn repeats(&self) -> Vec<usize> {
        (0..self.source()).filter(|&j| self.values[j] == self.values[j + 1]).collect()
    }

    /// Every monotone map `[m] → [n]`, in lexicographic order.
    pub fn all(m: usize, n: usize) -> Vec<DeltaMap> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(m + 1);
        fn rec(m: usize, n: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<DeltaMap>) {
            if cur.len() == m + 1 {
                out.push(DeltaMap { target: n, values: cur.clone() });
                return;
            }
            for v in lo..=n {
                cur.push(v);
                rec(m, n, v, cur, out);
                cur.pop();
            }
        }
        rec(m, n, 0, &mut cur, &mut out);
        out
    }

    /// Every surjection `[m] → [n]`, in lexicographic order.
    pub fn surjections(m: usize, n: usize) -> Vec<DeltaMap> {
        if n > m {
            return Vec::new();
        }
        DeltaMap::all(m, n).into_iter().filter(DeltaMap::is_surjective).collect()
    }

    /// Compact label such as `[0,0,2]`.
    pub fn label(&self) -> String {
        let vals: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        format!("[{}]", vals.join(","))
    }
}
