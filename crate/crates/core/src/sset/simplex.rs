use super::DeltaMap;

/// A simplex in Eilenberg–Zilber normal form: a nondegenerate simplex
/// `base` of dimension `base_dim` pulled back along a surjection
/// `degeneracy : [dim] → [base_dim]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
    pub base_dim: usize,
    pub base: usize,
    pub degeneracy: DeltaMap,
}

impl Simplex {
    pub fn nondegenerate(dim: usize, base: usize) -> Self {
        Simplex { base_dim: dim, base, degeneracy: DeltaMap::identity(dim) }
    }

    pub fn dim(&self) -> usize {
        self.degeneracy.source()
    }

    pub fn is_degenerate(&self) -> bool {
        self.dim() != self.base_dim
    }

    /// Precomposes the degeneracy with a surjection.
    pub fn degenerate_along(&self, epi: &DeltaMap) -> Simplex {
        Simplex { base_dim: self.base_dim, base: self.base, degeneracy: self.degeneracy.after(epi) }
    }

    /// The normalized degeneracy word `s_{i_k}…s_{i_1}` as the index list
    /// `[i_k, …, i_1]` (strictly decreasing).
    pub fn word(&self) -> Vec<usize> {
        let mut w = self.degeneracy.repeats();
        w.reverse();
        w
    }
}

/// Renders a word such as `s_2s_0`; empty for the empty word.
pub fn format_word(word: &[usize]) -> String {
    word.iter().map(|i| format!("s_{i}")).collect()
}

/// Parses `s_2s_0` into `[2, 0]`. The empty string is the empty word.
pub fn parse_word(text: &str) -> Option<Vec<usize>> {
    let mut out = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        rest = rest.strip_prefix("s_")?;
        let end = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if end == 0 {
            return None;
        }
        out.push(rest[..end].parse().ok()?);
        rest = &rest[end..];
    }
    Some(out)
}

/// The surjection `[base_dim + k] → [base_dim]` of a strictly decreasing
/// word of length `k`, or `None` if the word is not normalized or does not
/// fit.
pub fn word_to_surjection(word: &[usize], base_dim: usize) -> Option<DeltaMap> {
    if word.windows(2).any(|w| w[0] <= w[1]) {
        return None;
    }
    let dim = base_dim + word.len();
    if word.first().is_some_and(|&top| top >= dim) {
        return None;
    }
    let mut values = Vec::with_capacity(dim + 1);
    let mut v = 0;
    values.push(0);
    for j in 0..dim {
        if !word.contains(&j) {
            v += 1;
        }
        values.push(v);
    }
    (v == base_dim).then(|| DeltaMap::new(base_dim, values))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_round_trip() {
        for m in 0..5 {
            for n in 0..=m {
                for s in DeltaMap::surjections(m, n) {
                    let x = Simplex { base_dim: n, base: 0, degeneracy: s.clone() };
                    let w = x.word();
                    assert_eq!(w.len(), m - n);
                    assert_eq!(word_to_surjection(&w, n), Some(s));
                    assert_eq!(parse_word(&format_word(&w)), Some(w));
                }
            }
        }
    }

    #[test]
    fn word_matches_composite_of_codegeneracies() {
        // s_2 s_0 y = y · (σ^0 ∘ σ^2)
        let eta = DeltaMap::degeneracy(1, 0).after(&DeltaMap::degeneracy(2, 2));
        assert_eq!(word_to_surjection(&[2, 0], 1), Some(eta));
    }

    #[test]
    fn unnormalized_words_rejected() {
        assert_eq!(word_to_surjection(&[0, 1], 1), None);
        assert_eq!(word_to_surjection(&[3], 1), None);
        assert_eq!(parse_word("s_"), None);
        assert_eq!(parse_word("t_1"), None);
    }
}
