use std::collections::HashSet;

/// Makes every label distinct by priming later duplicates (`x`, `x'`, `x''`).
/// Labels are cosmetic for constructed objects, but lookups and the text
/// formats require them to be unique.
pub(crate) fn uniquify(labels: &mut [String]) {
    let mut seen: HashSet<String> = HashSet::with_capacity(labels.len());
    for label in labels.iter_mut() {
        while seen.contains(label.as_str()) {
            label.push('\'');
        }
        seen.insert(label.clone());
    }
}

/// A label is acceptable in the text formats when it is non-empty and
/// contains no whitespace and no `·`.
pub(crate) fn is_valid_label(label: &str) -> bool {
    !label.is_empty() && !label.chars().any(|c| c.is_whitespace() || c == '·')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicates_are_primed() {
        let mut v: Vec<String> = ["a", "b", "a", "a'", "a"].iter().map(|s| s.to_string()).collect();
        uniquify(&mut v);
        assert_eq!(v, vec!["a", "b", "a'", "a''", "a'''"]);
    }
}
