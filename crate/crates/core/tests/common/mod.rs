//! Definitional oracles, written directly from the definitions and independent
//! of the border-table machinery in the library.

#![allow(dead_code)]

pub fn is_border(w: &[u8], len: usize) -> bool {
    len > 0 && len < w.len() && w[..len] == w[w.len() - len..]
}

/// All border lengths, longest first, by direct prefix/suffix comparison.
pub fn borders(w: &[u8]) -> Vec<usize> {
    (1..w.len())
        .rev()
        .filter(|&len| is_border(w, len))
        .collect()
}

pub fn occurrences(w: &[u8], u: &[u8]) -> usize {
    if u.len() > w.len() {
        return 0;
    }
    (0..=w.len() - u.len())
        .filter(|&i| &w[i..i + u.len()] == u)
        .count()
}

/// Length of some border occurring exactly twice, checked over every border.
pub fn closing_border(w: &[u8]) -> Option<usize> {
    borders(w)
        .into_iter()
        .find(|&len| occurrences(w, &w[..len]) == 2)
}

pub fn closed(w: &[u8]) -> bool {
    w.len() <= 1 || closing_border(w).is_some()
}

pub fn privileged(w: &[u8]) -> bool {
    w.len() <= 1
        || borders(w)
            .into_iter()
            .any(|len| occurrences(w, &w[..len]) == 2 && privileged(&w[..len]))
}

pub fn contains(w: &[u8], u: &[u8]) -> bool {
    occurrences(w, u) > 0
}

/// Every word of length `n` over `k` letters, in lexicographic order.
pub fn all_words(k: u8, n: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k).map(move |s| {
                    let mut v = w.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
    }
    out
}
