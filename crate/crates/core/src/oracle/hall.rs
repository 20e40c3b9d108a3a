//! Explicit Lyndon-word Hall basis with standard bracketing.

use std::fmt;

/// A bracket word over labelled letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Bracket {
    Letter { label: usize, degree: usize },
    Node(Box<Bracket>, Box<Bracket>),
}

impl Bracket {
    pub fn node(left: Bracket, right: Bracket) -> Self {
        Bracket::Node(Box::new(left), Box::new(right))
    }

    pub fn length(&self) -> usize {
        match self {
            Bracket::Letter { .. } => 1,
            Bracket::Node(l, r) => l.length() + r.length(),
        }
    }

    /// Degree when the bracket has degree `bracket_degree`.
    pub fn degree(&self, bracket_degree: usize) -> usize {
        match self {
            Bracket::Letter { degree, .. } => *degree,
            Bracket::Node(l, r) => l.degree(bracket_degree) + r.degree(bracket_degree) + bracket_degree,
        }
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bracket::Letter { label, .. } => write!(f, "x{label}"),
            Bracket::Node(l, r) => write!(f, "[{l},{r}]"),
        }
    }
}

/// All Lyndon words of length `1..=max_len` over `alphabet` letters, in
/// lexicographic order (Duval's generation).
pub fn lyndon_words(alphabet: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if alphabet == 0 || max_len == 0 {
        return out;
    }
    let mut w = vec![0usize];
    loop {
        out.push(w.clone());
        let len = w.len();
        while w.len() < max_len {
            w.push(w[w.len() - len]);
        }
        while w.last() == Some(&(alphabet - 1)) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

/// Standard bracketing: `w = uv` with `v` the longest proper Lyndon suffix.
pub fn standard_bracket(word: &[usize], degrees: &[usize]) -> Bracket {
    if word.len() == 1 {
        return Bracket::Letter {
            label: word[0],
            degree: degrees[word[0]],
        };
    }
    let split = (1..word.len())
        .find(|&i| is_lyndon(&word[i..]))
        .expect("a single letter is always a Lyndon suffix");
    Bracket::node(
        standard_bracket(&word[..split], degrees),
        standard_bracket(&word[split..], degrees),
    )
}

/// Strictly smaller than each of its proper suffixes.
pub fn is_lyndon(word: &[usize]) -> bool {
    !word.is_empty() && (1..word.len()).all(|i| word < &word[i..])
}
