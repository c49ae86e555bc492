//! Small helpers shared by the literal parsers.

/// Splits `s` at every top-level occurrence of `sep`, ignoring separators
/// nested inside `(...)` or `[...]`.
pub fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (idx, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth = depth.saturating_sub(1),
            c if c == sep && depth == 0 => {
                parts.push(&s[start..idx]);
                start = idx + ch.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

/// Splits a sum expression such as `1/2 - e3 + 2 e5` into signed terms,
/// e.g. `[("1/2", +), ("e3", -), ("2 e5", +)]`.  A `+`/`-` directly after
/// `e` or `E` is kept inside the term so float exponents survive.
pub fn split_signed_terms(s: &str) -> Vec<(bool, &str)> {
    let mut terms = Vec::new();
    let bytes = s.as_bytes();
    let mut start = 0usize;
    let mut negative = false;
    let mut idx = 0usize;
    while idx < bytes.len() {
        let ch = bytes[idx] as char;
        if ch == '+' || ch == '-' {
            let prev = s[..idx].trim_end().chars().last();
            let is_exponent_sign = matches!(prev, Some('e') | Some('E'))
                && s[..idx].trim_end().len() > 1
                && !s[start..idx].trim().is_empty();
            if !is_exponent_sign {
                let chunk = s[start..idx].trim();
                if chunk.is_empty() {
                    // Stacked signs accumulate: `--x` is `x`, `+-x` is `-x`.
                    negative ^= ch == '-';
                } else {
                    terms.push((negative, chunk));
                    negative = ch == '-';
                }
                start = idx + 1;
            }
        }
        idx += 1;
    }
    let chunk = s[start..].trim();
    if !chunk.is_empty() {
        terms.push((negative, chunk));
    }
    terms
}
