use super::Graph;
use crate::{Error, Result};

const MAX_N: usize = 62;

/// Encodes a graph with at most 62 vertices in graph6 short form.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_N {
        return Err(Error::InvalidArgument(format!("graph6 short form needs n <= {MAX_N}, got {n}")));
    }
    let mut out = vec![(n + 63) as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Decodes a graph6 string (optional `>>graph6<<` header, trailing
/// whitespace ignored). Errors carry the byte offset of the problem.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let body = text.trim_end();
    let (skip, body) = match body.strip_prefix(">>graph6<<") {
        Some(rest) => (10, rest),
        None => (0, body),
    };
    let bytes = body.as_bytes();
    let err = |offset: usize, message: &str| Error::Graph6 {
        offset: skip + offset,
        message: message.to_string(),
    };
    let &first = bytes.first().ok_or_else(|| err(0, "empty input"))?;
    if !(63..=126).contains(&first) {
        return Err(err(0, "byte outside 63..=126"));
    }
    if first == 126 {
        return Err(err(0, "only the short form (n <= 62) is supported"));
    }
    let n = usize::from(first - 63);
    if n == 0 {
        return Err(err(0, "graph with no vertices"));
    }
    let bits = n * (n - 1) / 2;
    let need = bits.div_ceil(6);
    if bytes.len() != 1 + need {
        return Err(err(
            bytes.len().min(1 + need),
            &format!("expected {} bytes for n = {n}, found {}", 1 + need, bytes.len()),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for (idx, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(idx + 1, "byte outside 63..=126"));
        }
        let v = b - 63;
        for shift in (0..6).rev() {
            let bit = v >> shift & 1;
            if k >= bits {
                if bit != 0 {
                    return Err(err(idx + 1, "nonzero padding bit"));
                }
                continue;
            }
            if bit == 1 {
                let (i, j) = pair_of(k);
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Position `k` in column order `(0,1), (0,2), (1,2), (0,3), ...`.
fn pair_of(k: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= k {
        start += j;
        j += 1;
    }
    (k - start, j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, fixture, fixture_names, path, random_gnp};

    #[test]
    fn known_strings() {
        assert_eq!(to_graph6(&path(1).unwrap()).unwrap(), "@");
        assert_eq!(to_graph6(&path(2).unwrap()).unwrap(), "A_");
        assert_eq!(to_graph6(&complete(4).unwrap()).unwrap(), "C~");
        assert_eq!(to_graph6(&cycle(5).unwrap()).unwrap(), "Dhc");
        assert_eq!(from_graph6(">>graph6<<Dhc\n").unwrap(), cycle(5).unwrap());
    }

    #[test]
    fn errors_have_offsets() {
        assert!(matches!(from_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(from_graph6("D"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(from_graph6("Dh "), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(from_graph6("A~"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(from_graph6("~???").is_err());
    }

    #[test]
    fn round_trips() {
        for name in fixture_names() {
            let g = fixture(name).unwrap().graph;
            assert_eq!(from_graph6(&to_graph6(&g).unwrap()).unwrap(), g);
        }
        for seed in 0..1000u64 {
            let n = 1 + (seed % 62) as usize;
            let g = random_gnp(n, 0.3, seed).unwrap();
            assert_eq!(from_graph6(&to_graph6(&g).unwrap()).unwrap(), g);
        }
        assert!(to_graph6(&path(63).unwrap()).is_err());
    }
}
