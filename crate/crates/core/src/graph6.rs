//! graph6 encoding (short form, order ≤ 62).
//!
//! One printable line per graph: byte `n + 63`, then ⌈n(n−1)/2 / 6⌉ bytes
//! packing the upper triangle of the adjacency matrix in column order
//! (0,1), (0,2), (1,2), (0,3), …, six bits per byte, most significant first.

use crate::graph::{Graph, ParseError};

pub const MAX_ORDER: usize = 62;

fn bad(msg: impl Into<String>) -> ParseError {
    ParseError::Graph6(msg.into())
}

pub fn encode(g: &Graph) -> Result<String, ParseError> {
    let n = g.n();
    if n > MAX_ORDER {
        return Err(bad(format!("order {n} exceeds short-form limit {MAX_ORDER}")));
    }
    let mut bytes = vec![(n as u8) + 63];
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            used += 1;
            if used == 6 {
                bytes.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        bytes.push((acc << (6 - used)) + 63);
    }
    Ok(String::from_utf8(bytes).expect("printable range"))
}

pub fn decode(line: &str) -> Result<Graph, ParseError> {
    let bytes = line.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(bad("empty input"));
    }
    if bytes[0] == 126 {
        return Err(bad("long-form encodings (order > 62) are not supported"));
    }
    if !(63..=125).contains(&bytes[0]) {
        return Err(bad(format!("invalid order byte {}", bytes[0])));
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 {
        return Err(bad("order 0 graph"));
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != 1 + nbytes {
        return Err(bad(format!(
            "order {n} needs {} data bytes, got {}",
            nbytes,
            bytes.len() - 1
        )));
    }
    let mut bits = Vec::with_capacity(nbytes * 6);
    for (k, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(bad(format!("invalid data byte {} at position {}", b, k + 1)));
        }
        let v = b - 63;
        for shift in (0..6).rev() {
            bits.push((v >> shift) & 1 == 1);
        }
    }
    if bits[nbits..].iter().any(|&b| b) {
        return Err(bad("nonzero padding bits"));
    }
    let mut g = Graph::empty(n)?;
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[pos] {
                g.add_edge(i, j)?;
            }
            pos += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent re-implementation used to cross-check `encode`: builds the
    /// bit string explicitly, then packs it, instead of streaming.
    fn encode_reference(g: &Graph) -> String {
        let n = g.n();
        let mut bits: Vec<u8> = Vec::new();
        for j in 0..n {
            for i in 0..j {
                bits.push(u8::from(g.has_edge(i, j)));
            }
        }
        while bits.len() % 6 != 0 {
            bits.push(0);
        }
        let mut out = vec![(n as u8) + 63];
        for chunk in bits.chunks(6) {
            out.push(chunk.iter().fold(0, |a, &b| (a << 1) | b) + 63);
        }
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn k4_is_c_tilde() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(encode(&k4).unwrap(), "C~");
        assert_eq!(encode_reference(&k4), "C~");
        assert_eq!(decode("C~").unwrap(), k4);
    }

    #[test]
    fn small_cases() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(encode(&k1).unwrap(), "@");
        assert_eq!(decode("@").unwrap(), k1);

        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let s = encode(&p3).unwrap();
        assert_eq!(s, encode_reference(&p3));
        assert_eq!(decode(&s).unwrap(), p3);
    }

    #[test]
    fn rejects_malformed() {
        assert!(decode("").is_err());
        assert!(decode("~??").is_err()); // long form
        assert!(decode("C").is_err()); // truncated
        assert!(decode("C~~").is_err()); // excess bytes
        assert!(decode("B~").is_err()); // nonzero padding for n = 3 (3 bits used)
        assert!(decode(" C~").is_err()); // leading junk
    }

    #[test]
    fn round_trip_sweep() {
        // all graphs on 4 vertices, plus a larger sparse one
        for mask in 0u32..64 {
            let mut g = Graph::empty(4).unwrap();
            let pairs = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)];
            for (b, &(u, v)) in pairs.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    g.add_edge(u, v).unwrap();
                }
            }
            let s = encode(&g).unwrap();
            assert_eq!(s, encode_reference(&g));
            assert_eq!(decode(&s).unwrap(), g);
        }
        let big = Graph::from_edges(40, (0..39).map(|i| (i, i + 1))).unwrap();
        assert_eq!(decode(&encode(&big).unwrap()).unwrap(), big);
    }
}
