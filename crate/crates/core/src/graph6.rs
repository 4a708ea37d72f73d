//! Bit-exact graph6 encoding (short form, n <= 62).
//!
//! Layout: first byte `n + 63`; data bits are the upper-triangle entries in
//! column order x(0,1); x(0,2), x(1,2); x(0,3), ...; zero-padded to a
//! multiple of 6; each 6-bit group is emitted as `group + 63`. One graph per
//! line. The optional `>>graph6<<` header is skipped when present.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::io::BufRead;

pub const MAX_N: usize = 62;
const HEADER: &[u8] = b">>graph6<<";

/// Parse one graph6 line (without trailing newline).
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let (data, base) = match text.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (text, 0),
    };
    if data.is_empty() {
        return Err(Error::Graph6Format {
            offset: base,
            reason: "empty input".into(),
        });
    }
    let first = data[0];
    if first == 126 {
        return Err(Error::Graph6Format {
            offset: base,
            reason: "long-form size prefix (n > 62) is not supported".into(),
        });
    }
    if !(63..=125).contains(&first) {
        return Err(Error::Graph6Format {
            offset: base,
            reason: format!("size byte {first} outside printable range 63..=125"),
        });
    }
    let n = (first - 63) as usize;
    let pairs = n * (n.saturating_sub(1)) / 2;
    let need = pairs.div_ceil(6);
    if data.len() < 1 + need {
        return Err(Error::Graph6Format {
            offset: base + data.len(),
            reason: format!(
                "truncated: n = {n} needs {need} data bytes, found {}",
                data.len() - 1
            ),
        });
    }
    if data.len() > 1 + need {
        return Err(Error::Graph6Format {
            offset: base + 1 + need,
            reason: format!("trailing garbage after {need} data bytes", need = need),
        });
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    for (k, &byte) in data[1..].iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Error::Graph6Format {
                offset: base + 1 + k,
                reason: format!("data byte {byte} outside printable range 63..=126"),
            });
        }
        let group = byte - 63;
        for shift in (0..6).rev() {
            let set = (group >> shift) & 1 == 1;
            if bit >= pairs {
                if set {
                    return Err(Error::Graph6Format {
                        offset: base + 1 + k,
                        reason: "nonzero padding bits".into(),
                    });
                }
            } else {
                if set {
                    let (i, j) = pair_of_index(bit);
                    g.set_edge(i, j);
                }
                bit += 1;
            }
        }
    }
    Ok(g)
}

/// Encode as a graph6 line (no trailing newline). Errors when `n > 62`.
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_N {
        return Err(Error::UnsupportedSize {
            what: "graph6 short form",
            n,
            max: MAX_N,
        });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + pairs.div_ceil(6));
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0;
    for k in 0..pairs {
        let (i, j) = pair_of_index(k);
        group = (group << 1) | u8::from(g.has_edge(i, j));
        filled += 1;
        if filled == 6 {
            out.push(group + 63);
            group = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Inverse of the colex edge index: `index = j(j-1)/2 + i` with `i < j`.
fn pair_of_index(k: usize) -> (usize, usize) {
    // smallest j with j(j+1)/2 > k
    let mut j = ((((8 * k + 1) as f64).sqrt() as usize) + 1) / 2;
    while j * (j + 1) / 2 <= k {
        j += 1;
    }
    while j > 0 && j * (j - 1) / 2 > k {
        j -= 1;
    }
    (k - j * (j - 1) / 2, j)
}

/// Iterator over graph6 lines from a buffered reader, yielding one graph per
/// nonempty line. Decode failures carry the 1-based line number.
pub struct Graph6Reader<R: BufRead> {
    reader: R,
    line: u64,
    buf: String,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(reader: R) -> Self {
        Graph6Reader {
            reader,
            line: 0,
            buf: String::new(),
        }
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            match self.reader.read_line(&mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {
                    self.line += 1;
                    let trimmed = self.buf.trim_end_matches(['\n', '\r']);
                    if trimmed.is_empty() {
                        continue;
                    }
                    return Some(parse_graph6(trimmed.as_bytes()).map_err(|e| Error::Stream {
                        line: self.line,
                        source: Box::new(e),
                    }));
                }
                Err(e) => return Some(Err(e.into())),
            }
        }
    }
}
