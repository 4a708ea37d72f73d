//! Inline family mini-language: `join:` / `union:` over terms `K<n>` and
//! `<k>K<n>`, plus the named families with their parameter flags.

use spectough::graph::copies;
use spectough::{construct, FamilySpec, Graph};

/// Parameters collected from command-line flags for named families.
#[derive(Debug, Default, Clone)]
pub struct FamilyParams {
    pub n: Option<usize>,
    pub delta: Option<usize>,
    pub t: Option<usize>,
    pub c: Option<usize>,
    pub s: Option<usize>,
    pub parts: Option<Vec<usize>>,
}

fn need(name: &str, v: Option<usize>) -> Result<usize, String> {
    v.ok_or_else(|| format!("family requires --{name}"))
}

/// Parse a `--family` value: either an inline expression
/// (`join:K17,3K1`, `union:K2,K3`, `K5`, `2K3`) or a named family tag
/// resolved against the parameter flags.
pub fn parse_family(expr: &str, params: &FamilyParams) -> Result<Graph, String> {
    if let Some(rest) = expr.strip_prefix("join:") {
        return fold_terms(rest, true);
    }
    if let Some(rest) = expr.strip_prefix("union:") {
        return fold_terms(rest, false);
    }
    if expr.contains('K') {
        return parse_term(expr);
    }
    let spec = match expr {
        "complete" => FamilySpec::Complete {
            n: need("n", params.n)?,
        },
        "mgraph" => FamilySpec::MGraph {
            n: need("n", params.n)?,
        },
        "kplus3" => FamilySpec::CompletePlusMatching3 {
            n: need("n", params.n)?,
        },
        "extremal-1tough" => FamilySpec::Extremal1Tough {
            n: need("n", params.n)?,
            delta: need("delta", params.delta)?,
        },
        "extremal-ttough" => FamilySpec::ExtremalTTough {
            n: need("n", params.n)?,
            t: need("t", params.t)?,
        },
        "not-ttough" => FamilySpec::NotTToughFamily {
            n: need("n", params.n)?,
            t: need("t", params.t)?,
            c: need("c", params.c)?,
        },
        "split" => FamilySpec::SplitFamily {
            s: need("s", params.s)?,
            parts: params
                .parts
                .clone()
                .ok_or_else(|| "family requires --parts".to_string())?,
        },
        "lemma36" => FamilySpec::Lemma36Exception {
            n: need("n", params.n)?,
        },
        other => return Err(format!("unknown family '{other}'")),
    };
    construct(&spec).map_err(|e| e.to_string())
}

fn fold_terms(list: &str, join: bool) -> Result<Graph, String> {
    let mut acc: Option<Graph> = None;
    for term in list.split(',') {
        let g = parse_term(term)?;
        acc = Some(match acc {
            None => g,
            Some(a) => {
                if join {
                    a.join(&g)
                } else {
                    a.union(&g)
                }
            }
        });
    }
    acc.ok_or_else(|| "empty term list".to_string())
}

/// `K<n>` or `<k>K<n>`.
fn parse_term(term: &str) -> Result<Graph, String> {
    let term = term.trim();
    let bad = || format!("bad term '{term}': expected K<n> or <k>K<n>");
    let k_pos = term.find('K').ok_or_else(bad)?;
    let copies_str = &term[..k_pos];
    let size_str = &term[k_pos + 1..];
    let count: usize = if copies_str.is_empty() {
        1
    } else {
        copies_str.parse().map_err(|_| bad())?
    };
    let size: usize = size_str.parse().map_err(|_| bad())?;
    if count == 0 {
        return Err(bad());
    }
    Ok(copies(count, &Graph::complete(size)))
}
