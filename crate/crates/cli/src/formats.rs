//! Text formats: the signed edge-list file, DOT, LaTeX, JSON, and the
//! poset dump.  Everything here is pure string work; errors are messages
//! for the caller to wrap.

use signed_chroma_core::arrangement::SignedFlat;
use signed_chroma_core::{BigInt, Edge, IntPolynomial, Parity, Sign, SignedMultigraph};

/// Parse the edge-list format:
/// line 1 `vertices <n>`, then `edge <a> <b> <+|->` lines; `#` comments.
pub fn read_edge_list(text: &str) -> Result<SignedMultigraph, String> {
    let mut vertices: Option<usize> = None;
    let mut edges: Vec<Edge> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let at = |msg: &str| format!("line {}: {msg}", lineno + 1);
        let mut words = line.split_whitespace();
        match words.next() {
            Some("vertices") => {
                if vertices.is_some() {
                    return Err(at("repeated vertices line"));
                }
                let n = words
                    .next()
                    .ok_or_else(|| at("vertices needs a count"))?
                    .parse::<usize>()
                    .map_err(|_| at("vertices count is not a number"))?;
                if words.next().is_some() {
                    return Err(at("trailing tokens after vertex count"));
                }
                vertices = Some(n);
            }
            Some("edge") => {
                if vertices.is_none() {
                    return Err(at("edge before the vertices line"));
                }
                let mut field = || words.next().ok_or_else(|| at("edge needs `a b sign`"));
                let a = field()?.parse::<usize>().map_err(|_| at("bad endpoint"))?;
                let b = field()?.parse::<usize>().map_err(|_| at("bad endpoint"))?;
                let sign = match field()? {
                    "+" => Sign::Plus,
                    "-" => Sign::Minus,
                    other => return Err(at(&format!("bad sign `{other}` (use + or -)"))),
                };
                if words.next().is_some() {
                    return Err(at("trailing tokens after edge"));
                }
                edges.push(Edge::new(a, b, sign));
            }
            Some(other) => return Err(at(&format!("unknown directive `{other}`"))),
            None => unreachable!("empty lines are skipped"),
        }
    }
    let n = vertices.ok_or_else(|| String::from("missing `vertices <n>` line"))?;
    SignedMultigraph::new(n, edges).map_err(|e| e.to_string())
}

pub fn write_edge_list(g: &SignedMultigraph) -> String {
    let mut out = format!("vertices {}\n", g.vertex_count());
    for e in g.edges() {
        out.push_str(&format!("edge {} {} {}\n", e.a, e.b, e.sign.as_char()));
    }
    out
}

/// DOT output; negative edges are dashed.  `names` supplies vertex labels
/// (book inputs label u, v, u_k^page).
pub fn write_dot(g: &SignedMultigraph, graph_name: &str, names: &[String]) -> String {
    let mut out = format!("graph {graph_name} {{\n");
    for v in 0..g.vertex_count() {
        out.push_str(&format!("  {v} [label=\"{}\"];\n", names[v]));
    }
    for e in g.edges() {
        match e.sign {
            Sign::Plus => out.push_str(&format!("  {} -- {};\n", e.a, e.b)),
            Sign::Minus => out.push_str(&format!("  {} -- {} [style=dashed];\n", e.a, e.b)),
        }
    }
    out.push_str("}\n");
    out
}

pub fn graph_json(g: &SignedMultigraph) -> serde_json::Value {
    let edges: Vec<serde_json::Value> = g
        .edges()
        .iter()
        .map(|e| serde_json::json!([e.a, e.b, e.sign.as_char().to_string()]))
        .collect();
    serde_json::json!({ "vertices": g.vertex_count(), "edges": edges })
}

pub fn parity_name(p: Parity) -> &'static str {
    match p {
        Parity::Odd => "odd",
        Parity::Even => "even",
        Parity::All => "all",
    }
}

/// The interchange JSON shape: coefficients ascending, as decimal strings
/// so consumers never overflow.
pub fn polynomial_json(p: &IntPolynomial) -> serde_json::Value {
    let coefficients: Vec<String> =
        p.coefficients().iter().map(|c| c.to_string()).collect();
    serde_json::json!({
        "variable": "lambda",
        "parity": parity_name(p.parity()),
        "coefficients": coefficients,
    })
}

/// LaTeX rendering, descending powers, no spaces: `\lambda^{3}-3\lambda^{2}+3\lambda`.
pub fn latex(p: &IntPolynomial, var: &str) -> String {
    let coeffs = p.coefficients();
    if coeffs.is_empty() {
        return String::from("0");
    }
    let (zero, one) = (BigInt::from(0), BigInt::from(1));
    let mut out = String::new();
    for power in (0..coeffs.len()).rev() {
        let c = &coeffs[power];
        if c == &zero {
            continue;
        }
        let negative = c < &zero;
        if negative {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let mag = if negative { -c.clone() } else { c.clone() };
        if mag != one || power == 0 {
            out.push_str(&mag.to_string());
        }
        if power >= 1 {
            out.push_str(var);
        }
        if power >= 2 {
            out.push_str(&format!("^{{{power}}}"));
        }
    }
    out
}

/// One flat per line, coordinates 1-based:
/// `rank=<r> zero={...} blocks=[{+1,-2},...]`.
pub fn poset_dump(poset: &[(SignedFlat, usize)]) -> String {
    let mut out = String::new();
    for (flat, rank) in poset {
        let zero: Vec<String> = flat.zero_set().iter().map(|i| (i + 1).to_string()).collect();
        let blocks: Vec<String> = flat
            .blocks()
            .iter()
            .map(|block| {
                let members: Vec<String> = block
                    .iter()
                    .map(|&(i, s)| format!("{}{}", s.as_char(), i + 1))
                    .collect();
                format!("{{{}}}", members.join(","))
            })
            .collect();
        out.push_str(&format!(
            "rank={rank} zero={{{}}} blocks=[{}]\n",
            zero.join(","),
            blocks.join(",")
        ));
    }
    out
}
