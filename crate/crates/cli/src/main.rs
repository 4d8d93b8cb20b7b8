//! `signed-chroma`: chromatic polynomials of signed multigraphs and
//! switching classification of book-graph signatures.
//!
//! Inputs are either an edge-list file or the book shorthand
//! `book <m> <n> [--l L] [--star] [--digon]`.  Exit codes: 2 bad input,
//! 3 budget refused, 4 method/mode does not fit the input, 5 cross-check
//! failure.

mod formats;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use signed_chroma_core::arrangement::{
    chromatic_from_whitney, chromatic_poset, chromatic_via_whitney, complement_for_balanced,
    complement_for_signed, complement_for_unsigned, whitney_numbers, AmbientKind,
};
use signed_chroma_core::book::{
    build_book, classify_signature, enumerate_classes, formula_digon_book, formula_signed_book,
    formula_unsigned_book, reduce_signature, unbalanced_pages, vertex_name,
};
use signed_chroma_core::chromatic::{chromatic_poly, chromatic_poly_oracle};
use signed_chroma_core::{
    BookFamily, BookSpec, Budget, ColoringMode, Error as CoreError, IntPolynomial, Parity, Sign,
    SignedMultigraph,
};

#[derive(Parser)]
#[command(
    name = "signed-chroma",
    version,
    about = "Signed and balanced chromatic polynomials, book-graph formulas, \
             and switching classification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a chromatic polynomial by one method
    Poly(PolyArgs),
    /// Classify a signature up to switching isomorphism
    Classify(ClassifyArgs),
    /// List every signature class of a book, with polynomials
    Classes(ClassesArgs),
    /// Whitney numbers of the chromatic poset (optionally the poset itself)
    Whitney(WhitneyArgs),
    /// Compute by every applicable method and compare coefficient-exactly
    Verify(VerifyArgs),
    /// Re-emit the input graph (edge list, DOT, or JSON)
    Export(ExportArgs),
}

#[derive(Args)]
struct InputArgs {
    /// `book <m> <n>` or a path to an edge-list file
    #[arg(value_name = "INPUT", num_args = 0..=3)]
    input: Vec<String>,
    /// Number of negative spokes (book inputs)
    #[arg(long, value_name = "L")]
    l: Option<usize>,
    /// Make the shared edge negative too (the starred family)
    #[arg(long)]
    star: bool,
    /// Replace the shared edge by a positive/negative pair
    #[arg(long)]
    digon: bool,
    /// Signature: comma-separated `a-b[#k]` negative edges (replacing the
    /// family's own signs), or `@file` with one +/- per edge
    #[arg(long, value_name = "SIGMA")]
    sigma: Option<String>,
    /// Override the vertex-facing caps (isomorphism, arrangement dimension)
    #[arg(long, value_name = "N")]
    max_vertices: Option<usize>,
    /// Override the edge-facing caps (deletion-contraction, enumeration)
    #[arg(long, value_name = "N")]
    max_edges: Option<usize>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    Engine,
    Bruteforce,
    Whitney,
    Formula,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Signed,
    Balanced,
    Unsigned,
}

impl ModeArg {
    fn coloring(self) -> ColoringMode {
        match self {
            ModeArg::Signed => ColoringMode::Signed,
            ModeArg::Balanced => ColoringMode::Balanced,
            ModeArg::Unsigned => ColoringMode::Unsigned,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    Text,
    Dot,
    Json,
}

#[derive(Args)]
struct PolyArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = Method::Engine)]
    method: Method,
    #[arg(long, value_enum, default_value_t = ModeArg::Signed)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ClassesArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = ModeArg::Signed)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct WhitneyArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = ModeArg::Signed)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also print the chromatic poset, one flat per line
    #[arg(long)]
    poset: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = ModeArg::Signed)]
    mode: ModeArg,
    /// Verify the whole book grid: every family, both modes, formula vs engine
    #[arg(long, value_names = ["M_MAX", "N_MAX"], num_args = 2)]
    sweep: Option<Vec<usize>>,
}

#[derive(Args)]
struct ExportArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = ExportFormat::Text)]
    format: ExportFormat,
}

/// A failed run: exit code, stderr message, and any report already produced
/// (verify prints its partial table before failing).
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
    output: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into(), output: String::new() }
    }

    fn mismatch(message: impl Into<String>) -> Self {
        Failure { code: 4, message: message.into(), output: String::new() }
    }

    fn cross_check(message: impl Into<String>, output: String) -> Self {
        Failure { code: 5, message: message.into(), output }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let code = match &e {
            CoreError::BudgetExceeded { .. } => 3,
            CoreError::NegativeEdgeInUnsignedMode { .. }
            | CoreError::ParityMismatch { .. }
            | CoreError::PositiveLoopUnsupported { .. } => 4,
            CoreError::VertexOutOfRange { .. }
            | CoreError::EdgeOutOfRange { .. }
            | CoreError::LengthMismatch { .. }
            | CoreError::InvalidWalk(_)
            | CoreError::InvalidBookParameters(_) => 2,
            _ => 5,
        };
        Failure { code, message: e.to_string(), output: String::new() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Poly(a) => cmd_poly(a),
        Command::Classify(a) => cmd_classify(a),
        Command::Classes(a) => cmd_classes(a),
        Command::Whitney(a) => cmd_whitney(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Export(a) => cmd_export(a),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            print!("{}", f.output);
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// The resolved input: the graph, plus the book parameters when the input
/// was the shorthand.
struct Input {
    graph: SignedMultigraph,
    book: Option<BookSpec>,
    budget: Budget,
}

fn resolve(args: &InputArgs) -> Result<Input, Failure> {
    let budget = resolve_budget(args.max_vertices, args.max_edges);
    if args.input.is_empty() {
        return Err(Failure::parse("missing input: `book <m> <n>` or a file path"));
    }
    if args.input[0] == "book" {
        if args.input.len() != 3 {
            return Err(Failure::parse("book shorthand is `book <m> <n>`"));
        }
        let m: usize = args.input[1]
            .parse()
            .map_err(|_| Failure::parse(format!("bad page size `{}`", args.input[1])))?;
        let n: usize = args.input[2]
            .parse()
            .map_err(|_| Failure::parse(format!("bad page count `{}`", args.input[2])))?;
        if args.sigma.is_some() && (args.l.is_some() || args.star || args.digon) {
            return Err(Failure::parse("--sigma replaces the signature; drop --l/--star/--digon"));
        }
        let spec = if args.digon {
            if args.l.is_some() || args.star {
                return Err(Failure::parse("--digon excludes --l and --star"));
            }
            BookSpec::digon(m, n)
        } else if args.star {
            let l = args.l.ok_or_else(|| Failure::parse("--star needs --l"))?;
            BookSpec::star(m, n, l)
        } else {
            BookSpec::signed(m, n, args.l.unwrap_or(0))
        };
        spec.validate()?;
        let mut graph = build_book(&spec)?;
        if let Some(sigma) = &args.sigma {
            graph = graph.with_signs(&parse_sigma(&graph, sigma)?)?;
        }
        Ok(Input { graph, book: Some(spec), budget })
    } else {
        if args.input.len() != 1 {
            return Err(Failure::parse("expected a file path or `book <m> <n>`"));
        }
        if args.l.is_some() || args.star || args.digon {
            return Err(Failure::mismatch("--l/--star/--digon apply only to book inputs"));
        }
        let path = &args.input[0];
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::parse(format!("cannot read {path}: {e}")))?;
        let mut graph = formats::read_edge_list(&text)
            .map_err(|e| Failure::parse(format!("{path}: {e}")))?;
        if let Some(sigma) = &args.sigma {
            graph = graph.with_signs(&parse_sigma(&graph, sigma)?)?;
        }
        Ok(Input { graph, book: None, budget })
    }
}

fn resolve_budget(max_vertices: Option<usize>, max_edges: Option<usize>) -> Budget {
    let mut budget = Budget::default();
    if let Ok(value) = std::env::var("SIGNED_CHROMA_BUDGET") {
        match value.parse::<usize>() {
            Ok(n) => {
                eprintln!("warning: SIGNED_CHROMA_BUDGET={n} caps every limit at {n}");
                budget = Budget::uniform(n);
            }
            Err(_) => eprintln!("warning: ignoring unparsable SIGNED_CHROMA_BUDGET=`{value}`"),
        }
    }
    if let Some(n) = max_vertices {
        eprintln!("warning: vertex caps set to {n}; isomorphism and arrangement work is exponential");
        budget.max_iso_vertices = n;
        budget.max_arrangement_dim = n;
    }
    if let Some(n) = max_edges {
        eprintln!("warning: edge caps set to {n}; deletion-contraction and enumeration are exponential");
        budget.max_dc_edges = n;
        budget.max_enumeration_edges = n;
    }
    budget
}

/// Signature syntax: `@file` (one `+`/`-` per edge, in edge order), or a
/// comma-separated list of edges to make negative, each `a-b` with an
/// optional `#k` choosing among parallel edges.
fn parse_sigma(g: &SignedMultigraph, text: &str) -> Result<Vec<Sign>, Failure> {
    if let Some(path) = text.strip_prefix('@') {
        let body = std::fs::read_to_string(path)
            .map_err(|e| Failure::parse(format!("cannot read {path}: {e}")))?;
        let signs: Vec<Sign> = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| match t {
                "+" => Ok(Sign::Plus),
                "-" => Ok(Sign::Minus),
                other => Err(Failure::parse(format!("{path}: bad sign `{other}`"))),
            })
            .collect::<Result<_, _>>()?;
        if signs.len() != g.edge_count() {
            return Err(Failure::parse(format!(
                "{path}: {} signs for {} edges",
                signs.len(),
                g.edge_count()
            )));
        }
        return Ok(signs);
    }
    let mut signs = vec![Sign::Plus; g.edge_count()];
    for item in text.split(',') {
        let item = item.trim();
        let (pair, index) = match item.split_once('#') {
            Some((p, k)) => {
                let k: usize = k
                    .parse()
                    .map_err(|_| Failure::parse(format!("bad parallel index in `{item}`")))?;
                (p, Some(k))
            }
            None => (item, None),
        };
        let (a, b) = pair
            .split_once('-')
            .ok_or_else(|| Failure::parse(format!("bad edge `{item}` (use a-b)")))?;
        let a: usize =
            a.parse().map_err(|_| Failure::parse(format!("bad vertex in `{item}`")))?;
        let b: usize =
            b.parse().map_err(|_| Failure::parse(format!("bad vertex in `{item}`")))?;
        let key = (a.min(b), a.max(b));
        let candidates: Vec<usize> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| e.key() == key)
            .map(|(i, _)| i)
            .collect();
        let chosen = match (candidates.len(), index) {
            (0, _) => return Err(Failure::parse(format!("no edge `{pair}` in the graph"))),
            (_, Some(k)) if k < candidates.len() => candidates[k],
            (_, Some(k)) => {
                return Err(Failure::parse(format!(
                    "`{pair}` has {} parallel edges; #{k} is out of range",
                    candidates.len()
                )))
            }
            (1, None) => candidates[0],
            (c, None) => {
                return Err(Failure::parse(format!(
                    "`{pair}` is ambiguous ({c} parallel edges); add #index"
                )))
            }
        };
        if signs[chosen] == Sign::Minus {
            return Err(Failure::parse(format!("edge `{item}` listed twice")));
        }
        signs[chosen] = Sign::Minus;
    }
    Ok(signs)
}

fn compute_poly(
    input: &Input,
    method: Method,
    mode: ColoringMode,
) -> Result<IntPolynomial, Failure> {
    match method {
        Method::Engine => Ok(chromatic_poly(&input.graph, mode, &input.budget)?),
        Method::Bruteforce => Ok(chromatic_poly_oracle(&input.graph, mode, &input.budget)?),
        Method::Whitney => Ok(chromatic_via_whitney(&input.graph, mode, &input.budget)?),
        Method::Formula => {
            let spec = input
                .book
                .as_ref()
                .ok_or_else(|| Failure::mismatch("--method formula needs a book input"))?;
            if input.graph.signs() != build_book(spec)?.signs() {
                return Err(Failure::mismatch(
                    "--method formula covers the named families, not --sigma overrides",
                ));
            }
            formula_for(spec, mode)
        }
    }
}

fn formula_for(spec: &BookSpec, mode: ColoringMode) -> Result<IntPolynomial, Failure> {
    match (spec.family, mode) {
        (BookFamily::Plain, ColoringMode::Unsigned) => Ok(formula_unsigned_book(spec.m, spec.n)?),
        (_, ColoringMode::Unsigned) => {
            Err(Failure::mismatch("unsigned mode needs an all-positive book"))
        }
        (BookFamily::Plain, _) => Ok(formula_signed_book(spec.m, spec.n, 0, false, mode)?),
        (BookFamily::Signed { l, with_uv }, _) => {
            Ok(formula_signed_book(spec.m, spec.n, l, with_uv, mode)?)
        }
        (BookFamily::Digon, _) => Ok(formula_digon_book(spec.m, spec.n, mode)?),
    }
}

/// The k-basis substitution: odd arguments are written `2k+1`, even ones
/// `2k`, unsigned ones plain `k`.
fn k_basis(p: &IntPolynomial, mode: ColoringMode) -> (&'static str, IntPolynomial) {
    match mode {
        ColoringMode::Signed => ("lambda = 2k+1", p.compose_with_affine(2, 1)),
        ColoringMode::Balanced => ("lambda = 2k", p.compose_with_affine(2, 0)),
        ColoringMode::Unsigned => ("lambda = k", p.clone().with_parity(Parity::All)),
    }
}

fn cmd_poly(args: &PolyArgs) -> Result<String, Failure> {
    let input = resolve(&args.input)?;
    let mode = args.mode.coloring();
    let p = compute_poly(&input, args.method, mode)?;
    let mut out = String::new();
    match args.format {
        Format::Text => {
            writeln!(out, "{}", p.render("lambda")).unwrap();
            if input.book.is_some() {
                let (subst, in_k) = k_basis(&p, mode);
                writeln!(out, "k-basis ({subst}): {}", in_k.render("k")).unwrap();
            }
        }
        Format::Latex => {
            writeln!(out, "{}", formats::latex(&p, "\\lambda")).unwrap();
            if input.book.is_some() {
                let (_, in_k) = k_basis(&p, mode);
                writeln!(out, "{}", formats::latex(&in_k, "k")).unwrap();
            }
        }
        Format::Json => {
            writeln!(out, "{}", formats::polynomial_json(&p)).unwrap();
        }
    }
    Ok(out)
}

fn rep_name(spec: &BookSpec) -> String {
    match spec.family {
        BookFamily::Plain => String::from("Sigma_0"),
        BookFamily::Signed { l, with_uv: false } => format!("Sigma_{l}"),
        BookFamily::Signed { l, with_uv: true } => format!("Sigma*_{l}"),
        BookFamily::Digon => String::from("digon"),
    }
}

fn set_text(items: &[usize]) -> String {
    let inner: Vec<String> = items.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", inner.join(", "))
}

fn cmd_classify(args: &ClassifyArgs) -> Result<String, Failure> {
    let input = resolve(&args.input)?;
    match &input.book {
        Some(spec) => {
            if spec.family == BookFamily::Digon {
                return Err(Failure::mismatch(
                    "classification lives on the plain book; drop --digon",
                ));
            }
            classify_book(spec.m, spec.n, &input.graph, args.format)
        }
        None => classify_general(&input, args.format),
    }
}

fn classify_book(
    m: usize,
    n: usize,
    g: &SignedMultigraph,
    format: Format,
) -> Result<String, Failure> {
    let sigma = g.signs();
    let class = classify_signature(m, n, &sigma)?;
    let pages = unbalanced_pages(m, n, &sigma)?;
    let (reduced, witness) = reduce_signature(m, n, &sigma)?;
    let negative_edges: Vec<usize> = reduced
        .iter()
        .enumerate()
        .filter(|(_, s)| **s == Sign::Minus)
        .map(|(i, _)| i)
        .collect();
    let switch_at: Vec<usize> = witness
        .signs()
        .iter()
        .enumerate()
        .filter(|(_, s)| **s == Sign::Minus)
        .map(|(v, _)| v)
        .collect();
    let name = rep_name(&class.canonical_rep);
    let mut out = String::new();
    match format {
        Format::Json => {
            let v = serde_json::json!({
                "m": m,
                "n": n,
                "t": class.unbalanced_pages,
                "classes": n + 1,
                "representative": name,
                "unbalanced_pages": pages,
                "reduced_negative_edges": negative_edges,
                "switch_at": switch_at,
            });
            writeln!(out, "{v}").unwrap();
        }
        _ => {
            writeln!(out, "book m={m} n={n} ({} edges)", g.edge_count()).unwrap();
            writeln!(out, "t = {} (unbalanced pages: {})", class.unbalanced_pages, set_text(&pages))
                .unwrap();
            writeln!(out, "classes: {} (t = 0..{n})", n + 1).unwrap();
            writeln!(out, "representative: {name}").unwrap();
            writeln!(out, "reduced signature: negative edges {}", set_text(&negative_edges))
                .unwrap();
            writeln!(out, "witness: switch at {}", set_text(&switch_at)).unwrap();
        }
    }
    Ok(out)
}

/// No book structure: fall back to brute force over the whole graph.
fn classify_general(input: &Input, format: Format) -> Result<String, Failure> {
    let g = &input.graph;
    let reps = g.enumerate_switching_classes(&input.budget)?;
    if reps.len() > 4096 {
        return Err(Failure {
            code: 3,
            message: format!(
                "budget exceeded: {} switching classes to partition (cycle rank too high)",
                reps.len()
            ),
            output: String::new(),
        });
    }
    let rep_graphs: Vec<SignedMultigraph> =
        reps.iter().map(|s| g.with_signs(s)).collect::<Result<_, _>>()?;
    // group the class representatives up to switching isomorphism
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, rg) in rep_graphs.iter().enumerate() {
        let mut placed = false;
        for class in classes.iter_mut() {
            if rep_graphs[class[0]].switching_isomorphic(rg, &input.budget)? {
                class.push(i);
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(vec![i]);
        }
    }
    let rep_index = rep_graphs
        .iter()
        .position(|rg| matches!(g.switching_equivalent(rg), Ok(Some(_))))
        .ok_or_else(|| {
            Failure::cross_check("input matches no switching-class representative", String::new())
        })?;
    let class_index = classes.iter().position(|c| c.contains(&rep_index)).unwrap();
    let mut out = String::new();
    match format {
        Format::Json => {
            let v = serde_json::json!({
                "vertices": g.vertex_count(),
                "edges": g.edge_count(),
                "balanced": g.is_balanced(),
                "switching_classes": reps.len(),
                "switching_isomorphism_classes": classes.len(),
                "class_of_input": class_index + 1,
            });
            writeln!(out, "{v}").unwrap();
        }
        _ => {
            writeln!(out, "vertices {}, edges {}", g.vertex_count(), g.edge_count()).unwrap();
            writeln!(out, "balanced: {}", if g.is_balanced() { "yes" } else { "no" }).unwrap();
            writeln!(out, "switching classes: {}", reps.len()).unwrap();
            writeln!(out, "switching-isomorphism classes: {}", classes.len()).unwrap();
            writeln!(out, "class of input: {} of {}", class_index + 1, classes.len()).unwrap();
        }
    }
    Ok(out)
}

fn cmd_classes(args: &ClassesArgs) -> Result<String, Failure> {
    let input = resolve(&args.input)?;
    let spec = input
        .book
        .as_ref()
        .ok_or_else(|| Failure::mismatch("classes needs a book input"))?;
    if spec.family != BookFamily::Plain || args.input.sigma.is_some() {
        return Err(Failure::mismatch(
            "classes enumerates every signature of the plain book; drop --l/--star/--digon/--sigma",
        ));
    }
    let mode = args.mode.coloring();
    if mode == ColoringMode::Unsigned {
        return Err(Failure::mismatch("classes carry signatures; use signed or balanced mode"));
    }
    let (m, n) = (spec.m, spec.n);
    let all = enumerate_classes(m, n)?;
    let mut rows = Vec::new();
    for class in &all {
        let poly = formula_for(&class.canonical_rep, mode)?;
        rows.push((class.unbalanced_pages, rep_name(&class.canonical_rep), poly));
    }
    let mut out = String::new();
    match args.format {
        Format::Json => {
            let classes: Vec<serde_json::Value> = rows
                .iter()
                .map(|(t, name, poly)| {
                    serde_json::json!({
                        "t": t,
                        "representative": name,
                        "polynomial": formats::polynomial_json(poly),
                    })
                })
                .collect();
            let v = serde_json::json!({ "m": m, "n": n, "classes": classes });
            writeln!(out, "{v}").unwrap();
        }
        Format::Latex => {
            writeln!(out, "book m={m} n={n}: {} classes (t = 0..{n})", n + 1).unwrap();
            for (t, name, poly) in &rows {
                writeln!(out, "t={t} {name}: {}", formats::latex(poly, "\\lambda")).unwrap();
            }
        }
        Format::Text => {
            writeln!(out, "book m={m} n={n}: {} classes (t = 0..{n})", n + 1).unwrap();
            for (t, name, poly) in &rows {
                writeln!(out, "t={t} {name}: {}", poly.render("lambda")).unwrap();
            }
        }
    }
    Ok(out)
}

fn cmd_whitney(args: &WhitneyArgs) -> Result<String, Failure> {
    let input = resolve(&args.input)?;
    let mode = args.mode.coloring();
    let n = input.graph.vertex_count();
    let (complement, ambient) = match mode {
        ColoringMode::Signed => (complement_for_signed(&input.graph)?, AmbientKind::TypeBc),
        ColoringMode::Balanced => (complement_for_balanced(&input.graph)?, AmbientKind::TypeBc),
        ColoringMode::Unsigned => {
            (complement_for_unsigned(&input.graph)?, AmbientKind::CompleteGraphic)
        }
    };
    let w = whitney_numbers(n, &complement, ambient, &input.budget)?;
    let chi = chromatic_from_whitney(&w, mode)?;
    let mut out = String::new();
    let poset = if args.poset {
        Some(chromatic_poset(n, &complement, ambient, &input.budget)?)
    } else {
        None
    };
    match args.format {
        Format::Json => {
            let mut v = serde_json::json!({
                "mode": mode.name(),
                "counts": w.counts(),
                "polynomial": formats::polynomial_json(&chi),
            });
            if let Some(poset) = &poset {
                let lines: Vec<String> =
                    formats::poset_dump(poset).lines().map(String::from).collect();
                v["poset"] = serde_json::json!(lines);
            }
            writeln!(out, "{v}").unwrap();
        }
        format => {
            if let Some(poset) = &poset {
                out.push_str(&formats::poset_dump(poset));
            }
            let counts: Vec<String> = w.counts().iter().map(|c| c.to_string()).collect();
            writeln!(out, "w = ({})", counts.join(", ")).unwrap();
            match format {
                Format::Latex => writeln!(out, "{}", formats::latex(&chi, "\\lambda")).unwrap(),
                _ => writeln!(out, "chi = {}", chi.render("lambda")).unwrap(),
            }
        }
    }
    Ok(out)
}

fn coeff_vector(p: &IntPolynomial) -> String {
    let inner: Vec<String> = p.coefficients().iter().map(|c| c.to_string()).collect();
    format!("[{}]", inner.join(", "))
}

enum Outcome {
    Computed(IntPolynomial),
    Skipped(&'static str),
}

/// Compare every computed method against the first row (the engine).
/// Returns the report and whether everything agreed.
fn verify_report(rows: &[(&'static str, Outcome)]) -> (String, bool) {
    let (base_name, base) = match &rows[0] {
        (name, Outcome::Computed(p)) => (*name, p),
        _ => unreachable!("the baseline method is always computed"),
    };
    let mut agreed = vec![base_name];
    let mut skipped: Vec<String> = Vec::new();
    let mut diffs = String::new();
    for (name, outcome) in &rows[1..] {
        match outcome {
            Outcome::Computed(p) if p == base => agreed.push(name),
            Outcome::Computed(p) => {
                writeln!(diffs, "FAIL: {name} disagrees with {base_name}").unwrap();
                writeln!(diffs, "  {base_name}: {}", coeff_vector(base)).unwrap();
                writeln!(diffs, "  {name}: {}", coeff_vector(p)).unwrap();
            }
            Outcome::Skipped(reason) => skipped.push(format!("{name} [{reason}]")),
        }
    }
    if !diffs.is_empty() {
        return (diffs, false);
    }
    let mut line = format!("PASS ({})", agreed.join(" = "));
    if !skipped.is_empty() {
        line.push_str(&format!("; skipped: {}", skipped.join(", ")));
    }
    line.push('\n');
    (line, true)
}

/// Run one optional method, turning budget refusals and unsupported inputs
/// into skips rather than failures.
fn try_method(
    result: Result<IntPolynomial, CoreError>,
) -> Result<Outcome, Failure> {
    match result {
        Ok(p) => Ok(Outcome::Computed(p)),
        Err(CoreError::BudgetExceeded { .. }) => Ok(Outcome::Skipped("budget")),
        Err(CoreError::PositiveLoopUnsupported { .. }) => Ok(Outcome::Skipped("positive loop")),
        Err(e) => Err(e.into()),
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<String, Failure> {
    if let Some(sweep) = &args.sweep {
        if !args.input.input.is_empty() {
            return Err(Failure::parse("--sweep takes no input argument"));
        }
        let budget = resolve_budget(args.input.max_vertices, args.input.max_edges);
        return verify_sweep(sweep[0], sweep[1], &budget);
    }
    let input = resolve(&args.input)?;
    let mode = args.mode.coloring();
    let mut rows: Vec<(&'static str, Outcome)> = Vec::new();
    rows.push(("engine", Outcome::Computed(chromatic_poly(&input.graph, mode, &input.budget)?)));
    rows.push((
        "bruteforce",
        try_method(chromatic_poly_oracle(&input.graph, mode, &input.budget))?,
    ));
    rows.push((
        "whitney",
        try_method(chromatic_via_whitney(&input.graph, mode, &input.budget))?,
    ));
    if let Some(spec) = &input.book {
        if args.input.sigma.is_none() {
            let formula = formula_for(spec, mode)?;
            rows.push(("formula", Outcome::Computed(formula)));
        }
    }
    let (report, ok) = verify_report(&rows);
    if ok {
        Ok(report)
    } else {
        Err(Failure::cross_check("methods disagree", report))
    }
}

/// Formula vs engine over the whole grid: every family, both signed modes
/// (and the unsigned plain book), in deterministic order.
fn verify_sweep(m_max: usize, n_max: usize, budget: &Budget) -> Result<String, Failure> {
    let mut out = String::new();
    let mut cells = 0usize;
    let mut skipped = 0usize;
    let mut failed = 0usize;
    let mut row = |out: &mut String,
                   label: String,
                   checks: Vec<(ColoringMode, Result<IntPolynomial, Failure>, SignedMultigraph)>|
     -> Result<(), Failure> {
        cells += 1;
        for (mode, formula, graph) in checks {
            let formula = formula?;
            match chromatic_poly(&graph, mode, budget) {
                Ok(engine) if engine == formula => {}
                Ok(engine) => {
                    writeln!(out, "{label}: FAIL ({} mode)", mode.name()).unwrap();
                    writeln!(out, "  engine:  {}", coeff_vector(&engine)).unwrap();
                    writeln!(out, "  formula: {}", coeff_vector(&formula)).unwrap();
                    failed += 1;
                    return Ok(());
                }
                Err(CoreError::BudgetExceeded { .. }) => {
                    writeln!(out, "{label}: skipped (budget)").unwrap();
                    skipped += 1;
                    return Ok(());
                }
                Err(e) => return Err(e.into()),
            }
        }
        writeln!(out, "{label}: PASS").unwrap();
        Ok(())
    };
    for m in 2..=m_max {
        for n in 1..=n_max {
            if m >= 3 {
                let plain = BookSpec::plain(m, n);
                row(
                    &mut out,
                    format!("m={m} n={n} unsigned"),
                    vec![(
                        ColoringMode::Unsigned,
                        formula_for(&plain, ColoringMode::Unsigned),
                        build_book(&plain)?,
                    )],
                )?;
                for l in 0..=n {
                    let mut variants = vec![(BookSpec::signed(m, n, l), "B")];
                    if l >= 1 {
                        variants.push((BookSpec::star(m, n, l), "B*"));
                    }
                    for (spec, family) in variants {
                        let graph = build_book(&spec)?;
                        let checks = [ColoringMode::Signed, ColoringMode::Balanced]
                            .into_iter()
                            .map(|mode| (mode, formula_for(&spec, mode), graph.clone()))
                            .collect();
                        row(&mut out, format!("m={m} n={n} l={l} {family}"), checks)?;
                    }
                }
            }
            let digon = BookSpec::digon(m, n);
            let graph = build_book(&digon)?;
            let checks = [ColoringMode::Signed, ColoringMode::Balanced]
                .into_iter()
                .map(|mode| (mode, formula_for(&digon, mode), graph.clone()))
                .collect();
            row(&mut out, format!("m={m} n={n} digon"), checks)?;
        }
    }
    writeln!(out, "sweep: {cells} cells, {} pass, {skipped} skipped, {failed} fail",
        cells - skipped - failed)
    .unwrap();
    if failed > 0 {
        Err(Failure::cross_check(format!("{failed} sweep cells failed"), out))
    } else {
        Ok(out)
    }
}

fn cmd_export(args: &ExportArgs) -> Result<String, Failure> {
    let input = resolve(&args.input)?;
    let g = &input.graph;
    match args.format {
        ExportFormat::Text => Ok(formats::write_edge_list(g)),
        ExportFormat::Json => Ok(format!("{}\n", formats::graph_json(g))),
        ExportFormat::Dot => {
            let (name, labels) = match &input.book {
                Some(spec) => (
                    format!("book_{}_{}", spec.m, spec.n),
                    (0..g.vertex_count()).map(|i| vertex_name(spec.m, i)).collect::<Vec<_>>(),
                ),
                None => (
                    String::from("g"),
                    (0..g.vertex_count()).map(|i| i.to_string()).collect(),
                ),
            };
            Ok(formats::write_dot(g, &name, &labels))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn book_input(m: usize, n: usize) -> SignedMultigraph {
        build_book(&BookSpec::plain(m, n)).unwrap()
    }

    #[test]
    fn sigma_pairs_resolve_edges() {
        let g = book_input(3, 2);
        // book(3,2) edge order: uv, then page paths (u-2, 2-v, u-3, 3-v)
        let signs = parse_sigma(&g, "0-2").unwrap();
        assert_eq!(signs.iter().filter(|s| **s == Sign::Minus).count(), 1);
        assert_eq!(signs[1], Sign::Minus);

        let signs = parse_sigma(&g, "0-1,1-3").unwrap();
        assert_eq!(signs[0], Sign::Minus);
        assert_eq!(signs[4], Sign::Minus);

        assert!(parse_sigma(&g, "0-9").is_err());
        assert!(parse_sigma(&g, "0-2,0-2").is_err());
        assert!(parse_sigma(&g, "nonsense").is_err());
    }

    #[test]
    fn sigma_parallel_edges_need_an_index() {
        let g = build_book(&BookSpec::digon(3, 1)).unwrap();
        assert!(parse_sigma(&g, "0-1").is_err());
        let signs = parse_sigma(&g, "0-1#1").unwrap();
        assert_eq!(signs[1], Sign::Minus);
        assert!(parse_sigma(&g, "0-1#2").is_err());
    }

    #[test]
    fn verify_report_flags_a_corrupted_coefficient() {
        let p = IntPolynomial::from_i64_coeffs(&[0, 3, -3, 1], Parity::Even);
        let mut bad_coeffs = vec![0, 3, -3, 1];
        bad_coeffs[1] = 2;
        let bad = IntPolynomial::from_i64_coeffs(&bad_coeffs, Parity::Even);
        let rows = vec![
            ("engine", Outcome::Computed(p.clone())),
            ("bruteforce", Outcome::Computed(bad)),
        ];
        let (report, ok) = verify_report(&rows);
        assert!(!ok);
        assert!(report.contains("bruteforce disagrees with engine"));
        assert!(report.contains("[0, 3, -3, 1]"));
        assert!(report.contains("[0, 2, -3, 1]"));

        let rows = vec![
            ("engine", Outcome::Computed(p.clone())),
            ("bruteforce", Outcome::Computed(p.clone())),
            ("whitney", Outcome::Skipped("budget")),
        ];
        let (report, ok) = verify_report(&rows);
        assert!(ok);
        assert_eq!(report, "PASS (engine = bruteforce); skipped: whitney [budget]\n");

        assert_eq!(Failure::cross_check("methods disagree", String::new()).code, 5);
    }

    #[test]
    fn k_basis_substitutions() {
        let p = IntPolynomial::from_i64_coeffs(&[-1, 3, -3, 1], Parity::Odd);
        let (subst, in_k) = k_basis(&p, ColoringMode::Signed);
        assert_eq!(subst, "lambda = 2k+1");
        assert_eq!(in_k, IntPolynomial::from_i64_coeffs(&[0, 0, 0, 8], Parity::All));
        let q = IntPolynomial::from_i64_coeffs(&[0, 3, -3, 1], Parity::Even);
        let (subst, in_k) = k_basis(&q, ColoringMode::Balanced);
        assert_eq!(subst, "lambda = 2k");
        assert_eq!(in_k, IntPolynomial::from_i64_coeffs(&[0, 6, -12, 8], Parity::All));
    }

    #[test]
    fn representative_names() {
        assert_eq!(rep_name(&BookSpec::plain(3, 2)), "Sigma_0");
        assert_eq!(rep_name(&BookSpec::signed(3, 4, 2)), "Sigma_2");
        assert_eq!(rep_name(&BookSpec::star(3, 4, 2)), "Sigma*_2");
    }
}
