//! Book graphs: `n` copies of the cycle `C_m` glued along one shared edge
//! `uv`, with signatures clustered at `u`, plus the digon variant where the
//! shared edge is a +/- parallel pair.
//!
//! Fixed numbering: `u = 0`, `v = 1`, and interior vertex `k` of page `l`
//! (both 1-based) is `2 + (l-1)(m-2) + (k-1)`, so page `l` reads
//! `u, u_1^l, ..., u_{m-2}^l, v` around its cycle.  Edge order: the shared
//! edge(s) first, then each page's path from `u` to `v`.
//!
//! Besides construction this module classifies signatures up to switching
//! isomorphism (the count of unbalanced pages is a complete invariant; there
//! are exactly `n+1` classes) and evaluates the closed-form / recursive
//! chromatic polynomials for all four families.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::budget::Budget;
use crate::chromatic::ColoringMode;
use crate::error::{Error, Result};
use crate::graph::{Edge, Sign, SignedMultigraph, SwitchingVector};
use crate::poly::{IntPolynomial, Parity};

/// Which signature a book carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BookFamily {
    /// Every edge positive.
    Plain,
    /// `l` negative edges clustered at `u`: the spokes `u u_1^p` of pages
    /// `1..=l`, or with `with_uv` the shared edge plus the spokes of pages
    /// `1..=l-1`.
    Signed { l: usize, with_uv: bool },
    /// Shared edge replaced by a positive/negative parallel pair.
    Digon,
}

/// Parameters of a book graph: page size `m`, page count `n`, family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BookSpec {
    pub m: usize,
    pub n: usize,
    pub family: BookFamily,
}

impl BookSpec {
    pub fn plain(m: usize, n: usize) -> Self {
        BookSpec { m, n, family: BookFamily::Plain }
    }

    /// `l` negative spokes, shared edge positive.  `l = 0` is the plain book.
    pub fn signed(m: usize, n: usize, l: usize) -> Self {
        let family =
            if l == 0 { BookFamily::Plain } else { BookFamily::Signed { l, with_uv: false } };
        BookSpec { m, n, family }
    }

    /// Negative shared edge plus `l - 1` negative spokes.  `l = 0` is again
    /// the plain book (an empty signature has no shared edge to carry).
    pub fn star(m: usize, n: usize, l: usize) -> Self {
        let family =
            if l == 0 { BookFamily::Plain } else { BookFamily::Signed { l, with_uv: true } };
        BookSpec { m, n, family }
    }

    pub fn digon(m: usize, n: usize) -> Self {
        BookSpec { m, n, family: BookFamily::Digon }
    }

    /// Number of negative edges.
    pub fn signature_size(&self) -> usize {
        match self.family {
            BookFamily::Plain => 0,
            BookFamily::Signed { l, .. } => l,
            BookFamily::Digon => 1,
        }
    }

    pub fn includes_shared_edge(&self) -> bool {
        matches!(self.family, BookFamily::Signed { with_uv: true, .. } | BookFamily::Digon)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::InvalidBookParameters(String::from("need at least one page")));
        }
        let min_m = if self.family == BookFamily::Digon { 2 } else { 3 };
        if self.m < min_m {
            return Err(Error::InvalidBookParameters(format!(
                "page size {} below minimum {min_m}",
                self.m
            )));
        }
        if let BookFamily::Signed { l, .. } = self.family {
            if l == 0 {
                return Err(Error::InvalidBookParameters(String::from(
                    "empty signatures are the plain family",
                )));
            }
            if l > self.n {
                return Err(Error::InvalidBookParameters(format!(
                    "signature size {l} exceeds page count {}",
                    self.n
                )));
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n * (self.m - 2) + 2
    }

    pub fn edge_count(&self) -> usize {
        match self.family {
            // bare digon convention: the page edge would only duplicate uv
            BookFamily::Digon if self.m == 2 && self.n == 1 => 2,
            BookFamily::Digon => self.n * (self.m - 1) + 2,
            _ => self.n * (self.m - 1) + 1,
        }
    }
}

/// A switching-isomorphism class of signatures on the book `B(m,n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BookClass {
    /// Pages whose cycle (shared edge included) is negative; the complete
    /// class invariant.
    pub unbalanced_pages: usize,
    pub canonical_rep: BookSpec,
}

fn interior_index(m: usize, page: usize, k: usize) -> usize {
    2 + (page - 1) * (m - 2) + (k - 1)
}

fn spoke_index(m: usize, page: usize) -> usize {
    1 + (page - 1) * (m - 1)
}

pub fn build_book(spec: &BookSpec) -> Result<SignedMultigraph> {
    spec.validate()?;
    let (m, n) = (spec.m, spec.n);
    if spec.family == BookFamily::Digon && m == 2 && n == 1 {
        return SignedMultigraph::new(
            2,
            vec![Edge::new(0, 1, Sign::Plus), Edge::new(0, 1, Sign::Minus)],
        );
    }
    let negative_spokes = match spec.family {
        BookFamily::Signed { l, with_uv: false } => l,
        BookFamily::Signed { l, with_uv: true } => l - 1,
        _ => 0,
    };
    let mut edges = Vec::with_capacity(spec.edge_count());
    match spec.family {
        BookFamily::Digon => {
            edges.push(Edge::new(0, 1, Sign::Plus));
            edges.push(Edge::new(0, 1, Sign::Minus));
        }
        BookFamily::Signed { with_uv: true, .. } => edges.push(Edge::new(0, 1, Sign::Minus)),
        _ => edges.push(Edge::new(0, 1, Sign::Plus)),
    }
    for page in 1..=n {
        let spoke = if page <= negative_spokes { Sign::Minus } else { Sign::Plus };
        let mut prev = 0;
        for k in 1..=(m - 2) {
            let w = interior_index(m, page, k);
            edges.push(Edge::new(prev, w, if k == 1 { spoke } else { Sign::Plus }));
            prev = w;
        }
        edges.push(Edge::new(prev, 1, Sign::Plus));
    }
    debug_assert_eq!(edges.len(), spec.edge_count());
    SignedMultigraph::new(spec.vertex_count(), edges)
}

/// Display name of a vertex under the fixed numbering: `u`, `v`, or `uk^l`
/// for interior vertex `k` of page `l`.
pub fn vertex_name(m: usize, index: usize) -> String {
    match index {
        0 => String::from("u"),
        1 => String::from("v"),
        i if m >= 3 => {
            let off = i - 2;
            format!("u{}^{}", off % (m - 2) + 1, off / (m - 2) + 1)
        }
        i => format!("x{i}"),
    }
}

/// Edge indices of one page's cycle in the plain-book layout: the path from
/// `u` to `v` first, then the shared edge closing the cycle.  (The digon
/// layout shifts all page edges by one.)
pub fn page_edges(m: usize, n: usize, page: usize) -> Result<Vec<usize>> {
    if page < 1 || page > n {
        return Err(Error::InvalidBookParameters(format!("page {page} out of 1..={n}")));
    }
    let start = spoke_index(m, page);
    let mut idx: Vec<usize> = (start..start + (m - 1)).collect();
    idx.push(0);
    Ok(idx)
}

/// 1-based pages whose cycle has negative sign product under `sigma`, for the
/// plain-book edge layout.  Balance of page cycles is what switching
/// preserves, so this list's size classifies the signature.
pub fn unbalanced_pages(m: usize, n: usize, sigma: &[Sign]) -> Result<Vec<usize>> {
    BookSpec::plain(m, n).validate()?;
    let expected = n * (m - 1) + 1;
    if sigma.len() != expected {
        return Err(Error::LengthMismatch { expected, actual: sigma.len() });
    }
    let mut pages = Vec::new();
    for page in 1..=n {
        let mut product = Sign::Plus;
        for i in page_edges(m, n, page)? {
            product = product * sigma[i];
        }
        if product == Sign::Minus {
            pages.push(page);
        }
    }
    Ok(pages)
}

/// Normalize `sigma` inside its switching class: balanced pages become all
/// positive, each unbalanced page keeps a single negative edge at `u` (its
/// spoke, or the shared edge after one more switch at `u` when more than
/// half the pages are unbalanced).  Returns the normalized signs and a
/// switching vector carrying the input onto them.
pub fn reduce_signature(
    m: usize,
    n: usize,
    sigma: &[Sign],
) -> Result<(Vec<Sign>, SwitchingVector)> {
    let unbalanced = unbalanced_pages(m, n, sigma)?;
    let t = unbalanced.len();
    let mut target = vec![Sign::Plus; sigma.len()];
    if t <= n.div_ceil(2) {
        for &p in &unbalanced {
            target[spoke_index(m, p)] = Sign::Minus;
        }
    } else {
        target[0] = Sign::Minus;
        for p in 1..=n {
            if !unbalanced.contains(&p) {
                target[spoke_index(m, p)] = Sign::Minus;
            }
        }
    }
    let g = build_book(&BookSpec::plain(m, n))?.with_signs(sigma)?;
    let h = g.with_signs(&target)?;
    let witness = g
        .switching_equivalent(&h)?
        .ok_or_else(|| Error::CrossCheckFailed(String::from("reduction changed page balance")))?;
    Ok((target, witness))
}

fn class_for(m: usize, n: usize, t: usize) -> BookClass {
    let canonical_rep = if t <= n.div_ceil(2) {
        BookSpec::signed(m, n, t)
    } else {
        BookSpec::star(m, n, n + 1 - t)
    };
    BookClass { unbalanced_pages: t, canonical_rep }
}

pub fn classify_signature(m: usize, n: usize, sigma: &[Sign]) -> Result<BookClass> {
    let t = unbalanced_pages(m, n, sigma)?.len();
    Ok(class_for(m, n, t))
}

/// One representative per class; there are exactly `n + 1`.
pub fn enumerate_classes(m: usize, n: usize) -> Result<Vec<BookClass>> {
    BookSpec::plain(m, n).validate()?;
    Ok((0..=n).map(|t| class_for(m, n, t)).collect())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            go(items, k + 1, out);
            items.swap(k, i);
        }
    }
    let mut items: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    go(&mut items, 0, &mut out);
    out
}

/// The `2 n!` automorphisms of the underlying book: a page permutation,
/// optionally composed with the `u <-> v` swap that reverses every page path.
/// Each map is checked to preserve the edge multiset before it is returned.
/// A single page is just a cycle (dihedral symmetry), handled by brute force.
pub fn book_automorphisms(m: usize, n: usize, budget: &Budget) -> Result<Vec<Vec<usize>>> {
    let g = build_book(&BookSpec::plain(m, n))?;
    if n == 1 {
        return g.graph_isomorphisms(&g, budget);
    }
    let mut keys: Vec<(usize, usize)> = g.edges().iter().map(|e| e.key()).collect();
    keys.sort_unstable();
    let mut maps = Vec::new();
    for perm in permutations(n) {
        for swap in [false, true] {
            let mut f: Vec<usize> = vec![0; g.vertex_count()];
            f[0] = usize::from(swap);
            f[1] = usize::from(!swap);
            for page in 1..=n {
                for k in 1..=(m - 2) {
                    let kk = if swap { m - 1 - k } else { k };
                    f[interior_index(m, page, k)] = interior_index(m, perm[page - 1] + 1, kk);
                }
            }
            let mut image: Vec<(usize, usize)> =
                g.relabel(&f)?.edges().iter().map(|e| e.key()).collect();
            image.sort_unstable();
            if image != keys {
                return Err(Error::CrossCheckFailed(String::from(
                    "book automorphism failed the adjacency check",
                )));
            }
            maps.push(f);
        }
    }
    Ok(maps)
}

fn signed_modes_only(mode: ColoringMode) -> Result<()> {
    if mode == ColoringMode::Unsigned {
        return Err(Error::InvalidBookParameters(String::from(
            "family has negative edges; use signed or balanced mode",
        )));
    }
    Ok(())
}

/// `(lambda - 1)^l`, tagged with the mode's parity: attaching a pendant path
/// of `l` vertices multiplies the chromatic polynomial by one less than the
/// palette size per vertex, at both parities.
pub fn path_attach_factor(l: usize, mode: ColoringMode) -> IntPolynomial {
    IntPolynomial::from_i64_coeffs(&[-1, 1], Parity::All).pow(l).with_parity(mode.parity())
}

/// Chromatic polynomial of the unbalanced cycle of length `n`: directly
/// `(lambda - 1)^n` in signed mode; in balanced mode by the deletion
/// recursion chi_n = lambda (lambda-1)^{n-1} - chi_{n-1} from the digon.
pub fn formula_unbalanced_cycle(n: usize, mode: ColoringMode) -> Result<IntPolynomial> {
    if n < 2 {
        return Err(Error::InvalidBookParameters(String::from("cycles need length at least 2")));
    }
    signed_modes_only(mode)?;
    let edge_factor = IntPolynomial::from_i64_coeffs(&[-1, 1], Parity::All);
    let p = if mode == ColoringMode::Signed {
        edge_factor.pow(n)
    } else {
        let mut chi = IntPolynomial::from_i64_coeffs(&[0, -2, 1], Parity::All);
        for j in 3..=n {
            let open_path = &IntPolynomial::variable() * &edge_factor.pow(j - 1);
            chi = &open_path - &chi;
        }
        chi
    };
    Ok(p.with_parity(mode.parity()))
}

/// The factor a book gains per extra page: the alternating sum
/// `sum_{i=0}^{m-2} (-1)^i (lambda-1)^{(m-2)-i}` produced by running
/// deletion-contraction along one page path.
fn page_factor(m: usize) -> IntPolynomial {
    let coeffs: Vec<i64> = (0..=(m - 2)).map(|j| if (m - j) % 2 == 0 { 1 } else { -1 }).collect();
    IntPolynomial::from_i64_coeffs(&coeffs, Parity::All).compose_with_affine(1, -1)
}

/// The same alternating sum with its constant term dropped (`i` stops at
/// `m-3`); this is the factor when the shared edge itself is negative.
fn truncated_page_factor(m: usize) -> IntPolynomial {
    let parity_term = IntPolynomial::constant(BigInt::from(if m % 2 == 0 { 1 } else { -1 }));
    &page_factor(m) - &parity_term
}

/// Book with the shared edge replaced by a +/- digon: one page is the
/// unbalanced digon base, every further page contributes a page factor.
pub fn formula_digon_book(m: usize, n: usize, mode: ColoringMode) -> Result<IntPolynomial> {
    BookSpec::digon(m, n).validate()?;
    signed_modes_only(mode)?;
    let digon = if mode == ColoringMode::Signed {
        // c(u) notin {c(v), -c(v)}
        IntPolynomial::from_i64_coeffs(&[-1, 1], Parity::All).pow(2)
    } else {
        IntPolynomial::from_i64_coeffs(&[0, -2, 1], Parity::All)
    };
    Ok((&page_factor(m).pow(n) * &digon).with_parity(mode.parity()))
}

/// All-positive book: the cycle polynomial to the `n`-th power, divided by
/// the shared-edge overlap `[lambda (lambda - 1)]^{n-1}`.
pub fn formula_unsigned_book(m: usize, n: usize) -> Result<IntPolynomial> {
    BookSpec::plain(m, n).validate()?;
    let edge_factor = IntPolynomial::from_i64_coeffs(&[-1, 1], Parity::All);
    let alternating = BigInt::from(if m % 2 == 0 { 1 } else { -1 });
    let cycle = &edge_factor.pow(m) + &edge_factor.scale(&alternating);
    let overlap = IntPolynomial::from_i64_coeffs(&[0, -1, 1], Parity::All).pow(n - 1);
    cycle.pow(n).exact_divide(&overlap)
}

/// Signature `{uv}` on an `n`-page book.  Deleting and contracting along the
/// last page's path peels it off with the truncated factor but leaves a
/// digon-book correction behind, signed by the page length's parity.
fn shared_edge_only(m: usize, n: usize, mode: ColoringMode) -> Result<IntPolynomial> {
    if n == 1 {
        // a one-page book with {uv} negative is the unbalanced m-cycle
        return Ok(formula_unbalanced_cycle(m, mode)?.with_parity(Parity::All));
    }
    let rec = shared_edge_only(m, n - 1, mode)?;
    let tail = formula_digon_book(m, n - 1, mode)?.with_parity(Parity::All);
    let tail_sign = BigInt::from(if m % 2 == 0 { 1 } else { -1 });
    Ok(&(&truncated_page_factor(m) * &rec) + &tail.scale(&tail_sign))
}

/// `l` negative spokes on an `n`-page book: peel balanced pages until only
/// the unbalanced ones remain, then a switch at `u` trades the `l = n`
/// spokes for the single negative shared edge.
fn spokes_only(m: usize, n: usize, l: usize, mode: ColoringMode) -> Result<IntPolynomial> {
    if n > l {
        return Ok(&page_factor(m) * &spokes_only(m, n - 1, l, mode)?);
    }
    shared_edge_only(m, n, mode)
}

/// Chromatic polynomial of the book with `l` negative edges at `u`
/// (`has_uv`: one of them is the shared edge).  `l = 0` is the all-positive
/// book, whose coefficients are the same at every parity.
pub fn formula_signed_book(
    m: usize,
    n: usize,
    l: usize,
    has_uv: bool,
    mode: ColoringMode,
) -> Result<IntPolynomial> {
    if l == 0 {
        return Ok(formula_signed_book_spec(&BookSpec::plain(m, n), mode)?);
    }
    let spec = if has_uv { BookSpec::star(m, n, l) } else { BookSpec::signed(m, n, l) };
    formula_signed_book_spec(&spec, mode)
}

fn formula_signed_book_spec(spec: &BookSpec, mode: ColoringMode) -> Result<IntPolynomial> {
    spec.validate()?;
    let (m, n) = (spec.m, spec.n);
    match spec.family {
        BookFamily::Plain => Ok(formula_unsigned_book(m, n)?.with_parity(mode.parity())),
        BookFamily::Digon => formula_digon_book(m, n, mode),
        BookFamily::Signed { l, with_uv } => {
            signed_modes_only(mode)?;
            // switching at u trades {uv} + (l-1) spokes for the other
            // (n+1)-l spokes, so both variants reduce to spokes only
            let spokes = if with_uv { n + 1 - l } else { l };
            Ok(spokes_only(m, n, spokes, mode)?.with_parity(mode.parity()))
        }
    }
}

/// Alternate route for the shared-edge family: descend on `l` directly
/// (each step peels one negative-spoke page), bottoming out at `{uv}`.
/// Must agree with the switching route in [`formula_signed_book`].
pub fn formula_star_book(m: usize, n: usize, l: usize, mode: ColoringMode) -> Result<IntPolynomial> {
    BookSpec::star(m, n, l.max(1)).validate()?;
    if l == 0 {
        return Err(Error::InvalidBookParameters(String::from(
            "shared-edge signatures have size at least 1",
        )));
    }
    signed_modes_only(mode)?;
    let p = if l == 1 {
        shared_edge_only(m, n, mode)?
    } else {
        &page_factor(m) * &formula_star_book(m, n - 1, l - 1, mode)?
    };
    Ok(p.with_parity(mode.parity()))
}

/// Chromatic polynomial of a union glued over a complete subgraph:
/// `chi_G chi_H / chi_intersection`.  All inputs must be unsigned-parity;
/// inexact division means the overlap was not complete.
pub fn glue_complete_intersection(
    chi_g: &IntPolynomial,
    chi_h: &IntPolynomial,
    chi_intersection: &IntPolynomial,
) -> Result<IntPolynomial> {
    for p in [chi_g, chi_h, chi_intersection] {
        if p.parity() != Parity::All {
            return Err(Error::InvalidBookParameters(String::from(
                "gluing needs unsigned-parity polynomials",
            )));
        }
    }
    (chi_g * chi_h).exact_divide(chi_intersection)
}
