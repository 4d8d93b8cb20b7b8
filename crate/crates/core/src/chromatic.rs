//! Counting proper colorings and computing chromatic polynomials.
//!
//! Three coloring rules share one properness constraint, c(w) != sign(e)*c(u)
//! across every edge:
//!
//! * signed: lambda = 2k+1 colors {-k, ..., k};
//! * balanced (zero-free): lambda = 2k colors {-k, ..., -1, 1, ..., k};
//! * unsigned: colors {1, ..., lambda}, defined for all-positive graphs only.
//!
//! A negative loop forbids color 0 at its vertex (vacuous in balanced and
//! impossible in unsigned mode); a positive loop kills every coloring, making
//! the count identically zero.  Otherwise each counting function is a monic
//! degree-|V| polynomial in lambda on its parity class, recovered exactly by
//! interpolation ([`chromatic_poly_oracle`]) or by deletion-contraction over
//! positive edges ([`chromatic_poly`]), which agree everywhere.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Edge, Sign, SignedMultigraph};
use crate::poly::{interpolate, IntPolynomial, Parity};

/// Which palette / properness convention to count with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ColoringMode {
    Signed,
    Balanced,
    Unsigned,
}

impl ColoringMode {
    pub fn parity(self) -> Parity {
        match self {
            ColoringMode::Signed => Parity::Odd,
            ColoringMode::Balanced => Parity::Even,
            ColoringMode::Unsigned => Parity::All,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ColoringMode::Signed => "signed",
            ColoringMode::Balanced => "balanced",
            ColoringMode::Unsigned => "unsigned",
        }
    }
}

/// The palette for `lambda` colors in the given mode; errors when `lambda`
/// has the wrong parity or sign.
pub fn colors_for(mode: ColoringMode, lambda: i64) -> Result<Vec<i64>> {
    let bad = || Error::ParityMismatch { lambda, mode: mode.name() };
    match mode {
        ColoringMode::Signed => {
            if lambda < 1 || lambda % 2 == 0 {
                return Err(bad());
            }
            let k = lambda / 2;
            Ok((-k..=k).collect())
        }
        ColoringMode::Balanced => {
            if lambda < 0 || lambda % 2 != 0 {
                return Err(bad());
            }
            let k = lambda / 2;
            Ok((-k..=k).filter(|&c| c != 0).collect())
        }
        ColoringMode::Unsigned => {
            if lambda < 0 {
                return Err(bad());
            }
            Ok((1..=lambda).collect())
        }
    }
}

fn check_unsigned_input(g: &SignedMultigraph) -> Result<()> {
    for (i, e) in g.edges().iter().enumerate() {
        if e.sign == Sign::Minus {
            return Err(Error::NegativeEdgeInUnsignedMode { edge_index: i });
        }
    }
    Ok(())
}

/// Count proper colorings with `lambda` colors by exhaustive backtracking.
pub fn count_proper(
    g: &SignedMultigraph,
    lambda: i64,
    mode: ColoringMode,
    budget: &Budget,
) -> Result<u64> {
    if mode == ColoringMode::Unsigned {
        check_unsigned_input(g)?;
    }
    let palette = colors_for(mode, lambda)?;
    let n = g.vertex_count();
    let tuples = (palette.len() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if tuples > budget.max_coloring_tuples as u128 {
        return Err(Error::BudgetExceeded {
            what: "coloring tuples",
            limit: budget.max_coloring_tuples as usize,
            requested: usize::try_from(tuples).unwrap_or(usize::MAX),
        });
    }

    // constraints[v]: (earlier vertex u, sign) pairs; c(v) != sign * c(u)
    let mut constraints: Vec<BTreeSet<(usize, Sign)>> = vec![BTreeSet::new(); n];
    let mut forbid_zero = vec![false; n];
    for e in g.edges() {
        if e.is_loop() {
            match e.sign {
                // c(v) != c(v): no coloring at all
                Sign::Plus => return Ok(0),
                // c(v) != -c(v): forbids 0 (already absent in balanced mode)
                Sign::Minus => forbid_zero[e.a] = true,
            }
        } else {
            let (lo, hi) = (e.a.min(e.b), e.a.max(e.b));
            constraints[hi].insert((lo, e.sign));
        }
    }

    fn extend(
        v: usize,
        n: usize,
        palette: &[i64],
        constraints: &[BTreeSet<(usize, Sign)>],
        forbid_zero: &[bool],
        chosen: &mut Vec<i64>,
        count: &mut u64,
    ) {
        if v == n {
            *count += 1;
            return;
        }
        'colors: for &c in palette {
            if forbid_zero[v] && c == 0 {
                continue;
            }
            for &(u, s) in &constraints[v] {
                let banned = match s {
                    Sign::Plus => chosen[u],
                    Sign::Minus => -chosen[u],
                };
                if c == banned {
                    continue 'colors;
                }
            }
            chosen.push(c);
            extend(v + 1, n, palette, constraints, forbid_zero, chosen, count);
            chosen.pop();
        }
    }

    let mut count = 0;
    let mut chosen = Vec::with_capacity(n);
    extend(0, n, &palette, &constraints, &forbid_zero, &mut chosen, &mut count);
    Ok(count)
}

/// The lambda values the oracle counts at: n+1 nodes of the mode's parity.
pub fn interpolation_nodes(mode: ColoringMode, vertex_count: usize) -> Vec<i64> {
    let n = vertex_count as i64;
    match mode {
        ColoringMode::Signed => (0..=n).map(|i| 2 * i + 1).collect(),
        ColoringMode::Balanced => (0..=n).map(|i| 2 * i + 2).collect(),
        ColoringMode::Unsigned => (0..=n).map(|i| i + 1).collect(),
    }
}

/// Brute-force route: count at n+1 parity-correct nodes and interpolate.
/// Independent of deletion-contraction; the reference the engine is tested
/// against.
pub fn chromatic_poly_oracle(
    g: &SignedMultigraph,
    mode: ColoringMode,
    budget: &Budget,
) -> Result<IntPolynomial> {
    let n = g.vertex_count();
    let points: Vec<(BigInt, BigInt)> = interpolation_nodes(mode, n)
        .into_iter()
        .map(|lambda| {
            count_proper(g, lambda, mode, budget).map(|c| (BigInt::from(lambda), BigInt::from(c)))
        })
        .collect::<Result<_>>()?;
    if points.iter().all(|(_, y)| y == &BigInt::from(0)) {
        // a degree <= n polynomial vanishing at n+1 nodes is identically zero
        // (exactly the positive-loop case)
        return Ok(IntPolynomial::zero().with_parity(mode.parity()));
    }
    interpolate(&points, n, mode.parity(), true)
}

/// Remove one edge, keeping every vertex.
pub fn delete_edge(g: &SignedMultigraph, index: usize) -> Result<SignedMultigraph> {
    g.edge(index)?;
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != index)
        .map(|(_, e)| *e)
        .collect();
    SignedMultigraph::new(g.vertex_count(), edges)
}

/// Contract a positive non-loop edge: identify its endpoints (denser vertex
/// numbering), drop the edge, keep every other edge; parallel copies of the
/// contracted edge become loops of their own sign.
pub fn contract_positive_edge(g: &SignedMultigraph, index: usize) -> Result<SignedMultigraph> {
    let e = g.edge(index)?;
    if e.is_loop() || e.sign != Sign::Plus {
        return Err(Error::ContractInvalidEdge { index });
    }
    let keep = e.a.min(e.b);
    let gone = e.a.max(e.b);
    let map = |v: usize| {
        let w = if v == gone { keep } else { v };
        if w > gone {
            w - 1
        } else {
            w
        }
    };
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != index)
        .map(|(_, f)| Edge::new(map(f.a), map(f.b), f.sign))
        .collect();
    SignedMultigraph::new(g.vertex_count() - 1, edges)
}

/// Canonical reduced form: endpoints normalized, same-sign parallel edges
/// merged (they impose one constraint), sorted.  Opposite-sign parallel pairs
/// survive — they are a genuinely stronger constraint.
type Canon = (usize, Vec<(usize, usize, Sign)>);

fn canonicalize(vertex_count: usize, edges: impl Iterator<Item = (usize, usize, Sign)>) -> Canon {
    let set: BTreeSet<(usize, usize, Sign)> =
        edges.map(|(a, b, s)| (a.min(b), a.max(b), s)).collect();
    (vertex_count, set.into_iter().collect())
}

/// Deletion-contraction over positive edges with memoization:
/// chi(G) = chi(G - e) - chi(G / e).  When only negative non-loop edges
/// remain, switch at an endpoint to expose a positive edge (the polynomial is
/// switching invariant); loops-only graphs are a product of per-vertex
/// factors.
pub fn chromatic_poly(
    g: &SignedMultigraph,
    mode: ColoringMode,
    budget: &Budget,
) -> Result<IntPolynomial> {
    if mode == ColoringMode::Unsigned {
        check_unsigned_input(g)?;
    }
    let canon = canonicalize(g.vertex_count(), g.edges().iter().map(|e| (e.a, e.b, e.sign)));
    let mut memo: BTreeMap<Canon, IntPolynomial> = BTreeMap::new();
    reduce(canon, mode, budget, &mut memo)
}

fn reduce(
    canon: Canon,
    mode: ColoringMode,
    budget: &Budget,
    memo: &mut BTreeMap<Canon, IntPolynomial>,
) -> Result<IntPolynomial> {
    if let Some(hit) = memo.get(&canon) {
        return Ok(hit.clone());
    }
    budget.check("deletion-contraction edges", budget.max_dc_edges, canon.1.len())?;
    let (n, ref edges) = canon;
    let parity = mode.parity();

    let result = if let Some(pos) =
        edges.iter().position(|&(a, b, s)| a != b && s == Sign::Plus)
    {
        let (a, b, _) = edges[pos];
        let deleted = {
            let mut rest = edges.clone();
            rest.remove(pos);
            (n, rest)
        };
        let contracted = {
            let keep = a; // a < b by canonical form
            let gone = b;
            let map = |v: usize| {
                let w = if v == gone { keep } else { v };
                if w > gone {
                    w - 1
                } else {
                    w
                }
            };
            canonicalize(
                n - 1,
                edges
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != pos)
                    .map(|(_, &(x, y, s))| (map(x), map(y), s)),
            )
        };
        let del = reduce(deleted, mode, budget, memo)?;
        let con = reduce(contracted, mode, budget, memo)?;
        &del - &con
    } else if let Some(&(a, _, _)) = edges.iter().find(|&&(x, y, _)| x != y) {
        // only negative non-loop edges: switch at the first one's lower
        // endpoint, which turns it positive without changing the polynomial
        let switched = canonicalize(
            n,
            edges.iter().map(|&(x, y, s)| {
                let touches_once = (x == a) != (y == a);
                (x, y, if touches_once { s.flip() } else { s })
            }),
        );
        reduce(switched, mode, budget, memo)?
    } else {
        // loops only
        if edges.iter().any(|&(_, _, s)| s == Sign::Plus) {
            IntPolynomial::zero().with_parity(parity)
        } else {
            let looped: BTreeSet<usize> = edges.iter().map(|&(a, _, _)| a).collect();
            let lambda = IntPolynomial::variable().with_parity(parity);
            let loop_factor = match mode {
                // c(v) != 0 removes one color
                ColoringMode::Signed => IntPolynomial::from_i64_coeffs(&[-1, 1], parity),
                // 0 is not a color anyway
                ColoringMode::Balanced => lambda.clone(),
                // negative loops cannot occur in validated unsigned input
                ColoringMode::Unsigned => lambda.clone(),
            };
            &lambda.pow(n - looped.len()) * &loop_factor.pow(looped.len())
        }
    };

    memo.insert(canon, result.clone());
    Ok(result)
}
