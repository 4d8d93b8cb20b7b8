//! Type-BC hyperplane arrangements and Whitney-number counting.
//!
//! Proper signed colorings of a graph on coordinates 0..n are the integer
//! points avoiding its graphic sub-arrangement of BC_n (x_i = x_j for a
//! positive edge, x_i = -x_j for a negative one, x_i = 0 for a negative
//! loop).  Counting them reduces to the *chromatic poset* of the complement
//! arrangement C: the flats of C all of whose ambient closure also lies in C.
//! Each such flat of rank i contains exactly 2^(n-i) (k)_(n-i) generic points
//! of the palette (points on the flat avoiding every removed hyperplane), so
//!
//! ```text
//! chi(2k+1)   = sum_i w_i 2^(n-i) (k)_(n-i)      (signed; C = BC_n \ B)
//! chi_b(2k)   = same sum                          (balanced; C = BC_n \ B0)
//! chi(k)      = sum_i w_i (k)_(n-i)               (unsigned; C = H(K_n) \ H(G))
//! ```
//!
//! where w_i counts poset elements of rank i.  The closure filter matters:
//! a flat lying on a *removed* hyperplane carries no proper colorings at all
//! and must not be counted, even though it is an intersection of complement
//! hyperplanes.  [`intersection_lattice`] builds the unfiltered lattice of an
//! arbitrary sub-arrangement; [`chromatic_poset`] applies the filter.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::budget::Budget;
use crate::chromatic::ColoringMode;
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedMultigraph};
use crate::poly::{self, FallingFactorial, IntPolynomial, Parity};

/// A hyperplane of the type-BC arrangement in dimension n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Hyperplane {
    /// x_i = 0
    Zero(usize),
    /// x_i = x_j with i < j
    Equal(usize, usize),
    /// x_i = -x_j with i < j
    Opposite(usize, usize),
}

impl Hyperplane {
    /// `x_i = x_j`; endpoints must differ.
    pub fn equal(i: usize, j: usize) -> Hyperplane {
        assert!(i != j, "x_i = x_i is not a hyperplane");
        Hyperplane::Equal(i.min(j), i.max(j))
    }

    /// `x_i = -x_j`; `i == j` degenerates to `x_i = 0`.
    pub fn opposite(i: usize, j: usize) -> Hyperplane {
        if i == j {
            Hyperplane::Zero(i)
        } else {
            Hyperplane::Opposite(i.min(j), i.max(j))
        }
    }

    fn max_coordinate(&self) -> usize {
        match *self {
            Hyperplane::Zero(i) => i,
            Hyperplane::Equal(_, j) | Hyperplane::Opposite(_, j) => j,
        }
    }
}

/// The full type-BC arrangement: n^2 hyperplanes.
pub fn bc_arrangement(n: usize) -> Vec<Hyperplane> {
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        out.push(Hyperplane::Zero(i));
    }
    for i in 0..n {
        for j in i + 1..n {
            out.push(Hyperplane::Equal(i, j));
            out.push(Hyperplane::Opposite(i, j));
        }
    }
    out
}

/// The arrangement of the complete graph: equality hyperplanes only.
pub fn complete_graphic_arrangement(n: usize) -> Vec<Hyperplane> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(Hyperplane::Equal(i, j));
        }
    }
    out
}

/// The properness hyperplanes of a signed graph; loops map to `x_i = 0` and
/// duplicates collapse.
pub fn graphic_arrangement(g: &SignedMultigraph) -> Vec<Hyperplane> {
    let set: BTreeSet<Hyperplane> = g
        .edges()
        .iter()
        .map(|e| {
            if e.is_loop() {
                Hyperplane::Zero(e.a)
            } else {
                match e.sign {
                    Sign::Plus => Hyperplane::equal(e.a, e.b),
                    Sign::Minus => Hyperplane::opposite(e.a, e.b),
                }
            }
        })
        .collect();
    set.into_iter().collect()
}

fn reject_positive_loops(g: &SignedMultigraph) -> Result<()> {
    for (i, e) in g.edges().iter().enumerate() {
        if e.is_loop() && e.sign == Sign::Plus {
            return Err(Error::PositiveLoopUnsupported { edge_index: i });
        }
    }
    Ok(())
}

fn difference(ambient: Vec<Hyperplane>, removed: &[Hyperplane]) -> Vec<Hyperplane> {
    let removed: BTreeSet<Hyperplane> = removed.iter().copied().collect();
    ambient.into_iter().filter(|h| !removed.contains(h)).collect()
}

/// `BC_n` minus the graph's arrangement (signed colorings).
pub fn complement_for_signed(g: &SignedMultigraph) -> Result<Vec<Hyperplane>> {
    reject_positive_loops(g)?;
    Ok(difference(bc_arrangement(g.vertex_count()), &graphic_arrangement(g)))
}

/// `BC_n` minus the graph's arrangement and every `x_i = 0` (balanced
/// colorings exclude the color zero at each vertex).
pub fn complement_for_balanced(g: &SignedMultigraph) -> Result<Vec<Hyperplane>> {
    reject_positive_loops(g)?;
    let n = g.vertex_count();
    let mut removed = graphic_arrangement(g);
    removed.extend((0..n).map(Hyperplane::Zero));
    Ok(difference(bc_arrangement(n), &removed))
}

/// `H(K_n)` minus the graph's arrangement; requires an all-positive,
/// loop-free graph.
pub fn complement_for_unsigned(g: &SignedMultigraph) -> Result<Vec<Hyperplane>> {
    for (i, e) in g.edges().iter().enumerate() {
        if e.sign == Sign::Minus {
            return Err(Error::NegativeEdgeInUnsignedMode { edge_index: i });
        }
        if e.is_loop() {
            return Err(Error::PositiveLoopUnsupported { edge_index: i });
        }
    }
    Ok(difference(complete_graphic_arrangement(g.vertex_count()), &graphic_arrangement(g)))
}

/// Which ambient arrangement closures are measured against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AmbientKind {
    /// All of BC_n (signed and balanced colorings).
    TypeBc,
    /// Equality hyperplanes only (unsigned colorings).
    CompleteGraphic,
}

impl AmbientKind {
    fn hyperplanes(self, n: usize) -> Vec<Hyperplane> {
        match self {
            AmbientKind::TypeBc => bc_arrangement(n),
            AmbientKind::CompleteGraphic => complete_graphic_arrangement(n),
        }
    }
}

/// Per-coordinate state of a flat: pinned to zero, or equal to plus/minus the
/// block leader's coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum FlatCoord {
    Zero,
    Linked { leader: usize, sign: Sign },
}

/// A flat of BC_n: an assignment x_i = 0 on a zero set together with a signed
/// partition of the remaining coordinates (x_i = sign_i * x_leader within each
/// block).  Canonical form: the leader is the least coordinate of its block
/// and carries `Plus`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SignedFlat {
    coords: Vec<FlatCoord>,
}

impl SignedFlat {
    /// The whole space: every coordinate its own block.
    pub fn ambient(n: usize) -> SignedFlat {
        SignedFlat {
            coords: (0..n).map(|i| FlatCoord::Linked { leader: i, sign: Sign::Plus }).collect(),
        }
    }

    pub fn ambient_dimension(&self) -> usize {
        self.coords.len()
    }

    /// Codimension: coordinates minus blocks.
    pub fn rank(&self) -> usize {
        self.coords.len() - self.block_leaders().len()
    }

    fn block_leaders(&self) -> Vec<usize> {
        self.coords
            .iter()
            .enumerate()
            .filter_map(|(i, c)| match c {
                FlatCoord::Linked { leader, .. } if *leader == i => Some(i),
                _ => None,
            })
            .collect()
    }

    /// Coordinates pinned to zero, ascending.
    pub fn zero_set(&self) -> Vec<usize> {
        self.coords
            .iter()
            .enumerate()
            .filter_map(|(i, c)| matches!(c, FlatCoord::Zero).then_some(i))
            .collect()
    }

    /// Signed blocks ordered by leader; within a block, members ascend and
    /// the leader carries `Plus`.
    pub fn blocks(&self) -> Vec<Vec<(usize, Sign)>> {
        let leaders = self.block_leaders();
        let mut blocks = vec![Vec::new(); leaders.len()];
        for (i, c) in self.coords.iter().enumerate() {
            if let FlatCoord::Linked { leader, sign } = c {
                let slot = leaders.binary_search(leader).expect("leader indexes a block");
                blocks[slot].push((i, *sign));
            }
        }
        blocks
    }

    fn state(&self, i: usize) -> FlatCoord {
        self.coords[i]
    }

    /// Is the flat contained in the hyperplane?
    pub fn lies_in(&self, h: Hyperplane) -> bool {
        match h {
            Hyperplane::Zero(i) => matches!(self.state(i), FlatCoord::Zero),
            Hyperplane::Equal(i, j) | Hyperplane::Opposite(i, j) => {
                let want = if matches!(h, Hyperplane::Equal(..)) { Sign::Plus } else { Sign::Minus };
                match (self.state(i), self.state(j)) {
                    (FlatCoord::Zero, FlatCoord::Zero) => true,
                    (
                        FlatCoord::Linked { leader: li, sign: si },
                        FlatCoord::Linked { leader: lj, sign: sj },
                    ) => li == lj && si * sj == want,
                    _ => false,
                }
            }
        }
    }

    fn zero_out(&mut self, leader: usize) {
        for c in &mut self.coords {
            if matches!(c, FlatCoord::Linked { leader: l, .. } if *l == leader) {
                *c = FlatCoord::Zero;
            }
        }
    }

    /// Intersect with one hyperplane.  A contained hyperplane is a no-op;
    /// otherwise the rank grows by exactly one (merge two blocks, or send a
    /// block to zero).
    pub fn intersect(&self, h: Hyperplane) -> SignedFlat {
        if self.lies_in(h) {
            return self.clone();
        }
        let mut out = self.clone();
        match h {
            Hyperplane::Zero(i) => {
                let FlatCoord::Linked { leader, .. } = out.state(i) else {
                    unreachable!("contained case handled above");
                };
                out.zero_out(leader);
            }
            Hyperplane::Equal(i, j) | Hyperplane::Opposite(i, j) => {
                let want = if matches!(h, Hyperplane::Equal(..)) { Sign::Plus } else { Sign::Minus };
                match (out.state(i), out.state(j)) {
                    (FlatCoord::Zero, FlatCoord::Linked { leader, .. }) => out.zero_out(leader),
                    (FlatCoord::Linked { leader, .. }, FlatCoord::Zero) => out.zero_out(leader),
                    (
                        FlatCoord::Linked { leader: li, sign: si },
                        FlatCoord::Linked { leader: lj, sign: sj },
                    ) => {
                        if li == lj {
                            // x_i = want * x_j conflicts with the recorded
                            // relation, forcing the whole block to zero
                            out.zero_out(li);
                        } else {
                            // x_i = si x_li, x_j = sj x_lj, x_i = want * x_j
                            // => x_(big leader) = (si * want * sj) x_(small)
                            let (small, big) = (li.min(lj), li.max(lj));
                            let factor = si * want * sj;
                            for c in &mut out.coords {
                                if let FlatCoord::Linked { leader, sign } = c {
                                    if *leader == big {
                                        *c = FlatCoord::Linked {
                                            leader: small,
                                            sign: *sign * factor,
                                        };
                                    }
                                }
                            }
                        }
                    }
                    (FlatCoord::Zero, FlatCoord::Zero) => unreachable!("contained case"),
                }
            }
        }
        debug_assert_eq!(out.rank(), self.rank() + 1);
        out
    }
}

fn check_dimension(n: usize, hyperplanes: &[Hyperplane], budget: &Budget) -> Result<()> {
    budget.check("arrangement coordinates", budget.max_arrangement_dim, n)?;
    for h in hyperplanes {
        let c = h.max_coordinate();
        if c >= n {
            return Err(Error::VertexOutOfRange { vertex: c, vertex_count: n });
        }
    }
    Ok(())
}

fn build_levels(
    n: usize,
    hyperplanes: &[Hyperplane],
    keep: impl Fn(&SignedFlat) -> bool,
) -> Vec<(SignedFlat, usize)> {
    let mut out = Vec::new();
    let mut current: BTreeSet<SignedFlat> = BTreeSet::new();
    current.insert(SignedFlat::ambient(n));
    let mut rank = 0;
    while !current.is_empty() {
        out.extend(current.iter().cloned().map(|f| (f, rank)));
        let mut next = BTreeSet::new();
        for flat in &current {
            for &h in hyperplanes {
                if flat.lies_in(h) {
                    continue;
                }
                let deeper = flat.intersect(h);
                if keep(&deeper) {
                    next.insert(deeper);
                }
            }
        }
        current = next;
        rank += 1;
    }
    out
}

/// All flats of the sub-arrangement, with ranks, built level by level.
pub fn intersection_lattice(
    n: usize,
    hyperplanes: &[Hyperplane],
    budget: &Budget,
) -> Result<Vec<(SignedFlat, usize)>> {
    check_dimension(n, hyperplanes, budget)?;
    Ok(build_levels(n, hyperplanes, |_| true))
}

/// The chromatic poset of a complement arrangement: flats of `complement`
/// whose full ambient closure stays inside `complement`.  Flats touching a
/// removed hyperplane carry no proper colorings and are dropped.
pub fn chromatic_poset(
    n: usize,
    complement: &[Hyperplane],
    ambient: AmbientKind,
    budget: &Budget,
) -> Result<Vec<(SignedFlat, usize)>> {
    check_dimension(n, complement, budget)?;
    let available: BTreeSet<Hyperplane> = complement.iter().copied().collect();
    let ambient_planes = ambient.hyperplanes(n);
    let keep = |flat: &SignedFlat| {
        ambient_planes.iter().all(|&h| !flat.lies_in(h) || available.contains(&h))
    };
    Ok(build_levels(n, complement, keep))
}

/// Rank-indexed element counts of a chromatic poset; index 0 is the ambient
/// flat, so `counts()[0] == 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhitneyVector {
    counts: Vec<u64>,
}

impl WhitneyVector {
    pub fn from_counts(counts: Vec<u64>) -> Self {
        WhitneyVector { counts }
    }

    /// Counts by rank, length `dimension + 1`.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn dimension(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }
}

/// Whitney numbers of the chromatic poset, padded to ranks `0..=n`.
pub fn whitney_numbers(
    n: usize,
    complement: &[Hyperplane],
    ambient: AmbientKind,
    budget: &Budget,
) -> Result<WhitneyVector> {
    let poset = chromatic_poset(n, complement, ambient, budget)?;
    let mut counts = vec![0u64; n + 1];
    for (_, rank) in poset {
        counts[rank] += 1;
    }
    Ok(WhitneyVector { counts })
}

/// Assemble the chromatic polynomial from Whitney numbers.
///
/// Signed and balanced modes weight rank i by `2^(n-i) (k)_(n-i)` and then
/// substitute `k = (lambda-1)/2` resp. `k = lambda/2`; unsigned uses
/// `(k)_(n-i)` with `k = lambda`.
pub fn chromatic_from_whitney(w: &WhitneyVector, mode: ColoringMode) -> Result<IntPolynomial> {
    let n = w.dimension();
    let mut in_k = IntPolynomial::zero();
    for (i, &wi) in w.counts().iter().enumerate() {
        if wi == 0 {
            continue;
        }
        let order = n - i;
        let mut weight = BigInt::from(wi);
        if mode != ColoringMode::Unsigned {
            weight *= BigInt::from(1u8) << order;
        }
        in_k = &in_k + &FallingFactorial { order }.expand().scale(&weight);
    }
    match mode {
        ColoringMode::Signed => {
            poly::substitute_affine_rational(&in_k, 1, 2, -1, 2, Parity::Odd)
        }
        ColoringMode::Balanced => poly::substitute_affine_rational(&in_k, 1, 2, 0, 1, Parity::Even),
        ColoringMode::Unsigned => Ok(in_k.with_parity(Parity::All)),
    }
}

/// One-call route from a graph to its chromatic polynomial through the
/// arrangement machinery.
pub fn chromatic_via_whitney(
    g: &SignedMultigraph,
    mode: ColoringMode,
    budget: &Budget,
) -> Result<IntPolynomial> {
    let n = g.vertex_count();
    let (complement, ambient) = match mode {
        ColoringMode::Signed => (complement_for_signed(g)?, AmbientKind::TypeBc),
        ColoringMode::Balanced => (complement_for_balanced(g)?, AmbientKind::TypeBc),
        ColoringMode::Unsigned => (complement_for_unsigned(g)?, AmbientKind::CompleteGraphic),
    };
    let w = whitney_numbers(n, &complement, ambient, budget)?;
    chromatic_from_whitney(&w, mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::{chromatic_poly, chromatic_poly_oracle};
    use crate::graph::Edge;

    fn graph(n: usize, edges: &[(usize, usize, i8)]) -> SignedMultigraph {
        SignedMultigraph::new(
            n,
            edges
                .iter()
                .map(|&(a, b, s)| Edge::new(a, b, if s >= 0 { Sign::Plus } else { Sign::Minus }))
                .collect(),
        )
        .unwrap()
    }

    fn whitney_of(g: &SignedMultigraph, mode: ColoringMode) -> Vec<u64> {
        let budget = Budget::default();
        let n = g.vertex_count();
        let (c, ambient) = match mode {
            ColoringMode::Signed => (complement_for_signed(g).unwrap(), AmbientKind::TypeBc),
            ColoringMode::Balanced => (complement_for_balanced(g).unwrap(), AmbientKind::TypeBc),
            ColoringMode::Unsigned => {
                (complement_for_unsigned(g).unwrap(), AmbientKind::CompleteGraphic)
            }
        };
        whitney_numbers(n, &c, ambient, &budget).unwrap().counts().to_vec()
    }

    #[test]
    fn bc_arrangement_size_and_content() {
        assert_eq!(bc_arrangement(0).len(), 0);
        assert_eq!(bc_arrangement(3).len(), 9);
        let bc2 = bc_arrangement(2);
        assert!(bc2.contains(&Hyperplane::Zero(0)));
        assert!(bc2.contains(&Hyperplane::Zero(1)));
        assert!(bc2.contains(&Hyperplane::Equal(0, 1)));
        assert!(bc2.contains(&Hyperplane::Opposite(0, 1)));
        assert_eq!(complete_graphic_arrangement(4).len(), 6);
    }

    #[test]
    fn graphic_arrangement_encodes_edges() {
        // digon with both signs on 2 vertices
        let d = graph(2, &[(0, 1, 1), (0, 1, -1)]);
        assert_eq!(
            graphic_arrangement(&d),
            vec![Hyperplane::Equal(0, 1), Hyperplane::Opposite(0, 1)]
        );
        // negative loop becomes x_i = 0; duplicates collapse
        let l = graph(2, &[(1, 1, -1), (0, 1, 1), (1, 0, 1)]);
        assert_eq!(
            graphic_arrangement(&l),
            vec![Hyperplane::Zero(1), Hyperplane::Equal(0, 1)]
        );
    }

    #[test]
    fn complements_match_hand_computation() {
        let d = graph(2, &[(0, 1, 1), (0, 1, -1)]);
        assert_eq!(
            complement_for_signed(&d).unwrap(),
            vec![Hyperplane::Zero(0), Hyperplane::Zero(1)]
        );
        // triangle with edges 01+, 02+, 12-
        let t = graph(3, &[(0, 1, 1), (0, 2, 1), (1, 2, -1)]);
        assert_eq!(
            complement_for_balanced(&t).unwrap(),
            vec![
                Hyperplane::Opposite(0, 1),
                Hyperplane::Opposite(0, 2),
                Hyperplane::Equal(1, 2),
            ]
        );
        // unsigned path 0-1-2: complement is the one non-edge
        let p = graph(3, &[(0, 1, 1), (1, 2, 1)]);
        assert_eq!(complement_for_unsigned(&p).unwrap(), vec![Hyperplane::Equal(0, 2)]);
        // positive loops have no encoding
        let pl = graph(1, &[(0, 0, 1)]);
        assert!(matches!(
            complement_for_signed(&pl),
            Err(Error::PositiveLoopUnsupported { edge_index: 0 })
        ));
        assert!(matches!(
            complement_for_unsigned(&pl),
            Err(Error::PositiveLoopUnsupported { edge_index: 0 })
        ));
        let neg = graph(2, &[(0, 1, -1)]);
        assert!(complement_for_unsigned(&neg).is_err());
    }

    #[test]
    fn flat_intersection_mechanics() {
        let ambient = SignedFlat::ambient(3);
        assert_eq!(ambient.rank(), 0);
        assert_eq!(ambient.blocks().len(), 3);

        // x_0 = 0
        let z = ambient.intersect(Hyperplane::Zero(0));
        assert_eq!(z.rank(), 1);
        assert_eq!(z.zero_set(), vec![0]);
        // idempotent
        assert_eq!(z.intersect(Hyperplane::Zero(0)), z);

        // merge 0 and 1 with opposite signs, then close the triangle equal:
        // x_0 = -x_1 and x_1 = x_2 leaves one block {+0, -1, -2}
        let m = ambient.intersect(Hyperplane::Opposite(0, 1)).intersect(Hyperplane::Equal(1, 2));
        assert_eq!(m.rank(), 2);
        assert_eq!(
            m.blocks(),
            vec![vec![(0, Sign::Plus), (1, Sign::Minus), (2, Sign::Minus)]]
        );
        assert!(m.lies_in(Hyperplane::Opposite(0, 2)));
        assert!(!m.lies_in(Hyperplane::Equal(0, 2)));

        // conflicting relation collapses the block to zero
        let c = m.intersect(Hyperplane::Equal(0, 1));
        assert_eq!(c.zero_set(), vec![0, 1, 2]);
        assert_eq!(c.rank(), 3);

        // zero spreads through a block one hyperplane at a time
        let zz = ambient.intersect(Hyperplane::Equal(0, 1)).intersect(Hyperplane::Zero(1));
        assert_eq!(zz.zero_set(), vec![0, 1]);
        assert_eq!(zz.rank(), 2);
    }

    #[test]
    fn naive_lattice_versus_chromatic_poset() {
        let budget = Budget::default();
        // complement of the all-signs digon: {x_0 = 0, x_1 = 0}
        let comp = vec![Hyperplane::Zero(0), Hyperplane::Zero(1)];
        let lattice = intersection_lattice(2, &comp, &budget).unwrap();
        let mut naive = [0u64; 3];
        for (_, r) in &lattice {
            naive[*r] += 1;
        }
        // the naive lattice contains the origin ...
        assert_eq!(naive, [1, 2, 1]);
        // ... but the origin lies on the removed hyperplane x_0 = x_1 and
        // carries no proper coloring, so the chromatic poset drops it
        let w = whitney_numbers(2, &comp, AmbientKind::TypeBc, &budget).unwrap();
        assert_eq!(w.counts(), &[1, 2, 0]);
    }

    #[test]
    fn whitney_vectors_of_small_graphs() {
        let digon = graph(2, &[(0, 1, 1), (0, 1, -1)]);
        assert_eq!(whitney_of(&digon, ColoringMode::Signed), vec![1, 2, 0]);
        assert_eq!(whitney_of(&digon, ColoringMode::Balanced), vec![1, 0, 0]);

        let t = graph(3, &[(0, 1, 1), (0, 2, 1), (1, 2, -1)]);
        assert_eq!(whitney_of(&t, ColoringMode::Balanced), vec![1, 3, 1, 0]);

        let p = graph(3, &[(0, 1, 1), (1, 2, 1)]);
        assert_eq!(whitney_of(&p, ColoringMode::Unsigned), vec![1, 1, 0, 0]);

        // single edge on 3 vertices: the closure filter removes the rank-2
        // all-equal flat (it lies on the removed hyperplane)
        let e = graph(3, &[(0, 1, 1)]);
        assert_eq!(whitney_of(&e, ColoringMode::Unsigned), vec![1, 2, 0, 0]);
    }

    #[test]
    fn polynomials_from_whitney_vectors() {
        // signed digon: 4k(k-1) + 2*2k = 4k^2 -> (λ-1)^2
        let w = WhitneyVector::from_counts(vec![1, 2, 0]);
        let p = chromatic_from_whitney(&w, ColoringMode::Signed).unwrap();
        assert_eq!(p, IntPolynomial::from_i64_coeffs(&[1, -2, 1], Parity::Odd));

        let wb = WhitneyVector::from_counts(vec![1, 0, 0]);
        let pb = chromatic_from_whitney(&wb, ColoringMode::Balanced).unwrap();
        assert_eq!(pb, IntPolynomial::from_i64_coeffs(&[0, -2, 1], Parity::Even));

        // balanced triangle vector: 8k^3 - 12k^2 + 6k -> λ^3 - 3λ^2 + 3λ
        let wt = WhitneyVector::from_counts(vec![1, 3, 1, 0]);
        let pt = chromatic_from_whitney(&wt, ColoringMode::Balanced).unwrap();
        assert_eq!(pt, IntPolynomial::from_i64_coeffs(&[0, 3, -3, 1], Parity::Even));

        // unsigned path: k(k-1)^2
        let wp = WhitneyVector::from_counts(vec![1, 1, 0, 0]);
        let pp = chromatic_from_whitney(&wp, ColoringMode::Unsigned).unwrap();
        assert_eq!(pp, IntPolynomial::from_i64_coeffs(&[0, 1, -2, 1], Parity::All));
    }

    #[test]
    fn whitney_route_agrees_with_engine_and_oracle() {
        let budget = Budget::default();
        let zoo = [
            graph(0, &[]),
            graph(1, &[]),
            graph(1, &[(0, 0, -1)]),
            graph(2, &[(0, 1, -1)]),
            graph(2, &[(0, 1, 1), (0, 1, -1)]),
            graph(2, &[(0, 1, 1), (0, 1, -1), (0, 0, -1), (1, 1, -1)]),
            graph(3, &[(0, 1, 1), (0, 2, 1), (1, 2, -1)]),
            graph(3, &[(0, 1, -1), (0, 2, -1), (1, 2, -1)]),
            graph(4, &[(0, 1, 1), (1, 2, -1), (2, 3, 1), (3, 0, -1), (0, 2, 1)]),
        ];
        for g in &zoo {
            for mode in [ColoringMode::Signed, ColoringMode::Balanced] {
                let via_whitney = chromatic_via_whitney(g, mode, &budget).unwrap();
                let engine = chromatic_poly(g, mode, &budget).unwrap();
                assert_eq!(via_whitney, engine, "whitney vs engine on {g:?} {mode:?}");
            }
        }
        // unsigned route on all-positive simple graphs
        let simple = [
            graph(3, &[(0, 1, 1), (1, 2, 1)]),
            graph(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]),
            graph(4, &[]),
        ];
        for g in &simple {
            let via_whitney = chromatic_via_whitney(g, ColoringMode::Unsigned, &budget).unwrap();
            let oracle = chromatic_poly_oracle(g, ColoringMode::Unsigned, &budget).unwrap();
            assert_eq!(via_whitney, oracle);
        }
    }

    #[test]
    fn dimension_budget_and_bad_indices() {
        let budget = Budget::default();
        assert!(matches!(
            intersection_lattice(10, &[], &budget),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(matches!(
            chromatic_poset(2, &[Hyperplane::Zero(5)], AmbientKind::TypeBc, &budget),
            Err(Error::VertexOutOfRange { vertex: 5, vertex_count: 2 })
        ));
    }

    #[test]
    fn empty_dimension_has_one_empty_flat() {
        let budget = Budget::default();
        let w = whitney_numbers(0, &[], AmbientKind::TypeBc, &budget).unwrap();
        assert_eq!(w.counts(), &[1]);
        let p = chromatic_from_whitney(&w, ColoringMode::Signed).unwrap();
        assert_eq!(p, IntPolynomial::one().with_parity(Parity::Odd));
    }
}
