//! Signed multigraphs and the switching machinery.
//!
//! Vertices are `0..vertex_count`; edges are unordered endpoint pairs with a
//! sign, stored in insertion order.  Parallel edges and loops are allowed.
//! Switching at a vertex negates every non-loop edge incident to it; two
//! signatures on the same underlying graph are switching equivalent exactly
//! when every cycle has the same sign product under both, which the functions
//! here decide constructively through spanning-forest potentials.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::budget::Budget;
use crate::error::{Error, Result};

/// Edge sign; multiplication is the group Z/2 written multiplicatively.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Plus
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl core::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// An undirected signed edge; `a == b` is a loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub sign: Sign,
}

impl Edge {
    pub fn new(a: usize, b: usize, sign: Sign) -> Self {
        Edge { a, b, sign }
    }

    pub fn is_loop(&self) -> bool {
        self.a == self.b
    }

    /// Endpoints as (min, max); identifies parallel edges.
    pub fn key(&self) -> (usize, usize) {
        (self.a.min(self.b), self.a.max(self.b))
    }

    fn other(&self, v: usize) -> usize {
        if v == self.a {
            self.b
        } else {
            self.a
        }
    }
}

/// A per-vertex sign assignment; acting on a graph negates every edge with
/// exactly one endpoint in the negative part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchingVector {
    signs: Vec<Sign>,
}

impl SwitchingVector {
    pub fn identity(vertex_count: usize) -> Self {
        SwitchingVector { signs: vec![Sign::Plus; vertex_count] }
    }

    pub fn from_signs(signs: Vec<Sign>) -> Self {
        SwitchingVector { signs }
    }

    /// Identity except `Minus` at the listed vertices.
    pub fn from_negatives(vertex_count: usize, negatives: &[usize]) -> Result<Self> {
        let mut v = Self::identity(vertex_count);
        for &x in negatives {
            if x >= vertex_count {
                return Err(Error::VertexOutOfRange { vertex: x, vertex_count });
            }
            v.signs[x] = v.signs[x].flip();
        }
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn sign_at(&self, v: usize) -> Sign {
        self.signs[v]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn is_identity(&self) -> bool {
        self.signs.iter().all(|s| s.is_positive())
    }

    /// Pointwise product; switching vectors compose commutatively.
    pub fn compose(&self, other: &SwitchingVector) -> Result<SwitchingVector> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { expected: self.len(), actual: other.len() });
        }
        Ok(SwitchingVector {
            signs: self.signs.iter().zip(&other.signs).map(|(&a, &b)| a * b).collect(),
        })
    }
}

/// Fundamental-cycle signs relative to the graph's canonical spanning forest
/// (breadth-first in vertex order, edges scanned in index order).  Two
/// signatures on the same underlying graph are switching equivalent iff their
/// profiles agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleBalanceProfile {
    /// One sign per non-forest edge, in edge-index order.  Loops always count
    /// as non-forest edges.
    signs: Vec<Sign>,
}

impl CycleBalanceProfile {
    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }
}

struct SpanningForest {
    /// Sign product of the forest path from the component root; `Plus` at roots.
    potential: Vec<Sign>,
    forest_edge: Vec<bool>,
    component_count: usize,
}

/// A signed multigraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedMultigraph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

impl SignedMultigraph {
    pub fn new(vertex_count: usize, edges: Vec<Edge>) -> Result<Self> {
        for e in &edges {
            for v in [e.a, e.b] {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange { vertex: v, vertex_count });
                }
            }
        }
        Ok(SignedMultigraph { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Result<Edge> {
        self.edges.get(index).copied().ok_or(Error::EdgeOutOfRange {
            index,
            edge_count: self.edges.len(),
        })
    }

    /// The signature as a sign list in edge-index order.
    pub fn signs(&self) -> Vec<Sign> {
        self.edges.iter().map(|e| e.sign).collect()
    }

    /// Same underlying graph, different signature.
    pub fn with_signs(&self, signs: &[Sign]) -> Result<Self> {
        if signs.len() != self.edges.len() {
            return Err(Error::LengthMismatch { expected: self.edges.len(), actual: signs.len() });
        }
        let edges = self
            .edges
            .iter()
            .zip(signs)
            .map(|(e, &s)| Edge::new(e.a, e.b, s))
            .collect();
        Ok(SignedMultigraph { vertex_count: self.vertex_count, edges })
    }

    /// True when `other` has the same vertex count and the same endpoint pair
    /// at every edge index (signs may differ).
    pub fn same_underlying(&self, other: &SignedMultigraph) -> bool {
        self.vertex_count == other.vertex_count
            && self.edges.len() == other.edges.len()
            && self.edges.iter().zip(&other.edges).all(|(e, f)| e.key() == f.key())
    }

    /// Apply a vertex bijection; edge order and signs are preserved.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.vertex_count {
            return Err(Error::LengthMismatch { expected: self.vertex_count, actual: perm.len() });
        }
        let mut seen = vec![false; self.vertex_count];
        for &p in perm {
            if p >= self.vertex_count {
                return Err(Error::VertexOutOfRange { vertex: p, vertex_count: self.vertex_count });
            }
            if seen[p] {
                return Err(Error::InvalidWalk(String::from("relabeling is not a bijection")));
            }
            seen[p] = true;
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(perm[e.a], perm[e.b], e.sign))
            .collect();
        Ok(SignedMultigraph { vertex_count: self.vertex_count, edges })
    }

    /// Negate every non-loop edge incident to `v`.
    pub fn switch_at(&self, v: usize) -> Result<Self> {
        if v >= self.vertex_count {
            return Err(Error::VertexOutOfRange { vertex: v, vertex_count: self.vertex_count });
        }
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let touches_once = (e.a == v) != (e.b == v);
                Edge::new(e.a, e.b, if touches_once { e.sign.flip() } else { e.sign })
            })
            .collect();
        Ok(SignedMultigraph { vertex_count: self.vertex_count, edges })
    }

    /// Apply a switching vector: each edge sign becomes f(a) * sign * f(b).
    /// Loops are invariant; f and -f act identically.
    pub fn apply_switching(&self, f: &SwitchingVector) -> Result<Self> {
        if f.len() != self.vertex_count {
            return Err(Error::LengthMismatch { expected: self.vertex_count, actual: f.len() });
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(e.a, e.b, f.sign_at(e.a) * e.sign * f.sign_at(e.b)))
            .collect();
        Ok(SignedMultigraph { vertex_count: self.vertex_count, edges })
    }

    /// Sign product along a closed walk given as a vertex sequence with
    /// `first == last`.  Each step uses the lowest-index edge joining the two
    /// vertices; use [`Self::cycle_sign_on_edges`] to pick specific parallel
    /// edges.
    pub fn cycle_sign(&self, walk: &[usize]) -> Result<Sign> {
        if walk.len() < 2 || walk.first() != walk.last() {
            return Err(Error::InvalidWalk(String::from(
                "walk must list at least two vertices and close up",
            )));
        }
        let mut product = Sign::Plus;
        for pair in walk.windows(2) {
            let (x, y) = (pair[0], pair[1]);
            for v in [x, y] {
                if v >= self.vertex_count {
                    return Err(Error::VertexOutOfRange { vertex: v, vertex_count: self.vertex_count });
                }
            }
            let edge = self
                .edges
                .iter()
                .find(|e| e.key() == (x.min(y), x.max(y)))
                .ok_or_else(|| Error::InvalidWalk(String::from("no edge between consecutive walk vertices")))?;
            product = product * edge.sign;
        }
        Ok(product)
    }

    /// Sign product along a closed walk given as edge indices.  The edges must
    /// chain end-to-end and return to the starting vertex.
    pub fn cycle_sign_on_edges(&self, walk: &[usize]) -> Result<Sign> {
        if walk.is_empty() {
            return Err(Error::InvalidWalk(String::from("empty edge walk")));
        }
        let mut product = Sign::Plus;
        for &i in walk {
            product = product * self.edge(i)?.sign;
        }
        let first = self.edge(walk[0])?;
        'orient: for start in [first.a, first.b] {
            let mut cur = first.other(start);
            for &i in &walk[1..] {
                let e = self.edge(i)?;
                if e.a != cur && e.b != cur {
                    continue 'orient;
                }
                cur = e.other(cur);
            }
            if cur == start {
                return Ok(product);
            }
        }
        Err(Error::InvalidWalk(String::from("edges do not chain into a closed walk")))
    }

    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        // adj[v] = (neighbor, edge index); loops omitted (never forest edges)
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (i, e) in self.edges.iter().enumerate() {
            if !e.is_loop() {
                adj[e.a].push((e.b, i));
                adj[e.b].push((e.a, i));
            }
        }
        adj
    }

    fn spanning_forest(&self) -> SpanningForest {
        let adj = self.adjacency();
        let mut potential = vec![Sign::Plus; self.vertex_count];
        let mut visited = vec![false; self.vertex_count];
        let mut forest_edge = vec![false; self.edges.len()];
        let mut component_count = 0;
        for root in 0..self.vertex_count {
            if visited[root] {
                continue;
            }
            component_count += 1;
            visited[root] = true;
            let mut queue = VecDeque::new();
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                for &(w, i) in &adj[v] {
                    if !visited[w] {
                        visited[w] = true;
                        forest_edge[i] = true;
                        potential[w] = potential[v] * self.edges[i].sign;
                        queue.push_back(w);
                    }
                }
            }
        }
        SpanningForest { potential, forest_edge, component_count }
    }

    /// Number of connected components (isolated vertices count).
    pub fn component_count(&self) -> usize {
        self.spanning_forest().component_count
    }

    /// Dimension of the cycle space: edges - vertices + components.
    pub fn cycle_rank(&self) -> usize {
        self.edges.len() + self.component_count() - self.vertex_count
    }

    /// A graph is balanced when every cycle has positive sign product
    /// (equivalently: switching equivalent to the all-positive signature).
    pub fn is_balanced(&self) -> bool {
        let forest = self.spanning_forest();
        self.edges
            .iter()
            .all(|e| forest.potential[e.a] * e.sign * forest.potential[e.b] == Sign::Plus)
    }

    /// Fundamental-cycle signs relative to the canonical spanning forest.
    pub fn cycle_balance_profile(&self) -> CycleBalanceProfile {
        let forest = self.spanning_forest();
        let signs = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !forest.forest_edge[*i])
            .map(|(_, e)| forest.potential[e.a] * e.sign * forest.potential[e.b])
            .collect();
        CycleBalanceProfile { signs }
    }

    /// Decide switching equivalence to `other` (same underlying graph
    /// required) and return a witnessing switching vector.
    pub fn switching_equivalent(&self, other: &SignedMultigraph) -> Result<Option<SwitchingVector>> {
        if !self.same_underlying(other) {
            return Err(Error::LengthMismatch {
                expected: self.edges.len(),
                actual: other.edges.len(),
            });
        }
        // f must satisfy f(a) f(b) = sign_self(e) * sign_other(e) on every edge;
        // solve on a spanning forest of the "requirement" signature and verify.
        let requirement = self.with_signs(
            &self
                .edges
                .iter()
                .zip(other.edges())
                .map(|(e, f)| e.sign * f.sign)
                .collect::<Vec<_>>(),
        )?;
        if !requirement.is_balanced() {
            return Ok(None);
        }
        let f = SwitchingVector::from_signs(requirement.spanning_forest().potential);
        debug_assert_eq!(&self.apply_switching(&f).unwrap(), other);
        Ok(Some(f))
    }

    /// 2^(edges - vertices + components): one class per fundamental-cycle
    /// sign profile.
    pub fn count_switching_classes(&self) -> BigUint {
        BigUint::one() << self.cycle_rank()
    }

    /// One representative signature per switching class: forest edges
    /// positive, non-forest edges running through every sign profile.
    pub fn enumerate_switching_classes(&self, budget: &Budget) -> Result<Vec<Vec<Sign>>> {
        budget.check("enumeration edges", budget.max_enumeration_edges, self.edges.len())?;
        let forest = self.spanning_forest();
        let free: Vec<usize> = (0..self.edges.len()).filter(|&i| !forest.forest_edge[i]).collect();
        let rank = free.len();
        let mut out = Vec::with_capacity(1usize << rank);
        for mask in 0u64..(1u64 << rank) {
            let mut signs = vec![Sign::Plus; self.edges.len()];
            for (bit, &i) in free.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    signs[i] = Sign::Minus;
                }
            }
            out.push(signs);
        }
        Ok(out)
    }

    fn multiplicity_matrix(&self) -> Vec<Vec<usize>> {
        let mut m = vec![vec![0usize; self.vertex_count]; self.vertex_count];
        for e in &self.edges {
            let (a, b) = e.key();
            m[a][b] += 1;
            if a != b {
                m[b][a] += 1;
            }
        }
        m
    }

    fn degree_sequence(mult: &[Vec<usize>]) -> Vec<usize> {
        (0..mult.len())
            .map(|v| {
                let loops = mult[v][v];
                let others: usize = (0..mult.len()).filter(|&w| w != v).map(|w| mult[v][w]).sum();
                others + 2 * loops
            })
            .collect()
    }

    /// All isomorphisms of underlying multigraphs (signs ignored), as maps
    /// from `self` vertices to `other` vertices.  Non-isomorphic inputs give
    /// an empty list; too many vertices is a budget error.
    pub fn graph_isomorphisms(
        &self,
        other: &SignedMultigraph,
        budget: &Budget,
    ) -> Result<Vec<Vec<usize>>> {
        budget.check(
            "isomorphism vertices",
            budget.max_iso_vertices,
            self.vertex_count.max(other.vertex_count),
        )?;
        if self.vertex_count != other.vertex_count || self.edges.len() != other.edges.len() {
            return Ok(Vec::new());
        }
        let n = self.vertex_count;
        let mg = self.multiplicity_matrix();
        let mh = other.multiplicity_matrix();
        let dg = Self::degree_sequence(&mg);
        let dh = Self::degree_sequence(&mh);
        let mut dg_sorted = dg.clone();
        let mut dh_sorted = dh.clone();
        dg_sorted.sort_unstable();
        dh_sorted.sort_unstable();
        if dg_sorted != dh_sorted {
            return Ok(Vec::new());
        }

        let mut out = Vec::new();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn extend(
            v: usize,
            n: usize,
            mg: &[Vec<usize>],
            mh: &[Vec<usize>],
            dg: &[usize],
            dh: &[usize],
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if v == n {
                out.push(map.clone());
                return;
            }
            for w in 0..n {
                if used[w] || dg[v] != dh[w] || mg[v][v] != mh[w][w] {
                    continue;
                }
                if (0..v).any(|u| mg[v][u] != mh[w][map[u]]) {
                    continue;
                }
                map[v] = w;
                used[w] = true;
                extend(v + 1, n, mg, mh, dg, dh, map, used, out);
                used[w] = false;
                map[v] = usize::MAX;
            }
        }
        extend(0, n, &mg, &mh, &dg, &dh, &mut map, &mut used, &mut out);

        // paranoia: every returned map preserves multiplicities
        debug_assert!(out.iter().all(|psi| {
            (0..n).all(|a| (a..n).all(|b| mg[a][b] == mh[psi[a]][psi[b]]))
        }));
        Ok(out)
    }

    /// Per-parallel-class sign multisets as (plus count, minus count), keyed
    /// by normalized endpoints, after pushing vertices through `map`.
    fn class_multisets(&self, signs: &[Sign], map: &[usize]) -> BTreeMap<(usize, usize), (usize, usize)> {
        let mut classes: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
        for (e, &s) in self.edges.iter().zip(signs) {
            let (a, b) = (map[e.a], map[e.b]);
            let key = (a.min(b), a.max(b));
            let entry = classes.entry(key).or_insert((0, 0));
            match s {
                Sign::Plus => entry.0 += 1,
                Sign::Minus => entry.1 += 1,
            }
        }
        classes
    }

    /// Does some automorphism of the underlying graph carry `sigma1` to
    /// `sigma2` exactly (as per-parallel-class sign multisets)?
    pub fn signatures_automorphic(
        &self,
        sigma1: &[Sign],
        sigma2: &[Sign],
        budget: &Budget,
    ) -> Result<bool> {
        for s in [sigma1, sigma2] {
            if s.len() != self.edges.len() {
                return Err(Error::LengthMismatch { expected: self.edges.len(), actual: s.len() });
            }
        }
        let identity: Vec<usize> = (0..self.vertex_count).collect();
        let target = self.class_multisets(sigma2, &identity);
        for psi in self.graph_isomorphisms(self, budget)? {
            if self.class_multisets(sigma1, &psi) == target {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Switching isomorphism: some isomorphism of underlying graphs followed
    /// by some switching carries `self`'s signature to `other`'s.
    ///
    /// Per parallel class only the sign multiset matters (switching acts on a
    /// whole class at once, but parallel edges may be permuted freely), so
    /// each class constrains the product f(a) f(b) to the set of signs that
    /// carry one multiset to the other; the constraints are solved by a
    /// spanning-forest potential.
    pub fn switching_isomorphic(&self, other: &SignedMultigraph, budget: &Budget) -> Result<bool> {
        let identity: Vec<usize> = (0..other.vertex_count).collect();
        let target = other.class_multisets(&other.signs(), &identity);
        for psi in self.graph_isomorphisms(other, budget)? {
            let pushed = self.class_multisets(&self.signs(), &psi);
            if Self::switching_feasible(other.vertex_count, &pushed, &target) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn switching_feasible(
        n: usize,
        pushed: &BTreeMap<(usize, usize), (usize, usize)>,
        target: &BTreeMap<(usize, usize), (usize, usize)>,
    ) -> bool {
        // collect per-class constraints on f(a) f(b)
        let mut constraints: Vec<(usize, usize, Sign)> = Vec::new();
        for (&(a, b), &(p, m)) in pushed {
            let &(tp, tm) = match target.get(&(a, b)) {
                Some(t) => t,
                None => return false,
            };
            let plus_ok = (p, m) == (tp, tm);
            let minus_ok = (m, p) == (tp, tm);
            if a == b {
                // loops are switching invariant
                if !plus_ok {
                    return false;
                }
                continue;
            }
            match (plus_ok, minus_ok) {
                (true, true) => {}
                (true, false) => constraints.push((a, b, Sign::Plus)),
                (false, true) => constraints.push((a, b, Sign::Minus)),
                (false, false) => return false,
            }
        }
        // solve f(a) f(b) = s by BFS potential over the constraint graph
        let mut adj = vec![Vec::new(); n];
        for (i, &(a, b, _)) in constraints.iter().enumerate() {
            adj[a].push((b, i));
            adj[b].push((a, i));
        }
        let mut f: Vec<Option<Sign>> = vec![None; n];
        for root in 0..n {
            if f[root].is_some() {
                continue;
            }
            f[root] = Some(Sign::Plus);
            let mut queue = VecDeque::new();
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                let fv = f[v].expect("queued vertices are assigned");
                for &(w, i) in &adj[v] {
                    let need = fv * constraints[i].2;
                    match f[w] {
                        None => {
                            f[w] = Some(need);
                            queue.push_back(w);
                        }
                        Some(fw) if fw != need => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }
}
