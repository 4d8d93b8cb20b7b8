//! End-to-end acceptance checks, one test per criterion.
//!
//! 1. known constants for the unbalanced 2- and 3-cycles, by all three routes
//! 2. Whitney vectors of three small chromatic posets
//! 3. book signature classification vs. brute-force switching isomorphism
//! 4. switching-orbit structure over a connected corpus
//! 5. deletion-contraction engine == counting oracle, exhaustively
//! 6. book closed forms == engine across the parameter grid
//! 7. star/spoke book identities with explicit witnesses
//! 8. universal polynomial properties (monic, switching-invariant, round-trips)

use signed_chroma_core::arrangement::{
    chromatic_via_whitney, complement_for_balanced, complement_for_signed,
    complement_for_unsigned, whitney_numbers, AmbientKind,
};
use signed_chroma_core::book::{
    build_book, classify_signature, formula_digon_book, formula_signed_book, formula_star_book,
    formula_unsigned_book, BookSpec,
};
use signed_chroma_core::chromatic::{chromatic_poly, chromatic_poly_oracle, ColoringMode};
use signed_chroma_core::poly::interpolate;
use signed_chroma_core::{
    BigInt, BigUint, Budget, Edge, IntPolynomial, Parity, Sign, SignedMultigraph, SwitchingVector,
};

fn graph(n: usize, edges: &[(usize, usize, Sign)]) -> SignedMultigraph {
    let edges = edges.iter().map(|&(a, b, s)| Edge::new(a, b, s)).collect();
    SignedMultigraph::new(n, edges).unwrap()
}

fn poly(coeffs: &[i64], parity: Parity) -> IntPolynomial {
    IntPolynomial::from_i64_coeffs(coeffs, parity)
}

fn signs_from_bits(len: usize, bits: u64) -> Vec<Sign> {
    (0..len).map(|i| if bits >> i & 1 == 1 { Sign::Minus } else { Sign::Plus }).collect()
}

/// Splitmix-style generator; fixed seeds keep the random cases reproducible.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    fn sign(&mut self) -> Sign {
        if self.next() & 1 == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

const BOTH_MODES: [ColoringMode; 2] = [ColoringMode::Signed, ColoringMode::Balanced];

fn unbalanced_two_cycle() -> SignedMultigraph {
    graph(2, &[(0, 1, Sign::Plus), (0, 1, Sign::Minus)])
}

fn unbalanced_triangle() -> SignedMultigraph {
    graph(3, &[(0, 1, Sign::Plus), (1, 2, Sign::Plus), (0, 2, Sign::Minus)])
}

#[test]
fn a1_known_constants() {
    let budget = Budget::default();
    let cases = [
        (unbalanced_two_cycle(), ColoringMode::Signed, poly(&[1, -2, 1], Parity::Odd)),
        (unbalanced_two_cycle(), ColoringMode::Balanced, poly(&[0, -2, 1], Parity::Even)),
        (unbalanced_triangle(), ColoringMode::Signed, poly(&[-1, 3, -3, 1], Parity::Odd)),
        (unbalanced_triangle(), ColoringMode::Balanced, poly(&[0, 3, -3, 1], Parity::Even)),
    ];
    for (g, mode, expected) in &cases {
        assert_eq!(&chromatic_poly(g, *mode, &budget).unwrap(), expected);
        assert_eq!(&chromatic_poly_oracle(g, *mode, &budget).unwrap(), expected);
        assert_eq!(&chromatic_via_whitney(g, *mode, &budget).unwrap(), expected);
    }
    // the same constants in the k-basis: lambda = 2k+1 resp. 2k
    assert_eq!(cases[2].2.compose_with_affine(2, 1), poly(&[0, 0, 0, 8], Parity::All));
    assert_eq!(cases[3].2.compose_with_affine(2, 0), poly(&[0, 6, -12, 8], Parity::All));
    println!("ACCEPTANCE 1 known-constants: PASS");
}

#[test]
fn a2_whitney_vectors() {
    let budget = Budget::default();

    let path3 = graph(3, &[(0, 1, Sign::Plus), (1, 2, Sign::Plus)]);
    let w = whitney_numbers(
        3,
        &complement_for_unsigned(&path3).unwrap(),
        AmbientKind::CompleteGraphic,
        &budget,
    )
    .unwrap();
    assert_eq!(w.counts(), &[1, 1, 0, 0]);

    let c2 = unbalanced_two_cycle();
    let w = whitney_numbers(2, &complement_for_signed(&c2).unwrap(), AmbientKind::TypeBc, &budget)
        .unwrap();
    assert_eq!(w.counts(), &[1, 2, 0]);

    let c3 = unbalanced_triangle();
    let w =
        whitney_numbers(3, &complement_for_balanced(&c3).unwrap(), AmbientKind::TypeBc, &budget)
            .unwrap();
    assert_eq!(w.counts(), &[1, 3, 1, 0]);

    println!("ACCEPTANCE 2 whitney-vectors: PASS");
}

#[test]
fn a3_book_signature_classification() {
    let budget = Budget::default();
    for (m, n) in [(3, 2), (3, 3), (4, 2), (4, 3), (5, 2)] {
        let plain = build_book(&BookSpec::plain(m, n)).unwrap();
        let ne = plain.edge_count();
        assert_eq!(ne, n * (m - 1) + 1);
        // partition all 2^ne signatures by brute-force switching isomorphism,
        // checking the page-count label against the partition as we go
        let mut reps: Vec<(SignedMultigraph, usize)> = Vec::new();
        for bits in 0..1u64 << ne {
            let sigma = signs_from_bits(ne, bits);
            let t = classify_signature(m, n, &sigma).unwrap().unbalanced_pages;
            let g = plain.with_signs(&sigma).unwrap();
            let mut matched = false;
            for (rep, rep_t) in &reps {
                if g.switching_isomorphic(rep, &budget).unwrap() {
                    assert_eq!(t, *rep_t, "label disagrees inside a class at ({m},{n})");
                    matched = true;
                    break;
                }
            }
            if !matched {
                assert!(
                    reps.iter().all(|(_, rep_t)| *rep_t != t),
                    "same label in two classes at ({m},{n})"
                );
                reps.push((g, t));
            }
        }
        assert_eq!(reps.len(), n + 1, "class count at ({m},{n})");
    }
    println!("ACCEPTANCE 3 book-signature-classification: PASS");
}

/// Every signature orbit of a connected graph under switching has size
/// 2^(vertices-1), and there are 2^(edges-vertices+1) of them.
fn check_orbits(g: &SignedMultigraph) {
    let nv = g.vertex_count();
    let ne = g.edge_count();
    assert!(ne <= 12);
    // flipping vertex v toggles exactly the non-loop edges touching v
    let mut toggle = vec![0usize; nv];
    for (i, e) in g.edges().iter().enumerate() {
        if !e.is_loop() {
            toggle[e.a] |= 1 << i;
            toggle[e.b] |= 1 << i;
        }
    }
    let mut seen = vec![false; 1 << ne];
    let mut orbits = 0u64;
    for start in 0..1usize << ne {
        if seen[start] {
            continue;
        }
        orbits += 1;
        let mut stack = vec![start];
        seen[start] = true;
        let mut size = 0u64;
        while let Some(s) = stack.pop() {
            size += 1;
            for v in 0..nv {
                let t = s ^ toggle[v];
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        assert_eq!(size, 1 << (nv - 1), "orbit size on {nv} vertices, {ne} edges");
    }
    assert_eq!(orbits, 1 << (ne + 1 - nv), "orbit count on {nv} vertices, {ne} edges");
    assert_eq!(BigUint::from(orbits), g.count_switching_classes());
}

#[test]
fn a4_switching_orbit_structure() {
    let mut corpus: Vec<SignedMultigraph> = Vec::new();
    // paths and stars (trees: a single orbit of size 2^(vertices-1))
    for k in 2..=13 {
        let edges: Vec<_> = (0..k - 1).map(|i| (i, i + 1, Sign::Plus)).collect();
        corpus.push(graph(k, &edges));
    }
    for k in 3..=12 {
        let edges: Vec<_> = (1..=k).map(|i| (0, i, Sign::Plus)).collect();
        corpus.push(graph(k + 1, &edges));
    }
    // a broom, for one tree that is neither
    corpus.push(graph(
        8,
        &[
            (0, 1, Sign::Plus),
            (1, 2, Sign::Plus),
            (2, 3, Sign::Plus),
            (3, 4, Sign::Plus),
            (4, 5, Sign::Plus),
            (4, 6, Sign::Plus),
            (4, 7, Sign::Plus),
        ],
    ));
    // cycles, including the loop and the digon
    corpus.push(graph(1, &[(0, 0, Sign::Plus)]));
    for k in 2..=12 {
        let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k, Sign::Plus)).collect();
        corpus.push(graph(k, &edges));
    }
    // books and digon books up to twelve edges
    for m in 3..=12 {
        for n in 1..=5 {
            let spec = BookSpec::plain(m, n);
            if spec.validate().is_ok() && spec.edge_count() <= 12 {
                corpus.push(build_book(&spec).unwrap());
            }
        }
    }
    for m in 2..=11 {
        for n in 1..=10 {
            let spec = BookSpec::digon(m, n);
            if spec.validate().is_ok() && spec.edge_count() <= 12 {
                corpus.push(build_book(&spec).unwrap());
            }
        }
    }
    assert!(corpus.len() > 60);
    for g in &corpus {
        assert_eq!(g.component_count(), 1);
        check_orbits(g);
    }
    println!("ACCEPTANCE 4 switching-orbit-structure: PASS");
}

/// Every multiset of up to `max_edges` signed edges on `nv` labeled vertices,
/// loops and parallels included.
fn for_all_multigraphs(nv: usize, max_edges: usize, f: &mut impl FnMut(&SignedMultigraph)) {
    let mut types = Vec::new();
    for a in 0..nv {
        for b in a..nv {
            for sign in [Sign::Plus, Sign::Minus] {
                types.push(Edge::new(a, b, sign));
            }
        }
    }
    fn rec(
        nv: usize,
        types: &[Edge],
        start: usize,
        left: usize,
        chosen: &mut Vec<Edge>,
        f: &mut impl FnMut(&SignedMultigraph),
    ) {
        f(&SignedMultigraph::new(nv, chosen.clone()).unwrap());
        if left == 0 {
            return;
        }
        for i in start..types.len() {
            chosen.push(types[i]);
            rec(nv, types, i, left - 1, chosen, f);
            chosen.pop();
        }
    }
    rec(nv, &types, 0, max_edges, &mut Vec::new(), f);
}

#[test]
fn a5_engine_matches_counting_oracle() {
    let budget = Budget::default();
    let checked = std::cell::Cell::new(0u64);
    let mut check = |g: &SignedMultigraph| {
        for mode in BOTH_MODES {
            assert_eq!(
                chromatic_poly(g, mode, &budget).unwrap(),
                chromatic_poly_oracle(g, mode, &budget).unwrap(),
                "engine vs oracle ({}) on {:?}",
                mode.name(),
                g.edges()
            );
        }
        checked.set(checked.get() + 1);
    };
    for nv in 1..=4 {
        for_all_multigraphs(nv, 6, &mut check);
    }
    // multisets of size <= 6 drawn from 2, 6, 12, 20 edge types
    assert_eq!(checked.get(), 28 + 924 + 18_564 + 230_230);

    let mut rng = Rng(0x5eed_0005);
    for _ in 0..200 {
        let ne = rng.below(7) as usize;
        let edges: Vec<_> = (0..ne)
            .map(|_| (rng.below(5) as usize, rng.below(5) as usize, rng.sign()))
            .collect();
        check(&graph(5, &edges));
    }
    println!("ACCEPTANCE 5 engine-matches-counting-oracle: PASS");
}

/// The (m, n) grid small enough for the engine; (5, 3) would have 11 vertices.
fn formula_grid() -> Vec<(usize, usize)> {
    let mut grid = Vec::new();
    for m in [3, 4, 5] {
        for n in [1, 2, 3] {
            if n * (m - 2) + 2 <= 10 {
                grid.push((m, n));
            }
        }
    }
    grid
}

#[test]
fn a6_book_formula_grid() {
    let budget = Budget::default();
    for (m, n) in formula_grid() {
        let plain = build_book(&BookSpec::plain(m, n)).unwrap();
        assert_eq!(
            formula_unsigned_book(m, n).unwrap(),
            chromatic_poly(&plain, ColoringMode::Unsigned, &budget).unwrap(),
            "unsigned ({m},{n})"
        );
        for l in 0..=n {
            for has_uv in [false, true] {
                let spec = if has_uv { BookSpec::star(m, n, l) } else { BookSpec::signed(m, n, l) };
                let g = build_book(&spec).unwrap();
                for mode in BOTH_MODES {
                    assert_eq!(
                        formula_signed_book(m, n, l, has_uv, mode).unwrap(),
                        chromatic_poly(&g, mode, &budget).unwrap(),
                        "family ({m},{n}) l={l} uv={has_uv} {}",
                        mode.name()
                    );
                }
            }
        }
    }
    for m in [2, 3, 4] {
        for n in [1, 2, 3] {
            let g = build_book(&BookSpec::digon(m, n)).unwrap();
            for mode in BOTH_MODES {
                assert_eq!(
                    formula_digon_book(m, n, mode).unwrap(),
                    chromatic_poly(&g, mode, &budget).unwrap(),
                    "digon ({m},{n}) {}",
                    mode.name()
                );
            }
        }
    }
    println!("ACCEPTANCE 6 book-formula-grid: PASS");
}

/// Transport a signature along the vertex map `f` (books are simple, so an
/// edge is identified by its endpoint pair).
fn pushforward(g: &SignedMultigraph, f: &[usize], sigma: &[Sign]) -> Vec<Sign> {
    let mut out = vec![Sign::Plus; sigma.len()];
    for (i, e) in g.edges().iter().enumerate() {
        let key = (f[e.a].min(f[e.b]), f[e.a].max(f[e.b]));
        let j = g.edges().iter().position(|d| d.key() == key).unwrap();
        out[j] = sigma[i];
    }
    out
}

/// Page rotation carrying the unbalanced pages l..n of the star book onto
/// the pages 1..n-l+1 whose spokes are negative in its partner.
fn star_alignment(m: usize, n: usize, l: usize) -> Vec<usize> {
    let mut f = vec![0, 1];
    for p in 1..=n {
        let q = if p >= l { p - l + 1 } else { p + n - l + 1 };
        for k in 1..=(m - 2) {
            assert_eq!(f.len(), 2 + (p - 1) * (m - 2) + (k - 1));
            f.push(2 + (q - 1) * (m - 2) + (k - 1));
        }
    }
    f
}

#[test]
fn a7_star_book_identities() {
    let budget = Budget::default();
    for (m, n) in formula_grid() {
        for l in 1..=n {
            let star = build_book(&BookSpec::star(m, n, l)).unwrap();
            let spokes = build_book(&BookSpec::signed(m, n, n + 1 - l)).unwrap();
            for mode in BOTH_MODES {
                let by_engine = chromatic_poly(&star, mode, &budget).unwrap();
                assert_eq!(by_engine, chromatic_poly(&spokes, mode, &budget).unwrap());
                // the descent recursion and the switching identity agree
                // with each other and with the engine
                let descended = formula_star_book(m, n, l, mode).unwrap();
                assert_eq!(descended, formula_signed_book(m, n, l, true, mode).unwrap());
                assert_eq!(descended, by_engine, "star ({m},{n}) l={l} {}", mode.name());
            }
            // explicit witness: rotate pages, then switch
            let f = star_alignment(m, n, l);
            let aligned = star.with_signs(&pushforward(&star, &f, &star.signs())).unwrap();
            assert!(
                aligned.switching_equivalent(&spokes).unwrap().is_some(),
                "no switching witness at ({m},{n}) l={l}"
            );
            assert!(star.switching_isomorphic(&spokes, &budget).unwrap());
        }
    }
    println!("ACCEPTANCE 7 star-book-identities: PASS");
}

#[test]
fn a8_universal_polynomial_properties() {
    let budget = Budget::default();

    // monic of degree = vertex count, for every positive-loop-free input
    let mut corpus: Vec<SignedMultigraph> = vec![unbalanced_two_cycle(), unbalanced_triangle()];
    for (m, n) in formula_grid() {
        corpus.push(build_book(&BookSpec::plain(m, n)).unwrap());
        corpus.push(build_book(&BookSpec::signed(m, n, n)).unwrap());
        corpus.push(build_book(&BookSpec::star(m, n, 1)).unwrap());
        corpus.push(build_book(&BookSpec::digon(m, n)).unwrap());
    }
    let mut rng = Rng(0x5eed_0008);
    for _ in 0..20 {
        let ne = rng.below(7) as usize;
        let edges: Vec<_> = (0..ne)
            .map(|_| {
                let a = rng.below(4) as usize;
                let b = rng.below(4) as usize;
                // no positive loops: those force the zero polynomial
                let sign = if a == b { Sign::Minus } else { rng.sign() };
                (a, b, sign)
            })
            .collect();
        corpus.push(graph(4, &edges));
    }
    for g in &corpus {
        for mode in BOTH_MODES {
            let p = chromatic_poly(g, mode, &budget).unwrap();
            assert!(p.is_monic(), "not monic on {:?}", g.edges());
            assert_eq!(p.degree(), Some(g.vertex_count()));
            if g.vertex_count() <= 6 {
                let q = chromatic_poly_oracle(g, mode, &budget).unwrap();
                assert!(q.is_monic());
                assert_eq!(q.degree(), Some(g.vertex_count()));
            }
            if g.vertex_count() <= 4 {
                let w = chromatic_via_whitney(g, mode, &budget).unwrap();
                assert!(w.is_monic());
                assert_eq!(w.degree(), Some(g.vertex_count()));
            }
        }
    }

    // switching invariance: twenty random resignings leave the output alone
    let targets = [
        build_book(&BookSpec::signed(3, 2, 1)).unwrap(),
        build_book(&BookSpec::star(4, 2, 2)).unwrap(),
        build_book(&BookSpec::digon(3, 2)).unwrap(),
        unbalanced_triangle(),
        graph(
            5,
            &[
                (0, 1, Sign::Plus),
                (1, 2, Sign::Minus),
                (2, 3, Sign::Plus),
                (3, 4, Sign::Minus),
                (4, 0, Sign::Plus),
                (1, 3, Sign::Minus),
            ],
        ),
    ];
    for g in &targets {
        for mode in BOTH_MODES {
            let p = chromatic_poly(g, mode, &budget).unwrap();
            for _ in 0..20 {
                let signs: Vec<Sign> = (0..g.vertex_count()).map(|_| rng.sign()).collect();
                let switched = g.apply_switching(&SwitchingVector::from_signs(signs)).unwrap();
                assert_eq!(p, chromatic_poly(&switched, mode, &budget).unwrap());
            }
        }
    }

    // exact division round-trips
    fn random_poly(rng: &mut Rng, degree: usize) -> IntPolynomial {
        let mut coeffs: Vec<i64> = (0..degree).map(|_| rng.below(19) as i64 - 9).collect();
        coeffs.push(rng.below(9) as i64 + 1);
        poly(&coeffs, Parity::All)
    }
    for _ in 0..50 {
        let dp = rng.below(6) as usize;
        let p = random_poly(&mut rng, dp);
        let dq = rng.below(5) as usize;
        let q = random_poly(&mut rng, dq);
        assert_eq!((&p * &q).exact_divide(&q).unwrap(), p);
        assert_eq!(
            (&IntPolynomial::zero().with_parity(Parity::All) * &q).exact_divide(&q).unwrap(),
            IntPolynomial::zero().with_parity(Parity::All)
        );
    }

    // interpolation round-trips up to degree eight
    for _ in 0..50 {
        let dp = rng.below(9) as usize;
        let p = random_poly(&mut rng, dp);
        let d = p.degree().unwrap();
        let points: Vec<(BigInt, BigInt)> =
            (0..=d as i64).map(|x| (BigInt::from(x), p.eval_i64(x))).collect();
        assert_eq!(interpolate(&points, d, Parity::All, false).unwrap(), p);
    }

    println!("ACCEPTANCE 8 universal-polynomial-properties: PASS");
}
