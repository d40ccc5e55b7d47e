mod common;

use chromroot::chromatic::{
    chromatic_polynomial, chromatic_polynomial_by_interpolation, count_proper_colourings,
    CacheMode, ChromaticEngine,
};
use chromroot::graph::random::seeded_corpus;
use chromroot::graph::{blocks, connected_components};
use chromroot::poly::rat;
use chromroot::{Budget, Error, Graph, IntPoly};
use common::{falling, naive_colourings, poly, whitney_expansion};
use num_bigint::{BigInt, BigUint};

#[test]
fn named_graphs() {
    assert_eq!(
        chromatic_polynomial(&Graph::empty(0)).unwrap(),
        IntPoly::one()
    );
    assert_eq!(
        chromatic_polynomial(&Graph::empty(1)).unwrap(),
        IntPoly::x()
    );
    assert_eq!(
        chromatic_polynomial(&Graph::empty(3)).unwrap(),
        IntPoly::monomial(3)
    );
    assert_eq!(
        chromatic_polynomial(&Graph::complete(5)).unwrap(),
        falling(5)
    );
    // Trees on n vertices: x(x-1)^(n-1).
    let tree = &IntPoly::x() * &IntPoly::x_minus(1).pow(5);
    assert_eq!(chromatic_polynomial(&Graph::path(6)).unwrap(), tree);
    // Cycles: (x-1)^n + (-1)^n (x-1).
    for n in 3..9 {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let expected =
            &IntPoly::x_minus(1).pow(n as u32) + &IntPoly::x_minus(1).scale(&BigInt::from(sign));
        assert_eq!(
            chromatic_polynomial(&Graph::cycle(n)).unwrap(),
            expected,
            "C{n}"
        );
    }
    // Petersen graph.
    let petersen = Graph::from_edge_list(
        10,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5),
        ],
    )
    .unwrap();
    let p = chromatic_polynomial(&petersen).unwrap();
    assert_eq!(p.eval_int(&BigInt::from(3)), BigInt::from(120));
    assert_eq!(p, whitney_check(&petersen));
}

// Subset expansion is too slow above 20 edges; split off via deletion-contraction
// on the first edge until it is not.
fn whitney_check(g: &Graph) -> IntPoly {
    if g.edge_count() <= 20 {
        return whitney_expansion(g);
    }
    let (u, v) = g.edges().next().unwrap();
    &whitney_check(&g.delete_edge(u, v).unwrap()) - &whitney_check(&g.contract_edge(u, v).unwrap())
}

#[test]
fn corpus_agrees_with_independent_oracles() {
    let corpus = seeded_corpus(2024, 200, 8);
    let engine = ChromaticEngine::new();
    for (i, g) in corpus.iter().enumerate() {
        let p = engine.chromatic_polynomial(g).unwrap();
        let q = chromatic_polynomial_by_interpolation(g, &Budget::unlimited()).unwrap();
        assert_eq!(p, q, "graph {i}: {g:?}");
        for k in 0..=4 {
            assert_eq!(
                p.eval_int(&BigInt::from(k)),
                BigInt::from(naive_colourings(g, k)),
                "graph {i} at {k}"
            );
        }
        if g.edge_count() <= 16 {
            assert_eq!(p, whitney_expansion(g), "graph {i}");
        }
    }
}

#[test]
fn structural_coefficients() {
    for g in seeded_corpus(11, 120, 8) {
        let p = chromatic_polynomial(&g).unwrap();
        let n = g.n();
        let c = connected_components(&g).len();
        let b = blocks(&g).count();
        assert_eq!(p.degree(), Some(n));
        assert_eq!(p.leading(), Some(&BigInt::from(1)));
        assert_eq!(p.coeff(n - 1), BigInt::from(-(g.edge_count() as i64)));
        // Coefficients alternate in sign down to x^c and vanish below.
        for i in 0..=n {
            let a = p.coeff(i);
            if i < c {
                assert_eq!(a, BigInt::from(0));
            } else {
                let sign = if (n - i) % 2 == 0 { 1 } else { -1 };
                assert!(a * sign > BigInt::from(0), "x^{i} of {g:?}");
            }
        }
        assert_eq!(p.root_multiplicity(&rat(0, 1)).unwrap(), c);
        assert_eq!(p.root_multiplicity(&rat(1, 1)).unwrap(), b);
    }
}

#[test]
fn deletion_contraction_identity() {
    let engine = ChromaticEngine::new();
    for g in seeded_corpus(5, 80, 8) {
        for (u, v) in g.edges().take(3) {
            let whole = engine.chromatic_polynomial(&g).unwrap();
            let del = engine
                .chromatic_polynomial(&g.delete_edge(u, v).unwrap())
                .unwrap();
            let con = engine
                .chromatic_polynomial(&g.contract_edge(u, v).unwrap())
                .unwrap();
            assert_eq!(whole, &del - &con);
        }
    }
}

#[test]
fn multiplicative_over_components_and_blocks() {
    let a = Graph::cycle(5);
    let b = Graph::complete(4);
    let pa = chromatic_polynomial(&a).unwrap();
    let pb = chromatic_polynomial(&b).unwrap();
    let union = a.disjoint_union(&b);
    assert_eq!(chromatic_polynomial(&union).unwrap(), &pa * &pb);
    // Glue at one vertex: P(A)P(B)/x.
    let mut edges: Vec<(usize, usize)> = a.edges().collect();
    edges.extend(b.edges().map(|(u, v)| (u + 4, v + 4)));
    let glued = Graph::from_edge_list(8, edges).unwrap();
    let expected = (&pa * &pb).divide_exact(&IntPoly::x()).unwrap();
    assert_eq!(chromatic_polynomial(&glued).unwrap(), expected);
}

#[test]
fn cache_modes_agree() {
    let corpus = seeded_corpus(99, 60, 9);
    let modes = [CacheMode::Canonical, CacheMode::Exact, CacheMode::Disabled];
    let engines: Vec<_> = modes
        .iter()
        .map(|&m| ChromaticEngine::new().with_cache(m))
        .collect();
    for g in &corpus {
        let ps: Vec<_> = engines
            .iter()
            .map(|e| e.chromatic_polynomial(g).unwrap())
            .collect();
        assert_eq!(ps[0], ps[1]);
        assert_eq!(ps[0], ps[2]);
    }
    assert_eq!(engines[2].cache_len(), 0);
    let parallel = ChromaticEngine::new().parallel(true);
    for g in &corpus {
        assert_eq!(
            parallel.chromatic_polynomial(g).unwrap(),
            engines[0].chromatic_polynomial(g).unwrap()
        );
    }
}

#[test]
fn isomorphic_relabellings_share_results() {
    let g = Graph::from_edge_list(
        7,
        [
            (0, 1),
            (1, 2),
            (2, 0),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 3),
        ],
    )
    .unwrap();
    let perm = [6, 4, 2, 0, 1, 3, 5];
    let h = Graph::from_edge_list(7, g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap();
    let engine = ChromaticEngine::new();
    assert_eq!(
        engine.chromatic_polynomial(&g).unwrap(),
        engine.chromatic_polynomial(&h).unwrap()
    );
}

#[test]
fn colouring_counts() {
    let k33 = Graph::complete_bipartite(3, 3);
    let b = Budget::unlimited();
    assert_eq!(
        count_proper_colourings(&k33, 2, &b).unwrap(),
        BigUint::from(2u32)
    );
    assert_eq!(
        count_proper_colourings(&k33, 3, &b).unwrap(),
        BigUint::from(naive_colourings(&k33, 3))
    );
    assert_eq!(
        count_proper_colourings(&Graph::complete(4), 3, &b).unwrap(),
        BigUint::from(0u32)
    );
}

#[test]
fn budget_exhaustion_is_reported() {
    let g = seeded_corpus(3, 1, 1)[0]
        .clone()
        .disjoint_union(&Graph::complete_bipartite(6, 7));
    let tight = ChromaticEngine::new()
        .with_cache(CacheMode::Disabled)
        .with_budget_limit(3);
    assert_eq!(
        tight.chromatic_polynomial(&g),
        Err(Error::BudgetExhausted(3))
    );
    assert!(matches!(
        chromatic_polynomial_by_interpolation(&Graph::complete_bipartite(5, 5), &Budget::new(10)),
        Err(Error::BudgetExhausted(10))
    ));
    // The engine stays usable after a failure.
    let ok = ChromaticEngine::new();
    assert_eq!(
        ok.chromatic_polynomial(&Graph::complete(3)).unwrap(),
        poly(&[0, 2, -3, 1])
    );
}

#[test]
fn graphs_beyond_the_bitmask_width_are_rejected() {
    let big = Graph::path(65);
    assert!(matches!(
        chromatic_polynomial(&big),
        Err(Error::GraphTooLarge(65))
    ));
}
