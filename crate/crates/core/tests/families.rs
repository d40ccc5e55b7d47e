mod common;

use std::collections::BTreeSet;

use chromroot::chromatic::ChromaticEngine;
use chromroot::families::{
    build_family, derivative_at_two, derivative_contributing_types, derivative_formula,
    enumerate_hub_types, family_chromatic_polynomial, family_eval_bruteforce, FamilyKind,
    FamilySpec, HUB_SIZE, S_ATTACH, T_ATTACH,
};
use chromroot::graph::{is_bipartite, is_k_connected};
use chromroot::{Error, IntPoly};
use common::{brute_k_connected, count_components_without, falling, naive_colourings};
use num_bigint::BigInt;

const KINDS: [FamilyKind; 2] = [FamilyKind::X, FamilyKind::Y];

#[test]
fn closed_form_matches_deletion_contraction() {
    let engine = ChromaticEngine::new();
    for kind in KINDS {
        for s in 1..=4 {
            for t in 1..=4 {
                let spec = FamilySpec::new(kind, s, t).unwrap();
                let closed = family_chromatic_polynomial(&spec).unwrap();
                let dc = engine.chromatic_polynomial(&build_family(&spec)).unwrap();
                assert_eq!(closed, dc, "{spec}");
            }
        }
    }
}

#[test]
fn closed_form_matches_bruteforce_counts() {
    for kind in KINDS {
        for s in 1..=6 {
            for t in 1..=6 {
                let spec = FamilySpec::new(kind, s, t).unwrap();
                let p = family_chromatic_polynomial(&spec).unwrap();
                for k in 0..=10 {
                    assert_eq!(
                        p.eval_int(&BigInt::from(k)),
                        family_eval_bruteforce(&spec, k).unwrap(),
                        "{spec} at {k}"
                    );
                }
            }
        }
    }
}

#[test]
fn bruteforce_agrees_with_plain_enumeration() {
    for kind in KINDS {
        let spec = FamilySpec::new(kind, 2, 3).unwrap();
        let g = build_family(&spec);
        for k in 0..=4 {
            assert_eq!(
                family_eval_bruteforce(&spec, k).unwrap(),
                BigInt::from(naive_colourings(&g, k)),
                "{spec} at {k}"
            );
        }
    }
}

#[test]
fn hub_type_terms_by_hand() {
    // Recompute the closed form from first principles: walk every partition
    // of the hub into colour classes, keep the proper ones, and count
    // colours available to S and T.
    fn partitions(n: usize) -> Vec<Vec<u8>> {
        let mut out = vec![vec![0u8]];
        for _ in 1..n {
            out = out
                .into_iter()
                .flat_map(|p| {
                    let max = *p.iter().max().unwrap();
                    (0..=max + 1).map(move |b| {
                        let mut q = p.clone();
                        q.push(b);
                        q
                    })
                })
                .collect();
        }
        out
    }
    for kind in KINDS {
        let hub_edges: &[(usize, usize)] = match kind {
            FamilyKind::X => &[(1, 2), (3, 4)],
            _ => &[(1, 2), (3, 4), (1, 4)],
        };
        let proper: Vec<Vec<u8>> = partitions(HUB_SIZE)
            .into_iter()
            .filter(|p| hub_edges.iter().all(|&(u, v)| p[u] != p[v]))
            .collect();
        assert_eq!(proper.len(), enumerate_hub_types(kind).len(), "{kind:?}");
        for (s, t) in [(2, 3), (3, 3), (4, 1)] {
            let mut total = IntPoly::zero();
            for p in &proper {
                let k = *p.iter().max().unwrap() as usize + 1;
                let ds: BTreeSet<u8> = S_ATTACH.iter().map(|&v| p[v]).collect();
                let dt: BTreeSet<u8> = T_ATTACH.iter().map(|&v| p[v]).collect();
                let term = &(&falling(k) * &IntPoly::x_minus(ds.len() as i64).pow(s))
                    * &IntPoly::x_minus(dt.len() as i64).pow(t);
                total = &total + &term;
            }
            let spec = FamilySpec::new(kind, s as usize, t as usize).unwrap();
            assert_eq!(total, family_chromatic_polynomial(&spec).unwrap(), "{spec}");
        }
    }
}

#[test]
fn twenty_seven_types_for_x() {
    let types = enumerate_hub_types(FamilyKind::X);
    assert_eq!(types.len(), 27);
    let distinct: BTreeSet<_> = types.iter().map(|t| t.blocks).collect();
    assert_eq!(distinct.len(), 27);
    assert!(types.len() > enumerate_hub_types(FamilyKind::Y).len());
}

#[test]
fn derivative_at_two_parity_formula() {
    for kind in KINDS {
        for s in 2..=10 {
            for t in 2..=10 {
                let spec = FamilySpec::new(kind, s, t).unwrap();
                let d = derivative_at_two(&spec).unwrap();
                assert_eq!(d.symbolic, d.formula);
                let by_hand = family_chromatic_polynomial(&spec)
                    .unwrap()
                    .derivative()
                    .eval_int(&BigInt::from(2));
                assert_eq!(by_hand, derivative_formula(s, t));
                if s % 2 == 1 && t % 2 == 1 {
                    assert_eq!(by_hand, BigInt::from(-2));
                }
            }
        }
    }
    assert!(matches!(
        derivative_at_two(&FamilySpec::x(1, 3)),
        Err(Error::Unsupported(_))
    ));
}

#[test]
fn derivative_contributions_sum_to_formula() {
    // Only types with one or three colours on each attachment triple
    // survive differentiation at 2; their terms alone give P'(2).
    for kind in KINDS {
        for (s, t) in [(3, 3), (4, 5), (6, 6)] {
            let total: IntPoly = derivative_contributing_types(kind)
                .iter()
                .map(|ty| ty.term(s, t))
                .sum();
            assert_eq!(
                total.derivative().eval_int(&BigInt::from(2)),
                derivative_formula(s, t)
            );
        }
    }
}

#[test]
fn structure_of_members() {
    for kind in KINDS {
        for s in 1..=9 {
            for t in 1..=9 {
                let spec = FamilySpec::new(kind, s, t).unwrap();
                let g = build_family(&spec);
                assert_eq!(g.n(), 5 + s + t);
                let hub = kind.hub_edges().len();
                assert_eq!(g.edge_count(), hub + 3 * (s + t));
                // v0, an S vertex, v1, v2 and a T vertex form a 5-cycle.
                assert!(!is_bipartite(&g).is_bipartite());
                // v1 and v2 have degrees 1 + s and 1 + t.
                let three = is_k_connected(&g, 3);
                assert_eq!(three, s >= 2 && t >= 2, "{spec}");
                if s + t <= 8 {
                    assert_eq!(three, brute_k_connected(&g, 3), "{spec}");
                }
                let witness: BTreeSet<usize> = S_ATTACH.into_iter().collect();
                assert!(g.is_independent(&witness));
                assert_eq!(count_components_without(&g, &witness), s + 1);
            }
        }
    }
}

#[test]
fn parity_of_order() {
    for s in 1..=6 {
        for t in 1..=6 {
            let g = build_family(&FamilySpec::x(s, t));
            assert_eq!(g.n() % 2 == 1, (s + t) % 2 == 0);
        }
    }
}

#[test]
fn complete_bipartite_spec() {
    let spec: FamilySpec = "Kb:3,4".parse().unwrap();
    let g = build_family(&spec);
    assert_eq!((g.n(), g.edge_count()), (7, 12));
    assert_eq!(
        family_chromatic_polynomial(&spec).unwrap(),
        ChromaticEngine::new().chromatic_polynomial(&g).unwrap()
    );
}

#[test]
fn spec_parsing_rejects_bad_input() {
    for bad in ["", "X", "X:3", "X:0,3", "Q:3,3", "X:3,x", "X:3,3,3"] {
        assert!(bad.parse::<FamilySpec>().is_err(), "{bad}");
    }
    assert_eq!("Y:7,9".parse::<FamilySpec>().unwrap(), FamilySpec::y(7, 9));
}
