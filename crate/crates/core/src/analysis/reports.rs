use serde::Serialize;

use crate::budget::Budget;
use crate::chromatic::ChromaticEngine;
use crate::error::Result;
use crate::families::{build_family, family_chromatic_polynomial, FamilySpec};
use crate::graph::{
    dong_koh_ordering_exists, independent_toughness_witness, is_bipartite, is_k_connected, Graph,
    VertexSet,
};
use crate::poly::{rat, IntPoly, Rat, RootIsolator, RootRecord};

/// Where a polynomial came from.
#[derive(Debug, Clone, Copy)]
pub enum RootSource<'a> {
    /// An arbitrary graph with a caller-chosen label.
    Graph { id: &'a str, graph: &'a Graph },
    /// A family member; the polynomial comes from the closed form.
    Family(FamilySpec),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RootFlags {
    pub three_connected: bool,
    pub bipartite: bool,
    pub odd_order: bool,
}

impl RootFlags {
    pub fn of(g: &Graph) -> Self {
        RootFlags {
            three_connected: is_k_connected(g, 3),
            bipartite: is_bipartite(g).is_bipartite(),
            odd_order: g.n() % 2 == 1,
        }
    }
}

/// Real chromatic roots of a graph in a query interval.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootReport {
    pub source: String,
    pub n: usize,
    pub flags: RootFlags,
    pub polynomial: IntPoly,
    pub roots: Vec<RootRecord>,
}

/// Isolates and refines every root of `P` in the open interval `(lo, hi)`.
pub fn roots_report(
    source: RootSource<'_>,
    lo: &Rat,
    hi: &Rat,
    places: u32,
    engine: &ChromaticEngine,
) -> Result<RootReport> {
    let (label, graph, poly) = match source {
        RootSource::Graph { id, graph } => (
            id.to_string(),
            graph.clone(),
            engine.chromatic_polynomial(graph)?,
        ),
        RootSource::Family(spec) => (
            spec.to_string(),
            build_family(&spec),
            family_chromatic_polynomial(&spec)?,
        ),
    };
    roots_report_for(label, &graph, poly, lo, hi, places)
}

/// As [`roots_report`], for a polynomial already in hand.
pub fn roots_report_for(
    source: String,
    graph: &Graph,
    poly: IntPoly,
    lo: &Rat,
    hi: &Rat,
    places: u32,
) -> Result<RootReport> {
    let iso = RootIsolator::new(&poly)?;
    let roots = iso
        .isolate(lo, hi)?
        .iter()
        .map(|r| iso.refine(r, places))
        .collect();
    Ok(RootReport {
        source,
        n: graph.n(),
        flags: RootFlags::of(graph),
        polynomial: poly,
        roots,
    })
}

/// Whether a graph agrees with the independent-set toughness condition:
/// a chromatic root in `(1, 2)` should come with an independent `S` such
/// that `G - S` has more than `|S|` components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ToughnessReport {
    pub has_root_in_12: bool,
    pub witness: Option<VertexSet>,
    pub consistent: bool,
}

pub fn conjecture7_report(
    g: &Graph,
    max_size: usize,
    engine: &ChromaticEngine,
) -> Result<ToughnessReport> {
    let p = engine.chromatic_polynomial(g)?;
    conjecture7_report_for(g, &p, max_size)
}

pub fn conjecture7_report_for(g: &Graph, p: &IntPoly, max_size: usize) -> Result<ToughnessReport> {
    let has_root_in_12 = has_root_in_unit_interval(p)?;
    let witness = independent_toughness_witness(g, max_size);
    Ok(ToughnessReport {
        has_root_in_12,
        consistent: !has_root_in_12 || witness.is_some(),
        witness,
    })
}

fn has_root_in_unit_interval(p: &IntPoly) -> Result<bool> {
    Ok(!RootIsolator::new(p)?
        .isolate(&rat(1, 1), &rat(2, 1))?
        .is_empty())
}

/// Consistency of a back-neighbour hamiltonian ordering with the absence
/// of chromatic roots in `(1, 2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DongKohScreen {
    pub ordering_exists: bool,
    pub has_root_in_12: bool,
    pub consistent: bool,
}

pub fn dong_koh_screen(g: &Graph, p: &IntPoly, budget: &Budget) -> Result<DongKohScreen> {
    let ordering_exists = dong_koh_ordering_exists(g, budget)?;
    let has_root_in_12 = has_root_in_unit_interval(p)?;
    Ok(DongKohScreen {
        ordering_exists,
        has_root_in_12,
        consistent: !(ordering_exists && has_root_in_12),
    })
}
