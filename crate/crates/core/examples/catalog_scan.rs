// Scans a graph6 catalog for graphs with a chromatic root in (1,2).
//
//     cargo run --example catalog_scan -- graphs.g6 3
//
// Without arguments the bundled catalog of connected graphs on at most
// seven vertices is used, keeping 2-connected non-bipartite graphs.

use std::fs;

use chromroot::analysis::{scan_catalog, ScanFilters, ScanItem};
use chromroot::chromatic::ChromaticEngine;

const BUNDLED: &str = concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/tests/fixtures/connected_n7.g6"
);

pub fn run_example() -> chromroot::Result<()> {
    scan(BUNDLED, 2)
}

fn scan(path: &str, min_connectivity: usize) -> chromroot::Result<()> {
    let text = fs::read_to_string(path).map_err(|e| chromroot::Error::Parse(e.to_string()))?;
    let filters = ScanFilters {
        min_connectivity,
        non_bipartite: true,
        ..ScanFilters::default()
    };
    let summary = scan_catalog(
        text.lines().map(String::from),
        &filters,
        &ChromaticEngine::new(),
        |item| match item {
            ScanItem::Report(r) => {
                let roots: Vec<_> = r.roots.iter().filter_map(|x| x.decimal.clone()).collect();
                println!("{:<10} n={} roots {}", r.source, r.n, roots.join(" "));
            }
            ScanItem::Error { line, error, .. } => println!("line {line}: {error}"),
        },
    )?;
    println!(
        "{} graphs read, {} passed the filters, {} with roots in (1,2)",
        summary.read, summary.passed_filters, summary.reported
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> chromroot::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args.next().unwrap_or_else(|| BUNDLED.to_string());
    let min_connectivity = args.next().and_then(|a| a.parse().ok()).unwrap_or(2);
    scan(&path, min_connectivity)
}
