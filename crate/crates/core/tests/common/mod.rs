#![allow(dead_code)]

use std::collections::BTreeSet;

use chromroot::{Graph, IntPoly};
use num_bigint::BigInt;

/// Proper k-colourings by plain backtracking over vertex order.
pub fn naive_colourings(g: &Graph, k: usize) -> u64 {
    fn go(g: &Graph, k: usize, v: usize, colour: &mut Vec<usize>) -> u64 {
        if v == g.n() {
            return 1;
        }
        let mut total = 0;
        for c in 0..k {
            if g.neighbors(v).iter().all(|&u| u >= v || colour[u] != c) {
                colour[v] = c;
                total += go(g, k, v + 1, colour);
            }
        }
        total
    }
    go(g, k, 0, &mut vec![usize::MAX; g.n()])
}

/// `sum over A subset of E of (-1)^|A| x^c(V, A)`.
pub fn whitney_expansion(g: &Graph) -> IntPoly {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    assert!(edges.len() <= 20, "too many edges for subset expansion");
    let mut coeffs = vec![BigInt::from(0); g.n() + 1];
    for mask in 0u32..(1 << edges.len()) {
        let mut parent: Vec<usize> = (0..g.n()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut comps = g.n();
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a != b {
                    parent[a] = b;
                    comps -= 1;
                }
            }
        }
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        coeffs[comps] += sign;
    }
    IntPoly::new(coeffs)
}

/// Connectivity of `G - removed` by graph search.
pub fn connected_without(g: &Graph, removed: &BTreeSet<usize>) -> bool {
    let alive: Vec<usize> = (0..g.n()).filter(|v| !removed.contains(v)).collect();
    let Some(&start) = alive.first() else {
        return true;
    };
    let mut seen = vec![false; g.n()];
    let mut stack = vec![start];
    seen[start] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &u in g.neighbors(v) {
            if !seen[u] && !removed.contains(&u) {
                seen[u] = true;
                count += 1;
                stack.push(u);
            }
        }
    }
    count == alive.len()
}

/// Number of components of `G - removed`.
pub fn count_components_without(g: &Graph, removed: &BTreeSet<usize>) -> usize {
    let mut seen = vec![false; g.n()];
    let mut comps = 0;
    for s in 0..g.n() {
        if seen[s] || removed.contains(&s) {
            continue;
        }
        comps += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &u in g.neighbors(v) {
                if !seen[u] && !removed.contains(&u) {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
    }
    comps
}

/// k-connectivity by enumerating every vertex set of size below k.
pub fn brute_k_connected(g: &Graph, k: usize) -> bool {
    if g.n() <= k {
        return false;
    }
    (0u64..1 << g.n())
        .filter(|m| (m.count_ones() as usize) < k)
        .all(|m| {
            let removed: BTreeSet<usize> = (0..g.n()).filter(|&v| m >> v & 1 == 1).collect();
            connected_without(g, &removed)
        })
}

pub fn poly(coeffs: &[i64]) -> IntPoly {
    IntPoly::from_i64s(coeffs)
}

/// `x(x-1)...(x-k+1)` built by repeated multiplication.
pub fn falling(k: usize) -> IntPoly {
    (0..k as i64).fold(IntPoly::one(), |acc, i| &acc * &IntPoly::x_minus(i))
}

pub fn decimal_close(found: &str, expected: &str, tol: f64) -> bool {
    let a: f64 = found.parse().unwrap();
    let b: f64 = expected.parse().unwrap();
    (a - b).abs() <= tol
}

pub const FIXTURE_N7: &str = concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/tests/fixtures/connected_n7.g6"
);

pub fn load_fixture() -> Vec<Graph> {
    std::fs::read_to_string(FIXTURE_N7)
        .unwrap()
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| chromroot::graph::from_graph6(l).unwrap())
        .collect()
}

/// Values printed in the smallest-root tables for the two hub families.
/// Row `i` is `s = 3 + 2i`, column `j` is `t = s + 2j`.
pub const TABLE_X: [&[&str]; 9] = [
    &[
        "1.9026", "1.9223", "1.9342", "1.9424", "1.9484", "1.9531", "1.9568", "1.9599", "1.9625",
    ],
    &[
        "1.9372", "1.9464", "1.9527", "1.9574", "1.9611", "1.9640", "1.9665", "1.9685",
    ],
    &[
        "1.9539", "1.9591", "1.9630", "1.9660", "1.9685", "1.9706", "1.9723",
    ],
    &["1.9636", "1.9669", "1.9696", "1.9717", "1.9735", "1.9751"],
    &["1.9699", "1.9722", "1.9741", "1.9757", "1.9771"],
    &["1.9743", "1.9761", "1.9775", "1.9788"],
    &["1.9777", "1.9790", "1.9801"],
    &["1.9802", "1.9813"],
    &["1.9822"],
];

pub const TABLE_Y: [&[&str]; 9] = [
    &[
        "1.9131", "1.9294", "1.9397", "1.9468", "1.9521", "1.9563", "1.9596", "1.9624", "1.9648",
    ],
    &[
        "1.9420", "1.9500", "1.9556", "1.9598", "1.9631", "1.9659", "1.9681", "1.9700",
    ],
    &[
        "1.9566", "1.9613", "1.9648", "1.9676", "1.9699", "1.9718", "1.9734",
    ],
    &["1.9653", "1.9684", "1.9708", "1.9728", "1.9745", "1.9759"],
    &["1.9711", "1.9733", "1.9751", "1.9766", "1.9778"],
    &["1.9752", "1.9768", "1.9782", "1.9794"],
    &["1.9783", "1.9796", "1.9807"],
    &["1.9807", "1.9817"],
    &["1.9827"],
];
