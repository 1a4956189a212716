//! Independent oracles shared by the integration tests. Nothing here calls
//! into the code paths it is used to check.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use tripath::prefixcode::Codeword;

/// Grid coordinates of the order-n structure; `None` is the apex.
pub fn coordinates(n: u32) -> Vec<Option<(u32, u32)>> {
    let mut pts = vec![None];
    for r in 1..n {
        for c in 1..=n {
            pts.push(Some((r, c)));
        }
    }
    pts
}

/// Path adjacency from coordinates alone: apex to every first-row point,
/// vertical neighbours in a column, horizontal neighbours in a row.
pub fn path_adjacent(a: Option<(u32, u32)>, b: Option<(u32, u32)>) -> bool {
    match (a, b) {
        (None, Some((r, _))) | (Some((r, _)), None) => r == 1,
        (Some((r1, c1)), Some((r2, c2))) => (c1 == c2 && r1.abs_diff(r2) == 1) || (r1 == r2 && c1.abs_diff(c2) == 1),
        (None, None) => false,
    }
}

/// Clique adjacency from coordinates: the apex sees everything, grid points
/// see their whole row and column.
pub fn clique_adjacent(a: Option<(u32, u32)>, b: Option<(u32, u32)>) -> bool {
    match (a, b) {
        (None, Some(_)) | (Some(_), None) => true,
        (Some((r1, c1)), Some((r2, c2))) => (r1, c1) != (r2, c2) && (r1 == r2 || c1 == c2),
        (None, None) => false,
    }
}

pub type Point = Option<(u32, u32)>;

/// All adjacent index pairs `(i, j)`, `i < j`, by pairwise enumeration.
pub fn enumerate_edges(n: u32, adjacent: fn(Point, Point) -> bool) -> Vec<(usize, usize)> {
    let pts = coordinates(n);
    let mut edges = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if adjacent(pts[i], pts[j]) {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// Whether some assignment from `k` colors is proper, trying every one of
/// the `k^V` assignments in odometer order.
pub fn exhaustively_colorable(vertex_count: usize, edges: &[(usize, usize)], k: u32) -> bool {
    if vertex_count == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let mut colors = vec![0u32; vertex_count];
    loop {
        if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == vertex_count {
                return false;
            }
            colors[i] += 1;
            if colors[i] < k {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// Smallest palette found by exhaustive enumeration.
pub fn exhaustive_chromatic(vertex_count: usize, edges: &[(usize, usize)]) -> u32 {
    (0..).find(|&k| exhaustively_colorable(vertex_count, edges, k)).unwrap()
}

/// Straight first-fit over an adjacency matrix.
pub fn first_fit(vertex_count: usize, edges: &[(usize, usize)], order: &[usize]) -> Vec<u32> {
    let mut adj = vec![vec![false; vertex_count]; vertex_count];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut colors: Vec<Option<u32>> = vec![None; vertex_count];
    for &v in order {
        let used: BTreeSet<u32> = (0..vertex_count)
            .filter(|&w| adj[v][w])
            .filter_map(|w| colors[w])
            .collect();
        colors[v] = (0..).find(|c| !used.contains(c));
    }
    colors.into_iter().map(Option::unwrap).collect()
}

/// Exact Kraft sum as a sum of individual fractions `1 / 2^l`.
pub fn kraft_oracle(lengths: &[u32]) -> BigRational {
    lengths
        .iter()
        .map(|&l| BigRational::new(BigInt::from(1), BigInt::from(2).pow(l)))
        .fold(BigRational::from_integer(BigInt::from(0)), |acc, t| acc + t)
}

fn word(bits: &str) -> Codeword {
    bits.parse().unwrap()
}

/// A random prefix-free code: grow a random binary tree by splitting leaves
/// (depth at most `max_depth`), then keep a random non-empty subset of leaves.
pub fn random_prefix_free_code(rng: &mut impl Rng, max_depth: usize) -> Vec<Codeword> {
    let mut leaves = vec![String::new()];
    let splits = rng.gen_range(1..=40);
    for _ in 0..splits {
        let candidates: Vec<usize> = (0..leaves.len()).filter(|&i| leaves[i].len() < max_depth).collect();
        if candidates.is_empty() {
            break;
        }
        let i = candidates[rng.gen_range(0..candidates.len())];
        let leaf = leaves.swap_remove(i);
        leaves.push(format!("{leaf}0"));
        leaves.push(format!("{leaf}1"));
    }
    let mut code: Vec<Codeword> = leaves.iter().filter(|_| rng.gen_bool(0.7)).map(|l| word(l)).collect();
    if code.is_empty() {
        code.push(word(&leaves[0]));
    }
    code
}

/// Brute-force prefix check over all ordered pairs.
pub fn prefix_free_oracle(words: &[Codeword]) -> bool {
    let strings: Vec<String> = words.iter().map(|w| w.to_string()).collect();
    for (i, a) in strings.iter().enumerate() {
        for (j, b) in strings.iter().enumerate() {
            if i != j && b.starts_with(a.as_str()) {
                return false;
            }
        }
    }
    true
}

/// Sorted copy, for multiset comparison.
pub fn sorted<T: Ord + Clone>(items: &[T]) -> Vec<T> {
    let mut v = items.to_vec();
    v.sort();
    v
}
