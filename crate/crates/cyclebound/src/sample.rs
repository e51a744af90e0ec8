//! Seeded random generators used by the verification suites: small
//! multigraphs, trees satisfying the funnel hypothesis, and 0/1 matrices.
//!
//! Everything is driven by a caller-supplied RNG (the suites use ChaCha12
//! with a fixed seed), so runs are reproducible byte for byte.

use rand::Rng;

use crate::graph::Graph;
use crate::permanent::ZeroOneMatrix;

/// A random loopless multigraph: `n` uniform in 2..=max_n, each vertex pair
/// present independently with probability 1/2, present pairs carrying a
/// uniform multiplicity in 1..=max_mult. Resamples until at least one edge
/// exists.
pub fn random_multigraph(rng: &mut impl Rng, max_n: usize, max_mult: u32) -> Graph {
    assert!(max_n >= 2 && max_mult >= 1);
    loop {
        let n = rng.gen_range(2..=max_n);
        let mut triples = Vec::new();
        for u in 0..n as u32 {
            for v in (u + 1)..n as u32 {
                if rng.gen_bool(0.5) {
                    triples.push((u, v, rng.gen_range(1..=max_mult)));
                }
            }
        }
        if triples.is_empty() {
            continue;
        }
        return Graph::new(n, triples).expect("sampled edges are valid");
    }
}

/// Decode a Prüfer sequence over vertices 0..n into tree edges.
fn tree_from_pruefer(seq: &[usize], n: usize) -> Vec<(u32, u32)> {
    assert_eq!(seq.len() + 2, n);
    let mut degree = vec![1u32; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf always remains");
        edges.push((leaf as u32, v as u32));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let (u, v) = {
        let mut left = (0..n).filter(|&u| degree[u] == 1);
        (left.next().unwrap(), left.next().unwrap())
    };
    edges.push((u as u32, v as u32));
    edges
}

/// Whether `g` is a tree in which no vertex is adjacent to more than one
/// leaf distinct from `root` — the hypothesis of the funnel-tree weight
/// bound. (The root itself is also held to the one-leaf limit.)
pub fn funnel_hypothesis(g: &Graph, root: usize) -> bool {
    let n = g.vertex_count();
    if n < 2 || g.edge_count() != n as u64 - 1 || !g.is_simple() || !is_connected(g) {
        return false;
    }
    for v in 0..n {
        let leaf_neighbors = g
            .neighbors(v)
            .iter()
            .filter(|&&(u, _)| u as usize != root && g.degree(u as usize) == 1)
            .count();
        if leaf_neighbors > 1 {
            return false;
        }
    }
    true
}

fn is_connected(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(u, _) in g.neighbors(v) {
            if !seen[u as usize] {
                seen[u as usize] = true;
                stack.push(u as usize);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// A random tree rooted at vertex 0 that satisfies the funnel hypothesis,
/// found by rejection over uniform Prüfer trees. `n` is uniform in
/// 2..=max_n, so degree-1 roots and exact-tie shapes both occur.
pub fn random_funnel_tree(rng: &mut impl Rng, max_n: usize) -> Graph {
    assert!(max_n >= 2);
    loop {
        let n = rng.gen_range(2..=max_n);
        let edges = if n == 2 {
            vec![(0u32, 1u32)]
        } else {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            tree_from_pruefer(&seq, n)
        };
        let g = Graph::simple(n, &edges).expect("tree edges are valid");
        if funnel_hypothesis(&g, 0) {
            return g;
        }
    }
}

/// A random n×n 0/1 matrix with no zero row, entries 1 with probability
/// `density`. Zero rows are resampled so row-sum bounds are well defined.
pub fn random_zero_one_matrix(rng: &mut impl Rng, n: usize, density: f64) -> ZeroOneMatrix {
    assert!(n >= 1);
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        loop {
            let mut row = 0u32;
            for bit in 0..n {
                if rng.gen_bool(density) {
                    row |= 1 << bit;
                }
            }
            if row != 0 {
                rows.push(row);
                break;
            }
        }
    }
    ZeroOneMatrix::new(n, rows).expect("sampled matrix is square and 0/1")
}

/// The spider tree that meets the funnel-tree bound with equality: root of
/// degree l with one pendant leaf and l−1 legs of length two, so every
/// non-leaf vertex below the root has degree 2 and the weight product is
/// exactly ρ^{l−1} = φ(l, l).
pub fn tight_funnel_spider(l: u32) -> Graph {
    assert!(l >= 1);
    let mut edges = vec![(0u32, 1u32)];
    let mut next = 2u32;
    for _ in 0..l - 1 {
        edges.push((0, next));
        edges.push((next, next + 1));
        next += 2;
    }
    Graph::simple(next as usize, &edges).expect("spider edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    #[test]
    fn multigraphs_are_valid_and_seeded() {
        let mut rng = ChaCha12Rng::seed_from_u64(7);
        let gs: Vec<Graph> = (0..20).map(|_| random_multigraph(&mut rng, 6, 4)).collect();
        for g in &gs {
            assert!(g.vertex_count() >= 2 && g.vertex_count() <= 6);
            assert!(g.edge_count() >= 1);
            assert!(g.edge_records().iter().all(|e| e.mult <= 4));
        }
        let mut rng2 = ChaCha12Rng::seed_from_u64(7);
        let gs2: Vec<Graph> = (0..20).map(|_| random_multigraph(&mut rng2, 6, 4)).collect();
        let ser: Vec<String> = gs.iter().map(Graph::serialize).collect();
        let ser2: Vec<String> = gs2.iter().map(Graph::serialize).collect();
        assert_eq!(ser, ser2, "same seed, same graphs");
        assert!(gs.iter().any(|g| !g.is_simple()), "multiplicities do occur");
    }

    #[test]
    fn pruefer_decode_matches_known_tree() {
        // Sequence (3, 3) on 4 vertices is the star at 3.
        let edges = tree_from_pruefer(&[3, 3], 4);
        let g = Graph::simple(4, &edges).unwrap();
        assert_eq!(g.degree(3), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn funnel_trees_satisfy_hypothesis() {
        let mut rng = ChaCha12Rng::seed_from_u64(11);
        for _ in 0..50 {
            let t = random_funnel_tree(&mut rng, 12);
            assert!(funnel_hypothesis(&t, 0));
            assert_eq!(t.edge_count(), t.vertex_count() as u64 - 1);
        }
    }

    #[test]
    fn funnel_hypothesis_rejects_double_leaves() {
        // Star at vertex 0 with three leaves: the root is adjacent to three
        // leaves distinct from itself.
        let star = Graph::simple(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!funnel_hypothesis(&star, 0));
        // But rooted at a leaf, the hub is still adjacent to two leaves.
        assert!(!funnel_hypothesis(&star, 1));
        // A path is fine from any root.
        let path = Graph::simple(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(funnel_hypothesis(&path, 0));
        // Non-trees are rejected.
        let cycle = Graph::simple(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!funnel_hypothesis(&cycle, 0));
    }

    #[test]
    fn spider_shape() {
        let g = tight_funnel_spider(4);
        assert_eq!(g.degree(0), 4);
        assert!(funnel_hypothesis(&g, 0));
        // One pendant leaf plus three legs of length two: 8 vertices.
        assert_eq!(g.vertex_count(), 8);
        let leaves = (0..g.vertex_count())
            .filter(|&v| g.degree(v) == 1)
            .count();
        assert_eq!(leaves, 4);
    }

    #[test]
    fn matrices_have_no_zero_rows() {
        let mut rng = ChaCha12Rng::seed_from_u64(3);
        for n in 1..=7 {
            let m = random_zero_one_matrix(&mut rng, n, 0.4);
            assert_eq!(m.size(), n);
            assert!(m.row_sums().iter().all(|&r| r >= 1));
        }
    }
}
