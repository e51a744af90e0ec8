//! Exact enumeration of paths and cycles in loopless multigraphs.
//!
//! Conventions:
//!
//! * A *path* from s to t is a sequence of distinct vertices joined by
//!   chosen edge instances; parallel edges give distinct paths, so each
//!   step multiplies by the edge multiplicity. The trivial path gives
//!   p(s, s) = 1.
//! * A *cycle* is a set of edge instances forming a connected 2-regular
//!   sub-multigraph: a pair of parallel edges is a cycle of length 2, and a
//!   closed vertex walk of length ≥ 3 contributes the product of its edge
//!   multiplicities.
//!
//! Cycles of length ≥ 3 are enumerated once each by a canonical DFS: the
//! start vertex is the cycle's minimum, intermediate vertices all exceed
//! it, and of the two traversal directions the one whose second vertex is
//! smaller than its last is kept.
//!
//! [`count_cycles_by_edge_subsets`] is an independent brute-force oracle
//! (exponential in the edge count) used to validate the DFS counters.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::Graph;
use crate::{map_tasks, Mode};

/// Vertex-argument validation failure for counting operations.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CountError {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
}

/// Exact cycle statistics: the number of cycles and the total number of
/// edge instances summed over all cycles (Σ_C |E(C)|).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleStats {
    pub cycles: BigUint,
    pub edge_length_sum: BigUint,
}

/// Number of s–t paths, counting parallel edges as distinct steps.
pub fn count_st_paths(g: &Graph, s: usize, t: usize) -> Result<BigUint, CountError> {
    count_st_paths_with_mode(g, s, t, Mode::default())
}

/// [`count_st_paths`] with an explicit execution mode.
pub fn count_st_paths_with_mode(
    g: &Graph,
    s: usize,
    t: usize,
    mode: Mode,
) -> Result<BigUint, CountError> {
    let n = g.vertex_count();
    for v in [s, t] {
        if v >= n {
            return Err(CountError::VertexOutOfRange { v, n });
        }
    }
    if s == t {
        return Ok(BigUint::one());
    }
    // Parallel split over the first step out of s; each branch is an
    // independent sequential DFS and integer addition is associative, so
    // the total is mode-independent.
    let tasks: Vec<(u32, u32)> = g.neighbors(s).to_vec();
    let results = map_tasks(mode, tasks, |(w, mult)| {
        let mut visited = vec![false; n];
        visited[s] = true;
        let mut acc = BigUint::zero();
        if w as usize == t {
            acc += BigUint::from(mult);
        } else {
            visited[w as usize] = true;
            acc += BigUint::from(mult) * paths_dfs(g, w as usize, t, &mut visited);
            visited[w as usize] = false;
        }
        acc
    });
    Ok(results.into_iter().sum())
}

fn paths_dfs(g: &Graph, u: usize, t: usize, visited: &mut Vec<bool>) -> BigUint {
    let mut acc = BigUint::zero();
    for &(w, mult) in g.neighbors(u) {
        let w = w as usize;
        if w == t {
            acc += BigUint::from(mult);
        } else if !visited[w] {
            visited[w] = true;
            acc += BigUint::from(mult) * paths_dfs(g, w, t, visited);
            visited[w] = false;
        }
    }
    acc
}

/// Number of cycles (see the module docs for the multigraph convention).
pub fn count_cycles(g: &Graph) -> BigUint {
    count_cycles_with_mode(g, Mode::default())
}

/// [`count_cycles`] with an explicit execution mode.
pub fn count_cycles_with_mode(g: &Graph, mode: Mode) -> BigUint {
    count_cycles_detailed_with_mode(g, mode).cycles
}

/// Cycle count together with the edge-length sum Σ_C |E(C)|, which the
/// deletion identity Σ_e p(G − e) = Σ_C |E(C)| checks against path counts.
pub fn count_cycles_detailed(g: &Graph) -> CycleStats {
    count_cycles_detailed_with_mode(g, Mode::default())
}

/// [`count_cycles_detailed`] with an explicit execution mode.
pub fn count_cycles_detailed_with_mode(g: &Graph, mode: Mode) -> CycleStats {
    let mut cycles = BigUint::zero();
    let mut edge_length_sum = BigUint::zero();

    // Length-2 cycles: every unordered pair of parallel instances.
    for e in g.edge_records() {
        if e.mult >= 2 {
            let pairs = BigUint::from(e.mult) * BigUint::from(e.mult - 1)
                / BigUint::from(2u32);
            edge_length_sum += BigUint::from(2u32) * &pairs;
            cycles += pairs;
        }
    }

    // Length ≥ 3 cycles: canonical DFS, parallelized over (start, first
    // neighbor) task pairs.
    let mut tasks: Vec<(usize, u32, u32)> = Vec::new();
    for a in 0..g.vertex_count() {
        for &(v1, m1) in g.neighbors(a) {
            if v1 as usize > a {
                tasks.push((a, v1, m1));
            }
        }
    }
    let simple = g.is_simple();
    let results = map_tasks(mode, tasks, |(a, v1, m1)| {
        if simple {
            // Multiplicity products are all 1: count in machine words.
            let mut state = SimpleCycleDfs {
                g,
                a,
                v1: v1 as usize,
                visited: vec![false; g.vertex_count()],
                cycles: 0u128,
                edge_length_sum: 0u128,
            };
            state.visited[a] = true;
            state.visited[v1 as usize] = true;
            state.walk(v1 as usize, 1);
            (BigUint::from(state.cycles), BigUint::from(state.edge_length_sum))
        } else {
            let mut state = CycleDfs {
                g,
                a,
                v1: v1 as usize,
                visited: vec![false; g.vertex_count()],
                cycles: BigUint::zero(),
                edge_length_sum: BigUint::zero(),
            };
            state.visited[a] = true;
            state.visited[v1 as usize] = true;
            state.walk(v1 as usize, 1, &BigUint::from(m1));
            (state.cycles, state.edge_length_sum)
        }
    });
    for (c, s) in results {
        cycles += c;
        edge_length_sum += s;
    }
    CycleStats {
        cycles,
        edge_length_sum,
    }
}

struct CycleDfs<'g> {
    g: &'g Graph,
    a: usize,
    v1: usize,
    visited: Vec<bool>,
    cycles: BigUint,
    edge_length_sum: BigUint,
}

impl CycleDfs<'_> {
    /// Extend the walk a → … → cur of `depth` edges whose multiplicity
    /// product is `weight`.
    fn walk(&mut self, cur: usize, depth: u64, weight: &BigUint) {
        // Close the cycle back to the start: needs length ≥ 3 and the
        // canonical direction (second vertex below last vertex).
        if depth >= 2 && self.v1 < cur {
            let back = self.g.multiplicity(cur, self.a);
            if back > 0 {
                let w = weight * BigUint::from(back);
                self.cycles += &w;
                self.edge_length_sum += w * BigUint::from(depth + 1);
            }
        }
        for &(next, mult) in self.g.neighbors(cur) {
            let next = next as usize;
            if next > self.a && !self.visited[next] {
                self.visited[next] = true;
                let w = weight * BigUint::from(mult);
                self.walk(next, depth + 1, &w);
                self.visited[next] = false;
            }
        }
    }
}

/// Same walk specialised to simple graphs, where every multiplicity
/// product is 1 and the tallies fit comfortably in machine words.
struct SimpleCycleDfs<'g> {
    g: &'g Graph,
    a: usize,
    v1: usize,
    visited: Vec<bool>,
    cycles: u128,
    edge_length_sum: u128,
}

impl SimpleCycleDfs<'_> {
    fn walk(&mut self, cur: usize, depth: u64) {
        if depth >= 2 && self.v1 < cur && self.g.multiplicity(cur, self.a) > 0 {
            self.cycles += 1;
            self.edge_length_sum += u128::from(depth) + 1;
        }
        for &(next, _) in self.g.neighbors(cur) {
            let next = next as usize;
            if next > self.a && !self.visited[next] {
                self.visited[next] = true;
                self.walk(next, depth + 1);
                self.visited[next] = false;
            }
        }
    }
}

/// Brute-force cycle count over all subsets of labelled edge instances,
/// for cross-validation. A subset is a cycle iff it is nonempty, every
/// vertex it touches has degree exactly 2, and it is connected. Budgeted
/// to at most 24 edge instances.
pub fn count_cycles_by_edge_subsets(g: &Graph) -> BigUint {
    let mut instances: Vec<(usize, usize)> = Vec::new();
    for e in g.edge_records() {
        for _ in 0..e.mult {
            instances.push((e.u as usize, e.v as usize));
        }
    }
    let m = instances.len();
    assert!(m <= 24, "edge-subset oracle budget is 24 instances, got {m}");
    let n = g.vertex_count();
    let mut count = BigUint::zero();
    'subsets: for mask in 1u32..(1u32 << m) {
        let mut degree = vec![0u32; n];
        for (i, &(u, v)) in instances.iter().enumerate() {
            if mask >> i & 1 == 1 {
                degree[u] += 1;
                degree[v] += 1;
            }
        }
        if degree.iter().any(|&d| d != 0 && d != 2) {
            continue;
        }
        // Connectivity over the chosen instances by union-find.
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            let mut x = x;
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (i, &(u, v)) in instances.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                parent[ru] = rv;
            }
        }
        let mut root = None;
        for (i, &(u, _)) in instances.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let r = find(&mut parent, u);
                match root {
                    None => root = Some(r),
                    Some(r0) if r0 != r => continue 'subsets,
                    _ => {}
                }
            }
        }
        count += BigUint::one();
    }
    count
}

/// The deletion identity Σ over edge instances e = (x, y) of
/// p(x, y; G − e), which must equal Σ_C |E(C)|: every cycle through e
/// splits into e plus an x–y path avoiding e, so each cycle is counted once
/// per edge instance it uses.
pub fn cycle_edge_relation_sides(g: &Graph) -> (BigUint, BigUint) {
    let mut lhs = BigUint::zero();
    for e in g.edge_records() {
        let reduced = g
            .remove_edge_instance(e.u, e.v)
            .expect("record edges exist");
        let p = count_st_paths(&reduced, e.u as usize, e.v as usize)
            .expect("record endpoints are in range");
        lhs += BigUint::from(e.mult) * p;
    }
    let rhs = count_cycles_detailed(g).edge_length_sum;
    (lhs, rhs)
}
