//! Exhaustive census of simple graphs on up to seven vertices, one
//! representative per isomorphism class.
//!
//! A graph on n labelled vertices is a mask over the C(n, 2) vertex pairs;
//! the symmetric group acts on masks by relabelling, and each orbit is one
//! isomorphism class. Orbits are enumerated by breadth-first search under
//! the adjacent-transposition generators, taking the numerically smallest
//! mask of each orbit as its representative.

use std::fmt;

use crate::graph::Graph;

/// Largest vertex count the census enumerates (2^21 masks).
pub const MAX_CENSUS_VERTICES: usize = 7;

/// A census request outside the supported vertex range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusError {
    pub n: usize,
}

impl fmt::Display for CensusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "census covers 1 ≤ n ≤ {MAX_CENSUS_VERTICES} vertices, got {}",
            self.n
        )
    }
}

impl std::error::Error for CensusError {}

/// All isomorphism classes of simple graphs on `n` vertices, one
/// representative each, sorted by edge count and then by canonical mask.
pub fn census(n: usize) -> Result<Vec<Graph>, CensusError> {
    if n == 0 || n > MAX_CENSUS_VERTICES {
        return Err(CensusError { n });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let bits = pairs.len();
    let mut pair_index = vec![vec![0u32; n]; n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        pair_index[i][j] = k as u32;
        pair_index[j][i] = k as u32;
    }
    // For each adjacent transposition, where each pair bit lands.
    let gen_maps: Vec<Vec<u32>> = (0..n.saturating_sub(1))
        .map(|t| {
            let sigma = |v: usize| match v {
                _ if v == t => t + 1,
                _ if v == t + 1 => t,
                _ => v,
            };
            pairs
                .iter()
                .map(|&(i, j)| pair_index[sigma(i)][sigma(j)])
                .collect()
        })
        .collect();

    let total = 1usize << bits;
    let mut visited = vec![false; total];
    let mut representatives: Vec<u32> = Vec::new();
    let mut queue: Vec<u32> = Vec::new();
    for start in 0..total as u32 {
        if visited[start as usize] {
            continue;
        }
        // Masks are scanned in increasing order, so the first unvisited
        // member of an orbit is its minimum.
        visited[start as usize] = true;
        representatives.push(start);
        queue.clear();
        queue.push(start);
        let mut head = 0;
        while head < queue.len() {
            let mask = queue[head];
            head += 1;
            for map in &gen_maps {
                let mut image = 0u32;
                let mut rest = mask;
                while rest != 0 {
                    let k = rest.trailing_zeros() as usize;
                    image |= 1 << map[k];
                    rest &= rest - 1;
                }
                if !visited[image as usize] {
                    visited[image as usize] = true;
                    queue.push(image);
                }
            }
        }
    }
    representatives.sort_by_key(|&mask| (mask.count_ones(), mask));
    let graphs = representatives
        .into_iter()
        .map(|mask| {
            let edge_pairs: Vec<(u32, u32)> = pairs
                .iter()
                .enumerate()
                .filter(|&(k, _)| mask & (1 << k) != 0)
                .map(|(_, &(i, j))| (i as u32, j as u32))
                .collect();
            Graph::simple(n, &edge_pairs).expect("census masks are valid simple graphs")
        })
        .collect();
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Graphs on n vertices up to isomorphism: 1, 2, 4, 11, 34, 156, 1044.
    const CLASS_COUNTS: [usize; 7] = [1, 2, 4, 11, 34, 156, 1044];

    #[test]
    fn class_counts_up_to_six() {
        for n in 1..=6 {
            let graphs = census(n).unwrap();
            assert_eq!(graphs.len(), CLASS_COUNTS[n - 1], "n = {n}");
        }
    }

    #[test]
    fn class_count_seven() {
        assert_eq!(census(7).unwrap().len(), CLASS_COUNTS[6]);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(census(0).is_err());
        assert!(census(MAX_CENSUS_VERTICES + 1).is_err());
    }

    #[test]
    fn representatives_are_pairwise_distinct_under_relabelling() {
        // Spot check: the 4-vertex census holds exactly one triangle-plus-
        // isolated-vertex and one path, and every graph has 4 vertices.
        let graphs = census(4).unwrap();
        assert!(graphs.iter().all(|g| g.vertex_count() == 4));
        let edge_counts: Vec<u64> = graphs.iter().map(|g| g.edge_count()).collect();
        assert_eq!(edge_counts, vec![0, 1, 2, 2, 3, 3, 3, 4, 4, 5, 6]);
        let complete = graphs.last().unwrap();
        assert_eq!(complete.serialize(), Graph::complete(4).serialize());
    }

    #[test]
    fn first_census_entry_is_empty_graph() {
        let graphs = census(5).unwrap();
        assert_eq!(graphs[0].edge_count(), 0);
        assert_eq!(graphs[0].vertex_count(), 5);
    }
}
