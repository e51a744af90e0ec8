//! Generators for the graph families that realise (or nearly realise) the
//! path and cycle bounds: theta-chains of triangles for s–t paths, necklaces
//! of K₄ blocks for cycles, tripled cycles for the multigraph bound, and
//! circulants as an independent cross-check family.

use std::fmt;
use std::str::FromStr;

use crate::graph::Graph;

/// A construction request whose size parameter is out of range for its
/// family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeError {
    pub family: &'static str,
    pub message: String,
}

impl fmt::Display for SizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.family, self.message)
    }
}

impl std::error::Error for SizeError {}

fn size_err(family: &'static str, message: impl Into<String>) -> SizeError {
    SizeError {
        family,
        message: message.into(),
    }
}

/// Path 0–1–⋯–m with an extra "ear" vertex attached across each path edge,
/// so every step from i to i+1 can be taken directly or through the ear.
/// Returns the graph together with the terminals (0, m); the number of
/// 0→m paths is exactly 2^m, which meets the degree-sequence path bound
/// with every vertex weight contributing its extremal factor.
pub fn ear_path(m: u32) -> Result<(Graph, usize, usize), SizeError> {
    if m < 1 {
        return Err(size_err("ear-path", format!("needs m ≥ 1 path edges, got {m}")));
    }
    let n = 2 * m as usize + 1;
    let mut pairs = Vec::with_capacity(3 * m as usize);
    for i in 0..m {
        let ear = m + 1 + i;
        pairs.push((i, i + 1));
        pairs.push((i, ear));
        pairs.push((i + 1, ear));
    }
    let g = Graph::simple(n, &pairs).expect("ear-path edges are valid");
    Ok((g, 0, m as usize))
}

/// Necklace of `blocks` K₄ blocks: vertex pairs (2i, 2i+1) arranged in a
/// circle, with every two consecutive pairs spanning a K₄ (the rung edge of
/// each pair plus all four cross edges between them). Two blocks give K₄
/// itself and three give K₆; for blocks ≥ 3 the graph is 5-regular with
/// m = 5·blocks edges, and its cycle count grows like κ₁^m with
/// κ₁ = (2 + 2√2)^{1/5} — the winding cycles that cross every rung cut
/// exactly once carry the growth, which is why the circle must be closed.
pub fn k4_chain(blocks: u32) -> Result<Graph, SizeError> {
    if blocks < 2 {
        return Err(size_err(
            "k4-chain",
            format!("needs at least 2 blocks, got {blocks}"),
        ));
    }
    let mut pairs = std::collections::BTreeSet::new();
    for i in 0..blocks {
        let j = (i + 1) % blocks;
        let (u, v) = (2 * i, 2 * i + 1);
        let (x, y) = (2 * j, 2 * j + 1);
        // The K₄ on rungs i and j; at blocks = 2 the two joins coincide and
        // the set keeps a single copy of each cross edge.
        for (a, b) in [(u, v), (x, y), (u, x), (v, y), (u, y), (v, x)] {
            pairs.insert((a.min(b), a.max(b)));
        }
    }
    let pairs: Vec<_> = pairs.into_iter().collect();
    Ok(Graph::simple(2 * blocks as usize, &pairs).expect("k4-chain edges are valid"))
}

/// Cycle of length `len` with every edge tripled: a 6-regular multigraph
/// with 3·len edges and 3^len + 3·len cycles, extremal for the multigraph
/// cycle bound at average degree 6.
pub fn tripled_cycle(len: u32) -> Result<Graph, SizeError> {
    if len < 3 {
        return Err(size_err(
            "tripled-cycle",
            format!("needs cycle length ≥ 3, got {len}"),
        ));
    }
    let triples = (0..len).map(|i| (i, (i + 1) % len, 3));
    Ok(Graph::new(len as usize, triples).expect("tripled-cycle edges are valid"))
}

/// Circulant graph on Z_n with the given connection offsets: vertex i is
/// adjacent to i ± o for every offset o. Offsets must be distinct and lie
/// strictly between 0 and n/2, so the result is simple and 2·|offsets|-
/// regular with n·|offsets| edges.
pub fn circulant(n: u32, offsets: &[u32]) -> Result<Graph, SizeError> {
    if n < 3 {
        return Err(size_err("circulant", format!("needs n ≥ 3 vertices, got {n}")));
    }
    if offsets.is_empty() {
        return Err(size_err("circulant", "needs at least one offset"));
    }
    let mut seen = offsets.to_vec();
    seen.sort_unstable();
    for w in seen.windows(2) {
        if w[0] == w[1] {
            return Err(size_err(
                "circulant",
                format!("offset {} given more than once", w[0]),
            ));
        }
    }
    for &o in offsets {
        if o == 0 || 2 * o >= n {
            return Err(size_err(
                "circulant",
                format!("offset {o} must satisfy 0 < offset < n/2 = {n}/2"),
            ));
        }
    }
    let mut pairs = Vec::with_capacity(n as usize * offsets.len());
    for i in 0..n {
        for &o in offsets {
            pairs.push((i, (i + o) % n));
        }
    }
    Ok(Graph::simple(n as usize, &pairs).expect("circulant edges are valid"))
}

/// The named construction families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    EarPath,
    K4Chain,
    TripledCycle,
    Circulant,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::EarPath,
        Family::K4Chain,
        Family::TripledCycle,
        Family::Circulant,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::EarPath => "ear-path",
            Family::K4Chain => "k4-chain",
            Family::TripledCycle => "tripled-cycle",
            Family::Circulant => "circulant",
        }
    }

    /// Generate the family member of the given size. `offsets` is consulted
    /// only by the circulant family and must be empty for every other one.
    pub fn generate(self, size: u32, offsets: &[u32]) -> Result<Construction, SizeError> {
        if self != Family::Circulant && !offsets.is_empty() {
            return Err(size_err(
                self.name(),
                "offsets are only meaningful for the circulant family",
            ));
        }
        let construction = match self {
            Family::EarPath => {
                let (graph, s, t) = ear_path(size)?;
                Construction {
                    graph,
                    terminals: Some((s, t)),
                }
            }
            Family::K4Chain => Construction {
                graph: k4_chain(size)?,
                terminals: None,
            },
            Family::TripledCycle => Construction {
                graph: tripled_cycle(size)?,
                terminals: None,
            },
            Family::Circulant => Construction {
                graph: circulant(size, offsets)?,
                terminals: None,
            },
        };
        Ok(construction)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Family, String> {
        Family::ALL
            .iter()
            .copied()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                format!(
                    "unknown family `{s}` (expected one of: ear-path, k4-chain, \
                     tripled-cycle, circulant)"
                )
            })
    }
}

/// A generated graph, with the terminal pair attached when the family
/// distinguishes one (the ear-path family counts s–t paths).
#[derive(Debug, Clone)]
pub struct Construction {
    pub graph: Graph,
    pub terminals: Option<(usize, usize)>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{count_cycles, count_st_paths};
    use num_bigint::BigUint;

    #[test]
    fn ear_path_shape() {
        let (g, s, t) = ear_path(5).unwrap();
        assert_eq!((s, t), (0, 5));
        assert_eq!(g.vertex_count(), 11);
        assert_eq!(g.edge_count(), 15);
        assert!(g.is_simple());
        // Terminals and ears have degree 2, interior path vertices degree 4.
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.degree(5), 2);
        for v in 1..5 {
            assert_eq!(g.degree(v), 4);
        }
        for v in 6..11 {
            assert_eq!(g.degree(v), 2);
        }
    }

    #[test]
    fn ear_path_counts_double_per_edge() {
        for m in [1u32, 3, 5, 8] {
            let (g, s, t) = ear_path(m).unwrap();
            let paths = count_st_paths(&g, s, t).unwrap();
            assert_eq!(paths, BigUint::from(2u64).pow(m), "m = {m}");
        }
    }

    #[test]
    fn ear_path_smallest_is_triangle() {
        let (g, _, _) = ear_path(1).unwrap();
        assert_eq!(g.serialize(), Graph::complete(3).serialize());
        assert!(ear_path(0).is_err());
    }

    #[test]
    fn k4_chain_shape_and_counts() {
        assert!(k4_chain(1).is_err());
        // The two joins of the two-block necklace coincide: exactly K₄.
        assert_eq!(
            k4_chain(2).unwrap().serialize(),
            Graph::complete(4).serialize()
        );
        assert_eq!(
            k4_chain(3).unwrap().serialize(),
            Graph::complete(6).serialize()
        );
        let expected = [197u64, 804, 3315, 14378];
        for (i, &want) in expected.iter().enumerate() {
            let blocks = i as u32 + 3;
            let g = k4_chain(blocks).unwrap();
            assert_eq!(g.vertex_count(), 2 * blocks as usize);
            assert_eq!(g.edge_count(), 5 * u64::from(blocks));
            assert!((0..g.vertex_count()).all(|v| g.degree(v) == 5));
            assert_eq!(count_cycles(&g), BigUint::from(want), "blocks = {blocks}");
        }
    }

    #[test]
    fn tripled_cycle_counts() {
        assert!(tripled_cycle(2).is_err());
        for len in 3u32..=6 {
            let g = tripled_cycle(len).unwrap();
            assert_eq!(g.vertex_count(), len as usize);
            assert_eq!(g.edge_count(), 3 * u64::from(len));
            assert!((0..g.vertex_count()).all(|v| g.degree(v) == 6));
            let want = BigUint::from(3u64).pow(len) + BigUint::from(3 * u64::from(len));
            assert_eq!(count_cycles(&g), want, "len = {len}");
        }
    }

    #[test]
    fn circulant_counts() {
        assert_eq!(
            circulant(5, &[1, 2]).unwrap().serialize(),
            Graph::complete(5).serialize()
        );
        let expected = [37u64, 63, 107, 179, 305];
        for (i, &want) in expected.iter().enumerate() {
            let n = i as u32 + 5;
            let g = circulant(n, &[1, 2]).unwrap();
            assert_eq!(g.vertex_count(), n as usize);
            assert_eq!(g.edge_count(), 2 * u64::from(n));
            assert!((0..g.vertex_count()).all(|v| g.degree(v) == 4));
            assert_eq!(count_cycles(&g), BigUint::from(want), "n = {n}");
        }
        // Plain cycle as the single-offset case.
        let c5 = circulant(5, &[1]).unwrap();
        assert_eq!(count_cycles(&c5), BigUint::from(1u64));
    }

    #[test]
    fn circulant_rejects_bad_offsets() {
        assert!(circulant(2, &[1]).is_err());
        assert!(circulant(6, &[]).is_err());
        assert!(circulant(6, &[0]).is_err());
        assert!(circulant(6, &[3]).is_err(), "offset n/2 would double edges");
        assert!(circulant(6, &[1, 1]).is_err());
        assert!(circulant(6, &[1, 2]).is_ok());
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("theta-graph".parse::<Family>().is_err());
    }

    #[test]
    fn generate_wires_terminals_and_offsets() {
        let c = Family::EarPath.generate(4, &[]).unwrap();
        assert_eq!(c.terminals, Some((0, 4)));
        assert_eq!(c.graph.vertex_count(), 9);

        let c = Family::K4Chain.generate(4, &[]).unwrap();
        assert_eq!(c.terminals, None);

        let c = Family::Circulant.generate(7, &[1, 2]).unwrap();
        assert_eq!(c.graph.edge_count(), 14);

        assert!(Family::K4Chain.generate(3, &[1]).is_err());
    }
}
