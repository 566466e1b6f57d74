//! Witness graph families: the Frucht graph, cycles with a spoked hub, and
//! joins of a clique with pairwise distinct cliques.

use crate::domination::has_dominated_vertex;
use crate::error::{Error, Result};
use crate::graph::SimplicialGraph;
use crate::symmetry::is_asymmetric;

/// LCF code of the Frucht graph.
pub const FRUCHT_LCF: [i64; 12] = [-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2];

/// Graph from LCF notation: a Hamiltonian cycle `0..n` plus a chord from
/// each `i` to `i + code[i]`.
pub fn from_lcf(code: &[i64]) -> Result<SimplicialGraph> {
    let n = code.len();
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut g = SimplicialGraph::cycle(&names)?;
    for (i, &jump) in code.iter().enumerate() {
        let j = (i as i64 + jump).rem_euclid(n as i64) as usize;
        if j == i {
            return Err(Error::InvalidParameters(format!(
                "LCF jump {jump} is a self-loop"
            )));
        }
        g.insert_edge(i, j)?;
    }
    Ok(g)
}

/// The Frucht graph on vertices `0..11`: 12 vertices, 18 edges, cubic,
/// with trivial symmetry group. The defining properties are re-checked on
/// every call.
pub fn frucht() -> SimplicialGraph {
    let g = from_lcf(&FRUCHT_LCF).expect("Frucht LCF code is well formed");
    assert_eq!(g.len(), 12);
    assert_eq!(g.edge_count(), 18);
    assert!(
        g.vertices().all(|v| g.degree(v) == 3),
        "Frucht graph is cubic"
    );
    assert!(is_asymmetric(&g).expect("12 vertices is within bounds"));
    assert!(!has_dominated_vertex(&g));
    assert!(g.vertices().all(|v| g
        .star_cut_components(v)
        .map(|c| c.len() == 1)
        .unwrap_or(false)));
    g
}

/// Spoke positions `e₁ < … < e_t` (with `e₀ = 0` implicit) such that every
/// gap exceeds 2 and all gaps are pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpokeSet {
    spokes: Vec<u64>,
}

impl SpokeSet {
    pub fn new(spokes: Vec<u64>) -> Result<Self> {
        if spokes.len() < 3 {
            return Err(Error::InvalidParameters(format!(
                "need at least 3 spokes, got {}",
                spokes.len()
            )));
        }
        let mut gaps = Vec::with_capacity(spokes.len());
        let mut prev = 0u64;
        for &e in &spokes {
            if e <= prev {
                return Err(Error::InvalidParameters(
                    "spokes must be positive and strictly increasing".into(),
                ));
            }
            let gap = e - prev;
            if gap <= 2 {
                return Err(Error::InvalidParameters(format!(
                    "condition (1) fails: gap {prev}..{e} is {gap}, must exceed 2"
                )));
            }
            if gaps.contains(&gap) {
                return Err(Error::InvalidParameters(format!(
                    "condition (2) fails: gap {gap} occurs twice"
                )));
            }
            gaps.push(gap);
            prev = e;
        }
        Ok(Self { spokes })
    }

    pub fn spokes(&self) -> &[u64] {
        &self.spokes
    }

    /// Number of spokes `t`.
    pub fn count(&self) -> usize {
        self.spokes.len()
    }

    /// Length of the cycle, `e_t`.
    pub fn cycle_len(&self) -> u64 {
        *self.spokes.last().expect("at least three spokes")
    }
}

/// Cycle on `0..e_t` plus a hub `c` adjacent to `0, e₁, …, e_{t-1}`.
pub fn cycle_hub(spokes: &SpokeSet) -> Result<SimplicialGraph> {
    let n = spokes.cycle_len() as usize;
    let mut names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    names.push("c".to_string());
    let mut g = SimplicialGraph::with_vertices(&names)?;
    for i in 0..n {
        g.insert_edge(i, (i + 1) % n)?;
    }
    let hub = n;
    g.insert_edge(hub, 0)?;
    for &e in &spokes.spokes()[..spokes.count() - 1] {
        g.insert_edge(hub, e as usize)?;
    }
    Ok(g)
}

/// `join(K_k, K_{sizes[0]} ⊔ K_{sizes[1]} ⊔ …)`. The clique factor is named
/// `s1..sk`; component `i` is named `x{i}_1..`.
pub fn join_complete(k: usize, sizes: &[usize]) -> Result<SimplicialGraph> {
    if k == 0 {
        return Err(Error::InvalidParameters("k must be at least 1".into()));
    }
    if sizes.is_empty() {
        return Err(Error::InvalidParameters(
            "need at least one component".into(),
        ));
    }
    for (i, &s) in sizes.iter().enumerate() {
        if s < 2 {
            return Err(Error::InvalidParameters(format!(
                "component size {s} is below 2"
            )));
        }
        if sizes[..i].contains(&s) {
            return Err(Error::InvalidParameters(format!(
                "component size {s} is repeated"
            )));
        }
    }
    let social: Vec<String> = (1..=k).map(|i| format!("s{i}")).collect();
    let parts = sizes
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            let names: Vec<String> = (1..=s).map(|j| format!("x{}_{}", i + 1, j)).collect();
            SimplicialGraph::complete(&names)
        })
        .collect::<Result<Vec<_>>>()?;
    let delta = SimplicialGraph::disjoint_union(&parts)?;
    SimplicialGraph::join(&[SimplicialGraph::complete(&social)?, delta])
}
