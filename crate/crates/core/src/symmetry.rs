//! Exact enumeration of Aut(Γ) by colour refinement followed by backtracking.

use crate::error::{Error, Result};
use crate::graph::{SimplicialGraph, Vertex};

/// A bijection on vertex indices; `image[v]` is the image of `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphPermutation {
    image: Vec<Vertex>,
}

impl GraphPermutation {
    pub fn identity(n: usize) -> Self {
        Self {
            image: (0..n).collect(),
        }
    }

    /// Builds a permutation from its image list; fails if it is not a bijection.
    pub fn from_images(image: Vec<Vertex>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &v in &image {
            if v >= image.len() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidParameters(format!(
                    "{image:?} is not a permutation"
                )));
            }
        }
        Ok(Self { image })
    }

    pub fn images(&self) -> &[Vertex] {
        &self.image
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        self.image[v]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            image: other.image.iter().map(|&v| self.image[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.image.len()];
        for (v, &w) in self.image.iter().enumerate() {
            image[w] = v;
        }
        Self { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(v, &w)| v == w)
    }

    /// True iff the permutation preserves adjacency and non-adjacency.
    pub fn is_automorphism_of(&self, g: &SimplicialGraph) -> bool {
        self.image.len() == g.len()
            && g.vertices().all(|u| {
                g.vertices()
                    .all(|v| g.adjacent(u, v) == g.adjacent(self.image[u], self.image[v]))
            })
    }
}

/// Bounds on the automorphism search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_vertices: usize,
    pub max_automorphisms: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            max_vertices: 64,
            max_automorphisms: 100_000,
        }
    }
}

/// Stable colouring under 1-dimensional Weisfeiler-Leman refinement, seeded
/// with vertex degrees. Colours are small integers assigned canonically, so
/// two vertices related by an automorphism always share a colour.
pub fn refined_colouring(g: &SimplicialGraph) -> Vec<usize> {
    let mut colour: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut classes = count_distinct(&colour);
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = g
            .vertices()
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).iter().map(|&w| colour[w]).collect();
                around.sort_unstable();
                (colour[v], around)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        colour = signatures
            .iter()
            .map(|s| distinct.binary_search(s).expect("signature present"))
            .collect();
        let refined = distinct.len();
        if refined == classes {
            return colour;
        }
        classes = refined;
    }
}

fn count_distinct(values: &[usize]) -> usize {
    let mut v = values.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

/// All automorphisms of `g` under the default limits.
pub fn graph_automorphisms(g: &SimplicialGraph) -> Result<Vec<GraphPermutation>> {
    graph_automorphisms_with(g, SearchLimits::default())
}

/// The full automorphism group of `g`, sorted by image list (so the identity
/// comes first).
pub fn graph_automorphisms_with(
    g: &SimplicialGraph,
    limits: SearchLimits,
) -> Result<Vec<GraphPermutation>> {
    let n = g.len();
    if n > limits.max_vertices {
        return Err(Error::TooManyVertices {
            vertices: n,
            limit: limits.max_vertices,
        });
    }
    let colour = refined_colouring(g);
    let order = search_order(g, &colour);
    let mut search = Backtrack {
        g,
        colour: &colour,
        order: &order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        found: Vec::new(),
        limit: limits.max_automorphisms,
    };
    search.extend(0)?;
    let mut found = search.found;
    found.sort();
    Ok(found)
}

pub fn is_asymmetric(g: &SimplicialGraph) -> Result<bool> {
    Ok(graph_automorphisms(g)?.len() == 1)
}

/// Assignment order: start from the smallest colour cell, then always pick
/// the unplaced vertex with the most already-placed neighbours.
fn search_order(g: &SimplicialGraph, colour: &[usize]) -> Vec<Vertex> {
    let n = g.len();
    let mut cell_size = vec![0usize; n];
    for &c in colour {
        cell_size[c] += 1;
    }
    let mut placed = vec![false; n];
    let mut weight = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = g
            .vertices()
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(weight[v]), cell_size[colour[v]], v))
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(next);
        for &w in g.neighbors(next) {
            weight[w] += 1;
        }
    }
    order
}

struct Backtrack<'a> {
    g: &'a SimplicialGraph,
    colour: &'a [usize],
    order: &'a [Vertex],
    map: Vec<Vertex>,
    used: Vec<bool>,
    found: Vec<GraphPermutation>,
    limit: usize,
}

impl Backtrack<'_> {
    fn extend(&mut self, depth: usize) -> Result<()> {
        if depth == self.order.len() {
            if self.found.len() >= self.limit {
                return Err(Error::TooManyAutomorphisms { limit: self.limit });
            }
            self.found.push(GraphPermutation {
                image: self.map.clone(),
            });
            return Ok(());
        }
        let u = self.order[depth];
        for w in self.g.vertices() {
            if self.used[w] || self.colour[w] != self.colour[u] || !self.consistent(depth, u, w) {
                continue;
            }
            self.map[u] = w;
            self.used[w] = true;
            self.extend(depth + 1)?;
            self.used[w] = false;
            self.map[u] = usize::MAX;
        }
        Ok(())
    }

    fn consistent(&self, depth: usize, u: Vertex, w: Vertex) -> bool {
        self.order[..depth]
            .iter()
            .all(|&p| self.g.adjacent(u, p) == self.g.adjacent(w, self.map[p]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups() {
        let c4 = SimplicialGraph::cycle(&["a", "b", "c", "d"]).unwrap();
        let autos = graph_automorphisms(&c4).unwrap();
        assert_eq!(autos.len(), 8);
        assert!(autos[0].is_identity());
        let k1 = SimplicialGraph::with_vertices(&["v"]).unwrap();
        assert_eq!(graph_automorphisms(&k1).unwrap().len(), 1);
        assert!(is_asymmetric(&k1).unwrap());
        assert!(!is_asymmetric(&c4).unwrap());
        let empty = SimplicialGraph::default();
        assert_eq!(graph_automorphisms(&empty).unwrap().len(), 1);
    }

    #[test]
    fn limits_are_enforced() {
        let names: Vec<String> = (0..5).map(|i| format!("v{i}")).collect();
        let k5 = SimplicialGraph::complete(&names).unwrap();
        let tight = SearchLimits {
            max_vertices: 4,
            max_automorphisms: 1000,
        };
        assert!(matches!(
            graph_automorphisms_with(&k5, tight),
            Err(Error::TooManyVertices {
                vertices: 5,
                limit: 4
            })
        ));
        let few = SearchLimits {
            max_vertices: 64,
            max_automorphisms: 100,
        };
        assert!(matches!(
            graph_automorphisms_with(&k5, few),
            Err(Error::TooManyAutomorphisms { limit: 100 })
        ));
    }

    #[test]
    fn permutation_algebra() {
        let p = GraphPermutation::from_images(vec![1, 2, 0]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.compose(&p).images(), &[2, 0, 1]);
        assert!(GraphPermutation::from_images(vec![0, 0]).is_err());
    }
}
