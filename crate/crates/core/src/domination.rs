//! The domination preorder `y ≤ x ⟺ lk(y) ⊆ st(x)`, its equivalence classes,
//! the orbits of those classes under graph symmetries, and the `T(p,q,r)`
//! vertex labels obtained from a linear extension of the orbit order.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{SimplicialGraph, Vertex};
use crate::symmetry::{graph_automorphisms, GraphPermutation};

/// True iff `y` is dominated by `x`, i.e. `lk(y) ⊆ st(x)`. Every vertex
/// dominates itself.
pub fn dominates(g: &SimplicialGraph, x: Vertex, y: Vertex) -> Result<bool> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    Ok(dominates_unchecked(g, x, y))
}

pub(crate) fn dominates_unchecked(g: &SimplicialGraph, x: Vertex, y: Vertex) -> bool {
    g.neighbors(y).iter().all(|&w| w == x || g.adjacent(w, x))
}

/// True iff some vertex is dominated by a different vertex.
pub fn has_dominated_vertex(g: &SimplicialGraph) -> bool {
    dominated_pairs(g).next().is_some()
}

/// All `(x, y)` with `x ≠ y` and `y ≤ x`, ordered by `(x, y)`.
pub fn dominated_pairs(g: &SimplicialGraph) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
    g.vertices().flat_map(move |x| {
        g.vertices()
            .filter(move |&y| y != x && dominates_unchecked(g, x, y))
            .map(move |y| (x, y))
    })
}

/// Position of `T(p,q,r)`: the `r`-th vertex of the `q`-th class of the
/// `p`-th orbit, all 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    pub p: usize,
    pub q: usize,
    pub r: usize,
}

#[derive(Clone, Debug)]
pub struct DominationStructure {
    /// Domination classes, each sorted, listed by smallest member.
    pub classes: Vec<Vec<Vertex>>,
    pub class_of: Vec<usize>,
    /// `class_le[i][j]` iff class `i` ≤ class `j`.
    pub class_le: Vec<Vec<bool>>,
    /// Orbits of classes under Aut(Γ), each a sorted list of class indices,
    /// listed by smallest class index.
    pub orbits: Vec<Vec<usize>>,
    pub orbit_of_class: Vec<usize>,
    /// `orbit_ll[i][j]` iff orbit `i` ≪ orbit `j`.
    pub orbit_ll: Vec<Vec<bool>>,
    /// Orbit indices in the chosen linear extension of ≪.
    pub orbit_sequence: Vec<usize>,
    pub labels: Vec<Label>,
}

impl DominationStructure {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    /// Vertex carrying the given label.
    pub fn vertex_at(&self, label: Label) -> Option<Vertex> {
        self.labels.iter().position(|&l| l == label)
    }

    /// True iff `y ≤ x` as vertices (read off the class order).
    pub fn le(&self, y: Vertex, x: Vertex) -> bool {
        self.class_le[self.class_of[y]][self.class_of[x]]
    }
}

/// The structure with canonical tie-breaking (declaration order).
pub fn domination_structure(g: &SimplicialGraph) -> Result<DominationStructure> {
    let autos = graph_automorphisms(g)?;
    let priority: Vec<usize> = g.vertices().collect();
    domination_structure_with(g, &autos, &priority)
}

/// Builds the structure from a precomputed automorphism group. `priority`
/// ranks vertices for tie-breaking (lower first) in the linear extension of
/// ≪ and in the within-orbit and within-class orders.
pub fn domination_structure_with(
    g: &SimplicialGraph,
    autos: &[GraphPermutation],
    priority: &[usize],
) -> Result<DominationStructure> {
    let n = g.len();
    if priority.len() != n {
        return Err(Error::InvalidParameters(
            "priority must rank every vertex".into(),
        ));
    }
    let le: Vec<Vec<bool>> = g
        .vertices()
        .map(|y| g.vertices().map(|x| dominates_unchecked(g, x, y)).collect())
        .collect();

    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<Vertex>> = Vec::new();
    for v in g.vertices() {
        if class_of[v] != usize::MAX {
            continue;
        }
        let members: Vec<Vertex> = (v..n).filter(|&w| le[v][w] && le[w][v]).collect();
        for &w in &members {
            class_of[w] = classes.len();
        }
        classes.push(members);
    }
    let class_le: Vec<Vec<bool>> = classes
        .iter()
        .map(|ci| classes.iter().map(|cj| le[ci[0]][cj[0]]).collect())
        .collect();

    let c = classes.len();
    let mut orbit_of_class = vec![usize::MAX; c];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..c {
        if orbit_of_class[start] != usize::MAX {
            continue;
        }
        let rep = classes[start][0];
        let mut members: BTreeSet<usize> = BTreeSet::new();
        for phi in autos {
            members.insert(class_of[phi.apply(rep)]);
        }
        for &m in &members {
            orbit_of_class[m] = orbits.len();
        }
        orbits.push(members.into_iter().collect());
    }

    // O_[v] ≪ O_[w] iff [v] ≤ [w'] for some [w'] in O_[w].
    let o = orbits.len();
    let orbit_ll: Vec<Vec<bool>> = (0..o)
        .map(|i| {
            let rep = orbits[i][0];
            (0..o)
                .map(|j| orbits[j].iter().any(|&wc| class_le[rep][wc]))
                .collect()
        })
        .collect();

    let orbit_sequence = linear_extension(&orbit_ll, |i| {
        orbits[i]
            .iter()
            .flat_map(|&cl| classes[cl].iter())
            .map(|&v| priority[v])
            .min()
            .unwrap_or(usize::MAX)
    })?;

    let mut labels = vec![Label { p: 0, q: 0, r: 0 }; n];
    for (pi, &orbit) in orbit_sequence.iter().enumerate() {
        let mut ordered_classes: Vec<&Vec<Vertex>> =
            orbits[orbit].iter().map(|&cl| &classes[cl]).collect();
        ordered_classes.sort_by_key(|cl| cl.iter().map(|&v| priority[v]).min());
        for (qi, class) in ordered_classes.into_iter().enumerate() {
            let mut members = class.clone();
            members.sort_by_key(|&v| priority[v]);
            for (ri, v) in members.into_iter().enumerate() {
                labels[v] = Label {
                    p: pi + 1,
                    q: qi + 1,
                    r: ri + 1,
                };
            }
        }
    }

    Ok(DominationStructure {
        classes,
        class_of,
        class_le,
        orbits,
        orbit_of_class,
        orbit_ll,
        orbit_sequence,
        labels,
    })
}

/// Kahn's algorithm on a reflexive relation, always releasing the available
/// node with the smallest key. Fails if the strict part has a cycle.
fn linear_extension<K: Ord>(rel: &[Vec<bool>], key: impl Fn(usize) -> K) -> Result<Vec<usize>> {
    let n = rel.len();
    let mut indegree: Vec<usize> = (0..n)
        .map(|j| (0..n).filter(|&i| i != j && rel[i][j]).count())
        .collect();
    let mut done = vec![false; n];
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let next = (0..n)
            .filter(|&i| !done[i] && indegree[i] == 0)
            .min_by_key(|&i| key(i))
            .ok_or_else(|| Error::Inconsistent("orbit relation is not antisymmetric".into()))?;
        done[next] = true;
        out.push(next);
        for j in 0..n {
            if j != next && rel[next][j] {
                indegree[j] -= 1;
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AntisymmetryReport {
    pub checked_pairs: usize,
    pub violations: Vec<String>,
}

impl AntisymmetryReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `[v] ≤ [w]` forces `|st(v)| ≤ |st(w)|`, with equality only
/// when `[v] = [w]`.
pub fn verify_order_antisymmetry(g: &SimplicialGraph) -> AntisymmetryReport {
    let mut report = AntisymmetryReport::default();
    for v in g.vertices() {
        for w in g.vertices() {
            if !dominates_unchecked(g, w, v) {
                continue;
            }
            report.checked_pairs += 1;
            let (sv, sw) = (g.degree(v) + 1, g.degree(w) + 1);
            if sv > sw {
                report.violations.push(format!(
                    "{} ≤ {} but |st| {} > {}",
                    g.name(v),
                    g.name(w),
                    sv,
                    sw
                ));
            } else if sv == sw && !dominates_unchecked(g, v, w) {
                report.violations.push(format!(
                    "{} ≤ {} with equal stars but not equivalent",
                    g.name(v),
                    g.name(w)
                ));
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2_k3() -> SimplicialGraph {
        let k2 = SimplicialGraph::complete(&["a1", "a2"]).unwrap();
        let k3 = SimplicialGraph::complete(&["b1", "b2", "b3"]).unwrap();
        SimplicialGraph::disjoint_union(&[k2, k3]).unwrap()
    }

    #[test]
    fn domination_on_path_and_complete() {
        let p3 = SimplicialGraph::path(&["a", "b", "c"]).unwrap();
        assert!(dominates(&p3, 1, 0).unwrap());
        assert!(!dominates(&p3, 0, 1).unwrap());
        for v in p3.vertices() {
            assert!(dominates(&p3, v, v).unwrap());
        }
        let k4 = SimplicialGraph::complete(&["a", "b", "c", "d"]).unwrap();
        for x in k4.vertices() {
            for y in k4.vertices() {
                assert!(dominates(&k4, x, y).unwrap());
            }
        }
        assert!(dominates(&p3, 0, 9).is_err());
    }

    #[test]
    fn dominated_vertex_detection() {
        let p3 = SimplicialGraph::path(&["a", "b", "c"]).unwrap();
        assert!(has_dominated_vertex(&p3));
        let k1 = SimplicialGraph::with_vertices(&["v"]).unwrap();
        assert!(!has_dominated_vertex(&k1));
    }

    #[test]
    fn structure_of_two_cliques() {
        let d = domination_structure(&k2_k3()).unwrap();
        assert_eq!(d.classes, vec![vec![0, 1], vec![2, 3, 4]]);
        assert_eq!(d.orbit_count(), 2);
        assert!(!d.orbit_ll[0][1] && !d.orbit_ll[1][0]);
        assert_eq!(d.labels[0], Label { p: 1, q: 1, r: 1 });
        assert_eq!(d.labels[4], Label { p: 2, q: 1, r: 3 });
    }

    #[test]
    fn swapped_cliques_share_an_orbit() {
        let a = SimplicialGraph::complete(&["a1", "a2"]).unwrap();
        let b = SimplicialGraph::complete(&["b1", "b2"]).unwrap();
        let g = SimplicialGraph::disjoint_union(&[a, b]).unwrap();
        let d = domination_structure(&g).unwrap();
        assert_eq!(d.class_count(), 2);
        assert_eq!(d.orbit_count(), 1);
        assert_eq!(d.labels[2], Label { p: 1, q: 2, r: 1 });
    }

    #[test]
    fn single_vertex() {
        let g = SimplicialGraph::with_vertices(&["v"]).unwrap();
        let d = domination_structure(&g).unwrap();
        assert_eq!(d.class_count(), 1);
        assert_eq!(d.orbit_count(), 1);
        assert_eq!(d.labels, vec![Label { p: 1, q: 1, r: 1 }]);
    }

    #[test]
    fn path_orbit_order() {
        // a ~ c (both links are {b}) and both are dominated by b.
        let p3 = SimplicialGraph::path(&["a", "b", "c"]).unwrap();
        let d = domination_structure(&p3).unwrap();
        assert_eq!(d.classes, vec![vec![0, 2], vec![1]]);
        assert_eq!(d.orbit_count(), 2);
        assert_eq!(d.labels[1], Label { p: 2, q: 1, r: 1 });
        assert_eq!(d.labels[2], Label { p: 1, q: 1, r: 2 });
    }

    #[test]
    fn antisymmetry_reports() {
        assert!(verify_order_antisymmetry(&k2_k3()).passed());
        assert!(
            verify_order_antisymmetry(&SimplicialGraph::path(&["a", "b", "c"]).unwrap()).passed()
        );
        let r = verify_order_antisymmetry(&SimplicialGraph::default());
        assert!(r.passed());
        assert_eq!(r.checked_pairs, 0);
    }
}
