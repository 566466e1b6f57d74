//! Graphs with social vertices: Γ = join(S, Δ) and A_Γ ≅ ℤ^k × A_Δ.
//!
//! The lateral transvections `τ(s,a)` (`s ∈ S`, `a ∈ Δ`) span a free abelian
//! normal subgroup of rank `k·|Δ|`. Diagonal sign matrices on that lattice
//! which commute with the abelianized action of Aut(A_Δ) are classified by a
//! union-find closure over Δ ("sign classes"); with `m` classes there are
//! `2^m` of them and they give `2^(m-1)` distinct outer classes in
//! Aut(Aut(A_Γ)).

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::One;

use crate::automorphisms::{
    abelianization_matrix, automorphisms_equal, compose, conjugate_automorphism,
    enumerate_ls_generators, invert, ls_to_automorphism, power, LsGenerator, RaagAutomorphism,
};
use crate::domination::{domination_structure_with, DominationStructure};
use crate::error::{Error, Result};
use crate::graph::{SimplicialGraph, Vertex};
use crate::matrix::IntMatrix;
use crate::symmetry::graph_automorphisms;
use crate::union_find::DisjointSets;

/// Vertices adjacent to every other vertex.
pub fn social_vertices(g: &SimplicialGraph) -> Vec<Vertex> {
    g.vertices()
        .filter(|&v| g.degree(v) + 1 == g.len())
        .collect()
}

#[derive(Clone, Debug)]
pub struct JoinDecomposition {
    /// Social vertices, as indices into Γ.
    pub social: Vec<Vertex>,
    /// Vertices of Δ as indices into Γ; position `i` is vertex `i` of `delta`.
    pub delta_vertices: Vec<Vertex>,
    pub delta: SimplicialGraph,
}

impl JoinDecomposition {
    pub fn k(&self) -> usize {
        self.social.len()
    }

    /// A decomposition with no social vertices whose Δ is `delta`, for
    /// studying the sign classes of a graph on its own.
    pub fn for_delta(delta: SimplicialGraph) -> Self {
        Self {
            social: Vec::new(),
            delta_vertices: delta.vertices().collect(),
            delta,
        }
    }

    /// Γ-index of Δ-vertex `a`.
    pub fn lift(&self, a: Vertex) -> Vertex {
        self.delta_vertices[a]
    }
}

pub fn join_decomposition(g: &SimplicialGraph) -> Result<JoinDecomposition> {
    let social = social_vertices(g);
    let delta_vertices: Vec<Vertex> = g.vertices().filter(|v| !social.contains(v)).collect();
    let delta = g.full_subgraph(&delta_vertices.iter().copied().collect())?;
    let s_graph = g.full_subgraph(&social.iter().copied().collect())?;
    let rebuilt = SimplicialGraph::join(&[s_graph, delta.clone()])?;
    let same = rebuilt.edge_count() == g.edge_count()
        && rebuilt.edges().iter().all(|&(u, v)| {
            let (a, b) = (g.vertex(rebuilt.name(u)), g.vertex(rebuilt.name(v)));
            matches!((a, b), (Ok(a), Ok(b)) if g.adjacent(a, b))
        });
    if !same {
        return Err(Error::Inconsistent("Γ is not join(S, Δ)".into()));
    }
    Ok(JoinDecomposition {
        social,
        delta_vertices,
        delta,
    })
}

/// Basis of the lateral lattice in Δ-block order: all `(s, a)` for the first
/// social vertex, then the second, and so on. Pairs are Γ-indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LateralLattice {
    pub basis: Vec<(Vertex, Vertex)>,
}

impl LateralLattice {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn generator(&self, i: usize) -> LsGenerator {
        let (s, a) = self.basis[i];
        LsGenerator::transvection(s, a)
    }
}

pub fn lateral_transvections(d: &JoinDecomposition) -> Result<LateralLattice> {
    if d.social.is_empty() {
        return Err(Error::Precondition("no social vertices".into()));
    }
    if d.delta.is_empty() {
        return Err(Error::Precondition("Δ is empty".into()));
    }
    let basis = d
        .social
        .iter()
        .flat_map(|&s| d.delta_vertices.iter().map(move |&a| (s, a)))
        .collect();
    Ok(LateralLattice { basis })
}

fn lateral_automorphisms(
    g: &SimplicialGraph,
    lattice: &LateralLattice,
) -> Result<Vec<RaagAutomorphism>> {
    (0..lattice.rank())
        .map(|i| ls_to_automorphism(g, &lattice.generator(i)))
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LatticeReport {
    pub skipped: bool,
    pub basis_size: usize,
    pub commuting_pairs_checked: usize,
    pub rank: usize,
    pub failures: Vec<String>,
}

impl LatticeReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that the lateral transvections pairwise commute, that
/// `τ(t,a) τ(s,a) τ(t,a)⁻¹ = τ(s,a)`, and that the matrices `M(τ) - I` are
/// linearly independent (rank `k·|Δ|`). Skipped when `k = 0` or Δ is empty.
pub fn verify_lateral_lattice(g: &SimplicialGraph, d: &JoinDecomposition) -> Result<LatticeReport> {
    let Ok(lattice) = lateral_transvections(d) else {
        return Ok(LatticeReport {
            skipped: true,
            ..LatticeReport::default()
        });
    };
    let taus = lateral_automorphisms(g, &lattice)?;
    let mut report = LatticeReport {
        basis_size: lattice.rank(),
        ..LatticeReport::default()
    };
    let name = |i: usize| {
        let (s, a) = lattice.basis[i];
        format!("τ({},{})", g.name(s), g.name(a))
    };
    for i in 0..taus.len() {
        for j in i + 1..taus.len() {
            report.commuting_pairs_checked += 1;
            if !automorphisms_equal(
                &compose(g, &taus[i], &taus[j]),
                &compose(g, &taus[j], &taus[i]),
            ) {
                report
                    .failures
                    .push(format!("{} and {} do not commute", name(i), name(j)));
            }
            let (s, a) = lattice.basis[i];
            let (t, b) = lattice.basis[j];
            if a == b && s != t {
                for (x, y) in [(i, j), (j, i)] {
                    if !automorphisms_equal(
                        &conjugate_automorphism(g, &taus[y], &taus[x]),
                        &taus[x],
                    ) {
                        report.failures.push(format!(
                            "{} {} {}⁻¹ ≠ {}",
                            name(y),
                            name(x),
                            name(y),
                            name(x)
                        ));
                    }
                }
            }
        }
    }
    let n = g.len();
    let id = IntMatrix::identity(n);
    let mut rows = IntMatrix::zeros(taus.len(), n * n);
    for (r, tau) in taus.iter().enumerate() {
        let diff = abelianization_matrix(g, tau).sub(&id);
        for (c, e) in diff.entries().iter().enumerate() {
            rows[(r, c)] = e.clone();
        }
    }
    report.rank = rows.rank();
    if report.rank != lattice.rank() {
        report.failures.push(format!(
            "abelianized lateral transvections have rank {}, expected {}",
            report.rank,
            lattice.rank()
        ));
    }
    Ok(report)
}

/// Partition of Δ's vertices (Δ-indices) into sign classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignClassPartition {
    pub classes: Vec<Vec<Vertex>>,
    pub class_of: Vec<usize>,
}

impl SignClassPartition {
    pub fn m(&self) -> usize {
        self.classes.len()
    }

    /// True iff `signs` (one entry per Δ-vertex) is constant on every class.
    pub fn is_constant_on_classes(&self, signs: &[i8]) -> bool {
        self.classes
            .iter()
            .all(|c| c.iter().all(|&v| signs[v] == signs[c[0]]))
    }
}

/// Sign classes with the canonical tie-break order.
pub fn sign_classes(d: &JoinDecomposition) -> Result<SignClassPartition> {
    let priority: Vec<usize> = d.delta.vertices().collect();
    sign_classes_with_priority(&d.delta, &priority)
}

/// Sign classes of `delta` computed from the `T(p,q,r)` labels produced with
/// the given tie-break priority: vertices sharing an orbit index `p` are
/// merged, as are any two distinct vertices where one dominates the other.
/// The resulting partition does not depend on `priority`.
pub fn sign_classes_with_priority(
    delta: &SimplicialGraph,
    priority: &[usize],
) -> Result<SignClassPartition> {
    let autos = graph_automorphisms(delta)?;
    let structure = domination_structure_with(delta, &autos, priority)?;
    Ok(sign_classes_from_structure(delta, &structure))
}

pub(crate) fn sign_classes_from_structure(
    delta: &SimplicialGraph,
    structure: &DominationStructure,
) -> SignClassPartition {
    let n = delta.len();
    let mut uf = DisjointSets::new(n);
    let mut first_in_orbit: BTreeMap<usize, Vertex> = BTreeMap::new();
    for v in delta.vertices() {
        let p = structure.labels[v].p;
        match first_in_orbit.get(&p) {
            Some(&u) => {
                uf.union(u, v);
            }
            None => {
                first_in_orbit.insert(p, v);
            }
        }
    }
    for x in delta.vertices() {
        for y in delta.vertices() {
            if x != y && structure.le(y, x) {
                uf.union(x, y);
            }
        }
    }
    let classes = uf.blocks();
    let mut class_of = vec![0; n];
    for (i, c) in classes.iter().enumerate() {
        for &v in c {
            class_of[v] = i;
        }
    }
    SignClassPartition { classes, class_of }
}

/// |C(Q)| = 2^m.
pub fn centralizer_order(d: &JoinDecomposition) -> Result<BigUint> {
    if d.delta.is_empty() {
        return Err(Error::Precondition(
            "Δ is empty; the centralizer is undefined".into(),
        ));
    }
    let m = sign_classes(d)?.m();
    Ok(BigUint::one() << m)
}

/// The abelianized LS generators of Aut(A_Δ), which generate Φ_Δ.
#[derive(Clone, Debug)]
pub struct PhiGenerators {
    pub generators: Vec<LsGenerator>,
    pub matrices: Vec<IntMatrix>,
}

impl PhiGenerators {
    pub fn new(delta: &SimplicialGraph) -> Result<Self> {
        let generators = enumerate_ls_generators(delta)?;
        let matrices = generators
            .iter()
            .map(|gen| ls_to_automorphism(delta, gen).map(|f| abelianization_matrix(delta, &f)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            generators,
            matrices,
        })
    }

    /// True iff the diagonal matrix with the given ±1 entries commutes with
    /// every generator matrix.
    pub fn centralized_by(&self, signs: &[i8]) -> Result<bool> {
        let n = self.matrices.first().map_or(signs.len(), IntMatrix::rows);
        if signs.len() != n || signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidParameters(
                "signs must give ±1 for every vertex of Δ".into(),
            ));
        }
        let e = IntMatrix::diagonal(&signs.iter().map(|&s| i64::from(s)).collect::<Vec<_>>());
        Ok(self.matrices.iter().all(|m| e.commutes_with(m)))
    }
}

/// True iff `diag(signs)` (indexed by Δ-vertex) centralizes Φ_Δ.
pub fn check_sign_matrix_centralizes(d: &JoinDecomposition, signs: &[i8]) -> Result<bool> {
    PhiGenerators::new(&d.delta)?.centralized_by(signs)
}

/// Number of ±1 vectors on Δ whose diagonal matrix centralizes Φ_Δ, by
/// exhaustive enumeration (|Δ| ≤ 20).
pub fn count_centralizing_sign_vectors(d: &JoinDecomposition) -> Result<u64> {
    let n = d.delta.len();
    if n > 20 {
        return Err(Error::Precondition(format!(
            "|Δ| = {n} is too large to enumerate"
        )));
    }
    let phi = PhiGenerators::new(&d.delta)?;
    let mut count = 0;
    for mask in 0u64..(1 << n) {
        if phi.centralized_by(&signs_from_mask(mask, n))? {
            count += 1;
        }
    }
    Ok(count)
}

/// Bit `i` of `mask` set means a `-1` at position `i`.
pub fn signs_from_mask(mask: u64, n: usize) -> Vec<i8> {
    (0..n)
        .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
        .collect()
}

/// The action on Aut(A_Γ) generators of the automorphism induced by a
/// centralizing sign matrix: `τ(s,a) ↦ τ(s,a)^{sign(a)}`, every other LS
/// generator fixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignAction {
    /// Sign per Γ-vertex of Δ.
    pub signs: BTreeMap<Vertex, i8>,
    pub social: BTreeSet<Vertex>,
}

impl SignAction {
    pub fn is_trivial(&self) -> bool {
        self.signs.values().all(|&s| s == 1)
    }

    /// Image of an LS generator of Aut(A_Γ).
    pub fn image(&self, g: &SimplicialGraph, gen: &LsGenerator) -> Result<RaagAutomorphism> {
        let f = ls_to_automorphism(g, gen)?;
        if let LsGenerator::Transvection { by, target } = gen {
            if self.social.contains(by) {
                if let Some(&sign) = self.signs.get(target) {
                    return Ok(power(g, &f, i64::from(sign)));
                }
            }
        }
        Ok(f)
    }
}

pub fn sign_automorphism(d: &JoinDecomposition, signs: &[i8]) -> Result<SignAction> {
    if !check_sign_matrix_centralizes(d, signs)? {
        return Err(Error::Precondition(
            "sign assignment does not centralize the abelianized action of Aut(A_Δ)".into(),
        ));
    }
    Ok(SignAction {
        signs: d
            .delta_vertices
            .iter()
            .zip(signs)
            .map(|(&v, &s)| (v, s))
            .collect(),
        social: d.social.iter().copied().collect(),
    })
}

/// `ι`: the product of the inversions of all social vertices.
pub fn central_inversion(g: &SimplicialGraph, d: &JoinDecomposition) -> Result<RaagAutomorphism> {
    let mut iota = RaagAutomorphism::identity(g);
    for &s in &d.social {
        iota = compose(
            g,
            &ls_to_automorphism(g, &LsGenerator::Inversion(s))?,
            &iota,
        );
    }
    Ok(iota)
}

/// Certified lower bound `2^(m-1)` on |Out(Aut(A_Γ))| for Γ with social
/// vertices and nonempty Δ.
pub fn out_aut_lower_bound_center(g: &SimplicialGraph) -> Result<BigUint> {
    let d = join_decomposition(g)?;
    if d.social.is_empty() {
        return Err(Error::Precondition("Γ has no social vertex".into()));
    }
    if d.delta.is_empty() {
        return Err(Error::Precondition("Δ is empty".into()));
    }
    let m = sign_classes(&d)?.m();
    Ok(BigUint::one() << (m - 1))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SplitReport {
    pub skipped: bool,
    pub conjugates_checked: usize,
    pub failures: Vec<String>,
}

impl SplitReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every LS generator `λ` and lateral transvection `τ`, checks that
/// `λ τ λ⁻¹` is a product of lateral transvections. Coefficients are read
/// from the abelianization and the product is then confirmed exactly.
pub fn verify_split_normality(g: &SimplicialGraph) -> Result<SplitReport> {
    let d = join_decomposition(g)?;
    let Ok(lattice) = lateral_transvections(&d) else {
        return Ok(SplitReport {
            skipped: true,
            ..SplitReport::default()
        });
    };
    let taus = lateral_automorphisms(g, &lattice)?;
    let gens = enumerate_ls_generators(g)?;
    let mut report = SplitReport::default();
    for gen in &gens {
        let lambda = ls_to_automorphism(g, gen)?;
        for (i, tau) in taus.iter().enumerate() {
            report.conjugates_checked += 1;
            let conj = conjugate_automorphism(g, &lambda, tau);
            let label = || {
                let (s, a) = lattice.basis[i];
                format!("{} · τ({},{})", gen.display(g), g.name(s), g.name(a))
            };
            match lateral_product_matching(g, &lattice, &taus, &conj) {
                Some(product) if automorphisms_equal(&product, &conj) => {}
                Some(_) => report
                    .failures
                    .push(format!("{}: product mismatch", label())),
                None => report
                    .failures
                    .push(format!("{}: abelianization leaves the lattice", label())),
            }
        }
    }
    Ok(report)
}

/// The product of lateral transvections whose abelianization matches `f`, if
/// `M(f) - I` is supported on lattice coordinates.
fn lateral_product_matching(
    g: &SimplicialGraph,
    lattice: &LateralLattice,
    taus: &[RaagAutomorphism],
    f: &RaagAutomorphism,
) -> Option<RaagAutomorphism> {
    let diff = abelianization_matrix(g, f).sub(&IntMatrix::identity(g.len()));
    let mut covered = vec![false; g.len() * g.len()];
    let mut product = RaagAutomorphism::identity(g);
    for (i, &(s, a)) in lattice.basis.iter().enumerate() {
        covered[s * g.len() + a] = true;
        let coefficient: i64 = (&diff[(s, a)]).try_into().ok()?;
        if coefficient != 0 {
            product = compose(g, &power(g, &taus[i], coefficient), &product);
        }
    }
    let outside = diff
        .entries()
        .iter()
        .zip(&covered)
        .any(|(e, &c)| !c && *e != 0.into());
    (!outside).then_some(product)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IotaReport {
    pub transvections_checked: usize,
    pub failures: Vec<String>,
}

impl IotaReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `ι τ ι⁻¹ = τ⁻¹ ≠ τ` for every lateral transvection `τ`. Vacuous
/// when there are none.
pub fn iota_noncentrality_check(g: &SimplicialGraph) -> Result<IotaReport> {
    let d = join_decomposition(g)?;
    let mut report = IotaReport::default();
    let Ok(lattice) = lateral_transvections(&d) else {
        return Ok(report);
    };
    let iota = central_inversion(g, &d)?;
    for (i, tau) in lateral_automorphisms(g, &lattice)?.iter().enumerate() {
        report.transvections_checked += 1;
        let conj = conjugate_automorphism(g, &iota, tau);
        let (s, a) = lattice.basis[i];
        if !automorphisms_equal(&conj, &invert(tau)) {
            report.failures.push(format!(
                "ι τ({},{}) ι⁻¹ is not the inverse",
                g.name(s),
                g.name(a)
            ));
        }
        if automorphisms_equal(&conj, tau) {
            report
                .failures
                .push(format!("ι centralizes τ({},{})", g.name(s), g.name(a)));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::join_complete;

    fn k2_k3() -> SimplicialGraph {
        let k2 = SimplicialGraph::complete(&["a1", "a2"]).unwrap();
        let k3 = SimplicialGraph::complete(&["b1", "b2", "b3"]).unwrap();
        SimplicialGraph::disjoint_union(&[k2, k3]).unwrap()
    }

    fn k2_k2() -> SimplicialGraph {
        let a = SimplicialGraph::complete(&["a1", "a2"]).unwrap();
        let b = SimplicialGraph::complete(&["b1", "b2"]).unwrap();
        SimplicialGraph::disjoint_union(&[a, b]).unwrap()
    }

    fn with_center(k: usize, delta: SimplicialGraph) -> SimplicialGraph {
        let names: Vec<String> = (1..=k).map(|i| format!("s{i}")).collect();
        SimplicialGraph::join(&[SimplicialGraph::complete(&names).unwrap(), delta]).unwrap()
    }

    #[test]
    fn social_sets() {
        let k4 = SimplicialGraph::complete(&["a", "b", "c", "d"]).unwrap();
        assert_eq!(social_vertices(&k4), vec![0, 1, 2, 3]);
        assert!(social_vertices(&crate::families::frucht()).is_empty());
        let g = with_center(2, k2_k3());
        assert_eq!(social_vertices(&g), vec![0, 1]);
    }

    #[test]
    fn decompositions() {
        let g = with_center(2, k2_k3());
        let d = join_decomposition(&g).unwrap();
        assert_eq!(d.k(), 2);
        assert_eq!(d.delta, k2_k3());
        let f = join_decomposition(&crate::families::frucht()).unwrap();
        assert_eq!(f.k(), 0);
        let k3 = join_decomposition(&SimplicialGraph::complete(&["a", "b", "c"]).unwrap()).unwrap();
        assert_eq!(k3.k(), 3);
        assert!(k3.delta.is_empty());
    }

    #[test]
    fn lattice_ranks() {
        let d = join_decomposition(&with_center(2, k2_k3())).unwrap();
        assert_eq!(lateral_transvections(&d).unwrap().rank(), 10);
        let d = join_decomposition(&with_center(
            1,
            SimplicialGraph::with_vertices(&["a"]).unwrap(),
        ))
        .unwrap();
        // K₁ * K₁ is K₂: both vertices are social, so Δ is empty
        assert!(lateral_transvections(&d).is_err());
        let d = join_decomposition(&crate::families::frucht()).unwrap();
        assert!(lateral_transvections(&d).is_err());
    }

    #[test]
    fn lattice_verification() {
        let g = with_center(2, k2_k3());
        let r = verify_lateral_lattice(&g, &join_decomposition(&g).unwrap()).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.rank, 10);
        let free2 = SimplicialGraph::with_vertices(&["a", "b"]).unwrap();
        let g = with_center(1, free2);
        let r = verify_lateral_lattice(&g, &join_decomposition(&g).unwrap()).unwrap();
        assert!(r.passed());
        assert_eq!(r.rank, 2);
        let f = crate::families::frucht();
        assert!(
            verify_lateral_lattice(&f, &join_decomposition(&f).unwrap())
                .unwrap()
                .skipped
        );
    }

    #[test]
    fn sign_class_counts() {
        let d = join_decomposition(&with_center(1, k2_k3())).unwrap();
        assert_eq!(sign_classes(&d).unwrap().m(), 2);
        assert_eq!(centralizer_order(&d).unwrap(), BigUint::from(4u32));
        let d = join_decomposition(&with_center(1, k2_k2())).unwrap();
        assert_eq!(sign_classes(&d).unwrap().m(), 1);
        assert_eq!(centralizer_order(&d).unwrap(), BigUint::from(2u32));
        let single =
            sign_classes_with_priority(&SimplicialGraph::with_vertices(&["v"]).unwrap(), &[0])
                .unwrap();
        assert_eq!(single.m(), 1);
        let k3 = join_decomposition(&SimplicialGraph::complete(&["a", "b", "c"]).unwrap()).unwrap();
        assert!(centralizer_order(&k3).is_err());
    }

    #[test]
    fn sign_matrix_checks() {
        let d = join_decomposition(&with_center(1, k2_k3())).unwrap();
        assert!(check_sign_matrix_centralizes(&d, &[1, 1, -1, -1, -1]).unwrap());
        assert!(check_sign_matrix_centralizes(&d, &[1; 5]).unwrap());
        assert!(!check_sign_matrix_centralizes(&d, &[1, -1, 1, 1, 1]).unwrap());
        assert!(check_sign_matrix_centralizes(&d, &[1, 1]).is_err());
        let d = join_decomposition(&with_center(1, k2_k2())).unwrap();
        assert!(!check_sign_matrix_centralizes(&d, &[1, 1, -1, -1]).unwrap());
        assert!(check_sign_matrix_centralizes(&d, &[-1, -1, -1, -1]).unwrap());
    }

    #[test]
    fn sign_actions() {
        let g = with_center(2, k2_k3());
        let d = join_decomposition(&g).unwrap();
        let plus = sign_automorphism(&d, &[1; 5]).unwrap();
        assert!(plus.is_trivial());
        let lattice = lateral_transvections(&d).unwrap();
        let iota = central_inversion(&g, &d).unwrap();
        let minus = sign_automorphism(&d, &[-1; 5]).unwrap();
        for i in 0..lattice.rank() {
            let gen = lattice.generator(i);
            let tau = ls_to_automorphism(&g, &gen).unwrap();
            assert!(automorphisms_equal(
                &minus.image(&g, &gen).unwrap(),
                &conjugate_automorphism(&g, &iota, &tau)
            ));
            assert!(automorphisms_equal(&plus.image(&g, &gen).unwrap(), &tau));
        }
        let mixed = sign_automorphism(&d, &[1, 1, -1, -1, -1]).unwrap();
        assert!(!mixed.is_trivial());
        // mixed signs agree with neither the identity nor conjugation by ι
        let first = lattice.generator(0);
        let last = lattice.generator(lattice.rank() - 1);
        let t_first = ls_to_automorphism(&g, &first).unwrap();
        let t_last = ls_to_automorphism(&g, &last).unwrap();
        assert!(automorphisms_equal(
            &mixed.image(&g, &first).unwrap(),
            &t_first
        ));
        assert!(automorphisms_equal(
            &mixed.image(&g, &last).unwrap(),
            &invert(&t_last)
        ));
        // non-lateral generators are fixed
        let inv = LsGenerator::Inversion(3);
        assert!(automorphisms_equal(
            &mixed.image(&g, &inv).unwrap(),
            &ls_to_automorphism(&g, &inv).unwrap()
        ));
        assert!(sign_automorphism(&d, &[1, -1, 1, 1, 1]).is_err());
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(
            out_aut_lower_bound_center(&join_complete(2, &[2, 3]).unwrap()).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(
            out_aut_lower_bound_center(&join_complete(1, &[2, 3, 4, 5]).unwrap()).unwrap(),
            BigUint::from(8u32)
        );
        let k1_k2 = with_center(1, SimplicialGraph::with_vertices(&["a", "b"]).unwrap());
        assert_eq!(
            out_aut_lower_bound_center(&k1_k2).unwrap(),
            BigUint::from(1u32)
        );
        assert!(out_aut_lower_bound_center(&crate::families::frucht()).is_err());
    }

    #[test]
    fn split_normality() {
        let r = verify_split_normality(&with_center(2, k2_k3())).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.conjugates_checked > 0);
        let p4 = SimplicialGraph::path(&["a", "b", "c", "d"]).unwrap();
        let r = verify_split_normality(&with_center(1, p4)).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(
            verify_split_normality(&crate::families::frucht())
                .unwrap()
                .skipped
        );
    }

    #[test]
    fn iota_inverts_laterals() {
        let g = with_center(1, SimplicialGraph::with_vertices(&["a", "b"]).unwrap());
        let r = iota_noncentrality_check(&g).unwrap();
        assert!(r.passed());
        assert_eq!(r.transvections_checked, 2);
        let r = iota_noncentrality_check(&with_center(2, k2_k3())).unwrap();
        assert!(r.passed());
        assert_eq!(r.transvections_checked, 10);
        let r = iota_noncentrality_check(&crate::families::frucht()).unwrap();
        assert!(r.passed());
        assert_eq!(r.transvections_checked, 0);
    }
}
