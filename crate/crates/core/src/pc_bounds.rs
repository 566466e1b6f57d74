//! Centreless A_Γ: austerity, separating intersections of links, the
//! partial-conjugation subgroup and the bounds built from it.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::automorphisms::{
    automorphisms_equal, commutator, conjugate_automorphism, invert, ls_to_automorphism,
    partial_conjugation_pairs, power, LsGenerator, RaagAutomorphism,
};
use crate::domination::has_dominated_vertex;
use crate::error::{Error, Result};
use crate::graph::{SimplicialGraph, Vertex};
use crate::symmetry::{graph_automorphisms_with, SearchLimits};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Austere,
    AustereWithStarCuts,
    Neither,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Austere => "austere",
            Verdict::AustereWithStarCuts => "austere_with_star_cuts",
            Verdict::Neither => "neither",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AusterityReport {
    pub asymmetric: bool,
    pub dominated_free: bool,
    /// Every Γ \ st(v) has at most one component.
    pub star_cuts_connected: bool,
    pub verdict: Verdict,
}

pub fn austerity(g: &SimplicialGraph) -> Result<AusterityReport> {
    austerity_with(g, SearchLimits::default())
}

pub fn austerity_with(g: &SimplicialGraph, limits: SearchLimits) -> Result<AusterityReport> {
    // Two automorphisms are enough to decide asymmetry.
    let asymmetric = match graph_automorphisms_with(
        g,
        SearchLimits {
            max_automorphisms: 1,
            ..limits
        },
    ) {
        Ok(_) => true,
        Err(Error::TooManyAutomorphisms { .. }) => false,
        Err(e) => return Err(e),
    };
    let dominated_free = !has_dominated_vertex(g);
    let star_cuts_connected = g.vertices().all(|v| {
        g.star_cut_components(v)
            .map(|c| c.len() <= 1)
            .unwrap_or(false)
    });
    let verdict = match (asymmetric && dominated_free, star_cuts_connected) {
        (true, true) => Verdict::Austere,
        (true, false) => Verdict::AustereWithStarCuts,
        _ => Verdict::Neither,
    };
    Ok(AusterityReport {
        asymmetric,
        dominated_free,
        star_cuts_connected,
        verdict,
    })
}

/// Non-adjacent `v`, `w` and a component of Γ \ (lk(v) ∩ lk(w)) containing
/// neither of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SilWitness {
    pub v: Vertex,
    pub w: Vertex,
    pub component: Vec<Vertex>,
}

/// A SIL witnessed by the pair `(v, w)`, if any. Fails if `v` and `w` are
/// equal or adjacent.
pub fn find_sil_for_pair(g: &SimplicialGraph, v: Vertex, w: Vertex) -> Result<Option<SilWitness>> {
    g.check_vertex(v)?;
    g.check_vertex(w)?;
    if v == w || g.adjacent(v, w) {
        return Err(Error::Precondition(format!(
            "{} and {} must be distinct and non-adjacent",
            g.name(v),
            g.name(w)
        )));
    }
    let common: BTreeSet<Vertex> = g
        .neighbors(v)
        .iter()
        .filter(|&&x| g.adjacent(x, w))
        .copied()
        .collect();
    let rest: BTreeSet<Vertex> = g.vertices().filter(|x| !common.contains(x)).collect();
    Ok(g.components_within(&rest)
        .into_iter()
        .find(|c| !c.contains(&v) && !c.contains(&w))
        .map(|component| SilWitness { v, w, component }))
}

/// The first SIL in `(v, w)` order, or `None` if Γ has no SILs.
pub fn find_sil(g: &SimplicialGraph) -> Option<SilWitness> {
    for v in g.vertices() {
        for w in v + 1..g.len() {
            if g.adjacent(v, w) {
                continue;
            }
            if let Some(witness) = find_sil_for_pair(g, v, w).expect("valid non-adjacent pair") {
                return Some(witness);
            }
        }
    }
    None
}

/// Every `(c, D)` with `D` a component of Γ \ st(c).
pub fn partial_conjugations(g: &SimplicialGraph) -> Vec<(Vertex, Vec<Vertex>)> {
    partial_conjugation_pairs(g)
}

/// `K_c` for every vertex: the number of components of Γ \ st(c).
pub fn star_cut_counts(g: &SimplicialGraph) -> Vec<usize> {
    g.vertices()
        .map(|c| g.star_cut_components(c).expect("vertex in range").len())
        .collect()
}

fn pc_name(g: &SimplicialGraph, c: Vertex, j: usize) -> String {
    format!("pc_{}_{}", g.name(c), j)
}

/// Commutation graph of the partial conjugations: one vertex `pc_<c>_<j>`
/// per partial conjugation (the `j`-th component of Γ \ st(c)), with an edge
/// when the two automorphisms commute exactly. Requires Γ to have no SILs.
pub fn pc_defining_graph(g: &SimplicialGraph) -> Result<SimplicialGraph> {
    if let Some(w) = find_sil(g) {
        return Err(Error::Precondition(format!(
            "Γ has a SIL: {}, {} with component {}",
            g.name(w.v),
            g.name(w.w),
            g.format_set(&w.component)
        )));
    }
    let pcs = partial_conjugations(g);
    let mut names = Vec::with_capacity(pcs.len());
    let mut autos = Vec::with_capacity(pcs.len());
    let mut index_for = 0usize;
    let mut last_c = None;
    for (c, d) in &pcs {
        if last_c != Some(*c) {
            index_for = 0;
            last_c = Some(*c);
        }
        index_for += 1;
        names.push(pc_name(g, *c, index_for));
        autos.push(ls_to_automorphism(
            g,
            &LsGenerator::partial_conjugation(*c, d.clone()),
        )?);
    }
    let mut out = SimplicialGraph::with_vertices(&names)?;
    let id = RaagAutomorphism::identity(g);
    for i in 0..autos.len() {
        for j in i + 1..autos.len() {
            let forward = automorphisms_equal(&commutator(g, &autos[i], &autos[j]), &id);
            let backward = automorphisms_equal(&commutator(g, &autos[j], &autos[i]), &id);
            if forward != backward {
                return Err(Error::Inconsistent(format!(
                    "commutation of {} and {} is not symmetric",
                    names[i], names[j]
                )));
            }
            if forward {
                out.insert_edge(i, j)?;
            }
        }
    }
    Ok(out)
}

/// `max_c 2^(K_c - 1)`, a lower bound on |Out(Aut(A_Γ))| for graphs that are
/// austere with star cuts and have no SILs.
pub fn star_cut_bound(g: &SimplicialGraph) -> Result<BigUint> {
    let report = austerity(g)?;
    if report.verdict == Verdict::Neither {
        return Err(Error::Precondition(
            "Γ must have trivial symmetry group and no dominated vertices".into(),
        ));
    }
    if let Some(w) = find_sil(g) {
        return Err(Error::Precondition(format!(
            "Γ has a SIL at {}, {}",
            g.name(w.v),
            g.name(w.w)
        )));
    }
    let best = star_cut_counts(g).into_iter().max().unwrap_or(0);
    Ok(BigUint::one() << best.saturating_sub(1))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EtaReport {
    /// Number of conjugates `ι_v γ ι_v⁻¹` found equal to `γ^{±1}`.
    pub conjugation_signs_checked: usize,
    pub action_relations_checked: usize,
    pub commuting_pairs_checked: usize,
    pub involution_checked: usize,
    pub failures: Vec<String>,
}

impl EtaReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that `η_{c,j}` (invert `γ_{c,D_j}`, fix every other partial
/// conjugation and every inversion) respects the relations
/// `ι_v γ ι_v⁻¹ = γ^{±1}` and the commutations among partial conjugations,
/// and that it is an involution on generators. `j` is 1-based.
pub fn eta_relation_check(g: &SimplicialGraph, c: Vertex, j: usize) -> Result<EtaReport> {
    g.check_vertex(c)?;
    let k_c = g.star_cut_components(c)?.len();
    if k_c == 0 {
        return Err(Error::Precondition(format!(
            "Γ \\ st({}) is empty: no partial conjugation by it",
            g.name(c)
        )));
    }
    if j == 0 || j > k_c {
        return Err(Error::Precondition(format!(
            "component index {j} out of range 1..={k_c}"
        )));
    }
    let pcs = partial_conjugations(g);
    let target = pcs
        .iter()
        .position(|(by, _)| *by == c)
        .expect("c has a component")
        + (j - 1);
    let gammas = pcs
        .iter()
        .map(|(by, d)| ls_to_automorphism(g, &LsGenerator::partial_conjugation(*by, d.clone())))
        .collect::<Result<Vec<_>>>()?;
    let exponents: Vec<i64> = (0..gammas.len())
        .map(|i| if i == target { -1 } else { 1 })
        .collect();
    let eta: Vec<RaagAutomorphism> = gammas
        .iter()
        .zip(&exponents)
        .map(|(gamma, &e)| power(g, gamma, e))
        .collect();
    let label = |i: usize| {
        let (by, d) = &pcs[i];
        LsGenerator::partial_conjugation(*by, d.clone())
            .display(g)
            .to_string()
    };

    let mut report = EtaReport::default();
    for v in g.vertices() {
        let iota = ls_to_automorphism(g, &LsGenerator::Inversion(v))?;
        for (i, gamma) in gammas.iter().enumerate() {
            let conj = conjugate_automorphism(g, &iota, gamma);
            let sign = if automorphisms_equal(&conj, gamma) {
                1
            } else if automorphisms_equal(&conj, &invert(gamma)) {
                -1
            } else {
                report.failures.push(format!(
                    "ι({}) {} ι({})⁻¹ is neither {} nor its inverse",
                    g.name(v),
                    label(i),
                    g.name(v),
                    label(i)
                ));
                continue;
            };
            report.conjugation_signs_checked += 1;
            // η(ι_v) η(γ) η(ι_v)⁻¹ = η(γ)^sign, with η(ι_v) = ι_v
            let lhs = conjugate_automorphism(g, &iota, &eta[i]);
            let rhs = power(g, &eta[i], sign);
            report.action_relations_checked += 1;
            if !automorphisms_equal(&lhs, &rhs) {
                report.failures.push(format!(
                    "η breaks ι({}) {} ι({})⁻¹ = {}^{}",
                    g.name(v),
                    label(i),
                    g.name(v),
                    label(i),
                    sign
                ));
            }
        }
    }

    let id = RaagAutomorphism::identity(g);
    for a in 0..gammas.len() {
        for b in a + 1..gammas.len() {
            if !automorphisms_equal(&commutator(g, &gammas[a], &gammas[b]), &id) {
                continue;
            }
            report.commuting_pairs_checked += 1;
            if !automorphisms_equal(&commutator(g, &eta[a], &eta[b]), &id) {
                report
                    .failures
                    .push(format!("η breaks [{}, {}] = 1", label(a), label(b)));
            }
        }
    }

    for (i, gamma) in gammas.iter().enumerate() {
        report.involution_checked += 1;
        // η(η(γ_i)) = η(γ_i)^{e_i}
        let twice = power(g, &eta[i], exponents[i]);
        if !automorphisms_equal(&twice, gamma) {
            report
                .failures
                .push(format!("η∘η does not fix {}", label(i)));
        }
    }
    Ok(report)
}

/// |GL(n, q)| = ∏_{i<n} (q^n - q^i).
pub fn gl_order(n: u32, q: u32) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidParameters("n must be positive".into()));
    }
    if q < 2
        || (2..q)
            .take_while(|d| d * d <= q)
            .any(|d| q.is_multiple_of(d))
    {
        return Err(Error::InvalidParameters(format!("{q} is not prime")));
    }
    let q = BigUint::from(q);
    let qn = q.pow(n);
    Ok((0..n).map(|i| &qn - q.pow(i)).product())
}

/// |Out(Out(A_Γ))| = |GL(|V|, 2)| for austere Γ.
pub fn out_out_austere_order(g: &SimplicialGraph) -> Result<BigUint> {
    let report = austerity(g)?;
    if report.verdict != Verdict::Austere {
        return Err(Error::Precondition(format!(
            "Γ is not austere (verdict: {})",
            report.verdict
        )));
    }
    gl_order(g.len() as u32, 2)
}

/// Conjugation of `γ` by `ι_v`, expressed as the exponent `±1` with
/// `ι_v γ ι_v⁻¹ = γ^{±1}`, or `None` if it is neither.
pub fn inversion_action(
    g: &SimplicialGraph,
    v: Vertex,
    gamma: &RaagAutomorphism,
) -> Result<Option<i64>> {
    let iota = ls_to_automorphism(g, &LsGenerator::Inversion(v))?;
    let conj = conjugate_automorphism(g, &iota, gamma);
    Ok(if automorphisms_equal(&conj, gamma) {
        Some(1)
    } else if automorphisms_equal(&conj, &invert(gamma)) {
        Some(-1)
    } else {
        None
    })
}
