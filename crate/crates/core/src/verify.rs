//! Self-contained verification harnesses. Every witness graph is built in
//! code; nothing is read from disk.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::automorphisms::{
    automorphisms_equal, conjugate_automorphism, enumerate_ls_generators, invert,
    ls_to_automorphism, LsGenerator,
};
use crate::decomposition::{
    central_inversion, centralizer_order, check_sign_matrix_centralizes,
    count_centralizing_sign_vectors, iota_noncentrality_check, join_decomposition,
    lateral_transvections, out_aut_lower_bound_center, sign_automorphism, sign_classes,
    signs_from_mask, verify_lateral_lattice, verify_split_normality, JoinDecomposition,
    PhiGenerators,
};
use crate::domination::{domination_structure, has_dominated_vertex};
use crate::error::{Error, Result};
use crate::families::{cycle_hub, frucht, join_complete, SpokeSet};
use crate::graph::SimplicialGraph;
use crate::pc_bounds::{
    austerity, eta_relation_check, find_sil, gl_order, out_out_austere_order, star_cut_bound,
    star_cut_counts, Verdict,
};
use crate::symmetry::graph_automorphisms;
use crate::table::verify_conjugation_table;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Harness {
    ConjugationTable,
    LateralLattice,
    SignClasses,
    SplitNormality,
    CentreBound,
    CentrelessBound,
    AustereOrder,
}

impl Harness {
    pub const ALL: [Harness; 7] = [
        Harness::ConjugationTable,
        Harness::LateralLattice,
        Harness::SignClasses,
        Harness::SplitNormality,
        Harness::CentreBound,
        Harness::CentrelessBound,
        Harness::AustereOrder,
    ];

    /// The command-line name.
    pub fn name(self) -> &'static str {
        match self {
            Harness::ConjugationTable => "table",
            Harness::LateralLattice => "prop-3-1",
            Harness::SignClasses => "prop-3-4",
            Harness::SplitNormality => "split",
            Harness::CentreBound => "theorem-a-center",
            Harness::CentrelessBound => "theorem-a-centreless",
            Harness::AustereOrder => "theorem-b",
        }
    }

    pub fn run(self) -> Result<VerifyReport> {
        let items = match self {
            Harness::ConjugationTable => conjugation_table_items()?,
            Harness::LateralLattice => lateral_lattice_items()?,
            Harness::SignClasses => sign_class_items()?,
            Harness::SplitNormality => split_items()?,
            Harness::CentreBound => centre_bound_items()?,
            Harness::CentrelessBound => centreless_bound_items()?,
            Harness::AustereOrder => austere_order_items()?,
        };
        Ok(VerifyReport {
            harness: self,
            items,
        })
    }
}

impl FromStr for Harness {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Harness::ALL
            .into_iter()
            .find(|h| h.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Harness::ALL.iter().map(|h| h.name()).collect();
                Error::InvalidParameters(format!(
                    "unknown harness {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

impl fmt::Display for Harness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyItem {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

impl VerifyItem {
    fn new(label: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            label: label.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub harness: Harness,
    pub items: Vec<VerifyItem>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verify {}", self.harness)?;
        for item in &self.items {
            let mark = if item.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{mark} {}: {}", item.label, item.detail)?;
        }
        let passed = self.items.iter().filter(|i| i.passed).count();
        writeln!(
            f,
            "result: {} ({passed}/{})",
            if self.passed() { "PASS" } else { "FAIL" },
            self.items.len()
        )
    }
}

fn complete(prefix: &str, n: usize) -> Result<SimplicialGraph> {
    let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
    SimplicialGraph::complete(&names)
}

fn edgeless(names: &[&str]) -> Result<SimplicialGraph> {
    SimplicialGraph::with_vertices(names)
}

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

fn conjugation_table_items() -> Result<Vec<VerifyItem>> {
    let report = verify_conjugation_table()?;
    Ok(report
        .rows
        .iter()
        .map(|row| {
            let mut detail = format!(
                "expected {}, computed {} on {} witness cases",
                row.expected,
                row.cases.first().map_or("-", |c| c.computed.as_str()),
                row.cases.len()
            );
            for case in row.cases.iter().filter(|c| !c.passed) {
                detail.push_str(&format!(
                    "; {} on {} gives {}, expected {}",
                    case.conjugator, case.witness, case.computed, case.expected
                ));
            }
            VerifyItem::new(&row.generator, row.passed(), detail)
        })
        .collect())
}

fn lateral_lattice_items() -> Result<Vec<VerifyItem>> {
    let g = join_complete(2, &[2, 3])?;
    let d = join_decomposition(&g)?;
    let report = verify_lateral_lattice(&g, &d)?;
    let expected_rank = d.k() * d.delta.len();
    let commute_failures: Vec<&String> = report
        .failures
        .iter()
        .filter(|f| f.contains("commute"))
        .collect();

    let (s, t, a) = (g.vertex("s1")?, g.vertex("s2")?, g.vertex("x1_1")?);
    let tau_sa = ls_to_automorphism(&g, &LsGenerator::transvection(s, a))?;
    let tau_ta = ls_to_automorphism(&g, &LsGenerator::transvection(t, a))?;
    let verbatim = automorphisms_equal(&conjugate_automorphism(&g, &tau_ta, &tau_sa), &tau_sa);

    Ok(vec![
        VerifyItem::new(
            "lateral basis",
            !report.skipped && report.basis_size == expected_rank && expected_rank == 10,
            format!(
                "join(K2, K2⊔K3): {} lateral transvections, k·|Δ| = {expected_rank}",
                report.basis_size
            ),
        ),
        VerifyItem::new(
            "pairwise commuting",
            commute_failures.is_empty() && report.commuting_pairs_checked == 45,
            format!(
                "{} pairs checked, {} failures",
                report.commuting_pairs_checked,
                commute_failures.len()
            ),
        ),
        VerifyItem::new(
            "τ(s2,x1_1) τ(s1,x1_1) τ(s2,x1_1)⁻¹ = τ(s1,x1_1)",
            verbatim,
            if verbatim { "holds" } else { "differs" },
        ),
        VerifyItem::new(
            "independence",
            report.rank == expected_rank,
            format!("rank of M(τ) - I over ℤ is {}", report.rank),
        ),
        VerifyItem::new(
            "all lattice checks",
            report.passed(),
            if report.passed() {
                "no failures".to_string()
            } else {
                report.failures.join("; ")
            },
        ),
    ])
}

/// The Δ graphs on which sign classes are compared with the matrix test.
pub fn sign_class_corpus() -> Result<Vec<(&'static str, SimplicialGraph)>> {
    let k2k3 = SimplicialGraph::disjoint_union(&[complete("a", 2)?, complete("b", 3)?])?;
    let k2k2 = SimplicialGraph::disjoint_union(&[complete("a", 2)?, complete("b", 2)?])?;
    let k2k2k2 = SimplicialGraph::disjoint_union(&[
        complete("a", 2)?,
        complete("b", 2)?,
        complete("c", 2)?,
    ])?;
    let k1k2 = SimplicialGraph::disjoint_union(&[complete("a", 1)?, complete("b", 2)?])?;
    let p3 = SimplicialGraph::path(&["a", "b", "c"])?;
    let p4 = SimplicialGraph::path(&["a", "b", "c", "d"])?;
    let p5 = SimplicialGraph::path(&["a", "b", "c", "d", "e"])?;
    let k3_pendant = SimplicialGraph::from_edges(
        &["a", "b", "c", "d"],
        &[("a", "b"), ("b", "c"), ("a", "c"), ("a", "d")],
    )?;
    let claw =
        SimplicialGraph::from_edges(&["h", "a", "b", "c"], &[("h", "a"), ("h", "b"), ("h", "c")])?;
    let paw_tail = SimplicialGraph::from_edges(
        &["a", "b", "c", "d", "e"],
        &[("a", "b"), ("b", "c"), ("a", "c"), ("c", "d"), ("d", "e")],
    )?;
    let c4 = SimplicialGraph::cycle(&["a", "b", "c", "d"])?;
    let c5 = SimplicialGraph::cycle(&["a", "b", "c", "d", "e"])?;
    let c6 = SimplicialGraph::cycle(&["a", "b", "c", "d", "e", "f"])?;
    let bull = SimplicialGraph::from_edges(
        &["a", "b", "c", "d", "e"],
        &[("a", "b"), ("b", "c"), ("a", "c"), ("b", "d"), ("c", "e")],
    )?;
    Ok(vec![
        ("K1", complete("a", 1)?),
        ("K2⊔K3", k2k3),
        ("K2⊔K2", k2k2),
        ("K2⊔K2⊔K2", k2k2k2),
        ("K1⊔K2", k1k2),
        ("P3", p3),
        ("P4", p4),
        ("P5", p5),
        ("K3 with a pendant", k3_pendant),
        ("claw", claw),
        ("triangle with a tail of length 2", paw_tail),
        ("bull", bull),
        ("C4", c4),
        ("C5", c5),
        ("C6", c6),
        ("edgeless on 3", edgeless(&["a", "b", "c"])?),
        ("K4", complete("a", 4)?),
    ])
}

/// Compares `check_sign_matrix_centralizes` with "constant on sign classes"
/// for every sign vector constant on the domination classes and for every
/// sign vector on the vertices, and the class count with the exhaustive one.
pub fn sign_class_agreement(delta: &SimplicialGraph) -> Result<(bool, String)> {
    let n = delta.len();
    if n > 12 {
        return Err(Error::Precondition(format!(
            "|Δ| = {n} is too large to enumerate"
        )));
    }
    let d = JoinDecomposition::for_delta(delta.clone());
    let partition = sign_classes(&d)?;
    let phi = PhiGenerators::new(delta)?;
    let domination = domination_structure(delta)?;
    let classes = domination.class_count();

    let mut disagreements = 0usize;
    for mask in 0u64..(1 << classes) {
        let signs: Vec<i8> = delta
            .vertices()
            .map(|v| {
                if mask >> domination.class_of[v] & 1 == 1 {
                    -1
                } else {
                    1
                }
            })
            .collect();
        if phi.centralized_by(&signs)? != partition.is_constant_on_classes(&signs) {
            disagreements += 1;
        }
    }
    let mut full_disagreements = 0usize;
    let mut passing = 0u64;
    for mask in 0u64..(1 << n) {
        let signs = signs_from_mask(mask, n);
        let centralizes = phi.centralized_by(&signs)?;
        passing += u64::from(centralizes);
        if centralizes != partition.is_constant_on_classes(&signs) {
            full_disagreements += 1;
        }
    }
    let order = centralizer_order(&d)?;
    let ok = disagreements == 0 && full_disagreements == 0 && order == BigUint::from(passing);
    let detail = format!(
        "m = {}, |C(Q)| = {order}, exhaustive count {passing}; {} of 2^{classes} class assignments and {} of 2^{n} vertex assignments disagree",
        partition.m(),
        disagreements,
        full_disagreements
    );
    Ok((ok, detail))
}

fn sign_class_items() -> Result<Vec<VerifyItem>> {
    sign_class_corpus()?
        .into_iter()
        .map(|(label, delta)| {
            let (ok, detail) = sign_class_agreement(&delta)?;
            Ok(VerifyItem::new(format!("Δ = {label}"), ok, detail))
        })
        .collect()
}

/// Graphs with social vertices used for the split and centre harnesses.
fn split_corpus() -> Result<Vec<(&'static str, SimplicialGraph)>> {
    let k1 = complete("s", 1)?;
    let p4 = SimplicialGraph::path(&["a", "b", "c", "d"])?;
    Ok(vec![
        ("join(K2, K2⊔K3)", join_complete(2, &[2, 3])?),
        ("join(K1, K2⊔K3)", join_complete(1, &[2, 3])?),
        ("join(K1, P4)", SimplicialGraph::join(&[k1.clone(), p4])?),
        (
            "join(K1, two isolated vertices)",
            SimplicialGraph::join(&[k1, edgeless(&["a", "b"])?])?,
        ),
        (
            "C5 (no social vertex)",
            SimplicialGraph::cycle(&["a", "b", "c", "d", "e"])?,
        ),
    ])
}

fn split_items() -> Result<Vec<VerifyItem>> {
    let mut items = Vec::new();
    for (label, g) in split_corpus()? {
        let split = verify_split_normality(&g)?;
        let detail = if split.skipped {
            "skipped: no lateral transvections".to_string()
        } else if split.passed() {
            format!(
                "{} conjugates are lateral products",
                split.conjugates_checked
            )
        } else {
            split.failures.join("; ")
        };
        items.push(VerifyItem::new(
            format!("normality on {label}"),
            split.passed(),
            detail,
        ));

        let iota = iota_noncentrality_check(&g)?;
        let detail = if iota.passed() {
            format!(
                "ι inverts {} lateral transvections",
                iota.transvections_checked
            )
        } else {
            iota.failures.join("; ")
        };
        items.push(VerifyItem::new(
            format!("ι on {label}"),
            iota.passed(),
            detail,
        ));
    }
    Ok(items)
}

fn centre_bound_items() -> Result<Vec<VerifyItem>> {
    let mut items = Vec::new();
    for (k, sizes) in [
        (1usize, vec![2usize, 3]),
        (2, vec![2, 3]),
        (1, vec![2, 3, 4]),
    ] {
        let label = format!("join_complete({k}, {sizes:?})");
        let g = join_complete(k, &sizes)?;
        let d = join_decomposition(&g)?;
        let components = d.delta.connected_components().len();
        let m = sign_classes(&d)?.m();
        let bound = out_aut_lower_bound_center(&g)?;
        let exhaustive = count_centralizing_sign_vectors(&d)?;
        let order = centralizer_order(&d)?;
        items.push(VerifyItem::new(
            format!("{label} bound"),
            m == components && bound == pow2(components - 1) && order == BigUint::from(exhaustive),
            format!("d = {components}, m = {m}, |C(Q)| = {order} (exhaustive {exhaustive}), bound 2^(m-1) = {bound}"),
        ));

        let lattice = lateral_transvections(&d)?;
        let iota = central_inversion(&g, &d)?;
        let all_minus = sign_automorphism(&d, &vec![-1; d.delta.len()])?;
        let mut matches = true;
        for i in 0..lattice.rank() {
            let gen = lattice.generator(i);
            let tau = ls_to_automorphism(&g, &gen)?;
            matches &= automorphisms_equal(
                &all_minus.image(&g, &gen)?,
                &conjugate_automorphism(&g, &iota, &tau),
            );
            matches &= automorphisms_equal(&all_minus.image(&g, &gen)?, &invert(&tau));
        }
        items.push(VerifyItem::new(
            format!("{label} all-minus signs"),
            matches,
            format!(
                "agrees with conjugation by ι on {} lateral transvections",
                lattice.rank()
            ),
        ));

        let partition = sign_classes(&d)?;
        let mut mixed = vec![1i8; d.delta.len()];
        for &v in &partition.classes[0] {
            mixed[v] = -1;
        }
        let action = sign_automorphism(&d, &mixed)?;
        let mut moved = 0;
        for i in 0..lattice.rank() {
            let gen = lattice.generator(i);
            if !automorphisms_equal(&action.image(&g, &gen)?, &ls_to_automorphism(&g, &gen)?) {
                moved += 1;
            }
        }
        let mut split = mixed.clone();
        let broken = partition.classes.iter().find(|c| c.len() > 1).map(|c| {
            split[c[0]] = -split[c[0]];
        });
        let rejected = broken.is_some() && !check_sign_matrix_centralizes(&d, &split)?;
        items.push(VerifyItem::new(
            format!("{label} mixed signs"),
            !action.is_trivial() && moved > 0 && moved < lattice.rank() && rejected,
            format!(
                "inverting the first sign class moves {moved} of {} lateral transvections; splitting a class is rejected: {rejected}",
                lattice.rank()
            ),
        ));
    }
    Ok(items)
}

/// Spoke sets used by the centreless harness.
pub const SPOKE_SETS: [&[u64]; 3] = [&[3, 7, 12], &[3, 7, 12, 18], &[3, 7, 12, 18, 25]];

fn centreless_bound_items() -> Result<Vec<VerifyItem>> {
    let mut items = Vec::new();
    for spokes in SPOKE_SETS {
        let set = SpokeSet::new(spokes.to_vec())?;
        let t = set.count();
        let g = cycle_hub(&set)?;
        let hub = g.vertex("c")?;
        let report = austerity(&g)?;
        let sil = find_sil(&g);
        let k_hub = star_cut_counts(&g)[hub];
        let bound = star_cut_bound(&g)?;
        items.push(VerifyItem::new(
            format!("Γ_E for E = {spokes:?}"),
            report.verdict == Verdict::AustereWithStarCuts
                && sil.is_none()
                && k_hub == t
                && bound == pow2(t - 1),
            format!(
                "verdict {}, SIL {}, hub K_c = {k_hub}, star-cut bound {bound}",
                report.verdict,
                if sil.is_none() { "none" } else { "found" }
            ),
        ));
    }

    let g = cycle_hub(&SpokeSet::new(SPOKE_SETS[0].to_vec())?)?;
    for (c, &k_c) in star_cut_counts(&g).iter().enumerate() {
        for j in 1..=k_c {
            let r = eta_relation_check(&g, c, j)?;
            let detail = if r.passed() {
                format!(
                    "{} conjugates ι γ ι⁻¹ = γ^±1, {} relations kept, {} commuting pairs kept, involution on {}",
                    r.conjugation_signs_checked, r.action_relations_checked, r.commuting_pairs_checked, r.involution_checked
                )
            } else {
                r.failures.join("; ")
            };
            items.push(VerifyItem::new(
                format!("η({},{j}) on Γ_(3,7,12)", g.name(c)),
                r.passed(),
                detail,
            ));
        }
    }
    Ok(items)
}

/// Number of invertible `n × n` matrices over ℤ₂, by enumeration.
pub fn count_invertible_mod2(n: usize) -> u64 {
    assert!(n <= 4, "enumeration is limited to n ≤ 4");
    let mut count = 0;
    for bits in 0u64..1 << (n * n) {
        let mut rows: Vec<u64> = (0..n).map(|i| bits >> (i * n) & ((1 << n) - 1)).collect();
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| rows[r] >> col & 1 == 1) else {
                continue;
            };
            rows.swap(rank, p);
            for r in 0..n {
                if r != rank && rows[r] >> col & 1 == 1 {
                    rows[r] ^= rows[rank];
                }
            }
            rank += 1;
        }
        count += u64::from(rank == n);
    }
    count
}

fn austere_order_items() -> Result<Vec<VerifyItem>> {
    let g = frucht();
    let mut items = Vec::new();
    let cubic = g.vertices().all(|v| g.degree(v) == 3);
    items.push(VerifyItem::new(
        "Frucht graph",
        g.len() == 12 && g.edge_count() == 18 && cubic,
        format!(
            "{} vertices, {} edges, cubic: {cubic}",
            g.len(),
            g.edge_count()
        ),
    ));
    let autos = graph_automorphisms(&g)?.len();
    items.push(VerifyItem::new(
        "trivial symmetry group",
        autos == 1,
        format!("|Aut(Γ)| = {autos}"),
    ));
    let dominated = has_dominated_vertex(&g);
    items.push(VerifyItem::new(
        "no dominated vertex",
        !dominated,
        format!("dominated vertex present: {dominated}"),
    ));
    let counts = star_cut_counts(&g);
    let connected = counts.iter().filter(|&&k| k == 1).count();
    items.push(VerifyItem::new(
        "star cuts connected",
        connected == 12,
        format!("{connected} of 12 star complements connected"),
    ));
    let report = austerity(&g)?;
    items.push(VerifyItem::new(
        "austere",
        report.verdict == Verdict::Austere,
        format!("verdict {}", report.verdict),
    ));
    let gens = enumerate_ls_generators(&g)?;
    let inversions = gens
        .iter()
        .filter(|x| matches!(x, LsGenerator::Inversion(_)))
        .count();
    let pcs = gens
        .iter()
        .filter(|x| matches!(x, LsGenerator::PartialConjugation { .. }))
        .count();
    items.push(VerifyItem::new(
        "LS generators",
        inversions == 12 && pcs == 12 && gens.len() == 24,
        format!(
            "{inversions} inversions, {pcs} partial conjugations, {} total",
            gens.len()
        ),
    ));
    for n in 1..=3u32 {
        let formula = gl_order(n, 2)?;
        let counted = count_invertible_mod2(n as usize);
        items.push(VerifyItem::new(
            format!("|GL({n},2)|"),
            formula == BigUint::from(counted),
            format!("formula {formula}, enumeration {counted}"),
        ));
    }
    let order = out_out_austere_order(&g)?;
    let expected = gl_order(12, 2)?;
    items.push(VerifyItem::new(
        "|Out(Out(A_Γ))|",
        order == expected,
        format!("|GL(12,2)| = {order}"),
    ));
    Ok(items)
}
