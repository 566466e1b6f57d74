//! The full analysis of one graph, rendered as stable `key: value` lines.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::automorphisms::{ls_generators_with, LsGenerator};
use crate::decomposition::{
    join_decomposition, lateral_transvections, sign_classes_from_structure, verify_lateral_lattice,
};
use crate::domination::domination_structure_with;
use crate::error::{Error, Result};
use crate::graph::SimplicialGraph;
use crate::pc_bounds::{austerity_with, find_sil, gl_order, star_cut_counts, Verdict};
use crate::symmetry::{graph_automorphisms_with, SearchLimits};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub title: String,
    pub lines: Vec<(String, String)>,
}

impl Section {
    fn new(title: &str) -> Self {
        Self {
            title: title.to_string(),
            lines: Vec::new(),
        }
    }

    fn push(&mut self, key: &str, value: impl fmt::Display) {
        self.lines.push((key.to_string(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.lines
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport {
    pub sections: Vec<Section>,
}

impl AnalysisReport {
    pub fn section(&self, title: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.title == title)
    }

    /// Value of `key` in section `title`.
    pub fn get(&self, title: &str, key: &str) -> Option<&str> {
        self.section(title)?.get(key)
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, section) in self.sections.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            writeln!(f, "[{}]", section.title)?;
            for (k, v) in &section.lines {
                writeln!(f, "{k}: {v}")?;
            }
        }
        Ok(())
    }
}

fn names_of(g: &SimplicialGraph, vs: &[usize]) -> String {
    g.format_set(vs)
}

/// Runs the whole pipeline: austerity, SILs, LS generator counts, the join
/// decomposition and its sign classes, the star-cut bound and, for austere
/// graphs, |GL(n,2)|.
pub fn analyze(g: &SimplicialGraph, limits: SearchLimits) -> Result<AnalysisReport> {
    if g.len() > limits.max_vertices {
        return Err(Error::TooManyVertices {
            vertices: g.len(),
            limit: limits.max_vertices,
        });
    }
    let mut sections = Vec::new();

    let mut graph = Section::new("graph");
    graph.push("vertices", g.len());
    graph.push("edges", g.edge_count());
    graph.push("components", g.connected_components().len());
    sections.push(graph);

    let autos = graph_automorphisms_with(g, limits)?;
    let report = austerity_with(g, limits)?;
    let mut aust = Section::new("austerity");
    aust.push("symmetries", autos.len());
    aust.push("asymmetric", report.asymmetric);
    aust.push("dominated_free", report.dominated_free);
    aust.push("star_cuts_connected", report.star_cuts_connected);
    aust.push("verdict", report.verdict);
    sections.push(aust);

    let sil = find_sil(g);
    let mut sil_section = Section::new("sil");
    match &sil {
        None => sil_section.push("present", false),
        Some(w) => {
            sil_section.push("present", true);
            sil_section.push(
                "witness",
                format!(
                    "{} {} component {}",
                    g.name(w.v),
                    g.name(w.w),
                    names_of(g, &w.component)
                ),
            );
        }
    }
    sections.push(sil_section);

    let gens = ls_generators_with(g, &autos);
    let count = |pred: fn(&LsGenerator) -> bool| gens.iter().filter(|x| pred(x)).count();
    let mut ls = Section::new("ls_generators");
    ls.push(
        "inversions",
        count(|x| matches!(x, LsGenerator::Inversion(_))),
    );
    ls.push(
        "symmetries",
        count(|x| matches!(x, LsGenerator::Symmetry(_))),
    );
    ls.push(
        "transvections",
        count(|x| matches!(x, LsGenerator::Transvection { .. })),
    );
    ls.push(
        "partial_conjugations",
        count(|x| matches!(x, LsGenerator::PartialConjugation { .. })),
    );
    ls.push("total", gens.len());
    sections.push(ls);

    let d = join_decomposition(g)?;
    let mut dec = Section::new("decomposition");
    dec.push("social", names_of(g, &d.social));
    dec.push("delta", names_of(g, &d.delta_vertices));
    dec.push("k", d.k());
    if d.social.is_empty() {
        dec.push("centre", "trivial");
    } else if d.delta.is_empty() {
        dec.push("centre", "whole group");
        dec.push("sign_classes", "n/a (Δ is empty)");
    } else {
        dec.push("centre", format!("ℤ^{}", d.k()));
        let lattice = lateral_transvections(&d)?;
        let check = verify_lateral_lattice(g, &d)?;
        dec.push("lattice_rank", lattice.rank());
        dec.push(
            "lattice_check",
            if check.passed() { "PASS" } else { "FAIL" },
        );
        let delta_autos = graph_automorphisms_with(&d.delta, limits)?;
        let priority: Vec<usize> = d.delta.vertices().collect();
        let structure = domination_structure_with(&d.delta, &delta_autos, &priority)?;
        let partition = sign_classes_from_structure(&d.delta, &structure);
        let classes: Vec<String> = partition
            .classes
            .iter()
            .map(|c| d.delta.format_set(c))
            .collect();
        let m = partition.m();
        dec.push("sign_classes", classes.join(" "));
        dec.push("m", m);
        dec.push("centralizer_order", BigUint::one() << m);
        dec.push("out_aut_lower_bound", BigUint::one() << (m - 1));
    }
    sections.push(dec);

    let mut cuts = Section::new("star_cuts");
    let counts = star_cut_counts(g);
    let table: Vec<String> = g
        .vertices()
        .map(|v| format!("{}={}", g.name(v), counts[v]))
        .collect();
    cuts.push("K_c", table.join(" "));
    if !d.social.is_empty() {
        cuts.push("star_cut_bound", "n/a (centre is nontrivial)");
    } else if report.verdict == Verdict::Neither {
        cuts.push("star_cut_bound", "n/a (not austere with star cuts)");
    } else if sil.is_some() {
        cuts.push("star_cut_bound", "n/a (Γ has a SIL)");
    } else {
        let best = counts.iter().copied().max().unwrap_or(0);
        cuts.push("star_cut_bound", BigUint::one() << best.saturating_sub(1));
    }
    sections.push(cuts);

    let mut bounds = Section::new("out_out");
    if report.verdict == Verdict::Austere {
        bounds.push("order", gl_order(g.len() as u32, 2)?);
        bounds.push("formula", format!("|GL({},2)|", g.len()));
    } else {
        bounds.push("order", "n/a (not austere)");
    }
    sections.push(bounds);

    Ok(AnalysisReport { sections })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle_hub, frucht, join_complete, SpokeSet};
    use crate::pc_bounds::gl_order;

    #[test]
    fn frucht_report() {
        let r = analyze(&frucht(), SearchLimits::default()).unwrap();
        assert_eq!(r.get("austerity", "verdict"), Some("austere"));
        assert_eq!(r.get("ls_generators", "total"), Some("24"));
        assert_eq!(
            r.get("out_out", "order"),
            Some(gl_order(12, 2).unwrap().to_string().as_str())
        );
        assert_eq!(r.get("star_cuts", "star_cut_bound"), Some("1"));
        assert_eq!(
            r.to_string(),
            analyze(&frucht(), SearchLimits::default())
                .unwrap()
                .to_string()
        );
    }

    #[test]
    fn cycle_hub_report() {
        let g = cycle_hub(&SpokeSet::new(vec![3, 7, 12]).unwrap()).unwrap();
        let r = analyze(&g, SearchLimits::default()).unwrap();
        assert_eq!(
            r.get("austerity", "verdict"),
            Some("austere_with_star_cuts")
        );
        assert_eq!(r.get("star_cuts", "star_cut_bound"), Some("4"));
        assert_eq!(r.get("sil", "present"), Some("false"));
    }

    #[test]
    fn join_report() {
        let g = join_complete(1, &[2, 3]).unwrap();
        let r = analyze(&g, SearchLimits::default()).unwrap();
        assert_eq!(r.get("decomposition", "k"), Some("1"));
        assert_eq!(r.get("decomposition", "lattice_rank"), Some("5"));
        assert_eq!(r.get("decomposition", "m"), Some("2"));
        assert_eq!(r.get("decomposition", "centralizer_order"), Some("4"));
        assert_eq!(r.get("decomposition", "out_aut_lower_bound"), Some("2"));
        assert_eq!(r.get("out_out", "order"), Some("n/a (not austere)"));
    }

    #[test]
    fn size_limit() {
        let g = frucht();
        let limits = SearchLimits {
            max_vertices: 5,
            ..SearchLimits::default()
        };
        assert!(matches!(
            analyze(&g, limits),
            Err(Error::TooManyVertices { .. })
        ));
    }

    #[test]
    fn sil_witness_is_reported() {
        let g = SimplicialGraph::from_edges(
            &["x", "u", "v", "w"],
            &[("x", "u"), ("x", "v"), ("x", "w")],
        )
        .unwrap();
        let r = analyze(&g, SearchLimits::default()).unwrap();
        assert_eq!(r.get("sil", "present"), Some("true"));
        assert!(r.get("sil", "witness").is_some());
    }
}
