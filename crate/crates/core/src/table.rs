//! Conjugates of a lateral transvection `τ(s,a)` by each kind of generator,
//! checked against the expected product of lateral transvections.

use std::fmt;

use crate::automorphisms::{
    automorphisms_equal, compose, conjugate_automorphism, invert, ls_to_automorphism, LsGenerator,
    RaagAutomorphism,
};
use crate::error::Result;
use crate::graph::{SimplicialGraph, Vertex};
use crate::symmetry::{graph_automorphisms, GraphPermutation};

/// One witness graph checked for a row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableCase {
    pub witness: String,
    pub conjugator: String,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub generator: String,
    pub expected: String,
    pub cases: Vec<TableCase>,
}

impl TableRow {
    pub fn passed(&self) -> bool {
        !self.cases.is_empty() && self.cases.iter().all(|c| c.passed)
    }
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown = self
            .cases
            .iter()
            .find(|c| !c.passed)
            .or_else(|| self.cases.first());
        write!(
            f,
            "{:<12} expected {:<16} computed {:<28} {} ({} cases)",
            self.generator,
            self.expected,
            shown.map_or("-", |c| c.computed.as_str()),
            if self.passed() { "PASS" } else { "FAIL" },
            self.cases.len()
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableReport {
    pub rows: Vec<TableRow>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(TableRow::passed)
    }
}

struct Witness {
    label: &'static str,
    g: SimplicialGraph,
}

impl Witness {
    fn new(
        label: &'static str,
        delta_names: &[&str],
        delta_edges: &[(&str, &str)],
    ) -> Result<Self> {
        let social = SimplicialGraph::complete(&["r", "s", "t"])?;
        let delta = SimplicialGraph::from_edges(delta_names, delta_edges)?;
        Ok(Self {
            label,
            g: SimplicialGraph::join(&[social, delta])?,
        })
    }

    fn v(&self, name: &str) -> Vertex {
        self.g.vertex(name).expect("witness vertex")
    }

    fn gen(&self, gen: LsGenerator) -> Result<RaagAutomorphism> {
        ls_to_automorphism(&self.g, &gen)
    }

    fn tv(&self, by: &str, target: &str) -> Result<RaagAutomorphism> {
        self.gen(LsGenerator::transvection(self.v(by), self.v(target)))
    }

    fn inv(&self, name: &str) -> Result<RaagAutomorphism> {
        self.gen(LsGenerator::Inversion(self.v(name)))
    }

    fn case(
        &self,
        conjugator: &RaagAutomorphism,
        conj_label: String,
        expected: &RaagAutomorphism,
        exp_label: String,
    ) -> Result<TableCase> {
        let lateral = self.tv("s", "a")?;
        let computed = conjugate_automorphism(&self.g, conjugator, &lateral);
        Ok(TableCase {
            witness: self.label.to_string(),
            conjugator: conj_label,
            expected: exp_label,
            computed: computed.display(&self.g).to_string(),
            passed: automorphisms_equal(&computed, expected),
        })
    }
}

/// A row whose conjugator and expected value are built the same way on
/// every witness.
fn uniform_row(
    generator: &str,
    expected: &str,
    witnesses: &[&Witness],
    build: impl Fn(&Witness) -> Result<(RaagAutomorphism, RaagAutomorphism)>,
) -> Result<TableRow> {
    let cases = witnesses
        .iter()
        .map(|w| {
            let (lambda, exp) = build(w)?;
            w.case(&lambda, generator.to_string(), &exp, expected.to_string())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TableRow {
        generator: generator.to_string(),
        expected: expected.to_string(),
        cases,
    })
}

fn symmetries_fixing_social(w: &Witness) -> Result<Vec<GraphPermutation>> {
    let social = [w.v("r"), w.v("s"), w.v("t")];
    Ok(graph_automorphisms(&w.g)?
        .into_iter()
        .filter(|phi| !phi.is_identity() && social.iter().all(|&x| phi.apply(x) == x))
        .collect())
}

/// Runs all 13 rows. Witnesses: `S = K₃` on `{r,s,t}` joined with
/// `Δ = K₃` on `{a,b,d}`, with the edgeless `Δ` on `{a,b,d}` (where `S` is
/// exactly the social set), and with the path `a–x–b–y` for the partial
/// conjugation and symmetry rows.
pub fn verify_conjugation_table() -> Result<TableReport> {
    let clique = Witness::new(
        "join(K3, K3{a,b,d})",
        &["a", "b", "d"],
        &[("a", "b"), ("b", "d"), ("a", "d")],
    )?;
    let edgeless = Witness::new("join(K3, {a,b,d} edgeless)", &["a", "b", "d"], &[])?;
    let path = Witness::new(
        "join(K3, path a-x-b-y)",
        &["a", "x", "b", "y"],
        &[("a", "x"), ("x", "b"), ("b", "y")],
    )?;
    let both = [&clique, &edgeless];

    let mut rows = vec![
        uniform_row("ι(t)", "τ(s,a)", &both, |w| {
            Ok((w.inv("t")?, w.tv("s", "a")?))
        })?,
        uniform_row("ι(s)", "τ(s,a)⁻¹", &both, |w| {
            Ok((w.inv("s")?, invert(&w.tv("s", "a")?)))
        })?,
        uniform_row("τ(s,t)", "τ(s,a)", &both, |w| {
            Ok((w.tv("s", "t")?, w.tv("s", "a")?))
        })?,
        uniform_row("τ(r,t)", "τ(s,a)", &both, |w| {
            Ok((w.tv("r", "t")?, w.tv("s", "a")?))
        })?,
        uniform_row("τ(t,s)", "τ(s,a)·τ(t,a)", &both, |w| {
            Ok((
                w.tv("t", "s")?,
                compose(&w.g, &w.tv("s", "a")?, &w.tv("t", "a")?),
            ))
        })?,
        uniform_row("τ(t,s)⁻¹", "τ(s,a)·τ(t,a)⁻¹", &both, |w| {
            Ok((
                invert(&w.tv("t", "s")?),
                compose(&w.g, &w.tv("s", "a")?, &invert(&w.tv("t", "a")?)),
            ))
        })?,
        uniform_row("ι(b)", "τ(s,a)", &both, |w| {
            Ok((w.inv("b")?, w.tv("s", "a")?))
        })?,
        uniform_row("ι(a)", "τ(s,a)⁻¹", &both, |w| {
            Ok((w.inv("a")?, invert(&w.tv("s", "a")?)))
        })?,
        uniform_row("τ(b,d)", "τ(s,a)", &both, |w| {
            Ok((w.tv("b", "d")?, w.tv("s", "a")?))
        })?,
        uniform_row("τ(a,b)", "τ(s,a)·τ(s,b)⁻¹", &both, |w| {
            Ok((
                w.tv("a", "b")?,
                compose(&w.g, &w.tv("s", "a")?, &invert(&w.tv("s", "b")?)),
            ))
        })?,
        uniform_row("τ(a,b)⁻¹", "τ(s,a)·τ(s,b)", &both, |w| {
            Ok((
                invert(&w.tv("a", "b")?),
                compose(&w.g, &w.tv("s", "a")?, &w.tv("s", "b")?),
            ))
        })?,
    ];

    let mut cases = Vec::new();
    for w in [&clique, &edgeless, &path] {
        for phi in symmetries_fixing_social(w)? {
            let gen = LsGenerator::Symmetry(phi.clone());
            let image = w.g.name(phi.apply(w.v("a"))).to_string();
            let expected = w.tv("s", &image)?;
            cases.push(w.case(
                &w.gen(gen.clone())?,
                gen.display(&w.g).to_string(),
                &expected,
                format!("τ(s,{image})"),
            )?);
        }
    }
    rows.push(TableRow {
        generator: "φ ∈ Aut(Δ)".into(),
        expected: "τ(s,φ(a))".into(),
        cases,
    });

    let mut cases = Vec::new();
    for w in [&edgeless, &path] {
        let expected = w.tv("s", "a")?;
        for c in ["a", "b", "d", "x", "y"] {
            let Ok(c) = w.g.vertex(c) else { continue };
            for d in w.g.star_cut_components(c)? {
                let gen = LsGenerator::partial_conjugation(c, d);
                cases.push(w.case(
                    &w.gen(gen.clone())?,
                    gen.display(&w.g).to_string(),
                    &expected,
                    "τ(s,a)".into(),
                )?);
            }
        }
    }
    rows.push(TableRow {
        generator: "γ(c,D)".into(),
        expected: "τ(s,a)".into(),
        cases,
    });

    Ok(TableReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_rows_pass() {
        let report = verify_conjugation_table().unwrap();
        assert_eq!(report.rows.len(), 13);
        for row in &report.rows {
            assert!(row.passed(), "{row}: {:?}", row.cases);
        }
    }

    #[test]
    fn partial_conjugation_row_covers_the_documented_cases() {
        let report = verify_conjugation_table().unwrap();
        let row = report.rows.last().unwrap();
        let labels: Vec<&str> = row.cases.iter().map(|c| c.conjugator.as_str()).collect();
        assert!(labels.contains(&"γ(x,{y})"), "{labels:?}");
        assert!(labels.contains(&"γ(y,{a, x})"), "{labels:?}");
    }

    #[test]
    fn symmetry_row_moves_a() {
        let report = verify_conjugation_table().unwrap();
        let row = &report.rows[11];
        assert_eq!(row.cases.len(), 5 + 5 + 1);
        assert!(row.cases.iter().any(|c| c.expected == "τ(s,y)"));
    }

    #[test]
    fn a_wrong_expectation_fails() {
        let w = Witness::new(
            "join(K3, K3{a,b,d})",
            &["a", "b", "d"],
            &[("a", "b"), ("b", "d"), ("a", "d")],
        )
        .unwrap();
        let case = w
            .case(
                &w.inv("s").unwrap(),
                "ι(s)".into(),
                &w.tv("s", "a").unwrap(),
                "τ(s,a)".into(),
            )
            .unwrap();
        assert!(!case.passed);
    }
}
