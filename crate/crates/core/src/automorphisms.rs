//! Automorphisms of A_Γ given by generator images, and the Laurence–Servatius
//! generators (inversions, graph symmetries, dominated transvections, partial
//! conjugations).

use std::fmt;

use crate::domination::{dominated_pairs, dominates_unchecked};
use crate::error::{Error, Result};
use crate::graph::{SimplicialGraph, Vertex};
use crate::matrix::IntMatrix;
use crate::symmetry::{graph_automorphisms, GraphPermutation};
use crate::words::{normal_form_unchecked, Letter, NormalForm, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LsGenerator {
    /// `v ↦ v⁻¹`.
    Inversion(Vertex),
    /// `v ↦ φ(v)`.
    Symmetry(GraphPermutation),
    /// `target ↦ target · by`, defined when `target ≤ by`.
    Transvection { by: Vertex, target: Vertex },
    /// `d ↦ by · d · by⁻¹` for every `d` in `component`, a component of
    /// Γ \ st(by).
    PartialConjugation { by: Vertex, component: Vec<Vertex> },
}

impl LsGenerator {
    pub fn transvection(by: Vertex, target: Vertex) -> Self {
        Self::Transvection { by, target }
    }

    pub fn partial_conjugation(by: Vertex, component: Vec<Vertex>) -> Self {
        Self::PartialConjugation { by, component }
    }

    pub fn display<'a>(&'a self, g: &'a SimplicialGraph) -> GeneratorDisplay<'a> {
        GeneratorDisplay { gen: self, g }
    }
}

pub struct GeneratorDisplay<'a> {
    gen: &'a LsGenerator,
    g: &'a SimplicialGraph,
}

impl fmt::Display for GeneratorDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.g;
        match self.gen {
            LsGenerator::Inversion(v) => write!(f, "ι({})", g.name(*v)),
            LsGenerator::Symmetry(phi) => {
                let moved: Vec<String> = g
                    .vertices()
                    .filter(|&v| phi.apply(v) != v)
                    .map(|v| format!("{}→{}", g.name(v), g.name(phi.apply(v))))
                    .collect();
                write!(f, "φ({})", moved.join(" "))
            }
            LsGenerator::Transvection { by, target } => {
                write!(f, "τ({},{})", g.name(*by), g.name(*target))
            }
            LsGenerator::PartialConjugation { by, component } => {
                write!(f, "γ({},{})", g.name(*by), g.format_set(component))
            }
        }
    }
}

/// An automorphism of A_Γ stored as normal-form images of the generators
/// together with the images under its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RaagAutomorphism {
    forward: Vec<NormalForm>,
    backward: Vec<NormalForm>,
}

impl RaagAutomorphism {
    pub fn identity(g: &SimplicialGraph) -> Self {
        let images: Vec<NormalForm> = g
            .vertices()
            .map(|v| normal_form_unchecked(g, &Word::generator(v)))
            .collect();
        Self {
            forward: images.clone(),
            backward: images,
        }
    }

    /// Builds an automorphism from explicit images and inverse images,
    /// checking that adjacent generators map to commuting elements and that
    /// the two maps are mutually inverse.
    pub fn from_images(g: &SimplicialGraph, forward: &[Word], backward: &[Word]) -> Result<Self> {
        if forward.len() != g.len() || backward.len() != g.len() {
            return Err(Error::InvalidParameters(
                "one image per generator is required".into(),
            ));
        }
        for w in forward.iter().chain(backward) {
            crate::words::reduce(g, w)?;
        }
        let f = Self {
            forward: forward
                .iter()
                .map(|w| normal_form_unchecked(g, w))
                .collect(),
            backward: backward
                .iter()
                .map(|w| normal_form_unchecked(g, w))
                .collect(),
        };
        verify_automorphism(g, &f)?;
        Ok(f)
    }

    pub fn image(&self, v: Vertex) -> &Word {
        self.forward[v].word()
    }

    pub fn inverse_image(&self, v: Vertex) -> &Word {
        self.backward[v].word()
    }

    pub fn is_identity(&self) -> bool {
        self.forward
            .iter()
            .enumerate()
            .all(|(v, w)| w.word().letters() == [Letter::pos(v)])
    }

    pub fn display<'a>(&'a self, g: &'a SimplicialGraph) -> AutomorphismDisplay<'a> {
        AutomorphismDisplay { f: self, g }
    }
}

pub struct AutomorphismDisplay<'a> {
    f: &'a RaagAutomorphism,
    g: &'a SimplicialGraph,
}

impl fmt::Display for AutomorphismDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let moved: Vec<String> = self
            .g
            .vertices()
            .filter(|&v| self.f.image(v).letters() != [Letter::pos(v)])
            .map(|v| format!("{} ↦ {}", self.g.name(v), self.f.image(v).display(self.g)))
            .collect();
        if moved.is_empty() {
            f.write_str("id")
        } else {
            write!(f, "[{}]", moved.join(", "))
        }
    }
}

/// Every LS generator of Aut(A_Γ): inversions, non-identity graph
/// symmetries, dominated transvections `τ(x,y)` with `x ≠ y`, and partial
/// conjugations for every star-cut component.
pub fn enumerate_ls_generators(g: &SimplicialGraph) -> Result<Vec<LsGenerator>> {
    let symmetries = graph_automorphisms(g)?;
    Ok(ls_generators_with(g, &symmetries))
}

pub(crate) fn ls_generators_with(
    g: &SimplicialGraph,
    symmetries: &[GraphPermutation],
) -> Vec<LsGenerator> {
    let mut gens: Vec<LsGenerator> = g.vertices().map(LsGenerator::Inversion).collect();
    gens.extend(
        symmetries
            .iter()
            .filter(|phi| !phi.is_identity())
            .cloned()
            .map(LsGenerator::Symmetry),
    );
    gens.extend(dominated_pairs(g).map(|(x, y)| LsGenerator::transvection(x, y)));
    gens.extend(
        partial_conjugation_pairs(g)
            .into_iter()
            .map(|(c, d)| LsGenerator::partial_conjugation(c, d)),
    );
    gens
}

/// All `(c, D)` with `D` a component of Γ \ st(c), ordered by `c` then by
/// smallest vertex of `D`.
pub(crate) fn partial_conjugation_pairs(g: &SimplicialGraph) -> Vec<(Vertex, Vec<Vertex>)> {
    g.vertices()
        .flat_map(|c| {
            g.star_cut_components(c)
                .expect("vertex in range")
                .into_iter()
                .map(move |d| (c, d))
        })
        .collect()
}

fn letter_word(l: Letter) -> Word {
    Word(vec![l])
}

/// The automorphism of A_Γ induced by an LS generator.
pub fn ls_to_automorphism(g: &SimplicialGraph, gen: &LsGenerator) -> Result<RaagAutomorphism> {
    let n = g.len();
    let mut forward: Vec<Word> = g.vertices().map(Word::generator).collect();
    let mut backward = forward.clone();
    match gen {
        LsGenerator::Inversion(v) => {
            g.check_vertex(*v)?;
            forward[*v] = letter_word(Letter::neg(*v));
            backward[*v] = letter_word(Letter::neg(*v));
        }
        LsGenerator::Symmetry(phi) => {
            if phi.len() != n || !phi.is_automorphism_of(g) {
                return Err(Error::InvalidGenerator(
                    "permutation is not a graph symmetry".into(),
                ));
            }
            let inv = phi.inverse();
            for v in g.vertices() {
                forward[v] = Word::generator(phi.apply(v));
                backward[v] = Word::generator(inv.apply(v));
            }
        }
        LsGenerator::Transvection { by, target } => {
            g.check_vertex(*by)?;
            g.check_vertex(*target)?;
            if by == target || !dominates_unchecked(g, *by, *target) {
                return Err(Error::InvalidGenerator(format!(
                    "{} is not dominated by {}",
                    g.name(*target),
                    g.name(*by)
                )));
            }
            forward[*target] = Word(vec![Letter::pos(*target), Letter::pos(*by)]);
            backward[*target] = Word(vec![Letter::pos(*target), Letter::neg(*by)]);
        }
        LsGenerator::PartialConjugation { by, component } => {
            let components = g.star_cut_components(*by)?;
            let mut sorted = component.clone();
            sorted.sort_unstable();
            if !components.contains(&sorted) {
                return Err(Error::InvalidGenerator(format!(
                    "{} is not a component of Γ \\ st({})",
                    g.format_set(component),
                    g.name(*by)
                )));
            }
            let c = *by;
            for &d in &sorted {
                forward[d] = Word(vec![Letter::pos(c), Letter::pos(d), Letter::neg(c)]);
                backward[d] = Word(vec![Letter::neg(c), Letter::pos(d), Letter::pos(c)]);
            }
        }
    }
    Ok(RaagAutomorphism {
        forward: forward
            .iter()
            .map(|w| normal_form_unchecked(g, w))
            .collect(),
        backward: backward
            .iter()
            .map(|w| normal_form_unchecked(g, w))
            .collect(),
    })
}

fn substitute(g: &SimplicialGraph, images: &[NormalForm], w: &Word) -> NormalForm {
    let mut letters = Vec::new();
    for l in w.letters() {
        let img = images[l.vertex].word();
        if l.inverse {
            letters.extend(img.letters().iter().rev().map(|x| x.inv()));
        } else {
            letters.extend_from_slice(img.letters());
        }
    }
    normal_form_unchecked(g, &Word(letters))
}

/// `f(w)` in normal form.
pub fn apply(g: &SimplicialGraph, f: &RaagAutomorphism, w: &Word) -> Result<Word> {
    crate::words::reduce(g, w)?;
    Ok(substitute(g, &f.forward, w).into_word())
}

/// `f ∘ h`: apply `h` first.
pub fn compose(
    g: &SimplicialGraph,
    f: &RaagAutomorphism,
    h: &RaagAutomorphism,
) -> RaagAutomorphism {
    RaagAutomorphism {
        forward: h
            .forward
            .iter()
            .map(|w| substitute(g, &f.forward, w.word()))
            .collect(),
        backward: f
            .backward
            .iter()
            .map(|w| substitute(g, &h.backward, w.word()))
            .collect(),
    }
}

pub fn invert(f: &RaagAutomorphism) -> RaagAutomorphism {
    RaagAutomorphism {
        forward: f.backward.clone(),
        backward: f.forward.clone(),
    }
}

/// `f^k` for any integer `k`.
pub fn power(g: &SimplicialGraph, f: &RaagAutomorphism, k: i64) -> RaagAutomorphism {
    let base = if k < 0 { invert(f) } else { f.clone() };
    let mut out = RaagAutomorphism::identity(g);
    for _ in 0..k.unsigned_abs() {
        out = compose(g, &base, &out);
    }
    out
}

/// Equality as maps: images of every generator agree in A_Γ. Images are kept
/// in normal form, so this is a structural comparison.
pub fn automorphisms_equal(f: &RaagAutomorphism, h: &RaagAutomorphism) -> bool {
    f.forward == h.forward
}

/// `λ ∘ f ∘ λ⁻¹`.
pub fn conjugate_automorphism(
    g: &SimplicialGraph,
    lambda: &RaagAutomorphism,
    f: &RaagAutomorphism,
) -> RaagAutomorphism {
    compose(g, lambda, &compose(g, f, &invert(lambda)))
}

/// `[f, h] = f h f⁻¹ h⁻¹`.
pub fn commutator(
    g: &SimplicialGraph,
    f: &RaagAutomorphism,
    h: &RaagAutomorphism,
) -> RaagAutomorphism {
    compose(g, &compose(g, f, h), &compose(g, &invert(f), &invert(h)))
}

/// Checks that adjacent generators have commuting images and that the
/// stored inverse really is a two-sided inverse.
pub fn verify_automorphism(g: &SimplicialGraph, f: &RaagAutomorphism) -> Result<()> {
    for (u, v) in g.edges() {
        let a = f.image(u);
        let b = f.image(v);
        let ab = normal_form_unchecked(g, &a.concat(b));
        let ba = normal_form_unchecked(g, &b.concat(a));
        if ab != ba {
            return Err(Error::Inconsistent(format!(
                "images of adjacent {} and {} do not commute",
                g.name(u),
                g.name(v)
            )));
        }
    }
    let id = RaagAutomorphism::identity(g);
    if !automorphisms_equal(&compose(g, f, &invert(f)), &id)
        || !automorphisms_equal(&compose(g, &invert(f), f), &id)
    {
        return Err(Error::Inconsistent(
            "stored inverse is not a two-sided inverse".into(),
        ));
    }
    Ok(())
}

/// Matrix of the induced map on ℤ^V: column `v` is the exponent-sum vector of
/// `f(v)`. This is a homomorphism: `M(f ∘ h) = M(f) · M(h)`.
pub fn abelianization_matrix(g: &SimplicialGraph, f: &RaagAutomorphism) -> IntMatrix {
    let n = g.len();
    let mut m = IntMatrix::zeros(n, n);
    for v in g.vertices() {
        for l in f.image(v).letters() {
            m[(l.vertex, v)] += l.exponent();
        }
    }
    m
}

/// Witness that an automorphism is not inner: inner automorphisms act
/// trivially on the abelianization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotInner {
    pub matrix: IntMatrix,
}

pub fn not_inner_by_abelianization(g: &SimplicialGraph, f: &RaagAutomorphism) -> Option<NotInner> {
    let matrix = abelianization_matrix(g, f);
    (!matrix.is_identity()).then_some(NotInner { matrix })
}
