//! Words in A_Γ and their canonical normal forms.
//!
//! A word is fully reduced when it contains no pair `x^ε … x^-ε` whose
//! intermediate letters all commute with `x`. Two reduced words represent the
//! same element exactly when one is a shuffle of the other by commuting
//! adjacent letters, so the lexicographically least shuffle of a reduced word
//! is a canonical representative.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{SimplicialGraph, Vertex};

/// A generator or its inverse. Ordered by vertex, then `+1` before `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub vertex: Vertex,
    pub inverse: bool,
}

impl Letter {
    pub fn new(vertex: Vertex, inverse: bool) -> Self {
        Self { vertex, inverse }
    }

    pub fn pos(vertex: Vertex) -> Self {
        Self::new(vertex, false)
    }

    pub fn neg(vertex: Vertex) -> Self {
        Self::new(vertex, true)
    }

    pub fn inv(self) -> Self {
        Self::new(self.vertex, !self.inverse)
    }

    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn generator(v: Vertex) -> Self {
        Self(vec![Letter::pos(v)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parses whitespace-separated `name` / `name^-1` tokens.
    pub fn parse(g: &SimplicialGraph, text: &str) -> Result<Self> {
        text.split_whitespace()
            .map(|token| {
                let (name, inverse) = match token.strip_suffix("^-1") {
                    Some(name) => (name, true),
                    None => (token, false),
                };
                if name.is_empty() || name.contains('^') {
                    return Err(Error::MalformedWord(format!("bad token `{token}`")));
                }
                Ok(Letter::new(g.vertex(name)?, inverse))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    pub fn display<'a>(&'a self, g: &'a SimplicialGraph) -> WordDisplay<'a> {
        WordDisplay { word: self, g }
    }

    pub fn invert(&self) -> Self {
        Self(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Self(letters)
    }

    /// `u · w · u⁻¹`, unreduced.
    pub fn conjugate(u: &Self, w: &Self) -> Self {
        u.concat(w).concat(&u.invert())
    }

    fn check(&self, g: &SimplicialGraph) -> Result<()> {
        match self.0.iter().find(|l| l.vertex >= g.len()) {
            Some(l) => Err(Error::VertexOutOfRange(l.vertex)),
            None => Ok(()),
        }
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    g: &'a SimplicialGraph,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.g.name(l.vertex))?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// Canonical representative of a group element.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm(Word);

impl NormalForm {
    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }
}

/// Letters of distinct vertices commute iff the vertices are adjacent.
#[inline]
fn commute(g: &SimplicialGraph, a: Letter, b: Letter) -> bool {
    a.vertex != b.vertex && g.adjacent(a.vertex, b.vertex)
}

/// Appends `letter` to an already reduced sequence, cancelling it against
/// the nearest letter of the same vertex if only commuting letters separate
/// them.
fn push_reduced(g: &SimplicialGraph, out: &mut Vec<Letter>, letter: Letter) {
    for i in (0..out.len()).rev() {
        let prev = out[i];
        if prev.vertex == letter.vertex {
            if prev.inverse != letter.inverse {
                out.remove(i);
                return;
            }
            break;
        }
        if !g.adjacent(prev.vertex, letter.vertex) {
            break;
        }
    }
    out.push(letter);
}

pub(crate) fn reduce_unchecked(g: &SimplicialGraph, w: &Word) -> Word {
    let mut out = Vec::with_capacity(w.len());
    for &l in &w.0 {
        push_reduced(g, &mut out, l);
    }
    Word(out)
}

/// Deletes cancelling pairs until none remain. The result is a geodesic
/// representative of the same element.
pub fn reduce(g: &SimplicialGraph, w: &Word) -> Result<Word> {
    w.check(g)?;
    Ok(reduce_unchecked(g, w))
}

/// Lexicographically least shuffle of a reduced word: repeatedly emit the
/// smallest letter that commutes with everything still before it.
fn lex_least_shuffle(g: &SimplicialGraph, mut rest: Vec<Letter>) -> Vec<Letter> {
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best: Option<usize> = None;
        for i in 0..rest.len() {
            if best.is_some_and(|b| rest[b] <= rest[i]) {
                continue;
            }
            if rest[..i].iter().all(|&p| commute(g, p, rest[i])) {
                best = Some(i);
            }
        }
        let i = best.expect("first letter is always available");
        out.push(rest.remove(i));
    }
    out
}

pub(crate) fn normal_form_unchecked(g: &SimplicialGraph, w: &Word) -> NormalForm {
    let reduced = reduce_unchecked(g, w);
    NormalForm(Word(lex_least_shuffle(g, reduced.0)))
}

pub fn normal_form(g: &SimplicialGraph, w: &Word) -> Result<NormalForm> {
    w.check(g)?;
    Ok(normal_form_unchecked(g, w))
}

pub fn words_equal(g: &SimplicialGraph, u: &Word, w: &Word) -> Result<bool> {
    Ok(normal_form(g, u)? == normal_form(g, w)?)
}

/// Exponent-sum vector indexed by vertex.
pub fn abelianize(g: &SimplicialGraph, w: &Word) -> Result<Vec<i64>> {
    w.check(g)?;
    let mut sums = vec![0; g.len()];
    for l in &w.0 {
        sums[l.vertex] += l.exponent();
    }
    Ok(sums)
}
