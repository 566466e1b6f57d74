//! Brute-force equality of words in A_Γ by breadth-first search over
//! elementary rewrites: swapping adjacent commuting letters, deleting
//! `x x⁻¹`, and inserting `x x⁻¹`. Shares nothing with the library beyond
//! the adjacency relation.

use std::collections::{HashSet, VecDeque};

pub type OracleWord = Vec<(usize, bool)>;

pub struct Oracle {
    n: usize,
    adjacent: Vec<Vec<bool>>,
}

impl Oracle {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adjacent = vec![vec![false; n]; n];
        for &(u, v) in edges {
            adjacent[u][v] = true;
            adjacent[v][u] = true;
        }
        Self { n, adjacent }
    }

    fn neighbours(&self, w: &OracleWord, bound: usize) -> Vec<OracleWord> {
        let mut out = Vec::new();
        for i in 0..w.len().saturating_sub(1) {
            let (a, b) = (w[i], w[i + 1]);
            if a.0 != b.0 && self.adjacent[a.0][b.0] {
                let mut x = w.clone();
                x.swap(i, i + 1);
                out.push(x);
            }
            if a.0 == b.0 && a.1 != b.1 {
                let mut x = w.clone();
                x.drain(i..i + 2);
                out.push(x);
            }
        }
        if w.len() + 2 <= bound {
            for pos in 0..=w.len() {
                for v in 0..self.n {
                    for inv in [false, true] {
                        let mut x = w.clone();
                        x.splice(pos..pos, [(v, inv), (v, !inv)]);
                        out.push(x);
                    }
                }
            }
        }
        out
    }

    /// Words of length at most `bound` reachable from `u`.
    pub fn reachable(&self, u: &OracleWord, bound: usize) -> HashSet<OracleWord> {
        let mut seen = HashSet::from([u.clone()]);
        let mut queue = VecDeque::from([u.clone()]);
        while let Some(w) = queue.pop_front() {
            for x in self.neighbours(&w, bound) {
                if seen.insert(x.clone()) {
                    queue.push_back(x);
                }
            }
        }
        seen
    }

    /// Whether `u` and `w` are equal in A_Γ. Equal words are connected by
    /// rewrites that never exceed the longer of the two, via a common
    /// reduced form.
    pub fn equal(&self, u: &OracleWord, w: &OracleWord) -> bool {
        let bound = u.len().max(w.len());
        self.reachable(u, bound).contains(w)
    }
}
