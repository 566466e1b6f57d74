mod common;

use std::collections::BTreeSet;

use common::oracle::{Oracle, OracleWord};
use num_bigint::BigUint;
use proptest::prelude::*;
use raag_aut::automorphisms::{
    abelianization_matrix, automorphisms_equal, compose, enumerate_ls_generators, invert,
    ls_to_automorphism, verify_automorphism, RaagAutomorphism,
};
use raag_aut::decomposition::{sign_classes, sign_classes_with_priority, JoinDecomposition};
use raag_aut::domination::{dominates, verify_order_antisymmetry};
use raag_aut::families::{cycle_hub, SpokeSet};
use raag_aut::matrix::IntMatrix;
use raag_aut::pc_bounds::{
    austerity, find_sil, gl_order, star_cut_bound, star_cut_counts, Verdict,
};
use raag_aut::symmetry::graph_automorphisms;
use raag_aut::verify::sign_class_agreement;
use raag_aut::words::{abelianize, normal_form, words_equal, Letter, Word};
use raag_aut::SimplicialGraph;

fn build(n: usize, edge_bits: &[bool]) -> (SimplicialGraph, Vec<(usize, usize)>) {
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if edge_bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    let named: Vec<(String, String)> = edges
        .iter()
        .map(|&(u, v)| (names[u].clone(), names[v].clone()))
        .collect();
    let refs: Vec<(&str, &str)> = named
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    (
        SimplicialGraph::from_edges(&name_refs, &refs).unwrap(),
        edges,
    )
}

fn graph(max: usize) -> impl Strategy<Value = (SimplicialGraph, Vec<(usize, usize)>)> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| build(n, &bits))
    })
}

fn word(n: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..n, any::<bool>()), 0..=max_len)
        .prop_map(|ls| Word(ls.into_iter().map(|(v, i)| Letter::new(v, i)).collect()))
}

fn to_oracle(w: &Word) -> OracleWord {
    w.letters().iter().map(|l| (l.vertex, l.inverse)).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn free_reduce(w: &Word) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for &l in w.letters() {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn automorphisms_match_brute_force((g, edges) in graph(7)) {
        let n = g.len();
        let edge_set: BTreeSet<(usize, usize)> = edges.iter().copied().collect();
        let mut brute: Vec<Vec<usize>> = permutations(n)
            .into_iter()
            .filter(|p| edges.iter().all(|&(u, v)| {
                let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                edge_set.contains(&(a, b))
            }))
            .collect();
        brute.sort();
        let found = graph_automorphisms(&g).unwrap();
        let images: Vec<Vec<usize>> = found.iter().map(|p| p.images().to_vec()).collect();
        prop_assert_eq!(&images, &brute);
        prop_assert!(found[0].is_identity());
        for a in &found {
            prop_assert!(images.contains(&a.inverse().images().to_vec()));
            for b in &found {
                prop_assert!(images.contains(&a.compose(b).images().to_vec()));
            }
        }
    }

    #[test]
    fn domination_is_a_preorder((g, _) in graph(7)) {
        let n = g.len();
        let le = |y: usize, x: usize| dominates(&g, x, y).unwrap();
        for x in 0..n {
            prop_assert!(le(x, x));
            for y in 0..n {
                let by_sets = g.link(y).unwrap().is_subset(&g.star(x).unwrap());
                prop_assert_eq!(le(y, x), by_sets);
                for z in 0..n {
                    if le(z, y) && le(y, x) {
                        prop_assert!(le(z, x));
                    }
                }
            }
        }
        prop_assert!(verify_order_antisymmetry(&g).passed());
    }

    #[test]
    fn words_agree_with_rewriting_oracle(
        ((g, edges), u, w) in graph(4).prop_flat_map(|(g, e)| {
            let n = g.len();
            (Just((g, e)), word(n, 4), word(n, 4))
        })
    ) {
        let oracle = Oracle::new(g.len(), &edges);
        prop_assert_eq!(words_equal(&g, &u, &w).unwrap(), oracle.equal(&to_oracle(&u), &to_oracle(&w)));
        let nf = normal_form(&g, &u).unwrap();
        prop_assert!(nf.word().len() <= u.len());
        prop_assert!(oracle.equal(&to_oracle(&u), &to_oracle(nf.word())));
    }

    #[test]
    fn complete_graph_words_are_abelian(
        (n, u, w) in (1usize..5).prop_flat_map(|n| (Just(n), word(n, 6), word(n, 6)))
    ) {
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let g = SimplicialGraph::complete(&names).unwrap();
        prop_assert_eq!(
            words_equal(&g, &u, &w).unwrap(),
            abelianize(&g, &u).unwrap() == abelianize(&g, &w).unwrap()
        );
    }

    #[test]
    fn edgeless_graph_words_are_free(
        (n, u, w) in (1usize..5).prop_flat_map(|n| (Just(n), word(n, 6), word(n, 6)))
    ) {
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let g = SimplicialGraph::with_vertices(&names).unwrap();
        prop_assert_eq!(words_equal(&g, &u, &w).unwrap(), free_reduce(&u) == free_reduce(&w));
        let nf = normal_form(&g, &u).unwrap();
        let free = free_reduce(&u);
        prop_assert_eq!(nf.word().letters(), free.as_slice());
    }

    #[test]
    fn normal_form_is_a_canonical_congruence(
        ((g, _), u, w) in graph(6).prop_flat_map(|(g, e)| {
            let n = g.len();
            (Just((g, e)), word(n, 8), word(n, 8))
        })
    ) {
        let nu = normal_form(&g, &u).unwrap();
        prop_assert_eq!(&normal_form(&g, nu.word()).unwrap(), &nu);
        let nw = normal_form(&g, &w).unwrap();
        prop_assert_eq!(
            normal_form(&g, &u.concat(&w)).unwrap(),
            normal_form(&g, &nu.word().concat(nw.word())).unwrap()
        );
        prop_assert!(normal_form(&g, &u.concat(&u.invert())).unwrap().is_identity());
        prop_assert_eq!(abelianize(&g, &u).unwrap(), abelianize(&g, nu.word()).unwrap());
    }

    #[test]
    fn abelianization_is_a_homomorphism(
        ((g, _), picks) in graph(5).prop_flat_map(|ge| {
            (Just(ge), prop::collection::vec((any::<prop::sample::Index>(), any::<bool>()), 0..=10))
        })
    ) {
        let gens = enumerate_ls_generators(&g).unwrap();
        let autos: Vec<RaagAutomorphism> = gens.iter().map(|x| ls_to_automorphism(&g, x).unwrap()).collect();
        for a in &autos {
            prop_assert!(verify_automorphism(&g, a).is_ok());
        }
        let word_of = |slice: &[(prop::sample::Index, bool)]| {
            slice.iter().fold(RaagAutomorphism::identity(&g), |acc, (i, inv)| {
                let a = &autos[i.index(autos.len())];
                let a = if *inv { invert(a) } else { a.clone() };
                compose(&g, &acc, &a)
            })
        };
        let mid = picks.len() / 2;
        let f = word_of(&picks[..mid.min(5)]);
        let h = word_of(&picks[mid..picks.len().min(mid + 5)]);
        let fh = compose(&g, &f, &h);
        let product = &abelianization_matrix(&g, &f) * &abelianization_matrix(&g, &h);
        prop_assert_eq!(abelianization_matrix(&g, &fh), product);
        prop_assert!(abelianization_matrix(&g, &fh).is_unimodular());
        prop_assert!(verify_automorphism(&g, &fh).is_ok());
        prop_assert!(automorphisms_equal(&compose(&g, &f, &invert(&f)), &RaagAutomorphism::identity(&g)));
    }

    #[test]
    fn sign_classes_ignore_labels_and_tie_breaks(
        ((g, edges), perm, priority) in graph(6).prop_flat_map(|(g, e)| {
            let n = g.len();
            let idx: Vec<usize> = (0..n).collect();
            (Just((g, e)), Just(idx.clone()).prop_shuffle(), Just(idx).prop_shuffle())
        })
    ) {
        let n = g.len();
        let names_of = |h: &SimplicialGraph, classes: &[Vec<usize>]| -> BTreeSet<BTreeSet<String>> {
            classes.iter().map(|c| c.iter().map(|&v| h.name(v).to_string()).collect()).collect()
        };
        let base = sign_classes(&JoinDecomposition::for_delta(g.clone())).unwrap();
        let expected = names_of(&g, &base.classes);

        // Same graph with vertices listed in permuted order.
        let order: Vec<String> = perm.iter().map(|&v| g.name(v).to_string()).collect();
        let relabelled_edges: Vec<(String, String)> = edges
            .iter()
            .map(|&(u, v)| (g.name(u).to_string(), g.name(v).to_string()))
            .collect();
        let h = SimplicialGraph::from_edges(&order, &relabelled_edges).unwrap();
        let moved = sign_classes(&JoinDecomposition::for_delta(h.clone())).unwrap();
        prop_assert_eq!(names_of(&h, &moved.classes), expected.clone());

        let again = sign_classes_with_priority(&g, &priority).unwrap();
        prop_assert_eq!(names_of(&g, &again.classes), expected);
        prop_assert!(base.m() >= 1 && base.m() <= n);
    }

    #[test]
    fn sign_matrix_check_matches_classes((g, _) in graph(6)) {
        let (ok, detail) = sign_class_agreement(&g).unwrap();
        prop_assert!(ok, "{}", detail);
    }

    #[test]
    fn cycle_hubs_certify_their_bound(
        gaps in (3usize..=5).prop_flat_map(|t| {
            prop::sample::subsequence((3u64..=10).collect::<Vec<_>>(), t).prop_shuffle()
        })
    ) {
        let mut spokes = Vec::new();
        let mut at = 0;
        for gap in &gaps {
            at += gap;
            spokes.push(at);
        }
        let t = spokes.len();
        let g = cycle_hub(&SpokeSet::new(spokes).unwrap()).unwrap();
        let hub = g.vertex("c").unwrap();
        prop_assert_eq!(austerity(&g).unwrap().verdict, Verdict::AustereWithStarCuts);
        prop_assert!(find_sil(&g).is_none());
        prop_assert_eq!(star_cut_counts(&g)[hub], t);
        prop_assert_eq!(star_cut_bound(&g).unwrap(), BigUint::from(1u32) << (t - 1));
    }
}

#[test]
fn gl_order_matches_determinant_count() {
    for n in 1..=3usize {
        let mut count = 0u64;
        for bits in 0u32..1 << (n * n) {
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|i| (0..n).map(|j| i64::from(bits >> (i * n + j) & 1)).collect())
                .collect();
            let det = IntMatrix::from_rows(&rows).determinant();
            if det.bit(0) {
                count += 1;
            }
        }
        assert_eq!(
            gl_order(n as u32, 2).unwrap(),
            BigUint::from(count),
            "n = {n}"
        );
    }
    assert_eq!(gl_order(2, 2).unwrap(), BigUint::from(6u32));
    assert_eq!(gl_order(3, 2).unwrap(), BigUint::from(168u32));
}
