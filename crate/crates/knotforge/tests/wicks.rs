mod common;

use common::{corpus, diagram, FIGURE_EIGHT, TREFOIL};
use knotforge::graph::{twin, MultiGraph};
use knotforge::seifert::{canonical_genus, splice_all};
use knotforge::wicks::{
    alternation_defects, chord_patterns, diagram_to_word, equivalence_classes, find_bieulerian, is_bieulerian,
    is_wicks, parallel, t2_apply, t2_reduce, t2_reduce_triples, word_to_surface, CyclicWord, Token, WicksCondition,
    WicksVerdict, WordError,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Vertices of the glued polygon as cycles of `k -> other(k) + 1`.
fn oracle_vertices(w: &CyclicWord) -> usize {
    let t = w.tokens();
    let len = t.len();
    let other = |k: usize| (0..len).find(|&j| j != k && t[j].letter == t[k].letter).unwrap();
    let mut seen = vec![false; len];
    let mut cycles = 0;
    for start in 0..len {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = (other(k) + 1) % len;
        }
    }
    cycles
}

fn oracle_mirrored_pair(w: &CyclicWord) -> bool {
    let t = w.tokens();
    let len = t.len();
    let factors: Vec<(Token, Token)> = (0..len).map(|i| (t[i], t[(i + 1) % len])).collect();
    factors.iter().any(|&(x, y)| x.letter != y.letter && factors.contains(&(y.inv(), x.inv())))
}

fn random_word(rng: &mut ChaCha8Rng, e: u32) -> CyclicWord {
    let mut tokens: Vec<Token> = (0..e).flat_map(|x| [Token::new(x, false), Token::new(x, true)]).collect();
    tokens.shuffle(rng);
    CyclicWord::new(tokens)
}

#[test]
fn surface_matches_cycle_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let e = rand::Rng::gen_range(&mut rng, 1..9);
        let w = random_word(&mut rng, e);
        let (g, s) = word_to_surface(&w).unwrap();
        assert_eq!(s.v, oracle_vertices(&w), "{w}");
        assert_eq!(g.vertex_count(), s.v);
        assert_eq!(s.e, e as usize);
        assert_eq!(s.euler, s.v as i64 - s.e as i64 + 1);
        assert_eq!(2 * s.genus as i64, 2 - s.euler);
    }
}

#[test]
fn corpus_surfaces() {
    for (name, _, d) in corpus() {
        let (_, s) = word_to_surface(&diagram_to_word(&d)).unwrap();
        assert_eq!(s.v, splice_all(&d).circle_count(), "{name}");
        assert_eq!(Ok(s.genus), canonical_genus(&d), "{name}");
    }
    let (_, s) = word_to_surface(&diagram_to_word(&diagram(TREFOIL))).unwrap();
    assert_eq!((s.v, s.e, s.genus), (2, 3, 1));
}

#[test]
fn verdict_matches_pattern_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..500 {
        let e = rand::Rng::gen_range(&mut rng, 1..7);
        let w = random_word(&mut rng, e);
        let t = w.tokens();
        let cancel = (0..t.len()).any(|i| t[(i + 1) % t.len()] == t[i].inv());
        let verdict = is_wicks(&w);
        assert_eq!(verdict.is_valid(), !cancel && !oracle_mirrored_pair(&w), "{w}");
        if cancel {
            assert!(matches!(verdict, WicksVerdict::Violates { condition: WicksCondition::II, .. }));
        }
    }
}

#[test]
fn wicks_forms_come_from_reduced_diagrams() {
    for (name, _, d) in corpus() {
        if is_wicks(&diagram_to_word(&d)).is_valid() {
            assert!(d.is_reduced(), "{name}");
        }
        if !d.is_reduced() {
            assert!(!is_wicks(&diagram_to_word(&d)).is_valid(), "{name}");
        }
    }
}

#[test]
fn clasps_violate_the_mirror_condition() {
    let w = diagram_to_word(&diagram(FIGURE_EIGHT));
    assert!(!chord_patterns(&w).pairs.is_empty());
    assert!(matches!(is_wicks(&w), WicksVerdict::Violates { condition: WicksCondition::III, .. }));
    assert!(is_wicks(&CyclicWord::parse("a b a^-1 b^-1").unwrap()).is_valid());
}

/// Reads the word as a walk: letter `k` in order of first appearance is
/// edge `k` of the surface graph.
fn word_as_path(w: &CyclicWord) -> Vec<usize> {
    let letters = w.letters();
    w.tokens()
        .iter()
        .map(|t| {
            let k = letters.iter().position(|&x| x == t.letter).unwrap();
            2 * k + usize::from(t.inverse)
        })
        .collect()
}

fn walk_is_bieulerian(g: &MultiGraph, path: &[usize]) -> bool {
    let mut used = vec![false; 2 * g.edge_count()];
    let len = path.len();
    for i in 0..len {
        let (d, next) = (path[i], path[(i + 1) % len]);
        if used[d] || next == twin(d) || g.dart_vertex(twin(d)) != g.dart_vertex(next) {
            return false;
        }
        used[d] = true;
    }
    used.iter().all(|&u| u)
}

#[test]
fn reduced_words_are_bieulerian_paths() {
    for (name, _, d) in corpus() {
        let w = diagram_to_word(&d).canonical();
        let (g, _) = word_to_surface(&w).unwrap();
        let path = word_as_path(&w);
        assert_eq!(walk_is_bieulerian(&g, &path), d.is_reduced(), "{name}");
        assert_eq!(is_bieulerian(&g, &path), d.is_reduced(), "{name}");
        if d.is_reduced() {
            let found = find_bieulerian(&g).unwrap();
            assert!(walk_is_bieulerian(&g, &found), "{name}");
        }
    }
}

#[test]
fn bieulerian_parity() {
    let k4 = MultiGraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    assert!(find_bieulerian(&k4).is_none());
    assert!(find_bieulerian(&MultiGraph::dipole(1)).is_none());
    assert!(find_bieulerian(&MultiGraph::dipole(3)).is_some());
}

#[test]
fn parsing() {
    let a = CyclicWord::parse("x y⁻¹ x^-1 y^1").unwrap();
    assert_eq!(a.to_string(), "a1 a2^-1 a1^-1 a2");
    assert!(matches!(CyclicWord::parse(""), Err(WordError::Empty)));
    assert!(matches!(CyclicWord::parse("a^2"), Err(WordError::Syntax { .. })));
    assert!(!CyclicWord::parse("a a").unwrap().is_paired());
    assert!(word_to_surface(&CyclicWord::parse("a b a^-1").unwrap()).is_err());
}

#[test]
fn t2_keeps_genus_and_adds_a_clasp() {
    for (name, _, d) in corpus() {
        let w = diagram_to_word(&d).canonical();
        let g = word_to_surface(&w).unwrap().1.genus;
        for x in w.letters() {
            let grown = t2_apply(&w, x).unwrap();
            let fresh = *grown.letters().iter().max().unwrap();
            assert_eq!(grown.len(), w.len() + 2);
            assert_eq!(word_to_surface(&grown).unwrap().1.genus, g, "{name}");
            assert!(parallel(&grown, x, fresh), "{name}");
        }
    }
    assert!(t2_apply(&CyclicWord::parse("a a^-1").unwrap(), 5).is_err());
}

#[test]
fn reduce_undoes_apply_on_clasp_free_words() {
    for (name, _, d) in corpus() {
        let w = diagram_to_word(&d).canonical();
        if !chord_patterns(&w).pairs.is_empty() {
            continue;
        }
        assert_eq!(alternation_defects(&w), 0);
        for x in w.letters() {
            assert_eq!(t2_reduce(&t2_apply(&w, x).unwrap()), w, "{name}");
        }
    }
}

#[test]
fn trefoil_series_reduces_to_its_generator() {
    let w = diagram_to_word(&diagram(TREFOIL)).canonical();
    let twice = t2_apply(&t2_apply(&w, 0).unwrap(), 1).unwrap();
    assert_eq!(t2_reduce(&twice), w);
    let triple = t2_apply(&t2_apply(&w, 0).unwrap(), 0).unwrap();
    assert!(!chord_patterns(&triple).triples.is_empty());
    assert_eq!(chord_patterns(&t2_reduce_triples(&triple)).triples, vec![]);
}

#[test]
fn class_counts_are_bounded() {
    for (name, _, d) in corpus() {
        if !d.is_reduced() {
            continue;
        }
        let w = diagram_to_word(&d);
        let g = canonical_genus(&d).unwrap();
        let classes = equivalence_classes(&w);
        assert!(classes.len() <= 6 * g - 3, "{name}: {} classes", classes.len());
        let total: usize = classes.iter().map(Vec::len).sum();
        assert_eq!(total, d.crossing_count());
    }
}

proptest! {
    #[test]
    fn canonical_forms_are_invariant(seed in 0u64..1000, e in 1u32..8, k in 0usize..16, shift in 1u32..50) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = random_word(&mut rng, e);
        let mut t = w.tokens().to_vec();
        let k = k % t.len();
        t.rotate_left(k);
        let moved = CyclicWord::new(t.iter().map(|x| Token::new((x.letter * 7 + shift) % 97 + 100 * x.letter, x.inverse)).collect());
        prop_assert_eq!(moved.canonical(), w.canonical());
        prop_assert_eq!(w.inverse().canonical_dihedral(), w.canonical_dihedral());
        prop_assert_eq!(w.canonical().canonical(), w.canonical());
    }
}
