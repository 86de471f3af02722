//! Executable checks over the fixture corpus and enumerated generators.

use crate::census::{enumerate_flat_knots, seifert_tait_check};
use crate::diagram::KnotDiagram;
use crate::fixtures::Fixture;
use crate::graph::{are_isomorphic, blocks_and_cut_vertices, enumerate_trivalent_planar};
use crate::seifert::{canonical_genus, is_flat, seifert_graph, splice_all};
use crate::synthesis::trivalent_to_flat_knot;
use crate::tait::phi_star;
use crate::wicks::{diagram_to_word, find_bieulerian, word_to_surface};

pub const SUITES: [&str; 5] = ["phi-duality", "seifert-tait", "surface-genus", "synthesis", "seifert-structure"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub subject: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(subject: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        CheckResult { subject: subject.into(), pass, detail: detail.into() }
    }
}

/// Diagrams of the corpus with at most `max` crossings.
pub fn corpus(fixtures: &[Fixture], max: usize) -> Vec<(String, bool, KnotDiagram)> {
    fixtures
        .iter()
        .filter(|f| f.code.crossing_count() <= max)
        .map(|f| {
            let d = KnotDiagram::from_gauss(&f.code).unwrap_or_else(|e| panic!("fixture {}: {e}", f.name));
            (f.name.clone(), f.prime, d)
        })
        .collect()
}

/// `None` for an unknown suite name.
pub fn run_suite(name: &str, fixtures: &[Fixture], max: usize) -> Option<Vec<CheckResult>> {
    let diagrams = corpus(fixtures, max);
    let results = match name {
        "phi-duality" => diagrams
            .iter()
            .map(|(name, _, d)| {
                let ok = are_isomorphic(&phi_star(d), &seifert_graph(d));
                CheckResult::new(name, ok, "")
            })
            .collect(),
        "seifert-tait" => {
            let mut out: Vec<CheckResult> = diagrams
                .iter()
                .filter(|(_, _, d)| is_flat(d))
                .map(|(name, _, d)| CheckResult::new(name, seifert_tait_check(d), ""))
                .collect();
            match enumerate_flat_knots(6) {
                Ok(records) => out.extend(records.iter().map(|r| {
                    CheckResult::new(format!("generator{}", r.generator_id), seifert_tait_check(&r.knot), "")
                })),
                Err(e) => out.push(CheckResult::new("generators", false, e.to_string())),
            }
            out
        }
        "surface-genus" => diagrams
            .iter()
            .map(|(name, _, d)| {
                let s = splice_all(d).circle_count();
                match (word_to_surface(&diagram_to_word(d)), canonical_genus(d)) {
                    (Ok((_, sum)), Ok(g)) => CheckResult::new(
                        name,
                        sum.v == s && sum.genus == g,
                        format!("v={} s={} g={}", sum.v, s, sum.genus),
                    ),
                    (a, b) => CheckResult::new(name, false, format!("{:?} {:?}", a.err(), b.err())),
                }
            })
            .collect(),
        "synthesis" => synthesis_results(),
        "seifert-structure" => diagrams
            .iter()
            .map(|(name, prime, d)| {
                let g = seifert_graph(d);
                let flat = is_flat(d);
                let blocks = blocks_and_cut_vertices(&g).expect("Seifert graphs are connected and nonempty");
                let mut ok = g.is_bipartite() && g.is_connected();
                if !flat {
                    ok &= !blocks.cut_vertices.is_empty();
                }
                if *prime && d.is_reduced() {
                    ok &= flat == blocks.is_block();
                }
                CheckResult::new(name, ok, format!("flat={flat} block={}", blocks.is_block()))
            })
            .collect(),
        _ => return None,
    };
    Some(results)
}

fn synthesis_results() -> Vec<CheckResult> {
    let graphs = match enumerate_trivalent_planar(6) {
        Ok(g) => g,
        Err(e) => return vec![CheckResult::new("enumeration", false, e.to_string())],
    };
    let mut out = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        let Some(path) = find_bieulerian(g.graph()) else {
            continue;
        };
        let subject = format!("graph{i}_v{}", g.vertex_count());
        out.push(match trivalent_to_flat_knot(g, &path) {
            Ok(d) => CheckResult::new(subject, is_flat(&d) && d.is_alternating(), format!("n={}", d.crossing_count())),
            Err(e) => CheckResult::new(subject, false, e.to_string()),
        });
    }
    out
}
