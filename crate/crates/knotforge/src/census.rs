//! Flat alternating knots from trivalent generators, their generating
//! series and the counting formulas.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::codec::CensusRow;
use crate::diagram::KnotDiagram;
use crate::graph::{are_isomorphic, enumerate_trivalent_planar, is_three_connected, GraphError, PlaneGraph};
use crate::seifert::seifert_graph;
use crate::synthesis::{trivalent_to_flat_knot, SynthesisError};
use crate::tait::{checkerboard, tait_graphs};
use crate::wicks::{diagram_to_word, equivalence_classes, find_bieulerian, is_t2_irreducible, t2_apply, CyclicWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("genus must exceed 1, got {0}")]
    Genus(i64),
    #[error("{0} must be at least 1")]
    NonPositive(&'static str),
    #[error("series of a {size}-chord generator has no member with {n} chords")]
    BelowGenerator { size: usize, n: usize },
    #[error("generator has a parallel triple")]
    Reducible,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Synthesis(#[from] SynthesisError),
}

#[derive(Debug, Clone)]
pub struct CensusRecord {
    pub generator_id: usize,
    pub generator: PlaneGraph,
    pub path: Vec<usize>,
    pub knot: KnotDiagram,
    pub word: CyclicWord,
    pub v: usize,
    pub e: usize,
    pub genus: usize,
    pub three_connected: bool,
    pub classes: usize,
}

impl CensusRecord {
    /// One CSV row per `n` from the knot's crossing count to `n_max`.
    pub fn rows(&self, n_max: usize, strict: bool) -> Vec<CensusRow> {
        let n0 = self.knot.crossing_count();
        (n0..=n_max)
            .map(|n| CensusRow {
                generator_id: self.generator_id,
                v: self.v,
                e: self.e,
                genus: self.genus,
                three_connected: self.three_connected,
                classes: self.classes,
                n,
                count: if strict { series_count_strict(n, n0, self.classes) } else { series_count(n, self.classes) }
                    .to_string(),
            })
            .collect()
    }
}

/// Every trivalent plane graph with at most `v_max` vertices that has a
/// bieulerian path, with the flat knot it builds. Three-connected
/// generators are kept once per isomorphism class.
pub fn enumerate_flat_knots(v_max: usize) -> Result<Vec<CensusRecord>, CensusError> {
    let mut records: Vec<CensusRecord> = Vec::new();
    for g in enumerate_trivalent_planar(v_max)? {
        let Some(path) = find_bieulerian(g.graph()) else {
            continue;
        };
        let three_connected = is_three_connected(g.graph());
        if three_connected
            && records.iter().any(|r| r.three_connected && are_isomorphic(r.generator.graph(), g.graph()))
        {
            continue;
        }
        let knot = trivalent_to_flat_knot(&g, &path)?;
        let word = diagram_to_word(&knot).canonical();
        let (v, e) = (g.vertex_count(), g.edge_count());
        records.push(CensusRecord {
            generator_id: records.len(),
            classes: equivalence_classes(&word).len(),
            genus: (e + 1 - v) / 2,
            generator: g,
            path,
            knot,
            word,
            v,
            e,
            three_connected,
        });
    }
    Ok(records)
}

/// Members of an `n`-crossing series over `d` classes, empty classes
/// allowed: `binom(n + d - 1, d - 1)`.
pub fn series_count(n: usize, d: usize) -> BigUint {
    assert!(d >= 1, "a series has at least one class");
    binomial(BigUint::from(n + d - 1), BigUint::from(d - 1))
}

/// Members with every class kept nonempty, as the move calculus produces
/// them from an `n0`-crossing generator.
pub fn series_count_strict(n: usize, n0: usize, d: usize) -> BigUint {
    if n < n0 {
        return BigUint::zero();
    }
    series_count(n - n0, d)
}

/// `(n + 6g - 4) / (c (6g - 4))`.
pub fn dominance_lower_bound(n: u64, g: u64, c: u64) -> Result<BigRational, CensusError> {
    if g <= 1 {
        return Err(CensusError::Genus(g as i64));
    }
    if c == 0 {
        return Err(CensusError::NonPositive("c"));
    }
    if n == 0 {
        return Err(CensusError::NonPositive("n"));
    }
    let k = 6 * g - 4;
    Ok(BigRational::new((n + k).into(), (c * k).into()))
}

/// All words with `n` chords reachable from `generator` by moves on its own
/// chords, one per diagram up to rotation and reversal.
pub fn t2_expand_series(generator: &CyclicWord, n: usize) -> Result<Vec<CyclicWord>, CensusError> {
    let size = generator.len() / 2;
    if n < size {
        return Err(CensusError::BelowGenerator { size, n });
    }
    if !is_t2_irreducible(generator) {
        return Err(CensusError::Reducible);
    }
    let base = generator.canonical();
    let chords = base.letters();
    let mut level: BTreeMap<CyclicWord, CyclicWord> = BTreeMap::from([(base.canonical_dihedral(), base)]);
    for _ in size..n {
        let mut next = BTreeMap::new();
        for w in level.values() {
            for &x in &chords {
                let grown = t2_apply(w, x).expect("generator chords persist");
                next.entry(grown.canonical_dihedral()).or_insert(grown);
            }
        }
        level = next;
    }
    Ok(level.into_keys().collect())
}

/// Seifert graph isomorphic to one of the two Tait graphs.
pub fn seifert_tait_check(d: &KnotDiagram) -> bool {
    let s = seifert_graph(d);
    let pair = tait_graphs(d, &checkerboard(d));
    are_isomorphic(&s, pair.t.plane.graph()) || are_isomorphic(&s, pair.t_star.plane.graph())
}
