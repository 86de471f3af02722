//! Cyclic words of Gauss diagrams: Wicks conditions, the one-face surface a
//! word spells, bieulerian paths, chord patterns and t̄₂ moves.

use std::collections::BTreeMap;
use std::fmt;

use petgraph::unionfind::UnionFind;
use thiserror::Error;

use crate::codec::Strand;
use crate::diagram::KnotDiagram;
use crate::graph::{twin, MultiGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("token {index}: cannot parse {token:?}")]
    Syntax { index: usize, token: String },
    #[error("empty word")]
    Empty,
    #[error("letter {0} does not occur exactly once with each exponent")]
    Unpaired(String),
    #[error("e - v + 1 = {0} is odd")]
    Parity(i64),
    #[error("letter {0} does not occur in the word")]
    Absent(String),
}

/// A letter with exponent `+1` (`inverse == false`) or `-1`. The derived
/// order puts a letter before its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Token {
    pub letter: u32,
    pub inverse: bool,
}

impl Token {
    pub fn new(letter: u32, inverse: bool) -> Self {
        Self { letter, inverse }
    }

    pub fn inv(self) -> Token {
        Token { inverse: !self.inverse, ..self }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", letter_name(self.letter))?;
        if self.inverse {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

pub fn letter_name(letter: u32) -> String {
    format!("a{}", letter + 1)
}

/// A cyclic word; equality of cyclic words is equality of
/// [`CyclicWord::canonical`] forms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord {
    tokens: Vec<Token>,
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.tokens.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

fn parse_word_token(index: usize, tok: &str) -> Result<(&str, bool), WordError> {
    let bad = || WordError::Syntax { index, token: tok.to_string() };
    let (name, inverse) = if let Some(n) = tok.strip_suffix("^-1") {
        (n, true)
    } else if let Some(n) = tok.strip_suffix("⁻¹") {
        (n, true)
    } else if let Some(n) = tok.strip_suffix("^1") {
        (n, false)
    } else {
        (tok, false)
    };
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return Err(bad()),
    }
    if !chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(bad());
    }
    Ok((name, inverse))
}

impl CyclicWord {
    pub fn new(tokens: Vec<Token>) -> Self {
        Self { tokens }
    }

    /// Whitespace separated letters, each optionally followed by `^-1`.
    /// Letter names are arbitrary identifiers, numbered by first
    /// appearance.
    pub fn parse(text: &str) -> Result<Self, WordError> {
        let mut ids: BTreeMap<String, u32> = BTreeMap::new();
        let mut tokens = Vec::new();
        for (i, tok) in text.split_whitespace().enumerate() {
            let (name, inverse) = parse_word_token(i, tok)?;
            let next = ids.len() as u32;
            let letter = *ids.entry(name.to_string()).or_insert(next);
            tokens.push(Token { letter, inverse });
        }
        if tokens.is_empty() {
            return Err(WordError::Empty);
        }
        Ok(Self { tokens })
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Distinct letters in order of first appearance.
    pub fn letters(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for t in &self.tokens {
            if !out.contains(&t.letter) {
                out.push(t.letter);
            }
        }
        out
    }

    /// Positions of `x` and `x^-1`, if both occur exactly once.
    pub fn positions(&self, letter: u32) -> Option<(usize, usize)> {
        let plus: Vec<usize> = (0..self.len()).filter(|&i| self.tokens[i] == Token::new(letter, false)).collect();
        let minus: Vec<usize> = (0..self.len()).filter(|&i| self.tokens[i] == Token::new(letter, true)).collect();
        match (plus.as_slice(), minus.as_slice()) {
            ([p], [m]) => Some((*p, *m)),
            _ => None,
        }
    }

    /// Every letter occurs once with each exponent.
    pub fn is_paired(&self) -> bool {
        self.letters().iter().all(|&x| self.positions(x).is_some())
    }

    /// Reverse the word and invert every letter.
    pub fn inverse(&self) -> CyclicWord {
        CyclicWord { tokens: self.tokens.iter().rev().map(|t| t.inv()).collect() }
    }

    fn renamed(tokens: impl Iterator<Item = Token>) -> Vec<Token> {
        let mut map: BTreeMap<u32, u32> = BTreeMap::new();
        tokens
            .map(|t| {
                let next = map.len() as u32;
                Token { letter: *map.entry(t.letter).or_insert(next), ..t }
            })
            .collect()
    }

    /// Least rotation after renaming letters by first appearance.
    pub fn canonical(&self) -> CyclicWord {
        let len = self.len();
        (0..len)
            .map(|r| Self::renamed((0..len).map(|i| self.tokens[(r + i) % len])))
            .min()
            .map(CyclicWord::new)
            .unwrap_or_else(|| self.clone())
    }

    /// Canonical form up to rotation and inversion of the whole word.
    pub fn canonical_dihedral(&self) -> CyclicWord {
        self.canonical().min(self.inverse().canonical())
    }

    /// Drop both occurrences of a letter.
    pub fn without(&self, letter: u32) -> CyclicWord {
        CyclicWord { tokens: self.tokens.iter().copied().filter(|t| t.letter != letter).collect() }
    }

    fn at(&self, i: usize) -> Token {
        self.tokens[i % self.len()]
    }

    /// All cyclic factors of length two.
    fn factors(&self) -> Vec<(Token, Token)> {
        (0..self.len()).map(|i| (self.at(i), self.at(i + 1))).collect()
    }
}

/// Over passes read as `a_c`, under passes as `a_c^-1`, letters numbered by
/// crossing.
pub fn diagram_to_word(d: &KnotDiagram) -> CyclicWord {
    CyclicWord::new(
        (0..d.len()).map(|p| Token::new(d.crossing_at(p) as u32, d.strand_at(p) == Strand::Under)).collect(),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WicksCondition {
    /// every letter occurs once with each exponent
    I,
    /// no cancelling factor
    II,
    /// no factor `xy` together with `y^-1 x^-1`
    III,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WicksVerdict {
    Valid,
    Violates { condition: WicksCondition, witness: String },
}

impl WicksVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, WicksVerdict::Valid)
    }
}

impl fmt::Display for WicksVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WicksVerdict::Valid => f.write_str("Wicks form"),
            WicksVerdict::Violates { condition, witness } => {
                let c = match condition {
                    WicksCondition::I => "i",
                    WicksCondition::II => "ii",
                    WicksCondition::III => "iii",
                };
                write!(f, "not a Wicks form: violates ({c}) at {witness}")
            }
        }
    }
}

pub fn is_wicks(w: &CyclicWord) -> WicksVerdict {
    for x in w.letters() {
        if w.positions(x).is_none() {
            return WicksVerdict::Violates { condition: WicksCondition::I, witness: letter_name(x) };
        }
    }
    let factors = w.factors();
    if let Some(&(x, y)) = factors.iter().find(|(x, y)| *y == x.inv()) {
        return WicksVerdict::Violates { condition: WicksCondition::II, witness: format!("{x} {y}") };
    }
    for &(x, y) in &factors {
        if factors.contains(&(y.inv(), x.inv())) {
            return WicksVerdict::Violates {
                condition: WicksCondition::III,
                witness: format!("{x} {y} / {} {}", y.inv(), x.inv()),
            };
        }
    }
    WicksVerdict::Valid
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceSummary {
    pub v: usize,
    pub e: usize,
    pub euler: i64,
    pub genus: usize,
    pub orientable: bool,
}

/// Glue the sides of a `2e`-gon labelled `x` and `x^-1`. Returns the graph
/// 𝔾 formed by the glued sides (edge `k` is the `k`-th letter in order of
/// first appearance, directed as the letter reads) and its numbers.
pub fn word_to_surface(w: &CyclicWord) -> Result<(MultiGraph, SurfaceSummary), WordError> {
    if w.is_empty() {
        return Err(WordError::Empty);
    }
    let len = w.len();
    let letters = w.letters();
    let mut uf = UnionFind::<usize>::new(len);
    // polygon corner i sits between sides i - 1 and i
    let mut ends = Vec::with_capacity(letters.len());
    for &x in &letters {
        let (i, j) = w.positions(x).ok_or_else(|| WordError::Unpaired(letter_name(x)))?;
        uf.union(i, (j + 1) % len);
        uf.union((i + 1) % len, j);
        ends.push((i, (i + 1) % len));
    }
    let labels = uf.into_labeling();
    let mut ids = vec![usize::MAX; len];
    let mut v = 0;
    for &l in &labels {
        if ids[l] == usize::MAX {
            ids[l] = v;
            v += 1;
        }
    }
    let edges = ends.iter().map(|&(s, t)| (ids[labels[s]], ids[labels[t]])).collect();
    let e = letters.len();
    let twice_genus = e as i64 - v as i64 + 1;
    if twice_genus % 2 != 0 {
        return Err(WordError::Parity(twice_genus));
    }
    let g = MultiGraph::new(v, edges).expect("corner classes are in range");
    Ok((g, SurfaceSummary { v, e, euler: v as i64 + 1 - e as i64, genus: twice_genus as usize / 2, orientable: true }))
}

/// A closed walk using every dart once and never turning straight back,
/// as a dart sequence starting with dart 0. `None` when none exists.
pub fn find_bieulerian(g: &MultiGraph) -> Option<Vec<usize>> {
    let e = g.edge_count();
    if e == 0 || !g.is_connected() {
        return None;
    }
    if (e as i64 - g.vertex_count() as i64 + 1) % 2 != 0 {
        return None;
    }
    let inc = g.incidence();
    let darts = 2 * e;
    let mut used = vec![false; darts];
    let mut path = vec![0usize];
    used[0] = true;

    fn search(g: &MultiGraph, inc: &[Vec<usize>], used: &mut [bool], path: &mut Vec<usize>, darts: usize) -> bool {
        let last = *path.last().unwrap();
        if path.len() == darts {
            // closing step back onto dart 0 must not reverse
            return g.dart_vertex(twin(last)) == g.dart_vertex(0) && twin(last) != 0;
        }
        let here = g.dart_vertex(twin(last));
        for &next in &inc[here] {
            if used[next] || next == twin(last) {
                continue;
            }
            used[next] = true;
            path.push(next);
            if search(g, inc, used, path, darts) {
                return true;
            }
            path.pop();
            used[next] = false;
        }
        false
    }
    if search(g, &inc, &mut used, &mut path, darts) {
        Some(path)
    } else {
        None
    }
}

/// Whether a dart sequence is a bieulerian path of `g`.
pub fn is_bieulerian(g: &MultiGraph, path: &[usize]) -> bool {
    let darts = 2 * g.edge_count();
    if path.len() != darts || darts == 0 {
        return false;
    }
    let mut seen = vec![false; darts];
    for (k, &d) in path.iter().enumerate() {
        if d >= darts || seen[d] {
            return false;
        }
        seen[d] = true;
        let next = path[(k + 1) % darts];
        if g.dart_vertex(twin(d)) != g.dart_vertex(next) || next == twin(d) {
            return false;
        }
    }
    true
}

/// Read a dart sequence as a word: forward traversal of edge `k` is
/// `a_k`, backward is `a_k^-1`.
pub fn path_word(path: &[usize]) -> CyclicWord {
    CyclicWord::new(path.iter().map(|&d| Token::new((d / 2) as u32, d % 2 == 1)).collect())
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ChordPatterns {
    /// Chords no other chord interleaves.
    pub isolated: Vec<u32>,
    /// Parallel pairs `(x, y)` with `x < y`.
    pub pairs: Vec<(u32, u32)>,
    /// Chains `x - y - z` of two parallel pairs sharing `y`, with `x < z`.
    pub triples: Vec<(u32, u32, u32)>,
}

fn interleave(w: &CyclicWord, a: u32, b: u32) -> bool {
    let (Some((p, q)), Some((r, s))) = (w.positions(a), w.positions(b)) else {
        return false;
    };
    let (lo, hi) = if p < q { (p, q) } else { (q, p) };
    let inside = |x: usize| lo < x && x < hi;
    inside(r) != inside(s)
}

/// Two chords are parallel when `x^e y^d` and `y^-d x^-e` are both cyclic
/// factors: a clasp, read from either strand.
pub fn parallel(w: &CyclicWord, x: u32, y: u32) -> bool {
    if x == y {
        return false;
    }
    let factors = w.factors();
    factors.iter().any(|&(p, q)| {
        ((p.letter == x && q.letter == y) || (p.letter == y && q.letter == x)) && factors.contains(&(q.inv(), p.inv()))
    })
}

pub fn chord_patterns(w: &CyclicWord) -> ChordPatterns {
    let letters = w.letters();
    let isolated =
        letters.iter().copied().filter(|&a| !letters.iter().any(|&b| b != a && interleave(w, a, b))).collect();
    let mut sorted = letters.clone();
    sorted.sort_unstable();
    let mut pairs = Vec::new();
    for (i, &x) in sorted.iter().enumerate() {
        for &y in &sorted[i + 1..] {
            if parallel(w, x, y) {
                pairs.push((x, y));
            }
        }
    }
    let is_pair = |a: u32, b: u32| pairs.contains(&(a.min(b), a.max(b)));
    let mut triples = Vec::new();
    for &y in &sorted {
        for &x in &sorted {
            for &z in &sorted {
                if x < z && x != y && z != y && is_pair(x, y) && is_pair(y, z) {
                    triples.push((x, y, z));
                }
            }
        }
    }
    ChordPatterns { isolated, pairs, triples }
}

/// No parallel triple.
pub fn is_t2_irreducible(w: &CyclicWord) -> bool {
    chord_patterns(w).triples.is_empty()
}

/// Insert a fresh chord `d` parallel to `x`: `x` becomes `x d^-1` and
/// `x^-1` becomes `d x^-1`.
pub fn t2_apply(w: &CyclicWord, x: u32) -> Result<CyclicWord, WordError> {
    if w.positions(x).is_none() {
        return Err(WordError::Absent(letter_name(x)));
    }
    let fresh = w.tokens.iter().map(|t| t.letter).max().unwrap() + 1;
    let d = Token::new(fresh, false);
    let mut tokens = Vec::with_capacity(w.len() + 2);
    for &t in &w.tokens {
        if t == Token::new(x, false) {
            tokens.push(t);
            tokens.push(d.inv());
        } else if t == Token::new(x, true) {
            tokens.push(d);
            tokens.push(t);
        } else {
            tokens.push(t);
        }
    }
    Ok(CyclicWord::new(tokens))
}

/// Adjacent equal exponents, cyclically; zero for the word of an
/// alternating diagram.
pub fn alternation_defects(w: &CyclicWord) -> usize {
    w.factors().iter().filter(|(x, y)| x.inverse == y.inverse).count()
}

/// Remove candidate chords one at a time until none is offered. A deletion
/// inside a parallel family can restore the original chord or its crossing
/// change; the one closest to alternating wins, then the least canonical
/// word.
fn reduce_while(w: &CyclicWord, candidates: impl Fn(&ChordPatterns) -> Vec<u32>) -> CyclicWord {
    let mut current = w.canonical();
    loop {
        let patterns = chord_patterns(&current);
        let mut options = candidates(&patterns);
        options.sort_unstable();
        options.dedup();
        let Some((_, best)) = options
            .iter()
            .map(|&x| {
                let next = current.without(x).canonical();
                (alternation_defects(&next), next)
            })
            .min()
        else {
            return current;
        };
        current = best;
    }
}

/// Delete chords of parallel pairs until no two chords are parallel; the
/// result is the generator of the word's series.
pub fn t2_reduce(w: &CyclicWord) -> CyclicWord {
    reduce_while(w, |p| p.pairs.iter().flat_map(|&(x, y)| [x, y]).collect())
}

/// Delete chords of parallel triples until none is left.
pub fn t2_reduce_triples(w: &CyclicWord) -> CyclicWord {
    reduce_while(w, |p| p.triples.iter().flat_map(|&(x, y, z)| [x, y, z]).collect())
}

/// Classes of the transitive closure of parallelism, each sorted, ordered by
/// least member.
pub fn equivalence_classes(w: &CyclicWord) -> Vec<Vec<u32>> {
    let letters = w.letters();
    let index: BTreeMap<u32, usize> = letters.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let mut uf = UnionFind::<usize>::new(letters.len());
    for (x, y) in chord_patterns(w).pairs {
        uf.union(index[&x], index[&y]);
    }
    let labels = uf.into_labeling();
    let mut classes: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
    for (i, &x) in letters.iter().enumerate() {
        classes.entry(labels[i]).or_default().push(x);
    }
    let mut out: Vec<Vec<u32>> = classes
        .into_values()
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect();
    out.sort();
    out
}
