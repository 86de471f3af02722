//! Text formats: signed Gauss codes, graph JSON and DOT, census CSV.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{MultiGraph, PlaneGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Strand {
    Over,
    Under,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GaussEntry {
    pub label: u32,
    pub strand: Strand,
    pub sign: Sign,
}

impl fmt::Display for GaussEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.strand {
            Strand::Over => 'O',
            Strand::Under => 'U',
        };
        let sign = match self.sign {
            Sign::Plus => '+',
            Sign::Minus => '-',
        };
        write!(f, "{s}{}{sign}", self.label)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("token {index}: cannot parse {token:?} (expected O<label>+ style)")]
    Syntax { index: usize, token: String },
    #[error("empty code")]
    Empty,
    #[error("token {index}: label {label} appears {count} times")]
    LabelCount { index: usize, label: u32, count: usize },
    #[error("token {index}: label {label} has two {strand} entries")]
    RepeatedStrand { index: usize, label: u32, strand: &'static str },
    #[error("token {index}: label {label} carries both signs")]
    InconsistentSign { index: usize, label: u32 },
    #[error("graph JSON: {0}")]
    Json(String),
}

/// A knot diagram as the sequence of crossings met along the knot.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedGaussCode {
    entries: Vec<GaussEntry>,
}

impl SignedGaussCode {
    pub fn new(entries: Vec<GaussEntry>) -> Result<Self, CodecError> {
        if entries.is_empty() {
            return Err(CodecError::Empty);
        }
        // (first index, over seen, under seen, sign, count)
        let mut seen: BTreeMap<u32, (usize, bool, bool, Sign, usize)> = BTreeMap::new();
        for (i, e) in entries.iter().enumerate() {
            let slot = seen.entry(e.label).or_insert((i, false, false, e.sign, 0));
            slot.4 += 1;
            if slot.4 > 2 {
                return Err(CodecError::LabelCount { index: i, label: e.label, count: slot.4 });
            }
            let (flag, name) = match e.strand {
                Strand::Over => (&mut slot.1, "over"),
                Strand::Under => (&mut slot.2, "under"),
            };
            if *flag {
                return Err(CodecError::RepeatedStrand { index: i, label: e.label, strand: name });
            }
            *flag = true;
            if slot.3 != e.sign {
                return Err(CodecError::InconsistentSign { index: i, label: e.label });
            }
        }
        if let Some((&label, &(index, ..))) = seen.iter().find(|(_, s)| s.4 != 2) {
            return Err(CodecError::LabelCount { index, label, count: 1 });
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[GaussEntry] {
        &self.entries
    }

    /// Number of crossings.
    pub fn crossing_count(&self) -> usize {
        self.entries.len() / 2
    }

    /// Relabel crossings 1, 2, ... in order of first appearance.
    pub fn canonical(&self) -> Self {
        let mut map: BTreeMap<u32, u32> = BTreeMap::new();
        let entries = self
            .entries
            .iter()
            .map(|e| {
                let next = map.len() as u32 + 1;
                let label = *map.entry(e.label).or_insert(next);
                GaussEntry { label, ..*e }
            })
            .collect();
        Self { entries }
    }

    /// Every crossing sign flipped.
    pub fn mirror(&self) -> Self {
        let entries = self.entries.iter().map(|e| GaussEntry { sign: e.sign.flipped(), ..*e }).collect();
        Self { entries }
    }
}

impl fmt::Display for SignedGaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

fn parse_token(index: usize, tok: &str) -> Result<GaussEntry, CodecError> {
    let bad = || CodecError::Syntax { index, token: tok.to_string() };
    let bytes = tok.as_bytes();
    if bytes.len() < 3 {
        return Err(bad());
    }
    let strand = match bytes[0] {
        b'O' => Strand::Over,
        b'U' => Strand::Under,
        _ => return Err(bad()),
    };
    let sign = match bytes[bytes.len() - 1] {
        b'+' => Sign::Plus,
        b'-' => Sign::Minus,
        _ => return Err(bad()),
    };
    let digits = &tok[1..tok.len() - 1];
    if !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let label: u32 = digits.parse().map_err(|_| bad())?;
    if label == 0 {
        return Err(bad());
    }
    Ok(GaussEntry { label, strand, sign })
}

/// Parse whitespace separated `O3+` / `U3-` tokens. Labels are kept as
/// written; use [`SignedGaussCode::canonical`] to renumber.
pub fn parse_gauss(text: &str) -> Result<SignedGaussCode, CodecError> {
    let entries = text.split_whitespace().enumerate().map(|(i, t)| parse_token(i, t)).collect::<Result<Vec<_>, _>>()?;
    SignedGaussCode::new(entries)
}

/// Canonical text form: labels renumbered by first appearance.
pub fn serialize_gauss(code: &SignedGaussCode) -> String {
    code.canonical().to_string()
}

#[derive(Debug, Serialize, Deserialize)]
struct EdgeJson {
    id: usize,
    u: usize,
    v: usize,
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<usize>,
    edges: Vec<EdgeJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rotations: Option<BTreeMap<String, Vec<String>>>,
}

fn dart_name(d: usize) -> String {
    format!("{}{}", d / 2, if d % 2 == 0 { 'a' } else { 'b' })
}

fn graph_json(g: &MultiGraph, rotations: Option<&PlaneGraph>) -> GraphJson {
    GraphJson {
        vertices: (0..g.vertex_count()).collect(),
        edges: g.edges().iter().enumerate().map(|(id, &(u, v))| EdgeJson { id, u, v }).collect(),
        rotations: rotations.map(|p| {
            (0..p.vertex_count())
                .map(|v| (v.to_string(), p.rotation(v).iter().map(|&d| dart_name(d)).collect()))
                .collect()
        }),
    }
}

pub fn graph_to_json(g: &MultiGraph) -> String {
    serde_json::to_string(&graph_json(g, None)).expect("plain data serializes")
}

pub fn plane_graph_to_json(p: &PlaneGraph) -> String {
    serde_json::to_string(&graph_json(p.graph(), Some(p))).expect("plain data serializes")
}

pub fn graph_to_dot(g: &MultiGraph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.vertex_count() {
        out.push_str(&format!("  {v};\n"));
    }
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        out.push_str(&format!("  {u} -- {v} [label=\"e{id}\"];\n"));
    }
    out.push_str("}\n");
    out
}

/// A graph read from JSON: plane when a rotation map is present.
#[derive(Debug, Clone)]
pub enum ParsedGraph {
    Abstract(MultiGraph),
    Plane(PlaneGraph),
}

/// Read the graph JSON schema. Vertex and edge ids may be arbitrary; they are
/// renumbered in the order listed.
pub fn parse_graph_json(text: &str) -> Result<ParsedGraph, CodecError> {
    let raw: GraphJson = serde_json::from_str(text).map_err(|e| CodecError::Json(e.to_string()))?;
    let vmap: BTreeMap<usize, usize> = raw.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    if vmap.len() != raw.vertices.len() {
        return Err(CodecError::Json("duplicate vertex id".into()));
    }
    let emap: BTreeMap<usize, usize> = raw.edges.iter().enumerate().map(|(i, e)| (e.id, i)).collect();
    if emap.len() != raw.edges.len() {
        return Err(CodecError::Json("duplicate edge id".into()));
    }
    let lookup = |v: usize| vmap.get(&v).copied().ok_or_else(|| CodecError::Json(format!("unknown vertex {v}")));
    let edges = raw.edges.iter().map(|e| Ok((lookup(e.u)?, lookup(e.v)?))).collect::<Result<Vec<_>, CodecError>>()?;
    let g = MultiGraph::new(raw.vertices.len(), edges).map_err(|e| CodecError::Json(e.to_string()))?;
    let Some(rot) = raw.rotations else {
        return Ok(ParsedGraph::Abstract(g));
    };
    let mut rotation = vec![Vec::new(); g.vertex_count()];
    for (key, ends) in rot {
        let v = key.parse::<usize>().map_err(|_| CodecError::Json(format!("bad vertex key {key:?}")))?;
        let v = lookup(v)?;
        for end in ends {
            let (num, side) = end.split_at(end.len().saturating_sub(1));
            let id: usize = num.parse().map_err(|_| CodecError::Json(format!("bad edge end {end:?}")))?;
            let e = *emap.get(&id).ok_or_else(|| CodecError::Json(format!("unknown edge {id}")))?;
            let d = match side {
                "a" => 2 * e,
                "b" => 2 * e + 1,
                _ => return Err(CodecError::Json(format!("bad edge end {end:?}"))),
            };
            rotation[v].push(d);
        }
    }
    PlaneGraph::new(g, rotation).map(ParsedGraph::Plane).map_err(|e| CodecError::Json(e.to_string()))
}

/// One row of the census CSV.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub generator_id: usize,
    pub v: usize,
    pub e: usize,
    pub genus: usize,
    pub three_connected: bool,
    pub classes: usize,
    pub n: usize,
    pub count: String,
}

pub const CENSUS_HEADER: &str = "generator_id,v,e,genus,three_connected,classes,n,count";

pub fn census_csv(rows: &[CensusRow]) -> String {
    let mut out = String::from(CENSUS_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.generator_id, r.v, r.e, r.genus, r.three_connected, r.classes, r.n, r.count
        ));
    }
    out
}
