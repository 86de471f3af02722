//! The four-valent plane map of a knot diagram.
//!
//! Crossings are vertices and arcs are edges. Walking along the knot meets
//! positions `0..2n` in code order; arc `i` runs from position `i` to
//! position `i + 1`, so its `a` end is an out-port and its `b` end an
//! in-port.

use thiserror::Error;

use crate::codec::{GaussEntry, Sign, SignedGaussCode, Strand};
use crate::graph::{MultiGraph, PlaneGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("code is not realizable on the sphere: {faces} faces, expected {expected}")]
    NonRealizable { faces: usize, expected: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Port {
    UnderIn,
    OverIn,
    UnderOut,
    OverOut,
}

/// Corner classes by the pair of ports bounding them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CornerKind {
    /// under-in and over-in
    A,
    /// over-in and under-out
    B,
    /// under-out and over-out
    C,
    /// over-out and under-in
    D,
}

impl CornerKind {
    fn of(p: Port, q: Port) -> CornerKind {
        use Port::*;
        match (p, q) {
            (UnderIn, OverIn) | (OverIn, UnderIn) => CornerKind::A,
            (OverIn, UnderOut) | (UnderOut, OverIn) => CornerKind::B,
            (UnderOut, OverOut) | (OverOut, UnderOut) => CornerKind::C,
            (OverOut, UnderIn) | (UnderIn, OverOut) => CornerKind::D,
            _ => unreachable!("opposite ports never share a corner"),
        }
    }

    /// Corners the oriented splice joins into one region.
    pub fn merged_by_splice(self) -> bool {
        matches!(self, CornerKind::A | CornerKind::C)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Corner {
    pub crossing: usize,
    /// Index `k` in the rotation: the corner lies between rotation slots
    /// `k` and `k + 1`.
    pub slot: usize,
    pub kind: CornerKind,
    pub face: usize,
}

/// Counterclockwise port order at a crossing of the given sign.
pub fn port_order(sign: Sign) -> [Port; 4] {
    use Port::*;
    match sign {
        Sign::Plus => [UnderIn, OverIn, UnderOut, OverOut],
        Sign::Minus => [OverIn, UnderIn, OverOut, UnderOut],
    }
}

#[derive(Debug, Clone)]
pub struct KnotDiagram {
    code: SignedGaussCode,
    signs: Vec<Sign>,
    over_pos: Vec<usize>,
    under_pos: Vec<usize>,
    map: PlaneGraph,
    faces: Vec<Vec<usize>>,
    face_of: Vec<usize>,
}

impl KnotDiagram {
    pub fn from_gauss(code: &SignedGaussCode) -> Result<Self, DiagramError> {
        let code = code.canonical();
        let entries = code.entries();
        let len = entries.len();
        let n = len / 2;
        let mut signs = vec![Sign::Plus; n];
        let mut over_pos = vec![0; n];
        let mut under_pos = vec![0; n];
        for (p, e) in entries.iter().enumerate() {
            let c = e.label as usize - 1;
            signs[c] = e.sign;
            match e.strand {
                Strand::Over => over_pos[c] = p,
                Strand::Under => under_pos[c] = p,
            }
        }
        let edges =
            (0..len).map(|i| (entries[i].label as usize - 1, entries[(i + 1) % len].label as usize - 1)).collect();
        let graph = MultiGraph::new(n, edges).expect("labels are crossing indices");
        let rotation = (0..n)
            .map(|c| port_order(signs[c]).iter().map(|&p| port_dart_raw(len, over_pos[c], under_pos[c], p)).collect())
            .collect();
        let map = PlaneGraph::new(graph, rotation).expect("each arc end sits at exactly one port");
        let faces = map.trace_faces();
        let (face_of, count) = map.face_of_dart();
        if count != n + 2 {
            return Err(DiagramError::NonRealizable { faces: count, expected: n + 2 });
        }
        Ok(Self { code, signs, over_pos, under_pos, map, faces, face_of })
    }

    /// Canonically relabelled code this diagram was built from.
    pub fn code(&self) -> &SignedGaussCode {
        &self.code
    }

    pub fn crossing_count(&self) -> usize {
        self.signs.len()
    }

    /// Number of positions (and arcs) along the knot, `2n`.
    pub fn len(&self) -> usize {
        2 * self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn sign(&self, c: usize) -> Sign {
        self.signs[c]
    }

    pub fn entry(&self, p: usize) -> GaussEntry {
        self.code.entries()[p]
    }

    /// Crossing met at position `p`.
    pub fn crossing_at(&self, p: usize) -> usize {
        self.entry(p).label as usize - 1
    }

    pub fn strand_at(&self, p: usize) -> Strand {
        self.entry(p).strand
    }

    pub fn over_position(&self, c: usize) -> usize {
        self.over_pos[c]
    }

    pub fn under_position(&self, c: usize) -> usize {
        self.under_pos[c]
    }

    pub fn map(&self) -> &PlaneGraph {
        &self.map
    }

    /// Dart of the arc end plugged into `port` of crossing `c`.
    pub fn port_dart(&self, c: usize, port: Port) -> usize {
        port_dart_raw(self.len(), self.over_pos[c], self.under_pos[c], port)
    }

    /// Facial walks as dart sequences.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn face_of_dart(&self, d: usize) -> usize {
        self.face_of[d]
    }

    /// The four corners of crossing `c` in rotation order.
    pub fn corners(&self, c: usize) -> [Corner; 4] {
        let ports = port_order(self.signs[c]);
        let rot = self.map.rotation(c);
        std::array::from_fn(|k| Corner {
            crossing: c,
            slot: k,
            kind: CornerKind::of(ports[k], ports[(k + 1) % 4]),
            face: self.face_of[rot[(k + 1) % 4]],
        })
    }

    pub fn corner(&self, c: usize, kind: CornerKind) -> Corner {
        *self.corners(c).iter().find(|k| k.kind == kind).expect("every kind occurs once")
    }

    /// The diagram with every crossing changed into its mirror.
    pub fn mirror(&self) -> KnotDiagram {
        KnotDiagram::from_gauss(&self.code.mirror()).expect("mirroring preserves realizability")
    }

    pub fn is_alternating(&self) -> bool {
        let len = self.len();
        (0..len).all(|p| self.strand_at(p) != self.strand_at((p + 1) % len))
    }

    /// Chords `a` and `b` interleave when exactly one end of `b` lies
    /// strictly between the ends of `a`.
    pub fn interleaved(&self, a: usize, b: usize) -> bool {
        let (lo, hi) = minmax(self.over_pos[a], self.under_pos[a]);
        let inside = |p: usize| lo < p && p < hi;
        inside(self.over_pos[b]) != inside(self.under_pos[b])
    }

    /// No nugatory crossing: every chord interleaves some other chord.
    pub fn is_reduced(&self) -> bool {
        let n = self.crossing_count();
        (0..n).all(|a| (0..n).any(|b| b != a && self.interleaved(a, b)))
    }
}

fn minmax(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn port_dart_raw(len: usize, over: usize, under: usize, port: Port) -> usize {
    match port {
        Port::OverOut => 2 * over,
        Port::UnderOut => 2 * under,
        Port::OverIn => 2 * ((over + len - 1) % len) + 1,
        Port::UnderIn => 2 * ((under + len - 1) % len) + 1,
    }
}

/// Find crossing signs that make an unsigned sequence of crossings
/// realizable. Crossings are signed in order of first appearance; the first
/// one is fixed to `+`, the remaining choices are searched exhaustively in
/// lexicographic order (`+` first).
pub fn realize_signs(strands: &[(u32, Strand)]) -> Option<SignedGaussCode> {
    let mut labels: Vec<u32> = Vec::new();
    for &(l, _) in strands {
        if !labels.contains(&l) {
            labels.push(l);
        }
    }
    let free = labels.len().saturating_sub(1);
    if free >= 24 {
        return None;
    }
    for mask in 0u32..(1u32 << free) {
        let sign_of = |l: u32| {
            let i = labels.iter().position(|&x| x == l).unwrap();
            if i > 0 && mask >> (free - i) & 1 == 1 {
                Sign::Minus
            } else {
                Sign::Plus
            }
        };
        let entries =
            strands.iter().map(|&(label, strand)| GaussEntry { label, strand, sign: sign_of(label) }).collect();
        let Ok(code) = SignedGaussCode::new(entries) else {
            return None;
        };
        if KnotDiagram::from_gauss(&code).is_ok() {
            return Some(code);
        }
    }
    None
}
