use std::collections::HashMap;

use super::gauss::{GaussCode, Passage, Sign};
use crate::congruence::UnionFind;

/// A crossing with its four incident semiarcs. Semiarc `i` runs from passage
/// `i` to passage `i + 1` (indices mod `2n`), so at passage `p` the incoming
/// semiarc is `p - 1` and the outgoing one is `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub label: usize,
    pub sign: Sign,
    pub under_in: usize,
    pub under_out: usize,
    pub over_in: usize,
    pub over_out: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotDiagram {
    code: GaussCode,
    crossings: Vec<Crossing>,
    semiarcs: usize,
    arc_of: Vec<usize>,
    arcs: usize,
}

impl KnotDiagram {
    pub fn new(code: &GaussCode) -> KnotDiagram {
        let m = code.len();
        if m == 0 {
            return KnotDiagram {
                code: code.clone(),
                crossings: vec![],
                semiarcs: 1,
                arc_of: vec![0],
                arcs: 1,
            };
        }
        let prev = |p: usize| (p + m - 1) % m;
        let mut order: Vec<usize> = Vec::new();
        let mut under_at: HashMap<usize, usize> = HashMap::new();
        let mut over_at: HashMap<usize, usize> = HashMap::new();
        let mut sign_of: HashMap<usize, Sign> = HashMap::new();
        for (p, t) in code.tokens().iter().enumerate() {
            if let std::collections::hash_map::Entry::Vacant(e) = sign_of.entry(t.label) {
                order.push(t.label);
                e.insert(t.sign);
            }
            match t.passage {
                Passage::Under => under_at.insert(t.label, p),
                Passage::Over => over_at.insert(t.label, p),
            };
        }
        let crossings: Vec<Crossing> = order
            .iter()
            .map(|&label| {
                let (pu, po) = (under_at[&label], over_at[&label]);
                Crossing {
                    label,
                    sign: sign_of[&label],
                    under_in: prev(pu),
                    under_out: pu,
                    over_in: prev(po),
                    over_out: po,
                }
            })
            .collect();
        let mut uf = UnionFind::new(m);
        for c in &crossings {
            uf.union(c.over_in, c.over_out);
        }
        let classes = uf.classes();
        let mut arc_of = vec![0; m];
        for (i, class) in classes.iter().enumerate() {
            for &s in class {
                arc_of[s] = i;
            }
        }
        KnotDiagram {
            code: code.clone(),
            crossings,
            semiarcs: m,
            arc_of,
            arcs: classes.len(),
        }
    }

    pub fn code(&self) -> &GaussCode {
        &self.code
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn semiarc_count(&self) -> usize {
        self.semiarcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs
    }

    /// Arc containing each semiarc; arcs are numbered by least semiarc.
    pub fn arc_of(&self, semiarc: usize) -> usize {
        self.arc_of[semiarc]
    }

    /// Number of faces of the cellular embedding given by the crossing
    /// rotations. Half-edge `2i` is the tail of semiarc `i`, `2i + 1` its
    /// head.
    pub fn face_count(&self) -> usize {
        let m = self.semiarcs;
        if self.crossings.is_empty() {
            return 2;
        }
        let head = |s: usize| 2 * s + 1;
        let tail = |s: usize| 2 * s;
        let mut next = vec![usize::MAX; 2 * m];
        for c in &self.crossings {
            let (ui, uo, oi, oo) = (head(c.under_in), tail(c.under_out), head(c.over_in), tail(c.over_out));
            // counter-clockwise around the vertex
            let rot = match c.sign {
                Sign::Positive => [oo, uo, oi, ui],
                Sign::Negative => [uo, oo, ui, oi],
            };
            for k in 0..4 {
                next[rot[k]] = rot[(k + 1) % 4];
            }
        }
        let mut seen = vec![false; 2 * m];
        let mut faces = 0;
        for start in 0..2 * m {
            if seen[start] {
                continue;
            }
            faces += 1;
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                h = next[h ^ 1];
            }
        }
        faces
    }

    /// Whether the code is realised by a planar diagram (a classical knot).
    /// Codes failing this describe virtual knots.
    pub fn is_planar(&self) -> bool {
        self.face_count() == self.crossings.len() + 2
    }
}
