//! Coloring counts by backtracking over semiarcs (or arcs) in traversal order
//! with forward propagation through the crossing relations.
//!
//! Both strands of a crossing are read in the same vertical direction, so the
//! pair fed to the operations is (under-in, over-out) at a positive crossing
//! and (under-out, over-in) at a negative one. With that pair `(x, y)` the
//! other end of the under strand is `x⊻y` and the other end of the over strand
//! is `y⊼x`. This is the reading under which the counts survive every
//! Reidemeister I move; see the kink tests.

use rayon::prelude::*;
use serde::Serialize;

use super::diagram::KnotDiagram;
use super::gauss::Sign;
use crate::biquandle::FiniteBiquandle;
use crate::error::Result;
use crate::quandle::FiniteQuandle;
use crate::structures::{classify_structures, BiquandleStructure};
use crate::table::OperationTable;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringCount {
    pub value: usize,
    /// Colorings as assignment vectors (0-based colors), when requested.
    pub colorings: Option<Vec<Vec<usize>>>,
}

/// `vars[out] = tables[op](vars[a], vars[b])`.
#[derive(Clone, Copy, Debug)]
struct Relation {
    out: usize,
    a: usize,
    b: usize,
    op: usize,
}

struct Solver<'a> {
    vars: usize,
    colors: usize,
    tables: Vec<&'a OperationTable>,
    relations: Vec<Relation>,
    watch: Vec<Vec<usize>>,
}

impl<'a> Solver<'a> {
    fn new(vars: usize, colors: usize, tables: Vec<&'a OperationTable>, relations: Vec<Relation>) -> Self {
        let mut watch = vec![Vec::new(); vars];
        for (i, r) in relations.iter().enumerate() {
            watch[r.a].push(i);
            if r.b != r.a {
                watch[r.b].push(i);
            }
        }
        Solver {
            vars,
            colors,
            tables,
            relations,
            watch,
        }
    }

    fn run(&self, list: bool) -> ColoringCount {
        let mut value = 0;
        let mut out = list.then(Vec::new);
        let mut val = vec![usize::MAX; self.vars];
        let mut trail = Vec::with_capacity(self.vars);
        self.dfs(0, &mut val, &mut trail, &mut |c| {
            value += 1;
            if let Some(o) = out.as_mut() {
                o.push(c.to_vec());
            }
        });
        ColoringCount { value, colorings: out }
    }

    fn dfs(&self, from: usize, val: &mut Vec<usize>, trail: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
        let Some(v) = (from..self.vars).find(|&v| val[v] == usize::MAX) else {
            visit(val);
            return;
        };
        for c in 0..self.colors {
            let mark = trail.len();
            val[v] = c;
            trail.push(v);
            if self.propagate(val, trail, mark) {
                self.dfs(v + 1, val, trail, visit);
            }
            while trail.len() > mark {
                let x = trail.pop().unwrap();
                val[x] = usize::MAX;
            }
        }
    }

    fn propagate(&self, val: &mut [usize], trail: &mut Vec<usize>, from: usize) -> bool {
        let mut i = from;
        while i < trail.len() {
            let v = trail[i];
            for &ri in &self.watch[v] {
                let r = self.relations[ri];
                let (a, b) = (val[r.a], val[r.b]);
                if a == usize::MAX || b == usize::MAX {
                    continue;
                }
                let want = self.tables[r.op].get(a, b);
                if val[r.out] == usize::MAX {
                    val[r.out] = want;
                    trail.push(r.out);
                } else if val[r.out] != want {
                    return false;
                }
            }
            i += 1;
        }
        true
    }
}

const UNDER: usize = 0;
const OVER: usize = 1;

/// Semiarc colorings by `z`. Equals the number of biquandle homomorphisms
/// from the fundamental biquandle of the diagram to `z`.
pub fn biquandle_colorings(d: &KnotDiagram, z: &FiniteBiquandle, list: bool) -> ColoringCount {
    let relations = d
        .crossings()
        .iter()
        .flat_map(|c| match c.sign {
            Sign::Positive => [
                Relation { out: c.under_out, a: c.under_in, b: c.over_out, op: UNDER },
                Relation { out: c.over_in, a: c.over_out, b: c.under_in, op: OVER },
            ],
            Sign::Negative => [
                Relation { out: c.under_in, a: c.under_out, b: c.over_in, op: UNDER },
                Relation { out: c.over_out, a: c.over_in, b: c.under_out, op: OVER },
            ],
        })
        .collect();
    Solver::new(d.semiarc_count(), z.order(), vec![z.under_table(), z.over_table()], relations).run(list)
}

/// Arc colorings by `y`.
pub fn quandle_colorings(d: &KnotDiagram, y: &FiniteQuandle, list: bool) -> ColoringCount {
    let relations = d
        .crossings()
        .iter()
        .map(|c| {
            let o = d.arc_of(c.over_in);
            let (i, out) = (d.arc_of(c.under_in), d.arc_of(c.under_out));
            match c.sign {
                Sign::Positive => Relation { out, a: i, b: o, op: 0 },
                Sign::Negative => Relation { out: i, a: out, b: o, op: 0 },
            }
        })
        .collect();
    Solver::new(d.arc_count(), y.order(), vec![y.table()], relations).run(list)
}

/// The structure coloring invariant: for each structure class on `y`, the
/// biquandle coloring count by its induced biquandle.
#[derive(Clone, Debug)]
pub struct StructureInvariant {
    pub entries: Vec<(BiquandleStructure, usize)>,
}

impl StructureInvariant {
    pub fn counts(&self) -> Vec<usize> {
        self.entries.iter().map(|(_, c)| *c).collect()
    }

    /// Counts sorted ascending.
    pub fn multiset(&self) -> Vec<usize> {
        let mut m = self.counts();
        m.sort_unstable();
        m
    }
}

pub fn structure_coloring_invariant(d: &KnotDiagram, y: &FiniteQuandle) -> Result<StructureInvariant> {
    let classes = classify_structures(y)?;
    structure_invariant_for(d, &classes.into_iter().map(|c| (c.representative, c.induced)).collect::<Vec<_>>())
}

/// As [`structure_coloring_invariant`] with the classes precomputed.
pub fn structure_invariant_for(
    d: &KnotDiagram,
    classes: &[(BiquandleStructure, FiniteBiquandle)],
) -> Result<StructureInvariant> {
    let entries = classes
        .par_iter()
        .map(|(s, b)| (s.clone(), biquandle_colorings(d, b, false).value))
        .collect();
    Ok(StructureInvariant { entries })
}
