//! Backtracking search for operation-preserving maps between finite algebras
//! given by one or more binary operation tables.
//!
//! Images are assigned to a generating set of the source in ascending element
//! order; every other image is forced by closure, so solutions come out in
//! lexicographic order of their image vectors.

use crate::table::OperationTable;

/// Closure of `seed` under all `ops`, as a membership vector.
pub(crate) fn closure(ops: &[&OperationTable], seed: &[usize]) -> Vec<bool> {
    let n = ops.first().map_or(0, |t| t.order());
    let mut inside = vec![false; n];
    let mut members = Vec::new();
    for &s in seed {
        if !inside[s] {
            inside[s] = true;
            members.push(s);
        }
    }
    let mut i = 0;
    while i < members.len() {
        let a = members[i];
        let mut j = 0;
        while j <= i {
            let b = members[j];
            for t in ops {
                for c in [t.get(a, b), t.get(b, a)] {
                    if !inside[c] {
                        inside[c] = true;
                        members.push(c);
                    }
                }
            }
            j += 1;
        }
        i += 1;
    }
    inside
}

/// Generators picked greedily in element order: each element not already in
/// the closure of the earlier picks becomes a generator.
pub(crate) fn greedy_generators(ops: &[&OperationTable]) -> Vec<usize> {
    let n = ops.first().map_or(0, |t| t.order());
    let mut gens = Vec::new();
    let mut covered = vec![false; n];
    for x in 0..n {
        if !covered[x] {
            gens.push(x);
            covered = closure(ops, &gens);
        }
    }
    gens
}

type Allowed<'a> = &'a (dyn Fn(usize, usize) -> bool + Sync);

pub(crate) struct HomSearch<'a> {
    src: Vec<&'a OperationTable>,
    dst: Vec<&'a OperationTable>,
    injective: bool,
    allowed: Option<Allowed<'a>>,
    gens: Vec<usize>,
}

impl<'a> HomSearch<'a> {
    pub(crate) fn new(src: Vec<&'a OperationTable>, dst: Vec<&'a OperationTable>) -> Self {
        assert_eq!(src.len(), dst.len(), "signature mismatch");
        let gens = greedy_generators(&src);
        HomSearch {
            src,
            dst,
            injective: false,
            allowed: None,
            gens,
        }
    }

    pub(crate) fn injective(mut self, yes: bool) -> Self {
        self.injective = yes;
        self
    }

    /// Restricts the image of `x` to targets `y` with `allowed(x, y)`.
    pub(crate) fn allowed(mut self, f: Allowed<'a>) -> Self {
        self.allowed = Some(f);
        self
    }

    fn n(&self) -> usize {
        self.src.first().map_or(0, |t| t.order())
    }

    fn m(&self) -> usize {
        self.dst.first().map_or(0, |t| t.order())
    }

    /// Calls `visit` on every hom in lexicographic order until it returns
    /// `false`.
    pub(crate) fn run(&self, mut visit: impl FnMut(&[usize]) -> bool) {
        let n = self.n();
        if n == 0 {
            visit(&[]);
            return;
        }
        if self.m() == 0 {
            return;
        }
        let mut st = State {
            f: vec![usize::MAX; n],
            used: vec![0; self.m()],
            assigned: Vec::with_capacity(n),
        };
        self.dfs(0, &mut st, &mut visit);
    }

    pub(crate) fn collect(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.run(|f| {
            out.push(f.to_vec());
            true
        });
        out
    }

    pub(crate) fn first(&self) -> Option<Vec<usize>> {
        let mut out = None;
        self.run(|f| {
            out = Some(f.to_vec());
            false
        });
        out
    }

    pub(crate) fn count(&self) -> usize {
        let mut c = 0;
        self.run(|_| {
            c += 1;
            true
        });
        c
    }

    fn dfs(&self, gi: usize, st: &mut State, visit: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if gi == self.gens.len() {
            debug_assert!(st.f.iter().all(|&v| v != usize::MAX));
            return visit(&st.f);
        }
        let g = self.gens[gi];
        for y in 0..self.m() {
            let mark = st.assigned.len();
            if self.assign(st, g, y) && self.propagate(st, mark) && !self.dfs(gi + 1, st, visit) {
                st.undo(mark);
                return false;
            }
            st.undo(mark);
        }
        true
    }

    fn assign(&self, st: &mut State, x: usize, y: usize) -> bool {
        if let Some(ok) = self.allowed {
            if !ok(x, y) {
                return false;
            }
        }
        if self.injective && st.used[y] > 0 {
            return false;
        }
        st.f[x] = y;
        st.used[y] += 1;
        st.assigned.push(x);
        true
    }

    /// Forces images for products of assigned elements, starting with those
    /// assigned at index `from` onward. Returns `false` on a contradiction.
    fn propagate(&self, st: &mut State, from: usize) -> bool {
        let mut i = from;
        while i < st.assigned.len() {
            let a = st.assigned[i];
            let mut j = 0;
            while j <= i {
                let b = st.assigned[j];
                for (s, d) in self.src.iter().zip(&self.dst) {
                    for (p, q) in [(a, b), (b, a)] {
                        let c = s.get(p, q);
                        let fc = d.get(st.f[p], st.f[q]);
                        if st.f[c] == usize::MAX {
                            if !self.assign(st, c, fc) {
                                return false;
                            }
                        } else if st.f[c] != fc {
                            return false;
                        }
                    }
                }
                j += 1;
            }
            i += 1;
        }
        true
    }
}

struct State {
    f: Vec<usize>,
    used: Vec<usize>,
    assigned: Vec<usize>,
}

impl State {
    fn undo(&mut self, mark: usize) {
        while self.assigned.len() > mark {
            let x = self.assigned.pop().unwrap();
            self.used[self.f[x]] -= 1;
            self.f[x] = usize::MAX;
        }
    }
}

/// Whether `f` preserves every operation.
pub(crate) fn is_hom(src: &[&OperationTable], dst: &[&OperationTable], f: &[usize]) -> bool {
    let n = f.len();
    src.iter().zip(dst).all(|(s, d)| {
        (0..n).all(|a| (0..n).all(|b| f[s.get(a, b)] == d.get(f[a], f[b])))
    })
}
