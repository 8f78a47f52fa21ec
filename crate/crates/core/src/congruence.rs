//! Congruences on finite biquandles: closure by union-find, identity
//! instantiation, and quotients.

use std::fmt;

use crate::biquandle::FiniteBiquandle;
use crate::error::{Error, Result};
use crate::report::{first_violation, PropertyReport};
use crate::table::OperationTable;

#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    /// Returns `true` if two distinct classes were merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    /// Classes, each sorted, ordered by least element.
    pub fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: Vec<Option<usize>> = vec![None; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            let r = self.find(x);
            match by_root[r] {
                Some(i) => out[i].push(x),
                None => {
                    by_root[r] = Some(out.len());
                    out.push(vec![x]);
                }
            }
        }
        out
    }
}

/// A partition of `{0..n}`, stored as a class label per element. Classes are
/// numbered in order of their least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Congruence {
    labels: Vec<usize>,
}

impl Congruence {
    fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        let mut sorted: Vec<Vec<usize>> = classes.to_vec();
        for c in &mut sorted {
            c.sort_unstable();
        }
        sorted.retain(|c| !c.is_empty());
        sorted.sort();
        for (i, c) in sorted.iter().enumerate() {
            for &x in c {
                if x >= n || labels[x] != usize::MAX {
                    return Err(Error::format("classes do not partition the carrier"));
                }
                labels[x] = i;
            }
        }
        if labels.contains(&usize::MAX) {
            return Err(Error::format("classes do not cover the carrier"));
        }
        Ok(Congruence { labels })
    }

    /// Validates that `classes` partition `x` and are compatible with both
    /// operations.
    pub fn new(x: &FiniteBiquandle, classes: &[Vec<usize>]) -> Result<Self> {
        let c = Congruence::from_classes(x.order(), classes)?;
        let r = c.compatibility_report(x);
        if !r.holds {
            return Err(Error::NotACongruence(r));
        }
        Ok(c)
    }

    pub fn discrete(n: usize) -> Self {
        Congruence {
            labels: (0..n).collect(),
        }
    }

    pub fn total(n: usize) -> Self {
        Congruence { labels: vec![0; n] }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.labels[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn class_count(&self) -> usize {
        self.labels.iter().max().map_or(0, |m| m + 1)
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.labels[a] == self.labels[b]
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_count()];
        for (x, &l) in self.labels.iter().enumerate() {
            out[l].push(x);
        }
        out
    }

    /// Whether every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Congruence) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| !self.related(a, b) || other.related(a, b)))
    }

    /// Witness `(x, y, z, w)` with `x~y`, `z~w` and `x⊻z ≁ y⊻w` or
    /// `x⊼z ≁ y⊼w`.
    pub fn compatibility_report(&self, x: &FiniteBiquandle) -> PropertyReport {
        let n = self.order();
        // one-sided compatibility suffices for an equivalence; use it as a
        // fast path before searching for the least 4-tuple witness
        let fast = (0..n).all(|a| {
            (0..n).all(|c| {
                let r = self.labels[a];
                (0..n).filter(|&b| self.labels[b] == r).all(|b| {
                    self.related(x.under(a, c), x.under(b, c))
                        && self.related(x.over(a, c), x.over(b, c))
                        && self.related(x.under(c, a), x.under(c, b))
                        && self.related(x.over(c, a), x.over(c, b))
                })
            })
        });
        if fast {
            return PropertyReport::pass("congruence");
        }
        let v = first_violation(n, 4, |t| {
            let (a, b, c, d) = (t[0], t[1], t[2], t[3]);
            !self.related(a, b)
                || !self.related(c, d)
                || (self.related(x.under(a, c), x.under(b, d)) && self.related(x.over(a, c), x.over(b, d)))
        });
        PropertyReport::from_violation("congruence", v)
    }
}

impl fmt::Display for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .classes()
            .iter()
            .map(|c| {
                let s: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
                format!("{{{}}}", s.join(","))
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Smallest congruence containing `pairs`.
pub fn congruence_closure(x: &FiniteBiquandle, pairs: &[(usize, usize)]) -> Congruence {
    let n = x.order();
    let mut uf = UnionFind::new(n);
    let mut work: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in pairs {
        if uf.union(a, b) {
            work.push((a, b));
        }
    }
    while let Some((a, b)) = work.pop() {
        for c in 0..n {
            for (p, q) in [
                (x.under(a, c), x.under(b, c)),
                (x.over(a, c), x.over(b, c)),
                (x.under(c, a), x.under(c, b)),
                (x.over(c, a), x.over(c, b)),
            ] {
                if uf.union(p, q) {
                    work.push((p, q));
                }
            }
        }
    }
    let classes = uf.classes();
    let c = Congruence::from_classes(n, &classes).expect("union-find classes partition");
    debug_assert!(c.compatibility_report(x).holds);
    c
}

/// A term in the two biquandle operations over variables `x0, x1, …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(usize),
    Under(Box<Term>, Box<Term>),
    Over(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(i: usize) -> Term {
        Term::Var(i)
    }

    pub fn under(self, rhs: Term) -> Term {
        Term::Under(Box::new(self), Box::new(rhs))
    }

    pub fn over(self, rhs: Term) -> Term {
        Term::Over(Box::new(self), Box::new(rhs))
    }

    pub fn max_var(&self) -> Option<usize> {
        match self {
            Term::Var(i) => Some(*i),
            Term::Under(a, b) | Term::Over(a, b) => a.max_var().max(b.max_var()),
        }
    }

    pub fn eval(&self, x: &FiniteBiquandle, env: &[usize]) -> usize {
        match self {
            Term::Var(i) => env[*i],
            Term::Under(a, b) => x.under(a.eval(x, env), b.eval(x, env)),
            Term::Over(a, b) => x.over(a.eval(x, env), b.eval(x, env)),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(i) => write!(f, "x{i}"),
            Term::Under(a, b) => write!(f, "({a} ⊻ {b})"),
            Term::Over(a, b) => write!(f, "({a} ⊼ {b})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Identity {
    pub lhs: Term,
    pub rhs: Term,
    pub vars: usize,
}

impl Identity {
    pub fn new(lhs: Term, rhs: Term, vars: usize) -> Result<Self> {
        let used = lhs.max_var().max(rhs.max_var());
        if used.is_some_and(|m| m >= vars) {
            return Err(Error::format(format!(
                "identity uses variable x{} but declares {vars}",
                used.unwrap()
            )));
        }
        Ok(Identity { lhs, rhs, vars })
    }

    pub fn holds_in(&self, x: &FiniteBiquandle) -> bool {
        let mut ok = true;
        for_each_assignment(x.order(), self.vars, |env| {
            ok = self.lhs.eval(x, env) == self.rhs.eval(x, env);
            ok
        });
        ok
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

fn for_each_assignment(n: usize, vars: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    if n == 0 && vars > 0 {
        return;
    }
    let mut env = vec![0; vars];
    loop {
        if !visit(&env) {
            return;
        }
        let mut i = vars;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            env[i] += 1;
            if env[i] < n {
                break;
            }
            env[i] = 0;
        }
    }
}

/// The four identities defining 2-reductivity.
pub fn two_reductive_identities() -> Vec<Identity> {
    let (a, b, c) = (Term::var(0), Term::var(1), Term::var(2));
    vec![
        Identity::new(a.clone().under(b.clone().under(c.clone())), a.clone().under(b.clone()), 3),
        Identity::new(a.clone().over(b.clone().over(c.clone())), a.clone().over(b.clone()), 3),
        Identity::new(a.clone().under(b.clone().over(c.clone())), a.clone().under(b.clone()), 3),
        Identity::new(a.clone().over(b.clone().under(c)), a.over(b), 3),
    ]
    .into_iter()
    .map(|r| r.expect("well-formed"))
    .collect()
}

/// All pairs `(p(env), q(env))` over every assignment, sorted and deduplicated.
pub fn instantiate_identities(x: &FiniteBiquandle, ids: &[Identity]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for id in ids {
        for_each_assignment(x.order(), id.vars, |env| {
            out.push((id.lhs.eval(x, env), id.rhs.eval(x, env)));
            true
        });
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// `X/∼` with classes relabelled in order of least element, together with the
/// projection `X → X/∼`.
pub fn quotient_biquandle(x: &FiniteBiquandle, c: &Congruence) -> Result<(FiniteBiquandle, Vec<usize>)> {
    if c.order() != x.order() {
        return Err(Error::OrderMismatch {
            left: x.order(),
            right: c.order(),
        });
    }
    let r = c.compatibility_report(x);
    if !r.holds {
        return Err(Error::NotACongruence(r));
    }
    let k = c.class_count();
    let mut under = vec![vec![usize::MAX; k]; k];
    let mut over = vec![vec![usize::MAX; k]; k];
    for a in 0..x.order() {
        for b in 0..x.order() {
            let (i, j) = (c.class_of(a), c.class_of(b));
            for (t, v) in [(&mut under, c.class_of(x.under(a, b))), (&mut over, c.class_of(x.over(a, b)))] {
                if t[i][j] == usize::MAX {
                    t[i][j] = v;
                } else if t[i][j] != v {
                    return Err(Error::Internal(format!(
                        "quotient operation not well defined on classes {} and {}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
    }
    let q = FiniteBiquandle::new_checked(
        OperationTable::from_rows(&under)?,
        OperationTable::from_rows(&over)?,
        "quotient",
    )?;
    Ok((q, c.labels().to_vec()))
}

/// The congruence `γ_X` generated by the 2-reductivity identities.
pub fn gamma(x: &FiniteBiquandle) -> Congruence {
    congruence_closure(x, &instantiate_identities(x, &two_reductive_identities()))
}

/// `X/γ_X` and its projection.
pub fn two_reductive_quotient(x: &FiniteBiquandle) -> Result<(FiniteBiquandle, Vec<usize>)> {
    let (q, p) = quotient_biquandle(x, &gamma(x))?;
    if !q.is_two_reductive() {
        return Err(Error::Internal("quotient by γ is not 2-reductive".into()));
    }
    Ok((q, p))
}
