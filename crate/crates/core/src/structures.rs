//! Biquandle structures on a quandle: families `{β_y}` of automorphisms
//! satisfying the compatibility and diagonal-bijection conditions.

use rayon::prelude::*;

use crate::biquandle::FiniteBiquandle;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::quandle::FiniteQuandle;
use crate::report::{first_violation, PropertyReport};
use crate::table::{blocks, parse_table_lines, OperationTable};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiquandleStructure {
    base: FiniteQuandle,
    betas: Vec<Permutation>,
}

/// Reports the first failure among: each `β_y` an automorphism (witness
/// `(y, a, b)`), condition (1) (witness `(x, y, z)`, where the two sides
/// differ at `z`), condition (2) (witness `(y, y')`).
pub fn validate_structure(q: &FiniteQuandle, betas: &[Permutation]) -> Result<PropertyReport> {
    let n = q.order();
    if betas.len() != n {
        return Err(Error::format(format!(
            "structure has {} maps for a quandle of order {n}",
            betas.len()
        )));
    }
    if let Some(b) = betas.iter().find(|b| b.degree() != n) {
        return Err(Error::format(format!(
            "map {b} has degree {}, expected {n}",
            b.degree()
        )));
    }
    let v = first_violation(n, 3, |w| {
        let (b, x, y) = (&betas[w[0]], w[1], w[2]);
        b.apply(q.op(x, y)) == q.op(b.apply(x), b.apply(y))
    });
    if v.is_some() {
        return Ok(PropertyReport::from_violation("automorphism", v));
    }
    let v = first_violation(n, 3, |w| {
        let (x, y, z) = (w[0], w[1], w[2]);
        let by = &betas[y];
        let bx = &betas[x];
        let lhs = betas[by.apply(q.op(x, y))].apply(by.apply(z));
        let rhs = betas[bx.apply(y)].apply(bx.apply(z));
        lhs == rhs
    });
    if v.is_some() {
        return Ok(PropertyReport::from_violation("condition (1)", v));
    }
    let v = first_violation(n, 2, |w| w[0] == w[1] || betas[w[0]].apply(w[0]) != betas[w[1]].apply(w[1]));
    Ok(PropertyReport::from_violation("condition (2)", v))
}

impl BiquandleStructure {
    pub fn new(base: FiniteQuandle, betas: Vec<Permutation>) -> Result<Self> {
        let r = validate_structure(&base, &betas)?;
        if !r.holds {
            return Err(Error::InvalidStructure(r));
        }
        Ok(BiquandleStructure { base, betas })
    }

    /// Parses maps written in cycle notation, e.g. `["id", "(12)", "(12)"]`.
    pub fn from_cycles(base: FiniteQuandle, maps: &[&str]) -> Result<Self> {
        let n = base.order();
        let betas = maps
            .iter()
            .map(|m| Permutation::parse_cycles(m, n))
            .collect::<Result<Vec<_>>>()?;
        BiquandleStructure::new(base, betas)
    }

    /// `β_y = f` for every `y`.
    pub fn constant(base: FiniteQuandle, f: Permutation) -> Result<Self> {
        let betas = vec![f; base.order()];
        BiquandleStructure::new(base, betas)
    }

    pub fn base(&self) -> &FiniteQuandle {
        &self.base
    }

    pub fn betas(&self) -> &[Permutation] {
        &self.betas
    }

    pub fn beta(&self, y: usize) -> &Permutation {
        &self.betas[y]
    }

    pub fn order(&self) -> usize {
        self.base.order()
    }

    pub fn is_constant(&self) -> bool {
        self.betas.windows(2).all(|w| w[0] == w[1])
    }

    /// `x⊻y = β_y(x*y)`, `x⊼y = β_y(x)`.
    pub fn induce(&self) -> Result<FiniteBiquandle> {
        let n = self.order();
        let under = OperationTable::from_fn(n, |x, y| self.betas[y].apply(self.base.op(x, y)));
        let over = OperationTable::from_fn(n, |x, y| self.betas[y].apply(x));
        let b = FiniteBiquandle::new_checked(under, over, "induced biquandle")?;
        if b.associated_quandle()? != self.base {
            return Err(Error::Internal(
                "associated quandle of the induced biquandle differs from the base".into(),
            ));
        }
        Ok(b)
    }

    /// The structure `{β_y}` read from the over table of `b`, on its
    /// associated quandle.
    pub fn extract(b: &FiniteBiquandle) -> Result<Self> {
        let base = b.associated_quandle()?;
        let betas = (0..b.order()).map(|y| b.beta(y)).collect();
        BiquandleStructure::new(base, betas)
            .map_err(|e| Error::Internal(format!("extracted family is not a structure: {e}")))
    }

    /// `(id, (12), (12))`.
    pub fn tuple_string(&self) -> String {
        let parts: Vec<String> = self.betas.iter().map(|b| b.to_compact_cycle_string()).collect();
        format!("({})", parts.join(","))
    }

    /// Quandle table block, blank line, then one map per line in cycle
    /// notation.
    pub fn to_text(&self) -> String {
        let mut s = self.base.table().to_text();
        s.push('\n');
        for b in &self.betas {
            s.push_str(&b.to_cycle_string());
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let bl = blocks(text);
        let [table_block, maps] = bl.as_slice() else {
            return Err(Error::format(format!(
                "a structure file has a table block and a map block, found {} blocks",
                bl.len()
            )));
        };
        let (t, rest) = parse_table_lines(table_block)?;
        if let Some(&(ln, _)) = rest.first() {
            return Err(Error::format(format!("line {ln}: trailing data after table")));
        }
        let q = FiniteQuandle::new(t)?;
        let betas = maps
            .iter()
            .map(|&(ln, l)| {
                Permutation::parse_cycles(l, q.order())
                    .map_err(|e| Error::format(format!("line {ln}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        BiquandleStructure::new(q, betas)
    }

    /// Some `φ ∈ Aut(Q)` with `φ∘β_y = β'_{φ(y)}∘φ` for all `y`.
    pub fn direct_equivalence(&self, other: &BiquandleStructure, auts: &[Permutation]) -> Option<Permutation> {
        let n = self.order();
        auts.iter()
            .find(|phi| {
                (0..n).all(|y| phi.compose(&self.betas[y]) == other.betas[phi.apply(y)].compose(phi))
            })
            .cloned()
    }
}

/// All structures on `q`, in lexicographic order of `(β_1, …, β_n)` by
/// permutation images. Only tuples from `Aut(q)^n` are considered.
pub fn enumerate_structures(q: &FiniteQuandle) -> Vec<BiquandleStructure> {
    let auts = q.automorphism_group();
    let n = q.order();
    if n == 0 {
        return vec![BiquandleStructure {
            base: q.clone(),
            betas: vec![],
        }];
    }
    let tuples: Vec<Vec<usize>> = (0..auts.len())
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut cur = vec![first];
            extend(q, &auts, &mut cur, &mut out);
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    tuples
        .into_iter()
        .map(|t| {
            let betas: Vec<Permutation> = t.iter().map(|&i| auts[i].clone()).collect();
            debug_assert!(validate_structure(q, &betas).unwrap().holds);
            BiquandleStructure {
                base: q.clone(),
                betas,
            }
        })
        .collect()
}

/// Checks the constraints that only involve `β_0..β_k` where `k = cur.len()-1`,
/// and at least one index equal to `k`.
fn consistent(q: &FiniteQuandle, auts: &[Permutation], cur: &[usize]) -> bool {
    let k = cur.len() - 1;
    let b = |y: usize| &auts[cur[y]];
    let bk = b(k);
    if (0..k).any(|y| b(y).apply(y) == bk.apply(k)) {
        return false;
    }
    for x in 0..=k {
        for y in 0..=k {
            let i = b(y).apply(q.op(x, y));
            let j = b(x).apply(y);
            if i > k || j > k {
                continue;
            }
            if x != k && y != k && i != k && j != k {
                continue;
            }
            if b(i).compose(b(y)) != b(j).compose(b(x)) {
                return false;
            }
        }
    }
    true
}

fn extend(q: &FiniteQuandle, auts: &[Permutation], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if !consistent(q, auts, cur) {
        return;
    }
    if cur.len() == q.order() {
        out.push(cur.clone());
        return;
    }
    for i in 0..auts.len() {
        cur.push(i);
        extend(q, auts, cur, out);
        cur.pop();
    }
}

#[derive(Clone, Debug)]
pub struct StructureClass {
    /// Lexicographically least structure in the class.
    pub representative: BiquandleStructure,
    pub induced: FiniteBiquandle,
    pub size: usize,
}

/// Groups `structures` (assumed in lexicographic order) by isomorphism of
/// their induced biquandles.
pub fn classify(structures: Vec<BiquandleStructure>) -> Result<Vec<StructureClass>> {
    let mut classes: Vec<StructureClass> = Vec::new();
    for s in structures {
        let b = s.induce()?;
        match classes.iter_mut().find(|c| c.induced.is_isomorphic(&b)) {
            Some(c) => c.size += 1,
            None => classes.push(StructureClass {
                representative: s,
                induced: b,
                size: 1,
            }),
        }
    }
    Ok(classes)
}

/// One representative per isomorphism class of induced biquandles.
pub fn classify_structures(q: &FiniteQuandle) -> Result<Vec<StructureClass>> {
    classify(enumerate_structures(q))
}

/// Classes under `s ≈ s'` iff some `φ ∈ Aut(Q)` has `φ∘β_y = β'_{φ(y)}∘φ`.
/// Returns `(representative, size)`.
pub fn classify_structures_direct(q: &FiniteQuandle) -> Vec<(BiquandleStructure, usize)> {
    let auts = q.automorphism_group();
    let mut classes: Vec<(BiquandleStructure, usize)> = Vec::new();
    for s in enumerate_structures(q) {
        match classes.iter_mut().find(|(r, _)| r.direct_equivalence(&s, &auts).is_some()) {
            Some(c) => c.1 += 1,
            None => classes.push((s, 1)),
        }
    }
    classes
}

/// Number of isomorphism classes of constant structures `β_y = f`.
pub fn count_constant_structures(q: &FiniteQuandle) -> Result<usize> {
    let structures = q
        .automorphism_group()
        .into_iter()
        .map(|f| BiquandleStructure::constant(q.clone(), f))
        .collect::<Result<Vec<_>>>()?;
    Ok(classify(structures)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{trivial_quandle, wada_biquandle};
    use crate::group::FiniteGroup;

    fn q(rows: &[[usize; 3]]) -> FiniteQuandle {
        FiniteQuandle::from_one_based(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn qa() -> FiniteQuandle {
        trivial_quandle(3)
    }
    fn qb() -> FiniteQuandle {
        q(&[[1, 1, 1], [3, 2, 2], [2, 3, 3]])
    }
    fn qc() -> FiniteQuandle {
        q(&[[1, 3, 2], [3, 2, 1], [2, 1, 3]])
    }

    #[test]
    fn validation_examples() {
        assert!(BiquandleStructure::from_cycles(qa(), &["id", "id", "(12)"]).is_ok());
        assert!(BiquandleStructure::from_cycles(qc(), &["(23)", "(13)", "(12)"]).is_ok());
        let err = BiquandleStructure::from_cycles(qb(), &["(123)", "(123)", "(123)"]).unwrap_err();
        match err {
            Error::InvalidStructure(r) => assert_eq!(r.property, "automorphism"),
            e => panic!("unexpected {e}"),
        }
        let n = qa();
        assert!(validate_structure(&n, &[Permutation::identity(3)]).is_err());
    }

    #[test]
    fn swap_structure_induces_expected_tables() {
        let s = BiquandleStructure::from_cycles(trivial_quandle(2), &["(12)", "(12)"]).unwrap();
        let b = s.induce().unwrap();
        assert_eq!(b.under_table().rows_one_based(), vec![vec![2, 2], vec![1, 1]]);
        assert_eq!(b.over_table().rows_one_based(), vec![vec![2, 2], vec![1, 1]]);
    }

    #[test]
    fn round_trips() {
        for base in [qa(), qb(), qc()] {
            for s in enumerate_structures(&base) {
                let b = s.induce().unwrap();
                assert_eq!(BiquandleStructure::extract(&b).unwrap(), s);
                assert_eq!(BiquandleStructure::extract(&b).unwrap().induce().unwrap(), b);
            }
        }
        let w = wada_biquandle(&FiniteGroup::cyclic(3)).unwrap();
        let s = BiquandleStructure::extract(&w).unwrap();
        assert!(s.base().is_isomorphic(&qc()));
    }

    #[test]
    fn small_census() {
        assert_eq!(classify_structures(&trivial_quandle(2)).unwrap().len(), 2);
        assert_eq!(classify_structures(&qa()).unwrap().len(), 5);
        assert_eq!(classify_structures(&qb()).unwrap().len(), 4);
        assert_eq!(classify_structures(&qc()).unwrap().len(), 6);
        assert_eq!(classify_structures(&trivial_quandle(1)).unwrap().len(), 1);
    }

    #[test]
    fn constant_counts() {
        assert_eq!(count_constant_structures(&qa()).unwrap(), 3);
        assert_eq!(count_constant_structures(&qb()).unwrap(), 2);
        assert_eq!(count_constant_structures(&qc()).unwrap(), 3);
    }

    #[test]
    fn text_round_trip() {
        let s = BiquandleStructure::from_cycles(qc(), &["(23)", "(13)", "(12)"]).unwrap();
        let text = s.to_text();
        assert!(text.ends_with("\n(2 3)\n(1 3)\n(1 2)\n"));
        assert_eq!(BiquandleStructure::parse(&text).unwrap(), s);
        assert_eq!(s.tuple_string(), "((23),(13),(12))");
    }
}
