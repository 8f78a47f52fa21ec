use crate::error::{Error, Result};
use crate::perm::{check_group, Permutation};
use crate::report::{first_violation, PropertyReport};
use crate::search::HomSearch;
use crate::table::OperationTable;

/// A finite quandle `(Q, *)` whose axioms have been checked.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteQuandle {
    table: OperationTable,
}

/// Checks idempotence, invertibility of right translations and right
/// self-distributivity, in that order, and reports the first failure.
///
/// Invertibility witnesses are `(x, x', y)` with `x ≠ x'` and `x*y = x'*y`.
pub fn validate_quandle(t: &OperationTable) -> PropertyReport {
    let n = t.order();
    let v = first_violation(n, 1, |w| t.get(w[0], w[0]) == w[0]);
    if v.is_some() {
        return PropertyReport::from_violation("idempotence", v);
    }
    let v = first_violation(n, 3, |w| w[0] == w[1] || t.get(w[0], w[2]) != t.get(w[1], w[2]));
    if v.is_some() {
        return PropertyReport::from_violation("right invertibility", v);
    }
    let v = first_violation(n, 3, |w| {
        let (x, y, z) = (w[0], w[1], w[2]);
        t.get(t.get(x, y), z) == t.get(t.get(x, z), t.get(y, z))
    });
    PropertyReport::from_violation("right self-distributivity", v)
}

impl FiniteQuandle {
    pub fn new(table: OperationTable) -> Result<Self> {
        let r = validate_quandle(&table);
        if !r.holds {
            return Err(Error::NotAQuandle(r));
        }
        Ok(FiniteQuandle { table })
    }

    pub fn from_one_based(rows: &[Vec<usize>]) -> Result<Self> {
        FiniteQuandle::new(OperationTable::from_one_based(rows)?)
    }

    pub(crate) fn new_checked(table: OperationTable, what: &str) -> Result<Self> {
        FiniteQuandle::new(table)
            .map_err(|e| Error::Internal(format!("{what} is not a quandle: {e}")))
    }

    pub fn table(&self) -> &OperationTable {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table.get(x, y)
    }

    /// Right translation `R_y : x ↦ x*y`.
    pub fn right(&self, y: usize) -> Permutation {
        Permutation::from_images_unchecked(self.table.column(y))
    }

    /// `x *⁻¹ y`, the unique `z` with `z*y = x`.
    pub fn op_inv(&self, x: usize, y: usize) -> usize {
        (0..self.order())
            .find(|&z| self.op(z, y) == x)
            .expect("right translations are bijective")
    }

    pub fn is_trivial(&self) -> bool {
        (0..self.order()).all(|x| (0..self.order()).all(|y| self.op(x, y) == x))
    }

    pub fn medial_report(&self) -> PropertyReport {
        let v = first_violation(self.order(), 4, |w| {
            let (x, y, z, u) = (w[0], w[1], w[2], w[3]);
            self.op(self.op(x, y), self.op(z, u)) == self.op(self.op(x, z), self.op(y, u))
        });
        PropertyReport::from_violation("medial", v)
    }

    pub fn is_medial(&self) -> bool {
        self.medial_report().holds
    }

    pub fn commutative_report(&self) -> PropertyReport {
        let v = first_violation(self.order(), 2, |w| self.op(w[0], w[1]) == self.op(w[1], w[0]));
        PropertyReport::from_violation("commutative", v)
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative_report().holds
    }

    /// Orbits of the inner action `x ~ x*y`, each sorted, listed by least
    /// element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut uf = crate::congruence::UnionFind::new(self.order());
        for x in 0..self.order() {
            for y in 0..self.order() {
                uf.union(x, self.op(x, y));
            }
        }
        uf.classes()
    }

    pub fn is_connected(&self) -> bool {
        self.orbits().len() <= 1
    }

    pub fn is_automorphism(&self, phi: &Permutation) -> bool {
        phi.degree() == self.order()
            && crate::search::is_hom(&[&self.table], &[&self.table], phi.images())
    }

    /// All automorphisms, in lexicographic order of image vectors.
    pub fn automorphism_group(&self) -> Vec<Permutation> {
        let group: Vec<Permutation> = HomSearch::new(vec![&self.table], vec![&self.table])
            .injective(true)
            .collect()
            .into_iter()
            .map(Permutation::from_images_unchecked)
            .collect();
        debug_assert!(check_group(&group).is_ok());
        group
    }

    fn profile(&self, x: usize) -> (Vec<usize>, usize) {
        let fixed = (0..self.order()).filter(|&y| self.op(x, y) == x).count();
        (self.right(x).cycle_type(), fixed)
    }

    /// Lexicographically least isomorphism `self → other`, if any.
    pub fn isomorphism(&self, other: &FiniteQuandle) -> Option<Permutation> {
        if self.order() != other.order() {
            return None;
        }
        let pa: Vec<_> = (0..self.order()).map(|x| self.profile(x)).collect();
        let pb: Vec<_> = (0..other.order()).map(|x| other.profile(x)).collect();
        let mut sa = pa.clone();
        let mut sb = pb.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return None;
        }
        let allowed = move |x: usize, y: usize| pa[x] == pb[y];
        HomSearch::new(vec![&self.table], vec![&other.table])
            .injective(true)
            .allowed(&allowed)
            .first()
            .map(Permutation::from_images_unchecked)
    }

    pub fn is_isomorphic(&self, other: &FiniteQuandle) -> bool {
        self.isomorphism(other).is_some()
    }

    /// The subquandle on `elements` (sorted, closed under `*`), relabelled
    /// `0..k` in order.
    pub fn subquandle(&self, elements: &[usize]) -> Result<FiniteQuandle> {
        let index = |v: usize| elements.iter().position(|&e| e == v);
        let mut rows = Vec::with_capacity(elements.len());
        for &a in elements {
            let mut row = Vec::with_capacity(elements.len());
            for &b in elements {
                row.push(index(self.op(a, b)).ok_or_else(|| {
                    Error::Internal("subset is not closed under the operation".into())
                })?);
            }
            rows.push(row);
        }
        FiniteQuandle::new_checked(OperationTable::from_rows(&rows)?, "subquandle")
    }
}

/// Standalone form of [`FiniteQuandle::automorphism_group`].
pub fn automorphism_group(q: &FiniteQuandle) -> Vec<Permutation> {
    q.automorphism_group()
}

pub fn quandle_isomorphism(q1: &FiniteQuandle, q2: &FiniteQuandle) -> Option<Permutation> {
    q1.isomorphism(q2)
}
