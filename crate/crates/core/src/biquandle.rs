use crate::congruence::UnionFind;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::quandle::FiniteQuandle;
use crate::report::{first_violation, PropertyReport};
use crate::search::{is_hom, HomSearch};
use crate::table::OperationTable;

/// A finite biquandle with under operation `⊻` and over operation `⊼`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteBiquandle {
    under: OperationTable,
    over: OperationTable,
}

fn columns_bijective(t: &OperationTable) -> bool {
    (0..t.order()).all(|y| t.column_perm(y).is_some())
}

fn pair_map_bijective(under: &OperationTable, over: &OperationTable) -> bool {
    let n = under.order();
    let mut seen = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            let k = over.get(y, x) * n + under.get(x, y);
            if seen[k] {
                return false;
            }
            seen[k] = true;
        }
    }
    true
}

/// Checks every biquandle axiom and reports the first failure.
///
/// Order of checks: diagonal, invertibility of `α_y` and `β_y` (witness
/// `(x, x', y)`), bijectivity of `S(x,y) = (y⊼x, x⊻y)` (witness
/// `(x, y, x', y')`), then the three exchange laws (witness `(x, y, z)`).
pub fn validate_biquandle(under: &OperationTable, over: &OperationTable) -> Result<PropertyReport> {
    if under.order() != over.order() {
        return Err(Error::OrderMismatch {
            left: under.order(),
            right: over.order(),
        });
    }
    let n = under.order();
    let u = |a, b| under.get(a, b);
    let o = |a, b| over.get(a, b);

    let v = first_violation(n, 1, |w| u(w[0], w[0]) == o(w[0], w[0]));
    if v.is_some() {
        return Ok(PropertyReport::from_violation("diagonal", v));
    }
    for (name, t) in [("under invertibility", under), ("over invertibility", over)] {
        if !columns_bijective(t) {
            let v = first_violation(n, 3, |w| w[0] == w[1] || t.get(w[0], w[2]) != t.get(w[1], w[2]));
            return Ok(PropertyReport::from_violation(name, v));
        }
    }
    if !pair_map_bijective(under, over) {
        let v = first_violation(n, 4, |w| {
            (w[0], w[1]) == (w[2], w[3])
                || (o(w[1], w[0]), u(w[0], w[1])) != (o(w[3], w[2]), u(w[2], w[3]))
        });
        return Ok(PropertyReport::from_violation("pair map bijectivity", v));
    }
    let laws: [(&str, &dyn Fn(usize, usize, usize) -> bool); 3] = [
        ("exchange law 1", &|x, y, z| u(u(x, y), u(z, y)) == u(u(x, z), o(y, z))),
        ("exchange law 2", &|x, y, z| o(u(x, y), u(z, y)) == u(o(x, z), o(y, z))),
        ("exchange law 3", &|x, y, z| o(o(x, y), o(z, y)) == o(o(x, z), u(y, z))),
    ];
    for (name, law) in laws {
        let v = first_violation(n, 3, |w| law(w[0], w[1], w[2]));
        if v.is_some() {
            return Ok(PropertyReport::from_violation(name, v));
        }
    }
    Ok(PropertyReport::pass("biquandle"))
}

impl FiniteBiquandle {
    pub fn new(under: OperationTable, over: OperationTable) -> Result<Self> {
        let r = validate_biquandle(&under, &over)?;
        if !r.holds {
            return Err(Error::NotABiquandle(r));
        }
        Ok(FiniteBiquandle { under, over })
    }

    pub fn from_one_based(under: &[Vec<usize>], over: &[Vec<usize>]) -> Result<Self> {
        FiniteBiquandle::new(
            OperationTable::from_one_based(under)?,
            OperationTable::from_one_based(over)?,
        )
    }

    /// For outputs that theory guarantees are biquandles: a failure here is a
    /// bug, not bad input.
    pub(crate) fn new_checked(under: OperationTable, over: OperationTable, what: &str) -> Result<Self> {
        FiniteBiquandle::new(under, over)
            .map_err(|e| Error::Internal(format!("{what} is not a biquandle: {e}")))
    }

    /// The trivial biquandle `x⊻y = x⊼y = x`.
    pub fn trivial(n: usize) -> Self {
        let t = OperationTable::from_fn(n, |a, _| a);
        FiniteBiquandle {
            under: t.clone(),
            over: t,
        }
    }

    pub fn under_table(&self) -> &OperationTable {
        &self.under
    }

    pub fn over_table(&self) -> &OperationTable {
        &self.over
    }

    pub fn order(&self) -> usize {
        self.under.order()
    }

    /// `x ⊻ y`.
    #[inline]
    pub fn under(&self, x: usize, y: usize) -> usize {
        self.under.get(x, y)
    }

    /// `x ⊼ y`.
    #[inline]
    pub fn over(&self, x: usize, y: usize) -> usize {
        self.over.get(x, y)
    }

    /// `α_y : x ↦ x⊻y`.
    pub fn alpha(&self, y: usize) -> Permutation {
        Permutation::from_images_unchecked(self.under.column(y))
    }

    /// `β_y : x ↦ x⊼y`.
    pub fn beta(&self, y: usize) -> Permutation {
        Permutation::from_images_unchecked(self.over.column(y))
    }

    pub(crate) fn tables(&self) -> [&OperationTable; 2] {
        [&self.under, &self.over]
    }

    /// `x*y = β_y⁻¹(x⊻y)`. The result is validated.
    pub fn associated_quandle(&self) -> Result<FiniteQuandle> {
        let n = self.order();
        let binv: Vec<Permutation> = (0..n).map(|y| self.beta(y).inverse()).collect();
        let t = OperationTable::from_fn(n, |x, y| binv[y].apply(self.under(x, y)));
        FiniteQuandle::new_checked(t, "associated quandle")
    }

    pub fn medial_report(&self) -> PropertyReport {
        let (u, o) = (|a, b| self.under(a, b), |a, b| self.over(a, b));
        let ids: [(&str, &dyn Fn(usize, usize, usize, usize) -> bool); 3] = [
            ("medial (under/under)", &|x, y, z, w| u(u(x, y), u(z, w)) == u(u(x, z), u(y, w))),
            ("medial (over/under)", &|x, y, z, w| o(u(x, y), u(z, w)) == u(o(x, z), o(y, w))),
            ("medial (over/over)", &|x, y, z, w| o(o(x, y), o(z, w)) == o(o(x, z), o(y, w))),
        ];
        for (name, id) in ids {
            let v = first_violation(self.order(), 4, |t| id(t[0], t[1], t[2], t[3]));
            if v.is_some() {
                return PropertyReport::from_violation(name, v);
            }
        }
        PropertyReport::pass("medial")
    }

    pub fn is_medial(&self) -> bool {
        self.medial_report().holds
    }

    pub fn commutative_report(&self) -> PropertyReport {
        let v = first_violation(self.order(), 2, |w| {
            self.under(w[0], w[1]) == self.under(w[1], w[0])
                && self.over(w[0], w[1]) == self.over(w[1], w[0])
        });
        PropertyReport::from_violation("commutative", v)
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative_report().holds
    }

    pub fn involutory_report(&self) -> PropertyReport {
        let (u, o) = (|a, b| self.under(a, b), |a, b| self.over(a, b));
        let ids: [(&str, &dyn Fn(usize, usize) -> bool); 4] = [
            ("involutory x⊻(y⊼x) = x⊻y", &|x, y| u(x, o(y, x)) == u(x, y)),
            ("involutory x⊼(y⊻x) = x⊼y", &|x, y| o(x, u(y, x)) == o(x, y)),
            ("involutory (x⊻y)⊻y = x", &|x, y| u(u(x, y), y) == x),
            ("involutory (x⊼y)⊼y = x", &|x, y| o(o(x, y), y) == x),
        ];
        for (name, id) in ids {
            let v = first_violation(self.order(), 2, |t| id(t[0], t[1]));
            if v.is_some() {
                return PropertyReport::from_violation(name, v);
            }
        }
        PropertyReport::pass("involutory")
    }

    pub fn is_involutory(&self) -> bool {
        self.involutory_report().holds
    }

    /// `σ` with `x⊻y = x⊼y = σ(x)` for all `x, y`, if one exists.
    pub fn constant_action(&self) -> Option<Permutation> {
        let n = self.order();
        if n == 0 {
            return Some(Permutation::identity(0));
        }
        let sigma = self.under.column(0);
        let constant = (0..n).all(|x| {
            (0..n).all(|y| self.under(x, y) == sigma[x] && self.over(x, y) == sigma[x])
        });
        if constant {
            Permutation::new(sigma).ok()
        } else {
            None
        }
    }

    pub fn is_constant_action(&self) -> bool {
        self.constant_action().is_some()
    }

    pub fn two_reductive_report(&self) -> PropertyReport {
        let (u, o) = (|a, b| self.under(a, b), |a, b| self.over(a, b));
        let ids: [(&str, &dyn Fn(usize, usize, usize) -> bool); 4] = [
            ("2-reductive a⊻(b⊻c) = a⊻b", &|a, b, c| u(a, u(b, c)) == u(a, b)),
            ("2-reductive a⊼(b⊼c) = a⊼b", &|a, b, c| o(a, o(b, c)) == o(a, b)),
            ("2-reductive a⊻(b⊼c) = a⊻b", &|a, b, c| u(a, o(b, c)) == u(a, b)),
            ("2-reductive a⊼(b⊻c) = a⊼b", &|a, b, c| o(a, u(b, c)) == o(a, b)),
        ];
        for (name, id) in ids {
            let v = first_violation(self.order(), 3, |t| id(t[0], t[1], t[2]));
            if v.is_some() {
                return PropertyReport::from_violation(name, v);
            }
        }
        PropertyReport::pass("2-reductive")
    }

    pub fn is_two_reductive(&self) -> bool {
        self.two_reductive_report().holds
    }

    /// Classes of the equivalence generated by `x ~ x⊻y` and `x ~ x⊼y`.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut uf = UnionFind::new(n);
        for x in 0..n {
            for y in 0..n {
                uf.union(x, self.under(x, y));
                uf.union(x, self.over(x, y));
            }
        }
        uf.classes()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether `x⊻y = x⊼y` for all `x, y`.
    pub fn operations_coincide(&self) -> bool {
        self.under == self.over
    }

    pub fn is_hom_to(&self, other: &FiniteBiquandle, f: &[usize]) -> bool {
        f.len() == self.order()
            && f.iter().all(|&v| v < other.order())
            && is_hom(&self.tables(), &other.tables(), f)
    }

    fn profile(&self, x: usize) -> (Vec<usize>, Vec<usize>, usize, usize, bool) {
        let n = self.order();
        (
            self.alpha(x).cycle_type(),
            self.beta(x).cycle_type(),
            (0..n).filter(|&y| self.under(x, y) == x).count(),
            (0..n).filter(|&y| self.over(x, y) == x).count(),
            self.under(x, x) == x,
        )
    }

    /// Lexicographically least bijection preserving both operations.
    pub fn isomorphism(&self, other: &FiniteBiquandle) -> Option<Permutation> {
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
        HomSearch::new(self.tables().to_vec(), other.tables().to_vec())
            .injective(true)
            .allowed(&allowed)
            .first()
            .map(Permutation::from_images_unchecked)
    }

    pub fn is_isomorphic(&self, other: &FiniteBiquandle) -> bool {
        self.isomorphism(other).is_some()
    }

    pub fn automorphism_group(&self) -> Vec<Permutation> {
        HomSearch::new(self.tables().to_vec(), self.tables().to_vec())
            .injective(true)
            .collect()
            .into_iter()
            .map(Permutation::from_images_unchecked)
            .collect()
    }

    /// Relabels elements by `φ`.
    pub fn relabel(&self, phi: &Permutation) -> FiniteBiquandle {
        FiniteBiquandle {
            under: self.under.relabel(phi),
            over: self.over.relabel(phi),
        }
    }

    /// Under block, blank line, over block.
    pub fn to_text(&self) -> String {
        format!("{}\n{}", self.under.to_text(), self.over.to_text())
    }

    /// Parses the two-block text format.
    pub fn parse(text: &str) -> Result<Self> {
        let tables = crate::table::parse_tables(text)?;
        match <[OperationTable; 2]>::try_from(tables) {
            Ok([u, o]) => FiniteBiquandle::new(u, o),
            Err(ts) => Err(Error::format(format!(
                "a biquandle file has two table blocks, found {}",
                ts.len()
            ))),
        }
    }
}

pub fn biquandle_isomorphism(b1: &FiniteBiquandle, b2: &FiniteBiquandle) -> Option<Permutation> {
    b1.isomorphism(b2)
}
