use crate::error::{Error, Result};
use crate::table::OperationTable;

/// A finite group given by its Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    cayley: OperationTable,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Checks the group axioms exhaustively.
    pub fn new(cayley: OperationTable) -> Result<Self> {
        let n = cayley.order();
        if n == 0 {
            return Err(Error::NotAGroup("empty carrier".into()));
        }
        let m = |a, b| cayley.get(a, b);
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| m(e, a) == a && m(a, e) == a))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| m(a, b) == identity && m(b, a) == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {} has no inverse", a + 1)))?;
            inverse.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::NotAGroup(format!(
                            "not associative at ({},{},{})",
                            a + 1,
                            b + 1,
                            c + 1
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            cayley,
            identity,
            inverse,
        })
    }

    /// `ℤ_n` with elements `0..n` labelled `1..n`.
    pub fn cyclic(n: usize) -> Self {
        FiniteGroup::new(OperationTable::from_fn(n, |a, b| (a + b) % n)).expect("cyclic group")
    }

    /// Parses the table format preceded by a `group` header line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });
        match lines.next() {
            Some(h) if h.trim().eq_ignore_ascii_case("group") => {}
            _ => return Err(Error::format("group file must start with a `group` header")),
        }
        let rest: Vec<&str> = lines.collect();
        FiniteGroup::new(crate::table::parse_table(&rest.join("\n"))?)
    }

    pub fn to_text(&self) -> String {
        format!("group\n{}", self.cayley.to_text())
    }

    pub fn order(&self) -> usize {
        self.cayley.order()
    }

    pub fn cayley(&self) -> &OperationTable {
        &self.cayley
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley.get(a, b)
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Whether `phi` (as an image vector) is a bijective homomorphism.
    pub fn is_automorphism(&self, phi: &[usize]) -> bool {
        let n = self.order();
        if phi.len() != n || crate::perm::Permutation::new(phi.to_vec()).is_err() {
            return false;
        }
        (0..n).all(|a| (0..n).all(|b| phi[self.mul(a, b)] == self.mul(phi[a], phi[b])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_groups() {
        let g = FiniteGroup::cyclic(4);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.inv(1), 3);
        assert!(g.is_abelian());
        assert!(g.is_automorphism(&[0, 3, 2, 1]));
        assert!(!g.is_automorphism(&[0, 2, 1, 3]));
    }

    #[test]
    fn rejects_non_groups() {
        let t = OperationTable::from_fn(3, |a, _| a);
        assert!(FiniteGroup::new(t).is_err());
        let t = OperationTable::from_fn(2, |_, _| 0);
        assert!(FiniteGroup::new(t).is_err());
    }

    #[test]
    fn text_round_trip() {
        let g = FiniteGroup::cyclic(3);
        assert_eq!(FiniteGroup::parse(&g.to_text()).unwrap(), g);
        assert!(FiniteGroup::parse("3\n1 2 3\n2 3 1\n3 1 2\n").is_err());
    }
}
