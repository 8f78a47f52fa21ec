use std::fmt;

use serde::Serialize;

/// Outcome of checking a named identity or axiom exhaustively.
///
/// When the property fails, `witness` holds the lexicographically least
/// violating tuple, in 1-based element labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub property: String,
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

impl PropertyReport {
    pub fn pass(property: impl Into<String>) -> Self {
        PropertyReport {
            property: property.into(),
            holds: true,
            witness: None,
        }
    }

    /// `witness` is given in 0-based labels and stored 1-based.
    pub fn fail(property: impl Into<String>, witness: &[usize]) -> Self {
        PropertyReport {
            property: property.into(),
            holds: false,
            witness: Some(witness.iter().map(|&w| w + 1).collect()),
        }
    }

    pub(crate) fn from_violation(property: &str, violation: Option<Vec<usize>>) -> Self {
        match violation {
            None => PropertyReport::pass(property),
            Some(w) => PropertyReport::fail(property, &w),
        }
    }

    /// Witness in 0-based labels.
    pub fn witness0(&self) -> Option<Vec<usize>> {
        self.witness
            .as_ref()
            .map(|w| w.iter().map(|&x| x - 1).collect())
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds {
            return write!(f, "{}: holds", self.property);
        }
        write!(f, "{}: fails", self.property)?;
        if let Some(w) = &self.witness {
            let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            write!(f, " at ({})", parts.join(","))?;
        }
        Ok(())
    }
}

/// Iterates `{0..n}^arity` in lexicographic order and returns the first tuple
/// for which `holds` is false.
pub(crate) fn first_violation(
    n: usize,
    arity: usize,
    mut holds: impl FnMut(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    if n == 0 && arity > 0 {
        return None;
    }
    let mut t = vec![0usize; arity];
    loop {
        if !holds(&t) {
            return Some(t);
        }
        // odometer
        let mut i = arity;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < n {
                break;
            }
            t[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odometer_finds_least_tuple() {
        let v = first_violation(3, 2, |t| !(t[0] + t[1] == 3));
        assert_eq!(v, Some(vec![1, 2]));
        assert_eq!(first_violation(3, 3, |_| true), None);
        assert_eq!(first_violation(2, 0, |_| false), Some(vec![]));
    }

    #[test]
    fn display_is_one_based() {
        let r = PropertyReport::fail("idempotence", &[0, 2]);
        assert_eq!(r.to_string(), "idempotence: fails at (1,3)");
        assert_eq!(r.witness0(), Some(vec![0, 2]));
    }
}
