//! Permutations of `{0..n}` with disjoint-cycle rendering in 1-based labels.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A bijection of `{0..n}`, stored as its image vector.
///
/// Ordering is lexicographic on the image vector, which is the order used for
/// every enumeration in this crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::format(format!(
                    "not a permutation of {n} points: {images:?}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::format("permutation labels are 1-based"));
        }
        Permutation::new(images.iter().map(|&v| v - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation of `n` points from cycles of 0-based points.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let b = cycle[(i + 1) % cycle.len()];
                if a >= n || b >= n {
                    return Err(Error::format(format!("cycle point out of range 1..{n}")));
                }
                if touched[a] {
                    return Err(Error::format("cycles are not disjoint"));
                }
                touched[a] = true;
                images[a] = b;
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn order(&self) -> usize {
        let mut lcm = 1usize;
        for c in self.cycles() {
            lcm = lcm / gcd(lcm, c.len()) * c.len();
        }
        lcm
    }

    /// Disjoint cycles of length ≥ 2, each starting at its least point, sorted
    /// by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Sorted cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let moved: usize = self.cycles().iter().map(Vec::len).sum();
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.extend(std::iter::repeat_n(1, self.degree() - moved));
        t.sort_unstable();
        t
    }

    /// Parses `id`, `(1 2)(3 4)`, `(12)(3)` and similar, in 1-based labels.
    ///
    /// Cycle entries without separators are read digit by digit, which only
    /// makes sense when `n < 10`.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        if text.eq_ignore_ascii_case("id") || text == "()" {
            return Ok(Permutation::identity(n));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            rest = rest.trim_start();
            let Some(after_open) = rest.strip_prefix('(') else {
                return Err(Error::format(format!("expected `(` in cycle notation: {text}")));
            };
            let close = after_open
                .find(')')
                .ok_or_else(|| Error::format(format!("unclosed cycle: {text}")))?;
            let body = &after_open[..close];
            let labels: Vec<usize> = if body.contains([' ', ',']) {
                body.split([' ', ','])
                    .filter(|s| !s.is_empty())
                    .map(|s| {
                        s.parse::<usize>()
                            .map_err(|_| Error::format(format!("bad cycle entry `{s}`")))
                    })
                    .collect::<Result<_>>()?
            } else {
                body.chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| Error::format(format!("bad cycle entry `{c}`")))
                    })
                    .collect::<Result<_>>()?
            };
            if labels.iter().any(|&l| l == 0 || l > n) {
                return Err(Error::format(format!("cycle label out of range 1..{n}: {text}")));
            }
            cycles.push(labels.into_iter().map(|l| l - 1).collect());
            rest = &after_open[close + 1..];
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Permutation::from_cycles(n, &refs)
    }

    /// Disjoint-cycle notation in 1-based labels; `id` for the identity.
    ///
    /// Entries are space separated, e.g. `(1 2)(3 4)`.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "id".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let body: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
                format!("({})", body.join(" "))
            })
            .collect()
    }

    /// Compact notation as printed for small degrees, e.g. `(123)`.
    pub fn to_compact_cycle_string(&self) -> String {
        if self.degree() >= 10 {
            return self.to_cycle_string();
        }
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "id".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let body: String = c.iter().map(|x| (x + 1).to_string()).collect();
                format!("({body})")
            })
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

/// Parses a cycle string whose degree is implied by the largest label.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let max = s
            .chars()
            .filter_map(|c| c.to_digit(10))
            .map(|d| d as usize)
            .max()
            .unwrap_or(0);
        let spaced = s.contains([' ', ',']);
        let n = if spaced {
            s.split(|c: char| !c.is_ascii_digit())
                .filter_map(|t| t.parse::<usize>().ok())
                .max()
                .unwrap_or(0)
        } else {
            max
        };
        Permutation::parse_cycles(s, n)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Checks that `perms` is a nonempty group of permutations of a common degree.
pub fn check_group(perms: &[Permutation]) -> Result<()> {
    let Some(first) = perms.first() else {
        return Err(Error::NotAGroup("empty set".into()));
    };
    let n = first.degree();
    if perms.iter().any(|p| p.degree() != n) {
        return Err(Error::NotAGroup("mixed degrees".into()));
    }
    let set: std::collections::HashSet<&Permutation> = perms.iter().collect();
    if !set.contains(&Permutation::identity(n)) {
        return Err(Error::NotAGroup("identity missing".into()));
    }
    for a in perms {
        if !set.contains(&a.inverse()) {
            return Err(Error::NotAGroup(format!("inverse of {a} missing")));
        }
        for b in perms {
            if !set.contains(&a.compose(b)) {
                return Err(Error::NotAGroup(format!("not closed: {a} ∘ {b}")));
            }
        }
    }
    Ok(())
}

/// Number of conjugacy classes of a permutation group.
pub fn conjugacy_class_count(group: &[Permutation]) -> Result<usize> {
    check_group(group)?;
    let mut elems: Vec<&Permutation> = group.iter().collect();
    elems.sort();
    elems.dedup();
    let index: std::collections::HashMap<&Permutation, usize> =
        elems.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let mut seen = vec![false; elems.len()];
    let mut classes = 0;
    for i in 0..elems.len() {
        if seen[i] {
            continue;
        }
        classes += 1;
        for g in &elems {
            let c = g.compose(elems[i]).compose(&g.inverse());
            seen[index[&c]] = true;
        }
    }
    Ok(classes)
}
