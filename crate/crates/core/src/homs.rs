//! Homomorphism sets, pointwise Hom-objects over medial targets, lifting of
//! quandle homomorphisms, functorial maps, and the power embedding.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::biquandle::FiniteBiquandle;
use crate::error::{Error, Result};
use crate::quandle::FiniteQuandle;
use crate::report::PropertyReport;
use crate::search::{closure, HomSearch};
use crate::structures::BiquandleStructure;
use crate::table::OperationTable;

/// Homomorphisms as image vectors, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSet {
    pub source_order: usize,
    pub target_order: usize,
    pub elements: Vec<Vec<usize>>,
}

impl HomSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, f: &[usize]) -> Option<usize> {
        self.elements.binary_search_by(|e| e.as_slice().cmp(f)).ok()
    }

    pub fn contains(&self, f: &[usize]) -> bool {
        self.index_of(f).is_some()
    }

    /// Elements in 1-based labels.
    pub fn one_based(&self) -> Vec<Vec<usize>> {
        self.elements
            .iter()
            .map(|f| f.iter().map(|v| v + 1).collect())
            .collect()
    }

    /// Builds the table of a pointwise operation, failing if a result falls
    /// outside the set.
    fn pointwise(&self, op: impl Fn(usize, usize) -> usize) -> Result<OperationTable> {
        let index: HashMap<&[usize], usize> = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, f)| (f.as_slice(), i))
            .collect();
        let k = self.len();
        let mut rows = vec![vec![0; k]; k];
        for (i, f) in self.elements.iter().enumerate() {
            for (j, g) in self.elements.iter().enumerate() {
                let h: Vec<usize> = f.iter().zip(g).map(|(&a, &b)| op(a, b)).collect();
                rows[i][j] = *index.get(h.as_slice()).ok_or_else(|| {
                    Error::Internal("pointwise result is not a homomorphism".into())
                })?;
            }
        }
        OperationTable::from_rows(&rows)
    }
}

pub fn enumerate_quandle_homs(q1: &FiniteQuandle, q2: &FiniteQuandle) -> HomSet {
    HomSet {
        source_order: q1.order(),
        target_order: q2.order(),
        elements: HomSearch::new(vec![q1.table()], vec![q2.table()]).collect(),
    }
}

pub fn enumerate_biquandle_homs(x: &FiniteBiquandle, y: &FiniteBiquandle) -> HomSet {
    HomSet {
        source_order: x.order(),
        target_order: y.order(),
        elements: HomSearch::new(x.tables().to_vec(), y.tables().to_vec()).collect(),
    }
}

pub fn count_biquandle_homs(x: &FiniteBiquandle, y: &FiniteBiquandle) -> usize {
    HomSearch::new(x.tables().to_vec(), y.tables().to_vec()).count()
}

pub fn count_quandle_homs(q1: &FiniteQuandle, q2: &FiniteQuandle) -> usize {
    HomSearch::new(vec![q1.table()], vec![q2.table()]).count()
}

fn header(homs: &HomSet) -> String {
    let mut s = String::new();
    for (i, f) in homs.one_based().iter().enumerate() {
        let parts: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(s, "# {} = ({})", i + 1, parts.join(","));
    }
    s
}

/// `Hom_Q(Q1, Q2)` with `(f*g)(x) = f(x)*g(x)`.
#[derive(Clone, Debug)]
pub struct HomQuandle {
    pub homs: HomSet,
    pub quandle: FiniteQuandle,
}

impl HomQuandle {
    /// Header comments mapping each element to its image vector, then the
    /// table.
    pub fn to_text(&self) -> String {
        header(&self.homs) + &self.quandle.table().to_text()
    }
}

pub fn hom_quandle(q1: &FiniteQuandle, q2: &FiniteQuandle) -> Result<HomQuandle> {
    if !q2.is_medial() {
        return Err(Error::NonMedialTarget);
    }
    let homs = enumerate_quandle_homs(q1, q2);
    let t = homs.pointwise(|a, b| q2.op(a, b))?;
    let quandle = FiniteQuandle::new_checked(t, "Hom-quandle")?;
    Ok(HomQuandle { homs, quandle })
}

/// `Hom_B(X, Y)` with pointwise `⊻` and `⊼`.
#[derive(Clone, Debug)]
pub struct HomBiquandle {
    pub homs: HomSet,
    pub biquandle: FiniteBiquandle,
}

impl HomBiquandle {
    pub fn to_text(&self) -> String {
        header(&self.homs) + &self.biquandle.to_text()
    }
}

pub fn hom_biquandle(x: &FiniteBiquandle, y: &FiniteBiquandle) -> Result<HomBiquandle> {
    if !y.is_medial() {
        return Err(Error::NonMedialTarget);
    }
    let homs = enumerate_biquandle_homs(x, y);
    let under = homs.pointwise(|a, b| y.under(a, b))?;
    let over = homs.pointwise(|a, b| y.over(a, b))?;
    let biquandle = FiniteBiquandle::new_checked(under, over, "Hom-biquandle")?;
    if !biquandle.is_medial() {
        return Err(Error::Internal("Hom-biquandle over a medial target is not medial".into()));
    }
    Ok(HomBiquandle { homs, biquandle })
}

/// Whether the quandle map `f` satisfies `f∘α_x = β_{f(x)}∘f` for all `x`,
/// where `α` and `β` are the structure maps of `sx` and `sy`.
pub fn lift_check(f: &[usize], sx: &BiquandleStructure, sy: &BiquandleStructure) -> bool {
    let n = sx.order();
    f.len() == n
        && (0..n).all(|x| {
            let a = sx.beta(x);
            let b = sy.beta(f[x]);
            (0..n).all(|z| f[a.apply(z)] == b.apply(f[z]))
        })
}

/// Checks that the associated quandle of `Hom_B(X, Y)` is the subquandle of
/// pointwise-operated quandle maps `Q(X) → Q(Y)` that lift, and that the
/// structure maps of `Hom_B(X, Y)` are `β*_g(f) = (x ↦ β_{g(x)}(f(x)))`.
pub fn hom_associated_quandle_check(x: &FiniteBiquandle, y: &FiniteBiquandle) -> Result<PropertyReport> {
    let h = hom_biquandle(x, y)?;
    let sx = BiquandleStructure::extract(x)?;
    let sy = BiquandleStructure::extract(y)?;
    let qh = h.biquandle.associated_quandle()?;

    let lifting: Vec<Vec<usize>> = enumerate_quandle_homs(sx.base(), sy.base())
        .elements
        .into_iter()
        .filter(|f| lift_check(f, &sx, &sy))
        .collect();
    if lifting != h.homs.elements {
        let i = lifting
            .iter()
            .zip(&h.homs.elements)
            .position(|(a, b)| a != b)
            .unwrap_or(lifting.len().min(h.homs.len()));
        return Ok(PropertyReport::fail("lifting maps are the Hom-biquandle elements", &[i]));
    }
    let k = h.homs.len();
    let qy = sy.base();
    for i in 0..k {
        for j in 0..k {
            let (f, g) = (&h.homs.elements[i], &h.homs.elements[j]);
            let pointwise: Vec<usize> = f.iter().zip(g).map(|(&a, &b)| qy.op(a, b)).collect();
            if h.homs.elements[qh.op(i, j)] != pointwise {
                return Ok(PropertyReport::fail("associated quandle is pointwise", &[i, j]));
            }
            let beta_star: Vec<usize> = f.iter().zip(g).map(|(&a, &b)| sy.beta(b).apply(a)).collect();
            if h.homs.elements[h.biquandle.over(i, j)] != beta_star {
                return Ok(PropertyReport::fail("structure maps are pointwise β", &[i, j]));
            }
        }
    }
    Ok(PropertyReport::pass("associated quandle of Hom-biquandle"))
}

/// A map between Hom-biquandles, given by indices into their element lists.
#[derive(Clone, Debug)]
pub struct InducedMap {
    pub source: HomBiquandle,
    pub target: HomBiquandle,
    pub map: Vec<usize>,
}

fn check_induced(m: &InducedMap) -> Result<()> {
    if m.source.biquandle.is_hom_to(&m.target.biquandle, &m.map) {
        Ok(())
    } else {
        Err(Error::Internal("induced map is not a biquandle homomorphism".into()))
    }
}

/// `h_* : Hom_B(Y, Z) → Hom_B(X, Z)`, `f ↦ f∘h`, for `h : X → Y`.
pub fn precompose(
    h: &[usize],
    x: &FiniteBiquandle,
    y: &FiniteBiquandle,
    z: &FiniteBiquandle,
) -> Result<InducedMap> {
    if !x.is_hom_to(y, h) {
        return Err(Error::NotAHomomorphism);
    }
    let source = hom_biquandle(y, z)?;
    let target = hom_biquandle(x, z)?;
    let map = source
        .homs
        .elements
        .iter()
        .map(|f| {
            let fh: Vec<usize> = h.iter().map(|&v| f[v]).collect();
            target
                .homs
                .index_of(&fh)
                .ok_or_else(|| Error::Internal("f∘h is not a homomorphism".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let m = InducedMap { source, target, map };
    check_induced(&m)?;
    Ok(m)
}

/// `h^* : Hom_B(A, X) → Hom_B(A, Y)`, `f ↦ h∘f`, for `h : X → Y`.
pub fn postcompose(
    h: &[usize],
    a: &FiniteBiquandle,
    x: &FiniteBiquandle,
    y: &FiniteBiquandle,
) -> Result<InducedMap> {
    if !x.is_hom_to(y, h) {
        return Err(Error::NotAHomomorphism);
    }
    let source = hom_biquandle(a, x)?;
    let target = hom_biquandle(a, y)?;
    let map = source
        .homs
        .elements
        .iter()
        .map(|f| {
            let hf: Vec<usize> = f.iter().map(|&v| h[v]).collect();
            target
                .homs
                .index_of(&hf)
                .ok_or_else(|| Error::Internal("h∘f is not a homomorphism".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let m = InducedMap { source, target, map };
    check_induced(&m)?;
    Ok(m)
}

/// A generating set of minimum size, lexicographically least among those.
///
/// Elements outside the closure of all the others must belong to every
/// generating set, so the search only ranges over supersets of those.
pub fn minimal_generating_set(x: &FiniteBiquandle) -> Result<Vec<usize>> {
    let n = x.order();
    if n == 0 {
        return Ok(vec![]);
    }
    let ops = x.tables();
    let required: Vec<usize> = (0..n)
        .filter(|&e| {
            let others: Vec<usize> = (0..n).filter(|&o| o != e).collect();
            !closure(&ops, &others)[e]
        })
        .collect();
    let optional: Vec<usize> = (0..n).filter(|e| !required.contains(e)).collect();
    for extra in 0..=optional.len() {
        if required.len() + extra == 0 {
            continue;
        }
        let mut best: Option<Vec<usize>> = None;
        for_each_combination(optional.len(), extra, |idx| {
            let mut set = required.clone();
            set.extend(idx.iter().map(|&i| optional[i]));
            set.sort_unstable();
            if closure(&ops, &set).iter().all(|&b| b) && best.as_ref().is_none_or(|b| set < *b) {
                best = Some(set);
            }
        });
        if let Some(set) = best {
            return Ok(set);
        }
    }
    Err(Error::Internal("the whole carrier does not generate".into()))
}

fn for_each_combination(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return;
    }
    loop {
        visit(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// `j : Hom_B(X, Y) → Y^k`, `j(f) = (f(x_1), …, f(x_k))`.
#[derive(Clone, Debug)]
pub struct PowerEmbedding {
    pub generators: Vec<usize>,
    /// `j(f)` for each hom, in the order of `hom.homs`.
    pub images: Vec<Vec<usize>>,
    /// The image as a biquandle; element `i` is `images[i]`.
    pub image: FiniteBiquandle,
    pub hom: HomBiquandle,
}

pub fn embed_into_power(x: &FiniteBiquandle, y: &FiniteBiquandle) -> Result<PowerEmbedding> {
    let hom = hom_biquandle(x, y)?;
    let generators = minimal_generating_set(x)?;
    let images: Vec<Vec<usize>> = hom
        .homs
        .elements
        .iter()
        .map(|f| generators.iter().map(|&g| f[g]).collect())
        .collect();
    let index: HashMap<&[usize], usize> = images.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
    if index.len() != images.len() {
        return Err(Error::Internal("power embedding is not injective".into()));
    }
    let k = images.len();
    let mut under = vec![vec![0; k]; k];
    let mut over = vec![vec![0; k]; k];
    for i in 0..k {
        for j in 0..k {
            let (a, b) = (&images[i], &images[j]);
            for (t, op) in [
                (&mut under, &(|p, q| y.under(p, q)) as &dyn Fn(usize, usize) -> usize),
                (&mut over, &|p, q| y.over(p, q)),
            ] {
                let c: Vec<usize> = a.iter().zip(b).map(|(&p, &q)| op(p, q)).collect();
                t[i][j] = *index
                    .get(c.as_slice())
                    .ok_or_else(|| Error::Internal("image is not closed in Y^k".into()))?;
            }
        }
    }
    let image = FiniteBiquandle::new_checked(
        OperationTable::from_rows(&under)?,
        OperationTable::from_rows(&over)?,
        "power image",
    )?;
    if !hom.biquandle.is_isomorphic(&image) {
        return Err(Error::Internal("power image is not isomorphic to the Hom-biquandle".into()));
    }
    Ok(PowerEmbedding {
        generators,
        images,
        image,
        hom,
    })
}
