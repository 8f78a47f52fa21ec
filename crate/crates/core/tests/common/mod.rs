//! Shared fixtures and checks for the integration test targets.
//!
//! Every check returns `Err(description)` on the first counterexample so the
//! acceptance target can print it on its FAIL line.

#![allow(dead_code)]

use std::collections::HashMap;

use biquandle_core::catalog::{order3_biquandles, quandle_y};
use biquandle_core::congruence::{gamma, quotient_biquandle, two_reductive_quotient, Congruence};
use biquandle_core::homs::{
    count_biquandle_homs, embed_into_power, enumerate_biquandle_homs, enumerate_quandle_homs, hom_associated_quandle_check,
    hom_biquandle, lift_check, postcompose, precompose,
};
use biquandle_core::knots::{biquandle_colorings, quandle_colorings, Crossing, KnotDiagram, Sign};
use biquandle_core::structures::classify_structures_direct;
use biquandle_core::{
    classify_structures, congruence_closure, enumerate_structures, BiquandleStructure, FiniteBiquandle, FiniteQuandle,
    OperationTable, Permutation,
};

pub type Check = Result<(), String>;

pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Odometer over `base^len` tuples.
pub fn for_each_tuple(base: usize, len: usize, mut visit: impl FnMut(&[usize])) {
    if len > 0 && base == 0 {
        return;
    }
    let mut t = vec![0; len];
    loop {
        visit(&t);
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < base {
                break;
            }
            t[i] = 0;
        }
    }
}

/// Quandles of order `n` up to isomorphism, found by brute force over columns
/// that are permutations fixing their own index.
pub fn quandles_of_order(n: usize) -> Vec<FiniteQuandle> {
    let cols: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|y| permutations(n).into_iter().filter(|p| p[y] == y).collect())
        .collect();
    let mut out: Vec<FiniteQuandle> = Vec::new();
    let sizes: Vec<usize> = cols.iter().map(|c| c.len()).collect();
    let total: usize = sizes.iter().product();
    for mut k in 0..total {
        let pick: Vec<&Vec<usize>> = (0..n)
            .map(|y| {
                let c = &cols[y][k % sizes[y]];
                k /= sizes[y];
                c
            })
            .collect();
        let op = |x: usize, y: usize| pick[y][x];
        let distributive =
            (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| op(op(x, y), z) == op(op(x, z), op(y, z)))));
        if !distributive {
            continue;
        }
        let q = FiniteQuandle::new(OperationTable::from_fn(n, op)).expect("brute-force quandle");
        if !out.iter().any(|o| o.is_isomorphic(&q)) {
            out.push(q);
        }
    }
    out
}

/// Every quandle of order `1..=n` up to isomorphism.
pub fn small_quandles(n: usize) -> Vec<FiniteQuandle> {
    (1..=n).flat_map(quandles_of_order).collect()
}

/// Every biquandle of order `1..=n` up to isomorphism: one induced biquandle per
/// structure class on each quandle.
pub fn small_biquandles(n: usize) -> Vec<FiniteBiquandle> {
    small_quandles(n)
        .iter()
        .flat_map(|q| classify_structures(q).unwrap().into_iter().map(|c| c.induced))
        .collect()
}

/// The biquandles induced by the structure classes on the tetrahedral quandle.
pub fn y_biquandles() -> Vec<FiniteBiquandle> {
    classify_structures(&quandle_y()).unwrap().into_iter().map(|c| c.induced).collect()
}

pub fn catalog() -> Vec<(String, FiniteBiquandle)> {
    order3_biquandles().into_iter().map(|n| (n.name, n.biquandle)).collect()
}

fn table_of(b: &FiniteBiquandle) -> String {
    b.to_text().replace('\n', " / ")
}

fn compose_maps(f: &[usize], g: &[usize]) -> Vec<usize> {
    // f∘g
    g.iter().map(|&v| f[v]).collect()
}

// ---------------------------------------------------------------------------
// Property checks
// ---------------------------------------------------------------------------

/// Induced biquandles validate, have the base as associated quandle, and the
/// structure/biquandle correspondence round-trips in both directions.
pub fn check_round_trips() -> Check {
    for q in small_quandles(4) {
        for s in enumerate_structures(&q) {
            let b = s.induce().map_err(|e| format!("{}: {e}", s.tuple_string()))?;
            ensure(b.associated_quandle().unwrap() == q, || format!("{}: associated quandle", s.tuple_string()))?;
            let back = BiquandleStructure::extract(&b).map_err(|e| e.to_string())?;
            ensure(back == s, || format!("extract(induce({})) differs", s.tuple_string()))?;
            ensure(back.induce().unwrap() == b, || format!("induce(extract(b)) differs for {}", table_of(&b)))?;
        }
    }
    Ok(())
}

/// `x⊻y = x⊼y` everywhere iff the associated quandle is trivial.
pub fn check_coinciding_operations() -> Check {
    for b in small_biquandles(4).iter().chain(&y_biquandles()) {
        let coincide = b.operations_coincide();
        let trivial = b.associated_quandle().unwrap().is_trivial();
        ensure(coincide == trivial, || format!("operations coincide = {coincide}, trivial = {trivial}: {}", table_of(b)))?;
    }
    Ok(())
}

/// Every structure on a connected quandle induces a connected biquandle.
pub fn check_connectedness() -> Check {
    let mut seen = 0;
    for q in small_quandles(4).iter().filter(|q| q.is_connected()) {
        for s in enumerate_structures(q) {
            seen += 1;
            ensure(s.induce().unwrap().is_connected(), || format!("{} is not connected", s.tuple_string()))?;
        }
    }
    ensure(seen > 0, || "no connected quandle was tested".into())
}

/// Constant structures on medial quandles induce medial biquandles.
pub fn check_constant_structures_medial() -> Check {
    let mut seen = 0;
    for q in small_quandles(4).iter().filter(|q| q.is_medial()) {
        for f in q.automorphism_group() {
            seen += 1;
            let b = BiquandleStructure::constant(q.clone(), f.clone()).unwrap().induce().unwrap();
            ensure(b.is_medial(), || format!("constant {} is not medial: {}", f, b.medial_report()))?;
        }
    }
    ensure(seen > 0, || "no medial quandle was tested".into())
}

/// No structure on a commutative quandle of order ≥ 2 induces a commutative
/// biquandle.
pub fn check_no_commutative_structures() -> Check {
    let mut seen = 0;
    for q in small_quandles(4).iter().filter(|q| q.order() >= 2 && q.is_commutative()) {
        for s in enumerate_structures(q) {
            seen += 1;
            ensure(!s.induce().unwrap().is_commutative(), || format!("{} is commutative", s.tuple_string()))?;
        }
    }
    ensure(seen > 0, || "no commutative quandle was tested".into())
}

/// In a commutative biquandle, `β_x∘β_y⁻¹` has order exactly 2 for `x ≠ y`.
/// Checked on every commutative pair of operations of order ≤ 3 found by
/// brute force over the biquandle axioms, so the hypothesis is not vacuous.
pub fn check_order_two_betas() -> Check {
    let mut seen = 0;
    for b in all_labelled_biquandles(3).iter().filter(|b| b.is_commutative()) {
        seen += 1;
        let n = b.order();
        for x in 0..n {
            for y in 0..n {
                if x == y {
                    continue;
                }
                let m = b.beta(x).compose(&b.beta(y).inverse());
                ensure(!m.is_identity() && m.compose(&m).is_identity(), || {
                    format!("β_{}β_{}⁻¹ = {m} in {}", x + 1, y + 1, table_of(b))
                })?;
            }
        }
    }
    ensure(seen > 0, || "no commutative biquandle found".into())
}

/// All labelled biquandles of order `≤ n` satisfying the raw axioms, found by
/// brute force over pairs of column-bijective tables with matching diagonals.
/// Used as an independent source for oracles; `n ≤ 3` keeps it small.
pub fn all_labelled_biquandles(n: usize) -> Vec<FiniteBiquandle> {
    let mut out = Vec::new();
    for m in 1..=n {
        let perms = permutations(m);
        let k = perms.len();
        for_each_tuple(k, m, |ucols| {
            for_each_tuple(k, m, |ocols| {
                let u = |x: usize, y: usize| perms[ucols[y]][x];
                let o = |x: usize, y: usize| perms[ocols[y]][x];
                if (0..m).any(|x| u(x, x) != o(x, x)) {
                    return;
                }
                let mut seen = vec![false; m * m];
                for x in 0..m {
                    for y in 0..m {
                        let key = o(y, x) * m + u(x, y);
                        if seen[key] {
                            return;
                        }
                        seen[key] = true;
                    }
                }
                for x in 0..m {
                    for y in 0..m {
                        for z in 0..m {
                            if u(u(x, y), u(z, y)) != u(u(x, z), o(y, z))
                                || o(u(x, y), u(z, y)) != u(o(x, z), o(y, z))
                                || o(o(x, y), o(z, y)) != o(o(x, z), u(y, z))
                            {
                                return;
                            }
                        }
                    }
                }
                out.push(FiniteBiquandle::new(OperationTable::from_fn(m, u), OperationTable::from_fn(m, o)).unwrap());
            });
        });
    }
    out
}

/// Hom-biquandles into medial targets are medial biquandles closed under the
/// pointwise operations.
pub fn check_hom_mediality() -> Check {
    let all = small_biquandles(3);
    for x in &all {
        for y in all.iter().filter(|y| y.is_medial()) {
            let h = hom_biquandle(x, y).map_err(|e| e.to_string())?;
            let els = &h.homs.elements;
            for (i, f) in els.iter().enumerate() {
                for (j, g) in els.iter().enumerate() {
                    let u: Vec<usize> = f.iter().zip(g).map(|(&a, &b)| y.under(a, b)).collect();
                    let o: Vec<usize> = f.iter().zip(g).map(|(&a, &b)| y.over(a, b)).collect();
                    ensure(els[h.biquandle.under(i, j)] == u && els[h.biquandle.over(i, j)] == o, || {
                        format!("pointwise operation mismatch at ({}, {})", i + 1, j + 1)
                    })?;
                }
            }
            ensure(h.biquandle.is_medial(), || "Hom-biquandle is not medial".into())?;
        }
    }
    Ok(())
}

/// A quandle map lifts to a biquandle map iff `f∘α_x = β_{f(x)}∘f`, and the
/// associated quandle of `Hom_B(X, Y)` is the lifting subquandle with
/// structure maps `β*_g(f)(x) = β_{g(x)}(f(x))`. All 225 ordered pairs of the
/// order-3 catalog.
pub fn check_lifting() -> Check {
    let all = catalog();
    let mut tested = 0;
    for (nx, x) in &all {
        for (ny, y) in &all {
            let sx = BiquandleStructure::extract(x).unwrap();
            let sy = BiquandleStructure::extract(y).unwrap();
            let lifts: Vec<Vec<usize>> = enumerate_quandle_homs(sx.base(), sy.base())
                .elements
                .into_iter()
                .filter(|f| lift_check(f, &sx, &sy))
                .collect();
            let homs = enumerate_biquandle_homs(x, y).elements;
            ensure(lifts == homs, || format!("({nx}, {ny}): lifting maps differ from biquandle homs"))?;
            if y.is_medial() {
                let r = hom_associated_quandle_check(x, y).map_err(|e| e.to_string())?;
                ensure(r.holds, || format!("({nx}, {ny}): {r}"))?;
            }
            tested += 1;
        }
    }
    ensure(tested == 225, || format!("{tested} pairs tested"))
}

/// Involutory and commutative targets give involutory and commutative
/// Hom-biquandles.
pub fn check_hom_inherits_identities() -> Check {
    let all = small_biquandles(3);
    let mut involutory = 0;
    for x in &all {
        for y in all.iter().filter(|y| y.is_medial()) {
            let h = hom_biquandle(x, y).unwrap().biquandle;
            if y.is_involutory() {
                involutory += 1;
                ensure(h.is_involutory(), || format!("Hom into involutory {} is not involutory", table_of(y)))?;
            }
            if y.is_commutative() {
                ensure(h.is_commutative(), || format!("Hom into commutative {} is not commutative", table_of(y)))?;
            }
        }
    }
    ensure(involutory > 0, || "no involutory target tested".into())
}

/// Constant-action targets give constant-action Hom-biquandles, witnessed by
/// postcomposition with `σ`.
pub fn check_hom_constant_action() -> Check {
    let all = small_biquandles(3);
    let mut seen = 0;
    for x in &all {
        for y in &all {
            let Some(sigma) = y.constant_action() else { continue };
            seen += 1;
            let h = hom_biquandle(x, y).unwrap();
            let star = h.biquandle.constant_action().ok_or_else(|| "Hom is not constant action".to_string())?;
            for (i, f) in h.homs.elements.iter().enumerate() {
                let sf: Vec<usize> = f.iter().map(|&v| sigma.apply(v)).collect();
                ensure(h.homs.elements[star.apply(i)] == sf, || format!("σ* differs from postcomposition at {}", i + 1))?;
            }
        }
    }
    ensure(seen > 0, || "no constant-action target tested".into())
}

/// `(h1∘h2)_* = h2_*∘h1_*`, `(h1∘h2)^* = h1^*∘h2^*`, identities go to
/// identities. Induced maps are memoised; each needs two Hom-biquandles.
pub fn check_functor_laws() -> Check {
    let all: Vec<FiniteBiquandle> = small_biquandles(3);
    let medial: Vec<usize> = (0..all.len()).filter(|&i| all[i].is_medial()).collect();
    let homs: Vec<Vec<Vec<Vec<usize>>>> =
        all.iter().map(|x| all.iter().map(|y| enumerate_biquandle_homs(x, y).elements).collect()).collect();
    let mut pre: HashMap<(usize, usize, Vec<usize>, usize), Vec<usize>> = HashMap::new();
    let mut post: HashMap<(usize, usize, Vec<usize>, usize), Vec<usize>> = HashMap::new();
    let mut pre_map = |x: usize, y: usize, h: &[usize], z: usize| -> Vec<usize> {
        pre.entry((x, y, h.to_vec(), z))
            .or_insert_with(|| precompose(h, &all[x], &all[y], &all[z]).unwrap().map)
            .clone()
    };
    for x in 0..all.len() {
        let id: Vec<usize> = (0..all[x].order()).collect();
        for &z in &medial {
            let m = pre_map(x, x, &id, z);
            ensure(m.iter().enumerate().all(|(i, &j)| i == j), || "precompose(id) is not the identity".into())?;
        }
    }
    let mut composed = 0;
    for x in 0..all.len() {
        for y in 0..all.len() {
            for h2 in homs[x][y].iter().take(3) {
                for w in 0..all.len() {
                    for h1 in homs[y][w].iter().take(3) {
                        let h12 = compose_maps(h1, h2);
                        for &z in medial.iter().take(4) {
                            let a = pre_map(x, w, &h12, z);
                            let p1 = pre_map(y, w, h1, z);
                            let p2 = pre_map(x, y, h2, z);
                            let b: Vec<usize> = p1.iter().map(|&i| p2[i]).collect();
                            ensure(a == b, || "(h1∘h2)_* ≠ h2_*∘h1_*".into())?;
                            composed += 1;
                        }
                    }
                }
            }
        }
    }
    let mut post_map = |a: usize, x: usize, y: usize, h: &[usize]| -> Vec<usize> {
        post.entry((a, x, h.to_vec(), y))
            .or_insert_with(|| postcompose(h, &all[a], &all[x], &all[y]).unwrap().map)
            .clone()
    };
    for &x in &medial {
        let id: Vec<usize> = (0..all[x].order()).collect();
        for a in 0..all.len() {
            let m = post_map(a, x, x, &id);
            ensure(m.iter().enumerate().all(|(i, &j)| i == j), || "postcompose(id) is not the identity".into())?;
        }
        for &y in &medial {
            for h2 in homs[x][y].iter().take(3) {
                for &w in &medial {
                    for h1 in homs[y][w].iter().take(3) {
                        let h12 = compose_maps(h1, h2);
                        for a in (0..all.len()).step_by(3) {
                            let c = post_map(a, x, w, &h12);
                            let p1 = post_map(a, y, w, h1);
                            let p2 = post_map(a, x, y, h2);
                            let b: Vec<usize> = p2.iter().map(|&i| p1[i]).collect();
                            ensure(c == b, || "(h1∘h2)^* ≠ h1^*∘h2^*".into())?;
                        }
                    }
                }
            }
        }
    }
    ensure(composed > 0, || "no composable chain tested".into())
}

/// `Hom_B(X, Y)` embeds in `Y^k` for a generating set of size `k`, and the
/// image is exactly the set of tuples that extend to a homomorphism.
pub fn check_power_embedding() -> Check {
    let all = small_biquandles(3);
    for x in &all {
        for y in all.iter().filter(|y| y.is_medial()) {
            let e = embed_into_power(x, y).map_err(|e| e.to_string())?;
            ensure(e.hom.biquandle.is_isomorphic(&e.image), || "image is not isomorphic to Hom".into())?;
            let mut extendable = Vec::new();
            let k = e.generators.len();
            let homs = enumerate_biquandle_homs(x, y).elements;
            for_each_tuple(y.order(), k, |t| {
                if homs.iter().any(|f| e.generators.iter().zip(t).all(|(&g, &v)| f[g] == v)) {
                    extendable.push(t.to_vec());
                }
            });
            let mut images = e.images.clone();
            images.sort();
            ensure(images == extendable, || "image differs from the extendable tuples".into())?;
        }
    }
    Ok(())
}

/// Constant action implies medial and 2-reductive; checked on every
/// bijection of a set of size ≤ 4.
pub fn check_constant_action_medial() -> Check {
    for n in 1..=4 {
        for p in permutations(n) {
            let t = OperationTable::from_fn(n, |x, _| p[x]);
            let b = FiniteBiquandle::new(t.clone(), t).map_err(|e| e.to_string())?;
            ensure(b.constant_action().is_some(), || "constant action not detected".into())?;
            ensure(b.is_medial(), || format!("constant action {p:?} is not medial"))?;
            ensure(b.is_two_reductive(), || format!("constant action {p:?} is not 2-reductive"))?;
        }
    }
    for b in small_biquandles(4).iter().filter(|b| b.is_constant_action()) {
        ensure(b.is_medial() && b.is_two_reductive(), || table_of(b))?;
    }
    Ok(())
}

/// 2-reductive implies medial.
pub fn check_two_reductive_medial() -> Check {
    let mut seen = 0;
    for b in small_biquandles(4).iter().chain(&y_biquandles()) {
        if b.is_two_reductive() {
            seen += 1;
            ensure(b.is_medial(), || format!("2-reductive but not medial: {}", table_of(b)))?;
        }
    }
    ensure(seen > 0, || "no 2-reductive biquandle found".into())
}

/// `|Hom_B(X, Y)| = |Hom_B(X/γ_X, Y)|` and `Hom_B(X, Y) ≅ Hom_B(X/γ_X, Y)` for
/// 2-reductive `Y`; `X/γ_X` is 2-reductive.
pub fn check_quotient_by_gamma() -> Check {
    let all = small_biquandles(3);
    for x in &all {
        let (xq, p) = two_reductive_quotient(x).map_err(|e| e.to_string())?;
        ensure(xq.is_two_reductive(), || "X/γ is not 2-reductive".into())?;
        ensure(x.is_hom_to(&xq, &p), || "projection is not a homomorphism".into())?;
        if x.is_two_reductive() {
            ensure(xq == *x, || "quotient of a 2-reductive biquandle is not X".into())?;
        }
        for y in all.iter().filter(|y| y.is_two_reductive()) {
            let (a, b) = (count_biquandle_homs(x, y), count_biquandle_homs(&xq, y));
            ensure(a == b, || format!("|Hom(X,Y)| = {a} but |Hom(X/γ,Y)| = {b}"))?;
            let (ha, hb) = (hom_biquandle(x, y).unwrap(), hom_biquandle(&xq, y).unwrap());
            ensure(ha.biquandle.is_isomorphic(&hb.biquandle), || "Hom-biquandles are not isomorphic".into())?;
        }
    }
    Ok(())
}

/// The two readings of structure equivalence give the same classes.
pub fn check_equivalences_agree() -> Check {
    for q in small_quandles(4).iter().chain(std::iter::once(&quandle_y())) {
        let iso = classify_structures(q).unwrap();
        let direct = classify_structures_direct(q);
        let a: Vec<(String, usize)> = iso.iter().map(|c| (c.representative.tuple_string(), c.size)).collect();
        let b: Vec<(String, usize)> = direct.iter().map(|(s, k)| (s.tuple_string(), *k)).collect();
        ensure(a == b, || format!("isomorphism classes {a:?} vs direct classes {b:?}"))?;
    }
    Ok(())
}

/// Associated quandles validate; automorphism groups are groups; returned
/// isomorphisms carry tables onto tables.
pub fn check_algebra_invariants() -> Check {
    for b in small_biquandles(3) {
        b.associated_quandle().map_err(|e| e.to_string())?;
    }
    let qs = small_quandles(4);
    for q in &qs {
        let g = q.automorphism_group();
        ensure(g.iter().any(|p| p.is_identity()), || "no identity automorphism".into())?;
        for a in &g {
            ensure(g.contains(&a.inverse()), || "automorphisms not closed under inverse".into())?;
            for b in &g {
                ensure(g.contains(&a.compose(b)), || "automorphisms not closed under composition".into())?;
            }
        }
        for p in permutations(q.order()) {
            let phi = Permutation::new(p).unwrap();
            let r = FiniteQuandle::new(q.table().relabel(&phi)).unwrap();
            let iso = q.isomorphism(&r).ok_or_else(|| "relabelled quandle not isomorphic".to_string())?;
            ensure(q.table().relabel(&iso) == *r.table(), || "isomorphism does not carry tables".into())?;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

pub fn all_maps_biquandle_homs(x: &FiniteBiquandle, y: &FiniteBiquandle) -> Vec<Vec<usize>> {
    let n = x.order();
    let mut out = Vec::new();
    for_each_tuple(y.order(), n, |f| {
        let ok = (0..n).all(|a| {
            (0..n).all(|b| f[x.under(a, b)] == y.under(f[a], f[b]) && f[x.over(a, b)] == y.over(f[a], f[b]))
        });
        if ok {
            out.push(f.to_vec());
        }
    });
    out
}

pub fn all_maps_quandle_homs(x: &FiniteQuandle, y: &FiniteQuandle) -> Vec<Vec<usize>> {
    let n = x.order();
    let mut out = Vec::new();
    for_each_tuple(y.order(), n, |f| {
        if (0..n).all(|a| (0..n).all(|b| f[x.op(a, b)] == y.op(f[a], f[b]))) {
            out.push(f.to_vec());
        }
    });
    out
}

pub fn check_hom_oracle() -> Check {
    let bs = small_biquandles(3);
    for x in &bs {
        for y in &bs {
            ensure(enumerate_biquandle_homs(x, y).elements == all_maps_biquandle_homs(x, y), || {
                format!("biquandle homs differ: {} → {}", table_of(x), table_of(y))
            })?;
        }
    }
    let qs = small_quandles(3);
    for x in &qs {
        for y in &qs {
            ensure(enumerate_quandle_homs(x, y).elements == all_maps_quandle_homs(x, y), || "quandle homs differ".into())?;
        }
    }
    Ok(())
}

/// Structures on `q` by filtering every tuple in `Aut(q)^n` against
/// conditions (1) and (2) evaluated directly.
pub fn brute_force_structures(q: &FiniteQuandle) -> Vec<Vec<Permutation>> {
    let n = q.order();
    let auts = q.automorphism_group();
    let mut out = Vec::new();
    for_each_tuple(auts.len(), n, |t| {
        let b = |y: usize| &auts[t[y]];
        let mut diag = vec![false; n];
        for y in 0..n {
            let v = b(y).apply(y);
            if diag[v] {
                return;
            }
            diag[v] = true;
        }
        for x in 0..n {
            for y in 0..n {
                let l = b(b(y).apply(q.op(x, y)));
                let r = b(b(x).apply(y));
                for z in 0..n {
                    if l.apply(b(y).apply(z)) != r.apply(b(x).apply(z)) {
                        return;
                    }
                }
            }
        }
        out.push(t.iter().map(|&i| auts[i].clone()).collect());
    });
    out
}

pub fn check_structure_oracle() -> Check {
    for q in small_quandles(4).iter().chain(std::iter::once(&quandle_y())) {
        let fast: Vec<Vec<Permutation>> = enumerate_structures(q).into_iter().map(|s| s.betas().to_vec()).collect();
        let slow = brute_force_structures(q);
        ensure(fast == slow, || format!("{} vs {} structures on {}", fast.len(), slow.len(), q.table().to_text()))?;
    }
    Ok(())
}

/// Semiarc colorings by brute force over all `n^(2k)` assignments, with the
/// crossing relations written out independently of the solver.
pub fn brute_force_biquandle_colorings(d: &KnotDiagram, z: &FiniteBiquandle) -> usize {
    let mut count = 0;
    for_each_tuple(z.order(), d.semiarc_count(), |c| {
        if d.crossings().iter().all(|x| crossing_holds(x, c, z)) {
            count += 1;
        }
    });
    count
}

fn crossing_holds(x: &Crossing, c: &[usize], z: &FiniteBiquandle) -> bool {
    // (under end, over end) on the input side, then the opposite ends
    let (a, b, a2, b2) = match x.sign {
        Sign::Positive => (x.under_in, x.over_out, x.under_out, x.over_in),
        Sign::Negative => (x.under_out, x.over_in, x.under_in, x.over_out),
    };
    c[a2] == z.under(c[a], c[b]) && c[b2] == z.over(c[b], c[a])
}

pub fn brute_force_quandle_colorings(d: &KnotDiagram, y: &FiniteQuandle) -> usize {
    let mut count = 0;
    for_each_tuple(y.order(), d.arc_count(), |c| {
        let ok = d.crossings().iter().all(|x| {
            let (i, o, out) = (c[d.arc_of(x.under_in)], c[d.arc_of(x.over_in)], c[d.arc_of(x.under_out)]);
            match x.sign {
                Sign::Positive => out == y.op(i, o),
                Sign::Negative => i == y.op(out, o),
            }
        });
        if ok {
            count += 1;
        }
    });
    count
}

pub fn small_diagrams() -> Vec<(String, KnotDiagram)> {
    biquandle_core::knots::fixture_table()
        .into_iter()
        .filter(|f| f.code.crossing_count() <= 3)
        .flat_map(|f| {
            let m = f.code.mirror();
            [(f.name.clone(), KnotDiagram::new(&f.code)), (format!("{} mirror", f.name), KnotDiagram::new(&m))]
        })
        .collect()
}

pub fn check_coloring_oracle() -> Check {
    let mut targets: Vec<FiniteBiquandle> = catalog().into_iter().map(|(_, b)| b).collect();
    targets.extend(y_biquandles());
    targets.extend(small_biquandles(2));
    let quandles: Vec<FiniteQuandle> = small_quandles(4);
    for (name, d) in small_diagrams() {
        for z in &targets {
            let (a, b) = (biquandle_colorings(&d, z, false).value, brute_force_biquandle_colorings(&d, z));
            ensure(a == b, || format!("{name}: solver {a}, brute force {b} for {}", table_of(z)))?;
        }
        for y in &quandles {
            let (a, b) = (quandle_colorings(&d, y, false).value, brute_force_quandle_colorings(&d, y));
            ensure(a == b, || format!("{name}: quandle solver {a}, brute force {b}"))?;
        }
    }
    Ok(())
}

/// All set partitions of `0..n` as label vectors in restricted growth form.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let next = cur.iter().max().map_or(0, |m| m + 1);
        for v in 0..=next {
            cur.push(v);
            go(cur, n, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

fn compatible(x: &FiniteBiquandle, p: &[usize]) -> bool {
    let n = x.order();
    (0..n).all(|a| {
        (0..n).all(|b| {
            p[a] != p[b]
                || (0..n).all(|c| {
                    p[x.under(a, c)] == p[x.under(b, c)]
                        && p[x.over(a, c)] == p[x.over(b, c)]
                        && p[x.under(c, a)] == p[x.under(c, b)]
                        && p[x.over(c, a)] == p[x.over(c, b)]
                })
        })
    })
}

/// The smallest congruence containing `pairs`, as the meet of every
/// congruence partition that contains them.
pub fn brute_force_closure(x: &FiniteBiquandle, pairs: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let n = x.order();
    let mut related = vec![vec![true; n]; n];
    for p in partitions(n) {
        if pairs.iter().all(|&(a, b)| p[a] == p[b]) && compatible(x, &p) {
            for a in 0..n {
                for b in 0..n {
                    related[a][b] &= p[a] == p[b];
                }
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        if !classes.iter().any(|c| c.contains(&a)) {
            classes.push((0..n).filter(|&b| related[a][b]).collect());
        }
    }
    classes
}

pub fn check_congruence_oracle() -> Check {
    let mut carriers: Vec<FiniteBiquandle> = small_biquandles(4);
    carriers.extend(y_biquandles());
    for x in &carriers {
        let n = x.order();
        let mut pair_sets: Vec<Vec<(usize, usize)>> = vec![vec![]];
        for a in 0..n {
            for b in a + 1..n {
                pair_sets.push(vec![(a, b)]);
                for c in 0..n {
                    for d in c + 1..n {
                        if (c, d) > (a, b) {
                            pair_sets.push(vec![(a, b), (c, d)]);
                        }
                    }
                }
            }
        }
        for pairs in &pair_sets {
            let fast: Congruence = congruence_closure(x, pairs);
            let slow = brute_force_closure(x, pairs);
            ensure(fast.classes() == slow, || format!("closure of {pairs:?}: {:?} vs {slow:?}", fast.classes()))?;
            let (q, _) = quotient_biquandle(x, &fast).map_err(|e| e.to_string())?;
            ensure(q.order() == slow.len(), || "quotient order".into())?;
        }
        let g = gamma(x);
        ensure(g.compatibility_report(x).holds, || "γ is not a congruence".into())?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Diagram invariance
// ---------------------------------------------------------------------------

/// Quandle count by `Y`, then biquandle counts by the structure classes on
/// `Y` and by the order-3 catalog.
pub fn invariant_vector(d: &KnotDiagram, targets: &[FiniteBiquandle]) -> Vec<usize> {
    let mut v = vec![quandle_colorings(d, &quandle_y(), false).value];
    v.extend(targets.iter().map(|z| biquandle_colorings(d, z, false).value));
    v
}

pub fn invariance_targets() -> Vec<FiniteBiquandle> {
    let mut t = y_biquandles();
    t.extend(catalog().into_iter().map(|(_, b)| b));
    t
}

/// Inserting a kink of any of the four kinds at any position leaves every
/// count unchanged, on every fixture.
pub fn check_kink_invariance() -> Check {
    let targets = invariance_targets();
    for f in biquandle_core::knots::fixture_table() {
        let want = invariant_vector(&KnotDiagram::new(&f.code), &targets);
        for pos in 0..=f.code.len() {
            for over_first in [true, false] {
                for sign in [Sign::Positive, Sign::Negative] {
                    let k = f.code.with_kink(pos, over_first, sign);
                    let got = invariant_vector(&KnotDiagram::new(&k), &targets);
                    ensure(got == want, || format!("{} with kink {k}: {got:?} vs {want:?}", f.name))?;
                }
            }
        }
    }
    Ok(())
}
