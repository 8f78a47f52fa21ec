//! Recomputes every reference value in [`crate::catalog`] and compares.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{self, KnotRow, Named};
use crate::error::Result;
use crate::homs::{count_biquandle_homs, count_quandle_homs, enumerate_biquandle_homs, hom_biquandle};
use crate::knots::colorings::structure_invariant_for;
use crate::knots::fixtures::{find_fixture, Fixture};
use crate::knots::{quandle_colorings, KnotDiagram};
use crate::perm::conjugacy_class_count;
use crate::quandle::FiniteQuandle;
use crate::structures::{classify_structures, count_constant_structures, BiquandleStructure};

/// Which mirror image of each fixture diagram is colored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Chirality {
    /// The code as stored.
    #[default]
    AsGiven,
    /// Every crossing sign flipped.
    Mirror,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Item {
    pub section: String,
    pub name: String,
    pub pass: bool,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub items: Vec<Item>,
}

impl Report {
    fn push(&mut self, section: &str, name: impl Into<String>, expected: impl ToString, actual: impl ToString) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        self.items.push(Item {
            section: section.into(),
            name: name.into(),
            pass: expected == actual,
            expected,
            actual,
        });
    }

    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn failures(&self) -> usize {
        self.items.iter().filter(|i| !i.pass).count()
    }

    /// One line per item; failing items show expected and actual values.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for i in &self.items {
            if i.pass {
                let _ = writeln!(s, "PASS [{}] {}: {}", i.section, i.name, i.actual);
            } else {
                let _ = writeln!(
                    s,
                    "FAIL [{}] {}: expected {}, got {}",
                    i.section, i.name, i.expected, i.actual
                );
            }
        }
        let _ = writeln!(
            s,
            "{} items, {} passed, {} failed",
            self.items.len(),
            self.items.len() - self.failures(),
            self.failures()
        );
        s
    }
}

fn list(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn sorted(v: &[usize]) -> Vec<usize> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

/// Whether the listed tuples lie in pairwise distinct classes that together
/// cover every class.
pub fn listed_cover_classes(q: &FiniteQuandle, listed: &[Vec<&str>]) -> Result<bool> {
    let classes = classify_structures(q)?;
    let mut hit = vec![false; classes.len()];
    for maps in listed {
        let b = BiquandleStructure::from_cycles(q.clone(), maps)?.induce()?;
        let Some(i) = classes.iter().position(|c| c.induced.is_isomorphic(&b)) else {
            return Ok(false);
        };
        if hit[i] {
            return Ok(false);
        }
        hit[i] = true;
    }
    Ok(hit.iter().all(|&h| h))
}

fn census(r: &mut Report) -> Result<()> {
    for (name, q, expected) in catalog::census_expectations() {
        r.push("census", format!("structure classes on {name}"), expected, classify_structures(&q)?.len());
    }
    let as_vec = |l: &[[&'static str; 3]]| l.iter().map(|m| m.to_vec()).collect::<Vec<_>>();
    let o2: Vec<Vec<&str>> = catalog::ORDER2_STRUCTURES.iter().map(|m| m.to_vec()).collect();
    let checks = [
        ("trivial order 2", crate::constructors::trivial_quandle(2), o2),
        ("order 3 (a)", catalog::quandle_a(), as_vec(&catalog::A_STRUCTURES)),
        ("order 3 (b)", catalog::quandle_b(), as_vec(&catalog::B_STRUCTURES)),
        ("order 3 (c)", catalog::quandle_c(), as_vec(&catalog::C_STRUCTURES)),
    ];
    for (name, q, listed) in checks {
        r.push(
            "census",
            format!("listed representatives on {name}"),
            "one per class",
            if listed_cover_classes(&q, &listed)? { "one per class" } else { "mismatch" },
        );
    }
    for (name, q, expected) in catalog::constant_expectations() {
        let count = count_constant_structures(&q)?;
        r.push("constant", format!("constant structures on {name}"), expected, count);
        r.push(
            "constant",
            format!("conjugacy classes of Aut on {name}"),
            expected,
            conjugacy_class_count(&q.automorphism_group())?,
        );
    }
    Ok(())
}

fn knot_rows(
    r: &mut Report,
    section: &str,
    rows: &[KnotRow],
    fixtures: &[Fixture],
    chirality: Chirality,
) -> Result<()> {
    let y = catalog::quandle_y();
    let classes: Vec<_> = classify_structures(&y)?
        .into_iter()
        .map(|c| (c.representative, c.induced))
        .collect();
    for row in rows {
        let f = find_fixture(fixtures, row.name)?;
        let code = match chirality {
            Chirality::AsGiven => f.code.clone(),
            Chirality::Mirror => f.code.mirror(),
        };
        let d = KnotDiagram::new(&code);
        r.push(section, format!("{} quandle count", row.name), row.quandle, quandle_colorings(&d, &y, false).value);
        let inv = structure_invariant_for(&d, &classes)?;
        r.push(
            section,
            format!("{} structure counts (multiset)", row.name),
            list(&sorted(&row.structures)),
            list(&inv.multiset()),
        );
    }
    Ok(())
}

fn hom_tables(r: &mut Report) -> Result<()> {
    let all = catalog::order3_biquandles();
    let rows: Vec<Vec<usize>> = all
        .par_iter()
        .map(|x| all.iter().map(|y| count_biquandle_homs(&x.biquandle, &y.biquandle)).collect())
        .collect();
    for (i, x) in all.iter().enumerate() {
        r.push("hom_b", format!("row {}", x.name), list(&catalog::HOM_B_COUNTS[i]), list(&rows[i]));
    }
    let qs = [catalog::quandle_a(), catalog::quandle_b(), catalog::quandle_c()];
    for (i, name) in ["a", "b", "c"].iter().enumerate() {
        let row: Vec<usize> = qs.iter().map(|q| count_quandle_homs(&qs[i], q)).collect();
        r.push("hom_q", format!("row {name}"), list(&catalog::HOM_Q_COUNTS[i]), list(&row));
    }
    Ok(())
}

fn one_based(v: &[Vec<usize>]) -> String {
    let parts: Vec<String> = v
        .iter()
        .map(|f| {
            let s: Vec<String> = f.iter().map(|x| (x + 1).to_string()).collect();
            format!("({})", s.join(","))
        })
        .collect();
    format!("{{{}}}", parts.join(","))
}

fn hom_claims(r: &mut Report) -> Result<()> {
    let get = |n: &str| -> Named { catalog::order3_by_name(n).expect("catalog name") };
    let (b2, a3) = (get("B2").biquandle, get("A3").biquandle);
    let expected = |l: &[[usize; 3]; 3]| {
        one_based(&l.iter().map(|f| f.iter().map(|x| x - 1).collect()).collect::<Vec<_>>())
    };
    let hbb = enumerate_biquandle_homs(&b2, &b2);
    let hba = enumerate_biquandle_homs(&b2, &a3);
    r.push("hom_claims", "Hom_B(B2,B2)", expected(&catalog::HOM_B2_B2), one_based(&hbb.elements));
    r.push("hom_claims", "Hom_B(B2,A3)", expected(&catalog::HOM_B2_A3), one_based(&hba.elements));
    let obj_bb = hom_biquandle(&b2, &b2)?.biquandle;
    let obj_ba = hom_biquandle(&b2, &a3)?.biquandle;
    let yes = |b: bool| if b { "isomorphic" } else { "not isomorphic" };
    r.push("hom_claims", "Hom_B(B2,B2) vs B2", "isomorphic", yes(obj_bb.is_isomorphic(&b2)));
    r.push("hom_claims", "Hom_B(B2,A3) vs A3", "isomorphic", yes(obj_ba.is_isomorphic(&a3)));
    r.push("hom_claims", "Hom_B(B2,B2) vs Hom_B(B2,A3)", "not isomorphic", yes(obj_bb.is_isomorphic(&obj_ba)));
    Ok(())
}

/// Runs every comparison using `fixtures` for the knot diagrams.
pub fn reproduce(fixtures: &[Fixture], chirality: Chirality) -> Result<Report> {
    let mut r = Report::default();
    census(&mut r)?;
    knot_rows(&mut r, "classical", &catalog::CLASSICAL_ROWS, fixtures, chirality)?;
    knot_rows(&mut r, "virtual", &catalog::VIRTUAL_ROWS, fixtures, chirality)?;
    hom_tables(&mut r)?;
    hom_claims(&mut r)?;
    Ok(r)
}
