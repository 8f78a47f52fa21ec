use std::path::{Path, PathBuf};

use biquandle_core::congruence::{congruence_closure, gamma, quotient_biquandle};
use biquandle_core::homs::{enumerate_biquandle_homs, enumerate_quandle_homs, hom_biquandle, hom_quandle, HomSet};
use biquandle_core::knots::colorings::{biquandle_colorings, quandle_colorings, ColoringCount};
use biquandle_core::knots::fixtures::{find_fixture, parse_fixtures};
use biquandle_core::knots::{fixture_table, Fixture, GaussCode, KnotDiagram};
use biquandle_core::reproduce::{reproduce, Chirality};
use biquandle_core::structures::{classify_structures, classify_structures_direct, count_constant_structures, validate_structure};
use biquandle_core::{
    validate_biquandle, validate_quandle, BiquandleStructure, Error as CoreError, FiniteBiquandle, FiniteQuandle,
    Permutation, PropertyReport,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{CliError, CliResult, EXIT_AXIOM};
use crate::input::{load, load_biquandle, load_quandle, load_structure, read_raw, Algebra, Kind, Raw};
use crate::output::{one_based, put_biquandle, put_table_rows, rows_json, vector, yes_no, Output};
use crate::{Command, Mode};

pub fn run(cmd: &Command) -> CliResult<(Output, u8)> {
    match cmd {
        Command::Check { path, kind } => check(path, *kind),
        Command::Structures { path, direct } => structures(path, *direct).map(ok),
        Command::Induce { path } => induce(path).map(ok),
        Command::Assoc { path } => assoc(path).map(ok),
        Command::Color { diagram, target, mode, list, mirror, fixtures } => {
            color(diagram, target, *mode, *list, *mirror, fixtures.as_deref()).map(ok)
        }
        Command::Hom { all_pairs: Some(dir), .. } => hom_all_pairs(dir).map(ok),
        Command::Hom { source, target, table, list, .. } => {
            let (s, t) = (source.as_deref().expect("required"), target.as_deref().expect("required"));
            hom(s, t, *table, *list).map(ok)
        }
        Command::Quotient { path, pairs, two_reductive: _ } => quotient(path, pairs.as_deref()).map(ok),
        Command::Fixtures { name, file } => fixtures(name.as_deref(), file.as_deref()).map(ok),
        Command::Reproduce { fixtures, mirror } => run_reproduce(fixtures.as_deref(), *mirror),
    }
}

fn ok(out: Output) -> (Output, u8) {
    (out, 0)
}

fn stem(p: &Path) -> String {
    p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| p.display().to_string())
}

fn witness_string(w: &Option<Vec<usize>>) -> String {
    w.as_ref()
        .map(|w| format!("({})", w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        .unwrap_or_default()
}

struct Panel<'a> {
    out: &'a mut Output,
    props: serde_json::Map<String, Value>,
}

impl Panel<'_> {
    fn add(&mut self, name: &str, holds: bool, witness: Option<Vec<usize>>) {
        let w = witness_string(&witness);
        self.props.insert(name.into(), json!({ "holds": holds, "witness": witness }));
        self.out.row(vec![name.into(), holds.to_string(), w.clone()]);
        if w.is_empty() {
            self.out.line(format!("{name}: {}", yes_no(holds)));
        } else {
            self.out.line(format!("{name}: {} (witness {w})", yes_no(holds)));
        }
    }

    fn report(&mut self, name: &str, r: &PropertyReport) {
        self.add(name, r.holds, r.witness.clone());
    }

    fn finish(self) {
        self.out.set("properties", Value::Object(self.props));
    }
}

/// Records the axiom check; returns whether it passed.
fn axioms(out: &mut Output, kind: &str, r: &PropertyReport) -> bool {
    out.set("kind", kind);
    out.set("valid", r.holds);
    out.set("axioms", json!({ "failed": (!r.holds).then(|| r.property.clone()), "witness": r.witness }));
    out.row(vec![kind.into(), r.holds.to_string(), witness_string(&r.witness)]);
    if r.holds {
        out.line(format!("{kind}: valid"));
    } else {
        out.line(format!("{kind}: invalid, {r}"));
    }
    r.holds
}

fn quandle_panel(out: &mut Output, q: &FiniteQuandle) {
    let mut p = Panel { out, props: Default::default() };
    p.report("medial", &q.medial_report());
    p.report("commutative", &q.commutative_report());
    p.add("connected", q.is_connected(), None);
    p.add("trivial", q.is_trivial(), None);
    p.finish();
}

fn biquandle_panel(out: &mut Output, b: &FiniteBiquandle) {
    let mut p = Panel { out, props: Default::default() };
    p.report("medial", &b.medial_report());
    p.report("commutative", &b.commutative_report());
    p.add("connected", b.is_connected(), None);
    p.report("involutory", &b.involutory_report());
    p.add("constant-action", b.is_constant_action(), None);
    p.report("2-reductive", &b.two_reductive_report());
    p.add("operations coincide", b.operations_coincide(), None);
    p.finish();
    if let Some(s) = b.constant_action() {
        out.set("constant_action_map", s.to_cycle_string());
        out.line(format!("constant action map: {}", s.to_cycle_string()));
    }
}

fn check(path: &Path, kind: Option<Kind>) -> CliResult<(Output, u8)> {
    let raw = read_raw(path)?;
    if let Some(k) = kind {
        if k != raw.kind() {
            let msg = format!("file holds a {}, not a {}", raw.kind().name(), k.name());
            return Err(CliError::Usage(msg).in_file(path));
        }
    }
    let mut out = Output::new("check");
    out.columns(&["property", "holds", "witness"]);
    out.set("order", match &raw {
        Raw::Quandle(t) | Raw::Biquandle(t, _) | Raw::Structure(t, _) => t.order(),
    });
    let valid = match raw {
        Raw::Quandle(t) => {
            let ok = axioms(&mut out, "quandle", &validate_quandle(&t));
            if ok {
                quandle_panel(&mut out, &FiniteQuandle::new(t)?);
            }
            ok
        }
        Raw::Biquandle(u, o) => {
            let r = validate_biquandle(&u, &o).map_err(|e| CliError::from(e).in_file(path))?;
            let ok = axioms(&mut out, "biquandle", &r);
            if ok {
                biquandle_panel(&mut out, &FiniteBiquandle::new(u, o)?);
            }
            ok
        }
        Raw::Structure(t, maps) => {
            let r = validate_quandle(&t);
            if !r.holds {
                axioms(&mut out, "structure", &PropertyReport { property: format!("base quandle {}", r.property), ..r })
            } else {
                let q = FiniteQuandle::new(t)?;
                let betas = maps
                    .iter()
                    .map(|m| Permutation::parse_cycles(m, q.order()))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| CliError::from(e).in_file(path))?;
                let r = validate_structure(&q, &betas).map_err(|e| CliError::from(e).in_file(path))?;
                let ok = axioms(&mut out, "structure", &r);
                if ok {
                    let s = BiquandleStructure::new(q, betas)?;
                    out.line("induced biquandle:");
                    biquandle_panel(&mut out, &s.induce()?);
                }
                ok
            }
        }
    };
    Ok((out, if valid { 0 } else { EXIT_AXIOM }))
}

fn structures(path: &Path, direct: bool) -> CliResult<Output> {
    let q = load_quandle(path)?;
    let classes: Vec<(BiquandleStructure, usize)> = if direct {
        classify_structures_direct(&q)
    } else {
        classify_structures(&q)?.into_iter().map(|c| (c.representative, c.size)).collect()
    };
    let total: usize = classes.iter().map(|c| c.1).sum();
    let constant = count_constant_structures(&q)?;
    let auts = q.automorphism_group().len();

    let mut out = Output::new("structures");
    out.set("order", q.order())
        .set("automorphisms", auts)
        .set("equivalence", if direct { "conjugation" } else { "isomorphism" })
        .set("class_count", classes.len())
        .set("structure_count", total)
        .set("constant_structures", constant);
    out.line(format!("quandle of order {}, |Aut| = {auts}", q.order()));
    out.line(format!("{} classes of biquandle structures ({total} structures)", classes.len()));
    out.columns(&["class", "maps", "size", "constant"]);
    let mut list = Vec::new();
    for (i, (s, size)) in classes.iter().enumerate() {
        let maps: Vec<String> = s.betas().iter().map(|b| b.to_cycle_string()).collect();
        list.push(json!({ "maps": maps, "tuple": s.tuple_string(), "size": size, "constant": s.is_constant() }));
        out.row(vec![(i + 1).to_string(), s.tuple_string(), size.to_string(), s.is_constant().to_string()]);
        out.line(format!("{:>3}. {}  size {size}{}", i + 1, s.tuple_string(), if s.is_constant() { ", constant" } else { "" }));
    }
    out.set("classes", list);
    out.line(format!("constant structures: {constant}"));
    Ok(out)
}

fn induce(path: &Path) -> CliResult<Output> {
    let s = load_structure(path)?;
    let b = s.induce()?;
    let mut out = Output::new("induce");
    put_biquandle(&mut out, &b);
    out.line(format!("# biquandle induced by {}", s.tuple_string()));
    out.text.push_str(&b.to_text());
    Ok(out)
}

fn assoc(path: &Path) -> CliResult<Output> {
    let b = load_biquandle(path)?;
    let s = BiquandleStructure::extract(&b)?;
    let maps: Vec<String> = s.betas().iter().map(|p| p.to_cycle_string()).collect();
    let mut out = Output::new("assoc");
    out.set("kind", "structure")
        .set("order", b.order())
        .set("quandle", rows_json(s.base().table()))
        .set("betas", maps.clone())
        .set("tuple", s.tuple_string());
    out.columns(&["operation", "x", "y", "value"]);
    put_table_rows(&mut out, "quandle", s.base().table());
    for (y, m) in maps.iter().enumerate() {
        out.row(vec!["beta".into(), (y + 1).to_string(), String::new(), m.clone()]);
    }
    out.line(format!("# associated quandle and structure maps {}", s.tuple_string()));
    out.text.push_str(&s.to_text());
    Ok(out)
}

fn looks_like_code(s: &str) -> bool {
    let t = s.trim();
    t.starts_with(['O', 'U']) && t.chars().all(|c| "OU+- \t0123456789".contains(c))
}

/// Resolves a fixture name, falling back to reading the argument as a code.
fn diagram(arg: &str, file: Option<&Path>, mirror: bool) -> CliResult<(String, GaussCode)> {
    let table = fixture_source(file)?;
    let code = match find_fixture(&table, arg) {
        Ok(f) => f.code,
        Err(CoreError::UnknownFixture { .. }) if looks_like_code(arg) => GaussCode::parse(arg)?,
        Err(e) => return Err(e.into()),
    };
    let name = if mirror { format!("{arg} (mirror)") } else { arg.to_string() };
    Ok((name, if mirror { code.mirror() } else { code }))
}

fn fixture_source(file: Option<&Path>) -> CliResult<Vec<Fixture>> {
    match file {
        None => Ok(fixture_table()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|source| CliError::Io {
                path: p.to_path_buf(),
                source,
            })?;
            parse_fixtures(&text).map_err(|e| CliError::from(e).in_file(p))
        }
    }
}

fn colorings_json(c: &ColoringCount) -> Value {
    c.colorings.as_ref().map(|l| json!(one_based(l))).unwrap_or(Value::Null)
}

fn list_lines(out: &mut Output, c: &ColoringCount, indent: &str) {
    for col in c.colorings.iter().flatten() {
        out.line(format!("{indent}{}", vector(col)));
    }
}

fn color(arg: &str, target: &Path, mode: Mode, list: bool, mirror: bool, file: Option<&Path>) -> CliResult<Output> {
    let (name, code) = diagram(arg, file, mirror)?;
    let d = KnotDiagram::new(&code);
    let mut out = Output::new("color");
    out.set("diagram", name.clone())
        .set("code", code.to_string())
        .set("crossings", code.crossing_count())
        .set("planar", d.is_planar());
    out.line(format!("diagram {name}: {} crossings, {}", code.crossing_count(), if d.is_planar() { "classical" } else { "virtual" }));
    match mode {
        Mode::Quandle | Mode::Biquandle => {
            let (c, what, colored) = if mode == Mode::Quandle {
                (quandle_colorings(&d, &load_quandle(target)?, list), "quandle", "arcs")
            } else {
                (biquandle_colorings(&d, &load_biquandle(target)?, list), "biquandle", "semiarcs")
            };
            out.set("mode", what).set("count", c.value);
            if list {
                out.set("colored", colored).set("colorings", colorings_json(&c));
            }
            out.columns(&["diagram", "mode", "count"]).row(vec![name, what.into(), c.value.to_string()]);
            out.line(format!("{what} colorings: {}", c.value));
            list_lines(&mut out, &c, "  ");
        }
        Mode::Tuple => {
            let y = load_quandle(target)?;
            let qc = quandle_colorings(&d, &y, false).value;
            let classes = classify_structures(&y)?;
            let counts: Vec<ColoringCount> = classes.par_iter().map(|c| biquandle_colorings(&d, &c.induced, list)).collect();
            let mut multiset: Vec<usize> = counts.iter().map(|c| c.value).collect();
            multiset.sort_unstable();
            let entries: Vec<Value> = classes
                .iter()
                .zip(&counts)
                .map(|(cl, c)| {
                    let mut e = json!({ "tuple": cl.representative.tuple_string(), "count": c.value });
                    if list {
                        e["colorings"] = colorings_json(c);
                    }
                    e
                })
                .collect();
            out.set("mode", "tuple")
                .set("quandle_count", qc)
                .set("structures", entries)
                .set("counts", counts.iter().map(|c| c.value).collect::<Vec<_>>())
                .set("multiset", multiset.clone());
            out.columns(&["diagram", "structure", "count"]);
            out.row(vec![name.clone(), "quandle".into(), qc.to_string()]);
            out.line(format!("quandle colorings: {qc}"));
            for (cl, c) in classes.iter().zip(&counts) {
                let t = cl.representative.tuple_string();
                out.row(vec![name.clone(), t.clone(), c.value.to_string()]);
                out.line(format!("  {t}: {}", c.value));
                list_lines(&mut out, c, "    ");
            }
            let m: Vec<String> = multiset.iter().map(|v| v.to_string()).collect();
            out.line(format!("multiset: {{{}}}", m.join(",")));
        }
    }
    Ok(out)
}

enum Pair {
    Quandles(FiniteQuandle, FiniteQuandle),
    Biquandles(FiniteBiquandle, FiniteBiquandle),
}

fn pair(source: &Path, target: &Path) -> CliResult<Pair> {
    let (a, b) = (load(source)?, load(target)?);
    match (a.is_quandle(), b.is_quandle()) {
        (true, true) => Ok(Pair::Quandles(a.into_quandle()?, b.into_quandle()?)),
        (false, false) => Ok(Pair::Biquandles(a.into_biquandle()?, b.into_biquandle()?)),
        _ => Err(CliError::Usage("source and target must both be quandles or both be biquandles".into())),
    }
}

fn non_medial(target: &Path, e: CoreError) -> CliError {
    match e {
        CoreError::NonMedialTarget => CliError::NonMedial(format!(
            "{}: the target is not medial, so Hom has no pointwise (bi)quandle structure; omit --table to count only",
            target.display()
        )),
        e => e.into(),
    }
}

fn hom(source: &Path, target: &Path, table: bool, list: bool) -> CliResult<Output> {
    let (sn, tn) = (stem(source), stem(target));
    let mut out = Output::new("hom");
    let (label, homs, object_text): (&str, HomSet, Option<String>) = match pair(source, target)? {
        Pair::Quandles(x, y) => {
            if table {
                let h = hom_quandle(&x, &y).map_err(|e| non_medial(target, e))?;
                out.set("kind", "quandle").set("order", h.homs.len()).set("table", rows_json(h.quandle.table()));
                ("Hom_Q", h.homs.clone(), Some(h.to_text()))
            } else {
                ("Hom_Q", enumerate_quandle_homs(&x, &y), None)
            }
        }
        Pair::Biquandles(x, y) => {
            if table {
                let h = hom_biquandle(&x, &y).map_err(|e| non_medial(target, e))?;
                out.set("kind", "biquandle")
                    .set("order", h.homs.len())
                    .set("under", rows_json(h.biquandle.under_table()))
                    .set("over", rows_json(h.biquandle.over_table()));
                ("Hom_B", h.homs.clone(), Some(h.to_text()))
            } else {
                ("Hom_B", enumerate_biquandle_homs(&x, &y), None)
            }
        }
    };
    out.set("category", if label == "Hom_Q" { "quandle" } else { "biquandle" })
        .set("source", sn.clone())
        .set("target", tn.clone())
        .set("count", homs.len());
    if list || table {
        out.set("homs", one_based(&homs.elements));
    }
    out.columns(&["source", "target", "count"]).row(vec![sn.clone(), tn.clone(), homs.len().to_string()]);
    let prefix = if table { "# " } else { "" };
    out.line(format!("{prefix}|{label}({sn}, {tn})| = {}", homs.len()));
    if list && !table {
        for f in &homs.elements {
            out.line(vector(f));
        }
    }
    if let Some(t) = object_text {
        out.text.push_str(&t);
    }
    Ok(out)
}

fn hom_all_pairs(dir: &Path) -> CliResult<Output> {
    let rd = std::fs::read_dir(dir).map_err(|source| CliError::Io { path: dir.to_path_buf(), source })?;
    let mut paths: Vec<PathBuf> = rd
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && !p.file_name().is_some_and(|n| n.to_string_lossy().starts_with('.')))
        .collect();
    paths.sort_by(|a, b| a.file_name().cmp(&b.file_name()));
    if paths.is_empty() {
        return Err(CliError::Usage(format!("{}: no input files", dir.display())));
    }
    let algebras: Vec<Algebra> = paths.iter().map(|p| load(p)).collect::<CliResult<_>>()?;
    let names: Vec<String> = paths.iter().map(|p| stem(p)).collect();
    let quandles = algebras.iter().all(Algebra::is_quandle);
    if !quandles && algebras.iter().any(Algebra::is_quandle) {
        return Err(CliError::Usage(format!("{}: mixes quandles with biquandles", dir.display())));
    }
    let matrix: Vec<Vec<usize>> = if quandles {
        let qs: Vec<FiniteQuandle> = algebras.into_iter().map(|a| a.into_quandle()).collect::<CliResult<_>>()?;
        qs.par_iter().map(|x| qs.iter().map(|y| enumerate_quandle_homs(x, y).len()).collect()).collect()
    } else {
        let bs: Vec<FiniteBiquandle> = algebras.into_iter().map(|a| a.into_biquandle()).collect::<CliResult<_>>()?;
        bs.par_iter().map(|x| bs.iter().map(|y| enumerate_biquandle_homs(x, y).len()).collect()).collect()
    };
    let mut out = Output::new("hom");
    out.set("category", if quandles { "quandle" } else { "biquandle" })
        .set("names", names.clone())
        .set("matrix", matrix.clone());
    let mut header = vec!["source"];
    header.extend(names.iter().map(String::as_str));
    out.columns(&header);
    let width = names.iter().map(String::len).chain(std::iter::once(3)).max().unwrap_or(3);
    let mut head = format!("{:>width$}", "");
    for n in &names {
        head.push_str(&format!(" {n:>width$}"));
    }
    out.line(head.trim_end());
    for (n, row) in names.iter().zip(&matrix) {
        let mut cells = vec![n.clone()];
        cells.extend(row.iter().map(|v| v.to_string()));
        out.row(cells);
        let mut line = format!("{n:>width$}");
        for v in row {
            line.push_str(&format!(" {v:>width$}"));
        }
        out.line(line);
    }
    Ok(out)
}

fn parse_pairs(text: &str, n: usize) -> CliResult<Vec<(usize, usize)>> {
    let bad = |p: &str| CliError::Usage(format!("bad pair `{p}`; expected a=b with 1 <= a, b <= {n}"));
    text.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            let (a, b) = p.split_once('=').ok_or_else(|| bad(p))?;
            let parse = |s: &str| s.trim().parse::<usize>().ok().filter(|&v| (1..=n).contains(&v));
            match (parse(a), parse(b)) {
                (Some(a), Some(b)) => Ok((a - 1, b - 1)),
                _ => Err(bad(p)),
            }
        })
        .collect()
}

fn quotient(path: &Path, pairs: Option<&str>) -> CliResult<Output> {
    let b = load_biquandle(path)?;
    let c = match pairs {
        Some(p) => congruence_closure(&b, &parse_pairs(p, b.order())?),
        None => gamma(&b),
    };
    let (q, proj) = quotient_biquandle(&b, &c)?;
    let classes = one_based(&c.classes());
    let mut out = Output::new("quotient");
    put_biquandle(&mut out, &q);
    out.set("classes", classes.clone()).set("projection", proj.iter().map(|v| v + 1).collect::<Vec<_>>());
    let cl: Vec<String> = classes
        .iter()
        .map(|c| format!("{{{}}}", c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    out.line(format!("# classes: {}", cl.join(" ")));
    out.line(format!("# projection: {}", vector(&proj)));
    out.text.push_str(&q.to_text());
    Ok(out)
}

fn fixtures(name: Option<&str>, file: Option<&Path>) -> CliResult<Output> {
    let table = fixture_source(file)?;
    let chosen = match name {
        Some(n) => vec![find_fixture(&table, n)?],
        None => table,
    };
    let mut out = Output::new("fixtures");
    out.columns(&["name", "code", "crossings", "planar"]);
    let mut list = Vec::new();
    let width = chosen.iter().map(|f| f.name.len()).max().unwrap_or(0);
    for f in &chosen {
        let planar = KnotDiagram::new(&f.code).is_planar();
        let code = f.code.to_string();
        list.push(json!({ "name": f.name, "code": code, "crossings": f.code.crossing_count(), "planar": planar }));
        out.row(vec![f.name.clone(), code.clone(), f.code.crossing_count().to_string(), planar.to_string()]);
        let line = format!(
            "{:<width$}  {:<2} crossings, {:<9}  {code}",
            f.name,
            f.code.crossing_count(),
            if planar { "classical" } else { "virtual" }
        );
        out.line(line.trim_end());
    }
    out.set("fixtures", list);
    Ok(out)
}

fn run_reproduce(file: Option<&Path>, mirror: bool) -> CliResult<(Output, u8)> {
    let table = fixture_source(file)?;
    let chirality = if mirror { Chirality::Mirror } else { Chirality::AsGiven };
    let report = reproduce(&table, chirality)?;
    let mut out = Output::new("reproduce");
    out.set("chirality", serde_json::to_value(chirality).map_err(|e| CliError::Json(e.to_string()))?)
        .set("items", serde_json::to_value(&report.items).map_err(|e| CliError::Json(e.to_string()))?)
        .set("passed", report.items.len() - report.failures())
        .set("failed", report.failures());
    out.columns(&["section", "item", "pass", "expected", "actual"]);
    for i in &report.items {
        out.row(vec![i.section.clone(), i.name.clone(), i.pass.to_string(), i.expected.clone(), i.actual.clone()]);
    }
    out.text = report.to_text();
    Ok((out, if report.all_pass() { 0 } else { EXIT_AXIOM }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_syntax() {
        assert_eq!(parse_pairs("1=2, 3=1", 3).unwrap(), vec![(0, 1), (2, 0)]);
        assert!(parse_pairs("1-2", 3).is_err());
        assert!(parse_pairs("1=4", 3).is_err());
        assert!(parse_pairs("0=1", 3).is_err());
    }

    #[test]
    fn code_detection() {
        assert!(looks_like_code("O1+U1+"));
        assert!(looks_like_code("O1- U2- O3-"));
        assert!(!looks_like_code("unknot"));
        assert!(!looks_like_code("9_42"));
    }
}
