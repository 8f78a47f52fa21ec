//! Reads quandles, biquandles and structures from the plain table format or
//! from the JSON objects the CLI itself prints.

use std::path::Path;

use biquandle_core::table::{parse_table, parse_tables};
use biquandle_core::{BiquandleStructure, FiniteBiquandle, FiniteQuandle, OperationTable, Permutation};
use serde::Deserialize;

use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    Quandle,
    Biquandle,
    Structure,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Quandle => "quandle",
            Kind::Biquandle => "biquandle",
            Kind::Structure => "structure",
        }
    }
}

/// Parsed tables, not yet checked against any axioms.
#[derive(Clone, Debug)]
pub enum Raw {
    Quandle(OperationTable),
    Biquandle(OperationTable, OperationTable),
    Structure(OperationTable, Vec<String>),
}

impl Raw {
    pub fn kind(&self) -> Kind {
        match self {
            Raw::Quandle(_) => Kind::Quandle,
            Raw::Biquandle(..) => Kind::Biquandle,
            Raw::Structure(..) => Kind::Structure,
        }
    }
}

#[derive(Deserialize)]
struct JsonInput {
    kind: Option<String>,
    table: Option<Vec<Vec<usize>>>,
    under: Option<Vec<Vec<usize>>>,
    over: Option<Vec<Vec<usize>>>,
    quandle: Option<Vec<Vec<usize>>>,
    betas: Option<Vec<String>>,
}

fn missing(field: &str, kind: &str) -> CliError {
    CliError::Json(format!("a {kind} object needs a `{field}` field"))
}

fn parse_json(text: &str) -> CliResult<Raw> {
    let j: JsonInput = serde_json::from_str(text).map_err(|e| CliError::Json(format!("invalid JSON: {e}")))?;
    let kind = match j.kind.as_deref() {
        Some(k) => k.to_string(),
        None if j.under.is_some() || j.over.is_some() => "biquandle".into(),
        None if j.betas.is_some() => "structure".into(),
        None if j.table.is_some() => "quandle".into(),
        None => return Err(CliError::Json("JSON input has no table fields".into())),
    };
    let table = |rows: Option<Vec<Vec<usize>>>, field: &str| -> CliResult<OperationTable> {
        let rows = rows.ok_or_else(|| missing(field, &kind))?;
        Ok(OperationTable::from_one_based(&rows)?)
    };
    match kind.as_str() {
        "quandle" => Ok(Raw::Quandle(table(j.table, "table")?)),
        "biquandle" => Ok(Raw::Biquandle(table(j.under, "under")?, table(j.over, "over")?)),
        "structure" => {
            let betas = j.betas.ok_or_else(|| missing("betas", "structure"))?;
            Ok(Raw::Structure(table(j.quandle, "quandle")?, betas))
        }
        other => Err(CliError::Json(format!("unknown kind `{other}`"))),
    }
}

/// Blank-line separated blocks with comment lines dropped.
fn blocks(text: &str) -> Vec<Vec<&str>> {
    let mut out = vec![Vec::new()];
    for line in text.lines().map(str::trim).filter(|l| !l.starts_with('#')) {
        if line.is_empty() {
            out.push(Vec::new());
        } else {
            out.last_mut().expect("nonempty").push(line);
        }
    }
    out.retain(|b| !b.is_empty());
    out
}

fn parse_text(text: &str) -> CliResult<Raw> {
    let bl = blocks(text);
    match bl.len() {
        1 => Ok(Raw::Quandle(parse_table(text)?)),
        2 if bl[1][0].parse::<usize>().is_ok() => {
            let [u, o] = <[OperationTable; 2]>::try_from(parse_tables(text)?).expect("two blocks");
            Ok(Raw::Biquandle(u, o))
        }
        2 => Ok(Raw::Structure(parse_table(&bl[0].join("\n"))?, bl[1].iter().map(|s| s.to_string()).collect())),
        0 => Err(biquandle_core::Error::Format("empty input".into()).into()),
        n => Err(biquandle_core::Error::Format(format!("expected one or two blocks, found {n}")).into()),
    }
}

pub fn parse_input(text: &str) -> CliResult<Raw> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

pub fn read_raw(path: &Path) -> CliResult<Raw> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_input(&text).map_err(|e| e.in_file(path))
}

pub fn structure_from(t: OperationTable, maps: &[String]) -> CliResult<BiquandleStructure> {
    let q = FiniteQuandle::new(t)?;
    let betas = maps
        .iter()
        .map(|m| Permutation::parse_cycles(m, q.order()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BiquandleStructure::new(q, betas)?)
}

/// A loaded algebra after its axioms have been checked.
#[derive(Clone, Debug)]
pub enum Algebra {
    Quandle(FiniteQuandle),
    Biquandle(FiniteBiquandle),
    Structure(BiquandleStructure),
}

impl Algebra {
    pub fn from_raw(raw: Raw) -> CliResult<Algebra> {
        Ok(match raw {
            Raw::Quandle(t) => Algebra::Quandle(FiniteQuandle::new(t)?),
            Raw::Biquandle(u, o) => Algebra::Biquandle(FiniteBiquandle::new(u, o)?),
            Raw::Structure(t, maps) => Algebra::Structure(structure_from(t, &maps)?),
        })
    }

    /// The quandle itself, or the base quandle of a structure.
    pub fn into_quandle(self) -> CliResult<FiniteQuandle> {
        match self {
            Algebra::Quandle(q) => Ok(q),
            Algebra::Structure(s) => Ok(s.base().clone()),
            Algebra::Biquandle(_) => Err(CliError::Usage("expected a quandle, got a biquandle".into())),
        }
    }

    /// The biquandle itself, or the one induced by a structure.
    pub fn into_biquandle(self) -> CliResult<FiniteBiquandle> {
        match self {
            Algebra::Biquandle(b) => Ok(b),
            Algebra::Structure(s) => Ok(s.induce()?),
            Algebra::Quandle(_) => Err(CliError::Usage("expected a biquandle or a structure, got a quandle".into())),
        }
    }

    pub fn is_quandle(&self) -> bool {
        matches!(self, Algebra::Quandle(_))
    }
}

pub fn load(path: &Path) -> CliResult<Algebra> {
    Algebra::from_raw(read_raw(path)?).map_err(|e| e.in_file(path))
}

pub fn load_quandle(path: &Path) -> CliResult<FiniteQuandle> {
    load(path)?.into_quandle().map_err(|e| e.in_file(path))
}

pub fn load_biquandle(path: &Path) -> CliResult<FiniteBiquandle> {
    load(path)?.into_biquandle().map_err(|e| e.in_file(path))
}

pub fn load_structure(path: &Path) -> CliResult<BiquandleStructure> {
    match load(path)? {
        Algebra::Structure(s) => Ok(s),
        other => Err(CliError::Usage(format!("expected a structure, got a {}", kind_of(&other).name())).in_file(path)),
    }
}

fn kind_of(a: &Algebra) -> Kind {
    match a {
        Algebra::Quandle(_) => Kind::Quandle,
        Algebra::Biquandle(_) => Kind::Biquandle,
        Algebra::Structure(_) => Kind::Structure,
    }
}
