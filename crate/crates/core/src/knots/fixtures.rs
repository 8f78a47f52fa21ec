use super::gauss::GaussCode;
use crate::error::{Error, Result};

const BUILTIN: &str = include_str!("../../fixtures/knots.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub code: GaussCode,
}

/// Parses `name: code` lines; `#` starts a comment line.
pub fn parse_fixtures(text: &str) -> Result<Vec<Fixture>> {
    let mut out: Vec<Fixture> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let (name, code) = t
            .split_once(':')
            .ok_or_else(|| Error::format(format!("line {}: expected `name: code`", i + 1)))?;
        let name = name.trim();
        if name.is_empty() {
            return Err(Error::format(format!("line {}: empty fixture name", i + 1)));
        }
        if out.iter().any(|f| f.name == name) {
            return Err(Error::format(format!("line {}: duplicate fixture `{name}`", i + 1)));
        }
        let code = GaussCode::parse(code).map_err(|e| Error::format(format!("line {}: {e}", i + 1)))?;
        out.push(Fixture {
            name: name.to_string(),
            code,
        });
    }
    Ok(out)
}

/// The built-in diagrams: the unknot, classical knots up to six crossings and
/// virtual knots with three classical crossings.
pub fn fixture_table() -> Vec<Fixture> {
    parse_fixtures(BUILTIN).expect("built-in fixtures parse")
}

pub fn fixture(name: &str) -> Result<Fixture> {
    find_fixture(&fixture_table(), name)
}

pub fn find_fixture(table: &[Fixture], name: &str) -> Result<Fixture> {
    table.iter().find(|f| f.name == name).cloned().ok_or_else(|| Error::UnknownFixture {
        name: name.to_string(),
        available: table.iter().map(|f| f.name.as_str()).collect::<Vec<_>>().join(", "),
    })
}
