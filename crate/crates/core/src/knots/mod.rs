//! Knot diagrams from signed Gauss codes and their coloring invariants.

pub mod colorings;
pub mod diagram;
pub mod fixtures;
pub mod gauss;

pub use colorings::{
    biquandle_colorings, quandle_colorings, structure_coloring_invariant, ColoringCount, StructureInvariant,
};
pub use diagram::{Crossing, KnotDiagram};
pub use fixtures::{fixture, fixture_table, Fixture};
pub use gauss::{GaussCode, Passage, Sign, Token};

pub fn parse_gauss_code(text: &str) -> crate::Result<GaussCode> {
    GaussCode::parse(text)
}

pub fn build_diagram(g: &GaussCode) -> KnotDiagram {
    KnotDiagram::new(g)
}
