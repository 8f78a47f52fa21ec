//! Small quandles and biquandles used throughout the tests and the
//! reproduction report, together with their published reference values.

use crate::biquandle::FiniteBiquandle;
use crate::constructors::trivial_quandle;
use crate::quandle::FiniteQuandle;
use crate::structures::BiquandleStructure;

fn quandle(rows: &[&[usize]]) -> FiniteQuandle {
    FiniteQuandle::from_one_based(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
        .expect("catalog quandle")
}

/// The trivial quandle of order 3.
pub fn quandle_a() -> FiniteQuandle {
    trivial_quandle(3)
}

/// The order-3 quandle with one fixed point and a transposition.
pub fn quandle_b() -> FiniteQuandle {
    quandle(&[&[1, 1, 1], &[3, 2, 2], &[2, 3, 3]])
}

/// The dihedral quandle of order 3.
pub fn quandle_c() -> FiniteQuandle {
    quandle(&[&[1, 3, 2], &[3, 2, 1], &[2, 1, 3]])
}

/// The order-4 quandle used for the knot tables (the tetrahedral quandle).
pub fn quandle_y() -> FiniteQuandle {
    quandle(&[&[1, 3, 4, 2], &[4, 2, 1, 3], &[2, 4, 3, 1], &[3, 1, 2, 4]])
}

/// Listed structure tuples on the trivial order-2 quandle.
pub const ORDER2_STRUCTURES: [[&str; 2]; 2] = [["id", "id"], ["(12)", "(12)"]];

pub const A_STRUCTURES: [[&str; 3]; 5] = [
    ["id", "id", "id"],
    ["id", "id", "(12)"],
    ["id", "(23)", "(23)"],
    ["(23)", "(23)", "(23)"],
    ["(123)", "(123)", "(123)"],
];

pub const B_STRUCTURES: [[&str; 3]; 4] = [
    ["id", "id", "id"],
    ["id", "(23)", "(23)"],
    ["(23)", "id", "id"],
    ["(23)", "(23)", "(23)"],
];

pub const C_STRUCTURES: [[&str; 3]; 6] = [
    ["id", "id", "id"],
    ["id", "(123)", "(132)"],
    ["(23)", "(23)", "(23)"],
    ["(23)", "(13)", "(12)"],
    ["(12)", "(23)", "(13)"],
    ["(123)", "(123)", "(123)"],
];

/// Named structure on one of the three order-3 quandles.
#[derive(Clone, Debug)]
pub struct Named {
    pub name: String,
    pub structure: BiquandleStructure,
    pub biquandle: FiniteBiquandle,
}

fn named(prefix: &str, base: FiniteQuandle, list: &[[&str; 3]]) -> Vec<Named> {
    list.iter()
        .enumerate()
        .map(|(i, maps)| {
            let structure = BiquandleStructure::from_cycles(base.clone(), maps).expect("catalog structure");
            let biquandle = structure.induce().expect("catalog biquandle");
            Named {
                name: format!("{prefix}{}", i + 1),
                structure,
                biquandle,
            }
        })
        .collect()
}

/// `A_1..A_5, B_1..B_4, C_1..C_6` in that order.
pub fn order3_biquandles() -> Vec<Named> {
    let mut v = named("A", quandle_a(), &A_STRUCTURES);
    v.extend(named("B", quandle_b(), &B_STRUCTURES));
    v.extend(named("C", quandle_c(), &C_STRUCTURES));
    v
}

pub fn order3_by_name(name: &str) -> Option<Named> {
    order3_biquandles().into_iter().find(|n| n.name == name)
}

/// Reference census: (quandle, number of structure classes).
pub fn census_expectations() -> Vec<(&'static str, FiniteQuandle, usize)> {
    vec![
        ("trivial order 2", trivial_quandle(2), 2),
        ("order 3 (a)", quandle_a(), 5),
        ("order 3 (b)", quandle_b(), 4),
        ("order 3 (c)", quandle_c(), 6),
        ("order 4 (Y)", quandle_y(), 9),
    ]
}

/// Reference constant-structure counts for the order-3 quandles.
pub fn constant_expectations() -> Vec<(&'static str, FiniteQuandle, usize)> {
    vec![
        ("order 3 (a)", quandle_a(), 3),
        ("order 3 (b)", quandle_b(), 2),
        ("order 3 (c)", quandle_c(), 3),
    ]
}

/// Reference `|Hom_B(X, Y)|`, rows `X` and columns `Y` in the order of
/// [`order3_biquandles`].
pub const HOM_B_COUNTS: [[usize; 15]; 15] = [
    [27, 17, 9, 9, 0, 9, 1, 9, 1, 3, 1, 1, 3, 0, 0],
    [9, 9, 3, 3, 0, 5, 1, 5, 1, 3, 1, 1, 3, 0, 0],
    [27, 17, 9, 9, 0, 9, 1, 9, 1, 3, 1, 1, 3, 0, 0],
    [27, 17, 9, 9, 0, 9, 1, 9, 1, 3, 1, 1, 3, 0, 0],
    [9, 7, 7, 9, 9, 5, 5, 5, 5, 3, 1, 1, 3, 0, 0],
    [9, 7, 3, 3, 0, 7, 3, 7, 3, 3, 1, 1, 3, 0, 0],
    [9, 7, 3, 3, 0, 7, 3, 7, 3, 3, 1, 1, 3, 0, 0],
    [9, 7, 3, 3, 0, 7, 3, 7, 3, 3, 1, 1, 3, 0, 0],
    [9, 7, 3, 3, 0, 7, 3, 7, 3, 3, 1, 1, 3, 0, 0],
    [3, 3, 1, 1, 0, 3, 1, 3, 1, 9, 1, 3, 3, 0, 0],
    [3, 3, 1, 1, 0, 3, 1, 3, 1, 3, 3, 1, 3, 0, 0],
    [3, 3, 1, 1, 0, 3, 1, 3, 1, 9, 1, 3, 3, 0, 0],
    [3, 3, 1, 1, 0, 3, 1, 3, 1, 3, 1, 1, 9, 0, 0],
    [3, 3, 1, 1, 0, 3, 1, 3, 1, 3, 1, 1, 3, 3, 0],
    [3, 3, 1, 1, 0, 3, 1, 3, 1, 3, 1, 3, 3, 0, 3],
];

/// Reference `|Hom_Q(Q_1, Q_2)|` over the quandles (a), (b), (c).
pub const HOM_Q_COUNTS: [[usize; 3]; 3] = [[27, 9, 3], [9, 7, 3], [3, 3, 9]];

/// Reference knot row: quandle count by `Y` and the nine structure counts.
#[derive(Clone, Copy, Debug)]
pub struct KnotRow {
    pub name: &'static str,
    pub quandle: usize,
    pub structures: [usize; 9],
}

pub const CLASSICAL_ROWS: [KnotRow; 6] = [
    KnotRow { name: "4_1", quandle: 16, structures: [16, 16, 4, 4, 4, 4, 0, 5, 4] },
    KnotRow { name: "5_1", quandle: 4, structures: [4, 4, 4, 4, 1, 1, 0, 2, 0] },
    KnotRow { name: "5_2", quandle: 4, structures: [4, 4, 4, 4, 4, 4, 4, 5, 4] },
    KnotRow { name: "6_1", quandle: 4, structures: [4, 4, 4, 4, 1, 1, 0, 3, 0] },
    KnotRow { name: "6_2", quandle: 4, structures: [4, 4, 4, 4, 4, 4, 4, 4, 4] },
    KnotRow { name: "6_3", quandle: 4, structures: [4, 4, 4, 4, 4, 4, 4, 5, 4] },
];

pub const VIRTUAL_ROWS: [KnotRow; 7] = [
    KnotRow { name: "v3_1", quandle: 4, structures: [4, 4, 4, 4, 1, 1, 4, 6, 0] },
    KnotRow { name: "v3_2", quandle: 4, structures: [4, 4, 4, 4, 1, 1, 0, 4, 0] },
    KnotRow { name: "v3_3", quandle: 4, structures: [4, 4, 4, 4, 4, 4, 0, 3, 0] },
    KnotRow { name: "v3_4", quandle: 4, structures: [4, 4, 4, 4, 1, 1, 0, 3, 0] },
    KnotRow { name: "v3_5", quandle: 4, structures: [4, 4, 4, 4, 1, 1, 4, 4, 4] },
    KnotRow { name: "v3_6", quandle: 16, structures: [16, 16, 16, 16, 16, 16, 16, 16, 16] },
    KnotRow { name: "v3_7", quandle: 4, structures: [4, 4, 4, 4, 1, 1, 4, 12, 4] },
];

/// Reference `Hom_B(B_2, B_2)` and `Hom_B(B_2, A_3)`, 1-based.
pub const HOM_B2_B2: [[usize; 3]; 3] = [[1, 1, 1], [1, 2, 3], [1, 3, 2]];
pub const HOM_B2_A3: [[usize; 3]; 3] = [[1, 1, 1], [1, 2, 2], [1, 3, 3]];
