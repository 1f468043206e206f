//! Shared constructors for unit tests: small cyclic reflection groups with
//! hand-checkable character tables.

use crate::chars::{CharTableInput, CharacterTable, ClassFingerprint};
use crate::exact::cyclotomic::Cyclotomic;
use crate::group::matrix::Matrix;
use crate::group::{GroupData, MatrixGroupSpec, DEFAULT_ENUM_CAP};

/// The cyclic group of order m acting on C by zeta_m.
pub fn cyclic_group(order: u32) -> GroupData {
    let gen = Matrix::from_entries(1, vec![Cyclotomic::root_of_unity(order, 1)]);
    let spec = MatrixGroupSpec {
        name: format!("C{order}"),
        dim: 1,
        conductor: order,
        generators: vec![gen],
        degrees: vec![order],
        pinned_orbit_order: None,
        enum_cap: DEFAULT_ENUM_CAP,
    };
    GroupData::enumerate(&spec).unwrap()
}

/// Character table input for the cyclic group, columns deliberately
/// scrambled relative to canonical class order.
pub fn cyclic_table_input(g: &GroupData, m: u32, labels: Vec<&str>) -> CharTableInput {
    let n = m as usize;
    let col_class: Vec<usize> = (0..n).map(|c| (c + 1) % n).collect();
    let fingerprints: Vec<ClassFingerprint> = col_class
        .iter()
        .map(|&c| ClassFingerprint::of_class(g, c))
        .collect();
    let power_of_class: Vec<i64> = (0..n)
        .map(|c| {
            let e = g.classes[c].eigenvalues[0];
            (e.power as i64) * (m as i64 / e.order as i64)
        })
        .collect();
    let values: Vec<Vec<Cyclotomic>> = (0..n)
        .map(|r| {
            col_class
                .iter()
                .map(|&c| Cyclotomic::root_of_unity(m, r as i64 * power_of_class[c]))
                .collect()
        })
        .collect();
    CharTableInput {
        group: g.name.clone(),
        conductor: m,
        degrees: vec![m],
        labels: labels.into_iter().map(String::from).collect(),
        fingerprints,
        values,
        column_pins: vec![],
    }
}

/// Validated C3 pair: labels follow the computed (d, b) values.
pub fn c3_pair() -> (GroupData, CharacterTable) {
    let g = cyclic_group(3);
    let input = cyclic_table_input(&g, 3, vec!["phi{1,0}", "phi{1,1}", "phi{1,2}"]);
    let table = crate::chars::load_and_validate(&input, &g).unwrap();
    (g, table)
}
