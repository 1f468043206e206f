//! Generator matrices, invariant degrees, and orbit pins for the shipped
//! groups, as published realizations over small cyclotomic fields.

use cmfam::exact::cyclotomic::Cyclotomic;
use cmfam::exact::rational::ratio;
use cmfam::group::matrix::Matrix;
use cmfam::group::{MatrixGroupSpec, DEFAULT_ENUM_CAP};

/// Entry: (c1 * zeta^e1 + c0) / den over Q(zeta_n).
fn entry(n: u32, terms: &[(i64, u32)], den: i64) -> Cyclotomic {
    let parts: Vec<(u32, cmfam::exact::Rational)> = terms
        .iter()
        .map(|&(c, e)| (e, ratio(c, den)))
        .collect();
    Cyclotomic::from_power_terms(n, &parts)
}

fn mat(n: u32, dim: usize, rows: &[&[&[(i64, u32)]]], den: i64) -> Matrix {
    let mut entries = Vec::with_capacity(dim * dim);
    for row in rows {
        assert_eq!(row.len(), dim);
        for cell in row.iter() {
            entries.push(entry(n, cell, den));
        }
    }
    Matrix::from_entries(dim, entries)
}

fn spec(
    name: &str,
    dim: usize,
    conductor: u32,
    generators: Vec<Matrix>,
    degrees: Vec<u32>,
    pinned_orbit_order: Option<Vec<usize>>,
) -> MatrixGroupSpec {
    MatrixGroupSpec {
        name: name.into(),
        dim,
        conductor,
        generators,
        degrees,
        pinned_orbit_order,
        enum_cap: DEFAULT_ENUM_CAP,
    }
}

pub fn g4() -> MatrixGroupSpec {
    let n = 3;
    let s = mat(n, 2, &[&[&[(1, 0)], &[]], &[&[], &[(1, 1)]]], 1);
    let t = mat(
        n,
        2,
        &[
            &[&[(2, 1), (1, 0)], &[(1, 1), (-1, 0)]],
            &[&[(2, 1), (-2, 0)], &[(1, 1), (2, 0)]],
        ],
        3,
    );
    spec("G4", 2, n, vec![s, t], vec![4, 6], None)
}

pub fn g5() -> MatrixGroupSpec {
    let n = 3;
    let s = mat(n, 2, &[&[&[(1, 0)], &[]], &[&[], &[(1, 1)]]], 1);
    let t = mat(
        n,
        2,
        &[
            &[&[(1, 1), (2, 0)], &[(-1, 1), (1, 0)]],
            &[&[(-2, 1), (2, 0)], &[(2, 1), (1, 0)]],
        ],
        3,
    );
    spec("G5", 2, n, vec![s, t], vec![6, 12], Some(vec![0, 1]))
}

pub fn g6() -> MatrixGroupSpec {
    let n = 12;
    let s = mat(
        n,
        2,
        &[
            &[&[(-1, 3), (2, 1)], &[(-1, 3), (2, 1)]],
            &[&[(-2, 3), (4, 1)], &[(1, 3), (-2, 1)]],
        ],
        3,
    );
    let t = mat(n, 2, &[&[&[(1, 0)], &[]], &[&[], &[(1, 2), (-1, 0)]]], 1);
    spec("G6", 2, n, vec![s, t], vec![4, 12], Some(vec![0, 1]))
}

pub fn g8() -> MatrixGroupSpec {
    let n = 4;
    let s = mat(n, 2, &[&[&[(1, 0)], &[]], &[&[], &[(1, 1)]]], 1);
    let t = mat(
        n,
        2,
        &[
            &[&[(1, 1), (1, 0)], &[(1, 1), (-1, 0)]],
            &[&[(1, 1), (-1, 0)], &[(1, 1), (1, 0)]],
        ],
        2,
    );
    spec("G8", 2, n, vec![s, t], vec![8, 12], None)
}

pub fn g10() -> MatrixGroupSpec {
    let n = 12;
    let s = mat(n, 2, &[&[&[(1, 0)], &[]], &[&[], &[(1, 4)]]], 1);
    // The off-diagonal upper entry carries an extra factor 1/2.
    let t = mat(
        n,
        2,
        &[
            &[
                &[(2, 3), (-2, 2), (2, 1), (4, 0)],
                &[(1, 3), (2, 2), (-2, 1), (-1, 0)],
            ],
            &[
                &[(2, 3), (4, 2), (-4, 1), (-2, 0)],
                &[(4, 3), (2, 2), (-2, 1), (2, 0)],
            ],
        ],
        6,
    );
    spec("G10", 2, n, vec![s, t], vec![12, 24], Some(vec![0, 1]))
}

pub fn g23() -> MatrixGroupSpec {
    let n = 5;
    // tau = -zeta^3 - zeta^2
    let tau: &[(i64, u32)] = &[(-1, 3), (-1, 2)];
    let neg_one: &[(i64, u32)] = &[(-1, 0)];
    let one: &[(i64, u32)] = &[(1, 0)];
    let zero: &[(i64, u32)] = &[];
    let s = mat(
        n,
        3,
        &[
            &[neg_one, zero, zero],
            &[tau, one, zero],
            &[zero, zero, one],
        ],
        1,
    );
    let t = mat(
        n,
        3,
        &[
            &[one, tau, zero],
            &[zero, neg_one, zero],
            &[zero, one, one],
        ],
        1,
    );
    let u = mat(
        n,
        3,
        &[
            &[one, zero, zero],
            &[zero, one, one],
            &[zero, zero, neg_one],
        ],
        1,
    );
    spec("G23", 3, n, vec![s, t, u], vec![2, 6, 10], None)
}

pub fn g24() -> MatrixGroupSpec {
    let n = 7;
    // tau = zeta^4 + zeta^2 + zeta
    let tau: &[(i64, u32)] = &[(1, 4), (1, 2), (1, 1)];
    let neg_tau_m1: &[(i64, u32)] = &[(-1, 4), (-1, 2), (-1, 1), (-1, 0)];
    let neg_one: &[(i64, u32)] = &[(-1, 0)];
    let one: &[(i64, u32)] = &[(1, 0)];
    let zero: &[(i64, u32)] = &[];
    let s = mat(
        n,
        3,
        &[&[neg_one, one, tau], &[zero, one, zero], &[zero, zero, one]],
        1,
    );
    let t = mat(
        n,
        3,
        &[&[one, zero, zero], &[one, neg_one, one], &[zero, zero, one]],
        1,
    );
    let u = mat(
        n,
        3,
        &[
            &[one, zero, zero],
            &[zero, one, zero],
            &[neg_tau_m1, one, neg_one],
        ],
        1,
    );
    spec("G24", 3, n, vec![s, t, u], vec![4, 6, 14], None)
}

pub fn g25() -> MatrixGroupSpec {
    let n = 3;
    let one: &[(i64, u32)] = &[(3, 0)];
    let zero: &[(i64, u32)] = &[];
    let z: &[(i64, u32)] = &[(3, 1)];
    let zp2: &[(i64, u32)] = &[(1, 1), (2, 0)];
    let zm1: &[(i64, u32)] = &[(1, 1), (-1, 0)];
    let s = mat(n, 3, &[&[one, zero, zero], &[zero, one, zero], &[zero, zero, z]], 3);
    let t = mat(
        n,
        3,
        &[&[zp2, zm1, zm1], &[zm1, zp2, zm1], &[zm1, zm1, zp2]],
        3,
    );
    let u = mat(n, 3, &[&[one, zero, zero], &[zero, z, zero], &[zero, zero, one]], 3);
    spec("G25", 3, n, vec![s, t, u], vec![6, 9, 12], None)
}

pub fn g26() -> MatrixGroupSpec {
    let n = 3;
    let one: &[(i64, u32)] = &[(3, 0)];
    let zero: &[(i64, u32)] = &[];
    let z: &[(i64, u32)] = &[(3, 1)];
    let zp2: &[(i64, u32)] = &[(1, 1), (2, 0)];
    let zm1: &[(i64, u32)] = &[(1, 1), (-1, 0)];
    let s = mat(n, 3, &[&[one, zero, zero], &[zero, zero, one], &[zero, one, zero]], 3);
    let t = mat(n, 3, &[&[one, zero, zero], &[zero, one, zero], &[zero, zero, z]], 3);
    let u = mat(
        n,
        3,
        &[&[zp2, zm1, zm1], &[zm1, zp2, zm1], &[zm1, zm1, zp2]],
        3,
    );
    spec("G26", 3, n, vec![s, t, u], vec![6, 12, 18], Some(vec![0, 1]))
}

/// S6 in its 5-dimensional reflection representation (basis e_i - e_{i+1});
/// generated by the adjacent transpositions.
pub fn s6() -> MatrixGroupSpec {
    let dim = 5;
    let n = 1;
    let mut gens = Vec::new();
    for i in 0..5usize {
        let mut entries = vec![Cyclotomic::zero(n); dim * dim];
        for d in 0..dim {
            entries[d * dim + d] = Cyclotomic::one(n);
        }
        // v_i -> -v_i; v_{i-1} -> v_{i-1} + v_i; v_{i+1} -> v_i + v_{i+1}.
        entries[i * dim + i] = Cyclotomic::from_integer(n, -1);
        if i > 0 {
            entries[i * dim + (i - 1)] = Cyclotomic::one(n);
        }
        if i + 1 < dim {
            entries[i * dim + (i + 1)] = Cyclotomic::one(n);
        }
        gens.push(Matrix::from_entries(dim, entries));
    }
    spec("S6", dim, n, gens, vec![2, 3, 4, 5, 6], None)
}

pub fn all_specs() -> Vec<MatrixGroupSpec> {
    vec![
        g4(),
        g5(),
        g6(),
        g8(),
        g10(),
        g23(),
        g24(),
        g25(),
        g26(),
        s6(),
    ]
}

pub fn by_name(name: &str) -> Option<MatrixGroupSpec> {
    all_specs().into_iter().find(|s| s.name == name)
}
