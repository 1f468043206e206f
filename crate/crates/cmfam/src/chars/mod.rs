//! Character table ingestion and validation, fake degrees, and the
//! coinvariant-algebra Poincare series.
//!
//! Tables arrive as bundles whose columns are matched to the enumerated
//! conjugacy classes through class fingerprints (size, element order,
//! eigenvalue multiset on V, hyperplane orbit for reflection columns).
//! Residual fingerprint collisions must be resolved by explicit pins in the
//! bundle; matching is never guessed.

use std::collections::HashMap;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::cyclotomic::Cyclotomic;
use crate::exact::poly::{CSeries, Poly, QPoly};
use crate::exact::rational::Rational;
use crate::group::{GroupData, RootOfUnity};

/// Identifies a conjugacy class without reference to any realization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassFingerprint {
    pub size: usize,
    pub order: u32,
    pub eigenvalues: Vec<RootOfUnity>,
    /// Hyperplane orbit for reflection classes.
    pub orbit: Option<u32>,
}

impl ClassFingerprint {
    pub fn of_class(g: &GroupData, class: usize) -> Self {
        let c = &g.classes[class];
        ClassFingerprint {
            size: c.size,
            order: c.element_order,
            eigenvalues: c.eigenvalues.clone(),
            orbit: c.orbit,
        }
    }
}

/// Raw table data as read from a bundle, columns in bundle order.
#[derive(Clone, Debug)]
pub struct CharTableInput {
    pub group: String,
    pub conductor: u32,
    pub degrees: Vec<u32>,
    pub labels: Vec<String>,
    pub fingerprints: Vec<ClassFingerprint>,
    pub values: Vec<Vec<Cyclotomic>>,
    /// (bundle column, canonical class index) overrides.
    pub column_pins: Vec<(usize, usize)>,
}

/// Fake degree data for one irreducible character.
#[derive(Clone, Debug)]
pub struct FakeDegreeRecord {
    pub f: QPoly,
    /// Trailing degree of f.
    pub b: usize,
    /// Character degree lambda(1).
    pub d: u32,
}

/// A validated character table with columns aligned to the group's
/// canonical class order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub group: String,
    pub conductor: u32,
    pub degrees: Vec<u32>,
    pub labels: Vec<String>,
    /// values[row][class index]
    pub values: Vec<Vec<Cyclotomic>>,
    /// bundle column -> canonical class index
    pub column_match: Vec<usize>,
    pub fake: Vec<FakeDegreeRecord>,
    pub poincare: QPoly,
}

impl CharacterTable {
    pub fn num_chars(&self) -> usize {
        self.labels.len()
    }

    pub fn value(&self, row: usize, class: usize) -> &Cyclotomic {
        &self.values[row][class]
    }

    pub fn dim(&self, row: usize) -> u32 {
        self.fake[row].d
    }

    pub fn row_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// Parse "phi{d,b}" with optional trailing primes into (d, b, primes).
pub fn parse_label(label: &str) -> Result<(u32, usize, usize)> {
    let err = || Error::Validation(format!("malformed character label {label:?}"));
    let rest = label.strip_prefix("phi{").ok_or_else(err)?;
    let close = rest.find('}').ok_or_else(err)?;
    let inner = &rest[..close];
    let primes = rest[close + 1..].chars().filter(|&c| c == '\'').count();
    if !rest[close + 1..].chars().all(|c| c == '\'') {
        return Err(err());
    }
    let (d, b) = inner.split_once(',').ok_or_else(err)?;
    Ok((
        d.trim().parse().map_err(|_| err())?,
        b.trim().parse().map_err(|_| err())?,
        primes,
    ))
}

/// The Poincare series of the coinvariant algebra:
/// the product over i of (1 + t + ... + t^{d_i - 1}).
pub fn poincare_series(degrees: &[u32]) -> QPoly {
    degrees
        .iter()
        .fold(QPoly::from_integers(&[1]), |acc, &d| {
            acc.mul(&QPoly::t_geometric(d))
        })
}

/// Match bundle columns to canonical classes via fingerprints and pins.
fn match_columns(input: &CharTableInput, g: &GroupData) -> Result<Vec<usize>> {
    let n = g.classes.len();
    if input.fingerprints.len() != n {
        return Err(Error::Consistency {
            context: format!("table for {}", input.group),
            expected: format!("{n} columns"),
            got: input.fingerprints.len().to_string(),
        });
    }
    let group_fps: Vec<ClassFingerprint> =
        (0..n).map(|c| ClassFingerprint::of_class(g, c)).collect();

    let mut candidates: Vec<Vec<usize>> = input
        .fingerprints
        .iter()
        .map(|fp| {
            (0..n)
                .filter(|&c| &group_fps[c] == fp)
                .collect::<Vec<usize>>()
        })
        .collect();
    for (col, class) in &input.column_pins {
        if *col >= n || *class >= n {
            return Err(Error::Validation(format!(
                "column pin ({col}, {class}) out of range"
            )));
        }
        if !candidates[*col].contains(class) {
            return Err(Error::Validation(format!(
                "column pin ({col}, {class}) contradicts the fingerprint"
            )));
        }
        candidates[*col] = vec![*class];
    }

    let mut assigned: Vec<Option<usize>> = vec![None; n];
    loop {
        let mut progress = false;
        for col in 0..n {
            if assigned[col].is_some() {
                continue;
            }
            match candidates[col].len() {
                0 => {
                    return Err(Error::Validation(format!(
                        "column {col} of the {} table matches no conjugacy class",
                        input.group
                    )))
                }
                1 => {
                    let class = candidates[col][0];
                    assigned[col] = Some(class);
                    for (i, other) in candidates.iter_mut().enumerate() {
                        if i != col {
                            other.retain(|&c| c != class);
                        }
                    }
                    progress = true;
                }
                _ => {}
            }
        }
        if assigned.iter().all(Option::is_some) {
            break;
        }
        if !progress {
            let stuck: Vec<usize> = (0..n).filter(|&c| assigned[c].is_none()).collect();
            return Err(Error::FingerprintAmbiguity { columns: stuck });
        }
    }
    let matched: Vec<usize> = assigned.into_iter().map(Option::unwrap).collect();
    let mut seen = vec![false; n];
    for &c in &matched {
        if seen[c] {
            return Err(Error::Validation(
                "column matching is not a bijection".into(),
            ));
        }
        seen[c] = true;
    }
    Ok(matched)
}

/// Validate a table bundle against the enumerated group and compute fake
/// degrees for every row.
pub fn load_and_validate(input: &CharTableInput, g: &GroupData) -> Result<CharacterTable> {
    let n = g.classes.len();
    if input.labels.len() != input.values.len() {
        return Err(Error::Validation(format!(
            "{} labels but {} value rows",
            input.labels.len(),
            input.values.len()
        )));
    }
    if input.values.len() != n {
        return Err(Error::Consistency {
            context: format!("table for {}", input.group),
            expected: format!("{n} irreducible characters (one per class)"),
            got: input.values.len().to_string(),
        });
    }
    if input.degrees.len() != g.dim {
        return Err(Error::Validation(format!(
            "{} invariant degrees for a rank-{} group",
            input.degrees.len(),
            g.dim
        )));
    }
    if input.degrees != g.degrees {
        return Err(Error::Validation(format!(
            "invariant degrees {:?} disagree with the group's {:?}",
            input.degrees, g.degrees
        )));
    }

    let column_match = match_columns(input, g)?;

    // Reindex values into canonical class order.
    let values: Vec<Vec<Cyclotomic>> = input
        .values
        .iter()
        .map(|row| {
            if row.len() != n {
                return Err(Error::Validation("ragged value row".into()));
            }
            let mut out = vec![Cyclotomic::zero(input.conductor); n];
            for (col, v) in row.iter().enumerate() {
                out[column_match[col]] = v.embed(input.conductor);
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;

    // Poincare series and the P(1) = |W| cross-check.
    let poincare = poincare_series(&input.degrees);
    let p1 = poincare.eval(&Rational::one());
    if p1 != Rational::from_integer(g.order.into()) {
        return Err(Error::Consistency {
            context: format!("invariant degrees of {}", input.group),
            expected: format!("P(1) = |W| = {}", g.order),
            got: p1.to_string(),
        });
    }

    // First column: character degrees are positive integers, sum of squares |W|.
    let idc = g.identity_class();
    let mut dims = Vec::with_capacity(n);
    let mut sumsq = Rational::zero();
    for (row, vals) in values.iter().enumerate() {
        let d = vals[idc].as_rational().map_err(|_| {
            Error::Validation(format!("row {row}: non-rational degree"))
        })?;
        if !d.is_integer() || d <= Rational::zero() {
            return Err(Error::Validation(format!(
                "row {row}: degree {d} is not a positive integer"
            )));
        }
        sumsq += &d * &d;
        dims.push(d.to_integer().try_into().map_err(|_| {
            Error::Validation(format!("row {row}: degree overflow"))
        })?);
    }
    if sumsq != Rational::from_integer(g.order.into()) {
        return Err(Error::Consistency {
            context: format!("table for {}", input.group),
            expected: format!("sum of squared degrees = {}", g.order),
            got: sumsq.to_string(),
        });
    }

    // Row orthogonality under the class-size-weighted hermitian product.
    let worder = Rational::from_integer(g.order.into());
    for a in 0..n {
        let conj_a: Vec<Cyclotomic> = values[a].iter().map(Cyclotomic::conj).collect();
        for b in a..n {
            let mut acc = Cyclotomic::zero(input.conductor);
            for c in 0..n {
                let term = values[b][c]
                    .mul(&conj_a[c])
                    .scale(&Rational::from_integer(g.classes[c].size.into()));
                acc = acc.add(&term);
            }
            let expected = if a == b { worder.clone() } else { Rational::zero() };
            let ok = acc
                .as_rational()
                .map(|r| r == expected)
                .unwrap_or(false);
            if !ok {
                return Err(Error::Validation(format!(
                    "orthogonality failure between rows {a} and {b}: got {acc}"
                )));
            }
        }
    }

    // Fake degrees, certified row by row.
    let fake = compute_fake_degrees(g, input.conductor, &values, &dims)?;

    // The coinvariant algebra is the regular module in graded form.
    let mut regular = QPoly::zero();
    for rec in &fake {
        regular = regular.add(&rec.f.scale(&Rational::from_integer(rec.d.into())));
    }
    if regular != poincare {
        return Err(Error::Consistency {
            context: format!("table for {}", input.group),
            expected: "sum of d_lambda * f_lambda equal to the Poincare series".into(),
            got: regular.to_string(),
        });
    }

    // Labels carry (d, b); they must agree with the computed fake degrees.
    let mut seen_labels = HashMap::new();
    for (row, label) in input.labels.iter().enumerate() {
        let (d, b, _) = parse_label(label)?;
        if d != fake[row].d || b != fake[row].b {
            return Err(Error::Consistency {
                context: format!("label {label}"),
                expected: format!("(d, b) = ({}, {})", fake[row].d, fake[row].b),
                got: format!("({d}, {b})"),
            });
        }
        if seen_labels.insert(label.clone(), row).is_some() {
            return Err(Error::Validation(format!("duplicate label {label}")));
        }
    }

    Ok(CharacterTable {
        group: input.group.clone(),
        conductor: input.conductor,
        degrees: input.degrees.clone(),
        labels: input.labels.clone(),
        values,
        column_match,
        fake,
        poincare,
    })
}

/// Fake degrees for rows given in canonical class order, certified row by
/// row. `dims` are the character degrees (identity-class values).
pub fn compute_fake_degrees(
    g: &GroupData,
    conductor: u32,
    rows: &[Vec<Cyclotomic>],
    dims: &[u32],
) -> Result<Vec<FakeDegreeRecord>> {
    let class_series = eigen_series(g, &g.degrees, conductor);
    let mut fake = Vec::with_capacity(rows.len());
    for (row, values) in rows.iter().enumerate() {
        let rec = fake_degree_from_series(g, values, dims[row], &class_series)?;
        fake.push(rec);
    }
    Ok(fake)
}

struct ClassSeries {
    /// |C| * prod_i 1/(1 - eps_i t) truncated beyond checking length.
    series: Vec<CSeries>,
    conductor: u32,
    /// Coefficients 0..=n_poly are meaningful; the tail certifies vanishing.
    n_poly: usize,
}

/// Truncated eigen series per class, shared by all fake-degree rows.
fn eigen_series(g: &GroupData, degrees: &[u32], table_conductor: u32) -> ClassSeries {
    let n_poly: usize = degrees.iter().map(|&d| (d - 1) as usize).sum();
    let d_sum: usize = degrees.iter().map(|&d| d as usize).sum();
    let len = n_poly + d_sum + 1;
    let work = g
        .classes
        .iter()
        .fold(table_conductor, |acc, c| acc.lcm(&c.element_order));
    let series = g
        .classes
        .iter()
        .map(|c| {
            let mut s = CSeries::one(work, len);
            for eig in &c.eigenvalues {
                s.mul_geometric(&eig.to_cyclotomic(work));
            }
            for coeff in s.coeffs.iter_mut() {
                *coeff = coeff.scale(&Rational::from_integer(c.size.into()));
            }
            s
        })
        .collect();
    ClassSeries {
        series,
        conductor: work,
        n_poly,
    }
}

/// Graded multiplicity of one character in the coinvariant algebra:
/// the product of (1 - t^{d_i}) times the class-summed Molien series with
/// conjugated character weights, certified to truncate to a polynomial with
/// nonnegative integer coefficients.
fn fake_degree_from_series(
    g: &GroupData,
    row: &[Cyclotomic],
    dim: u32,
    cs: &ClassSeries,
) -> Result<FakeDegreeRecord> {
    let len = cs.series[0].coeffs.len();
    let mut acc = CSeries {
        coeffs: vec![Cyclotomic::zero(cs.conductor); len],
    };
    for (c, s) in cs.series.iter().enumerate() {
        let weight = row[c].conj().embed(cs.conductor);
        if weight.is_zero() {
            continue;
        }
        acc.scaled_add(&weight, s);
    }
    let inv_order = Rational::new(1.into(), g.order.into());

    // Multiply by prod (1 - t^{d_i}) = poincare * (1-t)^n; use the expanded
    // integer polynomial to stay in one pass.
    let mut vanishing = QPoly::from_integers(&[1]);
    for &d in &g.degrees {
        let mut coeffs = vec![Rational::zero(); d as usize + 1];
        coeffs[0] = Rational::one();
        coeffs[d as usize] = -Rational::one();
        vanishing = vanishing.mul(&Poly::from_coeffs(coeffs));
    }

    let mut out = vec![Rational::zero(); len];
    for (i, coeff) in vanishing.coeffs().iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        for j in 0..len - i {
            let term = acc.coeffs[j].scale(&(coeff * &inv_order));
            let cur = term
                .as_rational()
                .map_err(|_| not_polynomial(g, "irrational coefficient"))?;
            out[i + j] += cur;
        }
    }
    // Everything beyond the coinvariant top degree must cancel exactly.
    for (i, c) in out.iter().enumerate().skip(cs.n_poly + 1) {
        if !c.is_zero() {
            return Err(not_polynomial(
                g,
                &format!("nonzero coefficient {c} at degree {i}"),
            ));
        }
    }
    out.truncate(cs.n_poly + 1);
    let f = Poly::from_coeffs(out);
    if !f.has_nonneg_integer_coeffs() {
        return Err(not_polynomial(g, "coefficients not nonnegative integers"));
    }
    if f.eval(&Rational::one()) != Rational::from_integer(dim.into()) {
        return Err(not_polynomial(g, "f(1) differs from the character degree"));
    }
    let b = f.trailing_degree()?;
    Ok(FakeDegreeRecord { f, b, d: dim })
}

fn not_polynomial(g: &GroupData, detail: &str) -> Error {
    Error::Validation(format!(
        "fake degree for {} is not a valid polynomial ({detail}); \
         suspect eigenvalue data or invariant degrees",
        g.name
    ))
}
