//! Supersingularity testing, the good/bad classification of generic Euler
//! families, and the certification of generic Calogero-Moser families.
//!
//! A character is supersingular when its fake degree fails to divide
//! `dim(lambda) * t^{b_lambda} * P(t)` over `Q[t]`. The test is parameter-free:
//! it consumes only the fake degree record and the Poincare series.

use std::collections::BTreeMap;

use crate::chars::{CharacterTable, FakeDegreeRecord};
use crate::error::Result;
use crate::euler::FamilyPartition;
use crate::exact::poly::QPoly;
use crate::exact::rational::Rational;

/// Per-character supersingularity flags with divisibility witnesses.
#[derive(Clone, Debug)]
pub struct SupersingularReport {
    pub flags: Vec<bool>,
    /// For non-supersingular rows, the exact quotient
    /// dim * t^b * P / f; None where the division fails.
    pub witnesses: Vec<Option<QPoly>>,
}

impl SupersingularReport {
    pub fn is_supersingular(&self, row: usize) -> bool {
        self.flags[row]
    }
}

/// Decide supersingularity of a single character from its fake degree data
/// and the Poincare series alone.
pub fn is_supersingular(rec: &FakeDegreeRecord, poincare: &QPoly) -> Result<bool> {
    Ok(divisibility_witness(rec, poincare)?.is_none())
}

fn divisibility_witness(rec: &FakeDegreeRecord, poincare: &QPoly) -> Result<Option<QPoly>> {
    let target = poincare
        .shift(rec.b)
        .scale(&Rational::from_integer(rec.d.into()));
    let (q, r) = target.divrem(&rec.f)?;
    if r.is_zero() {
        Ok(Some(q))
    } else {
        Ok(None)
    }
}

pub fn supersingular_report(table: &CharacterTable) -> Result<SupersingularReport> {
    let mut flags = Vec::with_capacity(table.num_chars());
    let mut witnesses = Vec::with_capacity(table.num_chars());
    for rec in &table.fake {
        let w = divisibility_witness(rec, &table.poincare)?;
        flags.push(w.is_none());
        // Witness integrity: w * f = d * t^b * P exactly.
        if let Some(q) = &w {
            let back = q.mul(&rec.f);
            let target = table
                .poincare
                .shift(rec.b)
                .scale(&Rational::from_integer(rec.d.into()));
            if back != target {
                return Err(crate::error::Error::Consistency {
                    context: "supersingularity witness".into(),
                    expected: "witness * f to rebuild the divisibility target".into(),
                    got: back.to_string(),
                });
            }
        }
        witnesses.push(w);
    }
    Ok(SupersingularReport { flags, witnesses })
}

/// How a generic Euler family was classified.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyKind {
    GoodSingleton,
    /// Size 2 with at least one supersingular member.
    GoodPair,
    /// Size 3 with all members supersingular.
    GoodTriple,
    Bad,
}

impl FamilyKind {
    pub fn is_good(self) -> bool {
        !matches!(self, FamilyKind::Bad)
    }

    pub fn rule(self) -> &'static str {
        match self {
            FamilyKind::GoodSingleton => "singleton",
            FamilyKind::GoodPair => "pair with a supersingular member",
            FamilyKind::GoodTriple => "triple of supersingular characters",
            FamilyKind::Bad => "no good rule applies",
        }
    }
}

/// Classification of every block of a generic Euler partition.
#[derive(Clone, Debug)]
pub struct FamilyClassification {
    /// Aligned with the partition's block order.
    pub kinds: Vec<FamilyKind>,
}

impl FamilyClassification {
    pub fn all_good(&self) -> bool {
        self.kinds.iter().all(|k| k.is_good())
    }

    pub fn bad_blocks(&self) -> Vec<usize> {
        self.kinds
            .iter()
            .enumerate()
            .filter(|(_, k)| !k.is_good())
            .map(|(i, _)| i)
            .collect()
    }

    /// Census of bad families in the "d^m" notation: m families of size d,
    /// sizes ascending; "-" when there are none.
    pub fn bad_census(&self, partition: &FamilyPartition) -> String {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for (i, k) in self.kinds.iter().enumerate() {
            if !k.is_good() {
                *counts.entry(partition.blocks()[i].len()).or_default() += 1;
            }
        }
        if counts.is_empty() {
            return "-".into();
        }
        counts
            .into_iter()
            .map(|(d, m)| format!("{d}^{m}"))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

pub fn classify_families(
    partition: &FamilyPartition,
    report: &SupersingularReport,
) -> FamilyClassification {
    let kinds = partition
        .blocks()
        .iter()
        .map(|block| {
            let ss = block.iter().filter(|&&r| report.flags[r]).count();
            match block.len() {
                1 => FamilyKind::GoodSingleton,
                2 if ss >= 1 => FamilyKind::GoodPair,
                3 if ss == 3 => FamilyKind::GoodTriple,
                _ => FamilyKind::Bad,
            }
        })
        .collect();
    FamilyClassification { kinds }
}

/// Outcome of the generic Calogero-Moser derivation: either the Euler
/// partition certified as the Calogero-Moser partition, or a refusal listing
/// the bad blocks (the method cannot conclude). The refusal is a value, not
/// an error.
#[derive(Clone, Debug)]
pub enum CmCertification {
    Certified(FamilyPartition),
    Refusal { bad_blocks: Vec<usize> },
}

impl CmCertification {
    pub fn certified(&self) -> Option<&FamilyPartition> {
        match self {
            CmCertification::Certified(p) => Some(p),
            CmCertification::Refusal { .. } => None,
        }
    }
}

/// Every good Euler family is already a Calogero-Moser family; when all
/// blocks are good the whole Euler partition is certified.
pub fn generic_cm_families(
    partition: &FamilyPartition,
    classification: &FamilyClassification,
) -> CmCertification {
    if classification.all_good() {
        CmCertification::Certified(partition.clone())
    } else {
        CmCertification::Refusal {
            bad_blocks: classification.bad_blocks(),
        }
    }
}
