//! Rouquier-family data ingestion and the mechanical checks behind both of
//! Martino's conjectures at the generic level.
//!
//! Rouquier families and essential hyperplanes are curated published data;
//! nothing here computes Schur elements. The comparisons are: equality of
//! generic partitions, union-refinement, inclusion of the essential planes
//! in the Euler variety, and sharp-stability of the Euler variety.

use crate::error::{Error, Result};
use crate::euler::{sharp_arrangement, FamilyPartition, Hyperplane, HyperplaneArrangement};

/// Rouquier data for one group, with character blocks resolved to table row
/// indices and planes normalized to the group's coordinate order.
#[derive(Clone, Debug)]
pub struct RouquierData {
    pub group: String,
    pub generic_families: FamilyPartition,
    pub essential: HyperplaneArrangement,
    pub coordinate_convention: String,
    pub provenance: String,
}

/// True iff every block of `coarse` is a union of blocks of `fine`.
pub fn refines(fine: &FamilyPartition, coarse: &FamilyPartition) -> Result<bool> {
    if fine.universe_size() != coarse.universe_size() {
        return Err(Error::LabelMismatch);
    }
    for block in coarse.blocks() {
        for &i in block.iter() {
            let fine_block = fine.block_of(i);
            if !fine_block.iter().all(|j| block.binary_search(j).is_ok()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Set inclusion of plane sets, with the missing planes on failure.
pub fn plane_inclusion(
    a: &HyperplaneArrangement,
    b: &HyperplaneArrangement,
) -> Result<(bool, Vec<Hyperplane>)> {
    if a.index_order != b.index_order {
        return Err(Error::DimensionMismatch(
            a.index_order.len(),
            b.index_order.len(),
        ));
    }
    let missing: Vec<Hyperplane> = a
        .planes
        .iter()
        .filter(|p| !b.contains(p))
        .cloned()
        .collect();
    Ok((missing.is_empty(), missing))
}

/// The verdict on Martino's conjectures at generic parameters for one group.
#[derive(Clone, Debug)]
pub struct MartinoVerdict {
    /// Generic Calogero-Moser families equal the generic Rouquier families.
    pub generic_equal: bool,
    /// Generic Calogero-Moser families are unions of generic Rouquier
    /// families (implied by equality).
    pub cm_unions_of_rouquier: bool,
    /// Essential hyperplanes are contained in the Euler variety.
    pub rou_in_eu: bool,
    /// The Euler variety is setwise stable under the sharp involution.
    pub sharp_stable: bool,
    /// Human-readable notes on differing or merging blocks.
    pub evidence: Vec<String>,
}

/// Run all generic-level checks for one group.
///
/// `cm` is the certified generic Calogero-Moser partition, `euler_variety`
/// the computed arrangement, `labels` the character labels used to render
/// evidence.
pub fn martino_check(
    cm: &FamilyPartition,
    euler_variety: &HyperplaneArrangement,
    rouquier: &RouquierData,
    labels: &[String],
) -> Result<MartinoVerdict> {
    if rouquier.generic_families.universe_size() != cm.universe_size() {
        return Err(Error::LabelMismatch);
    }

    let generic_equal = cm == &rouquier.generic_families;
    let cm_unions_of_rouquier = refines(&rouquier.generic_families, cm)?;
    let (rou_in_eu, missing) = plane_inclusion(&rouquier.essential, euler_variety)?;
    let sharp_stable = sharp_arrangement(euler_variety).set_eq(euler_variety);

    let mut evidence = Vec::new();
    if !generic_equal {
        for block in cm.blocks() {
            if !rouquier.generic_families.blocks().contains(block) {
                let parts: Vec<&str> = block.iter().map(|&i| labels[i].as_str()).collect();
                let split: Vec<String> = block
                    .iter()
                    .map(|&i| {
                        let rb = rouquier.generic_families.block_of(i);
                        let names: Vec<&str> = rb.iter().map(|&j| labels[j].as_str()).collect();
                        format!("{{{}}}", names.join(", "))
                    })
                    .collect();
                let mut split_dedup = split.clone();
                split_dedup.dedup();
                evidence.push(format!(
                    "calogero-moser family {{{}}} is the union of rouquier families {}",
                    parts.join(", "),
                    split_dedup.join(" + ")
                ));
            }
        }
    }
    for p in missing {
        evidence.push(format!(
            "essential plane {:?} is not in the euler variety",
            p.normal
        ));
    }

    if generic_equal && !cm_unions_of_rouquier {
        return Err(Error::Consistency {
            context: format!("martino check for {}", rouquier.group),
            expected: "equality to imply union-refinement".into(),
            got: "contradiction".into(),
        });
    }

    Ok(MartinoVerdict {
        generic_equal,
        cm_unions_of_rouquier,
        rou_in_eu,
        sharp_stable,
        evidence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(n: usize, blocks: Vec<Vec<usize>>) -> FamilyPartition {
        FamilyPartition::from_blocks(n, blocks).unwrap()
    }

    #[test]
    fn refinement_basics() {
        let singles = FamilyPartition::singletons(4);
        let coarse = part(4, vec![vec![0, 1], vec![2, 3]]);
        assert!(refines(&singles, &coarse).unwrap());
        assert!(refines(&singles, &singles).unwrap());
        assert!(!refines(&coarse, &singles).unwrap());

        // Two incomparable partitions of a 3-set.
        let a = part(3, vec![vec![0, 1], vec![2]]);
        let b = part(3, vec![vec![0], vec![1, 2]]);
        assert!(!refines(&a, &b).unwrap());
        assert!(!refines(&b, &a).unwrap());

        assert!(refines(&singles, &part(3, vec![vec![0, 1, 2]])).is_err());
    }

    #[test]
    fn plane_inclusion_and_missing() {
        let order = vec![(1, 0), (1, 1), (1, 2)];
        let h = |v: &[i64]| Hyperplane::from_integers(v).unwrap();
        let big = HyperplaneArrangement::from_planes(
            order.clone(),
            vec![h(&[0, 1, -1]), h(&[1, 0, -1]), h(&[1, -1, 0]), h(&[1, -2, 1])],
        );
        let small =
            HyperplaneArrangement::from_planes(order.clone(), vec![h(&[1, -2, 1]), h(&[0, 1, -1])]);
        let (ok, missing) = plane_inclusion(&small, &big).unwrap();
        assert!(ok && missing.is_empty());
        let (ok, _) = plane_inclusion(&big, &big).unwrap();
        assert!(ok);
        let (ok, missing) = plane_inclusion(&big, &small).unwrap();
        assert!(!ok);
        assert_eq!(missing.len(), 2);
    }

    #[test]
    fn verdict_for_equal_and_finer_partitions() {
        let order = vec![(1, 0), (1, 1), (1, 2)];
        let h = |v: &[i64]| Hyperplane::from_integers(v).unwrap();
        let variety = HyperplaneArrangement::from_planes(
            order.clone(),
            vec![h(&[0, 1, -1]), h(&[1, 0, -1]), h(&[1, -1, 0])],
        );
        let labels: Vec<String> = (0..3).map(|i| format!("phi{{{i},0}}")).collect();
        let cm = part(3, vec![vec![0, 1, 2]]);

        // Rouquier equal to CM.
        let rq = RouquierData {
            group: "X".into(),
            generic_families: cm.clone(),
            essential: HyperplaneArrangement::from_planes(order.clone(), vec![h(&[0, 1, -1])]),
            coordinate_convention: "cherednik-k".into(),
            provenance: "test".into(),
        };
        let v = martino_check(&cm, &variety, &rq, &labels).unwrap();
        assert!(v.generic_equal && v.cm_unions_of_rouquier && v.rou_in_eu && v.sharp_stable);
        assert!(v.evidence.is_empty());

        // Rouquier strictly finer: union-refinement without equality.
        let rq_finer = RouquierData {
            generic_families: part(3, vec![vec![0], vec![1, 2]]),
            ..rq.clone()
        };
        let v = martino_check(&cm, &variety, &rq_finer, &labels).unwrap();
        assert!(!v.generic_equal && v.cm_unions_of_rouquier);
        assert_eq!(v.evidence.len(), 1);

        // Rouquier incomparable: both fail.
        let rq_bad = RouquierData {
            generic_families: part(3, vec![vec![0, 1], vec![2]]),
            essential: HyperplaneArrangement::from_planes(
                order.clone(),
                vec![h(&[1, 1, -2])],
            ),
            ..rq
        };
        let cm2 = part(3, vec![vec![0], vec![1, 2]]);
        let v = martino_check(&cm2, &variety, &rq_bad, &labels).unwrap();
        assert!(!v.generic_equal && !v.cm_unions_of_rouquier && !v.rou_in_eu);
    }
}
