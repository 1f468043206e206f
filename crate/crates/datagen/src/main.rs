//! Generate the shipped bundles and golden reports, verifying every number
//! against the published reference tables along the way. Run with an
//! optional output directory (default: `data`).

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use cmfam::bundles::{BundlePaths, CharBundle, FingerprintJson, GroupBundle, RouquierBundle};
use cmfam::chars::{compute_fake_degrees, parse_label, ClassFingerprint};
use cmfam::error::Result;
use cmfam::euler::{young_orbit, FamilyPartition, Hyperplane};
use cmfam::group::GroupData;
use cmfam::report::{machine_report, run_pipeline};
use cmfam::rouquier::martino_check;
use cmfam::supersingular::{
    classify_families, generic_cm_families, supersingular_report, CmCertification,
};

use datagen::reference::{self, EssentialPart, RefGroup};

fn main() {
    let out = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("data"));
    let bundles = out.join("bundles");
    let golden = out.join("golden");
    std::fs::create_dir_all(&bundles).expect("create bundle dir");
    std::fs::create_dir_all(&golden).expect("create golden dir");

    for rg in reference::ALL {
        let t0 = std::time::Instant::now();
        generate_group(rg, &bundles).unwrap_or_else(|e| panic!("{}: {e}", rg.name));
        let output =
            run_pipeline(&bundles, rg.name).unwrap_or_else(|e| panic!("{}: {e}", rg.name));
        verify_pipeline(rg, &output).unwrap_or_else(|e| panic!("{}: {e}", rg.name));
        let report = machine_report(&output);
        std::fs::write(golden.join(format!("{}.golden", rg.name)), report)
            .expect("write golden");
        println!(
            "{:4}: bundles + golden verified in {:.2?}",
            rg.name,
            t0.elapsed()
        );
    }
    println!("all groups verified");
}

/// Enumerate, run Dixon, label rows against the reference table, and emit
/// the group/character/Rouquier bundles.
fn generate_group(rg: &RefGroup, dir: &Path) -> Result<()> {
    let spec = datagen::groups::by_name(rg.name).expect("group spec");
    let g = GroupData::enumerate(&spec)?;
    check_group_shape(rg, &g);

    let conductor = g.exponent();
    let raw = datagen::dixon::character_table(&g)?;
    assert_eq!(raw.len(), g.classes.len(), "{}: table is square", rg.name);

    // Degrees and fake degrees drive the (d, b) labels.
    let idc = g.identity_class();
    let dims: Vec<u32> = raw
        .iter()
        .map(|row| {
            let d = row[idc].as_rational().expect("integral degree");
            u32::try_from(d.to_integer()).expect("small degree")
        })
        .collect();
    let fake = compute_fake_degrees(&g, conductor, &raw, &dims)?;

    // Class index of each printed column word.
    let word_classes: Vec<usize> = rg
        .refl_words
        .iter()
        .map(|w| {
            let (gen, power) = reference::parse_word(w);
            let mut acc = cmfam::group::matrix::Matrix::identity(g.dim, g.conductor);
            for _ in 0..power {
                acc = acc.mul(&spec.generators[gen]);
            }
            g.class_of[g.element_index(&acc).expect("generator word in group")]
        })
        .collect();

    // Assign computed rows to reference labels: (d, b) narrows, printed
    // reflection-class values split label collisions.
    let mut row_of_ref: Vec<Option<usize>> = vec![None; rg.rows.len()];
    for (di, rec) in fake.iter().enumerate() {
        let mut matches = Vec::new();
        for (ri, rrow) in rg.rows.iter().enumerate() {
            let (d, b, _) = parse_label(rrow.label)?;
            if d != rec.d || b != rec.b {
                continue;
            }
            let values_match = rrow
                .values
                .iter()
                .zip(&word_classes)
                .all(|(vs, &c)| reference::parse_value(vs, rg.zeta).value_eq(&raw[di][c]));
            if values_match {
                matches.push(ri);
            }
        }
        match matches.as_slice() {
            [ri] => {
                assert!(
                    row_of_ref[*ri].is_none(),
                    "{}: two rows match reference label {}",
                    rg.name,
                    rg.rows[*ri].label
                );
                row_of_ref[*ri] = Some(di);
            }
            [] => panic!(
                "{}: no reference row for computed (d,b) = ({},{})",
                rg.name, rec.d, rec.b
            ),
            many => panic!(
                "{}: computed row matches {} reference labels: {:?}",
                rg.name,
                many.len(),
                many.iter().map(|&ri| rg.rows[ri].label).collect::<Vec<_>>()
            ),
        }
    }
    let order_map: Vec<usize> = row_of_ref
        .iter()
        .map(|o| o.expect("every reference row matched"))
        .collect();

    // Emit the group bundle.
    let gb = GroupBundle::from_spec(&spec);
    cmfam::bundles::write_json(&BundlePaths::new(dir, rg.name).group, &gb)?;

    // Character bundle: rows in reference order, columns in canonical class
    // order, with pins for any colliding fingerprints.
    let fingerprints: Vec<ClassFingerprint> = (0..g.classes.len())
        .map(|c| ClassFingerprint::of_class(&g, c))
        .collect();
    let mut column_pins = Vec::new();
    for (c, fp) in fingerprints.iter().enumerate() {
        if fingerprints.iter().filter(|other| *other == fp).count() > 1 {
            column_pins.push((c, c));
        }
    }
    let cb = CharBundle {
        group: rg.name.into(),
        conductor,
        degrees: spec.degrees.clone(),
        labels: rg.rows.iter().map(|r| r.label.to_string()).collect(),
        class_fingerprints: fingerprints
            .iter()
            .map(FingerprintJson::from_fingerprint)
            .collect(),
        values: order_map
            .iter()
            .map(|&di| raw[di].iter().map(cmfam::bundles::cyc_to_json).collect())
            .collect(),
        column_pins,
    };
    cmfam::bundles::write_json(&BundlePaths::new(dir, rg.name).chars, &cb)?;

    // Rouquier bundle, where the reference carries the data.
    if !rg.provenance.is_empty() {
        let index_order = g.parameter_space();
        let mut planes: BTreeSet<Vec<i64>> = BTreeSet::new();
        for part in rg.essential {
            match part {
                EssentialPart::Orbit(rep) => {
                    for v in young_orbit(&index_order, rep) {
                        planes.insert(v);
                    }
                }
                EssentialPart::SubOrbit { rep, gens } => {
                    for v in perm_orbit(gens, rep) {
                        planes.insert(v);
                    }
                }
            }
        }
        assert_eq!(
            planes.len(),
            rg.essential_count,
            "{}: essential hyperplane count",
            rg.name
        );
        let families = full_partition_labels(rg, rg.rouquier_families);
        let rb = RouquierBundle {
            group: rg.name.into(),
            coordinate_convention: "cherednik-k".into(),
            provenance: rg.provenance.into(),
            families,
            essential_planes: planes.into_iter().collect(),
        };
        cmfam::bundles::write_json(&BundlePaths::new(dir, rg.name).rouquier, &rb)?;
    }
    Ok(())
}

fn check_group_shape(rg: &RefGroup, g: &GroupData) {
    assert_eq!(g.order, rg.order, "{}: group order", rg.name);
    assert_eq!(g.classes.len(), rg.rows.len(), "{}: class count", rg.name);
    let mut got: Vec<(u32, usize)> = g
        .reflection_classes()
        .iter()
        .map(|(c, _, _)| (g.classes[*c].element_order, g.classes[*c].size))
        .collect();
    got.sort_unstable();
    let mut expect = rg.refl_classes.to_vec();
    expect.sort_unstable();
    assert_eq!(got, expect, "{}: reflection classes", rg.name);
}

/// Orbit of a normal vector under explicit coordinate permutations, with
/// sign normalization matching the arrangement convention.
fn perm_orbit(gens: &[&[usize]], start: &[i64]) -> BTreeSet<Vec<i64>> {
    fn norm(mut v: Vec<i64>) -> Vec<i64> {
        if v.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0) {
            for c in v.iter_mut() {
                *c = -*c;
            }
        }
        v
    }
    let mut seen = BTreeSet::new();
    let first = norm(start.to_vec());
    seen.insert(first.clone());
    let mut stack = vec![first];
    while let Some(v) = stack.pop() {
        for gen in gens {
            let w: Vec<i64> = gen.iter().map(|&i| v[i]).collect();
            let w = norm(w);
            if seen.insert(w.clone()) {
                stack.push(w);
            }
        }
    }
    seen
}

/// The full partition (as label lists) whose non-singleton blocks are given;
/// all other labels become singletons, ordered by table row.
fn full_partition_labels(rg: &RefGroup, blocks: &[&[&str]]) -> Vec<Vec<String>> {
    let mut used: BTreeSet<&str> = BTreeSet::new();
    let mut out: Vec<Vec<String>> = Vec::new();
    for b in blocks {
        for l in b.iter() {
            assert!(used.insert(l), "{}: label {l} in two families", rg.name);
        }
        out.push(b.iter().map(|s| s.to_string()).collect());
    }
    for r in rg.rows {
        if !used.contains(r.label) {
            out.push(vec![r.label.to_string()]);
        }
    }
    out
}

/// Cross-check the full pipeline output against the reference tables.
fn verify_pipeline(rg: &RefGroup, out: &cmfam::report::PipelineOutput) -> Result<()> {
    let table = &out.table;
    let labels = &table.labels;
    let index_order = out.group.parameter_space();

    // Omega forms and ss flags, row by row.
    for (ri, rrow) in rg.rows.iter().enumerate() {
        assert_eq!(labels[ri], rrow.label, "{}: row order", rg.name);
        let omega: Vec<i64> = out.euler.omega[ri]
            .iter()
            .map(|c| cmfam::exact::rational::as_i64(c).expect("integer omega"))
            .collect();
        assert_eq!(omega, rrow.omega, "{}: omega for {}", rg.name, rrow.label);
        if rrow.ss != '-' {
            assert_eq!(
                out.ss.flags[ri],
                rrow.ss == 'y',
                "{}: ss flag for {}",
                rg.name,
                rrow.label
            );
        }
    }
    assert_eq!(
        index_order.len(),
        rg.rows[0].omega.len(),
        "{}: parameter count",
        rg.name
    );

    // Generic Euler families: non-singleton blocks match the reference.
    let expected = reference_partition(rg, rg.families, labels);
    assert_eq!(
        out.euler.generic_partition, expected,
        "{}: generic Euler partition",
        rg.name
    );

    // Supersingular existence for the exceptional groups beyond G4.
    if rg.name != "G4" && rg.name != "S6" {
        assert!(
            out.ss.flags.iter().any(|&f| f),
            "{}: no supersingular character",
            rg.name
        );
    }

    // Arrangement census: every reference orbit is a computed orbit of the
    // stated size, and nothing is left over.
    let total: usize = rg.orbit_table.iter().map(|(_, n)| n).sum();
    assert_eq!(out.euler.variety.len(), total, "{}: plane count", rg.name);
    assert_eq!(
        out.euler.variety.orbits.len(),
        rg.orbit_table.len(),
        "{}: orbit count",
        rg.name
    );
    for (rep, len) in rg.orbit_table {
        let rep = Hyperplane::from_integers(rep)?;
        let orbit = out
            .euler
            .variety
            .orbits
            .iter()
            .find(|o| {
                o.members
                    .iter()
                    .any(|&i| out.euler.variety.planes[i] == rep)
            })
            .unwrap_or_else(|| panic!("{}: reference rep {:?} not found", rg.name, rep.normal));
        assert_eq!(
            orbit.members.len(),
            *len,
            "{}: orbit size of {:?}",
            rg.name,
            rep.normal
        );
    }
    assert!(
        cmfam::euler::sharp_arrangement(&out.euler.variety).set_eq(&out.euler.variety),
        "{}: sharp stability",
        rg.name
    );

    // Classification and certification.
    let report = supersingular_report(table)?;
    let classification = classify_families(&out.euler.generic_partition, &report);
    let cm = generic_cm_families(&out.euler.generic_partition, &classification);
    match (rg.name, &cm) {
        ("S6", CmCertification::Refusal { bad_blocks }) => {
            assert_eq!(bad_blocks.len(), 2, "S6: two bad pairs");
            assert_eq!(
                classification.bad_census(&out.euler.generic_partition),
                "2^2"
            );
        }
        ("S6", CmCertification::Certified(_)) => panic!("S6 must refuse"),
        (_, CmCertification::Certified(p)) => {
            assert_eq!(p, &out.euler.generic_partition);
            assert_eq!(
                classification.bad_census(&out.euler.generic_partition),
                "-"
            );
        }
        (name, CmCertification::Refusal { .. }) => panic!("{name} must certify"),
    }

    // Martino verdicts against the Rouquier data.
    if let Some(rq) = &out.rouquier {
        let expected_rq = reference_partition(rg, rg.rouquier_families, labels);
        assert_eq!(
            rq.generic_families, expected_rq,
            "{}: rouquier families",
            rg.name
        );
        assert_eq!(
            rq.essential.len(),
            rg.essential_count,
            "{}: essential count",
            rg.name
        );
        let cm_part = cm.certified().expect("certified for rouquier groups");
        let verdict = martino_check(cm_part, &out.euler.variety, rq, labels)?;
        assert!(
            verdict.rou_in_eu,
            "{}: essential planes inside the variety",
            rg.name
        );
        assert!(verdict.sharp_stable, "{}: sharp-stable variety", rg.name);
        assert!(
            verdict.cm_unions_of_rouquier,
            "{}: union refinement",
            rg.name
        );
        if rg.name == "G25" {
            assert!(!verdict.generic_equal, "G25 must be the counter-example");
        } else {
            assert!(verdict.generic_equal, "{}: generic equality", rg.name);
        }
    } else {
        assert_eq!(rg.name, "S6", "only S6 ships without Rouquier data");
    }
    Ok(())
}

fn reference_partition(rg: &RefGroup, blocks: &[&[&str]], labels: &[String]) -> FamilyPartition {
    let row_of = |l: &str| {
        labels
            .iter()
            .position(|x| x == l)
            .unwrap_or_else(|| panic!("{}: unknown label {l}", rg.name))
    };
    let mut out: Vec<Vec<usize>> = blocks
        .iter()
        .map(|b| b.iter().map(|l| row_of(l)).collect())
        .collect();
    let used: BTreeSet<usize> = out.iter().flatten().copied().collect();
    for i in 0..labels.len() {
        if !used.contains(&i) {
            out.push(vec![i]);
        }
    }
    FamilyPartition::from_blocks(labels.len(), out).expect("valid reference partition")
}
