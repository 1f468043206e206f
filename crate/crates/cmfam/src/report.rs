//! The per-group pipeline and its two report renderings.
//!
//! The machine format is line-oriented (key=value, keys sorted, UTF-8) and
//! byte-stable across runs; golden files are exactly such reports.

use std::fmt::Write as _;
use std::path::Path;

use num_traits::Zero;

use crate::bundles;
use crate::chars::CharacterTable;
use crate::error::Result;
use crate::euler::{self, EulerData};
use crate::exact::format_rational_form;
use crate::exact::rational::{as_i64, Rational};
use crate::group::GroupData;
use crate::rouquier::{self, MartinoVerdict, RouquierData};
use crate::supersingular::{
    classify_families, generic_cm_families, supersingular_report, CmCertification,
    FamilyClassification, SupersingularReport,
};

/// Everything the pipeline derives for one group.
pub struct PipelineOutput {
    pub group: GroupData,
    pub table: CharacterTable,
    pub euler: EulerData,
    pub ss: SupersingularReport,
    pub classification: FamilyClassification,
    pub cm: CmCertification,
    pub rouquier: Option<RouquierData>,
    pub martino: Option<MartinoVerdict>,
}

/// Run the full pipeline from bundle files: enumerate, validate the table,
/// fake degrees, omega forms, partitions, variety, classification,
/// Calogero-Moser certification, and (if Rouquier data is present) the
/// Martino verdict.
pub fn run_pipeline(bundle_dir: &Path, name: &str) -> Result<PipelineOutput> {
    let (group, table) = bundles::load_group_and_table(bundle_dir, name)?;
    let euler = euler::build(&group, &table)?;
    let ss = supersingular_report(&table)?;
    let classification = classify_families(&euler.generic_partition, &ss);
    let cm = generic_cm_families(&euler.generic_partition, &classification);
    let rouquier = bundles::load_rouquier(bundle_dir, name, &group, &table)?;
    let martino = match (&cm, &rouquier) {
        (CmCertification::Certified(cm_part), Some(rq)) => Some(rouquier::martino_check(
            cm_part,
            &euler.variety,
            rq,
            &table.labels,
        )?),
        _ => None,
    };
    Ok(PipelineOutput {
        group,
        table,
        euler,
        ss,
        classification,
        cm,
        rouquier,
        martino,
    })
}

fn csv(values: &[Rational]) -> String {
    values
        .iter()
        .map(|v| {
            as_i64(v)
                .map(|n| n.to_string())
                .unwrap_or_else(|| v.to_string())
        })
        .collect::<Vec<_>>()
        .join(",")
}

fn csv_i64(values: &[i64]) -> String {
    values
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn blocks_as_labels(blocks: &[Vec<usize>], labels: &[String]) -> Vec<String> {
    blocks
        .iter()
        .map(|b| {
            b.iter()
                .map(|&i| labels[i].as_str())
                .collect::<Vec<_>>()
                .join(";")
        })
        .collect()
}

/// The machine report: sorted key=value lines.
pub fn machine_report(out: &PipelineOutput) -> String {
    let mut lines: Vec<String> = Vec::new();
    let g = &out.group;
    let t = &out.table;
    let labels = &t.labels;

    lines.push(format!("group.name={}", g.name));
    lines.push(format!("group.order={}", g.order));
    lines.push(format!("group.num_classes={}", g.classes.len()));
    lines.push(format!("group.num_reflections={}", g.reflections.len()));
    lines.push(format!(
        "group.degrees={}",
        g.degrees
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    ));
    lines.push(format!(
        "group.omega_bar={}",
        g.parameter_space()
            .iter()
            .map(|(o, j)| format!("({o},{j})"))
            .collect::<Vec<_>>()
            .join(";")
    ));

    let refl = g.reflection_classes();
    for (i, (class, eps, orbit)) in refl.iter().enumerate() {
        lines.push(format!(
            "refl_class.{i:02}.order={}",
            g.classes[*class].element_order
        ));
        lines.push(format!("refl_class.{i:02}.length={}", g.classes[*class].size));
        lines.push(format!("refl_class.{i:02}.orbit={orbit}"));
        lines.push(format!("refl_class.{i:02}.eps=e({}/{})", eps.power, eps.order));
    }

    for (row, label) in labels.iter().enumerate() {
        lines.push(format!("char.{label}.d={}", t.fake[row].d));
        lines.push(format!("char.{label}.b={}", t.fake[row].b));
        lines.push(format!(
            "char.{label}.fake={}",
            csv(t.fake[row].f.coeffs())
        ));
        lines.push(format!(
            "char.{label}.omega={}",
            csv(&out.euler.omega[row])
        ));
        lines.push(format!(
            "char.{label}.ss={}",
            if out.ss.flags[row] { "y" } else { "n" }
        ));
        for (i, (class, _, _)) in refl.iter().enumerate() {
            lines.push(format!(
                "char.{label}.value.{i:02}={}",
                t.value(row, *class).minimal()
            ));
        }
    }

    for (i, b) in blocks_as_labels(out.euler.generic_partition.blocks(), labels)
        .into_iter()
        .enumerate()
    {
        lines.push(format!("family.euler.{i:03}={b}"));
        lines.push(format!(
            "family.euler.{i:03}.kind={}",
            out.classification.kinds[i].rule()
        ));
    }
    lines.push(format!(
        "family.bad_census={}",
        out.classification.bad_census(&out.euler.generic_partition)
    ));
    match &out.cm {
        CmCertification::Certified(p) => {
            lines.push("family.cm.status=certified".into());
            for (i, b) in blocks_as_labels(p.blocks(), labels).into_iter().enumerate() {
                lines.push(format!("family.cm.{i:03}={b}"));
            }
        }
        CmCertification::Refusal { bad_blocks } => {
            lines.push("family.cm.status=refusal".into());
            for (i, bi) in bad_blocks.iter().enumerate() {
                let names = out.euler.generic_partition.blocks()[*bi]
                    .iter()
                    .map(|&r| labels[r].as_str())
                    .collect::<Vec<_>>()
                    .join(";");
                lines.push(format!("family.cm.bad.{i:03}={names}"));
            }
        }
    }

    lines.push(format!("variety.count={}", out.euler.variety.len()));
    let mut orbit_of_plane = vec![0usize; out.euler.variety.len()];
    for (i, orbit) in out.euler.variety.orbits.iter().enumerate() {
        lines.push(format!(
            "variety.orbit.{i:02}.rep={}",
            csv_i64(&orbit.rep.normal)
        ));
        lines.push(format!(
            "variety.orbit.{i:02}.size={}",
            orbit.members.len()
        ));
        for &m in &orbit.members {
            orbit_of_plane[m] = i;
        }
    }
    for (i, plane) in out.euler.variety.planes.iter().enumerate() {
        lines.push(format!(
            "variety.plane.{i:03}={}|orbit={:02}",
            csv_i64(&plane.normal),
            orbit_of_plane[i]
        ));
    }
    lines.push(format!(
        "variety.sharp_stable={}",
        euler::sharp_arrangement(&out.euler.variety).set_eq(&out.euler.variety)
    ));

    if let Some(rq) = &out.rouquier {
        lines.push(format!("rouquier.essential.count={}", rq.essential.len()));
        for (i, b) in blocks_as_labels(rq.generic_families.blocks(), labels)
            .into_iter()
            .enumerate()
        {
            lines.push(format!("rouquier.family.{i:03}={b}"));
        }
    }
    if let Some(v) = &out.martino {
        lines.push(format!("martino.generic_equal={}", v.generic_equal));
        lines.push(format!(
            "martino.cm_unions_of_rouquier={}",
            v.cm_unions_of_rouquier
        ));
        lines.push(format!("martino.rou_in_eu={}", v.rou_in_eu));
        lines.push(format!("martino.sharp_stable={}", v.sharp_stable));
        lines.push(format!(
            "martino.counter_example={}",
            !v.generic_equal && v.cm_unions_of_rouquier
        ));
        for (i, e) in v.evidence.iter().enumerate() {
            lines.push(format!("martino.evidence.{i:02}={e}"));
        }
    }

    lines.sort();
    let mut s = String::new();
    for l in lines {
        s.push_str(&l);
        s.push('\n');
    }
    s
}

/// Human-readable report mirroring the per-group sections of the tables.
pub fn text_report(out: &PipelineOutput) -> String {
    let g = &out.group;
    let t = &out.table;
    let mut s = String::new();
    let _ = writeln!(s, "== {} ==", g.name);
    let _ = writeln!(
        s,
        "order {} | {} classes | {} reflections | degrees {:?}",
        g.order,
        g.classes.len(),
        g.reflections.len(),
        g.degrees
    );
    let refl = g.reflection_classes();
    let _ = writeln!(s, "reflection classes:");
    for (class, eps, orbit) in &refl {
        let _ = writeln!(
            s,
            "  orbit {} | order {} | length {} | eps = zeta_{}^{}",
            orbit,
            g.classes[*class].element_order,
            g.classes[*class].size,
            eps.order,
            eps.power
        );
    }
    let index_order = g.parameter_space();
    let _ = writeln!(
        s,
        "parameters: {}",
        index_order
            .iter()
            .map(|(o, j)| format!("k_{{{o},{j}}}"))
            .collect::<Vec<_>>()
            .join(", ")
    );
    let _ = writeln!(s, "\ncharacters (label | values on reflection classes | omega | ss):");
    for (row, label) in t.labels.iter().enumerate() {
        let vals = refl
            .iter()
            .map(|(c, _, _)| format!("{}", t.value(row, *c).minimal()))
            .collect::<Vec<_>>()
            .join(" , ");
        let omega = format_rational_form(&out.euler.omega[row], &index_order);
        let _ = writeln!(
            s,
            "  {label:<14} | {vals:<30} | {omega:<55} | {}",
            if out.ss.flags[row] { "y" } else { "n" }
        );
    }

    let _ = writeln!(s, "\ngeneric Euler families:");
    for (i, block) in out.euler.generic_partition.blocks().iter().enumerate() {
        let names: Vec<&str> = block.iter().map(|&r| t.labels[r].as_str()).collect();
        let _ = writeln!(
            s,
            "  {{{}}}  [{}]",
            names.join(", "),
            out.classification.kinds[i].rule()
        );
    }
    let _ = writeln!(
        s,
        "bad families: {}",
        out.classification.bad_census(&out.euler.generic_partition)
    );
    match &out.cm {
        CmCertification::Certified(_) => {
            let _ = writeln!(
                s,
                "generic Calogero-Moser families: certified equal to the Euler families"
            );
        }
        CmCertification::Refusal { bad_blocks } => {
            let _ = writeln!(
                s,
                "generic Calogero-Moser families: REFUSAL, {} bad famil{} (method cannot conclude)",
                bad_blocks.len(),
                if bad_blocks.len() == 1 { "y" } else { "ies" }
            );
        }
    }

    let n_planes = out.euler.variety.len();
    let n_orbits = out.euler.variety.orbits.len();
    let _ = writeln!(
        s,
        "\nEuler variety: {} hyperplane{} in {} orbit{}{}",
        n_planes,
        if n_planes == 1 { "" } else { "s" },
        n_orbits,
        if n_orbits == 1 { "" } else { "s" },
        if euler::sharp_arrangement(&out.euler.variety).set_eq(&out.euler.variety) {
            " (sharp-stable)"
        } else {
            " (NOT sharp-stable)"
        }
    );
    for orbit in &out.euler.variety.orbits {
        let _ = writeln!(
            s,
            "  rep ({}) | size {}",
            csv_i64(&orbit.rep.normal),
            orbit.members.len()
        );
    }

    if let Some(rq) = &out.rouquier {
        let _ = writeln!(
            s,
            "\nRouquier data: {} generic families, {} essential planes",
            rq.generic_families.num_blocks(),
            rq.essential.len()
        );
    }
    if let Some(v) = &out.martino {
        let _ = writeln!(s, "Martino verdict:");
        let _ = writeln!(s, "  generic families equal:      {}", v.generic_equal);
        let _ = writeln!(s, "  CM unions of Rouquier:       {}", v.cm_unions_of_rouquier);
        let _ = writeln!(s, "  essential within Euler:      {}", v.rou_in_eu);
        let _ = writeln!(s, "  Euler variety sharp-stable:  {}", v.sharp_stable);
        if !v.generic_equal && v.cm_unions_of_rouquier {
            let _ = writeln!(
                s,
                "  ** counter-example: generic equality FAILS (union-refinement holds) **"
            );
        }
        for e in &v.evidence {
            let _ = writeln!(s, "  note: {e}");
        }
    }
    s
}

/// First divergence between a golden report and a freshly rendered one.
#[derive(Debug, PartialEq, Eq)]
pub struct Divergence {
    /// 1-based line number in the golden file.
    pub line: usize,
    pub expected: String,
    pub got: String,
}

pub fn diff_reports(golden: &str, fresh: &str) -> Option<Divergence> {
    let a: Vec<&str> = golden.lines().collect();
    let b: Vec<&str> = fresh.lines().collect();
    for i in 0..a.len().max(b.len()) {
        let x = a.get(i).copied().unwrap_or("<missing>");
        let y = b.get(i).copied().unwrap_or("<missing>");
        if x != y {
            return Some(Divergence {
                line: i + 1,
                expected: x.to_string(),
                got: y.to_string(),
            });
        }
    }
    None
}

/// Specialized partitions at seeded random generic points must reproduce
/// the generic partition; points on the variety are resampled.
pub fn check_generic_specializations(
    out: &PipelineOutput,
    seed: u64,
    points: usize,
) -> Result<()> {
    let mut stream = crate::sampling::SeededStream::new(seed);
    let dim = out.euler.index_order.len();
    let mut done = 0;
    let mut attempts = 0;
    while done < points {
        attempts += 1;
        if attempts > points * 50 {
            return Err(crate::error::Error::Validation(
                "resampling budget exhausted while avoiding the variety".into(),
            ));
        }
        let point = stream.prime_point(dim);
        if out
            .euler
            .variety
            .planes
            .iter()
            .any(|p| p.eval(&point).is_zero())
        {
            continue;
        }
        let spec = euler::specialize_partition(&out.euler.omega, &point);
        if spec != out.euler.generic_partition {
            return Err(crate::error::Error::Consistency {
                context: format!("specialization for {}", out.group.name),
                expected: "generic partition at an off-variety point".into(),
                got: "different partition".into(),
            });
        }
        done += 1;
    }
    Ok(())
}
