//! Bundle files: structured-text (JSON) descriptions of groups, character
//! tables, and Rouquier data.
//!
//! Cyclotomic values are serialized as lists of triples
//! `[exponent, numerator, denominator]` meaning the sum of
//! (num/den) * zeta_n^exponent, with exponents in [0, n); the conductor n is
//! a bundle-level field.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::chars::{CharTableInput, CharacterTable, ClassFingerprint};
use crate::error::{Error, Result};
use crate::euler::{Hyperplane, HyperplaneArrangement};
use crate::exact::cyclotomic::Cyclotomic;
use crate::group::matrix::Matrix;
use crate::group::{GroupData, MatrixGroupSpec, RootOfUnity, DEFAULT_ENUM_CAP};
use crate::rouquier::RouquierData;

pub type CycJson = Vec<(u32, String, String)>;

pub fn cyc_to_json(c: &Cyclotomic) -> CycJson {
    c.to_triples()
}

pub fn cyc_from_json(conductor: u32, triples: &CycJson) -> Result<Cyclotomic> {
    Cyclotomic::from_triples(conductor, triples)
}

/// Group bundle: generators and invariant degrees.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupBundle {
    pub name: String,
    pub dim: usize,
    pub conductor: u32,
    pub degrees: Vec<u32>,
    /// generator -> row -> entry
    pub generators: Vec<Vec<Vec<CycJson>>>,
    /// Generator indices pinning the hyperplane-orbit order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pinned_orbit_order: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub enum_cap: Option<usize>,
}

impl GroupBundle {
    pub fn to_spec(&self) -> Result<MatrixGroupSpec> {
        let mut generators = Vec::with_capacity(self.generators.len());
        for (gi, rows) in self.generators.iter().enumerate() {
            if rows.len() != self.dim || rows.iter().any(|r| r.len() != self.dim) {
                return Err(Error::Validation(format!(
                    "generator {gi} of {} is not {dim}x{dim}",
                    self.name,
                    dim = self.dim
                )));
            }
            let mut entries = Vec::with_capacity(self.dim * self.dim);
            for row in rows {
                for cell in row {
                    entries.push(cyc_from_json(self.conductor, cell)?);
                }
            }
            generators.push(Matrix::from_entries(self.dim, entries));
        }
        Ok(MatrixGroupSpec {
            name: self.name.clone(),
            dim: self.dim,
            conductor: self.conductor,
            generators,
            degrees: self.degrees.clone(),
            pinned_orbit_order: self.pinned_orbit_order.clone(),
            enum_cap: self.enum_cap.unwrap_or(DEFAULT_ENUM_CAP),
        })
    }

    pub fn from_spec(spec: &MatrixGroupSpec) -> Self {
        GroupBundle {
            name: spec.name.clone(),
            dim: spec.dim,
            conductor: spec.conductor,
            degrees: spec.degrees.clone(),
            generators: spec
                .generators
                .iter()
                .map(|g| {
                    (0..spec.dim)
                        .map(|i| (0..spec.dim).map(|j| cyc_to_json(g.entry(i, j))).collect())
                        .collect()
                })
                .collect(),
            pinned_orbit_order: spec.pinned_orbit_order.clone(),
            enum_cap: None,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FingerprintJson {
    pub size: usize,
    pub order: u32,
    /// Roots of unity as (order, power) pairs in lowest terms.
    pub eigenvalues: Vec<(u32, u32)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbit: Option<u32>,
}

impl FingerprintJson {
    pub fn to_fingerprint(&self) -> ClassFingerprint {
        ClassFingerprint {
            size: self.size,
            order: self.order,
            eigenvalues: self
                .eigenvalues
                .iter()
                .map(|&(o, p)| RootOfUnity::new(o, p as i64))
                .collect(),
            orbit: self.orbit,
        }
    }

    pub fn from_fingerprint(fp: &ClassFingerprint) -> Self {
        FingerprintJson {
            size: fp.size,
            order: fp.order,
            eigenvalues: fp.eigenvalues.iter().map(|r| (r.order, r.power)).collect(),
            orbit: fp.orbit,
        }
    }
}

/// Character table bundle.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CharBundle {
    pub group: String,
    pub conductor: u32,
    pub degrees: Vec<u32>,
    pub labels: Vec<String>,
    pub class_fingerprints: Vec<FingerprintJson>,
    /// rows x columns, bundle column order.
    pub values: Vec<Vec<CycJson>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub column_pins: Vec<(usize, usize)>,
}

impl CharBundle {
    pub fn to_input(&self) -> Result<CharTableInput> {
        let values = self
            .values
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| cyc_from_json(self.conductor, cell))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CharTableInput {
            group: self.group.clone(),
            conductor: self.conductor,
            degrees: self.degrees.clone(),
            labels: self.labels.clone(),
            fingerprints: self
                .class_fingerprints
                .iter()
                .map(FingerprintJson::to_fingerprint)
                .collect(),
            values,
            column_pins: self.column_pins.clone(),
        })
    }
}

/// Rouquier bundle: generic families as label lists and essential planes as
/// integer normal vectors in the group's parameter coordinates.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RouquierBundle {
    pub group: String,
    pub coordinate_convention: String,
    pub provenance: String,
    pub families: Vec<Vec<String>>,
    pub essential_planes: Vec<Vec<i64>>,
}

impl RouquierBundle {
    pub fn resolve(&self, g: &GroupData, table: &CharacterTable) -> Result<RouquierData> {
        if self.coordinate_convention != "cherednik-k" {
            return Err(Error::Validation(format!(
                "unsupported coordinate convention {:?}",
                self.coordinate_convention
            )));
        }
        let blocks = self
            .families
            .iter()
            .map(|fam| {
                fam.iter()
                    .map(|label| {
                        table.row_of_label(label).ok_or_else(|| {
                            Error::Validation(format!(
                                "rouquier family label {label:?} not in the character table"
                            ))
                        })
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let generic_families =
            crate::euler::FamilyPartition::from_blocks(table.num_chars(), blocks)?;

        let index_order = g.parameter_space();
        let planes = self
            .essential_planes
            .iter()
            .map(|v| {
                if v.len() != index_order.len() {
                    return Err(Error::DimensionMismatch(v.len(), index_order.len()));
                }
                Hyperplane::from_integers(v)
            })
            .collect::<Result<Vec<_>>>()?;
        if planes.len() != self.essential_planes.len() {
            return Err(Error::Validation("duplicate essential planes".into()));
        }
        let essential = HyperplaneArrangement::from_planes(index_order, planes);
        if essential.len() != self.essential_planes.len() {
            return Err(Error::Validation(
                "essential plane list contains duplicates after normalization".into(),
            ));
        }
        Ok(RouquierData {
            group: self.group.clone(),
            generic_families,
            essential,
            coordinate_convention: self.coordinate_convention.clone(),
            provenance: self.provenance.clone(),
        })
    }
}

fn parse_error(path: &Path, e: impl std::fmt::Display) -> Error {
    Error::Parse {
        path: path.display().to_string(),
        detail: e.to_string(),
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| parse_error(path, format!("cannot read: {e}")))?;
    serde_json::from_str(&text).map_err(|e| parse_error(path, e))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| parse_error(path, e))?;
    std::fs::write(path, text + "\n")?;
    Ok(())
}

/// Standard bundle file locations under a bundle directory.
pub struct BundlePaths {
    pub group: PathBuf,
    pub chars: PathBuf,
    pub rouquier: PathBuf,
}

impl BundlePaths {
    pub fn new(dir: &Path, group: &str) -> Self {
        BundlePaths {
            group: dir.join(format!("{group}.group.json")),
            chars: dir.join(format!("{group}.chars.json")),
            rouquier: dir.join(format!("{group}.rouquier.json")),
        }
    }
}

/// Load and fully validate the group + character bundles for `name`.
pub fn load_group_and_table(dir: &Path, name: &str) -> Result<(GroupData, CharacterTable)> {
    let paths = BundlePaths::new(dir, name);
    if !paths.group.exists() {
        return Err(Error::MissingBundle {
            group: name.into(),
            kind: "group".into(),
            dir: dir.display().to_string(),
        });
    }
    let gb: GroupBundle = read_json(&paths.group)?;
    let spec = gb.to_spec()?;
    let g = GroupData::enumerate(&spec)?;
    if !paths.chars.exists() {
        return Err(Error::MissingBundle {
            group: name.into(),
            kind: "chars".into(),
            dir: dir.display().to_string(),
        });
    }
    let cb: CharBundle = read_json(&paths.chars)?;
    if cb.group != name {
        return Err(Error::Validation(format!(
            "character bundle is for {:?}, expected {name:?}",
            cb.group
        )));
    }
    if cb.degrees != gb.degrees {
        return Err(Error::Validation(format!(
            "invariant degrees disagree between group and character bundles for {name}"
        )));
    }
    let table = crate::chars::load_and_validate(&cb.to_input()?, &g)?;
    Ok((g, table))
}

/// Load the optional Rouquier bundle for `name`.
pub fn load_rouquier(
    dir: &Path,
    name: &str,
    g: &GroupData,
    table: &CharacterTable,
) -> Result<Option<RouquierData>> {
    let paths = BundlePaths::new(dir, name);
    if !paths.rouquier.exists() {
        return Ok(None);
    }
    let rb: RouquierBundle = read_json(&paths.rouquier)?;
    if rb.group != name {
        return Err(Error::Validation(format!(
            "rouquier bundle is for {:?}, expected {name:?}",
            rb.group
        )));
    }
    Ok(Some(rb.resolve(g, table)?))
}

/// Groups with a group bundle in the directory, sorted by name.
pub fn available_groups(dir: &Path) -> Result<Vec<String>> {
    let mut names = Vec::new();
    for entry in std::fs::read_dir(dir)? {
        let entry = entry?;
        let file = entry.file_name().to_string_lossy().into_owned();
        if let Some(stem) = file.strip_suffix(".group.json") {
            names.push(stem.to_string());
        }
    }
    names.sort();
    Ok(names)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::ratio;

    #[test]
    fn group_bundle_roundtrip() {
        let z = Cyclotomic::root_of_unity(3, 1).scale(&ratio(2, 3));
        let m = Matrix::from_entries(1, vec![z]);
        let spec = MatrixGroupSpec {
            name: "toy".into(),
            dim: 1,
            conductor: 3,
            generators: vec![m],
            degrees: vec![3],
            pinned_orbit_order: Some(vec![0]),
            enum_cap: DEFAULT_ENUM_CAP,
        };
        let bundle = GroupBundle::from_spec(&spec);
        let text = serde_json::to_string(&bundle).unwrap();
        let back: GroupBundle = serde_json::from_str(&text).unwrap();
        let spec2 = back.to_spec().unwrap();
        assert_eq!(spec2.generators[0], spec.generators[0]);
        assert_eq!(spec2.pinned_orbit_order, Some(vec![0]));
    }

    #[test]
    fn truncated_file_is_a_parse_error() {
        let dir = std::env::temp_dir().join("cmfam-test-bundles");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("broken.group.json");
        std::fs::write(&path, "{ \"name\": \"broken\", ").unwrap();
        let err = read_json::<GroupBundle>(&path).unwrap_err();
        match err {
            Error::Parse { path: p, .. } => assert!(p.contains("broken.group.json")),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn missing_bundle_error() {
        let dir = std::env::temp_dir().join("cmfam-test-missing");
        std::fs::create_dir_all(&dir).unwrap();
        let err = load_group_and_table(&dir, "NoSuchGroup").unwrap_err();
        match err {
            Error::MissingBundle { group, kind, .. } => {
                assert_eq!(group, "NoSuchGroup");
                assert_eq!(kind, "group");
            }
            other => panic!("expected missing bundle, got {other:?}"),
        }
    }
}
