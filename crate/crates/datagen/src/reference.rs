//! Published reference tables for the shipped groups: character values on
//! reflection classes, Euler-element central character forms,
//! supersingularity flags, generic family structure, the Euler-variety orbit
//! tables, and the essential-hyperplane data with the corresponding generic
//! Rouquier families.
//!
//! Value strings are integer polynomials in `z` (= zeta of order
//! [`RefGroup::zeta`]): e.g. "-2z-1", "z^2-1", "0". Column headings are
//! words in the generators, e.g. "s2" for the class of s squared.

pub struct RefGroup {
    pub name: &'static str,
    pub order: usize,
    /// (element order, class length) per reflection class, as a multiset.
    pub refl_classes: &'static [(u32, usize)],
    /// Order of the zeta used in `values` strings.
    pub zeta: u32,
    /// Generator words heading the printed character-value columns.
    pub refl_words: &'static [&'static str],
    pub rows: &'static [RefRow],
    /// Printed arrangement table: (orbit representative, orbit length).
    pub orbit_table: &'static [(&'static [i64], usize)],
    /// Non-singleton generic Euler (= Calogero-Moser) families.
    pub families: &'static [&'static [&'static str]],
    /// Non-singleton generic Rouquier families.
    pub rouquier_families: &'static [&'static [&'static str]],
    /// Essential hyperplanes, as unions of (sub)orbits.
    pub essential: &'static [EssentialPart],
    pub essential_count: usize,
    /// Data source note for the Rouquier bundle.
    pub provenance: &'static str,
}

pub struct RefRow {
    pub label: &'static str,
    pub values: &'static [&'static str],
    /// omega coefficients in parameter order.
    pub omega: &'static [i64],
    /// 'y' / 'n' as printed; '-' where the published table has no ss column.
    pub ss: char,
}

pub enum EssentialPart {
    /// Full Young-subgroup orbit of the representative.
    Orbit(&'static [i64]),
    /// Orbit under the subgroup generated by explicit coordinate
    /// permutations (`result[i] = v[perm[i]]`).
    SubOrbit {
        rep: &'static [i64],
        gens: &'static [&'static [usize]],
    },
}

const fn row(
    label: &'static str,
    values: &'static [&'static str],
    omega: &'static [i64],
    ss: char,
) -> RefRow {
    RefRow {
        label,
        values,
        omega,
        ss,
    }
}

const CHL: &str = "generic Rouquier families and essential hyperplanes after M. Chlouveraki, \
Blocks and Families for Cyclotomic Hecke Algebras (Lecture Notes in Mathematics 1981)";

pub static G4: RefGroup = RefGroup {
    name: "G4",
    order: 24,
    refl_classes: &[(3, 4), (3, 4)],
    zeta: 3,
    refl_words: &["s", "s2"],
    rows: &[
        row("phi{1,0}", &["1", "1"], &[12, -12, 0], '-'),
        row("phi{1,4}", &["z", "-z-1"], &[0, 0, 0], '-'),
        row("phi{1,8}", &["-z-1", "z"], &[12, 0, -12], '-'),
        row("phi{2,5}", &["-1", "-1"], &[6, 0, -6], '-'),
        row("phi{2,3}", &["-z", "z+1"], &[12, -6, -6], '-'),
        row("phi{2,1}", &["z+1", "-z"], &[6, -6, 0], '-'),
        row("phi{3,2}", &["0", "0"], &[8, -4, -4], '-'),
    ],
    orbit_table: &[(&[0, 1, -1], 3), (&[1, -2, 1], 3)],
    families: &[],
    rouquier_families: &[],
    essential: &[
        EssentialPart::Orbit(&[0, 1, -1]),
        EssentialPart::Orbit(&[1, -2, 1]),
    ],
    essential_count: 6,
    provenance: CHL,
};

pub static G25: RefGroup = RefGroup {
    name: "G25",
    order: 648,
    refl_classes: &[(3, 12), (3, 12)],
    zeta: 3,
    refl_words: &["s", "s2"],
    rows: &[
        row("phi{1,0}", &["1", "1"], &[36, -36, 0], 'n'),
        row("phi{1,24}", &["-z-1", "z"], &[36, 0, -36], 'n'),
        row("phi{1,12}", &["z", "-z-1"], &[0, 0, 0], 'n'),
        row("phi{2,15}", &["-1", "-1"], &[18, 0, -18], 'n'),
        row("phi{2,9}", &["-z", "z+1"], &[36, -18, -18], 'n'),
        row("phi{2,3}", &["z+1", "-z"], &[18, -18, 0], 'n'),
        row("phi{3,6}", &["0", "0"], &[24, -12, -12], 'y'),
        row("phi{3,1}", &["z+2", "-z+1"], &[24, -24, 0], 'n'),
        row("phi{3,5}'", &["-z+1", "z+2"], &[36, -24, -12], 'n'),
        row("phi{3,13}''", &["-2z-1", "2z+1"], &[36, -12, -24], 'n'),
        row("phi{3,17}", &["-z-2", "z-1"], &[24, 0, -24], 'n'),
        row("phi{3,5}''", &["2z+1", "-2z-1"], &[12, -12, 0], 'n'),
        row("phi{3,13}'", &["z-1", "-z-2"], &[12, 0, -12], 'n'),
        row("phi{6,4}''", &["2z+1", "-2z-1"], &[18, -12, -6], 'n'),
        row("phi{6,10}", &["-z-2", "z-1"], &[24, -6, -18], 'n'),
        row("phi{6,8}'", &["z-1", "-z-2"], &[18, -6, -12], 'n'),
        row("phi{6,2}", &["z+2", "-z+1"], &[24, -18, -6], 'n'),
        row("phi{6,8}''", &["-2z-1", "2z+1"], &[30, -12, -18], 'n'),
        row("phi{6,4}'", &["-z+1", "z+2"], &[30, -18, -12], 'n'),
        row("phi{8,3}", &["2", "2"], &[27, -18, -9], 'n'),
        row("phi{8,9}", &["-2z-2", "2z"], &[27, -9, -18], 'n'),
        row("phi{8,6}", &["2z", "-2z-2"], &[18, -9, -9], 'n'),
        row("phi{9,7}", &["0", "0"], &[24, -12, -12], 'y'),
        row("phi{9,5}", &["0", "0"], &[24, -12, -12], 'y'),
    ],
    orbit_table: &[
        (&[0, 1, -1], 3),
        (&[1, -6, 5], 6),
        (&[1, -4, 3], 6),
        (&[1, -3, 2], 6),
        (&[1, -2, 1], 3),
        (&[2, -5, 3], 6),
    ],
    families: &[&["phi{3,6}", "phi{9,7}", "phi{9,5}"]],
    rouquier_families: &[&["phi{9,7}", "phi{9,5}"]],
    essential: &[
        EssentialPart::Orbit(&[0, 1, -1]),
        EssentialPart::Orbit(&[1, -3, 2]),
        EssentialPart::Orbit(&[1, -2, 1]),
    ],
    essential_count: 12,
    provenance: CHL,
};

pub static G5: RefGroup = RefGroup {
    name: "G5",
    order: 72,
    refl_classes: &[(3, 4), (3, 4), (3, 4), (3, 4)],
    zeta: 3,
    // The published table heads this column "s^2", but the printed pairs are
    // only consistent as values on t (e.g. a linear character cannot take
    // (z, 1) on (s, s^2)); the columns are the orbit representatives s, t.
    refl_words: &["s", "t"],
    rows: &[
        row("phi{1,0}", &["1", "1"], &[12, -12, 0, 12, -12, 0], 'n'),
        row("phi{1,12}''", &["-z-1", "z"], &[12, 0, -12, 0, 0, 0], 'n'),
        row("phi{1,16}", &["-z-1", "-z-1"], &[12, 0, -12, 12, 0, -12], 'n'),
        row("phi{1,4}'", &["1", "z"], &[12, -12, 0, 0, 0, 0], 'n'),
        row("phi{1,8}''", &["z", "z"], &[0, 0, 0, 0, 0, 0], 'n'),
        row("phi{1,8}'", &["1", "-z-1"], &[12, -12, 0, 12, 0, -12], 'n'),
        row("phi{1,8}'''", &["-z-1", "1"], &[12, 0, -12, 12, -12, 0], 'n'),
        row("phi{1,4}''", &["z", "1"], &[0, 0, 0, 12, -12, 0], 'n'),
        row("phi{1,12}'", &["z", "-z-1"], &[0, 0, 0, 12, 0, -12], 'n'),
        row("phi{2,9}", &["-1", "-1"], &[6, 0, -6, 6, 0, -6], 'n'),
        row("phi{2,7}''", &["-z", "-1"], &[12, -6, -6, 6, 0, -6], 'n'),
        row("phi{2,3}'", &["-z", "z+1"], &[12, -6, -6, 6, -6, 0], 'n'),
        row("phi{2,5}'''", &["z+1", "-1"], &[6, -6, 0, 6, 0, -6], 'n'),
        row("phi{2,3}''", &["z+1", "-z"], &[6, -6, 0, 12, -6, -6], 'n'),
        row("phi{2,5}''", &["-z", "-z"], &[12, -6, -6, 12, -6, -6], 'n'),
        row("phi{2,1}", &["z+1", "z+1"], &[6, -6, 0, 6, -6, 0], 'n'),
        row("phi{2,7}'", &["-1", "-z"], &[6, 0, -6, 12, -6, -6], 'n'),
        row("phi{2,5}'", &["-1", "z+1"], &[6, 0, -6, 6, -6, 0], 'n'),
        row("phi{3,6}", &["0", "0"], &[8, -4, -4, 8, -4, -4], 'y'),
        row("phi{3,4}", &["0", "0"], &[8, -4, -4, 8, -4, -4], 'y'),
        row("phi{3,2}", &["0", "0"], &[8, -4, -4, 8, -4, -4], 'y'),
    ],
    orbit_table: &[
        (&[0, 1, -1, 0, 0, 0], 3),
        (&[0, 0, 0, 0, 1, -1], 3),
        (&[0, 1, -1, 0, -1, 1], 18),
        (&[0, 1, -1, -2, 1, 1], 18),
        (&[1, -2, 1, 0, -1, 1], 18),
        (&[1, -2, 1, -2, 1, 1], 9),
    ],
    families: &[&["phi{3,6}", "phi{3,4}", "phi{3,2}"]],
    rouquier_families: &[&["phi{3,6}", "phi{3,4}", "phi{3,2}"]],
    essential: &[
        EssentialPart::Orbit(&[0, 1, -1, 0, 0, 0]),
        EssentialPart::Orbit(&[0, 0, 0, 0, 1, -1]),
        EssentialPart::Orbit(&[1, -2, 1, -2, 1, 1]),
        EssentialPart::SubOrbit {
            rep: &[0, 1, -1, 0, -1, 1],
            gens: &[&[2, 0, 1, 3, 4, 5], &[0, 1, 2, 5, 3, 4]],
        },
    ],
    essential_count: 24,
    provenance: CHL,
};

pub static G6: RefGroup = RefGroup {
    name: "G6",
    order: 48,
    refl_classes: &[(2, 6), (3, 4), (3, 4)],
    zeta: 12,
    refl_words: &["s", "t", "t2"],
    rows: &[
        row("phi{1,0}", &["1", "1", "1"], &[12, -12, 12, -12, 0], 'n'),
        row("phi{1,4}", &["1", "z^2-1", "-z^2"], &[12, -12, 0, 0, 0], 'n'),
        row("phi{1,8}", &["1", "-z^2", "z^2-1"], &[12, -12, 12, 0, -12], 'n'),
        row("phi{1,6}", &["-1", "1", "1"], &[0, 0, 12, -12, 0], 'n'),
        row("phi{1,10}", &["-1", "z^2-1", "-z^2"], &[0, 0, 0, 0, 0], 'n'),
        row("phi{1,14}", &["-1", "-z^2", "z^2-1"], &[0, 0, 12, 0, -12], 'n'),
        row("phi{2,5}''", &["0", "-1", "-1"], &[6, -6, 6, 0, -6], 'y'),
        row("phi{2,3}''", &["0", "-z^2+1", "z^2"], &[6, -6, 12, -6, -6], 'y'),
        row("phi{2,3}'", &["0", "z^2", "-z^2+1"], &[6, -6, 6, -6, 0], 'y'),
        row("phi{2,7}", &["0", "-1", "-1"], &[6, -6, 6, 0, -6], 'y'),
        row("phi{2,1}", &["0", "z^2", "-z^2+1"], &[6, -6, 6, -6, 0], 'y'),
        row("phi{2,5}'", &["0", "-z^2+1", "z^2"], &[6, -6, 12, -6, -6], 'y'),
        row("phi{3,2}", &["1", "0", "0"], &[8, -8, 8, -4, -4], 'n'),
        row("phi{3,4}", &["-1", "0", "0"], &[4, -4, 8, -4, -4], 'n'),
    ],
    orbit_table: &[
        (&[0, 0, 0, 1, -1], 3),
        (&[1, -1, 0, 0, 0], 1),
        (&[1, -1, 0, -1, 1], 6),
        (&[1, -1, -2, 1, 1], 6),
        (&[2, -2, -2, 1, 1], 6),
    ],
    families: &[
        &["phi{2,5}''", "phi{2,7}"],
        &["phi{2,3}''", "phi{2,5}'"],
        &["phi{2,3}'", "phi{2,1}"],
    ],
    rouquier_families: &[
        &["phi{2,5}''", "phi{2,7}"],
        &["phi{2,3}''", "phi{2,5}'"],
        &["phi{2,3}'", "phi{2,1}"],
    ],
    essential: &[
        EssentialPart::Orbit(&[0, 0, 0, 1, -1]),
        EssentialPart::Orbit(&[1, -1, 0, 0, 0]),
        EssentialPart::Orbit(&[1, -1, 0, -1, 1]),
        EssentialPart::Orbit(&[1, -1, -2, 1, 1]),
    ],
    essential_count: 16,
    provenance: CHL,
};

pub static G8: RefGroup = RefGroup {
    name: "G8",
    order: 96,
    refl_classes: &[(4, 6), (2, 6), (4, 6)],
    zeta: 4,
    refl_words: &["s", "s2", "s3"],
    rows: &[
        row("phi{1,0}", &["1", "1", "1"], &[24, -24, 0, 0], 'n'),
        row("phi{1,6}", &["z", "-1", "-z"], &[0, 0, 0, 0], 'n'),
        row("phi{1,12}", &["-1", "1", "-1"], &[24, 0, 0, -24], 'n'),
        row("phi{1,18}", &["-z", "-1", "z"], &[24, 0, -24, 0], 'n'),
        row("phi{2,1}", &["z+1", "0", "-z+1"], &[12, -12, 0, 0], 'n'),
        row("phi{2,4}", &["0", "2", "0"], &[24, -12, 0, -12], 'n'),
        row("phi{2,7}'", &["-z+1", "0", "z+1"], &[24, -12, -12, 0], 'n'),
        row("phi{2,7}''", &["z-1", "0", "-z-1"], &[12, 0, 0, -12], 'n'),
        row("phi{2,10}", &["0", "-2", "0"], &[12, 0, -12, 0], 'n'),
        row("phi{2,13}", &["-z-1", "0", "z-1"], &[24, 0, -12, -12], 'n'),
        row("phi{3,8}", &["-1", "-1", "-1"], &[16, 0, -8, -8], 'n'),
        row("phi{3,6}", &["-z", "1", "z"], &[24, -8, -8, -8], 'n'),
        row("phi{3,4}", &["1", "-1", "1"], &[16, -8, -8, 0], 'n'),
        row("phi{3,2}", &["z", "1", "-z"], &[16, -8, 0, -8], 'n'),
        row("phi{4,5}", &["0", "0", "0"], &[18, -6, -6, -6], 'y'),
        row("phi{4,3}", &["0", "0", "0"], &[18, -6, -6, -6], 'y'),
    ],
    orbit_table: &[
        (&[0, 0, 1, -1], 6),
        (&[0, 1, -2, 1], 12),
        (&[1, -3, 1, 1], 4),
        (&[1, -2, -2, 3], 12),
        (&[1, -1, -1, 1], 3),
    ],
    families: &[&["phi{4,5}", "phi{4,3}"]],
    rouquier_families: &[&["phi{4,5}", "phi{4,3}"]],
    essential: &[
        EssentialPart::Orbit(&[0, 0, 1, -1]),
        EssentialPart::Orbit(&[0, 1, -2, 1]),
        EssentialPart::Orbit(&[1, -3, 1, 1]),
        EssentialPart::SubOrbit {
            rep: &[1, -1, -1, 1],
            gens: &[&[2, 1, 0, 3], &[0, 3, 2, 1]],
        },
    ],
    essential_count: 24,
    provenance: CHL,
};

pub static G10: RefGroup = RefGroup {
    name: "G10",
    order: 288,
    refl_classes: &[(3, 8), (3, 8), (4, 6), (2, 6), (4, 6)],
    zeta: 12,
    refl_words: &["s", "s2", "t", "t2", "t3"],
    rows: &[
        row("phi{1,0}", &["1", "1", "1", "1", "1"], &[24, -24, 0, 24, -24, 0, 0], 'n'),
        row("phi{1,6}", &["1", "1", "z^3", "-1", "-z^3"], &[24, -24, 0, 0, 0, 0, 0], 'n'),
        row("phi{1,12}", &["1", "1", "-1", "1", "-1"], &[24, -24, 0, 24, 0, 0, -24], 'n'),
        row("phi{1,18}", &["1", "1", "-z^3", "-1", "z^3"], &[24, -24, 0, 24, 0, -24, 0], 'n'),
        row("phi{1,8}", &["z^2-1", "-z^2", "1", "1", "1"], &[0, 0, 0, 24, -24, 0, 0], 'n'),
        row("phi{1,14}", &["z^2-1", "-z^2", "z^3", "-1", "-z^3"], &[0, 0, 0, 0, 0, 0, 0], 'n'),
        row("phi{1,20}", &["z^2-1", "-z^2", "-1", "1", "-1"], &[0, 0, 0, 24, 0, 0, -24], 'n'),
        row("phi{1,26}", &["z^2-1", "-z^2", "-z^3", "-1", "z^3"], &[0, 0, 0, 24, 0, -24, 0], 'n'),
        row("phi{1,16}", &["-z^2", "z^2-1", "1", "1", "1"], &[24, 0, -24, 24, -24, 0, 0], 'n'),
        row("phi{1,22}", &["-z^2", "z^2-1", "z^3", "-1", "-z^3"], &[24, 0, -24, 0, 0, 0, 0], 'n'),
        row("phi{1,28}", &["-z^2", "z^2-1", "-1", "1", "-1"], &[24, 0, -24, 24, 0, 0, -24], 'n'),
        row("phi{1,34}", &["-z^2", "z^2-1", "-z^3", "-1", "z^3"], &[24, 0, -24, 24, 0, -24, 0], 'n'),
        row("phi{2,9}", &["-1", "-1", "z^3+1", "0", "-z^3+1"], &[12, 0, -12, 12, -12, 0, 0], 'n'),
        row("phi{2,12}", &["-1", "-1", "0", "2", "0"], &[12, 0, -12, 24, -12, 0, -12], 'n'),
        row("phi{2,15}'", &["-1", "-1", "-z^3+1", "0", "z^3+1"], &[12, 0, -12, 24, -12, -12, 0], 'n'),
        row("phi{2,15}''", &["-1", "-1", "z^3-1", "0", "-z^3-1"], &[12, 0, -12, 12, 0, 0, -12], 'n'),
        row("phi{2,18}", &["-1", "-1", "0", "-2", "0"], &[12, 0, -12, 12, 0, -12, 0], 'n'),
        row("phi{2,21}", &["-1", "-1", "-z^3-1", "0", "z^3-1"], &[12, 0, -12, 24, 0, -12, -12], 'n'),
        row("phi{2,5}", &["-z^2+1", "z^2", "z^3+1", "0", "-z^3+1"], &[24, -12, -12, 12, -12, 0, 0], 'n'),
        row("phi{2,8}", &["-z^2+1", "z^2", "0", "2", "0"], &[24, -12, -12, 24, -12, 0, -12], 'n'),
        row("phi{2,11}'", &["-z^2+1", "z^2", "-z^3+1", "0", "z^3+1"], &[24, -12, -12, 24, -12, -12, 0], 'n'),
        row("phi{2,11}''", &["-z^2+1", "z^2", "z^3-1", "0", "-z^3-1"], &[24, -12, -12, 12, 0, 0, -12], 'n'),
        row("phi{2,14}", &["-z^2+1", "z^2", "0", "-2", "0"], &[24, -12, -12, 12, 0, -12, 0], 'n'),
        row("phi{2,17}", &["-z^2+1", "z^2", "-z^3-1", "0", "z^3-1"], &[24, -12, -12, 24, 0, -12, -12], 'n'),
        row("phi{2,1}", &["z^2", "-z^2+1", "z^3+1", "0", "-z^3+1"], &[12, -12, 0, 12, -12, 0, 0], 'n'),
        row("phi{2,4}", &["z^2", "-z^2+1", "0", "2", "0"], &[12, -12, 0, 24, -12, 0, -12], 'n'),
        row("phi{2,7}'", &["z^2", "-z^2+1", "-z^3+1", "0", "z^3+1"], &[12, -12, 0, 24, -12, -12, 0], 'n'),
        row("phi{2,7}''", &["z^2", "-z^2+1", "z^3-1", "0", "-z^3-1"], &[12, -12, 0, 12, 0, 0, -12], 'n'),
        row("phi{2,10}", &["z^2", "-z^2+1", "0", "-2", "0"], &[12, -12, 0, 12, 0, -12, 0], 'n'),
        row("phi{2,13}", &["z^2", "-z^2+1", "-z^3-1", "0", "z^3-1"], &[12, -12, 0, 24, 0, -12, -12], 'n'),
        row("phi{3,8}''", &["0", "0", "-1", "-1", "-1"], &[16, -8, -8, 16, 0, -8, -8], 'y'),
        row("phi{3,14}", &["0", "0", "-z^3", "1", "z^3"], &[16, -8, -8, 24, -8, -8, -8], 'y'),
        row("phi{3,8}'", &["0", "0", "1", "-1", "1"], &[16, -8, -8, 16, -8, -8, 0], 'y'),
        row("phi{3,2}", &["0", "0", "z^3", "1", "-z^3"], &[16, -8, -8, 16, -8, 0, -8], 'y'),
        row("phi{3,16}", &["0", "0", "-1", "-1", "-1"], &[16, -8, -8, 16, 0, -8, -8], 'y'),
        row("phi{3,10}'", &["0", "0", "-z^3", "1", "z^3"], &[16, -8, -8, 24, -8, -8, -8], 'y'),
        row("phi{3,4}", &["0", "0", "1", "-1", "1"], &[16, -8, -8, 16, -8, -8, 0], 'y'),
        row("phi{3,10}''", &["0", "0", "z^3", "1", "-z^3"], &[16, -8, -8, 16, -8, 0, -8], 'y'),
        row("phi{3,12}'", &["0", "0", "-1", "-1", "-1"], &[16, -8, -8, 16, 0, -8, -8], 'y'),
        row("phi{3,6}''", &["0", "0", "-z^3", "1", "z^3"], &[16, -8, -8, 24, -8, -8, -8], 'y'),
        row("phi{3,12}''", &["0", "0", "1", "-1", "1"], &[16, -8, -8, 16, -8, -8, 0], 'y'),
        row("phi{3,6}'", &["0", "0", "z^3", "1", "-z^3"], &[16, -8, -8, 16, -8, 0, -8], 'y'),
        row("phi{4,9}", &["1", "1", "0", "0", "0"], &[18, -12, -6, 18, -6, -6, -6], 'n'),
        row("phi{4,11}", &["z^2-1", "-z^2", "0", "0", "0"], &[12, -6, -6, 18, -6, -6, -6], 'n'),
        row("phi{4,7}", &["-z^2", "z^2-1", "0", "0", "0"], &[18, -6, -12, 18, -6, -6, -6], 'y'),
        row("phi{4,3}", &["1", "1", "0", "0", "0"], &[18, -12, -6, 18, -6, -6, -6], 'y'),
        row("phi{4,5}", &["z^2-1", "-z^2", "0", "0", "0"], &[12, -6, -6, 18, -6, -6, -6], 'y'),
        row("phi{4,13}", &["-z^2", "z^2-1", "0", "0", "0"], &[18, -6, -12, 18, -6, -6, -6], 'n'),
    ],
    orbit_table: &[
        (&[0, 0, 0, 0, 0, 1, -1], 6),
        (&[0, 1, -1, 0, 0, 0, 0], 3),
        (&[0, 1, -1, 0, 0, -1, 1], 36),
        (&[0, 0, 0, 1, -1, -1, 1], 3),
        (&[0, 1, -1, 0, -2, 1, 1], 72),
        (&[1, -2, 1, 0, 0, -1, 1], 36),
        (&[0, 1, -1, -1, -1, 1, 1], 18),
        (&[1, -3, 2, -3, 1, 1, 1], 24),
        (&[1, -2, 1, 0, -2, 1, 1], 36),
        (&[1, -2, 1, -3, 1, 1, 1], 12),
        (&[1, -2, 1, -2, -2, 1, 3], 36),
        (&[1, -2, 1, -1, -1, 1, 1], 18),
    ],
    families: &[
        &["phi{3,8}''", "phi{3,16}", "phi{3,12}'"],
        &["phi{3,14}", "phi{3,10}'", "phi{3,6}''"],
        &["phi{3,8}'", "phi{3,4}", "phi{3,12}''"],
        &["phi{3,2}", "phi{3,10}''", "phi{3,6}'"],
        &["phi{4,9}", "phi{4,3}"],
        &["phi{4,11}", "phi{4,5}"],
        &["phi{4,7}", "phi{4,13}"],
    ],
    rouquier_families: &[
        &["phi{3,8}''", "phi{3,16}", "phi{3,12}'"],
        &["phi{3,14}", "phi{3,10}'", "phi{3,6}''"],
        &["phi{3,8}'", "phi{3,4}", "phi{3,12}''"],
        &["phi{3,2}", "phi{3,10}''", "phi{3,6}'"],
        &["phi{4,9}", "phi{4,3}"],
        &["phi{4,11}", "phi{4,5}"],
        &["phi{4,7}", "phi{4,13}"],
    ],
    essential: &[
        EssentialPart::Orbit(&[0, 0, 0, 0, 0, 1, -1]),
        EssentialPart::Orbit(&[0, 1, -1, 0, 0, 0, 0]),
        EssentialPart::Orbit(&[1, -2, 1, 0, -2, 1, 1]),
        EssentialPart::Orbit(&[1, -2, 1, -3, 1, 1, 1]),
        EssentialPart::SubOrbit {
            rep: &[0, 1, -1, 0, 0, -1, 1],
            gens: &[&[2, 1, 0, 3, 6, 5, 4], &[2, 0, 1, 5, 6, 3, 4]],
        },
        EssentialPart::SubOrbit {
            rep: &[0, 1, -1, -1, -1, 1, 1],
            gens: &[&[2, 1, 0, 3, 6, 5, 4], &[2, 0, 1, 5, 6, 3, 4]],
        },
    ],
    essential_count: 81,
    provenance: CHL,
};

pub static G23: RefGroup = RefGroup {
    name: "G23",
    order: 120,
    refl_classes: &[(2, 15)],
    zeta: 5,
    refl_words: &["s"],
    rows: &[
        row("phi{1,15}", &["-1"], &[0, 0], 'n'),
        row("phi{1,0}", &["1"], &[30, -30], 'n'),
        row("phi{5,5}", &["-1"], &[12, -12], 'n'),
        row("phi{5,2}", &["1"], &[18, -18], 'n'),
        row("phi{3,6}", &["-1"], &[10, -10], 'y'),
        row("phi{3,8}", &["-1"], &[10, -10], 'n'),
        row("phi{3,1}", &["1"], &[20, -20], 'y'),
        row("phi{3,3}", &["1"], &[20, -20], 'n'),
        row("phi{4,3}", &["0"], &[15, -15], 'y'),
        row("phi{4,4}", &["0"], &[15, -15], 'y'),
    ],
    orbit_table: &[(&[1, -1], 1)],
    families: &[
        &["phi{3,6}", "phi{3,8}"],
        &["phi{3,1}", "phi{3,3}"],
        &["phi{4,3}", "phi{4,4}"],
    ],
    rouquier_families: &[
        &["phi{3,6}", "phi{3,8}"],
        &["phi{3,1}", "phi{3,3}"],
        &["phi{4,3}", "phi{4,4}"],
    ],
    essential: &[EssentialPart::Orbit(&[1, -1])],
    essential_count: 1,
    provenance: CHL,
};

pub static G24: RefGroup = RefGroup {
    name: "G24",
    order: 336,
    refl_classes: &[(2, 21)],
    zeta: 7,
    refl_words: &["s"],
    rows: &[
        row("phi{1,0}", &["1"], &[42, -42], 'n'),
        row("phi{1,21}", &["-1"], &[0, 0], 'n'),
        row("phi{3,10}", &["-1"], &[14, -14], 'y'),
        row("phi{3,3}", &["1"], &[28, -28], 'y'),
        row("phi{3,1}", &["1"], &[28, -28], 'y'),
        row("phi{3,8}", &["-1"], &[14, -14], 'y'),
        row("phi{6,2}", &["2"], &[28, -28], 'y'),
        row("phi{6,9}", &["-2"], &[14, -14], 'y'),
        row("phi{7,3}", &["1"], &[24, -24], 'n'),
        row("phi{7,6}", &["-1"], &[18, -18], 'n'),
        row("phi{8,5}", &["0"], &[21, -21], 'y'),
        row("phi{8,4}", &["0"], &[21, -21], 'y'),
    ],
    orbit_table: &[(&[1, -1], 1)],
    families: &[
        &["phi{3,8}", "phi{3,10}", "phi{6,9}"],
        &["phi{3,1}", "phi{3,3}", "phi{6,2}"],
        &["phi{8,4}", "phi{8,5}"],
    ],
    rouquier_families: &[
        &["phi{3,8}", "phi{3,10}", "phi{6,9}"],
        &["phi{3,1}", "phi{3,3}", "phi{6,2}"],
        &["phi{8,4}", "phi{8,5}"],
    ],
    essential: &[EssentialPart::Orbit(&[1, -1])],
    essential_count: 1,
    provenance: CHL,
};

pub static G26: RefGroup = RefGroup {
    name: "G26",
    order: 1296,
    refl_classes: &[(2, 9), (3, 12), (3, 12)],
    zeta: 3,
    refl_words: &["s", "t", "t2"],
    rows: &[
        row("phi{1,0}", &["1", "1", "1"], &[18, -18, 36, -36, 0], 'n'),
        row("phi{1,9}", &["-1", "1", "1"], &[0, 0, 36, -36, 0], 'n'),
        row("phi{1,33}", &["-1", "-z-1", "z"], &[0, 0, 36, 0, -36], 'n'),
        row("phi{1,21}", &["-1", "z", "-z-1"], &[0, 0, 0, 0, 0], 'n'),
        row("phi{1,24}", &["1", "-z-1", "z"], &[18, -18, 36, 0, -36], 'n'),
        row("phi{1,12}", &["1", "z", "-z-1"], &[18, -18, 0, 0, 0], 'n'),
        row("phi{2,24}", &["-2", "-1", "-1"], &[0, 0, 18, 0, -18], 'n'),
        row("phi{2,15}", &["2", "-1", "-1"], &[18, -18, 18, 0, -18], 'n'),
        row("phi{2,12}", &["-2", "z+1", "-z"], &[0, 0, 18, -18, 0], 'n'),
        row("phi{2,3}", &["2", "z+1", "-z"], &[18, -18, 18, -18, 0], 'n'),
        row("phi{2,18}", &["-2", "-z", "z+1"], &[0, 0, 36, -18, -18], 'n'),
        row("phi{2,9}", &["2", "-z", "z+1"], &[18, -18, 36, -18, -18], 'n'),
        row("phi{3,6}", &["3", "0", "0"], &[18, -18, 24, -12, -12], 'n'),
        row("phi{3,15}", &["-3", "0", "0"], &[0, 0, 24, -12, -12], 'n'),
        row("phi{3,8}''", &["-1", "2z+1", "-2z-1"], &[6, -6, 12, -12, 0], 'n'),
        row("phi{3,5}''", &["1", "2z+1", "-2z-1"], &[12, -12, 12, -12, 0], 'n'),
        row("phi{3,8}'", &["-1", "-z+1", "z+2"], &[6, -6, 36, -24, -12], 'n'),
        row("phi{3,5}'", &["1", "-z+1", "z+2"], &[12, -12, 36, -24, -12], 'n'),
        row("phi{3,20}", &["-1", "-z-2", "z-1"], &[6, -6, 24, 0, -24], 'n'),
        row("phi{3,17}", &["1", "-z-2", "z-1"], &[12, -12, 24, 0, -24], 'n'),
        row("phi{3,16}''", &["-1", "-2z-1", "2z+1"], &[6, -6, 36, -12, -24], 'n'),
        row("phi{3,13}''", &["1", "-2z-1", "2z+1"], &[12, -12, 36, -12, -24], 'n'),
        row("phi{3,4}", &["-1", "z+2", "-z+1"], &[6, -6, 24, -24, 0], 'n'),
        row("phi{3,1}", &["1", "z+2", "-z+1"], &[12, -12, 24, -24, 0], 'n'),
        row("phi{3,16}'", &["-1", "z-1", "-z-2"], &[6, -6, 12, 0, -12], 'n'),
        row("phi{3,13}'", &["1", "z-1", "-z-2"], &[12, -12, 12, 0, -12], 'n'),
        row("phi{6,8}''", &["2", "-2z-1", "2z+1"], &[12, -12, 30, -12, -18], 'n'),
        row("phi{6,11}''", &["-2", "-2z-1", "2z+1"], &[6, -6, 30, -12, -18], 'n'),
        row("phi{6,8}'", &["2", "z-1", "-z-2"], &[12, -12, 18, -6, -12], 'n'),
        row("phi{6,11}'", &["-2", "z-1", "-z-2"], &[6, -6, 18, -6, -12], 'n'),
        row("phi{6,2}", &["2", "z+2", "-z+1"], &[12, -12, 24, -18, -6], 'n'),
        row("phi{6,5}", &["-2", "z+2", "-z+1"], &[6, -6, 24, -18, -6], 'n'),
        row("phi{6,4}''", &["2", "2z+1", "-2z-1"], &[12, -12, 18, -12, -6], 'n'),
        row("phi{6,7}''", &["-2", "2z+1", "-2z-1"], &[6, -6, 18, -12, -6], 'n'),
        row("phi{6,10}", &["2", "-z-2", "z-1"], &[12, -12, 24, -6, -18], 'n'),
        row("phi{6,13}", &["-2", "-z-2", "z-1"], &[6, -6, 24, -6, -18], 'n'),
        row("phi{6,4}'", &["2", "-z+1", "z+2"], &[12, -12, 30, -18, -12], 'n'),
        row("phi{6,7}'", &["-2", "-z+1", "z+2"], &[6, -6, 30, -18, -12], 'n'),
        row("phi{8,6}'", &["0", "2", "2"], &[9, -9, 27, -18, -9], 'y'),
        row("phi{8,3}", &["0", "2", "2"], &[9, -9, 27, -18, -9], 'y'),
        row("phi{8,9}''", &["0", "-2z-2", "2z"], &[9, -9, 27, -9, -18], 'y'),
        row("phi{8,12}", &["0", "-2z-2", "2z"], &[9, -9, 27, -9, -18], 'y'),
        row("phi{8,6}''", &["0", "2z", "-2z-2"], &[9, -9, 18, -9, -9], 'y'),
        row("phi{8,9}'", &["0", "2z", "-2z-2"], &[9, -9, 18, -9, -9], 'y'),
        row("phi{9,8}", &["-3", "0", "0"], &[6, -6, 24, -12, -12], 'y'),
        row("phi{9,5}", &["3", "0", "0"], &[12, -12, 24, -12, -12], 'y'),
        row("phi{9,10}", &["-3", "0", "0"], &[6, -6, 24, -12, -12], 'y'),
        row("phi{9,7}", &["3", "0", "0"], &[12, -12, 24, -12, -12], 'y'),
    ],
    orbit_table: &[
        (&[0, 0, 0, 1, -1], 3),
        (&[1, -1, 0, 0, 0], 1),
        (&[0, 0, 1, -3, 2], 6),
        (&[0, 0, 1, -2, 1], 3),
        (&[1, -1, 0, -4, 4], 6),
        (&[1, -1, 0, -3, 3], 6),
        (&[1, -1, 0, -2, 2], 6),
        (&[2, -2, 0, -1, 1], 6),
        (&[1, -1, 0, -1, 1], 6),
        (&[1, -1, -6, 1, 5], 12),
        (&[1, -1, -6, 2, 4], 12),
        (&[1, -1, -5, 2, 3], 12),
        (&[1, -1, -4, 1, 3], 12),
        (&[1, -1, -4, 2, 2], 6),
        (&[1, -1, -3, 1, 2], 12),
        (&[1, -1, -2, 1, 1], 6),
        (&[2, -2, -5, 2, 3], 12),
        (&[2, -2, -4, 1, 3], 12),
        (&[2, -2, -3, 1, 2], 12),
        (&[2, -2, -2, 1, 1], 6),
        (&[3, -3, -4, 2, 2], 6),
        (&[3, -3, -2, 1, 1], 6),
    ],
    families: &[
        &["phi{8,6}'", "phi{8,3}"],
        &["phi{8,9}''", "phi{8,12}"],
        &["phi{8,6}''", "phi{8,9}'"],
        &["phi{9,8}", "phi{9,10}"],
        &["phi{9,5}", "phi{9,7}"],
    ],
    rouquier_families: &[
        &["phi{8,6}'", "phi{8,3}"],
        &["phi{8,9}''", "phi{8,12}"],
        &["phi{8,6}''", "phi{8,9}'"],
        &["phi{9,8}", "phi{9,10}"],
        &["phi{9,5}", "phi{9,7}"],
    ],
    essential: &[
        EssentialPart::Orbit(&[0, 0, 0, 1, -1]),
        EssentialPart::Orbit(&[1, -1, 0, 0, 0]),
        EssentialPart::Orbit(&[0, 0, 1, -2, 1]),
        EssentialPart::Orbit(&[1, -1, 0, -1, 1]),
        EssentialPart::Orbit(&[1, -1, -3, 1, 2]),
        EssentialPart::Orbit(&[1, -1, -2, 1, 1]),
    ],
    essential_count: 31,
    provenance: CHL,
};

pub static S6: RefGroup = RefGroup {
    name: "S6",
    order: 720,
    refl_classes: &[(2, 15)],
    zeta: 1,
    refl_words: &["s"],
    rows: &[
        row("phi{1,0}", &["1"], &[30, -30], '-'),
        row("phi{1,15}", &["-1"], &[0, 0], '-'),
        row("phi{5,3}", &["1"], &[18, -18], '-'),
        row("phi{5,1}", &["3"], &[24, -24], '-'),
        row("phi{5,6}", &["-1"], &[12, -12], '-'),
        row("phi{5,10}", &["-3"], &[6, -6], '-'),
        row("phi{9,2}", &["3"], &[20, -20], '-'),
        row("phi{9,7}", &["-3"], &[10, -10], '-'),
        row("phi{10,3}", &["2"], &[18, -18], '-'),
        row("phi{10,6}", &["-2"], &[12, -12], '-'),
        row("phi{16,4}", &["0"], &[15, -15], '-'),
    ],
    orbit_table: &[(&[1, -1], 1)],
    families: &[&["phi{5,3}", "phi{10,3}"], &["phi{5,6}", "phi{10,6}"]],
    rouquier_families: &[],
    essential: &[],
    essential_count: 0,
    provenance: "",
};

pub static ALL: &[&RefGroup] = &[&G4, &G5, &G6, &G8, &G10, &G23, &G24, &G25, &G26, &S6];

pub fn by_name(name: &str) -> Option<&'static RefGroup> {
    ALL.iter().copied().find(|g| g.name == name)
}

/// Parse a value string: an integer polynomial in z of order `zeta`.
pub fn parse_value(s: &str, zeta: u32) -> cmfam::exact::Cyclotomic {
    use cmfam::exact::{Cyclotomic, Rational};
    let mut terms: Vec<(u32, Rational)> = Vec::new();
    let bytes: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut i = 0;
    let mut sign = 1i64;
    if i < bytes.len() && (bytes[i] == '+' || bytes[i] == '-') {
        sign = if bytes[i] == '-' { -1 } else { 1 };
        i += 1;
    }
    while i < bytes.len() {
        let mut coeff: Option<i64> = None;
        let mut num = String::new();
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            num.push(bytes[i]);
            i += 1;
        }
        if !num.is_empty() {
            coeff = Some(num.parse().unwrap());
        }
        let mut exp = 0u32;
        if i < bytes.len() && bytes[i] == 'z' {
            i += 1;
            exp = 1;
            if i < bytes.len() && bytes[i] == '^' {
                i += 1;
                let mut e = String::new();
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    e.push(bytes[i]);
                    i += 1;
                }
                exp = e.parse().unwrap();
            }
            if coeff.is_none() {
                coeff = Some(1);
            }
        }
        let c = sign * coeff.expect("term must have a coefficient or a z");
        terms.push((exp, Rational::from_integer(c.into())));
        if i < bytes.len() {
            sign = match bytes[i] {
                '+' => 1,
                '-' => -1,
                other => panic!("unexpected character {other:?} in value {s:?}"),
            };
            i += 1;
        }
    }
    Cyclotomic::from_power_terms(zeta.max(1), &terms)
}

/// Resolve a generator word like "s", "s2", "t3" to (generator index, power).
pub fn parse_word(word: &str) -> (usize, u32) {
    let mut chars = word.chars();
    let gen = match chars.next().expect("nonempty word") {
        's' => 0,
        't' => 1,
        'u' => 2,
        other => panic!("unknown generator letter {other:?}"),
    };
    let rest: String = chars.collect();
    let power = if rest.is_empty() {
        1
    } else {
        rest.parse().expect("numeric power")
    };
    (gen, power)
}
