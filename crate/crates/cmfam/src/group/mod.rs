//! Finite complex reflection groups from generator matrices.
//!
//! [`GroupData::enumerate`] closes the generators under multiplication, then
//! derives conjugacy classes, reflections, reflection hyperplanes and their
//! orbits, and the ordered parameter index set used by every linear form
//! downstream. Everything is exact; elements are deduplicated by a canonical
//! serialization of their reduced cyclotomic entries.

pub mod matrix;

use std::collections::HashMap;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exact::cyclotomic::Cyclotomic;
use crate::exact::linform::ParamIndex;
use crate::exact::poly::{CPoly, Poly};
use crate::exact::rational::Rational;
use matrix::Matrix;

pub use matrix::normalize_projective;

/// A root of unity zeta_order^power in lowest terms; (1, 0) is 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RootOfUnity {
    pub order: u32,
    pub power: u32,
}

impl RootOfUnity {
    pub fn new(order: u32, power: i64) -> Self {
        let p = power.rem_euclid(order as i64) as u32;
        if p == 0 {
            return RootOfUnity { order: 1, power: 0 };
        }
        let g = p.gcd(&order);
        RootOfUnity {
            order: order / g,
            power: p / g,
        }
    }

    pub fn one() -> Self {
        RootOfUnity { order: 1, power: 0 }
    }

    pub fn is_one(&self) -> bool {
        self.order == 1
    }

    pub fn mul(&self, other: &Self) -> Self {
        let l = self.order.lcm(&other.order);
        RootOfUnity::new(
            l,
            (self.power as i64) * (l / self.order) as i64
                + (other.power as i64) * (l / other.order) as i64,
        )
    }

    pub fn inv(&self) -> Self {
        RootOfUnity::new(self.order, -(self.power as i64))
    }

    pub fn to_cyclotomic(&self, conductor: u32) -> Cyclotomic {
        assert!(
            conductor % self.order == 0,
            "conductor {conductor} does not host a root of order {}",
            self.order
        );
        Cyclotomic::root_of_unity(conductor, (self.power * (conductor / self.order)) as i64)
    }
}

/// Input description of a matrix group.
#[derive(Clone, Debug)]
pub struct MatrixGroupSpec {
    pub name: String,
    pub dim: usize,
    pub conductor: u32,
    pub generators: Vec<Matrix>,
    /// Invariant degrees d_1..d_n (bundle data, cross-checked downstream).
    pub degrees: Vec<u32>,
    /// Generator indices whose reflection-hyperplane orbits become
    /// Omega_1, Omega_2, ... in that order.
    pub pinned_orbit_order: Option<Vec<usize>>,
    pub enum_cap: usize,
}

pub const DEFAULT_ENUM_CAP: usize = 2_000_000;

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    /// Index of the canonical representative (lex-min element key).
    pub rep: usize,
    pub size: usize,
    pub element_order: u32,
    /// Eigenvalues on V with multiplicity, sorted.
    pub eigenvalues: Vec<RootOfUnity>,
    pub det: RootOfUnity,
    pub trace: Cyclotomic,
    pub is_reflection: bool,
    /// The unique non-trivial eigenvalue, for reflection classes.
    pub eps: Option<RootOfUnity>,
    /// Hyperplane orbit index (1-based), for reflection classes.
    pub orbit: Option<u32>,
}

/// A reflection hyperplane, stored as its projectivized coroot.
#[derive(Clone, Debug)]
pub struct FixedHyperplane {
    pub coroot: Vec<Cyclotomic>,
}

#[derive(Clone, Debug)]
pub struct HyperplaneOrbit {
    /// 1-based orbit index Omega.
    pub index: u32,
    /// Order of the pointwise stabilizer W_H, constant on the orbit.
    pub e: u32,
    /// Indices into `GroupData::hyperplanes`.
    pub hyperplanes: Vec<usize>,
    /// The e-1 reflection conjugacy classes with hyperplanes in this orbit.
    pub reflection_classes: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct GroupData {
    pub name: String,
    pub dim: usize,
    pub conductor: u32,
    pub degrees: Vec<u32>,
    pub elements: Vec<Matrix>,
    pub order: usize,
    pub inverse: Vec<usize>,
    pub classes: Vec<ConjugacyClass>,
    pub class_of: Vec<usize>,
    pub reflections: Vec<usize>,
    pub hyperplanes: Vec<FixedHyperplane>,
    pub hyperplane_of: HashMap<usize, usize>,
    pub orbits: Vec<HyperplaneOrbit>,
    key_index: HashMap<String, usize>,
}

impl GroupData {
    /// Enumerate the group generated by `spec.generators` and compute the
    /// full combinatorial structure.
    pub fn enumerate(spec: &MatrixGroupSpec) -> Result<Self> {
        for g in &spec.generators {
            if g.dim() != spec.dim {
                return Err(Error::Consistency {
                    context: format!("group {}", spec.name),
                    expected: format!("{0}x{0} generators", spec.dim),
                    got: format!("{0}x{0}", g.dim()),
                });
            }
            g.inverse().map_err(|_| Error::Singular)?;
        }

        let (elements, key_index) = close_under_multiplication(spec)?;
        let order = elements.len();

        let inverse: Vec<usize> = elements
            .iter()
            .map(|m| {
                let inv = m.inverse().expect("group element invertible");
                key_index[&inv.canonical_key()]
            })
            .collect();

        let (mut classes, class_of) =
            conjugacy_classes(&elements, &key_index, &spec.generators);

        // Eigenvalue data per class.
        for class in classes.iter_mut() {
            let rep = &elements[class.rep];
            let eig = eigenvalues_on_v(rep, spec.conductor, class.element_order)?;
            let det = eig
                .iter()
                .fold(RootOfUnity::one(), |acc, r| acc.mul(r));
            let ones = eig.iter().filter(|r| r.is_one()).count();
            class.is_reflection = class.element_order > 1 && ones == spec.dim - 1;
            if class.is_reflection {
                let eps = *eig.iter().find(|r| !r.is_one()).expect("non-identity");
                // For a reflection the non-trivial eigenvalue is the determinant.
                if eps != det {
                    return Err(Error::Consistency {
                        context: format!("reflection class of {}", spec.name),
                        expected: "eps equal to det".into(),
                        got: format!("{eps:?} vs {det:?}"),
                    });
                }
                class.eps = Some(eps);
            }
            class.trace = rep.trace();
            class.eigenvalues = eig;
            class.det = det;
        }

        let reflections: Vec<usize> = (0..order)
            .filter(|&i| classes[class_of[i]].is_reflection)
            .collect();

        let (hyperplanes, hyperplane_of) = reflection_hyperplanes(&elements, &reflections);
        let orbits = hyperplane_orbits(
            spec,
            &elements,
            &inverse,
            &class_of,
            &reflections,
            &hyperplanes,
            &hyperplane_of,
        )?;

        for orbit in &orbits {
            for &c in &orbit.reflection_classes {
                classes[c].orbit = Some(orbit.index);
            }
        }

        let data = GroupData {
            name: spec.name.clone(),
            dim: spec.dim,
            conductor: spec.conductor,
            degrees: spec.degrees.clone(),
            elements,
            order,
            inverse,
            classes,
            class_of,
            reflections,
            hyperplanes,
            hyperplane_of,
            orbits,
            key_index,
        };
        data.validate()?;
        Ok(data)
    }

    /// The ordered parameter index set: orbits ascending, j ascending.
    pub fn parameter_space(&self) -> Vec<ParamIndex> {
        let mut out = Vec::new();
        for orbit in &self.orbits {
            for j in 0..orbit.e {
                out.push((orbit.index, j));
            }
        }
        out
    }

    /// Reflection classes as (class index, eps, orbit index), in canonical
    /// class order.
    pub fn reflection_classes(&self) -> Vec<(usize, RootOfUnity, u32)> {
        self.classes
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_reflection)
            .map(|(i, c)| (i, c.eps.unwrap(), c.orbit.unwrap()))
            .collect()
    }

    pub fn element_index(&self, m: &Matrix) -> Option<usize> {
        self.key_index.get(&m.canonical_key()).copied()
    }

    /// Class index of rep(class)^m.
    pub fn class_of_power(&self, class: usize, m: u32) -> usize {
        let rep = &self.elements[self.classes[class].rep];
        let mut acc = Matrix::identity(self.dim, self.conductor);
        for _ in 0..m {
            acc = acc.mul(rep);
        }
        self.class_of[self.element_index(&acc).expect("closed")]
    }

    /// Index of the class of inverses of the given class.
    pub fn inverse_class(&self, class: usize) -> usize {
        self.class_of[self.inverse[self.classes[class].rep]]
    }

    /// lcm of all element orders.
    pub fn exponent(&self) -> u32 {
        self.classes
            .iter()
            .fold(1u32, |acc, c| acc.lcm(&c.element_order))
    }

    pub fn identity_class(&self) -> usize {
        self.classes
            .iter()
            .position(|c| c.element_order == 1)
            .expect("identity class")
    }

    fn validate(&self) -> Result<()> {
        let total: usize = self.classes.iter().map(|c| c.size).sum();
        if total != self.order {
            return Err(Error::Consistency {
                context: format!("group {}", self.name),
                expected: format!("class sizes summing to {}", self.order),
                got: total.to_string(),
            });
        }
        for c in &self.classes {
            if self.order % c.size != 0 {
                return Err(Error::Consistency {
                    context: format!("group {}", self.name),
                    expected: "class sizes dividing the group order".into(),
                    got: format!("{} does not divide {}", c.size, self.order),
                });
            }
        }
        // Pointwise stabilizer of each hyperplane is cyclic of order e.
        for orbit in &self.orbits {
            for &h in &orbit.hyperplanes {
                self.check_cyclic_stabilizer(h, orbit.e)?;
            }
            // Canonical bijection: e-1 reflection classes, pairwise distinct eps.
            let mut eps: Vec<RootOfUnity> = orbit
                .reflection_classes
                .iter()
                .map(|&c| self.classes[c].eps.unwrap())
                .collect();
            eps.sort();
            eps.dedup();
            if eps.len() != (orbit.e - 1) as usize {
                return Err(Error::Consistency {
                    context: format!("group {} orbit {}", self.name, orbit.index),
                    expected: format!("{} reflection classes with distinct eps", orbit.e - 1),
                    got: format!("{}", eps.len()),
                });
            }
        }
        Ok(())
    }

    fn check_cyclic_stabilizer(&self, hyp: usize, e: u32) -> Result<()> {
        let fixing: Vec<usize> = self
            .hyperplane_of
            .iter()
            .filter(|(_, &h)| h == hyp)
            .map(|(&s, _)| s)
            .collect();
        if fixing.len() + 1 != e as usize {
            return Err(Error::Consistency {
                context: format!("group {} hyperplane {hyp}", self.name),
                expected: format!("{} non-trivial stabilizer elements", e - 1),
                got: fixing.len().to_string(),
            });
        }
        // Cyclic: some fixing reflection of order e generates the rest.
        let generates = fixing.iter().any(|&s| {
            if self.classes[self.class_of[s]].element_order != e {
                return false;
            }
            let mut seen = vec![s];
            let mut acc = self.elements[s].clone();
            for _ in 2..e {
                acc = acc.mul(&self.elements[s]);
                seen.push(self.element_index(&acc).expect("closed"));
            }
            seen.iter().all(|i| fixing.contains(i))
        });
        if !generates && e > 1 {
            return Err(Error::Consistency {
                context: format!("group {} hyperplane {hyp}", self.name),
                expected: "cyclic pointwise stabilizer".into(),
                got: "no generating reflection".into(),
            });
        }
        Ok(())
    }
}

fn close_under_multiplication(
    spec: &MatrixGroupSpec,
) -> Result<(Vec<Matrix>, HashMap<String, usize>)> {
    let id = Matrix::identity(spec.dim, spec.conductor);
    let mut elements = vec![id.clone()];
    let mut index = HashMap::new();
    index.insert(id.canonical_key(), 0usize);
    let mut frontier = vec![0usize];
    while let Some(i) = frontier.pop() {
        for g in &spec.generators {
            let prod = elements[i].mul(g);
            let key = prod.canonical_key();
            if !index.contains_key(&key) {
                if elements.len() >= spec.enum_cap {
                    return Err(Error::EnumerationCap { cap: spec.enum_cap });
                }
                index.insert(key, elements.len());
                frontier.push(elements.len());
                elements.push(prod);
            }
        }
    }
    Ok((elements, index))
}

/// Conjugation-orbit BFS under the generators; classes sorted canonically by
/// (element order, size, representative key).
fn conjugacy_classes(
    elements: &[Matrix],
    index: &HashMap<String, usize>,
    generators: &[Matrix],
) -> (Vec<ConjugacyClass>, Vec<usize>) {
    let order_of = |i: usize| -> u32 {
        let mut acc = elements[i].clone();
        let mut k = 1u32;
        while !acc.is_identity() {
            acc = acc.mul(&elements[i]);
            k += 1;
        }
        k
    };
    let gen_inv: Vec<Matrix> = generators
        .iter()
        .map(|g| g.inverse().expect("invertible"))
        .collect();

    let mut assigned = vec![usize::MAX; elements.len()];
    let mut raw_classes: Vec<Vec<usize>> = Vec::new();
    for start in 0..elements.len() {
        if assigned[start] != usize::MAX {
            continue;
        }
        let id = raw_classes.len();
        let mut members = vec![start];
        assigned[start] = id;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for (g, ginv) in generators.iter().zip(&gen_inv) {
                let conj = g.mul(&elements[x]).mul(ginv);
                let y = index[&conj.canonical_key()];
                if assigned[y] == usize::MAX {
                    assigned[y] = id;
                    members.push(y);
                    stack.push(y);
                }
            }
        }
        raw_classes.push(members);
    }

    let mut keyed: Vec<(u32, usize, String, Vec<usize>)> = raw_classes
        .into_iter()
        .map(|members| {
            let rep = *members
                .iter()
                .min_by_key(|&&i| elements[i].canonical_key())
                .unwrap();
            (
                order_of(rep),
                members.len(),
                elements[rep].canonical_key(),
                members,
            )
        })
        .collect();
    keyed.sort_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));

    let mut class_of = vec![0usize; elements.len()];
    let conductor = elements[0].trace().conductor();
    let classes: Vec<ConjugacyClass> = keyed
        .into_iter()
        .enumerate()
        .map(|(ci, (ord, size, key, members))| {
            for &m in &members {
                class_of[m] = ci;
            }
            let rep = index[&key];
            ConjugacyClass {
                rep,
                size,
                element_order: ord,
                eigenvalues: Vec::new(),
                det: RootOfUnity::one(),
                trace: Cyclotomic::zero(conductor),
                is_reflection: false,
                eps: None,
                orbit: None,
            }
        })
        .collect();
    (classes, class_of)
}

/// Eigenvalues of a finite-order matrix: roots of the characteristic
/// polynomial, all of which are roots of unity of order dividing the element
/// order. The characteristic polynomial comes from Newton's identities on
/// traces of powers; candidate roots are divided out exactly.
fn eigenvalues_on_v(rep: &Matrix, conductor: u32, element_order: u32) -> Result<Vec<RootOfUnity>> {
    let n = rep.dim();
    let work = conductor.lcm(&element_order);

    // Power sums p_k = tr(rep^k), k = 1..n.
    let mut power_sums = Vec::with_capacity(n);
    let mut acc = rep.clone();
    for _ in 0..n {
        power_sums.push(acc.trace().embed(work));
        acc = acc.mul(rep);
    }
    // Elementary symmetric functions via Newton's identities.
    let mut elem = vec![Cyclotomic::one(work)];
    for k in 1..=n {
        let mut sum = Cyclotomic::zero(work);
        for i in 1..=k {
            let term = elem[k - i].mul(&power_sums[i - 1]);
            if i % 2 == 1 {
                sum = sum.add(&term);
            } else {
                sum = sum.sub(&term);
            }
        }
        elem.push(sum.scale(&Rational::new(1.into(), (k as i64).into())));
    }
    // charpoly(x) = sum_k (-1)^k e_k x^{n-k}
    let mut coeffs = vec![Cyclotomic::zero(work); n + 1];
    for (k, e) in elem.iter().enumerate() {
        coeffs[n - k] = if k % 2 == 0 { e.clone() } else { e.neg() };
    }
    let mut charpoly: CPoly = Poly::from_coeffs(coeffs);

    let mut eigen = Vec::with_capacity(n);
    for i in 0..element_order {
        let root = Cyclotomic::root_of_unity(element_order, i as i64).embed(work);
        loop {
            if charpoly.degree() == Some(0) || charpoly.is_zero() {
                break;
            }
            if !charpoly.eval(&root).is_zero() {
                break;
            }
            // Deflate by (x - root).
            let lin = Poly::from_coeffs(vec![root.neg(), Cyclotomic::one(work)]);
            let (q, r) = charpoly.divrem(&lin)?;
            debug_assert!(r.is_zero());
            charpoly = q;
            eigen.push(RootOfUnity::new(element_order, i as i64));
        }
    }
    if eigen.len() != n {
        return Err(Error::Consistency {
            context: "eigenvalue extraction".into(),
            expected: format!("{n} roots of unity"),
            got: format!("{}", eigen.len()),
        });
    }
    eigen.sort();
    Ok(eigen)
}

fn reflection_hyperplanes(
    elements: &[Matrix],
    reflections: &[usize],
) -> (Vec<FixedHyperplane>, HashMap<usize, usize>) {
    let mut hyperplanes: Vec<FixedHyperplane> = Vec::new();
    let mut by_key: HashMap<String, usize> = HashMap::new();
    let mut hyperplane_of = HashMap::new();
    for &s in reflections {
        let coroot = elements[s].coroot().expect("reflection has a coroot");
        let key = coroot_key(&coroot);
        let idx = *by_key.entry(key).or_insert_with(|| {
            hyperplanes.push(FixedHyperplane { coroot });
            hyperplanes.len() - 1
        });
        hyperplane_of.insert(s, idx);
    }
    (hyperplanes, hyperplane_of)
}

fn coroot_key(coroot: &[Cyclotomic]) -> String {
    use std::fmt::Write;
    let mut s = String::new();
    for c in coroot {
        for (e, n, d) in c.to_triples() {
            let _ = write!(s, "{e}:{n}/{d},");
        }
        s.push(';');
    }
    s
}

#[allow(clippy::too_many_arguments)]
fn hyperplane_orbits(
    spec: &MatrixGroupSpec,
    elements: &[Matrix],
    inverse: &[usize],
    class_of: &[usize],
    reflections: &[usize],
    hyperplanes: &[FixedHyperplane],
    hyperplane_of: &HashMap<usize, usize>,
) -> Result<Vec<HyperplaneOrbit>> {
    let key_of: HashMap<String, usize> = hyperplanes
        .iter()
        .enumerate()
        .map(|(i, h)| (coroot_key(&h.coroot), i))
        .collect();

    // Orbit decomposition under the generator action on coroots.
    let gen_inv: Vec<&Matrix> = spec
        .generators
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let gi = elements
                .iter()
                .position(|m| m == g)
                .map(|idx| &elements[inverse[idx]]);
            // Generators are group elements by construction.
            gi.unwrap_or_else(|| panic!("generator {i} not found among elements"))
        })
        .collect();

    let mut orbit_of = vec![usize::MAX; hyperplanes.len()];
    let mut orbit_members: Vec<Vec<usize>> = Vec::new();
    for start in 0..hyperplanes.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbit_members.len();
        let mut members = vec![start];
        orbit_of[start] = id;
        let mut stack = vec![start];
        while let Some(h) = stack.pop() {
            for ginv in &gen_inv {
                let moved = row_times_matrix(&hyperplanes[h].coroot, ginv);
                let moved = normalize_projective(moved);
                let idx = key_of[&coroot_key(&moved)];
                if orbit_of[idx] == usize::MAX {
                    orbit_of[idx] = id;
                    members.push(idx);
                    stack.push(idx);
                }
            }
        }
        orbit_members.push(members);
    }

    // e per orbit: reflections fixing a representative hyperplane, plus 1.
    let e_of_orbit: Vec<u32> = orbit_members
        .iter()
        .map(|members| {
            let h0 = members[0];
            let fixing = reflections
                .iter()
                .filter(|&&s| hyperplane_of[&s] == h0)
                .count();
            (fixing + 1) as u32
        })
        .collect();

    // Orbit ordering: pinned by generator indices, or canonical.
    let mut order: Vec<usize> = (0..orbit_members.len()).collect();
    if let Some(pins) = &spec.pinned_orbit_order {
        let mut pinned = Vec::new();
        for &gi in pins {
            let g = &spec.generators[gi];
            let idx = elements.iter().position(|m| m == g).ok_or_else(|| {
                Error::Validation(format!("pinned generator {gi} not in group"))
            })?;
            let h = *hyperplane_of.get(&idx).ok_or_else(|| {
                Error::Validation(format!("pinned generator {gi} is not a reflection"))
            })?;
            let o = orbit_of[h];
            if !pinned.contains(&o) {
                pinned.push(o);
            }
        }
        let mut rest: Vec<usize> = order
            .iter()
            .copied()
            .filter(|o| !pinned.contains(o))
            .collect();
        rest.sort_by_key(|&o| orbit_sort_key(o, &orbit_members, &e_of_orbit, hyperplanes));
        order = pinned;
        order.extend(rest);
    } else {
        order.sort_by_key(|&o| orbit_sort_key(o, &orbit_members, &e_of_orbit, hyperplanes));
    }

    let mut out = Vec::new();
    for (rank, &o) in order.iter().enumerate() {
        let mut refl_classes: Vec<usize> = reflections
            .iter()
            .filter(|&&s| orbit_of[hyperplane_of[&s]] == o)
            .map(|&s| class_of[s])
            .collect();
        refl_classes.sort_unstable();
        refl_classes.dedup();
        let mut members = orbit_members[o].clone();
        members.sort_unstable();
        out.push(HyperplaneOrbit {
            index: (rank + 1) as u32,
            e: e_of_orbit[o],
            hyperplanes: members,
            reflection_classes: refl_classes,
        });
    }
    Ok(out)
}

fn orbit_sort_key(
    o: usize,
    orbit_members: &[Vec<usize>],
    e_of_orbit: &[u32],
    hyperplanes: &[FixedHyperplane],
) -> (u32, usize, String) {
    let min_key = orbit_members[o]
        .iter()
        .map(|&h| coroot_key(&hyperplanes[h].coroot))
        .min()
        .unwrap();
    (e_of_orbit[o], orbit_members[o].len(), min_key)
}

fn row_times_matrix(row: &[Cyclotomic], m: &Matrix) -> Vec<Cyclotomic> {
    let n = m.dim();
    (0..n)
        .map(|j| {
            let mut acc = Cyclotomic::zero(row[0].conductor());
            for (i, r) in row.iter().enumerate() {
                if !r.is_zero() {
                    acc = acc.add(&r.mul(m.entry(i, j)));
                }
            }
            acc
        })
        .collect()
}
