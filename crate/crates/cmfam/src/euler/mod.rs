//! Euler families: the reflection-class coefficient forms c_k(s), the
//! Euler-element central character values omega_lambda as linear forms, the
//! generic Euler partition, the pairwise forms p_{lambda,mu}, and the Euler
//! variety as an integer hyperplane arrangement with its orbit decomposition
//! under Young-subgroup coordinate permutations.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::chars::CharacterTable;
use crate::error::{Error, Result};
use crate::exact::cyclotomic::Cyclotomic;
use crate::exact::linform::{LinearForm, ParamIndex};
use crate::exact::rational::Rational;
use crate::group::GroupData;

/// A partition of character rows into sorted, disjoint blocks in canonical
/// order (blocks sorted by least member).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FamilyPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl FamilyPartition {
    pub fn from_blocks(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for b in blocks.iter_mut() {
            b.sort_unstable();
            for &i in b.iter() {
                if i >= n || seen[i] {
                    return Err(Error::Validation(
                        "blocks must partition the character set".into(),
                    ));
                }
                seen[i] = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::Validation("partition misses characters".into()));
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort_by_key(|b| b[0]);
        Ok(FamilyPartition { n, blocks })
    }

    pub fn singletons(n: usize) -> Self {
        FamilyPartition {
            n,
            blocks: (0..n).map(|i| vec![i]).collect(),
        }
    }

    /// Group items by an exact key.
    pub fn from_keys<K: Ord>(keys: Vec<K>) -> Self {
        let n = keys.len();
        let mut by_key: BTreeMap<K, Vec<usize>> = BTreeMap::new();
        for (i, k) in keys.into_iter().enumerate() {
            by_key.entry(k).or_default().push(i);
        }
        let blocks = by_key.into_values().collect();
        FamilyPartition::from_blocks(n, blocks).expect("keys partition the set")
    }

    pub fn universe_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, i: usize) -> &[usize] {
        self.blocks
            .iter()
            .find(|b| b.binary_search(&i).is_ok())
            .expect("item in partition")
    }

    pub fn non_singletons(&self) -> Vec<&Vec<usize>> {
        self.blocks.iter().filter(|b| b.len() > 1).collect()
    }
}

/// The linear form c_k(s) attached to a reflection conjugacy class: the sum
/// over j mod e of det(s)^j (k_{Omega,j+1} - k_{Omega,j}).
pub fn c_form(g: &GroupData, class: usize) -> Result<LinearForm> {
    let c = &g.classes[class];
    let (eps, omega) = match (c.eps, c.orbit) {
        (Some(e), Some(o)) => (e, o),
        _ => {
            return Err(Error::Validation(format!(
                "class {class} is not a reflection class"
            )))
        }
    };
    let e = g
        .orbits
        .iter()
        .find(|o| o.index == omega)
        .expect("orbit exists")
        .e;
    let conductor = eps.order;
    let mut form = LinearForm::zero();
    for j in 0..e {
        // det(s)^j with the k_{Omega,j+1} - k_{Omega,j} telescoping term.
        let det_j = Cyclotomic::root_of_unity(conductor, (eps.power * j) as i64);
        form.add_term((omega, (j + 1) % e), &det_j);
        form.add_term((omega, j), &det_j.neg());
    }
    Ok(form)
}

/// Euler data computed once per (group, table) pair.
#[derive(Clone, Debug)]
pub struct EulerData {
    pub index_order: Vec<ParamIndex>,
    /// (class, c_k form) for each reflection class, in class order.
    pub c_forms: Vec<(usize, LinearForm)>,
    /// omega_lambda(eu_k) per character row, with certified-rational,
    /// in fact integral, coefficients in `index_order` coordinates.
    pub omega: Vec<Vec<Rational>>,
    pub generic_partition: FamilyPartition,
    pub variety: HyperplaneArrangement,
}

/// omega_lambda(eu_k): the scalar by which the group-algebra part of the
/// Euler element acts, as a linear form. The sum over reflections is taken
/// class by class, weighted by class size.
pub fn omega_form(g: &GroupData, table: &CharacterTable, row: usize) -> Result<LinearForm> {
    let dim = Rational::from_integer(table.dim(row).into());
    // One working conductor for every class keeps coefficients comparable.
    let work = g
        .reflection_classes()
        .iter()
        .fold(table.conductor, |acc, (_, eps, _)| acc.lcm(&eps.order));
    let mut total = LinearForm::zero();
    for (class, eps, _) in g.reflection_classes() {
        let ck = c_form(g, class)?;
        let eps_c = eps.to_cyclotomic(work);
        let one = Cyclotomic::one(work);
        let inv_1me = one.sub(&eps_c).inv()?;
        let lam_s = table.value(row, class).embed(work);
        // (eps * lambda(1) - lambda(s)) / lambda(1)
        let num = eps_c.scale(&dim).sub(&lam_s).scale(&dim.recip());
        let weight = inv_1me
            .mul(&num)
            .scale(&Rational::from_integer(g.classes[class].size.into()));
        total = total.add(&ck.scale(&weight));
    }
    Ok(total)
}

/// p_{lambda,mu}(k): the pairwise separation form, computed by its own sum
/// over reflection classes (not as a difference of omega forms).
pub fn p_form(g: &GroupData, table: &CharacterTable, lambda: usize, mu: usize) -> Result<LinearForm> {
    if lambda == mu {
        return Err(Error::Validation(
            "p form requires two distinct characters".into(),
        ));
    }
    let dim_l = Rational::from_integer(table.dim(lambda).into());
    let dim_m = Rational::from_integer(table.dim(mu).into());
    let work = g
        .reflection_classes()
        .iter()
        .fold(table.conductor, |acc, (_, eps, _)| acc.lcm(&eps.order));
    let mut total = LinearForm::zero();
    for (class, eps, _) in g.reflection_classes() {
        let ck = c_form(g, class)?;
        let eps_c = eps.to_cyclotomic(work);
        let one = Cyclotomic::one(work);
        let inv_1me = one.sub(&eps_c).inv()?;
        let lam = table.value(lambda, class).embed(work).scale(&dim_l.recip());
        let mu_v = table.value(mu, class).embed(work).scale(&dim_m.recip());
        let weight = inv_1me
            .mul(&lam.sub(&mu_v))
            .scale(&Rational::from_integer(g.classes[class].size.into()));
        total = total.add(&ck.scale(&weight));
    }
    Ok(total)
}

/// The generic Euler partition, computed twice by independent criteria and
/// cross-checked: proportional character values on every reflection class
/// versus equality of omega forms.
pub fn generic_partition(g: &GroupData, table: &CharacterTable) -> Result<FamilyPartition> {
    let n = table.num_chars();
    let refl: Vec<usize> = g.reflection_classes().iter().map(|(c, _, _)| *c).collect();

    // Criterion 1: mu(1) lambda(s) = lambda(1) mu(s) for all reflections s.
    // Key each character by the vector of lambda(s)/lambda(1).
    let keys: Vec<Vec<String>> = (0..n)
        .map(|row| {
            let d = Rational::from_integer(table.dim(row).into());
            refl.iter()
                .map(|&c| {
                    let v = table.value(row, c).scale(&d.recip());
                    format!("{v}")
                })
                .collect()
        })
        .collect();
    let by_values = FamilyPartition::from_keys(keys);

    // Criterion 2: equal omega forms.
    let omega_keys: Vec<String> = (0..n)
        .map(|row| omega_form(g, table, row).map(|f| format!("{f}")))
        .collect::<Result<_>>()?;
    let by_omega = FamilyPartition::from_keys(omega_keys);

    if by_values != by_omega {
        return Err(Error::Consistency {
            context: format!("generic Euler partition of {}", g.name),
            expected: "value-proportionality and omega-equality to agree".into(),
            got: format!("{} vs {} blocks", by_values.num_blocks(), by_omega.num_blocks()),
        });
    }
    Ok(by_values)
}

/// A hyperplane in parameter space: primitive integer normal vector with
/// positive first nonzero entry, coordinates in the group's index order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Hyperplane {
    pub normal: Vec<i64>,
}

impl Hyperplane {
    /// Normalize rational coefficients: clear denominators, divide by the
    /// gcd, make the first nonzero entry positive.
    pub fn from_rational(coeffs: &[Rational]) -> Result<Self> {
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::Validation("zero normal vector".into()));
        }
        let lcm = coeffs
            .iter()
            .fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> = coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let gcd = ints
            .iter()
            .fold(BigInt::zero(), |acc, v| acc.gcd(v));
        for v in ints.iter_mut() {
            *v = &*v / &gcd;
        }
        if ints.iter().find(|v| !v.is_zero()).unwrap().is_negative() {
            for v in ints.iter_mut() {
                *v = -&*v;
            }
        }
        let normal = ints
            .iter()
            .map(|v| {
                v.to_i64().ok_or_else(|| {
                    Error::Validation(format!("hyperplane coefficient {v} overflows i64"))
                })
            })
            .collect::<Result<_>>()?;
        Ok(Hyperplane { normal })
    }

    pub fn from_integers(normal: &[i64]) -> Result<Self> {
        let rat: Vec<Rational> = normal
            .iter()
            .map(|&v| Rational::from_integer(v.into()))
            .collect();
        Self::from_rational(&rat)
    }

    /// Evaluate the defining form at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        self.normal
            .iter()
            .zip(point)
            .map(|(&c, x)| x * Rational::from_integer(c.into()))
            .fold(Rational::zero(), |a, b| a + b)
    }
}

/// One Young-subgroup orbit of hyperplanes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlaneOrbit {
    /// Lex-min member.
    pub rep: Hyperplane,
    /// Indices into the arrangement's sorted plane list.
    pub members: Vec<usize>,
}

/// A finite set of parameter-space hyperplanes with its orbit decomposition
/// under the Young subgroup acting by coordinate permutations within each
/// hyperplane-orbit block.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HyperplaneArrangement {
    pub index_order: Vec<ParamIndex>,
    /// Sorted lexicographically; set semantics.
    pub planes: Vec<Hyperplane>,
    pub orbits: Vec<PlaneOrbit>,
}

impl HyperplaneArrangement {
    pub fn from_planes(index_order: Vec<ParamIndex>, planes: Vec<Hyperplane>) -> Self {
        let set: BTreeSet<Hyperplane> = planes.into_iter().collect();
        let planes: Vec<Hyperplane> = set.into_iter().collect();
        let orbits = orbit_decomposition(&index_order, &planes);
        HyperplaneArrangement {
            index_order,
            planes,
            orbits,
        }
    }

    pub fn contains(&self, p: &Hyperplane) -> bool {
        self.planes.binary_search(p).is_ok()
    }

    pub fn len(&self) -> usize {
        self.planes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.planes.is_empty()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o.members.len()).collect()
    }

    /// Setwise equality of the plane sets (orbits follow from the planes).
    pub fn set_eq(&self, other: &Self) -> bool {
        self.index_order == other.index_order && self.planes == other.planes
    }
}

/// Coordinate blocks (offset, length) per hyperplane orbit.
fn young_blocks(index_order: &[ParamIndex]) -> Vec<(usize, usize)> {
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    let mut current: Option<(u32, usize, usize)> = None;
    for (pos, (omega, _)) in index_order.iter().enumerate() {
        match current {
            Some((o, off, len)) if o == *omega => current = Some((o, off, len + 1)),
            Some((_, off, len)) => {
                blocks.push((off, len));
                current = Some((*omega, pos, 1));
            }
            None => current = Some((*omega, pos, 1)),
        }
    }
    if let Some((_, off, len)) = current {
        blocks.push((off, len));
    }
    blocks
}

fn normalize_sign(mut v: Vec<i64>) -> Vec<i64> {
    if v.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0) {
        for c in v.iter_mut() {
            *c = -*c;
        }
    }
    v
}

/// Orbit of one normal vector under within-block coordinate permutations,
/// as sign-normalized vectors.
pub fn young_orbit(index_order: &[ParamIndex], normal: &[i64]) -> BTreeSet<Vec<i64>> {
    let blocks = young_blocks(index_order);
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let start = normalize_sign(normal.to_vec());
    seen.insert(start.clone());
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &(off, len) in &blocks {
            for i in 0..len.saturating_sub(1) {
                let mut w = v.clone();
                w.swap(off + i, off + i + 1);
                let w = normalize_sign(w);
                if seen.insert(w.clone()) {
                    stack.push(w);
                }
            }
        }
    }
    seen
}

fn orbit_decomposition(index_order: &[ParamIndex], planes: &[Hyperplane]) -> Vec<PlaneOrbit> {
    let mut assigned = vec![false; planes.len()];
    let mut orbits = Vec::new();
    for start in 0..planes.len() {
        if assigned[start] {
            continue;
        }
        let orbit_vecs = young_orbit(index_order, &planes[start].normal);
        let mut members = Vec::new();
        for v in &orbit_vecs {
            if let Ok(idx) = planes.binary_search(&Hyperplane { normal: v.clone() }) {
                if !assigned[idx] {
                    assigned[idx] = true;
                    members.push(idx);
                }
            }
        }
        members.sort_unstable();
        let rep = members
            .iter()
            .map(|&i| planes[i].clone())
            .min()
            .expect("orbit nonempty");
        orbits.push(PlaneOrbit { rep, members });
    }
    orbits.sort_by(|a, b| a.rep.cmp(&b.rep));
    orbits
}

/// The Euler variety: the zero locus of the pairwise forms that are not
/// identically zero, as a normalized, deduplicated plane set.
pub fn euler_variety(
    g: &GroupData,
    table: &CharacterTable,
    omega: &[Vec<Rational>],
) -> Result<HyperplaneArrangement> {
    let index_order = g.parameter_space();
    let n = table.num_chars();
    let mut planes = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            let diff: Vec<Rational> = omega[a]
                .iter()
                .zip(&omega[b])
                .map(|(x, y)| x - y)
                .collect();
            if diff.iter().all(Zero::is_zero) {
                continue;
            }
            planes.push(Hyperplane::from_rational(&diff)?);
        }
    }
    Ok(HyperplaneArrangement::from_planes(index_order, planes))
}

/// The parameter involution k_{Omega,j} -> k_{Omega,-j} applied to a plane.
pub fn sharp_plane(index_order: &[ParamIndex], p: &Hyperplane) -> Hyperplane {
    let pos: BTreeMap<ParamIndex, usize> = index_order
        .iter()
        .enumerate()
        .map(|(i, idx)| (*idx, i))
        .collect();
    let e_of: BTreeMap<u32, u32> = {
        let mut m: BTreeMap<u32, u32> = BTreeMap::new();
        for (omega, _) in index_order {
            *m.entry(*omega).or_default() += 1;
        }
        m
    };
    let mut normal = vec![0i64; p.normal.len()];
    for (i, (omega, j)) in index_order.iter().enumerate() {
        let e = e_of[omega];
        let src = (*omega, (e - j) % e);
        normal[i] = p.normal[pos[&src]];
    }
    Hyperplane {
        normal: normalize_sign(normal),
    }
}

/// Sharp applied setwise to an arrangement.
pub fn sharp_arrangement(a: &HyperplaneArrangement) -> HyperplaneArrangement {
    let planes = a
        .planes
        .iter()
        .map(|p| sharp_plane(&a.index_order, p))
        .collect();
    HyperplaneArrangement::from_planes(a.index_order.clone(), planes)
}

/// Euler families at a concrete rational parameter: group characters by the
/// exact value of their omega form at k.
pub fn specialize_partition(omega: &[Vec<Rational>], point: &[Rational]) -> FamilyPartition {
    let keys: Vec<Rational> = omega
        .iter()
        .map(|coeffs| {
            coeffs
                .iter()
                .zip(point)
                .map(|(c, x)| c * x)
                .fold(Rational::zero(), |a, b| a + b)
        })
        .collect();
    FamilyPartition::from_keys(keys)
}

/// Build the full Euler data set for a validated (group, table) pair.
pub fn build(g: &GroupData, table: &CharacterTable) -> Result<EulerData> {
    let index_order = g.parameter_space();
    let c_forms = g
        .reflection_classes()
        .iter()
        .map(|(c, _, _)| Ok((*c, c_form(g, *c)?)))
        .collect::<Result<Vec<_>>>()?;

    let n = table.num_chars();
    let mut omega = Vec::with_capacity(n);
    for row in 0..n {
        let form = omega_form(g, table, row)?;
        let coeffs = form.rational_coeffs(&index_order).map_err(|e| {
            Error::Validation(format!(
                "omega form for row {row} of {} has irrational coefficients ({e})",
                g.name
            ))
        })?;
        // The tables all have integral omega coefficients; enforce it.
        for c in &coeffs {
            if !c.is_integer() {
                return Err(Error::Validation(format!(
                    "omega form for row {row} of {} has non-integer coefficient {c}",
                    g.name
                )));
            }
        }
        omega.push(coeffs);
    }

    let generic = generic_partition(g, table)?;
    let variety = euler_variety(g, table, &omega)?;

    // p_{lambda,mu} = omega_mu - omega_lambda, via the independent route.
    // Checked here once so every downstream consumer inherits it.
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            let p = p_form(g, table, a, b)?;
            let p_coeffs = p.rational_coeffs(&index_order)?;
            let direct: Vec<Rational> = omega[b]
                .iter()
                .zip(&omega[a])
                .map(|(x, y)| x - y)
                .collect();
            if p_coeffs != direct {
                return Err(Error::Consistency {
                    context: format!("p form ({a},{b}) of {}", g.name),
                    expected: "p = omega_mu - omega_lambda".into(),
                    got: "mismatch".into(),
                });
            }
        }
    }

    Ok(EulerData {
        index_order,
        c_forms,
        omega,
        generic_partition: generic,
        variety,
    })
}

#[cfg(test)]
mod tests;
