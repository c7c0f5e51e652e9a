//! Reflection-group numerical data: degrees, coexponents, hyperplane
//! orders, the poset of distinguished eigenvalue orders with its Moebius
//! function, Euler-characteristic formulas, and the equivariant
//! Euler-characteristic assembly.

use std::collections::BTreeMap;

use cyclo::{Cyclotomic, Rational};
use num::Zero;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::repring::rep::induce_from_cyclic;
use crate::repring::symmetric::{factorial, partitions, power_cycle_type};
use crate::repring::{eps_pow_label, group_data, GroupSpec, IrrLabel, Mat2, RepElement};

/// The poset P of eigenvalue orders d with d = gcd of the degrees divisible
/// by d, ordered by reverse divisibility (e <= d iff d | e). The top element
/// is the gcd of all degrees, i.e. the order of the centre.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularPoset {
    pub elements: Vec<u32>,
    pub top: u32,
}

/// The gcd-closure poset computed from the degrees alone.
pub fn regular_poset(degrees: &[u32]) -> RegularPoset {
    assert!(!degrees.is_empty());
    let max = *degrees.iter().max().unwrap();
    let mut elements = Vec::new();
    for d in 1..=max {
        let g = degrees
            .iter()
            .filter(|&&deg| deg % d == 0)
            .fold(0u32, |acc, &deg| num::integer::gcd(acc, deg));
        if g == d {
            elements.push(d);
        }
    }
    let top = degrees.iter().fold(0u32, |acc, &d| num::integer::gcd(acc, d));
    RegularPoset { elements, top }
}

/// The gcd-closure poset intersected with the regular numbers. A candidate
/// d is regular exactly when it divides as many degrees as codegrees; the
/// codegrees are the (nonzero) coexponents shifted down by one. Without
/// this filter the Moebius sums pick up spurious elements (e.g. d = 3 for
/// the symmetric group on five letters) and stop being integral.
pub fn regular_poset_filtered(degrees: &[u32], coexponents: &[u32]) -> RegularPoset {
    let raw = regular_poset(degrees);
    let elements = raw
        .elements
        .into_iter()
        .filter(|&d| {
            if d == 1 {
                return true;
            }
            let a = degrees.iter().filter(|&&deg| deg % d == 0).count();
            let b = coexponents.iter().filter(|&&c| (c - 1) % d == 0).count();
            a == b
        })
        .collect();
    RegularPoset {
        elements,
        top: raw.top,
    }
}

impl RegularPoset {
    pub fn contains(&self, d: u32) -> bool {
        self.elements.contains(&d)
    }

    /// Moebius function mu(d, top) for the reverse-divisibility order,
    /// defined by mu(top, top) = 1 and sum over the interval [d, top] = 0.
    pub fn mobius(&self, d: u32) -> Result<i64> {
        self.mobius_to(d, self.top)
    }

    /// mu(d, upper) within this poset.
    pub fn mobius_to(&self, d: u32, upper: u32) -> Result<i64> {
        if !self.contains(d) {
            return Err(Error::NotInPoset(d));
        }
        if !self.contains(upper) {
            return Err(Error::NotInPoset(upper));
        }
        if d == upper {
            return Ok(1);
        }
        if d % upper != 0 {
            return Err(Error::NotInPoset(d));
        }
        // interval (d, upper]: z with z | d, upper | z, z != d
        let mut acc = 0i64;
        for &z in &self.elements {
            if z != d && d % z == 0 && z % upper == 0 {
                acc += self.mobius_to(z, upper)?;
            }
        }
        Ok(-acc)
    }
}

/// Numeric data for one reflection group, convertible to the per-d
/// centraliser data needed in the Moebius sums.
#[derive(Clone, Debug)]
pub struct ReflectionGroupData {
    pub id: String,
    pub family: Family,
    pub rank: u32,
    pub degrees: Vec<u32>,
    /// nonzero coexponents, ascending (length = rank); empty when unknown
    pub coexponents: Vec<u32>,
    /// (e_H, number of hyperplanes with that order); empty when counts are
    /// not part of the record
    pub hyperplanes: Vec<(u32, u32)>,
    /// distinct e_H values (always known, even without counts)
    pub eh_values: Vec<u32>,
    pub order: u64,
    /// the character-table group behind this entry, when available
    pub group: Option<GroupSpec>,
    /// independently recorded values of chi(U(d)^0/G(d)), used as test
    /// assertions against the Moebius formula
    pub chi_u0_overrides: BTreeMap<u32, i64>,
    /// independently recorded chi(U^0/G) for the group itself
    pub expected_chi_u0: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Symmetric { n: u32 },
    Dihedral { p: u32 },
    Imprimitive2 { p: u32 },
    ImprimitiveFull { r: u32, l: u32 },
    /// G(pe,p,2) with e >= 3: pe hyperplanes of order 2 and two of order e
    Rank2Mixed { p: u32, e: u32 },
    Rank2Uniform { e: u32, d: u32 },
    Rank2Numeric,
}

impl ReflectionGroupData {
    /// Total degree m of the invariant defining polynomial: sum of e_H.
    pub fn m(&self) -> Result<u32> {
        if self.hyperplanes.is_empty() {
            return Err(Error::MissingCatalogEntry(format!(
                "{}: hyperplane counts are not recorded",
                self.id
            )));
        }
        Ok(self.hyperplanes.iter().map(|&(e, c)| e * c).sum())
    }

    /// Number of hyperplanes.
    pub fn num_hyperplanes(&self) -> Result<u32> {
        if self.hyperplanes.is_empty() {
            return Err(Error::MissingCatalogEntry(format!(
                "{}: hyperplane counts are not recorded",
                self.id
            )));
        }
        Ok(self.hyperplanes.iter().map(|&(_, c)| c).sum())
    }

    /// gcd of the hyperplane orders.
    pub fn e_gcd(&self) -> u32 {
        self.eh_values
            .iter()
            .fold(0u32, |acc, &e| num::integer::gcd(acc, e))
    }

    /// Number of reflections: sum of (e_H - 1).
    pub fn n_reflections(&self) -> Result<u32> {
        Ok(self
            .hyperplanes
            .iter()
            .map(|&(e, c)| (e - 1) * c)
            .sum())
    }

    pub fn poset(&self) -> Result<RegularPoset> {
        if self.coexponents.is_empty() {
            return Err(Error::MissingCatalogEntry(format!(
                "{}: coexponents are not recorded",
                self.id
            )));
        }
        Ok(regular_poset_filtered(&self.degrees, &self.coexponents))
    }
}

/// chi(U) = (-1)^{r-1} (m_2^* - 1)...(m_r^* - 1) = prod_{i >= 2} (1 - m_i^*)
/// over the nonzero coexponents.
pub fn chi_u(coexponents: &[u32]) -> i64 {
    coexponents[1..]
        .iter()
        .map(|&c| 1 - c as i64)
        .product::<i64>()
}

/// Degrees, coexponents and order of the centraliser subgroup G(d) attached
/// to an element d of the poset.
#[derive(Clone, Debug)]
pub struct GdData {
    pub degrees: Vec<u32>,
    pub coexponents: Vec<u32>,
    pub order: u64,
}

/// Resolve G(d) for an element of the poset of `entry`.
pub fn gd_data(entry: &ReflectionGroupData, d: u32) -> Result<GdData> {
    let sub_degrees: Vec<u32> = entry
        .degrees
        .iter()
        .copied()
        .filter(|&deg| deg % d == 0)
        .collect();
    if sub_degrees.len() == entry.degrees.len() {
        // all degrees divisible: G(d) = G itself
        return Ok(GdData {
            degrees: entry.degrees.clone(),
            coexponents: entry.coexponents.clone(),
            order: entry.order,
        });
    }
    match entry.family {
        Family::Symmetric { n } => {
            // G(d) = G(d,1,floor(n/d)) with degrees d, 2d, ...
            let k = n / d;
            Ok(imprimitive_gd(d, k))
        }
        Family::ImprimitiveFull { r, l } => {
            let e = d / num::integer::gcd(d, r);
            let k = l / e;
            Ok(imprimitive_gd(r * e, k))
        }
        _ => {
            if sub_degrees.len() == 1 {
                // rank-one centraliser: a cyclic reflection group
                Ok(GdData {
                    degrees: sub_degrees.clone(),
                    coexponents: vec![1],
                    order: sub_degrees[0] as u64,
                })
            } else {
                Err(Error::MissingCatalogEntry(format!(
                    "{}: no centraliser data for d = {d}",
                    entry.id
                )))
            }
        }
    }
}

fn imprimitive_gd(r: u32, k: u32) -> GdData {
    // G(r,1,k) for r >= 2; G(1,1,k) is the symmetric group S_k
    if r == 1 {
        GdData {
            degrees: (1..=k).collect(),
            coexponents: (1..k).collect(),
            order: factorial(k),
        }
    } else {
        GdData {
            degrees: (1..=k).map(|j| j * r).collect(),
            coexponents: (0..k).map(|j| j * r + 1).collect(),
            order: (r as u64).pow(k) * factorial(k),
        }
    }
}

/// chi(U^0/G) for the group itself, by Moebius inversion over its poset:
/// |Z(G)| * sum over d of mu(d) chi(U(d)) / |G(d)|.
pub fn chi_u0_mod_g(entry: &ReflectionGroupData) -> Result<i64> {
    let poset = entry.poset()?;
    chi_u0_over(entry, &poset, poset.top)
}

/// chi(U(d)^0/G(d)) for every d in the poset. The value at d applies the
/// same theorem to the group G(d), whose poset is the part of P above d
/// (i.e. the multiples of d in P) and whose centralisers G(d)(e) = G(e).
pub fn chi_u0_values(entry: &ReflectionGroupData) -> Result<BTreeMap<u32, i64>> {
    let poset = entry.poset()?;
    let mut out = BTreeMap::new();
    for &d in &poset.elements {
        let val = chi_u0_over(entry, &poset, d)?;
        if let Some(&expected) = entry.chi_u0_overrides.get(&d) {
            if expected != val {
                return Err(Error::DataError(format!(
                    "{}: chi(U({d})^0/G({d})) = {val} disagrees with recorded value {expected}",
                    entry.id
                )));
            }
        }
        out.insert(d, val);
    }
    // recorded values at poset elements must all have been checked; a
    // recorded value off the poset is a data error
    for d in entry.chi_u0_overrides.keys() {
        if !poset.contains(*d) {
            return Err(Error::DataError(format!(
                "{}: recorded chi value at d = {d} which is not in the poset",
                entry.id
            )));
        }
    }
    Ok(out)
}

/// The Moebius sum for the subgroup G(at): runs over the elements of P
/// that are multiples of `at`, using mu(-, top of G(at)).
fn chi_u0_over(entry: &ReflectionGroupData, poset: &RegularPoset, at: u32) -> Result<i64> {
    let gd_at = gd_data(entry, at)?;
    let z = gd_at
        .degrees
        .iter()
        .fold(0u32, |acc, &deg| num::integer::gcd(acc, deg));
    let mut acc = Rational::zero();
    for &e in &poset.elements {
        if e % at != 0 {
            continue;
        }
        let mu = poset.mobius_to(e, z)?;
        if mu == 0 {
            continue;
        }
        let ge = gd_data(entry, e)?;
        let chi = chi_u(&ge.coexponents);
        acc += Rational::new((mu * chi).into(), (ge.order as i64).into());
    }
    let total = acc * Rational::from_integer((z as i64).into());
    if !total.is_integer() {
        return Err(Error::NonIntegral(
            format!("chi(U({at})^0/G({at})) for {}", entry.id),
            total.to_string(),
        ));
    }
    Ok(i64::try_from(total.to_integer()).expect("chi out of range"))
}

/// Cyclic subgroup data for R(d) = <(g_d, zeta_d)>: the G-class and the
/// power of zeta_m representing each (g_d, zeta_d)^j.
#[derive(Clone, Debug)]
pub struct CyclicSubgroupData {
    pub d: u32,
    /// (class index of g_d^j in G, power r_j with zeta_d^j = zeta_m^{r_j})
    pub powers: Vec<(usize, u32)>,
}

/// Regular-element data for every poset element of a table-backed entry.
pub fn regular_data(entry: &ReflectionGroupData) -> Result<BTreeMap<u32, CyclicSubgroupData>> {
    let group = entry.group.clone().ok_or_else(|| {
        Error::MissingCatalogEntry(format!("{}: no character-table group", entry.id))
    })?;
    let m = entry.m()?;
    let poset = entry.poset()?;
    let mut out = BTreeMap::new();
    for &d in &poset.elements {
        if m % d != 0 {
            return Err(Error::DataError(format!(
                "{}: poset element {d} does not divide m = {m}",
                entry.id
            )));
        }
        let data = match &group {
            GroupSpec::Symmetric(n) => symmetric_cyclic_data(*n, m, d),
            GroupSpec::Dihedral(_) | GroupSpec::Imprimitive2(_) => {
                matrix_regular(&group, m, d)?
            }
            g => {
                return Err(Error::MissingCatalogEntry(format!(
                    "no regular-element data for {g}"
                )))
            }
        };
        out.insert(d, data);
    }
    Ok(out)
}

/// g_d in S_n is a product of floor(n/d) d-cycles; its powers split each
/// d-cycle into gcd(d,j) cycles.
pub fn symmetric_cyclic_data(n: u32, m: u32, d: u32) -> CyclicSubgroupData {
    let cycle_types = partitions(n);
    let k = n / d;
    let mut base: Vec<u32> = vec![d; k as usize];
    base.extend(std::iter::repeat(1).take((n - k * d) as usize));
    let step = m / d;
    let powers = (0..d)
        .map(|j| {
            let ct = power_cycle_type(&base, j);
            let cls = cycle_types
                .iter()
                .position(|c| *c == ct)
                .expect("cycle type in class list");
            (cls, (j * step) % m)
        })
        .collect();
    CyclicSubgroupData { d, powers }
}

/// Search the matrix model for an element with a regular zeta_d-eigenvector.
fn matrix_regular(group: &GroupSpec, m: u32, d: u32) -> Result<CyclicSubgroupData> {
    let data = group_data(group)?;
    let mg = data
        .matrices
        .as_ref()
        .ok_or_else(|| Error::MissingModel(group.to_string()))?;
    let normals = mg.hyperplane_normals();
    let zeta = Cyclotomic::root(d, 1);
    for g in &mg.elements {
        let dim = g.eigenspace_dim(&zeta);
        if dim == 0 {
            continue;
        }
        let regular = if dim == 2 {
            // central element: (1, 2) avoids every reflecting hyperplane of
            // a monomial group
            true
        } else {
            let v = g.eigenvector(&zeta);
            mg.is_regular_vector(&v, &normals)
        };
        if !regular {
            continue;
        }
        // build the powers of (g, zeta_d)
        let step = m / d;
        let mut powers = Vec::with_capacity(d as usize);
        let mut acc = Mat2::identity();
        for j in 0..d {
            let idx = mg
                .elements
                .iter()
                .position(|e| *e == acc)
                .expect("power stays in group");
            powers.push((mg.class_of[idx], (j * step) % m));
            acc = acc.mul(g);
        }
        return Ok(CyclicSubgroupData { d, powers });
    }
    Err(Error::MissingCatalogEntry(format!(
        "{group}: no regular element of order {d}"
    )))
}

/// The equivariant Euler characteristic of the Milnor fibre as an element
/// of R(G x mu_m): the sum over the poset of chi(U(d)^0/G(d)) times the
/// induction of the trivial character from R(d).
pub fn equivariant_euler(entry: &ReflectionGroupData) -> Result<RepElement> {
    let group = entry.group.clone().ok_or_else(|| {
        Error::MissingCatalogEntry(format!("{}: no character-table group", entry.id))
    })?;
    let m = entry.m()?;
    let gamma = GroupSpec::product(group, m);
    let chi = chi_u0_values(entry)?;
    let reg = regular_data(entry)?;
    let mut acc = RepElement::zero(gamma.clone());
    for (&d, &c) in &chi {
        if c == 0 {
            continue;
        }
        let ind = induce_from_cyclic(&gamma, &reg[&d].powers)?;
        acc = acc.add(&ind.scale(c))?;
    }
    Ok(acc)
}

/// The mu_m-equivariant Euler characteristic of F/G: the sum over the poset
/// of chi(U(d)^0/G(d)) times the sum of the characters trivial on mu_d.
pub fn monodromy_euler_quotient(entry: &ReflectionGroupData) -> Result<RepElement> {
    let m = entry.m()?;
    let chi = chi_u0_values(entry)?;
    let spec = GroupSpec::Cyclic(m);
    let mut acc = RepElement::zero(spec.clone());
    for (&d, &c) in &chi {
        if c == 0 {
            continue;
        }
        for j in 0..(m / d) {
            acc.add_term(IrrLabel::Gamma(d * j), c);
        }
    }
    Ok(acc)
}

/// Phi = sum over i < e of eps^i (x) gamma_{di}, the e-dimensional
/// representation through which all cohomology of F factors.
pub fn factor_phi(group: &GroupSpec, m: u32, e: u32) -> Result<RepElement> {
    if e == 0 || m % e != 0 {
        return Err(Error::Unsupported(format!("factor_phi needs e | m, got m={m}, e={e}")));
    }
    let d = m / e;
    let gamma = GroupSpec::product(group.clone(), m);
    let mut acc = RepElement::zero(gamma);
    for i in 0..e {
        acc.add_term(IrrLabel::pair(eps_pow_label(group, i)?, (d * i) % m), 1);
    }
    Ok(acc)
}

/// Phi for a catalog entry, with e = gcd of the hyperplane orders.
pub fn factor_phi_entry(entry: &ReflectionGroupData) -> Result<RepElement> {
    let group = entry.group.clone().ok_or_else(|| {
        Error::MissingCatalogEntry(format!("{}: no character-table group", entry.id))
    })?;
    factor_phi(&group, entry.m()?, entry.e_gcd())
}

// ---------------------------------------------------------------------------
// catalog file

#[derive(Deserialize)]
struct CatalogFile {
    version: u32,
    #[serde(default, rename = "group")]
    groups: Vec<CatalogRecord>,
}

#[derive(Deserialize)]
struct CatalogRecord {
    id: String,
    family: String,
    #[serde(default)]
    param: Option<u32>,
    #[serde(default)]
    r: Option<u32>,
    #[serde(default)]
    l: Option<u32>,
    #[serde(default)]
    e: Option<u32>,
    #[serde(default)]
    d: Option<u32>,
    #[serde(default)]
    degrees: Vec<u32>,
    #[serde(default)]
    eh_values: Vec<u32>,
    #[serde(default)]
    chi_u0: BTreeMap<String, i64>,
    #[serde(default)]
    expected_chi_u0: Option<i64>,
}

pub struct Catalog {
    pub entries: BTreeMap<String, ReflectionGroupData>,
}

impl Catalog {
    /// Load the bundled catalog (or the one named by `MILNOR_DATA_DIR`).
    pub fn builtin() -> Result<Catalog> {
        Catalog::from_toml(&crate::data::data_text("catalog.toml")?)
    }

    pub fn from_toml(text: &str) -> Result<Catalog> {
        let file: CatalogFile =
            toml::from_str(text).map_err(|e| Error::DataError(format!("catalog: {e}")))?;
        if file.version != 1 {
            return Err(Error::DataError(format!(
                "unsupported catalog version {}",
                file.version
            )));
        }
        let mut entries = BTreeMap::new();
        for rec in file.groups {
            let entry = build_entry(&rec)?;
            entries.insert(entry.id.clone(), entry);
        }
        Ok(Catalog { entries })
    }

    pub fn get(&self, id: &str) -> Result<&ReflectionGroupData> {
        self.entries
            .get(id)
            .ok_or_else(|| Error::MissingCatalogEntry(id.to_string()))
    }

    pub fn symmetric(&self, n: u32) -> Result<&ReflectionGroupData> {
        self.get(&format!("sym{n}"))
    }

    pub fn dihedral(&self, p: u32) -> Result<&ReflectionGroupData> {
        self.get(&format!("dihedral{p}"))
    }
}

fn build_entry(rec: &CatalogRecord) -> Result<ReflectionGroupData> {
    let mut overrides = BTreeMap::new();
    for (k, v) in &rec.chi_u0 {
        let d: u32 = k
            .parse()
            .map_err(|_| Error::DataError(format!("{}: bad chi_u0 key {k}", rec.id)))?;
        overrides.insert(d, *v);
    }
    let missing = |what: &str| Error::DataError(format!("{}: missing {what}", rec.id));
    let entry = match rec.family.as_str() {
        "symmetric" => {
            let n = rec.param.ok_or_else(|| missing("param"))?;
            ReflectionGroupData {
                id: rec.id.clone(),
                family: Family::Symmetric { n },
                rank: n - 1,
                degrees: (1..=n).collect(),
                coexponents: (1..n).collect(),
                hyperplanes: vec![(2, n * (n - 1) / 2)],
                eh_values: vec![2],
                order: factorial(n),
                group: Some(GroupSpec::Symmetric(n)),
                chi_u0_overrides: overrides,
                expected_chi_u0: rec.expected_chi_u0,
            }
        }
        "dihedral" => {
            let p = rec.param.ok_or_else(|| missing("param"))?;
            ReflectionGroupData {
                id: rec.id.clone(),
                family: Family::Dihedral { p },
                rank: 2,
                degrees: vec![2, p],
                coexponents: vec![1, p - 1],
                hyperplanes: vec![(2, p)],
                eh_values: vec![2],
                order: 2 * p as u64,
                group: Some(GroupSpec::Dihedral(p)),
                chi_u0_overrides: overrides,
                expected_chi_u0: rec.expected_chi_u0,
            }
        }
        "imprimitive2" => {
            let p = rec.param.ok_or_else(|| missing("param"))?;
            ReflectionGroupData {
                id: rec.id.clone(),
                family: Family::Imprimitive2 { p },
                rank: 2,
                degrees: vec![4, 2 * p],
                coexponents: vec![1, 2 * p + 1],
                hyperplanes: vec![(2, 2 * p + 2)],
                eh_values: vec![2],
                order: 8 * p as u64,
                group: Some(GroupSpec::Imprimitive2(p)),
                chi_u0_overrides: overrides,
                expected_chi_u0: rec.expected_chi_u0,
            }
        }
        "imprimitive-full" => {
            let r = rec.r.ok_or_else(|| missing("r"))?;
            let l = rec.l.ok_or_else(|| missing("l"))?;
            let gd = imprimitive_gd(r, l);
            ReflectionGroupData {
                id: rec.id.clone(),
                family: Family::ImprimitiveFull { r, l },
                rank: l,
                degrees: gd.degrees,
                coexponents: gd.coexponents,
                hyperplanes: if l >= 2 {
                    vec![(r, l), (2, r * l * (l - 1) / 2)]
                } else {
                    vec![(r, 1)]
                },
                eh_values: if l >= 2 { vec![2, r] } else { vec![r] },
                order: gd.order,
                group: None,
                chi_u0_overrides: overrides,
                expected_chi_u0: rec.expected_chi_u0,
            }
        }
        "rank2-mixed" => {
            let p = rec.param.ok_or_else(|| missing("param"))?;
            let e = rec.e.ok_or_else(|| missing("e"))?;
            let mut degrees = vec![2 * e, p * e];
            degrees.sort_unstable();
            ReflectionGroupData {
                id: rec.id.clone(),
                family: Family::Rank2Mixed { p, e },
                rank: 2,
                degrees,
                coexponents: vec![1, p * e + 1],
                hyperplanes: vec![(2, p * e), (e, 2)],
                eh_values: vec![2, e],
                order: 2 * (p as u64) * (e as u64) * (e as u64),
                group: None,
                chi_u0_overrides: overrides,
                expected_chi_u0: rec.expected_chi_u0,
            }
        }
        "rank2-uniform" => {
            let e = rec.e.ok_or_else(|| missing("e"))?;
            let d = rec.d.ok_or_else(|| missing("d"))?;
            if rec.degrees.len() != 2 {
                return Err(missing("degrees"));
            }
            ReflectionGroupData {
                id: rec.id.clone(),
                family: Family::Rank2Uniform { e, d },
                rank: 2,
                degrees: rec.degrees.clone(),
                coexponents: vec![1, d - 1],
                hyperplanes: vec![(e, d)],
                eh_values: vec![e],
                order: rec.degrees.iter().map(|&x| x as u64).product(),
                group: None,
                chi_u0_overrides: overrides,
                expected_chi_u0: rec.expected_chi_u0,
            }
        }
        "rank2-numeric" => {
            if rec.degrees.len() != 2 || rec.eh_values.is_empty() {
                return Err(missing("degrees/eh_values"));
            }
            ReflectionGroupData {
                id: rec.id.clone(),
                family: Family::Rank2Numeric,
                rank: 2,
                degrees: rec.degrees.clone(),
                coexponents: vec![],
                hyperplanes: vec![],
                eh_values: rec.eh_values.clone(),
                order: rec.degrees.iter().map(|&x| x as u64).product(),
                group: None,
                chi_u0_overrides: overrides,
                expected_chi_u0: rec.expected_chi_u0,
            }
        }
        other => {
            return Err(Error::DataError(format!(
                "{}: unknown family {other}",
                rec.id
            )))
        }
    };
    Ok(entry)
}

/// Identity-class helper used by tests and the validator: the trivial
/// isotypic dimension check for equivariant_euler, i.e. evaluation at the
/// identity of the group.
pub fn euler_dimension(entry: &ReflectionGroupData) -> Result<i64> {
    equivariant_euler(entry)?.dim()
}

/// Consistency helper: the class descriptors of g_d in S_n as cycle types,
/// used by tests.
pub fn symmetric_gd_class(n: u32, d: u32, j: u32) -> Vec<u32> {
    let k = n / d;
    let mut base: Vec<u32> = vec![d; k as usize];
    base.extend(std::iter::repeat(1).take((n - k * d) as usize));
    power_cycle_type(&base, j)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_examples() {
        // S_4 on C^4
        let p = regular_poset(&[1, 2, 3, 4]);
        assert_eq!(p.elements, vec![1, 2, 3, 4]);
        assert_eq!(p.top, 1);
        // dihedral p = 5
        let p = regular_poset(&[2, 5]);
        assert_eq!(p.elements, vec![1, 2, 5]);
        // G4 (degrees 4, 6): d = 1 fails because gcd(4,6) = 2
        let p = regular_poset(&[4, 6]);
        assert_eq!(p.elements, vec![2, 4, 6]);
        assert_eq!(p.top, 2);
    }

    #[test]
    fn poset_regularity_filter() {
        // S_5 on C^5: 3 is in the gcd closure but is not regular
        let p = regular_poset(&[1, 2, 3, 4, 5]);
        assert_eq!(p.elements, vec![1, 2, 3, 4, 5]);
        let f = regular_poset_filtered(&[1, 2, 3, 4, 5], &[1, 2, 3, 4]);
        assert_eq!(f.elements, vec![1, 2, 4, 5]);
        // S_4 is unaffected
        let f = regular_poset_filtered(&[1, 2, 3, 4], &[1, 2, 3]);
        assert_eq!(f.elements, vec![1, 2, 3, 4]);
    }

    #[test]
    fn mobius_values_s4() {
        let p = regular_poset(&[1, 2, 3, 4]);
        assert_eq!(p.mobius(1).unwrap(), 1);
        assert_eq!(p.mobius(2).unwrap(), -1);
        assert_eq!(p.mobius(3).unwrap(), -1);
        assert_eq!(p.mobius(4).unwrap(), 0);
        assert!(p.mobius(5).is_err());
    }

    #[test]
    fn chi_u_values() {
        assert_eq!(chi_u(&[1, 2, 3]), 2); // S_4
        assert_eq!(chi_u(&[1, 2, 3, 4]), -6); // S_5
        assert_eq!(chi_u(&[1]), 1); // rank one
    }

    #[test]
    fn chi_u0_examples() {
        let catalog = Catalog::builtin().unwrap();
        // hand value for S_3: -1/6 - 1/2 - 1/3 = -1
        assert_eq!(chi_u0_mod_g(catalog.symmetric(3).unwrap()).unwrap(), -1);
        // G(r,1,2) with r > 1 gives -1
        for r in [2u32, 3, 4] {
            let entry = catalog.get(&format!("g{r}-1-2")).unwrap();
            assert_eq!(chi_u0_mod_g(entry).unwrap(), -1, "G({r},1,2)");
        }
        // rank-one groups give 1
        let entry = catalog.get("g4-1-1").unwrap();
        assert_eq!(chi_u0_mod_g(entry).unwrap(), 1);
        // dihedral groups give -1
        for p in [3u32, 4, 5, 6, 7] {
            assert_eq!(chi_u0_mod_g(catalog.dihedral(p).unwrap()).unwrap(), -1);
        }
    }

    #[test]
    fn chi_u0_symmetric_pattern() {
        // only d in {l, l+1, l/2 or (l+1)/2} give nonzero values 1, 1, -1
        let catalog = Catalog::builtin().unwrap();
        for l in 2..=6u32 {
            let n = l + 1;
            let entry = catalog.symmetric(n).unwrap();
            let values = chi_u0_values(entry).unwrap();
            let half = if l % 2 == 0 { l / 2 } else { (l + 1) / 2 };
            for (&d, &v) in &values {
                let expected = if d == l || d == n {
                    1
                } else if d == half {
                    -1
                } else {
                    0
                };
                assert_eq!(v, expected, "S_{n}, d = {d}");
            }
        }
    }
}
