//! Character tables, class functions and representation-ring arithmetic for
//! the groups in the catalog: cyclic mu_N, dihedral G(p,p,2), imprimitive
//! G(2p,p,2), symmetric S_n (n <= 8), products G x mu_N, and the index-e
//! subgroup Gamma_0 = Ker(eps (x) gamma_d) of such a product.

pub mod matrix2;
pub mod rep;
pub mod symmetric;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use cyclo::{Cyclotomic, Rational};

use crate::error::{Error, Result};
use symmetric::{class_size, factorial, mn_value, partitions, Partition};

pub use matrix2::Mat2;
pub use rep::{GradedRep, RepElement, Specialize};

/// Identifies a group in the catalog.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupSpec {
    /// mu_N, cyclic of order N
    Cyclic(u32),
    /// S_n acting by permutation of coordinates
    Symmetric(u32),
    /// the dihedral reflection group G(p,p,2)
    Dihedral(u32),
    /// the imprimitive reflection group G(2p,p,2)
    Imprimitive2(u32),
    /// direct product G x mu_N
    Product(Box<GroupSpec>, u32),
    /// Gamma_0 = Ker(eps (x) gamma_d) inside G x mu_m, where e divides m
    /// and d = m/e
    Gamma0(Box<GroupSpec>, u32, u32),
    /// a group known only at the numerical level (no character data)
    Named(String),
}

impl GroupSpec {
    pub fn product(g: GroupSpec, n: u32) -> GroupSpec {
        GroupSpec::Product(Box::new(g), n)
    }

    pub fn gamma0(g: GroupSpec, m: u32, e: u32) -> GroupSpec {
        assert!(m % e == 0, "e must divide m");
        GroupSpec::Gamma0(Box::new(g), m, e)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "mu{n}"),
            GroupSpec::Symmetric(n) => write!(f, "sym{n}"),
            GroupSpec::Dihedral(p) => write!(f, "G({p},{p},2)"),
            GroupSpec::Imprimitive2(p) => write!(f, "G({},{p},2)", 2 * p),
            GroupSpec::Product(g, n) => write!(f, "{g}xmu{n}"),
            GroupSpec::Gamma0(g, m, e) => write!(f, "gamma0({g},{m},{e})"),
            GroupSpec::Named(s) => write!(f, "{s}"),
        }
    }
}

/// Names of the dihedral irreducibles, following the classical two tables
/// (delta and sign*delta exist only for even p).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DihedralName {
    Triv,
    Sign,
    Delta,
    SignDelta,
    Chi(u32),
}

/// Labels for the irreducibles of G(2p,p,2): linear characters come as
/// extensions (with a sign) of self-paired diagonal characters, the rest are
/// induced from a swap-orbit of diagonal characters.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mon2Name {
    Lin { r: u32, s: u8, neg: bool },
    Ind { r: u32, s: u8 },
}

/// Label of an irreducible representation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IrrLabel {
    /// gamma_i of a cyclic group, gamma_i(zeta) = zeta^i
    Gamma(u32),
    /// chi^lambda of a symmetric group
    Partition(Partition),
    Dihedral(DihedralName),
    Mon2(Mon2Name),
    /// abstract power of the determinant character, for groups known only
    /// numerically
    DetPow(u32),
    /// rho (x) gamma_i of a product or gamma0 group
    Pair(Box<IrrLabel>, u32),
}

impl IrrLabel {
    pub fn pair(rho: IrrLabel, i: u32) -> IrrLabel {
        IrrLabel::Pair(Box::new(rho), i)
    }

    /// Splits a product/gamma0 label into (G-part, cyclic index).
    pub fn split_pair(&self) -> Option<(&IrrLabel, u32)> {
        match self {
            IrrLabel::Pair(rho, i) => Some((rho, *i)),
            _ => None,
        }
    }
}

impl fmt::Display for IrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrLabel::Gamma(i) => write!(f, "g{i}"),
            IrrLabel::Partition(p) => {
                write!(f, "[")?;
                for (i, part) in p.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{part}")?;
                }
                write!(f, "]")
            }
            IrrLabel::Dihedral(DihedralName::Triv) => write!(f, "1"),
            IrrLabel::Dihedral(DihedralName::Sign) => write!(f, "eps"),
            IrrLabel::Dihedral(DihedralName::Delta) => write!(f, "delta"),
            IrrLabel::Dihedral(DihedralName::SignDelta) => write!(f, "epsdelta"),
            IrrLabel::Dihedral(DihedralName::Chi(k)) => write!(f, "chi{k}"),
            IrrLabel::Mon2(Mon2Name::Lin { r, s, neg }) => {
                write!(f, "lin({r},{s},{})", if *neg { "-" } else { "+" })
            }
            IrrLabel::Mon2(Mon2Name::Ind { r, s }) => write!(f, "ind({r},{s})"),
            IrrLabel::DetPow(i) => write!(f, "det^{i}"),
            IrrLabel::Pair(rho, i) => write!(f, "{rho}(x)g{i}"),
        }
    }
}

/// Parse the `rho` component of a serialized representation term. Inverse of
/// the `Display` impl for non-`Pair` labels.
pub fn parse_label(s: &str) -> Result<IrrLabel> {
    let bad = || Error::ParseError(format!("bad representation label: {s}"));
    if s == "1" {
        return Ok(IrrLabel::Dihedral(DihedralName::Triv));
    }
    if s == "eps" {
        return Ok(IrrLabel::Dihedral(DihedralName::Sign));
    }
    if s == "delta" {
        return Ok(IrrLabel::Dihedral(DihedralName::Delta));
    }
    if s == "epsdelta" {
        return Ok(IrrLabel::Dihedral(DihedralName::SignDelta));
    }
    if let Some(rest) = s.strip_prefix("chi") {
        return rest.parse().map(|k| IrrLabel::Dihedral(DihedralName::Chi(k))).map_err(|_| bad());
    }
    if let Some(rest) = s.strip_prefix("g") {
        if let Ok(i) = rest.parse() {
            return Ok(IrrLabel::Gamma(i));
        }
    }
    if let Some(rest) = s.strip_prefix("det^") {
        return rest.parse().map(IrrLabel::DetPow).map_err(|_| bad());
    }
    if let Some(rest) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        if rest.is_empty() {
            return Ok(IrrLabel::Partition(vec![]));
        }
        let parts: std::result::Result<Vec<u32>, _> =
            rest.split(',').map(|p| p.trim().parse()).collect();
        return parts.map(IrrLabel::Partition).map_err(|_| bad());
    }
    if let Some(rest) = s.strip_prefix("lin(").and_then(|r| r.strip_suffix(')')) {
        let bits: Vec<&str> = rest.split(',').collect();
        if bits.len() == 3 {
            let r = bits[0].parse().map_err(|_| bad())?;
            let sv = bits[1].parse().map_err(|_| bad())?;
            let neg = match bits[2] {
                "+" => false,
                "-" => true,
                _ => return Err(bad()),
            };
            return Ok(IrrLabel::Mon2(Mon2Name::Lin { r, s: sv, neg }));
        }
    }
    if let Some(rest) = s.strip_prefix("ind(").and_then(|r| r.strip_suffix(')')) {
        let bits: Vec<&str> = rest.split(',').collect();
        if bits.len() == 2 {
            let r = bits[0].parse().map_err(|_| bad())?;
            let sv = bits[1].parse().map_err(|_| bad())?;
            return Ok(IrrLabel::Mon2(Mon2Name::Ind { r, s: sv }));
        }
    }
    Err(bad())
}

/// What a conjugacy class looks like, for reporting and for the helpers
/// that build induction data.
#[derive(Clone, Debug)]
pub enum ClassMeta {
    /// cyclic: power of the chosen generator
    Root(u32),
    /// symmetric: cycle type
    Cycle(Partition),
    /// matrix groups: index into the element list of a representative
    Matrix(usize),
    /// product: (class of G, power of zeta_N)
    ProductPair(usize, u32),
    /// gamma0: (class of G, power of zeta_m)
    Gamma0Cell(usize, u32),
}

/// A computed character table together with class data.
pub struct GroupData {
    pub spec: GroupSpec,
    pub order: u64,
    pub class_sizes: Vec<u64>,
    pub class_meta: Vec<ClassMeta>,
    pub identity_class: usize,
    pub irreps: Vec<IrrLabel>,
    /// table[i][c] = value of irreps[i] on class c
    pub table: Vec<Vec<Cyclotomic>>,
    index: HashMap<IrrLabel, usize>,
    /// base group data for Product/Gamma0
    pub base: Option<Arc<GroupData>>,
    /// matrix model for Dihedral/Imprimitive2
    pub matrices: Option<Arc<matrix2::MatrixGroup>>,
}

impl GroupData {
    pub fn irrep_index(&self, label: &IrrLabel) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::Unsupported(format!("no irreducible {label} in {}", self.spec)))
    }

    pub fn value(&self, label: &IrrLabel, class: usize) -> Result<&Cyclotomic> {
        Ok(&self.table[self.irrep_index(label)?][class])
    }

    pub fn dim(&self, label: &IrrLabel) -> Result<i64> {
        Ok(self.value(label, self.identity_class)?.as_integer()?)
    }

    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    /// The class function of a single irreducible.
    pub fn irr_class_function(&self, label: &IrrLabel) -> Result<ClassFunction> {
        Ok(ClassFunction {
            group: self.spec.clone(),
            values: self.table[self.irrep_index(label)?].clone(),
        })
    }
}

fn build_index(irreps: &[IrrLabel]) -> HashMap<IrrLabel, usize> {
    irreps
        .iter()
        .enumerate()
        .map(|(i, l)| (l.clone(), i))
        .collect()
}

/// Shared registry of computed character tables.
pub fn group_data(spec: &GroupSpec) -> Result<Arc<GroupData>> {
    static CACHE: OnceLock<Mutex<HashMap<GroupSpec, Arc<GroupData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    {
        let guard = cache.lock().unwrap();
        if let Some(d) = guard.get(spec) {
            return Ok(Arc::clone(d));
        }
    }
    let data = Arc::new(build_group_data(spec)?);
    cache
        .lock()
        .unwrap()
        .insert(spec.clone(), Arc::clone(&data));
    Ok(data)
}

fn build_group_data(spec: &GroupSpec) -> Result<GroupData> {
    match spec {
        GroupSpec::Cyclic(n) => {
            let n = *n;
            if n == 0 {
                return Err(Error::Unsupported("mu_0".into()));
            }
            let classes: Vec<ClassMeta> = (0..n).map(ClassMeta::Root).collect();
            let irreps: Vec<IrrLabel> = (0..n).map(IrrLabel::Gamma).collect();
            let table = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| Cyclotomic::root(n, (i as i64) * (j as i64)))
                        .collect()
                })
                .collect();
            Ok(GroupData {
                spec: spec.clone(),
                order: n as u64,
                class_sizes: vec![1; n as usize],
                class_meta: classes,
                identity_class: 0,
                index: build_index(&irreps),
                irreps,
                table,
                base: None,
                matrices: None,
            })
        }
        GroupSpec::Symmetric(n) => {
            let n = *n;
            if !(1..=8).contains(&n) {
                return Err(Error::Unsupported(format!(
                    "symmetric group catalog covers n in 1..=8, got {n}"
                )));
            }
            let cycle_types = partitions(n);
            let sizes: Vec<u64> = cycle_types.iter().map(|ct| class_size(ct, n)).collect();
            let identity_class = cycle_types
                .iter()
                .position(|ct| ct.iter().all(|&k| k == 1))
                .unwrap();
            let irreps: Vec<IrrLabel> = cycle_types
                .iter()
                .cloned()
                .map(IrrLabel::Partition)
                .collect();
            let mut table = Vec::with_capacity(irreps.len());
            for lam in &cycle_types {
                let row: Result<Vec<Cyclotomic>> = cycle_types
                    .iter()
                    .map(|ct| Ok(Cyclotomic::from_int(mn_value(lam, ct)?)))
                    .collect();
                table.push(row?);
            }
            Ok(GroupData {
                spec: spec.clone(),
                order: factorial(n),
                class_sizes: sizes,
                class_meta: cycle_types.into_iter().map(ClassMeta::Cycle).collect(),
                identity_class,
                index: build_index(&irreps),
                irreps,
                table,
                base: None,
                matrices: None,
            })
        }
        GroupSpec::Dihedral(p) => matrix_group_data(spec, matrix2::dihedral_group(*p)?),
        GroupSpec::Imprimitive2(p) => matrix_group_data(spec, matrix2::imprimitive2_group(*p)?),
        GroupSpec::Product(g, n) => {
            let base = group_data(g)?;
            let n = *n;
            let mut class_meta = Vec::new();
            let mut class_sizes = Vec::new();
            for c in 0..base.num_classes() {
                for j in 0..n {
                    class_meta.push(ClassMeta::ProductPair(c, j));
                    class_sizes.push(base.class_sizes[c]);
                }
            }
            let identity_class = base.identity_class * n as usize;
            let mut irreps = Vec::new();
            let mut table = Vec::new();
            for (ri, rho) in base.irreps.iter().enumerate() {
                for i in 0..n {
                    irreps.push(IrrLabel::pair(rho.clone(), i));
                    let mut row = Vec::with_capacity(class_meta.len());
                    for meta in &class_meta {
                        let ClassMeta::ProductPair(c, j) = meta else {
                            unreachable!()
                        };
                        let val =
                            &base.table[ri][*c] * &Cyclotomic::root(n, (i as i64) * (*j as i64));
                        row.push(val);
                    }
                    table.push(row);
                }
            }
            Ok(GroupData {
                spec: spec.clone(),
                order: base.order * n as u64,
                class_sizes,
                class_meta,
                identity_class,
                index: build_index(&irreps),
                irreps,
                table,
                base: Some(base),
                matrices: None,
            })
        }
        GroupSpec::Gamma0(g, m, e) => {
            let base = group_data(g)?;
            let (m, e) = (*m, *e);
            if e == 0 || m % e != 0 {
                return Err(Error::Unsupported(format!(
                    "gamma0 requires e | m, got m={m}, e={e}"
                )));
            }
            let d = m / e;
            let eps = eps_class_values(&base)?;
            // For each G-class c with eps(c) = zeta_e^a, the fibre over c
            // consists of the xi in mu_m with xi^d = eps(c)^{-1}, i.e.
            // xi = zeta_m^x with x = -a (mod e).
            let mut class_meta = Vec::new();
            let mut class_sizes = Vec::new();
            for c in 0..base.num_classes() {
                let a = (0..e)
                    .find(|&a| eps[c] == Cyclotomic::root(e, a as i64))
                    .ok_or_else(|| {
                        Error::Unsupported(format!(
                            "eps value on class {c} of {g} is not in mu_{e}"
                        ))
                    })?;
                let x0 = (e - a % e) % e;
                for t in 0..d {
                    class_meta.push(ClassMeta::Gamma0Cell(c, x0 + t * e));
                    class_sizes.push(base.class_sizes[c]);
                }
            }
            let identity_cell = class_meta
                .iter()
                .position(
                    |mt| matches!(mt, ClassMeta::Gamma0Cell(c, x) if *c == base.identity_class && *x == 0),
                )
                .expect("identity cell");
            let mut irreps = Vec::new();
            let mut table = Vec::new();
            for (ri, rho) in base.irreps.iter().enumerate() {
                for i in 0..d {
                    irreps.push(IrrLabel::pair(rho.clone(), i));
                    let mut row = Vec::with_capacity(class_meta.len());
                    for meta in &class_meta {
                        let ClassMeta::Gamma0Cell(c, x) = meta else {
                            unreachable!()
                        };
                        row.push(
                            &base.table[ri][*c] * &Cyclotomic::root(m, (i as i64) * (*x as i64)),
                        );
                    }
                    table.push(row);
                }
            }
            Ok(GroupData {
                spec: spec.clone(),
                order: base.order * d as u64,
                class_sizes,
                class_meta,
                identity_class: identity_cell,
                index: build_index(&irreps),
                irreps,
                table,
                base: Some(base),
                matrices: None,
            })
        }
        GroupSpec::Named(name) => Err(Error::Unsupported(format!(
            "group {name} is catalogued at the numerical level only"
        ))),
    }
}

fn matrix_group_data(spec: &GroupSpec, mg: matrix2::MatrixGroup) -> Result<GroupData> {
    let mg = Arc::new(mg);
    let irreps: Vec<IrrLabel> = mg.irreps.iter().map(|(l, _)| l.clone()).collect();
    let table: Vec<Vec<Cyclotomic>> = mg.irreps.iter().map(|(_, v)| v.clone()).collect();
    Ok(GroupData {
        spec: spec.clone(),
        order: mg.order(),
        class_sizes: mg.class_sizes.clone(),
        class_meta: mg.class_reps.iter().map(|&r| ClassMeta::Matrix(r)).collect(),
        identity_class: mg.identity_class,
        index: build_index(&irreps),
        irreps,
        table,
        base: None,
        matrices: Some(mg),
    })
}

/// The character eps(g) = det(g)^{-1} by which the group scales the reduced
/// defining polynomial, as values per conjugacy class.
pub fn eps_class_values(data: &GroupData) -> Result<Vec<Cyclotomic>> {
    match &data.spec {
        GroupSpec::Symmetric(_) => Ok(data
            .class_meta
            .iter()
            .map(|meta| {
                let ClassMeta::Cycle(ct) = meta else { unreachable!() };
                Cyclotomic::from_int(symmetric::sign_of_cycle_type(ct))
            })
            .collect()),
        GroupSpec::Dihedral(_) | GroupSpec::Imprimitive2(_) => {
            let mg = data.matrices.as_ref().unwrap();
            Ok(data
                .class_meta
                .iter()
                .map(|meta| {
                    let ClassMeta::Matrix(r) = meta else { unreachable!() };
                    mg.elements[*r].det().conj()
                })
                .collect())
        }
        _ => Err(Error::Unsupported(format!(
            "no det character for {}",
            data.spec
        ))),
    }
}

/// Label of eps^i as a concrete irreducible of the base group.
pub fn eps_pow_label(g: &GroupSpec, i: u32) -> Result<IrrLabel> {
    match g {
        GroupSpec::Symmetric(n) => {
            if i % 2 == 0 {
                Ok(IrrLabel::Partition(vec![*n]))
            } else {
                Ok(IrrLabel::Partition(vec![1; *n as usize]))
            }
        }
        GroupSpec::Dihedral(_) => Ok(IrrLabel::Dihedral(if i % 2 == 0 {
            DihedralName::Triv
        } else {
            DihedralName::Sign
        })),
        GroupSpec::Imprimitive2(_) => {
            let data = group_data(g)?;
            let eps = eps_class_values(&data)?;
            let target: Vec<Cyclotomic> = eps.iter().map(|v| v.pow(i as u64)).collect();
            for (label, row) in data.irreps.iter().zip(data.table.iter()) {
                if row == &target {
                    return Ok(label.clone());
                }
            }
            Err(Error::Unsupported("eps power not found in table".into()))
        }
        GroupSpec::Named(_) => Ok(IrrLabel::DetPow(i)),
        _ => Err(Error::Unsupported(format!("no eps character for {g}"))),
    }
}

/// A class function on a catalog group, stored as exact values indexed by
/// conjugacy class.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFunction {
    pub group: GroupSpec,
    pub values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn new(group: GroupSpec, values: Vec<Cyclotomic>) -> Self {
        ClassFunction { group, values }
    }

    pub fn zero(data: &GroupData) -> Self {
        ClassFunction {
            group: data.spec.clone(),
            values: vec![Cyclotomic::zero(); data.num_classes()],
        }
    }

    pub fn pointwise_mul(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(
                self.group.to_string(),
                other.group.to_string(),
            ));
        }
        Ok(ClassFunction {
            group: self.group.clone(),
            values: self
                .values
                .iter()
                .zip(other.values.iter())
                .map(|(a, b)| a * b)
                .collect(),
        })
    }
}

/// Hermitian inner product (f, g) = |G|^{-1} sum over classes of
/// size * f * conj(g), which must come out rational.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<Rational> {
    if f.group != g.group {
        return Err(Error::GroupMismatch(
            f.group.to_string(),
            g.group.to_string(),
        ));
    }
    let data = group_data(&f.group)?;
    let mut acc = Cyclotomic::zero();
    for ((a, b), &size) in f
        .values
        .iter()
        .zip(g.values.iter())
        .zip(data.class_sizes.iter())
    {
        if a.is_zero() || b.is_zero() {
            continue;
        }
        acc = acc + (a * &b.conj()).scale(&Rational::from_integer(size.into()));
    }
    let total = acc.scale(&Rational::new(1.into(), data.order.into()));
    Ok(total.as_rational()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use cyclo::rint;

    fn orthonormal(spec: &GroupSpec) {
        let data = group_data(spec).unwrap();
        let n = data.irreps.len();
        assert_eq!(n, data.num_classes(), "{spec}: square table");
        for i in 0..n {
            for j in 0..n {
                let fi = data.irr_class_function(&data.irreps[i]).unwrap();
                let fj = data.irr_class_function(&data.irreps[j]).unwrap();
                let ip = inner_product(&fi, &fj).unwrap();
                let expected = if i == j { rint(1) } else { rint(0) };
                assert_eq!(ip, expected, "{spec}: ({}, {})", data.irreps[i], data.irreps[j]);
            }
        }
    }

    #[test]
    fn cyclic_tables() {
        let data = group_data(&GroupSpec::Cyclic(3)).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(
                    data.table[i][j],
                    Cyclotomic::root(3, (i * j) as i64),
                    "gamma_{i} at class {j}"
                );
            }
        }
        orthonormal(&GroupSpec::Cyclic(6));
    }

    #[test]
    fn dihedral_table_against_classical_values() {
        // chi_1 on the rotation class of zeta_3 is zeta_3 + zeta_3^2 = -1
        let spec = GroupSpec::Dihedral(3);
        let data = group_data(&spec).unwrap();
        let chi1 = data.irrep_index(&IrrLabel::Dihedral(DihedralName::Chi(1))).unwrap();
        let rotation_class = data
            .class_meta
            .iter()
            .position(|meta| {
                let ClassMeta::Matrix(r) = meta else { unreachable!() };
                let m = &data.matrices.as_ref().unwrap().elements[*r];
                m.is_diagonal() && m.e[0][0] == Cyclotomic::root(3, 1)
            })
            .unwrap();
        assert_eq!(data.table[chi1][rotation_class], Cyclotomic::from_int(-1));
        orthonormal(&spec);
    }

    #[test]
    fn symmetric_table_spot_checks() {
        let data = group_data(&GroupSpec::Symmetric(4)).unwrap();
        // chi^{(3,1)} at class (2,2) = (#fixed points) - 1 = -1
        let row = data.irrep_index(&IrrLabel::Partition(vec![3, 1])).unwrap();
        let col = data
            .class_meta
            .iter()
            .position(|m| matches!(m, ClassMeta::Cycle(ct) if ct == &vec![2, 2]))
            .unwrap();
        assert_eq!(data.table[row][col], Cyclotomic::from_int(-1));
        orthonormal(&GroupSpec::Symmetric(4));
    }

    #[test]
    fn orthonormality_across_catalog() {
        orthonormal(&GroupSpec::Dihedral(5));
        orthonormal(&GroupSpec::Dihedral(6));
        orthonormal(&GroupSpec::Imprimitive2(2));
        orthonormal(&GroupSpec::Symmetric(5));
        orthonormal(&GroupSpec::product(GroupSpec::Symmetric(3), 6));
        orthonormal(&GroupSpec::gamma0(GroupSpec::Symmetric(3), 6, 2));
        orthonormal(&GroupSpec::gamma0(GroupSpec::Dihedral(4), 8, 2));
    }

    #[test]
    fn gamma0_sizes() {
        // |Gamma_0| = |G| * d
        let data = group_data(&GroupSpec::gamma0(GroupSpec::Symmetric(4), 12, 2)).unwrap();
        assert_eq!(data.order, 24 * 6);
        assert_eq!(data.class_sizes.iter().sum::<u64>(), 24 * 6);
    }

    #[test]
    fn label_parse_round_trip() {
        for label in [
            IrrLabel::Gamma(7),
            IrrLabel::Partition(vec![3, 1]),
            IrrLabel::Dihedral(DihedralName::Chi(2)),
            IrrLabel::Dihedral(DihedralName::SignDelta),
            IrrLabel::Mon2(Mon2Name::Lin { r: 3, s: 1, neg: true }),
            IrrLabel::Mon2(Mon2Name::Ind { r: 2, s: 0 }),
            IrrLabel::DetPow(2),
        ] {
            let s = label.to_string();
            assert_eq!(parse_label(&s).unwrap(), label, "{s}");
        }
        // "1" parses to the trivial label
        assert_eq!(parse_label("1").unwrap(), IrrLabel::Dihedral(DihedralName::Triv));
    }
}
