//! Integer combinations of irreducibles (elements of the representation
//! ring) and graded versions with marker exponents (u, v, t), together with
//! induction and restriction operations between the catalog groups.

use std::collections::BTreeMap;
use std::fmt;

use cyclo::{Cyclotomic, Rational};

use crate::error::{Error, Result};
use crate::repring::{
    eps_pow_label, group_data, inner_product, symmetric, ClassFunction, DihedralName, GroupSpec,
    IrrLabel,
};

/// An integer combination of labelled irreducibles of a fixed group.
#[derive(Clone, PartialEq, Eq)]
pub struct RepElement {
    pub group: GroupSpec,
    mults: BTreeMap<IrrLabel, i64>,
}

impl RepElement {
    pub fn zero(group: GroupSpec) -> Self {
        RepElement {
            group,
            mults: BTreeMap::new(),
        }
    }

    pub fn irreducible(group: GroupSpec, label: IrrLabel) -> Self {
        let mut mults = BTreeMap::new();
        mults.insert(label, 1);
        RepElement { group, mults }
    }

    pub fn from_terms<I: IntoIterator<Item = (IrrLabel, i64)>>(group: GroupSpec, terms: I) -> Self {
        let mut out = RepElement::zero(group);
        for (l, m) in terms {
            out.add_term(l, m);
        }
        out
    }

    pub fn add_term(&mut self, label: IrrLabel, mult: i64) {
        if mult == 0 {
            return;
        }
        let entry = self.mults.entry(label).or_insert(0);
        *entry += mult;
        if *entry == 0 {
            let key: Vec<_> = self
                .mults
                .iter()
                .filter(|(_, &m)| m == 0)
                .map(|(k, _)| k.clone())
                .collect();
            for k in key {
                self.mults.remove(&k);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IrrLabel, i64)> {
        self.mults.iter().map(|(l, &m)| (l, m))
    }

    pub fn mult(&self, label: &IrrLabel) -> i64 {
        self.mults.get(label).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.mults.values().all(|&m| m >= 0)
    }

    pub fn num_terms(&self) -> usize {
        self.mults.len()
    }

    pub fn scale(&self, c: i64) -> RepElement {
        if c == 0 {
            return RepElement::zero(self.group.clone());
        }
        RepElement {
            group: self.group.clone(),
            mults: self.mults.iter().map(|(l, m)| (l.clone(), m * c)).collect(),
        }
    }

    fn check_group(&self, other: &RepElement) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(
                self.group.to_string(),
                other.group.to_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &RepElement) -> Result<RepElement> {
        self.check_group(other)?;
        let mut out = self.clone();
        for (l, m) in other.terms() {
            out.add_term(l.clone(), m);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &RepElement) -> Result<RepElement> {
        self.add(&other.scale(-1))
    }

    /// The sum of terms with positive multiplicity.
    pub fn positive_part(&self) -> RepElement {
        RepElement {
            group: self.group.clone(),
            mults: self
                .mults
                .iter()
                .filter(|(_, &m)| m > 0)
                .map(|(l, &m)| (l.clone(), m))
                .collect(),
        }
    }

    /// The negated sum of terms with negative multiplicity (an effective
    /// element).
    pub fn negative_part(&self) -> RepElement {
        RepElement {
            group: self.group.clone(),
            mults: self
                .mults
                .iter()
                .filter(|(_, &m)| m < 0)
                .map(|(l, &m)| (l.clone(), -m))
                .collect(),
        }
    }

    /// Termwise maximum; the smallest effective element containing both.
    pub fn join(&self, other: &RepElement) -> Result<RepElement> {
        self.check_group(other)?;
        let mut out = self.clone();
        for (l, m) in other.terms() {
            let cur = out.mult(l);
            if m > cur {
                out.mults.insert(l.clone(), m);
            }
        }
        Ok(out)
    }

    /// Total dimension: sum of mult * dim(irreducible).
    pub fn dim(&self) -> Result<i64> {
        let data = group_data(&self.group)?;
        let mut total = 0i64;
        for (l, m) in self.terms() {
            total += m * data.dim(l)?;
        }
        Ok(total)
    }

    /// Expand into an exact class function.
    pub fn class_function(&self) -> Result<ClassFunction> {
        let data = group_data(&self.group)?;
        let mut values = vec![Cyclotomic::zero(); data.num_classes()];
        for (l, m) in self.terms() {
            let idx = data.irrep_index(l)?;
            let c = Cyclotomic::from_int(m);
            for (v, t) in values.iter_mut().zip(data.table[idx].iter()) {
                *v = &*v + &(t * &c);
            }
        }
        Ok(ClassFunction::new(self.group.clone(), values))
    }

    /// Decompose a virtual character into irreducibles. Fails with
    /// `NonIntegral` if some inner product is not an integer, and verifies
    /// the reconstruction is exact.
    pub fn decompose(f: &ClassFunction) -> Result<RepElement> {
        let data = group_data(&f.group)?;
        let mut out = RepElement::zero(f.group.clone());
        for (label, row) in data.irreps.iter().zip(data.table.iter()) {
            let chi = ClassFunction::new(f.group.clone(), row.clone());
            let ip = inner_product(f, &chi)?;
            if !ip.is_integer() {
                return Err(Error::NonIntegral(label.to_string(), ip.to_string()));
            }
            let m = i64::try_from(ip.to_integer()).expect("multiplicity out of range");
            out.add_term(label.clone(), m);
        }
        // reconstruction must reproduce f exactly
        let back = out.class_function()?;
        if back.values != f.values {
            return Err(Error::NonIntegral(
                "reconstruction".into(),
                "decomposition does not reproduce the class function".into(),
            ));
        }
        Ok(out)
    }

    /// Tensor product, decomposed into irreducibles.
    pub fn tensor(&self, other: &RepElement) -> Result<RepElement> {
        self.check_group(other)?;
        let f = self.class_function()?.pointwise_mul(&other.class_function()?)?;
        RepElement::decompose(&f)
    }

    /// For product/gamma0 groups: the cyclic decomposition attached to one
    /// G-irreducible, as an element over mu_N.
    pub fn gamma_slice(&self, rho: &IrrLabel) -> Result<RepElement> {
        let n = match &self.group {
            GroupSpec::Product(_, n) => *n,
            GroupSpec::Gamma0(_, m, e) => *m / *e,
            g => {
                return Err(Error::Unsupported(format!(
                    "gamma_slice needs a product or gamma0 group, got {g}"
                )))
            }
        };
        let mut out = RepElement::zero(GroupSpec::Cyclic(n));
        for (l, m) in self.terms() {
            if let Some((r, i)) = l.split_pair() {
                if r == rho {
                    out.add_term(IrrLabel::Gamma(i), m);
                }
            }
        }
        Ok(out)
    }

    /// The 1_G-isotypic part, as an element over the cyclic factor.
    pub fn trivial_isotypic(&self) -> Result<RepElement> {
        let base = match &self.group {
            GroupSpec::Product(g, _) | GroupSpec::Gamma0(g, _, _) => g,
            g => {
                return Err(Error::Unsupported(format!(
                    "trivial_isotypic needs a product or gamma0 group, got {g}"
                )))
            }
        };
        self.gamma_slice(&trivial_label(base)?)
    }

    /// Restriction along mu_n -> group for elements over cyclic, product or
    /// gamma0 groups, realised on labels: W (x) gamma_k goes to
    /// (dim W) gamma_{k mod n}.
    pub fn theta_restrict(&self, n: u32) -> Result<RepElement> {
        let mut out = RepElement::zero(GroupSpec::Cyclic(n));
        match &self.group {
            GroupSpec::Cyclic(_) => {
                for (l, m) in self.terms() {
                    let IrrLabel::Gamma(k) = l else {
                        return Err(Error::Unsupported(format!("bad label {l} on cyclic group")));
                    };
                    out.add_term(IrrLabel::Gamma(k % n), m);
                }
            }
            GroupSpec::Product(g, _) | GroupSpec::Gamma0(g, _, _) => {
                let base = group_data(g)?;
                for (l, m) in self.terms() {
                    let Some((rho, k)) = l.split_pair() else {
                        return Err(Error::Unsupported(format!("bad label {l} on {}", self.group)));
                    };
                    let d = base.dim(rho)?;
                    out.add_term(IrrLabel::Gamma(k % n), m * d);
                }
            }
            g => return Err(Error::Unsupported(format!("theta_restrict on {g}"))),
        }
        Ok(out)
    }

    /// Restrict to the cyclic subgroup of order `n` generated by `(g, zeta_n)`,
    /// where `power_classes[j]` is the G-class of `g^j`, and decompose over
    /// mu_n. The generic form of the restriction maps used to pin down Hodge
    /// data (the identity element realises plain monodromy restriction).
    pub fn restrict_to_cyclic(&self, power_classes: &[usize], n: u32) -> Result<RepElement> {
        let base = match &self.group {
            GroupSpec::Product(g, _) | GroupSpec::Gamma0(g, _, _) => group_data(g)?,
            g => {
                return Err(Error::Unsupported(format!(
                    "restrict_to_cyclic needs a product or gamma0 group, got {g}"
                )))
            }
        };
        if power_classes.len() != n as usize {
            return Err(Error::ShapeMismatch(format!(
                "need {n} power classes, got {}",
                power_classes.len()
            )));
        }
        // total character value on the j-th power of the generator
        let mut values = vec![Cyclotomic::zero(); n as usize];
        for (l, m) in self.terms() {
            let Some((rho, h)) = l.split_pair() else {
                return Err(Error::Unsupported(format!("bad label {l}")));
            };
            let idx = base.irrep_index(rho)?;
            let c = Cyclotomic::from_int(m);
            for (j, v) in values.iter_mut().enumerate() {
                let rho_val = &base.table[idx][power_classes[j]];
                let tw = Cyclotomic::root(n, (h as i64) * (j as i64));
                *v = &*v + &(&(rho_val * &tw) * &c);
            }
        }
        let mut out = RepElement::zero(GroupSpec::Cyclic(n));
        for i in 0..n {
            let mut acc = Cyclotomic::zero();
            for (j, v) in values.iter().enumerate() {
                acc = acc + v * &Cyclotomic::root(n, -(i as i64) * (j as i64));
            }
            let total = acc.scale(&Rational::new(1.into(), (n as i64).into()));
            let m = total
                .as_integer()
                .map_err(|_| Error::NonIntegral(format!("gamma_{i}"), total.to_string()))?;
            out.add_term(IrrLabel::Gamma(i), m);
        }
        Ok(out)
    }
}

impl fmt::Display for RepElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mults.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (l, m) in self.terms() {
            if first {
                if m < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if m < 0 { "-" } else { "+" })?;
            }
            if m.abs() != 1 {
                write!(f, "{}*", m.abs())?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RepElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RepElement[{}]({})", self.group, self)
    }
}

/// The trivial irreducible of a base group.
pub fn trivial_label(g: &GroupSpec) -> Result<IrrLabel> {
    match g {
        GroupSpec::Cyclic(_) => Ok(IrrLabel::Gamma(0)),
        GroupSpec::Symmetric(n) => Ok(IrrLabel::Partition(vec![*n])),
        GroupSpec::Dihedral(_) => Ok(IrrLabel::Dihedral(DihedralName::Triv)),
        GroupSpec::Imprimitive2(_) => eps_pow_label(g, 0),
        GroupSpec::Named(_) => Ok(IrrLabel::DetPow(0)),
        g => Err(Error::Unsupported(format!("no trivial label for {g}"))),
    }
}

/// Tensor a base-group irreducible with eps^a; fast paths for the labelled
/// families, generic decomposition otherwise.
pub fn eps_tensor(g: &GroupSpec, rho: &IrrLabel, a: u32) -> Result<IrrLabel> {
    match g {
        GroupSpec::Symmetric(_) => {
            if a % 2 == 0 {
                Ok(rho.clone())
            } else {
                let IrrLabel::Partition(p) = rho else {
                    return Err(Error::Unsupported(format!("bad label {rho}")));
                };
                Ok(IrrLabel::Partition(symmetric::conjugate_partition(p)))
            }
        }
        GroupSpec::Dihedral(_) => {
            if a % 2 == 0 {
                return Ok(rho.clone());
            }
            let IrrLabel::Dihedral(name) = rho else {
                return Err(Error::Unsupported(format!("bad label {rho}")));
            };
            Ok(IrrLabel::Dihedral(match name {
                DihedralName::Triv => DihedralName::Sign,
                DihedralName::Sign => DihedralName::Triv,
                DihedralName::Delta => DihedralName::SignDelta,
                DihedralName::SignDelta => DihedralName::Delta,
                DihedralName::Chi(k) => DihedralName::Chi(*k),
            }))
        }
        GroupSpec::Named(_) => {
            let IrrLabel::DetPow(i) = rho else {
                return Err(Error::Unsupported(format!("bad label {rho}")));
            };
            Ok(IrrLabel::DetPow(i + a))
        }
        _ => {
            // generic: multiply class functions and read off the single
            // irreducible constituent
            let data = group_data(g)?;
            let eps_a = crate::repring::eps_class_values(&data)?
                .iter()
                .map(|v| v.pow(a as u64))
                .collect::<Vec<_>>();
            let idx = data.irrep_index(rho)?;
            let values: Vec<Cyclotomic> = data.table[idx]
                .iter()
                .zip(eps_a.iter())
                .map(|(x, e)| x * e)
                .collect();
            let dec = RepElement::decompose(&ClassFunction::new(g.clone(), values))?;
            let mut terms: Vec<_> = dec.terms().map(|(l, m)| (l.clone(), m)).collect();
            if terms.len() != 1 || terms[0].1 != 1 {
                return Err(Error::Unsupported(format!(
                    "eps tensor of {rho} is not irreducible"
                )));
            }
            Ok(terms.remove(0).0)
        }
    }
}

/// For m = d*e, rewrite a Gamma-level label rho (x) gamma_i (0 <= i < m) as
/// the canonical Gamma_0-level label rho' (x) gamma_{i mod d} with the same
/// restriction to Gamma_0: rho' = eps^a rho, a = -(i div d) mod e.
pub fn canonical_gamma0_label(
    base: &GroupSpec,
    m: u32,
    e: u32,
    rho: &IrrLabel,
    i: u32,
) -> Result<IrrLabel> {
    let d = m / e;
    let i = i % m;
    let quot = i / d;
    let a = (e - quot % e) % e;
    let rho2 = eps_tensor(base, rho, a)?;
    Ok(IrrLabel::pair(rho2, i % d))
}

/// Restriction of an element of R(G x mu_m) to Gamma_0, with labels in
/// canonical form.
pub fn restrict_to_gamma0(x: &RepElement, e: u32) -> Result<RepElement> {
    let GroupSpec::Product(g, m) = &x.group else {
        return Err(Error::Unsupported(format!(
            "restrict_to_gamma0 needs a product group, got {}",
            x.group
        )));
    };
    let spec = GroupSpec::gamma0((**g).clone(), *m, e);
    let mut out = RepElement::zero(spec);
    for (l, mult) in x.terms() {
        let Some((rho, i)) = l.split_pair() else {
            return Err(Error::Unsupported(format!("bad label {l}")));
        };
        out.add_term(canonical_gamma0_label(g, *m, e, rho, i)?, mult);
    }
    Ok(out)
}

/// Induction from Gamma_0 up to Gamma = G x mu_m: multiplication by
/// Phi = sum over a < e of eps^a (x) gamma_{da} applied to the canonical
/// lift. Dimensions multiply by e.
pub fn induce_gamma0(x: &RepElement) -> Result<RepElement> {
    let GroupSpec::Gamma0(g, m, e) = &x.group else {
        return Err(Error::Unsupported(format!(
            "induce_gamma0 needs a gamma0 group, got {}",
            x.group
        )));
    };
    let (m, e) = (*m, *e);
    let d = m / e;
    let spec = GroupSpec::product((**g).clone(), m);
    let mut out = RepElement::zero(spec);
    for (l, mult) in x.terms() {
        let Some((rho, i)) = l.split_pair() else {
            return Err(Error::Unsupported(format!("bad label {l}")));
        };
        for a in 0..e {
            let rho2 = eps_tensor(g, rho, a)?;
            out.add_term(IrrLabel::pair(rho2, (i + a * d) % m), mult);
        }
    }
    Ok(out)
}

/// Induction of the trivial character from the cyclic subgroup R(d)
/// generated by (g_d, zeta_d) up to Gamma = G x mu_m, computed through
/// Frobenius reciprocity: the multiplicity of rho (x) gamma_i is
/// (1/d) sum_j conj(rho(g_d^j) zeta_m^{r_j i}) where r_j is the power of
/// zeta_m representing zeta_d^j.
pub fn induce_from_cyclic(gamma: &GroupSpec, powers: &[(usize, u32)]) -> Result<RepElement> {
    let GroupSpec::Product(g, m) = gamma else {
        return Err(Error::Unsupported(format!(
            "induce_from_cyclic needs a product group, got {gamma}"
        )));
    };
    let base = group_data(g)?;
    let d = powers.len() as u32;
    let mut out = RepElement::zero(gamma.clone());
    for (ri, rho) in base.irreps.iter().enumerate() {
        // accumulate conj(rho(g^j)) zeta^{-r_j i} once per i
        for i in 0..*m {
            let mut acc = Cyclotomic::zero();
            for &(cls, root_pow) in powers {
                let val = base.table[ri][cls].conj();
                let tw = Cyclotomic::root(*m, -((root_pow as i64) * (i as i64)));
                acc = acc + (&val * &tw);
            }
            let total = acc.scale(&Rational::new(1.into(), (d as i64).into()));
            let mult = total.as_integer().map_err(|_| {
                Error::NonIntegral(format!("{rho}(x)g{i}"), total.to_string())
            })?;
            if mult != 0 {
                out.add_term(IrrLabel::pair(rho.clone(), i), mult);
            }
        }
    }
    Ok(out)
}

/// Marker specialisation for graded exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Specialize {
    One,
    MinusOne,
    Keep,
}

impl Specialize {
    fn apply(self, exp: u32) -> (u32, i64) {
        match self {
            Specialize::One => (0, 1),
            Specialize::MinusOne => (0, if exp % 2 == 0 { 1 } else { -1 }),
            Specialize::Keep => (exp, 1),
        }
    }
}

/// A polynomial in markers u, v, t with representation-ring coefficients.
/// Houses equivariant Poincare, weight, Hodge-Deligne and Poincare-Deligne
/// data; plain Poincare polynomials simply have all u, v exponents zero.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedRep {
    pub group: GroupSpec,
    terms: BTreeMap<(u32, u32, u32), RepElement>,
}

impl GradedRep {
    pub fn zero(group: GroupSpec) -> Self {
        GradedRep {
            group,
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, exps: (u32, u32, u32), coeff: &RepElement) -> Result<()> {
        if coeff.group != self.group {
            return Err(Error::GroupMismatch(
                self.group.to_string(),
                coeff.group.to_string(),
            ));
        }
        if coeff.is_zero() {
            return Ok(());
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(coeff)?;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32, u32), &RepElement)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: (u32, u32, u32)) -> RepElement {
        self.terms
            .get(&exps)
            .cloned()
            .unwrap_or_else(|| RepElement::zero(self.group.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|c| c.is_effective())
    }

    pub fn max_t(&self) -> u32 {
        self.terms.keys().map(|&(_, _, t)| t).max().unwrap_or(0)
    }

    pub fn scale(&self, c: i64) -> GradedRep {
        let mut out = GradedRep::zero(self.group.clone());
        for (exps, coeff) in self.terms() {
            out.add_term(*exps, &coeff.scale(c)).unwrap();
        }
        out
    }

    pub fn gr_add(&self, other: &GradedRep) -> Result<GradedRep> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(
                self.group.to_string(),
                other.group.to_string(),
            ));
        }
        let mut out = self.clone();
        for (exps, coeff) in other.terms() {
            out.add_term(*exps, coeff)?;
        }
        Ok(out)
    }

    pub fn gr_sub(&self, other: &GradedRep) -> Result<GradedRep> {
        self.gr_add(&other.scale(-1))
    }

    pub fn gr_mul(&self, other: &GradedRep) -> Result<GradedRep> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(
                self.group.to_string(),
                other.group.to_string(),
            ));
        }
        let mut out = GradedRep::zero(self.group.clone());
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                let exps = (e1.0 + e2.0, e1.1 + e2.1, e1.2 + e2.2);
                out.add_term(exps, &c1.tensor(c2)?)?;
            }
        }
        Ok(out)
    }

    /// Multiply every coefficient by a fixed representation (no change to
    /// the exponents).
    pub fn mul_rep(&self, rep: &RepElement) -> Result<GradedRep> {
        let mut out = GradedRep::zero(self.group.clone());
        for (exps, coeff) in self.terms() {
            out.add_term(*exps, &coeff.tensor(rep)?)?;
        }
        Ok(out)
    }

    pub fn specialize(&self, u: Specialize, v: Specialize, t: Specialize) -> GradedRep {
        let mut out = GradedRep::zero(self.group.clone());
        for (&(eu, ev, et), coeff) in self.terms() {
            let (nu, su) = u.apply(eu);
            let (nv, sv) = v.apply(ev);
            let (nt, st) = t.apply(et);
            out.add_term((nu, nv, nt), &coeff.scale(su * sv * st)).unwrap();
        }
        out
    }

    /// Specialise everything and return the constant coefficient.
    pub fn as_rep(&self) -> Result<RepElement> {
        let s = self.specialize(Specialize::One, Specialize::One, Specialize::One);
        let mut out = RepElement::zero(self.group.clone());
        for (exps, coeff) in s.terms() {
            debug_assert_eq!(*exps, (0, 0, 0));
            out = out.add(coeff)?;
        }
        Ok(out)
    }

    /// Collapse to the weight grading: a term with (u, v) exponents (p, q)
    /// lands in t-degree p + q regardless of its cohomological degree.
    pub fn to_weight(&self) -> GradedRep {
        let mut out = GradedRep::zero(self.group.clone());
        for (&(eu, ev, _), coeff) in self.terms() {
            out.add_term((0, 0, eu + ev), coeff).unwrap();
        }
        out
    }

    /// Coefficients per t-degree, summed over all (u, v).
    pub fn t_graded(&self) -> BTreeMap<u32, RepElement> {
        let mut out: BTreeMap<u32, RepElement> = BTreeMap::new();
        for (&(_, _, et), coeff) in self.terms() {
            out.entry(et)
                .and_modify(|c| *c = c.add(coeff).unwrap())
                .or_insert_with(|| coeff.clone());
        }
        out
    }

    /// Euler-characteristic contraction: specialise t = -1 keeping u, v.
    pub fn euler_contraction(&self) -> GradedRep {
        self.specialize(Specialize::Keep, Specialize::Keep, Specialize::MinusOne)
    }

    /// Apply a coefficient-wise map (e.g. a restriction).
    pub fn map_coeffs<F>(&self, group: GroupSpec, mut f: F) -> Result<GradedRep>
    where
        F: FnMut(&RepElement) -> Result<RepElement>,
    {
        let mut out = GradedRep::zero(group);
        for (exps, coeff) in self.terms() {
            out.add_term(*exps, &f(coeff)?)?;
        }
        Ok(out)
    }

    /// theta restriction applied coefficient-wise.
    pub fn theta_graded(&self, n: u32) -> Result<GradedRep> {
        self.map_coeffs(GroupSpec::Cyclic(n), |c| c.theta_restrict(n))
    }

    /// The 1_G-isotypic graded part, over the cyclic factor.
    pub fn trivial_isotypic_graded(&self) -> Result<GradedRep> {
        let n = match &self.group {
            GroupSpec::Product(_, n) => *n,
            GroupSpec::Gamma0(_, m, e) => *m / *e,
            g => {
                return Err(Error::Unsupported(format!(
                    "trivial isotypic part needs a product or gamma0 group, got {g}"
                )))
            }
        };
        self.map_coeffs(GroupSpec::Cyclic(n), |c| c.trivial_isotypic())
    }

    /// Total dimension per (u, v, t) exponent.
    pub fn dims(&self) -> Result<BTreeMap<(u32, u32, u32), i64>> {
        let mut out = BTreeMap::new();
        for (exps, coeff) in self.terms() {
            out.insert(*exps, coeff.dim()?);
        }
        Ok(out)
    }
}

impl fmt::Display for GradedRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(u, v, t), coeff) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({coeff})")?;
            if u > 0 {
                write!(f, "u^{u}")?;
            }
            if v > 0 {
                write!(f, "v^{v}")?;
            }
            if t > 0 {
                write!(f, "t^{t}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GradedRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedRep[{}]({})", self.group, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repring::ClassMeta;

    #[test]
    fn decompose_regular_representation_of_mu4() {
        let spec = GroupSpec::Cyclic(4);
        let data = group_data(&spec).unwrap();
        // regular character: 4 at identity, 0 elsewhere
        let mut values = vec![Cyclotomic::zero(); 4];
        values[data.identity_class] = Cyclotomic::from_int(4);
        let reg = ClassFunction::new(spec.clone(), values);
        let dec = RepElement::decompose(&reg).unwrap();
        for i in 0..4 {
            assert_eq!(dec.mult(&IrrLabel::Gamma(i)), 1);
        }
    }

    #[test]
    fn decompose_permutation_character_of_s3() {
        // permutation character of S_3 on 3 points: fixed points per class
        let spec = GroupSpec::Symmetric(3);
        let data = group_data(&spec).unwrap();
        let values: Vec<Cyclotomic> = data
            .class_meta
            .iter()
            .map(|m| {
                let ClassMeta::Cycle(ct) = m else { unreachable!() };
                Cyclotomic::from_int(ct.iter().filter(|&&k| k == 1).count() as i64)
            })
            .collect();
        let dec = RepElement::decompose(&ClassFunction::new(spec, values)).unwrap();
        assert_eq!(dec.mult(&IrrLabel::Partition(vec![3])), 1);
        assert_eq!(dec.mult(&IrrLabel::Partition(vec![2, 1])), 1);
        assert_eq!(dec.mult(&IrrLabel::Partition(vec![1, 1, 1])), 0);
    }

    #[test]
    fn induce_s4_mu12_from_order_two() {
        // R(2) generated by ((2,2)-type, -1) inside S4 x mu12: the
        // multiplicity of chi^{(3,1)} (x) gamma_i is 1 for even i, 2 for odd
        let g = GroupSpec::Symmetric(4);
        let gamma = GroupSpec::product(g.clone(), 12);
        let data = group_data(&g).unwrap();
        let id = data.identity_class;
        let c22 = data
            .class_meta
            .iter()
            .position(|m| matches!(m, ClassMeta::Cycle(ct) if ct == &vec![2, 2]))
            .unwrap();
        let ind = induce_from_cyclic(&gamma, &[(id, 0), (c22, 6)]).unwrap();
        let rho = IrrLabel::Partition(vec![3, 1]);
        for i in 0..12u32 {
            let expected = if i % 2 == 0 { 1 } else { 2 };
            assert_eq!(ind.mult(&IrrLabel::pair(rho.clone(), i)), expected, "i={i}");
        }
        // total dimension |Gamma| / d
        assert_eq!(ind.dim().unwrap(), (24 * 12) / 2);
    }

    #[test]
    fn induce_s4_mu12_from_order_three() {
        let g = GroupSpec::Symmetric(4);
        let gamma = GroupSpec::product(g.clone(), 12);
        let data = group_data(&g).unwrap();
        let id = data.identity_class;
        let c31 = data
            .class_meta
            .iter()
            .position(|m| matches!(m, ClassMeta::Cycle(ct) if ct == &vec![3, 1]))
            .unwrap();
        let ind = induce_from_cyclic(&gamma, &[(id, 0), (c31, 4), (c31, 8)]).unwrap();
        let rho = IrrLabel::Partition(vec![3, 1]);
        for i in 0..12u32 {
            assert_eq!(ind.mult(&IrrLabel::pair(rho.clone(), i)), 1, "i={i}");
        }
        assert_eq!(ind.dim().unwrap(), (24 * 12) / 3);
    }

    #[test]
    fn induce_gamma0_examples() {
        // S4, e=2: inducing the trivial gives 1 (x) g0 + eps (x) g6
        let g0 = GroupSpec::gamma0(GroupSpec::Symmetric(4), 12, 2);
        let triv = RepElement::irreducible(
            g0.clone(),
            IrrLabel::pair(IrrLabel::Partition(vec![4]), 0),
        );
        let ind = induce_gamma0(&triv).unwrap();
        assert_eq!(ind.mult(&IrrLabel::pair(IrrLabel::Partition(vec![4]), 0)), 1);
        assert_eq!(
            ind.mult(&IrrLabel::pair(IrrLabel::Partition(vec![1, 1, 1, 1]), 6)),
            1
        );
        assert_eq!(ind.num_terms(), 2);

        // S3: inducing 1 (x) g1 gives 1 (x) g1 + eps (x) g4
        let g0 = GroupSpec::gamma0(GroupSpec::Symmetric(3), 6, 2);
        let x = RepElement::irreducible(g0, IrrLabel::pair(IrrLabel::Partition(vec![3]), 1));
        let ind = induce_gamma0(&x).unwrap();
        assert_eq!(ind.mult(&IrrLabel::pair(IrrLabel::Partition(vec![3]), 1)), 1);
        assert_eq!(
            ind.mult(&IrrLabel::pair(IrrLabel::Partition(vec![1, 1, 1]), 4)),
            1
        );
        assert_eq!(ind.num_terms(), 2);
    }

    #[test]
    fn theta_restriction_examples() {
        // theta(rho (x) gamma_k) = (dim rho) gamma_k over mu_3 for S3 at d=3
        let gamma = GroupSpec::product(GroupSpec::Symmetric(3), 6);
        let x = RepElement::irreducible(
            gamma,
            IrrLabel::pair(IrrLabel::Partition(vec![2, 1]), 1),
        );
        let r = x.theta_restrict(3).unwrap();
        assert_eq!(r.mult(&IrrLabel::Gamma(1)), 2);
        assert_eq!(r.dim().unwrap(), 2);
    }

    #[test]
    fn graded_specialize_and_weight() {
        // gamma_2 u + gamma_1 v + 2 gamma_0 uv -> weight (g1+g2) t + 2 g0 t^2
        let spec = GroupSpec::Cyclic(3);
        let mut g = GradedRep::zero(spec.clone());
        g.add_term((1, 0, 0), &RepElement::irreducible(spec.clone(), IrrLabel::Gamma(2)))
            .unwrap();
        g.add_term((0, 1, 0), &RepElement::irreducible(spec.clone(), IrrLabel::Gamma(1)))
            .unwrap();
        g.add_term(
            (1, 1, 0),
            &RepElement::irreducible(spec.clone(), IrrLabel::Gamma(0)).scale(2),
        )
        .unwrap();
        let w = g.to_weight();
        let w1 = w.coeff((0, 0, 1));
        assert_eq!(w1.mult(&IrrLabel::Gamma(1)), 1);
        assert_eq!(w1.mult(&IrrLabel::Gamma(2)), 1);
        assert_eq!(w.coeff((0, 0, 2)).mult(&IrrLabel::Gamma(0)), 2);
        // u = v = 1 collapses the markers
        let s = g.specialize(Specialize::One, Specialize::One, Specialize::Keep);
        assert_eq!(s.coeff((0, 0, 0)).dim().unwrap(), 4);
    }
}
