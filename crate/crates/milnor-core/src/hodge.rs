//! Spectra of arrangement Milnor fibres and their exact interplay with
//! monodromy-equivariant Hodge-Deligne data: conversion in both directions,
//! the zeta-function consistency check, purity symmetry, and the recorded
//! Hodge data for the braid arrangements of rank two to four.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::braid::DenseEdgeSummary;
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::repring::rep::canonical_gamma0_label;
use crate::repring::{group_data, parse_label, ClassMeta, GradedRep, GroupSpec, IrrLabel, RepElement};

/// A sparse fractional-exponent series: alpha = numerator / den maps to an
/// integer multiplicity. Entries with zero multiplicity are absent.
#[derive(Clone, Debug)]
pub struct Spectrum {
    den: u32,
    entries: BTreeMap<i64, i64>,
}

impl Spectrum {
    pub fn new(den: u32) -> Self {
        assert!(den >= 1);
        Spectrum {
            den,
            entries: BTreeMap::new(),
        }
    }

    pub fn den(&self) -> u32 {
        self.den
    }

    pub fn add(&mut self, num: i64, mult: i64) {
        if mult == 0 {
            return;
        }
        let e = self.entries.entry(num).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.entries.remove(&num);
        }
    }

    /// Multiplicity at alpha = num / den.
    pub fn get(&self, num: i64) -> i64 {
        self.entries.get(&num).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.entries.iter().map(|(&n, &m)| (n, m))
    }

    pub fn num_terms(&self) -> usize {
        self.entries.len()
    }

    /// Signed sum of all multiplicities.
    pub fn total_mass(&self) -> i64 {
        self.entries.values().sum()
    }

    /// The same series over a denominator that is a multiple of this one.
    pub fn rescaled(&self, den: u32) -> Spectrum {
        assert!(den % self.den == 0);
        let f = (den / self.den) as i64;
        let mut out = Spectrum::new(den);
        for (n, m) in self.entries() {
            out.add(n * f, m);
        }
        out
    }
}

impl PartialEq for Spectrum {
    fn eq(&self, other: &Self) -> bool {
        let den = num::integer::lcm(self.den, other.den);
        self.rescaled(den).entries == other.rescaled(den).entries
    }
}

impl Eq for Spectrum {}

impl std::fmt::Display for Spectrum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (n, m) in self.entries() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m != 1 {
                write!(f, "{m}*")?;
            }
            let g = num::integer::gcd(n.unsigned_abs(), self.den as u64) as i64;
            if n % self.den as i64 == 0 {
                write!(f, "t^{}", n / self.den as i64)?;
            } else {
                write!(f, "t^({}/{})", n / g, self.den as i64 / g)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Read the spectrum off a monodromy-equivariant Poincare-Deligne
/// polynomial over mu_d in rank l. A piece of Hodge degree p in
/// cohomological degree j >= 1 with monodromy index s contributes
/// (-1)^{j-l+1} times its multiplicity at alpha = l - p - 1 + s/d
/// (s nonzero) or alpha = l - p (s = 0); the trivial class of H^0 is
/// dropped, the spectrum being a reduced-cohomology invariant.
pub fn spectrum_from_pd(pd: &GradedRep, l: u32) -> Result<Spectrum> {
    let GroupSpec::Cyclic(d) = pd.group else {
        return Err(Error::MalformedPd(format!(
            "spectrum needs monodromy-level data, got {}",
            pd.group
        )));
    };
    let mut sp = Spectrum::new(d);
    for (&(p, _q, j), coeff) in pd.terms() {
        for (label, mult) in coeff.terms() {
            let IrrLabel::Gamma(s) = label else {
                return Err(Error::MalformedPd(format!("bad label {label}")));
            };
            if j == 0 {
                if p != 0 || *s != 0 || mult != 1 {
                    return Err(Error::MalformedPd(
                        "degree-zero part must be the single trivial (0,0) class".into(),
                    ));
                }
                continue;
            }
            let sign = if (j as i64 - l as i64 + 1).rem_euclid(2) == 0 {
                1
            } else {
                -1
            };
            let num = if *s == 0 {
                (l as i64 - p as i64) * d as i64
            } else {
                (l as i64 - p as i64 - 1) * d as i64 + *s as i64
            };
            if num <= 0 {
                return Err(Error::MalformedPd(format!(
                    "piece (p={p}, j={j}, s={s}) lands at a non-positive exponent"
                )));
            }
            sp.add(num, sign * mult);
        }
    }
    Ok(sp)
}

/// Invert the placement rule: recover the coefficients c_{p,s} of the
/// theta-restricted Hodge-Deligne polynomial (v = 1) from a spectrum. The
/// result is graded by the u-exponent p with coefficients over mu_d.
pub fn theta_hd_from_spectrum(sp: &Spectrum, l: u32, d: u32) -> Result<GradedRep> {
    let sp = if sp.den() == d { sp.clone() } else { sp.rescaled(num::integer::lcm(sp.den(), d)) };
    let scale = (sp.den() / d) as i64;
    let spec = GroupSpec::Cyclic(d);
    let sign = if (l as i64 - 1).rem_euclid(2) == 0 { 1 } else { -1 };
    let mut out = GradedRep::zero(spec.clone());
    for p in 0..l {
        let mut coeff = RepElement::zero(spec.clone());
        for s in 0..d {
            let num = if s == 0 {
                (l as i64 - p as i64) * d as i64
            } else {
                (l as i64 - p as i64 - 1) * d as i64 + s as i64
            };
            let mut c = sign * sp.get(num * scale);
            if p == 0 && s == 0 {
                // the reduced spectrum dropped the trivial class of H^0
                c += 1;
            }
            coeff.add_term(IrrLabel::Gamma(s), c);
        }
        out.add_term((p, 0, 0), &coeff)?;
    }
    Ok(out)
}

/// The same coefficients computed directly from the Poincare-Deligne data:
/// the alternating contraction sum over cohomological degrees of each
/// Hodge-degree piece (v set to 1), including the degree-zero class.
pub fn theta_hd_contraction(pd: &GradedRep) -> Result<GradedRep> {
    let GroupSpec::Cyclic(_) = pd.group else {
        return Err(Error::MalformedPd(format!(
            "contraction needs monodromy-level data, got {}",
            pd.group
        )));
    };
    let mut out = GradedRep::zero(pd.group.clone());
    for (&(p, _q, j), coeff) in pd.terms() {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        out.add_term((p, 0, 0), &coeff.scale(sign))?;
    }
    Ok(out)
}

/// The zeta-function constraint: for monodromy-level t-graded cohomology of
/// a reduced fibre, the alternating sum of the multiplicities of every
/// character equals chi(U).
pub fn zeta_check(g: &GradedRep, chi_u: i64) -> Result<CheckReport> {
    let GroupSpec::Cyclic(d) = g.group else {
        return Err(Error::Unsupported(format!(
            "zeta_check needs monodromy-level data, got {}",
            g.group
        )));
    };
    let mut report = CheckReport::new("zeta-function", "check:zeta-alternating-sum");
    let mut sums: BTreeMap<u32, i64> = (0..d).map(|s| (s, 0)).collect();
    for (degree, coeff) in g.t_graded() {
        let sign = if degree % 2 == 0 { 1 } else { -1 };
        for (label, mult) in coeff.terms() {
            let IrrLabel::Gamma(s) = label else {
                return Err(Error::Unsupported(format!("bad label {label}")));
            };
            *sums.get_mut(s).unwrap() += sign * mult;
        }
    }
    for (s, sum) in sums {
        if sum != chi_u {
            report.violation(format!(
                "gamma_{s}: alternating sum {sum}, expected chi(U) = {chi_u}"
            ));
        }
    }
    Ok(report)
}

/// Purity symmetry of the spectrum: whenever the eigenvalue attached to
/// alpha is nontrivial on every positive-dimensional dense edge, the
/// multiplicities at alpha and l - alpha agree. An explicit order filter
/// replaces the edge-derived condition when given.
pub fn purity_symmetry_check(
    sp: &Spectrum,
    l: u32,
    edges: &DenseEdgeSummary,
    order_filter: Option<&[u32]>,
) -> CheckReport {
    let mut report = CheckReport::new("purity-symmetry", "check:spectrum-symmetry");
    let den = sp.den();
    for (num, mult) in sp.entries() {
        // order of beta = exp(-2 pi i alpha)
        let q = (den as i64 / num::integer::gcd(num.rem_euclid(den as i64).max(0), den as i64)
            .max(1)) as u32;
        let q = if num.rem_euclid(den as i64) == 0 { 1 } else { q };
        if q <= 1 {
            continue;
        }
        let qualifies = match order_filter {
            Some(orders) => orders.contains(&q),
            None => edges.positive_dim().all(|r| r.multiplicity % q != 0),
        };
        if !qualifies {
            continue;
        }
        let mirror = (l as i64) * (den as i64) - num;
        let other = sp.get(mirror);
        if other != mult {
            report.violation(format!(
                "m({num}/{den}) = {mult} but m({mirror}/{den}) = {other}"
            ));
        }
    }
    report
}

// ---------------------------------------------------------------------------
// recorded Hodge data

#[derive(Deserialize)]
struct HodgeFile {
    version: u32,
    #[serde(default)]
    hd: Vec<HdRecord>,
    #[serde(default)]
    pd_gamma0: Vec<PdRecord>,
    #[serde(default)]
    spectrum: Vec<SpectrumRecord>,
    #[serde(default)]
    rep_mu: Vec<RepMuRecord>,
}

#[derive(Deserialize)]
struct HdRecord {
    name: String,
    order: u32,
    #[allow(unused)]
    src: String,
    terms: Vec<HdTerm>,
}

#[derive(Deserialize)]
struct HdTerm {
    u: u32,
    v: u32,
    t: u32,
    gamma: u32,
    mult: i64,
}

#[derive(Deserialize)]
struct PdRecord {
    name: String,
    n: u32,
    m: u32,
    e: u32,
    #[allow(unused)]
    src: String,
    terms: Vec<PdTerm>,
}

#[derive(Deserialize)]
struct PdTerm {
    u: u32,
    v: u32,
    t: u32,
    rho: String,
    gamma: u32,
    mult: i64,
}

#[derive(Deserialize)]
struct SpectrumRecord {
    name: String,
    den: u32,
    #[allow(unused)]
    src: String,
    terms: Vec<[i64; 2]>,
}

#[derive(Deserialize)]
struct RepMuRecord {
    name: String,
    order: u32,
    #[allow(unused)]
    src: String,
    terms: Vec<[i64; 2]>,
}

fn hodge_file() -> Result<HodgeFile> {
    let text = crate::data::data_text("golden_hodge.toml")?;
    let file: HodgeFile =
        toml::from_str(&text).map_err(|e| Error::DataError(format!("golden_hodge: {e}")))?;
    if file.version != 1 {
        return Err(Error::DataError(format!(
            "unsupported golden_hodge version {}",
            file.version
        )));
    }
    Ok(file)
}

/// Structural constraints asserted on recorded Hodge data: pieces with a
/// nontrivial eigenvalue in degree j have weight p + q equal to j or j + 1,
/// and trivial-eigenvalue pieces are of type (p, p).
fn assert_hodge_shape(name: &str, hd: &GradedRep) -> Result<()> {
    for (&(p, q, j), coeff) in hd.terms() {
        for (label, _mult) in coeff.terms() {
            let IrrLabel::Gamma(s) = label else {
                return Err(Error::DataError(format!("{name}: bad label {label}")));
            };
            if *s == 0 {
                if p != q {
                    return Err(Error::DataError(format!(
                        "{name}: trivial-eigenvalue piece at ({p},{q}) is not of type (p,p)"
                    )));
                }
            } else if p + q != j && p + q != j + 1 {
                return Err(Error::DataError(format!(
                    "{name}: eigenvalue piece gamma_{s} at ({p},{q}) in degree {j} has weight {}",
                    p + q
                )));
            }
        }
    }
    Ok(())
}

/// The recorded monodromy-equivariant Hodge data (in Poincare-Deligne form,
/// graded by u, v, t) of the reduced fibre of the essential braid
/// arrangement of rank n, for n = 2, 3, 4.
pub fn golden_hd_braid(n: u32) -> Result<GradedRep> {
    let file = hodge_file()?;
    let want = format!("braid{n}");
    let rec = file
        .hd
        .into_iter()
        .find(|r| r.name == want)
        .ok_or_else(|| Error::Unsupported(format!("no recorded Hodge data for rank {n}")))?;
    let spec = GroupSpec::Cyclic(rec.order);
    let mut out = GradedRep::zero(spec.clone());
    for t in &rec.terms {
        let mut coeff = RepElement::zero(spec.clone());
        coeff.add_term(IrrLabel::Gamma(t.gamma % rec.order), t.mult);
        out.add_term((t.u, t.v, t.t), &coeff)?;
    }
    assert_hodge_shape(&want, &out)?;
    Ok(out)
}

/// The recorded Gamma_0-equivariant Poincare-Deligne polynomial for S_4,
/// with labels rewritten in canonical form (monodromy index below m/e).
pub fn golden_pd_s4() -> Result<GradedRep> {
    let file = hodge_file()?;
    let rec = file
        .pd_gamma0
        .into_iter()
        .find(|r| r.name == "pd-sym4")
        .ok_or_else(|| Error::DataError("pd-sym4 record missing".into()))?;
    let base = GroupSpec::Symmetric(rec.n);
    let spec = GroupSpec::gamma0(base.clone(), rec.m, rec.e);
    let mut out = GradedRep::zero(spec.clone());
    for t in &rec.terms {
        let rho = match t.rho.as_str() {
            "1" => IrrLabel::Partition(vec![rec.n]),
            "eps" => IrrLabel::Partition(vec![1; rec.n as usize]),
            other => parse_label(other)?,
        };
        let label = canonical_gamma0_label(&base, rec.m, rec.e, &rho, t.gamma)?;
        let mut coeff = RepElement::zero(spec.clone());
        coeff.add_term(label, t.mult);
        out.add_term((t.u, t.v, t.t), &coeff)?;
    }
    Ok(out)
}

/// The recorded spectrum of the rank-four braid arrangement.
pub fn golden_spectrum_a4() -> Result<Spectrum> {
    let file = hodge_file()?;
    let rec = file
        .spectrum
        .into_iter()
        .find(|r| r.name == "a4")
        .ok_or_else(|| Error::DataError("a4 spectrum record missing".into()))?;
    let mut sp = Spectrum::new(rec.den);
    for [num, mult] in rec.terms {
        sp.add(num, mult);
    }
    Ok(sp)
}

/// The imported smoothing datum over mu_12 that pins the (2,0)-branch of
/// the S_4 Poincare-Deligne polynomial.
pub fn smoothing_grf2_sym4() -> Result<RepElement> {
    let file = hodge_file()?;
    let rec = file
        .rep_mu
        .into_iter()
        .find(|r| r.name == "grf2-h2-smoothing-sym4")
        .ok_or_else(|| Error::DataError("smoothing record missing".into()))?;
    let spec = GroupSpec::Cyclic(rec.order);
    let mut out = RepElement::zero(spec);
    for [g, mult] in rec.terms {
        out.add_term(IrrLabel::Gamma(g as u32 % rec.order), mult);
    }
    Ok(out)
}

/// Restriction along the embedding of mu_12 into Gamma_0 sending the
/// generator to (tau, zeta_12) with tau a fixed transposition: splits each
/// G-part into its tau-eigenspaces.
pub fn theta_prime_sym4(x: &RepElement) -> Result<RepElement> {
    let expected = GroupSpec::gamma0(GroupSpec::Symmetric(4), 12, 2);
    if x.group != expected {
        return Err(Error::GroupMismatch(
            x.group.to_string(),
            expected.to_string(),
        ));
    }
    let base = group_data(&GroupSpec::Symmetric(4))?;
    let id = base.identity_class;
    let tau = base
        .class_meta
        .iter()
        .position(|m| matches!(m, ClassMeta::Cycle(ct) if ct == &vec![2, 1, 1]))
        .expect("transposition class");
    let powers: Vec<usize> = (0..12).map(|j| if j % 2 == 0 { id } else { tau }).collect();
    x.restrict_to_cyclic(&powers, 12)
}

/// The branch disambiguation for the S_4 Poincare-Deligne polynomial: the
/// accepted (2,0)-part restricts under theta' into the smoothing datum,
/// while the alternative branch does not.
pub fn disambiguation_check_s4() -> Result<CheckReport> {
    let mut report = CheckReport::new("s4-branch-disambiguation", "check:s4-theta-prime");
    let pd = golden_pd_s4()?;
    let spec = pd.group.clone();
    // coefficient of u^2 v^0 across all cohomological degrees
    let mut u2 = RepElement::zero(spec.clone());
    for (&(p, q, _t), coeff) in pd.terms() {
        if p == 2 && q == 0 {
            u2 = u2.add(coeff)?;
        }
    }
    let accepted = theta_prime_sym4(&u2)?;
    let mut expected = RepElement::zero(GroupSpec::Cyclic(12));
    for s in [5u32, 9, 11] {
        expected.add_term(IrrLabel::Gamma(s), 1);
    }
    if accepted != expected {
        report.violation(format!(
            "theta' of the accepted branch is {accepted}, expected {expected}"
        ));
    }
    let imported = smoothing_grf2_sym4()?;
    if !imported.sub(&accepted)?.is_effective() {
        report.violation(format!(
            "accepted branch {accepted} is not contained in the smoothing datum {imported}"
        ));
    }
    // the rejected alternative swaps the u^2/v^2 assignment
    let base = GroupSpec::Symmetric(4);
    let mut rejected_u2 = RepElement::zero(spec.clone());
    rejected_u2.add_term(
        canonical_gamma0_label(&base, 12, 2, &IrrLabel::Partition(vec![4]), 3)?,
        1,
    );
    rejected_u2.add_term(
        canonical_gamma0_label(&base, 12, 2, &IrrLabel::Partition(vec![2, 2]), 1)?,
        1,
    );
    let rejected = theta_prime_sym4(&rejected_u2)?;
    let mut expected_rejected = RepElement::zero(GroupSpec::Cyclic(12));
    for s in [1u32, 3, 7] {
        expected_rejected.add_term(IrrLabel::Gamma(s), 1);
    }
    if rejected != expected_rejected {
        report.violation(format!(
            "theta' of the rejected branch is {rejected}, expected {expected_rejected}"
        ));
    }
    if imported.sub(&rejected)?.is_effective() {
        report.violation(
            "rejected branch is contained in the smoothing datum; disambiguation has no force",
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rank2::spectrum_rank2;

    #[test]
    fn spectrum_equality_across_denominators() {
        let mut a = Spectrum::new(3);
        a.add(2, 1);
        a.add(3, 2);
        let mut b = Spectrum::new(6);
        b.add(4, 1);
        b.add(6, 2);
        assert_eq!(a, b);
        b.add(5, 1);
        assert_ne!(a, b);
    }

    #[test]
    fn single_piece_integer_rule() {
        // one piece (p=1, s=0, j=1) at rank 2 with multiplicity 2 gives 2t
        let spec = GroupSpec::Cyclic(5);
        let mut pd = GradedRep::zero(spec.clone());
        pd.add_term(
            (0, 0, 0),
            &RepElement::irreducible(spec.clone(), IrrLabel::Gamma(0)),
        )
        .unwrap();
        pd.add_term(
            (1, 1, 1),
            &RepElement::irreducible(spec, IrrLabel::Gamma(0)).scale(2),
        )
        .unwrap();
        let sp = spectrum_from_pd(&pd, 2).unwrap();
        assert_eq!(sp.get(5), 2);
        assert_eq!(sp.num_terms(), 1);
    }

    #[test]
    fn rank2_spectra_from_pd() {
        for d in 2..=12u32 {
            let pd = crate::rank2::pd_rank2_monodromy(d);
            let sp = spectrum_from_pd(&pd, 2).unwrap();
            assert_eq!(sp, spectrum_rank2(d), "d = {d}");
        }
    }

    #[test]
    fn golden_braid2_matches_rank2_formula() {
        let hd = golden_hd_braid(2).unwrap();
        let sp = spectrum_from_pd(&hd, 2).unwrap();
        assert_eq!(sp, spectrum_rank2(3));
    }

    #[test]
    fn roundtrip_matches_contraction() {
        for n in [2u32, 3, 4] {
            let hd = golden_hd_braid(n).unwrap();
            let sp = spectrum_from_pd(&hd, n).unwrap();
            let d = match n {
                2 => 3,
                3 => 6,
                _ => 10,
            };
            let via_spectrum = theta_hd_from_spectrum(&sp, n, d).unwrap();
            let direct = theta_hd_contraction(&hd).unwrap();
            assert_eq!(via_spectrum, direct, "n = {n}");
        }
    }

    #[test]
    fn purity_rank2() {
        for d in 3..=12u32 {
            let sp = spectrum_rank2(d);
            let edges = crate::braid::dense_edges_rank2(d);
            let report = purity_symmetry_check(&sp, 2, &edges, None);
            assert!(report.passed(), "d = {d}: {report}");
        }
    }

    #[test]
    fn perturbed_a4_spectrum_fails_purity() {
        let mut sp = golden_spectrum_a4().unwrap();
        sp.add(4, 1);
        let edges = crate::braid::dense_edges_braid(4);
        let report = purity_symmetry_check(&sp, 4, &edges, None);
        assert!(!report.passed());
    }

    #[test]
    fn zeta_on_rank2_pd() {
        for d in 2..=12u32 {
            let pd = crate::rank2::pd_rank2_monodromy(d);
            let report = zeta_check(&pd, 2 - d as i64).unwrap();
            assert!(report.passed(), "d = {d}: {report}");
        }
    }
}
