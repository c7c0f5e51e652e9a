//! Symmetric-group-specific computations for the braid arrangements:
//! equivariant Euler characteristics, the monodromy decomposition of the
//! quotient cohomology, dense-edge combinatorics, degree/monodromy
//! constraint checking, rank-three cohomology assembly, and the fully
//! decomposed recorded cohomologies for S_3, S_4, S_5.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::catalog::symmetric_cyclic_data;
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::repring::rep::trivial_label;
use crate::repring::{parse_label, GradedRep, GroupSpec, IrrLabel, RepElement};

fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k as u64 {
        num *= n as u64 - i;
        den *= i + 1;
    }
    num / den
}

/// One orbit of dense edges of a braid arrangement: the partitions with a
/// single non-unit part k collapse k coordinates, giving codimension k - 1
/// and multiplicity C(k, 2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseEdgeRecord {
    pub codim: u32,
    pub multiplicity: u32,
    pub count: u64,
    /// head of the partition shape (k, 1, ..., 1); 0 for non-braid edges
    pub shape_head: u32,
    pub is_center: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseEdgeSummary {
    pub rank: u32,
    pub records: Vec<DenseEdgeRecord>,
}

impl DenseEdgeSummary {
    /// Records with positive dimension, the ones relevant to purity.
    pub fn positive_dim(&self) -> impl Iterator<Item = &DenseEdgeRecord> {
        self.records.iter().filter(|r| r.codim < self.rank)
    }
}

/// Dense edges of the essential braid arrangement of rank l (the symmetric
/// group on l+1 letters), one record per shape (k, 1^{l+1-k}).
pub fn dense_edges_braid(l: u32) -> DenseEdgeSummary {
    let n = l + 1;
    let records = (2..=n)
        .map(|k| DenseEdgeRecord {
            codim: k - 1,
            multiplicity: (k * (k - 1) / 2).max(1),
            count: binomial(n, k),
            shape_head: k,
            is_center: k == n,
        })
        .collect();
    DenseEdgeSummary { rank: l, records }
}

/// Dense edges of an irreducible rank-two arrangement of d lines: the lines
/// themselves and the center.
pub fn dense_edges_rank2(d: u32) -> DenseEdgeSummary {
    DenseEdgeSummary {
        rank: 2,
        records: vec![
            DenseEdgeRecord {
                codim: 1,
                multiplicity: 1,
                count: d as u64,
                shape_head: 0,
                is_center: false,
            },
            DenseEdgeRecord {
                codim: 2,
                multiplicity: d,
                count: 1,
                shape_head: 0,
                is_center: true,
            },
        ],
    }
}

/// The three-term equivariant Euler characteristic of the Milnor fibre for
/// the symmetric group on l+1 letters: inductions from the cyclic groups of
/// orders l and l+1 minus the one of order l/2 (l even) or (l+1)/2 (l odd).
pub fn euler_sym(l: u32) -> Result<RepElement> {
    let n = l + 1;
    if !(2..=7).contains(&l) || n > 8 {
        return Err(Error::Unsupported(format!(
            "euler_sym covers l in 2..=7, got {l}"
        )));
    }
    let m = l * n;
    let gamma = GroupSpec::product(GroupSpec::Symmetric(n), m);
    let half = if l % 2 == 0 { l / 2 } else { n / 2 };
    let mut acc = RepElement::zero(gamma.clone());
    for (d, sign) in [(l, 1i64), (n, 1), (half, -1)] {
        let data = symmetric_cyclic_data(n, m, d);
        let ind = crate::repring::rep::induce_from_cyclic(&gamma, &data.powers)?;
        acc = acc.add(&ind.scale(sign))?;
    }
    Ok(acc)
}

/// The monodromy-equivariant Euler characteristic of F/G for the symmetric
/// group on l+1 letters, in the cancellation-free two-sum form.
pub fn quotient_euler_sym(l: u32) -> Result<RepElement> {
    let n = l + 1;
    let m = l * n;
    let spec = GroupSpec::Cyclic(m);
    let mut acc = RepElement::zero(spec);
    if l % 2 == 0 {
        for j in 0..l {
            acc.add_term(IrrLabel::Gamma((n * j) % m), 1);
        }
        for j in 0..=l {
            acc.add_term(IrrLabel::Gamma((l / 2 * (2 * j + 1)) % m), -1);
        }
    } else {
        for j in 0..=l {
            acc.add_term(IrrLabel::Gamma((l * j) % m), 1);
        }
        for j in 0..l {
            acc.add_term(IrrLabel::Gamma((n / 2 * (2 * j + 1)) % m), -1);
        }
    }
    Ok(acc)
}

/// The full graded monodromy decomposition of H^*(F/G) for the symmetric
/// group on l+1 letters: for each h >= 2 dividing l or l+1, the characters
/// of order 2h (h odd), h/2 (h = 2 mod 4) or h (h = 0 mod 4) sit in degree
/// k(h) = floor((l+1)/h) (h-2), and nothing else occurs.
pub fn dps_graded(l: u32) -> Result<GradedRep> {
    let n = l + 1;
    if l < 1 || l > 7 {
        return Err(Error::Unsupported(format!("dps_graded covers l in 1..=7, got {l}")));
    }
    let m = l * n;
    let spec = GroupSpec::Cyclic(m);
    let mut out = GradedRep::zero(spec.clone());
    for h in 2..=n {
        if l % h != 0 && n % h != 0 {
            continue;
        }
        let degree = (n / h) * (h - 2);
        let target_order = match h % 4 {
            1 | 3 => 2 * h,
            2 => h / 2,
            _ => h,
        };
        let mut coeff = RepElement::zero(spec.clone());
        for s in 0..m {
            // gcd(m, 0) = m, so gamma_0 correctly has order 1
            if m / num::integer::gcd(m, s) == target_order {
                coeff.add_term(IrrLabel::Gamma(s), 1);
            }
        }
        out.add_term((0, 0, degree), &coeff)?;
    }
    Ok(out)
}

/// Check the degree/monodromy-order constraint: a character of order o > 1
/// in degree s needs a dense edge of codimension at most s + 1 whose
/// multiplicity o divides.
pub fn monodromy_degree_check(g: &GradedRep, edges: &DenseEdgeSummary) -> Result<CheckReport> {
    let GroupSpec::Cyclic(d) = g.group else {
        return Err(Error::Unsupported(format!(
            "monodromy_degree_check needs monodromy-level data, got {}",
            g.group
        )));
    };
    let mut report = CheckReport::new("monodromy-degree", "check:monodromy-degree");
    for (degree, coeff) in g.t_graded() {
        for (label, mult) in coeff.terms() {
            let IrrLabel::Gamma(s) = label else {
                return Err(Error::Unsupported(format!("bad label {label}")));
            };
            if mult == 0 || *s == 0 {
                continue;
            }
            let order = d / num::integer::gcd(d, *s);
            if order <= 1 {
                continue;
            }
            let ok = edges
                .records
                .iter()
                .any(|r| r.codim <= degree + 1 && r.multiplicity % order == 0);
            if !ok {
                report.violation(format!(
                    "gamma_{s} of order {order} in degree {degree}: no dense edge of codim <= {} with multiplicity divisible by {order}",
                    degree + 1
                ));
            }
        }
    }
    Ok(report)
}

/// Check that every faithful monodromy character is confined to the top
/// degree r - 1 with multiplicity |chi(U)|.
pub fn faithful_check(g: &GradedRep, rank: u32, chi_u: i64) -> Result<CheckReport> {
    let GroupSpec::Cyclic(d) = g.group else {
        return Err(Error::Unsupported(format!(
            "faithful_check needs monodromy-level data, got {}",
            g.group
        )));
    };
    let mut report = CheckReport::new("faithful-confinement", "check:faithful-top-degree");
    let graded = g.t_graded();
    for s in 1..d {
        if num::integer::gcd(d, s) != 1 {
            continue;
        }
        for (&degree, coeff) in &graded {
            let mult = coeff.mult(&IrrLabel::Gamma(s));
            if degree == rank - 1 {
                if mult != chi_u.abs() {
                    report.violation(format!(
                        "faithful gamma_{s} has multiplicity {mult} in degree {degree}, expected {}",
                        chi_u.abs()
                    ));
                }
            } else if mult != 0 {
                report.violation(format!(
                    "faithful gamma_{s} occurs in degree {degree} (only degree {} is allowed)",
                    rank - 1
                ));
            }
        }
        // absent degrees count as multiplicity zero in the top degree
        if !graded.contains_key(&(rank - 1)) {
            report.violation(format!(
                "faithful gamma_{s}: top degree {} missing entirely",
                rank - 1
            ));
        }
    }
    Ok(report)
}

/// Close out the cohomology of a rank-three fibre from its Euler
/// characteristic: H^1 is the join of the negated negative part of chi with
/// Phi (H^1(U) (x) gamma_0), pinned by the known dimension; H^2 follows as
/// chi - H^0 + H^1 and must be effective.
pub fn assemble_rank3(
    chi: &RepElement,
    h0: &RepElement,
    p_gu: &GradedRep,
    dim_h1: i64,
) -> Result<(RepElement, RepElement)> {
    if !matches!(&chi.group, GroupSpec::Product(_, _)) {
        return Err(Error::Unsupported(format!(
            "assemble_rank3 needs an element over G x mu_m, got {}",
            chi.group
        )));
    }
    // lift H^1(U) to Gamma with trivial monodromy
    let h1u = p_gu.coeff((0, 0, 1));
    let mut h1u_lift = RepElement::zero(chi.group.clone());
    for (l, m) in h1u.terms() {
        h1u_lift.add_term(IrrLabel::pair(l.clone(), 0), m);
    }
    let floor = h0.tensor(&h1u_lift)?;
    let h1 = chi.negative_part().join(&floor)?;
    let got = h1.dim()?;
    if got != dim_h1 {
        return Err(Error::DimensionMismatch {
            expected: dim_h1,
            got,
        });
    }
    let h2 = chi.sub(h0)?.add(&h1)?;
    if !h2.is_effective() {
        return Err(Error::NotEffective(format!("H^2 = {h2}")));
    }
    Ok((h1, h2))
}

/// A recorded cohomology decomposition, loaded from the data file with its
/// per-coefficient source anchors.
#[derive(Clone, Debug)]
pub struct GoldenCohomology {
    pub name: String,
    pub group: GroupSpec,
    /// t-graded equivariant Poincare data for the full fibre F
    pub poincare: GradedRep,
    pub sources: Vec<String>,
}

#[derive(Deserialize)]
struct GoldenSymFile {
    version: u32,
    #[serde(rename = "cohomology")]
    groups: Vec<GoldenSymRecord>,
}

#[derive(Deserialize)]
struct GoldenSymRecord {
    group: String,
    n: u32,
    m: u32,
    #[serde(rename = "term")]
    terms: Vec<GoldenSymTerm>,
}

#[derive(Deserialize)]
struct GoldenSymTerm {
    t: u32,
    rho: String,
    gammas: Vec<u32>,
    #[serde(default = "one")]
    mult: i64,
    src: String,
}

fn one() -> i64 {
    1
}

fn parse_sym_rho(n: u32, s: &str) -> Result<IrrLabel> {
    match s {
        "1" => Ok(IrrLabel::Partition(vec![n])),
        "eps" => Ok(IrrLabel::Partition(vec![1; n as usize])),
        _ => {
            let label = parse_label(s)?;
            let IrrLabel::Partition(p) = &label else {
                return Err(Error::ParseError(format!(
                    "expected a partition label for S_{n}, got {s}"
                )));
            };
            if p.iter().sum::<u32>() != n {
                return Err(Error::ParseError(format!("{s} is not a partition of {n}")));
            }
            Ok(label)
        }
    }
}

/// The recorded full decompositions of H^*(F) for the symmetric groups on
/// 3, 4 and 5 letters (l = 2, 3, 4).
pub fn golden_cohomology_sym(l: u32) -> Result<GoldenCohomology> {
    let text = crate::data::data_text("golden_sym.toml")?;
    let file: GoldenSymFile =
        toml::from_str(&text).map_err(|e| Error::DataError(format!("golden_sym: {e}")))?;
    if file.version != 1 {
        return Err(Error::DataError(format!(
            "unsupported golden_sym version {}",
            file.version
        )));
    }
    let n = l + 1;
    let want = format!("sym{n}");
    let rec = file
        .groups
        .into_iter()
        .find(|g| g.group == want)
        .ok_or_else(|| Error::MissingCatalogEntry(format!("golden cohomology for {want}")))?;
    if rec.n != n {
        return Err(Error::DataError(format!("{want}: inconsistent n")));
    }
    let gamma = GroupSpec::product(GroupSpec::Symmetric(n), rec.m);
    let mut graded = GradedRep::zero(gamma.clone());
    let mut sources = Vec::new();
    for term in &rec.terms {
        let rho = parse_sym_rho(n, &term.rho)?;
        let mut coeff = RepElement::zero(gamma.clone());
        for &g in &term.gammas {
            coeff.add_term(IrrLabel::pair(rho.clone(), g % rec.m), term.mult);
        }
        graded.add_term((0, 0, term.t), &coeff)?;
        if !sources.contains(&term.src) {
            sources.push(term.src.clone());
        }
    }
    // sanity assertions on load: effectivity and the H^0 shape
    if !graded.is_effective() {
        return Err(Error::DataError(format!("{want}: negative multiplicities")));
    }
    let h0 = graded.coeff((0, 0, 0));
    if h0.dim()? != 2 {
        return Err(Error::DataError(format!("{want}: H^0 must have dimension 2")));
    }
    Ok(GoldenCohomology {
        name: want,
        group: gamma,
        poincare: graded,
        sources,
    })
}

/// The trivial-isotypic graded part of a golden datum, for comparison with
/// the quotient-cohomology decomposition.
pub fn golden_trivial_part(g: &GoldenCohomology) -> Result<GradedRep> {
    g.poincare.trivial_isotypic_graded()
}

/// The factorisation P = Phi * P_0 through the stabiliser of the reduced
/// fibre: restrict to Gamma_0, divide multiplicities by e, lift back, and
/// verify the product reproduces the input exactly. Returns the canonical
/// lift of P_0 (labels with monodromy index below m/e).
pub fn factor_out_phi(p: &GradedRep, e: u32) -> Result<GradedRep> {
    let GroupSpec::Product(base, m) = &p.group else {
        return Err(Error::Unsupported(format!(
            "factor_out_phi needs data over G x mu_m, got {}",
            p.group
        )));
    };
    let phi = crate::catalog::factor_phi(base, *m, e)?;
    let mut p0 = GradedRep::zero(p.group.clone());
    for (exps, coeff) in p.terms() {
        let restricted = crate::repring::rep::restrict_to_gamma0(coeff, e)?;
        let mut lifted = RepElement::zero(p.group.clone());
        for (label, mult) in restricted.terms() {
            if mult % e as i64 != 0 {
                return Err(Error::NonIntegral(
                    format!("{label} in degree {:?}", exps),
                    format!("multiplicity {mult} not divisible by e = {e}"),
                ));
            }
            let Some((rho, i)) = label.split_pair() else {
                return Err(Error::Unsupported(format!("bad label {label}")));
            };
            lifted.add_term(IrrLabel::pair(rho.clone(), i), mult / e as i64);
        }
        p0.add_term(*exps, &lifted)?;
    }
    // verification: Phi * P_0 = P
    let back = p0.mul_rep(&phi)?;
    if back != *p {
        return Err(Error::DataError(
            "factorisation through Phi does not reproduce the input".into(),
        ));
    }
    Ok(p0)
}

/// The dimension table (per degree) of a graded element.
pub fn dims_by_degree(g: &GradedRep) -> Result<BTreeMap<u32, i64>> {
    g.t_graded()
        .into_iter()
        .map(|(t, c)| Ok((t, c.dim()?)))
        .collect()
}

/// dim H^1(F_0) for the braid arrangement of S_4, an imported constant from
/// published cohomology tables for Milnor fibres of braid arrangements.
pub const DIM_H1_F0_SYM4: i64 = 7;
pub const DIM_H1_F0_SYM4_SOURCE: &str = "import:settepanella-tables:dim-h1-sym4";

/// Inputs assembled from the catalog for the rank-three closure of S_4.
pub fn assemble_sym4() -> Result<(RepElement, RepElement)> {
    let chi = euler_sym(3)?;
    let h0 = crate::rank2::h0_general(2, 6, &GroupSpec::Symmetric(4))?;
    // H^*(U) as a G-module for S_4: 1 + (rho + sigma) t + (rho + eps rho) t^2
    let g = GroupSpec::Symmetric(4);
    let mut pgu = GradedRep::zero(g.clone());
    pgu.add_term((0, 0, 0), &RepElement::irreducible(g.clone(), trivial_label(&g)?))?;
    pgu.add_term(
        (0, 0, 1),
        &RepElement::from_terms(
            g.clone(),
            [
                (IrrLabel::Partition(vec![3, 1]), 1),
                (IrrLabel::Partition(vec![2, 2]), 1),
            ],
        ),
    )?;
    pgu.add_term(
        (0, 0, 2),
        &RepElement::from_terms(
            g.clone(),
            [
                (IrrLabel::Partition(vec![3, 1]), 1),
                (IrrLabel::Partition(vec![2, 1, 1]), 1),
            ],
        ),
    )?;
    assemble_rank3(&chi, &h0, &pgu, 2 * DIM_H1_F0_SYM4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repring::symmetric::factorial;

    #[test]
    fn dense_edges_examples() {
        // l = 4: codim 2, mult 3, count 10; codim 3, mult 6, count 5;
        // center codim 4, mult 10
        let e = dense_edges_braid(4);
        let r2 = e.records.iter().find(|r| r.codim == 2).unwrap();
        assert_eq!((r2.multiplicity, r2.count), (3, 10));
        let r3 = e.records.iter().find(|r| r.codim == 3 && !r.is_center).unwrap();
        assert_eq!((r3.multiplicity, r3.count), (6, 5));
        let c = e.records.iter().find(|r| r.is_center).unwrap();
        assert_eq!((c.codim, c.multiplicity), (4, 10));
        // shape (3,2) is not dense: every record is a hook (k, 1, ...)
        assert!(e.records.iter().all(|r| r.shape_head >= 2));
        // l = 2: three lines plus the center of multiplicity 3
        let e = dense_edges_braid(2);
        assert_eq!(e.records.len(), 2);
        assert_eq!((e.records[0].codim, e.records[0].multiplicity, e.records[0].count), (1, 1, 3));
        assert_eq!((e.records[1].codim, e.records[1].multiplicity), (2, 3));
    }

    #[test]
    fn euler_sym_dimension() {
        // chi(F) = (-1)^{l+1} (l+1)!
        for l in 2..=5u32 {
            let chi = euler_sym(l).unwrap();
            let expected = if l % 2 == 0 {
                -(factorial(l + 1) as i64)
            } else {
                factorial(l + 1) as i64
            };
            assert_eq!(chi.dim().unwrap(), expected, "l = {l}");
        }
    }

    #[test]
    fn quotient_euler_values() {
        // l = 3: g0 + g3 + g9 - g2 - g10
        let q = quotient_euler_sym(3).unwrap();
        let m = |i| q.mult(&IrrLabel::Gamma(i));
        assert_eq!(m(0), 1);
        assert_eq!(m(3), 1);
        assert_eq!(m(9), 1);
        assert_eq!(m(2), -1);
        assert_eq!(m(10), -1);
        assert_eq!(q.num_terms(), 5);
        // l = 2: g0 - g1 - g5
        let q = quotient_euler_sym(2).unwrap();
        let m = |i| q.mult(&IrrLabel::Gamma(i));
        assert_eq!(m(0), 1);
        assert_eq!(m(1), -1);
        assert_eq!(m(5), -1);
        assert_eq!(q.num_terms(), 3);
    }

    #[test]
    fn quotient_euler_matches_trivial_part_of_euler() {
        for l in 2..=5u32 {
            let full = euler_sym(l).unwrap().trivial_isotypic().unwrap();
            let quot = quotient_euler_sym(l).unwrap();
            assert_eq!(full, quot, "l = {l}");
        }
    }

    #[test]
    fn dps_values() {
        // l = 3: H^0 = g0, H^1 = g2 + g10, H^2 = g3 + g9 over mu_12
        let d = dps_graded(3).unwrap();
        let h0 = d.coeff((0, 0, 0));
        assert_eq!(h0.mult(&IrrLabel::Gamma(0)), 1);
        assert_eq!(h0.num_terms(), 1);
        let h1 = d.coeff((0, 0, 1));
        assert_eq!(h1.mult(&IrrLabel::Gamma(2)), 1);
        assert_eq!(h1.mult(&IrrLabel::Gamma(10)), 1);
        assert_eq!(h1.num_terms(), 2);
        let h2 = d.coeff((0, 0, 2));
        assert_eq!(h2.mult(&IrrLabel::Gamma(3)), 1);
        assert_eq!(h2.mult(&IrrLabel::Gamma(9)), 1);
        assert_eq!(h2.num_terms(), 2);

        // l = 4, h = 5: degree 3 collects the order-10 characters of mu_20
        let d = dps_graded(4).unwrap();
        let h3 = d.coeff((0, 0, 3));
        for s in [2u32, 6, 14, 18] {
            assert_eq!(h3.mult(&IrrLabel::Gamma(s)), 1, "s = {s}");
        }
        assert_eq!(h3.num_terms(), 4);
        // l = 4, h = 4: degree 2 collects g5 + g15
        let h2 = d.coeff((0, 0, 2));
        assert_eq!(h2.mult(&IrrLabel::Gamma(5)), 1);
        assert_eq!(h2.mult(&IrrLabel::Gamma(15)), 1);
        assert_eq!(h2.num_terms(), 2);
    }

    #[test]
    fn fabricated_monodromy_violation_is_caught() {
        // an order-7 character in H^1 for l = 4 has no dense edge to carry it
        let spec = GroupSpec::Cyclic(14);
        let mut g = GradedRep::zero(spec.clone());
        g.add_term((0, 0, 1), &RepElement::irreducible(spec, IrrLabel::Gamma(2)))
            .unwrap();
        let report = monodromy_degree_check(&g, &dense_edges_braid(4)).unwrap();
        assert!(!report.passed());
    }

    #[test]
    fn faithful_check_is_well_defined_for_d2() {
        // d = 2: the only nontrivial character is faithful
        let spec = GroupSpec::Cyclic(2);
        let mut g = GradedRep::zero(spec.clone());
        g.add_term((0, 0, 1), &RepElement::irreducible(spec.clone(), IrrLabel::Gamma(1)))
            .unwrap();
        let ok = faithful_check(&g, 2, -1).unwrap();
        assert!(ok.passed());
        let bad = faithful_check(&g, 3, -1).unwrap();
        assert!(!bad.passed());
    }

    #[test]
    fn assemble_sym4_dimension_gate() {
        let (h1, h2) = assemble_sym4().unwrap();
        assert_eq!(h1.dim().unwrap(), 14);
        assert!(h2.is_effective());
        // wrong dimension input is rejected
        let chi = euler_sym(3).unwrap();
        let h0 = crate::rank2::h0_general(2, 6, &GroupSpec::Symmetric(4)).unwrap();
        let g = GroupSpec::Symmetric(4);
        let mut pgu = GradedRep::zero(g.clone());
        pgu.add_term((0, 0, 0), &RepElement::irreducible(g.clone(), trivial_label(&g).unwrap()))
            .unwrap();
        pgu.add_term(
            (0, 0, 1),
            &RepElement::from_terms(
                g.clone(),
                [
                    (IrrLabel::Partition(vec![3, 1]), 1),
                    (IrrLabel::Partition(vec![2, 2]), 1),
                ],
            ),
        )
        .unwrap();
        let err = assemble_rank3(&chi, &h0, &pgu, 13).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn degenerate_assembly() {
        // chi with no negative part and trivial H^*(U) gives
        // H^1 = Phi (H^1(U) (x) g0) alone
        let gamma = GroupSpec::product(GroupSpec::Symmetric(3), 6);
        let h0 = crate::rank2::h0_general(2, 3, &GroupSpec::Symmetric(3)).unwrap();
        let chi = h0.clone();
        let g = GroupSpec::Symmetric(3);
        let mut pgu = GradedRep::zero(g.clone());
        pgu.add_term((0, 0, 0), &RepElement::irreducible(g.clone(), trivial_label(&g).unwrap()))
            .unwrap();
        pgu.add_term(
            (0, 0, 1),
            &RepElement::irreducible(g.clone(), IrrLabel::Partition(vec![2, 1])),
        )
        .unwrap();
        let (h1, h2) = assemble_rank3(&chi, &h0, &pgu, 4).unwrap();
        assert_eq!(h1.dim().unwrap(), 4);
        assert_eq!(h2, h1);
        let _ = gamma;
    }
}
