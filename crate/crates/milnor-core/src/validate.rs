//! The consistency-check registry: every recorded datum and every pair of
//! independent computation routes in the crate is cross-checked here. The
//! command-line `validate` subcommand and the acceptance suite both drive
//! this registry.

use crate::braid::{
    dense_edges_braid, dense_edges_rank2, dps_graded, euler_sym, factor_out_phi, faithful_check,
    golden_cohomology_sym, monodromy_degree_check, quotient_euler_sym, DIM_H1_F0_SYM4,
};
use crate::catalog::{chi_u, chi_u0_mod_g, chi_u0_values, equivariant_euler, monodromy_euler_quotient, Catalog};
use crate::error::{Error, Result};
use crate::hodge::{
    disambiguation_check_s4, golden_hd_braid, golden_pd_s4, golden_spectrum_a4, purity_symmetry_check,
    spectrum_from_pd, theta_hd_contraction, theta_hd_from_spectrum, zeta_check,
};
use crate::rank2::{h0_general, h1_f0_dihedral, h1_f0_monodromy, h1_f0_uniform, spectrum_rank2};
use crate::report::CheckReport;
use crate::repring::{group_data, GradedRep, GroupSpec, IrrLabel, RepElement, Specialize};

pub struct NamedCheck {
    pub id: &'static str,
    pub anchor: &'static str,
    pub scopes: &'static [&'static str],
    pub run: fn() -> Result<CheckReport>,
}

fn report_from<F: FnOnce(&mut CheckReport) -> Result<()>>(
    name: &str,
    anchor: &str,
    f: F,
) -> Result<CheckReport> {
    let mut report = CheckReport::new(name, anchor);
    f(&mut report)?;
    Ok(report)
}

/// chi(U) of the braid arrangement of rank l.
pub fn braid_chi_u(l: u32) -> i64 {
    chi_u(&(1..=l).collect::<Vec<_>>())
}

/// The theta-restricted reduced-fibre cohomology of a recorded symmetric
/// datum, i.e. H^*(F_0) over mu_d with d = m/2, obtained from the canonical
/// factor P_0.
pub fn golden_f0_monodromy(l: u32) -> Result<GradedRep> {
    let golden = golden_cohomology_sym(l)?;
    let p0 = factor_out_phi(&golden.poincare, 2)?;
    let m = l * (l + 1);
    p0.theta_graded(m / 2)
}

fn check_catalog_consistency() -> Result<CheckReport> {
    report_from("catalog-consistency", "check:catalog", |report| {
        let catalog = Catalog::builtin()?;
        for entry in catalog.entries.values() {
            // order = product of degrees
            let deg_prod: u64 = entry.degrees.iter().map(|&d| d as u64).product();
            if deg_prod != entry.order {
                report.violation(format!("{}: order != product of degrees", entry.id));
            }
            if entry.hyperplanes.is_empty() {
                continue;
            }
            let m = entry.m()?;
            let n_refl = entry.n_reflections()?;
            let n_hyp = entry.num_hyperplanes()?;
            // m = (number of reflections) + (number of hyperplanes)
            if m != n_refl + n_hyp {
                report.violation(format!("{}: m != n_G + N_G", entry.id));
            }
            if entry.coexponents.is_empty() {
                continue;
            }
            // sum of coexponents = number of hyperplanes
            let coexp_sum: u32 = entry.coexponents.iter().sum();
            if coexp_sum != n_hyp {
                report.violation(format!("{}: sum of coexponents != N_G", entry.id));
            }
            // exponents sum to the reflection count
            let exp_sum: u32 = entry.degrees.iter().map(|&d| d - 1).sum();
            if exp_sum != n_refl {
                report.violation(format!("{}: sum of exponents != n_G", entry.id));
            }
            // every poset element divides m
            for &d in &entry.poset()?.elements {
                if m % d != 0 {
                    report.violation(format!("{}: poset element {d} does not divide m = {m}", entry.id));
                }
            }
            // |G| divides m * |chi(U)| (integrality of chi(F)/|G|)
            let chi_f = (m as i64) * chi_u(&entry.coexponents);
            if chi_f % entry.order as i64 != 0 {
                report.violation(format!("{}: |G| does not divide chi(F)", entry.id));
            }
        }
        Ok(())
    })
}

fn check_chi_u0_moebius() -> Result<CheckReport> {
    report_from("chi-u0-moebius", "check:moebius-inversion", |report| {
        let catalog = Catalog::builtin()?;
        for entry in catalog.entries.values() {
            if entry.coexponents.is_empty() {
                continue;
            }
            // chi_u0_values cross-checks every recorded override internally
            let values = chi_u0_values(entry)?;
            if let Some(expected) = entry.expected_chi_u0 {
                let got = chi_u0_mod_g(entry)?;
                if got != expected {
                    report.violation(format!(
                        "{}: chi(U^0/G) = {got}, recorded {expected}",
                        entry.id
                    ));
                }
            }
            let _ = values;
        }
        Ok(())
    })
}

fn check_table_orthonormality() -> Result<CheckReport> {
    report_from("character-tables", "check:orthonormality", |report| {
        let mut specs: Vec<GroupSpec> = Vec::new();
        for n in 2..=8 {
            specs.push(GroupSpec::Symmetric(n));
        }
        for p in [3u32, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 18, 20, 24, 30] {
            specs.push(GroupSpec::Dihedral(p));
        }
        for p in [2u32, 3, 4, 5, 6] {
            specs.push(GroupSpec::Imprimitive2(p));
        }
        specs.push(GroupSpec::Cyclic(12));
        specs.push(GroupSpec::product(GroupSpec::Symmetric(4), 12));
        specs.push(GroupSpec::gamma0(GroupSpec::Symmetric(4), 12, 2));
        specs.push(GroupSpec::gamma0(GroupSpec::Dihedral(5), 10, 2));
        for spec in specs {
            let data = group_data(&spec)?;
            if data.irreps.len() != data.num_classes() {
                report.violation(format!("{spec}: table is not square"));
                continue;
            }
            let n = data.irreps.len();
            for i in 0..n {
                let fi = data.irr_class_function(&data.irreps[i])?;
                for j in i..n {
                    let fj = data.irr_class_function(&data.irreps[j])?;
                    let ip = crate::repring::inner_product(&fi, &fj)?;
                    let expected = if i == j { 1 } else { 0 };
                    if ip != cyclo::rint(expected) {
                        report.violation(format!(
                            "{spec}: ({}, {}) = {ip}",
                            data.irreps[i], data.irreps[j]
                        ));
                    }
                }
            }
        }
        Ok(())
    })
}

fn check_euler_assembly() -> Result<CheckReport> {
    report_from("euler-assembly", "check:equivariant-euler", |report| {
        let catalog = Catalog::builtin()?;
        for id in ["sym3", "sym4", "sym5", "dihedral3", "dihedral4", "dihedral5", "dihedral6", "g4-2-2", "g6-3-2"] {
            let entry = catalog.get(id)?;
            let chi = equivariant_euler(entry)?;
            let m = entry.m()? as i64;
            // evaluation at the identity is m * chi(U)
            let expected = m * chi_u(&entry.coexponents);
            if chi.dim()? != expected {
                report.violation(format!("{id}: chi(F) dimension mismatch"));
            }
            // the trivial isotypic part is the quotient Euler characteristic
            if chi.trivial_isotypic()? != monodromy_euler_quotient(entry)? {
                report.violation(format!("{id}: trivial part != quotient Euler data"));
            }
        }
        Ok(())
    })
}

fn check_euler_sym_matches_assembly() -> Result<CheckReport> {
    report_from("euler-sym-routes", "check:euler-two-routes", |report| {
        let catalog = Catalog::builtin()?;
        for l in 2..=5u32 {
            let entry = catalog.symmetric(l + 1)?;
            if euler_sym(l)? != equivariant_euler(entry)? {
                report.violation(format!("l = {l}: three-term formula != Moebius assembly"));
            }
            if quotient_euler_sym(l)? != monodromy_euler_quotient(entry)? {
                report.violation(format!("l = {l}: quotient formulas disagree"));
            }
        }
        Ok(())
    })
}

fn golden_scope_check(l: u32, report: &mut CheckReport) -> Result<()> {
    let n = l + 1;
    let m = l * n;
    let d = m / 2;
    let golden = golden_cohomology_sym(l)?;
    // alternating sum equals the equivariant Euler characteristic
    let alt = golden
        .poincare
        .specialize(Specialize::One, Specialize::One, Specialize::MinusOne)
        .as_rep()?;
    if alt != euler_sym(l)? {
        report.violation(format!("sym{n}: alternating sum != Euler characteristic"));
    }
    // the trivial-isotypic graded part must match the quotient decomposition
    let trivial = golden.poincare.trivial_isotypic_graded()?;
    if trivial != dps_graded(l)? {
        report.violation(format!("sym{n}: trivial graded part != quotient cohomology"));
    }
    // factorisation through Phi with an effective quotient
    let p0 = factor_out_phi(&golden.poincare, 2)?;
    if !p0.is_effective() {
        report.violation(format!("sym{n}: Phi-quotient is not effective"));
    }
    // H^0 agrees with the general connected-components formula
    let h0 = golden.poincare.coeff((0, 0, 0));
    if h0 != h0_general(2, d, &GroupSpec::Symmetric(n))? {
        report.violation(format!("sym{n}: H^0 mismatch"));
    }
    // degree/order constraints on the reduced-fibre data
    let f0 = p0.theta_graded(d)?;
    let edges = dense_edges_braid(l);
    let mdeg = monodromy_degree_check(&f0, &edges)?;
    if !mdeg.passed() {
        for v in mdeg.violations {
            report.violation(format!("sym{n}: {v}"));
        }
    }
    // faithful characters confined to the top degree, on both the reduced
    // fibre (order d) and the full fibre (order m)
    let chi_u_val = braid_chi_u(l);
    let faith0 = faithful_check(&f0, l, chi_u_val)?;
    if !faith0.passed() {
        for v in faith0.violations {
            report.violation(format!("sym{n} (reduced): {v}"));
        }
    }
    let f_full = golden.poincare.theta_graded(m)?;
    let faith = faithful_check(&f_full, l, chi_u_val)?;
    if !faith.passed() {
        for v in faith.violations {
            report.violation(format!("sym{n} (full): {v}"));
        }
    }
    Ok(())
}

fn check_golden_sym3() -> Result<CheckReport> {
    report_from("golden-sym3", "golden:sym3", |r| golden_scope_check(2, r))
}

fn check_golden_sym4() -> Result<CheckReport> {
    report_from("golden-sym4", "golden:sym4", |r| {
        golden_scope_check(3, r)?;
        // dimension gate: 2, 14 = 2*7, 36 and chi = 24
        let golden = golden_cohomology_sym(3)?;
        let dims = crate::braid::dims_by_degree(&golden.poincare)?;
        if dims.get(&0) != Some(&2)
            || dims.get(&1) != Some(&(2 * DIM_H1_F0_SYM4))
            || dims.get(&2) != Some(&36)
        {
            r.violation(format!("sym4: dimension table {dims:?}"));
        }
        // the rank-three assembly reproduces the recorded H^1 and H^2
        let (h1, h2) = crate::braid::assemble_sym4()?;
        if h1 != golden.poincare.coeff((0, 0, 1)) {
            r.violation("sym4: assembled H^1 differs from the recorded one");
        }
        if h2 != golden.poincare.coeff((0, 0, 2)) {
            r.violation("sym4: assembled H^2 differs from the recorded one");
        }
        Ok(())
    })
}

fn check_golden_sym5() -> Result<CheckReport> {
    report_from("golden-sym5", "golden:sym5", |r| golden_scope_check(4, r))
}

fn check_dihedral_h1() -> Result<CheckReport> {
    report_from("dihedral-h1", "check:rank2-two-routes", |report| {
        for p in 3..=10u32 {
            let formula = h1_f0_dihedral(p)?;
            if !formula.is_effective() {
                report.violation(format!("p = {p}: negative multiplicities"));
            }
            if formula.theta_restrict(p)? != h1_f0_monodromy(p) {
                report.violation(format!("p = {p}: theta restriction mismatch"));
            }
            let trace = h1_f0_uniform(&GroupSpec::Dihedral(p), 2, p)?;
            if trace != formula {
                report.violation(format!("p = {p}: trace route != recorded formula"));
            }
            // gamma_0-multiplicity of the monodromy module is d - 1
            let mono = formula.theta_restrict(p)?;
            if mono.mult(&IrrLabel::Gamma(0)) != p as i64 - 1 {
                report.violation(format!("p = {p}: trivial-eigenvalue multiplicity"));
            }
        }
        // an imprimitive uniform model goes through the same trace route
        let h = h1_f0_uniform(&GroupSpec::Imprimitive2(2), 2, 6)?;
        if h.dim()? != 25 {
            report.violation("G(4,2,2): dim H^1(F_0) != 25");
        }
        if h.theta_restrict(6)? != h1_f0_monodromy(6) {
            report.violation("G(4,2,2): theta restriction mismatch");
        }
        Ok(())
    })
}

fn check_dihedral_euler_consistency() -> Result<CheckReport> {
    report_from("dihedral-euler", "check:rank2-euler", |report| {
        let catalog = Catalog::builtin()?;
        for p in 3..=8u32 {
            let entry = catalog.dihedral(p)?;
            // 1 - t * H^1(F_0) induced to Gamma has trivial part matching
            // the quotient Euler characteristic
            let h1 = h1_f0_dihedral(p)?;
            let ind_h1 = crate::repring::rep::induce_gamma0(&h1)?;
            let h0 = h0_general(2, p, &GroupSpec::Dihedral(p))?;
            let chi = h0.sub(&ind_h1)?;
            if chi.trivial_isotypic()? != monodromy_euler_quotient(entry)? {
                report.violation(format!("p = {p}: induced H^* trivial part mismatch"));
            }
            if equivariant_euler(entry)? != chi {
                report.violation(format!("p = {p}: Euler route mismatch"));
            }
        }
        Ok(())
    })
}

fn check_spectra() -> Result<CheckReport> {
    report_from("spectra", "check:spectrum-routes", |report| {
        // rank-two closed formula vs recorded rank-two data
        if spectrum_from_pd(&golden_hd_braid(2)?, 2)? != spectrum_rank2(3) {
            report.violation("braid2 spectrum mismatch");
        }
        // A4: recorded spectrum against the recorded Hodge data
        let sp4 = spectrum_from_pd(&golden_hd_braid(4)?, 4)?;
        let rec = golden_spectrum_a4()?;
        if sp4 != rec {
            report.violation(format!("braid4 spectrum mismatch: {sp4} vs {rec}"));
        }
        // round trips
        for (n, d) in [(2u32, 3u32), (3, 6), (4, 10)] {
            let hd = golden_hd_braid(n)?;
            let sp = spectrum_from_pd(&hd, n)?;
            if theta_hd_from_spectrum(&sp, n, d)? != theta_hd_contraction(&hd)? {
                report.violation(format!("braid{n}: spectrum round trip"));
            }
        }
        // zeta constraint on the recorded Hodge data
        for (n, chi) in [(2u32, -1i64), (3, 2), (4, -6)] {
            let z = zeta_check(&golden_hd_braid(n)?, chi)?;
            if !z.passed() {
                for v in z.violations {
                    report.violation(format!("braid{n}: {v}"));
                }
            }
        }
        // purity symmetry
        let purity = purity_symmetry_check(&rec, 4, &dense_edges_braid(4), None);
        if !purity.passed() {
            for v in purity.violations {
                report.violation(format!("a4 purity: {v}"));
            }
        }
        for d in 3..=12u32 {
            let p = purity_symmetry_check(&spectrum_rank2(d), 2, &dense_edges_rank2(d), None);
            if !p.passed() {
                report.violation(format!("rank2 d = {d}: purity symmetry"));
            }
        }
        Ok(())
    })
}

fn check_pd_s4() -> Result<CheckReport> {
    report_from("pd-sym4", "golden:pd-sym4", |report| {
        let pd = golden_pd_s4()?;
        // theta restriction reproduces the recorded rank-three braid data
        if pd.theta_graded(6)? != golden_hd_braid(3)? {
            report.violation("theta restriction != recorded mu_6 Hodge data");
        }
        // u = v = 1 recovers the Poincare polynomial of the reduced fibre,
        // i.e. the canonical Phi-quotient of the recorded cohomology
        let p = pd.specialize(Specialize::One, Specialize::One, Specialize::Keep);
        let golden = golden_cohomology_sym(3)?;
        let p0 = factor_out_phi(&golden.poincare, 2)?;
        let p0_gamma0 = p0.map_coeffs(pd.group.clone(), |c| {
            crate::repring::rep::restrict_to_gamma0(c, 2)
        })?;
        if p != p0_gamma0 {
            report.violation("u=v=1 specialisation != recorded Poincare data");
        }
        // branch disambiguation
        let dis = disambiguation_check_s4()?;
        if !dis.passed() {
            for v in dis.violations {
                report.violation(v);
            }
        }
        Ok(())
    })
}

fn check_theta4() -> Result<CheckReport> {
    report_from("theta4", "check:theta-hd-a3", |report| {
        let sp = spectrum_from_pd(&golden_hd_braid(3)?, 3)?;
        let got = theta_hd_from_spectrum(&sp, 3, 6)?;
        let spec = GroupSpec::Cyclic(6);
        let mut expected = GradedRep::zero(spec.clone());
        let terms: [(u32, &[(u32, i64)]); 3] = [
            (0, &[(0, 1), (1, 2), (2, -1), (3, 1)]),
            (1, &[(0, -5), (2, 3), (4, -1)]),
            (2, &[(0, 6), (3, 1), (4, 3), (5, 2)]),
        ];
        for (p, entries) in terms {
            let coeff = RepElement::from_terms(
                spec.clone(),
                entries.iter().map(|&(s, c)| (IrrLabel::Gamma(s), c)),
            );
            expected.add_term((p, 0, 0), &coeff)?;
        }
        if got != expected {
            report.violation(format!("theta-HD of the A3 spectrum: {got}"));
        }
        Ok(())
    })
}

fn check_weight_dihedral() -> Result<CheckReport> {
    report_from("weight-dihedral", "check:weight-polynomial", |report| {
        for p in [3u32, 5, 7, 9, 11] {
            let w = crate::rank2::weight_poly_dihedral(p)?;
            if !w.is_effective() {
                report.violation(format!("p = {p}: negative weight multiplicities"));
            }
            let total: i64 = w.dims()?.values().sum();
            if total != 1 + (p as i64 - 1).pow(2) {
                report.violation(format!("p = {p}: weight dimension total"));
            }
        }
        let w3 = crate::rank2::weight_poly_dihedral(3)?.theta_graded(3)?;
        if w3 != crate::rank2::pd_rank2_monodromy(3).to_weight() {
            report.violation("p = 3: weights disagree with the Hodge route");
        }
        if !matches!(
            crate::rank2::weight_poly_dihedral(4),
            Err(Error::EvenNotSupported(_))
        ) {
            report.violation("even p must be refused");
        }
        Ok(())
    })
}

pub fn checks() -> Vec<NamedCheck> {
    vec![
        NamedCheck {
            id: "catalog-consistency",
            anchor: "check:catalog",
            scopes: &["all", "catalog"],
            run: check_catalog_consistency,
        },
        NamedCheck {
            id: "chi-u0-moebius",
            anchor: "check:moebius-inversion",
            scopes: &["all", "catalog"],
            run: check_chi_u0_moebius,
        },
        NamedCheck {
            id: "character-tables",
            anchor: "check:orthonormality",
            scopes: &["all", "catalog"],
            run: check_table_orthonormality,
        },
        NamedCheck {
            id: "euler-assembly",
            anchor: "check:equivariant-euler",
            scopes: &["all", "catalog"],
            run: check_euler_assembly,
        },
        NamedCheck {
            id: "euler-sym-routes",
            anchor: "check:euler-two-routes",
            scopes: &["all", "sym:3", "sym:4", "sym:5", "sym:6"],
            run: check_euler_sym_matches_assembly,
        },
        NamedCheck {
            id: "golden-sym3",
            anchor: "golden:sym3",
            scopes: &["all", "sym:3"],
            run: check_golden_sym3,
        },
        NamedCheck {
            id: "golden-sym4",
            anchor: "golden:sym4",
            scopes: &["all", "sym:4"],
            run: check_golden_sym4,
        },
        NamedCheck {
            id: "golden-sym5",
            anchor: "golden:sym5",
            scopes: &["all", "sym:5"],
            run: check_golden_sym5,
        },
        NamedCheck {
            id: "dihedral-h1",
            anchor: "check:rank2-two-routes",
            scopes: &["all", "rank2", "dihedral"],
            run: check_dihedral_h1,
        },
        NamedCheck {
            id: "dihedral-euler",
            anchor: "check:rank2-euler",
            scopes: &["all", "rank2", "dihedral"],
            run: check_dihedral_euler_consistency,
        },
        NamedCheck {
            id: "spectra",
            anchor: "check:spectrum-routes",
            scopes: &["all", "spectrum"],
            run: check_spectra,
        },
        NamedCheck {
            id: "pd-sym4",
            anchor: "golden:pd-sym4",
            scopes: &["all", "sym:4", "spectrum"],
            run: check_pd_s4,
        },
        NamedCheck {
            id: "theta4",
            anchor: "check:theta-hd-a3",
            scopes: &["all", "spectrum"],
            run: check_theta4,
        },
        NamedCheck {
            id: "weight-dihedral",
            anchor: "check:weight-polynomial",
            scopes: &["all", "rank2", "dihedral"],
            run: check_weight_dihedral,
        },
    ]
}

/// Run every check matching the scope ("all" when absent); returns the
/// reports and whether everything passed.
pub fn run_checks(scope: Option<&str>) -> (Vec<CheckReport>, bool) {
    let scope = scope.unwrap_or("all");
    let mut reports = Vec::new();
    let mut ok = true;
    for check in checks() {
        if !check.scopes.contains(&scope) {
            continue;
        }
        let report = match (check.run)() {
            Ok(r) => r,
            Err(e) => {
                let mut r = CheckReport::new(check.id, check.anchor);
                r.violation(format!("error: {e}"));
                r
            }
        };
        ok &= report.passed();
        reports.push(report);
    }
    (reports, ok)
}
