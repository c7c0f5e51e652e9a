//! Exact first cohomology of the reduced Milnor fibre for rank-two
//! reflection groups via the isolated-singularity trace formula, together
//! with the rank-two Poincare-Deligne polynomial, spectrum, and weight
//! polynomial.

use cyclo::Cyclotomic;

use crate::catalog::{chi_u, chi_u0_values, Family, ReflectionGroupData};
use crate::error::{Error, Result};
use crate::hodge::Spectrum;
use crate::repring::{
    eps_pow_label, group_data, ClassFunction, ClassMeta, DihedralName, GradedRep, GroupSpec,
    IrrLabel, Mat2, RepElement,
};

/// An element (g, xi) of the symmetry group of the reduced fibre of a
/// rank-two group, with the dimension of its fixed space on V: a vector is
/// fixed by (g, xi) exactly when it is a xi-eigenvector of g.
#[derive(Clone, Debug)]
pub struct Rank2Element {
    pub g: Mat2,
    pub root: Cyclotomic,
    pub fix_dim: u32,
}

impl Rank2Element {
    pub fn new(g: Mat2, root: Cyclotomic) -> Self {
        let fix_dim = g.eigenspace_dim(&root);
        Rank2Element { g, root, fix_dim }
    }
}

/// Trace of (g, xi) on the first cohomology of the reduced Milnor fibre of
/// a degree-d plane curve with isolated singularity: (1 - d)^k with k the
/// fixed-space dimension.
pub fn os_character(d: u32, elt: &Rank2Element) -> Cyclotomic {
    Cyclotomic::from_int(1 - d as i64).pow(elt.fix_dim as u64)
}

/// H^1(F_0) as a module over the cyclic monodromy mu_d:
/// (d-1) gamma_0 + (d-2)(gamma_1 + ... + gamma_{d-1}).
pub fn h1_f0_monodromy(d: u32) -> RepElement {
    let spec = GroupSpec::Cyclic(d);
    let mut out = RepElement::zero(spec);
    out.add_term(IrrLabel::Gamma(0), d as i64 - 1);
    for i in 1..d {
        out.add_term(IrrLabel::Gamma(i), d as i64 - 2);
    }
    out
}

fn dihedral_gamma0(p: u32) -> GroupSpec {
    GroupSpec::gamma0(GroupSpec::Dihedral(p), 2 * p, 2)
}

/// The explicit decomposition of H^1(F_0) over Gamma_0 for the dihedral
/// group G(p,p,2), by parity of p.
pub fn h1_f0_dihedral(p: u32) -> Result<RepElement> {
    if p < 3 {
        return Err(Error::Unsupported(format!("dihedral requires p >= 3, got {p}")));
    }
    let spec = dihedral_gamma0(p);
    let mut out = RepElement::zero(spec);
    let triv = IrrLabel::Dihedral(DihedralName::Triv);
    let sign = IrrLabel::Dihedral(DihedralName::Sign);
    if p % 2 == 1 {
        for i in (1..p).step_by(2) {
            out.add_term(IrrLabel::pair(triv.clone(), i), 1);
        }
        for i in (2..p).step_by(2) {
            out.add_term(IrrLabel::pair(sign.clone(), i), 1);
        }
        for k in 1..=(p - 1) / 2 {
            let chi = IrrLabel::Dihedral(DihedralName::Chi(k));
            for i in 0..p {
                if i != k && i != p - k {
                    out.add_term(IrrLabel::pair(chi.clone(), i), 1);
                }
            }
        }
    } else {
        // The split of the determinant-type part differs from the odd case:
        // the trivial character carries gamma_0 and both 1 and eps carry
        // every other even index. This is pinned against two independent
        // routes (the trace-formula decomposition and the equivariant Euler
        // characteristic); see the dihedral consistency checks.
        let delta = IrrLabel::Dihedral(DihedralName::Delta);
        let signdelta = IrrLabel::Dihedral(DihedralName::SignDelta);
        out.add_term(IrrLabel::pair(triv.clone(), 0), 1);
        for i in (2..p).step_by(2) {
            out.add_term(IrrLabel::pair(triv.clone(), i), 1);
            out.add_term(IrrLabel::pair(sign.clone(), i), 1);
        }
        for i in 0..p {
            if (i + p / 2) % 2 == 0 && i != p / 2 {
                out.add_term(IrrLabel::pair(delta.clone(), i), 1);
                out.add_term(IrrLabel::pair(signdelta.clone(), i), 1);
            }
        }
        for k in 1..=(p - 2) / 2 {
            let chi = IrrLabel::Dihedral(DihedralName::Chi(k));
            for i in 0..p {
                if (i + k) % 2 == 0 && i != k && i != p - k {
                    out.add_term(IrrLabel::pair(chi.clone(), i), 2);
                }
            }
            out.add_term(IrrLabel::pair(chi.clone(), k), 1);
            out.add_term(IrrLabel::pair(chi.clone(), p - k), 1);
        }
    }
    Ok(out)
}

/// H^1(F_0) over Gamma_0 for a uniform rank-two group with an explicit
/// matrix model, via the trace formula: the class function
/// (g, xi) -> (1-d)^{dim Fix} decomposed over Gamma_0. Independent of the
/// closed dihedral formulas.
pub fn h1_f0_uniform(group: &GroupSpec, e: u32, d: u32) -> Result<RepElement> {
    let m = d * e;
    let base = group_data(group)?;
    let mg = base
        .matrices
        .as_ref()
        .ok_or_else(|| Error::MissingModel(format!("{group} has no matrix model")))?
        .clone();
    let spec = GroupSpec::gamma0(group.clone(), m, e);
    let data = group_data(&spec)?;
    let mut values = Vec::with_capacity(data.num_classes());
    for meta in &data.class_meta {
        let ClassMeta::Gamma0Cell(c, x) = meta else {
            unreachable!()
        };
        let ClassMeta::Matrix(rep) = base.class_meta[*c] else {
            unreachable!()
        };
        let xi = Cyclotomic::root(m, *x as i64);
        let elt = Rank2Element::new(mg.elements[rep].clone(), xi);
        values.push(os_character(d, &elt));
    }
    RepElement::decompose(&ClassFunction::new(spec, values))
}

/// H^0(F) = sum over i < e of eps^i (x) gamma_{di}, an element of
/// R(G x mu_{de}).
pub fn h0_general(e: u32, d: u32, group: &GroupSpec) -> Result<RepElement> {
    let m = d * e;
    let gamma = GroupSpec::product(group.clone(), m);
    let mut out = RepElement::zero(gamma);
    for i in 0..e {
        out.add_term(IrrLabel::pair(eps_pow_label(group, i)?, (d * i) % m), 1);
    }
    Ok(out)
}

/// The monodromy-equivariant Poincare-Deligne polynomial of the reduced
/// fibre of any rank-two reflection arrangement of d lines:
/// 1 + (sum (i-1) gamma_i u + sum (d-1-j) gamma_j v + (d-1) gamma_0 uv) t.
pub fn pd_rank2_monodromy(d: u32) -> GradedRep {
    let spec = GroupSpec::Cyclic(d);
    let mut out = GradedRep::zero(spec.clone());
    out.add_term((0, 0, 0), &RepElement::irreducible(spec.clone(), IrrLabel::Gamma(0)))
        .unwrap();
    for i in 2..d {
        out.add_term(
            (1, 0, 1),
            &RepElement::irreducible(spec.clone(), IrrLabel::Gamma(i)).scale(i as i64 - 1),
        )
        .unwrap();
    }
    for j in 1..=(d.saturating_sub(2)) {
        out.add_term(
            (0, 1, 1),
            &RepElement::irreducible(spec.clone(), IrrLabel::Gamma(j)).scale((d - 1 - j) as i64),
        )
        .unwrap();
    }
    out.add_term(
        (1, 1, 1),
        &RepElement::irreducible(spec, IrrLabel::Gamma(0)).scale(d as i64 - 1),
    )
    .unwrap();
    out
}

/// The spectrum of a rank-two arrangement of d lines:
/// sum_{i=1}^{d-2} i t^{(i+1)/d} + (d-1) t + sum_{j=1}^{d-2} j t^{1+(d-1-j)/d}.
pub fn spectrum_rank2(d: u32) -> Spectrum {
    let mut sp = Spectrum::new(d);
    for i in 1..=(d as i64 - 2) {
        sp.add(i + 1, i);
    }
    sp.add(d as i64, d as i64 - 1);
    for j in 1..=(d as i64 - 2) {
        sp.add(d as i64 + (d as i64 - 1 - j), j);
    }
    sp
}

/// The weight polynomial of the reduced fibre for the dihedral group with p
/// odd; the even case is asserted nowhere and is rejected.
pub fn weight_poly_dihedral(p: u32) -> Result<GradedRep> {
    if p % 2 == 0 {
        return Err(Error::EvenNotSupported(format!(
            "weight polynomial is recorded for odd p only, got {p}"
        )));
    }
    if p < 3 {
        return Err(Error::Unsupported(format!("dihedral requires p >= 3, got {p}")));
    }
    let spec = dihedral_gamma0(p);
    let mut out = GradedRep::zero(spec.clone());
    let triv = IrrLabel::Dihedral(DihedralName::Triv);
    let sign = IrrLabel::Dihedral(DihedralName::Sign);
    out.add_term(
        (0, 0, 0),
        &RepElement::irreducible(spec.clone(), IrrLabel::pair(triv.clone(), 0)),
    )?;
    for i in 1..p {
        // eps^{i+1}: trivial for odd i, sign for even i
        let eps_pow = if (i + 1) % 2 == 0 { &triv } else { &sign };
        let mut coeff = RepElement::irreducible(spec.clone(), IrrLabel::pair(eps_pow.clone(), i));
        for k in 1..=(p - 1) / 2 {
            if k != i && k != p - i {
                coeff.add_term(
                    IrrLabel::pair(IrrLabel::Dihedral(DihedralName::Chi(k)), i),
                    1,
                );
            }
        }
        out.add_term((0, 0, 1), &coeff)?;
    }
    let mut top = RepElement::zero(spec.clone());
    for k in 1..=(p - 1) / 2 {
        top.add_term(IrrLabel::pair(IrrLabel::Dihedral(DihedralName::Chi(k)), 0), 1);
    }
    out.add_term((0, 0, 2), &top)?;
    Ok(out)
}

/// For a rank-two group known through its Euler data only: H^0 of F as a
/// mu_m-module together with the dimension of H^1(F), deduced from the
/// equivariant Euler characteristic.
pub fn h1_dim_nonuniform(entry: &ReflectionGroupData) -> Result<(RepElement, i64)> {
    if entry.rank != 2 {
        return Err(Error::Unsupported(format!(
            "{}: rank-two bookkeeping on a rank-{} group",
            entry.id, entry.rank
        )));
    }
    let m = entry.m()?;
    let e = entry.e_gcd();
    let d = m / e;
    // chi(F) from the per-d Euler data; cross-checked against m * chi(U)
    let chi = chi_u0_values(entry)?;
    let mut chi_f = 0i64;
    for (&dd, &c) in &chi {
        chi_f += c * (entry.order as i64) * (m as i64) / (dd as i64);
    }
    let expected = (m as i64) * chi_u(&entry.coexponents);
    if chi_f != expected {
        return Err(Error::DataError(format!(
            "{}: Euler data gives chi(F) = {chi_f}, coexponents give {expected}",
            entry.id
        )));
    }
    let mut h0 = RepElement::zero(GroupSpec::Cyclic(m));
    for i in 0..e {
        h0.add_term(IrrLabel::Gamma((d * i) % m), 1);
    }
    let dim_h1 = e as i64 - chi_f;
    Ok((h0, dim_h1))
}

/// The (e, d) parameters of a uniform rank-two catalog entry.
pub fn uniform_params(entry: &ReflectionGroupData) -> Result<(u32, u32)> {
    match entry.family {
        Family::Dihedral { p } => Ok((2, p)),
        Family::Imprimitive2 { p } => Ok((2, 2 * p + 2)),
        Family::Rank2Uniform { e, d } => Ok((e, d)),
        _ => Err(Error::Unsupported(format!("{} is not uniform", entry.id))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repring::Specialize;

    #[test]
    fn os_character_values() {
        // identity with xi = 1 has k = 2, so the trace at d = 3 is 4
        let elt = Rank2Element::new(Mat2::identity(), Cyclotomic::one());
        assert_eq!(elt.fix_dim, 2);
        assert_eq!(os_character(3, &elt), Cyclotomic::from_int(4));
        // k = 0 gives the empty product
        let elt = Rank2Element::new(Mat2::identity(), Cyclotomic::root(5, 1));
        assert_eq!(elt.fix_dim, 0);
        assert_eq!(os_character(7, &elt), Cyclotomic::one());
        // a reflection at its nontrivial eigenvalue has k = 1
        let refl = Mat2::anti(Cyclotomic::one(), Cyclotomic::one());
        let elt = Rank2Element::new(refl, Cyclotomic::from_int(-1));
        assert_eq!(elt.fix_dim, 1);
        assert_eq!(os_character(5, &elt), Cyclotomic::from_int(-4));
    }

    #[test]
    fn monodromy_module() {
        // d = 3: 2 g0 + g1 + g2
        let h = h1_f0_monodromy(3);
        assert_eq!(h.mult(&IrrLabel::Gamma(0)), 2);
        assert_eq!(h.mult(&IrrLabel::Gamma(1)), 1);
        assert_eq!(h.mult(&IrrLabel::Gamma(2)), 1);
        // d = 2: g0 only
        let h = h1_f0_monodromy(2);
        assert_eq!(h.mult(&IrrLabel::Gamma(0)), 1);
        assert_eq!(h.mult(&IrrLabel::Gamma(1)), 0);
        // total dimension (d-1)^2
        for d in 2..=30 {
            assert_eq!(h1_f0_monodromy(d).dim().unwrap(), (d as i64 - 1).pow(2));
        }
    }

    #[test]
    fn dihedral_h1_small_cases() {
        // p = 3: 1 (x) g1 + eps (x) g2 + chi_1 (x) g0
        let h = h1_f0_dihedral(3).unwrap();
        let triv = IrrLabel::Dihedral(DihedralName::Triv);
        let sign = IrrLabel::Dihedral(DihedralName::Sign);
        let chi1 = IrrLabel::Dihedral(DihedralName::Chi(1));
        assert_eq!(h.mult(&IrrLabel::pair(triv, 1)), 1);
        assert_eq!(h.mult(&IrrLabel::pair(sign, 2)), 1);
        assert_eq!(h.mult(&IrrLabel::pair(chi1, 0)), 1);
        assert_eq!(h.num_terms(), 3);
        assert_eq!(h.dim().unwrap(), 4);

        // p = 4 instance of the even formula
        let h = h1_f0_dihedral(4).unwrap();
        let triv = IrrLabel::Dihedral(DihedralName::Triv);
        let sign = IrrLabel::Dihedral(DihedralName::Sign);
        let delta = IrrLabel::Dihedral(DihedralName::Delta);
        let signdelta = IrrLabel::Dihedral(DihedralName::SignDelta);
        let chi1 = IrrLabel::Dihedral(DihedralName::Chi(1));
        assert_eq!(h.mult(&IrrLabel::pair(triv.clone(), 0)), 1);
        assert_eq!(h.mult(&IrrLabel::pair(triv, 2)), 1);
        assert_eq!(h.mult(&IrrLabel::pair(sign, 2)), 1);
        assert_eq!(h.mult(&IrrLabel::pair(delta, 0)), 1);
        assert_eq!(h.mult(&IrrLabel::pair(signdelta, 0)), 1);
        assert_eq!(h.mult(&IrrLabel::pair(chi1.clone(), 1)), 1);
        assert_eq!(h.mult(&IrrLabel::pair(chi1, 3)), 1);
        assert_eq!(h.dim().unwrap(), 9);
    }

    #[test]
    fn dihedral_theta_restricts_to_monodromy() {
        for p in 3..=12u32 {
            let h = h1_f0_dihedral(p).unwrap();
            assert!(h.is_effective(), "p = {p}");
            assert_eq!(
                h.theta_restrict(p).unwrap(),
                h1_f0_monodromy(p),
                "p = {p}"
            );
        }
    }

    #[test]
    fn uniform_route_agrees_with_dihedral_formula() {
        for p in 3..=10u32 {
            let via_trace = h1_f0_uniform(&GroupSpec::Dihedral(p), 2, p).unwrap();
            let via_formula = h1_f0_dihedral(p).unwrap();
            assert_eq!(via_trace, via_formula, "p = {p}");
        }
    }

    #[test]
    fn imprimitive_uniform_route() {
        // G(4,2,2): e = 2, d = 6, dim H^1(F_0) = 25
        let h = h1_f0_uniform(&GroupSpec::Imprimitive2(2), 2, 6).unwrap();
        assert!(h.is_effective());
        assert_eq!(h.dim().unwrap(), 25);
        assert_eq!(h.theta_restrict(6).unwrap(), h1_f0_monodromy(6));
        // gamma_0 multiplicity = d - 1 = dim H^1(U)
        let mono = h.theta_restrict(6).unwrap();
        assert_eq!(mono.mult(&IrrLabel::Gamma(0)), 5);
    }

    #[test]
    fn h0_examples() {
        // S4, e=2, d=6
        let h = h0_general(2, 6, &GroupSpec::Symmetric(4)).unwrap();
        assert_eq!(h.mult(&IrrLabel::pair(IrrLabel::Partition(vec![4]), 0)), 1);
        assert_eq!(
            h.mult(&IrrLabel::pair(IrrLabel::Partition(vec![1, 1, 1, 1]), 6)),
            1
        );
        // e = 1: connected fibre
        let h = h0_general(1, 5, &GroupSpec::Dihedral(5)).unwrap();
        assert_eq!(h.dim().unwrap(), 1);
        // numeric-level G4: e = 3, d = 4
        let h = h0_general(3, 4, &GroupSpec::Named("G4".into())).unwrap();
        assert_eq!(h.mult(&IrrLabel::pair(IrrLabel::DetPow(0), 0)), 1);
        assert_eq!(h.mult(&IrrLabel::pair(IrrLabel::DetPow(1), 4)), 1);
        assert_eq!(h.mult(&IrrLabel::pair(IrrLabel::DetPow(2), 8)), 1);
    }

    #[test]
    fn pd_and_spectrum_rank2() {
        // d = 3: g0 + (g2 u + g1 v + 2 g0 uv) t
        let pd = pd_rank2_monodromy(3);
        assert_eq!(pd.coeff((1, 0, 1)).mult(&IrrLabel::Gamma(2)), 1);
        assert_eq!(pd.coeff((0, 1, 1)).mult(&IrrLabel::Gamma(1)), 1);
        assert_eq!(pd.coeff((1, 1, 1)).mult(&IrrLabel::Gamma(0)), 2);
        // u = v = 1 recovers 1 + H^1 t
        for d in 2..=12u32 {
            let pd = pd_rank2_monodromy(d);
            let p = pd.specialize(Specialize::One, Specialize::One, Specialize::Keep);
            assert_eq!(p.coeff((0, 0, 1)), h1_f0_monodromy(d), "d = {d}");
            // u- and v-coefficients are conjugate-dual multisets
            let u_side = pd.coeff((1, 0, 1));
            let v_side = pd.coeff((0, 1, 1));
            for (label, mult) in u_side.terms() {
                let IrrLabel::Gamma(i) = label else { panic!() };
                assert_eq!(v_side.mult(&IrrLabel::Gamma((d - i) % d)), mult);
            }
            // total spectrum mass (d-1)^2
            assert_eq!(spectrum_rank2(d).total_mass(), (d as i64 - 1).pow(2));
        }
        // d = 3 spectrum: t^{2/3} + 2t + t^{4/3}
        let sp = spectrum_rank2(3);
        assert_eq!(sp.get(2), 1);
        assert_eq!(sp.get(3), 2);
        assert_eq!(sp.get(4), 1);
        assert_eq!(sp.entries().count(), 3);
    }

    #[test]
    fn weight_polynomial_dihedral() {
        // p = 3: 1(x)g0 + (1(x)g1 + eps(x)g2) t + chi_1(x)g0 t^2
        let w = weight_poly_dihedral(3).unwrap();
        let triv = IrrLabel::Dihedral(DihedralName::Triv);
        let sign = IrrLabel::Dihedral(DihedralName::Sign);
        let chi1 = IrrLabel::Dihedral(DihedralName::Chi(1));
        assert_eq!(w.coeff((0, 0, 0)).mult(&IrrLabel::pair(triv.clone(), 0)), 1);
        assert_eq!(w.coeff((0, 0, 1)).mult(&IrrLabel::pair(triv, 1)), 1);
        assert_eq!(w.coeff((0, 0, 1)).mult(&IrrLabel::pair(sign, 2)), 1);
        assert_eq!(w.coeff((0, 0, 2)).mult(&IrrLabel::pair(chi1, 0)), 1);
        // dimension at t = 1 is 1 + (p-1)^2
        for p in [3u32, 5, 7, 9] {
            let w = weight_poly_dihedral(p).unwrap();
            let total: i64 = w.dims().unwrap().values().sum();
            assert_eq!(total, 1 + (p as i64 - 1).pow(2), "p = {p}");
        }
        // even p is refused
        assert!(matches!(
            weight_poly_dihedral(4),
            Err(Error::EvenNotSupported(_))
        ));
    }

    #[test]
    fn weight_agrees_with_pd_at_monodromy_level_p3() {
        let w = weight_poly_dihedral(3).unwrap().theta_graded(3).unwrap();
        let from_pd = pd_rank2_monodromy(3).to_weight();
        assert_eq!(w, from_pd);
    }
}
