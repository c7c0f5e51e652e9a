//! Explicit 2x2 monomial matrix models for the rank-two reflection groups
//! G(p,p,2) (dihedral) and G(2p,p,2), with conjugacy classes computed by
//! orbit partitioning and character tables built from the index-two abelian
//! diagonal subgroup.

use cyclo::Cyclotomic;

use crate::error::{Error, Result};
use crate::repring::{DihedralName, IrrLabel, Mon2Name};

/// A 2x2 matrix over the cyclotomics.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat2 {
    pub e: [[Cyclotomic; 2]; 2],
}

impl Mat2 {
    pub fn new(a: Cyclotomic, b: Cyclotomic, c: Cyclotomic, d: Cyclotomic) -> Self {
        Mat2 { e: [[a, b], [c, d]] }
    }

    pub fn diag(a: Cyclotomic, d: Cyclotomic) -> Self {
        Mat2::new(a, Cyclotomic::zero(), Cyclotomic::zero(), d)
    }

    pub fn anti(b: Cyclotomic, c: Cyclotomic) -> Self {
        Mat2::new(Cyclotomic::zero(), b, c, Cyclotomic::zero())
    }

    pub fn identity() -> Self {
        Mat2::diag(Cyclotomic::one(), Cyclotomic::one())
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        let mut out = [
            [Cyclotomic::zero(), Cyclotomic::zero()],
            [Cyclotomic::zero(), Cyclotomic::zero()],
        ];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = &(&self.e[i][0] * &other.e[0][j]) + &(&self.e[i][1] * &other.e[1][j]);
            }
        }
        Mat2 { e: out }
    }

    pub fn det(&self) -> Cyclotomic {
        &(&self.e[0][0] * &self.e[1][1]) - &(&self.e[0][1] * &self.e[1][0])
    }

    pub fn trace(&self) -> Cyclotomic {
        &self.e[0][0] + &self.e[1][1]
    }

    pub fn is_diagonal(&self) -> bool {
        self.e[0][1].is_zero() && self.e[1][0].is_zero()
    }

    /// Inverse of a monomial matrix (diagonal or antidiagonal with
    /// root-of-unity entries). Panics on anything else.
    pub fn monomial_inverse(&self) -> Mat2 {
        if self.is_diagonal() {
            Mat2::diag(root_inverse(&self.e[0][0]), root_inverse(&self.e[1][1]))
        } else {
            assert!(self.e[0][0].is_zero() && self.e[1][1].is_zero());
            Mat2::anti(root_inverse(&self.e[1][0]), root_inverse(&self.e[0][1]))
        }
    }

    /// Dimension of the xi-eigenspace, i.e. the kernel of (self - xi*I).
    pub fn eigenspace_dim(&self, xi: &Cyclotomic) -> u32 {
        let a = &self.e[0][0] - xi;
        let d = &self.e[1][1] - xi;
        let b = &self.e[0][1];
        let c = &self.e[1][0];
        if a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero() {
            2
        } else if (&(&a * &d) - &(b * c)).is_zero() {
            1
        } else {
            0
        }
    }

    /// A nonzero vector in the xi-eigenspace (requires dimension >= 1).
    pub fn eigenvector(&self, xi: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        let a = &self.e[0][0] - xi;
        let d = &self.e[1][1] - xi;
        let b = self.e[0][1].clone();
        let c = self.e[1][0].clone();
        // rows of (g - xi I) are (a b) and (c d); kernel vector:
        if !a.is_zero() || !b.is_zero() {
            (b, -a)
        } else if !c.is_zero() || !d.is_zero() {
            (d, -c)
        } else {
            (Cyclotomic::one(), Cyclotomic::zero())
        }
    }
}

fn root_inverse(z: &Cyclotomic) -> Cyclotomic {
    // inverse of a root of unity is its conjugate
    z.conj()
}

/// An explicit matrix model of a rank-two monomial reflection group.
pub struct MatrixGroup {
    pub elements: Vec<Mat2>,
    /// class index of each element
    pub class_of: Vec<usize>,
    /// representative element index per class
    pub class_reps: Vec<usize>,
    pub class_sizes: Vec<u64>,
    pub identity_class: usize,
    /// irreducible characters: label and value per class
    pub irreps: Vec<(IrrLabel, Vec<Cyclotomic>)>,
}

fn find_element(elements: &[Mat2], m: &Mat2) -> usize {
    elements
        .iter()
        .position(|e| e == m)
        .expect("element not in group (not closed?)")
}

fn conjugacy_classes(elements: &[Mat2]) -> (Vec<usize>, Vec<usize>, Vec<u64>) {
    let n = elements.len();
    let inverses: Vec<Mat2> = elements.iter().map(|g| g.monomial_inverse()).collect();
    let mut class_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    for i in 0..n {
        if class_of[i] != usize::MAX {
            continue;
        }
        let cls = reps.len();
        reps.push(i);
        let mut size = 0u64;
        for (h, hinv) in elements.iter().zip(inverses.iter()) {
            let conj = h.mul(&elements[i]).mul(hinv);
            let j = find_element(elements, &conj);
            if class_of[j] == usize::MAX {
                class_of[j] = cls;
                size += 1;
            } else {
                debug_assert_eq!(class_of[j], cls);
            }
        }
        sizes.push(size);
    }
    (class_of, reps, sizes)
}

/// Description of the abelian diagonal subgroup A and its characters; the
/// full group is A together with s*A where s is the coordinate swap.
/// A character of A is given by a weight on the diagonal entries.
struct DiagonalChar {
    /// order of the roots of unity appearing in the entries
    root_order: u32,
    /// weight (r, s): value on diag(z^a, z^b) is z^{ra+sb}
    weight: (u32, u32),
}

impl DiagonalChar {
    fn value(&self, a: u32, b: u32) -> Cyclotomic {
        let m = self.root_order;
        let e = (self.weight.0 as u64 * a as u64 + self.weight.1 as u64 * b as u64) % m as u64;
        Cyclotomic::root(m, e as i64)
    }
}

/// Read off the (a, b) exponents of a diagonal matrix diag(z^a, z^b).
fn diag_exponents(m: &Mat2, root_order: u32) -> (u32, u32) {
    let find = |z: &Cyclotomic| -> u32 {
        (0..root_order)
            .find(|&k| *z == Cyclotomic::root(root_order, k as i64))
            .expect("entry is not a root of unity of the expected order")
    };
    (find(&m.e[0][0]), find(&m.e[1][1]))
}

/// Build the character table of a group G = A + sA from a list of
/// self-paired characters (each yielding two linear extensions) and paired
/// characters (each yielding one induced two-dimensional irreducible).
fn build_table(
    elements: &[Mat2],
    class_reps: &[usize],
    root_order: u32,
    selfpaired: Vec<(DiagonalChar, IrrLabel, IrrLabel)>,
    paired: Vec<(DiagonalChar, DiagonalChar, IrrLabel)>,
) -> Vec<(IrrLabel, Vec<Cyclotomic>)> {
    let swap = Mat2::anti(Cyclotomic::one(), Cyclotomic::one());
    let mut irreps = Vec::new();
    for (lam, plus, minus) in selfpaired {
        let mut vplus = Vec::new();
        let mut vminus = Vec::new();
        for &r in class_reps {
            let g = &elements[r];
            if g.is_diagonal() {
                let (a, b) = diag_exponents(g, root_order);
                let v = lam.value(a, b);
                vplus.push(v.clone());
                vminus.push(v);
            } else {
                // g = swap * d with d diagonal
                let d = swap.mul(g);
                let (a, b) = diag_exponents(&d, root_order);
                let v = lam.value(a, b);
                vplus.push(v.clone());
                vminus.push(-&v);
            }
        }
        irreps.push((plus, vplus));
        irreps.push((minus, vminus));
    }
    for (lam, lam_s, label) in paired {
        let mut vals = Vec::new();
        for &r in class_reps {
            let g = &elements[r];
            if g.is_diagonal() {
                let (a, b) = diag_exponents(g, root_order);
                vals.push(&lam.value(a, b) + &lam_s.value(a, b));
            } else {
                vals.push(Cyclotomic::zero());
            }
        }
        irreps.push((label, vals));
    }
    irreps
}

/// The dihedral reflection group G(p,p,2) in its reflection representation:
/// rotations diag(z, z^{-1}) and reflections antidiag(z, z^{-1}), z in mu_p.
pub fn dihedral_group(p: u32) -> Result<MatrixGroup> {
    if p < 3 {
        return Err(Error::Unsupported(format!("dihedral requires p >= 3, got {p}")));
    }
    let mut elements = Vec::with_capacity(2 * p as usize);
    for j in 0..p {
        elements.push(Mat2::diag(
            Cyclotomic::root(p, j as i64),
            Cyclotomic::root(p, -(j as i64)),
        ));
    }
    for j in 0..p {
        elements.push(Mat2::anti(
            Cyclotomic::root(p, j as i64),
            Cyclotomic::root(p, -(j as i64)),
        ));
    }
    let (class_of, class_reps, class_sizes) = conjugacy_classes(&elements);
    let identity_class = class_of[0];

    // Characters of A = mu_p come via weights (k, 0) on diag(z^j, z^-j):
    // value z^{jk}. The swap sends weight k to -k.
    let mut selfpaired = Vec::new();
    let mut paired = Vec::new();
    for k in 0..=(p / 2) {
        let lam = DiagonalChar { root_order: p, weight: (k, 0) };
        if k == 0 {
            selfpaired.push((
                lam,
                IrrLabel::Dihedral(DihedralName::Triv),
                IrrLabel::Dihedral(DihedralName::Sign),
            ));
        } else if 2 * k == p {
            selfpaired.push((
                lam,
                IrrLabel::Dihedral(DihedralName::Delta),
                IrrLabel::Dihedral(DihedralName::SignDelta),
            ));
        } else {
            let lam_s = DiagonalChar { root_order: p, weight: (p - k, 0) };
            paired.push((lam, lam_s, IrrLabel::Dihedral(DihedralName::Chi(k))));
        }
    }
    let irreps = build_table(&elements, &class_reps, p, selfpaired, paired);
    Ok(MatrixGroup {
        elements,
        class_of,
        class_reps,
        class_sizes,
        identity_class,
        irreps,
    })
}

/// The imprimitive reflection group G(2p,p,2): monomial 2x2 matrices with
/// entries in mu_2p whose entry product lies in mu_2.
pub fn imprimitive2_group(p: u32) -> Result<MatrixGroup> {
    if p < 2 {
        return Err(Error::Unsupported(format!(
            "G(2p,p,2) requires p >= 2, got {p}"
        )));
    }
    let m = 2 * p;
    let mut elements = Vec::with_capacity(8 * p as usize);
    for a in 0..m {
        for c in [0, p] {
            let b = (2 * m - a + c) % m;
            elements.push(Mat2::diag(
                Cyclotomic::root(m, a as i64),
                Cyclotomic::root(m, b as i64),
            ));
        }
    }
    for a in 0..m {
        for c in [0, p] {
            let b = (2 * m - a + c) % m;
            elements.push(Mat2::anti(
                Cyclotomic::root(m, a as i64),
                Cyclotomic::root(m, b as i64),
            ));
        }
    }
    let (class_of, class_reps, class_sizes) = conjugacy_classes(&elements);
    let identity_class = class_of[0];

    // Characters of A = {diag(z^a, z^b) : a+b = 0 mod p} are weights (r, s)
    // in Z_2p^2 modulo the annihilator <(2,2)>. Canonical form: s in {0,1}.
    let canon = |r: u32, s: u32| -> (u32, u32) {
        let shift = s - (s % 2);
        (((r + m) - shift) % m, s % 2)
    };
    let swap_weight = |r: u32, s: u32| -> (u32, u32) { canon(s, r) };
    let mut seen = std::collections::BTreeSet::new();
    let mut selfpaired = Vec::new();
    let mut paired = Vec::new();
    for r in 0..m {
        for s in 0..2u32 {
            let w = canon(r, s);
            if seen.contains(&w) {
                continue;
            }
            let ws = swap_weight(w.0, w.1);
            seen.insert(w);
            seen.insert(ws);
            let lam = DiagonalChar { root_order: m, weight: w };
            if w == ws {
                selfpaired.push((
                    lam,
                    IrrLabel::Mon2(Mon2Name::Lin { r: w.0, s: w.1 as u8, neg: false }),
                    IrrLabel::Mon2(Mon2Name::Lin { r: w.0, s: w.1 as u8, neg: true }),
                ));
            } else {
                let key = w.min(ws);
                let lam_s = DiagonalChar { root_order: m, weight: ws };
                paired.push((
                    lam,
                    lam_s,
                    IrrLabel::Mon2(Mon2Name::Ind { r: key.0, s: key.1 as u8 }),
                ));
            }
        }
    }
    let irreps = build_table(&elements, &class_reps, m, selfpaired, paired);
    Ok(MatrixGroup {
        elements,
        class_of,
        class_reps,
        class_sizes,
        identity_class,
        irreps,
    })
}

impl MatrixGroup {
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    /// Linear forms (up to scalar) of the reflecting hyperplanes: the fixed
    /// lines of the reflections (elements with a 1-eigenspace of dim 1 whose
    /// other eigenvalue is nontrivial).
    pub fn hyperplane_normals(&self) -> Vec<(Cyclotomic, Cyclotomic)> {
        let mut normals: Vec<(Cyclotomic, Cyclotomic)> = Vec::new();
        let one = Cyclotomic::one();
        for g in &self.elements {
            if *g == Mat2::identity() || g.eigenspace_dim(&one) != 1 {
                continue;
            }
            // fixed line = 1-eigenvector (x0, y0); the hyperplane is its own
            // span, cut out by the form (y0, -x0) applied to (x, y)... in
            // rank 2, "hyperplane" = fixed line; a vector v = (x,y) lies on
            // it iff x*y0 - y*x0 = 0.
            let (x0, y0) = g.eigenvector(&one);
            let form = (y0, -&x0);
            let dup = normals.iter().any(|(a, b)| {
                // proportional forms cut the same line
                (&(a * &form.1) - &(b * &form.0)).is_zero()
            });
            if !dup {
                normals.push(form);
            }
        }
        normals
    }

    /// True iff the vector avoids every reflecting hyperplane.
    pub fn is_regular_vector(
        &self,
        v: &(Cyclotomic, Cyclotomic),
        normals: &[(Cyclotomic, Cyclotomic)],
    ) -> bool {
        normals
            .iter()
            .all(|(a, b)| !(&(a * &v.0) + &(b * &v.1)).is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_sizes() {
        for p in [3u32, 4, 5, 6] {
            let g = dihedral_group(p).unwrap();
            assert_eq!(g.order(), 2 * p as u64);
            assert_eq!(g.class_sizes.iter().sum::<u64>(), 2 * p as u64);
            // number of irreducibles equals number of classes
            assert_eq!(g.irreps.len(), g.class_reps.len());
            // sum of squares of dimensions equals the order
            let sumsq: i64 = g
                .irreps
                .iter()
                .map(|(_, vals)| {
                    let d = vals[g.identity_class].as_integer().unwrap();
                    d * d
                })
                .sum();
            assert_eq!(sumsq as u64, g.order());
        }
    }

    #[test]
    fn dihedral_table_values_match_rotation_formulas() {
        // chi_k on the rotation diag(z, z^-1) is z^k + z^-k and 0 on
        // reflections; the sign character is -1 exactly on reflections.
        let p = 5u32;
        let g = dihedral_group(p).unwrap();
        for (label, vals) in &g.irreps {
            for (cls, &rep) in g.class_reps.iter().enumerate() {
                let mat = &g.elements[rep];
                let expected = match label {
                    IrrLabel::Dihedral(DihedralName::Triv) => Cyclotomic::one(),
                    IrrLabel::Dihedral(DihedralName::Sign) => {
                        if mat.is_diagonal() {
                            Cyclotomic::one()
                        } else {
                            Cyclotomic::from_int(-1)
                        }
                    }
                    IrrLabel::Dihedral(DihedralName::Chi(k)) => {
                        if mat.is_diagonal() {
                            let z = mat.e[0][0].clone();
                            z.pow(*k as u64) + z.conj().pow(*k as u64)
                        } else {
                            Cyclotomic::zero()
                        }
                    }
                    _ => continue,
                };
                assert_eq!(vals[cls], expected, "{label:?} at class {cls}");
            }
        }
    }

    #[test]
    fn imprimitive_sizes() {
        for p in [2u32, 3, 4] {
            let g = imprimitive2_group(p).unwrap();
            assert_eq!(g.order(), 8 * p as u64);
            assert_eq!(g.irreps.len(), g.class_reps.len());
            let sumsq: i64 = g
                .irreps
                .iter()
                .map(|(_, vals)| {
                    let d = vals[g.identity_class].as_integer().unwrap();
                    d * d
                })
                .sum();
            assert_eq!(sumsq as u64, g.order());
        }
    }

    #[test]
    fn dihedral_hyperplanes() {
        // G(p,p,2) has p reflecting hyperplanes
        for p in [3u32, 4, 5] {
            let g = dihedral_group(p).unwrap();
            assert_eq!(g.hyperplane_normals().len(), p as usize);
        }
        // G(2p,p,2) has 2p+2
        for p in [2u32, 3] {
            let g = imprimitive2_group(p).unwrap();
            assert_eq!(g.hyperplane_normals().len(), 2 * p as usize + 2);
        }
    }

    #[test]
    fn eigenspace_dims() {
        let m = Mat2::diag(Cyclotomic::root(3, 1), Cyclotomic::root(3, 2));
        assert_eq!(m.eigenspace_dim(&Cyclotomic::root(3, 1)), 1);
        assert_eq!(m.eigenspace_dim(&Cyclotomic::one()), 0);
        assert_eq!(Mat2::identity().eigenspace_dim(&Cyclotomic::one()), 2);
        let swap = Mat2::anti(Cyclotomic::one(), Cyclotomic::one());
        assert_eq!(swap.eigenspace_dim(&Cyclotomic::from_int(-1)), 1);
        assert_eq!(swap.eigenspace_dim(&Cyclotomic::one()), 1);
    }
}
