//! The two homogeneous spaces G/H with their intermediate group K and the
//! decomposition p = p1 ⊕ p2 ⊕ p3 of the isotropy representation.
//!
//! Gr27 is G2/U(2) with K = SU(3), realized inside the embedded G2.
//! Gr38 is Spin(7)/SO(4) with K = G2.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::subalgebra::{
    build_g2_subalgebra, is_real_irreducible, so7_basis, G2Subalgebra, SubalgebraBasis,
};
use super::{AlgebraElement, ChevalleyBasis, Root};
use crate::error::{Error, Result};
use crate::exact::{int, rat, GaussRat, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Case {
    Gr27,
    Gr38,
}

impl Case {
    pub const ALL: [Case; 2] = [Case::Gr27, Case::Gr38];

    pub fn name(self) -> &'static str {
        match self {
            Case::Gr27 => "Gr27",
            Case::Gr38 => "Gr38",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Case::Gr27 => "Gr(2,7) = G2/U(2), K = SU(3)",
            Case::Gr38 => "Gr(3,8) = Spin(7)/SO(4), K = G2",
        }
    }

    pub fn manifold_dim(self) -> u32 {
        match self {
            Case::Gr27 => 10,
            Case::Gr38 => 15,
        }
    }

    pub fn p_dims(self) -> [usize; 3] {
        match self {
            Case::Gr27 => [4, 2, 4],
            Case::Gr38 => [4, 3, 8],
        }
    }

    /// The invariant form on g used for all Casimirs, as a multiple of κ of so(7).
    /// For Gr27 it is the Killing form of g2, which is 4/5 of κ restricted.
    pub fn form_scale(self) -> Rat {
        match self {
            Case::Gr27 => rat(4, 5),
            Case::Gr38 => int(1),
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Case {
    type Err = Error;
    fn from_str(s: &str) -> Result<Case> {
        match s
            .to_ascii_lowercase()
            .replace(['(', ')', ',', ' ', '-', '_'], "")
            .as_str()
        {
            "gr27" => Ok(Case::Gr27),
            "gr38" => Ok(Case::Gr38),
            _ => Err(Error::Parse(format!(
                "unknown case {s:?} (expected gr27 or gr38)"
            ))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IsotropyReport {
    pub case: Case,
    pub dims: [usize; 3],
    pub h_dim: usize,
    pub h_closed: bool,
    pub p_invariant: [bool; 3],
    pub orthogonal: bool,
    pub g_is_direct_sum: bool,
    pub k_closed: bool,
    pub p3_brackets_in_k: bool,
    pub k_preserves_p1_p2: bool,
    pub irreducible: [bool; 3],
    /// `(a, b)` with `p_i ⊗ ℂ ≅ σ_a ⊗ σ_b` under the two sl2 factors of h (Gr38 only).
    pub h_module_types: Option<[(i64, i64); 3]>,
    pub failures: Vec<String>,
}

impl IsotropyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct IsotropyCase {
    pub case: Case,
    pub g: SubalgebraBasis,
    pub k: SubalgebraBasis,
    pub h: SubalgebraBasis,
    pub p: [SubalgebraBasis; 3],
    pub form_scale: Rat,
    pub report: IsotropyReport,
}

impl IsotropyCase {
    pub fn piece(&self, name: &str) -> Option<&SubalgebraBasis> {
        match name {
            "g" => Some(&self.g),
            "k" => Some(&self.k),
            "h" => Some(&self.h),
            "p1" => Some(&self.p[0]),
            "p2" => Some(&self.p[1]),
            "p3" => Some(&self.p[2]),
            _ => None,
        }
    }
}

fn named(items: Vec<(&str, AlgebraElement)>) -> Vec<(String, AlgebraElement)> {
    items.into_iter().map(|(n, x)| (n.to_string(), x)).collect()
}

fn half(x: &AlgebraElement) -> AlgebraElement {
    x.scale_rat(&rat(1, 2))
}

fn cartan_comb(basis: &ChevalleyBasis, c: [i64; 3]) -> AlgebraElement {
    AlgebraElement::combination(&c.map(GaussRat::from_int), &basis.cartan)
}

pub fn build_isotropy_case(case: Case, basis: &ChevalleyBasis) -> Result<IsotropyCase> {
    let g2 = build_g2_subalgebra(basis)?;
    build_isotropy_case_with(case, basis, &g2)
}

pub fn build_isotropy_case_with(
    case: Case,
    basis: &ChevalleyBasis,
    g2: &G2Subalgebra,
) -> Result<IsotropyCase> {
    let y = |a, b| (G2Subalgebra::y_name(a, b), g2.y(a, b).clone());
    let ys = |list: &[(i64, i64)]| -> Vec<(String, AlgebraElement)> {
        list.iter()
            .flat_map(|&(a, b)| [y(a, b), y(-a, -b)])
            .collect()
    };
    let x = |c: [i8; 3]| basis.x(Root(c)).clone();
    let (g, h, p1, p2, p3) = match case {
        Case::Gr27 => {
            let mut h = vec![
                ("Ha1".to_string(), g2.cartan[0].clone()),
                ("Ha2".to_string(), g2.cartan[1].clone()),
            ];
            h.extend(ys(&[(3, 1)]));
            (
                g2.basis.clone(),
                SubalgebraBasis::new("h", h)?,
                SubalgebraBasis::new("p1", ys(&[(1, 0), (2, 1)]))?,
                SubalgebraBasis::new("p2", ys(&[(1, 1)]))?,
                SubalgebraBasis::new("p3", ys(&[(0, 1), (3, 2)]))?,
            )
        }
        Case::Gr38 => {
            let mut h = vec![("Ha1".to_string(), g2.cartan[0].clone())];
            h.extend(ys(&[(1, 0)]));
            h.push(("H3a1+2a2".to_string(), cartan_comb(basis, [-1, -1, 0])));
            h.extend(ys(&[(3, 2)]));
            let p1 = named(vec![
                ("Xe2+e3-Xe1/2", &x([0, 1, 1]) - &half(&x([1, 0, 0]))),
                ("X-e2-e3-X-e1/2", &x([0, -1, -1]) - &half(&x([-1, 0, 0]))),
                ("Xe1-e3+Xe2/2", &x([1, 0, -1]) + &half(&x([0, 1, 0]))),
                ("X-e1+e3+X-e2/2", &x([-1, 0, 1]) + &half(&x([0, -1, 0]))),
            ]);
            let p2 = named(vec![
                ("H1-H2-H3", cartan_comb(basis, [1, -1, -1])),
                ("Xe1-e2-Xe3/2", &x([1, -1, 0]) - &half(&x([0, 0, 1]))),
                ("X-e1+e2-X-e3/2", &x([-1, 1, 0]) - &half(&x([0, 0, -1]))),
            ]);
            (
                so7_basis(basis)?,
                SubalgebraBasis::new("h", h)?,
                SubalgebraBasis::new("p1", p1)?,
                SubalgebraBasis::new("p2", p2)?,
                SubalgebraBasis::new("p3", ys(&[(0, 1), (1, 1), (2, 1), (3, 1)]))?,
            )
        }
    };
    let k = SubalgebraBasis::join("k", &[&h, &p3])?;
    let mut report = IsotropyReport {
        case,
        dims: [p1.dim(), p2.dim(), p3.dim()],
        h_dim: h.dim(),
        h_closed: false,
        p_invariant: [false; 3],
        orthogonal: false,
        g_is_direct_sum: false,
        k_closed: false,
        p3_brackets_in_k: false,
        k_preserves_p1_p2: false,
        irreducible: [false; 3],
        h_module_types: None,
        failures: Vec::new(),
    };
    let p = [p1, p2, p3];
    let fail = |report: &mut IsotropyReport, s: String| report.failures.push(s);

    if report.dims != case.p_dims() {
        let msg = format!("dimensions {:?}", report.dims);
        fail(&mut report, msg);
    }
    report.h_closed = h.is_closed();
    if !report.h_closed {
        fail(&mut report, "h is not a subalgebra".into());
    }
    for i in 0..3 {
        match h.first_bracket_outside(&p[i], &p[i]) {
            None => report.p_invariant[i] = true,
            Some((a, b)) => fail(&mut report, format!("[{a}, {b}] leaves p{}", i + 1)),
        }
    }
    let mut orthogonal = p.iter().all(|pi| h.is_kappa_orthogonal(pi));
    for i in 0..3 {
        for j in i + 1..3 {
            orthogonal &= p[i].is_kappa_orthogonal(&p[j]);
        }
    }
    report.orthogonal = orthogonal;
    if !orthogonal {
        fail(&mut report, "decomposition is not κ-orthogonal".into());
    }
    let total = SubalgebraBasis::join("h+p", &[&h, &p[0], &p[1], &p[2]]);
    report.g_is_direct_sum = total.is_ok()
        && h.dim() + p.iter().map(SubalgebraBasis::dim).sum::<usize>() == g.dim()
        && p.iter()
            .chain([&h])
            .all(|s| s.elements.iter().all(|e| g.contains(e)));
    if !report.g_is_direct_sum {
        fail(&mut report, "g != h + p1 + p2 + p3".into());
    }
    report.k_closed = k.is_closed();
    if !report.k_closed {
        fail(&mut report, "k = h + p3 is not a subalgebra".into());
    }
    report.p3_brackets_in_k = p[2].brackets_into(&p[2], &k);
    if !report.p3_brackets_in_k {
        fail(&mut report, "[p3, p3] leaves h + p3".into());
    }
    let q = SubalgebraBasis::join("p1+p2", &[&p[0], &p[1]])?;
    report.k_preserves_p1_p2 = k.brackets_into(&q, &q);
    if !report.k_preserves_p1_p2 {
        fail(&mut report, "[k, p1 + p2] leaves p1 + p2".into());
    }
    for i in 0..3 {
        report.irreducible[i] = report.p_invariant[i] && is_real_irreducible(&h, &p[i])?;
        if !report.irreducible[i] {
            fail(&mut report, format!("p{} is not irreducible", i + 1));
        }
    }
    if case == Case::Gr38 {
        let cartans = [h.elements[0].clone(), h.elements[3].clone()];
        let types: Option<Vec<(i64, i64)>> =
            p.iter().map(|pi| sl2_pair_type(&cartans, pi)).collect();
        report.h_module_types = types.map(|t| [t[0], t[1], t[2]]);
    }
    Ok(IsotropyCase {
        case,
        g,
        k,
        h,
        p,
        form_scale: case.form_scale(),
        report,
    })
}

/// Reads off `(a, b)` with `space ≅ σ_a ⊗ σ_b` from the joint eigenvalues of
/// two commuting sl2 coroots, when the basis consists of joint eigenvectors.
fn sl2_pair_type(cartans: &[AlgebraElement; 2], space: &SubalgebraBasis) -> Option<(i64, i64)> {
    let mut weights = Vec::new();
    for x in &space.elements {
        let mut w = [0i64; 2];
        for (k, h) in cartans.iter().enumerate() {
            let c = h.bracket(x);
            let e = if c.is_zero() {
                GaussRat::zero()
            } else {
                c.ratio_to(x)?
            };
            if !e.is_real() || !e.re.is_integer() {
                return None;
            }
            w[k] = i64::try_from(e.re.to_integer()).ok()?;
        }
        weights.push((w[0], w[1]));
    }
    let a = weights.iter().map(|w| w.0).max()?;
    let b = weights.iter().map(|w| w.1).max()?;
    let mut expected: Vec<(i64, i64)> = (0..=a)
        .flat_map(|i| (0..=b).map(move |j| (a - 2 * i, b - 2 * j)))
        .collect();
    expected.sort();
    weights.sort();
    (expected == weights).then_some((a, b))
}

/// Builds the case and fails with the first broken property.
pub fn build_verified_case(
    case: Case,
    basis: &ChevalleyBasis,
    g2: &G2Subalgebra,
) -> Result<IsotropyCase> {
    let c = build_isotropy_case_with(case, basis, g2)?;
    if !c.report.passed() {
        return Err(Error::Verification(format!(
            "{case}: {}",
            c.report.failures.join("; ")
        )));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::so7::build_so7_chevalley;

    #[test]
    fn both_cases_verify() {
        let b = build_so7_chevalley().unwrap();
        let g2 = build_g2_subalgebra(&b).unwrap();
        for case in Case::ALL {
            let c = build_verified_case(case, &b, &g2).unwrap();
            assert_eq!(c.report.dims, case.p_dims());
        }
        let gr38 = build_verified_case(Case::Gr38, &b, &g2).unwrap();
        assert_eq!(gr38.report.h_module_types, Some([(1, 1), (2, 0), (3, 1)]));
        assert_eq!(gr38.h.dim(), 6);
        assert_eq!(gr38.k.dim(), 14);
        let gr27 = build_verified_case(Case::Gr27, &b, &g2).unwrap();
        assert_eq!((gr27.h.dim(), gr27.k.dim(), gr27.g.dim()), (4, 8, 14));
    }

    #[test]
    fn bracket_and_pairing_values() {
        let b = build_so7_chevalley().unwrap();
        let g2 = build_g2_subalgebra(&b).unwrap();
        let c = build_verified_case(Case::Gr38, &b, &g2).unwrap();
        let p1 = &c.p[0];
        let p2 = &c.p[1];
        let v = p1.element_by_name("Xe2+e3-Xe1/2").unwrap();
        assert!(v.kappa(g2.y(-2, -1)).is_zero());
        // the bracket lands in p2 as H1 - H2 - H3
        let w = p2.element_by_name("X-e1+e2-X-e3/2").unwrap();
        let br = g2.y(1, 0).bracket(w);
        assert_eq!(&br, p2.element_by_name("H1-H2-H3").unwrap());
        assert_ne!(br, g2.cartan[0]);
    }

    #[test]
    fn dual_basis_of_p2() {
        let b = build_so7_chevalley().unwrap();
        let c = build_isotropy_case(Case::Gr38, &b).unwrap();
        let d = c.p[1].dual_basis(&c.form_scale).unwrap();
        assert_eq!(d.len(), 3);
        assert!("gr(2,7)".parse::<Case>().unwrap() == Case::Gr27);
        assert!("gr39".parse::<Case>().is_err());
    }
}
