//! Eigenvalue contributions of spherical representations, branching data and
//! the multiplicity bookkeeping for the first eigenvalue.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{verify, Error, Result};
use crate::exact::{int, rat, ser, ExactMatrix, Rat};
use crate::lie::{a1xa1, a2_in_g2, b3, g2, sigma_pair, RootSystemData, SystemKind, Weight};
use crate::model::Model;
use crate::reps::{laplace_on_invariants, minus_casimir, AffineOperator, InvariantSpace};
use crate::so7::Case;

/// Squared radii `(s1, s2, s3) = (r1², r2², r3²)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MetricParams(#[serde(serialize_with = "ser::rats")] pub [Rat; 3]);

impl MetricParams {
    pub fn new(s: [Rat; 3]) -> Result<Self> {
        if s.iter().any(|x| !x.is_positive()) {
            return Err(Error::Invalid("squared radii must be positive".into()));
        }
        Ok(MetricParams(s))
    }

    pub fn from_ints(s: [i64; 3]) -> Result<Self> {
        Self::new(s.map(int))
    }
}

/// `s = t² · s0` along the symmetric family.
pub fn symmetric_family(case: Case, t_squared: &Rat) -> Result<MetricParams> {
    if !t_squared.is_positive() {
        return Err(Error::Invalid("t² must be positive".into()));
    }
    Ok(MetricParams(
        symmetric_base(case).map(|c| int(c) * t_squared),
    ))
}

pub fn symmetric_base(case: Case) -> [i64; 3] {
    match case {
        Case::Gr27 => [6, 3, 2],
        Case::Gr38 => [12, 4, 3],
    }
}

/// `t²` at which the symmetric family is the standard normal metric.
pub fn normal_t_squared(case: Case) -> Rat {
    match case {
        Case::Gr27 => rat(2, 5),
        Case::Gr38 => rat(5, 18),
    }
}

/// One fixed vector: the eigenvalue is `(λ_g - υ - λ_k) s1 + υ s2 + λ_k s3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigContribution {
    pub irrep: String,
    #[serde(serialize_with = "ser::rat")]
    pub lambda_g: Rat,
    #[serde(serialize_with = "ser::rat")]
    pub upsilon: Rat,
    #[serde(serialize_with = "ser::rat")]
    pub lambda_k: Rat,
    pub dim: u64,
    #[serde(rename = "dimVH")]
    pub dim_vh: usize,
}

impl EigContribution {
    pub fn coefficients(&self) -> [Rat; 3] {
        [
            &self.lambda_g - &self.upsilon - &self.lambda_k,
            self.upsilon.clone(),
            self.lambda_k.clone(),
        ]
    }

    pub fn closed_form(&self) -> String {
        let c = self.coefficients();
        linear_form_string(&c)
    }
}

pub fn linear_form_string(c: &[Rat; 3]) -> String {
    let terms: Vec<String> = c
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| format!("({})*s{}", crate::exact::fmt_rat(x), i + 1))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// `(λ_g - υ - λ_k) s1 + υ s2 + λ_k s3`; only for a single fixed vector.
pub fn eigenvalue_closed_form(c: &EigContribution, s: &MetricParams) -> Result<Rat> {
    if c.dim_vh != 1 {
        return Err(Error::Invalid(format!(
            "{} has {} fixed vectors; use the operator",
            c.irrep, c.dim_vh
        )));
    }
    Ok(c.coefficients().iter().zip(&s.0).map(|(a, b)| a * b).sum())
}

/// A highest weight given by Dynkin labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Irrep {
    pub system: SystemKind,
    pub labels: &'static [u32],
}

impl Irrep {
    pub fn root_system(&self) -> RootSystemData {
        match self.system {
            SystemKind::B3 => b3(),
            SystemKind::G2 => g2(),
            SystemKind::A2InG2 => a2_in_g2(),
            SystemKind::A1xA1 => a1xa1(),
        }
    }

    pub fn weight(&self) -> Weight {
        self.root_system().weight_from_labels(self.labels)
    }

    pub fn dim(&self) -> Result<u64> {
        self.root_system().weyl_dim(&self.weight())
    }

    pub fn casimir(&self, scale: &Rat) -> Result<Rat> {
        self.root_system().casimir_scalar(&self.weight(), scale)
    }
}

/// A spherical representation of G realized inside one of the model's modules.
#[derive(Clone, Debug, Serialize)]
pub struct ComponentSpec {
    pub label: &'static str,
    pub irrep: Irrep,
    /// Model representation containing it, separated by its Casimir eigenvalue.
    pub rep: &'static str,
    /// K-type carrying the fixed vectors and the scale of its Casimir formula,
    /// when there is exactly one.
    pub k_type: Option<(Irrep, (i64, i64))>,
}

pub fn component_specs(case: Case) -> Vec<ComponentSpec> {
    const G2: SystemKind = SystemKind::G2;
    const B3: SystemKind = SystemKind::B3;
    const A2: SystemKind = SystemKind::A2InG2;
    match case {
        Case::Gr27 => vec![
            ComponentSpec {
                label: "ω1",
                irrep: Irrep {
                    system: G2,
                    labels: &[1, 0],
                },
                rep: "g2-standard",
                k_type: Some((
                    Irrep {
                        system: A2,
                        labels: &[0, 0],
                    },
                    (3, 4),
                )),
            },
            ComponentSpec {
                label: "ω2",
                irrep: Irrep {
                    system: G2,
                    labels: &[0, 1],
                },
                rep: "g2-adjoint",
                k_type: Some((
                    Irrep {
                        system: A2,
                        labels: &[1, 1],
                    },
                    (3, 4),
                )),
            },
        ],
        Case::Gr38 => vec![
            ComponentSpec {
                label: "ω3",
                irrep: Irrep {
                    system: B3,
                    labels: &[0, 0, 1],
                },
                rep: "spin",
                k_type: Some((
                    Irrep {
                        system: G2,
                        labels: &[0, 0],
                    },
                    (4, 5),
                )),
            },
            ComponentSpec {
                label: "ω1+ω3",
                irrep: Irrep {
                    system: B3,
                    labels: &[1, 0, 1],
                },
                rep: "tensor",
                k_type: Some((
                    Irrep {
                        system: G2,
                        labels: &[2, 0],
                    },
                    (4, 5),
                )),
            },
            ComponentSpec {
                label: "2ω1",
                irrep: Irrep {
                    system: B3,
                    labels: &[2, 0, 0],
                },
                rep: "sym2-standard",
                k_type: Some((
                    Irrep {
                        system: G2,
                        labels: &[2, 0],
                    },
                    (4, 5),
                )),
            },
            ComponentSpec {
                label: "2ω3",
                irrep: Irrep {
                    system: B3,
                    labels: &[0, 0, 2],
                },
                rep: "sym2-spin",
                k_type: None,
            },
        ],
    }
}

/// Everything computed for one spherical representation.
#[derive(Clone, Debug)]
pub struct ComponentData {
    pub spec: ComponentSpec,
    pub dim: u64,
    /// Casimir scalar from the highest weight.
    pub lambda_g: Rat,
    pub space: InvariantSpace,
    pub operator: AffineOperator,
    /// Gram matrix of `space` for the invariant Hermitian form.
    pub gram: ExactMatrix,
}

impl ComponentData {
    pub fn contribution(&self) -> Option<EigContribution> {
        let [a1, a2, a3] = self.operator.scalar_coefficients()?;
        Some(EigContribution {
            irrep: self.spec.label.to_string(),
            lambda_g: &a1 + &a2 + &a3,
            upsilon: a2,
            lambda_k: a3,
            dim: self.dim,
            dim_vh: self.space.dim(),
        })
    }
}

/// Builds the fixed vectors and the Laplacian for a spherical representation,
/// checking the scalars against their highest-weight formulas.
pub fn compute_component(model: &Model, case: Case, spec: &ComponentSpec) -> Result<ComponentData> {
    let ic = model.case(case);
    let rep = model.rep(spec.rep)?;
    let dim = spec.irrep.dim()?;
    let lambda_g = spec.irrep.casimir(&Rat::one())?;
    let cg = minus_casimir(rep, &ic.g, &ic.form_scale)?;
    let space = rep.invariants_in_eigenspace(&ic.h, &cg, &lambda_g)?;
    let operator = laplace_on_invariants(rep, &space, &ic.g, &ic.k, &ic.p[1], &ic.form_scale)?;
    let gram = space.gram(rep);
    verify(operator.is_self_adjoint(&gram), || {
        format!("{}: operator is not self-adjoint", spec.label)
    })?;
    let n = space.dim();
    let total = &(&operator.a[0] + &operator.a[1]) + &operator.a[2];
    verify(
        total == ExactMatrix::identity(n).scale_rat(&lambda_g),
        || format!("{}: Casimir of g differs from the formula", spec.label),
    )?;
    if let Some((kt, (p, q))) = &spec.k_type {
        let lk = kt.casimir(&rat(*p, *q))?;
        verify(
            operator.a[2] == ExactMatrix::identity(n).scale_rat(&lk),
            || format!("{}: Casimir of k differs from the formula", spec.label),
        )?;
    }
    let data = ComponentData {
        spec: spec.clone(),
        dim,
        lambda_g,
        space,
        operator,
        gram,
    };
    Ok(data)
}

pub fn compute_components(model: &Model, case: Case) -> Result<Vec<ComponentData>> {
    component_specs(case)
        .iter()
        .map(|s| compute_component(model, case, s))
        .collect()
}

/// Contributions with a single fixed vector.
pub fn builtin_contributions(model: &Model, case: Case) -> Result<Vec<EigContribution>> {
    Ok(model
        .components(case)?
        .iter()
        .filter_map(ComponentData::contribution)
        .collect())
}

/// One row `big → Σ mult · sub` of a branching rule.
#[derive(Clone, Debug, Serialize)]
pub struct BranchingRow {
    pub from: String,
    pub labels: Vec<u32>,
    pub dim: u64,
    pub to: Vec<BranchingTerm>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BranchingTerm {
    pub irrep: String,
    pub labels: Vec<u32>,
    pub mult: u32,
    pub dim: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BranchingTable {
    pub case: Case,
    pub g_to_k: Vec<BranchingRow>,
    pub k_to_h: Vec<BranchingRow>,
    /// `dim V^H` of each K-type by Dynkin labels.
    pub k_fixed_dims: Vec<(Vec<u32>, u32)>,
    /// `dim V^H` implied for each G-irrep.
    pub g_fixed_dims: Vec<(String, u32)>,
}

type RowData<'a> = (&'a str, &'a [u32], &'a [(&'a [u32], u32)]);

fn audit_rows(big: SystemKind, small: SystemKind, rows: &[RowData]) -> Result<Vec<BranchingRow>> {
    let (gb, gs) = (
        Irrep {
            system: big,
            labels: &[],
        }
        .root_system(),
        Irrep {
            system: small,
            labels: &[],
        }
        .root_system(),
    );
    let mut out = Vec::new();
    for (name, labels, parts) in rows {
        let dim = gb.weyl_dim(&gb.weight_from_labels(labels))?;
        let mut to = Vec::new();
        for (l, mult) in parts.iter() {
            let w = if small == SystemKind::A1xA1 {
                sigma_pair(l[0], l[1])
            } else {
                gs.weight_from_labels(l)
            };
            let d = gs.weyl_dim(&w)?;
            let shown: Vec<String> = l.iter().map(u32::to_string).collect();
            to.push(BranchingTerm {
                irrep: format!("{}({})", gs.name, shown.join(",")),
                labels: l.to_vec(),
                mult: *mult,
                dim: d,
            });
        }
        let total: u64 = to.iter().map(|t| t.dim * u64::from(t.mult)).sum();
        if total != dim {
            return Err(Error::Verification(format!(
                "branching of {name}: {total} != {dim}"
            )));
        }
        out.push(BranchingRow {
            from: name.to_string(),
            labels: labels.to_vec(),
            dim,
            to,
        });
    }
    Ok(out)
}

fn implied_fixed_dims(
    g_to_k: &[BranchingRow],
    k_fixed: &[(Vec<u32>, u32)],
) -> Result<Vec<(String, u32)>> {
    g_to_k
        .iter()
        .map(|r| {
            let mut n = 0;
            for t in &r.to {
                let f = k_fixed
                    .iter()
                    .find(|(l, _)| *l == t.labels)
                    .ok_or_else(|| Error::Invalid(format!("no H-fixed data for {}", t.irrep)))?;
                n += t.mult * f.1;
            }
            Ok((r.from.clone(), n))
        })
        .collect()
}

/// Branching data, audited by Weyl dimensions.
pub fn branching_table(case: Case) -> Result<BranchingTable> {
    let (g_to_k, k_to_h, k_fixed_dims) = match case {
        Case::Gr38 => {
            let g_to_k = audit_rows(
                SystemKind::B3,
                SystemKind::G2,
                &[
                    ("ω3", &[0, 0, 1], &[(&[0, 0], 1), (&[1, 0], 1)]),
                    (
                        "ω1+ω3",
                        &[1, 0, 1],
                        &[(&[1, 0], 1), (&[0, 1], 1), (&[2, 0], 1)],
                    ),
                ],
            )?;
            let k_to_h = audit_rows(
                SystemKind::G2,
                SystemKind::A1xA1,
                &[
                    ("τ0", &[0, 0], &[(&[0, 0], 1)]),
                    ("τν1", &[1, 0], &[(&[1, 1], 1), (&[2, 0], 1)]),
                    ("τν2", &[0, 1], &[(&[2, 0], 1), (&[0, 2], 1), (&[3, 1], 1)]),
                    (
                        "τ2ν1",
                        &[2, 0],
                        &[
                            (&[0, 0], 1),
                            (&[1, 1], 1),
                            (&[2, 2], 1),
                            (&[3, 1], 1),
                            (&[4, 0], 1),
                        ],
                    ),
                ],
            )?;
            let k_fixed = k_to_h
                .iter()
                .map(|r| {
                    (
                        r.labels.clone(),
                        r.to.iter()
                            .filter(|t| t.labels == [0, 0])
                            .map(|t| t.mult)
                            .sum(),
                    )
                })
                .collect();
            (g_to_k, k_to_h, k_fixed)
        }
        Case::Gr27 => {
            let g_to_k = audit_rows(
                SystemKind::G2,
                SystemKind::A2InG2,
                &[
                    ("ω1", &[1, 0], &[(&[0, 0], 1), (&[1, 0], 1), (&[0, 1], 1)]),
                    ("ω2", &[0, 1], &[(&[1, 0], 1), (&[0, 1], 1), (&[1, 1], 1)]),
                ],
            )?;
            // U(2)-fixed vectors in the SU(3) types: one in the trivial and the adjoint type
            let k_fixed = vec![
                (vec![0, 0], 1),
                (vec![1, 0], 0),
                (vec![0, 1], 0),
                (vec![1, 1], 1),
            ];
            (g_to_k, Vec::new(), k_fixed)
        }
    };
    let g_fixed_dims = implied_fixed_dims(&g_to_k, &k_fixed_dims)?;
    Ok(BranchingTable {
        case,
        g_to_k,
        k_to_h,
        k_fixed_dims,
        g_fixed_dims,
    })
}

/// Fixed vectors of `H` in the `lambda`-eigenspace of the Casimir of a model module.
pub fn fixed_space(model: &Model, case: Case, lambda: &Rat, rep: &str) -> Result<InvariantSpace> {
    let ic = model.case(case);
    let rep = model.rep(rep)?;
    let cg = minus_casimir(rep, &ic.g, &ic.form_scale)?;
    rep.invariants_in_eigenspace(&ic.h, &cg, lambda)
}

/// Model module realizing a low-dimensional irrep, if any.
fn realization(system: SystemKind, labels: &[u32]) -> Option<&'static str> {
    match (system, labels) {
        (SystemKind::B3, [1, 0, 0]) => Some("standard"),
        (SystemKind::B3, [0, 1, 0]) => Some("adjoint"),
        (SystemKind::B3, [0, 0, 1]) => Some("spin"),
        (SystemKind::B3, [2, 0, 0]) => Some("sym2-standard"),
        (SystemKind::B3, [0, 0, 2]) => Some("sym2-spin"),
        (SystemKind::B3, [1, 0, 1]) => Some("tensor"),
        (SystemKind::G2, [1, 0]) => Some("g2-standard"),
        (SystemKind::G2, [0, 1]) => Some("g2-adjoint"),
        _ => None,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LowDimRow {
    pub labels: Vec<u32>,
    pub dim: u64,
    #[serde(serialize_with = "ser::rat")]
    pub casimir: Rat,
    /// Module in which `dim V^H` was computed; `None` for the trivial irrep.
    pub rep: Option<&'static str>,
    #[serde(rename = "dimVH")]
    pub dim_vh: usize,
}

/// Every irrep of G up to the dimension bound of the first-eigenvalue argument,
/// with `dim V^H` computed as a kernel.
pub fn low_dim_spherical(model: &Model, case: Case) -> Result<Vec<LowDimRow>> {
    let (system, bound) = match case {
        Case::Gr27 => (SystemKind::G2, 21),
        Case::Gr38 => (SystemKind::B3, 56),
    };
    let sys = Irrep {
        system,
        labels: &[],
    }
    .root_system();
    let mut rows = Vec::new();
    for d in sys.enumerate_dominant_by_dim(bound) {
        let casimir = sys.casimir_scalar(&d.weight, &Rat::one())?;
        if d.weight.is_zero() {
            rows.push(LowDimRow {
                labels: d.labels,
                dim: 1,
                casimir,
                rep: None,
                dim_vh: 1,
            });
            continue;
        }
        let rep = realization(system, &d.labels)
            .ok_or_else(|| Error::Invalid(format!("no model for {}{:?}", sys.name, d.labels)))?;
        let space = fixed_space(model, case, &casimir, rep)?;
        rows.push(LowDimRow {
            labels: d.labels,
            dim: d.dim,
            casimir,
            rep: Some(rep),
            dim_vh: space.dim(),
        });
    }
    Ok(rows)
}

#[derive(Clone, Debug, Serialize)]
pub struct MultiplicityProblem {
    pub labels: Vec<String>,
    pub dims: Vec<u64>,
    pub bounds: Vec<u32>,
    pub target: u64,
}

/// All `a` with `0 ≤ a_i ≤ bounds_i` and `Σ a_i dims_i = target`.
pub fn solve_multiplicities(p: &MultiplicityProblem) -> Vec<Vec<u32>> {
    fn go(
        p: &MultiplicityProblem,
        i: usize,
        rest: u64,
        acc: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if i == p.dims.len() {
            if rest == 0 {
                out.push(acc.clone());
            }
            return;
        }
        for a in 0..=p.bounds[i] {
            let used = u64::from(a) * p.dims[i];
            if used > rest {
                break;
            }
            acc.push(a);
            go(p, i + 1, rest - used, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(p, 0, p.target, &mut Vec::new(), &mut out);
    out
}

/// The multiplicity equation of the uniqueness argument, bounds from the kernels.
pub fn multiplicity_problem(model: &Model, case: Case) -> Result<MultiplicityProblem> {
    let order: &[&str] = match case {
        Case::Gr27 => &["ω1", "ω2"],
        Case::Gr38 => &["2ω1", "ω3", "ω1+ω3", "2ω3"],
    };
    let comps = model.components(case)?;
    let mut p = MultiplicityProblem {
        labels: Vec::new(),
        dims: Vec::new(),
        bounds: Vec::new(),
        target: 0,
    };
    for l in order {
        let c = comps
            .iter()
            .find(|c| c.spec.label == *l)
            .expect("listed component");
        p.labels.push(l.to_string());
        p.dims.push(c.dim);
        p.bounds.push(c.space.dim() as u32);
    }
    p.target = first_eigenvalue_report(model, case)?.multiplicity;
    Ok(p)
}

pub fn multiplicity_equation_solutions(model: &Model, case: Case) -> Result<Vec<Vec<u32>>> {
    Ok(solve_multiplicities(&multiplicity_problem(model, case)?))
}

#[derive(Clone, Debug, Serialize)]
pub struct FirstEigenvalueReport {
    pub case: Case,
    pub s: MetricParams,
    #[serde(serialize_with = "ser::rat")]
    pub lambda1: Rat,
    pub multiplicity: u64,
    pub attained_by: Vec<String>,
}

/// Smallest eigenvalue among the spherical components at the normal metric.
pub fn first_eigenvalue_report(model: &Model, case: Case) -> Result<FirstEigenvalueReport> {
    let s = symmetric_family(case, &normal_t_squared(case))?;
    first_eigenvalue_at(model, case, &s)
}

/// Smallest eigenvalue contributed by the modelled components at `s`.
pub fn first_eigenvalue_at(
    model: &Model,
    case: Case,
    s: &MetricParams,
) -> Result<FirstEigenvalueReport> {
    let comps = model.components(case)?;
    let mut scalar = Vec::new();
    for c in comps {
        if let Some(e) = c.contribution() {
            scalar.push((e.irrep.clone(), e.dim, eigenvalue_closed_form(&e, s)?));
        }
    }
    let lambda1 = scalar
        .iter()
        .map(|x| x.2.clone())
        .min()
        .ok_or_else(|| Error::Invalid("no components".into()))?;
    let mut multiplicity = 0;
    let mut attained_by = Vec::new();
    for (label, dim, v) in &scalar {
        if *v == lambda1 {
            multiplicity += dim;
            attained_by.push(label.clone());
        }
    }
    for c in comps.iter().filter(|c| c.space.dim() > 1) {
        let p = c.operator.char_poly_at(&s.0)?;
        let below =
            crate::exact::sturm::count_roots(&p, &-(p.cauchy_bound() + Rat::one()), &lambda1)?;
        if p.eval(&lambda1).is_zero() {
            multiplicity += c.dim;
            attained_by.push(c.spec.label.to_string());
        } else if below > 0 {
            return Err(Error::Verification(format!(
                "{} has an eigenvalue below the scalar ones",
                c.spec.label
            )));
        }
    }
    Ok(FirstEigenvalueReport {
        case,
        s: s.clone(),
        lambda1,
        multiplicity,
        attained_by,
    })
}

/// Checks of the two explicit fixed vectors in standard ⊗ spin.
#[derive(Clone, Debug, Serialize)]
pub struct TensorLemmaReport {
    pub fixed_dim: usize,
    pub span_matches: bool,
    /// `w1 + 2 w2` lies in the spin component.
    pub spin_vector: bool,
    /// `-3 w1 + 8 w2` lies in the 48-dimensional component.
    pub big_vector: bool,
    pub upsilon_scalar: Option<String>,
}

impl TensorLemmaReport {
    pub fn passed(&self) -> bool {
        self.fixed_dim == 2
            && self.span_matches
            && self.spin_vector
            && self.big_vector
            && self.upsilon_scalar.as_deref() == Some("9/40")
    }
}

pub fn tensor_lemma_vectors(model: &Model) -> Result<[ExactMatrix; 2]> {
    use crate::exact::GaussRat;
    let g = |n: i64| GaussRat::from_int(n);
    let t = &model.tensor;
    let w1 = t.vector(&[
        (g(1), "u_e1⊗v_-w"),
        (g(-4), "u_-e2⊗v_w-e3"),
        (g(2), "u_e2⊗v_e3-w"),
        (g(8), "u_-e1⊗v_w"),
    ])?;
    let w2 = t.vector(&[
        (g(1), "u_e3⊗v_e2-w"),
        (g(-2), "u_0⊗v_w-e1"),
        (g(1), "u_0⊗v_e1-w"),
        (g(2), "u_-e3⊗v_w-e2"),
    ])?;
    Ok([w1, w2])
}

pub fn tensor_lemma_check(model: &Model) -> Result<TensorLemmaReport> {
    use crate::exact::GaussRat;
    use crate::reps::tricky_term;
    let ic = &model.gr38;
    let t = &model.tensor;
    let fixed = t.invariants(&ic.h)?;
    let [w1, w2] = tensor_lemma_vectors(model)?;
    let cg = minus_casimir(t, &ic.g, &ic.form_scale)?;
    let is_eigen = |v: &ExactMatrix, l: Rat| &cg * v == v.scale(&GaussRat::real(l));
    let spin_vector = is_eigen(&(&w1 + &w2.scale(&GaussRat::from_int(2))), rat(21, 40));
    let big_vector = is_eigen(
        &(&w1.scale(&GaussRat::from_int(-3)) + &w2.scale(&GaussRat::from_int(8))),
        rat(49, 40),
    );
    let span_matches = fixed.same_span(&[w1.clone(), w2.clone()]);
    let up = crate::reps::restrict_operator(&tricky_term(t, &ic.p[1], &ic.form_scale)?, &fixed)?;
    let upsilon_scalar = AffineOperator {
        a: [up.clone(), up.clone(), up],
    }
    .scalar_coefficients()
    .map(|c| crate::exact::fmt_rat(&c[0]));
    Ok(TensorLemmaReport {
        fixed_dim: fixed.dim(),
        span_matches,
        spin_vector,
        big_vector,
        upsilon_scalar,
    })
}

/// The machine-readable summary of one case.
#[derive(Clone, Debug, Serialize)]
pub struct SpectraReport {
    pub case: Case,
    pub contributions: Vec<ContributionRow>,
    pub symmetric_point: MetricParams,
    #[serde(serialize_with = "ser::rat")]
    pub lambda1: Rat,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ContributionRow {
    #[serde(flatten)]
    pub contribution: EigContribution,
    pub closed_form: String,
}

pub fn spectra_report(model: &Model, case: Case) -> Result<SpectraReport> {
    let contributions = builtin_contributions(model, case)?
        .into_iter()
        .map(|c| ContributionRow {
            closed_form: c.closed_form(),
            contribution: c,
        })
        .collect();
    let first = first_eigenvalue_report(model, case)?;
    Ok(SpectraReport {
        case,
        contributions,
        symmetric_point: symmetric_family(case, &Rat::one())?,
        lambda1: first.lambda1,
        multiplicity: first.multiplicity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::model;
    use crate::reps::QuadraticForm;
    use proptest::prelude::*;

    fn contribution(case: Case, label: &str) -> EigContribution {
        builtin_contributions(model().unwrap(), case)
            .unwrap()
            .into_iter()
            .find(|c| c.irrep == label)
            .unwrap()
    }

    fn s(a: Rat, b: Rat, c: Rat) -> MetricParams {
        MetricParams::new([a, b, c]).unwrap()
    }

    #[test]
    fn builtin_scalars() {
        let expect = [
            (Case::Gr27, "ω1", rat(1, 2), rat(1, 6), rat(0, 1), 7),
            (Case::Gr27, "ω2", rat(1, 1), rat(1, 6), rat(3, 4), 14),
            (Case::Gr38, "ω3", rat(21, 40), rat(9, 40), rat(0, 1), 8),
            (
                Case::Gr38,
                "ω1+ω3",
                rat(49, 40),
                rat(9, 40),
                rat(14, 15),
                48,
            ),
            (Case::Gr38, "2ω1", rat(7, 5), rat(0, 1), rat(14, 15), 27),
        ];
        for (case, label, lg, up, lk, dim) in expect {
            let c = contribution(case, label);
            assert_eq!(
                (c.lambda_g, c.upsilon, c.lambda_k, c.dim, c.dim_vh),
                (lg, up, lk, dim, 1),
                "{label}"
            );
        }
        assert_eq!(
            contribution(Case::Gr27, "ω2").coefficients(),
            [rat(1, 12), rat(1, 6), rat(3, 4)]
        );
        assert_eq!(
            contribution(Case::Gr38, "2ω1").closed_form(),
            "(7/15)*s1 + (14/15)*s3"
        );
    }

    #[test]
    fn closed_form_examples() {
        let spin = contribution(Case::Gr38, "ω3");
        let big = contribution(Case::Gr38, "ω1+ω3");
        assert_eq!(
            eigenvalue_closed_form(&spin, &MetricParams::from_ints([12, 4, 3]).unwrap()).unwrap(),
            rat(9, 2)
        );
        let w1 = contribution(Case::Gr27, "ω1");
        assert_eq!(
            eigenvalue_closed_form(&w1, &MetricParams::from_ints([6, 3, 2]).unwrap()).unwrap(),
            rat(5, 2)
        );
        let normal = s(rat(10, 3), rat(10, 9), rat(5, 6));
        assert_eq!(eigenvalue_closed_form(&spin, &normal).unwrap(), rat(5, 4));
        assert_eq!(eigenvalue_closed_form(&big, &normal).unwrap(), rat(5, 4));
        let mut two = spin.clone();
        two.dim_vh = 2;
        assert!(eigenvalue_closed_form(&two, &normal).is_err());
        assert!(MetricParams::from_ints([1, 0, 1]).is_err());
    }

    #[test]
    fn block_for_2w3() {
        let comps = model().unwrap().components(Case::Gr38).unwrap();
        let block = comps.iter().find(|c| c.spec.label == "2ω3").unwrap();
        assert_eq!(
            (block.dim, block.space.dim(), block.lambda_g.clone()),
            (35, 2, rat(6, 5))
        );
        assert!(block.contribution().is_none());
        assert_eq!(block.operator.pairwise_commute(), [false, false, false]);
        assert_eq!(
            block.operator.trace_form().unwrap(),
            [rat(13, 15), rat(3, 5), rat(14, 15)]
        );
        let disc = QuadraticForm::from_ints([97, 81, 196, 18, -212, -180]).scale(&rat(1, 900));
        assert_eq!(block.operator.reduced_discriminant().unwrap(), disc);
        let p = block
            .operator
            .char_poly_at(&[int(12), int(4), int(3)])
            .unwrap();
        assert!(p.eval(&rat(24, 5)).is_zero() && p.eval(&rat(54, 5)).is_zero());
    }

    #[test]
    fn branching_rows_and_fixed_dims() {
        let t = branching_table(Case::Gr38).unwrap();
        let big = &t.g_to_k[1];
        assert_eq!(
            big.to.iter().map(|x| x.dim).collect::<Vec<_>>(),
            vec![7, 14, 27]
        );
        assert_eq!(big.dim, 48);
        let t2 = &t.k_to_h[3];
        assert_eq!(
            t2.to.iter().map(|x| x.irrep.as_str()).collect::<Vec<_>>()[4],
            "A1xA1(4,0)"
        );
        let m = model().unwrap();
        for case in Case::ALL {
            let t = branching_table(case).unwrap();
            let comps = m.components(case).unwrap();
            for (name, n) in &t.g_fixed_dims {
                let c = comps.iter().find(|c| c.spec.label == name).unwrap();
                assert_eq!(*n as usize, c.space.dim(), "{case} {name}");
            }
        }
    }

    #[test]
    fn families_and_first_eigenvalue() {
        assert_eq!(
            symmetric_family(Case::Gr27, &Rat::one()).unwrap(),
            MetricParams::from_ints([6, 3, 2]).unwrap()
        );
        assert_eq!(
            symmetric_family(Case::Gr38, &Rat::one()).unwrap(),
            MetricParams::from_ints([12, 4, 3]).unwrap()
        );
        assert_eq!(
            symmetric_family(Case::Gr27, &rat(2, 5)).unwrap(),
            s(rat(12, 5), rat(6, 5), rat(4, 5))
        );
        let m = model().unwrap();
        let r = first_eigenvalue_report(m, Case::Gr27).unwrap();
        assert_eq!((r.lambda1, r.multiplicity), (int(1), 21));
        let r = first_eigenvalue_report(m, Case::Gr38).unwrap();
        assert_eq!((r.lambda1, r.multiplicity), (rat(5, 4), 56));
        assert_eq!(r.attained_by, vec!["ω3", "ω1+ω3"]);
    }

    #[test]
    fn multiplicity_search() {
        let m = model().unwrap();
        assert_eq!(
            multiplicity_equation_solutions(m, Case::Gr27).unwrap(),
            vec![vec![1, 1]]
        );
        let p = multiplicity_problem(m, Case::Gr38).unwrap();
        assert_eq!(
            (p.dims.clone(), p.bounds.clone(), p.target),
            (vec![27, 8, 48, 35], vec![1, 1, 1, 2], 56)
        );
        assert_eq!(solve_multiplicities(&p), vec![vec![0, 1, 1, 0]]);
        let zero = MultiplicityProblem { target: 0, ..p };
        assert_eq!(solve_multiplicities(&zero), vec![vec![0, 0, 0, 0]]);
    }

    #[test]
    fn low_dimensional_irreps() {
        let m = model().unwrap();
        let rows = low_dim_spherical(m, Case::Gr38).unwrap();
        let got: Vec<(Vec<u32>, u64, usize)> = rows
            .iter()
            .map(|r| (r.labels.clone(), r.dim, r.dim_vh))
            .collect();
        assert_eq!(got.len(), 7);
        for (l, d, v) in [
            (vec![0, 0, 0], 1, 1),
            (vec![1, 0, 0], 7, 0),
            (vec![0, 0, 1], 8, 1),
            (vec![0, 1, 0], 21, 0),
            (vec![2, 0, 0], 27, 1),
            (vec![0, 0, 2], 35, 2),
            (vec![1, 0, 1], 48, 1),
        ] {
            assert!(got.contains(&(l.clone(), d, v)), "{l:?}");
        }
        let rows = low_dim_spherical(m, Case::Gr27).unwrap();
        let got: Vec<(u64, usize)> = rows.iter().map(|r| (r.dim, r.dim_vh)).collect();
        assert_eq!(got, vec![(1, 1), (7, 1), (14, 1)]);
    }

    #[test]
    fn tensor_fixed_vectors() {
        let m = model().unwrap();
        let r = tensor_lemma_check(m).unwrap();
        assert!(r.passed(), "{r:?}");
        // fixed vectors only touch weights vanishing on the torus of h
        let fixed = m.tensor.invariants(&m.gr38.h).unwrap();
        for v in &fixed.basis {
            for (k, x) in v.column(0).iter().enumerate() {
                if !x.is_zero() {
                    assert!(m.tensor.weight_on(k, &[1, -1, 2]).unwrap().is_zero());
                    assert!(m.tensor.weight_on(k, &[-1, -1, 0]).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn report_serializes() {
        let r = spectra_report(model().unwrap(), Case::Gr27).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["contributions"][0]["lambda_g"], "1/2");
        assert_eq!(v["contributions"][0]["dimVH"], 1);
        assert_eq!(v["lambda1"], "1");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn positive_and_homogeneous(a in 1i64..200, b in 1i64..200, c in 1i64..200, d in 1i64..50, t in 1i64..30) {
            let m = model().unwrap();
            let p = s(rat(a, d), rat(b, d), rat(c, d));
            let scaled = MetricParams(p.0.clone().map(|x| x * rat(t, 7)));
            for case in Case::ALL {
                for c in builtin_contributions(m, case).unwrap() {
                    let v = eigenvalue_closed_form(&c, &p).unwrap();
                    prop_assert!(v.is_positive());
                    prop_assert!(c.coefficients().iter().all(|x| !x.is_negative()));
                    prop_assert_eq!(eigenvalue_closed_form(&c, &scaled).unwrap(), v * rat(t, 7));
                }
            }
        }

        #[test]
        fn symmetric_points_coincide(n in 1i64..100, d in 1i64..100) {
            let m = model().unwrap();
            for (case, pair) in [(Case::Gr27, ["ω1", "ω2"]), (Case::Gr38, ["ω3", "ω1+ω3"])] {
                let p = symmetric_family(case, &rat(n, d)).unwrap();
                let cs = builtin_contributions(m, case).unwrap();
                let val = |l: &str| eigenvalue_closed_form(cs.iter().find(|c| c.irrep == l).unwrap(), &p).unwrap();
                prop_assert_eq!(val(pair[0]), val(pair[1]));
            }
        }
    }
}
