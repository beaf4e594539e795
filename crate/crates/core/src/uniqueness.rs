//! Exact certification that the symmetric metric is the only one in the
//! three-parameter family sharing its first eigenvalue, its multiplicity and its volume.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::rational::{exact_root, rat_pow, sign};
use crate::exact::sturm::{approximate, refine_root, sturm_isolate, Domain, IsolatingInterval};
use crate::exact::{int, rat, ser, Rat, RatPoly};
use crate::model::Model;
use crate::so7::Case;
use crate::spectra::{builtin_contributions, symmetric_family, MetricParams};

/// `s1^d1 · s2^d2 · s3^d3` with `d = dim p_i`: the squared volume ratio to `s = (1,1,1)`.
pub fn volume_monomial(case: Case, s: &MetricParams) -> Rat {
    s.0.iter()
        .zip(case.p_dims())
        .map(|(x, d)| rat_pow(x, d as u32))
        .product()
}

/// `coeffs · s = value`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenEquation {
    pub irrep: String,
    #[serde(serialize_with = "ser::rats")]
    pub coeffs: [Rat; 3],
    #[serde(serialize_with = "ser::rat")]
    pub value: Rat,
}

impl EigenEquation {
    pub fn holds(&self, s: &[Rat; 3]) -> bool {
        self.coeffs.iter().zip(s).map(|(a, b)| a * b).sum::<Rat>() == self.value
    }
}

/// `s_i = offsets_i + slopes_i · t` with `t = s_variable`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Parametrization {
    pub variable: usize,
    #[serde(serialize_with = "ser::rats")]
    pub offsets: [Rat; 3],
    #[serde(serialize_with = "ser::rats")]
    pub slopes: [Rat; 3],
}

impl Parametrization {
    pub fn at(&self, t: &Rat) -> [Rat; 3] {
        std::array::from_fn(|i| &self.offsets[i] + &self.slopes[i] * t)
    }

    pub fn linear(&self, i: usize) -> RatPoly {
        RatPoly::linear(self.offsets[i].clone(), self.slopes[i].clone())
    }
}

/// `s_lhs = offset + factor · s_rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub lhs: usize,
    pub rhs: usize,
    #[serde(serialize_with = "ser::rat")]
    pub offset: Rat,
    #[serde(serialize_with = "ser::rat")]
    pub factor: Rat,
}

impl std::fmt::Display for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (o, c) = (
            crate::exact::fmt_rat(&self.offset),
            crate::exact::fmt_rat(&self.factor),
        );
        if self.offset.is_zero() {
            write!(f, "s{} = {c}*s{}", self.lhs + 1, self.rhs + 1)
        } else {
            write!(f, "s{} = {o} + ({c})*s{}", self.lhs + 1, self.rhs + 1)
        }
    }
}

/// A positive root of the eliminated polynomial and its fate.
#[derive(Clone, Debug, Serialize)]
pub struct RootRecord {
    pub interval: IsolatingInterval,
    pub approx: f64,
    /// `s` at the interval endpoints (equal when the root is exact).
    #[serde(serialize_with = "ser::rats")]
    pub s_at_lo: [Rat; 3],
    #[serde(serialize_with = "ser::rats")]
    pub s_at_hi: [Rat; 3],
    pub admissible: bool,
    /// Certified sign violations, e.g. `s1 < 0, s3 < 0`.
    pub excluded_by: Option<String>,
}

/// The same elimination in the radius variable `x` with `x² = t`:
/// `eliminated(x²) = reference(x) · cofactor(x)`.
#[derive(Clone, Debug, Serialize)]
pub struct ReferenceCheck {
    pub reference: RatPoly,
    pub cofactor: RatPoly,
    pub points: Vec<String>,
    pub identity_holds: bool,
    pub positive_roots: Vec<IsolatingInterval>,
}

#[derive(Clone, Debug, Serialize)]
pub struct UniquenessCertificate {
    pub case: Case,
    pub symmetric_point: MetricParams,
    pub equations: Vec<EigenEquation>,
    pub volume_exponents: [usize; 3],
    /// Squared volume ratio to match.
    #[serde(serialize_with = "ser::rat")]
    pub volume_target: Rat,
    pub parametrization: Parametrization,
    pub linear_relation: Option<Relation>,
    pub affine_relation: Relation,
    /// `Π s_i(t)^{d_i} - target`.
    pub volume_polynomial: RatPoly,
    /// The volume polynomial is `C Π L_j^{m_j}`; `root_degree = gcd(m_j)`.
    pub root_degree: u32,
    /// The univariate polynomial whose positive roots are examined.
    pub eliminated: RatPoly,
    pub reference: Option<ReferenceCheck>,
    /// `eliminated' = 5 t³ (t - 2)`, where that structure applies.
    pub derivative_identity: Option<bool>,
    pub positive_roots: Vec<RootRecord>,
    pub solutions: Vec<MetricParams>,
    /// Every recorded equation holds exactly at every solution.
    pub residuals_ok: bool,
}

impl UniquenessCertificate {
    /// Exactly one admissible solution, and it is the symmetric point.
    pub fn unique(&self) -> bool {
        self.solutions.len() == 1 && self.solutions[0] == self.symmetric_point
    }

    pub fn passed(&self) -> bool {
        self.unique()
            && self.residuals_ok
            && self.reference.as_ref().is_none_or(|r| r.identity_holds)
            && self.derivative_identity != Some(false)
    }
}

fn equation_irreps(case: Case) -> [&'static str; 2] {
    match case {
        Case::Gr27 => ["ω1", "ω2"],
        Case::Gr38 => ["ω3", "ω1+ω3"],
    }
}

fn elimination_variable(case: Case) -> usize {
    match case {
        Case::Gr27 => 2,
        Case::Gr38 => 1,
    }
}

/// Volume of the symmetric point, `Π s_i^{d_i/2}`, when rational.
pub fn symmetric_volume(case: Case) -> Result<Rat> {
    let s0 = symmetric_family(case, &Rat::one())?;
    exact_root(&volume_monomial(case, &s0), 2)
        .ok_or_else(|| Error::Invalid("volume is not rational".into()))
}

pub fn certify_uniqueness(model: &Model, case: Case) -> Result<UniquenessCertificate> {
    certify_with_volume(model, case, &symmetric_volume(case)?)
}

/// The pipeline with the volume `Π s_i^{d_i/2}` replaced by `volume`.
pub fn certify_with_volume(
    model: &Model,
    case: Case,
    volume: &Rat,
) -> Result<UniquenessCertificate> {
    if !volume.is_positive() {
        return Err(Error::Invalid("volume must be positive".into()));
    }
    let s0 = symmetric_family(case, &Rat::one())?;
    let contributions = builtin_contributions(model, case)?;
    let equations: Vec<EigenEquation> = equation_irreps(case)
        .iter()
        .map(|l| {
            let c = contributions
                .iter()
                .find(|c| c.irrep == *l)
                .expect("builtin contribution");
            let coeffs = c.coefficients();
            let value = coeffs.iter().zip(&s0.0).map(|(a, b)| a * b).sum();
            EigenEquation {
                irrep: l.to_string(),
                coeffs,
                value,
            }
        })
        .collect();
    let parametrization = solve_pair(&equations, elimination_variable(case))?;
    let linear_relation = find_relation(&parametrization, true);
    let affine_relation = relation(&parametrization, 0, 1)
        .ok_or_else(|| Error::Invalid("s1 and s2 are not related".into()))?;

    let exps = case.p_dims();
    let target = volume * volume;
    let factored = factor_volume(&parametrization, &exps)?;
    let mut volume_polynomial = RatPoly::constant(factored.constant.clone());
    for (c, m) in &factored.factors {
        volume_polynomial = &volume_polynomial * &RatPoly::linear(-c, Rat::one()).pow(*m);
    }
    volume_polynomial = &volume_polynomial - &RatPoly::constant(target.clone());
    let (eliminated, root_degree) = reduce(&factored, &target);

    let reference = match case {
        Case::Gr38 => Some(reference_check(&eliminated)?),
        Case::Gr27 => None,
    };
    let derivative_identity = match case {
        Case::Gr27 => {
            Some(eliminated.monic().derivative() == RatPoly::from_ints(&[0, 0, 0, -10, 5]))
        }
        Case::Gr38 => None,
    };

    let mut positive_roots = Vec::new();
    let mut solutions = Vec::new();
    for iv in sturm_isolate(&eliminated, &Domain::PositiveReals)? {
        let iv = refine_root(&eliminated, &iv, &rat(1, 1_000_000_000_000))?;
        let rec = classify_root(&eliminated, &parametrization, iv)?;
        if rec.admissible {
            if rec.interval.exact {
                solutions.push(MetricParams(rec.s_at_lo.clone()));
            } else {
                return Err(Error::Verification(format!(
                    "admissible irrational solution near t = {:.9}; the symmetric point is not unique",
                    rec.approx
                )));
            }
        }
        positive_roots.push(rec);
    }
    if solutions.len() > 1 {
        return Err(Error::Verification(format!(
            "{} admissible solutions",
            solutions.len()
        )));
    }
    let residuals_ok = solutions.iter().all(|s| {
        equations.iter().all(|e| e.holds(&s.0))
            && volume_monomial(case, s) == target
            && volume_polynomial
                .eval(&s.0[parametrization.variable])
                .is_zero()
    });
    Ok(UniquenessCertificate {
        case,
        symmetric_point: s0,
        equations,
        volume_exponents: exps,
        volume_target: target,
        parametrization,
        linear_relation,
        affine_relation,
        volume_polynomial,
        root_degree,
        eliminated,
        reference,
        derivative_identity,
        positive_roots,
        solutions,
        residuals_ok,
    })
}

/// Solves both equations for the two coordinates other than `variable`.
fn solve_pair(eqs: &[EigenEquation], variable: usize) -> Result<Parametrization> {
    let rest: Vec<usize> = (0..3).filter(|i| *i != variable).collect();
    let (i, j) = (rest[0], rest[1]);
    let (a, b) = (&eqs[0].coeffs, &eqs[1].coeffs);
    let det = &a[i] * &b[j] - &a[j] * &b[i];
    if det.is_zero() {
        return Err(Error::Singular);
    }
    // a_i s_i + a_j s_j = v_a - a_t t, likewise for b; Cramer's rule
    let solve = |ra: &Rat, rb: &Rat| -> [Rat; 2] {
        [
            (ra * &b[j] - rb * &a[j]) / &det,
            (&a[i] * rb - &b[i] * ra) / &det,
        ]
    };
    let constant = solve(&eqs[0].value, &eqs[1].value);
    let slope = solve(&-&a[variable], &-&b[variable]);
    let mut offsets: [Rat; 3] = std::array::from_fn(|_| Rat::zero());
    let mut slopes: [Rat; 3] = std::array::from_fn(|_| Rat::zero());
    slopes[variable] = Rat::one();
    for (k, idx) in [i, j].into_iter().enumerate() {
        offsets[idx] = constant[k].clone();
        slopes[idx] = slope[k].clone();
    }
    Ok(Parametrization {
        variable,
        offsets,
        slopes,
    })
}

fn relation(p: &Parametrization, lhs: usize, rhs: usize) -> Option<Relation> {
    if p.slopes[rhs].is_zero() {
        return None;
    }
    let factor = &p.slopes[lhs] / &p.slopes[rhs];
    let offset = &p.offsets[lhs] - &factor * &p.offsets[rhs];
    Some(Relation {
        lhs,
        rhs,
        offset,
        factor,
    })
}

/// A proportionality `s_i = c s_k` forced by the two equations.
fn find_relation(p: &Parametrization, homogeneous: bool) -> Option<Relation> {
    for (lhs, rhs) in [(0, 2), (0, 1), (1, 2)] {
        if let Some(r) = relation(p, lhs, rhs) {
            if !homogeneous || r.offset.is_zero() {
                return Some(r);
            }
        }
    }
    None
}

/// `Π s_i^{d_i} = constant · Π (t - c)^m`, with the sign each factor must
/// have where every `s_i` is positive.
struct FactoredVolume {
    constant: Rat,
    factors: Vec<(Rat, u32)>,
    signs: Vec<i32>,
    /// Some `s_i` cannot be positive.
    infeasible: bool,
}

fn factor_volume(p: &Parametrization, exps: &[usize; 3]) -> Result<FactoredVolume> {
    let mut constant = Rat::one();
    let mut factors: Vec<(Rat, u32)> = Vec::new();
    let mut signs: Vec<i32> = Vec::new();
    let mut infeasible = false;
    for i in 0..3 {
        let (a, b) = (&p.offsets[i], &p.slopes[i]);
        let d = exps[i] as u32;
        if b.is_zero() {
            infeasible |= !a.is_positive();
            constant *= rat_pow(a, d);
            continue;
        }
        constant *= rat_pow(b, d);
        let c = -(a / b);
        match factors.iter().position(|(r, _)| *r == c) {
            Some(k) => {
                factors[k].1 += d;
                infeasible |= signs[k] != sign(b);
            }
            None => {
                factors.push((c, d));
                signs.push(sign(b));
            }
        }
    }
    if factors.is_empty() {
        return Err(Error::Invalid(
            "volume does not depend on the free variable".into(),
        ));
    }
    Ok(FactoredVolume {
        constant,
        factors,
        signs,
        infeasible,
    })
}

/// `Π (t-c)^{m/e} - σ (target/C)^{1/e}` when the root is rational, else the full polynomial.
fn reduce(f: &FactoredVolume, target: &Rat) -> (RatPoly, u32) {
    let e = f.factors.iter().fold(0u32, |g, (_, m)| g.gcd(m));
    let full = || {
        let mut p = RatPoly::constant(f.constant.clone());
        for (c, m) in &f.factors {
            p = &p * &RatPoly::linear(-c, Rat::one()).pow(*m);
        }
        (&p - &RatPoly::constant(target.clone()), 1)
    };
    if f.infeasible {
        return full();
    }
    let ratio = target / &f.constant;
    let Some(root) = exact_root(&ratio.abs(), e) else {
        return full();
    };
    let mut sigma = 1;
    for ((_, m), s) in f.factors.iter().zip(&f.signs) {
        if (m / e) % 2 == 1 {
            sigma *= s;
        }
    }
    let value = if e % 2 == 0 {
        if ratio.is_negative() {
            return full();
        }
        root * int(sigma as i64)
    } else if ratio.is_negative() {
        -root
    } else {
        root
    };
    let mut r = RatPoly::constant(Rat::one());
    for (c, m) in &f.factors {
        r = &r * &RatPoly::linear(-c, Rat::one()).pow(m / e);
    }
    (&r - &RatPoly::constant(value), e)
}

fn classify_root(
    p: &RatPoly,
    param: &Parametrization,
    mut iv: IsolatingInterval,
) -> Result<RootRecord> {
    for _ in 0..200 {
        let (lo, hi) = (param.at(&iv.lo), param.at(&iv.hi));
        let decided = (0..3).all(|i| sign(&lo[i]) == sign(&hi[i]) && sign(&lo[i]) != 0) || iv.exact;
        if decided {
            let admissible = (0..3).all(|i| lo[i].is_positive() && hi[i].is_positive());
            let excluded_by = (!admissible).then(|| {
                let bad: Vec<String> = (0..3)
                    .filter(|i| !lo[*i].is_positive())
                    .map(|i| format!("s{} {} 0", i + 1, if lo[i].is_zero() { "=" } else { "<" }))
                    .collect();
                bad.join(", ")
            });
            return Ok(RootRecord {
                approx: approximate(&iv),
                interval: iv,
                s_at_lo: lo,
                s_at_hi: hi,
                admissible,
                excluded_by,
            });
        }
        let w = iv.width() / int(16);
        iv = refine_root(p, &iv, &w)?;
    }
    Err(Error::Verification(
        "could not separate a root from a coordinate hyperplane".into(),
    ))
}

/// `x(20 - x²)² - 512` against the eliminated polynomial in `t = x²`.
fn reference_check(eliminated: &RatPoly) -> Result<ReferenceCheck> {
    let x = RatPoly::x();
    let q = &RatPoly::constant(int(20)) - &x.pow(2);
    let core = &x * &q.pow(2);
    let reference = &core - &RatPoly::constant(int(512));
    let cofactor = &core + &RatPoly::constant(int(512));
    let substituted = eliminated.compose(&x.pow(2));
    let points: Vec<Rat> = [
        (1, 3),
        (2, 1),
        (-5, 7),
        (11, 4),
        (7, 2),
        (-3, 1),
        (13, 9),
        (40, 7),
        (1, 100),
        (9, 1),
    ]
    .iter()
    .map(|(n, d)| rat(*n, *d))
    .collect();
    let pointwise = points
        .iter()
        .all(|pt| substituted.eval(pt) == reference.eval(pt) * cofactor.eval(pt));
    let identity_holds = pointwise && substituted == &reference * &cofactor;
    Ok(ReferenceCheck {
        positive_roots: sturm_isolate(&reference, &Domain::PositiveReals)?,
        reference,
        cofactor,
        points: points.iter().map(crate::exact::fmt_rat).collect(),
        identity_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::to_f64;
    use crate::model::model;

    #[test]
    fn volume_examples() {
        let s = |a, b, c| MetricParams::from_ints([a, b, c]).unwrap();
        assert_eq!(volume_monomial(Case::Gr27, &s(6, 3, 2)), int(432 * 432));
        assert_eq!(
            volume_monomial(Case::Gr38, &s(12, 4, 3)),
            int(93312 * 93312)
        );
        assert_eq!(volume_monomial(Case::Gr38, &s(1, 1, 1)), int(1));
        assert_eq!(symmetric_volume(Case::Gr27).unwrap(), int(432));
        assert_eq!(symmetric_volume(Case::Gr38).unwrap(), int(93312));
    }

    #[test]
    fn gr27_certificate() {
        let c = certify_uniqueness(model().unwrap(), Case::Gr27).unwrap();
        let f = RatPoly::new(vec![int(8), int(0), int(0), int(0), rat(-5, 2), int(1)]);
        assert!(
            c.eliminated.proportionality(&f).is_some(),
            "{}",
            c.eliminated
        );
        assert_eq!(c.linear_relation.as_ref().unwrap().to_string(), "s1 = 3*s3");
        assert_eq!(c.affine_relation.to_string(), "s1 = 15/2 + (-1/2)*s2");
        assert_eq!(c.derivative_identity, Some(true));
        assert_eq!(c.positive_roots.len(), 1);
        assert!(c.positive_roots[0].interval.exact && c.positive_roots[0].interval.lo == int(2));
        assert!(c.passed());
        assert_eq!(c.root_degree, 2);
    }

    #[test]
    fn gr38_certificate() {
        let c = certify_uniqueness(model().unwrap(), Case::Gr38).unwrap();
        assert_eq!(c.linear_relation.as_ref().unwrap().to_string(), "s1 = 4*s3");
        let t = RatPoly::x();
        let g =
            &(&t * &(&t - &RatPoly::constant(int(20))).pow(4)) - &RatPoly::constant(int(1 << 18));
        assert!(
            c.eliminated.proportionality(&g).is_some(),
            "{}",
            c.eliminated
        );
        assert_eq!(c.positive_roots.len(), 2);
        let spurious = &c.positive_roots[1];
        assert!(!spurious.admissible);
        assert_eq!(spurious.excluded_by.as_deref(), Some("s1 < 0, s3 < 0"));
        let fine = refine_root(&c.eliminated, &spurious.interval, &rat(1, 1_000_000_000)).unwrap();
        let s3 = to_f64(&c.parametrization.at(&fine.lo)[2]);
        assert!((s3 + 1.817488).abs() < 1e-6, "{s3}");
        assert!((to_f64(&spurious.s_at_lo[2]) + 1.817488).abs() < 1e-6);
        let r = c.reference.as_ref().unwrap();
        assert!(r.identity_holds);
        assert_eq!(r.positive_roots.len(), 2);
        assert!(r.positive_roots[0].exact && r.positive_roots[0].lo == int(2));
        let iv = refine_root(&r.reference, &r.positive_roots[1], &rat(1, 1_000_000_000)).unwrap();
        assert!((approximate(&iv) - 5.44915345).abs() < 1e-7);
        assert!(c.passed());
        assert_eq!(c.solutions[0], MetricParams::from_ints([12, 4, 3]).unwrap());
    }

    #[test]
    fn perturbed_volume_has_no_solution() {
        let c = certify_with_volume(model().unwrap(), Case::Gr27, &int(433)).unwrap();
        assert!(c.solutions.is_empty());
        assert!(!c.passed());
        // brute-force oracle: the admissible range is 0 < s3 < 5/2
        let f =
            |t: f64| (3.0 * t).powi(4) * (15.0 - 6.0 * t).powi(2) * t.powi(4) - 433.0f64.powi(2);
        let grid: Vec<f64> = (1..25_000).map(|k| k as f64 * 1e-4).collect();
        assert!(grid.iter().all(|t| f(*t) < 0.0));
    }
}
