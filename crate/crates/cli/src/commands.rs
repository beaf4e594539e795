use std::fmt::Write;

use serde_json::json;

use liespec_core::einstein::{records_for, symmetric_neutral_check, Verdict};
use liespec_core::exact::rational::{to_decimal, to_f64};
use liespec_core::exact::{fmt_rat, int, parse_rat};
use liespec_core::lie::{a2_in_g2, b3, g2, RootSystemData};
use liespec_core::reps::{minus_casimir, restrict_operator, tricky_term as partial_casimir};
use liespec_core::so7::Case;
use liespec_core::spectra::{
    branching_table, eigenvalue_closed_form, first_eigenvalue_at, symmetric_family,
};
use liespec_core::uniqueness::{certify_with_volume, symmetric_volume};
use liespec_core::{
    nu_stability_check, selftest as suite, Error, ExactMatrix, GaussRat, MetricParams, Model, Rat,
    Result,
};

use crate::output::{combination, mark, sparse, triple, Outcome};

pub fn verify_chevalley(m: &Model) -> Result<Outcome> {
    let r = &m.chevalley;
    let mut t = String::new();
    writeln!(
        t,
        "so(7,C) Chevalley basis: 3 Cartan elements, 18 root vectors"
    )
    .ok();
    writeln!(t, "  antisymmetry        {}", mark(r.antisymmetric)).ok();
    writeln!(t, "  Cartan action       {}", mark(r.cartan_action)).ok();
    writeln!(t, "  [X_a, X_-a] = H_a   {}", mark(r.coroots)).ok();
    writeln!(t, "  conjugation         {}", mark(r.conjugation)).ok();
    let bad = r.structure_constants.iter().filter(|c| !c.ok).count();
    writeln!(
        t,
        "  structure constants {} checked, {} off",
        r.structure_constants.len(),
        bad
    )
    .ok();
    writeln!(
        t,
        "  Jacobi              {} on {} triples",
        mark(r.jacobi),
        r.jacobi_triples
    )
    .ok();
    writeln!(t, "kappa = -5 tr(XY):").ok();
    for k in &r.kappa_pairs {
        writeln!(
            t,
            "  kappa(X[{0}], X[-({0})]) = {1}  (magnitude expected {2})",
            k.root, k.kappa, k.expected
        )
        .ok();
    }
    for f in &r.failures {
        writeln!(t, "failure: {f}").ok();
    }
    writeln!(
        t,
        "{}",
        if r.passed {
            "all Chevalley relations hold"
        } else {
            "Chevalley relations FAILED"
        }
    )
    .ok();
    Ok(Outcome::new(None, r.passed, r, t))
}

pub fn verify_reps(m: &Model) -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut t = String::new();
    let mut ok = true;
    for name in liespec_core::model::REP_NAMES {
        let rep = m.rep(name)?;
        let failure = rep.homomorphism_failure()?;
        let form_ok = rep.domain.real_form_generators()?.iter().all(|z| {
            let a = rep.action(z).expect("element of the domain");
            (&(&a.adjoint() * &rep.form) + &(&rep.form * &a)).is_zero()
        });
        ok &= failure.is_none() && form_ok;
        writeln!(
            t,
            "{name:<14} dim {:>2} on {:<4} homomorphism {}  invariant form {}",
            rep.dim(),
            rep.domain.label,
            mark(failure.is_none()),
            mark(form_ok)
        )
        .ok();
        rows.push(json!({
            "rep": name, "dim": rep.dim(), "domain": rep.domain.label,
            "homomorphism": failure.is_none(), "failure": failure, "invariant_form": form_ok,
        }));
    }
    Ok(Outcome::new(None, ok, rows, t))
}

fn piece<'a>(m: &'a Model, case: Case, sub: &str) -> Result<&'a liespec_core::SubalgebraBasis> {
    m.case(case).piece(sub).ok_or_else(|| {
        Error::Parse(format!(
            "unknown subalgebra {sub:?} (expected g, k, h, p1, p2 or p3)"
        ))
    })
}

pub fn invariants(m: &Model, case: Case, rep_name: &str, sub: &str) -> Result<Outcome> {
    let rep = m.rep(rep_name)?;
    let s = piece(m, case, sub)?;
    let space = rep.invariants(s)?;
    let vectors: Vec<String> = space
        .basis
        .iter()
        .map(|v| combination(&rep.describe(v)))
        .collect();
    let mut t = format!(
        "{case}: {} fixed by {sub}: dimension {}\n",
        rep.name,
        space.dim()
    );
    for (k, v) in vectors.iter().enumerate() {
        writeln!(t, "  v{} = {v}", k + 1).ok();
    }
    let payload = json!({ "rep": rep_name, "sub": sub, "dim": space.dim(), "vectors": vectors });
    Ok(Outcome::new(Some(case), true, payload, t))
}

/// Root system and Casimir scale of the Lie algebra `sub` of a case.
fn system(case: Case, sub: &str) -> Result<(RootSystemData, Rat)> {
    Ok(match (case, sub) {
        (Case::Gr27, "g") => (g2(), int(1)),
        (Case::Gr27, "k") => (a2_in_g2(), Rat::new(3.into(), 4.into())),
        (Case::Gr38, "g") => (b3(), int(1)),
        (Case::Gr38, "k") => (g2(), Rat::new(4.into(), 5.into())),
        _ => {
            return Err(Error::Parse(format!(
                "casimir needs --sub g or k, not {sub:?}"
            )))
        }
    })
}

pub fn casimir(m: &Model, case: Case, rep_name: &str, sub: &str) -> Result<Outcome> {
    let rep = m.rep(rep_name)?;
    let (sys, scale) = system(case, sub)?;
    let ic = m.case(case);
    let c = minus_casimir(rep, piece(m, case, sub)?, &ic.form_scale)?;
    // candidate eigenvalues from highest weights small enough to occur
    let mut values: Vec<Rat> = Vec::new();
    for d in sys.enumerate_dominant_by_dim(rep.dim() as u64) {
        let v = sys.casimir_scalar(&d.weight, &scale)?;
        if !values.contains(&v) {
            values.push(v);
        }
    }
    values.sort();
    let mut found = Vec::new();
    let mut total = 0;
    for v in values {
        let shift = ExactMatrix::identity(rep.dim()).scale(&GaussRat::real(v.clone()));
        let k = (&c - &shift).kernel().len();
        if k > 0 {
            total += k;
            found.push((v, k));
        }
    }
    let complete = total == rep.dim();
    let mut t = format!(
        "{case}: Casimir of {sub} on {} (dim {})\n",
        rep.name,
        rep.dim()
    );
    for (v, k) in &found {
        writeln!(t, "  {:>8}  multiplicity {k}", fmt_rat(v)).ok();
    }
    writeln!(
        t,
        "eigenspaces {} the module",
        if complete { "span" } else { "do NOT span" }
    )
    .ok();
    let rows: Vec<_> = found
        .iter()
        .map(|(v, k)| json!({ "eigenvalue": fmt_rat(v), "multiplicity": k }))
        .collect();
    let payload = json!({ "rep": rep_name, "sub": sub, "dim": rep.dim(), "eigenvalues": rows, "complete": complete });
    Ok(Outcome::new(Some(case), complete, payload, t))
}

pub fn tricky_term(m: &Model, case: Case, rep_name: &str) -> Result<Outcome> {
    let rep = m.rep(rep_name)?;
    let ic = m.case(case);
    let space = rep.invariants(&ic.h)?;
    if space.dim() == 0 {
        return Err(Error::Invalid(format!(
            "{rep_name} has no vectors fixed by h"
        )));
    }
    let up = restrict_operator(&partial_casimir(rep, &ic.p[1], &ic.form_scale)?, &space)?;
    let scalar =
        (up == ExactMatrix::identity(space.dim()).scale(&up[(0, 0)])).then(|| up[(0, 0)].clone());
    let mut t = format!(
        "{case}: tricky term of {} on its {}-dimensional h-fixed space\n",
        rep.name,
        space.dim()
    );
    match &scalar {
        Some(x) => writeln!(t, "{x}").ok(),
        None => write!(t, "not scalar; matrix in the fixed basis:\n{up}").ok(),
    };
    let payload = json!({
        "rep": rep_name,
        "fixed_dim": space.dim(),
        "scalar": scalar.map(|x| x.to_string()),
        "matrix": up,
    });
    Ok(Outcome::new(Some(case), true, payload, t))
}

fn parse_triple(text: &str) -> Result<[Rat; 3]> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::Parse(format!(
            "expected three comma-separated values, got {text:?}"
        )));
    }
    Ok([
        parse_rat(parts[0])?,
        parse_rat(parts[1])?,
        parse_rat(parts[2])?,
    ])
}

pub fn metric_from(case: Case, s: Option<&str>, radii: Option<&str>) -> Result<MetricParams> {
    match (s, radii) {
        (Some(s), _) => MetricParams::new(parse_triple(s)?),
        (None, Some(r)) => {
            let r = parse_triple(r)?;
            eprintln!(
                "warning: radii are squared as written; decimal radii make the result approximate"
            );
            MetricParams::new(r.map(|x| &x * &x))
        }
        (None, None) => symmetric_family(case, &int(1)),
    }
}

pub fn eigenvalues(m: &Model, case: Case, s: Option<&str>, radii: Option<&str>) -> Result<Outcome> {
    let metric = metric_from(case, s, radii)?;
    let mut t = format!("{case} at s = {}\n", triple(&metric.0));
    let mut rows = Vec::new();
    for c in m.components(case)? {
        match c.contribution() {
            Some(e) => {
                let v = eigenvalue_closed_form(&e, &metric)?;
                writeln!(
                    t,
                    "  {:<6} dim {:>2}  {} = {}",
                    e.irrep,
                    e.dim,
                    e.closed_form(),
                    fmt_rat(&v)
                )
                .ok();
                rows.push(json!({
                    "irrep": e.irrep, "dim": e.dim, "dimVH": 1,
                    "closed_form": e.closed_form(), "value": fmt_rat(&v),
                }));
            }
            None => {
                let p = c.operator.char_poly_at(&metric.0)?;
                let tr: Rat = c
                    .operator
                    .trace_form()?
                    .iter()
                    .zip(&metric.0)
                    .map(|(a, b)| a * b)
                    .sum();
                let disc = c.operator.reduced_discriminant()?.eval(&metric.0);
                let half = to_f64(&tr) / 2.0;
                let root = to_f64(&disc).max(0.0).sqrt();
                let approx = if c.space.dim() == 2 {
                    vec![half - root, half + root]
                } else {
                    Vec::new()
                };
                writeln!(
                    t,
                    "  {:<6} dim {:>2}  {}x{} block, characteristic polynomial {}, eigenvalues ≈ {:?}",
                    c.spec.label,
                    c.dim,
                    c.space.dim(),
                    c.space.dim(),
                    p,
                    approx
                )
                .ok();
                rows.push(json!({
                    "irrep": c.spec.label, "dim": c.dim, "dimVH": c.space.dim(),
                    "char_poly": p, "trace": fmt_rat(&tr), "reduced_discriminant": fmt_rat(&disc),
                    "approx": approx,
                }));
            }
        }
    }
    let first = first_eigenvalue_at(m, case, &metric)?;
    writeln!(
        t,
        "smallest: {} from {} (multiplicity {})",
        fmt_rat(&first.lambda1),
        first.attained_by.join(", "),
        first.multiplicity
    )
    .ok();
    let payload = json!({
        "s": metric, "contributions": rows,
        "lambda1": fmt_rat(&first.lambda1), "attained_by": first.attained_by, "multiplicity": first.multiplicity,
    });
    Ok(Outcome::new(Some(case), true, payload, t))
}

pub fn branching(case: Case) -> Result<Outcome> {
    let table = branching_table(case)?;
    let mut t = String::new();
    let mut show = |title: &str, rows: &[liespec_core::spectra::BranchingRow]| {
        if rows.is_empty() {
            return;
        }
        writeln!(t, "{title}").ok();
        for r in rows {
            let parts: Vec<String> =
                r.to.iter()
                    .map(|x| format!("{}[{}]", x.irrep, x.dim))
                    .collect();
            let sum: Vec<String> = r.to.iter().map(|x| x.dim.to_string()).collect();
            writeln!(
                t,
                "  {:<7} → {}   ({} = {})",
                r.from,
                parts.join(" + "),
                sum.join(" + "),
                r.dim
            )
            .ok();
        }
    };
    show("G → K", &table.g_to_k);
    show("K → H", &table.k_to_h);
    writeln!(t, "dim V^H implied:").ok();
    for (name, n) in &table.g_fixed_dims {
        writeln!(t, "  {name}: {n}").ok();
    }
    Ok(Outcome::new(Some(case), true, &table, t))
}

pub fn certify(m: &Model, case: Case, volume: Option<&str>) -> Result<Outcome> {
    let v = match volume {
        Some(text) => parse_rat(text)?,
        None => symmetric_volume(case)?,
    };
    let c = match certify_with_volume(m, case, &v) {
        Ok(c) => c,
        Err(Error::Verification(msg)) => {
            let t = format!("{case}: certification failed: {msg}\n");
            return Ok(Outcome::new(Some(case), false, json!({ "error": msg }), t));
        }
        Err(e) => return Err(e),
    };
    let mut t = format!(
        "{case}: symmetric point s0 = {}\n",
        triple(&c.symmetric_point.0)
    );
    for e in &c.equations {
        let lhs = liespec_core::spectra::linear_form_string(&e.coeffs);
        writeln!(t, "  {:<6} {lhs} = {}", e.irrep, fmt_rat(&e.value)).ok();
    }
    let p = &c.parametrization;
    let var = p.variable + 1;
    let params: Vec<String> = (0..3)
        .map(|i| {
            format!(
                "s{} = {} + ({})*x",
                i + 1,
                fmt_rat(&p.offsets[i]),
                fmt_rat(&p.slopes[i])
            )
        })
        .collect();
    writeln!(t, "  with x = s{var}: {}", params.join(", ")).ok();
    if let Some(r) = &c.linear_relation {
        writeln!(t, "  linear relation {r}").ok();
    }
    writeln!(t, "  affine relation {}", c.affine_relation).ok();
    let e = c.volume_exponents;
    writeln!(
        t,
        "  volume: s1^{} s2^{} s3^{} = {} (volume {})",
        e[0],
        e[1],
        e[2],
        fmt_rat(&c.volume_target),
        fmt_rat(&v)
    )
    .ok();
    writeln!(
        t,
        "  volume polynomial in x = s{var}: {}",
        c.volume_polynomial
    )
    .ok();
    writeln!(
        t,
        "  eliminated (root of degree {}): {}",
        c.root_degree, c.eliminated
    )
    .ok();
    if let Some(d) = c.derivative_identity {
        writeln!(t, "  derivative = 5x^3(x-2): {}", mark(d)).ok();
    }
    if let Some(r) = &c.reference {
        writeln!(
            t,
            "  radius form {} ; eliminated(x^2) = ({})({}) : {}",
            r.reference,
            r.reference,
            r.cofactor,
            mark(r.identity_holds)
        )
        .ok();
    }
    for r in &c.positive_roots {
        let at = if r.interval.exact {
            format!("x = {}", fmt_rat(&r.interval.lo))
        } else {
            format!(
                "x in [{}, {}] ≈ {:.9}",
                to_decimal(&r.interval.lo, 12),
                to_decimal(&r.interval.hi, 12),
                r.approx
            )
        };
        let fate = match &r.excluded_by {
            Some(why) => format!("excluded: {why}"),
            None => "admissible".into(),
        };
        writeln!(t, "  root {at}: {fate}").ok();
    }
    let sols: Vec<String> = c.solutions.iter().map(|s| triple(&s.0)).collect();
    writeln!(
        t,
        "solutions: {}",
        if sols.is_empty() {
            "none".into()
        } else {
            sols.join(", ")
        }
    )
    .ok();
    writeln!(
        t,
        "{}",
        if c.passed() {
            "unique: the symmetric point"
        } else {
            "NOT certified unique"
        }
    )
    .ok();
    Ok(Outcome::new(Some(case), c.passed(), &c, t))
}

pub fn einstein(m: &Model, case: Case) -> Result<Outcome> {
    let mut reports = Vec::new();
    let mut t = format!("{case}: scalar curvatures are table inputs\n");
    for rec in records_for(case)? {
        let r = nu_stability_check(m, &rec)?;
        let values: Vec<String> = r
            .values
            .iter()
            .map(|v| format!("{} {:.14}", v.irrep, v.value))
            .collect();
        let verdict = match &r.verdict {
            Verdict::Unstable { witness } => format!("ν-unstable (witness {witness})"),
            Verdict::Inconclusive => "inconclusive".into(),
        };
        writeln!(
            t,
            "  {}: s = {}  2E = {:.14}",
            rec.name,
            triple(&rec.s),
            r.two_e
        )
        .ok();
        writeln!(t, "      {}  → {verdict}", values.join(", ")).ok();
        reports.push(r);
    }
    let n = symmetric_neutral_check(m, case)?;
    write!(t, "  symmetric metric: λ1 = {}", fmt_rat(&n.lambda1)).ok();
    match (&n.einstein_constant, n.lambda1_equals_2e) {
        (Some(e), Some(eq)) => writeln!(
            t,
            ", E = {}, λ1 = 2E {} ({})",
            fmt_rat(e),
            mark(eq),
            n.classification
        )
        .ok(),
        _ => writeln!(t, " ({})", n.classification).ok(),
    };
    let passed = n.lambda1_equals_2e != Some(false);
    Ok(Outcome::new(
        Some(case),
        passed,
        json!({ "records": reports, "symmetric": n }),
        t,
    ))
}

pub fn dump_basis(m: &Model, case: Option<Case>, piece_name: Option<&str>) -> Result<Outcome> {
    let (label, elements) = match (case, piece_name) {
        (Some(c), Some(p)) => {
            let b = piece(m, c, p)?;
            (format!("{c} {p}"), b.named())
        }
        (Some(c), None) => (format!("{c} g"), m.case(c).g.named()),
        _ => ("so(7) Chevalley basis".to_string(), m.so7.named()),
    };
    let mut t = format!(
        "{label}: {} elements (7x7 matrices, nonzero entries)\n",
        elements.len()
    );
    for e in &elements {
        writeln!(t, "  {:<22} {}", e.name, sparse(&e.matrix)).ok();
    }
    Ok(Outcome::new(
        case,
        true,
        json!({ "basis": label, "elements": elements }),
        t,
    ))
}

pub fn dump_rep(m: &Model, rep_name: &str) -> Result<Outcome> {
    let rep = m.rep(rep_name)?;
    let mut t = format!("{} (dim {}) on {}\n", rep.name, rep.dim(), rep.domain.label);
    for (k, l) in rep.labels.iter().enumerate() {
        let w = rep
            .weights
            .as_ref()
            .map(|w| w[k].to_string())
            .unwrap_or_default();
        writeln!(t, "  {:>2} {l} {w}", k + 1).ok();
    }
    for (name, img) in rep.domain.names.iter().zip(&rep.images) {
        writeln!(t, "  {name:<22} {}", sparse(img)).ok();
    }
    writeln!(t, "  form {}", sparse(&rep.form)).ok();
    let images: Vec<_> = rep
        .domain
        .names
        .iter()
        .zip(&rep.images)
        .map(|(n, m)| json!({ "element": n, "matrix": m }))
        .collect();
    let payload = json!({
        "rep": rep_name, "dim": rep.dim(), "labels": rep.labels, "weights": rep.weights,
        "images": images, "form": rep.form,
    });
    Ok(Outcome::new(None, true, payload, t))
}

pub fn selftest(m: &Model, criterion: Option<u32>) -> Result<Outcome> {
    let results = match criterion {
        Some(id) => vec![suite::run_criterion(m, id)
            .ok_or_else(|| Error::Parse(format!("no criterion {id}")))?],
        None => suite::run(m),
    };
    let mut t = String::new();
    for c in &results {
        writeln!(t, "{}", c.line()).ok();
    }
    let passed = results.iter().filter(|c| c.passed).count();
    writeln!(t, "{passed}/{} criteria pass", results.len()).ok();
    let ok = passed == results.len();
    Ok(Outcome::new(
        None,
        ok,
        json!({ "criteria": results, "passed": passed, "total": results.len() }),
        t,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use liespec_core::exact::rat;

    #[test]
    fn metric_parsing() {
        assert_eq!(
            metric_from(Case::Gr38, Some("12,4,3"), None).unwrap().0,
            [int(12), int(4), int(3)]
        );
        assert_eq!(
            metric_from(Case::Gr27, Some("10/3, 10/9 ,5/6"), None)
                .unwrap()
                .0,
            [rat(10, 3), rat(10, 9), rat(5, 6)]
        );
        assert_eq!(
            metric_from(Case::Gr27, None, Some("1.5,2,1")).unwrap().0,
            [rat(9, 4), int(4), int(1)]
        );
        assert_eq!(
            metric_from(Case::Gr27, None, None).unwrap().0,
            [int(6), int(3), int(2)]
        );
        assert!(matches!(
            metric_from(Case::Gr27, Some("1,2"), None),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            metric_from(Case::Gr27, Some("1,0,2"), None),
            Err(Error::Invalid(_))
        ));
    }

    #[test]
    fn casimir_systems() {
        assert!(system(Case::Gr27, "h").is_err());
        assert_eq!(system(Case::Gr38, "k").unwrap().1, rat(4, 5));
    }
}
