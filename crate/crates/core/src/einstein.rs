//! ν-instability of invariant Einstein metrics via the eigenvalue upper bounds.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::rational::to_f64;
use crate::exact::{int, parse_rat, rat, ser, Rat};
use crate::model::Model;
use crate::so7::Case;
use crate::spectra::{
    builtin_contributions, eigenvalue_closed_form, first_eigenvalue_report, MetricParams,
};

/// Relative tolerance for comparisons against table decimals.
pub const TOLERANCE: f64 = 1e-9;

const DATA: &str = include_str!("../data/einstein.txt");

/// One row of the embedded table. Decimals are kept as exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EinsteinMetricRecord {
    pub case: Case,
    pub name: String,
    #[serde(serialize_with = "ser::rats")]
    pub x: [Rat; 3],
    #[serde(serialize_with = "ser::rats")]
    pub s: [Rat; 3],
    #[serde(serialize_with = "ser::rat")]
    pub scal: Rat,
    #[serde(serialize_with = "ser::rat")]
    pub einstein_constant: Rat,
}

/// `s_i = Q / x_{σ(i)}` links the two parametrizations.
pub fn kerr_constant(case: Case) -> Rat {
    match case {
        Case::Gr27 => int(8),
        Case::Gr38 => int(10),
    }
}

/// `x1 ↔ s2`, `x2 ↔ s1`, `x3 ↔ s3`.
const KERR_INDEX: [usize; 3] = [1, 0, 2];

pub fn close(a: &Rat, b: &Rat, tol: f64) -> bool {
    let (a, b) = (to_f64(a), to_f64(b));
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

impl EinsteinMetricRecord {
    pub fn metric(&self) -> Result<MetricParams> {
        MetricParams::new(self.s.clone())
    }

    /// Table-precision consistency of `s` with `x` and of `E` with `scal`.
    pub fn consistency_failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        let q = kerr_constant(self.case);
        for (i, x) in self.x.iter().enumerate() {
            let s = &self.s[KERR_INDEX[i]];
            if x.is_zero() || !close(&(&q / x), s, TOLERANCE) {
                out.push(format!("s{} != {}/x{}", KERR_INDEX[i] + 1, q, i + 1));
            }
        }
        let dim = int(i64::from(self.case.manifold_dim()));
        if !close(&(&self.einstein_constant * &dim), &self.scal, TOLERANCE) {
            out.push("E * dim != scal".into());
        }
        out
    }
}

/// Parses the plain-text table: `case name x1 x2 x3 s1 s2 s3 scal E`, `#` comments.
pub fn parse_records(text: &str) -> Result<Vec<EinsteinMetricRecord>> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 10 {
            return Err(Error::Parse(format!(
                "line {}: expected 10 fields, got {}",
                n + 1,
                f.len()
            )));
        }
        let num = |k: usize| parse_rat(f[k]);
        let rec = EinsteinMetricRecord {
            case: f[0].parse()?,
            name: f[1].to_string(),
            x: [num(2)?, num(3)?, num(4)?],
            s: [num(5)?, num(6)?, num(7)?],
            scal: num(8)?,
            einstein_constant: num(9)?,
        };
        if rec.s.iter().any(|v| !v.is_positive()) {
            return Err(Error::Parse(format!(
                "line {}: squared radii must be positive",
                n + 1
            )));
        }
        out.push(rec);
    }
    Ok(out)
}

pub fn builtin_records() -> Result<Vec<EinsteinMetricRecord>> {
    parse_records(DATA)
}

pub fn records_for(case: Case) -> Result<Vec<EinsteinMetricRecord>> {
    Ok(builtin_records()?
        .into_iter()
        .filter(|r| r.case == case)
        .collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct CandidateValue {
    pub irrep: String,
    #[serde(serialize_with = "ser::rat")]
    pub exact: Rat,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    Unstable { witness: String },
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct StabilityReport {
    pub record: EinsteinMetricRecord,
    /// `λ_π(s)` for every component with a single fixed vector; each bounds `λ1` above.
    pub values: Vec<CandidateValue>,
    pub two_e: f64,
    pub verdict: Verdict,
}

/// `Unstable` if some eigenvalue bound lies below `2E` by more than the tolerance.
pub fn nu_stability_check(model: &Model, rec: &EinsteinMetricRecord) -> Result<StabilityReport> {
    let bad = rec.consistency_failures();
    if !bad.is_empty() {
        return Err(Error::Invalid(format!(
            "{} {}: {}",
            rec.case,
            rec.name,
            bad.join("; ")
        )));
    }
    let s = rec.metric()?;
    let mut values = Vec::new();
    for c in builtin_contributions(model, rec.case)? {
        let exact = eigenvalue_closed_form(&c, &s)?;
        values.push(CandidateValue {
            irrep: c.irrep,
            value: to_f64(&exact),
            exact,
        });
    }
    let two_e = &rec.einstein_constant * int(2);
    let below = values
        .iter()
        .filter(|v| v.exact < two_e && !close(&v.exact, &two_e, TOLERANCE))
        .min_by(|a, b| a.exact.cmp(&b.exact));
    let verdict = match below {
        Some(v) => Verdict::Unstable {
            witness: v.irrep.clone(),
        },
        None => Verdict::Inconclusive,
    };
    Ok(StabilityReport {
        record: rec.clone(),
        values,
        two_e: to_f64(&two_e),
        verdict,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct NeutralReport {
    pub case: Case,
    pub s: MetricParams,
    #[serde(serialize_with = "ser::rat")]
    pub lambda1: Rat,
    /// Known exactly only where the normal metric is the Killing metric of `G`.
    #[serde(serialize_with = "ser::opt_rat")]
    pub einstein_constant: Option<Rat>,
    pub lambda1_equals_2e: Option<bool>,
    /// Classification quoted as data.
    pub classification: &'static str,
}

/// `λ1` against `2E` at the symmetric Einstein metric.
pub fn symmetric_neutral_check(model: &Model, case: Case) -> Result<NeutralReport> {
    let first = first_eigenvalue_report(model, case)?;
    let (einstein_constant, classification) = match case {
        Case::Gr27 => (Some(rat(1, 2)), "neutrally ν-stable"),
        Case::Gr38 => (None, "ν-stable"),
    };
    let lambda1_equals_2e = einstein_constant
        .as_ref()
        .map(|e| first.lambda1 == e * int(2));
    Ok(NeutralReport {
        case,
        s: first.s,
        lambda1: first.lambda1,
        einstein_constant,
        lambda1_equals_2e,
        classification,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::model;

    fn report(case: Case, name: &str) -> StabilityReport {
        let rec = records_for(case)
            .unwrap()
            .into_iter()
            .find(|r| r.name == name)
            .unwrap();
        nu_stability_check(model().unwrap(), &rec).unwrap()
    }

    fn value(r: &StabilityReport, irrep: &str) -> f64 {
        r.values.iter().find(|v| v.irrep == irrep).unwrap().value
    }

    fn near(a: f64, b: f64) -> bool {
        (a - b).abs() <= TOLERANCE * b.abs()
    }

    #[test]
    fn table_is_consistent() {
        let recs = builtin_records().unwrap();
        assert_eq!(recs.len(), 4);
        for r in &recs {
            assert!(
                r.consistency_failures().is_empty(),
                "{} {}: {:?}",
                r.case,
                r.name,
                r.consistency_failures()
            );
        }
    }

    #[test]
    fn gr38_verdicts() {
        let g1 = report(Case::Gr38, "g1");
        assert_eq!(
            g1.verdict,
            Verdict::Unstable {
                witness: "ω3".into()
            }
        );
        assert!(near(value(&g1, "ω3"), 9.54978541388250));
        assert!(near(g1.two_e, 10.0137459008963));
        let g2 = report(Case::Gr38, "g2");
        assert_eq!(
            g2.verdict,
            Verdict::Unstable {
                witness: "ω3".into()
            }
        );
        assert!(near(value(&g2, "ω3"), 8.81067844449609));
        assert!(near(g2.two_e, 9.14618576904789));
    }

    #[test]
    fn gr27_verdicts() {
        let g1 = report(Case::Gr27, "g1");
        assert_eq!(
            g1.verdict,
            Verdict::Unstable {
                witness: "ω1".into()
            }
        );
        assert!(near(value(&g1, "ω1"), 5.79911423867862));
        assert!(near(g1.two_e, 6.72638426170978));
        let g2 = report(Case::Gr27, "g2");
        assert_eq!(g2.verdict, Verdict::Inconclusive);
        assert!(near(value(&g2, "ω1"), 1.83171663618629));
        assert!(near(value(&g2, "ω2"), 2.60045391440275));
        assert!(near(g2.two_e, 1.45038349101629));
    }

    #[test]
    fn inconsistent_records_rejected() {
        let mut rec = records_for(Case::Gr38).unwrap().remove(0);
        rec.s[1] = &rec.s[1] + rat(1, 1000);
        assert!(nu_stability_check(model().unwrap(), &rec).is_err());
        assert!(parse_records("gr27 g1 1 2 3").is_err());
        assert!(parse_records("gr99 g1 1 1 1 1 1 1 1 1").is_err());
    }

    #[test]
    fn symmetric_metrics() {
        let m = model().unwrap();
        let r = symmetric_neutral_check(m, Case::Gr27).unwrap();
        assert_eq!(
            (r.lambda1.clone(), r.lambda1_equals_2e),
            (int(1), Some(true))
        );
        let r = symmetric_neutral_check(m, Case::Gr38).unwrap();
        assert_eq!((r.lambda1, r.lambda1_equals_2e), (rat(5, 4), None));
    }
}
