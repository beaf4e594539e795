use std::fmt::Write;

use liespec_core::exact::fmt_rat;
use liespec_core::so7::Case;
use liespec_core::{ExactMatrix, GaussRat, Rat};

/// What a subcommand produced, before rendering.
pub struct Outcome {
    pub case: Option<Case>,
    pub passed: bool,
    pub payload: serde_json::Value,
    pub text: String,
}

impl Outcome {
    pub fn new(
        case: Option<Case>,
        passed: bool,
        payload: impl serde::Serialize,
        text: String,
    ) -> Self {
        let payload = serde_json::to_value(payload).expect("serializable payload");
        Outcome {
            case,
            passed,
            payload,
            text,
        }
    }
}

pub fn triple(s: &[Rat; 3]) -> String {
    format!("({})", s.iter().map(fmt_rat).collect::<Vec<_>>().join(", "))
}

pub fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

/// `c1*label1 + c2*label2 + ...`
pub fn combination(terms: &[(GaussRat, String)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = terms
        .iter()
        .map(|(c, l)| {
            if c.is_one() {
                l.clone()
            } else if c.is_real() {
                format!("{c}*{l}")
            } else {
                format!("({c})*{l}")
            }
        })
        .collect();
    parts.join(" + ").replace("+ -", "- ")
}

/// Nonzero entries as `(i,j)=v`, one-based.
pub fn sparse(m: &ExactMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        for (j, x) in m.row(i).iter().enumerate() {
            if !x.is_zero() {
                if !out.is_empty() {
                    out.push(' ');
                }
                let _ = write!(out, "({},{})={}", i + 1, j + 1, x);
            }
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use liespec_core::exact::{int, rat};

    #[test]
    fn formatting() {
        assert_eq!(triple(&[int(6), rat(1, 2), int(-2)]), "(6, 1/2, -2)");
        let terms = vec![
            (GaussRat::one(), "a".to_string()),
            (GaussRat::from_int(-2), "b".to_string()),
        ];
        assert_eq!(combination(&terms), "a - 2*b");
        assert_eq!(combination(&[]), "0");
        let mut m = ExactMatrix::zeros(2, 2);
        m[(1, 0)] = GaussRat::i();
        assert_eq!(sparse(&m), "(2,1)=1*i");
        assert_eq!(sparse(&ExactMatrix::zeros(1, 1)), "0");
    }
}
