//! Casimir-type operators, their restriction to fixed vectors, and the
//! Laplacian on `V^H` as an operator affine in the squared radii.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use super::{InvariantSpace, Representation};
use crate::error::{Error, Result};
use crate::exact::{fmt_rat, int, rat, ser, ExactMatrix, GaussRat, Rat, RatPoly};
use crate::so7::SubalgebraBasis;

/// `-Σ ρ(b_i) ρ(b^i)` for the dual basis of `space` under `scale · κ`.
pub fn casimir_sum(
    rho: &Representation,
    space: &SubalgebraBasis,
    scale: &Rat,
) -> Result<ExactMatrix> {
    let dual = space.dual_basis(scale)?;
    let n = rho.dim();
    let mut acc = ExactMatrix::zeros(n, n);
    for (b, d) in space.elements.iter().zip(&dual) {
        acc = &acc + &(&rho.action(b)? * &rho.action(d)?);
    }
    Ok(-&acc)
}

/// Minus the Casimir of a subalgebra. Checks that it commutes with the subalgebra.
pub fn minus_casimir(
    rho: &Representation,
    sub: &SubalgebraBasis,
    scale: &Rat,
) -> Result<ExactMatrix> {
    let c = casimir_sum(rho, sub, scale)?;
    for (name, x) in sub.names.iter().zip(&sub.elements) {
        if !c.commutator(&rho.action(x)?).is_zero() {
            return Err(Error::Verification(format!(
                "{}: Casimir of {} does not commute with {name}",
                rho.name, sub.label
            )));
        }
    }
    Ok(c)
}

/// The partial sum over the middle isotropy summand.
pub fn tricky_term(rho: &Representation, p2: &SubalgebraBasis, scale: &Rat) -> Result<ExactMatrix> {
    casimir_sum(rho, p2, scale)
}

/// Matrix of `op` on an invariant subspace, in the subspace basis.
pub fn restrict_operator(op: &ExactMatrix, space: &InvariantSpace) -> Result<ExactMatrix> {
    let b = space.matrix(op.rows());
    if space.dim() == 0 {
        return Ok(ExactMatrix::zeros(0, 0));
    }
    b.solve(&(op * &b))?.ok_or_else(|| {
        Error::Verification(format!("{} is not preserved by the operator", space.label))
    })
}

/// `s1 A1 + s2 A2 + s3 A3` on a fixed-vector space.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AffineOperator {
    pub a: [ExactMatrix; 3],
}

impl AffineOperator {
    pub fn size(&self) -> usize {
        self.a[0].rows()
    }

    pub fn eval(&self, s: &[Rat; 3]) -> ExactMatrix {
        let mut acc = ExactMatrix::zeros(self.size(), self.size());
        for (m, si) in self.a.iter().zip(s) {
            acc = &acc + &m.scale_rat(si);
        }
        acc
    }

    /// Coefficients `(c1, c2, c3)` when every `A_i = c_i · Id`.
    pub fn scalar_coefficients(&self) -> Option<[Rat; 3]> {
        let n = self.size();
        if n == 0 {
            return None;
        }
        let mut out: [Rat; 3] = Default::default();
        for (k, m) in self.a.iter().enumerate() {
            let c = m[(0, 0)].clone();
            if !c.is_real() || *m != ExactMatrix::identity(n).scale(&c) {
                return None;
            }
            out[k] = c.re;
        }
        Some(out)
    }

    /// Whether `A_i` and `A_j` commute, for the pairs (1,2), (1,3), (2,3).
    pub fn pairwise_commute(&self) -> [bool; 3] {
        [(0, 1), (0, 2), (1, 2)].map(|(i, j)| self.a[i].commutator(&self.a[j]).is_zero())
    }

    /// Each `A_i` is self-adjoint for the Hermitian Gram matrix of the basis.
    pub fn is_self_adjoint(&self, gram: &ExactMatrix) -> bool {
        self.a.iter().all(|m| &m.adjoint() * gram == gram * m)
    }

    fn real_trace(m: &ExactMatrix) -> Result<Rat> {
        let t = m.trace();
        if !t.is_real() {
            return Err(Error::NonReal);
        }
        Ok(t.re)
    }

    /// Trace as a linear form in `s`.
    pub fn trace_form(&self) -> Result<[Rat; 3]> {
        Ok([
            Self::real_trace(&self.a[0])?,
            Self::real_trace(&self.a[1])?,
            Self::real_trace(&self.a[2])?,
        ])
    }

    /// Determinant of a 2×2 operator as a quadratic form in `s`.
    pub fn det_form(&self) -> Result<QuadraticForm> {
        if self.size() != 2 {
            return Err(Error::Dimension(
                "determinant form needs a 2x2 operator".into(),
            ));
        }
        let det = |s: [i64; 3]| -> Result<Rat> {
            let m = self.eval(&s.map(int));
            let d = &(&m[(0, 0)] * &m[(1, 1)]) - &(&m[(0, 1)] * &m[(1, 0)]);
            if !d.is_real() {
                return Err(Error::NonReal);
            }
            Ok(d.re)
        };
        QuadraticForm::from_values(det)
    }

    /// `(tr/2)² - det` for a 2×2 operator; the eigenvalues are `tr/2 ± √(this)`.
    pub fn reduced_discriminant(&self) -> Result<QuadraticForm> {
        let t = self.trace_form()?;
        let half: [Rat; 3] = t.map(|c| c * rat(1, 2));
        Ok(&QuadraticForm::square_of_linear(&half) - &self.det_form()?)
    }

    /// Characteristic polynomial at a given metric.
    pub fn char_poly_at(&self, s: &[Rat; 3]) -> Result<RatPoly> {
        self.eval(s).char_poly()
    }
}

/// `Σ q_ij s_i s_j` stored as the coefficients of `s1², s2², s3², s1s2, s1s3, s2s3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticForm {
    #[serde(serialize_with = "ser::rats")]
    pub coeffs: [Rat; 6],
}

const MONOMIALS: [(usize, usize); 6] = [(0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2)];

impl QuadraticForm {
    pub fn new(coeffs: [Rat; 6]) -> Self {
        QuadraticForm { coeffs }
    }

    pub fn from_ints(c: [i64; 6]) -> Self {
        QuadraticForm { coeffs: c.map(int) }
    }

    /// Recovers the form from its values at the basis vectors and their pairwise sums.
    pub fn from_values(mut q: impl FnMut([i64; 3]) -> Result<Rat>) -> Result<Self> {
        let sq = [q([1, 0, 0])?, q([0, 1, 0])?, q([0, 0, 1])?];
        let mixed = |v: Rat, i: usize, j: usize| v - &sq[i] - &sq[j];
        let c12 = mixed(q([1, 1, 0])?, 0, 1);
        let c13 = mixed(q([1, 0, 1])?, 0, 2);
        let c23 = mixed(q([0, 1, 1])?, 1, 2);
        let [a, b, c] = sq;
        Ok(QuadraticForm {
            coeffs: [a, b, c, c12, c13, c23],
        })
    }

    pub fn square_of_linear(l: &[Rat; 3]) -> Self {
        QuadraticForm {
            coeffs: MONOMIALS.map(|(i, j)| {
                if i == j {
                    &l[i] * &l[i]
                } else {
                    int(2) * &l[i] * &l[j]
                }
            }),
        }
    }

    pub fn eval(&self, s: &[Rat; 3]) -> Rat {
        MONOMIALS
            .iter()
            .zip(&self.coeffs)
            .map(|(&(i, j), c)| c * &s[i] * &s[j])
            .sum()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        QuadraticForm {
            coeffs: self.coeffs.clone().map(|x| x * c),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl std::ops::Sub for &QuadraticForm {
    type Output = QuadraticForm;
    fn sub(self, rhs: &QuadraticForm) -> QuadraticForm {
        let mut c = self.coeffs.clone();
        for (x, y) in c.iter_mut().zip(&rhs.coeffs) {
            *x -= y;
        }
        QuadraticForm { coeffs: c }
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 6] = ["s1^2", "s2^2", "s3^2", "s1*s2", "s1*s3", "s2*s3"];
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .zip(NAMES)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, n)| format!("{}*{n}", fmt_rat(c)))
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + ").replace("+ -", "- "))
        }
    }
}

/// The operator `s1 (C_g - Υ - C_k) + s2 Υ + s3 C_k` on `space`.
pub fn laplace_on_invariants(
    rho: &Representation,
    space: &InvariantSpace,
    g: &SubalgebraBasis,
    k: &SubalgebraBasis,
    p2: &SubalgebraBasis,
    scale: &Rat,
) -> Result<AffineOperator> {
    if space.dim() == 0 {
        return Err(Error::Invalid(format!("{}: no fixed vectors", space.label)));
    }
    let cg = restrict_operator(&minus_casimir(rho, g, scale)?, space)?;
    let ck = restrict_operator(&minus_casimir(rho, k, scale)?, space)?;
    let up = restrict_operator(&tricky_term(rho, p2, scale)?, space)?;
    let a1 = &(&cg - &up) - &ck;
    Ok(AffineOperator { a: [a1, up, ck] })
}

/// `2 χ_m(e) χ_m(f) v_i` computed in the basis `v_0, …, v_m` with
/// `h v_i = (m-2i) v_i`, `f v_i = v_{i+1}`, `e v_i = i(m-i+1) v_{i-1}`.
pub fn sl2_string_scalar(m: usize, i: usize) -> Result<Rat> {
    if i > m {
        return Err(Error::Invalid(format!("index {i} exceeds {m}")));
    }
    let n = m + 1;
    let h = ExactMatrix::from_fn(n, n, |r, c| {
        GaussRat::from_int(if r == c { m as i64 - 2 * r as i64 } else { 0 })
    });
    let f = ExactMatrix::from_fn(n, n, |r, c| GaussRat::from_int(i64::from(r == c + 1)));
    let e = ExactMatrix::from_fn(n, n, |r, c| {
        GaussRat::from_int(if c == r + 1 {
            (c * (m - c + 1)) as i64
        } else {
            0
        })
    });
    if e.commutator(&f) != h
        || h.commutator(&e) != e.scale_rat(&int(2))
        || h.commutator(&f) != f.scale_rat(&int(-2))
    {
        return Err(Error::Verification(format!(
            "sl2 relations fail in dimension {n}"
        )));
    }
    let op = (&e * &f).scale_rat(&int(2));
    let mut v = vec![GaussRat::zero(); n];
    v[i] = GaussRat::one();
    let w = op.mul_vec(&v);
    if w.iter().enumerate().any(|(k, x)| k != i && !x.is_zero()) {
        return Err(Error::Verification(
            "2ef does not preserve the weight line".into(),
        ));
    }
    Ok(w[i].re.clone())
}

/// `((dim W)² - 1) / 48`, the scalar of the middle partial sum on a fixed line
/// whose string module has dimension `dim W`.
pub fn upsilon_from_string(dim_w: u64) -> Rat {
    let d = Rat::from_integer(dim_w.into());
    (&d * &d - Rat::one()) / int(48)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_scalars() {
        assert_eq!(sl2_string_scalar(2, 1).unwrap(), int(4));
        assert_eq!(sl2_string_scalar(0, 0).unwrap(), int(0));
        assert_eq!(sl2_string_scalar(4, 2).unwrap(), int(12));
        assert!(sl2_string_scalar(2, 3).is_err());
        for m in 0..8usize {
            for i in 0..=m {
                assert_eq!(
                    sl2_string_scalar(m, i).unwrap(),
                    int((2 * (i + 1) * (m - i)) as i64)
                );
            }
        }
        // zero weight of the 3-dimensional string: 4 / 24
        assert_eq!(
            sl2_string_scalar(2, 1).unwrap() / int(24),
            upsilon_from_string(3)
        );
        assert_eq!(upsilon_from_string(3), rat(1, 6));
    }

    #[test]
    fn quadratic_forms() {
        let q = QuadraticForm::from_ints([1, 2, 3, 4, 5, 6]);
        let s = [int(1), int(2), int(3)];
        assert_eq!(q.eval(&s), int(1 + 8 + 27 + 8 + 15 + 36));
        let r = QuadraticForm::from_values(|v| Ok(q.eval(&v.map(int)))).unwrap();
        assert_eq!(r, q);
        let l = QuadraticForm::square_of_linear(&[int(1), int(1), int(0)]);
        assert_eq!(l, QuadraticForm::from_ints([1, 1, 0, 2, 0, 0]));
        assert_eq!(
            format!("{}", QuadraticForm::from_ints([1, 0, 0, -2, 0, 0])),
            "1*s1^2 - 2*s1*s2"
        );
    }

    #[test]
    fn affine_operator_basics() {
        let id = ExactMatrix::identity(2);
        let n = ExactMatrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        let op = AffineOperator {
            a: [id.clone(), n.clone(), id.scale_rat(&int(0))],
        };
        assert_eq!(op.pairwise_commute(), [true, true, true]);
        assert!(op.scalar_coefficients().is_none());
        // eigenvalues s1 ± s2
        assert_eq!(
            op.reduced_discriminant().unwrap(),
            QuadraticForm::from_ints([0, 1, 0, 0, 0, 0])
        );
        assert!(op.is_self_adjoint(&id));
    }
}
