//! Finite-dimensional representations given by the images of a basis of the
//! acting Lie algebra.

pub mod operators;
pub mod tables;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, GaussRat, Rat};
use crate::lie::Weight;
use crate::so7::{AlgebraElement, SubalgebraBasis};

pub use operators::{
    laplace_on_invariants, minus_casimir, restrict_operator, sl2_string_scalar, tricky_term,
    upsilon_from_string, AffineOperator, QuadraticForm,
};
pub use tables::{spin_rep, standard_rep, standard_u_basis, SPIN_TABLE};

#[derive(Clone, Debug)]
pub struct Representation {
    pub name: String,
    pub labels: Vec<String>,
    /// Torus weights in ε-coordinates, when the basis consists of weight vectors.
    pub weights: Option<Vec<Weight>>,
    pub domain: SubalgebraBasis,
    /// Images of `domain.elements`, in order.
    pub images: Vec<ExactMatrix>,
    /// Invariant Hermitian form `⟨v, w⟩ = v* G w`.
    pub form: ExactMatrix,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomomorphismFailure {
    pub left: String,
    pub right: String,
}

impl Representation {
    /// Builds a representation and checks the bracket relations on every pair
    /// of domain basis elements and the invariance of `form`.
    pub fn new(
        name: &str,
        labels: Vec<String>,
        weights: Option<Vec<Weight>>,
        domain: SubalgebraBasis,
        images: Vec<ExactMatrix>,
        form: ExactMatrix,
    ) -> Result<Self> {
        let n = labels.len();
        if images.len() != domain.dim() {
            return Err(Error::Dimension(format!(
                "{name}: {} images for {} generators",
                images.len(),
                domain.dim()
            )));
        }
        if images
            .iter()
            .chain([&form])
            .any(|m| m.rows() != n || m.cols() != n)
        {
            return Err(Error::Dimension(format!(
                "{name}: image size differs from {n}"
            )));
        }
        if weights.as_ref().is_some_and(|w| w.len() != n) {
            return Err(Error::Dimension(format!(
                "{name}: weight count differs from {n}"
            )));
        }
        let rep = Representation {
            name: name.to_string(),
            labels,
            weights,
            domain,
            images,
            form,
        };
        if let Some(f) = rep.homomorphism_failure()? {
            return Err(Error::Verification(format!(
                "{name}: bracket relation fails on ({}, {})",
                f.left, f.right
            )));
        }
        rep.check_form()?;
        Ok(rep)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Image of an element of the domain span.
    pub fn action(&self, x: &AlgebraElement) -> Result<ExactMatrix> {
        let c = self.domain.coordinates(x).ok_or_else(|| {
            Error::Invalid(format!(
                "{}: element outside {}",
                self.name, self.domain.label
            ))
        })?;
        Ok(self.combine(&c))
    }

    fn combine(&self, c: &[GaussRat]) -> ExactMatrix {
        let n = self.dim();
        let mut out = ExactMatrix::zeros(n, n);
        for (ci, m) in c.iter().zip(&self.images) {
            if !ci.is_zero() {
                out = &out + &m.scale(ci);
            }
        }
        out
    }

    pub fn image_by_name(&self, name: &str) -> Option<&ExactMatrix> {
        self.domain
            .names
            .iter()
            .position(|n| n == name)
            .map(|k| &self.images[k])
    }

    /// First pair `(b_i, b_j)` with `ρ([b_i, b_j]) ≠ [ρ(b_i), ρ(b_j)]`.
    pub fn homomorphism_failure(&self) -> Result<Option<HomomorphismFailure>> {
        let d = self.domain.dim();
        for i in 0..d {
            for j in i + 1..d {
                let br = self.domain.elements[i].bracket(&self.domain.elements[j]);
                let lhs = self.action(&br)?;
                if lhs != self.images[i].commutator(&self.images[j]) {
                    return Ok(Some(HomomorphismFailure {
                        left: self.domain.names[i].clone(),
                        right: self.domain.names[j].clone(),
                    }));
                }
            }
        }
        Ok(None)
    }

    /// Real-form elements act skew-adjointly for `form`, which is Hermitian
    /// and positive on the basis vectors.
    fn check_form(&self) -> Result<()> {
        let g = &self.form;
        if g.adjoint() != *g
            || (0..self.dim()).any(|k| !g[(k, k)].is_real() || g[(k, k)].re <= Rat::default())
        {
            return Err(Error::Verification(format!(
                "{}: form is not Hermitian positive",
                self.name
            )));
        }
        for z in self.domain.real_form_generators()? {
            let a = self.action(&z)?;
            if !(&(&a.adjoint() * g) + &(g * &a)).is_zero() {
                return Err(Error::Verification(format!(
                    "{}: form is not invariant",
                    self.name
                )));
            }
        }
        Ok(())
    }

    /// The same module viewed as a representation of a subspace of the domain.
    pub fn restrict(&self, sub: &SubalgebraBasis) -> Result<Representation> {
        let images = sub
            .elements
            .iter()
            .map(|x| self.action(x))
            .collect::<Result<Vec<_>>>()?;
        Representation::new(
            &format!("{}|{}", self.name, sub.label),
            self.labels.clone(),
            self.weights.clone(),
            sub.clone(),
            images,
            self.form.clone(),
        )
    }

    /// Common kernel of the images of `sub`.
    pub fn invariants(&self, sub: &SubalgebraBasis) -> Result<InvariantSpace> {
        let images = sub
            .elements
            .iter()
            .map(|x| self.action(x))
            .collect::<Result<Vec<_>>>()?;
        let refs: Vec<&ExactMatrix> = images.iter().collect();
        let basis = ExactMatrix::vstack(&refs)?.kernel();
        Ok(InvariantSpace {
            label: format!("{}^{}", self.name, sub.label),
            basis,
        })
    }

    /// Vectors fixed by `sub` on which `op` acts by `lambda`.
    pub fn invariants_in_eigenspace(
        &self,
        sub: &SubalgebraBasis,
        op: &ExactMatrix,
        lambda: &Rat,
    ) -> Result<InvariantSpace> {
        let mut blocks = sub
            .elements
            .iter()
            .map(|x| self.action(x))
            .collect::<Result<Vec<_>>>()?;
        let shift = &ExactMatrix::identity(self.dim()).scale(&GaussRat::real(lambda.clone()));
        blocks.push(op - shift);
        let refs: Vec<&ExactMatrix> = blocks.iter().collect();
        let basis = ExactMatrix::vstack(&refs)?.kernel();
        Ok(InvariantSpace {
            label: format!("{}^{}[{}]", self.name, sub.label, lambda),
            basis,
        })
    }

    /// `u ⊗ v` with the Leibniz action.
    pub fn tensor(&self, other: &Representation) -> Result<Representation> {
        self.same_domain(other)?;
        let (n, m) = (self.dim(), other.dim());
        let (in_, im) = (ExactMatrix::identity(n), ExactMatrix::identity(m));
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| &a.kron(&im) + &in_.kron(b))
            .collect();
        let mut labels = Vec::with_capacity(n * m);
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("{a}⊗{b}"));
            }
        }
        let weights = match (&self.weights, &other.weights) {
            (Some(w1), Some(w2)) => Some(
                w1.iter()
                    .flat_map(|a| w2.iter().map(move |b| a.add(b)))
                    .collect(),
            ),
            _ => None,
        };
        Representation::new(
            &format!("{}⊗{}", self.name, other.name),
            labels,
            weights,
            self.domain.clone(),
            images,
            self.form.kron(&other.form),
        )
    }

    /// Symmetric square with basis the monomials `e_a e_b`, `a ≤ b`, acted on by derivations.
    pub fn sym2(&self) -> Result<Representation> {
        let n = self.dim();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
        let index = |a: usize, b: usize| {
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            a * n - a * (a + 1) / 2 + b
        };
        let images = self
            .images
            .iter()
            .map(|x| {
                let mut m = ExactMatrix::zeros(pairs.len(), pairs.len());
                for (col, &(a, b)) in pairs.iter().enumerate() {
                    for k in 0..n {
                        if !x[(k, a)].is_zero() {
                            m[(index(k, b), col)] += &x[(k, a)];
                        }
                        if !x[(k, b)].is_zero() {
                            m[(index(a, k), col)] += &x[(k, b)];
                        }
                    }
                }
                m
            })
            .collect();
        // equivariant embedding e_a e_b ↦ e_a ⊗ e_b + e_b ⊗ e_a
        let embed = ExactMatrix::from_fn(n * n, pairs.len(), |row, col| {
            let (i, j) = (row / n, row % n);
            let (a, b) = pairs[col];
            if (i, j) == (a, b) || (i, j) == (b, a) {
                GaussRat::from_int(if a == b { 2 } else { 1 })
            } else {
                GaussRat::zero()
            }
        });
        let form = &(&embed.adjoint() * &self.form.kron(&self.form)) * &embed;
        let labels = pairs
            .iter()
            .map(|&(a, b)| format!("{}·{}", self.labels[a], self.labels[b]))
            .collect();
        let weights = self
            .weights
            .as_ref()
            .map(|w| pairs.iter().map(|&(a, b)| w[a].add(&w[b])).collect());
        Representation::new(
            &format!("Sym2({})", self.name),
            labels,
            weights,
            self.domain.clone(),
            images,
            form,
        )
    }

    /// Adjoint action of a subalgebra on its own span.
    pub fn adjoint(name: &str, sub: &SubalgebraBasis) -> Result<Representation> {
        let d = sub.dim();
        let images = sub
            .elements
            .iter()
            .map(|x| {
                let cols = sub
                    .elements
                    .iter()
                    .map(|y| {
                        sub.coordinates(&x.bracket(y)).ok_or_else(|| {
                            Error::Verification(format!("{}: not closed", sub.label))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                ExactMatrix::from_columns(d, &cols)
            })
            .collect::<Result<Vec<_>>>()?;
        let form =
            ExactMatrix::from_fn(d, d, |i, j| sub.elements[i].conj().kappa(&sub.elements[j]));
        Representation::new(name, sub.names.clone(), None, sub.clone(), images, form)
    }

    fn same_domain(&self, other: &Representation) -> Result<()> {
        if self.domain.names != other.domain.names || self.domain.elements != other.domain.elements
        {
            return Err(Error::Invalid(format!(
                "{} and {} act by different algebras",
                self.name, other.name
            )));
        }
        Ok(())
    }

    /// Column vector with the given labeled coefficients.
    pub fn vector(&self, terms: &[(GaussRat, &str)]) -> Result<ExactMatrix> {
        let mut v = vec![GaussRat::zero(); self.dim()];
        for (c, label) in terms {
            let k =
                self.labels.iter().position(|l| l == label).ok_or_else(|| {
                    Error::Parse(format!("{}: no basis vector {label:?}", self.name))
                })?;
            v[k] += c;
        }
        Ok(ExactMatrix::column_vector(v))
    }

    /// Nonzero coefficients of a column vector against the basis labels.
    pub fn describe(&self, v: &ExactMatrix) -> Vec<(GaussRat, String)> {
        (0..self.dim())
            .filter(|&k| !v[(k, 0)].is_zero())
            .map(|k| (v[(k, 0)].clone(), self.labels[k].clone()))
            .collect()
    }

    /// Weight of the `k`-th basis vector evaluated on `Σ c_i H_i`.
    pub fn weight_on(&self, k: usize, h: &[i64; 3]) -> Option<Rat> {
        let w = &self.weights.as_ref()?[k];
        Some(
            w.0.iter()
                .zip(h)
                .map(|(a, c)| a * Rat::from_integer((*c).into()))
                .sum(),
        )
    }
}

/// A space of fixed vectors, as columns in the representation basis.
#[derive(Clone, Debug)]
pub struct InvariantSpace {
    pub label: String,
    pub basis: Vec<ExactMatrix>,
}

impl InvariantSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn matrix(&self, n: usize) -> ExactMatrix {
        if self.basis.is_empty() {
            return ExactMatrix::zeros(n, 0);
        }
        let refs: Vec<&ExactMatrix> = self.basis.iter().collect();
        ExactMatrix::hstack(&refs).expect("columns of equal height")
    }

    /// `true` when `v` lies in the span.
    pub fn contains(&self, v: &ExactMatrix) -> bool {
        let b = self.matrix(v.rows());
        matches!(b.solve(v), Ok(Some(_)))
    }

    /// Same span: each basis spans the other.
    pub fn same_span(&self, others: &[ExactMatrix]) -> bool {
        if others.len() != self.dim() || others.is_empty() {
            return others.is_empty() && self.dim() == 0;
        }
        let n = others[0].rows();
        let refs: Vec<&ExactMatrix> = others.iter().collect();
        let joint =
            ExactMatrix::hstack(&[&self.matrix(n), &ExactMatrix::hstack(&refs).unwrap()]).unwrap();
        joint.rank() == self.dim() && ExactMatrix::hstack(&refs).unwrap().rank() == self.dim()
    }

    /// Gram matrix of the basis for the representation's form.
    pub fn gram(&self, rep: &Representation) -> ExactMatrix {
        let b = self.matrix(rep.dim());
        &(&b.adjoint() * &rep.form) * &b
    }
}
