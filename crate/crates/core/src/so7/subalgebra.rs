//! Linear subspaces of so(7, ℂ) given by explicit bases, and the embedded G2.

use serde::Serialize;

use super::{AlgebraElement, ChevalleyBasis, Root};
use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, GaussRat, Rat};
use crate::lie::{g2, g2_root, G2_POSITIVE};

#[derive(Clone, Debug)]
pub struct SubalgebraBasis {
    pub label: String,
    pub names: Vec<String>,
    pub elements: Vec<AlgebraElement>,
    /// `κ(b_i, b_j)`.
    pub gram: ExactMatrix,
    /// Matrix entries (flattened index) on which the basis is independent.
    pivots: Vec<usize>,
    pivot_inverse: ExactMatrix,
}

#[derive(Clone, Debug, Serialize)]
pub struct NamedElement {
    pub name: String,
    pub matrix: ExactMatrix,
}

impl SubalgebraBasis {
    pub fn new(label: &str, items: Vec<(String, AlgebraElement)>) -> Result<Self> {
        let (names, elements): (Vec<String>, Vec<AlgebraElement>) = items.into_iter().unzip();
        let d = elements.len();
        let flat = ExactMatrix::from_fn(d, 49, |i, k| elements[i].matrix().entries()[k].clone());
        let (_, pivots) = flat.rref();
        if pivots.len() != d {
            return Err(Error::Invalid(format!(
                "{label}: basis elements are linearly dependent"
            )));
        }
        let sub = ExactMatrix::from_fn(d, d, |k, i| {
            elements[i].matrix().entries()[pivots[k]].clone()
        });
        let pivot_inverse = sub.inverse()?;
        let gram = ExactMatrix::from_fn(d, d, |i, j| elements[i].kappa(&elements[j]));
        Ok(SubalgebraBasis {
            label: label.to_string(),
            names,
            elements,
            gram,
            pivots,
            pivot_inverse,
        })
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn named(&self) -> Vec<NamedElement> {
        self.names
            .iter()
            .zip(&self.elements)
            .map(|(n, x)| NamedElement {
                name: n.clone(),
                matrix: x.matrix().clone(),
            })
            .collect()
    }

    pub fn element_by_name(&self, name: &str) -> Option<&AlgebraElement> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|k| &self.elements[k])
    }

    /// Coordinates of `x` in this basis, `None` when `x` is outside the span.
    pub fn coordinates(&self, x: &AlgebraElement) -> Option<Vec<GaussRat>> {
        let v: Vec<GaussRat> = self
            .pivots
            .iter()
            .map(|&k| x.matrix().entries()[k].clone())
            .collect();
        let c = self.pivot_inverse.mul_vec(&v);
        (AlgebraElement::combination(&c, &self.elements) == *x).then_some(c)
    }

    pub fn contains(&self, x: &AlgebraElement) -> bool {
        self.coordinates(x).is_some()
    }

    /// Direct sum of subspaces; fails when they overlap.
    pub fn join(label: &str, parts: &[&SubalgebraBasis]) -> Result<Self> {
        let items = parts
            .iter()
            .flat_map(|p| p.names.iter().cloned().zip(p.elements.iter().cloned()))
            .collect();
        Self::new(label, items)
    }

    /// `[x, y]` lies in the span for all basis elements.
    pub fn is_closed(&self) -> bool {
        self.brackets_into(self, self)
    }

    /// `[self, other] ⊆ target`.
    pub fn brackets_into(&self, other: &SubalgebraBasis, target: &SubalgebraBasis) -> bool {
        self.first_bracket_outside(other, target).is_none()
    }

    pub fn first_bracket_outside(
        &self,
        other: &SubalgebraBasis,
        target: &SubalgebraBasis,
    ) -> Option<(String, String)> {
        for (a, x) in self.names.iter().zip(&self.elements) {
            for (b, y) in other.names.iter().zip(&other.elements) {
                if !target.contains(&x.bracket(y)) {
                    return Some((a.clone(), b.clone()));
                }
            }
        }
        None
    }

    pub fn is_kappa_orthogonal(&self, other: &SubalgebraBasis) -> bool {
        self.elements
            .iter()
            .all(|x| other.elements.iter().all(|y| x.kappa(y).is_zero()))
    }

    /// Basis `b^j` of the span with `B(b_i, b^j) = δ_ij` for `B = scale · κ`.
    pub fn dual_basis(&self, scale: &Rat) -> Result<Vec<AlgebraElement>> {
        let g = self.gram.scale_rat(scale);
        let inv = g.inverse()?;
        let dual: Vec<AlgebraElement> = (0..self.dim())
            .map(|j| AlgebraElement::combination(&inv.column(j), &self.elements))
            .collect();
        for (i, b) in self.elements.iter().enumerate() {
            for (j, d) in dual.iter().enumerate() {
                let v = b.kappa(d).scale(scale);
                if v != if i == j {
                    GaussRat::one()
                } else {
                    GaussRat::zero()
                } {
                    return Err(Error::Verification(format!(
                        "{}: dual basis pairing ({i}, {j})",
                        self.label
                    )));
                }
            }
        }
        Ok(dual)
    }

    /// Real and imaginary parts of the basis elements. They span the real form
    /// of the subspace; each must lie in the complex span.
    pub fn real_form_generators(&self) -> Result<Vec<AlgebraElement>> {
        let mut out = Vec::new();
        for (n, x) in self.names.iter().zip(&self.elements) {
            for part in [x.real_part(), x.imag_part()] {
                if part.is_zero() {
                    continue;
                }
                if !self.contains(&part) {
                    return Err(Error::Verification(format!(
                        "{}: {n} has a component outside the span",
                        self.label
                    )));
                }
                out.push(part);
            }
        }
        Ok(out)
    }
}

/// Dimension of the module generated by `start` under repeated brackets with `gens`.
pub fn generated_module_dim(
    gens: &[AlgebraElement],
    space: &SubalgebraBasis,
    start: &AlgebraElement,
) -> Result<usize> {
    let coords = |x: &AlgebraElement| {
        space.coordinates(x).ok_or_else(|| {
            Error::Verification(format!(
                "{}: not invariant under the acting algebra",
                space.label
            ))
        })
    };
    let mut rows: Vec<Vec<GaussRat>> = Vec::new();
    let mut queue = Vec::new();
    let push = |x: AlgebraElement,
                rows: &mut Vec<Vec<GaussRat>>,
                queue: &mut Vec<AlgebraElement>|
     -> Result<()> {
        let c = coords(&x)?;
        let mut trial = rows.clone();
        trial.push(c);
        if ExactMatrix::from_rows(trial.clone())?.rank() == trial.len() {
            *rows = trial;
            queue.push(x);
        }
        Ok(())
    };
    if start.is_zero() {
        return Ok(0);
    }
    push(start.clone(), &mut rows, &mut queue)?;
    while let Some(v) = queue.pop() {
        for g in gens {
            push(g.bracket(&v), &mut rows, &mut queue)?;
            if rows.len() == space.dim() {
                return Ok(rows.len());
            }
        }
    }
    Ok(rows.len())
}

/// Checks that every nonzero real vector tried generates the whole space
/// under the real form of `acting`. Tried vectors are the real-form
/// generators of `space` and one fixed combination of them.
pub fn is_real_irreducible(acting: &SubalgebraBasis, space: &SubalgebraBasis) -> Result<bool> {
    let gens = acting.real_form_generators()?;
    let mut starts = space.real_form_generators()?;
    let weights: Vec<GaussRat> = (1..=starts.len() as i64)
        .map(|k| GaussRat::from_int(k * k + 1))
        .collect();
    starts.push(AlgebraElement::combination(&weights, &starts));
    for s in &starts {
        if generated_module_dim(&gens, space, s)? != space.dim() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A G2 root `a α1 + b α2`, with a sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct G2Root {
    pub a: i64,
    pub b: i64,
}

impl G2Root {
    pub fn all() -> Vec<G2Root> {
        G2_POSITIVE
            .iter()
            .flat_map(|&(a, b)| [G2Root { a, b }, G2Root { a: -a, b: -b }])
            .collect()
    }

    pub fn label(self) -> String {
        let term = |c: i64, s: &str| match c.abs() {
            0 => String::new(),
            1 => s.to_string(),
            n => format!("{n}{s}"),
        };
        let sign = if self.a < 0 || self.b < 0 { "-" } else { "" };
        let (x, y) = (term(self.a, "a1"), term(self.b, "a2"));
        match (x.is_empty(), y.is_empty()) {
            (false, false) if sign.is_empty() => format!("{x}+{y}"),
            (false, false) => format!("-({x}+{y})"),
            (true, _) => format!("{sign}{y}"),
            (_, true) => format!("{sign}{x}"),
        }
    }

    /// `Y_γ` as a combination of so(7) root vectors.
    fn so7_terms(self) -> Vec<(i64, [i8; 3])> {
        let s: i8 = if self.a < 0 || self.b < 0 { -1 } else { 1 };
        let v = |c: [i8; 3]| c.map(|x| s * x);
        match (self.a.abs(), self.b.abs()) {
            (1, 0) => vec![(1, v([1, -1, 0])), (1, v([0, 0, 1]))],
            (0, 1) => vec![(1, v([0, 1, -1]))],
            (1, 1) => vec![(-1, v([1, 0, -1])), (1, v([0, 1, 0]))],
            (2, 1) => vec![(-1, v([0, 1, 1])), (-1, v([1, 0, 0]))],
            (3, 1) => vec![(-1, v([1, 0, 1]))],
            (3, 2) => vec![(-1, v([1, 1, 0]))],
            _ => unreachable!("not a G2 root"),
        }
    }
}

/// The copy of g2 inside so(7) with its Cartan and root vectors.
#[derive(Clone, Debug)]
pub struct G2Subalgebra {
    pub basis: SubalgebraBasis,
    /// `H̄_{α1} = H1 - H2 + 2H3`, `H̄_{α2} = H2 - H3`.
    pub cartan: [AlgebraElement; 2],
    pub roots: Vec<G2Root>,
    pub root_vectors: Vec<AlgebraElement>,
}

impl G2Subalgebra {
    pub fn y(&self, a: i64, b: i64) -> &AlgebraElement {
        let k = self
            .roots
            .iter()
            .position(|r| r.a == a && r.b == b)
            .expect("G2 root");
        &self.root_vectors[k]
    }

    pub fn y_name(a: i64, b: i64) -> String {
        format!("Y{}", G2Root { a, b }.label())
    }
}

pub fn build_g2_subalgebra(basis: &ChevalleyBasis) -> Result<G2Subalgebra> {
    let comb = |c: [i64; 3]| AlgebraElement::combination(&c.map(GaussRat::from_int), &basis.cartan);
    let cartan = [comb([1, -1, 2]), comb([0, 1, -1])];
    let roots = G2Root::all();
    let root_vectors: Vec<AlgebraElement> = roots
        .iter()
        .map(|r| {
            r.so7_terms()
                .into_iter()
                .fold(AlgebraElement::zero(), |acc, (c, root)| {
                    &acc + &basis.x(Root(root)).scale(&GaussRat::from_int(c))
                })
        })
        .collect();
    let mut items = vec![
        ("Ha1".to_string(), cartan[0].clone()),
        ("Ha2".to_string(), cartan[1].clone()),
    ];
    for (r, y) in roots.iter().zip(&root_vectors) {
        items.push((format!("Y{}", r.label()), y.clone()));
    }
    let sub = SubalgebraBasis::new("g2", items)?;
    if let Some((a, b)) = sub.first_bracket_outside(&sub, &sub) {
        return Err(Error::Verification(format!("g2 not closed: [{a}, {b}]")));
    }
    // each Y_γ is a root vector with Cartan eigenvalues the G2 Cartan integers
    let sys = g2();
    for (r, y) in roots.iter().zip(&root_vectors) {
        let gamma = g2_root(r.a, r.b);
        for (j, h) in cartan.iter().enumerate() {
            let n = sys.coroot_pairing(&gamma, &sys.simple_roots[j])?;
            if h.bracket(y) != y.scale_rat(&n) {
                return Err(Error::Verification(format!(
                    "Y{} is not a root vector for Ha{}",
                    r.label(),
                    j + 1
                )));
            }
        }
    }
    Ok(G2Subalgebra {
        basis: sub,
        cartan,
        roots,
        root_vectors,
    })
}

/// so(7) itself as a [`SubalgebraBasis`] in the Chevalley order.
pub fn so7_basis(basis: &ChevalleyBasis) -> Result<SubalgebraBasis> {
    SubalgebraBasis::new("so7", basis.elements())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::so7::build_so7_chevalley;

    #[test]
    fn g2_inside_so7() {
        let b = build_so7_chevalley().unwrap();
        let g = build_g2_subalgebra(&b).unwrap();
        assert_eq!(g.basis.dim(), 14);
        assert!(g.basis.is_closed());
        assert_eq!(*g.y(3, 2), -b.x(Root([1, 1, 0])));
        assert_eq!(
            g.cartan[1].bracket(g.y(0, 1)),
            g.y(0, 1).scale(&GaussRat::from_int(2))
        );
        assert_eq!(G2Root { a: -3, b: -2 }.label(), "-(3a1+2a2)");
        assert_eq!(G2Root { a: 0, b: -1 }.label(), "-a2");
        assert_eq!(G2Root { a: 2, b: 1 }.label(), "2a1+a2");
    }

    #[test]
    fn dual_bases() {
        let b = build_so7_chevalley().unwrap();
        let cart = SubalgebraBasis::new(
            "t",
            (0..3)
                .map(|i| (format!("H{}", i + 1), b.h(i).clone()))
                .collect(),
        )
        .unwrap();
        let d = cart.dual_basis(&Rat::from_integer(1.into())).unwrap();
        for i in 0..3 {
            assert_eq!(d[i], b.h(i).scale_rat(&rat(-1, 10)));
        }
        // single element with κ(X, X) = 10
        let x = b.h(0).scale(&GaussRat::i());
        let one = SubalgebraBasis::new("x", vec![("x".into(), x.clone())]).unwrap();
        assert_eq!(one.gram[(0, 0)], GaussRat::from_int(10));
        assert_eq!(
            one.dual_basis(&Rat::from_integer(1.into())).unwrap()[0],
            x.scale_rat(&rat(1, 10))
        );
        let isotropic =
            SubalgebraBasis::new("e1", vec![("x".into(), b.x(Root([1, 0, 0])).clone())]).unwrap();
        assert_eq!(
            isotropic.dual_basis(&Rat::from_integer(1.into())),
            Err(Error::Singular)
        );
        assert!(SubalgebraBasis::new(
            "dup",
            vec![("a".into(), b.h(0).clone()), ("b".into(), b.h(0).clone())]
        )
        .is_err());
    }
}
