//! Root systems of B3, G2, A2 (long roots of G2) and A1×A1 in explicit
//! coordinates, with the dual invariant forms used for Casimir scalars.
//!
//! B3 uses ε-coordinates. G2 and its A2 subsystem use three coordinates with
//! zero sum, `α1 = e2 - e3` and `α2 = e1 - 2e2 + e3`. The same formal
//! coordinates serve both for G2 as an abstract group and for the copy of G2
//! inside so(7); [`restrict_b3_to_g2`] is the map between the two tori.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::rational::{fmt_rat, int, rat, Rat};
use crate::exact::ser;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Weight(#[serde(serialize_with = "ser::rats")] pub Vec<Rat>);

impl Weight {
    pub fn new(coords: Vec<Rat>) -> Self {
        Weight(coords)
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Weight(c.iter().map(|&x| int(x)).collect())
    }

    pub fn zero(n: usize) -> Self {
        Weight(vec![Rat::zero(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Rat) -> Weight {
        Weight(self.0.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(fmt_rat).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SystemKind {
    B3,
    G2,
    A2InG2,
    A1xA1,
}

#[derive(Clone, Debug, Serialize)]
pub struct RootSystemData {
    pub kind: SystemKind,
    pub name: &'static str,
    pub positive_roots: Vec<Weight>,
    pub simple_roots: Vec<Weight>,
    pub fundamental_weights: Vec<Weight>,
    pub rho: Weight,
    /// Gram matrix of the dual form on the coordinates.
    #[serde(skip)]
    pub dual_form: Vec<Vec<Rat>>,
}

fn scalar_form(n: usize, c: Rat) -> Vec<Vec<Rat>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { c.clone() } else { Rat::zero() })
                .collect()
        })
        .collect()
}

fn half_sum(roots: &[Weight]) -> Weight {
    let n = roots[0].len();
    roots
        .iter()
        .fold(Weight::zero(n), |acc, r| acc.add(r))
        .scale(&rat(1, 2))
}

impl RootSystemData {
    fn build(
        kind: SystemKind,
        name: &'static str,
        positive_roots: Vec<Weight>,
        simple_roots: Vec<Weight>,
        fundamental_weights: Vec<Weight>,
        dual_form: Vec<Vec<Rat>>,
    ) -> Self {
        let rho = half_sum(&positive_roots);
        RootSystemData {
            kind,
            name,
            positive_roots,
            simple_roots,
            fundamental_weights,
            rho,
            dual_form,
        }
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn coordinate_count(&self) -> usize {
        self.rho.len()
    }

    /// `⟨ξ, η⟩` in the dual form.
    pub fn pairing(&self, xi: &Weight, eta: &Weight) -> Result<Rat> {
        let n = self.coordinate_count();
        if xi.len() != n || eta.len() != n {
            return Err(Error::Dimension(format!(
                "{} expects weights of length {n}",
                self.name
            )));
        }
        let mut acc = Rat::zero();
        for (i, a) in xi.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in eta.0.iter().enumerate() {
                acc += a * b * &self.dual_form[i][j];
            }
        }
        Ok(acc)
    }

    /// `⟨λ, α^∨⟩ = 2⟨λ, α⟩ / ⟨α, α⟩`.
    pub fn coroot_pairing(&self, lambda: &Weight, alpha: &Weight) -> Result<Rat> {
        Ok(int(2) * self.pairing(lambda, alpha)? / self.pairing(alpha, alpha)?)
    }

    /// Coefficients of `λ` on the fundamental weights.
    pub fn dynkin_labels(&self, lambda: &Weight) -> Result<Vec<Rat>> {
        self.simple_roots
            .iter()
            .map(|a| self.coroot_pairing(lambda, a))
            .collect()
    }

    pub fn is_dominant_integral(&self, lambda: &Weight) -> Result<bool> {
        Ok(self
            .dynkin_labels(lambda)?
            .iter()
            .all(|l| l.is_integer() && !l.is_negative()))
    }

    /// `Σ a_i ω_i`.
    pub fn weight_from_labels(&self, labels: &[u32]) -> Weight {
        let n = self.coordinate_count();
        labels
            .iter()
            .zip(&self.fundamental_weights)
            .fold(Weight::zero(n), |acc, (&a, w)| {
                acc.add(&w.scale(&int(a as i64)))
            })
    }

    fn require_dominant(&self, lambda: &Weight) -> Result<()> {
        if self.is_dominant_integral(lambda)? {
            Ok(())
        } else {
            Err(Error::Invalid(format!(
                "{lambda} is not dominant integral for {}",
                self.name
            )))
        }
    }

    /// `scale · ⟨Λ, Λ + 2ρ⟩`.
    pub fn casimir_scalar(&self, lambda: &Weight, scale: &Rat) -> Result<Rat> {
        self.require_dominant(lambda)?;
        let shifted = lambda.add(&self.rho.scale(&int(2)));
        Ok(scale * self.pairing(lambda, &shifted)?)
    }

    /// Weyl dimension formula.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<u64> {
        self.require_dominant(lambda)?;
        let shifted = lambda.add(&self.rho);
        let mut d = Rat::one();
        for a in &self.positive_roots {
            d *= self.pairing(&shifted, a)? / self.pairing(&self.rho, a)?;
        }
        if !d.is_integer() {
            return Err(Error::Verification(format!(
                "non-integral Weyl dimension {d}"
            )));
        }
        d.to_integer()
            .try_into()
            .map_err(|_| Error::Invalid("dimension overflow".into()))
    }

    /// All dominant integral weights with Weyl dimension at most `bound`, by
    /// increasing dimension. Adding a fundamental weight strictly raises the
    /// Weyl product, so the admissible label set is closed under decreasing any
    /// label and a search from zero reaches all of it.
    pub fn enumerate_dominant_by_dim(&self, bound: u64) -> Vec<DominantWeight> {
        let mut out = Vec::new();
        if bound == 0 {
            return out;
        }
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([vec![0u32; self.rank()]]);
        seen.insert(vec![0u32; self.rank()]);
        while let Some(labels) = queue.pop_front() {
            let w = self.weight_from_labels(&labels);
            let dim = self
                .weyl_dim(&w)
                .expect("fundamental combinations are dominant");
            if dim > bound {
                continue;
            }
            for i in 0..labels.len() {
                let mut next = labels.clone();
                next[i] += 1;
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
            out.push(DominantWeight {
                labels,
                weight: w,
                dim,
            });
        }
        out.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.labels.cmp(&b.labels)));
        out
    }

    /// Checks ρ, the simple-root expansion of positive roots and
    /// `⟨ω_i, α_j^∨⟩ = δ_ij`.
    pub fn check_invariants(&self) -> Result<()> {
        let problem = |s: String| Err(Error::Verification(format!("{}: {s}", self.name)));
        if self.rho != half_sum(&self.positive_roots) {
            return problem("rho is not half the positive root sum".into());
        }
        for (i, w) in self.fundamental_weights.iter().enumerate() {
            for (j, a) in self.simple_roots.iter().enumerate() {
                let expected = if i == j { Rat::one() } else { Rat::zero() };
                if self.coroot_pairing(w, a)? != expected {
                    return problem(format!("<omega_{}, alpha_{}^v> != delta", i + 1, j + 1));
                }
            }
        }
        for r in &self.positive_roots {
            // the fundamental weights are dual to the coroots, so the simple-root
            // coefficients of r come from the coroot pairings with fundamental weights
            let coeffs = self.simple_root_coefficients(r)?;
            if coeffs.iter().any(|c| !c.is_integer() || c.is_negative()) {
                return problem(format!(
                    "positive root {r} is not a nonnegative simple-root combination"
                ));
            }
        }
        Ok(())
    }

    /// Coefficients `c` with `r = Σ c_j α_j`, from `⟨r, ω_i⟩ = Σ c_j ⟨α_j, ω_i⟩`.
    pub fn simple_root_coefficients(&self, r: &Weight) -> Result<Vec<Rat>> {
        // ⟨α_j, ω_i⟩ = δ_ij ⟨α_j, α_j⟩ / 2
        self.simple_roots
            .iter()
            .zip(&self.fundamental_weights)
            .map(|(a, w)| Ok(int(2) * self.pairing(r, w)? / self.pairing(a, a)?))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominantWeight {
    pub labels: Vec<u32>,
    pub weight: Weight,
    pub dim: u64,
}

fn w(c: &[(i64, i64)]) -> Weight {
    Weight(c.iter().map(|&(n, d)| rat(n, d)).collect())
}

pub fn b3() -> RootSystemData {
    let e = |i: usize| {
        let mut v = vec![0i64; 3];
        v[i] = 1;
        v
    };
    let mut pos = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            let (a, b) = (e(i), e(j));
            pos.push(Weight::from_ints(&[a[0] - b[0], a[1] - b[1], a[2] - b[2]]));
            pos.push(Weight::from_ints(&[a[0] + b[0], a[1] + b[1], a[2] + b[2]]));
        }
    }
    for i in 0..3 {
        pos.push(Weight::from_ints(&e(i)));
    }
    RootSystemData::build(
        SystemKind::B3,
        "B3",
        pos,
        vec![
            Weight::from_ints(&[1, -1, 0]),
            Weight::from_ints(&[0, 1, -1]),
            Weight::from_ints(&[0, 0, 1]),
        ],
        vec![
            Weight::from_ints(&[1, 0, 0]),
            Weight::from_ints(&[1, 1, 0]),
            w(&[(1, 2), (1, 2), (1, 2)]),
        ],
        scalar_form(3, rat(1, 10)),
    )
}

/// G2 positive roots as `(a, b)` for `a α1 + b α2`.
pub const G2_POSITIVE: [(i64, i64); 6] = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)];

pub fn g2_root(a: i64, b: i64) -> Weight {
    // a (e2 - e3) + b (e1 - 2e2 + e3)
    Weight::from_ints(&[b, a - 2 * b, b - a])
}

pub fn g2() -> RootSystemData {
    RootSystemData::build(
        SystemKind::G2,
        "G2",
        G2_POSITIVE.iter().map(|&(a, b)| g2_root(a, b)).collect(),
        vec![g2_root(1, 0), g2_root(0, 1)],
        vec![
            Weight::from_ints(&[1, 0, -1]),
            Weight::from_ints(&[2, -1, -1]),
        ],
        scalar_form(3, rat(1, 24)),
    )
}

/// The long roots of G2 form an A2 system, the roots of su(3) ⊂ g2.
pub fn a2_in_g2() -> RootSystemData {
    RootSystemData::build(
        SystemKind::A2InG2,
        "A2 in G2",
        vec![g2_root(3, 1), g2_root(0, 1), g2_root(3, 2)],
        vec![g2_root(3, 1), g2_root(0, 1)],
        vec![
            Weight::from_ints(&[1, 0, -1]),
            Weight::from_ints(&[1, -1, 0]),
        ],
        scalar_form(3, rat(1, 18)),
    )
}

/// `σ_a ⊗ σ_b` has highest weight `(a/2, b/2)`.
pub fn a1xa1() -> RootSystemData {
    RootSystemData::build(
        SystemKind::A1xA1,
        "A1xA1",
        vec![Weight::from_ints(&[1, 0]), Weight::from_ints(&[0, 1])],
        vec![Weight::from_ints(&[1, 0]), Weight::from_ints(&[0, 1])],
        vec![w(&[(1, 2), (0, 1)]), w(&[(0, 1), (1, 2)])],
        scalar_form(2, Rat::one()),
    )
}

pub fn builtin_systems() -> Vec<RootSystemData> {
    vec![b3(), g2(), a2_in_g2(), a1xa1()]
}

/// `σ_a ⊗ σ_b` as a weight of [`a1xa1`].
pub fn sigma_pair(a: u32, b: u32) -> Weight {
    w(&[(a as i64, 2), (b as i64, 2)])
}

/// Restriction of an so(7) torus weight to the torus of the embedded G2,
/// whose coroots are `H1 - H2 + 2H3` and `H2 - H3`. Returns the G2 weight
/// with those Dynkin labels.
pub fn restrict_b3_to_g2(lambda: &Weight) -> Result<Weight> {
    if lambda.len() != 3 {
        return Err(Error::Dimension("B3 weights have three coordinates".into()));
    }
    let l = &lambda.0;
    let a1 = &l[0] - &l[1] + int(2) * &l[2];
    let a2 = &l[1] - &l[2];
    let g = g2();
    let w1 = g.fundamental_weights[0].scale(&a1);
    Ok(w1.add(&g.fundamental_weights[1].scale(&a2)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn systems_are_consistent() {
        for s in builtin_systems() {
            s.check_invariants().unwrap();
        }
        assert_eq!(b3().rho.scale(&int(2)), Weight::from_ints(&[5, 3, 1]));
        assert_eq!(g2().rho, Weight::from_ints(&[3, -1, -2]));
        assert_eq!(a2_in_g2().rho, Weight::from_ints(&[2, -1, -1]));
    }

    #[test]
    fn pairings() {
        let b = b3();
        let e1 = Weight::from_ints(&[1, 0, 0]);
        assert_eq!(b.pairing(&e1, &e1).unwrap(), rat(1, 10));
        let g = g2();
        assert_eq!(
            g.pairing(&e1, &Weight::from_ints(&[0, 1, 0])).unwrap(),
            Rat::zero()
        );
        assert_eq!(b.pairing(&e1, &Weight::zero(3)).unwrap(), Rat::zero());
        assert!(b.pairing(&e1, &Weight::zero(2)).is_err());
    }

    #[test]
    fn casimirs_and_dimensions() {
        let b = b3();
        let one = Rat::one();
        let omega3 = b.weight_from_labels(&[0, 0, 1]);
        let omega13 = b.weight_from_labels(&[1, 0, 1]);
        assert_eq!(b.casimir_scalar(&omega3, &one).unwrap(), rat(21, 40));
        assert_eq!(b.casimir_scalar(&omega13, &one).unwrap(), rat(49, 40));
        assert_eq!(b.weyl_dim(&omega3).unwrap(), 8);
        assert_eq!(b.weyl_dim(&omega13).unwrap(), 48);
        assert_eq!(b.weyl_dim(&Weight::zero(3)).unwrap(), 1);
        let g = g2();
        assert_eq!(g.weyl_dim(&g.weight_from_labels(&[0, 1])).unwrap(), 14);
        assert_eq!(
            g.casimir_scalar(&g.weight_from_labels(&[2, 0]), &rat(4, 5))
                .unwrap(),
            rat(14, 15)
        );
        let a2 = a2_in_g2();
        assert_eq!(
            a2.casimir_scalar(&a2.weight_from_labels(&[1, 1]), &one)
                .unwrap(),
            one
        );
        assert!(b
            .casimir_scalar(&Weight::from_ints(&[0, 0, -1]), &one)
            .is_err());
        assert!(b.weyl_dim(&Weight::from_ints(&[0, 1, 2])).is_err());
        let h = a1xa1();
        assert_eq!(h.weyl_dim(&sigma_pair(3, 1)).unwrap(), 8);
    }

    #[test]
    fn enumeration() {
        let dims: Vec<u64> = g2()
            .enumerate_dominant_by_dim(21)
            .iter()
            .map(|d| d.dim)
            .collect();
        assert_eq!(dims, vec![1, 7, 14]);
        let b: Vec<(Vec<u32>, u64)> = b3()
            .enumerate_dominant_by_dim(56)
            .into_iter()
            .map(|d| (d.labels, d.dim))
            .collect();
        assert_eq!(
            b,
            vec![
                (vec![0, 0, 0], 1),
                (vec![1, 0, 0], 7),
                (vec![0, 0, 1], 8),
                (vec![0, 1, 0], 21),
                (vec![2, 0, 0], 27),
                (vec![0, 0, 2], 35),
                (vec![1, 0, 1], 48),
            ]
        );
        assert!(b3().enumerate_dominant_by_dim(0).is_empty());
    }

    #[test]
    fn restriction_to_g2() {
        let b = b3();
        // standard representation: highest weight e1 restricts to ω1 of G2
        assert_eq!(
            restrict_b3_to_g2(&b.weight_from_labels(&[1, 0, 0])).unwrap(),
            g2().fundamental_weights[0]
        );
        // spin: (1/2,1/2,1/2) also restricts to ω1
        assert_eq!(
            restrict_b3_to_g2(&b.weight_from_labels(&[0, 0, 1])).unwrap(),
            g2().fundamental_weights[0]
        );
    }
}
