//! The standard and spin representations of so(7, ℂ) in weight bases.

use super::Representation;
use crate::error::{Error, Result};
use crate::exact::{rat, ExactMatrix, GaussRat, Rat};
use crate::lie::Weight;
use crate::so7::subalgebra::so7_basis;
use crate::so7::{ChevalleyBasis, Root};

/// Standard weights in basis order: `ε1, ε2, ε3, -ε1, -ε2, -ε3, 0`.
const STANDARD_WEIGHTS: [[i64; 3]; 7] = [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [-1, 0, 0],
    [0, -1, 0],
    [0, 0, -1],
    [0, 0, 0],
];

fn standard_label(w: &[i64; 3]) -> String {
    match w.iter().position(|&c| c != 0) {
        None => "u_0".into(),
        Some(i) if w[i] > 0 => format!("u_e{}", i + 1),
        Some(i) => format!("u_-e{}", i + 1),
    }
}

fn standard_index(w: [i64; 3]) -> usize {
    STANDARD_WEIGHTS
        .iter()
        .position(|&s| s == w)
        .expect("standard weight")
}

/// Columns `u_μ` in the canonical basis of ℂ⁷: `u_{±εi} = e_{2i-1} ∓ i e_{2i}`, `u_0 = e_7`.
pub fn standard_u_basis() -> ExactMatrix {
    ExactMatrix::from_fn(7, 7, |row, col| {
        let w = STANDARD_WEIGHTS[col];
        match w.iter().position(|&c| c != 0) {
            None => GaussRat::from_int(i64::from(row == 6)),
            Some(i) if row == 2 * i => GaussRat::one(),
            Some(i) if row == 2 * i + 1 => GaussRat::new(Rat::default(), rat(-w[i], 1)),
            _ => GaussRat::zero(),
        }
    })
}

/// The nonzero entries `X_α · u_μ = c u_{μ+α}` of the standard table.
fn standard_table_entry(alpha: Root, mu: [i64; 3]) -> Option<i64> {
    let a = alpha.0.map(i64::from);
    let target = [mu[0] + a[0], mu[1] + a[1], mu[2] + a[2]];
    if !STANDARD_WEIGHTS.contains(&target) {
        return None;
    }
    let nz: Vec<usize> = (0..3).filter(|&k| a[k] != 0).collect();
    if nz.len() == 1 {
        let k = nz[0];
        let s = a[k];
        // X_{εk}: u_0 ↦ u_{εk}, u_{-εk} ↦ -2u_0; X_{-εk}: u_0 ↦ -u_{-εk}, u_{εk} ↦ 2u_0
        return Some(match (s, mu[k]) {
            (1, 0) => 1,
            (1, _) => -2,
            (_, 0) => -1,
            _ => 2,
        });
    }
    let (i, j) = (nz[0], nz[1]);
    let (si, sj) = (a[i], a[j]);
    // the vector acted on is ±ε_i or ±ε_j
    let on_i = mu[i] != 0;
    Some(match (si, sj, on_i) {
        (1, -1, false) => 1,   // X_{εi-εj} u_{εj} = u_{εi}
        (1, -1, true) => -1,   // X_{εi-εj} u_{-εi} = -u_{-εj}
        (-1, 1, false) => -1,  // X_{-εi+εj} u_{-εj} = -u_{-εi}
        (-1, 1, true) => 1,    // X_{-εi+εj} u_{εi} = u_{εj}
        (1, 1, false) => 1,    // X_{εi+εj} u_{-εj} = u_{εi}
        (1, 1, true) => -1,    // X_{εi+εj} u_{-εi} = -u_{εj}
        (-1, -1, false) => -1, // X_{-εi-εj} u_{εj} = -u_{-εi}
        _ => 1,                // X_{-εi-εj} u_{εi} = u_{-εj}
    })
}

fn diagonal_weights(weights: &[Weight], i: usize) -> ExactMatrix {
    let d: Vec<GaussRat> = weights
        .iter()
        .map(|w| GaussRat::real(w.0[i].clone()))
        .collect();
    ExactMatrix::diagonal(&d)
}

fn images_from_table(
    basis: &ChevalleyBasis,
    weights: &[Weight],
    mut entry: impl FnMut(Root, usize) -> Option<(GaussRat, usize)>,
) -> Vec<ExactMatrix> {
    let n = weights.len();
    let mut images: Vec<ExactMatrix> = (0..3).map(|i| diagonal_weights(weights, i)).collect();
    for &r in &basis.roots {
        let mut m = ExactMatrix::zeros(n, n);
        for col in 0..n {
            if let Some((c, row)) = entry(r, col) {
                m[(row, col)] = c;
            }
        }
        images.push(m);
    }
    images
}

/// Standard module with basis `u_μ`. The table action must agree with the
/// defining action on ℂ⁷ in the u-basis.
pub fn standard_rep(basis: &ChevalleyBasis) -> Result<Representation> {
    let weights: Vec<Weight> = STANDARD_WEIGHTS
        .iter()
        .map(|w| Weight::from_ints(w))
        .collect();
    let images = images_from_table(basis, &weights, |r, col| {
        let mu = STANDARD_WEIGHTS[col];
        let c = standard_table_entry(r, mu)?;
        let a = r.0.map(i64::from);
        Some((
            GaussRat::from_int(c),
            standard_index([mu[0] + a[0], mu[1] + a[1], mu[2] + a[2]]),
        ))
    });
    let p = standard_u_basis();
    let p_inv = p.inverse()?;
    for ((name, x), img) in basis.elements().iter().zip(&images) {
        let defining = &(&p_inv * x.matrix()) * &p;
        if &defining != img {
            return Err(Error::Verification(format!(
                "standard table disagrees with the matrix action of {name}"
            )));
        }
    }
    let form = &p.adjoint() * &p;
    Representation::new(
        "standard",
        STANDARD_WEIGHTS.iter().map(standard_label).collect(),
        Some(weights),
        so7_basis(basis)?,
        images,
        form,
    )
}

/// Spin weights in basis order: `ω3, ω3-ε1, ω3-ε2, ω3-ε3, ε1-ω3, ε2-ω3, ε3-ω3, -ω3`.
pub const SPIN_LABELS: [&str; 8] = [
    "v_w", "v_w-e1", "v_w-e2", "v_w-e3", "v_e1-w", "v_e2-w", "v_e3-w", "v_-w",
];

fn spin_weight(k: usize) -> Weight {
    let h = rat(1, 2);
    let w3 = Weight::new(vec![h.clone(), h.clone(), h]);
    let e = |i: usize| {
        let mut v = [0i64; 3];
        v[i] = 1;
        Weight::from_ints(&v)
    };
    match k {
        0 => w3,
        1..=3 => w3.sub(&e(k - 1)),
        4..=6 => e(k - 4).sub(&w3),
        _ => w3.neg(),
    }
}

/// `(root, source, numerator, denominator, target)` for `X_root v_source = c v_target`.
pub const SPIN_TABLE: [([i8; 3], usize, i64, i64, usize); 48] = [
    ([1, 0, 0], 1, -2, 1, 0),
    ([0, 1, 0], 2, -2, 1, 0),
    ([0, 0, 1], 3, -2, 1, 0),
    ([1, 0, 0], 6, -2, 1, 2),
    ([0, 1, 0], 6, 2, 1, 1),
    ([0, 0, 1], 5, 2, 1, 1),
    ([1, 0, 0], 5, -2, 1, 3),
    ([0, 1, 0], 4, -2, 1, 3),
    ([0, 0, 1], 4, 2, 1, 2),
    ([1, 0, 0], 7, -2, 1, 4),
    ([0, 1, 0], 7, 2, 1, 5),
    ([0, 0, 1], 7, -2, 1, 6),
    ([-1, 0, 0], 0, -1, 2, 1),
    ([0, -1, 0], 0, -1, 2, 2),
    ([0, 0, -1], 0, -1, 2, 3),
    ([-1, 0, 0], 2, -1, 2, 6),
    ([0, -1, 0], 1, 1, 2, 6),
    ([0, 0, -1], 1, 1, 2, 5),
    ([-1, 0, 0], 3, -1, 2, 5),
    ([0, -1, 0], 3, -1, 2, 4),
    ([0, 0, -1], 2, 1, 2, 4),
    ([-1, 0, 0], 4, -1, 2, 7),
    ([0, -1, 0], 5, 1, 2, 7),
    ([0, 0, -1], 6, -1, 2, 7),
    ([1, -1, 0], 1, -1, 1, 2),
    ([1, 0, -1], 1, -1, 1, 3),
    ([0, 1, -1], 2, -1, 1, 3),
    ([1, -1, 0], 5, -1, 1, 4),
    ([1, 0, -1], 6, 1, 1, 4),
    ([0, 1, -1], 6, -1, 1, 5),
    ([-1, 1, 0], 2, -1, 1, 1),
    ([-1, 0, 1], 3, -1, 1, 1),
    ([0, -1, 1], 3, -1, 1, 2),
    ([-1, 1, 0], 4, -1, 1, 5),
    ([-1, 0, 1], 4, 1, 1, 6),
    ([0, -1, 1], 5, -1, 1, 6),
    ([1, 1, 0], 6, 4, 1, 0),
    ([1, 0, 1], 5, 4, 1, 0),
    ([0, 1, 1], 4, 4, 1, 0),
    ([1, 1, 0], 7, 4, 1, 3),
    ([1, 0, 1], 7, -4, 1, 2),
    ([0, 1, 1], 7, 4, 1, 1),
    ([-1, -1, 0], 0, 1, 4, 6),
    ([-1, 0, -1], 0, 1, 4, 5),
    ([0, -1, -1], 0, 1, 4, 4),
    ([-1, -1, 0], 3, 1, 4, 7),
    ([-1, 0, -1], 2, -1, 4, 7),
    ([0, -1, -1], 1, 1, 4, 7),
];

/// Spin module with the tabulated action. Construction checks every
/// bracket relation, the weights of the table entries and an invariant form.
pub fn spin_rep(basis: &ChevalleyBasis) -> Result<Representation> {
    let weights: Vec<Weight> = (0..8).map(spin_weight).collect();
    for &(r, src, _, _, dst) in &SPIN_TABLE {
        if weights[src].add(&Root(r).weight()) != weights[dst] {
            return Err(Error::Verification(format!(
                "spin table entry {} on {} has the wrong weight",
                Root(r).label(),
                SPIN_LABELS[src]
            )));
        }
    }
    let images = images_from_table(basis, &weights, |r, col| {
        SPIN_TABLE
            .iter()
            .find(|e| e.0 == r.0 && e.1 == col)
            .map(|&(_, _, p, q, dst)| (GaussRat::real(rat(p, q)), dst))
    });
    let domain = so7_basis(basis)?;
    let form = diagonal_invariant_form(basis, &images)?;
    Representation::new(
        "spin",
        SPIN_LABELS.iter().map(|s| s.to_string()).collect(),
        Some(weights),
        domain,
        images,
        form,
    )
}

/// The diagonal Hermitian form for which the compact real form acts
/// skew-adjointly, normalized by `g_0 = 1`. Fails unless it is unique and positive.
pub fn diagonal_invariant_form(
    basis: &ChevalleyBasis,
    images: &[ExactMatrix],
) -> Result<ExactMatrix> {
    let domain = so7_basis(basis)?;
    let n = images[0].rows();
    let mut rows: Vec<Vec<GaussRat>> = Vec::new();
    for z in domain.real_form_generators()? {
        let c = domain.coordinates(&z).expect("real form lies in the span");
        let mut a = ExactMatrix::zeros(n, n);
        for (ci, m) in c.iter().zip(images) {
            if !ci.is_zero() {
                a = &a + &m.scale(ci);
            }
        }
        // conj(A_ba) g_b + A_ab g_a = 0
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![GaussRat::zero(); n];
                row[j] += &a[(j, i)].conj();
                row[i] += &a[(i, j)];
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = ExactMatrix::from_rows(rows)?.kernel();
    if kernel.len() != 1 {
        return Err(Error::Verification(format!(
            "invariant diagonal form has a {}-dimensional solution space",
            kernel.len()
        )));
    }
    let v = &kernel[0];
    let scale = v[(0, 0)].inv()?;
    let d: Vec<GaussRat> = (0..n).map(|k| &v[(k, 0)] * &scale).collect();
    if d.iter().any(|x| !x.is_real() || x.re <= Rat::default()) {
        return Err(Error::Verification(
            "invariant diagonal form is not positive".into(),
        ));
    }
    Ok(ExactMatrix::diagonal(&d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::so7::build_so7_chevalley;

    fn g(p: i64, q: i64) -> GaussRat {
        GaussRat::real(rat(p, q))
    }

    #[test]
    fn standard_table_examples() {
        let b = build_so7_chevalley().unwrap();
        let s = standard_rep(&b).unwrap();
        let x = |name: &str, from: &str| {
            let m = s.image_by_name(name).unwrap();
            let v = s.vector(&[(GaussRat::one(), from)]).unwrap();
            s.describe(&(m * &v))
        };
        assert_eq!(x("Xe1", "u_0"), vec![(g(1, 1), "u_e1".to_string())]);
        assert_eq!(x("Xe1", "u_-e1"), vec![(g(-2, 1), "u_0".to_string())]);
        assert_eq!(x("Xe1-e2", "u_e2"), vec![(g(1, 1), "u_e1".to_string())]);
        assert_eq!(x("H1", "u_e1"), vec![(g(1, 1), "u_e1".to_string())]);
        // the solved diagonal form agrees with the pulled-back standard form
        let d = diagonal_invariant_form(&b, &s.images).unwrap();
        assert_eq!(d.scale_rat(&rat(2, 1)), s.form);
    }

    #[test]
    fn spin_table_examples() {
        let b = build_so7_chevalley().unwrap();
        let s = spin_rep(&b).unwrap();
        let x = |name: &str, from: &str| {
            let m = s.image_by_name(name).unwrap();
            let v = s.vector(&[(GaussRat::one(), from)]).unwrap();
            s.describe(&(m * &v))
        };
        assert_eq!(x("Xe1+e2", "v_e3-w"), vec![(g(4, 1), "v_w".to_string())]);
        assert_eq!(x("X-e1", "v_w"), vec![(g(-1, 2), "v_w-e1".to_string())]);
        let (a, c) = (
            s.image_by_name("Xe1").unwrap(),
            s.image_by_name("X-e1").unwrap(),
        );
        let h1 = s.image_by_name("H1").unwrap().scale_rat(&rat(2, 1));
        assert_eq!(a.commutator(c), h1);
        assert_eq!(SPIN_TABLE.len(), 48);
    }
}
