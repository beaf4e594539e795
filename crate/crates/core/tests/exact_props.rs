use liespec_core::exact::sturm::{count_roots, rational_roots, refine_root};
use liespec_core::exact::{int, parse_rat, rat, sturm_isolate, Domain};
use liespec_core::{ExactMatrix, GaussRat, Rat, RatPoly};
use num_traits::Zero;
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn gauss() -> impl Strategy<Value = GaussRat> {
    (small_rat(), small_rat()).prop_map(|(a, b)| GaussRat::new(a, b))
}

fn matrix(n: usize) -> impl Strategy<Value = ExactMatrix> {
    prop::collection::vec(gauss(), n * n)
        .prop_map(move |v| ExactMatrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
}

fn from_roots(roots: &[Rat]) -> RatPoly {
    roots.iter().fold(RatPoly::constant(int(1)), |acc, r| {
        &acc * &RatPoly::linear(-r.clone(), int(1))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gauss_field_axioms(a in gauss(), b in gauss(), c in gauss()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn gauss_display_round_trips(a in gauss()) {
        prop_assert_eq!(GaussRat::parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn rational_text_round_trips(a in small_rat()) {
        prop_assert_eq!(parse_rat(&liespec_core::exact::fmt_rat(&a)).unwrap(), a);
    }

    #[test]
    fn kernel_vectors_are_annihilated(m in matrix(4)) {
        let k = m.kernel();
        prop_assert_eq!(k.len() + m.rank(), 4);
        for v in &k {
            prop_assert!((&m * v).is_zero());
        }
    }

    #[test]
    fn char_poly_vanishes_at_the_matrix(m in matrix(3)) {
        // Cayley-Hamilton with coefficients from the lowest degree upward
        let c = m.char_poly_coeffs().unwrap();
        let mut acc = ExactMatrix::zeros(3, 3);
        let mut power = ExactMatrix::identity(3);
        for coeff in &c {
            acc = &acc + &power.scale(coeff);
            power = &power * &m;
        }
        prop_assert!(acc.is_zero());
    }

    #[test]
    fn transpose_reverses_products(a in matrix(3), b in matrix(3)) {
        prop_assert_eq!((&a * &b).transpose(), &b.transpose() * &a.transpose());
        prop_assert_eq!((&a * &b).trace(), (&b * &a).trace());
    }

    #[test]
    fn sturm_counts_distinct_roots(mut roots in prop::collection::vec(small_rat(), 1..6)) {
        let p = from_roots(&roots);
        roots.sort();
        roots.dedup();
        let all = count_roots(&p, &int(-100), &int(100)).unwrap();
        prop_assert_eq!(all, roots.len());
        prop_assert_eq!(rational_roots(&p), roots.clone());
        let iv = sturm_isolate(&p, &Domain::AllReals).unwrap();
        prop_assert_eq!(iv.len(), roots.len());
        for (i, r) in iv.iter().zip(&roots) {
            prop_assert!(i.contains(r));
        }
    }

    #[test]
    fn refinement_keeps_the_root(k in 2i64..40) {
        // x^2 - k has the irrational root sqrt(k) unless k is square
        let p = RatPoly::from_ints(&[-k, 0, 1]);
        let iv = sturm_isolate(&p, &Domain::PositiveReals).unwrap();
        prop_assert_eq!(iv.len(), 1);
        let fine = refine_root(&p, &iv[0], &rat(1, 1_000_000_000)).unwrap();
        let approx = liespec_core::exact::sturm::approximate(&fine);
        prop_assert!((approx - (k as f64).sqrt()).abs() < 1e-8);
        prop_assert!(fine.exact || fine.width() <= rat(1, 1_000_000_000));
    }

    #[test]
    fn division_reconstructs(a in prop::collection::vec(small_rat(), 1..7), b in prop::collection::vec(small_rat(), 1..4)) {
        let (a, b) = (RatPoly::new(a), RatPoly::new(b));
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }
}

#[test]
fn known_polynomials() {
    // x(20 - x^2)^2 - 512 has exactly two positive roots, one of them 2
    let p = RatPoly::from_ints(&[-512, 400, 0, -40, 0, 1]);
    let iv = sturm_isolate(&p, &Domain::PositiveReals).unwrap();
    assert_eq!(iv.len(), 2);
    assert!(iv[0].exact && iv[0].lo == int(2));
    let r = refine_root(&p, &iv[1], &rat(1, 1_000_000_000_000)).unwrap();
    assert!((liespec_core::exact::sturm::approximate(&r) - 5.44915345).abs() < 1e-8);
    assert!(!p.eval(&Rat::zero()).is_zero());
}
