//! Fixtures shared by the criterion benches.

use liespec_core::exact::{int, rat};
use liespec_core::{ExactMatrix, GaussRat, MetricParams, RatPoly};

/// Dense `n × n` matrix with small Gaussian-rational entries and a nontrivial kernel.
pub fn dense_matrix(n: usize) -> ExactMatrix {
    let mut m = ExactMatrix::from_fn(n, n, |i, j| {
        let k = (i * 7 + j * 3) as i64;
        GaussRat::new(rat(k % 5 - 2, k % 3 + 1), rat(k % 4 - 1, 2))
    });
    if n > 1 {
        for j in 0..n {
            let v = &m[(0, j)] + &m[(1, j)];
            m[(n - 1, j)] = v;
        }
    }
    m
}

/// The eliminated polynomial in radius form for the larger case.
pub fn radius_polynomial() -> RatPoly {
    RatPoly::from_ints(&[-512, 400, 0, -40, 0, 1])
}

/// A generic metric away from the symmetric family.
pub fn generic_metric() -> MetricParams {
    MetricParams::new([int(11), rat(9, 2), rat(7, 3)]).expect("positive")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_kernel_is_nontrivial() {
        assert!(!dense_matrix(6).kernel().is_empty());
    }
}
