//! Real root isolation with Sturm sequences.
//!
//! Bisection on the square-free part. Rational roots are detected with the
//! rational root theorem and reported as exact one-point intervals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::poly::RatPoly;
use super::rational::{rat, sign, Rat};
use super::ser;
use crate::error::{Error, Result};

/// Where to look for roots.
#[derive(Clone, Debug, PartialEq)]
pub enum Domain {
    AllReals,
    /// The open half-line `(0, ∞)`.
    PositiveReals,
    /// The open interval `(lo, hi)`.
    Open(Rat, Rat),
}

/// Closed interval containing exactly one real root. When `exact` holds,
/// `lo == hi` is the root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsolatingInterval {
    #[serde(serialize_with = "ser::rat")]
    pub lo: Rat,
    #[serde(serialize_with = "ser::rat")]
    pub hi: Rat,
    pub exact: bool,
}

impl IsolatingInterval {
    pub fn exact(r: Rat) -> Self {
        IsolatingInterval {
            lo: r.clone(),
            hi: r,
            exact: true,
        }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(2.into())
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

/// `p, p', -rem(p, p'), ...` until the remainder vanishes.
pub fn sturm_sequence(p: &RatPoly) -> Vec<RatPoly> {
    let mut seq = vec![p.clone()];
    if p.is_zero() {
        return seq;
    }
    let mut next = p.derivative();
    while !next.is_zero() {
        let r = seq
            .last()
            .unwrap()
            .div_rem(&next)
            .expect("nonzero divisor")
            .1;
        seq.push(next);
        next = -&r;
    }
    seq
}

/// Sign variations of the sequence at `x`, zeros skipped.
pub fn sign_variations(seq: &[RatPoly], x: &Rat) -> usize {
    let mut last = 0;
    let mut count = 0;
    for p in seq {
        let s = sign(&p.eval(x));
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots in the half-open interval `(lo, hi]`.
pub fn count_roots(p: &RatPoly, lo: &Rat, hi: &Rat) -> Result<usize> {
    let sqf = p.square_free()?;
    let seq = sturm_sequence(&sqf);
    Ok(sign_variations(&seq, lo).saturating_sub(sign_variations(&seq, hi)))
}

const TRIAL_LIMIT: u64 = 1_000_000;
const MAX_CANDIDATES: usize = 100_000;

fn positive_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut n = n.abs();
    if n.is_zero() {
        return None;
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = 2u64;
    while d <= TRIAL_LIMIT {
        let bd = BigInt::from(d);
        if &bd * &bd > n {
            break;
        }
        let mut e = 0;
        while (&n % &bd).is_zero() {
            n /= &bd;
            e += 1;
        }
        if e > 0 {
            factors.push((bd, e));
        }
        d += 1;
    }
    if !n.is_one() {
        let limit = BigInt::from(TRIAL_LIMIT);
        if n > &limit * &limit {
            // cofactor may be composite; give up rather than guess
            return None;
        }
        factors.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
        if divs.len() > MAX_CANDIDATES {
            return None;
        }
    }
    Some(divs)
}

/// Rational roots of `p`, sorted and without repetition. Detection may miss
/// roots whose numerator or denominator has a large composite factor; such
/// roots are then reported as ordinary isolating intervals.
pub fn rational_roots(p: &RatPoly) -> Vec<Rat> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut coeffs = p.primitive_integer_coeffs();
    let mut roots = Vec::new();
    let shift = coeffs.iter().take_while(|c| c.is_zero()).count();
    if shift > 0 {
        roots.push(Rat::zero());
        coeffs.drain(..shift);
    }
    if coeffs.len() > 1 {
        let q = RatPoly::new(
            coeffs
                .iter()
                .map(|c| Rat::from_integer(c.clone()))
                .collect(),
        );
        if let (Some(num), Some(den)) = (
            positive_divisors(&coeffs[0]),
            positive_divisors(coeffs.last().unwrap()),
        ) {
            if num.len().saturating_mul(den.len()) <= MAX_CANDIDATES {
                for a in &num {
                    for b in &den {
                        if !a.gcd(b).is_one() {
                            continue;
                        }
                        for cand in [
                            Rat::new(a.clone(), b.clone()),
                            Rat::new(-a.clone(), b.clone()),
                        ] {
                            if q.eval(&cand).is_zero() {
                                roots.push(cand);
                            }
                        }
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Isolating intervals for the distinct real roots of `p` in `domain`, sorted.
pub fn sturm_isolate(p: &RatPoly, domain: &Domain) -> Result<Vec<IsolatingInterval>> {
    if let Domain::Open(lo, hi) = domain {
        if lo >= hi {
            return Err(Error::Invalid("empty interval".into()));
        }
    }
    let sqf = p.square_free()?;
    if sqf.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let known = rational_roots(&sqf);
    let bound = sqf.cauchy_bound();
    let (lo, hi) = match domain {
        Domain::AllReals => (-bound.clone(), bound),
        Domain::PositiveReals => (Rat::zero(), bound),
        Domain::Open(lo, hi) => (lo.clone(), hi.clone()),
    };
    let mut out = bisect(&sqf, lo, hi, &known);
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out.dedup();
    Ok(out)
}

/// Roots of the square-free `q` in the open interval `(lo, hi)`.
fn bisect(q: &RatPoly, lo: Rat, hi: Rat, known: &[Rat]) -> Vec<IsolatingInterval> {
    let seq = sturm_sequence(q);
    let is_root = |x: &Rat| q.eval(x).is_zero();
    let open_count =
        |vlo: usize, vhi: usize, hi: &Rat| (vlo - vhi).saturating_sub(usize::from(is_root(hi)));
    let (vlo, vhi) = (sign_variations(&seq, &lo), sign_variations(&seq, &hi));
    let mut work = vec![(open_count(vlo, vhi, &hi), lo, hi, vlo, vhi)];
    let mut out = Vec::new();
    while let Some((count, lo, hi, vlo, vhi)) = work.pop() {
        if count == 0 {
            continue;
        }
        if count == 1 && !is_root(&lo) && !is_root(&hi) {
            debug_assert!(sign(&q.eval(&lo)) * sign(&q.eval(&hi)) < 0);
            match known.iter().find(|r| &lo < *r && *r < &hi) {
                Some(r) => out.push(IsolatingInterval::exact(r.clone())),
                None => out.push(IsolatingInterval {
                    lo,
                    hi,
                    exact: false,
                }),
            }
            continue;
        }
        let m = (&lo + &hi) * rat(1, 2);
        let vm = sign_variations(&seq, &m);
        let m_root = is_root(&m);
        if m_root {
            out.push(IsolatingInterval::exact(m.clone()));
        }
        let left = (vlo - vm).saturating_sub(usize::from(m_root));
        let right = open_count(vm, vhi, &hi);
        work.push((left, lo, m.clone(), vlo, vm));
        work.push((right, m, hi, vm, vhi));
    }
    out
}

/// Bisects an isolating interval of `p` until its width is at most `tol`.
pub fn refine_root(p: &RatPoly, iv: &IsolatingInterval, tol: &Rat) -> Result<IsolatingInterval> {
    if iv.exact {
        return Ok(iv.clone());
    }
    if !tol.is_positive() {
        return Err(Error::Invalid("tolerance must be positive".into()));
    }
    let s = p.square_free()?;
    let (mut lo, mut hi) = (iv.lo.clone(), iv.hi.clone());
    let slo = sign(&s.eval(&lo));
    if slo == 0 || slo * sign(&s.eval(&hi)) >= 0 {
        return Err(Error::Invalid(
            "interval does not bracket a simple sign change".into(),
        ));
    }
    let half = rat(1, 2);
    while &(&hi - &lo) > tol {
        let m = (&lo + &hi) * &half;
        match sign(&s.eval(&m)) {
            0 => return Ok(IsolatingInterval::exact(m)),
            x if x == slo => lo = m,
            _ => hi = m,
        }
    }
    Ok(IsolatingInterval {
        lo,
        hi,
        exact: false,
    })
}

/// Approximate position of the root, for display.
pub fn approximate(iv: &IsolatingInterval) -> f64 {
    iv.midpoint().to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    #[test]
    fn isolates_mixed_roots() {
        // (x-2)(x^2-2)(2x+1)
        let p = &(&RatPoly::from_ints(&[-2, 1]) * &RatPoly::from_ints(&[-2, 0, 1]))
            * &RatPoly::from_ints(&[1, 2]);
        let all = sturm_isolate(&p, &Domain::AllReals).unwrap();
        assert_eq!(all.len(), 4);
        assert!(all.windows(2).all(|w| w[0].hi <= w[1].lo));
        let exact: Vec<Rat> = all
            .iter()
            .filter(|i| i.exact)
            .map(|i| i.lo.clone())
            .collect();
        assert_eq!(exact, vec![rat(-1, 2), int(2)]);
        let pos = sturm_isolate(&p, &Domain::PositiveReals).unwrap();
        assert_eq!(pos.len(), 2);
        let sqrt2 = pos.iter().find(|i| !i.exact).unwrap();
        let fine = refine_root(&p, sqrt2, &rat(1, 1_000_000)).unwrap();
        assert!((approximate(&fine) - 2f64.sqrt()).abs() < 1e-6);
    }

    #[test]
    fn repeated_roots_and_domains() {
        let p = RatPoly::from_ints(&[1, -2, 1]).pow(3);
        assert_eq!(
            sturm_isolate(&p, &Domain::AllReals).unwrap(),
            vec![IsolatingInterval::exact(int(1))]
        );
        assert!(sturm_isolate(&p, &Domain::Open(int(1), int(3)))
            .unwrap()
            .is_empty());
        assert!(sturm_isolate(&p, &Domain::Open(int(3), int(1))).is_err());
        assert!(sturm_isolate(&RatPoly::zero(), &Domain::AllReals).is_err());
        assert!(
            sturm_isolate(&RatPoly::from_ints(&[1, 0, 1]), &Domain::AllReals)
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn counting() {
        let p = RatPoly::from_ints(&[0, -1, 0, 1]);
        assert_eq!(count_roots(&p, &int(-2), &int(2)).unwrap(), 3);
        assert_eq!(count_roots(&p, &int(0), &int(1)).unwrap(), 1);
        assert_eq!(rational_roots(&p), vec![int(-1), int(0), int(1)]);
    }
}
