//! Exact Gaussian rationals `a + b i` with `a, b` in ℚ.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{fmt_rat, int, parse_rat, Rat};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn real(re: Rat) -> Self {
        GaussRat {
            re,
            im: Rat::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(int(n))
    }

    pub fn i() -> Self {
        GaussRat {
            re: Rat::zero(),
            im: Rat::one(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::real(Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, r: &Rat) -> Self {
        GaussRat {
            re: &self.re * r,
            im: &self.im * r,
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Singular);
        }
        if self.im.is_zero() {
            return Ok(Self::real(self.re.recip()));
        }
        let n = self.norm_sqr();
        Ok(GaussRat {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }

    /// Parses `a/b+c/d*i`, `c*i`, `-i`, `3` and similar.
    pub fn parse(text: &str) -> Result<Self> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("not a Gaussian rational: {text:?}"));
        if t.is_empty() {
            return Err(bad());
        }
        let Some(body) = t.strip_suffix('i') else {
            return Ok(Self::real(parse_rat(&t)?));
        };
        let body = body.strip_suffix('*').unwrap_or(body);
        // split at the last sign that is not the leading one and not part of an exponent
        let bytes = body.as_bytes();
        let mut cut = None;
        for k in (1..bytes.len()).rev() {
            if (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E') {
                cut = Some(k);
                break;
            }
        }
        let (re_txt, im_txt) = match cut {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let im = match im_txt {
            "" | "+" => Rat::one(),
            "-" => -Rat::one(),
            s => parse_rat(s).map_err(|_| bad())?,
        };
        let re = if re_txt.is_empty() {
            Rat::zero()
        } else {
            parse_rat(re_txt).map_err(|_| bad())?
        };
        Ok(GaussRat { re, im })
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rat(&self.re)),
            (true, false) => write!(f, "{}*i", fmt_rat(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(
                    f,
                    "{}{}{}*i",
                    fmt_rat(&self.re),
                    sign,
                    fmt_rat(&self.im.abs())
                )
            }
        }
    }
}

impl Serialize for GaussRat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        GaussRat::parse(&s).map_err(serde::de::Error::custom)
    }
}

impl From<Rat> for GaussRat {
    fn from(r: Rat) -> Self {
        GaussRat::real(r)
    }
}

fn mul_ref(a: &GaussRat, b: &GaussRat) -> GaussRat {
    if a.im.is_zero() && b.im.is_zero() {
        return GaussRat::real(&a.re * &b.re);
    }
    if a.im.is_zero() {
        return b.scale(&a.re);
    }
    if b.im.is_zero() {
        return a.scale(&b.re);
    }
    GaussRat {
        re: &a.re * &b.re - &a.im * &b.im,
        im: &a.re * &b.im + &a.im * &b.re,
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&GaussRat> for &GaussRat {
            type Output = GaussRat;
            fn $m(self, rhs: &GaussRat) -> GaussRat {
                let f: fn(&GaussRat, &GaussRat) -> GaussRat = $body;
                f(self, rhs)
            }
        }
        impl $tr<GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $m(self, rhs: GaussRat) -> GaussRat {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $m(self, rhs: &GaussRat) -> GaussRat {
                (&self).$m(rhs)
            }
        }
        impl $tr<GaussRat> for &GaussRat {
            type Output = GaussRat;
            fn $m(self, rhs: GaussRat) -> GaussRat {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| GaussRat {
    re: &a.re + &b.re,
    im: &a.im + &b.im
});
binop!(Sub, sub, |a, b| GaussRat {
    re: &a.re - &b.re,
    im: &a.im - &b.im
});
binop!(Mul, mul, mul_ref);
// Division by zero panics, as for `BigRational`.
binop!(Div, div, |a, b| mul_ref(
    a,
    &b.inv().expect("division by zero")
));

impl AddAssign<&GaussRat> for GaussRat {
    fn add_assign(&mut self, rhs: &GaussRat) {
        self.re += &rhs.re;
        if !rhs.im.is_zero() {
            self.im += &rhs.im;
        }
    }
}

impl SubAssign<&GaussRat> for GaussRat {
    fn sub_assign(&mut self, rhs: &GaussRat) {
        self.re -= &rhs.re;
        if !rhs.im.is_zero() {
            self.im -= &rhs.im;
        }
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn g(a: (i64, i64), b: (i64, i64)) -> GaussRat {
        GaussRat::new(rat(a.0, a.1), rat(b.0, b.1))
    }

    #[test]
    fn arithmetic() {
        let a = g((1, 2), (3, 1));
        let b = g((-2, 1), (1, 3));
        assert_eq!(&a * &b, g((-2, 1), (-35, 6)));
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(GaussRat::i() * GaussRat::i(), GaussRat::from_int(-1));
        assert_eq!(a.conj().conj(), a);
        assert!(GaussRat::zero().inv().is_err());
    }

    #[test]
    fn text_round_trip() {
        let cases = [
            (g((1, 2), (0, 1)), "1/2"),
            (g((0, 1), (-1, 2)), "-1/2*i"),
            (g((3, 4), (5, 6)), "3/4+5/6*i"),
            (g((-3, 4), (-5, 6)), "-3/4-5/6*i"),
            (g((0, 1), (0, 1)), "0"),
            (g((0, 1), (1, 1)), "1*i"),
        ];
        for (v, s) in cases {
            assert_eq!(v.to_string(), s);
            assert_eq!(GaussRat::parse(s).unwrap(), v);
        }
        assert_eq!(GaussRat::parse("-i").unwrap(), g((0, 1), (-1, 1)));
        assert_eq!(GaussRat::parse("2+i").unwrap(), g((2, 1), (1, 1)));
        assert!(GaussRat::parse("x*i").is_err());
    }
}
