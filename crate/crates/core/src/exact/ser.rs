//! Serde helpers that write exact rationals as `p/q` strings.

use serde::ser::SerializeSeq;
use serde::Serializer;

use super::rational::{fmt_rat, Rat};

pub fn rat<S: Serializer>(x: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rat(x))
}

pub fn rats<S: Serializer, T: AsRef<[Rat]>>(xs: &T, s: S) -> Result<S::Ok, S::Error> {
    let xs = xs.as_ref();
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&fmt_rat(x))?;
    }
    seq.end()
}

pub fn opt_rat<S: Serializer>(x: &Option<Rat>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(x) => s.serialize_some(&fmt_rat(x)),
        None => s.serialize_none(),
    }
}
