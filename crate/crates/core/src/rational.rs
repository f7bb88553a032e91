// SPDX-License-Identifier: Apache-2.0

//! Exact arithmetic: rationals and real quadratic surds `p + q·√d`.
//!
//! Every exponent comparison in the crate goes through these types so that
//! ties (and therefore uniqueness and log factors) are decided exactly.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Exact rational number.
pub type Q = Ratio<i128>;

pub fn q(n: i128, d: i128) -> Q {
    Q::new(n, d)
}

pub fn qi(n: i128) -> Q {
    Q::from_integer(n)
}

/// Formats as `"p"` or `"p/q"`.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `"p/q"`, an integer, or a finite decimal such as `"2.2"` (converted
/// exactly, so `"2.2"` becomes `11/5`).
pub fn parse_q(s: &str) -> Result<Q, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: i128 = n.trim().parse().map_err(|_| bad())?;
        let d: i128 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(Q::new(n, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().all(|c| c.is_ascii_digit()) || !frac_part.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    if frac_part.len() > 30 {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: i128 = if digits.is_empty() { 0 } else { digits.parse().map_err(|_| bad())? };
    let denom = 10i128.pow(frac_part.len() as u32);
    let v = Q::new(numer, denom);
    Ok(if neg { -v } else { v })
}

pub fn q_to_f64(x: &Q) -> f64 {
    x.numer().to_f64().unwrap_or(f64::NAN) / x.denom().to_f64().unwrap_or(f64::NAN)
}

/// Serde adapter for `Q` as a `"p/q"` string.
pub mod q_string {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_q(&s).map_err(serde::de::Error::custom)
    }
}

fn squarefree_split(n: i128) -> (i128, i128) {
    // n = outer^2 * inner with inner squarefree
    debug_assert!(n > 0);
    let mut inner = n;
    let mut outer = 1i128;
    let mut f = 2i128;
    while f * f <= inner {
        while inner % (f * f) == 0 {
            inner /= f * f;
            outer *= f;
        }
        f += 1;
    }
    (outer, inner)
}

/// Sign of `a + b·√d` for `d > 0` not a perfect square (or `b = 0`).
fn sign_surd(a: &Q, b: &Q, d: i128) -> Ordering {
    let sa = a.cmp(&Q::zero());
    let sb = b.cmp(&Q::zero());
    if sb == Ordering::Equal {
        return sa;
    }
    if sa == Ordering::Equal || sa == sb {
        return sb;
    }
    // opposite signs: compare a^2 with b^2 d
    let lhs = a * a;
    let rhs = b * b * qi(d);
    match lhs.cmp(&rhs) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => Ordering::Equal,
    }
}

/// Real number `rational + coeff·√radicand` with `radicand` squarefree and
/// `> 1` whenever `coeff ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Surd {
    rational: Q,
    coeff: Q,
    radicand: i128,
}

impl Surd {
    pub fn rational(x: Q) -> Self {
        Surd { rational: x, coeff: Q::zero(), radicand: 1 }
    }

    /// `p + c·√r` for any positive `r`, normalised.
    pub fn new(p: Q, c: Q, r: i128) -> Self {
        assert!(r > 0, "radicand must be positive");
        if c.is_zero() {
            return Surd::rational(p);
        }
        let (outer, inner) = squarefree_split(r);
        if inner == 1 {
            Surd::rational(p + c * qi(outer))
        } else {
            Surd { rational: p, coeff: c * qi(outer), radicand: inner }
        }
    }

    pub fn as_rational(&self) -> Option<&Q> {
        if self.coeff.is_zero() {
            Some(&self.rational)
        } else {
            None
        }
    }

    pub fn parts(&self) -> (&Q, &Q, i128) {
        (&self.rational, &self.coeff, self.radicand)
    }

    pub fn to_f64(&self) -> f64 {
        q_to_f64(&self.rational) + q_to_f64(&self.coeff) * (self.radicand as f64).sqrt()
    }

    /// Sign of `self - other`.
    fn cmp_exact(&self, other: &Surd) -> Ordering {
        let a = self.rational - other.rational;
        match (self.coeff.is_zero(), other.coeff.is_zero()) {
            (true, true) => a.cmp(&Q::zero()),
            (false, true) => sign_surd(&a, &self.coeff, self.radicand),
            (true, false) => sign_surd(&a, &-other.coeff, other.radicand),
            (false, false) if self.radicand == other.radicand => {
                sign_surd(&a, &(self.coeff - other.coeff), self.radicand)
            }
            (false, false) => {
                // sign(a + b√d1 - c√d2): compare u = a + b√d1 with v = c√d2
                let b = &self.coeff;
                let c = &other.coeff;
                let su = sign_surd(&a, b, self.radicand);
                let sv = c.cmp(&Q::zero());
                if su != sv {
                    return su.cmp(&sv);
                }
                // same sign; compare squares u^2 = a^2 + b^2 d1 + 2ab√d1 and v^2 = c^2 d2
                let u2_rat = a * a + b * b * qi(self.radicand) - c * c * qi(other.radicand);
                let u2_coeff = qi(2) * a * b;
                let diff = sign_surd(&u2_rat, &u2_coeff, self.radicand);
                if su == Ordering::Less {
                    diff.reverse()
                } else {
                    diff
                }
            }
        }
    }

    /// Some rational strictly between `lo` and `hi` (requires `lo < hi`).
    pub fn rational_between(lo: &Surd, hi: &Surd) -> Q {
        assert!(lo < hi, "empty interval");
        if let (Some(a), Some(b)) = (lo.as_rational(), hi.as_rational()) {
            return (a + b) / qi(2);
        }
        // bisect on a dyadic grid refined until a grid point separates them
        let mut scale: i128 = 64;
        loop {
            let l = lo.to_f64();
            let h = hi.to_f64();
            let mid = ((l + h) / 2.0 * scale as f64).round() as i128;
            for cand in [mid, mid - 1, mid + 1] {
                let r = Q::new(cand, scale);
                let rs = Surd::rational(r);
                if lo < &rs && &rs < hi {
                    return r;
                }
            }
            scale = scale.checked_mul(8).expect("surds too close to separate");
        }
    }
}

impl PartialOrd for Surd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Surd {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }
}

impl From<Q> for Surd {
    fn from(x: Q) -> Self {
        Surd::rational(x)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_zero() {
            return write!(f, "{}", fmt_q(&self.rational));
        }
        let sign = if self.coeff.is_negative() { "-" } else { "+" };
        let mag = self.coeff.abs();
        let mag_s = if mag.is_one() { String::new() } else { format!("{}*", fmt_q(&mag)) };
        if self.rational.is_zero() {
            let lead = if self.coeff.is_negative() { "-" } else { "" };
            write!(f, "{lead}{mag_s}sqrt({})", self.radicand)
        } else {
            write!(f, "{}{sign}{mag_s}sqrt({})", fmt_q(&self.rational), self.radicand)
        }
    }
}

impl Serialize for Surd {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for Surd {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        parse_q(s).map(Surd::rational)
    }
}

/// Value of an element of Q(√d) used while evaluating exponents at a surd.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldElem {
    pub rational: Q,
    pub coeff: Q,
    pub radicand: i128,
}

impl FieldElem {
    pub fn from_surd(s: &Surd) -> Self {
        FieldElem { rational: s.rational, coeff: s.coeff, radicand: s.radicand }
    }

    pub fn constant(x: Q, radicand: i128) -> Self {
        FieldElem { rational: x, coeff: Q::zero(), radicand }
    }

    pub fn add(&self, o: &FieldElem) -> FieldElem {
        debug_assert_eq!(self.radicand, o.radicand);
        FieldElem { rational: self.rational + o.rational, coeff: self.coeff + o.coeff, radicand: self.radicand }
    }

    pub fn scale(&self, k: &Q) -> FieldElem {
        FieldElem { rational: self.rational * k, coeff: self.coeff * k, radicand: self.radicand }
    }

    pub fn recip(&self) -> FieldElem {
        // 1/(a + b√d) = (a - b√d)/(a^2 - b^2 d)
        let den = self.rational * self.rational - self.coeff * self.coeff * qi(self.radicand);
        assert!(!den.is_zero(), "division by zero in Q(sqrt d)");
        FieldElem { rational: self.rational / den, coeff: -self.coeff / den, radicand: self.radicand }
    }

    pub fn sign(&self) -> Ordering {
        sign_surd(&self.rational, &self.coeff, self.radicand)
    }
}

/// Real roots of `a x^2 + b x + c` (not all zero), ascending. A zero
/// polynomial has no isolated roots and yields an empty list.
pub fn quadratic_roots(a: &Q, b: &Q, c: &Q) -> Vec<Surd> {
    if a.is_zero() {
        if b.is_zero() {
            return Vec::new();
        }
        return vec![Surd::rational(-c / b)];
    }
    let disc = b * b - qi(4) * a * c;
    match disc.cmp(&Q::zero()) {
        Ordering::Less => Vec::new(),
        Ordering::Equal => vec![Surd::rational(-b / (qi(2) * a))],
        Ordering::Greater => {
            // √(p/q) = √(p q) / q
            let p = *disc.numer();
            let qd = *disc.denom();
            let radicand = p * qd;
            let base = -b / (qi(2) * a);
            let coeff = Q::one() / (qi(2) * a * qi(qd));
            let mut roots = vec![Surd::new(base, coeff, radicand), Surd::new(base, -coeff, radicand)];
            roots.sort();
            roots
        }
    }
}

/// Greatest common divisor helper for exact-integer callers.
pub fn gcd_i128(a: i128, b: i128) -> i128 {
    a.gcd(&b)
}
