// SPDX-License-Identifier: Apache-2.0

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, parse_q, q_string, qi, FieldElem, Surd, Q};

/// Power-law exponent, an exact rational strictly inside `(2, 3)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tau(Q);

impl Tau {
    pub fn new(value: Q) -> Result<Self> {
        if value > qi(2) && value < qi(3) {
            Ok(Tau(value))
        } else {
            Err(Error::TauOutOfRange(fmt_q(&value)))
        }
    }

    /// Accepts `"p/q"` or a decimal such as `"2.2"` (read exactly).
    pub fn parse(s: &str) -> Result<Self> {
        Tau::new(parse_q(s)?)
    }

    pub fn value(&self) -> &Q {
        &self.0
    }

    pub fn to_f64(&self) -> f64 {
        crate::rational::q_to_f64(&self.0)
    }
}

impl fmt::Display for Tau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_q(&self.0))
    }
}

impl Serialize for Tau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(&self.0))
    }
}

/// `n^{a + b·τ + c/(τ-1)} · log(n)^{log_power}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TauExponent {
    #[serde(with = "q_string")]
    pub a: Q,
    #[serde(with = "q_string")]
    pub b: Q,
    #[serde(with = "q_string")]
    pub c: Q,
    pub log_power: u32,
}

impl TauExponent {
    pub fn new(a: Q, b: Q, c: Q, log_power: u32) -> Self {
        TauExponent { a, b, c, log_power }
    }

    /// Exponent without a log factor.
    pub fn poly(a: Q, b: Q, c: Q) -> Self {
        TauExponent::new(a, b, c, 0)
    }

    pub fn constant(a: Q) -> Self {
        TauExponent::poly(a, Q::zero(), Q::zero())
    }

    pub fn with_log(mut self, log_power: u32) -> Self {
        self.log_power = log_power;
        self
    }

    /// Exact value of the polynomial part at a rational `τ ≠ 1`.
    pub fn eval_q(&self, tau: &Q) -> Q {
        self.a + self.b * tau + self.c / (tau - Q::one())
    }

    pub fn eval(&self, tau: &Tau) -> Q {
        self.eval_q(tau.value())
    }

    pub fn eval_f64(&self, tau: f64) -> f64 {
        use crate::rational::q_to_f64;
        q_to_f64(&self.a) + q_to_f64(&self.b) * tau + q_to_f64(&self.c) / (tau - 1.0)
    }

    /// Exact value at a quadratic surd.
    pub fn eval_surd(&self, tau: &Surd) -> FieldElem {
        let (_, _, d) = tau.parts();
        let t = FieldElem::from_surd(tau);
        let shifted = t.add(&FieldElem::constant(-Q::one(), d));
        FieldElem::constant(self.a, d).add(&t.scale(&self.b)).add(&shifted.recip().scale(&self.c))
    }

    /// Coefficient-wise equality of the polynomial parts.
    pub fn same_poly(&self, other: &TauExponent) -> bool {
        self.a == other.a && self.b == other.b && self.c == other.c
    }

    pub fn scale(&self, k: Q) -> TauExponent {
        TauExponent::new(self.a * k, self.b * k, self.c * k, self.log_power)
    }

    /// Sum of polynomial parts; log powers add.
    pub fn add(&self, o: &TauExponent) -> TauExponent {
        TauExponent::new(self.a + o.a, self.b + o.b, self.c + o.c, self.log_power + o.log_power)
    }

    /// Difference of polynomial parts (log power dropped).
    pub fn poly_sub(&self, o: &TauExponent) -> TauExponent {
        TauExponent::poly(self.a - o.a, self.b - o.b, self.c - o.c)
    }

    pub fn shift(&self, k: Q) -> TauExponent {
        TauExponent::new(self.a + k, self.b, self.c, self.log_power)
    }

    /// Order of growth at `τ`: polynomial value first, then log power.
    pub fn cmp_at(&self, other: &TauExponent, tau: &Q) -> Ordering {
        self.eval_q(tau).cmp(&other.eval_q(tau)).then(self.log_power.cmp(&other.log_power))
    }

    pub fn cmp_at_surd(&self, other: &TauExponent, tau: &Surd) -> Ordering {
        match tau.as_rational() {
            Some(t) => self.cmp_at(other, t),
            None => {
                let d = self.poly_sub(other).eval_surd(tau);
                d.sign().then(self.log_power.cmp(&other.log_power))
            }
        }
    }

    /// Points of `(2, 3)` where the polynomial parts of `self` and `other`
    /// coincide, ascending. Identical polynomials give no points.
    pub fn crossings(&self, other: &TauExponent) -> Vec<Surd> {
        let d = self.poly_sub(other);
        // (da + db τ)(τ - 1) + dc = 0
        let qa = d.b;
        let qb = d.a - d.b;
        let qc = d.c - d.a;
        let lo = Surd::rational(qi(2));
        let hi = Surd::rational(qi(3));
        crate::rational::quadratic_roots(&qa, &qb, &qc).into_iter().filter(|r| *r > lo && *r < hi).collect()
    }
}

fn fmt_term(out: &mut String, coef: &Q, body: &str) {
    if coef.is_zero() {
        return;
    }
    let neg = coef.is_negative();
    let mag = coef.abs();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    match body {
        "" => out.push_str(&fmt_q(&mag)),
        "/(τ-1)" => {
            if mag.is_integer() {
                out.push_str(&format!("{}/(τ-1)", mag.numer()));
            } else {
                out.push_str(&format!("{}/({}(τ-1))", mag.numer(), mag.denom()));
            }
        }
        _ => {
            if !mag.is_one() {
                out.push_str(&fmt_q(&mag));
            }
            out.push_str(body);
        }
    }
}

impl fmt::Display for TauExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        fmt_term(&mut s, &self.a, "");
        fmt_term(&mut s, &self.b, "τ");
        fmt_term(&mut s, &self.c, "/(τ-1)");
        if s.is_empty() {
            s.push('0');
        }
        match self.log_power {
            0 => {}
            1 => s.push_str(" [log n]"),
            p => s.push_str(&format!(" [log^{p} n]")),
        }
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn tau_bounds() {
        assert!(Tau::parse("2").is_err());
        assert!(Tau::parse("3").is_err());
        assert_eq!(Tau::parse("2.2").unwrap().value(), &q(11, 5));
        assert!(Tau::parse("5/2").is_ok());
    }

    #[test]
    fn evaluation() {
        // 3/(τ-1) at τ = 5/2 is 2
        let e = TauExponent::poly(qi(0), qi(0), qi(3));
        assert_eq!(e.eval_q(&q(5, 2)), qi(2));
        let f = TauExponent::poly(qi(4), qi(-1), qi(0));
        assert_eq!(f.eval_q(&q(14, 5)), q(6, 5));
    }

    #[test]
    fn bow_tie_breakpoint() {
        let five = TauExponent::poly(q(15, 2), q(-5, 2), qi(0));
        let four = TauExponent::poly(qi(4), qi(-1), qi(0));
        assert_eq!(five.crossings(&four), vec![Surd::rational(q(7, 3))]);
    }

    #[test]
    fn irrational_crossing_evaluates_equal() {
        // 6 - 2τ + 1/(τ-1) against 13/2 - 2τ meet where 1/(τ-1) = 1/2, i.e. τ = 3 (outside);
        // 7 - 2τ - 1/(τ-1) against 3/(τ-1): (7 - 2τ)(τ - 1) = 4
        let a = TauExponent::poly(qi(7), qi(-2), qi(-1));
        let b = TauExponent::poly(qi(0), qi(0), qi(3));
        let xs = a.crossings(&b);
        for x in &xs {
            assert_eq!(a.poly_sub(&b).eval_surd(x).sign(), Ordering::Equal);
        }
    }

    #[test]
    fn display() {
        assert_eq!(TauExponent::poly(qi(6), qi(-2), qi(0)).with_log(1).to_string(), "6 - 2τ [log n]");
        assert_eq!(TauExponent::poly(qi(0), qi(0), qi(3)).to_string(), "3/(τ-1)");
        assert_eq!(TauExponent::poly(q(9, 2), q(-3, 2), qi(0)).to_string(), "9/2 - 3/2τ");
        assert_eq!(TauExponent::poly(qi(7), qi(-2), qi(-1)).to_string(), "7 - 2τ - 1/(τ-1)");
    }
}
