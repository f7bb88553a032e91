// SPDX-License-Identifier: Apache-2.0

#![allow(dead_code)]

pub mod oracle;
pub mod reference;

use motifvar_core::rational::{parse_q, Surd, Q};
use motifvar_core::varprinciple::{Label, TauExponent};

/// Parses `a|b|c|log`.
pub fn exponent(s: &str) -> TauExponent {
    let parts: Vec<&str> = s.split('|').collect();
    assert_eq!(parts.len(), 4, "bad exponent literal {s}");
    TauExponent::new(
        parse_q(parts[0]).unwrap(),
        parse_q(parts[1]).unwrap(),
        parse_q(parts[2]).unwrap(),
        parts[3].parse().unwrap(),
    )
}

pub fn surd(s: &str) -> Surd {
    Surd::rational(parse_q(s).unwrap())
}

pub fn q(s: &str) -> Q {
    parse_q(s).unwrap()
}

/// Parses witness labels `0,h,1,t,u`.
pub fn labels(s: &str) -> Vec<Label> {
    s.split(',')
        .map(|t| match t.trim() {
            "0" => Label::Zero,
            "h" => Label::Half,
            "1" => Label::One,
            "t" => Label::TypicalMid,
            "u" => Label::Hub,
            other => panic!("bad label {other}"),
        })
        .collect()
}
