// SPDX-License-Identifier: Apache-2.0

mod support;

use motifvar_core::motif::{canonical_form, enumerate_connected, SmallGraph};
use motifvar_core::rational::Surd;
use motifvar_core::varprinciple::piecewise;
use support::oracle::{check, witness_beats_listed};
use support::reference::{gated, Correction, FREE_FIVE, FREE_SMALL, GRAPHLET_FIVE, TYPICAL_FIVE};
use support::exponent;

#[test]
fn gated_groups_match() {
    let mut failures = Vec::new();
    for r in gated() {
        if let Err(e) = check(r) {
            failures.push(format!("{}/{}: {e}", r.group, r.panel));
        }
        assert!(witness_beats_listed(r), "{}/{} witness does not refute the listed value", r.group, r.panel);
        if r.correction == Correction::None {
            if let Some(l) = r.listed {
                assert_eq!(r.expected.len(), 1);
                assert_eq!(exponent(l), exponent(r.expected[0].1), "{}/{}", r.group, r.panel);
            }
        }
    }
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn five_vertex_graphlets_match() {
    for r in GRAPHLET_FIVE {
        check(r).unwrap_or_else(|e| panic!("{}/{}: {e}", r.group, r.panel));
        assert!(witness_beats_listed(r));
    }
}

#[test]
fn panels_cover_each_class_once() {
    for (group, k_list) in [(FREE_SMALL, vec![3, 4]), (FREE_FIVE, vec![5]), (TYPICAL_FIVE, vec![5])] {
        let mut seen: Vec<_> = group.iter().map(|r| canonical_form(&SmallGraph::parse_literal(r.edges).unwrap())).collect();
        seen.sort();
        let mut want: Vec<_> =
            k_list.iter().flat_map(|&k| enumerate_connected(k).unwrap()).map(|g| canonical_form(&g)).collect();
        want.sort();
        assert_eq!(seen, want);
    }
}

#[test]
fn breakpoints_are_continuous() {
    for r in gated() {
        let h = SmallGraph::parse_literal(r.edges).unwrap();
        let p = piecewise(&h, r.mode.parse().unwrap()).unwrap();
        for w in p.pieces.windows(2) {
            let x: &Surd = &w[1].tau_lo;
            let d = w[0].exponent.poly_sub(&w[1].exponent).eval_surd(x);
            assert_eq!(d.sign(), std::cmp::Ordering::Equal);
            assert_ne!(w[0].exponent, w[1].exponent);
        }
    }
}
