//! Property-based invariants over randomly generated inputs.

use lrspin::oracle::knuth_normal_form;
use lrspin::partition::{ParityFamily, Partition};
use lrspin::tableau::{word_insert, Tableau};
use proptest::prelude::*;

fn arb_partition(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len)
        .prop_map(Partition::from_unsorted)
}

fn arb_word(max_letter: usize, max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..=max_letter, 0..=max_len)
}

proptest! {
    #[test]
    fn conjugation_involution(p in arb_partition(12, 10)) {
        let c = p.conjugate();
        prop_assert_eq!(c.conjugate(), p.clone());
        prop_assert_eq!(c.size(), p.size());
        prop_assert_eq!(
            p.is_in_family(ParityFamily::EvenRows),
            c.is_in_family(ParityFamily::EvenColumns)
        );
    }

    #[test]
    fn partition_json_round_trip(p in arb_partition(30, 12)) {
        let s = serde_json::to_string(&p).unwrap();
        let back: Partition = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn insertion_normal_form_is_idempotent(w in arb_word(6, 14)) {
        let t = knuth_normal_form(&w);
        prop_assert_eq!(knuth_normal_form(&t.reading_word()), t);
    }

    /// An elementary Knuth move anywhere in a word keeps the insertion
    /// normal form. Column insertion realises the reversed plactic
    /// relations: yzx ~ yxz for x <= y < z and zxy ~ xzy for x < y <= z.
    #[test]
    fn knuth_moves_preserve_normal_form(w in arb_word(5, 12), seed in 0usize..64) {
        let mut moves = Vec::new();
        for i in 0..w.len().saturating_sub(2) {
            let (a, b, c) = (w[i], w[i + 1], w[i + 2]);
            // (y,z,x) ~ (y,x,z) with x <= y < z, both orientations
            if c <= a && a < b || b <= a && a < c {
                let mut v = w.clone();
                v.swap(i + 1, i + 2);
                moves.push(v);
            }
            // (z,x,y) ~ (x,z,y) with x < y <= z, both orientations
            if b < c && c <= a || a < c && c <= b {
                let mut v = w.clone();
                v.swap(i, i + 1);
                moves.push(v);
            }
        }
        if !moves.is_empty() {
            let v = &moves[seed % moves.len()];
            prop_assert_eq!(knuth_normal_form(v), knuth_normal_form(&w));
        }
    }

    /// Crystal raising and lowering are mutually inverse on straight
    /// tableaux built from random words.
    #[test]
    fn crystal_operators_invert(w in arb_word(5, 10), i in 1usize..5) {
        let t: Tableau = word_insert(&w, &Tableau::empty());
        if let Some(e) = t.crystal_e(i) {
            prop_assert_eq!(e.crystal_f(i), Some(t.clone()));
        }
        if let Some(f) = t.crystal_f(i) {
            prop_assert_eq!(f.crystal_e(i), Some(t.clone()));
        }
    }

    /// Inserting the reading word of any straight tableau reproduces it.
    #[test]
    fn tableau_word_fixed_point(w in arb_word(6, 12)) {
        let t = knuth_normal_form(&w);
        prop_assert_eq!(word_insert(&t.reading_word(), &Tableau::empty()), t);
    }
}
