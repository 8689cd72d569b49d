use std::collections::BTreeSet;

use ldlab::braid::{positive_braids, GarsideNF};
use ldlab::conjugacy::{mu, positive_conjugates};

/// All braids represented by words of length at most `radius` in `σ1^±1, σ2^±1`.
fn ball(radius: usize) -> Vec<GarsideNF> {
    let mut seen = BTreeSet::from([GarsideNF::identity(3)]);
    let mut frontier = vec![GarsideNF::identity(3)];
    for _ in 0..radius {
        let mut next = Vec::new();
        for g in &frontier {
            for l in [1, -1, 2, -2] {
                let mut h = g.clone();
                h.push_letter(l);
                if seen.insert(h.clone()) {
                    next.push(h);
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().collect()
}

#[test]
fn classes_match_bounded_conjugator_search() {
    let conjugators = ball(8);
    for len in 0..=6 {
        let same_length: BTreeSet<GarsideNF> = positive_braids(3, len).into_iter().collect();
        for b in &same_length {
            let reached: BTreeSet<GarsideNF> = conjugators
                .iter()
                .map(|g| g.inverse().mul(b).mul(g))
                .filter(|c| same_length.contains(c))
                .collect();
            let class: BTreeSet<GarsideNF> = positive_conjugates(b).unwrap().members().cloned().collect();
            assert_eq!(class, reached, "class of {b}");
        }
    }
}

#[test]
fn delta_class_has_five_members() {
    let d = GarsideNF::delta_power(3, 1);
    let class = positive_conjugates(&d).unwrap();
    let want: BTreeSet<GarsideNF> = [[1, 2, 1], [2, 1, 1], [1, 1, 2], [1, 2, 2], [2, 2, 1]]
        .iter()
        .map(|w| GarsideNF::from_letters(3, w).unwrap())
        .collect();
    assert_eq!(class.members().cloned().collect::<BTreeSet<_>>(), want);
}

#[test]
fn mu_is_a_class_invariant_and_idempotent() {
    for len in 0..=6 {
        for b in positive_braids(3, len) {
            let m = mu(&b).unwrap();
            assert_eq!(m.exponent_sum(), b.exponent_sum());
            assert_eq!(mu(&m).unwrap(), m);
            for c in positive_conjugates(&b).unwrap().members() {
                assert_eq!(mu(c).unwrap(), m, "{c} in the class of {b}");
            }
        }
    }
}

#[test]
fn plain_dehornoy_minimum_differs_from_flipped_minimum() {
    use ldlab::order::compare_d;
    use std::cmp::Ordering;
    let s1 = GarsideNF::from_letters(3, &[1]).unwrap();
    let s2 = GarsideNF::from_letters(3, &[2]).unwrap();
    assert_eq!(compare_d(&s2, &s1).unwrap(), Ordering::Less);
    assert_eq!(mu(&s2).unwrap(), s1);
}

#[test]
fn conjugators_are_recorded() {
    for len in 0..=5 {
        for b in positive_braids(3, len) {
            let class = positive_conjugates(&b).unwrap();
            for m in class.members() {
                let c = class.conjugator(m).unwrap();
                assert_eq!(&c.inverse().mul(&b).mul(c), m);
            }
        }
    }
}
