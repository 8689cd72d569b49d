mod common;

use std::cmp::Ordering;

use proptest::prelude::*;

use ldlab::braid::{equal, BraidWord, GarsideNF};
use ldlab::games::{g3_trace, G3State};
use ldlab::invariants::{act, FreeGroupConj};
use ldlab::lattice::{integer_kernel, solve_integer_combination, sparse_from_dense};
use ldlab::laver::{project, LaverTable};
use ldlab::magma::{dihedral_quandle, FiniteMagma};
use ldlab::order::{compare_d, compare_flipped, rank_bp3, OrdinalCNF};
use ldlab::ybe::{birack_law_witness, rack_to_solution, SetSolution};
use num_bigint::BigInt;

fn word_strategy(n: usize, max_len: usize, positive: bool) -> impl Strategy<Value = BraidWord> {
    let g = n as i32 - 1;
    let letter = if positive { (1..=g).boxed() } else { prop_oneof![1..=g, -g..=-1].boxed() };
    prop::collection::vec(letter, 0..=max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
}

fn magma_strategy(m: usize) -> impl Strategy<Value = FiniteMagma> {
    prop::collection::vec(1..=m, m * m)
        .prop_map(move |v| FiniteMagma::from_rows(&v.chunks(m).map(<[usize]>::to_vec).collect::<Vec<_>>()).unwrap())
}

proptest! {
    #[test]
    fn word_display_round_trips(w in word_strategy(5, 12, false)) {
        prop_assert_eq!(BraidWord::parse(&w.to_string(), 5).unwrap(), w);
    }

    #[test]
    fn normal_form_is_invariant(w in word_strategy(4, 10, false), seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let v = common::equivalent_word(&mut r, &w, 8, false);
        prop_assert_eq!(w.normal_form(), v.normal_form());
        prop_assert_eq!(w.normal_form().to_word().normal_form(), w.normal_form());
    }

    #[test]
    fn group_laws(a in word_strategy(4, 8, false), b in word_strategy(4, 8, false), c in word_strategy(4, 8, false)) {
        let (x, y, z) = (a.normal_form(), b.normal_form(), c.normal_form());
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert!(x.mul(&x.inverse()).is_identity());
        prop_assert_eq!(a.concat(&b).unwrap().normal_form(), x.mul(&y));
    }

    #[test]
    fn dehornoy_order_is_left_invariant(u in word_strategy(3, 6, false), v in word_strategy(3, 6, false), g in word_strategy(3, 6, false)) {
        let (u, v, g) = (u.normal_form(), v.normal_form(), g.normal_form());
        prop_assert_eq!(compare_d(&u, &v).unwrap(), compare_d(&g.mul(&u), &g.mul(&v)).unwrap());
        prop_assert_eq!(compare_d(&u, &v).unwrap(), compare_d(&v, &u).unwrap().reverse());
    }

    #[test]
    fn rank_agrees_with_flipped_order(a in word_strategy(3, 10, true), b in word_strategy(3, 10, true)) {
        let (x, y) = (a.normal_form(), b.normal_form());
        prop_assert_eq!(rank_bp3(&x).unwrap().cmp(&rank_bp3(&y).unwrap()), compare_flipped(&x, &y).unwrap());
    }

    #[test]
    fn hurwitz_action_respects_braid_relations(w in word_strategy(4, 8, false), seed in any::<u64>(), cs in prop::collection::vec(1usize..=7, 4)) {
        let mut r = common::rng(seed);
        let v = common::equivalent_word(&mut r, &w, 6, false);
        prop_assume!(equal(&w, &v).unwrap());
        let d7 = dihedral_quandle(7).unwrap();
        prop_assert_eq!(act(&d7, &cs, w.letters()), act(&d7, &cs, v.letters()));
        let gens: Vec<Vec<i32>> = (1..=4).map(|i| vec![i]).collect();
        prop_assert_eq!(act(&FreeGroupConj, &gens, w.letters()), act(&FreeGroupConj, &gens, v.letters()));
    }

    #[test]
    fn braid_equation_iff_ld(m in magma_strategy(3)) {
        prop_assert_eq!(rack_to_solution(&m).satisfies_braid_equation(), m.is_ld());
    }

    #[test]
    fn exchange_laws_iff_braid_equation(l in magma_strategy(2), r in magma_strategy(2)) {
        let s = SetSolution::from_ops(&l, &r).unwrap();
        prop_assert_eq!(s.satisfies_braid_equation(), birack_law_witness(&l, &r).unwrap().is_none());
        let (l2, r2) = s.ops();
        prop_assert_eq!((l2, r2), (l.clone(), r.clone()));
    }

    #[test]
    fn laver_projection_is_a_homomorphism(x in 1usize..=1024, y in 1usize..=1024) {
        let big = LaverTable::new(10).unwrap();
        let small = LaverTable::new(9).unwrap();
        prop_assert_eq!(project(10, big.op(x, y)).unwrap(), small.op(project(10, x).unwrap(), project(10, y).unwrap()));
    }

    #[test]
    fn kernels_and_solutions_check_out(rows in prop::collection::vec(prop::collection::vec(-4i64..=4, 5), 1..4), coeffs in prop::collection::vec(-3i64..=3, 3)) {
        let sv: Vec<_> = rows.iter().map(|r| sparse_from_dense(&r.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())).collect();
        for k in integer_kernel(sv.clone(), 5) {
            for r in &rows {
                let dot: BigInt = k.iter().map(|(c, x)| x * BigInt::from(r[*c])).sum();
                prop_assert_eq!(dot, BigInt::from(0));
            }
        }
        // A combination of the rows is always solvable, and the answer reproduces it.
        let target: Vec<BigInt> = (0..5)
            .map(|j| rows.iter().zip(&coeffs).map(|(r, c)| BigInt::from(r[j] * c)).sum())
            .collect();
        let sol = solve_integer_combination(&sv, &sparse_from_dense(&target), 5).unwrap();
        let back: Vec<BigInt> = (0..5)
            .map(|j| rows.iter().zip(&sol).map(|(r, c)| c * BigInt::from(r[j])).sum())
            .collect();
        prop_assert_eq!(back, target);
    }

    #[test]
    fn ordinal_text_round_trips(terms in prop::collection::btree_map(0u64..6, 1u128..50, 0..4)) {
        let t: Vec<(u64, u128)> = terms.into_iter().rev().collect();
        let o = OrdinalCNF::from_terms(&t);
        prop_assert_eq!(o.to_string().parse::<OrdinalCNF>().unwrap(), o);
    }

    #[test]
    fn g3_replay_is_deterministic(w in word_strategy(3, 4, true)) {
        let b = w.normal_form();
        let trace = g3_trace(&b, 200).unwrap();
        let mut s = G3State::start(&b).unwrap();
        for state in &trace {
            prop_assert_eq!(&s.normal_form(), state);
            if s.is_over() {
                break;
            }
            s.step().unwrap();
        }
        for pair in trace.windows(2) {
            prop_assert_eq!(pair[1].rank().cmp(&pair[0].rank()), Ordering::Less);
        }
    }
}

#[test]
fn flipped_order_puts_bp3_below_sigma3() {
    let s3 = GarsideNF::from_letters(4, &[3]).unwrap();
    for len in 0..=6 {
        for b in ldlab::braid::positive_braids(3, len) {
            assert_eq!(compare_flipped(&b.widen(4).unwrap(), &s3).unwrap(), Ordering::Less);
        }
    }
}
