//! Property tests for the invariants of each module, on deterministic
//! random samples.

mod common;

use common::*;
use rand::Rng;
use symbuchi::algebra::{minterms, Algebra};
use symbuchi::automata::{alt_elim_pairs, from_classical, member_up, mintermize, Runner};
use symbuchi::ere::{Regex, RegexDfa};
use symbuchi::oracle;
use symbuchi::parse::{parse_formula, parse_regex};
use symbuchi::rltl::{build_aba, leaf_dnf, Formula, FormulaView};
use symbuchi::tterm::{func_equiv, lift_binary, lift_unary, to_inf, Dnf, Tt};
use symbuchi::Letter;

fn rand_term(r: &mut rand::rngs::StdRng, alg: &Algebra, depth: usize) -> Tt<i32> {
    if depth == 0 {
        return Tt::leaf(r.random_range(0..6));
    }
    Tt::ite(
        rand_pred(r, alg, 1),
        rand_term(r, alg, depth - 1),
        rand_term(r, alg, depth - 1),
    )
}

#[test]
fn algebra_denotation_laws_hold_on_samples() {
    let alg = prop2();
    let ls = letters(&alg);
    let mut r = rng(100);
    for _ in 0..300 {
        let a = rand_pred(&mut r, &alg, 2);
        let b = rand_pred(&mut r, &alg, 2);
        for l in &ls {
            assert_eq!(a.and(&b).denotes(l), a.denotes(l) && b.denotes(l));
            assert_eq!(a.or(&b).denotes(l), a.denotes(l) || b.denotes(l));
            assert_eq!(a.not().denotes(l), !a.denotes(l));
        }
    }
}

#[test]
fn minterm_core_properties_on_random_sets() {
    let alg = prop2();
    let ls = letters(&alg);
    let mut r = rng(101);
    for _ in 0..100 {
        let k = r.random_range(0..=3);
        let gamma: Vec<_> = (0..k).map(|_| rand_pred(&mut r, &alg, 2)).collect();
        let ms = minterms(&alg, &gamma).unwrap();
        assert!(ms.len() <= 1 << k);
        for (i, x) in ms.iter().enumerate() {
            assert!(x.is_sat());
            for y in ms.iter().skip(i + 1) {
                assert!(!x.and(y).is_sat(), "minterms overlap");
            }
        }
        // the minterms partition the domain
        for l in &ls {
            let hits = ms.iter().filter(|m| m.denotes(l)).count();
            assert_eq!(hits, 1);
        }
        // each satisfiable input predicate is a union of minterms
        for g in &gamma {
            if !g.is_sat() {
                continue;
            }
            let cover = ms
                .iter()
                .filter(|m| m.and(g).is_sat())
                .fold(alg.bot(), |acc, m| acc.or(m));
            assert!(cover.equiv(g));
        }
    }
}

#[test]
fn equiv_is_an_equivalence_and_refines_denotation() {
    let alg = prop2();
    let ls = letters(&alg);
    let mut r = rng(102);
    let preds: Vec<_> = (0..12).map(|_| rand_pred(&mut r, &alg, 2)).collect();
    for a in &preds {
        assert!(a.equiv(a));
        for b in &preds {
            assert_eq!(a.equiv(b), b.equiv(a));
            if a.equiv(b) {
                for l in &ls {
                    assert_eq!(a.denotes(l), b.denotes(l));
                }
            }
            for c in &preds {
                if a.equiv(b) && b.equiv(c) {
                    assert!(a.equiv(c));
                }
            }
        }
    }
}

#[test]
fn lifted_operations_are_pointwise() {
    let alg = prop2();
    let ls = letters(&alg);
    let mut r = rng(103);
    for _ in 0..200 {
        let f = rand_term(&mut r, &alg, 2);
        let g = rand_term(&mut r, &alg, 2);
        let plus = lift_binary(&f, &g, &|a, b| a + b);
        let neg = lift_unary(&f, &|a| -a);
        for l in &ls {
            assert_eq!(*plus.leaf_of(l), f.leaf_of(l) + g.leaf_of(l));
            assert_eq!(*neg.leaf_of(l), -f.leaf_of(l));
        }
        assert!(plus.is_clean());
    }
}

#[test]
fn restriction_to_top_cleans_and_preserves_leaves() {
    let alg = prop2();
    let ls = letters(&alg);
    let mut r = rng(104);
    for _ in 0..200 {
        let f = rand_term(&mut r, &alg, 3);
        let c = f.restrict(&alg.top());
        assert!(c.is_clean());
        for l in &ls {
            assert_eq!(c.leaf_of(l), f.leaf_of(l));
        }
    }
}

#[test]
fn inf_commutes_with_leaf_evaluation() {
    let alg = prop2();
    let ls = letters(&alg);
    let mut r = rng(105);
    for _ in 0..100 {
        let f = rand_pos_formula(&mut r, &alg, 3);
        let d = f.deriv();
        let inf = to_inf(&d, &leaf_dnf);
        for l in &ls {
            assert_eq!(*inf.leaf_of(l), leaf_dnf(d.leaf_of(l)));
        }
    }
}

#[test]
fn min_models_is_a_covering_antichain() {
    let mut r = rng(106);
    for _ in 0..200 {
        let members: Vec<std::collections::BTreeSet<u8>> = (0..r.random_range(0..5))
            .map(|_| (0..r.random_range(0..4)).map(|_| r.random_range(0..5)).collect())
            .collect();
        let d = Dnf::from_members(members);
        let m = d.min_models();
        for z in m.members() {
            assert!(d.members().any(|x| x == z), "output member comes from the input");
            for y in m.members() {
                assert!(!(y.is_subset(z) && y != z), "antichain");
            }
        }
        for x in d.members() {
            assert!(m.members().any(|z| z.is_subset(x)), "every input is covered");
        }
        assert_eq!(m.min_models(), m);
    }
}

#[test]
fn double_negation_is_identity_on_formula_terms() {
    let alg = prop2();
    let mut r = rng(107);
    for _ in 0..100 {
        let f = rand_pos_formula(&mut r, &alg, 3);
        let d = f.deriv();
        let twice = lift_unary(&lift_unary(&d, &|l| Formula::not(l)), &|l| Formula::not(l));
        assert!(func_equiv(&d, &twice, &|a, b| a == b));
    }
}

#[test]
fn regex_derivatives_agree_with_brute_force() {
    let alg = prop2();
    let ls = letters(&alg);
    let mut r = rng(108);
    for _ in 0..300 {
        let re = rand_regex(&mut r, &alg, 4);
        let len = r.random_range(0..=5);
        let u: Vec<Letter> = (0..len).map(|_| ls[r.random_range(0..ls.len())]).collect();
        assert_eq!(
            re.matches(&u).unwrap(),
            oracle::brute_match(&re, &u).unwrap(),
            "{re}"
        );
    }
}

#[test]
fn regex_dfa_agrees_with_raw_derivatives() {
    let alg = prop2();
    let ls = letters(&alg);
    let mut r = rng(109);
    for _ in 0..100 {
        let re = rand_regex(&mut r, &alg, 3);
        let dfa = RegexDfa::build(&re).unwrap();
        for _ in 0..20 {
            let len = r.random_range(0..=5);
            let u: Vec<Letter> = (0..len).map(|_| ls[r.random_range(0..ls.len())]).collect();
            assert_eq!(dfa.accepts(&u).unwrap(), re.matches(&u).unwrap());
        }
    }
}

#[test]
fn one_denotes_the_single_letter_words() {
    let alg = prop2();
    let ls = letters(&alg);
    let mut r = rng(110);
    for _ in 0..200 {
        let re = rand_regex(&mut r, &alg, 3);
        let one = re.one();
        for l in &ls {
            assert_eq!(one.denotes(l), re.matches(std::slice::from_ref(l)).unwrap());
        }
    }
}

#[test]
fn derivative_duality_for_complement() {
    let alg = prop2();
    let ls = letters(&alg);
    let mut r = rng(111);
    for _ in 0..200 {
        let re = rand_regex(&mut r, &alg, 3);
        let dr = re.der();
        let dc = Regex::compl(&re).der();
        for l in &ls {
            assert_eq!(*dc.leaf_of(l), Regex::compl(dr.leaf_of(l)));
        }
    }
}

#[test]
fn negation_duality_of_formula_derivatives() {
    let alg = prop2();
    let mut r = rng(112);
    for _ in 0..100 {
        let f = rand_pos_formula(&mut r, &alg, 3);
        let neg = Formula::not(&f);
        assert_eq!(neg.deriv(), lift_unary(&f.deriv(), &|l| Formula::not(l)));
    }
}

#[test]
fn to_positive_preserves_semantics() {
    let alg = prop2();
    let mut r = rng(113);
    let words = exhaustive_up_words(&alg, 1, 2);
    for _ in 0..150 {
        let f = rand_formula(&mut r, &alg, 3);
        let pos = f.to_positive().unwrap();
        assert!(pos.is_positive());
        for w in &words {
            assert_eq!(
                oracle::eval(&f, w).unwrap(),
                oracle::eval(&pos, w).unwrap(),
                "{f} vs {pos} on {}",
                w.display(&alg)
            );
        }
    }
}

#[test]
fn built_automata_have_clean_transitions() {
    let alg = prop2();
    let mut r = rng(114);
    for _ in 0..100 {
        let f = rand_pos_formula(&mut r, &alg, 3);
        let m = match build_aba(&f) {
            Ok(m) => m,
            Err(_) => continue,
        };
        for q in 0..m.state_count() {
            assert!(m.delta(q).is_clean(), "state {q} of {f}");
        }
    }
}

#[test]
fn alternation_elimination_pair_invariants() {
    let alg = prop2();
    let mut r = rng(115);
    for _ in 0..100 {
        let k = r.random_range(1..=4);
        let m = rand_aba(&mut r, &alg, k);
        let (n, pairs) = alt_elim_pairs(&m, true);
        for (i, p) in pairs.iter().enumerate() {
            assert_eq!(n.is_accepting(i), p.owing.is_empty());
            assert!(p.owing.is_disjoint(m.accepting()));
            assert!(p.owing.is_disjoint(&p.settled));
        }
    }
}

#[test]
fn classical_round_trip_preserves_membership() {
    let alg = prop2();
    let mut r = rng(116);
    for _ in 0..60 {
        let k = r.random_range(1..=3);
        let n = rand_nba(&mut r, &alg, k);
        let c = mintermize(&n);
        let back = from_classical(&c, &c.symbols().to_vec()).unwrap();
        let mh = oracle::classical_mh(&c);
        for _ in 0..25 {
            let w = rand_up_word(&mut r, &alg, 2, 3);
            let direct = member_up(&n, &w).unwrap();
            // lifted word in the classical automaton (the minterm lemma)
            let prefix = oracle::lift_word(&c, w.prefix()).unwrap();
            let cycle = oracle::lift_word(&c, w.cycle()).unwrap();
            assert_eq!(
                oracle::classical_member_up(&mh, &prefix, &cycle).unwrap(),
                direct
            );
            // and back through the symbolic lifting
            assert_eq!(member_up(&back, &w).unwrap(), direct);
        }
    }
}

#[test]
fn emptiness_witnesses_validate() {
    let alg = prop2();
    let mut r = rng(117);
    for _ in 0..100 {
        let k = r.random_range(1..=4);
        let n = rand_nba(&mut r, &alg, k);
        if let symbuchi::automata::Emptiness::NonEmpty(w) =
            symbuchi::automata::is_empty(&n).unwrap()
        {
            assert!(member_up(&n, &w).unwrap());
        }
    }
}

#[test]
fn eval_is_invariant_under_cycle_unrolling() {
    let alg = prop2();
    let mut r = rng(118);
    for _ in 0..150 {
        let f = rand_pos_formula(&mut r, &alg, 3);
        let w = rand_up_word(&mut r, &alg, 2, 3);
        let once = oracle::eval(&f, &w).unwrap();
        assert_eq!(oracle::eval(&f, &w.pumped()).unwrap(), once);
        assert_eq!(oracle::eval(&f, &w.pumped().pumped()).unwrap(), once);
    }
}

/// A second, simpler reference for the LTL fragment: positional evaluation
/// on an explicit unrolling of the lasso, long enough for every verdict to
/// stabilize.
fn unrolled_ltl_eval(f: &Formula, w: &symbuchi::UpWord) -> bool {
    fn count(f: &Formula) -> usize {
        1 + match f.view() {
            FormulaView::Pred(_) => 0,
            FormulaView::Not(x) | FormulaView::Next(x) => count(x),
            FormulaView::And(xs) | FormulaView::Or(xs) => xs.iter().map(count).sum(),
            FormulaView::Until(a, b) | FormulaView::Release(a, b) => count(a) + count(b),
            _ => panic!("reference covers the temporal fragment only"),
        }
    }
    fn at(f: &Formula, w: &symbuchi::UpWord, i: usize, span: usize) -> bool {
        match f.view() {
            FormulaView::Pred(p) => p.denotes(w.letter(i)),
            FormulaView::Not(x) => !at(x, w, i, span),
            FormulaView::And(xs) => xs.iter().all(|x| at(x, w, i, span)),
            FormulaView::Or(xs) => xs.iter().any(|x| at(x, w, i, span)),
            FormulaView::Next(x) => at(x, w, i + 1, span),
            FormulaView::Until(a, b) => (i..i + span)
                .any(|j| at(b, w, j, span) && (i..j).all(|l| at(a, w, l, span))),
            FormulaView::Release(a, b) => {
                (i..i + span).all(|j| at(b, w, j, span))
                    || (i..i + span).any(|j| {
                        at(a, w, j, span) && (i..=j).all(|l| at(b, w, l, span))
                    })
            }
            _ => unreachable!(),
        }
    }
    // truth vectors are periodic beyond the prefix, so any existential
    // witness (or universal violation) shows up within one window of this
    // size from the current position
    let n = count(f).min(10);
    let span = w.prefix().len() + w.cycle().len() * ((1 << n) + 1);
    at(f, w, 0, span)
}

#[test]
fn eval_agrees_with_unrolled_ltl_reference() {
    let alg = prop2();
    let mut r = rng(119);
    let words = exhaustive_up_words(&alg, 1, 2);
    for _ in 0..100 {
        // depth two keeps the subformula count, and with it the length of
        // the explicit unrolling, small
        let f = rand_ltl(&mut r, &alg, 2);
        for w in &words {
            assert_eq!(
                oracle::eval(&f, w).unwrap(),
                unrolled_ltl_eval(&f, w),
                "{f} on {}",
                w.display(&alg)
            );
        }
    }
}

#[test]
fn random_formula_print_parse_round_trip() {
    let alg = prop2();
    let mut r = rng(120);
    for _ in 0..200 {
        // printing collapses into the parseable surface syntax first; the
        // identity holds on the image of the parser
        let raw = rand_formula(&mut r, &alg, 3);
        let f = parse_formula(&alg, &raw.to_string())
            .unwrap_or_else(|e| panic!("`{raw}` does not reparse: {e}"));
        let printed = f.to_string();
        let again = parse_formula(&alg, &printed).unwrap();
        assert_eq!(f, again, "round trip through `{printed}`");
        assert_eq!(printed, again.to_string());
    }
}

#[test]
fn random_regex_print_parse_round_trip() {
    let alg = prop2();
    let mut r = rng(121);
    for _ in 0..200 {
        let raw = rand_regex(&mut r, &alg, 3);
        let re = parse_regex(&alg, &raw.to_string())
            .unwrap_or_else(|e| panic!("`{raw}` does not reparse: {e}"));
        let printed = re.to_string();
        let again = parse_regex(&alg, &printed).unwrap();
        assert_eq!(re, again, "round trip through `{printed}`");
        assert_eq!(printed, again.to_string());
    }
}

#[test]
fn end_to_end_on_anchored_algebra() {
    // the pipeline also works over the anchor extension, whose domain is
    // not purely propositional
    let anchored = symbuchi::parse::parse_algebra("anchor(prop:a)").unwrap();
    let f = parse_formula(&anchored, "G ![#] & F a").unwrap();
    let n = symbuchi::automata::alt_elim(&build_aba(&f).unwrap());
    let runner = Runner::new(&n).unwrap();
    let w = symbuchi::parse::parse_word(&anchored, "{};{a}").unwrap();
    assert!(runner.member(&w).unwrap());
    assert_eq!(oracle::eval(&f, &w).unwrap(), true);
    let bad = symbuchi::parse::parse_word(&anchored, "{a},#;{a}").unwrap();
    assert!(!runner.member(&bad).unwrap());
    assert_eq!(oracle::eval(&f, &bad).unwrap(), false);
}
