//! Deterministic random instance generators shared by the integration and
//! acceptance suites.

#![allow(dead_code)]

use rand::prelude::*;
use rand::rngs::StdRng;
use std::collections::BTreeSet;

use symbuchi::algebra::{Algebra, Letter, Pred};
use symbuchi::automata::{Aba, StateId, UpWord};
use symbuchi::ere::Regex;
use symbuchi::rltl::Formula;
use symbuchi::tterm::{Dnf, Tt};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn prop2() -> Algebra {
    Algebra::prop(&["p", "q"]).unwrap()
}

pub fn letters(alg: &Algebra) -> Vec<Letter> {
    alg.enumerate_letters().expect("finite domain")
}

/// All ultimately periodic words with prefix length up to `max_u` and
/// cycle length 1 to `max_v` over the full letter alphabet.
pub fn exhaustive_up_words(alg: &Algebra, max_u: usize, max_v: usize) -> Vec<UpWord> {
    let ls = letters(alg);
    let mut out = Vec::new();
    for ulen in 0..=max_u {
        for u in tuples(&ls, ulen) {
            for vlen in 1..=max_v {
                for v in tuples(&ls, vlen) {
                    out.push(UpWord::new(u.clone(), v).unwrap());
                }
            }
        }
    }
    out
}

pub fn tuples(ls: &[Letter], len: usize) -> Vec<Vec<Letter>> {
    let mut acc: Vec<Vec<Letter>> = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &acc {
            for &l in ls {
                let mut w2 = w.clone();
                w2.push(l);
                next.push(w2);
            }
        }
        acc = next;
    }
    acc
}

pub fn rand_up_word(rng: &mut StdRng, alg: &Algebra, max_u: usize, max_v: usize) -> UpWord {
    let ls = letters(alg);
    let ulen = rng.random_range(0..=max_u);
    let vlen = rng.random_range(1..=max_v);
    let pick = |rng: &mut StdRng| ls[rng.random_range(0..ls.len())];
    let u: Vec<Letter> = (0..ulen).map(|_| pick(rng)).collect();
    let v: Vec<Letter> = (0..vlen).map(|_| pick(rng)).collect();
    UpWord::new(u, v).unwrap()
}

pub fn rand_letter(rng: &mut StdRng, alg: &Algebra) -> Letter {
    let ls = letters(alg);
    ls[rng.random_range(0..ls.len())]
}

pub fn rand_pred(rng: &mut StdRng, alg: &Algebra, depth: usize) -> Pred {
    let atoms = alg.atoms().unwrap();
    if depth == 0 || rng.random_bool(0.5) {
        let i = rng.random_range(0..atoms.len() + 2);
        if i < atoms.len() {
            let p = alg.atom(&atoms[i].clone()).unwrap();
            if rng.random_bool(0.3) {
                p.not()
            } else {
                p
            }
        } else if i == atoms.len() {
            alg.top()
        } else {
            alg.bot()
        }
    } else {
        let a = rand_pred(rng, alg, depth - 1);
        let b = rand_pred(rng, alg, depth - 1);
        match rng.random_range(0..3) {
            0 => a.and(&b),
            1 => a.or(&b),
            _ => a.not(),
        }
    }
}

/// A satisfiable non-trivial predicate where possible.
pub fn rand_guard(rng: &mut StdRng, alg: &Algebra) -> Pred {
    for _ in 0..8 {
        let p = rand_pred(rng, alg, 1);
        if p.is_sat() && !p.is_top() {
            return p;
        }
    }
    alg.top()
}

pub fn rand_regex(rng: &mut StdRng, alg: &Algebra, depth: usize) -> Regex {
    if depth == 0 {
        return match rng.random_range(0..5) {
            0 => Regex::eps(alg),
            _ => Regex::pred(rand_guard(rng, alg)),
        };
    }
    match rng.random_range(0..8) {
        0 | 1 => Regex::concat(
            &rand_regex(rng, alg, depth - 1),
            &rand_regex(rng, alg, depth - 1),
        ),
        2 => Regex::union(
            &rand_regex(rng, alg, depth - 1),
            &rand_regex(rng, alg, depth - 1),
        ),
        3 => Regex::inter(
            &rand_regex(rng, alg, depth - 1),
            &rand_regex(rng, alg, depth - 1),
        ),
        4 => Regex::star(&rand_regex(rng, alg, depth - 1)),
        5 => Regex::compl(&rand_regex(rng, alg, depth - 1)),
        _ => Regex::pred(rand_guard(rng, alg)),
    }
}

/// Random positive-fragment formula; regex operands stay shallow so the
/// derivative closures remain small.
pub fn rand_pos_formula(rng: &mut StdRng, alg: &Algebra, depth: usize) -> Formula {
    if depth == 0 {
        return Formula::pred(rand_guard(rng, alg));
    }
    match rng.random_range(0..12) {
        0 => Formula::and(
            &rand_pos_formula(rng, alg, depth - 1),
            &rand_pos_formula(rng, alg, depth - 1),
        ),
        1 => Formula::or(
            &rand_pos_formula(rng, alg, depth - 1),
            &rand_pos_formula(rng, alg, depth - 1),
        ),
        2 => Formula::next(&rand_pos_formula(rng, alg, depth - 1)),
        3 => Formula::until(
            &rand_pos_formula(rng, alg, depth - 1),
            &rand_pos_formula(rng, alg, depth - 1),
        ),
        4 => Formula::release(
            &rand_pos_formula(rng, alg, depth - 1),
            &rand_pos_formula(rng, alg, depth - 1),
        ),
        5 => Formula::finally(&rand_pos_formula(rng, alg, depth - 1)),
        6 => Formula::globally(&rand_pos_formula(rng, alg, depth - 1)),
        7 => Formula::exists_suffix(
            &rand_regex(rng, alg, 2),
            &rand_pos_formula(rng, alg, depth - 1),
        ),
        8 => Formula::forall_suffix(
            &rand_regex(rng, alg, 2),
            &rand_pos_formula(rng, alg, depth - 1),
        ),
        9 => Formula::weak_closure(&rand_regex(rng, alg, 2)),
        10 => Formula::neg_weak_closure(&rand_regex(rng, alg, 2)),
        _ => Formula::omega_closure(&rand_regex(rng, alg, 2)),
    }
}

/// Random formula that may contain explicit negation (no omega-closure
/// under negation, so the positive fragment is always reachable).
pub fn rand_formula(rng: &mut StdRng, alg: &Algebra, depth: usize) -> Formula {
    if depth == 0 {
        return Formula::pred(rand_guard(rng, alg));
    }
    match rng.random_range(0..10) {
        0 => Formula::not(&rand_ltl_nonomega(rng, alg, depth - 1)),
        1 => Formula::and(
            &rand_formula(rng, alg, depth - 1),
            &rand_formula(rng, alg, depth - 1),
        ),
        2 => Formula::or(
            &rand_formula(rng, alg, depth - 1),
            &rand_formula(rng, alg, depth - 1),
        ),
        3 => Formula::next(&rand_formula(rng, alg, depth - 1)),
        4 => Formula::until(
            &rand_formula(rng, alg, depth - 1),
            &rand_formula(rng, alg, depth - 1),
        ),
        5 => Formula::release(
            &rand_formula(rng, alg, depth - 1),
            &rand_formula(rng, alg, depth - 1),
        ),
        6 => Formula::exists_suffix(
            &rand_regex(rng, alg, 2),
            &rand_formula(rng, alg, depth - 1),
        ),
        7 => Formula::forall_suffix(
            &rand_regex(rng, alg, 2),
            &rand_formula(rng, alg, depth - 1),
        ),
        8 => Formula::weak_closure(&rand_regex(rng, alg, 2)),
        _ => Formula::neg_weak_closure(&rand_regex(rng, alg, 2)),
    }
}

/// Random formula of the temporal fragment only (no regex operators),
/// possibly with negation.
pub fn rand_ltl(rng: &mut StdRng, alg: &Algebra, depth: usize) -> Formula {
    if depth == 0 {
        return Formula::pred(rand_guard(rng, alg));
    }
    match rng.random_range(0..7) {
        0 => Formula::not(&rand_ltl(rng, alg, depth - 1)),
        1 => Formula::and(
            &rand_ltl(rng, alg, depth - 1),
            &rand_ltl(rng, alg, depth - 1),
        ),
        2 => Formula::or(
            &rand_ltl(rng, alg, depth - 1),
            &rand_ltl(rng, alg, depth - 1),
        ),
        3 => Formula::next(&rand_ltl(rng, alg, depth - 1)),
        4 => Formula::until(
            &rand_ltl(rng, alg, depth - 1),
            &rand_ltl(rng, alg, depth - 1),
        ),
        _ => Formula::release(
            &rand_ltl(rng, alg, depth - 1),
            &rand_ltl(rng, alg, depth - 1),
        ),
    }
}

fn rand_ltl_nonomega(rng: &mut StdRng, alg: &Algebra, depth: usize) -> Formula {
    if depth == 0 {
        return Formula::pred(rand_guard(rng, alg));
    }
    match rng.random_range(0..6) {
        0 => Formula::and(
            &rand_ltl_nonomega(rng, alg, depth - 1),
            &rand_ltl_nonomega(rng, alg, depth - 1),
        ),
        1 => Formula::or(
            &rand_ltl_nonomega(rng, alg, depth - 1),
            &rand_ltl_nonomega(rng, alg, depth - 1),
        ),
        2 => Formula::next(&rand_ltl_nonomega(rng, alg, depth - 1)),
        3 => Formula::until(
            &rand_ltl_nonomega(rng, alg, depth - 1),
            &rand_ltl_nonomega(rng, alg, depth - 1),
        ),
        4 => Formula::release(
            &rand_ltl_nonomega(rng, alg, depth - 1),
            &rand_ltl_nonomega(rng, alg, depth - 1),
        ),
        _ => Formula::weak_closure(&rand_regex(rng, alg, 2)),
    }
}

fn rand_dnf(rng: &mut StdRng, n_states: usize, conjunctive: bool) -> Dnf<StateId> {
    let n_members = rng.random_range(0..=2);
    let mut members: Vec<BTreeSet<StateId>> = Vec::new();
    for _ in 0..n_members {
        let size = if conjunctive { rng.random_range(1..=2) } else { 1 };
        let member: BTreeSet<StateId> =
            (0..size).map(|_| rng.random_range(0..n_states)).collect();
        members.push(member);
    }
    Dnf::from_members(members)
}

fn rand_term(rng: &mut StdRng, alg: &Algebra, n_states: usize, conjunctive: bool) -> Tt<Dnf<StateId>> {
    let depth = rng.random_range(0..=2);
    rand_term_depth(rng, alg, n_states, conjunctive, depth)
}

fn rand_term_depth(
    rng: &mut StdRng,
    alg: &Algebra,
    n_states: usize,
    conjunctive: bool,
    depth: usize,
) -> Tt<Dnf<StateId>> {
    if depth == 0 {
        return Tt::leaf(rand_dnf(rng, n_states, conjunctive));
    }
    Tt::ite(
        rand_guard(rng, alg),
        rand_term_depth(rng, alg, n_states, conjunctive, depth - 1),
        rand_term_depth(rng, alg, n_states, conjunctive, depth - 1),
    )
}

/// Random alternating automaton with conjunctive leaves.
pub fn rand_aba(rng: &mut StdRng, alg: &Algebra, n_states: usize) -> Aba {
    let delta = (0..n_states).map(|_| rand_term(rng, alg, n_states, true)).collect();
    let mut accepting: BTreeSet<StateId> = BTreeSet::new();
    for q in 0..n_states {
        if rng.random_bool(0.4) {
            accepting.insert(q);
        }
    }
    let mut init = rand_dnf(rng, n_states, true);
    if init.is_bot() && rng.random_bool(0.8) {
        init = Dnf::unit(rng.random_range(0..n_states));
    }
    let labels = (0..n_states).map(|q| format!("q{q}")).collect();
    Aba::new(alg.clone(), labels, init, delta, accepting)
}

/// Random nondeterministic automaton (singleton leaf members).
pub fn rand_nba(rng: &mut StdRng, alg: &Algebra, n_states: usize) -> Aba {
    let delta = (0..n_states).map(|_| rand_term(rng, alg, n_states, false)).collect();
    let mut accepting: BTreeSet<StateId> = BTreeSet::new();
    for q in 0..n_states {
        if rng.random_bool(0.4) {
            accepting.insert(q);
        }
    }
    let mut init = rand_dnf(rng, n_states, false);
    if init.is_bot() && rng.random_bool(0.8) {
        init = Dnf::unit(rng.random_range(0..n_states));
    }
    let labels = (0..n_states).map(|q| format!("q{q}")).collect();
    Aba::new(alg.clone(), labels, init, delta, accepting)
}
