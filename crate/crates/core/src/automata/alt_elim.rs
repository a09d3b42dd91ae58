//! Alternation elimination: the incremental subset-pair construction that
//! turns an alternating automaton into a nondeterministic one.
//!
//! Output states are pairs of state sets: the owing side still has to pass
//! through an accepting state, the settled side already has. A pair accepts
//! when the owing side is empty. Pairs are normalized to disjoint sides
//! (the settled copy of a state that is also owing is redundant: the
//! language of a pair depends only on the union of its sides and the owing
//! side, so disjointness preserves the language). With state reduction
//! enabled, elements whose removal leaves the conjoined transition term of
//! the side unchanged are dropped as well.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::tterm::{lift_binary, lift_unary, Dnf, Tt};

use super::{Aba, DnfOp, MhState, StateId};

/// Alternation product of two transition terms: pairs every member of the
/// left (owing) leaf with every member of the right (settled) leaf.
pub fn aprod(
    f: &Tt<Dnf<StateId>>,
    g: &Tt<Dnf<StateId>>,
    accepting: &BTreeSet<StateId>,
) -> Tt<Dnf<MhState>> {
    lift_binary(f, g, &|x, y| aprod_leaf(x, y, accepting))
}

fn aprod_leaf(x: &Dnf<StateId>, y: &Dnf<StateId>, f: &BTreeSet<StateId>) -> Dnf<MhState> {
    let mut out = BTreeSet::new();
    for xs in x.members() {
        for ys in y.members() {
            let mut inner = BTreeSet::new();
            inner.insert(make_pair(xs, ys, f));
            out.insert(inner);
        }
    }
    Dnf::from_members(out)
}

/// `<X \ F, Y u (X n F)>`, normalized to disjoint sides.
fn make_pair(x: &BTreeSet<StateId>, y: &BTreeSet<StateId>, f: &BTreeSet<StateId>) -> MhState {
    let owing: BTreeSet<StateId> = x.difference(f).copied().collect();
    let mut settled: BTreeSet<StateId> = y.clone();
    settled.extend(x.intersection(f).copied());
    let settled = settled.difference(&owing).copied().collect();
    MhState { owing, settled }
}

/// `Fin` of a leaf: the owing side restarts from scratch.
fn fin_leaf(x: &Dnf<StateId>, f: &BTreeSet<StateId>) -> Dnf<MhState> {
    let empty = Dnf::top();
    aprod_leaf(x, &empty, f)
}

struct Eliminator<'a> {
    m: &'a Aba,
    delta: Vec<Tt<Dnf<StateId>>>,
    inf_memo: HashMap<BTreeSet<StateId>, Tt<Dnf<StateId>>>,
    reduce: bool,
}

impl<'a> Eliminator<'a> {
    fn new(m: &'a Aba, reduce: bool) -> Eliminator<'a> {
        // distinguished top/bottom states are eliminated from the leaves by
        // the DNF laws before the construction runs
        let strip = |d: &Dnf<StateId>| -> Dnf<StateId> {
            Dnf::from_members(d.members().filter_map(|member| {
                if m.bot_state().is_some_and(|b| member.contains(&b)) {
                    return None;
                }
                let mut member = member.clone();
                if let Some(t) = m.top_state() {
                    member.remove(&t);
                }
                Some(member)
            }))
        };
        let delta = (0..m.state_count())
            .map(|q| lift_unary(m.delta(q), &strip).restrict(&m.algebra().top()))
            .collect();
        Eliminator { m, delta, inf_memo: HashMap::new(), reduce }
    }

    fn stripped_init(&self) -> Dnf<StateId> {
        let d = self.m.init();
        Dnf::from_members(d.members().filter_map(|member| {
            if self.m.bot_state().is_some_and(|b| member.contains(&b)) {
                return None;
            }
            let mut member = member.clone();
            if let Some(t) = self.m.top_state() {
                member.remove(&t);
            }
            Some(member)
        }))
    }

    /// Conjoined transition term of a state set, in ascending state order.
    fn delta_inf(&mut self, set: &BTreeSet<StateId>) -> Tt<Dnf<StateId>> {
        if let Some(t) = self.inf_memo.get(set) {
            return t.clone();
        }
        let mut acc = Tt::leaf(Dnf::top());
        for &q in set {
            acc = lift_binary(&acc, &self.delta[q], &|a: &Dnf<StateId>, b| a.and(b));
        }
        self.inf_memo.insert(set.clone(), acc.clone());
        acc
    }

    /// Greedy application of the state-reduction rule: drop an element
    /// when the conjoined term of its side is unchanged without it. The
    /// owing side stays nonempty if it was nonempty.
    fn reduce_pair(&mut self, mut p: MhState) -> MhState {
        if !self.reduce {
            return p;
        }
        loop {
            let mut changed = false;
            for &q in p.owing.clone().iter() {
                if p.owing.len() == 1 {
                    break;
                }
                let mut smaller = p.owing.clone();
                smaller.remove(&q);
                if self.delta_inf(&smaller) == self.delta_inf(&p.owing) {
                    p.owing = smaller;
                    changed = true;
                }
            }
            for &q in p.settled.clone().iter() {
                let mut smaller = p.settled.clone();
                smaller.remove(&q);
                if self.delta_inf(&smaller) == self.delta_inf(&p.settled) {
                    p.settled = smaller;
                    changed = true;
                }
            }
            if !changed {
                return p;
            }
        }
    }

    fn reduce_dnf(&mut self, d: &Dnf<MhState>) -> Dnf<MhState> {
        Dnf::from_members(
            d.members()
                .map(|member| member.iter().map(|p| self.reduce_pair(p.clone())).collect()),
        )
    }

    fn run(mut self) -> (Aba, Vec<MhState>) {
        let accepting_in = self.m.accepting().clone();
        let init_pairs = {
            let init = self.stripped_init();
            let raw = fin_leaf(&init, &accepting_in);
            self.reduce_dnf(&raw)
        };
        let mut states: Vec<MhState> = Vec::new();
        let mut index: HashMap<MhState, StateId> = HashMap::new();
        let discover = |d: &Dnf<MhState>,
                            states: &mut Vec<MhState>,
                            index: &mut HashMap<MhState, StateId>|
         -> Dnf<StateId> {
            for member in d.members() {
                for p in member {
                    if !index.contains_key(p) {
                        index.insert(p.clone(), states.len());
                        states.push(p.clone());
                    }
                }
            }
            d.map(&|p| index[p])
        };
        let init = discover(&init_pairs, &mut states, &mut index);
        let mut delta: Vec<Tt<Dnf<StateId>>> = Vec::new();
        let mut next = 0;
        while next < states.len() {
            let p = states[next].clone();
            let raw: Tt<Dnf<MhState>> = if p.owing.is_empty() {
                let inner = self.delta_inf(&p.settled);
                lift_unary(&inner, &|leaf: &Dnf<StateId>| fin_leaf(leaf, &accepting_in))
            } else {
                let left = self.delta_inf(&p.owing);
                let right = self.delta_inf(&p.settled);
                aprod(&left, &right, &accepting_in)
            };
            let (_, raw_leaves) = raw.collect();
            let mut mapped: HashMap<Dnf<MhState>, Dnf<StateId>> = HashMap::new();
            for leaf in raw_leaves {
                let reduced = self.reduce_dnf(&leaf);
                let ids = discover(&reduced, &mut states, &mut index);
                mapped.insert(leaf, ids);
            }
            delta.push(lift_unary(&raw, &|leaf: &Dnf<MhState>| mapped[leaf].clone()));
            next += 1;
        }
        let accepting: BTreeSet<StateId> = states
            .iter()
            .enumerate()
            .filter(|(_, p)| p.owing.is_empty())
            .map(|(i, _)| i)
            .collect();
        let labels: Vec<String> = states.iter().map(|p| p.label()).collect();
        let nba = Aba::new(self.m.algebra().clone(), labels, init, delta, accepting);
        (nba, states)
    }
}

/// Eliminate alternation, producing a language-equal nondeterministic
/// automaton, with the state reduction rule enabled.
pub fn alt_elim(m: &Aba) -> Aba {
    alt_elim_pairs(m, true).0
}

/// The same construction without the state reduction rule.
pub fn alt_elim_unreduced(m: &Aba) -> Aba {
    alt_elim_pairs(m, false).0
}

/// Alternation elimination exposing the subset pairs behind each state.
pub fn alt_elim_pairs(m: &Aba, reduce: bool) -> (Aba, Vec<MhState>) {
    Eliminator::new(m, reduce).run()
}

/// Product of two nondeterministic automata as alternation elimination of
/// their conjunction. The state reduction rule stays off here so that
/// every state is a pair of one state per operand; it could only shrink
/// pairs further.
pub fn product(n1: &Aba, n2: &Aba) -> Result<Aba> {
    if !n1.is_nondeterministic() {
        return Err(Error::NotNondeterministic("left product operand".into()));
    }
    if !n2.is_nondeterministic() {
        return Err(Error::NotNondeterministic("right product operand".into()));
    }
    let combined = n1.combine(n2, DnfOp::And)?;
    let (nba, pairs) = alt_elim_pairs(&combined, false);
    let plain = [n1, n2]
        .iter()
        .all(|n| n.top_state().is_none() && n.bot_state().is_none());
    if plain {
        let n1_states = n1.state_count();
        let bound = 4 * n1.state_count() * n2.state_count();
        assert!(pairs.len() <= bound, "product state bound exceeded");
        for p in &pairs {
            assert!(p.owing.is_disjoint(&p.settled));
            assert!(p.owing.is_disjoint(combined.accepting()));
            let union: BTreeSet<StateId> =
                p.owing.union(&p.settled).copied().collect();
            assert_eq!(union.len(), 2, "product pair must hold one state per operand");
            let firsts = union.iter().filter(|&&q| q < n1_states).count();
            assert_eq!(firsts, 1, "product pair must pair up the two operands");
        }
    }
    Ok(nba)
}

