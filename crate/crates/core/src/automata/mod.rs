//! Alternating, nondeterministic and deterministic Büchi automata whose
//! transitions are transition terms with set-of-sets DNF leaves.
//!
//! States are indices with display labels. The initial condition is a
//! positive Boolean combination of states in DNF. A leaf member set is a
//! conjunction of successor states; the empty DNF rejects and `{{}}`
//! accepts unconditionally. Optional distinguished top/bottom states track
//! which indices play the roles of the always-accepting and
//! always-rejecting state; they are metadata and do not take part in
//! structural equality.

mod alt_elim;
mod classical;
mod run;
mod text;

pub use alt_elim::{alt_elim, alt_elim_pairs, alt_elim_unreduced, aprod, product};
pub use classical::{from_classical, mintermize, ClassicalAba};
pub use run::{is_empty, member_up, Emptiness, Runner};
pub use text::{parse_automaton, render_dot, render_text};

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::{Algebra, Letter, Pred};
use crate::error::{Error, Result};
use crate::tterm::{lift_binary, Dnf, Tt};

pub type StateId = usize;

#[derive(Debug, Clone)]
pub struct Aba {
    alg: Algebra,
    labels: Vec<String>,
    init: Dnf<StateId>,
    delta: Vec<Tt<Dnf<StateId>>>,
    accepting: BTreeSet<StateId>,
    top: Option<StateId>,
    bot: Option<StateId>,
}

impl PartialEq for Aba {
    fn eq(&self, other: &Self) -> bool {
        self.alg == other.alg
            && self.labels == other.labels
            && self.init == other.init
            && self.delta == other.delta
            && self.accepting == other.accepting
    }
}

impl Eq for Aba {}

impl Aba {
    pub fn new(
        alg: Algebra,
        labels: Vec<String>,
        init: Dnf<StateId>,
        delta: Vec<Tt<Dnf<StateId>>>,
        accepting: BTreeSet<StateId>,
    ) -> Aba {
        assert_eq!(labels.len(), delta.len(), "one transition term per state");
        Aba { alg, labels, init, delta, accepting, top: None, bot: None }
    }

    pub fn with_top(mut self, top: Option<StateId>) -> Aba {
        self.top = top;
        self
    }

    pub fn with_bot(mut self, bot: Option<StateId>) -> Aba {
        self.bot = bot;
        self
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn state_count(&self) -> usize {
        self.delta.len()
    }

    pub fn label(&self, q: StateId) -> &str {
        &self.labels[q]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn state_by_label(&self, label: &str) -> Option<StateId> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn init(&self) -> &Dnf<StateId> {
        &self.init
    }

    pub fn delta(&self, q: StateId) -> &Tt<Dnf<StateId>> {
        &self.delta[q]
    }

    pub fn accepting(&self) -> &BTreeSet<StateId> {
        &self.accepting
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting.contains(&q)
    }

    pub fn top_state(&self) -> Option<StateId> {
        self.top
    }

    pub fn bot_state(&self) -> Option<StateId> {
        self.bot
    }

    /// No conjunction in the initial condition or in any leaf member.
    pub fn is_nondeterministic(&self) -> bool {
        let singletons = |d: &Dnf<StateId>| d.members().all(|m| m.len() <= 1);
        singletons(&self.init) && self.delta.iter().all(|t| {
            let (_, leaves) = t.collect();
            leaves.iter().all(|l| singletons(l))
        })
    }

    /// Single initial state and at most one successor choice per letter.
    pub fn is_deterministic(&self) -> bool {
        let single = |d: &Dnf<StateId>| {
            d.0.len() <= 1 && d.members().all(|m| m.len() <= 1)
        };
        self.init.0.len() == 1
            && self.init.members().all(|m| m.len() == 1)
            && self.delta.iter().all(|t| {
                let (_, leaves) = t.collect();
                leaves.iter().all(|l| single(l))
            })
    }

    /// Restrict every transition term to the whole domain, removing
    /// branches with unsatisfiable path conditions.
    pub fn clean(&self) -> Aba {
        let top = self.alg.top();
        let delta = self.delta.iter().map(|t| t.restrict(&top)).collect();
        Aba { delta, ..self.clone() }
    }

    /// Guarded symbolic transitions of a state: accumulated branch
    /// condition paired with the reached leaf, in path order.
    pub fn guarded(&self, q: StateId) -> Vec<(Pred, &Dnf<StateId>)> {
        self.delta[q].guarded_leaves(&self.alg)
    }

    /// Disjoint union with the initial conditions combined by `op`.
    /// Shared top/bottom states are merged.
    pub fn combine(&self, other: &Aba, op: DnfOp) -> Result<Aba> {
        if self.alg != other.alg {
            return Err(Error::AlgebraMismatch);
        }
        // map other's states into the combined index space
        let mut remap: Vec<Option<StateId>> = vec![None; other.state_count()];
        if let (Some(t1), Some(t2)) = (self.top, other.top) {
            remap[t2] = Some(t1);
        }
        if let (Some(b1), Some(b2)) = (self.bot, other.bot) {
            remap[b2] = Some(b1);
        }
        let mut labels = self.labels.clone();
        for (q, slot) in remap.iter_mut().enumerate() {
            if slot.is_none() {
                *slot = Some(labels.len());
                labels.push(other.labels[q].clone());
            }
        }
        let remap: Vec<StateId> = remap.into_iter().map(Option::unwrap).collect();
        let map_dnf = |d: &Dnf<StateId>| d.map(&|q| remap[*q]);
        let mut delta = self.delta.clone();
        for q in 0..other.state_count() {
            if remap[q] < self.state_count() {
                continue; // merged onto an existing top/bottom state
            }
            delta.push(crate::tterm::lift_unary(&other.delta[q], &map_dnf));
        }
        let mut accepting = self.accepting.clone();
        accepting.extend(other.accepting.iter().map(|&q| remap[q]));
        let init = match op {
            DnfOp::And => self.init.and(&map_dnf(&other.init)),
            DnfOp::Or => self.init.or(&map_dnf(&other.init)),
        };
        let top = self.top.or_else(|| other.top.map(|t| remap[t]));
        let bot = self.bot.or_else(|| other.bot.map(|b| remap[b]));
        Ok(Aba { alg: self.alg.clone(), labels, init, delta, accepting, top, bot })
    }

    /// Conjunction of the transition terms of a state set, with the empty
    /// set mapping to top. Members are combined in ascending state order.
    pub fn delta_of_set(&self, states: &BTreeSet<StateId>) -> Tt<Dnf<StateId>> {
        let mut acc = Tt::leaf(Dnf::top());
        for &q in states {
            acc = lift_binary(&acc, &self.delta[q], &|a: &Dnf<StateId>, b| a.and(b));
        }
        acc
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DnfOp {
    And,
    Or,
}

/// State of an alternation-eliminated automaton: the owing set still has
/// to visit an accepting state, the settled set already has. The two sets
/// are kept disjoint and owing never contains accepting states.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MhState {
    pub owing: BTreeSet<StateId>,
    pub settled: BTreeSet<StateId>,
}

impl MhState {
    pub fn label(&self) -> String {
        let fmt_set = |s: &BTreeSet<StateId>| {
            let items: Vec<String> = s.iter().map(|q| q.to_string()).collect();
            format!("{{{}}}", items.join(" "))
        };
        format!("<{} {}>", fmt_set(&self.owing), fmt_set(&self.settled))
    }
}

/// Ultimately periodic word `prefix . cycle^w`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UpWord {
    prefix: Vec<Letter>,
    cycle: Vec<Letter>,
}

impl UpWord {
    pub fn new(prefix: Vec<Letter>, cycle: Vec<Letter>) -> Result<UpWord> {
        if cycle.is_empty() {
            return Err(Error::EmptyCycle);
        }
        Ok(UpWord { prefix, cycle })
    }

    pub fn prefix(&self) -> &[Letter] {
        &self.prefix
    }

    pub fn cycle(&self) -> &[Letter] {
        &self.cycle
    }

    /// The letter at absolute position `i`.
    pub fn letter(&self, i: usize) -> &Letter {
        if i < self.prefix.len() {
            &self.prefix[i]
        } else {
            &self.cycle[(i - self.prefix.len()) % self.cycle.len()]
        }
    }

    /// Number of distinct positions: prefix plus one cycle.
    pub fn period_end(&self) -> usize {
        self.prefix.len() + self.cycle.len()
    }

    /// Successor of a canonical position in `[0, period_end)`.
    pub fn succ(&self, i: usize) -> usize {
        if i + 1 < self.period_end() {
            i + 1
        } else {
            self.prefix.len()
        }
    }

    /// The word with the first letter removed (the cycle rotates when the
    /// prefix is empty).
    pub fn rest(&self) -> UpWord {
        if self.prefix.is_empty() {
            let mut cycle = self.cycle.clone();
            cycle.rotate_left(1);
            UpWord { prefix: Vec::new(), cycle }
        } else {
            UpWord { prefix: self.prefix[1..].to_vec(), cycle: self.cycle.clone() }
        }
    }

    /// Prepend one letter.
    pub fn cons(&self, a: Letter) -> UpWord {
        let mut prefix = Vec::with_capacity(self.prefix.len() + 1);
        prefix.push(a);
        prefix.extend_from_slice(&self.prefix);
        UpWord { prefix, cycle: self.cycle.clone() }
    }

    /// Unroll one copy of the cycle into the prefix; the denoted word is
    /// unchanged.
    pub fn pumped(&self) -> UpWord {
        let mut prefix = self.prefix.clone();
        prefix.extend_from_slice(&self.cycle);
        UpWord { prefix, cycle: self.cycle.clone() }
    }

    pub fn check(&self, alg: &Algebra) -> Result<()> {
        for a in self.prefix.iter().chain(self.cycle.iter()) {
            alg.check_letter(a)?;
        }
        Ok(())
    }

    pub fn display(&self, alg: &Algebra) -> String {
        let side = |letters: &[Letter]| {
            letters.iter().map(|l| alg.letter_string(l)).collect::<Vec<_>>().join(",")
        };
        format!("{};{}", side(&self.prefix), side(&self.cycle))
    }
}

impl fmt::Display for MhState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}
