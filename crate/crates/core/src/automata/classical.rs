//! Conversion between symbolic automata and classical automata over a
//! finite alphabet.
//!
//! Mintermization takes the conditions occurring in the transition terms,
//! computes their minterms, and evaluates each transition term on one
//! sample letter per minterm; elements of a minterm are indistinguishable,
//! so the choice of sample does not matter. The reverse direction rebuilds
//! transition terms as guard chains over the embedded symbol predicates,
//! condensing symbols with equal successor formulas into one guard.

use std::collections::BTreeSet;

use crate::algebra::{minterms, Algebra, Letter, Pred};
use crate::error::{Error, Result};
use crate::tterm::{Dnf, Tt};

use super::{Aba, StateId};

/// Alternating automaton over an explicit finite alphabet. Symbols are
/// predicates of the originating algebra; the transition table is total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalAba {
    alg: Algebra,
    symbols: Vec<Pred>,
    labels: Vec<String>,
    init: Dnf<StateId>,
    delta: Vec<Vec<Dnf<StateId>>>,
    accepting: BTreeSet<StateId>,
}

impl ClassicalAba {
    pub fn new(
        alg: Algebra,
        symbols: Vec<Pred>,
        labels: Vec<String>,
        init: Dnf<StateId>,
        delta: Vec<Vec<Dnf<StateId>>>,
        accepting: BTreeSet<StateId>,
    ) -> ClassicalAba {
        assert_eq!(labels.len(), delta.len());
        for row in &delta {
            assert_eq!(row.len(), symbols.len(), "transition table must be total");
        }
        ClassicalAba { alg, symbols, labels, init, delta, accepting }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn symbols(&self) -> &[Pred] {
        &self.symbols
    }

    pub fn state_count(&self) -> usize {
        self.delta.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn init(&self) -> &Dnf<StateId> {
        &self.init
    }

    pub fn step(&self, q: StateId, symbol: usize) -> &Dnf<StateId> {
        &self.delta[q][symbol]
    }

    pub fn accepting(&self) -> &BTreeSet<StateId> {
        &self.accepting
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting.contains(&q)
    }

    /// The unique symbol whose denotation contains the letter, if the
    /// alphabet covers it.
    pub fn symbol_of(&self, a: &Letter) -> Option<usize> {
        self.symbols.iter().position(|s| s.denotes(a))
    }

    /// No conjunctions in the initial condition or the successor DNFs.
    pub fn is_nondeterministic(&self) -> bool {
        let singletons = |d: &Dnf<StateId>| d.members().all(|m| m.len() <= 1);
        singletons(&self.init)
            && self.delta.iter().all(|row| row.iter().all(singletons))
    }
}

/// Reduce a symbolic automaton to a classical one over the minterms of its
/// conditions.
pub fn mintermize(m: &Aba) -> ClassicalAba {
    let m = m.clean();
    let alg = m.algebra().clone();
    let mut gamma: Vec<Pred> = Vec::new();
    for q in 0..m.state_count() {
        let (conds, _) = m.delta(q).collect();
        for c in conds {
            if !gamma.contains(&c) {
                gamma.push(c);
            }
        }
    }
    let symbols = minterms(&alg, &gamma).expect("conditions come from one algebra");
    let mut delta = Vec::with_capacity(m.state_count());
    for q in 0..m.state_count() {
        let row: Vec<Dnf<StateId>> = symbols
            .iter()
            .map(|s| {
                let a = alg.sample(s).expect("minterms are satisfiable");
                m.delta(q).leaf_of(&a).clone()
            })
            .collect();
        delta.push(row);
    }
    ClassicalAba::new(
        alg,
        symbols,
        m.labels().to_vec(),
        m.init().clone(),
        delta,
        m.accepting().clone(),
    )
}

/// Lift a classical automaton to a symbolic one. `embed` gives one
/// predicate per symbol; the predicates must be satisfiable and pairwise
/// disjoint. Symbols with equal successor DNFs share one guard.
pub fn from_classical(c: &ClassicalAba, embed: &[Pred]) -> Result<Aba> {
    if embed.len() != c.symbols.len() {
        return Err(Error::BadEmbedding);
    }
    for (i, p) in embed.iter().enumerate() {
        if !p.is_sat() {
            return Err(Error::BadEmbedding);
        }
        for q in embed.iter().skip(i + 1) {
            if p.and(q).is_sat() {
                return Err(Error::BadEmbedding);
            }
        }
    }
    let alg = embed
        .first()
        .map(|p| p.algebra().clone())
        .unwrap_or_else(|| c.alg.clone());
    let covers = {
        let mut all = alg.bot();
        for p in embed {
            all = all.or(p);
        }
        all.is_top()
    };
    let mut delta = Vec::with_capacity(c.state_count());
    for q in 0..c.state_count() {
        // group symbols with the same successors, in first-seen order
        let mut groups: Vec<(Dnf<StateId>, Pred)> = Vec::new();
        for (s, p) in embed.iter().enumerate() {
            let leaf = c.delta[q][s].clone();
            match groups.iter_mut().find(|(l, _)| *l == leaf) {
                Some((_, guard)) => *guard = guard.or(p),
                None => groups.push((leaf, p.clone())),
            }
        }
        let mut term = if covers {
            let (leaf, _) = groups.pop().expect("nonempty alphabet when covering");
            Tt::leaf(leaf)
        } else {
            Tt::leaf(Dnf::bot())
        };
        for (leaf, guard) in groups.into_iter().rev() {
            term = Tt::ite(guard, Tt::leaf(leaf), term);
        }
        delta.push(term);
    }
    Ok(Aba::new(
        alg,
        c.labels.clone(),
        c.init.clone(),
        delta,
        c.accepting.clone(),
    ))
}
