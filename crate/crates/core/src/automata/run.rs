//! Emptiness and ultimately-periodic-word membership for nondeterministic
//! automata.
//!
//! Both algorithms work on an explicit guarded-edge view of the cleaned
//! automaton. A leaf member `{q}` is an edge to `q`; the empty member (an
//! unconditionally satisfied obligation) is routed to a virtual accepting
//! state with a top self-loop.

use std::collections::BTreeSet;

use crate::algebra::{Letter, Pred};
use crate::error::{Error, Result};

use super::{Aba, UpWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Emptiness {
    Empty,
    NonEmpty(UpWord),
}

impl Emptiness {
    pub fn is_empty(&self) -> bool {
        matches!(self, Emptiness::Empty)
    }

    pub fn witness(&self) -> Option<&UpWord> {
        match self {
            Emptiness::Empty => None,
            Emptiness::NonEmpty(w) => Some(w),
        }
    }
}

pub(crate) struct NbaView {
    pub edges: Vec<Vec<(Pred, usize)>>,
    pub accepting: Vec<bool>,
    pub inits: Vec<usize>,
}

pub(crate) fn nba_view(m: &Aba) -> Result<NbaView> {
    if !m.is_nondeterministic() {
        return Err(Error::NotNondeterministic(
            "emptiness and membership need a nondeterministic automaton".into(),
        ));
    }
    let m = m.clean();
    let n = m.state_count();
    let vtop = n;
    let mut used_vtop = false;
    let mut edges: Vec<Vec<(Pred, usize)>> = Vec::with_capacity(n + 1);
    for q in 0..n {
        let mut out = Vec::new();
        for (guard, leaf) in m.guarded(q) {
            for member in leaf.members() {
                match member.iter().next() {
                    None => {
                        used_vtop = true;
                        out.push((guard.clone(), vtop));
                    }
                    Some(&t) => out.push((guard.clone(), t)),
                }
            }
        }
        edges.push(out);
    }
    let mut accepting: Vec<bool> = (0..n).map(|q| m.is_accepting(q)).collect();
    let mut inits = Vec::new();
    for member in m.init().members() {
        match member.iter().next() {
            None => {
                used_vtop = true;
                if !inits.contains(&vtop) {
                    inits.push(vtop);
                }
            }
            Some(&q) => {
                if !inits.contains(&q) {
                    inits.push(q);
                }
            }
        }
    }
    if used_vtop {
        edges.push(vec![(m.algebra().top(), vtop)]);
        accepting.push(true);
    }
    Ok(NbaView { edges, accepting, inits })
}

/// Nested depth-first search for an accepting lasso. The inner search
/// shares one visited set across all seeds; accepting seeds are examined
/// in outer post-order.
pub fn is_empty(m: &Aba) -> Result<Emptiness> {
    let view = nba_view(m)?;
    let n = view.edges.len();
    let mut dfs = Ndfs {
        view: &view,
        outer: vec![false; n],
        inner: vec![false; n],
        stem: Vec::new(),
        cycle: Vec::new(),
    };
    for &q in &view.inits {
        if !dfs.outer[q] && dfs.outer_search(q) {
            let alg = m.algebra();
            let sample = |g: &Pred| alg.sample(g).expect("clean guard is satisfiable");
            let prefix: Vec<Letter> = dfs.stem.iter().map(|(g, _)| sample(g)).collect();
            let cycle: Vec<Letter> = dfs.cycle.iter().map(|(g, _)| sample(g)).collect();
            let w = UpWord::new(prefix, cycle)?;
            return Ok(Emptiness::NonEmpty(w));
        }
    }
    Ok(Emptiness::Empty)
}

struct Ndfs<'a> {
    view: &'a NbaView,
    outer: Vec<bool>,
    inner: Vec<bool>,
    stem: Vec<(Pred, usize)>,
    cycle: Vec<(Pred, usize)>,
}

impl<'a> Ndfs<'a> {
    fn outer_search(&mut self, q: usize) -> bool {
        self.outer[q] = true;
        for (g, t) in &self.view.edges[q] {
            if !self.outer[*t] {
                self.stem.push((g.clone(), *t));
                if self.outer_search(*t) {
                    return true;
                }
                self.stem.pop();
            }
        }
        self.view.accepting[q] && self.inner_search(q, q)
    }

    fn inner_search(&mut self, seed: usize, v: usize) -> bool {
        for (g, t) in &self.view.edges[v] {
            if *t == seed {
                self.cycle.push((g.clone(), *t));
                return true;
            }
            if !self.inner[*t] {
                self.inner[*t] = true;
                self.cycle.push((g.clone(), *t));
                if self.inner_search(seed, *t) {
                    return true;
                }
                self.cycle.pop();
            }
        }
        false
    }
}

/// Membership of an ultimately periodic word: set reachability along the
/// prefix, then a reachable accepting cycle in the product of states with
/// cycle positions.
pub fn member_up(m: &Aba, w: &UpWord) -> Result<bool> {
    Runner::new(m)?.member(w)
}

/// Precomputed edge view for answering many membership queries on one
/// automaton. Over a finite propositional domain the guard tests are
/// tabulated per letter.
pub struct Runner {
    alg: crate::algebra::Algebra,
    view: NbaView,
    by_letter: Option<Vec<Vec<Vec<usize>>>>,
}

impl Runner {
    pub fn new(m: &Aba) -> Result<Runner> {
        let alg = m.algebra().clone();
        let view = nba_view(m)?;
        let by_letter = alg.enumerate_letters().and_then(|letters| {
            if letters.iter().any(|l| !matches!(l, Letter::Props(_))) {
                return None;
            }
            let mut table = vec![vec![Vec::new(); view.edges.len()]; letters.len()];
            for l in &letters {
                if let Letter::Props(mask) = l {
                    for (q, out) in view.edges.iter().enumerate() {
                        for (g, t) in out {
                            if g.denotes(l) {
                                table[*mask as usize][q].push(*t);
                            }
                        }
                    }
                }
            }
            Some(table)
        });
        Ok(Runner { alg, view, by_letter })
    }

    fn successors(&self, q: usize, a: &Letter, out: &mut Vec<usize>) {
        match (&self.by_letter, a) {
            (Some(table), Letter::Props(mask)) => {
                out.extend_from_slice(&table[*mask as usize][q]);
            }
            _ => {
                for (g, t) in &self.view.edges[q] {
                    if g.denotes(a) {
                        out.push(*t);
                    }
                }
            }
        }
    }

    pub fn member(&self, w: &UpWord) -> Result<bool> {
        w.check(&self.alg)?;
        let view = &self.view;
        let n = view.edges.len();
        let mut cur: BTreeSet<usize> = view.inits.iter().copied().collect();
        let mut succ = Vec::new();
        for a in w.prefix() {
            let mut nextset = BTreeSet::new();
            for &q in &cur {
                succ.clear();
                self.successors(q, a, &mut succ);
                nextset.extend(succ.iter().copied());
            }
            cur = nextset;
        }
        // product of automaton states with positions inside the cycle
        let period = w.cycle().len();
        let node = |q: usize, i: usize| q * period + i;
        let mut product_edges: Vec<Vec<usize>> = vec![Vec::new(); n * period];
        for q in 0..n {
            for (i, a) in w.cycle().iter().enumerate() {
                succ.clear();
                self.successors(q, a, &mut succ);
                for &t in &succ {
                    product_edges[node(q, i)].push(node(t, (i + 1) % period));
                }
            }
        }
        let reachable = bfs(&product_edges, cur.iter().map(|&q| node(q, 0)));
        for q in 0..n {
            if !view.accepting[q] {
                continue;
            }
            for i in 0..period {
                let p = node(q, i);
                if !reachable[p] {
                    continue;
                }
                // a cycle through p of length >= 1
                let from_p = bfs(&product_edges, product_edges[p].iter().copied());
                if from_p[p] {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

fn bfs(edges: &[Vec<usize>], starts: impl Iterator<Item = usize>) -> Vec<bool> {
    let mut seen = vec![false; edges.len()];
    let mut stack: Vec<usize> = Vec::new();
    for s in starts {
        if !seen[s] {
            seen[s] = true;
            stack.push(s);
        }
    }
    while let Some(v) = stack.pop() {
        for &t in &edges[v] {
            if !seen[t] {
                seen[t] = true;
                stack.push(t);
            }
        }
    }
    seen
}
