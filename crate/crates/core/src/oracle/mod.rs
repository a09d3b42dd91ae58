//! Reference implementations used for differential testing and the CLI
//! check mode: the classical subset-pair construction over an explicit
//! alphabet, SCC-based emptiness, explicit membership of ultimately
//! periodic words, direct evaluation of temporal formulas on such words,
//! and a brute-force regex matcher. None of these share code with the
//! symbolic pipeline beyond the algebra and the syntax trees.

mod brute;
mod eval;

pub use brute::brute_match;
pub use eval::{eval, Evaluator};

use std::collections::{BTreeSet, HashMap};

use crate::automata::{ClassicalAba, StateId};
use crate::error::{Error, Result};
use crate::tterm::Dnf;

/// Classical alternation elimination by the subset-pair construction over
/// the explicit alphabet. Written independently of the symbolic algorithm:
/// no transition terms, no state reduction.
pub fn classical_mh(c: &ClassicalAba) -> ClassicalAba {
    type Pair = (BTreeSet<StateId>, BTreeSet<StateId>);
    let f = c.accepting();

    // set-of-sets conjunction over the successor DNFs of a state set
    let conj = |set: &BTreeSet<StateId>, symbol: usize| -> Vec<BTreeSet<StateId>> {
        let mut acc: Vec<BTreeSet<StateId>> = vec![BTreeSet::new()];
        for &q in set {
            let mut next = Vec::new();
            for x in acc.iter() {
                for member in c.step(q, symbol).members() {
                    let mut u = x.clone();
                    u.extend(member.iter().copied());
                    if !next.contains(&u) {
                        next.push(u);
                    }
                }
            }
            acc = next;
        }
        acc
    };

    let fin = |x: &BTreeSet<StateId>| -> Pair {
        (
            x.difference(f).copied().collect(),
            x.intersection(f).copied().collect(),
        )
    };

    let mut states: Vec<Pair> = Vec::new();
    let mut index: HashMap<Pair, StateId> = HashMap::new();
    let discover = |p: Pair, states: &mut Vec<Pair>, index: &mut HashMap<Pair, StateId>| {
        if let Some(&i) = index.get(&p) {
            return i;
        }
        let i = states.len();
        index.insert(p.clone(), i);
        states.push(p);
        i
    };

    let mut init_members: BTreeSet<BTreeSet<StateId>> = BTreeSet::new();
    for member in c.init().members() {
        let p = fin(member);
        let i = discover(p, &mut states, &mut index);
        init_members.insert([i].into_iter().collect());
    }

    let mut delta: Vec<Vec<Dnf<StateId>>> = Vec::new();
    let mut next = 0;
    while next < states.len() {
        let (u, v) = states[next].clone();
        let mut row = Vec::with_capacity(c.symbols().len());
        for s in 0..c.symbols().len() {
            let mut members: BTreeSet<BTreeSet<StateId>> = BTreeSet::new();
            if u.is_empty() {
                for x in conj(&v, s) {
                    let i = discover(fin(&x), &mut states, &mut index);
                    members.insert([i].into_iter().collect());
                }
            } else {
                for x in conj(&u, s) {
                    for y in conj(&v, s) {
                        let owing: BTreeSet<StateId> = x.difference(f).copied().collect();
                        let mut settled: BTreeSet<StateId> = y.clone();
                        settled.extend(x.intersection(f).copied());
                        let i = discover((owing, settled), &mut states, &mut index);
                        members.insert([i].into_iter().collect());
                    }
                }
            }
            row.push(Dnf::from_members(members));
        }
        delta.push(row);
        next += 1;
    }

    let accepting: BTreeSet<StateId> = states
        .iter()
        .enumerate()
        .filter(|(_, (u, _))| u.is_empty())
        .map(|(i, _)| i)
        .collect();
    let labels: Vec<String> = states
        .iter()
        .map(|(u, v)| {
            let s = |set: &BTreeSet<StateId>| {
                set.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(" ")
            };
            format!("<{{{}}} {{{}}}>", s(u), s(v))
        })
        .collect();
    ClassicalAba::new(
        c.algebra().clone(),
        c.symbols().to_vec(),
        labels,
        Dnf::from_members(init_members),
        delta,
        accepting,
    )
}

fn classical_edges(c: &ClassicalAba) -> Result<Vec<Vec<(usize, StateId)>>> {
    if !c.is_nondeterministic() {
        return Err(Error::NotNondeterministic("classical emptiness needs an NBA".into()));
    }
    let mut edges: Vec<Vec<(usize, StateId)>> = vec![Vec::new(); c.state_count() + 1];
    let vtop = c.state_count();
    for q in 0..c.state_count() {
        for s in 0..c.symbols().len() {
            for member in c.step(q, s).members() {
                match member.iter().next() {
                    None => edges[q].push((s, vtop)),
                    Some(&t) => edges[q].push((s, t)),
                }
            }
        }
    }
    for s in 0..c.symbols().len() {
        edges[vtop].push((s, vtop));
    }
    Ok(edges)
}

fn classical_inits(c: &ClassicalAba) -> Vec<StateId> {
    let mut inits = Vec::new();
    for member in c.init().members() {
        let q = match member.iter().next() {
            None => c.state_count(),
            Some(&q) => q,
        };
        if !inits.contains(&q) {
            inits.push(q);
        }
    }
    inits
}

/// Emptiness of a classical nondeterministic automaton by
/// strongly-connected-component analysis: the language is nonempty iff a
/// cycle through an accepting state is reachable.
pub fn classical_is_empty(c: &ClassicalAba) -> Result<bool> {
    let edges = classical_edgeset(c)?;
    let n = edges.len();
    let accepting: Vec<bool> = (0..n)
        .map(|q| q == c.state_count() || c.is_accepting(q))
        .collect();
    // reachability from the initial states
    let mut reach = vec![false; n];
    let mut stack = classical_inits(c);
    for &q in &stack {
        reach[q] = true;
    }
    while let Some(q) = stack.pop() {
        for &t in &edges[q] {
            if !reach[t] {
                reach[t] = true;
                stack.push(t);
            }
        }
    }
    let sccs = tarjan(&edges);
    for component in sccs {
        let has_cycle = component.len() > 1
            || edges[component[0]].contains(&component[0]);
        if !has_cycle {
            continue;
        }
        if component.iter().any(|&q| reach[q] && accepting[q]) {
            // an accepting state inside a reachable cycle
            if component.iter().any(|&q| reach[q]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn classical_edgeset(c: &ClassicalAba) -> Result<Vec<Vec<StateId>>> {
    let labelled = classical_edges(c)?;
    Ok(labelled
        .into_iter()
        .map(|row| {
            let mut out: Vec<StateId> = row.into_iter().map(|(_, t)| t).collect();
            out.sort_unstable();
            out.dedup();
            out
        })
        .collect())
}

/// Iterative Tarjan strongly-connected components.
fn tarjan(edges: &[Vec<StateId>]) -> Vec<Vec<StateId>> {
    let n = edges.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut counter = 0;
    let mut out = Vec::new();
    // explicit DFS stack of (node, next edge position)
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(&mut (v, ref mut ei)) = call.last_mut() {
            if *ei == 0 {
                index[v] = counter;
                low[v] = counter;
                counter += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if *ei < edges[v].len() {
                let w = edges[v][*ei];
                *ei += 1;
                if index[w] == usize::MAX {
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&mut (parent, _)) = call.last_mut() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut component = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        component.push(w);
                        if w == v {
                            break;
                        }
                    }
                    out.push(component);
                }
            }
        }
    }
    out
}

/// Membership of an ultimately periodic word, given as sequences of symbol
/// indices, in a classical nondeterministic automaton.
pub fn classical_member_up(c: &ClassicalAba, prefix: &[usize], cycle: &[usize]) -> Result<bool> {
    if cycle.is_empty() {
        return Err(Error::EmptyCycle);
    }
    let edges = classical_edges(c)?;
    let n = edges.len();
    let mut cur: BTreeSet<StateId> = classical_inits(c).into_iter().collect();
    for &s in prefix {
        let mut next = BTreeSet::new();
        for &q in &cur {
            for &(sym, t) in &edges[q] {
                if sym == s {
                    next.insert(t);
                }
            }
        }
        cur = next;
    }
    let period = cycle.len();
    let node = |q: usize, i: usize| q * period + i;
    let mut product: Vec<Vec<usize>> = vec![Vec::new(); n * period];
    for q in 0..n {
        for (i, &s) in cycle.iter().enumerate() {
            for &(sym, t) in &edges[q] {
                if sym == s {
                    product[node(q, i)].push(node(t, (i + 1) % period));
                }
            }
        }
    }
    let accepting = |q: usize| q == c.state_count() || c.is_accepting(q);
    let reach = reach_from(&product, cur.iter().map(|&q| node(q, 0)));
    for q in 0..n {
        if !accepting(q) {
            continue;
        }
        for i in 0..period {
            let p = node(q, i);
            if reach[p] && reach_from(&product, product[p].iter().copied())[p] {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn reach_from(edges: &[Vec<usize>], starts: impl Iterator<Item = usize>) -> Vec<bool> {
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

/// Map the letters of a word to symbol indices of a classical automaton's
/// alphabet.
pub fn lift_word(c: &ClassicalAba, letters: &[crate::algebra::Letter]) -> Result<Vec<usize>> {
    letters
        .iter()
        .map(|a| {
            c.symbol_of(a)
                .ok_or_else(|| Error::ForeignLetter(format!("{a:?} not covered by the alphabet")))
        })
        .collect()
}
