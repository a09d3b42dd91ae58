//! Direct evaluation of temporal formulas on ultimately periodic words.
//!
//! For a word `u . v^w` every subformula gets a truth vector over the
//! canonical positions `0 .. |u|+|v|`, where positions at or beyond `|u|`
//! repeat with period `|v|`. Boolean connectives and Next are table
//! lookups, Until and Release are the usual fixpoints on the lasso, and
//! the regex operators run the regex automaton along the word.
//!
//! Scans along the word stop after `(|u|+|v|) * (|Q|+1) + 1` steps: a run
//! configuration is a pair of canonical position and automaton state, so
//! by pigeonhole a longer run revisits a configuration inside the periodic
//! part; the cycle between the two visits spans a multiple of `|v|`
//! letters, hence cutting it preserves the canonical end position and any
//! hit beyond the bound has a copy below it.

use std::collections::HashMap;

use crate::algebra::Letter;

use crate::automata::UpWord;
use crate::ere::{Regex, RegexDfa};
use crate::error::Result;
use crate::rltl::{Formula, FormulaView};

/// A regex automaton with its step function tabulated per letter when
/// the domain is finite.
pub(crate) struct ScanDfa {
    dfa: RegexDfa,
    table: Option<Vec<Vec<Option<usize>>>>,
}

impl ScanDfa {
    fn new(r: &Regex) -> Result<ScanDfa> {
        let dfa = RegexDfa::build(r)?;
        let table = dfa.algebra().enumerate_letters().and_then(|letters| {
            if letters.iter().any(|l| !matches!(l, Letter::Props(_))) {
                return None;
            }
            let size = letters.len();
            let mut t = vec![vec![None; size]; dfa.state_count()];
            for (q, row) in t.iter_mut().enumerate() {
                for l in &letters {
                    if let Letter::Props(mask) = l {
                        row[*mask as usize] = dfa.step(q, l);
                    }
                }
            }
            Some(t)
        });
        Ok(ScanDfa { dfa, table })
    }

    fn step(&self, q: usize, a: &Letter) -> Option<usize> {
        match (&self.table, a) {
            (Some(t), Letter::Props(mask)) => t[q][*mask as usize],
            _ => self.dfa.step(q, a),
        }
    }

    fn initial(&self) -> usize {
        self.dfa.initial()
    }

    fn is_nullable(&self, q: usize) -> bool {
        self.dfa.is_nullable(q)
    }

    fn is_alive(&self, q: usize) -> bool {
        self.dfa.is_alive(q)
    }

    fn state_count(&self) -> usize {
        self.dfa.state_count()
    }
}

pub struct EvalTable {
    rows: HashMap<Formula, Vec<bool>>,
    n: usize,
}

impl EvalTable {
    pub fn build(f: &Formula, w: &UpWord) -> Result<EvalTable> {
        let mut dfas = HashMap::new();
        EvalTable::build_cached(f, w, &mut dfas)
    }

    fn build_cached(
        f: &Formula,
        w: &UpWord,
        dfas: &mut HashMap<Regex, ScanDfa>,
    ) -> Result<EvalTable> {
        w.check(f.algebra())?;
        let mut table = EvalTable { rows: HashMap::new(), n: w.period_end() };
        table.row(f, w, dfas)?;
        Ok(table)
    }

    pub fn truth(&self, f: &Formula, position: usize) -> bool {
        self.rows[f][position.min(self.n - 1)]
    }

    fn row(
        &mut self,
        f: &Formula,
        w: &UpWord,
        dfas: &mut HashMap<Regex, ScanDfa>,
    ) -> Result<Vec<bool>> {
        if let Some(r) = self.rows.get(f) {
            return Ok(r.clone());
        }
        let n = self.n;
        let row: Vec<bool> = match f.view() {
            FormulaView::Pred(p) => (0..n).map(|i| p.denotes(w.letter(i))).collect(),
            FormulaView::Not(x) => {
                let rx = self.row(x, w, dfas)?;
                rx.iter().map(|b| !b).collect()
            }
            FormulaView::And(xs) => {
                let rows: Vec<Vec<bool>> =
                    xs.iter().map(|x| self.row(x, w, dfas)).collect::<Result<_>>()?;
                (0..n).map(|i| rows.iter().all(|r| r[i])).collect()
            }
            FormulaView::Or(xs) => {
                let rows: Vec<Vec<bool>> =
                    xs.iter().map(|x| self.row(x, w, dfas)).collect::<Result<_>>()?;
                (0..n).map(|i| rows.iter().any(|r| r[i])).collect()
            }
            FormulaView::Next(x) => {
                let rx = self.row(x, w, dfas)?;
                (0..n).map(|i| rx[w.succ(i)]).collect()
            }
            FormulaView::Until(a, b) => {
                let ra = self.row(a, w, dfas)?;
                let rb = self.row(b, w, dfas)?;
                fixpoint(n, w, false, |r, i| rb[i] || (ra[i] && r[w.succ(i)]))
            }
            FormulaView::Release(a, b) => {
                let ra = self.row(a, w, dfas)?;
                let rb = self.row(b, w, dfas)?;
                fixpoint(n, w, true, |r, i| rb[i] && (ra[i] || r[w.succ(i)]))
            }
            FormulaView::ExistsSuffix(r, x) => {
                let rx = self.row(x, w, dfas)?;
                let dfa = dfa_of(r, dfas)?;
                (0..n)
                    .map(|p| scan_matches(dfa, w, p).iter().any(|&j| rx[j]))
                    .collect()
            }
            FormulaView::ForallSuffix(r, x) => {
                let rx = self.row(x, w, dfas)?;
                let dfa = dfa_of(r, dfas)?;
                (0..n)
                    .map(|p| scan_matches(dfa, w, p).iter().all(|&j| rx[j]))
                    .collect()
            }
            FormulaView::WeakClosure(r) => {
                let dfa = dfa_of(r, dfas)?;
                (0..n).map(|p| weak_closure_at(dfa, w, p)).collect()
            }
            FormulaView::NegWeakClosure(r) => {
                let dfa = dfa_of(r, dfas)?;
                (0..n).map(|p| !weak_closure_at(dfa, w, p)).collect()
            }
            FormulaView::OmegaClosure(r) => {
                let dfa = dfa_of(r, dfas)?;
                omega_row(dfa, w)
            }
        };
        self.rows.insert(f.clone(), row.clone());
        Ok(row)
    }
}

/// `w |= f` by direct semantics.
pub fn eval(f: &Formula, w: &UpWord) -> Result<bool> {
    let table = EvalTable::build(f, w)?;
    Ok(table.truth(f, 0))
}

/// Evaluator that reuses the regex automata across many words.
#[derive(Default)]
pub struct Evaluator {
    dfas: HashMap<Regex, ScanDfa>,
}

impl Evaluator {
    pub fn new() -> Evaluator {
        Evaluator::default()
    }

    pub fn eval(&mut self, f: &Formula, w: &UpWord) -> Result<bool> {
        let table = EvalTable::build_cached(f, w, &mut self.dfas)?;
        Ok(table.truth(f, 0))
    }
}

fn dfa_of<'a>(r: &Regex, dfas: &'a mut HashMap<Regex, ScanDfa>) -> Result<&'a ScanDfa> {
    if !dfas.contains_key(r) {
        dfas.insert(r.clone(), ScanDfa::new(r)?);
    }
    Ok(&dfas[r])
}

fn fixpoint(
    n: usize,
    w: &UpWord,
    init: bool,
    step: impl Fn(&[bool], usize) -> bool,
) -> Vec<bool> {
    let mut row = vec![init; n];
    loop {
        let mut changed = false;
        for i in (0..n).rev() {
            let v = step(&row, i);
            if v != row[i] {
                row[i] = v;
                changed = true;
            }
        }
        if !changed {
            let _ = w;
            return row;
        }
    }
}

fn scan_bound(dfa: &ScanDfa, w: &UpWord) -> usize {
    w.period_end() * (dfa.state_count() + 1) + 1
}

/// Canonical end positions `j` such that the factor of the word from `p`
/// through `j` inclusive is in the regex language. A match `u . v[0]`
/// overlaps the first letter of the suffix at `j`.
fn scan_matches(dfa: &ScanDfa, w: &UpWord, p: usize) -> Vec<usize> {
    let mut hits = Vec::new();
    let mut seen = vec![false; w.period_end() * dfa.state_count()];
    let mut state = dfa.initial();
    let mut j = p;
    for _ in 0..scan_bound(dfa, w) {
        match dfa.step(state, w.letter(j)) {
            None => return hits,
            Some(t) => {
                state = t;
                if dfa.is_nullable(state) && !hits.contains(&j) {
                    hits.push(j);
                }
                let slot = j * dfa.state_count() + state;
                if seen[slot] {
                    return hits;
                }
                seen[slot] = true;
                j = w.succ(j);
            }
        }
    }
    hits
}

/// Weak closure at a position: some prefix (the empty one only when the
/// regex is nullable) is in the language, or every nonempty prefix is
/// extendable into it, i.e. every automaton state entered along the word
/// is alive.
fn weak_closure_at(dfa: &ScanDfa, w: &UpWord, p: usize) -> bool {
    if dfa.is_nullable(dfa.initial()) {
        return true;
    }
    let mut all_alive = true;
    let mut seen = vec![false; w.period_end() * dfa.state_count()];
    let mut state = dfa.initial();
    let mut j = p;
    for _ in 0..scan_bound(dfa, w) {
        match dfa.step(state, w.letter(j)) {
            None => return false, // this prefix has no extension and no later match
            Some(t) => {
                state = t;
                if dfa.is_nullable(state) {
                    return true;
                }
                if !dfa.is_alive(state) {
                    all_alive = false;
                }
                let slot = j * dfa.state_count() + state;
                if seen[slot] {
                    break;
                }
                seen[slot] = true;
                j = w.succ(j);
            }
        }
    }
    all_alive
}

/// Row for the omega-closure: position `p` satisfies it when the factor
/// graph (edges are nonempty factors in the regex language) has an
/// infinite path from `p`, i.e. `p` reaches a node on a cycle.
fn omega_row(dfa: &ScanDfa, w: &UpWord) -> Vec<bool> {
    let n = w.period_end();
    let mut edges: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (p, out) in edges.iter_mut().enumerate() {
        let mut state = dfa.initial();
        let mut j = p;
        let mut seen = vec![false; n * dfa.state_count()];
        for _ in 0..scan_bound(dfa, w) {
            match dfa.step(state, w.letter(j)) {
                None => break,
                Some(t) => {
                    state = t;
                    let end = w.succ(j); // factor covers positions p..=j
                    if dfa.is_nullable(state) && !out.contains(&end) {
                        out.push(end);
                    }
                    let slot = j * dfa.state_count() + state;
                    if seen[slot] {
                        break;
                    }
                    seen[slot] = true;
                    j = w.succ(j);
                }
            }
        }
    }
    let on_cycle: Vec<bool> = (0..n)
        .map(|c| reachable(&edges, &edges[c]).contains(&c))
        .collect();
    (0..n)
        .map(|p| {
            if on_cycle[p] {
                return true;
            }
            reachable(&edges, &edges[p]).iter().any(|&c| on_cycle[c])
        })
        .collect()
}

fn reachable(edges: &[Vec<usize>], starts: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; edges.len()];
    let mut stack: Vec<usize> = Vec::new();
    for &s in starts {
        if !seen[s] {
            seen[s] = true;
            stack.push(s);
        }
    }
    let mut out = Vec::new();
    while let Some(v) = stack.pop() {
        out.push(v);
        for &t in &edges[v] {
            if !seen[t] {
                seen[t] = true;
                stack.push(t);
            }
        }
    }
    out
}
