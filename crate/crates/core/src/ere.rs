//! Extended regular expressions modulo an effective Boolean algebra.
//!
//! Regexes are immutable trees built through normalizing constructors.
//! Union and intersection keep their operands as sorted, flattened,
//! deduplicated sets; concatenation is right-associated with epsilon as
//! unit and bottom as zero; double complement cancels and the complements
//! of bottom and epsilon rewrite to their closed forms. These rewrites make
//! the derivative closure finite. Nullability is computed once at
//! construction.
//!
//! The derivative of a regex is a transition term whose leaves are the
//! successor regexes; iterating the derivative over reachable leaves gives
//! a deterministic automaton over finite words.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{Algebra, Letter, Pred};
use crate::error::{Error, Result};
use crate::tterm::{lift_binary, lift_unary, Tt};

#[derive(Debug, Clone)]
pub struct Regex(Arc<RNode>);

#[derive(Debug)]
struct RNode {
    kind: RKind,
    nullable: bool,
    alg: Algebra,
    hash: u64,
}

impl PartialEq for Regex {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.hash == other.0.hash
                && self.0.kind == other.0.kind
                && self.0.alg == other.0.alg)
    }
}

impl Eq for Regex {}

impl std::hash::Hash for Regex {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        state.write_u64(self.0.hash);
    }
}

impl PartialOrd for Regex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Regex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return std::cmp::Ordering::Equal;
        }
        self.0.kind.cmp(&other.0.kind).then_with(|| self.0.alg.cmp(&other.0.alg))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum RKind {
    Pred(Pred),
    Eps,
    Union(Vec<Regex>),
    Inter(Vec<Regex>),
    Concat(Regex, Regex),
    Star(Regex),
    Compl(Regex),
    Fusion(Regex, Regex),
}

/// Structural view of a regex node, for consumers that interpret the
/// syntax directly (oracles, printers).
#[derive(Debug, Clone, Copy)]
pub enum RegexView<'a> {
    Pred(&'a Pred),
    Eps,
    Union(&'a [Regex]),
    Inter(&'a [Regex]),
    Concat(&'a Regex, &'a Regex),
    Star(&'a Regex),
    Compl(&'a Regex),
    Fusion(&'a Regex, &'a Regex),
}

impl Regex {
    pub fn view(&self) -> RegexView<'_> {
        match &self.0.kind {
            RKind::Pred(p) => RegexView::Pred(p),
            RKind::Eps => RegexView::Eps,
            RKind::Union(xs) => RegexView::Union(xs),
            RKind::Inter(xs) => RegexView::Inter(xs),
            RKind::Concat(a, b) => RegexView::Concat(a, b),
            RKind::Star(a) => RegexView::Star(a),
            RKind::Compl(a) => RegexView::Compl(a),
            RKind::Fusion(a, b) => RegexView::Fusion(a, b),
        }
    }

    fn new(alg: Algebra, kind: RKind) -> Regex {
        let nullable = match &kind {
            RKind::Pred(_) => false,
            RKind::Eps => true,
            RKind::Union(xs) => xs.iter().any(|x| x.nullable()),
            RKind::Inter(xs) => xs.iter().all(|x| x.nullable()),
            RKind::Concat(a, b) => a.nullable() && b.nullable(),
            RKind::Star(_) => true,
            RKind::Compl(a) => !a.nullable(),
            RKind::Fusion(_, _) => false,
        };
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        kind.hash(&mut h);
        alg.hash(&mut h);
        let hash = h.finish();
        Regex(Arc::new(RNode { kind, nullable, alg, hash }))
    }

    pub fn algebra(&self) -> &Algebra {
        &self.0.alg
    }

    pub fn nullable(&self) -> bool {
        self.0.nullable
    }

    pub fn pred(p: Pred) -> Regex {
        let alg = p.algebra().clone();
        Regex::new(alg, RKind::Pred(p))
    }

    pub fn eps(alg: &Algebra) -> Regex {
        Regex::new(alg.clone(), RKind::Eps)
    }

    pub fn bot(alg: &Algebra) -> Regex {
        Regex::pred(alg.bot())
    }

    /// `T*`, the universal language over finite words.
    pub fn top_star(alg: &Algebra) -> Regex {
        Regex::star(&Regex::pred(alg.top()))
    }

    pub fn is_bot(&self) -> bool {
        matches!(&self.0.kind, RKind::Pred(p) if p.is_bot())
    }

    pub fn is_eps(&self) -> bool {
        matches!(&self.0.kind, RKind::Eps)
    }

    fn is_top_star(&self) -> bool {
        matches!(&self.0.kind, RKind::Star(inner)
            if matches!(&inner.0.kind, RKind::Pred(p) if p.is_top()))
    }

    pub fn union(a: &Regex, b: &Regex) -> Regex {
        let alg = a.algebra().clone();
        let mut ops: Vec<Regex> = Vec::new();
        for side in [a, b] {
            match &side.0.kind {
                RKind::Union(xs) => ops.extend(xs.iter().cloned()),
                _ => ops.push(side.clone()),
            }
        }
        if ops.iter().any(|r| r.is_top_star()) {
            return Regex::top_star(&alg);
        }
        ops.retain(|r| !r.is_bot());
        ops.sort();
        ops.dedup();
        match ops.len() {
            0 => Regex::bot(&alg),
            1 => ops.pop().unwrap(),
            _ => Regex::new(alg, RKind::Union(ops)),
        }
    }

    pub fn inter(a: &Regex, b: &Regex) -> Regex {
        let alg = a.algebra().clone();
        let mut ops: Vec<Regex> = Vec::new();
        for side in [a, b] {
            match &side.0.kind {
                RKind::Inter(xs) => ops.extend(xs.iter().cloned()),
                _ => ops.push(side.clone()),
            }
        }
        if ops.iter().any(|r| r.is_bot()) {
            return Regex::bot(&alg);
        }
        ops.retain(|r| !r.is_top_star());
        ops.sort();
        ops.dedup();
        match ops.len() {
            0 => Regex::top_star(&alg),
            1 => ops.pop().unwrap(),
            _ => Regex::new(alg, RKind::Inter(ops)),
        }
    }

    pub fn concat(a: &Regex, b: &Regex) -> Regex {
        if a.is_bot() || b.is_bot() {
            return Regex::bot(a.algebra());
        }
        if a.is_eps() {
            return b.clone();
        }
        if b.is_eps() {
            return a.clone();
        }
        if let RKind::Concat(x, y) = &a.0.kind {
            return Regex::concat(x, &Regex::concat(y, b));
        }
        Regex::new(a.algebra().clone(), RKind::Concat(a.clone(), b.clone()))
    }

    pub fn star(r: &Regex) -> Regex {
        Regex::new(r.algebra().clone(), RKind::Star(r.clone()))
    }

    /// `R+ = R . R*`
    pub fn plus(r: &Regex) -> Regex {
        Regex::concat(r, &Regex::star(r))
    }

    fn is_top_plus(&self) -> bool {
        matches!(&self.0.kind, RKind::Concat(a, b)
            if matches!(&a.0.kind, RKind::Pred(p) if p.is_top()) && b.is_top_star())
    }

    pub fn compl(r: &Regex) -> Regex {
        if let RKind::Compl(inner) = &r.0.kind {
            return inner.clone();
        }
        // bottom, epsilon and their complements swap pairwise, keeping
        // double complement an involution
        if r.is_bot() {
            return Regex::top_star(r.algebra());
        }
        if r.is_top_star() {
            return Regex::bot(r.algebra());
        }
        if r.is_eps() {
            // ~eps = T . T*
            return Regex::concat(&Regex::pred(r.algebra().top()), &Regex::top_star(r.algebra()));
        }
        if r.is_top_plus() {
            return Regex::eps(r.algebra());
        }
        Regex::new(r.algebra().clone(), RKind::Compl(r.clone()))
    }

    /// Fusion: words of `a` and `b` overlapping in one letter.
    pub fn fusion(a: &Regex, b: &Regex) -> Regex {
        if a.is_eps() || a.is_bot() || b.is_bot() {
            return Regex::bot(a.algebra());
        }
        Regex::new(a.algebra().clone(), RKind::Fusion(a.clone(), b.clone()))
    }

    /// Transition regex: the symbolic derivative of `self`.
    pub fn der(&self) -> Tt<Regex> {
        let alg = self.algebra();
        match &self.0.kind {
            RKind::Pred(p) => {
                Tt::if_then(p.clone(), Tt::leaf(Regex::eps(alg)), Regex::bot(alg))
            }
            RKind::Eps => Tt::leaf(Regex::bot(alg)),
            RKind::Union(xs) => {
                let mut terms = xs.iter().map(|x| x.der());
                let first = terms.next().unwrap();
                terms.fold(first, |acc, t| lift_binary(&acc, &t, &|a, b| Regex::union(a, b)))
            }
            RKind::Inter(xs) => {
                let mut terms = xs.iter().map(|x| x.der());
                let first = terms.next().unwrap();
                terms.fold(first, |acc, t| lift_binary(&acc, &t, &|a, b| Regex::inter(a, b)))
            }
            RKind::Concat(a, b) => {
                let da_b = lift_unary(&a.der(), &|x| Regex::concat(x, b));
                if a.nullable() {
                    lift_binary(&da_b, &b.der(), &|x, y| Regex::union(x, y))
                } else {
                    da_b
                }
            }
            RKind::Star(a) => lift_unary(&a.der(), &|x| Regex::concat(x, self)),
            RKind::Compl(a) => lift_unary(&a.der(), &|x| Regex::compl(x)),
            RKind::Fusion(a, b) => {
                let head = Tt::if_then(a.one(), b.der(), Regex::bot(alg));
                let tail = lift_unary(&a.der(), &|x| Regex::fusion(x, b));
                lift_binary(&head, &tail, &|x, y| Regex::union(x, y))
            }
        }
    }

    /// The predicate denoting the length-one words of `self`.
    pub fn one(&self) -> Pred {
        fn go(t: &Tt<Regex>, beta: Pred) -> Pred {
            match t {
                Tt::Leaf(r) => {
                    if r.nullable() {
                        beta
                    } else {
                        beta.algebra().bot()
                    }
                }
                Tt::Ite { cond, then, els } => {
                    go(then, beta.and(cond)).or(&go(els, beta.and(&cond.not())))
                }
            }
        }
        go(&self.der(), self.algebra().top())
    }

    /// Finite-word membership by iterated derivatives.
    pub fn matches(&self, word: &[Letter]) -> Result<bool> {
        for a in word {
            self.algebra().check_letter(a)?;
        }
        let mut r = self.clone();
        for a in word {
            r = r.der().leaf_of(a).clone();
        }
        Ok(r.nullable())
    }

    fn is_plus(&self) -> bool {
        matches!(&self.0.kind, RKind::Concat(a, b)
            if matches!(&b.0.kind, RKind::Star(inner) if inner == a))
    }

    fn prec(&self) -> u8 {
        // union 0, inter 1, concat/fusion 2, star/plus 3, compl 4, atom 5
        match &self.0.kind {
            RKind::Union(_) => 0,
            RKind::Inter(_) => 1,
            RKind::Concat(_, _) => {
                if self.is_plus() {
                    3
                } else {
                    2
                }
            }
            RKind::Fusion(_, _) => 2,
            RKind::Star(_) => 3,
            RKind::Compl(_) => 4,
            RKind::Pred(_) | RKind::Eps => 5,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, level: u8) -> fmt::Result {
        if self.prec() < level {
            write!(f, "(")?;
            self.fmt_inner(f)?;
            write!(f, ")")
        } else {
            self.fmt_inner(f)
        }
    }

    fn fmt_inner(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.kind {
            RKind::Pred(p) => p.fmt_prec(f, 3),
            RKind::Eps => write!(f, "()"),
            RKind::Union(xs) => {
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " | ")?;
                    }
                    x.fmt_prec(f, 1)?;
                }
                Ok(())
            }
            RKind::Inter(xs) => {
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " && ")?;
                    }
                    x.fmt_prec(f, 2)?;
                }
                Ok(())
            }
            RKind::Concat(a, b) => {
                if self.is_plus() {
                    a.fmt_prec(f, 4)?;
                    return write!(f, "+");
                }
                a.fmt_prec(f, 3)?;
                write!(f, " ; ")?;
                b.fmt_prec(f, 2)
            }
            RKind::Star(a) => {
                a.fmt_prec(f, 4)?;
                write!(f, "*")
            }
            RKind::Compl(a) => {
                write!(f, "~")?;
                a.fmt_prec(f, 5)
            }
            RKind::Fusion(a, b) => {
                a.fmt_prec(f, 3)?;
                write!(f, " : ")?;
                b.fmt_prec(f, 2)
            }
        }
    }
}

impl fmt::Display for Regex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_inner(f)
    }
}

/// Deterministic automaton over finite words obtained by derivative closure.
///
/// The canonical bottom regex is not materialized as a state: a `None`
/// target rejects, matching the convention of omitting transitions to the
/// empty language.
#[derive(Debug, Clone)]
pub struct RegexDfa {
    alg: Algebra,
    states: Vec<Regex>,
    delta: Vec<Tt<Option<usize>>>,
    nullable: Vec<bool>,
    alive: Vec<bool>,
}

pub const DEFAULT_STATE_CAP: usize = 50_000;

impl RegexDfa {
    pub fn build(r: &Regex) -> Result<RegexDfa> {
        RegexDfa::build_capped(r, DEFAULT_STATE_CAP)
    }

    pub fn build_capped(r: &Regex, cap: usize) -> Result<RegexDfa> {
        let alg = r.algebra().clone();
        let mut states: Vec<Regex> = vec![r.clone()];
        let mut index: HashMap<Regex, usize> = HashMap::new();
        index.insert(r.clone(), 0);
        let mut delta: Vec<Tt<Option<usize>>> = Vec::new();
        let mut next = 0;
        while next < states.len() {
            let q = states[next].clone();
            let d = q.der();
            let (_, leaves) = d.collect();
            for leaf in leaves {
                if leaf.is_bot() || index.contains_key(&leaf) {
                    continue;
                }
                if states.len() >= cap {
                    return Err(Error::StateCap(cap));
                }
                index.insert(leaf.clone(), states.len());
                states.push(leaf);
            }
            delta.push(lift_unary(&d, &|leaf: &Regex| {
                if leaf.is_bot() {
                    None
                } else {
                    Some(index[leaf])
                }
            }));
            next += 1;
        }
        let nullable: Vec<bool> = states.iter().map(|s| s.nullable()).collect();
        let alive = compute_alive(&delta, &nullable);
        Ok(RegexDfa { alg, states, delta, nullable, alive })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn initial(&self) -> usize {
        0
    }

    pub fn state(&self, q: usize) -> &Regex {
        &self.states[q]
    }

    pub fn delta(&self, q: usize) -> &Tt<Option<usize>> {
        &self.delta[q]
    }

    pub fn is_nullable(&self, q: usize) -> bool {
        self.nullable[q]
    }

    /// A state is alive when some word is accepted from it.
    pub fn is_alive(&self, q: usize) -> bool {
        self.alive[q]
    }

    /// Successor state, or `None` when the letter leads to the empty
    /// language.
    pub fn step(&self, q: usize, a: &Letter) -> Option<usize> {
        *self.delta[q].leaf_of(a)
    }

    /// Membership via the automaton; agrees with [`Regex::matches`].
    pub fn accepts(&self, word: &[Letter]) -> Result<bool> {
        for a in word {
            self.alg.check_letter(a)?;
        }
        let mut q = 0;
        for a in word {
            match self.step(q, a) {
                Some(t) => q = t,
                None => return Ok(false),
            }
        }
        Ok(self.nullable[q])
    }
}

fn compute_alive(delta: &[Tt<Option<usize>>], nullable: &[bool]) -> Vec<bool> {
    let n = delta.len();
    let mut rev: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (q, d) in delta.iter().enumerate() {
        let (_, leaves) = d.collect();
        for t in leaves.into_iter().flatten() {
            rev[t].push(q);
        }
    }
    let mut alive = nullable.to_vec();
    let mut stack: Vec<usize> = (0..n).filter(|&q| alive[q]).collect();
    while let Some(q) = stack.pop() {
        for &p in &rev[q] {
            if !alive[p] {
                alive[p] = true;
                stack.push(p);
            }
        }
    }
    alive
}
