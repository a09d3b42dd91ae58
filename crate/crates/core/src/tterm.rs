//! Transition terms: nested if-then-else trees over an arbitrary leaf type.
//!
//! A term is either a leaf or an `ite` node with an algebra predicate as
//! condition. Lifted binary operations thread the accumulated branch
//! condition and drop branches whose path condition is unsatisfiable, so
//! their results are clean. The `ite` smart constructor applies condition
//! elimination (`ite(a, f, f) = f`) and flattening
//! (`ite(a, ite(b, f, g), g) = ite(a & b, f, g)` and its dual), which
//! together with the bottom/top laws of the leaf type yield the usual
//! if-then fusion identities.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{Letter, Pred};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Tt<L> {
    Leaf(L),
    Ite { cond: Pred, then: Arc<Tt<L>>, els: Arc<Tt<L>> },
}

impl<L: Clone + Eq> Tt<L> {
    pub fn leaf(value: L) -> Tt<L> {
        Tt::Leaf(value)
    }

    /// Normalizing constructor.
    pub fn ite(cond: Pred, then: Tt<L>, els: Tt<L>) -> Tt<L> {
        if cond.is_top() {
            return then;
        }
        if cond.is_bot() {
            return els;
        }
        if then == els {
            return then;
        }
        if let Tt::Ite { cond: c2, then: t2, els: e2 } = &then {
            if **e2 == els {
                return Tt::ite(cond.and(c2), (**t2).clone(), els);
            }
        }
        if let Tt::Ite { cond: c2, then: t2, els: e2 } = &els {
            if **t2 == then {
                return Tt::ite(cond.or(c2), then, (**e2).clone());
            }
        }
        Tt::Ite { cond, then: Arc::new(then), els: Arc::new(els) }
    }

    /// `ite(cond, f, bot)`.
    pub fn if_then(cond: Pred, then: Tt<L>, bot: L) -> Tt<L> {
        Tt::ite(cond, then, Tt::Leaf(bot))
    }

    /// The unique leaf reached by descending along `a`.
    pub fn leaf_of(&self, a: &Letter) -> &L {
        match self {
            Tt::Leaf(v) => v,
            Tt::Ite { cond, then, els } => {
                if cond.denotes(a) {
                    then.leaf_of(a)
                } else {
                    els.leaf_of(a)
                }
            }
        }
    }

    /// All conditions and leaves, deduplicated in first-visit order.
    pub fn collect(&self) -> (Vec<Pred>, Vec<L>) {
        let mut conds = Vec::new();
        let mut leaves = Vec::new();
        fn walk<L: Clone + Eq>(t: &Tt<L>, conds: &mut Vec<Pred>, leaves: &mut Vec<L>) {
            match t {
                Tt::Leaf(v) => {
                    if !leaves.contains(v) {
                        leaves.push(v.clone());
                    }
                }
                Tt::Ite { cond, then, els } => {
                    if !conds.contains(cond) {
                        conds.push(cond.clone());
                    }
                    walk(then, conds, leaves);
                    walk(els, conds, leaves);
                }
            }
        }
        walk(self, &mut conds, &mut leaves);
        (conds, leaves)
    }

    /// Pairs of accumulated branch condition and leaf, in path order.
    /// Conditions of a clean term are satisfiable by construction.
    pub fn guarded_leaves(&self, alg: &crate::algebra::Algebra) -> Vec<(Pred, &L)> {
        let mut out = Vec::new();
        fn walk<'a, L>(t: &'a Tt<L>, beta: Pred, out: &mut Vec<(Pred, &'a L)>) {
            match t {
                Tt::Leaf(v) => out.push((beta, v)),
                Tt::Ite { cond, then, els } => {
                    walk(then, beta.and(cond), out);
                    walk(els, beta.and(&cond.not()), out);
                }
            }
        }
        walk(self, alg.top(), &mut out);
        out
    }

    /// Restriction to `beta` (three-case recursion); `restrict(f, top)` is
    /// the cleaning of `f`.
    pub fn restrict(&self, beta: &Pred) -> Tt<L> {
        match self {
            Tt::Leaf(v) => Tt::Leaf(v.clone()),
            Tt::Ite { cond, then, els } => {
                let with = beta.and(cond);
                if !with.is_sat() {
                    return els.restrict(beta);
                }
                let without = beta.and(&cond.not());
                if !without.is_sat() {
                    return then.restrict(beta);
                }
                Tt::ite(cond.clone(), then.restrict(&with), els.restrict(&without))
            }
        }
    }

    /// True when no path has an unsatisfiable accumulated condition.
    pub fn is_clean(&self) -> bool {
        fn walk<L>(t: &Tt<L>, beta: &Pred) -> bool {
            match t {
                Tt::Leaf(_) => beta.is_sat(),
                Tt::Ite { cond, then, els } => {
                    walk(then, &beta.and(cond)) && walk(els, &beta.and(&cond.not()))
                }
            }
        }
        match self {
            Tt::Leaf(_) => true,
            Tt::Ite { cond, .. } => {
                let top = cond.algebra().top();
                walk(self, &top)
            }
        }
    }
}

/// Lift a binary leaf operation per the transition-term rules, splitting on
/// the left operand's condition first and cleaning incrementally along the
/// accumulated path condition.
pub fn lift_binary<L, M, O>(f: &Tt<L>, g: &Tt<M>, op: &impl Fn(&L, &M) -> O) -> Tt<O>
where
    L: Clone + Eq,
    M: Clone + Eq,
    O: Clone + Eq,
{
    fn branches(beta: Option<&Pred>, cond: &Pred) -> (Pred, Pred) {
        match beta {
            None => (cond.clone(), cond.not()),
            Some(b) => (b.and(cond), b.and(&cond.not())),
        }
    }
    fn go<L: Clone + Eq, M: Clone + Eq, O: Clone + Eq>(
        f: &Tt<L>,
        g: &Tt<M>,
        beta: Option<&Pred>,
        op: &impl Fn(&L, &M) -> O,
    ) -> Tt<O> {
        match (f, g) {
            (Tt::Leaf(x), Tt::Leaf(y)) => Tt::Leaf(op(x, y)),
            (Tt::Ite { cond, then, els }, _) => {
                let (bt, be) = branches(beta, cond);
                if !bt.is_sat() {
                    return go(els, g, beta, op);
                }
                if !be.is_sat() {
                    return go(then, g, beta, op);
                }
                Tt::ite(cond.clone(), go(then, g, Some(&bt), op), go(els, g, Some(&be), op))
            }
            (Tt::Leaf(_), Tt::Ite { cond, then, els }) => {
                let (bt, be) = branches(beta, cond);
                if !bt.is_sat() {
                    return go(f, els, beta, op);
                }
                if !be.is_sat() {
                    return go(f, then, beta, op);
                }
                Tt::ite(cond.clone(), go(f, then, Some(&bt), op), go(f, els, Some(&be), op))
            }
        }
    }
    go(f, g, None, op)
}

/// Lift a unary leaf operation; the branching structure is preserved up to
/// the normalizing constructor.
pub fn lift_unary<L, O>(f: &Tt<L>, op: &impl Fn(&L) -> O) -> Tt<O>
where
    L: Clone + Eq,
    O: Clone + Eq,
{
    match f {
        Tt::Leaf(x) => Tt::Leaf(op(x)),
        Tt::Ite { cond, then, els } => {
            Tt::ite(cond.clone(), lift_unary(then, op), lift_unary(els, op))
        }
    }
}

/// Replace each leaf by its disjunctive normal form.
pub fn to_inf<L, S>(f: &Tt<L>, dnf_of: &impl Fn(&L) -> Dnf<S>) -> Tt<Dnf<S>>
where
    L: Clone + Eq,
    S: Clone + Ord,
{
    lift_unary(f, dnf_of)
}

/// Functional equivalence of two terms under a leaf equality, decided by
/// satisfiability of joint path conditions rather than letter enumeration.
pub fn func_equiv<L, M>(f: &Tt<L>, g: &Tt<M>, leaf_eq: &impl Fn(&L, &M) -> bool) -> bool {
    fn split(beta: Option<&Pred>, cond: &Pred) -> (Pred, Pred) {
        match beta {
            None => (cond.clone(), cond.not()),
            Some(b) => (b.and(cond), b.and(&cond.not())),
        }
    }
    fn go<L, M>(
        f: &Tt<L>,
        g: &Tt<M>,
        beta: Option<&Pred>,
        leaf_eq: &impl Fn(&L, &M) -> bool,
    ) -> bool {
        match (f, g) {
            (Tt::Leaf(x), Tt::Leaf(y)) => leaf_eq(x, y),
            (Tt::Ite { cond, then, els }, _) => {
                let (bt, be) = split(beta, cond);
                (!bt.is_sat() || go(then, g, Some(&bt), leaf_eq))
                    && (!be.is_sat() || go(els, g, Some(&be), leaf_eq))
            }
            (Tt::Leaf(_), Tt::Ite { cond, then, els }) => {
                let (bt, be) = split(beta, cond);
                (!bt.is_sat() || go(f, then, Some(&bt), leaf_eq))
                    && (!be.is_sat() || go(f, els, Some(&be), leaf_eq))
            }
        }
    }
    go(f, g, None, leaf_eq)
}

/// Set-of-sets disjunctive normal form over `S`. The empty set denotes
/// bottom and `{{}}` denotes top.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dnf<S: Ord>(pub BTreeSet<BTreeSet<S>>);

impl<S: Clone + Ord> Dnf<S> {
    pub fn bot() -> Dnf<S> {
        Dnf(BTreeSet::new())
    }

    pub fn top() -> Dnf<S> {
        let mut outer = BTreeSet::new();
        outer.insert(BTreeSet::new());
        Dnf(outer)
    }

    pub fn unit(s: S) -> Dnf<S> {
        let mut inner = BTreeSet::new();
        inner.insert(s);
        let mut outer = BTreeSet::new();
        outer.insert(inner);
        Dnf(outer)
    }

    pub fn from_members<I: IntoIterator<Item = BTreeSet<S>>>(members: I) -> Dnf<S> {
        Dnf(members.into_iter().collect())
    }

    pub fn is_bot(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_top(&self) -> bool {
        self.0.len() == 1 && self.0.iter().next().unwrap().is_empty()
    }

    pub fn members(&self) -> impl Iterator<Item = &BTreeSet<S>> {
        self.0.iter()
    }

    pub fn or(&self, other: &Dnf<S>) -> Dnf<S> {
        Dnf(self.0.union(&other.0).cloned().collect())
    }

    pub fn and(&self, other: &Dnf<S>) -> Dnf<S> {
        let mut out = BTreeSet::new();
        for x in &self.0 {
            for y in &other.0 {
                out.insert(x.union(y).cloned().collect());
            }
        }
        Dnf(out)
    }

    /// The subset-minimal members (an antichain under inclusion).
    pub fn min_models(&self) -> Dnf<S> {
        let keep: BTreeSet<BTreeSet<S>> = self
            .0
            .iter()
            .filter(|z| !self.0.iter().any(|y| y.is_subset(z) && *y != **z))
            .cloned()
            .collect();
        Dnf(keep)
    }

    pub fn map<T: Clone + Ord>(&self, f: &impl Fn(&S) -> T) -> Dnf<T> {
        Dnf(self.0.iter().map(|x| x.iter().map(f).collect()).collect())
    }
}

impl<L: fmt::Display> fmt::Display for Tt<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tt::Leaf(v) => write!(f, "({v})"),
            Tt::Ite { cond, then, els } => {
                write!(f, "if {cond} then {then} else {els}")
            }
        }
    }
}

impl<S: Ord + fmt::Display> fmt::Display for Dnf<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "{{}}");
        }
        write!(f, "{{")?;
        for (i, member) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (j, s) in member.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{s}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}
