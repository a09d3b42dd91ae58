//! Temporal formulas modulo an effective Boolean algebra: LTL extended
//! with regular-expression suffix implications and closures.
//!
//! Formulas are immutable trees with normalizing constructors: conjunction
//! and disjunction keep sorted flattened operand sets with unit/zero laws,
//! Boolean combinations of predicates collapse into a single predicate,
//! double negation cancels, and the closure/suffix operators apply their
//! base rewrites (a bottom or epsilon regex trivializes a suffix
//! implication, a nullable regex trivializes a weak closure).
//!
//! The symbolic derivative of a formula is a transition term over successor
//! formulas. Closing the derivative over reachable states yields an
//! alternating Büchi automaton whose leaves are state DNFs.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{Algebra, Pred};
use crate::automata::{Aba, StateId};
use crate::ere::{Regex, RegexDfa};
use crate::error::{Error, Result};
use crate::tterm::{lift_binary, lift_unary, Dnf, Tt};

#[derive(Debug, Clone)]
pub struct Formula(Arc<FNode>);

#[derive(Debug)]
struct FNode {
    kind: FKind,
    alg: Algebra,
    hash: u64,
}

impl PartialEq for Formula {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.hash == other.0.hash
                && self.0.kind == other.0.kind
                && self.0.alg == other.0.alg)
    }
}

impl Eq for Formula {}

impl std::hash::Hash for Formula {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        state.write_u64(self.0.hash);
    }
}

impl PartialOrd for Formula {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Formula {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return std::cmp::Ordering::Equal;
        }
        self.0.kind.cmp(&other.0.kind).then_with(|| self.0.alg.cmp(&other.0.alg))
    }
}

// Release precedes Until so that Globally-formulas sort ahead of
// Until-formulas inside conjunction sets; the operand order is the
// canonical structural key and fixes the branch order of derivatives.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum FKind {
    Pred(Pred),
    Not(Formula),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Next(Formula),
    Release(Formula, Formula),
    Until(Formula, Formula),
    ExistsSuffix(Regex, Formula),
    ForallSuffix(Regex, Formula),
    WeakClosure(Regex),
    NegWeakClosure(Regex),
    OmegaClosure(Regex),
}

/// Structural view of a formula node, for consumers that interpret the
/// syntax directly (oracles, printers).
#[derive(Debug, Clone, Copy)]
pub enum FormulaView<'a> {
    Pred(&'a Pred),
    Not(&'a Formula),
    And(&'a [Formula]),
    Or(&'a [Formula]),
    Next(&'a Formula),
    Until(&'a Formula, &'a Formula),
    Release(&'a Formula, &'a Formula),
    ExistsSuffix(&'a Regex, &'a Formula),
    ForallSuffix(&'a Regex, &'a Formula),
    WeakClosure(&'a Regex),
    NegWeakClosure(&'a Regex),
    OmegaClosure(&'a Regex),
}

impl Formula {
    pub fn view(&self) -> FormulaView<'_> {
        match &self.0.kind {
            FKind::Pred(p) => FormulaView::Pred(p),
            FKind::Not(x) => FormulaView::Not(x),
            FKind::And(xs) => FormulaView::And(xs),
            FKind::Or(xs) => FormulaView::Or(xs),
            FKind::Next(x) => FormulaView::Next(x),
            FKind::Until(a, b) => FormulaView::Until(a, b),
            FKind::Release(a, b) => FormulaView::Release(a, b),
            FKind::ExistsSuffix(r, x) => FormulaView::ExistsSuffix(r, x),
            FKind::ForallSuffix(r, x) => FormulaView::ForallSuffix(r, x),
            FKind::WeakClosure(r) => FormulaView::WeakClosure(r),
            FKind::NegWeakClosure(r) => FormulaView::NegWeakClosure(r),
            FKind::OmegaClosure(r) => FormulaView::OmegaClosure(r),
        }
    }

    fn new(alg: Algebra, kind: FKind) -> Formula {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        kind.hash(&mut h);
        alg.hash(&mut h);
        let hash = h.finish();
        Formula(Arc::new(FNode { kind, alg, hash }))
    }

    pub fn algebra(&self) -> &Algebra {
        &self.0.alg
    }

    pub fn pred(p: Pred) -> Formula {
        let alg = p.algebra().clone();
        Formula::new(alg, FKind::Pred(p))
    }

    pub fn tt(alg: &Algebra) -> Formula {
        Formula::pred(alg.top())
    }

    pub fn ff(alg: &Algebra) -> Formula {
        Formula::pred(alg.bot())
    }

    pub fn is_tt(&self) -> bool {
        matches!(&self.0.kind, FKind::Pred(p) if p.is_top())
    }

    pub fn is_ff(&self) -> bool {
        matches!(&self.0.kind, FKind::Pred(p) if p.is_bot())
    }

    pub fn not(f: &Formula) -> Formula {
        match &f.0.kind {
            FKind::Pred(p) => Formula::pred(p.not()),
            FKind::Not(inner) => inner.clone(),
            _ => Formula::new(f.0.alg.clone(), FKind::Not(f.clone())),
        }
    }

    pub fn and(a: &Formula, b: &Formula) -> Formula {
        let alg = a.0.alg.clone();
        let mut pred_part = alg.top();
        let mut ops: Vec<Formula> = Vec::new();
        let push = |f: &Formula, pred_part: &mut Pred, ops: &mut Vec<Formula>| {
            match &f.0.kind {
                FKind::And(xs) => {
                    for x in xs {
                        match &x.0.kind {
                            FKind::Pred(p) => *pred_part = pred_part.and(p),
                            _ => ops.push(x.clone()),
                        }
                    }
                }
                FKind::Pred(p) => *pred_part = pred_part.and(p),
                _ => ops.push(f.clone()),
            }
        };
        push(a, &mut pred_part, &mut ops);
        push(b, &mut pred_part, &mut ops);
        if pred_part.is_bot() {
            return Formula::ff(&alg);
        }
        if !pred_part.is_top() {
            ops.push(Formula::pred(pred_part));
        }
        ops.sort();
        ops.dedup();
        match ops.len() {
            0 => Formula::tt(&alg),
            1 => ops.pop().unwrap(),
            _ => Formula::new(alg, FKind::And(ops)),
        }
    }

    pub fn or(a: &Formula, b: &Formula) -> Formula {
        let alg = a.0.alg.clone();
        let mut pred_part = alg.bot();
        let mut ops: Vec<Formula> = Vec::new();
        let push = |f: &Formula, pred_part: &mut Pred, ops: &mut Vec<Formula>| {
            match &f.0.kind {
                FKind::Or(xs) => {
                    for x in xs {
                        match &x.0.kind {
                            FKind::Pred(p) => *pred_part = pred_part.or(p),
                            _ => ops.push(x.clone()),
                        }
                    }
                }
                FKind::Pred(p) => *pred_part = pred_part.or(p),
                _ => ops.push(f.clone()),
            }
        };
        push(a, &mut pred_part, &mut ops);
        push(b, &mut pred_part, &mut ops);
        if pred_part.is_top() {
            return Formula::tt(&alg);
        }
        if !pred_part.is_bot() {
            ops.push(Formula::pred(pred_part));
        }
        ops.sort();
        ops.dedup();
        match ops.len() {
            0 => Formula::ff(&alg),
            1 => ops.pop().unwrap(),
            _ => Formula::new(alg, FKind::Or(ops)),
        }
    }

    pub fn implies(a: &Formula, b: &Formula) -> Formula {
        Formula::or(&Formula::not(a), b)
    }

    pub fn next(f: &Formula) -> Formula {
        Formula::new(f.0.alg.clone(), FKind::Next(f.clone()))
    }

    pub fn until(a: &Formula, b: &Formula) -> Formula {
        Formula::new(a.0.alg.clone(), FKind::Until(a.clone(), b.clone()))
    }

    pub fn release(a: &Formula, b: &Formula) -> Formula {
        Formula::new(a.0.alg.clone(), FKind::Release(a.clone(), b.clone()))
    }

    /// `F f = true U f`
    pub fn finally(f: &Formula) -> Formula {
        Formula::until(&Formula::tt(&f.0.alg), f)
    }

    /// `G f = false R f`
    pub fn globally(f: &Formula) -> Formula {
        Formula::release(&Formula::ff(&f.0.alg), f)
    }

    pub fn exists_suffix(r: &Regex, f: &Formula) -> Formula {
        if r.is_bot() || r.is_eps() {
            return Formula::ff(&f.0.alg);
        }
        Formula::new(f.0.alg.clone(), FKind::ExistsSuffix(r.clone(), f.clone()))
    }

    pub fn forall_suffix(r: &Regex, f: &Formula) -> Formula {
        if r.is_bot() || r.is_eps() {
            return Formula::tt(&f.0.alg);
        }
        Formula::new(f.0.alg.clone(), FKind::ForallSuffix(r.clone(), f.clone()))
    }

    pub fn weak_closure(r: &Regex) -> Formula {
        let alg = r.algebra().clone();
        if r.is_bot() {
            return Formula::ff(&alg);
        }
        if r.nullable() {
            return Formula::tt(&alg);
        }
        Formula::new(alg, FKind::WeakClosure(r.clone()))
    }

    pub fn neg_weak_closure(r: &Regex) -> Formula {
        let alg = r.algebra().clone();
        if r.is_bot() {
            return Formula::tt(&alg);
        }
        if r.nullable() {
            return Formula::ff(&alg);
        }
        Formula::new(alg, FKind::NegWeakClosure(r.clone()))
    }

    pub fn omega_closure(r: &Regex) -> Formula {
        Formula::new(r.algebra().clone(), FKind::OmegaClosure(r.clone()))
    }

    pub fn is_positive(&self) -> bool {
        match &self.0.kind {
            FKind::Pred(_) => true,
            FKind::Not(_) => false,
            FKind::And(xs) | FKind::Or(xs) => xs.iter().all(|x| x.is_positive()),
            FKind::Next(x) => x.is_positive(),
            FKind::Until(a, b) | FKind::Release(a, b) => a.is_positive() && b.is_positive(),
            FKind::ExistsSuffix(_, x) | FKind::ForallSuffix(_, x) => x.is_positive(),
            FKind::WeakClosure(_) | FKind::NegWeakClosure(_) | FKind::OmegaClosure(_) => true,
        }
    }

    /// Negation normal form: negation is pushed through the connectives
    /// into the algebra. Negated omega-closure has no positive form and is
    /// rejected.
    pub fn to_positive(&self) -> Result<Formula> {
        match &self.0.kind {
            FKind::Pred(_) => Ok(self.clone()),
            FKind::And(xs) => {
                let mut acc = Formula::tt(&self.0.alg);
                for x in xs {
                    acc = Formula::and(&acc, &x.to_positive()?);
                }
                Ok(acc)
            }
            FKind::Or(xs) => {
                let mut acc = Formula::ff(&self.0.alg);
                for x in xs {
                    acc = Formula::or(&acc, &x.to_positive()?);
                }
                Ok(acc)
            }
            FKind::Next(x) => Ok(Formula::next(&x.to_positive()?)),
            FKind::Until(a, b) => Ok(Formula::until(&a.to_positive()?, &b.to_positive()?)),
            FKind::Release(a, b) => Ok(Formula::release(&a.to_positive()?, &b.to_positive()?)),
            FKind::ExistsSuffix(r, x) => Ok(Formula::exists_suffix(r, &x.to_positive()?)),
            FKind::ForallSuffix(r, x) => Ok(Formula::forall_suffix(r, &x.to_positive()?)),
            FKind::WeakClosure(_) | FKind::NegWeakClosure(_) | FKind::OmegaClosure(_) => {
                Ok(self.clone())
            }
            FKind::Not(inner) => match &inner.0.kind {
                // predicate and double negation are handled by `not`
                FKind::Pred(_) | FKind::Not(_) => unreachable!("collapsed at construction"),
                FKind::And(xs) => {
                    let mut acc = Formula::ff(&self.0.alg);
                    for x in xs {
                        acc = Formula::or(&acc, &Formula::not(x).to_positive()?);
                    }
                    Ok(acc)
                }
                FKind::Or(xs) => {
                    let mut acc = Formula::tt(&self.0.alg);
                    for x in xs {
                        acc = Formula::and(&acc, &Formula::not(x).to_positive()?);
                    }
                    Ok(acc)
                }
                FKind::Next(x) => Ok(Formula::next(&Formula::not(x).to_positive()?)),
                FKind::Until(a, b) => Ok(Formula::release(
                    &Formula::not(a).to_positive()?,
                    &Formula::not(b).to_positive()?,
                )),
                FKind::Release(a, b) => Ok(Formula::until(
                    &Formula::not(a).to_positive()?,
                    &Formula::not(b).to_positive()?,
                )),
                FKind::ExistsSuffix(r, x) => {
                    Ok(Formula::forall_suffix(r, &Formula::not(x).to_positive()?))
                }
                FKind::ForallSuffix(r, x) => {
                    Ok(Formula::exists_suffix(r, &Formula::not(x).to_positive()?))
                }
                FKind::WeakClosure(r) => Ok(Formula::neg_weak_closure(r)),
                FKind::NegWeakClosure(r) => Ok(Formula::weak_closure(r)),
                FKind::OmegaClosure(_) => Err(Error::PositiveFragment(
                    "!omega{R} is not permitted in the positive fragment".into(),
                )),
            },
        }
    }

    /// One-step symbolic derivative with a fresh memo table.
    pub fn deriv(&self) -> Tt<Formula> {
        Deriver::new().deriv(self)
    }

    fn prec(&self) -> u8 {
        // temporal 0, implication 1, or 2, and 3, unary 4, atom 5
        match &self.0.kind {
            FKind::Until(a, _) if a.is_tt() => 4,
            FKind::Release(a, _) if a.is_ff() => 4,
            FKind::Until(_, _) | FKind::Release(_, _) => 0,
            FKind::ExistsSuffix(_, _) | FKind::ForallSuffix(_, _) => 0,
            FKind::Or(_) => 2,
            FKind::And(_) => 3,
            FKind::Not(_) | FKind::Next(_) => 4,
            FKind::WeakClosure(_) | FKind::NegWeakClosure(_) | FKind::OmegaClosure(_) => 5,
            FKind::Pred(p) => {
                if p.is_bot() || p.is_top() {
                    5
                } else {
                    4 // delegates to the predicate's own precedence
                }
            }
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, level: u8) -> fmt::Result {
        match &self.0.kind {
            // predicates carry their own precedence on the shared ladder
            FKind::Pred(p) => return p.fmt_prec(f, level),
            _ => {}
        }
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
            FKind::Pred(p) => write!(f, "{p}"),
            FKind::Not(x) => {
                write!(f, "!")?;
                x.fmt_prec(f, 5)
            }
            FKind::And(xs) => {
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " & ")?;
                    }
                    x.fmt_prec(f, 4)?;
                }
                Ok(())
            }
            FKind::Or(xs) => {
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " | ")?;
                    }
                    x.fmt_prec(f, 3)?;
                }
                Ok(())
            }
            FKind::Next(x) => {
                write!(f, "X ")?;
                x.fmt_prec(f, 4)
            }
            FKind::Until(a, b) if a.is_tt() => {
                write!(f, "F ")?;
                b.fmt_prec(f, 4)
            }
            FKind::Release(a, b) if a.is_ff() => {
                write!(f, "G ")?;
                b.fmt_prec(f, 4)
            }
            FKind::Until(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " U ")?;
                b.fmt_prec(f, 0)
            }
            FKind::Release(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " R ")?;
                b.fmt_prec(f, 0)
            }
            FKind::ExistsSuffix(r, x) => {
                write!(f, "{{{r}}} <>-> ")?;
                x.fmt_prec(f, 0)
            }
            FKind::ForallSuffix(r, x) => {
                write!(f, "{{{r}}} []-> ")?;
                x.fmt_prec(f, 0)
            }
            FKind::WeakClosure(r) => write!(f, "cl{{{r}}}"),
            FKind::NegWeakClosure(r) => write!(f, "ncl{{{r}}}"),
            FKind::OmegaClosure(r) => write!(f, "omega{{{r}}}"),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_inner(f)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct DerivOptions {
    /// Drop a conjunct that also occurs under an enclosing
    /// Globally-conjunction before deriving; the derivative is unchanged.
    pub subsumption: bool,
}

/// Derivative engine with per-node memoization and a cache of regex
/// liveness used for the acceptance classification of closure states.
pub struct Deriver {
    opts: DerivOptions,
    memo: HashMap<Formula, Tt<Formula>>,
    alive: HashMap<Regex, bool>,
}

impl Default for Deriver {
    fn default() -> Self {
        Self::new()
    }
}

impl Deriver {
    pub fn new() -> Deriver {
        Deriver::with_options(DerivOptions::default())
    }

    pub fn with_options(opts: DerivOptions) -> Deriver {
        Deriver { opts, memo: HashMap::new(), alive: HashMap::new() }
    }

    pub fn deriv(&mut self, f: &Formula) -> Tt<Formula> {
        if let Some(t) = self.memo.get(f) {
            return t.clone();
        }
        let t = self.deriv_uncached(f);
        self.memo.insert(f.clone(), t.clone());
        t
    }

    fn deriv_uncached(&mut self, f: &Formula) -> Tt<Formula> {
        let alg = f.algebra().clone();
        match &f.0.kind {
            FKind::Pred(p) => {
                Tt::if_then(p.clone(), Tt::leaf(Formula::tt(&alg)), Formula::ff(&alg))
            }
            FKind::Not(x) => lift_unary(&self.deriv(x), &|l| Formula::not(l)),
            FKind::And(xs) => {
                let ops = if self.opts.subsumption { subsume(xs) } else { xs.clone() };
                let mut terms = ops.iter().map(|x| self.deriv(x)).collect::<Vec<_>>().into_iter();
                let first = terms.next().unwrap();
                terms.fold(first, |acc, t| lift_binary(&acc, &t, &|a, b| Formula::and(a, b)))
            }
            FKind::Or(xs) => {
                let mut terms = xs.iter().map(|x| self.deriv(x)).collect::<Vec<_>>().into_iter();
                let first = terms.next().unwrap();
                terms.fold(first, |acc, t| lift_binary(&acc, &t, &|a, b| Formula::or(a, b)))
            }
            FKind::Next(x) => Tt::leaf(x.clone()),
            FKind::Until(a, b) => {
                let da = self.deriv(a);
                let db = self.deriv(b);
                let keep = lift_binary(&da, &Tt::leaf(f.clone()), &|x, y| Formula::and(x, y));
                lift_binary(&db, &keep, &|x, y| Formula::or(x, y))
            }
            FKind::Release(a, b) => {
                let da = self.deriv(a);
                let db = self.deriv(b);
                let keep = lift_binary(&da, &Tt::leaf(f.clone()), &|x, y| Formula::or(x, y))
;
                lift_binary(&db, &keep, &|x, y| Formula::and(x, y))
            }
            FKind::ExistsSuffix(r, x) => {
                let now = Formula::and(&Formula::pred(r.one()), x);
                let dnow = self.deriv(&now);
                let rest = lift_unary(&r.der(), &|s| Formula::exists_suffix(s, x));
                lift_binary(&dnow, &rest, &|a, b| Formula::or(a, b))
            }
            FKind::ForallSuffix(r, x) => {
                let now = Formula::or(&Formula::pred(r.one().not()), x);
                let dnow = self.deriv(&now);
                let rest = lift_unary(&r.der(), &|s| Formula::forall_suffix(s, x));
                lift_binary(&dnow, &rest, &|a, b| Formula::and(a, b))
            }
            FKind::WeakClosure(r) => lift_unary(&r.der(), &|s| Formula::weak_closure(s)),
            FKind::NegWeakClosure(r) => {
                lift_unary(&r.der(), &|s| Formula::neg_weak_closure(s))
            }
            FKind::OmegaClosure(r) => {
                let unfolded = Formula::exists_suffix(r, &Formula::next(f));
                self.deriv(&unfolded)
            }
        }
    }

    /// Liveness of a regex, shared across all states of its derivative
    /// closure.
    pub fn regex_alive(&mut self, r: &Regex) -> Result<bool> {
        if let Some(&b) = self.alive.get(r) {
            return Ok(b);
        }
        let dfa = RegexDfa::build(r)?;
        for q in 0..dfa.state_count() {
            self.alive.insert(dfa.state(q).clone(), dfa.is_alive(q));
        }
        Ok(self.alive[r])
    }

    /// Büchi acceptance classification of a state formula.
    pub fn is_accepting(&mut self, f: &Formula) -> Result<bool> {
        Ok(match &f.0.kind {
            FKind::Pred(p) => p.is_top(),
            FKind::Release(_, _) => true,
            FKind::ForallSuffix(_, _) => true,
            FKind::OmegaClosure(_) => true,
            FKind::WeakClosure(r) => self.regex_alive(r)?,
            FKind::NegWeakClosure(r) => !self.regex_alive(r)?,
            _ => false,
        })
    }
}

fn subsume(xs: &[Formula]) -> Vec<Formula> {
    let covered_by = |x: &Formula, g: &Formula| -> bool {
        if let FKind::Release(lhs, body) = &g.0.kind {
            if lhs.is_ff() {
                if body == x {
                    return true;
                }
                if let FKind::And(ys) = &body.0.kind {
                    return ys.contains(x);
                }
            }
        }
        false
    };
    let kept: Vec<Formula> = xs
        .iter()
        .filter(|x| !xs.iter().any(|g| covered_by(x, g)))
        .cloned()
        .collect();
    if kept.is_empty() {
        xs.to_vec()
    } else {
        kept
    }
}

/// Decompose a positive formula leaf into its state DNF. Conjunction and
/// disjunction are taken apart; predicates, modal, suffix and closure
/// formulas become states. A bottom leaf is the empty DNF, a top leaf
/// references the distinguished top state.
pub fn leaf_dnf(f: &Formula) -> Dnf<Formula> {
    if f.is_ff() {
        return Dnf::bot();
    }
    match &f.0.kind {
        FKind::And(xs) => {
            let mut acc = Dnf::top();
            for x in xs {
                acc = acc.and(&leaf_dnf(x));
            }
            acc
        }
        FKind::Or(xs) => {
            let mut acc = Dnf::bot();
            for x in xs {
                acc = acc.or(&leaf_dnf(x));
            }
            acc
        }
        _ => Dnf::unit(f.clone()),
    }
}

#[derive(Debug, Clone)]
pub struct BuildOptions {
    pub state_cap: usize,
    pub deriv: DerivOptions,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { state_cap: crate::ere::DEFAULT_STATE_CAP, deriv: DerivOptions::default() }
    }
}

/// Construct the alternating Büchi automaton of a formula by closing the
/// symbolic derivative over reachable states. The formula is normalized to
/// the positive fragment first.
pub fn build_aba(f: &Formula) -> Result<Aba> {
    build_aba_with(f, &BuildOptions::default())
}

pub fn build_aba_with(f: &Formula, opts: &BuildOptions) -> Result<Aba> {
    let f = f.to_positive()?;
    let alg = f.algebra().clone();
    let mut deriver = Deriver::with_options(opts.deriv);
    let mut states: Vec<Formula> = Vec::new();
    let mut index: HashMap<Formula, StateId> = HashMap::new();

    let init_dnf = leaf_dnf(&f);
    let discover = |d: &Dnf<Formula>,
                        states: &mut Vec<Formula>,
                        index: &mut HashMap<Formula, StateId>|
     -> Result<Dnf<StateId>> {
        for member in d.members() {
            for q in member {
                if !index.contains_key(q) {
                    if states.len() >= opts.state_cap {
                        return Err(Error::StateCap(opts.state_cap));
                    }
                    index.insert(q.clone(), states.len());
                    states.push(q.clone());
                }
            }
        }
        Ok(d.map(&|q| index[q]))
    };

    let init = discover(&init_dnf, &mut states, &mut index)?;
    let mut delta: Vec<Tt<Dnf<StateId>>> = Vec::new();
    let mut next = 0;
    while next < states.len() {
        let q = states[next].clone();
        let term = deriver.deriv(&q);
        let inf: Tt<Dnf<Formula>> = lift_unary(&term, &leaf_dnf);
        let (_, leaves) = inf.collect();
        let mut mapped: HashMap<Dnf<Formula>, Dnf<StateId>> = HashMap::new();
        for leaf in leaves {
            let m = discover(&leaf, &mut states, &mut index)?;
            mapped.insert(leaf, m);
        }
        delta.push(lift_unary(&inf, &|leaf: &Dnf<Formula>| mapped[leaf].clone()));
        next += 1;
    }

    let mut accepting = std::collections::BTreeSet::new();
    for (i, q) in states.iter().enumerate() {
        if deriver.is_accepting(q)? {
            accepting.insert(i);
        }
    }
    let labels: Vec<String> = states.iter().map(|q| q.to_string()).collect();
    let top = states.iter().position(|q| q.is_tt());
    Ok(Aba::new(alg, labels, init, delta, accepting).with_top(top))
}
