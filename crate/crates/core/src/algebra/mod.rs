//! Effective Boolean algebras over a domain of letters.
//!
//! Three algebras are provided: propositional (letters are sets of atoms
//! drawn from a declared universe of at most 16 atoms, satisfiability by
//! valuation enumeration), integer (letters are signed integers, predicates
//! in a canonical residue/interval form), and the anchor extension of either
//! (adds the distinguished end marker `#` to the domain).
//!
//! Predicates are immutable values tied to their algebra. Boolean operations
//! stay inside the representation and anything equivalent to true or false
//! collapses to the canonical top/bottom object.

mod boolexpr;
mod intpred;

pub(crate) use boolexpr::BoolExpr;
pub use intpred::IntPred;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum AlgKind {
    Prop { atoms: Vec<String> },
    Int,
    Anchor(Algebra),
}

/// Handle to an effective Boolean algebra. Cheap to clone; equality is
/// structural on the algebra description, with a pointer fast path for
/// clones of one handle.
#[derive(Debug, Clone)]
pub struct Algebra(Arc<AlgKind>);

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Algebra {}

impl std::hash::Hash for Algebra {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        // weak but equality-consistent: structurally equal handles agree
        match &*self.0 {
            AlgKind::Prop { atoms } => {
                state.write_u8(0);
                state.write_usize(atoms.len());
            }
            AlgKind::Int => state.write_u8(1),
            AlgKind::Anchor(base) => {
                state.write_u8(2);
                base.hash(state);
            }
        }
    }
}

impl PartialOrd for Algebra {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Algebra {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return std::cmp::Ordering::Equal;
        }
        self.0.cmp(&other.0)
    }
}

/// An element of an algebra's domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// Valuation of the propositional atom universe, bit i = atom i.
    Props(u16),
    Int(i64),
    /// The distinguished `#` element of an anchor-extended algebra.
    Anchor,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Repr {
    Prop(Arc<BoolExpr>),
    Int(Arc<IntPred>),
    Anchor { base: Arc<Repr>, hash: bool },
}

/// A predicate of an algebra, in canonical representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pred {
    alg: Algebra,
    repr: Repr,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connective {
    And,
    Or,
    Not,
}

impl Algebra {
    /// Propositional algebra over the given atom universe (at most 16 atoms).
    pub fn prop(atoms: &[&str]) -> Result<Algebra> {
        if atoms.len() > 16 {
            return Err(Error::TooManyAtoms(atoms.len()));
        }
        let names: Vec<String> = atoms.iter().map(|s| s.to_string()).collect();
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::UnknownAtom(format!("duplicate atom `{a}`")));
            }
        }
        Ok(Algebra(Arc::new(AlgKind::Prop { atoms: names })))
    }

    pub fn int() -> Algebra {
        Algebra(Arc::new(AlgKind::Int))
    }

    /// Extend with the anchor element `#`.
    pub fn with_anchor(&self) -> Result<Algebra> {
        if self.is_anchored() {
            return Err(Error::DoubleAnchor);
        }
        Ok(Algebra(Arc::new(AlgKind::Anchor(self.clone()))))
    }

    pub fn is_anchored(&self) -> bool {
        matches!(&*self.0, AlgKind::Anchor(_))
    }

    pub fn base(&self) -> Option<&Algebra> {
        match &*self.0 {
            AlgKind::Anchor(b) => Some(b),
            _ => None,
        }
    }

    /// Atom universe of the underlying propositional algebra, if any.
    pub fn atoms(&self) -> Option<&[String]> {
        match &*self.0 {
            AlgKind::Prop { atoms } => Some(atoms),
            AlgKind::Anchor(b) => b.atoms(),
            AlgKind::Int => None,
        }
    }

    fn is_int_like(&self) -> bool {
        match &*self.0 {
            AlgKind::Int => true,
            AlgKind::Anchor(b) => b.is_int_like(),
            AlgKind::Prop { .. } => false,
        }
    }

    pub fn bot(&self) -> Pred {
        Pred { alg: self.clone(), repr: self.bot_repr() }
    }

    pub fn top(&self) -> Pred {
        Pred { alg: self.clone(), repr: self.top_repr() }
    }

    fn bot_repr(&self) -> Repr {
        match &*self.0 {
            AlgKind::Prop { .. } => Repr::Prop(BoolExpr::truth(false)),
            AlgKind::Int => Repr::Int(Arc::new(IntPred::bot())),
            AlgKind::Anchor(b) => Repr::Anchor { base: Arc::new(b.bot_repr()), hash: false },
        }
    }

    fn top_repr(&self) -> Repr {
        match &*self.0 {
            AlgKind::Prop { .. } => Repr::Prop(BoolExpr::truth(true)),
            AlgKind::Int => Repr::Int(Arc::new(IntPred::top())),
            AlgKind::Anchor(b) => Repr::Anchor { base: Arc::new(b.top_repr()), hash: true },
        }
    }

    /// Propositional atom predicate; goes through the embedding when the
    /// algebra is anchor-extended.
    pub fn atom(&self, name: &str) -> Result<Pred> {
        match &*self.0 {
            AlgKind::Prop { atoms } => {
                let i = atoms
                    .iter()
                    .position(|a| a == name)
                    .ok_or_else(|| Error::UnknownAtom(name.to_string()))?;
                Ok(Pred { alg: self.clone(), repr: Repr::Prop(BoolExpr::atom(i as u8)) })
            }
            AlgKind::Int => Err(Error::UnknownAtom(name.to_string())),
            AlgKind::Anchor(b) => self.embed(&b.atom(name)?),
        }
    }

    pub fn int_lt(&self, c: i64) -> Result<Pred> {
        self.int_pred(IntPred::lt(c))
    }

    pub fn int_gt(&self, c: i64) -> Result<Pred> {
        self.int_pred(IntPred::gt(c))
    }

    pub fn int_mod_eq(&self, m: i64, r: i64) -> Result<Pred> {
        if m < 1 {
            return Err(Error::parse(0, "modulus must be at least 1"));
        }
        self.int_pred(IntPred::mod_eq(m, r))
    }

    fn int_pred(&self, p: IntPred) -> Result<Pred> {
        match &*self.0 {
            AlgKind::Int => Ok(Pred { alg: self.clone(), repr: Repr::Int(Arc::new(p)) }),
            AlgKind::Anchor(b) if b.is_int_like() => self.embed(&b.int_pred(p)?),
            _ => Err(Error::AlgebraMismatch),
        }
    }

    /// The predicate denoting exactly `{#}` in an anchor-extended algebra.
    pub fn anchor_pred(&self) -> Result<Pred> {
        match &*self.0 {
            AlgKind::Anchor(b) => Ok(Pred {
                alg: self.clone(),
                repr: Repr::Anchor { base: Arc::new(b.bot_repr()), hash: true },
            }),
            _ => Err(Error::AlgebraMismatch),
        }
    }

    /// Embed a base-algebra predicate; `#` is excluded from the denotation.
    pub fn embed(&self, p: &Pred) -> Result<Pred> {
        match &*self.0 {
            AlgKind::Anchor(b) if *b == p.alg => Ok(Pred {
                alg: self.clone(),
                repr: Repr::Anchor { base: Arc::new(p.repr.clone()), hash: false },
            }),
            _ => Err(Error::AlgebraMismatch),
        }
    }

    /// Check that a letter belongs to this algebra's domain.
    pub fn check_letter(&self, l: &Letter) -> Result<()> {
        match (&*self.0, l) {
            (AlgKind::Prop { atoms }, Letter::Props(mask)) => {
                if atoms.len() == 16 || *mask < (1 << atoms.len()) {
                    Ok(())
                } else {
                    Err(Error::ForeignLetter(format!("{mask:#b}")))
                }
            }
            (AlgKind::Int, Letter::Int(_)) => Ok(()),
            (AlgKind::Anchor(_), Letter::Anchor) => Ok(()),
            (AlgKind::Anchor(b), other) => b.check_letter(other),
            (_, other) => Err(Error::ForeignLetter(format!("{other:?}"))),
        }
    }

    /// All letters of a finite (propositional) domain, if enumerable.
    pub fn enumerate_letters(&self) -> Option<Vec<Letter>> {
        match &*self.0 {
            AlgKind::Prop { atoms } => {
                Some((0u32..1 << atoms.len()).map(|m| Letter::Props(m as u16)).collect())
            }
            AlgKind::Int => None,
            AlgKind::Anchor(b) => {
                let mut ls = b.enumerate_letters()?;
                ls.push(Letter::Anchor);
                Some(ls)
            }
        }
    }

    /// A concrete witness of a satisfiable predicate. Propositional
    /// witnesses are the lexicographically least satisfying valuation with
    /// atoms in declared order, integer witnesses have least absolute value
    /// with ties to the nonnegative, and anchored predicates prefer a base
    /// witness before `#`.
    pub fn sample(&self, p: &Pred) -> Option<Letter> {
        self.sample_repr(&p.repr)
    }

    fn sample_repr(&self, repr: &Repr) -> Option<Letter> {
        match (&*self.0, repr) {
            (AlgKind::Prop { atoms }, Repr::Prop(e)) => {
                let n = atoms.len();
                for v in 0u32..1 << n {
                    let mut mask = 0u16;
                    for i in 0..n {
                        if v >> (n - 1 - i) & 1 == 1 {
                            mask |= 1 << i;
                        }
                    }
                    if e.eval(mask) {
                        return Some(Letter::Props(mask));
                    }
                }
                None
            }
            (AlgKind::Int, Repr::Int(p)) => p.sample().map(Letter::Int),
            (AlgKind::Anchor(b), Repr::Anchor { base, hash }) => {
                if let Some(l) = b.sample_repr(base) {
                    Some(l)
                } else if *hash {
                    Some(Letter::Anchor)
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Render a letter in the concrete word syntax.
    pub fn letter_string(&self, l: &Letter) -> String {
        match l {
            Letter::Int(n) => n.to_string(),
            Letter::Anchor => "#".to_string(),
            Letter::Props(mask) => {
                let names = self.atoms().unwrap_or(&[]);
                let set: Vec<&str> = names
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, n)| n.as_str())
                    .collect();
                format!("{{{}}}", set.join(" "))
            }
        }
    }
}

impl Pred {
    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn is_bot(&self) -> bool {
        self.repr == self.alg.bot_repr()
    }

    pub fn is_top(&self) -> bool {
        self.repr == self.alg.top_repr()
    }

    pub fn and(&self, other: &Pred) -> Pred {
        assert_eq!(self.alg, other.alg, "algebra mismatch in predicate conjunction");
        Pred { alg: self.alg.clone(), repr: and_repr(&self.repr, &other.repr) }
    }

    pub fn or(&self, other: &Pred) -> Pred {
        assert_eq!(self.alg, other.alg, "algebra mismatch in predicate disjunction");
        Pred { alg: self.alg.clone(), repr: or_repr(&self.repr, &other.repr) }
    }

    pub fn not(&self) -> Pred {
        Pred { alg: self.alg.clone(), repr: not_repr(&self.repr) }
    }

    pub fn is_sat(&self) -> bool {
        sat_repr(&self.repr)
    }

    /// Denotation test `a ∈ ⟦self⟧`. Panics on a letter from a foreign
    /// domain; use [`Pred::try_denotes`] at trust boundaries.
    pub fn denotes(&self, a: &Letter) -> bool {
        denotes_repr(&self.repr, a)
    }

    pub fn try_denotes(&self, a: &Letter) -> Result<bool> {
        self.alg.check_letter(a)?;
        Ok(self.denotes(a))
    }

    /// Denotational equivalence, decided as unsatisfiability of the
    /// symmetric difference.
    pub fn equiv(&self, other: &Pred) -> bool {
        let diff = self.and(&other.not()).or(&self.not().and(other));
        !diff.is_sat()
    }

    pub(crate) fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, level: u8) -> fmt::Result {
        // shared precedence ladder with formulas: 2 = or, 3 = and, 4 = unary/atom
        let prec = prec_repr(&self.repr);
        if prec < level {
            write!(f, "(")?;
            fmt_repr(&self.alg, &self.repr, f)?;
            write!(f, ")")
        } else {
            fmt_repr(&self.alg, &self.repr, f)
        }
    }
}

fn and_repr(a: &Repr, b: &Repr) -> Repr {
    match (a, b) {
        (Repr::Prop(x), Repr::Prop(y)) => Repr::Prop(BoolExpr::and(x, y)),
        (Repr::Int(x), Repr::Int(y)) => Repr::Int(Arc::new(x.and(y))),
        (Repr::Anchor { base: x, hash: h1 }, Repr::Anchor { base: y, hash: h2 }) => {
            Repr::Anchor { base: Arc::new(and_repr(x, y)), hash: *h1 && *h2 }
        }
        _ => unreachable!("mixed predicate representations"),
    }
}

fn or_repr(a: &Repr, b: &Repr) -> Repr {
    match (a, b) {
        (Repr::Prop(x), Repr::Prop(y)) => Repr::Prop(BoolExpr::or(x, y)),
        (Repr::Int(x), Repr::Int(y)) => Repr::Int(Arc::new(x.or(y))),
        (Repr::Anchor { base: x, hash: h1 }, Repr::Anchor { base: y, hash: h2 }) => {
            Repr::Anchor { base: Arc::new(or_repr(x, y)), hash: *h1 || *h2 }
        }
        _ => unreachable!("mixed predicate representations"),
    }
}

fn not_repr(a: &Repr) -> Repr {
    match a {
        Repr::Prop(x) => Repr::Prop(BoolExpr::not(x)),
        Repr::Int(x) => Repr::Int(Arc::new(x.not())),
        Repr::Anchor { base, hash } => {
            Repr::Anchor { base: Arc::new(not_repr(base)), hash: !hash }
        }
    }
}

fn sat_repr(a: &Repr) -> bool {
    match a {
        Repr::Prop(x) => x.is_sat(),
        Repr::Int(x) => x.is_sat(),
        Repr::Anchor { base, hash } => *hash || sat_repr(base),
    }
}

fn denotes_repr(a: &Repr, l: &Letter) -> bool {
    match (a, l) {
        (Repr::Prop(x), Letter::Props(mask)) => x.eval(*mask),
        (Repr::Int(x), Letter::Int(n)) => x.denotes(*n),
        (Repr::Anchor { hash, .. }, Letter::Anchor) => *hash,
        (Repr::Anchor { base, .. }, other) => denotes_repr(base, other),
        _ => panic!("letter from a foreign domain"),
    }
}

fn prec_repr(r: &Repr) -> u8 {
    match r {
        Repr::Prop(e) => match &**e {
            BoolExpr::Or(_) => 2,
            BoolExpr::And(_) => 3,
            _ => 4,
        },
        Repr::Int(p) => p.display_prec(),
        Repr::Anchor { base, hash } => {
            let base_bot = sat_is_bot(base);
            let base_top = !sat_repr(&not_repr(base));
            if *hash {
                if base_bot || base_top {
                    4
                } else {
                    2
                }
            } else if base_top || base_bot {
                4
            } else {
                prec_repr(base)
            }
        }
    }
}

fn sat_is_bot(r: &Repr) -> bool {
    !sat_repr(r)
}

fn fmt_repr(alg: &Algebra, r: &Repr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match r {
        Repr::Prop(e) => {
            let names = alg.atoms().unwrap_or(&[]);
            e.fmt_with(names, f, 0)
        }
        Repr::Int(p) => write!(f, "{p}"),
        Repr::Anchor { base, hash } => {
            let base_alg = alg.base().expect("anchored repr in non-anchored algebra");
            let base_bot = sat_is_bot(base);
            let base_top = !sat_repr(&not_repr(base));
            match (hash, base_bot, base_top) {
                (true, true, _) => write!(f, "[#]"),
                (true, _, true) => write!(f, "true"),
                (true, false, false) => {
                    fmt_repr_prec(base_alg, base, f, 3)?;
                    write!(f, " | [#]")
                }
                (false, true, _) => write!(f, "false"),
                (false, _, true) => write!(f, "![#]"),
                (false, false, false) => fmt_repr(base_alg, base, f),
            }
        }
    }
}

fn fmt_repr_prec(alg: &Algebra, r: &Repr, f: &mut fmt::Formatter<'_>, level: u8) -> fmt::Result {
    if prec_repr(r) < level {
        write!(f, "(")?;
        fmt_repr(alg, r, f)?;
        write!(f, ")")
    } else {
        fmt_repr(alg, r, f)
    }
}

impl fmt::Display for Pred {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_repr(&self.alg, &self.repr, f)
    }
}

/// The algebra spec syntax: `prop:a,b`, `int`, `anchor(<spec>)`.
impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            AlgKind::Prop { atoms } => write!(f, "prop:{}", atoms.join(",")),
            AlgKind::Int => write!(f, "int"),
            AlgKind::Anchor(base) => write!(f, "anchor({base})"),
        }
    }
}

/// Checked form of the predicate connectives, for inputs that cross a trust
/// boundary. `b` must be absent exactly when `op` is `Not`.
pub fn apply_connective(op: Connective, a: &Pred, b: Option<&Pred>) -> Result<Pred> {
    match (op, b) {
        (Connective::Not, None) => Ok(a.not()),
        (Connective::And, Some(b)) | (Connective::Or, Some(b)) => {
            if a.alg != b.alg {
                return Err(Error::AlgebraMismatch);
            }
            Ok(match op {
                Connective::And => a.and(b),
                Connective::Or => a.or(b),
                Connective::Not => unreachable!(),
            })
        }
        _ => Err(Error::AlgebraMismatch),
    }
}

/// All satisfiable full conjunctions over `gamma`, pairwise disjoint and
/// jointly covering the domain. Subsets are enumerated in binary-counter
/// order over the input order, so the output is deterministic.
pub fn minterms(alg: &Algebra, gamma: &[Pred]) -> Result<Vec<Pred>> {
    let mut distinct: Vec<&Pred> = Vec::new();
    for g in gamma {
        if g.alg != *alg {
            return Err(Error::AlgebraMismatch);
        }
        if !distinct.iter().any(|d| **d == *g) {
            distinct.push(g);
        }
    }
    let k = distinct.len();
    let mut out = Vec::new();
    for mask in 0u64..1 << k {
        let mut conj = alg.top();
        for (i, g) in distinct.iter().enumerate() {
            if mask & (1 << i) != 0 {
                conj = conj.and(g);
            } else {
                conj = conj.and(&g.not());
            }
        }
        if conj.is_sat() {
            out.push(conj);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pq() -> Algebra {
        Algebra::prop(&["p", "q"]).unwrap()
    }

    #[test]
    fn prop_contradiction_is_bot() {
        let a = pq();
        let p = a.atom("p").unwrap();
        assert!(p.and(&p.not()).is_bot());
    }

    #[test]
    fn int_cleaning_example() {
        let a = Algebra::int();
        let pos = a.int_gt(0).unwrap();
        let below = a.int_lt(1).unwrap();
        assert!(!pos.and(&below).is_sat());
        assert!(pos.and(&below).is_bot());
    }

    #[test]
    fn int_even_positive_denotation() {
        let a = Algebra::int();
        let p = a.int_gt(0).unwrap().and(&a.int_mod_eq(2, 0).unwrap());
        for x in -10..=10 {
            assert_eq!(p.denotes(&Letter::Int(x)), x > 0 && x % 2 == 0);
        }
    }

    #[test]
    fn denotes_intro_leaves() {
        let a = Algebra::int();
        assert!(a.int_gt(0).unwrap().denotes(&Letter::Int(8)));
        assert!(!a.int_mod_eq(3, 0).unwrap().denotes(&Letter::Int(8)));
        assert!(a.top().denotes(&Letter::Int(-7)));
    }

    #[test]
    fn equiv_examples() {
        let a = Algebra::int();
        assert!(a.int_lt(1).unwrap().not().equiv(&a.int_gt(0).unwrap()));
        let b = pq();
        let p = b.atom("p").unwrap();
        let q = b.atom("q").unwrap();
        assert!(p.and(&q).equiv(&q.and(&p)));
        assert_eq!(p.and(&q), q.and(&p));
        assert!(p.equiv(&p));
    }

    #[test]
    fn prop_sat_by_enumeration() {
        let a = pq();
        let p = a.atom("p").unwrap();
        let q = a.atom("q").unwrap();
        assert!(p.or(&q).and(&p.not()).is_sat());
        assert!(a.bot().is_sat() == false);
    }

    #[test]
    fn minterms_prop_pair() {
        let a = pq();
        let p = a.atom("p").unwrap();
        let q = a.atom("q").unwrap();
        let ms = minterms(&a, &[p.clone(), q.clone()]).unwrap();
        assert_eq!(ms.len(), 4);
        // pairwise disjoint, disjunction is top
        for i in 0..ms.len() {
            for j in i + 1..ms.len() {
                assert!(!ms[i].and(&ms[j]).is_sat());
            }
        }
        let mut cover = a.bot();
        for m in &ms {
            cover = cover.or(m);
        }
        assert!(cover.is_top());
        // each input predicate is a disjunction of minterms
        let p_cover = ms.iter().filter(|m| m.and(&p).is_sat()).fold(a.bot(), |acc, m| acc.or(m));
        assert!(p_cover.equiv(&p));
    }

    #[test]
    fn minterms_empty_is_top() {
        let a = pq();
        let ms = minterms(&a, &[]).unwrap();
        assert_eq!(ms.len(), 1);
        assert!(ms[0].is_top());
    }

    #[test]
    fn minterms_int_pair() {
        let a = Algebra::int();
        let ms = minterms(&a, &[a.int_gt(0).unwrap(), a.int_lt(1).unwrap()]).unwrap();
        assert_eq!(ms.len(), 2);
        // x >= 1 and x <= 0 in canonical form
        assert!(ms.contains(&a.int_gt(0).unwrap()));
        assert!(ms.contains(&a.int_lt(1).unwrap()));
        for x in -5..=5 {
            let hits = ms.iter().filter(|m| m.denotes(&Letter::Int(x))).count();
            assert_eq!(hits, 1);
        }
    }

    #[test]
    fn anchor_behaviour() {
        let a = pq();
        let ext = a.with_anchor().unwrap();
        let hash = ext.anchor_pred().unwrap();
        let p = ext.embed(&a.atom("p").unwrap()).unwrap();
        assert!(hash.denotes(&Letter::Anchor));
        assert!(!p.denotes(&Letter::Anchor));
        assert!(!hash.and(&p).is_sat());
        assert!(ext.with_anchor().is_err());
        // the complement of # denotes exactly the base domain
        let nh = hash.not();
        assert!(!nh.denotes(&Letter::Anchor));
        assert!(nh.denotes(&Letter::Props(0b01)));
    }

    #[test]
    fn mixed_algebra_is_usage_error() {
        let a = pq();
        let b = Algebra::int();
        let res = apply_connective(Connective::And, &a.top(), Some(&b.top()));
        assert!(matches!(res, Err(Error::AlgebraMismatch)));
    }

    #[test]
    fn sample_is_lexicographically_least() {
        let a = pq();
        let p = a.atom("p").unwrap();
        let q = a.atom("q").unwrap();
        // first satisfying valuation in lexicographic atom order
        assert_eq!(a.sample(&p.or(&q)), Some(Letter::Props(0b10))); // {q} before {p}
        assert_eq!(a.sample(&p), Some(Letter::Props(0b01)));
        assert_eq!(a.sample(&a.top()), Some(Letter::Props(0)));
        assert_eq!(a.sample(&a.bot()), None);
    }

    #[test]
    fn denotation_laws_on_sampled_letters() {
        let a = pq();
        let preds = [
            a.atom("p").unwrap(),
            a.atom("q").unwrap(),
            a.atom("p").unwrap().not(),
            a.atom("p").unwrap().and(&a.atom("q").unwrap()),
            a.top(),
            a.bot(),
        ];
        let letters = a.enumerate_letters().unwrap();
        for x in &preds {
            for y in &preds {
                for l in &letters {
                    assert_eq!(x.and(y).denotes(l), x.denotes(l) && y.denotes(l));
                    assert_eq!(x.or(y).denotes(l), x.denotes(l) || y.denotes(l));
                }
            }
            for l in &letters {
                assert_eq!(x.not().denotes(l), !x.denotes(l));
            }
        }
    }
}
