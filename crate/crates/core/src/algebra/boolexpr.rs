//! Normalized propositional formulas over indexed atoms.
//!
//! Smart constructors flatten and sort n-ary connectives and collapse any
//! expression equivalent to `true` or `false` to the canonical constant, so
//! bottom/top detection is a structural check. Satisfiability is decided by
//! enumerating valuations of the atoms that actually occur.

use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoolExpr {
    False,
    True,
    Atom(u8),
    Not(Arc<BoolExpr>),
    And(Vec<Arc<BoolExpr>>),
    Or(Vec<Arc<BoolExpr>>),
}

use BoolExpr::*;

impl BoolExpr {
    pub fn atom(i: u8) -> Arc<BoolExpr> {
        Arc::new(Atom(i))
    }

    pub fn truth(b: bool) -> Arc<BoolExpr> {
        Arc::new(if b { True } else { False })
    }

    pub fn not(x: &Arc<BoolExpr>) -> Arc<BoolExpr> {
        match &**x {
            False => Arc::new(True),
            True => Arc::new(False),
            Not(inner) => inner.clone(),
            _ => Arc::new(Not(x.clone())),
        }
    }

    pub fn and(x: &Arc<BoolExpr>, y: &Arc<BoolExpr>) -> Arc<BoolExpr> {
        let mut ops = Vec::new();
        for side in [x, y] {
            match &**side {
                True => {}
                False => return Arc::new(False),
                And(xs) => ops.extend(xs.iter().cloned()),
                _ => ops.push(side.clone()),
            }
        }
        ops.sort();
        ops.dedup();
        let raw = match ops.len() {
            0 => return Arc::new(True),
            1 => return ops.pop().unwrap(),
            _ => Arc::new(And(ops)),
        };
        normalize(raw)
    }

    pub fn or(x: &Arc<BoolExpr>, y: &Arc<BoolExpr>) -> Arc<BoolExpr> {
        let mut ops = Vec::new();
        for side in [x, y] {
            match &**side {
                False => {}
                True => return Arc::new(True),
                Or(xs) => ops.extend(xs.iter().cloned()),
                _ => ops.push(side.clone()),
            }
        }
        ops.sort();
        ops.dedup();
        let raw = match ops.len() {
            0 => return Arc::new(False),
            1 => return ops.pop().unwrap(),
            _ => Arc::new(Or(ops)),
        };
        normalize(raw)
    }

    /// Truth value under a valuation given as a bitmask over atom indices.
    pub fn eval(&self, mask: u16) -> bool {
        match self {
            False => false,
            True => true,
            Atom(i) => mask & (1 << i) != 0,
            Not(x) => !x.eval(mask),
            And(xs) => xs.iter().all(|x| x.eval(mask)),
            Or(xs) => xs.iter().any(|x| x.eval(mask)),
        }
    }

    fn used_atoms(&self, acc: &mut Vec<u8>) {
        match self {
            False | True => {}
            Atom(i) => {
                if !acc.contains(i) {
                    acc.push(*i);
                }
            }
            Not(x) => x.used_atoms(acc),
            And(xs) | Or(xs) => xs.iter().for_each(|x| x.used_atoms(acc)),
        }
    }

    /// Exhaustive valuation enumeration over the atoms occurring in `self`.
    pub fn is_sat(&self) -> bool {
        let mut atoms = Vec::new();
        self.used_atoms(&mut atoms);
        let n = atoms.len();
        (0u32..1 << n).any(|bits| {
            let mut mask = 0u16;
            for (k, &a) in atoms.iter().enumerate() {
                if bits & (1 << k) != 0 {
                    mask |= 1 << a;
                }
            }
            self.eval(mask)
        })
    }

    pub fn fmt_with(&self, names: &[String], f: &mut fmt::Formatter<'_>, level: u8) -> fmt::Result {
        // levels: 0 = or, 1 = and, 2 = unary/atom
        let prec = match self {
            Or(_) => 0,
            And(_) => 1,
            _ => 2,
        };
        let parens = prec < level;
        if parens {
            write!(f, "(")?;
        }
        match self {
            False => write!(f, "false")?,
            True => write!(f, "true")?,
            Atom(i) => write!(f, "{}", names[*i as usize])?,
            Not(x) => {
                write!(f, "!")?;
                x.fmt_with(names, f, 2)?;
            }
            And(xs) => {
                for (k, x) in xs.iter().enumerate() {
                    if k > 0 {
                        write!(f, " & ")?;
                    }
                    x.fmt_with(names, f, 2)?;
                }
            }
            Or(xs) => {
                for (k, x) in xs.iter().enumerate() {
                    if k > 0 {
                        write!(f, " | ")?;
                    }
                    x.fmt_with(names, f, 1)?;
                }
            }
        }
        if parens {
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Collapse expressions equivalent to a constant to the canonical constant.
fn normalize(x: Arc<BoolExpr>) -> Arc<BoolExpr> {
    if !x.is_sat() {
        return Arc::new(False);
    }
    if !BoolExpr::not(&x).is_sat() {
        return Arc::new(True);
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contradiction_collapses_to_false() {
        let p = BoolExpr::atom(0);
        let np = BoolExpr::not(&p);
        assert_eq!(*BoolExpr::and(&p, &np), False);
    }

    #[test]
    fn excluded_middle_collapses_to_true() {
        let p = BoolExpr::atom(0);
        assert_eq!(*BoolExpr::or(&p, &BoolExpr::not(&p)), True);
    }

    #[test]
    fn and_is_commutative_by_sorting() {
        let p = BoolExpr::atom(0);
        let q = BoolExpr::atom(1);
        assert_eq!(BoolExpr::and(&p, &q), BoolExpr::and(&q, &p));
    }

    #[test]
    fn sat_with_witness() {
        // (p | q) & !p is satisfied by {q}
        let p = BoolExpr::atom(0);
        let q = BoolExpr::atom(1);
        let e = BoolExpr::and(&BoolExpr::or(&p, &q), &BoolExpr::not(&p));
        assert!(e.is_sat());
        assert!(e.eval(0b10));
        assert!(!e.eval(0b01));
    }
}
