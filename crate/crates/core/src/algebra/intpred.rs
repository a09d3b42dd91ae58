//! Canonical predicates over the integers.
//!
//! A predicate is a pair of a modulus `M >= 1` and one interval set per
//! residue class `r in [0, M)`. The class set denotes
//! `{x : x = r (mod M)}` intersected with the intervals. This representation
//! exactly closes the Boolean algebra generated by `x < c`, `x > c` and
//! `x % m == r`: conjunction and disjunction align both operands to the lcm
//! of their moduli, negation complements each class.
//!
//! Canonical form per class: finite endpoints lie on the residue grid,
//! intervals are nonempty, sorted, and consecutive intervals are more than
//! one grid step apart. Predicates that are valid or unsatisfiable collapse
//! to the canonical top/bottom (modulus 1, full/empty class).

use std::fmt;

const MODULUS_CAP: i64 = 1 << 20;

/// Inclusive interval with optional infinite endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub lo: Option<i64>,
    pub hi: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPred {
    modulus: i64,
    classes: Vec<Vec<Interval>>,
}

fn ceil_to_grid(x: i64, r: i64, m: i64) -> i64 {
    x + (r - x).rem_euclid(m)
}

fn floor_to_grid(x: i64, r: i64, m: i64) -> i64 {
    x - (x - r).rem_euclid(m)
}

/// Clip endpoints to the residue grid, drop empties, sort and merge.
fn canon_class(mut ivs: Vec<Interval>, r: i64, m: i64) -> Vec<Interval> {
    let mut clipped: Vec<Interval> = Vec::with_capacity(ivs.len());
    for iv in ivs.drain(..) {
        let lo = iv.lo.map(|x| ceil_to_grid(x, r, m));
        let hi = iv.hi.map(|x| floor_to_grid(x, r, m));
        if let (Some(a), Some(b)) = (lo, hi) {
            if a > b {
                continue;
            }
        }
        clipped.push(Interval { lo, hi });
    }
    clipped.sort_by_key(|iv| iv.lo.map_or(i64::MIN, |x| x));
    let mut out: Vec<Interval> = Vec::with_capacity(clipped.len());
    for iv in clipped {
        if let Some(last) = out.last_mut() {
            let touches = match (last.hi, iv.lo) {
                (None, _) => true,
                (_, None) => true,
                (Some(h), Some(l)) => l <= h + m,
            };
            if touches {
                last.hi = match (last.hi, iv.hi) {
                    (None, _) | (_, None) => None,
                    (Some(a), Some(b)) => Some(a.max(b)),
                };
                continue;
            }
        }
        out.push(iv);
    }
    out
}

fn intersect_classes(a: &[Interval], b: &[Interval]) -> Vec<Interval> {
    let mut out = Vec::new();
    for x in a {
        for y in b {
            let lo = match (x.lo, y.lo) {
                (None, l) | (l, None) => l,
                (Some(p), Some(q)) => Some(p.max(q)),
            };
            let hi = match (x.hi, y.hi) {
                (None, h) | (h, None) => h,
                (Some(p), Some(q)) => Some(p.min(q)),
            };
            if let (Some(l), Some(h)) = (lo, hi) {
                if l > h {
                    continue;
                }
            }
            out.push(Interval { lo, hi });
        }
    }
    out
}

fn complement_class(a: &[Interval]) -> Vec<Interval> {
    // input sorted and disjoint
    let mut out = Vec::new();
    let mut cursor: Option<i64> = None; // None at the very start means -inf open
    let mut started = false;
    for iv in a {
        match iv.lo {
            None => {}
            Some(l) => {
                let lo = if started { cursor.map(|c| c + 1) } else { None };
                out.push(Interval { lo, hi: Some(l - 1) });
            }
        }
        started = true;
        match iv.hi {
            None => return out, // reaches +inf, nothing after
            Some(h) => cursor = Some(h),
        }
    }
    let lo = if started { cursor.map(|c| c + 1) } else { None };
    out.push(Interval { lo, hi: None });
    out
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl IntPred {
    pub fn bot() -> IntPred {
        IntPred { modulus: 1, classes: vec![vec![]] }
    }

    pub fn top() -> IntPred {
        IntPred { modulus: 1, classes: vec![vec![Interval { lo: None, hi: None }]] }
    }

    /// x < c
    pub fn lt(c: i64) -> IntPred {
        IntPred { modulus: 1, classes: vec![vec![Interval { lo: None, hi: Some(c - 1) }]] }
    }

    /// x > c
    pub fn gt(c: i64) -> IntPred {
        IntPred { modulus: 1, classes: vec![vec![Interval { lo: Some(c + 1), hi: None }]] }
    }

    /// x % m == r, for m >= 1 (r is taken modulo m)
    pub fn mod_eq(m: i64, r: i64) -> IntPred {
        assert!(m >= 1, "modulus must be at least 1");
        let r = r.rem_euclid(m);
        let classes = (0..m)
            .map(|k| if k == r { vec![Interval { lo: None, hi: None }] } else { vec![] })
            .collect();
        IntPred { modulus: m, classes }.collapsed()
    }

    fn collapsed(self) -> IntPred {
        let full = Interval { lo: None, hi: None };
        if self.classes.iter().all(|c| c.is_empty()) {
            return IntPred::bot();
        }
        if self.classes.iter().all(|c| c.as_slice() == [full]) {
            return IntPred::top();
        }
        self
    }

    fn aligned_class(&self, r: i64) -> &[Interval] {
        &self.classes[(r % self.modulus) as usize]
    }

    fn binop(&self, other: &IntPred, union: bool) -> IntPred {
        let m = self.modulus / gcd(self.modulus, other.modulus) * other.modulus;
        assert!(m <= MODULUS_CAP, "combined congruence modulus exceeds cap");
        let mut classes = Vec::with_capacity(m as usize);
        for r in 0..m {
            let a = self.aligned_class(r);
            let b = other.aligned_class(r);
            let raw = if union {
                let mut v = a.to_vec();
                v.extend_from_slice(b);
                v
            } else {
                intersect_classes(a, b)
            };
            classes.push(canon_class(raw, r, m));
        }
        IntPred { modulus: m, classes }.collapsed()
    }

    pub fn and(&self, other: &IntPred) -> IntPred {
        self.binop(other, false)
    }

    pub fn or(&self, other: &IntPred) -> IntPred {
        self.binop(other, true)
    }

    pub fn not(&self) -> IntPred {
        let m = self.modulus;
        let classes = (0..m)
            .map(|r| canon_class(complement_class(&self.classes[r as usize]), r, m))
            .collect();
        IntPred { modulus: m, classes }.collapsed()
    }

    pub fn is_sat(&self) -> bool {
        self.classes.iter().any(|c| !c.is_empty())
    }

    pub fn is_bot(&self) -> bool {
        !self.is_sat()
    }

    pub fn is_top(&self) -> bool {
        self.modulus == 1 && self.classes[0].as_slice() == [Interval { lo: None, hi: None }]
    }

    pub fn denotes(&self, n: i64) -> bool {
        let class = &self.classes[n.rem_euclid(self.modulus) as usize];
        class.iter().any(|iv| {
            iv.lo.map_or(true, |l| l <= n) && iv.hi.map_or(true, |h| n <= h)
        })
    }

    /// Least-absolute-value satisfying integer, ties to the nonnegative.
    pub fn sample(&self) -> Option<i64> {
        let mut best: Option<i64> = None;
        let mut consider = |x: i64| {
            best = Some(match best {
                None => x,
                Some(b) => {
                    if x.abs() < b.abs() || (x.abs() == b.abs() && x > b) {
                        x
                    } else {
                        b
                    }
                }
            });
        };
        for r in 0..self.modulus {
            for iv in &self.classes[r as usize] {
                let up = ceil_to_grid(0, r, self.modulus);
                let down = floor_to_grid(0, r, self.modulus);
                match (iv.lo, iv.hi) {
                    (Some(l), Some(h)) => {
                        if l > 0 {
                            consider(l);
                        } else if h < 0 {
                            consider(h);
                        } else {
                            if up <= h {
                                consider(up);
                            }
                            if down >= l {
                                consider(down);
                            }
                        }
                    }
                    (Some(l), None) => {
                        if l > 0 {
                            consider(l);
                        } else {
                            consider(up);
                            if down >= l {
                                consider(down);
                            }
                        }
                    }
                    (None, Some(h)) => {
                        if h < 0 {
                            consider(h);
                        } else {
                            consider(down);
                            if up <= h {
                                consider(up);
                            }
                        }
                    }
                    (None, None) => {
                        consider(up);
                        consider(down);
                    }
                }
            }
        }
        best
    }

    /// Number of rendered disjuncts and whether the single one is a conjunction,
    /// used for precedence-aware embedding in formula output.
    pub fn display_prec(&self) -> u8 {
        if self.is_bot() || self.is_top() {
            return 4;
        }
        let mut disjuncts = 0usize;
        let mut conj = false;
        for (r, class) in self.classes.iter().enumerate() {
            for iv in class {
                disjuncts += 1;
                let bounds = iv.lo.is_some() as usize + iv.hi.is_some() as usize;
                let parts = bounds + (self.modulus > 1) as usize;
                if parts > 1 {
                    conj = true;
                }
                let _ = r;
            }
        }
        if disjuncts > 1 {
            2
        } else if conj {
            3
        } else {
            4
        }
    }
}

impl fmt::Display for IntPred {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_bot() {
            return write!(f, "false");
        }
        if self.is_top() {
            return write!(f, "true");
        }
        let mut first = true;
        for r in 0..self.modulus {
            for iv in &self.classes[r as usize] {
                if !first {
                    write!(f, " | ")?;
                }
                first = false;
                let mut parts: Vec<String> = Vec::new();
                if self.modulus > 1 {
                    parts.push(format!("[x%{}=={}]", self.modulus, r));
                }
                if let Some(l) = iv.lo {
                    parts.push(format!("[x>{}]", l - 1));
                }
                if let Some(h) = iv.hi {
                    parts.push(format!("[x<{}]", h + 1));
                }
                if parts.is_empty() {
                    parts.push("true".to_string());
                }
                write!(f, "{}", parts.join(" & "))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_and_below_one_is_unsat() {
        let p = IntPred::gt(0).and(&IntPred::lt(1));
        assert!(p.is_bot());
        assert_eq!(p, IntPred::bot());
    }

    #[test]
    fn not_below_one_is_positive() {
        assert_eq!(IntPred::lt(1).not(), IntPred::gt(0));
    }

    #[test]
    fn positive_even_brute_force() {
        let p = IntPred::gt(0).and(&IntPred::mod_eq(2, 0));
        for x in -10..=10 {
            assert_eq!(p.denotes(x), x > 0 && x % 2 == 0, "x = {x}");
        }
    }

    #[test]
    fn residue_classes_cover_top() {
        let p = IntPred::mod_eq(2, 0).or(&IntPred::mod_eq(2, 1));
        assert!(p.is_top());
        assert_eq!(p, IntPred::top());
    }

    #[test]
    fn recanonicalization_is_idempotent() {
        let p = IntPred::gt(-3).and(&IntPred::lt(7)).or(&IntPred::mod_eq(3, 2));
        let q = p.and(&IntPred::top());
        assert_eq!(p, q);
        assert_eq!(p.or(&IntPred::bot()), p);
    }

    #[test]
    fn grid_merge_across_gap() {
        // even numbers in [2,4] or [6,8] merge into [2,8] on the grid
        let a = IntPred::mod_eq(2, 0).and(&IntPred::gt(1)).and(&IntPred::lt(5));
        let b = IntPred::mod_eq(2, 0).and(&IntPred::gt(5)).and(&IntPred::lt(9));
        let c = IntPred::mod_eq(2, 0).and(&IntPred::gt(1)).and(&IntPred::lt(9));
        assert_eq!(a.or(&b), c);
    }

    #[test]
    fn sample_prefers_small_absolute_value() {
        assert_eq!(IntPred::gt(0).sample(), Some(1));
        assert_eq!(IntPred::lt(0).sample(), Some(-1));
        assert_eq!(IntPred::top().sample(), Some(0));
        assert_eq!(IntPred::mod_eq(3, 2).sample(), Some(-1));
        assert_eq!(IntPred::mod_eq(3, 2).and(&IntPred::gt(0)).sample(), Some(2));
        assert_eq!(IntPred::bot().sample(), None);
        // tie at |x| = 1 goes to the nonnegative side
        let p = IntPred::mod_eq(2, 1);
        assert_eq!(p.sample(), Some(1));
    }
}
