//! Concrete syntax for algebra specs, predicates, regexes, formulas,
//! ultimately periodic words, and transition terms.
//!
//! One token stream serves all the grammars. Propositional predicates use
//! atom identifiers with `& | ! ( ) true false`; integer predicates are
//! bracketed atoms `[x<c]`, `[x>c]`, `[x%m==r]`; the anchor predicate is
//! `[#]`. Regexes live inside `{ ... }` blocks with `;` concatenation, `|`
//! union, `&&` intersection, postfix `*` and `+`, `~` complement and `()`
//! for the empty word. Formula syntax has prefix `X F G`, right-associative
//! infix `U R`, `! & | ->`, suffix implications `{R} <>-> f` and
//! `{R} []-> f`, and the closures `cl{R}`, `ncl{R}`, `omega{R}`.

use crate::algebra::{Algebra, Letter, Pred};
use crate::automata::UpWord;
use crate::ere::Regex;
use crate::error::{Error, Result};
use crate::rltl::Formula;
use crate::tterm::{Dnf, Tt};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    /// Contents of a bracketed integer atom, e.g. `x<5`.
    IntAtom(String),
    /// `[#]`
    HashAtom,
    /// bare `#` (the anchor letter in words)
    Hash,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Amp,
    AmpAmp,
    Pipe,
    Bang,
    Star,
    Plus,
    Tilde,
    Semi,
    Comma,
    Arrow,
    EImpl,
    UImpl,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            '{' => {
                toks.push((Tok::LBrace, i));
                i += 1;
            }
            '}' => {
                toks.push((Tok::RBrace, i));
                i += 1;
            }
            '|' => {
                toks.push((Tok::Pipe, i));
                i += 1;
            }
            '!' => {
                toks.push((Tok::Bang, i));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, i));
                i += 1;
            }
            '+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            '~' => {
                toks.push((Tok::Tilde, i));
                i += 1;
            }
            ';' => {
                toks.push((Tok::Semi, i));
                i += 1;
            }
            ',' => {
                toks.push((Tok::Comma, i));
                i += 1;
            }
            '#' => {
                toks.push((Tok::Hash, i));
                i += 1;
            }
            '&' => {
                if bytes.get(i + 1) == Some(&b'&') {
                    toks.push((Tok::AmpAmp, i));
                    i += 2;
                } else {
                    toks.push((Tok::Amp, i));
                    i += 1;
                }
            }
            '-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    toks.push((Tok::Arrow, i));
                    i += 2;
                } else if bytes.get(i + 1).is_some_and(|b| b.is_ascii_digit()) {
                    let start = i;
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let n: i64 = src[start..i]
                        .parse()
                        .map_err(|_| Error::parse(start, "integer out of range"))?;
                    toks.push((Tok::Int(n), start));
                } else {
                    return Err(Error::parse(i, "expected `->` or a number after `-`"));
                }
            }
            '<' => {
                if src[i..].starts_with("<>->") {
                    toks.push((Tok::EImpl, i));
                    i += 4;
                } else {
                    return Err(Error::parse(i, "expected `<>->`"));
                }
            }
            '[' => {
                if src[i..].starts_with("[#]") {
                    toks.push((Tok::HashAtom, i));
                    i += 3;
                } else if src[i..].starts_with("[]->") {
                    toks.push((Tok::UImpl, i));
                    i += 4;
                } else {
                    let close = src[i..]
                        .find(']')
                        .ok_or_else(|| Error::parse(i, "unterminated `[`"))?;
                    toks.push((Tok::IntAtom(src[i + 1..i + close].to_string()), i));
                    i += close + 1;
                }
            }
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: i64 = src[start..i]
                    .parse()
                    .map_err(|_| Error::parse(start, "integer out of range"))?;
                toks.push((Tok::Int(n), start));
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((Tok::Ident(src[start..i].to_string()), start));
            }
            _ => return Err(Error::parse(i, format!("unexpected character `{c}`"))),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    alg: &'a Algebra,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn new(alg: &'a Algebra, src: &str) -> Result<Parser<'a>> {
        Ok(Parser { alg, toks: lex(src)?, pos: 0, end: src.len() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, p)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &Tok, what: &str) -> Result<()> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(Error::parse(self.here(), format!("expected {what}")))
        }
    }

    fn done(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(Error::parse(self.here(), format!("unexpected trailing `{t:?}`"))),
        }
    }

    // ---- predicates -----------------------------------------------------

    fn pred(&mut self) -> Result<Pred> {
        let mut acc = self.pred_and()?;
        while self.eat(&Tok::Pipe) {
            acc = acc.or(&self.pred_and()?);
        }
        Ok(acc)
    }

    fn pred_and(&mut self) -> Result<Pred> {
        let mut acc = self.pred_unary()?;
        while self.eat(&Tok::Amp) {
            acc = acc.and(&self.pred_unary()?);
        }
        Ok(acc)
    }

    fn pred_unary(&mut self) -> Result<Pred> {
        if self.eat(&Tok::Bang) {
            return Ok(self.pred_unary()?.not());
        }
        if self.eat(&Tok::LParen) {
            let p = self.pred()?;
            self.expect(&Tok::RParen, "`)`")?;
            return Ok(p);
        }
        self.pred_atom()
    }

    fn pred_atom(&mut self) -> Result<Pred> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Ident(name)) => match name.as_str() {
                "true" => Ok(self.alg.top()),
                "false" => Ok(self.alg.bot()),
                _ => self.alg.atom(&name).map_err(|e| Error::parse(at, e.to_string())),
            },
            Some(Tok::IntAtom(inner)) => int_atom_pred(self.alg, &inner, at),
            Some(Tok::HashAtom) => {
                self.alg.anchor_pred().map_err(|e| Error::parse(at, e.to_string()))
            }
            _ => Err(Error::parse(at, "expected a predicate")),
        }
    }

    // ---- regexes ---------------------------------------------------------

    fn regex(&mut self) -> Result<Regex> {
        let mut acc = self.regex_inter()?;
        while self.eat(&Tok::Pipe) {
            acc = Regex::union(&acc, &self.regex_inter()?);
        }
        Ok(acc)
    }

    fn regex_inter(&mut self) -> Result<Regex> {
        let mut acc = self.regex_concat()?;
        while self.eat(&Tok::AmpAmp) {
            acc = Regex::inter(&acc, &self.regex_concat()?);
        }
        Ok(acc)
    }

    fn regex_concat(&mut self) -> Result<Regex> {
        let mut acc = self.regex_postfix()?;
        while self.eat(&Tok::Semi) {
            acc = Regex::concat(&acc, &self.regex_postfix()?);
        }
        Ok(acc)
    }

    fn regex_postfix(&mut self) -> Result<Regex> {
        let mut acc = self.regex_prefix()?;
        loop {
            if self.eat(&Tok::Star) {
                acc = Regex::star(&acc);
            } else if self.eat(&Tok::Plus) {
                acc = Regex::plus(&acc);
            } else {
                return Ok(acc);
            }
        }
    }

    fn regex_prefix(&mut self) -> Result<Regex> {
        if self.eat(&Tok::Tilde) {
            return Ok(Regex::compl(&self.regex_prefix()?));
        }
        self.regex_atom()
    }

    fn regex_atom(&mut self) -> Result<Regex> {
        if self.eat(&Tok::LParen) {
            if self.eat(&Tok::RParen) {
                return Ok(Regex::eps(self.alg));
            }
            let r = self.regex()?;
            self.expect(&Tok::RParen, "`)`")?;
            return Ok(r);
        }
        // a predicate without top-level `|`; plain `|` is regex union
        let mut acc = self.regex_pred_unary()?;
        while self.eat(&Tok::Amp) {
            acc = acc.and(&self.regex_pred_unary()?);
        }
        Ok(Regex::pred(acc))
    }

    fn regex_pred_unary(&mut self) -> Result<Pred> {
        if self.eat(&Tok::Bang) {
            // after `!` the full predicate grammar applies, parens included
            return Ok(self.pred_unary()?.not());
        }
        self.pred_atom()
    }

    // ---- formulas ---------------------------------------------------------

    fn formula(&mut self) -> Result<Formula> {
        self.temporal()
    }

    fn temporal(&mut self) -> Result<Formula> {
        if self.peek() == Some(&Tok::LBrace) {
            self.bump();
            let r = self.regex()?;
            self.expect(&Tok::RBrace, "`}`")?;
            let at = self.here();
            return match self.bump() {
                Some(Tok::EImpl) => Ok(Formula::exists_suffix(&r, &self.temporal()?)),
                Some(Tok::UImpl) => Ok(Formula::forall_suffix(&r, &self.temporal()?)),
                _ => Err(Error::parse(at, "expected `<>->` or `[]->` after `{R}`")),
            };
        }
        let lhs = self.implication()?;
        if let Some(Tok::Ident(name)) = self.peek() {
            match name.as_str() {
                "U" => {
                    self.bump();
                    let rhs = self.temporal()?;
                    return Ok(Formula::until(&lhs, &rhs));
                }
                "R" => {
                    self.bump();
                    let rhs = self.temporal()?;
                    return Ok(Formula::release(&lhs, &rhs));
                }
                _ => {}
            }
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula> {
        let lhs = self.disjunction()?;
        if self.eat(&Tok::Arrow) {
            let rhs = self.implication()?;
            return Ok(Formula::implies(&lhs, &rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula> {
        let mut acc = self.conjunction()?;
        while self.eat(&Tok::Pipe) {
            acc = Formula::or(&acc, &self.conjunction()?);
        }
        Ok(acc)
    }

    fn conjunction(&mut self) -> Result<Formula> {
        let mut acc = self.unary()?;
        while self.eat(&Tok::Amp) {
            acc = Formula::and(&acc, &self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula> {
        match self.peek() {
            Some(Tok::Bang) => {
                self.bump();
                Ok(Formula::not(&self.unary()?))
            }
            Some(Tok::Ident(name)) => match name.as_str() {
                "X" => {
                    self.bump();
                    Ok(Formula::next(&self.unary()?))
                }
                "F" => {
                    self.bump();
                    Ok(Formula::finally(&self.unary()?))
                }
                "G" => {
                    self.bump();
                    Ok(Formula::globally(&self.unary()?))
                }
                "cl" | "ncl" | "omega" => {
                    let kind = name.clone();
                    self.bump();
                    self.expect(&Tok::LBrace, "`{`")?;
                    let r = self.regex()?;
                    self.expect(&Tok::RBrace, "`}`")?;
                    Ok(match kind.as_str() {
                        "cl" => Formula::weak_closure(&r),
                        "ncl" => Formula::neg_weak_closure(&r),
                        _ => Formula::omega_closure(&r),
                    })
                }
                _ => self.formula_atom(),
            },
            _ => self.formula_atom(),
        }
    }

    fn formula_atom(&mut self) -> Result<Formula> {
        if self.eat(&Tok::LParen) {
            let f = self.formula()?;
            self.expect(&Tok::RParen, "`)`")?;
            return Ok(f);
        }
        Ok(Formula::pred(self.pred_atom()?))
    }

    // ---- words -------------------------------------------------------------

    fn letters(&mut self, stop: &Tok) -> Result<Vec<Letter>> {
        let mut out = Vec::new();
        if self.peek().is_none() || self.peek() == Some(stop) {
            return Ok(out);
        }
        loop {
            out.push(self.letter()?);
            if !self.eat(&Tok::Comma) {
                return Ok(out);
            }
        }
    }

    fn letter(&mut self) -> Result<Letter> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => {
                let l = Letter::Int(n);
                self.alg.check_letter(&l).map_err(|e| Error::parse(at, e.to_string()))?;
                Ok(l)
            }
            Some(Tok::Hash) => {
                let l = Letter::Anchor;
                self.alg.check_letter(&l).map_err(|e| Error::parse(at, e.to_string()))?;
                Ok(l)
            }
            Some(Tok::LBrace) => {
                let atoms = self
                    .alg
                    .atoms()
                    .ok_or_else(|| Error::parse(at, "set letters need a propositional algebra"))?
                    .to_vec();
                let mut mask = 0u16;
                loop {
                    match self.bump() {
                        Some(Tok::RBrace) => break,
                        Some(Tok::Ident(name)) => {
                            let i = atoms
                                .iter()
                                .position(|a| *a == name)
                                .ok_or_else(|| Error::parse(at, format!("unknown atom `{name}`")))?;
                            mask |= 1 << i;
                        }
                        _ => return Err(Error::parse(at, "expected an atom or `}`")),
                    }
                }
                Ok(Letter::Props(mask))
            }
            _ => Err(Error::parse(at, "expected a letter")),
        }
    }

    // ---- transition terms and DNFs ------------------------------------------

    fn dnf(&mut self) -> Result<Dnf<usize>> {
        self.expect(&Tok::LBrace, "`{`")?;
        if self.eat(&Tok::RBrace) {
            return Ok(Dnf::bot());
        }
        let mut members = Vec::new();
        loop {
            self.expect(&Tok::LBrace, "`{`")?;
            let mut member = std::collections::BTreeSet::new();
            if !self.eat(&Tok::RBrace) {
                loop {
                    let at = self.here();
                    match self.bump() {
                        Some(Tok::Int(n)) if n >= 0 => {
                            member.insert(n as usize);
                        }
                        _ => return Err(Error::parse(at, "expected a state id")),
                    }
                    if self.eat(&Tok::RBrace) {
                        break;
                    }
                    self.expect(&Tok::Comma, "`,`")?;
                }
            }
            members.push(member);
            if self.eat(&Tok::RBrace) {
                return Ok(Dnf::from_members(members));
            }
            self.expect(&Tok::Comma, "`,`")?;
        }
    }

    fn term(&mut self) -> Result<Tt<Dnf<usize>>> {
        self.expect(&Tok::LParen, "`(`")?;
        let at = self.here();
        match self.bump() {
            Some(Tok::Ident(k)) if k == "leaf" => {
                let d = self.dnf()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(Tt::leaf(d))
            }
            Some(Tok::Ident(k)) if k == "if" => {
                let cond = self.pred()?;
                let then = self.term()?;
                let els = self.term()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(Tt::ite(cond, then, els))
            }
            _ => Err(Error::parse(at, "expected `if` or `leaf`")),
        }
    }
}

/// `x<c`, `x>c` or `x%m==r` between brackets.
fn int_atom_pred(alg: &Algebra, inner: &str, at: usize) -> Result<Pred> {
    let s: String = inner.chars().filter(|c| !c.is_whitespace()).collect();
    let body = s
        .strip_prefix('x')
        .ok_or_else(|| Error::parse(at, "integer atoms start with `x`"))?;
    let num = |t: &str| -> Result<i64> {
        t.parse().map_err(|_| Error::parse(at, format!("bad number `{t}`")))
    };
    let p = if let Some(t) = body.strip_prefix('<') {
        alg.int_lt(num(t)?)
    } else if let Some(t) = body.strip_prefix('>') {
        alg.int_gt(num(t)?)
    } else if let Some(t) = body.strip_prefix('%') {
        let (m, r) = t
            .split_once("==")
            .ok_or_else(|| Error::parse(at, "expected `[x%m==r]`"))?;
        let m = num(m)?;
        if m < 1 {
            return Err(Error::parse(at, "modulus must be at least 1"));
        }
        alg.int_mod_eq(m, num(r)?)
    } else {
        return Err(Error::parse(at, "expected `<`, `>` or `%` after `x`"));
    };
    p.map_err(|e| Error::parse(at, e.to_string()))
}

/// `prop:a,b,c` | `int` | `anchor(<spec>)`
pub fn parse_algebra(src: &str) -> Result<Algebra> {
    let src = src.trim();
    if src == "int" {
        return Ok(Algebra::int());
    }
    if let Some(rest) = src.strip_prefix("prop:") {
        let atoms: Vec<&str> = rest
            .split(',')
            .map(|s| s.trim())
            .filter(|s| !s.is_empty())
            .collect();
        return Algebra::prop(&atoms);
    }
    if let Some(rest) = src.strip_prefix("anchor(") {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::parse(src.len(), "expected `)`"))?;
        return parse_algebra(inner)?.with_anchor();
    }
    Err(Error::parse(0, format!("unknown algebra spec `{src}`")))
}

pub fn parse_pred(alg: &Algebra, src: &str) -> Result<Pred> {
    let mut p = Parser::new(alg, src)?;
    let out = p.pred()?;
    p.done()?;
    Ok(out)
}

pub fn parse_regex(alg: &Algebra, src: &str) -> Result<Regex> {
    let mut p = Parser::new(alg, src)?;
    let out = p.regex()?;
    p.done()?;
    Ok(out)
}

pub fn parse_formula(alg: &Algebra, src: &str) -> Result<Formula> {
    let mut p = Parser::new(alg, src)?;
    let out = p.formula()?;
    p.done()?;
    Ok(out)
}

/// Word format `u ; v` with comma-separated letters.
pub fn parse_word(alg: &Algebra, src: &str) -> Result<UpWord> {
    let mut p = Parser::new(alg, src)?;
    let prefix = p.letters(&Tok::Semi)?;
    p.expect(&Tok::Semi, "`;` between prefix and cycle")?;
    let cycle = p.letters(&Tok::Semi)?;
    p.done()?;
    UpWord::new(prefix, cycle)
}

pub fn parse_term(alg: &Algebra, src: &str) -> Result<Tt<Dnf<usize>>> {
    let mut p = Parser::new(alg, src)?;
    let out = p.term()?;
    p.done()?;
    Ok(out)
}

pub fn parse_dnf(alg: &Algebra, src: &str) -> Result<Dnf<usize>> {
    let mut p = Parser::new(alg, src)?;
    let out = p.dnf()?;
    p.done()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rltl;

    #[test]
    fn algebra_specs() {
        assert!(parse_algebra("int").is_ok());
        let a = parse_algebra("prop:a,b").unwrap();
        assert_eq!(a.atoms().unwrap().len(), 2);
        let anchored = parse_algebra("anchor(prop:a)").unwrap();
        assert!(anchored.is_anchored());
        assert!(parse_algebra("anchor(anchor(int))").is_err());
        assert!(parse_algebra("bogus").is_err());
    }

    #[test]
    fn intro_formula_parses() {
        let alg = Algebra::int();
        let f = parse_formula(&alg, "G([x>0]) & ([x%2==0] U [x%3==0])").unwrap();
        let phi = Formula::globally(&Formula::pred(alg.int_gt(0).unwrap()));
        let psi = Formula::until(
            &Formula::pred(alg.int_mod_eq(2, 0).unwrap()),
            &Formula::pred(alg.int_mod_eq(3, 0).unwrap()),
        );
        assert_eq!(f, Formula::and(&phi, &psi));
    }

    #[test]
    fn true_is_top_formula() {
        let alg = Algebra::prop(&["p"]).unwrap();
        assert!(parse_formula(&alg, "true").unwrap().is_tt());
        assert!(parse_formula(&alg, "false").unwrap().is_ff());
    }

    #[test]
    fn suffix_implication_round_trip() {
        let alg = Algebra::int();
        let f = parse_formula(&alg, "{ [x>0] ; [x>0]* } <>-> G [x>0]").unwrap();
        let printed = f.to_string();
        let again = parse_formula(&alg, &printed).unwrap();
        assert_eq!(f, again);
        assert_eq!(printed, again.to_string());
    }

    #[test]
    fn formula_print_parse_identity() {
        let alg = Algebra::prop(&["p", "q"]).unwrap();
        for src in [
            "p U (q R p)",
            "G(F p & F !q)",
            "!(p -> X q)",
            "cl{ (p ; true)* ; q }",
            "ncl{ p+ }",
            "omega{ p ; q }",
            "{ ~(p ; q) && p* } []-> F q",
            "p & q | !p",
        ] {
            let f = parse_formula(&alg, src).unwrap();
            let printed = f.to_string();
            let again = parse_formula(&alg, &printed).unwrap();
            assert_eq!(f, again, "round trip through `{printed}`");
            assert_eq!(printed, again.to_string());
        }
    }

    #[test]
    fn words_parse_and_print() {
        let alg = Algebra::int();
        let w = parse_word(&alg, "2,4,3;1").unwrap();
        assert_eq!(w.prefix().len(), 3);
        assert_eq!(w.cycle().len(), 1);
        assert_eq!(w.display(&alg), "2,4,3;1");

        let b = Algebra::prop(&["p", "q"]).unwrap();
        let w2 = parse_word(&b, ";{p}").unwrap();
        assert!(w2.prefix().is_empty());
        assert_eq!(w2.display(&b), ";{p}");
        let w3 = parse_word(&b, "{p},{};{p q}").unwrap();
        assert_eq!(w3.display(&b), "{p},{};{p q}");
        assert_eq!(parse_word(&b, &w3.display(&b)).unwrap(), w3);
        assert!(parse_word(&b, "{p};").is_err());
        assert!(parse_word(&b, "{r};{p}").is_err());
    }

    #[test]
    fn anchored_words_and_preds() {
        let alg = parse_algebra("anchor(prop:a)").unwrap();
        let w = parse_word(&alg, "{a},#;{}").unwrap();
        assert_eq!(*w.letter(1), Letter::Anchor);
        let h = parse_pred(&alg, "[#]").unwrap();
        assert!(h.denotes(&Letter::Anchor));
        let na = parse_pred(&alg, "![#]").unwrap();
        assert!(!na.denotes(&Letter::Anchor));
        assert_eq!(parse_pred(&alg, &na.to_string()).unwrap(), na);
    }

    #[test]
    fn regex_round_trip() {
        let alg = Algebra::prop(&["p", "q"]).unwrap();
        for src in ["(p ; q)+", "p* ; q", "~p && (p | q)", "()", "p & !q", "~(p ; q)"] {
            let r = parse_regex(&alg, src).unwrap();
            let printed = r.to_string();
            assert_eq!(parse_regex(&alg, &printed).unwrap(), r, "via `{printed}`");
        }
    }

    #[test]
    fn formula_with_derived_operators() {
        let alg = Algebra::prop(&["p"]).unwrap();
        let f = parse_formula(&alg, "F p").unwrap();
        let p = Formula::pred(alg.atom("p").unwrap());
        assert_eq!(f, Formula::finally(&p));
        assert_eq!(f.to_string(), "F p");
        let g = parse_formula(&alg, "G p").unwrap();
        assert_eq!(g, Formula::globally(&p));
        let imp = parse_formula(&alg, "p -> X p").unwrap();
        assert_eq!(imp, Formula::implies(&p, &Formula::next(&p)));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let alg = Algebra::prop(&["p"]).unwrap();
        match parse_formula(&alg, "p U ") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected a parse error, got {other:?}"),
        }
        assert!(parse_formula(&alg, "q").is_err());
        assert!(parse_formula(&alg, "[x<1]").is_err());
    }

    #[test]
    fn term_and_dnf_syntax() {
        let alg = Algebra::prop(&["p"]).unwrap();
        let d = parse_dnf(&alg, "{{0,1},{2}}").unwrap();
        assert_eq!(d.members().count(), 2);
        assert!(parse_dnf(&alg, "{}").unwrap().is_bot());
        let t = parse_term(&alg, "(if p (leaf {{0}}) (leaf {}))").unwrap();
        let p = alg.atom("p").unwrap();
        assert_eq!(t, Tt::ite(p, Tt::leaf(Dnf::unit(0)), Tt::leaf(Dnf::bot())));
    }

    #[test]
    fn deriv_of_parsed_intro_formula_has_three_conditions() {
        let alg = Algebra::int();
        let f = parse_formula(&alg, "G([x>0]) & ([x%2==0] U [x%3==0])").unwrap();
        let (conds, _) = rltl::Deriver::new().deriv(&f).collect();
        assert_eq!(conds.len(), 3);
    }
}
