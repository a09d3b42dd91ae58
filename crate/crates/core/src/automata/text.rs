//! Automaton text format and DOT export.
//!
//! The text format is line-based UTF-8:
//!
//! ```text
//! algebra: prop:a
//! states: 0=G(F a & F !a),1=F !a,2=F a,3=true
//! init: {{0}}
//! accepting: 0,3
//! delta 0: (if a (leaf {{0,1}}) (leaf {{0,2}}))
//! ```
//!
//! Terms are `(if <pred> <term> <term>)` or `(leaf <dnf>)`, DNFs are `{}`
//! or `{{id,...},...}`. State labels may not contain commas or newlines.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::parse;
use crate::tterm::{Dnf, Tt};

use super::{Aba, StateId};

fn render_term(t: &Tt<Dnf<StateId>>, out: &mut String) {
    match t {
        Tt::Leaf(d) => {
            out.push_str("(leaf ");
            let _ = write!(out, "{d}");
            out.push(')');
        }
        Tt::Ite { cond, then, els } => {
            let _ = write!(out, "(if {cond} ");
            render_term(then, out);
            out.push(' ');
            render_term(els, out);
            out.push(')');
        }
    }
}

pub fn render_text(m: &Aba) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "algebra: {}", m.algebra());
    let states: Vec<String> = (0..m.state_count())
        .map(|q| format!("{q}={}", m.label(q)))
        .collect();
    let _ = writeln!(out, "states: {}", states.join(","));
    let _ = writeln!(out, "init: {}", m.init());
    let acc: Vec<String> = m.accepting().iter().map(|q| q.to_string()).collect();
    let _ = writeln!(out, "accepting: {}", acc.join(","));
    for q in 0..m.state_count() {
        let _ = write!(out, "delta {q}: ");
        render_term(m.delta(q), &mut out);
        out.push('\n');
    }
    out
}

pub fn parse_automaton(src: &str) -> Result<Aba> {
    let mut alg = None;
    let mut labels: Vec<String> = Vec::new();
    let mut init = None;
    let mut accepting: BTreeSet<StateId> = BTreeSet::new();
    let mut delta_lines: Vec<(StateId, String)> = Vec::new();
    for (lineno, raw) in src.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| Error::parse(lineno, msg.to_string());
        if let Some(rest) = line.strip_prefix("algebra:") {
            alg = Some(parse::parse_algebra(rest.trim())?);
        } else if let Some(rest) = line.strip_prefix("states:") {
            for item in rest.trim().split(',') {
                if item.is_empty() {
                    continue;
                }
                let (id, label) = item
                    .split_once('=')
                    .ok_or_else(|| err("expected `<id>=<label>`"))?;
                let id: usize = id.trim().parse().map_err(|_| err("bad state id"))?;
                if id != labels.len() {
                    return Err(err("state ids must be consecutive from 0"));
                }
                labels.push(label.to_string());
            }
        } else if let Some(rest) = line.strip_prefix("init:") {
            let a = alg.as_ref().ok_or_else(|| err("algebra line must come first"))?;
            init = Some(parse::parse_dnf(a, rest.trim())?);
        } else if let Some(rest) = line.strip_prefix("accepting:") {
            for item in rest.trim().split(',') {
                let item = item.trim();
                if item.is_empty() {
                    continue;
                }
                accepting.insert(item.parse().map_err(|_| err("bad state id"))?);
            }
        } else if let Some(rest) = line.strip_prefix("delta") {
            let (id, term) = rest
                .split_once(':')
                .ok_or_else(|| err("expected `delta <id>: <term>`"))?;
            let id: usize = id.trim().parse().map_err(|_| err("bad state id"))?;
            delta_lines.push((id, term.to_string()));
        } else {
            return Err(err("unrecognized line"));
        }
    }
    let alg = alg.ok_or_else(|| Error::parse(0, "missing algebra line"))?;
    let init = init.ok_or_else(|| Error::parse(0, "missing init line"))?;
    let n = labels.len();
    let mut delta: Vec<Option<Tt<Dnf<StateId>>>> = vec![None; n];
    for (id, term) in delta_lines {
        if id >= n {
            return Err(Error::parse(0, format!("delta for unknown state {id}")));
        }
        delta[id] = Some(parse::parse_term(&alg, &term)?);
    }
    let delta: Vec<Tt<Dnf<StateId>>> = delta
        .into_iter()
        .enumerate()
        .map(|(q, t)| t.ok_or_else(|| Error::parse(0, format!("missing delta for state {q}"))))
        .collect::<Result<_>>()?;
    let check_dnf = |d: &Dnf<StateId>| -> Result<()> {
        for member in d.members() {
            for &q in member {
                if q >= n {
                    return Err(Error::parse(0, format!("unknown state {q} referenced")));
                }
            }
        }
        Ok(())
    };
    check_dnf(&init)?;
    for t in &delta {
        let (_, leaves) = t.collect();
        for leaf in leaves {
            check_dnf(&leaf)?;
        }
    }
    for &q in &accepting {
        if q >= n {
            return Err(Error::parse(0, format!("unknown accepting state {q}")));
        }
    }
    Ok(Aba::new(alg, labels, init, delta, accepting))
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT export. Singleton leaf members become plain edges, larger members
/// go through a small conjunction junction node.
pub fn render_dot(m: &Aba) -> String {
    let mut out = String::new();
    out.push_str("digraph automaton {\n  rankdir=LR;\n");
    for q in 0..m.state_count() {
        let shape = if m.is_accepting(q) { "doublecircle" } else { "circle" };
        let _ = writeln!(
            out,
            "  s{q} [label=\"{}\", shape={shape}];",
            dot_escape(m.label(q))
        );
    }
    let mut junction = 0usize;
    let emit_target = |out: &mut String,
                           junction: &mut usize,
                           from: String,
                           guard: Option<String>,
                           member: &BTreeSet<StateId>| {
        let label = guard.map(|g| format!(" [label=\"{}\"]", dot_escape(&g))).unwrap_or_default();
        match member.len() {
            0 => {
                let _ = writeln!(out, "  t{junction} [label=\"\u{22a4}\", shape=plaintext];");
                let _ = writeln!(out, "  {from} -> t{junction}{label};");
                *junction += 1;
            }
            1 => {
                let q = member.iter().next().unwrap();
                let _ = writeln!(out, "  {from} -> s{q}{label};");
            }
            _ => {
                let _ = writeln!(out, "  j{junction} [label=\"\u{2227}\", shape=none, width=0, height=0];");
                let _ = writeln!(out, "  {from} -> j{junction}{label};");
                for q in member {
                    let _ = writeln!(out, "  j{junction} -> s{q};");
                }
                *junction += 1;
            }
        }
    };
    let _ = writeln!(out, "  start [shape=point];");
    for member in m.init().members() {
        emit_target(&mut out, &mut junction, "start".to_string(), None, member);
    }
    for q in 0..m.state_count() {
        for (guard, leaf) in m.guarded(q) {
            for member in leaf.members() {
                emit_target(
                    &mut out,
                    &mut junction,
                    format!("s{q}"),
                    Some(guard.to_string()),
                    member,
                );
            }
        }
    }
    out.push_str("}\n");
    out
}
