//! The concrete machine zoo and the normal-form acceptor.

use std::collections::{BTreeMap, HashMap};

use super::{union, CounterAutomaton, Pda, StateId};
use crate::normal_form::tables::NfTables;
use crate::words::Word;

#[derive(Debug, Clone)]
pub enum ZooMachine {
    Counter(CounterAutomaton),
    Pda(Pda),
}

/// The named machines used throughout: counter machines for a^n b^n a^n,
/// a^m b^m a^n b^n, a^n b^n, a^n b^n c^m and a^m b^n c^n, and PDAs for
/// a^n b^n and w w^R. Every exponent ranges over the naturals including 0.
pub fn zoo() -> BTreeMap<&'static str, ZooMachine> {
    let mut out = BTreeMap::new();
    out.insert("z2_anbnan", ZooMachine::Counter(z2_anbnan()));
    out.insert("z2_ambmanbn", ZooMachine::Counter(z2_ambmanbn()));
    out.insert("c1_anbn", ZooMachine::Counter(c1_anbn()));
    out.insert("c1_anbncm", ZooMachine::Counter(c1_anbncm()));
    out.insert("c1_ambncn", ZooMachine::Counter(c1_ambncn()));
    out.insert("pda_anbn", ZooMachine::Pda(pda_anbn()));
    out.insert("pda_ww_reverse", ZooMachine::Pda(pda_ww_reverse()));
    out
}

/// Each zoo machine with its alphabet and defining predicate.
pub fn zoo_cases() -> Vec<(&'static str, Vec<char>, fn(&[char]) -> bool)> {
    vec![
        ("z2_anbnan", vec!['a', 'b'], is_anbnan as fn(&[char]) -> bool),
        ("z2_ambmanbn", vec!['a', 'b'], is_ambmanbn),
        ("c1_anbn", vec!['a', 'b'], is_anbn),
        ("c1_anbncm", vec!['a', 'b', 'c'], is_anbncm),
        ("c1_ambncn", vec!['a', 'b', 'c'], is_ambncn),
        ("pda_anbn", vec!['a', 'b'], is_anbn),
        ("pda_ww_reverse", vec!['a', 'b', 'c'], is_ww_reverse),
    ]
}

fn split_runs(w: &[char]) -> Vec<(char, usize)> {
    let mut out: Vec<(char, usize)> = Vec::new();
    for &c in w {
        match out.last_mut() {
            Some((l, n)) if *l == c => *n += 1,
            _ => out.push((c, 1)),
        }
    }
    out
}

pub fn is_anbn(w: &[char]) -> bool {
    let n = w.len() / 2;
    w.len() % 2 == 0 && w[..n].iter().all(|&c| c == 'a') && w[n..].iter().all(|&c| c == 'b')
}

pub fn is_anbnan(w: &[char]) -> bool {
    if w.len() % 3 != 0 {
        return false;
    }
    let n = w.len() / 3;
    w[..n].iter().all(|&c| c == 'a')
        && w[n..2 * n].iter().all(|&c| c == 'b')
        && w[2 * n..].iter().all(|&c| c == 'a')
}

pub fn is_ambmanbn(w: &[char]) -> bool {
    (0..=w.len() / 2).any(|m| {
        w[..m].iter().all(|&c| c == 'a')
            && w[m..2 * m].iter().all(|&c| c == 'b')
            && is_anbn(&w[2 * m..])
    })
}

pub fn is_anbncm(w: &[char]) -> bool {
    match split_runs(w).as_slice() {
        [] => true,
        [('c', _)] => true,
        [('a', n), ('b', m)] => n == m,
        [('a', n), ('b', m), ('c', _)] => n == m,
        _ => false,
    }
}

pub fn is_ambncn(w: &[char]) -> bool {
    match split_runs(w).as_slice() {
        [] => true,
        [('a', _)] => true,
        [('b', n), ('c', m)] => n == m,
        [('a', _), ('b', n), ('c', m)] => n == m,
        _ => false,
    }
}

pub fn is_ww_reverse(w: &[char]) -> bool {
    w.len() % 2 == 0 && (0..w.len() / 2).all(|i| w[i] == w[w.len() - 1 - i])
}

fn z2_anbnan() -> CounterAutomaton {
    let mut m = CounterAutomaton::new(2);
    let q0 = m.add_state("q0");
    let q1 = m.add_state("q1");
    let q2 = m.add_state("q2");
    m.start = q0;
    m.accepts.insert(q2);
    m.add_edge(q0, Some('a'), vec![1, 1], q0);
    m.add_edge(q0, None, vec![0, 0], q1);
    m.add_edge(q1, Some('b'), vec![-1, 0], q1);
    m.add_edge(q1, None, vec![0, 0], q2);
    m.add_edge(q2, Some('a'), vec![0, -1], q2);
    m
}

fn z2_ambmanbn() -> CounterAutomaton {
    let mut m = CounterAutomaton::new(2);
    let q0 = m.add_state("q0");
    let q1 = m.add_state("q1");
    let q2 = m.add_state("q2");
    let q3 = m.add_state("q3");
    m.start = q0;
    m.accepts.insert(q3);
    m.add_edge(q0, Some('a'), vec![1, 0], q0);
    m.add_edge(q0, None, vec![0, 0], q1);
    m.add_edge(q1, Some('b'), vec![-1, 0], q1);
    m.add_edge(q1, None, vec![0, 0], q2);
    m.add_edge(q2, Some('a'), vec![0, 1], q2);
    m.add_edge(q2, None, vec![0, 0], q3);
    m.add_edge(q3, Some('b'), vec![0, -1], q3);
    m
}

fn c1_anbn() -> CounterAutomaton {
    let mut m = CounterAutomaton::new(1);
    let q0 = m.add_state("q0");
    let q1 = m.add_state("q1");
    m.start = q0;
    m.accepts.insert(q1);
    m.add_edge(q0, Some('a'), vec![1], q0);
    m.add_edge(q0, None, vec![0], q1);
    m.add_edge(q1, Some('b'), vec![-1], q1);
    m
}

fn c1_anbncm() -> CounterAutomaton {
    let mut m = c1_anbn();
    let q1 = 1;
    let q2 = m.add_state("q2");
    m.add_edge(q1, None, vec![0], q2);
    m.add_edge(q2, Some('c'), vec![0], q2);
    m.accepts = [q2].into();
    m
}

fn c1_ambncn() -> CounterAutomaton {
    let mut m = CounterAutomaton::new(1);
    let q0 = m.add_state("q0");
    let q1 = m.add_state("q1");
    let q2 = m.add_state("q2");
    m.start = q0;
    m.accepts.insert(q2);
    m.add_edge(q0, Some('a'), vec![0], q0);
    m.add_edge(q0, None, vec![0], q1);
    m.add_edge(q1, Some('b'), vec![1], q1);
    m.add_edge(q1, None, vec![0], q2);
    m.add_edge(q2, Some('c'), vec![-1], q2);
    m
}

fn pda_anbn() -> Pda {
    let mut p = Pda::new();
    let bottom = p.add_stack_symbol("$");
    let one = p.add_stack_symbol("1");
    let s0 = p.add_state("s0");
    let push = p.add_state("push");
    let pop = p.add_state("pop");
    let acc = p.add_state("acc");
    p.start = s0;
    p.accepts.insert(acc);
    p.transitions.push(super::PdaEdge {
        from: s0,
        letter: None,
        pop: None,
        push: Some(bottom),
        to: push,
    });
    p.transitions.push(super::PdaEdge {
        from: push,
        letter: Some('a'),
        pop: None,
        push: Some(one),
        to: push,
    });
    p.transitions.push(super::PdaEdge {
        from: push,
        letter: Some('b'),
        pop: Some(one),
        push: None,
        to: pop,
    });
    p.transitions.push(super::PdaEdge {
        from: pop,
        letter: Some('b'),
        pop: Some(one),
        push: None,
        to: pop,
    });
    for q in [push, pop] {
        p.transitions.push(super::PdaEdge {
            from: q,
            letter: None,
            pop: Some(bottom),
            push: None,
            to: acc,
        });
    }
    p
}

fn pda_ww_reverse() -> Pda {
    let mut p = Pda::new();
    let bottom = p.add_stack_symbol("$");
    let syms: Vec<usize> = ['a', 'b', 'c']
        .iter()
        .map(|c| p.add_stack_symbol(c.to_string()))
        .collect();
    let s0 = p.add_state("s0");
    let left = p.add_state("left");
    let right = p.add_state("right");
    let acc = p.add_state("acc");
    p.start = s0;
    p.accepts.insert(acc);
    p.transitions.push(super::PdaEdge {
        from: s0,
        letter: None,
        pop: None,
        push: Some(bottom),
        to: left,
    });
    for (i, c) in ['a', 'b', 'c'].into_iter().enumerate() {
        p.transitions.push(super::PdaEdge {
            from: left,
            letter: Some(c),
            pop: None,
            push: Some(syms[i]),
            to: left,
        });
        p.transitions.push(super::PdaEdge {
            from: right,
            letter: Some(c),
            pop: Some(syms[i]),
            push: None,
            to: right,
        });
    }
    p.transitions.push(super::PdaEdge {
        from: left,
        letter: None,
        pop: None,
        push: None,
        to: right,
    });
    p.transitions.push(super::PdaEdge {
        from: right,
        letter: None,
        pop: Some(bottom),
        push: None,
        to: acc,
    });
    p
}

// --- the normal-form acceptor ---------------------------------------------

/// Small builder for the hand-made 1-counter family machines.
struct Build {
    m: CounterAutomaton,
}

impl Build {
    fn new() -> Build {
        Build {
            m: CounterAutomaton::new(1),
        }
    }

    fn st(&mut self, name: &str) -> StateId {
        self.m.add_state(name)
    }

    fn edge(&mut self, from: StateId, c: char, d: i64, to: StateId) {
        self.m.add_edge(from, Some(c), vec![d], to);
    }

    /// A t-step whose unit of counter change may be skipped; the
    /// nondeterministic slack realises the inequality between run length and
    /// surrounding t-powers while acceptance still demands counter zero.
    fn skip(&mut self, from: StateId, c: char, d: i64, to: StateId) {
        self.edge(from, c, d, to);
        self.edge(from, c, 0, to);
    }

    fn eps(&mut self, from: StateId, d: i64, to: StateId) {
        self.m.add_edge(from, None, vec![d], to);
    }
}

/// Accepts the normal-form words t^k (N-run) t^m (types X/XN/XNP) whose run
/// has at least one t^-1. The counter adds the leading and trailing t-powers
/// and subtracts a skippable unit per run step, so zero is reachable exactly
/// when k + m <= l.
fn family_x_machine() -> CounterAutomaton {
    let mut b = Build::new();
    let s0 = b.st("x.s0");
    let lead = b.st("x.lead");
    let acc = b.st("x.acc");
    b.m.start = s0;
    b.m.accepts.insert(acc);
    b.edge(s0, 't', 1, lead);
    b.edge(lead, 't', 1, lead);

    let z = b.st("x.z");
    let zo = b.st("x.zo");
    let o = b.st("x.o");
    let r = b.st("x.r");
    let f = b.st("x.f");
    for (sign, a) in [(1i64, 'a'), (-1, 'A')] {
        let tag = if sign > 0 { "p" } else { "m" };
        let a1 = b.st(&format!("x.a1{tag}"));
        let a2 = b.st(&format!("x.a2{tag}"));
        let a3 = b.st(&format!("x.a3{tag}"));
        let q2 = b.st(&format!("x.q2{tag}"));
        let q3 = b.st(&format!("x.q3{tag}"));
        let z2 = b.st(&format!("x.z2{tag}"));
        let z3 = b.st(&format!("x.z3{tag}"));
        b.edge(lead, a, 0, a1);
        b.edge(a1, a, 0, a2);
        b.edge(a2, a, 0, a3);
        b.skip(a2, 'T', -1, q2);
        b.skip(a3, 'T', -1, q3);
        // second entry of the run equal to the start's sign: x10 patterns
        b.edge(q2, a, 0, r);
        b.edge(q3, a, 0, r);
        b.skip(q2, 'T', -1, z2);
        b.skip(q3, 'T', -1, z3);
        // third entry: 20(-1) is forbidden, 30(±1) is fine
        b.edge(z2, a, 0, o);
        b.edge(z3, 'a', 0, o);
        b.edge(z3, 'A', 0, o);
        b.skip(z2, 'T', -1, z);
        b.skip(z3, 'T', -1, z);
        for q in [q2, q3, z2, z3] {
            b.eps(q, 0, acc);
        }
    }
    b.edge(r, 't', 1, f);
    b.skip(r, 'T', -1, zo);
    b.edge(z, 'a', 0, o);
    b.edge(z, 'A', 0, o);
    b.skip(z, 'T', -1, z);
    b.skip(o, 'T', -1, zo);
    b.skip(zo, 'T', -1, z);
    b.edge(o, 't', 1, f);
    b.edge(f, 't', 1, f);
    for q in [r, z, zo, o, f] {
        b.eps(q, 0, acc);
    }
    b.m
}

/// Accepts the normal-form words (N-run) t^k (types N/NP<=); zero is
/// reachable exactly when k <= l.
fn family_n_machine() -> CounterAutomaton {
    let mut b = Build::new();
    let s0 = b.st("n.s0");
    let acc = b.st("n.acc");
    b.m.start = s0;
    b.m.accepts.insert(acc);
    let z = b.st("n.z");
    let zo = b.st("n.zo");
    let o = b.st("n.o");
    let e = b.st("n.e");
    let f = b.st("n.f");
    b.skip(s0, 'T', -1, z);
    for (sign, a) in [(1i64, 'a'), (-1, 'A')] {
        let tag = if sign > 0 { "p" } else { "m" };
        let b1 = b.st(&format!("n.b1{tag}"));
        let b2 = b.st(&format!("n.b2{tag}"));
        let b3 = b.st(&format!("n.b3{tag}"));
        let d = b.st(&format!("n.d{tag}"));
        b.edge(s0, a, 0, b1);
        b.edge(b1, a, 0, b2);
        b.edge(b2, a, 0, b3);
        for q in [b1, b2, b3] {
            b.skip(q, 'T', -1, d);
        }
        b.edge(d, a, 0, e); // same-sign second entry: 110/210/310
        b.skip(d, 'T', -1, z);
        b.eps(d, 0, acc);
    }
    b.edge(z, 'a', 0, o);
    b.edge(z, 'A', 0, o);
    b.skip(z, 'T', -1, z);
    b.skip(o, 'T', -1, zo);
    b.skip(zo, 'T', -1, z);
    b.skip(e, 'T', -1, zo);
    b.edge(o, 't', 1, f);
    b.edge(e, 't', 1, f);
    b.edge(f, 't', 1, f);
    for q in [z, zo, o, e, f] {
        b.eps(q, 0, acc);
    }
    b.m
}

/// Accepts the normal-form words t^-k (P-run) (types P/NP>). Reading is
/// forward, so the machine guesses where the suffix pattern begins; the
/// mandatory final decrement makes the t-exponent strictly positive.
fn family_p_machine() -> CounterAutomaton {
    let mut b = Build::new();
    let s0 = b.st("p.s0");
    let n = b.st("p.n");
    let acc = b.st("p.acc");
    b.m.start = s0;
    b.m.accepts.insert(acc);
    let z = b.st("p.z");
    b.edge(s0, 'T', -1, n);
    b.edge(n, 'T', -1, n);
    b.skip(s0, 't', 1, z);
    b.skip(z, 't', 1, z);
    for (sign, a) in [(1i64, 'a'), (-1, 'A')] {
        let tag = if sign > 0 { "p" } else { "m" };
        let o = b.st(&format!("p.o{tag}"));
        let zo = b.st(&format!("p.zo{tag}"));
        let g2 = b.st(&format!("p.g2{tag}"));
        let g3 = b.st(&format!("p.g3{tag}"));
        let e1 = b.st(&format!("p.e1{tag}"));
        let e2 = b.st(&format!("p.e2{tag}"));
        let e3 = b.st(&format!("p.e3{tag}"));
        b.edge(s0, a, 0, o);
        b.edge(n, a, 0, o);
        b.edge(z, a, 0, o);
        b.skip(o, 't', 1, zo);
        b.skip(zo, 't', 1, z);
        // suffix families: x0(±1..3) via o/g, 011/012/013 via e
        b.edge(o, a, 0, g2);
        b.edge(g2, a, 0, g3);
        b.edge(zo, a, 0, e1);
        b.edge(e1, a, 0, e2);
        b.edge(e2, a, 0, e3);
        for q in [o, zo, g2, g3, e1, e2, e3] {
            b.eps(q, -1, acc);
        }
    }
    b.eps(z, -1, acc);
    b.m
}

/// Accepts the normal-form words t^-k (P-run) t^-m (types PX/NPX). The
/// states remember the sign of the inner entry two levels back, because a
/// final ±2 demands it be 0 or the same sign while a final ±3 does not.
fn family_px_machine() -> CounterAutomaton {
    let mut b = Build::new();
    let s0 = b.st("px.s0");
    let n = b.st("px.n");
    let g = b.st("px.g");
    let acc = b.st("px.acc");
    b.m.start = s0;
    b.m.accepts.insert(acc);
    let zn = b.st("px.zN");
    let zp = b.st("px.zP");
    let zm = b.st("px.zM");
    b.edge(s0, 'T', -1, n);
    b.edge(n, 'T', -1, n);
    b.skip(s0, 't', 1, zn);
    b.skip(zn, 't', 1, zn);
    b.skip(zp, 't', 1, zn);
    b.skip(zm, 't', 1, zn);
    b.edge(g, 'T', -1, g);
    b.eps(g, -1, acc);

    // the four "o" flavours per sign: origin N (prev-prev zero), P, M
    for (sign, a) in [(1i64, 'a'), (-1, 'A')] {
        let tag = if sign > 0 { "p" } else { "m" };
        let o_n = b.st(&format!("px.oN{tag}"));
        let o_same = b.st(&format!("px.oS{tag}"));
        let o_opp = b.st(&format!("px.oO{tag}"));
        let zo = b.st(&format!("px.zo{tag}"));
        let e1 = b.st(&format!("px.e1{tag}"));
        let c2 = b.st(&format!("px.c2{tag}"));
        let c3 = b.st(&format!("px.c3{tag}"));
        let b2 = b.st(&format!("px.b2{tag}"));
        let b3 = b.st(&format!("px.b3{tag}"));
        let d2 = b.st(&format!("px.d2{tag}"));
        b.edge(s0, a, 0, o_n);
        b.edge(n, a, 0, o_n);
        b.edge(zn, a, 0, o_n);
        // from zP: an 'a' continues with matching prev-prev, an 'A' opposes
        let (z_same, z_opp) = if sign > 0 { (zp, zm) } else { (zm, zp) };
        b.edge(z_same, a, 0, o_same);
        b.edge(z_opp, a, 0, o_opp);
        for o in [o_n, o_same, o_opp] {
            b.skip(o, 't', 1, zo);
        }
        b.skip(zo, 't', 1, if sign > 0 { zp } else { zm });
        b.edge(zo, a, 0, e1);
        b.edge(e1, a, 0, c2);
        b.edge(c2, a, 0, c3);
        // a final ±2 is allowed unless the entry two back had the opposite
        // sign; ±3 is always allowed
        b.edge(o_n, a, 0, b2);
        b.edge(o_same, a, 0, b2);
        b.edge(o_opp, a, 0, d2);
        b.edge(b2, a, 0, b3);
        b.edge(d2, a, 0, b3);
        for q in [b2, b3, c2, c3] {
            b.edge(q, 'T', -1, g);
        }
    }
    b.m
}

/// A k = 0 acceptor for a finite word set, as a letter trie.
fn word_trie(tag: &str, words: &[Word]) -> CounterAutomaton {
    let mut m = CounterAutomaton::new(0);
    let root = m.add_state(format!("{tag}.0"));
    m.start = root;
    let mut next: HashMap<(StateId, char), StateId> = HashMap::new();
    for w in words {
        let mut cur = root;
        for &l in w.letters() {
            let c = l.to_char();
            cur = match next.get(&(cur, c)) {
                Some(&id) => id,
                None => {
                    let id = m.add_state(format!("{tag}.{}", m.states.len()));
                    m.add_edge(cur, Some(c), vec![], id);
                    next.insert((cur, c), id);
                    id
                }
            };
        }
        m.accepts.insert(cur);
    }
    m
}

/// Builds the 1-counter acceptor for the normal-form language as the finite
/// union of acceptors for the E words, the short-run tables L1..L4, the
/// boundary sets L1'..L4', and the four long-run family machines.
pub fn build_nf_acceptor() -> CounterAutomaton {
    let t = NfTables::load_default();
    let parts = vec![
        word_trie("E", &t.nf_e),
        word_trie("L1", &t.l1),
        word_trie("L2", &t.l2),
        word_trie("L3", &t.l3),
        word_trie("L4", &t.l4),
        word_trie("L1x", &t.l1p),
        word_trie("L2x", &t.l2p),
        word_trie("L3x", &t.l3p),
        word_trie("L4x", &t.l4p),
        family_x_machine(),
        family_n_machine(),
        family_p_machine(),
        family_px_machine(),
    ];
    parts
        .into_iter()
        .reduce(|acc, m| union(&acc, &m))
        .expect("non-empty part list")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{exhaustive_agreement, CounterRunner};
    use crate::normal_form::is_normal_form;
    use crate::words::{Letter, Word};

    fn chars(s: &str) -> Vec<char> {
        s.chars().collect()
    }

    #[test]
    fn zoo_spot_checks() {
        let zoo = zoo();
        let ZooMachine::Counter(m) = &zoo["z2_ambmanbn"] else {
            panic!()
        };
        assert!(m.accepts(&chars("abab")).unwrap());
        let ZooMachine::Counter(m) = &zoo["c1_anbncm"] else {
            panic!()
        };
        assert!(m.accepts(&chars("aabbccc")).unwrap());
        let ZooMachine::Counter(m) = &zoo["z2_anbnan"] else {
            panic!()
        };
        assert!(!m.accepts(&chars("aabba")).unwrap());
    }

    /// Every zoo machine agrees with its predicate on all words of length
    /// <= 9 here; the acceptance suite pushes this to 12.
    #[test]
    fn zoo_agreement_short() {
        for (name, alphabet, pred) in zoo_cases() {
            let count = match &zoo()[name] {
                ZooMachine::Counter(m) => {
                    let runner = CounterRunner::new(m, 9);
                    exhaustive_agreement(&runner, &alphabet, 9, &pred)
                }
                ZooMachine::Pda(p) => {
                    let runner = crate::automata::PdaRunner::new(p, 9);
                    exhaustive_agreement(&runner, &alphabet, 9, &pred)
                }
            };
            count.unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn nf_acceptor_examples() {
        let m = build_nf_acceptor();
        let word = |s: &str| -> Vec<char> {
            s.parse::<Word>()
                .unwrap()
                .letters()
                .iter()
                .map(|l| l.to_char())
                .collect()
        };
        assert!(m.accepts(&word("ta^2t^-1")).unwrap());
        assert!(!m.accepts(&word("t^2a^2t^-2a^-1")).unwrap());
        assert!(m.accepts(&word("")).unwrap());
        assert!(m.accepts(&word("t^2a^3t^-2a^-1")).unwrap());
        assert!(!m.accepts(&word("tat^-1")).unwrap());
    }

    /// Acceptor agreement with the membership predicate on all words of
    /// length <= 6 (the acceptance suite runs length 8).
    #[test]
    fn nf_acceptor_agreement_short() {
        let m = build_nf_acceptor();
        let runner = CounterRunner::new(&m, 6);
        let alphabet: Vec<char> = Letter::ALL.iter().map(|l| l.to_char()).collect();
        let pred = |w: &[char]| -> bool {
            let word = Word::new(w.iter().map(|&c| Letter::from_char(c).unwrap()).collect());
            is_normal_form(&word)
        };
        let count = exhaustive_agreement(&runner, &alphabet, 6, &pred).unwrap();
        assert_eq!(count, (4usize.pow(7) - 1) / 3);
    }

    /// Swapping-lemma consistency: every sampled accepted word of length
    /// >= 2s+1 admits an adjacent-block swap within the window that stays in
    /// the language.
    #[test]
    fn swapping_lemma_on_accepted_words() {
        let m = build_nf_acceptor();
        let s = m.states.len();
        let window = 2 * s + 1;
        // long accepted words: a deep pure power of t^-1 and a long X word
        let mut samples: Vec<Word> = vec![Word::t_pow(-(window as i64))];
        let mut x = Word::t_pow(window as i64).concat(&Word::a_pow(2));
        for _ in 0..window {
            x.push(Letter::TInv);
        }
        samples.push(x);
        for w in samples {
            let cs: Vec<char> = w.letters().iter().map(|l| l.to_char()).collect();
            assert!(m.accepts(&cs).unwrap(), "sample {w} should be accepted");
            let mut found = false;
            'outer: for u in 0..cs.len().min(window) {
                for xe in u + 1..cs.len().min(window) {
                    for ye in xe + 1..=cs.len().min(window) {
                        let mut v = cs[..u].to_vec();
                        v.extend_from_slice(&cs[xe..ye]);
                        v.extend_from_slice(&cs[u..xe]);
                        v.extend_from_slice(&cs[ye..]);
                        if m.accepts(&v).unwrap() {
                            found = true;
                            break 'outer;
                        }
                    }
                }
            }
            assert!(found, "no swap variant of {w} accepted");
        }
    }
}
