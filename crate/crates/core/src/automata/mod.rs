//! Blind Z^k-counter automata, pushdown automata, the 1-counter-to-PDA
//! compiler, and the closure constructions.
//!
//! A counter automaton accepts a word when some path spells it, ends in an
//! accept state, and has total counter displacement zero; the counters are
//! "partially blind" (never tested mid-run). A PDA accepts by final state,
//! starting from an empty stack, with every pop legal along the way.

pub mod machines;

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type StateId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AutomataError {
    #[error("letter {0:?} is not in the machine's alphabet")]
    AlphabetMismatch(char),
    #[error("operation requires a 1-counter machine, got k = {0}")]
    NotOneCounter(usize),
    #[error("operation requires at least one finite-state (k = 0) operand")]
    NotRegular,
    #[error("malformed machine file: {0}")]
    BadFile(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterEdge {
    pub from: StateId,
    /// `None` is an epsilon transition.
    pub letter: Option<char>,
    pub delta: Vec<i64>,
    pub to: StateId,
}

/// A Z^k-automaton; k = 0 gives a plain NFA.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterAutomaton {
    pub k: usize,
    pub states: Vec<String>,
    pub start: StateId,
    pub accepts: BTreeSet<StateId>,
    pub transitions: Vec<CounterEdge>,
}

impl CounterAutomaton {
    pub fn new(k: usize) -> CounterAutomaton {
        CounterAutomaton {
            k,
            states: Vec::new(),
            start: 0,
            accepts: BTreeSet::new(),
            transitions: Vec::new(),
        }
    }

    pub fn add_state(&mut self, name: impl Into<String>) -> StateId {
        self.states.push(name.into());
        self.states.len() - 1
    }

    pub fn add_edge(&mut self, from: StateId, letter: Option<char>, delta: Vec<i64>, to: StateId) {
        debug_assert_eq!(delta.len(), self.k);
        self.transitions.push(CounterEdge {
            from,
            letter,
            delta,
            to,
        });
    }

    pub fn alphabet(&self) -> BTreeSet<char> {
        self.transitions.iter().filter_map(|t| t.letter).collect()
    }

    /// Blind-counter acceptance; see [`CounterRunner`] for the exploration
    /// strategy.
    pub fn accepts(&self, word: &[char]) -> Result<bool, AutomataError> {
        let alphabet = self.alphabet();
        for &c in word {
            if !alphabet.contains(&c) {
                return Err(AutomataError::AlphabetMismatch(c));
            }
        }
        let runner = CounterRunner::new(self, word.len());
        let mut cfgs = runner.initial();
        for &c in word {
            cfgs = runner.step(&cfgs, c);
            if cfgs.is_empty() {
                return Ok(false);
            }
        }
        Ok(runner.accepting(&cfgs))
    }
}

/// True iff the counter automaton accepts the word.
pub fn accept_counter(m: &CounterAutomaton, word: &[char]) -> Result<bool, AutomataError> {
    m.accepts(word)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdaEdge {
    pub from: StateId,
    pub letter: Option<char>,
    /// Stack symbol to pop (must be on top), if any.
    pub pop: Option<usize>,
    /// Stack symbol to push, if any.
    pub push: Option<usize>,
    pub to: StateId,
}

/// A pushdown automaton accepting by final state from an empty initial
/// stack.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pda {
    pub states: Vec<String>,
    pub stack_symbols: Vec<String>,
    pub start: StateId,
    pub accepts: BTreeSet<StateId>,
    pub transitions: Vec<PdaEdge>,
}

impl Pda {
    pub fn new() -> Pda {
        Pda {
            states: Vec::new(),
            stack_symbols: Vec::new(),
            start: 0,
            accepts: BTreeSet::new(),
            transitions: Vec::new(),
        }
    }

    pub fn add_state(&mut self, name: impl Into<String>) -> StateId {
        self.states.push(name.into());
        self.states.len() - 1
    }

    pub fn add_stack_symbol(&mut self, name: impl Into<String>) -> usize {
        self.stack_symbols.push(name.into());
        self.stack_symbols.len() - 1
    }

    pub fn alphabet(&self) -> BTreeSet<char> {
        self.transitions.iter().filter_map(|t| t.letter).collect()
    }

    pub fn accepts(&self, word: &[char]) -> Result<bool, AutomataError> {
        let alphabet = self.alphabet();
        for &c in word {
            if !alphabet.contains(&c) {
                return Err(AutomataError::AlphabetMismatch(c));
            }
        }
        let runner = PdaRunner::new(self, word.len());
        let mut cfgs = runner.initial();
        for &c in word {
            cfgs = runner.step(&cfgs, c);
            if cfgs.is_empty() {
                return Ok(false);
            }
        }
        Ok(runner.accepting(&cfgs))
    }
}

impl Default for Pda {
    fn default() -> Self {
        Pda::new()
    }
}

/// True iff the PDA accepts the word.
pub fn accept_pda(p: &Pda, word: &[char]) -> Result<bool, AutomataError> {
    p.accepts(word)
}

/// Shared interface for configuration-set execution, used by the exhaustive
/// agreement checker so counter machines and PDAs run through one driver.
pub trait BatchRunner {
    type Config: Clone + Eq + std::hash::Hash;
    fn initial(&self) -> Vec<Self::Config>;
    fn step(&self, cfgs: &[Self::Config], c: char) -> Vec<Self::Config>;
    fn accepting(&self, cfgs: &[Self::Config]) -> bool;
}

/// Prepared executor for a counter automaton.
///
/// Termination with epsilon cycles: configurations are explored with every
/// counter component clamped to [-B, B] where B = input length + (number of
/// epsilon edges) * (max |delta| component). A component outside that band
/// cannot return to zero within the remaining input, so the clamp preserves
/// the accepted language for the machines built here (whose epsilon cycles
/// are sign-definite self-loops or acyclic glue).
pub struct CounterRunner<'a> {
    k: usize,
    accepts: &'a BTreeSet<StateId>,
    start: StateId,
    eps: Vec<Vec<(Vec<i64>, StateId)>>,
    by_letter: HashMap<char, Vec<Vec<(Vec<i64>, StateId)>>>,
    bound: i64,
}

impl<'a> CounterRunner<'a> {
    pub fn new(m: &'a CounterAutomaton, max_input: usize) -> CounterRunner<'a> {
        let n = m.states.len();
        let mut eps: Vec<Vec<(Vec<i64>, StateId)>> = vec![Vec::new(); n];
        let mut by_letter: HashMap<char, Vec<Vec<(Vec<i64>, StateId)>>> = HashMap::new();
        let mut eps_edges = 0i64;
        let mut max_delta = 1i64;
        for t in &m.transitions {
            for &d in &t.delta {
                max_delta = max_delta.max(d.abs());
            }
            match t.letter {
                None => {
                    eps_edges += 1;
                    eps[t.from].push((t.delta.clone(), t.to));
                }
                Some(c) => {
                    by_letter.entry(c).or_insert_with(|| vec![Vec::new(); n])[t.from]
                        .push((t.delta.clone(), t.to));
                }
            }
        }
        CounterRunner {
            k: m.k,
            accepts: &m.accepts,
            start: m.start,
            eps,
            by_letter,
            bound: max_input as i64 + eps_edges * max_delta,
        }
    }

    fn close(&self, mut frontier: Vec<(StateId, Vec<i64>)>) -> Vec<(StateId, Vec<i64>)> {
        let mut seen: HashSet<(StateId, Vec<i64>)> = frontier.iter().cloned().collect();
        let mut i = 0;
        while i < frontier.len() {
            let (s, ctr) = frontier[i].clone();
            for (delta, to) in &self.eps[s] {
                if let Some(next) = self.apply(&ctr, delta) {
                    let cfg = (*to, next);
                    if seen.insert(cfg.clone()) {
                        frontier.push(cfg);
                    }
                }
            }
            i += 1;
        }
        frontier
    }

    fn apply(&self, ctr: &[i64], delta: &[i64]) -> Option<Vec<i64>> {
        let mut next = ctr.to_vec();
        for (x, d) in next.iter_mut().zip(delta) {
            *x += d;
            if x.abs() > self.bound {
                return None;
            }
        }
        Some(next)
    }
}

impl BatchRunner for CounterRunner<'_> {
    type Config = (StateId, Vec<i64>);

    fn initial(&self) -> Vec<Self::Config> {
        self.close(vec![(self.start, vec![0; self.k])])
    }

    fn step(&self, cfgs: &[Self::Config], c: char) -> Vec<Self::Config> {
        let Some(adj) = self.by_letter.get(&c) else {
            return Vec::new();
        };
        let mut out: Vec<Self::Config> = Vec::new();
        let mut seen: HashSet<Self::Config> = HashSet::new();
        for (s, ctr) in cfgs {
            for (delta, to) in &adj[*s] {
                if let Some(next) = self.apply(ctr, delta) {
                    let cfg = (*to, next);
                    if seen.insert(cfg.clone()) {
                        out.push(cfg);
                    }
                }
            }
        }
        self.close(out)
    }

    fn accepting(&self, cfgs: &[Self::Config]) -> bool {
        cfgs.iter()
            .any(|(s, ctr)| self.accepts.contains(s) && ctr.iter().all(|&x| x == 0))
    }
}

/// Prepared executor for a PDA. Stacks are explored up to height
/// input length + number of epsilon edges + 1; taller stacks cannot be
/// emptied back past their excess within the remaining input, and every
/// machine built here must drain its stack (through the bottom marker or
/// matched pops) to reach an accept state.
pub struct PdaRunner<'a> {
    accepts: &'a BTreeSet<StateId>,
    start: StateId,
    eps: Vec<Vec<(Option<usize>, Option<usize>, StateId)>>,
    by_letter: HashMap<char, Vec<Vec<(Option<usize>, Option<usize>, StateId)>>>,
    bound: usize,
}

impl<'a> PdaRunner<'a> {
    pub fn new(p: &'a Pda, max_input: usize) -> PdaRunner<'a> {
        let n = p.states.len();
        let mut eps: Vec<Vec<(Option<usize>, Option<usize>, StateId)>> = vec![Vec::new(); n];
        let mut by_letter: HashMap<char, Vec<Vec<(Option<usize>, Option<usize>, StateId)>>> =
            HashMap::new();
        let mut eps_edges = 0usize;
        for t in &p.transitions {
            match t.letter {
                None => {
                    eps_edges += 1;
                    eps[t.from].push((t.pop, t.push, t.to));
                }
                Some(c) => {
                    by_letter.entry(c).or_insert_with(|| vec![Vec::new(); n])[t.from]
                        .push((t.pop, t.push, t.to));
                }
            }
        }
        PdaRunner {
            accepts: &p.accepts,
            start: p.start,
            eps,
            by_letter,
            bound: max_input + eps_edges + 1,
        }
    }

    fn apply(
        &self,
        stack: &[usize],
        pop: Option<usize>,
        push: Option<usize>,
    ) -> Option<Vec<usize>> {
        let mut next = stack.to_vec();
        if let Some(sym) = pop {
            if next.last() != Some(&sym) {
                return None;
            }
            next.pop();
        }
        if let Some(sym) = push {
            next.push(sym);
            if next.len() > self.bound {
                return None;
            }
        }
        Some(next)
    }

    fn close(&self, mut frontier: Vec<(StateId, Vec<usize>)>) -> Vec<(StateId, Vec<usize>)> {
        let mut seen: HashSet<(StateId, Vec<usize>)> = frontier.iter().cloned().collect();
        let mut i = 0;
        while i < frontier.len() {
            let (s, stack) = frontier[i].clone();
            for (pop, push, to) in &self.eps[s] {
                if let Some(next) = self.apply(&stack, *pop, *push) {
                    let cfg = (*to, next);
                    if seen.insert(cfg.clone()) {
                        frontier.push(cfg);
                    }
                }
            }
            i += 1;
        }
        frontier
    }
}

impl BatchRunner for PdaRunner<'_> {
    type Config = (StateId, Vec<usize>);

    fn initial(&self) -> Vec<Self::Config> {
        self.close(vec![(self.start, Vec::new())])
    }

    fn step(&self, cfgs: &[Self::Config], c: char) -> Vec<Self::Config> {
        let Some(adj) = self.by_letter.get(&c) else {
            return Vec::new();
        };
        let mut out: Vec<Self::Config> = Vec::new();
        let mut seen: HashSet<Self::Config> = HashSet::new();
        for (s, stack) in cfgs {
            for (pop, push, to) in &adj[*s] {
                if let Some(next) = self.apply(stack, *pop, *push) {
                    let cfg = (*to, next);
                    if seen.insert(cfg.clone()) {
                        out.push(cfg);
                    }
                }
            }
        }
        self.close(out)
    }

    fn accepting(&self, cfgs: &[Self::Config]) -> bool {
        cfgs.iter().any(|(s, _)| self.accepts.contains(s))
    }
}

/// Checks a runner against a predicate on every word over `alphabet` of
/// length at most `max_len`, sharing work across common prefixes. Returns
/// the number of words checked, or the first disagreeing word.
pub fn exhaustive_agreement<R: BatchRunner>(
    runner: &R,
    alphabet: &[char],
    max_len: usize,
    pred: &dyn Fn(&[char]) -> bool,
) -> Result<usize, String> {
    fn rec<R: BatchRunner>(
        runner: &R,
        alphabet: &[char],
        max_len: usize,
        pred: &dyn Fn(&[char]) -> bool,
        prefix: &mut Vec<char>,
        cfgs: &[R::Config],
        count: &mut usize,
    ) -> Result<(), String> {
        let got = runner.accepting(cfgs);
        let want = pred(prefix);
        if got != want {
            let word: String = prefix.iter().collect();
            return Err(format!(
                "disagreement on {word:?}: machine {got}, predicate {want}"
            ));
        }
        *count += 1;
        if prefix.len() == max_len {
            return Ok(());
        }
        for &c in alphabet {
            prefix.push(c);
            let next = runner.step(cfgs, c);
            rec(runner, alphabet, max_len, pred, prefix, &next, count)?;
            prefix.pop();
        }
        Ok(())
    }
    let mut count = 0;
    let mut prefix = Vec::new();
    rec(
        runner,
        alphabet,
        max_len,
        pred,
        &mut prefix,
        &runner.initial(),
        &mut count,
    )?;
    Ok(count)
}

/// Splits every transition with a |delta| component above 1 into a chain of
/// unit steps through fresh epsilon states; language-preserving.
pub fn normalize_deltas(m: &CounterAutomaton) -> CounterAutomaton {
    let mut out = CounterAutomaton::new(m.k);
    for s in &m.states {
        out.add_state(s.clone());
    }
    out.start = m.start;
    out.accepts = m.accepts.clone();
    for (i, t) in m.transitions.iter().enumerate() {
        let span = t.delta.iter().map(|d| d.abs()).max().unwrap_or(0);
        if span <= 1 {
            out.add_edge(t.from, t.letter, t.delta.clone(), t.to);
            continue;
        }
        let mut prev = t.from;
        for step in 0..span {
            let delta: Vec<i64> = t
                .delta
                .iter()
                .map(|&d| {
                    if step < d.abs() {
                        d.signum()
                    } else {
                        0
                    }
                })
                .collect();
            let next = if step == span - 1 {
                t.to
            } else {
                out.add_state(format!("{}#{}.{}", m.states[t.from], i, step))
            };
            out.add_edge(prev, if step == 0 { t.letter } else { None }, delta, next);
            prev = next;
        }
    }
    out
}

/// Compiles a 1-counter machine to a PDA with stack symbols $+, $- and 1.
///
/// Two copies of the state set track the counter's sign: while positive, the
/// stack holds $+ under one 1 per unit; a pop of 1 against a bare $+ swaps
/// the bottom marker to $- and the copy, after which the stack height is the
/// negated counter. Acceptance pops the bottom marker from a former accept
/// state into the single new accept state.
pub fn counter_to_pda(m: &CounterAutomaton) -> Result<Pda, AutomataError> {
    if m.k != 1 {
        return Err(AutomataError::NotOneCounter(m.k));
    }
    let m = normalize_deltas(m);
    let n = m.states.len();
    let mut p = Pda::new();
    let s_plus = p.add_stack_symbol("$+");
    let s_minus = p.add_stack_symbol("$-");
    let one = p.add_stack_symbol("1");
    for s in &m.states {
        p.add_state(format!("{s}+"));
    }
    for s in &m.states {
        p.add_state(format!("{s}-"));
    }
    let start = p.add_state("start");
    let accept = p.add_state("accept");
    p.start = start;
    p.accepts.insert(accept);

    let plus = |q: StateId| q;
    let minus = |q: StateId| q + n;

    p.transitions.push(PdaEdge {
        from: start,
        letter: None,
        pop: None,
        push: Some(s_plus),
        to: plus(m.start),
    });
    for t in &m.transitions {
        let d = t.delta[0];
        // counter >= 0 side: increment pushes a 1, decrement pops one
        let (pop, push) = match d {
            1 => (None, Some(one)),
            -1 => (Some(one), None),
            _ => (None, None),
        };
        p.transitions.push(PdaEdge {
            from: plus(t.from),
            letter: t.letter,
            pop,
            push,
            to: plus(t.to),
        });
        // counter <= 0 side: roles are reversed
        let (pop, push) = match d {
            -1 => (None, Some(one)),
            1 => (Some(one), None),
            _ => (None, None),
        };
        p.transitions.push(PdaEdge {
            from: minus(t.from),
            letter: t.letter,
            pop,
            push,
            to: minus(t.to),
        });
    }
    for q in 0..n {
        p.transitions.push(PdaEdge {
            from: plus(q),
            letter: None,
            pop: Some(s_plus),
            push: Some(s_minus),
            to: minus(q),
        });
        p.transitions.push(PdaEdge {
            from: minus(q),
            letter: None,
            pop: Some(s_minus),
            push: Some(s_plus),
            to: plus(q),
        });
    }
    for &q in &m.accepts {
        p.transitions.push(PdaEdge {
            from: plus(q),
            letter: None,
            pop: Some(s_plus),
            push: None,
            to: accept,
        });
        p.transitions.push(PdaEdge {
            from: minus(q),
            letter: None,
            pop: Some(s_minus),
            push: None,
            to: accept,
        });
    }
    Ok(p)
}

fn pad(delta: &[i64], k: usize) -> Vec<i64> {
    let mut d = delta.to_vec();
    d.resize(k, 0);
    d
}

/// L(m1) ∪ L(m2): a fresh start state joined to both starts by epsilon
/// transitions. Counter dimensions are padded to match.
pub fn union(m1: &CounterAutomaton, m2: &CounterAutomaton) -> CounterAutomaton {
    let k = m1.k.max(m2.k);
    let mut out = CounterAutomaton::new(k);
    let p0 = out.add_state("u");
    let map1: Vec<StateId> = m1
        .states
        .iter()
        .map(|s| out.add_state(format!("0.{s}")))
        .collect();
    let map2: Vec<StateId> = m2
        .states
        .iter()
        .map(|s| out.add_state(format!("1.{s}")))
        .collect();
    out.start = p0;
    out.add_edge(p0, None, vec![0; k], map1[m1.start]);
    out.add_edge(p0, None, vec![0; k], map2[m2.start]);
    for t in &m1.transitions {
        out.add_edge(map1[t.from], t.letter, pad(&t.delta, k), map1[t.to]);
    }
    for t in &m2.transitions {
        out.add_edge(map2[t.from], t.letter, pad(&t.delta, k), map2[t.to]);
    }
    out.accepts = m1
        .accepts
        .iter()
        .map(|&q| map1[q])
        .chain(m2.accepts.iter().map(|&q| map2[q]))
        .collect();
    out
}

/// L(m) ∩ L(n) for a regular n, via the product construction on S x T.
pub fn intersect_regular(
    m: &CounterAutomaton,
    n: &CounterAutomaton,
) -> Result<CounterAutomaton, AutomataError> {
    if n.k != 0 {
        return Err(AutomataError::NotRegular);
    }
    let mut out = CounterAutomaton::new(m.k);
    let id = |q: StateId, p: StateId| q * n.states.len() + p;
    for q in &m.states {
        for p in &n.states {
            out.add_state(format!("{q}|{p}"));
        }
    }
    out.start = id(m.start, n.start);
    for &q in &m.accepts {
        for &p in &n.accepts {
            out.accepts.insert(id(q, p));
        }
    }
    for tm in &m.transitions {
        match tm.letter {
            None => {
                for p in 0..n.states.len() {
                    out.add_edge(id(tm.from, p), None, tm.delta.clone(), id(tm.to, p));
                }
            }
            Some(c) => {
                for tn in &n.transitions {
                    if tn.letter == Some(c) {
                        out.add_edge(
                            id(tm.from, tn.from),
                            Some(c),
                            tm.delta.clone(),
                            id(tm.to, tn.to),
                        );
                    }
                }
            }
        }
    }
    // epsilon moves of the regular operand advance it alone
    for tn in &n.transitions {
        if tn.letter.is_none() {
            for q in 0..m.states.len() {
                out.add_edge(id(q, tn.from), None, vec![0; m.k], id(q, tn.to));
            }
        }
    }
    Ok(out)
}

/// Order of concatenation for [`concat`]: counter-then-regular or the
/// reverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConcatOrder {
    Cl,
    Lc,
}

/// L(m)L(n) (order CL) or L(n)L(m) (order LC); at least one operand must be
/// regular. An epsilon transition runs from each accept state of the first
/// factor to the start of the second.
pub fn concat(
    m: &CounterAutomaton,
    n: &CounterAutomaton,
    order: ConcatOrder,
) -> Result<CounterAutomaton, AutomataError> {
    if m.k != 0 && n.k != 0 {
        return Err(AutomataError::NotRegular);
    }
    let (first, second) = match order {
        ConcatOrder::Cl => (m, n),
        ConcatOrder::Lc => (n, m),
    };
    let k = m.k.max(n.k);
    let mut out = CounterAutomaton::new(k);
    let map1: Vec<StateId> = first
        .states
        .iter()
        .map(|s| out.add_state(format!("0.{s}")))
        .collect();
    let map2: Vec<StateId> = second
        .states
        .iter()
        .map(|s| out.add_state(format!("1.{s}")))
        .collect();
    out.start = map1[first.start];
    for t in &first.transitions {
        out.add_edge(map1[t.from], t.letter, pad(&t.delta, k), map1[t.to]);
    }
    for t in &second.transitions {
        out.add_edge(map2[t.from], t.letter, pad(&t.delta, k), map2[t.to]);
    }
    for &q in &first.accepts {
        out.add_edge(map1[q], None, vec![0; k], map2[second.start]);
    }
    out.accepts = second.accepts.iter().map(|&q| map2[q]).collect();
    Ok(out)
}

// --- machine files -------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct CounterFile {
    k: usize,
    states: Vec<String>,
    start: String,
    accepts: Vec<String>,
    transitions: Vec<CounterEdgeFile>,
}

#[derive(Serialize, Deserialize)]
struct CounterEdgeFile {
    from: String,
    letter: Option<String>,
    delta: Vec<i64>,
    to: String,
}

#[derive(Serialize, Deserialize)]
struct PdaFile {
    states: Vec<String>,
    start: String,
    accepts: Vec<String>,
    transitions: Vec<PdaEdgeFile>,
}

#[derive(Serialize, Deserialize)]
struct PdaEdgeFile {
    from: String,
    letter: Option<String>,
    pop: Option<String>,
    push: Option<String>,
    to: String,
}

fn state_index(states: &[String], name: &str) -> Result<StateId, AutomataError> {
    states
        .iter()
        .position(|s| s == name)
        .ok_or_else(|| AutomataError::BadFile(format!("unknown state {name:?}")))
}

fn letter_char(letter: &Option<String>) -> Result<Option<char>, AutomataError> {
    match letter {
        None => Ok(None),
        Some(s) => {
            let mut chars = s.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => Ok(Some(c)),
                _ => Err(AutomataError::BadFile(format!(
                    "letters are single characters, got {s:?}"
                ))),
            }
        }
    }
}

impl CounterAutomaton {
    pub fn to_json(&self) -> serde_json::Value {
        let file = CounterFile {
            k: self.k,
            states: self.states.clone(),
            start: self.states[self.start].clone(),
            accepts: self
                .accepts
                .iter()
                .map(|&q| self.states[q].clone())
                .collect(),
            transitions: self
                .transitions
                .iter()
                .map(|t| CounterEdgeFile {
                    from: self.states[t.from].clone(),
                    letter: t.letter.map(|c| c.to_string()),
                    delta: t.delta.clone(),
                    to: self.states[t.to].clone(),
                })
                .collect(),
        };
        serde_json::to_value(file).expect("machine serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<CounterAutomaton, AutomataError> {
        let file: CounterFile = serde_json::from_value(v.clone())
            .map_err(|e| AutomataError::BadFile(e.to_string()))?;
        let mut m = CounterAutomaton::new(file.k);
        for s in &file.states {
            m.add_state(s.clone());
        }
        m.start = state_index(&file.states, &file.start)?;
        for a in &file.accepts {
            let q = state_index(&file.states, a)?;
            m.accepts.insert(q);
        }
        for t in &file.transitions {
            if t.delta.len() != file.k {
                return Err(AutomataError::BadFile(format!(
                    "delta {:?} does not have k = {} components",
                    t.delta, file.k
                )));
            }
            let from = state_index(&file.states, &t.from)?;
            let to = state_index(&file.states, &t.to)?;
            m.add_edge(from, letter_char(&t.letter)?, t.delta.clone(), to);
        }
        Ok(m)
    }
}

impl Pda {
    pub fn to_json(&self) -> serde_json::Value {
        let file = PdaFile {
            states: self.states.clone(),
            start: self.states[self.start].clone(),
            accepts: self
                .accepts
                .iter()
                .map(|&q| self.states[q].clone())
                .collect(),
            transitions: self
                .transitions
                .iter()
                .map(|t| PdaEdgeFile {
                    from: self.states[t.from].clone(),
                    letter: t.letter.map(|c| c.to_string()),
                    pop: t.pop.map(|s| self.stack_symbols[s].clone()),
                    push: t.push.map(|s| self.stack_symbols[s].clone()),
                    to: self.states[t.to].clone(),
                })
                .collect(),
        };
        serde_json::to_value(file).expect("machine serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Pda, AutomataError> {
        let file: PdaFile = serde_json::from_value(v.clone())
            .map_err(|e| AutomataError::BadFile(e.to_string()))?;
        let mut p = Pda::new();
        for s in &file.states {
            p.add_state(s.clone());
        }
        p.start = state_index(&file.states, &file.start)?;
        for a in &file.accepts {
            let q = state_index(&file.states, a)?;
            p.accepts.insert(q);
        }
        let mut sym_index: HashMap<String, usize> = HashMap::new();
        let mut sym = |p: &mut Pda, name: &Option<String>| -> Option<usize> {
            name.as_ref().map(|n| {
                *sym_index
                    .entry(n.clone())
                    .or_insert_with(|| p.add_stack_symbol(n.clone()))
            })
        };
        for t in &file.transitions {
            let from = state_index(&file.states, &t.from)?;
            let to = state_index(&file.states, &t.to)?;
            let pop = sym(&mut p, &t.pop);
            let push = sym(&mut p, &t.push);
            p.transitions.push(PdaEdge {
                from,
                letter: letter_char(&t.letter)?,
                pop,
                push,
                to,
            });
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::machines::*;
    use super::*;

    fn chars(s: &str) -> Vec<char> {
        s.chars().collect()
    }

    #[test]
    fn normalize_splits_edges() {
        let mut m = CounterAutomaton::new(1);
        let q0 = m.add_state("q0");
        let q1 = m.add_state("q1");
        m.start = q0;
        m.accepts.insert(q1);
        m.add_edge(q0, Some('a'), vec![3], q1);
        m.add_edge(q1, Some('b'), vec![-3], q1);
        let norm = normalize_deltas(&m);
        assert!(norm.transitions.iter().all(|t| t.delta[0].abs() <= 1));
        assert_eq!(norm.transitions.len(), 6);
        // language-equivalent on all short words
        for len in 0..=6 {
            for word in words_over(&['a', 'b'], len) {
                assert_eq!(m.accepts(&word).unwrap(), norm.accepts(&word).unwrap());
            }
        }
        // a normalized machine passes through unchanged
        let again = normalize_deltas(&norm);
        assert_eq!(again.transitions.len(), norm.transitions.len());
    }

    fn words_over(alphabet: &[char], len: usize) -> Vec<Vec<char>> {
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            let mut next = Vec::new();
            for w in &out {
                for &c in alphabet {
                    let mut v = w.clone();
                    v.push(c);
                    next.push(v);
                }
            }
            out = next;
        }
        out
    }

    #[test]
    fn counter_examples() {
        let zoo = zoo();
        let ZooMachine::Counter(m) = &zoo["z2_anbnan"] else {
            panic!()
        };
        assert!(m.accepts(&chars("aabbaa")).unwrap());
        assert!(!m.accepts(&chars("aab")).unwrap());
        assert!(m.accepts(&[]).unwrap());
        assert!(!m.accepts(&chars("aabba")).unwrap());
        assert_eq!(
            m.accepts(&chars("xyz")).unwrap_err(),
            AutomataError::AlphabetMismatch('x')
        );
    }

    #[test]
    fn pda_examples() {
        let zoo = zoo();
        let ZooMachine::Pda(p) = &zoo["pda_anbn"] else {
            panic!()
        };
        assert!(p.accepts(&chars("aabb")).unwrap());
        assert!(!p.accepts(&chars("abab")).unwrap());
        assert!(p.accepts(&[]).unwrap());
        let ZooMachine::Pda(p) = &zoo["pda_ww_reverse"] else {
            panic!()
        };
        assert!(p.accepts(&chars("abba")).unwrap());
        assert!(!p.accepts(&chars("ab")).unwrap());
        assert!(!p.accepts(&chars("aba")).unwrap());
    }

    #[test]
    fn counter_to_pda_small() {
        let zoo = zoo();
        let ZooMachine::Counter(m) = &zoo["c1_anbn"] else {
            panic!()
        };
        let p = counter_to_pda(m).unwrap();
        for len in 0..=10 {
            for word in words_over(&['a', 'b'], len) {
                assert_eq!(m.accepts(&word).unwrap(), p.accepts(&word).unwrap());
            }
        }
        // only epsilon is accepted by a machine whose sole state accepts
        let mut triv = CounterAutomaton::new(1);
        let q = triv.add_state("q");
        triv.start = q;
        triv.accepts.insert(q);
        triv.add_edge(q, Some('a'), vec![1], q);
        let p = counter_to_pda(&triv).unwrap();
        assert!(p.accepts(&[]).unwrap());
        for len in 1..=6 {
            for word in words_over(&['a'], len) {
                assert!(!p.accepts(&word).unwrap());
            }
        }
        assert_eq!(
            counter_to_pda(&CounterAutomaton::new(2)).unwrap_err(),
            AutomataError::NotOneCounter(2)
        );
    }

    #[test]
    fn closure_ops_reject_bad_operands() {
        let mut c = CounterAutomaton::new(1);
        let q = c.add_state("q");
        c.start = q;
        assert_eq!(
            intersect_regular(&c, &c).unwrap_err(),
            AutomataError::NotRegular
        );
        assert_eq!(
            concat(&c, &c, ConcatOrder::Cl).unwrap_err(),
            AutomataError::NotRegular
        );
    }

    #[test]
    fn machine_json_round_trip() {
        let zoo = zoo();
        let ZooMachine::Counter(m) = &zoo["z2_ambmanbn"] else {
            panic!()
        };
        let v = m.to_json();
        let back = CounterAutomaton::from_json(&v).unwrap();
        assert_eq!(&back, m);

        let ZooMachine::Pda(p) = &zoo["pda_anbn"] else {
            panic!()
        };
        let v = p.to_json();
        let back = Pda::from_json(&v).unwrap();
        for len in 0..=8 {
            for word in words_over(&['a', 'b'], len) {
                assert_eq!(p.accepts(&word).unwrap(), back.accepts(&word).unwrap());
            }
        }
    }
}
