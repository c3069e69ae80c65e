//! Letter-to-letter and block transducers converting between bases `beta`
//! and `-beta`, and the machines behind normalization.
//!
//! A [`Transducer`] is a plain edge list with optional exact payloads on
//! states. Sequential machines are run by looking up the unique edge whose
//! input matches the next block; eventually periodic inputs are unrolled
//! until a (state, position in period) pair repeats.

mod integer;
mod online;
mod quadratic;
mod redundancy;

pub use integer::{build_int_converter, int_convert, positive_digits};
pub use online::{
    build_online_transducer, conjugate_bounds, online_convert, online_delay, online_run, OnlineRun, OnlineState,
};
pub use quadratic::{build_quadratic_converter, quadratic_convert};
pub use redundancy::{
    build_normalization_transducer, build_positive_normalization_transducer, build_redundancy_transducer,
    convert_neg_to_pos, normalize, normalize_exact, normalize_with, Redundancy,
};

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::automata::StateId;
use crate::error::{Error, Result};
use crate::numberfield::FieldElement;
use crate::words::{canonicalize, Digit, EpWord, FiniteWord};

pub const DEFAULT_STATE_CAP: usize = 1_000_000;

/// Shape of a transducer, which decides how it is run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TransducerKind {
    General,
    /// Deterministic on inputs read from the least significant end.
    RightSequential,
    /// Deterministic on inputs read from the most significant end.
    LeftSequential,
    /// Left sequential; the first `delay` input letters produce no output.
    OnLine { delay: usize, transient: Vec<StateId> },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub from: StateId,
    pub input: Vec<Digit>,
    pub output: Vec<Digit>,
    pub to: StateId,
}

#[derive(Clone, Debug)]
pub struct Transducer {
    names: Vec<String>,
    payloads: Vec<Option<FieldElement>>,
    edges: Vec<Edge>,
    initial: Vec<StateId>,
    finals: Vec<bool>,
    /// Output appended when a run ends in the state.
    final_outputs: Vec<Vec<Digit>>,
    kind: TransducerKind,
    index: HashMap<(StateId, Vec<Digit>), Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct TransducerDoc {
    kind: TransducerKind,
    states: Vec<String>,
    initial: Vec<StateId>,
    finals: Vec<StateId>,
    final_outputs: Vec<(StateId, Vec<Digit>)>,
    edges: Vec<Edge>,
}

impl Transducer {
    pub fn new(kind: TransducerKind) -> Self {
        Transducer {
            names: Vec::new(),
            payloads: Vec::new(),
            edges: Vec::new(),
            initial: Vec::new(),
            finals: Vec::new(),
            final_outputs: Vec::new(),
            kind,
            index: HashMap::new(),
        }
    }

    pub fn add_state(&mut self, name: impl Into<String>, payload: Option<FieldElement>) -> StateId {
        self.names.push(name.into());
        self.payloads.push(payload);
        self.finals.push(false);
        self.final_outputs.push(Vec::new());
        self.names.len() - 1
    }

    pub fn add_edge(&mut self, from: StateId, input: Vec<Digit>, output: Vec<Digit>, to: StateId) {
        self.index.entry((from, input.clone())).or_default().push(self.edges.len());
        self.edges.push(Edge { from, input, output, to });
    }

    pub fn set_initial(&mut self, states: Vec<StateId>) {
        self.initial = states;
    }

    pub fn set_final(&mut self, s: StateId, output: Vec<Digit>) {
        self.finals[s] = true;
        self.final_outputs[s] = output;
    }

    pub fn num_states(&self) -> usize {
        self.names.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn initial(&self) -> &[StateId] {
        &self.initial
    }

    pub fn is_final(&self, s: StateId) -> bool {
        self.finals[s]
    }

    pub fn final_output(&self, s: StateId) -> &[Digit] {
        &self.final_outputs[s]
    }

    pub fn kind(&self) -> &TransducerKind {
        &self.kind
    }

    pub fn name(&self, s: StateId) -> &str {
        &self.names[s]
    }

    pub fn payload(&self, s: StateId) -> Option<&FieldElement> {
        self.payloads[s].as_ref()
    }

    pub fn delay(&self) -> Option<usize> {
        match &self.kind {
            TransducerKind::OnLine { delay, .. } => Some(*delay),
            _ => None,
        }
    }

    /// Edges leaving `s` on exactly `input`.
    pub fn edges_on(&self, s: StateId, input: &[Digit]) -> impl Iterator<Item = &Edge> {
        self.index.get(&(s, input.to_vec())).into_iter().flatten().map(move |&i| &self.edges[i])
    }

    /// The unique edge on `input` from `s` of a sequential machine.
    pub fn step(&self, s: StateId, input: &[Digit]) -> Result<&Edge> {
        let mut it = self.edges_on(s, input);
        let e = it.next().ok_or_else(|| Error::InvalidBlock(crate::words::format_digits(input)))?;
        debug_assert!(it.next().is_none(), "sequential machine has two edges on one input");
        Ok(e)
    }

    /// Input automaton determinism: no two edges from one state on one input.
    pub fn is_input_deterministic(&self) -> bool {
        self.index.values().all(|v| v.len() == 1)
    }

    /// Runs a left sequential machine over `input` cut into blocks of
    /// `block` letters, returning the concatenated outputs and the final
    /// state. The final output is not appended.
    pub fn run_left(&self, input: &[Digit], block: usize) -> Result<(Vec<Digit>, StateId)> {
        let mut s = *self.initial.first().ok_or(Error::EmptyAutomaton)?;
        let mut out = Vec::new();
        for chunk in input.chunks(block) {
            let e = self.step(s, chunk)?;
            out.extend_from_slice(&e.output);
            s = e.to;
        }
        Ok((out, s))
    }

    /// Runs a left sequential machine on an eventually periodic input read
    /// in blocks of `block` letters, unrolling until the pair (state,
    /// block position in the period) repeats.
    pub fn run_left_ep(&self, input: &EpWord, block: usize) -> Result<EpWord> {
        let (pre, per) = block_aligned(input, block);
        let mut s = *self.initial.first().ok_or(Error::EmptyAutomaton)?;
        let mut out = Vec::new();
        for chunk in pre.chunks(block) {
            let e = self.step(s, chunk)?;
            out.extend_from_slice(&e.output);
            s = e.to;
        }
        let nblocks = per.len() / block;
        let mut seen: HashMap<(StateId, usize), usize> = HashMap::new();
        let mut k = 0usize;
        loop {
            let pos = k % nblocks;
            if let Some(&start) = seen.get(&(s, pos)) {
                let (head, tail) = out.split_at(start);
                return canonicalize(head, tail);
            }
            seen.insert((s, pos), out.len());
            let e = self.step(s, &per[pos * block..(pos + 1) * block])?;
            out.extend_from_slice(&e.output);
            s = e.to;
            k += 1;
        }
    }

    pub fn to_json(&self) -> String {
        let doc = TransducerDoc {
            kind: self.kind.clone(),
            states: self.names.clone(),
            initial: self.initial.clone(),
            finals: (0..self.num_states()).filter(|&s| self.finals[s]).collect(),
            final_outputs: (0..self.num_states())
                .filter(|&s| !self.final_outputs[s].is_empty())
                .map(|s| (s, self.final_outputs[s].clone()))
                .collect(),
            edges: self.edges.clone(),
        };
        serde_json::to_string_pretty(&doc).expect("serializable")
    }

    /// Reads back [`Transducer::to_json`]; state payloads are not stored.
    pub fn from_json(s: &str) -> Result<Self> {
        let doc: TransducerDoc = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let mut t = Transducer::new(doc.kind);
        for name in doc.states {
            t.add_state(name, None);
        }
        let n = t.num_states();
        let check = |q: StateId| if q < n { Ok(q) } else { Err(Error::Parse(format!("unknown state {q}"))) };
        for e in doc.edges {
            t.add_edge(check(e.from)?, e.input, e.output, check(e.to)?);
        }
        for q in doc.finals {
            t.set_final(check(q)?, Vec::new());
        }
        for (q, out) in doc.final_outputs {
            t.set_final(check(q)?, out);
        }
        t.initial = doc.initial.into_iter().map(check).collect::<Result<_>>()?;
        Ok(t)
    }

    /// Graphviz rendering with `in|out` edge labels.
    pub fn to_dot(&self) -> String {
        let word = |w: &[Digit]| if w.is_empty() { "ε".to_string() } else { crate::words::format_digits(w) };
        let mut s = String::new();
        writeln!(s, "digraph transducer {{").unwrap();
        writeln!(s, "  rankdir=LR;").unwrap();
        for q in 0..self.num_states() {
            let shape = if self.finals[q] { "doublecircle" } else { "circle" };
            writeln!(s, "  {q} [shape={shape}, label=\"{}\"];", self.names[q]).unwrap();
            if self.finals[q] && !self.final_outputs[q].is_empty() {
                writeln!(s, "  end{q} [shape=point];").unwrap();
                writeln!(s, "  {q} -> end{q} [label=\"ε|{}\"];", word(&self.final_outputs[q])).unwrap();
            }
        }
        for (i, &q) in self.initial.iter().enumerate() {
            writeln!(s, "  start{i} [shape=point];").unwrap();
            writeln!(s, "  start{i} -> {q};").unwrap();
        }
        for e in &self.edges {
            writeln!(s, "  {} -> {} [label=\"{}|{}\"];", e.from, e.to, word(&e.input), word(&e.output)).unwrap();
        }
        writeln!(s, "}}").unwrap();
        s
    }
}

/// Rewrites `w` as `pre per^omega` with both lengths multiples of `block`.
fn block_aligned(w: &EpWord, block: usize) -> (Vec<Digit>, Vec<Digit>) {
    let m = w.preperiod().len().div_ceil(block) * block;
    let p = w.period().len();
    let reps = block / num_integer::gcd(block, p);
    let pre = w.prefix(m);
    let per = w.shift(m).prefix(p * reps);
    (pre, per)
}

/// Drops leading zeros, keeping a single `0` for the empty word.
pub(crate) fn strip_leading_zeros(w: &[Digit]) -> FiniteWord {
    let first = w.iter().position(|&d| d != 0).unwrap_or(w.len());
    if first == w.len() {
        FiniteWord(vec![0])
    } else {
        FiniteWord(w[first..].to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_alignment_keeps_the_word() {
        let w: EpWord = "1(01)".parse().unwrap();
        let (pre, per) = block_aligned(&w, 2);
        assert_eq!(pre.len() % 2, 0);
        assert_eq!(per.len() % 2, 0);
        assert_eq!(canonicalize(&pre, &per).unwrap(), w);
        let w: EpWord = "(1)".parse().unwrap();
        let (pre, per) = block_aligned(&w, 2);
        assert_eq!((pre, per), (vec![], vec![1, 1]));
    }

    #[test]
    fn json_round_trip() {
        let t = build_int_converter(3);
        let back = Transducer::from_json(&t.to_json()).unwrap();
        assert_eq!(back.edges(), t.edges());
        assert_eq!(back.initial(), t.initial());
        assert_eq!(back.final_output(1), t.final_output(1));
        assert_eq!(back.kind(), t.kind());
    }

    #[test]
    fn dot_uses_pair_labels() {
        let dot = build_int_converter(2).to_dot();
        assert!(dot.contains("label=\"10|11\""));
        assert!(dot.contains("ε|1"));
    }
}
