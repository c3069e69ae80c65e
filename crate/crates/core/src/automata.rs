//! Finite automata over a contiguous digit alphabet.
//!
//! Transitions are deterministic per state. An automaton may have several
//! initial states; with one it is a DFA, with several it is read as a
//! presentation where a word is accepted if some initial state reads it
//! into a final state.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::Digit;

pub type StateId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automaton {
    lo: Digit,
    hi: Digit,
    delta: Vec<Vec<Option<StateId>>>,
    initial: Vec<StateId>,
    finals: Vec<bool>,
}

/// One labelled edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transition {
    pub from: StateId,
    pub label: Digit,
    pub to: StateId,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct AutomatonDoc {
    states: Vec<StateId>,
    alphabet: Vec<Digit>,
    initial: Vec<StateId>,
    finals: Vec<StateId>,
    transitions: Vec<Transition>,
}

impl Automaton {
    /// `n` states over the digits `lo..=hi`, no edges, no finals.
    pub fn new(lo: Digit, hi: Digit, n: usize) -> Self {
        assert!(lo <= hi, "empty alphabet");
        let width = (hi - lo + 1) as usize;
        Automaton { lo, hi, delta: vec![vec![None; width]; n], initial: Vec::new(), finals: vec![false; n] }
    }

    pub fn add_state(&mut self) -> StateId {
        let width = (self.hi - self.lo + 1) as usize;
        self.delta.push(vec![None; width]);
        self.finals.push(false);
        self.delta.len() - 1
    }

    pub fn set_edge(&mut self, from: StateId, label: Digit, to: StateId) {
        let i = self.slot(label).expect("label outside the alphabet");
        self.delta[from][i] = Some(to);
    }

    pub fn set_final(&mut self, s: StateId, fin: bool) {
        self.finals[s] = fin;
    }

    pub fn set_initial(&mut self, states: Vec<StateId>) {
        self.initial = states;
    }

    pub fn num_states(&self) -> usize {
        self.delta.len()
    }

    pub fn alphabet(&self) -> std::ops::RangeInclusive<Digit> {
        self.lo..=self.hi
    }

    pub fn initial(&self) -> &[StateId] {
        &self.initial
    }

    pub fn is_final(&self, s: StateId) -> bool {
        self.finals[s]
    }

    fn slot(&self, d: Digit) -> Option<usize> {
        (self.lo..=self.hi).contains(&d).then(|| (d - self.lo) as usize)
    }

    pub fn next(&self, s: StateId, d: Digit) -> Option<StateId> {
        self.slot(d).and_then(|i| self.delta[s][i])
    }

    pub fn transitions(&self) -> Vec<Transition> {
        let mut out = Vec::new();
        for (from, row) in self.delta.iter().enumerate() {
            for (i, t) in row.iter().enumerate() {
                if let Some(to) = *t {
                    out.push(Transition { from, label: self.lo + i as Digit, to });
                }
            }
        }
        out
    }

    /// The state reached from `s` on `w`, if the path exists.
    pub fn run_from(&self, s: StateId, w: &[Digit]) -> Option<StateId> {
        w.iter().try_fold(s, |q, &d| self.next(q, d))
    }

    /// Whether some initial state reads `w` into a final state.
    pub fn accepts(&self, w: &[Digit]) -> bool {
        self.initial.iter().any(|&s| self.run_from(s, w).is_some_and(|q| self.finals[q]))
    }

    /// Whether some state (initial or not) reads `w` into a final state.
    pub fn accepts_from_any(&self, w: &[Digit]) -> bool {
        (0..self.num_states()).any(|s| self.run_from(s, w).is_some_and(|q| self.finals[q]))
    }

    fn renumber(&self, order: &[StateId]) -> Automaton {
        let mut index = vec![usize::MAX; self.num_states()];
        for (i, &s) in order.iter().enumerate() {
            index[s] = i;
        }
        let mut a = Automaton::new(self.lo, self.hi, order.len());
        for (i, &s) in order.iter().enumerate() {
            a.finals[i] = self.finals[s];
            for (k, t) in self.delta[s].iter().enumerate() {
                if let Some(t) = *t {
                    if index[t] != usize::MAX {
                        a.delta[i][k] = Some(index[t]);
                    }
                }
            }
        }
        a.initial = self.initial.iter().filter(|&&s| index[s] != usize::MAX).map(|&s| index[s]).collect();
        a
    }

    fn bfs_order(&self, keep: &[bool]) -> Vec<StateId> {
        let mut seen = vec![false; self.num_states()];
        let mut order = Vec::new();
        let mut queue: VecDeque<StateId> = VecDeque::new();
        let mut roots: Vec<StateId> = self.initial.clone();
        roots.extend(0..self.num_states());
        for r in roots {
            if !keep[r] || seen[r] {
                continue;
            }
            seen[r] = true;
            queue.push_back(r);
            while let Some(s) = queue.pop_front() {
                order.push(s);
                for t in self.delta[s].iter().flatten() {
                    if keep[*t] && !seen[*t] {
                        seen[*t] = true;
                        queue.push_back(*t);
                    }
                }
            }
        }
        order
    }

    fn accessible(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        let mut stack: Vec<StateId> = self.initial.clone();
        for &s in &self.initial {
            seen[s] = true;
        }
        while let Some(s) = stack.pop() {
            for &t in self.delta[s].iter().flatten() {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    }

    fn coaccessible(&self) -> Vec<bool> {
        let n = self.num_states();
        let mut rev: Vec<Vec<StateId>> = vec![Vec::new(); n];
        for (s, row) in self.delta.iter().enumerate() {
            for &t in row.iter().flatten() {
                rev[t].push(s);
            }
        }
        let mut seen = self.finals.clone();
        let mut stack: Vec<StateId> = (0..n).filter(|&s| seen[s]).collect();
        while let Some(s) = stack.pop() {
            for &p in &rev[s] {
                if !seen[p] {
                    seen[p] = true;
                    stack.push(p);
                }
            }
        }
        seen
    }

    /// Keeps only states that are both accessible and co-accessible.
    pub fn trim(&self) -> Automaton {
        let acc = self.accessible();
        let co = self.coaccessible();
        let keep: Vec<bool> = acc.iter().zip(&co).map(|(a, b)| *a && *b).collect();
        self.renumber(&self.bfs_order(&keep))
    }

    /// Subset construction from the set of initial states.
    pub fn determinize(&self) -> Automaton {
        let start: BTreeSet<StateId> = self.initial.iter().copied().collect();
        let mut index: HashMap<BTreeSet<StateId>, StateId> = HashMap::new();
        let mut sets = vec![start.clone()];
        index.insert(start, 0);
        let mut a = Automaton::new(self.lo, self.hi, 0);
        let mut i = 0;
        while i < sets.len() {
            a.add_state();
            let cur = sets[i].clone();
            a.finals[i] = cur.iter().any(|&s| self.finals[s]);
            for d in self.lo..=self.hi {
                let nxt: BTreeSet<StateId> = cur.iter().filter_map(|&s| self.next(s, d)).collect();
                if nxt.is_empty() {
                    continue;
                }
                let j = match index.get(&nxt) {
                    Some(&j) => j,
                    None => {
                        sets.push(nxt.clone());
                        index.insert(nxt, sets.len() - 1);
                        sets.len() - 1
                    }
                };
                a.delta[i][(d - self.lo) as usize] = Some(j);
            }
            i += 1;
        }
        a.initial = vec![0];
        a
    }

    /// The minimal deterministic automaton of the accepted language, trim
    /// and numbered in breadth-first order from the initial state.
    pub fn minimize(&self) -> Automaton {
        let dfa = if self.initial.len() == 1 { self.trim() } else { self.determinize().trim() };
        let n = dfa.num_states();
        if n == 0 {
            return dfa;
        }
        let width = (self.hi - self.lo + 1) as usize;
        let class = dfa.moore_classes();
        let k = class.iter().max().unwrap() + 1;
        let mut q = Automaton::new(self.lo, self.hi, k);
        for s in 0..n {
            q.finals[class[s]] = dfa.finals[s];
            for j in 0..width {
                q.delta[class[s]][j] = dfa.delta[s][j].map(|t| class[t]);
            }
        }
        q.initial = vec![class[dfa.initial[0]]];
        let all = vec![true; k];
        q.renumber(&q.bfs_order(&all))
    }

    /// Some other state accepting the same language from itself as
    /// `s` does, if there is one.
    pub fn equivalent_state(&self, s: StateId) -> Option<StateId> {
        let class = self.moore_classes();
        (0..self.num_states()).find(|&t| t != s && class[t] == class[s])
    }

    /// Redirects every edge into `from` to `to` and deletes `from`, which
    /// must be the last state.
    pub fn merge_into(mut self, from: StateId, to: StateId) -> Automaton {
        assert_eq!(from, self.num_states() - 1, "only the last state can be merged away");
        for row in self.delta.iter_mut() {
            for t in row.iter_mut() {
                if *t == Some(from) {
                    *t = Some(to);
                }
            }
        }
        self.delta.pop();
        self.finals.pop();
        for q in self.initial.iter_mut() {
            if *q == from {
                *q = to;
            }
        }
        self.initial.dedup();
        self
    }

    /// Moore partition of the states by the language each accepts.
    fn moore_classes(&self) -> Vec<usize> {
        let n = self.num_states();
        let width = (self.hi - self.lo + 1) as usize;
        let mut class: Vec<usize> = self.finals.iter().map(|&f| usize::from(f)).collect();
        loop {
            let mut sig_index: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
            let mut next = vec![0; n];
            for s in 0..n {
                let sig: Vec<usize> =
                    (0..width).map(|k| self.delta[s][k].map_or(usize::MAX, |t| class[t])).collect();
                let len = sig_index.len();
                next[s] = *sig_index.entry((class[s], sig)).or_insert(len);
            }
            let stable = sig_index.len() == class.iter().collect::<BTreeSet<_>>().len();
            class = next;
            if stable {
                return class;
            }
        }
    }

    /// Accessible product recognizing the intersection.
    pub fn product(&self, other: &Automaton) -> Automaton {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        let mut index: HashMap<(StateId, StateId), StateId> = HashMap::new();
        let mut pairs: Vec<(StateId, StateId)> = Vec::new();
        let mut initial = Vec::new();
        for &a in &self.initial {
            for &b in &other.initial {
                index.insert((a, b), pairs.len());
                initial.push(pairs.len());
                pairs.push((a, b));
            }
        }
        let mut out = Automaton::new(lo, hi, 0);
        let mut i = 0;
        while i < pairs.len() {
            out.add_state();
            let (a, b) = pairs[i];
            out.finals[i] = self.finals[a] && other.finals[b];
            for d in lo..=hi {
                if let (Some(x), Some(y)) = (self.next(a, d), other.next(b, d)) {
                    let j = *index.entry((x, y)).or_insert_with(|| {
                        pairs.push((x, y));
                        pairs.len() - 1
                    });
                    out.delta[i][(d - lo) as usize] = Some(j);
                }
            }
            i += 1;
        }
        out.initial = initial;
        out
    }

    /// Whether the two automata accept the same words.
    pub fn language_equal(&self, other: &Automaton) -> bool {
        let a = self.minimize();
        let b = other.minimize();
        if a.num_states() == 0 || b.num_states() == 0 {
            return a.num_states() == b.num_states();
        }
        // walk the product, with `None` standing for the sink
        let letters = a.lo.min(b.lo)..=a.hi.max(b.hi);
        let mut seen = BTreeSet::new();
        let mut stack = vec![(Some(a.initial[0]), Some(b.initial[0]))];
        seen.insert(stack[0]);
        while let Some((x, y)) = stack.pop() {
            if x.is_some_and(|s| a.finals[s]) != y.is_some_and(|s| b.finals[s]) {
                return false;
            }
            for d in letters.clone() {
                let nx = x.and_then(|s| a.next(s, d));
                let ny = y.and_then(|s| b.next(s, d));
                if (nx.is_some() || ny.is_some()) && seen.insert((nx, ny)) {
                    stack.push((nx, ny));
                }
            }
        }
        true
    }

    /// Graph isomorphism preserving labels, finals and the initial set.
    pub fn is_isomorphic(&self, other: &Automaton) -> bool {
        if self.num_states() != other.num_states()
            || self.lo != other.lo
            || self.hi != other.hi
            || self.initial.len() != other.initial.len()
        {
            return false;
        }
        let n = self.num_states();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.iso_extend(other, 0, &mut map, &mut used)
    }

    fn iso_extend(&self, other: &Automaton, s: usize, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let n = self.num_states();
        if s == n {
            let init_a: BTreeSet<_> = self.initial.iter().map(|&q| map[q]).collect();
            let init_b: BTreeSet<_> = other.initial.iter().copied().collect();
            return init_a == init_b;
        }
        for t in 0..n {
            if used[t] || self.finals[s] != other.finals[t] {
                continue;
            }
            map[s] = t;
            used[t] = true;
            // check edges among already mapped states
            let consistent = (0..=s).all(|u| {
                let mu = map[u];
                self.delta[u].iter().zip(&other.delta[mu]).all(|(x, y)| match (x, y) {
                    (None, None) => true,
                    (Some(x), Some(y)) => map[*x] == usize::MAX || map[*x] == *y,
                    _ => false,
                })
            });
            if consistent && self.iso_extend(other, s + 1, map, used) {
                return true;
            }
            map[s] = usize::MAX;
            used[t] = false;
        }
        false
    }

    /// Strongly connected components (Tarjan), each as a sorted state list.
    pub fn sccs(&self) -> Vec<Vec<StateId>> {
        struct Tarjan<'a> {
            a: &'a Automaton,
            index: Vec<Option<usize>>,
            low: Vec<usize>,
            on_stack: Vec<bool>,
            stack: Vec<StateId>,
            counter: usize,
            out: Vec<Vec<StateId>>,
        }
        impl Tarjan<'_> {
            fn visit(&mut self, v: StateId) {
                self.index[v] = Some(self.counter);
                self.low[v] = self.counter;
                self.counter += 1;
                self.stack.push(v);
                self.on_stack[v] = true;
                let succ: Vec<StateId> = self.a.delta[v].iter().flatten().copied().collect();
                for w in succ {
                    match self.index[w] {
                        None => {
                            self.visit(w);
                            self.low[v] = self.low[v].min(self.low[w]);
                        }
                        Some(iw) if self.on_stack[w] => self.low[v] = self.low[v].min(iw),
                        _ => {}
                    }
                }
                if Some(self.low[v]) == self.index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = self.stack.pop().unwrap();
                        self.on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    self.out.push(comp);
                }
            }
        }
        let n = self.num_states();
        let mut t = Tarjan {
            a: self,
            index: vec![None; n],
            low: vec![0; n],
            on_stack: vec![false; n],
            stack: Vec::new(),
            counter: 0,
            out: Vec::new(),
        };
        for v in 0..n {
            if t.index[v].is_none() {
                t.visit(v);
            }
        }
        t.out
    }

    /// States lying in strongly connected components with no edge leaving
    /// them, as a presentation with every such state initial.
    pub fn terminal_part(&self) -> Automaton {
        let comps = self.sccs();
        let mut comp_of = vec![0; self.num_states()];
        for (i, c) in comps.iter().enumerate() {
            for &s in c {
                comp_of[s] = i;
            }
        }
        let mut keep = vec![false; self.num_states()];
        for (i, c) in comps.iter().enumerate() {
            let closed = c.iter().all(|&s| self.delta[s].iter().flatten().all(|&t| comp_of[t] == i));
            let cyclic = c.len() > 1 || self.delta[c[0]].iter().flatten().any(|&t| t == c[0]);
            if closed && cyclic {
                for &s in c {
                    keep[s] = true;
                }
            }
        }
        let mut a = self.clone();
        a.initial = (0..self.num_states()).filter(|&s| keep[s]).collect();
        let order = a.bfs_order(&keep);
        let mut r = a.renumber(&order);
        r.initial = (0..r.num_states()).collect();
        r
    }

    /// Adjacency count matrix: entry `(s, t)` counts edges from `s` to `t`.
    pub fn adjacency(&self) -> Vec<Vec<u64>> {
        let n = self.num_states();
        let mut m = vec![vec![0u64; n]; n];
        for (s, row) in self.delta.iter().enumerate() {
            for &t in row.iter().flatten() {
                m[s][t] += 1;
            }
        }
        m
    }

    /// Natural logarithm of the spectral radius of the adjacency matrix.
    pub fn entropy(&self) -> Result<f64> {
        if self.num_states() == 0 {
            return Err(Error::EmptyAutomaton);
        }
        let m = self.adjacency();
        let mut rho = 0.0f64;
        for comp in self.sccs() {
            let sub: Vec<Vec<f64>> =
                comp.iter().map(|&i| comp.iter().map(|&j| m[i][j] as f64).collect()).collect();
            if sub.iter().all(|r| r.iter().all(|&x| x == 0.0)) {
                continue;
            }
            rho = rho.max(spectral_radius_irreducible(&sub)?);
        }
        if rho == 0.0 {
            return Err(Error::EmptyAutomaton);
        }
        Ok(rho.ln())
    }

    // ---- serialization ----

    fn to_doc(&self) -> AutomatonDoc {
        AutomatonDoc {
            states: (0..self.num_states()).collect(),
            alphabet: (self.lo..=self.hi).collect(),
            initial: self.initial.clone(),
            finals: (0..self.num_states()).filter(|&s| self.finals[s]).collect(),
            transitions: self.transitions(),
        }
    }

    fn from_doc(doc: AutomatonDoc) -> Result<Self> {
        let lo = *doc.alphabet.iter().min().ok_or_else(|| Error::Parse("empty alphabet".into()))?;
        let hi = *doc.alphabet.iter().max().unwrap();
        let n = doc.states.len();
        let check = |s: StateId| if s < n { Ok(s) } else { Err(Error::Parse(format!("unknown state {s}"))) };
        let mut a = Automaton::new(lo, hi, n);
        for t in doc.transitions {
            let (from, to) = (check(t.from)?, check(t.to)?);
            if a.slot(t.label).is_none() {
                return Err(Error::Parse(format!("label {} outside the alphabet", t.label)));
            }
            if a.next(from, t.label).is_some() {
                return Err(Error::Parse(format!("two edges from {from} on {}", t.label)));
            }
            a.set_edge(from, t.label, to);
        }
        for s in doc.finals {
            a.finals[check(s)?] = true;
        }
        a.initial = doc.initial.into_iter().map(check).collect::<Result<_>>()?;
        Ok(a)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: AutomatonDoc = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_doc(doc)
    }

    /// Graphviz rendering; parallel edges are merged into one label.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        writeln!(s, "digraph automaton {{").unwrap();
        writeln!(s, "  rankdir=LR;").unwrap();
        writeln!(s, "  comment=\"alphabet {}..{}\";", self.lo, self.hi).unwrap();
        for q in 0..self.num_states() {
            let shape = if self.finals[q] { "doublecircle" } else { "circle" };
            writeln!(s, "  {q} [shape={shape}];").unwrap();
        }
        for (i, &q) in self.initial.iter().enumerate() {
            writeln!(s, "  start{i} [shape=point];").unwrap();
            writeln!(s, "  start{i} -> {q};").unwrap();
        }
        let mut grouped: Vec<((StateId, StateId), Vec<Digit>)> = Vec::new();
        for t in self.transitions() {
            match grouped.iter_mut().find(|(k, _)| *k == (t.from, t.to)) {
                Some((_, v)) => v.push(t.label),
                None => grouped.push(((t.from, t.to), vec![t.label])),
            }
        }
        for ((a, b), labels) in grouped {
            let l: Vec<String> = labels.iter().map(|d| d.to_string()).collect();
            writeln!(s, "  {a} -> {b} [label=\"{}\"];", l.join(",")).unwrap();
        }
        writeln!(s, "}}").unwrap();
        s
    }

    /// Reads back the output of [`Automaton::to_dot`].
    pub fn from_dot(text: &str) -> Result<Self> {
        let bad = |l: &str| Error::Parse(format!("unrecognized DOT line {l:?}"));
        let mut alphabet = None;
        let mut finals = Vec::new();
        let mut n = 0;
        let mut initial = Vec::new();
        let mut edges = Vec::new();
        for raw in text.lines() {
            let line = raw.trim().trim_end_matches(';');
            if line.is_empty() || line.starts_with("digraph") || line == "}" || line.starts_with("rankdir") {
                continue;
            }
            if let Some(rest) = line.strip_prefix("comment=\"alphabet ") {
                let rest = rest.trim_end_matches('"');
                let (a, b) = rest.split_once("..").ok_or_else(|| bad(line))?;
                let a: Digit = a.parse().map_err(|_| bad(line))?;
                let b: Digit = b.parse().map_err(|_| bad(line))?;
                alphabet = Some((a, b));
                continue;
            }
            if let Some((lhs, rhs)) = line.split_once("->") {
                let lhs = lhs.trim();
                let (to, label) = match rhs.split_once('[') {
                    Some((t, attrs)) => {
                        let l = attrs.split('"').nth(1).ok_or_else(|| bad(line))?;
                        (t.trim(), Some(l.to_string()))
                    }
                    None => (rhs.trim(), None),
                };
                let to: StateId = to.parse().map_err(|_| bad(line))?;
                if lhs.starts_with("start") {
                    initial.push(to);
                } else {
                    let from: StateId = lhs.parse().map_err(|_| bad(line))?;
                    let label = label.ok_or_else(|| bad(line))?;
                    for d in label.split(',') {
                        edges.push(Transition { from, label: d.trim().parse().map_err(|_| bad(line))?, to });
                    }
                }
                continue;
            }
            if let Some((name, attrs)) = line.split_once('[') {
                let name = name.trim();
                if name.starts_with("start") {
                    continue;
                }
                let q: StateId = name.parse().map_err(|_| bad(line))?;
                n = n.max(q + 1);
                if attrs.contains("doublecircle") {
                    finals.push(q);
                }
                continue;
            }
            return Err(bad(line));
        }
        let (lo, hi) = alphabet.ok_or_else(|| Error::Parse("missing alphabet comment".into()))?;
        Self::from_doc(AutomatonDoc {
            states: (0..n).collect(),
            alphabet: (lo..=hi).collect(),
            initial,
            finals,
            transitions: edges,
        })
    }
}

/// Power iteration on `A + I` for a nonnegative irreducible matrix; the
/// shift makes the matrix primitive so the iteration converges.
fn spectral_radius_irreducible(a: &[Vec<f64>]) -> Result<f64> {
    let n = a.len();
    let mut v = vec![1.0f64; n];
    let mut prev = f64::NAN;
    for _ in 0..1_000_000 {
        let mut w = v.clone();
        for i in 0..n {
            for j in 0..n {
                w[i] += a[i][j] * v[j];
            }
        }
        let norm_v: f64 = v.iter().sum();
        let norm_w: f64 = w.iter().sum();
        let lambda = norm_w / norm_v;
        for x in w.iter_mut() {
            *x /= norm_w;
        }
        v = w;
        if (lambda - prev).abs() <= 1e-14 * lambda {
            return Ok(lambda - 1.0);
        }
        prev = lambda;
    }
    Err(Error::NoConvergence)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn even_shift() -> Automaton {
        let mut a = Automaton::new(0, 1, 2);
        a.set_edge(0, 1, 0);
        a.set_edge(0, 0, 1);
        a.set_edge(1, 0, 0);
        a.set_final(0, true);
        a.set_final(1, true);
        a.set_initial(vec![0, 1]);
        a
    }

    fn all_words(lo: Digit, hi: Digit, max_len: usize) -> Vec<Vec<Digit>> {
        let mut out = vec![Vec::new()];
        let mut layer = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for d in lo..=hi {
                    let mut x: Vec<Digit> = w.clone();
                    x.push(d);
                    next.push(x);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    #[test]
    fn minimize_preserves_language() {
        let a = even_shift();
        let m = a.minimize();
        assert_eq!(m.num_states(), 3);
        for w in all_words(0, 1, 10) {
            assert_eq!(a.accepts(&w), m.accepts(&w), "{w:?}");
        }
        assert!(a.language_equal(&m));
        assert!(m.terminal_part().is_isomorphic(&a));
    }

    #[test]
    fn product_with_full_automaton() {
        let mut full = Automaton::new(0, 1, 1);
        full.set_edge(0, 0, 0);
        full.set_edge(0, 1, 0);
        full.set_final(0, true);
        full.set_initial(vec![0]);
        let m = even_shift().minimize();
        let p = m.product(&full);
        assert!(p.is_isomorphic(&m));
        assert_eq!(m.trim(), m);
    }

    #[test]
    fn entropies() {
        let e = even_shift().entropy().unwrap();
        assert!((e - 1.618033988749895f64.ln()).abs() < 1e-12);
        let mut full = Automaton::new(0, 1, 1);
        full.set_edge(0, 0, 0);
        full.set_edge(0, 1, 0);
        assert!((full.entropy().unwrap() - 2f64.ln()).abs() < 1e-12);
        assert_eq!(Automaton::new(0, 1, 0).entropy().unwrap_err(), Error::EmptyAutomaton);
    }

    #[test]
    fn serialization_round_trips() {
        let a = even_shift().minimize();
        assert_eq!(Automaton::from_json(&a.to_json()).unwrap(), a);
        assert_eq!(Automaton::from_dot(&a.to_dot()).unwrap(), a);
        let p = even_shift();
        assert_eq!(Automaton::from_dot(&p.to_dot()).unwrap(), p);
        assert!(Automaton::from_json("{\"states\":[0]}").is_err());
    }
}
