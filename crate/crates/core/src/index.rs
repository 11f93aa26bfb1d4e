//! Aho-Corasick automaton over letters, keyed by relation id.
//!
//! Patterns inserted since the last build sit in a short side list that is
//! scanned directly; once it grows past a threshold the automaton is rebuilt.
//! Removed patterns stay in the automaton until the next rebuild and are
//! filtered out on match. Matching needs only `&self`, so one index can serve
//! many reducer threads at once.

use std::collections::VecDeque;

use crate::word::{Letter, Word};

const ROOT: u32 = 0;
const NONE: u32 = u32::MAX;
const LOOSE_MAX: usize = 24;

#[derive(Clone, Debug)]
struct Node {
    children: Vec<(Letter, u32)>,
    fail: u32,
    // nearest node on the failure chain (excluding self) that ends a pattern
    dict: u32,
    // ids of patterns ending exactly here, ascending
    outputs: Vec<u32>,
    depth: u32,
}

impl Node {
    fn new(depth: u32) -> Self {
        Node {
            children: Vec::new(),
            fail: ROOT,
            dict: NONE,
            outputs: Vec::new(),
            depth,
        }
    }

    fn child(&self, l: Letter) -> Option<u32> {
        self.children
            .binary_search_by_key(&l, |&(k, _)| k)
            .ok()
            .map(|i| self.children[i].1)
    }
}

/// A match: pattern `id` occupies `start..start + len` of the scanned word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Hit {
    pub id: usize,
    pub start: usize,
    pub len: usize,
}

#[derive(Clone, Debug)]
pub struct SubwordIndex {
    patterns: Vec<Option<Word>>,
    nodes: Vec<Node>,
    // ids not yet in the automaton
    loose: Vec<usize>,
    // removed ids still present in the automaton
    dead: usize,
    // ids compiled into the automaton at the last build
    built: Vec<bool>,
    live: usize,
}

impl Default for SubwordIndex {
    fn default() -> Self {
        SubwordIndex {
            patterns: Vec::new(),
            nodes: vec![Node::new(0)],
            loose: Vec::new(),
            dead: 0,
            built: Vec::new(),
            live: 0,
        }
    }
}

impl SubwordIndex {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds an index where pattern `i` is `patterns[i]`.
    pub fn build<'a, I: IntoIterator<Item = &'a Word>>(patterns: I) -> Self {
        let patterns: Vec<Option<Word>> = patterns.into_iter().cloned().map(Some).collect();
        let mut idx = SubwordIndex {
            live: patterns.len(),
            patterns,
            ..Self::default()
        };
        idx.rebuild();
        idx
    }

    pub fn pattern(&self, id: usize) -> Option<&Word> {
        self.patterns.get(id).and_then(Option::as_ref)
    }

    /// Registers `pattern` under `id` (growing the table as needed).
    pub fn insert(&mut self, id: usize, pattern: Word) {
        assert!(!pattern.is_empty(), "empty pattern");
        if self.patterns.len() <= id {
            self.patterns.resize(id + 1, None);
        }
        let replaced = self.patterns[id].replace(pattern).is_some();
        if !replaced {
            self.live += 1;
        }
        if replaced || self.built.get(id).copied().unwrap_or(false) {
            self.loose.retain(|&j| j != id);
            self.rebuild();
            return;
        }
        self.loose.push(id);
        if self.loose.len() > LOOSE_MAX {
            self.rebuild();
        }
    }

    pub fn remove(&mut self, id: usize) {
        let Some(slot) = self.patterns.get_mut(id) else {
            return;
        };
        if slot.take().is_none() {
            return;
        }
        self.live -= 1;
        if let Some(pos) = self.loose.iter().position(|&j| j == id) {
            self.loose.swap_remove(pos);
        } else {
            self.dead += 1;
            if self.dead > 16 + self.live / 2 {
                self.rebuild();
            }
        }
    }

    fn rebuild(&mut self) {
        self.loose.clear();
        self.dead = 0;
        self.built = self.patterns.iter().map(Option::is_some).collect();
        let mut nodes = vec![Node::new(0)];
        for (id, pat) in self.patterns.iter().enumerate() {
            let Some(pat) = pat else { continue };
            let mut cur = ROOT;
            for &l in pat.letters() {
                cur = match nodes[cur as usize].child(l) {
                    Some(next) => next,
                    None => {
                        let next = nodes.len() as u32;
                        let depth = nodes[cur as usize].depth + 1;
                        nodes.push(Node::new(depth));
                        let children = &mut nodes[cur as usize].children;
                        let pos = children.partition_point(|&(k, _)| k < l);
                        children.insert(pos, (l, next));
                        next
                    }
                };
            }
            nodes[cur as usize].outputs.push(id as u32);
        }

        let mut queue = VecDeque::new();
        for &(_, c) in &nodes[ROOT as usize].children {
            queue.push_back(c);
        }
        while let Some(u) = queue.pop_front() {
            let children = nodes[u as usize].children.clone();
            for (l, v) in children {
                let mut f = nodes[u as usize].fail;
                let target = loop {
                    if let Some(t) = nodes[f as usize].child(l) {
                        break t;
                    }
                    if f == ROOT {
                        break ROOT;
                    }
                    f = nodes[f as usize].fail;
                };
                nodes[v as usize].fail = target;
                nodes[v as usize].dict = if !nodes[target as usize].outputs.is_empty() {
                    target
                } else {
                    nodes[target as usize].dict
                };
                queue.push_back(v);
            }
        }
        self.nodes = nodes;
    }

    fn step(&self, mut state: u32, l: Letter) -> u32 {
        loop {
            if let Some(next) = self.nodes[state as usize].child(l) {
                return next;
            }
            if state == ROOT {
                return ROOT;
            }
            state = self.nodes[state as usize].fail;
        }
    }

    /// Calls `f` for every occurrence of every pattern. Automaton hits come
    /// by end position, followed by hits of recently inserted patterns.
    pub fn for_each_hit<F: FnMut(Hit)>(&self, w: &[Letter], mut f: F) {
        self.scan(w, |h| {
            f(h);
            false
        });
    }

    // Reports hits until `f` returns true; returns whether it did.
    fn scan<F: FnMut(Hit) -> bool>(&self, w: &[Letter], mut f: F) -> bool {
        for &id in &self.loose {
            let p = self.patterns[id]
                .as_ref()
                .expect("loose ids are live")
                .letters();
            if p.len() > w.len() {
                continue;
            }
            for start in 0..=w.len() - p.len() {
                if &w[start..start + p.len()] == p
                    && f(Hit {
                        id,
                        start,
                        len: p.len(),
                    })
                {
                    return true;
                }
            }
        }
        let mut state = ROOT;
        for (end, &l) in w.iter().enumerate() {
            state = self.step(state, l);
            let mut node = state;
            if self.nodes[node as usize].outputs.is_empty() {
                node = self.nodes[node as usize].dict;
            }
            while node != NONE {
                let n = &self.nodes[node as usize];
                let len = n.depth as usize;
                for &id in &n.outputs {
                    if self.dead > 0 && self.patterns[id as usize].is_none() {
                        continue;
                    }
                    let hit = Hit {
                        id: id as usize,
                        start: end + 1 - len,
                        len,
                    };
                    if f(hit) {
                        return true;
                    }
                }
                node = n.dict;
            }
        }
        false
    }

    /// The occurrence of the smallest pattern id, leftmost among its
    /// occurrences.
    pub fn first_hit(&self, w: &[Letter]) -> Option<Hit> {
        let mut best: Option<Hit> = None;
        self.for_each_hit(w, |h| {
            let better = match best {
                None => true,
                Some(b) => (h.id, h.start) < (b.id, b.start),
            };
            if better {
                best = Some(h);
            }
        });
        best
    }

    pub fn contains_any(&self, w: &[Letter]) -> bool {
        self.scan(w, |_| true)
    }

    pub fn all_hits(&self, w: &[Letter]) -> Vec<Hit> {
        let mut v = Vec::new();
        self.for_each_hit(w, |h| v.push(h));
        v.sort_by_key(|h| (h.id, h.start));
        v
    }
}
