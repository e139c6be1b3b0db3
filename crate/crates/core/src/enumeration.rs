//! Generation of every shortest properly coloured path between two vertices.
//!
//! A proper path alternates colour classes, so it is the strict interleaving
//! of two flip sequences, one per class, starting with either class. For a
//! start class `s` and `pd = proper_distance(u, v)`, class `s` makes
//! `ceil(pd / 2)` flips and the other class `floor(pd / 2)`. Each class's
//! sequence is a word over its dimensions in which the dimensions where `u`
//! and `v` differ occur an odd number of times and the others an even number
//! of times. On the surplus side every differing dimension is flipped exactly
//! once, which makes all generated vertex sequences simple.
//!
//! Order: start class 1 before class 2, then surplus-side words in
//! lexicographic order, then deficit-side words in lexicographic order.

use std::fmt;

use crate::coloring::{ColorClass, Coloring};
use crate::error::Result;
use crate::metrics::pair_profile;
use crate::vertex::Vertex;

/// A path in the hypercube with the dimension flipped on every edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProperPath {
    vertices: Vec<Vertex>,
    flips: Vec<usize>,
}

impl ProperPath {
    /// Walks from `start` flipping `flips` in order.
    pub fn from_flips(start: Vertex, flips: &[usize]) -> Result<Self> {
        let n = start.dims();
        let mut vertices = Vec::with_capacity(flips.len() + 1);
        vertices.push(start);
        for &dim in flips {
            if dim == 0 || dim > n {
                return Err(crate::Error::DimensionOutOfRange { dim, n });
            }
            let next = vertices.last().expect("nonempty").flipped(dim);
            vertices.push(next);
        }
        Ok(ProperPath {
            vertices,
            flips: flips.to_vec(),
        })
    }

    /// Recovers the flips of a vertex sequence; every step must cross a
    /// single dimension.
    pub fn from_vertices(vertices: Vec<Vertex>) -> std::result::Result<Self, PathViolation> {
        if vertices.is_empty() {
            return Err(PathViolation {
                index: 0,
                kind: ViolationKind::Empty,
            });
        }
        let mut flips = Vec::with_capacity(vertices.len() - 1);
        for (i, pair) in vertices.windows(2).enumerate() {
            flips.push(single_flip(&pair[0], &pair[1], i)?);
        }
        Ok(ProperPath { vertices, flips })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn flips(&self) -> &[usize] {
        &self.flips
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.flips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flips.is_empty()
    }

    pub fn start(&self) -> &Vertex {
        &self.vertices[0]
    }

    pub fn end(&self) -> &Vertex {
        self.vertices
            .last()
            .expect("a path has at least one vertex")
    }

    /// `dims: 5,2,6,3,7`
    pub fn flips_text(&self) -> String {
        let dims: Vec<String> = self.flips.iter().map(|d| d.to_string()).collect();
        format!("dims: {}", dims.join(","))
    }

    /// `0101000->0101100->...`
    pub fn vertices_text(&self) -> String {
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        parts.join("->")
    }
}

impl fmt::Display for ProperPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.vertices_text())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    Empty,
    /// A vertex has a different dimension count from the colouring.
    DimensionMismatch,
    /// Edge `index` does not join two adjacent hypercube vertices.
    NotAdjacent,
    /// Edges `index - 1` and `index` have the same colour.
    SameColor,
    /// Vertex `index` repeats an earlier vertex.
    RepeatedVertex,
}

/// The first place a vertex sequence stops being a proper path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathViolation {
    pub index: usize,
    pub kind: ViolationKind,
}

impl fmt::Display for PathViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ViolationKind::Empty => write!(f, "path has no vertices"),
            ViolationKind::DimensionMismatch => {
                write!(f, "vertex {} has the wrong dimension", self.index)
            }
            ViolationKind::NotAdjacent => {
                write!(f, "edge {} joins non-adjacent vertices", self.index)
            }
            ViolationKind::SameColor => {
                write!(
                    f,
                    "edges {} and {} share a colour",
                    self.index - 1,
                    self.index
                )
            }
            ViolationKind::RepeatedVertex => {
                write!(f, "vertex {} repeats an earlier vertex", self.index)
            }
        }
    }
}

impl std::error::Error for PathViolation {}

fn single_flip(a: &Vertex, b: &Vertex, edge: usize) -> std::result::Result<usize, PathViolation> {
    let not_adjacent = PathViolation {
        index: edge,
        kind: ViolationKind::NotAdjacent,
    };
    match a.differing_dims(b) {
        Ok(dims) if dims.len() == 1 => Ok(dims[0]),
        _ => Err(not_adjacent),
    }
}

/// Checks a vertex sequence against `c`: every step crosses one dimension,
/// consecutive edges alternate colour classes, and no vertex repeats.
/// Reports the first violation in path order.
pub fn check_proper_path(
    vertices: &[Vertex],
    c: &Coloring,
) -> std::result::Result<(), PathViolation> {
    if vertices.is_empty() {
        return Err(PathViolation {
            index: 0,
            kind: ViolationKind::Empty,
        });
    }
    let mut seen = std::collections::HashSet::with_capacity(vertices.len());
    let mut prev_class = None;
    for (i, v) in vertices.iter().enumerate() {
        if v.dims() != c.dims() {
            return Err(PathViolation {
                index: i,
                kind: ViolationKind::DimensionMismatch,
            });
        }
        if i > 0 {
            let edge = i - 1;
            let dim = single_flip(&vertices[i - 1], v, edge)?;
            let class = c.class_of(dim);
            if prev_class == Some(class) {
                return Err(PathViolation {
                    index: edge,
                    kind: ViolationKind::SameColor,
                });
            }
            prev_class = Some(class);
        }
        if !seen.insert(v) {
            return Err(PathViolation {
                index: i,
                kind: ViolationKind::RepeatedVertex,
            });
        }
    }
    Ok(())
}

/// Whether `p` is a properly coloured simple path under `c`.
pub fn is_proper_path(p: &ProperPath, c: &Coloring) -> bool {
    check_proper_path(p.vertices(), c).is_ok()
}

/// Lexicographic cursor over parity-constrained words.
///
/// Letters are the dimensions of one colour class, ascending; `odd[k]` says
/// whether letter `k` must occur an odd number of times.
#[derive(Debug, Clone)]
struct WordCursor {
    letters: Vec<usize>,
    odd: Vec<bool>,
    len: usize,
    word: Vec<usize>,
    counts: Vec<usize>,
    /// Letters whose current count has the wrong parity.
    mismatched: usize,
}

impl WordCursor {
    fn new(letters: Vec<usize>, odd: Vec<bool>, len: usize) -> Self {
        let l = letters.len();
        let mismatched = odd.iter().filter(|&&b| b).count();
        WordCursor {
            letters,
            odd,
            len,
            word: Vec::with_capacity(len),
            counts: vec![0; l],
            mismatched,
        }
    }

    fn reset(&mut self) {
        while let Some(k) = self.word.pop() {
            self.remove(k);
        }
    }

    fn add(&mut self, k: usize) {
        self.toggle(k);
        self.counts[k] += 1;
    }

    fn remove(&mut self, k: usize) {
        self.toggle(k);
        self.counts[k] -= 1;
    }

    fn toggle(&mut self, k: usize) {
        let wrong = (self.counts[k] % 2 == 1) != self.odd[k];
        if wrong {
            self.mismatched -= 1;
        } else {
            self.mismatched += 1;
        }
    }

    /// Can the current prefix be completed to a valid word?
    fn completable(&self) -> bool {
        let remaining = self.len - self.word.len();
        self.mismatched <= remaining
            && (remaining - self.mismatched).is_multiple_of(2)
            && (remaining == 0 || !self.letters.is_empty())
    }

    /// Appends the first letter `>= from` that keeps the prefix completable.
    fn push_smallest(&mut self, from: usize) -> bool {
        for k in from..self.letters.len() {
            self.add(k);
            self.word.push(k);
            if self.completable() {
                return true;
            }
            self.word.pop();
            self.remove(k);
        }
        false
    }

    fn fill(&mut self) -> bool {
        while self.word.len() < self.len {
            if !self.push_smallest(0) {
                return false;
            }
        }
        true
    }

    /// Positions the cursor on the first word; false if none exists.
    fn first(&mut self) -> bool {
        self.reset();
        self.completable() && self.fill()
    }

    /// Moves to the next word in lexicographic order.
    fn advance(&mut self) -> bool {
        while let Some(k) = self.word.pop() {
            self.remove(k);
            if self.push_smallest(k + 1) {
                return self.fill();
            }
        }
        false
    }

    fn dim_at(&self, pos: usize) -> usize {
        self.letters[self.word[pos]]
    }
}

#[derive(Debug, Clone)]
struct StartPlan {
    start: ColorClass,
    surplus_len: usize,
    deficit_len: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

/// Lazy stream of the shortest proper paths from `u` to `v`.
#[derive(Debug, Clone)]
pub struct ShortestProperPaths {
    origin: Vertex,
    surplus_class: ColorClass,
    plans: Vec<StartPlan>,
    plan: usize,
    surplus: WordCursor,
    deficit: WordCursor,
    state: State,
    /// `u == v`: the single empty path is still pending.
    empty_pending: bool,
}

impl ShortestProperPaths {
    fn new(u: &Vertex, v: &Vertex, c: &Coloring) -> Result<Self> {
        let profile = pair_profile(u, v, c)?;
        let surplus_class = profile.surplus_class();
        let deficit_class = profile.deficit_class;
        let side = |class: ColorClass| {
            let letters = c.members(class).to_vec();
            let odd = letters
                .iter()
                .map(|&d| u.bit(d) != v.bit(d))
                .collect::<Vec<_>>();
            (letters, odd)
        };
        let (s_letters, s_odd) = side(surplus_class);
        let (d_letters, d_odd) = side(deficit_class);

        let lead = profile.pd.div_ceil(2);
        let follow = profile.pd / 2;
        let mut plans = Vec::new();
        if profile.pd > 0 {
            for start in [ColorClass::One, ColorClass::Two] {
                let len_of = |class: ColorClass| if class == start { lead } else { follow };
                let plan = StartPlan {
                    start,
                    surplus_len: len_of(surplus_class),
                    deficit_len: len_of(deficit_class),
                };
                let mut s = WordCursor::new(s_letters.clone(), s_odd.clone(), plan.surplus_len);
                let mut d = WordCursor::new(d_letters.clone(), d_odd.clone(), plan.deficit_len);
                if s.first() && d.first() {
                    plans.push(plan);
                }
            }
        }
        Ok(ShortestProperPaths {
            origin: u.clone(),
            surplus_class,
            plans,
            plan: 0,
            surplus: WordCursor::new(s_letters, s_odd, 0),
            deficit: WordCursor::new(d_letters, d_odd, 0),
            state: State::Fresh,
            empty_pending: profile.pd == 0,
        })
    }

    fn current(&self) -> ProperPath {
        let plan = &self.plans[self.plan];
        let total = plan.surplus_len + plan.deficit_len;
        let (lead, follow) = if plan.start == self.surplus_class {
            (&self.surplus, &self.deficit)
        } else {
            (&self.deficit, &self.surplus)
        };
        let flips: Vec<usize> = (0..total)
            .map(|step| {
                if step % 2 == 0 {
                    lead.dim_at(step / 2)
                } else {
                    follow.dim_at(step / 2)
                }
            })
            .collect();
        ProperPath::from_flips(self.origin.clone(), &flips).expect("flips are class members")
    }
}

impl Iterator for ShortestProperPaths {
    type Item = ProperPath;

    fn next(&mut self) -> Option<ProperPath> {
        if self.empty_pending {
            self.empty_pending = false;
            self.state = State::Done;
            return Some(ProperPath {
                vertices: vec![self.origin.clone()],
                flips: Vec::new(),
            });
        }
        loop {
            match self.state {
                State::Done => return None,
                State::Fresh => {
                    let Some(plan) = self.plans.get(self.plan) else {
                        self.state = State::Done;
                        return None;
                    };
                    self.surplus.len = plan.surplus_len;
                    self.deficit.len = plan.deficit_len;
                    let ok = self.surplus.first() && self.deficit.first();
                    debug_assert!(ok, "plans are filtered for feasibility");
                    self.state = State::Running;
                    return Some(self.current());
                }
                State::Running => {
                    if self.deficit.advance() {
                        return Some(self.current());
                    }
                    if self.surplus.advance() {
                        self.deficit.first();
                        return Some(self.current());
                    }
                    self.plan += 1;
                    self.state = State::Fresh;
                }
            }
        }
    }
}

/// Every shortest proper path from `u` to `v`, each exactly once, in a fixed
/// order. For `u == v` the stream holds the single zero-length path.
pub fn enumerate_shortest_proper_paths(
    u: &Vertex,
    v: &Vertex,
    c: &Coloring,
) -> Result<ShortestProperPaths> {
    ShortestProperPaths::new(u, v, c)
}

/// The first path of [`enumerate_shortest_proper_paths`].
pub fn shortest_path_witness(u: &Vertex, v: &Vertex, c: &Coloring) -> Result<ProperPath> {
    Ok(enumerate_shortest_proper_paths(u, v, c)?
        .next()
        .expect("hypercube colourings with two nonempty classes are properly connected"))
}
