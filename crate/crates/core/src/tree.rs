//! The complete infinite rooted ternary tree of positive primitive
//! Pythagorean triples: parameterization, the three child maps, the parent
//! map, streaming level iteration, and navigation between tree paths and
//! generator words.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::words::{Gamma2Word, Generator, Syllable};

/// A positive primitive Pythagorean triple, normalized with `s` odd and
/// `c` even; `n` is the hypotenuse (odd as a consequence).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimTriple {
    s: BigInt,
    c: BigInt,
    n: BigInt,
}

impl PrimTriple {
    pub fn new(s: BigInt, c: BigInt, n: BigInt) -> Result<Self> {
        if !s.is_positive() || !c.is_positive() || !n.is_positive() {
            return Err(Error::InvalidTriple("coordinates must be positive".into()));
        }
        if s.is_even() || c.is_odd() {
            return Err(Error::InvalidTriple(format!(
                "({s}, {c}, {n}) is not normalized with odd leg first, even leg second"
            )));
        }
        if &s * &s + &c * &c != &n * &n {
            return Err(Error::InvalidTriple(format!("{s}^2 + {c}^2 != {n}^2")));
        }
        if s.gcd(&c) != BigInt::one() {
            return Err(Error::InvalidTriple(format!(
                "gcd({s}, {c}) > 1, not primitive"
            )));
        }
        Ok(PrimTriple { s, c, n })
    }

    pub fn from_i64(s: i64, c: i64, n: i64) -> Result<Self> {
        PrimTriple::new(s.into(), c.into(), n.into())
    }

    /// The tree root (3, 4, 5).
    pub fn root() -> Self {
        PrimTriple {
            s: 3.into(),
            c: 4.into(),
            n: 5.into(),
        }
    }

    pub(crate) fn new_unchecked(s: BigInt, c: BigInt, n: BigInt) -> Self {
        debug_assert!(&s * &s + &c * &c == &n * &n && s.is_odd() && c.is_even());
        PrimTriple { s, c, n }
    }

    /// Odd leg.
    pub fn s(&self) -> &BigInt {
        &self.s
    }

    /// Even leg.
    pub fn c(&self) -> &BigInt {
        &self.c
    }

    /// Hypotenuse.
    pub fn n(&self) -> &BigInt {
        &self.n
    }

    pub fn is_root(&self) -> bool {
        *self == PrimTriple::root()
    }
}

impl fmt::Display for PrimTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.s, self.c, self.n)
    }
}

/// Generating pair with `m > n >= 1`, coprime and of opposite parity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamPair {
    m: BigInt,
    n: BigInt,
}

impl ParamPair {
    pub fn new(m: BigInt, n: BigInt) -> Result<Self> {
        if !(n.is_positive() && m > n) {
            return Err(Error::InvalidParams(format!(
                "need m > n >= 1, got ({m}, {n})"
            )));
        }
        if m.gcd(&n) != BigInt::one() {
            return Err(Error::InvalidParams(format!("({m}, {n}) not coprime")));
        }
        if (&m + &n).is_even() {
            return Err(Error::InvalidParams(format!(
                "({m}, {n}) not of opposite parity"
            )));
        }
        Ok(ParamPair { m, n })
    }

    pub fn from_i64(m: i64, n: i64) -> Result<Self> {
        ParamPair::new(m.into(), n.into())
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }
}

impl fmt::Display for ParamPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

/// `(m^2 - n^2, 2mn, m^2 + n^2)`.
pub fn triple_from_params(p: &ParamPair) -> PrimTriple {
    let (m, n) = (&p.m, &p.n);
    PrimTriple::new_unchecked(m * m - n * n, 2 * (m * n), m * m + n * n)
}

/// Inverts the parameterization: `m = sqrt((N+S)/2)`, `n = sqrt((N-S)/2)`.
/// Both radicands are perfect squares for every valid primitive triple.
pub fn params_from_triple(t: &PrimTriple) -> ParamPair {
    let m_sq: BigInt = (&t.n + &t.s) / 2;
    let n_sq: BigInt = (&t.n - &t.s) / 2;
    let m = m_sq.sqrt();
    let n = n_sq.sqrt();
    assert!(
        &m * &m == m_sq && &n * &n == n_sq,
        "primitive triple must have square radicands"
    );
    ParamPair { m, n }
}

/// The three child directions, in the canonical left-to-right order of the
/// tree: `UMinus < LPlus < UPlus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChildKind {
    UMinus,
    LPlus,
    UPlus,
}

impl ChildKind {
    pub const ALL: [ChildKind; 3] = [ChildKind::UMinus, ChildKind::LPlus, ChildKind::UPlus];

    /// Canonical token, also used by the path serialization.
    pub fn token(self) -> &'static str {
        match self {
            ChildKind::UMinus => "U-",
            ChildKind::LPlus => "L+",
            ChildKind::UPlus => "U+",
        }
    }
}

impl fmt::Display for ChildKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// One child step. The three maps are affine on the triple coordinates:
///
/// * `UMinus`: `[-S, C, N] + 2(N + S - C) * [1, 1, 1]`
/// * `LPlus`:  `[S, -C, N] + 2(N - S + C) * [1, 1, 1]`
/// * `UPlus`:  `[-S, -C, N] + 2(N + S + C) * [1, 1, 1]`
///
/// On parameters they act as `(m, n) -> (2m - n, m)`, `(m + 2n, n)` and
/// `(2m + n, m)` respectively; the hypotenuse strictly increases.
pub fn child(t: &PrimTriple, kind: ChildKind) -> PrimTriple {
    let (s, c, n) = (&t.s, &t.c, &t.n);
    let (s2, c2, n2) = match kind {
        ChildKind::UMinus => {
            let shift = 2 * (n + s - c);
            (-s + &shift, c + &shift, n + &shift)
        }
        ChildKind::LPlus => {
            let shift = 2 * (n - s + c);
            (s + &shift, -c + &shift, n + &shift)
        }
        ChildKind::UPlus => {
            let shift = 2 * (n + s + c);
            (-s + &shift, -c + &shift, n + &shift)
        }
    };
    PrimTriple::new_unchecked(s2, c2, n2)
}

/// The three children in canonical order.
pub fn children(t: &PrimTriple) -> [PrimTriple; 3] {
    [
        child(t, ChildKind::UMinus),
        child(t, ChildKind::LPlus),
        child(t, ChildKind::UPlus),
    ]
}

/// The unique predecessor, or `None` at the root. Computed in parameter
/// space: of the three candidate inverses `(n, 2n - m)`, `(m - 2n, n)` and
/// `(n, m - 2n)`, exactly one lands in a valid pair for every non-root
/// triple.
pub fn parent(t: &PrimTriple) -> Option<(PrimTriple, ChildKind)> {
    let p = params_from_triple(t);
    let (m, n) = (&p.m, &p.n);
    let candidates = [
        (ChildKind::UMinus, n.clone(), 2 * n - m),
        (ChildKind::LPlus, m - 2 * n, n.clone()),
        (ChildKind::UPlus, n.clone(), m - 2 * n),
    ];
    let mut found = None;
    for (kind, pm, pn) in candidates {
        if pn.is_positive() && pm > pn {
            debug_assert!(found.is_none(), "parent must be unique");
            found = Some((triple_from_params(&ParamPair { m: pm, n: pn }), kind));
        }
    }
    found
}

/// A path from the root; length equals the level of the addressed node.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct TreePath {
    steps: Vec<ChildKind>,
}

impl TreePath {
    pub fn new(steps: Vec<ChildKind>) -> Self {
        TreePath { steps }
    }

    pub fn empty() -> Self {
        TreePath { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[ChildKind] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn push(&mut self, kind: ChildKind) {
        self.steps.push(kind);
    }
}

impl fmt::Display for TreePath {
    /// Emits the long tokens, e.g. `U-,U-`; the empty path is the empty
    /// string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, kind) in self.steps.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            f.write_str(kind.token())?;
        }
        Ok(())
    }
}

impl FromStr for TreePath {
    type Err = Error;

    /// Accepts both the short tokens `-`, `0`, `+` and the long tokens
    /// `U-`, `L+`, `U+`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(TreePath::empty());
        }
        let mut steps = Vec::new();
        for token in s.split(',') {
            let kind = match token.trim() {
                "-" | "U-" => ChildKind::UMinus,
                "0" | "L+" => ChildKind::LPlus,
                "+" | "U+" => ChildKind::UPlus,
                other => return Err(Error::PathParse(format!("bad step '{other}'"))),
            };
            steps.push(kind);
        }
        Ok(TreePath { steps })
    }
}

/// Folds the child maps over the path, starting from (3, 4, 5).
pub fn node_at(path: &TreePath) -> PrimTriple {
    let mut t = PrimTriple::root();
    for &kind in &path.steps {
        t = child(&t, kind);
    }
    t
}

/// The unique path addressing `t`, found by walking the parent map to the
/// root and reversing.
pub fn locate(t: &PrimTriple) -> TreePath {
    let mut steps = Vec::new();
    let mut cur = t.clone();
    while let Some((up, kind)) = parent(&cur) {
        steps.push(kind);
        cur = up;
    }
    steps.reverse();
    TreePath { steps }
}

/// Streaming depth-first walk over all nodes of one level in path order.
/// Memory stays proportional to the level, not to the 3^k output size.
/// Cloning the iterator forks its traversal state.
#[derive(Clone, Debug)]
pub struct LevelWalk {
    path: Vec<ChildKind>,
    nodes: Vec<PrimTriple>, // nodes along the path, root first; len = path.len() + 1
    done: bool,
}

impl LevelWalk {
    pub fn new(level: usize) -> Self {
        let mut nodes = Vec::with_capacity(level + 1);
        nodes.push(PrimTriple::root());
        for i in 0..level {
            let next = child(&nodes[i], ChildKind::UMinus);
            nodes.push(next);
        }
        LevelWalk {
            path: vec![ChildKind::UMinus; level],
            nodes,
            done: false,
        }
    }

    fn advance(&mut self) {
        // Increment the path like a base-3 counter, leftmost digit most
        // significant, then rebuild the changed suffix of the node stack.
        let mut i = self.path.len();
        loop {
            if i == 0 {
                self.done = true;
                return;
            }
            i -= 1;
            match self.path[i] {
                ChildKind::UMinus => {
                    self.path[i] = ChildKind::LPlus;
                    break;
                }
                ChildKind::LPlus => {
                    self.path[i] = ChildKind::UPlus;
                    break;
                }
                ChildKind::UPlus => {
                    self.path[i] = ChildKind::UMinus;
                }
            }
        }
        for j in i..self.path.len() {
            self.nodes[j + 1] = child(&self.nodes[j], self.path[j]);
        }
    }
}

impl Iterator for LevelWalk {
    type Item = (TreePath, PrimTriple);

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let item = (
            TreePath::new(self.path.clone()),
            self.nodes.last().expect("stack holds the root").clone(),
        );
        self.advance();
        Some(item)
    }
}

/// All 3^k triples of level `k` in canonical path order.
pub fn level_iter(k: usize) -> impl Iterator<Item = PrimTriple> + Clone {
    LevelWalk::new(k).map(|(_, t)| t)
}

/// Every tree triple with hypotenuse at most `bound`, found by pruned
/// depth-first search (children only ever grow the hypotenuse).
pub fn triples_with_hypotenuse_at_most(bound: &BigInt) -> Vec<PrimTriple> {
    let mut out = Vec::new();
    let root = PrimTriple::root();
    if root.n() > bound {
        return out;
    }
    let mut stack = vec![root];
    while let Some(t) = stack.pop() {
        for kid in children(&t) {
            if kid.n() <= bound {
                stack.push(kid);
            }
        }
        out.push(t);
    }
    out
}

/// The coset word addressing the same node as `path`.
///
/// The empty path maps to `L^2`. Each step prepends one even generator,
/// chosen from the current leftmost syllable `(g, sign)`: `LPlus` extends
/// the same letter with the same sign, `UPlus` switches letter keeping the
/// sign, and `UMinus` switches letter and flips the sign. This is the word
/// whose conjugation action lands on exactly the child triple, so
/// `word_to_triple(word_for(p)) = node_at(p)`.
pub fn word_for(path: &TreePath) -> Gamma2Word {
    // Build right-to-left: `rev` holds the word with the rightmost syllable
    // first, so every prepend touches only the vector tail.
    let mut rev = vec![Syllable::new(Generator::L, 1)];
    for &kind in &path.steps {
        let front = *rev.last().expect("word is never empty");
        let sign = front.exponent.signum();
        match kind {
            ChildKind::LPlus => rev.last_mut().expect("nonempty").exponent += sign,
            ChildKind::UPlus => rev.push(Syllable::new(front.generator.other(), sign)),
            ChildKind::UMinus => rev.push(Syllable::new(front.generator.other(), -sign)),
        }
    }
    rev.reverse();
    Gamma2Word::from_syllables(rev)
}
