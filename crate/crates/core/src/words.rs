//! The free-product word calculus on the even generators U^2 = (1,2;0,1)
//! and L^2 = (1,0;2,1): normal forms, evaluation into matrices, the
//! exponent-flip involution, and the inductive coset enumeration that
//! indexes primitive Pythagorean triples.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::matrix::{conjugate, triple_extract, IntMat2};

/// One of the two generator letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    U,
    L,
}

impl Generator {
    pub fn other(self) -> Generator {
        match self {
            Generator::U => Generator::L,
            Generator::L => Generator::U,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::U => write!(f, "U"),
            Generator::L => write!(f, "L"),
        }
    }
}

/// A maximal run of one generator. The exponent is stored in half units:
/// exponent `k` denotes the matrix power `U^{2k}` or `L^{2k}`, so the
/// alternation invariant is about the even generators themselves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub generator: Generator,
    pub exponent: i64,
}

impl Syllable {
    pub fn new(generator: Generator, exponent: i64) -> Self {
        Syllable {
            generator,
            exponent,
        }
    }

    /// The matrix of this syllable: `U^{2k} = (1, 2k; 0, 1)`,
    /// `L^{2k} = (1, 0; 2k, 1)`.
    pub fn matrix(&self) -> IntMat2 {
        let e = BigInt::from(self.exponent) * 2;
        match self.generator {
            Generator::U => IntMat2::new(1.into(), e, 0.into(), 1.into()),
            Generator::L => IntMat2::new(1.into(), 0.into(), e, 1.into()),
        }
    }
}

/// An alternating word in the even generators, leftmost syllable applied
/// last. The empty word is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Gamma2Word {
    syllables: Vec<Syllable>,
}

impl Gamma2Word {
    pub fn empty() -> Self {
        Gamma2Word {
            syllables: Vec::new(),
        }
    }

    /// Normalizes a raw syllable sequence: adjacent same-generator syllables
    /// merge by exponent addition, zero exponents vanish, and cancellation
    /// cascades, so the result is alternating.
    pub fn from_syllables<I: IntoIterator<Item = Syllable>>(raw: I) -> Self {
        let mut stack: Vec<Syllable> = Vec::new();
        for syl in raw {
            if syl.exponent == 0 {
                continue;
            }
            match stack.last_mut() {
                Some(top) if top.generator == syl.generator => {
                    top.exponent = top
                        .exponent
                        .checked_add(syl.exponent)
                        .expect("syllable exponent overflow");
                    if top.exponent == 0 {
                        stack.pop();
                    }
                }
                _ => stack.push(syl),
            }
        }
        Gamma2Word { syllables: stack }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of syllables in normal form.
    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn leftmost(&self) -> Option<Syllable> {
        self.syllables.first().copied()
    }

    pub fn rightmost(&self) -> Option<Syllable> {
        self.syllables.last().copied()
    }

    /// New word with `syl` adjoined on the left, renormalizing.
    pub fn prepend(&self, syl: Syllable) -> Gamma2Word {
        let mut raw = Vec::with_capacity(self.syllables.len() + 1);
        raw.push(syl);
        raw.extend_from_slice(&self.syllables);
        Gamma2Word::from_syllables(raw)
    }

    /// Concatenation followed by normalization, i.e. the group product.
    pub fn concat(&self, rhs: &Gamma2Word) -> Gamma2Word {
        Gamma2Word::from_syllables(self.syllables.iter().chain(rhs.syllables.iter()).copied())
    }

    /// Product of the syllable matrices in word order; the empty word maps
    /// to the identity. The image always has determinant 1 and reduces to
    /// the identity mod 2.
    pub fn evaluate(&self) -> IntMat2 {
        let mut acc = IntMat2::identity();
        for syl in &self.syllables {
            acc = acc.mul(&syl.matrix());
        }
        acc
    }

    /// The exponent-flip involution `U^2 -> U^-2`, `L^2 -> L^-2`; at the
    /// matrix level this is conjugation by `diag(-1, 1)`.
    pub fn delta(&self) -> Gamma2Word {
        Gamma2Word {
            syllables: self
                .syllables
                .iter()
                .map(|s| Syllable::new(s.generator, -s.exponent))
                .collect(),
        }
    }

    /// True when the word can index a triple, i.e. its rightmost generator
    /// is L (representatives of cosets modulo the U-power stabilizer).
    pub fn is_coset_representative(&self) -> bool {
        matches!(self.rightmost(), Some(s) if s.generator == Generator::L)
    }
}

/// Conjugates the seed matrix by the word and extracts the triple.
/// Words ending in a U power (including the empty word) stabilize the seed
/// up to sign and are rejected.
pub fn word_to_triple(w: &Gamma2Word) -> Result<(BigInt, BigInt, BigInt)> {
    if !w.is_coset_representative() {
        return Err(Error::NotCosetWord);
    }
    let mat = conjugate(&w.evaluate(), &IntMat2::seed_e()).expect("word matrices are unimodular");
    triple_extract(&mat)
}

impl fmt::Display for Gamma2Word {
    /// Serialized form: matrix exponents, comma separated, e.g. `U^-2,L^2`;
    /// the empty word prints as `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "e");
        }
        for (i, syl) in self.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}^{}", syl.generator, 2 * syl.exponent as i128)?;
        }
        Ok(())
    }
}

impl FromStr for Gamma2Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "e" {
            return Ok(Gamma2Word::empty());
        }
        if s.is_empty() {
            return Err(Error::WordParse(
                "empty string (the identity is written 'e')".into(),
            ));
        }
        let mut raw = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let rest = token
                .strip_prefix("U^")
                .map(|r| (Generator::U, r))
                .or_else(|| token.strip_prefix("L^").map(|r| (Generator::L, r)));
            let (generator, exp_str) =
                rest.ok_or_else(|| Error::WordParse(format!("bad token '{token}'")))?;
            let exp: i64 = exp_str
                .parse()
                .map_err(|_| Error::WordParse(format!("bad exponent in '{token}'")))?;
            if exp == 0 {
                return Err(Error::WordParse(format!("zero exponent in '{token}'")));
            }
            if exp % 2 != 0 {
                return Err(Error::WordParse(format!(
                    "odd exponent in '{token}': only even powers lie in the word group"
                )));
            }
            raw.push(Syllable::new(generator, exp / 2));
        }
        Ok(Gamma2Word::from_syllables(raw))
    }
}

/// The four word families at one level of the coset enumeration, kept
/// explicit so the 3x branching is structurally evident. Every stored word
/// has rightmost generator L, and the level holds 3^level words in total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetLevel {
    pub level: usize,
    pub l_plus: Vec<Gamma2Word>,
    pub l_minus: Vec<Gamma2Word>,
    pub u_plus: Vec<Gamma2Word>,
    pub u_minus: Vec<Gamma2Word>,
}

impl CosetLevel {
    /// Level 0 seeds with the single word `L^2` in the plus-L family; the
    /// minus-L family starts empty, which is exactly what removes the
    /// exponent-flip double counting.
    pub fn initial() -> Self {
        CosetLevel {
            level: 0,
            l_plus: vec![Gamma2Word::from_syllables([Syllable::new(Generator::L, 1)])],
            l_minus: Vec::new(),
            u_plus: Vec::new(),
            u_minus: Vec::new(),
        }
    }

    /// One step of the inductive definition: each family extends the
    /// admissible families of the previous level by one generator on the
    /// left. Same-letter extensions always carry the same sign, so nothing
    /// ever cancels.
    pub fn next(&self) -> CosetLevel {
        let ext = |sources: [&[Gamma2Word]; 2], own: &[Gamma2Word], syl: Syllable| {
            own.iter()
                .chain(sources[0].iter())
                .chain(sources[1].iter())
                .map(|w| w.prepend(syl))
                .collect::<Vec<_>>()
        };
        CosetLevel {
            level: self.level + 1,
            l_plus: ext(
                [&self.u_plus, &self.u_minus],
                &self.l_plus,
                Syllable::new(Generator::L, 1),
            ),
            l_minus: ext(
                [&self.u_plus, &self.u_minus],
                &self.l_minus,
                Syllable::new(Generator::L, -1),
            ),
            u_plus: ext(
                [&self.l_plus, &self.l_minus],
                &self.u_plus,
                Syllable::new(Generator::U, 1),
            ),
            u_minus: ext(
                [&self.l_plus, &self.l_minus],
                &self.u_minus,
                Syllable::new(Generator::U, -1),
            ),
        }
    }

    /// All words of the level: L+, L-, U+, U- order.
    pub fn words(&self) -> impl Iterator<Item = &Gamma2Word> {
        self.l_plus
            .iter()
            .chain(self.l_minus.iter())
            .chain(self.u_plus.iter())
            .chain(self.u_minus.iter())
    }

    pub fn total(&self) -> usize {
        self.l_plus.len() + self.l_minus.len() + self.u_plus.len() + self.u_minus.len()
    }
}

/// The full coset level at depth `i`, built from the level-0 seed.
pub fn coset_level(i: usize) -> CosetLevel {
    let mut level = CosetLevel::initial();
    for _ in 0..i {
        level = level.next();
    }
    level
}
