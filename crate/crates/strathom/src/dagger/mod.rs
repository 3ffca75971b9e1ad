//! Words over dagger alphabets: free and free-commutative dagger monoids.
//!
//! A dagger monoid is a monoid with an anti-involution `a ↦ a†` satisfying
//! `1† = 1` and `(ab)† = b†a†`. The two kinds modelled here are the free
//! dagger monoid (words under concatenation, no cancellation ever) and the
//! free commutative dagger monoid (multisets of letters). A generator may be
//! *self-dual*, meaning `g† = g`; its letters are stored undaggered.

mod hom;
mod parse;
mod products;

pub use hom::MonoidHom;
pub use parse::scan_generator_names;
pub use products::{Block, DirectProduct, FreeProduct, PairWord, Side};

use crate::error::{Error, Result};
use crate::exec;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A named generator of a dagger monoid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    #[serde(default)]
    pub self_dual: bool,
}

impl Generator {
    pub fn new(name: impl Into<String>) -> Self {
        Generator {
            name: name.into(),
            self_dual: false,
        }
    }

    pub fn self_dual(name: impl Into<String>) -> Self {
        Generator {
            name: name.into(),
            self_dual: true,
        }
    }
}

/// A finite set of generators with unique names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Alphabet {
    generators: Vec<Generator>,
}

impl Alphabet {
    pub fn new(generators: impl IntoIterator<Item = Generator>) -> Result<Self> {
        let generators: Vec<Generator> = generators.into_iter().collect();
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
        }
        Ok(Alphabet { generators })
    }

    /// Alphabet of plain (non-self-dual) generators.
    pub fn free(names: &[&str]) -> Result<Self> {
        Alphabet::new(names.iter().map(Generator::new))
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generator(&self, name: &str) -> Option<&Generator> {
        self.generators.iter().find(|g| g.name == name)
    }

    /// Parse a word of the DSL (`letter := ident "'"?`, whitespace separated,
    /// `ε` or the empty string is the unit) against this alphabet.
    pub fn parse_word(&self, input: &str) -> Result<Word> {
        parse::parse_word(self, input)
    }

    /// All letters over this alphabet: per generator the plain letter, and the
    /// daggered one unless the generator is self-dual.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for g in &self.generators {
            out.push(Letter::new(g.clone(), false));
            if !g.self_dual {
                out.push(Letter::new(g.clone(), true));
            }
        }
        out
    }
}

/// One occurrence of a generator, possibly daggered.
///
/// Letters of self-dual generators are always stored with `daggered = false`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    generator: Generator,
    daggered: bool,
}

impl Letter {
    pub fn new(generator: Generator, daggered: bool) -> Self {
        let daggered = daggered && !generator.self_dual;
        Letter {
            generator,
            daggered,
        }
    }

    pub fn generator(&self) -> &Generator {
        &self.generator
    }

    pub fn name(&self) -> &str {
        &self.generator.name
    }

    pub fn is_daggered(&self) -> bool {
        self.daggered
    }

    pub fn dagger(&self) -> Letter {
        Letter::new(self.generator.clone(), !self.daggered)
    }

    /// Sort key for the commutative normal form: generator name, then
    /// undaggered before daggered.
    fn normal_key(&self) -> (&str, bool) {
        (&self.generator.name, self.daggered)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.daggered {
            write!(f, "{}'", self.generator.name)
        } else {
            write!(f, "{}", self.generator.name)
        }
    }
}

/// A finite sequence of letters; the empty word is the unit.
///
/// No rewriting is ever applied: in the free dagger monoid crossings are
/// remembered, so `a · a†` is a word of length two, not the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn unit() -> Self {
        Word::default()
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_unit(&self) -> bool {
        self.letters.is_empty()
    }

    /// Plain concatenation. See [`DaggerMonoid::mul`] for the checked version.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Word { letters }
    }

    /// Reverses the sequence and toggles every dagger flag. Self-dual letters
    /// are fixed, and `(w†)† = w`.
    pub fn dagger(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(Letter::dagger).collect(),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "ε");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Which free dagger monoid a word lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MonoidKind {
    /// Words under concatenation; the model of `ψ₁` computations.
    FreeDagger,
    /// Multisets of letters; what `ψₙ` for `n ≥ 2` looks like on spheres.
    FreeCommutativeDagger,
}

impl fmt::Display for MonoidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidKind::FreeDagger => write!(f, "free dagger monoid"),
            MonoidKind::FreeCommutativeDagger => write!(f, "free commutative dagger monoid"),
        }
    }
}

/// A free or free-commutative dagger monoid over a fixed alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DaggerMonoid {
    kind: MonoidKind,
    alphabet: Alphabet,
}

impl DaggerMonoid {
    pub fn new(kind: MonoidKind, alphabet: Alphabet) -> Self {
        DaggerMonoid { kind, alphabet }
    }

    pub fn free(alphabet: Alphabet) -> Self {
        DaggerMonoid::new(MonoidKind::FreeDagger, alphabet)
    }

    pub fn free_commutative(alphabet: Alphabet) -> Self {
        DaggerMonoid::new(MonoidKind::FreeCommutativeDagger, alphabet)
    }

    pub fn kind(&self) -> MonoidKind {
        self.kind
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Checks that every letter of `w` belongs to this monoid's alphabet.
    pub fn check_word(&self, w: &Word) -> Result<()> {
        for l in w.letters() {
            match self.alphabet.generator(l.name()) {
                Some(g) if *g == *l.generator() => {}
                _ => return Err(Error::AlphabetMismatch(l.name().to_string())),
            }
        }
        Ok(())
    }

    /// Concatenation; the unit law and associativity hold strictly and no
    /// cancellation is applied.
    pub fn mul(&self, a: &Word, b: &Word) -> Result<Word> {
        self.check_word(a)?;
        self.check_word(b)?;
        Ok(a.concat(b))
    }

    pub fn dagger(&self, w: &Word) -> Result<Word> {
        self.check_word(w)?;
        Ok(w.dagger())
    }

    /// Canonical form for equality testing: the identity on free words, and
    /// the sorted multiset form on free-commutative ones. Two words are equal
    /// in the monoid iff their normal forms are identical sequences.
    pub fn normalize(&self, w: &Word) -> Result<Word> {
        self.check_word(w)?;
        match self.kind {
            MonoidKind::FreeDagger => Ok(w.clone()),
            MonoidKind::FreeCommutativeDagger => {
                let mut letters = w.letters().to_vec();
                letters.sort_by(|a, b| a.normal_key().cmp(&b.normal_key()));
                Ok(Word::from_letters(letters))
            }
        }
    }

    pub fn equal(&self, a: &Word, b: &Word) -> Result<bool> {
        Ok(self.normalize(a)? == self.normalize(b)?)
    }

    /// Only the unit is invertible: a nonempty word corresponds to a map with
    /// nontrivial induced stratification, and lengths add under `mul`.
    pub fn is_invertible(&self, w: &Word) -> Result<bool> {
        self.check_word(w)?;
        Ok(w.is_unit())
    }

    /// All raw words of length at most `max_len`, ordered by length and then
    /// lexicographically in the letter order of [`Alphabet::letters`].
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        let letters = self.alphabet.letters();
        let mut out = vec![Word::unit()];
        let mut layer = vec![Word::unit()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * letters.len());
            for w in &layer {
                for l in &letters {
                    let mut ls = w.letters().to_vec();
                    ls.push(l.clone());
                    next.push(Word::from_letters(ls));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// Exhaustively checks `ab = 1 ⇒ b = a†` over all word pairs with
    /// `|a| + |b| ≤ max_len`.
    pub fn check_unitarity(&self, max_len: usize) -> UnitarityReport {
        let lhs = self.words_up_to(max_len);
        let counterexample = exec::find_map_first(&lhs, |a| self.unitarity_counterexample(a, max_len));
        self.unitarity_report(max_len, counterexample)
    }

    /// Sequential form of [`check_unitarity`](Self::check_unitarity).
    pub fn check_unitarity_seq(&self, max_len: usize) -> UnitarityReport {
        let lhs = self.words_up_to(max_len);
        let counterexample = lhs
            .iter()
            .find_map(|a| self.unitarity_counterexample(a, max_len));
        self.unitarity_report(max_len, counterexample)
    }

    fn unitarity_counterexample(&self, a: &Word, max_len: usize) -> Option<(Word, Word)> {
        let budget = max_len - a.len();
        for b in self.words_up_to(budget) {
            let product = self.normalize(&a.concat(&b)).expect("words over alphabet");
            if product.is_unit() {
                let adj = self.normalize(&a.dagger()).expect("words over alphabet");
                if self.normalize(&b).expect("words over alphabet") != adj {
                    return Some((a.clone(), b));
                }
            }
        }
        None
    }

    fn unitarity_report(
        &self,
        max_len: usize,
        counterexample: Option<(Word, Word)>,
    ) -> UnitarityReport {
        let n = self.alphabet.letters().len() as u64;
        let mut pairs = 0u64;
        // #pairs with |a| + |b| = s is (s + 1) · n^s
        let mut power = 1u64;
        for s in 0..=max_len as u64 {
            pairs += (s + 1) * power;
            power = power.saturating_mul(n);
        }
        UnitarityReport {
            kind: self.kind,
            max_len,
            pairs_checked: pairs,
            counterexample,
        }
    }
}

/// Outcome of the exhaustive `ab = 1 ⇒ b = a†` check.
#[derive(Debug, Clone)]
pub struct UnitarityReport {
    pub kind: MonoidKind,
    pub max_len: usize,
    pub pairs_checked: u64,
    pub counterexample: Option<(Word, Word)>,
}

impl UnitarityReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for UnitarityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(
                f,
                "unitarity PASS: {} pairs with |a|+|b| ≤ {} in the {}",
                self.pairs_checked, self.max_len, self.kind
            ),
            Some((a, b)) => write!(
                f,
                "unitarity FAIL: a = {a}, b = {b} multiply to the unit but b ≠ a†"
            ),
        }
    }
}
