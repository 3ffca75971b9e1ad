//! Free and direct products of dagger monoids.

use super::{Alphabet, DaggerMonoid, MonoidKind, Word};
use crate::error::{Error, Result};
use std::fmt;

/// Which factor of a free product a block of letters comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A maximal run of letters from one factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub side: Side,
    pub word: Word,
}

/// The free product of two dagger monoids with disjoint alphabets.
///
/// Its elements are words over the union alphabet; every word factors
/// uniquely into maximal blocks that strictly alternate between the factors.
#[derive(Debug, Clone)]
pub struct FreeProduct {
    left: DaggerMonoid,
    right: DaggerMonoid,
    monoid: DaggerMonoid,
}

impl FreeProduct {
    pub fn new(left: DaggerMonoid, right: DaggerMonoid) -> Result<Self> {
        let collisions: Vec<String> = left
            .alphabet()
            .generators()
            .iter()
            .filter(|g| right.alphabet().generator(&g.name).is_some())
            .map(|g| g.name.clone())
            .collect();
        if !collisions.is_empty() {
            return Err(Error::NameCollision(collisions));
        }
        // the empty factor is the unit of the free product
        let monoid = if right.alphabet().is_empty() {
            left.clone()
        } else if left.alphabet().is_empty() {
            right.clone()
        } else {
            let union = Alphabet::new(
                left.alphabet()
                    .generators()
                    .iter()
                    .chain(right.alphabet().generators())
                    .cloned(),
            )?;
            DaggerMonoid::new(MonoidKind::FreeDagger, union)
        };
        Ok(FreeProduct {
            left,
            right,
            monoid,
        })
    }

    pub fn left(&self) -> &DaggerMonoid {
        &self.left
    }

    pub fn right(&self) -> &DaggerMonoid {
        &self.right
    }

    pub fn monoid(&self) -> &DaggerMonoid {
        &self.monoid
    }

    /// Splits a word of the product into its maximal alternating blocks.
    /// Re-concatenating the blocks reproduces the word exactly.
    pub fn factorize(&self, w: &Word) -> Result<Vec<Block>> {
        self.monoid.check_word(w)?;
        let mut blocks: Vec<Block> = Vec::new();
        for l in w.letters() {
            let side = if self.left.alphabet().generator(l.name()).is_some() {
                Side::Left
            } else {
                Side::Right
            };
            match blocks.last_mut() {
                Some(b) if b.side == side => {
                    let mut letters = b.word.letters().to_vec();
                    letters.push(l.clone());
                    b.word = Word::from_letters(letters);
                }
                _ => blocks.push(Block {
                    side,
                    word: Word::from_letters(vec![l.clone()]),
                }),
            }
        }
        Ok(blocks)
    }
}

/// An element of a direct product: a pair of words, one per factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairWord {
    pub left: Word,
    pub right: Word,
}

impl PairWord {
    pub fn new(left: Word, right: Word) -> Self {
        PairWord { left, right }
    }

    pub fn unit() -> Self {
        PairWord::new(Word::unit(), Word::unit())
    }
}

impl fmt::Display for PairWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.left, self.right)
    }
}

/// The direct product of two dagger monoids, with componentwise operations.
#[derive(Debug, Clone)]
pub struct DirectProduct {
    left: DaggerMonoid,
    right: DaggerMonoid,
}

impl DirectProduct {
    pub fn new(left: DaggerMonoid, right: DaggerMonoid) -> Self {
        DirectProduct { left, right }
    }

    pub fn left(&self) -> &DaggerMonoid {
        &self.left
    }

    pub fn right(&self) -> &DaggerMonoid {
        &self.right
    }

    pub fn mul(&self, a: &PairWord, b: &PairWord) -> Result<PairWord> {
        Ok(PairWord::new(
            self.left.mul(&a.left, &b.left)?,
            self.right.mul(&a.right, &b.right)?,
        ))
    }

    pub fn dagger(&self, a: &PairWord) -> Result<PairWord> {
        Ok(PairWord::new(
            self.left.dagger(&a.left)?,
            self.right.dagger(&a.right)?,
        ))
    }

    pub fn normalize(&self, a: &PairWord) -> Result<PairWord> {
        Ok(PairWord::new(
            self.left.normalize(&a.left)?,
            self.right.normalize(&a.right)?,
        ))
    }

    pub fn equal(&self, a: &PairWord, b: &PairWord) -> Result<bool> {
        Ok(self.normalize(a)? == self.normalize(b)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(name: &str) -> DaggerMonoid {
        DaggerMonoid::free(Alphabet::free(&[name]).unwrap())
    }

    #[test]
    fn union_alphabet() {
        let p = FreeProduct::new(gen("a"), gen("b")).unwrap();
        assert_eq!(p.monoid().kind(), MonoidKind::FreeDagger);
        let names: Vec<&str> = p
            .monoid()
            .alphabet()
            .generators()
            .iter()
            .map(|g| g.name.as_str())
            .collect();
        assert_eq!(names, vec!["a", "b"]);
    }

    #[test]
    fn maximal_run_splitting() {
        let p = FreeProduct::new(gen("a"), gen("b")).unwrap();
        let w = p.monoid().alphabet().parse_word("a b b a'").unwrap();
        let blocks = p.factorize(&w).unwrap();
        let rendered: Vec<(Side, String)> = blocks
            .iter()
            .map(|b| (b.side, b.word.to_string()))
            .collect();
        assert_eq!(
            rendered,
            vec![
                (Side::Left, "a".to_string()),
                (Side::Right, "b b".to_string()),
                (Side::Left, "a'".to_string()),
            ]
        );
        // blocks strictly alternate and re-concatenate to the word
        let mut glued = Word::unit();
        for b in &blocks {
            glued = glued.concat(&b.word);
        }
        assert_eq!(glued, w);
    }

    #[test]
    fn empty_factor_is_the_unit() {
        let empty = DaggerMonoid::free(Alphabet::free(&[]).unwrap());
        let a = gen("a");
        let p = FreeProduct::new(a.clone(), empty).unwrap();
        assert_eq!(p.monoid(), &a);
    }

    #[test]
    fn collision_lists_names() {
        match FreeProduct::new(gen("a"), gen("a")) {
            Err(Error::NameCollision(names)) => assert_eq!(names, vec!["a"]),
            other => panic!("expected collision, got {other:?}"),
        }
    }

    #[test]
    fn direct_product_is_componentwise() {
        let d = DirectProduct::new(gen("a"), gen("b"));
        let x = PairWord::new(
            d.left().alphabet().parse_word("a").unwrap(),
            Word::unit(),
        );
        let y = PairWord::new(
            Word::unit(),
            d.right().alphabet().parse_word("b").unwrap(),
        );
        let xy = d.mul(&x, &y).unwrap();
        let yx = d.mul(&y, &x).unwrap();
        // the generators commute in the direct product
        assert!(d.equal(&xy, &yx).unwrap());
        assert_eq!(xy.to_string(), "(a, b)");
        let dag = d.dagger(&xy).unwrap();
        assert_eq!(dag.to_string(), "(a', b')");
    }
}
