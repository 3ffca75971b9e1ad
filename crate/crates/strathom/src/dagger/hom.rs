//! Maps of dagger monoids: unit-, product- and dagger-preserving.

use super::{DaggerMonoid, Word};
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// A homomorphism of dagger monoids, given by generator images.
///
/// The image of `g†` is forced to be `image(g)†`, so a self-dual generator
/// must map to a dagger-fixed word; this is checked at construction.
#[derive(Debug, Clone)]
pub struct MonoidHom {
    source: DaggerMonoid,
    target: DaggerMonoid,
    images: BTreeMap<String, Word>,
}

impl MonoidHom {
    pub fn new(
        source: DaggerMonoid,
        target: DaggerMonoid,
        images: BTreeMap<String, Word>,
    ) -> Result<Self> {
        for g in source.alphabet().generators() {
            let image = images
                .get(&g.name)
                .ok_or_else(|| Error::MissingImage(g.name.clone()))?;
            target.check_word(image)?;
            if g.self_dual && !target.equal(image, &image.dagger())? {
                return Err(Error::ImageNotSelfDual(g.name.clone()));
            }
        }
        for name in images.keys() {
            if source.alphabet().generator(name).is_none() {
                return Err(Error::AlphabetMismatch(name.clone()));
            }
        }
        Ok(MonoidHom {
            source,
            target,
            images,
        })
    }

    pub fn source(&self) -> &DaggerMonoid {
        &self.source
    }

    pub fn target(&self) -> &DaggerMonoid {
        &self.target
    }

    /// Letterwise substitution followed by normalization in the target.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        self.source.check_word(w)?;
        let mut out = Word::unit();
        for l in w.letters() {
            let image = self
                .images
                .get(l.name())
                .ok_or_else(|| Error::MissingImage(l.name().to_string()))?;
            let piece = if l.is_daggered() {
                image.dagger()
            } else {
                image.clone()
            };
            out = out.concat(&piece);
        }
        self.target.normalize(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dagger::{Alphabet, Generator};

    fn hom(images: &[(&str, &str)], source: DaggerMonoid, target: DaggerMonoid) -> MonoidHom {
        let map = images
            .iter()
            .map(|(g, w)| ((*g).to_string(), target.alphabet().parse_word(w).unwrap()))
            .collect();
        MonoidHom::new(source, target, map).unwrap()
    }

    #[test]
    fn dagger_compatibility_is_forced() {
        let source = DaggerMonoid::free(Alphabet::free(&["a"]).unwrap());
        let target = DaggerMonoid::free(Alphabet::free(&["x", "y"]).unwrap());
        let h = hom(&[("a", "x y")], source.clone(), target);
        let image = h.apply(&source.alphabet().parse_word("a'").unwrap()).unwrap();
        assert_eq!(image.to_string(), "y' x'");
    }

    #[test]
    fn unit_image_collapses() {
        let source = DaggerMonoid::free(Alphabet::free(&["a"]).unwrap());
        let target = DaggerMonoid::free(Alphabet::free(&["x"]).unwrap());
        let h = hom(&[("a", "")], source.clone(), target);
        let image = h.apply(&source.alphabet().parse_word("a a").unwrap()).unwrap();
        assert!(image.is_unit());
    }

    #[test]
    fn abelianization_sorts() {
        let source = DaggerMonoid::free(Alphabet::free(&["a"]).unwrap());
        let target = DaggerMonoid::free_commutative(Alphabet::free(&["a"]).unwrap());
        let h = hom(&[("a", "a")], source.clone(), target);
        let image = h
            .apply(&source.alphabet().parse_word("a a' a").unwrap())
            .unwrap();
        assert_eq!(image.to_string(), "a a a'");
    }

    #[test]
    fn self_dual_generators_need_dagger_fixed_images() {
        let source =
            DaggerMonoid::free(Alphabet::new(vec![Generator::self_dual("e")]).unwrap());
        let target = DaggerMonoid::free(Alphabet::free(&["x"]).unwrap());
        let map: BTreeMap<String, Word> = [(
            "e".to_string(),
            target.alphabet().parse_word("x").unwrap(),
        )]
        .into();
        match MonoidHom::new(source.clone(), target.clone(), map) {
            Err(Error::ImageNotSelfDual(name)) => assert_eq!(name, "e"),
            other => panic!("expected self-dual image error, got {other:?}"),
        }
        // x x' is not dagger-fixed in the free monoid either; ε is
        let map: BTreeMap<String, Word> = [("e".to_string(), Word::unit())].into();
        assert!(MonoidHom::new(source, target, map).is_ok());
    }

    #[test]
    fn missing_image_is_reported() {
        let source = DaggerMonoid::free(Alphabet::free(&["a", "b"]).unwrap());
        let target = DaggerMonoid::free(Alphabet::free(&["x"]).unwrap());
        let map: BTreeMap<String, Word> = [(
            "a".to_string(),
            target.alphabet().parse_word("x").unwrap(),
        )]
        .into();
        match MonoidHom::new(source, target, map) {
            Err(Error::MissingImage(name)) => assert_eq!(name, "b"),
            other => panic!("expected missing image error, got {other:?}"),
        }
    }
}
