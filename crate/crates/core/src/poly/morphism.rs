use std::sync::Arc;

use num_traits::One;

use super::{Monomial, PolyRing, Polynomial, Rational};
use crate::{Error, Result};

/// A ring morphism `Q[source] -> Q[target]` fixed by the image of every source variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingMorphism {
    source: Arc<PolyRing>,
    target: Arc<PolyRing>,
    images: Vec<Polynomial>,
    /// `Some(perm)` when every image is a bare target variable.
    renaming: Option<Vec<usize>>,
}

impl RingMorphism {
    pub fn new(
        source: &Arc<PolyRing>,
        target: &Arc<PolyRing>,
        images: Vec<Polynomial>,
    ) -> Result<Self> {
        if images.len() != source.nvars() {
            return Err(Error::Shape(format!(
                "morphism from {source} needs {} images, got {}",
                source.nvars(),
                images.len()
            )));
        }
        for img in &images {
            if img.ring() != target {
                return Err(Error::ring_mismatch(target, img.ring()));
            }
        }
        let renaming = images
            .iter()
            .map(|img| match img.terms() {
                [(m, c)] if c.is_one() => m.pure_power().filter(|&(_, e)| e == 1).map(|(i, _)| i),
                _ => None,
            })
            .collect();
        Ok(RingMorphism {
            source: source.clone(),
            target: target.clone(),
            images,
            renaming,
        })
    }

    pub fn identity(ring: &Arc<PolyRing>) -> Self {
        let images = (0..ring.nvars())
            .map(|i| Polynomial::var(ring, i))
            .collect();
        Self::new(ring, ring, images).expect("identity morphism is well formed")
    }

    /// The morphism sending the i-th source variable to the `offset + i`-th target variable.
    pub fn shifted_inclusion(
        source: &Arc<PolyRing>,
        target: &Arc<PolyRing>,
        offset: usize,
    ) -> Self {
        let images = (0..source.nvars())
            .map(|i| Polynomial::var(target, offset + i))
            .collect();
        Self::new(source, target, images).expect("inclusion morphism is well formed")
    }

    pub fn source(&self) -> &Arc<PolyRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<PolyRing> {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    /// Simultaneous substitution of every source variable by its image.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.ring() != &self.source {
            return Err(Error::ring_mismatch(&self.source, p.ring()));
        }
        Ok(self.apply_unchecked(p))
    }

    pub(crate) fn apply_unchecked(&self, p: &Polynomial) -> Polynomial {
        let nt = self.target.nvars();
        if let Some(perm) = &self.renaming {
            return Polynomial::from_terms(
                &self.target,
                p.terms().iter().map(|(m, c)| {
                    let mut e = vec![0; nt];
                    for (&src_exp, &dst) in m.exponents().iter().zip(perm) {
                        e[dst] += src_exp;
                    }
                    (Monomial::from_exponents(e), c.clone())
                }),
            );
        }
        // powers[i][k] = images[i]^k, filled lazily
        let mut powers: Vec<Vec<Polynomial>> =
            vec![vec![Polynomial::one(&self.target)]; self.images.len()];
        let mut acc: Vec<(Monomial, Rational)> = Vec::new();
        for (m, c) in p.terms() {
            let mut t = Polynomial::constant(&self.target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &self.images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            acc.extend(t.terms().iter().cloned());
        }
        Polynomial::from_terms(&self.target, acc)
    }

    /// `next ∘ self`: first apply `self`, then `next`.
    pub fn then(&self, next: &RingMorphism) -> Result<RingMorphism> {
        if next.source != self.target {
            return Err(Error::ring_mismatch(&self.target, &next.source));
        }
        let images = self
            .images
            .iter()
            .map(|p| next.apply_unchecked(p))
            .collect();
        RingMorphism::new(&self.source, &next.target, images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitution_examples() {
        let x = PolyRing::new(["x"]).unwrap();
        let t = PolyRing::new(["t"]).unwrap();
        let f = RingMorphism::new(&x, &t, vec![Polynomial::parse(&t, "t^2").unwrap()]).unwrap();
        let p = Polynomial::parse(&x, "x^3").unwrap();
        assert_eq!(f.apply(&p).unwrap(), Polynomial::parse(&t, "t^6").unwrap());

        let id = RingMorphism::identity(&x);
        let q = Polynomial::parse(&x, "3*x^2 - 1/2").unwrap();
        assert_eq!(id.apply(&q).unwrap(), q);

        let x12 = PolyRing::new(["x1", "x2"]).unwrap();
        let cusp = RingMorphism::new(
            &x12,
            &t,
            vec![
                Polynomial::parse(&t, "t^2").unwrap(),
                Polynomial::parse(&t, "t^3").unwrap(),
            ],
        )
        .unwrap();
        let rel = Polynomial::parse(&x12, "x1^3 - x2^2").unwrap();
        assert!(cusp.apply(&rel).unwrap().is_zero());
    }

    #[test]
    fn wrong_source_ring_is_rejected() {
        let x = PolyRing::new(["x"]).unwrap();
        let t = PolyRing::new(["t"]).unwrap();
        let f = RingMorphism::identity(&x);
        assert!(f.apply(&Polynomial::one(&t)).is_err());
        assert!(RingMorphism::new(&x, &t, vec![]).is_err());
    }

    #[test]
    fn composition() {
        let x = PolyRing::new(["x"]).unwrap();
        let t = PolyRing::new(["t"]).unwrap();
        let s = PolyRing::new(["s"]).unwrap();
        let f = RingMorphism::new(&x, &t, vec![Polynomial::parse(&t, "t^2 + t").unwrap()]).unwrap();
        let g = RingMorphism::new(&t, &s, vec![Polynomial::parse(&s, "s^3").unwrap()]).unwrap();
        let fg = f.then(&g).unwrap();
        let p = Polynomial::parse(&x, "x^2 - 1").unwrap();
        assert_eq!(
            fg.apply(&p).unwrap(),
            g.apply(&f.apply(&p).unwrap()).unwrap()
        );
    }
}
