use std::fmt;
use std::sync::Arc;

use crate::poly::syntax::Cursor;
use crate::poly::{PolyRing, Polynomial, RingMorphism};
use crate::{Error, Result};

/// An element of the free module `R^p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleElement {
    ring: Arc<PolyRing>,
    comps: Vec<Polynomial>,
}

impl ModuleElement {
    pub fn new(ring: &Arc<PolyRing>, comps: Vec<Polynomial>) -> Result<Self> {
        for c in &comps {
            if c.ring() != ring {
                return Err(Error::ring_mismatch(ring, c.ring()));
            }
        }
        Ok(ModuleElement {
            ring: ring.clone(),
            comps,
        })
    }

    pub(crate) fn from_parts(ring: &Arc<PolyRing>, comps: Vec<Polynomial>) -> Self {
        debug_assert!(comps.iter().all(|c| c.ring() == ring));
        ModuleElement {
            ring: ring.clone(),
            comps,
        }
    }

    pub fn zero(ring: &Arc<PolyRing>, rank: usize) -> Self {
        ModuleElement {
            ring: ring.clone(),
            comps: vec![Polynomial::zero(ring); rank],
        }
    }

    /// The standard basis vector `e_index` of `R^rank`.
    pub fn unit(ring: &Arc<PolyRing>, rank: usize, index: usize) -> Self {
        let mut e = Self::zero(ring, rank);
        e.comps[index] = Polynomial::one(ring);
        e
    }

    /// Parses `(p1, .., pk)`, or a bare polynomial for rank one.
    pub fn parse(ring: &Arc<PolyRing>, text: &str) -> Result<Self> {
        let mut cur = Cursor::new(text)?;
        let h = parse_element(&mut cur, ring)?;
        if !cur.at_eof() {
            return Err(cur.error_here("trailing input after module element"));
        }
        Ok(h)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Polynomial::is_zero)
    }

    fn check(&self, other: &ModuleElement) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::ring_mismatch(&self.ring, &other.ring));
        }
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &ModuleElement) -> Result<ModuleElement> {
        self.check(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &ModuleElement) -> Result<ModuleElement> {
        self.check(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(
        &self,
        other: &ModuleElement,
        f: impl Fn(&Polynomial, &Polynomial) -> Polynomial,
    ) -> Self {
        ModuleElement {
            ring: self.ring.clone(),
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn add(&self, other: &ModuleElement) -> ModuleElement {
        self.try_add(other).expect("module element mismatch")
    }

    pub fn sub(&self, other: &ModuleElement) -> ModuleElement {
        self.try_sub(other).expect("module element mismatch")
    }

    pub fn neg(&self) -> ModuleElement {
        ModuleElement {
            ring: self.ring.clone(),
            comps: self.comps.iter().map(|c| -c).collect(),
        }
    }

    /// Multiplication by a ring element.
    pub fn scale(&self, a: &Polynomial) -> ModuleElement {
        assert_eq!(a.ring(), &self.ring, "scalar from a different ring");
        ModuleElement {
            ring: self.ring.clone(),
            comps: self.comps.iter().map(|c| a * c).collect(),
        }
    }

    /// `(self, other)` in `R^(p+q)`.
    pub fn concat(&self, other: &ModuleElement) -> ModuleElement {
        assert_eq!(self.ring, other.ring);
        let mut comps = self.comps.clone();
        comps.extend(other.comps.iter().cloned());
        ModuleElement {
            ring: self.ring.clone(),
            comps,
        }
    }

    /// Components `start..start + len`.
    pub fn slice(&self, start: usize, len: usize) -> ModuleElement {
        ModuleElement {
            ring: self.ring.clone(),
            comps: self.comps[start..start + len].to_vec(),
        }
    }

    /// Componentwise image under a ring morphism.
    pub fn map(&self, f: &RingMorphism) -> Result<ModuleElement> {
        let comps = self
            .comps
            .iter()
            .map(|c| f.apply(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleElement {
            ring: f.target().clone(),
            comps,
        })
    }

    /// `Σ coeffs[i] * elems[i]`.
    pub fn combination(
        ring: &Arc<PolyRing>,
        rank: usize,
        coeffs: &[Polynomial],
        elems: &[ModuleElement],
    ) -> Self {
        assert_eq!(coeffs.len(), elems.len());
        let mut acc = Self::zero(ring, rank);
        for (a, g) in coeffs.iter().zip(elems) {
            if !a.is_zero() {
                acc = acc.add(&g.scale(a));
            }
        }
        acc
    }
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.comps.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// `(p1, .., pk)`, `()` for the rank-zero element, or a bare polynomial (rank one).
pub fn parse_element(cur: &mut Cursor, ring: &Arc<PolyRing>) -> Result<ModuleElement> {
    if cur.at_punct('(') {
        let mut probe = cur.clone();
        probe.next();
        if probe.at_punct(')') {
            probe.next();
            *cur = probe;
            return Ok(ModuleElement::from_parts(ring, Vec::new()));
        }
        // A parenthesised polynomial such as `(x + 1)*y` is a rank-one element, so
        // parse a polynomial first and only treat a comma as a tuple separator.
        let save = cur.clone();
        cur.next();
        let mut comps = vec![cur.parse_polynomial(ring)?];
        if cur.at_punct(',') || cur.at_punct(')') {
            while cur.eat_punct(',') {
                comps.push(cur.parse_polynomial(ring)?);
            }
            cur.expect_punct(')')?;
            if comps.len() > 1
                || !(cur.at_punct('*')
                    || cur.at_punct('^')
                    || cur.at_punct('+')
                    || cur.at_punct('-')
                    || cur.at_punct('/'))
            {
                return Ok(ModuleElement::from_parts(ring, comps));
            }
        }
        *cur = save;
    }
    Ok(ModuleElement::from_parts(
        ring,
        vec![cur.parse_polynomial(ring)?],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let r = PolyRing::new(["x", "y"]).unwrap();
        let h = ModuleElement::parse(&r, "(x^2, (y - x)*y)").unwrap();
        assert_eq!(h.rank(), 2);
        assert_eq!(h.to_string(), "(x^2, -x*y + y^2)");
        assert_eq!(ModuleElement::parse(&r, "x + 1").unwrap().rank(), 1);
        assert_eq!(
            ModuleElement::parse(&r, "(x + 1)*y").unwrap().to_string(),
            "(x*y + y)"
        );
        assert_eq!(ModuleElement::parse(&r, "(x)").unwrap().to_string(), "(x)");
        assert_eq!(ModuleElement::parse(&r, "()").unwrap().rank(), 0);
    }

    #[test]
    fn arithmetic_checks_rank() {
        let r = PolyRing::new(["x"]).unwrap();
        let a = ModuleElement::parse(&r, "(x, 1)").unwrap();
        let b = ModuleElement::parse(&r, "(x)").unwrap();
        assert!(matches!(a.try_add(&b), Err(Error::RankMismatch { .. })));
        assert!(a.try_sub(&a).unwrap().is_zero());
    }
}
