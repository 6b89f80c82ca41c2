//! Sparse module vectors and the module monomial orders used by the Gröbner engine.

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ModuleElement;
use crate::poly::{Monomial, PolyRing, Polynomial, Rational};

/// Module monomial orders. Both refine grevlex inside a component, and a lower component
/// index is larger when everything else ties.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Order {
    /// Position over term: the component decides first, so the leading term of a vector
    /// lies in its first nonzero component.
    Position,
    /// Components below `block` dominate the others; within each side the total degree
    /// decides before the position.
    Degree { block: usize },
}

const BLOCK_WEIGHT: u32 = 1 << 30;

impl Order {
    fn weight(self, comp: usize, mono: &Monomial) -> Option<u32> {
        match self {
            Order::Position => None,
            Order::Degree { block } => {
                Some(mono.degree() + if comp < block { BLOCK_WEIGHT } else { 0 })
            }
        }
    }
}

/// A module monomial `mono * e_comp`. `weight` is the order's grading of the term, if any.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Term {
    pub comp: usize,
    pub mono: Monomial,
    weight: Option<u32>,
}

impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .cmp(&other.weight)
            .then_with(|| other.comp.cmp(&self.comp))
            .then_with(|| self.mono.cmp(&other.mono))
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Term {
    pub fn divides(&self, other: &Term) -> bool {
        self.comp == other.comp && self.mono.divides(&other.mono)
    }

    pub fn lcm(&self, other: &Term) -> Term {
        debug_assert_eq!(self.comp, other.comp);
        let mono = self.mono.lcm(&other.mono);
        let weight = self.weight.map(|w| w - self.mono.degree() + mono.degree());
        Term {
            comp: self.comp,
            mono,
            weight,
        }
    }

    fn times(&self, m: &Monomial) -> Term {
        Term {
            comp: self.comp,
            mono: self.mono.mul(m),
            weight: self.weight.map(|w| w + m.degree()),
        }
    }
}

/// Terms sorted ascending, so the leading term is the last one.
///
/// Coefficients are integers: a vector stands for any nonzero rational multiple of itself,
/// and callers that need the exact scale carry it separately.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub(crate) struct Vector {
    pub terms: Vec<(Term, BigInt)>,
}

impl Vector {
    /// `s·h` with integer coefficients, together with `s`.
    pub fn from_element_scaled(h: &ModuleElement, order: Order) -> (Self, Rational) {
        let mut den = BigInt::one();
        for p in h.components() {
            for (_, c) in p.terms() {
                den = den.lcm(c.denom());
            }
        }
        let mut terms = Vec::new();
        for (k, p) in h.components().iter().enumerate().rev() {
            for (m, c) in p.terms().iter().rev() {
                let weight = order.weight(k, m);
                let n = c.numer() * (&den / c.denom());
                terms.push((
                    Term {
                        comp: k,
                        mono: m.clone(),
                        weight,
                    },
                    n,
                ));
            }
        }
        // already ascending under position over term
        if order != Order::Position {
            terms.sort_by(|a, b| a.0.cmp(&b.0));
        }
        (Vector { terms }, Rational::from_integer(den))
    }

    /// A primitive integer multiple of `h`.
    pub fn from_element(h: &ModuleElement, order: Order) -> Self {
        let mut v = Self::from_element_scaled(h, order).0;
        v.make_primitive();
        v
    }

    /// The same vector with its terms weighted and sorted under `order`.
    pub fn reorder(&self, order: Order) -> Self {
        let mut terms: Vec<(Term, BigInt)> = self
            .terms
            .iter()
            .map(|(t, c)| {
                let weight = order.weight(t.comp, &t.mono);
                (
                    Term {
                        comp: t.comp,
                        mono: t.mono.clone(),
                        weight,
                    },
                    c.clone(),
                )
            })
            .collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        Vector { terms }
    }

    pub fn unit(comp: usize, nvars: usize, order: Order) -> Self {
        let mono = Monomial::one(nvars);
        let weight = order.weight(comp, &mono);
        Vector {
            terms: vec![(Term { comp, mono, weight }, BigInt::one())],
        }
    }

    /// Reassembles the components `offset..offset + rank` of `self / scale`; other
    /// components are dropped.
    pub fn to_element_scaled(
        &self,
        ring: &Arc<PolyRing>,
        rank: usize,
        offset: usize,
        scale: &Rational,
    ) -> ModuleElement {
        let mut comps: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); rank];
        for (t, c) in self.terms.iter().rev() {
            if t.comp >= offset && t.comp < offset + rank {
                comps[t.comp - offset]
                    .push((t.mono.clone(), Rational::from_integer(c.clone()) / scale));
            }
        }
        let comps = comps
            .into_iter()
            .map(|ts| Polynomial::from_descending(ring, ts))
            .collect();
        ModuleElement::from_parts(ring, comps)
    }

    pub fn to_element(&self, ring: &Arc<PolyRing>, rank: usize, offset: usize) -> ModuleElement {
        self.to_element_scaled(ring, rank, offset, &Rational::one())
    }

    /// The rational multiple of `self` with leading coefficient one.
    pub fn to_monic_element(&self, ring: &Arc<PolyRing>, rank: usize) -> ModuleElement {
        let lc = self.lead().map_or_else(BigInt::one, |(_, c)| c.clone());
        self.to_element_scaled(ring, rank, 0, &Rational::from_integer(lc))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Term, BigInt)> {
        self.terms.last()
    }

    pub fn lead_term(&self) -> &Term {
        &self.terms.last().expect("nonzero vector").0
    }

    pub fn is_single_component(&self) -> bool {
        match self.terms.first() {
            Some((t, _)) => self.terms.iter().all(|(u, _)| u.comp == t.comp),
            None => true,
        }
    }

    /// Divides by the content and makes the leading coefficient positive.
    pub fn make_primitive(&mut self) {
        let Some((_, lc)) = self.terms.last() else {
            return;
        };
        let mut g = lc.abs();
        for (_, c) in &self.terms {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if lc.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in &mut self.terms {
                *c = &*c / &g;
            }
        }
    }

    /// `a·self - b·m·g`.
    pub fn sub_mul(&self, a: &BigInt, b: &BigInt, m: &Monomial, g: &Vector) -> Vector {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let scale_a = !a.is_one();
        let mut x = self.terms.iter().peekable();
        let mut y = g.terms.iter().map(|(t, d)| (t.times(m), d * b)).peekable();
        loop {
            let ord = match (x.peek(), y.peek()) {
                (Some(p), Some(q)) => p.0.cmp(&q.0),
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (None, None) => break,
            };
            match ord {
                Ordering::Less => {
                    let (t, c) = x.next().unwrap();
                    out.push((t.clone(), if scale_a { c * a } else { c.clone() }));
                }
                Ordering::Greater => {
                    let (t, d) = y.next().unwrap();
                    out.push((t, -d));
                }
                Ordering::Equal => {
                    let (t, c) = x.next().unwrap();
                    let (_, d) = y.next().unwrap();
                    let s = if scale_a { c * a - d } else { c - d };
                    if !s.is_zero() {
                        out.push((t.clone(), s));
                    }
                }
            }
        }
        Vector { terms: out }
    }

    /// `self + s·g`.
    pub fn add_multiple(&self, s: &BigInt, g: &Vector) -> Vector {
        if g.is_zero() {
            return self.clone();
        }
        let nvars = g.terms[0].0.mono.nvars();
        self.sub_mul(&BigInt::one(), &-s, &Monomial::one(nvars), g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn position_over_term_prefers_lower_component() {
        let r = PolyRing::new(["x", "y"]).unwrap();
        let h = ModuleElement::parse(&r, "(x, y^5)").unwrap();
        let v = Vector::from_element(&h, Order::Position);
        assert_eq!(v.lead_term().comp, 0);
        assert_eq!(v.to_element(&r, 2, 0), h);
    }

    #[test]
    fn degree_order_prefers_degree_then_block() {
        let r = PolyRing::new(["x", "y"]).unwrap();
        let h = ModuleElement::parse(&r, "(x, y^5, x^9)").unwrap();
        let v = Vector::from_element(&h, Order::Degree { block: 2 });
        assert_eq!(v.lead_term().comp, 1);
        assert_eq!(v.to_element(&r, 3, 0), h);
        let w = Vector::from_element(&h, Order::Degree { block: 3 });
        assert_eq!(w.lead_term().comp, 2);
    }

    #[test]
    fn scaling_clears_denominators() {
        let r = PolyRing::new(["x", "y"]).unwrap();
        let h = ModuleElement::parse(&r, "(1/2*x, 2/3*y)").unwrap();
        let (v, s) = Vector::from_element_scaled(&h, Order::Position);
        assert_eq!(s, Rational::from_integer(6.into()));
        assert_eq!(v.to_element_scaled(&r, 2, 0, &s), h);
        let mut w = Vector::from_element(
            &ModuleElement::parse(&r, "(-4*x, 6*y)").unwrap(),
            Order::Position,
        );
        w.make_primitive();
        assert_eq!(
            w.to_element(&r, 2, 0),
            ModuleElement::parse(&r, "(2*x, -3*y)").unwrap()
        );
    }

    #[test]
    fn sub_mul_cancels() {
        let r = PolyRing::new(["x", "y"]).unwrap();
        let h = Vector::from_element(
            &ModuleElement::parse(&r, "(x*y + 1, y)").unwrap(),
            Order::Position,
        );
        let g = Vector::from_element(
            &ModuleElement::parse(&r, "(x, 0)").unwrap(),
            Order::Position,
        );
        let d = h.sub_mul(&BigInt::one(), &BigInt::one(), &Monomial::var(2, 1), &g);
        assert_eq!(
            d.to_element(&r, 2, 0),
            ModuleElement::parse(&r, "(1, y)").unwrap()
        );
    }
}
