use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::{Monomial, PolyRing, Rational};
use crate::{Error, Result};

/// A polynomial with rational coefficients, in canonical form.
///
/// Terms are kept sorted by decreasing monomial (grevlex) and no stored coefficient is zero,
/// so structural equality is mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Rational) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_int(ring: &Arc<PolyRing>, c: i64) -> Self {
        Self::constant(ring, super::rat(c))
    }

    pub fn var(ring: &Arc<PolyRing>, index: usize) -> Self {
        Self::term(ring, Monomial::var(ring.nvars(), index), Rational::one())
    }

    pub fn term(ring: &Arc<PolyRing>, m: Monomial, c: Rational) -> Self {
        assert_eq!(
            m.nvars(),
            ring.nvars(),
            "monomial arity does not match ring"
        );
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unordered) terms.
    pub fn from_terms<I>(ring: &Arc<PolyRing>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(
                m.nvars(),
                ring.nvars(),
                "monomial arity does not match ring"
            );
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Self::from_sorted_map(ring, acc)
    }

    fn from_sorted_map(ring: &Arc<PolyRing>, acc: BTreeMap<Monomial, Rational>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: acc
                .into_iter()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Terms in decreasing monomial order.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::ring_mismatch(&self.ring, &other.ring));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.add_scaled(other, &Rational::one()))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.add_scaled(other, &-Rational::one()))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// `self + c * other`, merging the sorted term lists.
    fn add_scaled(&self, other: &Polynomial, c: &Rational) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => std::cmp::Ordering::Greater,
                _ => std::cmp::Ordering::Less,
            };
            match ord {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let (m, b) = &other.terms[j];
                    out.push((m.clone(), b * c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = &self.terms[i].1 + &other.terms[j].1 * c;
                    if !s.is_zero() {
                        out.push((self.terms[i].0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Self::from_sorted_map(&self.ring, acc)
    }

    /// Multiplication by a single term preserves the order of terms.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, d)| (t.mul(m), d * c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    pub fn pow(&self, mut k: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = divisor.leading_term()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(lm)?;
            let qc = c / lc;
            rem = rem.add_scaled(&divisor.mul_term(&qm, &qc), &-Rational::one());
            quot.push((qm, qc));
        }
        // Quotient terms were produced in strictly decreasing order.
        Some(Polynomial {
            ring: self.ring.clone(),
            terms: quot,
        })
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ring.nvars());
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    v *= x;
                }
            }
            total += v;
        }
        total
    }

    pub(crate) fn from_descending(ring: &Arc<PolyRing>, terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Parses the text syntax accepted by session files, e.g. `x^2 - 3/4*x*y + 1`.
    pub fn parse(ring: &Arc<PolyRing>, text: &str) -> Result<Polynomial> {
        super::syntax::parse_polynomial_str(ring, text)
    }

    /// True when the polynomial prints as a single factor (no `+`/`-` at top level).
    pub fn is_single_term(&self) -> bool {
        self.terms.len() == 1 && !self.terms[0].1.is_negative()
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &PolyRing, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (name, &e) in ring.var_names().iter().zip(m.exponents()) {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(name)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, &self.ring, m)?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$inner(rhs).expect("polynomial ring mismatch")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$inner(&rhs).expect("polynomial ring mismatch")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<PolyRing> {
        PolyRing::new(["x", "y"]).unwrap()
    }

    fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn add_examples() {
        let r = ring();
        assert_eq!(p(&r, "x^2 + 1") + p(&r, "-x^2"), p(&r, "1"));
        assert_eq!(p(&r, "x*y - 3") + Polynomial::zero(&r), p(&r, "x*y - 3"));
        assert_eq!(p(&r, "x + y") + p(&r, "x - y"), p(&r, "2*x"));
    }

    #[test]
    fn mul_examples() {
        let r = ring();
        assert_eq!(p(&r, "x + y") * p(&r, "x - y"), p(&r, "x^2 - y^2"));
        assert_eq!(p(&r, "x*y - 3") * Polynomial::one(&r), p(&r, "x*y - 3"));
        assert_eq!(p(&r, "x") * p(&r, "x"), p(&r, "x^2"));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let r = ring();
        let s = PolyRing::new(["t"]).unwrap();
        assert!(matches!(
            Polynomial::one(&r).try_add(&Polynomial::one(&s)),
            Err(Error::RingMismatch { .. })
        ));
        assert!(Polynomial::one(&r).try_mul(&Polynomial::one(&s)).is_err());
    }

    #[test]
    fn canonical_printing() {
        let r = ring();
        assert_eq!(p(&r, "y - x").to_string(), "-x + y");
        assert_eq!(p(&r, "(y - x)*y").to_string(), "-x*y + y^2");
        assert_eq!(
            p(&r, "1/2*x^2 - 3*x*y + 4 - 2").to_string(),
            "1/2*x^2 - 3*x*y + 2"
        );
        assert_eq!(p(&r, "-x").to_string(), "-x");
        assert_eq!(p(&r, "-3/4").to_string(), "-3/4");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let f = p(&r, "x^3 - x*y^2");
        assert_eq!(f.div_exact(&p(&r, "x - y")), Some(p(&r, "x^2 + x*y")));
        assert_eq!(f.div_exact(&p(&r, "x + 1")), None);
    }

    #[test]
    fn pow_and_eval() {
        let r = ring();
        let f = p(&r, "x + y").pow(3);
        assert_eq!(f, p(&r, "x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
        assert_eq!(
            f.eval(&[super::super::rat(1), super::super::rat(2)]),
            super::super::rat(27)
        );
    }
}
