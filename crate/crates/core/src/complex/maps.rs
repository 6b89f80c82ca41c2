use super::ChainComplex;
use crate::double::{double_matrix_hom, DoubleContext};
use crate::module::{Matrix, MatrixHom};
use crate::{Error, Result};

fn support(a: &ChainComplex, b: &ChainComplex) -> (i64, i64) {
    let lo = a.low().min(b.low());
    let hi = a.high().max(b.high());
    (lo, hi)
}

fn check_ring(a: &ChainComplex, b: &ChainComplex) -> Result<()> {
    if a.ring() != b.ring() {
        return Err(Error::ring_mismatch(a.ring(), b.ring()));
    }
    Ok(())
}

/// Degree-`shift` maps `C_i -> D_{i+shift}`, stored over the joint support and zero elsewhere.
#[derive(Debug, Clone)]
struct Graded {
    source: ChainComplex,
    target: ChainComplex,
    shift: i64,
    low: i64,
    maps: Vec<MatrixHom>,
}

impl Graded {
    fn new(
        source: &ChainComplex,
        target: &ChainComplex,
        shift: i64,
        low: i64,
        matrices: Vec<Matrix>,
        checked: bool,
    ) -> Result<Self> {
        check_ring(source, target)?;
        let (lo, hi) = support(source, target);
        let lo = lo.min(low);
        let hi = hi.max(low + matrices.len() as i64 - 1);
        let mut maps = Vec::with_capacity((hi - lo + 1).max(0) as usize);
        for i in lo..=hi {
            let dom = source.module(i);
            let cod = target.module(i + shift);
            let k = i - low;
            let hom = if k >= 0 && (k as usize) < matrices.len() {
                let a = matrices[k as usize].clone();
                if checked {
                    MatrixHom::new(dom, cod, a)?
                } else {
                    MatrixHom::new_unverified(dom, cod, a)?
                }
            } else {
                MatrixHom::zero(&dom, &cod)?
            };
            maps.push(hom);
        }
        Ok(Graded {
            source: source.clone(),
            target: target.clone(),
            shift,
            low: lo,
            maps,
        })
    }

    fn at(&self, i: i64) -> MatrixHom {
        let k = i - self.low;
        if k >= 0 && (k as usize) < self.maps.len() {
            self.maps[k as usize].clone()
        } else {
            MatrixHom::zero(&self.source.module(i), &self.target.module(i + self.shift))
                .expect("same ring")
        }
    }

    fn range(&self) -> std::ops::RangeInclusive<i64> {
        let (lo, hi) = support(&self.source, &self.target);
        lo.min(self.low)..=hi.max(self.low + self.maps.len() as i64 - 1)
    }

    fn double(&self, ctx: &DoubleContext) -> Result<Graded> {
        let source = self.source.double(ctx)?;
        let target = self.target.double(ctx)?;
        let maps = self
            .maps
            .iter()
            .map(|m| Ok(double_matrix_hom(ctx, m)?.into_hom().matrix().clone()))
            .collect::<Result<Vec<_>>>()?;
        Graded::new(&source, &target, self.shift, self.low, maps, false)
    }
}

/// Degreewise maps `α_i : C_i -> D_i` commuting with the differentials.
#[derive(Debug, Clone)]
pub struct ChainMap(Graded);

impl ChainMap {
    /// `matrices[k]` is `α_{low+k}`; unspecified degrees are zero. Checks that each `α_i`
    /// lands in `D_i` and that every square commutes.
    pub fn new(
        source: &ChainComplex,
        target: &ChainComplex,
        low: i64,
        matrices: Vec<Matrix>,
    ) -> Result<Self> {
        let map = ChainMap(Graded::new(source, target, 0, low, matrices, true)?);
        if let Some(i) = map.first_noncommuting_degree()? {
            return Err(Error::IllDefined(format!(
                "the square at degree {i} does not commute"
            )));
        }
        Ok(map)
    }

    fn unverified(
        source: &ChainComplex,
        target: &ChainComplex,
        low: i64,
        matrices: Vec<Matrix>,
    ) -> Result<Self> {
        Ok(ChainMap(Graded::new(
            source, target, 0, low, matrices, false,
        )?))
    }

    pub fn identity(c: &ChainComplex) -> Self {
        let ms = c
            .degrees()
            .map(|i| Matrix::identity(c.ring(), c.module(i).rank()))
            .collect();
        Self::unverified(c, c, c.low(), ms).expect("shapes match")
    }

    pub fn zero(source: &ChainComplex, target: &ChainComplex) -> Result<Self> {
        Self::unverified(source, target, source.low(), Vec::new())
    }

    pub fn source(&self) -> &ChainComplex {
        &self.0.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.0.target
    }

    /// `α_i`.
    pub fn at(&self, i: i64) -> MatrixHom {
        self.0.at(i)
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.0.range()
    }

    /// `φ'_i ∘ α_i = α_{i-1} ∘ φ_i` on the generators of `C_i`, checked in every degree.
    fn first_noncommuting_degree(&self) -> Result<Option<i64>> {
        let (s, t) = (self.source(), self.target());
        for i in self.degrees() {
            let dom = s.module(i);
            let left = t.differential(i).matrix().mul(self.at(i).matrix())?;
            let right = self.at(i - 1).matrix().mul(s.differential(i).matrix())?;
            let diff = left.sub(&right)?;
            for g in dom.generators() {
                if !diff.apply(g)?.is_zero() {
                    return Ok(Some(i));
                }
            }
        }
        Ok(None)
    }

    pub fn commutes(&self) -> Result<bool> {
        Ok(self.first_noncommuting_degree()?.is_none())
    }

    /// Equality as maps on generators in every degree.
    pub fn eq_on_domain(&self, other: &ChainMap) -> Result<bool> {
        let lo = *self.degrees().start().min(other.degrees().start());
        let hi = *self.degrees().end().max(other.degrees().end());
        for i in lo..=hi {
            if !self.at(i).eq_on_domain(&other.at(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn combine(
        &self,
        other: &ChainMap,
        f: impl Fn(&Matrix, &Matrix) -> Result<Matrix>,
    ) -> Result<ChainMap> {
        let lo = *self.degrees().start().min(other.degrees().start());
        let hi = *self.degrees().end().max(other.degrees().end());
        let ms = (lo..=hi)
            .map(|i| f(self.at(i).matrix(), other.at(i).matrix()))
            .collect::<Result<Vec<_>>>()?;
        Self::unverified(self.source(), self.target(), lo, ms)
    }

    pub fn sub(&self, other: &ChainMap) -> Result<ChainMap> {
        self.combine(other, |a, b| a.sub(b))
    }

    pub fn add(&self, other: &ChainMap) -> Result<ChainMap> {
        self.combine(other, |a, b| a.add(b))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &ChainMap) -> Result<ChainMap> {
        check_ring(inner.target(), self.source())?;
        let lo = *self.degrees().start().min(inner.degrees().start());
        let hi = *self.degrees().end().max(inner.degrees().end());
        let ms = (lo..=hi)
            .map(|i| self.at(i).matrix().mul(inner.at(i).matrix()))
            .collect::<Result<Vec<_>>>()?;
        Self::unverified(inner.source(), self.target(), lo, ms)
    }

    pub fn is_zero_map(&self) -> bool {
        self.degrees().all(|i| self.at(i).is_zero_map())
    }
}

/// Maps `μ_i : C_i -> D_{i+1}`.
#[derive(Debug, Clone)]
pub struct DegreeOneMap(Graded);

impl DegreeOneMap {
    /// `matrices[k]` is `μ_{low+k}`; unspecified degrees are zero.
    pub fn new(
        source: &ChainComplex,
        target: &ChainComplex,
        low: i64,
        matrices: Vec<Matrix>,
    ) -> Result<Self> {
        Ok(DegreeOneMap(Graded::new(
            source, target, 1, low, matrices, true,
        )?))
    }

    pub fn zero(source: &ChainComplex, target: &ChainComplex) -> Result<Self> {
        Ok(DegreeOneMap(Graded::new(
            source,
            target,
            1,
            source.low(),
            Vec::new(),
            false,
        )?))
    }

    pub fn source(&self) -> &ChainComplex {
        &self.0.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.0.target
    }

    /// `μ_i`.
    pub fn at(&self, i: i64) -> MatrixHom {
        self.0.at(i)
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.0.range()
    }
}

/// `μ̃_i = φ'_{i+1} ∘ μ_i + μ_{i-1} ∘ φ_i`.
pub fn tilde(mu: &DegreeOneMap) -> Result<ChainMap> {
    let (s, t) = (mu.source(), mu.target());
    let r = mu.degrees();
    let (lo, hi) = (*r.start(), *r.end() + 1);
    let ms = (lo..=hi)
        .map(|i| {
            let a = t.differential(i + 1).matrix().mul(mu.at(i).matrix())?;
            let b = mu.at(i - 1).matrix().mul(s.differential(i).matrix())?;
            a.add(&b)
        })
        .collect::<Result<Vec<_>>>()?;
    ChainMap::unverified(s, t, lo, ms)
}

/// `μ̃ = α - β`.
pub fn is_homotopy(alpha: &ChainMap, beta: &ChainMap, mu: &DegreeOneMap) -> Result<bool> {
    tilde(mu)?.eq_on_domain(&alpha.sub(beta)?)
}

/// `α_D`, degreewise doubles.
pub fn double_chain_map(ctx: &DoubleContext, alpha: &ChainMap) -> Result<ChainMap> {
    Ok(ChainMap(alpha.0.double(ctx)?))
}

/// `μ_D`, degreewise doubles.
pub fn double_degree_one(ctx: &DoubleContext, mu: &DegreeOneMap) -> Result<DegreeOneMap> {
    Ok(DegreeOneMap(mu.0.double(ctx)?))
}

#[cfg(test)]
mod tests {
    use super::super::tests::{identity_complex, koszul};
    use super::*;
    use crate::{PolyRing, Polynomial};

    #[test]
    fn identity_and_zero_maps() {
        let k = koszul("-");
        let ctx = DoubleContext::new(k.ring()).unwrap();
        let id = ChainMap::identity(&k);
        assert!(id.commutes().unwrap());
        let idd = double_chain_map(&ctx, &id).unwrap();
        assert!(idd
            .eq_on_domain(&ChainMap::identity(&k.double(&ctx).unwrap()))
            .unwrap());
        let z = ChainMap::zero(&k, &k).unwrap();
        assert!(double_chain_map(&ctx, &z).unwrap().is_zero_map());
    }

    #[test]
    fn contraction_of_identity_complex() {
        let r = PolyRing::new(["x"]).unwrap();
        let c = identity_complex(&r);
        let mu = DegreeOneMap::new(&c, &c, 0, vec![Matrix::identity(&r, 1)]).unwrap();
        let t = tilde(&mu).unwrap();
        assert!(t.eq_on_domain(&ChainMap::identity(&c)).unwrap());
        let zero = ChainMap::zero(&c, &c).unwrap();
        assert!(is_homotopy(&ChainMap::identity(&c), &zero, &mu).unwrap());
        assert!(tilde(&DegreeOneMap::zero(&c, &c).unwrap())
            .unwrap()
            .is_zero_map());
        assert!(is_homotopy(&zero, &zero, &DegreeOneMap::zero(&c, &c).unwrap()).unwrap());
    }

    #[test]
    fn non_commuting_square_is_rejected() {
        let r = PolyRing::new(["x"]).unwrap();
        let c = identity_complex(&r);
        let x = Matrix::from_rows(&r, 1, 1, vec![vec![Polynomial::var(&r, 0)]]).unwrap();
        assert!(ChainMap::new(&c, &c, 0, vec![Matrix::identity(&r, 1), x.clone()]).is_err());
        assert!(ChainMap::new(&c, &c, 0, vec![x.clone(), x]).is_ok());
    }

    #[test]
    fn tilde_commutes_with_doubling() {
        let k = koszul("-");
        let r = k.ring().clone();
        let ctx = DoubleContext::new(&r).unwrap();
        let p = |s: &str| Polynomial::parse(&r, s).unwrap();
        let mu = DegreeOneMap::new(
            &k,
            &k,
            0,
            vec![
                Matrix::from_rows(&r, 2, 1, vec![vec![p("x2")], vec![p("1")]]).unwrap(),
                Matrix::from_rows(&r, 1, 2, vec![vec![p("x1 + 1"), p("0")]]).unwrap(),
            ],
        )
        .unwrap();
        let lhs = tilde(&double_degree_one(&ctx, &mu).unwrap()).unwrap();
        let rhs = double_chain_map(&ctx, &tilde(&mu).unwrap()).unwrap();
        for i in -1..=4 {
            assert_eq!(lhs.at(i).matrix(), rhs.at(i).matrix(), "degree {i}");
        }
    }
}
