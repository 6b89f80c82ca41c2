//! Bounded chain complexes of submodules, chain maps, homotopies and their doubles.

mod checks;
mod maps;

use std::fmt;
use std::sync::Arc;

pub use checks::{
    contractibility_transfer, exactness_propagation_check, ContractibilityReport, ExactnessReport,
    HomotopyEquivalence,
};
pub use maps::{double_chain_map, double_degree_one, is_homotopy, tilde, ChainMap, DegreeOneMap};

use crate::double::{double_matrix_hom, double_module, DoubleContext};
use crate::module::{Matrix, MatrixHom, Submodule};
use crate::poly::PolyRing;
use crate::{Error, Result};

/// `… -> M_{i+1} -> M_i -> M_{i-1} -> …` with `M_i` nonzero only for `low ≤ i ≤ high`.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    ring: Arc<PolyRing>,
    low: i64,
    modules: Vec<Submodule>,
    /// `diffs[k] : modules[k + 1] -> modules[k]`, the differential of degree `low + k + 1`.
    diffs: Vec<MatrixHom>,
}

impl ChainComplex {
    /// `modules[k]` sits in degree `low + k`; `matrices[k]` is the differential `M_{low+k+1} -> M_{low+k}`.
    /// Every differential must send its module into the next one.
    pub fn new(
        ring: &Arc<PolyRing>,
        low: i64,
        modules: Vec<Submodule>,
        matrices: Vec<Matrix>,
    ) -> Result<Self> {
        if matrices.len() + 1 != modules.len().max(1) {
            return Err(Error::Shape(format!(
                "{} modules need {} differentials, got {}",
                modules.len(),
                modules.len().saturating_sub(1),
                matrices.len()
            )));
        }
        for m in &modules {
            if m.ring() != ring {
                return Err(Error::ring_mismatch(ring, m.ring()));
            }
        }
        let diffs = matrices
            .into_iter()
            .enumerate()
            .map(|(k, a)| MatrixHom::new(modules[k + 1].clone(), modules[k].clone(), a))
            .collect::<Result<Vec<_>>>()?;
        Ok(ChainComplex {
            ring: ring.clone(),
            low,
            modules,
            diffs,
        })
    }

    /// Like [`new`](Self::new), taking the matrices of existing homs.
    pub fn from_homs(
        ring: &Arc<PolyRing>,
        low: i64,
        modules: Vec<Submodule>,
        homs: &[MatrixHom],
    ) -> Result<Self> {
        Self::new(
            ring,
            low,
            modules,
            homs.iter().map(|h| h.matrix().clone()).collect(),
        )
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        ChainComplex {
            ring: ring.clone(),
            low: 0,
            modules: Vec::new(),
            diffs: Vec::new(),
        }
    }

    fn from_parts(
        ring: &Arc<PolyRing>,
        low: i64,
        modules: Vec<Submodule>,
        diffs: Vec<MatrixHom>,
    ) -> Self {
        ChainComplex {
            ring: ring.clone(),
            low,
            modules,
            diffs,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    /// Top degree; `low - 1` for the empty complex.
    pub fn high(&self) -> i64 {
        self.low + self.modules.len() as i64 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.low..=self.high()
    }

    fn slot(&self, i: i64) -> Option<usize> {
        (i >= self.low && i <= self.high()).then(|| (i - self.low) as usize)
    }

    /// `M_i`, the zero submodule of `R^0` outside the support.
    pub fn module(&self, i: i64) -> Submodule {
        match self.slot(i) {
            Some(k) => self.modules[k].clone(),
            None => Submodule::zero(&self.ring, 0),
        }
    }

    pub fn modules(&self) -> &[Submodule] {
        &self.modules
    }

    /// `φ_i : M_i -> M_{i-1}`; zero at and beyond the ends.
    pub fn differential(&self, i: i64) -> MatrixHom {
        match (self.slot(i), self.slot(i - 1)) {
            (Some(k), Some(_)) => self.diffs[k - 1].clone(),
            _ => MatrixHom::zero(&self.module(i), &self.module(i - 1)).expect("same ring"),
        }
    }

    /// Every composite `φ_i ∘ φ_{i+1}` kills the generators of `M_{i+1}`.
    pub fn is_complex(&self) -> bool {
        self.diffs.windows(2).all(|w| {
            let (lower, upper) = (&w[0], &w[1]);
            upper
                .generator_images()
                .iter()
                .all(|g| lower.apply(g).map(|v| v.is_zero()).unwrap_or(false))
        })
    }

    /// `Im φ_{i+1} = Ker φ_i`.
    pub fn is_exact_at(&self, i: i64) -> Result<bool> {
        if self.slot(i).is_none() {
            return Err(Error::IndexOutOfRange {
                index: i,
                lo: self.low,
                hi: self.high(),
            });
        }
        self.differential(i + 1)
            .image()
            .module_eq(&self.differential(i).kernel())
    }

    pub fn is_exact(&self) -> Result<bool> {
        for i in self.degrees() {
            if !self.is_exact_at(i)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `C_D`, doubling every module and differential.
    pub fn double(&self, ctx: &DoubleContext) -> Result<ChainComplex> {
        if &self.ring != ctx.base() {
            return Err(Error::ring_mismatch(ctx.base(), &self.ring));
        }
        let modules = self
            .modules
            .iter()
            .map(|m| Ok(double_module(ctx, m)?.into_value()))
            .collect::<Result<Vec<_>>>()?;
        let diffs = self
            .diffs
            .iter()
            .map(|d| Ok(double_matrix_hom(ctx, d)?.into_hom()))
            .collect::<Result<Vec<_>>>()?;
        Ok(ChainComplex::from_parts(
            ctx.doubled(),
            self.low,
            modules,
            diffs,
        ))
    }

    /// Degreewise direct sum; both complexes must have the same support.
    pub fn direct_sum(&self, other: &ChainComplex) -> Result<ChainComplex> {
        if self.low != other.low || self.modules.len() != other.modules.len() {
            return Err(Error::Shape(
                "direct sums need complexes with the same support".into(),
            ));
        }
        let modules = self
            .modules
            .iter()
            .zip(&other.modules)
            .map(|(a, b)| a.direct_sum(b))
            .collect::<Result<Vec<_>>>()?;
        let diffs = self
            .diffs
            .iter()
            .zip(&other.diffs)
            .enumerate()
            .map(|(k, (a, b))| {
                let m = Matrix::block_diag(a.matrix(), b.matrix())?;
                MatrixHom::new_unverified(modules[k + 1].clone(), modules[k].clone(), m)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ChainComplex::from_parts(
            &self.ring, self.low, modules, diffs,
        ))
    }
}

/// `C_D`.
pub fn double_complex(ctx: &DoubleContext, c: &ChainComplex) -> Result<ChainComplex> {
    c.double(ctx)
}

impl fmt::Display for ChainComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in self.degrees().rev() {
            write!(f, "[{i}] {}", self.modules[(i - self.low) as usize])?;
            if i > self.low {
                writeln!(f, " --{}-->", self.differential(i).matrix())?;
            } else {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::{ModuleElement, Polynomial};

    pub(crate) fn koszul(sign: &str) -> ChainComplex {
        let r = PolyRing::new(["x1", "x2"]).unwrap();
        let p = |s: &str| Polynomial::parse(&r, s).unwrap();
        let ideal = Submodule::new(
            &r,
            1,
            vec![
                ModuleElement::parse(&r, "(x1)").unwrap(),
                ModuleElement::parse(&r, "(x2)").unwrap(),
            ],
        )
        .unwrap();
        let a2 = Matrix::from_rows(&r, 2, 1, vec![vec![p(&format!("{sign}x2"))], vec![p("x1")]])
            .unwrap();
        let a1 = Matrix::from_rows(&r, 1, 2, vec![vec![p("x1"), p("x2")]]).unwrap();
        ChainComplex::new(
            &r,
            0,
            vec![ideal, Submodule::free(&r, 2), Submodule::free(&r, 1)],
            vec![a1, a2],
        )
        .unwrap()
    }

    pub(crate) fn identity_complex(r: &Arc<PolyRing>) -> ChainComplex {
        ChainComplex::new(
            r,
            0,
            vec![Submodule::free(r, 1), Submodule::free(r, 1)],
            vec![Matrix::identity(r, 1)],
        )
        .unwrap()
    }

    #[test]
    fn complex_law() {
        let k = koszul("-");
        assert!(k.is_complex());
        assert!(k.is_exact_at(1).unwrap());
        assert!(k.is_exact_at(0).unwrap());
        assert!(k.is_exact_at(2).unwrap());
        assert!(!koszul("").is_complex());
        assert!(matches!(
            k.is_exact_at(5),
            Err(Error::IndexOutOfRange { .. })
        ));

        let r = PolyRing::new(["x"]).unwrap();
        let x = Matrix::from_rows(&r, 1, 1, vec![vec![Polynomial::var(&r, 0)]]).unwrap();
        let c = ChainComplex::new(
            &r,
            0,
            vec![Submodule::free(&r, 1), Submodule::free(&r, 1)],
            vec![x],
        )
        .unwrap();
        assert!(c.is_complex());
        assert!(c.is_exact_at(1).unwrap());
        assert!(!c.is_exact_at(0).unwrap());
    }

    #[test]
    fn zero_differentials_are_not_exact() {
        let r = PolyRing::new(["x"]).unwrap();
        let free = Submodule::free(&r, 1);
        let c = ChainComplex::new(
            &r,
            0,
            vec![free.clone(), free.clone(), free],
            vec![Matrix::zero(&r, 1, 1), Matrix::zero(&r, 1, 1)],
        )
        .unwrap();
        assert!(c.is_complex());
        assert!(!c.is_exact_at(1).unwrap());
        let z = ChainComplex::zero(&r);
        assert!(z.is_complex());
        assert!(z.is_exact().unwrap());
    }

    #[test]
    fn doubles() {
        let r = PolyRing::new(["x"]).unwrap();
        let ctx = DoubleContext::new(&r).unwrap();
        let m = Submodule::new(&r, 1, vec![ModuleElement::parse(&r, "(x)").unwrap()]).unwrap();
        let c =
            ChainComplex::new(&r, 0, vec![m.clone(), m], vec![Matrix::identity(&r, 1)]).unwrap();
        let d = c.double(&ctx).unwrap();
        assert!(d.is_complex());
        assert!(d.is_exact_at(0).unwrap() && d.is_exact_at(1).unwrap());
        assert!(ChainComplex::zero(&r)
            .double(&ctx)
            .unwrap()
            .modules()
            .is_empty());

        let k = koszul("-");
        let kctx = DoubleContext::new(k.ring()).unwrap();
        assert!(k.double(&kctx).unwrap().is_complex());
    }
}
