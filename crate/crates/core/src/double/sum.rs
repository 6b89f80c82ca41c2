use super::{double_module, DoubleContext};
use crate::module::{Matrix, MatrixHom, Submodule};
use crate::{Error, Result};

/// `η : (M_1 ⊕ … ⊕ M_r)_D -> M_1D ⊕ … ⊕ M_rD` and its inverse `δ`, both permutation matrices.
#[derive(Debug, Clone)]
pub struct DirectSumIso {
    eta: MatrixHom,
    delta: MatrixHom,
}

impl DirectSumIso {
    pub fn eta(&self) -> &MatrixHom {
        &self.eta
    }

    pub fn delta(&self) -> &MatrixHom {
        &self.delta
    }

    /// `η` lands in the target, `δ` lands in the source, and both composites fix every generator.
    pub fn check(&self) -> Result<bool> {
        for g in self.eta.domain().generators() {
            let e = self.eta.apply(g)?;
            if !self.eta.codomain().contains(&e)? || self.delta.apply(&e)? != *g {
                return Ok(false);
            }
        }
        for g in self.delta.domain().generators() {
            let d = self.delta.apply(g)?;
            if !self.delta.codomain().contains(&d)? || self.eta.apply(&d)? != *g {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn direct_sum_iso(ctx: &DoubleContext, m: &Submodule, n: &Submodule) -> Result<DirectSumIso> {
    direct_sum_iso_many(ctx, &[m.clone(), n.clone()])
}

/// The block permutation `(p_1, …, p_r, p_1, …, p_r) -> (p_1, p_1, …, p_r, p_r)`.
pub fn direct_sum_iso_many(ctx: &DoubleContext, modules: &[Submodule]) -> Result<DirectSumIso> {
    let s = ctx.doubled();
    let mut sum = Submodule::zero(ctx.base(), 0);
    let mut doubled_sum = Submodule::zero(s, 0);
    for m in modules {
        if m.ring() != ctx.base() {
            return Err(Error::ring_mismatch(ctx.base(), m.ring()));
        }
        sum = sum.direct_sum(m)?;
        doubled_sum = doubled_sum.direct_sum(double_module(ctx, m)?.value())?;
    }
    let total = sum.rank();
    let mut perm = vec![0; 2 * total];
    let mut off = 0;
    for m in modules {
        let p = m.rank();
        for t in 0..p {
            perm[off + t] = 2 * off + t;
            perm[total + off + t] = 2 * off + p + t;
        }
        off += p;
    }
    let mut inv = vec![0; 2 * total];
    for (i, &j) in perm.iter().enumerate() {
        inv[j] = i;
    }
    let source = double_module(ctx, &sum)?.into_value();
    let eta = MatrixHom::new_unverified(
        source.clone(),
        doubled_sum.clone(),
        Matrix::permutation(s, &perm),
    )?;
    let delta = MatrixHom::new_unverified(doubled_sum, source, Matrix::permutation(s, &inv))?;
    Ok(DirectSumIso { eta, delta })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ModuleElement, PolyRing};

    #[test]
    fn eta_on_a_pair() {
        let r = PolyRing::new(["x"]).unwrap();
        let ctx = DoubleContext::new(&r).unwrap();
        let m = Submodule::new(&r, 1, vec![ModuleElement::parse(&r, "(x)").unwrap()]).unwrap();
        let n = Submodule::free(&r, 1);
        let iso = direct_sum_iso(&ctx, &m, &n).unwrap();
        let s = ctx.doubled();
        let hg = ModuleElement::parse(s, "(x, 1, y, 1)").unwrap();
        assert_eq!(iso.eta().apply(&hg).unwrap().to_string(), "(x, y, 1, 1)");
        assert!(iso.check().unwrap());
    }

    #[test]
    fn zero_summand() {
        let r = PolyRing::new(["x", "z"]).unwrap();
        let ctx = DoubleContext::new(&r).unwrap();
        let m = Submodule::new(&r, 2, vec![ModuleElement::parse(&r, "(x, z)").unwrap()]).unwrap();
        let iso = direct_sum_iso(&ctx, &m, &Submodule::zero(&r, 0)).unwrap();
        assert_eq!(iso.eta().matrix(), &Matrix::identity(ctx.doubled(), 4));
        assert!(iso.check().unwrap());
    }
}
