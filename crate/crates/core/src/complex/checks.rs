use std::fmt;

use super::maps::{double_chain_map, double_degree_one, is_homotopy, ChainMap, DegreeOneMap};
use super::ChainComplex;
use crate::double::DoubleContext;
use crate::Result;

/// Outcome of [`contractibility_transfer`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ContractibilityReport {
    /// `μ̃ = id_C`.
    pub precondition: bool,
    /// `μ̃_D = id_{C_D}`; only computed when the precondition holds.
    pub transferred: Option<bool>,
}

/// Checks whether `μ_D` contracts `C_D` whenever `μ` contracts `C`.
pub fn contractibility_transfer(
    ctx: &DoubleContext,
    c: &ChainComplex,
    mu: &DegreeOneMap,
) -> Result<ContractibilityReport> {
    let zero = ChainMap::zero(c, c)?;
    if !is_homotopy(&ChainMap::identity(c), &zero, mu)? {
        return Ok(ContractibilityReport {
            precondition: false,
            transferred: None,
        });
    }
    let cd = c.double(ctx)?;
    let mud = double_degree_one(ctx, mu)?;
    let ok = is_homotopy(&ChainMap::identity(&cd), &ChainMap::zero(&cd, &cd)?, &mud)?;
    Ok(ContractibilityReport {
        precondition: true,
        transferred: Some(ok),
    })
}

/// Exactness of `C` and `C_D`, degree by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactnessReport {
    pub base: Vec<(i64, bool)>,
    pub doubled: Vec<(i64, bool)>,
}

impl ExactnessReport {
    pub fn base_exact(&self) -> bool {
        self.base.iter().all(|e| e.1)
    }

    pub fn doubled_exact(&self) -> bool {
        self.doubled.iter().all(|e| e.1)
    }

    /// `C_D` exact implies `C` exact.
    pub fn implication_holds(&self) -> bool {
        !self.doubled_exact() || self.base_exact()
    }
}

impl fmt::Display for ExactnessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[(i64, bool)]| {
            v.iter()
                .map(|(i, e)| format!("{i}:{}", if *e { "exact" } else { "not-exact" }))
                .collect::<Vec<_>>()
                .join(" ")
        };
        writeln!(f, "C   {}", show(&self.base))?;
        write!(f, "C_D {}", show(&self.doubled))
    }
}

pub fn exactness_propagation_check(
    ctx: &DoubleContext,
    c: &ChainComplex,
) -> Result<ExactnessReport> {
    let cd = c.double(ctx)?;
    let base = c
        .degrees()
        .map(|i| Ok((i, c.is_exact_at(i)?)))
        .collect::<Result<Vec<_>>>()?;
    let doubled = cd
        .degrees()
        .map(|i| Ok((i, cd.is_exact_at(i)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExactnessReport { base, doubled })
}

/// Chain maps `α : C -> D`, `β : D -> C` with homotopies `μ : β∘α ≃ id_C` and `ν : α∘β ≃ id_D`.
#[derive(Debug, Clone)]
pub struct HomotopyEquivalence {
    pub alpha: ChainMap,
    pub beta: ChainMap,
    pub mu: DegreeOneMap,
    pub nu: DegreeOneMap,
}

impl HomotopyEquivalence {
    /// Both homotopy identities hold.
    pub fn check(&self) -> Result<bool> {
        let ba = self.beta.compose(&self.alpha)?;
        let ab = self.alpha.compose(&self.beta)?;
        Ok(
            is_homotopy(&ba, &ChainMap::identity(self.alpha.source()), &self.mu)?
                && is_homotopy(&ab, &ChainMap::identity(self.alpha.target()), &self.nu)?,
        )
    }

    pub fn double(&self, ctx: &DoubleContext) -> Result<HomotopyEquivalence> {
        Ok(HomotopyEquivalence {
            alpha: double_chain_map(ctx, &self.alpha)?,
            beta: double_chain_map(ctx, &self.beta)?,
            mu: double_degree_one(ctx, &self.mu)?,
            nu: double_degree_one(ctx, &self.nu)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::{identity_complex, koszul};
    use super::*;
    use crate::module::Matrix;
    use crate::PolyRing;

    #[test]
    fn contractible_complexes() {
        let r = PolyRing::new(["x"]).unwrap();
        let ctx = DoubleContext::new(&r).unwrap();
        let c = identity_complex(&r);
        let mu = DegreeOneMap::new(&c, &c, 0, vec![Matrix::identity(&r, 1)]).unwrap();
        let rep = contractibility_transfer(&ctx, &c, &mu).unwrap();
        assert_eq!(
            rep,
            ContractibilityReport {
                precondition: true,
                transferred: Some(true)
            }
        );

        let cc = c.direct_sum(&c).unwrap();
        let mu2 = DegreeOneMap::new(&cc, &cc, 0, vec![Matrix::identity(&r, 2)]).unwrap();
        assert_eq!(
            contractibility_transfer(&ctx, &cc, &mu2)
                .unwrap()
                .transferred,
            Some(true)
        );

        let k = koszul("-");
        let kctx = DoubleContext::new(k.ring()).unwrap();
        let rep =
            contractibility_transfer(&kctx, &k, &DegreeOneMap::zero(&k, &k).unwrap()).unwrap();
        assert!(!rep.precondition);
    }

    #[test]
    fn exactness_table() {
        let r = PolyRing::new(["x"]).unwrap();
        let ctx = DoubleContext::new(&r).unwrap();
        let rep = exactness_propagation_check(&ctx, &ChainComplex::zero(&r)).unwrap();
        assert!(rep.base_exact() && rep.doubled_exact());
        let rep = exactness_propagation_check(&ctx, &identity_complex(&r)).unwrap();
        assert!(rep.base_exact() && rep.doubled_exact());
        let k = koszul("-");
        let rep = exactness_propagation_check(&DoubleContext::new(k.ring()).unwrap(), &k).unwrap();
        assert!(rep.implication_holds());
    }

    #[test]
    fn homotopy_equivalence_doubles() {
        let r = PolyRing::new(["x"]).unwrap();
        let ctx = DoubleContext::new(&r).unwrap();
        let c = identity_complex(&r);
        let z = ChainComplex::zero(&r);
        let he = HomotopyEquivalence {
            alpha: ChainMap::zero(&c, &z).unwrap(),
            beta: ChainMap::zero(&z, &c).unwrap(),
            mu: DegreeOneMap::new(
                &c,
                &c,
                0,
                vec![
                    Matrix::from_rows(&r, 1, 1, vec![vec![crate::Polynomial::from_int(&r, -1)]])
                        .unwrap(),
                ],
            )
            .unwrap(),
            nu: DegreeOneMap::zero(&z, &z).unwrap(),
        };
        assert!(he.check().unwrap());
        assert!(he.double(&ctx).unwrap().check().unwrap());
    }
}
