use super::{double_element, double_module, DoubleContext};
use crate::module::{ModuleElement, PresentedQuotient, Submodule};
use crate::{Error, Result};

/// `(h + W)_D = h_D + W_D`, kept as a representative and the doubled denominator.
#[derive(Debug, Clone)]
pub struct DoubledCoset {
    representative: ModuleElement,
    denominator: Submodule,
}

impl DoubledCoset {
    pub fn representative(&self) -> &ModuleElement {
        &self.representative
    }

    pub fn denominator(&self) -> &Submodule {
        &self.denominator
    }

    pub fn is_zero(&self) -> Result<bool> {
        self.denominator.contains(&self.representative)
    }

    pub fn same_coset(&self, other: &DoubledCoset) -> Result<bool> {
        if other.denominator.rank() != self.denominator.rank() {
            return Err(Error::RankMismatch {
                expected: self.denominator.rank(),
                found: other.denominator.rank(),
            });
        }
        self.denominator
            .contains(&self.representative.try_sub(&other.representative)?)
    }
}

pub fn double_quotient_element(
    ctx: &DoubleContext,
    h: &ModuleElement,
    w: &Submodule,
) -> Result<DoubledCoset> {
    if h.rank() != w.rank() {
        return Err(Error::RankMismatch {
            expected: w.rank(),
            found: h.rank(),
        });
    }
    Ok(DoubledCoset {
        representative: double_element(ctx, h)?,
        denominator: double_module(ctx, w)?.into_value(),
    })
}

/// `(M/W)_D = M_D / W_D`.
pub fn double_quotient_module(
    ctx: &DoubleContext,
    q: &PresentedQuotient,
) -> Result<PresentedQuotient> {
    let num = double_module(ctx, q.numerator())?.into_value();
    let den = double_module(ctx, q.denominator())?.into_value();
    PresentedQuotient::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::PolyRing;

    #[test]
    fn cosets() {
        let r = PolyRing::new(["x"]).unwrap();
        let ctx = DoubleContext::new(&r).unwrap();
        let w = Submodule::new(&r, 1, vec![ModuleElement::parse(&r, "(x^2)").unwrap()]).unwrap();
        let c =
            double_quotient_element(&ctx, &ModuleElement::parse(&r, "(x^3 - x^2)").unwrap(), &w)
                .unwrap();
        assert!(c.is_zero().unwrap());
        let c =
            double_quotient_element(&ctx, &ModuleElement::parse(&r, "(x)").unwrap(), &w).unwrap();
        assert_eq!(c.representative().to_string(), "(x, y)");
        assert!(!c.is_zero().unwrap());
        let c2 =
            double_quotient_element(&ctx, &ModuleElement::parse(&r, "(x + 4*x^2)").unwrap(), &w)
                .unwrap();
        assert!(c.same_coset(&c2).unwrap());
    }

    #[test]
    fn quotient_module() {
        let r = PolyRing::new(["x"]).unwrap();
        let ctx = DoubleContext::new(&r).unwrap();
        let m = Submodule::new(&r, 1, vec![ModuleElement::parse(&r, "(x)").unwrap()]).unwrap();
        let w = Submodule::new(&r, 1, vec![ModuleElement::parse(&r, "(x^2)").unwrap()]).unwrap();
        let q =
            double_quotient_module(&ctx, &PresentedQuotient::new(m.clone(), w).unwrap()).unwrap();
        let s = ctx.doubled();
        let num = Submodule::new(
            s,
            2,
            vec![
                ModuleElement::parse(s, "(x, y)").unwrap(),
                ModuleElement::parse(s, "(0, y^2 - x*y)").unwrap(),
            ],
        )
        .unwrap();
        let den = Submodule::new(
            s,
            2,
            vec![
                ModuleElement::parse(s, "(x^2, y^2)").unwrap(),
                ModuleElement::parse(s, "(0, y^3 - x*y^2)").unwrap(),
            ],
        )
        .unwrap();
        assert!(q.numerator().module_eq(&num).unwrap());
        assert!(q.denominator().module_eq(&den).unwrap());
        let same =
            double_quotient_module(&ctx, &PresentedQuotient::new(m.clone(), m).unwrap()).unwrap();
        assert!(same.is_zero().unwrap());
    }
}
