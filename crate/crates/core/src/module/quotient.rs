use super::{ModuleElement, Submodule};
use crate::{Error, Result};

/// A quotient `M / W` of submodules of the same free module, kept as a presentation.
#[derive(Debug, Clone)]
pub struct PresentedQuotient {
    numerator: Submodule,
    denominator: Submodule,
}

impl PresentedQuotient {
    pub fn new(numerator: Submodule, denominator: Submodule) -> Result<Self> {
        if !numerator.contains_module(&denominator)? {
            return Err(Error::NotContained(
                "the denominator is not contained in the numerator".into(),
            ));
        }
        Ok(PresentedQuotient {
            numerator,
            denominator,
        })
    }

    /// The quotient `R^p / W`.
    pub fn of_free(denominator: Submodule) -> Self {
        let numerator = Submodule::free(denominator.ring(), denominator.rank());
        PresentedQuotient {
            numerator,
            denominator,
        }
    }

    /// Lifts a submodule of `R^p / W` given by representatives `h + W` to `π⁻¹` of it.
    pub fn lift_generators(denominator: &Submodule, reps: Vec<ModuleElement>) -> Result<Self> {
        let mut gens = reps;
        gens.extend(denominator.generators().iter().cloned());
        let numerator = Submodule::new(denominator.ring(), denominator.rank(), gens)?;
        Ok(PresentedQuotient {
            numerator,
            denominator: denominator.clone(),
        })
    }

    pub fn numerator(&self) -> &Submodule {
        &self.numerator
    }

    pub fn denominator(&self) -> &Submodule {
        &self.denominator
    }

    pub fn rank(&self) -> usize {
        self.numerator.rank()
    }

    /// The quotient is zero when `M ⊆ W`.
    pub fn is_zero(&self) -> Result<bool> {
        self.denominator.contains_module(&self.numerator)
    }

    /// `h + W = g + W`.
    pub fn same_coset(&self, h: &ModuleElement, g: &ModuleElement) -> Result<bool> {
        self.denominator.contains(&h.try_sub(g)?)
    }
}
