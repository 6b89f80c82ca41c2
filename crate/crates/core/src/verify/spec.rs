use crate::{Error, Result};

/// Size bounds for randomly drawn instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InstanceSpec {
    pub seed: u64,
    /// Number of base variables, at most 3.
    pub max_vars: usize,
    /// Rank of ambient free modules, at most 3.
    pub max_rank: usize,
    /// Generators per module, at most 4.
    pub max_gens: usize,
    /// Total degree of drawn polynomials, at most 3.
    pub max_degree: u32,
    /// Coefficients are drawn from `[-coeff_bound, coeff_bound]`, at most 5.
    pub coeff_bound: i64,
    /// Terms per drawn polynomial.
    pub max_terms: usize,
}

impl Default for InstanceSpec {
    fn default() -> Self {
        InstanceSpec {
            seed: 0,
            max_vars: 3,
            max_rank: 2,
            max_gens: 3,
            max_degree: 2,
            coeff_bound: 5,
            max_terms: 2,
        }
    }
}

impl InstanceSpec {
    pub fn with_seed(seed: u64) -> Self {
        InstanceSpec {
            seed,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.max_vars <= 3
            && self.max_rank <= 3
            && self.max_rank >= 1
            && self.max_gens <= 4
            && self.max_degree <= 3
            && (0..=5).contains(&self.coeff_bound)
            && self.max_terms >= 1;
        if ok {
            Ok(())
        } else {
            Err(Error::Shape(format!(
                "instance bounds out of range: {self:?}"
            )))
        }
    }

    /// Seed of trial `t`; running with this seed and one trial replays it.
    pub fn trial_seed(&self, t: u64) -> u64 {
        self.seed.wrapping_add(t)
    }
}
