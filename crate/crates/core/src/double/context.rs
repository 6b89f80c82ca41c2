use std::sync::Arc;

use crate::poly::{PolyRing, RingMorphism};
use crate::Result;

/// The base ring `Q[x1..xn]`, the doubled ring `Q[x1..xn, y1..yn]` and the two projections
/// realised as substitutions `π₁*: xi ↦ xi` and `π₂*: xi ↦ yi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleContext {
    base: Arc<PolyRing>,
    doubled: Arc<PolyRing>,
    pi1: RingMorphism,
    pi2: RingMorphism,
}

/// Name of the second copy of a base variable: a leading `x` becomes `y` (`x1 -> y1`),
/// anything else gets a `_2` suffix; `_2` is appended until the name is fresh.
pub fn second_copy_name(name: &str, taken: &[String]) -> String {
    let mut cand = match name.strip_prefix('x') {
        Some(rest) => format!("y{rest}"),
        None => format!("{name}_2"),
    };
    while taken.iter().any(|t| t == &cand) {
        cand.push_str("_2");
    }
    cand
}

impl DoubleContext {
    pub fn new(base: &Arc<PolyRing>) -> Result<Self> {
        let mut names: Vec<String> = base.var_names().to_vec();
        for v in base.var_names() {
            let n = second_copy_name(v, &names);
            names.push(n);
        }
        let doubled = PolyRing::new(names)?;
        let n = base.nvars();
        Ok(DoubleContext {
            base: base.clone(),
            pi1: RingMorphism::shifted_inclusion(base, &doubled, 0),
            pi2: RingMorphism::shifted_inclusion(base, &doubled, n),
            doubled,
        })
    }

    pub fn base(&self) -> &Arc<PolyRing> {
        &self.base
    }

    pub fn doubled(&self) -> &Arc<PolyRing> {
        &self.doubled
    }

    pub fn pi1(&self) -> &RingMorphism {
        &self.pi1
    }

    pub fn pi2(&self) -> &RingMorphism {
        &self.pi2
    }

    pub fn nvars(&self) -> usize {
        self.base.nvars()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Polynomial;

    #[test]
    fn naming() {
        let ctx = DoubleContext::new(&PolyRing::new(["x1", "x2"]).unwrap()).unwrap();
        assert_eq!(ctx.doubled().var_names(), &["x1", "x2", "y1", "y2"]);
        let ctx = DoubleContext::new(&PolyRing::new(["x"]).unwrap()).unwrap();
        assert_eq!(ctx.doubled().var_names(), &["x", "y"]);
        let ctx = DoubleContext::new(&PolyRing::new(["t"]).unwrap()).unwrap();
        assert_eq!(ctx.doubled().var_names(), &["t", "t_2"]);
        let ctx = DoubleContext::new(&PolyRing::new(["x", "y"]).unwrap()).unwrap();
        assert_eq!(ctx.doubled().var_names(), &["x", "y", "y_2", "y_2_2"]);
    }

    #[test]
    fn projections_have_disjoint_images() {
        let base = PolyRing::new(["a", "b"]).unwrap();
        let ctx = DoubleContext::new(&base).unwrap();
        let p = Polynomial::parse(&base, "a^2*b - 3").unwrap();
        let p1 = ctx.pi1().apply(&p).unwrap();
        let p2 = ctx.pi2().apply(&p).unwrap();
        assert_eq!(p1.to_string(), "a^2*b - 3");
        assert_eq!(p2.to_string(), "a_2^2*b_2 - 3");
    }
}
