//! The double construction `h ↦ h_D = (h∘π₁, h∘π₂)` and its extension to modules,
//! homomorphisms, quotients, direct sums and maps along germs.

mod context;
mod functor;
mod quotient;
mod relative;
mod sum;

use std::fmt;

pub use context::{second_copy_name, DoubleContext};
pub use functor::{functor_check, CheckEntry, FunctorReport};
pub use quotient::{double_quotient_element, double_quotient_module, DoubledCoset};
pub use relative::{
    phi_tensor, relative_double_hom, GeneratorImageHom, RelativeDoubledHom, RelativeMap,
};
pub use sum::{direct_sum_iso, direct_sum_iso_many, DirectSumIso};

use crate::module::{Matrix, MatrixHom, ModuleElement, Submodule};
use crate::poly::Polynomial;
use crate::{Error, Result};

/// `h_D = (h∘π₁, h∘π₂)`.
pub fn double_element(ctx: &DoubleContext, h: &ModuleElement) -> Result<ModuleElement> {
    if h.ring() != ctx.base() {
        return Err(Error::ring_mismatch(ctx.base(), h.ring()));
    }
    Ok(h.map(ctx.pi1())?.concat(&h.map(ctx.pi2())?))
}

/// Where a generator of a doubled module comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DoubleGenerator {
    /// `(g_i)_D`.
    Double { index: usize },
    /// `(0, (y_j - x_j)·(g_i∘π₂))`.
    Difference { index: usize, var: usize },
}

/// `M_D` together with the module it was built from.
#[derive(Debug, Clone)]
pub struct DoubledModule {
    context: DoubleContext,
    source: Submodule,
    value: Submodule,
    kinds: Vec<DoubleGenerator>,
}

impl DoubledModule {
    pub fn context(&self) -> &DoubleContext {
        &self.context
    }

    pub fn source(&self) -> &Submodule {
        &self.source
    }

    /// The doubled module as a submodule of `S^{2p}`.
    pub fn value(&self) -> &Submodule {
        &self.value
    }

    pub fn into_value(self) -> Submodule {
        self.value
    }

    /// One entry per generator of [`value`](Self::value), in the same order.
    pub fn generator_kinds(&self) -> &[DoubleGenerator] {
        &self.kinds
    }

    /// Generators written with the `(y_j - x_j)` factor kept apart, e.g. `(0, (y - x)*y)`.
    pub fn structured_generators(&self) -> Vec<String> {
        let ctx = &self.context;
        let names = ctx.doubled().var_names();
        let n = ctx.nvars();
        self.kinds
            .iter()
            .zip(self.value.generators())
            .map(|(kind, g)| match *kind {
                DoubleGenerator::Double { .. } => g.to_string(),
                DoubleGenerator::Difference { index, var } => {
                    let p = self.source.rank();
                    let factor = format!("({} - {})", names[n + var], names[var]);
                    let g2 = self.source.generators()[index]
                        .map(ctx.pi2())
                        .expect("source over the base ring");
                    let mut parts = vec!["0".to_string(); p];
                    for c in g2.components() {
                        parts.push(if c.is_zero() {
                            "0".to_string()
                        } else if c.is_one() {
                            factor.clone()
                        } else if c.is_single_term() && !c.to_string().starts_with('-') {
                            format!("{factor}*{c}")
                        } else {
                            format!("{factor}*({c})")
                        });
                    }
                    format!("({})", parts.join(", "))
                }
            })
            .collect()
    }
}

impl fmt::Display for DoubledModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.structured_generators().join(", "))
    }
}

/// `M_D`, generated by `(g_i)_D` and `(0, (y_j - x_j)·(g_i∘π₂))` for the generators `g_i` of `M`.
///
/// The second family is what makes the list finite: `(x_j g)_D = x_j·g_D + (0, (y_j - x_j)·g∘π₂)`.
pub fn double_module(ctx: &DoubleContext, m: &Submodule) -> Result<DoubledModule> {
    if m.ring() != ctx.base() {
        return Err(Error::ring_mismatch(ctx.base(), m.ring()));
    }
    let s = ctx.doubled();
    let n = ctx.nvars();
    let p = m.rank();
    let mut gens = Vec::new();
    let mut kinds = Vec::new();
    for (i, g) in m.generators().iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        gens.push(double_element(ctx, g)?);
        kinds.push(DoubleGenerator::Double { index: i });
    }
    for (i, g) in m.generators().iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let g2 = g.map(ctx.pi2())?;
        for j in 0..n {
            let diff = &Polynomial::var(s, n + j) - &Polynomial::var(s, j);
            gens.push(ModuleElement::zero(s, p).concat(&g2.scale(&diff)));
            kinds.push(DoubleGenerator::Difference { index: i, var: j });
        }
    }
    Ok(DoubledModule {
        context: ctx.clone(),
        source: m.clone(),
        value: Submodule::from_parts(s, 2 * p, gens),
        kinds,
    })
}

/// `φ_D : M_D -> N_D` together with `φ`.
#[derive(Debug, Clone)]
pub struct DoubledHom {
    context: DoubleContext,
    source: MatrixHom,
    hom: MatrixHom,
}

impl DoubledHom {
    pub fn context(&self) -> &DoubleContext {
        &self.context
    }

    pub fn source(&self) -> &MatrixHom {
        &self.source
    }

    /// `φ_D` as a matrix hom over the doubled ring.
    pub fn hom(&self) -> &MatrixHom {
        &self.hom
    }

    pub fn into_hom(self) -> MatrixHom {
        self.hom
    }

    pub fn matrix(&self) -> &Matrix {
        self.hom.matrix()
    }

    /// Off-diagonal blocks vanish, the upper block only involves the first copy of the
    /// variables and the lower block only the second.
    pub fn has_block_structure(&self) -> bool {
        let b = self.hom.matrix();
        let (q, p) = (self.source.matrix().rows(), self.source.matrix().cols());
        let n = self.context.nvars();
        let uses = |poly: &Polynomial, lo: usize, hi: usize| {
            poly.terms().iter().all(|(m, _)| {
                m.exponents()
                    .iter()
                    .enumerate()
                    .all(|(v, &e)| e == 0 || (lo..hi).contains(&v))
            })
        };
        for i in 0..2 * q {
            for j in 0..2 * p {
                let e = b.get(i, j);
                let ok = match (i < q, j < p) {
                    (true, true) => uses(e, 0, n),
                    (false, false) => uses(e, n, 2 * n),
                    _ => e.is_zero(),
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }
}

/// `φ_D` given by `B = diag(A∘π₁, A∘π₂)` between `M_D` and `N_D`.
pub fn double_matrix_hom(ctx: &DoubleContext, phi: &MatrixHom) -> Result<DoubledHom> {
    if phi.domain().ring() != ctx.base() {
        return Err(Error::ring_mismatch(ctx.base(), phi.domain().ring()));
    }
    let a = phi.matrix();
    let b = Matrix::block_diag(&a.map(ctx.pi1())?, &a.map(ctx.pi2())?)?;
    let domain = double_module(ctx, phi.domain())?.into_value();
    let codomain = double_module(ctx, phi.codomain())?.into_value();
    Ok(DoubledHom {
        context: ctx.clone(),
        source: phi.clone(),
        hom: MatrixHom::new_unverified(domain, codomain, b)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{generic_rank, PolyRing};

    fn el(r: &std::sync::Arc<PolyRing>, s: &str) -> ModuleElement {
        ModuleElement::parse(r, s).unwrap()
    }

    fn sub(r: &std::sync::Arc<PolyRing>, rank: usize, gens: &[&str]) -> Submodule {
        Submodule::new(r, rank, gens.iter().map(|g| el(r, g)).collect()).unwrap()
    }

    #[test]
    fn element_doubles() {
        let r = PolyRing::new(["x1", "x2"]).unwrap();
        let ctx = DoubleContext::new(&r).unwrap();
        assert_eq!(
            double_element(&ctx, &el(&r, "(x1, x2)"))
                .unwrap()
                .to_string(),
            "(x1, x2, y1, y2)"
        );
        let z = double_element(&ctx, &ModuleElement::zero(&r, 2)).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.rank(), 4);
    }

    #[test]
    fn module_double_of_principal_ideal() {
        let r = PolyRing::new(["x"]).unwrap();
        let ctx = DoubleContext::new(&r).unwrap();
        let d = double_module(&ctx, &sub(&r, 1, &["(x)"])).unwrap();
        assert_eq!(d.to_string(), "<(x, y), (0, (y - x)*y)>");
        let s = ctx.doubled();
        let expected = sub(s, 2, &["(x, y)", "(0, y^2 - x*y)"]);
        assert!(d.value().module_eq(&expected).unwrap());

        let one = double_module(&ctx, &sub(&r, 1, &["(1)"])).unwrap();
        assert_eq!(one.to_string(), "<(1, 1), (0, (y - x))>");
        assert!(one
            .value()
            .module_eq(&sub(s, 2, &["(1, 1)", "(0, y - x)"]))
            .unwrap());

        let zero = double_module(&ctx, &Submodule::zero(&r, 1)).unwrap();
        assert!(zero.value().is_zero());
    }

    #[test]
    fn doubles_have_even_rank() {
        let r = PolyRing::new(["x", "z"]).unwrap();
        let ctx = DoubleContext::new(&r).unwrap();
        let m = sub(&r, 3, &["(x, z, 0)", "(z^2, 0, x)"]);
        assert_eq!(generic_rank(&m), 2);
        assert_eq!(generic_rank(double_module(&ctx, &m).unwrap().value()), 4);
    }

    #[test]
    fn matrix_doubles() {
        let r = PolyRing::new(["x"]).unwrap();
        let ctx = DoubleContext::new(&r).unwrap();
        let free = Submodule::free(&r, 1);
        let a = Matrix::from_rows(&r, 1, 1, vec![vec![Polynomial::var(&r, 0)]]).unwrap();
        let phi = MatrixHom::new(free.clone(), free, a).unwrap();
        let d = double_matrix_hom(&ctx, &phi).unwrap();
        assert_eq!(d.matrix().to_string(), "[[x, 0], [0, y]]");
        assert!(d.has_block_structure());

        let r2 = PolyRing::new(["x1", "x2"]).unwrap();
        let ctx2 = DoubleContext::new(&r2).unwrap();
        let a = Matrix::from_rows(
            &r2,
            1,
            2,
            vec![vec![Polynomial::var(&r2, 0), Polynomial::var(&r2, 1)]],
        )
        .unwrap();
        let phi = MatrixHom::new(Submodule::free(&r2, 2), Submodule::free(&r2, 1), a).unwrap();
        let d = double_matrix_hom(&ctx2, &phi).unwrap();
        assert_eq!(d.matrix().to_string(), "[[x1, x2, 0, 0], [0, 0, y1, y2]]");
        assert!(d.has_block_structure());
        // φ_D(h_D) = (φ(h))_D
        let h = el(&r2, "(x2^2, 1 - x1)");
        let lhs = d.hom().apply(&double_element(&ctx2, &h).unwrap()).unwrap();
        let rhs = double_element(&ctx2, &phi.apply(&h).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn identity_doubles_to_identity() {
        let r = PolyRing::new(["x"]).unwrap();
        let ctx = DoubleContext::new(&r).unwrap();
        let m = sub(&r, 1, &["(x)"]);
        let d = double_matrix_hom(&ctx, &MatrixHom::identity(&m)).unwrap();
        assert_eq!(d.matrix(), &Matrix::identity(ctx.doubled(), 2));
    }
}
