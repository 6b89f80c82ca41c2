use std::sync::Arc;

use super::{double_element, double_module, DoubleContext, DoubleGenerator, DoubledModule};
use crate::module::{MatrixHom, ModuleElement, Submodule};
use crate::poly::{PolyRing, Polynomial, RingMorphism};
use crate::{Error, Result};

/// A map germ `φ : Y -> X` seen through its pullback `φ* : R_X -> R_Y`, together with
/// `φ⊗ : S_X -> S_Y` sending the first copy through `π₁∘φ*` and the second through `π₂∘φ*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativeMap {
    source: DoubleContext,
    target: DoubleContext,
    pullback: RingMorphism,
    tensor: RingMorphism,
}

impl RelativeMap {
    pub fn new(pullback: RingMorphism) -> Result<Self> {
        let source = DoubleContext::new(pullback.source())?;
        let target = DoubleContext::new(pullback.target())?;
        let first = pullback
            .images()
            .iter()
            .map(|p| target.pi1().apply_unchecked(p));
        let second = pullback
            .images()
            .iter()
            .map(|p| target.pi2().apply_unchecked(p));
        let images = first.chain(second).collect();
        let tensor = RingMorphism::new(source.doubled(), target.doubled(), images)?;
        Ok(RelativeMap {
            source,
            target,
            pullback,
            tensor,
        })
    }

    pub fn identity(ring: &Arc<PolyRing>) -> Result<Self> {
        Self::new(RingMorphism::identity(ring))
    }

    /// Context of the source germ ring `R_X`.
    pub fn source(&self) -> &DoubleContext {
        &self.source
    }

    /// Context of the target germ ring `R_Y`.
    pub fn target(&self) -> &DoubleContext {
        &self.target
    }

    pub fn pullback(&self) -> &RingMorphism {
        &self.pullback
    }

    pub fn tensor(&self) -> &RingMorphism {
        &self.tensor
    }

    /// `R_X -> R_Y -> R_Z`, i.e. the pullback of the composite germ `Z -> Y -> X`.
    pub fn then(&self, next: &RelativeMap) -> Result<RelativeMap> {
        Self::new(self.pullback.then(&next.pullback)?)
    }

    /// `φ⊗∘π₁ = π₁∘φ*` and `φ⊗∘π₂ = π₂∘φ*`.
    pub fn respects_projections(&self) -> Result<bool> {
        let a1 = self.source.pi1().then(&self.tensor)?;
        let b1 = self.pullback.then(self.target.pi1())?;
        let a2 = self.source.pi2().then(&self.tensor)?;
        let b2 = self.pullback.then(self.target.pi2())?;
        Ok(a1.images() == b1.images() && a2.images() == b2.images())
    }
}

pub fn phi_tensor(rel: &RelativeMap, alpha: &Polynomial) -> Result<Polynomial> {
    rel.tensor.apply(alpha)
}

/// An `R_X`-linear map `M -> N` into an `R_Y`-module, given by the images of the generators of `M`.
#[derive(Debug, Clone)]
pub struct GeneratorImageHom {
    relative: RelativeMap,
    domain: Submodule,
    codomain: Submodule,
    images: Vec<ModuleElement>,
}

impl GeneratorImageHom {
    /// Checks that the images lie in `N` and that every syzygy `a` of the generators of `M`
    /// gives `Σ φ*(a_i)·image_i = 0`.
    pub fn new(
        relative: RelativeMap,
        domain: Submodule,
        codomain: Submodule,
        images: Vec<ModuleElement>,
    ) -> Result<Self> {
        if domain.ring() != relative.source.base() {
            return Err(Error::ring_mismatch(relative.source.base(), domain.ring()));
        }
        if codomain.ring() != relative.target.base() {
            return Err(Error::ring_mismatch(
                relative.target.base(),
                codomain.ring(),
            ));
        }
        if images.len() != domain.generators().len() {
            return Err(Error::Shape(format!(
                "{} generators but {} images",
                domain.generators().len(),
                images.len()
            )));
        }
        for img in &images {
            if !codomain.contains(img)? {
                return Err(Error::NotContained(format!(
                    "image {img} is not in the codomain"
                )));
            }
        }
        let hom = GeneratorImageHom {
            relative,
            domain,
            codomain,
            images,
        };
        for a in hom.domain.syzygies().generators() {
            let v = hom.combine(a.components());
            if !v.is_zero() {
                return Err(Error::IllDefined(format!(
                    "the relation {a} among the domain generators is sent to {v}, not to zero"
                )));
            }
        }
        Ok(hom)
    }

    /// The same data as a matrix hom, over the identity germ.
    pub fn from_matrix_hom(phi: &MatrixHom) -> Result<Self> {
        Ok(GeneratorImageHom {
            relative: RelativeMap::identity(phi.domain().ring())?,
            domain: phi.domain().clone(),
            codomain: phi.codomain().clone(),
            images: phi.generator_images(),
        })
    }

    pub fn relative(&self) -> &RelativeMap {
        &self.relative
    }

    pub fn domain(&self) -> &Submodule {
        &self.domain
    }

    pub fn codomain(&self) -> &Submodule {
        &self.codomain
    }

    pub fn images(&self) -> &[ModuleElement] {
        &self.images
    }

    fn combine(&self, coeffs: &[Polynomial]) -> ModuleElement {
        let pulled: Vec<Polynomial> = coeffs
            .iter()
            .map(|c| self.relative.pullback.apply_unchecked(c))
            .collect();
        ModuleElement::combination(
            self.codomain.ring(),
            self.codomain.rank(),
            &pulled,
            &self.images,
        )
    }

    /// `φ(h)` for `h ∈ M`, through a lift of `h` to the generators.
    pub fn apply(&self, h: &ModuleElement) -> Result<ModuleElement> {
        match self.domain.lift(h)? {
            Some(c) => Ok(self.combine(&c)),
            None => Err(Error::NotContained(format!("{h} is not in the domain"))),
        }
    }

    /// `φ' ∘ φ` for `φ' : N' -> P` along a further germ, requiring `φ(M) ⊆ N'`.
    pub fn then(&self, next: &GeneratorImageHom) -> Result<GeneratorImageHom> {
        if next.domain.ring() != self.codomain.ring() || next.domain.rank() != self.codomain.rank()
        {
            return Err(Error::Incompatible(
                "codomain and domain live in different free modules".into(),
            ));
        }
        let images = self
            .images
            .iter()
            .map(|g| next.apply(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(GeneratorImageHom {
            relative: self.relative.then(&next.relative)?,
            domain: self.domain.clone(),
            codomain: next.codomain.clone(),
            images,
        })
    }
}

/// `φ_D : M_D -> N_D` relative to the germ, given on the generators of `M_D`.
#[derive(Debug, Clone)]
pub struct RelativeDoubledHom {
    relative: RelativeMap,
    domain: DoubledModule,
    codomain: Submodule,
    assignments: Vec<ModuleElement>,
}

impl RelativeDoubledHom {
    pub fn relative(&self) -> &RelativeMap {
        &self.relative
    }

    pub fn domain(&self) -> &DoubledModule {
        &self.domain
    }

    pub fn codomain(&self) -> &Submodule {
        &self.codomain
    }

    /// Image of each generator of `domain().value()`, in order.
    pub fn assignments(&self) -> &[ModuleElement] {
        &self.assignments
    }

    fn combine(&self, coeffs: &[Polynomial]) -> ModuleElement {
        let pushed: Vec<Polynomial> = coeffs
            .iter()
            .map(|c| self.relative.tensor.apply_unchecked(c))
            .collect();
        ModuleElement::combination(
            self.codomain.ring(),
            self.codomain.rank(),
            &pushed,
            &self.assignments,
        )
    }

    /// `φ_D(u)` for `u ∈ M_D`.
    pub fn apply(&self, u: &ModuleElement) -> Result<ModuleElement> {
        match self.domain.value().lift(u)? {
            Some(c) => Ok(self.combine(&c)),
            None => Err(Error::NotContained(format!(
                "{u} is not in the doubled domain"
            ))),
        }
    }

    /// Every relation among the generators of `M_D` is sent to zero.
    pub fn is_well_defined(&self) -> bool {
        self.domain
            .value()
            .syzygies()
            .generators()
            .iter()
            .all(|a| self.combine(a.components()).is_zero())
    }
}

/// `(g_i)_D ↦ (n_i)_D` and `(0, (y_j - x_j)·g_i∘π₂) ↦ (0, (φ*(x_j)∘π₂ - φ*(x_j)∘π₁)·n_i∘π₂)`,
/// where `n_i` is the image of `g_i`.
pub fn relative_double_hom(phi: &GeneratorImageHom) -> Result<RelativeDoubledHom> {
    let rel = &phi.relative;
    let (sx, ty) = (&rel.source, &rel.target);
    let domain = double_module(sx, &phi.domain)?;
    let codomain = double_module(ty, &phi.codomain)?.into_value();
    let q = phi.codomain.rank();
    let mut assignments = Vec::with_capacity(domain.generator_kinds().len());
    for kind in domain.generator_kinds() {
        let a = match *kind {
            DoubleGenerator::Double { index } => double_element(ty, &phi.images[index])?,
            DoubleGenerator::Difference { index, var } => {
                let f = &rel.pullback.images()[var];
                let diff = &ty.pi2().apply_unchecked(f) - &ty.pi1().apply_unchecked(f);
                let n2 = phi.images[index].map(ty.pi2())?;
                ModuleElement::zero(ty.doubled(), q).concat(&n2.scale(&diff))
            }
        };
        assignments.push(a);
    }
    Ok(RelativeDoubledHom {
        relative: rel.clone(),
        domain,
        codomain,
        assignments,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::Matrix;

    fn cusp_line() -> (Arc<PolyRing>, Arc<PolyRing>, RelativeMap) {
        let x = PolyRing::new(["x"]).unwrap();
        let t = PolyRing::new(["t"]).unwrap();
        let pb = RingMorphism::new(&x, &t, vec![Polynomial::parse(&t, "t^2").unwrap()]).unwrap();
        (x, t, RelativeMap::new(pb).unwrap())
    }

    #[test]
    fn tensor_substitution() {
        let x = PolyRing::new(["x1", "x2"]).unwrap();
        let t = PolyRing::new(["t"]).unwrap();
        let pb = RingMorphism::new(
            &x,
            &t,
            vec![
                Polynomial::parse(&t, "t^2").unwrap(),
                Polynomial::parse(&t, "t^3").unwrap(),
            ],
        )
        .unwrap();
        let rel = RelativeMap::new(pb).unwrap();
        assert!(rel.respects_projections().unwrap());
        let sx = rel.source().doubled().clone();
        let a = Polynomial::parse(&sx, "x1 - y1").unwrap();
        assert_eq!(phi_tensor(&rel, &a).unwrap().to_string(), "t^2 - t_2^2");
        let c = Polynomial::parse(&sx, "7/3").unwrap();
        assert_eq!(phi_tensor(&rel, &c).unwrap().to_string(), "7/3");
    }

    #[test]
    fn cusp_double() {
        let (x, t, rel) = cusp_line();
        let m = Submodule::new(&x, 1, vec![ModuleElement::parse(&x, "(x)").unwrap()]).unwrap();
        let n = Submodule::new(&t, 1, vec![ModuleElement::parse(&t, "(t^2)").unwrap()]).unwrap();
        let phi = GeneratorImageHom::new(
            rel.clone(),
            m,
            n,
            vec![ModuleElement::parse(&t, "(t^2)").unwrap()],
        )
        .unwrap();
        let h = ModuleElement::parse(&x, "(x^2)").unwrap();
        assert_eq!(phi.apply(&h).unwrap().to_string(), "(t^4)");
        let d = relative_double_hom(&phi).unwrap();
        assert!(d.is_well_defined());
        let hd = double_element(rel.source(), &h).unwrap();
        assert_eq!(d.apply(&hd).unwrap().to_string(), "(t^4, t_2^4)");
    }

    #[test]
    fn syzygy_violation_is_rejected() {
        let (x, t, rel) = cusp_line();
        // x·(x) - x·(x) is trivial, but (x, x^2) has the relation x·g1 - g2 = 0
        let m = Submodule::new(
            &x,
            1,
            vec![
                ModuleElement::parse(&x, "(x)").unwrap(),
                ModuleElement::parse(&x, "(x^2)").unwrap(),
            ],
        )
        .unwrap();
        let n = Submodule::free(&t, 1);
        let bad = vec![
            ModuleElement::parse(&t, "(1)").unwrap(),
            ModuleElement::parse(&t, "(1)").unwrap(),
        ];
        assert!(matches!(
            GeneratorImageHom::new(rel.clone(), m.clone(), n.clone(), bad),
            Err(Error::IllDefined(_))
        ));
        let good = vec![
            ModuleElement::parse(&t, "(1)").unwrap(),
            ModuleElement::parse(&t, "(t^2)").unwrap(),
        ];
        assert!(GeneratorImageHom::new(rel, m, n, good).is_ok());
    }

    #[test]
    fn identity_germ_matches_matrix_double() {
        let r = PolyRing::new(["x", "z"]).unwrap();
        let m = Submodule::new(
            &r,
            2,
            vec![
                ModuleElement::parse(&r, "(x, z)").unwrap(),
                ModuleElement::parse(&r, "(z^2, 1)").unwrap(),
            ],
        )
        .unwrap();
        let a = Matrix::from_rows(
            &r,
            1,
            2,
            vec![vec![
                Polynomial::parse(&r, "z").unwrap(),
                Polynomial::parse(&r, "x - 1").unwrap(),
            ]],
        )
        .unwrap();
        let phi = MatrixHom::new(m.clone(), Submodule::free(&r, 1), a).unwrap();
        let g = GeneratorImageHom::from_matrix_hom(&phi).unwrap();
        let d = relative_double_hom(&g).unwrap();
        let ctx = g.relative().source().clone();
        let md = super::super::double_matrix_hom(&ctx, &phi).unwrap();
        for (gen, img) in d.domain().value().generators().iter().zip(d.assignments()) {
            assert_eq!(&md.hom().apply(gen).unwrap(), img);
        }
    }
}
