use std::fmt;

use super::{Matrix, ModuleElement, Submodule};
use crate::{Error, Result};

/// A homomorphism `M -> N` between submodules of `R^p` and `R^q`, induced by a `q × p` matrix.
#[derive(Debug, Clone)]
pub struct MatrixHom {
    domain: Submodule,
    codomain: Submodule,
    matrix: Matrix,
}

impl MatrixHom {
    /// Checks dimensions and that every domain generator is sent into the codomain.
    pub fn new(domain: Submodule, codomain: Submodule, matrix: Matrix) -> Result<Self> {
        let hom = Self::new_unverified(domain, codomain, matrix)?;
        for g in hom.domain.generators() {
            let img = hom.matrix.apply(g)?;
            if !hom.codomain.contains(&img)? {
                return Err(Error::NotContained(format!(
                    "image {img} of generator {g} is not in the codomain"
                )));
            }
        }
        Ok(hom)
    }

    /// Checks dimensions only. For maps whose containment is known by construction.
    pub fn new_unverified(domain: Submodule, codomain: Submodule, matrix: Matrix) -> Result<Self> {
        if domain.ring() != codomain.ring() {
            return Err(Error::ring_mismatch(domain.ring(), codomain.ring()));
        }
        if matrix.ring() != domain.ring() {
            return Err(Error::ring_mismatch(domain.ring(), matrix.ring()));
        }
        if matrix.rows() != codomain.rank() || matrix.cols() != domain.rank() {
            return Err(Error::Shape(format!(
                "a map R^{} -> R^{} needs a {}x{} matrix, got {}x{}",
                domain.rank(),
                codomain.rank(),
                codomain.rank(),
                domain.rank(),
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(MatrixHom {
            domain,
            codomain,
            matrix,
        })
    }

    pub fn identity(m: &Submodule) -> Self {
        MatrixHom {
            domain: m.clone(),
            codomain: m.clone(),
            matrix: Matrix::identity(m.ring(), m.rank()),
        }
    }

    pub fn zero(domain: &Submodule, codomain: &Submodule) -> Result<Self> {
        let z = Matrix::zero(domain.ring(), codomain.rank(), domain.rank());
        Self::new_unverified(domain.clone(), codomain.clone(), z)
    }

    pub fn domain(&self) -> &Submodule {
        &self.domain
    }

    pub fn codomain(&self) -> &Submodule {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, h: &ModuleElement) -> Result<ModuleElement> {
        self.matrix.apply(h)
    }

    /// Images of the domain generators.
    pub fn generator_images(&self) -> Vec<ModuleElement> {
        self.domain
            .generators()
            .iter()
            .map(|g| {
                self.matrix
                    .apply(g)
                    .expect("dimensions checked at construction")
            })
            .collect()
    }

    pub fn image(&self) -> Submodule {
        Submodule::from_parts(
            self.codomain.ring(),
            self.codomain.rank(),
            self.generator_images(),
        )
        .without_zero_generators()
    }

    /// `{h ∈ M : A h = 0}`, from the syzygies of the generator images.
    pub fn kernel(&self) -> Submodule {
        let ring = self.domain.ring();
        let rel =
            Submodule::from_parts(ring, self.codomain.rank(), self.generator_images()).syzygies();
        let gens = rel
            .generators()
            .iter()
            .map(|a| {
                ModuleElement::combination(
                    ring,
                    self.domain.rank(),
                    a.components(),
                    self.domain.generators(),
                )
            })
            .filter(|h| !h.is_zero())
            .collect();
        Submodule::from_parts(ring, self.domain.rank(), gens)
    }

    /// `self ∘ inner`; requires `codomain(inner) ⊆ domain(self)`.
    pub fn compose(&self, inner: &MatrixHom) -> Result<MatrixHom> {
        if inner.codomain.rank() != self.domain.rank()
            || inner.codomain.ring() != self.domain.ring()
        {
            return Err(Error::Incompatible(format!(
                "codomain of rank {} cannot feed a domain of rank {}",
                inner.codomain.rank(),
                self.domain.rank()
            )));
        }
        if !self.domain.contains_module(&inner.codomain)? {
            return Err(Error::Incompatible(
                "codomain of the inner map is not inside the domain of the outer map".into(),
            ));
        }
        Ok(self.compose_unverified(inner))
    }

    /// Composition skipping the codomain ⊆ domain check.
    pub(crate) fn compose_unverified(&self, inner: &MatrixHom) -> MatrixHom {
        let matrix = self.matrix.mul(&inner.matrix).expect("ranks checked");
        MatrixHom {
            domain: inner.domain.clone(),
            codomain: self.codomain.clone(),
            matrix,
        }
    }

    fn check_parallel(&self, other: &MatrixHom) -> Result<()> {
        if self.domain.rank() != other.domain.rank()
            || self.codomain.rank() != other.codomain.rank()
        {
            return Err(Error::Shape("maps between different ambient ranks".into()));
        }
        if self.domain.ring() != other.domain.ring() {
            return Err(Error::ring_mismatch(
                self.domain.ring(),
                other.domain.ring(),
            ));
        }
        Ok(())
    }

    /// Equality as maps: `(A - A') g = 0` for every domain generator `g`.
    pub fn eq_on_domain(&self, other: &MatrixHom) -> Result<bool> {
        self.check_parallel(other)?;
        let diff = self.matrix.sub(&other.matrix)?;
        for g in self.domain.generators() {
            if !diff.apply(g)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn add(&self, other: &MatrixHom) -> Result<MatrixHom> {
        self.check_parallel(other)?;
        Ok(MatrixHom {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.add(&other.matrix)?,
        })
    }

    pub fn sub(&self, other: &MatrixHom) -> Result<MatrixHom> {
        self.check_parallel(other)?;
        Ok(MatrixHom {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.sub(&other.matrix)?,
        })
    }

    /// Sends every element of the domain to zero.
    pub fn is_zero_map(&self) -> bool {
        self.generator_images().iter().all(ModuleElement::is_zero)
    }

    pub fn is_surjective(&self) -> Result<bool> {
        self.image().contains_module(&self.codomain)
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_zero()
    }
}

impl fmt::Display for MatrixHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} by {}", self.domain, self.codomain, self.matrix)
    }
}

/// `γ ∘ φ`, checking `codomain(φ) ⊆ domain(γ)`.
pub fn hom_compose(gamma: &MatrixHom, phi: &MatrixHom) -> Result<MatrixHom> {
    gamma.compose(phi)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::poly::{PolyRing, Polynomial};

    fn ring(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(vars.iter().copied()).unwrap()
    }

    fn module(r: &Arc<PolyRing>, rank: usize, gens: &[&str]) -> Submodule {
        Submodule::new(
            r,
            rank,
            gens.iter()
                .map(|g| ModuleElement::parse(r, g).unwrap())
                .collect(),
        )
        .unwrap()
    }

    fn mat(r: &Arc<PolyRing>, rows: &[&[&str]]) -> Matrix {
        let data: Vec<Vec<Polynomial>> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| Polynomial::parse(r, s).unwrap())
                    .collect()
            })
            .collect();
        let cols = data.first().map_or(0, Vec::len);
        Matrix::from_rows(r, data.len(), cols, data).unwrap()
    }

    #[test]
    fn construction_checks_containment() {
        let x = ring(&["x"]);
        let m = module(&x, 1, &["x"]);
        assert!(MatrixHom::new(Submodule::free(&x, 1), m.clone(), mat(&x, &[&["x"]])).is_ok());
        assert!(matches!(
            MatrixHom::new(Submodule::free(&x, 1), m.clone(), mat(&x, &[&["1"]])),
            Err(Error::NotContained(_))
        ));
        assert!(matches!(
            MatrixHom::new(Submodule::free(&x, 2), m, mat(&x, &[&["1"]])),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn kernel_examples() {
        let x = ring(&["x"]);
        let m = module(&x, 1, &["x"]);
        let mult = MatrixHom::new(m.clone(), Submodule::free(&x, 1), mat(&x, &[&["x"]])).unwrap();
        assert!(mult.kernel().is_zero());
        let zero = MatrixHom::zero(&m, &Submodule::free(&x, 1)).unwrap();
        assert!(zero.kernel().module_eq(&m).unwrap());

        let r = ring(&["x", "y"]);
        let m = module(&r, 1, &["x", "y"]);
        let f = MatrixHom::new(m, Submodule::free(&r, 1), mat(&r, &[&["x*y"]])).unwrap();
        assert!(f.kernel().is_zero());

        // projection R^2 -> R onto the first coordinate
        let p = MatrixHom::new(
            Submodule::free(&r, 2),
            Submodule::free(&r, 1),
            mat(&r, &[&["1", "0"]]),
        )
        .unwrap();
        assert!(p.kernel().module_eq(&module(&r, 2, &["(0, 1)"])).unwrap());
    }

    #[test]
    fn image_examples() {
        let x = ring(&["x"]);
        let m = module(&x, 1, &["x"]);
        assert!(MatrixHom::identity(&m).image().module_eq(&m).unwrap());
        assert!(MatrixHom::zero(&m, &m).unwrap().image().is_zero());
        let f = MatrixHom::new(m.clone(), m, mat(&x, &[&["x"]])).unwrap();
        assert!(f.image().module_eq(&module(&x, 1, &["x^2"])).unwrap());
    }

    #[test]
    fn compose_examples() {
        let r = ring(&["x", "y"]);
        let f = Submodule::free(&r, 1);
        let gx = MatrixHom::new(f.clone(), f.clone(), mat(&r, &[&["x"]])).unwrap();
        let gy = MatrixHom::new(f.clone(), f.clone(), mat(&r, &[&["y"]])).unwrap();
        let c = hom_compose(&gx, &gy).unwrap();
        assert_eq!(c.matrix(), &mat(&r, &[&["x*y"]]));
        assert!(hom_compose(&gx, &MatrixHom::identity(&f))
            .unwrap()
            .eq_on_domain(&gx)
            .unwrap());
        let z = MatrixHom::zero(&f, &f).unwrap();
        assert!(hom_compose(&z, &gy).unwrap().is_zero_map());

        let small = module(&r, 1, &["x"]);
        let into_small = MatrixHom::new(small.clone(), small.clone(), mat(&r, &[&["1"]])).unwrap();
        assert!(matches!(
            hom_compose(&into_small, &gy),
            Err(Error::Incompatible(_))
        ));
    }

    #[test]
    fn equality_as_maps() {
        let r = ring(&["x", "y"]);
        let m = module(&r, 2, &["(x, y)"]);
        let target = Submodule::free(&r, 1);
        let a = MatrixHom::new(m.clone(), target.clone(), mat(&r, &[&["y", "0"]])).unwrap();
        let b = MatrixHom::new(m.clone(), target.clone(), mat(&r, &[&["0", "x"]])).unwrap();
        assert_ne!(a.matrix(), b.matrix());
        assert!(a.eq_on_domain(&b).unwrap());
        assert!(a.eq_on_domain(&a).unwrap());
        let c = MatrixHom::new(m, target, mat(&r, &[&["1", "0"]])).unwrap();
        assert!(!a.eq_on_domain(&c).unwrap());
    }
}
