use std::fmt;
use std::sync::{Arc, OnceLock};

use super::groebner::{self, basis_below, groebner_basis};
use super::vector::{Order, Vector};
use super::ModuleElement;
use crate::poly::{PolyRing, Polynomial};
use crate::{Error, Result};

/// Gröbner basis of `{(g_i, e_i)}` in `R^(p+s)`: its elements with leading term in the
/// first `p` components reduce `M`, the rest generate the syzygies of the `g_i`.
#[derive(Debug)]
struct Lifting {
    basis: Vec<Vector>,
}

/// A finitely generated submodule of `R^rank`.
///
/// Gröbner data is computed lazily and cached; the caches are write-once, so a
/// `Submodule` behaves as an immutable value and can be shared across threads.
#[derive(Debug, Clone)]
pub struct Submodule {
    ring: Arc<PolyRing>,
    rank: usize,
    gens: Vec<ModuleElement>,
    gb: OnceLock<Arc<Vec<Vector>>>,
    working: OnceLock<Arc<Vec<Vector>>>,
    tracked: OnceLock<Arc<Vec<Vector>>>,
    lifting: OnceLock<Arc<Lifting>>,
}

impl Submodule {
    pub fn new(ring: &Arc<PolyRing>, rank: usize, gens: Vec<ModuleElement>) -> Result<Self> {
        for g in &gens {
            if g.ring() != ring {
                return Err(Error::ring_mismatch(ring, g.ring()));
            }
            if g.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: g.rank(),
                });
            }
        }
        Ok(Self::from_parts(ring, rank, gens))
    }

    pub(crate) fn from_parts(ring: &Arc<PolyRing>, rank: usize, gens: Vec<ModuleElement>) -> Self {
        Submodule {
            ring: ring.clone(),
            rank,
            gens,
            gb: OnceLock::new(),
            working: OnceLock::new(),
            tracked: OnceLock::new(),
            lifting: OnceLock::new(),
        }
    }

    pub fn zero(ring: &Arc<PolyRing>, rank: usize) -> Self {
        Self::from_parts(ring, rank, Vec::new())
    }

    /// The whole free module `R^rank`, generated by the standard basis.
    pub fn free(ring: &Arc<PolyRing>, rank: usize) -> Self {
        Self::from_parts(
            ring,
            rank,
            (0..rank)
                .map(|i| ModuleElement::unit(ring, rank, i))
                .collect(),
        )
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[ModuleElement] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(ModuleElement::is_zero)
    }

    fn order(&self) -> Order {
        Order::Degree { block: self.rank }
    }

    /// The reduced position-over-term basis, computed from the graded one.
    fn gb_vectors(&self) -> &[Vector] {
        self.gb.get_or_init(|| {
            let input = self
                .working()
                .iter()
                .map(|v| v.reorder(Order::Position))
                .collect();
            Arc::new(groebner_basis(input))
        })
    }

    /// A Gröbner basis of `M` under the graded order, used for membership.
    fn working(&self) -> &[Vector] {
        self.working.get_or_init(|| {
            let cached = self
                .tracked
                .get()
                .map(|t| t.as_slice())
                .or(self.lifting.get().map(|l| l.basis.as_slice()));
            if let Some(basis) = cached {
                let first = basis
                    .iter()
                    .filter(|v| v.lead_term().comp < self.rank)
                    .map(|v| Vector {
                        terms: v
                            .terms
                            .iter()
                            .filter(|(t, _)| t.comp < self.rank)
                            .cloned()
                            .collect(),
                    })
                    .collect();
                return Arc::new(first);
            }
            Arc::new(groebner_basis(
                self.gens
                    .iter()
                    .map(|g| Vector::from_element(g, self.order()))
                    .collect(),
            ))
        })
    }

    fn tagged(&self) -> Vec<Vector> {
        let (nv, order) = (self.ring.nvars(), self.order());
        self.gens
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let (v, s) = Vector::from_element_scaled(g, order);
                v.add_multiple(s.numer(), &Vector::unit(self.rank + i, nv, order))
            })
            .collect()
    }

    fn lifting(&self) -> &Lifting {
        self.lifting.get_or_init(|| {
            Arc::new(Lifting {
                basis: groebner_basis(self.tagged()),
            })
        })
    }

    /// The part of the lifting basis with leading terms in `R^rank`.
    fn tracked(&self) -> &[Vector] {
        self.tracked.get_or_init(|| {
            if let Some(l) = self.lifting.get() {
                return Arc::new(
                    l.basis
                        .iter()
                        .filter(|v| v.lead_term().comp < self.rank)
                        .cloned()
                        .collect(),
                );
            }
            Arc::new(basis_below(self.tagged(), self.rank))
        })
    }

    /// The reduced Gröbner basis under position-over-term grevlex.
    pub fn groebner(&self) -> Vec<ModuleElement> {
        self.gb_vectors()
            .iter()
            .map(|v| v.to_monic_element(&self.ring, self.rank))
            .collect()
    }

    fn check_element(&self, h: &ModuleElement) -> Result<()> {
        if h.ring() != &self.ring {
            return Err(Error::ring_mismatch(&self.ring, h.ring()));
        }
        if h.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: h.rank(),
            });
        }
        Ok(())
    }

    fn check_ambient(&self, other: &Submodule) -> Result<()> {
        if other.ring != self.ring {
            return Err(Error::ring_mismatch(&self.ring, &other.ring));
        }
        if other.rank != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: other.rank,
            });
        }
        Ok(())
    }

    /// Normal form of `h` modulo the Gröbner basis.
    pub fn normal_form(&self, h: &ModuleElement) -> Result<ModuleElement> {
        self.check_element(h)?;
        let (start, scale) = Vector::from_element_scaled(h, Order::Position);
        let (r, k) = groebner::reduce_scaled(start, self.gb_vectors());
        Ok(r.to_element_scaled(&self.ring, self.rank, 0, &(k * scale)))
    }

    pub fn contains(&self, h: &ModuleElement) -> Result<bool> {
        self.check_element(h)?;
        if h.is_zero() {
            return Ok(true);
        }
        Ok(groebner::reduce(Vector::from_element(h, self.order()), self.working()).is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains_module(&self, other: &Submodule) -> Result<bool> {
        self.check_ambient(other)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as submodules (mutual containment).
    pub fn module_eq(&self, other: &Submodule) -> Result<bool> {
        Ok(self.contains_module(other)? && other.contains_module(self)?)
    }

    /// Cofactors `c` with `h = Σ c_i g_i` over the stored generators, or `None` if `h ∉ M`.
    pub fn lift(&self, h: &ModuleElement) -> Result<Option<Vec<Polynomial>>> {
        self.check_element(h)?;
        let s = self.gens.len();
        // every vector stays of the form (u, v) with u - Σ v_i g_i = k·h
        let (start, scale) = Vector::from_element_scaled(h, self.order());
        let (rest, k) = match groebner::reduce_block(start, self.tracked(), self.rank) {
            Some(v) => v,
            None => return Ok(None),
        };
        let v = rest.to_element_scaled(&self.ring, s, self.rank, &(k * scale));
        Ok(Some(v.components().iter().map(|c| -c).collect()))
    }

    /// The relation module `{a ∈ R^s : Σ a_i g_i = 0}` of the stored generators.
    pub fn syzygies(&self) -> Submodule {
        let s = self.gens.len();
        let gens = self
            .lifting()
            .basis
            .iter()
            .filter(|v| v.lead_term().comp >= self.rank)
            .map(|v| v.to_element(&self.ring, s, self.rank))
            .collect();
        Submodule::from_parts(&self.ring, s, gens)
    }

    pub fn intersect(&self, other: &Submodule) -> Result<Submodule> {
        self.check_ambient(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().map(ModuleElement::neg));
        let syz = syzygies(&self.ring, self.rank, &gens)?;
        let k = self.gens.len();
        let out = syz
            .generators()
            .iter()
            .map(|a| {
                ModuleElement::combination(&self.ring, self.rank, &a.components()[..k], &self.gens)
            })
            .filter(|h| !h.is_zero())
            .collect();
        Ok(Submodule::from_parts(&self.ring, self.rank, out))
    }

    /// `M ⊕ N ⊂ R^(p+q)`, generated by `(g, 0)` and `(0, h)`.
    pub fn direct_sum(&self, other: &Submodule) -> Result<Submodule> {
        if other.ring != self.ring {
            return Err(Error::ring_mismatch(&self.ring, &other.ring));
        }
        let zp = ModuleElement::zero(&self.ring, self.rank);
        let zq = ModuleElement::zero(&self.ring, other.rank);
        let mut gens: Vec<ModuleElement> = self.gens.iter().map(|g| g.concat(&zq)).collect();
        gens.extend(other.gens.iter().map(|h| zp.concat(h)));
        Ok(Submodule::from_parts(
            &self.ring,
            self.rank + other.rank,
            gens,
        ))
    }

    /// Same module with zero generators removed.
    pub fn without_zero_generators(&self) -> Submodule {
        let gens = self.gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        Submodule::from_parts(&self.ring, self.rank, gens)
    }
}

/// Relations among arbitrary elements of `R^rank`.
pub fn syzygies(ring: &Arc<PolyRing>, rank: usize, gens: &[ModuleElement]) -> Result<Submodule> {
    Ok(Submodule::new(ring, rank, gens.to_vec())?.syzygies())
}

impl fmt::Display for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(vars.iter().copied()).unwrap()
    }

    fn el(r: &Arc<PolyRing>, s: &str) -> ModuleElement {
        ModuleElement::parse(r, s).unwrap()
    }

    fn module(r: &Arc<PolyRing>, rank: usize, gens: &[&str]) -> Submodule {
        Submodule::new(r, rank, gens.iter().map(|g| el(r, g)).collect()).unwrap()
    }

    #[test]
    fn groebner_examples() {
        let r = ring(&["x", "y"]);
        let m = module(&r, 1, &["x", "y"]);
        assert_eq!(m.groebner(), vec![el(&r, "(y)"), el(&r, "(x)")]);
        assert!(Submodule::zero(&r, 2).groebner().is_empty());
        let m = module(&r, 1, &["0", "0"]);
        assert!(m.groebner().is_empty());
    }

    #[test]
    fn groebner_basis_spans_input() {
        let r = ring(&["x", "y"]);
        let m = module(&r, 2, &["(x, y)", "(0, (y - x)*y)"]);
        let gb = Submodule::new(&r, 2, m.groebner()).unwrap();
        assert!(gb.contains_module(&m).unwrap());
        assert!(m.contains_module(&gb).unwrap());
    }

    #[test]
    fn membership_examples() {
        let x = ring(&["x"]);
        let m = module(&x, 1, &["x"]);
        assert!(m.contains(&el(&x, "x^2")).unwrap());
        assert!(!m.contains(&el(&x, "1")).unwrap());

        let r = ring(&["x", "y"]);
        let m = module(&r, 2, &["(x, y)", "(0, (y - x)*y)"]);
        assert!(m.contains(&el(&r, "(x^2, y^2)")).unwrap());
        assert!(!m.contains(&el(&r, "(x, 0)")).unwrap());
        assert!(matches!(
            m.contains(&el(&r, "x")),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn equality_examples() {
        let x = ring(&["x"]);
        assert!(module(&x, 1, &["x", "x^2"])
            .module_eq(&module(&x, 1, &["x"]))
            .unwrap());
        assert!(!module(&x, 1, &["x"])
            .module_eq(&module(&x, 1, &["x^2"]))
            .unwrap());
        let r = ring(&["x", "y"]);
        assert!(module(&r, 1, &["x"])
            .module_eq(&module(&r, 2, &["(x, 0)"]))
            .is_err());
    }

    #[test]
    fn syzygy_examples() {
        let r = ring(&["x", "y"]);
        let s = module(&r, 1, &["x", "y"]).syzygies();
        assert!(s.module_eq(&module(&r, 2, &["(y, -x)"])).unwrap());

        let s = module(&r, 1, &["1"]).syzygies();
        assert!(s.is_zero());

        let s = module(&r, 1, &["x", "x^2"]).syzygies();
        assert!(s.contains(&el(&r, "(x, -1)")).unwrap());
    }

    #[test]
    fn lift_reconstructs() {
        let r = ring(&["x", "y"]);
        let m = module(&r, 2, &["(x, y)", "(0, (y - x)*y)"]);
        let h = el(&r, "(x^2*y + 3*x, y^3 - 2*x*y + 5*y)");
        match m.lift(&h).unwrap() {
            Some(c) => {
                assert_eq!(ModuleElement::combination(&r, 2, &c, m.generators()), h);
            }
            None => assert!(!m.contains(&h).unwrap()),
        }
        let h = el(&r, "(x^2, y^2)");
        let c = m.lift(&h).unwrap().expect("member");
        assert_eq!(ModuleElement::combination(&r, 2, &c, m.generators()), h);
        assert_eq!(m.lift(&el(&r, "(1, 0)")).unwrap(), None);
    }

    #[test]
    fn intersection_of_ideals() {
        let r = ring(&["x", "y"]);
        let i = module(&r, 1, &["x"])
            .intersect(&module(&r, 1, &["y"]))
            .unwrap();
        assert!(i.module_eq(&module(&r, 1, &["x*y"])).unwrap());
    }

    #[test]
    fn direct_sum_examples() {
        let r = ring(&["x", "y"]);
        let s = module(&r, 1, &["x"])
            .direct_sum(&module(&r, 1, &["y"]))
            .unwrap();
        assert_eq!(s.generators(), &[el(&r, "(x, 0)"), el(&r, "(0, y)")]);
        let s = module(&r, 1, &["x"])
            .direct_sum(&Submodule::zero(&r, 2))
            .unwrap();
        assert_eq!(s.rank(), 3);
        assert_eq!(s.generators(), &[el(&r, "(x, 0, 0)")]);
        assert!(s.contains(&el(&r, "(x^2, 0, 0)")).unwrap());
        assert!(!s.contains(&el(&r, "(x^2, 1, 0)")).unwrap());
    }
}
