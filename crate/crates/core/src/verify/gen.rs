use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::replay::Replay;
use super::InstanceSpec;
use crate::module::{Matrix, MatrixHom, ModuleElement, Submodule};
use crate::poly::{rat, Monomial, PolyRing, Polynomial, RingMorphism};

/// Seeded source of random instances. Everything drawn is also written to a [`Replay`].
pub struct Gen {
    rng: ChaCha8Rng,
    spec: InstanceSpec,
    pub replay: Replay,
}

/// A matrix hom together with its replay name.
pub struct DrawnHom {
    pub hom: MatrixHom,
    pub name: String,
    pub domain: String,
    pub codomain: String,
}

impl Gen {
    pub fn new(spec: &InstanceSpec, seed: u64) -> Self {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(seed),
            spec: *spec,
            replay: Replay::default(),
        }
    }

    pub fn spec(&self) -> &InstanceSpec {
        &self.spec
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    /// `Q[x]`, `Q[x1, x2]` or `Q[x1, x2, x3]`.
    pub fn ring_with(&mut self, n: usize) -> Arc<PolyRing> {
        let ring = match n {
            1 => PolyRing::new(["x"]),
            _ => PolyRing::new((1..=n).map(|i| format!("x{i}"))),
        }
        .expect("valid names");
        self.replay.ring(&ring);
        ring
    }

    pub fn ring(&mut self) -> Arc<PolyRing> {
        let n = self.range(1, self.spec.max_vars.max(1));
        self.ring_with(n)
    }

    pub fn rank(&mut self) -> usize {
        self.range(1, self.spec.max_rank)
    }

    fn coefficient(&mut self) -> i64 {
        let b = self.spec.coeff_bound.max(1);
        loop {
            let c = self.rng.gen_range(-b..=b);
            if c != 0 {
                return c;
            }
        }
    }

    pub fn monomial(&mut self, nvars: usize, max_degree: u32) -> Monomial {
        let d = self.rng.gen_range(0..=max_degree);
        let mut e = vec![0u32; nvars];
        if nvars > 0 {
            for _ in 0..d {
                let i = self.rng.gen_range(0..nvars);
                e[i] += 1;
            }
        }
        Monomial::from_exponents(e)
    }

    /// Up to `max_terms` terms of degree at most `max_degree`, never zero.
    pub fn poly_with(&mut self, ring: &Arc<PolyRing>, max_degree: u32) -> Polynomial {
        let k = self.range(1, self.spec.max_terms);
        let mut terms: Vec<(Monomial, _)> = Vec::with_capacity(k);
        for _ in 0..k {
            let m = self.monomial(ring.nvars(), max_degree);
            let c = rat(self.coefficient());
            // distinct monomials keep every coefficient within the bound
            if terms.iter().all(|(n, _)| n != &m) {
                terms.push((m, c));
            }
        }
        Polynomial::from_terms(ring, terms)
    }

    pub fn poly(&mut self, ring: &Arc<PolyRing>) -> Polynomial {
        self.poly_with(ring, self.spec.max_degree)
    }

    /// A coefficient for combinations: zero, a constant or a linear form.
    pub fn multiplier(&mut self, ring: &Arc<PolyRing>) -> Polynomial {
        match self.range(0, 3) {
            0 => Polynomial::zero(ring),
            1 => Polynomial::from_int(ring, self.coefficient()),
            _ => self.poly_with(ring, 1),
        }
    }

    pub fn element(&mut self, ring: &Arc<PolyRing>, rank: usize) -> ModuleElement {
        let comps = (0..rank)
            .map(|_| {
                if self.coin(0.25) {
                    Polynomial::zero(ring)
                } else {
                    self.poly(ring)
                }
            })
            .collect();
        ModuleElement::new(ring, comps).expect("same ring")
    }

    /// A submodule with `ngens` random generators, recorded in the replay.
    pub fn submodule_with(&mut self, ring: &Arc<PolyRing>, rank: usize, ngens: usize) -> Submodule {
        let gens = (0..ngens).map(|_| self.element(ring, rank)).collect();
        let m = Submodule::new(ring, rank, gens).expect("same ring");
        self.replay.module(&m);
        m
    }

    pub fn submodule(&mut self, ring: &Arc<PolyRing>, rank: usize) -> Submodule {
        let s = self.range(1, self.spec.max_gens.max(1));
        self.submodule_with(ring, rank, s)
    }

    /// A random element of `m`.
    pub fn member_of(&mut self, m: &Submodule) -> ModuleElement {
        let coeffs: Vec<_> = m
            .generators()
            .iter()
            .map(|_| self.multiplier(m.ring()))
            .collect();
        ModuleElement::combination(m.ring(), m.rank(), &coeffs, m.generators())
    }

    /// A submodule of `m` generated by random combinations of its generators.
    pub fn submodule_of(&mut self, m: &Submodule) -> Submodule {
        let s = self.range(1, self.spec.max_gens.max(1));
        let gens = (0..s).map(|_| self.member_of(m)).collect();
        let w = Submodule::new(m.ring(), m.rank(), gens).expect("same ambient");
        self.replay.module(&w);
        w
    }

    /// The same module as `m`, generated differently: shuffled generators plus redundant combinations.
    pub fn regenerate(&mut self, m: &Submodule) -> Submodule {
        let mut gens: Vec<ModuleElement> = m.generators().to_vec();
        for i in (1..gens.len()).rev() {
            let j = self.range(0, i);
            gens.swap(i, j);
        }
        if !gens.is_empty() {
            // g_0 + c g_1 instead of g_0 keeps the span
            let c = if gens.len() > 1 {
                self.multiplier(m.ring())
            } else {
                Polynomial::zero(m.ring())
            };
            if gens.len() > 1 {
                gens[0] = gens[0].add(&gens[1].scale(&c));
            }
            let extra = self.member_of(m);
            gens.push(extra);
        }
        let n = Submodule::new(m.ring(), m.rank(), gens).expect("same ambient");
        self.replay.module(&n);
        n
    }

    pub fn matrix_with(
        &mut self,
        ring: &Arc<PolyRing>,
        rows: usize,
        cols: usize,
        max_degree: u32,
    ) -> Matrix {
        let data = (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| {
                        if self.coin(0.3) {
                            Polynomial::zero(ring)
                        } else {
                            self.poly_with(ring, max_degree)
                        }
                    })
                    .collect()
            })
            .collect();
        Matrix::from_rows(ring, rows, cols, data).expect("shape")
    }

    pub fn matrix(&mut self, ring: &Arc<PolyRing>, rows: usize, cols: usize) -> Matrix {
        let d = self.spec.max_degree.min(1);
        self.matrix_with(ring, rows, cols, d)
    }

    /// `φ : M -> N` with `N` either the image, the image plus an extra generator, or free.
    pub fn hom_from(&mut self, m: &Submodule) -> DrawnHom {
        let ring = m.ring().clone();
        let q = self.rank();
        let a = match self.range(0, 9) {
            0 => Matrix::zero(&ring, q, m.rank()),
            1 if q == m.rank() => Matrix::identity(&ring, q),
            _ => self.matrix(&ring, q, m.rank()),
        };
        let images: Vec<ModuleElement> = m
            .generators()
            .iter()
            .map(|g| a.apply(g).expect("shape"))
            .filter(|g| !g.is_zero())
            .collect();
        let n = match self.range(0, 2) {
            0 => Submodule::new(&ring, q, images).expect("same ambient"),
            1 => {
                let mut gens = images;
                gens.push(self.element(&ring, q));
                Submodule::new(&ring, q, gens).expect("same ambient")
            }
            _ => Submodule::free(&ring, q),
        };
        self.finish_hom(m, n, a)
    }

    fn finish_hom(&mut self, m: &Submodule, n: Submodule, a: Matrix) -> DrawnHom {
        let domain = self.replay.module(m);
        let codomain = self.replay.module(&n);
        let name = self.replay.hom(&domain, &codomain, &a);
        DrawnHom {
            hom: MatrixHom::new_unverified(m.clone(), n, a).expect("shape"),
            name,
            domain,
            codomain,
        }
    }

    /// A random hom on a random module.
    pub fn hom(&mut self) -> DrawnHom {
        let ring = self.ring();
        let p = self.rank();
        let gens = self.range(1, self.spec.max_gens.max(1));
        let m = Submodule::new(
            &ring,
            p,
            (0..gens).map(|_| self.element(&ring, p)).collect(),
        )
        .expect("same ring");
        self.hom_from(&m)
    }

    /// A second hom with the same domain and codomain: equal as a map to `phi` or a random perturbation.
    pub fn parallel_hom(&mut self, phi: &MatrixHom) -> DrawnHom {
        let ring = phi.domain().ring().clone();
        let (q, p) = (phi.codomain().rank(), phi.domain().rank());
        let a = phi.matrix();
        let b = if self.coin(0.5) {
            // add u·v^T with v^T killing every generator of the domain, when such v exists
            let rows: Vec<ModuleElement> = (0..p)
                .map(|k| {
                    ModuleElement::new(
                        &ring,
                        phi.domain()
                            .generators()
                            .iter()
                            .map(|g| g.components()[k].clone())
                            .collect(),
                    )
                    .expect("ring")
                })
                .collect();
            let s = phi.domain().generators().len();
            let syz = crate::module::syzygies(&ring, s, &rows).expect("ring");
            let mut extra = Matrix::zero(&ring, q, p);
            if let Some(v) = syz.generators().first() {
                let u = self.element(&ring, q);
                for i in 0..q {
                    for j in 0..p {
                        extra.set(i, j, &u.components()[i] * &v.components()[j]);
                    }
                }
            }
            a.add(&extra).expect("shape")
        } else {
            let mut b = a.clone();
            let (i, j) = (self.range(0, q - 1), self.range(0, p - 1));
            let c = self.poly(&ring);
            b.set(i, j, b.get(i, j) + &c);
            b
        };
        // the perturbed map may leave N; use the free module as codomain then
        let codomain = if phi
            .domain()
            .generators()
            .iter()
            .all(|g| phi.codomain().contains(&b.apply(g).unwrap()).unwrap())
        {
            phi.codomain().clone()
        } else {
            Submodule::free(&ring, q)
        };
        self.finish_hom(phi.domain(), codomain, b)
    }

    /// A unimodular `n × n` matrix and its inverse, as a product of elementary matrices.
    pub fn unimodular(&mut self, ring: &Arc<PolyRing>, n: usize) -> (Matrix, Matrix) {
        let mut u = Matrix::identity(ring, n);
        let mut inv = Matrix::identity(ring, n);
        if n < 2 {
            let c = self.coefficient();
            u.set(0, 0, Polynomial::from_int(ring, c));
            inv.set(0, 0, Polynomial::constant(ring, rat(1) / rat(c)));
            return (u, inv);
        }
        for _ in 0..2 {
            let i = self.range(0, n - 1);
            let mut j = self.range(0, n - 2);
            if j >= i {
                j += 1;
            }
            let c = self.poly_with(ring, 1);
            // E = I + c e_ij, E^{-1} = I - c e_ij
            let mut e = Matrix::identity(ring, n);
            e.set(i, j, c.clone());
            let mut ei = Matrix::identity(ring, n);
            ei.set(i, j, -&c);
            u = e.mul(&u).expect("square");
            inv = inv.mul(&ei).expect("square");
        }
        (u, inv)
    }

    /// A pullback `R_X -> R_Y` sending each variable to a monomial (cusp-like germs).
    pub fn monomial_germ(
        &mut self,
        x: &Arc<PolyRing>,
        y: &Arc<PolyRing>,
        max_degree: u32,
    ) -> RingMorphism {
        let images = (0..x.nvars())
            .map(|_| loop {
                let m = self.monomial(y.nvars(), max_degree);
                if !m.is_one() {
                    break Polynomial::term(y, m, rat(1));
                }
            })
            .collect();
        let f = RingMorphism::new(x, y, images).expect("rings");
        self.replay.germ(&f);
        f
    }
}
