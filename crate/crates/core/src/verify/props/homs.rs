use super::ctx;
use crate::double::{
    double_element, double_matrix_hom, double_module, relative_double_hom, DoubleContext,
    DoubledHom, GeneratorImageHom,
};
use crate::module::{generic_rank, MatrixHom, ModuleElement};
use crate::poly::rat;
use crate::verify::{Gen, Trial};
use crate::{Rational, Result};

/// `φ_D`, failing the trial if the block shape is off.
fn doubled(c: &DoubleContext, phi: &MatrixHom, t: &mut Trial) -> Result<DoubledHom> {
    let d = double_matrix_hom(c, phi)?;
    t.check(d.has_block_structure(), || {
        format!("doubled matrix {} is not block diagonal", d.matrix())
    });
    Ok(d)
}

/// `φ_D(h_D) = (φ(h))_D` on random elements, and `φ_D` agrees with the generator-wise construction.
pub fn t33(g: &mut Gen) -> Result<Trial> {
    let phi = g.hom().hom;
    let c = ctx(phi.domain().ring());
    let mut t = Trial::pass();
    let d = doubled(&c, &phi, &mut t)?;
    for _ in 0..2 {
        let h = g.member_of(phi.domain());
        let lhs = d.hom().apply(&double_element(&c, &h)?)?;
        let rhs = double_element(&c, &phi.apply(&h)?)?;
        t.check(lhs == rhs, || {
            format!("φ_D(h_D) = {lhs} but (φ(h))_D = {rhs} for h = {h}")
        });
    }
    let rel = relative_double_hom(&GeneratorImageHom::from_matrix_hom(&phi)?)?;
    for (gen, img) in rel
        .domain()
        .value()
        .generators()
        .iter()
        .zip(rel.assignments())
    {
        let b = d.hom().apply(gen)?;
        t.check(&b == img, || {
            format!("generator {gen}: matrix gives {b}, generator images give {img}")
        });
    }
    Ok(t)
}

/// `Im(φ_D) = (Im φ)_D`.
pub fn p34_a(g: &mut Gen) -> Result<Trial> {
    let phi = g.hom().hom;
    let c = ctx(phi.domain().ring());
    let mut t = Trial::pass();
    let d = doubled(&c, &phi, &mut t)?;
    let ok = d
        .hom()
        .image()
        .module_eq(double_module(&c, &phi.image())?.value())?;
    t.check(ok, || {
        "image of the double differs from the double of the image".into()
    });
    Ok(t)
}

/// `(Ker φ)_D ⊆ Ker(φ_D)`; instances where the inclusion is strict are logged.
pub fn p34_b(g: &mut Gen) -> Result<Trial> {
    let phi = g.hom().hom;
    let c = ctx(phi.domain().ring());
    let mut t = Trial::pass();
    let d = doubled(&c, &phi, &mut t)?;
    let kd = double_module(&c, &phi.kernel())?.into_value();
    for gen in kd.generators() {
        let img = d.hom().apply(gen)?;
        t.check(img.is_zero() && d.hom().domain().contains(gen)?, || {
            format!("{gen} lies in (Ker φ)_D but φ_D sends it to {img}")
        });
    }
    let full = d.hom().kernel();
    t.observe(if kd.contains_module(&full)? {
        "kernel-equal"
    } else {
        "kernel-strict"
    });
    Ok(t)
}

/// `φ = φ'` iff `φ_D = φ'_D`, as maps.
pub fn p39_a(g: &mut Gen) -> Result<Trial> {
    let phi = g.hom().hom;
    let psi = g.parallel_hom(&phi).hom;
    let c = ctx(phi.domain().ring());
    let mut t = Trial::pass();
    let (dp, dq) = (doubled(&c, &phi, &mut t)?, doubled(&c, &psi, &mut t)?);
    let base = phi.eq_on_domain(&psi)?;
    let dbl = dp.hom().eq_on_domain(dq.hom())?;
    t.observe(if base { "equal" } else { "different" });
    t.check(base == dbl, || {
        format!("base equality {base}, doubled equality {dbl}")
    });
    Ok(t)
}

/// `φ_D = φ'_D` implies `φ = φ'`.
pub fn t316_faithful(g: &mut Gen) -> Result<Trial> {
    let phi = g.hom().hom;
    let psi = g.parallel_hom(&phi).hom;
    let c = ctx(phi.domain().ring());
    let mut t = Trial::pass();
    let (dp, dq) = (doubled(&c, &phi, &mut t)?, doubled(&c, &psi, &mut t)?);
    if dp.hom().eq_on_domain(dq.hom())? {
        t.observe("doubles-equal");
        t.check(phi.eq_on_domain(&psi)?, || {
            "different maps with equal doubles".into()
        });
    }
    Ok(t)
}

/// `(γ∘φ)_D = γ_D∘φ_D`.
pub fn p39_b(g: &mut Gen) -> Result<Trial> {
    let phi = g.hom().hom;
    let gamma = g.hom_from(phi.codomain()).hom;
    let c = ctx(phi.domain().ring());
    let mut t = Trial::pass();
    let whole = doubled(&c, &gamma.compose(&phi)?, &mut t)?;
    let (dg, dp) = (doubled(&c, &gamma, &mut t)?, doubled(&c, &phi, &mut t)?);
    let parts = dg.hom().compose(dp.hom())?;
    t.check(whole.hom().eq_on_domain(&parts)?, || {
        "double of the composite differs from the composite of doubles".into()
    });
    Ok(t)
}

/// `(φ + φ')_D = φ_D + φ'_D`.
pub fn p39_c(g: &mut Gen) -> Result<Trial> {
    let phi = g.hom().hom;
    let psi = g.parallel_hom(&phi).hom;
    let c = ctx(phi.domain().ring());
    let mut t = Trial::pass();
    let sum = doubled(&c, &phi.add(&psi)?, &mut t)?;
    let (dp, dq) = (doubled(&c, &phi, &mut t)?, doubled(&c, &psi, &mut t)?);
    t.check(sum.hom().eq_on_domain(&dp.hom().add(dq.hom())?)?, || {
        "double of the sum differs from the sum of doubles".into()
    });
    Ok(t)
}

struct Flags {
    surjective: bool,
    injective: bool,
    zero: bool,
    /// The cokernel is torsion: the image has full generic rank in the codomain.
    epi: bool,
}

fn flags(phi: &MatrixHom) -> Result<Flags> {
    Ok(Flags {
        surjective: phi.is_surjective()?,
        injective: phi.is_injective(),
        zero: phi.is_zero_map(),
        epi: generic_rank(&phi.image()) == generic_rank(phi.codomain()),
    })
}

fn hom_and_double(g: &mut Gen, t: &mut Trial) -> Result<(Flags, Flags)> {
    let phi = g.hom().hom;
    let c = ctx(phi.domain().ring());
    let d = doubled(&c, &phi, t)?;
    Ok((flags(&phi)?, flags(d.hom())?))
}

/// Surjectivity both ways.
pub fn c35_a(g: &mut Gen) -> Result<Trial> {
    let mut t = Trial::pass();
    let (b, d) = hom_and_double(g, &mut t)?;
    t.observe(format!("surjective={}", b.surjective));
    t.check(b.surjective == d.surjective, || {
        format!(
            "surjective: base {}, doubled {}",
            b.surjective, d.surjective
        )
    });
    Ok(t)
}

/// Injectivity of `φ_D` implies injectivity of `φ`.
pub fn c35_b(g: &mut Gen) -> Result<Trial> {
    let mut t = Trial::pass();
    let (b, d) = hom_and_double(g, &mut t)?;
    t.observe(format!(
        "injective={} doubled-injective={}",
        b.injective, d.injective
    ));
    t.check(!d.injective || b.injective, || {
        "doubled map injective, base map not".into()
    });
    Ok(t)
}

/// Isomorphism both ways.
pub fn c35_c(g: &mut Gen) -> Result<Trial> {
    let mut t = Trial::pass();
    let (b, d) = hom_and_double(g, &mut t)?;
    let (bi, di) = (b.injective && b.surjective, d.injective && d.surjective);
    t.observe(format!("isomorphism={bi}"));
    t.check(bi == di, || format!("isomorphism: base {bi}, doubled {di}"));
    Ok(t)
}

/// The zero map both ways.
pub fn c35_d(g: &mut Gen) -> Result<Trial> {
    let mut t = Trial::pass();
    let (b, d) = hom_and_double(g, &mut t)?;
    t.observe(format!("zero={}", b.zero));
    t.check(b.zero == d.zero, || {
        format!("zero map: base {}, doubled {}", b.zero, d.zero)
    });
    Ok(t)
}

/// Monomorphisms, epimorphisms and isomorphisms correspond.
pub fn c318(g: &mut Gen) -> Result<Trial> {
    let mut t = Trial::pass();
    let (b, d) = hom_and_double(g, &mut t)?;
    t.observe(format!("mono={} epi={}", b.injective, b.epi));
    t.check(b.injective == d.injective, || {
        format!("mono: base {}, doubled {}", b.injective, d.injective)
    });
    t.check(b.epi == d.epi, || {
        format!("epi: base {}, doubled {}", b.epi, d.epi)
    });
    let (bi, di) = (b.injective && b.surjective, d.injective && d.surjective);
    t.check(bi == di, || format!("iso: base {bi}, doubled {di}"));
    Ok(t)
}

/// The doubled matrix is `diag(A∘π₁, A∘π₂)`: block shape, and agreement with `A` at random points.
pub fn p320(g: &mut Gen) -> Result<Trial> {
    let phi = g.hom().hom;
    let c = ctx(phi.domain().ring());
    let mut t = Trial::pass();
    let d = doubled(&c, &phi, &mut t)?;
    let n = c.nvars();
    let a = phi.matrix();
    let (q, p) = (a.rows(), a.cols());
    let pt: Vec<Rational> = (0..2 * n).map(|_| rat(g.range(0, 10) as i64 - 5)).collect();
    let (u, v) = pt.split_at(n);
    for i in 0..2 * q {
        for j in 0..2 * p {
            let got = d.matrix().get(i, j).eval(&pt);
            let want = match (i < q, j < p) {
                (true, true) => a.get(i, j).eval(u),
                (false, false) => a.get(i - q, j - p).eval(v),
                _ => rat(0),
            };
            t.check(got == want, || {
                format!(
                    "entry ({i}, {j}) of the doubled matrix evaluates to {got}, expected {want}"
                )
            });
        }
    }
    Ok(t)
}

/// A matrix-induced map is well defined on the module: generator images respect every relation,
/// and it is linear on random combinations.
pub fn l319(g: &mut Gen) -> Result<Trial> {
    let phi = g.hom().hom;
    let mut t = Trial::pass();
    let gi = GeneratorImageHom::from_matrix_hom(&phi)?;
    let checked = GeneratorImageHom::new(
        gi.relative().clone(),
        phi.domain().clone(),
        phi.codomain().clone(),
        gi.images().to_vec(),
    );
    t.check(checked.is_ok(), || {
        format!("generator images violate a relation: {:?}", checked.err())
    });
    let ring = phi.domain().ring().clone();
    let coeffs: Vec<_> = phi
        .domain()
        .generators()
        .iter()
        .map(|_| g.multiplier(&ring))
        .collect();
    let h = ModuleElement::combination(
        &ring,
        phi.domain().rank(),
        &coeffs,
        phi.domain().generators(),
    );
    let direct = phi.apply(&h)?;
    let via = ModuleElement::combination(
        &ring,
        phi.codomain().rank(),
        &coeffs,
        &phi.generator_images(),
    );
    t.check(direct == via, || {
        format!("φ(Σ a_i g_i) = {direct} but Σ a_i φ(g_i) = {via}")
    });
    Ok(t)
}
