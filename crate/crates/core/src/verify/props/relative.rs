use std::sync::Arc;

use crate::double::{
    double_element, phi_tensor, relative_double_hom, GeneratorImageHom, RelativeMap,
};
use crate::module::{ModuleElement, Submodule};
use crate::poly::{PolyRing, Polynomial, RingMorphism};
use crate::verify::{Gen, Trial};
use crate::Result;

/// `Q[x1, x2] -> Q[t]`, `x1 ↦ t², x2 ↦ t³`.
fn cusp(g: &mut Gen) -> RingMorphism {
    let x = g.ring_with(2);
    let t = PolyRing::new(["t"]).expect("valid name");
    let images = vec![
        Polynomial::parse(&t, "t^2").expect("parses"),
        Polynomial::parse(&t, "t^3").expect("parses"),
    ];
    let f = RingMorphism::new(&x, &t, images).expect("rings");
    g.replay.germ(&f);
    f
}

fn target_ring(g: &mut Gen) -> Arc<PolyRing> {
    let n = g.range(1, 2);
    let r = match n {
        1 => PolyRing::new(["t"]),
        _ => PolyRing::new(["t", "u"]),
    }
    .expect("valid names");
    g.replay.ring(&r);
    r
}

fn random_germ(g: &mut Gen, max_degree: u32) -> RingMorphism {
    let x = g.ring();
    let y = target_ring(g);
    g.monomial_germ(&x, &y, max_degree)
}

/// A well-defined `φ : M -> N` along `f`, with images `A·f*(g_i)` for a random matrix `A` over the target.
fn relative_hom(g: &mut Gen, f: &RingMorphism, m: &Submodule) -> Result<GeneratorImageHom> {
    let y = f.target().clone();
    let q = g.rank();
    let a = g.matrix(&y, q, m.rank());
    let images: Vec<ModuleElement> = m
        .generators()
        .iter()
        .map(|gi| a.apply(&gi.map(f)?))
        .collect::<Result<_>>()?;
    let mut ngens: Vec<ModuleElement> = images.iter().filter(|v| !v.is_zero()).cloned().collect();
    if g.coin(0.5) {
        ngens.push(g.element(&y, q));
    }
    let n = Submodule::new(&y, q, ngens)?;
    let rel = RelativeMap::new(f.clone())?;
    let germ = g.replay.germ(f);
    let (dn, cn) = (g.replay.module(m), g.replay.module(&n));
    g.replay.relative_hom(&germ, &dn, &cn, &images);
    GeneratorImageHom::new(rel, m.clone(), n, images)
}

/// `φ⊗(α)` computed in two stages through `Q[X-first-copy, Y-second-copy]`: first the second slot
/// is moved along the germ, then the first. `second_first` swaps the order.
fn two_stage(
    f: &RingMorphism,
    rel: &RelativeMap,
    alpha: &Polynomial,
    second_first: bool,
) -> Result<Polynomial> {
    let (sx, sy) = (rel.source(), rel.target());
    let (n, m) = (sx.nvars(), sy.nvars());
    let mut names: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
    names.extend((0..m).map(|j| format!("b{j}")));
    let mixed = PolyRing::new(names)?;
    // Y into the mixed ring through its y-slot, and through its x-slot into S_Y
    let y_in_mixed = RingMorphism::shifted_inclusion(f.target(), &mixed, n);
    let moved: Vec<Polynomial> = f
        .images()
        .iter()
        .map(|p| y_in_mixed.apply(p))
        .collect::<Result<_>>()?;
    let keep: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(&mixed, i)).collect();
    let stage1_images = if second_first {
        [keep, moved].concat()
    } else {
        [moved, keep].concat()
    };
    let stage1 = RingMorphism::new(sx.doubled(), &mixed, stage1_images)?;
    let slot = if second_first { sy.pi1() } else { sy.pi2() };
    let other = if second_first { sy.pi2() } else { sy.pi1() };
    let mut stage2_images: Vec<Polynomial> = f
        .images()
        .iter()
        .map(|p| slot.apply(p))
        .collect::<Result<_>>()?;
    stage2_images.extend(
        (0..m)
            .map(|j| other.apply(&Polynomial::var(f.target(), j)))
            .collect::<Result<Vec<_>>>()?,
    );
    let stage2 = RingMorphism::new(&mixed, sy.doubled(), stage2_images)?;
    stage2.apply(&stage1.apply(alpha)?)
}

fn l323_on(g: &mut Gen, f: &RingMorphism, t: &mut Trial) -> Result<()> {
    let rel = RelativeMap::new(f.clone())?;
    t.check(rel.respects_projections()?, || {
        "φ⊗ does not restrict to φ* along the projections".into()
    });
    let s = rel.source().doubled().clone();
    let n = rel.source().nvars();
    let mut alphas = vec![&Polynomial::var(&s, 0) * &Polynomial::var(&s, n)];
    alphas.push(g.poly(&s));
    for alpha in alphas {
        let direct = phi_tensor(&rel, &alpha)?;
        for second_first in [true, false] {
            let staged = two_stage(f, &rel, &alpha, second_first)?;
            t.check(direct == staged, || {
                format!("φ⊗({alpha}) = {direct}, staged substitution gives {staged}")
            });
        }
    }
    Ok(())
}

/// Moving one slot at a time along the germ agrees with `φ⊗`.
pub fn l323(g: &mut Gen) -> Result<Trial> {
    let mut t = Trial::pass();
    let c = cusp(g);
    l323_on(g, &c, &mut t)?;
    let f = random_germ(g, 3);
    l323_on(g, &f, &mut t)?;
    Ok(t)
}

fn t324_on(g: &mut Gen, f: &RingMorphism, t: &mut Trial) -> Result<()> {
    let x = f.source().clone();
    let p = g.rank();
    let m = g.submodule(&x, p);
    let phi = relative_hom(g, f, &m)?;
    let d = relative_double_hom(&phi)?;
    t.check(d.is_well_defined(), || {
        "relations among the generators of M_D are not respected".into()
    });
    for _ in 0..2 {
        let h = g.member_of(&m);
        let lhs = d.apply(&double_element(phi.relative().source(), &h)?)?;
        let rhs = double_element(phi.relative().target(), &phi.apply(&h)?)?;
        t.check(lhs == rhs, || {
            format!("φ_D(h_D) = {lhs} but (φ(h))_D = {rhs} for h = {h}")
        });
        t.check(d.codomain().contains(&lhs)?, || {
            format!("{lhs} is not in N_D")
        });
    }
    Ok(())
}

/// `φ_D(h_D) = (φ(h))_D` for doubles relative to the cusp and to a random monomial germ.
pub fn t324(g: &mut Gen) -> Result<Trial> {
    let mut t = Trial::pass();
    let c = cusp(g);
    t324_on(g, &c, &mut t)?;
    let f = random_germ(g, 3);
    t324_on(g, &f, &mut t)?;
    Ok(t)
}

/// `(φ'∘φ)_D = φ'_D∘φ_D` along composed germs.
pub fn p325(g: &mut Gen) -> Result<Trial> {
    let f1 = if g.coin(0.3) {
        cusp(g)
    } else {
        random_germ(g, 2)
    };
    let z = target_ring(g);
    let f2 = g.monomial_germ(f1.target(), &z, 2);
    let x = f1.source().clone();
    let p = g.rank();
    let m = g.submodule(&x, p);
    let phi = relative_hom(g, &f1, &m)?;
    let psi = relative_hom(g, &f2, phi.codomain())?;
    let comp = phi.then(&psi)?;
    let (d1, d2, dc) = (
        relative_double_hom(&phi)?,
        relative_double_hom(&psi)?,
        relative_double_hom(&comp)?,
    );
    let mut t = Trial::pass();
    for (gen, (a1, ac)) in d1
        .domain()
        .value()
        .generators()
        .iter()
        .zip(d1.assignments().iter().zip(dc.assignments()))
    {
        let two = d2.apply(a1)?;
        t.check(&two == ac, || {
            format!("generator {gen}: composite double gives {ac}, composed doubles give {two}")
        });
    }
    let h = g.member_of(&m);
    let hd = double_element(phi.relative().source(), &h)?;
    let (lhs, rhs) = (dc.apply(&hd)?, d2.apply(&d1.apply(&hd)?)?);
    t.check(lhs == rhs, || format!("on ({h})_D: {lhs} versus {rhs}"));
    let direct = double_element(comp.relative().target(), &comp.apply(&h)?)?;
    t.check(lhs == direct, || {
        format!("on ({h})_D: {lhs} versus ((φ'∘φ)(h))_D = {direct}")
    });
    Ok(t)
}
