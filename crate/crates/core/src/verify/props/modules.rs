use super::ctx;
use crate::double::{
    double_element, double_module, double_quotient_element, double_quotient_module,
};
use crate::module::{colength, generic_rank, ModuleElement, PresentedQuotient, Submodule};
use crate::poly::Polynomial;
use crate::verify::{Gen, Trial};
use crate::Result;

/// `h = g` iff `h_D = g_D`.
pub fn p31_a(g: &mut Gen) -> Result<Trial> {
    let r = g.ring();
    let p = g.rank();
    let h = g.element(&r, p);
    let other = if g.coin(0.5) {
        let w = g.element(&r, p);
        h.add(&w).sub(&w)
    } else {
        let mut comps = h.components().to_vec();
        let k = g.range(0, p - 1);
        comps[k] = &comps[k] + &g.poly(&r);
        ModuleElement::new(&r, comps)?
    };
    let c = ctx(&r);
    let same = h == other;
    let same_d = double_element(&c, &h)? == double_element(&c, &other)?;
    let mut t = Trial::pass();
    t.observe(if same { "equal" } else { "distinct" });
    t.check(same == same_d, || {
        format!("h = {h}, g = {other}: base equality {same}, doubled equality {same_d}")
    });
    Ok(t)
}

/// `h ∈ M` iff `h_D ∈ M_D`.
pub fn p31_b(g: &mut Gen) -> Result<Trial> {
    let r = g.ring();
    let p = g.rank();
    let m = g.submodule(&r, p);
    let h = if g.coin(0.5) {
        g.member_of(&m)
    } else {
        g.element(&r, p)
    };
    g.replay.comment(&format!("element {h}"));
    let c = ctx(&r);
    let md = double_module(&c, &m)?;
    let inside = m.contains(&h)?;
    let inside_d = md.value().contains(&double_element(&c, &h)?)?;
    let mut t = Trial::pass();
    t.observe(if inside { "member" } else { "non-member" });
    t.check(inside == inside_d, || {
        format!("{h} in M: {inside}, doubled: {inside_d}")
    });
    Ok(t)
}

/// A second module in the ambient of `m`: larger, smaller or unrelated.
fn companion(g: &mut Gen, m: &Submodule) -> Submodule {
    match g.range(0, 2) {
        0 => {
            let mut gens = m.generators().to_vec();
            gens.push(g.element(m.ring(), m.rank()));
            let n = Submodule::new(m.ring(), m.rank(), gens).expect("same ambient");
            g.replay.module(&n);
            n
        }
        1 => g.submodule_of(m),
        _ => g.submodule(m.ring(), m.rank()),
    }
}

/// `M ⊆ N` iff `M_D ⊆ N_D`.
pub fn p31_c(g: &mut Gen) -> Result<Trial> {
    let r = g.ring();
    let p = g.rank();
    let m = g.submodule(&r, p);
    let n = companion(g, &m);
    let c = ctx(&r);
    let (md, nd) = (double_module(&c, &m)?, double_module(&c, &n)?);
    let mut t = Trial::pass();
    for (a, b, ad, bd, label) in [(&m, &n, &md, &nd, "M in N"), (&n, &m, &nd, &md, "N in M")] {
        let base = b.contains_module(a)?;
        let dbl = bd.value().contains_module(ad.value())?;
        t.observe(format!("{label}={base}"));
        t.check(base == dbl, || {
            format!("{label}: base {base}, doubled {dbl}")
        });
    }
    Ok(t)
}

fn equality_pair(g: &mut Gen) -> (Submodule, Submodule) {
    let r = g.ring();
    let p = g.rank();
    let m = g.submodule(&r, p);
    let n = if g.coin(0.5) {
        g.regenerate(&m)
    } else {
        companion(g, &m)
    };
    (m, n)
}

/// `M = N` iff `M_D = N_D`.
pub fn p31_d(g: &mut Gen) -> Result<Trial> {
    let (m, n) = equality_pair(g);
    let c = ctx(m.ring());
    let base = m.module_eq(&n)?;
    let dbl = double_module(&c, &m)?
        .value()
        .module_eq(double_module(&c, &n)?.value())?;
    let mut t = Trial::pass();
    t.observe(if base { "equal" } else { "different" });
    t.check(base == dbl, || {
        format!("base equality {base}, doubled equality {dbl}")
    });
    Ok(t)
}

/// `M_D = N_D` implies `M = N`.
pub fn t316_objects(g: &mut Gen) -> Result<Trial> {
    let (m, n) = equality_pair(g);
    let c = ctx(m.ring());
    let dbl = double_module(&c, &m)?
        .value()
        .module_eq(double_module(&c, &n)?.value())?;
    let mut t = Trial::pass();
    if dbl {
        t.observe("doubles-equal");
        t.check(m.module_eq(&n)?, || {
            "equal doubles of different modules".into()
        });
    }
    Ok(t)
}

/// `h ↦ h_D` is additive and injective.
pub fn c32(g: &mut Gen) -> Result<Trial> {
    let r = g.ring();
    let p = g.rank();
    let h = g.element(&r, p);
    let k = if g.coin(0.3) {
        h.clone()
    } else {
        g.element(&r, p)
    };
    let c = ctx(&r);
    let (hd, kd) = (double_element(&c, &h)?, double_element(&c, &k)?);
    let mut t = Trial::pass();
    t.check(double_element(&c, &h.add(&k))? == hd.add(&kd), || {
        format!("(h + g)_D differs from h_D + g_D for h = {h}, g = {k}")
    });
    t.check(double_element(&c, &h.neg())? == hd.neg(), || {
        format!("(-h)_D differs from -h_D for h = {h}")
    });
    t.check(hd != kd || h == k, || {
        format!("h_D = g_D for h = {h} != g = {k}")
    });
    Ok(t)
}

/// The closed-form generators span the same module as `{(m g_i)_D : deg m ≤ 5}`.
pub fn double_gen(g: &mut Gen) -> Result<Trial> {
    let r = g.ring();
    let p = g.rank();
    let m = g.submodule(&r, p);
    let c = ctx(&r);
    let closed = double_module(&c, &m)?.into_value();
    let n = r.nvars();
    let mut monomials = vec![vec![0u32; n]];
    let mut frontier = monomials.clone();
    for _ in 0..5 {
        let mut next = Vec::new();
        for e in &frontier {
            for i in 0..n {
                let mut f = e.clone();
                f[i] += 1;
                if !next.contains(&f) {
                    next.push(f);
                }
            }
        }
        monomials.extend(next.iter().cloned());
        frontier = next;
    }
    // grow a generating list of the brute-force span, keeping only new elements
    let s = c.doubled();
    let mut span = Submodule::zero(s, 2 * p);
    let mut t = Trial::pass();
    for e in &monomials {
        let mono = Polynomial::term(
            &r,
            crate::Monomial::from_exponents(e.clone()),
            crate::poly::rat(1),
        );
        for gi in m.generators() {
            let hd = double_element(&c, &gi.scale(&mono))?;
            t.check(closed.contains(&hd)?, || {
                format!("brute-force element {hd} is outside the closed form")
            });
            if !span.contains(&hd)? {
                let mut gens = span.generators().to_vec();
                gens.push(hd);
                span = Submodule::new(s, 2 * p, gens)?;
            }
        }
    }
    for gen in closed.generators() {
        t.check(span.contains(gen)?, || {
            format!("closed-form generator {gen} is outside the brute-force span")
        });
    }
    Ok(t)
}

/// `generic_rank(M_D)` is even.
pub fn rank_even(g: &mut Gen) -> Result<Trial> {
    let r = g.ring();
    let p = g.rank();
    let m = g.submodule(&r, p);
    let rd = generic_rank(double_module(&ctx(&r), &m)?.value());
    let mut t = Trial::pass();
    t.observe(format!(
        "rank_D={}*rank",
        if rd == 2 * generic_rank(&m) {
            "2"
        } else {
            "other"
        }
    ));
    t.check(rd.is_multiple_of(2), || {
        format!("doubled module has odd generic rank {rd}")
    });
    Ok(t)
}

/// `(M/W)_D = M_D / W_D` with `W_D ⊆ M_D`.
pub fn q4_module(g: &mut Gen) -> Result<Trial> {
    let r = g.ring();
    let p = g.rank();
    let m = g.submodule(&r, p);
    let w = g.submodule_of(&m);
    let c = ctx(&r);
    let qd = double_quotient_module(&c, &PresentedQuotient::new(m.clone(), w.clone())?)?;
    let mut t = Trial::pass();
    t.check(qd.numerator().contains_module(qd.denominator())?, || {
        "W_D is not inside M_D".into()
    });
    t.check(
        qd.numerator().module_eq(double_module(&c, &m)?.value())?,
        || "numerator differs from M_D".into(),
    );
    t.check(
        qd.denominator().module_eq(double_module(&c, &w)?.value())?,
        || "denominator differs from W_D".into(),
    );
    let h = g.member_of(&m);
    let wv = g.member_of(&w);
    t.check(qd.numerator().contains(&double_element(&c, &h)?)?, || {
        format!("({h})_D is not in the numerator")
    });
    t.check(
        qd.denominator().contains(&double_element(&c, &wv)?)?,
        || format!("({wv})_D is not in the denominator"),
    );
    t.check(qd.is_zero()? == m.module_eq(&w)?, || {
        "zero quotient is not detected on both levels".into()
    });
    Ok(t)
}

/// `(h + W)_D` does not depend on the representative, and `h - g ∈ W` iff `h_D - g_D ∈ W_D`.
pub fn q4_coset(g: &mut Gen) -> Result<Trial> {
    let r = g.ring();
    let p = g.rank();
    let m = g.submodule(&r, p);
    let w = g.submodule_of(&m);
    let c = ctx(&r);
    let h = g.member_of(&m);
    let shifted = h.add(&g.member_of(&w));
    let other = g.member_of(&m);
    let a = double_quotient_element(&c, &h, &w)?;
    let b = double_quotient_element(&c, &shifted, &w)?;
    let o = double_quotient_element(&c, &other, &w)?;
    let mut t = Trial::pass();
    t.check(a.same_coset(&b)?, || {
        format!("{h} and {shifted} give different doubled cosets")
    });
    let base = w.contains(&h.sub(&other))?;
    let dbl = a.same_coset(&o)?;
    t.observe(if base {
        "same-coset"
    } else {
        "different-coset"
    });
    t.check(base == dbl, || {
        format!("{h} vs {other}: base {base}, doubled {dbl}")
    });
    Ok(t)
}

/// Whenever `M_D` has finite colength in `N_D`, `M` has finite colength in `N`, and it is no larger.
pub fn p3113_b(g: &mut Gen) -> Result<Trial> {
    let mut t = Trial::pass();
    // a pair with finite doubled colength: vector spaces, or equal modules
    let (m, n) = if g.coin(0.5) {
        let r = g.ring_with(0);
        let p = g.rank();
        let n = g.submodule(&r, p);
        (g.submodule_of(&n), n)
    } else {
        let r = g.ring();
        let p = g.rank();
        let n = g.submodule(&r, p);
        (g.regenerate(&n), n)
    };
    let c = ctx(m.ring());
    let dbl = colength(
        double_module(&c, &m)?.value(),
        double_module(&c, &n)?.value(),
    )?;
    t.check(dbl.is_finite(), || {
        format!("expected a finite doubled colength, got {dbl}")
    });
    check_colengths(&mut t, &m, &n, dbl)?;
    // a proper inclusion over a positive-dimensional base, logged
    let r = g.ring();
    let p = g.rank();
    let n = g.submodule(&r, p);
    let m = g.submodule_of(&n);
    let c = ctx(&r);
    let dbl = colength(
        double_module(&c, &m)?.value(),
        double_module(&c, &n)?.value(),
    )?;
    let label = if m.module_eq(&n)? {
        "equal-pair"
    } else {
        "proper-pair"
    };
    t.observe(format!(
        "{label} doubled colength {}",
        if dbl.is_finite() {
            "finite"
        } else {
            "infinite"
        }
    ));
    check_colengths(&mut t, &m, &n, dbl)?;
    Ok(t)
}

fn check_colengths(
    t: &mut Trial,
    m: &Submodule,
    n: &Submodule,
    dbl: crate::Colength,
) -> Result<()> {
    if let crate::Colength::Finite(d) = dbl {
        let base = colength(m, n)?;
        t.observe("finite-instance");
        t.check(matches!(base, crate::Colength::Finite(b) if b <= d), || {
            format!("colength {base} exceeds doubled colength {d}")
        });
    }
    Ok(())
}
