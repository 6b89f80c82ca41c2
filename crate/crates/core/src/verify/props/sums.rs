use super::ctx;
use crate::double::{direct_sum_iso, direct_sum_iso_many, double_element};
use crate::module::{Matrix, Submodule};
use crate::verify::{Gen, Trial};
use crate::Result;

/// `η((h, g)_D) = (h_D, g_D)`, and `η`, `δ` are mutually inverse on generators.
pub fn t321(g: &mut Gen) -> Result<Trial> {
    let r = g.ring();
    let (p, q) = (g.rank(), g.rank());
    let m = g.submodule(&r, p);
    let n = if g.coin(0.2) {
        Submodule::zero(&r, q)
    } else {
        g.submodule(&r, q)
    };
    let c = ctx(&r);
    let iso = direct_sum_iso(&c, &m, &n)?;
    let mut t = Trial::pass();
    t.check(iso.check()?, || {
        "η and δ are not inverse on generators".into()
    });
    let (h, k) = (g.member_of(&m), g.member_of(&n));
    let lhs = iso.eta().apply(&double_element(&c, &h.concat(&k))?)?;
    let rhs = double_element(&c, &h)?.concat(&double_element(&c, &k)?);
    t.check(lhs == rhs, || {
        format!("η((h, g)_D) = {lhs}, expected {rhs}")
    });
    t.check(
        iso.delta().apply(&rhs)? == double_element(&c, &h.concat(&k))?,
        || "δ(h_D, g_D) differs from (h, g)_D".into(),
    );
    Ok(t)
}

/// Iterated pairwise isomorphisms agree with the direct three-fold permutation.
pub fn c322(g: &mut Gen) -> Result<Trial> {
    let r = g.ring();
    let ranks = [g.rank(), g.rank(), g.rank()];
    let ms: Vec<Submodule> = ranks.iter().map(|&p| g.submodule(&r, p)).collect();
    let c = ctx(&r);
    let s = c.doubled();
    let direct = direct_sum_iso_many(&c, &ms)?;
    let m12 = ms[0].direct_sum(&ms[1])?;
    let outer = direct_sum_iso(&c, &m12, &ms[2])?;
    let inner = direct_sum_iso(&c, &ms[0], &ms[1])?;
    let p3 = 2 * ranks[2];
    let step = Matrix::block_diag(inner.eta().matrix(), &Matrix::identity(s, p3))?;
    let iterated = step.mul(outer.eta().matrix())?;
    let mut t = Trial::pass();
    t.check(&iterated == direct.eta().matrix(), || {
        "iterated η differs from the three-fold permutation".into()
    });
    t.check(direct.check()?, || {
        "three-fold η and δ are not inverse on generators".into()
    });
    let hs: Vec<_> = ms.iter().map(|m| g.member_of(m)).collect();
    let whole = hs[0].concat(&hs[1]).concat(&hs[2]);
    let lhs = direct.eta().apply(&double_element(&c, &whole)?)?;
    let rhs = double_element(&c, &hs[0])?
        .concat(&double_element(&c, &hs[1])?)
        .concat(&double_element(&c, &hs[2])?);
    t.check(lhs == rhs, || {
        format!("η((h1, h2, h3)_D) = {lhs}, expected {rhs}")
    });
    Ok(t)
}
