use std::sync::Arc;

use super::ctx;
use crate::complex::{
    contractibility_transfer, double_chain_map, double_degree_one, exactness_propagation_check,
    is_homotopy, tilde, ChainComplex, ChainMap, DegreeOneMap, HomotopyEquivalence,
};
use crate::module::{Matrix, Submodule};
use crate::poly::{PolyRing, Polynomial};
use crate::verify::{Gen, Trial};
use crate::Result;

/// Assembles a block matrix; `parts` lists `(block row, block column, matrix)`.
fn blocks(
    ring: &Arc<PolyRing>,
    rows: &[usize],
    cols: &[usize],
    parts: &[(usize, usize, &Matrix)],
) -> Matrix {
    let mut out = Matrix::zero(ring, rows.iter().sum(), cols.iter().sum());
    for &(bi, bj, m) in parts {
        let r0: usize = rows[..bi].iter().sum();
        let c0: usize = cols[..bj].iter().sum();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.set(r0 + i, c0 + j, m.get(i, j).clone());
            }
        }
    }
    out
}

fn nonzero_poly(g: &mut Gen, r: &Arc<PolyRing>) -> Polynomial {
    loop {
        let p = g.poly(r);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A contractible complex in degrees `0..=k`, built from `k` two-term pieces `R^a --U--> R^a` with `U`
/// unimodular and then conjugated degreewise by unimodular matrices; returned with its contraction.
pub(crate) fn contractible(
    g: &mut Gen,
    r: &Arc<PolyRing>,
    k: usize,
) -> Result<(ChainComplex, DegreeOneMap)> {
    let a: Vec<usize> = (0..=k + 1)
        .map(|j| if j == 0 || j > k { 0 } else { g.range(1, 2) })
        .collect();
    // C_i = top of piece i ⊕ bottom of piece i + 1
    let dims = |i: usize| [a[i], a[i + 1]];
    let mut us = vec![(Matrix::zero(r, 0, 0), Matrix::zero(r, 0, 0))];
    for j in 1..=k {
        us.push(g.unimodular(r, a[j]));
    }
    let ws: Vec<(Matrix, Matrix)> = (0..=k).map(|i| g.unimodular(r, a[i] + a[i + 1])).collect();
    let mut diffs = Vec::new();
    for i in 1..=k {
        let d = blocks(r, &dims(i - 1), &dims(i), &[(1, 0, &us[i].0)]);
        diffs.push(ws[i - 1].0.mul(&d)?.mul(&ws[i].1)?);
    }
    let mut mus = Vec::new();
    for i in 0..k {
        let m = blocks(r, &dims(i + 1), &dims(i), &[(0, 1, &us[i + 1].1)]);
        mus.push(ws[i + 1].0.mul(&m)?.mul(&ws[i].1)?);
    }
    let modules = (0..=k)
        .map(|i| Submodule::free(r, a[i] + a[i + 1]))
        .collect();
    let c = ChainComplex::new(r, 0, modules, diffs)?;
    let mu = DegreeOneMap::new(&c, &c, 0, mus)?;
    Ok((c, mu))
}

fn generator_matrix(m: &Submodule) -> Matrix {
    Matrix::from_columns(m.ring(), m.rank(), m.generators())
}

/// A random bounded complex of length at most 4.
pub(crate) fn random_complex(g: &mut Gen) -> Result<ChainComplex> {
    let r = g.ring();
    let c = match g.range(0, 4) {
        0 => {
            let (f1, f2) = (nonzero_poly(g, &r), nonzero_poly(g, &r));
            let d2 = Matrix::from_rows(&r, 2, 1, vec![vec![-&f2], vec![f1.clone()]])?;
            let d1 = Matrix::from_rows(&r, 1, 2, vec![vec![f1, f2]])?;
            ChainComplex::new(
                &r,
                0,
                vec![
                    Submodule::free(&r, 1),
                    Submodule::free(&r, 2),
                    Submodule::free(&r, 1),
                ],
                vec![d1, d2],
            )?
        }
        1 => {
            let p = g.rank();
            let m = g.submodule(&r, p);
            let s = m.generators().len();
            let gm = generator_matrix(&m);
            let syz = m.syzygies();
            let bottom = if g.coin(0.5) {
                m.clone()
            } else {
                Submodule::free(&r, p)
            };
            if syz.is_zero() {
                ChainComplex::new(&r, 0, vec![bottom, Submodule::free(&r, s)], vec![gm])?
            } else {
                let mut k = generator_matrix(&syz);
                if g.coin(0.5) {
                    let t = k.cols();
                    k = k.mul(&g.matrix_with(&r, t, t, 0))?;
                }
                let t = k.cols();
                ChainComplex::new(
                    &r,
                    0,
                    vec![bottom, Submodule::free(&r, s), Submodule::free(&r, t)],
                    vec![gm, k],
                )?
            }
        }
        2 => {
            let (a, b) = (g.rank(), g.rank());
            let d = g.matrix(&r, b, a);
            ChainComplex::new(
                &r,
                0,
                vec![Submodule::free(&r, b), Submodule::free(&r, a)],
                vec![d],
            )?
        }
        3 => {
            let len = g.range(2, 3);
            let modules: Vec<Submodule> = (0..len)
                .map(|_| {
                    let p = g.rank();
                    g.submodule(&r, p)
                })
                .collect();
            let diffs = (1..len)
                .map(|i| Matrix::zero(&r, modules[i - 1].rank(), modules[i].rank()))
                .collect();
            ChainComplex::new(&r, 0, modules, diffs)?
        }
        _ => {
            let k = g.range(1, 3);
            contractible(g, &r, k)?.0
        }
    };
    g.replay.complex(&c);
    Ok(c)
}

/// A random `μ : C -> D` of degree one, landing in the modules of `D`.
fn random_degree_one(g: &mut Gen, c: &ChainComplex, d: &ChainComplex) -> Result<DegreeOneMap> {
    let r = c.ring().clone();
    let lo = c.low();
    let mut ms = Vec::new();
    for i in c.degrees() {
        let target = d.module(i + 1);
        let p = c.module(i).rank();
        let gens = generator_matrix(&target);
        let coeffs = g.matrix_with(&r, gens.cols(), p, 1);
        ms.push(gens.mul(&coeffs)?);
    }
    DegreeOneMap::new(c, d, lo, ms)
}

/// `a·id + μ̃` for a random degree-one `μ`.
fn random_chain_map(g: &mut Gen, c: &ChainComplex) -> Result<ChainMap> {
    let a = g.range(0, 4) as i64 - 2;
    let r = c.ring();
    let scaled = c.degrees().map(|i| {
        let n = c.module(i).rank();
        let mut m = Matrix::zero(r, n, n);
        for k in 0..n {
            m.set(k, k, Polynomial::from_int(r, a));
        }
        m
    });
    let base = ChainMap::new(c, c, c.low(), scaled.collect())?;
    let mu = random_degree_one(g, c, c)?;
    base.add(&tilde(&mu)?)
}

/// Doubling keeps the complex law.
pub fn p36(g: &mut Gen) -> Result<Trial> {
    let c = random_complex(g)?;
    let mut t = Trial::pass();
    t.check(c.is_complex(), || {
        "generated complex violates the complex law".into()
    });
    t.check(c.double(&ctx(c.ring()))?.is_complex(), || {
        "doubled complex violates the complex law".into()
    });
    Ok(t)
}

/// Exactness of `C_D` forces exactness of `C`; the pair of truth values is tabulated.
pub fn p38(g: &mut Gen) -> Result<Trial> {
    let c = random_complex(g)?;
    let rep = exactness_propagation_check(&ctx(c.ring()), &c)?;
    let mut t = Trial::pass();
    t.observe(format!(
        "C_exact={} C_D_exact={}",
        rep.base_exact(),
        rep.doubled_exact()
    ));
    t.check(rep.implication_holds(), || {
        format!("C_D exact but C is not\n{rep}")
    });
    Ok(t)
}

/// Doubles of chain maps are chain maps.
pub fn p310(g: &mut Gen) -> Result<Trial> {
    let c = random_complex(g)?;
    let alpha = random_chain_map(g, &c)?;
    let mut t = Trial::pass();
    t.check(alpha.commutes()?, || {
        "generated chain map does not commute".into()
    });
    t.check(
        double_chain_map(&ctx(c.ring()), &alpha)?.commutes()?,
        || "doubled chain map does not commute".into(),
    );
    Ok(t)
}

/// `(β∘α)_D = β_D∘α_D`.
pub fn c311(g: &mut Gen) -> Result<Trial> {
    let c = random_complex(g)?;
    let cx = ctx(c.ring());
    let (alpha, beta) = (random_chain_map(g, &c)?, random_chain_map(g, &c)?);
    let whole = double_chain_map(&cx, &beta.compose(&alpha)?)?;
    let parts = double_chain_map(&cx, &beta)?.compose(&double_chain_map(&cx, &alpha)?)?;
    let mut t = Trial::pass();
    t.check(whole.eq_on_domain(&parts)?, || {
        "double of the composite differs from the composite of doubles".into()
    });
    Ok(t)
}

/// `(μ_D)~ = (μ~)_D` as matrices.
pub fn l312(g: &mut Gen) -> Result<Trial> {
    let c = random_complex(g)?;
    let cx = ctx(c.ring());
    let mu = random_degree_one(g, &c, &c)?;
    let lhs = tilde(&double_degree_one(&cx, &mu)?)?;
    let rhs = double_chain_map(&cx, &tilde(&mu)?)?;
    let mut t = Trial::pass();
    for i in c.low() - 1..=c.high() + 1 {
        let (a, b) = (lhs.at(i), rhs.at(i));
        t.check(a.matrix() == b.matrix(), || {
            format!("degree {i}: {} versus {}", a.matrix(), b.matrix())
        });
    }
    Ok(t)
}

/// `μ` is a homotopy `α ≃ β` iff `μ_D` is a homotopy `α_D ≃ β_D`.
pub fn p313(g: &mut Gen) -> Result<Trial> {
    let c = random_complex(g)?;
    let cx = ctx(c.ring());
    let alpha = random_chain_map(g, &c)?;
    let mu = random_degree_one(g, &c, &c)?;
    let beta = if g.coin(0.5) {
        alpha.sub(&tilde(&mu)?)?
    } else {
        random_chain_map(g, &c)?
    };
    let base = is_homotopy(&alpha, &beta, &mu)?;
    let dbl = is_homotopy(
        &double_chain_map(&cx, &alpha)?,
        &double_chain_map(&cx, &beta)?,
        &double_degree_one(&cx, &mu)?,
    )?;
    let mut t = Trial::pass();
    t.observe(if base { "homotopic" } else { "not-homotopic" });
    t.check(base == dbl, || {
        format!("homotopy: base {base}, doubled {dbl}")
    });
    Ok(t)
}

/// A homotopy equivalence `C ≃ C ⊕ K` with `K` contractible doubles to one.
pub fn c314(g: &mut Gen) -> Result<Trial> {
    let c = random_complex(g)?;
    let r = c.ring().clone();
    let k = (c.high() - c.low()) as usize;
    let (kc, kmu) = contractible(g, &r, k.max(1))?;
    let c = if k == 0 {
        // pad a one-term complex so both pieces share their support
        ChainComplex::new(
            &r,
            0,
            vec![c.module(0), Submodule::zero(&r, 0)],
            vec![Matrix::zero(&r, c.module(0).rank(), 0)],
        )?
    } else {
        c
    };
    let sum = c.direct_sum(&kc)?;
    let lo = c.low();
    let (mut incl, mut proj, mut nu) = (Vec::new(), Vec::new(), Vec::new());
    for i in c.degrees() {
        let (a, b) = (c.module(i).rank(), kc.module(i).rank());
        let id = Matrix::identity(&r, a);
        incl.push(blocks(&r, &[a, b], &[a], &[(0, 0, &id)]));
        proj.push(blocks(&r, &[a], &[a, b], &[(0, 0, &id)]));
        let (a1, b1) = (c.module(i + 1).rank(), kc.module(i + 1).rank());
        let m = kmu.at(i).matrix().clone();
        let neg = Matrix::zero(&r, m.rows(), m.cols()).sub(&m)?;
        nu.push(blocks(&r, &[a1, b1], &[a, b], &[(1, 1, &neg)]));
    }
    let he = HomotopyEquivalence {
        alpha: ChainMap::new(&c, &sum, lo, incl)?,
        beta: ChainMap::new(&sum, &c, lo, proj)?,
        mu: DegreeOneMap::zero(&c, &c)?,
        nu: DegreeOneMap::new(&sum, &sum, lo, nu)?,
    };
    let mut t = Trial::pass();
    t.check(he.check()?, || {
        "generated data is not a homotopy equivalence".into()
    });
    t.check(he.double(&ctx(&r))?.check()?, || {
        "doubled data is not a homotopy equivalence".into()
    });
    Ok(t)
}

/// Contractions double to contractions; a random complex without contraction is reported, not failed.
pub fn c315(g: &mut Gen) -> Result<Trial> {
    let r = g.ring();
    let k = g.range(1, 3);
    let (c, mu) = contractible(g, &r, k)?;
    g.replay.complex(&c);
    let cx = ctx(&r);
    let rep = contractibility_transfer(&cx, &c, &mu)?;
    let mut t = Trial::pass();
    t.check(rep.precondition, || {
        "generated contraction is not a contraction".into()
    });
    t.check(rep.transferred == Some(true), || {
        "doubled contraction fails".into()
    });
    let other = random_complex(g)?;
    let zero = DegreeOneMap::zero(&other, &other)?;
    let rep = contractibility_transfer(&ctx(other.ring()), &other, &zero)?;
    t.observe(format!(
        "zero-map contraction precondition={}",
        rep.precondition
    ));
    t.check(!rep.precondition || rep.transferred == Some(true), || {
        "zero contraction transfers badly".into()
    });
    Ok(t)
}
