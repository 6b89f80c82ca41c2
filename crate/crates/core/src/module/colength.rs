use std::fmt;

use super::groebner::groebner_basis;
use super::vector::{Order, Term, Vector};
use super::{ModuleElement, Submodule};
use crate::poly::Monomial;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Colength {
    Finite(u64),
    Infinite,
}

impl Colength {
    pub fn is_finite(self) -> bool {
        matches!(self, Colength::Finite(_))
    }
}

impl fmt::Display for Colength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colength::Finite(n) => write!(f, "{n}"),
            Colength::Infinite => f.write_str("INFINITE"),
        }
    }
}

/// `dim_Q(N / M)` for `M ⊆ N`.
///
/// `N / M` is presented as `R^t / K` where `t` counts the generators of `N` and `K` holds
/// their syzygies together with the cofactors of every generator of `M`. The dimension is
/// the number of standard monomials of a Gröbner basis of `K`; it is infinite exactly when
/// some component misses a pure-power leading term for some variable.
pub fn colength(m: &Submodule, n: &Submodule) -> Result<Colength> {
    if !n.contains_module(m)? {
        return Err(Error::NotContained("colength needs M ⊆ N".into()));
    }
    let ring = n.ring();
    let t = n.generators().len();
    let mut rels: Vec<Vector> = n
        .syzygies()
        .generators()
        .iter()
        .map(|v| Vector::from_element(v, Order::Degree { block: t }))
        .collect();
    for g in m.generators() {
        let c = n.lift(g)?.expect("containment checked");
        rels.push(Vector::from_element(
            &ModuleElement::from_parts(ring, c),
            Order::Degree { block: t },
        ));
    }
    let gb = groebner_basis(rels);
    let leads: Vec<Term> = gb.iter().map(|v| v.lead_term().clone()).collect();
    Ok(count_standard_monomials(ring.nvars(), t, &leads))
}

pub(crate) fn count_standard_monomials(nvars: usize, rank: usize, leads: &[Term]) -> Colength {
    let mut total = 0u64;
    for comp in 0..rank {
        let monos: Vec<&Monomial> = leads
            .iter()
            .filter(|t| t.comp == comp)
            .map(|t| &t.mono)
            .collect();
        if monos.iter().any(|m| m.is_one()) {
            continue;
        }
        let mut bounds = vec![u32::MAX; nvars];
        for m in &monos {
            if let Some((i, e)) = m.pure_power() {
                bounds[i] = bounds[i].min(e);
            }
        }
        if bounds.iter().any(|&b| b == u32::MAX) {
            return Colength::Infinite;
        }
        total += count_in_box(&bounds, &monos);
    }
    Colength::Finite(total)
}

fn count_in_box(bounds: &[u32], leads: &[&Monomial]) -> u64 {
    let n = bounds.len();
    let mut exps = vec![0u32; n];
    let mut count = 0;
    loop {
        let m = Monomial::from_exponents(exps.clone());
        if !leads.iter().any(|l| l.divides(&m)) {
            count += 1;
        }
        // odometer over the box
        let mut k = 0;
        loop {
            if k == n {
                return count;
            }
            exps[k] += 1;
            if exps[k] < bounds[k] {
                break;
            }
            exps[k] = 0;
            k += 1;
        }
    }
}
