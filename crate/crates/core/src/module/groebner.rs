//! Buchberger's algorithm for submodules of free modules.
//!
//! Pairs are only formed between vectors whose leading terms share a component. Useless
//! pairs are discarded with the Gebauer–Möller update; the coprime-leading-monomial
//! criterion is applied only when both vectors live in a single component, since it is
//! false for general module vectors. The result is the unique reduced basis.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::vector::{Term, Vector};
use crate::poly::Rational;

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Term,
}

struct Builder {
    polys: Vec<Vector>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

fn find_reducer<'a, I>(t: &Term, basis: I) -> Option<&'a Vector>
where
    I: IntoIterator<Item = &'a Vector>,
{
    basis.into_iter().find(|g| g.lead_term().divides(t))
}

/// Cofactors `a, b` with `a·c - b·d = 0` and `a > 0` as small as possible.
fn cancel(c: &BigInt, d: &BigInt) -> (BigInt, BigInt) {
    let g = c.gcd(d);
    let (a, b) = (d / &g, c / &g);
    if a < BigInt::from(0) {
        (-a, -b)
    } else {
        (a, b)
    }
}

/// Full reduction of `f` by `basis` (every term is reduced, not only the leading one).
///
/// Returns `(r, k)` with `r ≡ k·f` modulo the basis.
pub(crate) fn reduce_scaled<'a, I>(f: Vector, basis: I) -> (Vector, Rational)
where
    I: IntoIterator<Item = &'a Vector> + Clone,
{
    let mut f = f;
    let mut k = BigInt::one();
    let mut rem: Vec<(Term, BigInt)> = Vec::new();
    while let Some((t, c)) = f.lead().cloned() {
        match find_reducer(&t, basis.clone()) {
            Some(g) => {
                let (gt, gc) = g.lead().unwrap();
                let m = t.mono.div(&gt.mono).expect("divisibility checked");
                let (a, b) = cancel(&c, gc);
                f = f.sub_mul(&a, &b, &m, g);
                if !a.is_one() {
                    for (_, r) in &mut rem {
                        *r *= &a;
                    }
                    k *= a;
                }
            }
            None => rem.push(f.terms.pop().unwrap()),
        }
    }
    rem.reverse();
    (Vector { terms: rem }, Rational::from_integer(k))
}

/// Full reduction up to a nonzero scalar.
pub(crate) fn reduce<'a, I>(f: Vector, basis: I) -> Vector
where
    I: IntoIterator<Item = &'a Vector> + Clone,
{
    reduce_scaled(f, basis).0
}

impl Builder {
    fn reducers(&self) -> impl Iterator<Item = &Vector> + Clone {
        self.active.iter().map(move |&k| &self.polys[k])
    }

    fn coprime_criterion(&self, a: usize, b: usize) -> bool {
        let (pa, pb) = (&self.polys[a], &self.polys[b]);
        pa.is_single_component()
            && pb.is_single_component()
            && pa.lead_term().mono.is_coprime(&pb.lead_term().mono)
    }

    /// Gebauer–Möller installation of a new basis element.
    fn insert(&mut self, h: Vector) {
        let hi = self.polys.len();
        let ht = h.lead_term().clone();
        self.polys.push(h);

        let mut cands: Vec<Pair> = self
            .active
            .iter()
            .filter(|&&g| self.polys[g].lead_term().comp == ht.comp)
            .map(|&g| Pair {
                i: g,
                j: hi,
                lcm: ht.lcm(self.polys[g].lead_term()),
            })
            .collect();

        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = cands.pop() {
            let dominated = |q: &Pair| q.lcm.mono.divides(&p.lcm.mono);
            if self.coprime_criterion(p.i, hi)
                || (!cands.iter().any(dominated) && !kept.iter().any(dominated))
            {
                kept.push(p);
            }
        }
        kept.retain(|p| !self.coprime_criterion(p.i, hi));

        let polys = &self.polys;
        self.pairs.retain(|p| {
            if p.lcm.comp != ht.comp || !ht.mono.divides(&p.lcm.mono) {
                return true;
            }
            ht.lcm(polys[p.i].lead_term()) == p.lcm || ht.lcm(polys[p.j].lead_term()) == p.lcm
        });
        self.pairs.extend(kept);
        // pop() yields the pair with the smallest lcm (normal selection strategy)
        self.pairs
            .sort_by(|a, b| b.lcm.cmp(&a.lcm).then((b.i, b.j).cmp(&(a.i, a.j))));

        self.active.retain(|&g| !ht.divides(polys[g].lead_term()));
        self.active.push(hi);
    }

    fn spoly(&self, p: &Pair) -> Vector {
        let (a, b) = (&self.polys[p.i], &self.polys[p.j]);
        let (at, ac) = a.lead().unwrap();
        let (bt, bc) = b.lead().unwrap();
        let ma = p.lcm.mono.div(&at.mono).unwrap();
        let mb = p.lcm.mono.div(&bt.mono).unwrap();
        let (x, y) = cancel(ac, bc);
        let lhs = Vector::default().sub_mul(&BigInt::one(), &-x, &ma, a);
        lhs.sub_mul(&BigInt::one(), &y, &mb, b)
    }
}

/// Reduced Gröbner basis: monic, inter-reduced, sorted by increasing leading term.
pub(crate) fn groebner_basis(input: Vec<Vector>) -> Vec<Vector> {
    basis_below(input, usize::MAX)
}

/// Like [`groebner_basis`], but new elements whose leading term lies in a component
/// `>= block` are discarded. For tagged inputs `(g_i, e_i)` this keeps the cofactor
/// bookkeeping for `M` without computing the syzygy module.
pub(crate) fn basis_below(input: Vec<Vector>, block: usize) -> Vec<Vector> {
    let mut input: Vec<Vector> = input.into_iter().filter(|v| !v.is_zero()).collect();
    input.sort_by(|a, b| {
        a.lead_term()
            .cmp(b.lead_term())
            .then(a.terms.len().cmp(&b.terms.len()))
    });
    let mut b = Builder {
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for v in input {
        let mut h = reduce(v, b.reducers());
        if !h.is_zero() && h.lead_term().comp < block {
            h.make_primitive();
            b.insert(h);
        }
    }
    while let Some(p) = b.pairs.pop() {
        let s = b.spoly(&p);
        let mut h = reduce(s, b.reducers());
        if !h.is_zero() && h.lead_term().comp < block {
            h.make_primitive();
            b.insert(h);
        }
    }
    interreduce(b.active.iter().map(|&k| b.polys[k].clone()).collect())
}

fn interreduce(mut basis: Vec<Vector>) -> Vec<Vector> {
    basis.sort_by(|a, b| a.lead_term().cmp(b.lead_term()));
    basis.dedup_by(|a, b| a.lead_term() == b.lead_term());
    let minimal: Vec<Vector> = basis
        .iter()
        .enumerate()
        .filter(|(i, g)| {
            !basis
                .iter()
                .enumerate()
                .any(|(j, h)| j != *i && h.lead_term().divides(g.lead_term()))
        })
        .map(|(_, g)| g.clone())
        .collect();
    let mut out = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others = minimal
            .iter()
            .enumerate()
            .filter(move |(j, _)| *j != i)
            .map(|(_, h)| h);
        let (lt, lc) = g.lead().cloned().unwrap();
        // only the tail can be reduced: no other leading term divides the leading term
        let mut tail = g.clone();
        tail.terms.pop();
        let (mut r, k) = reduce_scaled(tail, others);
        r.terms.push((lt, lc * k.to_integer()));
        r.make_primitive();
        out.push(r);
    }
    out
}

/// Top-reduces `f` while its leading term lies in a component below `block`, returning
/// `None` if some such leading term is irreducible. On success the result is `k·f` minus a
/// combination of the basis, returned with `k`.
pub(crate) fn reduce_block(
    f: Vector,
    basis: &[Vector],
    block: usize,
) -> Option<(Vector, Rational)> {
    let mut f = f;
    let mut k = BigInt::one();
    while let Some((t, c)) = f.lead().cloned() {
        if t.comp >= block {
            break;
        }
        let g = find_reducer(&t, basis)?;
        let (gt, gc) = g.lead().unwrap();
        let m = t.mono.div(&gt.mono).unwrap();
        let (a, b) = cancel(&c, gc);
        f = f.sub_mul(&a, &b, &m, g);
        k *= a;
    }
    Some((f, Rational::from_integer(k)))
}
