use super::{Matrix, Submodule};
use crate::poly::Polynomial;

/// Rank of the generator matrix over the fraction field of the base ring.
pub fn generic_rank(m: &Submodule) -> usize {
    let gens = m.generators();
    matrix_rank(&Matrix::from_columns(m.ring(), m.rank(), gens))
}

/// Fraction-free (Bareiss) elimination; every division is exact.
pub fn matrix_rank(a: &Matrix) -> usize {
    let (rows, cols) = (a.rows(), a.cols());
    let mut m: Vec<Vec<Polynomial>> = (0..rows).map(|i| a.row(i).to_vec()).collect();
    let mut prev = Polynomial::one(a.ring());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows)
            .filter(|&i| !m[i][c].is_zero())
            .min_by_key(|&i| m[i][c].terms().len())
        else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &(&m[r][c] * &m[i][j]) - &(&m[i][c] * &m[r][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][c] = Polynomial::zero(a.ring());
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::module::ModuleElement;
    use crate::poly::PolyRing;

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

    #[test]
    fn rank_examples() {
        let x = PolyRing::new(["x"]).unwrap();
        assert_eq!(generic_rank(&module(&x, 1, &["x"])), 1);
        assert_eq!(generic_rank(&Submodule::zero(&x, 3)), 0);
        let r = PolyRing::new(["x", "y"]).unwrap();
        assert_eq!(
            generic_rank(&module(&r, 2, &["(x, y)", "(0, (y - x)*y)"])),
            2
        );
        assert_eq!(
            generic_rank(&module(&r, 2, &["(x, y)", "(x^2, x*y)", "(y^2, x*y)"])),
            2
        );
        assert_eq!(
            generic_rank(&module(&r, 3, &["(x, y, 1)", "(x*y, y^2, y)"])),
            1
        );
    }
}
