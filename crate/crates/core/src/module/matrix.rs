use std::fmt;
use std::sync::Arc;

use super::ModuleElement;
use crate::poly::{PolyRing, Polynomial, RingMorphism};
use crate::{Error, Result};

/// A dense `rows × cols` matrix of polynomials, acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    ring: Arc<PolyRing>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl Matrix {
    pub fn from_rows(
        ring: &Arc<PolyRing>,
        rows: usize,
        cols: usize,
        data: Vec<Vec<Polynomial>>,
    ) -> Result<Self> {
        if data.len() != rows || data.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape(format!("expected a {rows}x{cols} matrix")));
        }
        let entries: Vec<Polynomial> = data.into_iter().flatten().collect();
        if let Some(e) = entries.iter().find(|e| e.ring() != ring) {
            return Err(Error::ring_mismatch(ring, e.ring()));
        }
        Ok(Matrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn zero(ring: &Arc<PolyRing>, rows: usize, cols: usize) -> Self {
        Matrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![Polynomial::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: &Arc<PolyRing>, n: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = Polynomial::one(ring);
        }
        m
    }

    /// Matrix whose columns are the given elements.
    pub fn from_columns(ring: &Arc<PolyRing>, rows: usize, cols: &[ModuleElement]) -> Self {
        let mut m = Self::zero(ring, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, p) in c.components().iter().enumerate() {
                m.entries[i * cols.len() + j] = p.clone();
            }
        }
        m
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        assert_eq!(p.ring(), &self.ring);
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> ModuleElement {
        let comps = (0..self.rows).map(|i| self.get(i, j).clone()).collect();
        ModuleElement::from_parts(&self.ring, comps)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn apply(&self, h: &ModuleElement) -> Result<ModuleElement> {
        if h.ring() != &self.ring {
            return Err(Error::ring_mismatch(&self.ring, h.ring()));
        }
        if h.rank() != self.cols {
            return Err(Error::RankMismatch {
                expected: self.cols,
                found: h.rank(),
            });
        }
        let comps = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(h.components())
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Polynomial::zero(&self.ring), |acc, (a, b)| &acc + &(a * b))
            })
            .collect();
        Ok(ModuleElement::from_parts(&self.ring, comps))
    }

    /// `self * rhs`.
    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.ring != rhs.ring {
            return Err(Error::ring_mismatch(&self.ring, &rhs.ring));
        }
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zero(&self.ring, self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), rhs.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.entries[i * rhs.cols + j] = acc;
            }
        }
        Ok(out)
    }

    fn zip(
        &self,
        rhs: &Matrix,
        f: impl Fn(&Polynomial, &Polynomial) -> Polynomial,
    ) -> Result<Matrix> {
        if self.ring != rhs.ring {
            return Err(Error::ring_mismatch(&self.ring, &rhs.ring));
        }
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::Shape(format!(
                "{}x{} and {}x{} matrices",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| f(a, b))
            .collect();
        Ok(Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip(rhs, |a, b| a - b)
    }

    /// Entrywise image under a ring morphism.
    pub fn map(&self, f: &RingMorphism) -> Result<Matrix> {
        let entries = self
            .entries
            .iter()
            .map(|e| f.apply(e))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix {
            ring: f.target().clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// `[a 0; 0 b]`.
    pub fn block_diag(a: &Matrix, b: &Matrix) -> Result<Matrix> {
        if a.ring != b.ring {
            return Err(Error::ring_mismatch(&a.ring, &b.ring));
        }
        let mut m = Matrix::zero(&a.ring, a.rows + b.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                m.set(i, j, a.get(i, j).clone());
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                m.set(a.rows + i, a.cols + j, b.get(i, j).clone());
            }
        }
        Ok(m)
    }

    /// Permutation matrix sending `e_j` to `e_{perm[j]}`.
    pub fn permutation(ring: &Arc<PolyRing>, perm: &[usize]) -> Matrix {
        let n = perm.len();
        let mut m = Matrix::zero(ring, n, n);
        for (j, &i) in perm.iter().enumerate() {
            m.set(i, j, Polynomial::one(ring));
        }
        m
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}
