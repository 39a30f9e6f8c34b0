use super::poly::{PolyRing, Polynomial};
use crate::error::{Error, Result};

/// Dense row-major matrix of polynomials, used for differentials of complexes.
///
/// Column `j` is the image of the `j`-th basis vector of the source.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, entries: vec![Polynomial::zero(); rows * cols] }
    }

    pub fn identity(ring: &PolyRing, n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(PolyMatrix { rows, cols, entries })
    }

    pub fn from_columns(rows: usize, columns: Vec<Vec<Polynomial>>) -> Result<Self> {
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (j, col) in columns.into_iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch(format!("column {j} has {} entries, expected {rows}", col.len())));
            }
            for (i, f) in col.into_iter().enumerate() {
                m.set(i, j, f);
            }
        }
        Ok(m)
    }

    pub fn row(entries: Vec<Polynomial>) -> Self {
        PolyMatrix { rows: 1, cols: entries.len(), entries }
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

    pub fn set(&mut self, i: usize, j: usize, f: Polynomial) {
        self.entries[i * self.cols + j] = f;
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Polynomial>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn map(&self, mut f: impl FnMut(&Polynomial) -> Result<Polynomial>) -> Result<Self> {
        let entries = self.entries.iter().map(&mut f).collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn mul(&self, ring: &PolyRing, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero();
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = ring.add(&acc, &ring.mul(a, b)?);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Removes row `r` and column `c`.
    pub fn without(&self, r: Option<usize>, c: Option<usize>) -> PolyMatrix {
        let rows: Vec<usize> = (0..self.rows).filter(|&i| Some(i) != r).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&j| Some(j) != c).collect();
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in &rows {
            for &j in &cols {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix { rows: rows.len(), cols: cols.len(), entries }
    }

    pub fn format(&self, ring: &PolyRing) -> String {
        (0..self.rows)
            .map(|i| {
                let row: Vec<String> = (0..self.cols).map(|j| ring.format(self.get(i, j))).collect();
                format!("[{}]", row.join(", "))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{MonomialOrder, PrimeField};

    fn ring(p: u64) -> PolyRing {
        PolyRing::new(PrimeField::new(p).unwrap(), vec!["x".into(), "y".into()], MonomialOrder::DegRevLex)
    }

    #[test]
    fn koszul_composition_vanishes() {
        let r = ring(3);
        let d1 = PolyMatrix::row(vec![r.var(0), r.var(1)]);
        let d2 = PolyMatrix::from_columns(2, vec![vec![r.neg(&r.var(1)), r.var(0)]]).unwrap();
        let prod = d1.mul(&r, &d2).unwrap();
        assert_eq!((prod.rows(), prod.cols()), (1, 1));
        assert!(prod.is_zero());
    }

    #[test]
    fn identity_and_small_products() {
        let r = ring(2);
        let a = PolyMatrix::row(vec![r.var(0), r.var(1)]);
        assert_eq!(a.mul(&r, &PolyMatrix::identity(&r, 2)).unwrap(), a);
        let x = PolyMatrix::row(vec![r.var(0)]);
        assert_eq!(r.format(x.mul(&r, &x).unwrap().get(0, 0)), "x^2");
        assert!(matches!(a.mul(&r, &a), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn deleting_rows_and_columns() {
        let r = ring(5);
        let m = PolyMatrix::from_entries(2, 2, vec![r.constant(1), r.constant(2), r.constant(3), r.constant(4)]).unwrap();
        let sub = m.without(Some(0), Some(1));
        assert_eq!(sub.entries(), &[r.constant(3)]);
    }
}
