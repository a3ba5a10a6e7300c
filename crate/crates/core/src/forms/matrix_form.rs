//! Matrices of differential forms on a common chart. Multiplication is
//! matrix multiplication with wedge products of entries, which is what the
//! curvature and Chern character computations consume.

use crate::algebra::{PolyElement, Rational, RingMatrix};
use crate::error::{Error, Result};
use crate::forms::form::DMode;
use crate::forms::{Chart, ChartMap, DifferentialForm};

#[derive(Clone, PartialEq)]
pub struct MatrixForm {
    chart: Chart,
    inner: RingMatrix<DifferentialForm>,
}

impl MatrixForm {
    pub fn zero(chart: &Chart, size: usize) -> Self {
        MatrixForm {
            chart: chart.clone(),
            inner: RingMatrix::zero_like(&DifferentialForm::zero(chart), size),
        }
    }

    pub fn identity(chart: &Chart, size: usize) -> Self {
        MatrixForm {
            chart: chart.clone(),
            inner: RingMatrix::identity_like(&DifferentialForm::zero(chart), size),
        }
    }

    pub fn from_entries(chart: &Chart, size: usize, entries: Vec<DifferentialForm>) -> Result<Self> {
        if entries.iter().any(|e| e.chart() != chart) {
            return Err(Error::ChartMismatch(
                "matrix entries live on different charts".into(),
            ));
        }
        Ok(MatrixForm {
            chart: chart.clone(),
            inner: RingMatrix::from_entries(size, entries)?,
        })
    }

    /// Degree-0 embedding of a polynomial matrix.
    pub fn from_poly_matrix(chart: &Chart, m: &RingMatrix<PolyElement>) -> Result<Self> {
        let entries = m
            .entries()
            .iter()
            .map(|p| DifferentialForm::from_poly(chart, p.clone()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_entries(chart, m.size(), entries)
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn size(&self) -> usize {
        self.inner.size()
    }

    pub fn entry(&self, i: usize, j: usize) -> &DifferentialForm {
        self.inner.entry(i, j)
    }

    pub fn entries(&self) -> &[DifferentialForm] {
        self.inner.entries()
    }

    pub fn map_entries(&self, f: impl Fn(&DifferentialForm) -> Result<DifferentialForm>) -> Result<Self> {
        let entries = self
            .inner
            .entries()
            .iter()
            .map(&f)
            .collect::<Result<Vec<_>>>()?;
        let chart = entries
            .first()
            .map(|e| e.chart().clone())
            .unwrap_or_else(|| self.chart.clone());
        if entries.iter().any(|e| e.chart() != &chart) {
            return Err(Error::ChartMismatch(
                "entry map produced mixed charts".into(),
            ));
        }
        Ok(MatrixForm {
            chart,
            inner: RingMatrix::from_entries(self.inner.size(), entries)?,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(MatrixForm {
            chart: self.chart.clone(),
            inner: self.inner.add(&other.inner)?,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Ok(MatrixForm {
            chart: self.chart.clone(),
            inner: self.inner.sub(&other.inner)?,
        })
    }

    pub fn neg(&self) -> Self {
        MatrixForm {
            chart: self.chart.clone(),
            inner: self.inner.neg(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        MatrixForm {
            chart: self.chart.clone(),
            inner: self.inner.map(|e| e.scale(c)),
        }
    }

    pub fn scale_form(&self, f: &DifferentialForm) -> Result<Self> {
        self.map_entries(|e| f.wedge(e))
    }

    /// Matrix product with graded (wedge) entry products.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.chart != other.chart {
            return Err(Error::ChartMismatch("matrix charts differ".into()));
        }
        Ok(MatrixForm {
            chart: self.chart.clone(),
            inner: self.inner.mul(&other.inner)?,
        })
    }

    pub fn pow(&self, exp: u32) -> Result<Self> {
        let mut acc = Self::identity(&self.chart, self.size());
        for _ in 0..exp {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn exterior_d(&self, mode: DMode) -> Self {
        MatrixForm {
            chart: self.chart.clone(),
            inner: self.inner.map(|e| e.exterior_d(mode)),
        }
    }

    pub fn trace(&self) -> DifferentialForm {
        self.inner.trace()
    }

    pub fn pullback(&self, map: &ChartMap) -> Result<Self> {
        self.map_entries(|e| map.apply(e))
    }

    pub fn homotopy_k(&self, t: &str) -> Result<Self> {
        self.map_entries(|e| e.homotopy_k(t))
    }

    pub fn endpoint(&self, t: &str, value: u8) -> Result<Self> {
        self.map_entries(|e| e.endpoint(t, value))
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero_matrix()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_diagonal_square_vanishes() {
        // A diagonal matrix of 1-forms squares (and cubes) to zero.
        let c = Chart::new(2, &[], &[], &[]).unwrap();
        let dx1 = DifferentialForm::generator(&c, "x1").unwrap();
        let dx2 = DifferentialForm::generator(&c, "x2").unwrap();
        let zero = DifferentialForm::zero(&c);
        let d = MatrixForm::from_entries(&c, 2, vec![dx1, zero.clone(), zero, dx2]).unwrap();
        assert!(d.mul(&d).unwrap().is_zero());
        assert!(d.pow(3).unwrap().is_zero());
    }

    #[test]
    fn wedge_respects_matrix_mult() {
        let c = Chart::new(2, &[], &[], &[]).unwrap();
        let x1 = DifferentialForm::coordinate(&c, "x1").unwrap();
        let dx1 = DifferentialForm::generator(&c, "x1").unwrap();
        let dx2 = DifferentialForm::generator(&c, "x2").unwrap();
        let zero = DifferentialForm::zero(&c);
        let a = MatrixForm::from_entries(&c, 2, vec![zero.clone(), x1.wedge(&dx1).unwrap(), zero.clone(), zero.clone()])
            .unwrap();
        let b = MatrixForm::from_entries(&c, 2, vec![zero.clone(), zero.clone(), dx2, zero.clone()]).unwrap();
        let prod = a.mul(&b).unwrap();
        let expect = x1
            .wedge(&dx1)
            .unwrap()
            .wedge(&DifferentialForm::generator(&c, "x2").unwrap())
            .unwrap();
        assert_eq!(prod.entry(0, 0), &expect);
        assert!(prod.entry(1, 1).is_zero());
    }
}
