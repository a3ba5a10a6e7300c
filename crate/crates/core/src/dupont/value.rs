//! The value surface shared by scalar and matrix differential forms, so
//! every simplicial operator applies entrywise to matrix-valued families
//! through a single code path.

use crate::algebra::Rational;
use crate::error::Result;
use crate::forms::{Chart, ChartMap, DMode, DifferentialForm, MatrixForm};

pub trait FormValue: Clone + PartialEq {
    fn chart(&self) -> &Chart;
    fn zero_like_on(&self, chart: &Chart) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Result<Self>;
    fn sub(&self, other: &Self) -> Result<Self>;
    fn neg(&self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
    /// f ^ self with a scalar form on the left.
    fn wedge_form_left(&self, f: &DifferentialForm) -> Result<Self>;
    fn exterior_d(&self, mode: DMode) -> Self;
    fn pullback(&self, map: &ChartMap) -> Result<Self>;
    fn homotopy_k(&self, t: &str) -> Result<Self>;
    /// Move to a chart sharing variable names (extension or restriction).
    fn transfer_chart(&self, target: &Chart) -> Result<Self>;
    fn integrate_simplex(&self) -> Result<(Self, bool)>;
    fn max_simplex_degree(&self) -> usize;
    fn simplex_degree_part(&self, k: usize) -> Self;
}

impl FormValue for DifferentialForm {
    fn chart(&self) -> &Chart {
        DifferentialForm::chart(self)
    }
    fn zero_like_on(&self, chart: &Chart) -> Self {
        DifferentialForm::zero(chart)
    }
    fn is_zero(&self) -> bool {
        DifferentialForm::is_zero(self)
    }
    fn add(&self, other: &Self) -> Result<Self> {
        DifferentialForm::add(self, other)
    }
    fn sub(&self, other: &Self) -> Result<Self> {
        DifferentialForm::sub(self, other)
    }
    fn neg(&self) -> Self {
        DifferentialForm::neg(self)
    }
    fn scale(&self, c: &Rational) -> Self {
        DifferentialForm::scale(self, c)
    }
    fn wedge_form_left(&self, f: &DifferentialForm) -> Result<Self> {
        f.wedge(self)
    }
    fn exterior_d(&self, mode: DMode) -> Self {
        DifferentialForm::exterior_d(self, mode)
    }
    fn pullback(&self, map: &ChartMap) -> Result<Self> {
        map.apply(self)
    }
    fn homotopy_k(&self, t: &str) -> Result<Self> {
        DifferentialForm::homotopy_k(self, t)
    }
    fn transfer_chart(&self, target: &Chart) -> Result<Self> {
        DifferentialForm::transfer_chart(self, target)
    }
    fn integrate_simplex(&self) -> Result<(Self, bool)> {
        DifferentialForm::integrate_simplex(self)
    }
    fn max_simplex_degree(&self) -> usize {
        DifferentialForm::max_simplex_degree(self)
    }
    fn simplex_degree_part(&self, k: usize) -> Self {
        DifferentialForm::simplex_degree_part(self, k)
    }
}

impl FormValue for MatrixForm {
    fn chart(&self) -> &Chart {
        MatrixForm::chart(self)
    }
    fn zero_like_on(&self, chart: &Chart) -> Self {
        MatrixForm::zero(chart, self.size())
    }
    fn is_zero(&self) -> bool {
        MatrixForm::is_zero(self)
    }
    fn add(&self, other: &Self) -> Result<Self> {
        MatrixForm::add(self, other)
    }
    fn sub(&self, other: &Self) -> Result<Self> {
        MatrixForm::sub(self, other)
    }
    fn neg(&self) -> Self {
        MatrixForm::neg(self)
    }
    fn scale(&self, c: &Rational) -> Self {
        MatrixForm::scale(self, c)
    }
    fn wedge_form_left(&self, f: &DifferentialForm) -> Result<Self> {
        self.map_entries(|e| f.wedge(e))
    }
    fn exterior_d(&self, mode: DMode) -> Self {
        MatrixForm::exterior_d(self, mode)
    }
    fn pullback(&self, map: &ChartMap) -> Result<Self> {
        MatrixForm::pullback(self, map)
    }
    fn homotopy_k(&self, t: &str) -> Result<Self> {
        MatrixForm::homotopy_k(self, t)
    }
    fn transfer_chart(&self, target: &Chart) -> Result<Self> {
        self.map_entries(|e| e.transfer_chart(target))
    }
    fn integrate_simplex(&self) -> Result<(Self, bool)> {
        let dropped = std::cell::Cell::new(false);
        let out = self.map_entries(|e| {
            let (v, d) = e.integrate_simplex()?;
            if d {
                dropped.set(true);
            }
            Ok(v)
        })?;
        Ok((out, dropped.get()))
    }
    fn max_simplex_degree(&self) -> usize {
        self.entries()
            .iter()
            .map(|e| e.max_simplex_degree())
            .max()
            .unwrap_or(0)
    }
    fn simplex_degree_part(&self, k: usize) -> Self {
        self.map_entries(|e| Ok(e.simplex_degree_part(k)))
            .expect("degree projection preserves charts")
    }
}
