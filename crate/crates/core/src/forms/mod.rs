//! Exterior algebra of differential forms on Delta^p x (interval and
//! parameter factors): d, wedge, interior products, pullbacks, exact
//! integration over the simplex, and the interval homotopy operator K.

mod chart;
mod form;
mod matrix_form;
mod pullback;
mod text;

pub use chart::Chart;
pub use form::{DMode, DifferentialForm};
pub use matrix_form::MatrixForm;
pub use pullback::ChartMap;
