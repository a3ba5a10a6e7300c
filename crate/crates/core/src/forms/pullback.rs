//! Pullbacks of forms along chart maps.
//!
//! A `ChartMap` records, for every variable of the codomain chart, its image
//! polynomial on the domain chart. Differential generators pull back to the
//! exterior derivative of the corresponding image, so pullback commutes with
//! d by construction. Named constructors build cofaces, codegeneracies,
//! vertex evaluations, the shrink homotopies behind Dupont's h operators,
//! the cube-to-simplex map, and parameter substitutions.

use crate::algebra::{PolyElement, Rational, VarKind};
use crate::error::{Error, Result};
use crate::forms::form::DMode;
use crate::forms::{Chart, DifferentialForm};

#[derive(Clone)]
pub struct ChartMap {
    /// Chart the pulled-back form lives on.
    domain: Chart,
    /// Chart of the input form.
    codomain: Chart,
    /// Image on the domain of each codomain universe variable.
    var_images: Vec<PolyElement>,
    /// d(image) for each codomain generator slot.
    gen_images: Vec<DifferentialForm>,
}

impl ChartMap {
    /// General constructor. `var_images[i]` is the image of codomain
    /// variable i as a polynomial on `domain`. Nilpotent variables must map
    /// to images that still satisfy their cap.
    pub fn new(domain: Chart, codomain: Chart, var_images: Vec<PolyElement>) -> Result<Self> {
        if var_images.len() != codomain.universe().len() {
            return Err(Error::ChartMismatch(
                "one image per codomain variable required".into(),
            ));
        }
        for (i, img) in var_images.iter().enumerate() {
            if img.universe() != domain.universe() {
                return Err(Error::ChartMismatch(format!(
                    "image of `{}` lives off the domain chart",
                    codomain.universe().spec(i).name
                )));
            }
            if let VarKind::Nilpotent { cap } = codomain.universe().spec(i).kind {
                if !img.pow(cap + 1).is_zero() {
                    return Err(Error::ChartMismatch(format!(
                        "image of nilpotent `{}` violates its cap",
                        codomain.universe().spec(i).name
                    )));
                }
            }
        }
        let gen_images = codomain
            .generators()
            .iter()
            .map(|&var_idx| {
                DifferentialForm::from_poly(&domain, var_images[var_idx].clone())
                    .map(|f| f.exterior_d(DMode::Full))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ChartMap {
            domain,
            codomain,
            var_images,
            gen_images,
        })
    }

    pub fn domain(&self) -> &Chart {
        &self.domain
    }

    pub fn codomain(&self) -> &Chart {
        &self.codomain
    }

    /// Pull a form on the codomain back to the domain.
    pub fn apply(&self, form: &DifferentialForm) -> Result<DifferentialForm> {
        if form.chart() != &self.codomain {
            return Err(Error::ChartMismatch(
                "form does not live on the map's codomain".into(),
            ));
        }
        let mut out = DifferentialForm::zero(&self.domain);
        for (mask, poly) in form.components() {
            let coeff = poly.substitute(self.domain.universe(), &self.var_images)?;
            if coeff.is_zero() {
                continue;
            }
            let mut acc = DifferentialForm::from_poly(&self.domain, coeff)?;
            let mut mm = mask;
            while mm != 0 && !acc.is_zero() {
                let slot = mm.trailing_zeros() as usize;
                acc = acc.wedge(&self.gen_images[slot])?;
                mm &= mm - 1;
            }
            out = out.add(&acc)?;
        }
        Ok(out)
    }

    /// Identity-by-name images for every non-simplex variable.
    fn passthrough_images(
        domain: &Chart,
        codomain: &Chart,
        simplex_image: impl Fn(u32) -> Result<PolyElement>,
    ) -> Result<Vec<PolyElement>> {
        codomain
            .universe()
            .vars()
            .iter()
            .map(|spec| match spec.kind {
                VarKind::Simplex(i) => simplex_image(i),
                _ => PolyElement::var_named(domain.universe(), &spec.name),
            })
            .collect()
    }

    /// The affine simplex map of a weakly increasing phi: [p] -> [q],
    /// pulling forms on Delta^q back to Delta^p; non-simplex factors are
    /// carried along unchanged. Cofaces are phi = delta^i, codegeneracies
    /// phi = sigma^i.
    pub fn simplex_map(codomain: &Chart, phi: &[usize]) -> Result<Self> {
        crate::algebra::poly::check_monotone(phi)?;
        let p = phi.len() - 1;
        let q = codomain.simplex_dim();
        if phi[p] > q {
            return Err(Error::Domain(format!(
                "map {phi:?} does not land in [{q}]"
            )));
        }
        let domain = codomain.with_simplex_dim(p)?;
        let images = Self::passthrough_images(&domain, codomain, |i| {
            crate::algebra::poly::coface_image(domain.universe(), phi, i)
        })?;
        ChartMap::new(domain, codomain.clone(), images)
    }

    /// The i-th coface delta^i: Delta^{q-1} -> Delta^q (the increasing
    /// injection missing i).
    pub fn coface(codomain: &Chart, i: usize) -> Result<Self> {
        let q = codomain.simplex_dim();
        if q == 0 || i > q {
            return Err(Error::Domain(format!("no coface delta^{i} into Delta^{q}")));
        }
        let phi: Vec<usize> = (0..q).map(|j| if j < i { j } else { j + 1 }).collect();
        Self::simplex_map(codomain, &phi)
    }

    /// The i-th codegeneracy sigma^i: Delta^{q+1} -> Delta^q (the
    /// surjection repeating i).
    pub fn codegeneracy(codomain: &Chart, i: usize) -> Result<Self> {
        let q = codomain.simplex_dim();
        if i > q {
            return Err(Error::Domain(format!(
                "no codegeneracy sigma^{i} onto Delta^{q}"
            )));
        }
        let phi: Vec<usize> = (0..=q + 1)
            .map(|j| if j <= i { j } else { j - 1 })
            .collect();
        Self::simplex_map(codomain, &phi)
    }

    /// Evaluation at the vertex e_j of the simplex factor (a chart
    /// endomorphism: coefficients lose their x-dependence, dx's die).
    pub fn vertex(chart: &Chart, j: usize) -> Result<Self> {
        let p = chart.simplex_dim();
        if j > p {
            return Err(Error::Domain(format!("no vertex e_{j} in Delta^{p}")));
        }
        let images = Self::passthrough_images(chart, chart, |i| {
            Ok(PolyElement::constant(
                chart.universe(),
                if i as usize == j {
                    Rational::one()
                } else {
                    Rational::zero()
                },
            ))
        })?;
        ChartMap::new(chart.clone(), chart.clone(), images)
    }

    /// The shrink homotopy g_j(s, x) = s e_j + (1 - s) x behind Dupont's
    /// h operators: pulls forms on the chart back to the chart extended by
    /// the fresh interval variable `s`.
    pub fn shrink_to_vertex(chart: &Chart, j: usize, s: &str) -> Result<Self> {
        let p = chart.simplex_dim();
        if j > p {
            return Err(Error::Domain(format!("no vertex e_{j} in Delta^{p}")));
        }
        let domain = chart.with_interval(s)?;
        let du = domain.universe();
        let s_poly = PolyElement::var_named(du, s)?;
        let one_minus_s = PolyElement::one(du).sub(&s_poly)?;
        let images = Self::passthrough_images(&domain, chart, |i| {
            let xi = PolyElement::simplex_coord(du, i)?;
            let mut img = one_minus_s.mul(&xi)?;
            if i as usize == j {
                img = img.add(&s_poly)?;
            }
            Ok(img)
        })?;
        ChartMap::new(domain, chart.clone(), images)
    }

    /// The cube-to-simplex map psi: I^k -> Delta^k given by
    /// x_i -> t_1...t_i (1 - t_{i+1}) with t_{k+1} = 0. Interval names
    /// supply the cube coordinates in order.
    pub fn cube_to_simplex(codomain: &Chart, cube_vars: &[&str]) -> Result<Self> {
        let k = codomain.simplex_dim();
        if cube_vars.len() != k {
            return Err(Error::DimensionMismatch(format!(
                "need {k} cube coordinates for Delta^{k}"
            )));
        }
        let mut intervals: Vec<&str> = codomain
            .intervals()
            .iter()
            .map(|s| s.as_str())
            .collect();
        intervals.extend_from_slice(cube_vars);
        let domain = Chart::new(
            0,
            &intervals,
            &codomain
                .params()
                .iter()
                .map(|s| s.as_str())
                .collect::<Vec<_>>(),
            &codomain
                .nilpotents()
                .iter()
                .map(|(s, c)| (s.as_str(), *c))
                .collect::<Vec<_>>(),
        )?;
        let du = domain.universe();
        let images = Self::passthrough_images(&domain, codomain, |i| {
            // x_i -> t_1 ... t_i (1 - t_{i+1}); only i >= 1 is stored.
            let i = i as usize;
            let mut img = PolyElement::one(du);
            for t in cube_vars.iter().take(i) {
                img = img.mul(&PolyElement::var_named(du, t)?)?;
            }
            if i < k {
                let next = PolyElement::var_named(du, cube_vars[i])?;
                img = img.mul(&PolyElement::one(du).sub(&next)?)?;
            }
            Ok(img)
        })?;
        ChartMap::new(domain, codomain.clone(), images)
    }

    /// Substitute polynomials for parameter variables (a chart
    /// endomorphism on everything else).
    pub fn parameter_substitution(
        chart: &Chart,
        subs: &[(&str, PolyElement)],
    ) -> Result<Self> {
        let images = chart
            .universe()
            .vars()
            .iter()
            .map(|spec| {
                if let Some((_, img)) = subs.iter().find(|(n, _)| *n == spec.name) {
                    if !matches!(spec.kind, VarKind::Parameter) {
                        return Err(Error::Domain(format!(
                            "`{}` is not a parameter variable",
                            spec.name
                        )));
                    }
                    if img.universe() != chart.universe() {
                        return Err(Error::ChartMismatch(
                            "substitution image off-chart".into(),
                        ));
                    }
                    Ok(img.clone())
                } else if let VarKind::Simplex(i) = spec.kind {
                    PolyElement::simplex_coord(chart.universe(), i)
                } else {
                    PolyElement::var_named(chart.universe(), &spec.name)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        ChartMap::new(chart.clone(), chart.clone(), images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coface_on_interval_forms() {
        // (delta^0)^* on Delta^1 -> Delta^0 charts kills dx1 and evaluates
        // x1 at the remaining vertex e_1 (which has x1 = 1).
        let c1 = Chart::simplex(1);
        let dx1 = DifferentialForm::generator(&c1, "x1").unwrap();
        let map = ChartMap::coface(&c1, 0).unwrap();
        assert!(map.apply(&dx1).unwrap().is_zero());
        let x1 = DifferentialForm::coordinate(&c1, "x1").unwrap();
        assert_eq!(
            map.apply(&x1).unwrap().as_rational().unwrap(),
            Rational::one()
        );
    }

    #[test]
    fn endpoint_style_pullbacks() {
        // i_0^*(t dx1 + dt) = 0 via the endpoint operation.
        let c = Chart::new(1, &["t"], &[], &[]).unwrap();
        let t = DifferentialForm::coordinate(&c, "t").unwrap();
        let dx1 = DifferentialForm::generator(&c, "x1").unwrap();
        let dt = DifferentialForm::generator(&c, "t").unwrap();
        let w = t.wedge(&dx1).unwrap().add(&dt).unwrap();
        assert!(w.endpoint("t", 0).unwrap().is_zero());
    }

    #[test]
    fn pullback_commutes_with_d() {
        let c2 = Chart::new(2, &[], &["y1"], &[]).unwrap();
        let u = c2.universe();
        let w = DifferentialForm::from_poly(
            &c2,
            PolyElement::parse(u, "x1^2 y1 + x2").unwrap(),
        )
        .unwrap()
        .wedge(&DifferentialForm::generator(&c2, "x2").unwrap())
        .unwrap();
        for i in 0..=2 {
            let map = ChartMap::coface(&c2, i).unwrap();
            let lhs = map.apply(&w.exterior_d(DMode::Full)).unwrap();
            let rhs = map.apply(&w).unwrap().exterior_d(DMode::Full);
            assert_eq!(lhs, rhs, "coface {i}");
        }
    }

    #[test]
    fn cosimplicial_identities() {
        // delta^j delta^i = delta^i delta^{j-1} for i < j, as pullbacks.
        let c3 = Chart::simplex(3);
        let u = c3.universe();
        let w = DifferentialForm::from_poly(
            &c3,
            PolyElement::parse(u, "x1 x3 + x2^2").unwrap(),
        )
        .unwrap()
        .wedge(&DifferentialForm::generator(&c3, "x2").unwrap())
        .unwrap();
        for i in 0..3usize {
            for j in (i + 1)..=3usize {
                // Delta^1 -> Delta^2 -> Delta^3 both ways.
                let c2 = Chart::simplex(2);
                let left = ChartMap::coface(&c2, i)
                    .unwrap()
                    .apply(&ChartMap::coface(&c3, j).unwrap().apply(&w).unwrap())
                    .unwrap();
                let right = ChartMap::coface(&c2, j - 1)
                    .unwrap()
                    .apply(&ChartMap::coface(&c3, i).unwrap().apply(&w).unwrap())
                    .unwrap();
                assert_eq!(left, right, "i={i}, j={j}");
            }
        }
    }

    #[test]
    fn cube_to_simplex_on_interval() {
        // On Delta^1, psi sends the orientation form dx1 to dt1, and the
        // integral of a monomial form agrees with iterated K.
        let c1 = Chart::simplex(1);
        let psi = ChartMap::cube_to_simplex(&c1, &["t1"]).unwrap();
        let dx1 = DifferentialForm::generator(&c1, "x1").unwrap();
        let pulled = psi.apply(&dx1).unwrap();
        let cube = psi.domain().clone();
        assert_eq!(pulled, DifferentialForm::generator(&cube, "t1").unwrap());

        let u = c1.universe();
        let form = DifferentialForm::from_poly(&c1, PolyElement::parse(u, "x1^3").unwrap())
            .unwrap()
            .wedge(&dx1)
            .unwrap();
        let (direct, _) = form.integrate_simplex().unwrap();
        let via_cube = psi.apply(&form).unwrap().homotopy_k("t1").unwrap();
        assert_eq!(
            direct.as_rational().unwrap(),
            via_cube.as_rational().unwrap()
        );
    }
}
