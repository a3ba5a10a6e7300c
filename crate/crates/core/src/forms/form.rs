//! Differential forms with exact polynomial coefficients.
//!
//! A form is stored by components: a sorted set of differential generators
//! (a bitmask over the chart's generator list) paired with a polynomial
//! coefficient. dx_0 never appears; it is eliminated as -sum dx_i, matching
//! the coordinate elimination in the coefficient ring.

use std::collections::BTreeMap;

use crate::algebra::{PolyElement, Rational, VarKind};
use crate::error::{Error, Result};
use crate::forms::Chart;

/// Which part of the exterior derivative to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DMode {
    /// d = d_Delta + d_fiber.
    Full,
    /// Only derivatives along simplex coordinates.
    SimplexOnly,
    /// Only derivatives along interval and parameter variables.
    FiberOnly,
}

#[derive(Clone, PartialEq, Eq)]
pub struct DifferentialForm {
    chart: Chart,
    /// Component mask (bit i = generator slot i) -> coefficient.
    comps: BTreeMap<u64, PolyElement>,
}

/// Sign of moving generator `slot` to the front of the sorted set `mask`
/// (equivalently, of inserting it from the front into sorted position):
/// (-1)^{number of generators in mask below `slot`}.
fn front_sign(mask: u64, slot: usize) -> Rational {
    let below = (mask & ((1u64 << slot) - 1)).count_ones();
    if below % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Sign of merging two disjoint sorted generator sets a, b into sorted
/// order, with a-generators first.
fn merge_sign(a: u64, b: u64) -> Rational {
    let mut inversions = 0u32;
    let mut bb = b;
    while bb != 0 {
        let slot = bb.trailing_zeros();
        // a-generators above this b-generator must jump over it.
        inversions += (a >> (slot + 1)).count_ones();
        bb &= bb - 1;
    }
    if inversions % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

impl DifferentialForm {
    pub fn zero(chart: &Chart) -> Self {
        DifferentialForm {
            chart: chart.clone(),
            comps: BTreeMap::new(),
        }
    }

    pub fn from_poly(chart: &Chart, poly: PolyElement) -> Result<Self> {
        if poly.universe() != chart.universe() {
            return Err(Error::ChartMismatch(
                "coefficient normalised for a different chart".into(),
            ));
        }
        let mut f = Self::zero(chart);
        f.insert(0, poly);
        Ok(f)
    }

    pub fn scalar(chart: &Chart, c: Rational) -> Self {
        let mut f = Self::zero(chart);
        f.insert(0, PolyElement::constant(chart.universe(), c));
        f
    }

    pub fn one(chart: &Chart) -> Self {
        Self::scalar(chart, Rational::one())
    }

    /// The 1-form d(name) for a simplex/interval/parameter variable. For
    /// "x0" this is -sum_i dx_i.
    pub fn generator(chart: &Chart, name: &str) -> Result<Self> {
        if name == "x0" {
            let mut f = Self::zero(chart);
            for i in 1..=chart.simplex_dim() {
                let slot = chart
                    .generator_slot_named(&format!("x{i}"))
                    .expect("simplex generator");
                f.insert(
                    1u64 << slot,
                    PolyElement::constant(chart.universe(), -Rational::one()),
                );
            }
            return Ok(f);
        }
        let slot = chart
            .generator_slot_named(name)
            .ok_or_else(|| Error::ChartMismatch(format!("no generator d{name} in chart")))?;
        let mut f = Self::zero(chart);
        f.insert(1u64 << slot, PolyElement::one(chart.universe()));
        Ok(f)
    }

    /// Coordinate function as a 0-form ("x0" expands to 1 - sum x_i).
    pub fn coordinate(chart: &Chart, name: &str) -> Result<Self> {
        let poly = if name == "x0" {
            PolyElement::simplex_coord(chart.universe(), 0)?
        } else {
            PolyElement::var_named(chart.universe(), name)?
        };
        Self::from_poly(chart, poly)
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (u64, &PolyElement)> {
        self.comps.iter().map(|(&m, p)| (m, p))
    }

    pub fn component(&self, mask: u64) -> PolyElement {
        self.comps
            .get(&mask)
            .cloned()
            .unwrap_or_else(|| PolyElement::zero(self.chart.universe()))
    }

    fn insert(&mut self, mask: u64, poly: PolyElement) {
        if poly.is_zero() {
            return;
        }
        match self.comps.entry(mask) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(poly);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&poly).expect("same universe");
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub(crate) fn insert_component(&mut self, mask: u64, poly: PolyElement) {
        self.insert(mask, poly);
    }

    fn check_chart(&self, other: &Self) -> Result<()> {
        if self.chart == other.chart {
            Ok(())
        } else {
            Err(Error::ChartMismatch(format!(
                "charts `{}` and `{}` differ",
                self.chart, other.chart
            )))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_chart(other)?;
        let mut out = self.clone();
        for (&m, p) in &other.comps {
            out.insert(m, p.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_chart(other)?;
        let mut out = self.clone();
        for (&m, p) in &other.comps {
            out.insert(m, p.neg());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        DifferentialForm {
            chart: self.chart.clone(),
            comps: self.comps.iter().map(|(&m, p)| (m, p.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.chart);
        }
        DifferentialForm {
            chart: self.chart.clone(),
            comps: self.comps.iter().map(|(&m, p)| (m, p.scale(c))).collect(),
        }
    }

    pub fn scale_poly(&self, c: &PolyElement) -> Result<Self> {
        let mut out = Self::zero(&self.chart);
        for (&m, p) in &self.comps {
            out.insert(m, p.mul(c)?);
        }
        Ok(out)
    }

    /// Graded wedge product.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_chart(other)?;
        let mut out = Self::zero(&self.chart);
        for (&ma, pa) in &self.comps {
            for (&mb, pb) in &other.comps {
                if ma & mb != 0 {
                    continue;
                }
                let sign = merge_sign(ma, mb);
                let coeff = pa.mul(pb)?.scale(&sign);
                out.insert(ma | mb, coeff);
            }
        }
        Ok(out)
    }

    /// Exterior derivative (optionally only the simplex or fiber part).
    pub fn exterior_d(&self, mode: DMode) -> Self {
        let chart = &self.chart;
        let mut out = Self::zero(chart);
        for (&mask, poly) in &self.comps {
            for slot in 0..chart.num_generators() {
                let bit = 1u64 << slot;
                if mask & bit != 0 {
                    continue;
                }
                let kind = chart.generator_kind(slot);
                let included = match mode {
                    DMode::Full => true,
                    DMode::SimplexOnly => matches!(kind, VarKind::Simplex(_)),
                    DMode::FiberOnly => {
                        matches!(kind, VarKind::Interval | VarKind::Parameter)
                    }
                };
                if !included {
                    continue;
                }
                let var_idx = chart.generators()[slot];
                let dp = poly.partial(var_idx);
                if dp.is_zero() {
                    continue;
                }
                out.insert(mask | bit, dp.scale(&front_sign(mask, slot)));
            }
        }
        out
    }

    /// Interior multiplication with d/d(name): antiderivation of degree -1
    /// with the convention i(dt ^ eta) = eta once dt is moved to the front.
    pub fn interior_product(&self, name: &str) -> Result<Self> {
        let slot = self
            .chart
            .generator_slot_named(name)
            .ok_or_else(|| Error::ChartMismatch(format!("no generator d{name} in chart")))?;
        let bit = 1u64 << slot;
        let mut out = Self::zero(&self.chart);
        for (&mask, poly) in &self.comps {
            if mask & bit == 0 {
                continue;
            }
            out.insert(mask & !bit, poly.scale(&front_sign(mask & !bit, slot)));
        }
        Ok(out)
    }

    /// Homotopy operator K = int_0^1 i_{d/dt}(.) dt for an interval
    /// variable. The result lives on the chart with `t` removed.
    pub fn homotopy_k(&self, t: &str) -> Result<Self> {
        let target = self.chart.without_interval(t)?;
        let picked = self.interior_product(t)?;
        let var_idx = self
            .chart
            .universe()
            .index_of(t)
            .expect("interval variable exists");
        let mut out = Self::zero(&target);
        for (&mask, poly) in &picked.comps {
            let integrated = poly.integrate_unit_interval(var_idx);
            out.insert(
                remap_mask(&self.chart, &target, mask),
                integrated.transfer_to(target.universe())?,
            );
        }
        Ok(out)
    }

    /// Pullback along the endpoint embedding t = value (0 or 1): kills dt
    /// and evaluates coefficients. The result lives on the chart without t.
    pub fn endpoint(&self, t: &str, value: u8) -> Result<Self> {
        let target = self.chart.without_interval(t)?;
        let slot = self
            .chart
            .generator_slot_named(t)
            .ok_or_else(|| Error::ChartMismatch(format!("no generator d{t}")))?;
        let bit = 1u64 << slot;
        let var_idx = self.chart.universe().index_of(t).expect("variable exists");
        let val = Rational::from_int(value as i64);
        let mut out = Self::zero(&target);
        for (&mask, poly) in &self.comps {
            if mask & bit != 0 {
                continue;
            }
            let evaluated = poly.eval_var(var_idx, &val);
            out.insert(
                remap_mask(&self.chart, &target, mask),
                evaluated.transfer_to(target.universe())?,
            );
        }
        Ok(out)
    }

    /// Exact integration over Delta^p with orientation dx_1 ^ ... ^ dx_p.
    /// Only components of top simplex degree contribute; the boolean
    /// reports whether lower-degree components were dropped.
    pub fn integrate_simplex(&self) -> Result<(Self, bool)> {
        let p = self.chart.simplex_dim();
        let target = self.chart.with_simplex_dim(0)?;
        if p == 0 {
            // Nothing to integrate over.
            let mut out = Self::zero(&target);
            for (&mask, poly) in &self.comps {
                out.insert(
                    remap_mask(&self.chart, &target, mask),
                    poly.transfer_to(target.universe())?,
                );
            }
            return Ok((out, false));
        }
        let full: u64 = (1u64 << p) - 1; // simplex generators sit in slots 0..p
        let simplex_vars: Vec<usize> = self.chart.universe().simplex_indices();
        let mut dropped = false;
        let mut out = Self::zero(&target);
        for (&mask, poly) in &self.comps {
            if mask & full != full {
                dropped = true;
                continue;
            }
            let rest = mask & !full;
            let mut acc = PolyElement::zero(target.universe());
            for (mono, coeff) in poly.terms() {
                let mut degree_sum: u64 = 0;
                let mut numer = Rational::one();
                for &v in &simplex_vars {
                    let a = mono.exponents()[v] as u64;
                    degree_sum += a;
                    numer = &numer * &crate::algebra::factorial(a);
                }
                let weight = numer / crate::algebra::factorial(p as u64 + degree_sum);
                // Keep the non-simplex exponents, drop the simplex block.
                let mut reduced = PolyElement::constant(self.chart.universe(), &weight * coeff);
                for (v, &e) in mono.exponents().iter().enumerate() {
                    if e > 0 && !simplex_vars.contains(&v) {
                        reduced = reduced
                            .mul(&PolyElement::var(self.chart.universe(), v).pow(e))?;
                    }
                }
                acc = acc.add(&reduced.transfer_to(target.universe())?)?;
            }
            out.insert(remap_mask(&self.chart, &target, rest), acc);
        }
        Ok((out, dropped))
    }

    /// Total degree of the highest-degree nonzero component.
    pub fn max_degree(&self) -> usize {
        self.comps
            .keys()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn is_homogeneous(&self, degree: usize) -> bool {
        self.comps.keys().all(|m| m.count_ones() as usize == degree)
    }

    /// (simplex degree, fiber degree) of a component mask.
    pub fn bidegree_of_mask(&self, mask: u64) -> (usize, usize) {
        let mut simplex = 0;
        let mut fiber = 0;
        let mut mm = mask;
        while mm != 0 {
            let slot = mm.trailing_zeros() as usize;
            match self.chart.generator_kind(slot) {
                VarKind::Simplex(_) => simplex += 1,
                VarKind::Interval | VarKind::Parameter => fiber += 1,
                VarKind::Nilpotent { .. } => unreachable!("nilpotents carry no differential"),
            }
            mm &= mm - 1;
        }
        (simplex, fiber)
    }

    /// The part of the form with the given simplex degree.
    pub fn simplex_degree_part(&self, k: usize) -> Self {
        let mut out = Self::zero(&self.chart);
        for (&mask, poly) in &self.comps {
            if self.bidegree_of_mask(mask).0 == k {
                out.insert(mask, poly.clone());
            }
        }
        out
    }

    /// Exhaustive bidegree decomposition.
    pub fn bidegree_parts(&self) -> BTreeMap<(usize, usize), Self> {
        let mut parts: BTreeMap<(usize, usize), Self> = BTreeMap::new();
        for (&mask, poly) in &self.comps {
            let key = self.bidegree_of_mask(mask);
            parts
                .entry(key)
                .or_insert_with(|| Self::zero(&self.chart))
                .insert(mask, poly.clone());
        }
        parts
    }

    /// Constant value of a 0-form with constant coefficient.
    pub fn as_rational(&self) -> Result<Rational> {
        if self.comps.is_empty() {
            return Ok(Rational::zero());
        }
        if self.comps.len() == 1 {
            if let Some(poly) = self.comps.get(&0) {
                return poly.as_rational();
            }
        }
        Err(Error::Domain("form is not a constant 0-form".into()))
    }

    pub fn max_simplex_degree(&self) -> usize {
        self.comps
            .keys()
            .map(|&m| self.bidegree_of_mask(m).0)
            .max()
            .unwrap_or(0)
    }

    /// Re-express on a chart sharing variable names: coefficients and
    /// generators are matched by name. Fails if an occurring variable or
    /// generator is missing from the target.
    pub fn transfer_chart(&self, target: &Chart) -> Result<Self> {
        if &self.chart == target {
            return Ok(self.clone());
        }
        let mut out = Self::zero(target);
        for (&mask, poly) in &self.comps {
            let mut new_mask = 0u64;
            let mut new_slots: Vec<usize> = Vec::new();
            let mut mm = mask;
            while mm != 0 {
                let slot = mm.trailing_zeros() as usize;
                let name = self.chart.generator_name(slot);
                let new_slot = target.generator_slot_named(name).ok_or_else(|| {
                    Error::ChartMismatch(format!("generator d{name} missing from target chart"))
                })?;
                new_mask |= 1u64 << new_slot;
                new_slots.push(new_slot);
                mm &= mm - 1;
            }
            // Generator order may differ between charts; pick up the sign of
            // re-sorting.
            let mut inversions = 0u32;
            for a in 0..new_slots.len() {
                for b in (a + 1)..new_slots.len() {
                    if new_slots[a] > new_slots[b] {
                        inversions += 1;
                    }
                }
            }
            let sign = if inversions % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            out.insert(
                new_mask,
                poly.transfer_to(target.universe())?.scale(&sign),
            );
        }
        Ok(out)
    }
}

/// Translate a generator mask between charts that share generator names.
pub(crate) fn remap_mask(from: &Chart, to: &Chart, mask: u64) -> u64 {
    let mut out = 0u64;
    let mut mm = mask;
    while mm != 0 {
        let slot = mm.trailing_zeros() as usize;
        let name = from.generator_name(slot);
        let new_slot = to
            .generator_slot_named(name)
            .unwrap_or_else(|| panic!("generator d{name} missing from target chart"));
        out |= 1u64 << new_slot;
        mm &= mm - 1;
    }
    out
}

impl crate::algebra::RingElem for DifferentialForm {
    fn zero_like(&self) -> Self {
        Self::zero(&self.chart)
    }
    fn one_like(&self) -> Self {
        Self::one(&self.chart)
    }
    fn is_zero(&self) -> bool {
        DifferentialForm::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        DifferentialForm::add(self, other).expect("chart mismatch")
    }
    fn sub(&self, other: &Self) -> Self {
        DifferentialForm::sub(self, other).expect("chart mismatch")
    }
    fn mul(&self, other: &Self) -> Self {
        DifferentialForm::wedge(self, other).expect("chart mismatch")
    }
    fn neg(&self) -> Self {
        DifferentialForm::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chart_p2_y() -> Chart {
        Chart::new(2, &[], &["y1"], &[]).unwrap()
    }

    #[test]
    fn d_of_coordinate() {
        let c = Chart::simplex(1);
        let x1 = DifferentialForm::coordinate(&c, "x1").unwrap();
        assert_eq!(x1.exterior_d(DMode::Full), DifferentialForm::generator(&c, "x1").unwrap());
    }

    #[test]
    fn d_squared_on_product() {
        let c = chart_p2_y();
        let x1 = DifferentialForm::coordinate(&c, "x1").unwrap();
        let dx1 = DifferentialForm::generator(&c, "x1").unwrap();
        let form = x1.wedge(&dx1).unwrap();
        assert!(form.exterior_d(DMode::Full).exterior_d(DMode::Full).is_zero());
        // d(x1 dx1) = dx1 ^ dx1 = 0 directly.
        assert!(form.exterior_d(DMode::Full).is_zero());
    }

    #[test]
    fn leibniz_sign() {
        // d(x1 x2 dx1) = x1 dx2 ^ dx1 = -x1 dx1 ^ dx2.
        let c = chart_p2_y();
        let u = c.universe();
        let coeff = PolyElement::parse(u, "x1 x2").unwrap();
        let form = DifferentialForm::from_poly(&c, coeff)
            .unwrap()
            .wedge(&DifferentialForm::generator(&c, "x1").unwrap())
            .unwrap();
        let d = form.exterior_d(DMode::Full);
        let expect = DifferentialForm::from_poly(&c, PolyElement::parse(u, "x1").unwrap())
            .unwrap()
            .wedge(&DifferentialForm::generator(&c, "x1").unwrap())
            .unwrap()
            .wedge(&DifferentialForm::generator(&c, "x2").unwrap())
            .unwrap()
            .neg();
        assert_eq!(d, expect);
    }

    #[test]
    fn wedge_anticommutes() {
        let c = chart_p2_y();
        let dx1 = DifferentialForm::generator(&c, "x1").unwrap();
        let dx2 = DifferentialForm::generator(&c, "x2").unwrap();
        assert_eq!(dx1.wedge(&dx2).unwrap(), dx2.wedge(&dx1).unwrap().neg());
        assert!(dx1.wedge(&dx1).unwrap().is_zero());
    }

    #[test]
    fn interior_product_signs() {
        let c = Chart::new(1, &["t"], &[], &[]).unwrap();
        let dt = DifferentialForm::generator(&c, "t").unwrap();
        let dx1 = DifferentialForm::generator(&c, "x1").unwrap();
        assert_eq!(dt.interior_product("t").unwrap(), DifferentialForm::one(&c));
        assert!(dx1.interior_product("t").unwrap().is_zero());
        // i_t(dx1 ^ dt) = -dx1.
        let w = dx1.wedge(&dt).unwrap();
        assert_eq!(w.interior_product("t").unwrap(), dx1.neg());
    }

    #[test]
    fn homotopy_k_basics() {
        let c = Chart::new(1, &["t"], &[], &[]).unwrap();
        let t = DifferentialForm::coordinate(&c, "t").unwrap();
        let dt = DifferentialForm::generator(&c, "t").unwrap();
        // K(t dt) = 1/2.
        let k = t.wedge(&dt).unwrap().homotopy_k("t").unwrap();
        let plain = Chart::simplex(1);
        assert_eq!(k, DifferentialForm::scalar(&plain, Rational::new(1, 2)));
        // K(x1 dx1) = 0: no dt.
        let x1dx1 = DifferentialForm::coordinate(&c, "x1")
            .unwrap()
            .wedge(&DifferentialForm::generator(&c, "x1").unwrap())
            .unwrap();
        assert!(x1dx1.homotopy_k("t").unwrap().is_zero());
    }

    #[test]
    fn k_homotopy_identity() {
        // dK(w) + K(dw) = i_1^* w - i_0^* w for w = t^2 x1 dx1.
        let c = Chart::new(1, &["t"], &[], &[]).unwrap();
        let u = c.universe();
        let w = DifferentialForm::from_poly(&c, PolyElement::parse(u, "t^2 x1").unwrap())
            .unwrap()
            .wedge(&DifferentialForm::generator(&c, "x1").unwrap())
            .unwrap();
        let lhs = w
            .homotopy_k("t")
            .unwrap()
            .exterior_d(DMode::Full)
            .add(&w.exterior_d(DMode::Full).homotopy_k("t").unwrap())
            .unwrap();
        let rhs = w
            .endpoint("t", 1)
            .unwrap()
            .sub(&w.endpoint("t", 0).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn simplex_integrals() {
        // int_{Delta^3} dx1 dx2 dx3 = 1/6 and int dx0 dx1 dx2 = -1/6.
        let c = Chart::simplex(3);
        let vol = DifferentialForm::generator(&c, "x1")
            .unwrap()
            .wedge(&DifferentialForm::generator(&c, "x2").unwrap())
            .unwrap()
            .wedge(&DifferentialForm::generator(&c, "x3").unwrap())
            .unwrap();
        let (val, dropped) = vol.integrate_simplex().unwrap();
        assert!(!dropped);
        assert_eq!(val.as_rational().unwrap(), Rational::new(1, 6));

        let alt = DifferentialForm::generator(&c, "x0")
            .unwrap()
            .wedge(&DifferentialForm::generator(&c, "x1").unwrap())
            .unwrap()
            .wedge(&DifferentialForm::generator(&c, "x2").unwrap())
            .unwrap();
        let (val, _) = alt.integrate_simplex().unwrap();
        assert_eq!(val.as_rational().unwrap(), Rational::new(-1, 6));
    }

    #[test]
    fn monomial_simplex_integral() {
        // int_{Delta^2} x1 x2 dx1 dx2 = 1/24.
        let c = Chart::simplex(2);
        let u = c.universe();
        let form = DifferentialForm::from_poly(&c, PolyElement::parse(u, "x1 x2").unwrap())
            .unwrap()
            .wedge(&DifferentialForm::generator(&c, "x1").unwrap())
            .unwrap()
            .wedge(&DifferentialForm::generator(&c, "x2").unwrap())
            .unwrap();
        let (val, _) = form.integrate_simplex().unwrap();
        assert_eq!(val.as_rational().unwrap(), Rational::new(1, 24));
    }

    #[test]
    fn lower_degree_integration_flagged() {
        let c = Chart::simplex(2);
        let dx1 = DifferentialForm::generator(&c, "x1").unwrap();
        let (val, dropped) = dx1.integrate_simplex().unwrap();
        assert!(val.is_zero());
        assert!(dropped);
    }
}
