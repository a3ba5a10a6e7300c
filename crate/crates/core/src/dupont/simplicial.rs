//! Compatible families of forms over a finite simplicial set.
//!
//! A simplicial form stores one value per simplex, degenerate simplices
//! included: the defining compatibility condition constrains faces only, so
//! degenerate values are genuine data (the elementary-form extension E
//! produces nonzero values on degenerate simplices). Families are truncated
//! at the simplicial set's truncation level.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::Rational;
use crate::dupont::sset::{FiniteSimplicialSet, SimplexRef};
use crate::dupont::value::FormValue;
use crate::error::{Error, Result};
use crate::forms::{Chart, ChartMap, DMode, DifferentialForm};

/// Degree-indexed family (omega_p) with one value per p-simplex.
#[derive(Clone)]
pub struct SimplicialForm<V> {
    sset: Arc<FiniteSimplicialSet>,
    /// Chart of the fiber factor (simplex dimension 0).
    base_chart: Chart,
    /// Per dimension p: values in the order of `sset.all_simplices(p)`.
    values: Vec<Vec<V>>,
    /// Per dimension p: position lookup for `values[p]`.
    positions: Vec<BTreeMap<SimplexRef, usize>>,
}

impl<V: FormValue> SimplicialForm<V> {
    pub fn new(
        sset: Arc<FiniteSimplicialSet>,
        base_chart: Chart,
        values: Vec<Vec<V>>,
    ) -> Result<Self> {
        if base_chart.simplex_dim() != 0 {
            return Err(Error::ChartMismatch(
                "base chart must have simplex dimension 0".into(),
            ));
        }
        if values.len() != sset.truncation() + 1 {
            return Err(Error::Simplicial(
                "one value level per dimension up to truncation required".into(),
            ));
        }
        let positions: Vec<_> = (0..=sset.truncation())
            .map(|p| sset.simplex_positions(p))
            .collect();
        for p in 0..=sset.truncation() {
            if values[p].len() != positions[p].len() {
                return Err(Error::Simplicial(format!(
                    "dimension {p} needs one value per simplex"
                )));
            }
            let chart = base_chart.with_simplex_dim(p)?;
            for v in &values[p] {
                if v.chart() != &chart {
                    return Err(Error::ChartMismatch(format!(
                        "value in dimension {p} lives on the wrong chart"
                    )));
                }
            }
        }
        Ok(SimplicialForm {
            sset,
            base_chart,
            values,
            positions,
        })
    }

    /// Build by evaluating a function on every simplex.
    pub fn from_fn(
        sset: &Arc<FiniteSimplicialSet>,
        base_chart: &Chart,
        mut f: impl FnMut(&SimplexRef, &Chart) -> Result<V>,
    ) -> Result<Self> {
        let mut values = Vec::with_capacity(sset.truncation() + 1);
        for p in 0..=sset.truncation() {
            let chart = base_chart.with_simplex_dim(p)?;
            let mut level = Vec::new();
            for r in sset.all_simplices(p) {
                level.push(f(&r, &chart)?);
            }
            values.push(level);
        }
        SimplicialForm::new(sset.clone(), base_chart.clone(), values)
    }

    pub fn sset(&self) -> &Arc<FiniteSimplicialSet> {
        &self.sset
    }

    pub fn base_chart(&self) -> &Chart {
        &self.base_chart
    }

    pub fn chart_at(&self, p: usize) -> Result<Chart> {
        self.base_chart.with_simplex_dim(p)
    }

    pub fn value_at(&self, r: &SimplexRef) -> Result<&V> {
        let p = r.dim();
        let pos = self.positions[p]
            .get(r)
            .copied()
            .ok_or_else(|| Error::Simplicial(format!("no simplex {r:?} in dimension {p}")))?;
        Ok(&self.values[p][pos])
    }

    pub fn level(&self, p: usize) -> impl Iterator<Item = (&SimplexRef, &V)> {
        self.positions[p]
            .iter()
            .map(move |(r, &pos)| (r, &self.values[p][pos]))
    }

    pub fn map_values(&self, mut f: impl FnMut(usize, &V) -> Result<V>) -> Result<Self> {
        let mut values = Vec::with_capacity(self.values.len());
        for (p, level) in self.values.iter().enumerate() {
            values.push(level.iter().map(|v| f(p, v)).collect::<Result<Vec<_>>>()?);
        }
        SimplicialForm::new(self.sset.clone(), self.base_chart.clone(), values)
    }

    pub fn zip_with(&self, other: &Self, f: impl Fn(&V, &V) -> Result<V>) -> Result<Self> {
        self.check_same_family(other)?;
        let mut values = Vec::with_capacity(self.values.len());
        for (p, level) in self.values.iter().enumerate() {
            values.push(
                level
                    .iter()
                    .zip(&other.values[p])
                    .map(|(a, b)| f(a, b))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        SimplicialForm::new(self.sset.clone(), self.base_chart.clone(), values)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.sub(b))
    }

    pub fn neg(&self) -> Self {
        self.map_values(|_, v| Ok(v.neg())).expect("negation is total")
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map_values(|_, v| Ok(v.scale(c)))
            .expect("scaling is total")
    }

    pub fn exterior_d(&self, mode: DMode) -> Self {
        self.map_values(|_, v| Ok(v.exterior_d(mode)))
            .expect("d is total")
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|lvl| lvl.iter().all(|v| v.is_zero()))
    }

    /// The simplicial compatibility condition
    /// (delta^i x 1)^* omega_p = omega_{p-1} at the i-th face, on every
    /// stored simplex.
    pub fn check_compatibility(&self) -> Result<()> {
        for p in 1..=self.sset.truncation() {
            let chart = self.chart_at(p)?;
            let mut coface_maps = Vec::with_capacity(p + 1);
            for i in 0..=p {
                coface_maps.push(ChartMap::coface(&chart, i)?);
            }
            for (r, v) in self.level(p) {
                for i in 0..=p {
                    let restricted = v.pullback(&coface_maps[i])?;
                    let face_value = self.value_at(&self.sset.face(r, i)?)?;
                    if &restricted != face_value {
                        return Err(Error::Simplicial(format!(
                            "compatibility fails at {r:?} face {i}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_same_family(&self, other: &Self) -> Result<()> {
        if !Arc::ptr_eq(&self.sset, &other.sset) || self.base_chart != other.base_chart {
            return Err(Error::Simplicial(
                "simplicial forms live over different families".into(),
            ));
        }
        Ok(())
    }
}

impl SimplicialForm<DifferentialForm> {
    /// Wedge product of scalar-valued families, per simplex.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.wedge(b))
    }
}

/// A level-k cosimplicial coefficient family: a fiber form for every
/// k-simplex (degenerate ones included, independently).
#[derive(Clone)]
pub struct CosimplicialElement<V> {
    sset: Arc<FiniteSimplicialSet>,
    base_chart: Chart,
    level: usize,
    /// Indexed by the order of `sset.all_simplices(level)`.
    values: Vec<V>,
}

impl<V: FormValue> CosimplicialElement<V> {
    pub fn new(
        sset: Arc<FiniteSimplicialSet>,
        base_chart: Chart,
        level: usize,
        values: Vec<V>,
    ) -> Result<Self> {
        if base_chart.simplex_dim() != 0 {
            return Err(Error::ChartMismatch(
                "cosimplicial values live on the fiber chart".into(),
            ));
        }
        let expected = sset.all_simplices(level).len();
        if values.len() != expected {
            return Err(Error::Simplicial(format!(
                "level {level} needs {expected} values"
            )));
        }
        for v in &values {
            if v.chart() != &base_chart {
                return Err(Error::ChartMismatch(
                    "cosimplicial value on the wrong chart".into(),
                ));
            }
            if v.max_simplex_degree() != 0 {
                return Err(Error::ChartMismatch(
                    "cosimplicial values may not carry simplex generators".into(),
                ));
            }
        }
        Ok(CosimplicialElement {
            sset,
            base_chart,
            level,
            values,
        })
    }

    pub fn from_fn(
        sset: &Arc<FiniteSimplicialSet>,
        base_chart: &Chart,
        level: usize,
        mut f: impl FnMut(&SimplexRef) -> Result<V>,
    ) -> Result<Self> {
        let values = sset
            .all_simplices(level)
            .iter()
            .map(|r| f(r))
            .collect::<Result<Vec<_>>>()?;
        CosimplicialElement::new(sset.clone(), base_chart.clone(), level, values)
    }

    pub fn sset(&self) -> &Arc<FiniteSimplicialSet> {
        &self.sset
    }

    pub fn base_chart(&self) -> &Chart {
        &self.base_chart
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn values(&self) -> &[V] {
        &self.values
    }

    pub fn value_at(&self, r: &SimplexRef) -> Result<&V> {
        let pos = self
            .sset
            .simplex_positions(self.level)
            .get(r)
            .copied()
            .ok_or_else(|| {
                Error::Simplicial(format!("no simplex {r:?} at level {}", self.level))
            })?;
        Ok(&self.values[pos])
    }

    pub fn sample(&self) -> &V {
        &self.values[0]
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.level != other.level || !Arc::ptr_eq(&self.sset, &other.sset) {
            return Err(Error::Simplicial("cosimplicial mismatch".into()));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.sub(b))
            .collect::<Result<Vec<_>>>()?;
        CosimplicialElement::new(
            self.sset.clone(),
            self.base_chart.clone(),
            self.level,
            values,
        )
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }
}

impl<V: FormValue> PartialEq for CosimplicialElement<V> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.sset, &other.sset)
            && self.level == other.level
            && self.values == other.values
    }
}

impl<V: FormValue> PartialEq for SimplicialForm<V> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.sset, &other.sset)
            && self.base_chart == other.base_chart
            && self.values == other.values
    }
}

/// A simplicial map between finite simplicial sets, recorded on
/// nondegenerate simplices (images may be degenerate).
pub struct SimplicialMap {
    from: Arc<FiniteSimplicialSet>,
    to: Arc<FiniteSimplicialSet>,
    images: Vec<Vec<SimplexRef>>,
}

impl SimplicialMap {
    pub fn new(
        from: Arc<FiniteSimplicialSet>,
        to: Arc<FiniteSimplicialSet>,
        images: Vec<Vec<SimplexRef>>,
    ) -> Result<Self> {
        let map = SimplicialMap { from, to, images };
        // Naturality against faces on all stored simplices.
        for p in 1..=map.from.truncation() {
            for s in map.from.nondegenerate(p) {
                let r = SimplexRef::nondegenerate(s);
                for i in 0..=p {
                    let lhs = map.image(&map.from.face(&r, i)?)?;
                    let rhs = map.to.face(&map.image(&r)?, i)?;
                    if lhs != rhs {
                        return Err(Error::Simplicial(format!(
                            "map does not commute with face {i} at {}",
                            map.from.id_of(s)
                        )));
                    }
                }
            }
        }
        Ok(map)
    }

    /// Match simplices by id; the standard inclusion-style constructor.
    pub fn by_ids(from: &Arc<FiniteSimplicialSet>, to: &Arc<FiniteSimplicialSet>) -> Result<Self> {
        let mut images = Vec::new();
        for p in 0..=from.truncation() {
            let mut level = Vec::new();
            for s in from.nondegenerate(p) {
                let id = from.id_of(s);
                let target = to
                    .nondegenerate(p)
                    .find(|t| to.id_of(*t) == id)
                    .ok_or_else(|| {
                        Error::Simplicial(format!("no simplex named {id} in target"))
                    })?;
                level.push(SimplexRef::nondegenerate(target));
            }
            images.push(level);
        }
        SimplicialMap::new(from.clone(), to.clone(), images)
    }

    pub fn image(&self, r: &SimplexRef) -> Result<SimplexRef> {
        let base_image = &self.images[r.base.dim][r.base.index];
        let mut out = base_image.clone();
        for &j in r.word.iter().rev() {
            out = self.to.degeneracy(&out, j)?;
        }
        Ok(out)
    }

    /// Pull a simplicial form on the target back along the map.
    pub fn pullback<V: FormValue>(&self, form: &SimplicialForm<V>) -> Result<SimplicialForm<V>> {
        if !Arc::ptr_eq(form.sset(), &self.to) {
            return Err(Error::Simplicial("form not on the map's target".into()));
        }
        SimplicialForm::from_fn(&self.from, form.base_chart(), |r, _chart| {
            form.value_at(&self.image(r)?).cloned()
        })
    }

    /// Pull a cosimplicial element back along the map.
    pub fn pullback_cosimplicial<V: FormValue>(
        &self,
        a: &CosimplicialElement<V>,
    ) -> Result<CosimplicialElement<V>> {
        if !Arc::ptr_eq(a.sset(), &self.to) {
            return Err(Error::Simplicial("element not on the map's target".into()));
        }
        CosimplicialElement::from_fn(&self.from, a.base_chart(), a.level(), |r| {
            a.value_at(&self.image(r)?).cloned()
        })
    }
}
