//! Value-level chart descriptors. A chart fixes the simplex dimension and
//! the interval / parameter / nilpotent variables of the coefficient ring;
//! forms on different charts never silently coerce.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{VarKind, VarSpec, VarUniverse};
use crate::error::{Error, Result};

#[derive(Debug, PartialEq, Eq)]
struct ChartData {
    simplex_dim: usize,
    intervals: Vec<String>,
    params: Vec<String>,
    nilpotents: Vec<(String, u32)>,
    universe: VarUniverse,
    /// Universe indices of the variables carrying a differential, in the
    /// canonical generator order: dx_1..dx_p, then interval, then parameter.
    generators: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Chart(Arc<ChartData>);

impl PartialEq for Chart {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Chart {}

impl Chart {
    pub fn new(
        simplex_dim: usize,
        intervals: &[&str],
        params: &[&str],
        nilpotents: &[(&str, u32)],
    ) -> Result<Self> {
        let mut vars = Vec::new();
        for i in 1..=simplex_dim {
            vars.push(VarSpec {
                name: format!("x{i}"),
                kind: VarKind::Simplex(i as u32),
            });
        }
        for t in intervals {
            vars.push(VarSpec {
                name: (*t).into(),
                kind: VarKind::Interval,
            });
        }
        for y in params {
            vars.push(VarSpec {
                name: (*y).into(),
                kind: VarKind::Parameter,
            });
        }
        for (e, cap) in nilpotents {
            vars.push(VarSpec {
                name: (*e).into(),
                kind: VarKind::Nilpotent { cap: *cap },
            });
        }
        let universe = VarUniverse::new(vars)?;
        let generators = universe
            .vars()
            .iter()
            .enumerate()
            .filter(|(_, v)| !matches!(v.kind, VarKind::Nilpotent { .. }))
            .map(|(i, _)| i)
            .collect::<Vec<_>>();
        if generators.len() > 63 {
            return Err(Error::ChartMismatch("too many differential generators".into()));
        }
        Ok(Chart(Arc::new(ChartData {
            simplex_dim,
            intervals: intervals.iter().map(|s| s.to_string()).collect(),
            params: params.iter().map(|s| s.to_string()).collect(),
            nilpotents: nilpotents
                .iter()
                .map(|(s, c)| (s.to_string(), *c))
                .collect(),
            universe,
            generators,
        })))
    }

    /// Plain simplex chart Delta^p with no extra factors.
    pub fn simplex(p: usize) -> Self {
        Chart::new(p, &[], &[], &[]).expect("simplex chart is well formed")
    }

    pub fn simplex_dim(&self) -> usize {
        self.0.simplex_dim
    }

    pub fn intervals(&self) -> &[String] {
        &self.0.intervals
    }

    pub fn params(&self) -> &[String] {
        &self.0.params
    }

    pub fn nilpotents(&self) -> &[(String, u32)] {
        &self.0.nilpotents
    }

    pub fn universe(&self) -> &VarUniverse {
        &self.0.universe
    }

    pub fn generators(&self) -> &[usize] {
        &self.0.generators
    }

    pub fn num_generators(&self) -> usize {
        self.0.generators.len()
    }

    /// Position of a universe variable in the generator list.
    pub fn generator_slot(&self, var_idx: usize) -> Option<usize> {
        self.0.generators.iter().position(|&g| g == var_idx)
    }

    pub fn generator_slot_named(&self, name: &str) -> Option<usize> {
        self.universe()
            .index_of(name)
            .and_then(|idx| self.generator_slot(idx))
    }

    /// Kind of the variable behind generator slot `slot`.
    pub fn generator_kind(&self, slot: usize) -> VarKind {
        self.universe().spec(self.0.generators[slot]).kind
    }

    pub fn generator_name(&self, slot: usize) -> &str {
        &self.universe().spec(self.0.generators[slot]).name
    }

    /// Same chart with a different simplex dimension.
    pub fn with_simplex_dim(&self, p: usize) -> Result<Self> {
        Chart::new(
            p,
            &self.str_intervals(),
            &self.str_params(),
            &self.str_nilpotents(),
        )
    }

    /// Same chart with an extra interval variable appended.
    pub fn with_interval(&self, name: &str) -> Result<Self> {
        if self.universe().index_of(name).is_some() {
            return Err(Error::ChartMismatch(format!(
                "variable `{name}` already present in chart"
            )));
        }
        let mut intervals = self.str_intervals();
        intervals.push(name);
        Chart::new(
            self.simplex_dim(),
            &intervals,
            &self.str_params(),
            &self.str_nilpotents(),
        )
    }

    /// Same chart with one interval variable removed.
    pub fn without_interval(&self, name: &str) -> Result<Self> {
        if !self.0.intervals.iter().any(|t| t == name) {
            return Err(Error::ChartMismatch(format!(
                "no interval variable `{name}` in chart"
            )));
        }
        let intervals: Vec<&str> = self
            .0
            .intervals
            .iter()
            .filter(|t| t.as_str() != name)
            .map(|t| t.as_str())
            .collect();
        Chart::new(
            self.simplex_dim(),
            &intervals,
            &self.str_params(),
            &self.str_nilpotents(),
        )
    }

    fn str_intervals(&self) -> Vec<&str> {
        self.0.intervals.iter().map(|s| s.as_str()).collect()
    }

    fn str_params(&self) -> Vec<&str> {
        self.0.params.iter().map(|s| s.as_str()).collect()
    }

    fn str_nilpotents(&self) -> Vec<(&str, u32)> {
        self.0
            .nilpotents
            .iter()
            .map(|(s, c)| (s.as_str(), *c))
            .collect()
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Delta^{}", self.simplex_dim())?;
        for t in self.intervals() {
            write!(f, " x I({t})")?;
        }
        if !self.params().is_empty() {
            write!(f, " x Y({})", self.params().join(","))?;
        }
        if !self.nilpotents().is_empty() {
            let names: Vec<&str> = self.nilpotents().iter().map(|(n, _)| n.as_str()).collect();
            write!(f, " [{}]", names.join(","))?;
        }
        Ok(())
    }
}
