//! Dupont's operators: the vertex-shrink homotopies h_(j), integration I,
//! the elementary-form extension E, and the chain homotopy s, together with
//! the cosimplicial differential.

use itertools::Itertools;

use crate::algebra::factorial;
use crate::dupont::simplicial::{CosimplicialElement, SimplicialForm};
use crate::dupont::sset::SimplexRef;
use crate::dupont::value::FormValue;
use crate::error::{Error, Result};
use crate::forms::{Chart, ChartMap, DifferentialForm};

/// A fresh interval name for the shrink homotopy that cannot collide with
/// chart variables (user charts name intervals t, s, ...).
fn fresh_interval(chart: &Chart) -> String {
    let mut i = 0;
    loop {
        let name = format!("_h{i}");
        if chart.universe().index_of(&name).is_none() {
            return name;
        }
        i += 1;
    }
}

/// h_(j) = int_0^1 i_{d/ds} (g_j x id)^* (.) ds for the homotopy
/// g_j(s, x) = s e_j + (1 - s) x. Drops the simplex degree by one and
/// preserves the fiber degree.
pub fn h_operator<V: FormValue>(j: usize, value: &V) -> Result<V> {
    let chart = value.chart().clone();
    if j > chart.simplex_dim() {
        return Err(Error::Domain(format!(
            "vertex {j} out of range on {chart}"
        )));
    }
    let s = fresh_interval(&chart);
    let shrink = ChartMap::shrink_to_vertex(&chart, j, &s)?;
    value.pullback(&shrink)?.homotopy_k(&s)
}

/// The elementary form of a strictly increasing phi: [i] -> [p]:
/// sum_j (-1)^j x_{phi(j)} dx_{phi(0)} ^ ... omit j ... ^ dx_{phi(i)}.
pub fn elementary_form(chart: &Chart, phi: &[usize]) -> Result<DifferentialForm> {
    let mut total = DifferentialForm::zero(chart);
    for j in 0..phi.len() {
        let mut term = DifferentialForm::coordinate(chart, &coord_name(phi[j]))?;
        if j % 2 == 1 {
            term = term.neg();
        }
        for (m, &v) in phi.iter().enumerate() {
            if m != j {
                term = term.wedge(&DifferentialForm::generator(chart, &coord_name(v))?)?;
            }
        }
        total = total.add(&term)?;
    }
    Ok(total)
}

fn coord_name(i: usize) -> String {
    if i == 0 {
        "x0".to_string()
    } else {
        format!("x{i}")
    }
}

/// I(omega) at level k: integrate the k-th layer over Delta^k, one value
/// per k-simplex (degenerate values are derived from compatibility).
pub fn dupont_i<V: FormValue>(
    form: &SimplicialForm<V>,
    k: usize,
) -> Result<CosimplicialElement<V>> {
    if k > form.sset().truncation() {
        return Err(Error::Simplicial(format!(
            "level {k} above truncation {}",
            form.sset().truncation()
        )));
    }
    let base_chart = form.base_chart().clone();
    CosimplicialElement::from_fn(form.sset(), &base_chart, k, |r| {
        let value = form.value_at(r)?;
        let (integrated, _) = value.simplex_degree_part(k).integrate_simplex()?;
        integrated.transfer_chart(&base_chart)
    })
}

/// The defining formula for I:
/// (-1)^k (e_k x id)^* (h_(k-1) o ... o h_(0)), cross-checkable against the
/// integral description.
pub fn dupont_i_via_homotopies<V: FormValue>(
    form: &SimplicialForm<V>,
    k: usize,
) -> Result<CosimplicialElement<V>> {
    let base_chart = form.base_chart().clone();
    CosimplicialElement::from_fn(form.sset(), &base_chart, k, |r| {
        let mut value = form.value_at(r)?.simplex_degree_part(k);
        for j in 0..k {
            value = h_operator(j, &value)?;
        }
        if k > 0 {
            let chart = value.chart().clone();
            let vertex = ChartMap::vertex(&chart, k)?;
            value = value.pullback(&vertex)?;
            if k % 2 == 1 {
                value = value.neg();
            }
        }
        value.transfer_chart(&base_chart)
    })
}

/// E at level k: the Whitney elementary-form extension
/// E(a)_p = k! sum_{phi: [k] into [p]} elem_phi ^ a[phi^* sigma].
pub fn dupont_e<V: FormValue>(a: &CosimplicialElement<V>) -> Result<SimplicialForm<V>> {
    let k = a.level();
    let sample = a.sample().clone();
    let k_fact = factorial(k as u64);
    SimplicialForm::from_fn(a.sset(), a.base_chart(), |r, chart| {
        let p = r.dim();
        let zero = sample.zero_like_on(chart);
        if p < k {
            return Ok(zero);
        }
        let mut acc = zero;
        for phi in (0..=p).combinations(k + 1) {
            let elem = elementary_form(chart, &phi)?;
            let pulled = a.value_at(&a.sset().structure_map(r, &phi)?)?;
            let extended = pulled.transfer_chart(chart)?;
            acc = acc.add(&extended.wedge_form_left(&elem)?)?;
        }
        Ok(acc.scale(&k_fact))
    })
}

/// The chain homotopy s:
/// s(omega)_p = sum_{i=0}^{k-1} i! sum_{phi: [i] into [p]}
///               elem_phi ^ h_(phi(i)) o ... o h_(phi(0)) (omega_p),
/// applied per simplex-degree-k component.
pub fn dupont_s<V: FormValue>(form: &SimplicialForm<V>) -> Result<SimplicialForm<V>> {
    form.map_values(|p, value| {
        let chart = value.chart().clone();
        let mut acc = value.zero_like_on(&chart);
        for k in 1..=value.max_simplex_degree() {
            let part = value.simplex_degree_part(k);
            if part.is_zero() {
                continue;
            }
            for i in 0..k {
                let i_fact = factorial(i as u64);
                for phi in (0..=p).combinations(i + 1) {
                    let mut h_applied = part.clone();
                    for &vertex in &phi {
                        h_applied = h_operator(vertex, &h_applied)?;
                    }
                    if h_applied.is_zero() {
                        continue;
                    }
                    let elem = elementary_form(&chart, &phi)?;
                    acc = acc.add(&h_applied.wedge_form_left(&elem)?.scale(&i_fact))?;
                }
            }
        }
        Ok(acc)
    })
}

/// delta = sum_i (-1)^i d_i^* on cosimplicial elements.
pub fn cosimplicial_delta<V: FormValue>(
    a: &CosimplicialElement<V>,
) -> Result<CosimplicialElement<V>> {
    let level = a.level() + 1;
    if level > a.sset().truncation() {
        return Err(Error::Simplicial(format!(
            "delta above truncation: level {level}"
        )));
    }
    CosimplicialElement::from_fn(a.sset(), a.base_chart(), level, |r| {
        let mut acc: Option<V> = None;
        for i in 0..=level {
            let mut term = a.value_at(&a.sset().face(r, i)?)?.clone();
            if i % 2 == 1 {
                term = term.neg();
            }
            acc = Some(match acc {
                None => term,
                Some(prev) => prev.add(&term)?,
            });
        }
        Ok(acc.expect("at least one face"))
    })
}

