//! Deterministic seeded corpora for property checks and verification
//! suites. Everything is generated from a `ChaCha8Rng` so that identical
//! seeds reproduce identical cases across runs and machines.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{PolyElement, Rational, VarKind};
use crate::dupont::{
    boundary_delta2, dupont_e, nerve_z2, standard_simplex, CosimplicialElement,
    FiniteSimplicialSet, SimplicialForm,
};
use crate::error::Result;
use crate::forms::{Chart, DMode, DifferentialForm};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num = rng.gen_range(-4i64..=4);
    let den = rng.gen_range(1i64..=3);
    Rational::new(num, den)
}

pub fn nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let r = small_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Random polynomial with a handful of low-degree terms.
pub fn random_poly(
    rng: &mut ChaCha8Rng,
    universe: &crate::algebra::VarUniverse,
    max_terms: usize,
    max_degree: u32,
) -> PolyElement {
    let n = universe.len();
    let terms = rng.gen_range(1..=max_terms.max(1));
    let mut out = Vec::new();
    for _ in 0..terms {
        let mut exps = vec![0u32; n];
        let mut budget = max_degree;
        for v in 0..n {
            if budget == 0 {
                break;
            }
            let cap = match universe.spec(v).kind {
                VarKind::Nilpotent { cap } => cap.min(budget),
                _ => budget.min(2),
            };
            let e = rng.gen_range(0..=cap);
            exps[v] = e;
            budget -= e;
        }
        out.push((exps, small_rational(rng)));
    }
    PolyElement::from_terms(universe, out).expect("well-formed exponents")
}

/// Random fiber form of the exact fiber degree `l` on a chart with
/// simplex dimension 0 (no dx generators available).
pub fn random_fiber_form(rng: &mut ChaCha8Rng, chart: &Chart, l: usize) -> DifferentialForm {
    let gens = chart.num_generators();
    let mut form = DifferentialForm::zero(chart);
    if l > gens {
        return form;
    }
    // A couple of random generator subsets with random coefficients.
    let picks = rng.gen_range(1..=2);
    for _ in 0..picks {
        let mut slots: Vec<usize> = (0..gens).collect();
        for i in (1..slots.len()).rev() {
            let j = rng.gen_range(0..=i);
            slots.swap(i, j);
        }
        let mut term = DifferentialForm::from_poly(
            chart,
            random_poly(rng, chart.universe(), 2, 2),
        )
        .expect("same universe");
        let mut chosen = slots[..l].to_vec();
        chosen.sort_unstable();
        for slot in chosen {
            let gen = DifferentialForm::generator(chart, chart.generator_name(slot))
                .expect("generator exists");
            term = term.wedge(&gen).expect("same chart");
        }
        form = form.add(&term).expect("same chart");
    }
    form
}

/// Random level-k cosimplicial element with fiber degree l: independent
/// random values for every k-simplex (degenerate ones included).
pub fn random_cosimplicial(
    rng: &mut ChaCha8Rng,
    sset: &Arc<FiniteSimplicialSet>,
    base_chart: &Chart,
    level: usize,
    fiber_degree: usize,
) -> Result<CosimplicialElement<DifferentialForm>> {
    CosimplicialElement::from_fn(sset, base_chart, level, |_r| {
        Ok(random_fiber_form(rng, base_chart, fiber_degree))
    })
}

/// A random compatible simplicial form of homogeneous bidegree, built in
/// the image of the operator algebra (sums of E's, wedges of two E's, and
/// simplex differentials of E's), so compatibility holds by construction.
pub fn random_simplicial_form(
    rng: &mut ChaCha8Rng,
    sset: &Arc<FiniteSimplicialSet>,
    base_chart: &Chart,
    delta_degree: usize,
    fiber_degree: usize,
) -> Result<SimplicialForm<DifferentialForm>> {
    let n = sset.truncation();
    let shape = rng.gen_range(0..3u8);
    match shape {
        // E of a random element.
        0 if delta_degree <= n => {
            let a = random_cosimplicial(rng, sset, base_chart, delta_degree, fiber_degree)?;
            dupont_e(&a)
        }
        // d_Delta E of a random element one degree down.
        1 if delta_degree >= 1 => {
            let a =
                random_cosimplicial(rng, sset, base_chart, delta_degree - 1, fiber_degree)?;
            Ok(dupont_e(&a)?.exterior_d(DMode::SimplexOnly))
        }
        // E(a) ^ E(b) with degrees split.
        _ => {
            let ka = rng.gen_range(0..=delta_degree.min(n));
            let kb = delta_degree - ka;
            if kb > n {
                let a = random_cosimplicial(rng, sset, base_chart, delta_degree, fiber_degree)?;
                return dupont_e(&a);
            }
            let la = rng.gen_range(0..=fiber_degree);
            let lb = fiber_degree - la;
            let a = random_cosimplicial(rng, sset, base_chart, ka, la)?;
            let b = random_cosimplicial(rng, sset, base_chart, kb, lb)?;
            dupont_e(&a)?.wedge(&dupont_e(&b)?)
        }
    }
}

/// The corpus bases named by the verification suites: standard simplices,
/// the boundary of Delta[2], and the nerve of Z/2.
pub fn dupont_bases(truncation: usize) -> Vec<Arc<FiniteSimplicialSet>> {
    vec![
        Arc::new(standard_simplex(1, truncation)),
        Arc::new(standard_simplex(2, truncation)),
        Arc::new(standard_simplex(3, truncation)),
        Arc::new(boundary_delta2(truncation)),
        Arc::new(nerve_z2(truncation)),
    ]
}

/// Standard fiber chart for corpus forms: two parameters and one nilpotent.
pub fn corpus_fiber_chart() -> Chart {
    Chart::new(0, &[], &["y1", "y2"], &[("e1", 1)]).expect("fiber chart")
}
