//! The chain-homotopy-equivalence identities for I, E, s on seeded corpora,
//! plus the h-operator lemma they rest on.

use std::sync::Arc;

use scw_core::algebra::Rational;
use scw_core::corpus;
use scw_core::dupont::{
    cosimplicial_delta, dupont_e, dupont_i, dupont_i_via_homotopies, dupont_s, h_operator,
    standard_simplex, CosimplicialElement, SimplicialForm, SimplicialMap,
};
use scw_core::forms::{Chart, ChartMap, DMode, DifferentialForm};

#[test]
fn h_operator_examples() {
    // h_(0)(dx1) on Delta^1 is -x1; h of any 0-form is 0.
    let c = Chart::simplex(1);
    let dx1 = DifferentialForm::generator(&c, "x1").unwrap();
    let h = h_operator(0, &dx1).unwrap();
    let expect = DifferentialForm::coordinate(&c, "x1").unwrap().neg();
    assert_eq!(h, expect);

    let f = DifferentialForm::coordinate(&c, "x1").unwrap();
    assert!(h_operator(1, &f).unwrap().is_zero());
}

#[test]
fn h_operator_lemma() {
    // h_(j) d_Delta + d_Delta h_(j) = (e_j x id)^* - id on sampled forms.
    let mut rng = corpus::rng(07321);
    let chart = Chart::new(2, &[], &["y1"], &[]).unwrap();
    for _ in 0..20 {
        let mut w = DifferentialForm::from_poly(
            &chart,
            corpus::random_poly(&mut rng, chart.universe(), 3, 3),
        )
        .unwrap();
        // Sprinkle generators to vary the degree.
        for name in ["x1", "y1"] {
            if rand::Rng::gen_bool(&mut rng, 0.5) {
                w = w
                    .wedge(&DifferentialForm::generator(&chart, name).unwrap())
                    .unwrap();
            }
        }
        for j in 0..=2 {
            let lhs = h_operator(j, &w.exterior_d(DMode::SimplexOnly))
                .unwrap()
                .add(&h_operator(j, &w).unwrap().exterior_d(DMode::SimplexOnly))
                .unwrap();
            let vertex = ChartMap::vertex(&chart, j).unwrap();
            let rhs = vertex.apply(&w).unwrap().sub(&w).unwrap();
            assert_eq!(lhs, rhs, "vertex {j}");
        }
    }
}

#[test]
fn h_commutes_with_fiber_d() {
    // h_(j) d_Y + d_Y h_(j) = 0.
    let mut rng = corpus::rng(5150);
    let chart = Chart::new(2, &[], &["y1", "y2"], &[]).unwrap();
    for _ in 0..10 {
        let w = DifferentialForm::from_poly(
            &chart,
            corpus::random_poly(&mut rng, chart.universe(), 3, 3),
        )
        .unwrap()
        .wedge(&DifferentialForm::generator(&chart, "y1").unwrap())
        .unwrap();
        for j in 0..=2 {
            let anti = h_operator(j, &w.exterior_d(DMode::FiberOnly))
                .unwrap()
                .add(&h_operator(j, &w).unwrap().exterior_d(DMode::FiberOnly))
                .unwrap();
            assert!(anti.is_zero(), "vertex {j}");
        }
    }
}

#[test]
fn e_on_the_interval_edge() {
    // k = 1 on Delta[1]: E(a)_1 = (x0 dx1 - x1 dx0) a = dx1 a.
    let sset = Arc::new(standard_simplex(1, 2));
    let fiber = corpus::corpus_fiber_chart();
    let mut rng = corpus::rng(9);
    let a = corpus::random_cosimplicial(&mut rng, &sset, &fiber, 1, 0).unwrap();
    let e = dupont_e(&a).unwrap();
    let edge_chart = e.chart_at(1).unwrap();
    let edge_ref = scw_core::dupont::SimplexRef::nondegenerate(scw_core::dupont::SimplexId {
        dim: 1,
        index: 0,
    });
    let a_edge = a.value_at(&edge_ref).unwrap().transfer_chart(&edge_chart).unwrap();
    let expect = DifferentialForm::generator(&edge_chart, "x1")
        .unwrap()
        .wedge(&a_edge)
        .unwrap();
    assert_eq!(e.value_at(&edge_ref).unwrap(), &expect);
}

#[test]
fn e_output_is_compatible() {
    let fiber = corpus::corpus_fiber_chart();
    let mut rng = corpus::rng(20);
    for sset in corpus::dupont_bases(3) {
        for level in 0..=2usize {
            let a = corpus::random_cosimplicial(&mut rng, &sset, &fiber, level, 1).unwrap();
            let e = dupont_e(&a).unwrap();
            e.check_compatibility()
                .unwrap_or_else(|err| panic!("{}: {err}", sset.name()));
        }
    }
}

#[test]
fn i_formulas_agree_and_i_e_is_identity() {
    let fiber = corpus::corpus_fiber_chart();
    let mut rng = corpus::rng(31);
    for sset in corpus::dupont_bases(3) {
        for k in 0..=2usize {
            for l in 0..=1usize {
                let w = corpus::random_simplicial_form(&mut rng, &sset, &fiber, k, l).unwrap();
                let by_integral = dupont_i(&w, k).unwrap();
                let by_homotopies = dupont_i_via_homotopies(&w, k).unwrap();
                assert!(
                    by_integral == by_homotopies,
                    "I formulas disagree on {} at ({k},{l})",
                    sset.name()
                );

                let a = corpus::random_cosimplicial(&mut rng, &sset, &fiber, k, l).unwrap();
                let back = dupont_i(&dupont_e(&a).unwrap(), k).unwrap();
                assert!(back == a, "I(E(a)) != a on {} at ({k},{l})", sset.name());
            }
        }
    }
}

#[test]
fn dupont_identity_chain() {
    // (1) I d_Delta = delta I, (2) d_Delta E = E delta, (4) EI - id = s d + d s
    // and s d_Y = d_Y s, on one base with a couple of bidegrees.
    let fiber = corpus::corpus_fiber_chart();
    let mut rng = corpus::rng(42);
    let sset = Arc::new(standard_simplex(2, 3));

    for (k, l) in [(1usize, 0usize), (1, 1), (2, 1)] {
        let w = corpus::random_simplicial_form(&mut rng, &sset, &fiber, k, l).unwrap();

        // (1)
        let lhs = dupont_i(&w.exterior_d(DMode::SimplexOnly), k + 1).unwrap();
        let rhs = cosimplicial_delta(&dupont_i(&w, k).unwrap()).unwrap();
        assert!(lhs == rhs, "(1) fails at ({k},{l})");

        // (4) first part
        let ei = dupont_e(&dupont_i(&w, k).unwrap()).unwrap();
        let s_d = dupont_s(&w.exterior_d(DMode::SimplexOnly)).unwrap();
        let d_s = dupont_s(&w).unwrap().exterior_d(DMode::SimplexOnly);
        let lhs4 = ei.sub(&w).unwrap();
        let rhs4 = s_d.add(&d_s).unwrap();
        assert!(lhs4 == rhs4, "(4) fails at ({k},{l})");

        // s commutes with the fiber differential.
        let s_dy = dupont_s(&w.exterior_d(DMode::FiberOnly)).unwrap();
        let dy_s = dupont_s(&w).unwrap().exterior_d(DMode::FiberOnly);
        assert!(s_dy == dy_s, "s d_Y != d_Y s at ({k},{l})");
    }

    // (2) on cosimplicial elements.
    for (k, l) in [(0usize, 0usize), (1, 1)] {
        let a = corpus::random_cosimplicial(&mut rng, &sset, &fiber, k, l).unwrap();
        let lhs = dupont_e(&a).unwrap().exterior_d(DMode::SimplexOnly);
        let rhs = dupont_e(&cosimplicial_delta(&a).unwrap()).unwrap();
        assert!(lhs == rhs, "(2) fails at ({k},{l})");
    }
}

#[test]
fn delta_squares_to_zero() {
    let fiber = corpus::corpus_fiber_chart();
    let mut rng = corpus::rng(77);
    for sset in corpus::dupont_bases(4) {
        let a = corpus::random_cosimplicial(&mut rng, &sset, &fiber, 1, 1).unwrap();
        let dd = cosimplicial_delta(&cosimplicial_delta(&a).unwrap()).unwrap();
        assert!(dd.is_zero(), "delta^2 != 0 on {}", sset.name());
    }
}

#[test]
fn constant_element_telescopes() {
    // delta of a constant 0-element assigns (number of odd faces minus even
    // faces) copies; on Delta[1] edges that totals zero against the two
    // distinct endpoints.
    let sset = Arc::new(standard_simplex(1, 2));
    let fiber = corpus::corpus_fiber_chart();
    let c = DifferentialForm::scalar(&fiber, Rational::from_int(1));
    let a = CosimplicialElement::from_fn(&sset, &fiber, 0, |_| Ok(c.clone())).unwrap();
    let d = cosimplicial_delta(&a).unwrap();
    assert!(d.is_zero());
}

#[test]
fn s_kills_simplex_degree_zero() {
    let fiber = corpus::corpus_fiber_chart();
    let mut rng = corpus::rng(99);
    let sset = Arc::new(standard_simplex(2, 3));
    let w = corpus::random_simplicial_form(&mut rng, &sset, &fiber, 0, 1).unwrap();
    assert!(dupont_s(&w).unwrap().is_zero());
}

#[test]
fn naturality_along_inclusion() {
    // I, E, s commute with the pullback along the inclusion of the boundary
    // into Delta[2].
    let fiber = corpus::corpus_fiber_chart();
    let mut rng = corpus::rng(123);
    let big: Arc<_> = Arc::new(standard_simplex(2, 3));
    let small: Arc<_> = Arc::new(scw_core::dupont::boundary_delta2(3));
    let incl = SimplicialMap::by_ids(&small, &big).unwrap();

    let w = corpus::random_simplicial_form(&mut rng, &big, &fiber, 1, 1).unwrap();
    let pulled: SimplicialForm<DifferentialForm> = incl.pullback(&w).unwrap();
    pulled.check_compatibility().unwrap();

    // I
    let lhs = dupont_i(&pulled, 1).unwrap();
    let rhs = incl.pullback_cosimplicial(&dupont_i(&w, 1).unwrap()).unwrap();
    assert!(lhs == rhs, "I not natural");

    // s
    let lhs = dupont_s(&pulled).unwrap();
    let rhs = incl.pullback(&dupont_s(&w).unwrap()).unwrap();
    assert!(lhs == rhs, "s not natural");

    // E
    let a = corpus::random_cosimplicial(&mut rng, &big, &fiber, 1, 1).unwrap();
    let lhs = dupont_e(&incl.pullback_cosimplicial(&a).unwrap()).unwrap();
    let rhs = incl.pullback(&dupont_e(&a).unwrap()).unwrap();
    assert!(lhs == rhs, "E not natural");
}
