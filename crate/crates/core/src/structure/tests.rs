use super::*;
use crate::different::{kaehler_different, GradedIdealView};
use crate::error::Error;
use crate::testutil::*;

fn ags_x() -> SchemeSpec {
    components(q(), 3, &AGS_X)
}

fn ags_y() -> SchemeSpec {
    components(q(), 3, &AGS_Y)
}

#[test]
fn frame_dimensions_follow_hilbert_function() {
    let x = ags_x();
    let f = itilde_frame(&x);
    let dims: Vec<usize> = f.images.iter().map(|v| v.dim()).collect();
    assert_eq!(dims, vec![1, 4, 5]);
    assert_eq!(f.top(), 2);
    for (i, m) in f.matrices.iter().enumerate() {
        assert_eq!(m.nrows(), x.hilbert.value(i));
        assert!(f.bases[i].iter().all(|b| b.degree() as usize == i));
    }
    let one = points(q(), 2, &[&[1, 3, 4]]);
    let f = itilde_frame(&one);
    assert_eq!(f.images.len(), 1);
    assert_eq!(f.images[0].dim(), 1);
}

#[test]
fn ags_x_conductor_and_cb() {
    let x = ags_x();
    let c = conductor(&x).unwrap();
    assert_eq!(c.point_degrees, Some(vec![2, 2, 2, 2]));
    assert_eq!(c.len_tilde_over_r, 5);
    assert_eq!(c.len_r_over_f, 5);
    assert_eq!(c.len_tilde_over_f, 10);
    assert_eq!(c.dims(), vec![0, 0, 5]);
    let cb = cb_test(&x).unwrap();
    assert!(cb.is_cb);
    assert!(cb.consistency_failures.is_empty());
}

#[test]
fn ags_y_conductor() {
    let y = ags_y();
    let c = conductor(&y).unwrap();
    assert_eq!(c.point_degrees, Some(vec![2, 2, 1, 2]));
    assert_eq!(c.len_tilde_over_f, 9);
    assert_eq!(c.len_tilde_over_r, 5);
    assert_eq!(c.len_r_over_f, 4);
    assert!(!cb_test(&y).unwrap().is_cb);
}

#[test]
fn conductor_pieces_are_ideals() {
    for x in [ags_x(), ags_y(), components(q(), 2, &TWOCUBICS), components(q(), 3, &EXAMPLE_B_COMPONENTS)] {
        let c = conductor(&x).unwrap();
        let r = x.regularity_index();
        assert_eq!(c.pieces[r].dim(), x.degree());
        for i in 0..=r {
            if i > 0 {
                assert!(c.pieces[i].contains_subspace(&c.pieces[i - 1]));
            }
            assert_eq!(x.s.ideal_closure(&c.pieces[i]).dim(), c.pieces[i].dim());
        }
    }
}

#[test]
fn ags_y_separator_of_p3() {
    let y = ags_y();
    let sep = separators(&y, 2).unwrap();
    assert_eq!(sep.separators.len(), 1);
    assert_eq!(sep.min_degree(), 1);
    // the minimal separator is X2 − X3 modulo I_Y
    let expected = y.i_x.normal_form(&poly(&y, "X2 - X3"));
    let got = y.i_x.normal_form(&sep.separators[0].minimal);
    assert_eq!(got.monic(), expected.monic());
    assert_eq!(sep.separators[0].full.degree(), Some(2));
    let p4 = separators(&y, 3).unwrap();
    assert_eq!(p4.max_degree(), 2);
}

#[test]
fn ags_x_separators_have_degree_two() {
    let x = ags_x();
    for j in 0..4 {
        let sep = separators(&x, j).unwrap();
        assert_eq!(sep.max_degree(), 2, "component {j}");
    }
}

#[test]
fn separators_of_rational_points_evaluate_to_kronecker_delta() {
    let x = points(q(), 2, &[&[1, 0, 0], &[1, 1, 0], &[1, 0, 1], &[1, 2, 3], &[1, -1, 4]]);
    let coords: Vec<_> = x.components.iter().map(|c| c.coords.clone().unwrap()).collect();
    for j in 0..coords.len() {
        let f = &separators(&x, j).unwrap().separators[0].full;
        for (k, p) in coords.iter().enumerate() {
            let v = f.evaluate(p).unwrap();
            assert_eq!(v.is_one(), j == k);
            assert_eq!(v.is_zero(), j != k);
        }
    }
}

#[test]
fn separators_reconstruct_forms() {
    // g = Σ g(p_j) x0^(i − r) f_j for g of degree i >= r_X
    let x = points(q(), 2, &[&[1, 0, 0], &[1, 1, 0], &[1, 0, 1], &[1, 2, 3]]);
    let r = x.regularity_index();
    let seps: Vec<Polynomial> = (0..4).map(|j| separators(&x, j).unwrap().separators[0].full.clone()).collect();
    for (text, i) in [("X1^2 - 3*X0*X2", 2usize), ("X0*X1*X2 + X2^3 - 5*X1^3", 3)] {
        let g = poly(&x, text);
        let mut acc = x.ring().zero();
        for (j, f) in seps.iter().enumerate() {
            let c = g.evaluate(x.components[j].coords.as_ref().unwrap()).unwrap();
            let shift = Monomial::variable(x.ring().nvars, 0).with_exponent(0, (i - r) as u16);
            acc = &acc + &f.mul_monomial(&shift).scale(&c);
        }
        assert!(x.i_x.contains(&(&acc - &g)), "{text}");
    }
}

#[test]
fn mu_values() {
    let x = points(q(), 2, &[&[1, 0, 0], &[1, 1, 0], &[1, 0, 1], &[1, 1, 1]]);
    let r = x.regularity_index();
    let cb = cb_test(&x).unwrap();
    assert!(cb.is_cb);
    for j in 0..4 {
        assert_eq!(mu_value(&x, j, &[q().one()]).unwrap(), r);
    }
    assert!(matches!(mu_value(&x, 0, &[q().zero()]), Err(Error::InvalidInput(_))));
    let raw = raw(q(), 2, &MONOMIAL_CI);
    assert!(matches!(mu_value(&raw, 0, &[q().one()]), Err(Error::NoComponentData(_))));
}

#[test]
fn non_gorenstein_separators_are_unsupported() {
    let x = components(q(), 3, &EXAMPLE_A_COMPONENTS_P3);
    assert!(matches!(separators(&x, 0), Err(Error::Unsupported(_))));
}

/// Example (a) lives in P²; its first component has a two-dimensional socle.
const EXAMPLE_A_COMPONENTS_P3: [&[&str]; 1] = [&["X1^2", "X1*X2", "X2^2", "X3"]];

#[test]
fn twocubics_classification() {
    let x = components(q(), 2, &TWOCUBICS);
    let rep = classify(&x).unwrap();
    assert!(rep.consistency_failures.is_empty(), "{:?}", rep.consistency_failures);
    assert!(rep.is_cb);
    assert_eq!(rep.point_degrees, Some(vec![4, 4, 4, 4]));
    assert_eq!(rep.ci_witness, 1);
    assert!(rep.is_ci);
    assert!(rep.is_arith_gorenstein);
    assert!(rep.is_locally_ci);
}

#[test]
fn example_a_is_not_gorenstein() {
    let x = raw(q(), 2, &EXAMPLE_A);
    let rep = classify(&x).unwrap();
    assert!(rep.consistency_failures.is_empty(), "{:?}", rep.consistency_failures);
    assert_eq!(rep.noether_at_r, 0);
    assert!(!rep.is_arith_gorenstein);
    assert!(!rep.is_locally_gorenstein);
    assert!(!rep.is_ci);
    let y = components(q(), 2, &EXAMPLE_A_COMPONENTS);
    let rep = classify(&y).unwrap();
    assert!(rep.consistency_failures.is_empty(), "{:?}", rep.consistency_failures);
    assert!(!rep.is_arith_gorenstein);
}

#[test]
fn example_b_is_arithmetically_gorenstein() {
    for x in [raw(q(), 3, &EXAMPLE_B), components(q(), 3, &EXAMPLE_B_COMPONENTS)] {
        let rep = classify(&x).unwrap();
        assert!(rep.consistency_failures.is_empty(), "{:?}", rep.consistency_failures);
        assert_eq!(x.regularity_index(), 2);
        assert_eq!(rep.noether_at_r, 1);
        assert!(rep.is_arith_gorenstein);
        assert_eq!(rep.arith_gorenstein_criterion, Some("noether-different"));
        assert!(!rep.is_ci);
    }
    let x = components(q(), 3, &EXAMPLE_B_COMPONENTS);
    assert_eq!(conductor(&x).unwrap().point_degrees, Some(vec![2, 2, 2]));
}

#[test]
fn ags_examples_classification() {
    let rep = classify(&ags_x()).unwrap();
    assert!(rep.consistency_failures.is_empty(), "{:?}", rep.consistency_failures);
    assert!(rep.is_generic && rep.is_arith_gorenstein);
    assert_eq!(rep.ags_lengths, (5, 5));
    let rep = classify(&ags_y()).unwrap();
    assert!(rep.consistency_failures.is_empty(), "{:?}", rep.consistency_failures);
    assert!(rep.is_generic && rep.is_locally_gorenstein && !rep.is_arith_gorenstein);
    assert_eq!(rep.ags_lengths, (5, 4));
}

#[test]
fn raw_and_component_classifications_agree() {
    let a = classify(&raw(q(), 2, &TWO_CUBICS)).unwrap();
    assert!(a.consistency_failures.is_empty(), "{:?}", a.consistency_failures);
    assert!(a.is_ci && a.point_degrees.is_none());
    let b = classify(&raw(q(), 2, &MONOMIAL_CI)).unwrap();
    assert!(b.consistency_failures.is_empty(), "{:?}", b.consistency_failures);
    assert!(b.is_ci && b.is_cb);
}

#[test]
fn genpos_six_points_on_boundary() {
    let x = points(q(), 2, &[&[1, 0, 0], &[1, 1, 0], &[1, 0, 1], &[1, 2, 3], &[1, -1, 4], &[1, 5, -2]]);
    let c = genpos_equivalence_check(&x, false).unwrap();
    assert!(c.generic_boundary && c.kaehler_pattern && c.cb_conductor_power && c.consistent);
    let one = points(q(), 2, &[&[1, 3, 4]]);
    let c = genpos_equivalence_check(&one, false).unwrap();
    assert!(c.consistent && c.generic_boundary);
}

#[test]
fn genpos_complete_intersection_of_four_points() {
    let x = raw(q(), 2, &["X1^2 - X0^2", "X2^2 - X0^2"]);
    let c = genpos_equivalence_check(&x, true).unwrap();
    assert!(!c.generic_boundary && !c.kaehler_pattern && c.consistent);
    let p = c.common_zeros.unwrap();
    assert_eq!(p.alpha, 2);
    assert!(p.consistent);
    assert!(matches!(
        genpos_equivalence_check(&raw(q(), 2, &MONOMIAL_CI), false),
        Err(Error::Hypothesis(_))
    ));
}

#[test]
fn conductor_power_of_cb_scheme() {
    let x = points(q(), 2, &[&[1, 0, 0], &[1, 1, 0], &[1, 0, 1]]);
    let cond = conductor(&x).unwrap();
    let p: GradedIdealView = conductor_power(&x, &cond, 2).unwrap();
    let k = kaehler_different(&x).unwrap();
    assert!(p.same_ideal(&k));
}

#[test]
fn rank_criterion_hypotheses() {
    // six points on the boundary: r_X = α_X − 1
    let x = points(q(), 2, &[&[1, 0, 0], &[1, 1, 0], &[1, 0, 1], &[1, 2, 3], &[1, -1, 4], &[1, 5, -2]]);
    assert!(matches!(cb_rank_criterion(&x), Err(Error::Hypothesis(_))));
    let y = raw(q(), 2, &MONOMIAL_CI);
    assert!(matches!(cb_rank_criterion(&y), Err(Error::Hypothesis(_))));
}

#[test]
fn rank_criterion_on_seven_points() {
    let x = points(
        q(),
        2,
        &[&[1, 0, 0], &[1, 1, 0], &[1, 0, 1], &[1, 2, 3], &[1, -1, 4], &[1, 5, -2], &[1, 3, 7]],
    );
    let rc = cb_rank_criterion(&x).unwrap();
    assert_eq!((rc.t, rc.delta), (3, 3));
    assert!(rc.is_equivalence && rc.consistent);
}

use crate::poly::{Monomial, Polynomial};
