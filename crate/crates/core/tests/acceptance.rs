//! Acceptance harness: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::time::Instant;

use common::*;
use kaehler_core::different::{kaehler_different, noether_different, GradedIdealView};
use kaehler_core::scheme::{build_scheme, ComponentInput, SchemeInput, SchemeSpec};
use kaehler_core::structure::{classify, conductor};
use kaehler_core::{parse_polynomial, Field, Polynomial, Ring};

type Outcome = Result<String, String>;

fn polys(n: usize, gens: &[&str]) -> Vec<Polynomial> {
    let ring = Ring::projective(Field::Rational, n);
    gens.iter().map(|g| parse_polynomial(ring, g).unwrap()).collect()
}

fn raw(n: usize, gens: &[&str]) -> Result<SchemeSpec, String> {
    build_scheme(Field::Rational, n, SchemeInput::Ideal(polys(n, gens))).map_err(|e| e.to_string())
}

fn primaries(n: usize, comps: &[&[&str]]) -> Result<SchemeSpec, String> {
    let list = comps.iter().map(|c| ComponentInput::primary(polys(n, c))).collect();
    build_scheme(Field::Rational, n, SchemeInput::Components(list)).map_err(|e| e.to_string())
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn hf(x: &SchemeSpec, upto: usize) -> Vec<usize> {
    (0..=upto).map(|i| x.hilbert.value(i)).collect()
}

/// The single minimal generator agrees with `text` up to a scalar modulo `I_X`.
fn principal_generator(x: &SchemeSpec, ideal: &GradedIdealView, text: &str) -> Result<(), String> {
    if !ideal.is_principal() {
        return Err(format!("{} minimal generators", ideal.minimal_generators.len()));
    }
    let f = parse_polynomial(x.ring(), text).map_err(|e| e.to_string())?;
    let d = f.degree().unwrap() as usize;
    let nf = x.homogeneous_of(&x.affine_vector(&f), d).unwrap().monic();
    expect("generator", ideal.minimal_generators[0].to_string(), nf.to_string())
}

fn criterion_1() -> Outcome {
    let x = raw(2, &["X1^2", "X2^3"])?;
    expect("HF_X", hf(&x, 4), vec![1, 3, 5, 6, 6])?;
    expect("r_X", x.regularity_index(), 3)?;
    let k = kaehler_different(&x).map_err(|e| e.to_string())?;
    principal_generator(&x, &k, "X1*X2^2")?;
    expect("HF(ϑ_X)", k.values(4), vec![0, 0, 0, 1, 1])?;
    expect("ri(ϑ_X)", k.ri, 3)?;
    Ok("HF_X 1 3 5 6 6, ϑ_X = ⟨x1x2²⟩ with HF 0 0 0 1 1, ri 3".into())
}

fn criterion_2() -> Outcome {
    let x = raw(2, &["X0*X1^2 + X1^3", "X0^2*X2 - 2*X0*X2^2 + X2^3"])?;
    expect("deg", x.degree(), 9)?;
    expect("HF_X", hf(&x, 5), vec![1, 3, 6, 8, 9, 9])?;
    expect("r_X", x.regularity_index(), 4)?;
    let k = kaehler_different(&x).map_err(|e| e.to_string())?;
    expect("HF(ϑ_X)", k.values(7), vec![0, 0, 0, 0, 1, 3, 4, 4])?;
    expect("ri(ϑ_X)", k.ri, 6)?;
    principal_generator(&x, &k, "2*X0^3*X1 + 3*X1^4 + 12*X1^3*X2 - 10*X0*X1*X2^2 + 9*X1^2*X2^2 + 8*X1*X2^3")?;
    Ok("deg 9, HF_X 1 3 6 8 9 9, HF(ϑ_X) 0 0 0 0 1 3 4 4, ri 6, generator matches".into())
}

fn criterion_3() -> Outcome {
    let x = raw(
        2,
        &["X2^2", "X0*X2 - X1*X2", "X0^4 - 2*X0^3*X1 + 2*X0^2*X1^2 - 2*X0*X1^3 + X1^4"],
    )?;
    expect("HF_X", hf(&x, 4), vec![1, 3, 4, 5, 5])?;
    expect("r_X", x.regularity_index(), 3)?;
    let nd = noether_different(&x).map_err(|e| e.to_string())?;
    principal_generator(&x, &nd, "X0^3*X1 - 3*X0^2*X1^2 + 3*X0*X1^3 - X1^4")?;
    expect("HF(ϑ_N)", nd.values(6), vec![0, 0, 0, 0, 1, 2, 2])?;
    expect("ri(ϑ_N)", nd.ri, 5)?;
    let rep = classify(&x).map_err(|e| e.to_string())?;
    expect("consistency failures", rep.consistency_failures, vec![])?;
    expect("arithmetically Gorenstein", rep.is_arith_gorenstein, false)?;
    expect("HF(ϑ_N)(r_X)", rep.noether_at_r, 0)?;
    Ok("HF(ϑ_N) 0 0 0 0 1 2 2, ri 5, principal, not arithmetically Gorenstein".into())
}

fn criterion_4() -> Outcome {
    let x = raw(
        3,
        &[
            "X0*X3 - 2*X1*X3 - X3^2",
            "X2^2 - X1*X3 - 2*X2*X3",
            "X1*X2 + X2*X3",
            "X0*X2 + X2*X3",
            "X1^2 + X1*X3",
        ],
    )?;
    expect("HF_X", hf(&x, 3), vec![1, 4, 5, 5])?;
    expect("r_X", x.regularity_index(), 2)?;
    let nd = noether_different(&x).map_err(|e| e.to_string())?;
    expect("HF(ϑ_N)", nd.values(4), vec![0, 0, 1, 3, 3])?;
    expect("ri(ϑ_N)", nd.ri, 3)?;
    principal_generator(&x, &nd, "2*X0*X1 + 3*X1*X3 + 2*X2*X3 - X3^2")?;
    let rep = classify(&x).map_err(|e| e.to_string())?;
    expect("consistency failures", rep.consistency_failures, vec![])?;
    expect("arithmetically Gorenstein", rep.is_arith_gorenstein, true)?;
    expect("HF(ϑ_N)(r_X)", rep.noether_at_r, 1)?;
    // point degrees need the primary decomposition
    let y = primaries(3, &[&["X1", "X2", "X3 - X0"], &["X1 - X0", "(X2 + X0)^2", "X3 + X0"], &["X1^2", "X2", "X3"]])?;
    expect("same scheme", y.i_x.same_ideal(&x.i_x), true)?;
    let c = conductor(&y).map_err(|e| e.to_string())?;
    expect("deg_X(p_i)", c.point_degrees, Some(vec![2, 2, 2]))?;
    Ok("HF_X 1 4 5 5, HF(ϑ_N) 0 0 1 3 3, ri 3, deg_X(p_i) = 2, arithmetically Gorenstein".into())
}

fn ags(p4: &[&str]) -> Result<SchemeSpec, String> {
    let p = |c: &[i64]| ComponentInput::point(c.iter().map(|&v| Field::Rational.from_i64(v)).collect());
    let list = vec![
        p(&[1, 0, 0, 0]),
        p(&[1, 1, 0, 0]),
        p(&[1, 0, 1, 0]),
        ComponentInput::primary(polys(3, p4)),
    ];
    build_scheme(Field::Rational, 3, SchemeInput::Components(list)).map_err(|e| e.to_string())
}

fn criterion_5() -> Outcome {
    let x = ags(&["X1 - X0", "X2 - X0", "(X3 - X0)^2"])?;
    let cx = conductor(&x).map_err(|e| e.to_string())?;
    expect("X: ℓ(R̃/R)", cx.len_tilde_over_r, 5)?;
    expect("X: ℓ(R/𝔉)", cx.len_r_over_f, 5)?;
    let rx = classify(&x).map_err(|e| e.to_string())?;
    expect("X: consistency failures", rx.consistency_failures, vec![])?;
    expect("X: CB", rx.is_cb, true)?;
    expect("X: arithmetically Gorenstein", rx.is_arith_gorenstein, true)?;
    let y = ags(&["(X1 - X0)^2", "X2 - X0", "X3 - X0"])?;
    let cy = conductor(&y).map_err(|e| e.to_string())?;
    expect("Y: deg_Y(p3)", cy.point_degrees.as_ref().map(|d| d[2]), Some(1))?;
    expect("Y: ℓ(R̃/R)", cy.len_tilde_over_r, 5)?;
    expect("Y: ℓ(R/𝔉)", cy.len_r_over_f, 4)?;
    let ry = classify(&y).map_err(|e| e.to_string())?;
    expect("Y: consistency failures", ry.consistency_failures, vec![])?;
    expect("Y: arithmetically Gorenstein", ry.is_arith_gorenstein, false)?;
    Ok("X: 5 = 5, CB, Gorenstein; Y: deg(p3) = 1, 5 ≠ 4, not Gorenstein".into())
}

fn criterion_6() -> Outcome {
    let x = primaries(
        2,
        &[
            &["X1", "X2"],
            &["X1 - 4*X2", "X2 - 2*X0"],
            &["X1 - 3*X2 - 2*X0", "(X1 - X2)^2"],
            &["X0^2*X1 - X2^3", "X1^2 - X0*X2 - X2^2", "X0^3 + X0^2*X2 - X1*X2^2"],
        ],
    )?;
    expect("HF_X", hf(&x, 5), vec![1, 3, 6, 8, 9, 9])?;
    expect("r_X", x.regularity_index(), 4)?;
    let k = kaehler_different(&x).map_err(|e| e.to_string())?;
    let nd = noether_different(&x).map_err(|e| e.to_string())?;
    expect("HF(ϑ_X)", k.values(8), vec![0, 0, 0, 0, 1, 3, 6, 8, 8])?;
    expect("HF(ϑ_N)", nd.values(8), vec![0, 0, 0, 0, 1, 3, 6, 8, 8])?;
    expect("ri", (k.ri, nd.ri), (7, 7))?;
    expect("HP", (k.hp, nd.hp), (8, 8))?;
    let c = conductor(&x).map_err(|e| e.to_string())?;
    let rep = kaehler_core::structure::classify_with(&x, &k, &nd, &c).map_err(|e| e.to_string())?;
    expect("deg_X(p_j)", rep.point_degrees.clone(), Some(vec![4, 4, 4, 4]))?;
    expect("consistency failures", rep.consistency_failures, vec![])?;
    expect("HF(ϑ_X)(r_X)", rep.ci_witness, 1)?;
    expect("complete intersection", rep.is_ci, true)?;
    Ok("HF(ϑ_X) = HF(ϑ_N) = 0 0 0 0 1 3 6 8 8, ri 7, HP 8, deg 4 each, complete intersection".into())
}

fn criterion_7() -> Outcome {
    let checks: [(&str, fn(Field, u64) -> Check, u64); 6] = [
        ("reduced point sets", reduced_point_sets, 11),
        ("inclusion chain", inclusion_chain, 21),
        ("complete intersections", complete_intersections, 31),
        ("generic position equivalence", genpos_equivalence, 41),
        ("rank criterion", rank_criterion, 51),
        ("separator round trip", separator_round_trip, 61),
    ];
    let mut lines = Vec::new();
    for (name, check, seed) in checks {
        for (i, field) in fields().into_iter().enumerate() {
            let k = check(field, seed + i as u64).map_err(|e| format!("{name} over {}: {e}", label(field)))?;
            lines.push(format!("{name}/{} {k}", label(field)));
        }
    }
    Ok(format!("all instances pass ({})", lines.join(", ")))
}

fn criterion_8() -> Outcome {
    let mut total = 0;
    for (i, field) in fields().into_iter().enumerate() {
        total += hilbert_oracle(field, 71 + i as u64).map_err(|e| format!("over {}: {e}", label(field)))?;
    }
    Ok(format!("{total} random ideals agree in degrees 0..=6"))
}

fn label(field: Field) -> String {
    match field {
        Field::Rational => "Q".into(),
        f => format!("F_{}", f.characteristic()),
    }
}

fn main() {
    let criteria: [(usize, fn() -> Outcome); 8] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
    ];
    let mut failed = 0;
    for (k, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {k}: PASS ({secs:.1}s) {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {k}: FAIL ({secs:.1}s) {msg}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
