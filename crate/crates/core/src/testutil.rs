//! Shared fixtures for unit tests.

use crate::field::Field;
use crate::poly::{parse_polynomial, Polynomial, Ring};
use crate::scheme::{build_scheme, ComponentInput, SchemeInput, SchemeSpec};

pub fn q() -> Field {
    Field::Rational
}

pub fn fp() -> Field {
    Field::prime(crate::DEFAULT_PRIME).unwrap()
}

pub fn polys(field: Field, n: usize, gens: &[&str]) -> Vec<Polynomial> {
    let r = Ring::projective(field, n);
    gens.iter().map(|g| parse_polynomial(r, g).unwrap()).collect()
}

pub fn poly(x: &SchemeSpec, text: &str) -> Polynomial {
    parse_polynomial(x.ring(), text).unwrap()
}

pub fn pt(field: Field, coords: &[i64]) -> ComponentInput {
    ComponentInput::point(coords.iter().map(|&c| field.from_i64(c)).collect())
}

pub fn primary(field: Field, n: usize, gens: &[&str]) -> ComponentInput {
    ComponentInput::primary(polys(field, n, gens))
}

pub fn raw(field: Field, n: usize, gens: &[&str]) -> SchemeSpec {
    build_scheme(field, n, SchemeInput::Ideal(polys(field, n, gens))).unwrap()
}

pub fn components(field: Field, n: usize, comps: &[&[&str]]) -> SchemeSpec {
    let list = comps.iter().map(|c| primary(field, n, c)).collect();
    build_scheme(field, n, SchemeInput::Components(list)).unwrap()
}

pub fn points(field: Field, n: usize, pts: &[&[i64]]) -> SchemeSpec {
    let list = pts.iter().map(|p| pt(field, p)).collect();
    build_scheme(field, n, SchemeInput::Components(list)).unwrap()
}

pub const MONOMIAL_CI: [&str; 2] = ["X1^2", "X2^3"];

pub const TWO_CUBICS: [&str; 2] = ["X0*X1^2 + X1^3", "X0^2*X2 - 2*X0*X2^2 + X2^3"];

pub const TWOCUBICS: [&[&str]; 4] = [
    &["X1", "X2"],
    &["X1 - 4*X2", "X2 - 2*X0"],
    &["X1 - 3*X2 - 2*X0", "(X1 - X2)^2"],
    &["X0^2*X1 - X2^3", "X1^2 - X0*X2 - X2^2", "X0^3 + X0^2*X2 - X1*X2^2"],
];

pub const EXAMPLE_A: [&str; 3] = ["X2^2", "X0*X2 - X1*X2", "X0^4 - 2*X0^3*X1 + 2*X0^2*X1^2 - 2*X0*X1^3 + X1^4"];

pub const EXAMPLE_A_COMPONENTS: [&[&str]; 2] = [&["(X1 - X0)^2", "(X1 - X0)*X2", "X2^2"], &["X1^2 + X0^2", "X2"]];

pub const EXAMPLE_B: [&str; 5] = [
    "X0*X3 - 2*X1*X3 - X3^2",
    "X2^2 - X1*X3 - 2*X2*X3",
    "X1*X2 + X2*X3",
    "X0*X2 + X2*X3",
    "X1^2 + X1*X3",
];

pub const EXAMPLE_B_COMPONENTS: [&[&str]; 3] = [
    &["X1", "X2", "X3 - X0"],
    &["X1 - X0", "(X2 + X0)^2", "X3 + X0"],
    &["X1^2", "X2", "X3"],
];

pub const AGS_X: [&[&str]; 4] = [
    &["X1", "X2", "X3"],
    &["X1 - X0", "X2", "X3"],
    &["X1", "X2 - X0", "X3"],
    &["X1 - X0", "X2 - X0", "(X3 - X0)^2"],
];

pub const AGS_Y: [&[&str]; 4] = [
    &["X1", "X2", "X3"],
    &["X1 - X0", "X2", "X3"],
    &["X1", "X2 - X0", "X3"],
    &["(X1 - X0)^2", "X2 - X0", "X3 - X0"],
];
