//! Randomized property checks shared by the property tests and the
//! acceptance harness. Every check draws from a fixed seed and returns the
//! number of instances it examined, or a description of the first failure.

#![allow(dead_code)]

use kaehler_core::different::{different_inclusions, kaehler_different, noether_different};
use kaehler_core::groebner::IdealHandle;
use kaehler_core::linalg::Matrix;
use kaehler_core::scheme::{binomial, build_scheme, ComponentInput, SchemeInput, SchemeSpec};
use kaehler_core::structure::{cb_rank_criterion, cb_test, genpos_equivalence_check, separators};
use kaehler_core::{Field, Monomial, Polynomial, Ring, Scalar, DEFAULT_PRIME};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Check = Result<usize, String>;

pub const INSTANCES: usize = 50;

pub fn fields() -> [Field; 2] {
    [Field::Rational, Field::prime(DEFAULT_PRIME).unwrap()]
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn scalar(rng: &mut ChaCha8Rng, field: Field, bound: i64) -> Scalar {
    match field {
        Field::Rational => field.from_i64(rng.gen_range(-bound..=bound)),
        _ => field.from_i64(rng.gen_range(0..field.characteristic() as i64)),
    }
}

/// `s` distinct affine points with `x0 = 1`.
pub fn random_points(rng: &mut ChaCha8Rng, field: Field, n: usize, s: usize) -> SchemeSpec {
    let mut pts: Vec<Vec<Scalar>> = Vec::new();
    while pts.len() < s {
        let mut p = vec![field.one()];
        p.extend((0..n).map(|_| scalar(rng, field, 6)));
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    let comps = pts.into_iter().map(ComponentInput::point).collect();
    build_scheme(field, n, SchemeInput::Components(comps)).expect("distinct points form a scheme")
}

pub fn degree_monomials(nvars: usize, d: usize) -> Vec<Monomial> {
    if nvars == 1 {
        return vec![Monomial::from_exponents([d as u16])];
    }
    let mut out = Vec::new();
    for e in (0..=d).rev() {
        for rest in degree_monomials(nvars - 1, d - e) {
            out.push(Monomial::from_exponents(std::iter::once(e as u16).chain(rest.exponents().iter().copied())));
        }
    }
    out
}

pub fn random_form(rng: &mut ChaCha8Rng, ring: Ring, d: usize, bound: i64) -> Polynomial {
    let terms = degree_monomials(ring.nvars, d)
        .into_iter()
        .map(|m| (m, scalar(rng, ring.field, bound)))
        .collect();
    Polynomial::from_terms(ring, terms)
}

fn fail(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn point_set_sizes(n: usize) -> std::ops::RangeInclusive<usize> {
    if n == 2 {
        2..=9
    } else {
        2..=7
    }
}

/// (i) and (vi): Hilbert polynomial and regularity index of `ϑ_X` for
/// reduced point sets; the length inequality on generic instances.
pub fn reduced_point_sets(field: Field, seed: u64) -> Check {
    let mut rng = rng(seed);
    for k in 0..INSTANCES {
        let n = if k % 5 < 3 { 2 } else { 3 };
        let s = rng.gen_range(point_set_sizes(n));
        let x = random_points(&mut rng, field, n, s);
        let kd = kaehler_different(&x).map_err(|e| e.to_string())?;
        let r = x.regularity_index();
        fail(kd.hp == x.degree(), || format!("instance {k}: HP(ϑ_X) = {} ≠ deg {}", kd.hp, x.degree()))?;
        fail(2 * r <= kd.ri && kd.ri <= n * r, || format!("instance {k}: ri(ϑ_X) = {} with r_X = {r}, n = {n}", kd.ri))?;
        if n == 2 {
            fail(kd.ri == 2 * r, || format!("instance {k}: ri(ϑ_X) = {} ≠ 2·{r}", kd.ri))?;
        }
        lemma_inequality(&x).map_err(|e| format!("instance {k}: {e}"))?;
    }
    Ok(INSTANCES)
}

/// `r_X·deg >= 2·Σ_{i<r_X} HF(i)` whenever `X` is in generic position.
pub fn lemma_inequality(x: &SchemeSpec) -> Result<(), String> {
    if !x.generic_position_check().is_generic {
        return Ok(());
    }
    let r = x.regularity_index();
    let sum = x.hilbert.sum_below_regularity();
    fail(r * x.degree() >= 2 * sum, || format!("generic with r·deg = {} < 2·{sum}", r * x.degree()))
}

/// (ii): `ϑ_N^n ⊆ ϑ_X ⊆ ϑ_N`, on point sets and on fattened schemes.
pub fn inclusion_chain(field: Field, seed: u64) -> Check {
    let mut rng = rng(seed);
    for k in 0..INSTANCES {
        let x = if k % 2 == 0 {
            let n = if k % 4 == 0 { 2 } else { 3 };
            let s = rng.gen_range(2..=6);
            random_points(&mut rng, field, n, s)
        } else {
            random_fat_scheme(&mut rng, field)
        };
        let kd = kaehler_different(&x).map_err(|e| e.to_string())?;
        let nd = noether_different(&x).map_err(|e| e.to_string())?;
        let inc = different_inclusions(&x, &kd, &nd);
        fail(inc.kaehler_in_noether && inc.noether_pow_in_kaehler, || format!("instance {k}: {inc:?}"))?;
    }
    Ok(INSTANCES)
}

/// A few reduced points plus one curvilinear or square-of-maximal-ideal point in P².
fn random_fat_scheme(rng: &mut ChaCha8Rng, field: Field) -> SchemeSpec {
    loop {
        let ring = Ring::projective(field, 2);
        let mut comps = Vec::new();
        let mut used = Vec::new();
        let s = rng.gen_range(1..=3);
        while used.len() < s + 1 {
            let p = (scalar(rng, field, 4), scalar(rng, field, 4));
            if !used.contains(&p) {
                used.push(p);
            }
        }
        let (a, b) = used.pop().unwrap();
        for (u, v) in &used {
            comps.push(ComponentInput::point(vec![field.one(), u.clone(), v.clone()]));
        }
        let l1 = &ring.var(1) - &ring.var(0).scale(&a);
        let l2 = &ring.var(2) - &ring.var(0).scale(&b);
        let fat = match rng.gen_range(0..3) {
            0 => vec![&l1 * &l1, &l1 * &l2, &l2 * &l2],
            1 => vec![l1.pow(3), l2.clone()],
            _ => vec![l1.clone(), l2.pow(2)],
        };
        comps.push(ComponentInput::primary(fat));
        if let Ok(x) = build_scheme(field, 2, SchemeInput::Components(comps)) {
            return x;
        }
    }
}

/// (iii): complete intersections of two random forms of degree <= 3 in P².
pub fn complete_intersections(field: Field, seed: u64) -> Check {
    let mut rng = rng(seed);
    let ring = Ring::projective(field, 2);
    let mut done = 0;
    let mut attempts = 0;
    while done < INSTANCES {
        attempts += 1;
        if attempts > 20 * INSTANCES {
            return Err(format!("only {done} regular sequences found"));
        }
        let d1 = rng.gen_range(1..=3);
        let d2 = rng.gen_range(1..=3);
        let f = random_form(&mut rng, ring, d1, 3);
        let g = random_form(&mut rng, ring, d2, 3);
        let x = match build_scheme(field, 2, SchemeInput::Ideal(vec![f, g])) {
            Ok(x) => x,
            Err(_) => continue,
        };
        // skip sequences that are not regular or meet the line x0 = 0
        if x.degree() != d1 * d2 || x.input_generators.is_none() {
            continue;
        }
        let kd = kaehler_different(&x).map_err(|e| e.to_string())?;
        let nd = noether_different(&x).map_err(|e| e.to_string())?;
        let gen_deg = kd.minimal_generators.first().and_then(|g| g.degree()).map(|d| d as usize);
        fail(kd.same_ideal(&nd), || format!("CI ({d1},{d2}): ϑ_X ≠ ϑ_N"))?;
        fail(kd.is_principal() && gen_deg == Some(d1 + d2 - 2), || {
            format!("CI ({d1},{d2}): ϑ_X generators {:?}", kd.minimal_generators.len())
        })?;
        fail(x.regularity_index() == d1 + d2 - 2, || {
            format!("CI ({d1},{d2}): r_X = {}", x.regularity_index())
        })?;
        done += 1;
    }
    Ok(done)
}

/// (iv): the three-way generic-position equivalence on `C(n+α−1, n)` points.
pub fn genpos_equivalence(field: Field, seed: u64) -> Check {
    let mut rng = rng(seed);
    for k in 0..INSTANCES {
        let (n, alpha) = [(2, 2), (2, 3), (3, 2), (2, 4)][k % 4];
        let s = binomial(n + alpha - 1, n);
        let x = random_points(&mut rng, field, n, s);
        let c = genpos_equivalence_check(&x, false).map_err(|e| e.to_string())?;
        fail(c.consistent, || format!("instance {k} ({n}, {alpha}): {c:?}"))?;
        lemma_inequality(&x).map_err(|e| format!("instance {k}: {e}"))?;
    }
    Ok(INSTANCES)
}

/// (v): the rank criterion agrees with the conductor on generic point sets in P².
pub fn rank_criterion(field: Field, seed: u64) -> Check {
    let mut rng = rng(seed);
    let mut done = 0;
    let mut attempts = 0;
    while done < INSTANCES {
        attempts += 1;
        if attempts > 10 * INSTANCES {
            return Err(format!("only {done} instances satisfied the hypotheses"));
        }
        let s = [4, 7, 8, 11, 12, 13][attempts % 6];
        let x = random_points(&mut rng, field, 2, s);
        let gp = x.generic_position_check();
        if !gp.is_generic {
            continue;
        }
        lemma_inequality(&x)?;
        let rc = cb_rank_criterion(&x).map_err(|e| format!("{s} points: {e}"))?;
        let cb = cb_test(&x).map_err(|e| e.to_string())?;
        fail(rc.sufficient_cb == cb.is_cb && rc.consistent, || format!("{s} points: {rc:?}"))?;
        done += 1;
    }
    Ok(done)
}

/// (vii): `g = Σ g(p_j)·x0^(i−r)·f_j` modulo `I_X` for random `g ∈ R_i`, `i >= r_X`.
pub fn separator_round_trip(field: Field, seed: u64) -> Check {
    let mut rng = rng(seed);
    for k in 0..INSTANCES {
        let n = if k % 2 == 0 { 2 } else { 3 };
        let s = rng.gen_range(point_set_sizes(n));
        let x = random_points(&mut rng, field, n, s);
        let r = x.regularity_index();
        let seps: Vec<Polynomial> = (0..s)
            .map(|j| separators(&x, j).map(|set| set.separators[0].full.clone()))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let i = r + rng.gen_range(0..=1);
        let g = random_form(&mut rng, x.ring(), i, 5);
        let shift = Monomial::one(x.ring().nvars).with_exponent(0, (i - r) as u16);
        let mut acc = x.ring().zero();
        for (j, f) in seps.iter().enumerate() {
            let c = g.evaluate(x.components[j].coords.as_ref().unwrap()).map_err(|e| e.to_string())?;
            acc = &acc + &f.mul_monomial(&shift).scale(&c);
        }
        fail(x.i_x.contains(&(&acc - &g)), || format!("instance {k}: reconstruction of a degree-{i} form failed"))?;
    }
    Ok(INSTANCES)
}

/// Criterion 8: standard-monomial counts against ranks of `⊕ P_{d−deg g}·g`.
pub fn hilbert_oracle(field: Field, seed: u64) -> Check {
    let mut rng = rng(seed);
    for k in 0..INSTANCES {
        let n = if k % 2 == 0 { 2 } else { 3 };
        let ring = Ring::projective(field, n);
        let ngens = rng.gen_range(1..=n + 1);
        let gens: Vec<Polynomial> = (0..ngens)
            .map(|_| {
                let d = rng.gen_range(1..=3);
                sparse_form(&mut rng, ring, d)
            })
            .filter(|g| !g.is_zero())
            .collect();
        let ideal = IdealHandle::new(ring, gens.clone()).map_err(|e| e.to_string())?;
        let qb = ideal.quotient_basis(Some(6));
        for d in 0..=6 {
            let oracle = brute_force_hf(ring, &gens, d);
            let gb = qb.count_in_degree(d);
            fail(oracle == gb, || format!("instance {k}, degree {d}: GB {gb} vs rank {oracle} for {gens:?}"))?;
        }
    }
    Ok(INSTANCES)
}

/// Homogeneous form with a handful of random terms.
fn sparse_form(rng: &mut ChaCha8Rng, ring: Ring, d: usize) -> Polynomial {
    let monos = degree_monomials(ring.nvars, d);
    let terms = rng.gen_range(1..=3);
    let chosen = (0..terms)
        .map(|_| (monos[rng.gen_range(0..monos.len())].clone(), scalar(rng, ring.field, 4)))
        .collect();
    Polynomial::from_terms(ring, chosen)
}

/// `dim P_d − rank span{m·g : deg m = d − deg g}`.
pub fn brute_force_hf(ring: Ring, gens: &[Polynomial], d: usize) -> usize {
    let monos = degree_monomials(ring.nvars, d);
    let index = |m: &Monomial| monos.iter().position(|x| x == m).expect("degree-d monomial");
    let mut rows = Vec::new();
    for g in gens {
        let Some(e) = g.degree() else { continue };
        let e = e as usize;
        if e > d {
            continue;
        }
        for m in degree_monomials(ring.nvars, d - e) {
            let mut row = vec![ring.field.zero(); monos.len()];
            for (t, c) in g.mul_monomial(&m).terms() {
                row[index(t)] = c.clone();
            }
            rows.push(row);
        }
    }
    let rank = if rows.is_empty() { 0 } else { Matrix::from_rows(ring.field, monos.len(), rows).rank() };
    monos.len() - rank
}
