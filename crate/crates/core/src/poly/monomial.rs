use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

pub type Exponents = SmallVec<[u16; 10]>;

/// A power product `X0^e0 * X1^e1 * ...` with cached total degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn from_exponents<I: IntoIterator<Item = u16>>(exps: I) -> Self {
        let exps: Exponents = exps.into_iter().collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if exact.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)))
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn with_exponent(&self, i: usize, e: u16) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] = e;
        Monomial::from_exponents(exps)
    }

    /// Embeds into a ring with more variables; `map[i]` is the new slot of old variable `i`.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Monomial {
        let mut exps: Exponents = SmallVec::from_elem(0, nvars);
        for (i, &e) in self.exps.iter().enumerate() {
            exps[map[i]] += e;
        }
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    /// Degree restricted to the variables in `mask`.
    pub fn masked_degree(&self, mask: u64) -> u32 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e as u32)
            .sum()
    }
}

/// Term orders on monomials.
///
/// Variables are ranked `X1 > X2 > ... > X_last > X0`, so `X0` is the
/// smallest variable for every order. Under `DegRevLex` no leading term of a
/// reduced basis of an `X0`-saturated homogeneous ideal involves `X0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    Lex,
    /// Block order eliminating the variables in the bit mask: compares the
    /// masked degree first, then `DegRevLex`.
    Elimination(u64),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => degrevlex(a, b),
            MonomialOrder::Lex => {
                let n = a.nvars();
                for i in (1..n).chain(std::iter::once(0)) {
                    match a.exps[i].cmp(&b.exps[i]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Elimination(mask) => a
                .masked_degree(*mask)
                .cmp(&b.masked_degree(*mask))
                .then_with(|| degrevlex(a, b)),
        }
    }

    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::DegRevLex)
    }
}

fn degrevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree.cmp(&b.degree) {
        Ordering::Equal => {}
        o => return o,
    }
    let n = a.nvars();
    for i in std::iter::once(0).chain((1..n).rev()) {
        match a.exps[i].cmp(&b.exps[i]) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "X{i}")?;
            } else {
                write!(f, "X{i}^{e}")?;
            }
        }
        Ok(())
    }
}
