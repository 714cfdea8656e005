//! Exact coefficient fields: the rationals and prime fields `Z/p`.
//!
//! A [`Field`] is a small `Copy` descriptor; a [`Scalar`] is an element that
//! remembers which field it lives in. Arithmetic between elements of
//! different fields is a logic error and panics.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The coefficient field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// The rational numbers.
    Rational,
    /// The prime field with the given modulus.
    Prime(u64),
}

/// Default modulus for prime-field stress runs.
pub const DEFAULT_PRIME: u64 = 32003;

impl Field {
    /// Creates `Z/p`, rejecting composite or tiny moduli.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 62 {
            return Err(Error::InvalidInput(format!("modulus {p} is too large")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Fp(v.rem_euclid(*p as i64) as u64, *p),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(*p));
                Scalar::Fp(r.to_u64().expect("residue fits"), *p)
            }
        }
    }

    /// Maps a rational number into the field; fails in `Z/p` when the
    /// denominator is divisible by `p`.
    pub fn from_rational(&self, v: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(Scalar::Q(v.clone())),
            Field::Prime(_) => {
                let num = self.from_bigint(v.numer());
                let den = self.from_bigint(v.denom());
                let inv = den
                    .inv()
                    .ok_or_else(|| Error::InvalidInput(format!("denominator of {v} vanishes in {self}")))?;
                Ok(&num * &inv)
            }
        }
    }

    /// Parses `"p"` or `"p/q"` with optional sign.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let t = text.trim();
        let bad = || Error::InvalidInput(format!("not a rational number: {text:?}"));
        let (num, den) = match t.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::InvalidInput(format!("zero denominator in {text:?}")));
        }
        self.from_rational(&BigRational::new(num, den))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "ZZ/{p}"),
        }
    }
}

/// Deterministic primality test, trial division up to the square root.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of a [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    /// Canonical representative `0..p` together with `p`.
    Fp(u64, u64),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp(_, p) => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp(v, _) => *v == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::Fp(v, p) => Scalar::Fp(pow_mod(*v, p - 2, *p), *p),
        })
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Rational value when the field is `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(q) => Some(q),
            Scalar::Fp(..) => None,
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Q(q) if q.is_negative())
    }

    pub fn add_assign_ref(&mut self, rhs: &Scalar) {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => *a += b,
            (Scalar::Fp(a, p), Scalar::Fp(b, q)) => {
                debug_assert_eq!(p, q, "field mismatch");
                *a = add_mod(*a, *b, *p);
            }
            _ => panic!("field mismatch in scalar arithmetic"),
        }
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::Fp(a, p), Scalar::Fp(b, _)) => Scalar::Fp(add_mod(*a, p - b, *p) % p, *p),
            _ => panic!("field mismatch in scalar arithmetic"),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp(a, p), Scalar::Fp(b, _)) => Scalar::Fp(mul_mod(*a, *b, *p), *p),
            _ => panic!("field mismatch in scalar arithmetic"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp(a, p) => Scalar::Fp((p - a) % p, *p),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp(v, _) => write!(f, "{v}"),
        }
    }
}
