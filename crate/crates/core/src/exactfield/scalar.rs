use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default characteristic for all computations.
pub const DEFAULT_PRIME: u64 = 32003;

/// Smallest characteristic accepted for prime fields.
pub const MIN_PRIME: u64 = 101;

/// The ground field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Prime(u64),
    Rational,
}

impl Default for Field {
    fn default() -> Self {
        Field::Prime(DEFAULT_PRIME)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// Validated prime field. Characteristics must fit in 31 bits so that products fit in u64.
    pub fn prime(p: u64) -> Result<Field> {
        if !(MIN_PRIME..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidField(format!(
                "characteristic {p} must be a prime in [{MIN_PRIME}, 2^31)"
            )));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Prime(p) => p,
            Field::Rational => 0,
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod { v: 0, p: p as u32 },
            Field::Rational => Scalar::Rat(Box::new(BigRational::zero())),
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod {
                v: n.rem_euclid(p as i64) as u32,
                p: p as u32,
            },
            Field::Rational => Scalar::Rat(Box::new(BigRational::from_integer(BigInt::from(n)))),
        }
    }

    pub fn from_ratio(self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::Parse("zero denominator".into()));
        }
        let d = self.from_i64(den);
        if d.is_zero() {
            return Err(Error::Parse(format!(
                "denominator {den} vanishes in characteristic {}",
                self.characteristic()
            )));
        }
        Ok(self.from_i64(num) * d.inv())
    }

    /// Parses `n`, `-n` or `n/d`.
    pub fn parse_scalar(self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad field element `{s}`"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| bad())?;
                let d: i64 = d.trim().parse().map_err(|_| bad())?;
                self.from_ratio(n, d)
            }
            None => Ok(self.from_i64(s.parse().map_err(|_| bad())?)),
        }
    }

    /// Canonical description, as used in file headers and reports.
    pub fn describe(self) -> String {
        match self {
            Field::Prime(p) => format!("prime {p}"),
            Field::Rational => "rational".to_string(),
        }
    }

    pub fn parse(desc: &str) -> Result<Field> {
        let parts: Vec<&str> = desc.split_whitespace().collect();
        match parts.as_slice() {
            ["rational"] => Ok(Field::Rational),
            ["prime", p] => Field::prime(
                p.parse()
                    .map_err(|_| Error::Parse(format!("bad characteristic `{p}`")))?,
            ),
            _ => Err(Error::Parse(format!("bad field spec `{desc}`"))),
        }
    }
}

/// A field element. Prime-field elements carry their modulus so that arithmetic
/// needs no external context; rationals are exact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod { v: u32, p: u32 },
    Rat(Box<BigRational>),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Mod { p, .. } => Field::Prime(*p as u64),
            Scalar::Rat(_) => Field::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod { v, .. } => *v == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod { v, .. } => *v == 1,
            Scalar::Rat(r) => r.is_one(),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Mod { v, p } => {
                assert!(*v != 0, "inverse of zero");
                Scalar::Mod {
                    v: mod_inv(*v as u64, *p as u64) as u32,
                    p: *p,
                }
            }
            Scalar::Rat(r) => {
                assert!(!r.is_zero(), "inverse of zero");
                Scalar::Rat(Box::new(r.recip()))
            }
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
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

    /// The residue as an integer in `[0, p)`. Only meaningful for prime fields.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Mod { v, .. } => Some(*v as u64),
            Scalar::Rat(_) => None,
        }
    }

    /// Signed representative in `(-p/2, p/2]` for prime fields, or the value itself when it is
    /// an integer rational.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Mod { v, p } => {
                let v = *v as i64;
                let p = *p as i64;
                Some(if v > p / 2 { v - p } else { v })
            }
            Scalar::Rat(r) => {
                if r.is_integer() {
                    r.to_integer().to_i64()
                } else {
                    None
                }
            }
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Mod { .. } => None,
        }
    }
}

pub(crate) fn mod_inv(a: u64, p: u64) -> u64 {
    // p is prime: a^(p-2)
    mod_pow(a % p, p - 2, p)
}

pub(crate) fn mod_pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Scalar {
    /// Prime-field elements print as their signed representative, so `-1` reads as `-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod { .. } => write!(f, "{}", self.to_i64().unwrap()),
            Scalar::Rat(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

fn field_mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("mixed-field arithmetic: {:?} vs {:?}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) if p == q => {
                let s = *a as u64 + *b as u64;
                let p64 = *p as u64;
                Scalar::Mod {
                    v: (if s >= p64 { s - p64 } else { s }) as u32,
                    p: *p,
                }
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(Box::new(a.as_ref() + b.as_ref())),
            _ => field_mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) if p == q => Scalar::Mod {
                v: ((*a as u64 + *p as u64 - *b as u64) % *p as u64) as u32,
                p: *p,
            },
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(Box::new(a.as_ref() - b.as_ref())),
            _ => field_mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) if p == q => Scalar::Mod {
                v: (*a as u64 * *b as u64 % *p as u64) as u32,
                p: *p,
            },
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(Box::new(a.as_ref() * b.as_ref())),
            _ => field_mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Mod { v, p } => Scalar::Mod {
                v: if *v == 0 { 0 } else { *p - *v },
                p: *p,
            },
            Scalar::Rat(r) => Scalar::Rat(Box::new(-r.as_ref())),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

/// Rational reconstruction of a residue modulo `p`: finds `a/b` with `|a|, |b| < sqrt(p/2)`.
pub(crate) fn rational_reconstruct(r: u64, p: u64) -> Option<BigRational> {
    let bound = ((p / 2) as f64).sqrt() as i128;
    let (mut r0, mut r1) = (p as i128, r as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 > bound {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.abs() > bound {
        return None;
    }
    let q = BigRational::new(BigInt::from(r1), BigInt::from(t1));
    Some(if q.is_negative() && q.is_zero() { BigRational::zero() } else { q })
}
