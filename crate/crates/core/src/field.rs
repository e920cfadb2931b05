//! Exact field scalars: arbitrary-precision rationals or a prime field F_p.
//!
//! Every matrix and algebra fixes one `FieldSpec`; mixing scalars from
//! different fields is a programming error and panics.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Which exact field computations run over.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum FieldSpec {
    /// Arbitrary-precision rationals (the default).
    Rational,
    /// Integers modulo a prime.
    Prime(u64),
}

impl FieldSpec {
    pub fn zero(self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::zero()),
            FieldSpec::Prime(p) => Scalar::Mod { value: 0, prime: p },
        }
    }

    pub fn one(self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let r = n.rem_euclid(p as i64) as u64;
                Scalar::Mod { value: r, prime: p }
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// One exact field element. Values in `Mod` are reduced representatives in `0..prime`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Mod { value: u64, prime: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Mod { prime, .. } => FieldSpec::Prime(*prime),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse. Panics on zero (callers guard).
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => {
                assert!(!r.is_zero(), "inverse of zero");
                Scalar::Rational(r.recip())
            }
            Scalar::Mod { value, prime } => {
                assert!(*value != 0, "inverse of zero");
                // p is prime, so a^(p-2) is the inverse.
                Scalar::Mod {
                    value: mod_pow(*value, *prime - 2, *prime),
                    prime: *prime,
                }
            }
        }
    }
}

fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, p);
        }
        base = mod_mul(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mod_mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn check_same(a: &Scalar, b: &Scalar) {
    assert_eq!(a.field(), b.field(), "scalar field mismatch");
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        check_same(&self, &rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Mod { value: a, prime }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: (a + b) % prime,
                prime,
            },
            _ => unreachable!(),
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        check_same(&self, &rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Mod { value: a, prime }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: (a + prime - b) % prime,
                prime,
            },
            _ => unreachable!(),
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        check_same(&self, &rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Mod { value: a, prime }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: mod_mul(a, b, prime),
                prime,
            },
            _ => unreachable!(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod { value, prime } => Scalar::Mod {
                value: (prime - value) % prime,
                prime,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Scalar {
    /// Numerator/denominator display is canonical: reduced, denominator positive.
    pub fn canonical(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.denom().is_positive() || r.is_zero(),
            Scalar::Mod { value, prime } => value < prime,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic() {
        let f = FieldSpec::Rational;
        let half = f.from_int(1) * f.from_int(2).inv();
        assert_eq!(half.clone() + half.clone(), f.one());
        assert_eq!(half.clone() - half, f.zero());
        assert_eq!(f.from_int(-3) * f.from_int(-2), f.from_int(6));
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldSpec::Prime(7);
        assert_eq!(f.from_int(10), f.from_int(3));
        assert_eq!(f.from_int(-1), f.from_int(6));
        let x = f.from_int(3);
        assert_eq!(x.clone() * x.inv(), f.one());
        assert_eq!(f.from_int(4) + f.from_int(5), f.from_int(2));
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(32003));
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1));
        assert!(!is_prime(32001));
        assert!(!is_prime(6700417 * 2));
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixing_fields_panics() {
        let _ = FieldSpec::Rational.one() + FieldSpec::Prime(5).one();
    }
}
