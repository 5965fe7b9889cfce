//! Exact scalars: arbitrary-precision rationals and prime-field elements.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Coefficient field tag: the rationals or a prime field GF(p).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Fp(u64),
}

impl Field {
    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Fp(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Fp(p) => write!(f, "GF({p})"),
        }
    }
}

/// An element of the coefficient field.
///
/// Rationals are stored in lowest terms with positive denominator (enforced
/// by `BigRational`); GF(p) values are canonical representatives in `[0, p)`.
/// Arithmetic between scalars of different fields panics: callers validate
/// field tags at module boundaries.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Rat(BigRational),
    Fp { p: u64, val: u64 },
}

impl Scalar {
    pub fn zero(field: Field) -> Self {
        Scalar::from_i64(field, 0)
    }

    pub fn one(field: Field) -> Self {
        Scalar::from_i64(field, 1)
    }

    pub fn from_i64(field: Field, n: i64) -> Self {
        match field {
            Field::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Fp(p) => {
                let r = n.rem_euclid(p as i64) as u64;
                Scalar::Fp { p, val: r }
            }
        }
    }

    pub fn from_rational(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Scalar::Rat(BigRational::new(num, den))
    }

    /// Image of an integer ratio in the field; fails in GF(p) when p | den.
    pub fn embed_ratio(field: Field, num: &BigInt, den: &BigInt) -> Option<Self> {
        match field {
            Field::Rational => Some(Scalar::Rat(BigRational::new(num.clone(), den.clone()))),
            Field::Fp(p) => {
                let pb = BigInt::from(p);
                let d = ((den % &pb) + &pb) % &pb;
                let d: u64 = d.try_into().unwrap();
                if d == 0 {
                    return None;
                }
                let n = ((num % &pb) + &pb) % &pb;
                let n: u64 = n.try_into().unwrap();
                Some(Scalar::Fp { p, val: mul_mod(n, inv_mod(d, p), p) })
            }
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Fp { p, .. } => Field::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { val, .. } => *val == 1,
        }
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        match self {
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
            Scalar::Fp { p, val } => Scalar::Fp { p: *p, val: inv_mod(*val, *p) },
        }
    }

    /// Total order within one field, used for deterministic output ordering
    /// (rationals by value, GF(p) elements by canonical representative).
    pub fn cmp_same_field(&self, other: &Scalar) -> std::cmp::Ordering {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a.cmp(b),
            (Scalar::Fp { val: a, .. }, Scalar::Fp { val: b, .. }) => a.cmp(b),
            _ => panic!("comparing scalars from different fields"),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Scalar::one(self.field());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The rational value, if this scalar lives over Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Fp { .. } => None,
        }
    }

    fn check_same_field(&self, other: &Scalar) {
        assert_eq!(self.field(), other.field(), "operands belong to different fields");
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "division by zero in GF({p})");
    // extended Euclid on (a, p)
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "{a} not invertible mod {p}");
    s0.rem_euclid(p as i128) as u64
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check_same_field(rhs);
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { p, val: a }, Scalar::Fp { val: b, .. }) => {
                Scalar::Fp { p: *p, val: (a + b) % p }
            }
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check_same_field(rhs);
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { p, val: a }, Scalar::Fp { val: b, .. }) => {
                Scalar::Fp { p: *p, val: mul_mod(*a, *b, *p) }
            }
            _ => unreachable!(),
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { p, val } => Scalar::Fp { p: *p, val: (p - val) % p },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Order within one field: numeric over Q, by representative over GF(p).
/// Used only for canonical sorting of coordinates; panics across fields.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.check_same_field(other);
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a.cmp(b),
            (Scalar::Fp { val: a, .. }, Scalar::Fp { val: b, .. }) => a.cmp(b),
            _ => unreachable!(),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { val, .. } => write!(f, "{val}"),
        }
    }
}

/// Signed-magnitude accessor for small rationals; used by lattice code that
/// needs plain integers.
pub fn scalar_to_i64(s: &Scalar) -> Option<i64> {
    match s {
        Scalar::Rat(r) => {
            if r.denom().is_one() {
                r.numer().try_into().ok()
            } else {
                None
            }
        }
        Scalar::Fp { val, .. } => Some(*val as i64),
    }
}

pub fn big_rational_is_integer(r: &BigRational) -> bool {
    r.denom().is_one()
}

pub fn big_rational_is_square(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

/// Square root in GF(p) by exhaustive search; p is small in every caller.
pub fn fp_sqrt(val: u64, p: u64) -> Option<u64> {
    (0..p).find(|&x| mul_mod(x, x, p) == val)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_normal_form() {
        let a = Scalar::from_rational(BigInt::from(2), BigInt::from(-4));
        let b = Scalar::from_rational(BigInt::from(-1), BigInt::from(2));
        assert_eq!(a, b);
        if let Scalar::Rat(r) = &a {
            assert!(r.denom() > &BigInt::from(0));
        }
    }

    #[test]
    fn fp_canonical_and_inverse() {
        let a = Scalar::from_i64(Field::Fp(7), -3);
        assert_eq!(a, Scalar::Fp { p: 7, val: 4 });
        let inv = a.inv();
        assert!((&a * &inv).is_one());
    }

    #[test]
    fn char2_arithmetic() {
        let f = Field::Fp(2);
        let one = Scalar::one(f);
        assert!((&one + &one).is_zero());
        assert_eq!(-&one, one);
    }

    #[test]
    #[should_panic(expected = "different fields")]
    fn mixed_fields_panic() {
        let _ = &Scalar::one(Field::Rational) + &Scalar::one(Field::Fp(5));
    }

    #[test]
    fn embed_ratio_detects_bad_prime() {
        let two = BigInt::from(2);
        let five = BigInt::from(5);
        assert!(Scalar::embed_ratio(Field::Fp(5), &two, &five).is_none());
        let x = Scalar::embed_ratio(Field::Fp(7), &two, &five).unwrap();
        assert_eq!(&x * &Scalar::from_i64(Field::Fp(7), 5), Scalar::from_i64(Field::Fp(7), 2));
    }

    #[test]
    fn square_detection() {
        use num_rational::BigRational;
        let r = BigRational::new(BigInt::from(9), BigInt::from(4));
        assert_eq!(
            big_rational_is_square(&r),
            Some(BigRational::new(BigInt::from(3), BigInt::from(2)))
        );
        assert!(big_rational_is_square(&BigRational::from_integer(BigInt::from(2))).is_none());
        assert_eq!(fp_sqrt(2, 7), Some(3));
        assert_eq!(fp_sqrt(3, 5), None);
    }
}
