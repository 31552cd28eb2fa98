//! Field elements with two interchangeable backends.
//!
//! The rational backend is exact and is the default for every table whose
//! constants are rational. The complex backend is a pair of doubles compared
//! with a module-level tolerance; it carries the entries that live in
//! `Q(i, sqrt 3)` such as `(-1)^(1/3)` or `i/sqrt 3`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU64, Ordering};

use num::bigint::BigInt;
use num::complex::Complex64;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default tolerance of the complex backend.
pub const DEFAULT_EPSILON: f64 = 1e-9;

static EPSILON: AtomicU64 = AtomicU64::new(DEFAULT_EPSILON.to_bits());

/// Current tolerance used by [`Scalar::is_zero`] on complex values.
pub fn epsilon() -> f64 {
    f64::from_bits(EPSILON.load(Ordering::Relaxed))
}

/// Overrides the complex tolerance for the whole process.
pub fn set_epsilon(eps: f64) {
    assert!(eps >= 0.0 && eps.is_finite(), "epsilon must be a finite nonnegative number");
    EPSILON.store(eps.to_bits(), Ordering::Relaxed);
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Rational,
    Complex,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::Rational => "rational",
            Backend::Complex => "complex",
        }
    }

    /// Backend able to hold values of both `self` and `other`.
    pub fn join(self, other: Backend) -> Backend {
        if self == Backend::Complex || other == Backend::Complex {
            Backend::Complex
        } else {
            Backend::Rational
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Backend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rational" => Ok(Backend::Rational),
            "complex" => Ok(Backend::Complex),
            other => Err(Error::InvalidScalar {
                text: other.to_string(),
                reason: "backend must be `rational` or `complex`".into(),
            }),
        }
    }
}

/// A field element. Rational values are always in lowest terms with a
/// positive denominator.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Rational(BigRational),
    Complex(Complex64),
}

impl Scalar {
    pub fn zero(backend: Backend) -> Self {
        match backend {
            Backend::Rational => Scalar::Rational(BigRational::zero()),
            Backend::Complex => Scalar::Complex(Complex64::new(0.0, 0.0)),
        }
    }

    pub fn one(backend: Backend) -> Self {
        Self::from_i64(backend, 1)
    }

    pub fn from_i64(backend: Backend, value: i64) -> Self {
        match backend {
            Backend::Rational => Scalar::Rational(BigRational::from_integer(value.into())),
            Backend::Complex => Scalar::Complex(Complex64::new(value as f64, 0.0)),
        }
    }

    /// Reduced rational `numerator / denominator`.
    pub fn canonicalize(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self> {
        let den: BigInt = denominator.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::Rational(BigRational::new(numerator.into(), den)))
    }

    pub fn ratio(numerator: i64, denominator: i64) -> Self {
        Self::canonicalize(numerator, denominator).expect("nonzero denominator")
    }

    pub fn complex(re: f64, im: f64) -> Self {
        Scalar::Complex(Complex64::new(re, im))
    }

    pub fn backend(&self) -> Backend {
        match self {
            Scalar::Rational(_) => Backend::Rational,
            Scalar::Complex(_) => Backend::Complex,
        }
    }

    /// Exact zero test for rationals, `|z| <= epsilon()` for complex values.
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Complex(z) => z.norm() <= epsilon(),
        }
    }

    /// Bitwise zero, independent of the tolerance.
    pub fn is_exact_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Complex(z) => z.re == 0.0 && z.im == 0.0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Complex(z) => (z - Complex64::new(1.0, 0.0)).norm() <= epsilon(),
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            Scalar::Rational(r) => Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0),
            Scalar::Complex(z) => *z,
        }
    }

    /// Converts to `backend`. Complex values cannot be made rational.
    pub fn to_backend(&self, backend: Backend) -> Result<Self> {
        match (self, backend) {
            (Scalar::Rational(_), Backend::Rational) | (Scalar::Complex(_), Backend::Complex) => {
                Ok(self.clone())
            }
            (Scalar::Rational(_), Backend::Complex) => Ok(Scalar::Complex(self.to_complex())),
            (Scalar::Complex(_), Backend::Rational) => Err(Error::BackendMismatch {
                left: Backend::Complex,
                right: Backend::Rational,
            }),
        }
    }

    /// Magnitude as a double (used for pivot selection).
    pub fn magnitude(&self) -> f64 {
        match self {
            Scalar::Rational(r) => r.abs().to_f64().unwrap_or(f64::INFINITY),
            Scalar::Complex(z) => z.norm(),
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        if rhs.is_exact_zero() || (rhs.backend() == Backend::Complex && rhs.is_zero()) {
            return Err(Error::DivisionByZero);
        }
        Ok(match promote(self, rhs) {
            Pair::Rational(a, b) => Scalar::Rational(a / b),
            Pair::Complex(a, b) => Scalar::Complex(a / b),
        })
    }

    pub fn inverse(&self) -> Result<Scalar> {
        Scalar::one(self.backend()).checked_div(self)
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut acc = Scalar::one(self.backend());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact equality for rationals, `|a - b| <= eps` for complex values.
    pub fn approx_eq(a: &Scalar, b: &Scalar, eps: f64) -> Result<bool> {
        match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Ok(x == y),
            (Scalar::Complex(x), Scalar::Complex(y)) => Ok((x - y).norm() <= eps),
            _ => Err(Error::BackendMismatch {
                left: a.backend(),
                right: b.backend(),
            }),
        }
    }

    /// Parses the text forms `p`, `p/q` (rational) or `a+bi` (complex).
    pub fn parse(text: &str, backend: Backend) -> Result<Scalar> {
        let text = text.trim();
        let invalid = |reason: &str| Error::InvalidScalar {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        if text.is_empty() {
            return Err(invalid("empty value"));
        }
        match backend {
            Backend::Rational => {
                if text.contains(['i', '.', 'e', 'E']) {
                    return Err(Error::BackendMismatch {
                        left: Backend::Complex,
                        right: Backend::Rational,
                    });
                }
                parse_rational(text)
                    .map(Scalar::Rational)
                    .ok_or_else(|| invalid("expected `p` or `p/q` with nonzero `q`"))
            }
            Backend::Complex => {
                if let Some(r) = parse_rational(text) {
                    return Ok(Scalar::Complex(Scalar::Rational(r).to_complex()));
                }
                parse_complex(text)
                    .map(Scalar::Complex)
                    .ok_or_else(|| invalid("expected a complex number `a+bi`"))
            }
        }
    }
}

fn parse_rational(text: &str) -> Option<BigRational> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let is_int = |s: &str| {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !is_int(num) || !is_int(den) {
        return None;
    }
    let num: BigInt = num.trim_start_matches('+').parse().ok()?;
    let den: BigInt = den.trim_start_matches('+').parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

fn parse_complex(text: &str) -> Option<Complex64> {
    let finite = |v: f64| v.is_finite().then_some(v);
    let Some(body) = text.strip_suffix('i') else {
        return finite(text.parse().ok()?).map(|re| Complex64::new(re, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let imag = |s: &str| -> Option<f64> {
        match s {
            "" | "+" => Some(1.0),
            "-" => Some(-1.0),
            _ => finite(s.parse().ok()?),
        }
    };
    match split {
        Some(k) => Some(Complex64::new(finite(body[..k].parse().ok()?)?, imag(&body[k..])?)),
        None => Some(Complex64::new(0.0, imag(body)?)),
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Complex(z) => {
                let re = if z.re == 0.0 { 0.0 } else { z.re };
                let im = if z.im == 0.0 { 0.0 } else { z.im };
                match (re == 0.0, im == 0.0) {
                    (_, true) => write!(f, "{re}"),
                    (true, false) => write!(f, "{im}i"),
                    (false, false) if im < 0.0 => write!(f, "{re}-{}i", -im),
                    (false, false) => write!(f, "{re}+{im}i"),
                }
            }
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

enum Pair {
    Rational(BigRational, BigRational),
    Complex(Complex64, Complex64),
}

fn promote(a: &Scalar, b: &Scalar) -> Pair {
    match (a, b) {
        (Scalar::Rational(x), Scalar::Rational(y)) => Pair::Rational(x.clone(), y.clone()),
        _ => Pair::Complex(a.to_complex(), b.to_complex()),
    }
}

macro_rules! binary_op {
    ($trait:ident, $method:ident, $op:tt) => {
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a $op b),
                    _ => Scalar::Complex(self.to_complex() $op rhs.to_complex()),
                }
            }
        }

        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }

        impl<'a> $trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

binary_op!(Add, add, +);
binary_op!(Sub, sub, -);
binary_op!(Mul, mul, *);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Complex(z) => Scalar::Complex(-z),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// The principal value of `(-1)^(1/3)`, i.e. `e^{i pi/3}`.
pub fn cube_root_of_minus_one() -> Scalar {
    Scalar::complex(0.5, 3f64.sqrt() / 2.0)
}

/// The principal value of `(-1)^(2/3)`, i.e. `e^{2 i pi/3}`.
pub fn cube_root_of_minus_one_squared() -> Scalar {
    Scalar::complex(-0.5, 3f64.sqrt() / 2.0)
}

/// `i / sqrt 3`.
pub fn i_over_sqrt3() -> Scalar {
    Scalar::complex(0.0, 1.0 / 3f64.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::ratio(n, d)
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(Scalar::canonicalize(2, 4).unwrap().to_string(), "1/2");
        assert_eq!(Scalar::canonicalize(3, -6).unwrap().to_string(), "-1/2");
        let zero = Scalar::canonicalize(0, 7).unwrap();
        match &zero {
            Scalar::Rational(r) => {
                assert!(r.numer().is_zero());
                assert!(r.denom().is_one());
            }
            _ => unreachable!(),
        }
        assert_eq!(Scalar::canonicalize(1, 0), Err(Error::DivisionByZero));
        assert_eq!(Error::DivisionByZero.to_string(), "division by zero");
    }

    #[test]
    fn approx_eq_examples() {
        assert!(Scalar::approx_eq(&q(1, 3), &q(1, 3), 0.0).unwrap());
        assert!(!Scalar::approx_eq(&q(1, 2), &q(1, 3), 0.0).unwrap());
        // e^{i pi/3} = (1 + i sqrt 3)/2
        let root = Scalar::Complex(Complex64::from_polar(1.0, std::f64::consts::PI / 3.0));
        assert!(Scalar::approx_eq(&Scalar::complex(0.5, 0.866025403784), &root, 1e-9).unwrap());
        assert!(Scalar::approx_eq(&cube_root_of_minus_one(), &root, 1e-12).unwrap());
        let err = Scalar::approx_eq(&q(1, 2), &Scalar::complex(0.5, 0.0), 1e-9).unwrap_err();
        assert_eq!(err.to_string(), "backend mismatch");
    }

    #[test]
    fn cube_roots_satisfy_their_equations() {
        let w = cube_root_of_minus_one();
        assert!(Scalar::approx_eq(&w.pow(3), &Scalar::complex(-1.0, 0.0), 1e-12).unwrap());
        let w2 = cube_root_of_minus_one_squared();
        assert!(Scalar::approx_eq(&(&w * &w), &w2, 1e-12).unwrap());
        let s = i_over_sqrt3();
        assert!(Scalar::approx_eq(&(&s * &s), &Scalar::complex(-1.0 / 3.0, 0.0), 1e-12).unwrap());
    }

    #[test]
    fn text_forms() {
        assert_eq!(Scalar::parse("-3/6", Backend::Rational).unwrap(), q(-1, 2));
        assert_eq!(Scalar::parse("+4", Backend::Rational).unwrap(), q(4, 1));
        assert!(Scalar::parse("1/0", Backend::Rational).is_err());
        assert!(matches!(
            Scalar::parse("0.5", Backend::Rational),
            Err(Error::BackendMismatch { .. })
        ));
        let z = Scalar::parse("-0.5+0.8660254038i", Backend::Complex).unwrap();
        assert_eq!(z, Scalar::complex(-0.5, 0.8660254038));
        assert_eq!(Scalar::parse("2-i", Backend::Complex).unwrap(), Scalar::complex(2.0, -1.0));
        assert_eq!(Scalar::parse("-i", Backend::Complex).unwrap(), Scalar::complex(0.0, -1.0));
        assert_eq!(Scalar::parse("1e-3+2e-2i", Backend::Complex).unwrap(), Scalar::complex(1e-3, 2e-2));
        assert_eq!(Scalar::parse("1/4", Backend::Complex).unwrap(), Scalar::complex(0.25, 0.0));
        assert!(Scalar::parse("nan", Backend::Complex).is_err());
        assert!(Scalar::parse("1+2j", Backend::Complex).is_err());
    }

    #[test]
    fn division() {
        assert_eq!(q(1, 2).checked_div(&q(3, 4)).unwrap(), q(2, 3));
        assert_eq!(q(1, 2).checked_div(&q(0, 1)), Err(Error::DivisionByZero));
        assert!(Scalar::complex(1.0, 0.0).checked_div(&Scalar::complex(1e-12, 0.0)).is_err());
    }

    fn rational() -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..30).prop_map(|(n, d)| q(n, d))
    }

    fn complex() -> impl Strategy<Value = Scalar> {
        (-5.0f64..5.0, -5.0f64..5.0).prop_map(|(re, im)| Scalar::complex(re, im))
    }

    fn is_canonical(s: &Scalar) -> bool {
        match s {
            Scalar::Rational(r) => {
                num::Integer::gcd(r.numer(), r.denom()).is_one() && r.denom().is_positive()
            }
            Scalar::Complex(_) => false,
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
            prop_assert!(is_canonical(&(&a + &b)));
            prop_assert!(is_canonical(&(&a * &b)));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a - &a, Scalar::zero(Backend::Rational));
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inverse().unwrap(), Scalar::one(Backend::Rational));
            }
        }
    }

    proptest! {
        #[test]
        fn approx_eq_relations(a in rational(), b in rational(), c in rational(),
                               x in complex(), y in complex()) {
            prop_assert!(Scalar::approx_eq(&a, &a, 0.0).unwrap());
            prop_assert!(Scalar::approx_eq(&x, &x, 0.0).unwrap());
            prop_assert_eq!(Scalar::approx_eq(&a, &b, 0.0).unwrap(), Scalar::approx_eq(&b, &a, 0.0).unwrap());
            prop_assert_eq!(Scalar::approx_eq(&x, &y, 1e-9).unwrap(), Scalar::approx_eq(&y, &x, 1e-9).unwrap());
            if Scalar::approx_eq(&a, &b, 0.0).unwrap() && Scalar::approx_eq(&b, &c, 0.0).unwrap() {
                prop_assert!(Scalar::approx_eq(&a, &c, 0.0).unwrap());
            }
        }

        #[test]
        fn display_parses_back(a in rational(), x in complex()) {
            prop_assert_eq!(Scalar::parse(&a.to_string(), Backend::Rational).unwrap(), a);
            prop_assert_eq!(Scalar::parse(&x.to_string(), Backend::Complex).unwrap(), x);
        }
    }
}
