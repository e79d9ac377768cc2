use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cyclo::{CycloField, Cyclotomic};
use super::poly::{MPoly, RatFunc};
use super::ExactError;

/// A ground field. Rational constants embed into every field, so a
/// `Scalar::Rat` may be combined with a value of any other field.
#[derive(Clone, Debug)]
pub enum Field {
    Rationals,
    Prime(u64),
    Cyclotomic(Arc<CycloField>),
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Field::Rationals, Field::Rationals) => true,
            (Field::Prime(p), Field::Prime(q)) => p == q,
            (Field::Cyclotomic(a), Field::Cyclotomic(b)) => a.order() == b.order(),
            _ => false,
        }
    }
}

impl Eq for Field {}

impl Field {
    pub fn prime(p: u64) -> Result<Self, ExactError> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(ExactError::NotPrime(p))
        }
    }

    /// `Q(zeta_n)`. For `n <= 2` the root of unity is rational and the
    /// field is Q itself.
    pub fn cyclotomic(n: u32) -> Self {
        assert!(n >= 1, "cyclotomic order must be positive");
        if n <= 2 {
            Field::Rationals
        } else {
            Field::Cyclotomic(CycloField::new(n))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            _ => 0,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Field::Prime(_))
    }

    pub fn int(&self, v: i64) -> Scalar {
        self.rational(BigRational::from_integer(v.into()))
    }

    pub fn rational(&self, r: BigRational) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod(ModP::from_rational(&r, *p).expect("denominator divisible by p")),
            _ => Scalar::Rat(r),
        }
    }

    /// Smallest field containing both, or an error if they are incompatible.
    pub fn join(&self, other: &Field) -> Result<Field, ExactError> {
        match (self, other) {
            (Field::Rationals, f) | (f, Field::Rationals) => Ok(f.clone()),
            (a, b) if a == b => Ok(a.clone()),
            (a, b) => Err(ExactError::IncompatibleFields(a.to_string(), b.to_string())),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "rational"),
            Field::Prime(p) => write!(f, "prime:{p}"),
            Field::Cyclotomic(k) => write!(f, "cyclotomic:{}", k.order()),
        }
    }
}

impl FromStr for Field {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ExactError::Parse {
            input: s.to_string(),
            position: 0,
            message: "expected `rational`, `prime:<p>` or `cyclotomic:<n>`".into(),
        };
        match s.split_once(':') {
            None if s == "rational" || s == "Q" => Ok(Field::Rationals),
            Some(("prime", p)) => Field::prime(p.trim().parse().map_err(|_| bad())?),
            Some(("cyclotomic", n)) => {
                let n: u32 = n.trim().parse().map_err(|_| bad())?;
                if n == 0 {
                    return Err(bad());
                }
                Ok(Field::cyclotomic(n))
            }
            _ => Err(bad()),
        }
    }
}

/// The n-th cyclotomic field together with its distinguished primitive root.
pub fn cyclotomic_field(n: u32) -> (Field, Scalar) {
    let field = Field::cyclotomic(n);
    let zeta = match &field {
        Field::Cyclotomic(k) => Scalar::Cyc(Cyclotomic::generator(k)),
        _ if n == 1 => Scalar::one(),
        _ => Scalar::int(-1),
    };
    (field, zeta)
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A residue modulo a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModP {
    value: u64,
    p: u64,
}

impl ModP {
    pub fn new(value: i128, p: u64) -> Self {
        Self {
            value: value.rem_euclid(p as i128) as u64,
            p,
        }
    }

    pub fn from_rational(r: &BigRational, p: u64) -> Option<Self> {
        let pb = BigInt::from(p);
        let n = r.numer().mod_floor(&pb).to_u64().unwrap();
        let d = r.denom().mod_floor(&pb).to_u64().unwrap();
        let d = Self { value: d, p }.inv()?;
        Some(Self { value: n, p }.mul(&d))
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn add(&self, o: &Self) -> Self {
        Self::new(self.value as i128 + o.value as i128, self.p)
    }

    fn neg(&self) -> Self {
        Self::new(-(self.value as i128), self.p)
    }

    fn mul(&self, o: &Self) -> Self {
        Self {
            value: ((self.value as u128 * o.value as u128) % self.p as u128) as u64,
            p: self.p,
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        let (mut base, mut e, mut acc) = (*self, self.p - 2, Self { value: 1, p: self.p });
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        Some(acc)
    }
}

/// An element of an exact coefficient field.
///
/// `Func` values are rational functions whose coefficients are again
/// scalars, so parameters such as `a, b, c` can be kept symbolic.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rat(BigRational),
    Mod(ModP),
    Cyc(Cyclotomic),
    Func(Box<RatFunc>),
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::int(v)
    }
}

impl From<BigRational> for Scalar {
    fn from(v: BigRational) -> Self {
        Scalar::Rat(v)
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(BigRational::one())
    }

    pub fn int(v: i64) -> Self {
        Scalar::Rat(BigRational::from_integer(v.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Rat(BigRational::new(n.into(), d.into()))
    }

    /// A free indeterminate, as an element of the rational function field.
    pub fn var(name: &str) -> Self {
        Scalar::from_ratfunc(RatFunc::from_poly(MPoly::var(name)))
    }

    /// Wraps a rational function, collapsing it to its coefficient when it
    /// is constant.
    pub fn from_ratfunc(r: RatFunc) -> Self {
        match r.as_constant() {
            Some(c) => c,
            None => Scalar::Func(Box::new(r)),
        }
    }

    pub fn from_poly(p: MPoly) -> Self {
        Scalar::from_ratfunc(RatFunc::from_poly(p))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod(m) => m.value == 0,
            Scalar::Cyc(c) => c.is_zero(),
            Scalar::Func(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod(m) => m.value == 1,
            Scalar::Cyc(c) => c.as_rational().is_some_and(One::is_one),
            Scalar::Func(_) => false,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Cyc(c) => c.as_rational(),
            _ => None,
        }
    }

    pub fn as_ratfunc(&self) -> Option<&RatFunc> {
        match self {
            Scalar::Func(f) => Some(f),
            _ => None,
        }
    }

    /// True for a plain number (no indeterminates).
    pub fn is_numeric(&self) -> bool {
        !matches!(self, Scalar::Func(_))
    }

    /// True when the value is a negative rational, used when printing signs.
    pub(crate) fn is_negative_rational(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_negative())
    }

    /// Ground field of this value (for rational functions, of their
    /// coefficients).
    pub fn base_field(&self) -> Result<Field, ExactError> {
        match self {
            Scalar::Rat(_) => Ok(Field::Rationals),
            Scalar::Mod(m) => Ok(Field::Prime(m.p)),
            Scalar::Cyc(c) => Ok(Field::Cyclotomic(c.field().clone())),
            Scalar::Func(f) => f.base_field(),
        }
    }

    /// Names of the indeterminates occurring in the value.
    pub fn variables(&self) -> Vec<String> {
        match self {
            Scalar::Func(f) => f.variables().into_iter().map(|v| v.name().to_string()).collect(),
            _ => Vec::new(),
        }
    }

    fn to_cyc(&self, k: &Arc<CycloField>) -> Cyclotomic {
        match self {
            Scalar::Rat(r) => Cyclotomic::from_rational(k, r.clone()),
            Scalar::Cyc(c) => c.clone(),
            _ => unreachable!(),
        }
    }

    fn to_mod(&self, p: u64) -> ModP {
        match self {
            Scalar::Rat(r) => ModP::from_rational(r, p).unwrap_or_else(|| {
                panic!("rational {r} has no image in F_{p}")
            }),
            Scalar::Mod(m) => *m,
            _ => unreachable!(),
        }
    }

    fn incompatible(a: &Scalar, b: &Scalar) -> ! {
        panic!(
            "incompatible coefficient fields: {} and {}",
            a.base_field().map(|f| f.to_string()).unwrap_or_default(),
            b.base_field().map(|f| f.to_string()).unwrap_or_default()
        )
    }

    pub fn add_ref(&self, o: &Scalar) -> Scalar {
        use Scalar::*;
        match (self, o) {
            (Rat(a), Rat(b)) => Rat(a + b),
            (Func(a), b) => Scalar::from_ratfunc(a.add(&RatFunc::constant(b.clone()))),
            (a, Func(b)) => Scalar::from_ratfunc(RatFunc::constant(a.clone()).add(b)),
            (Mod(a), Mod(b)) if a.p == b.p => Mod(a.add(b)),
            (Mod(a), b @ Rat(_)) | (b @ Rat(_), Mod(a)) => Mod(a.add(&b.to_mod(a.p))),
            (Cyc(a), Cyc(b)) if a.field().order() == b.field().order() => Scalar::from_cyc(a.add(b)),
            (Cyc(a), b @ Rat(_)) | (b @ Rat(_), Cyc(a)) => Scalar::from_cyc(a.add(&b.to_cyc(a.field()))),
            (a, b) => Scalar::incompatible(a, b),
        }
    }

    pub fn mul_ref(&self, o: &Scalar) -> Scalar {
        use Scalar::*;
        match (self, o) {
            (Rat(a), Rat(b)) => Rat(a * b),
            (a, b) if a.is_zero() || b.is_zero() => {
                // keep the richer field when possible
                match (a, b) {
                    (Mod(m), _) | (_, Mod(m)) => Mod(ModP::new(0, m.p)),
                    _ => Scalar::zero(),
                }
            }
            (Func(a), b) => Scalar::from_ratfunc(a.mul(&RatFunc::constant(b.clone()))),
            (a, Func(b)) => Scalar::from_ratfunc(RatFunc::constant(a.clone()).mul(b)),
            (Mod(a), Mod(b)) if a.p == b.p => Mod(a.mul(b)),
            (Mod(a), b @ Rat(_)) | (b @ Rat(_), Mod(a)) => Mod(a.mul(&b.to_mod(a.p))),
            (Cyc(a), Cyc(b)) if a.field().order() == b.field().order() => Scalar::from_cyc(a.mul(b)),
            (Cyc(a), b @ Rat(_)) | (b @ Rat(_), Cyc(a)) => Scalar::from_cyc(a.mul(&b.to_cyc(a.field()))),
            (a, b) => Scalar::incompatible(a, b),
        }
    }

    pub fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod(a) => Scalar::Mod(a.neg()),
            Scalar::Cyc(a) => Scalar::Cyc(a.neg()),
            Scalar::Func(a) => Scalar::Func(Box::new(a.neg())),
        }
    }

    pub fn sub_ref(&self, o: &Scalar) -> Scalar {
        self.add_ref(&o.neg_ref())
    }

    pub fn inv(&self) -> Result<Scalar, ExactError> {
        match self {
            Scalar::Rat(a) if a.is_zero() => Err(ExactError::DivisionByZero),
            Scalar::Rat(a) => Ok(Scalar::Rat(a.recip())),
            Scalar::Mod(a) => a.inv().map(Scalar::Mod).ok_or(ExactError::DivisionByZero),
            Scalar::Cyc(a) => a.inv().map(Scalar::Cyc).ok_or(ExactError::DivisionByZero),
            Scalar::Func(a) => a.inv().map(Scalar::from_ratfunc),
        }
    }

    pub fn div(&self, o: &Scalar) -> Result<Scalar, ExactError> {
        match (self, o) {
            (Scalar::Func(a), Scalar::Func(b)) => a.div(b).map(Scalar::from_ratfunc),
            (Scalar::Func(a), b) => a.div(&RatFunc::constant(b.clone())).map(Scalar::from_ratfunc),
            (a, Scalar::Func(b)) => RatFunc::constant(a.clone()).div(b).map(Scalar::from_ratfunc),
            _ => Ok(self.mul_ref(&o.inv()?)),
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    /// Substitute values for indeterminates; values not listed are kept.
    pub fn substitute(&self, values: &std::collections::BTreeMap<String, Scalar>) -> Result<Scalar, ExactError> {
        match self {
            Scalar::Func(f) => f.substitute(values),
            other => Ok(other.clone()),
        }
    }

    fn from_cyc(c: Cyclotomic) -> Scalar {
        Scalar::Cyc(c)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a == b,
            (Scalar::Func(a), Scalar::Func(b)) => a.as_ref() == b.as_ref(),
            (Scalar::Func(_), _) | (_, Scalar::Func(_)) => false,
            (a, b) => {
                if a.base_field().and_then(|f| f.join(&b.base_field()?)).is_err() {
                    return false;
                }
                a.sub_ref(b).is_zero()
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Mod(m) => write!(f, "{}", m.value),
            Scalar::Cyc(c) => write!(f, "{c}"),
            Scalar::Func(r) => write!(f, "{r}"),
        }
    }
}

impl Scalar {
    /// True if printing needs parentheses when used as a factor.
    pub(crate) fn is_compound(&self) -> bool {
        match self {
            Scalar::Rat(_) | Scalar::Mod(_) => false,
            Scalar::Cyc(c) => c.coeffs().iter().filter(|x| !x.is_zero()).count() > 1
                || c.coeffs()[0].is_zero() && c.coeffs().iter().any(|x| x.is_negative()),
            Scalar::Func(r) => !r.is_monomial_like(),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$imp(o)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$imp(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$imp(o)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$imp(&o)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_normalize() {
        let x = Scalar::ratio(4, -6);
        assert_eq!(x.to_string(), "-2/3");
        assert_eq!(x.inv().unwrap(), Scalar::ratio(-3, 2));
        assert_eq!(Scalar::zero().inv(), Err(ExactError::DivisionByZero));
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let x = f.int(3);
        assert_eq!(x.inv().unwrap(), f.int(5));
        assert_eq!(&x + &Scalar::int(4), f.int(0));
        assert!(Field::prime(9).is_err());
        // 1/2 embeds into F_7 as 4
        assert_eq!(f.rational(BigRational::new(1.into(), 2.into())), f.int(4));
    }

    #[test]
    fn zeta4_squares_to_minus_one() {
        let (_, z) = cyclotomic_field(4);
        assert_eq!(z.pow(2), Scalar::int(-1));
    }

    #[test]
    fn zeta3_sums_to_zero() {
        let (_, z) = cyclotomic_field(3);
        let s = Scalar::one() + z.clone() + z.pow(2);
        assert!(s.is_zero());
    }

    #[test]
    fn zeta1_is_one() {
        let (f, z) = cyclotomic_field(1);
        assert_eq!(f, Field::Rationals);
        assert!(z.is_one());
    }

    #[test]
    fn zeta_has_exact_order() {
        for n in 1..=12u32 {
            let (_, z) = cyclotomic_field(n);
            for m in 1..n {
                assert!(!z.pow(m).is_one(), "zeta_{n}^{m} = 1");
            }
            assert!(z.pow(n).is_one());
        }
    }

    #[test]
    fn field_join_rules() {
        let f7 = Field::prime(7).unwrap();
        assert_eq!(Field::Rationals.join(&f7).unwrap(), f7);
        assert!(f7.join(&Field::cyclotomic(3)).is_err());
        assert_eq!("cyclotomic:3".parse::<Field>().unwrap(), Field::cyclotomic(3));
    }

    #[test]
    fn mixed_fields_are_unequal() {
        let f7 = Field::prime(7).unwrap();
        let (_, z) = cyclotomic_field(3);
        assert_ne!(f7.int(1), z);
    }
}
