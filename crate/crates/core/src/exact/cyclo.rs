//! Cyclotomic number fields `Q[q]/(Phi_n(q))` and the univariate rational
//! polynomial helpers they need.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Descriptor of the n-th cyclotomic field. `phi` holds the integer
/// coefficients of `Phi_n`, lowest degree first; it is monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloField {
    n: u32,
    phi: Vec<BigInt>,
}

impl CycloField {
    pub fn new(n: u32) -> Arc<Self> {
        assert!(n >= 1, "cyclotomic order must be positive");
        Arc::new(Self {
            n,
            phi: cyclotomic_polynomial(n),
        })
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    /// `phi(n)`, the dimension over Q.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn minimal_polynomial(&self) -> &[BigInt] {
        &self.phi
    }

    fn modulus(&self) -> Vec<BigRational> {
        self.phi
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect()
    }
}

/// Integer coefficients of the n-th cyclotomic polynomial, computed from
/// `x^n - 1 = prod_{d | n} Phi_d(x)`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let mut memo = BTreeMap::new();
    phi_rec(n, &mut memo)
}

fn phi_rec(n: u32, memo: &mut BTreeMap<u32, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let div = phi_rec(d, memo);
            num = exact_div_monic(&num, &div);
        }
    }
    memo.insert(n, num.clone());
    num
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// An element of a cyclotomic field, stored as its reduced coefficient vector.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    field: Arc<CycloField>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.n == other.field.n && self.coeffs == other.coeffs
    }
}

impl Cyclotomic {
    pub fn from_rational(field: &Arc<CycloField>, r: BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); field.degree()];
        coeffs[0] = r;
        Self {
            field: field.clone(),
            coeffs,
        }
    }

    /// The distinguished primitive root `q`.
    pub fn generator(field: &Arc<CycloField>) -> Self {
        Self::from_poly(field, vec![BigRational::zero(), BigRational::one()])
    }

    /// Reduce an arbitrary polynomial in `q` modulo `Phi_n`.
    pub fn from_poly(field: &Arc<CycloField>, poly: Vec<BigRational>) -> Self {
        let (_, mut rem) = poly_divrem(&poly, &field.modulus());
        rem.resize(field.degree(), BigRational::zero());
        Self {
            field: field.clone(),
            coeffs: rem,
        }
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Returns the rational value if the element lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&o.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Self {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::from_poly(&self.field, poly_mul(&self.coeffs, &o.coeffs))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (g, s, _) = poly_ext_gcd(&trim(self.coeffs.clone()), &self.field.modulus());
        // Phi_n is irreducible, so the gcd is a nonzero constant.
        debug_assert_eq!(g.len(), 1);
        let c = g[0].clone();
        let s: Vec<BigRational> = s.into_iter().map(|x| x / &c).collect();
        Some(Self::from_poly(&self.field, s))
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    if p.is_empty() {
        p.push(BigRational::zero());
    }
    p
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect()
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = trim(b.to_vec());
    let mut rem = trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() <= db {
        return (vec![BigRational::zero()], rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] / &lead;
        if c.is_zero() {
            continue;
        }
        for (i, d) in b.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    rem.truncate(db.max(1));
    (trim(quot), trim(rem))
}

fn is_zero_poly(p: &[BigRational]) -> bool {
    p.iter().all(Zero::is_zero)
}

/// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g`.
fn poly_ext_gcd(
    a: &[BigRational],
    b: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>, Vec<BigRational>) {
    let mut r0 = trim(a.to_vec());
    let mut r1 = trim(b.to_vec());
    let mut s0 = vec![BigRational::one()];
    let mut s1 = vec![BigRational::zero()];
    let mut t0 = vec![BigRational::zero()];
    let mut t1 = vec![BigRational::one()];
    while !is_zero_poly(&r1) {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = trim(poly_sub(&s0, &poly_mul(&q, &s1)));
        let t2 = trim(poly_sub(&t0, &poly_mul(&q, &t1)));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    (r0, s0, t0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn inverse_in_q_zeta5() {
        let k = CycloField::new(5);
        let q = Cyclotomic::generator(&k);
        let one = Cyclotomic::from_rational(&k, BigRational::one());
        let x = q.add(&one);
        let y = x.inv().unwrap();
        assert_eq!(x.mul(&y), one);
    }
}
