//! Exact arithmetic in the cyclotomic field `Q(ζ_N)`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(N)-1}` as integer
//! numerators over one positive common denominator. The representation is
//! kept canonical after every operation (numerators reduced modulo `Φ_N`,
//! common factors removed, denominator positive), so structural equality is
//! field equality.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Shared handle to a field context.
pub type Field = Arc<CycloField>;

/// The field `Q(ζ_N)` together with the data needed to reduce modulo `Φ_N`.
pub struct CycloField {
    order: usize,
    degree: usize,
    modulus: Vec<BigInt>,
    /// `x^k mod Φ_N` for `0 <= k < max(N, 2φ(N) - 1)`.
    powers: Vec<Vec<BigInt>>,
}

impl fmt::Debug for CycloField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CycloField")
            .field("order", &self.order)
            .field("degree", &self.degree)
            .finish()
    }
}

/// Builds the field context for `Q(ζ_N)`.
pub fn make_field(order: usize) -> Result<Field> {
    if order == 0 {
        return Err(Error::InvalidArgument("field order N must be at least 1".into()));
    }
    let mut memo = HashMap::new();
    let modulus = cyclotomic_polynomial(order, &mut memo);
    let degree = modulus.len() - 1;
    let span = order.max(2 * degree);
    let mut powers = Vec::with_capacity(span);
    let mut current = vec![BigInt::zero(); degree];
    current[0] = BigInt::one();
    for _ in 0..span {
        powers.push(current.clone());
        // multiply by x, then subtract top * Φ_N (Φ_N is monic)
        let top = current[degree - 1].clone();
        for k in (1..degree).rev() {
            current[k] = current[k - 1].clone();
        }
        current[0] = BigInt::zero();
        if !top.is_zero() {
            for (k, c) in current.iter_mut().enumerate() {
                *c -= &top * &modulus[k];
            }
        }
    }
    Ok(Arc::new(CycloField { order, degree, modulus, powers }))
}

/// `Φ_n` with integer coefficients, lowest degree first.
pub fn cyclotomic_polynomial(n: usize, memo: &mut HashMap<usize, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut poly = vec![BigInt::zero(); n + 1];
    poly[0] = -BigInt::one();
    poly[n] = BigInt::one();
    for d in (1..n).filter(|d| n % d == 0) {
        let divisor = cyclotomic_polynomial(d, memo);
        poly = exact_monic_division(&poly, &divisor);
    }
    memo.insert(n, poly.clone());
    poly
}

fn exact_monic_division(dividend: &[BigInt], divisor: &[BigInt]) -> Vec<BigInt> {
    let mut rem = dividend.to_vec();
    let dd = divisor.len() - 1;
    let qd = dividend.len() - 1 - dd;
    let mut quot = vec![BigInt::zero(); qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in divisor.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "cyclotomic division left a remainder");
    quot
}

/// Euler's totient by trial factorization.
pub fn euler_phi(mut n: usize) -> usize {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

impl CycloField {
    /// The ambient order `N`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// `φ(N)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficients of `Φ_N`, lowest degree first.
    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    /// The subgroup `U_d(K)` of `d`-th roots of unity, ordered by exponent.
    pub fn roots_of_unity(&self, d: usize) -> Vec<RootOfUnity> {
        let g = d.gcd(&self.order);
        let step = self.order / g;
        (0..g).map(|j| RootOfUnity::new(j * step, self.order)).collect()
    }

    /// Exponents `e` for which `ζ^e` has order exactly `d`.
    pub fn primitive_exponents(&self, d: usize) -> Vec<usize> {
        (0..self.order)
            .filter(|&e| RootOfUnity::new(e, self.order).order() == d)
            .collect()
    }
}

/// An exact element of `Q(ζ_N)`.
#[derive(Clone)]
pub struct CycScalar {
    field: Field,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycScalar {
    pub fn zero(field: &Field) -> Self {
        CycScalar { field: field.clone(), num: vec![BigInt::zero(); field.degree], den: BigInt::one() }
    }

    pub fn one(field: &Field) -> Self {
        Self::from_integer(field, 1)
    }

    pub fn from_integer(field: &Field, value: i64) -> Self {
        let mut s = Self::zero(field);
        s.num[0] = BigInt::from(value);
        s
    }

    pub fn from_rational(field: &Field, value: &BigRational) -> Self {
        let mut s = Self::zero(field);
        s.num[0] = value.numer().clone();
        s.den = value.denom().clone();
        s.normalize();
        s
    }

    /// `ζ^exponent`, the exponent taken modulo `N`.
    pub fn root(field: &Field, exponent: i64) -> Self {
        let e = exponent.rem_euclid(field.order as i64) as usize;
        CycScalar { field: field.clone(), num: field.powers[e].clone(), den: BigInt::one() }
    }

    /// The generator `ζ = ζ_N`.
    pub fn zeta(field: &Field) -> Self {
        Self::root(field, 1)
    }

    /// Builds an element from rational coefficients in the power basis. Longer
    /// inputs are reduced modulo `Φ_N`.
    pub fn from_coefficients(field: &Field, coeffs: &[BigRational]) -> Self {
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut poly: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        if poly.is_empty() {
            poly.push(BigInt::zero());
        }
        let mut s = CycScalar { field: field.clone(), num: reduce(field, &poly), den };
        s.normalize();
        s
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Power-basis coefficients as reduced rationals.
    pub fn coefficients(&self) -> Vec<BigRational> {
        self.num.iter().map(|n| BigRational::new(n.clone(), self.den.clone())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// True when the element lies in `Q`.
    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    fn normalize(&mut self) {
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if self.den.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c /= &g;
            }
            self.den /= &g;
        }
    }

    fn check_field(&self, other: &Self) {
        assert_eq!(
            self.field.order, other.field.order,
            "mixing elements of Q(ζ_{}) and Q(ζ_{})",
            self.field.order, other.field.order
        );
    }

    fn scale_int(&self, factor: &BigInt) -> Vec<BigInt> {
        self.num.iter().map(|c| c * factor).collect()
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        self.check_field(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.field);
        }
        let mut out = if other.is_rational() {
            CycScalar { field: self.field.clone(), num: self.scale_int(&other.num[0]), den: &self.den * &other.den }
        } else if self.is_rational() {
            CycScalar { field: self.field.clone(), num: other.scale_int(&self.num[0]), den: &self.den * &other.den }
        } else {
            let d = self.field.degree;
            let mut prod = vec![BigInt::zero(); 2 * d - 1];
            for (i, a) in self.num.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in other.num.iter().enumerate() {
                    if !b.is_zero() {
                        prod[i + j] += a * b;
                    }
                }
            }
            CycScalar { field: self.field.clone(), num: reduce(&self.field, &prod), den: &self.den * &other.den }
        };
        out.normalize();
        out
    }

    fn add_signed(&self, other: &Self, negate: bool) -> Self {
        self.check_field(other);
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other } else { other.clone() };
        }
        let (num, den) = if self.den == other.den {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if negate { a - b } else { a + b })
                .collect();
            (num, self.den.clone())
        } else {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| {
                    let lhs = a * &other.den;
                    let rhs = b * &self.den;
                    if negate {
                        lhs - rhs
                    } else {
                        lhs + rhs
                    }
                })
                .collect();
            (num, &self.den * &other.den)
        };
        let mut out = CycScalar { field: self.field.clone(), num, den };
        out.normalize();
        out
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            let mut out = Self::zero(&self.field);
            out.num[0] = self.den.clone();
            out.den = self.num[0].clone();
            out.normalize();
            return Ok(out);
        }
        if let Some((scale, e)) = self.as_scaled_root() {
            let root = Self::root(&self.field, -(e as i64));
            let inv_scale = Self::from_rational(&self.field, &scale.recip());
            return Ok(root.mul_ref(&inv_scale));
        }
        Ok(self.inv_by_linear_solve())
    }

    /// Detects `λ ζ^e` with `λ ∈ Q`.
    fn as_scaled_root(&self) -> Option<(BigRational, usize)> {
        let lead = self.num.iter().position(|c| !c.is_zero())?;
        for (e, p) in self.field.powers[..self.field.order].iter().enumerate() {
            let Some(pl) = p.iter().position(|c| !c.is_zero()) else { continue };
            if pl != lead {
                continue;
            }
            let ratio = BigRational::new(self.num[lead].clone(), p[lead].clone());
            let matches = self.num.iter().zip(p).all(|(a, b)| {
                BigRational::from_integer(a.clone()) == &ratio * BigRational::from_integer(b.clone())
            });
            if matches {
                return Some((ratio / BigRational::from_integer(self.den.clone()), e));
            }
        }
        None
    }

    fn inv_by_linear_solve(&self) -> Self {
        let d = self.field.degree;
        // column k of the multiplication matrix holds self * ζ^k
        let mut cols = Vec::with_capacity(d);
        for k in 0..d {
            let prod = self.mul_ref(&Self::root(&self.field, k as i64));
            cols.push(prod.coefficients());
        }
        let mut aug: Vec<Vec<BigRational>> = (0..d)
            .map(|r| {
                let mut row: Vec<BigRational> = (0..d).map(|c| cols[c][r].clone()).collect();
                row.push(if r == 0 { BigRational::one() } else { BigRational::zero() });
                row
            })
            .collect();
        for col in 0..d {
            let pivot = (col..d).find(|&r| !aug[r][col].is_zero()).expect("multiplication matrix of a nonzero element is invertible");
            aug.swap(col, pivot);
            let p = aug[col][col].clone();
            for v in aug[col].iter_mut() {
                *v = &*v / &p;
            }
            for r in 0..d {
                if r != col && !aug[r][col].is_zero() {
                    let f = aug[r][col].clone();
                    for c in col..=d {
                        let sub = &f * &aug[col][c];
                        aug[r][c] -= sub;
                    }
                }
            }
        }
        let sol: Vec<BigRational> = aug.into_iter().map(|row| row[d].clone()).collect();
        Self::from_coefficients(&self.field, &sol)
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, exponent: i64) -> Result<Self> {
        let mut base = if exponent < 0 { self.inv()? } else { self.clone() };
        let mut e = exponent.unsigned_abs();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Coefficients rendered as `p` or `p/q` strings.
    pub fn to_coeff_strings(&self) -> Vec<String> {
        self.coefficients().iter().map(|c| c.to_string()).collect()
    }

    pub fn from_coeff_strings(field: &Field, coeffs: &[String]) -> Result<Self> {
        if coeffs.len() != field.degree {
            return Err(Error::Malformed(format!(
                "expected {} coefficients for Q(ζ_{}), got {}",
                field.degree,
                field.order,
                coeffs.len()
            )));
        }
        let parsed = coeffs.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coefficients(field, &parsed))
    }

    /// Compact single-string form: the coefficient strings joined by commas.
    pub fn to_compact(&self) -> String {
        self.to_coeff_strings().join(",")
    }

    pub fn from_compact(field: &Field, s: &str) -> Result<Self> {
        let parts: Vec<String> = s.split(',').map(|p| p.trim().to_string()).collect();
        Self::from_coeff_strings(field, &parts)
    }

    pub fn to_json(&self) -> ScalarJson {
        ScalarJson { n: self.field.order, coeffs: self.to_coeff_strings() }
    }

    pub fn from_json(field: &Field, json: &ScalarJson) -> Result<Self> {
        if json.n != field.order {
            return Err(Error::Malformed(format!("scalar lives in Q(ζ_{}), expected Q(ζ_{})", json.n, field.order)));
        }
        Self::from_coeff_strings(field, &json.coeffs)
    }
}

/// Reduces an integer polynomial modulo `Φ_N`.
fn reduce(field: &Field, poly: &[BigInt]) -> Vec<BigInt> {
    let d = field.degree;
    let mut out = vec![BigInt::zero(); d];
    for (k, c) in poly.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if k < d {
            out[k] += c;
        } else {
            let power = if k < field.powers.len() { &field.powers[k] } else { &field.powers[k % field.order] };
            for (o, p) in out.iter_mut().zip(power) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
    }
    out
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Malformed(format!("not a rational coefficient: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.parse().map_err(|_| bad())?;
            let q: BigInt = q.parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Wire form of a scalar: the field order plus power-basis coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarJson {
    #[serde(rename = "N")]
    pub n: usize,
    pub coeffs: Vec<String>,
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.den == other.den && self.num == other.num
    }
}

impl Eq for CycScalar {}

impl Hash for CycScalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order.hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl PartialOrd for CycScalar {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CycScalar {
    // Only used to give elements a deterministic order.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.field.order, &self.den, &self.num).cmp(&(other.field.order, &other.den, &other.num))
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coefficients().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &'a CycScalar) -> CycScalar {
        self.add_signed(rhs, false)
    }
}

impl<'a> Sub<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &'a CycScalar) -> CycScalar {
        self.add_signed(rhs, true)
    }
}

impl<'a> Mul<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &'a CycScalar) -> CycScalar {
        self.mul_ref(rhs)
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar { field: self.field.clone(), num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

impl AddAssign<&CycScalar> for CycScalar {
    fn add_assign(&mut self, rhs: &CycScalar) {
        *self = self.add_signed(rhs, false);
    }
}

impl SubAssign<&CycScalar> for CycScalar {
    fn sub_assign(&mut self, rhs: &CycScalar) {
        *self = self.add_signed(rhs, true);
    }
}

/// `ζ^exponent` as a discrete object; products add exponents modulo `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    exponent: usize,
    field_order: usize,
}

impl RootOfUnity {
    pub fn new(exponent: usize, field_order: usize) -> Self {
        RootOfUnity { exponent: exponent % field_order, field_order }
    }

    pub fn from_signed(exponent: i64, field_order: usize) -> Self {
        Self::new(exponent.rem_euclid(field_order as i64) as usize, field_order)
    }

    pub fn one(field_order: usize) -> Self {
        Self::new(0, field_order)
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn field_order(&self) -> usize {
        self.field_order
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.field_order, other.field_order);
        Self::new(self.exponent + other.exponent, self.field_order)
    }

    pub fn pow(&self, k: i64) -> Self {
        let e = (self.exponent as i128 * k as i128).rem_euclid(self.field_order as i128);
        Self::new(e as usize, self.field_order)
    }

    pub fn inverse(&self) -> Self {
        self.pow(-1)
    }

    /// `N / gcd(e, N)`.
    pub fn order(&self) -> usize {
        self.field_order / self.exponent.gcd(&self.field_order)
    }

    pub fn to_scalar(&self, field: &Field) -> CycScalar {
        assert_eq!(field.order, self.field_order);
        CycScalar::root(field, self.exponent as i64)
    }
}

/// Order of `ζ^e` in `Q(ζ_N)`.
pub fn order_of(root: &RootOfUnity) -> usize {
    root.order()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn field_of_order_one_is_rationals() {
        let k = make_field(1).unwrap();
        assert_eq!(k.degree(), 1);
        let half = CycScalar::from_rational(&k, &BigRational::new(1.into(), 2.into()));
        assert_eq!((&half + &half), CycScalar::one(&k));
        assert!(CycScalar::zeta(&k).is_one());
    }

    #[test]
    fn phi_four_is_x_squared_plus_one() {
        let k = make_field(4).unwrap();
        assert_eq!(k.degree(), 2);
        // Φ_4 = (x^4 - 1) / ((x - 1)(x + 1)), done by hand
        assert_eq!(k.modulus(), ints(&[1, 0, 1]).as_slice());
        let i = CycScalar::zeta(&k);
        assert_eq!(&i * &i, CycScalar::from_integer(&k, -1));
    }

    #[test]
    fn totients_and_degrees() {
        // φ(12) = 12 (1 - 1/2)(1 - 1/3) = 4
        assert_eq!(euler_phi(12), 4);
        assert_eq!(make_field(12).unwrap().degree(), 4);
        for n in 1..=40 {
            assert_eq!(make_field(n).unwrap().degree(), euler_phi(n), "n = {n}");
        }
    }

    #[test]
    fn zero_has_no_inverse() {
        let k = make_field(6).unwrap();
        assert!(matches!(CycScalar::zero(&k).inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn inverse_roots_multiply_to_one() {
        let k = make_field(12).unwrap();
        let z = CycScalar::zeta(&k);
        let zinv = CycScalar::root(&k, 11);
        assert!((&z * &zinv).is_one());
        // ζ^{N/m} raised to m is 1
        let q = CycScalar::root(&k, 4);
        assert!(q.pow(3).unwrap().is_one());
    }

    #[test]
    fn generic_inverse_by_linear_solve() {
        let k = make_field(12).unwrap();
        let one = CycScalar::one(&k);
        let a = &(&CycScalar::from_integer(&k, 2) + &CycScalar::zeta(&k)) - &CycScalar::root(&k, 3);
        let ainv = a.inv().unwrap();
        assert_eq!(&a * &ainv, one);
        let b = &CycScalar::root(&k, 5) * &CycScalar::from_integer(&k, -3);
        assert_eq!(&b * &b.inv().unwrap(), one);
    }

    #[test]
    fn roots_of_unity_subgroups() {
        let k = make_field(12).unwrap();
        let u2: Vec<usize> = k.roots_of_unity(2).iter().map(|r| r.exponent()).collect();
        assert_eq!(u2, vec![0, 6]);
        assert_eq!(CycScalar::root(&k, 6), CycScalar::from_integer(&k, -1));
        assert_eq!(k.roots_of_unity(1).len(), 1);
        let u3: Vec<usize> = k.roots_of_unity(3).iter().map(|r| r.exponent()).collect();
        assert_eq!(u3, vec![0, 4, 8]);
        // gcd(5, 12) = 1
        assert_eq!(k.roots_of_unity(5).len(), 1);
    }

    #[test]
    fn orders_of_roots() {
        assert_eq!(RootOfUnity::new(0, 12).order(), 1);
        assert_eq!(order_of(&RootOfUnity::new(6, 12)), 2);
        assert_eq!(RootOfUnity::new(4, 12).order(), 3);
        assert_eq!(RootOfUnity::new(5, 12).order(), 12);
        assert_eq!(RootOfUnity::new(7, 12).mul(&RootOfUnity::new(9, 12)).exponent(), 4);
    }

    #[test]
    fn phi_vanishes_on_primitive_roots() {
        for n in [1usize, 2, 3, 4, 6, 8, 9, 10, 12, 15, 20] {
            let k = make_field(n).unwrap();
            for e in (0..n).filter(|e| e.gcd(&n) == 1) {
                let z = CycScalar::root(&k, e as i64);
                let mut acc = CycScalar::zero(&k);
                let mut p = CycScalar::one(&k);
                for c in k.modulus() {
                    let term = &p * &CycScalar::from_rational(&k, &BigRational::from_integer(c.clone()));
                    acc += &term;
                    p = &p * &z;
                }
                assert!(acc.is_zero(), "Φ_{n}(ζ^{e}) != 0");
                assert!(z.pow(n as i64).unwrap().is_one());
            }
        }
    }

    #[test]
    fn malformed_coefficients_rejected() {
        let k = make_field(4).unwrap();
        assert!(CycScalar::from_compact(&k, "1,2,3").is_err());
        assert!(CycScalar::from_compact(&k, "1/0,2").is_err());
        assert!(CycScalar::from_compact(&k, "x,2").is_err());
        let j = ScalarJson { n: 6, coeffs: vec!["1".into(), "0".into()] };
        assert!(CycScalar::from_json(&k, &j).is_err());
    }

    #[test]
    fn display_is_readable() {
        let k = make_field(4).unwrap();
        let a = &CycScalar::from_integer(&k, -2) + &CycScalar::zeta(&k);
        assert_eq!(a.to_string(), "-2 + z");
        assert_eq!(CycScalar::zero(&k).to_string(), "0");
    }
}
