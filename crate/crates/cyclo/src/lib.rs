//! Exact arithmetic in cyclotomic fields.
//!
//! A [`Cyclotomic`] value is an element of `Q(zeta_m)` stored in the power
//! basis `1, zeta_m, ..., zeta_m^{phi(m)-1}` with big-rational coefficients,
//! always reduced modulo the m-th cyclotomic polynomial. Arithmetic between
//! values of different orders embeds both operands into the field of order
//! `lcm` first, so the API is closed without a global ambient order.
//!
//! There is no floating point anywhere in this crate: inner products of
//! characters, eigenvalue sums and root-of-unity identities all come out as
//! exact rationals.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

pub type Int = BigInt;
pub type Rational = BigRational;

/// Convenience constructor for an exact rational `p/q`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(Int::from(p), Int::from(q))
}

/// Convenience constructor for an exact integer as a rational.
pub fn rint(p: i64) -> Rational {
    Rational::from_integer(Int::from(p))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycloError {
    /// The value does not lie in the prime field. Usually signals a
    /// malformed class function or a bug in a summation.
    #[error("cyclotomic value is not rational: {0}")]
    NotRational(String),
    /// The value is rational but not an integer (e.g. a character
    /// multiplicity that must be integral came out fractional).
    #[error("cyclotomic value is not an integer: {0}")]
    NotIntegral(String),
}

/// Euler's totient.
pub fn phi(m: u32) -> u32 {
    let mut n = m;
    let mut result = m;
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

/// All divisors of `n`, ascending.
pub fn divisors(n: u32) -> Vec<u32> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    num::integer::lcm(a, b)
}

/// Per-order data: the cyclotomic polynomial and a table expressing
/// `zeta^k` (0 <= k < m) in the power basis of degree phi(m).
struct OrderData {
    phi: usize,
    /// rows[k] = coefficients of zeta^k in the basis, for 0 <= k < max(m, 1).
    rows: Vec<Vec<Rational>>,
}

/// Exact division of polynomials over Q; panics on nonzero remainder.
fn poly_div_exact(num: &[Rational], den: &[Rational]) -> Vec<Rational> {
    let mut rem: Vec<Rational> = num.to_vec();
    let dd = den.len() - 1;
    let lead = &den[dd];
    assert!(!lead.is_zero());
    let mut quot = vec![Rational::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dd] / lead;
        if !c.is_zero() {
            for (j, dj) in den.iter().enumerate() {
                let t = &c * dj;
                rem[k + j] -= t;
            }
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact poly division");
    quot
}

/// The m-th cyclotomic polynomial, monic over Q, computed by dividing
/// x^m - 1 by Phi_d for every proper divisor d.
fn cyclotomic_poly(m: u32) -> Vec<Rational> {
    if m == 1 {
        return vec![rint(-1), rint(1)];
    }
    let mut num = vec![Rational::zero(); m as usize + 1];
    num[0] = rint(-1);
    num[m as usize] = rint(1);
    let mut result = num;
    for d in divisors(m) {
        if d == m {
            continue;
        }
        let phi_d = cyclotomic_poly(d);
        result = poly_div_exact(&result, &phi_d);
    }
    result
}

fn order_data(m: u32) -> Arc<OrderData> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<OrderData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    {
        let guard = cache.lock().unwrap();
        if let Some(d) = guard.get(&m) {
            return Arc::clone(d);
        }
    }
    let poly = cyclotomic_poly(m);
    let ph = phi(m) as usize;
    debug_assert_eq!(poly.len(), ph + 1);
    let nrows = m.max(1) as usize;
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(nrows);
    for k in 0..nrows.min(ph) {
        let mut row = vec![Rational::zero(); ph];
        row[k] = Rational::one();
        rows.push(row);
    }
    // zeta^k for k >= phi: multiply the previous row by zeta and fold the
    // overflow back using x^phi = -(lower part of Phi_m).
    for _k in rows.len()..nrows {
        let prev = rows.last().unwrap().clone();
        let mut row = vec![Rational::zero(); ph];
        for i in 0..ph - 1 {
            row[i + 1] = prev[i].clone();
        }
        let top = prev[ph - 1].clone();
        if !top.is_zero() {
            for i in 0..ph {
                let t = &top * &poly[i];
                row[i] -= t;
            }
        }
        rows.push(row);
    }
    let data = Arc::new(OrderData { phi: ph, rows });
    cache.lock().unwrap().insert(m, Arc::clone(&data));
    data
}

/// An exact element of the cyclotomic field `Q(zeta_order)`.
#[derive(Clone)]
pub struct Cyclotomic {
    order: u32,
    /// Coefficients in the power basis, length phi(order).
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![Rational::one()],
        }
    }

    /// The root of unity `zeta_m^k` (k may be any integer; it is reduced
    /// modulo m).
    pub fn root(m: u32, k: i64) -> Self {
        assert!(m >= 1, "order must be positive");
        let data = order_data(m);
        let k = k.rem_euclid(m as i64) as usize;
        Cyclotomic {
            order: m,
            coeffs: data.rows[k].clone(),
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rint(n))
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// True iff the value lies in Q. Because the power basis representation
    /// is unique, this is exactly the condition that every coefficient past
    /// the constant term vanishes.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, or an error if the element is irrational.
    pub fn as_rational(&self) -> Result<Rational, CycloError> {
        if self.is_rational() {
            Ok(self.coeffs[0].clone())
        } else {
            Err(CycloError::NotRational(format!("{self}")))
        }
    }

    /// The value as an `i64`, or an error if irrational or non-integral.
    pub fn as_integer(&self) -> Result<i64, CycloError> {
        let r = self.as_rational()?;
        if !r.is_integer() {
            return Err(CycloError::NotIntegral(format!("{self}")));
        }
        let n = r.to_integer();
        Ok(i64::try_from(n).expect("integer out of i64 range"))
    }

    /// Embed into the field of the given order (a multiple of the current
    /// order), re-reducing modulo the larger cyclotomic polynomial.
    pub fn embedded(&self, target: u32) -> Self {
        assert!(
            target % self.order == 0,
            "target order {} not a multiple of {}",
            target,
            self.order
        );
        if target == self.order {
            return self.clone();
        }
        let data = order_data(target);
        let step = (target / self.order) as usize;
        let mut coeffs = vec![Rational::zero(); data.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &data.rows[(i * step) % target as usize];
            for (j, rj) in row.iter().enumerate() {
                if !rj.is_zero() {
                    coeffs[j] += c * rj;
                }
            }
        }
        Cyclotomic {
            order: target,
            coeffs,
        }
    }

    /// Apply the Galois automorphism `zeta -> zeta^a`; `a` must be coprime
    /// to the order.
    pub fn galois(&self, a: u32) -> Self {
        let m = self.order;
        assert_eq!(
            num::integer::gcd(a % m, m).max(1),
            1,
            "galois exponent must be coprime to the order"
        );
        let data = order_data(m);
        let mut coeffs = vec![Rational::zero(); data.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &data.rows[(i * a as usize) % m as usize];
            for (j, rj) in row.iter().enumerate() {
                if !rj.is_zero() {
                    coeffs[j] += c * rj;
                }
            }
        }
        Cyclotomic { order: m, coeffs }
    }

    /// Complex conjugation, i.e. the automorphism `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> Self {
        if self.order == 1 {
            return self.clone();
        }
        self.galois(self.order - 1)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Cyclotomic::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Rewrite the element in the smallest cyclotomic field `Q(zeta_d)`,
    /// d dividing the current order, that contains it.
    pub fn reduced(&self) -> Self {
        let m = self.order;
        for d in divisors(m) {
            if d == m {
                return self.clone();
            }
            if let Some(c) = self.try_in_order(d) {
                return c;
            }
        }
        unreachable!()
    }

    /// Attempt to express the value in the basis of `Q(zeta_d)` for `d`
    /// dividing the current order, by solving the linear embedding system.
    fn try_in_order(&self, d: u32) -> Option<Cyclotomic> {
        let m = self.order;
        debug_assert!(m % d == 0);
        let big = order_data(m);
        let small_phi = phi(d) as usize;
        // Columns: embeddings of zeta_d^i into order m, i < phi(d).
        let step = (m / d) as usize;
        let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(small_phi);
        for i in 0..small_phi {
            cols.push(big.rows[(i * step) % m as usize].clone());
        }
        // Solve cols * x = self.coeffs by Gaussian elimination.
        let rows = big.phi;
        let mut aug: Vec<Vec<Rational>> = (0..rows)
            .map(|r| {
                let mut row: Vec<Rational> = cols.iter().map(|c| c[r].clone()).collect();
                row.push(self.coeffs[r].clone());
                row
            })
            .collect();
        let mut pivot_row = 0usize;
        let mut pivots = Vec::new();
        for col in 0..small_phi {
            let Some(sel) = (pivot_row..rows).find(|&r| !aug[r][col].is_zero()) else {
                continue;
            };
            aug.swap(pivot_row, sel);
            let inv = aug[pivot_row][col].clone();
            for c in col..=small_phi {
                aug[pivot_row][c] = &aug[pivot_row][c] / &inv;
            }
            for r in 0..rows {
                if r != pivot_row && !aug[r][col].is_zero() {
                    let f = aug[r][col].clone();
                    for c in col..=small_phi {
                        let t = &f * &aug[pivot_row][c];
                        aug[r][c] -= t;
                    }
                }
            }
            pivots.push((pivot_row, col));
            pivot_row += 1;
            if pivot_row == rows {
                break;
            }
        }
        // Inconsistent rows mean the value is not in the subfield.
        for r in pivot_row..rows {
            if !aug[r][small_phi].is_zero() {
                return None;
            }
        }
        let mut coeffs = vec![Rational::zero(); small_phi];
        for (r, c) in pivots {
            coeffs[c] = aug[r][small_phi].clone();
        }
        Some(Cyclotomic { order: d, coeffs })
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let n = lcm_u32(self.order, other.order);
        self.embedded(n).coeffs == other.embedded(n).coeffs
    }
}

impl Eq for Cyclotomic {}

impl std::ops::Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let n = lcm_u32(self.order, rhs.order);
        let mut a = self.embedded(n);
        let b = rhs.embedded(n);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        a
    }
}

impl std::ops::Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        let n = lcm_u32(self.order, rhs.order);
        let mut a = self.embedded(n);
        let b = rhs.embedded(n);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x -= y;
        }
        a
    }
}

impl std::ops::Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let n = lcm_u32(self.order, rhs.order);
        let a = self.embedded(n);
        let b = rhs.embedded(n);
        let data = order_data(n);
        let mut coeffs = vec![Rational::zero(); data.phi];
        for (i, ai) in a.coeffs.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let prod = ai * bj;
                let e = (i + j) % n as usize;
                if e < data.phi {
                    // zeta^e is a plain basis vector below phi
                    coeffs[e] += prod;
                } else {
                    let row = &data.rows[e];
                    for (k, rk) in row.iter().enumerate() {
                        if !rk.is_zero() {
                            coeffs[k] += &prod * rk;
                        }
                    }
                }
            }
        }
        Cyclotomic { order: n, coeffs }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                std::ops::$trait::$method(&self, &rhs)
            }
        }
        impl std::ops::$trait<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                std::ops::$trait::$method(&self, rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::ops::Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Cyclotomic {
        iter.fold(Cyclotomic::zero(), |a, b| a + b)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_int(n)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            if i == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "z{}^{}", self.order, i)?;
            } else {
                write!(f, "{a}*z{}^{}", self.order, i)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_reduce_to_rationals() {
        assert_eq!(Cyclotomic::root(4, 2), Cyclotomic::from_int(-1));
        assert_eq!(Cyclotomic::root(6, 3), Cyclotomic::from_int(-1));
        assert_eq!(Cyclotomic::root(12, 0), Cyclotomic::from_int(1));
    }

    #[test]
    fn vanishing_root_sums() {
        let s = Cyclotomic::root(3, 0) + Cyclotomic::root(3, 1) + Cyclotomic::root(3, 2);
        assert!(s.is_zero());
        let c = Cyclotomic::root(6, 1) + Cyclotomic::root(6, 5);
        assert_eq!(c.as_rational().unwrap(), rint(1));
        let x = Cyclotomic::root(5, 1) + Cyclotomic::zero();
        assert_eq!(x, Cyclotomic::root(5, 1));
    }

    #[test]
    fn products() {
        assert_eq!(
            Cyclotomic::root(12, 1) * Cyclotomic::root(12, 11),
            Cyclotomic::one()
        );
        assert_eq!(
            Cyclotomic::root(3, 1) * Cyclotomic::root(3, 1),
            Cyclotomic::root(3, 2)
        );
    }

    #[test]
    fn conjugation() {
        assert_eq!(Cyclotomic::root(5, 2).conj(), Cyclotomic::root(5, 3));
        let r = Cyclotomic::from_rational(rat(7, 3));
        assert_eq!(r.conj(), r);
        let x = Cyclotomic::root(8, 1) + Cyclotomic::root(8, 3).scale(&rat(2, 5));
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn rationality_detection() {
        let x = Cyclotomic::root(6, 1) + Cyclotomic::root(6, 5);
        assert_eq!(x.as_rational().unwrap(), rint(1));
        assert!(Cyclotomic::root(8, 1).as_rational().is_err());
        let full: Cyclotomic = (0..10).map(|j| Cyclotomic::root(10, j)).sum();
        assert_eq!(full.as_rational().unwrap(), rint(0));
    }

    #[test]
    fn negative_exponents_wrap() {
        assert_eq!(Cyclotomic::root(7, -1), Cyclotomic::root(7, 6));
        assert_eq!(Cyclotomic::root(7, -8), Cyclotomic::root(7, 6));
    }

    #[test]
    fn reduction_finds_minimal_order() {
        let x = Cyclotomic::root(6, 2); // = zeta_3
        let r = x.reduced();
        assert_eq!(r.order(), 3);
        assert_eq!(r, Cyclotomic::root(3, 1));
        let y = Cyclotomic::root(12, 3) * Cyclotomic::root(12, 3); // = -1
        assert_eq!(y.reduced().order(), 1);
    }

    #[test]
    fn mixed_order_arithmetic() {
        // zeta_3 * zeta_4 = zeta_12^{4+3}
        let p = Cyclotomic::root(3, 1) * Cyclotomic::root(4, 1);
        assert_eq!(p, Cyclotomic::root(12, 7));
    }
}
