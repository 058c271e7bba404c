//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! A [`CycNum`] of conductor `N` is a dense coefficient vector of length
//! `φ(N)` in the power basis `1, ζ, …, ζ^{φ(N)-1}`, reduced modulo the
//! cyclotomic polynomial `Φ_N`. The reduction is applied eagerly, so two values
//! of the same conductor are equal exactly when their vectors are equal.
//! Values of different conductors are compared and combined in `Q(ζ_lcm)`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::fmt::Write as _;
use core::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;

use super::{ExactError, Rational};

/// Per-conductor data: `Φ_N` and its sparse tail.
#[derive(Debug)]
pub struct CycloData {
    n: u32,
    phi: usize,
    /// Dense coefficients of `Φ_N`, low degree first, monic of degree `phi`.
    poly: Vec<i64>,
    /// Non-zero coefficients of `Φ_N` below the leading term.
    tail: Vec<(usize, i64)>,
}

impl CycloData {
    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn polynomial(&self) -> &[i64] {
        &self.poly
    }

    /// Reduces an integer buffer of length `N` (exponents mod `N`) modulo `Φ_N`
    /// in place; afterwards only the first `φ(N)` entries are meaningful.
    pub fn reduce_integers(&self, buf: &mut [i128]) {
        debug_assert_eq!(buf.len(), self.n as usize);
        for d in (self.phi..buf.len()).rev() {
            let c = core::mem::take(&mut buf[d]);
            if c == 0 {
                continue;
            }
            let shift = d - self.phi;
            for &(t, pc) in &self.tail {
                buf[shift + t] -= c * pc as i128;
            }
        }
    }
}

static CACHE: spin::RwLock<BTreeMap<u32, Arc<CycloData>>> = spin::RwLock::new(BTreeMap::new());

pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
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

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Exact division of integer polynomials by a monic divisor.
fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &dc) in den.iter().enumerate() {
                rem[i + j] = rem[i + j]
                    .checked_sub(c.checked_mul(dc).expect("cyclotomic coefficient overflow"))
                    .expect("cyclotomic coefficient overflow");
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

fn build(n: u32) -> CycloData {
    // Φ_N = (x^N - 1) / Π_{d | N, d < N} Φ_d
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in divisors(n) {
        if d < n {
            let sub = cyclo_data(d);
            poly = div_monic(&poly, &sub.poly);
        }
    }
    let phi = poly.len() - 1;
    debug_assert_eq!(phi as u32, euler_phi(n));
    let tail = poly[..phi]
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i, c))
        .collect();
    CycloData { n, phi, poly, tail }
}

/// Shared data for conductor `n`, computed on first use.
///
/// Concurrent first uses may both compute the polynomial; the first insert wins
/// and the results are identical.
pub fn cyclo_data(n: u32) -> Arc<CycloData> {
    assert!(n > 0, "conductor must be positive");
    if let Some(d) = CACHE.read().get(&n) {
        return d.clone();
    }
    let built = Arc::new(build(n));
    CACHE.write().entry(n).or_insert(built).clone()
}

fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// An exact element of `Q(ζ_N)`.
#[derive(Clone)]
pub struct CycNum {
    field: Arc<CycloData>,
    coeffs: Vec<Rational>,
}

impl CycNum {
    pub fn from_rational(r: Rational) -> Self {
        CycNum { field: cyclo_data(1), coeffs: vec![r] }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// Zero of conductor `n`.
    pub fn zero_in(n: u32) -> Self {
        let field = cyclo_data(n);
        let coeffs = vec![Rational::zero(); field.phi];
        CycNum { field, coeffs }
    }

    /// `ζ_N^exponent`, with the exponent reduced mod `N`.
    pub fn zeta(n: u32, exponent: i64) -> Result<Self, ExactError> {
        if n == 0 {
            return Err(ExactError::ZeroConductor);
        }
        let field = cyclo_data(n);
        let e = exponent.rem_euclid(n as i64) as usize;
        let mut buf = vec![Rational::zero(); n as usize];
        buf[e] = Rational::one();
        Ok(Self::reduce(field, buf))
    }

    /// `Σ_i coeffs[i] ζ_N^i` for an arbitrary-length coefficient list.
    pub fn from_coeffs(n: u32, coeffs: &[Rational]) -> Result<Self, ExactError> {
        if n == 0 {
            return Err(ExactError::ZeroConductor);
        }
        let field = cyclo_data(n);
        let mut buf = vec![Rational::zero(); n as usize];
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                buf[i % n as usize] += c;
            }
        }
        Ok(Self::reduce(field, buf))
    }

    /// `Σ_j mult_j ζ_N^{exponent_j}` for integer multiplicities.
    pub fn from_exponents(n: u32, terms: impl IntoIterator<Item = (i64, i64)>) -> Result<Self, ExactError> {
        if n == 0 {
            return Err(ExactError::ZeroConductor);
        }
        let field = cyclo_data(n);
        let mut buf = vec![Rational::zero(); n as usize];
        for (e, m) in terms {
            buf[e.rem_euclid(n as i64) as usize] += &Rational::from_integer(m);
        }
        Ok(Self::reduce(field, buf))
    }

    /// Folds a buffer of length `N` (exponents already mod `N`) into the power basis.
    fn reduce(field: Arc<CycloData>, mut buf: Vec<Rational>) -> Self {
        let n = field.n as usize;
        debug_assert_eq!(buf.len(), n);
        let phi = field.phi;
        for d in (phi..n).rev() {
            if buf[d].is_zero() {
                continue;
            }
            let c = core::mem::take(&mut buf[d]);
            let shift = d - phi;
            for &(t, pc) in &field.tail {
                let delta = &c * &Rational::from_integer(pc);
                buf[shift + t] -= &delta;
            }
        }
        buf.truncate(phi);
        CycNum { field, coeffs: buf }
    }

    pub fn conductor(&self) -> u32 {
        self.field.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// The value as a rational, if it lies in `Q`.
    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    /// The same number represented in `Q(ζ_m)`; requires `conductor | m`.
    pub fn promote(&self, m: u32) -> Result<Self, ExactError> {
        let n = self.field.n;
        if m == 0 {
            return Err(ExactError::ZeroConductor);
        }
        if !m.is_multiple_of(n) {
            return Err(ExactError::NotDivisible { from: n, to: m });
        }
        if m == n {
            return Ok(self.clone());
        }
        let step = (m / n) as usize;
        let field = cyclo_data(m);
        let mut buf = vec![Rational::zero(); m as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                buf[i * step] = c.clone();
            }
        }
        Ok(Self::reduce(field, buf))
    }

    fn promote_pair(&self, other: &Self) -> (Self, Self) {
        let (a, b) = (self.field.n, other.field.n);
        if a == b {
            return (self.clone(), other.clone());
        }
        let m = lcm(a, b);
        (self.promote(m).expect("lcm"), other.promote(m).expect("lcm"))
    }

    fn combine(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        if self.field.n == other.field.n {
            let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect();
            return CycNum { field: self.field.clone(), coeffs };
        }
        let (a, b) = self.promote_pair(other);
        a.combine(&b, f)
    }

    fn mul_same(&self, other: &Self) -> Self {
        let n = self.field.n as usize;
        let mut buf = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = (i + j) % n;
                let prod = a * b;
                buf[k] += &prod;
            }
        }
        Self::reduce(self.field.clone(), buf)
    }

    /// Multiplication by `ζ_N^e` where `N` is this value's conductor.
    pub fn mul_zeta(&self, e: i64) -> Self {
        let n = self.field.n as usize;
        let e = e.rem_euclid(n as i64) as usize;
        let mut buf = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                buf[(i + e) % n] = c.clone();
            }
        }
        Self::reduce(self.field.clone(), buf)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycNum { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Galois automorphism `ζ_N ↦ ζ_N^a`; `a` must be coprime to `N`.
    pub fn galois(&self, a: i64) -> Self {
        let n = self.field.n as i64;
        assert!(a.rem_euclid(n).gcd(&n) == 1 || n == 1, "galois exponent must be a unit mod N");
        let mut buf = vec![Rational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                buf[(a * i as i64).rem_euclid(n) as usize] += c;
            }
        }
        Self::reduce(self.field.clone(), buf)
    }

    /// Complex conjugate, the automorphism `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Multiplicative inverse via the product of all other Galois conjugates.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let n = self.field.n as i64;
        let mut others = CycNum::one();
        for a in 2..n.max(2) {
            if a.gcd(&n) == 1 {
                others = &others * &self.galois(a);
            }
        }
        let norm = (self * &others).to_rational().expect("field norm is rational");
        let inv = norm.recip().ok_or(ExactError::DivisionByZero)?;
        // others has conductor 1 when N <= 2; promote so the result keeps N.
        let others = others.promote(lcm(others.conductor(), self.field.n))?;
        Ok(others.scale(&inv))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ExactError> {
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = CycNum::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Lexicographic order on coefficient vectors after promotion to a common conductor.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        let (a, b) = self.promote_pair(other);
        a.coeffs.cmp(&b.coeffs)
    }

    /// Evaluates at `ζ_N = e^{2πi/N}` given a table of `(cos, sin)` of `2πk/N`.
    pub fn eval_with(&self, root: impl Fn(u32, usize) -> (f64, f64)) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (cr, ci) = root(self.field.n, k);
            let v = c.to_f64();
            re += v * cr;
            im += v * ci;
        }
        (re, im)
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.field.n == other.field.n {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.promote_pair(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycNum {}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        self.combine(rhs, |a, b| a + b)
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        self.combine(rhs, |a, b| a - b)
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        if self.field.n == rhs.field.n {
            return self.mul_same(rhs);
        }
        if rhs.field.n == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        if self.field.n == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        let (a, b) = self.promote_pair(rhs);
        a.mul_same(&b)
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &CycNum) -> CycNum {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<Rational> for CycNum {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for CycNum {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.field.n;
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            match k {
                0 => write!(out, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(out, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(out, "z{n}")?;
                    } else {
                        write!(out, "z{n}^{k}")?;
                    }
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum[{}]({})", self.field.n, self)
    }
}
