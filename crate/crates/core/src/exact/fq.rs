//! Finite fields `F_q = F_p[x]/(m(x))`.
//!
//! Elements are encoded as integers `Σ a_i p^i` where `a_i` is the coefficient
//! of `x^i`. The modulus is the first monic irreducible polynomial of degree
//! `d` in increasing order of that same encoding, so a given `q` always yields
//! the same field model.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::ExactError;

/// Default upper bound on the field size.
pub const DEFAULT_MAX_Q: u32 = 1 << 20;

/// Returns `(p, d)` with `q = p^d`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut d = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        d += 1;
    }
    (rest == 1).then_some((p, d))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += 1;
    }
    true
}

/// Field parameters plus log/exp tables over a fixed primitive element.
pub struct FqField {
    p: u32,
    d: u32,
    q: u32,
    /// Monic modulus, low degree first, length `d + 1`.
    modulus: Vec<u32>,
    generator: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for FqField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FqField")
            .field("p", &self.p)
            .field("d", &self.d)
            .field("modulus", &self.modulus)
            .field("generator", &self.generator)
            .finish()
    }
}

impl PartialEq for FqField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}

impl Eq for FqField {}

fn poly_rem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    // den monic
    let mut r: Vec<u64> = num.iter().map(|&c| c as u64).collect();
    let dd = den.len() - 1;
    let p64 = p as u64;
    while r.len() > dd {
        let top = *r.last().unwrap() % p64;
        let shift = r.len() - 1 - dd;
        if top != 0 {
            for (j, &c) in den.iter().enumerate() {
                let sub = top * c as u64 % p64;
                r[shift + j] = (r[shift + j] + p64 - sub) % p64;
            }
        }
        r.pop();
    }
    r.into_iter().map(|c| (c % p64) as u32).collect()
}

fn decode(v: u32, p: u32, d: u32) -> Vec<u32> {
    let mut out = vec![0; d as usize];
    let mut v = v;
    for c in out.iter_mut() {
        *c = v % p;
        v /= p;
    }
    out
}

fn encode(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Irreducibility by trial division against every monic polynomial of degree `≤ d/2`.
pub fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let d = modulus.len() as u32 - 1;
    if d == 0 {
        return false;
    }
    for k in 1..=d / 2 {
        let count = p.pow(k);
        for low in 0..count {
            let mut cand = decode(low, p, k);
            cand.push(1);
            if poly_rem(modulus, &cand, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn first_irreducible(p: u32, d: u32) -> Vec<u32> {
    let count = p.pow(d);
    for low in 0..count {
        let mut cand = decode(low, p, d);
        cand.push(1);
        if is_irreducible(&cand, p) {
            return cand;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl FqField {
    pub fn new(q: u32) -> Result<Arc<Self>, ExactError> {
        Self::new_bounded(q, DEFAULT_MAX_Q)
    }

    pub fn new_bounded(q: u32, max_q: u32) -> Result<Arc<Self>, ExactError> {
        let (p, d) = prime_power(q).ok_or(ExactError::NotPrimePower(q))?;
        if q > max_q {
            return Err(ExactError::FieldTooLarge { q, bound: max_q });
        }
        Ok(Arc::new(Self::build(p, d, first_irreducible(p, d))))
    }

    /// A field with an explicitly chosen modulus (monic, low degree first).
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Arc<Self>, ExactError> {
        if !is_prime(p as u64) {
            return Err(ExactError::NotPrimePower(p));
        }
        if modulus.last() != Some(&1) || !is_irreducible(&modulus, p) {
            return Err(ExactError::ReducibleModulus);
        }
        let d = modulus.len() as u32 - 1;
        let q = p.checked_pow(d).ok_or(ExactError::FieldTooLarge { q: u32::MAX, bound: DEFAULT_MAX_Q })?;
        if q > DEFAULT_MAX_Q {
            return Err(ExactError::FieldTooLarge { q, bound: DEFAULT_MAX_Q });
        }
        Ok(Arc::new(Self::build(p, d, modulus)))
    }

    fn build(p: u32, d: u32, modulus: Vec<u32>) -> Self {
        let q = p.pow(d);
        let mut field = FqField { p, d, q, modulus, generator: 0, exp: Vec::new(), log: Vec::new() };
        for g in 1..q {
            let mut exp = Vec::with_capacity(q as usize - 1);
            let mut x = 1;
            loop {
                exp.push(x);
                x = field.mul_poly(x, g);
                if x == 1 {
                    break;
                }
            }
            if exp.len() == q as usize - 1 {
                let mut log = vec![u32::MAX; q as usize];
                for (i, &v) in exp.iter().enumerate() {
                    log[v as usize] = i as u32;
                }
                field.generator = g;
                field.exp = exp;
                field.log = log;
                break;
            }
        }
        field
    }

    fn mul_poly(&self, a: u32, b: u32) -> u32 {
        let (p, d) = (self.p, self.d);
        let ca = decode(a, p, d);
        let cb = decode(b, p, d);
        let mut prod = vec![0u32; 2 * d as usize - 1];
        for (i, &x) in ca.iter().enumerate() {
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
            }
        }
        let r = poly_rem(&prod, &self.modulus, p);
        let mut full = r;
        full.resize(d as usize, 0);
        encode(&full, p)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The primitive element used for the log tables (smallest encoding of order `q - 1`).
    pub fn generator(&self) -> u32 {
        self.generator
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.d == 1 {
            return (a + b) % self.p;
        }
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.d {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.d == 1 {
            return (self.p - a) % self.p;
        }
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.d {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        let e = (self.log[a as usize] + self.log[b as usize]) % n;
        self.exp[e as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.q - 1;
        Some(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = (self.q - 1) as u64;
        self.exp[((self.log[a as usize] as u64 * (e % n)) % n) as usize]
    }

    /// Discrete logarithm to the base [`Self::generator`].
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    pub fn exp(&self, e: u64) -> u32 {
        self.exp[(e % (self.q as u64 - 1)) as usize]
    }

    /// The image of an integer in the prime field.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    /// Absolute trace `F_q → F_p`, returned as an integer in `[0, p)`.
    pub fn trace(&self, a: u32) -> u32 {
        let mut acc = 0;
        let mut x = a;
        for _ in 0..self.d {
            acc = self.add(acc, x);
            x = self.pow(x, self.p as u64);
        }
        debug_assert!(acc < self.p);
        acc
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }
}

/// An element of `F_q` bound to its field.
#[derive(Clone)]
pub struct Fq {
    field: Arc<FqField>,
    value: u32,
}

impl Fq {
    pub fn new(field: &Arc<FqField>, value: u32) -> Self {
        assert!(value < field.q, "value outside the field");
        Fq { field: field.clone(), value }
    }

    pub fn field(&self) -> &Arc<FqField> {
        &self.field
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    fn check(&self, other: &Fq) -> Result<(), ExactError> {
        if Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field {
            Ok(())
        } else {
            Err(ExactError::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Fq) -> Result<Fq, ExactError> {
        self.check(other)?;
        Ok(Fq { field: self.field.clone(), value: self.field.add(self.value, other.value) })
    }

    pub fn mul(&self, other: &Fq) -> Result<Fq, ExactError> {
        self.check(other)?;
        Ok(Fq { field: self.field.clone(), value: self.field.mul(self.value, other.value) })
    }

    pub fn inv(&self) -> Result<Fq, ExactError> {
        let v = self.field.inv(self.value).ok_or(ExactError::ZeroInverse)?;
        Ok(Fq { field: self.field.clone(), value: v })
    }

    pub fn pow(&self, e: u64) -> Fq {
        Fq { field: self.field.clone(), value: self.field.pow(self.value, e) }
    }
}

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && *self.field == *other.field
    }
}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}({})", self.field.q, self.value)
    }
}
