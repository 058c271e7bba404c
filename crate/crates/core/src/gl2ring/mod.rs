//! Formal character ring of `GL₂ × GL₂'` with abelian twist coefficients.
//!
//! A basis element is `τ · Sym^a(π) ⊗ Sym^{a'}(π')` where `τ` is a monomial in
//! the twist symbols `ω, χ₁, χ₂, χ, ω'`. The determinant of `π` is identified
//! with `ω` (and that of `π'` with `ω'`), so `det^b Sym^a(π)` is stored as
//! `ω^b Sym^a(π)`. Products follow Clebsch–Gordan in each factor; symmetric and
//! exterior powers go through weight monomials.

mod expr;
mod sym6;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

pub use expr::{eval_expr, parse_expr, verify_identity, Expr, IdentityCheck};
pub use sym6::{su2_ladder, sym6_isobaric_types, IsobaricType, Sym6Case, Sym6Certificate, CertifiedIdentity};

/// Refuse symmetric/exterior powers whose monomial expansion exceeds this.
pub const DEFAULT_EXPANSION_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("symmetric and exterior powers need a nonnegative combination")]
    Virtual,
    #[error("expansion needs {needed} monomials, above the bound of {bound}")]
    BoundExceeded { needed: u64, bound: u64 },
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("negative powers are only defined for twist monomials")]
    NotInvertible,
    #[error("isobaric bookkeeping failed: {0}")]
    Bookkeeping(String),
}

/// Twist symbols, in canonical order.
pub const TWIST_SYMBOLS: [&str; 5] = ["w", "x1", "x2", "chi", "w2"];
const OMEGA: usize = 0;
const OMEGA2: usize = 4;

pub type Twist = [i32; 5];

/// `τ · Sym^a(π) ⊗ Sym^{a'}(π')`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Key {
    pub a: u32,
    pub a2: u32,
    pub twist: Twist,
}

impl Key {
    pub fn dim(&self) -> i64 {
        (self.a as i64 + 1) * (self.a2 as i64 + 1)
    }
}

/// Element of the formal ring: integer combination of [`Key`]s, no zero entries.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct RingElem {
    terms: BTreeMap<Key, i64>,
}

fn add_twist(a: &Twist, b: &Twist) -> Twist {
    core::array::from_fn(|i| a[i] + b[i])
}

impl RingElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::term(Key { a: 0, a2: 0, twist: [0; 5] }, c)
    }

    pub fn term(key: Key, c: i64) -> Self {
        let mut e = Self::zero();
        e.add_term(key, c);
        e
    }

    /// `Sym^a(π)`.
    pub fn sym_pi(a: u32) -> Self {
        Self::term(Key { a, a2: 0, twist: [0; 5] }, 1)
    }

    /// `Sym^a(π')`.
    pub fn sym_pi2(a: u32) -> Self {
        Self::term(Key { a: 0, a2: a, twist: [0; 5] }, 1)
    }

    pub fn twist(t: Twist) -> Self {
        Self::term(Key { a: 0, a2: 0, twist: t }, 1)
    }

    fn add_term(&mut self, key: Key, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(key).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Key, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn dim(&self) -> i64 {
        self.terms.iter().map(|(k, c)| k.dim() * c).sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, &c) in &other.terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn scale(&self, s: i64) -> Self {
        let mut out = Self::zero();
        for (&k, &c) in &self.terms {
            out.add_term(k, c * s);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    /// Clebsch–Gordan in both factors; twists multiply.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let tw = add_twist(&k1.twist, &k2.twist);
                for i in 0..=k1.a.min(k2.a) {
                    for j in 0..=k1.a2.min(k2.a2) {
                        let mut t = tw;
                        t[OMEGA] += i as i32;
                        t[OMEGA2] += j as i32;
                        out.add_term(Key { a: k1.a + k2.a - 2 * i, a2: k1.a2 + k2.a2 - 2 * j, twist: t }, c1 * c2);
                    }
                }
            }
        }
        out
    }

    /// The single twist monomial this element is, if any.
    pub fn as_twist(&self) -> Option<Twist> {
        match self.terms.iter().collect::<Vec<_>>().as_slice() {
            [(k, 1)] if k.a == 0 && k.a2 == 0 => Some(k.twist),
            _ => None,
        }
    }

    pub fn pow(&self, e: i32) -> Result<Self, RingError> {
        if e < 0 {
            let t = self.as_twist().ok_or(RingError::NotInvertible)?;
            return Ok(Self::twist(t.map(|x| -x * e.abs())));
        }
        let mut acc = Self::constant(1);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        Ok(acc)
    }

    /// Twist-free specialisation: every twist symbol (including `ω`, `ω'`) set to 1.
    pub fn specialize_trivial_twists(&self) -> Self {
        let mut out = Self::zero();
        for (k, &c) in &self.terms {
            out.add_term(Key { a: k.a, a2: k.a2, twist: [0; 5] }, c);
        }
        out
    }

    fn to_monomials(&self) -> BTreeMap<Mono, i64> {
        let mut out = BTreeMap::new();
        for (k, &c) in &self.terms {
            for m in expand_key(k) {
                *out.entry(m).or_insert(0) += c;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    fn from_monomials(mut monos: BTreeMap<Mono, i64>) -> Result<Self, RingError> {
        let mut out = Self::zero();
        while let Some((&top, &c)) = monos.iter().max_by_key(|(m, _)| (m.0[0] - m.0[1], m.0[2] - m.0[3])) {
            let [x1, x2, y1, y2, c1, c2, ch] = top.0;
            if x1 < x2 || y1 < y2 {
                return Err(RingError::Bookkeeping("weight multiset is not Weyl-symmetric".into()));
            }
            let key = Key { a: (x1 - x2) as u32, a2: (y1 - y2) as u32, twist: [x2, c1, c2, ch, y2] };
            for m in expand_key(&key) {
                let e = monos.entry(m).or_insert(0);
                *e -= c;
                if *e == 0 {
                    monos.remove(&m);
                }
            }
            out.add_term(key, c);
        }
        Ok(out)
    }

    pub fn sym(&self, k: u32) -> Result<Self, RingError> {
        self.power_op(k, false, DEFAULT_EXPANSION_BOUND)
    }

    pub fn ext(&self, k: u32) -> Result<Self, RingError> {
        self.power_op(k, true, DEFAULT_EXPANSION_BOUND)
    }

    /// `Sym^k` (or `Λ^k` when `alternating`) by aggregating weight monomials.
    pub fn power_op(&self, k: u32, alternating: bool, bound: u64) -> Result<Self, RingError> {
        if !self.is_nonnegative() {
            return Err(RingError::Virtual);
        }
        let d = self.dim() as u64;
        let needed = if alternating { binomial(d, k as u64) } else { binomial(d + k as u64 - 1, k as u64) };
        if needed > bound || (k as u64).saturating_mul(d) > bound {
            return Err(RingError::BoundExceeded { needed: needed.max(k as u64 * d), bound });
        }
        let k = k as usize;
        let mut series: Vec<BTreeMap<Mono, i64>> = vec![BTreeMap::new(); k + 1];
        series[0].insert(Mono::ONE, 1);
        for (m, c) in self.to_monomials() {
            let mut powers = vec![Mono::ONE];
            for j in 1..=k {
                powers.push(powers[j - 1].mul(&m));
            }
            let mut next: Vec<BTreeMap<Mono, i64>> = vec![BTreeMap::new(); k + 1];
            for (deg, part) in series.iter().enumerate() {
                for j in 0..=(k - deg) {
                    let coef = if alternating {
                        binomial(c as u64, j as u64) as i64
                    } else {
                        binomial(c as u64 + j as u64 - 1, j as u64) as i64
                    };
                    if coef == 0 && j > 0 {
                        break;
                    }
                    let coef = if j == 0 { 1 } else { coef };
                    for (mono, v) in part {
                        *next[deg + j].entry(mono.mul(&powers[j])).or_insert(0) += v * coef;
                    }
                }
            }
            series = next;
        }
        let mut top = core::mem::take(&mut series[k]);
        top.retain(|_, c| *c != 0);
        Self::from_monomials(top)
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Laurent monomial in `x1, x2, y1, y2, χ₁, χ₂, χ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Mono([i32; 7]);

impl Mono {
    const ONE: Mono = Mono([0; 7]);

    fn mul(&self, o: &Mono) -> Mono {
        Mono(core::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

fn expand_key(k: &Key) -> impl Iterator<Item = Mono> + '_ {
    let [w, c1, c2, ch, w2] = k.twist;
    (0..=k.a as i32).flat_map(move |i| {
        (0..=k.a2 as i32).map(move |j| Mono([k.a as i32 - i + w, i + w, k.a2 as i32 - j + w2, j + w2, c1, c2, ch]))
    })
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.terms.iter().rev() {
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in k.twist.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(TWIST_SYMBOLS[i].into()),
                    _ => factors.push(alloc::format!("{}^{}", TWIST_SYMBOLS[i], e)),
                }
            }
            if k.a > 0 {
                factors.push(alloc::format!("Sym[{}](pi)", k.a));
            }
            if k.a2 > 0 {
                factors.push(alloc::format!("Sym[{}](pi2)", k.a2));
            }
            let mut s = String::new();
            let mag = c.abs();
            if factors.is_empty() {
                let _ = write!(s, "{mag}");
            } else {
                if mag != 1 {
                    let _ = write!(s, "{mag}*");
                }
                s.push_str(&factors.join("*"));
            }
            match (first, c < 0) {
                (true, true) => write!(f, "-{s}")?,
                (true, false) => f.write_str(&s)?,
                (false, true) => write!(f, " - {s}")?,
                (false, false) => write!(f, " + {s}")?,
            }
            first = false;
        }
        Ok(())
    }
}
