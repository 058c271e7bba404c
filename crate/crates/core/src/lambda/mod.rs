//! λ-ring operations on class functions: sums, tensor products, Adams
//! operations, symmetric and exterior powers, and exact eigenvalue multisets.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::chartab::{char_inner, CharacterTable, ChartabError, ClassFunction};
use crate::exact::{cyclo_data, CycNum, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LambdaError {
    #[error("class functions belong to different groups")]
    GroupMismatch,
    #[error("value at class {class} is not an algebraic integer in the power basis")]
    NonIntegral { class: usize },
    #[error("eigenvalue multiplicity at class {class} is not a nonnegative integer")]
    BadMultiplicity { class: usize },
    #[error("class function is not a genuine character")]
    NotGenuine,
    #[error("inner product with irreducible {index} is not an integer")]
    NonIntegerMultiplicity { index: usize },
    #[error(transparent)]
    Chartab(#[from] ChartabError),
}

fn zip_with(
    a: &ClassFunction,
    b: &ClassFunction,
    f: impl Fn(&CycNum, &CycNum) -> CycNum,
) -> Result<ClassFunction, LambdaError> {
    if !a.same_group(b) {
        return Err(LambdaError::GroupMismatch);
    }
    let values = a.values().iter().zip(b.values()).map(|(x, y)| f(x, y)).collect();
    Ok(ClassFunction::new(a.group(), values)?)
}

pub fn cf_add(a: &ClassFunction, b: &ClassFunction) -> Result<ClassFunction, LambdaError> {
    zip_with(a, b, |x, y| x + y)
}

pub fn cf_sub(a: &ClassFunction, b: &ClassFunction) -> Result<ClassFunction, LambdaError> {
    zip_with(a, b, |x, y| x - y)
}

pub fn cf_tensor(a: &ClassFunction, b: &ClassFunction) -> Result<ClassFunction, LambdaError> {
    zip_with(a, b, |x, y| x * y)
}

pub fn cf_scale(a: &ClassFunction, r: &Rational) -> ClassFunction {
    let values = a.values().iter().map(|v| v.scale(r)).collect();
    ClassFunction::new(a.group(), values).expect("same length")
}

pub fn cf_neg(a: &ClassFunction) -> ClassFunction {
    cf_scale(a, &Rational::from_integer(-1))
}

/// `ψ^k χ (c) = χ(c^k)`.
pub fn adams(chi: &ClassFunction, k: i64) -> ClassFunction {
    let g = chi.group();
    let values = (0..g.num_classes()).map(|c| chi.value(g.power_map(c, k)).clone()).collect();
    ClassFunction::new(g, values).expect("same length")
}

/// `Λ⁰ … Λ^k` (or `Sym⁰ … Sym^k`) by Newton's identities.
fn newton_powers(chi: &ClassFunction, k: usize, alternating: bool) -> Vec<ClassFunction> {
    let g = chi.group();
    let psis: Vec<ClassFunction> = (1..=k as i64).map(|i| adams(chi, i)).collect();
    let mut out = vec![ClassFunction::trivial(g)];
    for n in 1..=k {
        let mut acc = ClassFunction::constant(g, 0);
        for i in 1..=n {
            let term = cf_tensor(&out[n - i], &psis[i - 1]).expect("same group");
            acc = if alternating && i % 2 == 0 {
                cf_sub(&acc, &term).expect("same group")
            } else {
                cf_add(&acc, &term).expect("same group")
            };
        }
        out.push(cf_scale(&acc, &Rational::new(1, n as i64)));
    }
    out
}

pub fn exterior_power(chi: &ClassFunction, k: usize) -> ClassFunction {
    newton_powers(chi, k, true).pop().unwrap()
}

pub fn symmetric_power(chi: &ClassFunction, k: usize) -> ClassFunction {
    newton_powers(chi, k, false).pop().unwrap()
}

/// All exterior powers `Λ⁰ … Λ^k`.
pub fn exterior_powers(chi: &ClassFunction, k: usize) -> Vec<ClassFunction> {
    newton_powers(chi, k, true)
}

/// All symmetric powers `Sym⁰ … Sym^k`.
pub fn symmetric_powers(chi: &ClassFunction, k: usize) -> Vec<ClassFunction> {
    newton_powers(chi, k, false)
}

/// The determinant character `Λ^{dim χ} χ`.
pub fn determinant(chi: &ClassFunction) -> Result<ClassFunction, LambdaError> {
    let d = chi.dim().filter(|&d| d >= 0).ok_or(LambdaError::NotGenuine)?;
    Ok(exterior_power(chi, d as usize))
}

/// A shortfall in a multiset comparison: `ζ_order^exponent` occurs `needed`
/// times on the left but only `available` times on the right.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Deficit {
    pub order: u32,
    pub exponent: u32,
    pub needed: u64,
    pub available: u64,
}

/// Eigenvalues of a group element of order `m`: `mult[j]` copies of `ζ_m^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenMultiset {
    order: u32,
    mults: BTreeMap<u32, u64>,
}

impl EigenMultiset {
    pub fn new(order: u32, mults: BTreeMap<u32, u64>) -> Self {
        let mults = mults.into_iter().filter(|&(_, m)| m > 0).map(|(j, m)| (j % order, m)).collect();
        EigenMultiset { order, mults }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn multiplicities(&self) -> &BTreeMap<u32, u64> {
        &self.mults
    }

    pub fn multiplicity(&self, j: u32) -> u64 {
        self.mults.get(&(j % self.order)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.mults.values().sum()
    }

    /// Keys are reduced fractions `j/m` as `(numerator, denominator)`, so that
    /// multisets of different orders compare correctly.
    pub fn normalized(&self) -> BTreeMap<(u32, u32), u64> {
        self.mults
            .iter()
            .map(|(&j, &m)| {
                let g = j.gcd(&self.order);
                ((j / g, self.order / g), m)
            })
            .collect()
    }

    pub fn contains_one(&self) -> bool {
        self.multiplicity(0) > 0
    }

    /// Multiplicity-wise `self ≤ other`; on failure the least exponent (at the
    /// common order) whose multiplicity is short.
    pub fn deficit_against(&self, other: &Self) -> Option<Deficit> {
        let l = self.order.lcm(&other.order);
        let (a, b) = (l / self.order, l / other.order);
        let theirs: BTreeMap<u32, u64> = other.mults.iter().map(|(&j, &m)| (j * b, m)).collect();
        self.mults.iter().find_map(|(&j, &m)| {
            let t = theirs.get(&(j * a)).copied().unwrap_or(0);
            (m > t).then_some(Deficit { order: l, exponent: j * a, needed: m, available: t })
        })
    }

    pub fn is_submultiset_of(&self, other: &Self) -> bool {
        self.deficit_against(other).is_none()
    }

    /// Eigenvalues with repetition, each as `ζ_m^j`.
    pub fn eigenvalues(&self) -> Vec<CycNum> {
        let mut out = Vec::new();
        for (&j, &m) in &self.mults {
            let z = CycNum::zeta(self.order, j as i64).expect("positive order");
            out.extend(core::iter::repeat_n(z, m as usize));
        }
        out
    }

    pub fn sum(&self) -> CycNum {
        CycNum::from_exponents(self.order, self.mults.iter().map(|(&j, &m)| (j as i64, m as i64)))
            .expect("positive order")
    }

    pub fn product(&self) -> CycNum {
        let e: u64 = self.mults.iter().map(|(&j, &m)| j as u64 * m).sum();
        CycNum::zeta(self.order, (e % self.order as u64) as i64).expect("positive order")
    }

    /// Multiplies every eigenvalue by `ζ_n^s`, re-expressed at order `lcm(m, n)`.
    pub fn rotate(&self, n: u32, s: u32) -> Self {
        let l = self.order.lcm(&n);
        let (a, b) = (l / self.order, l / n);
        let mults = self.mults.iter().map(|(&j, &m)| ((j * a + s * b) % l, m)).collect();
        EigenMultiset { order: l, mults }
    }
}

/// Eigenvalue multiset of class `c` by exact Fourier inversion over `⟨g_c⟩`.
///
/// No genuineness check is made; non-integral or negative multiplicities are
/// reported as errors. See [`eigen_multiset_checked`].
pub fn eigen_multiset(chi: &ClassFunction, c: usize) -> Result<EigenMultiset, LambdaError> {
    let g = chi.group();
    let m = g.rep_order(c);
    let classes: Vec<usize> = (0..m as i64).map(|l| g.power_map(c, l)).collect();
    let n = classes.iter().fold(m, |acc, &d| acc.lcm(&chi.value(d).conductor()));
    let field = cyclo_data(n);
    let phi = field.degree();

    // integer coefficient vectors of χ(g^l) at conductor n
    let mut cache: BTreeMap<usize, Vec<(usize, i128)>> = BTreeMap::new();
    for &d in &classes {
        if cache.contains_key(&d) {
            continue;
        }
        let v = chi.value(d).promote(n).expect("lcm");
        let mut sparse = Vec::new();
        for (i, x) in v.coeffs().iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let xi = x.to_i64().ok_or(LambdaError::NonIntegral { class: d })?;
            sparse.push((i, xi as i128));
        }
        cache.insert(d, sparse);
    }

    let step = (n / m) as usize;
    let nn = n as usize;
    let mut mults = BTreeMap::new();
    let mut buf = vec![0i128; nn];
    for j in 0..m as usize {
        buf.iter_mut().for_each(|x| *x = 0);
        for (l, d) in classes.iter().enumerate() {
            // multiply by ζ_m^{-jl} = ζ_n^{-jl·step}
            let shift = nn - (j * l * step) % nn;
            for &(i, x) in &cache[d] {
                buf[(i + shift) % nn] += x;
            }
        }
        field.reduce_integers(&mut buf);
        if buf[1..phi].iter().any(|&x| x != 0) || buf[0] < 0 || buf[0] % m as i128 != 0 {
            return Err(LambdaError::BadMultiplicity { class: c });
        }
        let mult = (buf[0] / m as i128) as u64;
        if mult > 0 {
            mults.insert(j as u32, mult);
        }
    }
    Ok(EigenMultiset { order: m, mults })
}

/// Exact multiplicities `⟨χ, χ_i⟩` for every irreducible of the table.
pub fn multiplicities(chi: &ClassFunction, table: &CharacterTable) -> Result<Vec<i64>, LambdaError> {
    if !alloc::sync::Arc::ptr_eq(chi.group(), table.group()) {
        return Err(LambdaError::GroupMismatch);
    }
    table
        .irreducibles()
        .iter()
        .enumerate()
        .map(|(i, irr)| {
            char_inner(chi, irr)?
                .to_rational()
                .and_then(|r| r.to_i64())
                .ok_or(LambdaError::NonIntegerMultiplicity { index: i })
        })
        .collect()
}

/// Nonzero `(irreducible index, multiplicity)` pairs, verified to reproduce `χ`.
pub fn decompose(chi: &ClassFunction, table: &CharacterTable) -> Result<Vec<(usize, i64)>, LambdaError> {
    let mults = multiplicities(chi, table)?;
    let mut rebuilt = ClassFunction::constant(chi.group(), 0);
    for (i, &m) in mults.iter().enumerate() {
        if m != 0 {
            rebuilt = cf_add(&rebuilt, &cf_scale(table.irreducible(i), &Rational::from_integer(m)))?;
        }
    }
    if rebuilt != *chi {
        return Err(LambdaError::Chartab(ChartabError::Separation("table does not span the class function".into())));
    }
    Ok(mults.into_iter().enumerate().filter(|&(_, m)| m != 0).collect())
}

/// A genuine character: every multiplicity is a nonnegative integer.
pub fn is_genuine(chi: &ClassFunction, table: &CharacterTable) -> Result<bool, LambdaError> {
    match multiplicities(chi, table) {
        Ok(m) => Ok(m.iter().all(|&x| x >= 0)),
        Err(LambdaError::NonIntegerMultiplicity { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// [`eigen_multiset`] after confirming that `χ` is genuine.
pub fn eigen_multiset_checked(
    chi: &ClassFunction,
    c: usize,
    table: &CharacterTable,
) -> Result<EigenMultiset, LambdaError> {
    if !is_genuine(chi, table)? {
        return Err(LambdaError::NotGenuine);
    }
    eigen_multiset(chi, c)
}

#[cfg(test)]
mod tests;
