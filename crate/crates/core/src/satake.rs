//! Floating-point Satake tuples and tolerance-based multiset containment.
//!
//! Distances are compared squared (`|x − y|² ≤ tol²`), so nothing here needs a
//! square root; callers take one when they want to display a residual.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SatakeError {
    #[error("p = {0} is not prime")]
    NotPrime(u64),
    #[error("empty parameter tuple at p = {0}")]
    Empty(u64),
    #[error("zero parameter at p = {0}")]
    ZeroParameter(u64),
    #[error("duplicate prime p = {0}")]
    DuplicatePrime(u64),
    #[error("tolerance must be positive and finite")]
    BadTolerance,
    #[error("the two inputs share no primes")]
    NoCommonPrimes,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Debug, Clone, PartialEq)]
pub struct SatakeRecord {
    pub p: u64,
    pub params: Vec<Complex64>,
}

impl SatakeRecord {
    pub fn new(p: u64, params: Vec<Complex64>) -> Result<Self, SatakeError> {
        if !is_prime(p) {
            return Err(SatakeError::NotPrime(p));
        }
        if params.is_empty() {
            return Err(SatakeError::Empty(p));
        }
        if params.iter().any(|z| z.re == 0.0 && z.im == 0.0) {
            return Err(SatakeError::ZeroParameter(p));
        }
        Ok(SatakeRecord { p, params })
    }

    pub fn sym_power(&self, k: u32) -> SatakeRecord {
        SatakeRecord { p: self.p, params: sym_power_tuple(&self.params, k) }
    }

    /// Multiplies every parameter by `u`.
    pub fn twist(&self, u: Complex64) -> SatakeRecord {
        SatakeRecord { p: self.p, params: self.params.iter().map(|z| z * u).collect() }
    }
}

/// Sorts by prime and rejects duplicates.
pub fn sort_records(mut records: Vec<SatakeRecord>) -> Result<Vec<SatakeRecord>, SatakeError> {
    records.sort_by_key(|r| r.p);
    for w in records.windows(2) {
        if w[0].p == w[1].p {
            return Err(SatakeError::DuplicatePrime(w[0].p));
        }
    }
    Ok(records)
}

/// Products over all size-`k` multisets of indices, in lexicographic order of
/// the (non-decreasing) index sequence.
pub fn sym_power_tuple(params: &[Complex64], k: u32) -> Vec<Complex64> {
    let d = params.len();
    let mut out = Vec::new();
    let mut idx = vec![0usize; k as usize];
    loop {
        out.push(idx.iter().fold(Complex64::new(1.0, 0.0), |acc, &i| acc * params[i]));
        // next non-decreasing sequence
        let mut pos = idx.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if idx[pos] + 1 < d {
                let v = idx[pos] + 1;
                for slot in &mut idx[pos..] {
                    *slot = v;
                }
                break;
            }
        }
    }
}

fn dist2(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm_sqr()
}

/// Injection of `small` into `big` with every matched pair within `tol`, by
/// augmenting paths on the closeness graph. Returns the assignment
/// `small[i] ↦ big[m[i]]` if one exists.
pub fn match_within(small: &[Complex64], big: &[Complex64], tol: f64) -> Option<Vec<usize>> {
    if small.len() > big.len() {
        return None;
    }
    let t2 = tol * tol;
    let adj: Vec<Vec<usize>> =
        small.iter().map(|&x| (0..big.len()).filter(|&j| dist2(x, big[j]) <= t2).collect()).collect();
    let mut owner: Vec<Option<usize>> = vec![None; big.len()];

    fn augment(i: usize, adj: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
        for &j in &adj[i] {
            if seen[j] {
                continue;
            }
            seen[j] = true;
            if owner[j].is_none() || augment(owner[j].unwrap(), adj, owner, seen) {
                owner[j] = Some(i);
                return true;
            }
        }
        false
    }

    for i in 0..small.len() {
        let mut seen = vec![false; big.len()];
        if !augment(i, &adj, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut m = vec![0; small.len()];
    for (j, o) in owner.iter().enumerate() {
        if let Some(i) = o {
            m[*i] = j;
        }
    }
    Some(m)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PrimeVerdict {
    pub p: u64,
    pub contained: bool,
    /// Largest squared distance in the matching; for a failure, the squared
    /// distance from the worst small parameter to its nearest big one.
    pub residual_sq: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ContainmentResult {
    pub verdicts: Vec<PrimeVerdict>,
}

impl ContainmentResult {
    pub fn holds(&self) -> bool {
        self.verdicts.iter().all(|v| v.contained)
    }

    pub fn primes_checked(&self) -> usize {
        self.verdicts.len()
    }

    pub fn failures(&self) -> impl Iterator<Item = &PrimeVerdict> {
        self.verdicts.iter().filter(|v| !v.contained)
    }

    /// Largest squared residual over primes where containment holds.
    pub fn max_residual_sq(&self) -> f64 {
        self.verdicts.iter().filter(|v| v.contained).map(|v| v.residual_sq).fold(0.0, f64::max)
    }
}

pub fn check_prime(small: &[Complex64], big: &[Complex64], tol: f64) -> (bool, f64) {
    match match_within(small, big, tol) {
        Some(m) => (true, small.iter().zip(&m).map(|(&x, &j)| dist2(x, big[j])).fold(0.0, f64::max)),
        None => {
            let worst = small
                .iter()
                .map(|&x| big.iter().map(|&y| dist2(x, y)).fold(f64::INFINITY, f64::min))
                .fold(0.0, f64::max);
            (false, worst)
        }
    }
}

/// Compares the two inputs at their common primes.
pub fn check_containment(
    small: &[SatakeRecord],
    big: &[SatakeRecord],
    tol: f64,
) -> Result<ContainmentResult, SatakeError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(SatakeError::BadTolerance);
    }
    let big_by_p: BTreeMap<u64, &SatakeRecord> = big.iter().map(|r| (r.p, r)).collect();
    let mut verdicts = Vec::new();
    for s in small {
        if let Some(b) = big_by_p.get(&s.p) {
            let (contained, residual_sq) = check_prime(&s.params, &b.params, tol);
            verdicts.push(PrimeVerdict { p: s.p, contained, residual_sq });
        }
    }
    if verdicts.is_empty() {
        return Err(SatakeError::NoCommonPrimes);
    }
    verdicts.sort_by_key(|v| v.p);
    Ok(ContainmentResult { verdicts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn unit(t: f64) -> Complex64 {
        Complex64::new(t.cos(), t.sin())
    }

    fn close(a: &[Complex64], b: &[Complex64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| dist2(*x, *y) < 1e-20)
    }

    /// Tries every injection.
    fn brute(small: &[Complex64], big: &[Complex64], tol: f64) -> bool {
        fn go(i: usize, small: &[Complex64], big: &[Complex64], used: &mut [bool], t2: f64) -> bool {
            if i == small.len() {
                return true;
            }
            for j in 0..big.len() {
                if !used[j] && dist2(small[i], big[j]) <= t2 {
                    used[j] = true;
                    if go(i + 1, small, big, used, t2) {
                        return true;
                    }
                    used[j] = false;
                }
            }
            false
        }
        go(0, small, big, &mut vec![false; big.len()], tol * tol)
    }

    #[test]
    fn sym_power_examples() {
        let a = unit(0.7);
        let pair = [a, a.inv()];
        assert!(close(&sym_power_tuple(&pair, 2), &[a * a, Complex64::new(1.0, 0.0), a.inv() * a.inv()]));
        assert!(close(&sym_power_tuple(&pair, 3), &[a.powi(3), a, a.inv(), a.powi(-3)]));
        assert!(close(&sym_power_tuple(&pair, 0), &[Complex64::new(1.0, 0.0)]));
        let three = [unit(0.1), unit(1.0), Complex64::new(2.0, 0.5)];
        assert!(close(&sym_power_tuple(&three, 1), &three));
        assert_eq!(sym_power_tuple(&three, 4).len(), 15);
    }

    #[test]
    fn record_validation() {
        assert_eq!(SatakeRecord::new(4, vec![unit(0.0)]), Err(SatakeError::NotPrime(4)));
        assert_eq!(SatakeRecord::new(5, vec![Complex64::new(0.0, 0.0)]), Err(SatakeError::ZeroParameter(5)));
        assert_eq!(SatakeRecord::new(5, vec![]), Err(SatakeError::Empty(5)));
        let r = |p| SatakeRecord::new(p, vec![unit(0.0)]).unwrap();
        assert_eq!(sort_records(vec![r(3), r(2), r(3)]), Err(SatakeError::DuplicatePrime(3)));
        assert_eq!(sort_records(vec![r(5), r(2)]).unwrap().iter().map(|x| x.p).collect::<Vec<_>>(), [2, 5]);
    }

    #[test]
    fn trivial_in_sym2_and_ladders_nest() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let base: Vec<SatakeRecord> = [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29]
            .iter()
            .map(|&p| {
                let a = unit(rng.gen_range(0.0..core::f64::consts::TAU));
                SatakeRecord::new(p, vec![a, a.inv()]).unwrap()
            })
            .collect();
        let ones: Vec<_> = base.iter().map(|r| SatakeRecord::new(r.p, vec![Complex64::new(1.0, 0.0)]).unwrap()).collect();
        let sym = |k| base.iter().map(|r| r.sym_power(k)).collect::<Vec<_>>();
        assert!(check_containment(&ones, &sym(2), 1e-12).unwrap().holds());
        for n in 1..=5 {
            let r = check_containment(&sym(n - 1), &sym(n + 1), 1e-9).unwrap();
            assert!(r.holds() && r.primes_checked() == 10);
        }
    }

    #[test]
    fn minus_one_not_in_sym2() {
        let a = unit(0.3);
        let big = [SatakeRecord::new(7, vec![a, a.inv()]).unwrap().sym_power(2)];
        let small = [SatakeRecord::new(7, vec![Complex64::new(-1.0, 0.0)]).unwrap()];
        let r = check_containment(&small, &big, 1e-6).unwrap();
        assert!(!r.holds());
        assert_eq!(r.failures().map(|v| v.p).collect::<Vec<_>>(), [7]);
        let other = [SatakeRecord::new(11, vec![a]).unwrap()];
        assert_eq!(check_containment(&small, &other, 1e-6), Err(SatakeError::NoCommonPrimes));
        assert_eq!(check_containment(&small, &big, 0.0), Err(SatakeError::BadTolerance));
    }

    #[test]
    fn matching_agrees_with_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let mut positives = 0;
        for _ in 0..1000 {
            // points on a coarse grid so that near-ties and clusters are common
            let pt = |rng: &mut ChaCha8Rng| Complex64::new(rng.gen_range(0..3) as f64, rng.gen_range(0..2) as f64);
            let ns = rng.gen_range(1..=6);
            let nb = rng.gen_range(1..=6);
            let small: Vec<_> = (0..ns).map(|_| pt(&mut rng)).collect();
            let big: Vec<_> = (0..nb).map(|_| pt(&mut rng)).collect();
            let tol = [0.5, 1.0, 1.5][rng.gen_range(0..3)];
            let m = match_within(&small, &big, tol);
            assert_eq!(m.is_some(), brute(&small, &big, tol));
            if let Some(m) = m {
                positives += 1;
                let mut seen = m.clone();
                seen.sort_unstable();
                seen.dedup();
                assert_eq!(seen.len(), m.len());
                assert!(small.iter().zip(&m).all(|(&x, &j)| dist2(x, big[j]) <= tol * tol));
            }
        }
        assert!(positives > 50);
    }

    proptest! {
        #[test]
        fn twisting_both_sides_preserves_verdict(
            s in proptest::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 1..5),
            b in proptest::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 1..6),
            t in 0.0f64..6.3,
        ) {
            let s: Vec<_> = s.into_iter().map(|(x, y)| Complex64::new(x, y)).collect();
            let b: Vec<_> = b.into_iter().map(|(x, y)| Complex64::new(x, y)).collect();
            let u = unit(t);
            let tol = 0.8;
            // keep clear of the tolerance boundary so rounding cannot flip an edge
            let margin = s.iter().all(|&x| b.iter().all(|&y| (dist2(x, y) - tol * tol).abs() > 1e-9));
            prop_assume!(margin);
            let plain = match_within(&s, &b, tol).is_some();
            let ts: Vec<_> = s.iter().map(|z| z * u).collect();
            let tb: Vec<_> = b.iter().map(|z| z * u).collect();
            prop_assert_eq!(plain, match_within(&ts, &tb, tol).is_some());
        }

        #[test]
        fn sym1_is_identity(v in proptest::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 1..6)) {
            let v: Vec<_> = v.into_iter().map(|(x, y)| Complex64::new(x, y)).collect();
            prop_assert_eq!(sym_power_tuple(&v, 1), v);
        }
    }
}
