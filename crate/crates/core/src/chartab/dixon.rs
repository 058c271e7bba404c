//! Dixon–Schneider: simultaneous eigenvectors of the class matrices over `F_p`,
//! lifted to exact cyclotomic values by Fourier inversion on cyclic subgroups.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{CharacterTable, ChartabError, ClassFunction, DixonInfo};
use crate::exact::{is_prime, CycNum};
use crate::groups::Group;

pub const DEFAULT_MAX_CLASSES: usize = 64;

const PRIME_BOUND: u64 = 1 << 31;

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    powmod(a, p - 2, p)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn primitive_root(p: u64) -> u64 {
    let fs = prime_factors(p - 1);
    (2..p).find(|&g| fs.iter().all(|&f| powmod(g, (p - 1) / f, p) != 1)).unwrap_or(1)
}

/// Smallest prime `p ≡ 1 (mod e)` with `p² > 4n`.
fn choose_prime(e: u32, n: u64) -> Result<u64, ChartabError> {
    let e = e as u64;
    let mut p = e + 1;
    while p < PRIME_BOUND {
        if (p as u128) * (p as u128) > 4 * n as u128 && is_prime(p) {
            return Ok(p);
        }
        p += e;
    }
    let lower = (4 * n).isqrt();
    Err(ChartabError::NoSuitablePrime { exponent: e as u32, lower, bound: PRIME_BOUND })
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(i) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, i);
        let inv = invmod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = mulmod(*x, inv, p);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for k in 0..ncols {
                    rows[i][k] = (rows[i][k] + p - mulmod(f, rows[r][k], p)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : a·x = 0}`.
fn nullspace(a: &[Vec<u64>], ncols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut m = a.to_vec();
    let pivots = rref(&mut m, p);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; ncols];
        v[free] = 1;
        for (row, &pc) in m.iter().zip(&pivots) {
            v[pc] = (p - row[free]) % p;
        }
        out.push(v);
    }
    out
}

/// Characteristic polynomial (low degree first, monic) via Hessenberg reduction.
fn charpoly(mut h: Vec<Vec<u64>>, p: u64) -> Vec<u64> {
    let n = h.len();
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| h[i][j] != 0) else { continue };
        if i != j + 1 {
            h.swap(i, j + 1);
            for row in h.iter_mut() {
                row.swap(i, j + 1);
            }
        }
        let inv = invmod(h[j + 1][j], p);
        for k in j + 2..n {
            let u = mulmod(h[k][j], inv, p);
            if u == 0 {
                continue;
            }
            for c in 0..n {
                h[k][c] = (h[k][c] + p - mulmod(u, h[j + 1][c], p)) % p;
            }
            for row in h.iter_mut() {
                row[j + 1] = (row[j + 1] + mulmod(u, row[k], p)) % p;
            }
        }
    }
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut cur = vec![0u64; m + 1];
        let d = h[m - 1][m - 1];
        for (i, &c) in prev.iter().enumerate() {
            cur[i + 1] = (cur[i + 1] + c) % p;
            cur[i] = (cur[i] + p - mulmod(d, c, p)) % p;
        }
        let mut t = 1u64;
        for i in 1..m {
            t = mulmod(t, h[m - i][m - i - 1], p);
            let f = mulmod(h[m - i - 1][m - 1], t, p);
            if f == 0 {
                continue;
            }
            for (k, &c) in polys[m - i - 1].iter().enumerate() {
                cur[k] = (cur[k] + p - mulmod(f, c, p)) % p;
            }
        }
        polys.push(cur);
    }
    polys.pop().unwrap()
}

fn eval_poly(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| (mulmod(acc, x, p) + c) % p)
}

/// `mats[i][j][k] = #{(x, y) ∈ C_i × C_j : xy = z_k}` reduced mod `p`.
fn class_matrices(g: &Group, p: u64) -> Vec<Vec<Vec<u64>>> {
    let r = g.num_classes();
    let mut counts = vec![vec![vec![0u64; r]; r]; r];
    for k in 0..r {
        let z = g.class_rep(k);
        for x in 0..g.order() {
            let y = g.mul(g.inverse(x), z);
            counts[g.class_of(x)][g.class_of(y)][k] += 1;
        }
    }
    for m in counts.iter_mut() {
        for row in m.iter_mut() {
            for v in row.iter_mut() {
                *v %= p;
            }
        }
    }
    counts
}

fn apply(m: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    m.iter().map(|row| row.iter().zip(v).fold(0, |acc, (&a, &b)| (acc + mulmod(a, b, p)) % p)).collect()
}

/// Splits the common eigenspaces of the class matrices into lines.
fn eigenvectors(mats: &[Vec<Vec<u64>>], p: u64) -> Result<Vec<Vec<u64>>, ChartabError> {
    let r = mats.len();
    let full: Vec<Vec<u64>> = (0..r).map(|i| (0..r).map(|j| u64::from(i == j)).collect()).collect();
    let mut spaces = vec![full];
    for (ci, m) in mats.iter().enumerate().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for mut basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            let pivots = rref(&mut basis, p);
            let w = basis.len();
            let images: Vec<Vec<u64>> = basis.iter().map(|b| apply(m, b, p)).collect();
            // restricted[l'][l] = coordinate l' of M·b_l
            let restricted: Vec<Vec<u64>> =
                (0..w).map(|lp| (0..w).map(|l| images[l][pivots[lp]]).collect()).collect();
            let poly = charpoly(restricted.clone(), p);
            let mut found = 0;
            for lambda in 0..p {
                if found == w {
                    break;
                }
                if eval_poly(&poly, lambda, p) != 0 {
                    continue;
                }
                let shifted: Vec<Vec<u64>> = restricted
                    .iter()
                    .enumerate()
                    .map(|(i, row)| {
                        row.iter().enumerate().map(|(j, &v)| if i == j { (v + p - lambda) % p } else { v }).collect()
                    })
                    .collect();
                let kernel = nullspace(&shifted, w, p);
                found += kernel.len();
                let sub: Vec<Vec<u64>> = kernel
                    .iter()
                    .map(|coords| {
                        let mut v = vec![0u64; r];
                        for (c, b) in coords.iter().zip(&basis) {
                            for (x, y) in v.iter_mut().zip(b) {
                                *x = (*x + mulmod(*c, *y, p)) % p;
                            }
                        }
                        v
                    })
                    .collect();
                next.push(sub);
            }
            if found != w {
                return Err(ChartabError::Separation(format!(
                    "class matrix {ci} not diagonalisable on a {w}-dimensional space mod {p}"
                )));
            }
        }
        spaces = next;
    }
    if let Some(s) = spaces.iter().find(|s| s.len() != 1) {
        return Err(ChartabError::Separation(format!("a {}-dimensional common eigenspace remains", s.len())));
    }
    Ok(spaces.into_iter().map(|mut s| s.pop().unwrap()).collect())
}

/// Full exact character table by the Dixon–Schneider method.
pub fn character_table_generic(g: &Group, max_classes: usize) -> Result<CharacterTable, ChartabError> {
    let r = g.num_classes();
    if r > max_classes {
        return Err(ChartabError::TooManyClasses { classes: r, bound: max_classes });
    }
    let n = g.order() as u64;
    let e = g.exponent();
    let p = choose_prime(e, n)?;
    let z = primitive_root(p);
    let eps_e = powmod(z, (p - 1) / e as u64, p);
    let mats = class_matrices(g, p);
    let vecs = eigenvectors(&mats, p)?;

    let sizes: Vec<u64> = (0..r).map(|c| g.class_size(c) as u64 % p).collect();
    let inv_class: Vec<usize> = (0..r).map(|c| g.inverse_class(c)).collect();
    let mut rows = Vec::with_capacity(r);
    for mut v in vecs {
        let lead = v[g.identity_class()];
        if lead == 0 {
            return Err(ChartabError::Separation("eigenvector vanishes at the identity class".into()));
        }
        let inv = invmod(lead, p);
        for x in v.iter_mut() {
            *x = mulmod(*x, inv, p);
        }
        let s = (0..r).fold(0, |acc, k| {
            (acc + mulmod(mulmod(v[k], v[inv_class[k]], p), invmod(sizes[k], p), p)) % p
        });
        if s == 0 {
            return Err(ChartabError::Separation("degenerate norm of a central character".into()));
        }
        let d2 = mulmod(n % p, invmod(s, p), p);
        let d = (1..=n.isqrt()).find(|&d| d * d % p == d2).ok_or_else(|| {
            ChartabError::Separation(format!("no degree with square {d2} mod {p}"))
        })?;
        let chi_mod: Vec<u64> = (0..r).map(|k| mulmod(mulmod(d, v[k], p), invmod(sizes[k], p), p)).collect();

        let mut values = Vec::with_capacity(r);
        for k in 0..r {
            let m = g.rep_order(k) as u64;
            let eps_m = powmod(eps_e, e as u64 / m, p);
            let inv_m = invmod(m % p, p);
            let powers: Vec<u64> = (0..m).map(|l| chi_mod[g.power_map(k, l as i64)]).collect();
            let mut terms = Vec::new();
            let mut total = 0u64;
            for j in 0..m {
                let step = powmod(eps_m, (m - j) % m, p);
                let mut acc = 0u64;
                let mut w = 1u64;
                for &x in &powers {
                    acc = (acc + mulmod(x, w, p)) % p;
                    w = mulmod(w, step, p);
                }
                let mult = mulmod(acc, inv_m, p);
                if mult > d {
                    return Err(ChartabError::Separation(format!(
                        "eigenvalue multiplicity {mult} exceeds degree {d} at class {k}"
                    )));
                }
                total += mult;
                if mult > 0 {
                    terms.push(((j * (e as u64 / m)) as i64, mult as i64));
                }
            }
            if total != d {
                return Err(ChartabError::Separation(format!("multiplicities at class {k} sum to {total}, not {d}")));
            }
            values.push(CycNum::from_exponents(e, terms)?);
        }
        rows.push((ClassFunction::from_parts(g.clone(), values), None));
    }
    let total: u64 = rows.iter().map(|(c, _)| (c.dim().unwrap() as u64).pow(2)).sum();
    if total != n {
        return Err(ChartabError::Separation(format!("sum of squared degrees {total} != {n}")));
    }
    Ok(CharacterTable::assemble(g.clone(), rows, Some(DixonInfo { prime: p, primitive_root: z })))
}
