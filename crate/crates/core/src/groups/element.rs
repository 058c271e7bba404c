use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::GroupError;
use crate::exact::FqField;

/// A permutation of `{0, …, n-1}` stored as its image list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self, GroupError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            match seen.get_mut(i as usize) {
                Some(s) if !*s => *s = true,
                _ => return Err(GroupError::NotBijection),
            }
        }
        Ok(Perm(images))
    }

    /// Builds a permutation of `degree` points from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self, GroupError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a as usize >= degree || b as usize >= degree || touched[a as usize] {
                    return Err(GroupError::NotBijection);
                }
                touched[a as usize] = true;
                images[a as usize] = b;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.0[i as usize]
    }

    /// `(self * other)(i) = self(other(i))`: the right factor acts first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm(inv)
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start as u32;
            while !seen[i as usize] {
                seen[i as usize] = true;
                cycle.push(i);
                i = self.0[i as usize];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, i) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{i}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses cycle notation such as `(0 1 2)(3 4)`; points may be separated by
/// spaces or commas and `()` is the identity.
pub fn parse_cycles(s: &str) -> Result<Vec<Vec<u32>>, GroupError> {
    let s = s.trim();
    let mut cycles = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let open = rest.strip_prefix('(').ok_or(GroupError::Parse)?;
        let close = open.find(')').ok_or(GroupError::Parse)?;
        let body = &open[..close];
        let mut cycle = Vec::new();
        for tok in body.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            cycle.push(tok.parse::<u32>().map_err(|_| GroupError::Parse)?);
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        }
        rest = open[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// An invertible square matrix over `F_q`, row-major.
#[derive(Clone)]
pub struct Matrix {
    field: Arc<FqField>,
    dim: usize,
    entries: Vec<u32>,
}

impl Matrix {
    pub fn new(field: &Arc<FqField>, dim: usize, entries: Vec<u32>) -> Result<Self, GroupError> {
        if entries.len() != dim * dim || entries.iter().any(|&e| e >= field.order()) {
            return Err(GroupError::Parse);
        }
        let m = Matrix { field: field.clone(), dim, entries };
        if m.determinant() == 0 {
            return Err(GroupError::SingularMatrix);
        }
        Ok(m)
    }

    pub fn identity(field: &Arc<FqField>, dim: usize) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        Matrix { field: field.clone(), dim, entries }
    }

    pub fn field(&self) -> &Arc<FqField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.dim + c]
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let f = &self.field;
        let n = self.dim;
        let mut out = vec![0u32; n * n];
        for r in 0..n {
            for c in 0..n {
                let mut acc = 0;
                for k in 0..n {
                    acc = f.add(acc, f.mul(self.entries[r * n + k], other.entries[k * n + c]));
                }
                out[r * n + c] = acc;
            }
        }
        Matrix { field: self.field.clone(), dim: n, entries: out }
    }

    pub fn determinant(&self) -> u32 {
        let f = &self.field;
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut det = 1;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| a[r * n + col] != 0) else {
                return 0;
            };
            if piv != col {
                for k in 0..n {
                    a.swap(piv * n + k, col * n + k);
                }
                det = f.neg(det);
            }
            let p = a[col * n + col];
            det = f.mul(det, p);
            let pinv = f.inv(p).expect("nonzero pivot");
            for r in col + 1..n {
                let factor = f.mul(a[r * n + col], pinv);
                if factor != 0 {
                    for k in col..n {
                        a[r * n + k] = f.sub(a[r * n + k], f.mul(factor, a[col * n + k]));
                    }
                }
            }
        }
        det
    }

    pub fn trace(&self) -> u32 {
        (0..self.dim).fold(0, |acc, i| self.field.add(acc, self.get(i, i)))
    }

    pub fn inverse(&self) -> Matrix {
        let f = &self.field;
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut inv = Matrix::identity(f, n).entries;
        for col in 0..n {
            let piv = (col..n).find(|&r| a[r * n + col] != 0).expect("invertible matrix");
            for k in 0..n {
                a.swap(piv * n + k, col * n + k);
                inv.swap(piv * n + k, col * n + k);
            }
            let pinv = f.inv(a[col * n + col]).expect("nonzero pivot");
            for k in 0..n {
                a[col * n + k] = f.mul(a[col * n + k], pinv);
                inv[col * n + k] = f.mul(inv[col * n + k], pinv);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[r * n + col];
                if factor != 0 {
                    for k in 0..n {
                        a[r * n + k] = f.sub(a[r * n + k], f.mul(factor, a[col * n + k]));
                        inv[r * n + k] = f.sub(inv[r * n + k], f.mul(factor, inv[col * n + k]));
                    }
                }
            }
        }
        Matrix { field: self.field.clone(), dim: n, entries: inv }
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.entries == other.entries && *self.field == *other.field
    }
}

impl Eq for Matrix {}

impl Ord for Matrix {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.dim, &self.entries).cmp(&(other.dim, &other.entries))
    }
}

impl PartialOrd for Matrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.dim {
            if r > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{:?}", &self.entries[r * self.dim..(r + 1) * self.dim])?;
        }
        f.write_str("]")
    }
}

/// A group element: a permutation or an invertible matrix over a finite field.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum GroupElement {
    Perm(Perm),
    Matrix(Matrix),
}

impl GroupElement {
    /// Product with the right factor acting first.
    pub fn mul(&self, other: &GroupElement) -> Result<GroupElement, GroupError> {
        match (self, other) {
            (GroupElement::Perm(a), GroupElement::Perm(b)) if a.degree() == b.degree() => {
                Ok(GroupElement::Perm(a.compose(b)))
            }
            (GroupElement::Matrix(a), GroupElement::Matrix(b))
                if a.dim == b.dim && *a.field == *b.field =>
            {
                Ok(GroupElement::Matrix(a.mul(b)))
            }
            _ => Err(GroupError::MixedCarriers),
        }
    }

    pub(crate) fn mul_unchecked(&self, other: &GroupElement) -> GroupElement {
        match (self, other) {
            (GroupElement::Perm(a), GroupElement::Perm(b)) => GroupElement::Perm(a.compose(b)),
            (GroupElement::Matrix(a), GroupElement::Matrix(b)) => GroupElement::Matrix(a.mul(b)),
            _ => unreachable!("carriers checked at closure time"),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        match self {
            GroupElement::Perm(p) => GroupElement::Perm(p.inverse()),
            GroupElement::Matrix(m) => GroupElement::Matrix(m.inverse()),
        }
    }

    pub fn identity_like(&self) -> GroupElement {
        match self {
            GroupElement::Perm(p) => GroupElement::Perm(Perm::identity(p.degree())),
            GroupElement::Matrix(m) => GroupElement::Matrix(Matrix::identity(&m.field, m.dim)),
        }
    }

    pub fn as_matrix(&self) -> Option<&Matrix> {
        match self {
            GroupElement::Matrix(m) => Some(m),
            GroupElement::Perm(_) => None,
        }
    }

    pub fn as_perm(&self) -> Option<&Perm> {
        match self {
            GroupElement::Perm(p) => Some(p),
            GroupElement::Matrix(_) => None,
        }
    }

    pub(crate) fn same_carrier(&self, other: &GroupElement) -> bool {
        match (self, other) {
            (GroupElement::Perm(a), GroupElement::Perm(b)) => a.degree() == b.degree(),
            (GroupElement::Matrix(a), GroupElement::Matrix(b)) => a.dim == b.dim && *a.field == *b.field,
            _ => false,
        }
    }
}

impl From<Perm> for GroupElement {
    fn from(p: Perm) -> Self {
        GroupElement::Perm(p)
    }
}

impl From<Matrix> for GroupElement {
    fn from(m: Matrix) -> Self {
        GroupElement::Matrix(m)
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Perm(p) => fmt::Display::fmt(p, f),
            GroupElement::Matrix(m) => fmt::Debug::fmt(m, f),
        }
    }
}
