//! Constructors for the concrete groups used throughout the crate.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::element::{GroupElement, Matrix, Perm};
use super::model::{closure_with, Group, GroupKind};
use super::GroupError;
use crate::exact::FqField;

fn cycle_perm(degree: usize, cycle: &[u32]) -> GroupElement {
    GroupElement::Perm(Perm::from_cycles(degree, &[cycle.to_vec()]).expect("valid cycle"))
}

pub fn symmetric(n: u32, max_order: usize) -> Result<Group, GroupError> {
    let d = n as usize;
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle_perm(d, &[0, 1]));
        gens.push(cycle_perm(d, &(0..n).collect::<Vec<_>>()));
    }
    closure_with(&gens, max_order, format!("sym:{n}"), GroupKind::Symmetric(n))
}

pub fn alternating(n: u32, max_order: usize) -> Result<Group, GroupError> {
    let d = n as usize;
    let gens: Vec<GroupElement> = (2..n).map(|k| cycle_perm(d, &[0, 1, k])).collect();
    closure_with(&gens, max_order, format!("alt:{n}"), GroupKind::Alternating(n))
}

pub fn cyclic(n: u32, max_order: usize) -> Result<Group, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidParameter("cyclic group order must be positive"));
    }
    let gens = if n >= 2 { vec![cycle_perm(n as usize, &(0..n).collect::<Vec<_>>())] } else { Vec::new() };
    closure_with(&gens, max_order, format!("cyclic:{n}"), GroupKind::Cyclic(n))
}

/// Symmetries of the regular `n`-gon (order `2n`).
pub fn dihedral(n: u32, max_order: usize) -> Result<Group, GroupError> {
    if n < 3 {
        return Err(GroupError::InvalidParameter("dihedral groups need n >= 3"));
    }
    let rot = cycle_perm(n as usize, &(0..n).collect::<Vec<_>>());
    let refl = GroupElement::Perm(Perm::from_images((0..n).map(|i| (n - i) % n).collect())?);
    closure_with(&[rot, refl], max_order, format!("dihedral:{n}"), GroupKind::Dihedral(n))
}

/// The quaternion group, realised inside `SL₂(F₃)`.
pub fn quaternion(max_order: usize) -> Result<Group, GroupError> {
    let f = FqField::new(3)?;
    let i = Matrix::new(&f, 2, vec![0, 2, 1, 0])?;
    let j = Matrix::new(&f, 2, vec![1, 1, 1, 2])?;
    closure_with(&[i.into(), j.into()], max_order, "quaternion".into(), GroupKind::Quaternion)
}

fn mat(f: &Arc<FqField>, e: [u32; 4]) -> GroupElement {
    GroupElement::Matrix(Matrix::new(f, 2, e.to_vec()).expect("invertible generator"))
}

/// Upper unitriangular generators `[[1, b], [0, 1]]` with `b` over an `F_p`-basis of `F_q`.
fn transvections(f: &Arc<FqField>) -> Vec<GroupElement> {
    let p = f.characteristic();
    (0..f.degree()).map(|i| mat(f, [1, p.pow(i), 0, 1])).collect()
}

fn weyl(f: &Arc<FqField>) -> GroupElement {
    mat(f, [0, f.neg(1), 1, 0])
}

pub fn gl2(q: u32, max_order: usize) -> Result<Group, GroupError> {
    let f = FqField::new(q)?;
    let mut gens = transvections(&f);
    gens.push(weyl(&f));
    gens.push(mat(&f, [f.generator(), 0, 0, 1]));
    closure_with(&gens, max_order, format!("gl2:{q}"), GroupKind::Gl2(q))
}

pub fn sl2(q: u32, max_order: usize) -> Result<Group, GroupError> {
    let f = FqField::new(q)?;
    let mut gens = transvections(&f);
    gens.push(weyl(&f));
    closure_with(&gens, max_order, format!("sl2:{q}"), GroupKind::Sl2(q))
}

/// Index of a point of `P¹(F_q)`: `[a : 1] ↦ a`, `∞ = [1 : 0] ↦ q`.
fn mobius(f: &FqField, m: [u32; 4], point: u32) -> u32 {
    let q = f.order();
    let [a, b, c, d] = m;
    let (num, den) = if point == q { (a, c) } else { (f.add(f.mul(a, point), b), f.add(f.mul(c, point), d)) };
    match f.inv(den) {
        Some(inv) => f.mul(num, inv),
        None => q,
    }
}

/// `PGL₂(F_q)` as a permutation group on the `q + 1` points of the projective line.
pub fn pgl2(q: u32, max_order: usize) -> Result<Group, GroupError> {
    let f = FqField::new(q)?;
    let p = f.characteristic();
    let mut mats: Vec<[u32; 4]> = (0..f.degree()).map(|i| [1, p.pow(i), 0, 1]).collect();
    mats.push([0, f.neg(1), 1, 0]);
    mats.push([f.generator(), 0, 0, 1]);
    let gens = mats
        .iter()
        .map(|&m| Perm::from_images((0..=q).map(|pt| mobius(&f, m, pt)).collect()).map(GroupElement::Perm))
        .collect::<Result<Vec<_>, _>>()?;
    closure_with(&gens, max_order, format!("pgl2:{q}"), GroupKind::Pgl2(q))
}

/// The standard subgroups of a `GL₂(F_q)` model, as sorted element-index lists.
#[derive(Debug, Clone)]
pub struct Gl2Subgroups {
    /// Diagonal torus, order `(q-1)²`.
    pub split_torus: Vec<usize>,
    /// Non-split torus `F_{q²}^×`, order `q²-1`.
    pub nonsplit_torus: Vec<usize>,
    /// Upper unitriangular matrices, order `q`.
    pub unipotent: Vec<usize>,
    /// Scalar matrices, order `q-1`.
    pub center: Vec<usize>,
    /// `(c1, c0)` with `t² + c1·t + c0` the quadratic defining `F_{q²} = F_q[t]/(…)`.
    pub quadratic: (u32, u32),
    /// A generator of the non-split torus: the first element of order `q²-1`
    /// when `(u, v) ↦ u + v·t` is scanned with `v` major.
    pub nonsplit_generator: usize,
    /// `nonsplit_log[k]` is the element `γ^k` for the generator `γ` above.
    pub nonsplit_powers: Vec<usize>,
}

fn gl2_field(g: &Group) -> Result<Arc<FqField>, GroupError> {
    match g.kind() {
        GroupKind::Gl2(_) => Ok(g.element(g.identity()).as_matrix().expect("matrix group").field().clone()),
        _ => Err(GroupError::NotGl2),
    }
}

/// Lexicographically first `(c1, c0)` with `t² + c1 t + c0` irreducible over `F_q`.
pub fn first_irreducible_quadratic(f: &FqField) -> (u32, u32) {
    let q = f.order();
    for c1 in 0..q {
        for c0 in 0..q {
            let has_root = (0..q).any(|x| f.add(f.add(f.mul(x, x), f.mul(c1, x)), c0) == 0);
            if !has_root {
                return (c1, c0);
            }
        }
    }
    unreachable!("irreducible quadratics exist over every finite field")
}

/// Matrix of multiplication by `u + v·t` on `F_{q²}` in the basis `{1, t}`.
pub fn nonsplit_matrix(f: &FqField, quadratic: (u32, u32), u: u32, v: u32) -> [u32; 4] {
    let (c1, c0) = quadratic;
    [u, f.neg(f.mul(v, c0)), v, f.sub(u, f.mul(v, c1))]
}

pub fn subgroup_tori_and_unipotent(g: &Group) -> Result<Gl2Subgroups, GroupError> {
    let f = gl2_field(g)?;
    let q = f.order();
    let lookup = |e: [u32; 4]| -> usize {
        let m = Matrix::new(&f, 2, e.to_vec()).expect("invertible");
        g.index_of(&GroupElement::Matrix(m)).expect("element of GL2")
    };
    let mut split_torus = Vec::new();
    let mut center = Vec::new();
    for a in 1..q {
        for b in 1..q {
            split_torus.push(lookup([a, 0, 0, b]));
        }
        center.push(lookup([a, 0, 0, a]));
    }
    let unipotent: Vec<usize> = (0..q).map(|b| lookup([1, b, 0, 1])).collect();

    let quadratic = first_irreducible_quadratic(&f);
    let mut nonsplit_torus = Vec::new();
    let mut nonsplit_generator = None;
    for v in 0..q {
        for u in 0..q {
            if u == 0 && v == 0 {
                continue;
            }
            let idx = lookup(nonsplit_matrix(&f, quadratic, u, v));
            if nonsplit_generator.is_none() && g.element_order(idx) == q * q - 1 {
                nonsplit_generator = Some(idx);
            }
            nonsplit_torus.push(idx);
        }
    }
    let gamma = nonsplit_generator.expect("F_{q^2}^x is cyclic");
    let mut nonsplit_powers = Vec::with_capacity((q * q - 1) as usize);
    let mut x = g.identity();
    for _ in 0..q * q - 1 {
        nonsplit_powers.push(x);
        x = g.mul(x, gamma);
    }
    for v in [&mut split_torus, &mut center, &mut nonsplit_torus] {
        v.sort_unstable();
    }
    let mut unipotent = unipotent;
    unipotent.sort_unstable();
    Ok(Gl2Subgroups {
        split_torus,
        nonsplit_torus,
        unipotent,
        center,
        quadratic,
        nonsplit_generator: gamma,
        nonsplit_powers,
    })
}
