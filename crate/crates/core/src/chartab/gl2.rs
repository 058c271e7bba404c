//! The classical character table of `GL₂(F_q)`.
//!
//! Characters of `F_q^×` and of the non-split torus `S ≅ F_{q²}^×` are indexed
//! by exponents relative to a fixed generator `γ` of `S` and `g = γ^{q+1}`
//! (the norm of `γ`, which generates `F_q^×`). With these choices the
//! restriction of `θ_k` to the centre is `α_{k mod (q-1)}`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{CharacterTable, ChartabError, ClassFunction, IrrLabel};
use crate::exact::{prime_power, CycNum};
use crate::groups::{gl2, subgroup_tori_and_unipotent, Gl2Subgroups, Group, DEFAULT_MAX_ORDER};

/// Conjugacy class types of `GL₂(F_q)`; parameters are logarithms base `g`,
/// except `Elliptic(n)` which is the class of `γ^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gl2ClassFamily {
    /// `g^s · I`.
    Central(u32),
    /// `g^s · [[1, 1], [0, 1]]` up to conjugacy.
    Unipotent(u32),
    /// `diag(g^s, g^t)`, `s ≠ t`.
    Split(u32, u32),
    /// `γ^n` with `γ^n ∉ F_q^×`.
    Elliptic(u32),
}

/// Class bookkeeping for a `GL₂(F_q)` model.
#[derive(Debug, Clone)]
pub struct Gl2Structure {
    pub q: u32,
    pub subgroups: Gl2Subgroups,
    /// The field element `g` with `γ^{q+1} = g·I`.
    pub norm_generator: u32,
    /// `log[x]` is `s` with `g^s = x` (entry 0 unused).
    pub log: Vec<u32>,
    pub families: Vec<Gl2ClassFamily>,
}

pub fn gl2_structure(g: &Group) -> Result<Gl2Structure, ChartabError> {
    let subgroups = subgroup_tori_and_unipotent(g)?;
    let m0 = g.element(g.identity()).as_matrix().expect("matrix group");
    let f = m0.field().clone();
    let q = f.order();
    let qq = q * q - 1;
    let norm = g.element(subgroups.nonsplit_powers[((q + 1) % (q * q - 1)) as usize]).as_matrix().expect("matrix").get(0, 0);
    let mut log = alloc::vec![0u32; q as usize];
    let mut x = 1;
    for s in 0..q - 1 {
        log[x as usize] = s;
        x = f.mul(x, norm);
    }
    let mut elliptic: BTreeMap<(u32, u32), u32> = BTreeMap::new();
    for n in 0..qq {
        let m = g.element(subgroups.nonsplit_powers[n as usize]).as_matrix().expect("matrix");
        elliptic.entry((m.trace(), m.determinant())).or_insert(n);
    }

    let mut families = Vec::with_capacity(g.num_classes());
    for c in 0..g.num_classes() {
        let m = g.element(g.class_rep(c)).as_matrix().expect("matrix");
        let (t, det) = (m.trace(), m.determinant());
        let roots: Vec<u32> =
            (1..q).filter(|&x| f.add(f.sub(f.mul(x, x), f.mul(t, x)), det) == 0).collect();
        let fam = match roots.as_slice() {
            [x, y] => Gl2ClassFamily::Split(log[*x as usize], log[*y as usize]),
            [x] if m.get(0, 1) == 0 && m.get(1, 0) == 0 => Gl2ClassFamily::Central(log[*x as usize]),
            [x] => Gl2ClassFamily::Unipotent(log[*x as usize]),
            _ => Gl2ClassFamily::Elliptic(elliptic[&(t, det)]),
        };
        families.push(fam);
    }
    Ok(Gl2Structure { q, subgroups, norm_generator: norm, log, families })
}

/// Closed-form table for `GL₂(F_q)`, over the model built by [`gl2`].
pub fn character_table_gl2_closed_form(q: u32) -> Result<CharacterTable, ChartabError> {
    if q < 2 || prime_power(q).is_none() {
        return Err(ChartabError::NotPrimePower(q));
    }
    let g = gl2(q, DEFAULT_MAX_ORDER)?;
    character_table_gl2_on(&g)
}

/// Closed-form table on an existing `GL₂(F_q)` model.
pub fn character_table_gl2_on(g: &Group) -> Result<CharacterTable, ChartabError> {
    let st = gl2_structure(g)?;
    let q = st.q as i64;
    let big = (q * q - 1) as u32;
    let e = q + 1;
    let row = |f: &dyn Fn(Gl2ClassFamily) -> Vec<(i64, i64)>| -> Result<ClassFunction, ChartabError> {
        let values = st
            .families
            .iter()
            .map(|&fam| CycNum::from_exponents(big, f(fam)))
            .collect::<Result<Vec<_>, _>>()?;
        ClassFunction::new(g, values)
    };
    let det_log = |fam: Gl2ClassFamily| -> i64 {
        match fam {
            Gl2ClassFamily::Central(s) | Gl2ClassFamily::Unipotent(s) => 2 * s as i64,
            Gl2ClassFamily::Split(s, t) => s as i64 + t as i64,
            Gl2ClassFamily::Elliptic(n) => n as i64,
        }
    };

    let mut rows = Vec::new();
    for a in 0..(q - 1) {
        let lin = row(&|fam| alloc::vec![(a * e * det_log(fam), 1)])?;
        rows.push((lin, Some((IrrLabel::Linear(a as u32), (2 * a % (q - 1)) as u32))));
        let st_row = row(&|fam| {
            let v = a * e * det_log(fam);
            match fam {
                Gl2ClassFamily::Central(_) => alloc::vec![(v, q)],
                Gl2ClassFamily::Unipotent(_) => alloc::vec![],
                Gl2ClassFamily::Split(..) => alloc::vec![(v, 1)],
                Gl2ClassFamily::Elliptic(_) => alloc::vec![(v, -1)],
            }
        })?;
        rows.push((st_row, Some((IrrLabel::Steinberg(a as u32), (2 * a % (q - 1)) as u32))));
    }
    for a in 0..(q - 1) {
        for b in (a + 1)..(q - 1) {
            let ps = row(&|fam| match fam {
                Gl2ClassFamily::Central(s) => alloc::vec![((a + b) * e * s as i64, q + 1)],
                Gl2ClassFamily::Unipotent(s) => alloc::vec![((a + b) * e * s as i64, 1)],
                Gl2ClassFamily::Split(s, t) => {
                    let (s, t) = (s as i64, t as i64);
                    alloc::vec![((a * s + b * t) * e, 1), ((a * t + b * s) * e, 1)]
                }
                Gl2ClassFamily::Elliptic(_) => alloc::vec![],
            })?;
            rows.push((ps, Some((IrrLabel::PrincipalSeries(a as u32, b as u32), ((a + b) % (q - 1)) as u32))));
        }
    }
    for k in 0..big as i64 {
        let conj = (k * q) % big as i64;
        if k % (q + 1) == 0 || conj < k {
            continue;
        }
        let cusp = row(&|fam| match fam {
            Gl2ClassFamily::Central(s) => alloc::vec![(k * e * s as i64, q - 1)],
            Gl2ClassFamily::Unipotent(s) => alloc::vec![(k * e * s as i64, -1)],
            Gl2ClassFamily::Split(..) => alloc::vec![],
            Gl2ClassFamily::Elliptic(n) => alloc::vec![(k * n as i64, -1), (conj * n as i64, -1)],
        })?;
        rows.push((cusp, Some((IrrLabel::Cuspidal(k as u32), (k % (q - 1)) as u32))));
    }
    Ok(CharacterTable::assemble(g.clone(), rows, None))
}
