//! Irreducible character tables.
//!
//! [`character_table_generic`] works for any enumerated group via the
//! Dixon–Schneider class-matrix method; [`character_table_gl2_closed_form`]
//! writes down the classical `GL₂(F_q)` table with structured labels. Rows of
//! both are sorted by dimension and then by value vector.

mod dixon;
mod gl2;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

pub use dixon::{character_table_generic, DEFAULT_MAX_CLASSES};
pub use gl2::{character_table_gl2_closed_form, character_table_gl2_on, gl2_structure, Gl2ClassFamily, Gl2Structure};

use crate::exact::{CycNum, ExactError, Rational};
use crate::groups::{Group, GroupError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChartabError {
    #[error("class functions belong to different groups")]
    GroupMismatch,
    #[error("class function has {got} values but the group has {expected} classes")]
    WrongLength { expected: usize, got: usize },
    #[error("group has {classes} classes, above the bound of {bound}")]
    TooManyClasses { classes: usize, bound: usize },
    #[error("no prime p = 1 mod {exponent} with p > {lower} below {bound}")]
    NoSuitablePrime { exponent: u32, lower: u64, bound: u64 },
    #[error("internal error: eigenspace separation failed ({0})")]
    Separation(String),
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// A complex-valued function on the conjugacy classes of a group.
#[derive(Clone)]
pub struct ClassFunction {
    group: Group,
    values: Vec<CycNum>,
}

impl ClassFunction {
    /// Values are promoted to the group exponent's conductor when possible.
    pub fn new(group: &Group, values: Vec<CycNum>) -> Result<Self, ChartabError> {
        if values.len() != group.num_classes() {
            return Err(ChartabError::WrongLength { expected: group.num_classes(), got: values.len() });
        }
        let e = group.exponent();
        let values = values
            .into_iter()
            .map(|v| if e.is_multiple_of(v.conductor()) { v.promote(e).expect("divides") } else { v })
            .collect();
        Ok(ClassFunction { group: group.clone(), values })
    }

    pub fn constant(group: &Group, c: i64) -> Self {
        let v = CycNum::from_integer(c).promote(group.exponent()).expect("conductor 1");
        ClassFunction { group: group.clone(), values: alloc::vec![v; group.num_classes()] }
    }

    pub fn trivial(group: &Group) -> Self {
        Self::constant(group, 1)
    }

    /// Character of the regular representation: `|G|` at the identity, 0 elsewhere.
    pub fn regular(group: &Group) -> Self {
        let mut f = Self::constant(group, 0);
        f.values[group.identity_class()] =
            CycNum::from_integer(group.order() as i64).promote(group.exponent()).expect("conductor 1");
        f
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn values(&self) -> &[CycNum] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &CycNum {
        &self.values[class]
    }

    /// Value at the identity class.
    pub fn degree_value(&self) -> &CycNum {
        &self.values[self.group.identity_class()]
    }

    /// The dimension, when the identity value is an integer.
    pub fn dim(&self) -> Option<i64> {
        self.degree_value().to_rational().and_then(|r| r.to_i64())
    }

    pub fn same_group(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(CycNum::is_zero)
    }

    /// Lexicographic comparison of value vectors.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.values.iter().zip(&other.values) {
            match a.canonical_cmp(b) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        self.values.len().cmp(&other.values.len())
    }

    pub(crate) fn from_parts(group: Group, values: Vec<CycNum>) -> Self {
        ClassFunction { group, values }
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.same_group(other) && self.values == other.values
    }
}

impl Eq for ClassFunction {}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.values.iter().map(|v| format!("{v}"))).finish()
    }
}

/// `⟨α, β⟩ = (1/|G|) Σ_c |c| α(c) conj(β(c))`.
pub fn char_inner(a: &ClassFunction, b: &ClassFunction) -> Result<CycNum, ChartabError> {
    if !a.same_group(b) {
        return Err(ChartabError::GroupMismatch);
    }
    let g = &a.group;
    let mut acc = CycNum::zero_in(g.exponent());
    for c in 0..g.num_classes() {
        let (x, y) = (&a.values[c], &b.values[c]);
        if x.is_zero() || y.is_zero() {
            continue;
        }
        let term = (x * &y.conj()).scale(&Rational::from_integer(g.class_size(c) as i64));
        acc = &acc + &term;
    }
    Ok(acc.scale(&Rational::new(1, g.order() as i64)))
}

/// Labels of irreducible characters.
///
/// Closed-form `GL₂(F_q)` labels refer to characters of `F_q^×` and of the
/// non-split torus by exponent: `a` stands for `g^s ↦ ζ_{q-1}^{as}` and `k`
/// for `γ^s ↦ ζ_{q²-1}^{ks}` with the generators fixed by the table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IrrLabel {
    Index(usize),
    /// `α ∘ det`.
    Linear(u32),
    /// Steinberg twisted by `α ∘ det`.
    Steinberg(u32),
    /// Principal series `P(α, β)`, `a < b`.
    PrincipalSeries(u32, u32),
    /// Cuspidal `C(θ_k)`, with `k` the smaller of `k` and `qk mod (q²-1)`.
    Cuspidal(u32),
}

impl fmt::Display for IrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrLabel::Index(i) => write!(f, "chi({i})"),
            IrrLabel::Linear(a) => write!(f, "lin({a})"),
            IrrLabel::Steinberg(a) => write!(f, "st({a})"),
            IrrLabel::PrincipalSeries(a, b) => write!(f, "ps({a},{b})"),
            IrrLabel::Cuspidal(k) => write!(f, "cusp({k})"),
        }
    }
}

impl IrrLabel {
    /// Parses the [`Display`](fmt::Display) form.
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        let open = s.find('(')?;
        let body = s[open + 1..].strip_suffix(')')?;
        let args: Vec<u32> = body.split(',').map(|t| t.trim().parse().ok()).collect::<Option<_>>()?;
        match (&s[..open], args.as_slice()) {
            ("chi", [i]) => Some(IrrLabel::Index(*i as usize)),
            ("lin", [a]) => Some(IrrLabel::Linear(*a)),
            ("st", [a]) => Some(IrrLabel::Steinberg(*a)),
            ("ps", [a, b]) => Some(IrrLabel::PrincipalSeries((*a).min(*b), (*a).max(*b))),
            ("cusp", [k]) => Some(IrrLabel::Cuspidal(*k)),
            _ => None,
        }
    }

    pub fn family(&self) -> &'static str {
        match self {
            IrrLabel::Index(_) => "generic",
            IrrLabel::Linear(_) => "linear",
            IrrLabel::Steinberg(_) => "steinberg",
            IrrLabel::PrincipalSeries(..) => "principal-series",
            IrrLabel::Cuspidal(_) => "cuspidal",
        }
    }
}

/// Parameters of a Dixon–Schneider run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DixonInfo {
    pub prime: u64,
    pub primitive_root: u64,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: Group,
    irreducibles: Vec<ClassFunction>,
    labels: Vec<IrrLabel>,
    /// Central character exponent per row (closed form only).
    central: Option<Vec<u32>>,
    dixon: Option<DixonInfo>,
}

impl CharacterTable {
    pub(crate) fn assemble(
        group: Group,
        rows: Vec<(ClassFunction, Option<(IrrLabel, u32)>)>,
        dixon: Option<DixonInfo>,
    ) -> Self {
        let mut rows = rows;
        rows.sort_by(|a, b| a.0.dim().cmp(&b.0.dim()).then_with(|| a.0.canonical_cmp(&b.0)));
        let structured = rows.iter().all(|r| r.1.is_some());
        let labels = rows
            .iter()
            .enumerate()
            .map(|(i, r)| if structured { r.1.unwrap().0 } else { IrrLabel::Index(i) })
            .collect();
        let central = structured.then(|| rows.iter().map(|r| r.1.unwrap().1).collect());
        let irreducibles = rows.into_iter().map(|r| r.0).collect();
        CharacterTable { group, irreducibles, labels, central, dixon }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn irreducible(&self, i: usize) -> &ClassFunction {
        &self.irreducibles[i]
    }

    pub fn labels(&self) -> &[IrrLabel] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> IrrLabel {
        self.labels[i]
    }

    /// Row index for a label; `chi(i)` always resolves to row `i`.
    pub fn find(&self, label: &IrrLabel) -> Option<usize> {
        if let IrrLabel::Index(i) = label {
            return (*i < self.len()).then_some(*i);
        }
        self.labels.iter().position(|l| l == label)
    }

    pub fn find_str(&self, s: &str) -> Option<usize> {
        IrrLabel::parse(s).and_then(|l| self.find(&l))
    }

    pub fn dims(&self) -> Vec<i64> {
        self.irreducibles.iter().map(|c| c.dim().expect("irreducible dims are integers")).collect()
    }

    /// For closed-form `GL₂(F_q)` tables: the exponent `a` with
    /// `ω(g^s) = ζ_{q-1}^{as}` for the central character of row `i`.
    pub fn central_character(&self, i: usize) -> Option<u32> {
        self.central.as_ref().map(|c| c[i])
    }

    pub fn dixon_info(&self) -> Option<DixonInfo> {
        self.dixon
    }

    /// Row orthogonality, `Σ d² = |G|` and a square table, all checked exactly.
    pub fn verify(&self) -> Result<(), String> {
        let n = self.group.num_classes();
        if self.len() != n {
            return Err(format!("{} rows for {} classes", self.len(), n));
        }
        let total: i64 = self.dims().iter().map(|d| d * d).sum();
        if total != self.group.order() as i64 {
            return Err(format!("sum of squared dimensions {total} != {}", self.group.order()));
        }
        for i in 0..n {
            for j in i..n {
                let ip = char_inner(&self.irreducibles[i], &self.irreducibles[j]).map_err(|e| e.to_string())?;
                let expect = if i == j { CycNum::one() } else { CycNum::zero() };
                if ip != expect {
                    return Err(format!("<chi_{i}, chi_{j}> = {ip}"));
                }
            }
        }
        Ok(())
    }

    /// Column orthogonality: `Σ_i χ_i(c) conj(χ_i(c')) = δ |G|/|c|`.
    pub fn verify_columns(&self) -> Result<(), String> {
        let g = &self.group;
        let n = g.num_classes();
        for c in 0..n {
            for d in c..n {
                let mut acc = CycNum::zero_in(g.exponent());
                for chi in &self.irreducibles {
                    acc = &acc + &(chi.value(c) * &chi.value(d).conj());
                }
                let expect = if c == d { (g.order() / g.class_size(c)) as i64 } else { 0 };
                if acc != CycNum::from_integer(expect) {
                    return Err(format!("column sum ({c}, {d}) = {acc}"));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
