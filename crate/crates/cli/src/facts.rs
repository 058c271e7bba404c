//! Restrictions of a cuspidal `C` and a principal series `P` of `GL₂(F_q)` to the
//! split torus `T`, the non-split torus `S` and `ZU` (scalars times upper
//! unitriangular matrices), stated as eigenvalue multisets element by element.
//!
//! The expected multisets are built from the character parameters alone:
//! * on `T`: `C` gives every character of `T` restricting to `ω` on the centre,
//!   once; `P(α, β)` gives the same plus `α×β` and `β×α`;
//! * on `S`: `P` gives every character of `S` restricting to `ω`, once; `C(θ)`
//!   gives the same without `θ` and `θ^q`;
//! * on `ZU`: `C` is `ω` times the regular representation of `U` without the
//!   trivial character; `P` is `ω` times the regular one plus the trivial one.

use std::collections::BTreeMap;

use num_integer::Integer;

use repcontain_core::chartab::{gl2_structure, CharacterTable, IrrLabel};
use repcontain_core::lambda::eigen_multiset;

use crate::error::{CliError, Result};

type Multiset = BTreeMap<(u32, u32), u64>;

fn push(m: &mut Multiset, num: u64, den: u64) {
    let num = num % den;
    let g = num.gcd(&den).max(1);
    *m.entry(((num / g) as u32, (den / g) as u32)).or_insert(0) += 1;
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FactsReport {
    pub elements_checked: usize,
    pub failures: Vec<String>,
}

/// Checks the three restriction facts for the rows `c = cusp(k)` and `p = ps(a, b)`
/// of a closed-form table. The two must have equal central characters.
pub fn gl2_restriction_facts(t: &CharacterTable, c: usize, p: usize) -> Result<FactsReport> {
    let (IrrLabel::Cuspidal(k), IrrLabel::PrincipalSeries(a, b)) = (t.label(c), t.label(p)) else {
        return Err(CliError::usage("expected a cuspidal and a principal series row"));
    };
    let g = t.group();
    let st = gl2_structure(g)?;
    let q = st.q as u64;
    let (qm, n) = (q - 1, q * q - 1);
    let (k, a, b) = (k as u64, a as u64, b as u64);
    let omega = k % qm;
    if (a + b) % qm != omega {
        return Err(CliError::usage("central characters differ"));
    }
    let field = g.element(g.identity()).as_matrix().expect("matrix group").field().clone();
    let pchar = field.characteristic() as u64;
    let log = |x: u32| st.log[x as usize] as u64;

    let mut report = FactsReport::default();
    let check = |elem: usize, what: &str, exp_c: Multiset, exp_p: Multiset, report: &mut FactsReport| {
        report.elements_checked += 1;
        let class = g.class_of(elem);
        for (row, expected, name) in [(c, exp_c, "C"), (p, exp_p, "P")] {
            match eigen_multiset(t.irreducible(row), class) {
                Ok(m) if m.normalized() == expected => {}
                Ok(m) => report.failures.push(format!("{what}: {name} has {:?}, expected {:?}", m.normalized(), expected)),
                Err(e) => report.failures.push(format!("{what}: {e}")),
            }
        }
    };

    // split torus: diag(g^s, g^u)
    for &e in &st.subgroups.split_torus {
        let m = g.element(e).as_matrix().expect("matrix");
        let (s, u) = (log(m.get(0, 0)), log(m.get(1, 1)));
        let mut ec = Multiset::new();
        for i in 0..qm {
            let j = (omega + qm - i) % qm;
            push(&mut ec, i * s + j * u, qm);
        }
        let mut ep = ec.clone();
        push(&mut ep, a * s + b * u, qm);
        push(&mut ep, b * s + a * u, qm);
        check(e, &format!("T element diag(g^{s}, g^{u})"), ec, ep, &mut report);
    }

    // non-split torus: γ^m
    let excluded = [k % n, (q * k) % n];
    for (m, &e) in st.subgroups.nonsplit_powers.iter().enumerate() {
        let m = m as u64;
        let (mut ec, mut ep) = (Multiset::new(), Multiset::new());
        for j in (0..n).filter(|j| j % qm == omega) {
            push(&mut ep, j * m, n);
            if !excluded.contains(&j) {
                push(&mut ec, j * m, n);
            }
        }
        check(e, &format!("S element gamma^{m}"), ec, ep, &mut report);
    }

    // ZU: [[x, y], [0, x]]; ψ_c(y) = ζ_p^{Tr(c·y)}
    for e in 0..g.order() {
        let mm = g.element(e).as_matrix().expect("matrix");
        let (x, y) = (mm.get(0, 0), mm.get(0, 1));
        if mm.get(1, 0) != 0 || mm.get(1, 1) != x {
            continue;
        }
        let u = field.mul(y, field.inv(x).expect("invertible"));
        let den = qm * pchar;
        let z = omega * log(x) * pchar;
        let (mut ec, mut ep) = (Multiset::new(), Multiset::new());
        for cc in field.elements() {
            let tr = field.trace(field.mul(cc, u)) as u64;
            let v = z + tr * qm;
            push(&mut ep, v, den);
            if cc != 0 {
                push(&mut ec, v, den);
            }
        }
        push(&mut ep, z, den);
        check(e, &format!("ZU element [[{x}, {y}], [0, {x}]]"), ec, ep, &mut report);
    }
    Ok(report)
}
