//! Character expressions over a table:
//!
//! ```text
//! expr := label | sym:K(expr) | ext:K(expr) | adams:K(expr) | det(expr)
//!       | tensor(expr, expr) | sum(expr, expr, ...)
//! ```
//!
//! Labels are table labels such as `chi(3)`, `cusp(1)`, `ps(0,2)`, or the
//! shorthands `trivial` and `regular`.

use repcontain_core::chartab::{CharacterTable, ClassFunction};
use repcontain_core::lambda::{adams, cf_add, cf_tensor, determinant, exterior_power, symmetric_power};

use crate::error::{CliError, Result};

/// Splits `f(a, b, ...)` at top-level commas; `None` unless `s` is `head(...)`.
fn call<'a>(s: &'a str, head: &str) -> Option<Vec<&'a str>> {
    let body = s.strip_prefix(head)?.trim_start().strip_prefix('(')?.strip_suffix(')')?;
    let mut args = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in body.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                args.push(body[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return None;
        }
    }
    (depth == 0).then(|| {
        args.push(body[start..].trim());
        args
    })
}

fn indexed<'a>(s: &'a str, op: &str) -> Option<(&'a str, &'a str)> {
    let rest = s.strip_prefix(op)?.strip_prefix(':')?;
    let open = rest.find('(')?;
    Some((&rest[..open], &rest[open..]))
}

fn one_arg<'a>(s: &'a str, full: &str) -> Result<&'a str> {
    match call(s, "").as_deref() {
        Some([a]) => Ok(a),
        _ => Err(CliError::usage(format!("expected exactly one argument in '{full}'"))),
    }
}

pub fn eval_char(table: &CharacterTable, src: &str) -> Result<ClassFunction> {
    let s = src.trim();
    for op in ["sym", "ext", "adams"] {
        if let Some((k, rest)) = indexed(s, op) {
            let k: i64 = k.trim().parse().map_err(|_| CliError::usage(format!("bad index in '{s}'")))?;
            let inner = eval_char(table, one_arg(rest, s)?)?;
            return match op {
                "adams" => Ok(adams(&inner, k)),
                _ if k < 0 => Err(CliError::usage(format!("negative power in '{s}'"))),
                "sym" => Ok(symmetric_power(&inner, k as usize)),
                _ => Ok(exterior_power(&inner, k as usize)),
            };
        }
    }
    if let Some(args) = call(s, "det") {
        let [a] = args.as_slice() else { return Err(CliError::usage(format!("det takes one argument: '{s}'"))) };
        return Ok(determinant(&eval_char(table, a)?)?);
    }
    if let Some(args) = call(s, "tensor") {
        let [a, b] = args.as_slice() else {
            return Err(CliError::usage(format!("tensor takes two arguments: '{s}'")));
        };
        return Ok(cf_tensor(&eval_char(table, a)?, &eval_char(table, b)?)?);
    }
    if let Some(args) = call(s, "sum") {
        let mut acc: Option<ClassFunction> = None;
        for a in args {
            let x = eval_char(table, a)?;
            acc = Some(match acc {
                None => x,
                Some(y) => cf_add(&y, &x)?,
            });
        }
        return acc.ok_or_else(|| CliError::usage("sum() needs an argument"));
    }
    match s {
        "trivial" => return Ok(ClassFunction::trivial(table.group())),
        "regular" => return Ok(ClassFunction::regular(table.group())),
        _ => {}
    }
    let i = table.find_str(s).ok_or_else(|| {
        let known: Vec<String> = table.labels().iter().map(|l| l.to_string()).collect();
        CliError::usage(format!("unknown character '{s}' (labels: {})", known.join(", ")))
    })?;
    Ok(table.irreducible(i).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use repcontain_core::chartab::{character_table_generic, character_table_gl2_closed_form, DEFAULT_MAX_CLASSES};
    use repcontain_core::groups::{sl2, DEFAULT_MAX_ORDER};

    #[test]
    fn expressions() {
        let g = sl2(5, DEFAULT_MAX_ORDER).unwrap();
        let t = character_table_generic(&g, DEFAULT_MAX_CLASSES).unwrap();
        let two = (0..t.len()).find(|&i| t.irreducible(i).dim() == Some(2)).unwrap();
        let s = format!("chi({two})");
        assert_eq!(eval_char(&t, &format!("sym:3({s})")).unwrap().dim(), Some(4));
        assert_eq!(eval_char(&t, &format!("ext:2({s})")).unwrap(), ClassFunction::trivial(&g));
        assert_eq!(eval_char(&t, &format!("det({s})")).unwrap(), ClassFunction::trivial(&g));
        assert_eq!(eval_char(&t, &format!("tensor({s}, sym:2({s}))")).unwrap().dim(), Some(6));
        assert_eq!(eval_char(&t, &format!("sum({s}, trivial, {s})")).unwrap().dim(), Some(5));
        assert_eq!(eval_char(&t, "regular").unwrap().dim(), Some(120));
        assert!(eval_char(&t, "chi(99)").is_err());
        assert!(eval_char(&t, &format!("tensor({s})")).is_err());
        assert!(eval_char(&t, "sym:x(chi(0))").is_err());
    }

    #[test]
    fn gl2_labels() {
        let t = character_table_gl2_closed_form(3).unwrap();
        assert_eq!(eval_char(&t, "ps(0, 1)").unwrap().dim(), Some(4));
        assert_eq!(eval_char(&t, "cusp(1)").unwrap().dim(), Some(2));
    }
}
