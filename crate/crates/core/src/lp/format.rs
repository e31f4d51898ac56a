//! CPLEX LP text dump, for cross-checking with external solvers.

use std::fmt::Write;

use super::{abs_value_transform, LinearProgram, ObjectiveForm};

/// Fixed-point rendering with at most 12 significant digits and trailing
/// zeros trimmed.
pub fn format_significant(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return if v.is_finite() { "0".to_string() } else { v.to_string() };
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    let mut s = format!("{v:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}

fn linear_expr(coeffs: &[f64], names: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in coeffs.iter().zip(names) {
        if *c == 0.0 {
            continue;
        }
        let sign = if *c < 0.0 { "-" } else { "+" };
        if out.is_empty() && sign == "+" {
            let _ = write!(out, "{} {name}", format_significant(c.abs()));
        } else {
            if !out.is_empty() {
                out.push(' ');
            }
            let _ = write!(out, "{sign} {} {name}", format_significant(c.abs()));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Renders `program` in CPLEX LP format. Absolute-value objectives are
/// linearized first; positive parts are named `xp<i>` and negative parts `xm<i>`.
pub fn to_lp_format(program: &LinearProgram) -> String {
    let (lp, names): (LinearProgram, Vec<String>) = match program.objective_form {
        ObjectiveForm::AbsoluteValue => {
            let split = abs_value_transform(program);
            let free: Vec<usize> = (0..program.num_vars).filter(|&j| !program.nonneg[j]).collect();
            let mut names: Vec<String> = (1..=program.num_vars).map(|i| format!("xp{i}")).collect();
            names.extend(free.iter().map(|j| format!("xm{}", j + 1)));
            (split, names)
        }
        ObjectiveForm::Linear => (program.clone(), (1..=program.num_vars).map(|i| format!("x{i}")).collect()),
    };

    let mut out = String::new();
    out.push_str("\\ interval-shift linear program\n");
    out.push_str("Minimize\n");
    let _ = writeln!(out, " obj: {}", linear_expr(&lp.objective, &names));
    out.push_str("Subject To\n");
    for (i, row) in lp.constraints.iter().enumerate() {
        let _ = writeln!(
            out,
            " c{}: {} {} {}",
            i + 1,
            linear_expr(&row.coeffs, &names),
            row.relation.symbol(),
            format_significant(row.rhs)
        );
    }
    out.push_str("Bounds\n");
    for (name, &nn) in names.iter().zip(&lp.nonneg) {
        if nn {
            let _ = writeln!(out, " {name} >= 0");
        } else {
            let _ = writeln!(out, " {name} free");
        }
    }
    out.push_str("End\n");
    out
}
