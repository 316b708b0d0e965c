//! The bijection `(x, y) ↦ (xy⁻¹, y)`, `(g, h) ↦ (gh, h)` between
//! `A = {(x, y) : y⁻¹xy = x⁻¹}` and `B = {(g, h) : g²h² = 1}`, which shows
//! `s(2) = |G|·k_r` without characters.

use super::report::VerificationReport;
use crate::error::{Error, Result};
use crate::group::{ClassData, Group, TABLE_LIMIT};

pub const BIJECTION_LIMIT: usize = TABLE_LIMIT;

pub type Pair = (usize, usize);

/// Enumerates `A` and `B` over all `|G|²` pairs.
pub fn bijection_sets(g: &Group) -> (Vec<Pair>, Vec<Pair>) {
    let n = g.order();
    let squares: Vec<usize> = (0..n).map(|x| g.product(x, x)).collect();
    let mut a = Vec::new();
    let mut b = Vec::new();
    for x in 0..n {
        let x_inv = g.inverse(x);
        for y in 0..n {
            if g.conjugate(x, y) == x_inv {
                a.push((x, y));
            }
            if g.product(squares[x], squares[y]) == 0 {
                b.push((x, y));
            }
        }
    }
    (a, b)
}

fn forward(g: &Group, (x, y): Pair) -> Pair {
    (g.product(x, g.inverse(y)), y)
}

fn backward(g: &Group, (gg, h): Pair) -> Pair {
    (g.product(gg, h), h)
}

pub fn verify_bijection(g: &Group, cd: &ClassData) -> Result<VerificationReport> {
    let n = g.order();
    if n > BIJECTION_LIMIT {
        return Err(Error::SizeGuard(format!(
            "bijection check needs |G| <= {BIJECTION_LIMIT}, got {n}"
        )));
    }
    let label = g.name().unwrap_or("group").to_string();
    let (a, b) = bijection_sets(g);
    let mut in_a = vec![false; n * n];
    let mut in_b = vec![false; n * n];
    for &(x, y) in &a {
        in_a[x * n + y] = true;
    }
    for &(x, y) in &b {
        in_b[x * n + y] = true;
    }

    let mut report = VerificationReport::new();
    let bad_forward = a.iter().map(|&p| (p, forward(g, p))).find(|(_, q)| !in_b[q.0 * n + q.1]);
    report.record(
        &label,
        "bijection: forward map sends A into B",
        bad_forward.is_none(),
        bad_forward.map_or(String::new(), |(p, q)| format!("{p:?} -> {q:?} not in B")),
    );
    let bad_backward = b.iter().map(|&p| (p, backward(g, p))).find(|(_, q)| !in_a[q.0 * n + q.1]);
    report.record(
        &label,
        "bijection: backward map sends B into A",
        bad_backward.is_none(),
        bad_backward.map_or(String::new(), |(p, q)| format!("{p:?} -> {q:?} not in A")),
    );
    let bad_composite = a
        .iter()
        .find(|&&p| backward(g, forward(g, p)) != p)
        .or_else(|| b.iter().find(|&&p| forward(g, backward(g, p)) != p));
    report.record(
        &label,
        "bijection: composites are identities",
        bad_composite.is_none(),
        bad_composite.map_or(String::new(), |p| format!("{p:?} not fixed")),
    );
    let expected = n * cd.num_real_classes;
    report.record(
        &label,
        "bijection: |A| = |B| = |G|*k_r",
        a.len() == b.len() && a.len() == expected,
        format!("|A| = {}, |B| = {}, |G|*k_r = {expected}", a.len(), b.len()),
    );
    Ok(report)
}
