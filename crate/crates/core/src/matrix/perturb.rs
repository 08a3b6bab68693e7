//! Raising `π` and `ν` one diagonal entry at a time.

use num_traits::One;

use super::{inertia_exact, int, Rational, SymMatrix};
use crate::error::{Error, Result};

/// A matrix with the same pattern as `a` and partial inertia `(r, s)`.
///
/// For `ε > 0` with `A + εI` invertible and `ν(A + εI) = ν(A)`, the scan
/// `A_i = A_{i-1} + ε e_i e_iᵀ` raises `π` by at most one per step and
/// keeps `ν`, so it passes through every value up to `n - ν`. The same
/// walk with `-ε` then raises `ν`.
pub fn northeast_perturb(a: &SymMatrix, target: (usize, usize)) -> Result<SymMatrix> {
    let n = a.n();
    let start = inertia_exact(a);
    let (r, s) = target;
    if r < start.pos || s < start.neg || r + s > n {
        return Err(Error::OutsideCone {
            from: start.pin(),
            target,
            n,
        });
    }
    let raised = walk(a, r, false);
    let done = walk(&raised, s, true);
    debug_assert_eq!(inertia_exact(&done).pin(), target);
    Ok(done)
}

/// Scans diagonal entries until the positive count (or the negative count
/// when `negative`) reaches `want`.
fn walk(a: &SymMatrix, want: usize, negative: bool) -> SymMatrix {
    let count = |m: &SymMatrix| {
        let i = inertia_exact(m);
        if negative {
            (i.neg, i.pos)
        } else {
            (i.pos, i.neg)
        }
    };
    let (mut up, keep) = count(a);
    if up >= want {
        return a.clone();
    }
    let sign = if negative { int(-1) } else { int(1) };
    let step = &sign * small_shift(a, keep, negative);
    let mut m = a.clone();
    for i in 0..a.n() {
        m.add_diag(i, &step);
        up = count(&m).0;
        if up == want {
            break;
        }
    }
    debug_assert_eq!(up, want);
    m
}

/// Halves `ε` from 1 until `A ± εI` is nonsingular and the other sign
/// count is unchanged.
fn small_shift(a: &SymMatrix, keep: usize, negative: bool) -> Rational {
    let mut eps = Rational::one();
    let half = Rational::new(1.into(), 2.into());
    loop {
        let mut m = a.clone();
        let shift = if negative { -eps.clone() } else { eps.clone() };
        for i in 0..a.n() {
            m.add_diag(i, &shift);
        }
        let i = inertia_exact(&m);
        let other = if negative { i.pos } else { i.neg };
        if i.zero == 0 && other == keep {
            return eps;
        }
        eps *= &half;
    }
}
