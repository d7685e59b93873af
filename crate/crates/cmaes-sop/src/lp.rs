//! Dense two-phase simplex for the tiny linear programs behind the
//! Voronoi facet test.
//!
//! Problems here have at most `N_k` rows and `L_k` columns, so a plain
//! tableau with Bland's rule is both fast enough and cycle-free.

const TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum LpOutcome {
    Optimal(f64),
    Infeasible,
    Unbounded,
}

/// Minimizes `c . x` subject to `A x = b`, `x >= 0`.
///
/// `a` is row-major with `rows * cols` entries. `b` may have any sign;
/// rows are flipped internally so the artificial basis is feasible.
pub(crate) fn solve_standard_form(
    a: &[f64],
    b: &[f64],
    c: &[f64],
    rows: usize,
    cols: usize,
) -> LpOutcome {
    assert_eq!(a.len(), rows * cols);
    assert_eq!(b.len(), rows);
    assert_eq!(c.len(), cols);

    // Tableau layout: [real columns | artificial columns | rhs].
    let width = cols + rows + 1;
    let rhs = width - 1;
    let mut t = vec![0.0f64; rows * width];
    let mut basis: Vec<usize> = (0..rows).map(|i| cols + i).collect();

    for i in 0..rows {
        let flip = if b[i] < 0.0 { -1.0 } else { 1.0 };
        for j in 0..cols {
            t[i * width + j] = flip * a[i * cols + j];
        }
        t[i * width + cols + i] = 1.0;
        t[i * width + rhs] = flip * b[i];
    }

    // Phase I: minimize the sum of artificials.
    let phase1_cost: Vec<f64> = (0..cols + rows)
        .map(|j| if j < cols { 0.0 } else { 1.0 })
        .collect();
    if !simplex(&mut t, &mut basis, &phase1_cost, rows, width) {
        // Phase I is always bounded below by zero.
        unreachable!("phase I cannot be unbounded");
    }
    let infeasibility: f64 = basis
        .iter()
        .enumerate()
        .map(|(i, &v)| if v >= cols { t[i * width + rhs] } else { 0.0 })
        .sum();
    if infeasibility > TOL {
        return LpOutcome::Infeasible;
    }

    // Drive any zero-level artificial out of the basis when possible.
    for i in 0..rows {
        if basis[i] >= cols {
            if let Some(j) = (0..cols).find(|&j| t[i * width + j].abs() > TOL) {
                pivot(&mut t, &mut basis, rows, width, i, j);
            }
        }
    }

    // Phase II on the real objective; artificial columns are barred.
    let mut phase2_cost = vec![0.0f64; cols + rows];
    phase2_cost[..cols].copy_from_slice(c);
    for j in cols..cols + rows {
        phase2_cost[j] = f64::INFINITY;
    }
    if !simplex(&mut t, &mut basis, &phase2_cost, rows, width) {
        return LpOutcome::Unbounded;
    }

    let value: f64 = basis
        .iter()
        .enumerate()
        .filter(|(_, &v)| v < cols)
        .map(|(i, &v)| c[v] * t[i * width + rhs])
        .sum();
    LpOutcome::Optimal(value)
}

/// Runs simplex iterations until optimality (`true`) or unboundedness (`false`).
fn simplex(t: &mut [f64], basis: &mut [usize], cost: &[f64], rows: usize, width: usize) -> bool {
    let cols_total = width - 1;
    let rhs = width - 1;
    loop {
        // Reduced costs from the current basis; Bland: first negative enters.
        // An artificial stuck in the basis sits at level zero in a redundant
        // row and never moves, so it contributes nothing to the objective.
        let basis_cost =
            |i: usize| -> f64 { if cost[basis[i]].is_finite() { cost[basis[i]] } else { 0.0 } };
        let mut entering = None;
        for j in 0..cols_total {
            if cost[j].is_infinite() || basis.contains(&j) {
                continue;
            }
            let z: f64 = (0..rows).map(|i| basis_cost(i) * t[i * width + j]).sum();
            if cost[j] - z < -TOL {
                entering = Some(j);
                break;
            }
        }
        let Some(enter) = entering else {
            return true;
        };

        // Ratio test; Bland: among ties pick the smallest basis index.
        let mut leave: Option<usize> = None;
        let mut best = f64::INFINITY;
        for i in 0..rows {
            let coef = t[i * width + enter];
            if coef > TOL {
                let ratio = t[i * width + rhs] / coef;
                let better = ratio < best - TOL
                    || (ratio < best + TOL && leave.is_some_and(|l| basis[i] < basis[l]));
                if leave.is_none() || better {
                    best = ratio.min(best);
                    leave = Some(i);
                }
            }
        }
        let Some(leave) = leave else {
            return false;
        };
        pivot(t, basis, rows, width, leave, enter);
    }
}

fn pivot(t: &mut [f64], basis: &mut [usize], rows: usize, width: usize, row: usize, col: usize) {
    let p = t[row * width + col];
    for j in 0..width {
        t[row * width + j] /= p;
    }
    for i in 0..rows {
        if i == row {
            continue;
        }
        let factor = t[i * width + col];
        if factor != 0.0 {
            for j in 0..width {
                t[i * width + j] -= factor * t[row * width + j];
            }
        }
    }
    basis[row] = col;
}

/// Maximizes `t` subject to `g_l . u + t <= h_l` over free `u` (dimension `m`).
///
/// Rows are `(g_l, h_l)` tuples. Returns `None` when the objective is
/// unbounded above, otherwise `Some(t*)`. Solved through the dual
/// `min h.y  s.t.  G^T y = 0, sum y = 1, y >= 0`, whose infeasibility is
/// exactly the unbounded primal case.
pub(crate) fn max_min_slack(rows: &[(Vec<f64>, f64)], m: usize) -> Option<f64> {
    if rows.is_empty() {
        return None;
    }
    let n = rows.len();
    let eq_rows = m + 1;
    let mut a = vec![0.0f64; eq_rows * n];
    for (l, (g, _)) in rows.iter().enumerate() {
        assert_eq!(g.len(), m);
        for d in 0..m {
            a[d * n + l] = g[d];
        }
        a[m * n + l] = 1.0;
    }
    let mut b = vec![0.0f64; eq_rows];
    b[m] = 1.0;
    let c: Vec<f64> = rows.iter().map(|(_, h)| *h).collect();

    match solve_standard_form(&a, &b, &c, eq_rows, n) {
        LpOutcome::Optimal(v) => Some(v),
        LpOutcome::Infeasible => None,
        // The primal is always feasible, so its dual cannot be unbounded.
        LpOutcome::Unbounded => unreachable!("dual of a feasible LP is bounded"),
    }
}
