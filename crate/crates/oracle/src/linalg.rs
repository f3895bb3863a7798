//! Tiny dense Gaussian-elimination helpers. Matrices here are at most
//! 5 columns wide and 10 rows tall, so plain partial pivoting is plenty.

pub const PIVOT_TOL: f64 = 1e-10;

fn matrix_scale(rows: &[Vec<f64>]) -> f64 {
    rows.iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |m, x| m.max(x.abs()))
        .max(1.0)
}

/// Row-reduce in place, returning the rank. Rows end up in echelon order.
pub fn rank(rows: &mut Vec<Vec<f64>>, tol: f64) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let cutoff = tol * matrix_scale(rows);
    let mut r = 0;
    for c in 0..cols {
        let Some(best) = (r..rows.len()).max_by(|&i, &j| {
            rows[i][c].abs().partial_cmp(&rows[j][c].abs()).unwrap()
        }) else {
            break;
        };
        if rows[best][c].abs() <= cutoff {
            continue;
        }
        rows.swap(r, best);
        for i in 0..rows.len() {
            if i != r && rows[i][c].abs() > 0.0 {
                let f = rows[i][c] / rows[r][c];
                for k in 0..cols {
                    rows[i][k] -= f * rows[r][k];
                }
                rows[i][c] = 0.0;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    r
}

/// Basis of the right nullspace of the matrix (rows of `a` are equations).
pub fn nullspace(a: &[Vec<f64>], tol: f64) -> Vec<Vec<f64>> {
    if a.is_empty() {
        return Vec::new();
    }
    let cols = a[0].len();
    let mut rows: Vec<Vec<f64>> = a.to_vec();
    let cutoff = tol * matrix_scale(&rows);
    let mut pivot_col: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(best) = (r..rows.len()).max_by(|&i, &j| {
            rows[i][c].abs().partial_cmp(&rows[j][c].abs()).unwrap()
        }) else {
            break;
        };
        if rows[best][c].abs() <= cutoff {
            continue;
        }
        rows.swap(r, best);
        let p = rows[r][c];
        for k in 0..cols {
            rows[r][k] /= p;
        }
        for i in 0..rows.len() {
            if i != r {
                let f = rows[i][c];
                if f != 0.0 {
                    for k in 0..cols {
                        rows[i][k] -= f * rows[r][k];
                    }
                }
            }
        }
        pivot_col.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivot_col.contains(c)) {
        let mut v = vec![0.0; cols];
        v[free] = 1.0;
        for (row, &pc) in pivot_col.iter().enumerate() {
            v[pc] = -rows[row][free];
        }
        basis.push(v);
    }
    basis
}

/// Solve the square system a x = b. None when the matrix is singular at the
/// pivot tolerance.
pub fn solve(a: &[Vec<f64>], b: &[f64], tol: f64) -> Option<Vec<f64>> {
    let k = a.len();
    if k == 0 {
        return Some(Vec::new());
    }
    let mut m: Vec<Vec<f64>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            let mut r = row.clone();
            r.push(rhs);
            r
        })
        .collect();
    let cutoff = tol * matrix_scale(&m);
    for c in 0..k {
        let best = (c..k).max_by(|&i, &j| m[i][c].abs().partial_cmp(&m[j][c].abs()).unwrap())?;
        if m[best][c].abs() <= cutoff {
            return None;
        }
        m.swap(c, best);
        for i in 0..k {
            if i != c {
                let f = m[i][c] / m[c][c];
                if f != 0.0 {
                    for col in c..=k {
                        m[i][col] -= f * m[c][col];
                    }
                }
            }
        }
    }
    Some((0..k).map(|i| m[i][k] / m[i][i]).collect())
}
