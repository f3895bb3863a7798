use crate::linalg::{nullspace, rank, solve, PIVOT_TOL};
use crate::OracleError;
use algebra_core::{Multivector, Side};

/// A subspace of R^(n+1) given by independent coordinate rows.
#[derive(Debug, Clone)]
pub struct SpanSet {
    pub dim: usize,
    pub rows: Vec<Vec<f64>>,
}

impl SpanSet {
    pub fn from_rows(mut rows: Vec<Vec<f64>>, cols: usize) -> SpanSet {
        rows.retain(|r| r.iter().any(|x| x.abs() > 0.0));
        for r in &rows {
            assert_eq!(r.len(), cols);
        }
        rank(&mut rows, PIVOT_TOL);
        SpanSet {
            dim: rows.len(),
            rows,
        }
    }

    pub fn rank_with(&self, extra: &[Vec<f64>]) -> usize {
        let mut rows = self.rows.clone();
        rows.extend_from_slice(extra);
        rank(&mut rows, PIVOT_TOL)
    }

    pub fn union(&self, other: &SpanSet) -> SpanSet {
        let cols = self
            .rows
            .first()
            .or(other.rows.first())
            .map(|r| r.len())
            .unwrap_or(0);
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        SpanSet::from_rows(rows, cols)
    }

    pub fn contains_span(&self, other: &SpanSet) -> bool {
        self.rank_with(&other.rows) == self.dim
    }
}

/// Factor a simple grade-k blade into k spanning coordinate vectors.
///
/// Pivots on the largest-magnitude coefficient P; for each i in P the vector
/// with components v[j] = (-1)^(#{s in P\{i} : s > j}) * A[(P\{i}) u {j}]
/// lies in the blade's span. The factorization is verified by re-wedging.
pub fn blade_factor(m: &Multivector) -> Result<SpanSet, OracleError> {
    let n = m.n();
    let cols = (n + 1) as usize;
    let scale = m.max_abs();
    if scale == 0.0 {
        return Ok(SpanSet::from_rows(Vec::new(), cols));
    }
    let k = m
        .single_grade(1e-12 * scale)
        .ok_or(OracleError::NonHomogeneous)?;
    if k == 0 {
        return Ok(SpanSet::from_rows(Vec::new(), cols));
    }
    let pivot = (0..m.blade_count() as u16)
        .max_by(|&a, &b| m.coeff(a).abs().partial_cmp(&m.coeff(b).abs()).unwrap())
        .unwrap();
    let mut rows = Vec::new();
    for i in 0..=n {
        if pivot & (1 << i) == 0 {
            continue;
        }
        let s = pivot & !(1 << i);
        let mut v = vec![0.0; cols];
        for j in 0..=n {
            if s & (1 << j) != 0 {
                continue;
            }
            let above = (s >> (j + 1)).count_ones();
            let sign = if above % 2 == 0 { 1.0 } else { -1.0 };
            v[j as usize] = sign * m.coeff(s | (1 << j));
        }
        rows.push(v);
    }
    let span = SpanSet::from_rows(rows, cols);
    if span.dim != k as usize {
        return Err(OracleError::NonSimple);
    }
    // A genuine factorization re-wedges to the blade itself (up to scale).
    let back = rewedge(&span, n, m.side());
    if !proportional(&back, m, 1e-8) {
        return Err(OracleError::NonSimple);
    }
    Ok(span)
}

/// Wedge of the span's rows: coefficient at each k-index blade is the k x k
/// minor of the row matrix on those columns.
pub fn rewedge(span: &SpanSet, n: u8, side: Side) -> Multivector {
    let k = span.dim;
    let mut out = Multivector::zero(n, side);
    if k == 0 {
        out.set(0, 1.0);
        return out;
    }
    for mask in 0..(1u16 << (n + 1)) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let cols: Vec<usize> = (0..=n as usize).filter(|&j| mask & (1 << j) != 0).collect();
        let minor: Vec<Vec<f64>> = span
            .rows
            .iter()
            .map(|r| cols.iter().map(|&c| r[c]).collect())
            .collect();
        out.set(mask, determinant(&minor));
    }
    out
}

fn determinant(m: &[Vec<f64>]) -> f64 {
    let k = m.len();
    let mut a: Vec<Vec<f64>> = m.to_vec();
    let mut det = 1.0;
    for c in 0..k {
        let best = (c..k)
            .max_by(|&i, &j| a[i][c].abs().partial_cmp(&a[j][c].abs()).unwrap())
            .unwrap();
        if a[best][c] == 0.0 {
            return 0.0;
        }
        if best != c {
            a.swap(c, best);
            det = -det;
        }
        det *= a[c][c];
        for i in c + 1..k {
            let f = a[i][c] / a[c][c];
            if f != 0.0 {
                for col in c..k {
                    a[i][col] -= f * a[c][col];
                }
            }
        }
    }
    det
}

pub fn proportional(a: &Multivector, b: &Multivector, tol: f64) -> bool {
    let (sa, sb) = (a.max_abs(), b.max_abs());
    if sa == 0.0 || sb == 0.0 {
        return sa == 0.0 && sb == 0.0;
    }
    // Scale factor from the dominant coefficient of b.
    let pivot = (0..b.blade_count())
        .max_by(|&i, &j| {
            b.coeffs()[i]
                .abs()
                .partial_cmp(&b.coeffs()[j].abs())
                .unwrap()
        })
        .unwrap();
    let f = a.coeffs()[pivot] / b.coeffs()[pivot];
    a.approx_eq(&b.scaled(f), tol * sa.max(sb * f.abs()))
}

/// Join as span arithmetic: nonzero exactly when the two spans together fill
/// R^(n+1), in which case the result re-wedges a basis of their
/// intersection. Matches the kernel's join up to scale.
pub fn oracle_join(a: &Multivector, b: &Multivector) -> Result<Multivector, OracleError> {
    let n = a.n();
    let side = a.side();
    let full = (n + 1) as usize;
    if a.max_abs() == 0.0 || b.max_abs() == 0.0 {
        return Ok(Multivector::zero(n, side));
    }
    let sa = blade_factor(a)?;
    let sb = blade_factor(b)?;
    if sa.union(&sb).dim < full {
        return Ok(Multivector::zero(n, side));
    }
    let inter = intersect(&sa, &sb, full);
    Ok(rewedge(&inter, n, side))
}

/// Intersection of two row spans via the nullspace of [A^T | -B^T].
fn intersect(a: &SpanSet, b: &SpanSet, cols: usize) -> SpanSet {
    if a.dim == 0 || b.dim == 0 {
        return SpanSet::from_rows(Vec::new(), cols);
    }
    let mut eqs: Vec<Vec<f64>> = Vec::with_capacity(cols);
    for c in 0..cols {
        let mut row = Vec::with_capacity(a.dim + b.dim);
        for ra in &a.rows {
            row.push(ra[c]);
        }
        for rb in &b.rows {
            row.push(-rb[c]);
        }
        eqs.push(row);
    }
    let mut rows = Vec::new();
    for sol in nullspace(&eqs, PIVOT_TOL) {
        let mut v = vec![0.0; cols];
        for (i, ra) in a.rows.iter().enumerate() {
            for c in 0..cols {
                v[c] += sol[i] * ra[c];
            }
        }
        rows.push(v);
    }
    SpanSet::from_rows(rows, cols)
}

/// Meet as span arithmetic: the union span (the dual blade of the
/// intersection flat), empty when the inputs are dependent.
pub fn oracle_meet(a: &Multivector, b: &Multivector) -> Result<SpanSet, OracleError> {
    let sa = blade_factor(a)?;
    let sb = blade_factor(b)?;
    Ok(sa.union(&sb))
}

/// Containment of the flat of `point` in the flat of `flat`: in dual spans
/// that reverses to span(flat) being a subspace of span(point).
pub fn oracle_incidence(point: &Multivector, flat: &Multivector) -> Result<bool, OracleError> {
    let sp = blade_factor(point)?;
    let sf = blade_factor(flat)?;
    Ok(sp.contains_span(&sf))
}

/// Closest point to the coordinate origin on the finite flat of a simple
/// dual blade: least-norm solution of the blade's linear constraints.
pub fn oracle_closest_point(m: &Multivector) -> Result<Vec<f64>, OracleError> {
    let n = m.n() as usize;
    let span = blade_factor(m)?;
    if span.dim == 0 {
        return Err(OracleError::NoFinitePoint);
    }
    // Row (d, a1..an) constrains d + sum a_i x_i = 0.
    let c: Vec<Vec<f64>> = span.rows.iter().map(|r| r[1..].to_vec()).collect();
    let d: Vec<f64> = span.rows.iter().map(|r| r[0]).collect();
    let k = span.dim;
    // Least-norm x = C^T lambda with (C C^T) lambda = -d.
    let mut gram = vec![vec![0.0; k]; k];
    for i in 0..k {
        for j in 0..k {
            gram[i][j] = (0..n).map(|t| c[i][t] * c[j][t]).sum();
        }
    }
    let rhs: Vec<f64> = d.iter().map(|&x| -x).collect();
    let lambda = solve(&gram, &rhs, PIVOT_TOL).ok_or(OracleError::NoFinitePoint)?;
    let mut x = vec![0.0; n];
    for (i, li) in lambda.iter().enumerate() {
        for (t, xt) in x.iter_mut().enumerate() {
            *xt += li * c[i][t];
        }
    }
    Ok(x)
}
