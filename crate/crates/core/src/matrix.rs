//! Exact integer matrices: Hermite and Smith normal forms, determinants,
//! rational solves. Row convention throughout: lattice generators are rows,
//! and transforms act by left multiplication (`U * M`) on rows or right
//! multiplication (`M * V`) on columns.

use crate::arith::{dot, Int, Rat};
use crate::error::Error;
use crate::Result;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl std::fmt::Debug for IntMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(
                f,
                "  {:?}",
                (0..self.cols).map(|j| self[(i, j)].clone()).collect::<Vec<_>>()
            )?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>, cols: usize) -> Self {
        let n = rows.len();
        let mut m = Self::zero(n, cols);
        for (i, r) in rows.into_iter().enumerate() {
            assert_eq!(r.len(), cols, "row length mismatch");
            for (j, v) in r.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect(),
            cols,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vec<Int> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Int::zero();
                for k in 0..self.cols {
                    acc += &self[(i, k)] * &other[(k, j)];
                }
                out[(i, j)] = acc;
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn apply_left(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(v.len(), self.rows);
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| &v[i] * &self[(i, j)]).sum())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self[(i, j)].clone();
            self[(i, j)] = v;
        }
    }

    /// row_i += q * row_k
    fn add_row_multiple(&mut self, i: usize, k: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self[(i, j)] + q * &self[(k, j)];
            self[(i, j)] = v;
        }
    }

    /// col_j += q * col_k
    fn add_col_multiple(&mut self, j: usize, k: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self[(i, j)] + q * &self[(i, k)];
            self[(i, j)] = v;
        }
    }
}

/// Row Hermite normal form: returns `(H, U)` with `U * M = H`, `U` unimodular.
///
/// `H` has its pivot (first nonzero entry of each row) positive, entries above
/// a pivot reduced into `[0, pivot)`, and zero rows at the bottom.
pub fn hermite_normal_form(m: &IntMat) -> (IntMat, IntMat) {
    let (rows, cols) = (m.rows, m.cols);
    let mut h = m.clone();
    let mut u = IntMat::identity(rows);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            // move the smallest nonzero entry of column c (rows r..) to row r
            let mut piv: Option<usize> = None;
            for i in r..rows {
                if !h[(i, c)].is_zero()
                    && piv.is_none_or(|p| h[(i, c)].abs() < h[(p, c)].abs())
                {
                    piv = Some(i);
                }
            }
            let Some(p) = piv else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut cleared = true;
            for i in (r + 1)..rows {
                if !h[(i, c)].is_zero() {
                    let q = -h[(i, c)].div_floor(&h[(r, c)]);
                    h.add_row_multiple(i, r, &q);
                    u.add_row_multiple(i, r, &q);
                    if !h[(i, c)].is_zero() {
                        cleared = false;
                    }
                }
            }
            if cleared {
                break;
            }
        }
        if !h[(r, c)].is_zero() {
            if h[(r, c)].is_negative() {
                h.negate_row(r);
                u.negate_row(r);
            }
            for i in 0..r {
                let q = -h[(i, c)].div_floor(&h[(r, c)]);
                h.add_row_multiple(i, r, &q);
                u.add_row_multiple(i, r, &q);
            }
            r += 1;
        }
    }
    (h, u)
}

/// Rank of the row lattice (= rank over Q).
pub fn rank(m: &IntMat) -> usize {
    let (h, _) = hermite_normal_form(m);
    (0..h.rows).filter(|&i| !(0..h.cols).all(|j| h[(i, j)].is_zero())).count()
}

pub struct Snf {
    /// Diagonal matrix with d_1 | d_2 | ... >= 0.
    pub d: IntMat,
    /// Unimodular row transform: u * m * v = d.
    pub u: IntMat,
    /// Unimodular column transform.
    pub v: IntMat,
    /// Inverse of `v` (maintained exactly alongside `v`).
    pub v_inv: IntMat,
}

/// Smith normal form with both column transforms tracked.
pub fn smith_normal_form(m: &IntMat) -> Snf {
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = IntMat::identity(rows);
    let mut v = IntMat::identity(cols);
    let mut v_inv = IntMat::identity(cols);
    // column operation col_j += q*col_k corresponds to row op row_k -= q*row_j
    // on the inverse; swaps and negations mirror likewise.
    let mut t = 0;
    while t < rows.min(cols) {
        // pick the entry of smallest absolute value in the trailing submatrix
        let mut piv: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !d[(i, j)].is_zero()
                    && piv.is_none_or(|p| d[(i, j)].abs() < d[p].abs())
                {
                    piv = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = piv else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        v_inv.swap_rows(t, pj);
        loop {
            let mut dirty = false;
            for i in (t + 1)..rows {
                if !d[(i, t)].is_zero() {
                    let q = -d[(i, t)].div_floor(&d[(t, t)]);
                    d.add_row_multiple(i, t, &q);
                    u.add_row_multiple(i, t, &q);
                    if !d[(i, t)].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in (t + 1)..cols {
                if !d[(t, j)].is_zero() {
                    let q = -d[(t, j)].div_floor(&d[(t, t)]);
                    d.add_col_multiple(j, t, &q);
                    v.add_col_multiple(j, t, &q);
                    v_inv.add_row_multiple(t, j, &(-q));
                    if !d[(t, j)].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                // smaller residues appeared; re-seat the pivot and go again
                let mut best: Option<(usize, usize)> = None;
                for i in t..rows {
                    let j_range: Box<dyn Iterator<Item = usize>> =
                        if i == t { Box::new(t..cols) } else { Box::new(t..=t) };
                    for j in j_range {
                        if !d[(i, j)].is_zero()
                            && best.is_none_or(|p| d[(i, j)].abs() < d[p].abs())
                        {
                            best = Some((i, j));
                        }
                    }
                }
                let (bi, bj) = best.expect("pivot vanished");
                d.swap_rows(t, bi);
                u.swap_rows(t, bi);
                d.swap_cols(t, bj);
                v.swap_cols(t, bj);
                v_inv.swap_rows(t, bj);
                continue;
            }
            // row and column t are clear; enforce divisibility of the rest
            let mut offender = None;
            'scan: for i in (t + 1)..rows {
                for j in (t + 1)..cols {
                    if !(&d[(i, j)] % &d[(t, t)]).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    d.add_row_multiple(t, i, &Int::one());
                    u.add_row_multiple(t, i, &Int::one());
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    Snf { d, u, v, v_inv }
}

/// Exact determinant of a square matrix (fraction-free Bareiss elimination).
pub fn determinant(m: &IntMat) -> Int {
    assert_eq!(m.rows, m.cols, "determinant of non-square matrix");
    let n = m.rows;
    if n == 0 {
        return Int::one();
    }
    let mut a = m.clone();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                debug_assert!((&num % &prev).is_zero());
                a[(i, j)] = num / &prev;
            }
            a[(i, k)] = Int::zero();
        }
        prev = a[(k, k)].clone();
    }
    sign * a[(n - 1, n - 1)].clone()
}

/// Solve `x * basis = target` over Q, where `basis` rows are independent.
/// Returns None when the target is outside the row span.
pub fn solve_row_system(basis: &IntMat, target: &[Int]) -> Option<Vec<Rat>> {
    assert_eq!(basis.cols, target.len());
    let k = basis.rows;
    let n = basis.cols;
    // eliminate on the transpose: columns are the basis rows, rhs is target
    let mut a: Vec<Vec<Rat>> = (0..n)
        .map(|j| {
            (0..k)
                .map(|i| Rat::from(basis[(i, j)].clone()))
                .chain(std::iter::once(Rat::from(target[j].clone())))
                .collect()
        })
        .collect();
    let mut pivot_rows: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..=k {
                    let v = &a[i][j] - &f * &a[r][j];
                    a[i][j] = v;
                }
            }
        }
        pivot_rows.push(c);
        r += 1;
    }
    // consistency: rows beyond the pivots must have zero rhs
    for row in a.iter().skip(r) {
        if !row[k].is_zero() {
            return None;
        }
    }
    if pivot_rows.len() < k {
        // basis rows were dependent; reject rather than pick a section
        return None;
    }
    let mut x = vec![Rat::from(Int::zero()); k];
    for (i, &c) in pivot_rows.iter().enumerate() {
        x[c] = a[i][k].clone();
    }
    Some(x)
}

/// Integer solution of `x * basis = target`, or an error when the target is
/// outside the lattice generated by the rows.
pub fn solve_row_system_int(basis: &IntMat, target: &[Int]) -> Result<Vec<Int>> {
    let x = solve_row_system(basis, target).ok_or(Error::NotInLattice)?;
    x.into_iter()
        .map(|r| {
            if r.is_integer() {
                Ok(r.to_integer())
            } else {
                Err(Error::NotInLattice)
            }
        })
        .collect()
}

/// Primitive integer covector orthogonal to the rows of `dirs`
/// (`dirs` must be (d-1) x d of full row rank). Components are signed
/// cofactor minors, so the result is exact and deterministic.
pub fn orthogonal_covector(dirs: &IntMat) -> Option<Vec<Int>> {
    let d = dirs.cols;
    assert_eq!(dirs.rows + 1, d, "need d-1 direction rows in dimension d");
    let mut normal = Vec::with_capacity(d);
    for j in 0..d {
        let minor = IntMat::from_rows(
            (0..dirs.rows)
                .map(|i| (0..d).filter(|&c| c != j).map(|c| dirs[(i, c)].clone()).collect())
                .collect(),
            d - 1,
        );
        let s = if j % 2 == 0 { Int::one() } else { -Int::one() };
        normal.push(s * determinant(&minor));
    }
    if normal.iter().all(Zero::is_zero) {
        return None;
    }
    Some(crate::arith::primitive(&normal))
}

/// Verify `u * m = h` style products in tests; also handy for assertions.
pub fn mul_check(u: &IntMat, m: &IntMat, h: &IntMat) -> bool {
    u.mul(m) == *h
}

/// True when the matrix is square with determinant +-1.
pub fn is_unimodular(m: &IntMat) -> bool {
    m.rows == m.cols && determinant(m).abs().is_one()
}

/// Evaluate a covector on a point.
pub fn pairing(u: &[Int], x: &[Int]) -> Int {
    dot(u, x)
}
