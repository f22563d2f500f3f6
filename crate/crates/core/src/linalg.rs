//! Exact linear algebra over `Q(ζ_M)`: incremental sparse echelon forms,
//! kernels, and small dense matrix helpers.

use std::collections::{BTreeMap, HashMap};

use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Sparse vector: `(column, value)` pairs sorted by column, no zeros.
pub type SparseVec = Vec<(usize, Cyc)>;

/// Dense square or rectangular matrix, row-major.
pub type Matrix = Vec<Vec<Cyc>>;

fn to_map(v: &[(usize, Cyc)]) -> BTreeMap<usize, Cyc> {
    v.iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (*i, c.clone()))
        .collect()
}

/// Row space kept in (semi-)echelon form; rows are normalized to leading 1.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: HashMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.keys().copied().collect();
        p.sort_unstable();
        p
    }

    fn reduce_map(&self, v: &mut BTreeMap<usize, Cyc>) {
        let mut cursor = 0usize;
        loop {
            let Some((&c, val)) = v.range(cursor..).next() else {
                break;
            };
            if let Some(row) = self.rows.get(&c) {
                let f = val.clone();
                for (j, x) in row {
                    let sub = &f * x;
                    let entry = v.entry(*j).or_insert_with(|| Cyc::zero(f.order()));
                    *entry = &*entry - &sub;
                    if entry.is_zero() {
                        v.remove(j);
                    }
                }
            }
            cursor = c + 1;
        }
    }

    /// Remainder of `v` after elimination against the stored rows.
    pub fn reduce(&self, v: &[(usize, Cyc)]) -> SparseVec {
        let mut m = to_map(v);
        self.reduce_map(&mut m);
        m.into_iter().collect()
    }

    pub fn contains(&self, v: &[(usize, Cyc)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, v: &[(usize, Cyc)]) -> bool {
        let r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        let inv = r[0].1.inv().expect("nonzero leading entry");
        let row: SparseVec = r.into_iter().map(|(j, x)| (j, &x * &inv)).collect();
        self.rows.insert(row[0].0, row);
        true
    }

    /// Fully reduced rows sorted by pivot column.
    pub fn rref_rows(&self) -> Vec<SparseVec> {
        let pivots = self.pivots();
        let mut rows: BTreeMap<usize, BTreeMap<usize, Cyc>> = self
            .rows
            .iter()
            .map(|(p, r)| (*p, to_map(r)))
            .collect();
        for &p in pivots.iter().rev() {
            let prow = rows[&p].clone();
            for (&q, row) in rows.range_mut(..p) {
                let _ = q;
                if let Some(f) = row.get(&p).cloned() {
                    for (j, x) in &prow {
                        let sub = &f * x;
                        let entry = row.entry(*j).or_insert_with(|| Cyc::zero(f.order()));
                        *entry = &*entry - &sub;
                        if entry.is_zero() {
                            row.remove(j);
                        }
                    }
                }
            }
        }
        rows.into_values().map(|r| r.into_iter().collect()).collect()
    }
}

/// Basis of `{v : row·v = 0 for every row}` in `ncols` coordinates, one vector
/// per free column in increasing order, each with a 1 at its free column.
pub fn kernel(rows: &[SparseVec], ncols: usize, order: u32) -> Vec<SparseVec> {
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(r);
    }
    let rref = ech.rref_rows();
    let pivot_cols: Vec<usize> = rref.iter().map(|r| r[0].0).collect();
    let is_pivot: Vec<bool> = {
        let mut b = vec![false; ncols];
        for p in &pivot_cols {
            b[*p] = true;
        }
        b
    };
    // column f of the reduced rows, grouped by free column
    let mut by_free: HashMap<usize, Vec<(usize, Cyc)>> = HashMap::new();
    for (p, row) in pivot_cols.iter().zip(&rref) {
        for (j, x) in row.iter().skip(1) {
            by_free.entry(*j).or_default().push((*p, -x));
        }
    }
    (0..ncols)
        .filter(|f| !is_pivot[*f])
        .map(|f| {
            let mut v = by_free.remove(&f).unwrap_or_default();
            v.push((f, Cyc::one(order)));
            v.sort_by_key(|(i, _)| *i);
            v
        })
        .collect()
}

pub fn identity(n: usize, order: u32) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Cyc::one(order) } else { Cyc::zero(order) })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, Vec::len);
    let order = a[0][0].order();
    let mut out = vec![vec![Cyc::zero(order); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[l][j].is_zero() {
                    out[i][j] = &out[i][j] + &(&a[i][l] * &b[l][j]);
                }
            }
        }
    }
    out
}

pub fn mat_sub(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x - y).collect())
        .collect()
}

pub fn trace(a: &Matrix) -> Cyc {
    let mut t = Cyc::zero(a[0][0].order());
    for (i, row) in a.iter().enumerate() {
        t = &t + &row[i];
    }
    t
}

pub fn determinant(a: &Matrix) -> Cyc {
    let n = a.len();
    let order = a[0][0].order();
    let mut m = a.clone();
    let mut det = Cyc::one(order);
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Cyc::zero(order);
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        det = &det * &m[col][col];
        let inv = m[col][col].inv().unwrap();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] * &inv;
            for c in col..n {
                let v = &m[r][c] - &(&f * &m[col][c]);
                m[r][c] = v;
            }
        }
    }
    det
}

pub fn inverse(a: &Matrix) -> Result<Matrix> {
    let n = a.len();
    let order = a[0][0].order();
    let mut m: Matrix = a
        .iter()
        .zip(identity(n, order))
        .map(|(r, e)| r.iter().cloned().chain(e).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or(Error::SingularMatrix)?;
        m.swap(piv, col);
        let inv = m[col][col].inv()?;
        for x in m[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for c in col..2 * n {
                let v = &m[r][c] - &(&f * &m[col][c]);
                m[r][c] = v;
            }
        }
    }
    Ok(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Kernel of a dense matrix as dense column vectors.
pub fn dense_kernel(a: &Matrix) -> Vec<Vec<Cyc>> {
    let ncols = a.first().map_or(0, Vec::len);
    let order = a[0][0].order();
    let rows: Vec<SparseVec> = a
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(j, x)| (j, x.clone()))
                .collect()
        })
        .collect();
    kernel(&rows, ncols, order)
        .into_iter()
        .map(|v| {
            let mut d = vec![Cyc::zero(order); ncols];
            for (i, x) in v {
                d[i] = x;
            }
            d
        })
        .collect()
}

/// Characteristic polynomial `det(tI - A)`, coefficients low to high.
pub fn char_poly(a: &Matrix) -> Vec<Cyc> {
    // Faddeev–LeVerrier
    let n = a.len();
    let order = a[0][0].order();
    let mut coeffs = vec![Cyc::zero(order); n + 1];
    coeffs[n] = Cyc::one(order);
    let id = identity(n, order);
    let mut mk = vec![vec![Cyc::zero(order); n]; n];
    for k in 1..=n {
        let c_prev = coeffs[n - k + 1].clone();
        let mut next = mat_mul(a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = &row[i] + &(&id[i][i] * &c_prev);
        }
        mk = next;
        let am = mat_mul(a, &mk);
        let tr = trace(&am);
        coeffs[n - k] = -tr.scale(&Rational::new(1, k as i64));
    }
    coeffs
}

pub fn poly_eval(p: &[Cyc], x: &Cyc) -> Cyc {
    let mut acc = Cyc::zero(x.order());
    for c in p.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

/// Divides `p` by `(t - root)`, returning quotient and remainder.
pub fn poly_div_linear(p: &[Cyc], root: &Cyc) -> (Vec<Cyc>, Cyc) {
    let n = p.len();
    if n == 0 {
        return (Vec::new(), Cyc::zero(root.order()));
    }
    let mut q = vec![Cyc::zero(root.order()); n.saturating_sub(1)];
    let mut carry = Cyc::zero(root.order());
    for k in (0..n).rev() {
        let v = &p[k] + &(&carry * root);
        if k == 0 {
            return (q, v);
        }
        q[k - 1] = v.clone();
        carry = v;
    }
    unreachable!()
}

/// Multiplicity of `root` as a zero of `p`, and the cofactor.
pub fn root_multiplicity(p: &[Cyc], root: &Cyc) -> (usize, Vec<Cyc>) {
    let mut cur = p.to_vec();
    let mut mult = 0;
    while cur.len() > 1 {
        let (q, r) = poly_div_linear(&cur, root);
        if !r.is_zero() {
            break;
        }
        cur = q;
        mult += 1;
    }
    (mult, cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(order: u32, rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|x| Cyc::from_int(order, *x)).collect())
            .collect()
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = m(1, &[&[1, 2, 3], &[2, 4, 6]]);
        let k = dense_kernel(&a);
        assert_eq!(k.len(), 2);
        for v in &k {
            let s = &(&(&a[0][0] * &v[0]) + &(&a[0][1] * &v[1])) + &(&a[0][2] * &v[2]);
            assert!(s.is_zero());
        }
    }

    #[test]
    fn determinant_inverse_charpoly() {
        let a = m(4, &[&[0, -1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert!(determinant(&a).is_one());
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(3, 4));
        // (t-1)(t^2+1) = t^3 - t^2 + t - 1
        let cp = char_poly(&a);
        let expect: Vec<Cyc> = [-1, 1, -1, 1].iter().map(|x| Cyc::from_int(4, *x)).collect();
        assert_eq!(cp, expect);
        let (mult, rest) = root_multiplicity(&cp, &Cyc::one(4));
        assert_eq!(mult, 1);
        assert_eq!(rest.len(), 3);
        assert_eq!(root_multiplicity(&cp, &Cyc::zeta(4, 1)).0, 1);
        assert!(inverse(&m(4, &[&[1, 1], &[1, 1]])).is_err());
    }

    #[test]
    fn echelon_membership() {
        let one = Cyc::one(3);
        let w = Cyc::zeta(3, 1);
        let mut e = Echelon::new();
        assert!(e.insert(&[(0, one.clone()), (2, w.clone())]));
        assert!(e.insert(&[(1, one.clone())]));
        assert!(!e.insert(&[(0, w.clone()), (1, one.clone()), (2, &w * &w)]));
        assert!(e.insert(&[(2, one.clone())]));
        assert_eq!(e.rank(), 3);
    }
}
