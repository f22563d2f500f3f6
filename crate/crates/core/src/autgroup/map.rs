use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Serialize, Serializer};

use crate::algebra::{Monomial, NCPoly, PbwPresentation};
use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};

/// Linear map on the degree-1 space: `matrix[i][j]` is the coefficient of
/// `x_i` in the image of `x_j`.
#[derive(Clone)]
pub struct GradedMap {
    matrix: Matrix,
    validated: bool,
}

impl PartialEq for GradedMap {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for GradedMap {}

impl Hash for GradedMap {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl GradedMap {
    /// Wraps a square matrix; singular matrices are rejected.
    pub fn new(matrix: Matrix) -> Result<Self> {
        let n = matrix.len();
        if n == 0 || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("automorphism matrix must be square and nonempty"));
        }
        let order = matrix[0][0].order();
        if matrix.iter().flatten().any(|c| c.order() != order) {
            return Err(Error::invalid("matrix entries lie in different fields"));
        }
        if linalg::determinant(&matrix).is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(GradedMap {
            matrix,
            validated: false,
        })
    }

    pub fn identity(n: usize, order: u32) -> Self {
        GradedMap {
            matrix: linalg::identity(n, order),
            validated: true,
        }
    }

    pub fn diagonal(diag: &[Cyc]) -> Result<Self> {
        let n = diag.len();
        let order = diag[0].order();
        let mut m = linalg::identity(n, order);
        for (i, d) in diag.iter().enumerate() {
            m[i][i] = d.clone();
        }
        Self::new(m)
    }

    /// Weighted permutation: `x_j ↦ weights[j] · x_{perm[j]}`.
    pub fn monomial(perm: &[usize], weights: &[Cyc]) -> Result<Self> {
        let n = perm.len();
        let order = weights[0].order();
        let mut m = vec![vec![Cyc::zero(order); n]; n];
        for j in 0..n {
            m[perm[j]][j] = weights[j].clone();
        }
        Self::new(m)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn n(&self) -> usize {
        self.matrix.len()
    }

    pub fn order(&self) -> u32 {
        self.matrix[0][0].order()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Cyc {
        &self.matrix[i][j]
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.iter().enumerate().all(|(i, r)| {
            r.iter()
                .enumerate()
                .all(|(j, c)| if i == j { c.is_one() } else { c.is_zero() })
        })
    }

    pub fn is_diagonal(&self) -> bool {
        self.matrix
            .iter()
            .enumerate()
            .all(|(i, r)| r.iter().enumerate().all(|(j, c)| i == j || c.is_zero()))
    }

    /// Weighted permutation structure `(perm, weights)` when every column has
    /// exactly one nonzero entry.
    pub fn as_monomial(&self) -> Option<(Vec<usize>, Vec<Cyc>)> {
        let n = self.n();
        let mut perm = Vec::with_capacity(n);
        let mut w = Vec::with_capacity(n);
        for j in 0..n {
            let nz: Vec<usize> = (0..n).filter(|&i| !self.matrix[i][j].is_zero()).collect();
            if nz.len() != 1 {
                return None;
            }
            perm.push(nz[0]);
            w.push(self.matrix[nz[0]][j].clone());
        }
        Some((perm, w))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMap) -> GradedMap {
        GradedMap {
            matrix: linalg::mat_mul(&self.matrix, &other.matrix),
            validated: self.validated && other.validated,
        }
    }

    pub fn inverse(&self) -> GradedMap {
        GradedMap {
            matrix: linalg::inverse(&self.matrix).expect("automorphisms are invertible"),
            validated: self.validated,
        }
    }

    pub fn pow(&self, k: i64) -> GradedMap {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = GradedMap::identity(self.n(), self.order());
        acc.validated = self.validated;
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose(&base);
        }
        acc
    }

    pub fn conjugate_by(&self, g: &GradedMap) -> GradedMap {
        g.compose(self).compose(&g.inverse())
    }

    pub fn det(&self) -> Cyc {
        linalg::determinant(&self.matrix)
    }

    pub fn trace(&self) -> Cyc {
        linalg::trace(&self.matrix)
    }

    pub fn char_poly(&self) -> Vec<Cyc> {
        linalg::char_poly(&self.matrix)
    }

    /// Image of `x_j` as a degree-1 polynomial.
    pub fn image_of_var(&self, j: usize) -> NCPoly {
        let n = self.n();
        NCPoly::from_terms(
            n,
            self.order(),
            (0..n).map(|i| (Monomial::var(n, i), self.matrix[i][j].clone())),
        )
    }

    /// Image of a degree-1 element.
    pub fn apply_linear(&self, f: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero(self.n(), self.order());
        for (m, c) in f.terms() {
            let j = m.first_var().expect("degree-1 element");
            out.add_scaled(&self.image_of_var(j), c);
        }
        out
    }

    fn check_shape(&self, a: &PbwPresentation) -> Result<()> {
        if self.n() != a.nvars() {
            return Err(Error::invalid(format!(
                "matrix is {}×{} but the algebra has {} generators",
                self.n(),
                self.n(),
                a.nvars()
            )));
        }
        if self.order() != a.order() {
            return Err(Error::FieldMismatch(a.order(), self.order()));
        }
        Ok(())
    }

    /// Whether every defining relation maps to zero in degree 2.
    pub fn is_graded_automorphism(&self, a: &PbwPresentation) -> Result<bool> {
        self.check_shape(a)?;
        Ok(self.first_failed_relation(a)?.is_none())
    }

    fn first_failed_relation(&self, a: &PbwPresentation) -> Result<Option<String>> {
        let imgs: Vec<NCPoly> = (0..self.n()).map(|j| self.image_of_var(j)).collect();
        for (i, j, q, tail) in a.relations() {
            // g(x_j) g(x_i) - q g(x_i) g(x_j) - g(tail)
            let mut r = a.mul(&imgs[j], &imgs[i])?;
            r.add_scaled(&a.mul(&imgs[i], &imgs[j])?, &-q);
            for (m, c) in tail.terms() {
                let w = m.word();
                r.add_scaled(&a.mul(&imgs[w[0]], &imgs[w[1]])?, &-c);
            }
            if !r.is_zero() {
                let names = a.names();
                return Ok(Some(format!(
                    "the relation for {}{} maps to {} ≠ 0",
                    names[j],
                    names[i],
                    a.fmt_poly(&r)
                )));
            }
        }
        Ok(None)
    }

    /// Checks the relations and returns the map flagged as validated.
    pub fn validate(mut self, a: &PbwPresentation) -> Result<GradedMap> {
        self.check_shape(a)?;
        if let Some(msg) = self.first_failed_relation(a)? {
            return Err(Error::NotAutomorphism(msg));
        }
        self.validated = true;
        Ok(self)
    }

    /// Image of an arbitrary element under the induced algebra automorphism.
    pub fn apply(&self, a: &PbwPresentation, f: &NCPoly) -> Result<NCPoly> {
        GradedAction::new(a, self)?.apply(f)
    }

    /// Row-major entries for serialization.
    pub fn rows(&self) -> &Matrix {
        &self.matrix
    }

    pub fn fmt_rows(&self) -> String {
        let rows: Vec<String> = self
            .matrix
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|c| c.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

impl fmt::Debug for GradedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_rows())
    }
}

impl Serialize for GradedMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.matrix.serialize(s)
    }
}

/// A validated map acting on an algebra, memoizing monomial images.
pub struct GradedAction<'a> {
    pres: &'a PbwPresentation,
    columns: Vec<NCPoly>,
    memo: HashMap<Monomial, NCPoly>,
}

impl<'a> GradedAction<'a> {
    pub fn new(pres: &'a PbwPresentation, g: &GradedMap) -> Result<Self> {
        if !g.is_validated() {
            return Err(Error::invalid(
                "map has not been validated as a graded automorphism of this algebra",
            ));
        }
        g.check_shape(pres)?;
        Ok(GradedAction {
            pres,
            columns: (0..g.n()).map(|j| g.image_of_var(j)).collect(),
            memo: HashMap::new(),
        })
    }

    pub fn image(&mut self, m: &Monomial) -> NCPoly {
        let Some(a) = m.first_var() else {
            return self.pres.one();
        };
        if m.degree() == 1 {
            return self.columns[a].clone();
        }
        if let Some(hit) = self.memo.get(m) {
            return hit.clone();
        }
        let rest = self.image(&m.without_var(a));
        let mut out = self.pres.zero();
        for (lm, c) in self.columns[a].terms() {
            let b = lm.first_var().unwrap();
            out.add_scaled(&self.pres.left_mul_var(b, &rest), c);
        }
        self.memo.insert(m.clone(), out.clone());
        out
    }

    pub fn apply(&mut self, f: &NCPoly) -> Result<NCPoly> {
        if f.nvars() != self.pres.nvars() || f.order() != self.pres.order() {
            return Err(Error::invalid("polynomial does not belong to this algebra"));
        }
        let mut out = self.pres.zero();
        for (m, c) in f.terms() {
            out.add_scaled(&self.image(m), c);
        }
        Ok(out)
    }

    /// Trace of the action on the degree-`d` component.
    pub fn trace_degree(&mut self, d: usize) -> Cyc {
        let mut t = Cyc::zero(self.pres.order());
        for m in self.pres.basis(d) {
            let img = self.image(&m);
            t = &t + &img.coeff(&m);
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k_minus(n: usize) -> PbwPresentation {
        PbwPresentation::skew_uniform(n, Cyc::from_int(4, -1)).unwrap()
    }

    fn tau12() -> GradedMap {
        let z = Cyc::zero(4);
        let o = Cyc::one(4);
        GradedMap::new(vec![vec![z.clone(), -o.clone()], vec![o, z]]).unwrap()
    }

    #[test]
    fn tau_validates_and_acts() {
        let a = k_minus(2);
        let g = tau12().validate(&a).unwrap();
        let x1x2 = a.mul(&a.var(0), &a.var(1)).unwrap();
        assert_eq!(g.apply(&a, &x1x2).unwrap(), x1x2);
        assert!(tau12().apply(&a, &x1x2).is_err());
    }

    #[test]
    fn swap_is_not_automorphism_of_quantum_plane() {
        let w = Cyc::zeta(3, 1);
        let a = PbwPresentation::skew_uniform(2, w).unwrap();
        let swap = GradedMap::monomial(&[1, 0], &[Cyc::one(3), Cyc::one(3)]).unwrap();
        assert!(!swap.is_graded_automorphism(&a).unwrap());
        assert!(matches!(swap.validate(&a), Err(Error::NotAutomorphism(_))));
        let z = Cyc::zero(3);
        assert_eq!(
            GradedMap::new(vec![vec![z.clone(), z.clone()], vec![z.clone(), z]]),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn diagonal_action() {
        let a = k_minus(2);
        let lam = Cyc::zeta(4, 1);
        let g = GradedMap::diagonal(&[lam.clone(), Cyc::one(4)])
            .unwrap()
            .validate(&a)
            .unwrap();
        let x1sq = a.mul(&a.var(0), &a.var(0)).unwrap();
        assert_eq!(g.apply(&a, &x1sq).unwrap(), x1sq.scale(&(&lam * &lam)));
    }
}
