//! Degree-1 normal elements and q-commutation.

use std::collections::HashMap;

use super::monomial::Monomial;
use super::poly::NCPoly;
use super::presentation::PbwPresentation;
use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};

fn require_deg1(f: &NCPoly) -> Result<()> {
    match f.homogeneous_degree() {
        Some(1) => Ok(()),
        _ => Err(Error::invalid(format!(
            "expected a nonzero homogeneous element of degree 1, got {f}"
        ))),
    }
}

impl PbwPresentation {
    fn deg2_index(&self) -> HashMap<Monomial, usize> {
        self.basis(2).into_iter().enumerate().map(|(i, m)| (m, i)).collect()
    }

    /// Whether `x_i f ∈ f·A_1` and `f x_i ∈ A_1·f` for every generator.
    pub fn is_normal_deg1(&self, f: &NCPoly) -> Result<bool> {
        require_deg1(f)?;
        let idx = self.deg2_index();
        let mut right = Echelon::new(); // f·A_1
        let mut left = Echelon::new(); // A_1·f
        for k in 0..self.nvars() {
            right.insert(&self.right_mul_var(f, k).coordinates(&idx));
            left.insert(&self.left_mul_var(k, f).coordinates(&idx));
        }
        for i in 0..self.nvars() {
            if !right.contains(&self.left_mul_var(i, f).coordinates(&idx)) {
                return Ok(false);
            }
            if !left.contains(&self.right_mul_var(f, i).coordinates(&idx)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether every element of `span{x_k : k ∈ support}` is normal through a
    /// common linear map `σ` with `x_k x_i = σ(x_i) x_k`.
    fn coordinate_span_is_normal(&self, support: &[usize], idx: &HashMap<Monomial, usize>) -> bool {
        let n = self.nvars();
        let order = self.order();
        // unknowns: the n coefficients of y_i; equations: y_i x_k = x_k x_i for each k
        for i in 0..n {
            // stacked coordinates over k ∈ support, block offset k_pos * dim2
            let dim2 = idx.len();
            let mut cols: Vec<SparseVec> = Vec::new();
            for l in 0..n {
                let mut col: SparseVec = Vec::new();
                for (pos, &k) in support.iter().enumerate() {
                    let p = self.left_mul_var(l, &self.var(k));
                    for (r, c) in p.coordinates(idx) {
                        col.push((pos * dim2 + r, c));
                    }
                }
                cols.push(col);
            }
            let mut target: SparseVec = Vec::new();
            for (pos, &k) in support.iter().enumerate() {
                let p = self.right_mul_var(&self.var(k), i);
                for (r, c) in p.coordinates(idx) {
                    target.push((pos * dim2 + r, c));
                }
            }
            // target ∈ column span?
            let mut ech = Echelon::new();
            for c in &cols {
                ech.insert(c);
            }
            if !ech.contains(&target) {
                return false;
            }
        }
        let _ = order;
        true
    }

    /// Maximal coordinate subspaces of `A_1` consisting of normal elements
    /// (with a common normalizing map), as bases. For `O_q(M_2)` with
    /// `q ≠ ±1` this is the single space `span{x12, x21}`; for a skew ring
    /// it is one space per block.
    pub fn normal_deg1_subspaces(&self) -> Vec<Vec<NCPoly>> {
        let n = self.nvars();
        let idx = self.deg2_index();
        let mut good: Vec<u64> = Vec::new();
        // largest subsets first so maximality is a subset test
        let mut masks: Vec<u64> = (1..(1u64 << n)).collect();
        masks.sort_by_key(|m| (std::cmp::Reverse(m.count_ones()), *m));
        for mask in masks {
            if good.iter().any(|g| g & mask == mask) {
                continue;
            }
            let support: Vec<usize> = (0..n).filter(|k| mask >> k & 1 == 1).collect();
            if self.coordinate_span_is_normal(&support, &idx) {
                good.push(mask);
            }
        }
        good.sort_by_key(|m| m.trailing_zeros());
        good.into_iter()
            .map(|m| (0..n).filter(|k| m >> k & 1 == 1).map(|k| self.var(k)).collect())
            .collect()
    }

    /// The scalar `q` with `f·g = q·g·f`, when one exists.
    pub fn q_commutator(&self, f: &NCPoly, g: &NCPoly) -> Result<Option<Cyc>> {
        require_deg1(f)?;
        require_deg1(g)?;
        let fg = self.mul(f, g)?;
        let gf = self.mul(g, f)?;
        let Some((m, c)) = gf.leading() else {
            return Ok(None);
        };
        let q = &fg.coeff(m) * &c.inv()?;
        Ok((fg == gf.scale(&q)).then_some(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantum_matrix_normal_space() {
        let c = PbwPresentation::quantum_matrix(Cyc::zeta(3, 1)).unwrap();
        let spaces = c.normal_deg1_subspaces();
        assert_eq!(spaces.len(), 1);
        assert_eq!(spaces[0], vec![c.var(1), c.var(2)]);
        let f = c.var(1).add(&c.var(2).scale(&Cyc::from_int(3, 5)));
        assert!(c.is_normal_deg1(&f).unwrap());
        assert!(!c.is_normal_deg1(&c.var(0)).unwrap());
    }

    #[test]
    fn skew_normality() {
        let w = Cyc::zeta(3, 1);
        // p_12 = w, p_13 = w^2, p_23 = w: blocks are singletons
        let a = PbwPresentation::skew(3, 3, |i, j| match (i, j) {
            (0, 1) => w.clone(),
            (0, 2) => &w * &w,
            _ => w.clone(),
        })
        .unwrap();
        let spaces = a.normal_deg1_subspaces();
        assert_eq!(spaces.len(), 3);
        assert!(spaces.iter().all(|s| s.len() == 1));
        let f = a.var(0).add(&a.var(2));
        assert!(!a.is_normal_deg1(&f).unwrap());
        let q = a.q_commutator(&a.var(0), &a.var(1)).unwrap().unwrap();
        assert_eq!(q, w.inv().unwrap());
        assert!(a.q_commutator(&a.var(0), &a.zero()).is_err());
    }

    #[test]
    fn commutative_ring_is_one_block() {
        let a = PbwPresentation::commutative(3, 1);
        let spaces = a.normal_deg1_subspaces();
        assert_eq!(spaces.len(), 1);
        assert_eq!(spaces[0].len(), 3);
    }
}
