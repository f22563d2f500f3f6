//! Graded twists `a * b = a·φ^{|a|}(b)` by commuting diagonal maps, one per
//! part of a p-partition.

use super::monomial::Monomial;
use super::poly::NCPoly;
use super::presentation::PbwPresentation;
use crate::autgroup::GradedMap;
use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::structure::blocks::{is_p_partition, part_of};

/// One diagonal map per part; `factors[w][i]` scales `x_i` under `φ_w`.
#[derive(Clone, Debug)]
pub struct PartitionTwist {
    parts: Vec<Vec<usize>>,
    owner: Vec<usize>,
    factors: Vec<Vec<Cyc>>,
}

impl PartitionTwist {
    pub fn new(a: &PbwPresentation, parts: Vec<Vec<usize>>, maps: &[GradedMap]) -> Result<Self> {
        if !a.is_skew() {
            return Err(Error::invalid("partition twists are defined only for skew polynomial rings"));
        }
        if !is_p_partition(a, &parts) {
            return Err(Error::invalid("grading is not a p-partition"));
        }
        if maps.len() != parts.len() {
            return Err(Error::invalid(format!(
                "expected {} twist maps, one per part, got {}",
                parts.len(),
                maps.len()
            )));
        }
        let mut factors = Vec::new();
        for (w, g) in maps.iter().enumerate() {
            if g.n() != a.nvars() || g.order() != a.order() {
                return Err(Error::invalid(format!("twist map {} has the wrong shape", w + 1)));
            }
            if !g.is_diagonal() {
                return Err(Error::invalid(format!("twist map {} is not diagonal", w + 1)));
            }
            factors.push((0..a.nvars()).map(|i| g.entry(i, i).clone()).collect());
        }
        // diagonal maps always commute with each other
        for (w, g) in maps.iter().enumerate() {
            for h in &maps[w + 1..] {
                if g.compose(h) != h.compose(g) {
                    return Err(Error::invalid("twist maps do not commute"));
                }
            }
        }
        let owner = part_of(&parts, a.nvars());
        Ok(PartitionTwist { parts, owner, factors })
    }

    /// `φ_w(x_i) = q(w, w') x_i` for `x_i` in another part `w'`, identity on
    /// the part itself. `q(w, w')` is the chosen square root of `p_{r r'}`
    /// (`r`, `r'` the smallest indices) when `r < r'`, and its inverse otherwise.
    pub fn canonical(a: &PbwPresentation, parts: Vec<Vec<usize>>) -> Result<Self> {
        if !a.is_skew() {
            return Err(Error::invalid("partition twists are defined only for skew polynomial rings"));
        }
        if !is_p_partition(a, &parts) {
            return Err(Error::invalid("grading is not a p-partition"));
        }
        let n = a.nvars();
        let reps: Vec<usize> = parts.iter().map(|p| *p.iter().min().unwrap()).collect();
        let mut q = vec![vec![Cyc::one(a.order()); parts.len()]; parts.len()];
        for w in 0..parts.len() {
            for v in w + 1..parts.len() {
                let (r, s) = (reps[w].min(reps[v]), reps[w].max(reps[v]));
                let root = a
                    .param(r, s)
                    .sqrt_root_in_field()?
                    .ok_or(Error::FieldTooSmall(a.order()))?;
                let (lo, hi) = if reps[w] < reps[v] { (w, v) } else { (v, w) };
                q[hi][lo] = root.inv()?;
                q[lo][hi] = root;
            }
        }
        let owner = part_of(&parts, n);
        let maps = (0..parts.len())
            .map(|w| {
                let d: Vec<Cyc> = (0..n).map(|i| q[w][owner[i]].clone()).collect();
                GradedMap::diagonal(&d)?.validate(a)
            })
            .collect::<Result<Vec<_>>>()?;
        PartitionTwist::new(a, parts, &maps)
    }

    /// Twist by identity maps.
    pub fn trivial(a: &PbwPresentation, parts: Vec<Vec<usize>>) -> Result<Self> {
        let maps = vec![GradedMap::identity(a.nvars(), a.order()); parts.len()];
        PartitionTwist::new(a, parts, &maps)
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    /// Scalar by which `φ_{part(s)}` multiplies `x_t`.
    pub fn factor(&self, s: usize, t: usize) -> &Cyc {
        &self.factors[self.owner[s]][t]
    }

    /// Coefficient of `φ^{|m1|}` on `m2`.
    fn coefficient(&self, m1: &Monomial, m2: &Monomial, order: u32) -> Result<Cyc> {
        let mut multideg = vec![0i64; self.parts.len()];
        for (i, e) in m1.exponents().iter().enumerate() {
            multideg[self.owner[i]] += *e as i64;
        }
        let mut c = Cyc::one(order);
        for (w, k) in multideg.iter().enumerate() {
            if *k == 0 {
                continue;
            }
            for (j, e) in m2.exponents().iter().enumerate() {
                if *e != 0 {
                    c = &c * &self.factors[w][j].pow(k * *e as i64)?;
                }
            }
        }
        Ok(c)
    }

    /// `f * g`, extended bilinearly from multihomogeneous monomials.
    pub fn multiply(&self, a: &PbwPresentation, f: &NCPoly, g: &NCPoly) -> Result<NCPoly> {
        if self.owner.len() != a.nvars() {
            return Err(Error::invalid("twist and algebra have different generator counts"));
        }
        let mut out = a.zero();
        for (m1, c1) in f.terms() {
            for (m2, c2) in g.terms() {
                let k = self.coefficient(m1, m2, a.order())?;
                out.add_scaled(&a.mul_monomials(m1, m2), &(&(c1 * c2) * &k));
            }
        }
        Ok(out)
    }

    /// Parameters of the twisted skew ring: `x_t * x_s = p'_st x_s * x_t`
    /// with `p'_st = c_ts p_st / c_st`.
    pub fn twisted_params(&self, a: &PbwPresentation) -> Result<Vec<Vec<Cyc>>> {
        let n = a.nvars();
        let mut out = vec![vec![Cyc::one(a.order()); n]; n];
        for s in 0..n {
            for t in 0..n {
                if s != t {
                    out[s][t] = &(self.factor(t, s) * a.param(s, t)) * &self.factor(s, t).inv()?;
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn singletons(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| vec![i]).collect()
    }

    #[test]
    fn full_twist_of_quantum_plane_commutes() {
        let a = PbwPresentation::skew_uniform(2, Cyc::zeta(12, 4)).unwrap();
        let t = PartitionTwist::canonical(&a, singletons(2)).unwrap();
        let (x1, x2) = (a.var(0), a.var(1));
        let l = t.multiply(&a, &x1, &x2).unwrap();
        let r = t.multiply(&a, &x2, &x1).unwrap();
        assert_eq!(l, r);
        // x1 * x2 = q_12 x1x2 with q_12² = p_12
        let c = l.coeff(&Monomial::from_exponents(vec![1, 1]));
        assert_eq!(&c * &c, *a.param(0, 1));
        let p = t.twisted_params(&a).unwrap();
        assert!(p.iter().flatten().all(Cyc::is_one));
    }

    #[test]
    fn trivial_twist_is_plain_product() {
        let a = PbwPresentation::skew_uniform(3, Cyc::from_int(4, -1)).unwrap();
        let t = PartitionTwist::trivial(&a, singletons(3)).unwrap();
        let f = a.var(0).add(&a.var(2));
        let g = a.mul(&a.var(1), &a.var(2)).unwrap();
        assert_eq!(t.multiply(&a, &f, &g).unwrap(), a.mul(&f, &g).unwrap());
    }

    #[test]
    fn circle_keeps_its_sign() {
        let a = PbwPresentation::skew_uniform(2, Cyc::from_int(4, -1)).unwrap();
        let t = PartitionTwist::canonical(&a, vec![vec![0, 1]]).unwrap();
        let l = t.multiply(&a, &a.var(0), &a.var(1)).unwrap();
        let r = t.multiply(&a, &a.var(1), &a.var(0)).unwrap();
        assert_eq!(l, r.neg());
    }

    #[test]
    fn rejects_bad_gradings() {
        let w = Cyc::zeta(12, 4);
        let a = PbwPresentation::skew(3, 12, |i, j| {
            if (i, j) == (0, 2) { w.clone() } else { Cyc::one(12) }
        })
        .unwrap();
        assert!(PartitionTwist::canonical(&a, vec![vec![0, 1], vec![2]]).is_err());
        let d = GradedMap::new(vec![
            vec![Cyc::zero(12), Cyc::one(12), Cyc::zero(12)],
            vec![Cyc::one(12), Cyc::zero(12), Cyc::zero(12)],
            vec![Cyc::zero(12), Cyc::zero(12), Cyc::one(12)],
        ])
        .unwrap();
        let id = GradedMap::identity(3, 12);
        let err = PartitionTwist::new(&a, singletons(3), &[d, id.clone(), id]).unwrap_err();
        assert!(err.to_string().contains("not diagonal"));
    }
}
