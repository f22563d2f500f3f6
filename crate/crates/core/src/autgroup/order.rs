use super::group::FiniteGroup;
use super::map::GradedMap;
use crate::error::{Error, Result};

/// Smallest `k ≥ 1` with `g^k = 1`, searching up to `cap`.
pub fn element_order(g: &GradedMap, cap: usize) -> Result<usize> {
    let mut p = g.clone();
    for k in 1..=cap {
        if p.is_identity() {
            return Ok(k);
        }
        p = p.compose(g);
    }
    Err(Error::OrderCapExceeded(cap))
}

/// Order of a weighted permutation matrix with `±1` weights whose
/// permutation is a single `t`-cycle (fixed points with weight 1 allowed):
/// `t` when the number of `-1` weights is even, `2t` otherwise.
pub fn monomial_cycle_order(g: &GradedMap) -> Result<usize> {
    let (perm, weights) = g
        .as_monomial()
        .ok_or_else(|| Error::invalid("not a weighted permutation matrix"))?;
    let n = perm.len();
    let mut negs = 0usize;
    for (j, w) in weights.iter().enumerate() {
        let r = w
            .as_rational()
            .and_then(|r| r.to_i64())
            .filter(|v| *v == 1 || *v == -1)
            .ok_or_else(|| Error::invalid("weights must be ±1"))?;
        if r == -1 {
            if perm[j] == j {
                return Err(Error::invalid("a fixed point carries weight -1"));
            }
            negs += 1;
        }
    }
    let moved: Vec<usize> = (0..n).filter(|&j| perm[j] != j).collect();
    let t = moved.len();
    if t == 0 {
        return Ok(1);
    }
    // the moved points must form one cycle
    let mut len = 1;
    let mut cur = perm[moved[0]];
    while cur != moved[0] {
        cur = perm[cur];
        len += 1;
    }
    if len != t {
        return Err(Error::invalid("permutation is not a single cycle"));
    }
    Ok(if negs.is_multiple_of(2) { t } else { 2 * t })
}

/// A pair `(a, b)` of element indices with `a^{2m} = 1` (order exactly 2m),
/// `b⁻¹ a b = a⁻¹`, `b² = a^m`, in a group of order `4m`.
pub fn find_dicyclic_pair(g: &FiniteGroup, m: usize) -> Option<(usize, usize)> {
    if g.order() != 4 * m {
        return None;
    }
    let cap = g.order();
    for (ia, a) in g.elements().iter().enumerate() {
        if element_order(a, cap).ok()? != 2 * m {
            continue;
        }
        let a_inv = a.inverse();
        let a_m = a.pow(m as i64);
        for (ib, b) in g.elements().iter().enumerate() {
            if b.inverse().compose(a).compose(b) == a_inv && b.compose(b) == a_m {
                return Some((ia, ib));
            }
        }
    }
    None
}

/// A pair `(a, b)` with `a` of order `m`, `b² = 1`, `b a b = a⁻¹`, in a group
/// of order `2m`.
pub fn find_dihedral_pair(g: &FiniteGroup, m: usize) -> Option<(usize, usize)> {
    if g.order() != 2 * m {
        return None;
    }
    let cap = g.order();
    for (ia, a) in g.elements().iter().enumerate() {
        if element_order(a, cap).ok()? != m {
            continue;
        }
        let a_inv = a.inverse();
        for (ib, b) in g.elements().iter().enumerate() {
            if !b.is_identity() && b.compose(b).is_identity() && b.compose(a).compose(b) == a_inv {
                return Some((ia, ib));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::Cyc;

    #[test]
    fn four_cycle_with_one_sign() {
        let o = Cyc::one(4);
        let g = GradedMap::monomial(&[1, 2, 3, 0], &[-o.clone(), o.clone(), o.clone(), o.clone()]).unwrap();
        assert_eq!(monomial_cycle_order(&g).unwrap(), 8);
        assert_eq!(element_order(&g, 100).unwrap(), 8);
        let h = GradedMap::monomial(&[1, 2, 3, 0], &[-o.clone(), -o.clone(), o.clone(), o]).unwrap();
        assert_eq!(monomial_cycle_order(&h).unwrap(), 4);
        assert_eq!(element_order(&h, 100).unwrap(), 4);
        assert_eq!(element_order(&h, 3), Err(Error::OrderCapExceeded(3)));
    }
}
