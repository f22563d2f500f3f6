//! The groups `M(n, α, β)` on `k_{-1}[x_1..x_n]`.

use super::decomposition::circle_parameters;
use crate::algebra::PbwPresentation;
use crate::autgroup::constructors::{tau, theta};
use crate::autgroup::FiniteGroup;
use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};

/// `k_{-1}[x_1..x_n]` over `Q(ζ_order)`.
pub fn minus_one_ring(n: usize, order: u32) -> Result<PbwPresentation> {
    PbwPresentation::skew_uniform(n, Cyc::from_int(order, -1))
}

/// Closure of `θ_{i,λ}` (`λ^α = 1`) and `τ_{i,j,λ}` (`λ^β = 1`), checked to
/// give back `(α, β)`.
pub fn make_m_group(a: &PbwPresentation, alpha: usize, beta: usize, cap: usize) -> Result<FiniteGroup> {
    let n = a.nvars();
    let order = a.order();
    if n < 2 {
        return Err(Error::invalid("M(n,α,β) requires n ≥ 2"));
    }
    if alpha == 0 || beta == 0 || !beta.is_multiple_of(alpha) || !beta.is_multiple_of(2) {
        return Err(Error::invalid(format!(
            "M(n,α,β) requires α | β and 2 | β, got α = {alpha}, β = {beta}"
        )));
    }
    let minus = Cyc::from_int(order, -1);
    if !a.is_skew() || (0..n).any(|i| (i + 1..n).any(|j| *a.param(i, j) != minus)) {
        return Err(Error::invalid("M(n,α,β) acts on k_{-1}[x_1..x_n]; all p_ij must be -1"));
    }
    if !(order as usize).is_multiple_of(beta) {
        return Err(Error::FieldTooSmall(order));
    }
    let mut gens = Vec::new();
    if alpha > 1 {
        let z = Cyc::root_in_field(order, alpha as u32, 1)?;
        for i in 0..n {
            gens.push(theta(a, i, &z)?);
        }
    }
    for k in 0..beta as i64 {
        let l = Cyc::root_in_field(order, beta as u32, k)?;
        for i in 0..n {
            for j in i + 1..n {
                gens.push(tau(a, i, j, &l)?);
            }
        }
    }
    let g = FiniteGroup::close(&gens, n, order, cap)?;
    let all: Vec<usize> = (0..n).collect();
    let got = circle_parameters(&g, &all)?;
    if got != (alpha, beta) {
        return Err(Error::internal(format!(
            "M({n},{alpha},{beta}) has circle parameters ({}, {})",
            got.0, got.1
        )));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgroup::order::find_dicyclic_pair;

    #[test]
    fn small_orders() {
        let a = minus_one_ring(3, 4).unwrap();
        assert_eq!(make_m_group(&a, 1, 2, 1000).unwrap().order(), 24);
        let a = minus_one_ring(2, 4).unwrap();
        let q8 = make_m_group(&a, 1, 4, 1000).unwrap();
        assert_eq!(q8.order(), 8);
        assert!(find_dicyclic_pair(&q8, 2).is_some());
    }

    #[test]
    fn preconditions() {
        let a = minus_one_ring(2, 4).unwrap();
        assert!(make_m_group(&a, 2, 3, 100).is_err());
        assert!(matches!(make_m_group(&a, 1, 8, 100), Err(Error::FieldTooSmall(4))));
        let c = PbwPresentation::commutative(2, 4);
        assert!(make_m_group(&c, 1, 2, 100).is_err());
    }
}
