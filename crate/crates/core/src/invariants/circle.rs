//! Explicit fixed-ring generators for `M(n, α, β)` on `k_{-1}[x_1..x_n]`.

use super::fixed::{is_fixed, mine_generators, GeneratorSet};
use crate::algebra::{Monomial, NCPoly, PbwPresentation};
use crate::autgroup::{FiniteGroup, GradedMap};
use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::structure::make_m_group;

fn power_sum(n: usize, order: u32, e: usize) -> NCPoly {
    NCPoly::from_terms(
        n,
        order,
        (0..n).map(|i| {
            let mut exps = vec![0u16; n];
            exps[i] = e as u16;
            (Monomial::from_exponents(exps), Cyc::one(order))
        }),
    )
}

/// For `α` odd, with `2t = β/α` and `z_i = x_i^α`: `z_1⋯z_n` and the power
/// sums `Σ z_i^{2tk}`, `k = 1..n-1`. For `α` even, generators mined on
/// `k[z_1..z_n]` under the induced group, mined through `max_degree` in `x`.
pub fn circle_invariant_generators(
    a: &PbwPresentation,
    alpha: usize,
    beta: usize,
    max_degree: usize,
    cap: usize,
) -> Result<GeneratorSet> {
    let g = make_m_group(a, alpha, beta, cap)?;
    let n = a.nvars();
    let order = a.order();
    let (gens, label) = if alpha % 2 == 1 {
        let two_t = beta / alpha;
        let mut gens = vec![NCPoly::monomial(
            Monomial::from_exponents(vec![alpha as u16; n]),
            Cyc::one(order),
        )];
        for k in 1..n {
            gens.push(power_sum(n, order, alpha * two_t * k));
        }
        (gens, "explicit")
    } else {
        (mine_even_case(&g, n, order, alpha, max_degree)?, "mined (classical case)")
    };
    for f in &gens {
        if !is_fixed(a, &g, f)? {
            return Err(Error::internal(format!("{} is not fixed by M({n},{alpha},{beta})", a.fmt_poly(f))));
        }
    }
    Ok(GeneratorSet {
        degrees: gens.iter().map(|f| f.homogeneous_degree().unwrap_or(0)).collect(),
        essential: vec![true; gens.len()],
        generators: gens,
        verified_to: 0,
        status: Vec::new(),
        label: Some(label.into()),
    })
}

/// `z_i = x_i^α` are central for `α` even, so `k[z]` is commutative and the
/// induced action of a weighted permutation raises the weights to the `α`.
fn mine_even_case(g: &FiniteGroup, n: usize, order: u32, alpha: usize, max_degree: usize) -> Result<Vec<NCPoly>> {
    let b = PbwPresentation::commutative(n, order);
    let mut induced = Vec::new();
    for h in g.generators() {
        let (perm, w) = h
            .as_monomial()
            .ok_or_else(|| Error::internal("M(n,α,β) generator is not a weighted permutation"))?;
        let w: Vec<Cyc> = w.iter().map(|c| c.pow(alpha as i64)).collect::<Result<_>>()?;
        induced.push(GradedMap::monomial(&perm, &w)?.validate(&b)?);
    }
    let gb = FiniteGroup::close(&induced, n, order, g.order())?;
    let mined = mine_generators(&b, &gb, max_degree / alpha)?;
    Ok(mined
        .generators
        .iter()
        .map(|f| {
            NCPoly::from_terms(
                n,
                order,
                f.terms().iter().map(|(m, c)| {
                    let e = m.exponents().iter().map(|x| x * alpha as u16).collect();
                    (Monomial::from_exponents(e), c.clone())
                }),
            )
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::fixed::verify_generators;
    use crate::structure::minus_one_ring;

    #[test]
    fn three_variables() {
        let a = minus_one_ring(3, 4).unwrap();
        let s = circle_invariant_generators(&a, 1, 2, 12, 1000).unwrap();
        assert_eq!(s.degrees, vec![3, 2, 4]);
        let shown: Vec<String> = s.generators.iter().map(|f| a.fmt_poly(f)).collect();
        assert_eq!(shown, vec!["x1x2x3", "x1^2 + x2^2 + x3^2", "x1^4 + x2^4 + x3^4"]);
    }

    #[test]
    fn even_alpha_is_mined() {
        let a = minus_one_ring(2, 4).unwrap();
        let s = circle_invariant_generators(&a, 2, 2, 8, 1000).unwrap();
        assert_eq!(s.label.as_deref(), Some("mined (classical case)"));
        let g = make_m_group(&a, 2, 2, 1000).unwrap();
        let v = verify_generators(&a, &g, &s.generators, 8).unwrap();
        assert_eq!(v.total_deficit(), 0);
    }
}
