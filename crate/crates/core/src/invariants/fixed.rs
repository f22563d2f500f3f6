//! Reynolds operator, fixed spaces, subalgebra spans and generator mining.

use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::{Monomial, NCPoly, PbwPresentation};
use crate::autgroup::{FiniteGroup, GradedAction};
use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::linalg::{kernel, Echelon, SparseVec};
use crate::rational::Rational;

/// `(1/|G|) Σ_g g(f)`.
pub fn reynolds(a: &PbwPresentation, g: &FiniteGroup, f: &NCPoly) -> Result<NCPoly> {
    let mut sum = a.zero();
    for h in g.elements() {
        let img = GradedAction::new(a, h)?.apply(f)?;
        sum.add_scaled(&img, &Cyc::one(a.order()));
    }
    let inv = Cyc::from_rational(a.order(), Rational::new(1, g.order() as i64));
    Ok(sum.scale(&inv))
}

/// Whether every generator of `g` fixes `f`.
pub fn is_fixed(a: &PbwPresentation, g: &FiniteGroup, f: &NCPoly) -> Result<bool> {
    for h in g.generators() {
        if GradedAction::new(a, h)?.apply(f)? != *f {
            return Ok(false);
        }
    }
    Ok(true)
}

fn index_of(basis: &[Monomial]) -> HashMap<Monomial, usize> {
    basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect()
}

/// `(1/|G|) Σ_g Tr(g|_{A_d})` as an integer.
pub fn molien_coefficient(a: &PbwPresentation, g: &FiniteGroup, d: usize) -> Result<usize> {
    let mut sum = Cyc::zero(a.order());
    for h in g.elements() {
        sum = &sum + &GradedAction::new(a, h)?.trace_degree(d);
    }
    let v = sum.scale(&Rational::new(1, g.order() as i64));
    v.as_rational()
        .and_then(Rational::to_i64)
        .filter(|x| *x >= 0)
        .map(|x| x as usize)
        .ok_or_else(|| Error::internal(format!("Molien coefficient in degree {d} is {v}")))
}

/// Basis of `(A_d)^G` from the simultaneous kernel of `g - 1` over the
/// generators, without the Molien cross-check.
pub fn fixed_space_unchecked(a: &PbwPresentation, g: &FiniteGroup, d: usize) -> Result<Vec<NCPoly>> {
    let basis = a.basis(d);
    let idx = index_of(&basis);
    let mut rows: HashMap<(usize, usize), SparseVec> = HashMap::new();
    for (k, h) in g.generators().into_iter().enumerate() {
        let mut act = GradedAction::new(a, h)?;
        for (col, m) in basis.iter().enumerate() {
            let mut img = act.image(m);
            img.add_term(m.clone(), &Cyc::from_int(a.order(), -1));
            for (r, c) in img.coordinates(&idx) {
                rows.entry((k, r)).or_default().push((col, c));
            }
        }
    }
    let mut keys: Vec<(usize, usize)> = rows.keys().copied().collect();
    keys.sort_unstable();
    let rows: Vec<SparseVec> = keys.iter().map(|k| rows[k].clone()).collect();
    Ok(kernel(&rows, basis.len(), a.order())
        .into_iter()
        .map(|v| {
            NCPoly::from_terms(a.nvars(), a.order(), v.into_iter().map(|(i, c)| (basis[i].clone(), c)))
                .monic()
        })
        .collect())
}

/// Basis of `(A_d)^G`, checked against the Molien coefficient.
pub fn fixed_space_basis(a: &PbwPresentation, g: &FiniteGroup, d: usize) -> Result<Vec<NCPoly>> {
    let b = fixed_space_unchecked(a, g, d)?;
    let m = molien_coefficient(a, g, d)?;
    if b.len() != m {
        return Err(Error::internal(format!(
            "fixed space in degree {d} has dimension {} but the Molien coefficient is {m}",
            b.len()
        )));
    }
    Ok(b)
}

/// Spanning sets of the subalgebra generated by `gens`, degree by degree:
/// `span_d = Σ_g g·span_{d - deg g}`, which covers products in every order.
pub struct SubalgebraSpan<'a> {
    a: &'a PbwPresentation,
    gens: Vec<(NCPoly, usize)>,
    levels: Vec<Vec<NCPoly>>,
}

impl<'a> SubalgebraSpan<'a> {
    pub fn new(a: &'a PbwPresentation, gens: &[NCPoly]) -> Result<Self> {
        let mut g = Vec::new();
        for f in gens {
            let d = f
                .homogeneous_degree()
                .filter(|d| *d > 0)
                .ok_or_else(|| Error::invalid(format!("generator {} is not homogeneous of positive degree", a.fmt_poly(f))))?;
            g.push((f.clone(), d));
        }
        Ok(SubalgebraSpan {
            a,
            gens: g,
            levels: vec![vec![a.one()]],
        })
    }

    /// A basis of the degree-`d` part of the subalgebra.
    pub fn basis(&mut self, d: usize) -> Result<&[NCPoly]> {
        while self.levels.len() <= d {
            let k = self.levels.len();
            let idx = index_of(&self.a.basis(k));
            let mut ech = Echelon::new();
            let mut level = Vec::new();
            for (g, e) in &self.gens {
                if *e > k {
                    continue;
                }
                for s in &self.levels[k - e] {
                    let p = self.a.mul(g, s)?;
                    if ech.insert(&p.coordinates(&idx)) {
                        level.push(p);
                    }
                }
            }
            self.levels.push(level);
        }
        Ok(&self.levels[d])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeStatus {
    pub degree: usize,
    pub fixed_dim: usize,
    pub span_dim: usize,
}

impl DegreeStatus {
    pub fn deficit(&self) -> usize {
        self.fixed_dim - self.span_dim
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorSet {
    pub generators: Vec<NCPoly>,
    pub degrees: Vec<usize>,
    /// Whether each generator is needed, i.e. not in the span of products of
    /// the others at its degree.
    pub essential: Vec<bool>,
    pub verified_to: usize,
    pub status: Vec<DegreeStatus>,
    pub label: Option<String>,
}

impl GeneratorSet {
    pub fn total_deficit(&self) -> usize {
        self.status.iter().map(DegreeStatus::deficit).sum()
    }

    pub fn first_deficit(&self) -> Option<usize> {
        self.status.iter().find(|s| s.deficit() > 0).map(|s| s.degree)
    }

    pub fn essential_count(&self) -> usize {
        self.essential.iter().filter(|e| **e).count()
    }
}

fn essential_flags(a: &PbwPresentation, gens: &[NCPoly]) -> Result<Vec<bool>> {
    let mut out = Vec::new();
    for (i, f) in gens.iter().enumerate() {
        let others: Vec<NCPoly> = gens
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let d = f.homogeneous_degree().unwrap_or(0);
        let mut span = SubalgebraSpan::new(a, &others)?;
        let idx = index_of(&a.basis(d));
        let mut ech = Echelon::new();
        for p in span.basis(d)? {
            ech.insert(&p.coordinates(&idx));
        }
        out.push(!ech.contains(&f.coordinates(&idx)));
    }
    Ok(out)
}

/// Degreewise comparison of the subalgebra generated by `gens` with the
/// fixed ring through `max_degree`. Every generator must be fixed.
pub fn verify_generators(
    a: &PbwPresentation,
    g: &FiniteGroup,
    gens: &[NCPoly],
    max_degree: usize,
) -> Result<GeneratorSet> {
    for f in gens {
        if !is_fixed(a, g, f)? {
            return Err(Error::invalid(format!("{} is not fixed by the group", a.fmt_poly(f))));
        }
    }
    let mut span = SubalgebraSpan::new(a, gens)?;
    let mut status = Vec::new();
    for d in 1..=max_degree {
        status.push(DegreeStatus {
            degree: d,
            fixed_dim: fixed_space_basis(a, g, d)?.len(),
            span_dim: span.basis(d)?.len(),
        });
    }
    Ok(GeneratorSet {
        degrees: gens.iter().map(|f| f.homogeneous_degree().unwrap_or(0)).collect(),
        essential: essential_flags(a, gens)?,
        generators: gens.to_vec(),
        verified_to: max_degree,
        status,
        label: None,
    })
}

/// Degree by degree, adds the fixed basis vectors not already in the span of
/// products of earlier generators.
pub fn mine_generators(a: &PbwPresentation, g: &FiniteGroup, max_degree: usize) -> Result<GeneratorSet> {
    let mut gens: Vec<NCPoly> = Vec::new();
    let mut status = Vec::new();
    for d in 1..=max_degree {
        let fixed = fixed_space_basis(a, g, d)?;
        let idx = index_of(&a.basis(d));
        let mut ech = Echelon::new();
        for p in SubalgebraSpan::new(a, &gens)?.basis(d)? {
            ech.insert(&p.coordinates(&idx));
        }
        for f in &fixed {
            if ech.insert(&f.coordinates(&idx)) {
                gens.push(f.clone());
            }
        }
        status.push(DegreeStatus {
            degree: d,
            fixed_dim: fixed.len(),
            span_dim: ech.rank(),
        });
    }
    Ok(GeneratorSet {
        degrees: gens.iter().map(|f| f.homogeneous_degree().unwrap_or(0)).collect(),
        essential: vec![true; gens.len()],
        generators: gens,
        verified_to: max_degree,
        status,
        label: Some("mined".into()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgroup::constructors::{tau, theta};

    fn k_minus(n: usize) -> PbwPresentation {
        PbwPresentation::skew_uniform(n, Cyc::from_int(4, -1)).unwrap()
    }

    #[test]
    fn reynolds_basics() {
        let a = k_minus(2);
        let g = FiniteGroup::close(&[theta(&a, 0, &Cyc::from_int(4, -1)).unwrap()], 2, 4, 10).unwrap();
        assert!(reynolds(&a, &g, &a.var(0)).unwrap().is_zero());
        assert_eq!(reynolds(&a, &g, &a.var(1)).unwrap(), a.var(1));
    }

    #[test]
    fn mining_reflection_group() {
        let a = k_minus(2);
        let g = FiniteGroup::close(&[theta(&a, 0, &Cyc::from_int(4, -1)).unwrap()], 2, 4, 10).unwrap();
        let s = mine_generators(&a, &g, 4).unwrap();
        let x1sq = a.mul(&a.var(0), &a.var(0)).unwrap();
        assert_eq!(s.generators, vec![a.var(1), x1sq]);
        assert_eq!(s.total_deficit(), 0);
    }

    #[test]
    fn fixed_spaces_of_mystic_group() {
        let a = k_minus(2);
        let g = FiniteGroup::close(&[tau(&a, 0, 1, &Cyc::one(4)).unwrap()], 2, 4, 10).unwrap();
        assert_eq!(fixed_space_basis(&a, &g, 0).unwrap(), vec![a.one()]);
        assert!(fixed_space_basis(&a, &g, 1).unwrap().is_empty());
        assert_eq!(fixed_space_basis(&a, &g, 2).unwrap().len(), 2);
        let x12 = a.mul(&a.var(0), &a.var(1)).unwrap();
        let p = a.pow(&a.var(0), 2).unwrap().add(&a.pow(&a.var(1), 2).unwrap());
        let v = verify_generators(&a, &g, &[x12, p], 6).unwrap();
        assert_eq!(v.total_deficit(), 0);
        assert!(v.essential.iter().all(|e| *e));
    }
}
