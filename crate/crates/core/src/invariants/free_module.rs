//! Free-module decomposition of `A` over `A^G` for abelian groups generated
//! by quasi-reflections, checked through the Hilbert series identity
//! `H_A(t) = (Σ_cosets t^deg) · H_{A^G}(t)`.

use serde::Serialize;

use crate::algebra::{Monomial, NCPoly, PbwPresentation};
use crate::autgroup::order::element_order;
use crate::autgroup::{FiniteGroup, GradedMap};
use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::series::{hilbert_series, molien_fixed_hilbert};
use crate::structure::{classify, QRClass};

#[derive(Clone, Debug, Serialize)]
pub struct CosetFactor {
    /// `"reflection"` or `"mystic reflection"`.
    pub kind: String,
    pub generator: GradedMap,
    pub order: usize,
    /// Degrees of the coset representatives this factor contributes.
    pub degrees: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FreeModuleReport {
    /// Common eigenbasis of `A_1`.
    pub eigenbasis: Vec<NCPoly>,
    pub factors: Vec<CosetFactor>,
    /// Coefficients of `Σ_cosets t^deg`, low to high.
    pub coset_series: Vec<u64>,
    pub hilbert: Vec<u64>,
    pub fixed_hilbert: Vec<u64>,
    pub verified_to: usize,
    /// First degree where the identity fails, if any.
    pub counterexample: Option<usize>,
}

impl FreeModuleReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Common eigenvectors of all generators, when they span `A_1` over the field.
pub fn simultaneous_eigenbasis(g: &FiniteGroup) -> Result<Option<Vec<Vec<Cyc>>>> {
    let n = g.n();
    let order = g.field_order();
    let mut spaces: Vec<Vec<Vec<Cyc>>> = vec![linalg::identity(n, order)];
    for h in g.generators() {
        let k = element_order(h, g.order().max(1))?;
        if !(order as usize).is_multiple_of(k) {
            return Ok(None);
        }
        let mut next = Vec::new();
        for w in &spaces {
            let mut found = 0;
            for j in 0..k as i64 {
                let c = Cyc::root_in_field(order, k as u32, j)?;
                // (h - c) W a = 0
                let m: Matrix = (0..n)
                    .map(|i| {
                        w.iter()
                            .map(|v| {
                                let hv: Cyc = (0..n).fold(Cyc::zero(order), |acc, l| &acc + &(h.entry(i, l) * &v[l]));
                                &hv - &(&c * &v[i])
                            })
                            .collect()
                    })
                    .collect();
                let ker = linalg::dense_kernel(&m);
                if ker.is_empty() {
                    continue;
                }
                let sub: Vec<Vec<Cyc>> = ker
                    .iter()
                    .map(|a| {
                        (0..n)
                            .map(|i| w.iter().zip(a).fold(Cyc::zero(order), |acc, (v, x)| &acc + &(&v[i] * x)))
                            .collect()
                    })
                    .collect();
                found += sub.len();
                next.push(sub);
            }
            if found != w.len() {
                return Ok(None);
            }
        }
        spaces = next;
    }
    Ok(Some(spaces.into_iter().flatten().collect()))
}

pub fn free_module_check(a: &PbwPresentation, g: &FiniteGroup, max_degree: usize) -> Result<FreeModuleReport> {
    if !g.is_abelian() {
        return Err(Error::invalid("free-module check requires an abelian group"));
    }
    let n = a.nvars();
    let order = a.order();
    let mut qr: Vec<(usize, GradedMap, QRClass)> = Vec::new();
    for h in g.elements() {
        let c = classify(a, h)?;
        if c.is_qr() {
            qr.push((element_order(h, g.order())?, h.clone(), c));
        }
    }
    // larger cyclic factors first so each eigenline or plane gets one generator
    qr.sort_by_key(|x| std::cmp::Reverse(x.0));
    let mut chosen: Vec<GradedMap> = Vec::new();
    let mut factors = Vec::new();
    let mut current = g.subgroup(&[])?;
    for (k, h, c) in &qr {
        if current.contains(h) {
            continue;
        }
        chosen.push(h.clone());
        current = g.subgroup(&chosen)?;
        factors.push(CosetFactor {
            kind: c.name().into(),
            generator: h.clone(),
            order: *k,
            degrees: if c.is_mystic() { vec![0, 1, 1, 2] } else { (0..*k).collect() },
        });
    }
    if current.order() != g.order() {
        return Err(Error::invalid("free-module check requires a group generated by quasi-reflections"));
    }
    let product: usize = factors.iter().map(|f| f.degrees.len()).product();
    if product != g.order() {
        return Err(Error::internal(format!(
            "quasi-reflection factors have orders multiplying to {product}, |G| = {}",
            g.order()
        )));
    }
    let eigen = simultaneous_eigenbasis(g)?
        .ok_or_else(|| Error::invalid("basis change required: no common eigenbasis over this field"))?;
    let eigenbasis = eigen
        .iter()
        .map(|v| {
            NCPoly::from_terms(n, order, v.iter().enumerate().map(|(i, c)| (Monomial::var(n, i), c.clone()))).monic()
        })
        .collect();

    let mut coset_series = vec![0u64; max_degree + 1];
    coset_series[0] = 1;
    for f in &factors {
        let mut next = vec![0u64; max_degree + 1];
        for (d, c) in coset_series.iter().enumerate() {
            for e in &f.degrees {
                if d + e <= max_degree {
                    next[d + e] += c;
                }
            }
        }
        coset_series = next;
    }
    let hilbert = hilbert_series(a, max_degree);
    let fixed_hilbert = molien_fixed_hilbert(a, g, max_degree)?;
    let counterexample = (0..=max_degree).find(|&d| {
        let conv: u64 = (0..=d).map(|k| coset_series[k] * fixed_hilbert[d - k]).sum();
        conv != hilbert[d]
    });
    Ok(FreeModuleReport {
        eigenbasis,
        factors,
        coset_series,
        hilbert,
        fixed_hilbert,
        verified_to: max_degree,
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgroup::constructors::{tau, theta};

    #[test]
    fn single_reflection() {
        let a = PbwPresentation::skew_uniform(2, Cyc::from_int(4, -1)).unwrap();
        let g = FiniteGroup::close(&[theta(&a, 0, &Cyc::from_int(4, -1)).unwrap()], 2, 4, 10).unwrap();
        let r = free_module_check(&a, &g, 10).unwrap();
        assert!(r.holds());
        assert_eq!(&r.coset_series[..3], &[1, 1, 0]);
    }

    #[test]
    fn single_mystic() {
        let a = PbwPresentation::skew_uniform(2, Cyc::from_int(4, -1)).unwrap();
        let g = FiniteGroup::close(&[tau(&a, 0, 1, &Cyc::one(4)).unwrap()], 2, 4, 10).unwrap();
        let r = free_module_check(&a, &g, 10).unwrap();
        assert!(r.holds());
        assert_eq!(&r.coset_series[..4], &[1, 2, 1, 0]);
        assert_eq!(r.eigenbasis.len(), 2);
    }

    #[test]
    fn rejects_non_qr() {
        let a = PbwPresentation::skew_uniform(2, Cyc::from_int(4, -1)).unwrap();
        let m = Cyc::from_int(4, -1);
        let neg = GradedMap::diagonal(&[m.clone(), m]).unwrap().validate(&a).unwrap();
        let g = FiniteGroup::close(&[neg], 2, 4, 10).unwrap();
        assert!(free_module_check(&a, &g, 4).is_err());
    }
}
