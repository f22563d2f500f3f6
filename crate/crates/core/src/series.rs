//! Trace series, Hilbert series, Molien averaging and rational-form recognition.

use std::fmt;

use serde::Serialize;

use crate::algebra::PbwPresentation;
use crate::autgroup::{FiniteGroup, GradedAction, GradedMap};
use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::rational::Rational;

pub const DEFAULT_MAX_DEGREE: usize = 12;

/// Power series truncated after degree `D = coeffs.len() - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TruncSeries {
    pub coeffs: Vec<Cyc>,
}

impl TruncSeries {
    pub fn degree_bound(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficients as integers, when they all are.
    pub fn as_integers(&self) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| c.as_rational().and_then(Rational::to_i64))
            .collect()
    }

    pub fn truncate(&self, d: usize) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs[..=d.min(self.degree_bound())].to_vec(),
        }
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// `numerator / denominator` with `denominator(0) = 1`; coefficients low to high.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    pub numerator: Vec<Cyc>,
    pub denominator: Vec<Cyc>,
}

impl RationalSeries {
    pub fn new(numerator: Vec<Cyc>, denominator: Vec<Cyc>) -> Result<Self> {
        let d0 = denominator
            .first()
            .filter(|c| !c.is_zero())
            .ok_or_else(|| Error::invalid("denominator must have a nonzero constant term"))?
            .clone();
        let inv = d0.inv()?;
        Ok(RationalSeries {
            numerator: numerator.iter().map(|c| c * &inv).collect(),
            denominator: denominator.iter().map(|c| c * &inv).collect(),
        })
    }

    /// Power-series expansion through degree `d`.
    pub fn expand(&self, d: usize) -> TruncSeries {
        let order = self.denominator[0].order();
        let mut c: Vec<Cyc> = Vec::with_capacity(d + 1);
        for k in 0..=d {
            let mut v = self
                .numerator
                .get(k)
                .cloned()
                .unwrap_or_else(|| Cyc::zero(order));
            for i in 1..=k.min(self.denominator.len() - 1) {
                if !self.denominator[i].is_zero() {
                    v = &v - &(&self.denominator[i] * &c[k - i]);
                }
            }
            c.push(v);
        }
        TruncSeries { coeffs: c }
    }
}

fn poly_mul(a: &[Cyc], b: &[Cyc]) -> Vec<Cyc> {
    let order = a[0].order();
    let mut out = vec![Cyc::zero(order); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// `1 / ((1-t)^{n-1} (1-λt))`.
pub fn qr_form(n: usize, lambda: &Cyc) -> RationalSeries {
    let order = lambda.order();
    let one = Cyc::one(order);
    let mut den = vec![one.clone(), -lambda];
    for _ in 1..n {
        den = poly_mul(&den, &[one.clone(), Cyc::from_int(order, -1)]);
    }
    RationalSeries::new(vec![one], den).expect("unit constant term")
}

/// Coefficientwise comparison with the quasi-reflection form.
pub fn matches_qr_form(s: &TruncSeries, n: usize, lambda: &Cyc) -> bool {
    qr_form(n, lambda).expand(s.degree_bound()) == *s
}

/// `Tr(g|_{A_d})` for `d = 0..=max_degree`, from the monomial basis.
pub fn trace_series(a: &PbwPresentation, g: &GradedMap, max_degree: usize) -> Result<TruncSeries> {
    let mut act = GradedAction::new(a, g)?;
    Ok(TruncSeries {
        coeffs: (0..=max_degree).map(|d| act.trace_degree(d)).collect(),
    })
}

/// Hilbert series of the algebra itself (basis counts).
pub fn hilbert_series(a: &PbwPresentation, max_degree: usize) -> Vec<u64> {
    (0..=max_degree).map(|d| a.basis(d).len() as u64).collect()
}

/// `(1/|G|) Σ_h Tr(h, t)`, checked to be a series of non-negative integers.
pub fn molien_fixed_hilbert(a: &PbwPresentation, g: &FiniteGroup, max_degree: usize) -> Result<Vec<u64>> {
    let order = a.order();
    let mut sum = vec![Cyc::zero(order); max_degree + 1];
    for h in g.elements() {
        let t = trace_series(a, h, max_degree)?;
        for (s, c) in sum.iter_mut().zip(&t.coeffs) {
            *s = &*s + c;
        }
    }
    let inv = Rational::new(1, g.order() as i64);
    sum.iter()
        .enumerate()
        .map(|(d, c)| {
            let v = c.scale(&inv);
            v.as_rational()
                .and_then(Rational::to_i64)
                .filter(|x| *x >= 0)
                .map(|x| x as u64)
                .ok_or_else(|| {
                    Error::internal(format!(
                        "Molien coefficient in degree {d} is {v}, not a non-negative integer"
                    ))
                })
        })
        .collect()
}

/// Expansion of `1/∏(1 - t^{d_i})` through degree `max_degree`.
pub fn product_form_expansion(degrees: &[usize], max_degree: usize) -> Vec<i64> {
    let mut s = vec![0i64; max_degree + 1];
    s[0] = 1;
    for &d in degrees {
        for k in d..=max_degree {
            s[k] += s[k - d];
        }
    }
    s
}

/// Greedy factor peeling: returns `n` degrees `d_i` with
/// `s = 1/∏(1 - t^{d_i}) + O(t^{D+1})`, when that works.
pub fn recognize_product_form(s: &[i64], n: usize) -> Option<Vec<usize>> {
    if s.first() != Some(&1) {
        return None;
    }
    let top = s.len() - 1;
    let mut r = s.to_vec();
    let mut degrees = Vec::new();
    loop {
        let Some(d) = (1..=top).find(|&k| r[k] != 0) else {
            break;
        };
        if r[d] < 0 || degrees.len() == n {
            return None;
        }
        for k in (d..=top).rev() {
            r[k] -= r[k - d];
        }
        degrees.push(d);
    }
    if degrees.len() != n {
        return None;
    }
    (product_form_expansion(&degrees, top) == s).then_some(degrees)
}

/// `1/((1-t^2)(1-t^3)(1-t^4))`, grouping repeated factors as powers.
pub fn format_product_form(degrees: &[usize]) -> String {
    let mut sorted = degrees.to_vec();
    sorted.sort_unstable();
    let mut parts = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let d = sorted[i];
        let k = sorted[i..].iter().take_while(|x| **x == d).count();
        let base = if d == 1 { "(1-t)".to_string() } else { format!("(1-t^{d})") };
        parts.push(if k == 1 { base } else { format!("{base}^{k}") });
        i += k;
    }
    if parts.len() == 1 {
        format!("1/{}", parts[0])
    } else {
        format!("1/({})", parts.join(""))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgroup::constructors::{tau, theta};

    fn ints(order: u32, v: &[i64]) -> TruncSeries {
        TruncSeries {
            coeffs: v.iter().map(|x| Cyc::from_int(order, *x)).collect(),
        }
    }

    #[test]
    fn traces_on_quantum_plane() {
        let a = PbwPresentation::skew_uniform(2, Cyc::from_int(4, -1)).unwrap();
        let id = GradedMap::identity(2, 4);
        assert_eq!(trace_series(&a, &id, 4).unwrap(), ints(4, &[1, 2, 3, 4, 5]));
        let m1 = Cyc::from_int(4, -1);
        let th = theta(&a, 0, &m1).unwrap();
        assert_eq!(trace_series(&a, &th, 4).unwrap(), ints(4, &[1, 0, 1, 0, 1]));
        let t = tau(&a, 0, 1, &Cyc::one(4)).unwrap();
        let s = trace_series(&a, &t, 4).unwrap();
        assert_eq!(s, ints(4, &[1, 0, 1, 0, 1]));
        assert!(matches_qr_form(&s, 2, &m1));
    }

    #[test]
    fn molien_of_mystic_cyclic_group() {
        let a = PbwPresentation::skew_uniform(2, Cyc::from_int(4, -1)).unwrap();
        let t = tau(&a, 1, 0, &Cyc::one(4)).unwrap();
        let g = FiniteGroup::close(&[t], 2, 4, 100).unwrap();
        assert_eq!(g.order(), 4);
        let h = molien_fixed_hilbert(&a, &g, 4).unwrap();
        assert_eq!(h, vec![1, 0, 2, 0, 3]);
    }

    #[test]
    fn product_forms() {
        assert_eq!(recognize_product_form(&[1, 0, 2, 0, 3], 2), Some(vec![2, 2]));
        let s = product_form_expansion(&[2, 3, 4], 9);
        assert_eq!(recognize_product_form(&s, 3), Some(vec![2, 3, 4]));
        assert_eq!(recognize_product_form(&s, 2), None);
        assert_eq!(recognize_product_form(&[1, 0, 3, 0, 5, 0, 7, 0, 9], 2), None);
        assert_eq!(format_product_form(&[4, 2, 3]), "1/((1-t^2)(1-t^3)(1-t^4))");
        assert_eq!(format_product_form(&[2, 2]), "1/(1-t^2)^2");
        assert_eq!(format_product_form(&[1, 2]), "1/((1-t)(1-t^2))");
    }

    #[test]
    fn rational_expansion() {
        let o = 4;
        let r = qr_form(2, &Cyc::from_int(o, -1));
        assert_eq!(r.expand(5), ints(o, &[1, 0, 1, 0, 1, 0]));
        let r = qr_form(3, &Cyc::one(o));
        assert_eq!(r.expand(3), ints(o, &[1, 3, 6, 10]));
    }
}
