use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use super::monomial::{default_names, Monomial};
use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};

/// Linear combination of ordered monomials with scalars in `Q(ζ_M)`.
///
/// No zero coefficient is ever stored; the zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NCPoly {
    nvars: usize,
    order: u32,
    terms: BTreeMap<Monomial, Cyc>,
}

impl NCPoly {
    pub fn zero(nvars: usize, order: u32) -> Self {
        NCPoly {
            nvars,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize, order: u32) -> Self {
        Self::monomial(Monomial::one(nvars), Cyc::one(order))
    }

    pub fn var(nvars: usize, order: u32, i: usize) -> Self {
        Self::monomial(Monomial::var(nvars, i), Cyc::one(order))
    }

    pub fn monomial(m: Monomial, c: Cyc) -> Self {
        let mut p = NCPoly::zero(m.nvars(), c.order());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from terms, merging repeats and dropping zeros.
    pub fn from_terms(nvars: usize, order: u32, terms: impl IntoIterator<Item = (Monomial, Cyc)>) -> Self {
        let mut p = NCPoly::zero(nvars, order);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Cyc> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Cyc> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Cyc {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| Cyc::zero(self.order))
    }

    /// Common degree of all terms; `None` for zero or mixed-degree input.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree();
        it.all(|m| m.degree() == d).then_some(d)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Cyc)> {
        self.terms.iter().next_back()
    }

    /// Adds `c·m` in place.
    pub fn add_term(&mut self, m: Monomial, c: &Cyc) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = &*v + c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    /// Adds `c·other` in place.
    pub fn add_scaled(&mut self, other: &NCPoly, c: &Cyc) {
        for (m, v) in &other.terms {
            self.add_term(m.clone(), &(v * c));
        }
    }

    pub fn check_compatible(&self, other: &NCPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::invalid(format!(
                "polynomials over different presentations ({} vs {} variables)",
                self.nvars, other.nvars
            )));
        }
        if self.order != other.order {
            return Err(Error::FieldMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut r = self.clone();
        r.add_scaled(other, &Cyc::one(self.order));
        r
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        let mut r = self.clone();
        r.add_scaled(other, &Cyc::from_int(self.order, -1));
        r
    }

    pub fn scale(&self, c: &Cyc) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero(self.nvars, self.order);
        }
        NCPoly {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> NCPoly {
        self.scale(&Cyc::from_int(self.order, -1))
    }

    /// Dehomogenized coordinates against a monomial index.
    pub fn coordinates(&self, index: &std::collections::HashMap<Monomial, usize>) -> Vec<(usize, Cyc)> {
        let mut v: Vec<(usize, Cyc)> = self
            .terms
            .iter()
            .map(|(m, c)| (index[m], c.clone()))
            .collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> NCPoly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv().unwrap()),
            None => self.clone(),
        }
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mono = m.fmt_with(names);
            let is_unit = m.degree() == 0;
            let (neg, body) = coeff_text(c);
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            match (body, is_unit) {
                (None, true) => s.push('1'),
                (None, false) => s.push_str(&mono),
                (Some(b), true) => s.push_str(&b),
                (Some(b), false) => {
                    s.push_str(&b);
                    s.push('·');
                    s.push_str(&mono);
                }
            }
        }
        s
    }
}

/// Sign and magnitude text for a coefficient; `None` magnitude means 1.
fn coeff_text(c: &Cyc) -> (bool, Option<String>) {
    if let Some(r) = c.as_rational() {
        let neg = r.is_negative();
        let a = r.abs();
        return (neg, if a.is_one() { None } else { Some(a.to_string()) });
    }
    if c.root_exponent().is_some() {
        return (false, Some(c.to_string()));
    }
    let n = -c;
    if n.root_exponent().is_some() {
        return (true, Some(n.to_string()));
    }
    (false, Some(format!("({c})")))
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with(&default_names(self.nvars)))
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize)]
struct TermOut<'a> {
    exponents: &'a [u16],
    coeff: &'a Cyc,
}

impl Serialize for NCPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermOut> = self
            .terms
            .iter()
            .map(|(m, c)| TermOut {
                exponents: m.exponents(),
                coeff: c,
            })
            .collect();
        terms.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_drops_terms() {
        let x = NCPoly::var(2, 4, 0);
        let y = NCPoly::var(2, 4, 1);
        let s = x.add(&y).sub(&x);
        assert_eq!(s, y);
        assert!(x.sub(&x).is_zero());
        assert_eq!(x.sub(&x).homogeneous_degree(), None);
        assert_eq!(x.add(&y).to_string(), "x1 + x2");
        assert_eq!(x.scale(&Cyc::zeta(4, 1)).sub(&y).to_string(), "ζ4·x1 - x2");
    }
}
