use std::cmp::Ordering;
use std::fmt;

/// Ordered monomial `x_1^{e_1} ⋯ x_n^{e_n}`.
///
/// Ordering is by total degree, then by exponents compared from `x_n` down to
/// `x_1` (graded lexicographic with `x_1 < x_2 < … < x_n`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.exps[i] = 1;
        m
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|e| *e as usize).sum()
    }

    /// Smallest variable index occurring, `None` for the unit monomial.
    pub fn first_var(&self) -> Option<usize> {
        self.exps.iter().position(|e| *e > 0)
    }

    pub fn times_var(&self, i: usize) -> Self {
        let mut m = self.clone();
        m.exps[i] += 1;
        m
    }

    /// Removes one factor `x_i`; panics if absent.
    pub fn without_var(&self, i: usize) -> Self {
        let mut m = self.clone();
        assert!(m.exps[i] > 0, "variable not present");
        m.exps[i] -= 1;
        m
    }

    /// Exponent-wise product (the ordered monomial of the concatenation).
    pub fn product(&self, other: &Monomial) -> Self {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// The monomial written out as a word of variable indices, in order.
    pub fn word(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.degree());
        for (i, e) in self.exps.iter().enumerate() {
            for _ in 0..*e {
                w.push(i);
            }
        }
        w
    }

    /// Every ordered monomial of degree `d` in `n` variables, ascending.
    pub fn basis(n: usize, d: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u16; n];
        fn rec(i: usize, left: usize, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
            let n = cur.len();
            if i + 1 == n {
                cur[i] = left as u16;
                out.push(Monomial { exps: cur.clone() });
                return;
            }
            for e in 0..=left {
                cur[i] = e as u16;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        if n == 0 {
            if d == 0 {
                out.push(Monomial { exps: vec![] });
            }
            return out;
        }
        rec(0, d, &mut cur, &mut out);
        out.sort();
        out
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.degree() == 0 {
            return "1".to_string();
        }
        let mut s = String::new();
        for (i, e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => s.push_str(&names[i]),
                _ => s.push_str(&format!("{}^{}", names[i], e)),
            }
        }
        s
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.iter().rev().cmp(other.exps.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with(&default_names(self.nvars())))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_sizes_match_binomials() {
        for n in 1..=4usize {
            for d in 0..=8usize {
                let expect = (1..n).fold(1usize, |acc, k| acc * (d + k) / k);
                assert_eq!(Monomial::basis(n, d).len(), expect, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn term_order() {
        let x11x22 = Monomial::from_exponents(vec![1, 0, 0, 1]);
        let x12x21 = Monomial::from_exponents(vec![0, 1, 1, 0]);
        assert!(x12x21 < x11x22);
        assert!(Monomial::var(3, 0) < Monomial::var(3, 2));
        assert!(Monomial::var(3, 2) < Monomial::from_exponents(vec![2, 0, 0]));
    }
}
