use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;

use super::monomial::{default_names, Monomial};
use super::poly::NCPoly;
use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PresentationKind {
    Skew,
    QuantumMatrix,
    General,
}

/// One input relation `x_j x_i = coeff · x_i x_j + tail` with `i < j`
/// (0-based indices).
#[derive(Debug, Clone)]
pub struct RelationSpec {
    pub i: usize,
    pub j: usize,
    pub coeff: Cyc,
    pub tail: NCPoly,
}

/// Quadratic PBW presentation with rewriting rules
/// `x_j x_i → q_ij x_i x_j + tail_ij` for every `j > i`.
pub struct PbwPresentation {
    n: usize,
    order: u32,
    kind: PresentationKind,
    names: Vec<String>,
    /// `lead[i][j]` for `i < j` is `q_ij`; the lower triangle holds inverses.
    lead: Vec<Vec<Cyc>>,
    /// Nonzero tails keyed by `(i, j)` with `i < j`.
    tails: BTreeMap<(usize, usize), NCPoly>,
    /// `lead[i][j] = ζ_M^{lead_exp[i][j]}` when every leading coefficient is a root of unity.
    lead_exp: Option<Vec<Vec<u32>>>,
    cache: RwLock<HashMap<(usize, Monomial), NCPoly>>,
}

impl fmt::Debug for PbwPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PbwPresentation")
            .field("n", &self.n)
            .field("order", &self.order)
            .field("kind", &self.kind)
            .finish()
    }
}

impl PbwPresentation {
    /// Skew polynomial ring; `p(i, j)` gives `p_ij` for `i < j` (0-based).
    pub fn skew(n: usize, order: u32, p: impl Fn(usize, usize) -> Cyc) -> Result<Self> {
        let mut rels = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let c = p(i, j);
                if c.is_zero() {
                    return Err(Error::ZeroParameter(format!("p_{}{}", i + 1, j + 1)));
                }
                rels.push(RelationSpec {
                    i,
                    j,
                    coeff: c,
                    tail: NCPoly::zero(n, order),
                });
            }
        }
        Self::build(n, order, PresentationKind::Skew, default_names(n), rels)
    }

    /// Skew ring with every `p_ij` (`i < j`) equal to `p`.
    pub fn skew_uniform(n: usize, p: Cyc) -> Result<Self> {
        let order = p.order();
        Self::skew(n, order, |_, _| p.clone())
    }

    pub fn commutative(n: usize, order: u32) -> Self {
        Self::skew(n, order, |_, _| Cyc::one(order)).expect("valid")
    }

    /// `O_q(M_2)` with generators ordered `(x11, x12, x21, x22)`.
    pub fn quantum_matrix(q: Cyc) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::ZeroParameter("q".into()));
        }
        let order = q.order();
        let one = Cyc::one(order);
        let mut tail = NCPoly::zero(4, order);
        tail.add_term(
            Monomial::from_exponents(vec![0, 1, 1, 0]),
            &(&q.inv()? - &q),
        );
        let z = NCPoly::zero(4, order);
        let rel = |i, j, coeff: &Cyc, tail: &NCPoly| RelationSpec {
            i,
            j,
            coeff: coeff.clone(),
            tail: tail.clone(),
        };
        let rels = vec![
            rel(0, 1, &q, &z),
            rel(0, 2, &q, &z),
            rel(1, 3, &q, &z),
            rel(2, 3, &q, &z),
            rel(1, 2, &one, &z),
            rel(0, 3, &one, &tail),
        ];
        let names = ["x11", "x12", "x21", "x22"].map(String::from).to_vec();
        Self::build(4, order, PresentationKind::QuantumMatrix, names, rels)
    }

    /// General quadratic presentation; must list a rule for every pair `i < j`.
    pub fn general(n: usize, order: u32, rels: Vec<RelationSpec>) -> Result<Self> {
        let p = Self::build(n, order, PresentationKind::General, default_names(n), rels)?;
        p.check_overlaps()?;
        Ok(p)
    }

    fn build(
        n: usize,
        order: u32,
        kind: PresentationKind,
        names: Vec<String>,
        rels: Vec<RelationSpec>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("a presentation needs at least one generator"));
        }
        let mut lead: Vec<Vec<Option<Cyc>>> = vec![vec![None; n]; n];
        let mut tails = BTreeMap::new();
        for r in rels {
            let (i, j) = (r.i, r.j);
            if i >= j || j >= n {
                return Err(Error::NotPbw(format!(
                    "relation indices ({}, {}) must satisfy 1 ≤ i < j ≤ {n}",
                    i + 1,
                    j + 1
                )));
            }
            if r.coeff.order() != order || r.tail.order() != order {
                return Err(Error::FieldMismatch(order, r.coeff.order()));
            }
            if r.coeff.is_zero() {
                return Err(Error::ZeroParameter(format!("q_{}{}", i + 1, j + 1)));
            }
            if lead[i][j].is_some() {
                return Err(Error::NotPbw(format!("duplicate relation for ({}, {})", i + 1, j + 1)));
            }
            let top = Monomial::var(n, i).times_var(j);
            for m in r.tail.terms().keys() {
                if m.degree() != 2 || m >= &top {
                    return Err(Error::NotPbw(format!(
                        "tail term {m} of the (x{}, x{}) rule must be quadratic and below x{}x{}",
                        j + 1,
                        i + 1,
                        i + 1,
                        j + 1
                    )));
                }
            }
            lead[j][i] = Some(r.coeff.inv()?);
            lead[i][j] = Some(r.coeff);
            if !r.tail.is_zero() {
                tails.insert((i, j), r.tail);
            }
        }
        let mut full = vec![vec![Cyc::one(order); n]; n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                full[i][j] = lead[i][j].clone().ok_or_else(|| {
                    let (a, b) = (i.min(j), i.max(j));
                    Error::NotPbw(format!("missing relation for (x{}, x{})", b + 1, a + 1))
                })?;
            }
        }
        let lead_exp = full
            .iter()
            .map(|row| row.iter().map(Cyc::root_exponent).collect::<Option<Vec<u32>>>())
            .collect::<Option<Vec<_>>>();
        Ok(PbwPresentation {
            n,
            order,
            kind,
            names,
            lead: full,
            tails,
            lead_exp,
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn kind(&self) -> PresentationKind {
        self.kind
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_skew(&self) -> bool {
        self.tails.is_empty()
    }

    /// Leading coefficient `q_ij` of `x_j x_i = q_ij x_i x_j + …`; for
    /// skew rings this is the full parameter matrix with `p_ii = 1`,
    /// `p_ji = p_ij⁻¹`.
    pub fn param(&self, i: usize, j: usize) -> &Cyc {
        &self.lead[i][j]
    }

    pub fn params(&self) -> &[Vec<Cyc>] {
        &self.lead
    }

    pub fn tail(&self, i: usize, j: usize) -> Option<&NCPoly> {
        self.tails.get(&(i.min(j), i.max(j)))
    }

    /// The defining relations `x_j x_i - q_ij x_i x_j - tail` as
    /// `(word coefficients, tail)`: returns `(i, j, q_ij, tail)` for `i < j`.
    pub fn relations(&self) -> Vec<(usize, usize, Cyc, NCPoly)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let tail = self
                    .tails
                    .get(&(i, j))
                    .cloned()
                    .unwrap_or_else(|| NCPoly::zero(self.n, self.order));
                out.push((i, j, self.lead[i][j].clone(), tail));
            }
        }
        out
    }

    pub fn zero(&self) -> NCPoly {
        NCPoly::zero(self.n, self.order)
    }

    pub fn one(&self) -> NCPoly {
        NCPoly::one(self.n, self.order)
    }

    pub fn var(&self, i: usize) -> NCPoly {
        NCPoly::var(self.n, self.order, i)
    }

    pub fn scalar(&self, c: Cyc) -> NCPoly {
        NCPoly::monomial(Monomial::one(self.n), c)
    }

    pub fn fmt_poly(&self, f: &NCPoly) -> String {
        f.fmt_with(&self.names)
    }

    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        m.fmt_with(&self.names)
    }

    fn check(&self, f: &NCPoly) -> Result<()> {
        if f.nvars() != self.n {
            return Err(Error::invalid(format!(
                "polynomial has {} variables, presentation has {}",
                f.nvars(),
                self.n
            )));
        }
        if f.order() != self.order {
            return Err(Error::FieldMismatch(self.order, f.order()));
        }
        Ok(())
    }

    /// Coefficient picked up when moving ordered `m1` past ordered `m2` in a skew ring.
    fn skew_coeff(&self, m1: &Monomial, m2: &Monomial) -> Cyc {
        let e1 = m1.exponents();
        let e2 = m2.exponents();
        if let Some(k) = &self.lead_exp {
            let mut total: u64 = 0;
            for b in 0..self.n {
                if e2[b] == 0 {
                    continue;
                }
                for a in b + 1..self.n {
                    if e1[a] != 0 {
                        total += k[b][a] as u64 * e1[a] as u64 * e2[b] as u64;
                    }
                }
            }
            return Cyc::zeta(self.order, (total % self.order as u64) as i64);
        }
        let mut c = Cyc::one(self.order);
        for b in 0..self.n {
            for a in b + 1..self.n {
                let e = e1[a] as i64 * e2[b] as i64;
                if e != 0 {
                    c = &c * &self.lead[b][a].pow(e).unwrap();
                }
            }
        }
        c
    }

    /// `x_j · m` in normal form.
    pub fn left_mul_var_monomial(&self, j: usize, m: &Monomial) -> NCPoly {
        if self.is_skew() {
            let c = self.skew_coeff(&Monomial::var(self.n, j), m);
            return NCPoly::monomial(m.times_var(j), c);
        }
        let a = match m.first_var() {
            Some(a) if a < j => a,
            _ => return NCPoly::monomial(m.times_var(j), Cyc::one(self.order)),
        };
        let key = (j, m.clone());
        if let Some(hit) = self.cache.read().unwrap().get(&key) {
            return hit.clone();
        }
        // x_j x_a m' = q_aj x_a (x_j m') + tail_aj m'
        let rest = m.without_var(a);
        let mut out = self.zero();
        let inner = self.left_mul_var_monomial(j, &rest);
        let q = &self.lead[a][j];
        for (t, c) in inner.terms() {
            out.add_scaled(&self.left_mul_var_monomial(a, t), &(c * q));
        }
        if let Some(tail) = self.tails.get(&(a, j)) {
            for (tm, c) in tail.terms() {
                let w = tm.word();
                let step = self.left_mul_var_monomial(w[1], &rest);
                for (t2, c2) in step.terms() {
                    out.add_scaled(&self.left_mul_var_monomial(w[0], t2), &(c * c2));
                }
            }
        }
        self.cache.write().unwrap().insert(key, out.clone());
        out
    }

    /// `x_j · f`.
    pub fn left_mul_var(&self, j: usize, f: &NCPoly) -> NCPoly {
        let mut out = self.zero();
        for (m, c) in f.terms() {
            out.add_scaled(&self.left_mul_var_monomial(j, m), c);
        }
        out
    }

    /// `f · x_j`.
    pub fn right_mul_var(&self, f: &NCPoly, j: usize) -> NCPoly {
        let x = self.var(j);
        self.mul(f, &x).expect("compatible")
    }

    pub fn mul_monomials(&self, m1: &Monomial, m2: &Monomial) -> NCPoly {
        if self.is_skew() {
            return NCPoly::monomial(m1.product(m2), self.skew_coeff(m1, m2));
        }
        let mut acc = NCPoly::monomial(m2.clone(), Cyc::one(self.order));
        for v in m1.word().into_iter().rev() {
            acc = self.left_mul_var(v, &acc);
        }
        acc
    }

    pub fn mul(&self, f: &NCPoly, g: &NCPoly) -> Result<NCPoly> {
        self.check(f)?;
        self.check(g)?;
        let mut out = self.zero();
        for (m1, c1) in f.terms() {
            for (m2, c2) in g.terms() {
                out.add_scaled(&self.mul_monomials(m1, m2), &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, f: &NCPoly, e: usize) -> Result<NCPoly> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// Normal form of `coeff · x_{w_1} ⋯ x_{w_k}`.
    pub fn normal_order(&self, word: &[usize], coeff: &Cyc) -> Result<NCPoly> {
        if let Some(bad) = word.iter().find(|v| **v >= self.n) {
            return Err(Error::invalid(format!("generator index {} out of range", bad + 1)));
        }
        let mut acc = self.scalar(coeff.clone());
        for &v in word.iter().rev() {
            acc = self.left_mul_var(v, &acc);
        }
        Ok(acc)
    }

    /// Ordered monomial basis of the degree-`d` component.
    pub fn basis(&self, d: usize) -> Vec<Monomial> {
        Monomial::basis(self.n, d)
    }

    /// Diamond check on every overlap `x_k x_j x_i` (`k > j > i`) using an
    /// independent word-rewriting reducer.
    pub fn check_overlaps(&self) -> Result<()> {
        let rw = WordRewriter::new(self);
        for i in 0..self.n {
            for j in i + 1..self.n {
                for k in j + 1..self.n {
                    let one = Cyc::one(self.order);
                    // rewrite x_k x_j first
                    let mut left = WordPoly::new();
                    for (w, c) in rw.rule(j, k) {
                        let mut w = w.clone();
                        w.push(i);
                        add_word(&mut left, w, &c);
                    }
                    // rewrite x_j x_i first
                    let mut right = WordPoly::new();
                    for (w, c) in rw.rule(i, j) {
                        let mut w2 = vec![k];
                        w2.extend(w);
                        add_word(&mut right, w2, &(&c * &one));
                    }
                    let a = rw.reduce(left)?;
                    let b = rw.reduce(right)?;
                    if a != b {
                        return Err(Error::NotPbw(format!(
                            "overlap x{}x{}x{} resolves to {} and {}",
                            k + 1,
                            j + 1,
                            i + 1,
                            self.fmt_poly(&a),
                            self.fmt_poly(&b)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Normal form computed by plain word rewriting, independent of the
    /// memoized multiplication.
    pub fn normal_order_by_rewriting(&self, word: &[usize], coeff: &Cyc) -> Result<NCPoly> {
        let rw = WordRewriter::new(self);
        let mut p = WordPoly::new();
        add_word(&mut p, word.to_vec(), coeff);
        rw.reduce(p)
    }
}

type WordPoly = BTreeMap<Vec<usize>, Cyc>;

fn add_word(p: &mut WordPoly, w: Vec<usize>, c: &Cyc) {
    if c.is_zero() {
        return;
    }
    match p.get_mut(&w) {
        Some(v) => {
            *v = &*v + c;
            if v.is_zero() {
                p.remove(&w);
            }
        }
        None => {
            p.insert(w, c.clone());
        }
    }
}

struct WordRewriter<'a> {
    pres: &'a PbwPresentation,
}

impl<'a> WordRewriter<'a> {
    fn new(pres: &'a PbwPresentation) -> Self {
        WordRewriter { pres }
    }

    /// Right-hand side of the rule for `x_j x_i`, `i < j`, as words.
    fn rule(&self, i: usize, j: usize) -> Vec<(Vec<usize>, Cyc)> {
        let mut out = vec![(vec![i, j], self.pres.lead[i][j].clone())];
        if let Some(t) = self.pres.tails.get(&(i, j)) {
            for (m, c) in t.terms() {
                out.push((m.word(), c.clone()));
            }
        }
        out
    }

    fn reduce(&self, mut p: WordPoly) -> Result<NCPoly> {
        let mut done = NCPoly::zero(self.pres.n, self.pres.order);
        let mut steps = 0usize;
        while let Some((w, c)) = p.pop_first() {
            match w.windows(2).position(|x| x[0] > x[1]) {
                None => {
                    let mut e = vec![0u16; self.pres.n];
                    for v in &w {
                        e[*v] += 1;
                    }
                    done.add_term(Monomial::from_exponents(e), &c);
                }
                Some(pos) => {
                    steps += 1;
                    if steps > 1_000_000 {
                        return Err(Error::NotPbw("rewriting does not terminate".into()));
                    }
                    let (j, i) = (w[pos], w[pos + 1]);
                    for (rhs, rc) in self.rule(i, j) {
                        let mut nw = w[..pos].to_vec();
                        nw.extend(rhs);
                        nw.extend_from_slice(&w[pos + 2..]);
                        add_word(&mut p, nw, &(&c * &rc));
                    }
                }
            }
        }
        Ok(done)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn skew_minus(n: usize) -> PbwPresentation {
        PbwPresentation::skew_uniform(n, Cyc::from_int(4, -1)).unwrap()
    }

    #[test]
    fn skew_normal_order() {
        let a = skew_minus(2);
        let f = a.normal_order(&[1, 0], &Cyc::one(4)).unwrap();
        assert_eq!(a.fmt_poly(&f), "-x1x2");
        let g = a.normal_order(&[0, 1], &Cyc::one(4)).unwrap();
        assert_eq!(a.fmt_poly(&g), "x1x2");
    }

    #[test]
    fn skew_products() {
        let a = skew_minus(2);
        let s = a.var(0).add(&a.var(1));
        let sq = a.mul(&s, &s).unwrap();
        assert_eq!(a.fmt_poly(&sq), "x1^2 + x2^2");
        let m = a.mul(&a.var(0), &a.var(1)).unwrap();
        let mm = a.mul(&m, &m).unwrap();
        assert_eq!(a.fmt_poly(&mm), "-x1^2x2^2");
        assert_eq!(a.mul(&s, &a.one()).unwrap(), s);
    }

    #[test]
    fn quantum_matrix_tail() {
        let q = Cyc::zeta(3, 1);
        let c = PbwPresentation::quantum_matrix(q.clone()).unwrap();
        let f = c.normal_order(&[3, 0], &Cyc::one(3)).unwrap();
        let mut expect = c.zero();
        expect.add_term(Monomial::from_exponents(vec![1, 0, 0, 1]), &Cyc::one(3));
        expect.add_term(Monomial::from_exponents(vec![0, 1, 1, 0]), &(&q.inv().unwrap() - &q));
        assert_eq!(f, expect);
        c.check_overlaps().unwrap();
    }

    #[test]
    fn rejects_bad_presentations() {
        assert!(matches!(
            PbwPresentation::skew(2, 4, |_, _| Cyc::zero(4)),
            Err(Error::ZeroParameter(_))
        ));
        // x3x1 = -x1x3, x3x2 = x2x3 + x1^2: the overlap x3x2x1 yields ±x1^3
        let n = 3;
        let one = Cyc::one(1);
        let mut rels = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut tail = NCPoly::zero(n, 1);
                if (i, j) == (1, 2) {
                    tail.add_term(Monomial::from_exponents(vec![2, 0, 0]), &one);
                }
                let coeff = if (i, j) == (0, 2) { -one.clone() } else { one.clone() };
                rels.push(RelationSpec { i, j, coeff, tail });
            }
        }
        assert!(matches!(PbwPresentation::general(n, 1, rels), Err(Error::NotPbw(_))));
    }

    #[test]
    fn general_quantum_matrix_agrees_with_builtin() {
        let q = Cyc::zeta(4, 1);
        let c = PbwPresentation::quantum_matrix(q).unwrap();
        let rels = c
            .relations()
            .into_iter()
            .map(|(i, j, coeff, tail)| RelationSpec { i, j, coeff, tail })
            .collect();
        let g = PbwPresentation::general(4, 4, rels).unwrap();
        for w in [vec![3, 2, 1, 0], vec![3, 3, 0, 0, 1], vec![2, 1, 3, 0, 2]] {
            let a = c.normal_order(&w, &Cyc::one(4)).unwrap();
            assert_eq!(a, g.normal_order(&w, &Cyc::one(4)).unwrap());
            assert_eq!(a, c.normal_order_by_rewriting(&w, &Cyc::one(4)).unwrap());
        }
    }
}
