//! Quasi-reflection classification of a single automorphism.

use crate::algebra::{Monomial, NCPoly, PbwPresentation};
use crate::autgroup::order::element_order;
use crate::autgroup::{GradedMap, DEFAULT_GROUP_CAP};
use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::series::{matches_qr_form, trace_series, TruncSeries, DEFAULT_MAX_DEGREE};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QRClass {
    NotQR {
        /// Eigenvalue multiset on `A_1`, when all eigenvalues lie in the field.
        eigenvalues: Option<Vec<Cyc>>,
    },
    Reflection {
        lambda: Cyc,
        eigenvector: NCPoly,
        det: Cyc,
        /// From the classification table, not computed homologically.
        hdet: Cyc,
    },
    Mystic {
        /// Eigenvectors for `i` and `-i`.
        eigenvectors: (NCPoly, NCPoly),
        /// Anticommuting pair spanning the same plane.
        anticommuting: (NCPoly, NCPoly),
        /// `(s, t, λ)` with `s < t` when the map is `τ_{s,t,λ}` itself.
        pair: Option<(usize, usize, Cyc)>,
        det: Cyc,
        hdet: Cyc,
    },
}

impl QRClass {
    pub fn is_qr(&self) -> bool {
        !matches!(self, QRClass::NotQR { .. })
    }

    pub fn is_reflection(&self) -> bool {
        matches!(self, QRClass::Reflection { .. })
    }

    pub fn is_mystic(&self) -> bool {
        matches!(self, QRClass::Mystic { .. })
    }

    pub fn name(&self) -> &'static str {
        match self {
            QRClass::NotQR { .. } => "not a quasi-reflection",
            QRClass::Reflection { .. } => "reflection",
            QRClass::Mystic { .. } => "mystic reflection",
        }
    }

    /// The `λ` of the trace form: the eigenvalue for reflections, `-1` for
    /// mystic reflections.
    pub fn trace_lambda(&self, order: u32) -> Option<Cyc> {
        match self {
            QRClass::NotQR { .. } => None,
            QRClass::Reflection { lambda, .. } => Some(lambda.clone()),
            QRClass::Mystic { .. } => Some(Cyc::from_int(order, -1)),
        }
    }
}

pub fn classify(a: &PbwPresentation, g: &GradedMap) -> Result<QRClass> {
    classify_to_degree(a, g, DEFAULT_MAX_DEGREE)
}

fn shifted(m: &Matrix, c: &Cyc) -> Matrix {
    let mut out = m.clone();
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = &row[i] - c;
    }
    out
}

/// The eigenvector of `g` for `c`, normalized to leading coefficient 1;
/// the eigenspace must be a line.
fn eigenline(a: &PbwPresentation, g: &GradedMap, c: &Cyc) -> Result<NCPoly> {
    let ker = linalg::dense_kernel(&shifted(g.matrix(), c));
    if ker.len() != 1 {
        return Err(Error::internal(format!(
            "eigenspace for {c} has dimension {}, expected 1",
            ker.len()
        )));
    }
    let n = a.nvars();
    Ok(NCPoly::from_terms(
        n,
        a.order(),
        ker[0].iter().enumerate().map(|(i, v)| (Monomial::var(n, i), v.clone())),
    )
    .monic())
}

/// `(s, t, λ)` when `g = τ_{s,t,λ}` in the coordinate basis.
pub fn standard_tau(g: &GradedMap) -> Option<(usize, usize, Cyc)> {
    let (perm, w) = g.as_monomial()?;
    let moved: Vec<usize> = (0..perm.len()).filter(|&j| perm[j] != j).collect();
    if moved.len() != 2 {
        return None;
    }
    let (s, t) = (moved[0], moved[1]);
    if perm[s] != t || perm[t] != s {
        return None;
    }
    if (0..perm.len()).any(|j| j != s && j != t && !w[j].is_one()) {
        return None;
    }
    let minus_inv = -w[s].inv().ok()?;
    (w[t] == minus_inv).then(|| (s, t, w[s].clone()))
}

/// Eigenvalues found among the `k`-th roots of unity, when they exhaust the
/// characteristic polynomial.
fn eigenvalue_multiset(cp: &[Cyc], k: usize, order: u32) -> Option<Vec<Cyc>> {
    if k == 0 || !(order as usize).is_multiple_of(k) {
        return None;
    }
    let mut rest = cp.to_vec();
    let mut out = Vec::new();
    for j in 0..k as i64 {
        let r = Cyc::root_in_field(order, k as u32, j).ok()?;
        let (m, q) = linalg::root_multiplicity(&rest, &r);
        out.extend(std::iter::repeat_n(r, m));
        rest = q;
    }
    (rest.len() == 1).then_some(out)
}

/// Classification with the trace-form check carried out through `max_degree`.
pub fn classify_to_degree(a: &PbwPresentation, g: &GradedMap, max_degree: usize) -> Result<QRClass> {
    let n = a.nvars();
    let order = a.order();
    let one = Cyc::one(order);
    let ts: TruncSeries = trace_series(a, g, max_degree.max(1))?;
    let lambda_t = &ts.coeffs[1] - &Cyc::from_int(order, n as i64 - 1);
    let trace_form = !lambda_t.is_one() && matches_qr_form(&ts, n, &lambda_t);

    let cp = g.char_poly();
    let (m1, rest) = linalg::root_multiplicity(&cp, &one);
    let k = element_order(g, DEFAULT_GROUP_CAP)?;

    let reflection_pattern = m1 + 1 == n && rest.len() == 2;
    let mystic_pattern = n >= 2
        && m1 + 2 == n
        && k == 4
        && rest.len() == 3
        && rest[0].is_one()
        && rest[1].is_zero()
        && rest[2].is_one();

    if !trace_form {
        return Ok(QRClass::NotQR {
            eigenvalues: eigenvalue_multiset(&cp, k, order),
        });
    }
    if reflection_pattern {
        let lambda = -&rest[0];
        if lambda != lambda_t {
            return Err(Error::internal(format!(
                "trace form gives λ = {lambda_t}, eigenvalues give λ = {lambda}"
            )));
        }
        let det = g.det();
        if det != lambda {
            return Err(Error::internal(format!("reflection with λ = {lambda} has det {det}")));
        }
        let v = eigenline(a, g, &lambda)?;
        if !a.is_normal_deg1(&v)? {
            return Err(Error::internal(format!(
                "non-invariant eigenvector {} is not normal",
                a.fmt_poly(&v)
            )));
        }
        return Ok(QRClass::Reflection {
            hdet: lambda.clone(),
            lambda,
            eigenvector: v,
            det,
        });
    }
    if mystic_pattern {
        if lambda_t != -&one {
            return Err(Error::internal(format!(
                "mystic reflection with trace form λ = {lambda_t}"
            )));
        }
        if !order.is_multiple_of(4) {
            return Err(Error::FieldTooSmall(order));
        }
        let i = Cyc::root_in_field(order, 4, 1)?;
        let y = eigenline(a, g, &i)?;
        let z = eigenline(a, g, &-&i)?;
        let anticommuting = anticommuting_pair(a, &y, &z)?;
        let det = g.det();
        if !det.is_one() {
            return Err(Error::internal(format!("mystic reflection has det {det}")));
        }
        let pair = standard_tau(g);
        if let Some((s, t, _)) = &pair {
            if a.is_skew() && *a.param(*s, *t) != -&one {
                return Err(Error::internal(format!(
                    "mystic reflection on x{} and x{} with p ≠ -1",
                    s + 1,
                    t + 1
                )));
            }
        }
        return Ok(QRClass::Mystic {
            eigenvectors: (y, z),
            anticommuting,
            pair,
            det,
            hdet: -one,
        });
    }
    Err(Error::internal(format!(
        "trace series has the quasi-reflection form with λ = {lambda_t} but the eigenvalues fit neither type"
    )))
}

/// `y' = y + c z`, `z' = y - c z` with `c² = r` where `y² = r z²`; then
/// `y'z' + z'y' = 2(y² - c² z²) = 0`.
fn anticommuting_pair(a: &PbwPresentation, y: &NCPoly, z: &NCPoly) -> Result<(NCPoly, NCPoly)> {
    let y2 = a.mul(y, y)?;
    let z2 = a.mul(z, z)?;
    let (m, c) = z2
        .leading()
        .ok_or_else(|| Error::internal("square of an eigenvector vanished"))?;
    let r = &y2.coeff(m) * &c.inv()?;
    if y2 != z2.scale(&r) {
        return Err(Error::internal("eigenvector squares are not proportional"));
    }
    let c = match r.sqrt_root_in_field() {
        Ok(Some(c)) => c,
        _ => return Err(Error::FieldTooSmall(a.order())),
    };
    let cz = z.scale(&c);
    let (yp, zp) = (y.add(&cz), y.sub(&cz));
    let s = a.mul(&yp, &zp)?.add(&a.mul(&zp, &yp)?);
    if !s.is_zero() {
        return Err(Error::internal("constructed eigenvector pair does not anticommute"));
    }
    Ok((yp, zp))
}
