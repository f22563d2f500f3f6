//! Exact arithmetic in cyclotomic fields `Q(ζ_M)`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(M)-1}` reduced
//! modulo the `M`-th cyclotomic polynomial. Field tables (the modulus and the
//! reduced powers of `ζ`) are built once per `M` and shared.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{gcd, Rational};

/// Precomputed data for one field `Q(ζ_M)`.
#[derive(Debug)]
pub struct FieldData {
    order: u32,
    phi: usize,
    /// `ζ^k` reduced, for `k` in `0..M`, as sparse integer vectors.
    powers: Vec<Vec<(usize, i64)>>,
    /// Dense reduced `ζ^k` keyed back to `k`.
    root_index: HashMap<Vec<i64>, u32>,
}

impl FieldData {
    fn build(order: u32) -> FieldData {
        let modulus = cyclotomic_poly(order);
        let phi = modulus.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut root_index = HashMap::new();
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for k in 0..order {
            root_index.insert(cur.clone(), k);
            powers.push(
                cur.iter()
                    .enumerate()
                    .filter(|(_, c)| **c != 0)
                    .map(|(i, c)| (i, *c))
                    .collect(),
            );
            // multiply by x and reduce by the monic modulus
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..phi {
                    cur[i] -= top * modulus[i];
                }
            }
        }
        FieldData {
            order,
            phi,
            powers,
            root_index,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.phi
    }
}

/// Coefficients (low to high) of the `m`-th cyclotomic polynomial.
pub fn cyclotomic_poly(m: u32) -> Vec<i64> {
    assert!(m >= 1, "cyclotomic order must be positive");
    // x^m - 1 divided by Φ_d for every proper divisor d
    let mut p = vec![0i64; m as usize + 1];
    p[0] = -1;
    p[m as usize] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            p = exact_div_monic(&p, &cyclotomic_poly(d));
        }
    }
    p
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    let mut quot = vec![0i64; nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, dc) in den.iter().enumerate() {
                rem[k + i] -= c * dc;
            }
        }
    }
    debug_assert!(rem.iter().all(|c| *c == 0));
    quot
}

fn registry() -> &'static RwLock<HashMap<u32, Arc<FieldData>>> {
    static REG: OnceLock<RwLock<HashMap<u32, Arc<FieldData>>>> = OnceLock::new();
    REG.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Shared field tables for `Q(ζ_m)`.
pub fn field(m: u32) -> Arc<FieldData> {
    assert!(m >= 1, "cyclotomic order must be positive");
    if let Some(f) = registry().read().unwrap().get(&m) {
        return f.clone();
    }
    let built = Arc::new(FieldData::build(m));
    registry()
        .write()
        .unwrap()
        .entry(m)
        .or_insert(built)
        .clone()
}

/// An element of `Q(ζ_M)`.
#[derive(Clone)]
pub struct Cyc {
    field: Arc<FieldData>,
    coeffs: Vec<Rational>,
}

impl PartialEq for Cyc {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for Cyc {}

impl Hash for Cyc {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order.hash(state);
        self.coeffs.hash(state);
    }
}

impl Cyc {
    pub fn zero(m: u32) -> Cyc {
        let field = field(m);
        let coeffs = vec![Rational::ZERO; field.phi];
        Cyc { field, coeffs }
    }

    pub fn one(m: u32) -> Cyc {
        Cyc::from_rational(m, Rational::ONE)
    }

    pub fn from_int(m: u32, n: i64) -> Cyc {
        Cyc::from_rational(m, Rational::from_int(n))
    }

    pub fn from_rational(m: u32, r: Rational) -> Cyc {
        let mut z = Cyc::zero(m);
        z.coeffs[0] = r;
        z
    }

    /// `ζ_m^e` for any integer `e` (reduced mod `m`).
    pub fn zeta(m: u32, e: i64) -> Cyc {
        let field = field(m);
        let k = e.rem_euclid(m as i64) as usize;
        let mut coeffs = vec![Rational::ZERO; field.phi];
        for (i, c) in &field.powers[k] {
            coeffs[*i] = Rational::from_int(*c);
        }
        Cyc { field, coeffs }
    }

    /// `ζ_n^k` expressed in `Q(ζ_m)`; requires `n | m`.
    pub fn root_in_field(m: u32, n: u32, k: i64) -> Result<Cyc> {
        if n == 0 || !m.is_multiple_of(n) {
            return Err(Error::FieldTooSmall(m));
        }
        Ok(Cyc::zeta(m, k * (m / n) as i64))
    }

    /// Builds an element from power-basis coefficients, reducing any tail of
    /// length beyond `φ(m)`.
    pub fn from_coeffs(m: u32, coeffs: Vec<Rational>) -> Cyc {
        let field = field(m);
        let mut out = vec![Rational::ZERO; field.phi];
        for (k, c) in coeffs.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, p) in &field.powers[k % m as usize] {
                out[*i] = &out[*i] + &(&c * &Rational::from_int(*p));
            }
        }
        Cyc { field, coeffs: out }
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check_same(&self, other: &Cyc) -> Result<()> {
        if self.field.order != other.field.order {
            Err(Error::FieldMismatch(self.field.order, other.field.order))
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Cyc) -> Result<Cyc> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Cyc {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &Cyc) -> Result<Cyc> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Cyc {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn checked_mul(&self, other: &Cyc) -> Result<Cyc> {
        self.check_same(other)?;
        if let Some(r) = self.as_rational() {
            return Ok(other.scale(r));
        }
        if let Some(r) = other.as_rational() {
            return Ok(self.scale(r));
        }
        let phi = self.field.phi;
        let m = self.field.order as usize;
        let mut prod = vec![Rational::ZERO; 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] = &prod[i + j] + &(a * b);
            }
        }
        let mut out: Vec<Rational> = prod[..phi].to_vec();
        for (k, c) in prod.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            for (i, p) in &self.field.powers[k % m] {
                out[*i] = &out[*i] + &(c * &Rational::from_int(*p));
            }
        }
        Ok(Cyc {
            field: self.field.clone(),
            coeffs: out,
        })
    }

    pub fn checked_div(&self, other: &Cyc) -> Result<Cyc> {
        self.check_same(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn scale(&self, r: &Rational) -> Cyc {
        Cyc {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Cyc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Cyc::from_rational(self.order(), r.recip().unwrap()));
        }
        // c·(±ζ^k) has inverse c⁻¹·ζ^{-k}·(±1)
        let lead = self.coeffs.iter().find(|c| !c.is_zero()).unwrap().clone();
        let unit = self.scale(&lead.recip().unwrap());
        if let Some(e) = unit.root_exponent() {
            let m = self.order();
            return Ok(Cyc::zeta(m, -(e as i64)).scale(&lead.recip().unwrap()));
        }
        if let Some(e) = (-&unit).root_exponent() {
            let m = self.order();
            return Ok(Cyc::zeta(m, -(e as i64)).scale(&-lead.recip().unwrap()));
        }
        self.inv_by_elimination()
    }

    fn inv_by_elimination(&self) -> Result<Cyc> {
        // Solve (multiplication by self) · x = 1 over Q.
        let m = self.order();
        let phi = self.field.phi;
        let cols: Vec<Cyc> = (0..phi)
            .map(|j| self.checked_mul(&Cyc::zeta(m, j as i64)).unwrap())
            .collect();
        // augmented rows
        let mut rows: Vec<Vec<Rational>> = (0..phi)
            .map(|i| {
                let mut r: Vec<Rational> = cols.iter().map(|c| c.coeffs[i].clone()).collect();
                r.push(if i == 0 { Rational::ONE } else { Rational::ZERO });
                r
            })
            .collect();
        for col in 0..phi {
            let piv = (col..phi)
                .find(|&r| !rows[r][col].is_zero())
                .ok_or(Error::DivisionByZero)?;
            rows.swap(col, piv);
            let inv = rows[col][col].recip().unwrap();
            for x in rows[col].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..phi {
                if r != col && !rows[r][col].is_zero() {
                    let f = rows[r][col].clone();
                    for c in col..=phi {
                        let v = &rows[r][c] - &(&f * &rows[col][c]);
                        rows[r][c] = v;
                    }
                }
            }
        }
        Ok(Cyc {
            field: self.field.clone(),
            coeffs: rows.into_iter().map(|mut r| r.pop().unwrap()).collect(),
        })
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<Cyc> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Cyc::one(self.order());
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// `Some(e)` when `self = ζ_M^e` with `0 ≤ e < M`.
    pub fn root_exponent(&self) -> Option<u32> {
        let mut key = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            key.push(c.to_i64()?);
        }
        self.field.root_index.get(&key).copied()
    }

    /// Writes a root of unity as `ζ_N^e` with `N` equal to `M`, or `2M` when
    /// `M` is odd and the element is `-ζ_M^k`.
    pub fn root_exponent_extended(&self) -> Option<(u32, u32)> {
        let m = self.order();
        if let Some(e) = self.root_exponent() {
            return Some((m, e));
        }
        if m % 2 == 1 {
            if let Some(k) = (-self).root_exponent() {
                return Some((2 * m, (m + 2 * k) % (2 * m)));
            }
        }
        None
    }

    /// Multiplicative order, when the element is a root of unity.
    pub fn root_order(&self) -> Option<u32> {
        let (n, e) = self.root_exponent_extended()?;
        Some(n / gcd(n as u64, e as u64) as u32)
    }

    /// The square root `ζ_{2N}^e` of `ζ_N^e`, as an element of `Q(ζ_{2N})`.
    pub fn sqrt_root(&self) -> Result<Cyc> {
        let (n, e) = self
            .root_exponent_extended()
            .ok_or_else(|| Error::NotRootOfUnity(self.to_string()))?;
        Ok(Cyc::zeta(2 * n, e as i64))
    }

    /// The same square root branch as [`Cyc::sqrt_root`], expressed in this
    /// element's own field when it lies there.
    pub fn sqrt_root_in_field(&self) -> Result<Option<Cyc>> {
        let (n, e) = self
            .root_exponent_extended()
            .ok_or_else(|| Error::NotRootOfUnity(self.to_string()))?;
        let m = self.order();
        let g = gcd(2 * n as u64, e as u64) as u32;
        let (num, den) = (e / g, 2 * n / g);
        let ambient = if m % 2 == 1 { 2 * m } else { m };
        if ambient % den != 0 {
            return Ok(None);
        }
        Ok(Some(root_in(m, ambient, (num * (ambient / den)) as i64)))
    }

    /// Re-expresses the element in `Q(ζ_{m2})`; requires `M | m2`.
    pub fn lift(&self, m2: u32) -> Result<Cyc> {
        let m = self.order();
        if m2 == 0 || !m2.is_multiple_of(m) {
            return Err(Error::invalid(format!(
                "cannot lift from Q(ζ_{m}) to Q(ζ_{m2}): {m} does not divide {m2}"
            )));
        }
        if m2 == m {
            return Ok(self.clone());
        }
        let step = (m2 / m) as usize;
        let mut coeffs = vec![Rational::ZERO; step * (self.coeffs.len() - 1) + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * step] = c.clone();
        }
        Ok(Cyc::from_coeffs(m2, coeffs))
    }

    /// Compact serializable form.
    pub fn to_spec(&self) -> ScalarSpec {
        if let Some(r) = self.as_rational() {
            return ScalarSpec::Rational(RationalLit::Text(r.to_string()));
        }
        if let Some(e) = self.root_exponent() {
            return ScalarSpec::Zeta {
                zeta_exp: e as i64,
                order: Some(self.order()),
                coeff: None,
            };
        }
        ScalarSpec::Full {
            order: self.order(),
            coeffs: self
                .coeffs
                .iter()
                .map(|c| RationalLit::Text(c.to_string()))
                .collect(),
        }
    }
}

/// `ζ_ambient^k` expressed in `Q(ζ_m)`, where `ambient` is `m` or `2m` (m odd).
fn root_in(m: u32, ambient: u32, k: i64) -> Cyc {
    if ambient == m {
        return Cyc::zeta(m, k);
    }
    // m odd: ζ_{2m} = -ζ_m^{(m+1)/2}
    let base = -Cyc::zeta(m, m.div_ceil(2) as i64);
    base.pow(k.rem_euclid(ambient as i64)).unwrap()
}

/// `ζ_m^e` with the precondition `0 ≤ e < m` enforced.
pub fn embed_root(m: u32, e: u32) -> Result<Cyc> {
    if m == 0 || e >= m {
        return Err(Error::invalid(format!(
            "root exponent {e} out of range for order {m}"
        )));
    }
    Ok(Cyc::zeta(m, e as i64))
}

macro_rules! impl_op {
    ($tr:ident, $f:ident, $checked:ident) => {
        impl<'a> $tr<&'a Cyc> for &'a Cyc {
            type Output = Cyc;
            fn $f(self, rhs: &Cyc) -> Cyc {
                self.$checked(rhs).expect("cyclotomic field mismatch")
            }
        }
        impl $tr<Cyc> for Cyc {
            type Output = Cyc;
            fn $f(self, rhs: Cyc) -> Cyc {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyc> for Cyc {
            type Output = Cyc;
            fn $f(self, rhs: &Cyc) -> Cyc {
                (&self).$f(rhs)
            }
        }
    };
}
impl_op!(Add, add, checked_add);
impl_op!(Sub, sub, checked_sub);
impl_op!(Mul, mul, checked_mul);

impl Neg for &Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        -&self
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.order();
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let root = |e: u32| {
            if e == 1 {
                format!("ζ{m}")
            } else {
                format!("ζ{m}^{e}")
            }
        };
        if let Some(e) = self.root_exponent() {
            return write!(f, "{}", root(e));
        }
        if let Some(e) = (-self).root_exponent() {
            return write!(f, "-{}", root(e));
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write!(f, "{}", root(k as u32))?,
                (_, false) => write!(f, "{a}·{}", root(k as u32))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in Q(ζ{})", self.order())
    }
}

/// A rational literal in JSON: either a string `"p/q"` or an integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalLit {
    Int(i64),
    Text(String),
}

impl RationalLit {
    pub fn parse(&self) -> Result<Rational> {
        match self {
            RationalLit::Int(n) => Ok(Rational::from_int(*n)),
            RationalLit::Text(s) => s.parse().map_err(|e| Error::invalid(format!("{e}"))),
        }
    }
}

/// Scalar as written in input or output documents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarSpec {
    Full {
        order: u32,
        coeffs: Vec<RationalLit>,
    },
    Zeta {
        zeta_exp: i64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        order: Option<u32>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        coeff: Option<RationalLit>,
    },
    Rational(RationalLit),
}

impl ScalarSpec {
    /// Least field order this scalar needs, given the document's default order.
    pub fn required_order(&self, default_order: u32) -> u32 {
        match self {
            ScalarSpec::Full { order, .. } => *order,
            ScalarSpec::Zeta { order, .. } => order.unwrap_or(default_order),
            ScalarSpec::Rational(_) => 1,
        }
    }

    /// Evaluates into `Q(ζ_target)`. A bare `zeta_exp` refers to `ζ_{default_order}`.
    pub fn resolve(&self, default_order: u32, target: u32) -> Result<Cyc> {
        match self {
            ScalarSpec::Rational(r) => Ok(Cyc::from_rational(target, r.parse()?)),
            ScalarSpec::Zeta {
                zeta_exp,
                order,
                coeff,
            } => {
                let m = order.unwrap_or(default_order);
                if m == 0 {
                    return Err(Error::invalid("root of unity order must be positive"));
                }
                let mut z = Cyc::zeta(m, *zeta_exp).lift(target)?;
                if let Some(c) = coeff {
                    z = z.scale(&c.parse()?);
                }
                Ok(z)
            }
            ScalarSpec::Full { order, coeffs } => {
                if *order == 0 {
                    return Err(Error::invalid("field order must be positive"));
                }
                let cs = coeffs
                    .iter()
                    .map(RationalLit::parse)
                    .collect::<Result<Vec<_>>>()?;
                Cyc::from_coeffs(*order, cs).lift(target)
            }
        }
    }
}

impl Serialize for Cyc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_spec().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(9), vec![1, 0, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn basic_identities() {
        let i = Cyc::zeta(4, 1);
        assert_eq!(&i * &i, Cyc::from_int(4, -1));
        let w = Cyc::zeta(3, 1);
        assert_eq!(&(&w * &w) + &w, Cyc::from_int(3, -1));
        let z8 = Cyc::zeta(8, 1);
        let half = z8.scale(&q("1/2"));
        assert_eq!(&half + &half, z8);
    }

    #[test]
    fn mismatch_and_zero_division() {
        let a = Cyc::one(3);
        let b = Cyc::one(4);
        assert_eq!(a.checked_add(&b), Err(Error::FieldMismatch(3, 4)));
        assert_eq!(a.checked_div(&Cyc::zero(3)), Err(Error::DivisionByZero));
    }

    #[test]
    fn root_utilities() {
        assert_eq!(Cyc::zeta(4, 1).sqrt_root().unwrap(), Cyc::zeta(8, 1));
        assert_eq!(Cyc::from_int(6, -1).root_order(), Some(2));
        assert_eq!(Cyc::from_int(3, -1).root_order(), Some(2));
        assert_eq!(Cyc::zeta(3, 1).lift(12).unwrap(), Cyc::zeta(12, 4));
        assert_eq!(Cyc::from_int(5, 2).root_order(), None);
        assert!(embed_root(4, 4).is_err());
        assert!(Cyc::from_int(4, 2).sqrt_root().is_err());
    }

    #[test]
    fn sqrt_in_field_matches_branch() {
        for m in [4u32, 8, 12, 24] {
            for e in 0..m {
                let x = Cyc::zeta(m, e as i64);
                let s = x.sqrt_root().unwrap();
                match x.sqrt_root_in_field().unwrap() {
                    Some(t) => assert_eq!(t.lift(s.order()).unwrap(), s),
                    None => assert!(e % 2 == 1),
                }
            }
        }
        // odd field: ζ_3 has its square root ζ_6 = -ζ_3^2 inside Q(ζ_3)
        let w = Cyc::zeta(3, 1);
        let s = w.sqrt_root_in_field().unwrap().unwrap();
        assert_eq!(s, -Cyc::zeta(3, 2));
        assert!((-w).sqrt_root_in_field().unwrap().is_none());
    }

    #[test]
    fn inverse_general() {
        let a = Cyc::from_coeffs(12, vec![q("2"), q("1/3"), q("-1"), q("5")]);
        let b = a.inv().unwrap();
        assert!((&a * &b).is_one());
        let c = Cyc::zeta(12, 5).scale(&q("-3/7"));
        assert!((&c * &c.inv().unwrap()).is_one());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Cyc::zeta(4, 1).to_string(), "ζ4");
        assert_eq!(Cyc::zeta(4, 3).to_string(), "ζ4^3");
        assert_eq!(Cyc::from_int(4, -1).to_string(), "-1");
        assert_eq!(Cyc::from_coeffs(8, vec![q("1/2"), q("-3")]).to_string(), "1/2 - 3·ζ8");
    }

    #[test]
    fn scalar_spec_resolution() {
        let s: ScalarSpec = serde_json::from_str(r#"{"zeta_exp": 1}"#).unwrap();
        assert_eq!(s.resolve(3, 12).unwrap(), Cyc::zeta(12, 4));
        let s: ScalarSpec = serde_json::from_str(r#""-1/2""#).unwrap();
        assert_eq!(s.resolve(3, 4).unwrap(), Cyc::from_rational(4, q("-1/2")));
        let s: ScalarSpec = serde_json::from_str(r#"{"order": 4, "coeffs": ["0", 1]}"#).unwrap();
        assert_eq!(s.resolve(1, 8).unwrap(), Cyc::zeta(8, 2));
        let round = serde_json::to_string(&Cyc::zeta(8, 3)).unwrap();
        assert_eq!(round, r#"{"zeta_exp":3,"order":8}"#);
    }
}
