//! Standard automorphisms. Indices are 0-based.

use super::map::GradedMap;
use crate::algebra::{PbwPresentation, PresentationKind};
use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::structure::blocks::{block_decomposition, part_of};

fn check_index(a: &PbwPresentation, i: usize) -> Result<()> {
    if i >= a.nvars() {
        return Err(Error::invalid(format!(
            "index {} out of range for {} generators",
            i + 1,
            a.nvars()
        )));
    }
    Ok(())
}

fn check_scalar(a: &PbwPresentation, l: &Cyc) -> Result<()> {
    if l.order() != a.order() {
        return Err(Error::FieldMismatch(a.order(), l.order()));
    }
    if l.is_zero() {
        return Err(Error::ZeroParameter("λ".into()));
    }
    Ok(())
}

/// `θ_{s,λ}`: `x_s ↦ λ x_s`, other generators fixed.
pub fn theta(a: &PbwPresentation, s: usize, lambda: &Cyc) -> Result<GradedMap> {
    check_index(a, s)?;
    check_scalar(a, lambda)?;
    if lambda.is_one() {
        return Err(Error::invalid("θ_{s,λ} requires λ ≠ 1"));
    }
    let mut d = vec![Cyc::one(a.order()); a.nvars()];
    d[s] = lambda.clone();
    GradedMap::diagonal(&d)?.validate(a)
}

/// `τ_{s,t,λ}`: `x_s ↦ λ x_t`, `x_t ↦ -λ⁻¹ x_s`, other generators fixed.
pub fn tau(a: &PbwPresentation, s: usize, t: usize, lambda: &Cyc) -> Result<GradedMap> {
    check_index(a, s)?;
    check_index(a, t)?;
    check_scalar(a, lambda)?;
    if s == t {
        return Err(Error::invalid("τ_{s,t,λ} requires s ≠ t"));
    }
    if !a.is_skew() {
        return Err(Error::invalid("τ_{s,t,λ} is defined only on skew polynomial rings"));
    }
    let minus_one = Cyc::from_int(a.order(), -1);
    if a.param(s, t) != &minus_one {
        return Err(Error::invalid(format!(
            "τ_{{{},{},λ}} requires p_{}{} = -1",
            s + 1,
            t + 1,
            s + 1,
            t + 1
        )));
    }
    for j in 0..a.nvars() {
        if j != s && j != t && a.param(s, j) != a.param(t, j) {
            return Err(Error::invalid(format!(
                "τ_{{{},{},λ}} requires p_{}{} = p_{}{}",
                s + 1,
                t + 1,
                s + 1,
                j + 1,
                t + 1,
                j + 1
            )));
        }
    }
    let mut m = linalg::identity(a.nvars(), a.order());
    m[s][s] = Cyc::zero(a.order());
    m[t][t] = Cyc::zero(a.order());
    m[t][s] = lambda.clone();
    m[s][t] = -lambda.inv()?;
    GradedMap::new(m)?.validate(a)
}

/// `s_{i,j,λ}`: `x_i ↦ λ x_i`, `x_j ↦ λ⁻¹ x_j`.
pub fn balanced_scaling(a: &PbwPresentation, i: usize, j: usize, lambda: &Cyc) -> Result<GradedMap> {
    check_index(a, i)?;
    check_index(a, j)?;
    check_scalar(a, lambda)?;
    if i == j {
        return Err(Error::invalid("s_{i,j,λ} requires i ≠ j"));
    }
    let mut d = vec![Cyc::one(a.order()); a.nvars()];
    d[i] = lambda.clone();
    d[j] = lambda.inv()?;
    GradedMap::diagonal(&d)?.validate(a)
}

/// Invertible basis change acting independently inside each block.
pub fn elementary(a: &PbwPresentation, matrix: Matrix) -> Result<GradedMap> {
    let parts = block_decomposition(a)?;
    let owner = part_of(&parts, a.nvars());
    for (i, row) in matrix.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if !c.is_zero() && owner.get(i) != owner.get(j) {
                return Err(Error::invalid(format!(
                    "elementary transformation mixes x{} and x{} from different blocks",
                    j + 1,
                    i + 1
                )));
            }
        }
    }
    GradedMap::new(matrix)?.validate(a)
}

/// Generators of `G(m, p, n)` acting on the algebra's degree-1 space:
/// `diag(ζ_m, ζ_m⁻¹)` at each adjacent pair, `diag(ζ_m^p, 1, …)` when it is
/// not the identity, and the adjacent transpositions.
pub fn classical_family(a: &PbwPresentation, m: u32, p: u32) -> Result<Vec<GradedMap>> {
    if m == 0 || p == 0 || !m.is_multiple_of(p) {
        return Err(Error::invalid("G(m,p,n) requires p | m"));
    }
    let n = a.nvars();
    let order = a.order();
    let z = Cyc::root_in_field(order, m, 1)?;
    let one = Cyc::one(order);
    let mut gens = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let mut d = vec![one.clone(); n];
        d[i] = z.clone();
        d[i + 1] = z.inv()?;
        if d.iter().any(|c| !c.is_one()) {
            gens.push(GradedMap::diagonal(&d)?.validate(a)?);
        }
    }
    let mut d = vec![one.clone(); n];
    d[0] = z.pow(p as i64)?;
    if !d[0].is_one() {
        gens.push(GradedMap::diagonal(&d)?.validate(a)?);
    }
    for i in 0..n.saturating_sub(1) {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, i + 1);
        gens.push(GradedMap::monomial(&perm, &vec![one.clone(); n])?.validate(a)?);
    }
    Ok(gens)
}

fn require_quantum_matrix(a: &PbwPresentation) -> Result<()> {
    if a.kind() != PresentationKind::QuantumMatrix {
        return Err(Error::invalid("this map is defined on O_q(M_2) only"));
    }
    Ok(())
}

/// `g_b` on `O_q(M_2)`: `x12 ↦ b x21`, `x21 ↦ b⁻¹ x12`, `x11`, `x22` fixed.
pub fn quantum_reflection(a: &PbwPresentation, b: &Cyc) -> Result<GradedMap> {
    require_quantum_matrix(a)?;
    check_scalar(a, b)?;
    let one = Cyc::one(a.order());
    GradedMap::monomial(&[0, 2, 1, 3], &[one.clone(), b.clone(), b.inv()?, one])?.validate(a)
}

/// `d_c` on `O_q(M_2)`: `x12 ↦ c x12`, `x21 ↦ c⁻¹ x21`.
pub fn quantum_diagonal(a: &PbwPresentation, c: &Cyc) -> Result<GradedMap> {
    require_quantum_matrix(a)?;
    check_scalar(a, c)?;
    let one = Cyc::one(a.order());
    GradedMap::diagonal(&[one.clone(), c.clone(), c.inv()?, one])?.validate(a)
}
