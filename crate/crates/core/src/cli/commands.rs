//! Command dispatch. Every command returns a [`Report`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use super::report::Report;
use super::schema::Problem;
use crate::algebra::{NCPoly, PartitionTwist, PbwPresentation};
use crate::autgroup::constructors::classical_family;
use crate::autgroup::{FiniteGroup, GradedMap};
use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::invariants::{
    circle_invariant_generators, free_module_check, mine_generators, verify_generators, GeneratorSet,
};
use crate::rational::lcm;
use crate::series::{
    format_product_form, hilbert_series, matches_qr_form, molien_fixed_hilbert, recognize_product_form,
    trace_series,
};
use crate::structure::{
    block_circle_decomposition, classify, compare_order_distributions, decide_stc, make_m_group, minus_one_ring,
    PartKind, QRClass, StcReport,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupRef {
    /// `M(n, α, β)`.
    M(usize, usize, usize),
    /// `G(m, p, n)`.
    G(u32, u32, usize),
    /// The group generated by the input document.
    Input,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Classify,
    Decompose,
    DecideStc,
    Hilbert,
    Invariants,
    /// 1-based generator index.
    Trace(usize),
    FreeModule,
    CompareOrders(GroupRef, GroupRef),
    TwistCheck,
    MGroup(usize, usize, usize),
}

impl Command {
    pub fn needs_input(&self) -> bool {
        match self {
            Command::MGroup(..) => false,
            Command::CompareOrders(a, b) => *a == GroupRef::Input || *b == GroupRef::Input,
            _ => true,
        }
    }
}

fn parse_triple(s: &str, open: &str) -> Option<(usize, usize, usize)> {
    let inner = s.strip_prefix(open)?.strip_suffix(')')?;
    let v: Vec<usize> = inner.split(',').map(|x| x.trim().parse().ok()).collect::<Option<_>>()?;
    (v.len() == 3).then(|| (v[0], v[1], v[2]))
}

impl FromStr for GroupRef {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "input" {
            return Ok(GroupRef::Input);
        }
        if let Some((n, a, b)) = parse_triple(s, "M(") {
            return Ok(GroupRef::M(n, a, b));
        }
        if let Some((m, p, n)) = parse_triple(s, "G(") {
            return Ok(GroupRef::G(m as u32, p as u32, n));
        }
        Err(Error::invalid(format!(
            "unknown group {s:?}; use M(n,α,β), G(m,p,n) or input"
        )))
    }
}

impl fmt::Display for GroupRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupRef::M(n, a, b) => write!(f, "M({n},{a},{b})"),
            GroupRef::G(m, p, n) => write!(f, "G({m},{p},{n})"),
            GroupRef::Input => write!(f, "input"),
        }
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let words: Vec<&str> = s.split_whitespace().collect();
        let bad = || Error::invalid(format!("cannot parse command {s:?}"));
        let num = |w: &str| w.parse::<usize>().map_err(|_| bad());
        Ok(match words.as_slice() {
            ["classify"] => Command::Classify,
            ["decompose"] => Command::Decompose,
            ["decide-stc"] => Command::DecideStc,
            ["hilbert"] => Command::Hilbert,
            ["invariants"] => Command::Invariants,
            ["free-module"] => Command::FreeModule,
            ["twist-check"] => Command::TwistCheck,
            ["trace", g] => {
                let k = g.strip_prefix("g=").ok_or_else(bad)?;
                Command::Trace(num(k)?)
            }
            ["compare-orders", a, b] => Command::CompareOrders(a.parse()?, b.parse()?),
            ["mgroup", n, a, b] => Command::MGroup(num(n)?, num(a)?, num(b)?),
            _ => return Err(bad()),
        })
    }
}

/// Shared settings for a run.
pub struct Context {
    pub problem: Option<Problem>,
    pub max_degree: usize,
    pub max_order: usize,
}

impl Context {
    fn problem(&self) -> Result<&Problem> {
        self.problem
            .as_ref()
            .ok_or_else(|| Error::invalid("this command needs an input document"))
    }

    fn group(&self) -> Result<FiniteGroup> {
        let p = self.problem()?;
        FiniteGroup::close(&p.generators, p.algebra.nvars(), p.order, self.max_order)
    }
}

fn poly_text(a: &PbwPresentation, f: &NCPoly) -> Value {
    a.fmt_poly(f).into()
}

fn matrix_text(g: &GradedMap) -> Value {
    g.matrix()
        .iter()
        .map(|r| format!("[{}]", r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")))
        .collect::<Vec<_>>()
        .into()
}

fn word_text(g: &FiniteGroup, i: usize) -> String {
    let w = g.word(i);
    if w.is_empty() {
        "1".into()
    } else {
        w.iter().map(|k| format!("g{}", k + 1)).collect::<Vec<_>>().join("·")
    }
}

fn class_json(a: &PbwPresentation, c: &QRClass) -> Value {
    match c {
        QRClass::NotQR { eigenvalues } => json!({
            "class": c.name(),
            "eigenvalues": eigenvalues.as_ref().map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
        }),
        QRClass::Reflection { lambda, eigenvector, det, hdet } => json!({
            "class": c.name(),
            "lambda": lambda.to_string(),
            "det": det.to_string(),
            "hdet (from classification)": hdet.to_string(),
            "non-invariant eigenvector": poly_text(a, eigenvector),
        }),
        QRClass::Mystic { eigenvectors, anticommuting, pair, det, hdet } => json!({
            "class": c.name(),
            "det": det.to_string(),
            "hdet (from classification)": hdet.to_string(),
            "eigenvectors (i, -i)": [poly_text(a, &eigenvectors.0), poly_text(a, &eigenvectors.1)],
            "anticommuting pair": [poly_text(a, &anticommuting.0), poly_text(a, &anticommuting.1)],
            "standard pair": pair.as_ref().map(|(s, t, l)| format!("({},{}) with λ = {l}", s + 1, t + 1)),
        }),
    }
}

fn distribution_json(d: &BTreeMap<usize, usize>) -> Value {
    let mut m = serde_json::Map::new();
    for (k, v) in d {
        m.insert(k.to_string(), (*v).into());
    }
    Value::Object(m)
}

fn generator_set_json(a: &PbwPresentation, s: &GeneratorSet) -> Value {
    json!({
        "generators": s.generators.iter().zip(&s.degrees).zip(&s.essential).map(|((f, d), e)| json!({
            "polynomial": poly_text(a, f),
            "degree": d,
            "essential": e,
        })).collect::<Vec<_>>(),
        "essential generators": s.essential_count(),
        "degrees (fixed dim / span dim)": s.status.iter()
            .map(|st| format!("{}: {}/{}", st.degree, st.fixed_dim, st.span_dim))
            .collect::<Vec<_>>(),
        "total deficit": s.total_deficit(),
        "first deficit degree": s.first_deficit(),
    })
}

fn stc_verdict(r: &StcReport) -> String {
    if r.generated_by_qr {
        match r.structure_string() {
            Some(s) => format!("generated by quasi-reflections: yes; {s}; |G| = {}", r.group_order),
            None => format!("generated by quasi-reflections: yes; |G| = {}", r.group_order),
        }
    } else {
        format!(
            "generated by quasi-reflections: no; |R| = {}; |G| = {}",
            r.qr_subgroup.order(),
            r.group_order
        )
    }
}

fn stc_fields(rep: &mut Report, r: &StcReport) {
    rep.set("verdict", stc_verdict(r));
    rep.set("group order", r.group_order);
    rep.set("quasi-reflection subgroup order", r.qr_subgroup.order());
    rep.set("generated by quasi-reflections", r.generated_by_qr);
    rep.set("reflections", r.reflections());
    rep.set("mystic reflections", r.mystic_reflections());
    rep.set(
        "fixed ring has finite global dimension",
        match r.finite_global_dimension {
            Some(true) => "yes",
            Some(false) => "no",
            None => "undetermined",
        },
    );
    rep.set("structure", r.structure_string());
}

fn series_fields(rep: &mut Report, h: &[u64], n: usize) {
    let s: Vec<i64> = h.iter().map(|x| *x as i64).collect();
    rep.set("fixed ring Hilbert series", h.to_vec());
    match recognize_product_form(&s, n) {
        Some(d) => {
            rep.set("product form", format_product_form(&d));
            rep.set("generator degrees", d);
        }
        None => {
            rep.set("product form", Value::Null);
        }
    }
}

fn build_group(r: &GroupRef, ctx: &Context) -> Result<(FiniteGroup, u32)> {
    match r {
        GroupRef::Input => {
            let p = ctx.problem()?;
            Ok((ctx.group()?, p.order))
        }
        GroupRef::M(n, a, b) => {
            let order = lcm(*b as u64, 4) as u32;
            let ring = minus_one_ring(*n, order)?;
            Ok((make_m_group(&ring, *a, *b, ctx.max_order)?, order))
        }
        GroupRef::G(m, p, n) => {
            let order = lcm(*m as u64, 4) as u32;
            let ring = PbwPresentation::commutative(*n, order);
            let gens = classical_family(&ring, *m, *p)?;
            Ok((FiniteGroup::close(&gens, *n, order, ctx.max_order)?, order))
        }
    }
}

pub fn run_command(ctx: &Context, cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Classify => classify_cmd(ctx),
        Command::Decompose => decompose_cmd(ctx),
        Command::DecideStc => {
            let p = ctx.problem()?;
            let g = ctx.group()?;
            let r = decide_stc(&p.algebra, &g)?;
            let mut rep = Report::new("decide-stc", p.order);
            stc_fields(&mut rep, &r);
            if let Some(d) = &r.decomposition {
                rep.set("partition", parts_json(d));
            }
            Ok(rep)
        }
        Command::Hilbert => {
            let p = ctx.problem()?;
            let g = ctx.group()?;
            let h = molien_fixed_hilbert(&p.algebra, &g, ctx.max_degree)?;
            let mut rep = Report::new("hilbert", p.order);
            rep.verified_to = Some(ctx.max_degree);
            rep.set("group order", g.order());
            rep.set("Hilbert series of A", hilbert_series(&p.algebra, ctx.max_degree));
            series_fields(&mut rep, &h, p.algebra.nvars());
            Ok(rep)
        }
        Command::Invariants => {
            let p = ctx.problem()?;
            let g = ctx.group()?;
            let mut rep = Report::new("invariants", p.order);
            rep.verified_to = Some(ctx.max_degree);
            let (mode, s) = match &p.invariants {
                Some(c) => ("verification", verify_generators(&p.algebra, &g, c, ctx.max_degree)?),
                None => ("mining", mine_generators(&p.algebra, &g, ctx.max_degree)?),
            };
            rep.set("mode", mode);
            rep.set("group order", g.order());
            rep.set(
                "verdict",
                match s.first_deficit() {
                    None => format!("generators span the fixed ring through degree {}", ctx.max_degree),
                    Some(d) => format!("deficit first appears in degree {d}"),
                },
            );
            if let Value::Object(m) = generator_set_json(&p.algebra, &s) {
                rep.body.extend(m);
            }
            Ok(rep)
        }
        Command::Trace(k) => {
            let p = ctx.problem()?;
            let g = p
                .generators
                .get(k.wrapping_sub(1))
                .ok_or_else(|| Error::invalid(format!("no generator g{k}; the input has {}", p.generators.len())))?;
            let n = p.algebra.nvars();
            let ts = trace_series(&p.algebra, g, ctx.max_degree)?;
            let lambda = &ts.coeffs[1] - &Cyc::from_int(p.order, n as i64 - 1);
            let qr = !lambda.is_one() && matches_qr_form(&ts, n, &lambda);
            let mut rep = Report::new(format!("trace g={k}"), p.order);
            rep.verified_to = Some(ctx.max_degree);
            rep.set("trace series", ts.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>());
            rep.set(
                "matched form",
                if qr {
                    Value::from(format!("1/((1-t)^{}(1-λt)) with λ = {lambda}", n - 1))
                } else {
                    Value::Null
                },
            );
            rep.set("quasi-reflection", qr);
            Ok(rep)
        }
        Command::FreeModule => {
            let p = ctx.problem()?;
            let g = ctx.group()?;
            let r = free_module_check(&p.algebra, &g, ctx.max_degree)?;
            let mut rep = Report::new("free-module", p.order);
            rep.verified_to = Some(ctx.max_degree);
            rep.set("identity holds", r.holds());
            rep.set("common eigenbasis", r.eigenbasis.iter().map(|f| poly_text(&p.algebra, f)).collect::<Vec<_>>());
            rep.set(
                "factors",
                r.factors
                    .iter()
                    .map(|f| json!({"kind": f.kind, "order": f.order, "coset degrees": f.degrees}))
                    .collect::<Vec<_>>(),
            );
            rep.set("coset series", r.coset_series.clone());
            rep.set("Hilbert series of A", r.hilbert.clone());
            rep.set("fixed ring Hilbert series", r.fixed_hilbert.clone());
            rep.set("counterexample degree", r.counterexample);
            Ok(rep)
        }
        Command::CompareOrders(x, y) => {
            let (g, o1) = build_group(x, ctx)?;
            let (h, o2) = build_group(y, ctx)?;
            let (a, b, first) = compare_order_distributions(&g, &h)?;
            let mut rep = Report::new(format!("compare-orders {x} {y}"), lcm(o1 as u64, o2 as u64) as u32);
            let rel = if g.order() == h.order() { "=" } else { "≠" };
            let tail = match first {
                Some(k) => format!("distributions differ at element order {k}"),
                None => "distributions agree".into(),
            };
            rep.set("verdict", format!("orders {} {rel} {}; {tail}", g.order(), h.order()));
            rep.set(&format!("{x} order"), g.order());
            rep.set(&format!("{y} order"), h.order());
            rep.set(&format!("{x} distribution"), distribution_json(&a));
            rep.set(&format!("{y} distribution"), distribution_json(&b));
            rep.set("first differing order", first);
            let keys: std::collections::BTreeSet<usize> = a.keys().chain(b.keys()).copied().collect();
            rep.set(
                "differing orders",
                keys.into_iter().filter(|k| a.get(k) != b.get(k)).collect::<Vec<_>>(),
            );
            Ok(rep)
        }
        Command::TwistCheck => twist_cmd(ctx),
        Command::MGroup(n, al, be) => mgroup_cmd(ctx, *n, *al, *be),
    }
}

fn classify_cmd(ctx: &Context) -> Result<Report> {
    let p = ctx.problem()?;
    let a = &p.algebra;
    let mut rep = Report::new("classify", p.order);
    rep.verified_to = Some(crate::series::DEFAULT_MAX_DEGREE);
    let mut gens = Vec::new();
    for (k, g) in p.generators.iter().enumerate() {
        let mut v = class_json(a, &classify(a, g)?);
        if let Value::Object(m) = &mut v {
            m.insert("generator".into(), format!("g{}", k + 1).into());
            m.insert("matrix".into(), matrix_text(g));
        }
        gens.push(v);
    }
    rep.set("generators", gens);
    let g = ctx.group()?;
    let mut qr = Vec::new();
    let (mut refl, mut myst) = (0, 0);
    for (i, h) in g.elements().iter().enumerate() {
        let c = classify(a, h)?;
        if !c.is_qr() {
            continue;
        }
        if c.is_reflection() {
            refl += 1;
        } else {
            myst += 1;
        }
        qr.push(json!({
            "element": word_text(&g, i),
            "class": c.name(),
            "lambda": c.trace_lambda(p.order).map(|l| l.to_string()),
        }));
    }
    rep.set("group order", g.order());
    rep.set("reflections", refl);
    rep.set("mystic reflections", myst);
    rep.set("not quasi-reflections", g.order() - refl - myst);
    rep.set("quasi-reflections", qr);
    Ok(rep)
}

fn parts_json(d: &crate::structure::BlockCircleDecomp) -> Value {
    d.parts
        .iter()
        .map(|part| {
            json!({
                "indices": part.indices.iter().map(|i| i + 1).collect::<Vec<_>>(),
                "kind": match part.kind { PartKind::Block => "block", PartKind::Circle => "circle" },
                "part group order": part.group.order(),
                "alpha": part.circle_params.map(|x| x.0),
                "beta": part.circle_params.map(|x| x.1),
            })
        })
        .collect::<Vec<_>>()
        .into()
}

fn decompose_cmd(ctx: &Context) -> Result<Report> {
    let p = ctx.problem()?;
    let g = ctx.group()?;
    let d = block_circle_decomposition(&p.algebra, &g)?;
    let mut rep = Report::new("decompose", p.order);
    rep.set("group order", g.order());
    rep.set("generated by quasi-reflections", d.generated_by_qr);
    rep.set("parts", parts_json(&d));
    if d.generated_by_qr {
        let r = decide_stc(&p.algebra, &g)?;
        rep.set("structure", r.structure_string());
    }
    Ok(rep)
}

fn twist_cmd(ctx: &Context) -> Result<Report> {
    let p = ctx.problem()?;
    let a = &p.algebra;
    let n = a.nvars();
    let mut rep = Report::new("twist-check", p.order);
    let singles: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    let t = PartitionTwist::canonical(a, singles)?;
    let mut commuting = 0;
    for s in 0..n {
        for u in 0..n {
            let l = t.multiply(a, &a.var(s), &a.var(u))?;
            let r = t.multiply(a, &a.var(u), &a.var(s))?;
            commuting += usize::from(l == r);
        }
    }
    rep.set("full twist commuting pairs", format!("{commuting}/{}", n * n));
    rep.set("full twist is commutative", commuting == n * n);
    if !p.generators.is_empty() {
        let g = ctx.group()?;
        let d = block_circle_decomposition(a, &g)?;
        let parts = d.partition();
        let t = PartitionTwist::canonical(a, parts.clone())?;
        let owner = crate::structure::blocks::part_of(&parts, n);
        let circle: Vec<bool> = d.parts.iter().map(|x| x.kind == PartKind::Circle).collect();
        let (mut cross, mut cross_ok, mut inner, mut inner_ok) = (0, 0, 0, 0);
        for s in 0..n {
            for u in s + 1..n {
                let l = t.multiply(a, &a.var(s), &a.var(u))?;
                let r = t.multiply(a, &a.var(u), &a.var(s))?;
                if owner[s] != owner[u] {
                    cross += 1;
                    cross_ok += usize::from(l == r);
                } else {
                    inner += 1;
                    let expect = if circle[owner[s]] { l.neg() } else { l.clone() };
                    inner_ok += usize::from(r == expect);
                }
            }
        }
        rep.set("partition", parts_json(&d));
        rep.set("cross-part pairs commuting", format!("{cross_ok}/{cross}"));
        rep.set("within-part pairs as in the part", format!("{inner_ok}/{inner}"));
        rep.set("partition twist is a tensor product", cross_ok == cross && inner_ok == inner);
    }
    Ok(rep)
}

fn mgroup_cmd(ctx: &Context, n: usize, alpha: usize, beta: usize) -> Result<Report> {
    let order = lcm(beta as u64, 4) as u32;
    let a = minus_one_ring(n, order)?;
    let g = make_m_group(&a, alpha, beta, ctx.max_order)?;
    let mut rep = Report::new(format!("mgroup {n} {alpha} {beta}"), order);
    rep.verified_to = Some(ctx.max_degree);
    let r = decide_stc(&a, &g)?;
    stc_fields(&mut rep, &r);
    rep.set("order distribution", distribution_json(&g.order_distribution(g.order())?));
    let h = molien_fixed_hilbert(&a, &g, ctx.max_degree)?;
    series_fields(&mut rep, &h, n);
    let gens = circle_invariant_generators(&a, alpha, beta, ctx.max_degree, ctx.max_order)?;
    let v = verify_generators(&a, &g, &gens.generators, ctx.max_degree)?;
    rep.set("generator source", gens.label.clone());
    if let Value::Object(m) = generator_set_json(&a, &v) {
        rep.body.extend(m);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_commands() {
        assert_eq!("trace g=2".parse::<Command>().unwrap(), Command::Trace(2));
        assert_eq!(
            "compare-orders M(4,1,2) G(2,2,4)".parse::<Command>().unwrap(),
            Command::CompareOrders(GroupRef::M(4, 1, 2), GroupRef::G(2, 2, 4))
        );
        assert_eq!("mgroup 3 1 2".parse::<Command>().unwrap(), Command::MGroup(3, 1, 2));
        assert!("trace 2".parse::<Command>().is_err());
        assert!("explode".parse::<Command>().is_err());
    }

    #[test]
    fn compare_small_groups() {
        let ctx = Context { problem: None, max_degree: 6, max_order: 1000 };
        let c: Command = "compare-orders M(3,1,2) G(2,2,3)".parse().unwrap();
        let r = run_command(&ctx, &c).unwrap();
        assert_eq!(r.get("verdict").unwrap(), "orders 24 = 24; distributions agree");
    }
}
