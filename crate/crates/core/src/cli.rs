//! Command implementations behind the `steinerlab` binary. Each command
//! returns a [`Report`]; the binary only parses arguments and prints.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::exactalg::{DenseMatrix, FieldElem, PrimeField, DEFAULT_PRIME};
use crate::multilin::{HyperplaneFrame, HV_DIM, NVARS};
use crate::pwcurves::{
    check_not_globally_generated, curve_params, expected_mh_rank, h1_ic_vanishing,
    h1_ic_vanishing_direct, sample_pw, section_matrix, section_point_checks, verify_pw_cohomology,
};
use crate::report::{Check, Report};
use crate::rng::{seeded, split};
use crate::steiner::{SteinerPresentation, DEFAULT_DMAX};
use crate::strata::{jordan3x4_table, jordan4_table, rank0_search, SearchContext};
use crate::subspace::{
    mh1, restrict_to_h, transport_check, z_rank, zh_rank, zstar_basis, FFormQuotient, SubspaceZ,
};

pub const DEFAULT_TRIALS: usize = 50;
pub const DEFAULT_SEED: u64 = 0;
pub const SECTION_POINTS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub prime: u32,
    pub seed: u64,
    pub trials: usize,
    pub json: bool,
    pub dmax: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            prime: DEFAULT_PRIME,
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
            json: false,
            dmax: DEFAULT_DMAX,
        }
    }
}

impl RunConfig {
    pub fn field(&self) -> Result<PrimeField> {
        PrimeField::new(self.prime as u64)
    }

    fn validate(&self) -> Result<PrimeField> {
        if self.trials == 0 {
            return Err(Error::Shape("trials must be at least 1".into()));
        }
        self.field()
    }

    fn report<P: Serialize>(&self, command: &str, params: &P) -> Report {
        Report::new(command, self, params, self.seed, self.prime)
    }
}

/// Text or JSON, as selected by the config.
pub fn render(report: &Report, cfg: &RunConfig) -> String {
    if cfg.json {
        report.to_json() + "\n"
    } else {
        report.render_text()
    }
}

#[derive(Debug, Clone, Serialize)]
struct CohomologyParams {
    a: usize,
    b: usize,
    f: Option<usize>,
    k_min: i64,
    k_max: i64,
    input: bool,
}

/// Cohomology table of a PW sample (`f` given), a generic presentation, or a
/// presentation read from interchange text.
pub fn cmd_cohomology(
    a: usize,
    b: usize,
    f: Option<usize>,
    k_min: i64,
    k_max: i64,
    input: Option<&str>,
    cfg: &RunConfig,
) -> Result<Report> {
    let field = cfg.validate()?;
    let (m, sample) = match (input, f) {
        (Some(text), _) => (SteinerPresentation::parse_interchange(text)?, None),
        (None, Some(f)) => {
            let s = sample_pw(a, b, f, field, cfg.seed, cfg.dmax)?;
            (s.m.clone(), Some(s))
        }
        (None, None) => (
            SteinerPresentation::random(a, b, field, &mut seeded(cfg.seed)),
            None,
        ),
    };
    let params = CohomologyParams {
        a: m.a(),
        b: m.b(),
        f,
        k_min,
        k_max,
        input: input.is_some(),
    };
    let mut report = cfg.report("cohomology", &params);
    let table = m.cohomology_table(k_min, k_max, cfg.dmax)?;
    for r in &table.rows {
        let [h0, h1, h2, h3] = r.h.map(|x| x as i64);
        report.push(Check::eq(
            format!("chi (k={})", r.k),
            r.chi,
            h0 - h1 + h2 - h3,
        ));
    }
    if let Some(s) = &sample {
        report.extend(verify_pw_cohomology(s, k_min, k_max, cfg.dmax)?);
    }
    report.text = format!(
        "a={} b={} d0={}\n{}",
        table.a,
        table.b,
        table.d0,
        table.render()
    );
    report.set_output(&table);
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TableKind {
    Jordan4,
    Jordan3x4,
}

pub fn cmd_table(which: TableKind, cfg: &RunConfig) -> Result<Report> {
    let field = cfg.validate()?;
    let mut report = cfg.report("table", &json!({ "which": which }));
    match which {
        TableKind::Jordan4 => {
            let rows = jordan4_table(field);
            let mut text = format!(
                "{:<8} {:>6} {:>6} {:>6} {:>6}  flags\n",
                "J", "O_ref", "O", "S_ref", "S"
            );
            for r in &rows {
                let flags = [(!r.o_matches).then_some("O"), (!r.s_matches).then_some("S")]
                    .into_iter()
                    .flatten()
                    .collect::<Vec<_>>()
                    .join(",");
                text += &format!(
                    "{:<8} {:>6} {:>6} {:>6} {:>6}  {}\n",
                    r.jordan, r.o_reference, r.o_computed, r.s_reference, r.s_computed, flags
                );
                report.push(Check::eq(
                    format!("S[{}]", r.jordan),
                    r.s_reference,
                    r.s_computed,
                ));
                if r.jordan == "2|1|1" {
                    report.push(Check::custom(
                        "O[2|1|1] discrepancy flagged",
                        json!({ "reference": 14, "computed": 15 }),
                        json!({ "reference": r.o_reference, "computed": r.o_computed }),
                        !r.o_matches && r.o_reference == 14 && r.o_computed == 15,
                    ));
                } else {
                    report.push(Check::eq(
                        format!("O[{}]", r.jordan),
                        r.o_reference,
                        r.o_computed,
                    ));
                }
            }
            report.text = text;
            report.set_output(&rows);
        }
        TableKind::Jordan3x4 => {
            let rows = jordan3x4_table(field);
            let mut text = format!(
                "{:<6} {:<8} {:>5} {:>3} {:>3} {:>4}  note\n",
                "J", "c", "r_ref", "r", "S", "O"
            );
            for r in &rows {
                let note = if r.g_not_surjective {
                    "g not surjective"
                } else if !r.o_consistent {
                    "O differs from reference"
                } else {
                    ""
                };
                text += &format!(
                    "{:<6} {:<8} {:>5} {:>3} {:>3} {:>4}  {}\n",
                    r.jordan,
                    r.c_class,
                    r.r_reference,
                    r.r_computed,
                    r.s_computed,
                    r.o_computed,
                    note
                );
                report.push(Check::eq(
                    format!("r[{} {}]", r.jordan, r.c_class),
                    r.r_reference,
                    r.r_computed,
                ));
                report.push(Check::eq(
                    format!("S[{} {}]", r.jordan, r.c_class),
                    10 - r.r_reference,
                    r.s_computed,
                ));
            }
            let degenerate: Vec<String> = rows
                .iter()
                .filter(|r| r.g_not_surjective)
                .map(|r| format!("{} {}", r.jordan, r.c_class))
                .collect();
            report.push(Check::eq(
                "degenerate rows",
                vec!["111 0".to_string()],
                degenerate,
            ));
            report.text = text;
            report.set_output(&rows);
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Suite {
    Transport,
    Pw,
    Mh,
    Rank0,
    Curve,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerifyParams {
    pub a: Option<usize>,
    pub b: Option<usize>,
    pub f: Option<usize>,
    pub hyperplane: bool,
    pub direct: bool,
    pub k_min: Option<i64>,
    pub k_max: Option<i64>,
}

fn need(v: Option<usize>, name: &str) -> Result<usize> {
    v.ok_or_else(|| Error::Shape(format!("parameter -{name} is required for this suite")))
}

pub fn cmd_verify(suite: Suite, params: &VerifyParams, cfg: &RunConfig) -> Result<Report> {
    let field = cfg.validate()?;
    let mut report = cfg.report(&format!("verify {}", suite_name(suite)), params);
    match suite {
        Suite::Transport => verify_transport(&mut report, field, cfg),
        Suite::Pw => verify_pw(&mut report, params, field, cfg)?,
        Suite::Mh => verify_mh(&mut report, params, field, cfg)?,
        Suite::Rank0 => verify_rank0(&mut report, params, field, cfg)?,
        Suite::Curve => verify_curve(&mut report, params, field, cfg)?,
    }
    Ok(report)
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Transport => "transport",
        Suite::Pw => "pw",
        Suite::Mh => "mh",
        Suite::Rank0 => "rank0",
        Suite::Curve => "curve",
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TransportVariant {
    Full,
    Hyperplane,
    Combined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransportOutcome {
    pub a: usize,
    pub b: usize,
    pub f: usize,
    pub constructed_positive: bool,
    pub lhs: bool,
    pub rhs: bool,
}

fn random_combination<R: Rng + ?Sized>(
    basis: &[Vec<FieldElem>],
    len: usize,
    field: PrimeField,
    rng: &mut R,
) -> Vec<FieldElem> {
    let mut v = vec![0; len];
    for b in basis {
        let c = field.random(rng);
        for (x, &y) in v.iter_mut().zip(b) {
            *x = field.add(*x, field.mul(c, y));
        }
    }
    v
}

/// One random instance of a transport variant. Even trials are built to
/// satisfy the equations, odd trials are unconstrained.
pub fn transport_instance(
    variant: TransportVariant,
    field: PrimeField,
    seed: u64,
    trial: usize,
) -> TransportOutcome {
    let mut rng = split(seed, trial as u64);
    let positive = trial.is_multiple_of(2);
    let a = rng.gen_range(1..=3);
    let f = if variant == TransportVariant::Hyperplane {
        0
    } else {
        rng.gen_range(1..=a)
    };
    let b = rng.gen_range(1..=(3 * a - 1).min(6));
    let phi = if f == 0 {
        FFormQuotient::empty(a, field)
    } else {
        FFormQuotient::random(a, f, field, &mut rng)
    };

    let m = if positive {
        let zstar = zstar_basis(&phi);
        let cols: Vec<Vec<FieldElem>> = (0..b)
            .map(|_| random_combination(&zstar, NVARS * a, field, &mut rng))
            .collect();
        SteinerPresentation::from_stacked(a, &DenseMatrix::from_columns(NVARS * a, &cols, field))
            .expect("4a rows")
    } else {
        SteinerPresentation::random(a, b, field, &mut rng)
    };

    let hyper = match variant {
        TransportVariant::Full => None,
        TransportVariant::Hyperplane | TransportVariant::Combined => {
            let frame = HyperplaneFrame::random(field, &mut rng);
            let width = HV_DIM * a;
            let extra = rng.gen_range(1..=3);
            let rows: Vec<Vec<FieldElem>> = if positive {
                let left = mh1(&m, &frame).transpose().kernel_basis();
                (0..extra)
                    .map(|_| random_combination(&left, width, field, &mut rng))
                    .collect()
            } else {
                (0..extra)
                    .map(|_| (0..width).map(|_| field.random(&mut rng)).collect())
                    .collect()
            };
            let phi_h = phi.restricted_to_hv(&frame);
            let t = DenseMatrix::from_fn(phi_h.rows() + rows.len(), width, field, |i, j| {
                if i < phi_h.rows() {
                    phi_h.get(i, j)
                } else {
                    rows[i - phi_h.rows()][j]
                }
            });
            Some((frame, t))
        }
    };
    let (lhs, rhs) =
        transport_check(&m, &phi, hyper.as_ref().map(|(h, t)| (h, t))).expect("consistent shapes");
    TransportOutcome {
        a,
        b,
        f,
        constructed_positive: positive,
        lhs,
        rhs,
    }
}

pub fn transport_survey(
    variant: TransportVariant,
    field: PrimeField,
    seed: u64,
    trials: usize,
) -> Vec<TransportOutcome> {
    let salt = match variant {
        TransportVariant::Full => 0,
        TransportVariant::Hyperplane => 1,
        TransportVariant::Combined => 2,
    };
    (0..trials)
        .into_par_iter()
        .map(|t| transport_instance(variant, field, seed.wrapping_mul(3).wrapping_add(salt), t))
        .collect()
}

fn verify_transport(report: &mut Report, field: PrimeField, cfg: &RunConfig) {
    let mut summary = Vec::new();
    for variant in [
        TransportVariant::Full,
        TransportVariant::Hyperplane,
        TransportVariant::Combined,
    ] {
        let outcomes = transport_survey(variant, field, cfg.seed, cfg.trials);
        let agree = outcomes.iter().filter(|o| o.lhs == o.rhs).count();
        let positives = outcomes.iter().filter(|o| o.lhs).count();
        let built = outcomes.iter().filter(|o| o.constructed_positive).count();
        report.push(Check::eq(
            format!("{variant:?}: sides agree"),
            cfg.trials,
            agree,
        ));
        report.push(Check::eq(
            format!("{variant:?}: constructed instances hold"),
            built,
            {
                outcomes
                    .iter()
                    .filter(|o| o.constructed_positive && o.lhs && o.rhs)
                    .count()
            },
        ));
        summary.push(json!({ "variant": variant, "trials": cfg.trials, "agree": agree, "lhs_true": positives }));
    }
    report.text = summary
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join("\n");
    report.set_output(&summary);
}

fn verify_pw(
    report: &mut Report,
    p: &VerifyParams,
    field: PrimeField,
    cfg: &RunConfig,
) -> Result<()> {
    let (a, b, f) = (need(p.a, "a")?, need(p.b, "b")?, need(p.f, "f")?);
    let (k_min, k_max) = (p.k_min.unwrap_or(-6), p.k_max.unwrap_or(4));
    let s = sample_pw(a, b, f, field, cfg.seed, cfg.dmax)?;
    report.push(Check::eq("rank m(1)", 10 * a - f, s.rank_m1));
    report.push(Check::holds(
        "surjectivity certificate found",
        s.d0.is_some(),
    ));
    report.push(Check::eq(
        "transport (lhs, rhs)",
        (true, true),
        transport_check(&s.m, &s.phi, None)?,
    ));
    report.extend(verify_pw_cohomology(&s, k_min, k_max, cfg.dmax)?);
    let table = s.m.cohomology_table(k_min, k_max, cfg.dmax)?;
    report.text = format!("a={a} b={b} f={f} d0={}\n{}", table.d0, table.render());
    report.set_output(&json!({ "rank_m1": s.rank_m1, "d0": s.d0, "table": table }));
    Ok(())
}

fn verify_mh(
    report: &mut Report,
    p: &VerifyParams,
    field: PrimeField,
    cfg: &RunConfig,
) -> Result<()> {
    let (a, b, f) = (need(p.a, "a")?, need(p.b, "b")?, need(p.f, "f")?);
    let s = sample_pw(a, b, f, field, cfg.seed, cfg.dmax)?;
    let hist = crate::pwcurves::mh_rank_survey(&s.m, cfg.trials, cfg.seed);
    let expected = expected_mh_rank(a, b, f);
    let hits = hist.get(&expected).copied().unwrap_or(0);
    let needed = (cfg.trials * 99).div_ceil(100);
    report.push(Check::custom(
        format!("rank m_H(1) = {expected} in >= 99% of trials"),
        needed,
        hits,
        hits >= needed,
    ));
    report.text = format!("rank histogram: {hist:?}");
    report.set_output(&json!({ "expected": expected, "histogram": hist }));
    Ok(())
}

fn verify_rank0(
    report: &mut Report,
    p: &VerifyParams,
    field: PrimeField,
    cfg: &RunConfig,
) -> Result<()> {
    let (a, f) = (need(p.a, "a")?, need(p.f, "f")?);
    let mut rng = seeded(cfg.seed);
    let phi = FFormQuotient::random(a, f, field, &mut rng);
    let (lhs, rhs) = if p.hyperplane {
        (11 * f, 3 * a)
    } else {
        (5 * f, 2 * a)
    };
    let predicted = (lhs != rhs).then_some(lhs > rhs);
    let output = if p.hyperplane {
        let frame = HyperplaneFrame::random(field, &mut rng);
        let search = rank0_search(&phi, SearchContext::Hyper(&frame));
        if let Some(want) = predicted {
            report.push(Check::eq("witness exists", want, search.witness.is_some()));
        }
        if let Some(g) = &search.witness {
            let slice = restrict_to_h(&SubspaceZ::new(phi.clone()), &frame)?;
            let t = slice.subspace_quotient(std::slice::from_ref(g))?;
            report.push(Check::eq("zh_rank of witness", 0, zh_rank(&slice, &t)?));
        }
        json!({ "context": "hyperplane", "solution_dim": search.solution_dim, "found": search.witness.is_some() })
    } else {
        let search = rank0_search(&phi, SearchContext::Full);
        if let Some(want) = predicted {
            report.push(Check::eq("witness exists", want, search.witness.is_some()));
        }
        if let Some(g) = &search.witness {
            report.push(Check::eq(
                "z_rank of witness",
                0,
                z_rank(&phi, std::slice::from_ref(g))?,
            ));
        }
        json!({ "context": "full", "solution_dim": search.solution_dim, "found": search.witness.is_some() })
    };
    report.text = output.to_string();
    report.set_output(&output);
    Ok(())
}

fn verify_curve(
    report: &mut Report,
    p: &VerifyParams,
    field: PrimeField,
    cfg: &RunConfig,
) -> Result<()> {
    let (a, b) = (need(p.a, "a")?, need(p.b, "b")?);
    let cp = curve_params(a, b)?;
    report.push(Check::eq("delta", 1, cp.delta));
    report.push(Check::eq("cubic coefficient", 0, cp.hilbert_times6[3]));
    report.push(Check::eq("quadratic coefficient", 0, cp.hilbert_times6[2]));
    let linear_ok = (-3..=cp.s + 3)
        .all(|t| 6 * cp.hilbert_value(t) == cp.hilbert_times6[0] + cp.hilbert_times6[1] * t);
    report.push(Check::holds(
        "expansion matches termwise evaluation",
        linear_ok,
    ));
    report.push(Check::holds("parameters admissible", cp.admissible));
    let mut output = json!({ "params": cp });
    if cp.f >= 0 && cp.admissible {
        let f = cp.f as usize;
        let s = sample_pw(a, b, f, field, cfg.seed, cfg.dmax)?;
        let h0 = s.m.assemble_md(1).kernel_dim();
        report.push(Check::eq("h0(E(1)) = c", cp.c as usize, h0));
        report.push(Check::holds(
            "not globally generated",
            check_not_globally_generated(&s.m),
        ));
        let n = section_matrix(&s.m)?;
        let mut rng = split(cfg.seed, 1);
        let points = section_point_checks(&s.m, &n, SECTION_POINTS, &mut rng);
        let full = points
            .iter()
            .filter(|pc| pc.rank == n.c() - 1 && pc.annihilated)
            .count();
        report.push(Check::eq(
            format!("N(x) rank c-1 and M(x)N(x)^t = 0 at {SECTION_POINTS} points"),
            SECTION_POINTS,
            full,
        ));
        report.push(Check::holds(
            "h1(I_C(s-3)) = 0 by propagation",
            h1_ic_vanishing(&s.m, cp.s, cfg.dmax),
        ));
        if p.direct {
            report.push(Check::holds(
                "h1(I_C(s-3)) = 0 by direct rank",
                h1_ic_vanishing_direct(&s.m, cp.s),
            ));
        }
        output["h0_e1"] = json!(h0);
        output["d0"] = json!(s.d0);
    }
    report.text = format!(
        "s={} c={} f={} delta={} degree={} genus={} admissible={}",
        cp.s, cp.c, cp.f, cp.delta, cp.degree, cp.genus, cp.admissible
    );
    report.set_output(&output);
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExportKind {
    Steiner,
    Fform,
    Linforms,
}

/// Interchange text for a PW sample: its presentation, its F-form, or its
/// section matrix.
pub fn cmd_export(
    kind: ExportKind,
    a: usize,
    b: usize,
    f: usize,
    cfg: &RunConfig,
) -> Result<String> {
    let field = cfg.validate()?;
    let s = sample_pw(a, b, f, field, cfg.seed, cfg.dmax)?;
    Ok(match kind {
        ExportKind::Steiner => s.m.to_interchange(),
        ExportKind::Fform => s.phi.to_interchange(),
        ExportKind::Linforms => section_matrix(&s.m)?.to_interchange(),
    })
}

/// Rank and nullities of a matrix given as `rows cols p` interchange text.
pub fn cmd_rank(input: &str, cfg: &RunConfig) -> Result<Report> {
    let m = DenseMatrix::parse_interchange(input)?;
    let mut report = cfg.report("rank", &json!({ "rows": m.rows(), "cols": m.cols() }));
    let rank = m.rank();
    let kernel = m.kernel_basis();
    report.push(Check::eq(
        "rank + nullity = cols",
        m.cols(),
        rank + kernel.len(),
    ));
    report.push(Check::holds(
        "kernel vectors annihilated",
        kernel.iter().all(|v| m.mul_vec(v).iter().all(|&x| x == 0)),
    ));
    let output = json!({ "prime": m.field().modulus(), "rank": rank, "kernel_dim": kernel.len(), "cokernel_dim": m.rows() - rank });
    report.text = output.to_string();
    report.set_output(&output);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> RunConfig {
        RunConfig {
            trials: 10,
            ..RunConfig::default()
        }
    }

    #[test]
    fn cohomology_pw_and_generic() {
        let r = cmd_cohomology(3, 8, Some(1), -1, 1, None, &cfg()).unwrap();
        assert!(r.passed());
        assert_eq!(r.output["rows"][2]["h"], json!([3, 1, 0, 0]));
        let r = cmd_cohomology(1, 4, None, 1, 1, None, &cfg()).unwrap();
        assert_eq!(r.output["rows"][0]["h"], json!([6, 0, 0, 0]));
        assert!(matches!(
            cmd_cohomology(4, 13, Some(2), 0, 1, None, &cfg()),
            Err(Error::InadmissibleParams { .. })
        ));
    }

    #[test]
    fn cohomology_from_interchange() {
        let m = SteinerPresentation::random(1, 4, PrimeField::default(), &mut seeded(2));
        let r = cmd_cohomology(0, 0, None, 0, 1, Some(&m.to_interchange()), &cfg()).unwrap();
        assert_eq!(r.params["a"], json!(1));
        assert_eq!(r.output["rows"][1]["h"], json!([6, 0, 0, 0]));
    }

    #[test]
    fn jordan3x4_report_passes() {
        assert!(cmd_table(TableKind::Jordan3x4, &cfg()).unwrap().passed());
    }

    #[test]
    fn jordan4_report_fails_only_on_s22() {
        let r = cmd_table(TableKind::Jordan4, &cfg()).unwrap();
        let failed: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
        assert_eq!(failed, ["S[22]"]);
    }

    #[test]
    fn transport_suite_agrees() {
        let r = cmd_verify(Suite::Transport, &VerifyParams::default(), &cfg()).unwrap();
        assert!(r.passed(), "{}", r.render_text());
    }

    #[test]
    fn rank0_suite() {
        let p = VerifyParams {
            a: Some(3),
            f: Some(1),
            hyperplane: true,
            ..Default::default()
        };
        assert!(cmd_verify(Suite::Rank0, &p, &cfg()).unwrap().passed());
        assert!(matches!(
            cmd_verify(Suite::Rank0, &VerifyParams::default(), &cfg()),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn json_is_deterministic() {
        let p = VerifyParams {
            a: Some(3),
            b: Some(8),
            f: Some(1),
            ..Default::default()
        };
        let c = RunConfig {
            json: true,
            ..cfg()
        };
        let x = render(&cmd_verify(Suite::Pw, &p, &c).unwrap(), &c);
        let y = render(&cmd_verify(Suite::Pw, &p, &c).unwrap(), &c);
        assert_eq!(x, y);
    }

    #[test]
    fn rank_command() {
        let r = cmd_rank("2 3 7\n1 2 3\n2 4 6\n", &cfg()).unwrap();
        assert_eq!(r.output["rank"], json!(1));
        assert_eq!(r.output["kernel_dim"], json!(2));
    }

    #[test]
    fn zero_trials_rejected() {
        let c = RunConfig { trials: 0, ..cfg() };
        assert!(cmd_table(TableKind::Jordan4, &c).is_err());
    }
}
