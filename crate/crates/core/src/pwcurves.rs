//! Sampling the predominant component `PW`, checking its cohomology and
//! hyperplane ranks, and the numerical side of the curve construction.

use std::collections::BTreeMap;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{DenseMatrix, FieldElem, Lines, PrimeField};
use crate::multilin::{binom, sym_dim, HyperplaneFrame, NVARS};
use crate::report::Check;
use crate::rng::{seeded, split};
use crate::steiner::{chi3, SteinerPresentation};
use crate::subspace::{gstar, mh1, zstar_basis, FFormQuotient};

pub const RETRY_BUDGET: usize = 8;

#[derive(Debug, Clone)]
pub struct PWSample {
    pub a: usize,
    pub b: usize,
    pub f: usize,
    pub phi: FFormQuotient,
    pub m: SteinerPresentation,
    pub rank_m1: usize,
    pub d0: Option<usize>,
}

fn inadmissible(a: usize, b: usize, f: i64, reason: &str) -> Error {
    Error::InadmissibleParams {
        a,
        b,
        f,
        reason: reason.to_string(),
    }
}

/// Random `Z` of codimension `f`, then `m` with `b` random columns in `Z*`,
/// resampled until `rank m(1) = 10a − f`.
pub fn sample_pw(
    a: usize,
    b: usize,
    f: usize,
    field: PrimeField,
    seed: u64,
    d_max: usize,
) -> Result<PWSample> {
    if a == 0 || !(5 * a <= 2 * b && 2 * b <= 8 * a) {
        return Err(inadmissible(a, b, f as i64, "need 5a <= 2b <= 8a"));
    }
    if b + 4 * f > 4 * a {
        return Err(inadmissible(a, b, f as i64, "need f <= a - b/4"));
    }
    let mut rng = seeded(seed);
    for _ in 0..RETRY_BUDGET {
        let phi = FFormQuotient::random(a, f, field, &mut rng);
        let zstar = zstar_basis(&phi);
        let mut stack = DenseMatrix::zeros(NVARS * a, b, field);
        for col in 0..b {
            let coeffs: Vec<FieldElem> = zstar.iter().map(|_| field.random(&mut rng)).collect();
            for (v, &c) in zstar.iter().zip(&coeffs) {
                for (row, &x) in v.iter().enumerate() {
                    if x != 0 && c != 0 {
                        stack.add_at(row, col, field.mul(c, x));
                    }
                }
            }
        }
        let m = SteinerPresentation::from_stacked(a, &stack)?;
        let rank_m1 = m.assemble_md(1).rank();
        if rank_m1 == 10 * a - f {
            let d0 = m.surjectivity_certificate(d_max).d0;
            return Ok(PWSample {
                a,
                b,
                f,
                phi,
                m,
                rank_m1,
                d0,
            });
        }
    }
    Err(Error::SamplingFailed(RETRY_BUDGET))
}

/// Compares the cohomology table on `k_min..=k_max` with the predicted
/// values for a `PW` sample.
pub fn verify_pw_cohomology(
    sample: &PWSample,
    k_min: i64,
    k_max: i64,
    d_max: usize,
) -> Result<Vec<Check>> {
    let (a, b, f) = (sample.a as i64, sample.b as i64, sample.f as i64);
    let table = sample.m.cohomology_table(k_min, k_max, d_max)?;
    let mut checks = vec![
        Check::eq("rank m(1)", 10 * sample.a - sample.f, sample.rank_m1),
        Check::eq(
            "m(0) injective",
            true,
            sample.m.stacked().rank() == sample.b,
        ),
    ];
    let h = |k: i64, i: usize| table.row(k).map(|r| r.h[i] as i64);
    let mut expect = |name: &str, k: i64, i: usize, want: i64| {
        if let Some(got) = h(k, i) {
            checks.push(Check::eq(format!("{name} (k={k})"), want, got));
        }
    };
    expect("h1 = a", -1, 1, a);
    expect("h1 = 4a-b", 0, 1, 4 * a - b);
    expect("h1 = f", 1, 1, f);
    expect("h0 = 4b-10a+f", 1, 0, 4 * b - 10 * a + f);
    expect("h0 = 0", 0, 0, 0);
    expect("h0 = 0", -1, 0, 0);
    for r in &table.rows {
        let [h0, h1, h2, h3] = r.h.map(|x| x as i64);
        checks.push(Check::eq(format!("h2 = 0 (k={})", r.k), 0, h2));
        checks.push(Check::eq(
            format!("chi (k={})", r.k),
            r.chi,
            h0 - h1 + h2 - h3,
        ));
        if r.k != 1 {
            let nonzero = r.h.iter().filter(|&&x| x != 0).count();
            checks.push(Check::custom(
                format!("at most one nonzero h^i (k={})", r.k),
                "<= 1",
                nonzero,
                nonzero <= 1,
            ));
        }
        if r.k <= -4 {
            let dual = sample.m.dual_h0((-r.k - 4) as usize) as i64;
            checks.push(Check::eq(
                format!("h3 by Serre duality (k={})", r.k),
                dual,
                h3,
            ));
        }
    }
    Ok(checks)
}

/// `h⁰(E(1)) ≤ b − a + 1` and `h¹(E) > 0`.
pub fn check_not_globally_generated(m: &SteinerPresentation) -> bool {
    let h0_e1 = m.assemble_md(1).kernel_dim();
    let h1_e0 = m.assemble_md(0).cokernel_dim();
    h0_e1 + m.a() <= m.b() + 1 && h1_e0 > 0
}

/// Histogram of `rank m_H(1)` over random hyperplanes; trial `t` uses stream
/// `t` of `seed`.
pub fn mh_rank_survey(m: &SteinerPresentation, trials: usize, seed: u64) -> BTreeMap<usize, usize> {
    let field = m.field();
    let ranks: Vec<usize> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = split(seed, t as u64);
            mh1(m, &HyperplaneFrame::random(field, &mut rng)).rank()
        })
        .collect();
    let mut hist = BTreeMap::new();
    for r in ranks {
        *hist.entry(r).or_insert(0) += 1;
    }
    hist
}

pub fn expected_mh_rank(a: usize, b: usize, f: usize) -> usize {
    (3 * b).min(9 * a - f)
}

/// Integer polynomial, lowest degree first.
fn poly_mul(p: &[i64], q: &[i64]) -> Vec<i64> {
    let mut out = vec![0; p.len() + q.len() - 1];
    for (i, &x) in p.iter().enumerate() {
        for (j, &y) in q.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `6 χ₃(t − u) = (t − u + 1)(t − u + 2)(t − u + 3)`.
fn six_chi3_shifted(u: i64) -> Vec<i64> {
    [1, 2, 3]
        .iter()
        .fold(vec![1], |acc, &c| poly_mul(&acc, &[c - u, 1]))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveParams {
    pub a: i64,
    pub b: i64,
    pub s: i64,
    pub c: i64,
    pub f: i64,
    pub delta: i64,
    /// `6 P_C(t)`, coefficients of `1, t, t², t³`.
    pub hilbert_times6: [i64; 4],
    pub degree: i64,
    pub genus: i64,
    /// `11b > 32a + 9` and `a ≥ 7`.
    pub main_condition: bool,
    /// `b ≤ 3a`; otherwise the other construction applies.
    pub regime_b_le_3a: bool,
    /// `9a − 3b ≤ f ≤ min((3a−1)/11, (13a−4b−5)/5, (16a−5b−5)/2)`.
    pub rank_bounds: bool,
    pub admissible: bool,
}

impl CurveParams {
    /// `P_C(t)` evaluated term by term from the resolution.
    pub fn hilbert_value(&self, t: i64) -> i64 {
        chi3(t) - self.c * chi3(t - self.s) + self.b * chi3(t - self.s - 1)
            - self.a * chi3(t - self.s - 2)
    }

    /// `h⁰(I_C(t))` for `t ≥ s − 2`, read off the resolution's global
    /// sections (all higher cohomology of the free terms vanishes there).
    pub fn ideal_sections(&self, t: i64) -> i64 {
        let h0 = |d: i64| {
            if d < 0 {
                0
            } else {
                binom(d as usize + 3, 3) as i64
            }
        };
        self.c * h0(t - self.s) - self.b * h0(t - self.s - 1) + self.a * h0(t - self.s - 2)
    }
}

pub fn curve_params(a: usize, b: usize) -> Result<CurveParams> {
    if b < 2 * a {
        return Err(inadmissible(
            a,
            b,
            9 * a as i64 - 3 * b as i64 + 1,
            "need b >= 2a",
        ));
    }
    let (a, b) = (a as i64, b as i64);
    let s = b - 2 * a;
    let c = b - a + 1;
    let f = 9 * a - 3 * b + 1;
    let delta = 3 * b - 9 * a + f;
    let mut poly = [0i64; 4];
    for (coef, u) in [(1, 0), (-c, s), (b, s + 1), (-a, s + 2)] {
        for (i, x) in six_chi3_shifted(u).into_iter().enumerate() {
            poly[i] += coef * x;
        }
    }
    let hilbert_times6 = poly;
    let degree = hilbert_times6[1] / 6;
    let genus = 1 - hilbert_times6[0] / 6;
    let main_condition = 11 * b > 32 * a + 9 && a >= 7;
    let regime_b_le_3a = b <= 3 * a;
    let rank_bounds = 9 * a - 3 * b <= f
        && 11 * f < 3 * a
        && 5 * f <= 13 * a - 4 * b - 5
        && 2 * f <= 16 * a - 5 * b - 5;
    Ok(CurveParams {
        a,
        b,
        s,
        c,
        f,
        delta,
        hilbert_times6,
        degree,
        genus,
        main_condition,
        regime_b_le_3a,
        rank_bounds,
        admissible: main_condition && regime_b_le_3a && rank_bounds,
    })
}

/// Basis of `H⁰(E(1)) = ker m(1)` written as a `c × b` matrix of linear forms
/// `N = Σ_k N_k x_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionMatrix {
    pub forms: [DenseMatrix; NVARS],
}

impl SectionMatrix {
    pub fn c(&self) -> usize {
        self.forms[0].rows()
    }

    pub fn b(&self) -> usize {
        self.forms[0].cols()
    }

    pub fn evaluate(&self, x: &[FieldElem; NVARS]) -> DenseMatrix {
        let field = self.forms[0].field();
        DenseMatrix::from_fn(self.c(), self.b(), field, |r, i| {
            (0..NVARS).fold(0, |acc, k| {
                field.add(acc, field.mul(self.forms[k].get(r, i), x[k]))
            })
        })
    }

    /// `linforms c b p`, then `N_1, ..., N_4`.
    pub fn to_interchange(&self) -> String {
        let mut s = format!(
            "linforms {} {} {}\n",
            self.c(),
            self.b(),
            self.forms[0].field().modulus()
        );
        for m in &self.forms {
            m.write_interchange(&mut s);
        }
        s
    }

    pub fn parse_interchange(text: &str) -> Result<Self> {
        let mut lines = Lines::new(text.as_bytes());
        let h = lines.expect_header("linforms", 3)?;
        let forms = [
            DenseMatrix::read_interchange(&mut lines)?,
            DenseMatrix::read_interchange(&mut lines)?,
            DenseMatrix::read_interchange(&mut lines)?,
            DenseMatrix::read_interchange(&mut lines)?,
        ];
        let (c, b, p) = (forms[0].rows(), forms[0].cols(), forms[0].field().modulus());
        if forms
            .iter()
            .any(|m| (m.rows(), m.cols(), m.field()) != (c, b, forms[0].field()))
            || (c as u64, b as u64, p as u64) != (h[0], h[1], h[2])
        {
            return Err(lines.error("header does not match the matrices"));
        }
        Ok(Self { forms })
    }
}

pub fn section_matrix(m: &SteinerPresentation) -> Result<SectionMatrix> {
    let (a, b) = (m.a(), m.b());
    let kernel = m.assemble_md(1).kernel_basis();
    let c = (b + 1).saturating_sub(a);
    if b < a || kernel.len() != c {
        return Err(Error::KernelDimMismatch {
            got: kernel.len(),
            expected: c,
        });
    }
    let field = m.field();
    let forms =
        [0, 1, 2, 3].map(|k| DenseMatrix::from_fn(c, b, field, |r, i| kernel[r][NVARS * i + k]));
    Ok(SectionMatrix { forms })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointCheck {
    pub rank: usize,
    pub annihilated: bool,
}

/// Ranks of `N(x)` and whether `M(x) N(x)ᵗ = 0` at random points.
pub fn section_point_checks<R: Rng + ?Sized>(
    m: &SteinerPresentation,
    n: &SectionMatrix,
    points: usize,
    rng: &mut R,
) -> Vec<PointCheck> {
    let field = m.field();
    (0..points)
        .map(|_| {
            let x = [0; NVARS].map(|_| field.random(rng));
            let nx = n.evaluate(&x);
            let prod = m
                .evaluate(&x)
                .mul(&nx.transpose())
                .expect("b columns on both sides");
            PointCheck {
                rank: nx.rank(),
                annihilated: prod.is_zero(),
            }
        })
        .collect()
}

/// `H¹(I_C(s−3))` vanishes iff `m(s−3)` is surjective; surjectivity at a
/// lower degree propagates.
pub fn h1_ic_vanishing(m: &SteinerPresentation, s: i64, d_max: usize) -> bool {
    if s < 3 {
        return true;
    }
    let target = (s - 3) as usize;
    if m.surjectivity_certificate(d_max.min(target))
        .d0
        .is_some_and(|d| d <= target)
    {
        return true;
    }
    m.md_surjective(target)
}

/// Rank of `m(s−3)` itself, without the propagation shortcut.
pub fn h1_ic_vanishing_direct(m: &SteinerPresentation, s: i64) -> bool {
    s < 3 || m.md_surjective((s - 3) as usize)
}

/// Expected size of `m(d)` as (rows, columns).
pub fn md_shape(a: usize, b: usize, d: usize) -> (usize, usize) {
    (a * sym_dim(d + 1), b * sym_dim(d))
}

/// `g*(Φ) · m(0) = 0`.
pub fn columns_in_zstar(sample: &PWSample) -> bool {
    sample.f == 0
        || gstar(&sample.phi)
            .mul(&sample.m.stacked())
            .map(|p| p.is_zero())
            .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::steiner::DEFAULT_DMAX;
    use crate::subspace::transport_check;

    fn fp() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn admissibility() {
        assert!(matches!(
            sample_pw(3, 7, 0, fp(), 1, 5),
            Err(Error::InadmissibleParams { .. })
        ));
        assert!(matches!(
            sample_pw(4, 13, 2, fp(), 1, 5),
            Err(Error::InadmissibleParams { .. })
        ));
        assert!(matches!(
            sample_pw(1, 5, 0, fp(), 1, 5),
            Err(Error::InadmissibleParams { .. })
        ));
    }

    #[test]
    fn pw_381() {
        let s = sample_pw(3, 8, 1, fp(), 7, DEFAULT_DMAX).unwrap();
        assert_eq!(s.rank_m1, 29);
        assert_eq!(s.d0, Some(2));
        assert!(columns_in_zstar(&s));
        assert_eq!(transport_check(&s.m, &s.phi, None).unwrap(), (true, true));
        let checks = verify_pw_cohomology(&s, -6, 4, DEFAULT_DMAX).unwrap();
        assert!(checks.iter().all(|c| c.pass), "{checks:?}");
        let t = s.m.cohomology_table(-1, 1, DEFAULT_DMAX).unwrap();
        assert_eq!(
            t.rows.iter().map(|r| r.h).collect::<Vec<_>>(),
            [[0, 3, 0, 0], [0, 4, 0, 0], [3, 1, 0, 0]]
        );
        assert_eq!(expected_mh_rank(3, 8, 1), 24);
        assert_eq!(mh_rank_survey(&s.m, 10, 3), BTreeMap::from([(24, 10)]));
    }

    #[test]
    fn pw_generic_140() {
        let s = sample_pw(1, 4, 0, fp(), 8, DEFAULT_DMAX).unwrap();
        assert_eq!(s.rank_m1, 10);
        assert_eq!(
            s.m.cohomology_table(1, 1, DEFAULT_DMAX).unwrap().rows[0].h,
            [6, 0, 0, 0]
        );
        assert!(!check_not_globally_generated(&s.m));
        assert_eq!(mh_rank_survey(&s.m, 20, 4), BTreeMap::from([(9, 20)]));
        assert!(matches!(
            section_matrix(&s.m),
            Err(Error::KernelDimMismatch {
                got: 6,
                expected: 4
            })
        ));
    }

    #[test]
    fn curve_10_30() {
        let p = curve_params(10, 30).unwrap();
        assert_eq!((p.s, p.c, p.f, p.delta), (10, 21, 1, 1));
        assert_eq!((p.degree, p.genus), (45, 186));
        assert_eq!(p.hilbert_times6[3], 0);
        assert_eq!(p.hilbert_times6[2], 0);
        assert!(p.admissible);
        for t in -5..40 {
            assert_eq!(
                6 * p.hilbert_value(t),
                p.hilbert_times6[0] + p.hilbert_times6[1] * t
            );
        }
        for t in [p.s, p.s + 1] {
            assert_eq!(p.hilbert_value(t), chi3(t) - p.ideal_sections(t));
        }
    }

    #[test]
    fn curve_7_22() {
        let p = curve_params(7, 22).unwrap();
        assert_eq!((p.s, p.c, p.f), (8, 16, -2));
        assert_eq!((p.degree, p.genus), (29, 84));
        assert!(!p.regime_b_le_3a);
        assert!(!p.admissible);
        assert!(curve_params(5, 9).is_err());
    }

    #[test]
    fn cubic_coefficient_vanishes() {
        for a in 1..12 {
            for b in 2 * a..4 * a {
                let p = curve_params(a, b).unwrap();
                assert_eq!(p.hilbert_times6[3], 0);
                assert_eq!(p.delta, 1);
            }
        }
    }

    #[test]
    fn h1_ic_trivial_cases() {
        let f = fp();
        let zero = SteinerPresentation::zero(2, 6, f);
        assert!(h1_ic_vanishing(&zero, 2, 5));
        assert!(!h1_ic_vanishing(&zero, 5, 5));
        assert!(!h1_ic_vanishing_direct(&zero, 5));
        let s = sample_pw(1, 4, 0, f, 2, 5).unwrap();
        assert!(h1_ic_vanishing(&s.m, 6, 5));
        assert!(h1_ic_vanishing_direct(&s.m, 6));
    }

    #[test]
    fn section_matrix_small() {
        // f = 9a - 3b + 1 = 1, c = 9
        let s = sample_pw(4, 12, 1, fp(), 5, 5).unwrap();
        let n = section_matrix(&s.m).unwrap();
        assert_eq!((n.c(), n.b()), (9, 12));
        let mut rng = seeded(6);
        for pc in section_point_checks(&s.m, &n, 5, &mut rng) {
            assert_eq!(
                pc,
                PointCheck {
                    rank: 8,
                    annihilated: true
                }
            );
        }

        // off the line f = 9a - 3b + 1: dim ker m(1) = 3, c = 6
        let s = sample_pw(3, 8, 1, fp(), 5, 5).unwrap();
        assert!(matches!(
            section_matrix(&s.m),
            Err(Error::KernelDimMismatch {
                got: 3,
                expected: 6
            })
        ));
    }

    #[test]
    fn linforms_roundtrip() {
        let f = fp();
        let mut rng = seeded(3);
        let forms = [0; 4].map(|_| DenseMatrix::random(2, 3, f, &mut rng));
        let n = SectionMatrix { forms };
        assert_eq!(
            SectionMatrix::parse_interchange(&n.to_interchange()).unwrap(),
            n
        );
        assert!(n.to_interchange().starts_with("linforms 2 3 32003\n"));
    }
}
