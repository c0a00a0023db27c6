//! Steiner presentations `m : B → A ⊗ V`, their multiplication maps
//! `m(d) : B ⊗ S^d V → A ⊗ S^{d+1} V`, and cohomology tables of the kernel
//! bundle `E_m` computed from `0 → E_m → B ⊗ O → A ⊗ O(1) → 0`.

use std::io::BufRead;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{DenseMatrix, FieldElem, Lines, PrimeField};
use crate::multilin::{binom, mult_index, sym_dim, HyperplaneFrame, MonoBasis, NVARS};

pub const DEFAULT_DMAX: usize = 5;

/// Four `a × b` coefficient matrices: `m(e_i) = Σ_j Σ_k M_k[j,i] α_j ⊗ x_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerPresentation {
    a: usize,
    b: usize,
    coeffs: [DenseMatrix; NVARS],
}

impl SteinerPresentation {
    pub fn new(coeffs: [DenseMatrix; NVARS]) -> Result<Self> {
        let (a, b) = (coeffs[0].rows(), coeffs[0].cols());
        if a == 0 || b == 0 {
            return Err(Error::Shape("a and b must be positive".into()));
        }
        let field = coeffs[0].field();
        if coeffs
            .iter()
            .any(|m| m.rows() != a || m.cols() != b || m.field() != field)
        {
            return Err(Error::Shape(
                "coefficient matrices must share shape and field".into(),
            ));
        }
        Ok(Self { a, b, coeffs })
    }

    pub fn zero(a: usize, b: usize, field: PrimeField) -> Self {
        Self::new([(); NVARS].map(|_| DenseMatrix::zeros(a, b, field))).expect("positive dims")
    }

    pub fn random<R: Rng + ?Sized>(a: usize, b: usize, field: PrimeField, rng: &mut R) -> Self {
        Self::new([(); NVARS].map(|_| DenseMatrix::random(a, b, field, rng)))
            .expect("positive dims")
    }

    /// Inverse of [`stacked`](Self::stacked): row `4j + k` of `stack` is the
    /// coefficient of `α_j ⊗ x_k`.
    pub fn from_stacked(a: usize, stack: &DenseMatrix) -> Result<Self> {
        if stack.rows() != NVARS * a {
            return Err(Error::Shape(format!(
                "stacked matrix needs {} rows",
                NVARS * a
            )));
        }
        let b = stack.cols();
        let field = stack.field();
        Self::new(
            [0, 1, 2, 3]
                .map(|k| DenseMatrix::from_fn(a, b, field, |j, i| stack.get(NVARS * j + k, i))),
        )
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn field(&self) -> PrimeField {
        self.coeffs[0].field()
    }

    pub fn coeffs(&self) -> &[DenseMatrix; NVARS] {
        &self.coeffs
    }

    /// The `4a × b` matrix of `m : B → A ⊗ V`, equal to `m(0)`.
    pub fn stacked(&self) -> DenseMatrix {
        self.assemble_md(0)
    }

    /// Matrix of linear forms evaluated at a point: `Σ_k M_k x_k`.
    pub fn evaluate(&self, point: &[FieldElem; NVARS]) -> DenseMatrix {
        let mut out = DenseMatrix::zeros(self.a, self.b, self.field());
        for (m, &x) in self.coeffs.iter().zip(point) {
            out = out.add(&m.scale(x)).expect("same shape");
        }
        out
    }

    /// Same map written in the coordinates of `frame`, where `H = {x4 = 0}`.
    pub fn in_frame(&self, frame: &HyperplaneFrame) -> Self {
        let q = frame.from_standard();
        let field = self.field();
        let coeffs = [0, 1, 2, 3].map(|l| {
            let mut acc = DenseMatrix::zeros(self.a, self.b, field);
            for k in 0..NVARS {
                acc = acc
                    .add(&self.coeffs[k].scale(q.get(l, k)))
                    .expect("same shape");
            }
            acc
        });
        Self {
            a: self.a,
            b: self.b,
            coeffs,
        }
    }

    /// Dual presentation `A^∨ → B^∨ ⊗ V` with matrices `M_kᵀ`.
    pub fn transposed(&self) -> Self {
        Self {
            a: self.b,
            b: self.a,
            coeffs: self.coeffs.clone().map(|m| m.transpose()),
        }
    }

    /// `m(d)`: column `(i, μ)` maps to `Σ_k Σ_j M_k[j,i] α_j ⊗ μ x_k`.
    pub fn assemble_md(&self, d: usize) -> DenseMatrix {
        let src = MonoBasis::new(d);
        let (ns, nt) = (src.len(), sym_dim(d + 1));
        let field = self.field();
        let targets: Vec<[usize; NVARS]> = src
            .monomials()
            .iter()
            .map(|mu| [0, 1, 2, 3].map(|k| mult_index(mu, k)))
            .collect();
        let mut out = DenseMatrix::zeros(self.a * nt, self.b * ns, field);
        for i in 0..self.b {
            for (mi, tk) in targets.iter().enumerate() {
                let col = i * ns + mi;
                for (k, &t) in tk.iter().enumerate() {
                    for j in 0..self.a {
                        let c = self.coeffs[k].get(j, i);
                        if c != 0 {
                            out.add_at(j * nt + t, col, c);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn corank_md(&self, d: usize) -> usize {
        let md = self.assemble_md(d);
        let r = md.rank();
        (md.cols() - r).min(md.rows() - r)
    }

    pub fn md_surjective(&self, d: usize) -> bool {
        self.assemble_md(d).cokernel_dim() == 0
    }

    /// Smallest `d` in `1..=d_max` with `m(d)` surjective. Surjectivity
    /// propagates upward since `Im m(d+1) ⊇ Im m(d) · V`.
    pub fn surjectivity_certificate(&self, d_max: usize) -> SurjectivityCertificate {
        let d0 = (1..=d_max.max(1)).find(|&d| self.md_surjective(d));
        SurjectivityCertificate { d0, d_max }
    }

    pub fn cohomology_table(
        &self,
        k_min: i64,
        k_max: i64,
        d_max: usize,
    ) -> Result<CohomologyTable> {
        let cert = self.surjectivity_certificate(d_max);
        let Some(d0) = cert.d0 else {
            return Err(Error::NotLocallyFree(d_max));
        };
        let (a, b) = (self.a, self.b);
        let rows = (k_min..=k_max)
            .map(|k| {
                let chi = euler_char(a, b, k);
                let (h0, h1) = if k >= d0 as i64 {
                    let k = k as usize;
                    let cols = b * sym_dim(k);
                    let rows = a * sym_dim(k + 1);
                    (cols - rows, 0)
                } else if k >= 0 {
                    let md = self.assemble_md(k as usize);
                    let r = md.rank();
                    (md.cols() - r, md.rows() - r)
                } else if k >= -4 {
                    (0, a * binom((k + 4) as usize, 3))
                } else {
                    (0, 0)
                };
                let h3 = h0 as i64 - h1 as i64 - chi;
                debug_assert!(h3 >= 0, "negative h3 at k = {k}");
                CohomologyRow {
                    k,
                    h: [h0, h1, 0, h3 as usize],
                    chi,
                }
            })
            .collect();
        Ok(CohomologyTable { a, b, d0, rows })
    }

    /// `h⁰(E_m^∨(j))` from `0 → A^∨ ⊗ O(-1) → B^∨ ⊗ O → E_m^∨ → 0`, using the
    /// transposed presentation.
    pub fn dual_h0(&self, j: usize) -> usize {
        let base = self.b * sym_dim(j);
        if j == 0 {
            return base;
        }
        let t = self.transposed().assemble_md(j - 1);
        base - self.a * sym_dim(j - 1) + t.kernel_dim()
    }

    /// `steiner a b p`, then the four coefficient matrices.
    pub fn to_interchange(&self) -> String {
        let mut s = format!("steiner {} {} {}\n", self.a, self.b, self.field().modulus());
        for m in &self.coeffs {
            m.write_interchange(&mut s);
        }
        s
    }

    pub fn parse_interchange(text: &str) -> Result<Self> {
        Self::read_interchange(&mut Lines::new(text.as_bytes()))
    }

    pub fn read_interchange<R: BufRead>(lines: &mut Lines<R>) -> Result<Self> {
        let h = lines.expect_header("steiner", 3)?;
        let coeffs = [
            DenseMatrix::read_interchange(lines)?,
            DenseMatrix::read_interchange(lines)?,
            DenseMatrix::read_interchange(lines)?,
            DenseMatrix::read_interchange(lines)?,
        ];
        let m = Self::new(coeffs)?;
        if (m.a as u64, m.b as u64, m.field().modulus() as u64) != (h[0], h[1], h[2]) {
            return Err(lines.error("header does not match the matrices"));
        }
        Ok(m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurjectivityCertificate {
    /// `None` means no surjective `m(d)` up to `d_max`.
    pub d0: Option<usize>,
    pub d_max: usize,
}

/// `χ₃(t) = (t+1)(t+2)(t+3)/6 = χ(O_{P³}(t))`.
pub fn chi3(t: i64) -> i64 {
    (t + 1) * (t + 2) * (t + 3) / 6
}

/// `χ(E(k)) = b χ₃(k) − a χ₃(k+1)`.
pub fn euler_char(a: usize, b: usize, k: i64) -> i64 {
    b as i64 * chi3(k) - a as i64 * chi3(k + 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyRow {
    pub k: i64,
    /// `(h⁰, h¹, h², h³)` of `E(k)`.
    pub h: [usize; 4],
    pub chi: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    pub a: usize,
    pub b: usize,
    /// Degree of the surjectivity certificate the table relies on.
    pub d0: usize,
    pub rows: Vec<CohomologyRow>,
}

impl CohomologyTable {
    pub fn row(&self, k: i64) -> Option<&CohomologyRow> {
        self.rows.iter().find(|r| r.k == k)
    }

    pub fn render(&self) -> String {
        let mut s = format!(
            "{:>4} {:>8} {:>8} {:>8} {:>8} {:>8}\n",
            "k", "h0", "h1", "h2", "h3", "chi"
        );
        for r in &self.rows {
            s += &format!(
                "{:>4} {:>8} {:>8} {:>8} {:>8} {:>8}\n",
                r.k, r.h[0], r.h[1], r.h[2], r.h[3], r.chi
            );
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::seeded;

    fn fp() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn m0_stacks_coefficients() {
        let mut rng = seeded(11);
        let m = SteinerPresentation::random(2, 3, fp(), &mut rng);
        let m0 = m.assemble_md(0);
        assert_eq!((m0.rows(), m0.cols()), (8, 3));
        for j in 0..2 {
            for k in 0..4 {
                for i in 0..3 {
                    assert_eq!(m0.get(4 * j + k, i), m.coeffs()[k].get(j, i));
                }
            }
        }
        assert_eq!(SteinerPresentation::from_stacked(2, &m0).unwrap(), m);
    }

    #[test]
    fn md_shapes() {
        let mut rng = seeded(12);
        let m = SteinerPresentation::random(3, 5, fp(), &mut rng);
        for d in 0..4 {
            let md = m.assemble_md(d);
            assert_eq!(md.rows(), 3 * binom(d + 4, 3));
            assert_eq!(md.cols(), 5 * binom(d + 3, 3));
        }
    }

    #[test]
    fn generic_one_by_four() {
        let mut rng = seeded(13);
        let m = SteinerPresentation::random(1, 4, fp(), &mut rng);
        let m1 = m.assemble_md(1);
        assert_eq!((m1.rows(), m1.cols()), (10, 16));
        assert_eq!(m1.rank(), 10);
        assert_eq!(m.corank_md(1), 0);
        assert_eq!(m.surjectivity_certificate(5).d0, Some(1));
        let t = m.cohomology_table(-6, 4, DEFAULT_DMAX).unwrap();
        assert_eq!(t.row(1).unwrap().h, [6, 0, 0, 0]);
        assert_eq!(m.dual_h0(1), 15);
        assert_eq!(m.dual_h0(0), 4);
    }

    #[test]
    fn single_column_image() {
        let f = fp();
        let mut coeffs = [(); 4].map(|_| DenseMatrix::zeros(2, 3, f));
        coeffs[0].set(0, 0, 1);
        let m = SteinerPresentation::new(coeffs).unwrap();
        let m1 = m.assemble_md(1);
        assert_eq!(m1.rank(), 4);
        // the image is α₁ ⊗ x₁·V: the four monomials x1*x_q in the α₁ block
        for q in 0..4 {
            let col = m1.column(q);
            let row = crate::multilin::quad_index(0, q);
            assert_eq!(col[row], 1);
            assert_eq!(col.iter().filter(|&&x| x != 0).count(), 1);
        }
    }

    #[test]
    fn zero_presentation() {
        let m = SteinerPresentation::zero(3, 5, fp());
        assert_eq!(m.corank_md(0), 5);
        assert_eq!(m.surjectivity_certificate(5).d0, None);
        assert!(matches!(
            m.cohomology_table(-2, 2, 5),
            Err(Error::NotLocallyFree(5))
        ));
    }

    #[test]
    fn euler_char_examples() {
        assert_eq!(euler_char(3, 8, 1), 2);
        assert_eq!(euler_char(10, 30, 0), -10);
        for (a, b) in [(1, 4), (3, 8), (7, 20)] {
            assert_eq!(euler_char(a, b, -1), -(a as i64));
        }
    }

    #[test]
    fn transposed_twice_is_identity() {
        let mut rng = seeded(14);
        let m = SteinerPresentation::random(2, 5, fp(), &mut rng);
        assert_eq!(m.transposed().transposed(), m);
        assert_eq!(m.transposed().a(), 5);
    }

    #[test]
    fn frame_change_preserves_stacked_rank_and_evaluation() {
        let f = fp();
        let mut rng = seeded(15);
        let m = SteinerPresentation::random(2, 3, f, &mut rng);
        let frame = HyperplaneFrame::random(f, &mut rng);
        let mf = m.in_frame(&frame);
        // x_k = Σ_l Q[l,k] y_l, so M' at y-values v equals M at x_k = Σ_l Q[l,k] v_l
        let v = [1, 2, 3, 4];
        let lhs = mf.evaluate(&[1, 2, 3, 4]);
        let mut rhs = DenseMatrix::zeros(2, 3, f);
        let q = frame.from_standard();
        for k in 0..4 {
            let xk_at_v = (0..4).fold(0, |acc, l| f.add(acc, f.mul(q.get(l, k), v[l])));
            rhs = rhs.add(&m.coeffs()[k].scale(xk_at_v)).unwrap();
        }
        assert_eq!(lhs, rhs);
        assert_eq!(mf.stacked().rank(), m.stacked().rank());
    }

    #[test]
    fn interchange_round_trip() {
        let mut rng = seeded(16);
        let m = SteinerPresentation::random(2, 3, fp(), &mut rng);
        let text = m.to_interchange();
        assert!(text.starts_with("steiner 2 3 32003\n2 3 32003\n"));
        assert_eq!(SteinerPresentation::parse_interchange(&text).unwrap(), m);
        assert!(SteinerPresentation::parse_interchange(&text.replacen(
            "steiner 2 3",
            "steiner 3 3",
            1
        ))
        .is_err());
    }
}
